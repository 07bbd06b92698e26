//! Crossingless matchings: the diagram basis of the Temperley-Lieb algebra.
//!
//! A width-`m` diagram has `m` bottom points `0..m-1` and `m` top points
//! `m..2m-1`, both read left to right. Composition stacks the first factor
//! above the second and counts the closed loops that form; the trace closes
//! top `m+j` to bottom `j` around the side.

use alloc::vec::Vec;
use core::fmt;

use crate::{BoundError, Bounds};

/// Hard cap on diagram width (strand count per boundary edge).
pub const MAX_WIDTH: u8 = 16;

/// A planar perfect matching of the `2m` boundary points of a width-`m`
/// rectangle. `pair[p]` is the partner of point `p`; unused slots stay zero so
/// equality and ordering are structural.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    width: u8,
    pair: [u8; 2 * MAX_WIDTH as usize],
}

impl Matching {
    /// Builds a matching from partner pairs. Panics on anything that is not a
    /// planar perfect matching of the `2 * width` points — malformed diagrams
    /// are programmer errors, never data.
    pub fn from_pairs(width: u8, pairs: &[(u8, u8)]) -> Matching {
        assert!(width >= 1 && width <= MAX_WIDTH, "width {width} out of range");
        let n = 2 * width as usize;
        assert_eq!(pairs.len(), width as usize, "need exactly {width} pairs");
        let mut pair = [0u8; 2 * MAX_WIDTH as usize];
        let mut seen = [false; 2 * MAX_WIDTH as usize];
        for &(a, b) in pairs {
            assert!((a as usize) < n && (b as usize) < n && a != b, "bad pair ({a},{b})");
            assert!(!seen[a as usize] && !seen[b as usize], "point used twice");
            seen[a as usize] = true;
            seen[b as usize] = true;
            pair[a as usize] = b;
            pair[b as usize] = a;
        }
        let m = Matching { width, pair };
        debug_assert!(m.is_planar(), "non-planar matching {m}");
        m
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn partner(&self, p: u8) -> u8 {
        debug_assert!((p as usize) < 2 * self.width as usize);
        self.pair[p as usize]
    }

    /// The pairs with smaller point first, in ascending order of that point.
    pub fn pairs(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        let n = 2 * self.width as usize;
        (0..n as u8).filter_map(move |p| {
            let q = self.pair[p as usize];
            (p < q).then_some((p, q))
        })
    }

    /// Position of a point in the circular boundary order (bottom left-to-right,
    /// then top right-to-left); chords are planar iff they are noncrossing in
    /// this order.
    fn circle_pos(&self, p: u8) -> u8 {
        let m = self.width;
        if p < m {
            p
        } else {
            2 * m - 1 - (p - m)
        }
    }

    pub fn is_planar(&self) -> bool {
        let n = 2 * self.width as usize;
        // points indexed by circle position
        let mut at = [0u8; 2 * MAX_WIDTH as usize];
        for p in 0..n as u8 {
            at[self.circle_pos(p) as usize] = p;
        }
        let mut stack: Vec<u8> = Vec::with_capacity(self.width as usize);
        for cp in 0..n as u8 {
            let p = at[cp as usize];
            let q = self.pair[p as usize];
            if self.circle_pos(q) > cp {
                stack.push(p);
            } else if stack.pop() != Some(q) {
                return false;
            }
        }
        stack.is_empty()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for p in 0..2 * self.width as usize {
            if p > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.pair[p])?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All strands vertical: the unit of the width-`m` algebra.
pub fn identity(m: u8) -> Matching {
    let pairs: Vec<(u8, u8)> = (0..m).map(|j| (j, m + j)).collect();
    Matching::from_pairs(m, &pairs)
}

/// The hook generator `e_i` (1-based `i`): a cap joining bottom `i-1, i`, a cup
/// joining the same top points, all other strands vertical.
pub fn cup_cap(m: u8, i: u8) -> Matching {
    assert!(i >= 1 && i < m, "cup_cap index {i} out of range for width {m}");
    let mut pairs: Vec<(u8, u8)> = alloc::vec![(i - 1, i), (m + i - 1, m + i)];
    for j in 0..m {
        if j != i - 1 && j != i {
            pairs.push((j, m + j));
        }
    }
    Matching::from_pairs(m, &pairs)
}

/// Stacks `a` above `b`, gluing `a`'s bottom to `b`'s top. Returns the boundary
/// matching and the number of closed loops removed.
pub fn compose(a: &Matching, b: &Matching) -> (Matching, u32) {
    assert_eq!(a.width, b.width, "compose width mismatch");
    let m = a.width;
    let mut visited = [false; MAX_WIDTH as usize];
    let mut pairs: Vec<(u8, u8)> = Vec::with_capacity(m as usize);
    let mut done = [false; 2 * MAX_WIDTH as usize];
    for start in 0..2 * m {
        if done[start as usize] {
            continue;
        }
        let end = traverse(a, b, start, &mut visited);
        done[start as usize] = true;
        done[end as usize] = true;
        pairs.push((start.min(end), start.max(end)));
    }
    let mut loops = 0;
    for t in 0..m {
        if visited[t as usize] {
            continue;
        }
        // interface cycle: alternately through a (bottom-to-bottom) and b
        // (top-to-top) arcs
        let mut cur = t;
        loop {
            visited[cur as usize] = true;
            let up = a.pair[cur as usize];
            debug_assert!(up < m, "boundary strand in an unvisited cycle");
            visited[up as usize] = true;
            let down = b.pair[(m + up) as usize];
            debug_assert!(down >= m);
            cur = down - m;
            if cur == t {
                break;
            }
        }
        loops += 1;
    }
    (Matching::from_pairs(m, &pairs), loops)
}

/// Follows the strand entering at boundary point `start` of the two-layer
/// diagram `a` over `b`, marking every interface strand it uses.
fn traverse(a: &Matching, b: &Matching, start: u8, visited: &mut [bool; MAX_WIDTH as usize]) -> u8 {
    let m = a.width;
    let mut in_b = start < m;
    let mut pt = start;
    loop {
        let q = if in_b { b.pair[pt as usize] } else { a.pair[pt as usize] };
        if in_b {
            if q < m {
                return q;
            }
            visited[(q - m) as usize] = true;
            in_b = false;
            pt = q - m;
        } else {
            if q >= m {
                return q;
            }
            visited[q as usize] = true;
            in_b = true;
            pt = m + q;
        }
    }
}

/// Side-by-side juxtaposition: `a` on the left, `b` on the right.
pub fn tensor(a: &Matching, b: &Matching) -> Matching {
    let (ma, mb) = (a.width, b.width);
    let m = ma + mb;
    assert!(m <= MAX_WIDTH, "tensor width {m} exceeds MAX_WIDTH");
    let map_a = |p: u8| if p < ma { p } else { m + (p - ma) };
    let map_b = |p: u8| if p < mb { ma + p } else { m + ma + (p - mb) };
    let mut pairs: Vec<(u8, u8)> = a.pairs().map(|(p, q)| (map_a(p), map_a(q))).collect();
    pairs.extend(b.pairs().map(|(p, q)| (map_b(p), map_b(q))));
    Matching::from_pairs(m, &pairs)
}

/// Number of closed loops after joining top `m+j` to bottom `j` for every `j`.
pub fn trace_close(a: &Matching) -> u32 {
    let m = a.width;
    let n = 2 * m;
    let mut seen = [false; 2 * MAX_WIDTH as usize];
    let mut loops = 0;
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut p = start;
        loop {
            seen[p as usize] = true;
            let q = a.pair[p as usize];
            seen[q as usize] = true;
            // closure identification: bottom j <-> top m+j
            p = if q < m { q + m } else { q - m };
            if p == start {
                break;
            }
        }
        loops += 1;
    }
    loops
}

/// Every width-`m` diagram, in ascending `Matching` order; Catalan(m) of them.
pub fn enumerate_basis(m: u8, bounds: &Bounds) -> Result<Vec<Matching>, BoundError> {
    if m > bounds.max_enum_width {
        return Err(BoundError {
            what: "basis enumeration width",
            requested: m as usize,
            limit: bounds.max_enum_width as usize,
        });
    }
    assert!(m >= 1);
    // noncrossing chord sets over a contiguous run of circle positions
    fn chord_sets(lo: u8, hi: u8) -> Vec<Vec<(u8, u8)>> {
        if lo >= hi {
            return alloc::vec![Vec::new()];
        }
        let mut all = Vec::new();
        // lo pairs with an odd offset so both remaining runs have even length
        let mut k = lo + 1;
        while k <= hi {
            for left in chord_sets(lo + 1, k - 1) {
                for right in chord_sets(k + 1, hi) {
                    let mut set = alloc::vec![(lo, k)];
                    set.extend_from_slice(&left);
                    set.extend_from_slice(&right);
                    all.push(set);
                }
            }
            k += 2;
        }
        all
    }
    let label = |cp: u8| if cp < m { cp } else { m + (2 * m - 1 - cp) };
    let mut out: Vec<Matching> = chord_sets(0, 2 * m - 1)
        .into_iter()
        .map(|set| {
            let pairs: Vec<(u8, u8)> = set.iter().map(|&(x, y)| (label(x), label(y))).collect();
            Matching::from_pairs(m, &pairs)
        })
        .collect();
    out.sort();
    out.dedup();
    assert_eq!(out.len(), catalan(m as u64) as usize);
    Ok(out)
}

/// Catalan number, plenty of headroom at the widths this crate allows.
fn catalan(m: u64) -> u64 {
    let mut c: u64 = 1;
    for j in 0..m {
        c = c * 2 * (2 * j + 1) / (j + 2);
    }
    c
}
