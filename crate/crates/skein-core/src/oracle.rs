//! An independent evaluator for classical (vertex-free) words, used to
//! cross-check the projector pipeline. It never builds a projector: the
//! colored value is assembled from plain multi-strand closures through the
//! Chebyshev cabling expansion, and each plain closure is a brute-force state
//! sum over crossing smoothings with union-find loop counting.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::algebra::{loop_value, LaurentPoly};
use crate::singular::{LetterKind, SingularBraidWord};

/// Largest elementary-crossing count the state sum will attempt; the cost is
/// `2^crossings`.
pub const ORACLE_MAX_CROSSINGS: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The state sum has no rule for singular vertices.
    SingularWord,
    /// The closure has several components; cabling them uniformly would not
    /// compute the invariant, which colors each component separately.
    MultiComponent { components: usize },
    /// Cabling the word produced more crossings than the state sum can visit.
    TooManyCrossings { requested: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::SingularWord => f.write_str("oracle only evaluates vertex-free words"),
            OracleError::MultiComponent { components } => {
                write!(f, "oracle needs a knot closure, this word closes to {components} components")
            }
            OracleError::TooManyCrossings { requested, limit } => {
                write!(f, "cabled word has {requested} crossings, state-sum limit is {limit}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub color: u8,
    pub blackboard: LaurentPoly,
    pub writhe: i64,
}

impl OracleResult {
    /// The blackboard value with the curl factor
    /// `A^((color^2 + 2 color) * writhe)` removed.
    pub fn zero_framed(&self) -> LaurentPoly {
        let c = self.color as i64;
        self.blackboard.shifted(-(c * c + 2 * c) * self.writhe)
    }
}

/// Coefficient vector of the `m`-th Chebyshev-like cabling polynomial:
/// `p_0 = 1`, `p_1 = x`, `p_m = x p_{m-1} - p_{m-2}`; entry `j` multiplies the
/// plain `j`-strand cable.
pub fn chebyshev_coefficients(m: u8) -> Vec<i64> {
    let mut prev: Vec<i64> = alloc::vec![1];
    if m == 0 {
        return prev;
    }
    let mut cur: Vec<i64> = alloc::vec![0, 1];
    for _ in 1..m {
        let mut next: Vec<i64> = alloc::vec![0];
        next.extend_from_slice(&cur);
        for (j, c) in prev.iter().enumerate() {
            next[j] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new() -> Dsu {
        Dsu { parent: Vec::new() }
    }

    fn reset(&mut self, n: usize) {
        self.parent.clear();
        self.parent.extend(0..n as u32);
    }

    fn make(&mut self) -> u32 {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        id
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, x: u32, y: u32) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx as usize] = ry;
        }
    }
}

/// The state sum for the closure of the `cables`-fold parallel of `word`,
/// with no projectors: `d^loops` summed over all smoothings, weighted by the
/// crossing letters. `cables = 0` gives the empty diagram's value 1.
fn plain_cabled_closure(word: &SingularBraidWord, cables: u8) -> Result<LaurentPoly, OracleError> {
    if cables == 0 {
        return Ok(LaurentPoly::one());
    }
    let lanes = word.strands() as usize * cables as usize;
    // each letter becomes a cables x cables block of elementary crossings
    let mut crossings: Vec<(usize, bool)> = Vec::new(); // (left lane, positive)
    for &(kind, i) in word.letters() {
        let positive = match kind {
            LetterKind::Pos => true,
            LetterKind::Neg => false,
            LetterKind::Sing => return Err(OracleError::SingularWord),
        };
        let base = (i as usize - 1) * cables as usize;
        for l in (1..=cables as usize).rev() {
            for r in 0..cables as usize {
                // 1-based slot l+r within the block crosses lanes slot-1, slot
                crossings.push((base + l + r - 1, positive));
            }
        }
    }
    let count = crossings.len();
    if count > ORACLE_MAX_CROSSINGS {
        return Err(OracleError::TooManyCrossings { requested: count, limit: ORACLE_MAX_CROSSINGS });
    }
    // tally states by (A exponent, loop count)
    let mut tally: BTreeMap<(i64, u32), BigInt> = BTreeMap::new();
    let mut dsu = Dsu::new();
    let mut wire: Vec<u32> = Vec::with_capacity(lanes);
    for state in 0u64..(1u64 << count) {
        dsu.reset(lanes);
        wire.clear();
        wire.extend(0..lanes as u32);
        let mut exp: i64 = 0;
        for (c, &(lane, positive)) in crossings.iter().enumerate() {
            let use_hook = state >> c & 1 == 1;
            exp += if use_hook { -1 } else { 1 } * if positive { 1 } else { -1 };
            if use_hook {
                // cap joins the incoming wires, cup starts a fresh one
                let joined = wire[lane];
                dsu.union(joined, wire[lane + 1]);
                let fresh = dsu.make();
                wire[lane] = fresh;
                wire[lane + 1] = fresh;
            }
            // the identity smoothing leaves both lanes unchanged
        }
        for (lane, &w) in wire.iter().enumerate() {
            dsu.union(w, lane as u32);
        }
        let total_wires = dsu.parent.len();
        let mut loops = 0u32;
        for x in 0..total_wires as u32 {
            if dsu.find(x) == x {
                loops += 1;
            }
        }
        *tally.entry((exp, loops)).or_default() += 1;
    }
    let d = loop_value();
    let mut dpow: Vec<LaurentPoly> = alloc::vec![LaurentPoly::one()];
    let mut total = LaurentPoly::zero();
    for ((exp, loops), count) in tally {
        while dpow.len() <= loops as usize {
            let next = dpow.last().unwrap() * &d;
            dpow.push(next);
        }
        let term = dpow[loops as usize].scaled(&count).shifted(exp);
        total = &total + &term;
    }
    Ok(total)
}

/// Number of components of the word's closure: cycles of its strand
/// permutation (every letter, singular or not, transposes its two strands).
pub fn closure_components(word: &SingularBraidWord) -> usize {
    let k = word.strands() as usize;
    let mut who: Vec<usize> = (0..k).collect();
    for &(_, i) in word.letters() {
        who.swap(i as usize - 1, i as usize);
    }
    let mut seen = alloc::vec![false; k];
    let mut cycles = 0;
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = who[x];
        }
        cycles += 1;
    }
    cycles
}

/// Evaluates the colored closure of a vertex-free knot word without
/// projectors: the Chebyshev combination of plain cabled closures. Closures
/// with several components are rejected, since their invariant colors each
/// component by its own expansion.
pub fn oracle_evaluate(word: &SingularBraidWord, color: u8) -> Result<OracleResult, OracleError> {
    assert!(color >= 1, "color must be positive");
    if word.letters().iter().any(|&(k, _)| k == LetterKind::Sing) {
        return Err(OracleError::SingularWord);
    }
    let components = closure_components(word);
    if components != 1 {
        return Err(OracleError::MultiComponent { components });
    }
    let mut value = LaurentPoly::zero();
    for (j, &c) in chebyshev_coefficients(color).iter().enumerate() {
        if c == 0 {
            continue;
        }
        let cable = plain_cabled_closure(word, j as u8)?;
        value = &value + &cable.scaled(&BigInt::from(c));
    }
    Ok(OracleResult { color, blackboard: value, writhe: word.writhe() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::delta;
    use crate::singular::parse_word;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, c.into())))
    }

    #[test]
    fn chebyshev_vectors() {
        assert_eq!(chebyshev_coefficients(0), [1]);
        assert_eq!(chebyshev_coefficients(1), [0, 1]);
        assert_eq!(chebyshev_coefficients(2), [-1, 0, 1]);
        assert_eq!(chebyshev_coefficients(3), [0, -2, 0, 1]);
        assert_eq!(chebyshev_coefficients(4), [1, 0, -3, 0, 1]);
    }

    #[test]
    fn unknot_values_match_loop_evaluations() {
        let w = parse_word("strands=1").unwrap();
        for color in 1..=4u8 {
            let r = oracle_evaluate(&w, color).unwrap();
            assert_eq!(r.blackboard, delta(color as u32), "color {color}");
            assert_eq!(r.writhe, 0);
        }
    }

    #[test]
    fn single_curl_color_one() {
        let w = parse_word("strands=2 s1").unwrap();
        let r = oracle_evaluate(&w, 1).unwrap();
        // -A^3 d
        assert_eq!(r.blackboard, lp(&[(5, 1), (1, 1)]));
        assert_eq!(r.zero_framed(), lp(&[(2, 1), (-2, 1)]));
    }

    #[test]
    fn single_curl_color_two() {
        let w = parse_word("strands=2 s1").unwrap();
        let r = oracle_evaluate(&w, 2).unwrap();
        assert_eq!(r.blackboard, lp(&[(12, 1), (8, 1), (4, 1)]));
        assert_eq!(r.zero_framed(), delta(2));
    }

    #[test]
    fn rejects_unlink_closures() {
        // s1 S1 closes to a two-component unlink
        let w = parse_word("strands=2 s1 S1").unwrap();
        assert_eq!(oracle_evaluate(&w, 2), Err(OracleError::MultiComponent { components: 2 }));
        assert_eq!(closure_components(&w), 2);
    }

    #[test]
    fn second_kind_move_invisible() {
        let once = parse_word("strands=2 s1").unwrap();
        let padded = parse_word("strands=2 s1 s1 S1").unwrap();
        assert_eq!(
            oracle_evaluate(&once, 2).unwrap().blackboard,
            oracle_evaluate(&padded, 2).unwrap().blackboard
        );
    }

    #[test]
    fn trefoil_color_two_frozen() {
        let w = parse_word("strands=2 s1 s1 s1").unwrap();
        let r = oracle_evaluate(&w, 2).unwrap();
        let blackboard = lp(&[
            (20, 1),
            (16, 1),
            (12, 1),
            (8, 1),
            (4, 1),
            (-8, -1),
            (-12, -1),
            (-16, -1),
            (-24, 1),
        ]);
        assert_eq!(r.blackboard, blackboard);
        assert_eq!(r.writhe, 3);
        let zero_framed = lp(&[
            (-4, 1),
            (-8, 1),
            (-12, 1),
            (-16, 1),
            (-20, 1),
            (-32, -1),
            (-36, -1),
            (-40, -1),
            (-48, 1),
        ]);
        assert_eq!(r.zero_framed(), zero_framed);
    }

    #[test]
    fn figure_eight_color_two_frozen() {
        let w = parse_word("strands=3 s1 S2 s1 S2").unwrap();
        let r = oracle_evaluate(&w, 2).unwrap();
        let expected = lp(&[(28, 1), (20, -1), (4, 1), (0, 1), (-4, 1), (-20, -1), (-28, 1)]);
        assert_eq!(r.blackboard, expected);
        assert_eq!(r.zero_framed(), expected);
    }

    #[test]
    fn rejects_singular_words() {
        let w = parse_word("strands=2 t1 s1").unwrap();
        assert_eq!(oracle_evaluate(&w, 2), Err(OracleError::SingularWord));
    }

    #[test]
    fn rejects_oversized_state_space() {
        let w = parse_word("strands=2 s1 s1 s1 s1 s1 s1 s1").unwrap();
        let err = oracle_evaluate(&w, 2).unwrap_err();
        assert_eq!(err, OracleError::TooManyCrossings { requested: 28, limit: ORACLE_MAX_CROSSINGS });
    }
}
