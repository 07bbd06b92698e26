//! Singular braid words and their image in the Temperley-Lieb algebra.
//!
//! A word on `k` strands is a sequence of letters `s<i>` (positive crossing),
//! `S<i>` (negative crossing), `t<i>` (singular vertex), `1 <= i < k`. Under
//! cabling with an even color `c`, each strand becomes a `c`-strand bundle
//! carrying a Jones-Wenzl projector, crossings become projector-flanked cabled
//! crossing boxes, and the vertex becomes the four-leg element in which half
//! of each bundle runs through and half turns back.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{coeff_c, LaurentPoly, RationalFn};
use crate::diagram::Matching;
use crate::element::{el_add, el_mul, el_scale, el_tensor, embed, TLElement};
use crate::{element, BoundError, Bounds};

/// Sign of a crossing letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One letter kind of the singular braid alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LetterKind {
    /// `s<i>`: strand `i` crosses over strand `i+1`.
    Pos,
    /// `S<i>`: strand `i` crosses under strand `i+1`.
    Neg,
    /// `t<i>`: strands `i` and `i+1` meet in a rigid singular vertex.
    Sing,
}

/// A braid word with singular vertices; letters act bottom-to-top in word
/// order. The empty word on `k` strands is the trivial braid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularBraidWord {
    strands: u8,
    letters: Vec<(LetterKind, u8)>,
}

impl SingularBraidWord {
    /// Builds a word, panicking on out-of-range letter indices; use
    /// [`parse_word`] for checked construction from text.
    pub fn new(strands: u8, letters: Vec<(LetterKind, u8)>) -> SingularBraidWord {
        assert!(strands >= 1, "a braid needs at least one strand");
        for &(_, i) in &letters {
            assert!(i >= 1 && i < strands, "letter index {i} out of range for {strands} strands");
        }
        SingularBraidWord { strands, letters }
    }

    pub fn strands(&self) -> u8 {
        self.strands
    }

    pub fn letters(&self) -> &[(LetterKind, u8)] {
        &self.letters
    }

    /// Positive crossings minus negative crossings.
    pub fn writhe(&self) -> i64 {
        self.letters
            .iter()
            .map(|&(kind, _)| match kind {
                LetterKind::Pos => 1,
                LetterKind::Neg => -1,
                LetterKind::Sing => 0,
            })
            .sum()
    }

    pub fn singular_count(&self) -> usize {
        self.letters.iter().filter(|&&(kind, _)| kind == LetterKind::Sing).count()
    }
}

impl fmt::Display for SingularBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strands={}", self.strands)?;
        for &(kind, i) in &self.letters {
            let c = match kind {
                LetterKind::Pos => 's',
                LetterKind::Neg => 'S',
                LetterKind::Sing => 't',
            };
            write!(f, " {c}{i}")?;
        }
        Ok(())
    }
}

/// Why a word failed to parse; offsets are byte positions into the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordParseError {
    /// Input does not start with a `strands=<k>` header.
    MissingHeader,
    /// The header's strand count is not an integer in `1..=16`.
    BadStrandCount { offset: usize, token: String },
    /// A letter is not of the form `s<i>`, `S<i>`, or `t<i>`.
    BadLetter { offset: usize, token: String },
    /// A letter index `i` is outside `1..strands`.
    IndexOutOfRange { offset: usize, token: String, strands: u8 },
}

impl fmt::Display for WordParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordParseError::MissingHeader => {
                f.write_str("word must start with a strands=<k> header")
            }
            WordParseError::BadStrandCount { offset, token } => {
                write!(f, "bad strand count {token:?} at byte {offset} (need an integer in 1..=16)")
            }
            WordParseError::BadLetter { offset, token } => {
                write!(f, "bad letter {token:?} at byte {offset} (expected s<i>, S<i> or t<i>)")
            }
            WordParseError::IndexOutOfRange { offset, token, strands } => {
                write!(
                    f,
                    "letter {token:?} at byte {offset} acts on strands beyond the declared {strands}"
                )
            }
        }
    }
}

impl core::error::Error for WordParseError {}

/// Parses `strands=<k>` followed by whitespace-separated letters.
pub fn parse_word(text: &str) -> Result<SingularBraidWord, WordParseError> {
    let mut tokens = tokens_with_offsets(text);
    let (header_off, header) = tokens.next().ok_or(WordParseError::MissingHeader)?;
    let count = header.strip_prefix("strands=").ok_or(WordParseError::MissingHeader)?;
    let strands: u8 = count
        .parse()
        .ok()
        .filter(|&k| (1..=crate::diagram::MAX_WIDTH).contains(&k))
        .ok_or_else(|| WordParseError::BadStrandCount {
            offset: header_off,
            token: header.to_string(),
        })?;
    let mut letters = Vec::new();
    for (offset, tok) in tokens {
        let mut chars = tok.chars();
        let kind = match chars.next() {
            Some('s') => LetterKind::Pos,
            Some('S') => LetterKind::Neg,
            Some('t') => LetterKind::Sing,
            _ => return Err(WordParseError::BadLetter { offset, token: tok.to_string() }),
        };
        let index: u8 = chars
            .as_str()
            .parse()
            .map_err(|_| WordParseError::BadLetter { offset, token: tok.to_string() })?;
        if index < 1 || index >= strands {
            return Err(WordParseError::IndexOutOfRange {
                offset,
                token: tok.to_string(),
                strands,
            });
        }
        letters.push((kind, index));
    }
    Ok(SingularBraidWord { strands, letters })
}

fn tokens_with_offsets(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace().map(move |tok| {
        // split_whitespace yields subslices, so offsets come from pointer math
        let offset = tok.as_ptr() as usize - text.as_ptr() as usize;
        (offset, tok)
    })
}

/// The width-2 crossing: `A id + A^-1 e_1` for positive, mirror for negative.
pub fn elementary_crossing(sign: Sign) -> TLElement {
    let (over, under) = match sign {
        Sign::Positive => (1, -1),
        Sign::Negative => (-1, 1),
    };
    el_add(
        &el_scale(&RationalFn::monomial(over), &TLElement::identity(2)),
        &el_scale(&RationalFn::monomial(under), &TLElement::hook(2, 1)),
    )
}

/// The crossing of two `color`-strand bundles without projectors: a
/// `color x color` grid of elementary crossings in width `2*color`.
fn plain_cable_grid(color: u8, sign: Sign) -> TLElement {
    let m = 2 * color;
    let mut acc = TLElement::identity(m);
    // rows bottom-to-top; row l carries crossings at slots l, l+1, ..., l+color-1
    for l in (1..=color).rev() {
        for r in 0..color {
            let slot = l + r; // acts on strands slot-1, slot (0-based)
            acc = el_mul(&embed(&elementary_crossing(sign), m, slot - 1), &acc);
        }
    }
    acc
}

fn projector_pair(color: u8, bounds: &Bounds) -> Result<TLElement, BoundError> {
    let f = element::jones_wenzl(color, bounds)?;
    Ok(el_tensor(&f, &f))
}

fn check_cable_width(color: u8, bounds: &Bounds) -> Result<(), BoundError> {
    if color > bounds.max_cable_color {
        return Err(BoundError {
            what: "cable color",
            requested: color as usize,
            limit: bounds.max_cable_color as usize,
        });
    }
    if 2 * color > bounds.max_total_width {
        return Err(BoundError {
            what: "total width",
            requested: 2 * color as usize,
            limit: bounds.max_total_width as usize,
        });
    }
    Ok(())
}

/// The crossing of two projector-capped `color`-strand bundles. Any positive
/// color is accepted; the invariant itself only uses even ones.
pub fn colored_crossing(color: u8, sign: Sign, bounds: &Bounds) -> Result<TLElement, BoundError> {
    check_cable_width(color, bounds)?;
    let p = projector_pair(color, bounds)?;
    Ok(el_mul(&p, &el_mul(&plain_cable_grid(color, sign), &p)))
}

/// Same as [`colored_crossing`] but restricted to the even colors the
/// invariant is defined for.
pub fn cabled_crossing(color: u8, sign: Sign, bounds: &Bounds) -> Result<TLElement, BoundError> {
    assert!(color >= 2 && color % 2 == 0, "cabling color must be even");
    colored_crossing(color, sign, bounds)
}

/// The four-leg annular basis element on `color`-strand bundles: `i` strands
/// run through on each side, the remaining `color - i` turn back top and
/// bottom, all four bundles capped by projectors.
pub fn annular_element(color: u8, i: u8, bounds: &Bounds) -> Result<TLElement, BoundError> {
    assert!(i <= color, "through-strand count {i} exceeds color {color}");
    check_cable_width(color, bounds)?;
    let m = 2 * color;
    let mut pairs: Vec<(u8, u8)> = Vec::with_capacity(m as usize);
    for j in 0..i {
        // left side bundle straight through, right side likewise
        pairs.push((j, m + j));
        pairs.push((m - 1 - j, 2 * m - 1 - j));
    }
    for j in 0..color - i {
        // turn-backs nest as rainbows
        pairs.push((i + j, m - 1 - i - j));
        pairs.push((m + i + j, 2 * m - 1 - i - j));
    }
    let core = TLElement::from_matching(Matching::from_pairs(m, &pairs));
    let p = projector_pair(color, bounds)?;
    Ok(el_mul(&p, &el_mul(&core, &p)))
}

/// The image of a singular vertex on two `color`-strand bundles: half of each
/// bundle runs through, half turns back.
pub fn singular_vertex(color: u8, bounds: &Bounds) -> Result<TLElement, BoundError> {
    assert!(color >= 2 && color % 2 == 0, "vertex color must be even");
    annular_element(color, color / 2, bounds)
}

/// The same vertex with an extra half-color projector inserted into each of
/// the four leg bundles; equality with [`singular_vertex`] shows the interior
/// projectors are absorbed by the exterior ones.
pub fn singular_vertex_with_interior(color: u8, bounds: &Bounds) -> Result<TLElement, BoundError> {
    assert!(color >= 2 && color % 2 == 0);
    check_cable_width(color, bounds)?;
    let m = 2 * color;
    let half = element::jones_wenzl(color / 2, bounds)?;
    let v = singular_vertex(color, bounds)?;
    // interior projectors sit on the through half and the turn-back half of
    // each bundle, below the bottom boundary and above the top one
    let inner = |offsets: [u8; 4]| {
        let mut acc = TLElement::identity(m);
        for off in offsets {
            acc = el_mul(&acc, &embed(&half, m, off));
        }
        acc
    };
    let below = inner([0, color / 2, color, 3 * color / 2]);
    Ok(el_mul(&below, &el_mul(&v, &below)))
}

/// The composite of a vertex and a crossing of the two full bundles, built as
/// a single flat tangle: the four legs turn inward, adjacent halves forming
/// the vertex's turn-backs while the outer halves feed a half-color crossing
/// box in the middle.
pub fn w_element(color: u8, sign: Sign, bounds: &Bounds) -> Result<TLElement, BoundError> {
    assert!(color >= 2 && color % 2 == 0, "w element needs an even color");
    check_cable_width(color, bounds)?;
    let n = color / 2;
    let m = 2 * color; // width, so points run 0..2m
    let grid = plain_cable_grid(n, sign);
    // the inner crossing box has 4n local points; bmap sends them to the outer
    // halves of the four legs
    let bmap = |l: u8| -> u8 {
        if l < n {
            l
        } else if l < 2 * n {
            3 * n + (l - n)
        } else if l < 3 * n {
            m + (l - 2 * n)
        } else {
            m + 3 * n + (l - 3 * n)
        }
    };
    let mut rewired = TLElement::zero(m);
    for (g, c) in grid.terms() {
        let mut pairs: Vec<(u8, u8)> = g.pairs().map(|(p, q)| (bmap(p), bmap(q))).collect();
        for j in 0..n {
            pairs.push((n + j, 3 * n - 1 - j));
            pairs.push((m + n + j, m + 3 * n - 1 - j));
        }
        rewired = el_add(
            &rewired,
            &el_scale(c, &TLElement::from_matching(Matching::from_pairs(m, &pairs))),
        );
    }
    let p = projector_pair(color, bounds)?;
    Ok(el_mul(&p, &el_mul(&rewired, &p)))
}

/// Memoizes the cabled image of each distinct letter of a word.
pub struct GeneratorImageCache {
    color: u8,
    strands: u8,
    images: BTreeMap<(LetterKind, u8), TLElement>,
}

impl GeneratorImageCache {
    pub fn new(strands: u8, color: u8) -> GeneratorImageCache {
        assert!(
            strands as u16 * color as u16 <= crate::diagram::MAX_WIDTH as u16,
            "cabled width exceeds MAX_WIDTH"
        );
        GeneratorImageCache { color, strands, images: BTreeMap::new() }
    }

    /// The image of one letter, embedded at its strand position in the full
    /// width `strands * color`.
    pub fn image(
        &mut self,
        kind: LetterKind,
        index: u8,
        bounds: &Bounds,
    ) -> Result<TLElement, BoundError> {
        if let Some(el) = self.images.get(&(kind, index)) {
            return Ok(el.clone());
        }
        let local = match kind {
            LetterKind::Pos => cabled_crossing(self.color, Sign::Positive, bounds)?,
            LetterKind::Neg => cabled_crossing(self.color, Sign::Negative, bounds)?,
            LetterKind::Sing => singular_vertex(self.color, bounds)?,
        };
        let total = self.strands * self.color;
        let el = embed(&local, total, (index - 1) * self.color);
        self.images.insert((kind, index), el.clone());
        Ok(el)
    }
}

/// The cabled Temperley-Lieb image of a whole word: the product of its letter
/// images over a base of one projector per strand, first letter at the bottom.
pub fn rho_hat(
    word: &SingularBraidWord,
    color: u8,
    bounds: &Bounds,
) -> Result<TLElement, BoundError> {
    assert!(color >= 2 && color % 2 == 0, "cabling color must be even");
    let total = word.strands() as usize * color as usize;
    if total > bounds.max_total_width as usize {
        return Err(BoundError {
            what: "total width",
            requested: total,
            limit: bounds.max_total_width as usize,
        });
    }
    if color > bounds.max_cable_color {
        return Err(BoundError {
            what: "cable color",
            requested: color as usize,
            limit: bounds.max_cable_color as usize,
        });
    }
    let f = element::jones_wenzl(color, bounds)?;
    let mut acc = f.clone();
    for _ in 1..word.strands() {
        acc = el_tensor(&acc, &f);
    }
    let mut cache = GeneratorImageCache::new(word.strands(), color);
    for &(kind, index) in word.letters() {
        acc = el_mul(&cache.image(kind, index, bounds)?, &acc);
    }
    Ok(acc)
}

/// One named check and whether it passed.
#[derive(Clone, Debug)]
pub struct ReportEntry {
    pub name: String,
    pub pass: bool,
}

/// A batch of named checks.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, pass: bool) {
        self.entries.push(ReportEntry { name: name.into(), pass });
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{}: {}", e.name, if e.pass { "pass" } else { "FAIL" })?;
        }
        Ok(())
    }
}

/// Checks every defining relation of the singular braid monoid on `k` strands
/// in the cabled image: inverse crossings cancel, distant letters commute, a
/// vertex commutes with the crossing on its own strands, and the braid-like
/// exchange moves hold.
pub fn check_relations(k: u8, color: u8, bounds: &Bounds) -> Result<Report, BoundError> {
    assert!(k >= 2, "relations need at least two strands");
    let word = |letters: &[(LetterKind, u8)]| SingularBraidWord::new(k, letters.to_vec());
    let image = |letters: &[(LetterKind, u8)]| rho_hat(&word(letters), color, bounds);
    use LetterKind::{Neg, Pos, Sing};
    let mut report = Report::default();
    for i in 1..k {
        let a = image(&[(Pos, i), (Neg, i)])?;
        let b = image(&[(Neg, i), (Pos, i)])?;
        let id = image(&[])?;
        report.push(alloc::format!("s{i} S{i} = e = S{i} s{i}"), a == id && b == id);
    }
    for i in 1..k {
        for j in i + 2..k {
            let pairs: [((LetterKind, u8), (LetterKind, u8), &str); 3] = [
                ((Pos, i), (Pos, j), "s"),
                ((Sing, i), (Pos, j), "t-s"),
                ((Sing, i), (Sing, j), "t"),
            ];
            for (x, y, tag) in pairs {
                let xy = image(&[x, y])?;
                let yx = image(&[y, x])?;
                report.push(alloc::format!("distant {tag} letters {i},{j} commute"), xy == yx);
            }
        }
    }
    for i in 1..k {
        let ts = image(&[(Sing, i), (Pos, i)])?;
        let st = image(&[(Pos, i), (Sing, i)])?;
        report.push(alloc::format!("t{i} s{i} = s{i} t{i}"), ts == st);
    }
    for i in 1..k - 1 {
        let l = image(&[(Pos, i), (Pos, i + 1), (Pos, i)])?;
        let r = image(&[(Pos, i + 1), (Pos, i), (Pos, i + 1)])?;
        report.push(alloc::format!("s{i} s{} s{i} braid move", i + 1), l == r);
        let l = image(&[(Sing, i), (Pos, i + 1), (Pos, i)])?;
        let r = image(&[(Pos, i + 1), (Pos, i), (Sing, i + 1)])?;
        report.push(alloc::format!("t{i} slides up across s{} s{i}", i + 1), l == r);
        let l = image(&[(Sing, i + 1), (Pos, i), (Pos, i + 1)])?;
        let r = image(&[(Pos, i), (Pos, i + 1), (Sing, i)])?;
        report.push(alloc::format!("t{} slides down across s{i} s{}", i + 1, i + 1), l == r);
    }
    Ok(report)
}

/// Scalar by which a projector-capped curl differs from a straight bundle:
/// `(-1)^color A^(color^2 + 2 color)` for a positive curl.
pub fn curl_scalar(color: u8, sign: Sign) -> RationalFn {
    let e = (color as i64) * (color as i64) + 2 * color as i64;
    let sgn = if color % 2 == 0 { 1 } else { -1 };
    match sign {
        Sign::Positive => RationalFn::from(LaurentPoly::monomial(e, sgn)),
        Sign::Negative => RationalFn::from(LaurentPoly::monomial(-e, sgn)),
    }
}

/// `C(color, i)` with the variable inverted, the expansion coefficients of the
/// positive cabled crossing.
pub fn coeff_c_mirror(color: u32, i: u32) -> RationalFn {
    RationalFn::from(coeff_c(color, i).mirror())
}
