//! The colored bracket invariant of a singular link presented as a braid
//! word: the Markov trace of the cabled image, the framing correction, closed
//! forms for one-vertex closures, and the identity-verification battery.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{coeff_c, coeff_d, delta, LaurentPoly, RationalFn};
use crate::element::{el_add, el_mul, el_scale, el_tensor, el_trace, TLElement};
use crate::singular::{
    annular_element, cabled_crossing, colored_crossing, rho_hat, singular_vertex, w_element,
    LetterKind, Report, Sign, SingularBraidWord,
};
use crate::{element, BoundError, Bounds};

/// Which framing a bracket value is reported in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Framing {
    /// Raw closure of the word as drawn; each unit of writhe contributes a
    /// curl factor.
    Blackboard,
    /// Curl factors removed: invariant under stabilization.
    Zero,
}

/// A computed bracket value together with the data needed to reframe it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub value: RationalFn,
    pub color: u8,
    pub strands: u8,
    pub writhe: i64,
    pub framing: Framing,
}

/// Evaluates the invariant of the closure of `word`, cabled by the even
/// `color`, in the blackboard framing.
pub fn evaluate(
    word: &SingularBraidWord,
    color: u8,
    bounds: &Bounds,
) -> Result<InvariantResult, BoundError> {
    let image = rho_hat(word, color, bounds)?;
    Ok(InvariantResult {
        value: el_trace(&image),
        color,
        strands: word.strands(),
        writhe: word.writhe(),
        framing: Framing::Blackboard,
    })
}

/// Removes the curl contribution `A^((color^2 + 2 color) * writhe)`. For a
/// word with singular vertices the result still depends on the diagram's
/// vertex framing, so callers decide whether that is meaningful.
pub fn framing_correct(result: &InvariantResult) -> InvariantResult {
    if result.framing == Framing::Zero {
        return result.clone();
    }
    let c = result.color as i64;
    let shift = -(c * c + 2 * c) * result.writhe;
    InvariantResult {
        value: result.value.mul(&RationalFn::monomial(shift)),
        framing: Framing::Zero,
        ..result.clone()
    }
}

fn sign_pow(n: u32) -> RationalFn {
    if n % 2 == 0 {
        RationalFn::one()
    } else {
        RationalFn::from_int(-1)
    }
}

/// Loop evaluations ratio `delta(2n)^2 / delta(n+i)` common to both closed
/// forms.
fn delta_ratio(n: u32, i: u32) -> RationalFn {
    let d2n = RationalFn::from(delta(2 * n));
    d2n.mul(&d2n)
        .div(&RationalFn::from(delta(n + i)))
        .expect("loop evaluations are nonzero")
}

/// Closed form for the closure of `t1 s1` on two strands:
/// `(-1)^n A^(-3n^2-2n) sum_i C(n,i) delta(2n)^2 / delta(n+i)` at
/// `color = 2n`.
pub fn closed_form_example1(color: u8) -> RationalFn {
    assert!(color >= 2 && color % 2 == 0, "closed form needs an even color");
    let n = color as u32 / 2;
    let mut sum = RationalFn::zero();
    for i in 0..=n {
        sum = sum.add(&RationalFn::from(coeff_c(n, i)).mul(&delta_ratio(n, i)));
    }
    sum.mul(&sign_pow(n))
        .mul(&RationalFn::monomial(-(3 * (n as i64) * (n as i64) + 2 * n as i64)))
}

/// Closed form for the closure of `t1 s1 s1` on two strands:
/// `A^(-6n^2-4n) sum_i D(n,i) delta(2n)^2 / delta(n+i)` at `color = 2n`.
pub fn closed_form_example2(color: u8) -> RationalFn {
    assert!(color >= 2 && color % 2 == 0, "closed form needs an even color");
    let n = color as u32 / 2;
    let mut sum = RationalFn::zero();
    for i in 0..=n {
        sum = sum.add(&RationalFn::from(coeff_d(n, i)).mul(&delta_ratio(n, i)));
    }
    sum.mul(&RationalFn::monomial(-(6 * (n as i64) * (n as i64) + 4 * n as i64)))
}

/// Result of testing the connected-sum product rule
/// `delta(color) * [K # K'] = [K] * [K']`.
#[derive(Clone, Debug)]
pub struct ConnectedSumReport {
    pub lhs: RationalFn,
    pub rhs: RationalFn,
    pub pass: bool,
}

/// Forms the connected sum of the closures of two words by concatenating them
/// side by side on `k1 + k2 - 1` strands, then checks the product rule.
pub fn connected_sum_check(
    first: &SingularBraidWord,
    second: &SingularBraidWord,
    color: u8,
    bounds: &Bounds,
) -> Result<ConnectedSumReport, BoundError> {
    let k1 = first.strands();
    let shift = k1 - 1;
    let mut letters: Vec<(LetterKind, u8)> = first.letters().to_vec();
    letters.extend(second.letters().iter().map(|&(kind, i)| (kind, i + shift)));
    let sum_word = SingularBraidWord::new(k1 + second.strands() - 1, letters);
    let lhs = RationalFn::from(delta(color as u32)).mul(&evaluate(&sum_word, color, bounds)?.value);
    let rhs = evaluate(first, color, bounds)?
        .value
        .mul(&evaluate(second, color, bounds)?.value);
    let pass = lhs == rhs;
    Ok(ConnectedSumReport { lhs, rhs, pass })
}

/// Result of the integrality test: the raw value times
/// `C(color, color/2)^(number of vertices)` should be a Laurent polynomial.
#[derive(Clone, Debug)]
pub struct IntegralityReport {
    pub singular_count: usize,
    pub raw: RationalFn,
    pub scaled: RationalFn,
    pub integral: bool,
    /// The Laurent polynomial the scaled value reduces to, when it does.
    pub witness: Option<LaurentPoly>,
}

pub fn integrality_check(
    word: &SingularBraidWord,
    color: u8,
    bounds: &Bounds,
) -> Result<IntegralityReport, BoundError> {
    let raw = evaluate(word, color, bounds)?.value;
    let vertices = word.singular_count();
    let factor = RationalFn::from(coeff_c(color as u32, color as u32 / 2)).pow(vertices as u32);
    let scaled = factor.mul(&raw);
    let witness = scaled.as_laurent().ok();
    Ok(IntegralityReport {
        singular_count: vertices,
        raw,
        scaled,
        integral: witness.is_some(),
        witness,
    })
}

/// Checks the expansion of a single crossing of two `cable`-strand bundles
/// over the annular basis, and of the doubled positive crossing. Any positive
/// cable size is meaningful here, not just even ones.
pub fn c_expansion_check(
    cable: u8,
    sign: Sign,
    bounds: &Bounds,
) -> Result<Report, BoundError> {
    let n = cable as u32;
    let mut report = Report::default();
    let crossing = colored_crossing(cable, sign, bounds)?;
    let mut sum = TLElement::zero(2 * cable);
    for i in 0..=cable {
        let coeff = match sign {
            Sign::Negative => RationalFn::from(coeff_c(n, i as u32)),
            Sign::Positive => RationalFn::from(coeff_c(n, i as u32).mirror()),
        };
        sum = el_add(&sum, &el_scale(&coeff, &annular_element(cable, i, bounds)?));
    }
    let tag = match sign {
        Sign::Positive => "positive",
        Sign::Negative => "negative",
    };
    report.push(format!("{tag} cable-{cable} crossing expands over the annular basis"), crossing == sum);

    let pos = colored_crossing(cable, Sign::Positive, bounds)?;
    let doubled = el_mul(&pos, &pos);
    let mut dsum = TLElement::zero(2 * cable);
    for i in 0..=cable {
        dsum = el_add(
            &dsum,
            &el_scale(
                &RationalFn::from(coeff_d(n, i as u32)),
                &annular_element(cable, cable - i, bounds)?,
            ),
        );
    }
    report.push(format!("doubled cable-{cable} crossing expands over the annular basis"), doubled == dsum);
    Ok(report)
}

/// The full identity battery at color `2n`: crossing expansions, the
/// vertex-slide equalities relating a vertex-crossing composite to the flat
/// four-leg element, the vertex-flip cancellations, and for `n = 1` the
/// three-term decomposition of the color-2 crossing.
pub fn identity_checks(n: u8, bounds: &Bounds) -> Result<Report, BoundError> {
    assert!(n >= 1);
    let color = 2 * n;
    let mut report = Report::default();

    for sign in [Sign::Negative, Sign::Positive] {
        for e in c_expansion_check(n, sign, bounds)?.entries {
            report.entries.push(e);
        }
    }

    let v = singular_vertex(color, bounds)?;
    let cpos = cabled_crossing(color, Sign::Positive, bounds)?;
    let cneg = cabled_crossing(color, Sign::Negative, bounds)?;
    let exp = 3 * (n as i64) * (n as i64) + 2 * (n as i64);
    let sgn = sign_pow(n as u32);

    // sliding the crossing through the vertex flattens the composite
    let wpos = w_element(color, Sign::Positive, bounds)?;
    let lhs = el_mul(&v, &cpos);
    let rhs = el_scale(&sgn.mul(&RationalFn::monomial(-exp)), &wpos);
    report.push(format!("vertex-slide, positive crossing, color {color}"), lhs == rhs);

    let wneg = w_element(color, Sign::Negative, bounds)?;
    let lhs = el_mul(&v, &cneg);
    let rhs = el_scale(&sgn.mul(&RationalFn::monomial(exp)), &wneg);
    report.push(format!("vertex-slide, negative crossing, color {color}"), lhs == rhs);

    // the flat four-leg elements expand over the annular basis with the
    // crossing coefficients at half the color
    let mut wneg_sum = TLElement::zero(2 * color);
    let mut wpos_sum = TLElement::zero(2 * color);
    for i in 0..=n {
        let c = coeff_c(n as u32, i as u32);
        let t = annular_element(color, i, bounds)?;
        wneg_sum = el_add(&wneg_sum, &el_scale(&RationalFn::from(c.clone()), &t));
        wpos_sum = el_add(&wpos_sum, &el_scale(&RationalFn::from(c.mirror()), &t));
    }
    report.push(format!("flat composite expands over the annular basis, negative, color {color}"), wneg == wneg_sum);
    report.push(format!("flat composite expands over the annular basis, positive, color {color}"), wpos == wpos_sum);

    // conjugating a vertex by a crossing leaves it fixed
    let lhs = el_mul(&cneg, &el_mul(&v, &cpos));
    report.push(format!("vertex-flip, negative over positive, color {color}"), lhs == v);
    let lhs = el_mul(&cpos, &el_mul(&v, &cneg));
    report.push(format!("vertex-flip, positive over negative, color {color}"), lhs == v);

    // the vertex commutes with the crossing on its own strands
    report.push(
        format!("vertex commutes with crossing, color {color}"),
        el_mul(&v, &cpos) == el_mul(&cpos, &v),
    );

    if n == 1 {
        // color-2 crossing as projector pair, turn-back, and vertex
        let f2 = element::jones_wenzl(2, bounds)?;
        let through = el_tensor(&f2, &f2);
        let turnback = annular_element(2, 0, bounds)?;
        let rhs = el_add(
            &el_add(
                &el_scale(&RationalFn::monomial(4), &through),
                &el_scale(&RationalFn::monomial(-4), &turnback),
            ),
            &el_scale(
                &RationalFn::monomial(2).add(&RationalFn::monomial(-2)),
                &singular_vertex(2, bounds)?,
            ),
        );
        report.push("color-2 crossing decomposes into through, turn-back and vertex parts", cpos == rhs);
    }
    Ok(report)
}

/// The unknot value at each even color: the loop evaluation of the projector.
pub fn unknot_value(color: u8) -> RationalFn {
    RationalFn::from(delta(color as u32))
}
