//! JSON wire forms. Polynomials are `[[exponent, "coefficient"], ...]` in
//! ascending exponent order with decimal-string coefficients, so values
//! round-trip bit-exactly regardless of magnitude.

use serde::{Deserialize, Serialize};

use skein_core::algebra::{LaurentPoly, RationalFn};
use skein_core::element::TLElement;
use skein_core::invariant::{Framing, IntegralityReport, InvariantResult};
use skein_core::oracle::OracleResult;
use skein_core::singular::Report;

pub type Poly = Vec<(i64, String)>;

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct Rational {
    pub num: Poly,
    pub den: Poly,
}

/// JSON spelling of a singular braid word, accepted anywhere a word argument
/// is: `{"strands": 2, "letters": [["t", 1], ["s", 1]]}`.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct Word {
    pub strands: u8,
    pub letters: Vec<(String, u8)>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct Element {
    pub width: u8,
    /// `[pairing array, coefficient]` rows in ascending pairing order.
    pub terms: Vec<(Vec<u8>, Rational)>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct Invariant {
    pub value: Rational,
    pub color: u8,
    pub strands: u8,
    pub writhe: i64,
    pub framing: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct Integrality {
    pub singular_count: usize,
    pub raw: Rational,
    pub scaled: Rational,
    pub integral: bool,
    pub witness: Option<Poly>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
    pub all_pass: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ClosedForm {
    pub which: String,
    pub n: u8,
    pub color: u8,
    pub value: Rational,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct Oracle {
    pub color: u8,
    pub blackboard: Poly,
    pub zero_framed: Poly,
    pub writhe: i64,
    pub matches_evaluate: bool,
}

pub fn poly(p: &LaurentPoly) -> Poly {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

pub fn rational(r: &RationalFn) -> Rational {
    Rational { num: poly(r.numerator()), den: poly(r.denominator()) }
}

pub fn element(e: &TLElement) -> Element {
    let terms = e
        .terms()
        .map(|(m, c)| {
            let pairing = (0..2 * m.width()).map(|p| m.partner(p)).collect();
            (pairing, rational(c))
        })
        .collect();
    Element { width: e.width(), terms }
}

pub fn invariant_result(r: &InvariantResult) -> Invariant {
    Invariant {
        value: rational(&r.value),
        color: r.color,
        strands: r.strands,
        writhe: r.writhe,
        framing: match r.framing {
            Framing::Blackboard => "blackboard".into(),
            Framing::Zero => "zero".into(),
        },
    }
}

pub fn integrality(r: &IntegralityReport) -> Integrality {
    Integrality {
        singular_count: r.singular_count,
        raw: rational(&r.raw),
        scaled: rational(&r.scaled),
        integral: r.integral,
        witness: r.witness.as_ref().map(poly),
    }
}

pub fn report(r: &Report) -> CheckReport {
    CheckReport {
        entries: r
            .entries
            .iter()
            .map(|e| CheckEntry { name: e.name.clone(), pass: e.pass })
            .collect(),
        all_pass: r.all_pass(),
    }
}

pub fn closed_form(which: &str, n: u8, color: u8, value: &RationalFn) -> ClosedForm {
    ClosedForm { which: which.into(), n, color, value: rational(value) }
}

pub fn oracle(r: &OracleResult, matches_evaluate: bool) -> Oracle {
    Oracle {
        color: r.color,
        blackboard: poly(&r.blackboard),
        zero_framed: poly(&r.zero_framed()),
        writhe: r.writhe,
        matches_evaluate,
    }
}
