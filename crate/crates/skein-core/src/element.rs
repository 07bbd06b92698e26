//! Formal linear combinations of diagrams: elements of the Temperley-Lieb
//! algebra over the field of rational functions in `A`, together with the
//! Jones-Wenzl projectors.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::algebra::{delta, loop_value, poly_lcm, LaurentPoly, RationalFn};
use crate::diagram::{self, cup_cap, Matching};
use crate::{BoundError, Bounds};

/// An element of the width-`m` diagram algebra: a finite sum of matchings with
/// rational-function coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TLElement {
    width: u8,
    terms: BTreeMap<Matching, RationalFn>,
}

impl TLElement {
    pub fn zero(width: u8) -> TLElement {
        TLElement { width, terms: BTreeMap::new() }
    }

    pub fn from_matching(m: Matching) -> TLElement {
        let mut terms = BTreeMap::new();
        terms.insert(m, RationalFn::one());
        TLElement { width: m.width(), terms }
    }

    /// The unit: all strands vertical.
    pub fn identity(width: u8) -> TLElement {
        TLElement::from_matching(diagram::identity(width))
    }

    /// The hook generator `e_i` as an element.
    pub fn hook(width: u8, i: u8) -> TLElement {
        TLElement::from_matching(cup_cap(width, i))
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &RationalFn)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Matching) -> RationalFn {
        self.terms.get(m).cloned().unwrap_or_else(RationalFn::zero)
    }

    fn insert_add(&mut self, m: Matching, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

impl core::fmt::Debug for TLElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "TLElement(width {}", self.width)?;
        for (m, c) in &self.terms {
            write!(f, ", {m}: {c}")?;
        }
        f.write_str(")")
    }
}

pub fn el_add(a: &TLElement, b: &TLElement) -> TLElement {
    assert_eq!(a.width, b.width, "el_add width mismatch");
    let mut out = a.clone();
    for (m, c) in &b.terms {
        out.insert_add(*m, c.clone());
    }
    out
}

pub fn el_sub(a: &TLElement, b: &TLElement) -> TLElement {
    el_add(a, &el_scale(&RationalFn::from_int(-1), b))
}

pub fn el_scale(c: &RationalFn, a: &TLElement) -> TLElement {
    if c.is_zero() {
        return TLElement::zero(a.width);
    }
    let terms = a.terms.iter().map(|(m, x)| (*m, c.mul(x))).collect();
    TLElement { width: a.width, terms }
}

/// Powers of the loop value, filled on demand; every closed loop a product
/// removes contributes one factor of `d`.
struct LoopPowers {
    pow: Vec<LaurentPoly>,
}

impl LoopPowers {
    fn new() -> LoopPowers {
        LoopPowers { pow: alloc::vec![LaurentPoly::one()] }
    }

    fn get(&mut self, k: u32) -> &LaurentPoly {
        let d = loop_value();
        while self.pow.len() <= k as usize {
            let next = self.pow.last().unwrap() * &d;
            self.pow.push(next);
        }
        &self.pow[k as usize]
    }
}

/// The lcm of an element's coefficient denominators, and its numerators
/// rescaled against that lcm.
fn cleared_terms(e: &TLElement) -> (LaurentPoly, Vec<(Matching, LaurentPoly)>) {
    let mut den = LaurentPoly::one();
    for c in e.terms.values() {
        den = poly_lcm(&den, c.denominator());
    }
    let terms = e
        .terms
        .iter()
        .map(|(m, c)| {
            let extra = den.divide_exact(c.denominator()).expect("lcm clears denominator");
            (*m, &extra * c.numerator())
        })
        .collect();
    (den, terms)
}

/// Bilinear product; `a` stacked above `b`.
///
/// Denominators are cleared in bulk first, so the quadratic pair loop runs on
/// plain Laurent coefficients and each collected output coefficient is
/// normalized exactly once.
pub fn el_mul(a: &TLElement, b: &TLElement) -> TLElement {
    assert_eq!(a.width, b.width, "el_mul width mismatch");
    let (da, a_terms) = cleared_terms(a);
    let (db, b_terms) = cleared_terms(b);
    let mut dpow = LoopPowers::new();
    let mut acc: BTreeMap<Matching, LaurentPoly> = BTreeMap::new();
    for (ma, ca) in &a_terms {
        for (mb, cb) in &b_terms {
            let (m, loops) = diagram::compose(ma, mb);
            let mut c = ca * cb;
            if loops > 0 {
                c = &c * dpow.get(loops);
            }
            match acc.entry(m) {
                alloc::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                alloc::collections::btree_map::Entry::Occupied(mut o) => {
                    let sum = &*o.get() + &c;
                    if sum.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
        }
    }
    let den = &da * &db;
    let mut out = TLElement::zero(a.width);
    for (m, c) in acc {
        out.insert_add(m, RationalFn::new(c, den.clone()).expect("denominator is nonzero"));
    }
    out
}

/// Side-by-side product: `a` on the left of `b`.
pub fn el_tensor(a: &TLElement, b: &TLElement) -> TLElement {
    let mut out = TLElement::zero(a.width + b.width);
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            out.insert_add(diagram::tensor(ma, mb), ca.mul(cb));
        }
    }
    out
}

/// Widens `a` to `total` strands, placing it on strands
/// `offset..offset + a.width()` with vertical strands elsewhere.
pub fn embed(a: &TLElement, total: u8, offset: u8) -> TLElement {
    assert!(offset + a.width() <= total, "embed out of range");
    let left = offset;
    let right = total - offset - a.width();
    let mut out = a.clone();
    if left > 0 {
        out = el_tensor(&TLElement::identity(left), &out);
    }
    if right > 0 {
        out = el_tensor(&out, &TLElement::identity(right));
    }
    out
}

/// Markov trace: closes every strand around the side and evaluates each
/// diagram to `d^loops`.
pub fn el_trace(a: &TLElement) -> RationalFn {
    let (den, terms) = cleared_terms(a);
    let mut dpow = LoopPowers::new();
    let mut total = LaurentPoly::zero();
    for (m, c) in &terms {
        let loops = diagram::trace_close(m);
        total = &total + &(c * dpow.get(loops));
    }
    RationalFn::new(total, den).expect("denominator is nonzero")
}

/// The Jones-Wenzl projector on `n` strands, by the Wenzl recursion
/// `f_n = f_{n-1} - (d_{n-2}/d_{n-1}) f_{n-1} e_{n-1} f_{n-1}` with `f_{n-1}`
/// widened by one vertical strand and `d_k` the loop evaluation of the closed
/// `k`-strand projector.
pub fn jones_wenzl(n: u8, bounds: &Bounds) -> Result<TLElement, BoundError> {
    if n > bounds.max_projector {
        return Err(BoundError {
            what: "projector size",
            requested: n as usize,
            limit: bounds.max_projector as usize,
        });
    }
    assert!(n >= 1);
    let mut f = TLElement::identity(1);
    for m in 2..=n {
        let fe = embed(&f, m, 0);
        let ratio = RationalFn::from(delta(m as u32 - 2))
            .div(&RationalFn::from(delta(m as u32 - 1)))
            .expect("loop evaluations of projectors are nonzero");
        let hook = TLElement::hook(m, m - 1);
        let correction = el_mul(&el_mul(&fe, &hook), &fe);
        f = el_sub(&fe, &el_scale(&ratio, &correction));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LaurentPoly;
    use proptest::prelude::*;

    fn rf(terms: &[(i64, i64)]) -> RationalFn {
        RationalFn::from(LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, c.into()))))
    }

    fn d() -> RationalFn {
        RationalFn::from(loop_value())
    }

    #[test]
    fn hook_squared_is_d_times_hook() {
        let e1 = TLElement::hook(2, 1);
        assert_eq!(el_mul(&e1, &e1), el_scale(&d(), &e1));
    }

    #[test]
    fn hook_sandwich_collapses() {
        let e1 = TLElement::hook(3, 1);
        let e2 = TLElement::hook(3, 2);
        assert_eq!(el_mul(&el_mul(&e1, &e2), &e1), e1);
        assert_eq!(el_mul(&el_mul(&e2, &e1), &e2), e2);
    }

    #[test]
    fn identity_is_unit() {
        let id = TLElement::identity(3);
        let x = el_add(&TLElement::hook(3, 1), &el_scale(&d(), &TLElement::hook(3, 2)));
        assert_eq!(el_mul(&id, &x), x);
        assert_eq!(el_mul(&x, &id), x);
    }

    #[test]
    fn distributivity_and_scaling() {
        let e1 = TLElement::hook(3, 1);
        let e2 = TLElement::hook(3, 2);
        let s = rf(&[(2, 1), (-2, 3)]);
        let lhs = el_mul(&el_add(&e1, &e2), &el_scale(&s, &e1));
        let rhs = el_scale(&s, &el_add(&el_mul(&e1, &e1), &el_mul(&e2, &e1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn embedded_disjoint_hooks_commute() {
        for m in 4..=6u8 {
            let a = embed(&TLElement::hook(2, 1), m, 0);
            let b = embed(&TLElement::hook(2, 1), m, m - 2);
            assert_eq!(el_mul(&a, &b), el_mul(&b, &a));
        }
    }

    #[test]
    fn tensor_interchanges_with_mul() {
        // (a tensor b)(c tensor d) = ac tensor bd
        let e = TLElement::hook(2, 1);
        let id = TLElement::identity(2);
        for a in [&e, &id] {
            for b in [&e, &id] {
                for c in [&e, &id] {
                    for x in [&e, &id] {
                        let lhs = el_mul(&el_tensor(a, b), &el_tensor(c, x));
                        let rhs = el_tensor(&el_mul(a, c), &el_mul(b, x));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn trace_of_identity_and_hook() {
        assert_eq!(el_trace(&TLElement::identity(2)), d().mul(&d()));
        assert_eq!(el_trace(&TLElement::hook(2, 1)), d());
    }

    #[test]
    fn projector_two_strands() {
        let f2 = jones_wenzl(2, &Bounds::default()).unwrap();
        let expected = el_sub(
            &TLElement::identity(2),
            &el_scale(&RationalFn::one().div(&d()).unwrap(), &TLElement::hook(2, 1)),
        );
        assert_eq!(f2, expected);
    }

    #[test]
    fn projector_three_strands_frozen() {
        let f3 = jones_wenzl(3, &Bounds::default()).unwrap();
        assert_eq!(f3.term_count(), 5);
        // d is negative, so the single-hook coefficients -delta(1)/delta(2)
        // come out positive
        let denom = rf(&[(8, 1), (4, 1), (0, 1)]);
        let near = rf(&[(6, 1), (2, 1)]).div(&denom).unwrap();
        let far = rf(&[(4, 1)]).div(&denom).unwrap();
        assert_eq!(f3.coeff(&diagram::identity(3)), RationalFn::one());
        assert_eq!(f3.coeff(&cup_cap(3, 1)), near);
        assert_eq!(f3.coeff(&cup_cap(3, 2)), near);
        let (e1e2, _) = diagram::compose(&cup_cap(3, 1), &cup_cap(3, 2));
        let (e2e1, _) = diagram::compose(&cup_cap(3, 2), &cup_cap(3, 1));
        assert_eq!(f3.coeff(&e1e2), far);
        assert_eq!(f3.coeff(&e2e1), far);
    }

    #[test]
    fn projector_identities() {
        let bounds = Bounds::default();
        for n in 1..=4u8 {
            let f = jones_wenzl(n, &bounds).unwrap();
            // idempotent
            assert_eq!(el_mul(&f, &f), f);
            // kills every hook on either side
            for i in 1..n {
                let e = TLElement::hook(n, i);
                assert!(el_mul(&f, &e).is_zero(), "f_{n} e_{i} != 0");
                assert!(el_mul(&e, &f).is_zero(), "e_{i} f_{n} != 0");
            }
            // trace closes to the loop evaluation
            assert_eq!(el_trace(&f), RationalFn::from(delta(n as u32)));
        }
    }

    #[test]
    fn projector_absorbs_smaller_projector() {
        let bounds = Bounds::default();
        for n in 2..=4u8 {
            let f = jones_wenzl(n, &bounds).unwrap();
            let smaller = embed(&jones_wenzl(n - 1, &bounds).unwrap(), n, 0);
            assert_eq!(el_mul(&f, &smaller), f);
            assert_eq!(el_mul(&smaller, &f), f);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn multiplication_is_associative(
            m in 2u8..=4,
            picks in proptest::collection::vec(0usize..500, 3),
            scales in proptest::collection::vec(-3i64..=3, 3),
        ) {
            let basis = diagram::enumerate_basis(m, &Bounds::default()).unwrap();
            let els: Vec<TLElement> = picks
                .iter()
                .zip(&scales)
                .map(|(&i, &s)| {
                    el_scale(&RationalFn::from_int(s), &TLElement::from_matching(basis[i % basis.len()]))
                })
                .collect();
            let lhs = el_mul(&el_mul(&els[0], &els[1]), &els[2]);
            let rhs = el_mul(&els[0], &el_mul(&els[1], &els[2]));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn trace_is_cyclic(
            m in 2u8..=4,
            ia in 0usize..500,
            ib in 0usize..500,
        ) {
            let basis = diagram::enumerate_basis(m, &Bounds::default()).unwrap();
            let a = TLElement::from_matching(basis[ia % basis.len()]);
            let b = TLElement::from_matching(basis[ib % basis.len()]);
            prop_assert_eq!(el_trace(&el_mul(&a, &b)), el_trace(&el_mul(&b, &a)));
        }
    }
}
