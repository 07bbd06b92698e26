use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in `A` with arbitrary-precision integer coefficients.
///
/// Terms are stored sorted by strictly ascending exponent and never carry a
/// zero coefficient, so equal values have equal representations.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * A^exp`; the zero coefficient yields the zero polynomial.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c: BigInt = coeff.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: alloc::vec![(exp, c)],
            }
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates
    /// and dropping zeros.
    pub fn from_terms(raw: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut terms: Vec<(i64, BigInt)> = raw.into_iter().collect();
        terms.sort_by_key(|(e, _)| *e);
        let mut merged: Vec<(i64, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match merged.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: merged }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Coefficient of the highest-exponent term (zero for the zero polynomial).
    pub fn leading_coeff(&self) -> BigInt {
        self.terms
            .last()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Multiplies by `A^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Substitutes `A -> A^{-1}`.
    pub fn mirror(&self) -> Self {
        let mut terms: Vec<(i64, BigInt)> =
            self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentPoly { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division: returns `self / divisor` when the remainder is zero and
    /// every quotient coefficient is an integer, `None` otherwise.
    pub fn divide_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let smin = self.min_exp().unwrap();
        let dmin = divisor.min_exp().unwrap();
        // Work on ordinary polynomials indexed from degree 0.
        let sdeg = (self.max_exp().unwrap() - smin) as usize;
        let ddeg = (divisor.max_exp().unwrap() - dmin) as usize;
        if sdeg < ddeg {
            return None;
        }
        let mut rem: Vec<BigInt> = alloc::vec![BigInt::zero(); sdeg + 1];
        for (e, c) in &self.terms {
            rem[(e - smin) as usize] = c.clone();
        }
        let mut div: Vec<BigInt> = alloc::vec![BigInt::zero(); ddeg + 1];
        for (e, c) in &divisor.terms {
            div[(e - dmin) as usize] = c.clone();
        }
        let lead = div[ddeg].clone();
        let mut quot: Vec<BigInt> = alloc::vec![BigInt::zero(); sdeg - ddeg + 1];
        for k in (0..=sdeg - ddeg).rev() {
            let top = rem[ddeg + k].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for j in 0..=ddeg {
                let sub = &div[j] * &q;
                rem[j + k] -= sub;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(k, c)| (k as i64 + smin - dmin, c)),
        ))
    }

    /// Value at `A = 1` (the sum of the coefficients).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &rhs.terms[j];
            match ea.cmp(eb) {
                core::cmp::Ordering::Less => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push((*eb, cb.clone()));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((*ea, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs.terms[j..].iter().cloned());
        LaurentPoly { terms: out }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // Dense accumulation over the exponent range: the polynomials here are
        // short but repeatedly multiplied, and this avoids a sort per product.
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let mut acc: Vec<BigInt> = alloc::vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as i64 + lo, c))
                .collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("A")?,
                (1, false) => write!(f, "{mag}A")?,
                (_, true) => write!(f, "A^{e}")?,
                (_, false) => write!(f, "{mag}A^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn product_expansions() {
        let a = lp(&[(2, 1), (0, 1)]);
        let b = lp(&[(-2, 1), (0, 1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (0, 2), (-2, 1)]));
        let p = lp(&[(0, 1), (4, -1)]);
        let q = lp(&[(0, 1), (8, -1)]);
        assert_eq!(&p * &q, lp(&[(0, 1), (4, -1), (8, -1), (12, 1)]));
    }

    #[test]
    fn additive_identity() {
        let p = lp(&[(3, 5), (-1, -2)]);
        assert_eq!(&p + &LaurentPoly::zero(), p);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division() {
        // (A^4 - A^-4) / (A^2 - A^-2) = A^2 + A^-2
        let num = lp(&[(4, 1), (-4, -1)]);
        let den = lp(&[(2, 1), (-2, -1)]);
        assert_eq!(num.divide_exact(&den), Some(lp(&[(2, 1), (-2, 1)])));
        // Non-divisible pair.
        assert_eq!(lp(&[(0, 1)]).divide_exact(&lp(&[(1, 1), (0, 1)])), None);
        // Integer-coefficient failure: (2A) / 2 is fine, A / 2 is not.
        assert_eq!(
            lp(&[(1, 2)]).divide_exact(&lp(&[(0, 2)])),
            Some(lp(&[(1, 1)]))
        );
        assert_eq!(lp(&[(1, 1)]).divide_exact(&lp(&[(0, 2)])), None);
    }

    #[test]
    fn display_format() {
        assert_eq!(lp(&[(4, 1), (0, 1), (-4, 1)]).to_string(), "A^4 + 1 + A^-4");
        assert_eq!(lp(&[(2, -1), (-2, -1)]).to_string(), "-A^2 - A^-2");
        assert_eq!(lp(&[(1, 3), (0, -2)]).to_string(), "3A - 2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn mirror_reverses_exponents() {
        let p = lp(&[(3, 2), (0, 1), (-5, 7)]);
        assert_eq!(p.mirror(), lp(&[(-3, 2), (0, 1), (5, 7)]));
        assert_eq!(p.mirror().mirror(), p);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(((-20i64..=20), (-1_000_000i64..=1_000_000)), 0..8)
            .prop_map(|v| LaurentPoly::from_terms(v.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.divide_exact(&b), Some(a));
        }
    }
}
