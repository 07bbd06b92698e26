use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{DivideByZero, LaurentPoly};

/// A reduced fraction of Laurent polynomials: the coefficient field of the
/// diagram algebra.
///
/// The representation is canonical, so equality of values is structural
/// equality: the denominator is an ordinary polynomial in `A` with nonzero
/// constant term and positive leading coefficient, numerator and denominator
/// share no nonconstant factor, and their integer contents are coprime.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Failed integrality test: the value is not a Laurent polynomial.
/// Carries the nontrivial canonical denominator as the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotIntegral {
    pub denominator: LaurentPoly,
}

impl fmt::Display for NotIntegral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a Laurent polynomial: denominator {}", self.denominator)
    }
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFn {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_laurent(LaurentPoly::from_int(c))
    }

    /// `A^exp` as a rational function (negative exponents stay in the numerator:
    /// the denominator is reserved for genuine polynomial divisions).
    pub fn monomial(exp: i64) -> Self {
        Self::from_laurent(LaurentPoly::monomial(exp, 1))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, DivideByZero> {
        if den.is_zero() {
            return Err(DivideByZero);
        }
        Ok(canonical(num, den))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return canonical(&self.num + &other.num, self.den.clone());
        }
        // Knuth/GMP fraction addition: with canonical inputs every common
        // factor of the naive numerator and denominator divides g = gcd of the
        // denominators, so only small gcds are ever computed.
        let g = poly_gcd(&self.den, &other.den);
        if g.is_one() {
            return canonical_coprime(
                &(&self.num * &other.den) + &(&other.num * &self.den),
                &self.den * &other.den,
            );
        }
        let dl = self.den.divide_exact(&g).expect("gcd divides denominator");
        let dr = other.den.divide_exact(&g).expect("gcd divides denominator");
        let t = &(&self.num * &dr) + &(&other.num * &dl);
        if t.is_zero() {
            return RationalFn::zero();
        }
        let g2 = poly_gcd(&t, &g);
        let (num, den) = if g2.is_one() {
            (t, &dl * &other.den)
        } else {
            (
                t.divide_exact(&g2).expect("gcd divides numerator"),
                &dl * &other.den.divide_exact(&g2).expect("gcd divides denominator"),
            )
        };
        canonical_coprime(num, den)
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        if self.is_zero() || other.is_zero() {
            return RationalFn::zero();
        }
        // Cross-reduce before multiplying; both inputs are canonical, so the
        // product of the reduced parts needs only content/sign normalization.
        let (a_num, b_den) = reduce_pair(&self.num, &other.den);
        let (b_num, a_den) = reduce_pair(&other.num, &self.den);
        canonical_coprime(&a_num * &b_num, &a_den * &b_den)
    }

    pub fn div(&self, other: &RationalFn) -> Result<RationalFn, DivideByZero> {
        Ok(self.mul(&other.invert()?))
    }

    pub fn invert(&self) -> Result<RationalFn, DivideByZero> {
        if self.is_zero() {
            return Err(DivideByZero);
        }
        Ok(canonical_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: u32) -> RationalFn {
        let mut acc = RationalFn::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `A -> A^{-1}`.
    pub fn mirror(&self) -> RationalFn {
        canonical_coprime(self.num.mirror(), self.den.mirror())
    }

    /// The value as a Laurent polynomial, or the denominator that obstructs it.
    ///
    /// Because the representation is canonical this is exact: the value lies in
    /// the Laurent ring iff the reduced denominator is 1.
    pub fn as_laurent(&self) -> Result<LaurentPoly, NotIntegral> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(NotIntegral {
                denominator: self.den.clone(),
            })
        }
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            fmt::Display::fmt(&self.num, f)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Removes the common polynomial factor of a numerator and an *unrelated*
/// denominator (used for cross-reduction in products).
fn reduce_pair(num: &LaurentPoly, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let g = poly_gcd(num, den);
    if g.is_one() {
        (num.clone(), den.clone())
    } else {
        (
            num.divide_exact(&g).expect("gcd divides numerator"),
            den.divide_exact(&g).expect("gcd divides denominator"),
        )
    }
}

/// Canonical form for a pair already known to have coprime polynomial parts
/// (cross-reduced products, inverses of canonical values, mirrors): only the
/// monomial shift, integer content, and sign need normalizing, so the
/// polynomial gcd is skipped.
fn canonical_coprime(num: LaurentPoly, den: LaurentPoly) -> RationalFn {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return RationalFn::zero();
    }
    let shift = den.min_exp().unwrap();
    let mut den = den.shifted(-shift);
    let mut num = num.shifted(-shift);
    let r = num.content().gcd(&den.content());
    if !r.is_one() {
        let rp = LaurentPoly::from_int(r);
        num = num.divide_exact(&rp).expect("content divides");
        den = den.divide_exact(&rp).expect("content divides");
    }
    if den.leading_coeff().is_negative() {
        num = -&num;
        den = -&den;
    }
    RationalFn { num, den }
}

/// Brings `num/den` (den nonzero) to canonical form.
fn canonical(num: LaurentPoly, den: LaurentPoly) -> RationalFn {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return RationalFn::zero();
    }
    // Normalize the denominator to an ordinary polynomial with nonzero
    // constant term; the compensating monomial moves into the numerator.
    let shift = den.min_exp().unwrap();
    let mut den = den.shifted(-shift);
    let mut num = num.shifted(-shift);
    let g = poly_gcd(&num, &den);
    if !g.is_one() {
        num = num.divide_exact(&g).expect("gcd divides numerator");
        den = den.divide_exact(&g).expect("gcd divides denominator");
    }
    let r = num.content().gcd(&den.content());
    if !r.is_one() {
        let rp = LaurentPoly::from_int(r);
        num = num.divide_exact(&rp).expect("content divides");
        den = den.divide_exact(&rp).expect("content divides");
    }
    if den.leading_coeff().is_negative() {
        num = -&num;
        den = -&den;
    }
    RationalFn { num, den }
}

/// Least common multiple up to monomial units; `a` and `b` nonzero. Used to
/// clear a batch of denominators before a large bilinear product.
pub(crate) fn poly_lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let g = poly_gcd(a, b);
    let reduced = if g.is_one() {
        b.clone()
    } else {
        b.divide_exact(&g).expect("gcd divides")
    };
    a * &reduced
}

/// Gcd of the primitive parts in `Q[A]` after stripping monomial factors:
/// primitive, positive leading coefficient; 1 when coprime.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::one();
    }
    let mut p = primitive_poly(a);
    let mut q = primitive_poly(b);
    if degree(&p) == 0 || degree(&q) == 0 {
        return LaurentPoly::one();
    }
    if degree(&p) < degree(&q) {
        core::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_rem(&p, &q);
        if r.is_zero() {
            break;
        }
        p = q;
        q = primitive_poly(&r);
        if degree(&q) == 0 {
            return LaurentPoly::one();
        }
    }
    if q.leading_coeff().is_negative() {
        -&q
    } else {
        q
    }
}

/// Strips the monomial factor and the integer content.
fn primitive_poly(p: &LaurentPoly) -> LaurentPoly {
    let shifted = p.shifted(-p.min_exp().unwrap());
    let c = shifted.content();
    if c.is_one() {
        shifted
    } else {
        shifted
            .divide_exact(&LaurentPoly::from_int(c))
            .expect("content divides")
    }
}

fn degree(p: &LaurentPoly) -> i64 {
    p.max_exp().unwrap_or(0)
}

/// Pseudo-remainder of ordinary polynomials (`deg a >= deg b >= 1`).
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let db = degree(b) as usize;
    let mut r: Vec<BigInt> = alloc::vec![BigInt::zero(); degree(a) as usize + 1];
    for (e, c) in a.terms() {
        r[e as usize] = c.clone();
    }
    let mut d: Vec<BigInt> = alloc::vec![BigInt::zero(); db + 1];
    for (e, c) in b.terms() {
        d[e as usize] = c.clone();
    }
    let lb = d[db].clone();
    let mut deg_r = r.len() - 1;
    loop {
        while r[deg_r].is_zero() {
            if deg_r == 0 {
                return LaurentPoly::zero();
            }
            deg_r -= 1;
        }
        if deg_r < db {
            break;
        }
        let k = deg_r - db;
        let lr = r[deg_r].clone();
        for i in 0..deg_r {
            let mut t = &r[i] * &lb;
            if i >= k {
                t -= &d[i - k] * &lr;
            }
            r[i] = t;
        }
        r[deg_r] = BigInt::zero();
    }
    LaurentPoly::from_terms(r.into_iter().enumerate().map(|(e, c)| (e as i64, c)))
}
