use super::LaurentPoly;

/// The value of a closed loop: `d = -A^2 - A^{-2}`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, (-1).into()), (-2, (-1).into())])
}

/// The value of a closed loop colored by the n-th Jones-Wenzl projector:
/// `Δ_n = (-1)^n (A^{2(n+1)} - A^{-2(n+1)}) / (A^2 - A^{-2})`.
///
/// The division is always exact; `Δ_0 = 1`, `Δ_1 = d`.
pub fn delta(n: u32) -> LaurentPoly {
    let m = i64::from(n) + 1;
    let num = LaurentPoly::from_terms([(2 * m, 1.into()), (-2 * m, (-1).into())]);
    let den = LaurentPoly::from_terms([(2, 1.into()), (-2, (-1).into())]);
    let q = num.divide_exact(&den).expect("delta division is exact");
    if n % 2 == 0 {
        q
    } else {
        -&q
    }
}

/// The specialized q-Pochhammer product `(A^4; A^4)_k = ∏_{j=1..k} (1 - A^{4j})`.
pub fn q_pochhammer(k: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for j in 1..=i64::from(k) {
        acc = &acc * &LaurentPoly::from_terms([(0, 1.into()), (4 * j, (-1).into())]);
    }
    acc
}

/// Expansion coefficient of a colored crossing:
/// `C_{n,i} = A^{n² + 2i² - 4in} · (A⁴;A⁴)_n / ((A⁴;A⁴)_i (A⁴;A⁴)_{n-i})`.
///
/// The quotient is a Gaussian binomial, so the division is exact; a failure
/// would be an implementation bug and panics.
pub fn coeff_c(n: u32, i: u32) -> LaurentPoly {
    assert!(i <= n, "coefficient index out of range: C({n},{i})");
    let (ni, ii) = (i64::from(n), i64::from(i));
    let binom = q_pochhammer(n)
        .divide_exact(&(&q_pochhammer(i) * &q_pochhammer(n - i)))
        .expect("Gaussian binomial division must be exact");
    binom.shifted(ni * ni + 2 * ii * ii - 4 * ii * ni)
}

/// Expansion coefficient of a doubled colored crossing:
/// `D_{n,i} = A^{2i² - 4in + 2n²} · qbinom(n,i) · ∏_{j=n-i+1..n} (1 - A^{-4j})`.
pub fn coeff_d(n: u32, i: u32) -> LaurentPoly {
    assert!(i <= n, "coefficient index out of range: D({n},{i})");
    let (ni, ii) = (i64::from(n), i64::from(i));
    let binom = q_pochhammer(n)
        .divide_exact(&(&q_pochhammer(i) * &q_pochhammer(n - i)))
        .expect("Gaussian binomial division must be exact");
    let mut tail = LaurentPoly::one();
    for j in ni - ii + 1..=ni {
        tail = &tail * &LaurentPoly::from_terms([(0, 1.into()), (-4 * j, (-1).into())]);
    }
    &binom.shifted(2 * ii * ii - 4 * ii * ni + 2 * ni * ni) * &tail
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn loop_value_is_minus_two_at_one() {
        assert_eq!(loop_value().eval_at_one(), BigInt::from(-2));
        assert_eq!(loop_value(), delta(1));
    }

    #[test]
    fn small_deltas() {
        assert_eq!(delta(0), LaurentPoly::one());
        assert_eq!(delta(1), lp(&[(2, -1), (-2, -1)]));
        assert_eq!(delta(2), lp(&[(4, 1), (0, 1), (-4, 1)]));
    }

    #[test]
    fn delta_chebyshev_recurrence() {
        // Δ_{n+1} = d·Δ_n - Δ_{n-1}, checked well past every width used here.
        let d = loop_value();
        for n in 1..=20 {
            assert_eq!(delta(n + 1), &(&d * &delta(n)) - &delta(n - 1), "n = {n}");
        }
    }

    #[test]
    fn delta_is_palindromic() {
        for n in 0..=10 {
            assert_eq!(delta(n).mirror(), delta(n));
        }
    }

    #[test]
    fn pochhammer_products() {
        assert_eq!(q_pochhammer(0), LaurentPoly::one());
        assert_eq!(q_pochhammer(1), lp(&[(0, 1), (4, -1)]));
        assert_eq!(
            q_pochhammer(2),
            &lp(&[(0, 1), (4, -1)]) * &lp(&[(0, 1), (8, -1)])
        );
    }

    #[test]
    fn c_coefficients() {
        // n = 1 recovers the two Kauffman resolution weights.
        assert_eq!(coeff_c(1, 0), lp(&[(1, 1)]));
        assert_eq!(coeff_c(1, 1), lp(&[(-1, 1)]));
        assert_eq!(coeff_c(2, 0), lp(&[(4, 1)]));
        assert_eq!(coeff_c(2, 1), lp(&[(2, 1), (-2, 1)]));
        assert_eq!(coeff_c(2, 2), lp(&[(-4, 1)]));
        assert_eq!(coeff_c(3, 3), lp(&[(-9, 1)]));
    }

    #[test]
    fn c_reflection_symmetry() {
        for n in 1..=5 {
            for i in 0..=n {
                assert_eq!(coeff_c(n, i).mirror(), coeff_c(n, n - i), "C({n},{i})");
            }
        }
    }

    #[test]
    fn d_coefficients() {
        assert_eq!(coeff_d(1, 0), lp(&[(2, 1)]));
        assert_eq!(coeff_d(1, 1), lp(&[(0, 1), (-4, -1)]));
        assert_eq!(coeff_d(2, 0), lp(&[(8, 1)]));
    }
}
