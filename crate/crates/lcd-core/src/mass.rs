//! Closed-form mass formulas for LCD codes over GF(2) and GF(3).
//!
//! `mass(q, n, k)` is the total number of distinct LCD [n,k] codes. A
//! classification at (n, k) is complete exactly when the per-class terms
//! |monomial group| / |Aut(C)| accumulate to it. The formulas split into
//! parity cases of n and k and are built from Gaussian binomials evaluated at
//! q², so every intermediate stays an exact integer.

use crate::error::{usage, Result};
use crate::field::Field;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn pow(base: u64, exp: u64) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

/// Gaussian binomial coefficient [n choose k]_q: the number of k-dimensional
/// subspaces of an n-dimensional space over GF(q). Zero when k > n.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= pow(q, n - i) - 1u32;
        den *= pow(q, i + 1) - 1u32;
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero(), "Gaussian binomial must divide exactly");
    quot
}

fn check_params(n: usize, k: usize) -> Result<(u64, u64)> {
    if n < 2 || k == 0 || k >= n {
        return Err(usage(format!("mass formula needs 2 <= n and 1 <= k <= n-1, got ({n},{k})")));
    }
    Ok((n as u64, k as u64))
}

fn half(x: u64) -> u64 {
    debug_assert!(x.is_multiple_of(2), "exponent {x} must be even");
    x / 2
}

/// Number of distinct binary LCD [n,k] codes.
pub fn mass_binary(n: usize, k: usize) -> Result<BigUint> {
    let (n, k) = check_params(n, k)?;
    let value = match (n % 2, k % 2) {
        (0, 1) => pow(2, half(n * k - k * k + n - 1)) * gaussian_binomial(n / 2 - 1, (k - 1) / 2, 4),
        (1, 1) => pow(2, half((n - k) * (k + 1))) * gaussian_binomial((n - 1) / 2, (k - 1) / 2, 4),
        (1, 0) => pow(2, half(k * (n - k + 1))) * gaussian_binomial((n - 1) / 2, k / 2, 4),
        _ => {
            let inner = pow(2, n - k) * gaussian_binomial(n / 2 - 1, k / 2 - 1, 4)
                + gaussian_binomial(n / 2 - 1, k / 2, 4);
            pow(2, half(k * (n - k))) * inner
        }
    };
    Ok(value)
}

/// Number of distinct ternary LCD [n,k] codes.
pub fn mass_ternary(n: usize, k: usize) -> Result<BigUint> {
    let (n, k) = check_params(n, k)?;
    let value = match (n % 2, k % 2) {
        (0, 1) => {
            // 3^(n/2) − 1 for n ≡ 0 (mod 4), 3^(n/2) + 1 for n ≡ 2 (mod 4):
            // the sign tracks the type of the orthogonal group of the
            // standard form, which is plus exactly when 4 divides n.
            let split = if n % 4 == 0 { pow(3, n / 2) - 1u32 } else { pow(3, n / 2) + 1u32 };
            pow(3, half(n * k - k * k - 1)) * split * gaussian_binomial(n / 2 - 1, (k - 1) / 2, 9)
        }
        (1, 1) => pow(3, half((k + 1) * (n - k))) * gaussian_binomial((n - 1) / 2, (k - 1) / 2, 9),
        (1, 0) => pow(3, half(k * (n - k + 1))) * gaussian_binomial((n - 1) / 2, k / 2, 9),
        _ => pow(3, half(k * (n - k))) * gaussian_binomial(n / 2, k / 2, 9),
    };
    Ok(value)
}

pub fn mass(field: Field, n: usize, k: usize) -> Result<BigUint> {
    match field {
        Field::Gf2 => mass_binary(n, k),
        Field::Gf3 => mass_ternary(n, k),
    }
}

/// Order of the full monomial group: n! over GF(2), 2ⁿ·n! over GF(3).
pub fn monomial_group_order(field: Field, n: usize) -> BigUint {
    match field {
        Field::Gf2 => factorial(n as u64),
        Field::Gf3 => pow(2, n as u64) * factorial(n as u64),
    }
}

/// Lower bound on the number of inequivalent LCD [n,k] codes:
/// ⌈mass / |monomial group|⌉. No class holds more codes than the monomial
/// group has elements, so at least this many classes exist.
pub fn lower_bound(field: Field, n: usize, k: usize) -> Result<BigUint> {
    let total = mass(field, n, k)?;
    Ok(total.div_ceil(&monomial_group_order(field, n)))
}

/// Exact number of equivalence classes of LCD [n,k] codes for k ∈ {1, n−1},
/// optionally restricted to minimum weight `d`.
///
/// Dimension one: a class per generator weight w = d − 1 with w even (GF(2))
/// or w ≢ 2 mod 3 (GF(3)). Dimension n−1 mirrors dimension one through
/// duality; all classes have d = 1 except a single d = 2 class, which exists
/// when n is odd (GF(2)) or n ≢ 0 mod 3 (GF(3)).
pub fn closed_form_count(field: Field, n: usize, k: usize, d: Option<usize>) -> Result<u64> {
    if n < 2 {
        return Err(usage("closed-form counts need n >= 2"));
    }
    if k != 1 && k != n - 1 {
        return Err(usage(format!("no closed-form count for k = {k} at n = {n}")));
    }
    let dim_one_total = |field: Field| -> u64 {
        let n = n as u64;
        match field {
            Field::Gf2 => n.div_ceil(2),
            Field::Gf3 => (2 * n).div_ceil(3),
        }
    };
    let dim_one_with = |field: Field, d: usize| -> u64 {
        if d == 0 || d > n {
            return 0;
        }
        match field {
            Field::Gf2 => {
                let reachable = if n.is_multiple_of(2) { n - 1 } else { n };
                u64::from(d % 2 == 1 && d <= reachable)
            }
            Field::Gf3 => u64::from(!d.is_multiple_of(3)),
        }
    };
    let two_class = match field {
        Field::Gf2 => u64::from(n % 2 == 1),
        Field::Gf3 => u64::from(!n.is_multiple_of(3)),
    };
    let count = if k == 1 {
        match d {
            None => dim_one_total(field),
            Some(d) => dim_one_with(field, d),
        }
    } else {
        match d {
            None => dim_one_total(field),
            Some(1) => dim_one_total(field) - two_class,
            Some(2) => two_class,
            Some(_) => 0,
        }
    };
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomial_basics() {
        assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(2, 1, 4), BigUint::from(5u32));
        assert_eq!(gaussian_binomial(6, 3, 2), BigUint::from(1395u32));
        assert_eq!(gaussian_binomial(3, 5, 9), BigUint::zero());
        assert_eq!(gaussian_binomial(7, 0, 9), BigUint::one());
    }

    #[test]
    fn gaussian_binomial_satisfies_the_q_pascal_identity() {
        for q in [2u64, 3, 4, 9] {
            for n in 1..=10u64 {
                for k in 1..=n {
                    let lhs = gaussian_binomial(n, k, q);
                    let rhs = pow(q, k) * gaussian_binomial(n - 1, k, q)
                        + gaussian_binomial(n - 1, k - 1, q);
                    assert_eq!(lhs, rhs, "q={q} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn binary_mass_reference_values() {
        assert_eq!(mass_binary(4, 2).unwrap(), BigUint::from(20u32));
        assert_eq!(mass_binary(6, 3).unwrap(), BigUint::from(640u32));
        // Odd/odd case checked against the dimension-one class sum
        // 5!/24 + 5!/12 + 5!/120 = 16.
        assert_eq!(mass_binary(5, 1).unwrap(), BigUint::from(16u32));
    }

    #[test]
    fn ternary_mass_reference_values() {
        assert_eq!(mass_ternary(4, 2).unwrap(), BigUint::from(90u32));
        // v·v ≡ wt(v) (mod 3), so the LCD [4,1] codes are the lines of
        // weight 1, 2 and 4: 4 + 12 + 8 = 24. Length 2 likewise gives 4.
        assert_eq!(mass_ternary(2, 1).unwrap(), BigUint::from(4u32));
        assert_eq!(mass_ternary(4, 1).unwrap(), BigUint::from(24u32));
        // Nondegenerate 3-subspaces of F_3^6 counted by discriminant:
        // 2·|O⁻₆(3)| / |O₃(3)|² = 2·26127360/48² = 22680.
        assert_eq!(mass_ternary(6, 3).unwrap(), BigUint::from(22680u32));
        // Odd/odd case checked against the dimension-one class sum
        // 48/16 + 48/8 = 9.
        assert_eq!(mass_ternary(3, 1).unwrap(), BigUint::from(9u32));
    }

    #[test]
    fn mass_is_symmetric_under_duality() {
        for n in 2..=12usize {
            for k in 1..n {
                assert_eq!(mass_binary(n, k).unwrap(), mass_binary(n, n - k).unwrap());
                assert_eq!(mass_ternary(n, k).unwrap(), mass_ternary(n, n - k).unwrap());
            }
        }
    }

    #[test]
    fn out_of_range_parameters_are_usage_errors() {
        assert!(mass_binary(4, 0).is_err());
        assert!(mass_binary(4, 4).is_err());
        assert!(mass_ternary(1, 1).is_err());
        assert!(closed_form_count(Field::Gf2, 6, 2, None).is_err());
    }

    #[test]
    fn closed_form_dimension_one_counts() {
        assert_eq!(closed_form_count(Field::Gf3, 10, 1, None).unwrap(), 7);
        assert_eq!(closed_form_count(Field::Gf2, 6, 1, None).unwrap(), 3);
        assert_eq!(closed_form_count(Field::Gf2, 7, 1, None).unwrap(), 4);
        // Per-distance refinements sum back to the total.
        for field in [Field::Gf2, Field::Gf3] {
            for n in 2..=10 {
                for k in [1, n - 1] {
                    let total: u64 = (1..=n)
                        .map(|d| closed_form_count(field, n, k, Some(d)).unwrap())
                        .sum();
                    assert_eq!(total, closed_form_count(field, n, k, None).unwrap(), "{field} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn closed_form_dual_dimension_distance_split() {
        // Odd binary length: one d = 2 class, the rest have d = 1.
        assert_eq!(closed_form_count(Field::Gf2, 7, 6, Some(1)).unwrap(), 3);
        assert_eq!(closed_form_count(Field::Gf2, 7, 6, Some(2)).unwrap(), 1);
        assert_eq!(closed_form_count(Field::Gf2, 6, 5, Some(1)).unwrap(), 3);
        assert_eq!(closed_form_count(Field::Gf2, 6, 5, Some(2)).unwrap(), 0);
        // Ternary: the d = 2 class disappears when 3 divides n.
        assert_eq!(closed_form_count(Field::Gf3, 9, 8, Some(2)).unwrap(), 0);
        assert_eq!(closed_form_count(Field::Gf3, 10, 9, Some(2)).unwrap(), 1);
    }

    #[test]
    fn lower_bound_reference_values() {
        assert_eq!(lower_bound(Field::Gf2, 6, 3).unwrap(), BigUint::one());
        assert_eq!(lower_bound(Field::Gf2, 14, 4).unwrap(), BigUint::from(18u32));
        assert_eq!(lower_bound(Field::Gf2, 14, 7).unwrap(), BigUint::from(9282u32));
        assert_eq!(lower_bound(Field::Gf3, 11, 4).unwrap(), BigUint::from(319u32));
        assert_eq!(lower_bound(Field::Gf3, 11, 5).unwrap(), BigUint::from(2869u32));
    }

    #[test]
    fn monomial_group_orders() {
        assert_eq!(monomial_group_order(Field::Gf2, 4), BigUint::from(24u32));
        assert_eq!(monomial_group_order(Field::Gf3, 4), BigUint::from(384u32));
    }
}
