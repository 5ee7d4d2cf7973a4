//! Exact coefficient arithmetic over `Q(q)`.

mod laurent;
mod rational;
mod serde_impl;

pub use laurent::LaurentPoly;
pub use rational::RationalFunction;

use num_traits::{One, Signed};

/// Bar involution `q -> q^{-1}`.
pub fn bar(x: &RationalFunction) -> RationalFunction {
    x.bar()
}

/// The quantum integer `[m] = q^{m-1} + q^{m-3} + ... + q^{1-m}`.
pub fn quantum_integer(m: u32) -> LaurentPoly {
    let m = m as i64;
    LaurentPoly::from_terms((0..m).map(|k| (m - 1 - 2 * k, 1)))
}

/// `[m]! = [m][m-1]...[1]`, with `[0]! = 1`.
pub fn quantum_factorial(m: u32) -> LaurentPoly {
    (1..=m).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_integer(k))
}

/// `psi_m(q^2) = prod_{k=1}^m (1 - q^{2k})`.
pub fn psi(m: u32) -> LaurentPoly {
    (1..=m as i64).fold(LaurentPoly::one(), |acc, k| {
        &acc * &LaurentPoly::from_terms([(0, 1), (2 * k, -1)])
    })
}

/// Sign of a proportionality relation.
pub type Sign = i8;

/// Returns `(s, n)` with `x = s q^n y`, `s = +-1`, if such a relation holds.
///
/// Two zeros are related by `(+1, 0)`; a zero and a nonzero value never are.
pub fn proportionality(x: &RationalFunction, y: &RationalFunction) -> Option<(Sign, i64)> {
    match (x.is_zero(), y.is_zero()) {
        (true, true) => return Some((1, 0)),
        (true, false) | (false, true) => return None,
        _ => {}
    }
    // x / y in lowest terms must be a signed monomial
    let ratio = x.checked_div(y)?;
    let p = ratio.as_laurent()?;
    let (c, e) = p.as_monomial()?;
    if c.is_one() {
        Some((1, e))
    } else if c.is_negative() && (-c).is_one() {
        Some((-1, e))
    } else {
        None
    }
}

/// Checks that `xs[k] = s q^n ys[k]` for one common `(s, n)` over every index.
///
/// Both slices must have equal length; all-zero pairs are skipped. Returns
/// `None` if the relation is not uniform or the supports differ; returns
/// `Some((1, 0))` when both sides vanish identically.
pub fn uniform_proportionality<'a>(
    pairs: impl IntoIterator<Item = (&'a RationalFunction, &'a RationalFunction)>,
) -> Option<(Sign, i64)> {
    let mut found: Option<(Sign, i64)> = None;
    for (x, y) in pairs {
        if x.is_zero() && y.is_zero() {
            continue;
        }
        let r = proportionality(x, y)?;
        match found {
            None => found = Some(r),
            Some(f) if f != r => return None,
            _ => {}
        }
    }
    Some(found.unwrap_or((1, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn quantum_factorials() {
        assert_eq!(quantum_factorial(0), LaurentPoly::one());
        assert_eq!(quantum_factorial(2), lp(&[(1, 1), (-1, 1)]));
        // telescoping: [m] (q - q^-1) = q^m - q^-m
        let qm = lp(&[(1, 1), (-1, -1)]);
        for m in 1..8 {
            assert_eq!(
                &quantum_integer(m) * &qm,
                lp(&[(m as i64, 1), (-(m as i64), -1)])
            );
        }
        let three = &lp(&[(2, 1), (0, 1), (-2, 1)]) * &lp(&[(1, 1), (-1, 1)]);
        assert_eq!(quantum_factorial(3), three);
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(0), LaurentPoly::one());
        assert_eq!(psi(1), lp(&[(0, 1), (2, -1)]));
        assert_eq!(psi(2), &lp(&[(0, 1), (2, -1)]) * &lp(&[(0, 1), (4, -1)]));
        for m in 0..=10 {
            let p = psi(m);
            assert_eq!(p.low_degree(), Some(0));
            assert!(p.coeff(0).is_one());
        }
    }

    #[test]
    fn quantum_factorial_bar_symmetric() {
        for m in 0..=10 {
            assert_eq!(quantum_factorial(m).bar(), quantum_factorial(m));
        }
    }

    #[test]
    fn proportionality_examples() {
        let r = |t: &[(i64, i64)]| RationalFunction::from(lp(t));
        assert_eq!(proportionality(&r(&[(3, 1)]), &r(&[(1, 1)])), Some((1, 2)));
        assert_eq!(
            proportionality(&r(&[(0, 1), (1, 1)]), &r(&[(0, 1), (2, 1)])),
            None
        );
        let x = r(&[(-1, -1), (1, 1)]);
        let y = r(&[(0, 1), (2, -1)]);
        assert_eq!(proportionality(&x, &y), Some((-1, -1)));
        assert_eq!(
            proportionality(&RationalFunction::zero(), &RationalFunction::zero()),
            Some((1, 0))
        );
        assert_eq!(proportionality(&RationalFunction::zero(), &y), None);
        assert_eq!(proportionality(&r(&[(0, 2)]), &r(&[(0, 1)])), None);
    }
}
