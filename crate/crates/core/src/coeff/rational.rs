use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::LaurentPoly;

/// Element of `Q(q)` stored as a reduced fraction of Laurent polynomials.
///
/// Canonical form: the denominator has lowest exponent 0 and a positive
/// leading coefficient, and numerator and denominator are coprime in
/// `Z[q, q^{-1}]`. Equal values therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn q_power(e: i64) -> Self {
        Self::from(LaurentPoly::monomial(1, e))
    }

    /// `num / den`, reduced. Panics if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::normalize_units(num, den)
    }

    /// Puts a coprime pair into canonical unit normalization.
    fn normalize_units(num: LaurentPoly, den: LaurentPoly) -> Self {
        let shift = -den.low_degree().unwrap();
        let (mut num, mut den) = (num.shift(shift), den.shift(shift));
        if den.leading_coeff().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        if let Some((c, _)) = den.as_monomial() {
            // den is a positive constant here
            if !c.is_one() {
                if let Some(n) = num.div_exact(&den) {
                    return Self {
                        num: n,
                        den: LaurentPoly::one(),
                    };
                }
            }
        }
        Self { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial, if it is one.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn into_laurent(self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num)
        } else {
            None
        }
    }

    /// `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        if self.den.is_one() {
            return Self::from(self.num.bar());
        }
        Self::normalize_units(self.num.bar(), self.den.bar())
    }

    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize_units(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        if self.den.is_one() {
            return Self::from(&self.num * p);
        }
        self * &Self::from(p.clone())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_laurent(&LaurentPoly::monomial(c.clone(), 0))
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from(LaurentPoly::from(c))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        // a/(g b') + c/(g d') = (a d' + c b') / (g b' d'); only g can share factors with the sum.
        let g = self.den.gcd(&rhs.den);
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let t = &(&self.num * &d1) + &(&rhs.num * &b1);
        if t.is_zero() {
            return RationalFunction::zero();
        }
        let g2 = t.gcd(&g);
        let num = t.div_exact(&g2).unwrap();
        let den = &(&b1 * &d1) * &g.div_exact(&g2).unwrap();
        RationalFunction::normalize_units(num, den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from(&self.num * &rhs.num);
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = rhs.den.div_exact(&g1).unwrap();
        let c = rhs.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        RationalFunction::normalize_units(&a * &c, &b * &d)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero; see [`RationalFunction::checked_div`].
    fn div(self, rhs: Self) -> RationalFunction {
        self.checked_div(rhs)
            .expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: Self) -> RationalFunction {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&RationalFunction> for RationalFunction {
    fn add_assign(&mut self, rhs: &RationalFunction) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&RationalFunction> for RationalFunction {
    fn sub_assign(&mut self, rhs: &RationalFunction) {
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn rf(n: &[(i64, i64)], d: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::new(lp(n), lp(d))
    }

    #[test]
    fn canonical_form_is_unique() {
        // (q - q^-1)/(1 - q^2) = -q^-1
        let x = rf(&[(1, 1), (-1, -1)], &[(0, 1), (2, -1)]);
        assert_eq!(x, RationalFunction::from(lp(&[(-1, -1)])));
        let y = rf(&[(0, 2)], &[(0, 4), (1, 4)]);
        let z = rf(&[(3, -1)], &[(3, -2), (4, -2)]);
        assert_eq!(y, z);
        assert_eq!(y.denom(), &lp(&[(0, 2), (1, 2)]));
    }

    #[test]
    fn spec_bar_example() {
        let x = rf(&[(1, 1), (-1, -1)], &[(0, 1), (2, -1)]);
        let b = x.bar();
        assert_eq!(b, rf(&[(-1, 1), (1, -1)], &[(0, 1), (-2, -1)]));
        assert_eq!(b.bar(), x);
    }

    #[test]
    fn field_ops() {
        let a = rf(&[(0, 1)], &[(0, 1), (2, -1)]);
        let b = rf(&[(1, 1)], &[(0, 1), (1, 1)]);
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert!((&a - &a).is_zero());
        assert!(a.inv().unwrap().denom().is_one());
    }
}
