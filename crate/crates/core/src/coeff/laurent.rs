use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer Laurent polynomial in `q`.
///
/// Stored densely as `q^low * (c_0 + c_1 q + ... + c_d q^d)` with `c_0` and
/// `c_d` nonzero. The zero polynomial has no coefficients and `low == 0`, so
/// structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_dense(exp, vec![c.into()])
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    /// `q^low * sum coeffs[k] q^k`, trimmed.
    pub fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        Self {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient (`None` for zero).
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn trailing_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    /// If `self = c q^e`, returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        (self.coeffs.len() == 1).then(|| (&self.coeffs[0], self.low))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        match self.high_degree() {
            None => Self::zero(),
            Some(h) => Self {
                low: -h,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// Member of `Z[q]`.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    /// Member of `qZ[q]`.
    pub fn in_q_zq(&self) -> bool {
        self.is_zero() || self.low >= 1
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of the integer coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// The polynomial part `c_0 + ... + c_d q^d`, i.e. `self` with the unit `q^low` removed.
    pub(crate) fn unit_free(&self) -> Self {
        Self {
            low: 0,
            coeffs: self.coeffs.clone(),
        }
    }

    fn exact_div_scalar(&self, c: &BigInt) -> Self {
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Gcd in `Z[q, q^{-1}]`, normalized to lowest exponent 0 and positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let ca = self.content();
        let cb = other.content();
        let c = ca.gcd(&cb);
        let a = self.unit_free().exact_div_scalar(&ca);
        let b = other.unit_free().exact_div_scalar(&cb);
        let g = primitive_gcd(a, b);
        g.scale(&c).normalize_unit()
    }

    fn normalize_unit(&self) -> Self {
        let mut p = self.unit_free();
        if p.leading_coeff().is_some_and(|c| c.is_negative()) {
            p = -p;
        }
        p
    }

    /// Exact division in `Z[q, q^{-1}]`; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, e)) = d.as_monomial() {
            if self.coeffs.iter().all(|x| x.is_multiple_of(c)) {
                return Some(self.exact_div_scalar(c).shift(-e));
            }
            return None;
        }
        let (mut r, dd) = (self.coeffs.clone(), &d.coeffs);
        let (n, m) = (r.len(), dd.len());
        if n < m {
            return None;
        }
        let lead = dd.last().unwrap();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = &r[k + m - 1];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(lead);
            if !rem.is_zero() {
                return None;
            }
            for (j, dj) in dd.iter().enumerate() {
                r[k + j] -= &qk * dj;
            }
            quot[k] = qk;
        }
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - d.low, quot))
    }
}

/// Gcd of two primitive polynomials via the primitive polynomial remainder sequence.
fn primitive_gcd(mut a: LaurentPoly, mut b: LaurentPoly) -> LaurentPoly {
    if a.coeffs.len() < b.coeffs.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.coeffs.len() == 1 {
            return LaurentPoly::one();
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_zero() {
            r
        } else {
            let c = r.content();
            r.exact_div_scalar(&c)
        };
    }
    a
}

fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut r = a.coeffs.clone();
    let m = b.coeffs.len();
    let lead = b.coeffs.last().unwrap();
    while r.len() >= m {
        let top = r.last().unwrap().clone();
        if top.is_zero() {
            r.pop();
            continue;
        }
        let k = r.len() - m;
        for x in r.iter_mut() {
            *x *= lead;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            r[k + j] -= &top * bj;
        }
        r.pop();
    }
    LaurentPoly::from_dense(0, r)
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (abs.is_one(), e) {
                (_, 0) => write!(f, "{abs}")?,
                (true, 1) => write!(f, "q")?,
                (true, _) => write!(f, "q^{e}")?,
                (false, 1) => write!(f, "{abs}q")?,
                (false, _) => write!(f, "{abs}q^{e}")?,
            }
        }
        Ok(())
    }
}

fn add_dense(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.high_degree().unwrap().max(b.high_degree().unwrap());
    let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
    for (k, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + k] += c;
    }
    for (k, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - low) as usize + k];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(low, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        add_dense(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        add_dense(self, rhs, true)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        &self - &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        // in-place when the support of rhs fits
        if !self.is_zero() && rhs.low >= self.low && rhs.high_degree() <= self.high_degree() {
            let off = (rhs.low - self.low) as usize;
            for (k, c) in rhs.coeffs.iter().enumerate() {
                self.coeffs[off + k] += c;
            }
            if self.coeffs.first().is_some_and(|c| c.is_zero())
                || self.coeffs.last().is_some_and(|c| c.is_zero())
            {
                *self = Self::from_dense(self.low, std::mem::take(&mut self.coeffs));
            }
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((c, e)) = rhs.as_monomial() {
            return self.scale(c).shift(e);
        }
        if let Some((c, e)) = self.as_monomial() {
            return rhs.scale(c).shift(e);
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        &self * &rhs
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary total order (by support, then coefficients); used only for deterministic sorting.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low
            .cmp(&other.low)
            .then_with(|| self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}
