use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{forward_owned, LaurentPoly};
use crate::error::{Error, Result};

/// An element of the rational function field `Q(q)`.
///
/// Canonical form: the denominator is a monic ordinary polynomial (lowest
/// exponent 0), every power of `q` is carried by the numerator, and numerator
/// and denominator are coprime. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

type Dense = Vec<BigRational>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Polynomial long division over Q; `b` must be nonzero and trimmed.
fn divrem(a: &[BigRational], b: &[BigRational]) -> (Dense, Dense) {
    let mut rem: Dense = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &c * bc;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn monic(mut p: Dense) -> Dense {
    trim(&mut p);
    if let Some(lead) = p.last().cloned() {
        for c in p.iter_mut() {
            *c /= &lead;
        }
    }
    p
}

fn gcd(a: &[BigRational], b: &[BigRational]) -> Dense {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

impl RatFunc {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (ns, n) = num.to_shifted_dense();
        let (ds, d) = den.to_shifted_dense();
        let g = gcd(&n, &d);
        let (mut n, _) = divrem(&n, &g);
        let (d, _) = divrem(&d, &g);
        let lead = d.last().unwrap().clone();
        let d = monic(d);
        for c in n.iter_mut() {
            *c /= &lead;
        }
        Self {
            num: LaurentPoly::from_dense(ns - ds, &n),
            den: LaurentPoly::from_dense(0, &d),
        }
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

    /// Returns the Laurent polynomial this equals, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.invert()?)
    }

    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval_at(q0)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval_at(q0)? / d)
    }

    /// Re-canonicalizes; a no-op on values built through the public API.
    pub fn canonicalized(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::canonical(p, LaurentPoly::one())
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        LaurentPoly::from_int(c).into()
    }
}

impl<'a> Add<&'a RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        RatFunc::canonical(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        RatFunc::canonical(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Mul<&'a RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] to get an error.
impl<'a> Div<&'a RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &'a RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(RatFunc, Add, add);
forward_owned!(RatFunc, Sub, sub);
forward_owned!(RatFunc, Mul, mul);
forward_owned!(RatFunc, Div, div);

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn invert_monomial() {
        let q2 = RatFunc::from(LaurentPoly::q_pow(2));
        assert_eq!(q2.invert().unwrap(), RatFunc::from(LaurentPoly::q_pow(-2)));
    }

    #[test]
    fn cancels_common_factors() {
        // (q^2 - 1) / (q - 1) = q + 1
        let f = RatFunc::new(lp("-1*q^0 + 1*q^2"), lp("-1*q^0 + 1*q^1")).unwrap();
        assert_eq!(f, RatFunc::from(lp("1*q^0 + 1*q^1")));
        // (q - q^-1) / (q^2 - 1) = q^-1
        let g = RatFunc::new(lp("-1*q^-1 + 1*q^1"), lp("-1*q^0 + 1*q^2")).unwrap();
        assert_eq!(g, RatFunc::from(LaurentPoly::q_pow(-1)));
    }

    #[test]
    fn denominator_is_monic_polynomial() {
        let f = RatFunc::new(LaurentPoly::one(), lp("2*q^-1 + 4*q^1")).unwrap();
        assert_eq!(f.denom().min_exp(), Some(0));
        assert!(f.denom().leading_coeff().unwrap().is_one());
        assert_eq!(f.numer(), &lp("1/4*q^1"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(RatFunc::zero().invert(), Err(Error::DivisionByZero));
    }

    #[test]
    fn quantum_integer_quotient() {
        // (q^2 - q^-2)/(q - q^-1) = q + q^-1
        let f = RatFunc::new(lp("-1*q^-2 + 1*q^2"), lp("-1*q^-1 + 1*q^1")).unwrap();
        assert_eq!(f.as_laurent(), Some(&lp("1*q^-1 + 1*q^1")));
    }
}
