//! Exact coefficient fields.
//!
//! Two fields are supported: the rationals and the rational function field
//! Q(q) in one transcendental parameter. Both sit behind [`FieldElem`], a
//! tagged union; all elements taking part in one computation carry the same
//! tag. The operator overloads on `&FieldElem` panic on a tag mismatch, which
//! the algebra layer rules out up front; the `checked_*` methods report it as
//! an [`Error::FieldMismatch`] instead.

mod rational;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub use ratfunc::{QPoly, RatFunc};
pub use rational::Rational;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FieldKind {
    Rational,
    RatFunc,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::RatFunc => write!(f, "Q(q)"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FieldElem {
    Rat(Rational),
    Func(RatFunc),
}

impl FieldElem {
    pub fn zero(kind: FieldKind) -> Self {
        match kind {
            FieldKind::Rational => FieldElem::Rat(Rational::zero()),
            FieldKind::RatFunc => FieldElem::Func(RatFunc::zero()),
        }
    }

    pub fn one(kind: FieldKind) -> Self {
        match kind {
            FieldKind::Rational => FieldElem::Rat(Rational::one()),
            FieldKind::RatFunc => FieldElem::Func(RatFunc::one()),
        }
    }

    pub fn from_int(kind: FieldKind, n: i64) -> Self {
        FieldElem::from_rational(kind, Rational::from(n))
    }

    pub fn from_rational(kind: FieldKind, r: Rational) -> Self {
        match kind {
            FieldKind::Rational => FieldElem::Rat(r),
            FieldKind::RatFunc => FieldElem::Func(RatFunc::from_rational(r)),
        }
    }

    /// The parameter `q` of Q(q).
    pub fn q() -> Self {
        FieldElem::Func(RatFunc::q())
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            FieldElem::Rat(_) => FieldKind::Rational,
            FieldElem::Func(_) => FieldKind::RatFunc,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_zero(),
            FieldElem::Func(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_one(),
            FieldElem::Func(f) => f.is_one(),
        }
    }

    /// The value as a plain rational, if it is one (for Q(q): a constant).
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            FieldElem::Rat(r) => Some(r.clone()),
            FieldElem::Func(f) => f.as_constant(),
        }
    }

    /// Re-tags a rational constant into `kind`; fails for genuine functions of q.
    pub fn convert(&self, kind: FieldKind) -> Result<FieldElem> {
        if self.kind() == kind {
            return Ok(self.clone());
        }
        match self.as_rational() {
            Some(r) => Ok(FieldElem::from_rational(kind, r)),
            None => Err(Error::FieldMismatch(self.kind(), kind)),
        }
    }

    fn check(&self, other: &FieldElem) -> Result<()> {
        if self.kind() == other.kind() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.kind(), other.kind()))
        }
    }

    pub fn checked_add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(self * &other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElem> {
        match self {
            FieldElem::Rat(r) => r.inv().map(FieldElem::Rat).ok_or(Error::DivisionByZero),
            FieldElem::Func(f) => f.inv().map(FieldElem::Func).ok_or(Error::DivisionByZero),
        }
    }

    pub fn pow(&self, exp: u32) -> FieldElem {
        let mut acc = FieldElem::one(self.kind());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by a rational scalar (valid for either tag).
    pub fn scale(&self, c: &Rational) -> FieldElem {
        match self {
            FieldElem::Rat(r) => FieldElem::Rat(r * c),
            FieldElem::Func(f) => FieldElem::Func(f.scale(c)),
        }
    }

    /// Sign and magnitude for printing as a term coefficient. Returns `None`
    /// when the value prints as a parenthesized compound expression instead.
    pub(crate) fn signed_parts(&self) -> Option<(bool, String)> {
        let simple = |r: &Rational| (r.is_negative(), r.abs().to_string());
        match self {
            FieldElem::Rat(r) => Some(simple(r)),
            FieldElem::Func(f) => {
                if !f.denom().is_one() || f.numer().term_count() != 1 {
                    return None;
                }
                let lc = f.numer().leading().unwrap();
                let mag = QPoly::from_coeffs(f.numer().coeffs().iter().map(|c| c.abs()).collect());
                Some((lc.is_negative(), mag.to_string()))
            }
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rat(r) => write!(f, "{r}"),
            FieldElem::Func(r) => write!(f, "{r}"),
        }
    }
}

fn mismatch(a: &FieldElem, b: &FieldElem) -> ! {
    panic!("coefficient field mismatch: {} vs {}", a.kind(), b.kind())
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &'a FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a + b),
            (FieldElem::Func(a), FieldElem::Func(b)) => FieldElem::Func(a.add(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &'a FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a - b),
            (FieldElem::Func(a), FieldElem::Func(b)) => FieldElem::Func(a.sub(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &'a FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a * b),
            (FieldElem::Func(a), FieldElem::Func(b)) => FieldElem::Func(a.mul(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero or a tag mismatch.
    fn div(self, rhs: &'a FieldElem) -> FieldElem {
        self.checked_div(rhs).expect("invalid field division")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rat(a) => FieldElem::Rat(-a),
            FieldElem::Func(a) => FieldElem::Func(a.neg()),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

/// `a + b`, reporting a tag mismatch as an error.
pub fn field_add(a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
    a.checked_add(b)
}

pub fn field_mul(a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
    a.checked_mul(b)
}

pub fn field_inv(a: &FieldElem) -> Result<FieldElem> {
    a.inv()
}

pub fn field_neg(a: &FieldElem) -> FieldElem {
    -a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> FieldElem {
        FieldElem::Rat(Rational::new(n, d))
    }

    fn qpoly(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn rational_examples() {
        assert_eq!(field_add(&rat(1, 2), &rat(1, 3)).unwrap(), rat(5, 6));
        let x = rat(-4, 9);
        assert_eq!(field_add(&x, &field_neg(&x)).unwrap(), rat(0, 1));
        assert_eq!(field_mul(&rat(2, 3), &rat(3, 2)).unwrap(), rat(1, 1));
    }

    #[test]
    fn ratfunc_examples() {
        let q = FieldElem::q();
        let inv = field_inv(&q).unwrap();
        assert_eq!(inv.to_string(), "(1)/(q)");
        let a = FieldElem::Func(RatFunc::from_poly(qpoly(&[-1, 1])));
        let b = FieldElem::Func(RatFunc::from_poly(qpoly(&[1, 1])));
        assert_eq!(field_mul(&a, &b).unwrap().to_string(), "q^2 - 1");
        let c = FieldElem::Func(RatFunc::new(qpoly(&[-1, 1]), qpoly(&[1, 1])));
        let d = FieldElem::Func(RatFunc::new(qpoly(&[2]), qpoly(&[1, 1])));
        assert!(field_add(&c, &d).unwrap().is_one());
    }

    #[test]
    fn errors() {
        assert_eq!(field_inv(&rat(0, 1)), Err(Error::DivisionByZero));
        assert!(matches!(
            field_add(&rat(1, 1), &FieldElem::q()),
            Err(Error::FieldMismatch(..))
        ));
    }
}
