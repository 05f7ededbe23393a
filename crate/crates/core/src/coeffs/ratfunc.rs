use std::fmt;

use super::rational::Rational;

/// Dense univariate polynomial in the parameter `q` over the rationals.
/// `coeffs[k]` is the coefficient of `q^k`; the top coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        QPoly::constant(Rational::one())
    }

    /// `q`
    pub fn q() -> Self {
        QPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        let out = (0..len)
            .map(|k| {
                self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero)
            })
            .collect();
        QPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.coeffs[dd].inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * b);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * q) + c)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Element of the rational function field Q(q): `numer / denom` with a monic
/// denominator and coprime numerator and denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    numer: QPoly,
    denom: QPoly,
}

impl RatFunc {
    /// Builds a reduced fraction; panics on a zero denominator.
    pub fn new(numer: QPoly, denom: QPoly) -> Self {
        assert!(!denom.is_zero(), "zero denominator in rational function");
        if numer.is_zero() {
            return RatFunc::zero();
        }
        let g = numer.gcd(&denom);
        let (mut n, _) = numer.div_rem(&g);
        let (mut d, _) = denom.div_rem(&g);
        let lc = d.leading().unwrap().inv().unwrap();
        n = n.scale(&lc);
        d = d.scale(&lc);
        RatFunc { numer: n, denom: d }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc {
            numer: p,
            denom: QPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RatFunc::from_poly(QPoly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(QPoly::one())
    }

    pub fn q() -> Self {
        RatFunc::from_poly(QPoly::q())
    }

    pub fn numer(&self) -> &QPoly {
        &self.numer
    }

    pub fn denom(&self) -> &QPoly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    /// The value as a rational constant, if it does not depend on `q`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.numer.is_constant() && self.denom.is_one() {
            Some(self.numer.coeffs().first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.denom == other.denom {
            return RatFunc::new(self.numer.add(&other.numer), self.denom.clone());
        }
        RatFunc::new(
            self.numer
                .mul(&other.denom)
                .add(&other.numer.mul(&self.denom)),
            self.denom.mul(&other.denom),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            numer: self.numer.neg(),
            denom: self.denom.clone(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.denom.is_one() && other.denom.is_one() {
            return RatFunc::from_poly(self.numer.mul(&other.numer));
        }
        RatFunc::new(self.numer.mul(&other.numer), self.denom.mul(&other.denom))
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.denom.clone(), self.numer.clone()))
        }
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            numer: self.numer.scale(c),
            denom: self.denom.clone(),
        }
    }

    /// Evaluates at a rational point; `None` where the denominator vanishes.
    pub fn eval(&self, q: &Rational) -> Option<Rational> {
        let d = self.denom.eval(q);
        if d.is_zero() {
            None
        } else {
            Some(&self.numer.eval(q) / &d)
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({})/({})", self.numer, self.denom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn gcd_is_monic() {
        // (q-1)(q+2) and 3(q-1)
        let a = qp(&[-2, 1, 1]);
        let b = qp(&[-3, 3]);
        assert_eq!(a.gcd(&b), qp(&[-1, 1]));
    }

    #[test]
    fn fraction_cancels_to_one() {
        let a = RatFunc::new(qp(&[-1, 1]), qp(&[1, 1]));
        let b = RatFunc::new(qp(&[2]), qp(&[1, 1]));
        let s = a.add(&b);
        assert!(s.is_one());
        assert_eq!(s.to_string(), "1");
    }

    #[test]
    fn display_descending_powers() {
        let p = qp(&[1, 0, -1]);
        assert_eq!(p.to_string(), "-q^2 + 1");
        let r = RatFunc::new(qp(&[-1, 1]), qp(&[2, 2]));
        assert_eq!(r.to_string(), "(1/2*q - 1/2)/(q + 1)");
    }

    #[test]
    fn denominator_is_monic() {
        let r = RatFunc::new(qp(&[4]), qp(&[0, 2]));
        assert_eq!(r.denom(), &qp(&[0, 1]));
        assert_eq!(r.numer(), &qp(&[2]));
    }
}
