use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use num_rational::BigRational;

use super::{ArithError, Rat, ZPoly};

/// A univariate polynomial over Q in the variable `t`, coefficients lowest
/// degree first. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rat>", into = "Vec<Rat>")]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl From<Vec<Rat>> for Poly {
    fn from(coeffs: Vec<Rat>) -> Self {
        Poly::new(coeffs)
    }
}

impl From<Poly> for Vec<Rat> {
    fn from(p: Poly) -> Self {
        p.coeffs
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.inner().is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Poly::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].inner().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.inner().is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Scalar multiple with leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) if lc.inner().is_one() => self.clone(),
            Some(lc) => {
                let inv = Rat::from_inner(lc.inner().recip());
                self.scale(&inv)
            }
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, s: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| &(&acc * s) + c)
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rat::zero();
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&zero);
                    let b = rhs.coeffs.get(i).unwrap_or(&zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (a, da) = ZPoly::from_poly(self);
        let (b, db) = ZPoly::from_poly(rhs);
        let denom = da * db;
        Poly::new(
            a.mul(&b)
                .coeffs()
                .iter()
                .map(|c| Rat::from_inner(BigRational::new(c.clone(), denom.clone())))
                .collect(),
        )
    }

    /// Euclidean division over Q: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), ArithError> {
        let d_deg = divisor.degree().ok_or(ArithError::DivisionByZero)?;
        let lc_inv = Rat::from_inner(divisor.leading().unwrap().inner().recip());
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + d_deg] * &lc_inv;
            if !c.inner().is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = &rem[i + j] - &(&c * dc);
                }
            }
            quot[i] = c;
        }
        rem.truncate(d_deg);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, ArithError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ArithError::InexactDivision)
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        match other.div_rem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }

    /// Monic greatest common divisor, via the primitive remainder sequence
    /// over Z.
    pub fn gcd(&self, rhs: &Poly) -> Result<Poly, ArithError> {
        if self.is_zero() && rhs.is_zero() {
            return Err(ArithError::GcdOfZeros);
        }
        if self.degree() == Some(0) || rhs.degree() == Some(0) {
            return Ok(Poly::one());
        }
        let g = ZPoly::from_poly(self)
            .0
            .gcd(&ZPoly::from_poly(rhs).0)
            .expect("not both zero");
        Ok(g.to_poly().monic())
    }

    /// Monic least common multiple.
    pub fn lcm(&self, rhs: &Poly) -> Result<Poly, ArithError> {
        if self.is_zero() || rhs.is_zero() {
            return Err(ArithError::LcmOfZero);
        }
        let g = self.gcd(rhs)?;
        Ok(self.div_exact(&g)?.mul(rhs).monic())
    }

    /// Splits into an integer coefficient vector and a positive common
    /// denominator with `self = ints / denom`.
    pub(crate) fn to_integer_parts(&self) -> (Vec<BigInt>, BigInt) {
        let denom = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| Rat::lcm_int(&acc, c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        (ints, denom)
    }

}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.inner().is_zero() {
                continue;
            }
            let neg = c.inner().is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.inner().is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        // t^2 - 1 and t^2 - 2t + 1 share exactly t - 1.
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])).unwrap(), Poly::one());
        let q = p(&[4, 0, 2]);
        assert_eq!(q.gcd(&Poly::zero()).unwrap(), q.monic());
        assert_eq!(Poly::zero().gcd(&q).unwrap(), p(&[2, 0, 1]));
        assert!(matches!(
            Poly::zero().gcd(&Poly::zero()),
            Err(ArithError::GcdOfZeros)
        ));
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let a = Poly::new(vec![Rat::new(-1, 2).unwrap(), Rat::new(1, 2).unwrap()]);
        let b = Poly::new(vec![Rat::new(-3, 7).unwrap(), Rat::zero(), Rat::new(3, 7).unwrap()]);
        assert_eq!(a.gcd(&b).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(p(&[0, 1]).lcm(&p(&[0, 0, 1])).unwrap(), p(&[0, 0, 1]));
        assert_eq!(p(&[-1, 1]).lcm(&p(&[1, 1])).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(p(&[0, 2]).lcm(&p(&[0, 3])).unwrap(), p(&[0, 1]));
        assert!(matches!(
            p(&[1]).lcm(&Poly::zero()),
            Err(ArithError::LcmOfZero)
        ));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 0, 1]).eval(&Rat::from_int(2)), Rat::from_int(5));
        assert_eq!(Poly::zero().eval(&Rat::new(3, 7).unwrap()), Rat::zero());
        assert_eq!(p(&[-3, 1]).eval(&Rat::from_int(3)), Rat::zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, -3, 0, 2, 1]);
        let b = p(&[1, 0, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 1]).to_string(), "t^2 - 2*t + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
