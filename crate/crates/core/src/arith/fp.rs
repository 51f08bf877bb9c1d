use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{ArithError, Field, Rat};

/// A prime modulus, checked by trial division at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(ArithError::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn divides(self, n: &BigInt) -> bool {
        (n % BigInt::from(self.0)).to_u64() == Some(0)
    }

    /// Primes in increasing order starting from 2.
    pub fn ascending() -> impl Iterator<Item = Prime> {
        (2u64..).filter(|&n| is_prime(n)).map(Prime)
    }

    pub fn elem(self, value: u64) -> FpElem {
        FpElem {
            value: value % self.0,
            p: self.0,
        }
    }

    pub fn zero(self) -> FpElem {
        self.elem(0)
    }

    pub fn one(self) -> FpElem {
        self.elem(1)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of Z/p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpElem {
    value: u64,
    p: u64,
}

impl FpElem {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    fn check(self, rhs: FpElem) {
        assert_eq!(self.p, rhs.p, "mixed moduli in Z/p arithmetic");
    }

    pub fn pow(self, mut exp: u64) -> FpElem {
        let mut base = self;
        let mut acc = FpElem { value: 1 % self.p, p: self.p };
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Debug for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for FpElem {
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn zero_like(&self) -> Self {
        FpElem { value: 0, p: self.p }
    }

    fn one_like(&self) -> Self {
        FpElem { value: 1 % self.p, p: self.p }
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check(*rhs);
        let v = (self.value as u128 + rhs.value as u128) % self.p as u128;
        FpElem { value: v as u64, p: self.p }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check(*rhs);
        let v = (self.value as u128 * rhs.value as u128) % self.p as u128;
        FpElem { value: v as u64, p: self.p }
    }

    fn neg(&self) -> Self {
        FpElem {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: x^(p-2) = x^-1 for prime p.
        Some(self.pow(self.p - 2))
    }
}

/// Reduces a rational into Z/p; fails when `p` divides the denominator.
pub fn rat_to_fp(x: &Rat, p: Prime) -> Result<FpElem, ArithError> {
    let modulus = BigInt::from(p.get());
    let den = x.denom().mod_floor(&modulus);
    let den = p.elem(den.to_u64().expect("reduced below p"));
    let den_inv = den.inv().ok_or(ArithError::PrimeDividesDenominator {
        p: p.get(),
        value: x.to_string(),
    })?;
    let num = x.numer().mod_floor(&modulus);
    let num = p.elem(num.to_u64().expect("reduced below p"));
    Ok(num.mul(&den_inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = Prime::ascending().take(8).map(Prime::get).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(91).is_err());
        assert!(Prime::new(97).is_ok());
    }

    #[test]
    fn rat_to_fp_examples() {
        let p5 = Prime::new(5).unwrap();
        assert_eq!(rat_to_fp(&Rat::new(1, 2).unwrap(), p5).unwrap().value(), 3);
        assert_eq!(rat_to_fp(&Rat::zero(), p5).unwrap().value(), 0);
        assert_eq!(rat_to_fp(&Rat::new(-1, 3).unwrap(), p5).unwrap().value(), 3);
        let p3 = Prime::new(3).unwrap();
        assert!(matches!(
            rat_to_fp(&Rat::new(1, 3).unwrap(), p3),
            Err(ArithError::PrimeDividesDenominator { p: 3, .. })
        ));
    }

    #[test]
    fn inverse_mod_p() {
        let p = Prime::new(7).unwrap();
        for v in 1..7 {
            let x = p.elem(v);
            assert_eq!(x.mul(&x.inv().unwrap()), p.one());
        }
        assert!(p.zero().inv().is_none());
    }
}
