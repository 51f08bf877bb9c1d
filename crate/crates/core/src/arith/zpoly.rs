use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, Rat};

/// Polynomial over Z, lowest degree first, no trailing zeros.
///
/// Internal workhorse for products and gcds; values cross into the public
/// API as [`Poly`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        ZPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &ZPoly) -> ZPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o += s;
        }
        ZPoly::new(out)
    }

    pub fn add_assign_mul(&mut self, a: &ZPoly, b: &ZPoly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                self.coeffs[i + j] += x * y;
            }
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn sub(&self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        ZPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        out.add_assign_mul(self, rhs);
        out
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content; the sign is kept.
    pub fn primitive(&self) -> ZPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    pub fn eval(&self, s: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| &(&acc * s) + &Rat::from_int(c.clone()))
    }

    /// Value at `t0` modulo `m`, in `[0, m)`.
    pub fn eval_mod(&self, t0: u64, m: u64) -> u64 {
        let mm = BigInt::from(m);
        self.coeffs.iter().rev().fold(0u64, |acc, c| {
            let c = c.mod_floor(&mm);
            let c = u64::try_from(c).expect("reduced below modulus");
            ((acc as u128 * t0 as u128 + c as u128) % m as u128) as u64
        })
    }

    /// Pseudo-remainder with content removed at every step.
    fn primitive_pseudo_rem(&self, b: &ZPoly) -> ZPoly {
        let mut r = self.coeffs.clone();
        let db = b.coeffs.len() - 1;
        let lb = &b.coeffs[db];
        while r.len() > db {
            let lr = r.last().expect("nonempty").clone();
            let shift = r.len() - 1 - db;
            let g = lr.gcd(lb);
            let (mr, mb) = (lb / &g, &lr / &g);
            for c in r.iter_mut() {
                *c *= &mr;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &mb * bc;
            }
            r = ZPoly::new(r).primitive().coeffs;
        }
        ZPoly::new(r)
    }

    /// Primitive gcd with positive leading coefficient; `None` when both
    /// inputs are zero.
    pub fn gcd(&self, rhs: &ZPoly) -> Option<ZPoly> {
        let normalize = |p: ZPoly| {
            let p = p.primitive();
            if p.coeffs.last().is_some_and(Signed::is_negative) {
                p.scale(&BigInt::from(-1))
            } else {
                p
            }
        };
        match (self.is_zero(), rhs.is_zero()) {
            (true, true) => return None,
            (true, false) => return Some(normalize(rhs.clone())),
            (false, true) => return Some(normalize(self.clone())),
            _ => {}
        }
        let (mut a, mut b) = (self.primitive(), rhs.primitive());
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.coeffs.len() == 1 {
                return Some(ZPoly::one());
            }
            let r = a.primitive_pseudo_rem(&b);
            a = b;
            b = r;
        }
        Some(normalize(a))
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.iter().cloned().map(Rat::from_int).collect())
    }

    /// Clears denominators: `p = z / d` with `d > 0`.
    pub fn from_poly(p: &Poly) -> (ZPoly, BigInt) {
        let (ints, d) = p.to_integer_parts();
        (ZPoly::new(ints), d)
    }
}
