//! Matrix representations: the regular representation of a finite group,
//! the block representation of `G x H` on `Q[G] + Q[H]`, and its lift to a
//! representation of `G * H` over `Q(t)`.
//!
//! The lift keeps `G` acting on its block and conjugates the `H` block
//! action by `C(t) = I + t R`. With `R = 0` the two factors commute and the
//! image is a quotient of `G x H`; a mixing `R` separates them. Injectivity
//! is checked exactly on every reduced word up to a chosen length.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::{ArithError, Field, FpElem, Matrix, Poly, Prime, Rat, RatFunc, ZPoly};
use crate::group::{FiniteGroup, FreeProduct, Side, Syllable, Word};

pub const DEFAULT_VERIFY_LEN: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("factor {0} is trivial; both factors must be non-trivial")]
    TrivialFactor(Side),
    #[error("verification length must be at least 2, got {0}")]
    VerifyLenTooShort(usize),
    #[error("representation is not faithful: rho({word}) = I (conjugator {conjugator})")]
    Collision {
        conjugator: Conjugator,
        word: String,
        syllables: Vec<Syllable>,
    },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Left-regular representation: `image(x)` sends basis vector `e_y` to `e_{xy}`.
#[derive(Clone, Debug)]
pub struct RegularRep {
    group: FiniteGroup,
    images: Vec<Matrix<Rat>>,
}

impl RegularRep {
    pub fn new(group: &FiniteGroup) -> Self {
        let n = group.order();
        let images = (0..n)
            .map(|x| {
                Matrix::from_fn(n, n, |i, j| {
                    if group.mul(x, j) == i {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
            })
            .collect();
        RegularRep {
            group: group.clone(),
            images,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn image(&self, x: usize) -> &Matrix<Rat> {
        &self.images[x]
    }
}

/// `G x H` acting on `Q[G] + Q[H]` by block-diagonal permutation matrices.
#[derive(Clone, Debug)]
pub struct ProductRep {
    dim: usize,
    images_g: Vec<Matrix<Rat>>,
    images_h: Vec<Matrix<Rat>>,
}

impl ProductRep {
    pub fn new(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self, RepError> {
        if g.is_trivial() {
            return Err(RepError::TrivialFactor(Side::G));
        }
        if h.is_trivial() {
            return Err(RepError::TrivialFactor(Side::H));
        }
        let (a, b) = (g.order(), h.order());
        let dim = a + b;
        let (rg, rh) = (RegularRep::new(g), RegularRep::new(h));
        let images_g = (0..a)
            .map(|x| block_diag(rg.image(x), &Matrix::identity(b, &Rat::one())))
            .collect();
        let images_h = (0..b)
            .map(|y| block_diag(&Matrix::identity(a, &Rat::one()), rh.image(y)))
            .collect();
        Ok(ProductRep {
            dim,
            images_g,
            images_h,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image(&self, s: Syllable) -> &Matrix<Rat> {
        match s.side {
            Side::G => &self.images_g[s.elem],
            Side::H => &self.images_h[s.elem],
        }
    }

    /// Image of the pair `(x, y)` in `G x H`.
    pub fn pair_image(&self, x: usize, y: usize) -> Matrix<Rat> {
        self.images_g[x]
            .mul(&self.images_h[y])
            .expect("blocks have equal dimension")
    }
}

fn block_diag(a: &Matrix<Rat>, b: &Matrix<Rat>) -> Matrix<Rat> {
    let (n, m) = (a.rows(), b.rows());
    Matrix::from_fn(n + m, n + m, |i, j| match (i < n, j < n) {
        (true, true) => a.get(i, j).clone(),
        (false, false) => b.get(i - n, j - n).clone(),
        _ => Rat::zero(),
    })
}

/// Choice of the mixing matrix `R` in `C(t) = I + t R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjugator {
    /// `R` is the all-ones matrix.
    AllOnes,
    /// `R` has entries drawn uniformly from `{-1, 0, 1}` by ChaCha8 seeded
    /// with the given value.
    Random(u64),
}

impl Conjugator {
    pub fn mixing_matrix(self, n: usize) -> Matrix<Rat> {
        match self {
            Conjugator::AllOnes => Matrix::from_fn(n, n, |_, _| Rat::one()),
            Conjugator::Random(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Matrix::from_fn(n, n, |_, _| Rat::from_int(rng.gen_range(-1i64..=1)))
            }
        }
    }

    /// `C(t) = I + t R` over Q(t).
    pub fn matrix(self, n: usize) -> Matrix<RatFunc> {
        let r = self.mixing_matrix(n);
        Matrix::from_fn(n, n, |i, j| {
            let c = if i == j { Rat::one() } else { Rat::zero() };
            RatFunc::from_poly(Poly::new(vec![c, r.get(i, j).clone()]))
        })
    }
}

impl fmt::Display for Conjugator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conjugator::AllOnes => f.write_str("all-ones"),
            Conjugator::Random(seed) => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for Conjugator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "all-ones" => Ok(Conjugator::AllOnes),
            other => other
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(Conjugator::Random)
                .ok_or_else(|| format!("unknown conjugator {s:?}; expected all-ones or random:<seed>")),
        }
    }
}

impl Serialize for Conjugator {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Conjugator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A matrix over Q(t) held as an integer polynomial matrix over one
/// integer polynomial denominator. Products never take gcds;
/// [`FracMatrix::to_ratfunc`] normalizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracMatrix {
    n: usize,
    num: Vec<ZPoly>,
    den: ZPoly,
}

impl FracMatrix {
    pub fn identity(n: usize) -> Self {
        FracMatrix {
            n,
            num: (0..n * n)
                .map(|k| if k / n == k % n { ZPoly::one() } else { ZPoly::zero() })
                .collect(),
            den: ZPoly::one(),
        }
    }

    pub fn from_ratfunc(m: &Matrix<RatFunc>) -> Self {
        let n = m.rows();
        let den = m
            .entries()
            .iter()
            .fold(Poly::one(), |acc, x| acc.lcm(x.den()).expect("nonzero denominators"));
        let num: Vec<Poly> = m
            .entries()
            .iter()
            .map(|x| x.num().mul(&den.div_exact(x.den()).expect("den divides lcm")))
            .collect();
        // One integer scale clears every rational coefficient.
        let scale = num
            .iter()
            .chain(std::iter::once(&den))
            .map(|p| ZPoly::from_poly(p).1)
            .fold(BigInt::from(1), |acc, d| acc.lcm(&d));
        let to_z = |p: &Poly| {
            let (z, d) = ZPoly::from_poly(p);
            z.scale(&(&scale / d))
        };
        FracMatrix {
            n,
            num: num.iter().map(to_z).collect(),
            den: to_z(&den),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    pub fn num(&self, i: usize, j: usize) -> &ZPoly {
        &self.num[i * self.n + j]
    }

    pub fn mul(&self, rhs: &FracMatrix) -> FracMatrix {
        let n = self.n;
        let mut num = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = ZPoly::zero();
                for k in 0..n {
                    acc.add_assign_mul(&self.num[i * n + k], &rhs.num[k * n + j]);
                }
                num.push(acc);
            }
        }
        FracMatrix {
            n,
            num,
            den: self.den.mul(&rhs.den),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.num.iter().enumerate().all(|(k, x)| {
            if k / self.n == k % self.n {
                *x == self.den
            } else {
                x.is_zero()
            }
        })
    }

    pub fn to_ratfunc(&self) -> Matrix<RatFunc> {
        let den = self.den.to_poly();
        Matrix::from_fn(self.n, self.n, |i, j| {
            RatFunc::new(self.num[i * self.n + j].to_poly(), den.clone())
                .expect("denominator is nonzero")
        })
    }

    /// Unnormalized numerators of `self - I` over the common denominator.
    pub fn minus_identity_numerators(&self) -> Vec<ZPoly> {
        (0..self.n * self.n)
            .map(|k| {
                if k / self.n == k % self.n {
                    self.num[k].sub(&self.den)
                } else {
                    self.num[k].clone()
                }
            })
            .collect()
    }

    /// Specializes `t = s`; `None` if the denominator vanishes at `s`.
    pub fn eval(&self, s: &Rat) -> Option<Matrix<Rat>> {
        let d_inv = self.den.eval(s).inv()?;
        Some(Matrix::from_fn(self.n, self.n, |i, j| {
            &self.num[i * self.n + j].eval(s) * &d_inv
        }))
    }

    /// Specializes `t = t0` and reduces modulo `p`; `None` if the
    /// denominator vanishes there.
    pub fn eval_mod(&self, t0: u64, p: Prime) -> Option<Matrix<FpElem>> {
        let d_inv = p.elem(self.den.eval_mod(t0, p.get())).inv()?;
        Some(Matrix::from_fn(self.n, self.n, |i, j| {
            p.elem(self.num[i * self.n + j].eval_mod(t0, p.get())).mul(&d_inv)
        }))
    }
}

/// A modular specialization used to screen words quickly. A product that is
/// not the identity at this point is not the identity over Q(t); products
/// that look like the identity are rechecked exactly.
#[derive(Clone, Debug)]
struct Screen {
    g: Vec<Matrix<FpElem>>,
    h: Vec<Matrix<FpElem>>,
}

const SCREEN_PRIME: u64 = 4_294_967_291;

impl Screen {
    fn new(frac_g: &[FracMatrix], frac_h: &[FracMatrix]) -> Option<Screen> {
        let p = Prime::new(SCREEN_PRIME).expect("screen modulus is prime");
        (0..16u64).map(|k| 1_000_003 + k).find_map(|t0| {
            let g = frac_g.iter().map(|m| m.eval_mod(t0, p)).collect::<Option<_>>()?;
            let h = frac_h.iter().map(|m| m.eval_mod(t0, p)).collect::<Option<_>>()?;
            Some(Screen { g, h })
        })
    }

    fn image(&self, s: Syllable) -> &Matrix<FpElem> {
        match s.side {
            Side::G => &self.g[s.elem],
            Side::H => &self.h[s.elem],
        }
    }
}

/// A representation of `G * H` over Q(t) with every syllable image
/// computed up front.
#[derive(Clone, Debug)]
pub struct FunctionFieldRep {
    fp: FreeProduct,
    conjugator: Conjugator,
    conjugator_matrix: Matrix<RatFunc>,
    images_g: Vec<Matrix<RatFunc>>,
    images_h: Vec<Matrix<RatFunc>>,
    frac_g: Vec<FracMatrix>,
    frac_h: Vec<FracMatrix>,
    verified_length: usize,
}

impl FunctionFieldRep {
    /// Builds the lift and checks `rho(w) != I` for every non-empty reduced
    /// word with at most `verify_len` syllables.
    pub fn build(
        fp: &FreeProduct,
        conjugator: Conjugator,
        verify_len: usize,
    ) -> Result<Self, RepError> {
        if verify_len < 2 {
            return Err(RepError::VerifyLenTooShort(verify_len));
        }
        let rep = FunctionFieldRep::build_unverified(fp, conjugator)?;
        if let Some(word) = rep.find_collision(verify_len) {
            return Err(RepError::Collision {
                conjugator,
                word: fp.display(&word),
                syllables: word.syllables().to_vec(),
            });
        }
        Ok(FunctionFieldRep {
            verified_length: verify_len,
            ..rep
        })
    }

    /// The lift with no injectivity check (`verified_length` is 0).
    pub fn build_unverified(fp: &FreeProduct, conjugator: Conjugator) -> Result<Self, RepError> {
        let product = ProductRep::new(fp.g(), fp.h())?;
        let n = product.dim();
        let c = conjugator.matrix(n);
        let c_inv = c.inverse("conjugator")?;
        let lift = |m: &Matrix<Rat>| m.map(|x| RatFunc::constant(x.clone()));
        let images_g: Vec<Matrix<RatFunc>> = (0..fp.g().order())
            .map(|x| lift(product.image(Syllable::new(Side::G, x))))
            .collect();
        let images_h = (0..fp.h().order())
            .map(|y| {
                let m = lift(product.image(Syllable::new(Side::H, y)));
                c.mul(&m)?.mul(&c_inv)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let frac_g = images_g.iter().map(FracMatrix::from_ratfunc).collect();
        let frac_h = images_h.iter().map(FracMatrix::from_ratfunc).collect();
        Ok(FunctionFieldRep {
            fp: fp.clone(),
            conjugator,
            conjugator_matrix: c,
            images_g,
            images_h,
            frac_g,
            frac_h,
            verified_length: 0,
        })
    }

    /// Depth-first search over reduced words, extending products one
    /// syllable at a time; returns the first word mapping to the identity.
    fn find_collision(&self, max_len: usize) -> Option<Word> {
        let screen = Screen::new(&self.frac_g, &self.frac_h);
        let mut prefix = Vec::new();
        match &screen {
            Some(screen) => {
                let start = Matrix::identity(self.dim(), &Prime::new(SCREEN_PRIME).ok()?.one());
                self.search(&mut prefix, &start, max_len, &|m, s| {
                    m.mul(screen.image(s)).expect("square")
                }, &|m, w| m.is_identity() && self.apply_frac(w).is_identity())
            }
            None => self.search(
                &mut prefix,
                &FracMatrix::identity(self.dim()),
                max_len,
                &|m, s| m.mul(self.frac(s)),
                &|m, _| m.is_identity(),
            ),
        }
    }

    fn search<M>(
        &self,
        prefix: &mut Vec<Syllable>,
        value: &M,
        max_len: usize,
        step: &dyn Fn(&M, Syllable) -> M,
        collides: &dyn Fn(&M, &Word) -> bool,
    ) -> Option<Word> {
        if !prefix.is_empty() {
            let w = self.fp.normalize(prefix);
            if collides(value, &w) {
                return Some(w);
            }
        }
        if prefix.len() == max_len {
            return None;
        }
        let sides: &[Side] = match prefix.last() {
            None => &[Side::G, Side::H],
            Some(s) if s.side == Side::G => &[Side::H],
            Some(_) => &[Side::G],
        };
        for &side in sides {
            for elem in self.fp.factor(side).non_identity() {
                let s = Syllable::new(side, elem);
                let next = step(value, s);
                prefix.push(s);
                let found = self.search(prefix, &next, max_len, step, collides);
                prefix.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    pub fn free_product(&self) -> &FreeProduct {
        &self.fp
    }

    pub fn conjugator(&self) -> Conjugator {
        self.conjugator
    }

    pub fn conjugator_matrix(&self) -> &Matrix<RatFunc> {
        &self.conjugator_matrix
    }

    pub fn dim(&self) -> usize {
        self.conjugator_matrix.rows()
    }

    pub fn verified_length(&self) -> usize {
        self.verified_length
    }

    pub fn syllable_image(&self, s: Syllable) -> &Matrix<RatFunc> {
        match s.side {
            Side::G => &self.images_g[s.elem],
            Side::H => &self.images_h[s.elem],
        }
    }

    /// Every syllable image, `G` elements first, each in index order.
    pub fn syllable_images(&self) -> impl Iterator<Item = (Syllable, &Matrix<RatFunc>)> {
        let g = self
            .images_g
            .iter()
            .enumerate()
            .map(|(x, m)| (Syllable::new(Side::G, x), m));
        let h = self
            .images_h
            .iter()
            .enumerate()
            .map(|(y, m)| (Syllable::new(Side::H, y), m));
        g.chain(h)
    }

    fn frac(&self, s: Syllable) -> &FracMatrix {
        match s.side {
            Side::G => &self.frac_g[s.elem],
            Side::H => &self.frac_h[s.elem],
        }
    }

    /// `rho(w)` as a product of the memoized syllable images.
    pub fn apply_frac(&self, w: &Word) -> FracMatrix {
        w.syllables()
            .iter()
            .fold(FracMatrix::identity(self.dim()), |acc, &s| acc.mul(self.frac(s)))
    }

    /// `Some(true)` when `rho(w) != I` is certified by one modular
    /// evaluation; `Some(false)` when that evaluation is the identity, so `w`
    /// almost surely lies in the kernel. `None` if no evaluation point was
    /// found.
    pub fn screen_moves(&self, w: &Word) -> Option<bool> {
        let screen = Screen::new(&self.frac_g, &self.frac_h)?;
        let one = Prime::new(SCREEN_PRIME).ok()?.one();
        let image = w
            .syllables()
            .iter()
            .fold(Matrix::identity(self.dim(), &one), |acc, &s| {
                acc.mul(screen.image(s)).expect("square")
            });
        Some(!image.is_identity())
    }

    pub fn apply(&self, w: &Word) -> Matrix<RatFunc> {
        self.apply_frac(w).to_ratfunc()
    }
}
