//! From a representation over Q(t) to a finite quotient of `G * H`.
//!
//! The syllable images share a denominator `D(t)`; for each target word the
//! entries of `rho(w) - I` have a numerator gcd `N_w(t)`. Any rational `s`
//! avoiding the zeros of `D` and every `N_w` gives a representation over Q
//! that still moves every target, with entries in `Z[1/D_s]`. Reducing
//! modulo a prime `p` that divides neither `D_s` nor a chosen nonzero entry
//! of each `rho_s(w) - I` lands in `GL_n(Z/p)` with every target still
//! nontrivial.

mod certificate;
mod closure;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

pub use certificate::{
    verify, CertificateKind, FactorialCheck, GroupPair, Inequation, NRecord, Rejection,
    SeparationCertificate, SyllableImages, VerifyError, VerifyReport, WitnessRecord,
};
pub use closure::{closure_group, matrix_group_closure, Closure};

use crate::arith::{rat_to_fp, ArithError, Field, FpElem, Matrix, Poly, Prime, Rat, ZPoly};
use crate::config::RunConfig;
use crate::group::{FreeProduct, GroupError, Side, Syllable, Word};
use crate::rep::{Conjugator, FracMatrix, FunctionFieldRep, RepError};

/// Integers `s = 1, 2, ...` tried before giving up on a specialization.
pub const MAX_SPECIALIZATION_CANDIDATES: u64 = 1_000;

/// `m!` is only formed for `m` up to this bound.
pub const MAX_FACTORIAL_M: u64 = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("precondition violated: the target word is the identity")]
    EmptyWord,
    #[error("precondition violated: {0} must not be the identity")]
    IdentityElement(Side),
    #[error("precondition violated: m must be at least 1")]
    ZeroM,
    #[error("rho({word}) = I: representation is not faithful on this target")]
    NotFaithful { word: String },
    #[error("no conjugator passed out of {}: {}", .rejected.len(), summarize(.rejected))]
    ConjugatorsExhausted { rejected: Vec<Rejection> },
    #[error("no specialization point among the first {0} positive integers")]
    NoSpecialization(u64),
    #[error("rho_s({0}) = I at the chosen specialization")]
    TrivialAtSpecialization(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

fn summarize(rejected: &[Rejection]) -> String {
    rejected
        .iter()
        .map(|r| format!("{} ({})", r.conjugator, r.reason))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Monic lcm of the denominators of every entry of every syllable image.
pub fn compute_d(rep: &FunctionFieldRep) -> Poly {
    rep.syllable_images()
        .flat_map(|(_, m)| m.entries().iter())
        .fold(Poly::one(), |acc, x| acc.lcm(x.den()).expect("nonzero denominators"))
}

/// Monic gcd of the numerators of the nonzero entries of `rho(w) - I`.
pub fn compute_n(rep: &FunctionFieldRep, w: &Word) -> Result<Poly, PipelineError> {
    let image = rep.apply_frac(w);
    numerator_gcd(&image).ok_or_else(|| PipelineError::NotFaithful {
        word: rep.free_product().display(w),
    })
}

/// `None` when the matrix is the identity.
///
/// With `rho(w) - I = (a_ij) / d` unnormalized and `A = gcd(a_ij)`, the
/// normalized numerators have gcd `A / gcd(A, d)`: for an irreducible `q`
/// the valuation of each normalized numerator is `max(0, v_q(a_ij) - v_q(d))`.
fn numerator_gcd(image: &FracMatrix) -> Option<Poly> {
    let a = image
        .minus_identity_numerators()
        .iter()
        .filter(|x| !x.is_zero())
        .fold(None, |acc: Option<ZPoly>, x| {
            Some(match acc {
                None => x.clone(),
                Some(g) => g.gcd(x).expect("nonzero"),
            })
        })?;
    let common = a.gcd(image.den()).expect("nonzero");
    Some(
        a.to_poly()
            .div_exact(&common.to_poly())
            .expect("gcd divides")
            .monic(),
    )
}

/// A word to be kept nontrivial in the quotient.
#[derive(Clone, Debug)]
pub struct Target {
    pub label: String,
    pub word: Word,
    /// Screened with a symbolic `N_w`; otherwise `rho_s(w) != I` is checked
    /// directly at each candidate `s`.
    pub symbolic: bool,
}

impl Target {
    pub fn symbolic(label: impl Into<String>, word: Word) -> Self {
        Target {
            label: label.into(),
            word,
            symbolic: true,
        }
    }
}

/// `D`, the per-target `N_w`, and the specialization points ruled out so far.
#[derive(Clone, Debug)]
pub struct SeparationData<'a> {
    rep: &'a FunctionFieldRep,
    d: Poly,
    targets: Vec<Target>,
    n: Vec<Option<Poly>>,
    excluded: BTreeSet<Rat>,
}

impl<'a> SeparationData<'a> {
    pub fn new(rep: &'a FunctionFieldRep, targets: Vec<Target>) -> Result<Self, PipelineError> {
        let n = targets
            .iter()
            .map(|t| {
                if t.symbolic {
                    compute_n(rep, &t.word).map(Some)
                } else if rep.screen_moves(&t.word) == Some(false) {
                    Err(PipelineError::NotFaithful {
                        word: t.label.clone(),
                    })
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(SeparationData {
            rep,
            d: compute_d(rep),
            targets,
            n,
            excluded: BTreeSet::new(),
        })
    }

    pub fn rep(&self) -> &FunctionFieldRep {
        self.rep
    }

    pub fn d(&self) -> &Poly {
        &self.d
    }

    pub fn targets(&self) -> &[Target] {
        &self.targets
    }

    /// `N_w` per target; `None` for targets screened numerically.
    pub fn n(&self) -> &[Option<Poly>] {
        &self.n
    }

    pub fn excluded(&self) -> &BTreeSet<Rat> {
        &self.excluded
    }
}

/// Syllable images evaluated at `t = s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSpecialization {
    pub s: Rat,
    pub images_g: Vec<Matrix<Rat>>,
    pub images_h: Vec<Matrix<Rat>>,
    /// Lcm of the denominators of all image entries.
    pub d_s: BigInt,
}

impl RationalSpecialization {
    pub fn image(&self, s: Syllable) -> &Matrix<Rat> {
        match s.side {
            Side::G => &self.images_g[s.elem],
            Side::H => &self.images_h[s.elem],
        }
    }

    pub fn apply(&self, w: &Word) -> Matrix<Rat> {
        let n = self.images_g[0].rows();
        w.syllables()
            .iter()
            .fold(Matrix::identity(n, &Rat::one()), |acc, &s| {
                acc.mul(self.image(s)).expect("square images")
            })
    }
}

/// First nonzero entry of `rho_s(w) - I` in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub value: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularSpecialization {
    pub p: Prime,
    pub images_g: Vec<Matrix<FpElem>>,
    pub images_h: Vec<Matrix<FpElem>>,
    pub witnesses: Vec<Witness>,
}

impl ModularSpecialization {
    pub fn image(&self, s: Syllable) -> &Matrix<FpElem> {
        match s.side {
            Side::G => &self.images_g[s.elem],
            Side::H => &self.images_h[s.elem],
        }
    }

    pub fn apply(&self, w: &Word) -> Matrix<FpElem> {
        let n = self.images_g[0].rows();
        w.syllables()
            .iter()
            .fold(Matrix::identity(n, &self.p.one()), |acc, &s| {
                acc.mul(self.image(s)).expect("square images")
            })
    }

    /// Images of every non-identity syllable, `G` first.
    pub fn generators(&self, fp: &FreeProduct) -> Vec<Matrix<FpElem>> {
        fp.g()
            .non_identity()
            .map(|x| self.images_g[x].clone())
            .chain(fp.h().non_identity().map(|y| self.images_h[y].clone()))
            .collect()
    }
}

/// Smallest positive integer `s` with `D(s) != 0`, `N_w(s) != 0` for every
/// symbolic target, and `rho_s(w) != I` for every other target.
pub fn choose_specialization(
    data: &mut SeparationData<'_>,
) -> Result<RationalSpecialization, PipelineError> {
    let rep = data.rep;
    for k in 1..=MAX_SPECIALIZATION_CANDIDATES {
        let s = Rat::from_int(k as i64);
        let blocked = data.d.eval(&s).is_zero()
            || data
                .n
                .iter()
                .flatten()
                .any(|n| n.eval(&s).is_zero());
        if blocked {
            data.excluded.insert(s);
            continue;
        }
        let spec = specialize(rep, s.clone())?;
        let numeric_ok = data
            .targets
            .iter()
            .filter(|t| !t.symbolic)
            .all(|t| !spec.apply(&t.word).is_identity());
        if numeric_ok {
            return Ok(spec);
        }
        data.excluded.insert(s);
    }
    Err(PipelineError::NoSpecialization(MAX_SPECIALIZATION_CANDIDATES))
}

/// Evaluates every syllable image at `t = s`.
pub fn specialize(rep: &FunctionFieldRep, s: Rat) -> Result<RationalSpecialization, PipelineError> {
    let fp = rep.free_product();
    let eval = |m: &Matrix<crate::arith::RatFunc>| {
        m.try_map(|x| x.eval(&s).ok_or(ArithError::DivisionByZero))
    };
    let images_g = (0..fp.g().order())
        .map(|x| eval(rep.syllable_image(Syllable::new(Side::G, x))))
        .collect::<Result<Vec<_>, _>>()?;
    let images_h = (0..fp.h().order())
        .map(|y| eval(rep.syllable_image(Syllable::new(Side::H, y))))
        .collect::<Result<Vec<_>, _>>()?;
    let d_s = images_g
        .iter()
        .chain(&images_h)
        .flat_map(|m| m.entries())
        .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    Ok(RationalSpecialization {
        s,
        images_g,
        images_h,
        d_s,
    })
}

fn first_nonzero_off_identity(m: &Matrix<Rat>) -> Option<Witness> {
    let n = m.rows();
    (0..n * n).find_map(|k| {
        let (row, col) = (k / n, k % n);
        let x = m.get(row, col);
        let value = if row == col { x - &Rat::one() } else { x.clone() };
        (!value.is_zero()).then_some(Witness { row, col, value })
    })
}

/// Smallest prime dividing neither `D_s` nor the numerator of the recorded
/// witness entry of each target; images reduced modulo it.
pub fn choose_prime(
    spec: &RationalSpecialization,
    target_images: &[(String, Matrix<Rat>)],
) -> Result<ModularSpecialization, PipelineError> {
    let witnesses = target_images
        .iter()
        .map(|(label, m)| {
            first_nonzero_off_identity(m)
                .ok_or_else(|| PipelineError::TrivialAtSpecialization(label.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let p = Prime::ascending()
        .find(|p| !p.divides(&spec.d_s) && witnesses.iter().all(|w| !p.divides(w.value.numer())))
        .expect("finitely many primes are excluded");
    let reduce = |m: &Matrix<Rat>| m.try_map(|x| rat_to_fp(x, p));
    Ok(ModularSpecialization {
        p,
        images_g: spec.images_g.iter().map(reduce).collect::<Result<_, _>>()?,
        images_h: spec.images_h.iter().map(reduce).collect::<Result<_, _>>()?,
        witnesses,
    })
}

/// Everything one successful pipeline pass produced.
#[derive(Clone, Debug)]
pub struct Separation {
    pub rep: FunctionFieldRep,
    pub rejected: Vec<Rejection>,
    pub d: Poly,
    pub n: Vec<(String, Option<Poly>)>,
    pub excluded: Vec<Rat>,
    pub rational: RationalSpecialization,
    pub modular: ModularSpecialization,
}

/// Runs the pipeline for a set of targets, retrying conjugators when the
/// representation is caught mapping a word to the identity.
pub fn separate_targets(
    fp: &FreeProduct,
    targets: &[Target],
    config: &RunConfig,
) -> Result<Separation, PipelineError> {
    if targets.iter().any(|t| t.word.is_empty()) {
        return Err(PipelineError::EmptyWord);
    }
    let mut rejected = Vec::new();
    for conjugator in config.conjugators() {
        let rep = match FunctionFieldRep::build(fp, conjugator, config.verify_len) {
            Ok(rep) => rep,
            Err(RepError::Collision { word, .. }) => {
                rejected.push(Rejection::collision(conjugator, &word));
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let mut data = match SeparationData::new(&rep, targets.to_vec()) {
            Ok(data) => data,
            Err(PipelineError::NotFaithful { word }) => {
                rejected.push(Rejection::collision(conjugator, &word));
                continue;
            }
            Err(e) => return Err(e),
        };
        let rational = choose_specialization(&mut data)?;
        let images: Vec<(String, Matrix<Rat>)> = targets
            .iter()
            .map(|t| (t.label.clone(), rational.apply(&t.word)))
            .collect();
        let modular = choose_prime(&rational, &images)?;
        let n = targets
            .iter()
            .zip(data.n())
            .map(|(t, n)| (t.label.clone(), n.clone()))
            .collect();
        let d = data.d().clone();
        let excluded = data.excluded().iter().cloned().collect();
        return Ok(Separation {
            rep,
            rejected,
            d,
            n,
            excluded,
            rational,
            modular,
        });
    }
    Err(PipelineError::ConjugatorsExhausted { rejected })
}

/// A certificate that `rho_{s,p}(w) != I`, i.e. `w` survives in a finite
/// quotient of `G * H`.
pub fn separate_word(
    fp: &FreeProduct,
    w: &Word,
    config: &RunConfig,
) -> Result<SeparationCertificate, PipelineError> {
    if w.is_empty() {
        return Err(PipelineError::EmptyWord);
    }
    let targets = vec![Target::symbolic(fp.display(w), w.clone())];
    let sep = separate_targets(fp, &targets, config)?;
    Ok(SeparationCertificate::assemble(
        CertificateKind::Separation,
        fp,
        w,
        None,
        config,
        &sep,
    ))
}

/// A certificate that the image of `gh` has order greater than `m` in a
/// finite quotient: every `(gh)^k` with `k <= m` is kept nontrivial by one
/// `(s, p)`. For `m <= 5` the word `(gh)^(m!)` is a target as well.
pub fn build_quotient(
    fp: &FreeProduct,
    g: usize,
    h: usize,
    m: u64,
    config: &RunConfig,
) -> Result<SeparationCertificate, PipelineError> {
    if g == fp.g().identity() {
        return Err(PipelineError::IdentityElement(Side::G));
    }
    if h == fp.h().identity() {
        return Err(PipelineError::IdentityElement(Side::H));
    }
    if m == 0 {
        return Err(PipelineError::ZeroM);
    }
    let gh = fp.mul(&fp.syllable(Side::G, g), &fp.syllable(Side::H, h));
    let sep = separate_targets(fp, &quotient_targets(fp, &gh, m), config)?;
    Ok(SeparationCertificate::assemble(
        CertificateKind::Quotient,
        fp,
        &gh,
        Some(m),
        config,
        &sep,
    ))
}

/// `(gh)^k` for `k = 1..=m`, then `(gh)^(m!)` when `m <= 5` and `m! > m`.
pub fn quotient_targets(fp: &FreeProduct, gh: &Word, m: u64) -> Vec<Target> {
    let base = fp.display(gh);
    let mut targets: Vec<Target> = (1..=m)
        .map(|k| Target::symbolic(format!("({base})^{k}"), fp.pow(gh, k)))
        .collect();
    if let Some(f) = factorial_exponent(m) {
        targets.push(Target {
            label: format!("({base})^{f}"),
            word: fp.pow(gh, f),
            symbolic: false,
        });
    }
    targets
}

/// `m!` when it is an extra target for `m`.
pub fn factorial_exponent(m: u64) -> Option<u64> {
    factorial(m).filter(|&f| m <= MAX_FACTORIAL_M && f > m)
}

pub fn factorial(m: u64) -> Option<u64> {
    (1..=m).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Reruns the pipeline from the choices recorded in a certificate.
pub fn replay(cert: &SeparationCertificate) -> Result<SeparationCertificate, PipelineError> {
    let fp = FreeProduct::new(cert.groups.g.build()?, cert.groups.h.build()?);
    let w = fp.from_labels(&cert.word)?;
    match (cert.kind, cert.m) {
        (CertificateKind::Quotient, Some(m)) => {
            let [g, h] = w.syllables() else {
                return Err(PipelineError::EmptyWord);
            };
            build_quotient(&fp, g.elem, h.elem, m, &cert.config)
        }
        _ => separate_word(&fp, &w, &cert.config),
    }
}

impl Rejection {
    fn collision(conjugator: Conjugator, word: &str) -> Self {
        Rejection {
            conjugator,
            reason: format!("rho({word}) = I"),
        }
    }
}

#[cfg(test)]
mod tests;
