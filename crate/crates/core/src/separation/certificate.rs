use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{
    factorial_exponent, matrix_group_closure, quotient_targets,
    Separation, Target,
};
use crate::arith::{is_prime, rat_to_fp, Field, FpElem, Matrix, Poly, Prime, Rat};
use crate::config::RunConfig;
use crate::group::{FreeProduct, GroupSpec, LabelledSyllable, Side, Syllable, Word};
use crate::rep::Conjugator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Separation,
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPair {
    #[serde(rename = "G")]
    pub g: GroupSpec,
    #[serde(rename = "H")]
    pub h: GroupSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub conjugator: Conjugator,
    pub reason: String,
}

/// `N_w` for one target word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NRecord {
    pub target: String,
    pub n: Poly,
}

/// Matrices as nested row vectors, one list per factor in element order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyllableImages<T> {
    #[serde(rename = "G")]
    pub g: Vec<Vec<Vec<T>>>,
    #[serde(rename = "H")]
    pub h: Vec<Vec<Vec<T>>>,
}

impl<T> SyllableImages<T> {
    fn side(&self, side: Side) -> &[Vec<Vec<T>>] {
        match side {
            Side::G => &self.g,
            Side::H => &self.h,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub target: String,
    pub row: usize,
    pub col: usize,
    /// Entry of `rho_s(w) - I`; `p` does not divide its numerator.
    pub value: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequation {
    pub k: u64,
    pub nonidentity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorialCheck {
    pub exponent: u64,
    pub nonidentity: bool,
}

/// Everything needed to recheck, without the pipeline, that a word survives
/// in the finite quotient `rho_{s,p}(G * H) <= GL_n(F_p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationCertificate {
    pub kind: CertificateKind,
    pub groups: GroupPair,
    pub word: Vec<LabelledSyllable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    pub config: RunConfig,
    /// Conjugator that produced the certificate.
    pub conjugator: Conjugator,
    pub rejected_conjugators: Vec<Rejection>,
    pub verified_length: usize,
    #[serde(rename = "D")]
    pub d: Poly,
    #[serde(rename = "N")]
    pub n: Vec<NRecord>,
    pub excluded_s: Vec<Rat>,
    pub s: Rat,
    #[serde(rename = "D_s")]
    pub d_s: Rat,
    pub p: u64,
    pub images_s: SyllableImages<Rat>,
    pub images_mod_p: SyllableImages<u64>,
    pub word_image_mod_p: Vec<Vec<u64>>,
    pub witnesses: Vec<WitnessRecord>,
    pub checks: Vec<Inequation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorial_check: Option<FactorialCheck>,
    /// Order of the image group when it was enumerated within the cap.
    pub closure_size: Option<usize>,
}

fn rows<T: Field>(m: &Matrix<T>) -> Vec<Vec<T>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn raw(m: &Matrix<FpElem>) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.value()).collect())
        .collect()
}

impl SeparationCertificate {
    pub(super) fn assemble(
        kind: CertificateKind,
        fp: &FreeProduct,
        w: &Word,
        m: Option<u64>,
        config: &RunConfig,
        sep: &Separation,
    ) -> Self {
        let modular = &sep.modular;
        let word_image = modular.apply(w);
        let exponents: Vec<u64> = match m {
            Some(m) => (1..=m).collect(),
            None => vec![1],
        };
        let checks = exponents
            .iter()
            .map(|&k| Inequation {
                k,
                nonidentity: !word_image.pow(k).expect("square").is_identity(),
            })
            .collect();
        let factorial_check = m.and_then(factorial_exponent).map(|f| FactorialCheck {
            exponent: f,
            nonidentity: !word_image.pow(f).expect("square").is_identity(),
        });
        let closure_size =
            matrix_group_closure(&modular.generators(fp), config.closure_cap).size();
        let witnesses = sep
            .n
            .iter()
            .zip(&modular.witnesses)
            .map(|((target, _), wit)| WitnessRecord {
                target: target.clone(),
                row: wit.row,
                col: wit.col,
                value: wit.value.clone(),
            })
            .collect();
        SeparationCertificate {
            kind,
            groups: GroupPair {
                g: fp.g().to_spec(),
                h: fp.h().to_spec(),
            },
            word: fp.to_labels(w),
            m,
            config: config.clone(),
            conjugator: sep.rep.conjugator(),
            rejected_conjugators: sep.rejected.clone(),
            verified_length: sep.rep.verified_length(),
            d: sep.d.clone(),
            n: sep
                .n
                .iter()
                .filter_map(|(target, n)| {
                    n.as_ref().map(|n| NRecord {
                        target: target.clone(),
                        n: n.clone(),
                    })
                })
                .collect(),
            excluded_s: sep.excluded.clone(),
            s: sep.rational.s.clone(),
            d_s: Rat::from_int(sep.rational.d_s.clone()),
            p: modular.p.get(),
            images_s: SyllableImages {
                g: sep.rational.images_g.iter().map(rows).collect(),
                h: sep.rational.images_h.iter().map(rows).collect(),
            },
            images_mod_p: SyllableImages {
                g: modular.images_g.iter().map(raw).collect(),
                h: modular.images_h.iter().map(raw).collect(),
            },
            word_image_mod_p: raw(&word_image),
            witnesses,
            checks,
            factorial_check,
            closure_size,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// A failed certificate check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyError {
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "check '{}' failed: {}", self.check, self.detail)
    }
}

impl std::error::Error for VerifyError {}

/// Names of the checks that passed, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub passed: Vec<&'static str>,
}

fn fail<T>(check: &'static str, detail: impl Into<String>) -> Result<T, VerifyError> {
    Err(VerifyError {
        check,
        detail: detail.into(),
    })
}

fn ensure(cond: bool, check: &'static str, detail: impl FnOnce() -> String) -> Result<(), VerifyError> {
    if cond {
        Ok(())
    } else {
        fail(check, detail())
    }
}

fn square<T: Field>(
    raw: &[Vec<T>],
    n: usize,
    check: &'static str,
    what: &str,
) -> Result<Matrix<T>, VerifyError> {
    if raw.len() != n || raw.iter().any(|r| r.len() != n) {
        return fail(check, format!("{what} is not {n}x{n}"));
    }
    Ok(Matrix::from_fn(n, n, |i, j| raw[i][j].clone()))
}

/// Rechecks a certificate from its recorded data alone. Stops at the first
/// failing check.
pub fn verify(cert: &SeparationCertificate) -> Result<VerifyReport, VerifyError> {
    let mut passed = Vec::new();

    let g = cert.groups.g.build().or_else(|e| fail("groups", format!("G: {e}")))?;
    let h = cert.groups.h.build().or_else(|e| fail("groups", format!("H: {e}")))?;
    ensure(!g.is_trivial() && !h.is_trivial(), "groups", || "a factor is trivial".into())?;
    let fp = FreeProduct::new(g, h);
    let n = fp.g().order() + fp.h().order();
    passed.push("groups");

    let w = fp.from_labels(&cert.word).or_else(|e| fail("word", e.to_string()))?;
    ensure(!w.is_empty(), "word", || "word reduces to the identity".into())?;
    ensure(
        fp.to_labels(&w) == cert.word,
        "word",
        || "word is not in reduced form".into(),
    )?;
    let targets: Vec<Target> = match (cert.kind, cert.m) {
        (CertificateKind::Separation, None) => vec![Target::symbolic(fp.display(&w), w.clone())],
        (CertificateKind::Quotient, Some(m)) if m >= 1 => {
            let shape_ok = matches!(
                w.syllables(),
                [Syllable { side: Side::G, .. }, Syllable { side: Side::H, .. }]
            );
            ensure(shape_ok, "word", || "quotient word must be g.h".into())?;
            quotient_targets(&fp, &w, m)
        }
        _ => return fail("word", "kind and m disagree"),
    };
    passed.push("word");

    let Ok(p) = Prime::new(cert.p) else {
        return fail("prime", format!("{} is not prime", cert.p));
    };
    ensure(
        cert.d_s.is_integer() && cert.d_s.numer().is_positive(),
        "prime",
        || format!("D_s = {} is not a positive integer", cert.d_s),
    )?;
    ensure(!p.divides(cert.d_s.numer()), "prime", || {
        format!("p = {} divides D_s = {}", cert.p, cert.d_s)
    })?;
    debug_assert!(is_prime(p.get()));
    passed.push("prime");

    ensure(!cert.d.is_zero() && !cert.d.eval(&cert.s).is_zero(), "specialization", || {
        format!("D({}) = 0", cert.s)
    })?;
    for rec in &cert.n {
        ensure(!rec.n.eval(&cert.s).is_zero(), "specialization", || {
            format!("N for {} vanishes at s = {}", rec.target, cert.s)
        })?;
    }
    passed.push("specialization");

    let load_rational = |side: Side| -> Result<Vec<Matrix<Rat>>, VerifyError> {
        let raw = cert.images_s.side(side);
        ensure(raw.len() == fp.factor(side).order(), "images_s", || {
            format!("expected {} images for {side}", fp.factor(side).order())
        })?;
        raw.iter()
            .enumerate()
            .map(|(x, m)| square(m, n, "images_s", &format!("image of {side} element {x}")))
            .collect()
    };
    let images_g = load_rational(Side::G)?;
    let images_h = load_rational(Side::H)?;
    let mut lcm = BigInt::one();
    for (side, images) in [(Side::G, &images_g), (Side::H, &images_h)] {
        for (x, m) in images.iter().enumerate() {
            for e in m.entries() {
                lcm = lcm.lcm(e.denom());
            }
            let det = m.det().expect("square");
            ensure(det.abs() == Rat::one(), "images_s", || {
                format!("det of {side} element {x} is {det}, not +-1")
            })?;
        }
    }
    ensure(Rat::from_int(lcm.clone()) == cert.d_s, "images_s", || {
        format!("entry denominators have lcm {lcm}, recorded D_s is {}", cert.d_s)
    })?;
    passed.push("images_s");

    let load_modular = |side: Side| -> Result<Vec<Matrix<FpElem>>, VerifyError> {
        let raw = cert.images_mod_p.side(side);
        ensure(raw.len() == fp.factor(side).order(), "reduction", || {
            format!("expected {} reduced images for {side}", fp.factor(side).order())
        })?;
        raw.iter()
            .enumerate()
            .map(|(x, m)| {
                ensure(m.iter().flatten().all(|&v| v < p.get()), "reduction", || {
                    format!("{side} element {x} has an entry outside [0, p)")
                })?;
                let lifted: Vec<Vec<FpElem>> =
                    m.iter().map(|r| r.iter().map(|&v| p.elem(v)).collect()).collect();
                square(&lifted, n, "reduction", &format!("reduced image of {side} element {x}"))
            })
            .collect()
    };
    let mod_g = load_modular(Side::G)?;
    let mod_h = load_modular(Side::H)?;
    for (side, rational, modular) in [(Side::G, &images_g, &mod_g), (Side::H, &images_h, &mod_h)] {
        for (x, (q, r)) in rational.iter().zip(modular).enumerate() {
            let reduced = q.try_map(|e| rat_to_fp(e, p)).or_else(|e| fail("reduction", e.to_string()))?;
            ensure(&reduced == r, "reduction", || {
                format!("{side} element {x}: images_s mod p differs from images_mod_p")
            })?;
        }
    }
    passed.push("reduction");

    let one = Matrix::identity(n, &p.one());
    for (side, images) in [(Side::G, &mod_g), (Side::H, &mod_h)] {
        let group = fp.factor(side);
        ensure(images[group.identity()] == one, "homomorphism", || {
            format!("identity of {side} is not sent to I")
        })?;
        for a in 0..group.order() {
            for b in 0..group.order() {
                let prod = images[a].mul(&images[b]).expect("square");
                ensure(prod == images[group.mul(a, b)], "homomorphism", || {
                    format!(
                        "rho({}) rho({}) != rho({}) in {side}",
                        group.label(a),
                        group.label(b),
                        group.label(group.mul(a, b))
                    )
                })?;
            }
        }
    }
    passed.push("homomorphism");

    let image_of = |word: &Word| {
        word.syllables().iter().fold(one.clone(), |acc, s| {
            let img = match s.side {
                Side::G => &mod_g[s.elem],
                Side::H => &mod_h[s.elem],
            };
            acc.mul(img).expect("square")
        })
    };
    let word_image = image_of(&w);
    let recorded = square(
        &cert
            .word_image_mod_p
            .iter()
            .map(|r| r.iter().map(|&v| p.elem(v % p.get())).collect())
            .collect::<Vec<Vec<FpElem>>>(),
        n,
        "word_image",
        "word_image_mod_p",
    )?;
    ensure(recorded == word_image, "word_image", || {
        "recorded word image is not the product of the syllable images".into()
    })?;
    passed.push("word_image");

    ensure(cert.witnesses.len() == targets.len(), "witnesses", || {
        format!("expected {} witnesses, found {}", targets.len(), cert.witnesses.len())
    })?;
    for (t, wit) in targets.iter().zip(&cert.witnesses) {
        ensure(wit.target == t.label, "witnesses", || {
            format!("witness for {} recorded as {}", t.label, wit.target)
        })?;
        ensure(wit.row < n && wit.col < n, "witnesses", || {
            format!("witness position for {} is out of range", t.label)
        })?;
        ensure(!wit.value.is_zero() && !p.divides(wit.value.numer()), "witnesses", || {
            format!("witness entry {} for {} vanishes mod p", wit.value, t.label)
        })?;
        let value = rat_to_fp(&wit.value, p).or_else(|e| fail("witnesses", e.to_string()))?;
        let image = image_of(&t.word);
        let mut entry = *image.get(wit.row, wit.col);
        if wit.row == wit.col {
            entry = entry.sub(&p.one());
        }
        ensure(entry == value, "witnesses", || {
            format!("witness for {} does not match rho_(s,p)", t.label)
        })?;
    }
    passed.push("witnesses");

    let expected_k: Vec<u64> = match cert.m {
        Some(m) => (1..=m).collect(),
        None => vec![1],
    };
    let recorded_k: Vec<u64> = cert.checks.iter().map(|c| c.k).collect();
    ensure(recorded_k == expected_k, "inequations", || {
        format!("checks cover k = {recorded_k:?}, expected {expected_k:?}")
    })?;
    for c in &cert.checks {
        let nonidentity = !word_image.pow(c.k).expect("square").is_identity();
        ensure(nonidentity && c.nonidentity, "inequations", || {
            format!("rho_(s,p)(w)^{} = I", c.k)
        })?;
    }
    passed.push("inequations");

    let expected_f = cert.m.and_then(factorial_exponent);
    match (expected_f, &cert.factorial_check) {
        (None, None) => {}
        (Some(f), Some(fc)) if fc.exponent == f => {
            let nonidentity = !word_image.pow(f).expect("square").is_identity();
            ensure(nonidentity && fc.nonidentity, "factorial", || {
                format!("rho_(s,p)(w)^{f} = I")
            })?;
        }
        _ => return fail("factorial", "factorial check missing or has the wrong exponent"),
    }
    passed.push("factorial");

    if let Some(size) = cert.closure_size {
        let gens: Vec<Matrix<FpElem>> = fp
            .g()
            .non_identity()
            .map(|x| mod_g[x].clone())
            .chain(fp.h().non_identity().map(|y| mod_h[y].clone()))
            .collect();
        let actual = matrix_group_closure(&gens, size + 1).size();
        ensure(actual == Some(size), "closure", || {
            format!("image group does not have the recorded order {size}")
        })?;
        passed.push("closure");
    }

    Ok(VerifyReport { passed })
}
