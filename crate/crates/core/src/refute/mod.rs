//! Refuting candidate coproducts of `G` and `H` in finite groups.
//!
//! For a candidate `(F, iota_G, iota_H)` and non-identity `g`, `h`, let `m`
//! be the order of `iota_G(g) iota_H(h)` in `F`. The quotient pipeline gives
//! a finite `T` and maps `f_G`, `f_H` with `f_G(g) f_H(h)` of order greater
//! than `m`. Any `f: F -> T` with `f . iota_G = f_G` and `f . iota_H = f_H`
//! would send an element of order `m` to one of larger order, so no such `f`
//! exists. Exhaustive enumeration of `Hom(F, T)` is kept as an independent
//! check when the groups are small.

mod hom;
mod oracle;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use hom::{enumerate_homs, GroupHom, HomBudget};
pub use oracle::{check_mediating_empty, dihedral_oracle, DihedralOracle, Mediating};

use crate::arith::{FpElem, Matrix, Prime};
use crate::config::RunConfig;
use crate::group::{FiniteGroup, FreeProduct, GroupError, GroupSpec, LabelledSyllable, Side};
use crate::separation::{
    build_quotient, closure_group, verify, PipelineError, SeparationCertificate, VerifyError,
    VerifyReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RefuteError {
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("{side} element {label} is not in the group")]
    UnknownElement { side: Side, label: String },
    #[error("precondition violated: the chosen {0} element must not be the identity")]
    IdentityChoice(Side),
    #[error(
        "enumeration budget exceeded: |A| = {source_order}, |B| = {target_order} \
         (limits {}, {})", .budget.max_source, .budget.max_target
    )]
    Budget {
        source_order: usize,
        target_order: usize,
        budget: HomBudget,
    },
    #[error("oracle not applicable: {0}")]
    OracleNotApplicable(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
}

/// Wire form of a candidate: the three groups and both maps as label tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSpec {
    #[serde(rename = "G")]
    pub g: GroupSpec,
    #[serde(rename = "H")]
    pub h: GroupSpec,
    #[serde(rename = "F")]
    pub f: GroupSpec,
    #[serde(rename = "iota_G")]
    pub iota_g: BTreeMap<String, String>,
    #[serde(rename = "iota_H")]
    pub iota_h: BTreeMap<String, String>,
}

/// A finite group `F` with maps from both factors, posing as their
/// coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductCandidate {
    iota_g: GroupHom,
    iota_h: GroupHom,
}

impl CoproductCandidate {
    pub fn new(iota_g: GroupHom, iota_h: GroupHom) -> Result<Self, RefuteError> {
        if iota_g.target() != iota_h.target() {
            return Err(RefuteError::NotHomomorphism(
                "iota_G and iota_H must land in the same group F".into(),
            ));
        }
        Ok(CoproductCandidate { iota_g, iota_h })
    }

    pub fn from_spec(spec: &CandidateSpec) -> Result<Self, RefuteError> {
        let (g, h, f) = (spec.g.build()?, spec.h.build()?, spec.f.build()?);
        let iota_g = GroupHom::from_labels(g, f.clone(), &spec.iota_g)?;
        let iota_h = GroupHom::from_labels(h, f, &spec.iota_h)?;
        CoproductCandidate::new(iota_g, iota_h)
    }

    pub fn to_spec(&self) -> CandidateSpec {
        CandidateSpec {
            g: self.g().to_spec(),
            h: self.h().to_spec(),
            f: self.f().to_spec(),
            iota_g: self.iota_g.to_labels(),
            iota_h: self.iota_h.to_labels(),
        }
    }

    pub fn g(&self) -> &FiniteGroup {
        self.iota_g.source()
    }

    pub fn h(&self) -> &FiniteGroup {
        self.iota_h.source()
    }

    pub fn f(&self) -> &FiniteGroup {
        self.iota_g.target()
    }

    pub fn iota_g(&self) -> &GroupHom {
        &self.iota_g
    }

    pub fn iota_h(&self) -> &GroupHom {
        &self.iota_h
    }

    /// Order of `iota_G(g) iota_H(h)` in `F`.
    pub fn product_order(&self, g: usize, h: usize) -> usize {
        let f = self.f();
        f.element_order(f.mul(self.iota_g.apply(g), self.iota_h.apply(h)))
    }
}

/// Which independent checks accompany a refutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Compare against `D_(m+1)`; both factors must have order 2.
    pub dihedral: bool,
    /// Enumerate `Hom(F, T)` for the matrix image `T` when it is small.
    pub closure: bool,
    pub budget: HomBudget,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            dihedral: false,
            closure: true,
            budget: HomBudget::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleKind {
    Dihedral,
    Closure,
}

/// One exhaustive search of `Hom(F, T)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub kind: OracleKind,
    pub t_order: usize,
    /// Order of `f_G(g) f_H(h)` in `T`.
    pub image_order: usize,
    pub homs_enumerated: usize,
    pub mediating_empty: bool,
}

/// The two order facts that cannot both hold for a mediating map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusion {
    /// Order of `iota_G(g) iota_H(h)` in `F`.
    pub order_in_candidate: u64,
    /// Every power `(gh)^k` with `k` up to this bound is nontrivial in `T`.
    pub quotient_order_exceeds: u64,
    pub statement: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationCertificate {
    pub candidate: CandidateSpec,
    pub g: String,
    pub h: String,
    pub m: u64,
    pub separation: SeparationCertificate,
    pub conclusion: Conclusion,
    pub oracle_checks: Vec<OracleCheck>,
}

impl RefutationCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// First non-identity element in index order.
pub fn default_element(group: &FiniteGroup) -> Option<usize> {
    group.non_identity().next()
}

/// Builds the order obstruction for one candidate. `choice` overrides the
/// default `g`, `h` (the first non-identity elements).
pub fn refute(
    candidate: &CoproductCandidate,
    choice: Option<(usize, usize)>,
    config: &RunConfig,
    oracles: &OracleOptions,
) -> Result<RefutationCertificate, RefuteError> {
    let (g, h) = match choice {
        Some(pair) => pair,
        None => (
            default_element(candidate.g()).ok_or(RefuteError::IdentityChoice(Side::G))?,
            default_element(candidate.h()).ok_or(RefuteError::IdentityChoice(Side::H))?,
        ),
    };
    if g == candidate.g().identity() {
        return Err(RefuteError::IdentityChoice(Side::G));
    }
    if h == candidate.h().identity() {
        return Err(RefuteError::IdentityChoice(Side::H));
    }
    let m = candidate.product_order(g, h) as u64;
    let fp = FreeProduct::new(candidate.g().clone(), candidate.h().clone());
    let separation = build_quotient(&fp, g, h, m, config)?;
    let mut oracle_checks = Vec::new();
    if oracles.dihedral {
        oracle_checks.push(dihedral_check(candidate, g, h, m as usize + 1, oracles.budget)?);
    }
    if oracles.closure {
        oracle_checks.extend(closure_check(candidate, g, h, &separation, oracles.budget)?);
    }
    Ok(RefutationCertificate {
        candidate: candidate.to_spec(),
        g: candidate.g().label(g).to_string(),
        h: candidate.h().label(h).to_string(),
        m,
        separation,
        conclusion: Conclusion {
            order_in_candidate: m,
            quotient_order_exceeds: m,
            statement: format!(
                "a mediating f would give f(iota_G(g) iota_H(h)) = f_G(g) f_H(h) order dividing {m}, \
                 but its order in the quotient exceeds {m}"
            ),
        },
        oracle_checks,
    })
}

/// Exhaustive search against `D_k`, with `g`, `h` sent to two reflections
/// whose product has order `k`.
pub fn dihedral_check(
    candidate: &CoproductCandidate,
    g: usize,
    h: usize,
    k: usize,
    budget: HomBudget,
) -> Result<OracleCheck, RefuteError> {
    let oracle = DihedralOracle::new(k)?;
    let f_g = oracle.hom_from(candidate.g(), oracle.r1)?;
    let f_h = oracle.hom_from(candidate.h(), oracle.r2)?;
    let t = &oracle.group;
    let image_order = t.element_order(t.mul(f_g.apply(g), f_h.apply(h)));
    let med = check_mediating_empty(candidate, &f_g, &f_h, t, budget)?;
    Ok(OracleCheck {
        kind: OracleKind::Dihedral,
        t_order: t.order(),
        image_order,
        homs_enumerated: med.homs_enumerated,
        mediating_empty: med.is_empty(),
    })
}

fn modular_images(cert: &SeparationCertificate) -> Result<Vec<Matrix<FpElem>>, RefuteError> {
    let p = Prime::new(cert.p).map_err(|e| RefuteError::OracleNotApplicable(e.to_string()))?;
    Ok(cert
        .images_mod_p
        .g
        .iter()
        .chain(&cert.images_mod_p.h)
        .map(|m| {
            let n = m.len();
            Matrix::from_fn(n, n, |i, j| p.elem(m[i][j] % p.get()))
        })
        .collect())
}

/// Exhaustive search against the matrix image `T` of the quotient, when
/// `|F|` and `|T|` fit the budget.
pub fn closure_check(
    candidate: &CoproductCandidate,
    g: usize,
    h: usize,
    separation: &SeparationCertificate,
    budget: HomBudget,
) -> Result<Option<OracleCheck>, RefuteError> {
    let fits = separation
        .closure_size
        .is_some_and(|c| c <= budget.max_target)
        && candidate.f().order() <= budget.max_source;
    if !fits {
        return Ok(None);
    }
    let images = modular_images(separation)?;
    let Some((t, idx)) = closure_group(&images, budget.max_target) else {
        return Ok(None);
    };
    let n_g = candidate.g().order();
    let f_g = GroupHom::new(candidate.g().clone(), t.clone(), idx[..n_g].to_vec())?;
    let f_h = GroupHom::new(candidate.h().clone(), t.clone(), idx[n_g..].to_vec())?;
    let image_order = t.element_order(t.mul(f_g.apply(g), f_h.apply(h)));
    let med = check_mediating_empty(candidate, &f_g, &f_h, &t, budget)?;
    Ok(Some(OracleCheck {
        kind: OracleKind::Closure,
        t_order: t.order(),
        image_order,
        homs_enumerated: med.homs_enumerated,
        mediating_empty: med.is_empty(),
    }))
}

fn fail<T>(check: &'static str, detail: impl Into<String>) -> Result<T, VerifyError> {
    Err(VerifyError {
        check,
        detail: detail.into(),
    })
}

/// Rechecks a refutation: the candidate's maps, the order `m` in `F`, the
/// embedded quotient certificate, and every recorded oracle search.
pub fn verify_refutation(
    cert: &RefutationCertificate,
    budget: HomBudget,
) -> Result<VerifyReport, VerifyError> {
    let candidate =
        CoproductCandidate::from_spec(&cert.candidate).or_else(|e| fail("candidate", e.to_string()))?;
    let mut passed = vec!["candidate"];

    let g = candidate.g().index_of(&cert.g);
    let h = candidate.h().index_of(&cert.h);
    let (Some(g), Some(h)) = (g, h) else {
        return fail("elements", "g or h is not an element of its factor");
    };
    if g == candidate.g().identity() || h == candidate.h().identity() {
        return fail("elements", "g and h must not be the identity");
    }
    passed.push("elements");

    let m = candidate.product_order(g, h) as u64;
    if m != cert.m || cert.conclusion.order_in_candidate != m || cert.conclusion.quotient_order_exceeds != m {
        return fail("m", format!("iota_G(g) iota_H(h) has order {m} in F, recorded {}", cert.m));
    }
    passed.push("m");

    let sep = &cert.separation;
    let groups_match = sep.groups.g.build().ok().as_ref() == Some(candidate.g())
        && sep.groups.h.build().ok().as_ref() == Some(candidate.h());
    let word = vec![
        LabelledSyllable {
            side: Side::G,
            element: cert.g.clone(),
        },
        LabelledSyllable {
            side: Side::H,
            element: cert.h.clone(),
        },
    ];
    if !groups_match || sep.word != word || sep.m != Some(m) {
        return fail("separation_link", "quotient certificate is not for (G, H, gh, m)");
    }
    passed.push("separation_link");

    let report = verify(sep)?;
    passed.extend(report.passed);

    for check in &cert.oracle_checks {
        let rerun = match check.kind {
            OracleKind::Dihedral => Some(
                dihedral_check(&candidate, g, h, check.t_order / 2, budget)
                    .or_else(|e| fail("oracles", e.to_string()))?,
            ),
            OracleKind::Closure => {
                closure_check(&candidate, g, h, sep, budget).or_else(|e| fail("oracles", e.to_string()))?
            }
        };
        if rerun.as_ref() != Some(check) {
            return fail("oracles", format!("{:?} search does not reproduce", check.kind));
        }
        if !check.mediating_empty || check.image_order as u64 <= m {
            return fail("oracles", format!("{:?} search found a mediating map", check.kind));
        }
    }
    passed.push("oracles");
    Ok(VerifyReport { passed })
}

pub mod fixtures;

#[cfg(test)]
mod tests;
