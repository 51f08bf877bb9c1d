use super::{enumerate_homs, CoproductCandidate, GroupHom, HomBudget, RefuteError};
use crate::group::library::{cyclic_named, dihedral};
use crate::group::FiniteGroup;

/// `D_k` with the two reflections `s0`, `s1` whose product is a rotation of
/// order `k`. Any pair of order-2 groups maps onto it, sending `gh` to that
/// rotation.
#[derive(Clone, Debug)]
pub struct DihedralOracle {
    pub k: usize,
    pub group: FiniteGroup,
    pub r1: usize,
    pub r2: usize,
}

impl DihedralOracle {
    pub fn new(k: usize) -> Result<Self, RefuteError> {
        if k < 2 {
            return Err(RefuteError::OracleNotApplicable(format!("D_k needs k >= 2, got {k}")));
        }
        let group = dihedral(k);
        let r1 = group.index_of("s0").expect("reflection s0");
        let r2 = group.index_of("s1").expect("reflection s1");
        Ok(DihedralOracle { k, group, r1, r2 })
    }

    /// The map from an order-2 group sending its involution to `reflection`.
    pub fn hom_from(&self, source: &FiniteGroup, reflection: usize) -> Result<GroupHom, RefuteError> {
        if source.order() != 2 {
            return Err(RefuteError::OracleNotApplicable(format!(
                "the dihedral oracle needs factors of order 2, got order {}",
                source.order()
            )));
        }
        let map = (0..2)
            .map(|x| if x == source.identity() { self.group.identity() } else { reflection })
            .collect();
        GroupHom::new(source.clone(), self.group.clone(), map)
    }
}

/// `D_k` with the reflection maps out of `<g> = Z/2` and `<h> = Z/2`.
pub fn dihedral_oracle(k: usize) -> Result<(FiniteGroup, GroupHom, GroupHom), RefuteError> {
    let oracle = DihedralOracle::new(k)?;
    let f_g = oracle.hom_from(&cyclic_named(2, "g"), oracle.r1)?;
    let f_h = oracle.hom_from(&cyclic_named(2, "h"), oracle.r2)?;
    Ok((oracle.group, f_g, f_h))
}

/// Outcome of searching `Hom(F, T)` for a map completing both triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mediating {
    pub homs_enumerated: usize,
    /// A map `f` with `f . iota_G = f_G` and `f . iota_H = f_H`, if any.
    pub witness: Option<GroupHom>,
}

impl Mediating {
    pub fn is_empty(&self) -> bool {
        self.witness.is_none()
    }
}

/// Exhaustively looks for a mediating morphism `F -> T`.
pub fn check_mediating_empty(
    candidate: &CoproductCandidate,
    f_g: &GroupHom,
    f_h: &GroupHom,
    t: &FiniteGroup,
    budget: HomBudget,
) -> Result<Mediating, RefuteError> {
    if f_g.source() != candidate.g() || f_h.source() != candidate.h() {
        return Err(RefuteError::NotHomomorphism(
            "f_G and f_H must start at the candidate's factors".into(),
        ));
    }
    if f_g.target() != t || f_h.target() != t {
        return Err(RefuteError::NotHomomorphism("f_G and f_H must land in T".into()));
    }
    let homs = enumerate_homs(candidate.f(), t, budget)?;
    let homs_enumerated = homs.len();
    let commutes = |f: &GroupHom, iota: &GroupHom, target: &GroupHom| {
        iota.map().iter().map(|&x| f.apply(x)).eq(target.map().iter().copied())
    };
    let witness = homs
        .into_iter()
        .find(|f| commutes(f, candidate.iota_g(), f_g) && commutes(f, candidate.iota_h(), f_h));
    Ok(Mediating {
        homs_enumerated,
        witness,
    })
}
