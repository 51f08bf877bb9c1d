//! Named candidates and the fixture family: every group of order at most 8
//! as `F`, with representative maps from two small factors.

use super::{enumerate_homs, CoproductCandidate, GroupHom, HomBudget};
use crate::group::library::{catalogue, cyclic_named, dihedral, klein_four, symmetric3};
use crate::group::FiniteGroup;

/// The four factor pairs used throughout the acceptance suite.
pub fn fixture_pairs() -> Vec<(&'static str, FiniteGroup, FiniteGroup)> {
    vec![
        ("z2_z2", cyclic_named(2, "g"), cyclic_named(2, "h")),
        ("z2_z3", cyclic_named(2, "g"), cyclic_named(3, "h")),
        ("z3_z3", cyclic_named(3, "g"), cyclic_named(3, "h")),
        ("s3_z2", symmetric3(), cyclic_named(2, "h")),
    ]
}

fn hom(source: FiniteGroup, target: &FiniteGroup, image: &str) -> GroupHom {
    let y = target.index_of(image).expect("label in target");
    let map = (0..source.order())
        .map(|x| target.pow(y, x as u64))
        .collect();
    GroupHom::new(source, target.clone(), map).expect("cyclic source")
}

/// `Z/2 x Z/2` with the two factor inclusions; `m = 2`.
pub fn klein_inclusions() -> CoproductCandidate {
    let f = klein_four();
    CoproductCandidate::new(
        hom(cyclic_named(2, "g"), &f, "(g,e)"),
        hom(cyclic_named(2, "h"), &f, "(e,g)"),
    )
    .expect("same target")
}

/// Both maps trivial; `m = 1`.
pub fn trivial_candidate(g: FiniteGroup, h: FiniteGroup, f: FiniteGroup) -> CoproductCandidate {
    CoproductCandidate::new(GroupHom::trivial(g, f.clone()), GroupHom::trivial(h, f)).expect("same target")
}

/// `D_4` with the factors sent to two reflections whose product has order 4.
pub fn d4_reflections() -> CoproductCandidate {
    let f = dihedral(4);
    CoproductCandidate::new(
        hom(cyclic_named(2, "g"), &f, "s0"),
        hom(cyclic_named(2, "h"), &f, "s1"),
    )
    .expect("same target")
}

/// For each catalogue group `F` and factor pairs `Z/2, Z/2` and `Z/2, Z/3`:
/// `iota_G` is the first map with non-trivial image (else trivial) and
/// `iota_H` the last one.
pub fn candidate_family() -> Vec<(String, CoproductCandidate)> {
    let factors = [
        ("z2_z2", cyclic_named(2, "g"), cyclic_named(2, "h")),
        ("z2_z3", cyclic_named(2, "g"), cyclic_named(3, "h")),
    ];
    let mut out = Vec::new();
    for (fname, f) in catalogue() {
        for (pair, g, h) in &factors {
            let pick = |src: &FiniteGroup, last: bool| {
                let homs = enumerate_homs(src, &f, HomBudget::default()).expect("small groups");
                let mut nontrivial = homs.iter().filter(|x| x.map().iter().any(|&y| y != f.identity()));
                let chosen = if last { nontrivial.next_back() } else { nontrivial.next() };
                chosen
                    .cloned()
                    .unwrap_or_else(|| GroupHom::trivial(src.clone(), f.clone()))
            };
            let candidate = CoproductCandidate::new(pick(g, false), pick(h, true)).expect("same target");
            out.push((format!("{pair}_to_{}", fname.to_lowercase()), candidate));
        }
    }
    out
}
