use super::fixtures::*;
use super::*;
use crate::group::library::{catalogue, cyclic, cyclic_named, dihedral, klein_four, trivial};

/// Counts maps `A -> B` by trying every image table.
fn brute_force_hom_count(a: &FiniteGroup, b: &FiniteGroup) -> usize {
    let n = a.order();
    let total = b.order().pow(n as u32);
    (0..total)
        .filter(|&code| {
            let map: Vec<usize> = (0..n).map(|i| (code / b.order().pow(i as u32)) % b.order()).collect();
            (0..n).all(|x| (0..n).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])))
        })
        .count()
}

#[test]
fn hom_counts_match_brute_force() {
    let budget = HomBudget::default();
    assert_eq!(enumerate_homs(&cyclic(2), &cyclic(2), budget).unwrap().len(), 2);
    assert_eq!(enumerate_homs(&klein_four(), &cyclic(2), budget).unwrap().len(), 4);
    assert_eq!(enumerate_homs(&dihedral(3), &trivial(), budget).unwrap().len(), 1);
    let small: Vec<FiniteGroup> = catalogue().into_iter().map(|(_, g)| g).filter(|g| g.order() <= 6).collect();
    for a in &small {
        for b in &small {
            if b.order().pow(a.order() as u32) > 50_000 {
                continue;
            }
            let fast = enumerate_homs(a, b, budget).unwrap().len();
            assert_eq!(fast, brute_force_hom_count(a, b), "{a:?} -> {b:?}");
        }
    }
}

#[test]
fn budget_is_enforced() {
    let err = enumerate_homs(&cyclic(17), &cyclic(2), HomBudget::default()).unwrap_err();
    assert!(matches!(err, RefuteError::Budget { source_order: 17, .. }));
}

#[test]
fn invalid_hom_is_rejected() {
    // Z/3 -> Z/2 sending a to g is not a homomorphism
    let err = GroupHom::new(cyclic(3), cyclic(2), vec![0, 1, 0]).unwrap_err();
    assert!(matches!(err, RefuteError::NotHomomorphism(_)));
}

#[test]
fn composition_divides_orders() {
    let groups: Vec<FiniteGroup> = catalogue().into_iter().map(|(_, g)| g).filter(|g| g.order() <= 6).collect();
    let budget = HomBudget::default();
    for a in &groups {
        for b in &groups {
            for c in [&cyclic(2), &dihedral(3)] {
                for x in enumerate_homs(a, b, budget).unwrap() {
                    for y in enumerate_homs(b, c, budget).unwrap() {
                        let z = x.then(&y).unwrap();
                        for e in 0..a.order() {
                            assert_eq!(a.element_order(e) % c.element_order(z.apply(e)), 0);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn dihedral_oracle_shapes() {
    let (d2, f_g, f_h) = dihedral_oracle(2).unwrap();
    assert_eq!(d2.order(), 4);
    assert!(d2.non_identity().all(|x| d2.element_order(x) == 2));
    assert_eq!(d2.element_order(d2.mul(f_g.apply(1), f_h.apply(1))), 2);
    let (d4, f_g, f_h) = dihedral_oracle(4).unwrap();
    assert_eq!(d4.order(), 8);
    let rot = d4.mul(f_g.apply(1), f_h.apply(1));
    assert_eq!(d4.element_order(rot), 4);
    assert_eq!(d4.pow(rot, 4), d4.identity());
    assert!(dihedral_oracle(1).is_err());
}

#[test]
fn mediating_map_found_when_it_exists() {
    let f = dihedral(3);
    let candidate = CoproductCandidate::new(
        GroupHom::new(cyclic_named(2, "g"), f.clone(), vec![0, f.index_of("s0").unwrap()]).unwrap(),
        GroupHom::new(cyclic_named(2, "h"), f.clone(), vec![0, f.index_of("s1").unwrap()]).unwrap(),
    )
    .unwrap();
    let med = check_mediating_empty(&candidate, candidate.iota_g(), candidate.iota_h(), &f, HomBudget::default())
        .unwrap();
    assert_eq!(med.witness, Some(GroupHom::identity(f.clone())));

    let t = cyclic(2);
    let triv = trivial_candidate(cyclic_named(2, "g"), cyclic_named(2, "h"), trivial());
    let med = check_mediating_empty(
        &triv,
        &GroupHom::trivial(cyclic_named(2, "g"), t.clone()),
        &GroupHom::trivial(cyclic_named(2, "h"), t.clone()),
        &t,
        HomBudget::default(),
    )
    .unwrap();
    assert_eq!(med.witness, Some(GroupHom::trivial(trivial(), t)));
}

#[test]
fn klein_candidate_against_dihedral_quotients() {
    let candidate = klein_inclusions();
    assert_eq!(candidate.product_order(1, 1), 2);
    for k in 3..=6 {
        let check = dihedral_check(&candidate, 1, 1, k, HomBudget::default()).unwrap();
        assert!(check.mediating_empty, "k = {k}");
        assert_eq!(check.image_order, k);
    }
    // in D_2 the image of gh has order 2, so the map exists
    let check = dihedral_check(&candidate, 1, 1, 2, HomBudget::default()).unwrap();
    assert!(!check.mediating_empty);
}

#[test]
fn refute_spec_candidates() {
    let cfg = RunConfig::default();
    let opts = OracleOptions {
        dihedral: true,
        ..OracleOptions::default()
    };
    let cert = refute(&klein_inclusions(), None, &cfg, &opts).unwrap();
    assert_eq!(cert.m, 2);
    assert!(cert.oracle_checks.iter().all(|c| c.mediating_empty));
    verify_refutation(&cert, HomBudget::default()).unwrap();

    let triv = trivial_candidate(cyclic_named(2, "g"), cyclic_named(2, "h"), klein_four());
    let cert = refute(&triv, None, &cfg, &opts).unwrap();
    assert_eq!(cert.m, 1);
    verify_refutation(&cert, HomBudget::default()).unwrap();

    let cert = refute(&d4_reflections(), None, &cfg, &opts).unwrap();
    assert_eq!(cert.m, 4);
    assert_eq!(cert.separation.checks.len(), 4);
    verify_refutation(&cert, HomBudget::default()).unwrap();

    let json = cert.to_json();
    assert_eq!(RefutationCertificate::from_json(&json).unwrap(), cert);
}

#[test]
fn dihedral_oracle_needs_order_two_factors() {
    let f = cyclic(6);
    let c = trivial_candidate(cyclic(2), cyclic(3), f);
    let opts = OracleOptions {
        dihedral: true,
        ..OracleOptions::default()
    };
    let err = refute(&c, None, &RunConfig::default(), &opts).unwrap_err();
    assert!(matches!(err, RefuteError::OracleNotApplicable(_)));
}

#[test]
fn tampered_refutation_fails() {
    let cert = refute(&klein_inclusions(), None, &RunConfig::default(), &OracleOptions::default()).unwrap();
    let mut bad = cert.clone();
    bad.m = 3;
    assert_eq!(verify_refutation(&bad, HomBudget::default()).unwrap_err().check, "m");
    let mut bad = cert.clone();
    bad.candidate.iota_g.insert("g".into(), "(e,g)".into());
    assert_eq!(verify_refutation(&bad, HomBudget::default()).unwrap_err().check, "m");
    let mut bad = cert;
    bad.candidate.iota_g.insert("g".into(), "(x,y)".into());
    assert_eq!(verify_refutation(&bad, HomBudget::default()).unwrap_err().check, "candidate");
}

#[test]
fn family_covers_catalogue() {
    let fam = candidate_family();
    assert_eq!(fam.len(), 2 * catalogue().len());
    for (name, c) in &fam {
        let m = c.product_order(1, 1);
        assert!(m >= 1 && m <= c.f().order(), "{name}");
    }
}
