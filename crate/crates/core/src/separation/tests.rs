use super::*;
use crate::arith::RatFunc;
use crate::group::library::{cyclic, cyclic_named};

fn z2z2() -> FreeProduct {
    FreeProduct::new(cyclic_named(2, "g"), cyclic_named(2, "h"))
}

fn word(fp: &FreeProduct, raw: &[(Side, usize)]) -> Word {
    fp.normalize(&raw.iter().map(|&(s, e)| Syllable::new(s, e)).collect::<Vec<_>>())
}

/// Normalizes each entry of `rho(w) - I` on its own, then takes the gcd.
fn n_oracle(rep: &FunctionFieldRep, w: &Word) -> Option<Poly> {
    let m = rep.apply(w);
    let n = m.rows();
    let mut acc: Option<Poly> = None;
    for i in 0..n {
        for j in 0..n {
            let mut x = m.get(i, j).clone();
            if i == j {
                x = x.sub(&RatFunc::one());
            }
            if x.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => x.num().monic(),
                Some(g) => g.gcd(x.num()).unwrap(),
            });
        }
    }
    acc
}

#[test]
fn entry_denominators_divide_d() {
    let fp = z2z2();
    for conjugator in [Conjugator::AllOnes, Conjugator::Random(0), Conjugator::Random(1)] {
        let rep = FunctionFieldRep::build_unverified(&fp, conjugator).unwrap();
        let d = compute_d(&rep);
        assert!(!d.is_zero());
        for (_, m) in rep.syllable_images() {
            for x in m.entries() {
                assert!(x.den().divides(&d));
            }
        }
    }
}

#[test]
fn all_ones_lift_has_constant_images() {
    // C(t)^-1 has denominator 1 + 4t, but C commutes with every
    // permutation matrix so the conjugation cancels it.
    let fp = z2z2();
    let rep = FunctionFieldRep::build_unverified(&fp, Conjugator::AllOnes).unwrap();
    let c_inv = rep.conjugator_matrix().inverse("C").unwrap();
    let den = Poly::from_ints(&[1, 4]).monic();
    assert_eq!(c_inv.get(0, 1).den(), &den);
    assert_eq!(compute_d(&rep), Poly::one());
}

#[test]
fn seeded_lift_has_nontrivial_d() {
    let fp = z2z2();
    let rep = FunctionFieldRep::build(&fp, Conjugator::Random(0), 6).unwrap();
    assert!(compute_d(&rep).degree().unwrap() >= 1);
}

#[test]
fn n_matches_entrywise_oracle() {
    let fp = FreeProduct::new(cyclic(2), cyclic(3));
    for seed in 0..3 {
        let rep = FunctionFieldRep::build_unverified(&fp, Conjugator::Random(seed)).unwrap();
        for w in fp.reduced_words(4) {
            let expect = n_oracle(&rep, &w);
            match compute_n(&rep, &w) {
                Ok(n) => assert_eq!(Some(n), expect, "{}", fp.display(&w)),
                Err(_) => assert_eq!(expect, None),
            }
        }
    }
}

#[test]
fn n_of_gh_over_z2z2_is_coprime_to_t() {
    let fp = z2z2();
    let rep = FunctionFieldRep::build(&fp, Conjugator::Random(0), 6).unwrap();
    let gh = word(&fp, &[(Side::G, 1), (Side::H, 1)]);
    let n = compute_n(&rep, &gh).unwrap();
    assert!(!n.eval(&Rat::zero()).is_zero() || n.is_one(), "N = {n}");
}

#[test]
fn n_of_identity_image_is_an_error() {
    let fp = z2z2();
    let rep = FunctionFieldRep::build_unverified(&fp, Conjugator::AllOnes).unwrap();
    let w = word(&fp, &[(Side::G, 1), (Side::H, 1), (Side::G, 1), (Side::H, 1)]);
    assert!(matches!(compute_n(&rep, &w), Err(PipelineError::NotFaithful { .. })));
}

#[test]
fn specialization_skips_roots() {
    let fp = z2z2();
    let rep = FunctionFieldRep::build(&fp, Conjugator::Random(0), 4).unwrap();
    let mut data = SeparationData {
        rep: &rep,
        d: Poly::from_ints(&[2, -3, 1]),
        targets: vec![],
        n: vec![],
        excluded: BTreeSet::new(),
    };
    let spec = choose_specialization(&mut data).unwrap();
    assert_eq!(spec.s, Rat::from_int(3));
    let excluded: Vec<Rat> = data.excluded().iter().cloned().collect();
    assert_eq!(excluded, vec![Rat::from_int(1), Rat::from_int(2)]);

    data.d = Poly::one();
    data.excluded.clear();
    assert_eq!(choose_specialization(&mut data).unwrap().s, Rat::one());
}

fn fake_spec(d_s: i64) -> RationalSpecialization {
    RationalSpecialization {
        s: Rat::one(),
        images_g: vec![],
        images_h: vec![],
        d_s: BigInt::from(d_s),
    }
}

fn unipotent(x: i64) -> Matrix<Rat> {
    Matrix::from_fn(2, 2, |i, j| match (i, j) {
        (0, 1) => Rat::from_int(x),
        _ if i == j => Rat::one(),
        _ => Rat::zero(),
    })
}

#[test]
fn prime_choice_exclusions() {
    let m = choose_prime(&fake_spec(6), &[("w".into(), unipotent(5))]).unwrap();
    assert_eq!(m.p.get(), 7);
    assert_eq!(m.witnesses[0], Witness { row: 0, col: 1, value: Rat::from_int(5) });
    let m = choose_prime(&fake_spec(1), &[("w".into(), unipotent(1))]).unwrap();
    assert_eq!(m.p.get(), 2);
    let err = choose_prime(&fake_spec(1), &[("w".into(), unipotent(0))]).unwrap_err();
    assert_eq!(err, PipelineError::TrivialAtSpecialization("w".into()));
}

#[test]
fn single_syllable_separates() {
    let fp = z2z2();
    let g = fp.syllable(Side::G, 1);
    let cert = separate_word(&fp, &g, &RunConfig::default()).unwrap();
    assert!(cert.checks[0].nonidentity);
    verify(&cert).unwrap();
    // the all-ones lift is rejected and the first seeded retry is used
    assert_eq!(cert.conjugator, Conjugator::Random(0));
    assert_eq!(cert.rejected_conjugators.len(), 1);
}

#[test]
fn commutator_over_z3z3() {
    let fp = FreeProduct::new(cyclic(3), cyclic(3));
    let w = fp.commutator(&fp.syllable(Side::G, 1), &fp.syllable(Side::H, 1));
    assert_eq!(w.len(), 4);
    let cert = separate_word(&fp, &w, &RunConfig::default()).unwrap();
    let report = verify(&cert).unwrap();
    assert!(report.passed.contains(&"inequations"));
}

#[test]
fn empty_word_is_rejected() {
    let fp = z2z2();
    assert_eq!(
        separate_word(&fp, &Word::empty(), &RunConfig::default()).unwrap_err(),
        PipelineError::EmptyWord
    );
}

#[test]
fn quotient_preconditions() {
    let fp = z2z2();
    let cfg = RunConfig::default();
    assert_eq!(build_quotient(&fp, 1, 1, 0, &cfg).unwrap_err(), PipelineError::ZeroM);
    assert_eq!(
        build_quotient(&fp, 0, 1, 2, &cfg).unwrap_err(),
        PipelineError::IdentityElement(Side::G)
    );
}

#[test]
fn exhausted_conjugators() {
    let fp = z2z2();
    let cfg = RunConfig {
        max_conjugators: 1,
        ..RunConfig::default()
    };
    let err = separate_word(&fp, &fp.syllable(Side::G, 1), &cfg).unwrap_err();
    match err {
        PipelineError::ConjugatorsExhausted { rejected } => assert_eq!(rejected.len(), 1),
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn z2z2_quotient_is_dihedral() {
    let fp = z2z2();
    let cert = build_quotient(&fp, 1, 1, 3, &RunConfig::default()).unwrap();
    verify(&cert).unwrap();
    assert_eq!(cert.checks.len(), 3);
    assert_eq!(cert.factorial_check.as_ref().unwrap().exponent, 6);
    let sep = separate_targets(
        &fp,
        &quotient_targets(&fp, &fp.pow(&fp.mul(&fp.syllable(Side::G, 1), &fp.syllable(Side::H, 1)), 1), 3),
        &RunConfig::default(),
    )
    .unwrap();
    let gens = sep.modular.generators(&fp);
    let (t, idx) = closure_group(&gens, 10_000).expect("small image");
    assert_eq!(Some(t.order()), cert.closure_size);
    let rot = t.mul(idx[0], idx[1]);
    let k = t.element_order(rot);
    assert!(k > 3);
    assert_eq!(t.order(), 2 * k);
    assert_eq!(t.subgroup(&[rot]).len() * 2, t.order());
    assert!(!t.is_abelian());
}

#[test]
fn gcd_witness_lemma_on_pipeline_runs() {
    let fp = FreeProduct::new(cyclic(2), cyclic(3));
    let cfg = RunConfig::default();
    for w in fp.reduced_words(3).filter(|w| !w.is_empty()) {
        let targets = vec![Target::symbolic(fp.display(&w), w.clone())];
        let sep = separate_targets(&fp, &targets, &cfg).unwrap();
        let n = sep.n[0].1.as_ref().unwrap();
        assert!(!n.eval(&sep.rational.s).is_zero());
        assert!(!sep.rational.apply(&w).is_identity());
        assert!(!sep.modular.apply(&w).is_identity());
    }
}

#[test]
fn replay_reproduces_certificate() {
    let fp = FreeProduct::new(cyclic(2), cyclic(3));
    let cert = build_quotient(&fp, 1, 1, 4, &RunConfig::default()).unwrap();
    assert_eq!(replay(&cert).unwrap(), cert);
    let json = cert.to_json();
    let back = SeparationCertificate::from_json(&json).unwrap();
    assert_eq!(back, cert);
    assert_eq!(back.to_json(), json);
}

#[test]
fn tampering_is_caught() {
    let fp = FreeProduct::new(cyclic(2), cyclic(3));
    let cert = build_quotient(&fp, 1, 1, 2, &RunConfig::default()).unwrap();

    let mut bad = cert.clone();
    let v = &mut bad.word_image_mod_p[0][0];
    *v = (*v + 1) % cert.p;
    assert_eq!(verify(&bad).unwrap_err().check, "word_image");

    let mut bad = cert.clone();
    let v = &mut bad.images_mod_p.h[1][0][0];
    *v = (*v + 1) % cert.p;
    assert_eq!(verify(&bad).unwrap_err().check, "reduction");

    let mut bad = cert.clone();
    bad.checks.pop();
    assert_eq!(verify(&bad).unwrap_err().check, "inequations");

    let mut bad = cert.clone();
    bad.p = 4;
    assert_eq!(verify(&bad).unwrap_err().check, "prime");
}

#[test]
fn prime_dividing_d_s_is_rejected() {
    let fp = z2z2();
    let cert = build_quotient(&fp, 1, 1, 2, &RunConfig::default()).unwrap();
    let d_s = cert.d_s.numer().clone();
    let Some(q) = Prime::ascending().take_while(|q| BigInt::from(q.get()) <= d_s).find(|q| q.divides(&d_s)) else {
        // D_s = 1 has no prime divisor
        assert_eq!(d_s, BigInt::one());
        return;
    };
    let mut bad = cert.clone();
    bad.p = q.get();
    let err = verify(&bad).unwrap_err();
    assert_eq!(err.check, "prime", "{err}");
}
