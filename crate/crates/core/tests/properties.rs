use std::sync::OnceLock;

use freeprod::arith::{Field, Poly, Rat};
use freeprod::config::RunConfig;
use freeprod::group::library::{catalogue, cyclic_named, symmetric3};
use freeprod::group::{FiniteGroup, FreeProduct, Side, Syllable, Word};
use freeprod::refute::{enumerate_homs, HomBudget};
use freeprod::rep::{Conjugator, FunctionFieldRep};
use freeprod::separation::{compute_n, separate_targets, specialize, Separation, Target};
use proptest::prelude::*;

fn groups() -> &'static Vec<FiniteGroup> {
    static G: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    G.get_or_init(|| catalogue().into_iter().map(|(_, g)| g).collect())
}

fn s3_z2() -> &'static FreeProduct {
    static FP: OnceLock<FreeProduct> = OnceLock::new();
    FP.get_or_init(|| FreeProduct::new(symmetric3(), cyclic_named(2, "h")))
}

fn z2_z3() -> &'static FreeProduct {
    static FP: OnceLock<FreeProduct> = OnceLock::new();
    FP.get_or_init(|| FreeProduct::new(cyclic_named(2, "g"), cyclic_named(3, "h")))
}

fn z2_z3_rep() -> &'static FunctionFieldRep {
    static REP: OnceLock<FunctionFieldRep> = OnceLock::new();
    REP.get_or_init(|| FunctionFieldRep::build(z2_z3(), Conjugator::Random(1), 4).unwrap())
}

fn z2_z3_quotient() -> &'static Separation {
    static SEP: OnceLock<Separation> = OnceLock::new();
    SEP.get_or_init(|| {
        let fp = z2_z3();
        let gh = fp.mul(&fp.syllable(Side::G, 1), &fp.syllable(Side::H, 1));
        separate_targets(fp, &[Target::symbolic("gh", gh)], &RunConfig::default()).unwrap()
    })
}

/// Raw syllable sequences, identity syllables and repeated sides included.
fn raw_word(fp: &'static FreeProduct, max: usize) -> impl Strategy<Value = Word> {
    let (ng, nh) = (fp.g().order(), fp.h().order());
    prop::collection::vec((any::<bool>(), 0usize..64), 0..max).prop_map(move |raw| {
        let syl: Vec<Syllable> = raw
            .into_iter()
            .map(|(g, e)| if g { Syllable::new(Side::G, e % ng) } else { Syllable::new(Side::H, e % nh) })
            .collect();
        fp.normalize(&syl)
    })
}

fn is_reduced(fp: &FreeProduct, w: &Word) -> bool {
    let s = w.syllables();
    s.iter().all(|x| x.elem != fp.factor(x.side).identity()) && s.windows(2).all(|p| p[0].side != p[1].side)
}

fn rat() -> impl Strategy<Value = Rat> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..6, 0..5).prop_map(|c| Poly::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms(gi in 0usize..14, a in 0usize..8, b in 0usize..8, c in 0usize..8) {
        let g = &groups()[gi % groups().len()];
        let (a, b, c) = (a % g.order(), b % g.order(), c % g.order());
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.identity()), a);
        prop_assert_eq!(g.mul(g.inv(a), a), g.identity());
        prop_assert_eq!(g.pow(a, g.element_order(a) as u64), g.identity());
        prop_assert_eq!(g.order() % g.element_order(a), 0);
    }

    #[test]
    fn words_reduce(a in raw_word(s3_z2(), 10), b in raw_word(s3_z2(), 10), c in raw_word(s3_z2(), 10)) {
        let fp = s3_z2();
        prop_assert!(is_reduced(fp, &a));
        prop_assert_eq!(&fp.normalize(a.syllables()), &a);
        prop_assert_eq!(fp.mul(&fp.mul(&a, &b), &c), fp.mul(&a, &fp.mul(&b, &c)));
        prop_assert!(fp.mul(&a, &fp.inv(&a)).is_empty());
        prop_assert_eq!(fp.inv(&fp.mul(&a, &b)), fp.mul(&fp.inv(&b), &fp.inv(&a)));
        prop_assert_eq!(fp.from_labels(&fp.to_labels(&a)).unwrap(), a);
    }

    #[test]
    fn specialized_rep_is_homomorphism(a in raw_word(z2_z3(), 8), b in raw_word(z2_z3(), 8)) {
        let fp = z2_z3();
        let modular = &z2_z3_quotient().modular;
        let lhs = modular.apply(&fp.mul(&a, &b));
        let rhs = modular.apply(&a).mul(&modular.apply(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let rational = &z2_z3_quotient().rational;
        let lhs = rational.apply(&fp.mul(&a, &b));
        let rhs = rational.apply(&a).mul(&rational.apply(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nonvanishing_n_keeps_word_nontrivial(w in raw_word(z2_z3(), 6), s in 1i64..40) {
        prop_assume!(!w.is_empty());
        let rep = z2_z3_rep();
        let n = compute_n(rep, &w).unwrap();
        let s = Rat::from_int(s);
        if let Ok(spec) = specialize(rep, s.clone()) {
            if !n.eval(&s).is_zero() {
                prop_assert!(!spec.apply(&w).is_identity());
            }
        }
    }

    #[test]
    fn rational_field_laws(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), Rat::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), Rat::one());
        }
        prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a);
    }

    #[test]
    fn poly_gcd_lcm(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = a.gcd(&b).unwrap();
        let l = a.lcm(&b).unwrap();
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert!(a.divides(&l) && b.divides(&l));
        prop_assert_eq!(g.mul(&l).monic(), a.mul(&b).monic());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn composite_maps_divide_orders(ai in 0usize..14, bi in 0usize..14, ci in 0usize..14, x in any::<usize>(), y in any::<usize>()) {
        let gs = groups();
        let (a, b, c) = (&gs[ai % gs.len()], &gs[bi % gs.len()], &gs[ci % gs.len()]);
        let f = enumerate_homs(a, b, HomBudget::default()).unwrap();
        let g = enumerate_homs(b, c, HomBudget::default()).unwrap();
        let h = f[x % f.len()].then(&g[y % g.len()]).unwrap();
        for e in 0..a.order() {
            prop_assert_eq!(h.apply(a.mul(e, e)), c.mul(h.apply(e), h.apply(e)));
            prop_assert_eq!(a.element_order(e) % c.element_order(h.apply(e)), 0);
        }
    }
}
