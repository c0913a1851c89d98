mod common;

use common::{closure, fixture, is_nilpotent, is_normal, is_ti, maximal, normalizer, set_of, subgroups, Set};
use maxinv::catalog::{alternating, cyclic, elementary_abelian, frobenius, quaternion8, symmetric};
use maxinv::checks::{
    check_downstream, check_lemma_2_1, check_lemma_2_2, check_lemma_2_3, check_lemma_2_4, find_decomposition,
    hypothesis_normalizer_nilpotent, statement_nonnilpotent_normal, statement_nonnilpotent_ti,
    verify_decomposition, check_sufficiency, verify_cor_1_12, verify_thm_1_3, verify_thm_1_9, Context,
    EquivalenceStatus, Lemma24Outcome,
};
use maxinv::group::DEFAULT_CAP;
use maxinv::lattice::all_subgroups;
use maxinv::{ActionGroup, GroupTable};

fn with_ctx<R>(g: &GroupTable, a: &ActionGroup, f: impl FnOnce(&Context) -> R) -> R {
    let lattice = all_subgroups(g, DEFAULT_CAP).unwrap();
    let ctx = Context::new(g, a, &lattice).unwrap();
    f(&ctx)
}

fn trivially<R>(g: &GroupTable, f: impl FnOnce(&Context) -> R) -> R {
    with_ctx(g, &ActionGroup::trivial(g), f)
}

fn remark() -> GroupTable {
    fixture("remark-1.5").group
}

#[test]
fn hypothesis_holds_on_remark_group() {
    let v = trivially(&remark(), hypothesis_normalizer_nilpotent);
    assert!(v.holds && !v.vacuous);
}

#[test]
fn hypothesis_fails_on_s4_with_order_six_witness() {
    let g = symmetric(4).unwrap();
    let v = trivially(&g, hypothesis_normalizer_nilpotent);
    assert!(!v.holds);
    let m: Set = v.counterexample.unwrap().elements.into_iter().collect();
    assert_eq!(m.len(), 6);
    // oracle: m is a maximal subgroup, not nilpotent, containing N(P) for a Sylow 3
    let subs = subgroups(&g);
    assert!(maximal(&g, &subs).contains(&m));
    assert!(!is_nilpotent(&g, &m));
    let p3: Set = m.iter().copied().filter(|&x| g.element_order(x) == 3).chain([0]).collect();
    assert_eq!(p3.len(), 3);
    assert!(normalizer(&g, &p3).is_subset(&m));
}

#[test]
fn hypothesis_on_d14_uses_order_two_subgroup() {
    let f = fixture("d14-act3");
    let a = f.action("A=C3(r->r^2)").unwrap();
    let v = with_ctx(&f.group, a, hypothesis_normalizer_nilpotent);
    assert!(v.holds && !v.vacuous);
    let orders: Vec<usize> = v.witnesses.iter().map(|w| w.elements.len()).collect();
    assert_eq!(orders, vec![2]);
}

#[test]
fn no_decomposition_for_nilpotent_groups() {
    for g in [quaternion8().unwrap(), cyclic(12).unwrap(), elementary_abelian(2, 3).unwrap()] {
        assert!(trivially(&g, find_decomposition).is_none());
    }
}

#[test]
fn s3_decomposition() {
    let g = symmetric(3).unwrap();
    trivially(&g, |ctx| {
        let d = find_decomposition(ctx).unwrap();
        assert_eq!(d.normal_sylows.len(), 1);
        assert_eq!(d.nonnormal_sylows.len(), 1);
        assert_eq!(d.acting_factor().order(), 3);
        assert_eq!(d.nonnormal_sylows[0].1.order(), 2);
        assert!(d.e.is_trivial());
        // oracle: E·Q = Q is maximal and nilpotent
        let q = set_of(&d.nonnormal_sylows[0].1);
        assert!(maximal(&g, &subgroups(&g)).contains(&q));
        assert!(is_nilpotent(&g, &q));
        verify_decomposition(ctx, &d).unwrap();
        assert!(check_sufficiency(ctx, &d).holds);
    });
}

#[test]
fn remark_group_decomposition() {
    let g = remark();
    trivially(&g, |ctx| {
        let d = find_decomposition(ctx).unwrap();
        let primes: Vec<usize> = d.normal_sylows.iter().map(|(p, _)| *p).collect();
        assert_eq!(primes, vec![3, 5]);
        assert_eq!(d.acting_factor().order(), 3);
        assert_eq!(d.nonnormal_sylows.len(), 1);
        assert_eq!(d.nonnormal_sylows[0].1.order(), 2);
        assert!(d.e.is_trivial());
        verify_decomposition(ctx, &d).unwrap();
        let s = check_sufficiency(ctx, &d);
        assert!(s.holds, "{}", s.detail);
        // N_G(Q) = Z5 × Q has order 10
        let q = set_of(&d.nonnormal_sylows[0].1);
        assert_eq!(normalizer(&g, &q).len(), 10);
    });
}

#[test]
fn alternating_four_decomposition() {
    let g = alternating(4).unwrap();
    trivially(&g, |ctx| {
        let d = find_decomposition(ctx).unwrap();
        assert_eq!(d.acting_factor().order(), 4);
        assert_eq!(d.nonnormal_sylows[0].1.order(), 3);
        assert!(d.e.is_trivial());
        verify_decomposition(ctx, &d).unwrap();
        assert!(check_sufficiency(ctx, &d).holds);
    });
}

#[test]
fn statement_normal_examples() {
    let g = remark();
    let v = trivially(&g, statement_nonnilpotent_normal);
    assert!(v.holds && !v.vacuous);
    // oracle: the non-nilpotent maximal subgroups are exactly one, of order 6, and normal
    let bad: Vec<Set> = maximal(&g, &subgroups(&g))
        .into_iter()
        .filter(|m| !is_nilpotent(&g, m))
        .collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].len(), 6);
    assert!(is_normal(&g, &bad[0]));

    let v = trivially(&symmetric(4).unwrap(), statement_nonnilpotent_normal);
    assert!(!v.holds);
    let v = trivially(&alternating(4).unwrap(), statement_nonnilpotent_normal);
    assert!(v.holds && v.vacuous);
}

#[test]
fn statement_ti_matches_brute_force() {
    for g in [symmetric(4).unwrap(), symmetric(3).unwrap(), remark(), frobenius(7, 6).unwrap()] {
        let oracle = maximal(&g, &subgroups(&g))
            .iter()
            .filter(|m| !is_nilpotent(&g, m))
            .all(|m| is_ti(&g, m));
        let v = trivially(&g, statement_nonnilpotent_ti);
        assert_eq!(v.holds, oracle);
    }
    assert!(!trivially(&symmetric(4).unwrap(), statement_nonnilpotent_ti).holds);
    let v = trivially(&symmetric(3).unwrap(), statement_nonnilpotent_ti);
    assert!(v.holds && v.vacuous);
}

#[test]
fn theorem_1_3_examples() {
    let r = trivially(&symmetric(3).unwrap(), verify_thm_1_3);
    assert!(r.equivalent && r.statements.iter().all(|s| s.verdict.holds));
    let r = trivially(&symmetric(4).unwrap(), verify_thm_1_3);
    assert!(r.equivalent && r.statements.iter().all(|s| !s.verdict.holds));
    let r = trivially(&cyclic(10).unwrap(), verify_thm_1_3);
    assert!(r.equivalent && r.statements.iter().all(|s| s.verdict.holds));
}

#[test]
fn theorem_1_9_examples() {
    let r = trivially(&remark(), verify_thm_1_9);
    assert_eq!(r.status, EquivalenceStatus::Equivalent);
    assert!(r.statements.iter().all(|s| s.verdict.holds));

    let r = trivially(&symmetric(4).unwrap(), verify_thm_1_9);
    assert_eq!(r.status, EquivalenceStatus::Equivalent);
    assert!(r.statements.iter().all(|s| !s.verdict.holds));

    let f = fixture("d14-act3");
    let r = with_ctx(&f.group, f.action("A=C3(r->r^2)").unwrap(), verify_thm_1_9);
    assert!(r.equivalent && r.statements.iter().all(|s| s.verdict.holds));

    let r = trivially(&quaternion8().unwrap(), verify_thm_1_9);
    assert_eq!(r.status, EquivalenceStatus::OutOfHypothesis);
    assert!(!r.equivalent);
}

#[test]
fn corollary_1_12_on_s4() {
    let r = trivially(&symmetric(4).unwrap(), verify_cor_1_12);
    assert!(r.equivalent);
    assert_eq!(r.statements.len(), 3);
    assert!(r.statements.iter().all(|s| !s.verdict.holds));
}

#[test]
fn lemma_2_1_examples() {
    for g in [symmetric(4).unwrap(), symmetric(3).unwrap(), cyclic(12).unwrap()] {
        let v = trivially(&g, check_lemma_2_1);
        assert!(v.holds && !v.vacuous);
    }
}

#[test]
fn lemma_2_2_examples() {
    let v = trivially(&symmetric(3).unwrap(), check_lemma_2_2);
    assert!(v.holds && !v.vacuous);
    let f21 = frobenius(7, 3).unwrap();
    let v = trivially(&f21, check_lemma_2_2);
    assert!(v.holds && !v.vacuous);
    // first witness in lattice order has order 3; the order-7 subgroup also qualifies
    assert_eq!(v.witnesses[0].elements.len(), 3);
    let odd_nilpotent: Vec<usize> = maximal(&f21, &subgroups(&f21))
        .iter()
        .filter(|m| m.len() % 2 == 1 && is_nilpotent(&f21, m))
        .map(|m| m.len())
        .collect();
    assert!(odd_nilpotent.contains(&7) && odd_nilpotent.contains(&3));
    let v = trivially(&quaternion8().unwrap(), check_lemma_2_2);
    assert!(v.holds && v.vacuous);
}

#[test]
fn lemma_2_3_examples() {
    let g = symmetric(4).unwrap();
    let v = trivially(&g, check_lemma_2_3);
    assert!(v.holds && !v.vacuous);
    // oracle: every maximal subgroup is self-normalizing or normal
    for m in maximal(&g, &subgroups(&g)) {
        let n = normalizer(&g, &m);
        assert!(n == m || n.len() == g.order());
    }
    let f = fixture("v4-act3");
    let v = with_ctx(&f.group, f.action("A=C3(cycle)").unwrap(), check_lemma_2_3);
    assert!(v.holds && !v.vacuous);
}

#[test]
fn lemma_2_4_examples() {
    let g = frobenius(7, 6).unwrap();
    let lattice = all_subgroups(&g, DEFAULT_CAP).unwrap();
    let h = lattice
        .subgroups()
        .iter()
        .find(|h| h.order() == 6)
        .unwrap();
    match check_lemma_2_4(&g, &lattice, h) {
        Lemma24Outcome::Complement(k) => {
            assert_eq!(k.order(), 7);
            let (k, h) = (set_of(&k), set_of(h));
            assert_eq!(k.intersection(&h).count(), 1);
            let kh: Set = k.iter().flat_map(|&a| h.iter().map(move |&b| (a, b))).map(|(a, b)| g.mul(a, b)).collect();
            assert_eq!(kh.len(), g.order());
            assert!(is_normal(&g, &k));
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(check_lemma_2_4(&g, &lattice, &g.whole()), Lemma24Outcome::NotApplicable(_)));

    let s3 = symmetric(3).unwrap();
    let lattice = all_subgroups(&s3, DEFAULT_CAP).unwrap();
    let two = lattice.subgroups().iter().find(|h| h.order() == 2).unwrap();
    assert!(matches!(check_lemma_2_4(&s3, &lattice, two), Lemma24Outcome::NotApplicable(_)));
}

#[test]
fn downstream_examples() {
    let names = |g: &GroupTable| -> Vec<String> {
        trivially(g, check_downstream)
            .into_iter()
            .filter(|d| {
                assert!(d.verdict.holds, "{}: {}", d.name, d.verdict.detail);
                d.triggered
            })
            .map(|d| d.name)
            .collect()
    };
    let a4 = names(&alternating(4).unwrap());
    assert!(a4.contains(&"thm1.1".to_string()));
    let r = names(&remark());
    assert!(r.contains(&"thm1.6".to_string()) && r.contains(&"thm1.8".to_string()));
    assert!(names(&symmetric(4).unwrap()).is_empty());
}

#[test]
fn alternating_four_normal_sylow_is_the_klein_group() {
    let g = alternating(4).unwrap();
    let v4: Set = g.elements().filter(|&x| g.element_order(x) <= 2).collect();
    assert_eq!(closure(&g, &v4.iter().copied().collect::<Vec<_>>()), v4);
    assert!(is_normal(&g, &v4));
}
