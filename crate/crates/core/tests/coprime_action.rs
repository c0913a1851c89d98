mod common;

use common::{fixture, invariant, maximal, set_of, subgroups, Set};
use maxinv::action::{
    action_closure, brute_force_automorphisms, invariant_subgroups, invariant_sylows,
    maximal_invariant_subgroups,
};
use maxinv::catalog::{curated_fixtures, paper_fixtures, symmetric};
use maxinv::group::DEFAULT_CAP;
use maxinv::lattice::all_subgroups;
use maxinv::{Automorphism, GroupError};

const D14_ACTION: &str = "A=C3(r->r^2)";

#[test]
fn d14_invariant_structure() {
    let f = fixture("d14-act3");
    let a = f.action(D14_ACTION).unwrap();
    assert_eq!(a.order(), 3);
    let lattice = all_subgroups(&f.group, DEFAULT_CAP).unwrap();

    let inv = invariant_subgroups(&lattice, a);
    let orders: Vec<usize> = inv.iter().map(|h| h.order()).collect();
    assert_eq!(orders, vec![1, 2, 7, 14]);

    // oracle over a naive lattice and the whole closure of A
    let naive: Vec<Set> = subgroups(&f.group)
        .into_iter()
        .filter(|h| invariant(h, a.elements()))
        .collect();
    let mut ours: Vec<Set> = inv.iter().map(set_of).collect();
    ours.sort();
    let mut theirs = naive.clone();
    theirs.sort();
    assert_eq!(ours, theirs);

    let max = maximal_invariant_subgroups(&lattice, a);
    let mut orders: Vec<usize> = max.iter().map(|h| h.order()).collect();
    orders.sort();
    assert_eq!(orders, vec![2, 7]);
    assert_eq!(maximal(&f.group, &naive).len(), 2);

    assert_eq!(invariant_sylows(&f.group, &lattice, a, 2).unwrap().len(), 1);
    let sevens = invariant_sylows(&f.group, &lattice, a, 7).unwrap();
    assert_eq!(sevens.len(), 1);
    assert_eq!(sevens[0].order(), 7);
    assert!(a.is_invariant(&sevens[0]));
}

#[test]
fn v4_cycling_action() {
    let f = fixture("v4-act3");
    let a = f.action("A=C3(cycle)").unwrap();
    assert_eq!(a.order(), 3);
    let lattice = all_subgroups(&f.group, DEFAULT_CAP).unwrap();
    let inv: Vec<usize> = invariant_subgroups(&lattice, a).iter().map(|h| h.order()).collect();
    assert_eq!(inv, vec![1, 4]);
    let max = maximal_invariant_subgroups(&lattice, a);
    assert_eq!(max.len(), 1);
    assert!(max[0].is_trivial());
    for h in lattice.subgroups().iter().filter(|h| h.order() == 2) {
        assert!(!a.is_invariant(h));
    }
}

#[test]
fn trivial_action_sees_the_whole_lattice() {
    for f in paper_fixtures().unwrap() {
        let lattice = all_subgroups(&f.group, DEFAULT_CAP).unwrap();
        let a = &f.actions[0].action;
        assert!(a.is_trivial());
        assert_eq!(invariant_subgroups(&lattice, a), lattice.subgroups().to_vec());
    }
}

#[test]
fn generator_and_closure_invariance_agree() {
    let mut all = paper_fixtures().unwrap();
    all.extend(curated_fixtures().unwrap());
    for f in all.iter().filter(|f| f.group.order() <= 60) {
        let lattice = all_subgroups(&f.group, DEFAULT_CAP).unwrap();
        for a in &f.actions {
            for h in lattice.subgroups() {
                assert_eq!(a.action.is_invariant(h), a.action.is_invariant_by_closure(h));
            }
        }
    }
}

#[test]
fn automorphisms_preserve_structure() {
    let mut all = paper_fixtures().unwrap();
    all.extend(curated_fixtures().unwrap());
    for f in all.iter().filter(|f| f.group.order() <= 48) {
        let g = &f.group;
        let lattice = all_subgroups(g, DEFAULT_CAP).unwrap();
        for a in &f.actions {
            for phi in a.action.elements() {
                for h in lattice.subgroups() {
                    let image = phi.image_of(h);
                    assert_eq!(image.order(), h.order());
                    assert!(lattice.index_of(&image).is_some());
                    assert_eq!(
                        maxinv::structure::is_normal(g, &image),
                        maxinv::structure::is_normal(g, h)
                    );
                    assert_eq!(
                        maxinv::structure::is_nilpotent(g, &image),
                        maxinv::structure::is_nilpotent(g, h)
                    );
                }
            }
        }
    }
}

#[test]
fn glauberman_existence_on_fixtures() {
    let mut all = paper_fixtures().unwrap();
    all.extend(curated_fixtures().unwrap());
    for f in &all {
        let lattice = all_subgroups(&f.group, DEFAULT_CAP).unwrap();
        for a in &f.actions {
            for p in maxinv::arith::prime_divisors(f.group.order()) {
                let found = invariant_sylows(&f.group, &lattice, &a.action, p as u64).unwrap();
                assert!(!found.is_empty(), "{} {} p={p}", f.name, a.name);
            }
        }
    }
}

#[test]
fn brute_force_counts() {
    use maxinv::catalog::{cyclic, elementary_abelian};
    assert_eq!(brute_force_automorphisms(&cyclic(3).unwrap()).unwrap().len(), 2);
    assert_eq!(brute_force_automorphisms(&elementary_abelian(2, 2).unwrap()).unwrap().len(), 6);
    assert_eq!(brute_force_automorphisms(&symmetric(3).unwrap()).unwrap().len(), 6);
    assert_eq!(brute_force_automorphisms(&cyclic(8).unwrap()).unwrap().len(), 4);
}

#[test]
fn empty_generators_give_trivial_action() {
    let g = symmetric(3).unwrap();
    let a = action_closure(&g, &[], DEFAULT_CAP).unwrap();
    assert_eq!(a.order(), 1);
}

#[test]
fn non_coprime_action_is_rejected() {
    let g = symmetric(3).unwrap();
    let three = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
    let err = action_closure(&g, &[Automorphism::inner(&g, three)], DEFAULT_CAP).unwrap_err();
    assert!(matches!(err, GroupError::NotCoprime { action_order: 3, group_order: 6 }));
    assert!(err.to_string().contains("action not coprime"));
}
