//! Naive reference implementations over `BTreeSet`s, sharing nothing with
//! the library beyond the multiplication table.
#![allow(dead_code)]

use std::collections::BTreeSet;

use maxinv::catalog::{paper_fixtures, Fixture};
use maxinv::{Automorphism, GroupTable, Subgroup};

pub type Set = BTreeSet<u32>;

pub fn closure(g: &GroupTable, gens: &[u32]) -> Set {
    let mut set: Set = [0].into();
    let mut frontier = vec![0u32];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn join(g: &GroupTable, a: &Set, b: &Set) -> Set {
    let gens: Vec<u32> = a.union(b).copied().collect();
    closure(g, &gens)
}

/// Every subgroup: cyclic ones, then pairwise joins until nothing new.
pub fn subgroups(g: &GroupTable) -> Vec<Set> {
    let mut all: BTreeSet<Set> = (0..g.order() as u32).map(|x| closure(g, &[x])).collect();
    loop {
        let list: Vec<Set> = all.iter().cloned().collect();
        let mut grew = false;
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                grew |= all.insert(join(g, &list[i], &list[j]));
            }
        }
        if !grew {
            break;
        }
    }
    all.into_iter().collect()
}

pub fn whole(g: &GroupTable) -> Set {
    (0..g.order() as u32).collect()
}

pub fn conj(g: &GroupTable, x: u32, h: u32) -> u32 {
    g.mul(g.mul(x, h), g.inv(x))
}

pub fn normalizer(g: &GroupTable, h: &Set) -> Set {
    (0..g.order() as u32)
        .filter(|&x| h.iter().all(|&y| h.contains(&conj(g, x, y))))
        .collect()
}

pub fn is_normal(g: &GroupTable, h: &Set) -> bool {
    normalizer(g, h).len() == g.order()
}

pub fn is_ti(g: &GroupTable, h: &Set) -> bool {
    (0..g.order() as u32).all(|x| {
        let c: Set = h.iter().map(|&y| conj(g, x, y)).collect();
        let meet = c.intersection(h).count();
        meet == 1 || meet == h.len()
    })
}

/// Lower central series of `h` reaches the identity.
pub fn is_nilpotent(g: &GroupTable, h: &Set) -> bool {
    let mut cur = h.clone();
    loop {
        if cur.len() == 1 {
            return true;
        }
        let comms: Vec<u32> = h
            .iter()
            .flat_map(|&a| cur.iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))
            .collect();
        let next = closure(g, &comms);
        if next == cur {
            return false;
        }
        cur = next;
    }
}

pub fn is_solvable(g: &GroupTable) -> bool {
    let mut cur = whole(g);
    loop {
        if cur.len() == 1 {
            return true;
        }
        let comms: Vec<u32> = cur
            .iter()
            .flat_map(|&a| cur.iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))
            .collect();
        let next = closure(g, &comms);
        if next == cur {
            return false;
        }
        cur = next;
    }
}

pub fn invariant(h: &Set, auts: &[Automorphism]) -> bool {
    auts.iter().all(|phi| h.iter().all(|&x| h.contains(&phi.apply(x))))
}

/// Proper members of `candidates` not strictly inside another proper one.
pub fn maximal(g: &GroupTable, candidates: &[Set]) -> Vec<Set> {
    let proper: Vec<&Set> = candidates.iter().filter(|s| s.len() < g.order()).collect();
    proper
        .iter()
        .filter(|s| !proper.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
        .map(|s| (*s).clone())
        .collect()
}

pub fn set_of(h: &Subgroup) -> Set {
    h.iter().collect()
}

pub fn fixture(name: &str) -> Fixture {
    paper_fixtures()
        .unwrap()
        .into_iter()
        .chain(maxinv::catalog::curated_fixtures().unwrap())
        .find(|f| f.name == name)
        .unwrap_or_else(|| panic!("no fixture {name}"))
}
