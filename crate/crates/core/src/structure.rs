//! Structural predicates on subgroups of a [`GroupTable`].
//!
//! Predicates that talk about "a group" take the group as a subgroup `h` of
//! some table `g`; pass `g.whole()` to ask about the table itself.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_p_power, is_prime, p_part, prime_divisors};
use crate::error::{GroupError, Result};
use crate::group::{ElemId, GroupTable, Subgroup};
use crate::lattice::SubgroupLattice;

/// `{ x ∈ G : x H x^-1 = H }`
pub fn normalizer(g: &GroupTable, h: &Subgroup) -> Subgroup {
    let gens = g.greedy_generators(h);
    let members: Vec<ElemId> = g
        .elements()
        .filter(|&x| gens.iter().all(|&s| h.contains(g.conj(x, s))))
        .collect();
    g.subgroup_from_ids_unchecked(&members)
}

/// `{ x ∈ G : xy = yx for all y ∈ H }`
pub fn centralizer(g: &GroupTable, h: &Subgroup) -> Subgroup {
    let gens = g.greedy_generators(h);
    let members: Vec<ElemId> = g
        .elements()
        .filter(|&x| gens.iter().all(|&s| g.mul(x, s) == g.mul(s, x)))
        .collect();
    g.subgroup_from_ids_unchecked(&members)
}

pub fn center(g: &GroupTable) -> Subgroup {
    centralizer(g, &g.whole())
}

pub fn is_normal(g: &GroupTable, h: &Subgroup) -> bool {
    is_normal_in(g, h, &g.whole())
}

/// `H ⊴ K`, assuming `H ≤ K`.
pub fn is_normal_in(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> bool {
    let hg = g.greedy_generators(h);
    g.greedy_generators(k)
        .iter()
        .all(|&x| hg.iter().all(|&s| h.contains(g.conj(x, s))))
}

fn require_prime(p: u64) -> Result<usize> {
    if is_prime(p) {
        Ok(p as usize)
    } else {
        Err(GroupError::NotPrime(p))
    }
}

/// All Sylow `p`-subgroups of `G`, read off the lattice. For `p ∤ |G|` the
/// trivial subgroup is the unique Sylow `p`-subgroup.
pub fn sylow_subgroups(g: &GroupTable, lattice: &SubgroupLattice, p: u64) -> Result<Vec<Subgroup>> {
    let p = require_prime(p)?;
    let target = p_part(g.order(), p);
    Ok(lattice
        .subgroups()
        .iter()
        .filter(|s| s.order() == target)
        .cloned()
        .collect())
}

fn count_p_elements(g: &GroupTable, h: &Subgroup, p: usize) -> usize {
    h.iter()
        .filter(|&x| is_p_power(g.element_order(x), p))
        .count()
}

/// Subgroup generated by the elements of `h` whose order is a power of `p`
/// (`coprime = false`) or prime to `p` (`coprime = true`).
fn generated_by_p_elements(g: &GroupTable, h: &Subgroup, p: usize, coprime: bool) -> Subgroup {
    let elems: Vec<ElemId> = h
        .iter()
        .filter(|&x| {
            let k = g.element_order(x);
            if coprime {
                gcd(k, p) == 1
            } else {
                is_p_power(k, p)
            }
        })
        .collect();
    g.generate(&elems)
}

/// Every Sylow subgroup of `H` is normal in `H`. A Sylow `p`-subgroup is
/// normal iff it is unique iff `H` has exactly `|H|_p` elements of
/// `p`-power order.
pub fn is_nilpotent(g: &GroupTable, h: &Subgroup) -> bool {
    prime_divisors(h.order())
        .into_iter()
        .all(|p| count_p_elements(g, h, p) == p_part(h.order(), p))
}

/// Nilpotency by termination of the lower central series at 1.
pub fn is_nilpotent_lcs(g: &GroupTable, h: &Subgroup) -> bool {
    lower_central_series(g, h).last().is_some_and(|s| s.is_trivial())
}

/// `H = γ1 ≥ γ2 ≥ …` until it stabilises.
pub fn lower_central_series(g: &GroupTable, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let cur = series.last().unwrap();
        let next = commutator_subgroup(g, cur, h);
        if next == *cur {
            return series;
        }
        series.push(next);
    }
}

/// `[A, B] = ⟨[a, b] : a ∈ A, b ∈ B⟩`
pub fn commutator_subgroup(g: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut gens = Vec::new();
    let mut acc = g.trivial_subgroup();
    for x in a.iter() {
        for y in b.iter() {
            let c = g.commutator(x, y);
            if !acc.contains(c) {
                gens.push(c);
                acc = g.extend(&acc, &[c]);
            }
        }
    }
    acc
}

pub fn derived_subgroup(g: &GroupTable, h: &Subgroup) -> Subgroup {
    commutator_subgroup(g, h, h)
}

pub fn derived_series(g: &GroupTable, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let cur = series.last().unwrap();
        let next = derived_subgroup(g, cur);
        if next == *cur {
            return series;
        }
        series.push(next);
    }
}

pub fn is_solvable(g: &GroupTable, h: &Subgroup) -> bool {
    derived_series(g, h).last().is_some_and(|s| s.is_trivial())
}

/// `gcd(|H|, |K : H|) = 1` for `H ≤ K`.
pub fn is_hall(h: &Subgroup, k: &Subgroup) -> bool {
    gcd(h.order(), k.order() / h.order()) == 1
}

/// Every conjugate of `H` meets `H` trivially or equals it.
pub fn is_ti(g: &GroupTable, h: &Subgroup) -> bool {
    ti_violation(g, h).is_none()
}

/// A conjugating element whose conjugate meets `H` nontrivially and
/// properly, if any.
pub fn ti_violation(g: &GroupTable, h: &Subgroup) -> Option<ElemId> {
    g.elements().find(|&x| {
        let c = g.conjugate(h, x);
        let k = h.intersection_order(&c);
        k != 1 && k != h.order()
    })
}

/// `G` has a normal Sylow `p`-subgroup (`p`-closed).
pub fn is_p_closed(g: &GroupTable, h: &Subgroup, p: u64) -> Result<bool> {
    let p = require_prime(p)?;
    Ok(generated_by_p_elements(g, h, p, false).order() == p_part(h.order(), p))
}

/// `G` has a normal Hall `p'`-subgroup (`p`-nilpotent). Such a subgroup
/// contains every `p'`-element, so it exists iff those elements generate a
/// subgroup of order `|G|_{p'}`.
pub fn is_p_nilpotent(g: &GroupTable, h: &Subgroup, p: u64) -> Result<bool> {
    let p = require_prime(p)?;
    Ok(generated_by_p_elements(g, h, p, true).order() == h.order() / p_part(h.order(), p))
}

/// Lattice scan for a normal subgroup of order `|G|_{p'}`.
pub fn is_p_nilpotent_by_lattice(g: &GroupTable, lattice: &SubgroupLattice, p: u64) -> Result<bool> {
    let p = require_prime(p)?;
    let want = g.order() / p_part(g.order(), p);
    Ok(lattice
        .subgroups()
        .iter()
        .any(|s| s.order() == want && is_normal(g, s)))
}

/// The group of cosets of a normal subgroup. Coset ids follow the smallest
/// member id of each coset.
pub fn quotient_table(g: &GroupTable, n: &Subgroup) -> Result<GroupTable> {
    if !is_normal(g, n) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![u32::MAX; g.order()];
    let mut reps: Vec<ElemId> = Vec::new();
    for x in g.elements() {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for m in n.iter() {
            coset_of[g.mul(x, m) as usize] = id;
        }
    }
    let q = reps.len();
    let mut mul = vec![0; q * q];
    for a in 0..q {
        for b in 0..q {
            mul[a * q + b] = coset_of[g.mul(reps[a], reps[b]) as usize];
        }
    }
    Ok(GroupTable::from_mul(q, mul))
}

/// Some ordering of the primes gives a normal Sylow subgroup at each stage
/// of successive quotients. All orderings are searched.
pub fn has_sylow_tower(g: &GroupTable) -> bool {
    sylow_tower_order(g).is_some()
}

/// The prime ordering of a Sylow tower, if one exists.
pub fn sylow_tower_order(g: &GroupTable) -> Option<Vec<usize>> {
    if g.order() == 1 {
        return Some(Vec::new());
    }
    let whole = g.whole();
    for p in prime_divisors(g.order()) {
        let sylow = generated_by_p_elements(g, &whole, p, false);
        if sylow.order() != p_part(g.order(), p) {
            continue;
        }
        let quotient = quotient_table(g, &sylow).expect("normal Sylow");
        if let Some(mut rest) = sylow_tower_order(&quotient) {
            rest.insert(0, p);
            return Some(rest);
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexKind {
    /// A power of `p`, including index 1.
    PPower,
    PCoprime,
    Mixed,
}

/// Classifies `|K : H|` relative to `p`. Index 1 reports [`IndexKind::PPower`].
pub fn index_kind(h: &Subgroup, k: &Subgroup, p: u64) -> Result<IndexKind> {
    let p = require_prime(p)?;
    let index = k.order() / h.order();
    Ok(if is_p_power(index, p) {
        IndexKind::PPower
    } else if index % p != 0 {
        IndexKind::PCoprime
    } else {
        IndexKind::Mixed
    })
}

/// `G` has a chain of normal subgroups whose factors are `p`-groups or
/// `p'`-groups; refined, this is a chief series with such factors.
pub fn is_p_solvable(g: &GroupTable, lattice: &SubgroupLattice, p: u64) -> Result<bool> {
    let p = require_prime(p)?;
    let normals: Vec<&Subgroup> = lattice
        .subgroups()
        .iter()
        .filter(|s| is_normal(g, s))
        .collect();
    let mut reachable = vec![false; normals.len()];
    reachable[0] = true;
    for i in 1..normals.len() {
        reachable[i] = (0..i).any(|j| {
            reachable[j] && normals[j].is_proper_subgroup_of(normals[i]) && {
                let f = normals[i].order() / normals[j].order();
                is_p_power(f, p) || f % p != 0
            }
        });
    }
    Ok(*reachable.last().unwrap())
}

/// The normal Sylow subgroups of `G`, by ascending prime.
pub fn normal_sylows(g: &GroupTable) -> Vec<(usize, Subgroup)> {
    let whole = g.whole();
    prime_divisors(g.order())
        .into_iter()
        .filter_map(|p| {
            let s = generated_by_p_elements(g, &whole, p, false);
            (s.order() == p_part(g.order(), p)).then_some((p, s))
        })
        .collect()
}

impl GroupTable {
    pub(crate) fn subgroup_from_ids_unchecked(&self, ids: &[ElemId]) -> Subgroup {
        Subgroup::from_bits_unchecked(crate::bits::Bits::from_ids(
            self.order(),
            ids.iter().map(|&x| x as usize),
        ))
    }
}
