//! Complete subgroup lattice enumeration.

use std::collections::{HashMap, VecDeque};

use crate::arith::is_p_power;
use crate::bits::Bits;
use crate::error::{GroupError, Result};
use crate::group::{ElemId, GroupTable, Subgroup};

/// Every subgroup of a group, deduplicated and sorted by `(order, members)`.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    maximal_ids: Vec<usize>,
    index: HashMap<Bits, usize>,
}

impl SubgroupLattice {
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Indices of the maximal proper subgroups.
    pub fn maximal_ids(&self) -> &[usize] {
        &self.maximal_ids
    }

    pub fn maximal(&self) -> impl Iterator<Item = &Subgroup> {
        self.maximal_ids.iter().map(|&i| &self.subgroups[i])
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.bits()).copied()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }
}

/// Enumerates all subgroups: the cyclic subgroups of prime-power order, then
/// joins with those cyclic subgroups until nothing new appears. Every
/// subgroup is generated by its prime-power-order elements, so the fixpoint
/// is the whole lattice.
pub fn all_subgroups(g: &GroupTable, cap: usize) -> Result<SubgroupLattice> {
    if g.order() > cap {
        return Err(GroupError::TooLarge { cap });
    }
    let n = g.order();

    let mut cyclic_gens: Vec<ElemId> = Vec::new();
    let mut seen_cyclic: HashMap<Bits, ()> = HashMap::new();
    for x in g.elements() {
        let k = g.element_order(x);
        if k == 1 || !is_p_power(k, crate::arith::prime_divisors(k)[0]) {
            continue;
        }
        let c = g.generate(&[x]);
        if seen_cyclic.insert(c.bits().clone(), ()).is_none() {
            cyclic_gens.push(x);
        }
    }

    let trivial = g.trivial_subgroup();
    let mut entries: Vec<(Subgroup, Vec<ElemId>)> = vec![(trivial.clone(), Vec::new())];
    let mut index: HashMap<Bits, usize> = HashMap::from([(trivial.bits().clone(), 0)]);
    let mut queue = VecDeque::from([0usize]);

    while let Some(i) = queue.pop_front() {
        for &c in &cyclic_gens {
            if entries[i].0.contains(c) {
                continue;
            }
            let mut gens = entries[i].1.clone();
            gens.push(c);
            let bits = closure(g, &gens);
            if index.contains_key(&bits) {
                continue;
            }
            let id = entries.len();
            index.insert(bits.clone(), id);
            entries.push((Subgroup::from_bits_unchecked(bits), gens));
            queue.push_back(id);
        }
    }

    let mut subgroups: Vec<Subgroup> = entries.into_iter().map(|(s, _)| s).collect();
    subgroups.sort();
    let index: HashMap<Bits, usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.bits().clone(), i))
        .collect();

    let maximal_ids = (0..subgroups.len())
        .filter(|&i| {
            let h = &subgroups[i];
            h.order() < n
                && !subgroups
                    .iter()
                    .any(|k| k.order() < n && h.is_proper_subgroup_of(k))
        })
        .collect();

    Ok(SubgroupLattice {
        subgroups,
        maximal_ids,
        index,
    })
}

fn closure(g: &GroupTable, gens: &[ElemId]) -> Bits {
    let mut bits = Bits::from_ids(g.order(), [0]);
    let mut queue = VecDeque::from([0 as ElemId]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if bits.insert(y as usize) {
                queue.push_back(y);
            }
        }
    }
    bits
}
