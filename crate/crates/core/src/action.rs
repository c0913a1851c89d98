//! Automorphisms, coprime action groups, and invariant subgroups.
//!
//! An acting group `A` is represented by its image in `Aut(G)`. Every
//! hypothesis and conclusion about `A` only asks which subgroups are
//! `A`-invariant, and the image of a group of order coprime to `|G|` has
//! order coprime to `|G|`, so the image is all we keep. The coprimality
//! certificate is checked on the image.

use std::collections::{HashMap, VecDeque};

use crate::arith::gcd;
use crate::error::{GroupError, Result};
use crate::group::{ElemId, GroupTable, Subgroup};
use crate::lattice::SubgroupLattice;

/// An automorphism of a [`GroupTable`] as an id-to-id map.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Automorphism {
    images: Vec<ElemId>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Automorphism {
            images: (0..order as ElemId).collect(),
        }
    }

    /// Wraps an id map after checking it is an automorphism of `g`.
    pub fn from_images(g: &GroupTable, images: Vec<ElemId>) -> Result<Self> {
        let a = Automorphism { images };
        a.validate(g).map_err(GroupError::InvalidAutomorphism)?;
        Ok(a)
    }

    /// Extends `gens[i] ↦ images[i]` to a map on all of `g`. Fails if the
    /// generators do not generate `g` or the assignment does not extend to
    /// an automorphism.
    pub fn from_generator_images(
        g: &GroupTable,
        gens: &[ElemId],
        images: &[ElemId],
    ) -> Result<Self> {
        if gens.len() != images.len() {
            return Err(GroupError::InvalidAutomorphism(format!(
                "{} generators but {} images",
                gens.len(),
                images.len()
            )));
        }
        const UNSET: ElemId = ElemId::MAX;
        let mut map = vec![UNSET; g.order()];
        map[0] = 0;
        let mut queue = VecDeque::from([0 as ElemId]);
        while let Some(x) = queue.pop_front() {
            for (&s, &t) in gens.iter().zip(images) {
                let y = g.mul(x, s) as usize;
                let image = g.mul(map[x as usize], t);
                if map[y] == UNSET {
                    map[y] = image;
                    queue.push_back(y as ElemId);
                } else if map[y] != image {
                    return Err(GroupError::InvalidAutomorphism(
                        "generator images do not define a homomorphism".into(),
                    ));
                }
            }
        }
        if map.contains(&UNSET) {
            return Err(GroupError::InvalidAutomorphism(
                "listed elements do not generate the group".into(),
            ));
        }
        Automorphism::from_images(g, map)
    }

    /// Bijective, fixes the identity, and respects multiplication. The
    /// homomorphism check runs over all `(x, s)` with `s` in the table's
    /// generating set, which is exact.
    pub fn validate(&self, g: &GroupTable) -> std::result::Result<(), String> {
        let n = g.order();
        if self.images.len() != n {
            return Err(format!("map has {} entries, group has {n}", self.images.len()));
        }
        if self.images[0] != 0 {
            return Err("identity is not fixed".into());
        }
        let mut seen = vec![false; n];
        for &y in &self.images {
            if y as usize >= n || std::mem::replace(&mut seen[y as usize], true) {
                return Err("map is not a bijection".into());
            }
        }
        for x in g.elements() {
            for &s in g.generators() {
                if self.apply(g.mul(x, s)) != g.mul(self.apply(x), self.apply(s)) {
                    return Err(format!("not a homomorphism at ({x}, {s})"));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn apply(&self, x: ElemId) -> ElemId {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[ElemId] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as ElemId;
        }
        Automorphism { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as ElemId == x)
    }

    pub fn image_of(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_bits_unchecked(crate::bits::Bits::from_ids(
            h.parent_order(),
            h.iter().map(|x| self.apply(x) as usize),
        ))
    }

    /// Inner automorphism `x ↦ g x g^-1`.
    pub fn inner(g: &GroupTable, by: ElemId) -> Automorphism {
        Automorphism {
            images: g.elements().map(|x| g.conj(by, x)).collect(),
        }
    }
}

/// The subgroup of `Aut(G)` generated by some automorphisms, certified to
/// have order coprime to `|G|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionGroup {
    generators: Vec<Automorphism>,
    elements: Vec<Automorphism>,
}

impl ActionGroup {
    /// `A = 1`.
    pub fn trivial(g: &GroupTable) -> Self {
        ActionGroup {
            generators: Vec::new(),
            elements: vec![Automorphism::identity(g.order())],
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn generators(&self) -> &[Automorphism] {
        &self.generators
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    /// `φ(H) = H` for every generator `φ`. Debug builds cross-check against
    /// every element of the closure.
    pub fn is_invariant(&self, h: &Subgroup) -> bool {
        let by_gens = self
            .generators
            .iter()
            .all(|phi| h.iter().all(|x| h.contains(phi.apply(x))));
        debug_assert_eq!(by_gens, self.is_invariant_by_closure(h));
        by_gens
    }

    pub fn is_invariant_by_closure(&self, h: &Subgroup) -> bool {
        self.elements
            .iter()
            .all(|phi| h.iter().all(|x| h.contains(phi.apply(x))))
    }
}

/// Closes `gens` under composition. Rejects non-automorphisms and closures
/// whose order shares a prime with `|G|`.
pub fn action_closure(g: &GroupTable, gens: &[Automorphism], cap: usize) -> Result<ActionGroup> {
    for (i, a) in gens.iter().enumerate() {
        a.validate(g)
            .map_err(|e| GroupError::InvalidAutomorphism(format!("generator {i}: {e}")))?;
    }
    let limit = cap.saturating_mul(10);
    let identity = Automorphism::identity(g.order());
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Automorphism, usize> = HashMap::from([(identity, 0)]);
    let mut cursor = 0;
    while cursor < elements.len() {
        for s in gens {
            let y = s.compose(&elements[cursor]);
            if !index.contains_key(&y) {
                if elements.len() >= limit {
                    return Err(GroupError::TooLarge { cap: limit });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        cursor += 1;
    }
    if gcd(elements.len(), g.order()) != 1 {
        return Err(GroupError::NotCoprime {
            action_order: elements.len(),
            group_order: g.order(),
        });
    }
    Ok(ActionGroup {
        generators: gens.to_vec(),
        elements,
    })
}

/// Filter of the lattice by `A`-invariance, in lattice order.
pub fn invariant_subgroups(lattice: &SubgroupLattice, a: &ActionGroup) -> Vec<Subgroup> {
    invariant_indices(lattice, a)
        .into_iter()
        .map(|i| lattice.subgroups()[i].clone())
        .collect()
}

pub(crate) fn invariant_indices(lattice: &SubgroupLattice, a: &ActionGroup) -> Vec<usize> {
    lattice
        .subgroups()
        .iter()
        .enumerate()
        .filter(|(_, h)| a.is_invariant(h))
        .map(|(i, _)| i)
        .collect()
}

/// Inclusion-maximal members of the proper invariant subgroups.
pub fn maximal_invariant_subgroups(lattice: &SubgroupLattice, a: &ActionGroup) -> Vec<Subgroup> {
    maximal_among(lattice, &invariant_indices(lattice, a))
        .into_iter()
        .map(|i| lattice.subgroups()[i].clone())
        .collect()
}

/// Indices in `candidates` (ascending lattice order) that are proper and
/// not properly contained in another proper candidate.
pub(crate) fn maximal_among(lattice: &SubgroupLattice, candidates: &[usize]) -> Vec<usize> {
    let subs = lattice.subgroups();
    let proper: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&i| !subs[i].is_whole())
        .collect();
    proper
        .iter()
        .copied()
        .filter(|&i| {
            !proper
                .iter()
                .any(|&j| subs[i].is_proper_subgroup_of(&subs[j]))
        })
        .collect()
}

/// Sylow `p`-subgroups fixed setwise by `A`.
pub fn invariant_sylows(
    g: &GroupTable,
    lattice: &SubgroupLattice,
    a: &ActionGroup,
    p: u64,
) -> Result<Vec<Subgroup>> {
    Ok(crate::structure::sylow_subgroups(g, lattice, p)?
        .into_iter()
        .filter(|s| a.is_invariant(s))
        .collect())
}

pub const BRUTE_FORCE_AUT_LIMIT: usize = 24;

/// Every automorphism of a group of order at most 24, by trying all
/// order-preserving image assignments for a greedy generating set.
pub fn brute_force_automorphisms(g: &GroupTable) -> Result<Vec<Automorphism>> {
    if g.order() > BRUTE_FORCE_AUT_LIMIT {
        return Err(GroupError::TooLarge {
            cap: BRUTE_FORCE_AUT_LIMIT,
        });
    }
    let gens = g.greedy_generators(&g.whole());
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search_images(g, &gens, &mut images, &mut out);
    out.sort();
    Ok(out)
}

fn search_images(
    g: &GroupTable,
    gens: &[ElemId],
    images: &mut Vec<ElemId>,
    out: &mut Vec<Automorphism>,
) {
    if images.len() == gens.len() {
        if let Ok(a) = Automorphism::from_generator_images(g, gens, images) {
            out.push(a);
        }
        return;
    }
    let want = g.element_order(gens[images.len()]);
    for y in g.elements() {
        if g.element_order(y) == want {
            images.push(y);
            search_images(g, gens, images, out);
            images.pop();
        }
    }
}

/// Coprime cyclic actions generated by single automorphisms, for small
/// groups. Used by tests as an independent source of actions.
pub fn coprime_automorphisms(g: &GroupTable) -> Result<Vec<Automorphism>> {
    Ok(brute_force_automorphisms(g)?
        .into_iter()
        .filter(|a| {
            let mut k = 1;
            let mut cur = a.clone();
            while !cur.is_identity() {
                cur = a.compose(&cur);
                k += 1;
            }
            gcd(k, g.order()) == 1
        })
        .collect())
}
