//! Finite groups as dense Cayley tables, and subgroups as bitsets over ids.

use std::collections::{HashMap, VecDeque};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::action::Automorphism;
use crate::bits::Bits;
use crate::error::{GroupError, Result};
use crate::perm::Permutation;

pub type ElemId = u32;

pub const DEFAULT_CAP: usize = 360;
pub const CAP_ENV: &str = "MAXINV_CAP";

/// Largest group order the tool will build.
pub fn cap_from_env() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_CAP)
}

const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;
const SAMPLED_TRIPLES: usize = 10_000;
const SAMPLE_SEED: u64 = 0x5eed_0001;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<ElemId>,
    inv: Vec<ElemId>,
    elem_orders: Vec<u32>,
    labels: Option<Vec<Permutation>>,
    generators: Vec<ElemId>,
}

impl GroupTable {
    /// Builds a table from a flat `order * order` multiplication array with
    /// identity at id 0. Use [`GroupTable::verify_axioms`] to validate.
    pub fn from_mul(order: usize, mul: Vec<ElemId>) -> Self {
        assert_eq!(mul.len(), order * order);
        let mut inv = vec![0; order];
        for x in 0..order {
            inv[x] = (0..order)
                .find(|&y| mul[x * order + y] == 0)
                .expect("every element has an inverse") as ElemId;
        }
        let mut g = GroupTable {
            order,
            mul,
            inv,
            elem_orders: Vec::new(),
            labels: None,
            generators: Vec::new(),
        };
        g.elem_orders = (0..order as ElemId).map(|x| g.compute_order(x)).collect();
        g.generators = g.greedy_generators(&g.whole());
        g
    }

    pub fn trivial() -> Self {
        let mut g = GroupTable::from_mul(1, vec![0]);
        g.labels = Some(vec![Permutation::identity(1)]);
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: ElemId, y: ElemId) -> ElemId {
        self.mul[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: ElemId) -> ElemId {
        self.inv[x as usize]
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> {
        0..self.order as ElemId
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: ElemId, x: ElemId) -> ElemId {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `x^-1 y^-1 x y`
    #[inline]
    pub fn commutator(&self, x: ElemId, y: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: ElemId, k: usize) -> ElemId {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    /// Least `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: ElemId) -> usize {
        self.elem_orders[x as usize] as usize
    }

    fn compute_order(&self, x: ElemId) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn labels(&self) -> Option<&[Permutation]> {
        self.labels.as_deref()
    }

    /// Generating set: the input generators for permutation groups, the
    /// combined factor generators for products, a greedy set otherwise.
    pub fn generators(&self) -> &[ElemId] {
        &self.generators
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn id_of_label(&self, p: &Permutation) -> Option<ElemId> {
        self.labels
            .as_ref()?
            .iter()
            .position(|q| q == p)
            .map(|i| i as ElemId)
    }

    /// Identity, inverse, Latin-square and associativity checks. Associativity
    /// is exhaustive up to order 64 and sampled with a fixed seed above.
    pub fn verify_axioms(&self) -> std::result::Result<(), String> {
        let n = self.order;
        for x in self.elements() {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(format!("identity law fails at {x}"));
            }
            if self.mul(x, self.inv(x)) != 0 {
                return Err(format!("inverse law fails at {x}"));
            }
        }
        for x in self.elements() {
            for by_row in [true, false] {
                let mut seen = Bits::new(n);
                for y in self.elements() {
                    let z = if by_row { self.mul(x, y) } else { self.mul(y, x) };
                    if !seen.insert(z as usize) {
                        return Err(format!("table is not a Latin square at {x}"));
                    }
                }
            }
        }
        let assoc = |x: ElemId, y: ElemId, z: ElemId| {
            self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z))
        };
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for x in self.elements() {
                for y in self.elements() {
                    for z in self.elements() {
                        if !assoc(x, y, z) {
                            return Err(format!("associativity fails at ({x}, {y}, {z})"));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
            for _ in 0..SAMPLED_TRIPLES {
                let (x, y, z) = (
                    rng.gen_range(0..n) as ElemId,
                    rng.gen_range(0..n) as ElemId,
                    rng.gen_range(0..n) as ElemId,
                );
                if !assoc(x, y, z) {
                    return Err(format!("associativity fails at ({x}, {y}, {z})"));
                }
            }
        }
        Ok(())
    }

    // ---- subgroups ----

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_bits_unchecked(Bits::full(self.order))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_bits_unchecked(Bits::from_ids(self.order, [0]))
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[ElemId]) -> Subgroup {
        self.extend(&self.trivial_subgroup(), gens)
    }

    /// Subgroup generated by `base` together with `extra`.
    pub fn extend(&self, base: &Subgroup, extra: &[ElemId]) -> Subgroup {
        let fresh: Vec<ElemId> = extra
            .iter()
            .copied()
            .filter(|&x| !base.contains(x))
            .collect();
        if fresh.is_empty() {
            return base.clone();
        }
        let mut gens = self.greedy_generators(base);
        gens.extend(fresh);
        let mut bits = Bits::from_ids(self.order, [0]);
        let mut queue = VecDeque::from([0 as ElemId]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if bits.insert(y as usize) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_bits_unchecked(bits)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        self.extend(a, &self.greedy_generators(b))
    }

    /// Greedy generating set of `h`: scan ids ascending and keep those not yet
    /// generated.
    pub fn greedy_generators(&self, h: &Subgroup) -> Vec<ElemId> {
        let mut gens = Vec::new();
        let mut current = Bits::from_ids(self.order, [0]);
        let mut count = 1;
        for x in h.iter() {
            if count == h.order() {
                break;
            }
            if current.contains(x as usize) {
                continue;
            }
            gens.push(x);
            current = self.closure_bits(&gens);
            count = current.count();
        }
        gens
    }

    fn closure_bits(&self, gens: &[ElemId]) -> Bits {
        let mut bits = Bits::from_ids(self.order, [0]);
        let mut queue = VecDeque::from([0 as ElemId]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if bits.insert(y as usize) {
                    queue.push_back(y);
                }
            }
        }
        bits
    }

    /// Returns the subgroup with these members, or `None` if they are not
    /// closed under multiplication.
    pub fn subgroup_from_ids(&self, ids: &[ElemId]) -> Option<Subgroup> {
        let bits = Bits::from_ids(self.order, ids.iter().map(|&x| x as usize));
        self.subgroup_from_bits(bits)
    }

    pub fn subgroup_from_bits(&self, bits: Bits) -> Option<Subgroup> {
        if bits.len() != self.order || !bits.contains(0) {
            return None;
        }
        // finite: closure under multiplication suffices
        for x in bits.iter() {
            for y in bits.iter() {
                if !bits.contains(self.mul(x as ElemId, y as ElemId) as usize) {
                    return None;
                }
            }
        }
        Some(Subgroup::from_bits_unchecked(bits))
    }

    /// `g H g^-1`
    pub fn conjugate(&self, h: &Subgroup, g: ElemId) -> Subgroup {
        Subgroup::from_bits_unchecked(Bits::from_ids(
            self.order,
            h.iter().map(|x| self.conj(g, x) as usize),
        ))
    }

    /// The set `AB`, which is a subgroup when either factor normalizes the other.
    pub fn product_set(&self, a: &Subgroup, b: &Subgroup) -> Bits {
        let mut bits = Bits::new(self.order);
        for x in a.iter() {
            for y in b.iter() {
                bits.insert(self.mul(x, y) as usize);
            }
        }
        bits
    }

    /// `AB` as a subgroup, if it is one.
    pub fn product_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Option<Subgroup> {
        let bits = self.product_set(a, b);
        self.subgroup_from_bits(bits)
    }
}

/// A subgroup of some [`GroupTable`], stored as the bitset of its member ids.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subgroup {
    bits: Bits,
    order: usize,
}

impl Subgroup {
    pub(crate) fn from_bits_unchecked(bits: Bits) -> Self {
        let order = bits.count();
        Subgroup { bits, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn parent_order(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn contains(&self, x: ElemId) -> bool {
        self.bits.contains(x as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.bits.iter().map(|x| x as ElemId)
    }

    pub fn elements(&self) -> Vec<ElemId> {
        self.iter().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.bits.len()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.bits.is_subset(&other.bits)
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order < other.order && self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_bits_unchecked(self.bits.intersection(&other.bits))
    }

    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn index_in(&self, parent: &Subgroup) -> usize {
        parent.order / self.order
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Closure of permutation generators, inferring the degree from the first
/// generator (degree 1 for an empty list).
pub fn closure_from_generators(gens: &[Permutation], cap: usize) -> Result<GroupTable> {
    let degree = gens.first().map_or(1, |g| g.degree());
    closure_from_generators_on(degree, gens, cap)
}

/// Breadth-first closure over the sorted generator list. Ids follow discovery
/// order, identity first; `generators()` reports the input list's ids in
/// input order.
pub fn closure_from_generators_on(
    degree: usize,
    gens: &[Permutation],
    cap: usize,
) -> Result<GroupTable> {
    for g in gens {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Permutation::from_images(g.images().to_vec())?;
    }
    let mut sorted: Vec<Permutation> = gens.to_vec();
    sorted.sort();
    sorted.dedup();

    let mut elems = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, ElemId> = HashMap::from([(elems[0].clone(), 0)]);
    let k = sorted.len();
    let mut rmul: Vec<ElemId> = Vec::new();
    let mut parent: Vec<(ElemId, usize)> = vec![(0, usize::MAX)];
    let mut cursor = 0;
    while cursor < elems.len() {
        for (gi, g) in sorted.iter().enumerate() {
            let y = elems[cursor].then(g);
            let id = match index.get(&y) {
                Some(&id) => id,
                None => {
                    let id = elems.len() as ElemId;
                    if elems.len() >= cap {
                        return Err(GroupError::TooLarge { cap });
                    }
                    index.insert(y.clone(), id);
                    elems.push(y);
                    parent.push((cursor as ElemId, gi));
                    id
                }
            };
            rmul.push(id);
        }
        cursor += 1;
    }

    let n = elems.len();
    let mut mul = vec![0 as ElemId; n * n];
    for x in 0..n {
        mul[x * n] = x as ElemId;
        for y in 1..n {
            let (py, gi) = parent[y];
            let left = mul[x * n + py as usize] as usize;
            mul[x * n + y] = rmul[left * k + gi];
        }
    }
    let mut table = GroupTable::from_mul(n, mul);
    table.generators = gens.iter().map(|g| index[g]).collect();
    table.labels = Some(elems);
    Ok(table)
}

/// `G × H` with id `(g, h) ↦ g·|H| + h`.
pub fn direct_product(g: &GroupTable, h: &GroupTable, cap: usize) -> Result<GroupTable> {
    let n = g.order() * h.order();
    if n > cap {
        return Err(GroupError::TooLarge { cap });
    }
    let hn = h.order();
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let (ga, ha) = (a / hn, a % hn);
            let (gb, hb) = (b / hn, b % hn);
            mul[a * n + b] = g.mul(ga as ElemId, gb as ElemId) * hn as ElemId
                + h.mul(ha as ElemId, hb as ElemId);
        }
    }
    let mut table = GroupTable::from_mul(n, mul);
    table.generators = product_generators(g, h);
    Ok(table)
}

fn product_generators(n: &GroupTable, h: &GroupTable) -> Vec<ElemId> {
    let hn = h.order() as ElemId;
    n.generators()
        .iter()
        .map(|&x| x * hn)
        .chain(h.generators().iter().copied())
        .collect()
}

/// `N ⋊ H` where `act[h]` is the automorphism of `N` induced by `h`;
/// `(n1, h1)(n2, h2) = (n1·act(h1)(n2), h1h2)` with id `n·|H| + h`.
pub fn semidirect_product(
    n: &GroupTable,
    h: &GroupTable,
    act: &[Automorphism],
    cap: usize,
) -> Result<GroupTable> {
    if act.len() != h.order() {
        return Err(GroupError::InvalidAction(format!(
            "expected {} automorphisms, got {}",
            h.order(),
            act.len()
        )));
    }
    for (i, a) in act.iter().enumerate() {
        a.validate(n)
            .map_err(|e| GroupError::InvalidAutomorphism(format!("image of {i}: {e}")))?;
    }
    for h1 in h.elements() {
        for h2 in h.elements() {
            let lhs = &act[h.mul(h1, h2) as usize];
            let rhs = act[h1 as usize].compose(&act[h2 as usize]);
            if *lhs != rhs {
                return Err(GroupError::InvalidAction(format!(
                    "act({h1}·{h2}) != act({h1})∘act({h2})"
                )));
            }
        }
    }
    let total = n.order() * h.order();
    if total > cap {
        return Err(GroupError::TooLarge { cap });
    }
    let hn = h.order();
    let mut mul = vec![0; total * total];
    for a in 0..total {
        let (n1, h1) = ((a / hn) as ElemId, (a % hn) as ElemId);
        for b in 0..total {
            let (n2, h2) = ((b / hn) as ElemId, (b % hn) as ElemId);
            let nn = n.mul(n1, act[h1 as usize].apply(n2));
            mul[a * total + b] = nn * hn as ElemId + h.mul(h1, h2);
        }
    }
    let mut table = GroupTable::from_mul(total, mul);
    table.generators = product_generators(n, h);
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm(degree: usize, cycles: &[&[u32]]) -> Permutation {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    /// Independent oracle: repeatedly multiply everything known by everything
    /// known until nothing new appears.
    fn brute_force_order(gens: &[Permutation], degree: usize) -> usize {
        let mut set: std::collections::BTreeSet<Permutation> = gens.iter().cloned().collect();
        set.insert(Permutation::identity(degree));
        loop {
            let items: Vec<_> = set.iter().cloned().collect();
            let before = set.len();
            for a in &items {
                for b in &items {
                    set.insert(a.then(b));
                }
            }
            if set.len() == before {
                return before;
            }
        }
    }

    #[test]
    fn closure_orders_match_brute_force() {
        let s3 = [perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])];
        let d8 = [perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 2]])];
        assert_eq!(brute_force_order(&s3, 3), 6);
        assert_eq!(brute_force_order(&d8, 4), 8);
        let g = closure_from_generators(&s3, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 6);
        g.verify_axioms().unwrap();
        let g = closure_from_generators(&d8, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 8);
        g.verify_axioms().unwrap();
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = closure_from_generators(&[], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
        g.verify_axioms().unwrap();
    }

    #[test]
    fn cap_and_degree_errors() {
        let s5 = [perm(5, &[&[0, 1]]), perm(5, &[&[0, 1, 2, 3, 4]])];
        assert_eq!(
            closure_from_generators(&s5, 60).unwrap_err(),
            GroupError::TooLarge { cap: 60 }
        );
        let mixed = [perm(3, &[&[0, 1]]), perm(4, &[&[0, 1]])];
        assert!(matches!(
            closure_from_generators(&mixed, DEFAULT_CAP),
            Err(GroupError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn element_orders_in_s3() {
        let g = closure_from_generators(&[perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])], 100)
            .unwrap();
        assert_eq!(g.element_order(0), 1);
        let three_cycle = g.id_of_label(&perm(3, &[&[0, 1, 2]])).unwrap();
        assert_eq!(g.element_order(three_cycle), 3);
        let c6 = closure_from_generators(&[perm(6, &[&[0, 1, 2, 3, 4, 5]])], 100).unwrap();
        assert_eq!(c6.element_order(1), 6);
    }

    #[test]
    fn generators_keep_input_order() {
        let a = perm(3, &[&[0, 1, 2]]);
        let b = perm(3, &[&[0, 1]]);
        let g = closure_from_generators(&[a.clone(), b.clone()], 100).unwrap();
        let labels = g.labels().unwrap();
        assert_eq!(labels[g.generators()[0] as usize], a);
        assert_eq!(labels[g.generators()[1] as usize], b);
    }
}
