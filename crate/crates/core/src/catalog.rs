//! Standard group families, named fixtures with their coprime actions, and
//! the campaign generator.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::action::{action_closure, Automorphism, ActionGroup};
use crate::arith::{gcd, is_prime};
use crate::error::{GroupError, Result};
use crate::group::{
    closure_from_generators, direct_product, semidirect_product, ElemId, GroupTable, DEFAULT_CAP,
};
use crate::lattice::{all_subgroups, SubgroupLattice};
use crate::perm::Permutation;

pub fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(GroupError::InvalidParameters(format!("cyclic({n})")));
    }
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push(((a + b) % n) as ElemId);
        }
    }
    Ok(GroupTable::from_mul(n, mul))
}

/// `Z_p^k`, with id `Σ d_i p^i` for the coordinate vector `d`.
pub fn elementary_abelian(p: usize, k: usize) -> Result<GroupTable> {
    if !is_prime(p as u64) {
        return Err(GroupError::NotPrime(p as u64));
    }
    let n = p.pow(k as u32);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push(vec_to_id(p, &add_vec(p, &id_to_vec(p, k, a), &id_to_vec(p, k, b))) as ElemId);
        }
    }
    Ok(GroupTable::from_mul(n, mul))
}

fn id_to_vec(p: usize, k: usize, mut id: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let d = id % p;
            id /= p;
            d
        })
        .collect()
}

fn vec_to_id(p: usize, v: &[usize]) -> usize {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn add_vec(p: usize, a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
}

/// The automorphism `v ↦ Mv` of `elementary_abelian(p, k)`; `matrix` is
/// row-major `k × k` over `F_p`.
pub fn matrix_automorphism(g: &GroupTable, p: usize, k: usize, matrix: &[usize]) -> Result<Automorphism> {
    let images = (0..g.order())
        .map(|id| {
            let v = id_to_vec(p, k, id);
            let w: Vec<usize> = (0..k)
                .map(|i| (0..k).map(|j| matrix[i * k + j] * v[j]).sum::<usize>() % p)
                .collect();
            vec_to_id(p, &w) as ElemId
        })
        .collect();
    Automorphism::from_images(g, images)
}

/// `Z_n ⋊ Z_m`, the generator of `Z_m` acting as `x ↦ r·x`.
pub fn metacyclic(n: usize, m: usize, r: usize) -> Result<GroupTable> {
    if gcd(r, n) != 1 || pow_mod(r, m, n) != 1 % n {
        return Err(GroupError::InvalidParameters(format!(
            "metacyclic({n}, {m}, {r}): need gcd(r, n) = 1 and r^m ≡ 1"
        )));
    }
    let normal = cyclic(n)?;
    let top = cyclic(m)?;
    let act: Vec<Automorphism> = (0..m)
        .map(|h| {
            let k = pow_mod(r, h, n);
            Automorphism::from_images(&normal, (0..n).map(|x| ((x * k) % n) as ElemId).collect())
        })
        .collect::<Result<_>>()?;
    semidirect_product(&normal, &top, &act, usize::MAX)
}

fn pow_mod(base: usize, exp: usize, m: usize) -> usize {
    (0..exp).fold(1 % m, |acc, _| acc * base % m)
}

/// Smallest unit of multiplicative order exactly `d` modulo `n`.
fn unit_of_order(n: usize, d: usize) -> Option<usize> {
    (1..n.max(2)).find(|&r| {
        gcd(r, n) == 1 && pow_mod(r, d, n) == 1 % n && (1..d).all(|e| pow_mod(r, e, n) != 1 % n)
    })
}

/// `Z_p ⋊ Z_q` with faithful action; requires `q | p − 1`.
pub fn frobenius(p: usize, q: usize) -> Result<GroupTable> {
    if !is_prime(p as u64) || q < 2 || (p - 1) % q != 0 {
        return Err(GroupError::InvalidParameters(format!(
            "frobenius({p}, {q}): need p prime and q | p - 1"
        )));
    }
    metacyclic(p, q, unit_of_order(p, q).expect("cyclic unit group"))
}

/// Dihedral group of the given order (`2n`).
pub fn dihedral(order: usize) -> Result<GroupTable> {
    if order < 2 || order % 2 != 0 {
        return Err(GroupError::InvalidParameters(format!("dihedral({order})")));
    }
    let n = order / 2;
    metacyclic(n, 2, if n > 1 { n - 1 } else { 0 })
}

pub fn symmetric(k: usize) -> Result<GroupTable> {
    if k == 0 || k > 4 {
        return Err(GroupError::InvalidParameters(format!("symmetric({k}): need 1 <= k <= 4")));
    }
    if k == 1 {
        return Ok(GroupTable::trivial());
    }
    let transposition = Permutation::from_cycles(k, &[vec![0, 1]])?;
    let long = Permutation::from_cycles(k, &[(0..k as u32).collect()])?;
    closure_from_generators(&[transposition, long], DEFAULT_CAP)
}

pub fn alternating(k: usize) -> Result<GroupTable> {
    if k == 0 || k > 5 {
        return Err(GroupError::InvalidParameters(format!("alternating({k}): need 1 <= k <= 5")));
    }
    if k < 3 {
        return Ok(GroupTable::trivial());
    }
    let gens: Vec<Permutation> = (0..k as u32 - 2)
        .map(|i| Permutation::from_cycles(k, &[vec![i, i + 1, i + 2]]))
        .collect::<Result<_>>()?;
    closure_from_generators(&gens, DEFAULT_CAP)
}

/// Quaternion group of order 8, as a regular permutation group.
pub fn quaternion8() -> Result<GroupTable> {
    let i = Permutation::from_cycles(8, &[vec![0, 1, 3, 6], vec![2, 5, 7, 4]])?;
    let j = Permutation::from_cycles(8, &[vec![0, 2, 3, 7], vec![1, 4, 6, 5]])?;
    closure_from_generators(&[i, j], DEFAULT_CAP)
}

/// First automorphism of exactly order `k`, in the sorted brute-force list.
fn automorphism_of_order(g: &GroupTable, k: usize) -> Result<Automorphism> {
    crate::action::brute_force_automorphisms(g)?
        .into_iter()
        .find(|a| automorphism_order(a) == k)
        .ok_or_else(|| GroupError::InvalidParameters(format!("no automorphism of order {k}")))
}

fn automorphism_order(a: &Automorphism) -> usize {
    let mut k = 1;
    let mut cur = a.clone();
    while !cur.is_identity() {
        cur = a.compose(&cur);
        k += 1;
    }
    k
}

fn cyclic_action(n: &GroupTable, h_order: usize, gen: &Automorphism) -> Vec<Automorphism> {
    let mut out = vec![Automorphism::identity(n.order())];
    for i in 1..h_order {
        out.push(gen.compose(&out[i - 1]));
    }
    out
}

/// `SL(2,3) ≅ Q8 ⋊ Z3`.
pub fn sl23() -> Result<GroupTable> {
    let q8 = quaternion8()?;
    let z3 = cyclic(3)?;
    let phi = automorphism_of_order(&q8, 3)?;
    semidirect_product(&q8, &z3, &cyclic_action(&q8, 3, &phi), DEFAULT_CAP)
}

/// `Z_p^k ⋊ Z_m` with the generator acting by `matrix` (which must satisfy
/// `M^m = I`).
pub fn vector_semidirect(p: usize, k: usize, m: usize, matrix: &[usize]) -> Result<GroupTable> {
    let v = elementary_abelian(p, k)?;
    let gen = matrix_automorphism(&v, p, k, matrix)?;
    semidirect_product(&v, &cyclic(m)?, &cyclic_action(&v, m, &gen), DEFAULT_CAP)
}

// F16 = F2[x]/(x^4 + x + 1), elements as 4-bit ints matching elementary_abelian(2, 4) ids
fn gf16_mul(mut a: usize, mut b: usize) -> usize {
    let mut r = 0;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 0x10 != 0 {
            a ^= 0x13;
        }
    }
    r
}

fn gf16_pow(a: usize, e: usize) -> usize {
    (0..e).fold(1, |acc, _| gf16_mul(acc, a))
}

fn gf16_scaling(v: &GroupTable, c: usize) -> Result<Automorphism> {
    Automorphism::from_images(v, (0..16).map(|x| gf16_mul(c, x) as ElemId).collect())
}

/// `F16 ⋊ μ3`: cube roots of unity acting on the additive group of `F16` by
/// multiplication (fixed-point-free), together with the automorphism of
/// order 5 given by multiplication with a fifth root of unity.
pub fn f16_mu3() -> Result<(GroupTable, Automorphism)> {
    let v = elementary_abelian(2, 4)?;
    let omega = 2; // x, a primitive element
    let mu3 = gf16_scaling(&v, gf16_pow(omega, 5))?;
    let g = semidirect_product(&v, &cyclic(3)?, &cyclic_action(&v, 3, &mu3), DEFAULT_CAP)?;
    let mu5 = gf16_pow(omega, 3);
    let images = g
        .elements()
        .map(|id| {
            let (n, h) = (id as usize / 3, id as usize % 3);
            (gf16_mul(mu5, n) * 3 + h) as ElemId
        })
        .collect();
    let a = Automorphism::from_images(&g, images)?;
    Ok((g, a))
}

/// Automorphism `(x, y) ↦ (a(x), b(y))` of `direct_product(g, h)`.
pub fn product_automorphism(
    g: &GroupTable,
    h: &GroupTable,
    product: &GroupTable,
    a: &Automorphism,
    b: &Automorphism,
) -> Result<Automorphism> {
    let hn = h.order() as ElemId;
    let images = product
        .elements()
        .map(|id| a.apply(id / hn) * hn + b.apply(id % hn))
        .collect();
    debug_assert_eq!(g.order() * h.order(), product.order());
    Automorphism::from_images(product, images)
}

/// Structural fingerprint used to deduplicate campaign groups.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub subgroup_count: usize,
    /// `(element order, count)` ascending.
    pub element_orders: Vec<(usize, usize)>,
}

impl Fingerprint {
    pub fn of(g: &GroupTable, lattice: &SubgroupLattice) -> Self {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for x in g.elements() {
            *counts.entry(g.element_order(x)).or_default() += 1;
        }
        Fingerprint {
            order: g.order(),
            abelian: g.is_abelian(),
            subgroup_count: lattice.len(),
            element_orders: counts.into_iter().collect(),
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "o{:04}-{}-s{:05}-",
            self.order,
            if self.abelian { "ab" } else { "na" },
            self.subgroup_count
        )?;
        for (i, (o, c)) in self.element_orders.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{o}x{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct NamedAction {
    pub name: String,
    pub action: ActionGroup,
}

pub const TRIVIAL_ACTION: &str = "A=1";

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub group: GroupTable,
    /// Always starts with `A = 1`.
    pub actions: Vec<NamedAction>,
    /// `"<action>/<check>" → expected outcome` for hand-verified fixtures.
    pub expected: BTreeMap<String, bool>,
    lattice: Option<Arc<SubgroupLattice>>,
}

impl Fixture {
    pub fn new(name: impl Into<String>, group: GroupTable) -> Self {
        let trivial = NamedAction {
            name: TRIVIAL_ACTION.to_string(),
            action: ActionGroup::trivial(&group),
        };
        Fixture {
            name: name.into(),
            group,
            actions: vec![trivial],
            expected: BTreeMap::new(),
            lattice: None,
        }
    }

    /// Adds the action generated by `gens`, which must be coprime.
    pub fn with_action(mut self, name: &str, gens: &[Automorphism]) -> Result<Self> {
        let action = action_closure(&self.group, gens, DEFAULT_CAP)?;
        self.actions.push(NamedAction {
            name: name.to_string(),
            action,
        });
        Ok(self)
    }

    pub fn expect(mut self, action: &str, check: &str, value: bool) -> Self {
        self.expected.insert(format!("{action}/{check}"), value);
        self
    }

    pub fn action(&self, name: &str) -> Option<&ActionGroup> {
        self.actions.iter().find(|a| a.name == name).map(|a| &a.action)
    }

    /// The subgroup lattice, computed once.
    pub fn lattice(&mut self, cap: usize) -> Result<Arc<SubgroupLattice>> {
        if let Some(l) = &self.lattice {
            return Ok(l.clone());
        }
        let l = Arc::new(all_subgroups(&self.group, cap)?);
        self.lattice = Some(l.clone());
        Ok(l)
    }

    pub fn cached_lattice(&self) -> Option<Arc<SubgroupLattice>> {
        self.lattice.clone()
    }
}

/// The named fixtures: the order-30 group `Z5 × (Z3 ⋊ Z2)` with `A = 1`,
/// small classical groups, and the coprime-action examples.
pub fn paper_fixtures() -> Result<Vec<Fixture>> {
    let mut out = Vec::new();

    let remark = direct_product(&cyclic(5)?, &frobenius(3, 2)?, DEFAULT_CAP)?;
    out.push(
        Fixture::new("remark-1.5", remark)
            .expect(TRIVIAL_ACTION, "hypothesis", true)
            .expect(TRIVIAL_ACTION, "statement-normal", true)
            .expect(TRIVIAL_ACTION, "decomposition", true)
            .expect(TRIVIAL_ACTION, "all-maximal-nilpotent", false),
    );

    out.push(
        Fixture::new("sym3", symmetric(3)?)
            .expect(TRIVIAL_ACTION, "hypothesis", true)
            .expect(TRIVIAL_ACTION, "decomposition", true),
    );

    out.push(
        Fixture::new("sym4", symmetric(4)?)
            .expect(TRIVIAL_ACTION, "hypothesis", false)
            .expect(TRIVIAL_ACTION, "statement-normal", false)
            .expect(TRIVIAL_ACTION, "decomposition", false),
    );

    out.push(
        Fixture::new("alt4", alternating(4)?)
            .expect(TRIVIAL_ACTION, "hypothesis", true)
            .expect(TRIVIAL_ACTION, "decomposition", true)
            .expect(TRIVIAL_ACTION, "all-maximal-nilpotent", true),
    );

    // D14 = <r, s>, generators (r, s) = (id 2, id 1); r ↦ r², s ↦ s
    let d14 = dihedral(14)?;
    let square = Automorphism::from_generator_images(&d14, &[2, 1], &[4, 1])?;
    out.push(
        Fixture::new("d14-act3", d14)
            .with_action("A=C3(r->r^2)", &[square])?
            .expect("A=C3(r->r^2)", "hypothesis", true)
            .expect("A=C3(r->r^2)", "statement-normal", true)
            .expect("A=C3(r->r^2)", "decomposition", true),
    );

    // Z2 × Z2 with ids 1, 2, 3 the involutions; 1 → 2 → 3 → 1
    let v4 = elementary_abelian(2, 2)?;
    let cycle = Automorphism::from_generator_images(&v4, &[1, 2], &[2, 3])?;
    out.push(Fixture::new("v4-act3", v4).with_action("A=C3(cycle)", &[cycle])?);

    out.push(Fixture::new("frob42", frobenius(7, 6)?));

    // Z7 ⋊ Z3 with inversion on Z7
    let f21 = frobenius(7, 3)?;
    let inversion = Automorphism::from_generator_images(&f21, &[3, 1], &[18, 1])?;
    out.push(Fixture::new("frob21", f21).with_action("A=C2(a->a^-1)", &[inversion])?);

    Ok(out)
}

/// Further hand-picked groups and coprime actions that exercise nontrivial
/// `E`, non-nilpotent Sylow complements and actions that change which
/// subgroups count.
pub fn curated_fixtures() -> Result<Vec<Fixture>> {
    let mut out = Vec::new();

    out.push(Fixture::new("q8", quaternion8()?).with_action(
        "A=C3",
        &[automorphism_of_order(&quaternion8()?, 3)?],
    )?);
    out.push(Fixture::new("sl23", sl23()?));

    let (f16, mu5) = f16_mu3()?;
    out.push(
        Fixture::new("f16-mu3", f16.clone())
            .with_action("A=C5(mu5)", &[mu5.clone()])?
            .expect(TRIVIAL_ACTION, "hypothesis", false)
            .expect("A=C5(mu5)", "hypothesis", true),
    );
    let c2 = cyclic(2)?;
    let f16c2 = direct_product(&f16, &c2, DEFAULT_CAP)?;
    let lifted = product_automorphism(&f16, &c2, &f16c2, &mu5, &Automorphism::identity(2))?;
    out.push(Fixture::new("f16-mu3-x-c2", f16c2).with_action("A=C5(mu5)", &[lifted])?);

    let c7 = cyclic(7)?;
    let double = Automorphism::from_generator_images(&c7, &[1], &[2])?;
    out.push(Fixture::new("c7-act3", c7).with_action("A=C3(x->2x)", &[double])?);

    // D22 with r ↦ r^3 (order 5 mod 11)
    let d22 = dihedral(22)?;
    let cube = Automorphism::from_generator_images(&d22, &[2, 1], &[6, 1])?;
    out.push(Fixture::new("d22-act5", d22).with_action("A=C5(r->r^3)", &[cube])?);

    // D26 with r ↦ r^3 (order 3 mod 13)
    let d26 = dihedral(26)?;
    let cube = Automorphism::from_generator_images(&d26, &[2, 1], &[6, 1])?;
    out.push(Fixture::new("d26-act3", d26).with_action("A=C3(r->r^3)", &[cube])?);

    // Z13 ⋊ Z3 with a ↦ a^5 (order 4)
    let f39 = frobenius(13, 3)?;
    let fifth = Automorphism::from_generator_images(&f39, &[3, 1], &[15, 1])?;
    out.push(Fixture::new("frob39-act4", f39).with_action("A=C4(a->a^5)", &[fifth])?);

    // Z11 ⋊ Z5 with inversion on Z11
    let f55 = frobenius(11, 5)?;
    let inversion = Automorphism::from_generator_images(&f55, &[5, 1], &[50, 1])?;
    out.push(Fixture::new("frob55-act2", f55).with_action("A=C2(a->a^-1)", &[inversion])?);

    // Z2^3 with a Singer cycle (x^3 + x + 1) and with an order-3 block
    let e8 = elementary_abelian(2, 3)?;
    let singer = matrix_automorphism(&e8, 2, 3, &[0, 0, 1, 1, 0, 1, 0, 1, 0])?;
    let block3 = matrix_automorphism(&e8, 2, 3, &[0, 1, 0, 1, 1, 0, 0, 0, 1])?;
    out.push(
        Fixture::new("e8", e8)
            .with_action("A=C7(singer)", &[singer])?
            .with_action("A=C3(block)", &[block3])?,
    );

    let e9 = elementary_abelian(3, 2)?;
    let neg = matrix_automorphism(&e9, 3, 2, &[2, 0, 0, 2])?;
    out.push(Fixture::new("e9-act2", e9).with_action("A=C2(-1)", &[neg])?);

    out.push(Fixture::new("a5", alternating(5)?));

    // Z2^4 ⋊ Z3 with the order-3 block acting on both halves
    out.push(Fixture::new(
        "e16-c3",
        vector_semidirect(2, 4, 3, &[0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1])?,
    ));
    // Z2^3 ⋊ Z7
    out.push(Fixture::new("e8-c7", vector_semidirect(2, 3, 7, &[0, 0, 1, 1, 0, 1, 0, 1, 0])?));
    // Z3^2 ⋊ Z4, rotation by a quarter turn
    out.push(Fixture::new("e9-c4", vector_semidirect(3, 2, 4, &[0, 2, 1, 0])?));
    // Z5^2 ⋊ Z3
    out.push(Fixture::new("e25-c3", vector_semidirect(5, 2, 3, &[0, 4, 1, 4])?));
    // Z2^2 ⋊ Z9 with kernel Z3
    out.push(Fixture::new("e4-c9", vector_semidirect(2, 2, 9, &[0, 1, 1, 1])?));

    Ok(out)
}

/// Base family members of order at most `max_order`, in a fixed order.
fn family_members(max_order: usize) -> Vec<(String, GroupTable)> {
    let mut out: Vec<(String, GroupTable)> = Vec::new();
    let mut push = |name: String, g: Result<GroupTable>| {
        if let Ok(g) = g {
            if g.order() <= max_order {
                out.push((name, g));
            }
        }
    };
    for n in 1..=max_order {
        push(format!("C{n}"), cyclic(n));
    }
    for n in 3..=max_order / 2 {
        push(format!("D{}", 2 * n), dihedral(2 * n));
    }
    for p in prime_divisors_upto(max_order) {
        let mut k = 2;
        while p.pow(k as u32) <= max_order {
            push(format!("E{p}^{k}"), elementary_abelian(p, k));
            k += 1;
        }
    }
    for p in prime_divisors_upto(max_order) {
        for q in 2..p {
            if (p - 1) % q == 0 && p * q <= max_order {
                push(format!("F{p}:{q}"), frobenius(p, q));
            }
        }
    }
    // non-faithful Z_p ⋊ Z_m
    for p in prime_divisors_upto(max_order) {
        for d in 2..p {
            if (p - 1) % d != 0 {
                continue;
            }
            let r = unit_of_order(p, d).unwrap();
            let mut m = 2 * d;
            while p * m <= max_order {
                push(format!("M{p}:{m}:{r}"), metacyclic(p, m, r));
                m += d;
            }
        }
    }
    push("Q8".into(), quaternion8());
    push("S3".into(), symmetric(3));
    push("S4".into(), symmetric(4));
    push("A4".into(), alternating(4));
    push("A5".into(), alternating(5));
    push("SL(2,3)".into(), sl23());
    out
}

fn prime_divisors_upto(n: usize) -> Vec<usize> {
    (2..=n).filter(|&p| is_prime(p as u64)).collect()
}

/// Deterministic campaign: named and curated fixtures, the base families,
/// and direct products of two nontrivial base groups, all of order at most
/// `max_order`, deduplicated by [`Fingerprint`] keeping the first
/// occurrence (fixtures with a nontrivial action are always kept).
/// Lattices are computed here and cached on each fixture.
pub fn standard_campaign(max_order: usize, cap: usize) -> Result<Vec<Fixture>> {
    if max_order > cap {
        return Err(GroupError::TooLarge { cap });
    }
    let mut candidates: Vec<Fixture> = paper_fixtures()?
        .into_iter()
        .chain(curated_fixtures()?)
        .filter(|f| f.group.order() <= max_order)
        .collect();

    let base = family_members(max_order);
    for (name, g) in &base {
        candidates.push(Fixture::new(name.clone(), g.clone()));
    }
    for (i, (na, a)) in base.iter().enumerate() {
        if a.order() < 2 {
            continue;
        }
        for (nb, b) in &base[i..] {
            if b.order() < 2 || a.order() * b.order() > max_order {
                continue;
            }
            if let Ok(p) = direct_product(a, b, cap) {
                candidates.push(Fixture::new(format!("{na}x{nb}"), p));
            }
        }
    }

    let prints: Vec<(Fingerprint, Arc<SubgroupLattice>)> = candidates
        .par_iter()
        .map(|f| {
            let lattice = Arc::new(all_subgroups(&f.group, cap)?);
            Ok((Fingerprint::of(&f.group, &lattice), lattice))
        })
        .collect::<Result<_>>()?;

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (mut f, (print, lattice)) in candidates.into_iter().zip(prints) {
        // fixtures carrying a nontrivial action are never merged away
        if seen.insert(print) || f.actions.len() > 1 {
            f.lattice = Some(lattice);
            out.push(f);
        }
    }
    Ok(out)
}
