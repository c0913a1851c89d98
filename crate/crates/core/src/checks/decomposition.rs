//! Search for, and re-verification of, the factorization
//! `G = (P_1 × … × P_{s−1}) × (P_s ⋊ (Q_1 × … × Q_t))` with a normal
//! A-invariant `E ≤ P_s` such that `E(Q_1 × … × Q_t)` is a nilpotent
//! maximal A-invariant subgroup of `P_s(Q_1 × … × Q_t)`.

use super::{Context, Verdict, Witness};
use crate::arith::p_part;
use crate::group::{ElemId, GroupTable, Subgroup};
use crate::structure::{self, normalizer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `(prime, P_i)` for every normal Sylow subgroup, ascending prime.
    pub normal_sylows: Vec<(usize, Subgroup)>,
    /// Index into `normal_sylows` of the factor `P_s` acted on by `V`.
    pub acting_factor_index: usize,
    /// `(prime, Q_j)`, one A-invariant non-normal Sylow per remaining prime.
    pub nonnormal_sylows: Vec<(usize, Subgroup)>,
    /// `V = Q_1 × … × Q_t`.
    pub complement: Subgroup,
    pub e: Subgroup,
}

impl Decomposition {
    pub fn acting_factor(&self) -> &Subgroup {
        &self.normal_sylows[self.acting_factor_index].1
    }

    pub(crate) fn witnesses(&self, mut v: Verdict) -> Verdict {
        for (i, (p, s)) in self.normal_sylows.iter().enumerate() {
            let name = if i == self.acting_factor_index {
                format!("P_s (p={p})")
            } else {
                format!("P (p={p})")
            };
            v = v.with_witness(name, s);
        }
        for (q, s) in &self.nonnormal_sylows {
            v = v.with_witness(format!("Q (p={q})"), s);
        }
        v.with_witness("V", &self.complement).with_witness("E", &self.e)
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionSearch {
    /// First witness in scan order.
    pub first: Option<Decomposition>,
    /// Number of admissible `(Q choice, P_s, E)` assignments.
    pub admissible: usize,
}

fn commute(g: &GroupTable, a: &[ElemId], b: &[ElemId]) -> bool {
    a.iter()
        .all(|&x| b.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

/// First decomposition in scan order, if any.
pub fn find_decomposition(ctx: &Context) -> Option<Decomposition> {
    search_decompositions(ctx).first
}

/// Exhaustive deterministic search. Normal Sylows ascend by prime; each
/// remaining prime contributes one A-invariant Sylow (lattice order); the
/// chosen `Q`s must commute elementwise; every normal Sylow is tried as
/// `P_s` with the others centralizing `V`; `E` runs over A-invariant
/// subgroups of `P_s` normal in `G` in lattice order.
pub fn search_decompositions(ctx: &Context) -> DecompositionSearch {
    let g = ctx.group;
    let mut out = DecompositionSearch {
        first: None,
        admissible: 0,
    };
    let normals = structure::normal_sylows(g);
    if normals.is_empty() {
        return out;
    }
    let normal_primes: Vec<usize> = normals.iter().map(|(p, _)| *p).collect();
    let other_primes: Vec<usize> = ctx
        .primes()
        .into_iter()
        .filter(|p| !normal_primes.contains(p))
        .collect();
    if other_primes.is_empty() {
        return out;
    }
    let choices: Vec<Vec<&Subgroup>> = other_primes
        .iter()
        .map(|&p| ctx.invariant_sylows(p))
        .collect();
    if choices.iter().any(|c| c.is_empty()) {
        return out;
    }
    let choice_gens: Vec<Vec<Vec<ElemId>>> = choices
        .iter()
        .map(|c| c.iter().map(|q| g.greedy_generators(q)).collect())
        .collect();
    let normal_gens: Vec<Vec<ElemId>> = normals.iter().map(|(_, s)| g.greedy_generators(s)).collect();

    let mut pick = vec![0usize; choices.len()];
    loop {
        let compatible = (0..pick.len()).all(|i| {
            (i + 1..pick.len())
                .all(|j| commute(g, &choice_gens[i][pick[i]], &choice_gens[j][pick[j]]))
        });
        if compatible {
            let v_gens: Vec<ElemId> = (0..pick.len())
                .flat_map(|i| choice_gens[i][pick[i]].iter().copied())
                .collect();
            let v = g.generate(&v_gens);
            let expected: usize = (0..pick.len()).map(|i| choices[i][pick[i]].order()).product();
            if v.order() == expected && ctx.is_nilpotent(&v) {
                for s_idx in 0..normals.len() {
                    let others_centralize = (0..normals.len())
                        .filter(|&i| i != s_idx)
                        .all(|i| commute(g, &normal_gens[i], &v_gens));
                    if !others_centralize {
                        continue;
                    }
                    let ps = &normals[s_idx].1;
                    let ps_v = g.extend(ps, &v_gens);
                    for e in ctx
                        .invariant()
                        .filter(|e| e.is_subgroup_of(ps) && ctx.is_normal(e))
                    {
                        let ev = g.extend(e, &v_gens);
                        if ctx.is_nilpotent(&ev) && ctx.is_maximal_invariant_in(&ev, &ps_v) {
                            out.admissible += 1;
                            if out.first.is_none() {
                                out.first = Some(Decomposition {
                                    normal_sylows: normals.clone(),
                                    acting_factor_index: s_idx,
                                    nonnormal_sylows: other_primes
                                        .iter()
                                        .zip(&pick)
                                        .enumerate()
                                        .map(|(i, (&p, &k))| (p, choices[i][k].clone()))
                                        .collect(),
                                    complement: v.clone(),
                                    e: e.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        // odometer over the Q choices
        let mut i = pick.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// Re-checks every structural claim of a decomposition from scratch.
pub fn verify_decomposition(ctx: &Context, d: &Decomposition) -> Result<(), String> {
    let g = ctx.group;
    if d.normal_sylows.is_empty() || d.nonnormal_sylows.is_empty() {
        return Err("need s >= 1 and t >= 1".into());
    }
    for (p, s) in &d.normal_sylows {
        if s.order() != p_part(g.order(), *p) || !structure::is_normal(g, s) {
            return Err(format!("P for p={p} is not a normal Sylow subgroup"));
        }
    }
    for (q, s) in &d.nonnormal_sylows {
        if s.order() != p_part(g.order(), *q) {
            return Err(format!("Q for p={q} is not a Sylow subgroup"));
        }
        if structure::is_normal(g, s) {
            return Err(format!("Q for p={q} is normal"));
        }
        if !ctx.is_invariant(s) {
            return Err(format!("Q for p={q} is not A-invariant"));
        }
    }
    let v_order: usize = d.nonnormal_sylows.iter().map(|(_, s)| s.order()).product();
    let mut v = g.trivial_subgroup();
    for (_, s) in &d.nonnormal_sylows {
        v = g.join(&v, s);
    }
    if v != d.complement || v.order() != v_order {
        return Err("V is not the direct product of the Q's".into());
    }
    if !structure::is_nilpotent(g, &v) {
        return Err("V is not nilpotent".into());
    }
    // multiply out P_1 … P_s V
    let mut product = g.trivial_subgroup();
    for (_, s) in &d.normal_sylows {
        product = Subgroup::from_bits_unchecked(g.product_set(&product, s));
    }
    let all = g.product_set(&product, &v);
    if all.count() != g.order() {
        return Err(format!("P_1 … P_s V has {} elements, not {}", all.count(), g.order()));
    }
    let vg = g.greedy_generators(&v);
    for (i, (p, s)) in d.normal_sylows.iter().enumerate() {
        if i != d.acting_factor_index && !commute(g, &g.greedy_generators(s), &vg) {
            return Err(format!("P for p={p} does not centralize V"));
        }
    }
    let ps = d.acting_factor();
    let e = &d.e;
    if !e.is_subgroup_of(ps) || !ctx.is_invariant(e) || !structure::is_normal(g, e) {
        return Err("E is not an A-invariant normal subgroup of P_s".into());
    }
    let ev = g.join(e, &v);
    let ps_v = g.join(ps, &v);
    if !structure::is_nilpotent(g, &ev) {
        return Err("EV is not nilpotent".into());
    }
    if !ctx.is_maximal_invariant_in(&ev, &ps_v) {
        return Err("EV is not a maximal A-invariant subgroup of P_s V".into());
    }
    Ok(())
}

/// Sufficiency direction: `(∏_{i≠s} P_i) × E × V` is a nilpotent maximal
/// A-invariant subgroup of `G` equal to `N_G(Q_j)` for every `j`.
pub fn check_sufficiency(ctx: &Context, d: &Decomposition) -> Verdict {
    let g = ctx.group;
    let mut n = g.join(&d.e, &d.complement);
    for (i, (_, s)) in d.normal_sylows.iter().enumerate() {
        if i != d.acting_factor_index {
            n = g.join(&n, s);
        }
    }
    let witness = Witness::new("N", &n);
    if !structure::is_nilpotent(g, &n) {
        return Verdict::fail("(P_1 … P_{s-1}) E V is not nilpotent", Some(witness));
    }
    if !ctx.is_invariant(&n) || !ctx.is_maximal_invariant_in(&n, &g.whole()) {
        return Verdict::fail("(P_1 … P_{s-1}) E V is not maximal A-invariant", Some(witness));
    }
    for (q, s) in &d.nonnormal_sylows {
        let nq = normalizer(g, s);
        if nq != n {
            return Verdict::fail(
                format!("N_G(Q) for p={q} has order {}, expected {}", nq.order(), n.order()),
                Some(Witness::new("N_G(Q)", &nq)),
            )
            .with_witness("N", &n);
        }
    }
    Verdict::pass(format!(
        "N_G(Q_j) = (P_1 … P_(s-1)) E V of order {} for all {} non-normal Sylows",
        n.order(),
        d.nonnormal_sylows.len()
    ))
    .with_witness("N", &n)
}
