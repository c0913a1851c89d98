use super::{Context, Verdict, Witness};
use crate::arith::{is_p_power, prime_divisors};
use crate::group::{GroupTable, Subgroup};
use crate::lattice::SubgroupLattice;
use crate::structure::{self, index_kind, is_p_solvable, normalizer, IndexKind};

/// For every prime `p` with `G` `p`-solvable, each maximal A-invariant
/// subgroup has index a `p`-power or prime to `p`.
pub fn check_lemma_2_1(ctx: &Context) -> Verdict {
    let mut checked_primes = Vec::new();
    for p in ctx.primes() {
        if !is_p_solvable(ctx.group, ctx.lattice, p as u64).expect("prime") {
            continue;
        }
        checked_primes.push(p);
        for m in ctx.maximal_invariant() {
            if index_kind(m, &ctx.group.whole(), p as u64).expect("prime") == IndexKind::Mixed {
                return Verdict::fail(
                    format!(
                        "G is {p}-solvable but a maximal invariant subgroup has index {}",
                        ctx.group.order() / m.order()
                    ),
                    Some(Witness::new("H", m)),
                );
            }
        }
    }
    let maximal = ctx.maximal_invariant().count();
    if checked_primes.is_empty() || maximal == 0 {
        return Verdict::vacuous(format!(
            "p-solvable primes {checked_primes:?}, {maximal} maximal invariant subgroups"
        ));
    }
    Verdict::pass(format!(
        "indices never mixed for p in {checked_primes:?} across {maximal} maximal invariant subgroups"
    ))
}

/// A nilpotent maximal A-invariant subgroup of odd order forces `G`
/// solvable.
pub fn check_lemma_2_2(ctx: &Context) -> Verdict {
    let Some(m) = ctx
        .maximal_invariant()
        .find(|m| m.order() % 2 == 1 && ctx.is_nilpotent(m))
    else {
        return Verdict::vacuous("no nilpotent maximal invariant subgroup of odd order");
    };
    if structure::is_solvable(ctx.group, &ctx.group.whole()) {
        Verdict::pass(format!(
            "nilpotent maximal invariant subgroup of odd order {} and G is solvable",
            m.order()
        ))
        .with_witness("M", m)
    } else {
        Verdict::fail(
            "nilpotent maximal invariant subgroup of odd order but G is not solvable",
            Some(Witness::new("M", m)),
        )
    }
}

/// Each maximal A-invariant subgroup is self-normalizing or normal.
pub fn check_lemma_2_3(ctx: &Context) -> Verdict {
    let mut count = 0;
    for m in ctx.maximal_invariant() {
        let n = normalizer(ctx.group, m);
        if n != *m && !n.is_whole() {
            return Verdict::fail(
                format!(
                    "maximal invariant subgroup of order {} has normalizer of order {}",
                    m.order(),
                    n.order()
                ),
                Some(Witness::new("M", m)),
            )
            .with_witness("N_G(M)", &n);
        }
        count += 1;
    }
    if count == 0 {
        return Verdict::vacuous("no maximal invariant subgroups");
    }
    Verdict::pass(format!("{count} maximal invariant subgroups, each self-normalizing or normal"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma24Outcome {
    NotApplicable(String),
    Complement(Subgroup),
    NoComplement,
}

fn lemma_2_4_precondition(g: &GroupTable, h: &Subgroup) -> Result<(), String> {
    if h.is_trivial() || h.is_whole() {
        return Err("H must be a nontrivial proper subgroup".into());
    }
    if !structure::is_nilpotent(g, h) {
        return Err("H is not nilpotent".into());
    }
    if !structure::is_hall(h, &g.whole()) {
        return Err("H is not a Hall subgroup".into());
    }
    let primes = prime_divisors(h.order());
    if primes.len() == 1 && is_p_power(h.order(), primes[0]) {
        return Err("H is a Sylow subgroup".into());
    }
    for p in primes {
        // H nilpotent: its Sylow p-subgroup is its set of p-elements
        let ids: Vec<u32> = h
            .iter()
            .filter(|&x| is_p_power(g.element_order(x), p))
            .collect();
        let sylow = g.generate(&ids);
        if normalizer(g, &sylow) != *h {
            return Err(format!("N_G(P) != H for the Sylow {p}-subgroup P of H"));
        }
    }
    Ok(())
}

/// Looks for a normal `K` with `G = KH` and `K ∩ H = 1` when `H` is a
/// nilpotent Hall subgroup, not Sylow, with `N_G(P) = H` for each Sylow
/// `P` of `H`.
pub fn check_lemma_2_4(g: &GroupTable, lattice: &SubgroupLattice, h: &Subgroup) -> Lemma24Outcome {
    if let Err(why) = lemma_2_4_precondition(g, h) {
        return Lemma24Outcome::NotApplicable(why);
    }
    let want = g.order() / h.order();
    lattice
        .subgroups()
        .iter()
        .find(|k| {
            k.order() == want
                && k.intersection_order(h) == 1
                && structure::is_normal(g, k)
                && g.product_set(k, h).count() == g.order()
        })
        .map_or(Lemma24Outcome::NoComplement, |k| Lemma24Outcome::Complement(k.clone()))
}

/// Runs the complement search on every subgroup that meets the
/// preconditions.
pub fn check_lemma_2_4_all(ctx: &Context) -> Verdict {
    let mut applicable = 0;
    let mut witnesses = Vec::new();
    for h in ctx.lattice.subgroups() {
        match check_lemma_2_4(ctx.group, ctx.lattice, h) {
            Lemma24Outcome::NotApplicable(_) => {}
            Lemma24Outcome::Complement(k) => {
                applicable += 1;
                if witnesses.is_empty() {
                    witnesses.push(Witness::new("H", h));
                    witnesses.push(Witness::new("K", &k));
                }
            }
            Lemma24Outcome::NoComplement => {
                return Verdict::fail(
                    "preconditions hold but no normal complement exists",
                    Some(Witness::new("H", h)),
                );
            }
        }
    }
    if applicable == 0 {
        return Verdict::vacuous("no subgroup meets the preconditions");
    }
    let mut v = Verdict::pass(format!("{applicable} subgroups meet the preconditions, each has a normal complement"));
    v.witnesses = witnesses;
    v
}
