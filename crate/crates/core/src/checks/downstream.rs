use serde::{Deserialize, Serialize};

use super::{statement_nonnilpotent_normal, Context, Verdict, Witness};
use crate::structure::{self, has_sylow_tower, is_p_closed, is_p_nilpotent, is_solvable};

/// One cited implication evaluated on a single input. `triggered` records
/// whether the antecedent fired non-vacuously.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DownstreamVerdict {
    pub name: String,
    pub triggered: bool,
    pub verdict: Verdict,
}

impl DownstreamVerdict {
    fn new(name: &str, triggered: bool, verdict: Verdict) -> Self {
        DownstreamVerdict {
            name: name.to_string(),
            triggered,
            verdict,
        }
    }
}

pub const DOWNSTREAM_NAMES: [&str; 5] = ["thm1.1", "thm1.2", "thm1.6", "thm1.7", "thm1.8"];

fn all_maximal_nilpotent_not_g(ctx: &Context) -> DownstreamVerdict {
    let fires = !ctx.group_is_nilpotent() && ctx.maximal_invariant().all(|m| ctx.is_nilpotent(m));
    if !fires {
        return DownstreamVerdict::new("thm1.1", false, Verdict::vacuous("antecedent false"));
    }
    let primes = ctx.primes();
    let g = ctx.group;
    if primes.len() != 2 {
        return DownstreamVerdict::new(
            "thm1.1",
            true,
            Verdict::fail(format!("order has prime divisors {primes:?}"), None),
        );
    }
    if !is_solvable(g, &g.whole()) {
        return DownstreamVerdict::new("thm1.1", true, Verdict::fail("G is not solvable", None));
    }
    let normal = primes
        .iter()
        .flat_map(|&p| ctx.invariant_sylows(p))
        .find(|s| ctx.is_normal(s));
    let verdict = match normal {
        Some(s) => Verdict::pass(format!(
            "|G| = {} over primes {primes:?} with a normal invariant Sylow of order {}",
            g.order(),
            s.order()
        ))
        .with_witness("P", s),
        None => Verdict::fail("no normal invariant Sylow subgroup", None),
    };
    DownstreamVerdict::new("thm1.1", true, verdict)
}

fn p_divisible_maximal_nilpotent(ctx: &Context) -> DownstreamVerdict {
    let firing: Vec<usize> = ctx
        .primes()
        .into_iter()
        .filter(|&p| {
            let mut divisible = ctx.maximal_invariant().filter(|m| m.order() % p == 0).peekable();
            divisible.peek().is_some() && divisible.all(|m| ctx.is_nilpotent(m))
        })
        .collect();
    if firing.is_empty() {
        return DownstreamVerdict::new("thm1.2", false, Verdict::vacuous("antecedent false for every prime"));
    }
    let verdict = if is_solvable(ctx.group, &ctx.group.whole()) {
        Verdict::pass(format!("antecedent fires for p in {firing:?} and G is solvable"))
    } else {
        Verdict::fail(format!("antecedent fires for p in {firing:?} but G is not solvable"), None)
    };
    DownstreamVerdict::new("thm1.2", true, verdict)
}

fn normal_implies_tower(ctx: &Context, statement: &Verdict) -> DownstreamVerdict {
    if !statement.holds {
        return DownstreamVerdict::new("thm1.6", false, Verdict::vacuous("antecedent false"));
    }
    let verdict = match structure::sylow_tower_order(ctx.group) {
        Some(order) => Verdict::pass(format!("Sylow tower over primes {order:?}")),
        None => Verdict::fail("no Sylow tower", None),
    };
    debug_assert_eq!(verdict.holds, has_sylow_tower(ctx.group));
    DownstreamVerdict::new("thm1.6", !statement.vacuous, verdict)
}

fn nilpotent_or_normal(ctx: &Context) -> DownstreamVerdict {
    let fires = ctx
        .maximal_invariant()
        .all(|m| ctx.is_nilpotent(m) || ctx.is_normal(m));
    if !fires {
        return DownstreamVerdict::new("thm1.7", false, Verdict::vacuous("antecedent false"));
    }
    let g = ctx.group;
    // the trivial group is p-nilpotent for every p
    if g.order() == 1 {
        return DownstreamVerdict::new("thm1.7", false, Verdict::vacuous("G is trivial"));
    }
    let witness = ctx
        .primes()
        .into_iter()
        .find(|&p| is_p_nilpotent(g, &g.whole(), p as u64).expect("prime"));
    let verdict = match witness {
        Some(p) => Verdict::pass(format!("G is {p}-nilpotent")),
        None => Verdict::fail("G is not p-nilpotent for any prime", None),
    };
    DownstreamVerdict::new("thm1.7", !ctx.group_is_nilpotent(), verdict)
}

fn normal_implies_nilpotent_or_closed(ctx: &Context, statement: &Verdict) -> DownstreamVerdict {
    if !statement.holds {
        return DownstreamVerdict::new("thm1.8", false, Verdict::vacuous("antecedent false"));
    }
    let g = ctx.group;
    let whole = g.whole();
    for p in ctx.primes() {
        let nilp = is_p_nilpotent(g, &whole, p as u64).expect("prime");
        let closed = is_p_closed(g, &whole, p as u64).expect("prime");
        if !nilp && !closed {
            return DownstreamVerdict::new(
                "thm1.8",
                !statement.vacuous,
                Verdict::fail(format!("G is neither {p}-nilpotent nor {p}-closed"), None),
            );
        }
    }
    DownstreamVerdict::new(
        "thm1.8",
        !statement.vacuous,
        Verdict::pass("p-nilpotent or p-closed for every prime"),
    )
}

/// The five cited implications, in fixed order.
pub fn check_downstream(ctx: &Context) -> Vec<DownstreamVerdict> {
    let statement = statement_nonnilpotent_normal(ctx);
    vec![
        all_maximal_nilpotent_not_g(ctx),
        p_divisible_maximal_nilpotent(ctx),
        normal_implies_tower(ctx, &statement),
        nilpotent_or_normal(ctx),
        normal_implies_nilpotent_or_closed(ctx, &statement),
    ]
}

/// Cross-checks between independent computations: an invariant Sylow for
/// every prime, both nilpotency tests, generator versus closure invariance,
/// and both p-nilpotency tests.
pub fn check_oracles(ctx: &Context) -> Verdict {
    let g = ctx.group;
    for p in ctx.primes() {
        if ctx.invariant_sylows(p).is_empty() {
            return Verdict::fail(format!("no invariant Sylow {p}-subgroup"), None);
        }
        let by_elements = is_p_nilpotent(g, &g.whole(), p as u64).expect("prime");
        let by_lattice = structure::is_p_nilpotent_by_lattice(g, ctx.lattice, p as u64).expect("prime");
        if by_elements != by_lattice {
            return Verdict::fail(format!("{p}-nilpotency tests disagree"), None);
        }
    }
    for h in ctx.lattice.subgroups() {
        if structure::is_nilpotent(g, h) != structure::is_nilpotent_lcs(g, h) {
            return Verdict::fail("nilpotency tests disagree", Some(Witness::new("H", h)));
        }
        if ctx.action.is_invariant(h) != ctx.action.is_invariant_by_closure(h) {
            return Verdict::fail("invariance tests disagree", Some(Witness::new("H", h)));
        }
    }
    Verdict::pass(format!(
        "{} subgroups cross-checked over primes {:?}",
        ctx.lattice.len(),
        ctx.primes()
    ))
}
