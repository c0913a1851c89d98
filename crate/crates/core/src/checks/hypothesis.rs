use super::{
    search_decompositions, Context, EquivalenceReport, Statement, Verdict, Witness,
};
use crate::group::Subgroup;
use crate::structure::{normalizer, ti_violation};

/// Every maximal A-invariant subgroup containing `N_G(P)` for some
/// A-invariant Sylow `P` is nilpotent. Quantifies over every invariant Sylow
/// of every prime; only normalizers that are proper can be contained in a
/// proper subgroup.
pub fn hypothesis_normalizer_nilpotent(ctx: &Context) -> Verdict {
    let mut qualifying: Vec<&Subgroup> = Vec::new();
    for p in ctx.primes() {
        for sylow in ctx.invariant_sylows(p) {
            let n = normalizer(ctx.group, sylow);
            if n.is_whole() {
                continue;
            }
            for m in ctx.maximal_invariant().filter(|m| n.is_subgroup_of(m)) {
                if !ctx.is_nilpotent(m) {
                    return Verdict::fail(
                        format!(
                            "maximal invariant subgroup of order {} contains the normalizer of an invariant Sylow {p}-subgroup and is not nilpotent",
                            m.order()
                        ),
                        Some(Witness::new("M", m)),
                    )
                    .with_witness(format!("P{p}"), sylow)
                    .with_witness("N_G(P)", &n);
                }
                if !qualifying.contains(&m) {
                    qualifying.push(m);
                }
            }
        }
    }
    if qualifying.is_empty() {
        return Verdict::vacuous("every invariant Sylow subgroup is normal");
    }
    let mut v = Verdict::pass(format!(
        "{} qualifying maximal invariant subgroups, all nilpotent",
        qualifying.len()
    ));
    for m in qualifying {
        v = v.with_witness("M", m);
    }
    v
}

/// The one-witness reading: for each prime, some A-invariant Sylow
/// subgroup has all maximal invariant overgroups of its normalizer
/// nilpotent.
pub fn hypothesis_one_witness_reading(ctx: &Context) -> Verdict {
    let mut any_proper = false;
    for p in ctx.primes() {
        let sylows = ctx.invariant_sylows(p);
        let mut good = false;
        let mut bad: Option<&Subgroup> = None;
        for sylow in &sylows {
            let n = normalizer(ctx.group, sylow);
            if !n.is_whole() {
                any_proper = true;
            }
            let offending = ctx
                .maximal_invariant()
                .find(|m| n.is_subgroup_of(m) && !ctx.is_nilpotent(m));
            match offending {
                None => {
                    good = true;
                    break;
                }
                Some(m) => bad = bad.or(Some(m)),
            }
        }
        if !good && !sylows.is_empty() {
            return Verdict::fail(
                format!("no invariant Sylow {p}-subgroup has only nilpotent maximal invariant overgroups of its normalizer"),
                bad.map(|m| Witness::new("M", m)),
            );
        }
    }
    if any_proper {
        Verdict::pass("every prime has a witnessing invariant Sylow subgroup")
    } else {
        Verdict::vacuous("every invariant Sylow subgroup is normal")
    }
}

/// Every non-nilpotent maximal A-invariant subgroup is normal.
pub fn statement_nonnilpotent_normal(ctx: &Context) -> Verdict {
    let mut seen = Vec::new();
    for m in ctx.maximal_invariant().filter(|m| !ctx.is_nilpotent(m)) {
        if !ctx.is_normal(m) {
            return Verdict::fail(
                format!(
                    "non-nilpotent maximal invariant subgroup of order {} is not normal",
                    m.order()
                ),
                Some(Witness::new("M", m)),
            );
        }
        seen.push(m);
    }
    if seen.is_empty() {
        return Verdict::vacuous("every maximal invariant subgroup is nilpotent");
    }
    let mut v = Verdict::pass(format!("{} non-nilpotent maximal invariant subgroups, all normal", seen.len()));
    for m in seen {
        v = v.with_witness("M", m);
    }
    v
}

/// Every non-nilpotent maximal A-invariant subgroup is a TI-subgroup.
pub fn statement_nonnilpotent_ti(ctx: &Context) -> Verdict {
    let mut seen = Vec::new();
    for m in ctx.maximal_invariant().filter(|m| !ctx.is_nilpotent(m)) {
        if let Some(x) = ti_violation(ctx.group, m) {
            return Verdict::fail(
                format!(
                    "non-nilpotent maximal invariant subgroup of order {} meets its conjugate by element {x} nontrivially and properly",
                    m.order()
                ),
                Some(Witness::new("M", m)),
            )
            .with_witness("M^x", &ctx.group.conjugate(m, x));
        }
        seen.push(m);
    }
    if seen.is_empty() {
        return Verdict::vacuous("every maximal invariant subgroup is nilpotent");
    }
    let mut v = Verdict::pass(format!("{} non-nilpotent maximal invariant subgroups, all TI", seen.len()));
    for m in seen {
        v = v.with_witness("M", m);
    }
    v
}

/// `G` is nilpotent or admits the decomposition, as a verdict with the
/// decomposition's subgroups as witnesses.
fn classification_verdict(ctx: &Context) -> (Verdict, usize) {
    if ctx.group_is_nilpotent() {
        return (Verdict::pass("G is nilpotent"), 0);
    }
    let search = search_decompositions(ctx);
    match search.first {
        Some(d) => (
            d.witnesses(Verdict::pass(format!(
                "decomposition with s = {}, t = {}, |E| = {} ({} admissible assignments)",
                d.normal_sylows.len(),
                d.nonnormal_sylows.len(),
                d.e.order(),
                search.admissible
            ))),
            search.admissible,
        ),
        None => (
            Verdict::fail("G is not nilpotent and admits no decomposition", None),
            0,
        ),
    }
}

fn readings_note(ctx: &Context, forall: &Verdict) -> String {
    let exists = hypothesis_one_witness_reading(ctx);
    if exists.holds == forall.holds {
        String::new()
    } else {
        format!(
            "quantifier readings diverge: every-Sylow reading {}, one-witness reading {}",
            forall.holds, exists.holds
        )
    }
}

/// The hypothesis holds iff `G` is nilpotent or decomposes.
pub fn verify_thm_1_3(ctx: &Context) -> EquivalenceReport {
    let hypothesis = hypothesis_normalizer_nilpotent(ctx);
    let note = readings_note(ctx, &hypothesis);
    let (classification, _) = classification_verdict(ctx);
    EquivalenceReport::from_statements(
        vec![
            Statement {
                name: "hypothesis".into(),
                verdict: hypothesis,
            },
            Statement {
                name: "classification".into(),
                verdict: classification,
            },
        ],
        false,
        note,
        &ctx.group.whole(),
    )
}

/// For non-nilpotent `G`: non-nilpotent maximal invariant subgroups are
/// normal ⟺ the normalizer hypothesis ⟺ the decomposition exists.
pub fn verify_thm_1_9(ctx: &Context) -> EquivalenceReport {
    let nilpotent = ctx.group_is_nilpotent();
    let hypothesis = hypothesis_normalizer_nilpotent(ctx);
    let note = readings_note(ctx, &hypothesis);
    let decomposition = if nilpotent {
        Verdict::not_applicable("G is nilpotent")
    } else {
        classification_verdict(ctx).0
    };
    EquivalenceReport::from_statements(
        vec![
            Statement {
                name: "nonnilpotent-normal".into(),
                verdict: statement_nonnilpotent_normal(ctx),
            },
            Statement {
                name: "hypothesis".into(),
                verdict: hypothesis,
            },
            Statement {
                name: "decomposition".into(),
                verdict: decomposition,
            },
        ],
        nilpotent,
        if nilpotent {
            "G is nilpotent".to_string()
        } else {
            note
        },
        &ctx.group.whole(),
    )
}

/// Non-nilpotent maximal invariant subgroups are TI ⟺ they are normal, and
/// for non-nilpotent `G` both are equivalent to the decomposition.
pub fn verify_cor_1_12(ctx: &Context) -> EquivalenceReport {
    let mut statements = vec![
        Statement {
            name: "nonnilpotent-ti".into(),
            verdict: statement_nonnilpotent_ti(ctx),
        },
        Statement {
            name: "nonnilpotent-normal".into(),
            verdict: statement_nonnilpotent_normal(ctx),
        },
    ];
    if !ctx.group_is_nilpotent() {
        statements.push(Statement {
            name: "decomposition".into(),
            verdict: classification_verdict(ctx).0,
        });
    }
    EquivalenceReport::from_statements(statements, false, String::new(), &ctx.group.whole())
}
