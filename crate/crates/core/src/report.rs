//! Per-fixture analysis records, campaign runs, and the JSON report.
//!
//! Serialization goes through [`serde_json::Value`], whose maps are
//! ordered, so keys come out sorted. Wall-clock data lives only under keys
//! named `timing`; [`strip_timing`] removes them for comparisons.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::action::ActionGroup;
use crate::catalog::{standard_campaign, Fingerprint, Fixture};
use crate::checks::{
    self, check_downstream, check_lemma_2_1, check_lemma_2_2, check_lemma_2_3, check_lemma_2_4_all,
    check_oracles, check_sufficiency, hypothesis_normalizer_nilpotent, hypothesis_one_witness_reading,
    search_decompositions, statement_nonnilpotent_normal, verify_cor_1_12, verify_decomposition,
    verify_thm_1_3, verify_thm_1_9, Context, EquivalenceReport, EquivalenceStatus, Statement, Verdict,
    Witness,
};
use crate::error::{GroupError, Result};
use crate::group::{GroupTable, Subgroup};
use crate::lattice::{all_subgroups, SubgroupLattice};
use crate::structure;

pub const TOOL_VERSION: &str = concat!("maxinv ", env!("CARGO_PKG_VERSION"));

/// Checker names accepted by [`run_check`], in report order.
pub const CHECK_NAMES: [&str; 11] = [
    "thm1.3",
    "thm1.9",
    "cor1.12",
    "lemma2.1",
    "lemma2.2",
    "lemma2.3",
    "lemma2.4",
    "decomposition",
    "downstream",
    "oracles",
    "readings",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    OutOfHypothesis,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
            Status::OutOfHypothesis => "out-of-hypothesis",
            Status::NotApplicable => "not-applicable",
        }
    }

    fn of(v: &Verdict) -> Self {
        if !v.holds {
            Status::Fail
        } else if !v.applicable {
            Status::NotApplicable
        } else if v.vacuous {
            Status::Vacuous
        } else {
            Status::Pass
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub status: Status,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub statements: Vec<Statement>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Witness>,
    /// Downstream implications whose antecedent fired non-vacuously.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub triggered: Vec<String>,
}

impl CheckRecord {
    fn from_verdict(v: Verdict) -> Self {
        CheckRecord {
            status: Status::of(&v),
            detail: v.detail,
            statements: Vec::new(),
            witnesses: v.witnesses,
            counterexample: v.counterexample,
            triggered: Vec::new(),
        }
    }

    fn from_equivalence(r: EquivalenceReport) -> Self {
        let status = match r.status {
            EquivalenceStatus::Equivalent => Status::Pass,
            EquivalenceStatus::Discrepancy => Status::Fail,
            EquivalenceStatus::OutOfHypothesis => Status::OutOfHypothesis,
        };
        let summary: Vec<String> = r
            .statements
            .iter()
            .map(|s| format!("{}={}", s.name, s.verdict.holds))
            .collect();
        let detail = if r.detail.is_empty() {
            summary.join(", ")
        } else {
            format!("{}; {}", summary.join(", "), r.detail)
        };
        CheckRecord {
            status,
            detail,
            statements: r.statements,
            witnesses: Vec::new(),
            counterexample: r.counterexample,
            triggered: Vec::new(),
        }
    }

    pub fn statement(&self, name: &str) -> Option<&Verdict> {
        self.statements
            .iter()
            .find(|s| s.name == name)
            .map(|s| &s.verdict)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRecord {
    pub order: usize,
    pub nilpotent: bool,
    pub normal: bool,
    pub elements: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub acting_prime: usize,
    pub admissible: usize,
    pub e_order: usize,
    pub v_order: usize,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFacts {
    pub order: usize,
    pub primes: Vec<usize>,
    pub nilpotent: bool,
    pub solvable: bool,
    pub subgroup_count: usize,
    pub invariant_count: usize,
    pub normal_sylows: Vec<Witness>,
    pub maximal_invariant: Vec<SubgroupRecord>,
    pub decomposition: Option<DecompositionRecord>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub fingerprint: String,
    pub group: String,
    pub action: String,
    pub action_order: usize,
    pub checks: BTreeMap<String, CheckRecord>,
    pub structure: StructureFacts,
    pub timing: Timing,
}

impl Entry {
    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.checks
            .iter()
            .filter(|(_, c)| c.status == Status::Fail)
            .map(|(k, _)| k.as_str())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub fixtures_run: usize,
    pub groups: usize,
    pub failures: usize,
    /// `"<group> [<action>] <check>"` for every failing check.
    pub failing: Vec<String>,
    /// check name → status → count.
    pub status_counts: BTreeMap<String, BTreeMap<String, usize>>,
    /// downstream implication → number of entries whose antecedent fired.
    pub downstream_triggers: BTreeMap<String, usize>,
    pub lemma_2_2_fired: usize,
    pub lemma_2_3_subgroups: usize,
    pub lemma_2_4_applicable: usize,
    pub decompositions_verified: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub cap: usize,
    pub max_order: Option<usize>,
    pub entries: Vec<Entry>,
    pub summary: Summary,
    pub timing: Timing,
}

fn decomposition_check(ctx: &Context) -> CheckRecord {
    let search = search_decompositions(ctx);
    let Some(d) = search.first else {
        return CheckRecord::from_verdict(Verdict::vacuous("no decomposition"));
    };
    if let Err(why) = verify_decomposition(ctx, &d) {
        return CheckRecord::from_verdict(d.witnesses(Verdict::fail(why, None)));
    }
    let sufficiency = check_sufficiency(ctx, &d);
    let v = if sufficiency.holds {
        d.witnesses(Verdict::pass(format!(
            "witness re-verified; {}",
            sufficiency.detail
        )))
    } else {
        sufficiency
    };
    CheckRecord::from_verdict(v)
}

fn downstream_check(ctx: &Context) -> CheckRecord {
    let results = check_downstream(ctx);
    let triggered: Vec<String> = results
        .iter()
        .filter(|r| r.triggered)
        .map(|r| r.name.clone())
        .collect();
    let failed: Vec<&str> = results
        .iter()
        .filter(|r| !r.verdict.holds)
        .map(|r| r.name.as_str())
        .collect();
    let status = if !failed.is_empty() {
        Status::Fail
    } else if triggered.is_empty() {
        Status::Vacuous
    } else {
        Status::Pass
    };
    let detail = if failed.is_empty() {
        format!("triggered: {triggered:?}")
    } else {
        format!("violated: {failed:?}")
    };
    CheckRecord {
        status,
        detail,
        statements: results
            .into_iter()
            .map(|r| Statement {
                name: r.name,
                verdict: r.verdict,
            })
            .collect(),
        witnesses: Vec::new(),
        counterexample: None,
        triggered,
    }
}

fn readings_check(ctx: &Context) -> CheckRecord {
    let forall = hypothesis_normalizer_nilpotent(ctx);
    let exists = hypothesis_one_witness_reading(ctx);
    let v = if forall.holds == exists.holds {
        Verdict::pass(format!("both readings give {}", forall.holds))
    } else {
        Verdict::fail(
            format!(
                "every-Sylow reading {}, one-witness reading {}",
                forall.holds, exists.holds
            ),
            forall.counterexample.or(exists.counterexample),
        )
    };
    CheckRecord::from_verdict(v)
}

/// Runs one named checker; `None` for an unknown name.
pub fn run_check(ctx: &Context, name: &str) -> Option<CheckRecord> {
    Some(match name {
        "thm1.3" => CheckRecord::from_equivalence(verify_thm_1_3(ctx)),
        "thm1.9" => CheckRecord::from_equivalence(verify_thm_1_9(ctx)),
        "cor1.12" => CheckRecord::from_equivalence(verify_cor_1_12(ctx)),
        "lemma2.1" => CheckRecord::from_verdict(check_lemma_2_1(ctx)),
        "lemma2.2" => CheckRecord::from_verdict(check_lemma_2_2(ctx)),
        "lemma2.3" => CheckRecord::from_verdict(check_lemma_2_3(ctx)),
        "lemma2.4" => CheckRecord::from_verdict(check_lemma_2_4_all(ctx)),
        "decomposition" => decomposition_check(ctx),
        "downstream" => downstream_check(ctx),
        "oracles" => CheckRecord::from_verdict(check_oracles(ctx)),
        "readings" => readings_check(ctx),
        _ => return None,
    })
}

pub fn run_checks(ctx: &Context) -> BTreeMap<String, CheckRecord> {
    CHECK_NAMES
        .iter()
        .map(|&name| (name.to_string(), run_check(ctx, name).expect("known checker")))
        .collect()
}

fn subgroup_record(ctx: &Context, h: &Subgroup) -> SubgroupRecord {
    SubgroupRecord {
        order: h.order(),
        nilpotent: ctx.is_nilpotent(h),
        normal: ctx.is_normal(h),
        elements: h.elements(),
    }
}

pub fn structure_facts(ctx: &Context) -> StructureFacts {
    let g = ctx.group;
    let search = search_decompositions(ctx);
    StructureFacts {
        order: g.order(),
        primes: ctx.primes(),
        nilpotent: ctx.group_is_nilpotent(),
        solvable: structure::is_solvable(g, &g.whole()),
        subgroup_count: ctx.lattice.len(),
        invariant_count: ctx.invariant().count(),
        normal_sylows: structure::normal_sylows(g)
            .iter()
            .map(|(p, s)| Witness::new(format!("P (p={p})"), s))
            .collect(),
        maximal_invariant: ctx.maximal_invariant().map(|m| subgroup_record(ctx, m)).collect(),
        decomposition: search.first.map(|d| DecompositionRecord {
            acting_prime: d.normal_sylows[d.acting_factor_index].0,
            admissible: search.admissible,
            e_order: d.e.order(),
            v_order: d.complement.order(),
            witnesses: d.witnesses(Verdict::pass("")).witnesses,
        }),
    }
}

/// Compares hand-verified expectations for this action against computed
/// verdicts.
fn expectation_check(ctx: &Context, expected: &BTreeMap<String, bool>) -> CheckRecord {
    let mut mismatches = Vec::new();
    let mut count = 0;
    for (check, &want) in expected {
        let got = match check.as_str() {
            "hypothesis" => hypothesis_normalizer_nilpotent(ctx).holds,
            "statement-normal" => statement_nonnilpotent_normal(ctx).holds,
            "decomposition" => search_decompositions(ctx).first.is_some(),
            "all-maximal-nilpotent" => ctx.maximal_invariant().all(|m| ctx.is_nilpotent(m)),
            _ => {
                mismatches.push(format!("unknown expectation {check}"));
                continue;
            }
        };
        count += 1;
        if got != want {
            mismatches.push(format!("{check}: expected {want}, got {got}"));
        }
    }
    let v = if !mismatches.is_empty() {
        Verdict::fail(mismatches.join("; "), None)
    } else if count == 0 {
        Verdict::vacuous("no expectations")
    } else {
        Verdict::pass(format!("{count} expectations met"))
    };
    CheckRecord::from_verdict(v)
}

/// Full analysis of one group under one action.
pub fn analyze(
    group_name: &str,
    g: &GroupTable,
    lattice: &SubgroupLattice,
    action_name: &str,
    action: &ActionGroup,
    expected: &BTreeMap<String, bool>,
) -> Result<Entry> {
    let start = Instant::now();
    let ctx = Context::new(g, action, lattice)?;
    let mut checks = run_checks(&ctx);
    if !expected.is_empty() {
        checks.insert("expected".into(), expectation_check(&ctx, expected));
    }
    Ok(Entry {
        fingerprint: Fingerprint::of(g, lattice).to_string(),
        group: group_name.to_string(),
        action: action_name.to_string(),
        action_order: action.order(),
        checks,
        structure: structure_facts(&ctx),
        timing: Timing {
            micros: start.elapsed().as_micros() as u64,
        },
    })
}

fn fixture_entries(fixture: &Fixture, cap: usize) -> Result<Vec<Entry>> {
    let lattice = match fixture.cached_lattice() {
        Some(l) => l,
        None => std::sync::Arc::new(all_subgroups(&fixture.group, cap)?),
    };
    fixture
        .actions
        .iter()
        .map(|a| {
            let prefix = format!("{}/", a.name);
            let expected: BTreeMap<String, bool> = fixture
                .expected
                .iter()
                .filter_map(|(k, &v)| k.strip_prefix(&prefix).map(|c| (c.to_string(), v)))
                .collect();
            analyze(&fixture.name, &fixture.group, &lattice, &a.name, &a.action, &expected)
        })
        .collect()
}

/// Builds a report from entries: sorts them and fills the summary.
pub fn assemble(mut entries: Vec<Entry>, cap: usize, max_order: Option<usize>, micros: u64) -> Report {
    entries.sort_by(|a, b| {
        (&a.fingerprint, &a.action, &a.group).cmp(&(&b.fingerprint, &b.action, &b.group))
    });
    let mut s = Summary {
        fixtures_run: entries.len(),
        ..Default::default()
    };
    let mut groups: Vec<&str> = entries.iter().map(|e| e.group.as_str()).collect();
    groups.sort_unstable();
    groups.dedup();
    s.groups = groups.len();
    for name in checks::DOWNSTREAM_NAMES {
        s.downstream_triggers.insert(name.to_string(), 0);
    }
    for e in &entries {
        for (name, c) in &e.checks {
            *s.status_counts
                .entry(name.clone())
                .or_default()
                .entry(c.status.as_str().to_string())
                .or_default() += 1;
            if c.status == Status::Fail {
                s.failing.push(format!("{} [{}] {}", e.group, e.action, name));
            }
        }
        if let Some(d) = e.checks.get("downstream") {
            for t in &d.triggered {
                *s.downstream_triggers.entry(t.clone()).or_default() += 1;
            }
        }
        let passed = |name: &str| e.checks.get(name).is_some_and(|c| c.status == Status::Pass);
        s.lemma_2_2_fired += passed("lemma2.2") as usize;
        s.lemma_2_4_applicable += passed("lemma2.4") as usize;
        s.decompositions_verified += passed("decomposition") as usize;
        s.lemma_2_3_subgroups += e.structure.maximal_invariant.len();
    }
    s.failures = s.failing.len();
    Report {
        tool_version: TOOL_VERSION.to_string(),
        cap,
        max_order,
        entries,
        summary: s,
        timing: Timing { micros },
    }
}

/// Every checker on every fixture of [`standard_campaign`]. `jobs = None`
/// uses all cores.
pub fn run_campaign(max_order: usize, cap: usize, jobs: Option<usize>) -> Result<Report> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| GroupError::InvalidParameters(e.to_string()))?;
    let entries = pool.install(|| -> Result<Vec<Entry>> {
        let fixtures = standard_campaign(max_order, cap)?;
        let nested: Vec<Vec<Entry>> = fixtures
            .par_iter()
            .map(|f| fixture_entries(f, cap))
            .collect::<Result<_>>()?;
        Ok(nested.into_iter().flatten().collect())
    })?;
    Ok(assemble(entries, cap, Some(max_order), start.elapsed().as_micros() as u64))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("report serializes");
    let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
    out.push('\n');
    out
}

pub fn from_json(text: &str) -> serde_json::Result<Report> {
    serde_json::from_str(text)
}

/// Removes every `timing` key, recursively.
pub fn strip_timing(value: &mut Value) {
    match value {
        Value::Object(map) => {
            map.remove("timing");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{paper_fixtures, symmetric};
    use crate::group::DEFAULT_CAP;

    #[test]
    fn report_round_trips() {
        let report = run_campaign(12, DEFAULT_CAP, Some(2)).unwrap();
        let text = to_json(&report);
        assert_eq!(from_json(&text).unwrap(), report);
    }

    #[test]
    fn keys_are_sorted() {
        let report = run_campaign(4, DEFAULT_CAP, Some(1)).unwrap();
        let text = to_json(&report);
        let top: Vec<&str> = text
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split(':').next().unwrap())
            .collect();
        let mut sorted = top.clone();
        sorted.sort();
        assert_eq!(top, sorted);
        assert_eq!(top.len(), 6);
    }

    #[test]
    fn sym4_records_order_six_counterexample() {
        let g = symmetric(4).unwrap();
        let lattice = all_subgroups(&g, DEFAULT_CAP).unwrap();
        let a = ActionGroup::trivial(&g);
        let e = analyze("sym4", &g, &lattice, "A=1", &a, &BTreeMap::new()).unwrap();
        let thm19 = &e.checks["thm1.9"];
        assert_eq!(thm19.status, Status::Pass);
        assert!(thm19.statements.iter().all(|s| !s.verdict.holds));
        let hyp = thm19.statement("hypothesis").unwrap();
        assert_eq!(hyp.counterexample.as_ref().unwrap().elements.len(), 6);
    }

    #[test]
    fn paper_fixture_expectations_hold() {
        for mut f in paper_fixtures().unwrap() {
            f.lattice(DEFAULT_CAP).unwrap();
            for e in fixture_entries(&f, DEFAULT_CAP).unwrap() {
                let failing: Vec<&str> = e.failures().collect();
                assert!(failing.is_empty(), "{} {}: {failing:?}", e.group, e.action);
            }
        }
    }

    #[test]
    fn strip_timing_removes_nested_keys() {
        let mut v: Value = serde_json::json!({"a": {"timing": 1, "b": [{"timing": 2, "c": 3}]}, "timing": 4});
        strip_timing(&mut v);
        assert_eq!(v, serde_json::json!({"a": {"b": [{"c": 3}]}}));
    }
}
