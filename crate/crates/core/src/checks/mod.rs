//! Executable forms of the classification theorems, their corollaries, the
//! supporting lemmas and the cited downstream results, each returning a
//! [`Verdict`] or [`EquivalenceReport`] with explicit witnesses.
//!
//! Scans are deterministic: primes ascend, subgroups follow lattice order
//! `(order, members)`, and the first witness wins.

mod decomposition;
mod downstream;
mod hypothesis;
mod lemmas;

pub use decomposition::{
    check_sufficiency, find_decomposition, search_decompositions, verify_decomposition,
    Decomposition, DecompositionSearch,
};
pub use downstream::{check_downstream, check_oracles, DownstreamVerdict, DOWNSTREAM_NAMES};
pub use hypothesis::{
    hypothesis_normalizer_nilpotent, hypothesis_one_witness_reading, statement_nonnilpotent_normal,
    statement_nonnilpotent_ti, verify_cor_1_12, verify_thm_1_3, verify_thm_1_9,
};
pub use lemmas::{
    check_lemma_2_1, check_lemma_2_2, check_lemma_2_3, check_lemma_2_4, check_lemma_2_4_all,
    Lemma24Outcome,
};

use serde::{Deserialize, Serialize};

use crate::action::{invariant_indices, maximal_among, ActionGroup};
use crate::arith::{gcd, prime_divisors};
use crate::error::{GroupError, Result};
use crate::group::{GroupTable, Subgroup};
use crate::lattice::SubgroupLattice;
use crate::structure;

/// A group with a coprime action and its lattice, plus the derived data every
/// checker needs.
pub struct Context<'a> {
    pub group: &'a GroupTable,
    pub action: &'a ActionGroup,
    pub lattice: &'a SubgroupLattice,
    invariant: Vec<usize>,
    maximal_invariant: Vec<usize>,
    normal: Vec<bool>,
}

impl<'a> Context<'a> {
    pub fn new(
        group: &'a GroupTable,
        action: &'a ActionGroup,
        lattice: &'a SubgroupLattice,
    ) -> Result<Self> {
        if gcd(action.order(), group.order()) != 1 {
            return Err(GroupError::NotCoprime {
                action_order: action.order(),
                group_order: group.order(),
            });
        }
        let invariant = invariant_indices(lattice, action);
        let maximal_invariant = maximal_among(lattice, &invariant);
        let normal = lattice
            .subgroups()
            .iter()
            .map(|s| structure::is_normal(group, s))
            .collect();
        Ok(Context {
            group,
            action,
            lattice,
            invariant,
            maximal_invariant,
            normal,
        })
    }

    pub fn primes(&self) -> Vec<usize> {
        prime_divisors(self.group.order())
    }

    /// A-invariant subgroups, in lattice order.
    pub fn invariant(&self) -> impl Iterator<Item = &Subgroup> {
        self.invariant.iter().map(|&i| self.lattice.get(i))
    }

    /// Maximal A-invariant subgroups, in lattice order.
    pub fn maximal_invariant(&self) -> impl Iterator<Item = &Subgroup> {
        self.maximal_invariant.iter().map(|&i| self.lattice.get(i))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        match self.lattice.index_of(h) {
            Some(i) => self.normal[i],
            None => structure::is_normal(self.group, h),
        }
    }

    pub fn is_nilpotent(&self, h: &Subgroup) -> bool {
        structure::is_nilpotent(self.group, h)
    }

    pub fn is_invariant(&self, h: &Subgroup) -> bool {
        self.action.is_invariant(h)
    }

    pub fn group_is_nilpotent(&self) -> bool {
        self.is_nilpotent(&self.group.whole())
    }

    /// A-invariant Sylow `p`-subgroups in lattice order.
    pub fn invariant_sylows(&self, p: usize) -> Vec<&Subgroup> {
        let target = crate::arith::p_part(self.group.order(), p);
        self.invariant()
            .filter(|s| s.order() == target)
            .collect()
    }

    /// `H` is a maximal A-invariant subgroup of `K`: `H < K` and no
    /// A-invariant subgroup lies strictly between them.
    pub fn is_maximal_invariant_in(&self, h: &Subgroup, k: &Subgroup) -> bool {
        h.is_proper_subgroup_of(k)
            && !self
                .invariant()
                .any(|x| h.is_proper_subgroup_of(x) && x.is_proper_subgroup_of(k))
    }
}

/// A subgroup reported by name and sorted element ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub elements: Vec<u32>,
}

impl Witness {
    pub fn new(name: impl Into<String>, h: &Subgroup) -> Self {
        Witness {
            name: name.into(),
            elements: h.elements(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    /// The quantified set was empty (or the antecedent false).
    pub vacuous: bool,
    /// False when the claim's preconditions do not apply to the input.
    pub applicable: bool,
    pub detail: String,
    pub witnesses: Vec<Witness>,
    pub counterexample: Option<Witness>,
}

impl Verdict {
    pub fn pass(detail: impl Into<String>) -> Self {
        Verdict {
            holds: true,
            applicable: true,
            detail: detail.into(),
            ..Default::default()
        }
    }

    pub fn vacuous(detail: impl Into<String>) -> Self {
        Verdict {
            vacuous: true,
            ..Verdict::pass(detail)
        }
    }

    pub fn fail(detail: impl Into<String>, counterexample: Option<Witness>) -> Self {
        Verdict {
            holds: false,
            applicable: true,
            detail: detail.into(),
            counterexample,
            ..Default::default()
        }
    }

    pub fn not_applicable(detail: impl Into<String>) -> Self {
        Verdict {
            holds: true,
            applicable: false,
            detail: detail.into(),
            ..Default::default()
        }
    }

    pub fn with_witness(mut self, name: impl Into<String>, h: &Subgroup) -> Self {
        self.witnesses.push(Witness::new(name, h));
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EquivalenceStatus {
    Equivalent,
    Discrepancy,
    OutOfHypothesis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Statement {
    pub name: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub statements: Vec<Statement>,
    /// True iff `status` is [`EquivalenceStatus::Equivalent`].
    pub equivalent: bool,
    pub status: EquivalenceStatus,
    pub detail: String,
    /// Set whenever the statements disagree.
    pub counterexample: Option<Witness>,
}

impl EquivalenceReport {
    pub(crate) fn from_statements(
        statements: Vec<Statement>,
        out_of_hypothesis: bool,
        detail: String,
        fallback: &Subgroup,
    ) -> Self {
        let agree = statements
            .windows(2)
            .all(|w| w[0].verdict.holds == w[1].verdict.holds);
        let status = if out_of_hypothesis {
            EquivalenceStatus::OutOfHypothesis
        } else if agree {
            EquivalenceStatus::Equivalent
        } else {
            EquivalenceStatus::Discrepancy
        };
        let counterexample = (!agree && !out_of_hypothesis).then(|| {
            statements
                .iter()
                .filter(|s| !s.verdict.holds)
                .find_map(|s| s.verdict.counterexample.clone())
                .or_else(|| {
                    statements
                        .iter()
                        .filter(|s| s.verdict.holds)
                        .find_map(|s| s.verdict.witnesses.first().cloned())
                })
                .unwrap_or_else(|| Witness::new("G", fallback))
        });
        EquivalenceReport {
            equivalent: status == EquivalenceStatus::Equivalent,
            statements,
            status,
            detail,
            counterexample,
        }
    }

    pub fn statement(&self, name: &str) -> Option<&Verdict> {
        self.statements
            .iter()
            .find(|s| s.name == name)
            .map(|s| &s.verdict)
    }
}
