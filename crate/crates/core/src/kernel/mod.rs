//! Sequents, proof trees, and independent checkers for the proof
//! disciplines the engine and its expansions target.

mod check;
mod exchange;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::formula::{Formula, Symbol, Term};

pub use check::{check, CheckReport, Discipline, Violation};
pub use exchange::{from_json, to_json, ExchangeError};

/// A pair of multisets. Order is kept for display and for occurrence
/// indices but is irrelevant to equality checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequent {
    pub antecedent: Vec<Formula>,
    pub succedent: Vec<Formula>,
}

impl Sequent {
    pub fn new(antecedent: Vec<Formula>, succedent: Vec<Formula>) -> Self {
        Sequent { antecedent, succedent }
    }

    pub fn single(antecedent: Vec<Formula>, goal: Formula) -> Self {
        Sequent { antecedent, succedent: vec![goal] }
    }

    /// Multiset equality on both sides.
    pub fn same_as(&self, other: &Sequent) -> bool {
        same_multiset(&self.antecedent, &other.antecedent) && same_multiset(&self.succedent, &other.succedent)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |fs: &[Formula]| fs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "{} --> {}", side(&self.antecedent), side(&self.succedent))
    }
}

pub(crate) fn same_multiset(a: &[Formula], b: &[Formula]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut x: Vec<&Formula> = a.iter().collect();
    let mut y: Vec<&Formula> = b.iter().collect();
    x.sort();
    y.sort();
    x == y
}

/// True if `⊤` is in the succedent or some atom or `⊥` is on both sides.
pub fn is_axiom(s: &Sequent) -> bool {
    s.succedent.contains(&Formula::Top)
        || s.antecedent.iter().any(|a| a.is_atomic_or_bot() && s.succedent.contains(a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleName {
    #[serde(rename = "axiom")]
    Axiom,
    #[serde(rename = "contr-L")]
    ContrL,
    #[serde(rename = "contr-R")]
    ContrR,
    #[serde(rename = "bot-R")]
    BotR,
    #[serde(rename = "and-L")]
    AndL,
    #[serde(rename = "and-R")]
    AndR,
    #[serde(rename = "or-L")]
    OrL,
    #[serde(rename = "or-R-left")]
    OrRLeft,
    #[serde(rename = "or-R-right")]
    OrRRight,
    #[serde(rename = "imp-L")]
    ImpL,
    #[serde(rename = "imp-R")]
    ImpR,
    #[serde(rename = "all-L")]
    AllL,
    #[serde(rename = "all-R")]
    AllR,
    #[serde(rename = "ex-L")]
    ExL,
    #[serde(rename = "ex-R")]
    ExR,
    #[serde(rename = "or-L-G")]
    OrLG,
    #[serde(rename = "res-G")]
    ResG,
    #[serde(rename = "restart")]
    Restart,
    #[serde(rename = "atomic")]
    Atomic,
    #[serde(rename = "backchain")]
    Backchain,
    /// Never accepted; present so that documents using it get a precise
    /// rejection instead of a parse error.
    #[serde(rename = "cut")]
    Cut,
}

impl RuleName {
    pub const ALL: [RuleName; 21] = [
        RuleName::Axiom,
        RuleName::ContrL,
        RuleName::ContrR,
        RuleName::BotR,
        RuleName::AndL,
        RuleName::AndR,
        RuleName::OrL,
        RuleName::OrRLeft,
        RuleName::OrRRight,
        RuleName::ImpL,
        RuleName::ImpR,
        RuleName::AllL,
        RuleName::AllR,
        RuleName::ExL,
        RuleName::ExR,
        RuleName::OrLG,
        RuleName::ResG,
        RuleName::Restart,
        RuleName::Atomic,
        RuleName::Backchain,
        RuleName::Cut,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleName::Axiom => "axiom",
            RuleName::ContrL => "contr-L",
            RuleName::ContrR => "contr-R",
            RuleName::BotR => "bot-R",
            RuleName::AndL => "and-L",
            RuleName::AndR => "and-R",
            RuleName::OrL => "or-L",
            RuleName::OrRLeft => "or-R-left",
            RuleName::OrRRight => "or-R-right",
            RuleName::ImpL => "imp-L",
            RuleName::ImpR => "imp-R",
            RuleName::AllL => "all-L",
            RuleName::AllR => "all-R",
            RuleName::ExL => "ex-L",
            RuleName::ExR => "ex-R",
            RuleName::OrLG => "or-L-G",
            RuleName::ResG => "res-G",
            RuleName::Restart => "restart",
            RuleName::Atomic => "atomic",
            RuleName::Backchain => "backchain",
            RuleName::Cut => "cut",
        }
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The clause instance used by an `atomic` or `backchain` step: one term
/// per leading universal of the clause, and the index of the head that
/// closes the goal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceRef {
    pub terms: Vec<Term>,
    pub head: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTree {
    pub conclusion: Sequent,
    pub rule: RuleName,
    /// Occurrence index of the principal formula: into the antecedent for
    /// left rules and clause-based steps, into the succedent otherwise.
    pub principal: Option<usize>,
    pub witness: Option<Term>,
    pub eigen: Option<Symbol>,
    pub instance: Option<InstanceRef>,
    pub premises: Vec<ProofTree>,
}

impl ProofTree {
    pub fn new(conclusion: Sequent, rule: RuleName, premises: Vec<ProofTree>) -> Self {
        ProofTree { conclusion, rule, principal: None, witness: None, eigen: None, instance: None, premises }
    }

    pub fn axiom(conclusion: Sequent) -> Self {
        ProofTree::new(conclusion, RuleName::Axiom, Vec::new())
    }

    pub fn with_principal(mut self, index: usize) -> Self {
        self.principal = Some(index);
        self
    }

    pub fn with_witness(mut self, t: Term) -> Self {
        self.witness = Some(t);
        self
    }

    pub fn with_eigen(mut self, c: &str) -> Self {
        self.eigen = Some(Symbol::new(c));
        self
    }

    pub fn with_instance(mut self, terms: Vec<Term>, head: usize) -> Self {
        self.instance = Some(InstanceRef { terms, head });
        self
    }

    /// Number of sequents in the tree.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::size).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::height).max().unwrap_or(0)
    }

    pub fn count(&self, rule: RuleName) -> usize {
        usize::from(self.rule == rule) + self.premises.iter().map(|p| p.count(rule)).sum::<usize>()
    }

    /// Indented one-node-per-line rendering.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, depth: usize, out: &mut String) {
        out.push_str(&"  ".repeat(depth));
        out.push_str(&format!("[{}] {}\n", self.rule, self.conclusion));
        for p in &self.premises {
            p.render_into(depth + 1, out);
        }
    }
}
