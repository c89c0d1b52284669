//! Goal-directed proof search over reduced clauses and goals.
//!
//! Compound goals are decomposed by their top connective. An atomic goal
//! (or `false`) is closed by `atomic` (a bodiless clause with a matching
//! head), `backchain` (a clause with a body), or `restart` (re-attacking the
//! top-level goal). Heads of a clause instance other than the one used
//! become extra hypotheses for fresh attempts at the top-level goal.
//! Universal variables and existential witnesses are metavariables resolved
//! by unification. Search is depth-first under an iteratively deepened bound
//! on the number of sequents in the proof.

mod expand;
mod schema;
mod search;
mod table;
mod unify;

use serde::Serialize;
use thiserror::Error;

use crate::formula::Formula;
use crate::kernel::{ProofTree, RuleName};

pub use expand::{expand_to_og, expand_to_uniform};
pub use schema::{instances, ClauseInstanceSchema};
pub use unify::{unify, unify_atoms, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("{formula} is not a reduced clause: {offense}")]
    NotReduced { formula: Formula, offense: String },
    #[error("{formula} is not a reduced goal: {offense}")]
    NotReducedGoal { formula: Formula, offense: String },
    #[error("invalid search configuration: {0}")]
    Config(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClauseOrder {
    /// Every clause in the order it entered the context.
    Input,
    /// Same order, skipping clauses with no head that could match.
    IndexedByHead,
}

/// Where the extra heads of a disjunctive clause instance send the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RemainderTarget {
    /// The top-level goal, as the reduced system requires.
    TopGoal,
    /// The goal being proved at that point. Combined with an explicit
    /// `goal => false` clause and no restarts this searches for plain
    /// uniform proofs.
    CurrentGoal,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchConfig {
    pub max_sequents: usize,
    /// Strictly increasing bounds ending at `max_sequents`.
    pub deepening_schedule: Vec<usize>,
    pub restart_enabled: bool,
    pub clause_order: ClauseOrder,
    pub remainder_target: RemainderTarget,
    /// Prune a sequent that repeats one of its ancestors (same goal, same
    /// set of hypotheses).
    pub loop_check: bool,
    /// Search quantifier-free problems with a table of smallest proof sizes
    /// per sequent instead of plain depth-first search.
    pub tabled: bool,
    /// Record applied rules, one line each, capped at `trace_limit`.
    pub trace: bool,
    pub trace_limit: usize,
}

impl SearchConfig {
    pub fn with_max(max_sequents: usize) -> Self {
        SearchConfig { max_sequents, deepening_schedule: default_schedule(max_sequents), ..SearchConfig::default() }
    }

    pub fn no_restart(mut self) -> Self {
        self.restart_enabled = false;
        self
    }

    /// The configuration that looks for uniform proofs of the problem with
    /// `goal => false` added by the caller.
    pub fn uniform(max_sequents: usize) -> Self {
        SearchConfig { remainder_target: RemainderTarget::CurrentGoal, ..SearchConfig::with_max(max_sequents).no_restart() }
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        if self.max_sequents == 0 {
            return Err(EngineError::Config("max_sequents must be positive".into()));
        }
        if self.deepening_schedule.windows(2).any(|w| w[0] >= w[1]) {
            return Err(EngineError::Config("deepening schedule must be strictly increasing".into()));
        }
        if self.deepening_schedule.last() != Some(&self.max_sequents) {
            return Err(EngineError::Config("deepening schedule must end at max_sequents".into()));
        }
        Ok(())
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_sequents: 200,
            deepening_schedule: default_schedule(200),
            restart_enabled: true,
            clause_order: ClauseOrder::Input,
            remainder_target: RemainderTarget::TopGoal,
            loop_check: true,
            tabled: true,
            trace: false,
            trace_limit: 10_000,
        }
    }
}

/// Doubling bounds from 8, capped at `max`.
pub fn default_schedule(max: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut b = 8;
    while b < max {
        out.push(b);
        b *= 2;
    }
    out.push(max);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Proved,
    ExhaustedAtBound,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub restart: usize,
    pub atomic: usize,
    pub backchain: usize,
    pub or_r: usize,
    pub and_r: usize,
    pub imp_r: usize,
    pub ex_r: usize,
    pub axiom: usize,
    /// Clause steps in the proof that left at least one extra head.
    pub with_remainder: usize,
    /// Sequents in the proof.
    pub sequents: usize,
    /// Sequents examined by the search over all rungs.
    pub nodes_expanded: u64,
    /// The bound of the rung that succeeded, or the last one tried.
    pub bound: usize,
}

impl Stats {
    fn of_proof(p: &ProofTree) -> Stats {
        let mut s = Stats {
            restart: p.count(RuleName::Restart),
            atomic: p.count(RuleName::Atomic),
            backchain: p.count(RuleName::Backchain),
            or_r: p.count(RuleName::OrRLeft) + p.count(RuleName::OrRRight),
            and_r: p.count(RuleName::AndR),
            imp_r: p.count(RuleName::ImpR),
            ex_r: p.count(RuleName::ExR),
            axiom: p.count(RuleName::Axiom),
            sequents: p.size(),
            ..Stats::default()
        };
        fn remainders(p: &ProofTree) -> usize {
            let own = match p.rule {
                RuleName::Atomic => usize::from(!p.premises.is_empty()),
                RuleName::Backchain => usize::from(p.premises.len() > 1),
                _ => 0,
            };
            own + p.premises.iter().map(remainders).sum::<usize>()
        }
        s.with_remainder = remainders(p);
        s
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub status: Status,
    pub proof: Option<ProofTree>,
    pub final_subst: Substitution,
    pub stats: Stats,
    pub trace: Vec<String>,
}

impl SearchResult {
    pub fn proved(&self) -> bool {
        self.status == Status::Proved
    }
}

/// Searches for a proof of `clauses --> goal` in the reduced system.
pub fn prove(clauses: &[Formula], goal: &Formula, config: &SearchConfig) -> Result<SearchResult, EngineError> {
    config.validate()?;
    search::run(clauses, goal, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::kernel::{check, Discipline};

    fn problem(clauses: &[&str], goal: &str) -> (Vec<Formula>, Formula) {
        (clauses.iter().map(|c| parse(c).unwrap()).collect(), parse(goal).unwrap())
    }

    fn run(clauses: &[&str], goal: &str, cfg: &SearchConfig) -> SearchResult {
        let (cs, g) = problem(clauses, goal);
        let r = prove(&cs, &g, cfg).unwrap();
        if let Some(p) = &r.proof {
            let rep = check(p, &Discipline::Reduced(g.clone()));
            assert!(rep.ok, "{:?}\n{}", rep.reasons(), p.render());
            let og = expand_to_og(p, &g);
            let rep = check(&og, &Discipline::OG(g.clone()));
            assert!(rep.ok, "{:?}\n{}", rep.reasons(), og.render());
        }
        r
    }

    #[test]
    fn schedule_shape() {
        assert_eq!(default_schedule(200), vec![8, 16, 32, 64, 128, 200]);
        assert_eq!(default_schedule(40), vec![8, 16, 32, 40]);
        assert_eq!(default_schedule(5), vec![5]);
        assert!(SearchConfig::with_max(40).validate().is_ok());
        let mut bad = SearchConfig::default();
        bad.deepening_schedule = vec![10, 10, 200];
        assert!(bad.validate().is_err());
    }

    #[test]
    fn disjunctive_program() {
        let r = run(&["p \\/ q", "p => r", "q => r"], "r", &SearchConfig::default());
        assert!(r.proved());
        assert_eq!(r.stats.backchain, 2);
        assert_eq!(r.stats.atomic, 2);
        assert_eq!(r.stats.with_remainder, 1);
        assert_eq!(r.stats.restart, 0);
        assert_eq!(r.stats.sequents, 4);
        let rules: Vec<RuleName> = {
            fn walk(p: &ProofTree, out: &mut Vec<RuleName>) {
                out.push(p.rule);
                p.premises.iter().for_each(|q| walk(q, out));
            }
            let mut out = Vec::new();
            walk(r.proof.as_ref().unwrap(), &mut out);
            out
        };
        use RuleName::*;
        assert_eq!(rules, vec![Backchain, Atomic, Backchain, Atomic]);
    }

    #[test]
    fn existential_over_disjunction() {
        let r = run(&["p(a) \\/ p(b)"], "exists x. p(x)", &SearchConfig::default());
        assert!(r.proved());
        assert!(r.stats.with_remainder >= 1);
    }

    #[test]
    fn peirce_needs_restart() {
        let r = run(&[], "((p => q) => p) => p", &SearchConfig::default());
        assert!(r.proved());
        assert!(r.stats.restart >= 1);
        let r = run(&[], "((p => q) => p) => p", &SearchConfig::with_max(40).no_restart());
        assert_eq!(r.status, Status::ExhaustedAtBound);
    }

    #[test]
    fn non_theorems_exhaust() {
        assert!(!run(&["p"], "q", &SearchConfig::default()).proved());
        assert!(!run(&[], "p", &SearchConfig::default()).proved());
    }

    #[test]
    fn unit_clause_is_a_single_step() {
        let r = run(&["p"], "p", &SearchConfig::default());
        assert_eq!(r.stats.sequents, 1);
        assert_eq!(r.stats.atomic, 1);
    }

    #[test]
    fn metavariables_are_grounded() {
        let r = run(&[], "exists x. (q(x) => false) \\/ q(c)", &SearchConfig::default());
        assert!(r.proved());
        let r = run(&["forall x. p(x)"], "exists y. p(y)", &SearchConfig::default());
        assert!(r.proved());
        let p = r.proof.unwrap();
        assert!(p.to_owned().premises[0].conclusion.succedent[0].metavars().is_empty());
        assert!(r.final_subst.iter().all(|(_, t)| t.is_ground()));
    }

    #[test]
    fn first_order_backchaining() {
        let r = run(
            &["forall x. (p(x) => p(s(x)))", "p(z)"],
            "exists y. p(s(s(y)))",
            &SearchConfig::default(),
        );
        assert!(r.proved());
    }

    #[test]
    fn herbrand_witness_in_hypothesis() {
        // goal from the universal-or-counterexample sequent after
        // herbrandization
        let (cs, _) = problem(&[], "p");
        let g = Formula::or(
            Formula::atom("q", vec![crate::formula::Term::constant("_h1")]),
            parse("exists x. (q(x) => false)").unwrap(),
        );
        let r = prove(&cs, &g, &SearchConfig::default()).unwrap();
        assert!(r.proved());
        let p = r.proof.unwrap();
        assert!(check(&p, &Discipline::Reduced(g.clone())).ok);
        assert!(check(&expand_to_og(&p, &g), &Discipline::OG(g.clone())).ok);
    }

    #[test]
    fn uniform_regime_with_explicit_negated_goal() {
        let g = parse("((p => q) => p) => p").unwrap();
        let cs = vec![Formula::not(g.clone())];
        let r = prove(&cs, &g, &SearchConfig::uniform(200)).unwrap();
        assert!(r.proved());
        assert_eq!(r.stats.restart, 0);
        let u = expand_to_uniform(r.proof.as_ref().unwrap());
        let rep = check(&u, &Discipline::Uniform);
        assert!(rep.ok, "{:?}\n{}", rep.reasons(), u.render());
    }

    #[test]
    fn tabled_and_plain_search_agree() {
        let plain = SearchConfig { tabled: false, ..SearchConfig::with_max(24) };
        let tabled = SearchConfig::with_max(24);
        let mut g = crate::oracle::gen::Generator::new(11);
        for _ in 0..60 {
            let p = g.reduced_problem();
            let a = prove(&p.antecedent, &p.succedent, &tabled).unwrap();
            let b = prove(&p.antecedent, &p.succedent, &plain).unwrap();
            assert_eq!(a.proved(), b.proved(), "{:?} |- {}", p.antecedent, p.succedent);
            if let (Some(x), Some(y)) = (&a.proof, &b.proof) {
                assert!(x.size() <= y.size());
                assert!(check(y, &Discipline::Reduced(p.succedent.clone())).ok);
            }
        }
    }

    #[test]
    fn deterministic() {
        let a = run(&["p \\/ q", "p => r", "q => r"], "r", &SearchConfig::default());
        let b = run(&["p \\/ q", "p => r", "q => r"], "r", &SearchConfig::default());
        assert_eq!(a.stats, b.stats);
        assert_eq!(a.proof, b.proof);
    }

    #[test]
    fn rejects_non_reduced_input() {
        let (cs, g) = problem(&["p /\\ q"], "p");
        assert!(prove(&cs, &g, &SearchConfig::default()).is_err());
        let (cs, g) = problem(&[], "forall x. p(x)");
        assert!(prove(&cs, &g, &SearchConfig::default()).is_err());
    }
}
