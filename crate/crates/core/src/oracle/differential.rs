use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::engine::{expand_to_og, prove, SearchConfig, Stats};
use crate::formula::{Formula, Symbol};
use crate::kernel::{check, Discipline};
use crate::transform::{normalize, NormalizeOptions};

use super::{ground_valid, prop_valid, CorpusCase, Expect};

/// A sequent to run through both sides.
#[derive(Clone, Debug)]
pub struct Problem {
    pub label: String,
    pub antecedent: Vec<Formula>,
    pub succedent: Formula,
    pub domain: Option<Vec<Symbol>>,
    pub expect: Option<Expect>,
}

impl From<CorpusCase> for Problem {
    fn from(c: CorpusCase) -> Self {
        Problem {
            label: format!("line {}: {}", c.line, c.text),
            antecedent: c.antecedent,
            succedent: c.succedent,
            domain: c.domain,
            expect: c.expect,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseOutcome {
    Agree,
    /// Proved, but the oracle finds a countermodel.
    Unsound,
    /// Propositional, valid, and not proved within the bound.
    Incomplete,
    /// The engine verdict differs from the corpus expectation.
    Unexpected,
    /// A found proof failed the kernel.
    KernelRejected,
    /// The input could not be normalized or searched.
    InputError,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub label: String,
    pub proved: bool,
    /// `None` where the oracle does not apply.
    pub oracle_valid: Option<bool>,
    pub outcome: CaseOutcome,
    pub detail: Option<String>,
    pub stats: Option<Stats>,
    pub millis: u128,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct DifferentialReport {
    pub cases: Vec<CaseReport>,
    pub disagreements: usize,
}

impl fmt::Display for DifferentialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            let oracle = match c.oracle_valid {
                Some(true) => "valid",
                Some(false) => "invalid",
                None => "unknown",
            };
            let verdict = if c.proved { "proved" } else { "not-proved" };
            write!(f, "{:?} engine={verdict} oracle={oracle} {}", c.outcome, c.label)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "{} cases, {} disagreements", self.cases.len(), self.disagreements)
    }
}

/// Runs normalization, search, kernel checks and the oracle on every
/// problem.
pub fn differential(problems: impl IntoIterator<Item = Problem>, config: &SearchConfig) -> DifferentialReport {
    let mut report = DifferentialReport::default();
    for p in problems {
        let case = run_case(p, config);
        if case.outcome != CaseOutcome::Agree {
            report.disagreements += 1;
        }
        report.cases.push(case);
    }
    report
}

fn run_case(p: Problem, config: &SearchConfig) -> CaseReport {
    let start = Instant::now();
    let propositional = p.antecedent.iter().chain([&p.succedent]).all(Formula::is_quantifier_free);
    let oracle_valid = if propositional {
        prop_valid(&p.antecedent, &p.succedent).ok()
    } else {
        p.domain.as_ref().and_then(|d| ground_valid(&p.antecedent, &p.succedent, d).ok())
    };
    let mut case = CaseReport {
        label: p.label,
        proved: false,
        oracle_valid,
        outcome: CaseOutcome::Agree,
        detail: None,
        stats: None,
        millis: 0,
    };
    let searched = normalize(&p.antecedent, &p.succedent, NormalizeOptions::default())
        .map_err(|e| e.to_string())
        .and_then(|np| prove(&np.clauses, &np.goal, config).map(|r| (np, r)).map_err(|e| e.to_string()));
    match searched {
        Err(e) => {
            case.outcome = CaseOutcome::InputError;
            case.detail = Some(e);
        }
        Ok((np, r)) => {
            case.proved = r.proved();
            case.stats = Some(r.stats.clone());
            if let Some(proof) = &r.proof {
                let reduced = check(proof, &Discipline::Reduced(np.goal.clone()));
                let og = check(&expand_to_og(proof, &np.goal), &Discipline::OG(np.goal.clone()));
                if let Some(v) = reduced.violations.first().or(og.violations.first()) {
                    case.outcome = CaseOutcome::KernelRejected;
                    case.detail = Some(v.to_string());
                }
            }
            if case.outcome == CaseOutcome::Agree {
                case.outcome = if case.proved && oracle_valid == Some(false) {
                    CaseOutcome::Unsound
                } else if !case.proved && propositional && oracle_valid == Some(true) {
                    CaseOutcome::Incomplete
                } else if p.expect.is_some_and(|e| (e == Expect::Proved) != case.proved) {
                    CaseOutcome::Unexpected
                } else {
                    CaseOutcome::Agree
                };
            }
        }
    }
    case.millis = start.elapsed().as_millis();
    case
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::parse_corpus;

    fn corpus(src: &str) -> DifferentialReport {
        let cases = parse_corpus(src).unwrap();
        differential(cases.into_iter().map(Problem::from), &SearchConfig::default())
    }

    #[test]
    fn agreement_on_small_corpus() {
        let r = corpus("|- ((p => q) => p) => p\np |- q\n# domain: a, b\np(a) \\/ p(b) |- exists x. p(x)\n");
        assert_eq!(r.disagreements, 0, "{r}");
        assert_eq!(r.cases[1].oracle_valid, Some(false));
        assert_eq!(r.cases[2].oracle_valid, Some(true));
    }

    #[test]
    fn corrupted_expectation_is_reported() {
        let r = corpus("# expect: not-proved\n|- p => p\n");
        assert_eq!(r.disagreements, 1);
        assert_eq!(r.cases[0].outcome, CaseOutcome::Unexpected);
    }

    #[test]
    fn empty_input_gives_empty_report() {
        let r = corpus("");
        assert!(r.cases.is_empty());
        assert_eq!(r.disagreements, 0);
    }
}
