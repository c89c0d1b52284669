//! Brute-force classical validity: truth tables for quantifier-free
//! sequents, and finite ground expansion for function-free first-order ones.

mod corpus;
mod differential;
pub mod gen;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::formula::{Formula, Symbol, Term};

pub use corpus::{parse_corpus, CorpusCase, CorpusError, Expect};
pub use differential::{differential, CaseOutcome, CaseReport, DifferentialReport, Problem};

/// Truth tables stop at this many distinct atoms.
pub const MAX_ATOMS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("quantified formula {0} needs a domain")]
    Quantified(Formula),
    #[error("{0} distinct atoms exceed the truth-table limit of {MAX_ATOMS}")]
    TooManyAtoms(usize),
    #[error("function symbols are not supported: {0}")]
    FunctionSymbols(Formula),
    #[error("the domain is empty")]
    EmptyDomain,
    #[error("open formula {0}")]
    Open(Formula),
}

/// An assignment to the ground atoms of a query.
pub type Valuation = BTreeMap<Formula, bool>;

/// Evaluates a quantifier-free formula. Atoms missing from `v` are false.
pub fn eval(f: &Formula, v: &Valuation) -> bool {
    match f {
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Atom(..) => v.get(f).copied().unwrap_or(false),
        Formula::And(a, b) => eval(a, v) && eval(b, v),
        Formula::Or(a, b) => eval(a, v) || eval(b, v),
        Formula::Implies(a, b) => !eval(a, v) || eval(b, v),
        Formula::Exists(..) | Formula::Forall(..) => panic!("eval on quantified formula {f}"),
    }
}

fn atoms_into(f: &Formula, out: &mut Vec<Formula>) -> Result<(), OracleError> {
    match f {
        Formula::Top | Formula::Bot => Ok(()),
        Formula::Atom(_, args) => {
            if args.iter().any(|t| !t.is_ground()) {
                return Err(OracleError::Open(f.clone()));
            }
            if !out.contains(f) {
                out.push(f.clone());
            }
            Ok(())
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            atoms_into(a, out)?;
            atoms_into(b, out)
        }
        Formula::Exists(..) | Formula::Forall(..) => Err(OracleError::Quantified(f.clone())),
    }
}

/// True iff every valuation making all of `antecedent` true makes
/// `succedent` true.
pub fn prop_valid(antecedent: &[Formula], succedent: &Formula) -> Result<bool, OracleError> {
    let mut atoms = Vec::new();
    for f in antecedent.iter().chain(std::iter::once(succedent)) {
        atoms_into(f, &mut atoms)?;
    }
    if atoms.len() > MAX_ATOMS {
        return Err(OracleError::TooManyAtoms(atoms.len()));
    }
    let mut v: Valuation = atoms.iter().map(|a| (a.clone(), false)).collect();
    for mask in 0u32..(1u32 << atoms.len()) {
        for (i, a) in atoms.iter().enumerate() {
            v.insert(a.clone(), mask & (1 << i) != 0);
        }
        if antecedent.iter().all(|f| eval(f, &v)) && !eval(succedent, &v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Replaces quantifiers by finite conjunctions and disjunctions over
/// `domain`.
pub fn ground_expand(f: &Formula, domain: &[Symbol]) -> Result<Formula, OracleError> {
    if domain.is_empty() {
        return Err(OracleError::EmptyDomain);
    }
    if f.has_function_symbols() {
        return Err(OracleError::FunctionSymbols(f.clone()));
    }
    Ok(expand(f, domain))
}

fn expand(f: &Formula, domain: &[Symbol]) -> Formula {
    match f {
        Formula::Forall(x, b) | Formula::Exists(x, b) => {
            let parts = domain.iter().map(|d| expand(&b.substitute(x, &Term::Const(d.clone())), domain)).collect();
            if matches!(f, Formula::Forall(..)) {
                Formula::conjunction(parts)
            } else {
                Formula::disjunction(parts)
            }
        }
        Formula::And(a, b) => Formula::and(expand(a, domain), expand(b, domain)),
        Formula::Or(a, b) => Formula::or(expand(a, domain), expand(b, domain)),
        Formula::Implies(a, b) => Formula::implies(expand(a, domain), expand(b, domain)),
        other => other.clone(),
    }
}

/// Validity over the finite domain of the given constants. Necessary for
/// classical provability, not sufficient in general.
pub fn ground_valid(antecedent: &[Formula], succedent: &Formula, domain: &[Symbol]) -> Result<bool, OracleError> {
    let ante = antecedent.iter().map(|f| ground_expand(f, domain)).collect::<Result<Vec<_>, _>>()?;
    prop_valid(&ante, &ground_expand(succedent, domain)?)
}
