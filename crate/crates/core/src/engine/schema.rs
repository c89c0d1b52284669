use std::fmt;

use crate::formula::{classify, Formula, FragmentClass, Grammar, MetaId, Role, Symbol, Term};

use super::EngineError;

/// A reduced clause split into its pieces, still over the names of its
/// universal prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ClauseShape {
    pub vars: Vec<Symbol>,
    pub body: Option<Formula>,
    pub heads: Vec<Formula>,
}

impl ClauseShape {
    pub fn of(clause: &Formula) -> Result<ClauseShape, EngineError> {
        if let FragmentClass::OutsideFragment(o) = classify(clause, Role::Assumption, Grammar::Reduced) {
            return Err(EngineError::NotReduced { formula: clause.clone(), offense: o.to_string() });
        }
        Ok(ClauseShape::split(clause))
    }

    /// Splits a formula already known to be a reduced clause.
    pub fn split(clause: &Formula) -> ClauseShape {
        let mut vars = Vec::new();
        let mut matrix = clause;
        while let Formula::Forall(x, body) = matrix {
            vars.push(x.clone());
            matrix = body;
        }
        let (body, heads) = match matrix {
            Formula::Implies(g, h) => (Some((**g).clone()), h.disjuncts().into_iter().cloned().collect()),
            other => (None, other.disjuncts().into_iter().cloned().collect()),
        };
        ClauseShape { vars, body, heads }
    }

    /// Replaces the universal variables by the given metavariables.
    pub fn open(&self, metas: &[MetaId]) -> (Option<Formula>, Vec<Formula>) {
        let mut body = self.body.clone();
        let mut heads = self.heads.clone();
        for (x, m) in self.vars.iter().zip(metas) {
            let t = Term::Meta(*m);
            body = body.map(|b| b.substitute(x, &t));
            heads = heads.iter().map(|h| h.substitute(x, &t)).collect();
        }
        (body, heads)
    }
}

/// `⟨body, heads⟩` with the clause's universals left open as metavariables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseInstanceSchema {
    pub body: Option<Formula>,
    pub heads: Vec<Formula>,
    pub open_vars: Vec<MetaId>,
}

impl fmt::Display for ClauseInstanceSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let heads: Vec<String> = self.heads.iter().map(|h| h.to_string()).collect();
        let vars: Vec<String> = self.open_vars.iter().map(|m| m.to_string()).collect();
        match &self.body {
            Some(b) => write!(f, "<{{{b}}}, {{{}}}> over [{}]", heads.join(", "), vars.join(", ")),
            None => write!(f, "<{{}}, {{{}}}> over [{}]", heads.join(", "), vars.join(", ")),
        }
    }
}

/// One schema per clause, numbering metavariables from 1.
pub fn instances(clauses: &[Formula]) -> Result<Vec<ClauseInstanceSchema>, EngineError> {
    let mut next = 1;
    clauses
        .iter()
        .map(|c| {
            let shape = ClauseShape::of(c)?;
            let open_vars: Vec<MetaId> = shape
                .vars
                .iter()
                .map(|_| {
                    next += 1;
                    MetaId(next - 1)
                })
                .collect();
            let (body, heads) = shape.open(&open_vars);
            Ok(ClauseInstanceSchema { body, heads, open_vars })
        })
        .collect()
}
