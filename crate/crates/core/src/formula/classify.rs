//! Membership in the goal/clause fragments and polarity analysis.
//!
//! The general grammar forbids universal quantifiers at positive polarity
//! in goals and at negative polarity in clauses:
//!
//! ```text
//! G ::= true | false | A | G /\ G | G \/ G | D => G | exists x. G
//! D ::= true | false | A | G => D | D /\ D | D \/ D | exists x. D | forall x. D
//! ```
//!
//! The reduced grammar used by the search engine, where `A` also ranges
//! over `true` and `false`:
//!
//! ```text
//! G ::= A | G /\ G | G \/ G | D => G | exists x. G
//! D ::= A \/ ... \/ A | G => (A \/ ... \/ A) | forall x. D
//! ```

use std::fmt;

use super::{Formula, Polarity};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Role {
    Goal,
    Assumption,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Grammar {
    General,
    Reduced,
}

/// The first subformula that falls outside the requested grammar, with its
/// polarity relative to the classified formula.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Offense {
    pub subformula: Formula,
    pub polarity: Polarity,
    pub reason: &'static str,
}

impl fmt::Display for Offense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {} polarity: {}", self.subformula, self.polarity, self.reason)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FragmentClass {
    GFormula,
    DFormula,
    ReducedGoal,
    ReducedClause,
    OutsideFragment(Offense),
}

impl FragmentClass {
    pub fn is_inside(&self) -> bool {
        !matches!(self, FragmentClass::OutsideFragment(_))
    }
}

pub fn classify(f: &Formula, role: Role, grammar: Grammar) -> FragmentClass {
    let pos = Polarity::Positive;
    let result = match (role, grammar) {
        (Role::Goal, Grammar::General) => general_goal(f, pos).map(|_| FragmentClass::GFormula),
        (Role::Assumption, Grammar::General) => general_clause(f, pos).map(|_| FragmentClass::DFormula),
        (Role::Goal, Grammar::Reduced) => reduced_goal(f, pos).map(|_| FragmentClass::ReducedGoal),
        (Role::Assumption, Grammar::Reduced) => reduced_clause(f, pos).map(|_| FragmentClass::ReducedClause),
    };
    result.unwrap_or_else(FragmentClass::OutsideFragment)
}

fn offense(f: &Formula, polarity: Polarity, reason: &'static str) -> Offense {
    Offense { subformula: f.clone(), polarity, reason }
}

fn general_goal(f: &Formula, pol: Polarity) -> Result<(), Offense> {
    match f {
        Formula::Top | Formula::Bot | Formula::Atom(..) => Ok(()),
        Formula::And(a, b) | Formula::Or(a, b) => {
            general_goal(a, pol)?;
            general_goal(b, pol)
        }
        Formula::Implies(d, g) => {
            general_clause(d, pol.flip())?;
            general_goal(g, pol)
        }
        Formula::Exists(_, g) => general_goal(g, pol),
        Formula::Forall(..) => Err(offense(f, pol, "universal quantifier in goal position")),
    }
}

fn general_clause(f: &Formula, pol: Polarity) -> Result<(), Offense> {
    match f {
        Formula::Top | Formula::Bot | Formula::Atom(..) => Ok(()),
        Formula::And(a, b) | Formula::Or(a, b) => {
            general_clause(a, pol)?;
            general_clause(b, pol)
        }
        Formula::Implies(g, d) => {
            general_goal(g, pol.flip())?;
            general_clause(d, pol)
        }
        Formula::Exists(_, d) | Formula::Forall(_, d) => general_clause(d, pol),
    }
}

fn reduced_goal(f: &Formula, pol: Polarity) -> Result<(), Offense> {
    match f {
        Formula::Top | Formula::Bot | Formula::Atom(..) => Ok(()),
        Formula::And(a, b) | Formula::Or(a, b) => {
            reduced_goal(a, pol)?;
            reduced_goal(b, pol)
        }
        Formula::Implies(d, g) => {
            reduced_clause(d, pol.flip())?;
            reduced_goal(g, pol)
        }
        Formula::Exists(_, g) => reduced_goal(g, pol),
        Formula::Forall(..) => Err(offense(f, pol, "universal quantifier in goal position")),
    }
}

fn reduced_clause(f: &Formula, pol: Polarity) -> Result<(), Offense> {
    let mut matrix = f;
    while let Formula::Forall(_, body) = matrix {
        matrix = body;
    }
    match matrix {
        Formula::Implies(g, heads) => {
            reduced_goal(g, pol.flip())?;
            head_disjunction(heads, pol)
        }
        other => head_disjunction(other, pol),
    }
}

fn head_disjunction(f: &Formula, pol: Polarity) -> Result<(), Offense> {
    for leaf in f.disjuncts() {
        match leaf {
            Formula::Top | Formula::Bot | Formula::Atom(..) => {}
            Formula::Exists(..) => return Err(offense(leaf, pol, "existential quantifier in clause position")),
            Formula::Forall(..) => return Err(offense(leaf, pol, "universal quantifier inside a clause head")),
            _ => return Err(offense(leaf, pol, "clause head is not a disjunction of atoms")),
        }
    }
    Ok(())
}

/// Every subformula occurrence with its path (child indices from the root)
/// and polarity, in pre-order.
pub fn polarities(f: &Formula) -> Vec<(Vec<usize>, &Formula, Polarity)> {
    let mut out = Vec::new();
    fn go<'a>(f: &'a Formula, path: &mut Vec<usize>, pol: Polarity, out: &mut Vec<(Vec<usize>, &'a Formula, Polarity)>) {
        out.push((path.clone(), f, pol));
        for (i, child) in f.children().into_iter().enumerate() {
            let child_pol = if i == 0 && matches!(f, Formula::Implies(..)) { pol.flip() } else { pol };
            path.push(i);
            go(child, path, child_pol, out);
            path.pop();
        }
    }
    go(f, &mut Vec::new(), Polarity::Positive, &mut out);
    out
}
