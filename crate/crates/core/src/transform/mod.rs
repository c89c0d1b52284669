//! Normalization of an arbitrary sequent into the reduced clause/goal
//! syntax the search engine works on.

mod clausal;
mod herbrand;

use serde::Serialize;
use thiserror::Error;

use crate::formula::{classify, Formula, FragmentClass, Grammar, Offense, Role};

pub use clausal::{normalize_clauses, normalize_goal};
pub use herbrand::{herbrandize, FreshNames, HerbrandSymbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("outside the fragment: {0}")]
    OutsideFragment(Offense),
}

/// Negation is parsed as implication into `false`, so there is nothing to
/// expand once a formula is built.
pub fn expand_negations(f: &Formula) -> Formula {
    f.clone()
}

#[derive(Clone, Copy, Debug)]
pub struct NormalizeOptions {
    /// Turning this off leaves eigenvariable quantifiers in place, which
    /// normally makes the sequent fall outside the fragment.
    pub herbrandize: bool,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        NormalizeOptions { herbrandize: true }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalizedProblem {
    #[serde(serialize_with = "display_all")]
    pub clauses: Vec<Formula>,
    #[serde(serialize_with = "display_one")]
    pub goal: Formula,
    pub signature_ext: Vec<HerbrandSymbol>,
    pub trace: Vec<String>,
}

fn display_all<S: serde::Serializer>(fs: &[Formula], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(fs.iter().map(|f| f.to_string()))
}

fn display_one<S: serde::Serializer>(f: &Formula, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&f.to_string())
}

impl NormalizedProblem {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.clauses {
            out.push_str(&format!("clause {c}\n"));
        }
        out.push_str(&format!("goal {}\n", self.goal));
        for h in &self.signature_ext {
            out.push_str(&format!("fresh {}/{} from {}\n", h.name, h.arity, h.origin));
        }
        out
    }
}

/// Herbrandizes, then clause-normalizes the antecedent and the goal.
pub fn normalize(
    antecedent: &[Formula],
    succedent: &Formula,
    opts: NormalizeOptions,
) -> Result<NormalizedProblem, TransformError> {
    let mut trace = Vec::new();
    let (ante, succ, ext) = if opts.herbrandize {
        let (a, s, ext) = herbrandize(antecedent, succedent, &mut FreshNames::default());
        for h in &ext {
            trace.push(format!("herbrandize {} -> {}/{}", h.origin, h.name, h.arity));
        }
        (a, s, ext)
    } else {
        (antecedent.to_vec(), succedent.clone(), Vec::new())
    };
    if let FragmentClass::OutsideFragment(o) = classify(&succ, Role::Goal, Grammar::General) {
        return Err(TransformError::OutsideFragment(o));
    }
    for d in &ante {
        if let FragmentClass::OutsideFragment(o) = classify(d, Role::Assumption, Grammar::General) {
            return Err(TransformError::OutsideFragment(o));
        }
    }
    let mut clauses = Vec::new();
    for d in &ante {
        let cs = normalize_clauses(std::slice::from_ref(d))?;
        let rendered: Vec<_> = cs.iter().map(|c| c.to_string()).collect();
        trace.push(format!("clausify {d} -> [{}]", rendered.join("; ")));
        clauses.extend(cs);
    }
    let goal = normalize_goal(&succ)?;
    if goal != succ {
        trace.push(format!("goal {succ} -> {goal}"));
    }
    Ok(NormalizedProblem { clauses, goal, signature_ext: ext, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, parse_sequent, ParseOptions, Signature, Term};

    fn run(src: &str, opts: NormalizeOptions) -> Result<NormalizedProblem, TransformError> {
        let (ante, goal) = parse_sequent(src, ParseOptions::default(), &mut Signature::default()).unwrap();
        normalize(&ante, &goal, opts)
    }

    #[test]
    fn negation_expansion_is_identity() {
        let f = parse("~~p").unwrap();
        assert_eq!(expand_negations(&f), parse("(p => false) => false").unwrap());
    }

    #[test]
    fn conjunctive_assumption() {
        let np = run("p /\\ q |- r", NormalizeOptions::default()).unwrap();
        assert_eq!(np.clauses, vec![parse("p").unwrap(), parse("q").unwrap()]);
        assert_eq!(np.goal, parse("r").unwrap());
    }

    #[test]
    fn existential_assumption() {
        let np = run("exists x. d(x) |- g", NormalizeOptions::default()).unwrap();
        assert_eq!(np.clauses, vec![Formula::atom("d", vec![Term::constant("_h1")])]);
        assert_eq!(np.signature_ext.len(), 1);
    }

    #[test]
    fn disabling_herbrandization_leaves_sequent_outside() {
        let src = "forall x. ((p(x) => false) => false) |- forall x. p(x)";
        let Err(TransformError::OutsideFragment(o)) = run(src, NormalizeOptions { herbrandize: false }) else {
            panic!("expected a fragment violation");
        };
        assert_eq!(o.subformula, parse("forall x. p(x)").unwrap());
        let np = run(src, NormalizeOptions::default()).unwrap();
        assert_eq!(np.goal, Formula::atom("p", vec![Term::constant("_h1")]));
    }

    #[test]
    fn text_form_lists_everything() {
        let np = run("exists x. d(x) |- g", NormalizeOptions::default()).unwrap();
        assert_eq!(np.to_text(), "clause d(_h1)\ngoal g\nfresh _h1/0 from ante/0\n");
    }
}
