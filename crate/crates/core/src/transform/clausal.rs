use std::collections::BTreeSet;

use crate::formula::{Formula, Offense, Polarity, Symbol, Term};

use super::TransformError;

/// A clause under construction: `forall vars. body => h1 \/ ... \/ hn`.
#[derive(Clone, Debug)]
struct Clause {
    vars: Vec<Symbol>,
    body: Formula,
    heads: Vec<Formula>,
}

impl Clause {
    fn fact(head: Formula) -> Clause {
        Clause { vars: Vec::new(), body: Formula::Top, heads: vec![head] }
    }

    /// Names occurring free, i.e. bound further out.
    fn free_vars(&self) -> BTreeSet<Symbol> {
        let mut out = self.body.free_vars();
        for h in &self.heads {
            out.extend(h.free_vars());
        }
        for v in &self.vars {
            out.remove(v);
        }
        out
    }

    fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out = self.body.symbols();
        for h in &self.heads {
            out.extend(h.symbols());
        }
        out.extend(self.vars.iter().cloned());
        out
    }

    /// Renames the clause's own variables that appear in `clash`.
    fn rename_apart(mut self, clash: &BTreeSet<Symbol>, avoid: &BTreeSet<Symbol>) -> Clause {
        let mut avoid = avoid.clone();
        avoid.extend(self.symbols());
        for i in 0..self.vars.len() {
            let v = self.vars[i].clone();
            if !clash.contains(&v) {
                continue;
            }
            let fresh = crate::formula::fresh_name(&v, &avoid);
            avoid.insert(fresh.clone());
            let t = Term::Var(fresh.clone());
            self.body = self.body.substitute(&v, &t);
            self.heads = self.heads.iter().map(|h| h.substitute(&v, &t)).collect();
            self.vars[i] = fresh;
        }
        self
    }

    /// Folds the constants away. `None` means the clause is trivially true.
    fn simplify(mut self) -> Option<Clause> {
        if self.body == Formula::Bot || self.heads.contains(&Formula::Top) {
            return None;
        }
        if self.heads.len() > 1 {
            self.heads.retain(|h| *h != Formula::Bot);
            if self.heads.is_empty() {
                self.heads.push(Formula::Bot);
            }
        }
        let mut seen = BTreeSet::new();
        self.heads.retain(|h| seen.insert(h.clone()));
        let mut used = BTreeSet::new();
        used.extend(self.body.free_vars());
        self.heads.iter().for_each(|h| used.extend(h.free_vars()));
        self.vars.retain(|v| used.contains(v));
        Some(self)
    }

    fn into_formula(self) -> Formula {
        let head = Formula::disjunction(self.heads);
        let mut f = if self.body == Formula::Top { head } else { Formula::implies(self.body, head) };
        for v in self.vars.into_iter().rev() {
            f = Formula::Forall(v, Box::new(f));
        }
        f
    }
}

fn conj(a: Formula, b: Formula) -> Formula {
    match (a, b) {
        (Formula::Top, g) | (g, Formula::Top) => g,
        (Formula::Bot, _) | (_, Formula::Bot) => Formula::Bot,
        (a, b) => Formula::and(a, b),
    }
}

fn outside(f: &Formula, polarity: Polarity, reason: &'static str) -> TransformError {
    TransformError::OutsideFragment(Offense { subformula: f.clone(), polarity, reason })
}

/// Splits a clause-position formula into reduced clauses.
fn clauses_of(f: &Formula, pol: Polarity) -> Result<Vec<Clause>, TransformError> {
    match f {
        Formula::Top => Ok(Vec::new()),
        Formula::Bot | Formula::Atom(..) => Ok(vec![Clause::fact(f.clone())]),
        Formula::And(a, b) => {
            let mut out = clauses_of(a, pol)?;
            out.extend(clauses_of(b, pol)?);
            Ok(out)
        }
        Formula::Or(a, b) => {
            let left = clauses_of(a, pol)?;
            let right = clauses_of(b, pol)?;
            let mut out = Vec::new();
            for c1 in &left {
                for c2 in &right {
                    let mut clash: BTreeSet<Symbol> = c1.vars.iter().cloned().collect();
                    clash.extend(c1.free_vars());
                    let c2 = c2.clone().rename_apart(&clash, &c1.symbols());
                    let c2_free = c2.free_vars();
                    let c1 = c1.clone().rename_apart(&c2_free, &c2.symbols());
                    let mut vars = c1.vars;
                    vars.extend(c2.vars);
                    let mut heads = c1.heads;
                    heads.extend(c2.heads);
                    out.push(Clause { vars, body: conj(c1.body, c2.body), heads });
                }
            }
            Ok(out)
        }
        Formula::Implies(g, d) => {
            let body = goal_of(g, pol.flip())?;
            let body_free = body.free_vars();
            let body_syms = body.symbols();
            clauses_of(d, pol)?
                .into_iter()
                .map(|c| {
                    let c = c.rename_apart(&body_free, &body_syms);
                    Ok(Clause { body: conj(body.clone(), c.body), ..c })
                })
                .collect()
        }
        Formula::Forall(x, d) => Ok(clauses_of(d, pol)?
            .into_iter()
            .map(|mut c| {
                if !c.vars.contains(x) {
                    c.vars.insert(0, x.clone());
                }
                c
            })
            .collect()),
        Formula::Exists(..) => Err(outside(f, pol, "existential quantifier in clause position must be eliminated first")),
    }
}

fn goal_of(f: &Formula, pol: Polarity) -> Result<Formula, TransformError> {
    Ok(match f {
        Formula::Top | Formula::Bot | Formula::Atom(..) => f.clone(),
        Formula::And(a, b) => conj(goal_of(a, pol)?, goal_of(b, pol)?),
        Formula::Or(a, b) => match (goal_of(a, pol)?, goal_of(b, pol)?) {
            (Formula::Top, _) | (_, Formula::Top) => Formula::Top,
            (Formula::Bot, g) | (g, Formula::Bot) => g,
            (a, b) => Formula::or(a, b),
        },
        Formula::Implies(d, g) => {
            let hyps = clauses_of(d, pol.flip())?;
            let mut acc = goal_of(g, pol)?;
            if acc == Formula::Top {
                return Ok(Formula::Top);
            }
            for c in hyps.into_iter().rev().filter_map(Clause::simplify) {
                acc = Formula::implies(c.into_formula(), acc);
            }
            acc
        }
        Formula::Exists(x, g) => match goal_of(g, pol)? {
            Formula::Top => Formula::Top,
            inner => Formula::Exists(x.clone(), Box::new(inner)),
        },
        Formula::Forall(..) => return Err(outside(f, pol, "universal quantifier in goal position must be eliminated first")),
    })
}

/// Rewrites assumptions into reduced clauses, in input order and then split
/// order. Trivially true clauses are dropped.
pub fn normalize_clauses(assumptions: &[Formula]) -> Result<Vec<Formula>, TransformError> {
    let mut out = Vec::new();
    for d in assumptions {
        out.extend(clauses_of(d, Polarity::Positive)?.into_iter().filter_map(Clause::simplify).map(Clause::into_formula));
    }
    Ok(out)
}

/// Rewrites a goal into the reduced goal grammar; hypotheses become chains
/// of implications, one per clause.
pub fn normalize_goal(goal: &Formula) -> Result<Formula, TransformError> {
    goal_of(goal, Polarity::Positive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{classify, parse, FragmentClass, Grammar, Role};

    fn clauses(srcs: &[&str]) -> Vec<Formula> {
        let fs: Vec<_> = srcs.iter().map(|s| parse(s).unwrap()).collect();
        normalize_clauses(&fs).unwrap()
    }

    fn parsed(srcs: &[&str]) -> Vec<Formula> {
        srcs.iter().map(|s| parse(s).unwrap()).collect()
    }

    #[test]
    fn conjunction_splits() {
        assert_eq!(clauses(&["p /\\ q"]), parsed(&["p", "q"]));
    }

    #[test]
    fn guarded_head_absorbs_disjunct() {
        assert_eq!(clauses(&["(g1 => a) \\/ b"]), parsed(&["g1 => a \\/ b"]));
    }

    #[test]
    fn quantifier_distributes_over_split() {
        assert_eq!(
            clauses(&["forall x. (p(x) /\\ (g(x) => h(x)))"]),
            parsed(&["forall x. p(x)", "forall x. (g(x) => h(x))"])
        );
    }

    #[test]
    fn nested_implications_are_curried() {
        assert_eq!(clauses(&["a => (b => c)"]), parsed(&["a /\\ b => c"]));
    }

    #[test]
    fn disjunction_of_quantified_clauses_renames_apart() {
        let got = clauses(&["(forall x. p(x)) \\/ (forall x. q(x))"]);
        assert_eq!(got, parsed(&["forall x. forall x1. (p(x) \\/ q(x1))"]));
    }

    #[test]
    fn constants_are_folded() {
        assert_eq!(clauses(&["true", "p \\/ true", "false => q"]), Vec::<Formula>::new());
        assert_eq!(clauses(&["p \\/ false"]), parsed(&["p"]));
        assert_eq!(clauses(&["g => false"]), parsed(&["g => false"]));
        assert_eq!(clauses(&["false"]), parsed(&["false"]));
        assert_eq!(clauses(&["true => p"]), parsed(&["p"]));
    }

    #[test]
    fn goal_hypotheses_become_implication_chains() {
        let g = normalize_goal(&parse("(p /\\ q) => r").unwrap()).unwrap();
        assert_eq!(g, parse("p => (q => r)").unwrap());
        let peirce = parse("((p => q) => p) => p").unwrap();
        assert_eq!(normalize_goal(&peirce).unwrap(), peirce);
        let ex = parse("exists x. p(x)").unwrap();
        assert_eq!(normalize_goal(&ex).unwrap(), ex);
    }

    #[test]
    fn goal_constants_are_folded() {
        assert_eq!(normalize_goal(&parse("true => p").unwrap()).unwrap(), parse("p").unwrap());
        assert_eq!(normalize_goal(&parse("p \\/ false").unwrap()).unwrap(), parse("p").unwrap());
        assert_eq!(normalize_goal(&parse("p => true").unwrap()).unwrap(), Formula::Top);
    }

    #[test]
    fn universal_goal_is_rejected() {
        let TransformError::OutsideFragment(o) = normalize_goal(&parse("forall x. p(x)").unwrap()).unwrap_err();
        assert_eq!(o.polarity, Polarity::Positive);
    }

    #[test]
    fn existential_clause_is_rejected() {
        assert!(normalize_clauses(&parsed(&["exists x. d(x)"])).is_err());
    }

    #[test]
    fn outputs_classify_as_reduced() {
        let cs = clauses(&[
            "forall x. ((a(x) => b(x)) \\/ (c => d(x)))",
            "((p => q) => r) /\\ (s \\/ (t => u))",
            "forall y. ((exists z. r(y, z)) => (q(y) \\/ (forall w. s(w, y))))",
        ]);
        for c in &cs {
            assert_eq!(classify(c, Role::Assumption, Grammar::Reduced), FragmentClass::ReducedClause, "{c}");
        }
    }
}
