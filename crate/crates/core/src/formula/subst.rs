//! Capture-avoiding replacement of free variables.

use std::collections::BTreeSet;

use super::{Formula, Symbol, Term};

impl Term {
    /// Replaces every occurrence of the variable `x` by `t`.
    pub fn substitute(&self, x: &Symbol, t: &Term) -> Term {
        match self {
            Term::Var(y) if y == x => t.clone(),
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|a| a.substitute(x, t)).collect()),
            other => other.clone(),
        }
    }

    pub fn mentions_var(&self, x: &Symbol) -> bool {
        match self {
            Term::Var(y) => y == x,
            Term::App(_, args) => args.iter().any(|a| a.mentions_var(x)),
            _ => false,
        }
    }
}

impl Formula {
    /// `[t/x]self`: replaces the free occurrences of `x` by `t`, renaming a
    /// bound variable only when it would capture a variable of `t`.
    pub fn substitute(&self, x: &Symbol, t: &Term) -> Formula {
        let mut tvars = BTreeSet::new();
        t.collect_vars(&mut tvars);
        self.subst_inner(x, t, &tvars)
    }

    fn subst_inner(&self, x: &Symbol, t: &Term, tvars: &BTreeSet<Symbol>) -> Formula {
        match self {
            Formula::Top | Formula::Bot => self.clone(),
            Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(|a| a.substitute(x, t)).collect()),
            Formula::And(a, b) => Formula::and(a.subst_inner(x, t, tvars), b.subst_inner(x, t, tvars)),
            Formula::Or(a, b) => Formula::or(a.subst_inner(x, t, tvars), b.subst_inner(x, t, tvars)),
            Formula::Implies(a, b) => Formula::implies(a.subst_inner(x, t, tvars), b.subst_inner(x, t, tvars)),
            Formula::Exists(y, body) | Formula::Forall(y, body) => {
                if y == x || !body.free_vars().contains(x) {
                    return self.clone();
                }
                let (y2, body2) = if tvars.contains(y) {
                    let mut avoid = body.symbols();
                    avoid.extend(tvars.iter().cloned());
                    avoid.insert(x.clone());
                    let fresh = fresh_name(y, &avoid);
                    let renamed = body.substitute(y, &Term::Var(fresh.clone()));
                    (fresh, renamed)
                } else {
                    (y.clone(), (**body).clone())
                };
                let inner = Box::new(body2.subst_inner(x, t, tvars));
                match self {
                    Formula::Exists(..) => Formula::Exists(y2, inner),
                    _ => Formula::Forall(y2, inner),
                }
            }
        }
    }
}

/// `base1`, `base2`, ... : the first candidate not in `avoid`.
pub(crate) fn fresh_name(base: &Symbol, avoid: &BTreeSet<Symbol>) -> Symbol {
    (1..)
        .map(|n| Symbol::new(&format!("{base}{n}")))
        .find(|s| !avoid.contains(s))
        .expect("unbounded candidate supply")
}
