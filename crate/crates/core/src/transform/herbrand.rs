use std::collections::BTreeSet;

use serde::Serialize;

use crate::formula::{Formula, Symbol, Term};

/// One function symbol introduced for an eliminated quantifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HerbrandSymbol {
    pub name: String,
    pub arity: usize,
    /// Location of the eliminated quantifier: `ante/<i>/<child>...` or
    /// `succ/<child>...`.
    pub origin: String,
}

/// Source of fresh `_hN` names. Keeping the counter explicit makes
/// concurrent normalizations reproducible.
#[derive(Clone, Debug)]
pub struct FreshNames {
    next: u32,
    taken: BTreeSet<Symbol>,
}

impl FreshNames {
    pub fn new(start: u32) -> Self {
        FreshNames { next: start.max(1), taken: BTreeSet::new() }
    }

    fn avoid(&mut self, names: impl IntoIterator<Item = Symbol>) {
        self.taken.extend(names);
    }

    fn fresh(&mut self) -> Symbol {
        loop {
            let s = Symbol::new(&format!("_h{}", self.next));
            self.next += 1;
            if self.taken.insert(s.clone()) {
                return s;
            }
        }
    }
}

impl Default for FreshNames {
    fn default() -> Self {
        FreshNames::new(1)
    }
}

/// Replaces every quantifier that a sequent proof would have to introduce
/// with a fresh constant (positive `forall` / negative `exists` on the
/// right, the converse on the left) by a term over the variables of the
/// enclosing quantifiers of the other kind.
pub fn herbrandize(
    antecedent: &[Formula],
    succedent: &Formula,
    names: &mut FreshNames,
) -> (Vec<Formula>, Formula, Vec<HerbrandSymbol>) {
    for f in antecedent.iter().chain(std::iter::once(succedent)) {
        names.avoid(f.symbols());
    }
    let mut ext = Vec::new();
    let ante = antecedent
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let mut w = Walker { names, ext: &mut ext, path: format!("ante/{i}"), scope: Vec::new() };
            w.walk(f, false)
        })
        .collect();
    let mut w = Walker { names, ext: &mut ext, path: "succ".into(), scope: Vec::new() };
    let succ = w.walk(succedent, true);
    (ante, succ, ext)
}

struct Walker<'a> {
    names: &'a mut FreshNames,
    ext: &'a mut Vec<HerbrandSymbol>,
    path: String,
    /// Variables of the enclosing retained quantifiers, outermost first.
    scope: Vec<Symbol>,
}

impl Walker<'_> {
    /// `right` is true when the occurrence sits on the right of the
    /// turnstile once all implications are unfolded.
    fn walk(&mut self, f: &Formula, right: bool) -> Formula {
        match f {
            Formula::Top | Formula::Bot | Formula::Atom(..) => f.clone(),
            Formula::And(a, b) => Formula::and(self.child(a, 0, right), self.child(b, 1, right)),
            Formula::Or(a, b) => Formula::or(self.child(a, 0, right), self.child(b, 1, right)),
            Formula::Implies(a, b) => Formula::implies(self.child(a, 0, !right), self.child(b, 1, right)),
            Formula::Forall(x, body) | Formula::Exists(x, body) => {
                let is_forall = matches!(f, Formula::Forall(..));
                if is_forall == right {
                    let name = self.names.fresh();
                    let args: Vec<Term> = self.scope.iter().cloned().map(Term::Var).collect();
                    self.ext.push(HerbrandSymbol {
                        name: name.as_str().to_string(),
                        arity: args.len(),
                        origin: self.path.clone(),
                    });
                    let term = if args.is_empty() { Term::Const(name) } else { Term::App(name, args) };
                    let replaced = body.substitute(x, &term);
                    self.child(&replaced, 0, right)
                } else {
                    let shadowed = self.scope.iter().position(|y| y == x);
                    if let Some(i) = shadowed {
                        self.scope.remove(i);
                    }
                    self.scope.push(x.clone());
                    let inner = self.child(body, 0, right);
                    self.scope.pop();
                    if let Some(i) = shadowed {
                        self.scope.insert(i, x.clone());
                    }
                    if is_forall {
                        Formula::Forall(x.clone(), Box::new(inner))
                    } else {
                        Formula::Exists(x.clone(), Box::new(inner))
                    }
                }
            }
        }
    }

    fn child(&mut self, f: &Formula, index: usize, right: bool) -> Formula {
        let saved = self.path.len();
        self.path.push_str(&format!("/{index}"));
        let out = self.walk(f, right);
        self.path.truncate(saved);
        out
    }
}
