use std::collections::BTreeMap;

use serde::Serialize;

use crate::formula::{Formula, MetaId, Term};

/// Idempotent metavariable bindings: no bound metavariable occurs in any
/// binding's value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Substitution {
    #[serde(serialize_with = "display_map")]
    map: BTreeMap<MetaId, Term>,
}

fn display_map<S: serde::Serializer>(m: &BTreeMap<MetaId, Term>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v.to_string())))
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    pub fn get(&self, m: MetaId) -> Option<&Term> {
        self.map.get(&m)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MetaId, &Term)> {
        self.map.iter()
    }

    pub fn apply(&self, t: &Term) -> Term {
        t.map_metas(&mut |m| self.map.get(&m).cloned().unwrap_or(Term::Meta(m)))
    }

    pub fn apply_formula(&self, f: &Formula) -> Formula {
        f.map_metas(&mut |m| self.map.get(&m).cloned().unwrap_or(Term::Meta(m)))
    }

    /// Adds `m := t`, where `t` is already normalized by `self` and does not
    /// mention `m`, keeping the map idempotent.
    fn extend(&mut self, m: MetaId, t: Term) {
        let single = Substitution { map: BTreeMap::from([(m, t.clone())]) };
        for v in self.map.values_mut() {
            *v = single.apply(v);
        }
        self.map.insert(m, t);
    }

    pub(crate) fn from_map(map: BTreeMap<MetaId, Term>) -> Self {
        Substitution { map }
    }
}

fn occurs(m: MetaId, t: &Term) -> bool {
    match t {
        Term::Meta(n) => *n == m,
        Term::App(_, args) => args.iter().any(|a| occurs(m, a)),
        _ => false,
    }
}

fn unify_into(a: &Term, b: &Term, s: &mut Substitution) -> bool {
    let a = s.apply(a);
    let b = s.apply(b);
    match (&a, &b) {
        _ if a == b => true,
        (Term::Meta(m), t) | (t, Term::Meta(m)) => {
            if occurs(*m, t) {
                return false;
            }
            s.extend(*m, t.clone());
            true
        }
        (Term::App(f, xs), Term::App(g, ys)) if f == g && xs.len() == ys.len() => {
            xs.iter().zip(ys).all(|(x, y)| unify_into(x, y, s))
        }
        _ => false,
    }
}

/// Most general extension of `s` that unifies two terms, or `None`.
pub fn unify(a: &Term, b: &Term, s: &Substitution) -> Option<Substitution> {
    let mut out = s.clone();
    unify_into(a, b, &mut out).then_some(out)
}

/// Unifies two atoms (or two identical logical constants).
pub fn unify_atoms(a: &Formula, b: &Formula, s: &Substitution) -> Option<Substitution> {
    match (a, b) {
        (Formula::Atom(p, xs), Formula::Atom(q, ys)) if p == q && xs.len() == ys.len() => {
            let mut out = s.clone();
            xs.iter().zip(ys).all(|(x, y)| unify_into(x, y, &mut out)).then_some(out)
        }
        (Formula::Top, Formula::Top) | (Formula::Bot, Formula::Bot) => Some(s.clone()),
        _ => None,
    }
}

/// Triangular bindings with an undo trail, used inside one search.
#[derive(Default)]
pub(crate) struct Bindings {
    vals: Vec<Option<Term>>,
    trail: Vec<MetaId>,
}

#[derive(Clone, Copy)]
pub(crate) struct Mark {
    trail: usize,
    metas: usize,
}

impl Bindings {
    pub fn fresh(&mut self) -> MetaId {
        let id = MetaId(self.vals.len() as u32);
        self.vals.push(None);
        id
    }

    /// Number of metavariables allocated so far.
    pub fn allocated(&self) -> usize {
        self.vals.len()
    }

    pub fn mark(&self) -> Mark {
        Mark { trail: self.trail.len(), metas: self.vals.len() }
    }

    /// Undoes every binding and metavariable created after `mark`.
    pub fn undo(&mut self, mark: Mark) {
        while self.trail.len() > mark.trail {
            let m = self.trail.pop().expect("trail entry");
            self.vals[m.0 as usize] = None;
        }
        self.vals.truncate(mark.metas);
    }

    pub fn deref<'a>(&'a self, mut t: &'a Term) -> &'a Term {
        while let Term::Meta(m) = t {
            match self.vals.get(m.0 as usize).and_then(Option::as_ref) {
                Some(v) => t = v,
                None => break,
            }
        }
        t
    }

    pub fn resolve_term(&self, t: &Term) -> Term {
        match self.deref(t) {
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|a| self.resolve_term(a)).collect()),
            other => other.clone(),
        }
    }

    pub fn resolve(&self, f: &Formula) -> Formula {
        f.map_metas(&mut |m| self.resolve_term(&Term::Meta(m)))
    }

    fn occurs(&self, m: MetaId, t: &Term) -> bool {
        match self.deref(t) {
            Term::Meta(n) => *n == m,
            Term::App(_, args) => args.iter().any(|a| self.occurs(m, a)),
            _ => false,
        }
    }

    /// Unifies two terms, leaving partial bindings on failure; callers undo
    /// to a mark.
    pub fn unify(&mut self, a: &Term, b: &Term) -> bool {
        let a = self.deref(a).clone();
        let b = self.deref(b).clone();
        match (&a, &b) {
            (Term::Meta(m), Term::Meta(n)) if m == n => true,
            (Term::Meta(m), t) | (t, Term::Meta(m)) => {
                if self.occurs(*m, t) {
                    return false;
                }
                self.vals[m.0 as usize] = Some(t.clone());
                self.trail.push(*m);
                true
            }
            (Term::App(f, xs), Term::App(g, ys)) => {
                f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| self.unify(x, y))
            }
            _ => a == b,
        }
    }

    pub fn unify_atoms(&mut self, a: &Formula, b: &Formula) -> bool {
        match (a, b) {
            (Formula::Atom(p, xs), Formula::Atom(q, ys)) => {
                p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| self.unify(x, y))
            }
            (Formula::Bot, Formula::Bot) | (Formula::Top, Formula::Top) => true,
            _ => false,
        }
    }

    /// Structural equality after dereferencing, without allocating.
    pub fn same_term(&self, a: &Term, b: &Term) -> bool {
        match (self.deref(a), self.deref(b)) {
            (Term::App(f, xs), Term::App(g, ys)) => {
                f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| self.same_term(x, y))
            }
            (x, y) => x == y,
        }
    }

    pub fn same(&self, a: &Formula, b: &Formula) -> bool {
        match (a, b) {
            (Formula::Atom(p, xs), Formula::Atom(q, ys)) => {
                p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| self.same_term(x, y))
            }
            (Formula::And(a1, b1), Formula::And(a2, b2))
            | (Formula::Or(a1, b1), Formula::Or(a2, b2))
            | (Formula::Implies(a1, b1), Formula::Implies(a2, b2)) => self.same(a1, a2) && self.same(b1, b2),
            (Formula::Exists(x, f), Formula::Exists(y, g)) | (Formula::Forall(x, f), Formula::Forall(y, g)) => {
                x == y && self.same(f, g)
            }
            _ => a == b,
        }
    }
}
