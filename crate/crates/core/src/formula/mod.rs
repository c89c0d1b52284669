//! First-order syntax: terms, formulas, polarity and fragment classification.
//!
//! Negation is not a constructor. The parser reads `~A` as `A => false` and
//! the pretty printer folds it back.

mod classify;
mod parse;
mod print;
mod subst;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use classify::{classify, polarities, FragmentClass, Grammar, Offense, Role};
pub use parse::{
    parse, parse_sequent, parse_term_with, parse_with, ParseError, ParseOptions, Signature,
};
pub use print::{print_full, print_pretty};
pub(crate) use subst::fresh_name;

/// An interned-by-sharing identifier. Cloning is a reference-count bump.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Names starting with `_` are produced by the transformer and the
    /// engine; the user-facing parser rejects them.
    pub fn is_reserved(&self) -> bool {
        self.0.starts_with('_')
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Identifier of a search metavariable, unique within one search run.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MetaId(pub u32);

impl fmt::Display for MetaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "?{}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Term {
    /// An object-level variable, bound by some enclosing quantifier.
    Var(Symbol),
    Const(Symbol),
    /// A placeholder for a delayed witness, resolved by unification.
    Meta(MetaId),
    App(Symbol, Vec<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(Symbol::new(name))
    }

    pub fn constant(name: &str) -> Term {
        Term::Const(Symbol::new(name))
    }

    pub fn app(name: &str, args: Vec<Term>) -> Term {
        if args.is_empty() {
            Term::constant(name)
        } else {
            Term::App(Symbol::new(name), args)
        }
    }

    pub fn has_meta(&self) -> bool {
        match self {
            Term::Meta(_) => true,
            Term::App(_, args) => args.iter().any(Term::has_meta),
            _ => false,
        }
    }

    /// True if the term mentions no metavariable and no variable.
    pub fn is_ground(&self) -> bool {
        match self {
            Term::Const(_) => true,
            Term::App(_, args) => args.iter().all(Term::is_ground),
            Term::Var(_) | Term::Meta(_) => false,
        }
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
            Term::Const(_) | Term::Meta(_) => {}
        }
    }

    pub(crate) fn collect_consts(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            Term::Const(c) => {
                out.insert(c.clone());
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_consts(out)),
            Term::Var(_) | Term::Meta(_) => {}
        }
    }

    pub(crate) fn collect_metas(&self, out: &mut BTreeSet<MetaId>) {
        match self {
            Term::Meta(m) => {
                out.insert(*m);
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_metas(out)),
            Term::Var(_) | Term::Const(_) => {}
        }
    }

    pub(crate) fn collect_symbols(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            Term::Var(s) | Term::Const(s) => {
                out.insert(s.clone());
            }
            Term::App(f, args) => {
                out.insert(f.clone());
                args.iter().for_each(|a| a.collect_symbols(out));
            }
            Term::Meta(_) => {}
        }
    }

    pub(crate) fn has_function(&self) -> bool {
        match self {
            Term::App(..) => true,
            _ => false,
        }
    }

    /// Applies `f` to every metavariable, rebuilding the term.
    pub fn map_metas(&self, f: &mut impl FnMut(MetaId) -> Term) -> Term {
        match self {
            Term::Meta(m) => f(*m),
            Term::App(g, args) => Term::App(g.clone(), args.iter().map(|a| a.map_metas(f)).collect()),
            other => other.clone(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Formula {
    Top,
    Bot,
    Atom(Symbol, Vec<Term>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(Symbol, Box<Formula>),
    Forall(Symbol, Box<Formula>),
}

impl Formula {
    pub fn atom(pred: &str, args: Vec<Term>) -> Formula {
        Formula::Atom(Symbol::new(pred), args)
    }

    pub fn prop(name: &str) -> Formula {
        Formula::atom(name, Vec::new())
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// `~a`, i.e. `a => false`.
    pub fn not(a: Formula) -> Formula {
        Formula::implies(a, Formula::Bot)
    }

    pub fn exists(x: &str, body: Formula) -> Formula {
        Formula::Exists(Symbol::new(x), Box::new(body))
    }

    pub fn forall(x: &str, body: Formula) -> Formula {
        Formula::Forall(Symbol::new(x), Box::new(body))
    }

    /// Folds a non-empty list into a right-nested disjunction.
    pub fn disjunction(mut items: Vec<Formula>) -> Formula {
        let mut acc = items.pop().expect("disjunction of an empty list");
        while let Some(f) = items.pop() {
            acc = Formula::or(f, acc);
        }
        acc
    }

    pub fn conjunction(mut items: Vec<Formula>) -> Formula {
        let mut acc = items.pop().unwrap_or(Formula::Top);
        while let Some(f) = items.pop() {
            acc = Formula::and(f, acc);
        }
        acc
    }

    /// Atoms and the two logical constants: the goals handled by the
    /// backchaining rules.
    pub fn is_atomic_or_bot(&self) -> bool {
        matches!(self, Formula::Atom(..) | Formula::Bot)
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(..))
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Top | Formula::Bot | Formula::Atom(..) => true,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::Exists(..) | Formula::Forall(..) => false,
        }
    }

    /// Number of connective and quantifier nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Top | Formula::Bot | Formula::Atom(..) => 1,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => 1 + a.size() + b.size(),
            Formula::Exists(_, b) | Formula::Forall(_, b) => 1 + b.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Top | Formula::Bot | Formula::Atom(..) => 0,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => 1 + a.depth().max(b.depth()),
            Formula::Exists(_, b) | Formula::Forall(_, b) => 1 + b.depth(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        self.collect_free_vars(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free_vars(&self, bound: &mut Vec<Symbol>, out: &mut BTreeSet<Symbol>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Atom(_, args) => {
                let mut vs = BTreeSet::new();
                args.iter().for_each(|a| a.collect_vars(&mut vs));
                out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free_vars(bound, out);
                b.collect_free_vars(bound, out);
            }
            Formula::Exists(x, body) | Formula::Forall(x, body) => {
                bound.push(x.clone());
                body.collect_free_vars(bound, out);
                bound.pop();
            }
        }
    }

    pub fn constants(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        self.for_each_term(&mut |t| t.collect_consts(&mut out));
        out
    }

    pub fn metavars(&self) -> BTreeSet<MetaId> {
        let mut out = BTreeSet::new();
        self.for_each_term(&mut |t| t.collect_metas(&mut out));
        out
    }

    pub fn has_meta(&self) -> bool {
        let mut found = false;
        self.for_each_term(&mut |t| found |= t.has_meta());
        found
    }

    pub fn has_function_symbols(&self) -> bool {
        let mut found = false;
        self.for_each_term(&mut |t| found |= t.has_function());
        found
    }

    /// Every name occurring anywhere: predicates, functions, constants,
    /// free and bound variables.
    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Atom(p, args) => {
                out.insert(p.clone());
                args.iter().for_each(|a| a.collect_symbols(out));
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
            Formula::Exists(x, body) | Formula::Forall(x, body) => {
                out.insert(x.clone());
                body.collect_symbols(out);
            }
        }
    }

    /// Visits every top-level term argument of every atom.
    pub fn for_each_term(&self, f: &mut impl FnMut(&Term)) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Atom(_, args) => args.iter().for_each(|a| f(a)),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.for_each_term(f);
                b.for_each_term(f);
            }
            Formula::Exists(_, body) | Formula::Forall(_, body) => body.for_each_term(f),
        }
    }

    /// Rebuilds the formula with every metavariable replaced by `f(id)`.
    pub fn map_metas(&self, f: &mut impl FnMut(MetaId) -> Term) -> Formula {
        match self {
            Formula::Top => Formula::Top,
            Formula::Bot => Formula::Bot,
            Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(|a| a.map_metas(f)).collect()),
            Formula::And(a, b) => Formula::and(a.map_metas(f), b.map_metas(f)),
            Formula::Or(a, b) => Formula::or(a.map_metas(f), b.map_metas(f)),
            Formula::Implies(a, b) => Formula::implies(a.map_metas(f), b.map_metas(f)),
            Formula::Exists(x, body) => Formula::Exists(x.clone(), Box::new(body.map_metas(f))),
            Formula::Forall(x, body) => Formula::Forall(x.clone(), Box::new(body.map_metas(f))),
        }
    }

    /// Leaves of the top-level disjunction tree, left to right.
    pub fn disjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        fn go<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
            match f {
                Formula::Or(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                other => out.push(other),
            }
        }
        go(self, &mut out);
        out
    }

    /// Immediate subformulas in left-to-right order.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Top | Formula::Bot | Formula::Atom(..) => Vec::new(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => vec![a, b],
            Formula::Exists(_, body) | Formula::Forall(_, body) => vec![body],
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            f.write_str(&print_pretty(self))
        } else {
            f.write_str(&print_full(self))
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) | Term::Const(x) => write!(f, "{x}"),
            Term::Meta(m) => write!(f, "{m}"),
            Term::App(g, args) => {
                write!(f, "{g}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Sign of a subformula occurrence relative to the formula root.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polarity::Positive => f.write_str("positive"),
            Polarity::Negative => f.write_str("negative"),
        }
    }
}
