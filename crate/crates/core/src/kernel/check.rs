use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::formula::{Formula, Symbol, Term};

use super::{is_axiom, same_multiset, ProofTree, RuleName, Sequent};

/// Which calculus a tree is checked against. The goal-relative
/// disciplines carry the top-level goal their derived rules refer to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Discipline {
    /// Unrestricted classical proofs.
    C,
    /// Exactly one formula in every succedent.
    I,
    /// `I` plus immediate introduction of every compound succedent.
    Uniform,
    /// `I` with `or-L` replaced by the goal-relative `or-L-G` and `res-G`.
    IG(Formula),
    /// `IG` plus the uniformity condition.
    OG(Formula),
    /// The goal-directed system with `restart`, `atomic` and `backchain`.
    Reduced(Formula),
}

impl Discipline {
    fn goal(&self) -> Option<&Formula> {
        match self {
            Discipline::IG(g) | Discipline::OG(g) | Discipline::Reduced(g) => Some(g),
            _ => None,
        }
    }

    fn single_succedent(&self) -> bool {
        !matches!(self, Discipline::C)
    }

    fn uniform(&self) -> bool {
        matches!(self, Discipline::Uniform | Discipline::OG(_))
    }

    fn allows(&self, rule: RuleName) -> bool {
        use RuleName::*;
        let sequent_rules = [
            Axiom, ContrL, ContrR, BotR, AndL, AndR, OrL, OrRLeft, OrRRight, ImpL, ImpR, AllL, AllR, ExL, ExR,
        ];
        match self {
            Discipline::C | Discipline::I | Discipline::Uniform => sequent_rules.contains(&rule),
            Discipline::IG(_) | Discipline::OG(_) => {
                (sequent_rules.contains(&rule) && rule != OrL) || rule == OrLG || rule == ResG
            }
            Discipline::Reduced(_) => {
                [Axiom, Restart, Atomic, Backchain, OrRLeft, OrRRight, AndR, ImpR, ExR].contains(&rule)
            }
        }
    }
}

impl fmt::Display for Discipline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discipline::C => f.write_str("c"),
            Discipline::I => f.write_str("i"),
            Discipline::Uniform => f.write_str("uniform"),
            Discipline::IG(g) => write!(f, "ig({g})"),
            Discipline::OG(g) => write!(f, "og({g})"),
            Discipline::Reduced(g) => write!(f, "reduced({g})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Child indices from the root; empty for the root itself.
    pub path: Vec<usize>,
    pub rule: RuleName,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.path.iter().map(|i| i.to_string()).collect();
        write!(f, "at /{} [{}]: {}", path.join("/"), self.rule, self.reason)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn reasons(&self) -> Vec<String> {
        self.violations.iter().map(|v| v.to_string()).collect()
    }
}

/// Checks every node of `tree` against `discipline` and collects all
/// violations. Malformed nodes are reported, never panicked on.
pub fn check(tree: &ProofTree, discipline: &Discipline) -> CheckReport {
    let mut violations = Vec::new();
    let goal_symbols = discipline.goal().map(|g| g.symbols()).unwrap_or_default();
    walk(tree, discipline, &goal_symbols, &mut Vec::new(), &mut violations);
    CheckReport { ok: violations.is_empty(), violations }
}

fn walk(
    node: &ProofTree,
    disc: &Discipline,
    goal_symbols: &BTreeSet<Symbol>,
    path: &mut Vec<usize>,
    out: &mut Vec<Violation>,
) {
    let mut report = |reason: String| out.push(Violation { path: path.clone(), rule: node.rule, reason });
    if node.rule == RuleName::Cut {
        report("cut is not a checkable rule; only its admissibility may be assumed".into());
    } else if !disc.allows(node.rule) {
        report(format!("rule {} is not part of discipline {}", node.rule, discipline_name(disc)));
    } else {
        if disc.single_succedent() && node.conclusion.succedent.len() != 1 {
            report(format!("{} formulas in succedent", count_word(node.conclusion.succedent.len())));
        }
        if disc.uniform() {
            if let Some(reason) = uniformity(node) {
                report(reason);
            }
        }
        if let Err(reason) = schema(node, disc, goal_symbols) {
            report(reason);
        }
    }
    for (i, p) in node.premises.iter().enumerate() {
        path.push(i);
        walk(p, disc, goal_symbols, path, out);
        path.pop();
    }
}

fn discipline_name(d: &Discipline) -> &'static str {
    match d {
        Discipline::C => "c",
        Discipline::I => "i",
        Discipline::Uniform => "uniform",
        Discipline::IG(_) => "ig",
        Discipline::OG(_) => "og",
        Discipline::Reduced(_) => "reduced",
    }
}

fn count_word(n: usize) -> String {
    match n {
        0 => "no".into(),
        2 => "two".into(),
        3 => "three".into(),
        n => n.to_string(),
    }
}

/// A compound succedent formula must be the one the rule introduces.
/// `false` counts as atomic here: nothing introduces it on the right.
fn uniformity(node: &ProofTree) -> Option<String> {
    let [f] = node.conclusion.succedent.as_slice() else {
        return None;
    };
    let expected: &[RuleName] = match f {
        Formula::Atom(..) | Formula::Bot => return None,
        Formula::Top => &[RuleName::Axiom],
        Formula::And(..) => &[RuleName::AndR],
        Formula::Or(..) => &[RuleName::OrRLeft, RuleName::OrRRight],
        Formula::Implies(..) => &[RuleName::ImpR],
        Formula::Exists(..) => &[RuleName::ExR],
        Formula::Forall(..) => &[RuleName::AllR],
    };
    if expected.contains(&node.rule) {
        None
    } else {
        Some(format!("succedent non-atomic, rule is {}", node.rule))
    }
}

type Check = Result<(), String>;

fn principal<'a>(fs: &'a [Formula], index: Option<usize>, side: &str) -> Result<&'a Formula, String> {
    let i = index.ok_or_else(|| format!("missing principal {side} occurrence"))?;
    fs.get(i).ok_or_else(|| format!("principal index {i} out of range for the {side} of size {}", fs.len()))
}

fn without(fs: &[Formula], index: usize) -> Vec<Formula> {
    let mut out = fs.to_vec();
    out.remove(index);
    out
}

fn with(fs: &[Formula], extra: &[Formula]) -> Vec<Formula> {
    let mut out = fs.to_vec();
    out.extend_from_slice(extra);
    out
}

fn remove_one(fs: &[Formula], f: &Formula) -> Option<Vec<Formula>> {
    let i = fs.iter().position(|x| x == f)?;
    Some(without(fs, i))
}

fn arity(node: &ProofTree, n: usize) -> Check {
    if node.premises.len() == n {
        Ok(())
    } else {
        Err(format!("expected {n} premise(s), found {}", node.premises.len()))
    }
}

fn expect_premise(node: &ProofTree, i: usize, want: Sequent) -> Check {
    let got = &node.premises[i].conclusion;
    if got.same_as(&want) {
        Ok(())
    } else {
        Err(format!("premise {i} should be `{want}`, found `{got}`"))
    }
}

fn eigen_fresh(node: &ProofTree, goal_symbols: &BTreeSet<Symbol>) -> Result<Symbol, String> {
    let c = node.eigen.clone().ok_or("missing eigen constant")?;
    let s = &node.conclusion;
    if s.antecedent.iter().chain(&s.succedent).any(|f| f.symbols().contains(&c)) {
        return Err(format!("eigen constant {c} occurs in the lower sequent"));
    }
    if goal_symbols.contains(&c) {
        return Err(format!("eigen constant {c} occurs in the goal"));
    }
    Ok(c)
}

fn schema(node: &ProofTree, disc: &Discipline, goal_symbols: &BTreeSet<Symbol>) -> Check {
    use RuleName::*;
    let s = &node.conclusion;
    let (gamma, delta) = (&s.antecedent, &s.succedent);
    match node.rule {
        Axiom => {
            arity(node, 0)?;
            if matches!(disc, Discipline::Reduced(_)) && !delta.contains(&Formula::Top) {
                return Err("the reduced system has only axioms with `true` in the succedent".into());
            }
            if is_axiom(s) {
                Ok(())
            } else {
                Err("not an axiom".into())
            }
        }
        ContrL => {
            arity(node, 1)?;
            let b = principal(gamma, node.principal, "antecedent")?;
            expect_premise(node, 0, Sequent::new(with(gamma, &[b.clone()]), delta.clone()))
        }
        ContrR => {
            arity(node, 1)?;
            let b = principal(delta, node.principal, "succedent")?;
            expect_premise(node, 0, Sequent::new(gamma.clone(), with(delta, &[b.clone()])))
        }
        BotR => {
            arity(node, 1)?;
            let i = node.principal.ok_or("missing principal succedent occurrence")?;
            principal(delta, Some(i), "succedent")?;
            expect_premise(node, 0, Sequent::new(gamma.clone(), with(&without(delta, i), &[Formula::Bot])))
        }
        AndL => {
            arity(node, 1)?;
            let i = node.principal.unwrap_or(usize::MAX);
            let Formula::And(b, d) = principal(gamma, node.principal, "antecedent")? else {
                return Err("principal formula is not a conjunction".into());
            };
            let parts = [(**b).clone(), (**d).clone()];
            let absorbing = Sequent::new(with(gamma, &parts), delta.clone());
            if matches!(disc, Discipline::C) && !node.premises[0].conclusion.same_as(&absorbing) {
                return expect_premise(node, 0, Sequent::new(with(&without(gamma, i), &parts), delta.clone()));
            }
            expect_premise(node, 0, absorbing)
        }
        AndR => {
            arity(node, 2)?;
            let i = node.principal.unwrap_or(usize::MAX);
            let Formula::And(b, d) = principal(delta, node.principal, "succedent")? else {
                return Err("principal formula is not a conjunction".into());
            };
            let rest = without(delta, i);
            expect_premise(node, 0, Sequent::new(gamma.clone(), with(&rest, &[(**b).clone()])))?;
            expect_premise(node, 1, Sequent::new(gamma.clone(), with(&rest, &[(**d).clone()])))
        }
        OrL => {
            arity(node, 2)?;
            let i = node.principal.unwrap_or(usize::MAX);
            let Formula::Or(b, d) = principal(gamma, node.principal, "antecedent")? else {
                return Err("principal formula is not a disjunction".into());
            };
            let rest = without(gamma, i);
            expect_premise(node, 0, Sequent::new(with(&rest, &[(**b).clone()]), delta.clone()))?;
            expect_premise(node, 1, Sequent::new(with(&rest, &[(**d).clone()]), delta.clone()))
        }
        OrRLeft | OrRRight => {
            arity(node, 1)?;
            let i = node.principal.unwrap_or(usize::MAX);
            let Formula::Or(b, d) = principal(delta, node.principal, "succedent")? else {
                return Err("principal formula is not a disjunction".into());
            };
            let chosen = if node.rule == OrRLeft { b } else { d };
            expect_premise(node, 0, Sequent::new(gamma.clone(), with(&without(delta, i), &[(**chosen).clone()])))
        }
        ImpL => {
            arity(node, 2)?;
            let i = node.principal.unwrap_or(usize::MAX);
            let Formula::Implies(b, d) = principal(gamma, node.principal, "antecedent")? else {
                return Err("principal formula is not an implication".into());
            };
            let left = &node.premises[0].conclusion;
            let right = &node.premises[1].conclusion;
            if !same_multiset(&left.antecedent, gamma) {
                return Err(format!("left premise must keep the antecedent of the conclusion, found `{left}`"));
            }
            let Some(left_rest) = remove_one(&left.succedent, b) else {
                return Err(format!("left premise must have {b} in its succedent"));
            };
            if !same_multiset(&right.antecedent, &with(&without(gamma, i), &[(**d).clone()])) {
                return Err(format!("right premise antecedent must replace the implication by {d}, found `{right}`"));
            }
            if !same_multiset(&with(&left_rest, &right.succedent), delta) {
                return Err("premise succedents do not combine to the conclusion succedent".into());
            }
            Ok(())
        }
        ImpR => {
            arity(node, 1)?;
            let i = node.principal.unwrap_or(usize::MAX);
            let Formula::Implies(b, d) = principal(delta, node.principal, "succedent")? else {
                return Err("principal formula is not an implication".into());
            };
            expect_premise(
                node,
                0,
                Sequent::new(with(gamma, &[(**b).clone()]), with(&without(delta, i), &[(**d).clone()])),
            )
        }
        AllL => {
            arity(node, 1)?;
            let i = node.principal.unwrap_or(usize::MAX);
            let Formula::Forall(x, b) = principal(gamma, node.principal, "antecedent")? else {
                return Err("principal formula is not a universal".into());
            };
            let t = node.witness.as_ref().ok_or("missing witness term")?;
            let inst = b.substitute(x, t);
            let absorbing = Sequent::new(with(gamma, &[inst.clone()]), delta.clone());
            if matches!(disc, Discipline::C) && !node.premises[0].conclusion.same_as(&absorbing) {
                return expect_premise(node, 0, Sequent::new(with(&without(gamma, i), &[inst]), delta.clone()));
            }
            expect_premise(node, 0, absorbing)
        }
        ExR => {
            arity(node, 1)?;
            let i = node.principal.unwrap_or(usize::MAX);
            let Formula::Exists(x, b) = principal(delta, node.principal, "succedent")? else {
                return Err("principal formula is not an existential".into());
            };
            let t = node.witness.as_ref().ok_or("missing witness term")?;
            expect_premise(node, 0, Sequent::new(gamma.clone(), with(&without(delta, i), &[b.substitute(x, t)])))
        }
        ExL => {
            arity(node, 1)?;
            let i = node.principal.unwrap_or(usize::MAX);
            let Formula::Exists(x, b) = principal(gamma, node.principal, "antecedent")? else {
                return Err("principal formula is not an existential".into());
            };
            let c = eigen_fresh(node, goal_symbols)?;
            let inst = b.substitute(x, &Term::Const(c));
            expect_premise(node, 0, Sequent::new(with(&without(gamma, i), &[inst]), delta.clone()))
        }
        AllR => {
            arity(node, 1)?;
            let i = node.principal.unwrap_or(usize::MAX);
            let Formula::Forall(x, b) = principal(delta, node.principal, "succedent")? else {
                return Err("principal formula is not a universal".into());
            };
            let c = eigen_fresh(node, goal_symbols)?;
            let inst = b.substitute(x, &Term::Const(c));
            expect_premise(node, 0, Sequent::new(gamma.clone(), with(&without(delta, i), &[inst])))
        }
        OrLG => {
            arity(node, 2)?;
            let goal = disc.goal().expect("goal-relative discipline");
            let i = node.principal.unwrap_or(usize::MAX);
            let Formula::Or(b, d) = principal(gamma, node.principal, "antecedent")? else {
                return Err("principal formula is not a disjunction".into());
            };
            let rest = without(gamma, i);
            let branch = |keep: &Formula, other: &Formula| {
                node.premises[0].conclusion.same_as(&Sequent::new(with(&rest, &[keep.clone()]), delta.clone()))
                    && node.premises[1].conclusion.same_as(&Sequent::single(with(&rest, &[other.clone()]), goal.clone()))
            };
            if branch(b, d) || branch(d, b) {
                Ok(())
            } else {
                Err(format!(
                    "premises should be `{}` and `{}` (or with the disjuncts swapped)",
                    Sequent::new(with(&rest, &[(**b).clone()]), delta.clone()),
                    Sequent::single(with(&rest, &[(**d).clone()]), goal.clone())
                ))
            }
        }
        ResG | Restart => {
            arity(node, 1)?;
            let goal = disc.goal().expect("goal-relative discipline");
            if node.rule == Restart && !matches!(delta.as_slice(), [c] if c.is_atomic_or_bot()) {
                return Err("restart needs an atomic or `false` succedent".into());
            }
            expect_premise(node, 0, Sequent::single(gamma.clone(), goal.clone()))
        }
        Atomic | Backchain => clause_step(node, disc.goal().expect("goal-relative discipline")),
        Cut => Err("cut is not a checkable rule".into()),
    }
}

fn clause_step(node: &ProofTree, goal: &Formula) -> Check {
    let s = &node.conclusion;
    let [c] = s.succedent.as_slice() else {
        return Err("clause steps need a single succedent".into());
    };
    if !c.is_atomic_or_bot() {
        return Err(format!("clause steps apply to an atomic or `false` goal, found {c}"));
    }
    let clause = principal(&s.antecedent, node.principal, "antecedent")?;
    let inst = node.instance.as_ref().ok_or("missing clause instance")?;
    if inst.terms.iter().any(|t| !t.is_ground()) {
        return Err("clause instance terms must be ground".into());
    }
    let mut matrix = clause.clone();
    for t in &inst.terms {
        let Formula::Forall(x, body) = matrix else {
            return Err(format!("clause {clause} has fewer universals than recorded terms"));
        };
        matrix = body.substitute(&x, t);
    }
    if matches!(matrix, Formula::Forall(..)) {
        return Err(format!("clause {clause} has more universals than recorded terms"));
    }
    let (body, heads) = match &matrix {
        Formula::Implies(g, h) => (Some((**g).clone()), h.disjuncts()),
        other => (None, other.disjuncts()),
    };
    if heads.iter().any(|h| !h.is_atomic_or_bot() && **h != Formula::Top) {
        return Err(format!("clause {clause} is not in reduced form"));
    }
    match (&body, node.rule) {
        (None, RuleName::Backchain) => return Err("backchain needs a clause with a body".into()),
        (Some(_), RuleName::Atomic) => return Err("atomic needs a clause without a body".into()),
        _ => {}
    }
    let chosen = heads.get(inst.head).ok_or_else(|| format!("head index {} out of range", inst.head))?;
    if *chosen != c && **chosen != Formula::Bot {
        return Err(format!("head {chosen} matches neither the goal {c} nor `false`"));
    }
    let remainder: Vec<&Formula> = heads.iter().enumerate().filter(|(j, _)| *j != inst.head).map(|(_, h)| *h).collect();
    let offset = usize::from(body.is_some());
    arity(node, offset + remainder.len())?;
    if let Some(g) = body {
        expect_premise(node, 0, Sequent::single(s.antecedent.clone(), g))?;
    }
    for (j, a) in remainder.iter().enumerate() {
        expect_premise(node, offset + j, Sequent::single(with(&s.antecedent, &[(*a).clone()]), goal.clone()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn seq(ante: &[&str], succ: &[&str]) -> Sequent {
        Sequent::new(ante.iter().map(|s| f(s)).collect(), succ.iter().map(|s| f(s)).collect())
    }

    fn ok(t: &ProofTree, d: &Discipline) -> bool {
        let r = check(t, d);
        assert_eq!(r.ok, r.violations.is_empty());
        r.ok
    }

    #[test]
    fn cut_is_rejected_with_its_own_message() {
        let t = ProofTree::new(seq(&["p"], &["p"]), RuleName::Cut, vec![]);
        let r = check(&t, &Discipline::C);
        assert!(r.violations[0].reason.contains("cut is not a checkable rule"));
    }

    #[test]
    fn arity_mismatch_is_a_violation() {
        let t = ProofTree::new(seq(&[], &["p /\\ q"]), RuleName::AndR, vec![]).with_principal(0);
        let r = check(&t, &Discipline::C);
        assert!(!r.ok);
        assert!(r.violations[0].reason.contains("expected 2 premise"));
    }

    #[test]
    fn plain_all_left_only_under_c() {
        let t = ProofTree::new(
            seq(&["forall x. p(x)"], &["p(a)"]),
            RuleName::AllL,
            vec![ProofTree::axiom(seq(&["p(a)"], &["p(a)"]))],
        )
        .with_principal(0)
        .with_witness(Term::constant("a"));
        assert!(ok(&t, &Discipline::C));
        assert!(!ok(&t, &Discipline::I));
        let absorbing = ProofTree::new(
            seq(&["forall x. p(x)"], &["p(a)"]),
            RuleName::AllL,
            vec![ProofTree::axiom(seq(&["p(a)", "forall x. p(x)"], &["p(a)"]))],
        )
        .with_principal(0)
        .with_witness(Term::constant("a"));
        assert!(ok(&absorbing, &Discipline::I));
        assert!(ok(&absorbing, &Discipline::Uniform));
    }

    #[test]
    fn eigen_proviso() {
        let good = ProofTree::new(
            seq(&["forall x. p(x)"], &["forall y. p(y)"]),
            RuleName::AllR,
            vec![ProofTree::new(
                seq(&["forall x. p(x)"], &["p(c)"]),
                RuleName::AllL,
                vec![ProofTree::axiom(seq(&["p(c)", "forall x. p(x)"], &["p(c)"]))],
            )
            .with_principal(0)
            .with_witness(Term::constant("c"))],
        )
        .with_principal(0)
        .with_eigen("c");
        assert!(ok(&good, &Discipline::Uniform));
        // The strengthened proviso also excludes constants of the goal.
        assert!(!ok(&good, &Discipline::IG(f("q(c)"))));
        let mut bad = good.clone();
        bad.conclusion = seq(&["forall x. p(x)", "r(c)"], &["forall y. p(y)"]);
        let r = check(&bad, &Discipline::C);
        assert!(r.violations.iter().any(|v| v.reason.contains("occurs in the lower sequent")));
    }

    #[test]
    fn imp_left_splits_the_succedent() {
        // p => q, p --> q
        let t = ProofTree::new(
            seq(&["p => q", "p"], &["q"]),
            RuleName::ImpL,
            vec![
                ProofTree::axiom(seq(&["p => q", "p"], &["p"])),
                ProofTree::axiom(seq(&["q", "p"], &["q"])),
            ],
        )
        .with_principal(0);
        assert!(ok(&t, &Discipline::Uniform));
    }

    #[test]
    fn bot_right_weakens_to_any_formula() {
        let t = ProofTree::new(
            seq(&["false"], &["p"]),
            RuleName::BotR,
            vec![ProofTree::axiom(seq(&["false"], &["false"]))],
        )
        .with_principal(0);
        assert!(ok(&t, &Discipline::Uniform));
    }

    #[test]
    fn reduced_atomic_with_remainder() {
        // p \/ q --> p by atomic on head 0 leaves nothing; on goal r it
        // would need remainders.
        let goal = f("r");
        let clauses = vec![f("p \\/ q"), f("q => r"), f("p => r")];
        let restart_q = ProofTree::new(
            Sequent::single(vec![f("q"), f("p \\/ q"), f("q => r"), f("p => r")], goal.clone()),
            RuleName::Backchain,
            vec![ProofTree::new(
                Sequent::single(vec![f("q"), f("p \\/ q"), f("q => r"), f("p => r")], f("q")),
                RuleName::Atomic,
                vec![],
            )
            .with_principal(0)
            .with_instance(vec![], 0)],
        )
        .with_principal(2)
        .with_instance(vec![], 0);
        let t = ProofTree::new(
            Sequent::single(clauses.clone(), goal.clone()),
            RuleName::Backchain,
            vec![ProofTree::new(
                Sequent::single(clauses.clone(), f("p")),
                RuleName::Atomic,
                vec![restart_q],
            )
            .with_principal(0)
            .with_instance(vec![], 0)],
        )
        .with_principal(2)
        .with_instance(vec![], 0);
        assert!(ok(&t, &Discipline::Reduced(goal.clone())), "{:?}", check(&t, &Discipline::Reduced(goal.clone())));
        assert!(!ok(&t, &Discipline::C));
    }

    #[test]
    fn reduced_instance_must_strip_all_universals() {
        let goal = f("p(a)");
        let t = ProofTree::new(Sequent::single(vec![f("forall x. p(x)")], goal.clone()), RuleName::Atomic, vec![])
            .with_principal(0)
            .with_instance(vec![Term::constant("a")], 0);
        assert!(ok(&t, &Discipline::Reduced(goal.clone())));
        let mut wrong = t.clone();
        wrong.instance.as_mut().unwrap().terms = vec![Term::constant("b")];
        assert!(!ok(&wrong, &Discipline::Reduced(goal.clone())));
        let mut short = t;
        short.instance.as_mut().unwrap().terms.clear();
        assert!(!ok(&short, &Discipline::Reduced(goal)));
    }

    #[test]
    fn reduced_axioms_only_for_true() {
        let goal = f("p");
        let t = ProofTree::axiom(seq(&["p"], &["p"]));
        assert!(!ok(&t, &Discipline::Reduced(goal.clone())));
        assert!(ok(&ProofTree::axiom(Sequent::single(vec![], Formula::Top)), &Discipline::Reduced(goal)));
    }

    #[test]
    fn or_left_g_either_orientation() {
        let goal = f("exists x. p(x)");
        let branch_f = ProofTree::axiom(seq(&["p(b)"], &["p(b)"]));
        let branch_g = ProofTree::new(seq(&["p(a)"], &["exists x. p(x)"]), RuleName::ExR, vec![ProofTree::axiom(seq(&["p(a)"], &["p(a)"]))])
            .with_principal(0)
            .with_witness(Term::constant("a"));
        let t = ProofTree::new(seq(&["p(a) \\/ p(b)"], &["p(b)"]), RuleName::OrLG, vec![branch_f, branch_g]).with_principal(0);
        assert!(ok(&t, &Discipline::OG(goal.clone())));
        assert!(!ok(&t, &Discipline::I));
    }

    #[test]
    fn uniformity_rejects_left_rule_on_compound_goal() {
        let t = ProofTree::new(
            seq(&["p /\\ q"], &["p /\\ q"]),
            RuleName::AndL,
            vec![ProofTree::new(
                seq(&["p", "q", "p /\\ q"], &["p /\\ q"]),
                RuleName::AndR,
                vec![ProofTree::axiom(seq(&["p", "q", "p /\\ q"], &["p"])), ProofTree::axiom(seq(&["p", "q", "p /\\ q"], &["q"]))],
            )
            .with_principal(0)],
        )
        .with_principal(0);
        assert!(ok(&t, &Discipline::I));
        let r = check(&t, &Discipline::Uniform);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].reason, "succedent non-atomic, rule is and-L");
        assert!(r.violations[0].path.is_empty());
    }
}
