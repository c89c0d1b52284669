//! Rewriting reduced proofs into ordinary sequent proofs.
//!
//! A clause step becomes `all-L` steps for the recorded instance (the
//! intermediate instances stay in the antecedent), `imp-L` when the clause
//! has a body, and a split of the head disjunction down to the head that
//! closes the goal. Formula positions below the currently worked-on one
//! never move, so a reduced antecedent index maps to a fixed expanded
//! position for the whole subtree.

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::formula::Formula;
use crate::kernel::{ProofTree, RuleName, Sequent};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// `or-L-G`: only the branch holding the closing head keeps the goal,
    /// the others prove the top-level goal.
    GoalRelative,
    /// Plain `or-L`: every branch proves the current goal.
    Plain,
}

#[derive(Clone)]
enum Leaf<'a> {
    Target,
    /// A remainder proof over the reduced context of its clause step plus
    /// the leaf itself, appended last.
    Remainder { proof: &'a ProofTree, map: Rc<Vec<usize>>, lifts: Lifts<'a> },
}

/// A compound disjunction standing in for its first leaf. A later use of
/// that leaf splits the disjunction and reuses the stored proofs for the
/// others.
struct Lift<'a> {
    formula: Formula,
    leaves: Vec<Leaf<'a>>,
}

type Lifts<'a> = Rc<BTreeMap<usize, Rc<Lift<'a>>>>;

struct Expander {
    mode: Mode,
}

/// Expands a reduced proof of `goal` into a proof using `or-L-G` and
/// `res-G` for the same goal.
///
/// # Panics
///
/// If `proof` is not a reduced proof, i.e. does not pass the checker.
pub fn expand_to_og(proof: &ProofTree, goal: &Formula) -> ProofTree {
    debug_assert_eq!(proof.conclusion.succedent.first(), Some(goal));
    Expander { mode: Mode::GoalRelative }.root(proof)
}

/// Expands a proof found with remainders aimed at the current goal and no
/// restarts into a uniform proof.
///
/// # Panics
///
/// If `proof` contains a restart or a rule outside the reduced system.
pub fn expand_to_uniform(proof: &ProofTree) -> ProofTree {
    Expander { mode: Mode::Plain }.root(proof)
}

fn seq(ante: &[Formula], goal: &Formula) -> Sequent {
    Sequent::single(ante.to_vec(), goal.clone())
}

fn appended(ante: &[Formula], f: &Formula) -> Vec<Formula> {
    let mut out = ante.to_vec();
    out.push(f.clone());
    out
}

fn replaced_last(ante: &[Formula], f: &Formula) -> Vec<Formula> {
    let mut out = ante.to_vec();
    *out.last_mut().expect("non-empty antecedent") = f.clone();
    out
}

impl Expander {
    fn root(&self, proof: &ProofTree) -> ProofTree {
        let ante = proof.conclusion.antecedent.clone();
        let map = Rc::new((0..ante.len()).collect());
        self.expand(proof, ante, map, &Lifts::default())
    }

    fn expand<'a>(&self, node: &'a ProofTree, ante: Vec<Formula>, map: Rc<Vec<usize>>, lifts: &Lifts<'a>) -> ProofTree {
        let goal = node.conclusion.succedent[0].clone();
        let same = |i: usize| self.expand(&node.premises[i], ante.clone(), map.clone(), lifts);
        match node.rule {
            RuleName::Axiom => ProofTree::axiom(seq(&ante, &goal)),
            RuleName::AndR => {
                let premises = vec![same(0), same(1)];
                ProofTree::new(seq(&ante, &goal), RuleName::AndR, premises).with_principal(0)
            }
            RuleName::OrRLeft | RuleName::OrRRight => {
                ProofTree::new(seq(&ante, &goal), node.rule, vec![same(0)]).with_principal(0)
            }
            RuleName::ExR => {
                let w = node.witness.clone().expect("ex-R records its witness");
                ProofTree::new(seq(&ante, &goal), RuleName::ExR, vec![same(0)]).with_principal(0).with_witness(w)
            }
            RuleName::Restart => {
                assert!(self.mode == Mode::GoalRelative, "restart in a proof expanded without a goal");
                ProofTree::new(seq(&ante, &goal), RuleName::ResG, vec![same(0)])
            }
            RuleName::ImpR => {
                let Formula::Implies(d, _) = &goal else { panic!("imp-R on {goal}") };
                let mut inner = map.as_ref().clone();
                inner.push(ante.len());
                let premise = self.expand(&node.premises[0], appended(&ante, d), Rc::new(inner), lifts);
                ProofTree::new(seq(&ante, &goal), RuleName::ImpR, vec![premise]).with_principal(0)
            }
            RuleName::Atomic | RuleName::Backchain => self.clause_step(node, ante, map, lifts),
            other => panic!("{other} is not a rule of the reduced system"),
        }
    }

    fn clause_step<'a>(&self, node: &'a ProofTree, ante: Vec<Formula>, map: Rc<Vec<usize>>, lifts: &Lifts<'a>) -> ProofTree {
        let goal = node.conclusion.succedent[0].clone();
        let pos = map[node.principal.expect("clause steps record their clause")];
        let inst = node.instance.as_ref().expect("clause steps record their instance");

        if let Some(lift) = lifts.get(&pos) {
            let mut leaves = lift.leaves.clone();
            leaves[0] = Leaf::Target;
            let copy = appended(&ante, &lift.formula);
            let inner = self.split(copy, &lift.formula, &leaves, &goal);
            return ProofTree::new(seq(&ante, &goal), RuleName::ContrL, vec![inner]).with_principal(pos);
        }

        // Linear prefix of single-premise steps, outermost first.
        let mut chain: Vec<ProofTree> = Vec::new();
        let mut cur_ante = ante;
        let mut cur_pos = pos;
        let mut matrix = cur_ante[pos].clone();
        for t in &inst.terms {
            let Formula::Forall(x, body) = &matrix else { panic!("clause {matrix} has too few universals") };
            let next = body.substitute(x, t);
            chain.push(ProofTree::new(seq(&cur_ante, &goal), RuleName::AllL, vec![]).with_principal(cur_pos).with_witness(t.clone()));
            cur_ante.push(next.clone());
            cur_pos = cur_ante.len() - 1;
            matrix = next;
        }
        let (body, heads_formula) = match &matrix {
            Formula::Implies(b, h) => (Some((**b).clone()), (**h).clone()),
            other => (None, other.clone()),
        };
        let n_heads = heads_formula.disjuncts().len();
        let leaves: Vec<Leaf<'a>> = {
            let offset = usize::from(body.is_some());
            let mut k = offset;
            (0..n_heads)
                .map(|j| {
                    if j == inst.head {
                        Leaf::Target
                    } else {
                        k += 1;
                        Leaf::Remainder { proof: &node.premises[k - 1], map: map.clone(), lifts: lifts.clone() }
                    }
                })
                .collect()
        };

        let inner = if inst.terms.is_empty() && body.is_none() && n_heads == 1 {
            close(&cur_ante, &goal)
        } else {
            if inst.terms.is_empty() {
                chain.push(ProofTree::new(seq(&cur_ante, &goal), RuleName::ContrL, vec![]).with_principal(cur_pos));
                cur_ante.push(matrix.clone());
            }
            let end = cur_ante.len() - 1;
            match body {
                Some(_) => {
                    let left = self.expand(&node.premises[0], cur_ante.clone(), map.clone(), lifts);
                    let right_ante = replaced_last(&cur_ante, &heads_formula);
                    let right = self.split(right_ante, &heads_formula, &leaves, &goal);
                    ProofTree::new(seq(&cur_ante, &goal), RuleName::ImpL, vec![left, right]).with_principal(end)
                }
                None => self.split(cur_ante, &heads_formula, &leaves, &goal),
            }
        };
        chain.into_iter().rev().fold(inner, |acc, mut step| {
            step.premises = vec![acc];
            step
        })
    }

    /// Proves `ante --> goal` where `tree`, the last antecedent formula, is a
    /// disjunction whose leaves are described by `leaves`.
    fn split<'a>(&self, ante: Vec<Formula>, tree: &Formula, leaves: &[Leaf<'a>], goal: &Formula) -> ProofTree {
        let Formula::Or(l, r) = tree else {
            return match &leaves[0] {
                Leaf::Target => close(&ante, goal),
                Leaf::Remainder { .. } => self.remainder(ante, tree, leaves),
            };
        };
        let (ll, rl) = leaves.split_at(l.disjuncts().len());
        let end = ante.len() - 1;
        let left = replaced_last(&ante, l);
        let right = replaced_last(&ante, r);
        match self.mode {
            Mode::Plain => {
                let premises = vec![self.split(left, l, ll, goal), self.split(right, r, rl, goal)];
                ProofTree::new(seq(&ante, goal), RuleName::OrL, premises).with_principal(end)
            }
            Mode::GoalRelative => {
                let premises = if ll.iter().any(|x| matches!(x, Leaf::Target)) {
                    vec![self.split(left, l, ll, goal), self.remainder(right, r, rl)]
                } else {
                    vec![self.split(right, r, rl, goal), self.remainder(left, l, ll)]
                };
                ProofTree::new(seq(&ante, goal), RuleName::OrLG, premises).with_principal(end)
            }
        }
    }

    /// Proves the remainder sequent whose last antecedent formula is `tree`,
    /// using the proof stored for its first leaf. A compound `tree` is
    /// recorded as standing in for that leaf.
    fn remainder<'a>(&self, ante: Vec<Formula>, tree: &Formula, leaves: &[Leaf<'a>]) -> ProofTree {
        let Leaf::Remainder { proof, map, lifts } = &leaves[0] else { panic!("remainder branch holds the closing head") };
        let end = ante.len() - 1;
        let mut inner = map.as_ref().clone();
        inner.push(end);
        let lifts = if matches!(tree, Formula::Or(..)) {
            let mut l = lifts.as_ref().clone();
            l.insert(end, Rc::new(Lift { formula: tree.clone(), leaves: leaves.to_vec() }));
            Rc::new(l)
        } else {
            lifts.clone()
        };
        self.expand(proof, ante, Rc::new(inner), &lifts)
    }
}

/// `ante --> goal` where the antecedent holds `goal` or `false`.
fn close(ante: &[Formula], goal: &Formula) -> ProofTree {
    if ante.contains(goal) {
        ProofTree::axiom(seq(ante, goal))
    } else {
        ProofTree::new(seq(ante, goal), RuleName::BotR, vec![ProofTree::axiom(seq(ante, &Formula::Bot))]).with_principal(0)
    }
}
