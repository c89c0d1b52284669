//! Seeded random problems for differential testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formula::Formula;

use super::Problem;

const ATOMS: [&str; 4] = ["p", "q", "r", "s"];

pub struct Generator {
    rng: ChaCha8Rng,
    made: usize,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed), made: 0 }
    }

    fn atom(&mut self, n: usize) -> Formula {
        Formula::prop(ATOMS[self.rng.gen_range(0..n)])
    }

    fn label(&mut self, kind: &str) -> String {
        self.made += 1;
        format!("{kind} #{}", self.made)
    }

    /// A goal of the reduced syntax with connective depth at most `depth`.
    fn reduced_goal(&mut self, n: usize, depth: usize) -> Formula {
        if depth == 0 || self.rng.gen_bool(0.3) {
            return match self.rng.gen_range(0..10) {
                0 => Formula::Top,
                1 => Formula::Bot,
                _ => self.atom(n),
            };
        }
        match self.rng.gen_range(0..3) {
            0 => Formula::and(self.reduced_goal(n, depth - 1), self.reduced_goal(n, depth - 1)),
            1 => Formula::or(self.reduced_goal(n, depth - 1), self.reduced_goal(n, depth - 1)),
            _ => Formula::implies(self.reduced_clause(n, depth - 1), self.reduced_goal(n, depth - 1)),
        }
    }

    fn reduced_clause(&mut self, n: usize, depth: usize) -> Formula {
        let k = self.rng.gen_range(1..=3);
        let heads = (0..k)
            .map(|_| if self.rng.gen_bool(0.15) { Formula::Bot } else { self.atom(n) })
            .collect();
        let heads = Formula::disjunction(heads);
        if depth > 0 && self.rng.gen_bool(0.6) {
            let body_depth = self.rng.gen_range(0..depth.min(2) + 1);
            Formula::implies(self.reduced_goal(n, body_depth), heads)
        } else {
            heads
        }
    }

    /// Propositional reduced problem: at most 4 atoms, at most 6 clauses,
    /// goal depth at most 4.
    pub fn reduced_problem(&mut self) -> Problem {
        let n = self.rng.gen_range(1..=ATOMS.len());
        let m = self.rng.gen_range(0..=6);
        let antecedent = (0..m).map(|_| self.reduced_clause(n, 2)).collect();
        let depth = self.rng.gen_range(1..=4);
        let succedent = self.reduced_goal(n, depth);
        Problem { label: self.label("reduced"), antecedent, succedent, domain: None, expect: None }
    }

    /// Horn problem: single atomic heads, conjunctive bodies, no `=>` in
    /// the goal.
    pub fn horn_problem(&mut self) -> Problem {
        let n = self.rng.gen_range(1..=ATOMS.len());
        let m = self.rng.gen_range(1..=6);
        let antecedent = (0..m)
            .map(|_| {
                let head = self.atom(n);
                match self.rng.gen_range(0..3) {
                    0 => head,
                    k => {
                        let body = (0..k).map(|_| self.atom(n)).collect();
                        Formula::implies(Formula::conjunction(body), head)
                    }
                }
            })
            .collect();
        let depth = self.rng.gen_range(0..=3);
        let succedent = self.positive_goal(n, depth);
        Problem { label: self.label("horn"), antecedent, succedent, domain: None, expect: None }
    }

    fn positive_goal(&mut self, n: usize, depth: usize) -> Formula {
        if depth == 0 || self.rng.gen_bool(0.3) {
            return self.atom(n);
        }
        let a = self.positive_goal(n, depth - 1);
        let b = self.positive_goal(n, depth - 1);
        if self.rng.gen_bool(0.5) {
            Formula::and(a, b)
        } else {
            Formula::or(a, b)
        }
    }

    /// Unrestricted quantifier-free formula over at most `n` atoms.
    pub fn formula(&mut self, n: usize, depth: usize) -> Formula {
        if depth == 0 || self.rng.gen_bool(0.25) {
            return match self.rng.gen_range(0..12) {
                0 => Formula::Top,
                1 => Formula::Bot,
                _ => self.atom(n),
            };
        }
        match self.rng.gen_range(0..4) {
            0 => Formula::and(self.formula(n, depth - 1), self.formula(n, depth - 1)),
            1 => Formula::or(self.formula(n, depth - 1), self.formula(n, depth - 1)),
            2 => Formula::implies(self.formula(n, depth - 1), self.formula(n, depth - 1)),
            _ => Formula::not(self.formula(n, depth - 1)),
        }
    }

    /// Quantifier-free sequent with up to three assumptions.
    pub fn qf_sequent(&mut self) -> Problem {
        let n = self.rng.gen_range(1..=ATOMS.len());
        let m = self.rng.gen_range(0..=3);
        let antecedent = (0..m).map(|_| self.formula(n, 3)).collect();
        let succedent = self.formula(n, 4);
        Problem { label: self.label("sequent"), antecedent, succedent, domain: None, expect: None }
    }
}
