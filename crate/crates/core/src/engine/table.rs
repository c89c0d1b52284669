//! Search for quantifier-free problems. Every sequent is ground, so the
//! smallest proof of a sequent depends only on its hypothesis set and goal,
//! and is remembered across the whole run (all deepening rungs included).

use std::collections::HashMap;
use std::rc::Rc;

use crate::formula::Formula;
use crate::kernel::{ProofTree, RuleName, Sequent};

use super::schema::ClauseShape;
use super::unify::Substitution;
use super::{ClauseOrder, RemainderTarget, SearchConfig, SearchResult, Stats, Status};

type Id = u32;
type Key = (Rc<[Id]>, Id);

#[derive(Clone)]
struct Choice {
    rule: RuleName,
    clause: Option<Id>,
    head: usize,
    /// Each premise: an optional added hypothesis and its goal.
    premises: Vec<(Option<Id>, Id)>,
}

#[derive(Default)]
struct Memo {
    best: Option<(usize, Choice)>,
    /// No proof has at most this many sequents.
    fails_at: usize,
    /// Whether the failure came from the size cap rather than exhaustion.
    capped: bool,
}

struct Table<'a> {
    cfg: &'a SearchConfig,
    forms: Vec<Formula>,
    ids: HashMap<Formula, Id>,
    shapes: Vec<Option<Rc<ClauseShape>>>,
    inputs: usize,
    top: Id,
    memo: HashMap<Key, Memo>,
    nodes: u64,
    trace: Vec<String>,
}

pub(super) fn run(clauses: &[Formula], goal: &Formula, cfg: &SearchConfig) -> SearchResult {
    let mut t = Table {
        cfg,
        forms: Vec::new(),
        ids: HashMap::new(),
        shapes: Vec::new(),
        inputs: 0,
        top: 0,
        memo: HashMap::new(),
        nodes: 0,
        trace: Vec::new(),
    };
    let input_ids: Vec<Id> = clauses.iter().map(|c| t.intern(c)).collect();
    t.inputs = t.forms.len();
    t.top = t.intern(goal);
    let mut set = input_ids.clone();
    set.sort_unstable();
    set.dedup();
    let root: Rc<[Id]> = set.into();

    let mut last = 0;
    for &bound in &cfg.deepening_schedule {
        last = bound;
        let (found, capped) = t.min(&root, t.top, bound);
        if found.is_some() {
            let proof = t.build(clauses.to_vec(), input_ids, t.top);
            let mut stats = Stats::of_proof(&proof);
            stats.nodes_expanded = t.nodes;
            stats.bound = bound;
            return SearchResult {
                status: Status::Proved,
                proof: Some(proof),
                final_subst: Substitution::new(),
                stats,
                trace: t.trace,
            };
        }
        if !capped {
            break;
        }
    }
    let stats = Stats { nodes_expanded: t.nodes, bound: last, ..Stats::default() };
    SearchResult { status: Status::ExhaustedAtBound, proof: None, final_subst: Substitution::new(), stats, trace: t.trace }
}

impl Table<'_> {
    fn intern(&mut self, f: &Formula) -> Id {
        if let Some(&i) = self.ids.get(f) {
            return i;
        }
        let i = self.forms.len() as Id;
        self.forms.push(f.clone());
        self.shapes.push(None);
        self.ids.insert(f.clone(), i);
        i
    }

    fn shape(&mut self, i: Id) -> Rc<ClauseShape> {
        if let Some(s) = &self.shapes[i as usize] {
            return s.clone();
        }
        let s = Rc::new(ClauseShape::split(&self.forms[i as usize]));
        self.shapes[i as usize] = Some(s.clone());
        s
    }

    fn with(ctx: &Rc<[Id]>, add: Option<Id>) -> Rc<[Id]> {
        match add {
            Some(a) => match ctx.binary_search(&a) {
                Ok(_) => ctx.clone(),
                Err(pos) => {
                    let mut v = ctx.to_vec();
                    v.insert(pos, a);
                    v.into()
                }
            },
            None => ctx.clone(),
        }
    }

    fn alternatives(&mut self, ctx: &Rc<[Id]>, goal: Id) -> Vec<Choice> {
        let g = self.forms[goal as usize].clone();
        let right = |rule, premises| Choice { rule, clause: None, head: 0, premises };
        match &g {
            Formula::Top => vec![right(RuleName::Axiom, vec![])],
            Formula::And(a, b) => {
                let (a, b) = (self.intern(a), self.intern(b));
                vec![right(RuleName::AndR, vec![(None, a), (None, b)])]
            }
            Formula::Or(a, b) => {
                let (a, b) = (self.intern(a), self.intern(b));
                vec![right(RuleName::OrRLeft, vec![(None, a)]), right(RuleName::OrRRight, vec![(None, b)])]
            }
            Formula::Implies(d, h) => {
                let (d, h) = (self.intern(d), self.intern(h));
                vec![right(RuleName::ImpR, vec![(Some(d), h)])]
            }
            Formula::Atom(..) | Formula::Bot => self.clause_steps(ctx, goal, &g),
            Formula::Exists(..) | Formula::Forall(..) => vec![],
        }
    }

    fn clause_steps(&mut self, ctx: &Rc<[Id]>, goal: Id, g: &Formula) -> Vec<Choice> {
        let inputs = self.inputs as Id;
        let order: Vec<Id> =
            ctx.iter().rev().copied().filter(|&i| i >= inputs).chain(ctx.iter().copied().filter(|&i| i < inputs)).collect();
        let target = match self.cfg.remainder_target {
            RemainderTarget::TopGoal => self.top,
            RemainderTarget::CurrentGoal => goal,
        };
        let mut out = Vec::new();
        for rule in [RuleName::Atomic, RuleName::Backchain] {
            for &c in &order {
                let shape = self.shape(c);
                if shape.body.is_some() != (rule == RuleName::Backchain) {
                    continue;
                }
                let relevant = shape.heads.iter().any(|h| h == g || *h == Formula::Bot);
                if self.cfg.clause_order == ClauseOrder::IndexedByHead && !relevant {
                    continue;
                }
                let body = shape.body.as_ref().map(|b| self.intern(b));
                let heads: Vec<Id> = shape.heads.iter().map(|h| self.intern(h)).collect();
                let passes: &[bool] = if *g == Formula::Bot { &[false] } else { &[false, true] };
                for &bot_pass in passes {
                    for (i, h) in shape.heads.iter().enumerate() {
                        let hit = if bot_pass { *h == Formula::Bot } else { h == g };
                        if !hit {
                            continue;
                        }
                        let mut premises: Vec<(Option<Id>, Id)> = body.map(|b| (None, b)).into_iter().collect();
                        premises.extend(heads.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, &a)| (Some(a), target)));
                        out.push(Choice { rule, clause: Some(c), head: i, premises });
                    }
                }
            }
        }
        if self.cfg.restart_enabled {
            out.push(Choice { rule: RuleName::Restart, clause: None, head: 0, premises: vec![(None, self.top)] });
        }
        out
    }

    /// Size of the smallest proof of `ctx --> goal` within `cap` sequents,
    /// and whether the cap cut anything off.
    fn min(&mut self, ctx: &Rc<[Id]>, goal: Id, cap: usize) -> (Option<usize>, bool) {
        let key: Key = (ctx.clone(), goal);
        if let Some(m) = self.memo.get(&key) {
            if let Some((s, _)) = &m.best {
                return if *s <= cap { (Some(*s), false) } else { (None, true) };
            }
            if cap <= m.fails_at {
                return (None, m.capped);
            }
        }
        if cap == 0 {
            return (None, true);
        }
        self.nodes += 1;
        let alts = self.alternatives(ctx, goal);
        let mut bound = cap;
        let mut capped = false;
        let mut best: Option<(usize, Choice)> = None;
        for alt in alts {
            if self.cfg.trace {
                let line = format!("{}: {}", alt.rule, self.show(ctx, goal));
                if self.trace.len() < self.cfg.trace_limit {
                    self.trace.push(line);
                }
            }
            let k = alt.premises.len();
            if 1 + k > bound {
                capped = true;
                continue;
            }
            let mut total = 1;
            let mut ok = true;
            for (i, &(add, g)) in alt.premises.iter().enumerate() {
                let sub = Self::with(ctx, add);
                let (r, c) = self.min(&sub, g, bound - total - (k - i - 1));
                capped |= c;
                match r {
                    Some(s) => total += s,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                bound = total - 1;
                best = Some((total, alt));
                if bound == 0 {
                    break;
                }
            }
        }
        let m = self.memo.entry(key).or_default();
        match best {
            Some((s, choice)) => {
                m.best = Some((s, choice));
                (Some(s), false)
            }
            None => {
                m.fails_at = if capped { cap } else { usize::MAX };
                m.capped = capped;
                (None, capped)
            }
        }
    }

    fn show(&self, ctx: &[Id], goal: Id) -> String {
        let ante = ctx.iter().map(|&i| self.forms[i as usize].clone()).collect();
        Sequent::single(ante, self.forms[goal as usize].clone()).to_string()
    }

    fn build(&self, ante: Vec<Formula>, ids: Vec<Id>, goal: Id) -> ProofTree {
        let mut set = ids.clone();
        set.sort_unstable();
        set.dedup();
        let key: Key = (set.into(), goal);
        let (_, choice) = self.memo[&key].best.clone().expect("recorded sequent");
        let premises = choice
            .premises
            .iter()
            .map(|&(add, g)| {
                let (mut a, mut i) = (ante.clone(), ids.clone());
                if let Some(h) = add {
                    a.push(self.forms[h as usize].clone());
                    i.push(h);
                }
                self.build(a, i, g)
            })
            .collect();
        let mut t = ProofTree::new(Sequent::single(ante, self.forms[goal as usize].clone()), choice.rule, premises);
        match choice.clause {
            Some(c) => {
                let pos = ids.iter().position(|&i| i == c).expect("clause in context");
                t = t.with_principal(pos).with_instance(vec![], choice.head);
            }
            None if choice.rule != RuleName::Restart => t = t.with_principal(0),
            None => {}
        }
        t
    }
}
