use std::collections::BTreeMap;
use std::rc::Rc;

use crate::formula::{classify, Formula, FragmentClass, Grammar, MetaId, Role, Symbol, Term};
use crate::kernel::{ProofTree, RuleName, Sequent};

use super::schema::ClauseShape;
use super::unify::{Bindings, Substitution};
use super::{ClauseOrder, EngineError, RemainderTarget, SearchConfig, SearchResult, Stats, Status};

struct Entry {
    formula: Formula,
    shape: ClauseShape,
}

type Ctx = Rc<Vec<Rc<Entry>>>;

struct Ancestor {
    ctx: Ctx,
    goal: Formula,
    next: Option<Rc<Ancestor>>,
}

#[derive(Clone)]
struct Task {
    ctx: Ctx,
    goal: Formula,
    ancestors: Option<Rc<Ancestor>>,
}

struct AgendaNode {
    task: Task,
    len: usize,
    next: Agenda,
}

type Agenda = Option<Rc<AgendaNode>>;

fn push(agenda: &Agenda, task: Task) -> Agenda {
    let len = agenda.as_ref().map_or(0, |n| n.len) + 1;
    Some(Rc::new(AgendaNode { task, len, next: agenda.clone() }))
}

/// One applied rule, recorded in pre-order so the tree can be rebuilt from
/// the arities alone.
struct Step {
    ctx: Ctx,
    goal: Formula,
    rule: RuleName,
    principal: Option<usize>,
    witness: Option<Term>,
    instance: Option<(Vec<MetaId>, usize)>,
    arity: usize,
}

struct Search<'a> {
    cfg: &'a SearchConfig,
    top: Formula,
    /// Number of input clauses at the front of every context.
    inputs: usize,
    bindings: Bindings,
    steps: Vec<Step>,
    bound: usize,
    budget_hit: bool,
    nodes: u64,
    trace: Vec<String>,
}

pub(super) fn run(clauses: &[Formula], goal: &Formula, cfg: &SearchConfig) -> Result<SearchResult, EngineError> {
    if let FragmentClass::OutsideFragment(o) = classify(goal, Role::Goal, Grammar::Reduced) {
        return Err(EngineError::NotReducedGoal { formula: goal.clone(), offense: o.to_string() });
    }
    let mut entries = Vec::with_capacity(clauses.len());
    for c in clauses {
        entries.push(Rc::new(Entry { formula: c.clone(), shape: ClauseShape::of(c)? }));
    }
    if cfg.tabled && clauses.iter().chain([goal]).all(Formula::is_quantifier_free) {
        return Ok(super::table::run(clauses, goal, cfg));
    }
    let root = Task { ctx: Rc::new(entries), goal: goal.clone(), ancestors: None };

    let mut nodes = 0;
    let mut trace = Vec::new();
    let mut last_bound = 0;
    for &bound in &cfg.deepening_schedule {
        last_bound = bound;
        let mut s = Search {
            cfg,
            top: goal.clone(),
            inputs: clauses.len(),
            bindings: Bindings::default(),
            steps: Vec::new(),
            bound,
            budget_hit: false,
            nodes: 0,
            trace: std::mem::take(&mut trace),
        };
        let proved = s.solve(&push(&None, root.clone()), 0);
        nodes += s.nodes;
        if proved {
            let (proof, subst) = s.assemble();
            let mut stats = Stats::of_proof(&proof);
            stats.nodes_expanded = nodes;
            stats.bound = bound;
            return Ok(SearchResult { status: Status::Proved, proof: Some(proof), final_subst: subst, stats, trace: s.trace });
        }
        trace = s.trace;
        if !s.budget_hit {
            break;
        }
    }
    let stats = Stats { nodes_expanded: nodes, bound: last_bound, ..Stats::default() };
    Ok(SearchResult { status: Status::ExhaustedAtBound, proof: None, final_subst: Substitution::new(), stats, trace })
}

fn placeholder() -> Term {
    Term::Const(Symbol::new("_w0"))
}

impl Search<'_> {
    fn note(&mut self, line: String) {
        if self.trace.len() < self.cfg.trace_limit {
            self.trace.push(line);
        }
    }

    fn solve(&mut self, agenda: &Agenda, used: usize) -> bool {
        let Some(node) = agenda else {
            return true;
        };
        if used + node.len > self.bound {
            self.budget_hit = true;
            return false;
        }
        self.nodes += 1;
        let task = &node.task;
        if self.cfg.loop_check && self.repeats(task) {
            return false;
        }
        let rest = &node.next;
        match &task.goal {
            Formula::Top => self.apply(task, RuleName::Axiom, Some(0), None, None, vec![], rest, used),
            Formula::And(a, b) => {
                let premises = vec![self.sub(task, task.ctx.clone(), (**a).clone()), self.sub(task, task.ctx.clone(), (**b).clone())];
                self.apply(task, RuleName::AndR, Some(0), None, None, premises, rest, used)
            }
            Formula::Or(a, b) => {
                let left = vec![self.sub(task, task.ctx.clone(), (**a).clone())];
                if self.apply(task, RuleName::OrRLeft, Some(0), None, None, left, rest, used) {
                    return true;
                }
                let right = vec![self.sub(task, task.ctx.clone(), (**b).clone())];
                self.apply(task, RuleName::OrRRight, Some(0), None, None, right, rest, used)
            }
            Formula::Implies(d, g) => {
                let entry = Entry { formula: (**d).clone(), shape: ClauseShape::split(d) };
                let ctx = extend(&task.ctx, entry);
                let premises = vec![self.sub(task, ctx, (**g).clone())];
                self.apply(task, RuleName::ImpR, Some(0), None, None, premises, rest, used)
            }
            Formula::Exists(x, body) => {
                let mark = self.bindings.mark();
                let m = self.bindings.fresh();
                let premises = vec![self.sub(task, task.ctx.clone(), body.substitute(x, &Term::Meta(m)))];
                if self.apply(task, RuleName::ExR, Some(0), Some(Term::Meta(m)), None, premises, rest, used) {
                    return true;
                }
                self.bindings.undo(mark);
                false
            }
            Formula::Forall(..) => false,
            Formula::Atom(..) | Formula::Bot => self.atomic_goal(task, rest, used),
        }
    }

    fn sub(&self, parent: &Task, ctx: Ctx, goal: Formula) -> Task {
        let ancestors = Some(Rc::new(Ancestor {
            ctx: parent.ctx.clone(),
            goal: parent.goal.clone(),
            next: parent.ancestors.clone(),
        }));
        Task { ctx, goal, ancestors }
    }

    /// Records a step, schedules its premises (first premise on top) and
    /// continues with the rest of the agenda.
    #[allow(clippy::too_many_arguments)]
    fn apply(
        &mut self,
        task: &Task,
        rule: RuleName,
        principal: Option<usize>,
        witness: Option<Term>,
        instance: Option<(Vec<MetaId>, usize)>,
        premises: Vec<Task>,
        rest: &Agenda,
        used: usize,
    ) -> bool {
        if self.cfg.trace {
            let line = format!("{rule}: {}", self.show(task));
            self.note(line);
        }
        let saved = self.steps.len();
        self.steps.push(Step {
            ctx: task.ctx.clone(),
            goal: task.goal.clone(),
            rule,
            principal,
            witness,
            instance,
            arity: premises.len(),
        });
        let mut agenda = rest.clone();
        for p in premises.into_iter().rev() {
            agenda = push(&agenda, p);
        }
        if self.solve(&agenda, used + 1) {
            return true;
        }
        self.steps.truncate(saved);
        false
    }

    fn show(&self, task: &Task) -> String {
        let ante: Vec<Formula> = task.ctx.iter().map(|e| self.bindings.resolve(&e.formula)).collect();
        Sequent::single(ante, self.bindings.resolve(&task.goal)).to_string()
    }

    /// Same goal and same set of hypotheses as some ancestor. Contexts only
    /// grow along a branch, so an ancestor's context is a prefix.
    fn repeats(&self, task: &Task) -> bool {
        let mut cur = task.ancestors.as_deref();
        while let Some(a) = cur {
            if self.bindings.same(&a.goal, &task.goal)
                && task.ctx[a.ctx.len()..].iter().all(|e| a.ctx.iter().any(|o| self.bindings.same(&o.formula, &e.formula)))
            {
                return true;
            }
            cur = a.next.as_deref();
        }
        false
    }

    fn may_close(&self, shape: &ClauseShape, goal: &Formula) -> bool {
        shape.heads.iter().any(|h| match (h, goal) {
            (Formula::Bot, _) => true,
            (Formula::Atom(p, xs), Formula::Atom(q, ys)) => p == q && xs.len() == ys.len(),
            _ => false,
        })
    }

    fn atomic_goal(&mut self, task: &Task, rest: &Agenda, used: usize) -> bool {
        // Added hypotheses, newest first, then the input clauses in order.
        let order: Vec<usize> = (self.inputs..task.ctx.len()).rev().chain(0..self.inputs).collect();
        for rule in [RuleName::Atomic, RuleName::Backchain] {
            for &k in &order {
                let entry = &task.ctx[k];
                if entry.shape.body.is_some() != (rule == RuleName::Backchain) {
                    continue;
                }
                if task.ctx[..k].iter().any(|o| self.bindings.same(&o.formula, &entry.formula)) {
                    continue;
                }
                if self.cfg.clause_order == ClauseOrder::IndexedByHead && !self.may_close(&entry.shape, &task.goal) {
                    continue;
                }
                if self.clause_step(task, rule, k, entry, rest, used) {
                    return true;
                }
            }
        }
        if self.cfg.restart_enabled {
            let premises = vec![self.sub(task, task.ctx.clone(), self.top.clone())];
            return self.apply(task, RuleName::Restart, None, None, None, premises, rest, used);
        }
        false
    }

    fn clause_step(&mut self, task: &Task, rule: RuleName, k: usize, entry: &Entry, rest: &Agenda, used: usize) -> bool {
        let outer = self.bindings.mark();
        let metas: Vec<MetaId> = entry.shape.vars.iter().map(|_| self.bindings.fresh()).collect();
        let (body, heads) = entry.shape.open(&metas);
        let goal_is_bot = task.goal == Formula::Bot;
        for bot_pass in [false, true] {
            if bot_pass && goal_is_bot {
                break;
            }
            for (i, head) in heads.iter().enumerate() {
                let mark = self.bindings.mark();
                let matched = if bot_pass { *head == Formula::Bot } else { self.bindings.unify_atoms(head, &task.goal) };
                if matched {
                    let mut premises = Vec::new();
                    if let Some(b) = &body {
                        premises.push(self.sub(task, task.ctx.clone(), b.clone()));
                    }
                    let target = match self.cfg.remainder_target {
                        RemainderTarget::TopGoal => self.top.clone(),
                        RemainderTarget::CurrentGoal => task.goal.clone(),
                    };
                    for (j, a) in heads.iter().enumerate() {
                        if j != i {
                            let hyp = Entry { formula: a.clone(), shape: ClauseShape::split(a) };
                            premises.push(self.sub(task, extend(&task.ctx, hyp), target.clone()));
                        }
                    }
                    if self.apply(task, rule, Some(k), None, Some((metas.clone(), i)), premises, rest, used) {
                        return true;
                    }
                }
                self.bindings.undo(mark);
            }
        }
        self.bindings.undo(outer);
        false
    }

    fn ground(&self, f: &Formula) -> Formula {
        self.bindings.resolve(f).map_metas(&mut |_| placeholder())
    }

    fn ground_term(&self, t: &Term) -> Term {
        self.bindings.resolve_term(t).map_metas(&mut |_| placeholder())
    }

    fn assemble(&self) -> (ProofTree, Substitution) {
        let mut next = 0;
        let tree = self.build(&mut next);
        debug_assert_eq!(next, self.steps.len());
        let map: BTreeMap<MetaId, Term> =
            (0..self.bindings.allocated()).map(|i| (MetaId(i as u32), self.ground_term(&Term::Meta(MetaId(i as u32))))).collect();
        (tree, Substitution::from_map(map))
    }

    fn build(&self, next: &mut usize) -> ProofTree {
        let step = &self.steps[*next];
        *next += 1;
        let premises = (0..step.arity).map(|_| self.build(next)).collect();
        let ante = step.ctx.iter().map(|e| self.ground(&e.formula)).collect();
        let mut t = ProofTree::new(Sequent::single(ante, self.ground(&step.goal)), step.rule, premises);
        t.principal = step.principal;
        t.witness = step.witness.as_ref().map(|w| self.ground_term(w));
        if let Some((metas, head)) = &step.instance {
            t = t.with_instance(metas.iter().map(|m| self.ground_term(&Term::Meta(*m))).collect(), *head);
        }
        t
    }
}

fn extend(ctx: &Ctx, entry: Entry) -> Ctx {
    let mut v = Vec::with_capacity(ctx.len() + 1);
    v.extend(ctx.iter().cloned());
    v.push(Rc::new(entry));
    Rc::new(v)
}
