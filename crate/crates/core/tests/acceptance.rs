//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::time::{Duration, Instant};

use uniprove::engine::{expand_to_og, expand_to_uniform, prove, SearchConfig, SearchResult, Status};
use uniprove::formula::{parse, parse_sequent, Formula, ParseOptions, Signature, Symbol};
use uniprove::kernel::{check, Discipline, ProofTree, RuleName, Sequent};
use uniprove::oracle::gen::Generator;
use uniprove::oracle::{differential, ground_valid, prop_valid};
use uniprove::transform::{herbrandize, normalize, FreshNames, NormalizeOptions, NormalizedProblem, TransformError};

const CEILING: usize = 200;
const PER_CASE: Duration = Duration::from_secs(1);
const RANDOM_CASES: usize = 500;
const RANDOM_SEED: u64 = 42;
const RANDOM_BUDGET: Duration = Duration::from_secs(60);
const HORN_CASES: usize = 100;
const PEIRCE_CEILING: usize = 40;

const THEOREMS: [&str; 5] = [
    "|- ((p => q) => p) => p",
    "p(a) \\/ p(b) |- exists x. p(x)",
    "|- (p => q) \\/ p",
    "p \\/ q; p => r; q => r |- r",
    "|- forall x. q(x) \\/ exists x. (q(x) => false)",
];
const NON_THEOREMS: [&str; 2] = ["p |- q", "|- p"];

type Outcome = Result<String, String>;

fn sequent(text: &str) -> (Vec<Formula>, Formula) {
    parse_sequent(text, ParseOptions::default(), &mut Signature::default()).expect(text)
}

fn f(text: &str) -> Formula {
    parse(text).expect(text)
}

fn normalized(text: &str) -> NormalizedProblem {
    let (a, s) = sequent(text);
    normalize(&a, &s, NormalizeOptions::default()).expect(text)
}

/// Kernel verdict for one found proof: reduced check, then the goal-relative
/// check of its expansion.
fn gate(np: &NormalizedProblem, r: &SearchResult) -> Result<(), String> {
    let proof = r.proof.as_ref().ok_or("no proof")?;
    let reduced = check(proof, &Discipline::Reduced(np.goal.clone()));
    if !reduced.ok {
        return Err(format!("reduced: {}", reduced.reasons().join("; ")));
    }
    let og = check(&expand_to_og(proof, &np.goal), &Discipline::OG(np.goal.clone()));
    if !og.ok {
        return Err(format!("og: {}", og.reasons().join("; ")));
    }
    Ok(())
}

struct Gated {
    proofs: usize,
    failures: Vec<String>,
}

fn corpus(gated: &mut Gated) -> Outcome {
    let cfg = SearchConfig::with_max(CEILING);
    for text in THEOREMS {
        let np = normalized(text);
        let start = Instant::now();
        let r = prove(&np.clauses, &np.goal, &cfg).map_err(|e| format!("{text}: {e}"))?;
        let took = start.elapsed();
        if !r.proved() {
            return Err(format!("{text}: not proved"));
        }
        if took >= PER_CASE {
            return Err(format!("{text}: took {took:?}"));
        }
        gated.proofs += 1;
        if let Err(e) = gate(&np, &r) {
            gated.failures.push(format!("{text}: {e}"));
        }
    }
    for text in NON_THEOREMS {
        let np = normalized(text);
        let r = prove(&np.clauses, &np.goal, &cfg).map_err(|e| e.to_string())?;
        if r.status != Status::ExhaustedAtBound {
            return Err(format!("{text}: expected not-proved-at-bound"));
        }
    }
    Ok(format!("{} theorems proved, {} non-theorems not proved", THEOREMS.len(), NON_THEOREMS.len()))
}

fn fragment_control() -> Outcome {
    let (a, s) = sequent("forall x. ((p(x) => false) => false) |- forall x. p(x)");
    match normalize(&a, &s, NormalizeOptions { herbrandize: false }) {
        Err(TransformError::OutsideFragment(o)) => {
            let np = normalize(&a, &s, NormalizeOptions::default()).map_err(|e| e.to_string())?;
            if np.goal.to_string() != "p(_h1)" {
                return Err(format!("goal became {}", np.goal));
            }
            let r = prove(&np.clauses, &np.goal, &SearchConfig::default()).map_err(|e| e.to_string())?;
            if r.proved() {
                Ok(format!("rejected without herbrandization ({o}); proved with goal {}", np.goal))
            } else {
                Err("not proved after herbrandization".into())
            }
        }
        Ok(np) => Err(format!("accepted without herbrandization: goal {}", np.goal)),
    }
}

fn random_differential(gated: &mut Gated) -> Outcome {
    let mut g = Generator::new(RANDOM_SEED);
    let problems: Vec<_> = (0..RANDOM_CASES).map(|_| g.reduced_problem()).collect();
    let start = Instant::now();
    let report = differential(problems.iter().cloned(), &SearchConfig::with_max(CEILING));
    let took = start.elapsed();
    for p in &problems {
        let np = normalize(&p.antecedent, &p.succedent, NormalizeOptions::default()).map_err(|e| e.to_string())?;
        let r = prove(&np.clauses, &np.goal, &SearchConfig::with_max(CEILING)).map_err(|e| e.to_string())?;
        if r.proved() {
            gated.proofs += 1;
            if let Err(e) = gate(&np, &r) {
                gated.failures.push(format!("{}: {e}", p.label));
            }
        }
    }
    if report.disagreements > 0 {
        let first = report.cases.iter().find(|c| c.outcome != uniprove::oracle::CaseOutcome::Agree);
        return Err(format!("{} disagreements, first: {:?}", report.disagreements, first.map(|c| &c.label)));
    }
    if took >= RANDOM_BUDGET {
        return Err(format!("took {took:?}"));
    }
    let proved = report.cases.iter().filter(|c| c.proved).count();
    Ok(format!("{RANDOM_CASES} cases ({proved} proved), 0 disagreements in {:.2}s", took.as_secs_f64()))
}

fn gating(gated: &Gated) -> Outcome {
    if gated.failures.is_empty() {
        Ok(format!("{} proofs pass reduced and og", gated.proofs))
    } else {
        Err(format!("{} of {} rejected, first: {}", gated.failures.len(), gated.proofs, gated.failures[0]))
    }
}

fn disjunction_i_proof() -> ProofTree {
    let goal = f("exists x. p(x)");
    let branch = |c: &str| {
        let atom = f(&format!("p({c})"));
        let leaf = ProofTree::axiom(Sequent::single(vec![atom.clone()], atom.clone()));
        ProofTree::new(Sequent::single(vec![atom], goal.clone()), RuleName::ExR, vec![leaf])
            .with_principal(0)
            .with_witness(uniprove::formula::Term::constant(c))
    };
    ProofTree::new(
        Sequent::single(vec![f("p(a) \\/ p(b)")], goal.clone()),
        RuleName::OrL,
        vec![branch("a"), branch("b")],
    )
    .with_principal(0)
}

fn peirce_c_proof() -> ProofTree {
    let (p, q) = (f("p"), f("q"));
    let hyp = f("(p => q) => p");
    let leaf = ProofTree::axiom(Sequent::new(vec![hyp.clone(), p.clone()], vec![p.clone(), q]));
    let left = ProofTree::new(Sequent::new(vec![hyp.clone()], vec![p.clone(), f("p => q")]), RuleName::ImpR, vec![leaf])
        .with_principal(1);
    let right = ProofTree::axiom(Sequent::single(vec![p.clone()], p.clone()));
    let imp_l =
        ProofTree::new(Sequent::new(vec![hyp.clone()], vec![p.clone(), p.clone()]), RuleName::ImpL, vec![left, right])
            .with_principal(0);
    let contr = ProofTree::new(Sequent::single(vec![hyp], p), RuleName::ContrR, vec![imp_l]).with_principal(0);
    ProofTree::new(Sequent::single(vec![], f("((p => q) => p) => p")), RuleName::ImpR, vec![contr]).with_principal(0)
}

fn uniformity_regressions() -> Outcome {
    let disj = disjunction_i_proof();
    let peirce = peirce_c_proof();
    let results = [
        ("disjunction under i", check(&disj, &Discipline::I).ok, true),
        ("disjunction under uniform", check(&disj, &Discipline::Uniform).ok, false),
        ("peirce under c", check(&peirce, &Discipline::C).ok, true),
        ("peirce under i", check(&peirce, &Discipline::I).ok, false),
    ];
    let wrong: Vec<_> = results.iter().filter(|(_, got, want)| got != want).map(|(n, ..)| *n).collect();
    if wrong.is_empty() {
        Ok("i-proof passes i, fails uniform; c-proof passes c, fails i".into())
    } else {
        Err(format!("wrong verdicts: {}", wrong.join(", ")))
    }
}

fn horn() -> Outcome {
    let mut g = Generator::new(RANDOM_SEED);
    let with = SearchConfig::with_max(CEILING);
    let without = SearchConfig::with_max(CEILING).no_restart();
    let mut proved = 0;
    for _ in 0..HORN_CASES {
        let p = g.horn_problem();
        let np = normalize(&p.antecedent, &p.succedent, NormalizeOptions::default()).map_err(|e| e.to_string())?;
        let a = prove(&np.clauses, &np.goal, &with).map_err(|e| e.to_string())?;
        let b = prove(&np.clauses, &np.goal, &without).map_err(|e| e.to_string())?;
        if a.proved() != b.proved() {
            return Err(format!("{}: verdict changes without restart", p.label));
        }
        if let Some(proof) = &a.proof {
            proved += 1;
            if proof.count(RuleName::Restart) > 0 {
                return Err(format!("{}: proof uses restart", p.label));
            }
        }
    }
    let np = normalized("|- ((p => q) => p) => p");
    let r = prove(&np.clauses, &np.goal, &SearchConfig::with_max(PEIRCE_CEILING).no_restart())
        .map_err(|e| e.to_string())?;
    if r.status != Status::ExhaustedAtBound {
        return Err("peirce proved without restart".into());
    }
    Ok(format!("{HORN_CASES} horn problems ({proved} proved) without restart; peirce exhausted at {PEIRCE_CEILING}"))
}

fn augmented() -> Outcome {
    for text in THEOREMS {
        let np = normalized(text);
        let mut clauses = np.clauses.clone();
        clauses.push(Formula::implies(np.goal.clone(), Formula::Bot));
        let r = prove(&clauses, &np.goal, &SearchConfig::uniform(CEILING)).map_err(|e| format!("{text}: {e}"))?;
        let proof = r.proof.ok_or(format!("{text}: augmented problem not proved"))?;
        let report = check(&expand_to_uniform(&proof), &Discipline::Uniform);
        if !report.ok {
            return Err(format!("{text}: {}", report.reasons().join("; ")));
        }
    }
    Ok(format!("{} augmented problems have uniform proofs", THEOREMS.len()))
}

/// Function-free first-order sequents with a finite domain, including some
/// that are not valid.
const FO_CORPUS: [(&str, &[&str]); 10] = [
    ("forall x. p(x) |- p(a)", &["a"]),
    ("p(a) \\/ p(b) |- exists x. p(x)", &["a", "b"]),
    ("exists x. p(x) |- exists y. p(y)", &["a"]),
    ("forall x. (p(x) => q(x)); p(a) |- q(a)", &["a", "b"]),
    ("|- forall x. (p(x) => p(x))", &["a"]),
    ("forall x. ((p(x) => false) => false) |- forall x. p(x)", &["a"]),
    ("exists x. (p(x) /\\ q(x)) |- exists x. p(x)", &["a", "b"]),
    ("exists x. p(x) |- forall x. p(x)", &["a"]),
    ("exists x. p(x) |- p(a)", &["a"]),
    ("p(a) |- forall x. p(x)", &["a", "b"]),
];

fn transformation_equivalence() -> Outcome {
    let mut g = Generator::new(RANDOM_SEED);
    for _ in 0..RANDOM_CASES {
        let p = g.qf_sequent();
        let before = prop_valid(&p.antecedent, &p.succedent).map_err(|e| e.to_string())?;
        let np = normalize(&p.antecedent, &p.succedent, NormalizeOptions::default()).map_err(|e| e.to_string())?;
        let after = prop_valid(&np.clauses, &np.goal).map_err(|e| e.to_string())?;
        if before != after {
            return Err(format!("{}: {} |- {} changed verdict", p.label, fmt_all(&p.antecedent), p.succedent));
        }
    }
    let (mut valid, mut invalid) = (0, 0);
    for (text, domain) in FO_CORPUS {
        let (a, s) = sequent(text);
        let (ha, hs, ext) = herbrandize(&a, &s, &mut FreshNames::default());
        let mut dom: Vec<Symbol> = domain.iter().map(|d| Symbol::new(d)).collect();
        dom.extend(ext.iter().filter(|h| h.arity == 0).map(|h| Symbol::new(&h.name)));
        let before = ground_valid(&a, &s, &dom).map_err(|e| format!("{text}: {e}"))?;
        let after = ground_valid(&ha, &hs, &dom).map_err(|e| format!("{text}: {e}"))?;
        if before != after {
            return Err(format!("{text}: {before} before, {after} after"));
        }
        if before {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    Ok(format!(
        "{RANDOM_CASES} propositional sequents unchanged; {} first-order ({valid} valid, {invalid} invalid) unchanged",
        FO_CORPUS.len()
    ))
}

fn fmt_all(fs: &[Formula]) -> String {
    fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("; ")
}

fn main() {
    let mut gated = Gated { proofs: 0, failures: Vec::new() };
    let results = [
        ("1 corpus", corpus(&mut gated)),
        ("2 fragment control", fragment_control()),
        ("3 random differential", random_differential(&mut gated)),
        ("4 kernel gating", gating(&gated)),
        ("5 uniformity regressions", uniformity_regressions()),
        ("6 horn without restart", horn()),
        ("7 augmented uniform", augmented()),
        ("8 transformation equivalence", transformation_equivalence()),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(msg) => println!("criterion {name}: PASS  {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL  {msg}");
            }
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
