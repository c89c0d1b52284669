// Hand-built proofs checked against several disciplines, plus a round trip
// through the JSON exchange format.

use uniprove::formula::{parse, Term};
use uniprove::kernel::{check, from_json, to_json, Discipline, ProofTree, RuleName, Sequent};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let goal = parse("exists x. p(x)")?;
    let branch = |c: &str| -> Result<ProofTree, Box<dyn std::error::Error>> {
        let atom = parse(&format!("p({c})"))?;
        let leaf = ProofTree::axiom(Sequent::single(vec![atom.clone()], atom.clone()));
        Ok(ProofTree::new(Sequent::single(vec![atom], goal.clone()), RuleName::ExR, vec![leaf])
            .with_principal(0)
            .with_witness(Term::constant(c)))
    };
    let by_cases = ProofTree::new(
        Sequent::single(vec![parse("p(a) \\/ p(b)")?], goal.clone()),
        RuleName::OrL,
        vec![branch("a")?, branch("b")?],
    )
    .with_principal(0);

    for d in [Discipline::C, Discipline::I, Discipline::Uniform] {
        let report = check(&by_cases, &d);
        println!("{d:<8} {}", if report.ok { "ok" } else { "rejected" });
        for reason in report.reasons() {
            println!("         {reason}");
        }
    }

    let text = to_json(&by_cases);
    let back = from_json(&text)?;
    println!("round trip equal: {}", back == by_cases);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
