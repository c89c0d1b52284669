// Expand a goal-directed proof into the goal-relative sequent calculus and
// check both.

use uniprove::engine::{expand_to_og, prove, SearchConfig};
use uniprove::formula::{parse_sequent, ParseOptions, Signature};
use uniprove::kernel::{check, Discipline};
use uniprove::transform::{normalize, NormalizeOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (ante, succ) = parse_sequent("p(a) \\/ p(b) |- exists x. p(x)", ParseOptions::default(), &mut Signature::default())?;
    let np = normalize(&ante, &succ, NormalizeOptions::default())?;
    let result = prove(&np.clauses, &np.goal, &SearchConfig::default())?;
    let reduced = result.proof.ok_or("expected a proof")?;

    println!("reduced proof ({} sequents):", reduced.size());
    print!("{}", reduced.render());
    println!("reduced check: {}", check(&reduced, &Discipline::Reduced(np.goal.clone())).ok);

    let og = expand_to_og(&reduced, &np.goal);
    println!("expanded proof ({} sequents):", og.size());
    print!("{}", og.render());
    println!("og check: {}", check(&og, &Discipline::OG(np.goal.clone())).ok);
    println!("uniform check: {}", check(&og, &Discipline::Uniform).ok);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
