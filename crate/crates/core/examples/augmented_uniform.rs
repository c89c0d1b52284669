// Adding `G => false` to the clauses lets a restart-free search prove `G`
// with a plain uniform proof.

use uniprove::engine::{expand_to_uniform, prove, SearchConfig};
use uniprove::formula::{parse, Formula};
use uniprove::kernel::{check, Discipline};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let goal = parse("(p => q) \\/ p")?;

    let plain = prove(&[], &goal, &SearchConfig::uniform(200))?;
    println!("without the extra clause: {:?}", plain.status);

    let clauses = vec![Formula::implies(goal.clone(), Formula::Bot)];
    let augmented = prove(&clauses, &goal, &SearchConfig::uniform(200))?;
    let proof = expand_to_uniform(augmented.proof.as_ref().ok_or("expected a proof")?);
    print!("{}", proof.render());
    for d in [Discipline::Uniform, Discipline::I, Discipline::C] {
        println!("{d}: {}", check(&proof, &d).ok);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
