// Peirce's law needs the restart rule: without it the search exhausts.

use uniprove::engine::{prove, SearchConfig};
use uniprove::formula::parse;
use uniprove::kernel::RuleName;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let goal = parse("((p => q) => p) => p")?;

    let found = prove(&[], &goal, &SearchConfig::default())?;
    let proof = found.proof.as_ref().ok_or("expected a proof")?;
    println!("proved in {} sequents, {} restart(s)", proof.size(), proof.count(RuleName::Restart));
    print!("{}", proof.render());

    let blocked = prove(&[], &goal, &SearchConfig::with_max(40).no_restart())?;
    println!("without restart: {:?} at bound {}", blocked.status, blocked.stats.bound);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
