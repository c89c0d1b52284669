// Reasoning by cases with a disjunctive clause, with the rule trace.

use uniprove::engine::{prove, SearchConfig};
use uniprove::formula::{parse_sequent, ParseOptions, Signature};
use uniprove::transform::{normalize, NormalizeOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (ante, succ) = parse_sequent("p \\/ q; p => r; q => r |- r", ParseOptions::default(), &mut Signature::default())?;
    let np = normalize(&ante, &succ, NormalizeOptions::default())?;

    let mut cfg = SearchConfig::default();
    cfg.trace = true;
    let result = prove(&np.clauses, &np.goal, &cfg)?;
    for line in result.trace.iter().take(12) {
        println!("{line}");
    }
    let s = &result.stats;
    println!(
        "{:?}: {} sequents ({} backchain, {} atomic, {} restart), {} nodes expanded",
        result.status, s.sequents, s.backchain, s.atomic, s.restart, s.nodes_expanded
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
