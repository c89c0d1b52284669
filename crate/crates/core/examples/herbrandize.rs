// Normalize a sequent: eliminate eigenvariable quantifiers with fresh
// symbols, then split assumptions into clauses.

use uniprove::formula::{parse_sequent, ParseOptions, Signature};
use uniprove::transform::{normalize, NormalizeOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = "forall x. ((p(x) => false) => false); exists y. (r(y) /\\ s) |- forall x. p(x)";
    let (ante, succ) = parse_sequent(text, ParseOptions::default(), &mut Signature::default())?;

    match normalize(&ante, &succ, NormalizeOptions { herbrandize: false }) {
        Err(e) => println!("without herbrandization: {e}"),
        Ok(_) => println!("without herbrandization: accepted"),
    }

    let np = normalize(&ante, &succ, NormalizeOptions::default())?;
    print!("{}", np.to_text());
    for step in &np.trace {
        println!("  {step}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
