// Run the engine against the truth-table oracle on a small corpus and on
// seeded random problems.

use uniprove::engine::SearchConfig;
use uniprove::oracle::gen::Generator;
use uniprove::oracle::{differential, parse_corpus, Problem};

const CORPUS: &str = "\
|- ((p => q) => p) => p
p \\/ q; p => r; q => r |- r
# expect: not-proved
p |- q
# domain: a, b
p(a) \\/ p(b) |- exists x. p(x)
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = parse_corpus(CORPUS)?;
    let report = differential(cases.into_iter().map(Problem::from), &SearchConfig::default());
    print!("{report}");

    let mut g = Generator::new(42);
    let random = differential((0..100).map(|_| g.reduced_problem()), &SearchConfig::default());
    let proved = random.cases.iter().filter(|c| c.proved).count();
    println!("random: {} cases, {proved} proved, {} disagreements", random.cases.len(), random.disagreements);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
