// Parse formulas and see where they fall in the goal/assumption grammars.

use uniprove::formula::{classify, parse, print_full, FragmentClass, Grammar, Role};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let samples = [
        ("((p => q) => p) => p", Role::Goal),
        ("forall x. (g(x) => a(x) \\/ b(x))", Role::Assumption),
        ("exists y. q(y) /\\ ~r", Role::Goal),
        ("forall x. p(x)", Role::Goal),
    ];
    for (text, role) in samples {
        let f = parse(text)?;
        let general = classify(&f, role, Grammar::General);
        let reduced = classify(&f, role, Grammar::Reduced);
        println!("{text}");
        println!("  parsed   {}", print_full(&f));
        println!("  general  {}", describe(&general));
        println!("  reduced  {}", describe(&reduced));
    }
    Ok(())
}

fn describe(c: &FragmentClass) -> String {
    match c {
        FragmentClass::OutsideFragment(o) => format!("outside: {o}"),
        other => format!("{other:?}"),
    }
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
