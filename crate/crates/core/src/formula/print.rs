use super::Formula;

/// Fully parenthesized rendering: every non-atomic operand is wrapped.
/// This is the byte-stable form used in documents and golden tests.
pub fn print_full(f: &Formula) -> String {
    let mut out = String::new();
    full(f, &mut out);
    out
}

fn full(f: &Formula, out: &mut String) {
    match f {
        Formula::Top => out.push_str("true"),
        Formula::Bot => out.push_str("false"),
        Formula::Atom(..) => atom(f, out),
        Formula::And(a, b) => binary(a, " /\\ ", b, out),
        Formula::Or(a, b) => binary(a, " \\/ ", b, out),
        Formula::Implies(a, b) => binary(a, " => ", b, out),
        Formula::Exists(x, body) => {
            out.push_str("exists ");
            out.push_str(x.as_str());
            out.push_str(". ");
            wrapped(body, out);
        }
        Formula::Forall(x, body) => {
            out.push_str("forall ");
            out.push_str(x.as_str());
            out.push_str(". ");
            wrapped(body, out);
        }
    }
}

fn binary(a: &Formula, op: &str, b: &Formula, out: &mut String) {
    wrapped(a, out);
    out.push_str(op);
    wrapped(b, out);
}

fn wrapped(f: &Formula, out: &mut String) {
    if matches!(f, Formula::Top | Formula::Bot | Formula::Atom(..)) {
        full(f, out);
    } else {
        out.push('(');
        full(f, out);
        out.push(')');
    }
}

fn atom(f: &Formula, out: &mut String) {
    if let Formula::Atom(p, args) = f {
        out.push_str(p.as_str());
        if !args.is_empty() {
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&a.to_string());
            }
            out.push(')');
        }
    }
}

const PREC_QUANT: u8 = 0;
const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_NOT: u8 = 4;
const PREC_ATOM: u8 = 5;

/// Minimal-parenthesis rendering using the parser's precedences, with
/// `A => false` shown as `~A`.
pub fn print_pretty(f: &Formula) -> String {
    pretty(f).0
}

fn pretty(f: &Formula) -> (String, u8) {
    match f {
        Formula::Top => ("true".into(), PREC_ATOM),
        Formula::Bot => ("false".into(), PREC_ATOM),
        Formula::Atom(..) => {
            let mut s = String::new();
            atom(f, &mut s);
            (s, PREC_ATOM)
        }
        Formula::Implies(a, b) if **b == Formula::Bot => (format!("~{}", operand(a, PREC_NOT)), PREC_NOT),
        Formula::And(a, b) => (
            format!("{} /\\ {}", operand(a, PREC_AND), operand(b, PREC_NOT)),
            PREC_AND,
        ),
        Formula::Or(a, b) => (format!("{} \\/ {}", operand(a, PREC_OR), operand(b, PREC_AND)), PREC_OR),
        Formula::Implies(a, b) => (format!("{} => {}", operand(a, PREC_OR), operand(b, PREC_IMP)), PREC_IMP),
        Formula::Exists(x, body) => (format!("exists {x}. {}", pretty(body).0), PREC_QUANT),
        Formula::Forall(x, body) => (format!("forall {x}. {}", pretty(body).0), PREC_QUANT),
    }
}

fn operand(f: &Formula, min: u8) -> String {
    let (s, prec) = pretty(f);
    if prec >= min {
        s
    } else {
        format!("({s})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    #[test]
    fn full_form_is_stable() {
        let f = parse("((p => q) => p) => p").unwrap();
        assert_eq!(print_full(&f), "((p => q) => p) => p");
        let g = parse("forall x. p(x) /\\ ~q(f(x), a)").unwrap();
        assert_eq!(print_full(&g), "forall x. (p(x) /\\ (q(f(x), a) => false))");
    }

    #[test]
    fn pretty_form_uses_precedence() {
        let f = parse("(a /\\ b) \\/ (c => false)").unwrap();
        assert_eq!(print_pretty(&f), "a /\\ b \\/ ~c");
        let g = parse("(forall x. p(x)) /\\ q").unwrap();
        assert_eq!(print_pretty(&g), "(forall x. p(x)) /\\ q");
        let h = parse("a => (b => c)").unwrap();
        assert_eq!(print_pretty(&h), "a => b => c");
        let k = parse("(a => b) => c").unwrap();
        assert_eq!(print_pretty(&k), "(a => b) => c");
    }
}
