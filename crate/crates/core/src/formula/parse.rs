//! Recursive-descent parser for the ASCII formula and sequent syntax.
//!
//! Precedence, tightest first: `~`, `/\`, `\/`, `=>`. Conjunction and
//! disjunction associate to the left, implication to the right. A
//! quantifier body extends as far right as possible.

use std::collections::BTreeMap;

use thiserror::Error;

use super::{Formula, MetaId, Symbol, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("arity mismatch at {pos}: {kind} `{name}` used with {found} argument(s), earlier with {expected}")]
    Arity {
        pos: usize,
        kind: &'static str,
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("reserved name `{name}` at {pos}: identifiers starting with `_` are generated internally")]
    Reserved { pos: usize, name: String },
}

/// Arities seen so far, shared across all formulas of one problem.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    pub predicates: BTreeMap<Symbol, usize>,
    pub functions: BTreeMap<Symbol, usize>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Accept `_`-prefixed names and `?N` metavariables, as emitted by the
    /// transformer and the engine.
    pub allow_reserved: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Meta(u32),
    LParen,
    RParen,
    Comma,
    Dot,
    And,
    Or,
    Implies,
    Not,
    Turnstile,
    Semi,
    True,
    False,
    Forall,
    Exists,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Meta(n) => format!("metavariable `?{n}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::And => "`/\\`".into(),
            Tok::Or => "`\\/`".into(),
            Tok::Implies => "`=>`".into(),
            Tok::Not => "`~`".into(),
            Tok::Turnstile => "`|-`".into(),
            Tok::Semi => "`;`".into(),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Forall => "`forall`".into(),
            Tok::Exists => "`exists`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { pos, message: message.into() }
}

fn tokenize(text: &str, opts: ParseOptions) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'(' => {
                out.push((Tok::LParen, start));
                i += 1;
            }
            b')' => {
                out.push((Tok::RParen, start));
                i += 1;
            }
            b',' => {
                out.push((Tok::Comma, start));
                i += 1;
            }
            b'.' => {
                out.push((Tok::Dot, start));
                i += 1;
            }
            b';' => {
                out.push((Tok::Semi, start));
                i += 1;
            }
            b'~' => {
                out.push((Tok::Not, start));
                i += 1;
            }
            b'/' if bytes.get(i + 1) == Some(&b'\\') => {
                out.push((Tok::And, start));
                i += 2;
            }
            b'\\' if bytes.get(i + 1) == Some(&b'/') => {
                out.push((Tok::Or, start));
                i += 2;
            }
            b'=' if bytes.get(i + 1) == Some(&b'>') => {
                out.push((Tok::Implies, start));
                i += 2;
            }
            b'|' if bytes.get(i + 1) == Some(&b'-') => {
                out.push((Tok::Turnstile, start));
                i += 2;
            }
            b'?' if opts.allow_reserved => {
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[digits_start..i]
                    .parse::<u32>()
                    .map_err(|_| syntax(start, "expected digits after `?`"))?;
                out.push((Tok::Meta(n), start));
            }
            c if c.is_ascii_lowercase() || c.is_ascii_digit() || c == b'_' => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                if word.starts_with('_') && !opts.allow_reserved {
                    return Err(ParseError::Reserved { pos: start, name: word.to_string() });
                }
                let tok = match word {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    "forall" => Tok::Forall,
                    "exists" => Tok::Exists,
                    _ => Tok::Ident(word.to_string()),
                };
                out.push((tok, start));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        }
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    bound: Vec<Symbol>,
    sig: &'a mut Signature,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(
                self.pos(),
                format!("expected {}, found {}", want.describe(), self.peek().describe()),
            ))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let rhs = self.formula()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.conjunction()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Forall | Tok::Exists => {
                let (q, _) = self.bump();
                let pos = self.pos();
                let x = match self.bump().0 {
                    Tok::Ident(x) => Symbol::new(&x),
                    other => return Err(syntax(pos, format!("expected a variable, found {}", other.describe()))),
                };
                self.expect(Tok::Dot)?;
                self.bound.push(x.clone());
                let body = self.formula();
                self.bound.pop();
                let body = Box::new(body?);
                Ok(if q == Tok::Forall { Formula::Forall(x, body) } else { Formula::Exists(x, body) })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        match self.bump().0 {
            Tok::True => Ok(Formula::Top),
            Tok::False => Ok(Formula::Bot),
            Tok::LParen => {
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(name) => {
                let name = Symbol::new(&name);
                if self.bound.contains(&name) {
                    return Err(syntax(pos, format!("bound variable `{name}` used as a predicate")));
                }
                let args = self.arguments()?;
                check_arity(&mut self.sig.predicates, "predicate", &name, args.len(), pos)?;
                Ok(Formula::Atom(name, args))
            }
            other => Err(syntax(pos, format!("expected a formula, found {}", other.describe()))),
        }
    }

    fn arguments(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut args = Vec::new();
        if *self.peek() == Tok::LParen {
            self.bump();
            loop {
                args.push(self.term()?);
                match self.peek() {
                    Tok::Comma => {
                        self.bump();
                    }
                    Tok::RParen => {
                        self.bump();
                        break;
                    }
                    other => {
                        return Err(syntax(self.pos(), format!("expected `,` or `)`, found {}", other.describe())))
                    }
                }
            }
        }
        Ok(args)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let pos = self.pos();
        match self.bump().0 {
            Tok::Meta(n) => Ok(Term::Meta(MetaId(n))),
            Tok::Ident(name) => {
                let name = Symbol::new(&name);
                if self.bound.contains(&name) {
                    if *self.peek() == Tok::LParen {
                        return Err(syntax(pos, format!("bound variable `{name}` applied to arguments")));
                    }
                    return Ok(Term::Var(name));
                }
                let args = self.arguments()?;
                check_arity(&mut self.sig.functions, "function", &name, args.len(), pos)?;
                Ok(if args.is_empty() { Term::Const(name) } else { Term::App(name, args) })
            }
            other => Err(syntax(pos, format!("expected a term, found {}", other.describe()))),
        }
    }
}

fn check_arity(
    table: &mut BTreeMap<Symbol, usize>,
    kind: &'static str,
    name: &Symbol,
    found: usize,
    pos: usize,
) -> Result<(), ParseError> {
    match table.get(name) {
        Some(&expected) if expected != found => Err(ParseError::Arity {
            pos,
            kind,
            name: name.to_string(),
            expected,
            found,
        }),
        Some(_) => Ok(()),
        None => {
            table.insert(name.clone(), found);
            Ok(())
        }
    }
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    parse_with(text, ParseOptions::default(), &mut Signature::default())
}

pub fn parse_with(text: &str, opts: ParseOptions, sig: &mut Signature) -> Result<Formula, ParseError> {
    let mut p = Parser { toks: tokenize(text, opts)?, at: 0, bound: Vec::new(), sig };
    let f = p.formula()?;
    if *p.peek() != Tok::Eof {
        return Err(syntax(p.pos(), format!("unexpected {} after formula", p.peek().describe())));
    }
    Ok(f)
}

/// Parses a closed term such as a recorded witness.
pub fn parse_term_with(text: &str, opts: ParseOptions, sig: &mut Signature) -> Result<Term, ParseError> {
    let mut p = Parser { toks: tokenize(text, opts)?, at: 0, bound: Vec::new(), sig };
    let t = p.term()?;
    if *p.peek() != Tok::Eof {
        return Err(syntax(p.pos(), format!("unexpected {} after term", p.peek().describe())));
    }
    Ok(t)
}

/// Parses `D1; ...; Dn |- G`. All formulas share one signature.
pub fn parse_sequent(
    text: &str,
    opts: ParseOptions,
    sig: &mut Signature,
) -> Result<(Vec<Formula>, Formula), ParseError> {
    let mut p = Parser { toks: tokenize(text, opts)?, at: 0, bound: Vec::new(), sig };
    let mut antecedent = Vec::new();
    if *p.peek() != Tok::Turnstile {
        loop {
            antecedent.push(p.formula()?);
            match p.peek() {
                Tok::Semi => {
                    p.bump();
                }
                Tok::Turnstile => break,
                other => {
                    return Err(syntax(p.pos(), format!("expected `;` or `|-`, found {}", other.describe())));
                }
            }
        }
    }
    p.expect(Tok::Turnstile)?;
    let goal = p.formula()?;
    if *p.peek() != Tok::Eof {
        return Err(syntax(p.pos(), format!("unexpected {} after goal", p.peek().describe())));
    }
    Ok((antecedent, goal))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prop(s: &str) -> Formula {
        Formula::prop(s)
    }

    #[test]
    fn peirce_parses_right_nested() {
        let f = parse("((p => q) => p) => p").unwrap();
        let want = Formula::implies(
            Formula::implies(Formula::implies(prop("p"), prop("q")), prop("p")),
            prop("p"),
        );
        assert_eq!(f, want);
    }

    #[test]
    fn constants_true_false() {
        assert_eq!(parse("true").unwrap(), Formula::Top);
        assert_eq!(parse("false").unwrap(), Formula::Bot);
    }

    #[test]
    fn exists_binds_variable() {
        let f = parse("exists x. p(x)").unwrap();
        assert_eq!(f, Formula::exists("x", Formula::atom("p", vec![Term::var("x")])));
    }

    #[test]
    fn negation_is_implication_to_false() {
        assert_eq!(parse("~p").unwrap(), Formula::not(prop("p")));
        assert_eq!(parse("~~p").unwrap(), Formula::not(Formula::not(prop("p"))));
        // `~` binds tighter than `/\`.
        assert_eq!(parse("~p /\\ q").unwrap(), Formula::and(Formula::not(prop("p")), prop("q")));
    }

    #[test]
    fn precedence_and_associativity() {
        let f = parse("a /\\ b \\/ c => d => e").unwrap();
        let want = Formula::implies(
            Formula::or(Formula::and(prop("a"), prop("b")), prop("c")),
            Formula::implies(prop("d"), prop("e")),
        );
        assert_eq!(f, want);
        assert_eq!(
            parse("a \\/ b \\/ c").unwrap(),
            Formula::or(Formula::or(prop("a"), prop("b")), prop("c"))
        );
    }

    #[test]
    fn quantifier_scope_is_maximal() {
        let f = parse("forall x. q(x) \\/ r").unwrap();
        assert!(matches!(f, Formula::Forall(_, ref b) if matches!(**b, Formula::Or(..))));
        let g = parse("p /\\ exists x. q(x) => r").unwrap();
        match g {
            Formula::And(_, rhs) => assert!(matches!(*rhs, Formula::Exists(..))),
            other => panic!("unexpected parse {other:?}"),
        }
    }

    #[test]
    fn unbound_identifiers_are_constants() {
        let f = parse("q(x, f(a))").unwrap();
        assert_eq!(
            f,
            Formula::atom("q", vec![Term::constant("x"), Term::app("f", vec![Term::constant("a")])])
        );
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let err = parse("p(a) /\\ p(a, b)").unwrap_err();
        assert!(matches!(err, ParseError::Arity { ref name, expected: 1, found: 2, .. } if name == "p"));
        let err = parse("q(f(a)) \\/ q(f)").unwrap_err();
        assert!(matches!(err, ParseError::Arity { kind: "function", .. }));
    }

    #[test]
    fn arity_is_checked_across_a_sequent() {
        let err = parse_sequent("p(a); q |- p", ParseOptions::default(), &mut Signature::default()).unwrap_err();
        assert!(matches!(err, ParseError::Arity { .. }));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("p /\\ ").unwrap_err() {
            ParseError::Syntax { pos, .. } => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        match parse("p q").unwrap_err() {
            ParseError::Syntax { pos, .. } => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse("P").is_err());
        assert!(parse("(p").is_err());
    }

    #[test]
    fn reserved_names_need_opt_in() {
        assert!(matches!(parse("p(_h1)"), Err(ParseError::Reserved { .. })));
        let opts = ParseOptions { allow_reserved: true };
        let f = parse_with("p(_h1, ?4)", opts, &mut Signature::default()).unwrap();
        assert_eq!(f, Formula::atom("p", vec![Term::constant("_h1"), Term::Meta(MetaId(4))]));
    }

    #[test]
    fn sequents_with_and_without_antecedent() {
        let mut sig = Signature::default();
        let (ante, goal) = parse_sequent("|- p", ParseOptions::default(), &mut sig).unwrap();
        assert!(ante.is_empty());
        assert_eq!(goal, prop("p"));
        let (ante, _) =
            parse_sequent("p \\/ q; p => r; q => r |- r", ParseOptions::default(), &mut Signature::default())
                .unwrap();
        assert_eq!(ante.len(), 3);
        let (_, goal) = parse_sequent("# comment\n|- q # trailing\n", ParseOptions::default(), &mut sig).unwrap();
        assert_eq!(goal, prop("q"));
    }
}
