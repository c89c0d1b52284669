use thiserror::Error;

use crate::formula::{parse_sequent, Formula, ParseError, ParseOptions, Signature, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Proved,
    NotProved,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusCase {
    /// 1-based line of the sequent.
    pub line: usize,
    pub text: String,
    pub antecedent: Vec<Formula>,
    pub succedent: Formula,
    pub domain: Option<Vec<Symbol>>,
    pub expect: Option<Expect>,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: ParseError },
    #[error("line {line}: {message}")]
    Directive { line: usize, message: String },
}

/// One sequent per line. `# domain: a, b` and `# expect: proved` (or
/// `not-proved`) apply to the next sequent; other `#` lines are comments.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusCase>, CorpusError> {
    let mut cases = Vec::new();
    let mut domain = None;
    let mut expect = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(comment) = t.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(rest) = comment.strip_prefix("domain:") {
                let names: Vec<Symbol> =
                    rest.split(',').map(str::trim).filter(|n| !n.is_empty()).map(Symbol::new).collect();
                if names.is_empty() {
                    return Err(CorpusError::Directive { line, message: "empty domain".into() });
                }
                domain = Some(names);
            } else if let Some(rest) = comment.strip_prefix("expect:") {
                expect = Some(match rest.trim() {
                    "proved" => Expect::Proved,
                    "not-proved" => Expect::NotProved,
                    other => {
                        return Err(CorpusError::Directive { line, message: format!("unknown expectation `{other}`") })
                    }
                });
            }
            continue;
        }
        let (antecedent, succedent) = parse_sequent(t, ParseOptions::default(), &mut Signature::default())
            .map_err(|source| CorpusError::Parse { line, source })?;
        cases.push(CorpusCase {
            line,
            text: t.to_string(),
            antecedent,
            succedent,
            domain: domain.take(),
            expect: expect.take(),
        });
    }
    Ok(cases)
}
