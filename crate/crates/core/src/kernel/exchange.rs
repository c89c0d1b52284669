use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{parse_term_with, parse_with, ParseError, ParseOptions, Signature, Symbol};

use super::{InstanceRef, ProofTree, RuleName, Sequent};

#[derive(Debug, Error)]
pub enum ExchangeError {
    #[error("malformed proof document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad formula `{text}`: {source}")]
    Formula { text: String, source: ParseError },
}

#[derive(Serialize, Deserialize)]
struct SequentDoc {
    antecedent: Vec<String>,
    succedent: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    terms: Vec<String>,
    head: usize,
}

#[derive(Serialize, Deserialize)]
struct NodeDoc {
    rule: RuleName,
    sequent: SequentDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    principal: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eigen: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    instance: Option<InstanceDoc>,
    #[serde(default)]
    premises: Vec<NodeDoc>,
}

fn to_doc(t: &ProofTree) -> NodeDoc {
    let side = |fs: &[crate::formula::Formula]| fs.iter().map(|f| f.to_string()).collect();
    NodeDoc {
        rule: t.rule,
        sequent: SequentDoc { antecedent: side(&t.conclusion.antecedent), succedent: side(&t.conclusion.succedent) },
        principal: t.principal,
        witness: t.witness.as_ref().map(|w| w.to_string()),
        eigen: t.eigen.as_ref().map(|e| e.to_string()),
        instance: t
            .instance
            .as_ref()
            .map(|i| InstanceDoc { terms: i.terms.iter().map(|t| t.to_string()).collect(), head: i.head }),
        premises: t.premises.iter().map(to_doc).collect(),
    }
}

/// Pretty-printed JSON with formulas in the fully parenthesized syntax.
pub fn to_json(t: &ProofTree) -> String {
    serde_json::to_string_pretty(&to_doc(t)).expect("proof documents always serialize")
}

const OPTS: ParseOptions = ParseOptions { allow_reserved: true };

fn formula(text: &str, sig: &mut Signature) -> Result<crate::formula::Formula, ExchangeError> {
    parse_with(text, OPTS, sig).map_err(|source| ExchangeError::Formula { text: text.into(), source })
}

fn term(text: &str, sig: &mut Signature) -> Result<crate::formula::Term, ExchangeError> {
    parse_term_with(text, OPTS, sig).map_err(|source| ExchangeError::Formula { text: text.into(), source })
}

fn from_doc(d: NodeDoc, sig: &mut Signature) -> Result<ProofTree, ExchangeError> {
    let antecedent = d.sequent.antecedent.iter().map(|s| formula(s, sig)).collect::<Result<_, _>>()?;
    let succedent = d.sequent.succedent.iter().map(|s| formula(s, sig)).collect::<Result<_, _>>()?;
    let witness = d.witness.as_deref().map(|w| term(w, sig)).transpose()?;
    let instance = match d.instance {
        Some(i) => Some(InstanceRef {
            terms: i.terms.iter().map(|t| term(t, sig)).collect::<Result<_, _>>()?,
            head: i.head,
        }),
        None => None,
    };
    let premises = d.premises.into_iter().map(|p| from_doc(p, sig)).collect::<Result<_, _>>()?;
    Ok(ProofTree {
        conclusion: Sequent { antecedent, succedent },
        rule: d.rule,
        principal: d.principal,
        witness,
        eigen: d.eigen.as_deref().map(Symbol::new),
        instance,
        premises,
    })
}

/// Reads a proof document. All formulas share one signature, so arity
/// clashes across nodes are reported.
pub fn from_json(text: &str) -> Result<ProofTree, ExchangeError> {
    let doc: NodeDoc = serde_json::from_str(text)?;
    from_doc(doc, &mut Signature::default())
}
