//! The `uniprove` command line: `prove`, `check`, `transform`, `compare`.
//!
//! Exit codes: `prove` returns 0 when proved, 1 when not proved within the
//! bound, 2 on unreadable input or a fragment violation. `check` returns 0
//! iff the proof passes, 1 with a violation listing otherwise, 2 when the
//! document cannot be read. `compare` returns 0 iff there are no
//! disagreements.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::engine::{expand_to_og, prove, SearchConfig, Stats};
use crate::formula::{parse_sequent, parse_with, Formula, ParseOptions, Signature};
use crate::kernel::{check, from_json, to_json, Discipline};
use crate::oracle::{differential, gen::Generator, parse_corpus, prop_valid, Problem};
use crate::transform::{normalize, NormalizeOptions};

#[derive(Parser, Debug)]
#[command(name = "uniprove", version, about = "Goal-directed proof search for classical first-order logic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalize and prove the sequent `D1; ...; Dn |- G` in a file.
    Prove {
        input: PathBuf,
        #[arg(long, default_value_t = 200)]
        max_sequents: usize,
        #[arg(long)]
        no_restart: bool,
        /// Print one line per rule application to standard error.
        #[arg(long)]
        trace: bool,
        /// Write the reduced proof document here.
        #[arg(long)]
        emit_proof: Option<PathBuf>,
        /// Write the expanded goal-relative proof document here.
        #[arg(long)]
        emit_og: Option<PathBuf>,
        #[arg(long)]
        stats: bool,
    },
    /// Check a proof document against a discipline.
    Check {
        proof: PathBuf,
        #[arg(long, value_enum)]
        discipline: DisciplineArg,
        /// Top-level goal for ig, og and reduced; defaults to the root
        /// succedent.
        #[arg(long)]
        goal: Option<String>,
    },
    /// Print the normalized clauses and goal of a sequent file.
    Transform {
        input: PathBuf,
        /// Plain lines instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Run engine and oracle side by side on a corpus or random problems.
    Compare {
        corpus: Option<PathBuf>,
        #[arg(long, conflicts_with = "corpus")]
        random: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        max_sequents: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DisciplineArg {
    C,
    I,
    Uniform,
    Ig,
    Og,
    Reduced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Proved,
    NotProvedAtBound,
    /// Not proved, and the truth-table oracle finds a countermodel.
    Invalid,
}

#[derive(Debug, Serialize)]
pub struct RunOutput {
    pub verdict: Verdict,
    pub bound: usize,
    pub clauses: Vec<String>,
    pub goal: String,
    pub transform: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<Stats>,
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Prove { input, max_sequents, no_restart, trace, emit_proof, emit_og, stats } => {
            let mut cfg = SearchConfig::with_max(max_sequents);
            cfg.restart_enabled = !no_restart;
            cfg.trace = trace;
            cmd_prove(&input, &cfg, emit_proof.as_deref(), emit_og.as_deref(), stats, out, err)
        }
        Command::Check { proof, discipline, goal } => cmd_check(&proof, discipline, goal.as_deref(), out),
        Command::Transform { input, text } => cmd_transform(&input, text, out),
        Command::Compare { corpus, random, seed, max_sequents } => {
            cmd_compare(corpus.as_deref(), random, seed, max_sequents, out)
        }
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

type CmdResult = Result<i32, String>;

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_sequent(path: &Path) -> Result<(Vec<Formula>, Formula), String> {
    let text = read(path)?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| format!("{}: no sequent found", path.display()))?;
    parse_sequent(line, ParseOptions::default(), &mut Signature::default()).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_json(to: &mut dyn Write, value: &impl Serialize) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    writeln!(to, "{text}").map_err(|e| e.to_string())
}

fn cmd_prove(
    input: &Path,
    cfg: &SearchConfig,
    emit_proof: Option<&Path>,
    emit_og: Option<&Path>,
    want_stats: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let (ante, succ) = read_sequent(input)?;
    let np = normalize(&ante, &succ, NormalizeOptions::default()).map_err(|e| e.to_string())?;
    let result = prove(&np.clauses, &np.goal, cfg).map_err(|e| e.to_string())?;
    for line in &result.trace {
        writeln!(err, "{line}").map_err(|e| e.to_string())?;
    }
    let verdict = if let Some(proof) = &result.proof {
        let reduced = check(proof, &Discipline::Reduced(np.goal.clone()));
        let og = expand_to_og(proof, &np.goal);
        let og_report = check(&og, &Discipline::OG(np.goal.clone()));
        if let Some(v) = reduced.violations.first().or(og_report.violations.first()) {
            return Err(format!("internal error: the kernel rejected the proof: {v}"));
        }
        if let Some(p) = emit_proof {
            std::fs::write(p, to_json(proof)).map_err(|e| format!("{}: {e}", p.display()))?;
        }
        if let Some(p) = emit_og {
            std::fs::write(p, to_json(&og)).map_err(|e| format!("{}: {e}", p.display()))?;
        }
        Verdict::Proved
    } else if prop_valid(&ante, &succ) == Ok(false) {
        Verdict::Invalid
    } else {
        Verdict::NotProvedAtBound
    };
    let output = RunOutput {
        verdict,
        bound: result.stats.bound,
        clauses: np.clauses.iter().map(|c| c.to_string()).collect(),
        goal: np.goal.to_string(),
        transform: np.trace.clone(),
        stats: want_stats.then(|| result.stats.clone()),
    };
    write_json(out, &output)?;
    Ok(if verdict == Verdict::Proved { 0 } else { 1 })
}

fn cmd_check(path: &Path, d: DisciplineArg, goal: Option<&str>, out: &mut dyn Write) -> CmdResult {
    let tree = from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let goal = match goal {
        Some(g) => parse_with(g, ParseOptions { allow_reserved: true }, &mut Signature::default())
            .map_err(|e| format!("--goal: {e}"))?,
        None => tree.conclusion.succedent.first().cloned().ok_or("the root sequent has an empty succedent")?,
    };
    let discipline = match d {
        DisciplineArg::C => Discipline::C,
        DisciplineArg::I => Discipline::I,
        DisciplineArg::Uniform => Discipline::Uniform,
        DisciplineArg::Ig => Discipline::IG(goal),
        DisciplineArg::Og => Discipline::OG(goal),
        DisciplineArg::Reduced => Discipline::Reduced(goal),
    };
    let report = check(&tree, &discipline);
    let io = |e: std::io::Error| e.to_string();
    if report.ok {
        writeln!(out, "ok: {} sequents, discipline {discipline}", tree.size()).map_err(io)?;
        Ok(0)
    } else {
        for v in &report.violations {
            writeln!(out, "{v}").map_err(io)?;
        }
        writeln!(out, "{} violation(s)", report.violations.len()).map_err(io)?;
        Ok(1)
    }
}

fn cmd_transform(input: &Path, text: bool, out: &mut dyn Write) -> CmdResult {
    let (ante, succ) = read_sequent(input)?;
    let np = normalize(&ante, &succ, NormalizeOptions::default()).map_err(|e| e.to_string())?;
    if text {
        out.write_all(np.to_text().as_bytes()).map_err(|e| e.to_string())?;
    } else {
        write_json(out, &np)?;
    }
    Ok(0)
}

fn cmd_compare(corpus: Option<&Path>, random: Option<usize>, seed: u64, max: usize, out: &mut dyn Write) -> CmdResult {
    let problems: Vec<Problem> = match (corpus, random) {
        (Some(path), _) => {
            let cases = parse_corpus(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
            cases.into_iter().map(Problem::from).collect()
        }
        (None, Some(n)) => {
            let mut g = Generator::new(seed);
            (0..n).map(|_| g.reduced_problem()).collect()
        }
        (None, None) => return Err("give a corpus file or --random N".into()),
    };
    let report = differential(problems, &SearchConfig::with_max(max));
    write!(out, "{report}").map_err(|e| e.to_string())?;
    Ok(if report.disagreements == 0 { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("uniprove").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn file(dir: &Path, name: &str, text: &str) -> String {
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }

    fn scratch(tag: &str) -> PathBuf {
        let d = std::env::temp_dir().join(format!("uniprove-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&d).unwrap();
        d
    }

    #[test]
    fn prove_exit_codes() {
        let d = scratch("prove");
        let (code, out, _) = call(&["prove", &file(&d, "peirce.seq", "|- ((p => q) => p) => p\n"), "--stats"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "proved");
        assert!(v["stats"]["restart"].as_u64().unwrap() >= 1);
        assert_eq!(call(&["prove", &file(&d, "nt.seq", "p |- q\n")]).0, 1);
        assert_eq!(call(&["prove", &file(&d, "bad.seq", "p |- \n")]).0, 2);
        assert_eq!(call(&["prove", "/nonexistent/x.seq"]).0, 2);
    }

    #[test]
    fn arity_clash_is_an_input_error() {
        let d = scratch("arity");
        let (code, _, err) = call(&["prove", &file(&d, "f.seq", "p(a) |- p(a, b)\n")]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"), "{err}");
    }

    #[test]
    fn emitted_documents_check() {
        let d = scratch("emit");
        let input = file(&d, "ex.seq", "p(a) \\/ p(b) |- exists x. p(x)\n");
        let proof = d.join("reduced.json").to_string_lossy().into_owned();
        let og = d.join("og.json").to_string_lossy().into_owned();
        assert_eq!(call(&["prove", &input, "--emit-proof", &proof, "--emit-og", &og]).0, 0);
        assert_eq!(call(&["check", &proof, "--discipline", "reduced"]).0, 0);
        assert_eq!(call(&["check", &og, "--discipline", "og", "--goal", "exists x. p(x)"]).0, 0);
        let (code, out, _) = call(&["check", &og, "--discipline", "uniform"]);
        assert_eq!(code, 1);
        assert!(out.contains("violation"));
        let text = std::fs::read_to_string(&og).unwrap();
        let truncated = file(&d, "cut.json", &text[..text.len() / 2]);
        assert_eq!(call(&["check", &truncated, "--discipline", "og"]).0, 2);
    }

    #[test]
    fn transform_outputs() {
        let d = scratch("transform");
        let (code, out, _) = call(&["transform", &file(&d, "t.seq", "p /\\ q |- r\n"), "--text"]);
        assert_eq!(code, 0);
        assert_eq!(out, "clause p\nclause q\ngoal r\n");
        let (_, out, _) = call(&["transform", &file(&d, "e.seq", "exists x. d(x) |- g\n")]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["clauses"][0], "d(_h1)");
    }

    #[test]
    fn compare_exit_codes() {
        let d = scratch("compare");
        assert_eq!(call(&["compare", &file(&d, "ok.txt", "|- p => p\np |- q\n")]).0, 0);
        assert_eq!(call(&["compare", &file(&d, "bad.txt", "# expect: not-proved\n|- p => p\n")]).0, 1);
        assert_eq!(call(&["compare", "--random", "20", "--seed", "42"]).0, 0);
        assert_eq!(call(&["compare"]).0, 2);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
