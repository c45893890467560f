//! Subcommand bodies. Each returns its exit code and output instead of
//! printing, so the verification suite can run them in-process.

use std::path::Path;

use posetlab_core::analysis::{
    normality_violation, rank_log_concavity_violation, rank_symmetry_violation, rank_unimodality_violation,
    strong_sperner_violation,
};
use posetlab_core::{find_isomorphism, Poset, PosetError};

use crate::dot::to_dot;
use crate::eval::{evaluate, EvalError};
use crate::expr::parse;
use crate::report::{
    describe_log_concavity, describe_normality, describe_sperner, describe_symmetry, describe_unimodality,
    ReportDocument,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EVAL: i32 = 3;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        CommandOutput { code, stdout: String::new(), stderr }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Property {
    Symmetric,
    Unimodal,
    Logconcave,
    Normal,
    Sperner,
}

fn build(text: &str) -> Result<Poset, CommandOutput> {
    let expr = parse(text).map_err(|e| CommandOutput::fail(EXIT_USAGE, format!("{e}\n")))?;
    evaluate(&expr).map_err(|e: EvalError| CommandOutput::fail(EXIT_EVAL, format!("error: {e}\n")))
}

pub fn report(expr: &str, json: bool) -> CommandOutput {
    let p = match build(expr) {
        Ok(p) => p,
        Err(out) => return out,
    };
    let doc = ReportDocument::build(expr, &p);
    CommandOutput::ok(if json { doc.to_json() + "\n" } else { doc.to_table(&p) })
}

pub fn dot(expr: &str, out: Option<&Path>) -> CommandOutput {
    let p = match build(expr) {
        Ok(p) => p,
        Err(out) => return out,
    };
    let text = to_dot(&p);
    match out {
        None => CommandOutput::ok(text),
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => CommandOutput::ok(String::new()),
            Err(e) => CommandOutput::fail(EXIT_EVAL, format!("error: cannot write {}: {e}\n", path.display())),
        },
    }
}

pub fn whitney(expr: &str) -> CommandOutput {
    let p = match build(expr) {
        Ok(p) => p,
        Err(out) => return out,
    };
    match p.whitney() {
        Ok(w) => CommandOutput::ok(format!("{w}\n")),
        Err(e) => CommandOutput::fail(EXIT_EVAL, format!("error: {e}\n")),
    }
}

pub fn check(expr: &str, property: Property) -> CommandOutput {
    let p = match build(expr) {
        Ok(p) => p,
        Err(out) => return out,
    };
    let (name, verdict) = match property {
        Property::Symmetric => ("symmetric", rank_symmetry_violation(&p).map(|w| w.map(|w| describe_symmetry(&w)))),
        Property::Unimodal => ("unimodal", rank_unimodality_violation(&p).map(|w| w.map(|w| describe_unimodality(&w)))),
        Property::Logconcave => {
            ("logconcave", rank_log_concavity_violation(&p).map(|w| w.map(|w| describe_log_concavity(&w))))
        }
        Property::Normal => ("normal", normality_violation(&p).map(|w| w.map(|w| describe_normality(&w, &p)))),
        Property::Sperner => ("sperner", strong_sperner_violation(&p).map(|w| w.map(|w| describe_sperner(&w, &p)))),
    };
    match verdict {
        Ok(None) => CommandOutput::ok(format!("{name}: true\n")),
        Ok(Some(witness)) => CommandOutput {
            code: EXIT_FALSE,
            stdout: format!("{name}: false\n{witness}\n"),
            stderr: String::new(),
        },
        Err(PosetError::NotGraded) => CommandOutput::fail(EXIT_EVAL, format!("{name}: not graded\n")),
        Err(e) => CommandOutput::fail(EXIT_EVAL, format!("error: {e}\n")),
    }
}

pub fn iso(left: &str, right: &str) -> CommandOutput {
    let (p, q) = match (build(left), build(right)) {
        (Ok(p), Ok(q)) => (p, q),
        (Err(out), _) | (_, Err(out)) => return out,
    };
    match find_isomorphism(&p, &q) {
        Some(map) => {
            let mut s = String::from("isomorphic\n");
            for (x, &y) in map.iter().enumerate() {
                s.push_str(&format!("  {} -> {}\n", p.label(x), q.label(y)));
            }
            CommandOutput::ok(s)
        }
        None => CommandOutput { code: EXIT_FALSE, stdout: "not isomorphic\n".into(), stderr: String::new() },
    }
}

pub fn verify_paper() -> CommandOutput {
    let results = crate::suite::run_all();
    let table = crate::suite::render(&results);
    let code = if results.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_FALSE };
    CommandOutput { code, stdout: table, stderr: String::new() }
}
