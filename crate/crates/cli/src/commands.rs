use std::fmt::Write as _;
use std::path::Path;

use equindex_core::{
    chern_obstruction, gsv_index, macaulay_colength, AlgebraError, IndexError, IndexOptions, MacaulayOutcome,
    OracleStatus, Problem,
};
use serde_json::json;

use crate::conserve::{conserve, parse_epsilon, ConserveError, DeformationMode, DeformationSpec};
use crate::document::ProblemDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NON_ISOLATED: i32 = 3;
pub const EXIT_GENERICITY: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub oracle: bool,
    pub json: bool,
    pub seed: u64,
    pub epsilon: String,
    pub max_degree: u32,
    pub budget: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            oracle: false,
            json: false,
            seed: 0,
            epsilon: "1/10".to_string(),
            max_degree: equindex_core::oracle::DEFAULT_MAX_DEGREE,
            budget: equindex_core::local_algebra::DEFAULT_STEP_BUDGET,
        }
    }
}

impl Settings {
    fn index_options(&self) -> IndexOptions {
        IndexOptions { budget: self.budget, ..IndexOptions::default() }
    }
}

/// What a command prints and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        let mut stderr = stderr.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code, stdout: String::new(), stderr }
    }
}

struct Loaded {
    document: ProblemDocument,
    problem: Problem,
}

// reads, parses and validates; the error is a finished outcome
fn load(path: &Path) -> Result<Loaded, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_IO, format!("ERROR: cannot read {}: {e}", path.display())))?;
    let document = ProblemDocument::from_json(&text).map_err(|e| Outcome::fail(EXIT_INVALID, format!("ERROR: {e}")))?;
    let problem = document.to_problem().map_err(|e| Outcome::fail(EXIT_INVALID, format!("ERROR: {e}")))?;
    let report = problem.validate();
    if !report.is_valid() {
        return Err(Outcome::fail(EXIT_INVALID, report.to_string()));
    }
    Ok(Loaded { document, problem })
}

fn index_failure(e: &IndexError) -> Outcome {
    let code = match e {
        IndexError::Invalid(_) => EXIT_INVALID,
        IndexError::NonIsolated { .. } => EXIT_NON_ISOLATED,
        IndexError::Budget(AlgebraError::BudgetExceeded { .. }) => EXIT_BUDGET,
        IndexError::GenericityFailure(_) => EXIT_GENERICITY,
    };
    let mut text = match e {
        IndexError::NonIsolated { .. } => format!("NON_ISOLATED: {e}"),
        IndexError::Budget(_) => format!("BUDGET_EXCEEDED: {e}"),
        IndexError::GenericityFailure(_) => format!("GENERICITY_FAILURE: {e}"),
        IndexError::Invalid(_) => e.to_string(),
    };
    if let IndexError::NonIsolated { generators } = e {
        for g in generators {
            let _ = write!(text, "\n  generator {g}");
        }
    }
    Outcome::fail(code, text)
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn cmd_validate(path: &Path, settings: &Settings) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_IO, format!("ERROR: cannot read {}: {e}", path.display())),
    };
    let problem = match ProblemDocument::from_json(&text).and_then(|d| d.to_problem()) {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_INVALID, format!("ERROR: {e}")),
    };
    let report = problem.validate();
    let code = if report.is_valid() { EXIT_OK } else { EXIT_INVALID };
    let stdout = if settings.json {
        pretty(&json!({
            "valid": report.is_valid(),
            "errors": report.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "notes": report.notes,
        }))
    } else {
        let mut text = report.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        text
    };
    Outcome { code, stdout, stderr: String::new() }
}

pub fn cmd_index(path: &Path, settings: &Settings) -> Outcome {
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let mut report = match gsv_index(&loaded.problem, &settings.index_options()) {
        Ok(r) => r,
        Err(e) => return index_failure(&e),
    };
    if settings.oracle {
        let generators = loaded.problem.assemble_ideal().expect("validated");
        let nvars = loaded.problem.rep().fixed_block().len();
        let outcome = macaulay_colength(nvars, &generators, settings.max_degree);
        let (verdict, oracle_value) = match outcome {
            MacaulayOutcome::Colength(n) if n == report.value => ("AGREE", Some(n)),
            MacaulayOutcome::Colength(n) => ("DISAGREE", Some(n)),
            MacaulayOutcome::NotStabilized => ("INCONCLUSIVE", None),
        };
        report.oracle =
            OracleStatus::Ran { verdict: verdict.to_string(), oracle_value, max_degree: settings.max_degree };
    }
    if settings.json {
        return Outcome::ok(pretty(&json!({ "report": report, "problem": loaded.document })));
    }
    let mut out = format!("INDEX {}\n", report.value);
    if let OracleStatus::Ran { verdict, oracle_value, max_degree } = &report.oracle {
        match (verdict.as_str(), oracle_value) {
            ("DISAGREE", Some(n)) => writeln!(out, "ORACLE DISAGREE (oracle {n})"),
            ("INCONCLUSIVE", _) => writeln!(out, "ORACLE INCONCLUSIVE (not stabilized by degree {max_degree})"),
            _ => writeln!(out, "ORACLE {verdict}"),
        }
        .expect("string write");
    }
    Outcome::ok(out)
}

pub fn cmd_chern(path: &Path, settings: &Settings) -> Outcome {
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let report = match chern_obstruction(&loaded.problem, settings.seed, &settings.index_options()) {
        Ok(r) => r,
        Err(e) => return index_failure(&e),
    };
    if settings.json {
        return Outcome::ok(pretty(&json!({ "report": report, "problem": loaded.document })));
    }
    Outcome::ok(format!(
        "CHERN {}\nINDEX {}\nGENERIC_INDEX {}\nSEEDS {} {}\n",
        report.value, report.index, report.generic_index, report.seeds[0], report.seeds[1]
    ))
}

pub fn cmd_conserve(path: &Path, settings: &Settings) -> Outcome {
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let Some(epsilon) = parse_epsilon(&settings.epsilon) else {
        return Outcome::fail(EXIT_INVALID, format!("ERROR: epsilon \"{}\" is not a rational p/q", settings.epsilon));
    };
    let mode = match loaded.document.perturbations(&loaded.problem) {
        Ok(Some(perturbations)) => DeformationMode::User { perturbations },
        Ok(None) => DeformationMode::ConstantShift { seed: settings.seed },
        Err(e) => return Outcome::fail(EXIT_INVALID, format!("ERROR: {e}")),
    };
    let spec = DeformationSpec { epsilon, mode };
    let report = match conserve(&loaded.problem, &spec, &settings.index_options()) {
        Ok(r) => r,
        Err(ConserveError::Index(e)) => return index_failure(&e),
        Err(ConserveError::Budget(e)) => return Outcome::fail(EXIT_BUDGET, format!("BUDGET_EXCEEDED: {e}")),
        Err(e @ ConserveError::DeformedInfinite { .. }) => {
            return Outcome::fail(EXIT_NON_ISOLATED, format!("INFINITE: {e}"))
        }
        Err(e) => return Outcome::fail(EXIT_INVALID, format!("ERROR: {e}")),
    };
    if settings.json {
        return Outcome::ok(pretty(&json!({ "report": report, "problem": loaded.document })));
    }
    let mut out =
        format!("LOCAL {}  GLOBAL_DEFORMED {}\nVERDICT {}\n", report.local, report.global_deformed, report.verdict);
    match report.seed {
        Some(seed) => writeln!(out, "MODE {} EPSILON {} SEED {seed}", report.mode, report.epsilon),
        None => writeln!(out, "MODE {} EPSILON {}", report.mode, report.epsilon),
    }
    .expect("string write");
    if let Some(note) = &report.note {
        writeln!(out, "NOTE {note}").expect("string write");
    }
    Outcome::ok(out)
}
