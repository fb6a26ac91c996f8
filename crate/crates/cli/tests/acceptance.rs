//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each, and exits nonzero if any failed.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use equindex::commands::{cmd_chern, cmd_conserve, cmd_index, cmd_validate, Outcome, Settings};
use equindex::ProblemDocument;
use equindex_core::random::{random_problem, RandomProblemParams};
use equindex_core::{
    chern_obstruction, cross_check, global_colength, gsv_index, local_colength, parse, sample_generic_linear, Budget,
    Colength, CrossCheck, IndexOptions, Problem, Rational,
};

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn doc(name: &str) -> PathBuf {
    corpus_dir().join(name)
}

fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<_> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
}

fn problem_of(path: &Path) -> Option<Problem> {
    let text = std::fs::read_to_string(path).ok()?;
    let problem = ProblemDocument::from_json(&text).ok()?.to_problem().ok()?;
    problem.validate().is_valid().then_some(problem)
}

/// Valid corpus problems with a finite index.
fn finite_corpus() -> Vec<(String, Problem, u64)> {
    corpus_files()
        .iter()
        .filter_map(|p| {
            let problem = problem_of(p)?;
            let value = gsv_index(&problem, &IndexOptions::default()).ok()?.value;
            Some((p.file_name()?.to_string_lossy().into_owned(), problem, value))
        })
        .collect()
}

fn expect_output(outcome: &Outcome, lines: &[&str]) -> Result<(), String> {
    if outcome.code != 0 {
        return Err(format!("exit {}: {}", outcome.code, outcome.stderr.trim()));
    }
    for line in lines {
        if !outcome.stdout.lines().any(|l| l == *line) {
            return Err(format!("missing \"{line}\" in {:?}", outcome.stdout));
        }
    }
    Ok(())
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let elapsed = start.elapsed();
    if elapsed > limit {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn oracle_settings() -> Settings {
    Settings { oracle: true, ..Settings::default() }
}

fn smooth_point() -> Result<String, String> {
    let start = Instant::now();
    expect_output(&cmd_index(&doc("smooth_x_dx.json"), &oracle_settings()), &["INDEX 1", "ORACLE AGREE"])?;
    within(Duration::from_secs(1), start)?;
    Ok("x dx has index 1".into())
}

fn a1_curve() -> Result<String, String> {
    let start = Instant::now();
    expect_output(&cmd_index(&doc("a1_dx.json"), &oracle_settings()), &["INDEX 2", "ORACLE AGREE"])?;
    expect_output(&cmd_index(&doc("a1_xdx_minus_ydy.json"), &oracle_settings()), &["INDEX 4", "ORACLE AGREE"])?;
    for seed in [0, 11, 22, 33, 44] {
        let settings = Settings { seed, ..Settings::default() };
        expect_output(&cmd_chern(&doc("a1_xdx_minus_ydy.json"), &settings), &["CHERN 2"])
            .map_err(|e| format!("seed {seed}: {e}"))?;
    }
    within(Duration::from_secs(5), start)?;
    Ok("INDEX(dx) = 2, INDEX(x dx - y dy) = 4, CHERN 2 for 5 seeds".into())
}

fn z2_suite() -> Result<String, String> {
    let start = Instant::now();
    expect_output(&cmd_index(&doc("z2_sign_pair.json"), &oracle_settings()), &["INDEX 2", "ORACLE AGREE"])?;
    expect_output(&cmd_index(&doc("z2_trivial_pair.json"), &oracle_settings()), &["INDEX 4", "ORACLE AGREE"])?;
    within(Duration::from_secs(5), start)?;
    Ok("sign pair 2, trivial pair 4".into())
}

fn oracle_equivalence() -> Result<String, String> {
    let start = Instant::now();
    let params = RandomProblemParams { max_vars: 4, coefficient_bound: 5, ..RandomProblemParams::default() };
    let options = IndexOptions { budget: 200_000, ..IndexOptions::default() };
    let (mut agreed, mut drawn) = (0, 0);
    for seed in 0..1000u64 {
        drawn += 1;
        let problem: Problem = random_problem(seed, &params);
        // only problems with a finite index take part
        if gsv_index(&problem, &options).is_err() {
            continue;
        }
        match cross_check(&problem, 12, &options) {
            Ok(CrossCheck::Agree(_)) => agreed += 1,
            other => return Err(format!("seed {seed}: {other:?}")),
        }
        if agreed == 25 {
            break;
        }
    }
    if agreed < 20 {
        return Err(format!("only {agreed} finite problems"));
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{agreed} finite random problems agree ({drawn} drawn)"))
}

fn genericity() -> Result<String, String> {
    let options = IndexOptions::default();
    let icis: Vec<_> = finite_corpus().into_iter().filter(|(_, p, _)| !p.equations().is_empty()).collect();
    if icis.is_empty() {
        return Err("no ICIS in the corpus".into());
    }
    for (name, problem, _) in &icis {
        for seed in [0u64, 10, 20, 30, 40] {
            // the two draws seed and seed + 1 must agree inside chern_obstruction
            chern_obstruction(problem, seed, &options).map_err(|e| format!("{name} seed {seed}: {e}"))?;
        }
        let generic = problem
            .with_forms(sample_generic_linear(problem.rep(), problem.equations(), problem.profile(), 777, 97).forms);
        let chern = chern_obstruction(&generic, 5, &options).map_err(|e| format!("{name}: {e}"))?;
        if chern.value != 0 {
            return Err(format!("{name}: generic collection has Chern obstruction {}", chern.value));
        }
    }
    Ok(format!("{} corpus ICIS, 5 seed pairs each, generic Chern 0", icis.len()))
}

fn conservation() -> Result<String, String> {
    let start = Instant::now();
    for m in [1, 2, 3, 5] {
        let file = if m == 1 { "smooth_x_dx.json".to_string() } else { format!("smooth_x{m}_dx.json") };
        let settings = Settings { epsilon: "1/7".into(), ..Settings::default() };
        let line = format!("LOCAL {m}  GLOBAL_DEFORMED {m}");
        expect_output(&cmd_conserve(&doc(&file), &settings), &[line.as_str(), "VERDICT CONSERVED"])?;
    }
    let settings = Settings { epsilon: "1/100".into(), seed: 3, ..Settings::default() };
    expect_output(
        &cmd_conserve(&doc("a1_xdx_minus_ydy.json"), &settings),
        &["LOCAL 4  GLOBAL_DEFORMED 4", "VERDICT CONSERVED"],
    )?;
    let g = parse::<Rational>("x^2 - x^3", &["x"]).expect("literal");
    let local = local_colength(1, std::slice::from_ref(&g), &mut Budget::default()).map_err(|e| e.to_string())?;
    let global = global_colength(1, std::slice::from_ref(&g), &mut Budget::default()).map_err(|e| e.to_string())?;
    if (local, global) != (Colength::Finite(2), Colength::Finite(3)) {
        return Err(format!("x^2 - x^3: local {local}, global {global}"));
    }
    expect_output(
        &cmd_conserve(&doc("escape_x2_dx.json"), &Settings::default()),
        &["LOCAL 2  GLOBAL_DEFORMED 3", "VERDICT ESCAPED"],
    )?;
    within(Duration::from_secs(10), start)?;
    Ok("x^m dx conserve m for m = 1, 2, 3, 5; A1 conserves 4; x^2 - x^3 local 2 global 3".into())
}

fn invariances() -> Result<String, String> {
    let options = IndexOptions::default();
    let factors =
        [Rational::new((-3).into(), 2.into()), Rational::from_integer(7.into()), Rational::new(1.into(), 5.into())];
    let corpus = finite_corpus();
    for (name, problem, value) in &corpus {
        let mut scaled = problem.forms().to_vec();
        for (i, pair) in scaled.iter_mut().enumerate() {
            for (j, form) in pair.iter_mut().enumerate() {
                *form = form.scaled(&factors[(i + 2 * j) % 3]);
            }
        }
        let mut reversed = problem.forms().to_vec();
        reversed.iter_mut().for_each(|pair| pair.reverse());
        let mut rotated = problem.forms().to_vec();
        rotated.iter_mut().filter(|pair| !pair.is_empty()).for_each(|pair| pair.rotate_left(1));
        for (kind, forms) in [("scaled", scaled), ("reversed", reversed), ("rotated", rotated)] {
            let got = gsv_index(&problem.with_forms(forms), &options).map_err(|e| format!("{name} {kind}: {e}"))?.value;
            if got != *value {
                return Err(format!("{name} {kind}: {got} != {value}"));
            }
        }
    }
    Ok(format!("{} corpus problems unchanged under scaling and permutation", corpus.len()))
}

fn determinism() -> Result<String, String> {
    let bin = env!("CARGO_BIN_EXE_equindex");
    let invocations: &[&[&str]] = &[
        &["validate"],
        &["validate", "--json"],
        &["index", "--oracle"],
        &["index", "--json", "--oracle"],
        &["chern", "--seed", "3"],
        &["chern", "--json", "--seed", "3"],
        &["conserve", "--seed", "3", "--epsilon", "1/7"],
        &["conserve", "--json", "--seed", "3", "--epsilon", "1/7"],
    ];
    let mut runs = 0;
    for file in corpus_files() {
        for args in invocations {
            let run = || Command::new(bin).arg(args[0]).arg(&file).args(&args[1..]).output().expect("binary runs");
            let (a, b) = (run(), run());
            if a.stdout != b.stdout || a.stderr != b.stderr || a.status.code() != b.status.code() {
                return Err(format!("{} {:?} differs between runs", file.display(), args));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} invocations byte-identical across two runs"))
}

type Check = fn() -> Result<String, String>;

fn main() {
    // make sure every corpus file still loads or fails the way it is meant to
    for file in corpus_files() {
        let outcome = cmd_validate(&file, &Settings::default());
        assert!(matches!(outcome.code, 0 | 2), "{}: exit {}", file.display(), outcome.code);
    }

    let criteria: [(&str, Check); 8] = [
        ("smooth non-degenerate point", smooth_point),
        ("A1 curve", a1_curve),
        ("Z/2 equivariant suite", z2_suite),
        ("oracle equivalence on random problems", oracle_equivalence),
        ("genericity and seed independence", genericity),
        ("conservation of number", conservation),
        ("scaling and permutation invariance", invariances),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (number, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {} PASS  {title}: {detail} [{elapsed:.2?}]", number + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {title}: {why} [{elapsed:.2?}]", number + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
