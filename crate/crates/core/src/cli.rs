//! The `ideal` command line.
//!
//! Exit codes: 0 success, 1 I/O or format error, 2 input is not an ideal,
//! 3 input is prime for the requested mode, 4 a component is not smaller than
//! the original, 5 languages differ.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::builders::{gen_fig6, power, principal_automaton, shuffle_ideal};
use crate::decomposition::Decomposition;
use crate::dfa::Dfa;
use crate::dot::to_dot;
use crate::error::Error;
use crate::ideal::{check_ideal, lmin, IdealAutomaton};
use crate::inter::{self, Options};
use crate::minimize::{is_minimal, minimize};
use crate::oracle;
use crate::product::{equivalent, product, Mode};
use crate::union;
use crate::words::WordSet;

/// Version of the `--json` report layout.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_NOT_IDEAL: i32 = 2;
pub const EXIT_PRIME: i32 = 3;
pub const EXIT_SIZE: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "ideal", version, about = "Primality and decomposition of ideal automata")]
pub struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Inter,
    Union,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Inter => Mode::Inter,
            ModeArg::Union => Mode::Union,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Fig6,
    Power,
    Principal,
    Shuffle,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate an automaton and report whether it recognizes an ideal.
    Check { file: PathBuf },
    /// Print the minimal automaton.
    Minimize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the minimal generators, one per line.
    Lmin { file: PathBuf },
    /// Decompose into smaller ideal automata.
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "inter")]
        mode: ModeArg,
        /// Split until every component is prime (intersection only).
        #[arg(long)]
        recursive: bool,
        /// Skip the final equivalence check.
        #[arg(long)]
        no_verify: bool,
        /// Directory receiving one JSON file per component.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write DOT files next to the JSON ones.
        #[arg(long)]
        dot: bool,
    },
    /// Decide primality; exits 3 when prime.
    Prime {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "inter")]
        mode: ModeArg,
        /// Also run the exhaustive oracle (small inputs only).
        #[arg(long)]
        oracle: bool,
    },
    /// Print the primality witness of an intersection-prime automaton.
    Witness { file: PathBuf },
    /// Generate an automaton from one of the built-in families.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(short = 'n', long)]
        n: Option<usize>,
        /// Base automaton for `power`.
        #[arg(long)]
        base: Option<PathBuf>,
        /// Word for `principal`.
        #[arg(long)]
        word: Option<String>,
        /// Comma-separated words for `shuffle`.
        #[arg(long, value_delimiter = ',')]
        words: Vec<String>,
        /// Word-list file for `shuffle`.
        #[arg(long)]
        words_file: Option<PathBuf>,
        /// Alphabet letters; inferred from the words when absent.
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that components are smaller and combine to the original language.
    Verify {
        original: PathBuf,
        #[arg(required = true)]
        components: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "inter")]
        mode: ModeArg,
    },
    /// Print an automaton in Graphviz DOT.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A finished command: exit code, human text, JSON report body.
struct Outcome {
    code: i32,
    text: String,
    report: Value,
}

impl Outcome {
    fn ok(text: String, report: Value) -> Outcome {
        Outcome {
            code: EXIT_OK,
            text,
            report,
        }
    }

    fn fail(code: i32, message: String) -> Outcome {
        Outcome {
            code,
            report: json!({ "error": message }),
            text: message,
        }
    }
}

fn code_of(e: &Error) -> i32 {
    match e {
        Error::NotIdeal { .. } | Error::EmptyLanguage => EXIT_NOT_IDEAL,
        Error::PrimeInput(_) | Error::NoDampingPattern => EXIT_PRIME,
        _ => EXIT_IO,
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Outcome {
        let mut out = Outcome::fail(code_of(&e), e.to_string());
        if let Error::NotIdeal { word, upper_word } = &e {
            out.report = json!({
                "error": e.to_string(),
                "ideal": false,
                "certificate": { "word": word, "upper_word": upper_word },
            });
        }
        out
    }
}

type Step<T> = std::result::Result<T, Outcome>;

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Minimize { .. } => "minimize",
        Command::Lmin { .. } => "lmin",
        Command::Decompose { .. } => "decompose",
        Command::Prime { .. } => "prime",
        Command::Witness { .. } => "witness",
        Command::Gen { .. } => "gen",
        Command::Verify { .. } => "verify",
        Command::ExportDot { .. } => "export-dot",
    }
}

/// Parses `args` (program name first), runs the command, prints its report
/// and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_IO } else { EXIT_OK };
        }
    };
    let outcome = execute(&cli.command).unwrap_or_else(|o| o);
    if cli.json {
        let mut report = json!({
            "schema_version": SCHEMA_VERSION,
            "command": command_name(&cli.command),
            "exit_code": outcome.code,
        });
        if let (Value::Object(dst), Value::Object(src)) = (&mut report, outcome.report) {
            dst.extend(src);
        }
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else {
        let mut text = outcome.text;
        if !text.is_empty() && !text.ends_with('\n') {
            text.push('\n');
        }
        if outcome.code == EXIT_IO {
            eprint!("ideal: {text}");
        } else {
            print!("{text}");
        }
    }
    outcome.code
}

fn read_dfa(path: &Path) -> Step<Dfa> {
    let text = fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_IO, format!("{}: {e}\n", path.display())))?;
    Dfa::from_json(&text).map_err(|e| Outcome::fail(EXIT_IO, format!("{}: {e}\n", path.display())))
}

fn read_ideal(path: &Path) -> Step<IdealAutomaton> {
    let dfa = read_dfa(path)?;
    check_ideal(&dfa).map_err(|e| {
        let mut o = Outcome::from(e);
        o.text = format!("{}\n", o.text);
        o
    })
}

fn write_file(path: &Path, contents: &str) -> Step<()> {
    fs::write(path, contents).map_err(|e| Outcome::fail(EXIT_IO, format!("{}: {e}\n", path.display())))
}

fn emit(out: &Option<PathBuf>, contents: String) -> Step<String> {
    match out {
        Some(path) => {
            write_file(path, &contents)?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(contents),
    }
}

fn show_word(w: &str) -> &str {
    if w.is_empty() {
        "ε"
    } else {
        w
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn execute(command: &Command) -> Step<Outcome> {
    match command {
        Command::Check { file } => check(file),
        Command::Minimize { file, out } => {
            let m = minimize(&read_dfa(file)?);
            let text = emit(out, format!("{}\n", m.to_json()))?;
            Ok(Outcome::ok(text, json!({ "automaton": m.to_raw() })))
        }
        Command::Lmin { file } => {
            let a = read_ideal(file)?;
            let words = lmin(&a);
            let text: String = words.words().iter().map(|w| format!("{}\n", show_word(w))).collect();
            Ok(Outcome::ok(text, json!({ "lmin": words.words() })))
        }
        Command::Decompose {
            file,
            mode,
            recursive,
            no_verify,
            out,
            dot,
        } => decompose(file, (*mode).into(), *recursive, !*no_verify, out.as_deref(), *dot),
        Command::Prime { file, mode, oracle } => prime(file, (*mode).into(), *oracle),
        Command::Witness { file } => {
            let a = read_ideal(file)?;
            let w = inter::witness(&a)?;
            let mut text = String::new();
            for (i, f) in w.factors.iter().enumerate() {
                text.push_str(&format!("w({}) = {f}\n", i + 1));
            }
            text.push_str(&format!("witness: {}\n", show_word(&w.word)));
            Ok(Outcome::ok(text, json!({ "factors": w.factors, "witness": w.word })))
        }
        Command::Gen {
            family,
            n,
            base,
            word,
            words,
            words_file,
            alphabet,
            out,
        } => {
            let a = generate(*family, *n, base.as_deref(), word.as_deref(), words, words_file.as_deref(), alphabet.as_deref())?;
            let text = emit(out, format!("{}\n", a.to_json()))?;
            Ok(Outcome::ok(
                text,
                json!({ "states": a.state_count(), "automaton": a.to_raw() }),
            ))
        }
        Command::Verify {
            original,
            components,
            mode,
        } => verify(original, components, (*mode).into()),
        Command::ExportDot { file, out } => {
            let a = read_dfa(file)?;
            let name = file.file_stem().and_then(|s| s.to_str()).unwrap_or("A");
            let dot = to_dot(&a, name);
            let text = emit(out, dot.clone())?;
            Ok(Outcome::ok(text, json!({ "dot": dot })))
        }
    }
}

fn check(file: &Path) -> Step<Outcome> {
    let dfa = read_dfa(file)?;
    let trim = dfa.trim_check();
    let minimal = is_minimal(&dfa);
    let mut text = format!(
        "valid: {} states over {{{}}}\ntrim: {}\nminimal: {}\n",
        dfa.state_count(),
        dfa.alphabet_string(),
        trim.holds(),
        minimal
    );
    let mut report = json!({
        "valid": true,
        "states": dfa.state_count(),
        "trim": trim.holds(),
        "minimal": minimal,
    });
    match check_ideal(&dfa) {
        Ok(a) => {
            let per_state = a.ranks().as_slice().to_vec();
            let mut profile = per_state.clone();
            profile.sort_unstable();
            text.push_str(&format!(
                "ideal: true\nminimal states: {}\nlinear: {}\nranks: {}\n",
                a.state_count(),
                a.is_linear(),
                join(&profile)
            ));
            report["ideal"] = json!(true);
            report["minimal_states"] = json!(a.state_count());
            report["linear"] = json!(a.is_linear());
            report["ranks"] = json!(per_state);
            report["rank_profile"] = json!(profile);
            Ok(Outcome::ok(text, report))
        }
        Err(e) => {
            let code = code_of(&e);
            text.push_str("ideal: false\n");
            report["ideal"] = json!(false);
            if let Error::NotIdeal { word, upper_word } = &e {
                text.push_str(&format!(
                    "certificate: {} accepted, {} rejected\n",
                    show_word(word),
                    upper_word
                ));
                report["certificate"] = json!({ "word": word, "upper_word": upper_word });
            } else {
                text.push_str(&format!("{e}\n"));
                report["error"] = json!(e.to_string());
            }
            Ok(Outcome { code, text, report })
        }
    }
}

fn decompose(file: &Path, mode: Mode, recursive: bool, verify: bool, out: Option<&Path>, dot: bool) -> Step<Outcome> {
    let a = read_ideal(file)?;
    let opts = Options { verify };
    let mut extra = json!({});
    let d: Decomposition = match (mode, recursive) {
        (Mode::Inter, false) if a.is_linear() => inter::decompose_linear_with(&a, opts)?,
        (Mode::Inter, false) => inter::decompose_nonlinear_with(&a, opts)?,
        (Mode::Inter, true) => {
            let r = inter::decompose_inter_recursive_with(&a, opts)?;
            if r.decomposition.is_leaf() {
                return Err(Outcome::fail(EXIT_PRIME, "prime: nothing to decompose\n".into()));
            }
            extra = json!({ "linear_leaves": r.linear_leaves, "prime_leaves": r.prime_leaves });
            r.decomposition
        }
        (Mode::Union, _) => union::decompose_union_with(&a, opts)?,
    };
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Outcome::fail(EXIT_IO, format!("{}: {e}\n", dir.display())))?;
        for (i, c) in d.components.iter().enumerate() {
            write_file(&dir.join(format!("component_{i}.json")), &format!("{}\n", c.automaton.to_json()))?;
            if dot {
                write_file(&dir.join(format!("component_{i}.dot")), &to_dot(&c.automaton, &c.tag.to_string()))?;
            }
        }
        write_file(&dir.join("decomposition.json"), &format!("{}\n", d.to_json()))?;
    }
    let mut text = format!("{} components ({})\n", d.len(), mode.name());
    for c in &d.components {
        text.push_str(&format!("  {}: {} states\n", c.tag, c.automaton.state_count()));
    }
    if let (Some(l), Some(p)) = (extra.get("linear_leaves"), extra.get("prime_leaves")) {
        text.push_str(&format!("linear leaves: {l}\nprime leaves: {p}\n"));
    }
    text.push_str(&format!("verified: {}\n", d.verified));
    let mut report = json!({
        "mode": mode.name(),
        "components": d.len(),
        "verified": d.verified,
        "decomposition": serde_json::from_str::<Value>(&d.to_json()).expect("decomposition JSON is valid"),
    });
    if let (Value::Object(dst), Value::Object(src)) = (&mut report, extra) {
        dst.extend(src);
    }
    Ok(Outcome::ok(text, report))
}

fn prime(file: &Path, mode: Mode, with_oracle: bool) -> Step<Outcome> {
    let a = read_ideal(file)?;
    let (is_prime, reason, structure) = match mode {
        Mode::Inter => match inter::damping_scan(&a) {
            Err(Error::NonLinearInput(q, r)) => (
                false,
                format!("non-linear: states {q} and {r} are incomparable"),
                json!({ "non_linear": [q, r] }),
            ),
            Err(e) => return Err(e.into()),
            Ok(scan) => match scan.first() {
                Some(k) => (
                    false,
                    format!("damping between q{},q{k}", k - 1),
                    json!({ "damping": [k - 1, k] }),
                ),
                None => (true, "linear, no damping pattern".to_string(), json!({})),
            },
        },
        Mode::Union => match union::accel_scan(&a) {
            Err(Error::NonLinearInput(q, r)) => (
                false,
                format!("non-linear: states {q} and {r} are incomparable"),
                json!({ "non_linear": [q, r] }),
            ),
            Err(e) => return Err(e.into()),
            Ok(scan) => match scan.first() {
                Some(i) => (false, format!("accelerating at q{i}"), json!({ "accelerating": i })),
                None => (true, "linear, no accelerating pattern".to_string(), json!({})),
            },
        },
    };
    let verdict = if is_prime { "prime" } else { "composite" };
    let mut text = format!("{verdict}: {reason}\n");
    let mut report = json!({ "mode": mode.name(), "prime": is_prime, "reason": reason, "structure": structure });
    if with_oracle {
        let agreed = oracle::exhaustive_prime(&a, mode)?;
        text.push_str(&format!("oracle: {}\n", if agreed { "prime" } else { "composite" }));
        report["oracle_prime"] = json!(agreed);
    }
    Ok(Outcome {
        code: if is_prime { EXIT_PRIME } else { EXIT_OK },
        text,
        report,
    })
}

fn alphabet_for(alphabet: Option<&str>, words: &[String]) -> Step<Vec<char>> {
    let letters: Vec<char> = match alphabet {
        Some(a) => a.chars().filter(|c| !c.is_whitespace() && *c != ',').collect(),
        None => words.iter().flat_map(|w| w.chars()).collect(),
    };
    if letters.is_empty() {
        return Err(Outcome::fail(EXIT_IO, "an alphabet is needed (--alphabet)\n".into()));
    }
    Ok(letters)
}

fn need<T>(value: Option<T>, flag: &str) -> Step<T> {
    value.ok_or_else(|| Outcome::fail(EXIT_IO, format!("missing {flag}\n")))
}

fn generate(
    family: Family,
    n: Option<usize>,
    base: Option<&Path>,
    word: Option<&str>,
    words: &[String],
    words_file: Option<&Path>,
    alphabet: Option<&str>,
) -> Step<Dfa> {
    let made = match family {
        Family::Fig6 => gen_fig6(need(n, "-n")?)?.into_dfa(),
        Family::Power => {
            let a = read_ideal(need(base, "--base")?)?;
            power(&a, need(n, "-n")?)?.into_dfa()
        }
        Family::Principal => {
            let w = need(word, "--word")?;
            let letters = alphabet_for(alphabet, &[w.to_string()])?;
            principal_automaton(w, &letters)?
        }
        Family::Shuffle => {
            let set = match words_file {
                Some(path) => {
                    let text = fs::read_to_string(path)
                        .map_err(|e| Outcome::fail(EXIT_IO, format!("{}: {e}\n", path.display())))?;
                    WordSet::parse(&text)?
                }
                None => {
                    let list: Vec<String> = words.iter().map(|w| if w == "ε" { String::new() } else { w.clone() }).collect();
                    WordSet::new(&alphabet_for(alphabet, &list)?, &list)?
                }
            };
            shuffle_ideal(&set)?.into_dfa()
        }
    };
    Ok(made)
}

fn verify(original: &Path, components: &[PathBuf], mode: Mode) -> Step<Outcome> {
    let a = read_dfa(original)?;
    let parts = components.iter().map(|p| read_dfa(p)).collect::<Step<Vec<_>>>()?;
    let n = minimize(&a).state_count();
    if let Some((path, c)) = components.iter().zip(&parts).find(|(_, c)| c.state_count() >= n) {
        let msg = format!(
            "size violation: {} has {} states, original has {n}\n",
            path.display(),
            c.state_count()
        );
        return Ok(Outcome {
            code: EXIT_SIZE,
            report: json!({ "ok": false, "size_violation": path.display().to_string() }),
            text: msg,
        });
    }
    let verdict = equivalent(&product(mode, &parts)?, &a)?;
    match verdict.word() {
        None => Ok(Outcome::ok("OK\n".into(), json!({ "ok": true }))),
        Some(word) => Ok(Outcome {
            code: EXIT_MISMATCH,
            text: format!("language mismatch: counterexample {}\n", show_word(word)),
            report: json!({ "ok": false, "counterexample": word }),
        }),
    }
}
