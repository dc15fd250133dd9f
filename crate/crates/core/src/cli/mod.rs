//! Command-line front end: `amalg <command> <manifest> [--json] [--workers N]`.
//!
//! Exit codes: 0 success, 2 parse or schema error, 3 violated
//! precondition, 4 internal invariant breach.

pub mod commands;
pub mod manifest;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
pub use manifest::{Manifest, SweepSpec, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "amalg", version, about = "Exact f-algebra products on AM- and AL-space models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Manifest file (JSON).
    pub manifest: PathBuf,
    /// Emit a single JSON document instead of aligned text.
    #[arg(long)]
    pub json: bool,
    /// Worker threads for sweeps.
    #[arg(long, value_name = "N")]
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// AM-algebra classification of the space.
    Classify(CommonArgs),
    /// Membership of a weight in W_X.
    WxCheck(CommonArgs),
    /// Weight product of x and y.
    Product(CommonArgs),
    /// Positive n-th root in an AM-algebra.
    Root(CommonArgs),
    /// Axiom verification of a weight, atom-weight, or tensor product.
    CheckFalgebra(CommonArgs),
    /// Lattice and algebra homomorphism verdicts for an operator.
    CheckHom(CommonArgs),
    /// Atomic product on a FiniteAL space.
    AlProduct(CommonArgs),
    /// Exhaustive sweep described by the manifest.
    Sweep(CommonArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify(_) => "classify",
            Command::WxCheck(_) => "wx-check",
            Command::Product(_) => "product",
            Command::Root(_) => "root",
            Command::CheckFalgebra(_) => "check-falgebra",
            Command::CheckHom(_) => "check-hom",
            Command::AlProduct(_) => "al-product",
            Command::Sweep(_) => "sweep",
        }
    }

    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::Classify(a)
            | Command::WxCheck(a)
            | Command::Product(a)
            | Command::Root(a)
            | Command::CheckFalgebra(a)
            | Command::CheckHom(a)
            | Command::AlProduct(a)
            | Command::Sweep(a) => a,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() {
        EXIT_SCHEMA
    } else if e.is_invariant_breach() {
        EXIT_INVARIANT
    } else {
        EXIT_PRECONDITION
    }
}

/// Runs a command on manifest text.
pub fn run_text(command: &str, text: &str, json_output: bool, workers: Option<usize>) -> Outcome {
    let fail =
        |e: Error| Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("amalg {command}: {e}\n") };
    let manifest = match Manifest::parse(text) {
        Ok(m) => m,
        Err(e) => return fail(e),
    };
    let result = match command {
        "classify" => commands::classify(&manifest).map(|v| (v, true)),
        "wx-check" => commands::wx_check(&manifest).map(|v| (v, true)),
        "product" => commands::product(&manifest).map(|v| (v, true)),
        "root" => commands::root(&manifest).map(|v| (v, true)),
        "check-falgebra" => commands::check_falgebra(&manifest).map(|v| (v, true)),
        "check-hom" => commands::check_hom(&manifest).map(|v| (v, true)),
        "al-product" => commands::al_product(&manifest).map(|v| (v, true)),
        "sweep" => commands::sweep(&manifest, workers),
        other => Err(Error::InvalidArgument(format!("unknown command {other:?}"))),
    };
    match result {
        Ok((body, clean)) => {
            let mut doc = json!({"schemaVersion": SCHEMA_VERSION, "command": command});
            if let (Value::Object(d), Value::Object(b)) = (&mut doc, body) {
                d.extend(b);
            }
            let stdout = if json_output {
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("reports serialize"))
            } else {
                render_text(&doc)
            };
            let (code, stderr) = if clean {
                (EXIT_OK, String::new())
            } else {
                (EXIT_INVARIANT, format!("amalg {command}: sweep found discrepancies\n"))
            };
            Outcome { code, stdout, stderr }
        }
        Err(e) => fail(e),
    }
}

/// Parses process arguments and runs the command, returning the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_SCHEMA } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let name = cli.command.name();
    let args = cli.command.args();
    let outcome = match std::fs::read_to_string(&args.manifest) {
        Ok(text) => run_text(name, &text, args.json, args.workers),
        Err(e) => Outcome {
            code: EXIT_SCHEMA,
            stdout: String::new(),
            stderr: format!("amalg {name}: cannot read {}: {e}\n", args.manifest.display()),
        },
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}

/// Flattens a report into `key  value` lines with aligned values.
pub fn render_text(doc: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", doc, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            if m.is_empty() {
                out.push((prefix.to_string(), "{}".into()));
            }
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) => {
            let inline: Option<Vec<String>> = items.iter().map(scalar_text).collect();
            match inline {
                Some(parts) => out.push((prefix.to_string(), format!("({})", parts.join(", ")))),
                None => {
                    for (i, x) in items.iter().enumerate() {
                        flatten(&format!("{prefix}[{i}]"), x, out);
                    }
                }
            }
        }
        other => out.push((prefix.to_string(), scalar_text(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering_is_aligned() {
        let doc = json!({"a": "1/2", "longer": {"b": [ "1", "2" ], "c": null}});
        assert_eq!(render_text(&doc), "a         1/2\nlonger.b  (1, 2)\nlonger.c  -\n");
    }

    #[test]
    fn exit_codes_by_error_class() {
        assert_eq!(run_text("classify", "not json", false, None).code, EXIT_SCHEMA);
        let al = r#"{"schemaVersion": 1, "space": {"kind": "FiniteAL", "atoms": 1}}"#;
        assert_eq!(run_text("classify", al, false, None).code, EXIT_PRECONDITION);
        let ok = r#"{"schemaVersion": 1, "space": {"kind": "FiniteSup", "dualWeights": ["4", "1"]}}"#;
        let out = run_text("classify", ok, true, None);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["isAMAlgebra"], json!(true));
        assert_eq!(doc["amWeight"], json!(["1", "1"]));
    }
}
