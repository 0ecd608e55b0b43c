//! Command-line dispatch: one subcommand per library capability, with
//! machine-readable (`--json`) and human-readable output.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::closeability::{
    classify_by_intercept, closed_set, is_closeable, verify_closed_empirically, yasutomi_gamma,
    yasutomi_theta, ClosureReport,
};
use crate::derived::{derived_word, match_derived_to_delta, Source};
use crate::morphism::{incidence_matrix, realize, BinaryWord, Matrix2, MorphismWord};
use crate::normalization::{delta, delta_orbit, normalize};
use crate::quad::QuadNumber;
use crate::words::{
    fixed_point_params, fixed_point_prefix, Boundary, IetParams,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    DomainError,
    UsageError,
}

/// Result of one dispatch: a status, a command-specific JSON payload, and
/// free-form diagnostics. Exit code 0 iff the status is ok.
#[derive(Debug, Clone)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    human: String,
    json: bool,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::DomainError => 1,
            Status::UsageError => 2,
        }
    }

    /// The text to print: the human rendering by default, the full JSON
    /// envelope under `--json`.
    pub fn printable(&self) -> String {
        if self.json {
            let status = match self.status {
                Status::Ok => "ok",
                _ => "error",
            };
            serde_json::to_string_pretty(&json!({
                "status": status,
                "payload": self.payload,
                "diagnostics": self.diagnostics,
            }))
            .expect("payload serializes")
        } else {
            self.human.clone()
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "sturmian",
    about = "Exact computations with Sturmian substitutions: normal forms, interval-exchange codings, derived words, closure under derivation",
    version
)]
struct Cli {
    /// Emit a machine-readable JSON envelope instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Reserved for randomized helpers; accepted and recorded, currently
    /// unused by any subcommand.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct NameArg {
    /// Morphism name over a, b, A (alpha), B (beta); Greek letters accepted.
    name: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rewrite a name to its normal form.
    Normalize(NameArg),
    /// Apply the rotate-and-normalize operator to the normal form of a name.
    Delta {
        #[command(flatten)]
        name: NameArg,
        /// Number of applications.
        #[arg(long, default_value_t = 1)]
        iterations: usize,
    },
    /// Eventually periodic orbit of a name under the rotation operator.
    DeltaOrbit(NameArg),
    /// Realize a name as a binary substitution and show its images.
    Compose(NameArg),
    /// Apply the substitution named by NAME to a binary word.
    Apply {
        #[command(flatten)]
        name: NameArg,
        /// Binary word over 0/1.
        word: String,
    },
    /// Prefix of the fixed point of a primitive name.
    FixedPoint {
        #[command(flatten)]
        name: NameArg,
        #[arg(long)]
        length: usize,
        /// Starting letter when the substitution fixes two words.
        #[arg(long)]
        start: Option<u8>,
    },
    /// Exact fixed-point parameters (unit normalization, optional theta form).
    Params {
        #[command(flatten)]
        name: NameArg,
        #[arg(long)]
        start: Option<u8>,
        /// Also report the normalization with the longer interval scaled to 1.
        #[arg(long)]
        theta_form: bool,
    },
    /// Generate a two-interval-exchange coding from exact parameters.
    Generate {
        /// Left interval length, e.g. "-1+sqrt(3)" or "1/2".
        #[arg(long, allow_hyphen_values = true)]
        l0: String,
        /// Right interval length.
        #[arg(long, allow_hyphen_values = true)]
        l1: String,
        /// Initial point.
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
        #[arg(long, default_value = "lower")]
        boundary: Boundary,
        #[arg(long)]
        length: usize,
    },
    /// Derived word of a fixed point with respect to a factor.
    Derive {
        #[command(flatten)]
        name: NameArg,
        /// The factor to derive on (binary word; may be empty).
        #[arg(long, default_value = "")]
        factor: String,
        /// Number of derived letters to report.
        #[arg(long)]
        length: usize,
        #[arg(long)]
        start: Option<u8>,
    },
    /// Match derived words of right-special prefixes to rotation powers.
    MatchDelta {
        #[command(flatten)]
        name: NameArg,
        #[arg(long)]
        prefix_len: usize,
        #[arg(long)]
        derive_len: usize,
    },
    /// Closeability verdict, intercept class, and exact parameters.
    Classify(NameArg),
    /// The witness set closed under derivation for a closeable name.
    ClosedSet(NameArg),
    /// Empirically verify the closed set of a name; nonzero exit on failure.
    Verify {
        #[command(flatten)]
        name: NameArg,
        #[arg(long, default_value_t = 8)]
        max_factor_len: usize,
        #[arg(long, default_value_t = 200)]
        derive_len: usize,
    },
    /// Yasutomi fixed-point criterion; pass --gamma/--delta or --theta/--rho.
    Yasutomi {
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<String>,
    },
}

/// Parses and runs one invocation. `args` excludes the binary name.
pub fn dispatch<I, S>(args: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = std::iter::once("sturmian".to_string())
        .chain(args.into_iter().map(Into::into))
        .collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return CommandResult {
                status: if ok { Status::Ok } else { Status::UsageError },
                payload: Value::Null,
                diagnostics: vec![e.to_string()],
                human: e.to_string(),
                json: false,
            };
        }
    };
    let json = cli.json;
    match run(cli.command) {
        Ok((payload, human, diagnostics)) => CommandResult {
            status: Status::Ok,
            payload,
            diagnostics,
            human,
            json,
        },
        Err(DispatchError::Domain(msg)) => CommandResult {
            status: Status::DomainError,
            payload: Value::Null,
            diagnostics: vec![msg.clone()],
            human: format!("error: {msg}"),
            json,
        },
        Err(DispatchError::Failures(payload, msg)) => CommandResult {
            status: Status::DomainError,
            payload,
            diagnostics: vec![msg.clone()],
            human: format!("error: {msg}"),
            json,
        },
    }
}

enum DispatchError {
    Domain(String),
    /// Domain error that still carries a payload (verification reports).
    Failures(Value, String),
}

impl<E: std::fmt::Display> From<E> for DispatchError {
    fn from(e: E) -> Self {
        DispatchError::Domain(e.to_string())
    }
}

type Rendered = (Value, String, Vec<String>);

fn parse_name(s: &str) -> Result<MorphismWord, DispatchError> {
    s.parse::<MorphismWord>().map_err(Into::into)
}

fn parse_bin(s: &str) -> Result<BinaryWord, DispatchError> {
    s.parse::<BinaryWord>().map_err(Into::into)
}

fn parse_quad(s: &str) -> Result<QuadNumber, DispatchError> {
    s.parse::<QuadNumber>().map_err(Into::into)
}

fn matrix_json(m: &Matrix2) -> Value {
    let cell = |v: &num_bigint::BigInt| -> Value {
        use num_traits::ToPrimitive;
        match v.to_i64() {
            Some(n) => json!(n),
            None => json!(v.to_string()),
        }
    };
    json!([
        [cell(&m.e[0][0]), cell(&m.e[0][1])],
        [cell(&m.e[1][0]), cell(&m.e[1][1])]
    ])
}

fn params_json(p: &IetParams) -> Value {
    json!({
        "l0": p.l0().to_string(),
        "l1": p.l1().to_string(),
        "rho": p.rho().to_string(),
        "boundary": p.boundary().as_str(),
        "gamma": p.slope().to_string(),
        "delta": p.intercept().to_string(),
    })
}

fn closure_report_json(report: &ClosureReport) -> Value {
    json!({
        "max_factor_len": report.max_factor_len,
        "derive_len": report.derive_len,
        "failures": report.failures,
        "checks": report.checks.iter().map(|c| json!({
            "member": c.member.to_string(),
            "start": c.start,
            "factor": c.factor.to_string(),
            "kind": c.factor_kind.as_str(),
            "matched": c.matched.as_ref().map(|m| json!({
                "member": m.member.to_string(),
                "start": m.start,
                "swapped": m.swapped,
            })),
            "pass": c.passed,
        })).collect::<Vec<_>>(),
    })
}

fn run(cmd: Command) -> Result<Rendered, DispatchError> {
    match cmd {
        Command::Normalize(arg) => {
            let w = parse_name(&arg.name)?;
            let n = normalize(&w);
            Ok((
                json!({"input": w.to_string(), "normalized": n.to_string()}),
                n.to_string(),
                vec![],
            ))
        }
        Command::Delta { name, iterations } => {
            let w = parse_name(&name.name)?;
            let start = normalize(&w);
            let mut diagnostics = Vec::new();
            if start != w {
                diagnostics.push(format!("input normalized to {start} first"));
            }
            let mut current = start.clone();
            for _ in 0..iterations {
                current = delta(&current)?;
            }
            Ok((
                json!({
                    "input": w.to_string(),
                    "normalized": start.to_string(),
                    "iterations": iterations,
                    "result": current.to_string(),
                }),
                current.to_string(),
                diagnostics,
            ))
        }
        Command::DeltaOrbit(arg) => {
            let w = parse_name(&arg.name)?;
            let orbit = delta_orbit(&w)?;
            let words: Vec<String> = orbit.words().iter().map(|m| m.to_string()).collect();
            let mut human = String::new();
            for (i, word) in words.iter().enumerate() {
                human.push_str(&format!("delta^{i:<2} = {word}\n"));
            }
            human.push_str(&format!(
                "delta^{} = {}   (preperiod {}, period {})",
                words.len(),
                words[orbit.preperiod()],
                orbit.preperiod(),
                orbit.period()
            ));
            Ok((
                json!({
                    "input": w.to_string(),
                    "normalized": normalize(&w).to_string(),
                    "preperiod": orbit.preperiod(),
                    "period": orbit.period(),
                    "words": words,
                }),
                human,
                vec![],
            ))
        }
        Command::Compose(arg) => {
            let w = parse_name(&arg.name)?;
            let m = realize(&w);
            let inc = incidence_matrix(&w);
            Ok((
                json!({
                    "name": w.to_string(),
                    "normalized": normalize(&w).to_string(),
                    "image0": m.image0().to_string(),
                    "image1": m.image1().to_string(),
                    "incidence": matrix_json(&inc),
                    "primitive": w.is_primitive(),
                }),
                format!("0 -> {}\n1 -> {}", m.image0(), m.image1()),
                vec![],
            ))
        }
        Command::Apply { name, word } => {
            let w = parse_name(&name.name)?;
            let x = parse_bin(&word)?;
            let out = realize(&w).apply(&x);
            Ok((
                json!({
                    "name": w.to_string(),
                    "input": x.to_string(),
                    "output": out.to_string(),
                }),
                out.to_string(),
                vec![],
            ))
        }
        Command::FixedPoint { name, length, start } => {
            let w = parse_name(&name.name)?;
            let prefix = fixed_point_prefix(&w, length, start)?;
            Ok((
                json!({
                    "name": w.to_string(),
                    "start": start,
                    "length": length,
                    "prefix": prefix.to_string(),
                }),
                prefix.to_string(),
                vec![],
            ))
        }
        Command::Params { name, start, theta_form } => {
            let w = parse_name(&name.name)?;
            let p = fixed_point_params(&w, start)?;
            let mut payload = params_json(&p);
            let mut human = format!(
                "l0 = {}\nl1 = {}\nrho = {}\nboundary = {}\ngamma = {}\ndelta = {}",
                p.l0(), p.l1(), p.rho(), p.boundary(), p.slope(), p.intercept()
            );
            if theta_form {
                let (theta, rho_theta) = p.theta_form();
                payload["theta"] = json!({
                    "theta": theta.to_string(),
                    "rho": rho_theta.to_string(),
                });
                human.push_str(&format!("\ntheta = {theta}\nrho/longer = {rho_theta}"));
            }
            payload["name"] = json!(w.to_string());
            Ok((payload, human, vec![]))
        }
        Command::Generate { l0, l1, rho, boundary, length } => {
            let params = IetParams::new(
                parse_quad(&l0)?,
                parse_quad(&l1)?,
                parse_quad(&rho)?,
                boundary,
            )?;
            let word = params.generate(length);
            Ok((
                json!({
                    "l0": params.l0().to_string(),
                    "l1": params.l1().to_string(),
                    "rho": params.rho().to_string(),
                    "boundary": params.boundary().as_str(),
                    "length": length,
                    "word": word.to_string(),
                }),
                word.to_string(),
                vec![],
            ))
        }
        Command::Derive { name, factor, length, start } => {
            let w = parse_name(&name.name)?;
            let factor = parse_bin(&factor)?;
            let source = Source::fixed_point(w.clone(), start);
            let mut report = derived_word(&source, &factor, length)?;
            // Report the matching rotation power when one exists (it always
            // does for right-special prefixes).
            let normalized = normalize(&w);
            if !normalized.is_a_alpha_only() {
                if let Ok(orbit) = delta_orbit(&normalized) {
                    report.matched_delta_power = orbit.words().iter().enumerate().find_map(
                        |(j, member)| {
                            let fixed =
                                fixed_point_prefix(member, report.derived_prefix.len(), None)
                                    .ok()?;
                            crate::derived::equal_up_to_letter_permutation(
                                &report.derived_prefix,
                                fixed.as_str(),
                            )
                            .map(|_| j)
                        },
                    );
                }
            }
            Ok((
                json!({
                    "name": w.to_string(),
                    "factor": report.factor.to_string(),
                    "return_words": report.return_words.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                    "derived_prefix": report.derived_prefix,
                    "source_prefix_length": report.source_prefix_length,
                    "matched_delta_power": report.matched_delta_power,
                }),
                format!(
                    "return words: {}\nderived: {}",
                    report
                        .return_words
                        .iter()
                        .enumerate()
                        .map(|(i, r)| format!("r{i} = {r}"))
                        .collect::<Vec<_>>()
                        .join(", "),
                    report.derived_prefix
                ),
                vec![],
            ))
        }
        Command::MatchDelta { name, prefix_len, derive_len } => {
            let w = parse_name(&name.name)?;
            let orbit = delta_orbit(&normalize(&w))?;
            let matches = match_derived_to_delta(&w, prefix_len, derive_len)?;
            let human = matches
                .iter()
                .map(|m| format!("prefix `{}` -> delta^{}", m.prefix, m.delta_power))
                .collect::<Vec<_>>()
                .join("\n");
            Ok((
                json!({
                    "name": w.to_string(),
                    "normalized": normalize(&w).to_string(),
                    "orbit": {"preperiod": orbit.preperiod(), "period": orbit.period()},
                    "matches": matches.iter().map(|m| json!({
                        "prefix": m.prefix.to_string(),
                        "delta_power": m.delta_power,
                    })).collect::<Vec<_>>(),
                }),
                human,
                vec![],
            ))
        }
        Command::Classify(arg) => {
            let w = parse_name(&arg.name)?;
            let verdict = is_closeable(&w)?;
            let classification = classify_by_intercept(&w)?;
            debug_assert_eq!(verdict.closeable, classification.closeable);
            Ok((
                json!({
                    "name": w.to_string(),
                    "closeable": verdict.closeable,
                    "reason": verdict.reason,
                    "letter_class": verdict.class.map(|c| c.as_str()),
                    "delta_class": classification.delta_class.as_str(),
                    "params": params_json(&classification.params),
                }),
                format!(
                    "closeable: {}\nreason: {}\ndelta class: {}",
                    verdict.closeable, verdict.reason, classification.delta_class
                ),
                vec![],
            ))
        }
        Command::ClosedSet(arg) => {
            let w = parse_name(&arg.name)?;
            let set = closed_set(&w)?;
            let human = set
                .members()
                .iter()
                .map(|m| format!("{m}  [{}]", set.provenance(m).unwrap_or("?")))
                .collect::<Vec<_>>()
                .join("\n");
            Ok((
                json!({
                    "name": w.to_string(),
                    "members": set.members().iter().map(|m| json!({
                        "name": m.to_string(),
                        "provenance": set.provenance(m),
                    })).collect::<Vec<_>>(),
                }),
                human,
                vec![],
            ))
        }
        Command::Verify { name, max_factor_len, derive_len } => {
            let w = parse_name(&name.name)?;
            let set = closed_set(&w)?;
            let report = verify_closed_empirically(&set, max_factor_len, derive_len);
            let mut payload = closure_report_json(&report);
            payload["name"] = json!(w.to_string());
            payload["members"] = json!(set
                .members()
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>());
            let human = format!(
                "{} checks, {} failures",
                report.checks.len(),
                report.failures
            );
            if report.passed() {
                Ok((payload, human, vec![]))
            } else {
                Err(DispatchError::Failures(
                    payload,
                    format!("closure verification failed: {} failures", report.failures),
                ))
            }
        }
        Command::Yasutomi { gamma, delta, theta, rho } => match (gamma, delta, theta, rho) {
            (Some(g), Some(d), None, None) => {
                let gamma = parse_quad(&g)?;
                let delta = parse_quad(&d)?;
                let fixed = yasutomi_gamma(&gamma, &delta)?;
                Ok((
                    json!({
                        "form": "gamma",
                        "gamma": gamma.to_string(),
                        "delta": delta.to_string(),
                        "fixed_by_primitive": fixed,
                    }),
                    format!("fixed by a primitive morphism: {fixed}"),
                    vec![],
                ))
            }
            (None, None, Some(t), Some(r)) => {
                let theta = parse_quad(&t)?;
                let rho = parse_quad(&r)?;
                let fixed = yasutomi_theta(&theta, &rho)?;
                Ok((
                    json!({
                        "form": "theta",
                        "theta": theta.to_string(),
                        "rho": rho.to_string(),
                        "fixed_by_primitive": fixed,
                    }),
                    format!("fixed by a primitive morphism: {fixed}"),
                    vec![],
                ))
            }
            _ => Err(DispatchError::Domain(
                "pass either --gamma and --delta, or --theta and --rho".into(),
            )),
        },
    }
}
