//! Batch front end: deterministic, machine-readable reports over the
//! bosonisation library, with golden-file comparison for regression runs.
//!
//! Exit codes: 0 success, 1 golden mismatch, 2 invalid input, 3 resource
//! cap exceeded.

use bosonise::error::Error;
use bosonise::fock::{shell_dimension_count, slater_basis, ShellSpec};
use bosonise::fqhe::laughlin_report;
use bosonise::multiplets::{resolve_shell, table1_report};
use bosonise::rmcm::{band_assign, is_pure_rm, rm_quanta};
use bosonise::shapes::{decompose, full_shape_basis};
use bosonise::text::{format_polynomial, format_rational, parse_polynomial};
use bosonise::Polynomial;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "bosonise", version, about = "Exact bosonisation of few-fermion oscillator shells")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Number of particles
    #[arg(short = 'N', long = "particles", default_value_t = 2)]
    particles: u32,
    /// Space dimension
    #[arg(short = 'd', long = "dims", default_value_t = 3)]
    dims: u32,
    /// Output format: json or text
    #[arg(long, default_value = "json")]
    format: String,
    /// Refuse jobs whose shell basis exceeds this many states
    #[arg(long, default_value_t = 10_000)]
    cap: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the antisymmetric basis of one shell
    Shells {
        #[command(flatten)]
        common: Common,
        /// Shell index (excitation above the fermionic minimum)
        #[arg(short = 's', long = "shell", default_value_t = 0)]
        shell: u32,
    },
    /// Extract the shape generators of the free module
    Shapes {
        #[command(flatten)]
        common: Common,
        /// Highest shell searched for shapes
        #[arg(long = "max-shell", default_value_t = 4)]
        max_shell: u32,
    },
    /// Resolve a shell into angular-momentum multiplets (d = 3)
    Multiplets {
        #[command(flatten)]
        common: Common,
        #[arg(short = 's', long = "shell", default_value_t = 2)]
        shell: u32,
    },
    /// Reproduce the second-shell reference table (N = 2, d = 3)
    Table1 {
        /// Golden file to compare the output against
        #[arg(long)]
        golden: Option<String>,
    },
    /// Decompose an antisymmetric polynomial over the shape basis
    Decompose {
        #[command(flatten)]
        common: Common,
        /// File holding the polynomial in text format
        #[arg(long)]
        input: String,
        #[arg(long = "max-shell", default_value_t = 4)]
        max_shell: u32,
    },
    /// Classify relative-motion content and band membership (N = 2, d = 3)
    Rm {
        /// State label like 233-II or 23-2-II (shell, l, m, family)
        #[arg(long)]
        state: Option<String>,
        /// File holding a polynomial in text format
        #[arg(long)]
        input: Option<String>,
    },
    /// Verify the Laughlin/Vandermonde identification (N = 3, d = 2)
    Laughlin {
        /// Golden file to compare the output against
        #[arg(long)]
        golden: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Shells { common, shell } => {
            let spec = spec_checked(&common, shell)?;
            let basis = slater_basis(&spec);
            let report = json!({
                "particles": spec.particles,
                "dims": spec.dims,
                "shell": spec.shell,
                "e_min": spec.e_min(),
                "total_degree": spec.total_degree(),
                "dimension": basis.len(),
                "basis": basis.iter().map(|s| format_polynomial(&s.polynomial)).collect::<Vec<_>>(),
            });
            emit(&report, &common.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Shapes { common, max_shell } => {
            for shell in 0..=max_shell {
                spec_checked(&common, shell)?;
            }
            let basis = full_shape_basis(common.particles, common.dims, max_shell);
            let report = json!({
                "particles": basis.particles,
                "dims": basis.dims,
                "module_rank": bosonise::shapes::module_rank(common.particles, common.dims),
                "complete": basis.complete,
                "shapes": basis.shapes.iter().map(|s| json!({
                    "shell": s.shell,
                    "norm_sq": format_rational(&s.norm_sq),
                    "polynomial": format_polynomial(&s.polynomial),
                })).collect::<Vec<_>>(),
            });
            emit(&report, &common.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Multiplets { common, shell } => {
            let spec = spec_checked(&common, shell)?;
            let resolution = resolve_shell(&spec)?;
            let report = json!({
                "particles": spec.particles,
                "dims": spec.dims,
                "shell": spec.shell,
                "dimension": resolution.dimension(),
                "l_content": resolution.l_content(),
                "multiplets": resolution.multiplets.iter().map(|m| json!({
                    "label": m.label,
                    "l": m.l,
                    "norms_sq": m.norms_sq.iter().map(format_rational).collect::<Vec<_>>(),
                    "states": m.states.iter().map(format_polynomial).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            emit(&report, &common.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1 { golden } => {
            let report = serde_json::to_value(table1_report()?).expect("serializable report");
            golden_emit(&report, golden.as_deref())
        }
        Command::Decompose {
            common,
            input,
            max_shell,
        } => {
            let text = std::fs::read_to_string(&input)?;
            let poly = parse_polynomial(text.trim())?;
            let basis = full_shape_basis(common.particles, common.dims, max_shell);
            if !basis.complete {
                return Err(Error::Inconsistent(format!(
                    "shape basis incomplete up to shell {max_shell}"
                )));
            }
            let d = decompose(&poly, &basis)?;
            let report = json!({
                "particles": common.particles,
                "dims": common.dims,
                "support": d.support(),
                "coefficients": d.coefficients.iter().map(format_polynomial).collect::<Vec<_>>(),
            });
            emit(&report, &common.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Rm { state, input } => {
            // a named state is classified as a member of its multiplet:
            // the band is carried by the whole ladder, not one projection
            let (poly, l, siblings) = match (state, input) {
                (Some(label), None) => resolve_state(&label)?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)?;
                    (parse_polynomial(text.trim())?, None, Vec::new())
                }
                _ => {
                    return Err(Error::Unsupported(
                        "pass exactly one of --state or --input".into(),
                    ))
                }
            };
            let basis = full_shape_basis(2, 3, 4);
            let pure = is_pure_rm(&poly)?;
            let (mut band, mut support) = band_assign(&poly, &basis)?;
            for sibling in &siblings {
                let (b, s) = band_assign(sibling, &basis)?;
                if b == bosonise::rmcm::Band::Rotational {
                    band = b;
                }
                for idx in s {
                    if !support.contains(&idx) {
                        support.push(idx);
                    }
                }
            }
            support.sort_unstable();
            let n_r = match (pure, l, poly.degree()) {
                (true, Some(l), Some(n)) => Some(rm_quanta(n, l)?.n_r),
                _ => None,
            };
            let report = json!({
                "pure_rm": pure,
                "band": band.as_str(),
                "n_r": n_r,
                "phi_support": support,
            });
            emit(&report, "json");
            Ok(ExitCode::SUCCESS)
        }
        Command::Laughlin { golden } => {
            let report = serde_json::to_value(laughlin_report()?).expect("serializable report");
            golden_emit(&report, golden.as_deref())
        }
    }
}

fn spec_checked(common: &Common, shell: u32) -> Result<ShellSpec, Error> {
    if common.particles == 0 || common.dims == 0 {
        return Err(Error::Unsupported(
            "particles and dims must be at least 1".into(),
        ));
    }
    let spec = ShellSpec::new(common.particles, common.dims, shell);
    let count = shell_dimension_count(&spec);
    if count > common.cap {
        return Err(Error::CapExceeded(format!(
            "shell holds {count} states, above the cap of {}",
            common.cap
        )));
    }
    Ok(spec)
}

/// Parse a state label "slm[-FAMILY]" with an optional negative m, e.g.
/// "233-II" or "23-2-II", and return the state, its l, and the rest of
/// its multiplet.
fn resolve_state(label: &str) -> Result<(Polynomial, Option<u32>, Vec<Polynomial>), Error> {
    let mut tokens = label.split('-');
    let head = tokens.next().unwrap_or_default();
    let digits: Vec<u32> = head
        .chars()
        .map(|c| c.to_digit(10).ok_or_else(|| Error::parse(0, "state label must start with digits")))
        .collect::<Result<_, _>>()?;
    let (shell, l, mut m) = match digits.as_slice() {
        [s, l, m] => (*s, *l, Some(*m as i32)),
        [s, l] => (*s, *l, None),
        _ => return Err(Error::parse(0, "state label needs shell, l and m digits")),
    };
    let mut family = 0usize;
    for token in tokens {
        match token {
            "I" => family = 0,
            "II" => family = 1,
            "III" => family = 2,
            t => match t.parse::<i32>() {
                Ok(v) if m.is_none() => m = Some(-v),
                _ => return Err(Error::parse(0, "unrecognized state label token")),
            },
        }
    }
    let m = m.ok_or_else(|| Error::parse(0, "state label is missing the m projection"))?;
    let resolution = resolve_shell(&ShellSpec::new(2, 3, shell))?;
    let multiplet = resolution
        .multiplets
        .iter()
        .filter(|mp| mp.l == l)
        .nth(family)
        .ok_or_else(|| Error::Unsupported(format!("no state {label} in shell {shell}")))?;
    let state = multiplet
        .state(m)
        .ok_or_else(|| Error::Unsupported(format!("no state {label} in shell {shell}")))?;
    Ok((state.clone(), Some(l), multiplet.states.clone()))
}

fn render(value: &Value, format: &str) -> String {
    match format {
        "text" => {
            let mut out = String::new();
            render_text(value, "", &mut out);
            out
        }
        _ => serde_json::to_string_pretty(value).expect("valid JSON") + "\n",
    }
}

fn render_text(value: &Value, prefix: &str, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let path = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                render_text(v, &path, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                render_text(v, &format!("{prefix}[{i}]"), out);
            }
        }
        other => {
            out.push_str(prefix);
            out.push_str(": ");
            match other {
                Value::String(s) => out.push_str(s),
                v => out.push_str(&v.to_string()),
            }
            out.push('\n');
        }
    }
}

fn emit(value: &Value, format: &str) {
    print!("{}", render(value, format));
}

/// Print the report; with a golden path, compare byte-for-byte and print
/// a per-key diff on mismatch.
fn golden_emit(value: &Value, golden: Option<&str>) -> Result<ExitCode, Error> {
    let rendered = render(value, "json");
    print!("{rendered}");
    let Some(path) = golden else {
        return Ok(ExitCode::SUCCESS);
    };
    let expected = std::fs::read_to_string(path)?;
    if expected == rendered {
        return Ok(ExitCode::SUCCESS);
    }
    eprintln!("golden mismatch against {path}:");
    match serde_json::from_str::<Value>(&expected) {
        Ok(expected_value) => diff_values(&expected_value, value, "$"),
        Err(_) => eprintln!("  golden file is not valid JSON"),
    }
    Ok(ExitCode::from(1))
}

fn diff_values(expected: &Value, actual: &Value, path: &str) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                match a.get(k) {
                    Some(av) => diff_values(ev, av, &format!("{path}.{k}")),
                    None => eprintln!("  {path}.{k}: missing in output"),
                }
            }
            for k in a.keys() {
                if !e.contains_key(k) {
                    eprintln!("  {path}.{k}: unexpected in output");
                }
            }
        }
        (Value::Array(e), Value::Array(a)) => {
            for (i, (ev, av)) in e.iter().zip(a).enumerate() {
                diff_values(ev, av, &format!("{path}[{i}]"));
            }
            if e.len() != a.len() {
                eprintln!("  {path}: length {} expected, {} produced", e.len(), a.len());
            }
        }
        (e, a) => {
            if e != a {
                eprintln!("  {path}: expected {e}, produced {a}");
            }
        }
    }
}
