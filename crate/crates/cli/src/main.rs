//! `modforms` command-line tool.

mod json;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use modforms::forms::{dim_modular, monomial_exponents, MEMBERSHIP_MARGIN};
use modforms::hecke::{DEFAULT_BOUND, DEFAULT_WINDOW};
use modforms::nearly::DECOMPOSITION_MARGIN;
use modforms::verify::{run_suite, Suite, SUITE_PREC};
use modforms::{
    cusp_delta, e2_star, eigenform_test, eigenform_test_nearly, eisenstein, eval_generator_poly_graded, hecke,
    hecke_nearly, is_modular_member, parse_poly, quasimodular_decompose, rankin_cohen, EigenReport, FormName,
    GradedSeries, QSeries, Rational, YPolyForm,
};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value as Json};

#[derive(Parser)]
#[command(name = "modforms", version, about = "Exact q-expansions, Hecke operators and eigenform checks on SL2(Z)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eisenstein series E_k.
    Eis {
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        prec: usize,
        #[arg(long)]
        json: bool,
    },
    /// Normalized cusp form Delta_k (k in 12, 16, 18, 20, 22, 26).
    Delta {
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        prec: usize,
        #[arg(long)]
        json: bool,
    },
    /// Apply T_n to a catalog form or a polynomial in E2, E4, E6.
    Hecke {
        #[arg(long)]
        input: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = SUITE_PREC)]
        prec: usize,
        #[arg(long)]
        json: bool,
    },
    /// Test T_n f = lambda_n f for n <= bound on coefficients 0..=window.
    Eigen {
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
        #[arg(long, default_value_t = SUITE_PREC)]
        prec: usize,
        #[arg(long)]
        json: bool,
    },
    /// Rankin-Cohen bracket [g, h]_m of two catalog forms.
    Bracket {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = SUITE_PREC)]
        prec: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write a quasimodular form as sum_r D^r(f_r) with f_r modular.
    Decompose {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = SUITE_PREC)]
        prec: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: modforms::Error| e.to_string())
}

/// A resolved `--input`: a catalog name, `E2star`, or an expression.
enum Input {
    Holomorphic(GradedSeries),
    Nearly(YPolyForm),
}

fn resolve_input(input: &str, prec: usize) -> Result<Input> {
    let name = input.trim();
    if name.eq_ignore_ascii_case("E2star") || name.eq_ignore_ascii_case("E2*") {
        return Ok(Input::Nearly(e2_star(prec)));
    }
    if let Ok(form) = name.parse::<FormName>() {
        return Ok(Input::Holomorphic(form.build(prec)));
    }
    let poly = parse_poly(input).with_context(|| format!("`{}` is neither a catalog name nor an expression", input))?;
    Ok(Input::Holomorphic(eval_generator_poly_graded(&poly, prec)?))
}

fn catalog_form(name: &str, prec: usize) -> Result<GradedSeries> {
    Ok(name.parse::<FormName>()?.build(prec))
}

/// `1 + 240q + 2160q^2 + ... + O(q^N)`.
fn expansion(f: &QSeries) -> String {
    let mut out = String::new();
    for (m, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {} ", sign));
        }
        let coeff = if mag.is_integer() { mag.numer().to_string() } else { format!("({})", mag) };
        match m {
            0 => out.push_str(&coeff),
            _ => {
                if !mag.is_one() {
                    out.push_str(&coeff);
                }
                out.push('q');
                if m > 1 {
                    out.push_str(&format!("^{}", m));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(&format!(" + O(q^{})", f.prec() + 1));
    out
}

fn ypoly_text(f: &YPolyForm) -> String {
    let mut lines = vec![format!("weight {}, {}", f.weight(), modforms::nearly::Y_CONVENTION)];
    for (r, c) in f.components().iter().enumerate() {
        lines.push(format!("Y^{}: {}", r, expansion(c)));
    }
    lines.join("\n")
}

fn emit(as_json: bool, value: Json, text: impl FnOnce() -> String) -> Result<()> {
    let body = if as_json { serde_json::to_string_pretty(&value)? } else { text() };
    let mut out = io::stdout().lock();
    match writeln!(out, "{}", body) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn eigen_text(r: &EigenReport) -> String {
    let mut lines = vec![format!(
        "eigenform up to n = {} on coefficients 0..={}: {}",
        r.tested_bound,
        r.window,
        if r.is_eigen_up_to_bound { "yes" } else { "no" }
    )];
    for (n, l) in &r.eigenvalues {
        lines.push(format!("lambda_{} = {}", n, l));
    }
    if let Some(v) = &r.first_violation {
        lines.push(format!(
            "first violation: n = {}, Y^{}, q^{}: T_n f has {}, lambda_n f has {}",
            v.n, v.component, v.exponent, v.actual, v.expected
        ));
    }
    lines.join("\n")
}

fn monomial_name(a: u32, b: u32) -> String {
    match (a, b) {
        (0, 0) => "1".into(),
        (a, 0) => power("E4", a),
        (0, b) => power("E6", b),
        (a, b) => format!("{}*{}", power("E4", a), power("E6", b)),
    }
}

fn power(g: &str, e: u32) -> String {
    if e == 1 {
        g.into()
    } else {
        format!("{}^{}", g, e)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Eis { weight, prec, json } => {
            let f = eisenstein(weight, prec)?;
            emit(json, json!({ "name": format!("E{}", weight), "weight": weight, "series": json::qseries(&f.series) }), || {
                format!("E{} = {}", weight, expansion(&f.series))
            })?;
        }
        Command::Delta { weight, prec, json } => {
            let f = cusp_delta(weight, prec)?;
            emit(json, json!({ "name": format!("Delta{}", weight), "weight": weight, "series": json::qseries(&f.series) }), || {
                format!("Delta{} = {}", weight, expansion(&f.series))
            })?;
        }
        Command::Hecke { input, n, prec, json } => {
            let warning = (prec < n as usize)
                .then(|| format!("warning: prec {} < n {}, only the constant term of T_n f is determined", prec, n));
            if let Some(w) = &warning {
                eprintln!("{}", w);
            }
            match resolve_input(&input, prec)? {
                Input::Holomorphic(f) => {
                    let image = hecke(&f, n)?;
                    emit(
                        json,
                        json!({ "input": input, "n": n, "result": json::graded(&image.form), "warning": warning }),
                        || format!("T_{} ({}) = {}", n, input, expansion(&image.form.series)),
                    )?;
                }
                Input::Nearly(f) => {
                    let image = hecke_nearly(&f, n)?;
                    emit(json, json!({ "input": input, "n": n, "result": json::ypoly(&image), "warning": warning }), || {
                        format!("T_{} ({}):\n{}", n, input, ypoly_text(&image))
                    })?;
                }
            }
        }
        Command::Eigen { input, bound, window, prec, json } => {
            let report = match resolve_input(&input, prec)? {
                Input::Holomorphic(f) => eigenform_test(&f, bound, window)?,
                Input::Nearly(f) => eigenform_test_nearly(&f, bound, window)?,
            };
            emit(json, json!({ "input": input, "report": json::eigen_report(&report) }), || eigen_text(&report))?;
        }
        Command::Bracket { g, h, m, prec, json } => {
            let (gf, hf) = (catalog_form(&g, prec)?, catalog_form(&h, prec)?);
            let b = rankin_cohen(&gf, &hf, m);
            let coords = if gf.depth == Some(0) && hf.depth == Some(0) && prec + 1 >= dim_modular(b.weight) + MEMBERSHIP_MARGIN {
                is_modular_member(&b.series, b.weight, MEMBERSHIP_MARGIN)?
            } else {
                None
            };
            let basis: Vec<String> = monomial_exponents(b.weight).into_iter().map(|(a, c)| monomial_name(a, c)).collect();
            emit(
                json,
                json!({
                    "g": g, "h": h, "m": m,
                    "result": json::graded(&b),
                    "modular_basis": basis,
                    "modular_coordinates": coords.as_ref().map(json::rationals),
                }),
                || {
                    let mut s = format!("[{}, {}]_{} (weight {}) = {}", g, h, m, b.weight, expansion(&b.series));
                    if let Some(c) = &coords {
                        let terms: Vec<String> =
                            basis.iter().zip(c).map(|(n, x)| format!("({})*{}", x, n)).collect();
                        s.push_str(&format!("\nin M_{}: {}", b.weight, terms.join(" + ")));
                    }
                    s
                },
            )?;
        }
        Command::Decompose { expr, weight, depth, json } => {
            let poly = parse_poly(&expr)?;
            let w = poly.homogeneous_weight()?;
            if w != weight {
                bail!("expression has weight {}, not {}", w, weight);
            }
            if depth < poly.depth() {
                eprintln!("warning: expression has E2-degree {} above the requested depth {}", poly.depth(), depth);
            }
            let cols: usize = (0..=depth).map(|r| dim_modular(weight.saturating_sub(2 * r as u32))).sum();
            let prec = SUITE_PREC.max(cols + DECOMPOSITION_MARGIN);
            let f = eval_generator_poly_graded(&poly, prec)?;
            let Some(parts) = quasimodular_decompose(&f, depth)? else {
                bail!("`{}` has depth greater than {}", expr, depth);
            };
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for (r, part) in &parts {
                let k = part.weight;
                let exps = monomial_exponents(k);
                let coords: Vec<Rational> = if exps.is_empty() {
                    Vec::new()
                } else {
                    is_modular_member(&part.series, k, MEMBERSHIP_MARGIN)?.context("component is not modular")?
                };
                let terms: Vec<(String, &Rational)> = exps
                    .iter()
                    .zip(&coords)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(&(a, b), c)| (monomial_name(a, b), c))
                    .collect();
                rows.push(json!({
                    "r": r,
                    "weight": k,
                    "terms": terms.iter().map(|(n, c)| json!({ "monomial": n, "coeff": json::rational(c) })).collect::<Vec<_>>(),
                    "series": json::qseries(&part.series.truncate(DEFAULT_WINDOW)),
                }));
                if !terms.is_empty() {
                    let body: Vec<String> = terms.iter().map(|(n, c)| format!("({})*{}", c, n)).collect();
                    lines.push(format!("D^{}[ {} ]", r, body.join(" + ")));
                }
            }
            emit(json, json!({ "expr": expr, "weight": weight, "depth": depth, "poly": json::genpoly(&poly), "parts": rows }), || {
                if lines.is_empty() {
                    "0".into()
                } else {
                    lines.join(" + ")
                }
            })?;
        }
        Command::Verify { suite, prec, json, out } => {
            let start = Instant::now();
            let report = run_suite(suite, prec)?;
            let runtime = start.elapsed().as_millis();
            let doc = json::report(&report, runtime);
            if let Some(path) = &out {
                let text = serde_json::to_string_pretty(&doc)? + "\n";
                fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            }
            emit(json, doc, || {
                let mut lines: Vec<String> = report
                    .checks
                    .iter()
                    .map(|c| format!("{}  {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.anchor))
                    .collect();
                lines.push(format!(
                    "{}: {} passed, {} failed ({} ms)",
                    report.suite,
                    report.passed(),
                    report.failed(),
                    runtime
                ));
                lines.join("\n")
            })?;
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
