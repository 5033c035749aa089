//! Command-line surface: argument types, dispatch, and text/JSON rendering.

use crate::daha::Side;
use crate::exactalg::{FieldElt, LatticePoly, QLaurent};
use crate::expr::{affine_to_string, parse_affine, parse_expr, parse_lambda};
use crate::heis::{elt_to_json, mat_to_json, HeisElt, HeisMat};
use crate::ktheory::{inverse_pieri_chevalley, ipc_to_json, KClass};
use crate::nildaha::{qtoda, rho0, rho0_sph};
use crate::rootdata::{RootSystem, WeylTable};
use crate::wmatrix::{kappa, opmat_to_json, rho0_prime, rho_prime, OpMat};
use crate::{checks, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "semiflag",
    about = "Exact matrix realizations of the nil affine Hecke action on K-groups of semi-infinite flags",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args)]
pub struct Common {
    /// Root system name: A1, A2, A3, D4, D5
    #[arg(long = "type", value_name = "TYPE")]
    pub rtype: String,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run every verification suite for one root system
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Realize an element as a matrix: generic by default, limit with --limit
    Matrix {
        #[command(flatten)]
        common: Common,
        /// Element expression, e.g. "T[0]*X[-w1]" or "Y[w1]"
        #[arg(long)]
        elt: String,
        /// Take the t -> 0 limit and return a Heisenberg matrix
        #[arg(long)]
        limit: bool,
    },
    /// Expand a multiplication operator over the basis classes
    Ipc {
        #[command(flatten)]
        common: Common,
        /// Weight in fundamental-weight coordinates, e.g. "1,0"
        #[arg(long)]
        lambda: String,
        /// Basis class as an affine element, e.g. "s1*y[1,1]"
        #[arg(long, default_value = "e")]
        w: String,
    },
    /// Spherical element of an invariant polynomial in the X letters
    Sph {
        #[command(flatten)]
        common: Common,
        /// Invariant element expression, e.g. "X[w1]+X[-w1]"
        #[arg(long)]
        elt: String,
    },
    /// Difference Toda operator of an invariant polynomial in the Y letters
    Toda {
        #[command(flatten)]
        common: Common,
        /// Invariant element expression, e.g. "Y[w1]+Y[-w1]"
        #[arg(long)]
        elt: String,
    },
    /// Run the algebra relation suite for one root system
    Relations {
        #[command(flatten)]
        common: Common,
    },
}

fn setup(name: &str) -> Result<(RootSystem, WeylTable)> {
    let rs = RootSystem::new(name)?;
    let wt = WeylTable::build(&rs)?;
    Ok((rs, wt))
}

fn frac_text(base: &str, num: i64, den: i64) -> Option<String> {
    if num == 0 {
        return None;
    }
    let g = {
        let mut a = num.abs();
        let mut b = den;
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let (n, d) = (num / g, den / g);
    Some(if d == 1 {
        if n == 1 {
            base.to_string()
        } else {
            format!("{base}^{n}")
        }
    } else {
        format!("{base}^({n}/{d})")
    })
}

fn coords_text(label: &str, v: &[i64]) -> Option<String> {
    if v.iter().all(|&c| c == 0) {
        return None;
    }
    let inner: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    Some(format!("{label}[{}]", inner.join(",")))
}

fn poly_text(p: &LatticePoly, two_e: i64) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (m, c) in &p.terms {
        let mut factors = Vec::new();
        let coeff = c.to_string();
        let neg = coeff.starts_with('-');
        let abs = coeff.trim_start_matches('-');
        if abs != "1" {
            factors.push(abs.to_string());
        }
        factors.extend(frac_text("q", m.q, two_e));
        factors.extend(frac_text("t", m.t, 2));
        factors.extend(coords_text("x", &m.x));
        if factors.is_empty() {
            factors.push("1".into());
        }
        let sign = if neg { "-" } else { "" };
        parts.push(format!("{sign}{}", factors.join("*")));
    }
    parts.join(" + ").replace("+ -", "- ")
}

fn field_text(f: &FieldElt, two_e: i64) -> String {
    if f.is_polynomial() {
        poly_text(&f.num, two_e)
    } else {
        format!(
            "({}) / ({})",
            poly_text(&f.num, two_e),
            poly_text(&f.den_poly(), two_e)
        )
    }
}

fn heis_elt_text(e: &HeisElt) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for ((k, x, y), c) in &e.terms {
        let mut factors = Vec::new();
        let coeff = c.to_string();
        let neg = coeff.starts_with('-');
        let abs = coeff.trim_start_matches('-');
        if abs != "1" {
            factors.push(abs.to_string());
        }
        factors.extend(frac_text("q", *k, 1));
        factors.extend(coords_text("x", x));
        factors.extend(coords_text("y", y));
        if factors.is_empty() {
            factors.push("1".into());
        }
        let sign = if neg { "-" } else { "" };
        parts.push(format!("{sign}{}", factors.join("*")));
    }
    parts.join(" + ").replace("+ -", "- ")
}

fn heis_mat_text(m: &HeisMat, wt: &WeylTable) -> String {
    let mut lines = Vec::new();
    for i in 0..m.size {
        for j in 0..m.size {
            let e = m.get(i, j);
            if !e.is_zero() {
                lines.push(format!(
                    "({}, {}) = {}",
                    wt.names[i],
                    wt.names[j],
                    heis_elt_text(e)
                ));
            }
        }
    }
    if lines.is_empty() {
        lines.push("0".into());
    }
    lines.join("\n")
}

fn op_mat_text(m: &OpMat, wt: &WeylTable, two_e: i64) -> String {
    let mut lines = Vec::new();
    for i in 0..m.size {
        for j in 0..m.size {
            let entry = m.get(i, j);
            if entry.is_empty() {
                continue;
            }
            let mut parts = Vec::new();
            for (y, f) in entry {
                let mut s = field_text(f, two_e);
                if let Some(yt) = coords_text("y", y) {
                    s = format!("{yt} * ({s})");
                }
                parts.push(s);
            }
            lines.push(format!(
                "({}, {}) = {}",
                wt.names[i],
                wt.names[j],
                parts.join(" + ")
            ));
        }
    }
    if lines.is_empty() {
        lines.push("0".into());
    }
    lines.join("\n")
}

fn qlaurent_text(p: &QLaurent) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (&k, c) in &p.0 {
        let coeff = c.to_string();
        let neg = coeff.starts_with('-');
        let abs = coeff.trim_start_matches('-');
        let body = match frac_text("q", k, 1) {
            Some(q) if abs == "1" => q,
            Some(q) => format!("{abs}*{q}"),
            None => abs.to_string(),
        };
        let sign = if neg { "-" } else { "" };
        parts.push(format!("{sign}{body}"));
    }
    parts.join(" + ").replace("+ -", "- ")
}

fn ipc_text(wt: &WeylTable, c: &KClass) -> String {
    let mut lines = Vec::new();
    for ((beta, v, mu), d) in &c.terms {
        let betas: Vec<String> = beta.iter().map(|b| b.to_string()).collect();
        let mus: Vec<String> = mu.iter().map(|b| b.to_string()).collect();
        lines.push(format!(
            "v = {:<8} beta = [{}]  mu = [{}]  d = {}",
            wt.names[*v],
            betas.join(","),
            mus.join(","),
            qlaurent_text(d)
        ));
    }
    if lines.is_empty() {
        lines.push("0".into());
    }
    lines.join("\n")
}

fn report_output(report: &checks::Report, format: Format) -> (String, i32) {
    let failures = report.iter().filter(|(_, pass)| !pass).count();
    let text = match format {
        Format::Text => {
            let mut lines: Vec<String> = report
                .iter()
                .map(|(name, pass)| format!("{} {name}", if *pass { "PASS" } else { "FAIL" }))
                .collect();
            lines.push(format!("{} checks, {failures} failures", report.len()));
            lines.join("\n")
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = report
                .iter()
                .map(|(name, pass)| serde_json::json!({"name": name, "pass": pass}))
                .collect();
            pretty(&serde_json::json!({"results": rows, "failures": failures}))
        }
    };
    (text, if failures == 0 { 0 } else { 3 })
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json rendering")
}

fn run(cli: &Cli) -> Result<(String, i32)> {
    Ok(match &cli.command {
        Command::Verify { common } => {
            let report = checks::verify_suite(&common.rtype)?;
            let (text, code) = report_output(&report, common.format);
            (finish(common, text)?, code)
        }
        Command::Relations { common } => {
            let (rs, wt) = setup(&common.rtype)?;
            let report = checks::relation_suite(&rs, &wt)?;
            let (text, code) = report_output(&report, common.format);
            (finish(common, text)?, code)
        }
        Command::Matrix { common, elt, limit } => {
            let (rs, wt) = setup(&common.rtype)?;
            let w = parse_expr(&rs, elt)?;
            let text = if *limit {
                let m = match w.side()? {
                    Some(Side::Primed) => rho0_prime(&rs, &wt, &w)?,
                    _ => rho0(&rs, &wt, &w)?,
                };
                match common.format {
                    Format::Text => heis_mat_text(&m, &wt),
                    Format::Json => pretty(&mat_to_json(&m, &rs.name, &wt.names)),
                }
            } else {
                let m = kappa(&rs, &rho_prime(&rs, &wt, &w)?);
                match common.format {
                    Format::Text => op_mat_text(&m, &wt, 2 * rs.e),
                    Format::Json => pretty(&opmat_to_json(&m, &rs, &wt.names)),
                }
            };
            (finish(common, text)?, 0)
        }
        Command::Ipc { common, lambda, w } => {
            let (rs, wt) = setup(&common.rtype)?;
            let lam = parse_lambda(rs.rank, lambda)?;
            let wtilde = parse_affine(&rs, w)?;
            let c = inverse_pieri_chevalley(&rs, &wt, &lam, &wtilde)?;
            let w_str = affine_to_string(&wt, &wtilde);
            let text = match common.format {
                Format::Text => ipc_text(&wt, &c),
                Format::Json => pretty(&ipc_to_json(&rs.name, &wt, &lam, &w_str, &c)),
            };
            (finish(common, text)?, 0)
        }
        Command::Sph { common, elt } => {
            let (rs, wt) = setup(&common.rtype)?;
            let w = parse_expr(&rs, elt)?;
            let f = rho0_sph(&rs, &wt, &w)?;
            let text = match common.format {
                Format::Text => heis_elt_text(&f),
                Format::Json => pretty(&elt_to_json(&f, &rs.name)),
            };
            (finish(common, text)?, 0)
        }
        Command::Toda { common, elt } => {
            let (rs, wt) = setup(&common.rtype)?;
            let w = parse_expr(&rs, elt)?;
            let f = qtoda(&rs, &wt, &w)?;
            let text = match common.format {
                Format::Text => heis_elt_text(&f),
                Format::Json => pretty(&elt_to_json(&f, &rs.name)),
            };
            (finish(common, text)?, 0)
        }
    })
}

fn finish(common: &Common, text: String) -> Result<String> {
    let mut text = text;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &common.out {
        Some(path) => {
            std::fs::write(path, &text)?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(text),
    }
}

/// Dispatch a parsed command line; never panics on user errors.
pub fn execute(cli: &Cli) -> (String, i32) {
    match run(cli) {
        Ok(pair) => pair,
        Err(e) => (format!("error: {e}\n"), e.exit_code()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (String, i32) {
        let cli = Cli::try_parse_from(args).expect("argument parsing");
        execute(&cli)
    }

    #[test]
    fn matrix_limit_matches_reference() {
        let (out, code) = run_args(&[
            "semiflag", "matrix", "--type", "A1", "--elt", "Y[w1]", "--limit", "--format", "json",
        ]);
        assert_eq!(code, 0, "{out}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v, crate::golden::golden_json("a1_rho0p_y_omega").unwrap());
    }

    #[test]
    fn expansion_is_the_two_term_table() {
        let (out, code) = run_args(&[
            "semiflag", "ipc", "--type", "A1", "--lambda", "1", "--w", "e", "--format", "json",
        ]);
        assert_eq!(code, 0, "{out}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v, crate::golden::golden_json("a1_ipc_basis_e").unwrap());
    }

    #[test]
    fn parse_errors_exit_with_code_one() {
        let (out, code) = run_args(&["semiflag", "matrix", "--type", "A1", "--elt", "T[7]"]);
        assert_eq!(code, 1, "{out}");
        assert!(out.starts_with("error:"));
    }

    #[test]
    fn failed_invariance_exits_with_code_three() {
        let (_, code) = run_args(&["semiflag", "sph", "--type", "A1", "--elt", "X[w1]"]);
        assert_eq!(code, 3);
    }

    #[test]
    fn fractional_center_exits_with_code_three() {
        // A central letter below the integrality threshold cannot reach the
        // limit algebra.
        let (out, code) = run_args(&[
            "semiflag", "matrix", "--type", "A1", "--elt", "Yd[1]", "--limit",
        ]);
        assert_eq!(code, 3, "{out}");
    }

    #[test]
    fn text_output_of_spherical_element() {
        let (out, code) = run_args(&[
            "semiflag", "sph", "--type", "A1", "--elt", "X[w1]+X[-w1]",
        ]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("x[-1]"), "{out}");
        assert!(out.contains("q^-1"), "{out}");
    }
}
