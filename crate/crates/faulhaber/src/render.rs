//! Plain-text, JSON, and LaTeX renderings.
//!
//! Plain polynomial output is canonical: ascending degree, explicit signs,
//! zero terms omitted, the zero polynomial rendered `0`.  JSON documents
//! carry big integers as decimal strings, never numeric literals, so
//! consumers with 64-bit parsers cannot silently truncate; keys serialize in
//! sorted order, which makes parse-and-rerender reproduce the document
//! byte for byte.  LaTeX output is a display-math fragment with no preamble.

use crate::forms::{FaulhaberForm, Parity};
use crate::numerics::Rational;
use crate::poly::{Basis, Polynomial, USplit};
use crate::verify::TheoremReport;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// Output format selector shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Plain,
    Json,
    Latex,
}

/// `p/q`, or just `p` for integers.
pub fn rational_plain(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `\frac{p}{q}` with the sign pulled out front; integers render bare.
pub fn rational_latex(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let sign = if r.numer().is_negative() { "-" } else { "" };
        format!("{}\\frac{{{}}}{{{}}}", sign, r.numer().abs(), r.denom())
    }
}

/// `{"num": "...", "den": "..."}` with decimal-string components.
pub fn rational_json(r: &Rational) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

pub fn rationals_json(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational_json).collect())
}

/// One variable token in each of the two output languages.
struct VarStyle {
    plain: &'static str,
    latex: &'static str,
}

const VAR_X: VarStyle = VarStyle {
    plain: "x",
    latex: "x",
};
const VAR_CENTERED: VarStyle = VarStyle {
    plain: "(x - 1/2)",
    latex: "\\left(x - \\frac{1}{2}\\right)",
};
const VAR_U: VarStyle = VarStyle {
    plain: "U",
    latex: "U",
};
const VAR_S1: VarStyle = VarStyle {
    plain: "S_1",
    latex: "S_{1}",
};

fn var_for(basis: Basis) -> &'static VarStyle {
    match basis {
        Basis::PowerX => &VAR_X,
        Basis::CenteredHalf => &VAR_CENTERED,
        Basis::UBasis => &VAR_U,
    }
}

/// Ascending-degree term list with explicit signs.  `latex` switches the
/// coefficient and exponent syntax.
fn terms(coeffs: &[Rational], var: &VarStyle, latex: bool) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let var_part = match (k, latex) {
            (0, _) => String::new(),
            (1, _) => var_token(var, latex).to_string(),
            (_, false) => format!("{}^{}", var_token(var, latex), k),
            (_, true) => format!("{}^{{{}}}", var_token(var, latex), k),
        };
        let coeff_part = if latex {
            rational_latex(&mag)
        } else {
            rational_plain(&mag)
        };
        if k == 0 {
            out.push_str(&coeff_part);
        } else if mag.is_one() {
            out.push_str(&var_part);
        } else if latex {
            out.push_str(&format!("{} {}", coeff_part, var_part));
        } else {
            out.push_str(&format!("{}*{}", coeff_part, var_part));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn var_token(var: &VarStyle, latex: bool) -> &'static str {
    if latex {
        var.latex
    } else {
        var.plain
    }
}

pub fn poly_plain(p: &Polynomial) -> String {
    terms(p.coeffs(), var_for(p.basis()), false)
}

pub fn poly_latex(p: &Polynomial) -> String {
    terms(p.coeffs(), var_for(p.basis()), true)
}

/// Renders an even/odd U-split: the even part stands alone, the odd part is
/// wrapped as `(x - 1/2)*(...)`, and both appear joined by ` + ` when
/// neither vanishes.
pub fn usplit_plain(split: &USplit) -> String {
    let even = terms(split.even.coeffs(), &VAR_U, false);
    let odd = terms(split.odd.coeffs(), &VAR_U, false);
    match (split.even.is_zero(), split.odd.is_zero()) {
        (_, true) => even,
        (true, false) => format!("(x - 1/2)*({odd})"),
        (false, false) => format!("{even} + (x - 1/2)*({odd})"),
    }
}

pub fn usplit_latex(split: &USplit) -> String {
    let even = terms(split.even.coeffs(), &VAR_U, true);
    let odd = terms(split.odd.coeffs(), &VAR_U, true);
    match (split.even.is_zero(), split.odd.is_zero()) {
        (_, true) => even,
        (true, false) => format!("\\left(x - \\frac{{1}}{{2}}\\right) \\left( {odd} \\right)"),
        (false, false) => format!(
            "{even} + \\left(x - \\frac{{1}}{{2}}\\right) \\left( {odd} \\right)"
        ),
    }
}

fn prefactor_plain(parity: Parity) -> &'static str {
    match parity {
        Parity::Even => "S_2",
        Parity::Odd => "S_1^2",
    }
}

/// `S_4 = S_2*(-1/5 + 6/5*S_1)` and friends.
pub fn faulhaber_plain(form: &FaulhaberForm) -> String {
    format!(
        "S_{} = {}*({})",
        form.exponent(),
        prefactor_plain(form.parity()),
        terms(form.coeffs(), &VAR_S1, false)
    )
}

pub fn faulhaber_latex(form: &FaulhaberForm) -> String {
    let prefactor = match form.parity() {
        Parity::Even => "S_{2}".to_string(),
        Parity::Odd => "S_{1}^{2}".to_string(),
    };
    format!(
        "S_{{{}}} = {} \\left( {} \\right)",
        form.exponent(),
        prefactor,
        terms(form.coeffs(), &VAR_S1, true)
    )
}

pub fn faulhaber_json(form: &FaulhaberForm) -> Value {
    json!({
        "exponent": form.exponent(),
        "parity": match form.parity() { Parity::Even => "even", Parity::Odd => "odd" },
        "coeffs": rationals_json(form.coeffs()),
    })
}

/// Fixed-width pass/fail table over the sweep reports, with a one-line
/// summary at the bottom.
pub fn reports_plain(reports: &[TheoremReport], max_m: u32) -> String {
    let mut out = String::from("theorem  m   result\n");
    let mut failed = 0usize;
    for r in reports {
        let result = if r.verdict {
            "pass".to_string()
        } else {
            failed += 1;
            let names: Vec<&str> = r
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.name)
                .collect();
            format!("FAIL [{}]", names.join(", "))
        };
        out.push_str(&format!("{:<8} {:<3} {}\n", r.theorem.to_string(), r.m, result));
    }
    if failed == 0 {
        out.push_str(&format!(
            "all {} reports passed (max m = {})\n",
            reports.len(),
            max_m
        ));
    } else {
        out.push_str(&format!(
            "{failed} of {} reports FAILED (max m = {})\n",
            reports.len(),
            max_m
        ));
    }
    out
}

pub fn reports_json(reports: &[TheoremReport], max_m: u32) -> Value {
    let all_pass = reports.iter().all(|r| r.verdict);
    json!({
        "all_pass": all_pass,
        "max_m": max_m,
        "reports": reports.iter().map(|r| json!({
            "theorem": r.theorem.to_string(),
            "m": r.m,
            "verdict": r.verdict,
            "checks": r.checks.iter().map(|c| json!({
                "name": c.name,
                "pass": c.pass,
                "witness": c.witness,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

/// Math-mode `array` fragment: one row per report.
pub fn reports_latex(reports: &[TheoremReport], max_m: u32) -> String {
    let mut out = String::from("\\begin{array}{llc}\n");
    for r in reports {
        let mark = if r.verdict { "\\checkmark" } else { "\\times" };
        out.push_str(&format!(
            "\\text{{{}}} & m = {} & {} \\\\\n",
            r.theorem, r.m, mark
        ));
    }
    out.push_str(&format!(
        "\\multicolumn{{3}}{{l}}{{\\text{{max }} m = {max_m}}}\n\\end{{array}}"
    ));
    out
}

/// Serializes with sorted keys (the `Value` map is ordered), so output is
/// deterministic and parse-rerender stable.
pub fn json_to_string(v: &Value) -> String {
    serde_json::to_string(v).expect("no non-string keys or floats")
}
