// SPDX-License-Identifier: Apache-2.0

//! Text and LaTeX rendering of expressions.

use super::algebra::ConformalAlgebra;
use super::expr::{LambdaPoly, Monomial, VAExpr};
use crate::arith::{PolyK, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

fn factor_str(alg: &ConformalAlgebra, m: &Monomial, style: Style) -> Vec<String> {
    m.factors()
        .iter()
        .map(|f| {
            let spec = alg.spec(f.gen);
            let name = match style {
                Style::Text => spec.text.as_str(),
                Style::Latex => spec.latex.as_str(),
            };
            match (style, f.n) {
                (_, 0) => name.to_string(),
                (Style::Text, 1) => format!("∂{name}"),
                (Style::Text, n) => format!("∂^{n}{name}"),
                (Style::Latex, 1) => format!("\\partial {name}"),
                (Style::Latex, n) => format!("\\partial^{{{n}}} {name}"),
            }
        })
        .collect()
}

pub fn render_monomial(alg: &ConformalAlgebra, m: &Monomial, style: Style) -> String {
    let fs = factor_str(alg, m, style);
    match (fs.len(), style) {
        (0, _) => "1".to_string(),
        (1, _) => fs[0].clone(),
        (_, Style::Text) => format!(":{}:", fs.join(" ")),
        (_, Style::Latex) => format!(":{}:", fs.join(" \\, ")),
    }
}

fn poly_latex(p: &PolyK) -> String {
    // reuse the text form and translate fractions and powers
    let mut out = String::new();
    let mut first = true;
    for (n, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        out.push_str(match (first, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        first = false;
        let cs = rational_latex(&mag);
        match n {
            0 => out.push_str(&cs),
            _ => {
                if !mag.is_one() {
                    out.push_str(&cs);
                }
                out.push('k');
                if n > 1 {
                    out.push_str(&format!("^{{{n}}}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let neg = if r.is_negative() { "-" } else { "" };
        let a = r.abs();
        format!("{neg}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

fn is_single_term(p: &PolyK) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
}

/// Magnitude of a coefficient (sign extracted) and whether it was negative.
fn split_sign(c: &Scalar) -> (Scalar, bool) {
    if c.leading_is_negative() {
        (-c, true)
    } else {
        (c.clone(), false)
    }
}

fn coeff_text(c: &Scalar) -> String {
    if let Some(r) = c.as_rational() {
        return r.to_string();
    }
    let num = if is_single_term(c.num()) { c.num().to_string() } else { format!("({})", c.num()) };
    if c.den().is_one() {
        num
    } else if is_single_term(c.den()) {
        format!("{num}/{}", c.den())
    } else {
        format!("{num}/({})", c.den())
    }
}

fn coeff_latex(c: &Scalar) -> String {
    if let Some(r) = c.as_rational() {
        return rational_latex(&r);
    }
    if c.den().is_one() {
        if is_single_term(c.num()) {
            poly_latex(c.num())
        } else {
            format!("\\left({}\\right)", poly_latex(c.num()))
        }
    } else {
        format!("\\frac{{{}}}{{{}}}", poly_latex(c.num()), poly_latex(c.den()))
    }
}

pub fn render_expr(alg: &ConformalAlgebra, e: &VAExpr, style: Style) -> String {
    render_terms(alg, e.terms(), style)
}

/// Like [`render_expr`], with terms ordered by conformal weight first.
pub fn render_by_weight(alg: &ConformalAlgebra, e: &VAExpr, style: Style) -> String {
    let mut terms: Vec<_> = e.terms().collect();
    terms.sort_by_key(|(m, _)| alg.conformal_weight2(m));
    render_terms(alg, terms.into_iter(), style)
}

fn render_terms<'a>(
    alg: &ConformalAlgebra,
    terms: impl Iterator<Item = (&'a Monomial, &'a Scalar)>,
    style: Style,
) -> String {
    let mut out = String::new();
    for (idx, (m, c)) in terms.enumerate() {
        let (mag, neg) = split_sign(c);
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let body = render_monomial(alg, m, style);
        if mag.is_one() {
            out.push_str(&body);
            continue;
        }
        let cs = match style {
            Style::Text => coeff_text(&mag),
            Style::Latex => coeff_latex(&mag),
        };
        if m.is_vacuum() {
            out.push_str(&cs);
        } else if style == Style::Text && mag.as_rational().is_some_and(|r| r.is_integer()) {
            out.push_str(&cs);
            out.push_str(&body);
        } else {
            out.push_str(&cs);
            out.push(' ');
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_lambda(alg: &ConformalAlgebra, p: &LambdaPoly, style: Style) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let lam = match style {
        Style::Text => "λ",
        Style::Latex => "\\lambda",
    };
    let mut parts = Vec::new();
    for n in 0..=p.degree().unwrap_or(0) {
        let c = p.power_coeff(n);
        if c.is_zero() {
            continue;
        }
        let body = render_expr(alg, &c, style);
        let body = if c.len() > 1 { format!("({body})") } else { body };
        parts.push(match n {
            0 => body,
            1 => match style {
                Style::Text => format!("{lam}·{body}"),
                Style::Latex => format!("{lam} {body}"),
            },
            _ => match style {
                Style::Text => format!("{lam}^{n}·{body}"),
                Style::Latex => format!("{lam}^{{{n}}} {body}"),
            },
        });
    }
    parts.join(" + ")
}

/// A coefficient on its own.
pub fn render_scalar(c: &Scalar, style: Style) -> String {
    let (mag, neg) = split_sign(c);
    let body = match style {
        Style::Text => coeff_text(&mag),
        Style::Latex => coeff_latex(&mag),
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
