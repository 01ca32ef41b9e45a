// SPDX-License-Identifier: Apache-2.0

//! Claim selection, execution and the verification report.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::CatalogError;
use crate::brst::{Check, Complex, Mode, IDENTITY_IDS};

pub const SCHEMA_VERSION: u32 = 1;
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Claim groups accepted by `verify --claim`.
pub const CLAIM_GROUPS: [&str; 8] = ["thm3.1", "thm3.2", "cor3.1", "ope2.10", "ope2.15", "ope2.18", "identities", "all"];

/// Claims run by `verify --claim all`, identities excluded.
const STRUCTURAL: [&str; 10] =
    ["calculus", "d2", "closed-forms", "ope2.10", "ope2.15", "ope2.18", "thm3.1", "thm3.2", "central-charge", "cor3.1"];

/// Random composites per datum in the `calculus` claim.
pub const COMPOSITES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunOptions {
    /// Seed for the randomized property suites.
    pub seed: u64,
    /// Record wall-clock time per claim; makes the report nondeterministic.
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: String,
    pub status: Status,
    /// First residual, or the reason for a skip.
    pub residual: Option<String>,
    #[serde(skip)]
    pub residual_latex: Option<String>,
    pub wall_time: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemRecord {
    pub mode: String,
    pub cartan: Vec<String>,
    pub positive: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub engine_version: String,
    pub datum: String,
    pub root_system: RootSystemRecord,
    pub claims: Vec<ClaimResult>,
}

/// Expands a `--claim` group into individual claim ids.
pub fn expand_claims(group: &str) -> Result<Vec<String>, CatalogError> {
    let own = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    Ok(match group {
        "all" => {
            let mut v = own(&STRUCTURAL);
            v.extend(own(&IDENTITY_IDS));
            v
        }
        "identities" => own(&IDENTITY_IDS),
        g if CLAIM_GROUPS.contains(&g) || STRUCTURAL.contains(&g) || IDENTITY_IDS.contains(&g) => vec![g.to_string()],
        g => return Err(CatalogError::UnknownClaim(g.to_string())),
    })
}

/// Runs one claim id.
pub fn run_claim(cx: &Complex, claim: &str, seed: u64) -> Result<Check, CatalogError> {
    Ok(match claim {
        "calculus" => cx.check_lambda_axioms(seed, COMPOSITES),
        "d2" => cx.check_d_squared(),
        "closed-forms" => cx.check_closed_forms(),
        "ope2.10" => cx.check_ope_2_10(),
        "ope2.15" => cx.check_ope_2_15(),
        "ope2.18" => cx.check_ope_2_18(),
        "thm3.1" => cx.verify_thm31(),
        "thm3.2" => cx.verify_thm32(),
        "central-charge" => cx.central_charge().0,
        "cor3.1" => cx.check_ffr(),
        id => cx.verify_identity(id).map_err(|_| CatalogError::UnknownClaim(id.to_string()))?,
    })
}

fn result_of(claim: &str, check: Check, secs: f64, timing: bool) -> ClaimResult {
    let (status, residual, residual_latex) = if let Some(why) = &check.skipped {
        (Status::Skipped, Some(why.clone()), None)
    } else if let Some(r) = check.residuals.first() {
        let more = check.residuals.len() - 1;
        let tail = if more > 0 { format!(" (+{more} more)") } else { String::new() };
        (Status::Failed, Some(format!("{}: {}{tail}", r.label, r.text)), Some(r.latex.clone()))
    } else {
        (Status::Verified, None, None)
    };
    ClaimResult { claim: claim.to_string(), status, residual, residual_latex, wall_time: timing.then_some(secs) }
}

/// Runs the claims, fanning out over workers when enabled. Output order
/// follows `claims`.
pub fn verify_claims(cx: &Complex, claims: &[String], opts: RunOptions) -> Result<Report, CatalogError> {
    let one = |c: &String| -> Result<ClaimResult, CatalogError> {
        let t = Instant::now();
        let check = run_claim(cx, c, opts.seed)?;
        Ok(result_of(c, check, t.elapsed().as_secs_f64(), opts.timing))
    };
    #[cfg(feature = "parallel")]
    let results: Result<Vec<_>, _> = {
        use rayon::prelude::*;
        claims.par_iter().map(one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Result<Vec<_>, _> = claims.iter().map(one).collect();
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        engine_version: ENGINE_VERSION.to_string(),
        datum: cx.datum.name().to_string(),
        root_system: root_record(cx),
        claims: results?,
    })
}

fn root_record(cx: &Complex) -> RootSystemRecord {
    let alg = &cx.datum.alg;
    let roots = &cx.datum.rho.roots;
    let names = |v: &[usize]| v.iter().map(|&i| alg.basis_name(i).to_string()).collect();
    RootSystemRecord {
        mode: match cx.mode {
            Mode::Standard => "standard".into(),
            Mode::GlNN => "gl_nn".into(),
        },
        cartan: names(&roots.cartan),
        positive: names(&roots.positive),
    }
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Failed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("datum {} (engine {})\n", self.datum, self.engine_version);
        for c in &self.claims {
            let st = match c.status {
                Status::Verified => "verified",
                Status::Failed => "FAILED",
                Status::Skipped => "skipped",
            };
            s.push_str(&format!("{:<16} {st}", c.claim));
            if let Some(t) = c.wall_time {
                s.push_str(&format!("  {t:.3}s"));
            }
            if let Some(r) = &c.residual {
                s.push_str(&format!("  {r}"));
            }
            s.push('\n');
        }
        s
    }

    pub fn to_latex(&self) -> String {
        let mut body = String::new();
        body.push_str("\\begin{tabular}{ll}\n\\hline\nclaim & status \\\\\n\\hline\n");
        for c in &self.claims {
            let st = match c.status {
                Status::Verified => "verified",
                Status::Failed => "failed",
                Status::Skipped => "skipped",
            };
            body.push_str(&format!("{} & {st} \\\\\n", latex_text(&c.claim)));
        }
        body.push_str("\\hline\n\\end{tabular}\n");
        for c in &self.claims {
            if let Some(r) = &c.residual_latex {
                body.push_str(&format!("\n\\paragraph{{{}}}\nResidual:\n\\[ {r} \\]\n", latex_text(&c.claim)));
            }
        }
        latex_document(&format!("Verification report: {}", latex_text(&self.datum)), &body)
    }
}

/// Wraps a body into a compilable standalone document.
pub fn latex_document(title: &str, body: &str) -> String {
    format!(
        "\\documentclass{{article}}\n\\usepackage{{amsmath,amssymb}}\n\\begin{{document}}\n\\section*{{{title}}}\n{body}\\end{{document}}\n"
    )
}

/// Escapes plain text for LaTeX, mapping the few symbols used in labels.
pub fn latex_text(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            '\\' => out.push_str("\\textbackslash{}"),
            '_' | '%' | '&' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            'λ' => out.push_str("$\\lambda$"),
            '∂' => out.push_str("$\\partial$"),
            'φ' => out.push_str("$\\varphi$"),
            'Φ' => out.push_str("$\\Phi$"),
            'κ' => out.push_str("$\\kappa$"),
            'ρ' => out.push_str("$\\rho$"),
            'Ω' => out.push_str("$\\Omega$"),
            '∨' => out.push_str("$^\\vee$"),
            '½' => out.push_str("$\\tfrac12$"),
            '≠' => out.push_str("$\\neq$"),
            '⊕' => out.push_str("$\\oplus$"),
            c if c.is_ascii() => out.push(c),
            _ => out.push('?'),
        }
    }
    out
}
