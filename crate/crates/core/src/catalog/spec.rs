// SPDX-License-Identifier: Apache-2.0

//! JSON algebra-spec files. All numbers are exact-rational strings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CatalogError;
use crate::arith::Rational;
use crate::brst::Datum;
use crate::lie::{BasisElement, BracketEntry, FormEntry, Parity, SuperAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpecFile {
    pub name: String,
    pub basis: Vec<BasisSpec>,
    pub form: Vec<FormSpec>,
    pub brackets: Vec<BracketSpec>,
    pub x: Vec<String>,
    pub f: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity_element: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisSpec {
    pub name: String,
    pub parity: ParitySpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParitySpec {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub k: usize,
    pub coeff: String,
}

fn rat(field: String, s: &str) -> Result<Rational, CatalogError> {
    s.parse().map_err(|e| CatalogError::Parse { line: None, field, message: format!("{e}") })
}

fn rats(field: &str, v: &[String]) -> Result<Vec<Rational>, CatalogError> {
    v.iter().enumerate().map(|(n, s)| rat(format!("{field}[{n}]"), s)).collect()
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

impl AlgebraSpecFile {
    pub fn from_algebra(alg: &SuperAlgebra) -> Self {
        AlgebraSpecFile {
            name: alg.name().to_string(),
            basis: alg
                .basis()
                .iter()
                .map(|b| BasisSpec {
                    name: b.name.clone(),
                    parity: match b.parity {
                        Parity::Even => ParitySpec::Even,
                        Parity::Odd => ParitySpec::Odd,
                    },
                })
                .collect(),
            form: alg
                .form_entries()
                .into_iter()
                .map(|e| FormSpec { i: e.i, j: e.j, value: e.value.to_string() })
                .collect(),
            brackets: alg
                .bracket_entries()
                .into_iter()
                .map(|e| BracketSpec {
                    i: e.i,
                    j: e.j,
                    terms: e.terms.iter().map(|(k, c)| TermSpec { k: *k, coeff: c.to_string() }).collect(),
                })
                .collect(),
            x: strs(alg.x()),
            f: strs(alg.f()),
            identity_element: alg.identity_element().map(|v| strs(v)),
        }
    }

    /// Builds the algebra without checking the axioms.
    pub fn to_algebra(&self) -> Result<SuperAlgebra, CatalogError> {
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElement {
                name: b.name.clone(),
                parity: match b.parity {
                    ParitySpec::Even => Parity::Even,
                    ParitySpec::Odd => Parity::Odd,
                },
            })
            .collect();
        let form = self
            .form
            .iter()
            .enumerate()
            .map(|(n, e)| Ok(FormEntry { i: e.i, j: e.j, value: rat(format!("form[{n}].value"), &e.value)? }))
            .collect::<Result<Vec<_>, CatalogError>>()?;
        let mut brackets = Vec::new();
        for (n, e) in self.brackets.iter().enumerate() {
            let terms = e
                .terms
                .iter()
                .enumerate()
                .map(|(m, t)| Ok((t.k, rat(format!("brackets[{n}].terms[{m}].coeff"), &t.coeff)?)))
                .collect::<Result<Vec<_>, CatalogError>>()?;
            brackets.push(BracketEntry { i: e.i, j: e.j, terms });
        }
        let identity = match &self.identity_element {
            Some(v) => Some(rats("identity_element", v)?),
            None => None,
        };
        SuperAlgebra::new(self.name.clone(), basis, brackets, form, rats("x", &self.x)?, rats("f", &self.f)?, identity)
            .map_err(|e| CatalogError::Parse { line: None, field: "table".into(), message: e.to_string() })
    }
}

/// Parses spec text into an algebra that passes validation.
pub fn parse_spec(text: &str) -> Result<SuperAlgebra, CatalogError> {
    let file: AlgebraSpecFile = serde_json::from_str(text).map_err(|e| CatalogError::Parse {
        line: Some(e.line()),
        field: "json".into(),
        message: e.to_string(),
    })?;
    let alg = file.to_algebra()?;
    let report = alg.validate();
    if !report.is_ok() {
        return Err(CatalogError::Validation(report.to_string()));
    }
    Ok(alg)
}

/// Canonical pretty-printed spec text, newline-terminated.
pub fn render_spec(alg: &SuperAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraSpecFile::from_algebra(alg)).expect("spec serializes");
    s.push('\n');
    s
}

pub fn load_datum(path: &Path) -> Result<Datum, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io(format!("{}: {e}", path.display())))?;
    Ok(Datum::new(parse_spec(&text)?)?)
}

pub fn save_datum(datum: &Datum, path: &Path) -> Result<(), CatalogError> {
    std::fs::write(path, render_spec(&datum.alg)).map_err(|e| CatalogError::Io(format!("{}: {e}", path.display())))
}
