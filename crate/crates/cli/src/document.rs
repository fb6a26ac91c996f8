//! JSON problem documents.
//!
//! ```json
//! {
//!   "group": {"orders": [2]},
//!   "variables": [{"name": "x", "weight": [0]}, {"name": "z", "weight": [1]}],
//!   "equations": [{"character": [0], "poly": "x^2 + z^2"}],
//!   "profile": [{"character": [1], "k": 1, "forms": [{"z": "x"}]}]
//! }
//! ```
//!
//! Form coefficients that are not listed are zero. Rational coefficients are
//! written inside the polynomial strings as `p/q`.

use std::collections::BTreeMap;

use equindex_core::{
    parse, AbelianGroup, Character, DiagonalRepresentation, EquationSystem, EquivariantFunction, EquivariantOneForm,
    GroupError, KProfile, ParseError, Poly, Problem, ProfileEntry, Rational,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub group: GroupDoc,
    pub variables: Vec<VariableDoc>,
    #[serde(default)]
    pub equations: Vec<EquationDoc>,
    pub profile: Vec<PairDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub orders: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableDoc {
    pub name: String,
    pub weight: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquationDoc {
    pub character: Vec<i64>,
    pub poly: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    pub character: Vec<i64>,
    pub k: u32,
    pub forms: Vec<BTreeMap<String, String>>,
}

/// Explicit perturbations for the conservation harness: generator `i` of the
/// assembled ideal becomes `g_i + epsilon * perturbations[i]`, written in the
/// fixed variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationDoc {
    pub perturbations: Vec<String>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{location}: {source}")]
    Group { location: String, source: GroupError },
    #[error("{location}: {source} in \"{text}\"")]
    Poly { location: String, text: String, source: ParseError },
    #[error("{location}: unknown variable \"{name}\"")]
    UnknownVariable { location: String, name: String },
}

impl ProblemDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Json {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    fn group(&self) -> Result<AbelianGroup, DocumentError> {
        AbelianGroup::new(self.group.orders.clone())
            .map_err(|source| DocumentError::Group { location: "group.orders".into(), source })
    }

    pub fn representation(&self) -> Result<DiagonalRepresentation, DocumentError> {
        let group = self.group()?;
        let mut weights = Vec::with_capacity(self.variables.len());
        for (i, v) in self.variables.iter().enumerate() {
            weights.push(character(&group, &v.weight, &format!("variables[{i}].weight"))?);
        }
        let names = self.variables.iter().map(|v| v.name.clone()).collect();
        DiagonalRepresentation::new(group, weights, names)
            .map_err(|source| DocumentError::Group { location: "variables".into(), source })
    }

    /// Builds the problem. Structural errors are reported here; the
    /// mathematical consistency checks live in `Problem::validate`.
    pub fn to_problem(&self) -> Result<Problem, DocumentError> {
        let rep = self.representation()?;
        let group = rep.group().clone();
        let names = rep.name_refs();

        let mut equations = Vec::with_capacity(self.equations.len());
        for (i, e) in self.equations.iter().enumerate() {
            let location = format!("equations[{i}]");
            equations.push(EquivariantFunction {
                character: character(&group, &e.character, &format!("{location}.character"))?,
                poly: poly(&e.poly, &names, &format!("{location}.poly"))?,
            });
        }

        let mut entries = Vec::with_capacity(self.profile.len());
        let mut forms = Vec::with_capacity(self.profile.len());
        for (i, pair) in self.profile.iter().enumerate() {
            let chi = character(&group, &pair.character, &format!("profile[{i}].character"))?;
            let mut pair_forms = Vec::with_capacity(pair.forms.len());
            for (j, form) in pair.forms.iter().enumerate() {
                let mut coefficients = vec![Poly::zero(names.len()); names.len()];
                for (var, text) in form {
                    let location = format!("profile[{i}].forms[{j}].{var}");
                    let s = names.iter().position(|n| n == var).ok_or_else(|| DocumentError::UnknownVariable {
                        location: location.clone(),
                        name: var.clone(),
                    })?;
                    coefficients[s] = poly(text, &names, &location)?;
                }
                pair_forms.push(EquivariantOneForm { character: chi.clone(), coefficients });
            }
            entries.push(ProfileEntry { character: chi, k: pair.k });
            forms.push(pair_forms);
        }
        Ok(Problem::new(rep, EquationSystem::new(equations), KProfile::new(entries), forms))
    }

    pub fn from_problem(problem: &Problem) -> Self {
        let rep = problem.rep();
        let names = rep.name_refs();
        let exps = |c: &Character| c.exponents().iter().map(|&e| e as i64).collect::<Vec<_>>();
        ProblemDocument {
            group: GroupDoc { orders: rep.group().orders().to_vec() },
            variables: names
                .iter()
                .zip(rep.weights())
                .map(|(n, w)| VariableDoc { name: n.to_string(), weight: exps(w) })
                .collect(),
            equations: problem
                .equations()
                .equations()
                .iter()
                .map(|e| EquationDoc { character: exps(&e.character), poly: e.poly.to_string_with(&names) })
                .collect(),
            profile: problem
                .profile()
                .entries()
                .iter()
                .zip(problem.forms())
                .map(|(entry, pair_forms)| PairDoc {
                    character: exps(&entry.character),
                    k: entry.k,
                    forms: pair_forms
                        .iter()
                        .map(|f| {
                            names
                                .iter()
                                .zip(&f.coefficients)
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(n, c)| (n.to_string(), c.to_string_with(&names)))
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
            deformation: None,
        }
    }

    /// The perturbations of the `deformation` member, in the fixed variables.
    pub fn perturbations(&self, problem: &Problem) -> Result<Option<Vec<Poly>>, DocumentError> {
        let Some(d) = &self.deformation else { return Ok(None) };
        let names = problem.rep().fixed_names();
        d.perturbations
            .iter()
            .enumerate()
            .map(|(i, text)| poly(text, &names, &format!("deformation.perturbations[{i}]")))
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }
}

fn character(group: &AbelianGroup, exponents: &[i64], location: &str) -> Result<Character, DocumentError> {
    group.character(exponents).map_err(|source| DocumentError::Group { location: location.into(), source })
}

fn poly(text: &str, names: &[&str], location: &str) -> Result<Poly, DocumentError> {
    parse::<Rational>(text, names).map_err(|source| DocumentError::Poly {
        location: location.into(),
        text: text.into(),
        source,
    })
}

// serde_json appends " at line L column C" to its messages
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}
