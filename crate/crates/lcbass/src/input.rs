//! Ideal files: JSON with `nvars`, optional `vars`, and exactly one of
//! `gens` (supports of square-free generators) or `facets` (a simplicial
//! complex, read through Stanley–Reisner). Indices are 1-based.

use std::path::Path;

use lcbass_core::poly::render_monomial;
use lcbass_core::sr::{ideal_from_complex, SimplicialComplex, SquareFreeIdeal, VarSet};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub nvars: usize,
    #[serde(default)]
    pub vars: Option<Vec<String>>,
    #[serde(default)]
    pub gens: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub facets: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}:{line}:{column}: {message}")]
    Syntax {
        origin: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{origin}: {message}")]
    Invalid { origin: String, message: String },
}

/// A parsed ideal plus the notes produced while normalizing it.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub ideal: SquareFreeIdeal,
    pub warnings: Vec<String>,
}

pub fn load(path: &Path) -> Result<Loaded, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text, &path.display().to_string())
}

/// Parses and validates an ideal file. `origin` names the source in
/// messages.
pub fn parse(text: &str, origin: &str) -> Result<Loaded, InputError> {
    let file: IdealFile = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        origin: origin.to_string(),
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    let invalid = |message: String| InputError::Invalid {
        origin: origin.to_string(),
        message,
    };
    let n = file.nvars;
    if n == 0 || n > 64 {
        return Err(invalid(format!("nvars must be in 1..=64, got {n}")));
    }
    let names = match file.vars {
        Some(v) if v.len() != n => {
            return Err(invalid(format!(
                "vars lists {} names for {n} variables",
                v.len()
            )));
        }
        Some(v) => v,
        None => lcbass_core::poly::default_names(n),
    };
    let (key, lists, is_gens) = match (file.gens, file.facets) {
        (Some(g), None) => ("gens", g, true),
        (None, Some(f)) => ("facets", f, false),
        (Some(_), Some(_)) => return Err(invalid("give either gens or facets, not both".into())),
        (None, None) => return Err(invalid("missing gens or facets".into())),
    };
    let mut sets = Vec::with_capacity(lists.len());
    for (k, list) in lists.iter().enumerate() {
        if list.is_empty() {
            return Err(invalid(format!("{key}[{k}] is empty")));
        }
        if let Some(&j) = list.iter().find(|&&j| j == 0 || j > n) {
            return Err(invalid(format!("{key}[{k}] has index {j} outside 1..={n}")));
        }
        sets.push(VarSet::from_indices(list.iter().map(|j| j - 1)));
    }

    let mut warnings = Vec::new();
    let ideal = if is_gens {
        let ideal = SquareFreeIdeal::with_names(n, sets.clone(), names.clone())
            .map_err(|e| invalid(e.to_string()))?;
        let mut seen: Vec<VarSet> = Vec::new();
        for s in sets {
            if seen.contains(&s) {
                continue;
            }
            seen.push(s);
            if !ideal.gens().contains(&s) {
                warnings.push(format!(
                    "dropped non-minimal generator {}",
                    render_monomial(&support_monomial(n, s), &names)
                ));
            }
        }
        ideal
    } else {
        let delta = SimplicialComplex::new(n, sets).map_err(|e| invalid(e.to_string()))?;
        let ideal = ideal_from_complex(&delta);
        SquareFreeIdeal::with_names(n, ideal.gens().to_vec(), names)
            .map_err(|e| invalid(e.to_string()))?
    };
    if ideal.is_zero() {
        return Err(invalid("the ideal is zero".into()));
    }
    Ok(Loaded { ideal, warnings })
}

fn support_monomial(n: usize, s: VarSet) -> lcbass_core::poly::Monomial {
    lcbass_core::poly::Monomial((0..n).map(|j| u32::from(s.contains(j))).collect())
}

/// serde_json appends " at line L column C"; the position is reported
/// separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(k) => msg[..k].to_string(),
        None => msg.to_string(),
    }
}
