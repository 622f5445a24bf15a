//! JSON representation files.
//!
//! ```json
//! {
//!   "field": {"type": "cyclotomic", "order": 5},
//!   "seeds": {
//!     "a1": [["0", "1", "0"], ["0", "0", "1"], ["t", "0", "0"]],
//!     "a2": [["0", "z^2", "0"], ["0", "0", "z^2"], ["z*t", "0", "0"]]
//!   }
//! }
//! ```
//!
//! Field types: `rationals`, `cyclotomic` (involution `z ↦ z⁻¹`),
//! `cyclotomic_fixed` (trivial involution) and `extension` with an explicit
//! ascending `modulus` and trivial involution. Omitting `seeds` gives the
//! abelian representation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ArcRepresentation, RepError};
use crate::exact_algebra::{format_laurent, parse_fe, parse_laurent, AlgebraError, Field, FieldRef, Involution, Matrix};
use crate::knot_diagram::KnotDiagram;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldSpec {
    Rationals,
    Cyclotomic { order: u32 },
    CyclotomicFixed { order: u32 },
    Extension { modulus: Vec<String> },
}

impl FieldSpec {
    pub fn build(&self) -> Result<FieldRef, AlgebraError> {
        match self {
            FieldSpec::Rationals => Ok(Field::rationals()),
            FieldSpec::Cyclotomic { order } => Ok(Field::cyclotomic(*order)),
            FieldSpec::CyclotomicFixed { order } => Ok(Field::cyclotomic_fixed(*order)),
            FieldSpec::Extension { modulus } => {
                let q = Field::rationals();
                let coeffs = modulus
                    .iter()
                    .map(|c| parse_fe(&q, c).map(|x| x.as_rational().unwrap()))
                    .collect::<Result<Vec<_>, _>>()?;
                Field::from_modulus("extension", coeffs, Involution::Identity)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub field: FieldSpec,
    #[serde(default)]
    pub seeds: BTreeMap<String, Vec<Vec<String>>>,
}

pub fn parse_rep_json(text: &str, d: &KnotDiagram) -> Result<(RepFile, FieldRef, ArcRepresentation), RepError> {
    let file: RepFile = serde_json::from_str(text).map_err(|e| RepError::Dimension(format!("representation file: {e}")))?;
    let field = file.field.build()?;
    if file.seeds.is_empty() {
        let rep = ArcRepresentation::abelian(d, &field);
        return Ok((file, field, rep));
    }
    let mut seeds = Vec::new();
    for (arc, rows) in &file.seeds {
        let m = rows
            .iter()
            .map(|r| r.iter().map(|e| parse_laurent(&field, e)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        if m.is_empty() || m.iter().any(|r| r.len() != m.len()) {
            return Err(RepError::Dimension(format!("seed on {arc} is not square")));
        }
        seeds.push((arc.clone(), Matrix::from_rows(m)));
    }
    let rep = ArcRepresentation::from_seeds(d, &field, &seeds)?;
    Ok((file, field, rep))
}

/// Every arc's matrix, in the seed format.
pub fn rep_to_json(spec: &FieldSpec, d: &KnotDiagram, rep: &ArcRepresentation) -> String {
    let mut seeds = BTreeMap::new();
    for (i, m) in rep.matrices().iter().enumerate() {
        let rows = m.to_rows().iter().map(|r| r.iter().map(format_laurent).collect()).collect();
        seeds.insert(d.arcs()[i].clone(), rows);
    }
    serde_json::to_string_pretty(&RepFile { field: spec.clone(), seeds }).unwrap()
}
