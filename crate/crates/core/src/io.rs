//! JSON file formats.
//!
//! Algebra: `{"dim": n, "unit": 0, "constants": [[["p/q", ...], ...], ...],
//! "grading": {"even": [...], "odd": [...]}, "labels": [...]}` where
//! `constants[i][j][k]` is the coefficient of `e_k` in `e_i e_j`; `unit`,
//! `grading` and `labels` are optional.
//!
//! Linear map: `{"matrix": [["p/q", ...], ...]}`, column `i` being the
//! image of basis vector `i`.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::cayley_dickson::Grading;
use crate::error::{Error, ParseError, Result};
use crate::matrix::QMatrix;
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingFile {
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
    pub constants: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn file_error(msg: impl Into<String>) -> Error {
    Error::Parse(ParseError::File(msg.into()))
}

impl AlgebraFile {
    /// `grading` must be spanned by basis vectors to be written; other
    /// gradings are dropped.
    pub fn from_algebra(a: &Algebra, grading: Option<&Grading>) -> Self {
        let n = a.dim();
        let constants = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| format_rational(a.constant(i, j, k))).collect())
                    .collect()
            })
            .collect();
        AlgebraFile {
            dim: n,
            unit: a.unit(),
            constants,
            grading: grading.and_then(coordinate_grading),
            labels: Some(a.labels().to_vec()),
        }
    }

    pub fn to_algebra(&self) -> Result<(Algebra, Option<Grading>)> {
        let n = self.dim;
        if self.constants.len() != n
            || self.constants.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n))
        {
            return Err(file_error(format!("constants must be a {n} x {n} x {n} array")));
        }
        let mut flat: Vec<Rational> = Vec::with_capacity(n * n * n);
        for row in &self.constants {
            for cell in row {
                for c in cell {
                    flat.push(parse_rational(c)?);
                }
            }
        }
        let mut a = Algebra::new(n, flat, self.unit)?;
        if let Some(labels) = &self.labels {
            a = a.with_labels(labels.clone())?;
        }
        let grading = match &self.grading {
            Some(g) => {
                let g = Grading::from_indices(n, &g.even, &g.odd)?;
                g.validate(&a)?;
                Some(g)
            }
            None => None,
        };
        Ok((a, grading))
    }
}

fn coordinate_grading(g: &Grading) -> Option<GradingFile> {
    let indices = |s: &crate::subspace::Subspace| -> Option<Vec<usize>> {
        s.basis()
            .iter()
            .map(|v| {
                let nz: Vec<usize> = (0..v.len()).filter(|&i| !num::Zero::is_zero(&v[i])).collect();
                (nz.len() == 1).then(|| nz[0])
            })
            .collect()
    };
    Some(GradingFile {
        even: indices(&g.even)?,
        odd: indices(&g.odd)?,
    })
}

pub fn parse_algebra_json(text: &str) -> Result<(Algebra, Option<Grading>)> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| file_error(e.to_string()))?;
    file.to_algebra()
}

pub fn algebra_to_json(a: &Algebra, grading: Option<&Grading>) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(a, grading)).expect("plain data serializes")
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub matrix: Vec<Vec<String>>,
}

pub fn parse_map_json(text: &str) -> Result<QMatrix> {
    let file: MapFile = serde_json::from_str(text).map_err(|e| file_error(e.to_string()))?;
    let rows = file
        .matrix
        .iter()
        .map(|r| r.iter().map(|c| parse_rational(c).map_err(Error::from)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    QMatrix::from_rows(rows)
}

pub fn map_to_json(m: &QMatrix) -> String {
    let file = MapFile {
        matrix: m.rows_vec().iter().map(|r| r.iter().map(format_rational).collect()).collect(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}
