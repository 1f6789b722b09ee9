//! JSON documents read and written by the command-line tool. Numbers
//! travel as rational strings so the format is exact.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::comp_op::TruncatedCompOp;
use crate::engine::{AnalysisReport, SchroederSolution, VerifyReport};
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::linalg::ExactMatrix;
use crate::monomial::MultiIndex;
use crate::polymap::PolyMap;
use crate::scalar::{format_rational, parse_rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalPair {
    pub re: String,
    pub im: String,
}

impl RationalPair {
    pub fn from_scalar(s: &Scalar) -> Self {
        RationalPair { re: format_rational(s.re()), im: format_rational(s.im()) }
    }

    pub fn to_scalar(&self, field: &str) -> Result<Scalar> {
        let part = |s: &str, which: &str| {
            parse_rational(s).map_err(|e| Error::Parse(format!("{field}.{which}: {e}")))
        };
        Ok(Scalar::new(part(&self.re, "re")?, part(&self.im, "im")?))
    }
}

pub type MatrixDoc = Vec<Vec<RationalPair>>;

pub fn matrix_doc(m: &ExactMatrix) -> MatrixDoc {
    m.to_rows().iter().map(|r| r.iter().map(RationalPair::from_scalar).collect()).collect()
}

pub fn matrix_from_doc(doc: &MatrixDoc, field: &str) -> Result<ExactMatrix> {
    let rows = doc
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, x)| x.to_scalar(&format!("{field}[{i}][{j}]")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::from_rows(rows).map_err(|_| Error::Parse(format!("{field}: ragged rows")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub alpha: Vec<u32>,
    pub coeff: RationalPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub dimension: usize,
    pub components: Vec<Vec<TermDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugator: Option<MatrixDoc>,
}

impl MapDocument {
    /// Terms in basis order, zero coefficients dropped.
    pub fn from_map(map: &PolyMap, conjugator: Option<&ExactMatrix>) -> Self {
        MapDocument {
            dimension: map.dim(),
            components: map
                .components()
                .iter()
                .map(|c| {
                    c.terms()
                        .map(|(a, v)| TermDoc {
                            alpha: a.exponents().to_vec(),
                            coeff: RationalPair::from_scalar(v),
                        })
                        .collect()
                })
                .collect(),
            conjugator: conjugator.map(matrix_doc),
        }
    }

    /// The map, truncated at its largest degree (at least 1), and the
    /// conjugator if present.
    pub fn to_map(&self) -> Result<(PolyMap, Option<ExactMatrix>)> {
        let n = self.dimension;
        if n == 0 {
            return Err(Error::Parse("dimension: must be positive".into()));
        }
        if self.components.len() != n {
            return Err(Error::Parse(format!(
                "components: expected {n} components, found {}",
                self.components.len()
            )));
        }
        let degree = self
            .components
            .iter()
            .flatten()
            .map(|t| t.alpha.iter().sum::<u32>())
            .max()
            .unwrap_or(1)
            .max(1);
        let mut jets = Vec::with_capacity(n);
        for (j, comp) in self.components.iter().enumerate() {
            let mut seen = BTreeSet::new();
            let mut terms = Vec::with_capacity(comp.len());
            for (t, term) in comp.iter().enumerate() {
                let field = format!("components[{j}][{t}]");
                if term.alpha.len() != n {
                    return Err(Error::Parse(format!(
                        "{field}.alpha: length {} differs from dimension {n}",
                        term.alpha.len()
                    )));
                }
                if !seen.insert(term.alpha.clone()) {
                    return Err(Error::Parse(format!("{field}.alpha: duplicate exponent {:?}", term.alpha)));
                }
                terms.push((MultiIndex::new(term.alpha.clone()), term.coeff.to_scalar(&format!("{field}.coeff"))?));
            }
            jets.push(Jet::from_terms(n, degree, terms)?);
        }
        let map = PolyMap::new(jets)?;
        let conj = match &self.conjugator {
            Some(doc) => {
                let m = matrix_from_doc(doc, "conjugator")?;
                if m.rows() != n || m.cols() != n {
                    return Err(Error::Parse(format!("conjugator: expected {n}x{n}")));
                }
                Some(m)
            }
            None => None,
        };
        Ok((map, conj))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecordDoc {
    pub eigenvalue: RationalPair,
    pub resonant: bool,
    pub d_orig: usize,
    pub d_ker: usize,
    pub d_proj: usize,
    pub full_rank_possible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDoc {
    pub eigenvalue: RationalPair,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisDoc {
    pub verdict: bool,
    pub full_rank_exists: bool,
    pub blocks: Vec<BlockDoc>,
    pub resonance: Vec<RationalPair>,
    pub records: Vec<RecordDoc>,
    /// 0-based indices into `blocks`.
    pub obstructed_blocks: Vec<usize>,
    #[serde(rename = "K")]
    pub degree: u32,
    #[serde(rename = "N")]
    pub size: usize,
}

impl AnalysisDoc {
    pub fn from_report(r: &AnalysisReport) -> Self {
        AnalysisDoc {
            verdict: r.verdict,
            full_rank_exists: r.full_rank_exists(),
            blocks: r
                .blocks
                .iter()
                .map(|(l, s)| BlockDoc { eigenvalue: RationalPair::from_scalar(l), size: *s })
                .collect(),
            resonance: r.resonance.iter().map(RationalPair::from_scalar).collect(),
            records: r
                .records
                .iter()
                .map(|e| RecordDoc {
                    eigenvalue: RationalPair::from_scalar(&e.eigenvalue),
                    resonant: e.resonant,
                    d_orig: e.d_orig,
                    d_ker: e.d_ker,
                    d_proj: e.d_proj,
                    full_rank_possible: e.full_rank_possible,
                })
                .collect(),
            obstructed_blocks: r.obstructed_blocks.clone(),
            degree: r.degree,
            size: r.size,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionDoc {
    pub mode: String,
    pub power: u32,
    pub degree: u32,
    pub residual_degree: u32,
    pub component_rank: usize,
    pub map: MapDocument,
    pub derivative: MatrixDoc,
}

impl SolutionDoc {
    pub fn from_solution(s: &SchroederSolution) -> Self {
        SolutionDoc {
            mode: s.mode.to_string(),
            power: s.power,
            degree: s.degree,
            residual_degree: s.residual_degree,
            component_rank: s.component_rank,
            map: MapDocument::from_map(&s.map, None),
            derivative: matrix_doc(&s.derivative),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FailureDoc {
    /// 1-based.
    pub component: usize,
    pub alpha: Vec<u32>,
    pub value: RationalPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyDoc {
    pub passed: bool,
    pub checked_degree: u32,
    pub residual_degree: u32,
    pub derivative_rank: usize,
    pub component_rank: usize,
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<FailureDoc>,
    pub matrix: MatrixDoc,
}

impl VerifyDoc {
    pub fn from_report(r: &VerifyReport, b: &ExactMatrix) -> Self {
        VerifyDoc {
            passed: r.passed(),
            checked_degree: r.checked_degree,
            residual_degree: r.residual_degree,
            derivative_rank: r.derivative_rank,
            component_rank: r.component_rank,
            degenerate: r.degenerate(),
            failure: r.failure.as_ref().map(|f| FailureDoc {
                component: f.component,
                alpha: f.monomial.exponents().to_vec(),
                value: RationalPair::from_scalar(&f.value),
            }),
            matrix: matrix_doc(b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDoc {
    #[serde(rename = "K")]
    pub degree: u32,
    #[serde(rename = "N")]
    pub size: usize,
    pub basis: Vec<Vec<u32>>,
    /// Row-major.
    pub entries: MatrixDoc,
}

impl OperatorDoc {
    pub fn from_operator(op: &TruncatedCompOp) -> Self {
        OperatorDoc {
            degree: op.degree,
            size: op.size(),
            basis: op.basis.iter().map(|a| a.exponents().to_vec()).collect(),
            entries: matrix_doc(&op.u),
        }
    }
}

/// Everything a subcommand reports; unused sections are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub analysis: Option<AnalysisDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution: Option<SolutionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<OperatorDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        ReportDocument { command: command.to_string(), ..Default::default() }
    }

    /// Pretty JSON with a trailing newline; identical input gives
    /// identical bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))
    }
}

/// Reads a map from JSON (a `MapDocument`) or from the text syntax of
/// [`PolyMap`]'s `FromStr`.
pub fn read_map(text: &str) -> Result<(PolyMap, Option<ExactMatrix>)> {
    if text.trim_start().starts_with('{') {
        let doc: MapDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("map document: {e}")))?;
        doc.to_map()
    } else {
        Ok((text.trim().parse()?, None))
    }
}

pub fn read_matrix(text: &str) -> Result<ExactMatrix> {
    let doc: MatrixDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix document: {e}")))?;
    matrix_from_doc(&doc, "matrix")
}
