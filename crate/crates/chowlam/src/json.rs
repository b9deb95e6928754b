//! JSON schemas for the external interfaces: ideals, subspace matrices,
//! parametrizations, pipeline inputs and outputs, predictions.

use crate::chow::{ChowLamResult, Parametrization, VarietyIdeal};
use crate::error::{Error, Result};
use crate::grassmann::{GrassmannContext, SubspaceMatrix, SubspaceMode};
use crate::groebner::{sorted_gens, Ideal};
use crate::poly::{parse_polynomial, PolyMatrix, PolyRing, Polynomial, RationalMatrix};
use crate::schubert::SchubertPrediction;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// `{"ring": ["q12", ...], "homogeneous": true, "generators": ["...", ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homogeneous: Option<bool>,
    pub generators: Vec<String>,
}

impl IdealJson {
    pub fn to_ideal(&self) -> Result<Ideal> {
        let ring = PolyRing::new(self.ring.iter().cloned())?;
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            gens.push(parse_polynomial(g, &ring)?);
        }
        let ideal = Ideal::new(&ring, gens);
        if self.homogeneous == Some(true) && !ideal.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
        Ok(ideal)
    }

    pub fn from_ideal(ideal: &Ideal) -> Self {
        IdealJson {
            ring: ideal.ring().var_names().to_vec(),
            homogeneous: Some(ideal.is_homogeneous()),
            generators: sorted_gens(ideal).iter().map(|g| g.to_string()).collect(),
        }
    }
}

/// `{"mode": "rowspan", "matrix": [["1", "2/3", ...], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub mode: String,
    pub matrix: Vec<Vec<String>>,
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::InvalidInput(format!("cannot parse rational `{text}`"));
    match t.split_once('/') {
        Some((a, b)) => {
            let num: BigInt = a.trim().parse().map_err(|_| bad())?;
            let den: BigInt = b.trim().parse().map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = t.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(num))
        }
    }
}

fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl SubspaceJson {
    pub fn to_subspace(&self) -> Result<SubspaceMatrix> {
        let rows = self.matrix.len();
        let cols = self
            .matrix
            .first()
            .map(|r| r.len())
            .ok_or_else(|| Error::InvalidInput("empty matrix".into()))?;
        let mut data = Vec::with_capacity(rows * cols);
        for row in &self.matrix {
            if row.len() != cols {
                return Err(Error::InvalidInput("ragged matrix".into()));
            }
            for entry in row {
                data.push(parse_rational(entry)?);
            }
        }
        let matrix = RationalMatrix::new(rows, cols, data);
        match self.mode.as_str() {
            "rowspan" => SubspaceMatrix::rowspan(matrix),
            "kernel" => SubspaceMatrix::kernel(matrix),
            other => Err(Error::InvalidInput(format!("unknown mode `{other}`"))),
        }
    }

    pub fn from_subspace(s: &SubspaceMatrix) -> Self {
        let mode = match s.mode {
            SubspaceMode::Rowspan => "rowspan",
            SubspaceMode::Kernel => "kernel",
        };
        let matrix = (0..s.matrix.rows)
            .map(|i| {
                (0..s.matrix.cols)
                    .map(|j| rational_to_string(s.matrix.get(i, j)))
                    .collect()
            })
            .collect();
        SubspaceJson {
            mode: mode.to_string(),
            matrix,
        }
    }
}

/// `{"params": ["s"], "matrix": [["1", "s", ...], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParametrizationJson {
    pub params: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

impl ParametrizationJson {
    pub fn to_parametrization(&self) -> Result<Parametrization> {
        let ring = PolyRing::new(self.params.iter().cloned())?;
        let rows = self.matrix.len();
        let cols = self
            .matrix
            .first()
            .map(|r| r.len())
            .ok_or_else(|| Error::InvalidInput("empty matrix".into()))?;
        let mut data = Vec::with_capacity(rows * cols);
        for row in &self.matrix {
            if row.len() != cols {
                return Err(Error::InvalidInput("ragged matrix".into()));
            }
            for entry in row {
                data.push(parse_polynomial(entry, &ring)?);
            }
        }
        Ok(Parametrization {
            params: self.params.clone(),
            matrix: PolyMatrix::new(&ring, rows, cols, data),
        })
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CtxJson {
    pub k: usize,
    pub n: usize,
    pub r: usize,
}

impl CtxJson {
    pub fn to_ctx(&self) -> Result<GrassmannContext> {
        GrassmannContext::new(self.k, self.n, self.r)
    }
}

/// Either an implicit variety ideal or a parametrization.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VarietyJson {
    Parametric {
        parametrization: ParametrizationJson,
    },
    Implicit(IdealJson),
}

/// Pipeline input: `{"ctx": {"k":2,"n":4,"r":3}, "variety": ...}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PipelineInput {
    pub ctx: CtxJson,
    pub variety: VarietyJson,
}

/// Output of the `chowlam` and `recover` commands.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PipelineOutput {
    pub version: String,
    pub ctx: CtxJson,
    pub ring: Vec<String>,
    pub locus_ideal: Vec<String>,
    pub form: String,
    pub is_hypersurface: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension_warning: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recovery: Option<IdealJson>,
}

impl PipelineOutput {
    pub fn from_result(result: &ChowLamResult, recovery: Option<&Ideal>) -> Self {
        PipelineOutput {
            version: crate::version().to_string(),
            ctx: CtxJson {
                k: result.ctx.k,
                n: result.ctx.n,
                r: result.ctx.r,
            },
            ring: result.target_ring().var_names().to_vec(),
            locus_ideal: sorted_gens(&result.locus_ideal)
                .iter()
                .map(|g| g.to_string())
                .collect(),
            form: result.form.to_string(),
            is_hypersurface: result.is_hypersurface,
            dimension_warning: result.dimension_warning.clone(),
            recovery: recovery.map(IdealJson::from_ideal),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PredictionJson {
    pub partition: String,
    pub part_size: u32,
    pub repeats: u32,
    pub min_n: u32,
    pub interpretation: String,
    pub outside_theorem_hypothesis: bool,
}

impl PredictionJson {
    pub fn from_prediction(p: &SchubertPrediction) -> Self {
        PredictionJson {
            partition: p.partition.to_string(),
            part_size: p.part_size,
            repeats: p.repeats,
            min_n: p.min_n,
            interpretation: p.interpretation.clone(),
            outside_theorem_hypothesis: p.outside_theorem_hypothesis,
        }
    }
}

/// Resolves a pipeline input into the variety and runs the matching
/// Chow–Lam computation.
pub fn run_pipeline(input: &PipelineInput, budget: &crate::groebner::Budget) -> Result<ChowLamResult> {
    let ctx = input.ctx.to_ctx()?;
    match &input.variety {
        VarietyJson::Implicit(ideal_json) => {
            let ideal = ideal_json.to_ideal()?;
            let v = VarietyIdeal::new(ctx, ideal)?;
            crate::chow::chow_lam_ideal(&v, budget)
        }
        VarietyJson::Parametric { parametrization } => {
            let par = parametrization.to_parametrization()?;
            crate::chow::chow_lam_parametric(&par, ctx, budget)
        }
    }
}
