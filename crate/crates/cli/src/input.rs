//! JSON problem descriptions accepted by the subcommands.

use serde::Deserialize;

use lcrit_core::motivic::HodgeDataRepr;
use lcrit_core::signs_periods::HeckeCharData;
use lcrit_core::weights::{Weight, WeightData};
use lcrit_core::FieldSignature;

use crate::CliError;

/// One problem: a field signature, up to two weights, and command-specific
/// options. Weights reference the signature; all ranks are read off the data.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub signature: FieldSignature,
    #[serde(default)]
    pub mu: Option<WeightData>,
    #[serde(default)]
    pub lambda: Option<WeightData>,
    #[serde(default)]
    pub hecke: Option<HeckeCharData>,
    #[serde(default)]
    pub hodge: Option<HodgeDataRepr>,
    /// Rank for rank-only commands (degrees, signs).
    #[serde(default)]
    pub n: Option<u64>,
    /// Symmetric power for `sym`.
    #[serde(default)]
    pub r: Option<u32>,
    /// Point query: test criticality of 1/2 + m.
    #[serde(default)]
    pub m: Option<i64>,
    /// Tate twist applied before motivic classification.
    #[serde(default)]
    pub tate: Option<i64>,
    /// Central-character values omega_v(-1) per real place for `signs`.
    #[serde(default)]
    pub central_parities: Option<Vec<i8>>,
    #[serde(default)]
    pub w_mu: Option<i64>,
    #[serde(default)]
    pub w_lambda: Option<i64>,
    /// Infinity type of the twisting character for `motivic`.
    #[serde(default)]
    pub infinity_type: Option<Vec<i64>>,
}

impl ProblemSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn mu_weight(&self) -> Result<Weight, CliError> {
        let data = self
            .mu
            .as_ref()
            .ok_or_else(|| CliError::Input("this command needs a `mu` weight".into()))?;
        Weight::from_data(self.signature.clone(), data).map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn lambda_weight(&self) -> Result<Weight, CliError> {
        let data = self
            .lambda
            .as_ref()
            .ok_or_else(|| CliError::Input("this command needs a `lambda` weight".into()))?;
        Weight::from_data(self.signature.clone(), data).map_err(|e| CliError::Input(e.to_string()))
    }
}
