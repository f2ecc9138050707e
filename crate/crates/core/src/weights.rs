//! Dominant integral weights of the diagonal torus of GL(n) over a number
//! field, given as one weakly decreasing integer n-tuple per embedding.
//!
//! Purity ties opposite entries to a single purity weight `w`: at a real
//! embedding `mu_i + mu_{n-i+1} = w`, and across a conjugate pair
//! `mubar_i + mu_{n-i+1} = w`. Strong purity asks the same of every
//! Aut(C)-relabelling of the components; with no Galois data that is only
//! decidable over totally real or CM fields, so the verdict is a tri-state.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numberfield::{FieldSignature, Place};

/// Verdict of a check that may be undecidable with the data at hand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TriState {
    Yes,
    No,
    NotVerified,
}

/// Outcome of the purity analysis of a weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityReport {
    pub is_pure: bool,
    /// The purity weight `w`, present iff the purity equations are solvable.
    pub purity_weight: Option<i64>,
    pub is_strongly_pure: TriState,
    /// Whether the central character has the infinity type of an algebraic
    /// Hecke character (the sheaf-nonvanishing condition).
    pub sheaf_condition: bool,
}

/// A dominant integral weight for GL(n)/F: an integer n-tuple per embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    sig: FieldSignature,
    n: usize,
    comps: Vec<Vec<i64>>,
}

/// Serialized form: `{"n": .., "components": {"<embedding-id>": [..], ..}}`.
/// The field signature travels separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightData {
    pub n: usize,
    pub components: BTreeMap<String, Vec<i64>>,
}

impl Weight {
    /// Build a weight from per-embedding components, checking dominance.
    pub fn new(sig: FieldSignature, comps: Vec<Vec<i64>>) -> Result<Self> {
        let d = sig.degree();
        let n = comps.first().map(|c| c.len()).unwrap_or(0);
        if comps.len() != d || n == 0 || comps.iter().any(|c| c.len() != n) {
            return Err(Error::BadComponents {
                expected: d,
                got: comps.len(),
                rank: n,
            });
        }
        for (e, c) in comps.iter().enumerate() {
            if c.windows(2).any(|p| p[0] < p[1]) {
                return Err(Error::NotDominant { embedding: e });
            }
        }
        Ok(Weight { sig, n, comps })
    }

    /// The parallel weight with the same tuple at every embedding.
    pub fn parallel(sig: FieldSignature, tuple: Vec<i64>) -> Result<Self> {
        let d = sig.degree();
        Weight::new(sig, vec![tuple; d])
    }

    pub fn from_data(sig: FieldSignature, data: &WeightData) -> Result<Self> {
        let d = sig.degree();
        let mut comps = vec![Vec::new(); d];
        for (key, tuple) in &data.components {
            let e: usize = key
                .parse()
                .map_err(|_| Error::BadInput(format!("bad embedding id `{key}`")))?;
            if e >= d {
                return Err(Error::EmbeddingOutOfRange { id: e, degree: d });
            }
            comps[e] = tuple.clone();
        }
        if comps.iter().any(|c| c.len() != data.n) {
            return Err(Error::BadInput(
                "every embedding id 0..d must carry an n-tuple".into(),
            ));
        }
        Weight::new(sig, comps)
    }

    pub fn to_data(&self) -> WeightData {
        WeightData {
            n: self.n,
            components: self
                .comps
                .iter()
                .enumerate()
                .map(|(e, c)| (e.to_string(), c.clone()))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn signature(&self) -> &FieldSignature {
        &self.sig
    }

    pub fn component(&self, e: usize) -> &[i64] {
        &self.comps[e]
    }

    pub fn components(&self) -> &[Vec<i64>] {
        &self.comps
    }

    /// True if all embedding components coincide.
    pub fn is_parallel(&self) -> bool {
        self.comps.windows(2).all(|p| p[0] == p[1])
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.comps
            .iter()
            .flatten()
            .map(|x| x.abs())
            .max()
            .unwrap_or(0)
    }

    /// The dual weight: per embedding the reversed negation of the tuple.
    pub fn dual(&self) -> Weight {
        let comps = self
            .comps
            .iter()
            .map(|c| c.iter().rev().map(|x| -x).collect())
            .collect();
        Weight {
            sig: self.sig.clone(),
            n: self.n,
            comps,
        }
    }

    /// Add `m` to every entry of every component.
    pub fn twist(&self, m: i64) -> Weight {
        let comps = self
            .comps
            .iter()
            .map(|c| c.iter().map(|x| x + m).collect())
            .collect();
        Weight {
            sig: self.sig.clone(),
            n: self.n,
            comps,
        }
    }

    /// Purity, strong purity, and the sheaf-nonvanishing condition.
    pub fn purity(&self) -> PurityReport {
        let purity_weight = purity_weight_of(&self.sig, &self.comps, self.n);
        let is_pure = purity_weight.is_some();
        let is_strongly_pure = if !is_pure {
            TriState::No
        } else if self.sig.is_totally_real() || self.sig.is_cm() {
            // Over totally real and CM fields pure and strongly pure coincide.
            TriState::Yes
        } else if self.sig.galois_perms().is_empty() {
            TriState::NotVerified
        } else {
            let all_conjugates_pure = self.sig.symmetry_perms().iter().all(|p| {
                let permuted: Vec<Vec<i64>> = p.iter().map(|&e| self.comps[e].clone()).collect();
                purity_weight_of(&self.sig, &permuted, self.n).is_some()
            });
            if all_conjugates_pure {
                TriState::Yes
            } else {
                TriState::No
            }
        };
        PurityReport {
            is_pure,
            purity_weight,
            is_strongly_pure,
            sheaf_condition: self.sheaf_condition(),
        }
    }

    /// Central-character infinity-type test: `a_iota = sum_i mu^iota_i` must be
    /// constant when F has a real place, and `a_iota + a_conj(iota)` must be
    /// constant (over the supplied embedding permutations) otherwise.
    pub fn sheaf_condition(&self) -> bool {
        let a: Vec<i64> = self.comps.iter().map(|c| c.iter().sum()).collect();
        if self.sig.r1() > 0 {
            a.windows(2).all(|p| p[0] == p[1])
        } else {
            let mut constant: Option<i64> = None;
            for p in self.sig.symmetry_perms() {
                for e in 0..self.sig.degree() {
                    let bar = self.sig.conjugate(e).unwrap();
                    let value = a[p[e]] + a[p[bar]];
                    match constant {
                        None => constant = Some(value),
                        Some(c) if c != value => return false,
                        _ => {}
                    }
                }
            }
            true
        }
    }

    /// The purity weight, or an error naming the failure.
    pub fn purity_weight(&self) -> Result<i64> {
        self.purity()
            .purity_weight
            .ok_or_else(|| Error::NotPure("purity equations are inconsistent".into()))
    }

    /// Purity weight of a weight required to be strongly pure; a definite
    /// strong-purity failure is an error, `NotVerified` is accepted.
    pub fn strongly_pure_weight(&self) -> Result<i64> {
        let report = self.purity();
        let w = report
            .purity_weight
            .ok_or_else(|| Error::NotPure("purity equations are inconsistent".into()))?;
        if report.is_strongly_pure == TriState::No {
            return Err(Error::NotStronglyPure);
        }
        Ok(w)
    }
}

fn purity_weight_of(sig: &FieldSignature, comps: &[Vec<i64>], n: usize) -> Option<i64> {
    let mut w: Option<i64> = None;
    let mut check = |value: i64| -> bool {
        match w {
            None => {
                w = Some(value);
                true
            }
            Some(c) => c == value,
        }
    };
    for place in sig.places() {
        match place {
            Place::Real(e) => {
                for i in 0..n {
                    if !check(comps[e][i] + comps[e][n - 1 - i]) {
                        return None;
                    }
                }
            }
            Place::Complex(iota, bar) => {
                for i in 0..n {
                    if !check(comps[bar][i] + comps[iota][n - 1 - i]) {
                        return None;
                    }
                }
            }
        }
    }
    w
}
