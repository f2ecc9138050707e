//! Hodge-type bookkeeping for rank-2 motives over F, their motivic Gamma
//! shifts, and the classification of critical points into the partition
//! (T, A, conj A) of the embeddings.
//!
//! Per embedding the stored exponents are a pair `(p, q)` with `p > q`; the
//! actual Hodge types at `iota` mix the conjugate embedding in:
//! `H_iota = {(p_iota, q_bar), (q_iota, p_bar)}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::numberfield::FieldSignature;
use crate::weights::Weight;

/// Hodge exponents of a regular rank-2 motive: a pair per embedding plus the
/// motivic purity weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeData {
    sig: FieldSignature,
    pairs: Vec<(i64, i64)>,
    weight: i64,
}

/// Serialized form mirroring the weight format:
/// `{"w": .., "pairs": {"<embedding-id>": [p, q], ..}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeDataRepr {
    pub w: i64,
    pub pairs: BTreeMap<String, (i64, i64)>,
}

/// The criticality type: which embeddings are balanced (T) and which complex
/// embeddings see the twist overshoot (A, with conj A its mirror).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CritType {
    pub t: Vec<usize>,
    pub a: Vec<usize>,
    pub a_bar: Vec<usize>,
}

/// Result of the criticality classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Criticality {
    Critical(CritType),
    NotCritical,
}

impl HodgeData {
    /// Validate exponent pairs: purity across conjugate pairs, regularity
    /// `p > q` per embedding, and no middle Hodge type `p_iota = q_bar`.
    pub fn new(sig: FieldSignature, pairs: Vec<(i64, i64)>, weight: i64) -> Result<Self> {
        if pairs.len() != sig.degree() {
            return Err(Error::InvalidHodge(format!(
                "need one (p, q) pair per embedding, got {}",
                pairs.len()
            )));
        }
        for e in 0..sig.degree() {
            let bar = sig.conjugate(e).unwrap();
            let (p, q) = pairs[e];
            let (pb, qb) = pairs[bar];
            if pb + q != weight || qb + p != weight {
                return Err(Error::InvalidHodge(format!(
                    "purity fails at embedding {e}: pairs ({p},{q}) / ({pb},{qb}), weight {weight}"
                )));
            }
            if p <= q {
                return Err(Error::InvalidHodge(format!(
                    "regularity requires p > q at embedding {e}"
                )));
            }
            if p == qb {
                return Err(Error::InvalidHodge(format!(
                    "middle Hodge type at embedding {e}"
                )));
            }
        }
        Ok(HodgeData { sig, pairs, weight })
    }

    pub fn from_repr(sig: FieldSignature, repr: &HodgeDataRepr) -> Result<Self> {
        let d = sig.degree();
        let mut pairs = vec![None; d];
        for (key, &pq) in &repr.pairs {
            let e: usize = key
                .parse()
                .map_err(|_| Error::BadInput(format!("bad embedding id `{key}`")))?;
            if e >= d {
                return Err(Error::EmbeddingOutOfRange { id: e, degree: d });
            }
            pairs[e] = Some(pq);
        }
        let pairs = pairs
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::BadInput("every embedding needs a Hodge pair".into()))?;
        HodgeData::new(sig, pairs, repr.w)
    }

    pub fn to_repr(&self) -> HodgeDataRepr {
        HodgeDataRepr {
            w: self.weight,
            pairs: self
                .pairs
                .iter()
                .enumerate()
                .map(|(e, &pq)| (e.to_string(), pq))
                .collect(),
        }
    }

    pub fn signature(&self) -> &FieldSignature {
        &self.sig
    }

    pub fn pair(&self, e: usize) -> (i64, i64) {
        self.pairs[e]
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    /// Tate twist by k: all exponents drop by k, the weight by 2k.
    pub fn tate_twist(&self, k: i64) -> HodgeData {
        HodgeData {
            sig: self.sig.clone(),
            pairs: self.pairs.iter().map(|&(p, q)| (p - k, q - k)).collect(),
            weight: self.weight - 2 * k,
        }
    }
}

/// Hodge data of the motive attached to a pure GL(2) weight:
/// `p_iota = -mu^iota_2 + 1`, `q_iota = -mu^iota_1`, weight `1 - w(mu)`.
pub fn hodge_from_gl2_weight(mu: &Weight) -> Result<HodgeData> {
    if mu.rank() != 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            got: mu.rank(),
        });
    }
    let w = mu.purity_weight()?;
    let pairs = mu.components().iter().map(|c| (-c[1] + 1, -c[0])).collect();
    HodgeData::new(mu.signature().clone(), pairs, 1 - w)
}

/// Classify criticality of the motive twisted by a character of infinity
/// type `j` (one integer per embedding).
///
/// Real embeddings land in T iff `q + 1 <= j <= p`. A complex pair falls
/// into exactly one of three cases by comparing the twisted exponents across
/// the pair; ties are middle Hodge types of the twist and are never critical.
pub fn classify(h: &HodgeData, j: &[i64]) -> Result<Criticality> {
    let sig = h.signature();
    if j.len() != sig.degree() {
        return Err(Error::BadInput(
            "need one infinity-type entry per embedding".into(),
        ));
    }
    let mut t = Vec::new();
    let mut a = Vec::new();
    let mut a_bar = Vec::new();
    for e in 0..sig.degree() {
        let bar = sig.conjugate(e).unwrap();
        let (p, q) = h.pair(e);
        if bar == e {
            if q + 1 <= j[e] && j[e] <= p {
                t.push(e);
            } else {
                return Ok(Criticality::NotCritical);
            }
            continue;
        }
        if bar < e {
            continue; // pair handled at its first member
        }
        let (pb, qb) = h.pair(bar);
        let (x, xb) = (p - j[e], pb - j[bar]);
        let (y, yb) = (q - j[e], qb - j[bar]);
        if x < yb {
            // Case (a): critical iff j_iota overshoots p and j_bar undershoots q_bar.
            if j[e] >= p + 1 && j[bar] <= qb {
                a.push(e);
                a_bar.push(bar);
            } else {
                return Ok(Criticality::NotCritical);
            }
        } else if xb < y {
            // Case (b): the mirror of (a).
            if j[bar] >= pb + 1 && j[e] <= q {
                a.push(bar);
                a_bar.push(e);
            } else {
                return Ok(Criticality::NotCritical);
            }
        } else if x > yb && xb > y {
            // Case (c): balanced, like a real embedding, at both members.
            if q + 1 <= j[e] && j[e] <= p && qb + 1 <= j[bar] && j[bar] <= pb {
                t.push(e);
                t.push(bar);
            } else {
                return Ok(Criticality::NotCritical);
            }
        } else {
            // A tie: the twisted motive has a middle Hodge type.
            return Ok(Criticality::NotCritical);
        }
    }
    Ok(Criticality::Critical(CritType { t, a, a_bar }))
}

/// Motivic Gamma shifts: per embedding, assemble
/// `H_iota = {(p_iota, q_bar), (q_iota, p_bar)}`, keep the pairs with
/// first entry smaller, and emit one shift `-p` for each (a factor
/// `Gamma_C(s - p)`). Returns the sorted multiset over all embeddings.
pub fn motivic_gamma(h: &HodgeData) -> Vec<HalfInt> {
    let sig = h.signature();
    let mut shifts = Vec::new();
    for e in 0..sig.degree() {
        let bar = sig.conjugate(e).unwrap();
        let (p, q) = h.pair(e);
        let (pb, qb) = h.pair(bar);
        for (x, y) in [(p, qb), (q, pb)] {
            if x < y {
                shifts.push(HalfInt::from_int(-x));
            }
        }
    }
    shifts.sort();
    shifts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(r1: usize, r2: usize) -> FieldSignature {
        FieldSignature::validate(r1, r2).unwrap()
    }

    #[test]
    fn hodge_from_weight_examples() {
        let mu = Weight::new(sig(1, 0), vec![vec![3, 1]]).unwrap();
        let h = hodge_from_gl2_weight(&mu).unwrap();
        assert_eq!(h.pair(0), (0, -3));
        assert_eq!(h.weight(), -3);

        let mu = Weight::parallel(sig(1, 1), vec![1, 0]).unwrap();
        let h = hodge_from_gl2_weight(&mu).unwrap();
        for e in 0..3 {
            assert_eq!(h.pair(e), (1, -1));
        }
        assert_eq!(h.weight(), 0);

        // Dominance makes regularity automatic.
        let mu = Weight::new(sig(1, 0), vec![vec![2, 2]]).unwrap();
        let h = hodge_from_gl2_weight(&mu).unwrap();
        assert!(h.pair(0).0 > h.pair(0).1);
    }

    #[test]
    fn tate_twist_examples() {
        let mu = Weight::parallel(sig(1, 0), vec![1, 0]).unwrap();
        let h = hodge_from_gl2_weight(&mu).unwrap();
        assert_eq!(h.tate_twist(0), h);
        let twisted = h.tate_twist(1);
        assert_eq!(twisted.pair(0), (0, -2));
        assert_eq!(twisted.weight(), h.weight() - 2);
        assert_eq!(h.tate_twist(2), h.tate_twist(1).tate_twist(1));
    }

    #[test]
    fn classify_compatible_gl2_gl1_is_type_empty() {
        // mu = (3,1) real, lambda in [-mu_1, -mu_2]: type is empty.
        let mu = Weight::new(sig(1, 0), vec![vec![3, 1]]).unwrap();
        let h = hodge_from_gl2_weight(&mu).unwrap().tate_twist(1);
        for lam in -3..=-1 {
            let crit = classify(&h, &[lam]).unwrap();
            let Criticality::Critical(ct) = crit else {
                panic!("expected critical")
            };
            assert!(ct.a.is_empty() && ct.a_bar.is_empty());
            assert_eq!(ct.t, vec![0]);
        }
        assert_eq!(classify(&h, &[1]).unwrap(), Criticality::NotCritical);
    }

    #[test]
    fn classify_imaginary_quadratic_type_a() {
        // mu^iota = (1,0) both embeddings, w = 1; after the Tate twist the
        // stored pairs are (0,-2). The infinity type (1, -2) overshoots at
        // iota and undershoots at bar iota: type A = {iota}.
        let mu = Weight::new(sig(0, 1), vec![vec![1, 0], vec![1, 0]]).unwrap();
        let h = hodge_from_gl2_weight(&mu).unwrap().tate_twist(1);
        assert_eq!(h.pair(0), (0, -2));
        assert_eq!(h.pair(1), (0, -2));
        let crit = classify(&h, &[1, -2]).unwrap();
        assert_eq!(
            crit,
            Criticality::Critical(CritType {
                t: vec![],
                a: vec![0],
                a_bar: vec![1],
            })
        );
        // The mirror infinity type lands in case (b).
        let crit = classify(&h, &[-2, 1]).unwrap();
        assert_eq!(
            crit,
            Criticality::Critical(CritType {
                t: vec![],
                a: vec![1],
                a_bar: vec![0],
            })
        );
        // Out of every range: not critical.
        assert_eq!(classify(&h, &[5, 5]).unwrap(), Criticality::NotCritical);
    }

    #[test]
    fn partition_covers_all_embeddings() {
        let mu = Weight::parallel(sig(1, 1), vec![2, -1]).unwrap();
        let h = hodge_from_gl2_weight(&mu).unwrap().tate_twist(1);
        for lam in -4..=4 {
            if let Criticality::Critical(ct) = classify(&h, &[lam, lam, lam]).unwrap() {
                let mut all: Vec<usize> =
                    ct.t.iter().chain(&ct.a).chain(&ct.a_bar).copied().collect();
                all.sort();
                assert_eq!(all, vec![0, 1, 2]);
                let conj_a: Vec<usize> =
                    ct.a.iter()
                        .map(|&e| h.signature().conjugate(e).unwrap())
                        .collect();
                assert_eq!(conj_a, ct.a_bar);
            }
        }
    }

    #[test]
    fn motivic_gamma_examples() {
        // Real embedding with pair (1,-1): the p<q member of H_iota is
        // (-1, 1), contributing shift +1.
        let mu = Weight::parallel(sig(1, 0), vec![1, 0]).unwrap();
        let h = hodge_from_gl2_weight(&mu).unwrap();
        assert_eq!(motivic_gamma(&h), vec![HalfInt::from_int(1)]);

        // One shift per embedding under regularity.
        let mu = Weight::new(sig(0, 1), vec![vec![3, 1], vec![4, 2]]).unwrap();
        let h = hodge_from_gl2_weight(&mu).unwrap();
        assert_eq!(motivic_gamma(&h).len(), 2);
    }

    #[test]
    fn gamma_count_equals_degree() {
        // Each conjugate pair contributes exactly two p<q pairs and each
        // real embedding one, so the multiset is never empty.
        let cases = [
            Weight::parallel(sig(2, 1), vec![3, 0]).unwrap(),
            Weight::new(sig(0, 1), vec![vec![0, 0], vec![5, 5]]).unwrap(),
            Weight::new(sig(1, 0), vec![vec![1, -1]]).unwrap(),
            Weight::new(
                sig(0, 2),
                vec![vec![2, 0], vec![3, 1], vec![4, 0], vec![3, -1]],
            )
            .unwrap(),
        ];
        for mu in cases {
            let h = hodge_from_gl2_weight(&mu).unwrap();
            assert_eq!(motivic_gamma(&h).len(), mu.signature().degree());
        }
    }

    #[test]
    fn hodge_validation() {
        assert!(HodgeData::new(sig(1, 0), vec![(1, -1)], 0).is_ok());
        // Regularity violated.
        assert!(HodgeData::new(sig(1, 0), vec![(0, 0)], 0).is_err());
        // Purity violated across the pair.
        assert!(HodgeData::new(sig(0, 1), vec![(2, 0), (1, -1)], 0).is_err());
        // Middle type p_iota = q_bar.
        assert!(HodgeData::new(sig(0, 1), vec![(1, 0), (2, 1)], 2).is_err());
    }

    #[test]
    fn hodge_repr_round_trip() {
        let mu = Weight::new(sig(0, 1), vec![vec![3, 1], vec![4, 2]]).unwrap();
        let h = hodge_from_gl2_weight(&mu).unwrap();
        let repr = h.to_repr();
        let text = serde_json::to_string(&repr).unwrap();
        let parsed: HodgeDataRepr = serde_json::from_str(&text).unwrap();
        assert_eq!(HodgeData::from_repr(sig(0, 1), &parsed).unwrap(), h);
    }
}
