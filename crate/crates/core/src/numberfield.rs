//! The archimedean shape of a number field: ordered real embeddings, ordered
//! pairs of conjugate complex embeddings, and the conjugation involution.
//!
//! Embeddings are abstract ids `0..d` with `d = r1 + 2*r2`: ids `0..r1` are the
//! real embeddings and ids `r1+2k`, `r1+2k+1` form the conjugate pair of the
//! k-th complex place. No algebraic number arithmetic happens here; only the
//! set of embeddings with its conjugation (and, optionally, extra user-supplied
//! permutations standing in for the Aut(C)-orbit) is modelled.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A place at infinity, identified by its embedding id(s).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Place {
    /// A real place and its embedding id.
    Real(usize),
    /// A complex place as the ordered pair (iota, conj(iota)).
    Complex(usize, usize),
}

/// Real/complex embedding layout of a number field.
///
/// The optional `galois_perms` model the Aut(C)-action on embeddings for
/// strong-purity checks over fields that are neither totally real nor CM;
/// the library never guesses this orbit. The `cm` flag marks a CM field
/// (an imaginary quadratic field, signature (0,1), is flagged automatically).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFieldSignature")]
pub struct FieldSignature {
    r1: usize,
    r2: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    galois_perms: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    cm: bool,
}

#[derive(Deserialize)]
struct RawFieldSignature {
    r1: usize,
    r2: usize,
    #[serde(default)]
    galois_perms: Vec<Vec<usize>>,
    #[serde(default)]
    cm: bool,
}

impl TryFrom<RawFieldSignature> for FieldSignature {
    type Error = Error;

    fn try_from(raw: RawFieldSignature) -> Result<Self> {
        let mut sig = FieldSignature::validate(raw.r1, raw.r2)?;
        sig = sig.with_galois_perms(raw.galois_perms)?;
        Ok(sig.with_cm_flag(raw.cm))
    }
}

impl FieldSignature {
    /// Build a signature from the counts of real and complex places.
    ///
    /// Rejects `r1 = r2 = 0`.
    pub fn validate(r1: usize, r2: usize) -> Result<Self> {
        if r1 == 0 && r2 == 0 {
            return Err(Error::EmptyField);
        }
        Ok(FieldSignature {
            r1,
            r2,
            galois_perms: Vec::new(),
            cm: false,
        })
    }

    /// Attach user-supplied permutations of the embedding ids.
    ///
    /// Each entry must be a permutation of `0..d`. They stand in for the
    /// Aut(C)-orbit of the embeddings; identity and conjugation are always
    /// available and need not be listed.
    pub fn with_galois_perms(mut self, perms: Vec<Vec<usize>>) -> Result<Self> {
        let d = self.degree();
        for p in &perms {
            if p.len() != d {
                return Err(Error::InvalidPermutation);
            }
            let mut seen = vec![false; d];
            for &img in p {
                if img >= d || seen[img] {
                    return Err(Error::InvalidPermutation);
                }
                seen[img] = true;
            }
        }
        self.galois_perms = perms;
        Ok(self)
    }

    /// Mark the field as CM (totally imaginary quadratic over totally real).
    pub fn with_cm_flag(mut self, cm: bool) -> Self {
        self.cm = cm;
        self
    }

    pub fn r1(&self) -> usize {
        self.r1
    }

    pub fn r2(&self) -> usize {
        self.r2
    }

    /// d = r1 + 2*r2.
    pub fn degree(&self) -> usize {
        self.r1 + 2 * self.r2
    }

    pub fn is_totally_real(&self) -> bool {
        self.r2 == 0
    }

    /// True for a flagged CM field; an imaginary quadratic field (0,1) is CM
    /// without needing the flag.
    pub fn is_cm(&self) -> bool {
        self.cm || (self.r1 == 0 && self.r2 == 1)
    }

    pub fn galois_perms(&self) -> &[Vec<usize>] {
        &self.galois_perms
    }

    pub fn is_real_embedding(&self, e: usize) -> bool {
        e < self.r1
    }

    /// The conjugation involution on embedding ids: fixes real ids, swaps each
    /// complex pair.
    pub fn conjugate(&self, e: usize) -> Result<usize> {
        let d = self.degree();
        if e >= d {
            return Err(Error::EmbeddingOutOfRange { id: e, degree: d });
        }
        if e < self.r1 {
            Ok(e)
        } else if (e - self.r1) % 2 == 0 {
            Ok(e + 1)
        } else {
            Ok(e - 1)
        }
    }

    /// Iterator over the places at infinity in canonical order: real places
    /// first, then complex pairs.
    pub fn places(&self) -> impl Iterator<Item = Place> + '_ {
        let reals = (0..self.r1).map(Place::Real);
        let cplx = (0..self.r2).map(move |k| Place::Complex(self.r1 + 2 * k, self.r1 + 2 * k + 1));
        reals.chain(cplx)
    }

    /// All embedding-id permutations used for Galois-type checks: identity,
    /// conjugation, and any user-supplied permutations.
    pub fn symmetry_perms(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let identity: Vec<usize> = (0..d).collect();
        let conj: Vec<usize> = (0..d).map(|e| self.conjugate(e).unwrap()).collect();
        let mut out = vec![identity, conj];
        out.extend(self.galois_perms.iter().cloned());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_layouts() {
        let q = FieldSignature::validate(1, 0).unwrap();
        assert_eq!(q.degree(), 1);
        let imag_quad = FieldSignature::validate(0, 1).unwrap();
        assert_eq!(imag_quad.degree(), 2);
        assert!(imag_quad.is_cm());
        let mixed_cubic = FieldSignature::validate(1, 1).unwrap();
        assert_eq!(mixed_cubic.degree(), 3);
        assert!(!mixed_cubic.is_cm());
        assert_eq!(FieldSignature::validate(0, 0), Err(Error::EmptyField));
    }

    #[test]
    fn conjugate_examples() {
        let sig = FieldSignature::validate(2, 0).unwrap();
        assert_eq!(sig.conjugate(1).unwrap(), 1);
        let sig = FieldSignature::validate(0, 1).unwrap();
        assert_eq!(sig.conjugate(0).unwrap(), 1);
        let sig = FieldSignature::validate(1, 2).unwrap();
        assert_eq!(sig.conjugate(3).unwrap(), 4);
        assert!(sig.conjugate(5).is_err());
    }

    #[test]
    fn conjugate_is_an_involution_with_r1_fixed_points() {
        for r1 in 0..4 {
            for r2 in 0..4 {
                if r1 == 0 && r2 == 0 {
                    continue;
                }
                let sig = FieldSignature::validate(r1, r2).unwrap();
                let fixed = (0..sig.degree())
                    .filter(|&e| {
                        let c = sig.conjugate(e).unwrap();
                        assert_eq!(sig.conjugate(c).unwrap(), e);
                        c == e
                    })
                    .count();
                assert_eq!(fixed, r1);
            }
        }
    }

    #[test]
    fn perm_validation() {
        let sig = FieldSignature::validate(0, 1).unwrap();
        assert!(sig.clone().with_galois_perms(vec![vec![1, 0]]).is_ok());
        assert!(sig.clone().with_galois_perms(vec![vec![0, 0]]).is_err());
        assert!(sig.with_galois_perms(vec![vec![0]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let sig = FieldSignature::validate(1, 1)
            .unwrap()
            .with_galois_perms(vec![vec![0, 2, 1]])
            .unwrap();
        let text = serde_json::to_string(&sig).unwrap();
        let back: FieldSignature = serde_json::from_str(&text).unwrap();
        assert_eq!(sig, back);
        let parsed: FieldSignature = serde_json::from_str(r#"{"r1":1,"r2":0}"#).unwrap();
        assert_eq!(parsed, FieldSignature::validate(1, 0).unwrap());
        assert!(serde_json::from_str::<FieldSignature>(r#"{"r1":0,"r2":0}"#).is_err());
    }
}
