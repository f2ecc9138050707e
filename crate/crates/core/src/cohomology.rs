//! Cuspidal-cohomology degree bookkeeping: bottom and top degrees per place
//! kind, their aggregates over a field signature, and the dimension identity
//! that makes the Rankin-Selberg pairing land in top degree.

use serde::{Deserialize, Serialize};

use crate::numberfield::FieldSignature;

/// Degree bounds for cuspidal cohomology of GL(n) over F.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub n: u64,
    /// Per-place bottom degrees.
    pub b_real: u64,
    pub b_cplx: u64,
    /// Per-place top degrees.
    pub t_real: u64,
    pub t_cplx: u64,
    /// Aggregates over the signature.
    pub b_f: u64,
    pub t_f: u64,
    pub t_tilde_f: u64,
}

/// Bottom/top degrees: `b^R = floor(n^2/4)`, `b^C = n(n-1)/2`,
/// `t^R = b^R + floor((n-1)/2)`, `t^C = b^C + n - 1`, aggregated by
/// `b_F = r1 b^R + r2 b^C` (same for t) and `t~_F = t_F + d - 1`.
pub fn degrees(n: u64, sig: &FieldSignature) -> DegreeReport {
    assert!(n >= 1, "degrees is defined for n >= 1");
    let (r1, r2, d) = (sig.r1() as u64, sig.r2() as u64, sig.degree() as u64);
    let b_real = n * n / 4;
    let b_cplx = n * (n - 1) / 2;
    let t_real = b_real + (n - 1) / 2;
    let t_cplx = b_cplx + n - 1;
    let b_f = r1 * b_real + r2 * b_cplx;
    let t_f = r1 * t_real + r2 * t_cplx;
    DegreeReport {
        n,
        b_real,
        b_cplx,
        t_real,
        t_cplx,
        b_f,
        t_f,
        t_tilde_f: t_f + d - 1,
    }
}

/// Dimension of the symmetric space `G_n(R)^0 / (SO x U)` attached to GL(n)/F:
/// `r1 * n(n+1)/2 + r2 * n^2`.
pub fn dim_symmetric_space(n: u64, sig: &FieldSignature) -> u64 {
    assert!(n >= 1, "dim_symmetric_space is defined for n >= 1");
    sig.r1() as u64 * (n * (n + 1) / 2) + sig.r2() as u64 * n * n
}

/// The identity `b_n^F + b_{n-1}^F = dim` of the GL(n-1) symmetric space.
pub fn verify_degree_identity(n: u64, sig: &FieldSignature) -> bool {
    assert!(n >= 2, "the degree identity needs n >= 2");
    degrees(n, sig).b_f + degrees(n - 1, sig).b_f == dim_symmetric_space(n - 1, sig)
}

/// How many signature characters pair with a fixed finite part in bottom
/// degree: `2^{r1}` for even n, one for odd n.
pub fn permissible_signature_count(n: u64, sig: &FieldSignature) -> u64 {
    if n % 2 == 0 {
        1u64 << sig.r1()
    } else {
        1
    }
}
