//! Seeded random generation of strongly pure weights and compatible weight
//! pairs, used by the verification suite.
//!
//! Weights are drawn by sampling the first half of each tuple and completing
//! through the purity equations, so purity holds by construction. Over
//! totally real fields the embedding components are independent; over CM
//! fields each conjugate pair is free on one member; over other signatures
//! only parallel weights are drawn, which are strongly pure for every field.
//! Compatible partners are sampled inside the interlacing windows of the dual
//! weight with purity weight `-w`, which always admits them, then both
//! weights are twisted by small random amounts.

use rand::Rng;

use crate::numberfield::{FieldSignature, Place};
use crate::weights::Weight;

/// A signature with `r1, r2 <= max_r`, not both zero.
pub fn random_signature<R: Rng>(rng: &mut R, max_r: usize) -> FieldSignature {
    loop {
        let r1 = rng.gen_range(0..=max_r);
        let r2 = rng.gen_range(0..=max_r);
        if let Ok(sig) = FieldSignature::validate(r1, r2) {
            return sig;
        }
    }
}

/// Sample a weakly decreasing first half in `[lo, hi]` and complete it to a
/// pure n-tuple of weight `w`.
fn pure_tuple<R: Rng>(rng: &mut R, n: usize, w: i64, hi: i64) -> Vec<i64> {
    debug_assert_eq!(w.rem_euclid(2), 0);
    let half = n / 2;
    let lo = w / 2;
    let mut first: Vec<i64> = (0..half).map(|_| rng.gen_range(lo..=hi)).collect();
    first.sort_unstable_by(|a, b| b.cmp(a));
    let mut tuple = first.clone();
    if n % 2 == 1 {
        tuple.push(w / 2);
    }
    tuple.extend(first.iter().rev().map(|x| w - x));
    tuple
}

/// A strongly pure weight of rank `n` with entries bounded by `max_entry`
/// and an even purity weight.
pub fn random_strongly_pure_weight<R: Rng>(
    rng: &mut R,
    sig: &FieldSignature,
    n: usize,
    max_entry: i64,
) -> Weight {
    let e = max_entry.max(1);
    let w = 2 * rng.gen_range(-e / 2..=e / 2);
    let hi = e.min(w + e);
    let comps = if sig.is_totally_real() {
        (0..sig.degree())
            .map(|_| pure_tuple(rng, n, w, hi))
            .collect()
    } else if sig.is_cm() {
        let mut comps = vec![Vec::new(); sig.degree()];
        for place in sig.places() {
            if let Place::Complex(iota, bar) = place {
                let lo = (-e).max(w - e);
                let hi = e.min(w + e);
                let mut tuple: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
                tuple.sort_unstable_by(|a, b| b.cmp(a));
                comps[bar] = tuple.iter().rev().map(|x| w - x).collect();
                comps[iota] = tuple;
            }
        }
        comps
    } else {
        vec![pure_tuple(rng, n, w, hi); sig.degree()]
    };
    Weight::new(sig.clone(), comps).expect("constructed pure weight")
}

/// Sample a rank-(n-1) tuple inside the interlacing windows of `dual(mu_v)`,
/// completed to a pure tuple of weight `-w`.
fn compatible_tuple<R: Rng>(rng: &mut R, mu_v: &[i64], w: i64) -> Vec<i64> {
    let n = mu_v.len();
    let m = n - 1;
    let window = |j: usize| (-mu_v[n - 2 - j], -mu_v[n - 1 - j]);
    let mut lam = vec![0i64; m];
    for j in 0..m / 2 {
        let (lo, hi) = window(j);
        lam[j] = rng.gen_range(lo..=hi);
        lam[m - 1 - j] = -w - lam[j];
    }
    if m % 2 == 1 {
        lam[m / 2] = -w / 2;
    }
    lam
}

/// A strongly pure pair `(mu, lam)` of ranks `(n, n-1)` whose compatibility
/// set is nonempty, with entries bounded by `max_entry`.
pub fn random_compatible_pair<R: Rng>(
    rng: &mut R,
    sig: &FieldSignature,
    n: usize,
    max_entry: i64,
) -> (Weight, Weight) {
    assert!(n >= 2);
    let core = (max_entry - 2).max(1);
    let mu = random_strongly_pure_weight(rng, sig, n, core);
    let w = mu.purity_weight().expect("sampled weight is pure");
    let comps = if sig.is_totally_real() {
        (0..sig.degree())
            .map(|e| compatible_tuple(rng, mu.component(e), w))
            .collect()
    } else if sig.is_cm() {
        let mut comps = vec![Vec::new(); sig.degree()];
        for place in sig.places() {
            if let Place::Complex(iota, bar) = place {
                let m = n - 1;
                let mu_v = mu.component(iota);
                let mut lam = vec![0i64; m];
                for (j, slot) in lam.iter_mut().enumerate() {
                    *slot = rng.gen_range(-mu_v[n - 2 - j]..=-mu_v[n - 1 - j]);
                }
                comps[bar] = lam.iter().rev().map(|x| -w - x).collect();
                comps[iota] = lam;
            }
        }
        comps
    } else {
        vec![compatible_tuple(rng, mu.component(0), w); sig.degree()]
    };
    let lam = Weight::new(sig.clone(), comps).expect("constructed compatible weight");
    let s = rng.gen_range(-1..=1);
    let t = rng.gen_range(-1..=1);
    (mu.twist(s), lam.twist(t))
}
