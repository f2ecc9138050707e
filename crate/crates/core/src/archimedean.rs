//! Archimedean Langlands parameters of the cohomological representations, the
//! cuspidal parameters they are built from, criticality tests at real and
//! complex places, and the brute-force critical-set scan.
//!
//! Gamma factors never appear as numbers here. At a complex place the
//! Rankin-Selberg factor is carried as a multiset of half-integer shifts
//! (a factor `Gamma(s + shift)` each); regularity of the pair of L-factors in
//! the functional equation at `s = 1/2 + m` is an exact inequality test on
//! those shifts. At a real place the normative criterion is the cuspidal-width
//! inequality; the real Gamma factors themselves are not reconstructed.

use serde::{Deserialize, Serialize};

use crate::branching::{CriticalSet, PlaceKind};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::numberfield::Place;
use crate::weights::Weight;

/// One summand of an archimedean Langlands parameter.
///
/// `Induced` is the two-dimensional parameter of a discrete series of
/// GL(2,R) induced from the circle character of index `l >= 1`; `SignChar` is
/// a one-dimensional real summand of the stated parity; `Char` is a character
/// `z^p zbar^q` at a complex place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ArchSummand {
    Induced { l: i64, twist: HalfInt },
    Sign { parity: i8, twist: HalfInt },
    Char { p: HalfInt, q: HalfInt },
}

impl ArchSummand {
    fn kind(&self) -> PlaceKind {
        match self {
            ArchSummand::Char { .. } => PlaceKind::Complex,
            _ => PlaceKind::Real,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            ArchSummand::Induced { l, .. } if l < 1 => Err(Error::BadInput(format!(
                "induced summand needs l >= 1, got {l}"
            ))),
            ArchSummand::Sign { parity, .. } if parity != 1 && parity != -1 => Err(
                Error::BadInput(format!("sign summand parity must be +-1, got {parity}")),
            ),
            _ => Ok(()),
        }
    }
}

/// An archimedean Langlands parameter: a multiset of summands, all of one
/// place kind. The multiset is kept sorted, so equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<ArchSummand>", into = "Vec<ArchSummand>")]
pub struct ArchParameter {
    kind: PlaceKind,
    summands: Vec<ArchSummand>,
}

impl From<ArchParameter> for Vec<ArchSummand> {
    fn from(p: ArchParameter) -> Self {
        p.summands
    }
}

impl TryFrom<Vec<ArchSummand>> for ArchParameter {
    type Error = Error;
    fn try_from(summands: Vec<ArchSummand>) -> Result<Self> {
        let kind = summands
            .first()
            .map(ArchSummand::kind)
            .ok_or_else(|| Error::BadInput("empty parameter".into()))?;
        ArchParameter::new(kind, summands)
    }
}

impl ArchParameter {
    pub fn new(kind: PlaceKind, mut summands: Vec<ArchSummand>) -> Result<Self> {
        for s in &summands {
            s.validate()?;
            if s.kind() != kind {
                return Err(Error::MixedPlaceKinds);
            }
        }
        summands.sort();
        Ok(ArchParameter { kind, summands })
    }

    pub fn kind(&self) -> PlaceKind {
        self.kind
    }

    pub fn summands(&self) -> &[ArchSummand] {
        &self.summands
    }

    /// Total dimension of the parameter.
    pub fn dimension(&self) -> usize {
        self.summands
            .iter()
            .map(|s| match s {
                ArchSummand::Induced { .. } => 2,
                _ => 1,
            })
            .sum()
    }

    /// Direct sum: concatenation of summand multisets.
    pub fn direct_sum(&self, other: &ArchParameter) -> Result<ArchParameter> {
        if self.kind != other.kind {
            return Err(Error::MixedPlaceKinds);
        }
        let mut summands = self.summands.clone();
        summands.extend_from_slice(&other.summands);
        ArchParameter::new(self.kind, summands)
    }
}

fn check_local_purity(mu_v: &[i64], w: i64) -> Result<()> {
    let n = mu_v.len();
    if mu_v.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::NotDominant { embedding: 0 });
    }
    for i in 0..n {
        if mu_v[i] + mu_v[n - 1 - i] != w {
            return Err(Error::NotPure(format!(
                "mu_{} + mu_{} = {} != {w}",
                i + 1,
                n - i,
                mu_v[i] + mu_v[n - 1 - i]
            )));
        }
    }
    Ok(())
}

/// Cuspidal parameters at a real place:
/// `l_i = 2 mu_i + n - 2i + 1 - w = mu_i - mu_{n-i+1} + n - 2i + 1`.
///
/// Satisfies `l_i = -l_{n-i+1}` with the first half strictly decreasing.
pub fn cuspidal_params_real(mu_v: &[i64], w: i64) -> Result<Vec<i64>> {
    check_local_purity(mu_v, w)?;
    let n = mu_v.len() as i64;
    Ok(mu_v
        .iter()
        .enumerate()
        .map(|(i0, &m)| 2 * m + n - 2 * (i0 as i64 + 1) + 1 - w)
        .collect())
}

/// Cuspidal parameters at a complex place: `a = mu + rho_n`, `b = w - a`,
/// computed from the iota-component; the conjugate component is checked
/// against the purity equations.
pub fn cuspidal_params_cplx(
    mu_iota: &[i64],
    mu_bar: &[i64],
    w: i64,
) -> Result<(Vec<HalfInt>, Vec<HalfInt>)> {
    let n = mu_iota.len();
    if mu_bar.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: mu_bar.len(),
        });
    }
    for i in 0..n {
        if mu_bar[i] + mu_iota[n - 1 - i] != w {
            return Err(Error::NotPure(format!(
                "mubar_{} + mu_{} != {w}",
                i + 1,
                n - i
            )));
        }
    }
    let a: Vec<HalfInt> = mu_iota
        .iter()
        .enumerate()
        .map(|(i0, &m)| HalfInt::from_twice(2 * m + n as i64 - 2 * (i0 as i64 + 1) + 1))
        .collect();
    let b = a.iter().map(|&ai| HalfInt::from_int(w) - ai).collect();
    Ok((a, b))
}

/// Local weight data at one archimedean place.
#[derive(Debug, Clone, Copy)]
pub enum LocalWeight<'a> {
    Real(&'a [i64]),
    Complex { iota: &'a [i64], bar: &'a [i64] },
}

/// The Langlands parameter of the cohomological representation attached to a
/// local weight with purity weight `w`.
///
/// At a real place with odd rank the one-dimensional summand needs the sign
/// `eps` of the central character; `eps` is ignored otherwise.
pub fn jmu_parameter(mu_v: LocalWeight<'_>, w: i64, eps: Option<i8>) -> Result<ArchParameter> {
    match mu_v {
        LocalWeight::Real(mu) => {
            let l = cuspidal_params_real(mu, w)?;
            let n = mu.len();
            let twist = HalfInt::from_twice(w);
            let mut summands: Vec<ArchSummand> = l[..n / 2]
                .iter()
                .map(|&li| ArchSummand::Induced { l: li, twist })
                .collect();
            if n % 2 == 1 {
                let parity = eps.ok_or(Error::MissingSign)?;
                summands.push(ArchSummand::Sign { parity, twist });
            }
            ArchParameter::new(PlaceKind::Real, summands)
        }
        LocalWeight::Complex { iota, bar } => {
            let (a, b) = cuspidal_params_cplx(iota, bar, w)?;
            let summands = a
                .into_iter()
                .zip(b)
                .map(|(p, q)| ArchSummand::Char { p, q })
                .collect();
            ArchParameter::new(PlaceKind::Complex, summands)
        }
    }
}

/// The cuspidal width `min |l_i - l'_j|` between two real-place parameter
/// tuples. Panics on empty input.
pub fn cuspidal_width(l: &[i64], lp: &[i64]) -> i64 {
    assert!(!l.is_empty() && !lp.is_empty());
    l.iter()
        .flat_map(|&li| lp.iter().map(move |&lj| (li - lj).abs()))
        .min()
        .unwrap()
}

/// Criticality of `s = 1/2 + m` at a real place.
///
/// The width criterion at `s = 1/2` is applied to the pair twisted by `m`:
/// the cuspidal parameters are twist-invariant while `wp` gains `2m`, so the
/// test is `-(c-1) <= w + wp + 2m <= c - 1` with `c` the cuspidal width.
pub fn is_critical_real(m: i64, l: &[i64], lp: &[i64], w: i64, wp: i64) -> bool {
    let c = cuspidal_width(l, lp);
    let s = w + wp + 2 * m;
    -(c - 1) <= s && s <= c - 1
}

/// Rankin-Selberg Gamma shifts at a complex place: for every pair (i, j) the
/// factor `Gamma(s + shift)` with
/// `shift = (w+wp)/2 + |2 mu_i + 2 lam_j + 2n - 2i - 2j + 1 - (w+wp)| / 2`.
///
/// `mu_v` and `lam_v` are iota-components; `w` and `wp` are the global purity
/// weights, through which the conjugate components enter. Returns a sorted
/// multiset.
pub fn rs_gamma_shifts_cplx(mu_v: &[i64], lam_v: &[i64], w: i64, wp: i64) -> Vec<HalfInt> {
    let n = mu_v.len() as i64;
    debug_assert_eq!(lam_v.len() as i64 + 1, n);
    let mut shifts = Vec::with_capacity(mu_v.len() * lam_v.len());
    for (i0, &mi) in mu_v.iter().enumerate() {
        for (j0, &lj) in lam_v.iter().enumerate() {
            let e =
                2 * mi + 2 * lj + 2 * n - 2 * (i0 as i64 + 1) - 2 * (j0 as i64 + 1) + 1 - (w + wp);
            shifts.push(HalfInt::from_twice((w + wp) + e.abs()));
        }
    }
    shifts.sort();
    shifts
}

/// Criticality of `s = 1/2 + m` at a complex place: for every pair (i, j)
/// both L-factors in the functional equation must be regular,
/// `m + (1 + (w+wp) + |E_ij|)/2 >= 1` and `-m + (1 - (w+wp) + |E_ij|)/2 >= 1`.
pub fn is_critical_cplx(m: i64, mu_v: &[i64], lam_v: &[i64], w: i64, wp: i64) -> bool {
    let n = mu_v.len() as i64;
    debug_assert_eq!(lam_v.len() as i64 + 1, n);
    for (i0, &mi) in mu_v.iter().enumerate() {
        for (j0, &lj) in lam_v.iter().enumerate() {
            let e = (2 * mi + 2 * lj + 2 * n - 2 * (i0 as i64 + 1) - 2 * (j0 as i64 + 1) + 1
                - (w + wp))
                .abs();
            if 2 * m + 1 + (w + wp) + e < 2 || -2 * m + 1 - (w + wp) + e < 2 {
                return false;
            }
        }
    }
    true
}

/// Re-evaluate the complex-place criticality test from a shift multiset and
/// the sum of purity weights alone: `1/2 + m + shift >= 1` for the left factor
/// and `1/2 - m + (shift - (w+wp)) >= 1` for the dual.
pub fn is_critical_from_shifts(m: i64, shifts: &[HalfInt], w_plus_wp: i64) -> bool {
    shifts.iter().all(|s| {
        let t = s.twice();
        2 * m + t >= 1 && -2 * m + t - 2 * w_plus_wp >= 1
    })
}

/// Brute-force critical set: scan `m` over a window provably containing every
/// critical point, applying the real and complex criteria at every place.
///
/// Legal for incompatible weights too: this is the analytic critical set,
/// which can be nonempty while the compatibility set is empty.
pub fn critical_set_scan(mu: &Weight, lam: &Weight) -> Result<CriticalSet> {
    if mu.signature().r1() != lam.signature().r1() || mu.signature().r2() != lam.signature().r2() {
        return Err(Error::SignatureMismatch);
    }
    if lam.rank() + 1 != mu.rank() {
        return Err(Error::RankMismatch {
            expected: mu.rank() - 1,
            got: lam.rank(),
        });
    }
    let w = mu.strongly_pure_weight()?;
    let wp = lam.strongly_pure_weight()?;
    let n = mu.rank() as i64;

    // Every bound generator is a sum of two entries shifted by purity weights,
    // themselves sums of two entries, so this window cannot clip the set.
    let window = 3 * (mu.max_abs_entry() + lam.max_abs_entry()) + n + 2;

    enum LocalData {
        Real { l: Vec<i64>, lp: Vec<i64> },
        Cplx { e: usize },
    }
    let mut locals = Vec::new();
    for place in mu.signature().places() {
        match place {
            Place::Real(e) => locals.push(LocalData::Real {
                l: cuspidal_params_real(mu.component(e), w)?,
                lp: cuspidal_params_real(lam.component(e), wp)?,
            }),
            Place::Complex(iota, _) => locals.push(LocalData::Cplx { e: iota }),
        }
    }

    let critical_at = |m: i64| -> bool {
        locals.iter().all(|data| match data {
            LocalData::Real { l, lp } => is_critical_real(m, l, lp, w, wp),
            LocalData::Cplx { e } => {
                is_critical_cplx(m, mu.component(*e), lam.component(*e), w, wp)
            }
        })
    };

    let members: Vec<i64> = (-window..=window).filter(|&m| critical_at(m)).collect();
    if members.first() == Some(&-window) || members.last() == Some(&window) {
        return Err(Error::NonIntervalScan);
    }
    CriticalSet::from_members(&members)
}

/// Tensor product of two parameters of the same place kind.
///
/// Complex: characters multiply pairwise. Real: Mackey decomposition
/// `I(k) (x) I(l) = I(k+l) (+) I(|k-l|)`, with an `l = 0` result standing for
/// `Sign(+) (+) Sign(-)`; sign characters twist induced summands; parities
/// multiply; twists always add.
pub fn tensor(a: &ArchParameter, b: &ArchParameter) -> Result<ArchParameter> {
    if a.kind() != b.kind() {
        return Err(Error::MixedPlaceKinds);
    }
    let mut summands = Vec::new();
    for x in a.summands() {
        for y in b.summands() {
            tensor_summands(*x, *y, &mut summands);
        }
    }
    ArchParameter::new(a.kind(), summands)
}

fn tensor_summands(x: ArchSummand, y: ArchSummand, out: &mut Vec<ArchSummand>) {
    use ArchSummand::*;
    match (x, y) {
        (Char { p, q }, Char { p: p2, q: q2 }) => out.push(Char {
            p: p + p2,
            q: q + q2,
        }),
        (Induced { l: k, twist: t }, Induced { l, twist: t2 }) => {
            let twist = t + t2;
            out.push(Induced { l: k + l, twist });
            if k == l {
                out.push(Sign { parity: 1, twist });
                out.push(Sign { parity: -1, twist });
            } else {
                out.push(Induced {
                    l: (k - l).abs(),
                    twist,
                });
            }
        }
        (Sign { twist: t, .. }, Induced { l, twist: t2 })
        | (Induced { l, twist: t2 }, Sign { twist: t, .. }) => {
            out.push(Induced { l, twist: t + t2 })
        }
        (
            Sign { parity, twist },
            Sign {
                parity: p2,
                twist: t2,
            },
        ) => out.push(Sign {
            parity: parity * p2,
            twist: twist + t2,
        }),
        _ => unreachable!("mixed kinds rejected by tensor"),
    }
}
