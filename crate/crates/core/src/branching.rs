//! Interlacing for the branching GL(n) -> GL(n-1), the compatibility set of
//! integer twists, and the closed-form bounds m- and m+ for the critical set.
//!
//! The compatibility set is computed by direct interlacing enumeration over a
//! window derived from entry bounds, deliberately independent of the m+/-
//! formulas so the two can cross-check each other.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numberfield::Place;
use crate::weights::Weight;

/// An integer interval `{m : lo <= m <= hi}`, possibly empty; membership means
/// `1/2 + m` is critical, equivalently `lambda + m` is compatible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalSet {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    lo: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    hi: Option<i64>,
}

impl CriticalSet {
    pub const EMPTY: CriticalSet = CriticalSet { lo: None, hi: None };

    /// The interval `[lo, hi]`; empty when `lo > hi`.
    pub fn from_bounds(lo: i64, hi: i64) -> Self {
        if lo > hi {
            CriticalSet::EMPTY
        } else {
            CriticalSet {
                lo: Some(lo),
                hi: Some(hi),
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lo.is_none()
    }

    pub fn lo(&self) -> Option<i64> {
        self.lo
    }

    pub fn hi(&self) -> Option<i64> {
        self.hi
    }

    pub fn contains(&self, m: i64) -> bool {
        matches!((self.lo, self.hi), (Some(lo), Some(hi)) if lo <= m && m <= hi)
    }

    pub fn len(&self) -> usize {
        match (self.lo, self.hi) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize,
            _ => 0,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        let (lo, hi) = match (self.lo, self.hi) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => (0, -1),
        };
        lo..=hi
    }

    /// Intersection of two intervals.
    pub fn intersect(&self, other: &CriticalSet) -> CriticalSet {
        match (self.lo, self.hi, other.lo, other.hi) {
            (Some(a), Some(b), Some(c), Some(d)) => CriticalSet::from_bounds(a.max(c), b.min(d)),
            _ => CriticalSet::EMPTY,
        }
    }

    /// Package a strictly increasing list of members, which must form a run of
    /// consecutive integers.
    pub(crate) fn from_members(members: &[i64]) -> Result<CriticalSet> {
        match (members.first(), members.last()) {
            (None, _) => Ok(CriticalSet::EMPTY),
            (Some(&lo), Some(&hi)) => {
                if (hi - lo + 1) as usize != members.len() {
                    return Err(Error::NonIntervalScan);
                }
                Ok(CriticalSet::from_bounds(lo, hi))
            }
            _ => unreachable!(),
        }
    }
}

impl std::fmt::Display for CriticalSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.lo, self.hi) {
            (Some(lo), Some(hi)) => write!(f, "[{lo}, {hi}]"),
            _ => write!(f, "empty"),
        }
    }
}

/// Which kind of archimedean place local data belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlaceKind {
    Real,
    Complex,
}

fn check_pair(mu: &Weight, lam: &Weight) -> Result<()> {
    if mu.signature().r1() != lam.signature().r1() || mu.signature().r2() != lam.signature().r2() {
        return Err(Error::SignatureMismatch);
    }
    if lam.rank() + 1 != mu.rank() {
        return Err(Error::RankMismatch {
            expected: mu.rank() - 1,
            got: lam.rank(),
        });
    }
    Ok(())
}

/// `upper` interlaces `lower`: u_1 >= l_1 >= u_2 >= ... >= l_{n-1} >= u_n.
fn tuple_interlaces(upper: &[i64], lower: &[i64]) -> bool {
    debug_assert_eq!(upper.len(), lower.len() + 1);
    lower
        .iter()
        .enumerate()
        .all(|(j, &l)| upper[j] >= l && l >= upper[j + 1])
}

/// True iff `dual(mu)` interlaces `lam` at every embedding, i.e. at each
/// embedding `-mu_n >= lam_1 >= -mu_{n-1} >= ... >= lam_{n-1} >= -mu_1`.
pub fn interlaces(mu: &Weight, lam: &Weight) -> Result<bool> {
    check_pair(mu, lam)?;
    let dual = mu.dual();
    Ok((0..mu.signature().degree()).all(|e| tuple_interlaces(dual.component(e), lam.component(e))))
}

/// The set `{j : dual(mu) interlaces lam + j}`, found by enumeration over the
/// entry-bound window widened by one. It is always an interval.
pub fn compat_set(mu: &Weight, lam: &Weight) -> Result<CriticalSet> {
    check_pair(mu, lam)?;
    let window = mu.max_abs_entry() + lam.max_abs_entry() + 1;
    let mut members = Vec::new();
    for j in -window..=window {
        if interlaces(mu, &lam.twist(j))? {
            members.push(j);
        }
    }
    CriticalSet::from_members(&members)
}

/// Per-place closed-form bounds (m-, m+) for the critical interval.
///
/// At a real place only the first family of generators appears; at a complex
/// place the second family encodes the conjugate component through the purity
/// weights `w` and `wp`. Indices run over the iota-component.
pub fn m_pm_place(
    mu_v: &[i64],
    lam_v: &[i64],
    w: i64,
    wp: i64,
    kind: PlaceKind,
) -> Result<(i64, i64)> {
    let n = mu_v.len();
    if lam_v.len() + 1 != n || n < 2 {
        return Err(Error::RankMismatch {
            expected: n.max(2) - 1,
            got: lam_v.len(),
        });
    }
    // j = 1..=n-1, 1-indexed: mu_{n+1-j} = mu_v[n-j], mu_{n-j} = mu_v[n-1-j].
    let first_plus = (1..n).map(|j| -mu_v[n - j] - lam_v[j - 1]);
    let first_minus = (1..n).map(|j| -mu_v[n - 1 - j] - lam_v[j - 1]);
    match kind {
        PlaceKind::Real => Ok((first_minus.max().unwrap(), first_plus.min().unwrap())),
        PlaceKind::Complex => {
            let second_plus = (1..n).map(|j| mu_v[n - 1 - j] + lam_v[j - 1] - (w + wp));
            let second_minus = (1..n).map(|j| mu_v[n - j] + lam_v[j - 1] - (w + wp));
            let m_plus = first_plus.chain(second_plus).min().unwrap();
            let m_minus = first_minus.chain(second_minus).max().unwrap();
            Ok((m_minus, m_plus))
        }
    }
}

/// Closed-form critical set `[max_v m-_v, min_v m+_v]` over all places.
///
/// Requires the compatibility set to be nonempty, which is what makes the
/// closed form valid; callers facing an empty set can still use the scan.
pub fn critical_set_closed_form(mu: &Weight, lam: &Weight) -> Result<CriticalSet> {
    check_pair(mu, lam)?;
    if compat_set(mu, lam)?.is_empty() {
        return Err(Error::EmptyCompatSet);
    }
    let w = mu.purity_weight()?;
    let wp = lam.purity_weight()?;
    let mut lo = i64::MIN;
    let mut hi = i64::MAX;
    for place in mu.signature().places() {
        let (e, kind) = match place {
            Place::Real(e) => (e, PlaceKind::Real),
            Place::Complex(iota, _) => (iota, PlaceKind::Complex),
        };
        let (m_minus, m_plus) = m_pm_place(mu.component(e), lam.component(e), w, wp, kind)?;
        lo = lo.max(m_minus);
        hi = hi.min(m_plus);
    }
    Ok(CriticalSet::from_bounds(lo, hi))
}
