//! Symmetric-power and determinant transfers of GL(2) weights, the matching
//! archimedean parameter transfers, compatibility feasibility for consecutive
//! symmetric powers, and the symmetric-cube critical set.
//!
//! The cube critical set is computed twice on purpose: once from the
//! closed-form place-by-place bounds, and once by scanning regularity of the
//! displayed Gamma factors; the two routes are independent implementations.

use serde::{Deserialize, Serialize};

use crate::archimedean::{tensor, ArchParameter, ArchSummand};
use crate::branching::{CriticalSet, PlaceKind};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::numberfield::Place;
use crate::weights::Weight;

fn require_gl2(mu: &Weight) -> Result<()> {
    if mu.rank() != 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            got: mu.rank(),
        });
    }
    Ok(())
}

/// The weight of the r-th symmetric power transfer: per embedding
/// `((r-k) a + k b)` for `k = 0..=r`. Purity weight becomes `r w`.
pub fn sym_weight(mu: &Weight, r: u32) -> Result<Weight> {
    require_gl2(mu)?;
    if r < 1 {
        return Err(Error::BadInput("symmetric power needs r >= 1".into()));
    }
    mu.strongly_pure_weight()?;
    let r = r as i64;
    let comps = mu
        .components()
        .iter()
        .map(|c| {
            let (a, b) = (c[0], c[1]);
            (0..=r).map(|k| (r - k) * a + k * b).collect()
        })
        .collect();
    Weight::new(mu.signature().clone(), comps)
}

/// The weight of the central character: per embedding the scalar `a + b`.
/// Purity weight becomes `2 w`.
pub fn det_weight(mu: &Weight) -> Result<Weight> {
    require_gl2(mu)?;
    let comps = mu.components().iter().map(|c| vec![c[0] + c[1]]).collect();
    Weight::new(mu.signature().clone(), comps)
}

/// Symmetric power of a real-place parameter `I(xi_l)(w/2)`:
/// odd r gives `I(xi_l) + I(xi_3l) + ... + I(xi_rl)`, even r gives
/// `sgn^{rl/2} + I(xi_2l) + ... + I(xi_rl)`, all twisted by `rw/2`.
pub fn sym_parameter_real(l: i64, w: i64, r: u32) -> ArchParameter {
    assert!(l >= 1, "sym_parameter_real needs l >= 1");
    let r = r as i64;
    let twist = HalfInt::from_twice(r * w);
    let mut summands = Vec::new();
    let start = if r % 2 == 1 {
        1
    } else {
        let parity = if (r * l / 2) % 2 == 0 { 1 } else { -1 };
        summands.push(ArchSummand::Sign { parity, twist });
        2
    };
    let mut k = start;
    while k <= r {
        summands.push(ArchSummand::Induced { l: k * l, twist });
        k += 2;
    }
    ArchParameter::new(PlaceKind::Real, summands).expect("real summands")
}

/// Symmetric power of a complex-place parameter: summands
/// `xi((r-k)a + kb + (r-2k)/2, rw - ((r-k)a + kb) - (r-2k)/2)` for `k = 0..=r`.
pub fn sym_parameter_cplx(a: i64, b: i64, w: i64, r: u32) -> ArchParameter {
    let r = r as i64;
    let summands = (0..=r)
        .map(|k| {
            let p = HalfInt::from_twice(2 * ((r - k) * a + k * b) + (r - 2 * k));
            ArchSummand::Char {
                p,
                q: HalfInt::from_twice(2 * r * w) - p,
            }
        })
        .collect();
    ArchParameter::new(PlaceKind::Complex, summands).expect("complex summands")
}

/// Feasibility of the compatibility condition for the pair
/// `(Sym^r mu, Sym^{r-1} mu)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymCompatReport {
    /// Per embedding id: `2r a + 2(r-1) b >= (2r-1) w >= 2(r-1) a + 2r b`.
    pub per_embedding: Vec<bool>,
    pub feasible: bool,
    /// When F has a real place and the condition holds everywhere, a twist
    /// that realizes compatibility: `j = floor(w/2) - r w`.
    pub totally_real_twist: Option<i64>,
}

/// The necessary condition for `(Sym^r mu, Sym^{r-1} mu)` to admit a
/// compatible integer twist, evaluated per embedding.
pub fn sym_compat_necessary(mu: &Weight, r: u32) -> Result<SymCompatReport> {
    require_gl2(mu)?;
    let w = mu.purity_weight()?;
    let r = r as i64;
    let per_embedding: Vec<bool> = mu
        .components()
        .iter()
        .map(|c| {
            let (a, b) = (c[0], c[1]);
            2 * r * a + 2 * (r - 1) * b >= (2 * r - 1) * w
                && (2 * r - 1) * w >= 2 * (r - 1) * a + 2 * r * b
        })
        .collect();
    let feasible = per_embedding.iter().all(|&ok| ok);
    let totally_real_twist = if feasible && mu.signature().r1() > 0 {
        Some(w.div_euclid(2) - r * w)
    } else {
        None
    };
    Ok(SymCompatReport {
        per_embedding,
        feasible,
        totally_real_twist,
    })
}

/// The four complex-place bound generators for the symmetric cube.
fn sym3_alpha(a: i64, b: i64, w: i64) -> i64 {
    [
        6 * a - 3 * w + 3,
        4 * a + 2 * b - 3 * w + 1,
        2 * a + 4 * b - 3 * w - 1,
        6 * b - 3 * w - 3,
    ]
    .into_iter()
    .map(i64::abs)
    .min()
    .unwrap()
}

/// Closed-form critical set of the symmetric cube L-function: intersection
/// over real places of `[-2a-b, -2b-a]` and over complex places of
/// `[(1 - 3w - alpha)/2, (-1 - 3w + alpha)/2]`, rounded inward to integers.
pub fn sym3_critical_set(mu: &Weight) -> Result<CriticalSet> {
    require_gl2(mu)?;
    let w = mu.strongly_pure_weight()?;
    let mut set = CriticalSet::from_bounds(i64::MIN / 4, i64::MAX / 4);
    for place in mu.signature().places() {
        let local = match place {
            Place::Real(e) => {
                let (a, b) = (mu.component(e)[0], mu.component(e)[1]);
                CriticalSet::from_bounds(-2 * a - b, -2 * b - a)
            }
            Place::Complex(iota, bar) => {
                let (a, b) = (mu.component(iota)[0], mu.component(iota)[1]);
                let alpha = sym3_alpha(a, b, w);
                // The conjugate component gives the same generators up to
                // sign; computed both ways rather than assumed.
                let (ab, bb) = (mu.component(bar)[0], mu.component(bar)[1]);
                assert_eq!(
                    alpha,
                    sym3_alpha(ab, bb, w),
                    "alpha mismatch across a conjugate pair"
                );
                CriticalSet::from_bounds(
                    (1 - 3 * w - alpha + 1).div_euclid(2),
                    (-1 - 3 * w + alpha).div_euclid(2),
                )
            }
        };
        set = set.intersect(&local);
    }
    Ok(set)
}

/// Independent scan for the symmetric-cube critical set, built from the
/// displayed Gamma factors: at a real place shifts `3w/2 + (a-b+1)/2` and
/// `3w/2 + 3(a-b+1)/2`, at a complex place `3w/2 + |g|/2` over the four bound
/// generators. A point `1/2 + m` is critical when both the factor and its
/// dual under `s -> 1-s` are regular at every place.
pub fn sym3_critical_set_scan(mu: &Weight) -> Result<CriticalSet> {
    require_gl2(mu)?;
    let w = mu.strongly_pure_weight()?;
    // Shift magnitudes: per-place absolute shift values (twice), paired with
    // the twist 3w they ride on.
    let mut abs_shifts: Vec<Vec<i64>> = Vec::new();
    for place in mu.signature().places() {
        match place {
            Place::Real(e) => {
                let (a, b) = (mu.component(e)[0], mu.component(e)[1]);
                let l = a - b + 1;
                abs_shifts.push(vec![l, 3 * l]);
            }
            Place::Complex(iota, _) => {
                let (a, b) = (mu.component(iota)[0], mu.component(iota)[1]);
                abs_shifts.push(
                    [
                        6 * a - 3 * w + 3,
                        4 * a + 2 * b - 3 * w + 1,
                        2 * a + 4 * b - 3 * w - 1,
                        6 * b - 3 * w - 3,
                    ]
                    .iter()
                    .map(|g| g.abs())
                    .collect(),
                );
            }
        }
    }
    let critical_at = |m: i64| {
        abs_shifts.iter().all(|place| {
            place
                .iter()
                .all(|&h| 1 + 2 * m + 3 * w + h >= 2 && 1 - 2 * m - 3 * w + h >= 2)
        })
    };
    let window = 9 * mu.max_abs_entry() + 6;
    let members: Vec<i64> = (-window..=window).filter(|&m| critical_at(m)).collect();
    if members.first() == Some(&-window) || members.last() == Some(&window) {
        return Err(Error::NonIntervalScan);
    }
    CriticalSet::from_members(&members)
}

/// Central-character parameter of the GL(2) datum at a complex place, read
/// off as the determinant of the parameter: `xi(a+b, 2w - (a+b))`.
pub fn central_char_param_cplx(a: i64, b: i64, w: i64) -> ArchParameter {
    ArchParameter::new(
        PlaceKind::Complex,
        vec![ArchSummand::Char {
            p: HalfInt::from_int(a + b),
            q: HalfInt::from_int(2 * w - (a + b)),
        }],
    )
    .expect("one character summand")
}

/// Central-character parameter at a real place: `sgn^{l+1} |.|^w` for
/// `l = a - b + 1`.
pub fn central_char_param_real(a: i64, b: i64, w: i64) -> ArchParameter {
    let parity = if (a - b) % 2 == 0 { -1 } else { 1 };
    ArchParameter::new(
        PlaceKind::Real,
        vec![ArchSummand::Sign {
            parity,
            twist: HalfInt::from_int(w),
        }],
    )
    .expect("one sign summand")
}

/// Verify, at a complex place, the parameter-level factorization
/// `Sym^r (x) Sym^{r-1} = (+)_{t=1}^{r} Sym^{2t-1} . omega^{r-t}`.
pub fn factorization_check_cplx(a: i64, b: i64, w: i64, r: u32) -> bool {
    assert!(r >= 1);
    let lhs = tensor(
        &sym_parameter_cplx(a, b, w, r),
        &sym_parameter_cplx(a, b, w, r - 1),
    )
    .expect("same kind");
    let omega = central_char_param_cplx(a, b, w);
    let mut rhs: Option<ArchParameter> = None;
    for t in 1..=r {
        let mut factor = sym_parameter_cplx(a, b, w, 2 * t - 1);
        for _ in 0..(r - t) {
            factor = tensor(&factor, &omega).expect("same kind");
        }
        rhs = Some(match rhs {
            None => factor,
            Some(acc) => acc.direct_sum(&factor).expect("same kind"),
        });
    }
    lhs == rhs.unwrap()
}

/// The real-place factorization check for the one case the cube needs:
/// `Sym^2 (x) Sym^1 = Sym^3 (+) Sym^1 . omega`.
pub fn factorization_check_real(a: i64, b: i64, w: i64) -> bool {
    let l = a - b + 1;
    let lhs = tensor(&sym_parameter_real(l, w, 2), &sym_parameter_real(l, w, 1)).expect("real");
    let twisted = tensor(
        &sym_parameter_real(l, w, 1),
        &central_char_param_real(a, b, w),
    )
    .expect("real");
    let rhs = sym_parameter_real(l, w, 3)
        .direct_sum(&twisted)
        .expect("real");
    lhs == rhs
}
