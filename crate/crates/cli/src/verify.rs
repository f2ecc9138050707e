//! The seeded randomized cross-check suite behind `lcrit verify`.
//!
//! Each trial draws fresh data and runs every check; failures carry the
//! offending place and weights so a broken formula is easy to localize.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lcrit_core::archimedean::{critical_set_scan, is_critical_cplx};
use lcrit_core::branching::{compat_set, critical_set_closed_form, m_pm_place, PlaceKind};
use lcrit_core::motivic::{classify, hodge_from_gl2_weight, Criticality};
use lcrit_core::sampling::{random_compatible_pair, random_signature, random_strongly_pure_weight};
use lcrit_core::signs_periods::sign_recipe;
use lcrit_core::symmetric::{
    factorization_check_cplx, factorization_check_real, sym3_critical_set, sym3_critical_set_scan,
    sym_weight,
};
use lcrit_core::weights::Weight;
use lcrit_core::Place;

use crate::report::{CheckSummary, VerifyReport};

/// A closed-form (m-, m+) formula for one complex place; the production one
/// is [`m_pm_place`], tests may inject a perturbed one to exercise the
/// harness.
pub type MpmFormula = fn(&[i64], &[i64], i64, i64) -> (i64, i64);

fn production_mpm(mu_v: &[i64], lam_v: &[i64], w: i64, wp: i64) -> (i64, i64) {
    m_pm_place(mu_v, lam_v, w, wp, PlaceKind::Complex).expect("rank checked by caller")
}

fn describe_pair(mu: &Weight, lam: &Weight) -> String {
    format!(
        "mu={:?} lam={:?} over (r1={}, r2={})",
        mu.components(),
        lam.components(),
        mu.signature().r1(),
        mu.signature().r2()
    )
}

/// Three-route equality on a compatible pair: enumeration, closed form, scan.
fn check_three_routes(mu: &Weight, lam: &Weight) -> Result<(), String> {
    let compat = compat_set(mu, lam).map_err(|e| e.to_string())?;
    let closed = critical_set_closed_form(mu, lam).map_err(|e| e.to_string())?;
    let scan = critical_set_scan(mu, lam).map_err(|e| e.to_string())?;
    if compat != closed || compat != scan {
        return Err(format!(
            "compat {compat} / closed {closed} / scan {scan} for {}",
            describe_pair(mu, lam)
        ));
    }
    Ok(())
}

/// Per complex place: the closed-form bounds must equal the ends of the
/// inequality scan.
pub fn check_complex_mpm_with(
    formula: MpmFormula,
    mu: &Weight,
    lam: &Weight,
) -> Result<(), String> {
    let w = mu.purity_weight().map_err(|e| e.to_string())?;
    let wp = lam.purity_weight().map_err(|e| e.to_string())?;
    let n = mu.rank() as i64;
    for place in mu.signature().places() {
        let Place::Complex(iota, _) = place else {
            continue;
        };
        let mu_v = mu.component(iota);
        let lam_v = lam.component(iota);
        let (m_minus, m_plus) = formula(mu_v, lam_v, w, wp);
        let window = 3 * (mu.max_abs_entry() + lam.max_abs_entry()) + n + 2;
        let members: Vec<i64> = (-window..=window)
            .filter(|&m| is_critical_cplx(m, mu_v, lam_v, w, wp))
            .collect();
        let scanned = (members.first().copied(), members.last().copied());
        if scanned != (Some(m_minus), Some(m_plus)) {
            return Err(format!(
                "complex place at embedding {iota}: formula ({m_minus}, {m_plus}) vs scan {scanned:?} for {}",
                describe_pair(mu, lam)
            ));
        }
    }
    Ok(())
}

/// Symmetric-power transfer: purity weight scales by r and the transferred
/// parameter matches the parameter of the transferred weight at every place.
fn check_sym_transfer<R: Rng>(rng: &mut R, mu: &Weight) -> Result<(), String> {
    use lcrit_core::archimedean::{jmu_parameter, LocalWeight};
    use lcrit_core::symmetric::{sym_parameter_cplx, sym_parameter_real};

    let w = mu.purity_weight().map_err(|e| e.to_string())?;
    let r = rng.gen_range(1..=5u32);
    let sym = sym_weight(mu, r).map_err(|e| e.to_string())?;
    let sym_w = sym.purity_weight().map_err(|e| e.to_string())?;
    if sym_w != r as i64 * w {
        return Err(format!(
            "w(Sym^{r} mu) = {sym_w} != {r} * {w} for mu={:?}",
            mu.components()
        ));
    }
    for place in mu.signature().places() {
        let ok = match place {
            Place::Real(e) => {
                let (a, b) = (mu.component(e)[0], mu.component(e)[1]);
                let l = a - b + 1;
                let eps = if r % 2 == 0 {
                    Some(if (r as i64 * l / 2) % 2 == 0 { 1 } else { -1 })
                } else {
                    None
                };
                let via_weight = jmu_parameter(LocalWeight::Real(sym.component(e)), sym_w, eps)
                    .map_err(|e| e.to_string())?;
                sym_parameter_real(l, w, r) == via_weight
            }
            Place::Complex(iota, bar) => {
                let (a, b) = (mu.component(iota)[0], mu.component(iota)[1]);
                let via_weight = jmu_parameter(
                    LocalWeight::Complex {
                        iota: sym.component(iota),
                        bar: sym.component(bar),
                    },
                    sym_w,
                    None,
                )
                .map_err(|e| e.to_string())?;
                sym_parameter_cplx(a, b, w, r) == via_weight
            }
        };
        if !ok {
            return Err(format!(
                "Sym^{r} parameter mismatch at {place:?} for mu={:?}",
                mu.components()
            ));
        }
    }
    Ok(())
}

fn check_sym3_routes(mu: &Weight) -> Result<(), String> {
    let closed = sym3_critical_set(mu).map_err(|e| e.to_string())?;
    let scan = sym3_critical_set_scan(mu).map_err(|e| e.to_string())?;
    if closed != scan {
        return Err(format!(
            "Sym^3 closed {closed} vs scan {scan} for mu={:?}",
            mu.components()
        ));
    }
    Ok(())
}

fn check_factorization(mu: &Weight) -> Result<(), String> {
    let w = mu.purity_weight().map_err(|e| e.to_string())?;
    for place in mu.signature().places() {
        let ok = match place {
            Place::Real(e) => {
                let (a, b) = (mu.component(e)[0], mu.component(e)[1]);
                factorization_check_real(a, b, w)
            }
            Place::Complex(iota, _) => {
                let (a, b) = (mu.component(iota)[0], mu.component(iota)[1]);
                factorization_check_cplx(a, b, w, 2)
            }
        };
        if !ok {
            return Err(format!(
                "Sym^2 (x) Sym^1 factorization fails at {place:?} for mu={:?}",
                mu.components()
            ));
        }
    }
    Ok(())
}

fn check_sign_law<R: Rng>(rng: &mut R, r1: usize) -> Result<(), String> {
    let n = rng.gen_range(2..=6usize);
    let parities: Vec<i8> = (0..r1.max(1))
        .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
        .collect();
    let w = 2 * rng.gen_range(-5..=5i64);
    let (eps, eta) = sign_recipe(n, &parities, w, w).map_err(|e| e.to_string())?;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    for (a, b) in eps.signs().iter().zip(eta.signs()) {
        if *a != sign * b {
            return Err(format!("eps != (-1)^{n} eta for parities {parities:?}"));
        }
    }
    Ok(())
}

/// Compatible GL(2) x GL(1) data classifies as critical of type empty.
fn check_type_empty(mu: &Weight, lam: &Weight) -> Result<(), String> {
    let h = hodge_from_gl2_weight(mu)
        .map_err(|e| e.to_string())?
        .tate_twist(1);
    let j: Vec<i64> = (0..mu.signature().degree())
        .map(|e| lam.component(e)[0])
        .collect();
    // Criticality of type empty is asserted for members of the
    // compatibility set: twist lambda to a member.
    let compat = compat_set(mu, lam).map_err(|e| e.to_string())?;
    let Some(j0) = compat.lo() else {
        return Err(format!(
            "expected nonempty compat for {}",
            describe_pair(mu, lam)
        ));
    };
    for m in [j0, compat.hi().unwrap()] {
        let shifted: Vec<i64> = j.iter().map(|x| x + m).collect();
        match classify(&h, &shifted).map_err(|e| e.to_string())? {
            Criticality::Critical(t) if t.a.is_empty() && t.a_bar.is_empty() => {}
            other => {
                return Err(format!(
                    "expected type empty, got {other:?} for {} at twist {m}",
                    describe_pair(mu, lam)
                ))
            }
        }
    }
    Ok(())
}

struct Tally {
    name: &'static str,
    passes: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            passes: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, outcome: Result<(), String>) {
        match outcome {
            Ok(()) => self.passes += 1,
            Err(msg) => {
                self.failures += 1;
                self.first_failure.get_or_insert(msg);
            }
        }
    }

    fn summary(&self) -> CheckSummary {
        CheckSummary {
            name: self.name.to_string(),
            passes: self.passes,
            failures: self.failures,
            first_failure: self.first_failure.clone(),
        }
    }
}

/// Run the suite: deterministic in `seed`, `trials` rounds of every check.
pub fn run_verify(seed: u64, trials: u64, max_entry: i64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut three_routes = Tally::new("three-route critical set");
    let mut complex_mpm = Tally::new("complex-place m-/m+");
    let mut sym_transfer = Tally::new("symmetric transfer");
    let mut sym3_routes = Tally::new("Sym^3 two routes");
    let mut factorization = Tally::new("Sym^2 x Sym^1 factorization");
    let mut sign_law = Tally::new("sign law");
    let mut type_empty = Tally::new("motivic type empty");

    for _ in 0..trials {
        let sig = random_signature(&mut rng, 2);
        let n = rng.gen_range(2..=5usize);
        let (mu, lam) = random_compatible_pair(&mut rng, &sig, n, max_entry);
        three_routes.record(check_three_routes(&mu, &lam));
        if sig.r2() > 0 {
            complex_mpm.record(check_complex_mpm_with(production_mpm, &mu, &lam));
        }

        let gl2 = random_strongly_pure_weight(&mut rng, &sig, 2, max_entry);
        sym_transfer.record(check_sym_transfer(&mut rng, &gl2));
        sym3_routes.record(check_sym3_routes(&gl2));
        factorization.record(check_factorization(&gl2));
        sign_law.record(check_sign_law(&mut rng, sig.r1()));

        let (mu2, lam1) = random_compatible_pair(&mut rng, &sig, 2, max_entry);
        type_empty.record(check_type_empty(&mu2, &lam1));
    }

    let checks: Vec<CheckSummary> = [
        &three_routes,
        &complex_mpm,
        &sym_transfer,
        &sym3_routes,
        &factorization,
        &sign_law,
        &type_empty,
    ]
    .iter()
    .map(|t| t.summary())
    .collect();
    let all_pass = checks.iter().all(|c| c.failures == 0);
    VerifyReport {
        seed,
        trials,
        max_entry,
        checks,
        all_pass,
        warning: if trials == 0 {
            Some("zero trials: the pass is vacuous".into())
        } else {
            None
        },
    }
}
