//! Property tests for the structural invariants: duality and twisting laws on
//! weights, interval structure of compatibility sets, the shift-multiset
//! re-evaluation of complex criticality, tensor commutativity, and
//! idempotence of the period rewriter.

use proptest::collection::vec;
use proptest::prelude::*;

use lcrit_core::archimedean::{
    is_critical_cplx, is_critical_from_shifts, rs_gamma_shifts_cplx, tensor, ArchParameter,
    ArchSummand,
};
use lcrit_core::branching::{compat_set, interlaces, m_pm_place};
use lcrit_core::halfint::HalfInt;
use lcrit_core::signs_periods::{
    normalize, Atom, CharLabel, PeriodExpr, RepLabel, RuleSet, SignExpr,
};
use lcrit_core::weights::{TriState, Weight};
use lcrit_core::{FieldSignature, PlaceKind};

/// A random signature with small r1, r2.
fn signature_strategy() -> impl Strategy<Value = FieldSignature> {
    (0usize..=2, 0usize..=2)
        .prop_filter("nonempty field", |(r1, r2)| r1 + r2 > 0)
        .prop_map(|(r1, r2)| FieldSignature::validate(r1, r2).unwrap())
}

fn build_pure_weight(sig: &FieldSignature, n: usize, w: i64, seed: u64) -> Weight {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let tuple = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<i64> {
        let mut first: Vec<i64> = (0..n / 2)
            .map(|_| rng.gen_range(w / 2..=w / 2 + 6))
            .collect();
        first.sort_unstable_by(|a, b| b.cmp(a));
        let mut t = first.clone();
        if n % 2 == 1 {
            t.push(w / 2);
        }
        t.extend(first.iter().rev().map(|x| w - x));
        t
    };
    let comps: Vec<Vec<i64>> = if sig.is_totally_real() {
        (0..sig.degree()).map(|_| tuple(&mut rng)).collect()
    } else if sig.is_cm() {
        let mut comps = vec![Vec::new(); sig.degree()];
        for k in 0..sig.r2() {
            let iota = sig.r1() + 2 * k;
            let mut t: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
            t.sort_unstable_by(|a, b| b.cmp(a));
            comps[iota + 1] = t.iter().rev().map(|x| w - x).collect();
            comps[iota] = t;
        }
        comps
    } else {
        vec![tuple(&mut rng); sig.degree()]
    };
    Weight::new(sig.clone(), comps).unwrap()
}

/// A pure weight: first half plus even purity weight, completed per
/// embedding (independently over totally real fields, per pair over CM,
/// parallel otherwise).
fn pure_weight_strategy(n: usize) -> impl Strategy<Value = Weight> {
    (signature_strategy(), -4i64..=4, proptest::num::u64::ANY)
        .prop_map(move |(sig, half_w, seed)| build_pure_weight(&sig, n, 2 * half_w, seed))
}

/// A pair of pure weights of ranks (n, n-1) over one shared signature.
fn pure_pair_strategy(n: usize) -> impl Strategy<Value = (Weight, Weight)> {
    (
        signature_strategy(),
        -4i64..=4,
        -4i64..=4,
        proptest::num::u64::ANY,
        proptest::num::u64::ANY,
    )
        .prop_map(move |(sig, half_w, half_wp, seed_mu, seed_lam)| {
            (
                build_pure_weight(&sig, n, 2 * half_w, seed_mu),
                build_pure_weight(&sig, n - 1, 2 * half_wp, seed_lam),
            )
        })
}

proptest! {
    #[test]
    fn dual_is_an_involution_negating_purity_weight(mu in pure_weight_strategy(3)) {
        let report = mu.purity();
        prop_assert!(report.is_pure);
        let dual = mu.dual();
        prop_assert_eq!(dual.dual(), mu.clone());
        let dual_report = dual.purity();
        prop_assert!(dual_report.is_pure);
        prop_assert_eq!(
            dual_report.purity_weight.unwrap(),
            -report.purity_weight.unwrap()
        );
        prop_assert_ne!(report.is_strongly_pure, TriState::No);
    }

    #[test]
    fn twist_shifts_purity_weight_by_two_m(mu in pure_weight_strategy(4), m in -5i64..=5) {
        let twisted = mu.twist(m);
        prop_assert_eq!(
            twisted.purity().purity_weight.unwrap(),
            mu.purity().purity_weight.unwrap() + 2 * m
        );
        prop_assert_eq!(twisted.twist(-m), mu);
    }

    #[test]
    fn purity_implies_sheaf_condition(mu in pure_weight_strategy(3)) {
        prop_assert!(mu.purity().is_pure);
        prop_assert!(mu.sheaf_condition());
    }

    #[test]
    fn compat_set_is_an_interval_of_interlacing_twists(
        (mu, lam) in pure_pair_strategy(3),
    ) {
        let set = compat_set(&mu, &lam).unwrap();
        let window = mu.max_abs_entry() + lam.max_abs_entry() + 1;
        for j in -window..=window {
            prop_assert_eq!(
                set.contains(j),
                interlaces(&mu, &lam.twist(j)).unwrap(),
                "j={}", j
            );
        }
    }

    #[test]
    fn zero_in_compat_set_brackets_zero_in_m_pm(
        (mu, raw_lam) in pure_pair_strategy(3),
    ) {
        // Recenter lambda so that zero is a member of the compatibility set.
        let compat = compat_set(&mu, &raw_lam).unwrap();
        prop_assume!(!compat.is_empty());
        let lam = raw_lam.twist(compat.lo().unwrap());
        prop_assert!(interlaces(&mu, &lam).unwrap());
        let w = mu.purity_weight().unwrap();
        let wp = lam.purity_weight().unwrap();
        for place in mu.signature().places() {
            let (e, kind) = match place {
                lcrit_core::Place::Real(e) => (e, PlaceKind::Real),
                lcrit_core::Place::Complex(iota, _) => (iota, PlaceKind::Complex),
            };
            let (lo, hi) = m_pm_place(mu.component(e), lam.component(e), w, wp, kind).unwrap();
            prop_assert!(lo <= 0 && 0 <= hi, "({}, {}) at embedding {}", lo, hi, e);
        }
    }

    #[test]
    fn complex_criticality_is_recoverable_from_the_shift_multiset(
        mu_first in vec(-6i64..=6, 2),
        lam_first in vec(-6i64..=6, 2),
        w in -4i64..=4,
        wp in -4i64..=4,
        m in -12i64..=12,
    ) {
        // Assemble dominant iota-components of ranks 3 and 2.
        let mut mu_v = mu_first;
        mu_v.push(mu_v.iter().min().copied().unwrap() - 1);
        mu_v.sort_unstable_by(|a, b| b.cmp(a));
        let mut lam_v = lam_first;
        lam_v.sort_unstable_by(|a, b| b.cmp(a));
        let shifts = rs_gamma_shifts_cplx(&mu_v, &lam_v, w, wp);
        prop_assert_eq!(
            is_critical_cplx(m, &mu_v, &lam_v, w, wp),
            is_critical_from_shifts(m, &shifts, w + wp)
        );
    }

    #[test]
    fn real_tensor_commutes_and_adds_twists(
        ls in vec((1i64..=6, -3i64..=3), 1..=3),
        ks in vec((1i64..=6, -3i64..=3), 1..=3),
    ) {
        let build = |spec: &[(i64, i64)]| {
            ArchParameter::new(
                PlaceKind::Real,
                spec.iter()
                    .map(|&(l, t)| ArchSummand::Induced { l, twist: HalfInt::from_twice(t) })
                    .collect(),
            )
            .unwrap()
        };
        let a = build(&ls);
        let b = build(&ks);
        let ab = tensor(&a, &b).unwrap();
        prop_assert_eq!(ab.clone(), tensor(&b, &a).unwrap());
        prop_assert_eq!(ab.dimension(), a.dimension() * b.dimension());
    }

    #[test]
    fn normalize_is_idempotent_on_random_monomials(
        twist_exp in 0i64..=3,
        gauss_exp in -2i64..=2,
        period_exp in -2i64..=2,
        gl1 in proptest::bool::ANY,
    ) {
        let rules = RuleSet::standard()
            .bind("xi", "xi", "Q(xi)")
            .bind("omega", "omega", "Q(omega)");
        let mut expr = PeriodExpr::one();
        expr.insert(
            Atom::Period {
                rep: RepLabel::twisted("pi", 2, CharLabel::atom("xi").pow(twist_exp)),
                sign: SignExpr::symbol("m"),
            },
            period_exp,
        );
        expr.insert(
            Atom::GaussSum {
                character: CharLabel::atom("omega").mul(&CharLabel::atom("xi").pow(2)),
            },
            gauss_exp,
        );
        if gl1 {
            expr.insert(
                Atom::Period {
                    rep: RepLabel::gl1(CharLabel::atom("omega")),
                    sign: SignExpr::plus(),
                },
                1,
            );
        }
        let once = normalize(&expr, &rules).unwrap();
        let twice = normalize(&once, &rules).unwrap();
        prop_assert_eq!(once, twice);
    }
}
