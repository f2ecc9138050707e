//! Machine- and human-readable command reports. Every report serializes to
//! JSON and parses back to an equal value.

use serde::{Deserialize, Serialize};

use lcrit_core::cohomology::DegreeReport;
use lcrit_core::motivic::{Criticality, HodgeDataRepr};
use lcrit_core::signs_periods::PeriodExpr;
use lcrit_core::symmetric::SymCompatReport;
use lcrit_core::weights::{PurityReport, WeightData};
use lcrit_core::{CriticalSet, HalfInt};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointQuery {
    pub m: i64,
    pub is_critical: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalSetReport {
    pub compat: CriticalSet,
    /// Absent when the compatibility hypothesis fails.
    pub closed_form: Option<CriticalSet>,
    pub scan: CriticalSet,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub point: Option<PointQuery>,
    pub verdict: String,
    pub consistent: bool,
}

impl CriticalSetReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("compatibility set : {}\n", self.compat));
        match &self.closed_form {
            Some(set) => out.push_str(&format!("closed form       : {set}\n")),
            None => out.push_str("closed form       : (hypothesis fails)\n"),
        }
        out.push_str(&format!("gamma scan        : {}\n", self.scan));
        if let Some(p) = &self.point {
            out.push_str(&format!(
                "s = 1/2 + ({})    : {}\n",
                p.m,
                if p.is_critical {
                    "critical"
                } else {
                    "not critical"
                }
            ));
        }
        out.push_str(&format!("verdict           : {}\n", self.verdict));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompatReport {
    pub set: CriticalSet,
    pub size: usize,
    pub mu_purity: PurityReport,
    pub lambda_purity: PurityReport,
}

impl CompatReport {
    pub fn human(&self) -> String {
        format!(
            "compatibility set : {} ({} twist{})\nmu pure           : {} (w = {:?})\nlambda pure       : {} (w = {:?})\n",
            self.set,
            self.size,
            if self.size == 1 { "" } else { "s" },
            self.mu_purity.is_pure,
            self.mu_purity.purity_weight,
            self.lambda_purity.is_pure,
            self.lambda_purity.purity_weight,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymReport {
    pub r: u32,
    pub sym_weight: WeightData,
    pub det_weight: WeightData,
    pub sym_purity_weight: i64,
    pub compat: SymCompatReport,
    pub sym3_closed: CriticalSet,
    pub sym3_scan: CriticalSet,
    pub consistent: bool,
}

impl SymReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "Sym^{} weight      : {:?} (purity weight {})\n",
            self.r, self.sym_weight.components, self.sym_purity_weight
        ));
        out.push_str(&format!(
            "det weight        : {:?}\n",
            self.det_weight.components
        ));
        out.push_str(&format!(
            "compat feasible   : {} (per embedding {:?}{})\n",
            self.compat.feasible,
            self.compat.per_embedding,
            match self.compat.totally_real_twist {
                Some(j) => format!(", twist j = {j}"),
                None => String::new(),
            }
        ));
        out.push_str(&format!("Sym^3 critical set: {}\n", self.sym3_closed));
        out.push_str(&format!("Sym^3 gamma scan  : {}\n", self.sym3_scan));
        out.push_str(&format!(
            "routes agree      : {}\n",
            if self.consistent { "yes" } else { "NO" }
        ));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreesReport {
    pub degrees: DegreeReport,
    pub dim_symmetric_space: u64,
    /// `None` for n = 1, where the identity is not defined.
    pub identity_holds: Option<bool>,
    pub permissible_signatures: u64,
}

impl DegreesReport {
    pub fn human(&self) -> String {
        let d = &self.degrees;
        let mut out = String::new();
        out.push_str(&format!(
            "n = {}: b^R = {}, t^R = {}, b^C = {}, t^C = {}\n",
            d.n, d.b_real, d.t_real, d.b_cplx, d.t_cplx
        ));
        out.push_str(&format!(
            "b_F = {}, t_F = {}, t~_F = {}\n",
            d.b_f, d.t_f, d.t_tilde_f
        ));
        out.push_str(&format!(
            "dim symmetric space = {}\n",
            self.dim_symmetric_space
        ));
        if let Some(ok) = self.identity_holds {
            out.push_str(&format!(
                "degree identity b_n + b_(n-1) = dim: {}\n",
                if ok { "holds" } else { "FAILS" }
            ));
        }
        out.push_str(&format!(
            "permissible signatures: {}\n",
            self.permissible_signatures
        ));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignsReport {
    pub n: u64,
    pub eps: Vec<i8>,
    pub eta: Vec<i8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hecke_signature: Option<Vec<i8>>,
    pub law_holds: bool,
}

fn sign_row(signs: &[i8]) -> String {
    signs
        .iter()
        .map(|&s| if s > 0 { "+" } else { "-" })
        .collect::<Vec<_>>()
        .join(" ")
}

impl SignsReport {
    pub fn human(&self) -> String {
        let mut out = format!(
            "eps = ({})\neta = ({})\nlaw eps = (-1)^n eta: {}\n",
            sign_row(&self.eps),
            sign_row(&self.eta),
            if self.law_holds { "holds" } else { "FAILS" }
        );
        if let Some(h) = &self.hecke_signature {
            out.push_str(&format!("hecke signature: ({})\n", sign_row(h)));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MotivicReport {
    pub hodge: HodgeDataRepr,
    pub infinity_type: Vec<i64>,
    pub criticality: Criticality,
    pub gamma_shifts: Vec<HalfInt>,
}

impl MotivicReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "hodge pairs       : {:?} (weight {})\n",
            self.hodge.pairs, self.hodge.w
        ));
        out.push_str(&format!("infinity type     : {:?}\n", self.infinity_type));
        match &self.criticality {
            Criticality::Critical(t) => out.push_str(&format!(
                "criticality       : critical, T = {:?}, A = {:?}, conj A = {:?}\n",
                t.t, t.a, t.a_bar
            )),
            Criticality::NotCritical => out.push_str("criticality       : not critical\n"),
        }
        let shifts: Vec<String> = self.gamma_shifts.iter().map(|s| s.to_string()).collect();
        out.push_str(&format!("gamma shifts      : [{}]\n", shifts.join(", ")));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodDeriveReport {
    pub gl3_gl2_relation: String,
    pub gl2_gl1_relation: String,
    pub gl3_gl2_normal: PeriodExpr,
    pub gl2_gl1_normal: PeriodExpr,
    pub result: PeriodExpr,
    pub trace: Vec<String>,
    pub gauss_xi_exponent: i64,
    pub gauss_omega_pi_exponent: i64,
}

impl PeriodDeriveReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("GL3 x GL2 : {}\n", self.gl3_gl2_relation));
        out.push_str(&format!("GL2 x GL1 : {}\n", self.gl2_gl1_relation));
        out.push_str("trace:\n");
        for line in &self.trace {
            out.push_str(&format!("  {line}\n"));
        }
        out.push_str(&format!("result    : {}\n", self.result));
        out.push_str(&format!(
            "G(xi)^{}, G(omega_pi)^{}\n",
            self.gauss_xi_exponent, self.gauss_omega_pi_exponent
        ));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub passes: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: u64,
    pub max_entry: i64,
    pub checks: Vec<CheckSummary>,
    pub all_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub warning: Option<String>,
}

impl VerifyReport {
    pub fn human(&self) -> String {
        let mut out = format!(
            "seed {}  trials {}  max entry {}\n",
            self.seed, self.trials, self.max_entry
        );
        for check in &self.checks {
            out.push_str(&format!(
                "{:<28} {:>6} pass {:>4} fail{}\n",
                check.name,
                check.passes,
                check.failures,
                match &check.first_failure {
                    Some(f) => format!("   first: {f}"),
                    None => String::new(),
                }
            ));
        }
        if let Some(w) = &self.warning {
            out.push_str(&format!("warning: {w}\n"));
        }
        out.push_str(if self.all_pass {
            "all pass\n"
        } else {
            "FAILURES\n"
        });
        out
    }
}
