//! Sign recipes for the pairing, signatures of algebraic Hecke characters,
//! and a symbolic calculus of period monomials.
//!
//! Periods, archimedean periods, and Gauss sums are opaque atoms; a monomial
//! is a formal product of atoms with integer exponents, canonicalized by a
//! total order on atoms. Everything is tracked up to a rationality field,
//! carried on a unit atom. The rewrite rules are
//!
//!   R1  Period(Pi (x) xi, delta)  ->  GaussSum(xi)^{n(n-1)/2} Period(Pi, delta eps_xi)
//!   R2  GaussSum(omega xi)        ->  GaussSum(omega) GaussSum(xi), modulo the field
//!   R4  GL(1) periods collapse to the unit
//!   R3  unit atoms absorb into one
//!
//! applied with priority R1 > R2 > R4 > R3. The normal form has no twisted
//! periods of rank >= 2, only atomic Gauss sums, no rank-1 periods, and at
//! most one unit atom.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numberfield::FieldSignature;

// ---------------------------------------------------------------------------
// Signs and signatures
// ---------------------------------------------------------------------------

/// A tuple of signs indexed by the real places of F.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature(Vec<i8>);

impl Signature {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::BadInput("signature entries must be +-1".into()));
        }
        Ok(Signature(signs))
    }

    pub fn constant(r1: usize, sign: i8) -> Self {
        Signature(vec![sign; r1])
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Signature) -> Signature {
        Signature(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }

    /// Multiply a constant sign into every component.
    pub fn scale(&self, sign: i8) -> Signature {
        Signature(self.0.iter().map(|a| a * sign).collect())
    }

    pub fn neg(&self) -> Signature {
        self.scale(-1)
    }
}

/// `(-1)^m`.
pub fn epsilon_m(m: i64) -> i8 {
    if m.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The sign of the one-dimensional summand of the odd-rank cohomological
/// representation at a real place, read off the central character:
/// `eps_v(-1) = omega_v(-1) (-1)^{(n-1)/2}`.
///
/// This is not the same recipe as the odd-n branch of [`sign_recipe`], which
/// uses `omega_v(-1) (-1)^{w/2}`; the two coincide exactly when
/// `(n-1)/2 + w/2` is even. Both are kept.
pub fn local_component_sign(n: usize, central_parity: i8) -> Result<i8> {
    if n % 2 == 0 {
        return Err(Error::BadInput(
            "the local component sign is defined for odd n".into(),
        ));
    }
    if central_parity != 1 && central_parity != -1 {
        return Err(Error::BadInput("central parity must be +-1".into()));
    }
    Ok(central_parity * epsilon_m(((n - 1) / 2) as i64))
}

/// Data of an algebraic Hecke character: infinity type per embedding, the
/// values `omega^0_v(-1)` of the finite-order part at the real places, and
/// whether the character itself has finite order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeCharData {
    pub infinity_type: Vec<i64>,
    pub real_parities: Vec<i8>,
    pub finite_order: bool,
}

impl HeckeCharData {
    /// Validate against a signature: the purity constraint on the infinity
    /// type, parity values, and vanishing infinity type for finite order.
    pub fn validate(&self, sig: &FieldSignature) -> Result<()> {
        let d = sig.degree();
        if self.infinity_type.len() != d {
            return Err(Error::BadInput(format!(
                "infinity type must list all {d} embeddings"
            )));
        }
        if self.real_parities.len() != sig.r1()
            || self.real_parities.iter().any(|&p| p != 1 && p != -1)
        {
            return Err(Error::BadInput("need one parity +-1 per real place".into()));
        }
        if self.finite_order && self.infinity_type.iter().any(|&a| a != 0) {
            return Err(Error::BadInput(
                "a finite-order character has infinity type zero".into(),
            ));
        }
        if sig.r1() > 0 {
            if self.infinity_type.windows(2).any(|p| p[0] != p[1]) {
                return Err(Error::BadInput(
                    "with a real place the infinity type must be constant".into(),
                ));
            }
        } else {
            let mut constant: Option<i64> = None;
            for p in sig.symmetry_perms() {
                for e in 0..d {
                    let bar = sig.conjugate(e).unwrap();
                    let value = self.infinity_type[p[e]] + self.infinity_type[p[bar]];
                    match constant {
                        None => constant = Some(value),
                        Some(c) if c != value => {
                            return Err(Error::BadInput(
                                "infinity type violates the purity constraint".into(),
                            ))
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(())
    }

    /// The purity weight `w(omega)`.
    pub fn purity_weight(&self, sig: &FieldSignature) -> i64 {
        if sig.r1() > 0 {
            self.infinity_type[0]
        } else {
            self.infinity_type[0] + self.infinity_type[sig.conjugate(0).unwrap()]
        }
    }
}

/// Signature of an algebraic Hecke character:
/// `eps_{omega,v} = (-1)^{w(omega)} omega^0_v(-1)` at every real place.
///
/// Depends only on the purity weight and the finite parities, both of which
/// are invariant under conjugating the character.
pub fn hecke_signature(chi: &HeckeCharData, sig: &FieldSignature) -> Result<Signature> {
    if sig.r1() == 0 {
        return Err(Error::NoRealPlaces);
    }
    chi.validate(sig)?;
    let w_sign = epsilon_m(chi.purity_weight(sig));
    Signature::new(chi.real_parities.iter().map(|p| w_sign * p).collect())
}

/// The signs attached to a pair at the real places: `eps_v = (-1)^n eta_v`
/// always, with the determined side given by the central character:
/// odd n fixes `eps_v = omega_{Pi_v}(-1) (-1)^{w(mu)/2}`, even n fixes
/// `eta_v = omega_{Sigma_v}(-1) (-1)^{w(lambda)/2}`.
///
/// `central_parities` lists `omega_v(-1)` per real place for the determined
/// side; the relevant purity weight must be even.
pub fn sign_recipe(
    n: usize,
    central_parities: &[i8],
    w_mu: i64,
    w_lambda: i64,
) -> Result<(Signature, Signature)> {
    if central_parities.iter().any(|&p| p != 1 && p != -1) {
        return Err(Error::BadInput("central parities must be +-1".into()));
    }
    let parities = Signature::new(central_parities.to_vec())?;
    if n % 2 == 1 {
        if w_mu.rem_euclid(2) != 0 {
            return Err(Error::OddPurityWeight(w_mu));
        }
        let eps = parities.scale(epsilon_m(w_mu / 2));
        let eta = eps.neg();
        Ok((eps, eta))
    } else {
        if w_lambda.rem_euclid(2) != 0 {
            return Err(Error::OddPurityWeight(w_lambda));
        }
        let eta = parities.scale(epsilon_m(w_lambda / 2));
        Ok((eta.clone(), eta))
    }
}

// ---------------------------------------------------------------------------
// Formal sign expressions and character labels
// ---------------------------------------------------------------------------

/// A formal product of sign symbols (each valued in +-1, so exponents live in
/// Z/2) together with a constant sign.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignExpr {
    negative: bool,
    symbols: BTreeSet<String>,
}

impl SignExpr {
    /// The constant sign `+`.
    pub fn plus() -> Self {
        SignExpr {
            negative: false,
            symbols: BTreeSet::new(),
        }
    }

    /// The constant sign `-`.
    pub fn minus() -> Self {
        SignExpr {
            negative: true,
            symbols: BTreeSet::new(),
        }
    }

    /// The formal sign attached to a symbol, e.g. `eps(xi)`.
    pub fn symbol(name: &str) -> Self {
        SignExpr {
            negative: false,
            symbols: BTreeSet::from([name.to_string()]),
        }
    }

    pub fn mul(&self, other: &SignExpr) -> SignExpr {
        SignExpr {
            negative: self.negative ^ other.negative,
            symbols: self
                .symbols
                .symmetric_difference(&other.symbols)
                .cloned()
                .collect(),
        }
    }

    pub fn neg(&self) -> SignExpr {
        SignExpr {
            negative: !self.negative,
            symbols: self.symbols.clone(),
        }
    }
}

impl fmt::Display for SignExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        } else {
            write!(f, "+")?;
        }
        if self.symbols.is_empty() {
            write!(f, "1")
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| format!("eps({s})")).collect();
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A formal product of character symbols with integer exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct CharLabel(BTreeMap<String, i64>);

impl CharLabel {
    pub fn one() -> Self {
        CharLabel(BTreeMap::new())
    }

    pub fn atom(name: &str) -> Self {
        CharLabel(BTreeMap::from([(name.to_string(), 1)]))
    }

    pub fn mul(&self, other: &CharLabel) -> CharLabel {
        let mut out = self.0.clone();
        for (k, v) in &other.0 {
            let e = out.entry(k.clone()).or_insert(0);
            *e += v;
            if *e == 0 {
                out.remove(k);
            }
        }
        CharLabel(out)
    }

    pub fn pow(&self, k: i64) -> CharLabel {
        if k == 0 {
            return CharLabel::one();
        }
        CharLabel(self.0.iter().map(|(s, e)| (s.clone(), e * k)).collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    /// A single symbol with exponent one.
    pub fn is_atomic(&self) -> bool {
        self.0.len() == 1 && self.0.values().all(|&e| e == 1)
    }

    pub fn exponent_of(&self, symbol: &str) -> i64 {
        self.0.get(symbol).copied().unwrap_or(0)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(s, &e)| (s.as_str(), e))
    }

    /// The formal sign of the character: the product of the symbols' signs,
    /// exponents read mod 2.
    pub fn sign_expr(&self) -> SignExpr {
        let mut out = SignExpr::plus();
        for (s, e) in self.symbols() {
            if e.rem_euclid(2) == 1 {
                out = out.mul(&SignExpr::symbol(s));
            }
        }
        out
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(s, e)| {
                if *e == 1 {
                    s.clone()
                } else {
                    format!("{s}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Label of an automorphic object carried by a period atom: a base name, its
/// GL-rank, and a character twist. Rank-1 labels have an empty base and keep
/// the character in the twist.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RepLabel {
    pub base: String,
    pub rank: u32,
    pub twist: CharLabel,
}

impl RepLabel {
    pub fn new(base: &str, rank: u32) -> Self {
        RepLabel {
            base: base.to_string(),
            rank,
            twist: CharLabel::one(),
        }
    }

    pub fn twisted(base: &str, rank: u32, twist: CharLabel) -> Self {
        RepLabel {
            base: base.to_string(),
            rank,
            twist,
        }
    }

    /// A GL(1) object: the character itself.
    pub fn gl1(character: CharLabel) -> Self {
        RepLabel {
            base: String::new(),
            rank: 1,
            twist: character,
        }
    }

    /// Central character of the object: that of the base times `twist^rank`.
    pub fn central_char(&self, base_central: &CharLabel) -> CharLabel {
        base_central.mul(&self.twist.pow(self.rank as i64))
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.is_empty() {
            write!(f, "{}", self.twist)
        } else if self.twist.is_trivial() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}(x){}", self.base, self.twist)
        }
    }
}

// ---------------------------------------------------------------------------
// Period monomials
// ---------------------------------------------------------------------------

/// One atom of a period monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "atom", rename_all = "snake_case")]
pub enum Atom {
    /// Whittaker-vs-cohomology period `p^{sign}(rep)`.
    Period { rep: RepLabel, sign: SignExpr },
    /// Archimedean period attached to a weight pair and a sign pair.
    ArchPeriod {
        upper: String,
        lower: String,
        sign_upper: SignExpr,
        sign_lower: SignExpr,
    },
    /// Gauss sum of (the finite part of) a character.
    GaussSum { character: CharLabel },
    /// A critical L-value, used on left-hand sides of relations.
    LValue { point: String, object: String },
    /// The unit of the `~` relation, recording the rationality fields the
    /// relation is taken modulo.
    RationalityUnit { fields: BTreeSet<String> },
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Period { rep, sign } => write!(f, "p^{{{sign}}}({rep})"),
            Atom::ArchPeriod {
                upper,
                lower,
                sign_upper,
                sign_lower,
            } => write!(f, "p_inf^{{{sign_upper},{sign_lower}}}({upper}; {lower})"),
            Atom::GaussSum { character } => write!(f, "G({character})"),
            Atom::LValue { point, object } => write!(f, "L({point}, {object})"),
            Atom::RationalityUnit { fields } => {
                let list: Vec<&str> = fields.iter().map(String::as_str).collect();
                write!(f, "[mod {}]", list.join(","))
            }
        }
    }
}

/// A formal monomial: atoms with nonzero integer exponents, canonically
/// ordered.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PeriodExpr {
    factors: BTreeMap<Atom, i64>,
}

#[derive(Serialize, Deserialize)]
struct AtomFactor {
    atom: Atom,
    exponent: i64,
}

impl Serialize for PeriodExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let list: Vec<AtomFactor> = self
            .factors
            .iter()
            .map(|(atom, &exponent)| AtomFactor {
                atom: atom.clone(),
                exponent,
            })
            .collect();
        list.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PeriodExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let list = Vec::<AtomFactor>::deserialize(d)?;
        let mut out = PeriodExpr::one();
        for f in list {
            out.insert(f.atom, f.exponent);
        }
        Ok(out)
    }
}

impl PeriodExpr {
    pub fn one() -> Self {
        PeriodExpr::default()
    }

    pub fn atom(atom: Atom) -> Self {
        let mut out = PeriodExpr::one();
        out.insert(atom, 1);
        out
    }

    pub fn insert(&mut self, atom: Atom, exponent: i64) {
        let e = self.factors.entry(atom.clone()).or_insert(0);
        *e += exponent;
        if *e == 0 {
            self.factors.remove(&atom);
        }
    }

    pub fn mul(&self, other: &PeriodExpr) -> PeriodExpr {
        let mut out = self.clone();
        for (atom, &e) in &other.factors {
            out.insert(atom.clone(), e);
        }
        out
    }

    pub fn inv(&self) -> PeriodExpr {
        PeriodExpr {
            factors: self.factors.iter().map(|(a, e)| (a.clone(), -e)).collect(),
        }
    }

    pub fn exponent_of(&self, atom: &Atom) -> i64 {
        self.factors.get(atom).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, i64)> {
        self.factors.iter().map(|(a, &e)| (a, e))
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exponent of the atomic Gauss sum of `symbol`.
    pub fn gauss_exponent(&self, symbol: &str) -> i64 {
        self.exponent_of(&Atom::GaussSum {
            character: CharLabel::atom(symbol),
        })
    }
}

impl fmt::Display for PeriodExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(a, e)| {
                if *e == 1 {
                    a.to_string()
                } else {
                    format!("{a}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" . "))
    }
}

// ---------------------------------------------------------------------------
// Rewriting
// ---------------------------------------------------------------------------

/// How a character symbol participates in rewriting: the sign symbol of its
/// signature and the rationality-field label it contributes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharBinding {
    pub sign_symbol: String,
    pub field: String,
}

/// The rule set for [`normalize`]: rule switches plus character bindings.
#[derive(Debug, Clone)]
pub struct RuleSet {
    pub untwist_period: bool,
    pub gauss_multiplicativity: bool,
    pub unit_absorption: bool,
    pub gl1_collapse: bool,
    bindings: BTreeMap<String, CharBinding>,
}

impl RuleSet {
    /// All rules enabled, no characters bound yet.
    pub fn standard() -> Self {
        RuleSet {
            untwist_period: true,
            gauss_multiplicativity: true,
            unit_absorption: true,
            gl1_collapse: true,
            bindings: BTreeMap::new(),
        }
    }

    pub fn bind(mut self, symbol: &str, sign_symbol: &str, field: &str) -> Self {
        self.bindings.insert(
            symbol.to_string(),
            CharBinding {
                sign_symbol: sign_symbol.to_string(),
                field: field.to_string(),
            },
        );
        self
    }

    fn binding(&self, symbol: &str) -> Result<&CharBinding> {
        self.bindings
            .get(symbol)
            .ok_or_else(|| Error::UnboundCharacter(symbol.to_string()))
    }

    fn fields_of(&self, label: &CharLabel) -> Result<BTreeSet<String>> {
        label
            .symbols()
            .map(|(s, _)| self.binding(s).map(|b| b.field.clone()))
            .collect()
    }

    fn sign_of(&self, label: &CharLabel) -> Result<SignExpr> {
        let mut out = SignExpr::plus();
        for (s, e) in label.symbols() {
            self.binding(s)?;
            if e.rem_euclid(2) == 1 {
                out = out.mul(&SignExpr::symbol(&self.binding(s)?.sign_symbol));
            }
        }
        Ok(out)
    }
}

/// Identifiers of the rewrite rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RuleId {
    /// R1, the period relation under twisting.
    UntwistPeriod,
    /// R2, Gauss-sum multiplicativity modulo the field.
    GaussSumSplit,
    /// R4, GL(1) periods are rational units.
    Gl1Collapse,
    /// R3, unit canonicalization.
    UnitAbsorb,
}

/// One applied rewrite step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: RuleId,
    pub removed: Vec<(Atom, i64)>,
    pub produced: Vec<(Atom, i64)>,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RuleId::UntwistPeriod => "R1 untwist",
            RuleId::GaussSumSplit => "R2 gauss split",
            RuleId::Gl1Collapse => "R4 gl1 collapse",
            RuleId::UnitAbsorb => "R3 unit absorb",
        };
        write!(f, "{name}")
    }
}

fn factor_list(factors: &[(Atom, i64)]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|(a, e)| {
            if *e == 1 {
                a.to_string()
            } else {
                format!("{a}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" . ")
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} -> {}",
            self.rule,
            factor_list(&self.removed),
            factor_list(&self.produced)
        )
    }
}

fn apply_step(expr: &mut PeriodExpr, step: &TraceStep) {
    for (atom, e) in &step.removed {
        expr.insert(atom.clone(), -e);
    }
    for (atom, e) in &step.produced {
        expr.insert(atom.clone(), *e);
    }
}

fn find_step(expr: &PeriodExpr, rules: &RuleSet) -> Result<Option<TraceStep>> {
    // R1: untwist the first twisted period of rank >= 2.
    if rules.untwist_period {
        for (atom, e) in expr.iter() {
            if let Atom::Period { rep, sign } = atom {
                if rep.rank >= 2 && !rep.twist.is_trivial() {
                    let gauss_exp = (rep.rank as i64) * (rep.rank as i64 - 1) / 2;
                    let new_sign = sign.mul(&rules.sign_of(&rep.twist)?);
                    return Ok(Some(TraceStep {
                        rule: RuleId::UntwistPeriod,
                        removed: vec![(atom.clone(), e)],
                        produced: vec![
                            (
                                Atom::GaussSum {
                                    character: rep.twist.clone(),
                                },
                                gauss_exp * e,
                            ),
                            (
                                Atom::Period {
                                    rep: RepLabel::new(&rep.base, rep.rank),
                                    sign: new_sign,
                                },
                                e,
                            ),
                        ],
                    }));
                }
            }
        }
    }
    // R2: split the first non-atomic Gauss sum.
    if rules.gauss_multiplicativity {
        for (atom, e) in expr.iter() {
            if let Atom::GaussSum { character } = atom {
                if !character.is_atomic() {
                    let mut produced = Vec::new();
                    if character.is_trivial() {
                        // G(1) = 1 exactly.
                        return Ok(Some(TraceStep {
                            rule: RuleId::GaussSumSplit,
                            removed: vec![(atom.clone(), e)],
                            produced,
                        }));
                    }
                    for (symbol, k) in character.symbols() {
                        produced.push((
                            Atom::GaussSum {
                                character: CharLabel::atom(symbol),
                            },
                            k * e,
                        ));
                    }
                    produced.push((
                        Atom::RationalityUnit {
                            fields: rules.fields_of(character)?,
                        },
                        1,
                    ));
                    return Ok(Some(TraceStep {
                        rule: RuleId::GaussSumSplit,
                        removed: vec![(atom.clone(), e)],
                        produced,
                    }));
                }
            }
        }
    }
    // R4: collapse the first rank-1 period.
    if rules.gl1_collapse {
        for (atom, e) in expr.iter() {
            if let Atom::Period { rep, .. } = atom {
                if rep.rank == 1 {
                    let mut fields = rules.fields_of(&rep.twist)?;
                    if !rep.base.is_empty() {
                        fields.insert(format!("Q({})", rep.base));
                    }
                    let produced = if fields.is_empty() {
                        Vec::new()
                    } else {
                        vec![(Atom::RationalityUnit { fields }, 1)]
                    };
                    return Ok(Some(TraceStep {
                        rule: RuleId::Gl1Collapse,
                        removed: vec![(atom.clone(), e)],
                        produced,
                    }));
                }
            }
        }
    }
    // R3: merge unit atoms and canonicalize the exponent to one.
    if rules.unit_absorption {
        let units: Vec<(Atom, i64)> = expr
            .iter()
            .filter(|(a, _)| matches!(a, Atom::RationalityUnit { .. }))
            .map(|(a, e)| (a.clone(), e))
            .collect();
        let needs_merge = units.len() > 1 || units.iter().any(|(_, e)| *e != 1);
        if needs_merge {
            let mut fields = BTreeSet::new();
            for (a, _) in &units {
                if let Atom::RationalityUnit { fields: fs } = a {
                    fields.extend(fs.iter().cloned());
                }
            }
            return Ok(Some(TraceStep {
                rule: RuleId::UnitAbsorb,
                removed: units,
                produced: vec![(Atom::RationalityUnit { fields }, 1)],
            }));
        }
    }
    Ok(None)
}

/// Rewrite to normal form, returning the trace of applied steps.
pub fn normalize_traced(
    expr: &PeriodExpr,
    rules: &RuleSet,
) -> Result<(PeriodExpr, Vec<TraceStep>)> {
    let mut current = expr.clone();
    let mut trace = Vec::new();
    // Each rule strictly shrinks a well-founded measure (twisted periods,
    // then composite Gauss sums, then rank-1 periods, then surplus units);
    // the bound is a tripwire, not a policy.
    for _ in 0..100_000 {
        match find_step(&current, rules)? {
            None => return Ok((current, trace)),
            Some(step) => {
                apply_step(&mut current, &step);
                trace.push(step);
            }
        }
    }
    Err(Error::BadInput("rewriting did not terminate".into()))
}

/// Rewrite to normal form.
pub fn normalize(expr: &PeriodExpr, rules: &RuleSet) -> Result<PeriodExpr> {
    normalize_traced(expr, rules).map(|(e, _)| e)
}

/// Quotient of two monomials with unit atoms re-merged (the unit is
/// idempotent: dividing by a relation keeps its rationality fields).
pub fn quotient(numerator: &PeriodExpr, denominator: &PeriodExpr) -> PeriodExpr {
    let mut fields = BTreeSet::new();
    let mut out = PeriodExpr::one();
    for source in [numerator, denominator] {
        for (atom, _) in source.iter() {
            if let Atom::RationalityUnit { fields: fs } = atom {
                fields.extend(fs.iter().cloned());
            }
        }
    }
    for (atom, e) in numerator.iter() {
        if !matches!(atom, Atom::RationalityUnit { .. }) {
            out.insert(atom.clone(), e);
        }
    }
    for (atom, e) in denominator.iter() {
        if !matches!(atom, Atom::RationalityUnit { .. }) {
            out.insert(atom.clone(), -e);
        }
    }
    if !fields.is_empty() {
        out.insert(Atom::RationalityUnit { fields }, 1);
    }
    out
}

// ---------------------------------------------------------------------------
// The symmetric-cube derivation
// ---------------------------------------------------------------------------

/// The two relations whose quotient yields the symmetric-cube monomial, with
/// raw and normalized right-hand sides, rewrite traces, and the final result.
#[derive(Debug, Clone)]
pub struct Sym3Derivation {
    pub gl3_gl2_lhs: Atom,
    pub gl2_gl1_lhs: Atom,
    pub gl3_gl2_raw: PeriodExpr,
    pub gl2_gl1_raw: PeriodExpr,
    pub gl3_gl2_normal: PeriodExpr,
    pub gl2_gl1_normal: PeriodExpr,
    pub gl3_gl2_trace: Vec<TraceStep>,
    pub gl2_gl1_trace: Vec<TraceStep>,
    pub result: PeriodExpr,
}

/// The rule set used by the cube derivation: `xi` and `omega_pi` bound to
/// their sign symbols and rationality fields.
pub fn sym3_rules() -> RuleSet {
    RuleSet::standard()
        .bind("xi", "xi", "Q(xi)")
        .bind("omega_pi", "omega_pi", "Q(pi)")
}

/// Mechanize the symmetric-cube special-value monomial over the abstract
/// labels `pi`, `xi`, `mu`.
///
/// The GL(3) x GL(2) relation for `L(1/2+m, Sym^2(pi) x pi (x) xi)` has signs
/// `(eps, eta) = (+, -)` since the central character of the symmetric square
/// contributes `omega^3(-1) (-1)^w = 1` at every real place; the twist `xi`
/// rides on the GL(2) factor, whose central character becomes
/// `omega_pi xi^2`. The GL(2) x GL(1) relation for
/// `L(1/2+m, pi (x) omega_pi xi)` has `eps = eta = eps_xi`. Normalizing both
/// and dividing cancels `G(omega_pi)` and leaves `G(xi)^2`.
pub fn derive_sym3_rhs() -> Result<Sym3Derivation> {
    let rules = sym3_rules();
    let xi = CharLabel::atom("xi");
    let omega = CharLabel::atom("omega_pi");
    let eps_m = SignExpr::symbol("m");
    let eps_xi = SignExpr::symbol("xi");
    let base_unit = Atom::RationalityUnit {
        fields: BTreeSet::from(["Q(pi)".to_string(), "Q(xi)".to_string()]),
    };

    // L(1/2+m, Sym^2(pi) x (pi (x) xi)): n = 3, so the Sigma-period carries
    // eps_m eta = -eps_m and the Gauss sum is that of omega_{pi (x) xi}.
    let sigma = RepLabel::twisted("pi", 2, xi.clone());
    let sigma_central = sigma.central_char(&omega);
    let mut gl3_gl2_raw = PeriodExpr::one();
    gl3_gl2_raw.insert(
        Atom::Period {
            rep: RepLabel::new("Sym2(pi)", 3),
            sign: SignExpr::plus(),
        },
        1,
    );
    gl3_gl2_raw.insert(
        Atom::Period {
            rep: sigma,
            sign: eps_m.neg(),
        },
        1,
    );
    gl3_gl2_raw.insert(
        Atom::GaussSum {
            character: sigma_central,
        },
        1,
    );
    gl3_gl2_raw.insert(
        Atom::ArchPeriod {
            upper: "Sym2(mu)".into(),
            lower: "mu+m".into(),
            sign_upper: SignExpr::plus(),
            sign_lower: SignExpr::minus(),
        },
        1,
    );
    gl3_gl2_raw.insert(base_unit.clone(), 1);

    // L(1/2+m, pi (x) omega_pi xi): n = 2, eps = eta = eps_xi.
    let gl1_char = omega.mul(&xi);
    let mut gl2_gl1_raw = PeriodExpr::one();
    gl2_gl1_raw.insert(
        Atom::Period {
            rep: RepLabel::new("pi", 2),
            sign: eps_m.mul(&eps_xi),
        },
        1,
    );
    gl2_gl1_raw.insert(
        Atom::Period {
            rep: RepLabel::gl1(gl1_char.clone()),
            sign: eps_xi.clone(),
        },
        1,
    );
    gl2_gl1_raw.insert(
        Atom::GaussSum {
            character: gl1_char,
        },
        1,
    );
    gl2_gl1_raw.insert(
        Atom::ArchPeriod {
            upper: "mu+m".into(),
            lower: "det(mu)".into(),
            sign_upper: eps_xi.clone(),
            sign_lower: eps_xi,
        },
        1,
    );
    gl2_gl1_raw.insert(base_unit, 1);

    let (gl3_gl2_normal, gl3_gl2_trace) = normalize_traced(&gl3_gl2_raw, &rules)?;
    let (gl2_gl1_normal, gl2_gl1_trace) = normalize_traced(&gl2_gl1_raw, &rules)?;
    let result = normalize(&quotient(&gl3_gl2_normal, &gl2_gl1_normal), &rules)?;

    Ok(Sym3Derivation {
        gl3_gl2_lhs: Atom::LValue {
            point: "1/2+m".into(),
            object: "Sym2(pi) x pi (x) xi".into(),
        },
        gl2_gl1_lhs: Atom::LValue {
            point: "1/2+m".into(),
            object: "pi (x) omega_pi*xi".into(),
        },
        gl3_gl2_raw,
        gl2_gl1_raw,
        gl3_gl2_normal,
        gl2_gl1_normal,
        gl3_gl2_trace,
        gl2_gl1_trace,
        result,
    })
}
