use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::fixtures::{self, fixture, Combo};
use crate::beltrami::{
    boost_action, boost_matrix, classify_interval, ds_ads_transform, embed, in_domain, is_pseudo_orthogonal,
    minkowski_dot, project, sigma, Interval, LorentzMatrix, MetricKind, Signature,
};
use crate::catalog::{
    basis24, bracket_combination, cartan, check_closure, eta, format_combination, generator, is_abelian, lorentz,
    translations, translations_minus, translations_plus, translations_prime, AlgebraName, Basis, Closure,
    GeneratorId, StructureTable,
};
use crate::error::Error;
use crate::exact::{int, rat, sqrt_exact, Dual, LambdaRat, RatMatrix, Rational};
use crate::fields::{Monomial, Point, VectorField, XPoly};
use crate::lft::{act_scalar, collinear, exp_nilpotent, induced_field, linearize, ProjectiveMatrix, COMMUTATOR_SIGN};
use crate::metric::{killing_check, metric_eval, pullback, BeltramiMap};
use crate::sampling::Sampler;

pub const P_DEF: &str = "P_μ = ½(P+_μ + P−_μ) = ∂_μ";
pub const PPRIME_DEF: &str = "P′_μ = ½(P+_μ − P−_μ) = −λ x_μ x^κ ∂_κ";
pub const SECOND_ISO: &str = "{P′_μ, L_μν} has the structure constants of iso(1,3)";
pub const TRIPLE_ISO: &str = "{½(P+_μ + P−_μ), L_μν} closes as iso(1,3)";
pub const CONE: &str = "P′_μ(η_μν x^μ x^ν) ∈ (η_μν x^μ x^ν)";
pub const CONE_ORIGIN: &str = "η_μν x^μ x^ν ⋛ 0 at the origin for σ±";
pub const GL4: &str = "{L_μν, R_μν, M_μ} closes (gl(4))";
pub const CARTAN: &str = "{M_μ} abelian";
pub const EXCHANGE: &str = "ad M_ν, ad R_ρσ: P± ↦ span{P∓}, P ↦ span{P}";
pub const IM4: &str = "[X, Y] ∈ span{P±_μ, L_μν, R_μν, M_μ}";
pub const INDEPENDENT: &str = "P±_μ, L_μν, R_μν, M_μ linearly independent";
pub const KILLING_MINK: &str = "L_X η = 0 for X ∈ {P_μ, L_μν}";
pub const KILLING_DS: &str = "L_X g₊ = 0 for X ∈ {P+_μ, L_μν}";
pub const KILLING_ADS: &str = "L_X g₋ = 0 for X ∈ {P−_μ, L_μν}";
pub const NOT_KILLING: &str = "L_X g ≠ 0 outside the isometry algebra";
pub const TO_ORIGIN: &str = "S±: a ↦ 0";
pub const METRIC_INVARIANT: &str = "S±* g± = g±, g± = η/σ± ± λ(ηx)(ηx)ᵀ/σ±²";
pub const DOMAIN: &str = "S± preserves σ±(x) > 0";
pub const LINES: &str = "x′ = (A x + b)/(c·x + d) maps lines to lines";
pub const LIGHT_CONE: &str = "F± = σ±(a,x) − (σ±(a)σ±(x))^½ ⋛ 0 invariant under S±";
pub const CHART: &str = "x^μ = l ξ^μ/ξ⁴";
pub const HYPERBOLOID: &str = "η_μν ξ^μ ξ^ν ∓ (ξ⁴)² = ∓l²";
pub const BOOST: &str = "BᵀηB = η, project(B·embed(x)) = S±(x)";
pub const ROUNDTRIP: &str = "induced_field(linearize(X)) = X";
pub const HOMOMORPHISM: &str = "induced_field([A, B]) = −[induced_field(A), induced_field(B)]";
pub const EXP: &str = "exp(t·linearize(P_μ)) translates by t along x^μ";
pub const TANGENT: &str = "d/dt (I + tA)·x |₀ = induced_field(A)(x)";

/// Every anchor some suite is expected to cite.
pub const ANCHORS: &[&str] = &[
    fixtures::ISO_PP,
    fixtures::ISO_LP,
    fixtures::LL,
    fixtures::SO_PP,
    fixtures::SO_LP,
    fixtures::CROSS,
    fixtures::PM_M,
    fixtures::PM_R,
    fixtures::LM,
    fixtures::LR_DIAG,
    fixtures::LR,
    fixtures::P_M,
    fixtures::P_R,
    fixtures::MM,
    fixtures::SECOND_POINCARE,
    P_DEF,
    PPRIME_DEF,
    SECOND_ISO,
    TRIPLE_ISO,
    CONE,
    CONE_ORIGIN,
    GL4,
    CARTAN,
    EXCHANGE,
    IM4,
    INDEPENDENT,
    KILLING_MINK,
    KILLING_DS,
    KILLING_ADS,
    NOT_KILLING,
    TO_ORIGIN,
    METRIC_INVARIANT,
    DOMAIN,
    LINES,
    LIGHT_CONE,
    CHART,
    HYPERBOLOID,
    BOOST,
    ROUNDTRIP,
    HOMOMORPHISM,
    EXP,
    TANGENT,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteName {
    Iso13,
    So14,
    So23,
    Im4Cross,
    TripleCombination,
    SecondPoincare,
    Gl4Closure,
    Cartan,
    FullClosure,
    KillingMink,
    KillingDs,
    KillingAds,
    BeltramiInvariance,
    LinePreservation,
    EmbeddingConsistency,
    LinearizationRoundtrip,
    All,
}

impl SuiteName {
    /// Every suite except `all`, in the order `all` runs them.
    pub const EACH: [SuiteName; 16] = [
        SuiteName::Iso13,
        SuiteName::So14,
        SuiteName::So23,
        SuiteName::Im4Cross,
        SuiteName::TripleCombination,
        SuiteName::SecondPoincare,
        SuiteName::Gl4Closure,
        SuiteName::Cartan,
        SuiteName::FullClosure,
        SuiteName::KillingMink,
        SuiteName::KillingDs,
        SuiteName::KillingAds,
        SuiteName::BeltramiInvariance,
        SuiteName::LinePreservation,
        SuiteName::EmbeddingConsistency,
        SuiteName::LinearizationRoundtrip,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Iso13 => "iso13",
            SuiteName::So14 => "so14",
            SuiteName::So23 => "so23",
            SuiteName::Im4Cross => "im4_cross",
            SuiteName::TripleCombination => "triple_combination",
            SuiteName::SecondPoincare => "second_poincare",
            SuiteName::Gl4Closure => "gl4_closure",
            SuiteName::Cartan => "cartan",
            SuiteName::FullClosure => "full_closure",
            SuiteName::KillingMink => "killing_mink",
            SuiteName::KillingDs => "killing_ds",
            SuiteName::KillingAds => "killing_ads",
            SuiteName::BeltramiInvariance => "beltrami_invariance",
            SuiteName::LinePreservation => "line_preservation",
            SuiteName::EmbeddingConsistency => "embedding_consistency",
            SuiteName::LinearizationRoundtrip => "linearization_roundtrip",
            SuiteName::All => "all",
        }
    }

    /// Formal suites work over symbolic λ and ignore the numeric value.
    pub fn mode(self) -> &'static str {
        match self {
            SuiteName::Iso13
            | SuiteName::So14
            | SuiteName::So23
            | SuiteName::Im4Cross
            | SuiteName::TripleCombination
            | SuiteName::Gl4Closure
            | SuiteName::Cartan
            | SuiteName::FullClosure => "formal",
            SuiteName::SecondPoincare | SuiteName::All => "mixed",
            _ => "numeric",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        SuiteName::EACH
            .into_iter()
            .chain([SuiteName::All])
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

impl Serialize for SuiteName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, anchor: &str, outcome: Result<(), String>) -> Self {
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        Self { name: name.into(), anchor: anchor.into(), status, witness }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub mode: &'static str,
    pub lambda: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text table; omits the elapsed time so output is byte-stable.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "suite {} ({} mode, λ = {}, seed {}, samples {})\n",
            self.suite, self.mode, self.lambda, self.seed, self.samples
        );
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("{status}  {}  [{}]\n", c.name, c.anchor));
            if let Some(w) = &c.witness {
                out.push_str(&format!("      {w}\n"));
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!("{} checks, {} passed, {} failed\n", self.checks.len(), self.checks.len() - failed, failed));
        out
    }
}

struct Params {
    seed: u64,
    samples: usize,
    lam: Rational,
}

/// Run a named suite. Every check runs; failures are collected, never raised.
pub fn run_suite(name: SuiteName, seed: u64, samples: usize, lam: &Rational) -> SuiteReport {
    let start = Instant::now();
    let p = Params { seed, samples, lam: lam.clone() };
    let checks = match name {
        SuiteName::All => SuiteName::EACH
            .par_iter()
            .map(|&n| {
                run_checks(n, &p)
                    .into_iter()
                    .map(|mut c| {
                        c.name = format!("{n}: {}", c.name);
                        c
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .concat(),
        n => run_checks(n, &p),
    };
    let lambda = if name.mode() == "formal" { "formal".to_string() } else { lam.to_string() };
    SuiteReport { suite: name, mode: name.mode(), lambda, seed, samples, checks, elapsed_ms: start.elapsed().as_millis() }
}

fn run_checks(name: SuiteName, p: &Params) -> Vec<Check> {
    match name {
        SuiteName::Iso13 => table_suite(AlgebraName::Iso13),
        SuiteName::So14 => table_suite(AlgebraName::So14),
        SuiteName::So23 => table_suite(AlgebraName::So23),
        SuiteName::Im4Cross => im4_cross(),
        SuiteName::TripleCombination => triple_combination(),
        SuiteName::SecondPoincare => second_poincare(p),
        SuiteName::Gl4Closure => gl4_closure(),
        SuiteName::Cartan => cartan_suite(),
        SuiteName::FullClosure => full_closure(),
        SuiteName::KillingMink => killing_suite(MetricKind::Mink, p),
        SuiteName::KillingDs => killing_suite(MetricKind::DS, p),
        SuiteName::KillingAds => killing_suite(MetricKind::AdS, p),
        SuiteName::BeltramiInvariance => beltrami_invariance(p),
        SuiteName::LinePreservation => line_preservation(p),
        SuiteName::EmbeddingConsistency => embedding_consistency(p),
        SuiteName::LinearizationRoundtrip => linearization_roundtrip(p),
        SuiteName::All => unreachable!("expanded by run_suite"),
    }
}

fn pair_name(a: GeneratorId, b: GeneratorId) -> String {
    format!("[{a}, {b}]")
}

fn compare(computed: &[(GeneratorId, LambdaRat)], expected: &Combo) -> Result<(), String> {
    if expected.matches(&computed.to_vec()) {
        return Ok(());
    }
    let mut exp = format_combination(&expected.to_combination());
    if !expected.is_well_defined() {
        exp.push_str(&format!(" with undefined terms {:?}", expected.undefined_terms()));
    }
    Err(format!("computed {}, relation gives {exp}", format_combination(computed)))
}

/// One check per pair that has a relation on record.
fn fixture_checks(table: &StructureTable) -> Vec<Check> {
    let ids = table.basis();
    let mut out = Vec::new();
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            if let Some((expected, anchor)) = fixture(a, b) {
                let computed = table.bracket(a, b).unwrap_or_default();
                out.push(Check::new(pair_name(a, b), anchor, compare(&computed, &expected)));
            }
        }
    }
    out
}

fn table_suite(name: AlgebraName) -> Vec<Check> {
    match StructureTable::compute(&name.generators()) {
        Ok(t) => fixture_checks(&t),
        Err(e) => vec![Check::new(format!("{} closes", name.as_str()), fixtures::LL, Err(e.to_string()))],
    }
}

fn bracket_check(a: GeneratorId, b: GeneratorId) -> Check {
    let Some((expected, anchor)) = fixture(a, b) else {
        return Check::new(pair_name(a, b), IM4, Err("no relation on record".into()));
    };
    let outcome = bracket_combination(a, b).map_err(|e| e.to_string()).and_then(|c| compare(&c, &expected));
    Check::new(pair_name(a, b), anchor, outcome)
}

fn im4_cross() -> Vec<Check> {
    let pairs: Vec<(GeneratorId, GeneratorId)> = translations_minus()
        .into_iter()
        .flat_map(|m| translations_plus().into_iter().map(move |p| (m, p)))
        .collect();
    pairs.par_iter().map(|&(a, b)| bracket_check(a, b)).collect()
}

fn field(id: GeneratorId) -> VectorField {
    generator(id).expect("catalog ids are valid")
}

fn field_eq(name: String, anchor: &str, lhs: &VectorField, rhs: &VectorField) -> Check {
    let outcome = if lhs == rhs { Ok(()) } else { Err(format!("{lhs} ≠ {rhs}")) };
    Check::new(name, anchor, outcome)
}

fn closure_check(name: &str, anchor: &str, gens: &[GeneratorId]) -> Check {
    let outcome = match check_closure(gens) {
        Ok(Closure::Closed) => Ok(()),
        Ok(Closure::NotClosed { a, b, witness }) => Err(format!("[{a}, {b}] leaves the span: {witness}")),
        Err(e) => Err(e.to_string()),
    };
    Check::new(name, anchor, outcome)
}

fn same_constants(lhs: &StructureTable, rhs: &StructureTable) -> Result<(), String> {
    for ((a, b, x), (_, _, y)) in lhs.entries().zip(rhs.entries()) {
        if x != y {
            return Err(format!("[{a}, {b}]: {} vs {}", format_combination(&x), format_combination(&y)));
        }
    }
    Ok(())
}

fn second_iso_check() -> Check {
    let outcome = StructureTable::compute(&AlgebraName::Poincare2.generators())
        .and_then(|second| Ok((second, StructureTable::compute(&AlgebraName::Iso13.generators())?)))
        .map_err(|e| e.to_string())
        .and_then(|(second, iso)| {
            let relabeled = second.relabel(|g| match g {
                GeneratorId::PPrime(m) => GeneratorId::P(m),
                g => g,
            });
            if relabeled.basis() != iso.basis() {
                return Err("bases differ after relabeling".into());
            }
            same_constants(&relabeled, &iso)
        });
    Check::new("{P′, L} ≅ {P, L}", SECOND_ISO, outcome)
}

fn triple_combination() -> Vec<Check> {
    let half = rat(1, 2);
    let mut out = Vec::new();
    for m in 0..4u8 {
        let (plus, minus) = (field(GeneratorId::PPlus(m)), field(GeneratorId::PMinus(m)));
        let sum = (&plus + &minus).scale_rational(&half);
        out.push(field_eq(format!("½(P+{m} + P-{m}) = ∂{m}"), P_DEF, &sum, &VectorField::partial(usize::from(m))));
        out.push(field_eq(format!("P{m} = ∂{m}"), P_DEF, &field(GeneratorId::P(m)), &VectorField::partial(usize::from(m))));
        let diff = (&plus - &minus).scale_rational(&half);
        let coeff = LambdaRat::lambda().scale(&int(-eta(usize::from(m))));
        let expected = VectorField::euler().times(&XPoly::term(Monomial::var(usize::from(m)), coeff));
        out.push(field_eq(format!("½(P+{m} - P-{m}) = -λ x{m} x^κ∂κ"), PPRIME_DEF, &diff, &expected));
        out.push(field_eq(format!("P'{m} = ½(P+{m} - P-{m})"), PPRIME_DEF, &field(GeneratorId::PPrime(m)), &diff));
    }
    let mut iso = translations();
    iso.extend(lorentz());
    out.push(closure_check("{P, L} closes", TRIPLE_ISO, &iso));
    if let Ok(t) = StructureTable::compute(&iso) {
        out.extend(fixture_checks(&t).into_iter().map(|mut c| {
            c.name = format!("iso13 from P±: {}", c.name);
            c
        }));
    }
    out.push(second_iso_check());
    out
}

/// η_μν x^μ x^ν as a polynomial.
pub fn quadratic_form() -> XPoly {
    (0..4).fold(XPoly::zero(), |acc, i| {
        &acc + &XPoly::term(Monomial::var(i).mul(&Monomial::var(i)), int(eta(i)))
    })
}

/// `X(Q) = q·Q` for polynomial `q`, where `Q = η(x, x)`; returns `q`.
pub fn cone_multiplier(x: &VectorField) -> Option<XPoly> {
    let q = quadratic_form();
    let (quot, rem) = x.apply(&q).div_rem(&q)?;
    rem.is_zero().then_some(quot)
}

fn second_poincare(p: &Params) -> Vec<Check> {
    let mut out = table_suite(AlgebraName::Poincare2);
    out.push(second_iso_check());
    for g in translations_prime().into_iter().chain(lorentz()) {
        let outcome = cone_multiplier(&field(g)).map(|_| ()).ok_or_else(|| {
            format!("{g}(η x x) = {} is not a multiple of η x x", field(g).apply(&quadratic_form()))
        });
        out.push(Check::new(format!("{g} preserves the cone"), CONE, outcome));
    }
    for g in translations() {
        let outcome = match cone_multiplier(&field(g)) {
            None => Ok(()),
            Some(q) => Err(format!("{g} unexpectedly preserves the cone with multiplier {q}")),
        };
        out.push(Check::new(format!("{g} moves the cone"), CONE, outcome));
    }
    for kind in MetricKind::ALL {
        out.push(cone_at_origin(kind, p));
    }
    out
}

/// Classification at `a = 0` against the sign of η(x, x).
pub fn cone_at_origin_outcome(kind: MetricKind, samples: usize, seed: u64, lam: &Rational) -> Result<(), String> {
    let mut s = Sampler::new(seed);
    let o = Point::origin();
    for i in 0..samples {
        // every fourth sample sits exactly on the cone
        let x = if i % 4 == 3 {
            let v = s.point(9, 10);
            let r = v.0[1..].iter().fold(Rational::zero(), |acc, c| acc + c * c);
            let t = sqrt_exact(&r).unwrap_or_else(Rational::zero);
            Point([t, v.0[1].clone(), v.0[2].clone(), v.0[3].clone()])
        } else {
            match kind.signature() {
                Some(sig) => s.domain_point(sig, lam),
                None => s.point(9, 10),
            }
        };
        let want = match minkowski_dot(&x.0, &x.0) {
            q if q.is_positive() => Interval::Timelike,
            q if q.is_zero() => Interval::Null,
            _ => Interval::Spacelike,
        };
        let x = match kind.signature() {
            Some(sig) if !in_domain(sig, &x, lam) => continue,
            _ => x,
        };
        match classify_interval(kind, &o, &x, lam) {
            Ok(got) if got == want => {}
            Ok(got) => return Err(format!("x = ({x}): classified {got}, η x x says {want}")),
            Err(e) => return Err(format!("x = ({x}): {e}")),
        }
    }
    Ok(())
}

fn cone_at_origin(kind: MetricKind, p: &Params) -> Check {
    Check::new(
        format!("{kind}: cone at origin, {} points", p.samples),
        CONE_ORIGIN,
        cone_at_origin_outcome(kind, p.samples, p.seed, &p.lam),
    )
}

fn gl4_closure() -> Vec<Check> {
    let gens = AlgebraName::Gl4.generators();
    let mut out = vec![closure_check("{L, R, M} closes", GL4, &gens)];
    match StructureTable::compute(&gens) {
        Ok(t) => out.extend(fixture_checks(&t)),
        Err(e) => out.push(Check::new("gl4 table", GL4, Err(e.to_string()))),
    }
    out
}

fn cartan_suite() -> Vec<Check> {
    let outcome = match is_abelian(&cartan()) {
        Ok(true) => Ok(()),
        Ok(false) => Err("some [M_μ, M_ν] ≠ 0".into()),
        Err(e) => Err(e.to_string()),
    };
    let mut out = vec![Check::new("{M} abelian", CARTAN, outcome)];
    let actors: Vec<GeneratorId> = cartan().into_iter().chain(crate::catalog::r_generators()).collect();
    let targets: Vec<GeneratorId> =
        translations_plus().into_iter().chain(translations_minus()).chain(translations()).collect();
    let pairs: Vec<(GeneratorId, GeneratorId)> =
        targets.iter().flat_map(|&t| actors.iter().map(move |&g| (t, g))).collect();
    out.extend(pairs.par_iter().map(|&(t, g)| bracket_check(t, g)).collect::<Vec<_>>());
    for &g in &actors {
        let outcome = crate::catalog::adjoint_action(g, &targets).map_err(|e| e.to_string()).and_then(|images| {
            for (t, c) in images {
                let ok = c.iter().all(|(h, _)| match t {
                    GeneratorId::PPlus(_) => matches!(h, GeneratorId::PMinus(_)),
                    GeneratorId::PMinus(_) => matches!(h, GeneratorId::PPlus(_)),
                    _ => matches!(h, GeneratorId::P(_)),
                });
                if !ok {
                    return Err(format!("[{t}, {g}] = {}", format_combination(&c)));
                }
            }
            Ok(())
        });
        out.push(Check::new(format!("ad {g} exchanges P± and keeps P"), EXCHANGE, outcome));
    }
    out
}

fn full_closure() -> Vec<Check> {
    let basis = Basis::standard();
    let ids = basis24();
    let mut out = vec![Check::new(
        "24 generators independent",
        INDEPENDENT,
        if basis.is_independent() { Ok(()) } else { Err(format!("rank {}", basis.decomposer().rank())) },
    )];
    let pairs: Vec<(usize, usize)> = (0..24).flat_map(|i| (i + 1..24).map(move |j| (i, j))).collect();
    out.extend(
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let f = basis.fields()[i].bracket(&basis.fields()[j]);
                let outcome = basis.decompose(&f).map(|_| ()).map_err(|w| w.to_string());
                Check::new(pair_name(ids[i], ids[j]), IM4, outcome)
            })
            .collect::<Vec<_>>(),
    );
    out
}

fn killing_suite(kind: MetricKind, p: &Params) -> Vec<Check> {
    let (isometries, anchor, controls) = match kind {
        MetricKind::Mink => (translations(), KILLING_MINK, vec![GeneratorId::M(0), GeneratorId::PPlus(0)]),
        MetricKind::DS => (translations_plus(), KILLING_DS, vec![GeneratorId::M(0), GeneratorId::PMinus(0)]),
        MetricKind::AdS => (translations_minus(), KILLING_ADS, vec![GeneratorId::M(0), GeneratorId::PPlus(0)]),
    };
    let gens: Vec<GeneratorId> = isometries.into_iter().chain(lorentz()).collect();
    let mut out = Vec::new();
    match killing_check(&gens, kind, p.samples, p.seed, &p.lam) {
        Ok(reports) => out.extend(reports.into_iter().map(|r| {
            let outcome = match r.first_failure {
                None => Ok(()),
                Some(f) => Err(format!("nonzero at ({}): {}", f.point, f.lie_derivative.to_string().replace('\n', "; "))),
            };
            Check::new(format!("{} Killing on {kind}, {} points", r.generator, r.samples), anchor, outcome)
        })),
        Err(e) => out.push(Check::new(format!("{kind} Killing"), anchor, Err(e.to_string()))),
    }
    match killing_check(&controls, kind, p.samples, p.seed, &p.lam) {
        Ok(reports) => out.extend(reports.into_iter().map(|r| {
            let outcome = if r.zero { Err(format!("zero at all {} points", r.samples)) } else { Ok(()) };
            Check::new(format!("{} not Killing on {kind}", r.generator), NOT_KILLING, outcome)
        })),
        Err(e) => out.push(Check::new(format!("{kind} controls"), NOT_KILLING, Err(e.to_string()))),
    }
    out
}

pub const BOOSTS: usize = 20;

/// Seeded perfect-square boosts `(a, L)` for a signature.
pub fn sample_boosts(s: Signature, count: usize, seed: u64, lam: &Rational) -> Vec<(Point, LorentzMatrix)> {
    let mut r = Sampler::new(seed ^ (s.sign() as u64).wrapping_mul(0x9e37_79b9));
    (0..count)
        .map(|i| {
            let a = r.perfect_square_point(s, lam);
            let l = if i == 0 { LorentzMatrix::identity() } else { r.lorentz() };
            (a, l)
        })
        .collect()
}

/// Points on a seeded line through a domain point, kept inside the domain.
fn line_points(r: &mut Sampler, s: Option<Signature>, lam: &Rational) -> Vec<Point> {
    let base = match s {
        Some(sig) => r.domain_point(sig, lam),
        None => r.point(9, 10),
    };
    let dir = r.point(5, 10);
    [rat(-1, 2), rat(-1, 3), int(0), rat(1, 4), rat(1, 2), int(1)]
        .iter()
        .map(|t| Point(std::array::from_fn(|i| &base.0[i] + t * &dir.0[i])))
        .filter(|x| s.map_or(true, |sig| in_domain(sig, x, lam)))
        .collect()
}

fn per_point<F>(points: &[Point], mut f: F) -> Result<(), String>
where
    F: FnMut(&Point) -> Result<bool, String>,
{
    for x in points {
        if !f(x)? {
            return Err(format!("fails at x = ({x})"));
        }
    }
    Ok(())
}

fn boost_checks(s: Signature, idx: usize, a: &Point, l: &LorentzMatrix, p: &Params) -> Vec<Check> {
    let lam = &p.lam;
    let tag = format!("{s} boost {idx}");
    let mut r = Sampler::new(p.seed.wrapping_add(idx as u64 + 1));
    let points: Vec<Point> = (0..p.samples)
        .map(|_| r.domain_point(s, lam))
        .filter(|x| !sigma(s, a, x, lam).is_zero())
        .collect();
    let map = BeltramiMap { signature: s, a: a.clone(), lorentz: l.clone(), lam: lam.clone() };
    let tr = |x: &Point| ds_ads_transform(s, a, l, x, lam).map_err(|e| format!("x = ({x}): {e}"));
    let mut out = Vec::new();

    let origin = tr(a).and_then(|img| if img == Point::origin() { Ok(()) } else { Err(format!("a ↦ ({img})")) });
    out.push(Check::new(format!("{tag}: a = ({a}) ↦ 0"), TO_ORIGIN, origin));

    let kind = MetricKind::from(s);
    let invariant = per_point(&points, |x| {
        let pulled = pullback(&map, kind, x, lam).map_err(|e| e.to_string())?;
        Ok(pulled == metric_eval(kind, x, lam).map_err(|e| e.to_string())?)
    });
    out.push(Check::new(format!("{tag}: pullback metric, {} points", points.len()), METRIC_INVARIANT, invariant));

    let domain = per_point(&points, |x| Ok(in_domain(s, &tr(x)?, lam)));
    out.push(Check::new(format!("{tag}: domain preserved"), DOMAIN, domain));

    let lines = (0..3).try_for_each(|_| {
        let pts: Vec<Point> = line_points(&mut r, Some(s), lam)
            .into_iter()
            .filter(|x| !sigma(s, a, x, lam).is_zero())
            .collect();
        let imgs = pts.iter().map(tr).collect::<Result<Vec<_>, _>>()?;
        if collinear(&imgs) {
            Ok(())
        } else {
            Err(format!("images of line through ({}) not collinear", pts[0]))
        }
    });
    out.push(Check::new(format!("{tag}: lines to lines"), LINES, lines));

    // pairs whose images stay on the chart's sheet, i.e. σ(a,·) > 0 for both
    let same_sheet: Vec<&Point> = points.iter().filter(|x| sigma(s, a, x, lam).is_positive()).collect();
    let cones = same_sheet.windows(2).try_for_each(|w| {
        let (x, y) = (w[0], w[1]);
        let before = classify_interval(kind, x, y, lam).map_err(|e| e.to_string())?;
        let sym = classify_interval(kind, y, x, lam).map_err(|e| e.to_string())?;
        let after = classify_interval(kind, &tr(x)?, &tr(y)?, lam).map_err(|e| e.to_string())?;
        if before == after && before == sym {
            Ok(())
        } else {
            Err(format!("({x}) to ({y}): {before}, reversed {sym}, transformed {after}"))
        }
    });
    out.push(Check::new(format!("{tag}: light cone invariant"), LIGHT_CONE, cones));
    out
}

fn beltrami_invariance(p: &Params) -> Vec<Check> {
    [Signature::DS, Signature::AdS]
        .iter()
        .flat_map(|&s| {
            let boosts = sample_boosts(s, BOOSTS, p.seed, &p.lam);
            boosts
                .par_iter()
                .enumerate()
                .map(|(i, (a, l))| boost_checks(s, i, a, l, p))
                .collect::<Vec<_>>()
                .concat()
        })
        .collect()
}

fn line_preservation(p: &Params) -> Vec<Check> {
    let mut r = Sampler::new(p.seed);
    let l = int(1);
    let mut out = Vec::new();
    for i in 0..BOOSTS {
        let t = match ProjectiveMatrix::new(r.unimodular()) {
            Ok(t) => t,
            Err(e) => {
                out.push(Check::new(format!("LFT {i}"), LINES, Err(e.to_string())));
                continue;
            }
        };
        let outcome = (0..3).try_for_each(|_| {
            let imgs: Vec<Point> = line_points(&mut r, None, &l).iter().filter_map(|x| t.act(x, &l).ok()).collect();
            if collinear(&imgs) {
                Ok(())
            } else {
                Err(format!("matrix {} maps a line off a line", t.to_json()))
            }
        });
        out.push(Check::new(format!("LFT {i}: lines to lines"), LINES, outcome));
    }
    for g in translations().into_iter().chain(translations_prime()) {
        let outcome = linearize(g)
            .and_then(|m| exp_nilpotent(&m, &rat(2, 3)))
            .map_err(|e| e.to_string())
            .and_then(|t| {
                (0..3).try_for_each(|_| {
                    let imgs: Vec<Point> =
                        line_points(&mut r, None, &l).iter().filter_map(|x| t.act(x, &l).ok()).collect();
                    if collinear(&imgs) {
                        Ok(())
                    } else {
                        Err("line not preserved".into())
                    }
                })
            });
        out.push(Check::new(format!("exp(2/3·{g}): lines to lines"), LINES, outcome));
    }
    for s in [Signature::DS, Signature::AdS] {
        for (i, (a, lm)) in sample_boosts(s, BOOSTS, p.seed, &p.lam).iter().enumerate() {
            let outcome = (0..3).try_for_each(|_| {
                let imgs: Vec<Point> = line_points(&mut r, Some(s), &p.lam)
                    .iter()
                    .filter_map(|x| ds_ads_transform(s, a, lm, x, &p.lam).ok())
                    .collect();
                if collinear(&imgs) {
                    Ok(())
                } else {
                    Err(format!("boost a = ({a}) maps a line off a line"))
                }
            });
            out.push(Check::new(format!("{s} boost {i}: lines to lines"), LINES, outcome));
        }
    }
    out
}

fn embedding_checks(s: Signature, idx: usize, a: &Point, lm: &LorentzMatrix, l: &Rational, p: &Params) -> Vec<Check> {
    let lam = (l * l).recip();
    let tag = format!("{s} boost {idx}");
    let mut out = Vec::new();
    let b = match boost_matrix(s, a, lm, l) {
        Ok(b) => b,
        Err(e) => return vec![Check::new(format!("{tag}: boost matrix"), BOOST, Err(e.to_string()))],
    };
    let orth = if is_pseudo_orthogonal(s, &b) { Ok(()) } else { Err("BᵀηB ≠ η".into()) };
    out.push(Check::new(format!("{tag}: pseudo-orthogonal"), BOOST, orth));

    let mut r = Sampler::new(p.seed.wrapping_add(1000 + idx as u64));
    let mut agree = Ok(());
    let mut compared = 0;
    while compared < p.samples {
        let x = r.domain_point(s, &lam);
        let direct = ds_ads_transform(s, a, lm, &x, &lam);
        let via = boost_action(&b, &x, l);
        match (direct, via) {
            (Ok(d), Ok(v)) if d == v => {}
            (Err(Error::DenominatorZero), _) => continue,
            // the image left the chart through ξ⁴ = 0; the direct formula has it on the antipodal sheet
            (Ok(_), Err(Error::ChartBoundary(_))) => {}
            (d, v) => {
                agree = Err(format!("x = ({x}): direct {d:?}, embedding {v:?}"));
                break;
            }
        }
        compared += 1;
    }
    out.push(Check::new(format!("{tag}: agrees with transform, {compared} points"), BOOST, agree));
    out
}

fn embedding_consistency(p: &Params) -> Vec<Check> {
    let Some(l) = sqrt_exact(&p.lam.recip()).filter(|_| p.lam.is_positive()) else {
        return vec![Check::new("radius", CHART, Err(format!("λ = {} is not 1/l² for rational l", p.lam)))];
    };
    let mut out = Vec::new();
    for s in [Signature::DS, Signature::AdS] {
        let boosts = sample_boosts(s, BOOSTS, p.seed, &p.lam);
        out.extend(
            boosts
                .par_iter()
                .enumerate()
                .map(|(i, (a, lm))| embedding_checks(s, i, a, lm, &l, p))
                .collect::<Vec<_>>()
                .concat(),
        );

        let mut r = Sampler::new(p.seed);
        let on_surface = (0..p.samples).try_for_each(|_| {
            let x = r.perfect_square_point(s, &p.lam);
            let xi = embed(s, &x, &l).map_err(|e| e.to_string())?;
            if xi.hyperboloid_form(s) != -(int(s.sign()) * &l * &l) || !xi.xi[4].is_positive() {
                return Err(format!("embed({x}) = {xi} is off the hyperboloid"));
            }
            let back = project(&xi, &l).map_err(|e| e.to_string())?;
            if back != x {
                return Err(format!("project(embed({x})) = {back}"));
            }
            Ok(())
        });
        out.push(Check::new(format!("{s}: embed/project round trip"), CHART, on_surface.clone()));
        out.push(Check::new(format!("{s}: embedded points on hyperboloid"), HYPERBOLOID, on_surface));

        let composed = boosts.windows(2).try_for_each(|w| {
            let ((a1, l1), (a2, l2)) = (&w[0], &w[1]);
            let b = &boost_matrix(s, a2, l2, &l).map_err(|e| e.to_string())? * &boost_matrix(s, a1, l1, &l).map_err(|e| e.to_string())?;
            if !is_pseudo_orthogonal(s, &b) {
                return Err("product not pseudo-orthogonal".into());
            }
            let mut r = Sampler::new(p.seed ^ 0x5eed);
            for _ in 0..p.samples.min(10) {
                let x = r.domain_point(s, &p.lam);
                let Ok(y) = ds_ads_transform(s, a1, l1, &x, &p.lam) else { continue };
                let Ok(z) = ds_ads_transform(s, a2, l2, &y, &p.lam) else { continue };
                match boost_action(&b, &x, &l) {
                    Ok(v) if v == z => {}
                    Err(Error::ChartBoundary(_)) => {}
                    other => return Err(format!("x = ({x}): two steps ({z}), composed {other:?}")),
                }
            }
            Ok(())
        });
        out.push(Check::new(format!("{s}: composed boosts act as successive transforms"), BOOST, composed));
    }
    out
}

fn linearization_roundtrip(p: &Params) -> Vec<Check> {
    let one = Rational::one();
    let mut out = Vec::new();
    for g in basis24() {
        let outcome = linearize(g).map_err(|e| e.to_string()).and_then(|m| {
            let back = induced_field(&m, &one);
            let want = field(g).specialize(&one).map_err(|e| e.to_string())?;
            if back == want {
                Ok(())
            } else {
                Err(format!("{back} ≠ {want}"))
            }
        });
        out.push(Check::new(format!("{g} round trip"), ROUNDTRIP, outcome));
    }

    let ids = basis24();
    let mats: Vec<RatMatrix> = ids.iter().map(|&g| linearize(g).unwrap_or_else(|_| RatMatrix::zeros(5, 5))).collect();
    let pairs: Vec<(usize, usize)> = (0..24).flat_map(|i| (i + 1..24).map(move |j| (i, j))).collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let lhs = induced_field(&mats[i].commutator(&mats[j]), &one);
            let fi = field(ids[i]).specialize(&one).ok()?;
            let fj = field(ids[j]).specialize(&one).ok()?;
            let rhs = fi.bracket(&fj).scale_rational(&int(COMMUTATOR_SIGN));
            (lhs != rhs).then(|| pair_name(ids[i], ids[j]))
        })
        .collect();
    let outcome = if bad.is_empty() { Ok(()) } else { Err(format!("sign differs for {}", bad.join(", "))) };
    out.push(Check::new(format!("sign {COMMUTATOR_SIGN} on all {} pairs", pairs.len()), HOMOMORPHISM, outcome));

    let mut r = Sampler::new(p.seed);
    let points: Vec<Point> = (0..p.samples).map(|_| r.point(9, 10)).collect();
    for m in 0..4u8 {
        let t = r.rational(5, 7);
        let outcome = linearize(GeneratorId::P(m))
            .and_then(|a| exp_nilpotent(&a, &t))
            .map_err(|e| e.to_string())
            .and_then(|e| {
                per_point(&points, |x| {
                    let mut want = x.clone();
                    want.0[usize::from(m)] += &t;
                    Ok(e.act(x, &one).map_err(|e| e.to_string())? == want)
                })
            });
        out.push(Check::new(format!("exp({t}·P{m}) translates"), EXP, outcome));
    }
    for g in basis24() {
        let outcome = linearize(g).map_err(|e| e.to_string()).and_then(|a| {
            let rows: Vec<Vec<Dual>> = (0..5)
                .map(|i| (0..5).map(|j| Dual::new(if i == j { int(1) } else { int(0) }, a[(i, j)].clone())).collect())
                .collect();
            per_point(&points, |x| {
                let xd = x.0.clone().map(Dual::constant);
                let img = act_scalar(&rows, &xd, &one).map_err(|e| e.to_string())?;
                let v = field(g).eval(x, &one).map_err(|e| e.to_string())?;
                Ok((0..4).all(|i| img[i].derivative == v[i]))
            })
        });
        out.push(Check::new(format!("tangent of {g}"), TANGENT, outcome));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in SuiteName::EACH.into_iter().chain([SuiteName::All]) {
            assert_eq!(n.as_str().parse::<SuiteName>().unwrap(), n);
        }
        assert!("nope".parse::<SuiteName>().is_err());
    }

    #[test]
    fn iso13_passes() {
        let r = run_suite(SuiteName::Iso13, 42, 100, &int(1));
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.checks.len(), 45);
    }

    #[test]
    fn cone_multipliers() {
        let q = cone_multiplier(&field(GeneratorId::PPrime(1))).unwrap();
        assert_eq!(q, XPoly::term(Monomial::var(1), LambdaRat::lambda().scale(&int(2))));
        assert!(cone_multiplier(&field(GeneratorId::P(0))).is_none());
    }
}
