//! Commutation relations transcribed index by index, independent of the
//! vector-field computation they are checked against.

use std::collections::BTreeMap;

use crate::catalog::{eta, Combination, GeneratorId};
use crate::exact::{int, LambdaRat};

use GeneratorId::*;

pub const ISO_PP: &str = "[P_μ, P_ν] = 0";
pub const ISO_LP: &str = "[L_μν, P_κ] = η_νκ P_μ − η_μκ P_ν";
pub const LL: &str = "[L_μν, L_κλ] = η_νκ L_μλ − η_νλ L_μκ + η_μλ L_νκ − η_μκ L_νλ";
pub const SO_PP: &str = "[P±_μ, P±_ν] = ±λ L_μν";
pub const SO_LP: &str = "[L_μν, P±_κ] = η_νκ P±_μ − η_μκ P±_ν";
pub const CROSS: &str = "[P−_μ, P+_ν] = −λ R_μν (μ≠ν), 2λ η_μμ M_μ (μ=ν)";
pub const PM_M: &str = "[P±_μ, M_ν] = −P∓_μ − δ_μν P∓_ν";
pub const PM_R: &str = "[P∓_μ, R_ρσ] = η_μρ P±_σ + η_μσ P±_ρ";
pub const LM: &str = "[L_μν, M_ρ] = δ_μρ R_νρ − δ_νρ R_μρ";
pub const LR_DIAG: &str = "[L_μν, R_μν] = 2 η_μμ η_νν (M_μ − M_ν)";
pub const LR: &str = "[L_μν, R_ρσ] = η_νρ R_μσ + η_νσ R_μρ − η_μρ R_νσ − η_μσ R_νρ";
pub const P_M: &str = "[P_μ, M_ν] = −P_μ − δ_μν P_ν";
pub const P_R: &str = "[P_μ, R_ρσ] = η_μρ P_σ + η_μσ P_ρ";
pub const MM: &str = "[M_μ, M_ν] = 0";
pub const SECOND_POINCARE: &str = "[P′_μ, P′_ν] = 0, [L_μν, P′_κ] = η_νκ P′_μ − η_μκ P′_ν";

/// A linear combination built from relation formulas. `L` and `R` indices
/// are put in canonical order as terms are added; a term naming an `R_μμ`
/// with nonzero coefficient is kept aside as undefined.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combo {
    terms: BTreeMap<GeneratorId, LambdaRat>,
    undefined: Vec<String>,
}

impl Combo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(mut self, c: impl Into<LambdaRat>, id: GeneratorId) -> Self {
        let c = c.into();
        if c.is_zero() {
            return self;
        }
        let (c, id) = match id {
            L(a, b) if a == b => return self,
            L(a, b) if a > b => (-c, L(b, a)),
            R(a, b) if a == b => {
                self.undefined.push(format!("{c}·R{a}{b}"));
                return self;
            }
            R(a, b) if a > b => (c, R(b, a)),
            _ => (c, id),
        };
        let sum = match self.terms.remove(&id) {
            Some(prev) => &prev + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(id, sum);
        }
        self
    }

    pub fn negate(mut self) -> Self {
        for v in self.terms.values_mut() {
            *v = -&*v;
        }
        self
    }

    pub fn is_well_defined(&self) -> bool {
        self.undefined.is_empty()
    }

    pub fn undefined_terms(&self) -> &[String] {
        &self.undefined
    }

    pub fn terms(&self) -> &BTreeMap<GeneratorId, LambdaRat> {
        &self.terms
    }

    /// Exact equality with a computed combination.
    pub fn matches(&self, computed: &Combination) -> bool {
        let c: BTreeMap<GeneratorId, LambdaRat> = computed.iter().cloned().collect();
        self.is_well_defined() && c == self.terms
    }

    pub fn to_combination(&self) -> Combination {
        self.terms.iter().map(|(g, c)| (*g, c.clone())).collect()
    }
}

fn k(n: i64) -> LambdaRat {
    LambdaRat::from(int(n))
}

fn lam(n: i64) -> LambdaRat {
    LambdaRat::lambda().scale(&int(n))
}

fn e(a: u8, b: u8) -> i64 {
    if a == b {
        eta(usize::from(a))
    } else {
        0
    }
}

fn d(a: u8, b: u8) -> i64 {
    i64::from(a == b)
}

/// `[L_μν, L_κλ]`.
pub fn l_l(m: u8, n: u8, kk: u8, l: u8) -> Combo {
    Combo::new()
        .add(k(e(n, kk)), L(m, l))
        .add(k(-e(n, l)), L(m, kk))
        .add(k(e(m, l)), L(n, kk))
        .add(k(-e(m, kk)), L(n, l))
}

/// `[L_μν, T_κ]` for a translation family `T`.
pub fn l_t(m: u8, n: u8, kk: u8, t: fn(u8) -> GeneratorId) -> Combo {
    Combo::new().add(k(e(n, kk)), t(m)).add(k(-e(m, kk)), t(n))
}

/// `[P−_μ, P+_ν]`.
pub fn cross(m: u8, n: u8) -> Combo {
    if m != n {
        Combo::new().add(lam(-1), R(m, n))
    } else {
        Combo::new().add(lam(2 * e(m, m)), M(m))
    }
}

/// `[P^s_μ, M_ν]` with `P^s` one of `P+`, `P−`, `P`; `flip` names the image family.
pub fn t_m(m: u8, n: u8, flip: fn(u8) -> GeneratorId) -> Combo {
    Combo::new().add(k(-1), flip(m)).add(k(-d(m, n)), flip(n))
}

/// `[T_μ, R_ρσ] = η_μρ T′_σ + η_μσ T′_ρ`.
pub fn t_r(m: u8, r: u8, s: u8, image: fn(u8) -> GeneratorId) -> Combo {
    Combo::new().add(k(e(m, r)), image(s)).add(k(e(m, s)), image(r))
}

/// `[L_μν, M_ρ]`.
pub fn l_m(m: u8, n: u8, r: u8) -> Combo {
    Combo::new().add(k(d(m, r)), R(n, r)).add(k(-d(n, r)), R(m, r))
}

/// `[L_μν, R_ρσ]`, with the diagonal case as written.
pub fn l_r(m: u8, n: u8, r: u8, s: u8) -> (Combo, &'static str) {
    if (m == r && n == s) || (m == s && n == r) {
        let c = 2 * e(m, m) * e(n, n);
        (Combo::new().add(k(c), M(m)).add(k(-c), M(n)), LR_DIAG)
    } else {
        let c = Combo::new()
            .add(k(e(n, r)), R(m, s))
            .add(k(e(n, s)), R(m, r))
            .add(k(-e(m, r)), R(n, s))
            .add(k(-e(m, s)), R(n, r));
        (c, LR)
    }
}

fn translation_family(id: GeneratorId) -> Option<(u8, fn(u8) -> GeneratorId, LambdaRat)> {
    match id {
        P(m) => Some((m, P, LambdaRat::zero())),
        PPrime(m) => Some((m, PPrime, LambdaRat::zero())),
        PPlus(m) => Some((m, PPlus, lam(1))),
        PMinus(m) => Some((m, PMinus, lam(-1))),
        _ => None,
    }
}

/// Relation for `[a, b]` when one is on record, with its anchor.
/// Relations are used in both argument orders via antisymmetry.
pub fn fixture(a: GeneratorId, b: GeneratorId) -> Option<(Combo, &'static str)> {
    direct(a, b).or_else(|| direct(b, a).map(|(c, anchor)| (c.negate(), anchor)))
}

fn direct(a: GeneratorId, b: GeneratorId) -> Option<(Combo, &'static str)> {
    match (a, b) {
        (L(m, n), L(kk, l)) => Some((l_l(m, n, kk, l), LL)),
        (L(m, n), t) => {
            if let Some((kk, fam, _)) = translation_family(t) {
                let anchor = if matches!(t, PPlus(_) | PMinus(_)) { SO_LP } else if matches!(t, PPrime(_)) { SECOND_POINCARE } else { ISO_LP };
                return Some((l_t(m, n, kk, fam), anchor));
            }
            match t {
                M(r) => Some((l_m(m, n, r), LM)),
                R(r, s) => Some(l_r(m, n, r, s)),
                _ => None,
            }
        }
        (PMinus(m), PPlus(n)) => Some((cross(m, n), CROSS)),
        (PPlus(m), M(n)) => Some((t_m(m, n, PMinus), PM_M)),
        (PMinus(m), M(n)) => Some((t_m(m, n, PPlus), PM_M)),
        (P(m), M(n)) => Some((t_m(m, n, P), P_M)),
        (PMinus(m), R(r, s)) => Some((t_r(m, r, s, PPlus), PM_R)),
        (PPlus(m), R(r, s)) => Some((t_r(m, r, s, PMinus), PM_R)),
        (P(m), R(r, s)) => Some((t_r(m, r, s, P), P_R)),
        (M(_), M(_)) => Some((Combo::new(), MM)),
        (x, y) => {
            let (m, fx, pp) = translation_family(x)?;
            let (n, fy, _) = translation_family(y)?;
            if fx(0) != fy(0) {
                return None;
            }
            let anchor = match x {
                P(_) => ISO_PP,
                PPrime(_) => SECOND_POINCARE,
                _ => SO_PP,
            };
            Some((Combo::new().add(pp, L(m, n)), anchor))
        }
    }
}
