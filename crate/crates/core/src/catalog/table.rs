use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::Serialize;

use super::generator::{
    basis24, cartan, generator, lorentz, r_generators, translations, translations_minus,
    translations_plus, translations_prime, triple_basis, GeneratorId,
};
use crate::error::{Error, Result};
use crate::exact::LambdaRat;
use crate::fields::{Decomposer, NotInSpan, VectorField};

/// Sparse linear combination of generators, in basis order, zero terms dropped.
pub type Combination = Vec<(GeneratorId, LambdaRat)>;

/// Render `Σ c_k·gen_k`, e.g. `2λ·M0` or `1/2·P+0 + 1/2·P-0`; `0` when empty.
pub fn format_combination(c: &[(GeneratorId, LambdaRat)]) -> String {
    if c.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (g, k)) in c.iter().enumerate() {
        let text = k.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) if !k.is_compound() => (true, rest.to_string()),
            _ => (false, text),
        };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if mag == "1" {
            out.push_str(&g.to_string());
        } else if k.is_compound() {
            out.push_str(&format!("({mag})·{g}"));
        } else {
            out.push_str(&format!("{mag}·{g}"));
        }
    }
    out
}

/// The named subalgebras of im_L(4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraName {
    Iso13,
    So14,
    So23,
    Im4,
    Gl4,
    Poincare2,
    CartanM,
    Lorentz,
}

impl AlgebraName {
    pub const ALL: [AlgebraName; 8] = [
        AlgebraName::Iso13,
        AlgebraName::So14,
        AlgebraName::So23,
        AlgebraName::Im4,
        AlgebraName::Gl4,
        AlgebraName::Poincare2,
        AlgebraName::CartanM,
        AlgebraName::Lorentz,
    ];

    pub fn generators(&self) -> Vec<GeneratorId> {
        match self {
            AlgebraName::Iso13 => [translations(), lorentz()].concat(),
            AlgebraName::So14 => [translations_plus(), lorentz()].concat(),
            AlgebraName::So23 => [translations_minus(), lorentz()].concat(),
            AlgebraName::Im4 => basis24(),
            AlgebraName::Gl4 => [lorentz(), r_generators(), cartan()].concat(),
            AlgebraName::Poincare2 => [translations_prime(), lorentz()].concat(),
            AlgebraName::CartanM => cartan(),
            AlgebraName::Lorentz => lorentz(),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            AlgebraName::Iso13 => "iso13",
            AlgebraName::So14 => "so14",
            AlgebraName::So23 => "so23",
            AlgebraName::Im4 => "im4",
            AlgebraName::Gl4 => "gl4",
            AlgebraName::Poincare2 => "poincare2",
            AlgebraName::CartanM => "cartanM",
            AlgebraName::Lorentz => "lorentz",
        }
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AlgebraName::ALL
            .into_iter()
            .find(|a| a.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown algebra '{s}'")))
    }
}

/// A generator list together with its fields and a ready decomposer.
#[derive(Clone, Debug)]
pub struct Basis {
    ids: Vec<GeneratorId>,
    fields: Vec<VectorField>,
    decomposer: Decomposer,
}

impl Basis {
    pub fn new(ids: Vec<GeneratorId>) -> Result<Self> {
        let fields = ids.iter().map(|&g| generator(g)).collect::<Result<Vec<_>>>()?;
        let decomposer = Decomposer::new(fields.clone());
        Ok(Self { ids, fields, decomposer })
    }

    pub fn standard() -> Self {
        Self::new(basis24()).expect("valid basis")
    }

    pub fn triple() -> Self {
        Self::new(triple_basis()).expect("valid basis")
    }

    pub fn ids(&self) -> &[GeneratorId] {
        &self.ids
    }

    pub fn fields(&self) -> &[VectorField] {
        &self.fields
    }

    pub fn decomposer(&self) -> &Decomposer {
        &self.decomposer
    }

    pub fn is_independent(&self) -> bool {
        self.decomposer.is_independent()
    }

    pub fn decompose(&self, x: &VectorField) -> std::result::Result<Combination, NotInSpan> {
        let c = self.decomposer.decompose(x)?;
        Ok(self.ids.iter().copied().zip(c).filter(|(_, k)| !k.is_zero()).collect())
    }
}

/// Structure constants `[B_i, B_j] = Σ_k c^k_ij B_k` over ℚ(λ), `i < j` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    basis: Vec<GeneratorId>,
    constants: BTreeMap<(usize, usize), Vec<(usize, LambdaRat)>>,
}

impl StructureTable {
    /// Bracket every pair and decompose the result in the same basis.
    pub fn compute(ids: &[GeneratorId]) -> Result<Self> {
        let basis = Basis::new(ids.to_vec())?;
        let n = ids.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let results: Vec<Result<((usize, usize), Vec<(usize, LambdaRat)>)>> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let br = basis.fields[i].bracket(&basis.fields[j]);
                let c = basis.decomposer.decompose(&br).map_err(|w| Error::NotClosed {
                    a: ids[i].to_string(),
                    b: ids[j].to_string(),
                    witness: w.to_string(),
                })?;
                let sparse = c.into_iter().enumerate().filter(|(_, k)| !k.is_zero()).collect();
                Ok(((i, j), sparse))
            })
            .collect();
        let constants = results.into_iter().collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self { basis: ids.to_vec(), constants })
    }

    pub fn basis(&self) -> &[GeneratorId] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.constants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constants.is_empty()
    }

    fn index(&self, g: GeneratorId) -> Option<usize> {
        self.basis.iter().position(|&b| b == g)
    }

    /// `[a, b]` as a combination, using antisymmetry for `a` after `b`.
    pub fn bracket(&self, a: GeneratorId, b: GeneratorId) -> Option<Combination> {
        let (i, j) = (self.index(a)?, self.index(b)?);
        if i == j {
            return Some(Vec::new());
        }
        let (lo, hi, neg) = if i < j { (i, j, false) } else { (j, i, true) };
        let entry = self.constants.get(&(lo, hi))?;
        Some(
            entry
                .iter()
                .map(|(k, c)| (self.basis[*k], if neg { -c } else { c.clone() }))
                .collect(),
        )
    }

    /// All `i < j` entries in order, as `(a, b, result)`.
    pub fn entries(&self) -> impl Iterator<Item = (GeneratorId, GeneratorId, Combination)> + '_ {
        self.constants.iter().map(|((i, j), c)| {
            (self.basis[*i], self.basis[*j], c.iter().map(|(k, v)| (self.basis[*k], v.clone())).collect())
        })
    }

    /// Same constants after renaming generators through `rename`.
    pub fn relabel(&self, rename: impl Fn(GeneratorId) -> GeneratorId) -> Self {
        Self {
            basis: self.basis.iter().map(|&g| rename(g)).collect(),
            constants: self.constants.clone(),
        }
    }
}

impl Serialize for StructureTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a GeneratorId, &'a LambdaRat);
        impl Serialize for Term<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("gen", self.0)?;
                m.serialize_entry("coeff", self.1)?;
                m.end()
            }
        }
        struct Entry(GeneratorId, GeneratorId, Combination);
        impl Serialize for Entry {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("a", &self.0)?;
                m.serialize_entry("b", &self.1)?;
                let terms: Vec<Term<'_>> = self.2.iter().map(|(g, c)| Term(g, c)).collect();
                m.serialize_entry("result", &terms)?;
                m.end()
            }
        }
        struct Entries<'a>(&'a StructureTable);
        impl Serialize for Entries<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (a, b, c) in self.0.entries() {
                    seq.serialize_element(&Entry(a, b, c))?;
                }
                seq.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("basis", &self.basis)?;
        m.serialize_entry("brackets", &Entries(self))?;
        m.end()
    }
}

/// Structure table of a named subalgebra, computed from the generator fields.
pub fn structure_table(name: AlgebraName) -> Result<StructureTable> {
    StructureTable::compute(&name.generators())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Closure {
    Closed,
    NotClosed { a: GeneratorId, b: GeneratorId, witness: NotInSpan },
}

impl Closure {
    pub fn is_closed(&self) -> bool {
        matches!(self, Closure::Closed)
    }
}

/// Whether every pairwise bracket of `gens` lies in their span. The first
/// failing pair in basis order is reported.
pub fn check_closure(gens: &[GeneratorId]) -> Result<Closure> {
    let basis = Basis::new(gens.to_vec())?;
    let n = gens.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let first_failure = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let br = basis.fields[i].bracket(&basis.fields[j]);
            basis.decomposer.decompose(&br).err().map(|w| (i, j, w))
        })
        .min_by_key(|(i, j, _)| (*i, *j));
    Ok(match first_failure {
        None => Closure::Closed,
        Some((i, j, witness)) => Closure::NotClosed { a: gens[i], b: gens[j], witness },
    })
}

pub fn is_abelian(gens: &[GeneratorId]) -> Result<bool> {
    let fields = gens.iter().map(|&g| generator(g)).collect::<Result<Vec<_>>>()?;
    Ok(fields
        .iter()
        .enumerate()
        .all(|(i, a)| fields[i + 1..].iter().all(|b| a.bracket(b).is_zero())))
}

/// The basis a bracket result is reported in: the P/P′ basis when a derived
/// generator is involved, the standard 24-basis otherwise.
fn reporting_basis(involves_derived: bool) -> Basis {
    if involves_derived {
        Basis::triple()
    } else {
        Basis::standard()
    }
}

/// `[a, b]` decomposed in the reporting basis.
pub fn bracket_combination(a: GeneratorId, b: GeneratorId) -> Result<Combination> {
    let f = generator(a)?.bracket(&generator(b)?);
    let basis = reporting_basis(a.is_derived() || b.is_derived());
    Ok(basis.decompose(&f)?)
}

/// `[t, g]` for each target `t`: how `g` acts on the targets.
pub fn adjoint_action(g: GeneratorId, targets: &[GeneratorId]) -> Result<Vec<(GeneratorId, Combination)>> {
    let gf = generator(g)?;
    let standard = Basis::standard();
    let triple = Basis::triple();
    targets
        .iter()
        .map(|&t| {
            let f = generator(t)?.bracket(&gf);
            let basis = if t.is_derived() { &triple } else { &standard };
            Ok((t, basis.decompose(&f)?))
        })
        .collect()
}
