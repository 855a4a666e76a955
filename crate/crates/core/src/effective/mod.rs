//! Classes `β̃ ∈ Hom(χ(T), Q)`: the sets `C_A`, effectiveness, degree,
//! sectors and ages, and box-bounded enumeration.

mod enumerate;

pub use enumerate::{brute_force_enumerate, enumerate};

use std::fmt;

use num_traits::{Signed, Zero};

use crate::algebra::scalar::{dot_int, frac, is_integer, is_nonneg_integer, parse_rational};
use crate::error::{Error, Result};
use crate::presentation::{Anticone, CiEffective, Presentation};
use crate::Rational;

/// `β̃` as the vector `(β̃(e_1), …, β̃(e_m))`.
pub type RatClass = Vec<Rational>;

/// Fractional parts of `−β̃_i`, naming `g_β̃^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SectorLabel(pub Vec<Rational>);

impl SectorLabel {
    pub fn of(beta: &[Rational]) -> Self {
        SectorLabel(beta.iter().map(|b| frac(&-b)).collect())
    }

    pub fn untwisted(rank: usize) -> Self {
        SectorLabel(vec![Rational::zero(); rank])
    }

    pub fn is_untwisted(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn parse(s: &str) -> Option<Self> {
        s.split(',').map(parse_rational).collect::<Option<Vec<_>>>().map(|v| SectorLabel(v.iter().map(frac).collect()))
    }
}

impl fmt::Display for SectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Truncation of every enumeration and expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncationSpec {
    /// Upper bound on `deg q^β`.
    pub degree_max: Rational,
    /// Inclusive bounds per coordinate of `β̃`.
    pub coordinate_box: Option<Vec<(Rational, Rational)>>,
    /// Lowest z-exponent that must come out exact.
    pub z_min: i64,
    pub h_degree_max: u32,
}

impl TruncationSpec {
    /// Symmetric box `[-half_width, half_width]^rank`.
    pub fn new(rank: usize, degree_max: Rational, half_width: i64) -> Self {
        Self::with_box(rank, degree_max, -half_width, half_width)
    }

    pub fn with_box(rank: usize, degree_max: Rational, lo: i64, hi: i64) -> Self {
        let b = (Rational::from_integer(lo.into()), Rational::from_integer(hi.into()));
        TruncationSpec { degree_max, coordinate_box: Some(vec![b; rank]), z_min: -4, h_degree_max: 0 }
    }

    pub fn z_min(mut self, z_min: i64) -> Self {
        self.z_min = z_min;
        self
    }

    pub fn h_degree_max(mut self, h: u32) -> Self {
        self.h_degree_max = h;
        self
    }

    /// Named defaults for the z-window and H-degree: `quick`, `default`,
    /// `deep`.
    pub fn profile(name: &str) -> Option<(i64, u32)> {
        match name {
            "quick" => Some((-2, 0)),
            "default" => Some((-4, 2)),
            "deep" => Some((-6, 4)),
            _ => None,
        }
    }

    pub fn contains(&self, beta: &[Rational]) -> bool {
        match &self.coordinate_box {
            Some(b) => beta.iter().zip(b).all(|(x, (lo, hi))| lo <= x && x <= hi),
            None => true,
        }
    }
}

pub fn in_c_a(beta: &[Rational], a: &[usize], p: &Presentation) -> bool {
    a.iter().all(|&i| is_nonneg_integer(&dot_int(beta, &p.weights[i])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSets {
    /// `β̃(ξ_i) ∈ Z`.
    pub s: Vec<usize>,
    /// `β̃(ξ_i) ∈ Z_{≥0}`.
    pub s_nonneg: Vec<usize>,
    /// Coordinates not forced to vanish on `X^β̃`.
    pub x_support: Vec<usize>,
}

pub fn support_sets(beta: &[Rational], p: &Presentation) -> SupportSets {
    let vals = p.pairings(beta);
    let s: Vec<usize> = (0..vals.len()).filter(|&i| is_integer(&vals[i])).collect();
    let s_nonneg: Vec<usize> = s.iter().copied().filter(|&i| !vals[i].is_negative()).collect();
    SupportSets { s, x_support: s_nonneg.clone(), s_nonneg }
}

pub fn degree(beta: &[Rational], p: &Presentation) -> Rational {
    dot_int(beta, &p.degree_vector())
}

/// Age of the sector `g^{-1}` named by `label`.
pub fn age_of_label(label: &SectorLabel, p: &Presentation) -> Rational {
    let f = |v: &Vec<i64>| frac(&dot_int(&label.0, v));
    let sum = |vs: &[Vec<i64>]| vs.iter().map(f).fold(Rational::zero(), |a, b| a + b);
    sum(&p.weights) - sum(&p.e_weights) - sum(&p.roots)
}

/// Age of the sector carrying `I_β̃`.
pub fn age(beta: &[Rational], p: &Presentation) -> Rational {
    age_of_label(&SectorLabel::of(beta), p)
}

/// Effectiveness predicates with the minimal G-effective anticones cached.
#[derive(Clone, Debug)]
pub struct Classifier<'a> {
    pub p: &'a Presentation,
    pub anticones: Vec<Anticone>,
}

fn contains_any(set: &[usize], anticones: &[Anticone]) -> bool {
    anticones.iter().any(|a| a.indices.iter().all(|i| set.binary_search(i).is_ok()))
}

impl<'a> Classifier<'a> {
    pub fn new(p: &'a Presentation) -> Result<Self> {
        Ok(Classifier { p, anticones: p.minimal_g_effective_anticones()? })
    }

    pub fn inertia_nonempty(&self, beta: &[Rational]) -> bool {
        contains_any(&support_sets(beta, self.p).s, &self.anticones)
    }

    pub fn is_i_effective(&self, beta: &[Rational]) -> bool {
        contains_any(&support_sets(beta, self.p).s_nonneg, &self.anticones)
    }

    pub fn ci_effective(&self, beta: &[Rational]) -> Result<bool> {
        match &self.p.ci_effective {
            None => Err(Error::MissingCIData),
            Some(CiEffective::All) => Ok(self.is_i_effective(beta)),
            Some(CiEffective::Anticones(sets)) => Ok(sets.iter().any(|a| in_c_a(beta, a, self.p))),
        }
    }

    /// CI-effective when CI data is present, I-effective otherwise.
    pub fn passes_filters(&self, beta: &[Rational]) -> bool {
        self.is_i_effective(beta) && self.ci_effective(beta).unwrap_or(true)
    }
}

pub fn inertia_nonempty(beta: &[Rational], p: &Presentation) -> Result<bool> {
    Ok(Classifier::new(p)?.inertia_nonempty(beta))
}

pub fn is_i_effective(beta: &[Rational], p: &Presentation) -> Result<bool> {
    Ok(Classifier::new(p)?.is_i_effective(beta))
}

pub fn ci_effective(beta: &[Rational], p: &Presentation) -> Result<bool> {
    Classifier::new(p)?.ci_effective(beta)
}

/// `I_β̃` is I-nonnegative when no `ε_j` pairs to a negative integer.
pub fn is_i_nonnegative(beta: &[Rational], p: &Presentation) -> bool {
    p.e_pairings(beta).iter().all(|v| !(is_integer(v) && v.is_negative()))
}
