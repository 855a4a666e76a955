use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::cfactor::{c_factor_at, Affine, CFactor};
use crate::algebra::scalar::{dot_int, is_integer};
use crate::algebra::{HLinearForm, Laurent};
use crate::effective::{Classifier, RatClass, SectorLabel, TruncationSpec};
use crate::error::Result;
use crate::presentation::Presentation;
use crate::{Rational, ZLaurent};

/// Support data for a term that is not I-nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F0Marker {
    /// Codimension of `F⁰` in its sector:
    /// `#{ξ: β̃(ξ) ∈ Z_{<0}} − #{ε: β̃(ε) ∈ Z_{<0}}`.
    pub codim: i64,
    /// `#{ε: β̃(ε) ∈ Z_{≥0}}`, the number of equations of the l.c.i. locus.
    pub lci_equations: usize,
}

/// One summand `I_β̃(z)`, before division by root forms.
#[derive(Clone, Debug, PartialEq)]
pub struct Contribution {
    pub beta_tilde: RatClass,
    pub sector: SectorLabel,
    pub value: ZLaurent,
    /// Canonical root forms `c_1(L_ρ)` dividing `value`.
    pub denominator: Vec<HLinearForm>,
    pub i_nonnegative: bool,
    pub f0: Option<F0Marker>,
}

impl Contribution {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

/// Number of root pairs `{ρ, −ρ}`; every orbit division uses at most this
/// many H-degrees.
pub fn root_pairs(p: &Presentation) -> u32 {
    p.roots.iter().filter(|r| HLinearForm::new(r.to_vec()).map(|l| l.canonical().1 == 1).unwrap_or(false)).count()
        as u32
}

/// H-cap used for raw contributions so that orbit division still leaves
/// `t.h_degree_max`.
pub fn working_cap(p: &Presentation, t: &TruncationSpec) -> u32 {
    t.h_degree_max + root_pairs(p)
}

fn neg_int(v: &Rational) -> bool {
    is_integer(v) && v.is_negative()
}

pub fn contribution(p: &Presentation, beta: &[Rational], t: &TruncationSpec) -> Result<Contribution> {
    let cl = Classifier::new(p)?;
    Ok(contribution_with(&cl, beta, t))
}

pub(crate) fn contribution_with(cl: &Classifier<'_>, beta: &[Rational], t: &TruncationSpec) -> Contribution {
    let p = cl.p;
    let rank = p.rank;
    let cap = working_cap(p, t);
    let sector = SectorLabel::of(beta);
    let xv = p.pairings(beta);
    let ev = p.e_pairings(beta);
    let i_nonnegative = !ev.iter().any(neg_int);
    let f0 = (!i_nonnegative).then(|| F0Marker {
        codim: xv.iter().filter(|v| neg_int(v)).count() as i64 - ev.iter().filter(|v| neg_int(v)).count() as i64,
        lci_equations: ev.iter().filter(|v| is_integer(v) && !v.is_negative()).count(),
    });
    let zero = |denominator| Contribution {
        beta_tilde: beta.to_vec(),
        sector: sector.clone(),
        value: Laurent::zero(rank),
        denominator,
        i_nonnegative,
        f0: f0.clone(),
    };
    if !cl.inertia_nonempty(beta) {
        return zero(Vec::new());
    }
    let circ = !i_nonnegative;
    let mut total = CFactor::default();
    for (xi, v) in p.weights.iter().zip(&xv) {
        total.absorb(c_factor_at(v, xi, circ));
    }
    for (e, v) in p.e_weights.iter().zip(&ev) {
        total.absorb(c_factor_at(v, e, circ).inverse());
    }
    let mut sign = Rational::one();
    let mut denominator = Vec::new();
    for r in &p.roots {
        let Ok(form) = HLinearForm::new(r.clone()) else { continue };
        if form.canonical().1 != 1 {
            continue;
        }
        let s = dot_int(beta, r);
        if s.is_zero() {
            continue;
        }
        if is_integer(&s) {
            // C(ρ)^{-1} C(−ρ)^{-1} = (−1)^s (c_ρ + s z) / c_ρ
            if s.to_integer() % 2u8 != 0.into() {
                sign = -sign;
            }
            total.numer.push(Affine { xi: r.clone(), k: s });
            denominator.push(form);
        } else {
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            total.absorb(c_factor_at(&s, r, false).inverse());
            total.absorb(c_factor_at(&-s.clone(), &neg, false).inverse());
        }
    }
    let value = total.to_laurent(rank, t, cap).scale(&sign);
    Contribution { value, denominator, ..zero(Vec::new()) }
}

/// Sum one Weyl orbit of contributions onto its canonical sector (the least
/// label in the orbit) and divide out the root forms exactly.
///
/// Members sitting on other labels of the orbit describe the same sector
/// of `X // G` and are not added again.
pub fn orbit_sum(contribs: &[Contribution], p: &Presentation, t: &TruncationSpec) -> Result<(SectorLabel, ZLaurent)> {
    let rank = p.rank;
    let canonical = contribs.iter().map(|c| c.sector.clone()).min().unwrap_or_else(|| SectorLabel::untwisted(rank));
    let on_sector: Vec<&Contribution> = contribs.iter().filter(|c| c.sector == canonical).collect();
    let forms: BTreeSet<HLinearForm> = on_sector.iter().flat_map(|c| c.denominator.iter().cloned()).collect();
    let mut numerator = Laurent::zero(rank).with_cap(working_cap(p, t));
    for c in &on_sector {
        let mut v = c.value.clone();
        for f in forms.iter().filter(|f| !c.denominator.contains(f)) {
            v = v.mul_poly(&f.to_poly());
        }
        numerator = &numerator + &v;
    }
    for f in &forms {
        numerator = numerator.divide_exact(f)?;
    }
    Ok((canonical, numerator.with_cap(t.h_degree_max).with_floor(t.z_min)))
}
