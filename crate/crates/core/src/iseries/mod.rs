//! I-function assembly: contributions `I_β̃(z)`, Weyl orbit sums, the
//! series keyed by `(β, sector)`, mirror maps and consistency checks.

mod cfactor;
mod contribution;

pub use cfactor::{c_degree, c_factor, Affine, CFactor};
pub use contribution::{contribution, orbit_sum, root_pairs, working_cap, Contribution, F0Marker};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::effective::{age_of_label, degree, enumerate, Classifier, RatClass, SectorLabel, TruncationSpec};
use crate::error::{Error, Result};
use crate::presentation::{extend_by_sector, Presentation};
use crate::{Rational, ZLaurent};

/// Coefficient of `q^β` on one sector, summed over all Weyl orbits.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesTerm {
    pub beta: Vec<Rational>,
    pub sector: SectorLabel,
    pub degree: Rational,
    pub age: Rational,
    /// Codimension of the supporting class (nonzero only for `F⁰` terms).
    pub codim: i64,
    pub value: ZLaurent,
    /// Least element of each contributing orbit.
    pub classes: Vec<RatClass>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ISeries {
    pub terms: BTreeMap<(Vec<Rational>, SectorLabel), SeriesTerm>,
    /// Terms on `F⁰` classes left out of the main table.
    pub unresolved: Vec<SeriesTerm>,
    pub warnings: Vec<String>,
    pub truncation: TruncationSpec,
}

impl ISeries {
    /// Terms in `(degree, β, sector)` order.
    pub fn ordered(&self) -> Vec<&SeriesTerm> {
        let mut v: Vec<&SeriesTerm> = self.terms.values().collect();
        v.sort_by(|a, b| (&a.degree, &a.beta, &a.sector).cmp(&(&b.degree, &b.beta, &b.sector)));
        v
    }

    pub fn get(&self, beta: &[Rational], sector: &SectorLabel) -> Option<&SeriesTerm> {
        self.terms.get(&(beta.to_vec(), sector.clone()))
    }

    /// `(β, sector) → {z-exponent → coefficient}` at `H = 0`.
    pub fn h_zero(&self) -> BTreeMap<(Vec<Rational>, SectorLabel), BTreeMap<i64, Rational>> {
        self.terms
            .iter()
            .map(|(k, t)| (k.clone(), t.value.substitute_h_zero()))
            .filter(|(_, v)| !v.is_empty())
            .collect()
    }
}

fn orbit_classes(p: &Presentation, classes: &[RatClass]) -> Result<BTreeMap<RatClass, Vec<RatClass>>> {
    let mut seen: BTreeSet<RatClass> = BTreeSet::new();
    let mut out = BTreeMap::new();
    for b in classes {
        if seen.contains(b) {
            continue;
        }
        let orbit = p.orbit(b)?;
        seen.extend(orbit.iter().cloned());
        out.insert(orbit[0].clone(), orbit);
    }
    Ok(out)
}

/// `I(q, z) = Σ_β q^β Σ_{β̃ ↦ β} I_β̃(z)`, truncated by `t`.
pub fn i_series(p: &Presentation, t: &TruncationSpec) -> Result<ISeries> {
    let cl = Classifier::new(p)?;
    let mut classes = enumerate(p, t)?;
    let zero = vec![Rational::zero(); p.rank];
    if !classes.contains(&zero) {
        classes.push(zero);
    }
    let mut series =
        ISeries { terms: BTreeMap::new(), unresolved: Vec::new(), warnings: Vec::new(), truncation: t.clone() };
    for (rep, orbit) in orbit_classes(p, &classes)? {
        let contribs: Vec<Contribution> = orbit.iter().map(|b| contribution::contribution_with(&cl, b, t)).collect();
        if contribs.iter().all(|c| c.is_zero()) {
            continue;
        }
        let (sector, value) = orbit_sum(&contribs, p, t)?;
        let f0 = contribs[0].f0.clone();
        let term = SeriesTerm {
            beta: p.restrict(&rep),
            age: age_of_label(&sector, p),
            degree: degree(&rep, p),
            codim: f0.as_ref().map_or(0, |f| f.codim),
            sector,
            value,
            classes: vec![rep.clone()],
        };
        if let Some(f) = &f0 {
            let keep = f.codim == 0 && p.ci_effective.is_some();
            if !keep {
                if f.codim == 0 {
                    series.warnings.push(format!(
                        "class {} is supported on an F0 locus of codimension 0 but no CI data asserts it; left out",
                        fmt_vec(&rep)
                    ));
                }
                series.unresolved.push(term);
                continue;
            }
        }
        let key = (term.beta.clone(), term.sector.clone());
        match series.terms.get_mut(&key) {
            Some(existing) => {
                existing.value = &existing.value + &term.value;
                existing.classes.extend(term.classes);
            }
            None => {
                series.terms.insert(key, term);
            }
        }
    }
    Ok(series)
}

/// Per-sector data of `μ(q, z) = [z I(q, z) − z]_+` at H-degree 0.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MirrorMap {
    /// sector → `(β, z-power) → coefficient`.
    pub sectors: BTreeMap<SectorLabel, BTreeMap<(Vec<Rational>, i64), Rational>>,
}

impl MirrorMap {
    pub fn is_zero(&self) -> bool {
        self.sectors.values().all(|m| m.is_empty())
    }

    pub fn coeff(&self, sector: &SectorLabel, beta: &[Rational], z_power: i64) -> Rational {
        self.sectors.get(sector).and_then(|m| m.get(&(beta.to_vec(), z_power))).cloned().unwrap_or_else(Rational::zero)
    }
}

pub fn mirror_map(s: &ISeries) -> Result<MirrorMap> {
    let mut out = MirrorMap::default();
    for t in s.terms.values() {
        if let Some(lo) = t.value.lo() {
            if lo > -1 {
                return Err(Error::WindowTooNarrow { lo });
            }
        }
        for (e, c) in t.value.substitute_h_zero() {
            if e < -1 {
                continue;
            }
            let mut c = c;
            if e == 0 && t.sector.is_untwisted() && t.beta.iter().all(|b| b.is_zero()) {
                c -= Rational::one();
            }
            if !c.is_zero() {
                out.sectors.entry(t.sector.clone()).or_default().insert((t.beta.clone(), e + 1), c);
            }
        }
    }
    out.sectors.retain(|_, m| !m.is_empty());
    Ok(out)
}

/// Every monomial satisfies `deg q^β + (z-exponent) + (H-degree) + codim + age = 0`.
pub fn check_homogeneity(s: &ISeries, _p: &Presentation) -> bool {
    s.terms.values().chain(&s.unresolved).all(|t| {
        t.value.terms().all(|(e, poly)| {
            poly.terms().all(|(mono, _)| {
                let h: u32 = mono.iter().sum();
                &t.degree + Rational::from_integer((*e + h as i64 + t.codim).into()) + &t.age == Rational::zero()
            })
        })
    })
}

fn factorial(d: u32) -> Rational {
    (1..=d as i64).fold(Rational::one(), |acc, k| acc * Rational::from_integer(k.into()))
}

/// On the trivial extension the coefficient of `q^β t^d` at `H = 0` is the
/// base coefficient times `1/(d! z^d)`, for `d ≤ d_max`.
pub fn trivial_extension_check(p: &Presentation, t: &TruncationSpec, d_max: u32) -> Result<bool> {
    let zero = vec![Rational::zero(); p.rank];
    let ext = extend_by_sector(p, &zero, Some(1))?;
    let base_t = t.clone().h_degree_max(0);
    let mut ext_t = base_t.clone();
    ext_t.degree_max = &t.degree_max + Rational::from_integer(d_max.into());
    let bx = t.coordinate_box.clone().ok_or(Error::UnboundedBox)?;
    let mut ebx = bx.clone();
    ebx.push((Rational::zero(), Rational::from_integer(d_max.into())));
    ext_t.coordinate_box = Some(ebx);
    let base = i_series(p, &base_t)?;
    let extended = i_series(&ext, &ext_t)?;

    let zero_q = Rational::zero();
    // Every extended term must be predicted by the base series.
    for ((beta, sector), term) in &extended.terms {
        let d = beta.last().expect("extended class").clone();
        let base_beta = &beta[..beta.len() - 1];
        let base_deg = &term.degree - &d;
        if base_deg > t.degree_max || sector.0.last() != Some(&zero_q) {
            if sector.0.last() != Some(&zero_q) {
                return Ok(false);
            }
            continue;
        }
        let d = d.to_integer().try_into().unwrap_or(u32::MAX);
        let base_sector = SectorLabel(sector.0[..sector.0.len() - 1].to_vec());
        let expected = base.get(base_beta, &base_sector).map(|b| b.value.clone());
        if !matches_shift(expected.as_ref(), &term.value, d, t.z_min) {
            return Ok(false);
        }
    }
    // And every base term must appear for each d.
    for ((beta, sector), term) in &base.terms {
        for d in 0..=d_max {
            let mut eb = beta.clone();
            eb.push(Rational::from_integer(d.into()));
            let mut es = sector.0.clone();
            es.push(Rational::zero());
            match extended.get(&eb, &SectorLabel(es)) {
                Some(e) => {
                    if !matches_shift(Some(&term.value), &e.value, d, t.z_min) {
                        return Ok(false);
                    }
                }
                None => {
                    if term.value.substitute_h_zero().keys().any(|&k| k - d as i64 >= t.z_min) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn matches_shift(base: Option<&ZLaurent>, ext: &ZLaurent, d: u32, z_min: i64) -> bool {
    let scale = Rational::one() / factorial(d);
    let want: BTreeMap<i64, Rational> = base
        .map(|b| b.substitute_h_zero().into_iter().map(|(e, c)| (e - d as i64, c * &scale)).collect())
        .unwrap_or_default();
    let got = ext.substitute_h_zero();
    let floor =
        z_min.max(ext.lo().unwrap_or(i64::MIN)).max(base.and_then(|b| b.lo()).map_or(i64::MIN, |l| l - d as i64));
    let keep = |m: BTreeMap<i64, Rational>| -> BTreeMap<i64, Rational> {
        m.into_iter().filter(|(e, _)| *e >= floor).collect()
    };
    keep(want) == keep(got)
}

pub(crate) fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `q1^{-1/3} q2^{-2/3} q3` style monomial; `1` for `β = 0`.
pub fn format_q(beta: &[Rational]) -> String {
    let parts: Vec<String> = beta
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_zero())
        .map(|(i, b)| {
            let var = if beta.len() == 1 { "q".to_string() } else { format!("q{}", i + 1) };
            if b.is_one() {
                var
            } else {
                format!("{var}^{{{b}}}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for MirrorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (sector, terms) in &self.sectors {
            let parts: Vec<String> = terms
                .iter()
                .map(|((beta, zp), c)| {
                    let z = match zp {
                        0 => String::new(),
                        1 => " z".into(),
                        _ => format!(" z^{zp}"),
                    };
                    let q = format_q(beta);
                    if c.is_one() && (q != "1" || !z.is_empty()) {
                        format!("{q}{z}")
                    } else {
                        format!("{c} {q}{z}")
                    }
                })
                .collect();
            writeln!(f, "[{sector}] {}", parts.join(" + "))?;
        }
        Ok(())
    }
}
