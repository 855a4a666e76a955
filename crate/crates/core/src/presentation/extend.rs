use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{CiEffective, GEffective, Presentation};
use crate::algebra::scalar::{ceil, common_denominator, dot_int, floor};
use crate::error::{Error, Result};
use crate::Rational;

/// Parameters produced for a Weyl-invariant class `β̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorExtension {
    pub nu_weights: Vec<i64>,
    pub nu_prime: Vec<i64>,
    pub r_scale: i64,
    pub n: i64,
    pub default_n: i64,
}

fn to_i64(b: &BigInt) -> Result<i64> {
    b.to_i64().ok_or_else(|| Error::Shape(format!("integer {b} does not fit in 64 bits")))
}

/// Extension `(X × A¹, G × G_m, ϑ_N)` determined by `ν` and `ν′`.
pub fn extend_presentation(
    p: &Presentation,
    nu_weights: &[i64],
    nu_prime: &[i64],
    r_scale: i64,
    n: i64,
) -> Result<Presentation> {
    if nu_weights.len() != p.n() || nu_prime.len() != p.rank || r_scale <= 0 {
        return Err(Error::Shape(format!("need {} weight shifts, {} entries of nu' and r > 0", p.n(), p.rank)));
    }
    for (i, (xi, &nu)) in p.weights.iter().zip(nu_weights).enumerate() {
        let pairing: i64 = xi.iter().zip(nu_prime).map(|(a, b)| a * b).sum();
        let value = pairing - r_scale * nu;
        if value < 0 {
            return Err(Error::LimitFails { index: i + 1, value });
        }
    }
    let theta_nu: i64 = p.theta.iter().zip(nu_prime).map(|(a, b)| a * b).sum();
    if n * r_scale <= theta_nu {
        return Err(Error::NTooSmall { n, bound: Rational::new(theta_nu.into(), r_scale.into()).to_string() });
    }

    let m = p.rank;
    let n_old = p.n();
    let mut weights: Vec<Vec<i64>> = p
        .weights
        .iter()
        .zip(nu_weights)
        .map(|(xi, &nu)| {
            let mut v = xi.clone();
            v.push(nu);
            v
        })
        .collect();
    let mut unit = vec![0; m + 1];
    unit[m] = 1;
    weights.push(unit);
    let pad = |v: &Vec<i64>| {
        let mut v = v.clone();
        v.push(0);
        v
    };
    let mut theta = p.theta.clone();
    theta.push(n);
    let weyl_generators = p
        .weyl_generators
        .iter()
        .map(|w| {
            let mut rows: Vec<Vec<i64>> = w.iter().map(pad).collect();
            rows.push(weights[n_old].clone());
            rows
        })
        .collect();
    let mut restriction: Vec<Vec<Rational>> = p
        .restriction
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(Rational::zero());
            r
        })
        .collect();
    let mut last = vec![Rational::zero(); m + 1];
    last[m] = Rational::one();
    restriction.push(last);
    let with_new = |sets: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        sets.iter()
            .map(|s| {
                let mut s = s.clone();
                s.push(n_old);
                s
            })
            .collect()
    };
    let g_effective = match &p.g_effective {
        GEffective::Torus => GEffective::Torus,
        GEffective::Explicit(sets) => GEffective::Explicit(with_new(sets)),
    };
    let ci_effective = match &p.ci_effective {
        Some(CiEffective::Anticones(sets)) => Some(CiEffective::Anticones(with_new(sets))),
        other => other.clone(),
    };
    let mut labels = p.labels.clone();
    if !labels.weights.is_empty() {
        labels.weights.push("x".into());
    }
    labels.sectors.clear();
    Ok(Presentation {
        rank: m + 1,
        weights,
        theta,
        roots: p.roots.iter().map(pad).collect(),
        e_weights: p.e_weights.iter().map(pad).collect(),
        weyl_generators,
        g_effective,
        restriction,
        ci_effective,
        labels,
        extended: true,
    })
}

/// Extension data for a Weyl-invariant sector class `β̃`, with `N`
/// defaulting to `⌊−β̃(θ)⌋ + 1`.
pub fn sector_extension(p: &Presentation, beta: &[Rational], n: Option<i64>) -> Result<SectorExtension> {
    if beta.len() != p.rank {
        return Err(Error::Shape(format!("class has length {}, rank is {}", beta.len(), p.rank)));
    }
    if !p.is_weyl_invariant(beta) {
        let s: Vec<String> = beta.iter().map(|b| b.to_string()).collect();
        return Err(Error::NotWeylInvariant(format!("({})", s.join(","))));
    }
    let a = common_denominator(beta);
    let r_scale = to_i64(&a)?;
    let nu_weights = p.pairings(beta).iter().map(|v| to_i64(&-ceil(v))).collect::<Result<Vec<_>>>()?;
    let nu_prime = beta
        .iter()
        .map(|b| to_i64(&-(b * Rational::from_integer(a.clone())).to_integer()))
        .collect::<Result<Vec<_>>>()?;
    let default_n = to_i64(&floor(&-dot_int(beta, &p.theta)))? + 1;
    Ok(SectorExtension { nu_weights, nu_prime, r_scale, n: n.unwrap_or(default_n), default_n })
}

pub fn extend_by_sector(p: &Presentation, beta: &[Rational], n: Option<i64>) -> Result<Presentation> {
    let e = sector_extension(p, beta, n)?;
    extend_presentation(p, &e.nu_weights, &e.nu_prime, e.r_scale, e.n)
}

/// Set the `G_m`-weight of each `ε_j` to `mu_weights[j]`.
pub fn extend_e_weights(p: &Presentation, mu_weights: &[i64]) -> Result<Presentation> {
    if !p.extended {
        return Err(Error::NotExtended);
    }
    if mu_weights.len() != p.e_weights.len() {
        return Err(Error::Shape(format!(
            "{} e-weights but {} extension weights",
            p.e_weights.len(),
            mu_weights.len()
        )));
    }
    let mut out = p.clone();
    for (e, &mu) in out.e_weights.iter_mut().zip(mu_weights) {
        *e.last_mut().expect("extended weights are nonempty") = mu;
    }
    Ok(out)
}

/// Minimal anticones of the extension are exactly `A ∪ {n+1}`, both for the
/// torus and for the G-effective data.
pub fn extended_anticones_check(p_ext: &Presentation, p: &Presentation) -> bool {
    let new = p.n();
    if p_ext.n() != new + 1 || p_ext.rank != p.rank + 1 {
        return false;
    }
    let lift = |sets: Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = sets
            .into_iter()
            .map(|mut s| {
                s.push(new);
                s
            })
            .collect();
        out.sort();
        out
    };
    let idx = |v: Vec<super::Anticone>| -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = v.into_iter().map(|a| a.indices).collect();
        out.sort();
        out
    };
    let torus_ok = idx(p_ext.torus_minimal_anticones()) == lift(idx(p.torus_minimal_anticones()));
    let g_ok = match (p_ext.minimal_g_effective_anticones(), p.minimal_g_effective_anticones()) {
        (Ok(e), Ok(b)) => idx(e) == lift(idx(b)),
        _ => false,
    };
    torus_ok && g_ok
}
