use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{degree, Classifier, RatClass, TruncationSpec};
use crate::algebra::scalar::{ceil, floor};
use crate::error::{Error, Result};
use crate::linalg;
use crate::presentation::Presentation;
use crate::Rational;

fn sort_classes(p: &Presentation, set: BTreeSet<RatClass>) -> Vec<RatClass> {
    let mut v: Vec<(Rational, RatClass)> = set.into_iter().map(|b| (degree(&b, p), b)).collect();
    v.sort();
    v.into_iter().map(|(_, b)| b).collect()
}

fn pairing_range(xi: &[i64], bx: &[(Rational, Rational)]) -> (Rational, Rational) {
    let mut lo = Rational::zero();
    let mut hi = Rational::zero();
    for (&w, (a, b)) in xi.iter().zip(bx) {
        let w = Rational::from_integer(w.into());
        let (x, y) = (&w * a, &w * b);
        if x <= y {
            lo += x;
            hi += y;
        } else {
            lo += y;
            hi += x;
        }
    }
    (lo, hi)
}

/// All `β̃` in `⋃_A C_A` (A minimal G-effective) inside the box with
/// `deg ≤ degree_max`, filtered by CI-effectiveness when that data is
/// present. Sorted by `(degree, coordinates)`.
///
/// For each `A` an invertible block `M ⊆ A` fixes `β̃ = (Mᵀ)^{-1} k` with
/// `k ∈ Z_{≥0}^m`; the box bounds each `k_i`.
pub fn enumerate(p: &Presentation, t: &TruncationSpec) -> Result<Vec<RatClass>> {
    let bx = t.coordinate_box.as_ref().ok_or(Error::UnboundedBox)?;
    if bx.len() != p.rank {
        return Err(Error::Shape(format!("box has {} coordinates, rank is {}", bx.len(), p.rank)));
    }
    let cl = Classifier::new(p)?;
    let mut out = BTreeSet::new();
    for a in &cl.anticones {
        let cols: Vec<Vec<i64>> = a.indices.iter().map(|&i| p.weights[i].clone()).collect();
        let sel = linalg::independent_subset(&cols);
        if sel.len() < p.rank {
            return Err(Error::Shape(format!("anticone {a} does not span the character space")));
        }
        let m_rows: Vec<Vec<i64>> = sel.iter().map(|&j| cols[j].clone()).collect();
        let mq = linalg::from_int(&m_rows);
        let minv = linalg::inverse(&mq).expect("independent rows");
        // β̃ = adj·k / d with d > 0, all in integers.
        let d = linalg::det(&mq).to_integer().abs();
        let dq = Rational::from_integer(d.clone());
        let adj: Vec<Vec<i64>> = minv
            .iter()
            .map(|row| row.iter().map(|x| (x * &dq).to_integer().to_i64().expect("small adjugate")).collect())
            .collect();
        let d = d.to_i64().expect("small determinant");
        let ranges: Vec<(i64, i64)> = m_rows
            .iter()
            .map(|xi| {
                let (lo, hi) = pairing_range(xi, bx);
                let lo = ceil(&lo).max(BigInt::zero());
                (lo.to_i64().unwrap_or(i64::MAX), floor(&hi).to_i64().unwrap_or(i64::MIN))
            })
            .collect();
        if ranges.iter().any(|(lo, hi)| lo > hi) {
            continue;
        }
        let ibox: Vec<(i64, i64)> = bx
            .iter()
            .map(|(lo, hi)| (ceil(&(lo * &dq)).to_i64().unwrap(), floor(&(hi * &dq)).to_i64().unwrap()))
            .collect();
        let dv = p.degree_vector();
        let dmax = floor(&(&t.degree_max * &dq)).to_i64().unwrap_or(i64::MAX);
        let a_weights: Vec<&Vec<i64>> = a.indices.iter().map(|&i| &p.weights[i]).collect();
        let dotv = |w: &[i64], u: &[i64]| -> i64 { w.iter().zip(u).map(|(x, y)| x * y).sum() };
        let mut k: Vec<i64> = ranges.iter().map(|r| r.0).collect();
        let mut u = vec![0i64; p.rank];
        'odometer: loop {
            for (ui, row) in u.iter_mut().zip(&adj) {
                *ui = dotv(row, &k);
            }
            if u.iter().zip(&ibox).all(|(x, (lo, hi))| lo <= x && x <= hi)
                && a_weights.iter().all(|w| {
                    let v = dotv(w, &u);
                    v >= 0 && v % d == 0
                })
                && dotv(&dv, &u) <= dmax
            {
                let beta: RatClass = u.iter().map(|&x| Rational::new(x.into(), d.into())).collect();
                if cl.ci_effective(&beta).unwrap_or(true) {
                    out.insert(beta);
                }
            }
            for j in 0..k.len() {
                if k[j] < ranges[j].1 {
                    k[j] += 1;
                    continue 'odometer;
                }
                k[j] = ranges[j].0;
            }
            break;
        }
    }
    Ok(sort_classes(p, out))
}

/// Oracle for [`enumerate`]: scan every point of `(1/L) Z^m` in the box,
/// where `L` is the lcm of all nonzero maximal minors of the weight matrix.
pub fn brute_force_enumerate(p: &Presentation, t: &TruncationSpec) -> Result<Vec<RatClass>> {
    let bx = t.coordinate_box.as_ref().ok_or(Error::UnboundedBox)?;
    let cl = Classifier::new(p)?;
    let m = p.rank;
    let n = p.n();
    let mut l = BigInt::from(1);
    let mut idx: Vec<usize> = (0..m).collect();
    if n >= m {
        loop {
            let rows: Vec<Vec<i64>> = idx.iter().map(|&i| p.weights[i].clone()).collect();
            let d = linalg::det(&linalg::from_int(&rows)).to_integer().abs();
            if !d.is_zero() {
                l = l.lcm(&d);
            }
            // next combination
            let mut i = m;
            while i > 0 && idx[i - 1] == n - m + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..m {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    let l = l.to_i64().ok_or_else(|| Error::Shape("minor lcm too large".into()))?;
    let lq = Rational::from_integer(l.into());
    let ranges: Vec<(i64, i64)> =
        bx.iter().map(|(a, b)| (ceil(&(a * &lq)).to_i64().unwrap(), floor(&(b * &lq)).to_i64().unwrap())).collect();
    if ranges.iter().any(|(a, b)| a > b) {
        return Ok(Vec::new());
    }
    let mut out = BTreeSet::new();
    let mut v: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    'scan: loop {
        // Integer test first: β̃(ξ) = (ξ·v)/L.
        let s_nonneg: Vec<usize> = (0..n)
            .filter(|&i| {
                let x: i64 = p.weights[i].iter().zip(&v).map(|(a, b)| a * b).sum();
                x >= 0 && x % l == 0
            })
            .collect();
        if cl.anticones.iter().any(|a| a.indices.iter().all(|i| s_nonneg.binary_search(i).is_ok())) {
            let beta: RatClass = v.iter().map(|&x| Rational::new(x.into(), l.into())).collect();
            if degree(&beta, p) <= t.degree_max && cl.ci_effective(&beta).unwrap_or(true) {
                out.insert(beta);
            }
        }
        for j in 0..m {
            if v[j] < ranges[j].1 {
                v[j] += 1;
                continue 'scan;
            }
            v[j] = ranges[j].0;
        }
        break;
    }
    Ok(sort_classes(p, out))
}
