use std::collections::BTreeMap;
use std::fmt;

use super::linear::{divide_poly, HLinearForm};
use super::mpoly::MPoly;
use super::scalar::{int, Scalar};
use crate::error::{Error, Result};

/// Laurent polynomial in `z` with coefficients in `Q[H_1..H_m]`, known
/// exactly on a window.
///
/// Coefficients of `z^e` are exact for `e >= lo` (everything when `lo` is
/// `None`); below `lo` nothing is known and asking is an error. `hi` is an
/// upper bound for the exponents of the true value. With `h_cap = Some(c)`
/// the value is only known modulo the ideal of H-degree `> c`.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<C> {
    nvars: usize,
    coeffs: BTreeMap<i64, MPoly<C>>,
    lo: Option<i64>,
    hi: i64,
    h_cap: Option<u32>,
}

fn min_cap(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<C: Scalar> Laurent<C> {
    pub fn zero(nvars: usize) -> Self {
        Laurent { nvars, coeffs: BTreeMap::new(), lo: None, hi: 0, h_cap: None }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, 0, MPoly::one(nvars))
    }

    /// `p · z^e`, exact.
    pub fn monomial(nvars: usize, e: i64, p: MPoly<C>) -> Self {
        let mut out = Self::zero(nvars);
        out.hi = e;
        if !p.is_zero() {
            out.coeffs.insert(e, p);
        }
        out
    }

    pub fn from_coeffs<I: IntoIterator<Item = (i64, MPoly<C>)>>(nvars: usize, it: I) -> Self {
        let mut out = Self::zero(nvars);
        let mut hi = None::<i64>;
        for (e, p) in it {
            hi = Some(hi.map_or(e, |h| h.max(e)));
            out.add_coeff(e, &p);
        }
        out.hi = hi.unwrap_or(0);
        out
    }

    /// `c_1(L) + k z` for the linear form with coefficients `lin`.
    pub fn affine(lin: &[i64], k: C) -> Self {
        let n = lin.len();
        Self::from_coeffs(n, [(0, MPoly::linear(lin)), (1, MPoly::constant(n, k))])
    }

    /// `(c + k z)^{-1} = Σ_{d=0}^{terms-1} (-c)^d / (k z)^{d+1}` with
    /// `k != 0`. Exact modulo `H^{>cap}` once `terms > cap`.
    pub fn inverse_affine(lin: &[i64], k: C, terms: u32, h_cap: Option<u32>) -> Self {
        assert!(!k.is_zero(), "inverse of c + kz needs k != 0");
        let n = lin.len();
        let minus_c = -&MPoly::<C>::linear(lin);
        let mut out = Self::zero(n);
        out.hi = -1;
        out.h_cap = h_cap;
        let mut pow_c = MPoly::one(n);
        let mut kpow = k.clone();
        let exact = matches!(h_cap, Some(c) if terms > c);
        let nterms = if exact { h_cap.unwrap() + 1 } else { terms };
        for d in 0..nterms {
            out.add_coeff(-(d as i64) - 1, &pow_c.scale(&(C::one() / kpow.clone())));
            pow_c = pow_c.mul_truncated(&minus_c, h_cap);
            kpow = kpow * k.clone();
        }
        out.lo = if exact { None } else { Some(-(nterms as i64)) };
        out
    }

    fn add_coeff(&mut self, e: i64, p: &MPoly<C>) {
        let p = match self.h_cap {
            Some(c) => p.truncate(c),
            None => p.clone(),
        };
        if p.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&e) {
            Some(q) => q + &p,
            None => p,
        };
        if sum.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, sum);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn lo(&self) -> Option<i64> {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn h_cap(&self) -> Option<u32> {
        self.h_cap
    }

    /// `(lo, hi)`: the exactness floor and the exponent upper bound.
    pub fn window(&self) -> (Option<i64>, i64) {
        (self.lo, self.hi)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &MPoly<C>)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, e: i64) -> Result<MPoly<C>> {
        if let Some(lo) = self.lo {
            if e < lo {
                return Err(Error::OutsideWindow { exponent: e, lo });
            }
        }
        Ok(self.coeffs.get(&e).cloned().unwrap_or_else(|| MPoly::zero(self.nvars)))
    }

    /// Reduce modulo `H^{>cap}`.
    pub fn with_cap(&self, cap: u32) -> Self {
        let cap = min_cap(self.h_cap, Some(cap));
        let mut out = Laurent { coeffs: BTreeMap::new(), h_cap: cap, ..self.clone() };
        for (e, p) in &self.coeffs {
            out.add_coeff(*e, p);
        }
        out
    }

    /// Forget everything below `z^floor`.
    pub fn with_floor(&self, floor: i64) -> Self {
        let lo = Some(self.lo.map_or(floor, |l| l.max(floor)));
        let mut out = self.clone();
        out.lo = lo;
        out.coeffs.retain(|&e, _| e >= floor);
        out
    }

    /// Multiply by `z^d`.
    pub fn shift(&self, d: i64) -> Self {
        Laurent {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|(e, p)| (e + d, p.clone())).collect(),
            lo: self.lo.map(|l| l + d),
            hi: self.hi + d,
            h_cap: self.h_cap,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = self.clone();
        out.coeffs = self.coeffs.iter().map(|(e, p)| (*e, p.scale(c))).filter(|(_, p)| !p.is_zero()).collect();
        out
    }

    pub fn mul_poly(&self, p: &MPoly<C>) -> Self {
        self * &Self::monomial(self.nvars, 0, p.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let lo = match (self.lo, other.lo) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, None) => a,
            (None, b) => b,
        };
        let mut out = Laurent {
            nvars: self.nvars,
            coeffs: BTreeMap::new(),
            lo,
            hi: self.hi.max(other.hi),
            h_cap: min_cap(self.h_cap, other.h_cap),
        };
        for (e, p) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_coeff(*e, p);
        }
        if let Some(lo) = lo {
            out.coeffs.retain(|&e, _| e >= lo);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-C::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let cands = [self.lo.map(|l| l + other.hi), other.lo.map(|l| l + self.hi)];
        let lo = cands.iter().flatten().copied().max();
        let cap = min_cap(self.h_cap, other.h_cap);
        let mut out = Laurent { nvars: self.nvars, coeffs: BTreeMap::new(), lo, hi: self.hi + other.hi, h_cap: cap };
        for (ea, pa) in &self.coeffs {
            for (eb, pb) in &other.coeffs {
                let e = ea + eb;
                if lo.is_some_and(|l| e < l) {
                    continue;
                }
                out.add_coeff(e, &pa.mul_truncated(pb, cap));
            }
        }
        out
    }

    /// Exact division of every coefficient by `l`; consumes one degree of
    /// the H-cap.
    pub fn divide_exact(&self, l: &HLinearForm) -> Result<Self> {
        let cap = match self.h_cap {
            Some(0) => return Err(Error::HCapExhausted),
            Some(c) => Some(c - 1),
            None => None,
        };
        let mut out = Laurent { coeffs: BTreeMap::new(), h_cap: cap, ..self.clone() };
        for (e, p) in &self.coeffs {
            out.add_coeff(*e, &divide_poly(p, l)?);
        }
        Ok(out)
    }

    /// Coefficients at `H = 0`, zeros dropped.
    pub fn substitute_h_zero(&self) -> BTreeMap<i64, C> {
        self.coeffs.iter().map(|(e, p)| (*e, p.constant_term())).filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Largest H-degree present.
    pub fn h_degree(&self) -> Option<u32> {
        self.coeffs.values().filter_map(|p| p.total_degree()).max()
    }
}

impl<C: Scalar> std::ops::Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        Laurent::mul(self, rhs)
    }
}

impl<C: Scalar> std::ops::Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        Laurent::add(self, rhs)
    }
}

impl<C: Scalar> std::ops::Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        Laurent::add(self, &rhs.neg())
    }
}

impl<C: Scalar> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (k, (e, p)) in self.coeffs.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "({p})")?,
                1 => write!(f, "({p})*z")?,
                _ => write!(f, "({p})*z^{e}")?,
            }
        }
        if let Some(lo) = self.lo {
            write!(f, " + O(z^{})", lo - 1)?;
        }
        Ok(())
    }
}

/// Product `∏ (c_i + k_i z)` of affine factors, exact.
pub fn affine_product<C: Scalar>(nvars: usize, factors: &[(Vec<i64>, C)], h_cap: Option<u32>) -> Laurent<C> {
    let one = match h_cap {
        Some(c) => Laurent::one(nvars).with_cap(c),
        None => Laurent::one(nvars),
    };
    factors.iter().fold(one, |acc, (lin, k)| &acc * &Laurent::affine(lin, k.clone()))
}

pub fn int_poly<C: Scalar>(nvars: usize, n: i64) -> MPoly<C> {
    MPoly::constant(nvars, int(n))
}
