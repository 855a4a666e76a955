//! Quantum period of the del Pezzo complete intersection, its
//! regularization, and classical periods of two-variable Laurent
//! polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::harmonic;
use crate::Rational;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn factorial(n: u64) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * q(k))
}

/// Dense polynomial in one parameter, coefficients low degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XPoly(Vec<Rational>);

impl XPoly {
    pub fn zero() -> Self {
        XPoly(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        XPoly(vec![c]).normalized()
    }

    /// `a + b x`.
    pub fn linear(a: i64, b: i64) -> Self {
        XPoly(vec![q(a), q(b)]).normalized()
    }

    pub fn from_coeffs(c: Vec<Rational>) -> Self {
        XPoly(c).normalized()
    }

    fn normalized(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        XPoly((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect()).normalized()
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        XPoly(out).normalized()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        XPoly(self.0.iter().map(|a| a * c).collect()).normalized()
    }

    pub fn pow(&self, k: u64) -> Self {
        (0..k).fold(XPoly::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for XPoly {
    /// `546x^2 + 6888x + 22470`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let m = if mag.is_one() && d > 0 { String::new() } else { mag.to_string() };
            match d {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{m}x")?,
                _ => write!(f, "{m}x^{d}")?,
            }
        }
        Ok(())
    }
}

/// Truncated series `Σ_{n ≤ order} c_n(x) t^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodSeries {
    pub coeffs: BTreeMap<u64, XPoly>,
    pub order: u64,
}

impl PeriodSeries {
    pub fn coeff(&self, n: u64) -> XPoly {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    /// Substitute a value for `x`.
    pub fn at(&self, x: &Rational) -> BTreeMap<u64, Rational> {
        self.coeffs.iter().map(|(n, c)| (*n, c.eval(x))).collect()
    }
}

/// Multiply the coefficient of `t^n` by `n!`.
pub fn regularize(s: &PeriodSeries) -> PeriodSeries {
    PeriodSeries {
        coeffs: s.coeffs.iter().map(|(n, c)| (*n, c.scale(&factorial(*n)))).filter(|(_, c)| !c.is_zero()).collect(),
        order: s.order,
    }
}

/// `A_β̃(q_1, q_2, z) = c · q_1^{e_1} q_2^{e_2} z^{e_z}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABeta {
    pub coeff: Rational,
    pub q1: u64,
    pub q2: u64,
    pub z: i64,
}

pub fn a_beta(b: [u64; 3]) -> ABeta {
    let [b1, b2, b3] = b;
    let f = factorial;
    let num = f(2 * b1 + 2 * b2 + b3).pow(4);
    let den = f(b3) * f(b1).pow(3) * f(b2).pow(3) * f(2 * b1 + b2 + b3).pow(2) * f(b1 + 2 * b2 + b3).pow(2);
    let sign = if (b1 + b2) % 2 == 0 { Rational::one() } else { -Rational::one() };
    ABeta { coeff: sign * num / den, q1: b1 + b2, q2: b3, z: -((b1 + b2 + b3) as i64) }
}

/// `1 + ((β̃₁−β̃₂)/2)(−3B_{β̃₁} + 3B_{β̃₂} − 2B_{2β̃₁+β̃₂+β̃₃} + 2B_{β̃₁+2β̃₂+β̃₃})`.
pub fn harmonic_correction(b: [u64; 3]) -> Rational {
    let [b1, b2, b3] = b;
    let diff = Rational::new((b1 as i64 - b2 as i64).into(), 2.into());
    let inner = -q(3) * harmonic(b1) + q(3) * harmonic(b2) - q(2) * harmonic(2 * b1 + b2 + b3)
        + q(2) * harmonic(b1 + 2 * b2 + b3);
    Rational::one() + diff * inner
}

/// `G(x, t) = e^{−t(x+5)} Σ_β̃ A_β̃(t, t(x−3), 1) · (harmonic correction)`
/// through `t^order`.
pub fn quantum_period(order: u64) -> PeriodSeries {
    let mut sum: Vec<XPoly> = vec![XPoly::zero(); order as usize + 1];
    let xm3 = XPoly::linear(-3, 1);
    for b1 in 0..=order {
        for b2 in 0..=order - b1 {
            for b3 in 0..=order - b1 - b2 {
                let a = a_beta([b1, b2, b3]);
                let c = a.coeff * harmonic_correction([b1, b2, b3]);
                let n = (b1 + b2 + b3) as usize;
                sum[n] = sum[n].add(&xm3.pow(b3).scale(&c));
            }
        }
    }
    // e^{−t(x+5)}
    let minus = XPoly::linear(-5, -1);
    let exp: Vec<XPoly> = (0..=order).map(|k| minus.pow(k).scale(&(Rational::one() / factorial(k)))).collect();
    let mut coeffs = BTreeMap::new();
    for n in 0..=order as usize {
        let c = (0..=n).fold(XPoly::zero(), |acc, k| acc.add(&exp[k].mul(&sum[n - k])));
        if !c.is_zero() {
            coeffs.insert(n as u64, c);
        }
    }
    PeriodSeries { coeffs, order }
}

/// Laurent polynomial in two variables with coefficients polynomial in a
/// parameter `a`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly2 {
    pub terms: BTreeMap<(i64, i64), XPoly>,
}

impl LaurentPoly2 {
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, 0), XPoly::constant(Rational::one()));
        LaurentPoly2 { terms }
    }

    pub fn add_term(&mut self, e: (i64, i64), c: XPoly) {
        let v = self.terms.remove(&e).unwrap_or_default().add(&c);
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = LaurentPoly2::default();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                out.add_term((a1 + a2, b1 + b2), c1.mul(c2));
            }
        }
        out
    }

    pub fn constant_term(&self) -> XPoly {
        self.terms.get(&(0, 0)).cloned().unwrap_or_default()
    }
}

/// `Σ_n ct(f^n) t^n` through `t^order`.
pub fn classical_period(f: &LaurentPoly2, order: u64) -> PeriodSeries {
    let mut coeffs = BTreeMap::new();
    let mut power = LaurentPoly2::one();
    for n in 0..=order {
        let c = power.constant_term();
        if !c.is_zero() {
            coeffs.insert(n, c);
        }
        if n < order {
            power = power.mul(f);
        }
    }
    PeriodSeries { coeffs, order }
}

/// `a y + (x/y²)(1+y)³ + (1/(x y²))(1+y)⁴ + 7/y + 2/y²` in the variables
/// `(x, y)` with parameter `a`.
pub fn del_pezzo_mirror() -> LaurentPoly2 {
    let mut f = LaurentPoly2::default();
    f.add_term((0, 1), XPoly::linear(0, 1));
    for (j, c) in [1, 3, 3, 1].into_iter().enumerate() {
        f.add_term((1, j as i64 - 2), XPoly::constant(q(c)));
    }
    for (j, c) in [1, 4, 6, 4, 1].into_iter().enumerate() {
        f.add_term((-1, j as i64 - 2), XPoly::constant(q(c)));
    }
    f.add_term((0, -1), XPoly::constant(q(7)));
    f.add_term((0, -2), XPoly::constant(q(2)));
    f
}

impl fmt::Display for PeriodSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in 0..=self.order {
            writeln!(f, "t^{n} : {}", self.coeff(n))?;
        }
        Ok(())
    }
}

/// Truncation of the del Pezzo series that captures every class of degree
/// `≤ order` (the CI cone bounds `β̃₁, β̃₂` by `2·order`).
pub fn del_pezzo_truncation(order: u64) -> crate::effective::TruncationSpec {
    let o = order as i64;
    let b = |lo: i64, hi: i64| (q(lo), q(hi));
    crate::effective::TruncationSpec {
        degree_max: q(o),
        coordinate_box: Some(vec![b(-2 * o, 2 * o), b(-2 * o, 2 * o), b(0, o)]),
        z_min: -o,
        h_degree_max: 0,
    }
}

/// `q^β ↦ t^{β₁+β₂} (x−3)^{β₂}` on integral `β`.
fn specialize(beta: &[Rational], c: &Rational) -> Option<(u64, XPoly)> {
    if beta.len() != 2 || !beta.iter().all(|b| b.is_integer()) {
        return None;
    }
    let (b1, b2) = (beta[0].to_integer(), beta[1].to_integer());
    let n: i64 = (&b1 + &b2).try_into().ok()?;
    let k: u64 = b2.try_into().ok()?;
    (n >= 0).then(|| (n as u64, XPoly::linear(-3, 1).pow(k).scale(c)))
}

/// The same period read off a computed I-series: the untwisted
/// coefficients at `H = 0`, `z = 1`, times `exp(−μ)` for the untwisted
/// part `μ` of the mirror map.
pub fn quantum_period_from_series(s: &crate::iseries::ISeries, order: u64) -> crate::Result<PeriodSeries> {
    let mut sum = vec![XPoly::zero(); order as usize + 1];
    for term in s.terms.values().filter(|t| t.sector.is_untwisted()) {
        let c = term.value.substitute_h_zero().values().fold(Rational::zero(), |a, b| a + b);
        if let Some((n, p)) = specialize(&term.beta, &c) {
            if n <= order {
                sum[n as usize] = sum[n as usize].add(&p);
            }
        }
    }
    let mm = crate::iseries::mirror_map(s)?;
    let mut mu = vec![XPoly::zero(); order as usize + 1];
    for (sector, terms) in &mm.sectors {
        if !sector.is_untwisted() {
            continue;
        }
        for ((beta, zp), c) in terms {
            if *zp != 0 {
                continue;
            }
            if let Some((n, p)) = specialize(beta, c) {
                if n <= order {
                    mu[n as usize] = mu[n as usize].add(&p);
                }
            }
        }
    }
    // exp(−μ) as a truncated series; μ has no constant term.
    let mul = |a: &[XPoly], b: &[XPoly]| -> Vec<XPoly> {
        (0..=order as usize).map(|n| (0..=n).fold(XPoly::zero(), |acc, k| acc.add(&a[k].mul(&b[n - k])))).collect()
    };
    let neg_mu: Vec<XPoly> = mu.iter().map(|p| p.scale(&-Rational::one())).collect();
    let mut exp = vec![XPoly::zero(); order as usize + 1];
    exp[0] = XPoly::constant(Rational::one());
    let mut power = exp.clone();
    for k in 1..=order {
        power = mul(&power, &neg_mu);
        let scaled: Vec<XPoly> = power.iter().map(|p| p.scale(&(Rational::one() / factorial(k)))).collect();
        exp = exp.iter().zip(&scaled).map(|(a, b)| a.add(b)).collect();
    }
    let total = mul(&exp, &sum);
    let coeffs = total.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(n, c)| (n as u64, c)).collect();
    Ok(PeriodSeries { coeffs, order })
}
