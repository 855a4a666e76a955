use num_traits::{One, Signed, Zero};

use crate::algebra::scalar::{dot_int, frac, is_integer};
use crate::algebra::Laurent;
use crate::effective::TruncationSpec;
use crate::{Rational, ZLaurent};

/// `c_1(L_ξ) + k z`, with `k = 0` for a bare first Chern class.
#[derive(Clone, Debug, PartialEq)]
pub struct Affine {
    pub xi: Vec<i64>,
    pub k: Rational,
}

/// A ratio of products of affine factors.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CFactor {
    pub numer: Vec<Affine>,
    pub denom: Vec<Affine>,
}

impl CFactor {
    pub fn inverse(self) -> Self {
        CFactor { numer: self.denom, denom: self.numer }
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_empty() && self.denom.is_empty()
    }

    pub fn absorb(&mut self, other: CFactor) {
        self.numer.extend(other.numer);
        self.denom.extend(other.denom);
    }

    /// Expand as a Laurent series exact down to `z^{t.z_min}` modulo
    /// `H^{>h_cap}`. Denominators must have `k != 0`.
    pub fn to_laurent(&self, rank: usize, t: &TruncationSpec, h_cap: u32) -> ZLaurent {
        let hi_total = self.numer.len() as i64 - self.denom.len() as i64;
        let mut out = Laurent::one(rank).with_cap(h_cap);
        for a in &self.numer {
            out = &out * &Laurent::affine(&a.xi, a.k.clone());
        }
        let terms = (hi_total + 1 - t.z_min).max(1) as u32;
        for a in &self.denom {
            out = &out * &Laurent::inverse_affine(&a.xi, a.k.clone(), terms, Some(h_cap));
        }
        out
    }
}

/// `C(β̃, ξ)`, or `C°(β̃, ξ)` when `circ`.
///
/// For `v = β̃(ξ) ≤ 0` this is `∏_{v<k<0, k≡v} (c + kz)`, with an extra
/// `c` when `v ∈ Z_{<0}` and not `circ`; for `v > 0` it is the inverse of
/// `∏_{0<k≤v, k≡v} (c + kz)`.
pub fn c_factor(beta: &[Rational], xi: &[i64], circ: bool) -> CFactor {
    c_factor_at(&dot_int(beta, xi), xi, circ)
}

pub(crate) fn c_factor_at(v: &Rational, xi: &[i64], circ: bool) -> CFactor {
    let mut out = CFactor::default();
    if v.is_positive() {
        let mut k = v.clone();
        while k.is_positive() {
            out.denom.push(Affine { xi: xi.to_vec(), k: k.clone() });
            k -= Rational::one();
        }
    } else {
        let mut k = v + Rational::one();
        while k.is_negative() {
            out.numer.push(Affine { xi: xi.to_vec(), k: k.clone() });
            k += Rational::one();
        }
        if !circ && is_integer(v) && !v.is_zero() {
            out.numer.push(Affine { xi: xi.to_vec(), k: Rational::zero() });
        }
    }
    out
}

/// Total degree of `C(v)` in `(H, z)`: `−v − frac(−v)`.
pub fn c_degree(v: &Rational) -> Rational {
    -v - frac(&-v)
}
