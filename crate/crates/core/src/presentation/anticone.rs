use std::fmt;

use super::{GEffective, Presentation};
use crate::error::{Error, Result};
use crate::lp::strictly_positive_combination;
use crate::Rational;

/// Index set `A` with `θ` in the open positive span of `{ξ_i}_{i∈A}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Anticone {
    /// Sorted, zero based.
    pub indices: Vec<usize>,
    /// Positive coefficients with `θ = Σ a_i ξ_i`.
    pub witness: Vec<Rational>,
}

impl Anticone {
    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for Anticone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", one_based(&self.indices))
    }
}

pub(crate) fn one_based(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl Presentation {
    /// Witness that `a` is an anticone, by exact LP.
    pub fn is_anticone(&self, a: &[usize]) -> Option<Vec<Rational>> {
        let mut idx = a.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if idx.iter().any(|&i| i >= self.n()) {
            return None;
        }
        let vecs: Vec<Vec<i64>> = idx.iter().map(|&i| self.weights[i].clone()).collect();
        strictly_positive_combination(&vecs, &self.theta)
    }

    fn anticone(&self, a: &[usize]) -> Option<Anticone> {
        let mut indices = a.to_vec();
        indices.sort_unstable();
        indices.dedup();
        self.is_anticone(&indices).map(|witness| Anticone { indices, witness })
    }

    /// Inclusion-minimal anticones of the torus action, sorted.
    ///
    /// A minimal anticone is linearly independent (Carathéodory), so only
    /// subsets of size at most the rank are tried.
    pub fn torus_minimal_anticones(&self) -> Vec<Anticone> {
        let n = self.n();
        assert!(n < 63, "too many weights for subset enumeration");
        let mut found: Vec<(u64, Anticone)> = Vec::new();
        let mut masks: Vec<u64> = (0..(1u64 << n)).filter(|m| m.count_ones() as usize <= self.rank).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        for mask in masks {
            if found.iter().any(|(f, _)| f & mask == *f) {
                continue;
            }
            let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if let Some(a) = self.anticone(&set) {
                found.push((mask, a));
            }
        }
        let mut out: Vec<Anticone> = found.into_iter().map(|(_, a)| a).collect();
        out.sort();
        out
    }

    /// Minimal G-effective anticones: all minimal anticones in torus mode,
    /// otherwise the supplied list after re-verification.
    pub fn minimal_g_effective_anticones(&self) -> Result<Vec<Anticone>> {
        match &self.g_effective {
            GEffective::Torus => Ok(self.torus_minimal_anticones()),
            GEffective::Explicit(sets) => {
                let mut out = Vec::with_capacity(sets.len());
                for s in sets {
                    match self.anticone(s) {
                        Some(a) => out.push(a),
                        None => return Err(Error::NotAnAnticone(s.iter().map(|i| i + 1).collect())),
                    }
                }
                out.sort();
                out.dedup_by(|a, b| a.indices == b.indices);
                Ok(out)
            }
        }
    }
}
