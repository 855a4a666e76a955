//! GIT and complete-intersection GIT presentations: data, validation,
//! anticones and extensions.

mod anticone;
mod extend;

pub use anticone::Anticone;
pub use extend::{
    extend_by_sector, extend_e_weights, extend_presentation, extended_anticones_check, sector_extension,
    SectorExtension,
};

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::algebra::scalar::dot_int;
use crate::error::{Error, Result, Violation};
use crate::linalg;
use crate::Rational;

pub const ORBIT_CAP: usize = 10_000;

/// Which anticones are G-effective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GEffective {
    /// Every anticone (the group is the torus).
    Torus,
    /// Minimal G-effective anticones, zero based.
    Explicit(Vec<Vec<usize>>),
}

/// Complete-intersection effectiveness descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CiEffective {
    /// `Y = X`: CI-effective coincides with I-effective.
    All,
    /// CI-effective iff the class lies in `C_A` for a listed `A` (zero based).
    Anticones(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labels {
    pub weights: Vec<String>,
    /// Sector label such as `"1/2,0"` to a display name.
    pub sectors: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub rank: usize,
    /// Weight columns `ξ_i`, each of length `rank`.
    pub weights: Vec<Vec<i64>>,
    pub theta: Vec<i64>,
    pub roots: Vec<Vec<i64>>,
    /// Columns `ε_j` of the bundle `E`.
    pub e_weights: Vec<Vec<i64>>,
    /// Row-major integer matrices acting on `χ(T)` by `ξ ↦ Wξ`.
    pub weyl_generators: Vec<Vec<Vec<i64>>>,
    pub g_effective: GEffective,
    /// Rows of the restriction map `Q^rank → Q^g`.
    pub restriction: Vec<Vec<Rational>>,
    pub ci_effective: Option<CiEffective>,
    pub labels: Labels,
    /// Last torus coordinate is the `G_m` factor of an extension.
    pub extended: bool,
}

fn identity_rational(m: usize) -> Vec<Vec<Rational>> {
    (0..m).map(|i| (0..m).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

fn multiset(v: &[Vec<i64>]) -> BTreeMap<Vec<i64>, usize> {
    let mut out = BTreeMap::new();
    for x in v {
        *out.entry(x.clone()).or_insert(0) += 1;
    }
    out
}

impl Presentation {
    /// Torus-mode presentation with identity restriction.
    pub fn torus(weights: Vec<Vec<i64>>, theta: Vec<i64>) -> Self {
        let rank = theta.len();
        Presentation {
            rank,
            weights,
            theta,
            roots: Vec::new(),
            e_weights: Vec::new(),
            weyl_generators: Vec::new(),
            g_effective: GEffective::Torus,
            restriction: identity_rational(rank),
            ci_effective: None,
            labels: Labels::default(),
            extended: false,
        }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// `β̃(ξ_i)` for every weight.
    pub fn pairings(&self, beta: &[Rational]) -> Vec<Rational> {
        self.weights.iter().map(|xi| dot_int(beta, xi)).collect()
    }

    pub fn e_pairings(&self, beta: &[Rational]) -> Vec<Rational> {
        self.e_weights.iter().map(|e| dot_int(beta, e)).collect()
    }

    pub fn restrict(&self, beta: &[Rational]) -> Vec<Rational> {
        linalg::mat_vec(&self.restriction, beta)
    }

    /// `Σ ξ_i − Σ ε_j`, the class whose pairing gives `deg q^β`.
    pub fn degree_vector(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for xi in &self.weights {
            for (a, b) in v.iter_mut().zip(xi) {
                *a += b;
            }
        }
        for e in &self.e_weights {
            for (a, b) in v.iter_mut().zip(e) {
                *a -= b;
            }
        }
        v
    }

    /// Closure of `{β̃}` under `β̃ ↦ Wᵀβ̃`, sorted.
    pub fn orbit(&self, beta: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
        let mut stack = vec![beta.to_vec()];
        seen.insert(beta.to_vec());
        while let Some(b) = stack.pop() {
            for w in &self.weyl_generators {
                let img = linalg::int_transpose_apply(w, &b);
                if seen.insert(img.clone()) {
                    if seen.len() > ORBIT_CAP {
                        return Err(Error::OrbitTooLarge(ORBIT_CAP));
                    }
                    stack.push(img);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn is_weyl_invariant(&self, beta: &[Rational]) -> bool {
        self.weyl_generators.iter().all(|w| linalg::int_transpose_apply(w, beta) == beta)
    }

    fn check_shape(&self) -> Vec<Violation> {
        let m = self.rank;
        let mut out = Vec::new();
        let mut bad = |msg: String| out.push(Violation { code: "shape", message: msg });
        if m == 0 {
            bad("torus rank must be positive".into());
        }
        if self.theta.len() != m {
            bad(format!("theta has length {}, rank is {m}", self.theta.len()));
        }
        for (what, list) in [("weight", &self.weights), ("root", &self.roots), ("e-weight", &self.e_weights)] {
            for (i, v) in list.iter().enumerate() {
                if v.len() != m {
                    bad(format!("{what} {} has length {}, rank is {m}", i + 1, v.len()));
                }
            }
        }
        for (k, w) in self.weyl_generators.iter().enumerate() {
            if w.len() != m || w.iter().any(|r| r.len() != m) {
                bad(format!("Weyl generator {} is not {m}x{m}", k + 1));
            }
        }
        if self.restriction.is_empty() || self.restriction.iter().any(|r| r.len() != m) {
            bad(format!("restriction rows must have length {m}"));
        }
        let n = self.n();
        let sets: Vec<&Vec<usize>> = match (&self.g_effective, &self.ci_effective) {
            (GEffective::Explicit(a), Some(CiEffective::Anticones(b))) => a.iter().chain(b.iter()).collect(),
            (GEffective::Explicit(a), _) => a.iter().collect(),
            (_, Some(CiEffective::Anticones(b))) => b.iter().collect(),
            _ => Vec::new(),
        };
        for s in sets {
            if s.iter().any(|&i| i >= n) {
                bad(format!("index set {:?} refers past weight {n}", s.iter().map(|i| i + 1).collect::<Vec<_>>()));
            }
        }
        out
    }

    /// Structural violations; empty when the presentation is usable.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.check_shape();
        if !out.is_empty() {
            return out;
        }
        let ws = multiset(&self.weights);
        let es = multiset(&self.e_weights);
        let rs = multiset(&self.roots);
        for (k, w) in self.weyl_generators.iter().enumerate() {
            let img = |v: &[Vec<i64>]| multiset(&v.iter().map(|x| linalg::int_apply(w, x)).collect::<Vec<_>>());
            let mut fails = Vec::new();
            if img(&self.weights) != ws {
                fails.push("weights");
            }
            if img(&self.e_weights) != es {
                fails.push("e-weights");
            }
            if img(&self.roots) != rs {
                fails.push("roots");
            }
            if linalg::int_apply(w, &self.theta) != self.theta {
                fails.push("theta");
            }
            if !fails.is_empty() {
                out.push(Violation {
                    code: "weyl-action",
                    message: format!("generator {} does not preserve {}", k + 1, fails.join(", ")),
                });
            }
            // R·Wᵀ = R, i.e. r(Wᵀβ̃) = r(β̃) on a basis.
            let ok = (0..self.rank).all(|j| {
                let mut e = vec![Rational::zero(); self.rank];
                e[j] = Rational::one();
                self.restrict(&linalg::int_transpose_apply(w, &e)) == self.restrict(&e)
            });
            if !ok {
                out.push(Violation {
                    code: "weyl-restriction",
                    message: format!("restriction is not invariant under generator {}", k + 1),
                });
            }
        }
        if self.g_effective == GEffective::Torus
            && (!self.roots.is_empty() || self.restriction != identity_rational(self.rank))
        {
            out.push(Violation {
                code: "torus-mode",
                message: "torus mode needs no roots and the identity restriction".into(),
            });
        }
        for r in &self.roots {
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            if !self.roots.contains(&neg) || r.iter().all(|&x| x == 0) {
                out.push(Violation { code: "roots-symmetric", message: format!("root {r:?} has no negative partner") });
            }
        }
        let all: Vec<usize> = (0..self.n()).collect();
        if self.is_anticone(&all).is_none() || linalg::rank(&self.weights) < self.rank {
            out.push(Violation {
                code: "no-anticone",
                message: "no anticone has weights spanning the character space".into(),
            });
        }
        if let GEffective::Explicit(sets) = &self.g_effective {
            for s in sets {
                if self.is_anticone(s).is_none() {
                    out.push(Violation {
                        code: "g-effective-not-anticone",
                        message: format!("{} is not an anticone", anticone::one_based(s)),
                    });
                }
            }
        }
        out
    }

    pub fn validated(self) -> Result<Self> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::Validation(v))
        }
    }
}
