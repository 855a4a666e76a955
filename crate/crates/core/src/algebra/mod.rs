//! Exact arithmetic: rationals, polynomials in the classes `H_i`, and
//! windowed Laurent series in `z`.

pub mod laurent;
pub mod linear;
pub mod mpoly;
pub mod scalar;

pub use laurent::Laurent;
pub use linear::{divide_poly, HLinearForm};
pub use mpoly::MPoly;
pub use scalar::Scalar;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;

/// `B_ℓ = Σ_{k=1}^{ℓ} 1/k`.
pub fn harmonic(l: u64) -> BigRational {
    (1..=l).fold(BigRational::zero(), |acc, k| acc + scalar::rat(1, k as i64))
}

pub fn divide_exact<C: Scalar>(numerator: &Laurent<C>, divisor: &HLinearForm) -> Result<Laurent<C>> {
    numerator.divide_exact(divisor)
}

pub fn substitute_h_zero<C: Scalar>(v: &Laurent<C>) -> std::collections::BTreeMap<i64, C> {
    v.substitute_h_zero()
}
