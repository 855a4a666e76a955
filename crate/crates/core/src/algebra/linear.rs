use std::fmt;

use super::mpoly::MPoly;
use super::scalar::{int, Scalar};
use crate::error::{Error, Result};

/// Nonzero integer linear form `Σ a_i H_i`, e.g. `c_1(L_ρ)` for a root ρ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HLinearForm {
    coeffs: Vec<i64>,
}

impl HLinearForm {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.iter().all(|&a| a == 0) {
            return Err(Error::Shape("linear form must be nonzero".into()));
        }
        Ok(HLinearForm { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Representative of `{l, -l}` whose first nonzero coefficient is
    /// positive, together with the sign relating it to `self`.
    pub fn canonical(&self) -> (HLinearForm, i64) {
        let lead = self.coeffs.iter().copied().find(|&a| a != 0).unwrap_or(1);
        if lead > 0 {
            (self.clone(), 1)
        } else {
            (HLinearForm { coeffs: self.coeffs.iter().map(|a| -a).collect() }, -1)
        }
    }

    pub fn to_poly<C: Scalar>(&self) -> MPoly<C> {
        MPoly::linear(&self.coeffs)
    }

    fn leading_index(&self) -> usize {
        self.coeffs.iter().position(|&a| a != 0).expect("nonzero form")
    }
}

impl fmt::Display for HLinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly::<num_rational::BigRational>())
    }
}

/// Exact quotient `p / l` by lex long division.
///
/// The leading monomial of `l` is `H_i` for the first nonzero coefficient,
/// so each step cancels the lex-leading term of the remainder or fails.
pub fn divide_poly<C: Scalar>(p: &MPoly<C>, l: &HLinearForm) -> Result<MPoly<C>> {
    let n = p.nvars();
    if l.coeffs.len() != n {
        return Err(Error::Shape(format!("form has {} coefficients, polynomial has {} variables", l.coeffs.len(), n)));
    }
    let i0 = l.leading_index();
    let a0: C = int(l.coeffs[i0]);
    let lp = l.to_poly::<C>();
    let mut rem = p.clone();
    let mut quot = MPoly::zero(n);
    while let Some((e, c)) = rem.leading() {
        if e[i0] == 0 {
            return Err(Error::NotDivisible { divisor: l.to_string() });
        }
        let mut qe = e.clone();
        qe[i0] -= 1;
        let term = MPoly::from_terms(n, [(qe, c.clone() / a0.clone())]);
        rem = &rem - &(&term * &lp);
        quot = &quot + &term;
    }
    Ok(quot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;
    use crate::Rational;

    type P = MPoly<Rational>;

    #[test]
    fn canonical_flips_sign() {
        let l = HLinearForm::new(vec![0, -1, 2]).unwrap();
        let (c, s) = l.canonical();
        assert_eq!(c.coeffs(), &[0, 1, -2]);
        assert_eq!(s, -1);
        assert!(HLinearForm::new(vec![0, 0]).is_err());
    }

    #[test]
    fn remainder_is_reported() {
        let l = HLinearForm::new(vec![1, -1]).unwrap();
        let p = &P::var(2, 0) + &P::constant(2, rat(1, 1));
        assert!(matches!(divide_poly(&p, &l), Err(Error::NotDivisible { .. })));
    }
}
