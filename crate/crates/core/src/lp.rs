//! Dense exact simplex for small linear programs in standard form.

use num_traits::{Signed, Zero};

use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Rational>, value: Rational },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v = &*v - &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximize `cost · x` over columns in `allowed`; Bland's rule on both
    /// the entering and the leaving choice. Returns false if unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.ncols).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        r -= &cost[b] * &self.rows[i][j];
                    }
                }
                r.is_positive()
            });
            let Some(j) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][j].is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / &self.rows[i][j];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((i, _)) => self.pivot(i, j),
                None => return false,
            }
        }
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.basis.iter().enumerate().fold(Rational::zero(), |acc, (i, &b)| acc + &cost[b] * self.rhs(i))
    }
}

/// Maximize `c·x` subject to `A x = b`, `x >= 0`, by the two-phase method.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    assert_eq!(b.len(), m);
    let ncols = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (ai, bi)) in a.iter().zip(b).enumerate() {
        assert_eq!(ai.len(), n);
        let flip = bi.is_negative();
        let mut row: Vec<Rational> = ai.iter().map(|v| if flip { -v } else { v.clone() }).collect();
        row.extend((0..m).map(|k| if k == i { Rational::from_integer(1.into()) } else { Rational::zero() }));
        row.push(if flip { -bi } else { bi.clone() });
        rows.push(row);
    }
    let mut t = Tableau { rows, basis: (n..n + m).collect(), ncols };

    let mut phase1 = vec![Rational::zero(); ncols];
    for v in phase1.iter_mut().skip(n) {
        *v = Rational::from_integer((-1).into());
    }
    t.optimize(&phase1, &vec![true; ncols]);
    if !t.objective(&phase1).is_zero() {
        return LpOutcome::Infeasible;
    }
    // Drive artificial variables out of the basis, dropping redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut cost = c.to_vec();
    cost.extend((0..m).map(|_| Rational::zero()));
    let allowed: Vec<bool> = (0..ncols).map(|j| j < n).collect();
    if !t.optimize(&cost, &allowed) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bcol) in t.basis.iter().enumerate() {
        if bcol < n {
            x[bcol] = t.rhs(i).clone();
        }
    }
    let value = x.iter().zip(c).fold(Rational::zero(), |acc, (xi, ci)| acc + xi * ci);
    LpOutcome::Optimal { x, value }
}

/// Positive rational `a` with `Σ a_i v_i = target`, if one exists.
///
/// Solves `max t` subject to `Σ a_i v_i = target`, `a_i - t - s_i = 0`,
/// `t + u = 1`, all variables nonnegative.
pub fn strictly_positive_combination(vectors: &[Vec<i64>], target: &[i64]) -> Option<Vec<Rational>> {
    let k = vectors.len();
    let m = target.len();
    if k == 0 {
        return target.iter().all(|&x| x == 0).then(Vec::new);
    }
    let q = |v: i64| Rational::from_integer(v.into());
    // Columns: a_0..a_{k-1}, s_0..s_{k-1}, t, u.
    let nv = 2 * k + 2;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for r in 0..m {
        let mut row = vec![Rational::zero(); nv];
        for (i, v) in vectors.iter().enumerate() {
            row[i] = q(v[r]);
        }
        a.push(row);
        b.push(q(target[r]));
    }
    for i in 0..k {
        let mut row = vec![Rational::zero(); nv];
        row[i] = q(1);
        row[k + i] = q(-1);
        row[2 * k] = q(-1);
        a.push(row);
        b.push(Rational::zero());
    }
    let mut row = vec![Rational::zero(); nv];
    row[2 * k] = q(1);
    row[2 * k + 1] = q(1);
    a.push(row);
    b.push(q(1));
    let mut c = vec![Rational::zero(); nv];
    c[2 * k] = q(1);

    match maximize(&a, &b, &c) {
        LpOutcome::Optimal { x, value } if value.is_positive() => {
            let w: Vec<Rational> = x[..k].to_vec();
            let ok = w.iter().all(|v| v.is_positive())
                && (0..m).all(|r| {
                    vectors.iter().zip(&w).fold(Rational::zero(), |acc, (v, wi)| acc + q(v[r]) * wi) == q(target[r])
                });
            ok.then_some(w)
        }
        _ => None,
    }
}
