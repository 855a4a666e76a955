//! Small dense exact linear algebra over `Q`.

use num_traits::{One, Zero};

use crate::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn from_int(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect()).collect()
}

/// Row echelon form in place; returns the pivot columns.
fn echelon(m: &mut Matrix) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v = &*v - &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m = from_int(rows);
    echelon(&mut m).len()
}

/// Indices of a maximal linearly independent subfamily, chosen greedily.
pub fn independent_subset(vectors: &[Vec<i64>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..vectors.len() {
        let mut trial: Vec<Vec<i64>> = chosen.iter().map(|&j| vectors[j].clone()).collect();
        trial.push(vectors[i].clone());
        if rank(&trial) == trial.len() {
            chosen.push(i);
        }
    }
    chosen
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let piv = echelon(&mut aug);
    if piv.len() < n || piv[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det(a: &Matrix) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return Rational::zero() };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[c][c];
                let (top, rest) = m.split_at_mut(i);
                for (x, y) in rest[0][c..].iter_mut().zip(&top[c][c..]) {
                    *x -= &f * y;
                }
            }
        }
    }
    d
}

pub fn mat_vec(a: &Matrix, v: &[Rational]) -> Vec<Rational> {
    a.iter().map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (x, y)| acc + x * y)).collect()
}

/// `Wᵀ v` for an integer matrix `W`.
pub fn int_transpose_apply(w: &[Vec<i64>], v: &[Rational]) -> Vec<Rational> {
    let n = w.first().map_or(0, |r| r.len());
    (0..n)
        .map(|j| {
            w.iter().zip(v).fold(Rational::zero(), |acc, (row, x)| acc + x * Rational::from_integer(row[j].into()))
        })
        .collect()
}

/// `W v` for integer `W` and `v`.
pub fn int_apply(w: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    w.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat_int;

    #[test]
    fn rank_inverse_det() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        let a = from_int(&[vec![2, 1], vec![1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, from_int(&[vec![1, -1], vec![-1, 2]]));
        assert_eq!(det(&from_int(&[vec![-1, 2], vec![2, -1]])), rat_int(-3));
        assert!(inverse(&from_int(&[vec![1, 2], vec![2, 4]])).is_none());
        assert_eq!(independent_subset(&[vec![1, 0], vec![2, 0], vec![0, 1]]), vec![0, 2]);
    }
}
