//! Exact dense linear algebra over cyclotomic fields.

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<CycloNum>>;

/// Rank by Gaussian elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("pivot is nonzero");
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..cols {
                let t = &f * &a[r][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// `PA = LU` factorization of a square matrix, unit lower-triangular `L`.
#[derive(Clone, Debug)]
pub struct Lu {
    lu: Matrix,
    perm: Vec<usize>,
}

impl Lu {
    pub fn new(m: &Matrix) -> Result<Self> {
        let n = m.len();
        let mut a = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(Error::Singular)?;
            a.swap(c, p);
            perm.swap(c, p);
            let inv = a[c][c].inv()?;
            for i in c + 1..n {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = &a[i][c] * &inv;
                for j in c + 1..n {
                    let t = &f * &a[c][j];
                    a[i][j] = &a[i][j] - &t;
                }
                a[i][c] = f;
            }
        }
        Ok(Lu { lu: a, perm })
    }

    pub fn dim(&self) -> usize {
        self.lu.len()
    }

    /// Solves `A x = b`.
    pub fn solve(&self, b: &[CycloNum]) -> Vec<CycloNum> {
        let n = self.dim();
        let mut y: Vec<CycloNum> = self.perm.iter().map(|&p| b[p].clone()).collect();
        for i in 0..n {
            for j in 0..i {
                if !self.lu[i][j].is_zero() {
                    let t = &self.lu[i][j] * &y[j];
                    y[i] = &y[i] - &t;
                }
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                if !self.lu[i][j].is_zero() {
                    let t = &self.lu[i][j] * &y[j];
                    y[i] = &y[i] - &t;
                }
            }
            y[i] = &y[i] / &self.lu[i][i];
        }
        y
    }
}

pub fn solve(m: &Matrix, b: &[CycloNum]) -> Result<Vec<CycloNum>> {
    Ok(Lu::new(m)?.solve(b))
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let lu = Lu::new(m)?;
    let cols: Vec<Vec<CycloNum>> = (0..n)
        .map(|j| {
            let e: Vec<CycloNum> = (0..n)
                .map(|i| CycloNum::from_integer((i == j) as i64))
                .collect();
            lu.solve(&e)
        })
        .collect();
    Ok((0..n)
        .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
        .collect())
}

pub fn transpose(m: &Matrix) -> Matrix {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let p = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: &[&[i64]]) -> Matrix {
        v.iter()
            .map(|r| r.iter().map(|&x| CycloNum::from_integer(x)).collect())
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&int(&[&[1, 1], &[-1, -1]])), 1);
        assert_eq!(rank(&int(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(&int(&[&[0, 0], &[0, 0]])), 0);
        let w = CycloNum::zeta(3, 1);
        let m = vec![
            vec![CycloNum::one(), w.clone()],
            vec![w.clone(), &w * &w],
        ];
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let z = CycloNum::zeta(5, 1);
        let m = vec![
            vec![CycloNum::one(), z.clone(), CycloNum::from_integer(2)],
            vec![&z * &z, CycloNum::zero(), CycloNum::one()],
            vec![CycloNum::from_integer(3), z.clone(), z.pow(3)],
        ];
        let inv = inverse(&m).unwrap();
        let id = mul(&m, &inv);
        for (i, row) in id.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(x, &CycloNum::from_integer((i == j) as i64));
            }
        }
        assert!(matches!(Lu::new(&int(&[&[1, 1], &[1, 1]])), Err(Error::Singular)));
    }
}
