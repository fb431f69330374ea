use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{RootSystem, Weight};
use crate::error::{Error, Result};

/// An element of the Weyl group acting on Dynkin-label coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    /// Row-major `rank × rank` integer matrix; acts on label column vectors.
    pub matrix: Vec<i64>,
    pub sign: i8,
    pub length: u32,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        WeylElement {
            matrix,
            sign: 1,
            length: 0,
        }
    }

    pub fn rank(&self) -> usize {
        (self.matrix.len() as f64).sqrt() as usize
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let n = w.rank();
        let x = w.labels();
        Weight::new(
            (0..n)
                .map(|i| (0..n).map(|j| self.matrix[i * n + j] * x[j]).sum())
                .collect(),
        )
    }

    /// Writes `self · x` into `out` without allocating.
    pub fn apply_into(&self, x: &[i64], out: &mut [i64]) {
        let n = x.len();
        for i in 0..n {
            let row = &self.matrix[i * n..(i + 1) * n];
            out[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    /// Determinant of the matrix, computed independently of `sign`.
    pub fn determinant(&self) -> i64 {
        let n = self.rank();
        let mut a: Vec<Vec<num::rational::Rational64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| num::rational::Rational64::from_integer(self.matrix[i * n + j]))
                    .collect()
            })
            .collect();
        let mut det = num::rational::Rational64::from_integer(1);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r][c] != 0.into()) else {
                return 0;
            };
            if p != c {
                a.swap(c, p);
                det = -det;
            }
            det *= a[c][c];
            for r in c + 1..n {
                let f = a[r][c] / a[c][c];
                for j in c..n {
                    let v = a[c][j];
                    a[r][j] -= f * v;
                }
            }
        }
        det.to_integer()
    }
}

/// Matrix of the simple reflection `s_i` on label coordinates.
fn reflection_matrix(rs: &RootSystem, i: usize) -> Vec<i64> {
    let n = rs.rank();
    let mut m = vec![0i64; n * n];
    for j in 0..n {
        m[j * n + j] = 1;
        m[j * n + i] -= rs.cartan()[i][j];
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// Enumerates the Weyl group by breadth-first closure under left
/// multiplication by simple reflections. The identity comes first and the
/// BFS depth of each element is its length.
pub fn weyl_group(rs: &RootSystem, cap: usize) -> Result<Vec<WeylElement>> {
    let order = rs.weyl_order();
    if order > cap as u128 {
        return Err(Error::WeylCapExceeded {
            algebra: rs.to_string(),
            order,
            cap,
        });
    }
    let n = rs.rank();
    let gens: Vec<Vec<i64>> = (0..n).map(|i| reflection_matrix(rs, i)).collect();
    let id = WeylElement::identity(n);
    let mut seen: HashSet<Vec<i64>> = HashSet::with_capacity(order as usize);
    seen.insert(id.matrix.clone());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let (matrix, length) = (out[head].matrix.clone(), out[head].length);
        head += 1;
        for g in &gens {
            let next = mat_mul(g, &matrix, n);
            if seen.insert(next.clone()) {
                if out.len() >= cap {
                    return Err(Error::WeylCapExceeded {
                        algebra: rs.to_string(),
                        order: out.len() as u128 + 1,
                        cap,
                    });
                }
                let length = length + 1;
                out.push(WeylElement {
                    matrix: next,
                    sign: if length % 2 == 0 { 1 } else { -1 },
                    length,
                });
            }
        }
    }
    Ok(out)
}

impl RootSystem {
    /// Dominant conjugate of `w`, with the sign `(-1)^ℓ` of the reflections used.
    pub fn to_dominant(&self, w: &Weight) -> (Weight, i64) {
        let mut x = w.clone();
        let mut sign = 1;
        while let Some(i) = x.labels().iter().position(|&a| a < 0) {
            x = self.reflect(i, &x);
            sign = -sign;
        }
        (x, sign)
    }

    /// The Weyl orbit of a weight, in BFS order from `w`.
    pub fn orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        let mut out = vec![];
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank() {
                if x.labels()[i] != 0 {
                    let y = self.reflect(i, &x);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
            out.push(x);
        }
        out
    }

    /// Matrix of the longest element of the parabolic subgroup generated by
    /// the simple reflections in `nodes`.
    pub(crate) fn longest_element(&self, nodes: &[usize]) -> Vec<i64> {
        let n = self.rank();
        let mut m = WeylElement::identity(n).matrix;
        let mut x = self.rho();
        while let Some(&i) = nodes.iter().find(|&&i| x.labels()[i] > 0) {
            x = self.reflect(i, &x);
            m = mat_mul(&reflection_matrix(self, i), &m, n);
        }
        m
    }
}

pub(crate) fn matrix_apply(m: &[i64], w: &Weight) -> Weight {
    let n = w.rank();
    let x = w.labels();
    Weight::new(
        (0..n)
            .map(|i| (0..n).map(|j| m[i * n + j] * x[j]).sum())
            .collect(),
    )
}

pub(crate) fn matrix_product(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    mat_mul(a, b, n)
}
