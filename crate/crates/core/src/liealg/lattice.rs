use serde::Serialize;

use super::weyl::{matrix_apply, matrix_product};
use super::{RootSystem, Weight};
use crate::error::{Error, Result};

/// The finite abelian group `P/Q` with level-1 dominant representatives.
#[derive(Clone, Debug, Serialize)]
pub struct DiscriminantGroup {
    /// Coset representatives; index 0 is the zero weight.
    pub representatives: Vec<Weight>,
    /// `table[i][j]` is the index of the coset of `rep_i + rep_j`.
    pub table: Vec<Vec<usize>>,
    /// Invariant factors `d_1 | d_2 | ...` (factors equal to 1 omitted).
    pub invariant_factors: Vec<i64>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> usize {
        self.representatives.len()
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.table[i].iter().position(|&k| k == 0).unwrap()
    }
}

/// Invariant factors of an integer matrix (Smith normal form diagonal),
/// dropping unit factors.
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = vec![];
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for i in t..rows {
                        a[i][j] -= q * a[i][t];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // Divisibility of the rest of the block by the pivot.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                    }
                }
            } else {
                // Move the smallest remaining entry of row/column t to the pivot.
                let mut best = (t, t);
                for i in t..rows {
                    if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t..cols {
                    if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                a.swap(t, best.0);
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag.into_iter().filter(|&d| d != 1).collect()
}

impl RootSystem {
    /// The discriminant group `P/Q` of a simply-laced root system.
    pub fn discriminant_group(&self) -> Result<DiscriminantGroup> {
        if !self.is_simply_laced() {
            return Err(Error::NotSimplyLaced("discriminant_group".into()));
        }
        let representatives = self.dominant_weights_of_level(1);
        let n = representatives.len();
        let mut table = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                let sum = &representatives[i] + &representatives[j];
                table[i][j] = self.coset_index(&representatives, &sum);
            }
        }
        Ok(DiscriminantGroup {
            representatives,
            table,
            invariant_factors: smith_invariants(self.cartan()),
        })
    }

    fn coset_index(&self, reps: &[Weight], w: &Weight) -> usize {
        reps.iter()
            .position(|r| self.in_root_lattice(&(w - r)))
            .expect("level-1 weights represent every class of P/Q for simply-laced types")
    }

    /// Index of the `P/Q` class of `w` among the level-1 representatives.
    pub fn discriminant_class(&self, w: &Weight) -> Result<usize> {
        let reps = self.discriminant_group()?.representatives;
        Ok(self.coset_index(&reps, w))
    }

    /// Simple-current action of the class with representative index `j`
    /// on level-`m` dominant weights, realized as `λ ↦ m ω_j + w_0^{(j)} w_0 λ`
    /// (an automorphism of the extended Dynkin diagram).
    pub fn simple_current_action(&self, j: usize, m: i64, w: &Weight) -> Result<Weight> {
        let group = self.discriminant_group()?;
        let rep = group
            .representatives
            .get(j)
            .ok_or_else(|| Error::InvalidLabel(format!("no discriminant class {j}")))?;
        Ok(self.current_action_for(rep, m, w))
    }

    pub(crate) fn current_action_for(&self, rep: &Weight, m: i64, w: &Weight) -> Weight {
        let Some(node) = rep.labels().iter().position(|&a| a != 0) else {
            return w.clone();
        };
        let n = self.rank();
        let all: Vec<usize> = (0..n).collect();
        let others: Vec<usize> = (0..n).filter(|&i| i != node).collect();
        let w0 = self.longest_element(&all);
        let w0j = self.longest_element(&others);
        let linear = matrix_product(&w0j, &w0, n);
        let moved = matrix_apply(&linear, w);
        &moved + &Weight::fundamental(n, node).scaled(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_root_system, Family};

    #[test]
    fn discriminant_examples() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        let g = a1.discriminant_group().unwrap();
        assert_eq!(g.representatives, vec![Weight::new(vec![0]), Weight::new(vec![1])]);
        assert_eq!(g.invariant_factors, vec![2]);
        assert_eq!(g.table, vec![vec![0, 1], vec![1, 0]]);

        let a2 = build_root_system(Family::A, 2).unwrap();
        let g = a2.discriminant_group().unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.invariant_factors, vec![3]);

        let e8 = build_root_system(Family::E, 8).unwrap();
        let g = e8.discriminant_group().unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.invariant_factors.is_empty());

        let b3 = build_root_system(Family::B, 3).unwrap();
        assert!(matches!(b3.discriminant_group(), Err(Error::NotSimplyLaced(_))));
    }

    #[test]
    fn discriminant_orders_are_cartan_determinants() {
        for (f, n) in [
            (Family::A, 1),
            (Family::A, 4),
            (Family::D, 4),
            (Family::D, 5),
            (Family::D, 6),
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
        ] {
            let rs = build_root_system(f, n).unwrap();
            let g = rs.discriminant_group().unwrap();
            assert_eq!(g.order() as i64, rs.cartan_determinant(), "{f}{n}");
            assert_eq!(g.invariant_factors.iter().product::<i64>(), rs.cartan_determinant());
        }
        let d4 = build_root_system(Family::D, 4).unwrap();
        assert_eq!(d4.discriminant_group().unwrap().invariant_factors, vec![2, 2]);
        let d5 = build_root_system(Family::D, 5).unwrap();
        assert_eq!(d5.discriminant_group().unwrap().invariant_factors, vec![4]);
    }

    #[test]
    fn current_action_permutes_alcove_and_composes_like_the_group() {
        for (f, n, m) in [
            (Family::A, 1, 3),
            (Family::A, 2, 2),
            (Family::A, 3, 2),
            (Family::D, 4, 2),
            (Family::D, 5, 1),
            (Family::E, 6, 1),
        ] {
            let rs = build_root_system(f, n).unwrap();
            let g = rs.discriminant_group().unwrap();
            let alcove = rs.dominant_weights_of_level(m);
            for j in 0..g.order() {
                let mut images: Vec<Weight> = alcove
                    .iter()
                    .map(|w| rs.simple_current_action(j, m, w).unwrap())
                    .collect();
                for (w, img) in alcove.iter().zip(&images) {
                    assert!(img.is_dominant() && rs.level_of(img) <= m, "{f}{n}");
                    // The action shifts the P/Q class by the class of m ω_j.
                    let shift = g.representatives[j].scaled(m);
                    assert!(rs.in_root_lattice(&(&(img - w) - &shift)));
                }
                images.sort();
                assert_eq!(images, alcove, "{f}{n} current {j} is a bijection");
                for k in 0..g.order() {
                    let jk = g.table[j][k];
                    for w in &alcove {
                        let a = rs.simple_current_action(j, m, &rs.simple_current_action(k, m, w).unwrap()).unwrap();
                        let b = rs.simple_current_action(jk, m, w).unwrap();
                        assert_eq!(a, b, "{f}{n} J{j}J{k}");
                    }
                }
            }
        }
    }

    #[test]
    fn a1_current_is_the_flip() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        for a in 0..=4 {
            let img = a1.simple_current_action(1, 4, &Weight::new(vec![a])).unwrap();
            assert_eq!(img, Weight::new(vec![4 - a]));
        }
    }
}
