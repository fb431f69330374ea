use std::fmt::{self, Display, Write as _};

use serde::{Serialize, Serializer};
use serde::ser::SerializeStruct;

/// Fusion multiplicities `N_{ij}^k` over an ordered list of simple objects.
/// Index 0 is the unit object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTable<L> {
    pub algebra: String,
    pub rank: usize,
    /// Level, written as an exact rational.
    pub level: String,
    pub simples: Vec<L>,
    mult: Vec<u64>,
}

impl<L> FusionTable<L> {
    pub fn new(algebra: String, rank: usize, level: String, simples: Vec<L>) -> Self {
        let n = simples.len();
        FusionTable {
            algebra,
            rank,
            level,
            simples,
            mult: vec![0; n * n * n],
        }
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.len();
        (i * n + j) * n + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.mult[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: u64) {
        let t = self.idx(i, j, k);
        self.mult[t] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, k: usize, v: u64) {
        let t = self.idx(i, j, k);
        self.mult[t] += v;
    }

    /// Nonzero `(k, N_{ij}^k)` pairs.
    pub fn row(&self, i: usize, j: usize) -> Vec<(usize, u64)> {
        (0..self.len())
            .filter_map(|k| {
                let v = self.get(i, j, k);
                (v != 0).then_some((k, v))
            })
            .collect()
    }

    pub fn entries(&self) -> Vec<[u64; 4]> {
        let n = self.len();
        let mut out = vec![];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.get(i, j, k);
                    if v != 0 {
                        out.push([i as u64, j as u64, k as u64, v]);
                    }
                }
            }
        }
        out
    }

    /// `N_{0j}^k = δ_{jk}`.
    pub fn check_unit(&self) -> bool {
        let n = self.len();
        (0..n).all(|j| (0..n).all(|k| self.get(0, j, k) == (j == k) as u64))
    }

    pub fn check_symmetry(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.get(i, j, k) == self.get(j, i, k))))
    }

    /// `Σ_m N_{ij}^m N_{mk}^l = Σ_m N_{jk}^m N_{im}^l`.
    pub fn check_associativity(&self) -> bool {
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let lhs: u64 = (0..n).map(|m| self.get(i, j, m) * self.get(m, k, l)).sum();
                        let rhs: u64 = (0..n).map(|m| self.get(j, k, m) * self.get(i, m, l)).sum();
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Whether every object has a unique dual `j` with `N_{ij}^0 = 1`.
    pub fn check_duals(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            let duals: Vec<usize> = (0..n).filter(|&j| self.get(i, j, 0) != 0).collect();
            duals.len() == 1 && self.get(i, duals[0], 0) == 1
        })
    }

    /// Same multiplicities with labels mapped through `f`.
    pub fn map_labels<M>(&self, f: impl FnMut(&L) -> M) -> FusionTable<M> {
        FusionTable {
            algebra: self.algebra.clone(),
            rank: self.rank,
            level: self.level.clone(),
            simples: self.simples.iter().map(f).collect(),
            mult: self.mult.clone(),
        }
    }

    /// One `i,j,k,N` line per nonzero entry, with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,j,k,N\n");
        for [i, j, k, v] in self.entries() {
            let _ = writeln!(s, "{i},{j},{k},{v}");
        }
        s
    }
}

impl<L: Display> FusionTable<L> {
    /// Square grid of products `x ⊠ y`, each cell a sum of labels.
    pub fn to_table(&self) -> String {
        let n = self.len();
        let names: Vec<String> = self.simples.iter().map(|l| l.to_string()).collect();
        let cell = |i: usize, j: usize| -> String {
            let terms: Vec<String> = self
                .row(i, j)
                .into_iter()
                .map(|(k, v)| {
                    if v == 1 {
                        names[k].clone()
                    } else {
                        format!("{v}*{}", names[k])
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        };
        let cells: Vec<Vec<String>> = (0..n).map(|i| (0..n).map(|j| cell(i, j)).collect()).collect();
        let head_w = names.iter().map(|s| s.chars().count()).max().unwrap_or(0).max(1);
        let col_w: Vec<usize> = (0..n)
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].chars().count())
                    .chain(std::iter::once(names[j].chars().count()))
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut s = String::new();
        let _ = writeln!(s, "# {} level {} fusion, {} simples", self.algebra, self.level, n);
        let _ = write!(s, "{:head_w$} |", "x");
        for j in 0..n {
            let _ = write!(s, " {:w$} |", names[j], w = col_w[j]);
        }
        s.push('\n');
        let total = head_w + 2 + col_w.iter().map(|w| w + 3).sum::<usize>();
        s.push_str(&"-".repeat(total));
        s.push('\n');
        for i in 0..n {
            let _ = write!(s, "{:head_w$} |", names[i]);
            for j in 0..n {
                let _ = write!(s, " {:w$} |", cells[i][j], w = col_w[j]);
            }
            s.push('\n');
        }
        s
    }
}

impl<L: Serialize> Serialize for FusionTable<L> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FusionTable", 5)?;
        st.serialize_field("algebra", &self.algebra)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("level", &self.level)?;
        st.serialize_field("simples", &self.simples)?;
        st.serialize_field("entries", &self.entries())?;
        st.end()
    }
}

impl<L: Display> Display for FusionTable<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_table())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FusionTable<&'static str> {
        let mut t = FusionTable::new("Z2".into(), 0, "1".into(), vec!["1", "g"]);
        t.set(0, 0, 0, 1);
        t.set(0, 1, 1, 1);
        t.set(1, 0, 1, 1);
        t.set(1, 1, 0, 1);
        t
    }

    #[test]
    fn checks_on_group_ring() {
        let t = z2();
        assert!(t.check_unit() && t.check_symmetry() && t.check_associativity() && t.check_duals());
        let mut bad = t.clone();
        bad.set(1, 0, 1, 0);
        assert!(!bad.check_symmetry());
    }

    #[test]
    fn exports() {
        let t = z2();
        assert_eq!(t.to_csv(), "i,j,k,N\n0,0,0,1\n0,1,1,1\n1,0,1,1\n1,1,0,1\n");
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"algebra":"Z2","rank":0,"level":"1","simples":["1","g"],"entries":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]]}"#
        );
        assert!(t.to_table().contains("g | g | 1 |"));
    }
}
