//! Root systems of the simple Lie algebras and their weight-level data.
//!
//! Conventions: simple roots are numbered as in Bourbaki, long roots have
//! squared length 2, and `cartan[i][j] = 2(α_i, α_j) / (α_j, α_j)`, so the
//! simple root `α_i` has Dynkin labels equal to row `i` of the Cartan matrix.

mod lattice;
mod weight;
mod weyl;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num::integer::lcm;
use num::rational::Rational64;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use lattice::{smith_invariants, DiscriminantGroup};
pub use weight::Weight;
pub use weyl::{weyl_group, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn dual(self) -> Family {
        match self {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// Computational caps applied to Weyl-group enumeration and simple-object lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub weyl_max: usize,
    pub simples_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            weyl_max: 1_000_000,
            simples_max: 2000,
        }
    }
}

/// Cartan data, lattices and Coxeter numbers of one simple Lie algebra.
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    root_norms: Vec<Rational64>,
    gram: Vec<Vec<Rational64>>,
    gram_int: Vec<Vec<i64>>,
    inverse_cartan: Vec<Vec<Rational64>>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<Vec<i64>>,
    theta: Weight,
    comarks: Vec<i64>,
    coxeter_h: i64,
    dual_coxeter_h: i64,
    lacety: i64,
    lattice_level: i64,
    limits: Limits,
    weyl: OnceLock<Arc<Vec<WeylElement>>>,
}

impl Clone for RootSystem {
    fn clone(&self) -> Self {
        let weyl = OnceLock::new();
        if let Some(w) = self.weyl.get() {
            let _ = weyl.set(Arc::clone(w));
        }
        RootSystem {
            family: self.family,
            rank: self.rank,
            cartan: self.cartan.clone(),
            root_norms: self.root_norms.clone(),
            gram: self.gram.clone(),
            gram_int: self.gram_int.clone(),
            inverse_cartan: self.inverse_cartan.clone(),
            positive_roots: self.positive_roots.clone(),
            positive_root_coords: self.positive_root_coords.clone(),
            theta: self.theta.clone(),
            comarks: self.comarks.clone(),
            coxeter_h: self.coxeter_h,
            dual_coxeter_h: self.dual_coxeter_h,
            lacety: self.lacety,
            lattice_level: self.lattice_level,
            limits: self.limits,
            weyl,
        }
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.cartan == other.cartan
    }
}

impl Eq for RootSystem {}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("family", &self.family)
            .field("rank", &self.rank)
            .field("cartan", &self.cartan)
            .finish()
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// Inner products `(α_i, α_j)` of the simple roots, Bourbaki numbering.
fn simple_root_products(family: Family, rank: usize) -> Option<Vec<Vec<Rational64>>> {
    let n = rank;
    let valid = match family {
        Family::A => n >= 1,
        Family::B => n >= 2,
        Family::C => n >= 3,
        Family::D => n >= 4,
        Family::E => (6..=8).contains(&n),
        Family::F => n == 4,
        Family::G => n == 2,
    };
    if !valid {
        return None;
    }
    let mut b = vec![vec![Rational64::zero(); n]; n];
    let link = |b: &mut Vec<Vec<Rational64>>, i: usize, j: usize, v: Rational64| {
        b[i][j] = v;
        b[j][i] = v;
    };
    match family {
        Family::A => {
            for i in 0..n {
                b[i][i] = r(2, 1);
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut b, i, i + 1, r(-1, 1));
            }
        }
        Family::B => {
            for i in 0..n {
                b[i][i] = r(2, 1);
            }
            b[n - 1][n - 1] = r(1, 1);
            for i in 0..n - 1 {
                link(&mut b, i, i + 1, r(-1, 1));
            }
        }
        Family::C => {
            for i in 0..n {
                b[i][i] = r(1, 1);
            }
            b[n - 1][n - 1] = r(2, 1);
            for i in 0..n - 2 {
                link(&mut b, i, i + 1, r(-1, 2));
            }
            link(&mut b, n - 2, n - 1, r(-1, 1));
        }
        Family::D => {
            for i in 0..n {
                b[i][i] = r(2, 1);
            }
            for i in 0..n - 2 {
                link(&mut b, i, i + 1, r(-1, 1));
            }
            link(&mut b, n - 3, n - 1, r(-1, 1));
        }
        Family::E => {
            for i in 0..n {
                b[i][i] = r(2, 1);
            }
            link(&mut b, 0, 2, r(-1, 1));
            link(&mut b, 1, 3, r(-1, 1));
            for i in 2..n - 1 {
                link(&mut b, i, i + 1, r(-1, 1));
            }
        }
        Family::F => {
            b[0][0] = r(2, 1);
            b[1][1] = r(2, 1);
            b[2][2] = r(1, 1);
            b[3][3] = r(1, 1);
            link(&mut b, 0, 1, r(-1, 1));
            link(&mut b, 1, 2, r(-1, 1));
            link(&mut b, 2, 3, r(-1, 2));
        }
        Family::G => {
            b[0][0] = r(2, 3);
            b[1][1] = r(2, 1);
            link(&mut b, 0, 1, r(-1, 1));
        }
    }
    Some(b)
}

/// Exact inverse of a small rational matrix by Gauss-Jordan elimination.
pub(crate) fn invert_rational(m: &[Vec<Rational64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m.to_vec();
    let mut inv: Vec<Vec<Rational64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&row| !a[row][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let f = a[row][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[row][j] -= f * ac;
                    inv[row][j] -= f * ic;
                }
            }
        }
    }
    Some(inv)
}

impl RootSystem {
    /// Builds the root system of type `family`/`rank` with default limits.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        build_root_system(family, rank)
    }

    /// Builds a root system from a Cartan matrix in the row convention used
    /// throughout this crate. The matrix must be symmetrizable and of finite type.
    pub fn from_cartan(family: Family, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let rank = cartan.len();
        let bad = || Error::InvalidType {
            family: family.to_string(),
            rank,
        };
        if rank == 0 || cartan.iter().any(|row| row.len() != rank) {
            return Err(bad());
        }
        for i in 0..rank {
            for j in 0..rank {
                if (i == j && cartan[i][j] != 2) || (i != j && cartan[i][j] > 0) {
                    return Err(bad());
                }
                if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return Err(bad());
                }
            }
        }

        // Symmetrize: cartan[i][j] * d_j == cartan[j][i] * d_i with d_i = (α_i, α_i).
        let mut d: Vec<Option<Rational64>> = vec![None; rank];
        d[0] = Some(Rational64::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..rank {
                if j != i && cartan[i][j] != 0 {
                    let dj = di * r(cartan[j][i], cartan[i][j]);
                    match d[j] {
                        None => {
                            d[j] = Some(dj);
                            queue.push_back(j);
                        }
                        Some(old) if old != dj => return Err(bad()),
                        _ => {}
                    }
                }
            }
        }
        let d: Vec<Rational64> = d.into_iter().collect::<Option<_>>().ok_or_else(bad)?;
        let longest = *d.iter().max().unwrap();
        let scale = r(2, 1) / longest;
        let root_norms: Vec<Rational64> = d.iter().map(|x| x * scale).collect();

        let cartan_q: Vec<Vec<Rational64>> = cartan
            .iter()
            .map(|row| row.iter().map(|&a| Rational64::from_integer(a)).collect())
            .collect();
        let inverse_cartan = invert_rational(&cartan_q).ok_or_else(bad)?;
        let gram: Vec<Vec<Rational64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| inverse_cartan[i][j] * root_norms[j] / 2)
                    .collect()
            })
            .collect();
        for i in 0..rank {
            for j in 0..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(bad());
                }
            }
        }
        let lattice_level = gram
            .iter()
            .flatten()
            .fold(1i64, |acc, x| lcm(acc, *x.denom()));
        let gram_int = gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * lattice_level).to_integer())
                    .collect()
            })
            .collect();

        // Positive roots in simple-root coordinates, by reflection closure.
        let mut roots: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            if roots.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|k| beta[k] * cartan[k][i]).sum();
                let mut image = beta.clone();
                image[i] -= pairing;
                if roots.len() > 100_000 {
                    return Err(bad());
                }
                if roots.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut positive_root_coords: Vec<Vec<i64>> =
            roots.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        positive_root_coords.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let to_labels = |c: &[i64]| -> Weight {
            Weight::new(
                (0..rank)
                    .map(|j| (0..rank).map(|k| c[k] * cartan[k][j]).sum())
                    .collect(),
            )
        };
        let positive_roots: Vec<Weight> =
            positive_root_coords.iter().map(|c| to_labels(c)).collect();
        let theta_coords = positive_root_coords.last().unwrap().clone();
        let theta = positive_roots.last().unwrap().clone();

        let comarks: Vec<i64> = (0..rank)
            .map(|i| (root_norms[i] * theta_coords[i] / 2).to_integer())
            .collect();
        let coxeter_h = 1 + theta_coords.iter().sum::<i64>();
        let dual_coxeter_h = 1 + comarks.iter().sum::<i64>();
        let shortest = *root_norms.iter().min().unwrap();
        let lacety = (r(2, 1) / shortest).to_integer();

        Ok(RootSystem {
            family,
            rank,
            cartan,
            root_norms,
            gram,
            gram_int,
            inverse_cartan,
            positive_roots,
            positive_root_coords,
            theta,
            comarks,
            coxeter_h,
            dual_coxeter_h,
            lacety,
            lattice_level,
            limits: Limits::default(),
            weyl: OnceLock::new(),
        })
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared lengths `(α_i, α_i)` of the simple roots.
    pub fn root_norms(&self) -> &[Rational64] {
        &self.root_norms
    }

    /// Gram matrix `(ω_i, ω_j)` of the fundamental weights.
    pub fn gram_fundamental(&self) -> &[Vec<Rational64>] {
        &self.gram
    }

    /// `lattice_level() * gram_fundamental()`, an integer matrix.
    pub fn gram_scaled(&self) -> &[Vec<i64>] {
        &self.gram_int
    }

    pub fn inverse_cartan(&self) -> &[Vec<Rational64>] {
        &self.inverse_cartan
    }

    pub fn rho(&self) -> Weight {
        Weight::rho(self.rank)
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    /// Highest root.
    pub fn theta(&self) -> &Weight {
        &self.theta
    }

    /// Coefficients of the highest coroot in the simple-coroot basis.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// Positive roots as weights, ordered by height.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive roots in simple-root coordinates, same order as [`Self::positive_roots`].
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new(self.cartan[i].clone())
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_h
    }

    pub fn dual_coxeter_number(&self) -> i64 {
        self.dual_coxeter_h
    }

    /// Ratio of squared lengths of long and short roots (1, 2 or 3).
    pub fn lacety(&self) -> i64 {
        self.lacety
    }

    /// Smallest positive `N` with `N (x, y)` integral for all weights `x, y`.
    pub fn lattice_level(&self) -> i64 {
        self.lattice_level
    }

    /// The reading "smallest `N` with `N·P` an integral lattice", i.e. the
    /// smallest `N` with `N^2 (x, y)` integral. Reported alongside
    /// [`Self::lattice_level`] for comparison only.
    pub fn lattice_level_scaling(&self) -> i64 {
        (1..=self.lattice_level)
            .find(|n| {
                self.gram
                    .iter()
                    .flatten()
                    .all(|x| (x * (n * n)).is_integer())
            })
            .unwrap_or(self.lattice_level)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.lacety == 1
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// Exact inner product `(x, y)`.
    pub fn inner_product(&self, x: &Weight, y: &Weight) -> Result<Rational64> {
        self.check_weight(x)?;
        self.check_weight(y)?;
        Ok(Rational64::new(self.inner_product_scaled(x, y), self.lattice_level))
    }

    /// `N (x, y)` as an integer, with `N` the lattice level. Ranks are not checked.
    pub fn inner_product_scaled(&self, x: &Weight, y: &Weight) -> i64 {
        let (x, y) = (x.labels(), y.labels());
        let mut acc = 0i64;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            let row = &self.gram_int[i];
            let s: i64 = (0..self.rank).map(|j| row[j] * y[j]).sum();
            acc += x[i] * s;
        }
        acc
    }

    /// Level `(λ, θ)` of a weight, i.e. its pairing with the highest coroot.
    pub fn level_of(&self, w: &Weight) -> i64 {
        w.labels()
            .iter()
            .zip(&self.comarks)
            .map(|(a, m)| a * m)
            .sum()
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn root_coordinates(&self, w: &Weight) -> Vec<Rational64> {
        (0..self.rank)
            .map(|k| {
                (0..self.rank)
                    .map(|j| self.inverse_cartan[j][k] * w.labels()[j])
                    .fold(Rational64::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Sum of the simple-root coordinates.
    pub fn height(&self, w: &Weight) -> Rational64 {
        self.root_coordinates(w)
            .into_iter()
            .fold(Rational64::zero(), |a, b| a + b)
    }

    /// Applies the simple reflection `s_i` to a weight.
    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let a = w.labels()[i];
        if a == 0 {
            return w.clone();
        }
        Weight::new(
            w.labels()
                .iter()
                .zip(&self.cartan[i])
                .map(|(x, c)| x - a * c)
                .collect(),
        )
    }

    /// Langlands dual: transposed Cartan matrix, same node numbering.
    pub fn dual(&self) -> RootSystem {
        let transposed: Vec<Vec<i64>> = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[j][i]).collect())
            .collect();
        RootSystem::from_cartan(self.family.dual(), transposed)
            .expect("transpose of a finite-type Cartan matrix is finite type")
            .with_limits(self.limits)
    }

    /// The Weyl group, enumerated once and memoized.
    pub fn weyl_group(&self) -> Result<Arc<Vec<WeylElement>>> {
        if let Some(w) = self.weyl.get() {
            return Ok(Arc::clone(w));
        }
        let elements = Arc::new(weyl_group(self, self.limits.weyl_max)?);
        Ok(Arc::clone(self.weyl.get_or_init(|| elements)))
    }

    /// Installs a previously computed Weyl group (e.g. from the on-disk cache).
    /// Returns false if one was already present.
    pub fn preload_weyl_group(&self, elements: Vec<WeylElement>) -> bool {
        self.weyl.set(Arc::new(elements)).is_ok()
    }

    /// Closed-form order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Dominant integral weights of level at most `m`, in lexicographic order.
    pub fn dominant_weights_of_level(&self, m: i64) -> Vec<Weight> {
        let mut out = Vec::new();
        if m < 0 {
            return out;
        }
        let mut current = vec![0i64; self.rank];
        self.fill_level(0, m, &mut current, &mut out);
        out
    }

    fn fill_level(&self, i: usize, budget: i64, current: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if i == self.rank {
            out.push(Weight::new(current.clone()));
            return;
        }
        let c = self.comarks[i];
        let mut a = 0;
        while a * c <= budget {
            current[i] = a;
            self.fill_level(i + 1, budget - a * c, current, out);
            a += 1;
        }
        current[i] = 0;
    }

    /// Dominant weights of level at most `m`, checked against the simples cap.
    pub fn simples_of_level(&self, m: i64) -> Result<Vec<Weight>> {
        let simples = self.dominant_weights_of_level(m);
        if simples.len() > self.limits.simples_max {
            return Err(Error::SimplesCapExceeded {
                count: simples.len(),
                cap: self.limits.simples_max,
            });
        }
        Ok(simples)
    }

    /// Whether the weight lies in the root lattice.
    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.root_coordinates(w).iter().all(|c| c.is_integer())
    }

    /// Determinant of the Cartan matrix (the order of `P/Q`).
    pub fn cartan_determinant(&self) -> i64 {
        let n = self.rank;
        let mut a: Vec<Vec<Rational64>> = self
            .cartan
            .iter()
            .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
            .collect();
        let mut det = Rational64::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&row| !a[row][col].is_zero()) else {
                return 0;
            };
            if piv != col {
                a.swap(col, piv);
                det = -det;
            }
            det *= a[col][col];
            for row in col + 1..n {
                let f = a[row][col] / a[col][col];
                for j in col..n {
                    let v = a[col][j];
                    a[row][j] -= f * v;
                }
            }
        }
        det.to_integer()
    }
}

/// Builds the root system of a simple Lie algebra.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let b = simple_root_products(family, rank).ok_or(Error::InvalidType {
        family: family.to_string(),
        rank,
    })?;
    let cartan: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| (b[i][j] * 2 / b[j][j]).to_integer())
                .collect()
        })
        .collect();
    RootSystem::from_cartan(family, cartan)
}
