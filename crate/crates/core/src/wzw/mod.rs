//! Positive-integer level: Weyl sums, S-matrix ratios and Verlinde fusion,
//! plus an independent tensor-product and affine-folding oracle.

mod folding;
mod fusion_table;
mod tensor;

use rayon::prelude::*;

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::liealg::{RootSystem, Weight};
use crate::linalg::{self, Lu, Matrix};

pub use folding::{fold_to_alcove, kac_walton_fusion, kac_walton_table};
pub use fusion_table::FusionTable;
pub use tensor::{dominant_character, full_character, tensor_oracle};

/// `Σ_{w∈W} sign(w) e^{−2πi (r/u)(λ+ρ, w(μ+ρ))}`, exactly, in `Q(ζ_{uN})`.
pub fn chi(rs: &RootSystem, lambda: &Weight, mu: &Weight, r: i64, u: i64) -> Result<CycloNum> {
    rs.check_weight(lambda)?;
    rs.check_weight(mu)?;
    if u <= 0 {
        return Err(Error::InvalidLevel(format!("chi needs u > 0, got {u}")));
    }
    let weyl = rs.weyl_group()?;
    let order = u * rs.lattice_level();
    let lr = lambda + &rs.rho();
    let mr = (mu + &rs.rho()).labels().to_vec();
    let mut counts = vec![0i64; order as usize];
    let mut image = vec![0i64; rs.rank()];
    for w in weyl.iter() {
        w.apply_into(&mr, &mut image);
        let p = rs.inner_product_scaled(&lr, &Weight::from(image.as_slice()));
        let e = (-(r as i128) * p as i128).rem_euclid(order as i128) as usize;
        counts[e] += w.sign as i64;
    }
    Ok(CycloNum::from_exponent_counts(order as u64, &counts))
}

/// `chi` at the point `e(−r′/u)`; realizes `σ_v` on evaluated Weyl sums
/// without needing a field automorphism.
pub fn reevaluate_at(rs: &RootSystem, lambda: &Weight, mu: &Weight, r: i64, u: i64) -> Result<CycloNum> {
    chi(rs, lambda, mu, r, u)
}

/// `chi(λ, μ; r, u) / chi(0, μ; r, u)`.
pub fn chi_ratio(rs: &RootSystem, lambda: &Weight, mu: &Weight, r: i64, u: i64) -> Result<CycloNum> {
    let den = chi(rs, &rs.zero(), mu, r, u)?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator(format!("chi(0, {mu}) at r={r}, u={u}")));
    }
    Ok(&chi(rs, lambda, mu, r, u)? / &den)
}

/// Normalized S-matrix entry `S_{λμ}/S_{0μ}` at integer level `m`.
pub fn s_ratio_integer_level(rs: &RootSystem, m: i64, lambda: &Weight, mu: &Weight) -> Result<CycloNum> {
    chi_ratio(rs, lambda, mu, 1, m + rs.dual_coxeter_number())
}

/// `R[i][j] = chi(x_i, x_j; r, u) / chi(0, x_j; r, u)` over a label list.
pub fn s_ratio_matrix(rs: &RootSystem, labels: &[Weight], r: i64, u: i64) -> Result<Matrix> {
    // Force the Weyl group once before going parallel.
    rs.weyl_group()?;
    let n = labels.len();
    let chis: Vec<CycloNum> = (0..n * n)
        .into_par_iter()
        .map(|t| chi(rs, &labels[t / n], &labels[t % n], r, u))
        .collect::<Result<_>>()?;
    let zero = rs.zero();
    let dens: Vec<CycloNum> = labels
        .par_iter()
        .map(|mu| chi(rs, &zero, mu, r, u))
        .collect::<Result<_>>()?;
    for (mu, d) in labels.iter().zip(&dens) {
        if d.is_zero() {
            return Err(Error::ZeroDenominator(format!("chi(0, {mu}) at r={r}, u={u}")));
        }
    }
    let inv: Vec<CycloNum> = dens.iter().map(|d| d.inv()).collect::<Result<_>>()?;
    Ok((0..n)
        .map(|i| (0..n).map(|j| &chis[i * n + j] * &inv[j]).collect())
        .collect())
}

/// Solves `Σ_φ N_{ij}^φ R[φ][μ] = R[i][μ] R[j][μ]` for every pair and checks
/// that each solution is a nonnegative integer. Returns the dense cube
/// `N[(i·n + j)·n + k]`.
pub fn fusion_from_ratios(r: &Matrix) -> Result<Vec<u64>> {
    let n = r.len();
    let lu = Lu::new(&linalg::transpose(r))?;
    let rows: Vec<Vec<u64>> = (0..n * n)
        .into_par_iter()
        .map(|t| {
            let (i, j) = (t / n, t % n);
            let rhs: Vec<CycloNum> = (0..n).map(|mu| &r[i][mu] * &r[j][mu]).collect();
            lu.solve(&rhs)
                .into_iter()
                .enumerate()
                .map(|(k, x)| {
                    x.to_integer()
                        .and_then(|v| u64::try_from(v).ok())
                        .ok_or_else(|| Error::NonIntegerFusion(format!("({i},{j},{k}) = {x}")))
                })
                .collect::<Result<Vec<u64>>>()
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// `N_{xy}^z = Σ_w R[x][w] R[y][w] (R⁻¹)[w][z]`, for small verification runs.
pub fn fusion_triple_product(r: &Matrix) -> Result<Vec<u64>> {
    let n = r.len();
    let inv = linalg::inverse(r)?;
    let mut out = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let v: CycloNum = (0..n).map(|w| &(&r[x][w] * &r[y][w]) * &inv[w][z]).sum();
                let v = v
                    .to_integer()
                    .and_then(|v| u64::try_from(v).ok())
                    .ok_or_else(|| Error::NonIntegerFusion(format!("({x},{y},{z}) = {v}")))?;
                out.push(v);
            }
        }
    }
    Ok(out)
}

pub(crate) fn table_from_cube<L>(
    algebra: String,
    rank: usize,
    level: String,
    simples: Vec<L>,
    cube: &[u64],
) -> FusionTable<L> {
    let n = simples.len();
    let mut t = FusionTable::new(algebra, rank, level, simples);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t.set(i, j, k, cube[(i * n + j) * n + k]);
            }
        }
    }
    t
}

/// Fusion rules of the level-`m` WZW model by the Verlinde linear solve.
pub fn verlinde_fusion(rs: &RootSystem, m: i64) -> Result<FusionTable<Weight>> {
    if m < 0 {
        return Err(Error::InvalidLevel(format!("integer level must be ≥ 0, got {m}")));
    }
    let simples = rs.simples_of_level(m)?;
    let r = s_ratio_matrix(rs, &simples, 1, m + rs.dual_coxeter_number())?;
    let cube = fusion_from_ratios(&r)?;
    Ok(table_from_cube(rs.to_string(), rs.rank(), m.to_string(), simples, &cube))
}

/// Verlinde fusion through the explicit inverse instead of the linear solve.
pub fn verlinde_fusion_triple_product(rs: &RootSystem, m: i64) -> Result<FusionTable<Weight>> {
    let simples = rs.simples_of_level(m)?;
    let r = s_ratio_matrix(rs, &simples, 1, m + rs.dual_coxeter_number())?;
    let cube = fusion_triple_product(&r)?;
    Ok(table_from_cube(rs.to_string(), rs.rank(), m.to_string(), simples, &cube))
}

/// Verlinde fusion against the Kac–Walton oracle, plus the fusion-ring
/// axioms and the root-lattice congruence.
pub fn wzw_oracle_report(rs: &RootSystem, m: i64) -> Result<crate::report::Report> {
    use crate::report::{Check, Report};
    let verlinde = verlinde_fusion(rs, m)?;
    let oracle = kac_walton_table(rs, m)?;
    let u = m + rs.dual_coxeter_number();
    let mut report = Report::new("wzw-oracle", rs.to_string(), u, 1);
    let s = &verlinde.simples;
    let n = s.len();
    for i in 0..n {
        for j in 0..n {
            let a = verlinde.row(i, j);
            let b = oracle.row(i, j);
            report.push(Check::boolean(
                format!("{} x {}", s[i], s[j]),
                a == b,
                if a == b { String::new() } else { format!("verlinde {a:?} vs oracle {b:?}") },
            ));
        }
    }
    report.push(Check::boolean("unit row", verlinde.check_unit(), ""));
    report.push(Check::boolean("symmetry", verlinde.check_symmetry(), ""));
    report.push(Check::boolean("associativity", verlinde.check_associativity(), ""));
    let congruent = verlinde
        .entries()
        .iter()
        .all(|&[i, j, k, _]| rs.in_root_lattice(&(&(&s[i as usize] + &s[j as usize]) - &s[k as usize])));
    report.push(Check::boolean("N ≠ 0 implies λ+ν ≡ φ mod Q", congruent, ""));
    report.set("level", m);
    report.set("simples", n);
    Ok(report)
}
