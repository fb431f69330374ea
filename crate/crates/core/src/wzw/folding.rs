//! Kac–Walton: tensor products folded into the level-m alcove by the
//! shifted action of the affine Weyl group.

use std::collections::BTreeMap;

use super::tensor::tensor_oracle;
use super::FusionTable;
use crate::error::{Error, Result};
use crate::liealg::{RootSystem, Weight};

/// Folds `κ` into the level-`m` alcove. Returns `None` when `κ + ρ` lies on
/// a wall, otherwise the alcove weight and the sign of the folding element.
pub fn fold_to_alcove(rs: &RootSystem, m: i64, kappa: &Weight) -> Option<(Weight, i64)> {
    let u = m + rs.dual_coxeter_number();
    let theta = rs.theta();
    let mut x = kappa + &rs.rho();
    let mut sign = 1;
    loop {
        if let Some(i) = x.labels().iter().position(|&a| a < 0) {
            x = rs.reflect(i, &x);
            sign = -sign;
            continue;
        }
        let level = rs.level_of(&x);
        if level > u {
            x = &x - &theta.scaled(level - u);
            sign = -sign;
            continue;
        }
        if level == u || x.labels().contains(&0) {
            return None;
        }
        return Some((&x - &rs.rho(), sign));
    }
}

/// One fusion row `λ ⊠ ν` at level `m` by folding the tensor product.
pub fn kac_walton_fusion(
    rs: &RootSystem,
    m: i64,
    lambda: &Weight,
    nu: &Weight,
) -> Result<BTreeMap<Weight, u64>> {
    for w in [lambda, nu] {
        rs.check_weight(w)?;
        if !w.is_dominant() || rs.level_of(w) > m {
            return Err(Error::InvalidLabel(format!("{w} is not in the level-{m} alcove")));
        }
    }
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (kappa, mult) in tensor_oracle(rs, lambda, nu) {
        if let Some((phi, sign)) = fold_to_alcove(rs, m, &kappa) {
            *acc.entry(phi).or_insert(0) += sign * mult as i64;
        }
    }
    let mut out = BTreeMap::new();
    for (phi, c) in acc {
        if c < 0 {
            return Err(Error::NonIntegerFusion(format!("{lambda} x {nu} -> {phi}: {c}")));
        }
        if c > 0 {
            out.insert(phi, c as u64);
        }
    }
    Ok(out)
}

/// The whole level-`m` table from [`kac_walton_fusion`].
pub fn kac_walton_table(rs: &RootSystem, m: i64) -> Result<FusionTable<Weight>> {
    use rayon::prelude::*;
    let simples = rs.simples_of_level(m)?;
    let n = simples.len();
    let rows: Vec<BTreeMap<Weight, u64>> = (0..n * n)
        .into_par_iter()
        .map(|t| kac_walton_fusion(rs, m, &simples[t / n], &simples[t % n]))
        .collect::<Result<_>>()?;
    let mut table = FusionTable::new(rs.to_string(), rs.rank(), m.to_string(), simples.clone());
    for (t, row) in rows.into_iter().enumerate() {
        for (phi, c) in row {
            let k = simples.binary_search(&phi).expect("folded weight lies in the alcove");
            table.set(t / n, t % n, k, c);
        }
    }
    Ok(table)
}
