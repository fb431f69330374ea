//! Finite-dimensional characters by Freudenthal's formula and tensor
//! product decomposition by character multiplication.

use std::collections::{BTreeMap, HashMap, HashSet};

use num::rational::Rational64;

use crate::liealg::{RootSystem, Weight};

/// Dominant weights of `V(λ)` with their multiplicities.
pub fn dominant_character(rs: &RootSystem, lambda: &Weight) -> BTreeMap<Weight, u64> {
    assert!(lambda.is_dominant(), "highest weight must be dominant");
    // Dominant weights below λ: closure under subtracting positive roots
    // while staying dominant.
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        for alpha in rs.positive_roots() {
            let next = &mu - alpha;
            if next.is_dominant() && seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    let depth = |mu: &Weight| -> i64 { rs.height(&(lambda - mu)).to_integer() };
    let mut order: Vec<Weight> = seen.iter().cloned().collect();
    order.sort_by_key(|mu| (depth(mu), mu.clone()));

    let rho = rs.rho();
    let lr = lambda + &rho;
    let top = rs.inner_product_scaled(&lr, &lr);
    let mut mult: HashMap<Weight, i64> = HashMap::new();
    mult.insert(lambda.clone(), 1);
    for mu in order.iter().skip(1) {
        let mut acc: i64 = 0;
        for alpha in rs.positive_roots() {
            let mut k = 1;
            loop {
                let shifted = mu + &alpha.scaled(k);
                let (dom, _) = rs.to_dominant(&shifted);
                let Some(&m) = mult.get(&dom) else { break };
                acc += m * rs.inner_product_scaled(&shifted, alpha);
                k += 1;
            }
        }
        let mr = mu + &rho;
        let gap = top - rs.inner_product_scaled(&mr, &mr);
        debug_assert!(gap > 0);
        let value = 2 * acc;
        assert_eq!(value % gap, 0, "Freudenthal quotient must be integral");
        mult.insert(mu.clone(), value / gap);
    }
    order
        .into_iter()
        .filter_map(|mu| {
            let m = mult[&mu];
            (m > 0).then_some((mu, m as u64))
        })
        .collect()
}

/// All weights of `V(λ)` with multiplicities.
pub fn full_character(rs: &RootSystem, lambda: &Weight) -> HashMap<Weight, u64> {
    let mut out = HashMap::new();
    for (mu, m) in dominant_character(rs, lambda) {
        for x in rs.orbit(&mu) {
            out.insert(x, m);
        }
    }
    out
}

/// Decomposition of `V(λ) ⊗ V(ν)` into irreducibles.
pub fn tensor_oracle(rs: &RootSystem, lambda: &Weight, nu: &Weight) -> BTreeMap<Weight, u64> {
    let chl = full_character(rs, lambda);
    let chn = full_character(rs, nu);
    // Dominant part of the product character.
    let mut product: HashMap<Weight, i64> = HashMap::new();
    for (mu, &a) in &chl {
        for (x, &b) in &chn {
            let s = mu + x;
            if s.is_dominant() {
                *product.entry(s).or_insert(0) += (a * b) as i64;
            }
        }
    }
    let height = |w: &Weight| -> Rational64 { rs.height(w) };
    let mut out = BTreeMap::new();
    while let Some(top) = product
        .iter()
        .filter(|(_, &c)| c != 0)
        .max_by(|a, b| height(a.0).cmp(&height(b.0)).then_with(|| a.0.cmp(b.0)))
        .map(|(w, _)| w.clone())
    {
        let c = product[&top];
        assert!(c > 0, "negative multiplicity while extracting {top}");
        out.insert(top.clone(), c as u64);
        for (mu, m) in dominant_character(rs, &top) {
            let e = product.entry(mu).or_insert(0);
            *e -= c * m as i64;
        }
        product.retain(|_, v| *v != 0);
    }
    out
}
