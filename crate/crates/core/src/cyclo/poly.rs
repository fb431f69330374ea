//! Dense univariate polynomials over Q, low degree first.

use num::{BigInt, BigRational, One, Zero};

pub(crate) type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigRational::zero());
    }
}

fn is_zero(p: &QPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn degree(p: &QPoly) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn sub_mul(a: &QPoly, q: &QPoly, b: &QPoly) -> QPoly {
    let len = a.len().max(q.len() + b.len() - 1);
    let mut out = a.clone();
    out.resize(len, BigRational::zero());
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    trim(&mut out);
    out
}

fn divmod(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let db = degree(b);
    let lead = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    if is_zero(&r) || degree(&r) < db {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); degree(&r) - db + 1];
    while !is_zero(&r) && degree(&r) >= db {
        let dr = degree(&r);
        let c = &r[dr] / &lead;
        let shift = dr - db;
        for j in 0..=db {
            let t = &c * &b[j];
            r[shift + j] -= t;
        }
        q[shift] = c;
        trim(&mut r);
    }
    (q, r)
}

/// Inverse of `a` modulo the integer polynomial `m`, by the extended
/// Euclidean algorithm. `None` when `gcd(a, m) ≠ 1`.
pub(crate) fn inverse_mod(a: &QPoly, m: &[BigInt]) -> Option<QPoly> {
    let m: QPoly = m.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let (mut r0, mut r1) = (m.clone(), a.clone());
    trim(&mut r1);
    let (mut s0, mut s1): (QPoly, QPoly) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while !is_zero(&r1) {
        let (q, r) = divmod(&r0, &r1);
        let s = sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if degree(&r0) != 0 {
        return None;
    }
    let c = r0[0].clone();
    let (_, mut inv) = divmod(&s0, &m);
    for x in inv.iter_mut() {
        *x /= &c;
    }
    Some(inv)
}
