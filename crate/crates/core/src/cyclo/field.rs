//! Per-order field data: the cyclotomic polynomial and reduced powers of ζ.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num::{BigInt, One, Zero};

pub(crate) struct Field {
    pub phi: usize,
    /// Coefficients of Φ_M, low degree first; monic of degree `phi`.
    pub poly: Vec<BigInt>,
    /// `powers[k]` is `x^k mod Φ_M` for `0 ≤ k < M`, each of length `phi`.
    pub powers: Vec<Vec<BigInt>>,
}

static FIELDS: LazyLock<RwLock<HashMap<u64, Arc<Field>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));
static POLYS: LazyLock<RwLock<HashMap<u64, Vec<BigInt>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

pub(crate) fn field(m: u64) -> Arc<Field> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(f) = FIELDS.read().unwrap().get(&m) {
        return Arc::clone(f);
    }
    let poly = cyclotomic_polynomial(m);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(m as usize);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for _ in 0..m {
        powers.push(cur.clone());
        // multiply by x, then subtract lead·Φ_M
        let lead = cur[phi - 1].clone();
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !lead.is_zero() {
            for j in 0..phi {
                cur[j] -= &lead * &poly[j];
            }
        }
    }
    let f = Arc::new(Field {
        phi,
        poly,
        powers,
    });
    FIELDS
        .write()
        .unwrap()
        .entry(m)
        .or_insert_with(|| Arc::clone(&f))
        .clone()
}

/// Φ_M via `x^M − 1 = Π_{d | M} Φ_d`, using exact division by monic factors.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    if let Some(p) = POLYS.read().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    POLYS.write().unwrap().insert(m, num.clone());
    num
}

fn div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for j in 0..=db {
            rem[k + j] -= &c * &b[j];
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(|x| x.is_zero()));
    q
}

/// Euler's totient.
pub fn euler_phi(mut m: u64) -> u64 {
    let mut out = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        // Φ_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic_polynomial(105).contains(&BigInt::from(-2)));
    }

    #[test]
    fn degrees_are_totients() {
        for m in 1..80 {
            assert_eq!(field(m).phi as u64, euler_phi(m), "M={m}");
        }
    }

    #[test]
    fn power_table_wraps() {
        let f = field(5);
        assert_eq!(f.powers[4], ints(&[-1, -1, -1, -1]));
    }
}
