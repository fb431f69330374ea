//! Exact arithmetic in cyclotomic fields `Q(ζ_M)`.
//!
//! An element is stored as integer coordinates in the power basis
//! `1, ζ, …, ζ^{φ(M)−1}` over a single positive denominator, fully reduced.
//! Elements that happen to be rational are stored with `M = 1`, so zero and
//! one have a unique representation.

mod field;
mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::integer::{gcd, lcm};
use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use field::{cyclotomic_polynomial, euler_phi};

#[derive(Clone, Debug)]
pub struct CycloNum {
    m: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNum {
    pub fn zero() -> Self {
        CycloNum {
            m: 1,
            num: vec![BigInt::zero()],
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        CycloNum {
            m: 1,
            num: vec![BigInt::from(n)],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        CycloNum::from_parts(1, vec![q.numer().clone()], q.denom().clone())
    }

    /// `ζ_M^k` with `ζ_M = e^{2πi/M}`.
    pub fn zeta(m: u64, k: i64) -> Self {
        let f = field::field(m);
        let k = k.rem_euclid(m as i64) as usize;
        CycloNum::from_parts(m, f.powers[k].clone(), BigInt::one())
    }

    /// `e^{2πi·a/b}` in `Q(ζ_b)` after reducing `a/b` to lowest terms.
    pub fn root_of_unity(a: i64, b: i64) -> Self {
        assert!(b != 0, "root_of_unity with zero denominator");
        let g = gcd(a, b).max(1);
        let (mut a, mut b) = (a / g, b / g);
        if b < 0 {
            a = -a;
            b = -b;
        }
        CycloNum::zeta(b as u64, a)
    }

    /// Same as [`Self::root_of_unity`] from an exact rational.
    pub fn root_of_unity_q(q: &num::rational::Rational64) -> Self {
        CycloNum::root_of_unity(*q.numer(), *q.denom())
    }

    /// `Σ_k counts[k] ζ_M^k` where `counts` has length `M`.
    pub fn from_exponent_counts(m: u64, counts: &[i64]) -> Self {
        let f = field::field(m);
        let mut acc = vec![BigInt::zero(); f.phi];
        for (k, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = BigInt::from(c);
            for (a, p) in acc.iter_mut().zip(&f.powers[k % m as usize]) {
                if !p.is_zero() {
                    *a += &c * p;
                }
            }
        }
        CycloNum::from_parts(m, acc, BigInt::one())
    }

    /// Builds from power-basis coordinates (length `φ(M)`) over a common
    /// denominator and reduces to canonical form.
    pub fn from_parts(m: u64, num: Vec<BigInt>, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut x = CycloNum { m, num, den };
        x.normalize();
        x
    }

    /// Builds from rational power-basis coordinates.
    pub fn from_coeffs(m: u64, coeffs: &[BigRational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        CycloNum::from_parts(m, num, den)
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in self.num.iter_mut() {
                *c = -&*c;
            }
        }
        if self.num.iter().skip(1).all(|c| c.is_zero()) {
            self.m = 1;
            self.num.truncate(1);
            if self.num.is_empty() {
                self.num.push(BigInt::zero());
            }
        }
        let g = self.num.iter().fold(self.den.clone(), |g, c| g.gcd(c));
        if !g.is_one() && !g.is_zero() {
            for c in self.num.iter_mut() {
                *c /= &g;
            }
            self.den /= &g;
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
        }
    }

    /// The order `M` of the field this element is currently written in.
    pub fn order(&self) -> u64 {
        self.m
    }

    /// Rational coordinates in the power basis of `Q(ζ_M)`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.m == 1 && self.num[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.m == 1 && self.num[0].is_one() && self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.m == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    /// Rewrites the element in `Q(ζ_target)`; `target` must be a multiple of `M`.
    pub fn lift(&self, target: u64) -> Self {
        assert!(target.is_multiple_of(self.m), "cannot lift Q(ζ_{}) into Q(ζ_{target})", self.m);
        if target == self.m {
            return self.clone();
        }
        let f = field::field(target);
        let step = (target / self.m) as usize;
        let mut acc = vec![BigInt::zero(); f.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(&f.powers[(j * step) % target as usize]) {
                if !p.is_zero() {
                    *a += c * p;
                }
            }
        }
        // Lifting never produces a non-canonical rational, but keep the
        // representation in the target field even when it is rational.
        CycloNum {
            m: target,
            num: acc,
            den: self.den.clone(),
        }
        .reduced()
    }

    fn reduced(mut self) -> Self {
        self.normalize();
        self
    }

    fn raw_in(&self, m: u64) -> (Vec<BigInt>, BigInt) {
        if self.m == m {
            return (self.num.clone(), self.den.clone());
        }
        if self.m == 1 {
            let phi = field::field(m).phi;
            let mut v = vec![BigInt::zero(); phi];
            v[0] = self.num[0].clone();
            return (v, self.den.clone());
        }
        let lifted = self.lift(m);
        if lifted.m == m {
            (lifted.num, lifted.den)
        } else {
            let phi = field::field(m).phi;
            let mut v = vec![BigInt::zero(); phi];
            v[0] = lifted.num[0].clone();
            (v, lifted.den)
        }
    }

    fn common_order(&self, other: &Self) -> u64 {
        lcm(self.m, other.m)
    }

    /// Multiplicative inverse, by extended Euclid against Φ_M.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.m));
        }
        if self.m == 1 {
            return Ok(CycloNum::from_parts(1, vec![self.den.clone()], self.num[0].clone()));
        }
        let f = field::field(self.m);
        let a: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let s = poly::inverse_mod(&a, &f.poly).ok_or(Error::DivisionByZero(self.m))?;
        let mut coeffs = s;
        coeffs.resize(f.phi, BigRational::zero());
        let scale = BigRational::from_integer(self.den.clone());
        let coeffs: Vec<BigRational> = coeffs.into_iter().map(|c| c * &scale).collect();
        Ok(CycloNum::from_coeffs(self.m, &coeffs))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// The automorphism `ζ_M ↦ ζ_M^t`. Requires `gcd(t, M) = 1`.
    pub fn galois(&self, t: i64) -> Result<Self> {
        let m = self.m as i64;
        if gcd(t, m) != 1 {
            return Err(Error::GaloisNotCoprime { t, order: self.m });
        }
        if self.m == 1 {
            return Ok(self.clone());
        }
        let f = field::field(self.m);
        let mut acc = vec![BigInt::zero(); f.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = (j as i64 * t).rem_euclid(m) as usize;
            for (a, p) in acc.iter_mut().zip(&f.powers[k]) {
                if !p.is_zero() {
                    *a += c * p;
                }
            }
        }
        Ok(CycloNum::from_parts(self.m, acc, self.den.clone()))
    }

    /// Complex conjugate, i.e. `galois(−1)`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("−1 is a unit mod every M")
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut out = CycloNum::one();
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        out
    }

    /// Numerical value under `ζ_M ↦ e^{2πi/M}`, in double precision.
    pub fn to_complex(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let (mut re, mut im) = (0.0, 0.0);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = c.to_f64().unwrap_or(f64::NAN) / den;
            let angle = std::f64::consts::TAU * j as f64 / self.m as f64;
            re += x * angle.cos();
            im += x * angle.sin();
        }
        (re, im)
    }

    pub fn abs_squared_f64(&self) -> f64 {
        let (re, im) = self.to_complex();
        re * re + im * im
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.num == other.num && self.den == other.den;
        }
        if self.m == 1 || other.m == 1 {
            // One side is rational, the other is not written rationally.
            return false;
        }
        let m = self.common_order(other);
        self.raw_in(m) == other.raw_in(m)
    }
}

impl Eq for CycloNum {}

impl Default for CycloNum {
    fn default() -> Self {
        CycloNum::zero()
    }
}

impl From<i64> for CycloNum {
    fn from(n: i64) -> Self {
        CycloNum::from_integer(n)
    }
}

// Cross-multiplying denominators trips a lint that expects only `+` here.
#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        let m = self.common_order(rhs);
        let (a, da) = self.raw_in(m);
        let (b, db) = rhs.raw_in(m);
        let num = a.iter().zip(&b).map(|(x, y)| x * &db + y * &da).collect();
        CycloNum::from_parts(m, num, da * db)
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self + &(-rhs)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            m: self.m,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        if self.m == 1 || rhs.m == 1 {
            let (s, x) = if self.m == 1 { (self, rhs) } else { (rhs, self) };
            let c = &s.num[0];
            return CycloNum::from_parts(
                x.m,
                x.num.iter().map(|a| a * c).collect(),
                &x.den * &s.den,
            );
        }
        let m = self.common_order(rhs);
        let f = field::field(m);
        let (a, da) = self.raw_in(m);
        let (b, db) = rhs.raw_in(m);
        let mut prod = vec![BigInt::zero(); 2 * f.phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut acc: Vec<BigInt> = prod[..f.phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(f.phi) {
            if c.is_zero() {
                continue;
            }
            for (t, p) in acc.iter_mut().zip(&f.powers[k % m as usize]) {
                if !p.is_zero() {
                    *t += c * p;
                }
            }
        }
        CycloNum::from_parts(m, acc, da * db)
    }
}

/// Panics on division by zero; see [`CycloNum::checked_div`].
impl<'a> Div<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn div(self, rhs: &CycloNum) -> CycloNum {
        self.checked_div(rhs).expect("division by zero in cyclotomic field")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl std::iter::Sum for CycloNum {
    fn sum<I: Iterator<Item = CycloNum>>(iter: I) -> Self {
        iter.fold(CycloNum::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", BigRational::new(self.num[0].clone(), self.den.clone()));
        }
        let mut first = true;
        write!(f, "(")?;
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            write!(f, "{sign}")?;
            match (j, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{a}*z")?,
                (_, true) => write!(f, "z^{j}")?,
                (_, false) => write!(f, "{a}*z^{j}")?,
            }
            first = false;
        }
        write!(f, ")")?;
        if !self.den.is_one() {
            write!(f, "/{}", self.den)?;
        }
        write!(f, " in Q(z_{})", self.m)
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    #[serde(rename = "M")]
    m: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            m: self.m,
            coeffs: self
                .coeffs()
                .iter()
                .map(|c| format!("{}/{}", c.numer(), c.denom()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = Repr::deserialize(d)?;
        if r.m == 0 || r.coeffs.len() as u64 != euler_phi(r.m) {
            return Err(D::Error::custom("coefficient count does not match φ(M)"));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| {
                let (n, d) = s.split_once('/').unwrap_or((s, "1"));
                let n: BigInt = n.trim().parse().map_err(D::Error::custom)?;
                let d: BigInt = d.trim().parse().map_err(D::Error::custom)?;
                if d.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(BigRational::new(n, d))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CycloNum::from_coeffs(r.m, &coeffs))
    }
}
