//! Rational principal W-algebras at `k + h∨ = u/v`.
//!
//! Simple modules are labelled by pairs `(λ, λ′)` with `λ` of level
//! `u − h∨` and `λ′` a weight of the dual root system of level `v − h`,
//! modulo the simultaneous action of the simple currents on both labels.

use std::collections::BTreeMap;
use std::fmt;

use num::integer::gcd;
use num::rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::liealg::{RootSystem, Weight};
use crate::linalg::Matrix;
use crate::report::{Check, Report};
use crate::wzw::{self, FusionTable};

#[derive(Clone, Debug)]
pub struct WLevel {
    rs: RootSystem,
    dual: RootSystem,
    u: i64,
    v: i64,
}

impl WLevel {
    pub fn new(rs: RootSystem, u: i64, v: i64) -> Result<Self> {
        if u <= 0 || v <= 0 {
            return Err(Error::InvalidLevel(format!("u and v must be positive, got ({u}, {v})")));
        }
        if gcd(u, v) != 1 {
            return Err(Error::InvalidLevel(format!("gcd({u}, {v}) ≠ 1")));
        }
        let r = rs.lacety();
        let (h, hv) = (rs.coxeter_number(), rs.dual_coxeter_number());
        let (umin, vmin) = if gcd(v, r) == 1 { (hv, h) } else { (h, r * hv) };
        if u < umin || v < vmin {
            return Err(Error::InvalidLevel(format!(
                "{rs} at u/v = {u}/{v} is outside the rational window: need u ≥ {umin}, v ≥ {vmin}"
            )));
        }
        let dual = rs.dual();
        Ok(WLevel { rs, dual, u, v })
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dual(&self) -> &RootSystem {
        &self.dual
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn v(&self) -> i64 {
        self.v
    }

    /// `k = −h∨ + u/v`.
    pub fn k(&self) -> Rational64 {
        Rational64::new(self.u, self.v) - self.rs.dual_coxeter_number()
    }

    pub fn left_level(&self) -> i64 {
        self.u - self.rs.dual_coxeter_number()
    }

    pub fn right_level(&self) -> i64 {
        self.v - self.rs.coxeter_number()
    }

    pub fn left_simples(&self) -> Result<Vec<Weight>> {
        self.rs.simples_of_level(self.left_level())
    }

    pub fn right_simples(&self) -> Result<Vec<Weight>> {
        self.dual.simples_of_level(self.right_level())
    }

    fn require_simply_laced(&self, what: &str) -> Result<()> {
        if self.rs.is_simply_laced() {
            Ok(())
        } else {
            Err(Error::NotSimplyLaced(what.into()))
        }
    }

    pub fn check_label(&self, x: &WLabel) -> Result<()> {
        self.rs.check_weight(&x.left)?;
        self.dual.check_weight(&x.right)?;
        let ok = x.left.is_dominant()
            && x.right.is_dominant()
            && self.rs.level_of(&x.left) <= self.left_level()
            && self.dual.level_of(&x.right) <= self.right_level();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLabel(format!("{x} is not a label at u/v = {}/{}", self.u, self.v)))
        }
    }

    /// The simple-current orbit of a raw label (simply-laced only).
    pub fn orbit(&self, x: &WLabel) -> Result<Vec<WLabel>> {
        self.require_simply_laced("orbit")?;
        let group = self.rs.discriminant_group()?;
        let (m1, m2) = (self.left_level(), self.right_level());
        let mut out: Vec<WLabel> = group
            .representatives
            .iter()
            .map(|rep| WLabel {
                left: self.rs.current_action_for(rep, m1, &x.left),
                right: self.dual.current_action_for(rep, m2, &x.right),
            })
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Lexicographically smallest member of the orbit; raw labels are
    /// returned unchanged for non-simply-laced types.
    pub fn canonicalize(&self, x: &WLabel) -> WLabel {
        match self.orbit(x) {
            Ok(orbit) => orbit.into_iter().next().expect("orbit contains x"),
            Err(_) => x.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WLabel {
    pub left: Weight,
    pub right: Weight,
}

impl WLabel {
    pub fn new(left: Weight, right: Weight) -> Self {
        WLabel { left, right }
    }
}

impl fmt::Display for WLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{}]", self.left, self.right)
    }
}

/// One identification class.
#[derive(Clone, Debug, Serialize)]
pub struct WClass {
    pub label: WLabel,
    pub orbit_size: usize,
    pub members: Vec<WLabel>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WLabels {
    pub classes: Vec<WClass>,
    pub raw_count: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl WLabels {
    pub fn labels(&self) -> Vec<WLabel> {
        self.classes.iter().map(|c| c.label.clone()).collect()
    }
}

pub fn w_labels(k: &WLevel) -> Result<WLabels> {
    let left = k.left_simples()?;
    let right = k.right_simples()?;
    let raw: Vec<WLabel> = left
        .iter()
        .flat_map(|l| right.iter().map(move |r| WLabel::new(l.clone(), r.clone())))
        .collect();
    if raw.len() > k.rs.limits().simples_max {
        return Err(Error::SimplesCapExceeded {
            count: raw.len(),
            cap: k.rs.limits().simples_max,
        });
    }
    let raw_count = raw.len();
    if !k.rs.is_simply_laced() {
        return Ok(WLabels {
            classes: raw
                .into_iter()
                .map(|x| WClass {
                    label: x.clone(),
                    orbit_size: 1,
                    members: vec![x],
                })
                .collect(),
            raw_count,
            warnings: vec![format!(
                "{} is not simply-laced: labels are not identified and are reported raw",
                k.rs
            )],
        });
    }
    let mut classes: BTreeMap<WLabel, Vec<WLabel>> = BTreeMap::new();
    for x in &raw {
        let orbit = k.orbit(x)?;
        classes.entry(orbit[0].clone()).or_insert(orbit);
    }
    Ok(WLabels {
        classes: classes
            .into_iter()
            .map(|(label, members)| WClass {
                label,
                orbit_size: members.len(),
                members,
            })
            .collect(),
        raw_count,
        warnings: vec![],
    })
}

/// Weyl-sum tables used by the S-ratio formula.
struct ChiTables {
    left: Vec<Weight>,
    right: Vec<Weight>,
    /// `a[μ][λ] = chi(rs, μ, λ; v, u)`
    a: Vec<Vec<CycloNum>>,
    /// `b[μ′][λ′] = chi(dual, μ′, λ′; u, v)`
    b: Vec<Vec<CycloNum>>,
}

impl ChiTables {
    fn new(k: &WLevel) -> Result<Self> {
        let left = k.left_simples()?;
        let right = k.right_simples()?;
        let zl = k.rs.zero();
        let zr = k.dual.zero();
        // Column 0 holds the vacuum λ = 0 at index 0 of the sorted lists.
        debug_assert!(left[0] == zl && right[0] == zr);
        let a = table(&k.rs, &left, k.v, k.u)?;
        let b = table(&k.dual, &right, k.u, k.v)?;
        Ok(ChiTables { left, right, a, b })
    }

    fn index(&self, x: &WLabel) -> (usize, usize) {
        (
            self.left.binary_search(&x.left).expect("left label in range"),
            self.right.binary_search(&x.right).expect("right label in range"),
        )
    }
}

fn table(rs: &RootSystem, labels: &[Weight], r: i64, u: i64) -> Result<Vec<Vec<CycloNum>>> {
    rs.weyl_group()?;
    let n = labels.len();
    let flat: Vec<CycloNum> = (0..n * n)
        .into_par_iter()
        .map(|t| wzw::chi(rs, &labels[t / n], &labels[t % n], r, u))
        .collect::<Result<_>>()?;
    Ok(flat.chunks(n).map(|c| c.to_vec()).collect())
}

fn s_ratio_from_tables(k: &WLevel, t: &ChiTables, x: &WLabel, y: &WLabel) -> Result<CycloNum> {
    let (l, lp) = t.index(x);
    let (m, mp) = t.index(y);
    let rho = k.rs.rho();
    let phase = k.rs.inner_product(&x.right, &(&y.left + &rho))?
        + k.rs.inner_product(&x.left, &(&y.right + &rho))?;
    let den = &t.a[m][0] * &t.b[mp][0];
    if den.is_zero() {
        return Err(Error::ZeroDenominator(format!("S-ratio column {y}")));
    }
    let num = &(&CycloNum::root_of_unity_q(&phase) * &t.a[m][l]) * &t.b[mp][lp];
    Ok(&num / &den)
}

/// Normalized ratio `S_{x,y} / S_{0,y}`.
pub fn w_s_ratio(k: &WLevel, x: &WLabel, y: &WLabel) -> Result<CycloNum> {
    k.require_simply_laced("w_s_ratio")?;
    k.check_label(x)?;
    k.check_label(y)?;
    let t = ChiTables::new(k)?;
    s_ratio_from_tables(k, &t, x, y)
}

/// `R[i][j] = w_s_ratio(x_i, x_j)` over the given labels.
pub fn w_s_ratio_matrix(k: &WLevel, labels: &[WLabel]) -> Result<Matrix> {
    k.require_simply_laced("w_s_ratio_matrix")?;
    for x in labels {
        k.check_label(x)?;
    }
    let t = ChiTables::new(k)?;
    labels
        .iter()
        .map(|x| labels.iter().map(|y| s_ratio_from_tables(k, &t, x, y)).collect())
        .collect()
}

/// Fusion rules as products of the two integer-level WZW factors,
/// followed by orbit canonicalization.
pub fn w_fusion(k: &WLevel) -> Result<FusionTable<WLabel>> {
    k.require_simply_laced("w_fusion")?;
    let labels = w_labels(k)?.labels();
    let left = wzw::verlinde_fusion(&k.rs, k.left_level())?;
    let right = wzw::verlinde_fusion(&k.dual, k.right_level())?;
    let index: BTreeMap<WLabel, usize> =
        labels.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
    let pos = |t: &FusionTable<Weight>, w: &Weight| t.simples.binary_search(w).expect("alcove label");
    let mut out = FusionTable::new(
        format!("W({})", k.rs),
        k.rs.rank(),
        k.k().to_string(),
        labels.clone(),
    );
    for (i, x) in labels.iter().enumerate() {
        for (j, y) in labels.iter().enumerate() {
            let ll = left.row(pos(&left, &x.left), pos(&left, &y.left));
            let rr = right.row(pos(&right, &x.right), pos(&right, &y.right));
            for &(a, na) in &ll {
                for &(b, nb) in &rr {
                    let z = k.canonicalize(&WLabel::new(
                        left.simples[a].clone(),
                        right.simples[b].clone(),
                    ));
                    out.add(i, j, index[&z], na * nb);
                }
            }
        }
    }
    Ok(out)
}

/// `w_s_ratio((λ,0),(0,λ′)) / w_s_ratio((λ,0),(0,0))`, which should equal
/// `e^{2πi(λ,λ′)}`.
pub fn centralizer_phase(k: &WLevel, lambda: &Weight, lambda_p: &Weight) -> Result<CycloNum> {
    k.require_simply_laced("centralizer_phase")?;
    let x = WLabel::new(lambda.clone(), k.dual.zero());
    let y = WLabel::new(k.rs.zero(), lambda_p.clone());
    k.check_label(&x)?;
    k.check_label(&y)?;
    let t = ChiTables::new(k)?;
    let vac = WLabel::new(k.rs.zero(), k.dual.zero());
    Ok(&s_ratio_from_tables(k, &t, &x, &y)? / &s_ratio_from_tables(k, &t, &x, &vac)?)
}

/// Centralizer phases for every `(λ, λ′)`: equal to `e^{2πi(λ,λ′)}` and
/// trivial when `λ ∈ Q`.
pub fn verify_centralizer(k: &WLevel) -> Result<Report> {
    k.require_simply_laced("verify_centralizer")?;
    let t = ChiTables::new(k)?;
    let vac = WLabel::new(k.rs.zero(), k.dual.zero());
    let mut report = Report::new("centralizer", k.rs.to_string(), k.u, k.v);
    let mut in_q = 0;
    for l in &t.left {
        for lp in &t.right {
            let x = WLabel::new(l.clone(), k.dual.zero());
            let y = WLabel::new(k.rs.zero(), lp.clone());
            let phase = &s_ratio_from_tables(k, &t, &x, &y)? / &s_ratio_from_tables(k, &t, &x, &vac)?;
            let pairing = k.rs.inner_product(l, lp)?;
            let expect = CycloNum::root_of_unity_q(&pairing);
            if k.rs.in_root_lattice(l) {
                in_q += 1;
                report.push(Check::equality(
                    format!("phase({l},{lp}) = 1 for λ in Q"),
                    phase.clone(),
                    CycloNum::one(),
                ));
            }
            report.push(
                Check::equality(format!("phase({l},{lp}) = e(({l},{lp}))"), phase, expect)
                    .with_detail(format!("(λ,λ′) = {pairing}")),
            );
        }
    }
    report.set("root_lattice_labels", in_q);
    Ok(report)
}

/// `S_{(λ,λ′),y}/S_{0,y} = (S_{(λ,0),y}/S_{0,y}) (S_{(0,λ′),y}/S_{0,y})` for all classes.
pub fn verify_factorization(k: &WLevel) -> Result<Report> {
    k.require_simply_laced("verify_factorization")?;
    let labels = w_labels(k)?.labels();
    let t = ChiTables::new(k)?;
    let mut report = Report::new("w-factorization", k.rs.to_string(), k.u, k.v);
    for x in &labels {
        let xl = WLabel::new(x.left.clone(), k.dual.zero());
        let xr = WLabel::new(k.rs.zero(), x.right.clone());
        for y in &labels {
            let lhs = s_ratio_from_tables(k, &t, x, y)?;
            let rhs = &s_ratio_from_tables(k, &t, &xl, y)? * &s_ratio_from_tables(k, &t, &xr, y)?;
            report.push(Check::equality(format!("S({x},{y}) factorizes"), lhs, rhs));
        }
    }
    Ok(report)
}

/// The normalized S-ratio rows represent the fusion ring of [`w_fusion`],
/// and are constant on identification orbits.
pub fn verify_w_ring(k: &WLevel) -> Result<Report> {
    k.require_simply_laced("verify_w_ring")?;
    let classes = w_labels(k)?;
    let labels = classes.labels();
    let fusion = w_fusion(k)?;
    let t = ChiTables::new(k)?;
    let n = labels.len();
    let r: Vec<Vec<CycloNum>> = labels
        .iter()
        .map(|x| labels.iter().map(|y| s_ratio_from_tables(k, &t, x, y)).collect())
        .collect::<Result<_>>()?;
    let mut report = Report::new("w-ring", k.rs.to_string(), k.u, k.v);
    for c in 0..n {
        for a in 0..n {
            for b in 0..n {
                let lhs = &r[a][c] * &r[b][c];
                let rhs: CycloNum = fusion
                    .row(a, b)
                    .into_iter()
                    .map(|(z, m)| &CycloNum::from_integer(m as i64) * &r[z][c])
                    .sum();
                report.push(Check::equality(
                    format!("R({},{})R({},{}) = Σ N R", labels[a], labels[c], labels[b], labels[c]),
                    lhs,
                    rhs,
                ));
            }
        }
    }
    for class in &classes.classes {
        for member in &class.members {
            for y in &labels {
                let a = s_ratio_from_tables(k, &t, &class.label, y)?;
                let b = s_ratio_from_tables(k, &t, member, y)?;
                report.push(Check::equality(format!("orbit invariance {member} ~ {}", class.label), a, b));
                let a = s_ratio_from_tables(k, &t, y, &class.label)?;
                let b = s_ratio_from_tables(k, &t, y, member)?;
                report.push(Check::equality(format!("column invariance {member} ~ {}", class.label), a, b));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_root_system, Family};

    fn a1() -> RootSystem {
        build_root_system(Family::A, 1).unwrap()
    }

    fn wl(a: i64, b: i64) -> WLabel {
        WLabel::new(Weight::new(vec![a]), Weight::new(vec![b]))
    }

    #[test]
    fn window() {
        assert!(WLevel::new(a1(), 3, 4).is_ok());
        assert!(WLevel::new(a1(), 2, 5).is_ok());
        assert!(WLevel::new(a1(), 1, 3).is_err());
        let a2 = build_root_system(Family::A, 2).unwrap();
        assert!(matches!(WLevel::new(a2, 4, 4), Err(Error::InvalidLevel(_))));
        let b2 = build_root_system(Family::B, 2).unwrap();
        // r∨ = 2 divides v: need u ≥ h = 4 and v ≥ 2·3
        assert!(WLevel::new(b2.clone(), 5, 6).is_ok());
        assert!(WLevel::new(b2.clone(), 3, 6).is_err());
        assert!(WLevel::new(b2, 5, 4).is_err());
    }

    #[test]
    fn ising_labels() {
        let k = WLevel::new(a1(), 3, 4).unwrap();
        let l = w_labels(&k).unwrap();
        assert_eq!(l.raw_count, 6);
        assert_eq!(l.labels(), vec![wl(0, 0), wl(0, 1), wl(0, 2)]);
        assert!(l.classes.iter().all(|c| c.orbit_size == 2));
        assert_eq!(k.canonicalize(&wl(1, 1)), wl(0, 1));
        let k = WLevel::new(a1(), 4, 3).unwrap();
        assert_eq!(w_labels(&k).unwrap().classes.len(), 3);
        // (2,3): the trivial model, both raw labels are identified.
        let k = WLevel::new(a1(), 2, 3).unwrap();
        let l = w_labels(&k).unwrap();
        assert_eq!(l.labels(), vec![wl(0, 0)]);
        assert_eq!(l.classes[0].orbit_size, 2);
    }

    #[test]
    fn ising_ratios() {
        let k = WLevel::new(a1(), 3, 4).unwrap();
        let sigma = wl(0, 1);
        assert!(w_s_ratio(&k, &wl(0, 0), &sigma).unwrap().is_one());
        assert!(w_s_ratio(&k, &sigma, &sigma).unwrap().is_zero());
        let d = w_s_ratio(&k, &sigma, &wl(0, 0)).unwrap();
        assert!((d.abs_squared_f64() - 2.0).abs() < 1e-12);
        for y in [wl(0, 0), wl(0, 1), wl(0, 2)] {
            assert_eq!(
                w_s_ratio(&k, &wl(1, 1), &y).unwrap(),
                w_s_ratio(&k, &sigma, &y).unwrap()
            );
        }
    }

    #[test]
    fn ising_fusion() {
        let k = WLevel::new(a1(), 3, 4).unwrap();
        let t = w_fusion(&k).unwrap();
        // 0 = 1, 1 = σ, 2 = ε
        assert_eq!(t.row(1, 1), vec![(0, 1), (2, 1)]);
        assert_eq!(t.row(1, 2), vec![(1, 1)]);
        assert_eq!(t.row(2, 2), vec![(0, 1)]);
        assert!(t.check_unit() && t.check_symmetry() && t.check_associativity());
        assert!(verify_w_ring(&k).unwrap().pass);
        assert!(verify_factorization(&k).unwrap().pass);
    }

    #[test]
    fn centralizer_examples() {
        let k = WLevel::new(a1(), 4, 3).unwrap();
        let p = centralizer_phase(&k, &Weight::new(vec![2]), &Weight::new(vec![1])).unwrap();
        assert!(p.is_one());
        let k = WLevel::new(a1(), 3, 4).unwrap();
        let p = centralizer_phase(&k, &Weight::new(vec![1]), &Weight::new(vec![1])).unwrap();
        assert_eq!(p, CycloNum::from_integer(-1));
        assert!(centralizer_phase(&k, &Weight::new(vec![0]), &Weight::new(vec![2])).unwrap().is_one());
        assert!(verify_centralizer(&k).unwrap().pass);
    }

    #[test]
    fn non_simply_laced_is_raw() {
        let b2 = build_root_system(Family::B, 2).unwrap();
        let k = WLevel::new(b2, 5, 6).unwrap();
        let l = w_labels(&k).unwrap();
        assert!(!l.warnings.is_empty());
        assert_eq!(l.classes.len(), l.raw_count);
        assert!(matches!(w_fusion(&k), Err(Error::NotSimplyLaced(_))));
    }
}
