//! Ordinary modules at admissible level `ℓ = −h∨ + u/v`.

use num::integer::gcd;
use num::rational::Rational64;
use serde::Serialize;

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::liealg::{RootSystem, Weight};
use crate::linalg::{self, Matrix};
use crate::report::{Check, Report};
use crate::wzw::{self, FusionTable};

#[derive(Clone, Debug)]
pub struct AdmissibleLevel {
    rs: RootSystem,
    u: i64,
    v: i64,
}

impl AdmissibleLevel {
    /// Checks `gcd(u, v) = 1` and `u ≥ h∨` (or `u ≥ h` when `r∨ | v`).
    pub fn new(rs: RootSystem, u: i64, v: i64) -> Result<Self> {
        if u <= 0 || v <= 0 {
            return Err(Error::InvalidLevel(format!("u and v must be positive, got ({u}, {v})")));
        }
        if gcd(u, v) != 1 {
            return Err(Error::InvalidLevel(format!("gcd({u}, {v}) ≠ 1")));
        }
        let r = rs.lacety();
        let bound = if gcd(v, r) == 1 {
            rs.dual_coxeter_number()
        } else {
            rs.coxeter_number()
        };
        if u < bound {
            return Err(Error::InvalidLevel(format!(
                "{rs} at u/v = {u}/{v} is not admissible: need u ≥ {bound}"
            )));
        }
        Ok(AdmissibleLevel { rs, u, v })
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn v(&self) -> i64 {
        self.v
    }

    /// `ℓ = −h∨ + u/v`.
    pub fn level(&self) -> Rational64 {
        Rational64::new(self.u, self.v) - self.rs.dual_coxeter_number()
    }

    /// The integer `u − h∨` indexing the ordinary simples.
    pub fn label_level(&self) -> i64 {
        self.u - self.rs.dual_coxeter_number()
    }

    fn require_simply_laced(&self, what: &str) -> Result<()> {
        if self.rs.is_simply_laced() {
            Ok(())
        } else {
            Err(Error::NotSimplyLaced(what.into()))
        }
    }
}

pub fn ordinary_simples(l: &AdmissibleLevel) -> Result<Vec<Weight>> {
    l.rs.simples_of_level(l.label_level())
}

/// `chi(λ, μ; v, u) / chi(0, μ; v, u)`.
pub fn hopf_ratio(l: &AdmissibleLevel, lambda: &Weight, mu: &Weight) -> Result<CycloNum> {
    wzw::chi_ratio(&l.rs, lambda, mu, l.v, l.u)
}

/// The matrix `[hopf_ratio(λ, μ)]` over the ordinary simples.
pub fn hopf_matrix(l: &AdmissibleLevel) -> Result<Matrix> {
    let simples = ordinary_simples(l)?;
    wzw::s_ratio_matrix(&l.rs, &simples, l.v, l.u)
}

/// Fusion rules of the ordinary category: those of the integer level `u − h∨`.
pub fn ordinary_fusion(l: &AdmissibleLevel) -> Result<FusionTable<Weight>> {
    l.require_simply_laced("ordinary_fusion")?;
    let mut t = wzw::verlinde_fusion(&l.rs, l.label_level())?;
    t.level = l.level().to_string();
    Ok(t)
}

/// Ring identities `H(λ,μ) H(ν,μ) = Σ_φ N_{λν}^φ H(φ,μ)` for all triples.
pub fn verify_verlinde_ordinary(l: &AdmissibleLevel) -> Result<Report> {
    l.require_simply_laced("verify_verlinde_ordinary")?;
    let table = ordinary_fusion(l)?;
    let h = hopf_matrix(l)?;
    let s = &table.simples;
    let n = s.len();
    let mut report = Report::new("hopf-verlinde", l.rs.to_string(), l.u, l.v);
    for mu in 0..n {
        for a in 0..n {
            for b in 0..n {
                let lhs = &h[a][mu] * &h[b][mu];
                let rhs: CycloNum = table
                    .row(a, b)
                    .into_iter()
                    .map(|(k, c)| &CycloNum::from_integer(c as i64) * &h[k][mu])
                    .sum();
                report.push(Check::equality(
                    format!("H({},{})·H({},{}) = Σ N H(φ,{})", s[a], s[mu], s[b], s[mu], s[mu]),
                    lhs,
                    rhs,
                ));
            }
        }
    }
    report.set("simples", s);
    Ok(report)
}

/// `σ_v` applied to the integer-level ratios reproduces the admissible ratios.
pub fn verify_galois_twist(l: &AdmissibleLevel) -> Result<Report> {
    let n_lat = l.rs.lattice_level();
    if gcd(n_lat, l.v) != 1 {
        return Err(Error::InvalidLevel(format!(
            "Galois twist needs gcd(N, v) = 1, got N = {n_lat}, v = {}",
            l.v
        )));
    }
    let simples = ordinary_simples(l)?;
    let base = wzw::s_ratio_matrix(&l.rs, &simples, 1, l.u)?;
    let twisted = hopf_matrix(l)?;
    let mut report = Report::new("galois", l.rs.to_string(), l.u, l.v);
    for (i, a) in simples.iter().enumerate() {
        for (j, b) in simples.iter().enumerate() {
            let image = base[i][j].galois(l.v)?;
            report.push(Check::equality(
                format!("σ_{}(S({a},{b})) = H({a},{b})", l.v),
                image,
                twisted[i][j].clone(),
            ));
        }
    }
    report.set("N", n_lat);
    report.set("field_order", l.u * n_lat);
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Modularity {
    pub gcd_test: bool,
    pub rank_test: bool,
    pub rank: usize,
    pub size: usize,
}

pub fn is_modular(l: &AdmissibleLevel) -> Result<Modularity> {
    l.require_simply_laced("is_modular")?;
    let h = hopf_matrix(l)?;
    let rank = linalg::rank(&h);
    Ok(Modularity {
        gcd_test: gcd(l.rs.lattice_level(), l.v) == 1,
        rank_test: rank == h.len(),
        rank,
        size: h.len(),
    })
}

/// Passes iff the Hopf matrix is invertible; also records whether the
/// coprimality criterion predicted it.
pub fn modularity_report(l: &AdmissibleLevel) -> Result<Report> {
    let m = is_modular(l)?;
    let mut report = Report::new("modularity", l.rs.to_string(), l.u, l.v);
    report.push(Check::boolean(
        "gcd(N, v) = 1 implies full rank",
        !m.gcd_test || m.rank_test,
        "",
    ));
    report.push(Check::boolean(
        "Hopf matrix has full rank",
        m.rank_test,
        format!("rank {} of {}", m.rank, m.size),
    ));
    if !m.rank_test {
        report.note("singular");
    }
    if !m.gcd_test && m.rank_test {
        report.note("invertible although gcd(N, v) > 1");
    }
    report.set("gcd_test", m.gcd_test);
    report.set("rank_test", m.rank_test);
    report.set("rank", m.rank);
    report.set("size", m.size);
    report.set("N", l.rs.lattice_level());
    report.set("N_scaling", l.rs.lattice_level_scaling());
    report.set("hopf_matrix", hopf_matrix(l)?);
    Ok(report)
}
