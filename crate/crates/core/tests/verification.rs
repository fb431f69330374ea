mod common;

use modfusion::admissible::{self, AdmissibleLevel};
use modfusion::coset;
use modfusion::walg::{self, WLevel};
use modfusion::wzw;
use modfusion::{build_root_system, Error, Family, Limits};

use common::w;

#[test]
fn triple_product_agrees_with_linear_solve() {
    for (f, n, m) in [(Family::A, 1, 4), (Family::A, 2, 2), (Family::D, 4, 1), (Family::E, 6, 1)] {
        let rs = build_root_system(f, n).unwrap();
        let a = wzw::verlinde_fusion(&rs, m).unwrap();
        let b = wzw::verlinde_fusion_triple_product(&rs, m).unwrap();
        assert_eq!(a.entries(), b.entries(), "{rs} level {m}");
        assert!(a.check_associativity() && a.check_duals());
    }
}

#[test]
fn wzw_oracle_reports_for_other_types() {
    for (f, n, m) in [(Family::D, 5, 1), (Family::E, 6, 1), (Family::A, 4, 1)] {
        let rs = build_root_system(f, n).unwrap();
        let r = wzw::wzw_oracle_report(&rs, m).unwrap();
        assert!(r.pass, "{rs}: {:?}", r.failures().next());
    }
}

#[test]
fn level_one_simply_laced_is_a_group_ring() {
    for (f, n) in [(Family::A, 3), (Family::D, 4), (Family::E, 6)] {
        let rs = build_root_system(f, n).unwrap();
        let t = wzw::verlinde_fusion(&rs, 1).unwrap();
        let g = rs.discriminant_group().unwrap();
        assert_eq!(t.len(), g.order(), "{rs}");
        for i in 0..t.len() {
            for j in 0..t.len() {
                assert_eq!(t.row(i, j).len(), 1);
            }
        }
    }
}

#[test]
fn w_algebra_reports_pass() {
    for (f, n, u, v) in [
        (Family::A, 1, 5, 7),
        (Family::A, 2, 4, 7),
        (Family::A, 3, 5, 4),
        (Family::D, 4, 7, 6),
    ] {
        let k = WLevel::new(build_root_system(f, n).unwrap(), u, v).unwrap();
        for r in [
            walg::verify_factorization(&k).unwrap(),
            walg::verify_w_ring(&k).unwrap(),
            walg::verify_centralizer(&k).unwrap(),
        ] {
            assert!(r.pass, "{} {f}{n} ({u},{v}): {:?}", r.theorem, r.failures().next());
        }
    }
}

#[test]
fn non_simply_laced_w_labels_are_raw() {
    let k = WLevel::new(build_root_system(Family::B, 2).unwrap(), 3, 5).unwrap();
    let labels = walg::w_labels(&k).unwrap();
    assert!(!labels.warnings.is_empty());
    assert_eq!(labels.classes.len(), labels.raw_count);
    assert!(matches!(walg::w_fusion(&k), Err(Error::NotSimplyLaced(_))));
    assert!(matches!(
        walg::centralizer_phase(&k, &w(&[0, 0]), &w(&[0, 0])),
        Err(Error::NotSimplyLaced(_))
    ));
}

#[test]
fn admissible_window_and_preconditions() {
    let a1 = build_root_system(Family::A, 1).unwrap();
    assert!(matches!(AdmissibleLevel::new(a1.clone(), 4, 6), Err(Error::InvalidLevel(_))));
    assert!(matches!(AdmissibleLevel::new(a1.clone(), 1, 3), Err(Error::InvalidLevel(_))));
    let l = AdmissibleLevel::new(a1, 3, 2).unwrap();
    assert!(matches!(admissible::verify_galois_twist(&l), Err(Error::InvalidLevel(_))));
}

#[test]
fn coset_partition_larger_cases() {
    for (f, n, u, v) in [(Family::A, 1, 5, 3), (Family::A, 2, 5, 2)] {
        let l = AdmissibleLevel::new(build_root_system(f, n).unwrap(), u, v).unwrap();
        let r = coset::verify_partition(&l).unwrap();
        assert!(r.pass, "{f}{n} ({u},{v}): {:?}", r.failures().next());
    }
}

#[test]
fn caps_are_enforced() {
    let small = Limits { weyl_max: 100, simples_max: 10 };
    let d4 = build_root_system(Family::D, 4).unwrap().with_limits(small);
    assert!(d4.weyl_group().unwrap_err().is_cap());
    let a1 = build_root_system(Family::A, 1).unwrap().with_limits(small);
    assert!(a1.simples_of_level(9).is_ok());
    assert!(a1.simples_of_level(10).unwrap_err().is_cap());
}
