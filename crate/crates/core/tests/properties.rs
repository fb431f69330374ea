mod common;

use num::integer::gcd;
use num::{BigInt, BigRational};
use proptest::prelude::*;

use modfusion::walg::{self, WLevel};
use modfusion::wzw;
use modfusion::{build_root_system, CycloNum, Family, RootSystem, Weight};

const ORDERS: &[u64] = &[1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24, 60];

fn cyclo_in(m: u64) -> impl Strategy<Value = CycloNum> {
    let phi = modfusion::cyclo::euler_phi(m) as usize;
    prop::collection::vec((-6i64..=6, 1i64..=5), phi).prop_map(move |c| {
        let coeffs: Vec<BigRational> = c
            .into_iter()
            .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        CycloNum::from_coeffs(m, &coeffs)
    })
}

fn cyclo() -> impl Strategy<Value = CycloNum> {
    prop::sample::select(ORDERS).prop_flat_map(cyclo_in)
}

fn units(m: i64) -> Vec<i64> {
    (1..=m.max(1)).filter(|&t| gcd(t, m) == 1).collect()
}

fn root_system() -> impl Strategy<Value = RootSystem> {
    prop::sample::select(vec![
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::C, 3),
        (Family::D, 4),
        (Family::G, 2),
    ])
    .prop_map(|(f, n)| build_root_system(f, n).unwrap())
}

fn weight(rank: usize, lo: i64, hi: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(lo..=hi, rank).prop_map(Weight::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn inverse_is_two_sided(a in cyclo()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert!((&inv * &a).is_one());
        prop_assert_eq!(inv.inv().unwrap(), a);
    }

    #[test]
    fn galois_composes(x in cyclo_in(60), i in 0usize..16, j in 0usize..16) {
        let u = units(60);
        let (s, t) = (u[i], u[j]);
        prop_assert_eq!(x.galois(s).unwrap().galois(t).unwrap(), x.galois(s * t % 60).unwrap());
    }

    #[test]
    fn galois_is_a_ring_map(a in cyclo_in(24), b in cyclo_in(24), i in 0usize..8) {
        let t = units(24)[i];
        let g = |x: &CycloNum| x.galois(t).unwrap();
        prop_assert_eq!(g(&(&a * &b)), &g(&a) * &g(&b));
        prop_assert_eq!(g(&(&a + &b)), &g(&a) + &g(&b));
    }

    #[test]
    fn conjugation_is_galois_minus_one(x in cyclo()) {
        prop_assert_eq!(x.conj(), x.galois(-1).unwrap());
    }

    #[test]
    fn embedding_is_multiplicative(a in cyclo(), b in cyclo()) {
        let (ar, ai) = a.to_complex();
        let (br, bi) = b.to_complex();
        let (pr, pi) = (&a * &b).to_complex();
        let scale = 1.0 + (ar.hypot(ai) * br.hypot(bi));
        prop_assert!((pr - (ar * br - ai * bi)).abs() < 1e-9 * scale);
        prop_assert!((pi - (ar * bi + ai * br)).abs() < 1e-9 * scale);
    }

    #[test]
    fn lifting_preserves_value(x in cyclo_in(12), k in 1u64..5) {
        prop_assert_eq!(x.lift(12 * k), x);
    }

    #[test]
    fn json_round_trip(x in cyclo()) {
        let s = serde_json::to_string(&x).unwrap();
        let back: CycloNum = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_isometries(
        (rs, x, y, i) in root_system().prop_flat_map(|rs| {
            let n = rs.rank();
            (Just(rs), weight(n, -4, 4), weight(n, -4, 4), 0..n)
        })
    ) {
        let p = rs.inner_product(&x, &y).unwrap();
        prop_assert_eq!(rs.inner_product(&rs.reflect(i, &x), &rs.reflect(i, &y)).unwrap(), p);
        prop_assert_eq!(rs.reflect(i, &rs.reflect(i, &x)), x);
    }

    #[test]
    fn dominant_conjugate_lies_in_orbit(
        (rs, x) in root_system().prop_flat_map(|rs| { let n = rs.rank(); (Just(rs), weight(n, -3, 3)) })
    ) {
        let (d, _) = rs.to_dominant(&x);
        prop_assert!(d.is_dominant());
        let orbit = rs.orbit(&d);
        prop_assert!(orbit.contains(&x));
        prop_assert_eq!(rs.inner_product(&d, &d).unwrap(), rs.inner_product(&x, &x).unwrap());
    }

    #[test]
    fn chi_is_symmetric(
        (lam, mu, r, u) in (weight(2, 0, 2), weight(2, 0, 2), 1i64..4, 7i64..10)
    ) {
        let a2 = build_root_system(Family::A, 2).unwrap();
        prop_assume!(gcd(r, u) == 1);
        prop_assert_eq!(wzw::chi(&a2, &lam, &mu, r, u).unwrap(), wzw::chi(&a2, &mu, &lam, r, u).unwrap());
    }

    #[test]
    fn kac_walton_is_tensor_product_at_high_level(a in 0i64..4, b in 0i64..4, c in 0i64..3, d in 0i64..3) {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let x = Weight::new(vec![a, c]);
        let y = Weight::new(vec![b, d]);
        let m = a + b + c + d + 1;
        prop_assert_eq!(
            wzw::kac_walton_fusion(&a2, m, &x, &y).unwrap(),
            wzw::tensor_oracle(&a2, &x, &y)
        );
    }
}

fn w_level() -> impl Strategy<Value = WLevel> {
    prop::sample::select(vec![
        (Family::A, 1, 3, 4),
        (Family::A, 1, 4, 3),
        (Family::A, 1, 5, 3),
        (Family::A, 1, 5, 4),
        (Family::A, 1, 5, 6),
        (Family::A, 2, 4, 5),
        (Family::A, 2, 5, 4),
    ])
    .prop_map(|(f, n, u, v)| WLevel::new(build_root_system(f, n).unwrap(), u, v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn w_ratios_are_orbit_invariant((k, i, j, pick) in w_level().prop_flat_map(|k| {
        let n = walg::w_labels(&k).unwrap().classes.len();
        (Just(k), 0..n, 0..n, 0usize..8)
    })) {
        let labels = walg::w_labels(&k).unwrap();
        let x = &labels.classes[i];
        let y = &labels.classes[j].label;
        let member = &x.members[pick % x.members.len()];
        prop_assert_eq!(k.canonicalize(member), x.label.clone());
        prop_assert_eq!(
            walg::w_s_ratio(&k, member, y).unwrap(),
            walg::w_s_ratio(&k, &x.label, y).unwrap()
        );
        prop_assert_eq!(k.orbit(member).unwrap().len(), x.orbit_size);
    }
}
