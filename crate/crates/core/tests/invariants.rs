use num_integer::Integer;
use proptest::prelude::*;

use torus_twist::fourmanifold::{
    kikuchi_eliminate, FourManifoldLedger, KikuchiInapplicable, KikuchiResult, Linear, Summand,
};
use torus_twist::knot::{normalize, TorusKnotParams};
use torus_twist::lattice::{sigma_closed, sigma_oracle, signature_upper_bound};
use torus_twist::obstruction::{classify, Verdict};
use torus_twist::tristram::{tristram_value, RoutePolicy, TristramConfig};

fn coprime() -> impl Strategy<Value = (i64, i64)> {
    (2i64..120, 1i64..120)
        .prop_map(|(p, dq)| (p, p + dq))
        .prop_filter("coprime", |(p, q)| p.gcd(q) == 1)
}

proptest! {
    #[test]
    fn closed_formula_matches_lattice_count((p, q) in coprime()) {
        let k = TorusKnotParams::new(p, q).unwrap();
        let s = sigma_closed(k).unwrap().value();
        prop_assert_eq!(s, sigma_oracle(k).unwrap().value());
        prop_assert!(s <= signature_upper_bound(k).unwrap());
        prop_assert_eq!(s % 2, 0);
    }

    #[test]
    fn mirror_negates_the_lattice_route((p, q) in coprime(), d in prop::sample::select(vec![2u32, 3, 5, 7])) {
        let cfg = TristramConfig { route: RoutePolicy::Lattice, ..TristramConfig::default() };
        let k = TorusKnotParams::new(p, q).unwrap();
        let m = TorusKnotParams::new(-p, q).unwrap();
        prop_assert!(normalize(m).mirror);
        let a = tristram_value(k, d, &cfg).unwrap().sigma;
        let b = tristram_value(m, d, &cfg).unwrap().sigma;
        prop_assert_eq!(a, -b);
    }

    #[test]
    fn sphere_test_solves_exactly(c in 0i64..60, a in -20i64..20, b in -20i64..20, extra in 0u32..3) {
        // −CP²(ω) + CP²(c) + extra·CP²(1) + S²×S²(2a, 2b): ξ·ξ − σ = c² + 8ab − ω²
        let mut l = FourManifoldLedger::new();
        l.push(Summand::MinusCp2 { coefficient: Linear::omega() });
        l.push(Summand::PlusCp2 { coefficient: Linear::constant(c) });
        for _ in 0..extra {
            l.push(Summand::PlusCp2 { coefficient: Linear::constant(1) });
        }
        l.push(Summand::S2xS2 { alpha: Linear::constant(2 * a), beta: Linear::constant(2 * b) });
        let result = kikuchi_eliminate(&l);
        if extra == 2 {
            let too_large = matches!(result, KikuchiResult::Inapplicable(KikuchiInapplicable::BettiNumbersTooLarge { .. }));
            prop_assert!(too_large);
        } else if c % 2 == 0 {
            prop_assert!(matches!(result, KikuchiResult::Inapplicable(KikuchiInapplicable::NotCharacteristic)));
        } else {
            let target = c * c + 8 * a * b;
            let root: Vec<u64> = (1..=target.max(0)).filter(|w| w * w == target).map(|w| w as u64).collect();
            prop_assert_eq!(result.admissible(), Some(&root[..]));
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn certificates_partition_the_candidates((p, q) in (2i64..14, 1i64..12).prop_map(|(p, d)| (p, p + d))) {
        prop_assume!(p.gcd(&q) == 1);
        let c = classify(TorusKnotParams::new(p, q).unwrap()).unwrap();
        if c.verdict != Verdict::TrivialOrExceptional {
            let mut omegas: Vec<u64> = c.eliminations.iter().map(|e| e.omega)
                .chain(c.survivors.iter().map(|s| s.omega)).collect();
            omegas.sort_unstable();
            prop_assert_eq!(omegas, (2..q as u64).collect::<Vec<_>>());
            prop_assert!(c.survivors.iter().all(|s| s.n == 1));
        } else {
            prop_assert!(c.survivors.is_empty() && c.eliminations.is_empty());
        }
    }
}
