use proptest::prelude::*;
use sphefaffian::finitekernel::{skew_kernel_tilde, SkewOpSystem};
use sphefaffian::linstat::{char_function, RadialStatistic};
use sphefaffian::pfaffian::SkewMatrix;
use sphefaffian::sampler::{from_sphere, to_sphere};
use sphefaffian::{Complex64, EnsembleParams};

fn point() -> impl Strategy<Value = Complex64> {
    (-1.5f64..1.5, -1.5f64..1.5)
        .prop_map(|(x, y)| Complex64::new(x, y))
        .prop_filter("away from ±i", |z| (Complex64::new(1.0, 0.0) + z * z).norm() > 0.1)
}

fn params() -> impl Strategy<Value = EnsembleParams> {
    (1usize..7, 1usize..6, 0u32..6).prop_map(|(big_n, dn, l2)| EnsembleParams::new(big_n, (big_n + dn) as f64, l2 as f64 / 2.0).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_is_antisymmetric(p in params(), z in point(), w in point()) {
        prop_assert_eq!(skew_kernel_tilde(&p, z, w).unwrap(), -skew_kernel_tilde(&p, w, z).unwrap());
    }

    #[test]
    fn kernel_routes_agree(p in params(), z in point(), w in point()) {
        let a = skew_kernel_tilde(&p, z, w).unwrap();
        let b = SkewOpSystem::new(p).unwrap().kernel_tilde(z, w).unwrap();
        prop_assert!((a - b).norm() <= 1e-10 * a.norm().max(b.norm()).max(1e-300));
    }

    #[test]
    fn weight_is_conjugation_symmetric(p in params(), z in point()) {
        let (a, b) = (p.weight_omega(z), p.weight_omega(z.conj()));
        prop_assert!((a - b).abs() <= 1e-14 * a.max(b));
        prop_assert!(a >= 0.0);
    }

    #[test]
    fn characteristic_function_is_bounded(p in params(), k in -5.0f64..5.0, e in 0.5f64..2.0) {
        let v = char_function(&p, &RadialStatistic::power(e), k).unwrap();
        prop_assert!(v.norm() <= 1.0 + 1e-12);
    }

    #[test]
    fn sphere_round_trip(x in -50.0f64..50.0, y in -50.0f64..50.0) {
        let z = Complex64::new(x, y);
        let back = from_sphere(to_sphere(z));
        prop_assert!((back - z).norm() <= 1e-12 * z.norm().max(1.0));
    }

    #[test]
    fn pfaffian_squares_to_determinant(half in 1usize..12, entries in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 24 * 24)) {
        let dim = 2 * half;
        let a = SkewMatrix::from_fn(dim, |i, j| {
            let (re, im) = entries[i * dim + j];
            Complex64::new(re, im)
        })
        .unwrap();
        let pf = a.pfaffian();
        let det = a.matrix().clone().determinant();
        prop_assert!((pf * pf - det).norm() <= 1e-9 * det.norm().max(1e-300));
    }
}
