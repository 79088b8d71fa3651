use crate::common::*;
use hilbert_games::lina::{
    c64, eig_hermitian, gibbs_exp, kron, kron_all, op_inner, partial_trace, ComplexMatrix, DimensionProfile,
};

pub fn random_profile() -> impl Strategy<Value = Vec<usize>> {
    prop_oneof![Just(vec![2, 2]), Just(vec![2, 3]), Just(vec![3, 2]), Just(vec![2, 2, 2])]
}

pub fn kron_trace_is_multiplicative() {
    proptest!(config(), |((n, a) in square(2..=3), (m, b) in square(2..=3))| {
        let (a, b) = (matrix_from(n, n, &a), matrix_from(m, m, &b));
        let k = kron(&a, &b);
        prop_assert!((k.trace() - a.trace() * b.trace()).norm() <= 1e-12);
        prop_assert!(max_diff(&k, &naive_kron(&a, &b)) == 0.0);
    });
}

pub fn partial_trace_matches_index_sum() {
    proptest!(config(), |(dims in random_profile(), seed in entries(2 * 64))| {
        let profile = DimensionProfile::new(dims.clone()).unwrap();
        let n = profile.total();
        let m = matrix_from(n, n, &seed[..2 * n * n]);
        let mut kept_traces = c64(0.0, 0.0);
        for keep in 0..dims.len() {
            let reduced = partial_trace(&m, &profile, keep).unwrap();
            prop_assert!(max_diff(&reduced, &naive_partial_trace(&m, &dims, keep)) <= 1e-12);
            prop_assert!((reduced.trace() - m.trace()).norm() <= 1e-12);
            kept_traces += reduced.trace();
        }
        prop_assert!((kept_traces - m.trace() * dims.len() as f64).norm() <= 1e-11);
    });
}

pub fn partial_trace_is_linear() {
    proptest!(config(), |(dims in random_profile(), x in entries(2 * 64), y in entries(2 * 64), s in -2.0_f64..2.0)| {
        let profile = DimensionProfile::new(dims).unwrap();
        let n = profile.total();
        let (a, b) = (matrix_from(n, n, &x[..2 * n * n]), matrix_from(n, n, &y[..2 * n * n]));
        let combo = a.add(&b.scale(c64(s, 0.0))).unwrap();
        let lhs = partial_trace(&combo, &profile, 0).unwrap();
        let rhs = partial_trace(&a, &profile, 0).unwrap()
            .add(&partial_trace(&b, &profile, 0).unwrap().scale(c64(s, 0.0))).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs).unwrap() <= 1e-12);
    });
}

pub fn partial_trace_of_product_recovers_factor() {
    proptest!(config(), |((n, a) in square(2..=3), (m, b) in square(2..=3))| {
        let (a, b) = (matrix_from(n, n, &a), matrix_from(m, m, &b));
        let profile = DimensionProfile::new(vec![n, m]).unwrap();
        let k = kron_all([&a, &b]).unwrap();
        let left = partial_trace(&k, &profile, 0).unwrap();
        let right = partial_trace(&k, &profile, 1).unwrap();
        prop_assert!(left.max_abs_diff(&a.scale(b.trace())).unwrap() <= 1e-12);
        prop_assert!(right.max_abs_diff(&b.scale(a.trace())).unwrap() <= 1e-12);
    });
}

pub fn eig_reconstructs_and_is_orthonormal() {
    proptest!(config(), |((n, seed) in square(1..=16), scale in prop_oneof![Just(1.0), Just(10.0), Just(1e-3)])| {
        let h = hermitian_from(n, &seed).scale(c64(scale, 0.0));
        let e = eig_hermitian(&h).unwrap();
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        let rebuilt = e.compose(&e.values);
        prop_assert!(rebuilt.max_abs_diff(&h).unwrap() <= 1e-10 * h.max_abs().max(1.0));
        let gram = e.vectors.adjoint().matmul(&e.vectors).unwrap();
        prop_assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)).unwrap() <= 1e-10);
        for k in 0..n {
            let v = e.vector(k);
            let lead = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
            let first = v.iter().find(|z| (z.norm() - lead).abs() <= 1e-12 * lead.max(1.0)).unwrap();
            prop_assert!(first.im.abs() <= 1e-12 && first.re > 0.0);
        }
    });
}

pub fn gibbs_commutes_and_is_a_density() {
    proptest!(config(), |((n, seed) in square(1..=6), beta in 0.0_f64..2.0)| {
        let h = hermitian_from(n, &seed);
        let g = gibbs_exp(&h, beta).unwrap();
        prop_assert!(g.commutator(&h).unwrap().max_abs() <= 1e-9);
        prop_assert!((g.trace().re - 1.0).abs() <= 1e-12 && g.trace().im.abs() <= 1e-12);
        let spectrum = eig_hermitian(&g).unwrap().values;
        prop_assert!(spectrum.iter().all(|&w| w > 0.0), "{spectrum:?}");
        prop_assert!((spectrum.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
    });
}

pub fn gibbs_survives_large_beta() {
    proptest!(config(), |((n, seed) in square(2..=5), beta in 50.0_f64..500.0)| {
        let g = gibbs_exp(&hermitian_from(n, &seed), beta).unwrap();
        prop_assert!(g.entries().iter().all(|z| z.re.is_finite() && z.im.is_finite()));
        prop_assert!((g.trace().re - 1.0).abs() <= 1e-12);
    });
}

pub fn op_inner_is_positive_definite() {
    proptest!(config(), |((n, seed) in square(1..=5))| {
        let a = matrix_from(n, n, &seed);
        prop_assume!(a.max_abs() > 1e-6);
        let g = op_inner(&a, &a).unwrap();
        prop_assert!(g.im.abs() <= 1e-15 && g.re > 0.0);
        let by_hand: f64 = a.entries().iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64;
        prop_assert!((g.re - by_hand).abs() <= 1e-12);
    });
}

pub fn op_inner_is_conjugate_symmetric() {
    proptest!(config(), |((n, x) in square(1..=4), y in entries(32))| {
        let a = matrix_from(n, n, &x);
        let b = matrix_from(n, n, &y[..2 * n * n]);
        let ab = op_inner(&a, &b).unwrap();
        let ba = op_inner(&b, &a).unwrap();
        prop_assert!((ab - ba.conj()).norm() <= 1e-12);
    });
}
