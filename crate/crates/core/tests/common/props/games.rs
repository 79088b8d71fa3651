use crate::common::*;
use hilbert_games::games::{
    classical_payoff_matrix, decompose_operator, mixture_state, payoff, penny_basis, pure_state,
    quantum_payoff_unsymmetrized, system_from_players, BasisOperator, ClassicalGame, PayoffMatrix, QuantumGameSpec,
};
use hilbert_games::lina::{c64, eig_hermitian, Complex64, ComplexMatrix};

/// Player count, strategy counts and one payoff tensor per player.
pub fn classical_game() -> impl Strategy<Value = ClassicalGame> {
    (2_usize..=3)
        .prop_flat_map(|n| prop::collection::vec(1_usize..=3, n))
        .prop_flat_map(|dims| {
            let total: usize = dims.iter().product();
            let n = dims.len();
            (Just(dims), prop::collection::vec(prop::collection::vec(-10.0_f64..10.0, total), n))
        })
        .prop_map(|(dims, tensors)| {
            let labels = dims.iter().map(|&l| (0..l).map(|k| format!("s{k}")).collect()).collect();
            ClassicalGame::new(labels, tensors).unwrap()
        })
}

pub fn game_with_mixes() -> impl Strategy<Value = (ClassicalGame, Vec<Vec<f64>>)> {
    classical_game().prop_flat_map(|g| {
        let mixes: Vec<_> = g.profile().dims().iter().map(|&l| weights(l)).collect();
        (Just(g), mixes)
    })
}

/// Random unit amplitudes with random phases.
pub fn amplitudes(len: usize) -> impl Strategy<Value = Vec<Complex64>> {
    (weights(len), prop::collection::vec(0.0_f64..std::f64::consts::TAU, len))
        .prop_map(|(w, phases)| w.iter().zip(phases).map(|(p, t)| Complex64::from_polar(p.sqrt(), t)).collect())
}

pub fn unitary_from(n: usize, seed: &[f64]) -> ComplexMatrix {
    eig_hermitian(&hermitian_from(n, seed)).unwrap().vectors
}

/// Clock-and-shift operators `X^a Z^b`, orthonormal under the normalized
/// trace inner product.
pub fn clock_shift(d: usize) -> Vec<ComplexMatrix> {
    let mut out = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let mut m = ComplexMatrix::zeros(d, d);
            for col in 0..d {
                let phase = std::f64::consts::TAU * (b * col) as f64 / d as f64;
                m[((col + a) % d, col)] = Complex64::from_polar(1.0, phase);
            }
            out.push(m);
        }
    }
    out
}

pub fn quantum_spec() -> impl Strategy<Value = QuantumGameSpec> {
    (2_usize..=3)
        .prop_flat_map(|d| {
            let ops = d * d;
            (
                Just(d),
                entries(2 * d * d),
                entries(2 * d * d),
                entries(2 * d * d),
                entries(2 * d * d),
                prop::collection::vec(prop::sample::subsequence((0..ops).collect::<Vec<_>>(), 2..=ops.min(4)), 2),
            )
        })
        .prop_map(|(d, rho, p1, p2, u, picks)| {
            let u = unitary_from(d, &u);
            let all = clock_shift(d);
            let bases = picks
                .iter()
                .map(|idx| {
                    idx.iter()
                        .map(|&k| BasisOperator {
                            label: format!("b{k}"),
                            operator: u.matmul(&all[k]).unwrap().matmul(&u.adjoint()).unwrap(),
                        })
                        .collect()
                })
                .collect();
            QuantumGameSpec {
                name: None,
                object_dim: d,
                rho0: density_from(d, &rho),
                payoff_operators: vec![hermitian_from(d, &p1), hermitian_from(d, &p2)],
                strategy_bases: bases,
                classical_strategies: Vec::new(),
                acting_order: vec![0, 1],
            }
            .validated()
            .unwrap()
        })
}

pub fn classical_matrices_are_exactly_diagonal() {
    proptest!(config(), |(g in classical_game())| {
        for i in 0..g.players() {
            let h = classical_payoff_matrix(&g, i).unwrap();
            prop_assert!(h.matrix().off_diagonal_max() == 0.0);
            for flat in 0..g.profile().total() {
                let multi = g.profile().unflatten(flat);
                prop_assert_eq!(h.matrix()[(flat, flat)], c64(g.payoff_at(i, &multi), 0.0));
            }
        }
    });
}

pub fn trace_form_equals_multilinear_form() {
    proptest!(config(), |((g, mixes) in game_with_mixes())| {
        let states: Vec<_> = mixes.iter().map(|p| mixture_state(p).unwrap()).collect();
        let system = system_from_players(&states).unwrap();
        for i in 0..g.players() {
            // Independent sum over pure profiles.
            let mut expected = 0.0;
            for flat in 0..g.profile().total() {
                let multi = g.profile().unflatten(flat);
                let w: f64 = multi.iter().zip(&mixes).map(|(&m, p)| p[m]).product();
                expected += w * g.tensor(i)[flat];
            }
            let h = classical_payoff_matrix(&g, i).unwrap();
            prop_assert!((payoff(&system, &h).unwrap() - expected).abs() <= 1e-12);
        }
    });
}

pub fn phase_is_irrelevant_for_diagonal_payoffs() {
    proptest!(config(), |((g, x1, x2) in classical_game()
            .prop_filter("two players", |g| g.players() == 2)
            .prop_flat_map(|g| {
                let d = g.profile().dims().to_vec();
                (Just(g), amplitudes(d[0]), amplitudes(d[1]))
            }))| {
        let pure = system_from_players(&[pure_state(&x1).unwrap(), pure_state(&x2).unwrap()]).unwrap();
        let probs = |x: &[Complex64]| x.iter().map(|z| z.norm_sqr()).collect::<Vec<_>>();
        let mixed = system_from_players(&[
            mixture_state(&normalize(&probs(&x1))).unwrap(),
            mixture_state(&normalize(&probs(&x2))).unwrap(),
        ])
        .unwrap();
        for i in 0..2 {
            let h = classical_payoff_matrix(&g, i).unwrap();
            prop_assert!((payoff(&pure, &h).unwrap() - payoff(&mixed, &h).unwrap()).abs() <= 1e-12);
        }
    });
}

pub fn pure_product_payoff_is_an_expectation_value() {
    proptest!(config(), |((l1, l2) in (1_usize..=4, 1_usize..=4),
        seed in entries(2 * 256),
        x1 in amplitudes(4),
        x2 in amplitudes(4))| {
        let x1 = normalize_amplitudes(&x1[..l1]);
        let x2 = normalize_amplitudes(&x2[..l2]);
        let n = l1 * l2;
        let h = PayoffMatrix::new(hermitian_from(n, &seed[..2 * n * n]), 0).unwrap();
        let s: Vec<Complex64> = x1.iter().flat_map(|a| x2.iter().map(move |b| a * b)).collect();
        let mut expectation = c64(0.0, 0.0);
        for r in 0..n {
            for c in 0..n {
                expectation += s[r].conj() * h.matrix()[(r, c)] * s[c];
            }
        }
        let system = system_from_players(&[pure_state(&x1).unwrap(), pure_state(&x2).unwrap()]).unwrap();
        prop_assert!((payoff(&system, &h).unwrap() - expectation.re).abs() <= 1e-12);
        prop_assert!(expectation.im.abs() <= 1e-12);
    });
}

pub fn quantum_construction_is_hermitian_before_symmetrization() {
    proptest!(config(), |(spec in quantum_spec())| {
        for i in 0..2 {
            let h = quantum_payoff_unsymmetrized(&spec, i).unwrap();
            prop_assert!(h.hermitian_asymmetry() <= 1e-10, "asymmetry {}", h.hermitian_asymmetry());
        }
    });
}

pub fn decomposition_round_trips_in_span() {
    proptest!(config(), |(coeffs in entries(8), seed in entries(8))| {
        let u = unitary_from(2, &seed);
        let basis: Vec<ComplexMatrix> = penny_basis()
            .iter()
            .map(|b| u.matmul(&b.operator).unwrap().matmul(&u.adjoint()).unwrap())
            .collect();
        let c: Vec<Complex64> = coeffs.chunks(2).map(|p| c64(p[0], p[1])).collect();
        let mut a = ComplexMatrix::zeros(2, 2);
        for (ck, b) in c.iter().zip(&basis) {
            a = a.add(&b.scale(*ck)).unwrap();
        }
        let d = decompose_operator(&a, &basis).unwrap();
        prop_assert!(d.residual <= 1e-12);
        for (got, want) in d.coefficients.iter().zip(&c) {
            prop_assert!((got - want).norm() <= 1e-12);
        }
    });
}


pub fn normalize_amplitudes(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    x.iter().map(|z| z / n).collect()
}
