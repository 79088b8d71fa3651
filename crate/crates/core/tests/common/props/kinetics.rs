use crate::common::*;
use hilbert_games::games::{
    builtin, mixture_state, payoff, system_from_players, ClassicalGame, PayoffMatrix, PlayerState,
    SystemGame,
};
use hilbert_games::kinetics::{
    gibbs_update, iterate, reduced_payoff, sweep_once, Beta, KineticsConfig, UpdateMode,
};
use hilbert_games::lina::{eig_hermitian, ComplexMatrix, DimensionProfile};

pub fn any_beta() -> impl Strategy<Value = Beta> {
    prop_oneof![
        4 => (0.0_f64..20.0).prop_map(Beta::Finite),
        1 => Just(Beta::Finite(0.0)),
        1 => Just(Beta::Infinite),
    ]
}

pub fn valid_state(s: &PlayerState) -> Result<(), TestCaseError> {
    let rho = s.rho();
    prop_assert!((rho.trace().re - 1.0).abs() <= 1e-12 && rho.trace().im.abs() <= 1e-12);
    prop_assert!(rho.hermitian_asymmetry() <= 1e-12);
    let lowest = eig_hermitian(rho).unwrap().values[0];
    prop_assert!(lowest >= -1e-12, "lowest eigenvalue {lowest}");
    Ok(())
}

pub fn two_player_game() -> impl Strategy<Value = SystemGame> {
    (1_usize..=3, 1_usize..=3)
        .prop_flat_map(|(a, b)| (Just((a, b)), entries(a * b), entries(a * b)))
        .prop_map(|((a, b), g1, g2)| {
            let labels = vec![(0..a).map(|k| k.to_string()).collect(), (0..b).map(|k| k.to_string()).collect()];
            let scaled = |g: Vec<f64>| g.into_iter().map(|x| 5.0 * x).collect();
            SystemGame::from_classical(&ClassicalGame::new(labels, vec![scaled(g1), scaled(g2)]).unwrap()).unwrap()
        })
}

pub fn game_and_start() -> impl Strategy<Value = (SystemGame, Vec<PlayerState>)> {
    two_player_game().prop_flat_map(|g| {
        let starts: Vec<_> = g.profile().dims().iter().map(|&l| weights(l)).collect();
        (Just(g), starts).prop_map(|(g, w)| {
            let states = w.iter().map(|p| mixture_state(p).unwrap()).collect();
            (g, states)
        })
    })
}

pub fn reduced_payoff_reproduces_system_payoff() {
    proptest!(config(), |(dims in prop::collection::vec(1_usize..=3, 2..=3),
        diagonal in any::<bool>(),
        owner_pick in 0_usize..3,
        seeds in prop::collection::vec(entries(2 * 27 * 27), 1),
        state_seeds in prop::collection::vec(entries(18), 3))| {
        let profile = DimensionProfile::new(dims.clone()).unwrap();
        let owner = owner_pick % dims.len();
        let n = profile.total();
        let mut h = hermitian_from(n, &seeds[0][..2 * n * n]);
        if diagonal {
            h = ComplexMatrix::from_diagonal(&h.real_diagonal());
        }
        let h = PayoffMatrix::new(h, owner).unwrap();
        let states: Vec<PlayerState> = dims
            .iter()
            .zip(&state_seeds)
            .map(|(&l, s)| PlayerState::new(density_from(l, &s[..2 * l * l])).unwrap())
            .collect();
        let others: Vec<&PlayerState> = states.iter().enumerate().filter(|(j, _)| *j != owner).map(|(_, s)| s).collect();
        let h_r = reduced_payoff(&h, &others, &profile).unwrap();
        prop_assert!(h_r.rows() == dims[owner]);
        prop_assert!(h_r.hermitian_asymmetry() <= 1e-12);
        let local = states[owner].rho().matmul(&h_r).unwrap().trace();
        let global = payoff(&system_from_players(&states).unwrap(), &h).unwrap();
        prop_assert!((local.re - global).abs() <= 1e-11 && local.im.abs() <= 1e-11);
    });
}

pub fn gibbs_update_is_always_a_state() {
    proptest!(config(), |((n, seed) in square(1..=6), beta in any_beta(), degenerate in any::<bool>())| {
        let mut h = hermitian_from(n, &seed);
        if degenerate {
            // Force a tied top eigenvalue.
            let e = eig_hermitian(&h).unwrap();
            let mut values = e.values.clone();
            let top = values[n - 1];
            if n >= 2 {
                values[n - 2] = top;
            }
            h = e.compose(&values);
        }
        let s = gibbs_update(&h, beta).unwrap();
        valid_state(&s)?;
        prop_assert!(s.rho().commutator(&h).unwrap().max_abs() <= 1e-9);
    });
}

pub fn large_beta_approaches_the_projector() {
    proptest!(config(), |((n, seed) in square(2..=6))| {
        let h = hermitian_from(n, &seed);
        let values = eig_hermitian(&h).unwrap().values;
        let gap = values[n - 1] - values[n - 2];
        prop_assume!(gap > 1e-3);
        let finite = gibbs_update(&h, Beta::Finite(50.0 / gap)).unwrap();
        let limit = gibbs_update(&h, Beta::Infinite).unwrap();
        prop_assert!(finite.rho().max_abs_diff(limit.rho()).unwrap() <= 1e-6);
    });
}

pub fn converged_points_survive_another_sweep() {
    proptest!(config(), |((g, start) in game_and_start(), beta in 0.0_f64..3.0, parallel in any::<bool>())| {
        let mut config = KineticsConfig::new(Beta::Finite(beta));
        config.max_sweeps = 2000;
        if parallel {
            config.mode = UpdateMode::Parallel;
        }
        let report = iterate(&start, &g, &config).unwrap();
        if report.converged {
            prop_assert!(report.residual <= config.tolerance);
            let (_, residual) = sweep_once(&report.states, &g, &config).unwrap();
            prop_assert!(residual <= config.tolerance, "extra sweep moved {residual}");
        }
    });
}

pub fn hawk_dove_centre_stays_symmetric() {
    proptest!(config(), |(beta in 0.0_f64..12.0, sweeps in 1_usize..60)| {
        let g = builtin("hawk-dove").unwrap().to_system_game().unwrap();
        let mut config = KineticsConfig::new(Beta::Finite(beta));
        config.record_trace = true;
        config.max_sweeps = sweeps;
        config.tolerance = f64::MIN_POSITIVE;
        let report = iterate(&g.uniform_states(), &g, &config).unwrap();
        for states in report.trace.unwrap() {
            prop_assert!(states[0].rho().max_abs_diff(states[1].rho()).unwrap() <= 1e-12);
        }
    });
}

pub fn parallel_sweeps_keep_symmetric_games_symmetric() {
    proptest!(config(), |((l, g1, start) in (1_usize..=3).prop_flat_map(|l| (Just(l), entries(l * l), weights(l))),
        beta in any_beta())| {
        // G2[a][b] = G1[b][a]: swapping the players leaves the game unchanged.
        let g2: Vec<f64> = (0..l * l).map(|k| g1[(k % l) * l + k / l]).collect();
        let labels: Vec<Vec<String>> = vec![(0..l).map(|k| k.to_string()).collect(); 2];
        let game = SystemGame::from_classical(&ClassicalGame::new(labels, vec![g1, g2]).unwrap()).unwrap();
        let s = mixture_state(&start).unwrap();
        let mut config = KineticsConfig::new(beta).with_mode(UpdateMode::Parallel);
        config.record_trace = true;
        config.max_sweeps = 30;
        let report = iterate(&[s.clone(), s], &game, &config).unwrap();
        for states in report.trace.unwrap() {
            prop_assert!(states[0].rho().max_abs_diff(states[1].rho()).unwrap() <= 1e-12);
        }
    });
}

pub fn classical_kinetics_stay_diagonal() {
    proptest!(config(), |((g, start) in game_and_start(), beta in any_beta(), parallel in any::<bool>())| {
        let mut config = KineticsConfig::new(beta);
        config.record_trace = true;
        config.max_sweeps = 40;
        if parallel {
            config.mode = UpdateMode::Parallel;
        }
        let report = iterate(&start, &g, &config).unwrap();
        for states in report.trace.unwrap() {
            for s in &states {
                prop_assert!(s.rho().off_diagonal_max() == 0.0);
            }
        }
    });
}
