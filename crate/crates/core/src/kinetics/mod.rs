//! Fixed-point kinetics of per-player Gibbs states.
//!
//! Each player's effective payoff operator is the reduced matrix
//! `H^i_R = Tr_{-i}((⊗_{j≠i} ρ^j) H^i)`. One update replaces `ρ^i` by
//! `e^{β H^i_R} / Z`, or at `β = ∞` by the normalized projector onto the top
//! eigenspace of `H^i_R`. Sweeping the players repeatedly until no density
//! matrix entry moves by more than the tolerance yields an equilibrium state.

mod stability;
mod sweep;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

pub use stability::{stability, Classification, StabilityReport, STABILITY_MARGIN};
pub use sweep::{beta_sweep, SweepOptions, SweepRow};

use crate::error::{Error, Result};
use crate::games::{PayoffMatrix, PlayerState, SystemGame};
use crate::lina::{eig_hermitian, gibbs_exp, kron_all, partial_trace, ComplexMatrix, DimensionProfile};

/// Relative eigenvalue gap below which the top eigenspace at `β = ∞` is
/// treated as degenerate.
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;
/// Number of trailing sweeps kept in every report.
pub const WINDOW: usize = 8;

/// Inverse noise level. `Infinite` is perfectly rational best response.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Beta {
    Finite(f64),
    Infinite,
}

impl Beta {
    pub fn new(value: f64) -> Result<Self> {
        if value == f64::INFINITY {
            Ok(Beta::Infinite)
        } else if value.is_finite() && value >= 0.0 {
            Ok(Beta::Finite(value))
        } else {
            Err(Error::InvalidBeta(value))
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Beta::Finite(b) => b,
            Beta::Infinite => f64::INFINITY,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Beta::Infinite)
    }
}

impl FromStr for Beta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Beta::Infinite),
            other => {
                let v: f64 = other
                    .parse()
                    .map_err(|_| Error::Usage(format!("cannot parse beta `{other}`")))?;
                Beta::new(v)
            }
        }
    }
}

impl fmt::Display for Beta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Beta::Finite(b) => write!(f, "{b}"),
            Beta::Infinite => f.write_str("inf"),
        }
    }
}

/// How players are updated within one sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum UpdateMode {
    /// Each update sees the most recent states of everyone else.
    #[default]
    Sequential,
    /// Every update sees the states from the start of the sweep.
    Parallel,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KineticsConfig {
    pub beta: Beta,
    /// Convergence threshold on the max-abs density-matrix entry change.
    pub tolerance: f64,
    pub max_sweeps: usize,
    /// 0-based player order within a sweep; `None` means `0, 1, …, N-1`.
    pub update_order: Option<Vec<usize>>,
    pub mode: UpdateMode,
    /// Keep every sweep's states in the report.
    pub record_trace: bool,
}

impl KineticsConfig {
    pub fn new(beta: Beta) -> Self {
        Self {
            beta,
            tolerance: 1e-10,
            max_sweeps: 100_000,
            update_order: None,
            mode: UpdateMode::Sequential,
            record_trace: false,
        }
    }

    pub fn with_order(mut self, order: Vec<usize>) -> Self {
        self.update_order = Some(order);
        self
    }

    pub fn with_mode(mut self, mode: UpdateMode) -> Self {
        self.mode = mode;
        self
    }

    /// The effective player order, validated against `players`.
    pub fn order(&self, players: usize) -> Result<Vec<usize>> {
        if !(self.tolerance > 0.0) {
            return Err(Error::Usage(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.max_sweeps == 0 {
            return Err(Error::Usage("max_sweeps must be at least 1".into()));
        }
        let order = self.update_order.clone().unwrap_or_else(|| (0..players).collect());
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..players).collect::<Vec<_>>() {
            return Err(Error::Usage(format!(
                "update order {order:?} is not a permutation of {players} players"
            )));
        }
        Ok(order)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KineticsWarning {
    /// Finite-β kinetics of a game with off-diagonal payoffs produce mixed
    /// quantum states; the update rule is heuristic there.
    QuantumFiniteBeta,
}

impl fmt::Display for KineticsWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KineticsWarning::QuantumFiniteBeta => f.write_str(
                "finite-beta update of a non-diagonal game mixes quantum strategies; treat the fixed point as heuristic",
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FixedPointReport {
    pub states: Vec<PlayerState>,
    pub payoffs: Vec<f64>,
    pub converged: bool,
    pub sweeps_used: usize,
    /// Max-abs entry change of the last sweep.
    pub residual: f64,
    pub stability: Option<StabilityReport>,
    /// States after each of the last `WINDOW` sweeps, oldest first.
    pub window: Vec<Vec<PlayerState>>,
    /// Initial states followed by the states after every sweep, when
    /// requested in the config.
    pub trace: Option<Vec<Vec<PlayerState>>>,
    pub warnings: Vec<KineticsWarning>,
}

impl FixedPointReport {
    /// Diagonal probabilities per player.
    pub fn probabilities(&self) -> Vec<Vec<f64>> {
        self.states.iter().map(PlayerState::probabilities).collect()
    }
}

/// `Tr_{-i}((ρ^1 ⊗ … ⊗ I_i ⊗ … ⊗ ρ^N) H^i)`, with `others` listing every
/// player except the owner of `h`, in player order.
pub fn reduced_payoff(h: &PayoffMatrix, others: &[&PlayerState], profile: &DimensionProfile) -> Result<ComplexMatrix> {
    let owner = h.owner();
    let n = profile.factors();
    if owner >= n || others.len() + 1 != n {
        return Err(Error::DimensionMismatch(format!(
            "{} other states for owner {} in a {n}-player profile",
            others.len(),
            owner + 1
        )));
    }
    let identity = ComplexMatrix::identity(profile.dim(owner));
    let mut factors = Vec::with_capacity(n);
    let mut rest = others.iter();
    for player in 0..n {
        if player == owner {
            factors.push(&identity);
        } else {
            let state = rest.next().expect("length checked");
            if state.dim() != profile.dim(player) {
                return Err(Error::DimensionMismatch(format!(
                    "state of player {} has {} strategies, profile says {}",
                    player + 1,
                    state.dim(),
                    profile.dim(player)
                )));
            }
            factors.push(state.rho());
        }
    }
    let embedded = kron_all(factors).expect("at least two factors");
    let weighted = embedded.matmul(h.matrix())?;
    Ok(partial_trace(&weighted, profile, owner)?.hermitian_part())
}

/// One Gibbs update of a player facing the reduced payoff `h_r`.
pub fn gibbs_update(h_r: &ComplexMatrix, beta: Beta) -> Result<PlayerState> {
    match beta {
        Beta::Finite(b) => Ok(PlayerState::from_density_unchecked(gibbs_exp(h_r, b)?)),
        Beta::Infinite => Ok(PlayerState::from_density_unchecked(top_eigenspace_projector(h_r)?)),
    }
}

/// Projector onto the maximum-eigenvalue eigenspace divided by its
/// dimension.
fn top_eigenspace_projector(h_r: &ComplexMatrix) -> Result<ComplexMatrix> {
    let h = h_r.to_hermitian()?;
    let is_top = |values: &[f64]| -> Vec<bool> {
        let top = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let scale = values.iter().map(|v| v.abs()).fold(1.0, f64::max);
        values.iter().map(|&v| top - v <= DEGENERACY_THRESHOLD * scale).collect()
    };
    if h.is_diagonal() {
        let mask = is_top(&h.real_diagonal());
        let k = mask.iter().filter(|&&m| m).count() as f64;
        let diag: Vec<f64> = mask.iter().map(|&m| if m { 1.0 / k } else { 0.0 }).collect();
        return Ok(ComplexMatrix::from_diagonal(&diag));
    }
    let eigen = eig_hermitian(&h)?;
    let mask = is_top(&eigen.values);
    let k = mask.iter().filter(|&&m| m).count() as f64;
    let weights: Vec<f64> = mask.iter().map(|&m| if m { 1.0 / k } else { 0.0 }).collect();
    Ok(eigen.compose(&weights).hermitian_part())
}

fn check_states(states: &[PlayerState], game: &SystemGame) -> Result<()> {
    if states.len() != game.players() {
        return Err(Error::InvalidState(format!(
            "{} states for a {}-player game",
            states.len(),
            game.players()
        )));
    }
    for (i, s) in states.iter().enumerate() {
        if s.dim() != game.profile().dim(i) {
            return Err(Error::InvalidState(format!(
                "state of player {} has {} strategies, game has {}",
                i + 1,
                s.dim(),
                game.profile().dim(i)
            )));
        }
    }
    Ok(())
}

/// Gibbs update of `player` against the given states of everyone else.
pub(crate) fn update_player(states: &[PlayerState], game: &SystemGame, player: usize, beta: Beta) -> Result<PlayerState> {
    let others: Vec<&PlayerState> = states
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != player)
        .map(|(_, s)| s)
        .collect();
    let h_r = reduced_payoff(game.payoff_matrix(player), &others, game.profile())?;
    gibbs_update(&h_r, beta)
}

/// Updates every player once and returns the new states with the max-abs
/// entry change.
pub fn sweep_once(states: &[PlayerState], game: &SystemGame, config: &KineticsConfig) -> Result<(Vec<PlayerState>, f64)> {
    check_states(states, game)?;
    let order = config.order(game.players())?;
    let mut next = states.to_vec();
    for &player in &order {
        let source = match config.mode {
            UpdateMode::Sequential => &next,
            UpdateMode::Parallel => states,
        };
        let updated = update_player(source, game, player, config.beta)?;
        next[player] = updated;
    }
    let residual = states
        .iter()
        .zip(&next)
        .map(|(a, b)| a.rho().max_abs_diff(b.rho()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    Ok((next, residual))
}

/// Sweeps until the residual drops to the tolerance, confirmed by one more
/// sweep that also stays within it, or the sweep budget runs out.
/// Non-convergence is reported, not raised.
pub fn iterate(initial: &[PlayerState], game: &SystemGame, config: &KineticsConfig) -> Result<FixedPointReport> {
    check_states(initial, game)?;
    config.order(game.players())?;

    let mut warnings = Vec::new();
    if !game.is_diagonal() && !config.beta.is_infinite() {
        warnings.push(KineticsWarning::QuantumFiniteBeta);
    }

    let mut states = initial.to_vec();
    let mut trace = config.record_trace.then(|| vec![states.clone()]);
    let mut window: VecDeque<Vec<PlayerState>> = VecDeque::with_capacity(WINDOW);
    let mut residual = f64::INFINITY;
    let mut sweeps = 0;
    let mut converged = false;

    let mut pending: Option<(Vec<PlayerState>, f64)> = None;
    while sweeps < config.max_sweeps {
        let (next, r) = match pending.take() {
            Some(probe) => probe,
            None => sweep_once(&states, game, config)?,
        };
        states = next;
        residual = r;
        sweeps += 1;
        if window.len() == WINDOW {
            window.pop_front();
        }
        window.push_back(states.clone());
        if let Some(t) = trace.as_mut() {
            t.push(states.clone());
        }
        if residual <= config.tolerance {
            // Only accept once a further sweep also stays within tolerance;
            // otherwise that probe becomes the next sweep.
            let probe = sweep_once(&states, game, config)?;
            if probe.1 <= config.tolerance {
                converged = true;
                break;
            }
            pending = Some(probe);
        }
    }

    Ok(FixedPointReport {
        payoffs: game.payoffs_of(&states)?,
        states,
        converged,
        sweeps_used: sweeps,
        residual,
        stability: None,
        window: window.into(),
        trace,
        warnings,
    })
}

/// Diagonal-probability initial states; shorthand for tests and examples.
pub fn mixtures(probabilities: &[&[f64]]) -> Result<Vec<PlayerState>> {
    probabilities.iter().map(|p| crate::games::mixture_state(p)).collect()
}

/// `(p, 1-p)` for each two-strategy player.
pub fn binary_mixtures(first: &[f64]) -> Result<Vec<PlayerState>> {
    first.iter().map(|&p| crate::games::mixture_state(&[p, 1.0 - p])).collect()
}
