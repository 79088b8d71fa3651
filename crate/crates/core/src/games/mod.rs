//! Game data model and the construction of system-level payoff matrices.
//!
//! A classical game `(S^i, G^i)` becomes a diagonal payoff matrix per player
//! over the product strategy basis; a two-player quantum game on a `d`-level
//! object becomes a full Hermitian matrix whose entries are traces of the
//! acted-on object state. Either way the payoff of any system density
//! matrix is `E^i = Tr(ρ^s H^i)`.

mod builtin;

pub use builtin::{builtin, penny_basis, BUILTIN_NAMES};

use crate::error::{Error, Result};
use crate::lina::{c64, kron_all, op_inner, Complex64, ComplexMatrix, DimensionProfile};

/// Tolerance on trace and positivity of density matrices.
pub const STATE_TOLERANCE: f64 = 1e-12;
/// Tolerance on orthonormality of an operator strategy basis.
pub const BASIS_TOLERANCE: f64 = 1e-10;
/// Imaginary part of `Tr(ρH)` above which the pair is rejected.
pub const PAYOFF_IMAGINARY_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalGame {
    name: Option<String>,
    labels: Vec<Vec<String>>,
    profile: DimensionProfile,
    /// Row-major flattened `G^i`, player 0 slowest.
    tensors: Vec<Vec<f64>>,
}

impl ClassicalGame {
    /// `tensors[i]` is player `i`'s payoff, flattened row-major with player
    /// 0 as the slowest index.
    pub fn new(labels: Vec<Vec<String>>, tensors: Vec<Vec<f64>>) -> Result<Self> {
        if labels.len() < 2 {
            return Err(Error::InvalidGame(format!(
                "a game needs at least two players, got {}",
                labels.len()
            )));
        }
        if tensors.len() != labels.len() {
            return Err(Error::InvalidGame(format!(
                "{} players but {} payoff tensors",
                labels.len(),
                tensors.len()
            )));
        }
        let profile = DimensionProfile::new(labels.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidGame("every player needs at least one strategy".into()))?;
        for (i, t) in tensors.iter().enumerate() {
            if t.len() != profile.total() {
                return Err(Error::InvalidGame(format!(
                    "payoff tensor of player {} has {} entries, expected {}",
                    i + 1,
                    t.len(),
                    profile.total()
                )));
            }
            if t.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidGame(format!("payoff tensor of player {} is not finite", i + 1)));
            }
        }
        Ok(Self {
            name: None,
            labels,
            profile,
            tensors,
        })
    }

    /// Two-player game from bimatrices `G^1`, `G^2` indexed `[s1][s2]`.
    pub fn bimatrix(labels: [&[&str]; 2], g1: &[&[f64]], g2: &[&[f64]]) -> Result<Self> {
        let flat = |g: &[&[f64]]| -> Vec<f64> { g.iter().flat_map(|row| row.iter().copied()).collect() };
        for g in [g1, g2] {
            if g.len() != labels[0].len() || g.iter().any(|row| row.len() != labels[1].len()) {
                return Err(Error::InvalidGame(format!(
                    "bimatrix must be {}x{}",
                    labels[0].len(),
                    labels[1].len()
                )));
            }
        }
        Self::new(
            labels.iter().map(|l| l.iter().map(|s| s.to_string()).collect()).collect(),
            vec![flat(g1), flat(g2)],
        )
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn players(&self) -> usize {
        self.labels.len()
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    pub fn tensor(&self, player: usize) -> &[f64] {
        &self.tensors[player]
    }

    /// `G^player(μ_1, …, μ_N)`.
    pub fn payoff_at(&self, player: usize, strategies: &[usize]) -> f64 {
        self.tensors[player][self.profile.flatten(strategies)]
    }

    /// Multilinear payoff `G^i(P^1, …, P^N)` of mixed strategies given as
    /// probability vectors.
    pub fn expected_payoff(&self, player: usize, mixes: &[Vec<f64>]) -> f64 {
        (0..self.profile.total())
            .map(|flat| {
                let multi = self.profile.unflatten(flat);
                let weight: f64 = multi.iter().zip(mixes).map(|(&m, p)| p[m]).product();
                weight * self.tensors[player][flat]
            })
            .sum()
    }
}

/// One element of an operator strategy basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisOperator {
    pub label: String,
    pub operator: ComplexMatrix,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuantumGameSpec {
    pub name: Option<String>,
    pub object_dim: usize,
    pub rho0: ComplexMatrix,
    pub payoff_operators: Vec<ComplexMatrix>,
    pub strategy_bases: Vec<Vec<BasisOperator>>,
    /// Per-player indices into the strategy basis forming the classical
    /// subset `S^{i,c}`.
    pub classical_strategies: Vec<Vec<usize>>,
    /// Order in which the players' operators act on the object (0-based).
    pub acting_order: Vec<usize>,
}

impl QuantumGameSpec {
    /// Checks every invariant of the specification and returns it with the
    /// payoff operators and `ρ₀` symmetrized.
    pub fn validated(mut self) -> Result<Self> {
        let d = self.object_dim;
        let players = self.payoff_operators.len();
        if players != 2 {
            return Err(Error::InvalidGame(format!(
                "quantum payoff construction supports exactly two players, got {players}"
            )));
        }
        if self.strategy_bases.len() != players {
            return Err(Error::InvalidGame(format!(
                "{players} payoff operators but {} strategy bases",
                self.strategy_bases.len()
            )));
        }
        let shape_ok = |m: &ComplexMatrix| m.rows() == d && m.cols() == d;
        if !shape_ok(&self.rho0) {
            return Err(Error::InvalidGame(format!("rho0 must be {d}x{d}")));
        }
        self.rho0 = validate_density("rho0", &self.rho0)?;
        for (i, p) in self.payoff_operators.iter_mut().enumerate() {
            if !shape_ok(p) {
                return Err(Error::InvalidGame(format!("payoff operator of player {} must be {d}x{d}", i + 1)));
            }
            *p = p.to_hermitian().map_err(|e| {
                Error::InvalidGame(format!("payoff operator of player {} is not Hermitian: {e}", i + 1))
            })?;
        }
        for (i, basis) in self.strategy_bases.iter().enumerate() {
            if basis.is_empty() {
                return Err(Error::InvalidGame(format!("player {} has an empty strategy basis", i + 1)));
            }
            if let Some(b) = basis.iter().find(|b| !shape_ok(&b.operator)) {
                return Err(Error::InvalidGame(format!(
                    "basis operator {} of player {} must be {d}x{d}",
                    b.label,
                    i + 1
                )));
            }
            check_orthonormal(basis).map_err(|msg| Error::InvalidGame(format!("player {}: {msg}", i + 1)))?;
        }
        if self.classical_strategies.is_empty() {
            self.classical_strategies = self.strategy_bases.iter().map(|b| (0..b.len()).collect()).collect();
        }
        if self.classical_strategies.len() != players {
            return Err(Error::InvalidGame("one classical strategy subset per player required".into()));
        }
        for (i, subset) in self.classical_strategies.iter().enumerate() {
            if subset.iter().any(|&k| k >= self.strategy_bases[i].len()) {
                return Err(Error::InvalidGame(format!(
                    "classical strategy index out of range for player {}",
                    i + 1
                )));
            }
        }
        if self.acting_order.is_empty() {
            self.acting_order = (0..players).collect();
        }
        let mut sorted = self.acting_order.clone();
        sorted.sort_unstable();
        if sorted != (0..players).collect::<Vec<_>>() {
            return Err(Error::InvalidGame(format!(
                "acting order {:?} is not a permutation of the players",
                self.acting_order
            )));
        }
        if self.acting_order != (0..players).collect::<Vec<_>>() {
            return Err(Error::InvalidGame(
                "only the sequential acting order (1, 2) is supported".into(),
            ));
        }
        Ok(self)
    }

    pub fn players(&self) -> usize {
        self.payoff_operators.len()
    }

    pub fn profile(&self) -> DimensionProfile {
        DimensionProfile::new(self.strategy_bases.iter().map(Vec::len).collect())
            .expect("validated bases are non-empty")
    }

    pub fn labels(&self) -> Vec<Vec<String>> {
        self.strategy_bases
            .iter()
            .map(|b| b.iter().map(|op| op.label.clone()).collect())
            .collect()
    }
}

pub(crate) fn check_orthonormal(basis: &[BasisOperator]) -> std::result::Result<(), String> {
    for (a, x) in basis.iter().enumerate() {
        for (b, y) in basis.iter().enumerate().skip(a) {
            let g = op_inner(&x.operator, &y.operator).map_err(|e| e.to_string())?;
            let expected = if a == b { 1.0 } else { 0.0 };
            if (g - c64(expected, 0.0)).norm() > BASIS_TOLERANCE {
                return Err(format!(
                    "basis operators {} and {} have inner product {:.3e}{:+.3e}i, expected {expected}",
                    x.label, y.label, g.re, g.im
                ));
            }
        }
    }
    Ok(())
}

/// Validates Hermiticity, unit trace and positivity; returns the symmetrized
/// matrix.
pub(crate) fn validate_density(what: &str, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !rho.is_square() {
        return Err(Error::InvalidState(format!("{what} must be square")));
    }
    let scale = rho.max_abs().max(1.0);
    let asymmetry = rho.hermitian_asymmetry();
    if asymmetry > STATE_TOLERANCE * scale {
        return Err(Error::InvalidState(format!(
            "{what} is not Hermitian (asymmetry {asymmetry:.3e})"
        )));
    }
    let rho = rho.hermitian_part();
    let trace = rho.trace().re;
    if (trace - 1.0).abs() > STATE_TOLERANCE {
        return Err(Error::InvalidState(format!("{what} trace is {trace}, expected 1")));
    }
    let lowest = if rho.is_diagonal() {
        rho.real_diagonal().into_iter().fold(f64::INFINITY, f64::min)
    } else {
        crate::lina::eig_hermitian(&rho)?.values[0]
    };
    if lowest < -STATE_TOLERANCE {
        return Err(Error::InvalidState(format!(
            "{what} has negative eigenvalue {lowest:.3e}"
        )));
    }
    Ok(rho)
}

/// A single player's density matrix over their strategy basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PlayerState {
    rho: ComplexMatrix,
}

impl PlayerState {
    pub fn new(rho: ComplexMatrix) -> Result<Self> {
        Ok(Self {
            rho: validate_density("player state", &rho)?,
        })
    }

    /// Wraps a matrix already known to be a density matrix (outputs of the
    /// Gibbs map and of the projector rule).
    pub(crate) fn from_density_unchecked(rho: ComplexMatrix) -> Self {
        debug_assert!((rho.trace().re - 1.0).abs() < 1e-9);
        Self { rho }
    }

    pub fn uniform(strategies: usize) -> Self {
        Self {
            rho: ComplexMatrix::identity(strategies).scale(c64(1.0 / strategies as f64, 0.0)),
        }
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn dim(&self) -> usize {
        self.rho.rows()
    }

    /// Diagonal entries, the probabilities of the basis strategies.
    pub fn probabilities(&self) -> Vec<f64> {
        self.rho.real_diagonal()
    }

    pub fn is_diagonal(&self) -> bool {
        self.rho.is_diagonal()
    }
}

/// Density matrix over the product strategy basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SystemState {
    rho: ComplexMatrix,
    profile: DimensionProfile,
    product: bool,
}

impl SystemState {
    /// Arbitrary (possibly entangled) system density matrix. Payoffs are
    /// defined for it; the kinetics are not.
    pub fn new(rho: ComplexMatrix, profile: DimensionProfile) -> Result<Self> {
        if rho.rows() != profile.total() {
            return Err(Error::DimensionMismatch(format!(
                "system state side {} does not match profile {:?}",
                rho.rows(),
                profile.dims()
            )));
        }
        Ok(Self {
            rho: validate_density("system state", &rho)?,
            profile,
            product: false,
        })
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn is_product(&self) -> bool {
        self.product
    }
}

/// Player `owner`'s Hermitian payoff matrix over the product basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PayoffMatrix {
    h: ComplexMatrix,
    owner: usize,
}

impl PayoffMatrix {
    /// Accepts any matrix within the Hermiticity tolerance; the stored
    /// matrix is its Hermitian part.
    pub fn new(h: ComplexMatrix, owner: usize) -> Result<Self> {
        Ok(Self {
            h: h.to_hermitian()?,
            owner,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.h
    }

    pub fn owner(&self) -> usize {
        self.owner
    }

    pub fn is_diagonal(&self) -> bool {
        self.h.is_diagonal()
    }

    pub fn negated(&self, owner: usize) -> Self {
        Self {
            h: self.h.scale(c64(-1.0, 0.0)),
            owner,
        }
    }
}

pub fn classical_payoff_matrix(game: &ClassicalGame, player: usize) -> Result<PayoffMatrix> {
    if player >= game.players() {
        return Err(Error::InvalidGame(format!(
            "player index {player} out of range for {} players",
            game.players()
        )));
    }
    Ok(PayoffMatrix {
        h: ComplexMatrix::from_diagonal(game.tensor(player)),
        owner: player,
    })
}

/// Raw quantum payoff matrix before symmetrization:
/// `H_{SS'} = Tr(P s² s¹ ρ₀ (s¹')† (s²')†)` with `S = (s¹, s²)` the row and
/// `S' = (s¹', s²')` the column.
pub fn quantum_payoff_unsymmetrized(spec: &QuantumGameSpec, player: usize) -> Result<ComplexMatrix> {
    if player >= spec.players() {
        return Err(Error::InvalidGame(format!(
            "player index {player} out of range for {} players",
            spec.players()
        )));
    }
    let p = &spec.payoff_operators[player];
    let (b1, b2) = (&spec.strategy_bases[0], &spec.strategy_bases[1]);
    let (l1, l2) = (b1.len(), b2.len());

    // Ket side: K_S = s² s¹ ρ₀, bra side: B_{S'} = (s¹')† (s²')†.
    let mut kets = Vec::with_capacity(l1 * l2);
    let mut bras = Vec::with_capacity(l1 * l2);
    for s1 in b1 {
        for s2 in b2 {
            let acted = &(&s2.operator * &s1.operator) * &spec.rho0;
            kets.push(p * &acted);
            bras.push(&s1.operator.adjoint() * &s2.operator.adjoint());
        }
    }
    let n = l1 * l2;
    let mut h = ComplexMatrix::zeros(n, n);
    for (row, ket) in kets.iter().enumerate() {
        for (col, bra) in bras.iter().enumerate() {
            h[(row, col)] = trace_of_product(ket, bra);
        }
    }
    Ok(h)
}

fn trace_of_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    let n = a.rows();
    let mut t = Complex64::default();
    for i in 0..n {
        for k in 0..n {
            t += a[(i, k)] * b[(k, i)];
        }
    }
    t
}

pub fn quantum_payoff_matrix(spec: &QuantumGameSpec, player: usize) -> Result<PayoffMatrix> {
    let raw = quantum_payoff_unsymmetrized(spec, player)?;
    PayoffMatrix::new(raw, player)
}

/// Restriction of `h` to the product of per-player index subsets.
pub fn classical_subblock(
    h: &PayoffMatrix,
    profile: &DimensionProfile,
    indices: &[Vec<usize>],
) -> Result<ComplexMatrix> {
    if indices.len() != profile.factors() {
        return Err(Error::DimensionMismatch(format!(
            "{} index subsets for {} players",
            indices.len(),
            profile.factors()
        )));
    }
    for (i, subset) in indices.iter().enumerate() {
        if subset.iter().any(|&k| k >= profile.dim(i)) {
            return Err(Error::DimensionMismatch(format!(
                "strategy index out of range for player {}",
                i + 1
            )));
        }
    }
    let mut flat = vec![Vec::new()];
    for subset in indices {
        flat = flat
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                subset.iter().map(move |&k| {
                    let mut next = prefix.clone();
                    next.push(k);
                    next
                })
            })
            .collect();
    }
    let rows: Vec<usize> = flat.iter().map(|m| profile.flatten(m)).collect();
    h.matrix().submatrix(&rows, &rows)
}

/// The classical sub-block named by the specification's own classical
/// strategy subsets.
pub fn spec_classical_subblock(h: &PayoffMatrix, spec: &QuantumGameSpec) -> Result<ComplexMatrix> {
    classical_subblock(h, &spec.profile(), &spec.classical_strategies)
}

/// `diag(p)`.
pub fn mixture_state(probs: &[f64]) -> Result<PlayerState> {
    if probs.is_empty() {
        return Err(Error::InvalidState("empty probability list".into()));
    }
    if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
        return Err(Error::InvalidState(format!("probability {p} is negative or not finite")));
    }
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > STATE_TOLERANCE {
        return Err(Error::InvalidState(format!("probabilities sum to {total}, expected 1")));
    }
    Ok(PlayerState {
        rho: ComplexMatrix::from_diagonal(probs),
    })
}

/// `x x†` for a unit amplitude vector.
pub fn pure_state(amplitudes: &[Complex64]) -> Result<PlayerState> {
    if amplitudes.is_empty() {
        return Err(Error::InvalidState("empty amplitude list".into()));
    }
    let norm2: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
    if (norm2.sqrt() - 1.0).abs() > STATE_TOLERANCE {
        return Err(Error::InvalidState(format!(
            "amplitudes have norm {}, expected 1",
            norm2.sqrt()
        )));
    }
    Ok(PlayerState {
        rho: ComplexMatrix::outer(amplitudes, amplitudes),
    })
}

/// `ρ¹ ⊗ ρ² ⊗ … ⊗ ρ^N`.
pub fn system_from_players(states: &[PlayerState]) -> Result<SystemState> {
    if states.len() < 2 {
        return Err(Error::InvalidState(format!(
            "a system state needs at least two players, got {}",
            states.len()
        )));
    }
    let profile = DimensionProfile::new(states.iter().map(PlayerState::dim).collect())?;
    let rho = kron_all(states.iter().map(PlayerState::rho)).expect("non-empty");
    Ok(SystemState {
        rho,
        profile,
        product: true,
    })
}

/// `E = Re Tr(ρ^s H)`, rejecting imaginary residue above tolerance.
pub fn payoff(state: &SystemState, h: &PayoffMatrix) -> Result<f64> {
    let (rho, m) = (state.rho(), h.matrix());
    if rho.rows() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "state side {} but payoff side {}",
            rho.rows(),
            m.rows()
        )));
    }
    let t = trace_of_product(rho, m);
    if t.im.abs() > PAYOFF_IMAGINARY_TOLERANCE {
        return Err(Error::ImaginaryResidue(t.im));
    }
    Ok(t.re)
}

/// `⟨s|ρ|s⟩` for a unit direction `s`.
pub fn strategy_probability(state: &PlayerState, direction: &[Complex64]) -> Result<f64> {
    let rho = state.rho();
    if direction.len() != rho.rows() {
        return Err(Error::DimensionMismatch(format!(
            "direction of length {} for a {}-strategy player",
            direction.len(),
            rho.rows()
        )));
    }
    let mut acc = Complex64::default();
    for (i, si) in direction.iter().enumerate() {
        for (j, sj) in direction.iter().enumerate() {
            acc += si.conj() * rho[(i, j)] * sj;
        }
    }
    Ok(acc.re)
}

/// Coefficients of an operator on an orthonormal operator basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub coefficients: Vec<Complex64>,
    /// `|a - Σ c_k b_k|_max`; zero when `a` lies in the span.
    pub residual: f64,
}

pub fn decompose_operator(a: &ComplexMatrix, basis: &[ComplexMatrix]) -> Result<Decomposition> {
    let coefficients = basis
        .iter()
        .map(|b| op_inner(b, a))
        .collect::<Result<Vec<_>>>()?;
    let mut rebuilt = ComplexMatrix::zeros(a.rows(), a.cols());
    for (c, b) in coefficients.iter().zip(basis) {
        rebuilt = rebuilt.add(&b.scale(*c))?;
    }
    Ok(Decomposition {
        residual: a.max_abs_diff(&rebuilt)?,
        coefficients,
    })
}

/// The kind of source a [`SystemGame`] was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GameKind {
    Classical,
    Quantum,
    RawHermitian,
}

impl GameKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GameKind::Classical => "classical",
            GameKind::Quantum => "quantum",
            GameKind::RawHermitian => "raw-hermitian",
        }
    }
}

/// A game given directly by its payoff matrices on the system space.
#[derive(Clone, Debug, PartialEq)]
pub struct RawGame {
    pub name: Option<String>,
    pub labels: Vec<Vec<String>>,
    pub payoffs: Vec<PayoffMatrix>,
}

impl RawGame {
    pub fn new(name: Option<String>, labels: Vec<Vec<String>>, matrices: Vec<ComplexMatrix>) -> Result<Self> {
        if labels.len() < 2 {
            return Err(Error::InvalidGame("a game needs at least two players".into()));
        }
        if matrices.len() != labels.len() {
            return Err(Error::InvalidGame(format!(
                "{} players but {} payoff matrices",
                labels.len(),
                matrices.len()
            )));
        }
        let profile = DimensionProfile::new(labels.iter().map(Vec::len).collect())?;
        let payoffs = matrices
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                if m.rows() != profile.total() || !m.is_square() {
                    return Err(Error::InvalidGame(format!(
                        "payoff matrix of player {} is {}x{}, expected side {}",
                        i + 1,
                        m.rows(),
                        m.cols(),
                        profile.total()
                    )));
                }
                PayoffMatrix::new(m, i)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { name, labels, payoffs })
    }
}

/// Any of the three accepted game descriptions.
#[derive(Clone, Debug, PartialEq)]
pub enum GameDefinition {
    Classical(ClassicalGame),
    Quantum(QuantumGameSpec),
    RawHermitian(RawGame),
}

impl GameDefinition {
    pub fn kind(&self) -> GameKind {
        match self {
            GameDefinition::Classical(_) => GameKind::Classical,
            GameDefinition::Quantum(_) => GameKind::Quantum,
            GameDefinition::RawHermitian(_) => GameKind::RawHermitian,
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            GameDefinition::Classical(g) => g.name(),
            GameDefinition::Quantum(q) => q.name.as_deref(),
            GameDefinition::RawHermitian(r) => r.name.as_deref(),
        }
    }

    pub fn to_system_game(&self) -> Result<SystemGame> {
        match self {
            GameDefinition::Classical(g) => SystemGame::from_classical(g),
            GameDefinition::Quantum(q) => SystemGame::from_quantum(q),
            GameDefinition::RawHermitian(r) => Ok(SystemGame {
                kind: GameKind::RawHermitian,
                profile: DimensionProfile::new(r.labels.iter().map(Vec::len).collect())?,
                labels: r.labels.clone(),
                payoffs: r.payoffs.clone(),
            }),
        }
    }
}

/// `Γ = (S^1 × … × S^N, {H^i})`: everything the kinetics need.
#[derive(Clone, Debug, PartialEq)]
pub struct SystemGame {
    kind: GameKind,
    profile: DimensionProfile,
    labels: Vec<Vec<String>>,
    payoffs: Vec<PayoffMatrix>,
}

impl SystemGame {
    pub fn from_classical(game: &ClassicalGame) -> Result<Self> {
        Ok(Self {
            kind: GameKind::Classical,
            profile: game.profile().clone(),
            labels: game.labels().to_vec(),
            payoffs: (0..game.players())
                .map(|i| classical_payoff_matrix(game, i))
                .collect::<Result<_>>()?,
        })
    }

    pub fn from_quantum(spec: &QuantumGameSpec) -> Result<Self> {
        Ok(Self {
            kind: GameKind::Quantum,
            profile: spec.profile(),
            labels: spec.labels(),
            payoffs: (0..spec.players())
                .map(|i| quantum_payoff_matrix(spec, i))
                .collect::<Result<_>>()?,
        })
    }

    pub fn kind(&self) -> GameKind {
        self.kind
    }

    pub fn players(&self) -> usize {
        self.payoffs.len()
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn labels(&self, player: usize) -> &[String] {
        &self.labels[player]
    }

    pub fn all_labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    pub fn payoff_matrix(&self, player: usize) -> &PayoffMatrix {
        &self.payoffs[player]
    }

    pub fn payoff_matrices(&self) -> &[PayoffMatrix] {
        &self.payoffs
    }

    /// All payoff matrices exactly diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.payoffs.iter().all(PayoffMatrix::is_diagonal)
    }

    /// Uniform mixture `I/L_i` for every player.
    pub fn uniform_states(&self) -> Vec<PlayerState> {
        self.profile.dims().iter().map(|&l| PlayerState::uniform(l)).collect()
    }

    /// Per-player payoffs of a product state.
    pub fn payoffs_of(&self, states: &[PlayerState]) -> Result<Vec<f64>> {
        let system = system_from_players(states)?;
        self.payoffs.iter().map(|h| payoff(&system, h)).collect()
    }
}
