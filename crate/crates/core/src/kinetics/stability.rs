use std::fmt;

use nalgebra::DMatrix;

use super::{update_player, KineticsConfig};
use crate::error::{Error, Result};
use crate::games::{mixture_state, PlayerState, SystemGame};

/// Half-width of the band around spectral radius 1 classified as marginal.
pub const STABILITY_MARGIN: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Stable,
    Unstable,
    Marginal,
}

impl Classification {
    pub fn from_radius(radius: f64) -> Self {
        if radius < 1.0 - STABILITY_MARGIN {
            Classification::Stable
        } else if radius > 1.0 + STABILITY_MARGIN {
            Classification::Unstable
        } else {
            Classification::Marginal
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Stable => "stable",
            Classification::Unstable => "unstable",
            Classification::Marginal => "marginal",
        })
    }
}

/// Linearization of the parallel update map at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityReport {
    /// `(player, strategy)` for each independent probability coordinate; the
    /// last strategy of every player is the dependent one.
    pub coordinates: Vec<(usize, usize)>,
    /// `∂p^i_α / ∂p^j_μ`, rows and columns indexed by `coordinates`.
    pub jacobian: Vec<Vec<f64>>,
    pub spectral_radius: f64,
    pub classification: Classification,
}

/// Central finite-difference Jacobian of the one-step map in independent
/// diagonal coordinates. Each `∂p^i/∂p^j` holds every other player at
/// `states`, i.e. the map updates all players from the same point.
pub fn stability(
    states: &[PlayerState],
    game: &SystemGame,
    config: &KineticsConfig,
    fd_step: f64,
) -> Result<StabilityReport> {
    if !game.is_diagonal() {
        return Err(Error::NotClassical("payoff matrices have off-diagonal entries".into()));
    }
    if states.len() != game.players() {
        return Err(Error::InvalidState(format!(
            "{} states for a {}-player game",
            states.len(),
            game.players()
        )));
    }
    if let Some(i) = states.iter().position(|s| !s.is_diagonal()) {
        return Err(Error::NotClassical(format!("state of player {} is not diagonal", i + 1)));
    }
    if !(fd_step > 0.0 && fd_step < 0.5) {
        return Err(Error::Usage(format!("finite-difference step {fd_step} outside (0, 0.5)")));
    }

    let point: Vec<Vec<f64>> = states.iter().map(PlayerState::probabilities).collect();
    let coordinates: Vec<(usize, usize)> = point
        .iter()
        .enumerate()
        .flat_map(|(i, p)| (0..p.len().saturating_sub(1)).map(move |a| (i, a)))
        .collect();

    let image = |p: &[Vec<f64>]| -> Result<Vec<f64>> {
        let states = p.iter().map(|x| mixture_state(x)).collect::<Result<Vec<_>>>()?;
        let mut out = Vec::with_capacity(coordinates.len());
        for player in 0..game.players() {
            let next = update_player(&states, game, player, config.beta)?.probabilities();
            out.extend_from_slice(&next[..next.len() - 1]);
        }
        Ok(out)
    };

    let m = coordinates.len();
    let mut jacobian = vec![vec![0.0; m]; m];
    for (col, &(player, strategy)) in coordinates.iter().enumerate() {
        let (plus, x_plus) = perturbed(&point, player, strategy, fd_step);
        let (minus, x_minus) = perturbed(&point, player, strategy, -fd_step);
        let (f_plus, f_minus) = (image(&plus)?, image(&minus)?);
        let width = x_plus - x_minus;
        for row in 0..m {
            jacobian[row][col] = (f_plus[row] - f_minus[row]) / width;
        }
    }

    let spectral_radius = if m == 0 {
        0.0
    } else {
        let flat: Vec<f64> = jacobian.iter().flatten().copied().collect();
        DMatrix::from_row_slice(m, m, &flat)
            .complex_eigenvalues()
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    };

    Ok(StabilityReport {
        coordinates,
        jacobian,
        spectral_radius,
        classification: Classification::from_radius(spectral_radius),
    })
}

/// Shifts one independent coordinate, clipping to `[0, 1]` and
/// renormalizing through the dependent (last) coordinate. Returns the new
/// point and the realized value of the shifted coordinate.
fn perturbed(point: &[Vec<f64>], player: usize, strategy: usize, step: f64) -> (Vec<Vec<f64>>, f64) {
    let mut p = point.to_vec();
    let probs = &mut p[player];
    let last = probs.len() - 1;
    probs[strategy] = (probs[strategy] + step).clamp(0.0, 1.0);
    let free: f64 = probs[..last].iter().sum();
    if free > 1.0 {
        for x in &mut probs[..last] {
            *x /= free;
        }
        probs[last] = 0.0;
    } else {
        probs[last] = 1.0 - free;
    }
    let realized = probs[strategy];
    (p, realized)
}
