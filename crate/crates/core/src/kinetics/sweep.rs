use rayon::prelude::*;

use super::{iterate, stability, Beta, FixedPointReport, KineticsConfig};
use crate::error::{Error, Result};
use crate::games::{PlayerState, SystemGame};

#[derive(Clone, Debug, PartialEq)]
pub struct SweepOptions {
    /// Start each β from the previous β's end state instead of the
    /// supplied initial states.
    pub warm_start: bool,
    /// Finite-difference step for the per-row stability analysis of
    /// diagonal games.
    pub fd_step: f64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            warm_start: false,
            fd_step: 1e-6,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub beta: Beta,
    pub report: FixedPointReport,
}

impl SweepRow {
    pub fn spectral_radius(&self) -> Option<f64> {
        self.report.stability.as_ref().map(|s| s.spectral_radius)
    }
}

/// Runs [`iterate`] at every β of an ascending grid. Diagonal games also get
/// a stability report at each end state.
pub fn beta_sweep(
    game: &SystemGame,
    betas: &[Beta],
    initial: &[PlayerState],
    template: &KineticsConfig,
    options: &SweepOptions,
) -> Result<Vec<SweepRow>> {
    if betas.is_empty() {
        return Err(Error::Usage("beta grid is empty".into()));
    }
    if betas.windows(2).any(|w| !(w[0].value() < w[1].value())) {
        return Err(Error::Usage("beta grid must be strictly ascending".into()));
    }

    let run = |beta: Beta, start: &[PlayerState]| -> Result<SweepRow> {
        let config = KineticsConfig {
            beta,
            ..template.clone()
        };
        let mut report = iterate(start, game, &config)?;
        if game.is_diagonal() {
            report.stability = Some(stability(&report.states, game, &config, options.fd_step)?);
        }
        Ok(SweepRow { beta, report })
    };

    if options.warm_start {
        let mut rows = Vec::with_capacity(betas.len());
        let mut start = initial.to_vec();
        for &beta in betas {
            let row = run(beta, &start)?;
            start = row.report.states.clone();
            rows.push(row);
        }
        Ok(rows)
    } else {
        betas.par_iter().map(|&beta| run(beta, initial)).collect()
    }
}
