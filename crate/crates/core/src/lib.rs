//! Static games, classical and quantum, represented as Hermitian payoff
//! matrices over the product space of the players' strategy bases.
//!
//! The crate is organized bottom-up:
//!
//! - [`lina`]: complex dense matrices, Kronecker products, partial traces,
//!   Hermitian eigendecomposition and the Gibbs exponential.
//! - [`games`]: classical payoff tables and quantum operator-strategy games,
//!   their system payoff matrices, player/system states and payoffs.
//! - [`kinetics`]: reduced payoff matrices, Gibbs updates, the fixed-point
//!   iteration, linear stability and β sweeps.
//! - [`cli`]: the game-file format and the commands behind the `hgame`
//!   binary.
//!
//! ```
//! use hilbert_games::games::builtin;
//! use hilbert_games::kinetics::{iterate, Beta, KineticsConfig};
//!
//! let game = builtin("prisoners-dilemma")?.to_system_game()?;
//! let report = iterate(&game.uniform_states(), &game, &KineticsConfig::new(Beta::Infinite))?;
//! assert!(report.converged);
//! assert_eq!(report.probabilities()[0], vec![0.0, 1.0]);
//! # Ok::<(), hilbert_games::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod games;
pub mod kinetics;
pub mod lina;

pub use error::{Error, Result};
