//! Bifurcation data for Hawk-Dove: the hawk probabilities of both players
//! over a beta grid, from two mirrored asymmetric starts.
//!
//! cargo run --example hawk_dove_sweep > hawk_dove.csv

use hilbert_games::games::builtin;
use hilbert_games::kinetics::{beta_sweep, binary_mixtures, Beta, KineticsConfig, SweepOptions};

fn main() -> hilbert_games::Result<()> {
    let game = builtin("hawk-dove")?.to_system_game()?;
    let mut betas: Vec<Beta> = (0..=40).map(|k| Beta::Finite(k as f64 / 5.0)).collect();
    betas.push(Beta::Infinite);

    // Update player 2 first so player 1's perturbed start is actually read.
    let template = KineticsConfig::new(Beta::Infinite).with_order(vec![1, 0]);
    let mut out = csv::Writer::from_writer(std::io::stdout());
    out.write_record(["start", "beta", "p1_hawk", "p2_hawk", "converged", "spectral_radius"])
        .expect("stdout");
    for start in [0.6, 0.4] {
        let rows = beta_sweep(&game, &betas, &binary_mixtures(&[start, 0.5])?, &template, &SweepOptions::default())?;
        for row in rows {
            let p = row.report.probabilities();
            out.write_record([
                start.to_string(),
                row.beta.to_string(),
                format!("{:.17e}", p[0][0]),
                format!("{:.17e}", p[1][0]),
                row.report.converged.to_string(),
                row.spectral_radius().map_or(String::new(), |r| format!("{r:.6}")),
            ])
            .expect("stdout");
        }
    }
    out.flush().expect("stdout");
    Ok(())
}
