//! Cobweb data for the prisoner's dilemma kinetics at beta = 1. With the
//! symmetric start both players follow p -> 1/(1 + e^(beta (1 + p))).
//!
//! cargo run --example pd_cobweb > cobweb.csv

use hilbert_games::games::builtin;
use hilbert_games::kinetics::{binary_mixtures, iterate, Beta, KineticsConfig};

fn main() -> hilbert_games::Result<()> {
    let game = builtin("prisoners-dilemma")?.to_system_game()?;
    let beta = 1.0;
    let mut config = KineticsConfig::new(Beta::Finite(beta));
    config.record_trace = true;

    let report = iterate(&binary_mixtures(&[0.9, 0.9])?, &game, &config)?;
    let trace = report.trace.as_ref().expect("trace requested");

    // Player 1 reads player 2's previous value; player 2 reads player 1's new one.
    println!("step,x,y");
    let mut x = trace[0][1].probabilities()[0];
    for states in &trace[1..] {
        let p1 = states[0].probabilities()[0];
        let p2 = states[1].probabilities()[0];
        println!("p1,{x:.17e},{p1:.17e}");
        println!("p2,{p1:.17e},{p2:.17e}");
        x = p2;
    }
    eprintln!(
        "converged={} after {} sweeps, p_c = {:.12}",
        report.converged,
        report.sweeps_used,
        report.probabilities()[0][0]
    );
    Ok(())
}
