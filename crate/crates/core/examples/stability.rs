//! Linear stability of fixed points in the three classical builtins.

use hilbert_games::games::builtin;
use hilbert_games::kinetics::{iterate, stability, Beta, KineticsConfig};

fn main() -> hilbert_games::Result<()> {
    let cases = [("hawk-dove", 4.0), ("penny-classical", 0.5), ("penny-classical", 2.0), ("prisoners-dilemma", 1.0)];
    for (name, beta) in cases {
        let game = builtin(name)?.to_system_game()?;
        let config = KineticsConfig::new(Beta::Finite(beta));
        let fixed = iterate(&game.uniform_states(), &game, &config)?;
        let s = stability(&fixed.states, &game, &config, 1e-6)?;
        println!(
            "{name:<18} beta={beta:<4} point={:?} converged={} radius={:.6} {}",
            fixed.probabilities().iter().map(|p| p[0]).collect::<Vec<_>>(),
            fixed.converged,
            s.spectral_radius,
            s.classification
        );
        for row in &s.jacobian {
            println!("    {:?}", row.iter().map(|x| format!("{x:+.6}")).collect::<Vec<_>>());
        }
    }
    Ok(())
}
