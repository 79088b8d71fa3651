//! Player 1's reduced payoff in the quantum penny flip when player 2 plays
//! the classical no-flip, its spectrum, and the payoff of the best response.

use hilbert_games::games::{builtin, mixture_state, GameDefinition, SystemGame};
use hilbert_games::kinetics::{gibbs_update, reduced_payoff, Beta};
use hilbert_games::lina::eig_hermitian;

fn main() -> hilbert_games::Result<()> {
    let def = builtin("penny-quantum")?;
    let GameDefinition::Quantum(_) = &def else { unreachable!() };
    let game: SystemGame = def.to_system_game()?;

    let no_flip = mixture_state(&[1.0, 0.0, 0.0, 0.0])?;
    let h_r = reduced_payoff(game.payoff_matrix(0), &[&no_flip], game.profile())?;
    println!("reduced payoff:\n{h_r:?}");

    let eig = eig_hermitian(&h_r)?;
    for (k, value) in eig.values.iter().enumerate() {
        let v: Vec<String> = eig.vector(k).iter().map(|z| format!("{:+.4}{:+.4}i", z.re, z.im)).collect();
        println!("lambda = {value:+.6}  v = [{}]", v.join(", "));
    }

    let best = gibbs_update(&h_r, Beta::Infinite)?;
    let payoffs = game.payoffs_of(&[best, no_flip])?;
    println!("payoff of the top eigenvector: {:.6} (best classical reply earns 1)", payoffs[0]);
    Ok(())
}
