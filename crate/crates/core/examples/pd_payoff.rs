//! Prisoner's dilemma as diagonal payoff matrices, and the expected payoff of
//! a mixed profile computed both ways.

use hilbert_games::games::{builtin, classical_payoff_matrix, mixture_state, payoff, system_from_players, GameDefinition};

fn main() -> hilbert_games::Result<()> {
    let GameDefinition::Classical(pd) = builtin("prisoners-dilemma")? else {
        unreachable!("prisoners-dilemma is classical")
    };

    for i in 0..pd.players() {
        let h = classical_payoff_matrix(&pd, i)?;
        println!("H{} diagonal: {:?}", i + 1, h.matrix().real_diagonal());
    }

    let mixes = [vec![0.3, 0.7], vec![0.8, 0.2]];
    let states = [mixture_state(&mixes[0])?, mixture_state(&mixes[1])?];
    let system = system_from_players(&states)?;
    for i in 0..pd.players() {
        let h = classical_payoff_matrix(&pd, i)?;
        println!(
            "player {}: Tr(rho H) = {:.12}, bilinear = {:.12}",
            i + 1,
            payoff(&system, &h)?,
            pd.expected_payoff(i, &mixes)
        );
    }
    Ok(())
}
