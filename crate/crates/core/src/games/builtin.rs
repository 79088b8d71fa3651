use super::{BasisOperator, ClassicalGame, GameDefinition, QuantumGameSpec};
use crate::error::{Error, Result};
use crate::lina::{c64, ComplexMatrix};

pub const BUILTIN_NAMES: [&str; 4] = ["prisoners-dilemma", "hawk-dove", "penny-classical", "penny-quantum"];

/// Operator basis `(N^c, F^c, N^q, F^q)` = `(I, σx, σz, σy)` on a two-level
/// object, unit-norm under the normalized inner product.
pub fn penny_basis() -> Vec<BasisOperator> {
    let op = |label: &str, rows: [[(f64, f64); 2]; 2]| BasisOperator {
        label: label.to_string(),
        operator: ComplexMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(re, im)| c64(re, im)).collect())
                .collect(),
        )
        .expect("2x2 literal"),
    };
    vec![
        op("Nc", [[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (1.0, 0.0)]]),
        op("Fc", [[(0.0, 0.0), (1.0, 0.0)], [(1.0, 0.0), (0.0, 0.0)]]),
        op("Nq", [[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (-1.0, 0.0)]]),
        op("Fq", [[(0.0, 0.0), (0.0, -1.0)], [(0.0, 1.0), (0.0, 0.0)]]),
    ]
}

pub fn builtin(name: &str) -> Result<GameDefinition> {
    let game = match name {
        "prisoners-dilemma" => GameDefinition::Classical(
            ClassicalGame::bimatrix(
                [&["C", "D"], &["C", "D"]],
                &[&[-2.0, -5.0], &[0.0, -4.0]],
                &[&[-2.0, 0.0], &[-5.0, -4.0]],
            )?
            .with_name(name),
        ),
        "hawk-dove" => GameDefinition::Classical(
            ClassicalGame::bimatrix(
                [&["H", "D"], &["H", "D"]],
                &[&[3.0, 1.0], &[4.0, 0.0]],
                &[&[3.0, 4.0], &[1.0, 0.0]],
            )?
            .with_name(name),
        ),
        "penny-classical" => GameDefinition::Classical(
            ClassicalGame::bimatrix(
                [&["N", "F"], &["N", "F"]],
                &[&[1.0, -1.0], &[-1.0, 1.0]],
                &[&[-1.0, 1.0], &[1.0, -1.0]],
            )?
            .with_name(name),
        ),
        "penny-quantum" => {
            let up = ComplexMatrix::from_diagonal(&[1.0, 0.0]);
            let p_a = ComplexMatrix::from_diagonal(&[1.0, -1.0]);
            GameDefinition::Quantum(
                QuantumGameSpec {
                    name: Some(name.to_string()),
                    object_dim: 2,
                    rho0: up,
                    payoff_operators: vec![p_a.clone(), p_a.scale(c64(-1.0, 0.0))],
                    strategy_bases: vec![penny_basis(), penny_basis()],
                    classical_strategies: vec![vec![0, 1], vec![0, 1]],
                    acting_order: vec![0, 1],
                }
                .validated()?,
            )
        }
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    Ok(game)
}
