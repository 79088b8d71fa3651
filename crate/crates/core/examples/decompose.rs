//! Expands a general unitary in the penny-flip operator basis.

use hilbert_games::cli::unitary;
use hilbert_games::games::{decompose_operator, penny_basis};

fn main() -> hilbert_games::Result<()> {
    let basis = penny_basis();
    let ops: Vec<_> = basis.iter().map(|b| b.operator.clone()).collect();
    for (theta, phi) in [(0.0, 0.0), (std::f64::consts::FRAC_PI_2, 0.0), (0.7, 1.9)] {
        let d = decompose_operator(&unitary(theta, phi), &ops)?;
        let parts: Vec<String> = basis
            .iter()
            .zip(&d.coefficients)
            .map(|(b, c)| format!("{}={:+.6}{:+.6}i", b.label, c.re, c.im))
            .collect();
        println!("theta={theta:.4} phi={phi:.4}: {} (residual {:.1e})", parts.join(" "), d.residual);
    }
    Ok(())
}
