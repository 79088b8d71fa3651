//! The 16x16 payoff matrix of the quantum penny flip, printed with symbols,
//! and its classical {Nc, Fc} sub-block.

use hilbert_games::games::{builtin, quantum_payoff_matrix, spec_classical_subblock, GameDefinition};
use hilbert_games::lina::{Complex64, ComplexMatrix};

fn symbol(z: Complex64) -> &'static str {
    let near = |a: f64, b: f64| (z.re - a).abs() < 1e-12 && (z.im - b).abs() < 1e-12;
    match () {
        _ if near(0.0, 0.0) => "0",
        _ if near(1.0, 0.0) => "1",
        _ if near(-1.0, 0.0) => "-1",
        _ if near(0.0, 1.0) => "i",
        _ if near(0.0, -1.0) => "-i",
        _ => "?",
    }
}

fn show(m: &ComplexMatrix) {
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|&z| format!("{:>3}", symbol(z))).collect();
        println!("{}", row.join(""));
    }
}

fn main() -> hilbert_games::Result<()> {
    let GameDefinition::Quantum(spec) = builtin("penny-quantum")? else {
        unreachable!()
    };
    let h1 = quantum_payoff_matrix(&spec, 0)?;
    let labels = spec.labels();
    let order: Vec<String> = labels[0]
        .iter()
        .flat_map(|a| labels[1].iter().map(move |b| format!("{a}{b}")))
        .collect();
    println!("basis order: {}", order.join(" "));
    show(h1.matrix());

    println!("\nclassical sub-block:");
    show(&spec_classical_subblock(&h1, &spec)?);

    let h2 = quantum_payoff_matrix(&spec, 1)?;
    let zero_sum = h1.matrix().add(h2.matrix())?.max_abs();
    println!("\nmax |H1 + H2| = {zero_sum}");
    Ok(())
}
