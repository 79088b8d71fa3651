//! TOML game files.
//!
//! ```toml
//! kind = "classical"          # or "quantum", "raw-hermitian"
//! name = "hawk-dove"
//!
//! [[player]]
//! strategies = ["H", "D"]
//! payoff = [[3, 1], [4, 0]]   # indexed [s1][s2]...
//! ```
//!
//! Quantum files give `object_dim`, `rho0`, optional 1-based `acting_order`,
//! and per player a `payoff_operator`, `[[player.basis]]` tables with `label`
//! and `operator`, and an optional `classical` label subset. Raw files give a
//! `payoff_matrix` per player over the product basis. Complex entries are
//! `[re, im]` pairs.

use std::ops::Range;

use serde::Deserialize;
use toml::Spanned;

use super::table::{format_float, quote};
use crate::error::{Error, Result};
use crate::games::{
    check_orthonormal, validate_density, BasisOperator, ClassicalGame, GameDefinition, QuantumGameSpec, RawGame,
};
use crate::lina::{c64, ComplexMatrix};

type Entries = Vec<Vec<[f64; 2]>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    kind: Spanned<String>,
    name: Option<String>,
    #[allow(dead_code)]
    description: Option<String>,
    object_dim: Option<Spanned<i64>>,
    rho0: Option<Spanned<Entries>>,
    acting_order: Option<Spanned<Vec<i64>>>,
    #[serde(rename = "player", default)]
    players: Vec<Spanned<PlayerDoc>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PlayerDoc {
    strategies: Option<Spanned<Vec<String>>>,
    payoff: Option<Spanned<toml::Value>>,
    payoff_operator: Option<Spanned<Entries>>,
    #[serde(default)]
    basis: Vec<Spanned<BasisDoc>>,
    classical: Option<Spanned<Vec<String>>>,
    payoff_matrix: Option<Spanned<Entries>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisDoc {
    label: String,
    operator: Spanned<Entries>,
}

struct Source<'a> {
    text: &'a str,
}

impl Source<'_> {
    fn line(&self, span: &Range<usize>) -> usize {
        let end = span.start.min(self.text.len());
        self.text[..end].matches('\n').count() + 1
    }

    fn error(&self, span: &Range<usize>, field: impl Into<String>, message: impl ToString) -> Error {
        Error::GameFile {
            line: self.line(span),
            field: field.into(),
            message: message.to_string(),
        }
    }

    /// Key written on the line of a parse error, if any.
    fn key_at(&self, span: &Range<usize>) -> String {
        let line = self.text.lines().nth(self.line(span) - 1).unwrap_or("");
        match line.split_once('=') {
            Some((key, _)) if !key.trim().is_empty() => key.trim().to_string(),
            _ => "document".to_string(),
        }
    }
}

/// Reads a game file, reporting the offending line and field on failure.
pub fn parse_game_file(text: &str) -> Result<GameDefinition> {
    let src = Source { text };
    let doc: Document = toml::from_str(text).map_err(|e| {
        let span = e.span().unwrap_or(0..0);
        src.error(&span, src.key_at(&span), e.message().trim())
    })?;

    let kind_span = doc.kind.span();
    match doc.kind.get_ref().as_str() {
        "classical" => parse_classical(&src, doc),
        "quantum" => parse_quantum(&src, doc),
        "raw-hermitian" => parse_raw(&src, doc),
        other => Err(src.error(
            &kind_span,
            "kind",
            format!("unknown kind `{other}` (expected classical, quantum or raw-hermitian)"),
        )),
    }
}

fn player_field(i: usize, field: &str) -> String {
    format!("player[{}].{field}", i + 1)
}

fn require_players(src: &Source, doc: &Document) -> Result<()> {
    if doc.players.len() < 2 {
        return Err(src.error(
            &doc.kind.span(),
            "player",
            format!("a game needs at least two [[player]] tables, found {}", doc.players.len()),
        ));
    }
    Ok(())
}

fn reject<T>(src: &Source, value: &Option<Spanned<T>>, field: &str, kind: &str) -> Result<()> {
    match value {
        Some(v) => Err(src.error(&v.span(), field, format!("not used by {kind} games"))),
        None => Ok(()),
    }
}

fn strategies(src: &Source, i: usize, p: &Spanned<PlayerDoc>) -> Result<Vec<String>> {
    let field = player_field(i, "strategies");
    let s = p
        .get_ref()
        .strategies
        .as_ref()
        .ok_or_else(|| src.error(&p.span(), &field, "missing"))?;
    if s.get_ref().is_empty() {
        return Err(src.error(&s.span(), &field, "needs at least one strategy"));
    }
    Ok(s.get_ref().clone())
}

fn to_matrix(src: &Source, entries: &Spanned<Entries>, side: usize, field: &str) -> Result<ComplexMatrix> {
    let rows = entries.get_ref();
    let span = entries.span();
    if rows.len() != side || rows.iter().any(|r| r.len() != side) {
        return Err(src.error(&span, field, format!("expected a {side}x{side} matrix of [re, im] pairs")));
    }
    for (r, row) in rows.iter().enumerate() {
        for (c, z) in row.iter().enumerate() {
            if !z[0].is_finite() || !z[1].is_finite() {
                return Err(src.error(&span, field, format!("non-finite entry at ({}, {})", r + 1, c + 1)));
            }
        }
    }
    ComplexMatrix::from_rows(
        rows.iter()
            .map(|row| row.iter().map(|z| c64(z[0], z[1])).collect())
            .collect(),
    )
    .map_err(|e| src.error(&span, field, e))
}

fn hermitian(src: &Source, entries: &Spanned<Entries>, side: usize, field: &str) -> Result<ComplexMatrix> {
    let m = to_matrix(src, entries, side, field)?;
    m.to_hermitian().map_err(|e| src.error(&entries.span(), field, e))?;
    Ok(m)
}

fn flatten_tensor(value: &toml::Value, shape: &[usize], out: &mut Vec<f64>) -> std::result::Result<(), String> {
    match (shape.split_first(), value) {
        (None, toml::Value::Integer(x)) => out.push(*x as f64),
        (None, toml::Value::Float(x)) if x.is_finite() => out.push(*x),
        (None, other) => return Err(format!("expected a finite number, found {other}")),
        (Some((&len, rest)), toml::Value::Array(items)) if items.len() == len => {
            for item in items {
                flatten_tensor(item, rest, out)?;
            }
        }
        (Some(_), _) => {
            let dims: Vec<String> = shape.iter().map(usize::to_string).collect();
            return Err(format!("expected nested arrays of shape {}", dims.join("x")));
        }
    }
    Ok(())
}

fn parse_classical(src: &Source, doc: Document) -> Result<GameDefinition> {
    require_players(src, &doc)?;
    reject(src, &doc.object_dim, "object_dim", "classical")?;
    reject(src, &doc.rho0, "rho0", "classical")?;
    reject(src, &doc.acting_order, "acting_order", "classical")?;

    let labels = doc
        .players
        .iter()
        .enumerate()
        .map(|(i, p)| strategies(src, i, p))
        .collect::<Result<Vec<_>>>()?;
    let shape: Vec<usize> = labels.iter().map(Vec::len).collect();

    let mut tensors = Vec::with_capacity(labels.len());
    for (i, p) in doc.players.iter().enumerate() {
        let pd = p.get_ref();
        reject(src, &pd.payoff_operator, &player_field(i, "payoff_operator"), "classical")?;
        reject(src, &pd.payoff_matrix, &player_field(i, "payoff_matrix"), "classical")?;
        reject(src, &pd.classical, &player_field(i, "classical"), "classical")?;
        if let Some(b) = pd.basis.first() {
            return Err(src.error(&b.span(), player_field(i, "basis"), "not used by classical games"));
        }
        let field = player_field(i, "payoff");
        let payoff = pd.payoff.as_ref().ok_or_else(|| src.error(&p.span(), &field, "missing"))?;
        let mut flat = Vec::new();
        flatten_tensor(payoff.get_ref(), &shape, &mut flat).map_err(|m| src.error(&payoff.span(), &field, m))?;
        tensors.push(flat);
    }

    let mut game = ClassicalGame::new(labels, tensors).map_err(|e| src.error(&doc.kind.span(), "player", e))?;
    if let Some(name) = doc.name {
        game = game.with_name(name);
    }
    Ok(GameDefinition::Classical(game))
}

fn parse_quantum(src: &Source, doc: Document) -> Result<GameDefinition> {
    require_players(src, &doc)?;
    let dim_field = doc
        .object_dim
        .as_ref()
        .ok_or_else(|| src.error(&doc.kind.span(), "object_dim", "missing"))?;
    let d = *dim_field.get_ref();
    if d < 1 {
        return Err(src.error(&dim_field.span(), "object_dim", "must be at least 1"));
    }
    let d = d as usize;

    let rho0_field = doc.rho0.as_ref().ok_or_else(|| src.error(&doc.kind.span(), "rho0", "missing"))?;
    let rho0 = to_matrix(src, rho0_field, d, "rho0")?;
    validate_density("rho0", &rho0).map_err(|e| src.error(&rho0_field.span(), "rho0", e))?;

    let players = doc.players.len();
    let acting_order = match &doc.acting_order {
        None => Vec::new(),
        Some(order) => {
            let zero_based: Vec<usize> = order
                .get_ref()
                .iter()
                .map(|&k| if k >= 1 && (k as usize) <= players { Ok(k as usize - 1) } else { Err(()) })
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| src.error(&order.span(), "acting_order", format!("entries must lie in 1..={players}")))?;
            zero_based
        }
    };

    let mut payoff_operators = Vec::with_capacity(players);
    let mut strategy_bases = Vec::with_capacity(players);
    let mut classical_strategies = Vec::with_capacity(players);
    for (i, p) in doc.players.iter().enumerate() {
        let pd = p.get_ref();
        reject(src, &pd.payoff, &player_field(i, "payoff"), "quantum")?;
        reject(src, &pd.payoff_matrix, &player_field(i, "payoff_matrix"), "quantum")?;

        let field = player_field(i, "payoff_operator");
        let op = pd.payoff_operator.as_ref().ok_or_else(|| src.error(&p.span(), &field, "missing"))?;
        payoff_operators.push(hermitian(src, op, d, &field)?);

        let basis_field = player_field(i, "basis");
        if pd.basis.is_empty() {
            return Err(src.error(&p.span(), &basis_field, "missing [[player.basis]] tables"));
        }
        let mut basis = Vec::with_capacity(pd.basis.len());
        for b in &pd.basis {
            let label = b.get_ref().label.clone();
            if basis.iter().any(|x: &BasisOperator| x.label == label) {
                return Err(src.error(&b.span(), &basis_field, format!("duplicate label `{label}`")));
            }
            let field = format!("{basis_field}.{label}");
            basis.push(BasisOperator {
                operator: to_matrix(src, &b.get_ref().operator, d, &field)?,
                label,
            });
        }
        check_orthonormal(&basis).map_err(|m| src.error(&pd.basis[0].span(), &basis_field, m))?;

        let labels: Vec<&str> = basis.iter().map(|b| b.label.as_str()).collect();
        if let Some(s) = &pd.strategies {
            if s.get_ref().iter().map(String::as_str).ne(labels.iter().copied()) {
                return Err(src.error(
                    &s.span(),
                    player_field(i, "strategies"),
                    "quantum strategies are the basis labels; omit this key or list them in basis order",
                ));
            }
        }
        let subset = match &pd.classical {
            None => (0..basis.len()).collect(),
            Some(c) => c
                .get_ref()
                .iter()
                .map(|l| {
                    labels.iter().position(|x| x == l).ok_or_else(|| {
                        src.error(&c.span(), player_field(i, "classical"), format!("`{l}` is not a basis label"))
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        };
        strategy_bases.push(basis);
        classical_strategies.push(subset);
    }

    let spec = QuantumGameSpec {
        name: doc.name,
        object_dim: d,
        rho0,
        payoff_operators,
        strategy_bases,
        classical_strategies,
        acting_order,
    };
    let span = doc.acting_order.as_ref().map_or(doc.kind.span(), |o| o.span());
    let field = if doc.acting_order.is_some() { "acting_order" } else { "kind" };
    Ok(GameDefinition::Quantum(spec.validated().map_err(|e| src.error(&span, field, e))?))
}

fn parse_raw(src: &Source, doc: Document) -> Result<GameDefinition> {
    require_players(src, &doc)?;
    reject(src, &doc.object_dim, "object_dim", "raw-hermitian")?;
    reject(src, &doc.rho0, "rho0", "raw-hermitian")?;
    reject(src, &doc.acting_order, "acting_order", "raw-hermitian")?;

    let labels = doc
        .players
        .iter()
        .enumerate()
        .map(|(i, p)| strategies(src, i, p))
        .collect::<Result<Vec<_>>>()?;
    let side: usize = labels.iter().map(Vec::len).product();

    let mut matrices = Vec::with_capacity(labels.len());
    for (i, p) in doc.players.iter().enumerate() {
        let pd = p.get_ref();
        reject(src, &pd.payoff, &player_field(i, "payoff"), "raw-hermitian")?;
        reject(src, &pd.payoff_operator, &player_field(i, "payoff_operator"), "raw-hermitian")?;
        reject(src, &pd.classical, &player_field(i, "classical"), "raw-hermitian")?;
        if let Some(b) = pd.basis.first() {
            return Err(src.error(&b.span(), player_field(i, "basis"), "not used by raw-hermitian games"));
        }
        let field = player_field(i, "payoff_matrix");
        let m = pd.payoff_matrix.as_ref().ok_or_else(|| src.error(&p.span(), &field, "missing"))?;
        matrices.push(hermitian(src, m, side, &field)?);
    }
    let raw = RawGame::new(doc.name, labels, matrices).map_err(|e| src.error(&doc.kind.span(), "player", e))?;
    Ok(GameDefinition::RawHermitian(raw))
}

/// `[[re, im], …]` rows, one matrix row per line.
pub fn write_matrix(key: &str, m: &ComplexMatrix) -> String {
    let mut out = format!("{key} = [\n");
    for r in 0..m.rows() {
        let cells: Vec<String> = m
            .row(r)
            .iter()
            .map(|z| format!("[{}, {}]", format_float(z.re), format_float(z.im)))
            .collect();
        out.push_str(&format!("  [{}],\n", cells.join(", ")));
    }
    out.push_str("]\n");
    out
}

fn write_labels(labels: &[String]) -> String {
    let quoted: Vec<String> = labels.iter().map(|l| quote(l)).collect();
    format!("[{}]", quoted.join(", "))
}

fn write_tensor(flat: &[f64], shape: &[usize]) -> String {
    match shape.split_first() {
        None => format_float(flat[0]),
        Some((&len, rest)) => {
            let stride: usize = rest.iter().product();
            let parts: Vec<String> = (0..len)
                .map(|k| write_tensor(&flat[k * stride..(k + 1) * stride], rest))
                .collect();
            format!("[{}]", parts.join(", "))
        }
    }
}

fn header(kind: &str, name: Option<&str>) -> String {
    let mut out = format!("kind = {}\n", quote(kind));
    if let Some(name) = name {
        out.push_str(&format!("name = {}\n", quote(name)));
    }
    out
}

/// A raw-hermitian game file holding the given matrices verbatim.
pub fn write_raw_game(name: Option<&str>, labels: &[Vec<String>], matrices: &[&ComplexMatrix]) -> String {
    let mut out = header("raw-hermitian", name);
    for (l, m) in labels.iter().zip(matrices) {
        out.push_str(&format!("\n[[player]]\nstrategies = {}\n", write_labels(l)));
        out.push_str(&write_matrix("payoff_matrix", m));
    }
    out
}

/// Writes any game definition back out as a file `parse_game_file` accepts.
pub fn to_game_file(def: &GameDefinition) -> String {
    match def {
        GameDefinition::Classical(g) => {
            let mut out = header("classical", g.name());
            let shape = g.profile().dims().to_vec();
            for (i, labels) in g.labels().iter().enumerate() {
                out.push_str(&format!("\n[[player]]\nstrategies = {}\n", write_labels(labels)));
                out.push_str(&format!("payoff = {}\n", write_tensor(g.tensor(i), &shape)));
            }
            out
        }
        GameDefinition::Quantum(q) => {
            let mut out = header("quantum", q.name.as_deref());
            out.push_str(&format!("object_dim = {}\n", q.object_dim));
            let order: Vec<String> = q.acting_order.iter().map(|k| (k + 1).to_string()).collect();
            out.push_str(&format!("acting_order = [{}]\n", order.join(", ")));
            out.push_str(&write_matrix("rho0", &q.rho0));
            for (i, basis) in q.strategy_bases.iter().enumerate() {
                out.push_str("\n[[player]]\n");
                let classical: Vec<String> =
                    q.classical_strategies[i].iter().map(|&k| basis[k].label.clone()).collect();
                out.push_str(&format!("classical = {}\n", write_labels(&classical)));
                out.push_str(&write_matrix("payoff_operator", &q.payoff_operators[i]));
                for b in basis {
                    out.push_str(&format!("\n[[player.basis]]\nlabel = {}\n", quote(&b.label)));
                    out.push_str(&write_matrix("operator", &b.operator));
                }
            }
            out
        }
        GameDefinition::RawHermitian(r) => {
            let matrices: Vec<&ComplexMatrix> = r.payoffs.iter().map(|p| p.matrix()).collect();
            write_raw_game(r.name.as_deref(), &r.labels, &matrices)
        }
    }
}
