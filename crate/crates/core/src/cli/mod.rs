//! Command front end shared by the `hgame` binary and the tests.
//!
//! [`execute`] turns a [`RunRequest`] into the exact bytes a command prints,
//! so everything except argument parsing and file writing is testable
//! in-process.

pub mod gamefile;
pub mod table;

use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

pub use gamefile::{parse_game_file, to_game_file, write_raw_game};
use table::{quote, Cell, Table};

use crate::error::{Error, Result};
use crate::games::{builtin, decompose_operator, mixture_state, GameDefinition, GameKind, PlayerState, SystemGame};
use crate::kinetics::{
    beta_sweep, iterate, reduced_payoff, stability, Beta, FixedPointReport, KineticsConfig, SweepOptions, UpdateMode,
};
use crate::lina::{c64, Complex64, ComplexMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Build,
    Eval,
    Reduce,
    Iterate,
    Sweep,
    Stability,
    Decompose,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameSource {
    File(PathBuf),
    Builtin(String),
    /// Game-file text already in memory.
    Text(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Structured,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Order {
    #[default]
    Seq,
    Par,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunRequest {
    pub command: Command,
    pub source: GameSource,
    /// 1-based.
    pub player: Option<usize>,
    pub beta: Option<Beta>,
    pub betas: Option<String>,
    pub init: Option<String>,
    pub tolerance: f64,
    pub max_sweeps: usize,
    pub order: Order,
    /// 1-based permutation of the players.
    pub update_order: Option<Vec<usize>>,
    pub trace: bool,
    pub warm_start: bool,
    pub fd_step: f64,
    pub format: Format,
    /// Inline TOML matrix of `[re, im]` pairs.
    pub operator: Option<String>,
    /// `(θ, φ)` of the unitary `cos θ σz + sin θ (cos φ σx + sin φ σy)`.
    pub unitary: Option<(f64, f64)>,
}

impl RunRequest {
    pub fn new(command: Command, source: GameSource) -> Self {
        Self {
            command,
            source,
            player: None,
            beta: None,
            betas: None,
            init: None,
            tolerance: 1e-10,
            max_sweeps: 100_000,
            order: Order::Seq,
            update_order: None,
            trace: false,
            warm_start: false,
            fd_step: 1e-6,
            format: Format::Csv,
            operator: None,
            unitary: None,
        }
    }

    fn check_ranges(&self) -> Result<()> {
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(Error::Usage(format!("--tol must be positive, got {}", self.tolerance)));
        }
        if self.max_sweeps == 0 {
            return Err(Error::Usage("--max-sweeps must be at least 1".into()));
        }
        if !(self.fd_step > 0.0 && self.fd_step < 0.5) {
            return Err(Error::Usage(format!("--fd-step must lie in (0, 0.5), got {}", self.fd_step)));
        }
        if self.player == Some(0) {
            return Err(Error::Usage("--player is 1-based".into()));
        }
        Ok(())
    }

    fn config(&self, beta: Beta, players: usize) -> Result<KineticsConfig> {
        let mut config = KineticsConfig::new(beta);
        config.tolerance = self.tolerance;
        config.max_sweeps = self.max_sweeps;
        config.mode = match self.order {
            Order::Seq => UpdateMode::Sequential,
            Order::Par => UpdateMode::Parallel,
        };
        if let Some(order) = &self.update_order {
            if order.iter().any(|&k| k == 0 || k > players) {
                return Err(Error::Usage(format!("--update-order entries must lie in 1..={players}")));
            }
            config.update_order = Some(order.iter().map(|k| k - 1).collect());
        }
        config.record_trace = self.trace;
        config.order(players)?;
        Ok(config)
    }

    fn require_beta(&self) -> Result<Beta> {
        self.beta
            .ok_or_else(|| Error::Usage(format!("{} needs --beta", command_name(self.command))))
    }

    fn player_index(&self, game: &SystemGame) -> Result<Option<usize>> {
        match self.player {
            None => Ok(None),
            Some(k) if k >= 1 && k <= game.players() => Ok(Some(k - 1)),
            Some(k) => Err(Error::Usage(format!(
                "--player {k} out of range for a {}-player game",
                game.players()
            ))),
        }
    }
}

fn command_name(c: Command) -> &'static str {
    match c {
        Command::Build => "build",
        Command::Eval => "eval",
        Command::Reduce => "reduce",
        Command::Iterate => "iterate",
        Command::Sweep => "sweep",
        Command::Stability => "stability",
        Command::Decompose => "decompose",
    }
}

/// Text a command prints, plus warnings meant for stderr.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Output {
    pub text: String,
    pub warnings: Vec<String>,
}

pub fn load_game(source: &GameSource) -> Result<GameDefinition> {
    match source {
        GameSource::Builtin(name) => builtin(name),
        GameSource::Text(text) => parse_game_file(text),
        GameSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            parse_game_file(&text)
        }
    }
}

/// Initial states from `--init`. Players are separated by `;`, each given as
/// a comma list of diagonal probabilities. When every player has two
/// strategies, a single comma list of N numbers gives each player's
/// first-strategy probability.
pub fn parse_init(spec: Option<&str>, game: &SystemGame) -> Result<Vec<PlayerState>> {
    let Some(spec) = spec.map(str::trim).filter(|s| !s.is_empty() && *s != "uniform") else {
        return Ok(game.uniform_states());
    };
    let number = |s: &str| -> Result<f64> {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Error::Usage(format!("--init: `{}` is not a number", s.trim())))
    };
    let dims = game.profile().dims();
    let groups: Vec<Vec<f64>> = if !spec.contains(';') && dims.iter().all(|&l| l == 2) {
        let first = spec.split(',').map(number).collect::<Result<Vec<_>>>()?;
        if first.len() != dims.len() {
            return Err(Error::Usage(format!(
                "--init: expected {} first-strategy probabilities, got {}",
                dims.len(),
                first.len()
            )));
        }
        first.into_iter().map(|p| vec![p, 1.0 - p]).collect()
    } else {
        spec.split(';')
            .map(|g| g.split(',').map(number).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?
    };
    if groups.len() != dims.len() {
        return Err(Error::Usage(format!("--init: {} players given, game has {}", groups.len(), dims.len())));
    }
    groups
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if p.len() != dims[i] {
                return Err(Error::Usage(format!(
                    "--init: player {} needs {} probabilities, got {}",
                    i + 1,
                    dims[i],
                    p.len()
                )));
            }
            mixture_state(p).map_err(|e| Error::Usage(format!("--init: player {}: {e}", i + 1)))
        })
        .collect()
}

/// `--betas`: comma-separated items, each a value (`inf` allowed) or an
/// inclusive `start:stop:step` range.
pub fn parse_betas(spec: &str) -> Result<Vec<Beta>> {
    let bad = |item: &str| Error::Usage(format!("--betas: cannot read `{item}`"));
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim) {
        let parts: Vec<&str> = item.split(':').collect();
        match parts.as_slice() {
            [single] => out.push(single.parse::<Beta>().map_err(|_| bad(item))?),
            [start, stop, step] => {
                let [a, b, h] = [start, stop, step].map(|s| s.trim().parse::<f64>());
                let (a, b, h) = (a.map_err(|_| bad(item))?, b.map_err(|_| bad(item))?, h.map_err(|_| bad(item))?);
                if !(a.is_finite() && b.is_finite() && h.is_finite() && h > 0.0 && b >= a) {
                    return Err(Error::Usage(format!("--betas: `{item}` needs finite start <= stop and step > 0")));
                }
                let n = ((b - a) / h + 1e-9).floor() as usize;
                if n > 1_000_000 {
                    return Err(Error::Usage(format!("--betas: `{item}` has too many points")));
                }
                for k in 0..=n {
                    out.push(Beta::new(a + k as f64 * h)?);
                }
            }
            _ => return Err(bad(item)),
        }
    }
    Ok(out)
}

/// Reads an inline TOML matrix such as `[[[1, 0], [0, 0]], [[0, 0], [1, 0]]]`.
pub fn parse_operator(text: &str) -> Result<ComplexMatrix> {
    #[derive(Deserialize)]
    struct Holder {
        m: Vec<Vec<[f64; 2]>>,
    }
    let holder: Holder = toml::from_str(&format!("m = {text}"))
        .map_err(|e| Error::Usage(format!("--operator: {}", e.message().trim())))?;
    let m = ComplexMatrix::from_rows(
        holder
            .m
            .iter()
            .map(|row| row.iter().map(|z| c64(z[0], z[1])).collect())
            .collect(),
    )
    .map_err(|e| Error::Usage(format!("--operator: {e}")))?;
    if !m.is_square() {
        return Err(Error::Usage("--operator must be square".into()));
    }
    Ok(m)
}

/// `cos θ σz + sin θ (cos φ σx + sin φ σy)`.
pub fn unitary(theta: f64, phi: f64) -> ComplexMatrix {
    let (s, c) = theta.sin_cos();
    ComplexMatrix::from_rows(vec![
        vec![c64(c, 0.0), Complex64::from_polar(s, -phi)],
        vec![Complex64::from_polar(s, phi), c64(-c, 0.0)],
    ])
    .expect("2x2 literal")
}

pub fn execute(req: &RunRequest) -> Result<Output> {
    req.check_ranges()?;
    let def = load_game(&req.source)?;
    let game = def.to_system_game()?;
    match req.command {
        Command::Build => cmd_build(req, &def, &game),
        Command::Eval => cmd_eval(req, &game),
        Command::Reduce => cmd_reduce(req, &game),
        Command::Iterate => cmd_iterate(req, &game),
        Command::Sweep => cmd_sweep(req, &game),
        Command::Stability => cmd_stability(req, &game),
        Command::Decompose => cmd_decompose(req, &def),
    }
}

fn emit(req: &RunRequest, table: &Table) -> Result<String> {
    match req.format {
        Format::Csv => table.to_csv(),
        Format::Structured => Ok(table.to_structured()),
    }
}

fn collect_warnings(reports: &[&FixedPointReport]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for w in reports.iter().flat_map(|r| &r.warnings) {
        let text = w.to_string();
        if !out.contains(&text) {
            out.push(text);
        }
    }
    out
}

fn row_labels(game: &SystemGame) -> Vec<String> {
    let profile = game.profile();
    (0..profile.total())
        .map(|flat| {
            profile
                .unflatten(flat)
                .iter()
                .enumerate()
                .map(|(i, &s)| game.labels(i)[s].as_str())
                .collect::<Vec<_>>()
                .join("|")
        })
        .collect()
}

fn matrix_headers(first: &[&str], cols: usize) -> Vec<String> {
    let mut headers: Vec<String> = first.iter().map(|s| s.to_string()).collect();
    for c in 0..cols {
        headers.push(format!("re_{c}"));
        headers.push(format!("im_{c}"));
    }
    headers
}

fn push_matrix_rows(table: &mut Table, lead: &[Cell], labels: &[String], m: &ComplexMatrix) {
    for r in 0..m.rows() {
        let mut row = lead.to_vec();
        row.push(Cell::Int(r as i64));
        row.push(Cell::Text(labels[r].clone()));
        for z in m.row(r) {
            row.push(Cell::Float(z.re));
            row.push(Cell::Float(z.im));
        }
        table.push(row);
    }
}

fn cmd_build(req: &RunRequest, def: &GameDefinition, game: &SystemGame) -> Result<Output> {
    let only = req.player_index(game)?;
    let text = match req.format {
        Format::Structured => {
            if only.is_some() {
                return Err(Error::Usage(
                    "structured build output is a complete game file; drop --player".into(),
                ));
            }
            let matrices: Vec<&ComplexMatrix> = game.payoff_matrices().iter().map(|p| p.matrix()).collect();
            write_raw_game(def.name(), game.all_labels(), &matrices)
        }
        Format::Csv => {
            let labels = row_labels(game);
            let mut table = Table::with_headers(matrix_headers(&["player", "row", "strategies"], labels.len()));
            for (i, h) in game.payoff_matrices().iter().enumerate() {
                if only.is_none_or(|k| k == i) {
                    push_matrix_rows(&mut table, &[Cell::Int(i as i64 + 1)], &labels, h.matrix());
                }
            }
            table.to_csv()?
        }
    };
    Ok(Output { text, warnings: Vec::new() })
}

fn cmd_eval(req: &RunRequest, game: &SystemGame) -> Result<Output> {
    let only = req.player_index(game)?;
    let states = parse_init(req.init.as_deref(), game)?;
    let payoffs = game.payoffs_of(&states)?;
    let mut table = Table::new(&["player", "payoff"]);
    for (i, e) in payoffs.iter().enumerate() {
        if only.is_none_or(|k| k == i) {
            table.push(vec![(i + 1).into(), (*e).into()]);
        }
    }
    Ok(Output {
        text: emit(req, &table)?,
        warnings: Vec::new(),
    })
}

fn cmd_reduce(req: &RunRequest, game: &SystemGame) -> Result<Output> {
    let owner = req
        .player_index(game)?
        .ok_or_else(|| Error::Usage("reduce needs --player".into()))?;
    let states = parse_init(req.init.as_deref(), game)?;
    let others: Vec<&PlayerState> = states
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != owner)
        .map(|(_, s)| s)
        .collect();
    let h_r = reduced_payoff(game.payoff_matrix(owner), &others, game.profile())?;
    let labels = game.labels(owner);
    let text = match req.format {
        Format::Csv => {
            let mut table = Table::with_headers(matrix_headers(&["player", "row", "strategy"], h_r.cols()));
            push_matrix_rows(&mut table, &[Cell::Int(owner as i64 + 1)], labels, &h_r);
            table.to_csv()?
        }
        Format::Structured => {
            let quoted: Vec<String> = labels.iter().map(|l| quote(l)).collect();
            format!(
                "player = {}\nstrategies = [{}]\n{}",
                owner + 1,
                quoted.join(", "),
                gamefile::write_matrix("reduced_payoff", &h_r)
            )
        }
    };
    Ok(Output { text, warnings: Vec::new() })
}

fn cmd_iterate(req: &RunRequest, game: &SystemGame) -> Result<Output> {
    let beta = req.require_beta()?;
    let config = req.config(beta, game.players())?;
    let initial = parse_init(req.init.as_deref(), game)?;
    let report = iterate(&initial, game, &config)?;

    let mut table = Table::new(&["sweep", "player", "strategy", "probability", "payoff", "converged", "residual"]);
    let mut push_sweep = |sweep: usize, states: &[PlayerState], residual: Option<f64>, converged: bool| -> Result<()> {
        let payoffs = game.payoffs_of(states)?;
        for (i, s) in states.iter().enumerate() {
            for (a, p) in s.probabilities().into_iter().enumerate() {
                table.push(vec![
                    sweep.into(),
                    (i + 1).into(),
                    game.labels(i)[a].as_str().into(),
                    p.into(),
                    payoffs[i].into(),
                    converged.into(),
                    residual.into(),
                ]);
            }
        }
        Ok(())
    };

    match &report.trace {
        Some(trace) => {
            for (sweep, states) in trace.iter().enumerate() {
                let residual = match sweep {
                    0 => None,
                    _ => Some(max_change(&trace[sweep - 1], states)?),
                };
                let last = sweep + 1 == trace.len();
                push_sweep(sweep, states, residual, last && report.converged)?;
            }
        }
        None => push_sweep(report.sweeps_used, &report.states, Some(report.residual), report.converged)?,
    }
    Ok(Output {
        text: emit(req, &table)?,
        warnings: collect_warnings(&[&report]),
    })
}

fn max_change(a: &[PlayerState], b: &[PlayerState]) -> Result<f64> {
    let mut worst = 0.0_f64;
    for (x, y) in a.iter().zip(b) {
        worst = worst.max(x.rho().max_abs_diff(y.rho())?);
    }
    Ok(worst)
}

fn cmd_sweep(req: &RunRequest, game: &SystemGame) -> Result<Output> {
    let spec = req
        .betas
        .as_deref()
        .ok_or_else(|| Error::Usage("sweep needs --betas".into()))?;
    let betas = parse_betas(spec)?;
    let template = req.config(Beta::Infinite, game.players())?;
    let initial = parse_init(req.init.as_deref(), game)?;
    let options = SweepOptions {
        warm_start: req.warm_start,
        fd_step: req.fd_step,
    };
    let rows = beta_sweep(game, &betas, &initial, &template, &options)?;

    let mut table = Table::new(&["beta", "player", "strategy", "probability", "converged", "spectral_radius"]);
    for row in &rows {
        for (i, p) in row.report.probabilities().iter().enumerate() {
            for (a, &x) in p.iter().enumerate() {
                table.push(vec![
                    row.beta.value().into(),
                    (i + 1).into(),
                    game.labels(i)[a].as_str().into(),
                    x.into(),
                    row.report.converged.into(),
                    row.spectral_radius().into(),
                ]);
            }
        }
    }
    let reports: Vec<&FixedPointReport> = rows.iter().map(|r| &r.report).collect();
    Ok(Output {
        text: emit(req, &table)?,
        warnings: collect_warnings(&reports),
    })
}

fn cmd_stability(req: &RunRequest, game: &SystemGame) -> Result<Output> {
    if game.kind() == GameKind::Quantum {
        return Err(Error::Usage("stability needs a classical game, got a quantum one".into()));
    }
    let beta = req.require_beta()?;
    let config = req.config(beta, game.players())?;
    let initial = parse_init(req.init.as_deref(), game)?;
    let report = iterate(&initial, game, &config)?;
    let s = stability(&report.states, game, &config, req.fd_step)?;

    let coord = |(i, a): (usize, usize)| format!("{}:{}", i + 1, game.labels(i)[a]);
    let mut table = Table::new(&["beta", "row", "col", "entry", "spectral_radius", "classification", "converged"]);
    for (r, &rc) in s.coordinates.iter().enumerate() {
        for (c, &cc) in s.coordinates.iter().enumerate() {
            table.push(vec![
                beta.value().into(),
                coord(rc).into(),
                coord(cc).into(),
                s.jacobian[r][c].into(),
                s.spectral_radius.into(),
                s.classification.to_string().into(),
                report.converged.into(),
            ]);
        }
    }
    Ok(Output {
        text: emit(req, &table)?,
        warnings: collect_warnings(&[&report]),
    })
}

fn cmd_decompose(req: &RunRequest, def: &GameDefinition) -> Result<Output> {
    let GameDefinition::Quantum(spec) = def else {
        return Err(Error::Usage(format!(
            "decompose needs a quantum game with an operator basis, got a {} game",
            def.kind().as_str()
        )));
    };
    let player = match req.player {
        None => 0,
        Some(k) if k >= 1 && k <= spec.players() => k - 1,
        Some(k) => return Err(Error::Usage(format!("--player {k} out of range"))),
    };
    let a = match (&req.operator, req.unitary) {
        (Some(text), None) => parse_operator(text)?,
        (None, Some((theta, phi))) => unitary(theta, phi),
        _ => return Err(Error::Usage("decompose needs exactly one of --operator or --unitary".into())),
    };
    if a.rows() != spec.object_dim {
        return Err(Error::Usage(format!(
            "operator is {}x{}, the game object is {}-dimensional",
            a.rows(),
            a.cols(),
            spec.object_dim
        )));
    }
    let basis = &spec.strategy_bases[player];
    let ops: Vec<ComplexMatrix> = basis.iter().map(|b| b.operator.clone()).collect();
    let d = decompose_operator(&a, &ops)?;

    let mut table = Table::new(&["index", "label", "re", "im", "residual"]);
    for (k, (b, c)) in basis.iter().zip(&d.coefficients).enumerate() {
        table.push(vec![(k + 1).into(), b.label.as_str().into(), c.re.into(), c.im.into(), d.residual.into()]);
    }
    Ok(Output {
        text: emit(req, &table)?,
        warnings: Vec::new(),
    })
}

#[derive(Debug, Parser)]
#[command(name = "hgame", version, about = "Payoff matrices and fixed-point kinetics of classical and quantum games")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Print every player's payoff matrix over the product basis
    Build(Flags),
    /// Payoff of each player at a product state
    Eval(Flags),
    /// Reduced payoff matrix of one player against the others' states
    Reduce(Flags),
    /// Run the kinetics to a fixed point
    Iterate(Flags),
    /// Fixed points over a grid of beta values
    Sweep(Flags),
    /// Linear stability of the fixed point reached by iterate
    Stability(Flags),
    /// Coefficients of an operator on a player's strategy basis
    Decompose(Flags),
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["game", "builtin"])))]
pub struct Flags {
    /// Game file (TOML)
    #[arg(long, value_name = "PATH")]
    pub game: Option<PathBuf>,
    /// prisoners-dilemma, hawk-dove, penny-classical or penny-quantum
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
    /// Player index, starting at 1
    #[arg(long, value_name = "K")]
    pub player: Option<usize>,
    /// Inverse temperature, a number or `inf`
    #[arg(long, value_name = "B")]
    pub beta: Option<Beta>,
    /// start:stop:step (inclusive) or a comma list; `inf` allowed
    #[arg(long, value_name = "GRID")]
    pub betas: Option<String>,
    /// Probabilities per player, players separated by `;` (default uniform)
    #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
    pub init: Option<String>,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 100_000)]
    pub max_sweeps: usize,
    /// Sequential or parallel update within a sweep
    #[arg(long, value_enum, default_value_t = Order::Seq)]
    pub order: Order,
    /// Player order for sequential sweeps, e.g. `2,1`
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    pub update_order: Option<Vec<usize>>,
    /// Emit every sweep instead of only the final state
    #[arg(long)]
    pub trace: bool,
    /// Start each beta of a sweep from the previous fixed point
    #[arg(long)]
    pub warm_start: bool,
    #[arg(long, default_value_t = 1e-6)]
    pub fd_step: f64,
    /// Operator to decompose, as a TOML matrix of [re, im] pairs
    #[arg(long, value_name = "MATRIX")]
    pub operator: Option<String>,
    /// Decompose the unitary with angles THETA,PHI
    #[arg(long, value_name = "THETA,PHI", value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
    pub unitary: Option<Vec<f64>>,
    /// Write output here instead of stdout
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

impl Cli {
    /// The request to run and where to write its output.
    pub fn into_request(self) -> Result<(RunRequest, Option<PathBuf>)> {
        let (command, f) = match self.verb {
            Verb::Build(f) => (Command::Build, f),
            Verb::Eval(f) => (Command::Eval, f),
            Verb::Reduce(f) => (Command::Reduce, f),
            Verb::Iterate(f) => (Command::Iterate, f),
            Verb::Sweep(f) => (Command::Sweep, f),
            Verb::Stability(f) => (Command::Stability, f),
            Verb::Decompose(f) => (Command::Decompose, f),
        };
        let source = match (f.game, f.builtin) {
            (Some(path), None) => GameSource::File(path),
            (None, Some(name)) => GameSource::Builtin(name),
            _ => return Err(Error::Usage("give exactly one of --game or --builtin".into())),
        };
        let unitary = match f.unitary.as_deref() {
            None => None,
            Some(&[theta, phi]) => Some((theta, phi)),
            Some(_) => return Err(Error::Usage("--unitary takes THETA,PHI".into())),
        };
        let request = RunRequest {
            player: f.player,
            beta: f.beta,
            betas: f.betas,
            init: f.init,
            tolerance: f.tol,
            max_sweeps: f.max_sweeps,
            order: f.order,
            update_order: f.update_order,
            trace: f.trace,
            warm_start: f.warm_start,
            fd_step: f.fd_step,
            format: f.format,
            operator: f.operator,
            unitary,
            ..RunRequest::new(command, source)
        };
        Ok((request, f.out))
    }
}

/// Writes command output to `out`, or stdout when absent.
pub fn write_output(text: &str, out: Option<&Path>) -> Result<()> {
    use std::io::Write;
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}
