//! `pegame` command line: single runs, strategy comparisons and the two
//! reproduction tables.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use pegame_core::sim::{compare_strategies, run_game_timed, GameResult, Strategy, Termination};

use crate::batch::run_all;
use crate::clock::InstantClock;
use crate::config::{DisturbanceSection, RunConfig, ScenarioId, StrategyName, PRESET_ECCENTRICITIES};
use crate::output::{write_run, Metrics};
use crate::reference::{check_case, CaseValues, CW_BASELINE, TH_ANALYTICAL, TH_NUMERICAL};
use crate::Error;

pub const EXIT_CAPTURE: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_NO_CAPTURE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "pegame", version, about = "Linear-quadratic pursuit-evasion games about Keplerian reference orbits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Play one game and write its trajectory and metrics.
    Run {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        out: OutArgs,
        /// Print the resolved configuration as TOML and exit.
        #[arg(long)]
        print_config: bool,
    },
    /// Analytical strategy on all six preset cases, checked against the reference values.
    Table4 {
        #[command(flatten)]
        opts: TableArgs,
        /// Also run the numerical strategy.
        #[arg(long)]
        numerical: bool,
        #[arg(long, default_value_t = pegame_core::sim::DEFAULT_ORACLE_STEPS)]
        oracle_steps: usize,
        /// Gain refresh cadence of the numerical runs, in steps.
        #[arg(long, default_value_t = 1)]
        refresh_every: usize,
    },
    /// Analytical strategy against the circular-orbit baseline on the six preset cases.
    Table5 {
        #[command(flatten)]
        opts: TableArgs,
    },
    /// Run one case under several strategies and compare trajectories and gain timing.
    Compare {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        out: OutArgs,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "th,numerical")]
        strategies: Vec<StrategyName>,
    },
    /// Pursue a non-manoeuvring target with the one-sided gain.
    Defense {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CaseArgs {
    /// TOML configuration file; flags below override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub scenario: Option<ScenarioId>,
    /// Reference-orbit eccentricity.
    #[arg(long)]
    pub e: Option<f64>,
    #[arg(long, value_enum)]
    pub strategy: Option<StrategyName>,
    /// Integration step h_f (rad).
    #[arg(long)]
    pub step: Option<f64>,
    /// Capture radius d_c (m).
    #[arg(long)]
    pub capture_radius: Option<f64>,
    /// Disturbance seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Disturbance component bound (m/rad²); enables disturbances.
    #[arg(long)]
    pub disturbance_bound: Option<f64>,
    /// Reject eccentricities outside the recommended bands.
    #[arg(long)]
    pub strict_eccentricity: bool,
    /// Backward steps per gain for the numerical strategy.
    #[arg(long)]
    pub oracle_steps: Option<usize>,
    #[arg(long)]
    pub refresh_every: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct OutArgs {
    /// Output directory.
    #[arg(long, env = "PEGAME_OUT_DIR", default_value = "pegame-out")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub step: Option<f64>,
    /// Write per-case trajectories and metrics here.
    #[arg(long, env = "PEGAME_OUT_DIR")]
    pub out: Option<PathBuf>,
}

impl CaseArgs {
    pub fn resolve(&self) -> Result<RunConfig, Error> {
        let mut cfg = match &self.config {
            Some(path) => {
                let mut cfg = RunConfig::load(path)?;
                if let Some(id) = self.scenario {
                    let e = self.e.unwrap_or(cfg.scenario.e);
                    cfg.scenario = crate::config::ScenarioSection::preset(id, e);
                }
                cfg
            }
            None => RunConfig::preset(self.scenario.unwrap_or(ScenarioId::I), 0.2, StrategyName::Th),
        };
        if let Some(e) = self.e {
            cfg.scenario.e = e;
            if self.config.is_none() {
                cfg.scenario.name = Some(format!("Scenario {}, e = {e}", self.scenario.unwrap_or(ScenarioId::I)));
            }
        }
        if let Some(s) = self.strategy {
            cfg.game.strategy = s;
        }
        if let Some(h) = self.step {
            cfg.game.h_f = h;
        }
        if let Some(d) = self.capture_radius {
            cfg.game.d_c = d;
        }
        if let Some(n) = self.oracle_steps {
            cfg.game.oracle_steps = n;
        }
        if let Some(k) = self.refresh_every {
            cfg.game.refresh_every = k;
        }
        cfg.scenario.strict_eccentricity |= self.strict_eccentricity;
        match (self.disturbance_bound, cfg.disturbance.as_mut()) {
            (Some(bound), Some(d)) => {
                d.bound = bound;
                d.seed = self.seed.unwrap_or(d.seed);
            }
            (Some(bound), None) => {
                cfg.disturbance =
                    Some(DisturbanceSection { seed: self.seed.unwrap_or(0), bound, resample_each_step: false })
            }
            (None, Some(d)) => d.seed = self.seed.unwrap_or(d.seed),
            (None, None) => {}
        }
        Ok(cfg)
    }
}

fn file_stem(cfg: &RunConfig, strategy: Strategy) -> String {
    let e = format!("{}", cfg.scenario.e).replace('.', "p");
    format!("p{:.0}_e{e}_{}", cfg.scenario.p / 1e3, strategy.name())
}

fn termination_label(t: &Termination) -> String {
    match t {
        Termination::Captured => "captured".into(),
        Termination::Receding => "miss (range opening)".into(),
        Termination::MaxSteps => "miss (step limit)".into(),
        Termination::GainBreakdown { condition } => format!("miss (gain breakdown, condition {condition:.2e})"),
    }
}

fn exit_for(r: &GameResult) -> u8 {
    if r.captured {
        EXIT_CAPTURE
    } else {
        EXIT_NO_CAPTURE
    }
}

fn report_run<W: Write>(w: &mut W, r: &GameResult, seed: Option<u64>) -> Result<(), Error> {
    let io = |e| Error::Io("stdout".into(), e);
    writeln!(w, "{}", serde_json::to_string_pretty(&Metrics::new(r, seed))?).map_err(io)?;
    writeln!(w, "termination: {}", termination_label(&r.termination)).map_err(io)?;
    Ok(())
}

fn single_run<W: Write>(w: &mut W, cfg: &RunConfig, out: &Path) -> Result<u8, Error> {
    let game = cfg.game_config()?;
    if game.orbit.advisory() {
        eprintln!("warning: eccentricity {} is outside the recommended bands", game.orbit.e());
    }
    let r = run_game_timed(&game, &InstantClock::new())?;
    let (csv, json) = write_run(out, &file_stem(cfg, game.strategy), &r, cfg.seed())?;
    report_run(w, &r, cfg.seed())?;
    eprintln!("wrote {} and {}", csv.display(), json.display());
    Ok(exit_for(&r))
}

fn preset_cases(strategy: StrategyName, step: Option<f64>) -> Vec<RunConfig> {
    let mut out = Vec::new();
    for id in [ScenarioId::I, ScenarioId::II] {
        for e in PRESET_ECCENTRICITIES {
            let mut cfg = RunConfig::preset(id, e, strategy);
            if let Some(h) = step {
                cfg.game.h_f = h;
            }
            out.push(cfg);
        }
    }
    out
}

/// One row of a reproduction table.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub label: String,
    pub result: Result<GameResult, String>,
    pub reference: CaseValues,
    pub pass: bool,
    pub notes: Vec<String>,
}

fn evaluate(cfgs: &[RunConfig], references: &[CaseValues; 6], out: Option<&Path>) -> Result<Vec<TableRow>, Error> {
    let games = cfgs.iter().map(|c| c.game_config()).collect::<Result<Vec<_>, _>>()?;
    let results = run_all(&games);
    let mut rows = Vec::new();
    for ((cfg, r), reference) in cfgs.iter().zip(results).zip(references) {
        let label = format!("Scenario {}, e = {}", reference.scenario, reference.e);
        let row = match r {
            Ok(r) => {
                if let Some(dir) = out {
                    write_run(dir, &file_stem(cfg, r.strategy), &r, None)?;
                }
                let c = check_case(reference, r.captured, r.delta_f, r.cost, r.min_distance);
                TableRow { label, pass: c.pass, notes: c.notes, result: Ok(r), reference: *reference }
            }
            Err(e) => TableRow {
                label,
                pass: false,
                notes: vec![e.to_string()],
                result: Err(e.to_string()),
                reference: *reference,
            },
        };
        rows.push(row);
    }
    Ok(rows)
}

fn opt(v: Option<f64>, digits: usize) -> String {
    v.map_or_else(|| "--".to_string(), |x| format!("{x:.digits$}"))
}

fn print_rows<W: Write>(w: &mut W, title: &str, rows: &[TableRow]) -> std::io::Result<()> {
    writeln!(w, "{title}")?;
    writeln!(
        w,
        "{:<22} {:<8} {:>10} {:>9} {:>10} {:>9} {:>10} {:>9}  check",
        "case", "outcome", "dist/m", "ref", "delta_f", "ref", "J", "ref"
    )?;
    for row in rows {
        let (outcome, dist, df, j) = match &row.result {
            Ok(r) => {
                let dist = if r.captured { r.final_distance } else { r.min_distance };
                let hit = r.captured.then_some(());
                (
                    if r.captured { "capture" } else { "miss" },
                    format!("{dist:.4}"),
                    opt(hit.map(|_| r.delta_f), 5),
                    opt(hit.map(|_| r.cost), 4),
                )
            }
            Err(_) => ("error", "--".into(), "--".into(), "--".into()),
        };
        let verdict = if row.pass { "PASS".to_string() } else { format!("FAIL ({})", row.notes.join("; ")) };
        writeln!(
            w,
            "{:<22} {:<8} {:>10} {:>9.4} {:>10} {:>9} {:>10} {:>9}  {verdict}",
            row.label,
            outcome,
            dist,
            row.reference.distance,
            df,
            opt(row.reference.delta_f, 5),
            j,
            opt(row.reference.cost, 4),
        )?;
    }
    Ok(())
}

/// Runs the analytical (and optionally numerical) strategy on the six cases.
pub fn table4(
    step: Option<f64>,
    numerical: Option<(usize, usize)>,
    out: Option<&Path>,
) -> Result<Vec<(String, Vec<TableRow>)>, Error> {
    let mut tables =
        vec![("analytical".to_string(), evaluate(&preset_cases(StrategyName::Th, step), &TH_ANALYTICAL, out)?)];
    if let Some((oracle_steps, refresh_every)) = numerical {
        let mut cfgs = preset_cases(StrategyName::Numerical, step);
        for c in &mut cfgs {
            c.game.oracle_steps = oracle_steps;
            c.game.refresh_every = refresh_every;
        }
        tables.push(("numerical".to_string(), evaluate(&cfgs, &TH_NUMERICAL, out)?));
    }
    Ok(tables)
}

/// Runs the analytical strategy and the circular-orbit baseline on the six cases.
pub fn table5(step: Option<f64>, out: Option<&Path>) -> Result<Vec<(String, Vec<TableRow>)>, Error> {
    Ok(vec![
        ("TH-based".to_string(), evaluate(&preset_cases(StrategyName::Th, step), &TH_ANALYTICAL, out)?),
        ("CW-based".to_string(), evaluate(&preset_cases(StrategyName::Cw, step), &CW_BASELINE, out)?),
    ])
}

/// Baseline misses should open wider as eccentricity grows within a scenario.
pub fn miss_distances_grow(rows: &[TableRow]) -> bool {
    rows.chunks(3).all(|chunk| {
        let misses: Vec<f64> = chunk
            .iter()
            .filter_map(|r| r.result.as_ref().ok().filter(|r| !r.captured).map(|r| r.min_distance))
            .collect();
        misses.windows(2).all(|w| w[0] < w[1])
    })
}

fn run_table<W: Write>(
    w: &mut W,
    tables: &[(String, Vec<TableRow>)],
    extra_check: Option<(&str, bool)>,
) -> Result<u8, Error> {
    let io = |e| Error::Io("stdout".into(), e);
    let mut all = true;
    for (title, rows) in tables {
        print_rows(w, title, rows).map_err(io)?;
        writeln!(w).map_err(io)?;
        all &= rows.iter().all(|r| r.pass);
    }
    if let Some((label, ok)) = extra_check {
        writeln!(w, "{label}: {}", if ok { "PASS" } else { "FAIL" }).map_err(io)?;
        all &= ok;
    }
    Ok(if all { EXIT_CAPTURE } else { EXIT_NO_CAPTURE })
}

fn compare<W: Write>(w: &mut W, cfg: &RunConfig, strategies: &[StrategyName], out: &Path) -> Result<u8, Error> {
    let io = |e| Error::Io("stdout".into(), e);
    let game = cfg.game_config()?;
    let list: Vec<Strategy> = strategies.iter().map(|s| s.to_strategy(cfg.game.oracle_steps)).collect();
    let c = compare_strategies(&game, &list, &InstantClock::new())?;
    let mut code = EXIT_CAPTURE;
    for (s, r) in &c.runs {
        match r {
            Ok(r) => {
                write_run(out, &file_stem(cfg, *s), r, cfg.seed())?;
                writeln!(
                    w,
                    "{:<10} {:<40} delta_f {:.5}  J {:.5}  d {:.4}  gain evals {}  mean gain time {:.3e} s",
                    s.name(),
                    termination_label(&r.termination),
                    r.delta_f,
                    r.cost,
                    if r.captured { r.final_distance } else { r.min_distance },
                    r.gain_evaluations,
                    r.gain_seconds / r.gain_evaluations.max(1) as f64
                )
                .map_err(io)?;
                if !r.captured {
                    code = EXIT_NO_CAPTURE;
                }
            }
            Err(e) => {
                writeln!(w, "{:<10} error: {e}", s.name()).map_err(io)?;
                code = EXIT_ERROR;
            }
        }
    }
    for p in &c.pairs {
        writeln!(
            w,
            "{} vs {}: max position divergence {:.3e} m, gain time ratio {:.3e}",
            p.a.name(),
            p.b.name(),
            p.max_position_divergence,
            p.gain_time_ratio
        )
        .map_err(io)?;
    }
    Ok(code)
}

/// Executes a parsed command, writing reports to `w`; returns the exit code.
pub fn execute<W: Write>(cli: &Cli, w: &mut W) -> Result<u8, Error> {
    match &cli.command {
        Command::Run { case, out, print_config } => {
            let cfg = case.resolve()?;
            if *print_config {
                write!(w, "{}", cfg.to_toml()).map_err(|e| Error::Io("stdout".into(), e))?;
                return Ok(EXIT_CAPTURE);
            }
            single_run(w, &cfg, &out.out)
        }
        Command::Defense { case, out } => {
            let mut cfg = case.resolve()?;
            cfg.game.strategy = StrategyName::Defense;
            single_run(w, &cfg, &out.out)
        }
        Command::Compare { case, out, strategies } => compare(w, &case.resolve()?, strategies, &out.out),
        Command::Table4 { opts, numerical, oracle_steps, refresh_every } => {
            let tables = table4(opts.step, numerical.then_some((*oracle_steps, *refresh_every)), opts.out.as_deref())?;
            run_table(w, &tables, None)
        }
        Command::Table5 { opts } => {
            let tables = table5(opts.step, opts.out.as_deref())?;
            let grow = miss_distances_grow(&tables[1].1);
            run_table(w, &tables, Some(("baseline miss distance grows with e", grow)))
        }
    }
}

/// Entry point shared by the binary: parse, execute, map errors to exit code 1.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_CAPTURE };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(&cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}
