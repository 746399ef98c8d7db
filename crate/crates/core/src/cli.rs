//! Command-line front end. Every numeric result comes from the library
//! modules; this file only parses input and formats output.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::constructive::{
    construct_individually_stable_uniform, construct_strict_core_coarse, regime_predicates, ArrangementReport,
};
use crate::error::GameError;
use crate::model::{
    enumerate_partitions, player_label, Coalition, FederationScheme, GameConfig, LinRegSpec, ModelParams, Partition,
    TwoSizeGame,
};
use crate::montecarlo::{
    empirical_mse_linreg, empirical_mse_mean, DistributionSpec, EpsilonRule, SampleFamily, ThetaFamily, TrialPlan,
};
use crate::mse::{ErrorModel, ExactModel};
use crate::reproduce;
use crate::scalar::Scalar;
use crate::stability::{CheckOptions, Checker, ComparisonMode, FloatProfiles, Notion};
use crate::table::{Format, Table};
use crate::weights;

/// Largest population whose every partition the `errors` command lists.
const ERRORS_TABLE_CAP: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "fedgame", version, about = "Expected errors and coalition stability for model-sharing games")]
pub struct Cli {
    /// Seed for Monte Carlo runs.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Monte Carlo trials per estimate.
    #[arg(long, global = true)]
    trials: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,
    /// Evaluate errors and compare preferences in exact rational arithmetic.
    #[arg(long, global = true)]
    exact: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Plain => Format::Plain,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-player expected errors for one partition or for every partition.
    Errors {
        #[command(flatten)]
        game: GameArgs,
        /// Partition such as {a,b}|{c}; omit to tabulate every partition.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Optimal coarse and fine weights and the errors they achieve.
    Weights {
        #[command(flatten)]
        game: GameArgs,
        /// Coalition to optimize within (default: everyone).
        #[arg(long)]
        coalition: Option<String>,
    },
    /// Stability verdicts for a partition, or every stable partition.
    Stability {
        #[command(flatten)]
        game: GameArgs,
        /// Partition such as {a,b}|{c}; omit to list every stable partition.
        #[arg(long)]
        partition: Option<String>,
        #[arg(long, value_enum, default_value_t = NotionArg::All)]
        notion: NotionArg,
        /// Do not count going alone as an individual deviation.
        #[arg(long)]
        no_singleton_deviation: bool,
    },
    /// Constructive arrangements for a two-size population.
    Construct {
        /// Individually stable arrangement under uniform federation.
        #[arg(long, conflicts_with = "coarse")]
        uniform: bool,
        /// Strictly core stable arrangement under optimal coarse federation.
        #[arg(long)]
        coarse: bool,
        #[command(flatten)]
        two_size: TwoSizeArgs,
    },
    /// Monte Carlo estimates next to the closed-form errors.
    Verify {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        coalition: Option<String>,
        #[arg(long, value_enum)]
        theta_family: Option<ThetaArg>,
        #[arg(long)]
        theta_mean: Option<f64>,
        #[arg(long, value_enum)]
        epsilon_rule: Option<EpsilonArg>,
        #[arg(long, value_enum)]
        sample_family: Option<SampleArg>,
    },
    /// Regenerate the worked example tables and the two-size counterexample.
    Reproduce {
        /// Table number 1-5; all tables and the counterexample by default.
        #[arg(long, conflicts_with = "all")]
        table: Option<u8>,
        #[arg(long)]
        all: bool,
        /// Only the two-size counterexample.
        #[arg(long, conflicts_with_all = ["table", "all"])]
        counterexample: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NotionArg {
    Core,
    Strict,
    Individual,
    All,
}

impl NotionArg {
    fn notions(self) -> Vec<Notion> {
        match self {
            NotionArg::Core => vec![Notion::Core],
            NotionArg::Strict => vec![Notion::StrictCore],
            NotionArg::Individual => vec![Notion::Individual],
            NotionArg::All => vec![Notion::Core, Notion::StrictCore, Notion::Individual],
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ThetaArg {
    Gaussian,
    Uniform,
    LognormalCentered,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EpsilonArg {
    Constant,
    Gamma,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SampleArg {
    Gaussian,
    Uniform,
}

/// A population from a config document and/or inline flags.
#[derive(Debug, Args)]
struct GameArgs {
    /// JSON config document.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated sample counts, e.g. 5,5,25.
    #[arg(long, value_delimiter = ',')]
    players: Option<Vec<u64>>,
    /// Mean noise variance of a player's samples.
    #[arg(long)]
    mue: Option<f64>,
    /// Variance of the true parameters across players.
    #[arg(long)]
    sigma2: Option<f64>,
    /// local, uniform, coarse, coarse-optimal, fine or fine-optimal.
    #[arg(long)]
    scheme: Option<String>,
    /// Comma-separated per-player coarse weights.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
    /// Linear-regression dimension.
    #[arg(long)]
    d: Option<usize>,
    /// Total variance of the regression coefficients.
    #[arg(long)]
    sigma_bias_sq: Option<f64>,
}

#[derive(Debug, Args)]
struct TwoSizeArgs {
    /// JSON config document with a two_size section.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Sample count of each small player.
    #[arg(long)]
    ns: Option<u64>,
    /// Sample count of each large player.
    #[arg(long)]
    nl: Option<u64>,
    /// Number of small players.
    #[arg(long = "S")]
    small: Option<usize>,
    /// Number of large players.
    #[arg(long = "L")]
    large: Option<usize>,
    /// Mean noise variance of a player's samples.
    #[arg(long)]
    mue: Option<f64>,
    /// Variance of the true parameters across players.
    #[arg(long)]
    sigma2: Option<f64>,
}

/// The JSON run configuration.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfigDocument {
    pub mu_e: Option<f64>,
    pub sigma_sq: Option<f64>,
    #[serde(default)]
    pub players: Vec<u64>,
    pub scheme: Option<SchemeDocument>,
    pub linreg: Option<LinRegDocument>,
    pub two_size: Option<TwoSizeDocument>,
    pub mc: Option<McDocument>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum SchemeDocument {
    Name(String),
    Weighted(WeightedScheme),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightedScheme {
    pub name: String,
    pub weights: Option<Vec<f64>>,
    pub rows: Option<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinRegDocument {
    pub d: usize,
    pub sigma_bias_sq: Option<f64>,
    /// Per-dimension coefficient variances under identity input covariance.
    pub variances: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoSizeDocument {
    pub n_s: u64,
    pub n_l: u64,
    #[serde(rename = "S")]
    pub small: usize,
    #[serde(rename = "L")]
    pub large: usize,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct McDocument {
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub theta_family: Option<ThetaFamily>,
    pub theta_mean: Option<f64>,
    pub epsilon_rule: Option<EpsilonRule>,
    pub sample_family: Option<SampleFamily>,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Self {
        Failure {
            code: if e.is_cap_exceeded() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn load_document(path: &Option<PathBuf>) -> CliResult<RunConfigDocument> {
    let Some(path) = path else {
        return Ok(RunConfigDocument::default());
    };
    let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn parse_scheme(name: &str, weights: Option<Vec<f64>>, rows: Option<Vec<Vec<f64>>>) -> CliResult<FederationScheme> {
    let scheme = match name {
        "local" => FederationScheme::Local,
        "uniform" => FederationScheme::Uniform,
        "coarse-optimal" => FederationScheme::CoarseOptimal,
        "fine-optimal" => FederationScheme::FineOptimal,
        "coarse" => FederationScheme::Coarse(weights.ok_or_else(|| invalid("scheme coarse needs weights"))?),
        "fine" => FederationScheme::Fine(rows.ok_or_else(|| invalid("scheme fine needs rows"))?),
        other => return Err(invalid(format!("unknown scheme {other:?}"))),
    };
    Ok(scheme)
}

struct Game {
    config: GameConfig,
    scheme: FederationScheme,
    doc: RunConfigDocument,
}

impl GameArgs {
    fn resolve(&self) -> CliResult<Game> {
        let doc = load_document(&self.config)?;
        let players = self.players.clone().unwrap_or_else(|| doc.players.clone());
        let mu_e = self.mue.or(doc.mu_e).ok_or_else(|| invalid("mu_e is required (--mue or config)"))?;
        let sigma_sq = self.sigma2.or(doc.sigma_sq).ok_or_else(|| invalid("sigma_sq is required (--sigma2 or config)"))?;
        let mut config = GameConfig::new(players, mu_e, sigma_sq)?;
        let linreg = match (self.d, &doc.linreg) {
            (Some(d), _) => Some(LinRegSpec {
                d,
                sigma_bias_sq: self.sigma_bias_sq.unwrap_or(sigma_sq),
            }),
            (None, Some(l)) => {
                let sigma_bias_sq = match (l.sigma_bias_sq, &l.variances) {
                    (Some(s), _) => s,
                    (None, Some(v)) => v.iter().sum(),
                    (None, None) => return Err(invalid("linreg needs sigma_bias_sq or variances")),
                };
                Some(LinRegSpec { d: l.d, sigma_bias_sq })
            }
            (None, None) => None,
        };
        if let Some(spec) = linreg {
            config = config.with_linreg(spec)?;
        }
        let scheme = match (&self.scheme, &doc.scheme) {
            (Some(name), _) => parse_scheme(name, self.weights.clone(), None)?,
            (None, Some(SchemeDocument::Name(name))) => parse_scheme(name, self.weights.clone(), None)?,
            (None, Some(SchemeDocument::Weighted(w))) => {
                parse_scheme(&w.name, self.weights.clone().or(w.weights.clone()), w.rows.clone())?
            }
            (None, None) => FederationScheme::Uniform,
        };
        Ok(Game { config, scheme, doc })
    }
}

impl TwoSizeArgs {
    fn resolve(&self) -> CliResult<(TwoSizeGame, ModelParams)> {
        let doc = load_document(&self.config)?;
        let ts = doc.two_size.as_ref();
        let need = |flag: &str| invalid(format!("--{flag} is required (or two_size in the config)"));
        let game = TwoSizeGame::new(
            self.ns.or(ts.map(|t| t.n_s)).ok_or_else(|| need("ns"))?,
            self.nl.or(ts.map(|t| t.n_l)).ok_or_else(|| need("nl"))?,
            self.small.or(ts.map(|t| t.small)).ok_or_else(|| need("S"))?,
            self.large.or(ts.map(|t| t.large)).ok_or_else(|| need("L"))?,
        )?;
        let params = ModelParams::mean_estimation(
            self.mue.or(doc.mu_e).ok_or_else(|| need("mue"))?,
            self.sigma2.or(doc.sigma_sq).ok_or_else(|| need("sigma2"))?,
        );
        params.validate()?;
        Ok((game, params))
    }
}

fn player_headers(first: &str, m: usize) -> Vec<String> {
    let mut headers = vec![first.to_string()];
    headers.extend((0..m).map(|j| format!("err_{}", player_label(j))));
    headers
}

fn errors_for(config: &GameConfig, p: &Partition, scheme: &FederationScheme, exact: bool) -> CliResult<Vec<f64>> {
    Ok(if exact {
        ExactModel::from_config(config)?
            .player_errors(p, scheme)?
            .iter()
            .map(Scalar::to_float)
            .collect()
    } else {
        ErrorModel::<f64>::from_config(config)?.player_errors(p, scheme)?
    })
}

fn cmd_errors(cli: &Cli, game: &GameArgs, partition: &Option<String>) -> CliResult<String> {
    let Game { config, scheme, .. } = game.resolve()?;
    let m = config.num_players();
    let partitions = match partition {
        Some(text) => vec![Partition::parse(text, m)?],
        None => {
            if m > ERRORS_TABLE_CAP {
                return Err(GameError::CapExceeded {
                    what: "errors table over all partitions",
                    requested: m,
                    cap: ERRORS_TABLE_CAP,
                }
                .into());
            }
            enumerate_partitions(m)?.collect()
        }
    };
    let mut table = Table::new(player_headers("partition", m));
    for p in &partitions {
        let mut row = vec![p.to_string().into()];
        row.extend(errors_for(&config, p, &scheme, cli.exact)?.into_iter().map(Into::into));
        table.push_cells(row);
    }
    Ok(format!("scheme: {scheme}\n{}", table.render(cli.format.into())))
}

fn coalition_or_grand(text: &Option<String>, m: usize) -> CliResult<Coalition> {
    Ok(match text {
        Some(t) => Coalition::parse(t, m)?,
        None => Coalition::grand(m),
    })
}

fn cmd_weights(cli: &Cli, game: &GameArgs, coalition: &Option<String>) -> CliResult<String> {
    let Game { config, .. } = game.resolve()?;
    let c = coalition_or_grand(coalition, config.num_players())?;
    let format: Format = cli.format.into();
    let mut summary = Table::new(["player", "w_opt", "err_coarse_opt", "err_fine_opt"]);
    let mut headers = vec!["player".to_string()];
    headers.extend(c.members().iter().map(|&i| format!("v_{}", player_label(i))));
    let mut rows = Table::new(headers);
    for &j in c.members() {
        let (w, coarse, fine, v) = if cli.exact {
            let model = ExactModel::from_config(&config)?;
            (
                model.optimal_w(j, &c)?.to_float(),
                model.optimal_coarse(j, &c)?.to_float(),
                model.optimal_fine(j, &c)?.to_float(),
                model.optimal_v(j, &c)?.iter().map(Scalar::to_float).collect(),
            )
        } else {
            (
                weights::optimal_w(j, &c, &config)?,
                weights::optimal_coarse_mse(j, &c, &config)?,
                weights::optimal_fine_mse(j, &c, &config)?,
                weights::optimal_v(j, &c, &config)?.row,
            )
        };
        summary.push_cells(vec![player_label(j).into(), w.into(), coarse.into(), fine.into()]);
        let mut row = vec![player_label(j).into()];
        row.extend(v.into_iter().map(Into::into));
        rows.push_cells(row);
    }
    Ok(format!(
        "coalition: {c}\n{}\noptimal fine weights\n{}",
        summary.render(format),
        rows.render(format)
    ))
}

fn cmd_stability(
    cli: &Cli,
    game: &GameArgs,
    partition: &Option<String>,
    notion: NotionArg,
    no_singleton_deviation: bool,
) -> CliResult<String> {
    let Game { config, scheme, .. } = game.resolve()?;
    let options = CheckOptions {
        mode: if cli.exact {
            ComparisonMode::ExactRational
        } else {
            ComparisonMode::FloatEpsilon
        },
        singleton_deviation: !no_singleton_deviation,
        ..Default::default()
    };
    let checker = Checker::new(&config, &scheme, options)?;
    let mut out = String::new();
    match partition {
        Some(text) => {
            let p = Partition::parse(text, config.num_players())?;
            let notions = notion.notions();
            for n in notions.iter().copied() {
                let verdict = checker.check(&p, n)?;
                if notions.len() == 1 {
                    writeln!(out, "{verdict}").unwrap();
                } else {
                    writeln!(out, "{n}: {verdict}").unwrap();
                }
            }
        }
        None => {
            for n in notion.notions() {
                let stable = checker.stable_partitions(n)?;
                let listed: Vec<String> = stable.iter().map(Partition::to_string).collect();
                writeln!(out, "{n} stable ({}): {}", listed.len(), listed.join(" ")).unwrap();
            }
        }
    }
    Ok(out)
}

fn cmd_construct(uniform: bool, coarse: bool, args: &TwoSizeArgs) -> CliResult<String> {
    let (game, params) = args.resolve()?;
    let mut out = String::new();
    if let Ok(regime) = regime_predicates(&game, &params) {
        writeln!(out, "regime: {}", regime.regime).unwrap();
        for claim in &regime.claims {
            writeln!(out, "claim: {claim}").unwrap();
        }
    }
    if coarse {
        let arrangement = construct_strict_core_coarse(&game, &params)?;
        let analyzer = FloatProfiles::float(game, &params, &FederationScheme::CoarseOptimal)?;
        writeln!(out, "coarse-optimal: {}", ArrangementReport::new(&analyzer, arrangement)?).unwrap();
    }
    if uniform || !coarse {
        let arrangement = construct_individually_stable_uniform(&game, &params)?;
        let analyzer = FloatProfiles::float(game, &params, &FederationScheme::Uniform)?;
        writeln!(out, "{}", ArrangementReport::new(&analyzer, arrangement)?).unwrap();
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    cli: &Cli,
    game: &GameArgs,
    coalition: &Option<String>,
    theta: Option<ThetaArg>,
    theta_mean: Option<f64>,
    epsilon: Option<EpsilonArg>,
    sample: Option<SampleArg>,
) -> CliResult<String> {
    let Game { config, scheme, doc } = game.resolve()?;
    let c = coalition_or_grand(coalition, config.num_players())?;
    let mc = doc.mc.clone().unwrap_or_default();
    let plan = TrialPlan::new(
        cli.trials.or(mc.trials).unwrap_or(100_000),
        cli.seed.or(mc.seed).unwrap_or(0),
    )?;
    let dist = DistributionSpec {
        theta_family: match theta {
            Some(ThetaArg::Gaussian) => ThetaFamily::Gaussian,
            Some(ThetaArg::Uniform) => ThetaFamily::Uniform,
            Some(ThetaArg::LognormalCentered) => ThetaFamily::LognormalCentered,
            None => mc.theta_family.unwrap_or_default(),
        },
        theta_mean: theta_mean.or(mc.theta_mean).unwrap_or(0.0),
        epsilon_rule: match epsilon {
            Some(EpsilonArg::Constant) => EpsilonRule::Constant,
            Some(EpsilonArg::Gamma) => EpsilonRule::Gamma,
            None => mc.epsilon_rule.unwrap_or_default(),
        },
        sample_family: match sample {
            Some(SampleArg::Gaussian) => SampleFamily::Gaussian,
            Some(SampleArg::Uniform) => SampleFamily::Uniform,
            None => mc.sample_family.unwrap_or_default(),
        },
        coefficient_variances: doc.linreg.as_ref().and_then(|l| l.variances.clone()),
    };
    let mut table = Table::new(["player", "closed_form", "empirical", "std_error", "z", "within_3se", "resamples"]);
    for &j in c.members() {
        let closed = match &scheme {
            FederationScheme::CoarseOptimal => weights::optimal_coarse_mse(j, &c, &config)?,
            FederationScheme::FineOptimal => weights::optimal_fine_mse(j, &c, &config)?,
            other => ErrorModel::<f64>::from_config(&config)?.player_errors(&single_partition(&c, config.num_players()), other)?[j],
        };
        let explicit = weights::resolve_for(j, &c, &scheme, &config)?;
        let estimate = if config.linreg.is_some() {
            empirical_mse_linreg(&config, &c, &explicit, j, &dist, &plan)?
        } else {
            empirical_mse_mean(&config, &c, &explicit, j, &dist, &plan)?
        };
        let z = estimate.z_score(closed);
        table.push(vec![
            Some(player_label(j).into()),
            Some(closed.into()),
            Some(estimate.mean.into()),
            Some(estimate.std_error.into()),
            Some(z.into()),
            Some(if z <= 3.0 { "yes" } else { "no" }.into()),
            (estimate.resamples > 0).then(|| estimate.resamples.to_string().into()),
        ]);
    }
    Ok(format!(
        "coalition: {c}; scheme: {scheme}; trials: {}; seed: {}\n{}",
        plan.trials,
        plan.seed,
        table.render(cli.format.into())
    ))
}

/// `c` as one coalition with everyone else alone.
fn single_partition(c: &Coalition, m: usize) -> Partition {
    let mut coalitions = vec![c.clone()];
    coalitions.extend((0..m).filter(|i| !c.contains(*i)).map(Coalition::singleton));
    Partition::new(coalitions, m).expect("cover of all players")
}

fn cmd_reproduce(cli: &Cli, table: Option<u8>, counterexample: bool) -> CliResult<String> {
    let format: Format = cli.format.into();
    if counterexample {
        return Ok(reproduce::render_counterexample(format)?);
    }
    match table {
        Some(n) => {
            let t = reproduce::example_table(n).ok_or_else(|| invalid(format!("no table {n}; expected 1-5")))?;
            Ok(t.render(format)?)
        }
        None => Ok(reproduce::render_all(format)?),
    }
}

fn dispatch(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Errors { game, partition } => cmd_errors(cli, game, partition),
        Command::Weights { game, coalition } => cmd_weights(cli, game, coalition),
        Command::Stability {
            game,
            partition,
            notion,
            no_singleton_deviation,
        } => cmd_stability(cli, game, partition, *notion, *no_singleton_deviation),
        Command::Construct {
            uniform,
            coarse,
            two_size,
        } => cmd_construct(*uniform, *coarse, two_size),
        Command::Verify {
            game,
            coalition,
            theta_family,
            theta_mean,
            epsilon_rule,
            sample_family,
        } => cmd_verify(cli, game, coalition, *theta_family, *theta_mean, *epsilon_rule, *sample_family),
        Command::Reproduce {
            table,
            all: _,
            counterexample,
        } => cmd_reproduce(cli, *table, *counterexample),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code: 0 on success, 1 on invalid input, 2 when a size cap is exceeded.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}
