//! The worked examples: three-player uniform tables, four-player optimal
//! coarse and fine tables, and the two-size counterexample.

use crate::constructive::{construct_individually_stable_uniform, ArrangementReport};
use crate::error::Result;
use crate::model::{FederationScheme, GameConfig, ModelParams, Partition, Profile, TwoSizeGame};
use crate::mse::player_errors;
use crate::stability::FloatProfiles;
use crate::table::{Format, Table};

/// One example table: every listed partition with each player's error.
#[derive(Debug, Clone)]
pub struct ExampleTable {
    pub number: u8,
    pub config: GameConfig,
    pub scheme: FederationScheme,
    pub partitions: Vec<Partition>,
}

impl ExampleTable {
    pub fn title(&self) -> String {
        let counts: Vec<String> = self.config.players.iter().map(u64::to_string).collect();
        format!(
            "Table {}: {} federation, n = ({}), mu_e = {}, sigma_sq = {}",
            self.number,
            self.scheme,
            counts.join(", "),
            self.config.mu_e,
            self.config.sigma_sq
        )
    }

    /// Errors per partition, one vector of per-player errors each.
    pub fn errors(&self) -> Result<Vec<Vec<f64>>> {
        self.partitions
            .iter()
            .map(|p| Ok(player_errors(p, &self.scheme, &self.config)?.errors))
            .collect()
    }

    pub fn render(&self, format: Format) -> Result<String> {
        let m = self.config.num_players();
        let mut headers = vec!["partition".to_string()];
        headers.extend((0..m).map(|j| format!("err_{}", crate::model::player_label(j))));
        let mut table = Table::new(headers);
        for (p, errors) in self.partitions.iter().zip(self.errors()?) {
            let mut row = vec![p.to_string().into()];
            row.extend(errors.into_iter().map(Into::into));
            table.push_cells(row);
        }
        Ok(format!("{}\n{}", self.title(), table.render(format)))
    }
}

fn partitions(texts: &[&str], m: usize) -> Vec<Partition> {
    texts
        .iter()
        .map(|t| Partition::parse(t, m).expect("well-formed example partition"))
        .collect()
}

pub fn example_table(number: u8) -> Option<ExampleTable> {
    let uniform3 = |players: Vec<u64>, rows: &[&str]| ExampleTable {
        number,
        config: GameConfig::new(players, 10.0, 1.0).expect("valid example"),
        scheme: FederationScheme::Uniform,
        partitions: partitions(rows, 3),
    };
    let personalized = |scheme| ExampleTable {
        number,
        config: GameConfig::new(vec![30, 30, 30, 300], 10.0, 1.0).expect("valid example"),
        scheme,
        partitions: partitions(&["{a}|{b}|{c}|{d}", "{a,b,c}|{d}", "{a,b,c,d}"], 4),
    };
    Some(match number {
        1 => uniform3(vec![5, 5, 5], &["{a}|{b}|{c}", "{a,b}|{c}", "{a,b,c}"]),
        2 => uniform3(vec![5, 5, 25], &["{a}|{b}|{c}", "{a,b}|{c}", "{a}|{b,c}", "{a,b,c}"]),
        3 => uniform3(vec![25, 25, 25], &["{a}|{b}|{c}", "{a,b}|{c}", "{a,b,c}"]),
        4 => personalized(FederationScheme::CoarseOptimal),
        5 => personalized(FederationScheme::FineOptimal),
        _ => return None,
    })
}

/// The two-size population whose individually stable arrangement is not
/// core stable.
pub fn counterexample() -> (TwoSizeGame, ModelParams) {
    (
        TwoSizeGame::new(11, 106, 70, 7).expect("valid game"),
        ModelParams::mean_estimation(100.0, 1.0),
    )
}

/// Named errors of the counterexample, in presentation order.
pub fn counterexample_values() -> Result<Vec<(String, f64)>> {
    let (game, params) = counterexample();
    let analyzer = FloatProfiles::float(game, &params, &FederationScheme::Uniform)?;
    let small = |s, l| {
        let p = Profile::new(s, l);
        (format!("err_s({p})"), analyzer.small(p).expect("has smalls"))
    };
    let large = |s, l| {
        let p = Profile::new(s, l);
        (format!("err_l({p})"), analyzer.large(p).expect("has larges"))
    };
    Ok(vec![
        small(70, 3),
        small(70, 0),
        large(70, 3),
        large(0, 1),
        large(70, 4),
        small(68, 4),
        large(68, 4),
    ])
}

pub fn counterexample_report() -> Result<ArrangementReport> {
    let (game, params) = counterexample();
    let arrangement = construct_individually_stable_uniform(&game, &params)?;
    let analyzer = FloatProfiles::float(game, &params, &FederationScheme::Uniform)?;
    ArrangementReport::new(&analyzer, arrangement)
}

pub fn render_counterexample(format: Format) -> Result<String> {
    let (game, params) = counterexample();
    let mut table = Table::new(["quantity", "value"]);
    for (name, value) in counterexample_values()? {
        table.push_cells(vec![name.into(), value.into()]);
    }
    Ok(format!(
        "Two-size counterexample: uniform federation, n_s = {}, n_l = {}, S = {}, L = {}, mu_e = {}, sigma_sq = {}\n{}construct: {}\n",
        game.n_s,
        game.n_l,
        game.small,
        game.large,
        params.mu_e,
        params.sigma_sq,
        table.render(format),
        counterexample_report()?
    ))
}

/// All five tables and the counterexample, separated by blank lines.
pub fn render_all(format: Format) -> Result<String> {
    let mut sections = Vec::new();
    for number in 1..=5 {
        sections.push(example_table(number).expect("tables 1-5 exist").render(format)?);
    }
    sections.push(render_counterexample(format)?);
    Ok(sections.join("\n"))
}
