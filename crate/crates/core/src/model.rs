//! Domain types shared by every analysis: the population, coalitions,
//! partitions, federation schemes and the symmetric two-size population.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GameError, Result};

/// Largest population for which partitions are enumerated (Bell(13) ≈ 27.6M).
pub const PARTITION_CAP: usize = 13;
/// Largest population for which all non-empty coalitions are enumerated.
pub const COALITION_CAP: usize = 20;

/// Linear-regression variant of the game with zero-mean normal inputs.
///
/// The per-dimension parameter variances only ever appear through the
/// product-sum `Σ_d E[(x^d)²]·σ²_d`, stored here as `sigma_bias_sq`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinRegSpec {
    pub d: usize,
    pub sigma_bias_sq: f64,
}

/// The distribution summaries every error formula depends on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub mu_e: f64,
    pub sigma_sq: f64,
    pub linreg: Option<LinRegSpec>,
}

impl ModelParams {
    pub fn mean_estimation(mu_e: f64, sigma_sq: f64) -> Self {
        ModelParams {
            mu_e,
            sigma_sq,
            linreg: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mu_e.is_finite() && self.mu_e > 0.0) {
            return Err(GameError::InvalidMuE(self.mu_e));
        }
        if !(self.sigma_sq.is_finite() && self.sigma_sq >= 0.0) {
            return Err(GameError::InvalidSigmaSq(self.sigma_sq));
        }
        if let Some(spec) = &self.linreg {
            if spec.d == 0 {
                return Err(GameError::InvalidDimension);
            }
            if !(spec.sigma_bias_sq.is_finite() && spec.sigma_bias_sq >= 0.0) {
                return Err(GameError::InvalidBiasCoefficient(spec.sigma_bias_sq));
            }
        }
        Ok(())
    }

    /// Checks that a player with `n` samples can fit the model.
    pub(crate) fn check_samples(&self, player: usize, n: u64) -> Result<()> {
        if n == 0 {
            return Err(GameError::ZeroSamples { player });
        }
        if let Some(spec) = &self.linreg {
            if n <= spec.d as u64 + 1 {
                return Err(GameError::TooFewSamples {
                    player,
                    n,
                    d: spec.d,
                });
            }
        }
        Ok(())
    }
}

/// A population of players, identified by index, with their sample counts.
#[derive(Debug, Clone, PartialEq)]
pub struct GameConfig {
    pub players: Vec<u64>,
    pub mu_e: f64,
    pub sigma_sq: f64,
    pub linreg: Option<LinRegSpec>,
}

impl GameConfig {
    /// A validated mean-estimation game.
    pub fn new(players: Vec<u64>, mu_e: f64, sigma_sq: f64) -> Result<Self> {
        let config = GameConfig {
            players,
            mu_e,
            sigma_sq,
            linreg: None,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn with_linreg(mut self, spec: LinRegSpec) -> Result<Self> {
        self.linreg = Some(spec);
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.players.is_empty() {
            return Err(GameError::EmptyPopulation);
        }
        let params = self.params();
        params.validate()?;
        for (player, &n) in self.players.iter().enumerate() {
            params.check_samples(player, n)?;
        }
        Ok(())
    }

    pub fn params(&self) -> ModelParams {
        ModelParams {
            mu_e: self.mu_e,
            sigma_sq: self.sigma_sq,
            linreg: self.linreg,
        }
    }

    pub fn num_players(&self) -> usize {
        self.players.len()
    }

    pub fn samples(&self, player: usize) -> u64 {
        self.players[player]
    }
}

/// Returns normally iff every [`GameConfig`] invariant holds.
pub fn validate(config: &GameConfig) -> Result<()> {
    config.validate()
}

/// Letter used to display a player index (`0 → a`).
pub fn player_label(player: usize) -> String {
    if player < 26 {
        char::from(b'a' + player as u8).to_string()
    } else {
        format!("p{player}")
    }
}

/// A non-empty set of players, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coalition {
    members: Vec<usize>,
}

impl Coalition {
    pub fn new(mut members: Vec<usize>, players: usize) -> Result<Self> {
        if members.is_empty() {
            return Err(GameError::InvalidCoalition("coalition is empty".into()));
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(GameError::InvalidCoalition(format!(
                "player {} listed twice",
                player_label(w[0])
            )));
        }
        if let Some(&last) = members.last() {
            if last >= players {
                return Err(GameError::PlayerOutOfRange { player: last, players });
            }
        }
        Ok(Coalition { members })
    }

    pub fn singleton(player: usize) -> Self {
        Coalition {
            members: vec![player],
        }
    }

    pub fn grand(players: usize) -> Self {
        assert!(players > 0, "grand coalition of an empty population");
        Coalition {
            members: (0..players).collect(),
        }
    }

    /// Builds the coalition whose members are the set bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        assert!(mask != 0, "empty coalition mask");
        let members = (0..64).filter(|i| mask >> i & 1 == 1).collect();
        Coalition { members }
    }

    pub fn mask(&self) -> u64 {
        self.members.iter().fold(0, |m, &i| m | 1 << i)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, player: usize) -> bool {
        self.members.binary_search(&player).is_ok()
    }

    /// Position of `player` within the sorted member list.
    pub fn position(&self, player: usize) -> Option<usize> {
        self.members.binary_search(&player).ok()
    }

    pub fn with(&self, player: usize) -> Self {
        let mut members = self.members.clone();
        if let Err(at) = members.binary_search(&player) {
            members.insert(at, player);
        }
        Coalition { members }
    }

    /// Parses `{a,b,c}` (braces optional) for a population of `players`.
    pub fn parse(text: &str, players: usize) -> Result<Self> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        let members = inner
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(parse_player)
            .collect::<Result<Vec<_>>>()?;
        Coalition::new(members, players)
    }
}

fn parse_player(token: &str) -> Result<usize> {
    let mut chars = token.chars();
    match (chars.next(), chars.next()) {
        (Some(c @ 'a'..='z'), None) => Ok(c as usize - 'a' as usize),
        _ => Err(GameError::InvalidCoalition(format!(
            "expected a player letter a..z, got {token:?}"
        ))),
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.members.iter().map(|&i| player_label(i)).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// A coalition structure: disjoint coalitions covering every player.
///
/// Coalitions are kept in canonical order (by smallest member).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    coalitions: Vec<Coalition>,
    players: usize,
}

impl Partition {
    pub fn new(mut coalitions: Vec<Coalition>, players: usize) -> Result<Self> {
        let mut seen = vec![false; players];
        for coalition in &coalitions {
            for &i in coalition.members() {
                if i >= players {
                    return Err(GameError::PlayerOutOfRange { player: i, players });
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(GameError::InvalidPartition(format!(
                        "player {} appears in more than one coalition",
                        player_label(i)
                    )));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(GameError::InvalidPartition(format!(
                "player {} is not in any coalition",
                player_label(missing)
            )));
        }
        coalitions.sort_by_key(|c| c.members()[0]);
        Ok(Partition {
            coalitions,
            players,
        })
    }

    pub fn grand(players: usize) -> Self {
        Partition {
            coalitions: vec![Coalition::grand(players)],
            players,
        }
    }

    pub fn singletons(players: usize) -> Self {
        Partition {
            coalitions: (0..players).map(Coalition::singleton).collect(),
            players,
        }
    }

    /// Builds the partition encoded by a restricted growth string.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let blocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut members = vec![Vec::new(); blocks];
        for (player, &block) in rgs.iter().enumerate() {
            members[block].push(player);
        }
        Partition {
            coalitions: members.into_iter().map(|members| Coalition { members }).collect(),
            players: rgs.len(),
        }
    }

    pub fn coalitions(&self) -> &[Coalition] {
        &self.coalitions
    }

    pub fn num_players(&self) -> usize {
        self.players
    }

    /// The coalition containing `player`.
    pub fn coalition_of(&self, player: usize) -> &Coalition {
        self.coalitions
            .iter()
            .find(|c| c.contains(player))
            .expect("partition covers every player")
    }

    /// Parses the `{a,b}|{c}` grammar.
    pub fn parse(text: &str, players: usize) -> Result<Self> {
        let coalitions = text
            .split('|')
            .map(|part| Coalition::parse(part, players))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(coalitions, players)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, coalition) in self.coalitions.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            write!(f, "{coalition}")?;
        }
        Ok(())
    }
}

/// Which estimator each coalition member uses.
#[derive(Debug, Clone, PartialEq)]
pub enum FederationScheme {
    Local,
    Uniform,
    /// Per-player blend weight `w_j` between local and coalition model.
    Coarse(Vec<f64>),
    CoarseOptimal,
    /// Per-player weight rows, aligned with the sorted members of the
    /// player's own coalition.
    Fine(Vec<Vec<f64>>),
    FineOptimal,
}

impl FederationScheme {
    pub fn name(&self) -> &'static str {
        match self {
            FederationScheme::Local => "local",
            FederationScheme::Uniform => "uniform",
            FederationScheme::Coarse(_) => "coarse",
            FederationScheme::CoarseOptimal => "coarse-optimal",
            FederationScheme::Fine(_) => "fine",
            FederationScheme::FineOptimal => "fine-optimal",
        }
    }

    /// Checks the weight invariants against a partition of the players.
    pub fn validate_for(&self, partition: &Partition) -> Result<()> {
        let players = partition.num_players();
        match self {
            FederationScheme::Coarse(weights) => {
                if weights.len() != players {
                    return Err(GameError::SchemeNotApplicable {
                        scheme: self.name().into(),
                        reason: format!("expected {players} weights, got {}", weights.len()),
                    });
                }
                if let Some(&w) = weights.iter().find(|w| !(0.0..=1.0).contains(*w)) {
                    return Err(GameError::InvalidWeight(w));
                }
            }
            FederationScheme::Fine(rows) => {
                if rows.len() != players {
                    return Err(GameError::MalformedWeightRow(format!(
                        "expected {players} rows, got {}",
                        rows.len()
                    )));
                }
                for (player, row) in rows.iter().enumerate() {
                    check_fine_row(row, partition.coalition_of(player).len())?;
                }
            }
            _ => {}
        }
        Ok(())
    }
}

/// A weight row must have one finite entry per member and sum to one.
pub(crate) fn check_fine_row(row: &[f64], members: usize) -> Result<()> {
    if row.len() != members {
        return Err(GameError::MalformedWeightRow(format!(
            "expected {members} entries, got {}",
            row.len()
        )));
    }
    if row.iter().any(|v| !v.is_finite()) {
        return Err(GameError::MalformedWeightRow("non-finite entry".into()));
    }
    let sum: f64 = row.iter().sum();
    if (sum - 1.0).abs() > 1e-12 {
        return Err(GameError::MalformedWeightRow(format!(
            "entries sum to {sum}, not 1"
        )));
    }
    Ok(())
}

impl fmt::Display for FederationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `π(s, ℓ)`: a coalition of `small` small players and `large` large ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    pub small: usize,
    pub large: usize,
}

impl Profile {
    pub const fn new(small: usize, large: usize) -> Self {
        Profile { small, large }
    }

    pub fn is_empty(&self) -> bool {
        self.small == 0 && self.large == 0
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "π({},{})", self.small, self.large)
    }
}

/// Renders an arrangement as `π(70,3) + 4 singletons`.
pub fn describe_arrangement(profiles: &[Profile]) -> String {
    let singles = profiles
        .iter()
        .filter(|p| p.small + p.large == 1)
        .count();
    let mut parts: Vec<String> = profiles
        .iter()
        .filter(|p| p.small + p.large != 1)
        .map(Profile::to_string)
        .collect();
    match singles {
        0 => {}
        1 if parts.is_empty() => parts.push(profiles[0].to_string()),
        1 => parts.push("1 singleton".into()),
        k => parts.push(format!("{k} singletons")),
    }
    parts.join(" + ")
}

/// A symmetric population of `small` players with `n_s` samples and
/// `large` players with `n_l` samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoSizeGame {
    pub n_s: u64,
    pub n_l: u64,
    pub small: usize,
    pub large: usize,
}

impl TwoSizeGame {
    pub fn new(n_s: u64, n_l: u64, small: usize, large: usize) -> Result<Self> {
        let game = TwoSizeGame {
            n_s,
            n_l,
            small,
            large,
        };
        game.validate()?;
        Ok(game)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_s == 0 {
            return Err(GameError::InvalidTwoSizeGame("n_s must be at least 1".into()));
        }
        if self.n_s >= self.n_l {
            return Err(GameError::InvalidTwoSizeGame(format!(
                "n_s must be below n_l (n_s = {}, n_l = {})",
                self.n_s, self.n_l
            )));
        }
        if self.small + self.large == 0 {
            return Err(GameError::InvalidTwoSizeGame("S + L must be at least 1".into()));
        }
        Ok(())
    }

    pub fn grand(&self) -> Profile {
        Profile::new(self.small, self.large)
    }

    pub fn num_players(&self) -> usize {
        self.small + self.large
    }

    /// Labeled population: smalls are players `0..S`, larges `S..S+L`.
    pub fn config(&self, params: &ModelParams) -> Result<GameConfig> {
        let mut players = vec![self.n_s; self.small];
        players.extend(std::iter::repeat_n(self.n_l, self.large));
        let config = GameConfig {
            players,
            mu_e: params.mu_e,
            sigma_sq: params.sigma_sq,
            linreg: params.linreg,
        };
        config.validate()?;
        Ok(config)
    }

    /// Checks that an arrangement's profiles exactly use up the population.
    pub fn check_arrangement(&self, arrangement: &[Profile]) -> Result<()> {
        if arrangement.iter().any(Profile::is_empty) {
            return Err(GameError::MalformedArrangement("empty coalition profile".into()));
        }
        let small: usize = arrangement.iter().map(|p| p.small).sum();
        let large: usize = arrangement.iter().map(|p| p.large).sum();
        if (small, large) != (self.small, self.large) {
            return Err(GameError::MalformedArrangement(format!(
                "profiles cover ({small}, {large}) players, population is ({}, {})",
                self.small, self.large
            )));
        }
        Ok(())
    }

    /// Assigns concrete players to each profile, in order.
    pub fn expand(&self, arrangement: &[Profile]) -> Result<Partition> {
        self.check_arrangement(arrangement)?;
        let mut next_small = 0;
        let mut next_large = self.small;
        let coalitions = arrangement
            .iter()
            .map(|p| {
                let mut members: Vec<usize> = (next_small..next_small + p.small).collect();
                members.extend(next_large..next_large + p.large);
                next_small += p.small;
                next_large += p.large;
                Coalition { members }
            })
            .collect();
        Partition::new(coalitions, self.num_players())
    }
}

/// Iterator over all set partitions of `{0..m-1}` in restricted growth
/// string order.
#[derive(Debug, Clone)]
pub struct Partitions {
    rgs: Vec<usize>,
    // prefix_max[i] = max(rgs[0..=i])
    prefix_max: Vec<usize>,
    done: bool,
}

impl Partitions {
    fn new(m: usize) -> Self {
        Partitions {
            rgs: vec![0; m],
            prefix_max: vec![0; m],
            done: m == 0,
        }
    }

    fn advance(&mut self) {
        let m = self.rgs.len();
        // Rightmost position that can still grow.
        let Some(i) = (1..m).rev().find(|&i| self.rgs[i] <= self.prefix_max[i - 1]) else {
            self.done = true;
            return;
        };
        self.rgs[i] += 1;
        self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
        for k in i + 1..m {
            self.rgs[k] = 0;
            self.prefix_max[k] = self.prefix_max[i];
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let partition = Partition::from_rgs(&self.rgs);
        self.advance();
        Some(partition)
    }
}

pub fn enumerate_partitions(m: usize) -> Result<Partitions> {
    if m == 0 {
        return Err(GameError::EmptyPopulation);
    }
    if m > PARTITION_CAP {
        return Err(GameError::CapExceeded {
            what: "partition enumeration",
            requested: m,
            cap: PARTITION_CAP,
        });
    }
    Ok(Partitions::new(m))
}

/// All `2^m - 1` non-empty coalitions, in increasing bitmask order.
pub fn enumerate_coalitions(m: usize) -> Result<impl Iterator<Item = Coalition>> {
    check_coalition_cap(m)?;
    Ok((1u64..1 << m).map(Coalition::from_mask))
}

pub(crate) fn check_coalition_cap(m: usize) -> Result<()> {
    if m == 0 {
        return Err(GameError::EmptyPopulation);
    }
    if m > COALITION_CAP {
        return Err(GameError::CapExceeded {
            what: "coalition enumeration",
            requested: m,
            cap: COALITION_CAP,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bell numbers via the Bell triangle; independent of the RGS walk.
    fn bell_triangle(m: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 1..m {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        *row.last().unwrap()
    }

    #[test]
    fn validate_accepts_table_setup() {
        assert!(GameConfig::new(vec![5, 5, 5], 10.0, 1.0).is_ok());
    }

    #[test]
    fn validate_rejects_bad_fields() {
        let bad = |players: Vec<u64>, mu_e, sigma_sq| GameConfig::new(players, mu_e, sigma_sq);
        assert_eq!(bad(vec![], 10.0, 1.0), Err(GameError::EmptyPopulation));
        assert_eq!(bad(vec![3, 0], 10.0, 1.0), Err(GameError::ZeroSamples { player: 1 }));
        assert_eq!(bad(vec![3], 0.0, 1.0), Err(GameError::InvalidMuE(0.0)));
        assert_eq!(bad(vec![3], 1.0, -1.0), Err(GameError::InvalidSigmaSq(-1.0)));
        assert!(bad(vec![3], f64::NAN, 1.0).is_err());
    }

    #[test]
    fn validate_rejects_linreg_with_too_few_samples() {
        let err = GameConfig::new(vec![6], 10.0, 1.0)
            .unwrap()
            .with_linreg(LinRegSpec {
                d: 5,
                sigma_bias_sq: 1.0,
            })
            .unwrap_err();
        assert_eq!(err, GameError::TooFewSamples { player: 0, n: 6, d: 5 });
        assert!(err.to_string().contains("n must exceed d+1"));
        assert!(GameError::EmptyPopulation.to_string().contains("empty population"));
    }

    #[test]
    fn partition_counts_small_cases() {
        assert_eq!(enumerate_partitions(1).unwrap().count(), 1);
        assert_eq!(enumerate_partitions(3).unwrap().count(), 5);
        assert_eq!(enumerate_partitions(4).unwrap().count(), 15);
    }

    #[test]
    fn partition_counts_match_bell_triangle() {
        for m in 1..=8 {
            assert_eq!(enumerate_partitions(m).unwrap().count() as u64, bell_triangle(m), "m = {m}");
        }
    }

    #[test]
    fn partitions_are_valid_distinct_and_ordered() {
        let all: Vec<Partition> = enumerate_partitions(5).unwrap().collect();
        for p in &all {
            let rebuilt = Partition::new(p.coalitions().to_vec(), 5).unwrap();
            assert_eq!(&rebuilt, p);
        }
        let unique: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(unique.len(), all.len());
        let again: Vec<Partition> = enumerate_partitions(5).unwrap().collect();
        assert_eq!(all, again);
        assert_eq!(all[0], Partition::grand(5));
        assert_eq!(all.last().unwrap(), &Partition::singletons(5));
    }

    #[test]
    fn partition_cap_is_enforced() {
        assert!(enumerate_partitions(13).is_ok());
        assert!(enumerate_partitions(14).unwrap_err().is_cap_exceeded());
    }

    #[test]
    fn coalition_enumeration() {
        let two: Vec<String> = enumerate_coalitions(2).unwrap().map(|c| c.to_string()).collect();
        assert_eq!(two, ["{a}", "{b}", "{a,b}"]);
        assert_eq!(enumerate_coalitions(3).unwrap().count(), 7);
        assert_eq!(enumerate_coalitions(5).unwrap().count(), 31);
        assert!(enumerate_coalitions(21).err().unwrap().is_cap_exceeded());
    }

    #[test]
    fn partition_grammar_round_trips() {
        let p = Partition::parse("{c}|{a,b}", 3).unwrap();
        assert_eq!(p.to_string(), "{a,b}|{c}");
        assert!(Partition::parse("{a,b}", 3).is_err());
        assert!(Partition::parse("{a,b}|{b,c}", 3).is_err());
        assert!(Partition::parse("{a,x}|{b}", 3).is_err());
    }

    #[test]
    fn coalition_rejects_duplicates_and_range() {
        assert!(Coalition::new(vec![0, 0], 2).is_err());
        assert!(Coalition::new(vec![2], 2).is_err());
        assert!(Coalition::new(vec![], 2).is_err());
        let c = Coalition::new(vec![2, 0], 3).unwrap();
        assert_eq!(c.members(), &[0, 2]);
        assert_eq!(Coalition::from_mask(c.mask()), c);
    }

    #[test]
    fn fine_rows_must_sum_to_one() {
        let p = Partition::grand(2);
        assert!(FederationScheme::Fine(vec![vec![0.5, 0.5], vec![0.25, 0.75]])
            .validate_for(&p)
            .is_ok());
        assert!(FederationScheme::Fine(vec![vec![0.5, 0.6], vec![0.25, 0.75]])
            .validate_for(&p)
            .is_err());
        assert!(FederationScheme::Coarse(vec![0.5, 1.5]).validate_for(&p).is_err());
    }

    #[test]
    fn two_size_expansion() {
        let game = TwoSizeGame::new(5, 25, 2, 1).unwrap();
        let p = game
            .expand(&[Profile::new(2, 0), Profile::new(0, 1)])
            .unwrap();
        assert_eq!(p.to_string(), "{a,b}|{c}");
        assert!(game.expand(&[Profile::new(2, 0)]).is_err());
        assert!(TwoSizeGame::new(5, 5, 1, 1).is_err());
        assert!(TwoSizeGame::new(5, 6, 0, 0).is_err());
    }

    #[test]
    fn arrangement_descriptions() {
        let mut a = vec![Profile::new(70, 3)];
        a.extend(std::iter::repeat_n(Profile::new(0, 1), 4));
        assert_eq!(describe_arrangement(&a), "π(70,3) + 4 singletons");
        assert_eq!(
            describe_arrangement(&[Profile::new(3, 0), Profile::new(0, 1)]),
            "π(3,0) + 1 singleton"
        );
        assert_eq!(describe_arrangement(&[Profile::new(1, 0)]), "π(1,0)");
    }
}
