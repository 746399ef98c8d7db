//! Core, strict-core and individual stability of coalition structures.

use std::fmt;

use rayon::prelude::*;

use crate::error::{GameError, Result};
use crate::model::{check_coalition_cap, enumerate_partitions, Coalition, FederationScheme, GameConfig, Partition, Profile, TwoSizeGame, PARTITION_CAP};
use crate::mse::{ErrorModel, Params, ProfileErrors, Rule};
use crate::scalar::{Rational, Scalar};

/// Errors for every (player, coalition) pair are tabulated up to this size.
const TABLE_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparisonMode {
    FloatEpsilon,
    ExactRational,
}

impl fmt::Display for ComparisonMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComparisonMode::FloatEpsilon => "float-epsilon",
            ComparisonMode::ExactRational => "exact-rational",
        })
    }
}

/// How a player compares its error in two coalitions.
pub trait Preference<T>: Sync {
    fn strictly(&self, new: &T, old: &T) -> bool;
    fn weakly(&self, new: &T, old: &T) -> bool;
    fn mode(&self) -> ComparisonMode;
}

/// Float comparisons with a relative tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PreferenceOrder {
    pub epsilon: f64,
}

impl PreferenceOrder {
    pub const DEFAULT_EPSILON: f64 = 1e-9;
    const FLOOR: f64 = 1e-15;

    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon >= 0.0) {
            return Err(GameError::Precondition(format!(
                "epsilon must be a non-negative finite number, got {epsilon}"
            )));
        }
        Ok(PreferenceOrder { epsilon })
    }
}

impl Default for PreferenceOrder {
    fn default() -> Self {
        PreferenceOrder {
            epsilon: Self::DEFAULT_EPSILON,
        }
    }
}

impl Preference<f64> for PreferenceOrder {
    fn strictly(&self, new: &f64, old: &f64) -> bool {
        *new < *old * (1.0 - self.epsilon) - Self::FLOOR
    }

    fn weakly(&self, new: &f64, old: &f64) -> bool {
        *new <= *old * (1.0 + self.epsilon)
    }

    fn mode(&self) -> ComparisonMode {
        ComparisonMode::FloatEpsilon
    }
}

/// Exact comparisons of rational errors.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExactOrder;

impl Preference<Rational> for ExactOrder {
    fn strictly(&self, new: &Rational, old: &Rational) -> bool {
        new < old
    }

    fn weakly(&self, new: &Rational, old: &Rational) -> bool {
        new <= old
    }

    fn mode(&self) -> ComparisonMode {
        ComparisonMode::ExactRational
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Notion {
    Core,
    StrictCore,
    Individual,
}

impl Notion {
    pub fn name(&self) -> &'static str {
        match self {
            Notion::Core => "core",
            Notion::StrictCore => "strict-core",
            Notion::Individual => "individual",
        }
    }
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a partition is not stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A coalition whose members all prefer it to their current one.
    Blocking(Coalition),
    /// `player` leaves `from` for `to`, which is either an existing coalition
    /// plus the player or the player alone.
    Deviation {
        player: usize,
        from: Coalition,
        to: Coalition,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Blocking(c) => write!(f, "blocked by {c}"),
            Witness::Deviation { player, from, to } => {
                let who = crate::model::player_label(*player);
                if to.len() == 1 {
                    write!(f, "{who} leaves {from} to go alone")
                } else {
                    let joined = Coalition::from_mask(to.mask() & !(1 << player));
                    write!(f, "{who} joins {joined}")
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub stable: bool,
    pub witness: Option<Witness>,
    pub mode: ComparisonMode,
}

impl StabilityVerdict {
    fn from_witness(witness: Option<Witness>, mode: ComparisonMode) -> Self {
        StabilityVerdict {
            stable: witness.is_none(),
            witness,
            mode,
        }
    }
}

impl fmt::Display for StabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("stable"),
            Some(w) => write!(f, "unstable ({w})"),
        }
    }
}

/// Stability decisions for one population, rule and comparison order.
pub struct Analyzer<T, P> {
    model: ErrorModel<T>,
    rule: Rule<T>,
    order: P,
    /// `table[mask * m + j]`, present for small populations.
    table: Option<Vec<T>>,
    singleton_deviation: bool,
}

impl<T: Scalar, P: Preference<T>> Analyzer<T, P> {
    pub fn new(model: ErrorModel<T>, rule: Rule<T>, order: P) -> Result<Self> {
        let m = model.num_players();
        check_coalition_cap(m)?;
        if let Rule::Coarse(w) = &rule {
            if w.len() != m {
                return Err(GameError::SchemeNotApplicable {
                    scheme: "coarse".into(),
                    reason: format!("expected {m} weights, got {}", w.len()),
                });
            }
        }
        let table = (m <= TABLE_CAP).then(|| {
            (0..(1usize << m) * m)
                .into_par_iter()
                .map(|k| {
                    let (mask, j) = ((k / m) as u64, k % m);
                    if mask >> j & 1 == 1 {
                        compute(&model, &rule, j, mask)
                    } else {
                        T::zero()
                    }
                })
                .collect()
        });
        Ok(Analyzer {
            model,
            rule,
            order,
            table,
            singleton_deviation: true,
        })
    }

    /// Whether going alone counts as an individual deviation (default on).
    pub fn with_singleton_deviation(mut self, enabled: bool) -> Self {
        self.singleton_deviation = enabled;
        self
    }

    pub fn num_players(&self) -> usize {
        self.model.num_players()
    }

    pub fn mode(&self) -> ComparisonMode {
        self.order.mode()
    }

    /// Error of `j` in the coalition encoded by `mask`.
    pub fn error(&self, j: usize, mask: u64) -> T {
        match &self.table {
            Some(t) => t[mask as usize * self.num_players() + j].clone(),
            None => compute(&self.model, &self.rule, j, mask),
        }
    }

    fn check_partition(&self, p: &Partition) -> Result<()> {
        if p.num_players() != self.num_players() {
            return Err(GameError::InvalidPartition(format!(
                "partition covers {} players, population has {}",
                p.num_players(),
                self.num_players()
            )));
        }
        Ok(())
    }

    fn current(&self, p: &Partition) -> Vec<T> {
        let mut cur = vec![T::zero(); self.num_players()];
        for c in p.coalitions() {
            let mask = c.mask();
            for &j in c.members() {
                cur[j] = self.error(j, mask);
            }
        }
        cur
    }

    fn members(mask: u64) -> impl Iterator<Item = usize> {
        let mut rest = mask;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                j
            })
        })
    }

    /// First coalition, in increasing bitmask order, that blocks.
    fn blocking(&self, cur: &[T], strict: bool) -> Option<Coalition> {
        let full = 1u64 << self.num_players();
        (1..full)
            .find(|&mask| {
                if strict {
                    let mut gain = false;
                    Self::members(mask).all(|j| {
                        let e = self.error(j, mask);
                        gain |= self.order.strictly(&e, &cur[j]);
                        self.order.weakly(&e, &cur[j])
                    }) && gain
                } else {
                    Self::members(mask).all(|j| self.order.strictly(&self.error(j, mask), &cur[j]))
                }
            })
            .map(Coalition::from_mask)
    }

    fn deviation(&self, p: &Partition, cur: &[T]) -> Option<Witness> {
        for i in 0..self.num_players() {
            let from = p.coalition_of(i);
            for target in p.coalitions().iter().filter(|c| !c.contains(i)) {
                let mask = target.mask() | 1 << i;
                if self.order.strictly(&self.error(i, mask), &cur[i])
                    && target
                        .members()
                        .iter()
                        .all(|&k| self.order.weakly(&self.error(k, mask), &cur[k]))
                {
                    return Some(Witness::Deviation {
                        player: i,
                        from: from.clone(),
                        to: target.with(i),
                    });
                }
            }
            if self.singleton_deviation
                && from.len() > 1
                && self.order.strictly(&self.error(i, 1 << i), &cur[i])
            {
                return Some(Witness::Deviation {
                    player: i,
                    from: from.clone(),
                    to: Coalition::singleton(i),
                });
            }
        }
        None
    }

    fn witness(&self, p: &Partition, notion: Notion) -> Option<Witness> {
        let cur = self.current(p);
        match notion {
            Notion::Core => self.blocking(&cur, false).map(Witness::Blocking),
            Notion::StrictCore => self.blocking(&cur, true).map(Witness::Blocking),
            Notion::Individual => self.deviation(p, &cur),
        }
    }

    pub fn check(&self, p: &Partition, notion: Notion) -> Result<StabilityVerdict> {
        self.check_partition(p)?;
        Ok(StabilityVerdict::from_witness(self.witness(p, notion), self.mode()))
    }

    pub fn is_core_stable(&self, p: &Partition) -> Result<StabilityVerdict> {
        self.check(p, Notion::Core)
    }

    pub fn is_strict_core_stable(&self, p: &Partition) -> Result<StabilityVerdict> {
        self.check(p, Notion::StrictCore)
    }

    pub fn is_individually_stable(&self, p: &Partition) -> Result<StabilityVerdict> {
        self.check(p, Notion::Individual)
    }

    /// Every partition satisfying `notion`, in enumeration order.
    pub fn stable_partitions(&self, notion: Notion) -> Result<Vec<Partition>> {
        const CHUNK: usize = 4096;
        let mut found = Vec::new();
        let mut partitions = enumerate_partitions(self.num_players())?;
        loop {
            let chunk: Vec<Partition> = partitions.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                return Ok(found);
            }
            found.par_extend(
                chunk
                    .into_par_iter()
                    .filter(|p| self.witness(p, notion).is_none()),
            );
        }
    }

    /// Re-evaluates a witness from scratch, without the error table.
    pub fn verify_witness(&self, p: &Partition, notion: Notion, witness: &Witness) -> Result<bool> {
        self.check_partition(p)?;
        let direct = |j: usize, c: &Coalition| self.model.error(j, c, &self.rule);
        let before = |j: usize| direct(j, p.coalition_of(j));
        match (notion, witness) {
            (Notion::Core | Notion::StrictCore, Witness::Blocking(c)) => {
                let mut all_strict = true;
                let mut all_weak = true;
                let mut any_strict = false;
                for &j in c.members() {
                    let (new, old) = (direct(j, c)?, before(j)?);
                    let strict = self.order.strictly(&new, &old);
                    all_strict &= strict;
                    any_strict |= strict;
                    all_weak &= self.order.weakly(&new, &old);
                }
                Ok(match notion {
                    Notion::Core => all_strict,
                    _ => all_weak && any_strict,
                })
            }
            (Notion::Individual, Witness::Deviation { player, from, to }) => {
                if p.coalition_of(*player) != from || !to.contains(*player) {
                    return Ok(false);
                }
                if !self.order.strictly(&direct(*player, to)?, &before(*player)?) {
                    return Ok(false);
                }
                if to.len() == 1 {
                    return Ok(self.singleton_deviation && from.len() > 1);
                }
                let rest: Vec<usize> = to.members().iter().copied().filter(|k| k != player).collect();
                let existing = p.coalitions().iter().any(|c| c.members() == rest.as_slice());
                for &k in &rest {
                    if !self.order.weakly(&direct(k, to)?, &before(k)?) {
                        return Ok(false);
                    }
                }
                Ok(existing)
            }
            _ => Ok(false),
        }
    }
}

fn compute<T: Scalar>(model: &ErrorModel<T>, rule: &Rule<T>, j: usize, mask: u64) -> T {
    let pool = model.pool_of_mask(j, mask);
    rule.error(&model.params, j, model.samples[j], &pool)
}

/// Options shared by the float and exact front ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    pub mode: ComparisonMode,
    pub epsilon: f64,
    pub singleton_deviation: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            mode: ComparisonMode::FloatEpsilon,
            epsilon: PreferenceOrder::DEFAULT_EPSILON,
            singleton_deviation: true,
        }
    }
}

impl CheckOptions {
    pub fn exact() -> Self {
        CheckOptions {
            mode: ComparisonMode::ExactRational,
            ..Default::default()
        }
    }
}

/// An [`Analyzer`] in either comparison mode.
pub enum Checker {
    Float(Analyzer<f64, PreferenceOrder>),
    Exact(Analyzer<Rational, ExactOrder>),
}

impl Checker {
    pub fn new(config: &GameConfig, scheme: &FederationScheme, options: CheckOptions) -> Result<Self> {
        Ok(match options.mode {
            ComparisonMode::FloatEpsilon => Checker::Float(
                Analyzer::new(
                    ErrorModel::from_config(config)?,
                    Rule::from_scheme(scheme)?,
                    PreferenceOrder::new(options.epsilon)?,
                )?
                .with_singleton_deviation(options.singleton_deviation),
            ),
            ComparisonMode::ExactRational => Checker::Exact(
                Analyzer::new(ErrorModel::from_config(config)?, Rule::from_scheme(scheme)?, ExactOrder)?
                    .with_singleton_deviation(options.singleton_deviation),
            ),
        })
    }

    pub fn check(&self, p: &Partition, notion: Notion) -> Result<StabilityVerdict> {
        match self {
            Checker::Float(a) => a.check(p, notion),
            Checker::Exact(a) => a.check(p, notion),
        }
    }

    pub fn stable_partitions(&self, notion: Notion) -> Result<Vec<Partition>> {
        match self {
            Checker::Float(a) => a.stable_partitions(notion),
            Checker::Exact(a) => a.stable_partitions(notion),
        }
    }

    pub fn verify_witness(&self, p: &Partition, notion: Notion, witness: &Witness) -> Result<bool> {
        match self {
            Checker::Float(a) => a.verify_witness(p, notion, witness),
            Checker::Exact(a) => a.verify_witness(p, notion, witness),
        }
    }
}

pub fn is_core_stable(p: &Partition, scheme: &FederationScheme, config: &GameConfig) -> Result<StabilityVerdict> {
    Checker::new(config, scheme, CheckOptions::default())?.check(p, Notion::Core)
}

pub fn is_strict_core_stable(
    p: &Partition,
    scheme: &FederationScheme,
    config: &GameConfig,
) -> Result<StabilityVerdict> {
    Checker::new(config, scheme, CheckOptions::default())?.check(p, Notion::StrictCore)
}

pub fn is_individually_stable(
    p: &Partition,
    scheme: &FederationScheme,
    config: &GameConfig,
) -> Result<StabilityVerdict> {
    Checker::new(config, scheme, CheckOptions::default())?.check(p, Notion::Individual)
}

pub fn find_stable_partitions(config: &GameConfig, scheme: &FederationScheme, notion: Notion) -> Result<Vec<Partition>> {
    if config.num_players() > PARTITION_CAP {
        return Err(GameError::CapExceeded {
            what: "partition enumeration",
            requested: config.num_players(),
            cap: PARTITION_CAP,
        });
    }
    Checker::new(config, scheme, CheckOptions::default())?.stable_partitions(notion)
}

/// Count-level stability analysis of a two-size game.
pub struct ProfileAnalyzer<T, P> {
    pub errors: ProfileErrors<T>,
    order: P,
}

/// A single player type moving between profiles of an arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileDeviation {
    pub large: bool,
    pub from: Profile,
    /// The new coalition the mover ends up in.
    pub to: Profile,
}

impl fmt::Display for ProfileDeviation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.large { "large" } else { "small" };
        write!(f, "a {kind} player moves from {} to {}", self.from, self.to)
    }
}

impl<T: Scalar, P: Preference<T>> ProfileAnalyzer<T, P> {
    pub fn new(errors: ProfileErrors<T>, order: P) -> Self {
        ProfileAnalyzer { errors, order }
    }

    pub fn game(&self) -> &TwoSizeGame {
        &self.errors.game
    }

    pub fn small(&self, p: Profile) -> Option<T> {
        self.errors.small(p)
    }

    pub fn large(&self, p: Profile) -> Option<T> {
        self.errors.large(p)
    }

    pub fn prefers_small(&self, new: Profile, old: Profile) -> bool {
        match (self.small(new), self.small(old)) {
            (Some(a), Some(b)) => self.order.strictly(&a, &b),
            _ => false,
        }
    }

    pub fn weakly_prefers_small(&self, new: Profile, old: Profile) -> bool {
        match (self.small(new), self.small(old)) {
            (Some(a), Some(b)) => self.order.weakly(&a, &b),
            _ => false,
        }
    }

    pub fn prefers_large(&self, new: Profile, old: Profile) -> bool {
        match (self.large(new), self.large(old)) {
            (Some(a), Some(b)) => self.order.strictly(&a, &b),
            _ => false,
        }
    }

    pub fn weakly_prefers_large(&self, new: Profile, old: Profile) -> bool {
        match (self.large(new), self.large(old)) {
            (Some(a), Some(b)) => self.order.weakly(&a, &b),
            _ => false,
        }
    }

    /// A coalition profile all of whose members strictly gain, drawing each
    /// member from some coalition of the arrangement.
    ///
    /// Candidates are scanned with the small count descending, then the
    /// large count descending.
    pub fn blocking_profile(&self, arrangement: &[Profile]) -> Result<Option<Profile>> {
        let game = self.game();
        game.check_arrangement(arrangement)?;
        for s in (0..=game.small).rev() {
            for l in (0..=game.large).rev() {
                let candidate = Profile::new(s, l);
                if candidate.is_empty() {
                    continue;
                }
                let smalls: usize = arrangement
                    .iter()
                    .filter(|&&p| s > 0 && p.small > 0 && self.prefers_small(candidate, p))
                    .map(|p| p.small)
                    .sum();
                let larges: usize = arrangement
                    .iter()
                    .filter(|&&p| l > 0 && p.large > 0 && self.prefers_large(candidate, p))
                    .map(|p| p.large)
                    .sum();
                if s <= smalls && l <= larges {
                    return Ok(Some(candidate));
                }
            }
        }
        Ok(None)
    }

    /// A beneficial single-player move, if any; the receiving coalition's
    /// members must weakly agree.
    pub fn individual_deviation(&self, arrangement: &[Profile], singleton_deviation: bool) -> Result<Option<ProfileDeviation>> {
        self.game().check_arrangement(arrangement)?;
        for (k, &from) in arrangement.iter().enumerate() {
            for large in [false, true] {
                let present = if large { from.large } else { from.small };
                if present == 0 {
                    continue;
                }
                let add = |q: Profile| {
                    if large {
                        Profile::new(q.small, q.large + 1)
                    } else {
                        Profile::new(q.small + 1, q.large)
                    }
                };
                let gains = |to: Profile| {
                    if large {
                        self.prefers_large(to, from)
                    } else {
                        self.prefers_small(to, from)
                    }
                };
                for (t, &target) in arrangement.iter().enumerate() {
                    if t == k {
                        continue;
                    }
                    let to = add(target);
                    let accepted = (target.small == 0 || self.weakly_prefers_small(to, target))
                        && (target.large == 0 || self.weakly_prefers_large(to, target));
                    if gains(to) && accepted {
                        return Ok(Some(ProfileDeviation { large, from, to }));
                    }
                }
                let alone = add(Profile::new(0, 0));
                if singleton_deviation && from.small + from.large > 1 && gains(alone) {
                    return Ok(Some(ProfileDeviation {
                        large,
                        from,
                        to: alone,
                    }));
                }
            }
        }
        Ok(None)
    }
}

pub type FloatProfiles = ProfileAnalyzer<f64, PreferenceOrder>;

impl FloatProfiles {
    pub fn float(game: TwoSizeGame, params: &crate::model::ModelParams, scheme: &FederationScheme) -> Result<Self> {
        params.validate()?;
        let errors = ProfileErrors::new(Params::from_model(params), game, Rule::from_scheme(scheme)?)?;
        Ok(ProfileAnalyzer::new(errors, PreferenceOrder::default()))
    }
}

impl ProfileAnalyzer<Rational, ExactOrder> {
    pub fn exact(game: TwoSizeGame, params: &crate::model::ModelParams, scheme: &FederationScheme) -> Result<Self> {
        params.validate()?;
        let errors = ProfileErrors::new(Params::from_model(params), game, Rule::from_scheme(scheme)?)?;
        Ok(ProfileAnalyzer::new(errors, ExactOrder))
    }
}

/// A blocking coalition profile for `arrangement`, if one exists.
pub fn two_size_blocking_search(
    game: &TwoSizeGame,
    arrangement: &[Profile],
    scheme: &FederationScheme,
    params: &crate::model::ModelParams,
) -> Result<Option<Profile>> {
    FloatProfiles::float(*game, params, scheme)?.blocking_profile(arrangement)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelParams;

    fn cfg(players: &[u64]) -> GameConfig {
        GameConfig::new(players.to_vec(), 10.0, 1.0).unwrap()
    }

    fn part(text: &str, m: usize) -> Partition {
        Partition::parse(text, m).unwrap()
    }

    #[test]
    fn core_examples() {
        let u = FederationScheme::Uniform;
        assert!(is_core_stable(&Partition::grand(3), &u, &cfg(&[5, 5, 5])).unwrap().stable);
        let v = is_core_stable(&Partition::grand(3), &u, &cfg(&[25, 25, 25])).unwrap();
        assert_eq!(v.witness, Some(Witness::Blocking(Coalition::singleton(0))));
        let v = is_core_stable(&part("{a}|{b,c}", 3), &u, &cfg(&[5, 5, 25])).unwrap();
        assert_eq!(v.witness, Some(Witness::Blocking(Coalition::parse("{a,b}", 3).unwrap())));
    }

    #[test]
    fn strict_core_examples() {
        let u = FederationScheme::Uniform;
        // At n = μ_e/σ² the grand coalition only ties, so nobody strictly gains.
        let twins = cfg(&[10, 10]);
        let single = Partition::singletons(2);
        assert!(is_core_stable(&single, &u, &twins).unwrap().stable);
        assert!(is_strict_core_stable(&single, &u, &twins).unwrap().stable);
        let mixed = cfg(&[1, 9, 9]);
        let p = part("{a,b}|{c}", 3);
        assert!(is_core_stable(&p, &u, &mixed).unwrap().stable);
        assert!(!is_strict_core_stable(&p, &u, &mixed).unwrap().stable);
        assert!(is_strict_core_stable(&Partition::grand(3), &u, &cfg(&[5, 5, 5])).unwrap().stable);
    }

    #[test]
    fn individual_examples() {
        let u = FederationScheme::Uniform;
        let t2 = cfg(&[5, 5, 25]);
        assert!(is_individually_stable(&part("{a,b}|{c}", 3), &u, &t2).unwrap().stable);
        let v = is_individually_stable(&part("{a}|{b,c}", 3), &u, &t2).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.to_string(), "b joins {a}");
        let t4 = cfg(&[30, 30, 30, 300]);
        assert!(is_individually_stable(&Partition::grand(4), &FederationScheme::CoarseOptimal, &t4).unwrap().stable);
    }

    #[test]
    fn stable_partition_searches() {
        let u = FederationScheme::Uniform;
        assert_eq!(find_stable_partitions(&cfg(&[5, 5, 5]), &u, Notion::Core).unwrap(), vec![Partition::grand(3)]);
        assert_eq!(
            find_stable_partitions(&cfg(&[25, 25, 25]), &u, Notion::Core).unwrap(),
            vec![Partition::singletons(3)]
        );
        assert_eq!(find_stable_partitions(&cfg(&[10, 10, 10]), &u, Notion::Core).unwrap().len(), 5);
    }

    #[test]
    fn witnesses_verify() {
        let t2 = cfg(&[5, 5, 25]);
        let checker = Checker::new(&t2, &FederationScheme::Uniform, CheckOptions::default()).unwrap();
        for p in enumerate_partitions(3).unwrap() {
            for notion in [Notion::Core, Notion::StrictCore, Notion::Individual] {
                if let Some(w) = checker.check(&p, notion).unwrap().witness {
                    assert!(checker.verify_witness(&p, notion, &w).unwrap(), "{p} {notion} {w}");
                }
            }
        }
    }

    #[test]
    fn singleton_deviation_flag() {
        let t3 = cfg(&[25, 25, 25]);
        let options = CheckOptions {
            singleton_deviation: false,
            ..Default::default()
        };
        let without = Checker::new(&t3, &FederationScheme::Uniform, options).unwrap();
        assert!(without.check(&Partition::grand(3), Notion::Individual).unwrap().stable);
        let with = is_individually_stable(&Partition::grand(3), &FederationScheme::Uniform, &t3).unwrap();
        assert_eq!(with.witness.unwrap().to_string(), "a leaves {a,b,c} to go alone");
    }

    #[test]
    fn exact_mode_recognizes_boundary_ties() {
        let u = FederationScheme::Uniform;
        let exact = Checker::new(&cfg(&[10, 10, 10]), &u, CheckOptions::exact()).unwrap();
        assert_eq!(exact.stable_partitions(Notion::StrictCore).unwrap().len(), 5);
        let exact = Checker::new(&cfg(&[1, 9, 9]), &u, CheckOptions::exact()).unwrap();
        let p = part("{a,b}|{c}", 3);
        assert!(exact.check(&p, Notion::Core).unwrap().stable);
        let v = exact.check(&p, Notion::StrictCore).unwrap();
        assert_eq!(v.mode, ComparisonMode::ExactRational);
        assert!(exact.verify_witness(&p, Notion::StrictCore, &v.witness.unwrap()).unwrap());
    }

    #[test]
    fn appendix_blocking_profile() {
        let game = TwoSizeGame::new(11, 106, 70, 7).unwrap();
        let params = ModelParams::mean_estimation(100.0, 1.0);
        let mut arrangement = vec![Profile::new(70, 3)];
        arrangement.extend(std::iter::repeat_n(Profile::new(0, 1), 4));
        let found = two_size_blocking_search(&game, &arrangement, &FederationScheme::Uniform, &params).unwrap();
        assert_eq!(found, Some(Profile::new(68, 4)));
        let mut split = vec![Profile::new(70, 0)];
        split.extend(std::iter::repeat_n(Profile::new(0, 1), 7));
        let found = two_size_blocking_search(&game, &split, &FederationScheme::Uniform, &params).unwrap();
        assert_eq!(found, Some(Profile::new(70, 3)));
    }

    #[test]
    fn all_large_singletons_are_unblocked() {
        let game = TwoSizeGame::new(5, 30, 0, 4).unwrap();
        let params = ModelParams::mean_estimation(10.0, 1.0);
        let arrangement = vec![Profile::new(0, 1); 4];
        let found = two_size_blocking_search(&game, &arrangement, &FederationScheme::Uniform, &params).unwrap();
        assert_eq!(found, None);
        assert!(two_size_blocking_search(&game, &[Profile::new(0, 3)], &FederationScheme::Uniform, &params).is_err());
    }
}
