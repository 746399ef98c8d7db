//! Closed-form expected mean-squared errors.
//!
//! Every formula is written for one target player `j` (with `n_j` samples)
//! against a [`Pool`] of the other coalition members. Mean estimation and
//! linear regression differ only in the per-player variance multiplier
//! (`1/n` vs `d/(n-d-1)`) and in the bias coefficient (`σ²` vs
//! `sigma_bias_sq`).

use crate::error::{GameError, Result};
use crate::model::{check_fine_row, Coalition, FederationScheme, GameConfig, ModelParams, Partition, Profile, TwoSizeGame};
use crate::scalar::{Rational, Scalar};
use crate::weights;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Mean,
    LinReg { d: u64 },
}

/// Formula parameters in a chosen numeric backend.
#[derive(Debug, Clone, PartialEq)]
pub struct Params<T> {
    pub mu_e: T,
    /// `σ²` for mean estimation, `sigma_bias_sq` for linear regression.
    pub bias: T,
    pub task: Task,
}

impl<T: Scalar> Params<T> {
    pub fn from_model(params: &ModelParams) -> Self {
        match params.linreg {
            None => Params {
                mu_e: T::from_f64(params.mu_e),
                bias: T::from_f64(params.sigma_sq),
                task: Task::Mean,
            },
            Some(spec) => Params {
                mu_e: T::from_f64(params.mu_e),
                bias: T::from_f64(spec.sigma_bias_sq),
                task: Task::LinReg { d: spec.d as u64 },
            },
        }
    }

    pub fn mean(mu_e: T, sigma_sq: T) -> Self {
        Params {
            mu_e,
            bias: sigma_sq,
            task: Task::Mean,
        }
    }

    /// Variance multiplier of a player's own estimate per unit `μ_e`.
    pub fn multiplier(&self, n: u64) -> T {
        match self.task {
            Task::Mean => T::one() / T::from_count(n),
            Task::LinReg { d } => T::from_count(d) / T::from_count(n - d - 1),
        }
    }

    /// Total error of a player's local estimate as seen by another player:
    /// `V_i = bias + μ_e·m_i`.
    pub fn spread(&self, n: u64) -> T {
        self.bias.clone() + self.mu_e.clone() * self.multiplier(n)
    }
}

/// Running sums over the non-target members of a coalition.
#[derive(Debug, Clone, PartialEq)]
pub struct Pool<T> {
    pub count: u64,
    pub total: T,
    pub sq: T,
    pub sq_mult: T,
    pub inv_v: T,
    pub mult_over_v2: T,
    pub inv_v2: T,
}

impl<T: Scalar> Pool<T> {
    pub fn empty() -> Self {
        Pool {
            count: 0,
            total: T::zero(),
            sq: T::zero(),
            sq_mult: T::zero(),
            inv_v: T::zero(),
            mult_over_v2: T::zero(),
            inv_v2: T::zero(),
        }
    }

    /// Adds `copies` players with `n` samples each.
    pub fn add(&mut self, params: &Params<T>, n: u64, copies: u64) {
        if copies == 0 {
            return;
        }
        let k = T::from_count(copies);
        let nt = T::from_count(n);
        let m = params.multiplier(n);
        let v = params.spread(n);
        let inv_v = T::one() / v;
        let inv_v2 = inv_v.square();
        self.count += copies;
        self.total = self.total.clone() + k.clone() * nt.clone();
        self.sq = self.sq.clone() + k.clone() * nt.square();
        self.sq_mult = self.sq_mult.clone() + k.clone() * nt.square() * m.clone();
        self.inv_v = self.inv_v.clone() + k.clone() * inv_v;
        self.mult_over_v2 = self.mult_over_v2.clone() + k.clone() * m * inv_v2.clone();
        self.inv_v2 = self.inv_v2.clone() + k * inv_v2;
    }

    pub fn from_counts(params: &Params<T>, counts: impl IntoIterator<Item = u64>) -> Self {
        let mut pool = Pool::empty();
        for n in counts {
            pool.add(params, n, 1);
        }
        pool
    }

    /// `B = Σ_{i≠j} n_i² + (N - n_j)²`.
    pub fn bias_mass(&self) -> T {
        self.sq.clone() + self.total.square()
    }
}

/// Quantities shared by the uniform and coarse formulas.
pub(crate) struct Federated<T> {
    pub n_total: T,
    /// Variance of the coalition average per unit `μ_e`.
    pub avg_mult: T,
    /// `B / N²`.
    pub bias_share: T,
    /// `n_j / N`.
    pub own_share: T,
}

pub(crate) fn federated<T: Scalar>(params: &Params<T>, n_j: u64, others: &Pool<T>) -> Federated<T> {
    let nj = T::from_count(n_j);
    let n_total = nj.clone() + others.total.clone();
    let n_sq = n_total.square();
    let avg_mult = (nj.square() * params.multiplier(n_j) + others.sq_mult.clone()) / n_sq.clone();
    Federated {
        bias_share: others.bias_mass() / n_sq,
        own_share: nj / n_total.clone(),
        n_total,
        avg_mult,
    }
}

pub fn local<T: Scalar>(params: &Params<T>, n_j: u64) -> T {
    params.mu_e.clone() * params.multiplier(n_j)
}

pub fn uniform<T: Scalar>(params: &Params<T>, n_j: u64, others: &Pool<T>) -> T {
    if others.count == 0 {
        return local(params, n_j);
    }
    let f = federated(params, n_j, others);
    params.mu_e.clone() * f.avg_mult + params.bias.clone() * f.bias_share
}

/// Error of `w·local + (1-w)·coalition average`.
pub fn coarse<T: Scalar>(params: &Params<T>, n_j: u64, others: &Pool<T>, w: &T) -> T {
    if others.count == 0 {
        return local(params, n_j);
    }
    let f = federated(params, n_j, others);
    let one = T::one();
    let keep = (one.clone() - w.clone()).square();
    let two = one.clone() + one.clone();
    let own = w.square() + two * w.clone() * (one - w.clone()) * f.own_share;
    params.mu_e.clone() * (keep.clone() * f.avg_mult + own * params.multiplier(n_j))
        + keep * f.bias_share * params.bias.clone()
}

/// Error of `Σ_i v_i·local_i` with `v_j = own` and `others` as `(n_i, v_i)`.
pub fn fine<T: Scalar>(
    params: &Params<T>,
    n_j: u64,
    own: &T,
    others: impl IntoIterator<Item = (u64, T)>,
) -> T {
    let mut variance = own.square() * params.multiplier(n_j);
    let mut sq = T::zero();
    let mut sum = T::zero();
    for (n, v) in others {
        variance = variance + v.square() * params.multiplier(n);
        sq = sq + v.square();
        sum = sum + v;
    }
    params.mu_e.clone() * variance + params.bias.clone() * (sq + sum.square())
}

/// How each member of a coalition forms its estimate, in a numeric backend.
///
/// Explicit fine rows are tied to a single coalition and are handled only by
/// [`ErrorModel::player_errors`].
#[derive(Debug, Clone, PartialEq)]
pub enum Rule<T> {
    Local,
    Uniform,
    Coarse(Vec<T>),
    CoarseOptimal,
    FineOptimal,
}

impl<T: Scalar> Rule<T> {
    pub fn from_scheme(scheme: &FederationScheme) -> Result<Self> {
        Ok(match scheme {
            FederationScheme::Local => Rule::Local,
            FederationScheme::Uniform => Rule::Uniform,
            FederationScheme::Coarse(w) => {
                if let Some(&bad) = w.iter().find(|w| !(0.0..=1.0).contains(*w)) {
                    return Err(GameError::InvalidWeight(bad));
                }
                Rule::Coarse(w.iter().map(|&w| T::from_f64(w)).collect())
            }
            FederationScheme::CoarseOptimal => Rule::CoarseOptimal,
            FederationScheme::FineOptimal => Rule::FineOptimal,
            FederationScheme::Fine(_) => {
                return Err(GameError::SchemeNotApplicable {
                    scheme: scheme.name().into(),
                    reason: "explicit fine rows only describe the current coalitions".into(),
                })
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Rule::Local => "local",
            Rule::Uniform => "uniform",
            Rule::Coarse(_) => "coarse",
            Rule::CoarseOptimal => "coarse-optimal",
            Rule::FineOptimal => "fine-optimal",
        }
    }

    /// Error of a target with `n_j` samples; `player` selects its coarse weight.
    pub fn error(&self, params: &Params<T>, player: usize, n_j: u64, others: &Pool<T>) -> T {
        match self {
            Rule::Local => local(params, n_j),
            Rule::Uniform => uniform(params, n_j, others),
            Rule::Coarse(w) => coarse(params, n_j, others, &w[player]),
            Rule::CoarseOptimal => weights::optimal_coarse_pool(params, n_j, others),
            Rule::FineOptimal => weights::optimal_fine_pool(params, n_j, others),
        }
    }
}

/// Expected error of every player in every partition.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub errors: Vec<f64>,
}

impl ErrorReport {
    pub fn get(&self, player: usize) -> f64 {
        self.errors[player]
    }
}

/// A labeled population bound to a numeric backend.
#[derive(Debug, Clone)]
pub struct ErrorModel<T> {
    pub params: Params<T>,
    pub samples: Vec<u64>,
}

pub type ExactModel = ErrorModel<Rational>;

impl<T: Scalar> ErrorModel<T> {
    pub fn from_config(config: &GameConfig) -> Result<Self> {
        config.validate()?;
        Ok(ErrorModel {
            params: Params::from_model(&config.params()),
            samples: config.players.clone(),
        })
    }

    /// A model with parameters already in the backend, e.g. exact rationals.
    pub fn with_params(params: Params<T>, samples: Vec<u64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(GameError::EmptyPopulation);
        }
        if params.mu_e <= T::zero() {
            return Err(GameError::InvalidMuE(params.mu_e.to_float()));
        }
        if params.bias < T::zero() {
            return Err(GameError::InvalidSigmaSq(params.bias.to_float()));
        }
        for (player, &n) in samples.iter().enumerate() {
            if n == 0 {
                return Err(GameError::ZeroSamples { player });
            }
            if let Task::LinReg { d } = params.task {
                if n <= d + 1 {
                    return Err(GameError::TooFewSamples {
                        player,
                        n,
                        d: d as usize,
                    });
                }
            }
        }
        Ok(ErrorModel { params, samples })
    }

    pub fn num_players(&self) -> usize {
        self.samples.len()
    }

    /// The pool of `c` without `j`; fails unless `j ∈ c` and `c` is in range.
    pub fn pool(&self, j: usize, c: &Coalition) -> Result<Pool<T>> {
        self.check_coalition(c)?;
        if !c.contains(j) {
            return Err(GameError::not_in(j, c));
        }
        Ok(Pool::from_counts(
            &self.params,
            c.members().iter().filter(|&&i| i != j).map(|&i| self.samples[i]),
        ))
    }

    /// Pool for a coalition given as a bitmask; `j` must be a member.
    pub(crate) fn pool_of_mask(&self, j: usize, mask: u64) -> Pool<T> {
        let mut rest = mask & !(1 << j);
        let mut pool = Pool::empty();
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            pool.add(&self.params, self.samples[i], 1);
            rest &= rest - 1;
        }
        pool
    }

    fn check_coalition(&self, c: &Coalition) -> Result<()> {
        let players = self.num_players();
        match c.members().last() {
            Some(&last) if last >= players => Err(GameError::PlayerOutOfRange { player: last, players }),
            _ => Ok(()),
        }
    }

    fn check_player(&self, j: usize) -> Result<()> {
        if j >= self.num_players() {
            return Err(GameError::PlayerOutOfRange {
                player: j,
                players: self.num_players(),
            });
        }
        Ok(())
    }

    pub fn local(&self, j: usize) -> Result<T> {
        self.check_player(j)?;
        Ok(local(&self.params, self.samples[j]))
    }

    pub fn uniform(&self, j: usize, c: &Coalition) -> Result<T> {
        let pool = self.pool(j, c)?;
        Ok(uniform(&self.params, self.samples[j], &pool))
    }

    pub fn coarse(&self, j: usize, c: &Coalition, w: &T) -> Result<T> {
        if *w < T::zero() || *w > T::one() {
            return Err(GameError::InvalidWeight(w.to_float()));
        }
        let pool = self.pool(j, c)?;
        Ok(coarse(&self.params, self.samples[j], &pool, w))
    }

    /// `row` is aligned with the sorted members of `c`.
    pub fn fine(&self, j: usize, c: &Coalition, row: &[T]) -> Result<T> {
        self.pool(j, c)?;
        if row.len() != c.len() {
            return Err(GameError::MalformedWeightRow(format!(
                "expected {} entries, got {}",
                c.len(),
                row.len()
            )));
        }
        let at = c.position(j).expect("membership checked");
        let others = c
            .members()
            .iter()
            .zip(row)
            .filter(|(&i, _)| i != j)
            .map(|(&i, v)| (self.samples[i], v.clone()));
        Ok(fine(&self.params, self.samples[j], &row[at], others))
    }

    pub fn error(&self, j: usize, c: &Coalition, rule: &Rule<T>) -> Result<T> {
        if let Rule::Coarse(w) = rule {
            if w.len() != self.num_players() {
                return Err(GameError::SchemeNotApplicable {
                    scheme: "coarse".into(),
                    reason: format!("expected {} weights, got {}", self.num_players(), w.len()),
                });
            }
        }
        let pool = self.pool(j, c)?;
        Ok(rule.error(&self.params, j, self.samples[j], &pool))
    }

    /// Every player's error inside its own coalition of `p`.
    pub fn player_errors(&self, p: &Partition, scheme: &FederationScheme) -> Result<Vec<T>> {
        if p.num_players() != self.num_players() {
            return Err(GameError::InvalidPartition(format!(
                "partition covers {} players, population has {}",
                p.num_players(),
                self.num_players()
            )));
        }
        scheme.validate_for(p)?;
        (0..self.num_players())
            .map(|j| {
                let c = p.coalition_of(j);
                match scheme {
                    FederationScheme::Fine(rows) => {
                        let row: Vec<T> = rows[j].iter().map(|&v| T::from_f64(v)).collect();
                        self.fine(j, c, &row)
                    }
                    _ => self.error(j, c, &Rule::from_scheme(scheme)?),
                }
            })
            .collect()
    }
}

/// Errors of small and large members of coalition profiles in a two-size game.
#[derive(Debug, Clone)]
pub struct ProfileErrors<T> {
    pub params: Params<T>,
    pub game: TwoSizeGame,
    pub rule: Rule<T>,
}

impl<T: Scalar> ProfileErrors<T> {
    pub fn new(params: Params<T>, game: TwoSizeGame, rule: Rule<T>) -> Result<Self> {
        game.validate()?;
        if let Rule::Coarse(_) = rule {
            return Err(GameError::SchemeNotApplicable {
                scheme: "coarse".into(),
                reason: "two-size analyses need a weight rule that depends only on sample counts".into(),
            });
        }
        if let Task::LinReg { d } = params.task {
            if game.n_s <= d + 1 {
                return Err(GameError::TooFewSamples {
                    player: 0,
                    n: game.n_s,
                    d: d as usize,
                });
            }
        }
        Ok(ProfileErrors { params, game, rule })
    }

    fn others(&self, small: usize, large: usize) -> Pool<T> {
        let mut pool = Pool::empty();
        pool.add(&self.params, self.game.n_s, small as u64);
        pool.add(&self.params, self.game.n_l, large as u64);
        pool
    }

    /// Error of a small player in `π(s,ℓ)`; `None` when `s = 0`.
    pub fn small(&self, p: Profile) -> Option<T> {
        (p.small >= 1).then(|| {
            let pool = self.others(p.small - 1, p.large);
            self.rule.error(&self.params, 0, self.game.n_s, &pool)
        })
    }

    /// Error of a large player in `π(s,ℓ)`; `None` when `ℓ = 0`.
    pub fn large(&self, p: Profile) -> Option<T> {
        (p.large >= 1).then(|| {
            let pool = self.others(p.small, p.large - 1);
            self.rule.error(&self.params, 0, self.game.n_l, &pool)
        })
    }
}

fn float_model(config: &GameConfig) -> Result<ErrorModel<f64>> {
    ErrorModel::from_config(config)
}

pub fn mse_local(j: usize, config: &GameConfig) -> Result<f64> {
    float_model(config)?.local(j)
}

pub fn mse_uniform(j: usize, c: &Coalition, config: &GameConfig) -> Result<f64> {
    float_model(config)?.uniform(j, c)
}

pub fn mse_coarse(j: usize, c: &Coalition, w: f64, config: &GameConfig) -> Result<f64> {
    if !(0.0..=1.0).contains(&w) {
        return Err(GameError::InvalidWeight(w));
    }
    float_model(config)?.coarse(j, c, &w)
}

pub fn mse_fine(j: usize, c: &Coalition, row: &[f64], config: &GameConfig) -> Result<f64> {
    check_fine_row(row, c.len())?;
    float_model(config)?.fine(j, c, row)
}

/// Linear-regression error under an explicitly weighted scheme.
pub fn mse_linreg(j: usize, c: &Coalition, scheme: &FederationScheme, config: &GameConfig) -> Result<f64> {
    if config.linreg.is_none() {
        return Err(GameError::MissingLinReg);
    }
    match scheme {
        FederationScheme::Local => mse_local(j, config),
        FederationScheme::Uniform => mse_uniform(j, c, config),
        FederationScheme::Coarse(w) => {
            let w = *w.get(j).ok_or_else(|| GameError::SchemeNotApplicable {
                scheme: "coarse".into(),
                reason: format!("no weight for player {j}"),
            })?;
            mse_coarse(j, c, w, config)
        }
        FederationScheme::Fine(rows) => {
            let row = rows.get(j).ok_or_else(|| {
                GameError::MalformedWeightRow(format!("no row for player {j}"))
            })?;
            mse_fine(j, c, row, config)
        }
        FederationScheme::CoarseOptimal | FederationScheme::FineOptimal => Err(GameError::SchemeNotApplicable {
            scheme: scheme.name().into(),
            reason: "expects explicit weights".into(),
        }),
    }
}

pub fn player_errors(p: &Partition, scheme: &FederationScheme, config: &GameConfig) -> Result<ErrorReport> {
    let errors = float_model(config)?.player_errors(p, scheme)?;
    Ok(ErrorReport { errors })
}
