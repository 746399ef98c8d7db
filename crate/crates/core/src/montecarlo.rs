//! Empirical expected errors by simulating the full generative process.
//!
//! Each trial draws fresh true parameters, noise levels and samples for every
//! coalition member, fits the local estimators and combines them with the
//! scheme's weights. Trials use independent random substreams keyed by the
//! trial index, so results do not depend on thread scheduling.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GameError, Result};
use crate::model::{Coalition, FederationScheme, GameConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ThetaFamily {
    #[default]
    Gaussian,
    Uniform,
    /// A unit-shape lognormal shifted to its mean and rescaled.
    LognormalCentered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum EpsilonRule {
    /// Every player's noise variance is exactly `μ_e`.
    #[default]
    Constant,
    /// Gamma with shape 2 and mean `μ_e`.
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum SampleFamily {
    #[default]
    Gaussian,
    Uniform,
}

/// The generating distributions; variances come from the game config.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct DistributionSpec {
    pub theta_family: ThetaFamily,
    pub theta_mean: f64,
    pub epsilon_rule: EpsilonRule,
    pub sample_family: SampleFamily,
    /// Per-dimension coefficient variances for linear regression; an even
    /// split of `sigma_bias_sq` when absent.
    pub coefficient_variances: Option<Vec<f64>>,
}

impl DistributionSpec {
    pub fn validate(&self) -> Result<()> {
        if !self.theta_mean.is_finite() {
            return Err(GameError::InvalidDistribution(format!(
                "theta_mean must be finite, got {}",
                self.theta_mean
            )));
        }
        if let Some(v) = &self.coefficient_variances {
            if let Some(bad) = v.iter().find(|x| !(x.is_finite() && **x >= 0.0)) {
                return Err(GameError::InvalidDistribution(format!(
                    "coefficient variance {bad} is not a non-negative finite number"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialPlan {
    pub trials: u64,
    pub seed: u64,
}

impl TrialPlan {
    pub fn new(trials: u64, seed: u64) -> Result<Self> {
        if trials == 0 {
            return Err(GameError::InvalidDistribution("trials must be at least 1".into()));
        }
        Ok(TrialPlan { trials, seed })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub trials: u64,
    /// Trials redrawn because a least-squares fit was singular.
    pub resamples: u64,
}

impl McEstimate {
    /// Distance from `value` in units of standard error.
    pub fn z_score(&self, value: f64) -> f64 {
        (self.mean - value).abs() / self.std_error
    }
}

/// Weights that target `j` puts on each member of `c`, in member order.
pub fn combination_row(j: usize, c: &Coalition, scheme: &FederationScheme, config: &GameConfig) -> Result<Vec<f64>> {
    if !c.contains(j) {
        return Err(GameError::not_in(j, c));
    }
    let counts: Vec<f64> = c.members().iter().map(|&i| config.players[i] as f64).collect();
    let total: f64 = counts.iter().sum();
    let own = |w: f64| -> Vec<f64> {
        c.members()
            .iter()
            .zip(&counts)
            .map(|(&i, n)| (1.0 - w) * n / total + if i == j { w } else { 0.0 })
            .collect()
    };
    match scheme {
        FederationScheme::Local => Ok(own(1.0)),
        FederationScheme::Uniform => Ok(own(0.0)),
        FederationScheme::Coarse(w) => {
            let w = *w.get(j).ok_or_else(|| GameError::SchemeNotApplicable {
                scheme: "coarse".into(),
                reason: format!("no weight for player {j}"),
            })?;
            if !(0.0..=1.0).contains(&w) {
                return Err(GameError::InvalidWeight(w));
            }
            Ok(own(w))
        }
        FederationScheme::Fine(rows) => {
            let row = rows
                .get(j)
                .ok_or_else(|| GameError::MalformedWeightRow(format!("no row for player {j}")))?;
            crate::model::check_fine_row(row, c.len())?;
            Ok(row.clone())
        }
        FederationScheme::CoarseOptimal | FederationScheme::FineOptimal => Err(GameError::SchemeNotApplicable {
            scheme: scheme.name().into(),
            reason: "resolve optimal weights before simulating".into(),
        }),
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    StandardNormal.sample(rng)
}

/// Zero-mean, unit-variance uniform draw.
fn unit_uniform(rng: &mut ChaCha8Rng) -> f64 {
    3f64.sqrt() * (2.0 * rng.random::<f64>() - 1.0)
}

fn draw_theta(rng: &mut ChaCha8Rng, family: ThetaFamily, mean: f64, variance: f64) -> f64 {
    let sd = variance.sqrt();
    mean + sd * match family {
        ThetaFamily::Gaussian => standard_normal(rng),
        ThetaFamily::Uniform => unit_uniform(rng),
        ThetaFamily::LognormalCentered => {
            let e = std::f64::consts::E;
            let spread = ((e - 1.0) * e).sqrt();
            (standard_normal(rng).exp() - e.sqrt()) / spread
        }
    }
}

fn draw_epsilon(rng: &mut ChaCha8Rng, rule: EpsilonRule, mu_e: f64) -> f64 {
    match rule {
        EpsilonRule::Constant => mu_e,
        EpsilonRule::Gamma => Gamma::new(2.0, mu_e / 2.0).expect("positive gamma parameters").sample(rng),
    }
}

fn draw_noise(rng: &mut ChaCha8Rng, family: SampleFamily, variance: f64) -> f64 {
    let sd = variance.sqrt();
    sd * match family {
        SampleFamily::Gaussian => standard_normal(rng),
        SampleFamily::Uniform => unit_uniform(rng),
    }
}

/// Sums in a fixed binary tree so the result depends only on the input order.
fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 32 {
        return xs.iter().sum();
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

fn summarize(losses: &[f64], resamples: u64) -> McEstimate {
    let n = losses.len() as f64;
    let mean = pairwise_sum(losses) / n;
    let deviations: Vec<f64> = losses.iter().map(|x| (x - mean) * (x - mean)).collect();
    let variance = if losses.len() > 1 {
        pairwise_sum(&deviations) / (n - 1.0)
    } else {
        0.0
    };
    McEstimate {
        mean,
        std_error: (variance / n).sqrt(),
        trials: losses.len() as u64,
        resamples,
    }
}

/// Empirical squared error of player `j`'s combined mean estimate.
pub fn empirical_mse_mean(
    config: &GameConfig,
    c: &Coalition,
    scheme: &FederationScheme,
    j: usize,
    dist: &DistributionSpec,
    plan: &TrialPlan,
) -> Result<McEstimate> {
    config.validate()?;
    dist.validate()?;
    TrialPlan::new(plan.trials, plan.seed)?;
    let row = combination_row(j, c, scheme, config)?;
    let members: Vec<(u64, f64)> = c.members().iter().map(|&i| config.players[i]).zip(row).collect();
    let target = c.position(j).expect("membership checked");
    let losses: Vec<f64> = (0..plan.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(plan.seed, trial);
            let mut estimate = 0.0;
            let mut truth = 0.0;
            for (k, &(n, weight)) in members.iter().enumerate() {
                let theta = draw_theta(&mut rng, dist.theta_family, dist.theta_mean, config.sigma_sq);
                let eps = draw_epsilon(&mut rng, dist.epsilon_rule, config.mu_e);
                let total: f64 = (0..n).map(|_| theta + draw_noise(&mut rng, dist.sample_family, eps)).sum();
                estimate += weight * total / n as f64;
                if k == target {
                    truth = theta;
                }
            }
            (estimate - truth).powi(2)
        })
        .collect();
    Ok(summarize(&losses, 0))
}

/// Least squares through a thin QR factorization; `None` if rank deficient.
fn least_squares(x: &DMatrix<f64>, y: &DVector<f64>) -> Option<DVector<f64>> {
    let qr = x.clone().qr();
    let r = qr.r();
    let scale = r.diagonal().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 || r.diagonal().iter().any(|v| v.abs() <= 1e-12 * scale) {
        return None;
    }
    let qty = qr.q().transpose() * y;
    r.solve_upper_triangular(&qty)
}

/// Empirical squared prediction error of player `j`'s combined regression
/// model at a fresh standard-normal test point.
pub fn empirical_mse_linreg(
    config: &GameConfig,
    c: &Coalition,
    scheme: &FederationScheme,
    j: usize,
    dist: &DistributionSpec,
    plan: &TrialPlan,
) -> Result<McEstimate> {
    config.validate()?;
    dist.validate()?;
    TrialPlan::new(plan.trials, plan.seed)?;
    let spec = config.linreg.ok_or(GameError::MissingLinReg)?;
    let d = spec.d;
    let variances = match &dist.coefficient_variances {
        Some(v) => {
            let sum: f64 = v.iter().sum();
            if v.len() != d || (sum - spec.sigma_bias_sq).abs() > 1e-9 * spec.sigma_bias_sq.max(1.0) {
                return Err(GameError::InvalidDistribution(format!(
                    "expected {d} coefficient variances summing to {}",
                    spec.sigma_bias_sq
                )));
            }
            v.clone()
        }
        None => vec![spec.sigma_bias_sq / d as f64; d],
    };
    let row = combination_row(j, c, scheme, config)?;
    let members: Vec<(usize, f64)> = c.members().iter().map(|&i| config.players[i] as usize).zip(row).collect();
    let target = c.position(j).expect("membership checked");
    let outcomes: Vec<(f64, u64)> = (0..plan.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(plan.seed, trial);
            let mut resamples = 0;
            loop {
                let mut combined = DVector::<f64>::zeros(d);
                let mut truth = DVector::<f64>::zeros(d);
                let mut singular = false;
                for (k, &(n, weight)) in members.iter().enumerate() {
                    let theta = DVector::from_iterator(
                        d,
                        variances
                            .iter()
                            .map(|&v| draw_theta(&mut rng, dist.theta_family, dist.theta_mean, v))
                            .collect::<Vec<_>>(),
                    );
                    let eps = draw_epsilon(&mut rng, dist.epsilon_rule, config.mu_e);
                    let x = DMatrix::from_fn(n, d, |_, _| standard_normal(&mut rng));
                    let clean = &x * &theta;
                    let y = DVector::from_fn(n, |i, _| clean[i] + draw_noise(&mut rng, dist.sample_family, eps));
                    match least_squares(&x, &y) {
                        Some(fit) => combined += fit * weight,
                        None => singular = true,
                    }
                    if k == target {
                        truth = theta;
                    }
                }
                if singular {
                    resamples += 1;
                    continue;
                }
                let test = DVector::from_fn(d, |_, _| standard_normal(&mut rng));
                let gap = test.dot(&(combined - truth));
                return (gap * gap, resamples);
            }
        })
        .collect();
    let losses: Vec<f64> = outcomes.iter().map(|o| o.0).collect();
    let resamples = outcomes.iter().map(|o| o.1).sum();
    Ok(summarize(&losses, resamples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::LinRegSpec;

    #[test]
    fn rows_for_explicit_schemes() {
        let cfg = GameConfig::new(vec![10, 30], 10.0, 1.0).unwrap();
        let c = Coalition::grand(2);
        assert_eq!(combination_row(0, &c, &FederationScheme::Local, &cfg).unwrap(), vec![1.0, 0.0]);
        assert_eq!(combination_row(0, &c, &FederationScheme::Uniform, &cfg).unwrap(), vec![0.25, 0.75]);
        let row = combination_row(1, &c, &FederationScheme::Coarse(vec![0.0, 0.5]), &cfg).unwrap();
        assert_eq!(row, vec![0.125, 0.875]);
        assert!(combination_row(0, &c, &FederationScheme::FineOptimal, &cfg).is_err());
    }

    #[test]
    fn pairwise_sum_matches_naive_on_integers() {
        let xs: Vec<f64> = (1..=1000).map(f64::from).collect();
        assert_eq!(pairwise_sum(&xs), 500_500.0);
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let cfg = GameConfig::new(vec![5, 5, 5], 10.0, 1.0).unwrap();
        let c = Coalition::grand(3);
        let plan = TrialPlan::new(2000, 7).unwrap();
        let dist = DistributionSpec::default();
        let a = empirical_mse_mean(&cfg, &c, &FederationScheme::Uniform, 0, &dist, &plan).unwrap();
        let b = empirical_mse_mean(&cfg, &c, &FederationScheme::Uniform, 0, &dist, &plan).unwrap();
        assert_eq!(a, b);
        let other = TrialPlan::new(2000, 8).unwrap();
        let c2 = empirical_mse_mean(&cfg, &c, &FederationScheme::Uniform, 0, &dist, &other).unwrap();
        assert_ne!(a.mean, c2.mean);
    }

    #[test]
    fn local_mean_estimate_is_close() {
        let cfg = GameConfig::new(vec![5], 10.0, 1.0).unwrap();
        let plan = TrialPlan::new(20_000, 1).unwrap();
        let e = empirical_mse_mean(
            &cfg,
            &Coalition::singleton(0),
            &FederationScheme::Local,
            0,
            &DistributionSpec::default(),
            &plan,
        )
        .unwrap();
        assert!(e.z_score(2.0) < 4.0, "{e:?}");
    }

    #[test]
    fn linreg_local_estimate_is_close() {
        let cfg = GameConfig::new(vec![30], 10.0, 1.0)
            .unwrap()
            .with_linreg(LinRegSpec { d: 3, sigma_bias_sq: 1.0 })
            .unwrap();
        let plan = TrialPlan::new(20_000, 3).unwrap();
        let e = empirical_mse_linreg(
            &cfg,
            &Coalition::singleton(0),
            &FederationScheme::Local,
            0,
            &DistributionSpec::default(),
            &plan,
        )
        .unwrap();
        assert!(e.z_score(30.0 / 26.0) < 4.0, "{e:?}");
    }

    #[test]
    fn bad_coefficient_variances_are_rejected() {
        let cfg = GameConfig::new(vec![30], 10.0, 1.0)
            .unwrap()
            .with_linreg(LinRegSpec { d: 2, sigma_bias_sq: 1.0 })
            .unwrap();
        let dist = DistributionSpec {
            coefficient_variances: Some(vec![0.5, 0.2]),
            ..Default::default()
        };
        let plan = TrialPlan::new(10, 0).unwrap();
        let r = empirical_mse_linreg(&cfg, &Coalition::singleton(0), &FederationScheme::Local, 0, &dist, &plan);
        assert!(matches!(r, Err(GameError::InvalidDistribution(_))));
        assert!(TrialPlan::new(0, 0).is_err());
    }
}
