//! Optimal personalization weights and the errors they achieve.
//!
//! The formulas are the exact minimizers of the coarse and fine error
//! expressions in [`crate::mse`]. With the linear-regression multiplier they
//! are still exact; the coarse weight is clamped to `[0, 1]` because a player
//! whose own estimate is noisier per sample than the average can otherwise
//! ask for a negative weight.

use crate::error::Result;
use crate::model::{Coalition, FederationScheme, GameConfig};
use crate::mse::{self, federated, ErrorModel, Params, Pool, Task};
use crate::scalar::Scalar;

/// Error-minimizing blend weight on the local estimate.
pub fn optimal_w_pool<T: Scalar>(params: &Params<T>, n_j: u64, others: &Pool<T>) -> T {
    if others.count == 0 {
        return T::one();
    }
    let f = federated(params, n_j, others);
    let bias = others.bias_mass() * params.bias.clone();
    if let Task::Mean = params.task {
        let nj = T::from_count(n_j);
        let gap = T::one() / nj - T::one() / f.n_total.clone();
        return bias.clone() / (params.mu_e.clone() * f.n_total.square() * gap + bias);
    }
    let shared = params.mu_e.clone() * f.avg_mult + params.bias.clone() * f.bias_share;
    let own = params.mu_e.clone() * params.multiplier(n_j);
    let one = T::one();
    let numerator = shared.clone() - own.clone() * f.own_share.clone();
    let denominator = shared + own * (one.clone() - f.own_share.clone() - f.own_share);
    clamp_unit(numerator / denominator)
}

fn clamp_unit<T: Scalar>(x: T) -> T {
    if x < T::zero() {
        T::zero()
    } else if x > T::one() {
        T::one()
    } else {
        x
    }
}

/// Coarse error at the optimal weight.
pub fn optimal_coarse_pool<T: Scalar>(params: &Params<T>, n_j: u64, others: &Pool<T>) -> T {
    if others.count == 0 {
        return mse::local(params, n_j);
    }
    match params.task {
        Task::Mean => {
            let nj = T::from_count(n_j);
            let rest = others.total.clone();
            let n_total = nj.clone() + rest.clone();
            let bias = others.bias_mass() * params.bias.clone();
            (params.mu_e.clone() * rest.clone() + bias.clone())
                / (rest * n_total + nj * bias / params.mu_e.clone())
        }
        Task::LinReg { .. } => {
            let w = optimal_w_pool(params, n_j, others);
            mse::coarse(params, n_j, others, &w)
        }
    }
}

/// The optimal fine row for a target: `v_jj = own` and `v_k = scale / V_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct FineSolution<T> {
    pub own: T,
    pub scale: T,
}

impl<T: Scalar> FineSolution<T> {
    pub fn weight_of(&self, params: &Params<T>, n_k: u64) -> T {
        self.scale.clone() / params.spread(n_k)
    }
}

pub fn optimal_v_pool<T: Scalar>(params: &Params<T>, n_j: u64, others: &Pool<T>) -> FineSolution<T> {
    if others.count == 0 {
        return FineSolution {
            own: T::one(),
            scale: T::zero(),
        };
    }
    let s = others.inv_v.clone();
    let denom = T::one() + params.spread(n_j) * s.clone();
    FineSolution {
        own: (T::one() + params.bias.clone() * s) / denom.clone(),
        scale: params.mu_e.clone() * params.multiplier(n_j) / denom,
    }
}

/// Fine error at the optimal row.
pub fn optimal_fine_pool<T: Scalar>(params: &Params<T>, n_j: u64, others: &Pool<T>) -> T {
    if others.count == 0 {
        return mse::local(params, n_j);
    }
    let v = optimal_v_pool(params, n_j, others);
    let c2 = v.scale.square();
    let variance = v.own.square() * params.multiplier(n_j) + c2.clone() * others.mult_over_v2.clone();
    let off_sum = v.scale * others.inv_v.clone();
    let bias = c2 * others.inv_v2.clone() + off_sum.square();
    params.mu_e.clone() * variance + params.bias.clone() * bias
}

/// Optimal fine weights of one target player over a coalition.
#[derive(Debug, Clone, PartialEq)]
pub struct FineWeights {
    pub target: usize,
    pub members: Vec<usize>,
    pub row: Vec<f64>,
}

impl FineWeights {
    pub fn get(&self, player: usize) -> Option<f64> {
        self.members.iter().position(|&i| i == player).map(|k| self.row[k])
    }
}

impl<T: Scalar> ErrorModel<T> {
    pub fn optimal_w(&self, j: usize, c: &Coalition) -> Result<T> {
        let pool = self.pool(j, c)?;
        Ok(optimal_w_pool(&self.params, self.samples[j], &pool))
    }

    pub fn optimal_coarse(&self, j: usize, c: &Coalition) -> Result<T> {
        let pool = self.pool(j, c)?;
        Ok(optimal_coarse_pool(&self.params, self.samples[j], &pool))
    }

    /// Optimal fine row aligned with the sorted members of `c`.
    pub fn optimal_v(&self, j: usize, c: &Coalition) -> Result<Vec<T>> {
        let pool = self.pool(j, c)?;
        let solution = optimal_v_pool(&self.params, self.samples[j], &pool);
        Ok(c.members()
            .iter()
            .map(|&i| {
                if i == j {
                    solution.own.clone()
                } else {
                    solution.weight_of(&self.params, self.samples[i])
                }
            })
            .collect())
    }

    pub fn optimal_fine(&self, j: usize, c: &Coalition) -> Result<T> {
        let pool = self.pool(j, c)?;
        Ok(optimal_fine_pool(&self.params, self.samples[j], &pool))
    }
}

fn float_model(config: &GameConfig) -> Result<ErrorModel<f64>> {
    ErrorModel::from_config(config)
}

pub fn optimal_w(j: usize, c: &Coalition, config: &GameConfig) -> Result<f64> {
    float_model(config)?.optimal_w(j, c)
}

pub fn optimal_coarse_mse(j: usize, c: &Coalition, config: &GameConfig) -> Result<f64> {
    float_model(config)?.optimal_coarse(j, c)
}

pub fn optimal_v(j: usize, c: &Coalition, config: &GameConfig) -> Result<FineWeights> {
    let row = float_model(config)?.optimal_v(j, c)?;
    Ok(FineWeights {
        target: j,
        members: c.members().to_vec(),
        row,
    })
}

pub fn optimal_fine_mse(j: usize, c: &Coalition, config: &GameConfig) -> Result<f64> {
    float_model(config)?.optimal_fine(j, c)
}

/// Replaces an optimal scheme by the explicit weights it gives target `j`
/// in coalition `c`. Entries for other players are left at pure local
/// learning; only the target's weights are meaningful.
pub fn resolve_for(j: usize, c: &Coalition, scheme: &FederationScheme, config: &GameConfig) -> Result<FederationScheme> {
    let m = config.num_players();
    Ok(match scheme {
        FederationScheme::CoarseOptimal => {
            let mut w = vec![1.0; m];
            w[j] = optimal_w(j, c, config)?;
            FederationScheme::Coarse(w)
        }
        FederationScheme::FineOptimal => {
            let mut rows = vec![vec![1.0]; m];
            rows[j] = optimal_v(j, c, config)?.row;
            FederationScheme::Fine(rows)
        }
        other => other.clone(),
    })
}
