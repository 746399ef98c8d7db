//! Independent oracles shared by the integration tests.
//!
//! Errors are computed from the covariance matrix of the local estimates'
//! deviations from the target's true parameter.

#![allow(clippy::needless_range_loop)]
#![allow(dead_code)]

/// Estimator variance factor of a local estimate from `n` samples.
pub fn multiplier(n: u64, d: Option<usize>) -> f64 {
    match d {
        None => 1.0 / n as f64,
        Some(d) => d as f64 / (n as f64 - d as f64 - 1.0),
    }
}

/// Covariance of `θ̂_i − θ_j` across members, for target position `t`.
pub fn deviation_covariance(mu_e: f64, beta: f64, mult: &[f64], t: usize) -> Vec<Vec<f64>> {
    let k = mult.len();
    let mut m = vec![vec![0.0; k]; k];
    for i in 0..k {
        for l in 0..k {
            let mut v = 0.0;
            if i == l {
                v += mu_e * mult[i];
            }
            if i != t && l != t {
                v += beta * if i == l { 2.0 } else { 1.0 };
            }
            m[i][l] = v;
        }
    }
    m
}

/// `vᵀ M v`: the expected squared error of the combination `v`.
pub fn quadratic_error(mu_e: f64, beta: f64, mult: &[f64], t: usize, v: &[f64]) -> f64 {
    let m = deviation_covariance(mu_e, beta, mult, t);
    let mut s = 0.0;
    for i in 0..v.len() {
        for l in 0..v.len() {
            s += v[i] * m[i][l] * v[l];
        }
    }
    s
}

/// Weights that give the uniform (`w = 0`) or coarse combination.
pub fn coarse_row(counts: &[u64], t: usize, w: f64) -> Vec<f64> {
    let total: u64 = counts.iter().sum();
    counts
        .iter()
        .enumerate()
        .map(|(i, &n)| (1.0 - w) * n as f64 / total as f64 + if i == t { w } else { 0.0 })
        .collect()
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x
}

/// Minimizer of `vᵀ M v` subject to `Σ v = 1`: `M⁻¹1 / 1ᵀM⁻¹1`.
pub fn lagrange_fine(mu_e: f64, beta: f64, mult: &[f64], t: usize) -> (Vec<f64>, f64) {
    let m = deviation_covariance(mu_e, beta, mult, t);
    let x = solve(m, vec![1.0; mult.len()]);
    let s: f64 = x.iter().sum();
    let v: Vec<f64> = x.iter().map(|x| x / s).collect();
    let err = quadratic_error(mu_e, beta, mult, t, &v);
    (v, err)
}

/// Minimizes `f` on `[lo, hi]` by golden-section search.
pub fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - g * (hi - lo);
    let mut b = lo + g * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    for _ in 0..200 {
        if fa < fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - g * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + g * (hi - lo);
            fb = f(b);
        }
    }
    let x = (lo + hi) / 2.0;
    (x, f(x))
}

/// Signs of successive differences, skipping exact zeros.
pub fn difference_signs(values: &[f64]) -> Vec<i8> {
    values
        .windows(2)
        .filter_map(|w| match w[1].partial_cmp(&w[0]) {
            Some(std::cmp::Ordering::Greater) => Some(1),
            Some(std::cmp::Ordering::Less) => Some(-1),
            _ => None,
        })
        .collect()
}

/// True if the sign sequence is `first…first, then…then` (either part may be empty).
pub fn changes_at_most_once(signs: &[i8], first: i8) -> bool {
    let switch = signs.iter().position(|&s| s != first).unwrap_or(signs.len());
    signs[switch..].iter().all(|&s| s == -first)
}

pub fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}
