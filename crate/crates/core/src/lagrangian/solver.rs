//! Multistart ascent for `λ(G)`.
//!
//! Each run alternates four phases until the point satisfies the KKT
//! conditions on the simplex:
//!
//! 1. replicator ascent `x_i <- x_i λ(E_i, x) / (r λ(G, x))`, which keeps `x`
//!    on the simplex and never lowers the objective;
//! 2. support minimization: drop negligible weights, and for two support
//!    vertices not covered by an edge inside the support move all weight onto
//!    the one with the larger gradient (the objective is linear along that
//!    direction, so nothing is lost);
//! 3. a Newton polish of `λ(E_i, x) = ν, Σ x_i = 1` on the support;
//! 4. a dual feasibility check; a zero-weight vertex whose gradient exceeds
//!    `r λ(G, x)` receives a small injection of weight and the run continues.
//!
//! For left-compressed graphs the weights are also sorted into nonincreasing
//! order, which never lowers the objective.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};
use rayon::prelude::*;

use super::{EdgePolynomial, LagrangianResult, SolverConfig, Weighting};
use crate::error::LagrangianError;
use crate::hypergraph::UniformHypergraph;

/// Weights below this are treated as zero after an ascent run.
const SUPPORT_FLOOR: f64 = 1e-10;
const MAX_ROUNDS: usize = 12;
const INJECTION: f64 = 1e-3;
const NEWTON_STEPS: usize = 30;
/// Rounding slack allowed when accepting a polished point.
const VALUE_SLACK: f64 = 1e-15;

/// Computes `λ(G)` by multistart ascent. Deterministic for a fixed seed and
/// independent of thread scheduling.
pub fn maximize(g: &UniformHypergraph, cfg: &SolverConfig) -> Result<LagrangianResult, LagrangianError> {
    cfg.validate()?;
    let n = g.n();
    if g.is_edgeless() {
        // Any point is optimal; a single vertex has the smallest support.
        let weighting = Weighting::uniform_prefix(n, 1);
        return Ok(LagrangianResult {
            value: 0.0,
            support_size: weighting.support_size(),
            weighting,
            kkt_residual: 0.0,
            restarts_used: 0,
            certified_upper_bound: None,
        });
    }
    let poly = EdgePolynomial::new(g);
    let search = LocalSearch { poly: &poly, cfg, left_compressed: g.is_left_compressed() };

    let runs: Vec<(f64, Vec<f64>)> = (0..cfg.restarts)
        .into_par_iter()
        .map(|k| search.run(start_point(n, g.r(), k, cfg.random_seed)))
        .collect();

    // First strictly larger value wins, so ties go to the lowest restart index.
    let mut best = &runs[0];
    for run in &runs[1..] {
        if run.0 > best.0 {
            best = run;
        }
    }
    let weights = best.1.clone();
    let value = poly.value(&weights);
    let kkt_residual = poly.kkt_residual(&weights);
    let weighting = Weighting::from_raw(weights);
    Ok(LagrangianResult {
        value,
        support_size: weighting.support_size(),
        weighting,
        kkt_residual,
        restarts_used: runs.len(),
        certified_upper_bound: None,
    })
}

/// One replicator update `x_i <- x_i λ(E_i, x) / Σ_j x_j λ(E_j, x)`.
/// Points with `λ(G, x) = 0` are returned unchanged.
pub fn replicator_step(g: &UniformHypergraph, x: &Weighting) -> Result<Weighting, LagrangianError> {
    if x.len() != g.n() {
        return Err(LagrangianError::LengthMismatch { expected: g.n(), found: x.len() });
    }
    let poly = EdgePolynomial::new(g);
    let mut grad = vec![0.0; g.n()];
    let value = poly.value_and_gradient(x.as_slice(), &mut grad);
    if value <= 0.0 {
        return Ok(x.clone());
    }
    let mut next = vec![0.0; g.n()];
    replicate(x.as_slice(), &grad, &mut next);
    Ok(Weighting::from_raw(next))
}

fn replicate(x: &[f64], grad: &[f64], out: &mut [f64]) {
    let total: f64 = x.iter().zip(grad).map(|(a, b)| a * b).sum();
    for ((o, a), b) in out.iter_mut().zip(x).zip(grad) {
        *o = a * b / total;
    }
}

/// Restart `k`: uniform prefixes `[n], [n-1], ..., [r]` first, then
/// Dirichlet(1, ..., 1) samples from the stream `(seed, k)`.
fn start_point(n: usize, r: usize, k: usize, seed: u64) -> Vec<f64> {
    let structured = n + 1 - r.min(n);
    if k < structured {
        return Weighting::uniform_prefix(n, n - k).into_vec();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    let raw: Vec<f64> = (0..n).map(|_| Exp1.sample(&mut rng)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|w: f64| w / total).collect()
}

struct LocalSearch<'a> {
    poly: &'a EdgePolynomial,
    cfg: &'a SolverConfig,
    left_compressed: bool,
}

impl LocalSearch<'_> {
    fn run(&self, mut x: Vec<f64>) -> (f64, Vec<f64>) {
        let mut best = (self.poly.value(&x), x.clone());
        for _ in 0..MAX_ROUNDS {
            self.ascend(&mut x);
            self.minimize_support(&mut x);
            self.polish(&mut x);
            let moved = self.left_compressed && sort_nonincreasing(&mut x);
            let value = self.poly.value(&x);
            if value > best.0 {
                best = (value, x.clone());
            }
            if moved {
                continue;
            }
            match self.worst_dual_violation(&x) {
                Some(i) => {
                    x.iter_mut().for_each(|w| *w *= 1.0 - INJECTION);
                    x[i] += INJECTION;
                }
                None => break,
            }
        }
        best
    }

    fn ascend(&self, x: &mut Vec<f64>) {
        let n = x.len();
        let mut grad = vec![0.0; n];
        let mut next = vec![0.0; n];
        let mut next_grad = vec![0.0; n];
        let mut value = self.poly.value_and_gradient(x, &mut grad);
        for _ in 0..self.cfg.max_iterations {
            if value <= 0.0 {
                self.escape_zero(x, &grad);
                value = self.poly.value_and_gradient(x, &mut grad);
                continue;
            }
            replicate(x, &grad, &mut next);
            let next_value = self.poly.value_and_gradient(&next, &mut next_grad);
            if next_value < value {
                // Only rounding can lower the value; the run has converged.
                break;
            }
            std::mem::swap(x, &mut next);
            std::mem::swap(&mut grad, &mut next_grad);
            let gain = next_value - value;
            value = next_value;
            if gain <= self.cfg.convergence_tolerance {
                break;
            }
        }
    }

    /// Projected gradient step off a zero-value point, falling back to
    /// mixing with the uniform weighting.
    fn escape_zero(&self, x: &mut [f64], grad: &[f64]) {
        let top = grad.iter().copied().fold(0.0, f64::max);
        if top > 0.0 {
            let stepped: Vec<f64> = x.iter().zip(grad).map(|(w, g)| w + 0.5 * g / top).collect();
            let projected = project_to_simplex(&stepped);
            if self.poly.value(&projected) > 0.0 {
                x.copy_from_slice(&projected);
                return;
            }
        }
        let u = 1.0 / x.len() as f64;
        x.iter_mut().for_each(|w| *w = 0.5 * *w + 0.5 * u);
    }

    fn minimize_support(&self, x: &mut Vec<f64>) {
        let n = x.len();
        let mut grad = vec![0.0; n];
        loop {
            for w in x.iter_mut() {
                if *w < SUPPORT_FLOOR {
                    *w = 0.0;
                }
            }
            let total: f64 = x.iter().sum();
            x.iter_mut().for_each(|w| *w /= total);

            self.poly.value_and_gradient(x, &mut grad);
            let support: Vec<usize> = (0..n).filter(|&i| x[i] > 0.0).collect();
            let uncovered = support.iter().enumerate().find_map(|(a, &i)| {
                support[a + 1..]
                    .iter()
                    .find(|&&j| !self.poly.pair_covered_in_support(x, i, j))
                    .map(|&j| (i, j))
            });
            let Some((i, j)) = uncovered else { break };
            let (keep, drop) = if grad[i] >= grad[j] { (i, j) } else { (j, i) };
            x[keep] += x[drop];
            x[drop] = 0.0;
            self.ascend(x);
        }
    }

    /// Newton's method on the stationarity system restricted to the support.
    fn polish(&self, x: &mut [f64]) {
        let support: Vec<usize> = (0..x.len()).filter(|&i| x[i] > 0.0).collect();
        let k = support.len();
        if k == 0 {
            return;
        }
        let start_value = self.poly.value(x);
        let start_residual = self.poly.kkt_residual(x);
        let mut y = x.to_vec();
        let mut grad = vec![0.0; x.len()];
        let mut nu = self.poly.r() as f64 * start_value;
        let mut last_norm = f64::INFINITY;
        for _ in 0..NEWTON_STEPS {
            self.poly.value_and_gradient(&y, &mut grad);
            let pairs = self.poly.pair_matrix(&y);
            let mut rhs = DVector::zeros(k + 1);
            let mut jac = DMatrix::zeros(k + 1, k + 1);
            for (a, &i) in support.iter().enumerate() {
                rhs[a] = nu - grad[i];
                for (b, &j) in support.iter().enumerate() {
                    jac[(a, b)] = pairs[i][j];
                }
                jac[(a, k)] = -1.0;
                jac[(k, a)] = 1.0;
            }
            rhs[k] = 1.0 - support.iter().map(|&i| y[i]).sum::<f64>();
            let norm = rhs.amax();
            if norm == 0.0 || norm >= last_norm {
                break;
            }
            last_norm = norm;
            let Some(step) = jac.lu().solve(&rhs) else { return };
            for (a, &i) in support.iter().enumerate() {
                y[i] += step[a];
            }
            nu += step[k];
            if support.iter().any(|&i| y[i].is_nan() || y[i] <= 0.0) {
                return;
            }
        }
        let total: f64 = y.iter().sum();
        y.iter_mut().for_each(|w| *w /= total);
        let value = self.poly.value(&y);
        if value >= start_value - VALUE_SLACK && self.poly.kkt_residual(&y) <= start_residual {
            x.copy_from_slice(&y);
        }
    }

    fn worst_dual_violation(&self, x: &[f64]) -> Option<usize> {
        let mut grad = vec![0.0; x.len()];
        let value = self.poly.value_and_gradient(x, &mut grad);
        let target = self.poly.r() as f64 * value;
        (0..x.len())
            .filter(|&i| x[i] == 0.0 && grad[i] - target > self.cfg.kkt_tolerance)
            .max_by(|&a, &b| grad[a].total_cmp(&grad[b]).then(b.cmp(&a)))
    }
}

/// Sorts into nonincreasing order; reports whether the support moved.
fn sort_nonincreasing(x: &mut [f64]) -> bool {
    let before: Vec<bool> = x.iter().map(|w| *w > 0.0).collect();
    x.sort_by(|a, b| b.total_cmp(a));
    x.iter().zip(&before).any(|(w, was)| (*w > 0.0) != *was)
}

/// Euclidean projection onto the standard simplex.
fn project_to_simplex(v: &[f64]) -> Vec<f64> {
    let mut sorted = v.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (k, &s) in sorted.iter().enumerate() {
        cumulative += s;
        let t = (cumulative - 1.0) / (k + 1) as f64;
        if s - t > 0.0 {
            theta = t;
        }
    }
    v.iter().map(|&w| (w - theta).max(0.0)).collect()
}
