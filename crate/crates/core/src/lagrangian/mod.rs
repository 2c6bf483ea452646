//! The Lagrangian `λ(G) = max { Σ_{e ∈ E} Π_{v ∈ e} x_v : x ∈ S }` over the
//! standard simplex `S`, together with the stationarity checks used to
//! certify candidate maximizers.

mod certify;
mod polynomial;
mod solver;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::LagrangianError;
use crate::hypergraph::{binomial, UniformHypergraph};

pub use certify::{grid_certify, grid_point_count, GridCertificate, DEFAULT_GRID_BUDGET};
pub use polynomial::EdgePolynomial;
pub use solver::{maximize, replicator_step};

/// Tolerance on `Σ x_i = 1` accepted by [`Weighting::new`].
pub const SIMPLEX_TOLERANCE: f64 = 1e-12;

/// A point of the standard simplex; coordinate `i - 1` is the weight of vertex `i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weighting(Vec<f64>);

impl Weighting {
    pub fn new(weights: Vec<f64>) -> Result<Self, LagrangianError> {
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(LagrangianError::InvalidWeighting(format!("weight {w} is not a nonnegative real")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > SIMPLEX_TOLERANCE {
            return Err(LagrangianError::InvalidWeighting(format!("weights sum to {sum}, not 1")));
        }
        Ok(Self(weights))
    }

    /// Rescales nonnegative weights onto the simplex.
    pub fn normalized(mut weights: Vec<f64>) -> Result<Self, LagrangianError> {
        let sum: f64 = weights.iter().sum();
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) || sum <= 0.0 || !sum.is_finite() {
            return Err(LagrangianError::InvalidWeighting("cannot normalize".into()));
        }
        weights.iter_mut().for_each(|w| *w /= sum);
        Ok(Self(weights))
    }

    pub fn uniform(n: usize) -> Self {
        Self::uniform_prefix(n, n)
    }

    /// Weight `1/k` on vertices `1..=k`, zero elsewhere.
    pub fn uniform_prefix(n: usize, k: usize) -> Self {
        let k = k.min(n);
        Self((0..n).map(|i| if i < k { 1.0 / k as f64 } else { 0.0 }).collect())
    }

    pub(crate) fn from_raw(weights: Vec<f64>) -> Self {
        Self(weights)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    /// Weight of vertex `i` (1-based).
    pub fn weight(&self, i: usize) -> f64 {
        self.0[i - 1]
    }

    /// Vertices with strictly positive weight.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, w)| **w > 0.0).map(|(i, _)| i + 1).collect()
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|w| **w > 0.0).count()
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

/// Knobs for [`maximize`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    /// Stop an ascent run once one step gains less than this.
    pub convergence_tolerance: f64,
    /// Stationarity threshold used for dual feasibility checks and verdicts.
    pub kkt_tolerance: f64,
    pub random_seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            restarts: 64,
            max_iterations: 20_000,
            convergence_tolerance: 1e-12,
            kkt_tolerance: 1e-9,
            random_seed: 42,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), LagrangianError> {
        let bad = |msg: &str| Err(LagrangianError::InvalidConfig(msg.into()));
        if self.restarts == 0 {
            return bad("restarts must be positive");
        }
        if self.max_iterations == 0 {
            return bad("max_iterations must be positive");
        }
        for (name, t) in [
            ("convergence_tolerance", self.convergence_tolerance),
            ("kkt_tolerance", self.kkt_tolerance),
        ] {
            if !(t > 0.0 && t < 1.0) {
                return Err(LagrangianError::InvalidConfig(format!("{name} must lie in (0, 1), got {t}")));
            }
        }
        Ok(())
    }
}

/// Outcome of [`maximize`]. `value` is always recomputed from `weighting`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LagrangianResult {
    pub value: f64,
    pub weighting: Weighting,
    pub support_size: usize,
    pub kkt_residual: f64,
    pub restarts_used: usize,
    pub certified_upper_bound: Option<f64>,
}

fn check_len(g: &UniformHypergraph, x: &Weighting) -> Result<(), LagrangianError> {
    if x.len() != g.n() {
        return Err(LagrangianError::LengthMismatch { expected: g.n(), found: x.len() });
    }
    Ok(())
}

fn check_vertex(g: &UniformHypergraph, i: usize) -> Result<(), LagrangianError> {
    if i == 0 || i > g.n() {
        return Err(crate::error::HypergraphError::VertexOutOfRange { vertex: i, n: g.n() }.into());
    }
    Ok(())
}

/// `λ(G, x)`.
pub fn evaluate(g: &UniformHypergraph, x: &Weighting) -> Result<f64, LagrangianError> {
    check_len(g, x)?;
    Ok(EdgePolynomial::new(g).value(x.as_slice()))
}

/// `λ(E_i, x)`, the partial derivative of `λ(G, x)` in `x_i`.
pub fn partial_gradient(g: &UniformHypergraph, x: &Weighting, i: usize) -> Result<f64, LagrangianError> {
    check_len(g, x)?;
    check_vertex(g, i)?;
    let mut grad = vec![0.0; g.n()];
    EdgePolynomial::new(g).value_and_gradient(x.as_slice(), &mut grad);
    Ok(grad[i - 1])
}

/// `λ(E_ij, x)`, the mixed second derivative in `x_i, x_j`.
pub fn pair_gradient(g: &UniformHypergraph, x: &Weighting, i: usize, j: usize) -> Result<f64, LagrangianError> {
    check_len(g, x)?;
    let link = g.pair_link(i, j)?;
    Ok(link.iter().map(|b| b.vertices().map(|v| x.weight(v)).product::<f64>()).sum())
}

/// `λ(E_{i\j}, x)`.
pub fn diff_link_value(g: &UniformHypergraph, x: &Weighting, i: usize, j: usize) -> Result<f64, LagrangianError> {
    check_len(g, x)?;
    let link = g.diff_link(i, j)?;
    Ok(link.iter().map(|a| a.vertices().map(|v| x.weight(v)).product::<f64>()).sum())
}

/// Largest deviation `|λ(E_i, x) - r λ(G, x)|` over the support of `x`.
pub fn kkt_residual(g: &UniformHypergraph, x: &Weighting) -> Result<f64, LagrangianError> {
    check_len(g, x)?;
    let poly = EdgePolynomial::new(g);
    Ok(poly.kkt_residual(x.as_slice()))
}

/// `λ([t]^(r)) = C(t, r) / t^r`, exact.
pub fn complete_lagrangian(t: usize, r: usize) -> Result<BigRational, LagrangianError> {
    if t < r || r < 2 {
        return Err(LagrangianError::OrderBelowUniformity { t, r });
    }
    let num = BigInt::from(binomial(t, r));
    let den = num_traits::pow(BigInt::from(t), r);
    Ok(BigRational::new(num, den))
}

/// Whether `x_1 >= x_2 >= ... >= x_n`.
pub fn check_monotone_weighting(x: &Weighting) -> bool {
    x.is_nonincreasing()
}

/// `|(x_i - x_j) λ(E_ij, x) - λ(E_{i\j}, x)|` for a pair with `E_{j\i} = ∅`.
pub fn compression_identity_residual(
    g: &UniformHypergraph,
    x: &Weighting,
    i: usize,
    j: usize,
) -> Result<f64, LagrangianError> {
    check_len(g, x)?;
    if i >= j {
        return Err(LagrangianError::PairOrder { i, j });
    }
    if !g.diff_link(j, i)?.is_empty() {
        return Err(LagrangianError::NotCompressedPair { i, j });
    }
    let lhs = (x.weight(i) - x.weight(j)) * pair_gradient(g, x, i, j)?;
    Ok((lhs - diff_link_value(g, x, i, j)?).abs())
}
