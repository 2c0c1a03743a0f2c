//! Adjacency tensor action and spectral radius of connected uniform
//! hypergraphs.
//!
//! The adjacency tensor has entry `1/(k-1)!` on every ordering of an edge,
//! so `(A x^{k-1})_i` is the sum over edges `e` containing `i` of the product
//! of `x_j` over `j` in `e \ {i}`.
//!
//! The radius is computed by the shifted iteration
//!
//! ```text
//! y      = A x^{k-1} + x^{[k-1]}
//! bounds = min_i, max_i  y_i / x_i^{k-1}       (bracket rho + 1)
//! x      = y^{[1/(k-1)]} / max_i y_i^{1/(k-1)}
//! ```
//!
//! Connectivity makes the tensor weakly irreducible and the unit shift makes
//! the map primitive, so the bracket shrinks to the spectral radius.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;
const SHIFT: f64 = 1.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralEstimate {
    pub rho: f64,
    /// Positive, scaled so that its largest entry is 1.
    pub perron: Vec<f64>,
    pub iterations: usize,
    /// `max_i |(A x^{k-1})_i - rho x_i^{k-1}|` at the returned vector.
    pub residual: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
}

fn check_vector(h: &UniformHypergraph, x: &[f64]) -> Result<()> {
    if x.len() != h.n() {
        return Err(Error::contract(format!(
            "vector has length {}, hypergraph has {} vertices",
            x.len(),
            h.n()
        )));
    }
    if x.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::contract("vector entries must be finite and nonnegative"));
    }
    Ok(())
}

/// `A x^{k-1}`.
pub fn apply(h: &UniformHypergraph, x: &[f64]) -> Result<Vec<f64>> {
    check_vector(h, x)?;
    Ok(apply_unchecked(h, x))
}

fn apply_unchecked(h: &UniformHypergraph, x: &[f64]) -> Vec<f64> {
    let mut y = vec![0.0; h.n()];
    for e in h.edges() {
        for (pos, &i) in e.iter().enumerate() {
            let mut prod = 1.0;
            for (q, &j) in e.iter().enumerate() {
                if q != pos {
                    prod *= x[j];
                }
            }
            y[i] += prod;
        }
    }
    y
}

/// `max_i |(A x^{k-1})_i - rho x_i^{k-1}|`.
pub fn residual(h: &UniformHypergraph, rho: f64, x: &[f64]) -> Result<f64> {
    check_vector(h, x)?;
    let p = (h.k() - 1) as i32;
    Ok(apply_unchecked(h, x)
        .iter()
        .zip(x)
        .map(|(y, xi)| (y - rho * xi.powi(p)).abs())
        .fold(0.0, f64::max))
}

/// Spectral radius with the default tolerance and iteration budget.
pub fn spectral_radius_default(h: &UniformHypergraph) -> Result<SpectralEstimate> {
    spectral_radius(h, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

/// Stops once the Collatz-Wielandt bracket is narrower than `tol`; `rho` is
/// its midpoint.
pub fn spectral_radius(h: &UniformHypergraph, tol: f64, max_iter: usize) -> Result<SpectralEstimate> {
    h.ensure_valid()?;
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    if !(tol > 0.0) {
        return Err(Error::contract("tolerance must be positive"));
    }
    let n = h.n();
    let p = (h.k() - 1) as i32;
    let root = 1.0 / (h.k() - 1) as f64;
    let mut x = vec![1.0; n];
    let mut lower = f64::NEG_INFINITY;
    let mut upper = f64::INFINITY;
    for it in 1..=max_iter {
        let mut y = apply_unchecked(h, &x);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let xp = x[i].powi(p);
            y[i] += SHIFT * xp;
            let r = y[i] / xp;
            lo = lo.min(r);
            hi = hi.max(r);
        }
        lower = lo - SHIFT;
        upper = hi - SHIFT;
        if upper - lower < tol {
            let rho = 0.5 * (lower + upper);
            let residual = residual(h, rho, &x)?;
            return Ok(SpectralEstimate {
                rho,
                perron: x,
                iterations: it,
                residual,
                lower_bound: lower,
                upper_bound: upper,
            });
        }
        let mut scale = 0.0f64;
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi.powf(root);
            scale = scale.max(*xi);
        }
        for xi in &mut x {
            *xi /= scale;
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        lower,
        upper,
    })
}
