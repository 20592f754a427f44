//! Limit description of a disjoint union of cliques plus isolated vertices.

use crate::error::{input, Result};

/// Relative clique sizes `alphas` (descending, all positive) and the
/// isolated-vertex mass `beta`, with `sum(alphas) + beta = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CliqueSpec {
    alphas: Vec<f64>,
    beta: f64,
}

pub const SPEC_TOLERANCE: f64 = 1e-12;

impl CliqueSpec {
    /// Validates and normalises: zero clique masses are dropped, the rest
    /// sorted in descending order.
    pub fn new(alphas: &[f64], beta: f64) -> Result<CliqueSpec> {
        if let Some(a) = alphas.iter().find(|a| !a.is_finite() || **a < 0.0) {
            return input(format!("clique mass {a} is not a non-negative number"));
        }
        if !beta.is_finite() || beta < 0.0 {
            return input(format!("isolated mass {beta} is not a non-negative number"));
        }
        let total: f64 = alphas.iter().sum::<f64>() + beta;
        if (total - 1.0).abs() > SPEC_TOLERANCE {
            return input(format!("masses sum to {total}, expected 1"));
        }
        let mut alphas: Vec<f64> = alphas.iter().copied().filter(|&a| a > 0.0).collect();
        alphas.sort_by(|a, b| b.total_cmp(a));
        Ok(CliqueSpec { alphas, beta })
    }

    /// `beta = 1 - sum(alphas)`; a sum exceeding 1 by more than the
    /// tolerance is rejected, smaller overshoots clamp `beta` to zero.
    pub fn from_alphas(alphas: &[f64]) -> Result<CliqueSpec> {
        let sum: f64 = alphas.iter().sum();
        if sum > 1.0 + SPEC_TOLERANCE {
            return input(format!("clique masses sum to {sum} > 1"));
        }
        Self::new(alphas, (1.0 - sum).max(0.0))
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Number of non-trivial cliques.
    pub fn r(&self) -> usize {
        self.alphas.len()
    }
}
