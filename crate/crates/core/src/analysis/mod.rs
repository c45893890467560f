//! Exact property checks on graded posets.
//!
//! Every checker other than [`max_j_family`] returns
//! [`PosetError::NotGraded`](crate::PosetError::NotGraded) on an ungraded
//! poset instead of a verdict.

mod normality;
mod report;
mod sperner;

pub use normality::{
    is_normal, is_normal_exhaustive, normality_violation, normality_violation_exhaustive, NormalityWitness,
    EXHAUSTIVE_LEVEL_LIMIT,
};
pub use report::{Outcome, PropertyReport};
pub use sperner::{
    is_strongly_sperner, max_j_family, max_j_family_bruteforce, strong_sperner_violation, JFamily, SpernerWitness,
    BRUTEFORCE_LIMIT,
};

use crate::error::Result;
use crate::poset::Poset;
use crate::whitney::{LogConcavityWitness, SymmetryWitness, UnimodalityWitness};

pub fn is_rank_symmetric(p: &Poset) -> Result<bool> {
    Ok(p.whitney()?.is_symmetric())
}

pub fn is_rank_unimodal(p: &Poset) -> Result<bool> {
    Ok(p.whitney()?.is_unimodal())
}

pub fn is_rank_log_concave(p: &Poset) -> Result<bool> {
    Ok(p.whitney()?.is_log_concave())
}

pub fn rank_symmetry_violation(p: &Poset) -> Result<Option<SymmetryWitness>> {
    Ok(p.whitney()?.symmetry_violation())
}

pub fn rank_unimodality_violation(p: &Poset) -> Result<Option<UnimodalityWitness>> {
    Ok(p.whitney()?.unimodality_violation())
}

pub fn rank_log_concavity_violation(p: &Poset) -> Result<Option<LogConcavityWitness>> {
    Ok(p.whitney()?.log_concavity_violation())
}

/// Coefficients of `Σ_x q^ρ(x)`; identical to the Whitney numbers.
pub fn rank_polynomial(p: &Poset) -> Result<Vec<u64>> {
    Ok(p.whitney()?.counts().to_vec())
}

/// Product of integer polynomials given by coefficient lists.
pub fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `f^n`, with `f^0 = 1`.
pub fn poly_pow(f: &[u64], n: usize) -> Vec<u64> {
    (0..n).fold(vec![1], |acc, _| poly_mul(&acc, f))
}

/// Renders coefficients as `1 + 2q + 3q^2`.
pub fn format_poly(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "q".to_string(),
            (1, c) => format!("{c}q"),
            (i, 1) => format!("q^{i}"),
            (i, c) => format!("{c}q^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
