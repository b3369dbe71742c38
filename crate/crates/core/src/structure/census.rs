use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Number of vertices with in-degree at most `beta · n`.
pub fn low_indegree_census(t: &Tournament, beta: f64) -> Result<usize> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::BadParams(format!("beta must lie in (0, 1), got {beta}")));
    }
    let threshold = beta * t.order() as f64;
    Ok((0..t.order()).filter(|&v| t.in_degree(v) as f64 <= threshold).count())
}
