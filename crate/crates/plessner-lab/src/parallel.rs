//! Reproducible reductions.
//!
//! Per-cell (or per-sample) terms are materialised in a deterministic order
//! and summed with a fixed pairwise tree, so the result does not depend on
//! how many workers produced the terms.

/// Fixed-order pairwise (tree) summation.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const BLOCK: usize = 16;
    let n = xs.len();
    if n <= BLOCK {
        let mut acc = 0.0;
        for &x in xs {
            acc += x;
        }
        acc
    } else {
        let mid = n / 2;
        pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_sequential_on_small_input() {
        let xs: Vec<f64> = (0..10).map(|i| i as f64).collect();
        assert_eq!(pairwise_sum(&xs), 45.0);
    }

    #[test]
    fn split_invariance_of_result_for_fixed_input() {
        let xs: Vec<f64> = (0..10_000).map(|i| ((i * 37) % 101) as f64 * 1e-3).collect();
        let a = pairwise_sum(&xs);
        let b = pairwise_sum(&xs);
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
