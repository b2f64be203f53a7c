//! Histogram construction and entropy measures.
//!
//! These provide an optional compact per-window feature (a probability
//! distribution plus an entropy value) as an alternative to raw samples.

use crate::error::{Error, Result};

/// Uniform-width histogram over the data range of a series.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    /// `bins + 1` strictly increasing edges.
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

/// Builds a histogram with `bins` uniform bins spanning `[min, max]` of the
/// series. The maximum value lands in the last bin. A constant series puts
/// all mass in the first bin.
pub fn histogram(series: &[f64], bins: usize) -> Result<Histogram> {
    if series.is_empty() {
        return Err(Error::invalid("histogram over empty series"));
    }
    if bins == 0 {
        return Err(Error::invalid("histogram needs at least one bin"));
    }
    if series.iter().any(|v| !v.is_finite()) {
        return Err(Error::invalid("histogram input must be finite"));
    }
    let min = series.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = series.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    // Degenerate range: keep the edges strictly increasing with a unit span.
    let span = if max > min { max - min } else { 1.0 };
    let width = span / bins as f64;
    let edges: Vec<f64> = (0..=bins).map(|i| min + width * i as f64).collect();
    let mut counts = vec![0u64; bins];
    for &v in series {
        let mut idx = ((v - min) / width) as usize;
        if idx >= bins {
            idx = bins - 1;
        }
        counts[idx] += 1;
    }
    Ok(Histogram { edges, counts })
}

/// A discrete probability distribution: non-negative entries summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbDist {
    p: Vec<f64>,
}

impl ProbDist {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::invalid("empty probability distribution"));
        }
        if p.iter().any(|x| !x.is_finite() || *x < 0.0 || *x > 1.0) {
            return Err(Error::invalid("probabilities must lie in [0, 1]"));
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::invalid(format!("probabilities sum to {sum}, expected 1")));
        }
        Ok(ProbDist { p })
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.p
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }
}

/// Normalises histogram counts into a probability distribution.
pub fn normalize(h: &Histogram) -> Result<ProbDist> {
    let total: u64 = h.counts.iter().sum();
    if total == 0 {
        return Err(Error::invalid("cannot normalize an all-zero histogram"));
    }
    let p = h.counts.iter().map(|&c| c as f64 / total as f64).collect();
    ProbDist::new(p)
}

fn check_base(base: f64) -> Result<()> {
    if !base.is_finite() || base <= 1.0 {
        return Err(Error::invalid(format!("log base must be > 1, got {base}")));
    }
    Ok(())
}

/// Shannon entropy `-sum P_i log_B P_i`, with `0 log 0 = 0`.
pub fn shannon(dist: &ProbDist, base: f64) -> Result<f64> {
    check_base(base)?;
    let ln_base = base.ln();
    let h: f64 = dist
        .probabilities()
        .iter()
        .map(|&p| if p > 0.0 { -p * (p.ln() / ln_base) } else { 0.0 })
        .sum();
    Ok(h)
}

/// Tsallis entropy `(1 - sum P_i^Q) / (Q - 1)`, with `0^Q = 0`.
///
/// Approaches natural-base Shannon entropy as `Q` tends to 1; `Q = 1` itself
/// is rejected.
pub fn tsallis(dist: &ProbDist, q: f64) -> Result<f64> {
    if !q.is_finite() || q == 1.0 {
        return Err(Error::invalid("Tsallis order Q must be finite and != 1 (use shannon)"));
    }
    let sum: f64 = dist
        .probabilities()
        .iter()
        .map(|&p| if p > 0.0 { p.powf(q) } else { 0.0 })
        .sum();
    Ok((1.0 - sum) / (q - 1.0))
}

/// Renyi entropy `-(1 / (Q - 1)) log_B (sum P_i^Q)`, with `0^Q = 0`.
pub fn renyi(dist: &ProbDist, q: f64, base: f64) -> Result<f64> {
    if !q.is_finite() || q == 1.0 {
        return Err(Error::invalid("Renyi order Q must be finite and != 1 (use shannon)"));
    }
    check_base(base)?;
    let sum: f64 = dist
        .probabilities()
        .iter()
        .map(|&p| if p > 0.0 { p.powf(q) } else { 0.0 })
        .sum();
    Ok(-(sum.ln() / base.ln()) / (q - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(p: &[f64]) -> ProbDist {
        ProbDist::new(p.to_vec()).unwrap()
    }

    #[test]
    fn histogram_constant_series_single_bin() {
        let h = histogram(&[3.0, 3.0, 3.0], 4).unwrap();
        assert_eq!(h.counts, vec![3, 0, 0, 0]);
        assert!(h.edges.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn histogram_splits_at_midpoint() {
        let h = histogram(&[0.0, 1.0, 2.0, 3.0], 2).unwrap();
        assert_eq!(h.counts, vec![2, 2]);
    }

    #[test]
    fn histogram_conserves_sample_count() {
        let series = [0.3, 9.1, 4.4, 4.4, 2.2, 8.0, 1.1];
        for bins in 1..8 {
            let h = histogram(&series, bins).unwrap();
            assert_eq!(h.counts.iter().sum::<u64>(), series.len() as u64);
        }
    }

    #[test]
    fn histogram_max_value_in_last_bin() {
        let h = histogram(&[0.0, 10.0], 3).unwrap();
        assert_eq!(h.counts, vec![1, 0, 1]);
    }

    #[test]
    fn histogram_rejects_empty_series() {
        assert!(histogram(&[], 4).is_err());
    }

    #[test]
    fn normalize_halves() {
        let h = Histogram { edges: vec![0.0, 1.0, 2.0], counts: vec![2, 2] };
        assert_eq!(normalize(&h).unwrap().probabilities(), &[0.5, 0.5]);
    }

    #[test]
    fn normalize_point_mass() {
        let h = Histogram { edges: vec![0.0, 1.0, 2.0], counts: vec![4, 0] };
        assert_eq!(normalize(&h).unwrap().probabilities(), &[1.0, 0.0]);
    }

    #[test]
    fn normalize_rejects_empty_histogram() {
        let h = Histogram { edges: vec![0.0, 1.0], counts: vec![0] };
        assert!(normalize(&h).is_err());
    }

    #[test]
    fn shannon_fair_coin_is_one_bit() {
        assert_eq!(shannon(&dist(&[0.5, 0.5]), 2.0).unwrap(), 1.0);
    }

    #[test]
    fn shannon_point_mass_is_zero() {
        assert_eq!(shannon(&dist(&[1.0, 0.0, 0.0]), 2.0).unwrap(), 0.0);
    }

    #[test]
    fn shannon_biased_coin_value() {
        let h = shannon(&dist(&[0.25, 0.75]), 2.0).unwrap();
        assert!((h - 0.811_278_124_459_133).abs() < 1e-6);
    }

    #[test]
    fn shannon_bounded_by_log_n() {
        let d = dist(&[0.1, 0.2, 0.3, 0.4]);
        let h = shannon(&d, 2.0).unwrap();
        let bound = 4.0f64.log2();
        assert!(h > 0.0 && h <= bound);
        let uniform = dist(&[0.25; 4]);
        assert!((shannon(&uniform, 2.0).unwrap() - bound).abs() < 1e-12);
    }

    #[test]
    fn shannon_rejects_bad_base() {
        assert!(shannon(&dist(&[0.5, 0.5]), 1.0).is_err());
        assert!(shannon(&dist(&[0.5, 0.5]), 0.5).is_err());
    }

    #[test]
    fn tsallis_fair_coin_q2() {
        assert!((tsallis(&dist(&[0.5, 0.5]), 2.0).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn tsallis_point_mass_is_zero() {
        for q in [0.5, 2.0, 3.0] {
            assert_eq!(tsallis(&dist(&[1.0, 0.0]), q).unwrap(), 0.0);
        }
    }

    #[test]
    fn tsallis_rejects_q_one() {
        assert!(tsallis(&dist(&[0.5, 0.5]), 1.0).is_err());
    }

    #[test]
    fn tsallis_approaches_shannon_near_q_one() {
        let d = dist(&[0.1, 0.25, 0.65]);
        let s = shannon(&d, std::f64::consts::E).unwrap();
        for q in [1.0 - 1e-6, 1.0 + 1e-6] {
            assert!((tsallis(&d, q).unwrap() - s).abs() < 1e-4);
        }
    }

    #[test]
    fn renyi_fair_coin_q2_is_ln2() {
        let h = renyi(&dist(&[0.5, 0.5]), 2.0, std::f64::consts::E).unwrap();
        assert!((h - std::f64::consts::LN_2).abs() < 1e-9);
    }

    #[test]
    fn renyi_point_mass_is_zero() {
        assert_eq!(renyi(&dist(&[1.0, 0.0]), 2.0, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn renyi_uniform_is_log_n() {
        for (n, q) in [(4usize, 0.5), (8, 2.0), (3, 3.0)] {
            let d = dist(&vec![1.0 / n as f64; n]);
            let h = renyi(&d, q, 2.0).unwrap();
            assert!((h - (n as f64).log2()).abs() < 1e-12);
        }
    }

    #[test]
    fn renyi_approaches_shannon_near_q_one() {
        let d = dist(&[0.3, 0.3, 0.4]);
        let s = shannon(&d, std::f64::consts::E).unwrap();
        for q in [1.0 - 1e-6, 1.0 + 1e-6] {
            let r = renyi(&d, q, std::f64::consts::E).unwrap();
            assert!((r - s).abs() < 1e-4);
        }
    }

    #[test]
    fn renyi_non_increasing_in_q() {
        let d = dist(&[0.05, 0.15, 0.2, 0.6]);
        let h1 = renyi(&d, 0.5, 2.0).unwrap();
        let h2 = renyi(&d, 2.0, 2.0).unwrap();
        let h3 = renyi(&d, 3.0, 2.0).unwrap();
        assert!(h1 >= h2 && h2 >= h3);
    }
}
