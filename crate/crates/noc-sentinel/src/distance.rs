//! Distance kernels over time series.
//!
//! Two lockstep measures (the Minkowski family and Kullback-Leibler
//! divergence) and one elastic measure (dynamic time warping with full
//! warping-path extraction). All functions are pure and operate on `&[f64]`
//! sample slices.

use crate::error::{Error, Result};

/// Order of a Minkowski distance. `p = 1` is Manhattan, `p = 2` Euclidean.
///
/// Orders below 1 leave the metric regime and are rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkowskiOrder(f64);

impl MinkowskiOrder {
    pub const MANHATTAN: MinkowskiOrder = MinkowskiOrder(1.0);
    pub const EUCLIDEAN: MinkowskiOrder = MinkowskiOrder(2.0);

    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() || p < 1.0 {
            return Err(Error::invalid(format!("Minkowski order must be >= 1, got {p}")));
        }
        Ok(MinkowskiOrder(p))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Minkowski distance `(sum |s[t] - z[t]|^p)^(1/p)` over equal-length series.
pub fn minkowski(s: &[f64], z: &[f64], order: MinkowskiOrder) -> Result<f64> {
    if s.is_empty() {
        return Err(Error::invalid("Minkowski distance over empty series"));
    }
    if s.len() != z.len() {
        return Err(Error::invalid(format!(
            "lockstep distance requires equal lengths ({} vs {})",
            s.len(),
            z.len()
        )));
    }
    let p = order.value();
    if p == 1.0 {
        return Ok(s.iter().zip(z).map(|(a, b)| (a - b).abs()).sum());
    }
    if p == 2.0 {
        let sq: f64 = s.iter().zip(z).map(|(a, b)| (a - b) * (a - b)).sum();
        return Ok(sq.sqrt());
    }
    let sum: f64 = s.iter().zip(z).map(|(a, b)| (a - b).abs().powf(p)).sum();
    Ok(sum.powf(1.0 / p))
}

/// Default smoothing constant for [`kullback_leibler`].
pub const KL_EPSILON: f64 = 1e-9;

/// Kullback-Leibler divergence `sum s[t] * ln(s[t] / z[t])` between two
/// series interpreted as probability vectors.
///
/// Both inputs are renormalised to sum 1. When a series contains a zero bin,
/// `epsilon` is first added to every bin of that series so the divergence
/// stays finite. Not symmetric.
pub fn kullback_leibler(s: &[f64], z: &[f64], epsilon: f64) -> Result<f64> {
    if s.is_empty() {
        return Err(Error::invalid("KL divergence over empty series"));
    }
    if s.len() != z.len() {
        return Err(Error::invalid(format!(
            "lockstep distance requires equal lengths ({} vs {})",
            s.len(),
            z.len()
        )));
    }
    let p = to_prob_vector(s, epsilon)?;
    let q = to_prob_vector(z, epsilon)?;
    let mut d = 0.0;
    for (a, b) in p.iter().zip(&q) {
        if *a > 0.0 {
            d += a * (a / b).ln();
        }
    }
    Ok(d)
}

fn to_prob_vector(v: &[f64], epsilon: f64) -> Result<Vec<f64>> {
    if v.iter().any(|x| !x.is_finite() || *x < 0.0) {
        return Err(Error::invalid("KL input must be finite and non-negative"));
    }
    let sum: f64 = v.iter().sum();
    if sum == 0.0 {
        return Err(Error::invalid("KL input is all zeros"));
    }
    let has_zero = v.iter().any(|x| *x == 0.0);
    if has_zero {
        if epsilon <= 0.0 {
            return Err(Error::invalid(
                "KL input has zero bins and smoothing epsilon is not positive",
            ));
        }
        let sum = sum + epsilon * v.len() as f64;
        Ok(v.iter().map(|x| (x + epsilon) / sum).collect())
    } else {
        Ok(v.iter().map(|x| x / sum).collect())
    }
}

/// DTW cost matrix with the sentinel row and column.
///
/// `cost[0][0] = 0`, the rest of row 0 and column 0 hold `+inf`, and every
/// interior cell is `|a[i-1] - b[j-1]|` plus the smallest of its three
/// predecessors.
#[derive(Debug, Clone)]
pub struct DtwMatrix {
    rows: usize, // length of a
    cols: usize, // length of b
    data: Vec<f64>,
}

impl DtwMatrix {
    /// Cell value with sentinel indexing: valid for `0 <= i <= rows`,
    /// `0 <= j <= cols`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * (self.cols + 1) + j]
    }

    /// Length of the first series.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Length of the second series.
    pub fn cols(&self) -> usize {
        self.cols
    }
}

/// Result of a DTW computation: the final distance and the full matrix.
#[derive(Debug, Clone)]
pub struct DtwResult {
    pub distance: f64,
    pub matrix: DtwMatrix,
}

/// Dynamic time warping distance with absolute-difference cell cost.
pub fn dtw(a: &[f64], b: &[f64]) -> Result<DtwResult> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::invalid("DTW over empty series"));
    }
    let n = a.len();
    let m = b.len();
    let w = m + 1;
    let mut data = vec![f64::INFINITY; (n + 1) * w];
    data[0] = 0.0;
    for i in 1..=n {
        for j in 1..=m {
            let cost = (a[i - 1] - b[j - 1]).abs();
            let prev = data[(i - 1) * w + j - 1]
                .min(data[(i - 1) * w + j])
                .min(data[i * w + j - 1]);
            data[i * w + j] = cost + prev;
        }
    }
    let distance = data[n * w + m];
    Ok(DtwResult {
        distance,
        matrix: DtwMatrix { rows: n, cols: m, data },
    })
}

/// A monotone alignment between two series, as 1-based index pairs from
/// `(1, 1)` to `(rows, cols)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarpingPath(pub Vec<(usize, usize)>);

impl WarpingPath {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of matched costs `|a[i-1] - b[j-1]|` along the path. Equals the
    /// DTW distance when the path came from [`dtw_path`].
    pub fn matched_cost(&self, a: &[f64], b: &[f64]) -> Result<f64> {
        let mut total = 0.0;
        for &(i, j) in &self.0 {
            if i == 0 || j == 0 || i > a.len() || j > b.len() {
                return Err(Error::invalid(format!("path index ({i}, {j}) out of range")));
            }
            total += (a[i - 1] - b[j - 1]).abs();
        }
        Ok(total)
    }
}

/// Extracts the warping path by backtracking from the last cell, always
/// stepping to the smallest of the three predecessor cells. Ties prefer the
/// diagonal, then the vertical `(i-1, j)`, then the horizontal `(i, j-1)`.
pub fn dtw_path(matrix: &DtwMatrix) -> Result<WarpingPath> {
    let (n, m) = (matrix.rows(), matrix.cols());
    if n == 0 || m == 0 || !matrix.get(n, m).is_finite() {
        return Err(Error::invalid("malformed DTW matrix"));
    }
    let mut path = Vec::with_capacity(n + m);
    let (mut i, mut j) = (n, m);
    path.push((i, j));
    while i > 1 || j > 1 {
        let diag = matrix.get(i - 1, j - 1);
        let vert = matrix.get(i - 1, j);
        let horiz = matrix.get(i, j - 1);
        let best = diag.min(vert).min(horiz);
        if !best.is_finite() {
            return Err(Error::invalid("malformed DTW matrix: no finite predecessor"));
        }
        if diag == best {
            i -= 1;
            j -= 1;
        } else if vert == best {
            i -= 1;
        } else {
            j -= 1;
        }
        path.push((i, j));
    }
    path.reverse();
    Ok(WarpingPath(path))
}

/// Re-indexes `b` along the path's first coordinate so it lines up with the
/// series the path's rows refer to.
///
/// A vertical step duplicates the current sample (insertion); a horizontal
/// step drops the landing sample (deletion). An identity diagonal path
/// returns `b` unchanged.
pub fn align(b: &[f64], path: &WarpingPath) -> Result<Vec<f64>> {
    if path.is_empty() {
        return Err(Error::invalid("empty warping path"));
    }
    let mut out = Vec::new();
    let mut prev_i = 0usize;
    for &(i, j) in &path.0 {
        if j == 0 || j > b.len() {
            return Err(Error::invalid(format!("path index ({i}, {j}) out of range")));
        }
        if i != prev_i {
            out.push(b[j - 1]);
        }
        prev_i = i;
    }
    Ok(out)
}

/// Distance measure selector shared by the clustering and detection layers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Metric {
    Minkowski(MinkowskiOrder),
    KullbackLeibler { epsilon: f64 },
    Dtw,
}

impl Metric {
    pub const MANHATTAN: Metric = Metric::Minkowski(MinkowskiOrder::MANHATTAN);
    pub const EUCLIDEAN: Metric = Metric::Minkowski(MinkowskiOrder::EUCLIDEAN);
    pub const KL: Metric = Metric::KullbackLeibler { epsilon: KL_EPSILON };

    /// Elastic measures tolerate length mismatches and have no pointwise mean.
    pub fn is_elastic(self) -> bool {
        matches!(self, Metric::Dtw)
    }

    /// True for members of the Minkowski family.
    pub fn is_minkowski(self) -> bool {
        matches!(self, Metric::Minkowski(_))
    }

    pub fn evaluate(self, a: &[f64], b: &[f64]) -> Result<f64> {
        match self {
            Metric::Minkowski(order) => minkowski(a, b, order),
            Metric::KullbackLeibler { epsilon } => kullback_leibler(a, b, epsilon),
            Metric::Dtw => Ok(dtw(a, b)?.distance),
        }
    }

    pub fn parse(name: &str) -> Result<Metric> {
        match name {
            "manhattan" => Ok(Metric::MANHATTAN),
            "euclidean" => Ok(Metric::EUCLIDEAN),
            "kl" => Ok(Metric::KL),
            "dtw" => Ok(Metric::Dtw),
            other => Err(Error::invalid(format!(
                "unknown metric '{other}' (expected manhattan, euclidean, kl or dtw)"
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Minkowski(order) if order.value() == 1.0 => "manhattan",
            Metric::Minkowski(order) if order.value() == 2.0 => "euclidean",
            Metric::Minkowski(_) => "minkowski",
            Metric::KullbackLeibler { .. } => "kl",
            Metric::Dtw => "dtw",
        }
    }
}
