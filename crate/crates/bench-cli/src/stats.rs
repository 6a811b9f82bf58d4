/// Max/mean/std/min summary of a sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub max: f64,
    pub mean: f64,
    /// Sample standard deviation (n - 1 divisor).
    pub std: f64,
    pub min: f64,
}

impl Summary {
    /// Summarizes a non-empty sample. Panics on an empty slice.
    pub fn of(values: &[f64]) -> Self {
        assert!(!values.is_empty(), "cannot summarize an empty sample");
        let mut max = f64::NEG_INFINITY;
        let mut min = f64::INFINITY;
        for &v in values {
            max = max.max(v);
            min = min.min(v);
        }
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        Self {
            max,
            mean,
            std: sample_std(values, mean),
            min,
        }
    }
}

/// Sample standard deviation with the n - 1 divisor; 0 for samples of one.
pub fn sample_std(values: &[f64], mean: f64) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let sum_sq: f64 = values.iter().map(|&v| (v - mean).powi(2)).sum();
    (sum_sq / (values.len() - 1) as f64).sqrt()
}
