//! Small measurements on sampled curves: peaks, widths, crossings, fits.

/// Least-squares line `y = a + b x` with its coefficient of determination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub intercept: f64,
    pub slope: f64,
    pub r_squared: f64,
}

pub fn linear_fit(x: &[f64], y: &[f64]) -> LinearFit {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let syy: f64 = y.iter().map(|b| (b - my) * (b - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = x
        .iter()
        .zip(y)
        .map(|(a, b)| {
            let e = b - intercept - slope * a;
            e * e
        })
        .sum();
    let r_squared = if syy == 0.0 { 1.0 } else { 1.0 - ss_res / syy };
    LinearFit {
        intercept,
        slope,
        r_squared,
    }
}

/// Least-squares `y = C x` through the origin, with its R².
pub fn proportional_fit(x: &[f64], y: &[f64]) -> (f64, f64) {
    let c = x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>() / x.iter().map(|a| a * a).sum::<f64>();
    let my = y.iter().sum::<f64>() / y.len() as f64;
    let ss_res: f64 = x.iter().zip(y).map(|(a, b)| (b - c * a).powi(2)).sum();
    let ss_tot: f64 = y.iter().map(|b| (b - my).powi(2)).sum();
    (c, 1.0 - ss_res / ss_tot)
}

pub fn argmax(y: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in y.iter().enumerate() {
        if *v > y[best] {
            best = i;
        }
    }
    best
}

/// Full width at half maximum of the peak containing the global maximum,
/// with linear interpolation between samples. `None` if a half-level
/// crossing is missing on either side.
pub fn fwhm(x: &[f64], y: &[f64]) -> Option<f64> {
    let p = argmax(y);
    let half = 0.5 * y[p];
    let cross = |i: usize, j: usize| x[i] + (half - y[i]) * (x[j] - x[i]) / (y[j] - y[i]);
    let left = (1..=p).rev().find(|&i| y[i - 1] < half).map(|i| cross(i - 1, i))?;
    let right = (p..y.len() - 1).find(|&i| y[i + 1] < half).map(|i| cross(i, i + 1))?;
    Some(right - left)
}

/// Positions where `y` changes sign from negative to positive, linearly
/// interpolated.
pub fn rising_zero_crossings(x: &[f64], y: &[f64]) -> Vec<f64> {
    (0..y.len().saturating_sub(1))
        .filter(|&i| y[i] < 0.0 && y[i + 1] >= 0.0)
        .map(|i| x[i] - y[i] * (x[i + 1] - x[i]) / (y[i + 1] - y[i]))
        .collect()
}

/// Indices of strict interior local minima.
pub fn local_minima(y: &[f64]) -> Vec<usize> {
    (1..y.len().saturating_sub(1))
        .filter(|&i| y[i] < y[i - 1] && y[i] < y[i + 1])
        .collect()
}

/// Mean spacing of consecutive values.
pub fn mean_spacing(x: &[f64]) -> Option<f64> {
    (x.len() >= 2).then(|| (x[x.len() - 1] - x[0]) / (x.len() - 1) as f64)
}
