/// `S ≈ prefactor · n^gamma`, fitted on logarithms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerFit {
    pub gamma: f64,
    pub prefactor: f64,
    pub r_squared: f64,
}

/// Unweighted least squares of `ln y` on `ln x`. Points with a nonpositive
/// coordinate are skipped; fewer than two usable points give `None`.
pub fn fit_power_law(points: &[(f64, f64)]) -> Option<PowerFit> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let n = logs.len() as f64;
    if logs.len() < 2 {
        return None;
    }
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = logs.iter().map(|p| (p.1 - my).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let gamma = sxy / sxx;
    let intercept = my - gamma * mx;
    let residual: f64 = logs
        .iter()
        .map(|p| (p.1 - intercept - gamma * p.0).powi(2))
        .sum();
    let r_squared = if syy == 0.0 { 1.0 } else { 1.0 - residual / syy };
    Some(PowerFit {
        gamma,
        prefactor: intercept.exp(),
        r_squared,
    })
}
