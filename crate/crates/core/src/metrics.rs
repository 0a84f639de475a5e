use crate::matrix::ComplexMatrix;

/// Energy on the spectral axes excluding DC: `Σ_{s≠0} |X(s,0)|² + Σ_{t≠0} |X(0,t)|²`.
///
/// Edge artifacts concentrate here as a bright cross.
pub fn cross_axis_energy(x: &ComplexMatrix) -> f64 {
    let (n, m) = x.dims();
    let down: f64 = (1..n).map(|s| x[(s, 0)].norm_sqr()).sum();
    let across: f64 = (1..m).map(|t| x[(0, t)].norm_sqr()).sum();
    down + across
}
