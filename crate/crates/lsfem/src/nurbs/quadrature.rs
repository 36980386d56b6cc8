//! Gauss-Legendre quadrature on the parent domains: 3x3 points for surface
//! integrals, 4 points for line integrals.

/// Quadrature rule on the bi-unit square (surface) or [-1, 1] line.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    /// Parametric points; the second coordinate is unused for line rules.
    pub points: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
}

const GAUSS3: [(f64, f64); 3] = [
    (-0.774596669241483377035853079956, 5.0 / 9.0),
    (0.0, 8.0 / 9.0),
    (0.774596669241483377035853079956, 5.0 / 9.0),
];

const GAUSS4: [(f64, f64); 4] = [
    (
        -0.861136311594052575223946488893,
        0.347854845137453857373063949222,
    ),
    (
        -0.339981043584856264802665759103,
        0.652145154862546142626936050778,
    ),
    (
        0.339981043584856264802665759103,
        0.652145154862546142626936050778,
    ),
    (
        0.861136311594052575223946488893,
        0.347854845137453857373063949222,
    ),
];

/// 3x3 tensor Gauss rule, exact through bi-quintic polynomials.
pub fn surface_rule() -> QuadratureRule {
    let mut points = Vec::with_capacity(9);
    let mut weights = Vec::with_capacity(9);
    for &(y, wy) in &GAUSS3 {
        for &(x, wx) in &GAUSS3 {
            points.push([x, y]);
            weights.push(wx * wy);
        }
    }
    QuadratureRule { points, weights }
}

/// 4-point Gauss rule, exact through degree 7.
pub fn line_rule() -> QuadratureRule {
    QuadratureRule {
        points: GAUSS4.iter().map(|&(x, _)| [x, 0.0]).collect(),
        weights: GAUSS4.iter().map(|&(_, w)| w).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn surface_weights_sum_to_parent_area() {
        let r = surface_rule();
        let s: f64 = r.weights.iter().sum();
        assert_relative_eq!(s, 4.0, epsilon = 1e-14);
    }

    #[test]
    fn surface_rule_integrates_x4y4() {
        let r = surface_rule();
        let v: f64 = r
            .points
            .iter()
            .zip(&r.weights)
            .map(|(p, w)| w * p[0].powi(4) * p[1].powi(4))
            .sum();
        assert_relative_eq!(v, (2.0 / 5.0) * (2.0 / 5.0), epsilon = 1e-14);
    }

    #[test]
    fn line_rule_exact_degree_seven() {
        let r = line_rule();
        // odd degree integrates to zero; x^6 to 2/7.
        let v7: f64 = r
            .points
            .iter()
            .zip(&r.weights)
            .map(|(p, w)| w * p[0].powi(7))
            .sum();
        let v6: f64 = r
            .points
            .iter()
            .zip(&r.weights)
            .map(|(p, w)| w * p[0].powi(6))
            .sum();
        assert!(v7.abs() < 1e-15);
        assert_relative_eq!(v6, 2.0 / 7.0, epsilon = 1e-14);
    }
}
