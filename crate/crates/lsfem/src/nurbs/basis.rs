//! B-spline knot vectors and basis function evaluation with derivatives.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BasisError {
    #[error("parameter {u} outside knot domain [{lo}, {hi}]")]
    OutOfDomain { u: f64, lo: f64, hi: f64 },
}

/// A (possibly unclamped) knot vector of fixed degree.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotVector {
    pub degree: usize,
    pub knots: Vec<f64>,
}

impl KnotVector {
    pub fn new(degree: usize, knots: Vec<f64>) -> Self {
        debug_assert!(knots.windows(2).all(|w| w[0] <= w[1]));
        KnotVector { degree, knots }
    }

    /// Open (clamped) uniform knot vector over [0,1] with `spans` elements.
    pub fn open_uniform(degree: usize, spans: usize) -> Self {
        let mut knots = vec![0.0; degree];
        for i in 0..=spans {
            knots.push(i as f64 / spans as f64);
        }
        knots.extend(std::iter::repeat(1.0).take(degree));
        KnotVector::new(degree, knots)
    }

    /// Open knot vector with prescribed interior break points (ascending,
    /// strictly inside (0,1)), multiplicity one each.
    pub fn open_with_breaks(degree: usize, breaks: &[f64]) -> Self {
        let mut knots = vec![0.0; degree + 1];
        knots.extend_from_slice(breaks);
        knots.extend(std::iter::repeat(1.0).take(degree + 1));
        KnotVector::new(degree, knots)
    }

    /// Uniform periodic knot vector over [0,1] with `spans` elements: knots
    /// extend `degree` spans beyond each end so all basis functions on the
    /// domain are interior ones.
    pub fn periodic_uniform(degree: usize, spans: usize) -> Self {
        let h = 1.0 / spans as f64;
        let knots = (0..=(spans + 2 * degree))
            .map(|i| (i as f64 - degree as f64) * h)
            .collect();
        KnotVector::new(degree, knots)
    }

    /// Number of basis functions defined by this knot vector.
    pub fn n_basis(&self) -> usize {
        self.knots.len() - self.degree - 1
    }

    pub fn domain(&self) -> (f64, f64) {
        let p = self.degree;
        (self.knots[p], self.knots[self.knots.len() - 1 - p])
    }

    /// Indices of the nonzero spans `[u_i, u_{i+1})` inside the domain.
    pub fn spans(&self) -> Vec<usize> {
        let p = self.degree;
        (p..self.knots.len() - 1 - p)
            .filter(|&i| self.knots[i + 1] > self.knots[i])
            .collect()
    }

    /// Find the span index containing `u` (half-open, with the domain end
    /// attached to the last span).
    pub fn find_span(&self, u: f64) -> Result<usize, BasisError> {
        let (lo, hi) = self.domain();
        if u < lo - 1e-12 || u > hi + 1e-12 {
            return Err(BasisError::OutOfDomain { u, lo, hi });
        }
        let p = self.degree;
        let n = self.knots.len() - 1 - p;
        let mut span = match self.knots[p..n].binary_search_by(|k| k.partial_cmp(&u).unwrap()) {
            Ok(i) => p + i,
            Err(i) => p + i - 1,
        };
        // Attach the right domain end to the last nonempty span.
        while span + 1 < self.knots.len() && self.knots[span + 1] <= self.knots[span] {
            span += 1;
        }
        while span >= n {
            span -= 1;
        }
        while self.knots[span + 1] <= self.knots[span] {
            span -= 1;
        }
        Ok(span)
    }

    /// Basis values and derivatives up to order 2 of the `degree + 1` nonzero
    /// functions on `span` at `u`. `out[k][j]` is the k-th derivative of
    /// function `span - degree + j`.
    ///
    /// Cox-de Boor recursion with the standard derivative algorithm.
    pub fn ders(&self, span: usize, u: f64) -> Vec<[f64; 3]> {
        let p = self.degree;
        let kn = &self.knots;
        // ndu[j][r]: triangular table of basis values; left/right as usual.
        let mut ndu = vec![vec![0.0; p + 1]; p + 1];
        let mut left = vec![0.0; p + 1];
        let mut right = vec![0.0; p + 1];
        ndu[0][0] = 1.0;
        for j in 1..=p {
            left[j] = u - kn[span + 1 - j];
            right[j] = kn[span + j] - u;
            let mut saved = 0.0;
            for r in 0..j {
                ndu[j][r] = right[r + 1] + left[j - r];
                let temp = ndu[r][j - 1] / ndu[j][r];
                ndu[r][j] = saved + right[r + 1] * temp;
                saved = left[j - r] * temp;
            }
            ndu[j][j] = saved;
        }
        let n_ders = 2.min(p);
        let mut ders = vec![[0.0; 3]; p + 1];
        for j in 0..=p {
            ders[j][0] = ndu[j][p];
        }
        let mut a = vec![vec![0.0; p + 1]; 2];
        for r in 0..=p {
            let mut s1 = 0;
            let mut s2 = 1;
            a[0][0] = 1.0;
            for k in 1..=n_ders {
                let mut d = 0.0;
                let rk = r as isize - k as isize;
                let pk = p - k;
                if r >= k {
                    a[s2][0] = a[s1][0] / ndu[pk + 1][rk as usize];
                    d = a[s2][0] * ndu[rk as usize][pk];
                }
                let j1 = if rk >= -1 { 1 } else { (-rk) as usize };
                let j2 = if r as isize - 1 <= pk as isize {
                    k - 1
                } else {
                    p - r
                };
                for j in j1..=j2 {
                    a[s2][j] =
                        (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][(rk + j as isize) as usize];
                    d += a[s2][j] * ndu[(rk + j as isize) as usize][pk];
                }
                if r <= pk {
                    a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
                    d += a[s2][k] * ndu[r][pk];
                }
                ders[r][k] = d;
                std::mem::swap(&mut s1, &mut s2);
            }
        }
        let mut factor = 1.0;
        for k in 1..=n_ders {
            factor *= (p + 1 - k) as f64;
            for j in 0..=p {
                ders[j][k] *= factor;
            }
        }
        ders
    }
}
