//! Small fourth-order surface tensors in contravariant component form.
//!
//! Constitutive tangents contract symmetric 2x2 increments, so everything here
//! uses the full-sum convention: a tensor `T` represents the symmetrized
//! derivative such that `df = sum_{gd} T[a][b][g][d] * dx_{gd}` over all four
//! index pairs of a symmetric increment.

use crate::Mat2;

/// Fourth-order tensor with two contravariant index pairs, `T^{ab gd}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct T4(pub [[[[f64; 2]; 2]; 2]; 2]);

impl T4 {
    pub const ZERO: T4 = T4([[[[0.0; 2]; 2]; 2]; 2]);

    pub fn from_fn(mut f: impl FnMut(usize, usize, usize, usize) -> f64) -> Self {
        let mut t = [[[[0.0; 2]; 2]; 2]; 2];
        for a in 0..2 {
            for b in 0..2 {
                for g in 0..2 {
                    for d in 0..2 {
                        t[a][b][g][d] = f(a, b, g, d);
                    }
                }
            }
        }
        T4(t)
    }

    /// `A^{ab} B^{gd}` outer product of two symmetric matrices.
    pub fn outer(a: &Mat2, b: &Mat2) -> Self {
        Self::from_fn(|i, j, k, l| a[(i, j)] * b[(k, l)])
    }

    /// Symmetrizing identity `a^{abgd} = (a^{ag} a^{bd} + a^{ad} a^{bg}) / 2`,
    /// equal to minus the derivative of the inverse metric w.r.t. the metric.
    pub fn sym_id(a_con: &Mat2) -> Self {
        Self::from_fn(|a, b, g, d| {
            0.5 * (a_con[(a, g)] * a_con[(b, d)] + a_con[(a, d)] * a_con[(b, g)])
        })
    }

    /// The four-term symmetrized product appearing in curvature-metric
    /// coupling, `(a^{ag} b^{db} + a^{ad} b^{gb} + b^{ag} a^{bd} + b^{ad} a^{gb}) / 2`.
    ///
    /// With the 1/2 factor this equals the symmetrized derivative
    /// `-d b^{ab} / d a_{gd}`.
    pub fn sym_mixed(a_con: &Mat2, b_con: &Mat2) -> Self {
        Self::from_fn(|a, b, g, d| {
            0.5 * (a_con[(a, g)] * b_con[(d, b)]
                + a_con[(a, d)] * b_con[(g, b)]
                + b_con[(a, g)] * a_con[(b, d)]
                + b_con[(a, d)] * a_con[(g, b)])
        })
    }

    /// Full contraction with a symmetric increment over the trailing pair.
    pub fn contract(&self, inc: &Mat2) -> Mat2 {
        let mut out = Mat2::zeros();
        for a in 0..2 {
            for b in 0..2 {
                let mut s = 0.0;
                for g in 0..2 {
                    for d in 0..2 {
                        s += self.0[a][b][g][d] * inc[(g, d)];
                    }
                }
                out[(a, b)] = s;
            }
        }
        out
    }

    pub fn scale(mut self, s: f64) -> Self {
        for a in 0..2 {
            for b in 0..2 {
                for g in 0..2 {
                    for d in 0..2 {
                        self.0[a][b][g][d] *= s;
                    }
                }
            }
        }
        self
    }

    pub fn add(mut self, rhs: &T4) -> Self {
        for a in 0..2 {
            for b in 0..2 {
                for g in 0..2 {
                    for d in 0..2 {
                        self.0[a][b][g][d] += rhs.0[a][b][g][d];
                    }
                }
            }
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_id_contracts_like_inverse_derivative() {
        // d(a^{ab})/d(a_{gd}) contracted with a symmetric increment must equal
        // the matrix identity -A^-1 dA A^-1.
        let a = Mat2::new(2.0, 0.3, 0.3, 1.5);
        let a_inv = a.try_inverse().unwrap();
        let da = Mat2::new(0.1, -0.05, -0.05, 0.2);
        let exact = -a_inv * da * a_inv;
        let via_t4 = T4::sym_id(&a_inv).contract(&da) * -1.0;
        assert!((exact - via_t4).norm() < 1e-14);
    }

    #[test]
    fn outer_contraction_is_trace_product() {
        let a = Mat2::new(1.0, 2.0, 2.0, 3.0);
        let b = Mat2::new(4.0, 0.5, 0.5, 6.0);
        let inc = Mat2::new(0.2, 0.1, 0.1, -0.3);
        let t = T4::outer(&a, &b);
        let full: f64 = (0..2)
            .flat_map(|g| (0..2).map(move |d| (g, d)))
            .map(|(g, d)| b[(g, d)] * inc[(g, d)])
            .sum();
        assert!((t.contract(&inc) - a * full).norm() < 1e-14);
    }
}
