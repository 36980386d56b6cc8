//! Bi-quadratic NURBS surface patches with second-derivative basis evaluation.

use super::basis::{BasisError, KnotVector};
use super::curve::Curve2;
use crate::{Mat2, Vec3};
use crate::kinematics::TangentFrame;

pub const NODES_PER_ELEMENT: usize = 9;

/// Tensor-product rational patch. Control points are stored in a grid with
/// `i` (u-direction) fastest. A periodic u-direction identifies the last
/// `degree` control columns with the first ones, so `n_u` counts distinct
/// columns only.
#[derive(Debug, Clone)]
pub struct Patch {
    pub knots_u: KnotVector,
    pub knots_v: KnotVector,
    pub n_u: usize,
    pub n_v: usize,
    pub periodic_u: bool,
    pub ctrl: Vec<Vec3>,
    pub weights: Vec<f64>,
}

/// Values and first/second parametric derivatives of the 9 rational basis
/// functions supported on one element, with their control grid indices.
#[derive(Debug, Clone, Copy)]
pub struct BasisEval {
    /// (i, j) grid indices per local function.
    pub grid: [(usize, usize); NODES_PER_ELEMENT],
    pub val: [f64; NODES_PER_ELEMENT],
    /// d/du, d/dv.
    pub d1: [[f64; 2]; NODES_PER_ELEMENT],
    /// d2/du2, d2/dudv, d2/dv2.
    pub d2: [[f64; 3]; NODES_PER_ELEMENT],
}

impl Patch {
    pub fn new(
        knots_u: KnotVector,
        knots_v: KnotVector,
        periodic_u: bool,
        ctrl: Vec<Vec3>,
        weights: Vec<f64>,
    ) -> Self {
        let raw_u = knots_u.n_basis();
        let n_u = if periodic_u { raw_u - knots_u.degree } else { raw_u };
        let n_v = knots_v.n_basis();
        assert_eq!(ctrl.len(), n_u * n_v);
        assert_eq!(weights.len(), n_u * n_v);
        assert!(weights.iter().all(|&w| w > 0.0));
        Patch {
            knots_u,
            knots_v,
            n_u,
            n_v,
            periodic_u,
            ctrl,
            weights,
        }
    }

    #[inline]
    pub fn grid_index(&self, i: usize, j: usize) -> usize {
        let i = if self.periodic_u { i % self.n_u } else { i };
        j * self.n_u + i
    }

    /// Element spans as (span_u, span_v) index pairs, v-major order.
    pub fn element_spans(&self) -> Vec<(usize, usize)> {
        let su = self.knots_u.spans();
        let sv = self.knots_v.spans();
        let mut out = Vec::with_capacity(su.len() * sv.len());
        for &j in &sv {
            for &i in &su {
                out.push((i, j));
            }
        }
        out
    }

    pub fn span_range(&self, span: (usize, usize)) -> ((f64, f64), (f64, f64)) {
        (
            (self.knots_u.knots[span.0], self.knots_u.knots[span.0 + 1]),
            (self.knots_v.knots[span.1], self.knots_v.knots[span.1 + 1]),
        )
    }

    /// Rational basis evaluation at (u, v); the span may be supplied to pin
    /// evaluation to a particular element (needed on knot lines).
    pub fn basis_at(&self, u: f64, v: f64, span: Option<(usize, usize)>) -> Result<BasisEval, BasisError> {
        let (su, sv) = match span {
            Some(s) => s,
            None => (self.knots_u.find_span(u)?, self.knots_v.find_span(v)?),
        };
        let du = self.knots_u.ders(su, u);
        let dv = self.knots_v.ders(sv, v);
        let mut grid = [(0usize, 0usize); 9];
        let mut bw = [0.0; 9]; // B_l * w_l and derivatives below
        let mut bw_u = [0.0; 9];
        let mut bw_v = [0.0; 9];
        let mut bw_uu = [0.0; 9];
        let mut bw_uv = [0.0; 9];
        let mut bw_vv = [0.0; 9];
        let mut l = 0;
        for jv in 0..3 {
            for ju in 0..3 {
                let gi = su - 2 + ju;
                let gj = sv - 2 + jv;
                let w = self.weights[self.grid_index(gi, gj)];
                grid[l] = (if self.periodic_u { gi % self.n_u } else { gi }, gj);
                bw[l] = du[ju][0] * dv[jv][0] * w;
                bw_u[l] = du[ju][1] * dv[jv][0] * w;
                bw_v[l] = du[ju][0] * dv[jv][1] * w;
                bw_uu[l] = du[ju][2] * dv[jv][0] * w;
                bw_uv[l] = du[ju][1] * dv[jv][1] * w;
                bw_vv[l] = du[ju][0] * dv[jv][2] * w;
                l += 1;
            }
        }
        let wsum: f64 = bw.iter().sum();
        let w_u: f64 = bw_u.iter().sum();
        let w_v: f64 = bw_v.iter().sum();
        let w_uu: f64 = bw_uu.iter().sum();
        let w_uv: f64 = bw_uv.iter().sum();
        let w_vv: f64 = bw_vv.iter().sum();
        let inv = 1.0 / wsum;
        let mut out = BasisEval {
            grid,
            val: [0.0; 9],
            d1: [[0.0; 2]; 9],
            d2: [[0.0; 3]; 9],
        };
        for l in 0..9 {
            let r = bw[l] * inv;
            let r_u = (bw_u[l] - r * w_u) * inv;
            let r_v = (bw_v[l] - r * w_v) * inv;
            let r_uu = (bw_uu[l] - 2.0 * r_u * w_u - r * w_uu) * inv;
            let r_uv = (bw_uv[l] - r_u * w_v - r_v * w_u - r * w_uv) * inv;
            let r_vv = (bw_vv[l] - 2.0 * r_v * w_v - r * w_vv) * inv;
            out.val[l] = r;
            out.d1[l] = [r_u, r_v];
            out.d2[l] = [r_uu, r_uv, r_vv];
        }
        Ok(out)
    }

    /// Geometry evaluation from this patch's own control net.
    pub fn point(&self, u: f64, v: f64) -> Result<Vec3, BasisError> {
        let b = self.basis_at(u, v, None)?;
        let mut x = Vec3::zeros();
        for l in 0..9 {
            let (i, j) = b.grid[l];
            x += b.val[l] * self.ctrl[self.grid_index(i, j)];
        }
        Ok(x)
    }

    /// Tangent frame (first and second derivatives) of the patch geometry.
    pub fn frame(&self, u: f64, v: f64) -> Result<TangentFrame, BasisError> {
        let b = self.basis_at(u, v, None)?;
        let mut a1 = Vec3::zeros();
        let mut a2 = Vec3::zeros();
        let mut d2 = [Vec3::zeros(); 3];
        for l in 0..9 {
            let (i, j) = b.grid[l];
            let p = self.ctrl[self.grid_index(i, j)];
            a1 += b.d1[l][0] * p;
            a2 += b.d1[l][1] * p;
            d2[0] += b.d2[l][0] * p;
            d2[1] += b.d2[l][1] * p;
            d2[2] += b.d2[l][2] * p;
        }
        Ok(TangentFrame::new(a1, a2, d2).expect("nondegenerate patch point"))
    }

    /// Surface of revolution around the z-axis: `profile` lives in the
    /// (rho, z) half-plane (v-direction), `arc` is a unit-circle arc giving
    /// the u-direction.
    pub fn revolve(arc: &Curve2, profile: &Curve2) -> Patch {
        let n_u = arc.pts.len();
        let n_v = profile.pts.len();
        let mut ctrl = Vec::with_capacity(n_u * n_v);
        let mut weights = Vec::with_capacity(n_u * n_v);
        for j in 0..n_v {
            let [rho, z] = profile.pts[j];
            for i in 0..n_u {
                let [cx, cy] = arc.pts[i];
                ctrl.push(Vec3::new(rho * cx, rho * cy, z));
                weights.push(arc.weights[i] * profile.weights[j]);
            }
        }
        Patch::new(arc.knots.clone(), profile.knots.clone(), false, ctrl, weights)
    }

    /// Swap the two parameter directions (transposes the control grid).
    /// Used to fix surface orientation; only valid for non-periodic patches.
    pub fn swap_uv(self) -> Patch {
        assert!(!self.periodic_u);
        let mut ctrl = Vec::with_capacity(self.ctrl.len());
        let mut weights = Vec::with_capacity(self.weights.len());
        for i in 0..self.n_u {
            for j in 0..self.n_v {
                ctrl.push(self.ctrl[j * self.n_u + i]);
                weights.push(self.weights[j * self.n_u + i]);
            }
        }
        Patch {
            knots_u: self.knots_v,
            knots_v: self.knots_u,
            n_u: self.n_v,
            n_v: self.n_u,
            periodic_u: false,
            ctrl,
            weights,
        }
    }

    /// Metric of the parameterization at (u, v), for orientation checks.
    pub fn metric(&self, u: f64, v: f64) -> Result<Mat2, BasisError> {
        let f = self.frame(u, v)?;
        Ok(Mat2::new(
            f.a1.dot(&f.a1),
            f.a1.dot(&f.a2),
            f.a2.dot(&f.a1),
            f.a2.dot(&f.a2),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn partition_of_unity_rational() {
        // Arbitrary positive weights still satisfy the rational partition of
        // unity including derivative sums.
        let kv = KnotVector::open_uniform(2, 3);
        let n = kv.n_basis();
        let mut ctrl = Vec::new();
        let mut weights = Vec::new();
        for j in 0..n {
            for i in 0..n {
                ctrl.push(Vec3::new(i as f64, j as f64, ((i * 7 + j) % 3) as f64 * 0.1));
                weights.push(1.0 + 0.5 * ((i + 2 * j) % 4) as f64);
            }
        }
        let p = Patch::new(kv.clone(), kv, false, ctrl, weights);
        for &(u, v) in &[(0.0, 0.0), (0.31, 0.77), (0.5, 0.5), (1.0, 0.2)] {
            let b = p.basis_at(u, v, None).unwrap();
            let s: f64 = b.val.iter().sum();
            assert_relative_eq!(s, 1.0, epsilon = 1e-12);
            for k in 0..2 {
                let ds: f64 = b.d1.iter().map(|d| d[k]).sum();
                assert!(ds.abs() < 1e-12, "first derivative sum {ds}");
            }
            for k in 0..3 {
                let dds: f64 = b.d2.iter().map(|d| d[k]).sum();
                assert!(dds.abs() < 1e-11, "second derivative sum {dds}");
            }
        }
    }

    #[test]
    fn circle_arc_patch_points_on_circle() {
        // Extrude an exact arc: all surface points must lie on the cylinder.
        let arc = Curve2::circle_arc(1.0, 0.1, 1.2);
        let line = Curve2::line_with_breaks([0.0, 0.0], [1.0, 2.0], &[]);
        let mut prof = line.clone();
        prof.pts.iter_mut().for_each(|p| p[0] += 0.7); // rho in [0.7, 1.7]
        let patch = Patch::revolve(&arc, &prof);
        for i in 0..6 {
            for j in 0..6 {
                let (u, v) = (i as f64 / 5.0, j as f64 / 5.0);
                let x = patch.point(u, v).unwrap();
                let rho_expect = 0.7 + v;
                let rho = (x.x * x.x + x.y * x.y).sqrt();
                assert_relative_eq!(rho, rho_expect, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn revolve_sphere_octant_exact() {
        let arc = Curve2::circle_arc(1.0, 0.0, std::f64::consts::FRAC_PI_2);
        // Meridian from north pole (rho=0, z=R) to equator (rho=R, z=0).
        let r = 1.3;
        let prof = Curve2::circle_arc(r, std::f64::consts::FRAC_PI_2, 0.0);
        let patch = Patch::revolve(&arc, &prof);
        for i in 0..=7 {
            for j in 0..=7 {
                let (u, v) = (i as f64 / 7.0, j as f64 / 7.0);
                let x = patch.point(u, v).unwrap();
                assert_relative_eq!(x.norm(), r, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn frame_derivatives_match_finite_differences() {
        let arc = Curve2::circle_arc(1.0, 0.0, std::f64::consts::FRAC_PI_2);
        let r = 2.0;
        let mut prof = Curve2::circle_arc(r, std::f64::consts::FRAC_PI_2, 0.1);
        prof.refine_uniform(3);
        let patch = Patch::revolve(&arc, &prof);
        let (u, v) = (0.37, 0.53);
        let f = patch.frame(u, v).unwrap();
        let h = 1e-6;
        let fd1 = (patch.point(u + h, v).unwrap() - patch.point(u - h, v).unwrap()) / (2.0 * h);
        let fd2 = (patch.point(u, v + h).unwrap() - patch.point(u, v - h).unwrap()) / (2.0 * h);
        assert!((f.a1 - fd1).norm() < 1e-7 * f.a1.norm().max(1.0));
        assert!((f.a2 - fd2).norm() < 1e-7 * f.a2.norm().max(1.0));
        let fduu = (patch.frame(u + h, v).unwrap().a1 - patch.frame(u - h, v).unwrap().a1)
            / (2.0 * h);
        assert!((f.d2[0] - fduu).norm() < 1e-6 * f.d2[0].norm().max(1.0));
        let fduv = (patch.frame(u, v + h).unwrap().a1 - patch.frame(u, v - h).unwrap().a1)
            / (2.0 * h);
        assert!((f.d2[1] - fduv).norm() < 1e-6 * f.d2[1].norm().max(1.0));
    }

    #[test]
    fn c1_across_interior_single_knot() {
        let mut arc = Curve2::circle_arc(1.0, 0.0, std::f64::consts::FRAC_PI_2);
        arc.refine_uniform(4);
        let mut prof = Curve2::circle_arc(1.0, std::f64::consts::FRAC_PI_2, 0.0);
        prof.refine_uniform(4);
        let patch = Patch::revolve(&arc, &prof);
        // Evaluate first derivatives on both sides of the interior knot line
        // u = 0.5 (single multiplicity): C1 requires agreement.
        let v = 0.63;
        let su = patch.knots_u.find_span(0.5 - 1e-9).unwrap();
        let su2 = patch.knots_u.find_span(0.5 + 1e-9).unwrap();
        assert_ne!(su, su2);
        let sv = patch.knots_v.find_span(v).unwrap();
        let left = patch.basis_at(0.5, v, Some((su, sv))).unwrap();
        let right = patch.basis_at(0.5, v, Some((su2, sv))).unwrap();
        let sum_d = |b: &BasisEval, k: usize| -> Vec3 {
            let mut a = Vec3::zeros();
            for l in 0..9 {
                let (i, j) = b.grid[l];
                a += b.d1[l][k] * patch.ctrl[patch.grid_index(i, j)];
            }
            a
        };
        for k in 0..2 {
            assert!((sum_d(&left, k) - sum_d(&right, k)).norm() < 1e-10);
        }
    }
}
