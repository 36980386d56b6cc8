//! Planar rational quadratic construction curves: exact circular arcs,
//! graded lines, knot insertion. Used by the mesh generators; exactness of
//! conic geometry is preserved under knot refinement.

use super::basis::KnotVector;

/// A planar rational curve stored in non-homogeneous form (point + weight).
#[derive(Debug, Clone)]
pub struct Curve2 {
    pub knots: KnotVector,
    pub pts: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
}

impl Curve2 {
    /// Exact circular arc of `radius` from angle `a0` to `a1` (|sweep| < pi),
    /// as a chain of rational quadratic segments of at most 90 degrees each,
    /// joined with double knots.
    pub fn circle_arc(radius: f64, a0: f64, a1: f64) -> Curve2 {
        let sweep = a1 - a0;
        let n_seg = (sweep.abs() / (std::f64::consts::FRAC_PI_2 + 1e-12)).ceil() as usize;
        let n_seg = n_seg.max(1);
        let d = sweep / n_seg as f64;
        let w_mid = (d / 2.0).abs().cos();
        let on = |a: f64| [radius * a.cos(), radius * a.sin()];
        // Tangent intersection point of a circular arc segment.
        let mid = |a: f64| {
            let c = ((d / 2.0).cos()).recip() * radius;
            [c * a.cos(), c * a.sin()]
        };
        let mut pts = vec![on(a0)];
        let mut weights = vec![1.0];
        let mut knots = vec![0.0, 0.0, 0.0];
        for s in 0..n_seg {
            let start = a0 + s as f64 * d;
            pts.push(mid(start + d / 2.0));
            weights.push(w_mid);
            pts.push(on(start + d));
            weights.push(1.0);
            let t = (s + 1) as f64 / n_seg as f64;
            if s + 1 < n_seg {
                knots.push(t);
                knots.push(t);
            }
        }
        knots.extend_from_slice(&[1.0, 1.0, 1.0]);
        Curve2 {
            knots: KnotVector::new(2, knots),
            pts,
            weights,
        }
    }

    /// Straight polynomial quadratic line from `p0` to `p1` with prescribed
    /// interior knot breaks; control points at Greville abscissae so the
    /// parameterization is exactly affine.
    pub fn line_with_breaks(p0: [f64; 2], p1: [f64; 2], breaks: &[f64]) -> Curve2 {
        let knots = KnotVector::open_with_breaks(2, breaks);
        let n = knots.n_basis();
        let mut pts = Vec::with_capacity(n);
        for i in 0..n {
            let g = (knots.knots[i + 1] + knots.knots[i + 2]) / 2.0;
            pts.push([p0[0] + g * (p1[0] - p0[0]), p0[1] + g * (p1[1] - p0[1])]);
        }
        Curve2 {
            knots,
            pts,
            weights: vec![1.0; n],
        }
    }

    /// Insert a single knot at `u` (Boehm's algorithm, homogeneous form).
    pub fn insert_knot(&mut self, u: f64) {
        let p = self.knots.degree;
        let span = self.knots.find_span(u).expect("knot insertion inside domain");
        let kn = &self.knots.knots;
        // Homogeneous coordinates.
        let hw = |i: usize| {
            let w = self.weights[i];
            [self.pts[i][0] * w, self.pts[i][1] * w, w]
        };
        let mut new_pts = Vec::with_capacity(self.pts.len() + 1);
        let mut new_w = Vec::with_capacity(self.pts.len() + 1);
        for i in 0..=span - p {
            new_pts.push(self.pts[i]);
            new_w.push(self.weights[i]);
        }
        for i in span - p + 1..=span {
            let alpha = (u - kn[i]) / (kn[i + p] - kn[i]);
            let a = hw(i - 1);
            let b = hw(i);
            let q = [
                (1.0 - alpha) * a[0] + alpha * b[0],
                (1.0 - alpha) * a[1] + alpha * b[1],
                (1.0 - alpha) * a[2] + alpha * b[2],
            ];
            new_pts.push([q[0] / q[2], q[1] / q[2]]);
            new_w.push(q[2]);
        }
        for i in span..self.pts.len() {
            new_pts.push(self.pts[i]);
            new_w.push(self.weights[i]);
        }
        let mut knots = kn.clone();
        knots.insert(span + 1, u);
        self.knots = KnotVector::new(p, knots);
        self.pts = new_pts;
        self.weights = new_w;
    }

    /// Uniformly split every current span into `k` parts by knot insertion.
    pub fn refine_uniform(&mut self, k: usize) {
        if k <= 1 {
            return;
        }
        let spans: Vec<(f64, f64)> = {
            let kn = &self.knots.knots;
            self.knots
                .spans()
                .iter()
                .map(|&s| (kn[s], kn[s + 1]))
                .collect()
        };
        for (a, b) in spans {
            for j in 1..k {
                self.insert_knot(a + (b - a) * j as f64 / k as f64);
            }
        }
    }

    /// Evaluate the curve (for construction-time verification).
    pub fn eval(&self, u: f64) -> [f64; 2] {
        let p = self.knots.degree;
        let span = self.knots.find_span(u).unwrap();
        let d = self.knots.ders(span, u);
        let mut num = [0.0; 2];
        let mut den = 0.0;
        for j in 0..=p {
            let i = span - p + j;
            let bw = d[j][0] * self.weights[i];
            num[0] += bw * self.pts[i][0];
            num[1] += bw * self.pts[i][1];
            den += bw;
        }
        [num[0] / den, num[1] / den]
    }

    pub fn n_spans(&self) -> usize {
        self.knots.spans().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn quarter_arc_is_exact_circle() {
        let c = Curve2::circle_arc(2.0, 0.0, std::f64::consts::FRAC_PI_2);
        for i in 0..=20 {
            let u = i as f64 / 20.0;
            let p = c.eval(u);
            let r = (p[0] * p[0] + p[1] * p[1]).sqrt();
            assert_relative_eq!(r, 2.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn refined_arc_stays_exact_and_c1() {
        let mut c = Curve2::circle_arc(1.0, -0.3, 1.1);
        c.refine_uniform(5);
        assert_eq!(c.n_spans(), 5);
        for i in 0..=40 {
            let u = i as f64 / 40.0;
            let p = c.eval(u);
            let r = (p[0] * p[0] + p[1] * p[1]).sqrt();
            assert_relative_eq!(r, 1.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn full_circle_chain_exact() {
        let mut c = Curve2::circle_arc(1.5, 0.0, 2.0 * std::f64::consts::PI - 1e-14);
        c.refine_uniform(3);
        for i in 0..=60 {
            let u = i as f64 / 60.0;
            let p = c.eval(u);
            let r = (p[0] * p[0] + p[1] * p[1]).sqrt();
            assert_relative_eq!(r, 1.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn graded_line_is_affine() {
        let c = Curve2::line_with_breaks([0.0, 0.0], [3.0, 1.0], &[0.1, 0.3, 0.6]);
        for i in 0..=10 {
            let u = i as f64 / 10.0;
            let p = c.eval(u);
            assert_relative_eq!(p[0], 3.0 * u, epsilon = 1e-13);
            assert_relative_eq!(p[1], u, epsilon = 1e-13);
        }
    }
}
