//! Pointwise differential geometry of parameterized surfaces.
//!
//! All quantities follow the convective-coordinate convention: covariant
//! tangents `a_alpha = dx/dxi^alpha`, normal `n = a_1 x a_2 / |a_1 x a_2|`,
//! metric `a_{ab} = a_a . a_b`, curvature `b_{ab} = a_{a,b} . n`. Mean and
//! Gaussian curvature are `H = b^{ab} a_{ab} / 2` and
//! `kappa = det b / det a`; with this orientation a sphere of radius `r`
//! parameterized with outward normal has `H = -1/r`.

use crate::{Mat2, Vec3};
use thiserror::Error;

/// Scale-invariant guard against collapsed parameterizations.
const DEGENERACY_TOL: f64 = 1e-14;

#[derive(Debug, Error)]
pub enum KinematicsError {
    #[error("degenerate tangents: |a1 x a2| = {cross_norm:.3e} below tolerance (collapsed element)")]
    DegenerateTangent { cross_norm: f64 },
}

/// First and second parametric derivatives of a surface point, plus its normal.
#[derive(Debug, Clone, Copy)]
pub struct TangentFrame {
    /// Covariant tangent `dx/dxi^1`.
    pub a1: Vec3,
    /// Covariant tangent `dx/dxi^2`.
    pub a2: Vec3,
    /// Second derivatives `[x_{,11}, x_{,12}, x_{,22}]`.
    pub d2: [Vec3; 3],
    /// Unit surface normal.
    pub n: Vec3,
}

impl TangentFrame {
    pub fn new(a1: Vec3, a2: Vec3, d2: [Vec3; 3]) -> Result<Self, KinematicsError> {
        let cross = a1.cross(&a2);
        let cn = cross.norm();
        if cn < DEGENERACY_TOL * a1.norm() * a2.norm() {
            return Err(KinematicsError::DegenerateTangent { cross_norm: cn });
        }
        Ok(TangentFrame {
            a1,
            a2,
            d2,
            n: cross / cn,
        })
    }

    pub fn tangent(&self, alpha: usize) -> Vec3 {
        match alpha {
            0 => self.a1,
            _ => self.a2,
        }
    }

    /// Second derivative `x_{,alpha beta}` with symmetric storage.
    pub fn second(&self, alpha: usize, beta: usize) -> Vec3 {
        self.d2[alpha + beta]
    }
}

/// Metric data of one configuration: `a_{ab}`, its inverse, dual tangents and
/// the area density `sqrt(det a)`.
#[derive(Debug, Clone, Copy)]
pub struct FirstFundamental {
    pub a_cov: Mat2,
    pub a_con: Mat2,
    pub dual: [Vec3; 2],
    pub sqrt_det: f64,
}

pub fn first_fundamental(frame: &TangentFrame) -> FirstFundamental {
    let a_cov = Mat2::new(
        frame.a1.dot(&frame.a1),
        frame.a1.dot(&frame.a2),
        frame.a2.dot(&frame.a1),
        frame.a2.dot(&frame.a2),
    );
    let det = a_cov[(0, 0)] * a_cov[(1, 1)] - a_cov[(0, 1)] * a_cov[(1, 0)];
    let a_con = Mat2::new(a_cov[(1, 1)], -a_cov[(0, 1)], -a_cov[(1, 0)], a_cov[(0, 0)]) / det;
    let dual = [
        a_con[(0, 0)] * frame.a1 + a_con[(0, 1)] * frame.a2,
        a_con[(1, 0)] * frame.a1 + a_con[(1, 1)] * frame.a2,
    ];
    FirstFundamental {
        a_cov,
        a_con,
        dual,
        sqrt_det: det.sqrt(),
    }
}

/// Curvature data: `b_{ab}`, `b^{ab}`, mean/Gaussian/principal curvatures.
#[derive(Debug, Clone, Copy)]
pub struct SecondFundamental {
    pub b_cov: Mat2,
    pub b_con: Mat2,
    pub h: f64,
    pub kappa: f64,
    pub kappa1: f64,
    pub kappa2: f64,
}

pub fn second_fundamental(frame: &TangentFrame, first: &FirstFundamental) -> SecondFundamental {
    let b_cov = Mat2::new(
        frame.second(0, 0).dot(&frame.n),
        frame.second(0, 1).dot(&frame.n),
        frame.second(1, 0).dot(&frame.n),
        frame.second(1, 1).dot(&frame.n),
    );
    let b_con = first.a_con * b_cov * first.a_con;
    let h = 0.5 * (b_con.component_mul(&first.a_cov)).sum();
    let kappa = b_cov.determinant() / first.a_cov.determinant();
    // Clamp the radicand at umbilic points where rounding makes H^2 - kappa
    // slightly negative.
    let mut rad = h * h - kappa;
    if rad < 0.0 && rad.abs() < 1e-12 * (h * h).max(kappa.abs()).max(1.0) {
        rad = 0.0;
    }
    let sq = rad.max(0.0).sqrt();
    SecondFundamental {
        b_cov,
        b_con,
        h,
        kappa,
        kappa1: h + sq,
        kappa2: h - sq,
    }
}

/// In-plane deformation invariants between a reference metric and the current
/// one: `I1 = A^{ab} a_{ab}`, `I2 = det[A^{ab}] det[a_{ab}]`, `J = sqrt(I2)`.
pub fn deformation_invariants(ref_con: &Mat2, cur_cov: &Mat2) -> (f64, f64, f64) {
    let i1 = (ref_con.component_mul(cur_cov)).sum();
    let i2 = ref_con.determinant() * cur_cov.determinant();
    (i1, i2, i2.sqrt())
}

/// Christoffel symbols of the second kind, `gamma[g][a][b] = a^g . a_{a,b}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Christoffel(pub [[[f64; 2]; 2]; 2]);

pub fn christoffel(frame: &TangentFrame, dual: &[Vec3; 2]) -> Christoffel {
    let mut g = [[[0.0; 2]; 2]; 2];
    for gamma in 0..2 {
        for a in 0..2 {
            for b in 0..2 {
                g[gamma][a][b] = dual[gamma].dot(&frame.second(a, b));
            }
        }
    }
    Christoffel(g)
}

/// All pointwise quantities of one configuration.
#[derive(Debug, Clone, Copy)]
pub struct SurfacePoint {
    pub frame: TangentFrame,
    pub first: FirstFundamental,
    pub second: SecondFundamental,
    pub gamma: Christoffel,
}

impl SurfacePoint {
    pub fn new(frame: TangentFrame) -> Self {
        let first = first_fundamental(&frame);
        let second = second_fundamental(&frame, &first);
        let gamma = christoffel(&frame, &first.dual);
        SurfacePoint {
            frame,
            first,
            second,
            gamma,
        }
    }
}

/// Reference and current configuration at one quadrature point together with
/// the deformation invariants relating them.
#[derive(Debug, Clone, Copy)]
pub struct KinematicState {
    pub reference: SurfacePoint,
    pub current: SurfacePoint,
    pub i1: f64,
    pub i2: f64,
    pub j: f64,
}

impl KinematicState {
    pub fn new(reference: TangentFrame, current: TangentFrame) -> Self {
        let reference = SurfacePoint::new(reference);
        let current = SurfacePoint::new(current);
        let (i1, i2, j) =
            deformation_invariants(&reference.first.a_con, &current.first.a_cov);
        KinematicState {
            reference,
            current,
            i1,
            i2,
            j,
        }
    }

    /// Undeformed state: current coincides with reference.
    pub fn undeformed(frame: TangentFrame) -> Self {
        Self::new(frame, frame)
    }
}
