//! Built-in mesh generators for the benchmark geometries: flat strip,
//! quarter sphere (4 patches), circular disc (degenerate center), and
//! hemisphere (4 side patches + polar cap).

use super::basis::KnotVector;
use super::curve::Curve2;
use super::mesh::{ControlMesh, EdgeSide, MeshBuilder, OrientedEdge, SeamEdge};
use super::patch::Patch;
use crate::Vec3;
use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("unsupported scenario parameters: {0}")]
    Unsupported(String),
}

/// Mesh scenarios with their geometric parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeshScenario {
    /// Flat strip of size `s_len x l_len`, `m` elements along X, one along Y.
    Strip { s_len: f64, l_len: f64 },
    /// Quarter sphere of radius `r`: four revolution patches between two
    /// meridian symmetry planes, poles on the boundary. `m` counts elements
    /// along the (90 degree) equator arc; requires `m % 4 == 0`.
    QuarterSphere { r: f64 },
    /// Flat disc of radius `l` with degenerate center and geometric radial
    /// grading (outer/inner width ratio 2): `4 m^2` elements.
    Disc { l: f64 },
    /// Hemisphere of radius `r`: 4 side patches plus a polar cap,
    /// `16 m^2 / 3` elements; requires `m % 3 == 0`.
    Hemisphere { r: f64 },
}

pub fn make_mesh(scenario: MeshScenario, m: usize) -> Result<ControlMesh, MeshError> {
    if m < 2 {
        return Err(MeshError::Unsupported(format!("resolution m = {m} < 2")));
    }
    match scenario {
        MeshScenario::Strip { s_len, l_len } => Ok(strip(s_len, l_len, m)),
        MeshScenario::QuarterSphere { r } => {
            if m % 4 != 0 {
                return Err(MeshError::Unsupported(format!(
                    "quarter sphere needs m divisible by 4, got {m}"
                )));
            }
            Ok(quarter_sphere(r, m))
        }
        MeshScenario::Disc { l } => Ok(disc(l, m)),
        MeshScenario::Hemisphere { r } => {
            if m % 3 != 0 {
                return Err(MeshError::Unsupported(format!(
                    "hemisphere needs m divisible by 3, got {m}"
                )));
            }
            Ok(hemisphere(r, m))
        }
    }
}

fn strip(s_len: f64, l_len: f64, m: usize) -> ControlMesh {
    let ku = KnotVector::open_uniform(2, m);
    let kv = KnotVector::open_uniform(2, 1);
    let n_u = ku.n_basis();
    let n_v = kv.n_basis();
    let greville = |kn: &KnotVector, i: usize| 0.5 * (kn.knots[i + 1] + kn.knots[i + 2]);
    let mut ctrl = Vec::with_capacity(n_u * n_v);
    for j in 0..n_v {
        for i in 0..n_u {
            ctrl.push(Vec3::new(
                s_len * greville(&ku, i),
                l_len * greville(&kv, j),
                0.0,
            ));
        }
    }
    let mut b = MeshBuilder::new();
    let p = b.add_patch(Patch::new(ku, kv, false, ctrl, vec![1.0; n_u * n_v]));

    let mut edges = BTreeMap::new();
    edges.insert(
        "x0".to_string(),
        vec![OrientedEdge {
            element: 0,
            side: EdgeSide::UMin,
            out_sign: -1.0,
        }],
    );
    edges.insert(
        "x1".to_string(),
        vec![OrientedEdge {
            element: m - 1,
            side: EdgeSide::UMax,
            out_sign: 1.0,
        }],
    );
    edges.insert(
        "y0".to_string(),
        (0..m)
            .map(|e| OrientedEdge {
                element: e,
                side: EdgeSide::VMin,
                out_sign: -1.0,
            })
            .collect(),
    );
    edges.insert(
        "y1".to_string(),
        (0..m)
            .map(|e| OrientedEdge {
                element: e,
                side: EdgeSide::VMax,
                out_sign: 1.0,
            })
            .collect(),
    );
    let mut sets: BTreeMap<String, Vec<(usize, usize, usize)>> = BTreeMap::new();
    sets.insert("x0".into(), (0..n_v).map(|j| (p, 0, j)).collect());
    sets.insert("x1".into(), (0..n_v).map(|j| (p, n_u - 1, j)).collect());
    sets.insert("y0".into(), (0..n_u).map(|i| (p, i, 0)).collect());
    sets.insert("y1".into(), (0..n_u).map(|i| (p, i, n_v - 1)).collect());
    b.finish(edges, sets, Vec::new())
}

/// Quarter sphere between the meridian planes y = 0 and x = 0, with both
/// poles on the boundary. Patch parameterization: u = colatitude arc,
/// v = azimuth arc (45 degrees each), all exact conics.
fn quarter_sphere(r: f64, m: usize) -> ControlMesh {
    let m_phi = m / 2;
    let m_theta = 3 * m / 4;
    let mut arc_lo = Curve2::circle_arc(1.0, 0.0, PI / 4.0);
    arc_lo.refine_uniform(m_phi);
    let mut arc_hi = Curve2::circle_arc(1.0, PI / 4.0, FRAC_PI_2);
    arc_hi.refine_uniform(m_phi);
    // Meridian profiles in the (rho, z) half-plane.
    let mut prof_n = Curve2::circle_arc(r, FRAC_PI_2, 0.0); // pole -> equator
    prof_n.refine_uniform(m_theta);
    let mut prof_s = Curve2::circle_arc(r, 0.0, -FRAC_PI_2); // equator -> pole
    prof_s.refine_uniform(m_theta);

    // u = theta after swap, v = phi; outward normals verified in tests.
    let mk = |arc: &Curve2, prof: &Curve2| Patch::revolve(arc, prof).swap_uv();
    let mut b = MeshBuilder::new();
    let p_n0 = b.add_patch(mk(&arc_lo, &prof_n));
    let p_n1 = b.add_patch(mk(&arc_hi, &prof_n));
    let p_s0 = b.add_patch(mk(&arc_lo, &prof_s));
    let p_s1 = b.add_patch(mk(&arc_hi, &prof_s));
    let n_theta = m_theta + 2; // nodes along u
    let n_phi = m_phi + 2; // nodes along v

    // Meridian seams (phi = 45 deg): v-last column of lo patch = v-first of hi.
    for pt in [(p_n0, p_n1), (p_s0, p_s1)] {
        for i in 0..n_theta {
            b.merge_nodes((pt.0, i, n_phi - 1), (pt.1, i, 0));
        }
    }
    // Equator seams: northern u-last row = southern u-first row.
    for pt in [(p_n0, p_s0), (p_n1, p_s1)] {
        for j in 0..n_phi {
            b.merge_nodes((pt.0, n_theta - 1, j), (pt.1, 0, j));
        }
    }
    // Collapsed pole rows.
    for p in [p_n0, p_n1] {
        for j in 0..n_phi {
            b.merge_nodes((p_n0, 0, 0), (p, 0, j));
        }
    }
    for p in [p_s0, p_s1] {
        for j in 0..n_phi {
            b.merge_nodes((p_s0, n_theta - 1, 0), (p, n_theta - 1, j));
        }
    }
    // Pressure corner merges along the same interfaces.
    for pt in [(p_n0, p_n1), (p_s0, p_s1)] {
        for ki in 0..=m_theta {
            b.merge_pressure((pt.0, ki, m_phi), (pt.1, ki, 0));
        }
    }
    for pt in [(p_n0, p_s0), (p_n1, p_s1)] {
        for kj in 0..=m_phi {
            b.merge_pressure((pt.0, m_theta, kj), (pt.1, 0, kj));
        }
    }
    for p in [p_n0, p_n1] {
        for kj in 0..=m_phi {
            b.merge_pressure((p_n0, 0, 0), (p, 0, kj));
        }
    }
    for p in [p_s0, p_s1] {
        for kj in 0..=m_phi {
            b.merge_pressure((p_s0, m_theta, 0), (p, m_theta, kj));
        }
    }

    // Seam edge pairs for rotational coupling.
    let el = |patch: usize, iu: usize, iv: usize| patch * m_theta * m_phi + iv * m_theta + iu;
    let mut seams = Vec::new();
    for pt in [(p_n0, p_n1), (p_s0, p_s1)] {
        for iu in 0..m_theta {
            seams.push(SeamEdge {
                a: (el(pt.0, iu, m_phi - 1), EdgeSide::VMax),
                b: (el(pt.1, iu, 0), EdgeSide::VMin),
                flip: false,
            });
        }
    }
    for pt in [(p_n0, p_s0), (p_n1, p_s1)] {
        for iv in 0..m_phi {
            seams.push(SeamEdge {
                a: (el(pt.0, m_theta - 1, iv), EdgeSide::UMax),
                b: (el(pt.1, 0, iv), EdgeSide::UMin),
                flip: false,
            });
        }
    }

    let mut edges = BTreeMap::new();
    let mut sym_y = Vec::new();
    let mut sym_x = Vec::new();
    for p in [p_n0, p_s0] {
        for iu in 0..m_theta {
            sym_y.push(OrientedEdge {
                element: el(p, iu, 0),
                side: EdgeSide::VMin,
                out_sign: -1.0,
            });
        }
    }
    for p in [p_n1, p_s1] {
        for iu in 0..m_theta {
            sym_x.push(OrientedEdge {
                element: el(p, iu, m_phi - 1),
                side: EdgeSide::VMax,
                out_sign: 1.0,
            });
        }
    }
    edges.insert("sym_y".into(), sym_y);
    edges.insert("sym_x".into(), sym_x);

    let mut sets: BTreeMap<String, Vec<(usize, usize, usize)>> = BTreeMap::new();
    sets.insert(
        "sym_y_nodes".into(),
        [p_n0, p_s0]
            .iter()
            .flat_map(|&p| (0..n_theta).map(move |i| (p, i, 0)))
            .collect(),
    );
    sets.insert(
        "sym_x_nodes".into(),
        [p_n1, p_s1]
            .iter()
            .flat_map(|&p| (0..n_theta).map(move |i| (p, i, n_phi - 1)))
            .collect(),
    );
    sets.insert("pole_n".into(), vec![(p_n0, 0, 0)]);
    sets.insert("pole_s".into(), vec![(p_s0, n_theta - 1, 0)]);
    b.finish(edges, sets, seams)
}

/// Geometric grading: `m` span widths summing to 1 with last/first ratio 2.
fn graded_breaks(m: usize, ratio: f64) -> Vec<f64> {
    let g = if m > 1 {
        ratio.powf(1.0 / (m as f64 - 1.0))
    } else {
        1.0
    };
    let mut w = Vec::with_capacity(m);
    let mut acc = 0.0;
    for i in 0..m {
        acc += g.powi(i as i32);
        w.push(acc);
    }
    let total = w[m - 1];
    w.iter().take(m - 1).map(|x| x / total).collect()
}

/// Flat disc: single patch, periodic (C1) in the circumferential direction,
/// radially graded toward the collapsed center.
fn disc(l: f64, m: usize) -> ControlMesh {
    let n_c = 4 * m;
    let ku = KnotVector::periodic_uniform(2, n_c);
    let breaks = graded_breaks(m, 2.0);
    let kv = KnotVector::open_with_breaks(2, &breaks);
    let n_v = kv.n_basis();
    let greville = |kn: &KnotVector, j: usize| 0.5 * (kn.knots[j + 1] + kn.knots[j + 2]);
    let mut ctrl = Vec::with_capacity(n_c * n_v);
    for j in 0..n_v {
        let rho = l * greville(&kv, j);
        for i in 0..n_c {
            // Clockwise ordering so that n = a_u x a_v points along +z.
            let ang = -2.0 * PI * i as f64 / n_c as f64;
            ctrl.push(Vec3::new(rho * ang.cos(), rho * ang.sin(), 0.0));
        }
    }
    let mut b = MeshBuilder::new();
    let p = b.add_patch(Patch::new(ku, kv, true, ctrl, vec![1.0; n_c * n_v]));
    // Collapse the center row to a single node, and its pressure corners.
    for i in 1..n_c {
        b.merge_nodes((p, 0, 0), (p, i, 0));
        b.merge_pressure((p, 0, 0), (p, i, 0));
    }

    let el = |iu: usize, iv: usize| iv * n_c + iu;
    let mut edges = BTreeMap::new();
    edges.insert(
        "rim".to_string(),
        (0..n_c)
            .map(|iu| OrientedEdge {
                element: el(iu, m - 1),
                side: EdgeSide::VMax,
                out_sign: 1.0,
            })
            .collect(),
    );
    let mut sets: BTreeMap<String, Vec<(usize, usize, usize)>> = BTreeMap::new();
    sets.insert("center".into(), vec![(p, 0, 0)]);
    sets.insert("ring1".into(), (0..n_c).map(|i| (p, i, 1)).collect());
    sets.insert("rim0".into(), (0..n_c).map(|i| (p, i, n_v - 1)).collect());
    sets.insert("rim1".into(), (0..n_c).map(|i| (p, i, n_v - 2)).collect());
    // Four outer nodes on the axes for tangential pinning.
    sets.insert(
        "pins".into(),
        (0..4).map(|q| (p, q * m, n_v - 1)).collect(),
    );
    b.finish(edges, sets, Vec::new())
}

/// Hemisphere: four side patches (quadrants, colatitude in [pi/8, pi/2]) and
/// one polar cap patch (full circle chain with C0 quadrant joints, collapsed
/// pole). All C0 interfaces carry seam descriptors for rotational coupling.
fn hemisphere(r: f64, m: usize) -> ControlMesh {
    let theta_c = PI / 8.0;
    let m_cap = m / 3;
    // Side profiles: colatitude theta in [theta_c, pi/2] refined m times; in
    // the (rho, z) plane the point angle is pi/2 - theta.
    let mut prof_side = Curve2::circle_arc(r, FRAC_PI_2 - theta_c, 0.0);
    prof_side.refine_uniform(m);
    // Cap profile: from the cap edge up to the pole (outward orientation).
    let mut prof_cap = Curve2::circle_arc(r, FRAC_PI_2 - theta_c, FRAC_PI_2);
    prof_cap.refine_uniform(m_cap);
    let mut quad_arcs = Vec::new();
    for q in 0..4 {
        let mut a = Curve2::circle_arc(1.0, q as f64 * FRAC_PI_2, (q + 1) as f64 * FRAC_PI_2);
        a.refine_uniform(m);
        quad_arcs.push(a);
    }
    let mut cap_arc = Curve2::circle_arc(1.0, 0.0, 2.0 * PI);
    cap_arc.refine_uniform(m);

    let mut b = MeshBuilder::new();
    // Side patches: u = theta (swap), v = phi.
    let mut sides = Vec::new();
    for q in 0..4 {
        sides.push(b.add_patch(Patch::revolve(&quad_arcs[q], &prof_side).swap_uv()));
    }
    let cap = b.add_patch(Patch::revolve(&cap_arc, &prof_cap));
    let n_th = m + 2; // side nodes along u
    let n_ph = m + 2; // side nodes along v
    let cap_nu = 4 * m + 5; // chain control columns
    let cap_nv = m_cap + 2;

    // Side-side meridian seams.
    for q in 0..4 {
        let qn = (q + 1) % 4;
        for i in 0..n_th {
            b.merge_nodes((sides[q], i, n_ph - 1), (sides[qn], i, 0));
        }
        for ki in 0..=m {
            b.merge_pressure((sides[q], ki, m), (sides[qn], ki, 0));
        }
    }
    // Cap closure seam (phi = 0 = 2 pi).
    for j in 0..cap_nv {
        b.merge_nodes((cap, 0, j), (cap, cap_nu - 1, j));
    }
    for kj in 0..=m_cap {
        b.merge_pressure((cap, 0, kj), (cap, 4 * m, kj));
    }
    // Cap-side seams: cap v=0 row runs along phi.
    for q in 0..4 {
        for i in 0..=(m + 1) {
            b.merge_nodes((cap, q * (m + 1) + i, 0), (sides[q], 0, i));
        }
        for k in 0..=m {
            b.merge_pressure((cap, q * m + k, 0), (sides[q], 0, k));
        }
    }
    // Collapsed pole row at cap v-last.
    for i in 1..cap_nu - 1 {
        b.merge_nodes((cap, 0, cap_nv - 1), (cap, i, cap_nv - 1));
    }
    for i in 1..4 * m {
        b.merge_pressure((cap, 0, m_cap), (cap, i, m_cap));
    }

    // Element indexing.
    let side_el = |q: usize, iu: usize, iv: usize| q * m * m + iv * m + iu;
    let cap_el0 = 4 * m * m;
    let cap_el = |iu: usize, iv: usize| cap_el0 + iv * 4 * m + iu;

    let mut seams = Vec::new();
    for q in 0..4 {
        let qn = (q + 1) % 4;
        for iu in 0..m {
            seams.push(SeamEdge {
                a: (side_el(q, iu, m - 1), EdgeSide::VMax),
                b: (side_el(qn, iu, 0), EdgeSide::VMin),
                flip: false,
            });
        }
    }
    // Cap quadrant C0 lines and closure.
    for iv in 0..m_cap {
        for q in 1..4 {
            seams.push(SeamEdge {
                a: (cap_el(q * m - 1, iv), EdgeSide::UMax),
                b: (cap_el(q * m, iv), EdgeSide::UMin),
                flip: false,
            });
        }
        seams.push(SeamEdge {
            a: (cap_el(4 * m - 1, iv), EdgeSide::UMax),
            b: (cap_el(0, iv), EdgeSide::UMin),
            flip: false,
        });
    }
    // Cap-side interface.
    for q in 0..4 {
        for k in 0..m {
            seams.push(SeamEdge {
                a: (cap_el(q * m + k, 0), EdgeSide::VMin),
                b: (side_el(q, 0, k), EdgeSide::UMin),
                flip: false,
            });
        }
    }

    let mut edges = BTreeMap::new();
    edges.insert(
        "equator".to_string(),
        (0..4)
            .flat_map(|q| {
                (0..m).map(move |iv| OrientedEdge {
                    element: side_el(q, m - 1, iv),
                    side: EdgeSide::UMax,
                    out_sign: 1.0,
                })
            })
            .collect(),
    );
    let mut sets: BTreeMap<String, Vec<(usize, usize, usize)>> = BTreeMap::new();
    sets.insert(
        "equator0".into(),
        (0..4)
            .flat_map(|q| (0..n_ph).map(move |j| (q, n_th - 1, j)))
            .collect(),
    );
    sets.insert(
        "equator1".into(),
        (0..4)
            .flat_map(|q| (0..n_ph).map(move |j| (q, n_th - 2, j)))
            .collect(),
    );
    sets.insert("pole".into(), vec![(cap, 0, cap_nv - 1)]);
    b.finish(edges, sets, seams)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn strip_counts_and_geometry() {
        let m = 8;
        let mesh = make_mesh(
            MeshScenario::Strip {
                s_len: PI,
                l_len: 1.0,
            },
            m,
        )
        .unwrap();
        assert_eq!(mesh.n_elements(), m);
        assert_eq!(mesh.n_nodes(), (m + 2) * 3);
        // Exact affine geometry reproduction.
        for &(u, v) in &[(0.13, 0.7), (0.5, 0.0), (0.98, 1.0)] {
            let x = mesh.patches[0].point(u, v).unwrap();
            assert_relative_eq!(x.x, PI * u, epsilon = 1e-12);
            assert_relative_eq!(x.y, v, epsilon = 1e-12);
            assert_relative_eq!(x.z, 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn quarter_sphere_counts_and_exactness() {
        let m = 8;
        let r = 1.0;
        let mesh = make_mesh(MeshScenario::QuarterSphere { r }, m).unwrap();
        assert_eq!(mesh.n_elements(), 3 * m * m / 2);
        for p in &mesh.patches {
            for i in 0..=6 {
                for j in 0..=6 {
                    let x = p.point(i as f64 / 6.0, j as f64 / 6.0).unwrap();
                    assert_relative_eq!(x.norm(), r, epsilon = 1e-12);
                }
            }
        }
        // Outward normals.
        for p in &mesh.patches {
            let f = p.frame(0.43, 0.37).unwrap();
            let x = p.point(0.43, 0.37).unwrap();
            assert!(f.n.dot(&x) > 0.9 * r);
        }
        // Seam conformity: shared edges evaluate to identical points.
        for s in &mesh.seams {
            for &t in &[-0.7, 0.0, 0.4] {
                let (pa, da) = mesh.edge_param(s.a.0, s.a.1, t);
                let (pb, db) = mesh.edge_param(s.b.0, s.b.1, if s.flip { -t } else { t });
                let ea = &mesh.elements[s.a.0];
                let eb = &mesh.elements[s.b.0];
                let xa = mesh.patches[ea.patch].point(pa.0, pa.1).unwrap();
                let xb = mesh.patches[eb.patch].point(pb.0, pb.1).unwrap();
                assert!((xa - xb).norm() < 1e-10, "seam mismatch {xa:?} {xb:?}");
                let _ = (da, db);
            }
        }
    }

    #[test]
    fn disc_counts_flatness_and_grading() {
        for m in [2, 4] {
            let l = 1.0;
            let mesh = make_mesh(MeshScenario::Disc { l }, m).unwrap();
            assert_eq!(mesh.n_elements(), 4 * m * m);
            // 4m(m+1) ring nodes plus the merged center node.
            assert_eq!(mesh.n_nodes(), 4 * m * (m + 1) + 1);
            let p = &mesh.patches[0];
            for i in 0..=8 {
                for j in 0..=8 {
                    let (lo, hi) = p.knots_u.domain();
                    let u = lo + (hi - lo) * i as f64 / 8.0;
                    let x = p.point(u, j as f64 / 8.0).unwrap();
                    assert!(x.z.abs() < 1e-14);
                    assert!(x.xy().norm() <= l + 1e-12);
                }
            }
            // Outer spans twice as wide as inner ones.
            let kn = &p.knots_v.knots;
            let spans = p.knots_v.spans();
            let w_first = kn[spans[0] + 1] - kn[spans[0]];
            let w_last = kn[spans[m - 1] + 1] - kn[spans[m - 1]];
            assert_relative_eq!(w_last / w_first, 2.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn disc_boundary_near_circle() {
        let m = 8;
        let l = 2.0;
        let mesh = make_mesh(MeshScenario::Disc { l }, m).unwrap();
        let p = &mesh.patches[0];
        let (lo, hi) = p.knots_u.domain();
        let mut worst: f64 = 0.0;
        for i in 0..200 {
            let u = lo + (hi - lo) * i as f64 / 200.0;
            let x = p.point(u, 1.0).unwrap();
            worst = worst.max((x.xy().norm() - l).abs() / l);
        }
        // Periodic quadratic boundary: O(h^2) deviation from the exact circle.
        assert!(worst < 2e-3, "boundary deviation {worst}");
    }

    #[test]
    fn hemisphere_counts_and_exactness() {
        let m = 6;
        let r = 1.0;
        let mesh = make_mesh(MeshScenario::Hemisphere { r }, m).unwrap();
        assert_eq!(mesh.n_elements(), 16 * m * m / 3);
        for p in &mesh.patches {
            let (ulo, uhi) = p.knots_u.domain();
            for i in 0..=6 {
                for j in 0..=6 {
                    let u = ulo + (uhi - ulo) * i as f64 / 6.0;
                    let x = p.point(u, j as f64 / 6.0).unwrap();
                    assert_relative_eq!(x.norm(), r, epsilon = 1e-12);
                    assert!(x.z > -1e-12);
                }
            }
            let f = p.frame(0.3 * (uhi - ulo) + ulo, 0.3).unwrap();
            let x = p.point(0.3 * (uhi - ulo) + ulo, 0.3).unwrap();
            assert!(f.n.dot(&x) > 0.9 * r, "normal not outward");
        }
        // Desk-scale and paper-scale element counts.
        assert_eq!(16 * 24 * 24 / 3, 3072);
        assert_eq!(16 * 48 * 48 / 3, 12288);
        // Seam conformity incl. cap interfaces.
        for s in &mesh.seams {
            for &t in &[-0.5, 0.25] {
                let (pa, _) = mesh.edge_param(s.a.0, s.a.1, t);
                let (pb, _) = mesh.edge_param(s.b.0, s.b.1, if s.flip { -t } else { t });
                let ea = &mesh.elements[s.a.0];
                let eb = &mesh.elements[s.b.0];
                let xa = mesh.patches[ea.patch].point(pa.0, pa.1).unwrap();
                let xb = mesh.patches[eb.patch].point(pb.0, pb.1).unwrap();
                assert!((xa - xb).norm() < 1e-10, "seam mismatch {xa:?} vs {xb:?}");
            }
        }
    }

    #[test]
    fn refinement_nesting_same_surface() {
        // Strip and sphere geometries agree between m and 2m at identical
        // parameters (exact geometries).
        let r = 1.3;
        let coarse = make_mesh(MeshScenario::QuarterSphere { r }, 4).unwrap();
        let fine = make_mesh(MeshScenario::QuarterSphere { r }, 8).unwrap();
        for (pc, pf) in coarse.patches.iter().zip(&fine.patches) {
            for i in 0..=5 {
                for j in 0..=5 {
                    let (u, v) = (i as f64 / 5.0, j as f64 / 5.0);
                    let xc = pc.point(u, v).unwrap();
                    let xf = pf.point(u, v).unwrap();
                    assert!((xc - xf).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn unsupported_resolutions_rejected() {
        assert!(make_mesh(MeshScenario::QuarterSphere { r: 1.0 }, 6).is_err());
        assert!(make_mesh(MeshScenario::Hemisphere { r: 1.0 }, 8).is_err());
        assert!(make_mesh(MeshScenario::Disc { l: 1.0 }, 1).is_err());
    }
}
