//! Multi-patch control meshes: global node numbering with seam sharing,
//! element connectivity, pressure-node (bilinear Lagrange) grids, named
//! boundary edge and node sets.

use super::patch::Patch;
use crate::kinematics::TangentFrame;
use crate::Vec3;
use std::collections::BTreeMap;

/// One side of an element's parameter rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeSide {
    UMin,
    UMax,
    VMin,
    VMax,
}

/// Boundary element edge with outward in-plane orientation sign: the outward
/// boundary normal is `out_sign * (t x n)` where `t` is the edge tangent in
/// increasing parameter direction.
#[derive(Debug, Clone, Copy)]
pub struct OrientedEdge {
    pub element: usize,
    pub side: EdgeSide,
    pub out_sign: f64,
}

/// Conforming pair of element edges meeting at a patch interface (or an
/// interior C0 knot line). Line parameter `s` on side `a` corresponds to
/// `-s` on side `b` when `flip` is set.
#[derive(Debug, Clone, Copy)]
pub struct SeamEdge {
    pub a: (usize, EdgeSide),
    pub b: (usize, EdgeSide),
    pub flip: bool,
}

#[derive(Debug, Clone)]
pub struct Element {
    pub patch: usize,
    pub span: (usize, usize),
    /// Parameter rectangle.
    pub range_u: (f64, f64),
    pub range_v: (f64, f64),
    /// Global displacement node ids, local order `jv * 3 + ju`.
    pub nodes: [usize; 9],
    /// Global pressure node ids, corners (u0v0, u1v0, u0v1, u1v1).
    pub pressure: [usize; 4],
}

#[derive(Debug, Clone)]
pub struct ControlMesh {
    pub patches: Vec<Patch>,
    /// Global displacement node coordinates (reference configuration).
    pub nodes: Vec<Vec3>,
    /// Per patch: grid of global node ids with the patch's own layout.
    pub patch_nodes: Vec<Vec<usize>>,
    pub elements: Vec<Element>,
    /// Pressure node locations (element corner points on the surface).
    pub pressure_coords: Vec<Vec3>,
    pub boundary_edges: BTreeMap<String, Vec<OrientedEdge>>,
    pub node_sets: BTreeMap<String, Vec<usize>>,
    pub seams: Vec<SeamEdge>,
    /// Per displacement node: (patch, u, v) of its projection point on the
    /// initial surface, used for nodal normal evaluation.
    pub projection: Vec<(usize, f64, f64)>,
}

impl ControlMesh {
    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_pressure(&self) -> usize {
        self.pressure_coords.len()
    }

    pub fn n_elements(&self) -> usize {
        self.elements.len()
    }

    /// Gather the 9 nodal positions of an element from a global state vector.
    pub fn element_coords(&self, e: &Element, x: &[Vec3]) -> [Vec3; 9] {
        let mut out = [Vec3::zeros(); 9];
        for (l, &n) in e.nodes.iter().enumerate() {
            out[l] = x[n];
        }
        out
    }

    /// Tangent frame of the deformed surface at a patch parameter point,
    /// using nodal positions `x` (global).
    pub fn frame_at(&self, patch: usize, u: f64, v: f64, x: &[Vec3]) -> TangentFrame {
        let p = &self.patches[patch];
        let b = p.basis_at(u, v, None).expect("parameter inside patch");
        let ids = &self.patch_nodes[patch];
        let mut a1 = Vec3::zeros();
        let mut a2 = Vec3::zeros();
        let mut d2 = [Vec3::zeros(); 3];
        for l in 0..9 {
            let (i, j) = b.grid[l];
            let xp = x[ids[p.grid_index(i, j)]];
            a1 += b.d1[l][0] * xp;
            a2 += b.d1[l][1] * xp;
            d2[0] += b.d2[l][0] * xp;
            d2[1] += b.d2[l][1] * xp;
            d2[2] += b.d2[l][2] * xp;
        }
        TangentFrame::new(a1, a2, d2).expect("nondegenerate surface point")
    }

    /// Edge parameterization: line coordinate `s` in [-1, 1] to the patch
    /// parameters and the parametric edge direction d(xi)/ds.
    pub fn edge_param(&self, element: usize, side: EdgeSide, s: f64) -> ((f64, f64), [f64; 2]) {
        let el = &self.elements[element];
        let (u0, u1) = el.range_u;
        let (v0, v1) = el.range_v;
        match side {
            EdgeSide::UMin | EdgeSide::UMax => {
                let u = if side == EdgeSide::UMin { u0 } else { u1 };
                let v = 0.5 * (v0 + v1) + 0.5 * s * (v1 - v0);
                ((u, v), [0.0, 0.5 * (v1 - v0)])
            }
            EdgeSide::VMin | EdgeSide::VMax => {
                let v = if side == EdgeSide::VMin { v0 } else { v1 };
                let u = 0.5 * (u0 + u1) + 0.5 * s * (u1 - u0);
                ((u, v), [0.5 * (u1 - u0), 0.0])
            }
        }
    }
}

/// Union-find over per-patch control point slots used while assembling the
/// global numbering.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let r = self.find(self.parent[i]);
            self.parent[i] = r;
            r
        } else {
            i
        }
    }
    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        // Smaller root wins for deterministic numbering.
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

/// Incremental multi-patch mesh assembly. Generators add patches, declare
/// slot identifications (seams, collapsed edges), then finish.
pub struct MeshBuilder {
    patches: Vec<Patch>,
    slot_offset: Vec<usize>,
    uf: Option<UnionFind>,
    // Pressure corner grids: per patch (nu_corners, nv_corners, wrap_u).
    pcorner_dims: Vec<(usize, usize, bool)>,
    pcorner_offset: Vec<usize>,
    puf: Option<UnionFind>,
}

impl MeshBuilder {
    pub fn new() -> Self {
        MeshBuilder {
            patches: Vec::new(),
            slot_offset: vec![0],
            uf: None,
            pcorner_dims: Vec::new(),
            pcorner_offset: vec![0],
            puf: None,
        }
    }

    pub fn add_patch(&mut self, patch: Patch) -> usize {
        let id = self.patches.len();
        let n_slots = patch.n_u * patch.n_v;
        self.slot_offset
            .push(self.slot_offset[id] + n_slots);
        let su = patch.knots_u.spans().len();
        let sv = patch.knots_v.spans().len();
        let nu_c = if patch.periodic_u { su } else { su + 1 };
        self.pcorner_dims.push((nu_c, sv + 1, patch.periodic_u));
        self.pcorner_offset
            .push(self.pcorner_offset[id] + nu_c * (sv + 1));
        self.patches.push(patch);
        id
    }

    pub fn patch(&self, id: usize) -> &Patch {
        &self.patches[id]
    }

    fn slot(&self, patch: usize, i: usize, j: usize) -> usize {
        let p = &self.patches[patch];
        self.slot_offset[patch] + j * p.n_u + i
    }

    fn pslot(&self, patch: usize, i: usize, j: usize) -> usize {
        let (nu, _, wrap) = self.pcorner_dims[patch];
        let i = if wrap { i % nu } else { i };
        self.pcorner_offset[patch] + j * nu + i
    }

    fn ensure_uf(&mut self) {
        if self.uf.is_none() {
            self.uf = Some(UnionFind::new(*self.slot_offset.last().unwrap()));
            self.puf = Some(UnionFind::new(*self.pcorner_offset.last().unwrap()));
        }
    }

    /// Identify two control point slots (must be geometrically coincident).
    pub fn merge_nodes(&mut self, a: (usize, usize, usize), b: (usize, usize, usize)) {
        self.ensure_uf();
        let pa = self.patches[a.0].ctrl[self.patches[a.0].grid_index(a.1, a.2)];
        let pb = self.patches[b.0].ctrl[self.patches[b.0].grid_index(b.1, b.2)];
        debug_assert!(
            (pa - pb).norm() < 1e-9 * (1.0 + pa.norm()),
            "merging non-coincident control points {pa:?} vs {pb:?}"
        );
        let sa = self.slot(a.0, a.1, a.2);
        let sb = self.slot(b.0, b.1, b.2);
        self.uf.as_mut().unwrap().union(sa, sb);
    }

    /// Identify two pressure corner slots, indexed by (patch, break_i, break_j).
    pub fn merge_pressure(&mut self, a: (usize, usize, usize), b: (usize, usize, usize)) {
        self.ensure_uf();
        let sa = self.pslot(a.0, a.1, a.2);
        let sb = self.pslot(b.0, b.1, b.2);
        self.puf.as_mut().unwrap().union(sa, sb);
    }

    /// Finish: assign global numbers, build elements.
    pub fn finish(
        mut self,
        boundary_edges: BTreeMap<String, Vec<OrientedEdge>>,
        node_sets_raw: BTreeMap<String, Vec<(usize, usize, usize)>>,
        seams: Vec<SeamEdge>,
    ) -> ControlMesh {
        self.ensure_uf();
        let n_slots = *self.slot_offset.last().unwrap();
        let mut uf = self.uf.take().unwrap();
        // Canonical slot -> global id in ascending slot order.
        let mut global_of_slot = vec![usize::MAX; n_slots];
        let mut nodes = Vec::new();
        let mut slot_coord = vec![Vec3::zeros(); n_slots];
        for (pid, p) in self.patches.iter().enumerate() {
            for j in 0..p.n_v {
                for i in 0..p.n_u {
                    slot_coord[self.slot_offset[pid] + j * p.n_u + i] =
                        p.ctrl[p.grid_index(i, j)];
                }
            }
        }
        for s in 0..n_slots {
            let r = uf.find(s);
            if r == s {
                global_of_slot[s] = nodes.len();
                nodes.push(slot_coord[s]);
            }
        }
        for s in 0..n_slots {
            let r = uf.find(s);
            global_of_slot[s] = global_of_slot[r];
        }
        let patch_nodes: Vec<Vec<usize>> = self
            .patches
            .iter()
            .enumerate()
            .map(|(pid, p)| {
                (0..p.n_u * p.n_v)
                    .map(|k| global_of_slot[self.slot_offset[pid] + k])
                    .collect()
            })
            .collect();

        // Pressure corners.
        let n_pslots = *self.pcorner_offset.last().unwrap();
        let mut puf = self.puf.take().unwrap();
        let mut global_of_pslot = vec![usize::MAX; n_pslots];
        let mut pressure_coords = Vec::new();
        for s in 0..n_pslots {
            if puf.find(s) == s {
                global_of_pslot[s] = pressure_coords.len();
                pressure_coords.push(Vec3::zeros()); // coordinates filled below
            }
        }
        for s in 0..n_pslots {
            let r = puf.find(s);
            global_of_pslot[s] = global_of_pslot[r];
        }

        // Elements.
        let mut elements = Vec::new();
        for (pid, p) in self.patches.iter().enumerate() {
            let su = p.knots_u.spans();
            let sv = p.knots_v.spans();
            for (kj, &spv) in sv.iter().enumerate() {
                for (ki, &spu) in su.iter().enumerate() {
                    let mut enodes = [0usize; 9];
                    let mut l = 0;
                    for jv in 0..3 {
                        for ju in 0..3 {
                            let gi = spu - 2 + ju;
                            let gj = spv - 2 + jv;
                            let gi = if p.periodic_u { gi % p.n_u } else { gi };
                            enodes[l] = patch_nodes[pid][gj * p.n_u + gi];
                            l += 1;
                        }
                    }
                    let pc = [
                        global_of_pslot[self.pslot(pid, ki, kj)],
                        global_of_pslot[self.pslot(pid, ki + 1, kj)],
                        global_of_pslot[self.pslot(pid, ki, kj + 1)],
                        global_of_pslot[self.pslot(pid, ki + 1, kj + 1)],
                    ];
                    let ((u0, u1), (v0, v1)) = p.span_range((spu, spv));
                    elements.push(Element {
                        patch: pid,
                        span: (spu, spv),
                        range_u: (u0, u1),
                        range_v: (v0, v1),
                        nodes: enodes,
                        pressure: pc,
                    });
                }
            }
        }
        // Pressure coordinates: corner surface points.
        for el in &elements {
            let p = &self.patches[el.patch];
            let corners = [
                (el.range_u.0, el.range_v.0),
                (el.range_u.1, el.range_v.0),
                (el.range_u.0, el.range_v.1),
                (el.range_u.1, el.range_v.1),
            ];
            for (c, &(u, v)) in corners.iter().enumerate() {
                pressure_coords[el.pressure[c]] = p.point(u, v).unwrap();
            }
        }

        let node_sets = node_sets_raw
            .into_iter()
            .map(|(name, slots)| {
                let mut ids: Vec<usize> = slots
                    .into_iter()
                    .map(|(p, i, j)| {
                        let pp = &self.patches[p];
                        let i = if pp.periodic_u { i % pp.n_u } else { i };
                        patch_nodes[p][j * pp.n_u + i]
                    })
                    .collect();
                ids.sort_unstable();
                ids.dedup();
                (name, ids)
            })
            .collect();

        let mut mesh = ControlMesh {
            patches: self.patches,
            nodes,
            patch_nodes,
            elements,
            pressure_coords,
            boundary_edges,
            node_sets,
            seams,
            projection: Vec::new(),
        };
        mesh.projection = compute_projection_points(&mesh);
        mesh
    }
}

impl Default for MeshBuilder {
    fn default() -> Self {
        Self::new()
    }
}

/// Closest-point parameters of every node on the initial surface, seeded at
/// the Greville abscissae of one owning slot and refined by a few Newton
/// steps clamped to the patch domain.
fn compute_projection_points(mesh: &ControlMesh) -> Vec<(usize, f64, f64)> {
    let mut out = vec![(usize::MAX, 0.0, 0.0); mesh.nodes.len()];
    for (pid, p) in mesh.patches.iter().enumerate() {
        let (ulo, uhi) = p.knots_u.domain();
        let (vlo, vhi) = p.knots_v.domain();
        let margin_u = 1e-6 * (uhi - ulo);
        let margin_v = 1e-6 * (vhi - vlo);
        for j in 0..p.n_v {
            for i in 0..p.n_u {
                let node = mesh.patch_nodes[pid][j * p.n_u + i];
                if out[node].0 != usize::MAX {
                    continue;
                }
                let gu = 0.5 * (p.knots_u.knots[i + 1] + p.knots_u.knots[i + 2]);
                let gv = 0.5 * (p.knots_v.knots[j + 1] + p.knots_v.knots[j + 2]);
                let mut u = gu.clamp(ulo + margin_u, uhi - margin_u);
                let mut v = gv.clamp(vlo + margin_v, vhi - margin_v);
                let target = mesh.nodes[node];
                for _ in 0..8 {
                    let f = match p.frame(u, v) {
                        Ok(f) => f,
                        Err(_) => break,
                    };
                    let r = p.point(u, v).unwrap() - target;
                    // Gauss-Newton step on |x(u,v) - P|^2 in the tangent plane.
                    let g = [r.dot(&f.a1), r.dot(&f.a2)];
                    let m = crate::Mat2::new(
                        f.a1.dot(&f.a1),
                        f.a1.dot(&f.a2),
                        f.a2.dot(&f.a1),
                        f.a2.dot(&f.a2),
                    );
                    let det = m.determinant();
                    if det.abs() < 1e-14 {
                        break;
                    }
                    let du = (m[(1, 1)] * g[0] - m[(0, 1)] * g[1]) / det;
                    let dv = (m[(0, 0)] * g[1] - m[(1, 0)] * g[0]) / det;
                    let nu = (u - du).clamp(ulo + margin_u, uhi - margin_u);
                    let nv = (v - dv).clamp(vlo + margin_v, vhi - margin_v);
                    let step = (nu - u).abs() + (nv - v).abs();
                    u = nu;
                    v = nv;
                    if step < 1e-12 {
                        break;
                    }
                }
                out[node] = (pid, u, v);
            }
        }
    }
    out
}
