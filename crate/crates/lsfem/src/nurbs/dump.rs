//! Plain-text mesh dump for debugging and regression snapshots.

use super::mesh::ControlMesh;
use std::fmt::Write as _;

/// Versioned text listing of patches (degrees, knots, weighted control
/// points) and element connectivity.
pub fn dump_mesh(mesh: &ControlMesh) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "LSFEM-MESH v1");
    let _ = writeln!(
        s,
        "patches {} nodes {} elements {} pressure_nodes {}",
        mesh.patches.len(),
        mesh.n_nodes(),
        mesh.n_elements(),
        mesh.n_pressure()
    );
    for (pid, p) in mesh.patches.iter().enumerate() {
        let _ = writeln!(
            s,
            "patch {} degree {} {} n {} {} periodic_u {}",
            pid, p.knots_u.degree, p.knots_v.degree, p.n_u, p.n_v, p.periodic_u
        );
        let _ = write!(s, "knots_u");
        for k in &p.knots_u.knots {
            let _ = write!(s, " {k}");
        }
        let _ = writeln!(s);
        let _ = write!(s, "knots_v");
        for k in &p.knots_v.knots {
            let _ = write!(s, " {k}");
        }
        let _ = writeln!(s);
        for j in 0..p.n_v {
            for i in 0..p.n_u {
                let idx = p.grid_index(i, j);
                let c = p.ctrl[idx];
                let w = p.weights[idx];
                let _ = writeln!(
                    s,
                    "cp {} {} {} {} {} {} {}",
                    i, j, c.x, c.y, c.z, w, mesh.patch_nodes[pid][idx]
                );
            }
        }
    }
    for (eid, el) in mesh.elements.iter().enumerate() {
        let _ = write!(s, "element {} patch {} nodes", eid, el.patch);
        for n in el.nodes {
            let _ = write!(s, " {n}");
        }
        let _ = write!(s, " pressure");
        for n in el.pressure {
            let _ = write!(s, " {n}");
        }
        let _ = writeln!(s);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nurbs::generators::{make_mesh, MeshScenario};

    #[test]
    fn dump_has_versioned_header_and_is_stable() {
        let mesh = make_mesh(
            MeshScenario::Strip {
                s_len: 1.0,
                l_len: 1.0,
            },
            2,
        )
        .unwrap();
        let d1 = dump_mesh(&mesh);
        let d2 = dump_mesh(&mesh);
        assert!(d1.starts_with("LSFEM-MESH v1\n"));
        assert_eq!(d1, d2);
        assert!(d1.contains("element 0 patch 0 nodes"));
    }
}
