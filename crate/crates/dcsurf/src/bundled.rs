//! Bundled example surfaces: a pair of pants with the vertex-scaling
//! structure, a pair of pants with a mixed A2/B2 structure, and a one-holed
//! torus.

use crate::dcs::Family;
use crate::surface::{EdgeDoc, FaceDoc, SurfaceDocument};

pub const NAMES: [&str; 3] = ["pants-guo", "pants-mixed-a2b2", "torus-guo"];

/// Pair of pants (3 boundary components, 2 hexagons, 3 edges) carrying the
/// vertex scaling alpha = 0, f = 0, eta = 4: every edge length is
/// arccosh 3 and every split is symmetric.
pub fn pants_guo() -> SurfaceDocument {
    SurfaceDocument {
        boundary_components: 3,
        alpha: vec![0, 0, 0],
        f: vec![0.0, 0.0, 0.0],
        faces: vec![
            FaceDoc { corners: [0, 1, 2] },
            FaceDoc { corners: [0, 2, 1] },
        ],
        edges: vec![
            EdgeDoc {
                sides: [[0, 0], [1, 2]],
                eta: 4.0,
                c: 0.0,
                family: Family::A1p,
            },
            EdgeDoc {
                sides: [[0, 1], [1, 1]],
                eta: 4.0,
                c: 0.0,
                family: Family::A1p,
            },
            EdgeDoc {
                sides: [[0, 2], [1, 0]],
                eta: 4.0,
                c: 0.0,
                family: Family::A1p,
            },
        ],
    }
}

/// Pair of pants carrying one A2 edge and two B2 edges per face, with a
/// nontrivial C-cocycle and asymmetric f chosen so that every edge has a
/// real split.
pub fn pants_mixed_a2b2() -> SurfaceDocument {
    SurfaceDocument {
        boundary_components: 3,
        alpha: vec![0, 0, 0],
        f: vec![0.9, 0.1, -0.7],
        faces: vec![
            FaceDoc { corners: [0, 1, 2] },
            FaceDoc { corners: [0, 2, 1] },
        ],
        edges: vec![
            EdgeDoc {
                sides: [[0, 0], [1, 2]],
                eta: -0.15,
                c: 0.25,
                family: Family::B2,
            },
            EdgeDoc {
                sides: [[0, 1], [1, 1]],
                eta: -0.3,
                c: 0.15,
                family: Family::B2,
            },
            EdgeDoc {
                sides: [[0, 2], [1, 0]],
                eta: 5.5,
                c: -0.4,
                family: Family::A2,
            },
        ],
    }
}

/// One-holed torus (1 boundary component, 2 hexagons, 3 edges) with the
/// vertex scaling alpha = 0.
pub fn torus_guo() -> SurfaceDocument {
    SurfaceDocument {
        boundary_components: 1,
        alpha: vec![0],
        f: vec![0.0],
        faces: vec![
            FaceDoc { corners: [0, 0, 0] },
            FaceDoc { corners: [0, 0, 0] },
        ],
        edges: vec![
            EdgeDoc {
                sides: [[0, 0], [1, 0]],
                eta: 4.0,
                c: 0.0,
                family: Family::A1p,
            },
            EdgeDoc {
                sides: [[0, 1], [1, 1]],
                eta: 4.0,
                c: 0.0,
                family: Family::A1p,
            },
            EdgeDoc {
                sides: [[0, 2], [1, 2]],
                eta: 4.0,
                c: 0.0,
                family: Family::A1p,
            },
        ],
    }
}

pub fn by_name(name: &str) -> Option<SurfaceDocument> {
    match name {
        "pants-guo" => Some(pants_guo()),
        "pants-mixed-a2b2" => Some(pants_mixed_a2b2()),
        "torus-guo" => Some(torus_guo()),
        _ => None,
    }
}
