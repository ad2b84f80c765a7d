//! Combinatorial ideal triangulations of bordered surfaces, their JSON
//! serialization, and the global metric/split/center computation.
//!
//! A surface document lists boundary components (each carrying `alpha` and
//! the conformal factor `f`), faces as corner triples of boundary labels
//! (repeats allowed), and edges as pairings of face sides with their
//! conformal data `(eta, C, family)`. Side `s` of a face runs between
//! corners `s` and `s+1 mod 3`; paired sides traverse the edge in opposite
//! directions. Edge indexing is deterministic: edges are sorted by the
//! smaller `(face, side)` of their two sides, and that side fixes the
//! orientation `(i, j)` under which `C` and the split ratio are stored.

use crate::dcs::{self, EdgeConformal, EdgeSplit, Family};
use crate::hexagon::{self, CenterReport};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SurfaceError {
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("unpaired side (face {face}, side {side}): appears in {count} edge pairings")]
    UnpairedSide {
        face: usize,
        side: usize,
        count: usize,
    },
    #[error("disconnected surface: face {0} is unreachable from face 0")]
    DisconnectedSurface(usize),
    #[error("bad family combination on face {face}: {rule}")]
    BadFamilyCombination { face: usize, rule: String },
    #[error("bad family combination across the surface: {0}")]
    BadGlobalFamilies(String),
    #[error("broken cocycle on face {face}: C sums to {sum:e}")]
    BrokenCocycle { face: usize, sum: f64 },
    #[error("not genus zero: coned Euler characteristic is {chi}")]
    NotGenusZero { chi: i64 },
    #[error("inconsistent cocycle on edge {edge}: mismatch {mismatch:e}")]
    InconsistentCocycle { edge: usize, mismatch: f64 },
    #[error("C-normalization applies to A2/B2 structures, edge {0} has family {1:?}")]
    NotCFamily(usize, Family),
}

/// One face side: `(face index, side index in 0..3)`.
pub type Side = (usize, usize);

/// An unoriented ideal edge: its two sides (canonically ordered) and the
/// boundary labels of its oriented first reading.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EdgeTopology {
    pub sides: [Side; 2],
    /// Boundary labels `(i, j)` read along the first side.
    pub ends: (usize, usize),
}

/// Combinatorial ideal triangulation.
#[derive(Clone, Debug, Serialize)]
pub struct IdealTriangulation {
    pub n_boundary: usize,
    pub faces: Vec<[usize; 3]>,
    pub edges: Vec<EdgeTopology>,
}

/// Conformal data arrays parallel to the triangulation.
#[derive(Clone, Debug, Serialize)]
pub struct SurfaceConformalData {
    pub alpha: Vec<i8>,
    pub f: Vec<f64>,
    pub edges: Vec<EdgeData>,
}

/// Per-edge conformal data, stored under the edge's canonical orientation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EdgeData {
    pub eta: f64,
    pub c: f64,
    pub family: Family,
}

/// The JSON document format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfaceDocument {
    pub boundary_components: usize,
    pub alpha: Vec<i8>,
    pub f: Vec<f64>,
    pub faces: Vec<FaceDoc>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FaceDoc {
    pub corners: [usize; 3],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub sides: [[usize; 2]; 2],
    pub eta: f64,
    #[serde(rename = "C", default)]
    pub c: f64,
    pub family: Family,
}

impl IdealTriangulation {
    /// Coned Euler characteristic `N - |E| + |F|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.n_boundary as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Genus of the coned surface, from `chi = 2 - 2g`.
    pub fn genus(&self) -> i64 {
        (2 - self.euler_characteristic()) / 2
    }

    /// Oriented boundary labels `(i, j)` of a face side.
    pub fn side_corners(&self, (face, side): Side) -> (usize, usize) {
        let f = self.faces[face];
        (f[side], f[(side + 1) % 3])
    }

    /// Edge index incident to a face side.
    pub fn edge_of_side(&self, side: Side) -> Option<usize> {
        self.edges
            .iter()
            .position(|e| e.sides[0] == side || e.sides[1] == side)
    }
}

/// Parse and validate a JSON document.
pub fn parse(document: &[u8]) -> Result<(IdealTriangulation, SurfaceConformalData), SurfaceError> {
    let doc: SurfaceDocument = serde_json::from_slice(document)
        .map_err(|e| SurfaceError::MalformedDocument(e.to_string()))?;
    parse_document(&doc)
}

/// Validate an already-deserialized document.
pub fn parse_document(
    doc: &SurfaceDocument,
) -> Result<(IdealTriangulation, SurfaceConformalData), SurfaceError> {
    let n = doc.boundary_components;
    if n == 0 {
        return Err(SurfaceError::MalformedDocument(
            "no boundary components".into(),
        ));
    }
    if doc.alpha.len() != n || doc.f.len() != n {
        return Err(SurfaceError::MalformedDocument(format!(
            "alpha/f arrays must have length {n}, got {}/{}",
            doc.alpha.len(),
            doc.f.len()
        )));
    }
    for (r, &a) in doc.alpha.iter().enumerate() {
        if ![-1, 0, 1].contains(&a) {
            return Err(SurfaceError::MalformedDocument(format!(
                "alpha[{r}] = {a} outside {{-1, 0, 1}}"
            )));
        }
    }
    for (r, &fr) in doc.f.iter().enumerate() {
        if !fr.is_finite() {
            return Err(SurfaceError::MalformedDocument(format!(
                "f[{r}] is not finite"
            )));
        }
    }
    if doc.faces.is_empty() {
        return Err(SurfaceError::MalformedDocument("no faces".into()));
    }
    for (fi, face) in doc.faces.iter().enumerate() {
        for &corner in &face.corners {
            if corner >= n {
                return Err(SurfaceError::MalformedDocument(format!(
                    "face {fi} references boundary component {corner} >= {n}"
                )));
            }
        }
    }

    // Every face side must appear in exactly one pairing.
    let n_sides = 3 * doc.faces.len();
    let mut seen = vec![0usize; n_sides];
    for (ei, edge) in doc.edges.iter().enumerate() {
        for s in edge.sides {
            let (face, side) = (s[0], s[1]);
            if face >= doc.faces.len() || side >= 3 {
                return Err(SurfaceError::MalformedDocument(format!(
                    "edge {ei} references side ({face}, {side}) out of range"
                )));
            }
            seen[3 * face + side] += 1;
        }
        if !edge.eta.is_finite() || !edge.c.is_finite() {
            return Err(SurfaceError::MalformedDocument(format!(
                "edge {ei} has non-finite data"
            )));
        }
        if !edge.family.uses_c() && edge.c != 0.0 {
            return Err(SurfaceError::MalformedDocument(format!(
                "edge {ei}: family {:?} does not use C but C = {}",
                edge.family, edge.c
            )));
        }
    }
    for face in 0..doc.faces.len() {
        for side in 0..3 {
            let count = seen[3 * face + side];
            if count != 1 {
                return Err(SurfaceError::UnpairedSide { face, side, count });
            }
        }
    }

    // Canonical edge order and orientation.
    let mut edges: Vec<(EdgeTopology, EdgeData)> = doc
        .edges
        .iter()
        .map(|e| {
            let mut s0 = (e.sides[0][0], e.sides[0][1]);
            let mut s1 = (e.sides[1][0], e.sides[1][1]);
            let mut c = e.c;
            if s1 < s0 {
                std::mem::swap(&mut s0, &mut s1);
                // the stored orientation follows the first side
                c = -c;
            }
            let f0 = doc.faces[s0.0].corners;
            let ends = (f0[s0.1], f0[(s0.1 + 1) % 3]);
            (
                EdgeTopology {
                    sides: [s0, s1],
                    ends,
                },
                EdgeData {
                    eta: e.eta,
                    c,
                    family: e.family,
                },
            )
        })
        .collect();
    edges.sort_by_key(|(t, _)| t.sides[0]);

    // Paired sides must join the same boundary components, traversed
    // oppositely when the two labels differ.
    for (ei, (topo, _)) in edges.iter().enumerate() {
        let f1 = doc.faces[topo.sides[1].0].corners;
        let other = (f1[topo.sides[1].1], f1[(topo.sides[1].1 + 1) % 3]);
        let (i, j) = topo.ends;
        if i != j && other != (j, i) {
            return Err(SurfaceError::MalformedDocument(format!(
                "edge {ei}: side ({}, {}) reads ({}, {}) but its partner reads ({}, {}); paired sides must traverse opposite directions",
                topo.sides[0].0, topo.sides[0].1, i, j, other.0, other.1
            )));
        }
        if i == j && (other.0 != i || other.1 != i) {
            return Err(SurfaceError::MalformedDocument(format!(
                "edge {ei}: sides join different boundary components"
            )));
        }
    }

    let tri = IdealTriangulation {
        n_boundary: n,
        faces: doc.faces.iter().map(|f| f.corners).collect(),
        edges: edges.iter().map(|(t, _)| *t).collect(),
    };
    let data = SurfaceConformalData {
        alpha: doc.alpha.clone(),
        f: doc.f.clone(),
        edges: edges.iter().map(|(_, d)| *d).collect(),
    };

    // Connectivity over shared edges.
    let mut reached = vec![false; tri.faces.len()];
    let mut queue = vec![0usize];
    reached[0] = true;
    while let Some(face) = queue.pop() {
        for e in &tri.edges {
            let (a, b) = (e.sides[0].0, e.sides[1].0);
            if a == face && !reached[b] {
                reached[b] = true;
                queue.push(b);
            }
            if b == face && !reached[a] {
                reached[a] = true;
                queue.push(a);
            }
        }
    }
    if let Some(face) = reached.iter().position(|r| !r) {
        return Err(SurfaceError::DisconnectedSurface(face));
    }

    // Family coexistence rules, per face and global.
    let audit = audit_families(&tri, &data);
    if let Some(v) = audit.face_violations.first() {
        return Err(SurfaceError::BadFamilyCombination {
            face: v.0,
            rule: v.1.clone(),
        });
    }
    if let Some(rule) = audit.global_violation {
        return Err(SurfaceError::BadGlobalFamilies(rule));
    }

    // Cocycle condition per face on A2/B2 edges.
    for (fi, _) in tri.faces.iter().enumerate() {
        let mut sum = 0.0;
        let mut scale: f64 = 0.0;
        let mut uses_c = false;
        for side in 0..3 {
            let (ei, reversed) = side_edge(&tri, (fi, side));
            let d = data.edges[ei];
            if d.family.uses_c() {
                uses_c = true;
                sum += if reversed { -d.c } else { d.c };
                scale = scale.max(d.c.abs());
            }
        }
        if uses_c && sum.abs() > 1e-12 * scale.max(1.0) {
            return Err(SurfaceError::BrokenCocycle { face: fi, sum });
        }
    }

    Ok((tri, data))
}

/// Locate the edge holding a face side, and whether the face reads it
/// against the stored orientation.
fn side_edge(tri: &IdealTriangulation, side: Side) -> (usize, bool) {
    for (ei, e) in tri.edges.iter().enumerate() {
        if e.sides[0] == side {
            return (ei, false);
        }
        if e.sides[1] == side {
            return (ei, true);
        }
    }
    unreachable!("side ({}, {}) not paired", side.0, side.1)
}

/// Family audit: per-face multiset check and global coexistence check.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyAudit {
    pub face_violations: Vec<(usize, String)>,
    pub global_violation: Option<String>,
    pub families_present: Vec<Family>,
    pub pass: bool,
}

/// Audit the family pattern of a parsed surface against the coexistence
/// rules: per face via the face-multiset rule, globally by requiring the
/// set of families present to be one A-family possibly together with its
/// matched B-family.
pub fn audit_families(tri: &IdealTriangulation, data: &SurfaceConformalData) -> FamilyAudit {
    let mut face_violations = Vec::new();
    for fi in 0..tri.faces.len() {
        let fams = [0, 1, 2].map(|s| data.edges[side_edge(tri, (fi, s)).0].family);
        if let Err(v) = dcs::validate_face_families(fams) {
            face_violations.push((fi, v.rule));
        }
    }
    let mut present: Vec<Family> = Vec::new();
    for e in &data.edges {
        if !present.contains(&e.family) {
            present.push(e.family);
        }
    }
    present.sort_by_key(|f| f.label());
    let global_violation = match present.as_slice() {
        [f] if f.is_a() => None,
        [f] => Some(format!(
            "claim (b): B-family {f:?} can not exist alone on a surface",
        )),
        [f, g] if (f.is_a() && g.is_b() && f.mixed_partner() == *g)
            || (g.is_a() && f.is_b() && g.mixed_partner() == *f) => None,
        _ => Some(format!(
            "claims (a)-(c): families {present:?} can not exist simultaneously; allowed sets are a single A-family or an A-family with its matched B-family",
        )),
    };
    let pass = face_violations.is_empty() && global_violation.is_none();
    FamilyAudit {
        face_violations,
        global_violation,
        families_present: present,
        pass,
    }
}

/// The conformal data of one edge, read in its stored orientation.
pub fn edge_conformal(
    data: &SurfaceConformalData,
    tri: &IdealTriangulation,
    ei: usize,
) -> EdgeConformal {
    let topo = tri.edges[ei];
    let d = data.edges[ei];
    let (i, j) = topo.ends;
    EdgeConformal {
        family: d.family,
        alpha_i: data.alpha[i],
        alpha_j: data.alpha[j],
        f_i: data.f[i],
        f_j: data.f[j],
        eta: d.eta,
        c: d.c,
    }
}

/// Per-edge record of the metric report.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeReport {
    pub index: usize,
    pub ends: (usize, usize),
    pub family: Family,
    pub cosh_l: Option<f64>,
    pub degenerate: bool,
    pub split: Option<EdgeSplit>,
    pub coth_d_ij: Option<f64>,
    pub coth_d_ji: Option<f64>,
    pub error: Option<String>,
}

/// Per-face record of the metric report.
#[derive(Clone, Debug, Serialize)]
pub struct FaceReport {
    pub index: usize,
    pub corners: [usize; 3],
    pub lengths: Option<[f64; 3]>,
    pub rhos: Option<[f64; 3]>,
    pub compat_residual: Option<f64>,
    pub det_m: Option<f64>,
    pub centers: Option<CenterReport>,
    pub arcs: Option<[f64; 3]>,
    pub error: Option<String>,
}

/// The full metric report of a surface.
#[derive(Clone, Debug, Serialize)]
pub struct MetricReport {
    pub tol_compat: f64,
    pub edges: Vec<EdgeReport>,
    pub faces: Vec<FaceReport>,
    pub boundary_lengths: Option<Vec<f64>>,
    pub valid: bool,
}

/// Compute lengths, splits, residuals, centers and boundary arcs for the
/// whole surface. Per-edge and per-face failures are recorded in the report
/// rather than aborting; `valid` reflects the aggregate.
pub fn compute_metric(
    tri: &IdealTriangulation,
    data: &SurfaceConformalData,
    tol_compat: f64,
) -> MetricReport {
    let mut valid = true;
    let mut edge_reports = Vec::with_capacity(tri.edges.len());
    let mut edge_values: Vec<Option<(f64, f64)>> = Vec::with_capacity(tri.edges.len()); // (cosh_l, rho)

    for ei in 0..tri.edges.len() {
        let e = edge_conformal(data, tri, ei);
        let mut rep = EdgeReport {
            index: ei,
            ends: tri.edges[ei].ends,
            family: e.family,
            cosh_l: None,
            degenerate: false,
            split: None,
            coth_d_ij: None,
            coth_d_ji: None,
            error: None,
        };
        match e.cosh_length() {
            Ok(cl) => {
                rep.cosh_l = Some(cl.value);
                rep.degenerate = cl.degenerate;
                if cl.degenerate {
                    valid = false;
                    rep.error = Some(format!("degenerate edge: cosh l = {} <= 1", cl.value));
                    edge_values.push(None);
                } else {
                    match e
                        .ratio()
                        .and_then(|rho| dcs::split_edge(cl.value, rho).map(|s| (rho, s)))
                    {
                        Ok((rho, split)) => {
                            rep.split = Some(split);
                            rep.coth_d_ij = e.coth_d().ok();
                            rep.coth_d_ji = e.reversed().coth_d().ok();
                            edge_values.push(Some((cl.value, rho)));
                        }
                        Err(err) => {
                            valid = false;
                            rep.error = Some(err.to_string());
                            edge_values.push(None);
                        }
                    }
                }
            }
            Err(err) => {
                valid = false;
                rep.error = Some(err.to_string());
                edge_values.push(None);
            }
        }
        edge_reports.push(rep);
    }

    let mut face_reports = Vec::with_capacity(tri.faces.len());
    let mut boundary_lengths = vec![0.0; tri.n_boundary];
    let mut arcs_complete = true;

    for (fi, corners) in tri.faces.iter().enumerate() {
        let mut rep = FaceReport {
            index: fi,
            corners: *corners,
            lengths: None,
            rhos: None,
            compat_residual: None,
            det_m: None,
            centers: None,
            arcs: None,
            error: None,
        };
        // side data in the face's own orientation
        let mut lengths = [0.0; 3];
        let mut rhos = [0.0; 3];
        let mut ok = true;
        for side in 0..3 {
            let (ei, reversed) = side_edge(tri, (fi, side));
            match edge_values[ei] {
                Some((cosh_l, rho)) => {
                    lengths[side] = cosh_l.acosh();
                    rhos[side] = if reversed { 1.0 / rho } else { rho };
                }
                None => {
                    ok = false;
                }
            }
        }
        if !ok {
            rep.error = Some("incident edge failed".into());
            valid = false;
            arcs_complete = false;
            face_reports.push(rep);
            continue;
        }
        rep.lengths = Some(lengths);
        rep.rhos = Some(rhos);
        let residual = hexagon::compatibility_residual(rhos);
        rep.compat_residual = Some(residual);
        match hexagon::realize(lengths[0], lengths[1], lengths[2]) {
            Ok(hex) => {
                rep.det_m = Some(hexagon::det_m(hexagon::perpendicular_matrix(&hex, rhos)));
                let arcs = hexagon::boundary_arcs(&hex);
                rep.arcs = Some(arcs);
                for (corner, arc) in corners.iter().zip(arcs) {
                    boundary_lengths[*corner] += arc;
                }
                match hexagon::face_center(&hex, rhos, tol_compat) {
                    Ok(report) => rep.centers = Some(report),
                    Err(err) => {
                        valid = false;
                        rep.error = Some(err.to_string());
                    }
                }
            }
            Err(err) => {
                valid = false;
                arcs_complete = false;
                rep.error = Some(err.to_string());
            }
        }
        face_reports.push(rep);
    }

    MetricReport {
        tol_compat,
        edges: edge_reports,
        faces: face_reports,
        boundary_lengths: arcs_complete.then_some(boundary_lengths),
        valid,
    }
}

/// Reparameterize a genus-zero A2/B2 structure to `C = 0` while keeping the
/// metric invariant: build `g` by breadth-first traversal with `g_0 = 0` and
/// `g_j = g_i - C_ij` over tree edges, check every non-tree edge closes, and
/// return `f + g` with `eta~_ij = e^{-g_i - g_j} eta_ij`.
pub fn normalize_c(
    tri: &IdealTriangulation,
    data: &SurfaceConformalData,
) -> Result<SurfaceConformalData, SurfaceError> {
    for (ei, e) in data.edges.iter().enumerate() {
        if !e.family.uses_c() {
            return Err(SurfaceError::NotCFamily(ei, e.family));
        }
    }
    let chi = tri.euler_characteristic();
    if chi != 2 {
        return Err(SurfaceError::NotGenusZero { chi });
    }

    let n = tri.n_boundary;
    let mut g = vec![f64::NAN; n];
    g[0] = 0.0;
    let mut tree_edge = vec![false; tri.edges.len()];
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (ei, e) in tri.edges.iter().enumerate() {
            let (a, b) = e.ends;
            let c = data.edges[ei].c;
            if a == i && g[b].is_nan() {
                g[b] = g[a] - c;
                tree_edge[ei] = true;
                queue.push_back(b);
            } else if b == i && g[a].is_nan() {
                g[a] = g[b] + c;
                tree_edge[ei] = true;
                queue.push_back(a);
            }
        }
    }
    if let Some(r) = g.iter().position(|x| x.is_nan()) {
        // cannot happen on a connected parsed surface, but keep the message exact
        return Err(SurfaceError::MalformedDocument(format!(
            "boundary component {r} unreachable in the edge graph"
        )));
    }

    // Non-tree edges must close: C_ij = g_i - g_j.
    for (ei, e) in tri.edges.iter().enumerate() {
        if tree_edge[ei] {
            continue;
        }
        let (i, j) = e.ends;
        let mismatch = g[i] - g[j] - data.edges[ei].c;
        let scale = g[i]
            .abs()
            .max(g[j].abs())
            .max(data.edges[ei].c.abs())
            .max(1.0);
        if mismatch.abs() > 1e-12 * scale {
            return Err(SurfaceError::InconsistentCocycle { edge: ei, mismatch });
        }
    }

    let f: Vec<f64> = data.f.iter().zip(&g).map(|(f, g)| f + g).collect();
    let edges: Vec<EdgeData> = data
        .edges
        .iter()
        .zip(&tri.edges)
        .map(|(d, t)| {
            let (i, j) = t.ends;
            EdgeData {
                eta: d.eta * (-g[i] - g[j]).exp(),
                c: 0.0,
                family: d.family,
            }
        })
        .collect();
    Ok(SurfaceConformalData {
        alpha: data.alpha.clone(),
        f,
        edges,
    })
}
