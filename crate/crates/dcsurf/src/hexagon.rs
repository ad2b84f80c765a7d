//! Realization of a right-angled hyperbolic hexagon (hyper-ideal triangle)
//! in the hyperboloid model, and the dual machinery on top of it: edge
//! centers, the perpendicular-intersection matrix, the face center, the
//! compatibility residual and boundary arcs.
//!
//! The three boundary geodesics are the polar lines of three unit space-like
//! poles `v_i, v_j, v_k` with pairwise pairings `v_r * v_s = -cosh l_rs`.
//! The realization is gauge-fixed: `v_i = (1,0,0)`, `v_j` in the x1-x3 plane
//! with negative x3, and `v_k` selected by `det(v_i, v_j, v_k) > 0`, so
//! equal inputs give byte-identical coordinates.
//!
//! Sign conventions. Edge centers `c_rs` solve `(c*v_s)/(c*v_r) = rho_rs`
//! inside `Span(v_r, v_s)`, scaled to unit norm with the sign fixed by
//! `c*(v_r+v_s) < 0`. With that choice the time-like centers satisfy
//! `-c*v_r = sinh d_rs` and `-c*v_s = sinh d_sr` with the signed distances
//! of a real split. Face centers use `c*(v_i+v_j+v_k) < 0`; the pole sum
//! pairs negatively with each pole, so this is the interior-side convention.
//! In this gauge such time-like centers carry `x3 < 0`: the hexagon interior
//! itself pairs positively with the poles, and the chosen pairing signs
//! pick the antipodal representative. Klein projections are unaffected.

use crate::lorentz::{det3, CausalClass, LorentzVector, EPS_LIGHT};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum HexagonError {
    #[error("non-realizable: {0}")]
    NonRealizable(String),
    #[error("degenerate edge plane: poles are parallel")]
    DegenerateEdgePlane,
    #[error("incompatible splits: |rho_ij rho_jk rho_ki - 1| = {residual:e} exceeds tolerance")]
    IncompatibleSplits { residual: f64 },
    #[error("numerically parallel perpendicular rows")]
    NumericallyParallelRows,
}

/// Default absolute tolerance on the compatibility residual.
pub const TOL_COMPAT: f64 = 1e-8;

/// A realized hexagon: three unit space-like poles and their Gram matrix.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct HexRealization {
    /// Poles in corner order: `[v_i, v_j, v_k]`.
    pub poles: [LorentzVector; 3],
    /// Gram matrix `poles[r] * poles[s]`.
    pub gram: [[f64; 3]; 3],
    /// Side lengths in side order: `[l_ij, l_jk, l_ki]`.
    pub lengths: [f64; 3],
}

/// An edge or face center with its causal class.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Center {
    pub point: LorentzVector,
    pub class: CausalClass,
}

/// Everything the dual structure of one face reports.
#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    pub edge_centers: [Center; 3],
    pub face_center: Center,
    pub det_m: f64,
    pub compat_residual: f64,
    /// `w_rs * c` for the three rows of the perpendicular matrix.
    pub row_residuals: [f64; 3],
    /// `(c (x) c_rs) * (v_r (x) v_s)` for the three edges, normalized.
    pub perp_residuals: [f64; 3],
}

/// Place the hexagon with side lengths `l_ij, l_jk, l_ki` in the fixed gauge.
pub fn realize(l_ij: f64, l_jk: f64, l_ki: f64) -> Result<HexRealization, HexagonError> {
    for (name, l) in [("l_ij", l_ij), ("l_jk", l_jk), ("l_ki", l_ki)] {
        if !l.is_finite() || l <= 0.0 {
            return Err(HexagonError::NonRealizable(format!(
                "{name} = {l} is not a positive length"
            )));
        }
    }
    let (c_ij, s_ij) = (l_ij.cosh(), l_ij.sinh());
    let (c_jk, c_ki) = (l_jk.cosh(), l_ki.cosh());
    if c_ij <= 1.0 + 1e-13 || c_jk <= 1.0 + 1e-13 || c_ki <= 1.0 + 1e-13 {
        return Err(HexagonError::NonRealizable(
            "cosh l at 1: rank drop, poles coincide".into(),
        ));
    }
    let v_i = LorentzVector::new(1.0, 0.0, 0.0);
    let v_j = LorentzVector::new(-c_ij, 0.0, -s_ij);
    // v_k from the two pairing constraints and unit norm.
    let a = -c_ki;
    let c3 = -(c_jk + c_ij * c_ki) / s_ij;
    let b_sq = 1.0 + c3 * c3 - a * a;
    if b_sq <= 1e-13 {
        return Err(HexagonError::NonRealizable(format!(
            "Gram matrix does not have signature (2,1): b^2 = {b_sq:e}"
        )));
    }
    // det(v_i, v_j, v_k) = sinh(l_ij) * b, so the positive root gives the
    // positive-determinant configuration.
    let v_k = LorentzVector::new(a, b_sq.sqrt(), c3);

    let poles = [v_i, v_j, v_k];
    let mut gram = [[0.0; 3]; 3];
    for r in 0..3 {
        for s in 0..3 {
            gram[r][s] = poles[r].inner(poles[s]);
        }
    }
    // Signature (2,1) by Jacobi's rule: leading minors 1 > 0, 1 - cosh^2 < 0,
    // det < 0.
    let det = gram[0][0] * (gram[1][1] * gram[2][2] - gram[1][2] * gram[2][1])
        - gram[0][1] * (gram[1][0] * gram[2][2] - gram[1][2] * gram[2][0])
        + gram[0][2] * (gram[1][0] * gram[2][1] - gram[1][1] * gram[2][0]);
    if det >= 0.0 || gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0] >= 0.0 {
        return Err(HexagonError::NonRealizable(
            "Gram signature is not (2,1)".into(),
        ));
    }
    Ok(HexRealization {
        poles,
        gram,
        lengths: [l_ij, l_jk, l_ki],
    })
}

impl HexRealization {
    /// The poles of side `s`: side 0 is (i,j), side 1 is (j,k), side 2 is (k,i).
    pub fn side_poles(&self, side: usize) -> (LorentzVector, LorentzVector) {
        (self.poles[side % 3], self.poles[(side + 1) % 3])
    }

    pub fn pole_sum(&self) -> LorentzVector {
        self.poles[0] + self.poles[1] + self.poles[2]
    }
}

/// Classify by the sign of a normalized Lorentz self inner product
/// (negative means time-like); the sheet bit is patched by callers.
fn classify(lorentz_sq_normalized: f64) -> CausalClass {
    if lorentz_sq_normalized < -EPS_LIGHT {
        CausalClass::TimeLike { upper: false }
    } else if lorentz_sq_normalized > EPS_LIGHT {
        CausalClass::SpaceLike
    } else {
        CausalClass::LightLike
    }
}

/// Center of the oriented side `side` with split ratio `rho` (read in the
/// side's own orientation).
///
/// The center lies in `Span(v_r, v_s)` with `(c*v_s)/(c*v_r) = rho`; it is
/// time-like exactly when the split is real, in which case `-c*v_r = sinh
/// d_rs` and `-c*v_s = sinh d_sr`.
pub fn edge_center(hex: &HexRealization, side: usize, rho: f64) -> Result<Center, HexagonError> {
    if rho == 0.0 || !rho.is_finite() {
        return Err(HexagonError::NonRealizable(format!(
            "side {side}: zero split ratio"
        )));
    }
    let (v_r, v_s) = hex.side_poles(side);
    let c = -v_r.inner(v_s); // cosh of the side length
    if c <= 1.0 + 1e-13 {
        return Err(HexagonError::DegenerateEdgePlane);
    }
    let sinh_sq = c * c - 1.0;
    // c_raw = (1 + rho c) v_r + (rho + c) v_s satisfies the ratio constraint
    // with c_raw * v_r = -sinh^2 l and c_raw * c_raw = -sinh^2 l (1 + 2 rho c + rho^2).
    let raw = v_r.scale(1.0 + rho * c) + v_s.scale(rho + c);
    let q = 1.0 + 2.0 * rho * c + rho * rho;
    let q_scale = 1.0 + 2.0 * rho.abs() * c + rho * rho;
    // c_raw * c_raw = -sinh^2 l * q, so positive q means time-like.
    let class = classify(-q / q_scale);

    // Interior-side sign: c * (v_r + v_s) < 0, falling back to c * v_r < 0
    // at the symmetric virtual point rho = -1 where the primary pairing
    // vanishes identically.
    let orient = |v: LorentzVector| -> LorentzVector {
        let primary = v.inner(v_r + v_s);
        let pick = if primary.abs() > 1e-12 * v.euclid_norm() * (v_r + v_s).euclid_norm() {
            primary
        } else {
            v.inner(v_r)
        };
        if pick > 0.0 {
            -v
        } else {
            v
        }
    };

    let point = match class {
        CausalClass::TimeLike { .. } => orient(raw.scale(1.0 / (sinh_sq * q).sqrt())),
        CausalClass::SpaceLike => orient(raw.scale(1.0 / (sinh_sq * (-q)).sqrt())),
        // light-like centers stay unscaled up to the orientation sign
        CausalClass::LightLike => orient(raw),
    };
    let class = match class {
        CausalClass::TimeLike { .. } => CausalClass::TimeLike {
            upper: point.x3 > 0.0,
        },
        other => other,
    };
    Ok(Center { point, class })
}

/// Rows of the perpendicular-intersection system: `w_rs = v_s - rho_rs v_r`
/// for the three oriented sides. The common point of the three edge
/// perpendiculars is the kernel of this matrix (acting through `J`), and
/// each row is `(c_rs * v_r) v_s - (c_rs * v_s) v_r` rescaled by the
/// nonzero factor `c_rs * v_r`, which preserves the kernel.
pub fn perpendicular_matrix(hex: &HexRealization, rhos: [f64; 3]) -> [LorentzVector; 3] {
    let mut rows = [LorentzVector::default(); 3];
    for side in 0..3 {
        let (v_r, v_s) = hex.side_poles(side);
        rows[side] = v_s - v_r.scale(rhos[side]);
    }
    rows
}

/// Determinant of the perpendicular matrix; vanishes iff the splits are
/// compatible. Algebraically `det M = (1 - rho_ij rho_jk rho_ki) det(v)`.
pub fn det_m(rows: [LorentzVector; 3]) -> f64 {
    det3(rows[0], rows[1], rows[2])
}

/// The compatibility residual `rho_ij rho_jk rho_ki - 1`.
pub fn compatibility_residual(rhos: [f64; 3]) -> f64 {
    rhos[0] * rhos[1] * rhos[2] - 1.0
}

/// The intersection point of the perpendiculars of sides 0 and 1, without
/// the compatibility gate. Used to probe incompatible configurations.
pub fn perpendicular_intersection(
    hex: &HexRealization,
    rhos: [f64; 3],
) -> Result<(LorentzVector, CausalClass), HexagonError> {
    let rows = perpendicular_matrix(hex, rhos);
    let raw = rows[0].cross(rows[1]);
    let scale = rows[0].euclid_norm() * rows[1].euclid_norm();
    if raw.euclid_norm() <= 1e-12 * scale {
        return Err(HexagonError::NumericallyParallelRows);
    }
    let q = raw.inner(raw);
    let class = classify(q / raw.euclid_norm_sq());
    // Interior-side sign against the pole sum.
    let orient = |v: LorentzVector| -> LorentzVector {
        let marker = hex.pole_sum();
        let primary = v.inner(marker);
        let pick = if primary.abs() > 1e-12 * v.euclid_norm() * marker.euclid_norm() {
            primary
        } else {
            v.inner(hex.poles[0])
        };
        if pick > 0.0 {
            -v
        } else {
            v
        }
    };
    let point = match class {
        CausalClass::TimeLike { .. } => orient(raw.scale(1.0 / (-q).sqrt())),
        CausalClass::SpaceLike => orient(raw.scale(1.0 / q.sqrt())),
        CausalClass::LightLike => orient(raw.scale(1.0 / raw.euclid_norm())),
    };
    let class = match class {
        CausalClass::TimeLike { .. } => CausalClass::TimeLike {
            upper: point.x3 > 0.0,
        },
        other => other,
    };
    Ok((point, class))
}

/// Compute the face center and the full dual report, gated on the
/// compatibility residual.
pub fn face_center(
    hex: &HexRealization,
    rhos: [f64; 3],
    tol_compat: f64,
) -> Result<CenterReport, HexagonError> {
    let residual = compatibility_residual(rhos);
    if residual.abs() > tol_compat {
        return Err(HexagonError::IncompatibleSplits { residual });
    }
    let rows = perpendicular_matrix(hex, rhos);
    let (point, class) = perpendicular_intersection(hex, rhos)?;

    let mut row_residuals = [0.0; 3];
    for side in 0..3 {
        row_residuals[side] =
            rows[side].inner(point) / (rows[side].euclid_norm() * point.euclid_norm());
    }

    let mut edge_centers = [Center {
        point: LorentzVector::default(),
        class: CausalClass::LightLike,
    }; 3];
    let mut perp_residuals = [0.0; 3];
    for side in 0..3 {
        let ec = edge_center(hex, side, rhos[side])?;
        let (v_r, v_s) = hex.side_poles(side);
        let lhs = point.cross(ec.point);
        let rhs = v_r.cross(v_s);
        perp_residuals[side] = lhs.inner(rhs) / (lhs.euclid_norm() * rhs.euclid_norm());
        edge_centers[side] = ec;
    }

    Ok(CenterReport {
        edge_centers,
        face_center: Center { point, class },
        det_m: det_m(rows),
        compat_residual: residual,
        row_residuals,
        perp_residuals,
    })
}

/// Boundary arcs `theta_i, theta_j, theta_k`: for each corner, the distance
/// between the perpendicular feet of its two adjacent edge lines on the
/// corner's boundary geodesic, computed by direct Lorentz projection.
pub fn boundary_arcs(hex: &HexRealization) -> [f64; 3] {
    // Foot of side (r, s) on boundary r: the unit time-like combination of
    // v_r, v_s orthogonal to v_r, taken on the upper sheet.
    let foot = |r: usize, s: usize| -> LorentzVector {
        let (vr, vs) = (hex.poles[r], hex.poles[s]);
        let c = -vr.inner(vs);
        let raw = vs + vr.scale(c);
        let n = (c * c - 1.0).sqrt();
        let p = raw.scale(1.0 / n);
        if p.x3 < 0.0 {
            -p
        } else {
            p
        }
    };
    let mut arcs = [0.0; 3];
    for r in 0..3 {
        let s = (r + 1) % 3;
        let t = (r + 2) % 3;
        let p1 = foot(r, s);
        let p2 = foot(r, t);
        arcs[r] = (-p1.inner(p2)).max(1.0).acosh();
    }
    arcs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trig;
    use ddfloat::Dd;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn symmetric_hex() -> HexRealization {
        let l = 3.0f64.acosh();
        realize(l, l, l).unwrap()
    }

    #[test]
    fn realize_symmetric() {
        let hex = symmetric_hex();
        // Gram reproduces [-3] off-diagonal and the eigenvalues of the
        // symmetric Gram matrix are {4, 4, -5}: check by the characteristic
        // polynomial at 4 and -5 in exact arithmetic.
        for r in 0..3 {
            for s in 0..3 {
                let want = if r == s { 1.0 } else { -3.0 };
                // rounding in the inner product scales with the pole magnitude
                assert!((hex.gram[r][s] - want).abs() < 1e-14, "gram[{r}][{s}]");
            }
        }
        // det(G - 4 I) = 0 and det(G + 5 I) = 0 for G = I - 3(J - I)
        let charpoly = |lam: f64| {
            let d = 1.0 - lam;
            d * (d * d - 9.0) + 3.0 * (-3.0 * d - 9.0) - 3.0 * (9.0 + 3.0 * d)
        };
        assert_eq!(charpoly(4.0), 0.0);
        assert_eq!(charpoly(-5.0), 0.0);

        // gauge pins v_i and v_j exactly
        assert_eq!(hex.poles[0], LorentzVector::new(1.0, 0.0, 0.0));
        assert_eq!(hex.poles[1].x2, 0.0);
        assert!(hex.poles[1].x3 < 0.0);
        assert!(det3(hex.poles[0], hex.poles[1], hex.poles[2]) > 0.0);

        // interior convention: the pole-sum centroid candidate pairs
        // negatively with each pole
        let m = hex.pole_sum();
        for p in hex.poles {
            assert!(m.inner(p) < 0.0);
        }
    }

    #[test]
    fn realize_arbitrary_lengths_and_gram_reproduction() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let l = [
                rng.random_range(0.1..5.0),
                rng.random_range(0.1..5.0),
                rng.random_range(0.1..5.0),
            ];
            let hex = realize(l[0], l[1], l[2]).unwrap();
            for side in 0..3 {
                let (vr, vs) = hex.side_poles(side);
                let want = -l[side].cosh();
                assert!(
                    (vr.inner(vs) - want).abs() <= 1e-12 * want.abs(),
                    "side {side}: {} vs {want}",
                    vr.inner(vs)
                );
                // unit norm up to rounding at the pole's own scale
                assert!((vr.inner(vr) - 1.0).abs() <= 1e-12 * vr.euclid_norm_sq().max(1.0));
            }
            assert!(det3(hex.poles[0], hex.poles[1], hex.poles[2]) > 0.0);
        }
    }

    #[test]
    fn realize_rejects_degenerate() {
        assert!(matches!(
            realize(0.0, 1.0, 1.0),
            Err(HexagonError::NonRealizable(_))
        ));
        assert!(matches!(
            realize(-1.0, 1.0, 1.0),
            Err(HexagonError::NonRealizable(_))
        ));
    }

    #[test]
    fn deterministic_gauge_bytes() {
        let a = realize(0.7, 1.3, 2.1).unwrap();
        let b = realize(0.7, 1.3, 2.1).unwrap();
        for r in 0..3 {
            assert!(a.poles[r].x1.to_bits() == b.poles[r].x1.to_bits());
            assert!(a.poles[r].x2.to_bits() == b.poles[r].x2.to_bits());
            assert!(a.poles[r].x3.to_bits() == b.poles[r].x3.to_bits());
        }
    }

    #[test]
    fn edge_center_symmetric_midpoint() {
        let hex = symmetric_hex();
        let ec = edge_center(&hex, 0, 1.0).unwrap();
        assert!(ec.class.is_time_like());
        // -c*v_i = -c*v_j = sinh(l/2) = 1 for cosh l = 3
        let (vi, vj) = hex.side_poles(0);
        let oracle = (Dd::from_f64(3.0).acosh().ldexp(-1)).sinh().to_f64();
        assert!((oracle - 1.0).abs() < 1e-15);
        assert!(
            (-ec.point.inner(vi) - 1.0).abs() < 1e-13,
            "{}",
            ec.point.inner(vi)
        );
        assert!((-ec.point.inner(vj) - 1.0).abs() < 1e-13);
        // unit time-like
        assert!((ec.point.inner(ec.point) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn edge_center_virtual_is_space_like() {
        let hex = symmetric_hex();
        let ec = edge_center(&hex, 0, -1.0).unwrap();
        assert!(ec.class.is_space_like());
        assert!((ec.point.inner(ec.point) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn edge_center_reproduces_real_splits() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let hex = symmetric_hex();
        for _ in 0..50 {
            // real-split ratios on side 0: rho > -e^{-l}
            let rho = rng.random_range(0.05..3.0);
            let split = crate::dcs::split_edge(3.0, rho).unwrap();
            assert!(split.real_split);
            let ec = edge_center(&hex, 0, rho).unwrap();
            let (vi, vj) = hex.side_poles(0);
            let (d_ij, d_ji) = (split.d_ij.unwrap(), split.d_ji.unwrap());
            assert!(
                (-ec.point.inner(vi) - d_ij.sinh()).abs() <= 1e-10,
                "rho = {rho}"
            );
            assert!(
                (-ec.point.inner(vj) - d_ji.sinh()).abs() <= 1e-10,
                "rho = {rho}"
            );
        }
        // orientation-flipped real split: rho < -e^{l}
        let rho = -8.0;
        let split = crate::dcs::split_edge(3.0, rho).unwrap();
        assert!(split.real_split);
        let ec = edge_center(&hex, 0, rho).unwrap();
        let (vi, vj) = hex.side_poles(0);
        assert!((-ec.point.inner(vi) - split.d_ij.unwrap().sinh()).abs() <= 1e-10);
        assert!((-ec.point.inner(vj) - split.d_ji.unwrap().sinh()).abs() <= 1e-10);
    }

    #[test]
    fn perpendicular_matrix_and_det() {
        let hex = symmetric_hex();
        // all ratios 1: rows sum to zero, det vanishes
        let rows = perpendicular_matrix(&hex, [1.0; 3]);
        let sum = rows[0] + rows[1] + rows[2];
        assert!(sum.euclid_norm() < 1e-14);
        assert!(det_m(rows).abs() < 1e-13);

        // perturbing one ratio breaks the kernel: det M = (1 - product) det(v)
        let rows = perpendicular_matrix(&hex, [1.1, 1.0, 1.0]);
        let det_v = det3(hex.poles[0], hex.poles[1], hex.poles[2]);
        let want = (1.0 - 1.1) * det_v;
        assert!((det_m(rows) - want).abs() <= 1e-12 * want.abs());

        // compatible non-symmetric ratios keep det at zero
        let rhos = [std::f64::consts::E, 2.0 / std::f64::consts::E, 0.5];
        assert!(compatibility_residual(rhos).abs() < 1e-15);
        let rows = perpendicular_matrix(&hex, rhos);
        let scale: f64 = rows.iter().map(|r| r.euclid_norm()).product();
        assert!(det_m(rows).abs() <= 1e-10 * scale);
    }

    #[test]
    fn compatibility_residual_examples() {
        assert_eq!(compatibility_residual([1.0, 1.0, 1.0]), 0.0);
        let e = std::f64::consts::E;
        assert!(compatibility_residual([e, 2.0 / e, 0.5]).abs() < 1e-15);
        assert_eq!(compatibility_residual([-1.0, -1.0, -1.0]), -2.0);
    }

    #[test]
    fn face_center_symmetric() {
        let hex = symmetric_hex();
        let report = face_center(&hex, [1.0; 3], TOL_COMPAT).unwrap();
        assert!(report.face_center.class.is_time_like());
        // equidistant from the three boundary lines by symmetry
        let c = report.face_center.point;
        let d: Vec<f64> = hex.poles.iter().map(|v| c.inner(*v)).collect();
        assert!((d[0] - d[1]).abs() < 1e-12 && (d[1] - d[2]).abs() < 1e-12);
        // interior-side sign convention
        assert!(d[0] < 0.0);
        for side in 0..3 {
            assert!(report.row_residuals[side].abs() < 1e-12);
            assert!(report.perp_residuals[side].abs() < 1e-9);
        }
        // Klein projection of the symmetric center: distance from origin is
        // sqrt(0.7) in this gauge (center at (sqrt5, -sqrt2, sqrt10)/sqrt3
        // up to overall sign).
        let (u, v) = c.klein().unwrap();
        assert!((u * u + v * v - 0.7).abs() < 1e-12);
    }

    #[test]
    fn face_center_rejects_incompatible() {
        let hex = symmetric_hex();
        let err = face_center(&hex, [1.1, 1.0, 1.0], TOL_COMPAT).unwrap_err();
        assert!(matches!(err, HexagonError::IncompatibleSplits { .. }));
    }

    #[test]
    fn right_angle_relation_at_real_centers() {
        // -(v_r * c_face) = (v_r * c_rs)(c_rs * c_face) for time-like unit
        // centers: the right-angle relation applied at the foot of the
        // perpendicular.
        let hex = symmetric_hex();
        let rhos = [1.25, 1.0, 1.0 / 1.25];
        assert!(compatibility_residual(rhos).abs() < 1e-15);
        let report = face_center(&hex, rhos, TOL_COMPAT).unwrap();
        let c = report.face_center.point;
        assert!(report.face_center.class.is_time_like());
        for side in 0..3 {
            let ec = report.edge_centers[side];
            if !ec.class.is_time_like() {
                continue;
            }
            let v_r = hex.side_poles(side).0;
            let lhs = -v_r.inner(c);
            let rhs = v_r.inner(ec.point) * ec.point.inner(c);
            assert!(
                (lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1.0),
                "side {side}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn boundary_arcs_match_hexagon_relation() {
        let hex = symmetric_hex();
        let arcs = boundary_arcs(&hex);
        let oracle = Dd::from_f64(1.5).acosh().to_f64();
        for a in arcs {
            assert!((a - oracle).abs() < 1e-13, "{a}");
        }

        // isosceles case l_ij = l_ki: corner j sits between sides (1.0, 1.4)
        // and corner k between (1.4, 1.0), so theta_j = theta_k
        let hex = realize(1.0, 1.4, 1.0).unwrap();
        let arcs = boundary_arcs(&hex);
        assert!((arcs[1] - arcs[2]).abs() < 1e-13);

        // agreement with the closed-form relation on random draws
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let l = [
                rng.random_range(0.2..4.0),
                rng.random_range(0.2..4.0),
                rng.random_range(0.2..4.0),
            ];
            let hex = realize(l[0], l[1], l[2]).unwrap();
            let arcs = boundary_arcs(&hex);
            // corner i: adjacent ij, ki; opposite jk
            let want_i = trig::hexagon_side_arc(l[0].cosh(), l[2].cosh(), l[1].cosh()).unwrap();
            let want_j = trig::hexagon_side_arc(l[0].cosh(), l[1].cosh(), l[2].cosh()).unwrap();
            let want_k = trig::hexagon_side_arc(l[1].cosh(), l[2].cosh(), l[0].cosh()).unwrap();
            assert!((arcs[0].cosh() - want_i).abs() <= 1e-10 * want_i.max(1.0));
            assert!((arcs[1].cosh() - want_j).abs() <= 1e-10 * want_j.max(1.0));
            assert!((arcs[2].cosh() - want_k).abs() <= 1e-10 * want_k.max(1.0));
        }
    }

    #[test]
    fn growing_opposite_side_grows_arc() {
        let base = boundary_arcs(&realize(1.0, 1.0, 1.0).unwrap())[0];
        let grown = boundary_arcs(&realize(1.0, 2.5, 1.0).unwrap())[0];
        assert!(grown > base);
    }
}
