//! Primitives of the Lorentzian 3-space `(R^3, *)` with inner product of
//! signature `(+,+,-)`, the hyperboloid model of the hyperbolic plane, and
//! the central (Klein) projection onto the plane `x3 = 1`.
//!
//! The inner product is `x*y = x1 y1 + x2 y2 - x3 y3` and the Lorentzian
//! cross product is `x (x) y = J (x × y)` with `J = diag(1,1,-1)`, so that
//! `(x (x) y) * z = det(x,y,z)`. Points of the hyperbolic plane are unit
//! time-like vectors on the upper sheet (`x*x = -1`, `x3 > 0`); geodesics are
//! polar lines `w^perp ∩ H^2` of unit space-like vectors `w`.

use serde::Serialize;
use thiserror::Error;

/// Relative tolerance separating the causal classes.
///
/// Measured against the squared Euclidean norm, which bounds the rounding
/// accumulated by the three-term inner product.
pub const EPS_LIGHT: f64 = 1e-10;

/// Absolute Euclidean-norm threshold below which a vector counts as zero.
pub const EPS_ZERO: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum LorentzError {
    #[error("zero vector")]
    ZeroVector,
    #[error("light-like input")]
    LightLikeInput,
    #[error("degenerate pair: vectors are parallel or span a null plane")]
    DegeneratePair,
    #[error("projection at infinity: |x3| is below tolerance")]
    ProjectionAtInfinity,
}

/// A vector of the Lorentzian 3-space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct LorentzVector {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

/// Causal class of a vector; time-like vectors record the sheet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CausalClass {
    SpaceLike,
    LightLike,
    /// `upper` is true when `x3 > 0`.
    TimeLike {
        upper: bool,
    },
}

impl CausalClass {
    pub fn is_time_like(self) -> bool {
        matches!(self, CausalClass::TimeLike { .. })
    }
    pub fn is_space_like(self) -> bool {
        self == CausalClass::SpaceLike
    }
    pub fn label(self) -> &'static str {
        match self {
            CausalClass::SpaceLike => "space-like",
            CausalClass::LightLike => "light-like",
            CausalClass::TimeLike { upper: true } => "time-like-upper",
            CausalClass::TimeLike { upper: false } => "time-like-lower",
        }
    }
}

/// Geometric meaning of a pairing of two non-light-like vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairingKind {
    PointPointDistance,
    PointLineDistance,
    LineLineDistance,
    LineLineAngle,
}

/// A classified pairing: a hyperbolic distance or an angle, plus the
/// side/orientation bit of the corresponding case of the distance
/// proposition (for a point/line pairing, `sign_flag` means the point and
/// the pole sit on opposite sides of the line; for a line/line distance it
/// means the poles are oppositely oriented along the common perpendicular).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PairingInterpretation {
    pub kind: PairingKind,
    pub value: f64,
    pub sign_flag: bool,
}

impl LorentzVector {
    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        LorentzVector { x1, x2, x3 }
    }

    /// Minkowski inner product `x*y = x1 y1 + x2 y2 - x3 y3`.
    #[inline]
    pub fn inner(self, other: LorentzVector) -> f64 {
        self.x1 * other.x1 + self.x2 * other.x2 - self.x3 * other.x3
    }

    /// Lorentzian cross product `x (x) y = J (x × y)`.
    #[inline]
    pub fn cross(self, other: LorentzVector) -> LorentzVector {
        let e1 = self.x2 * other.x3 - self.x3 * other.x2;
        let e2 = self.x3 * other.x1 - self.x1 * other.x3;
        let e3 = self.x1 * other.x2 - self.x2 * other.x1;
        LorentzVector::new(e1, e2, -e3)
    }

    #[inline]
    pub fn euclid_norm_sq(self) -> f64 {
        self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    #[inline]
    pub fn euclid_norm(self) -> f64 {
        self.euclid_norm_sq().sqrt()
    }

    #[inline]
    pub fn scale(self, s: f64) -> LorentzVector {
        LorentzVector::new(self.x1 * s, self.x2 * s, self.x3 * s)
    }

    pub fn is_finite(self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    /// Causal class relative to `eps_light * ||x||_E^2`.
    pub fn causal_class(self, eps_light: f64) -> Result<CausalClass, LorentzError> {
        let n2 = self.euclid_norm_sq();
        if n2 <= EPS_ZERO * EPS_ZERO {
            return Err(LorentzError::ZeroVector);
        }
        let q = self.inner(self);
        if q < -eps_light * n2 {
            Ok(CausalClass::TimeLike {
                upper: self.x3 > 0.0,
            })
        } else if q > eps_light * n2 {
            Ok(CausalClass::SpaceLike)
        } else {
            Ok(CausalClass::LightLike)
        }
    }

    /// Scale to self inner product exactly +1 (space-like) or -1 (time-like,
    /// upper sheet `x3 > 0`).
    pub fn normalize(self) -> Result<LorentzVector, LorentzError> {
        match self.causal_class(EPS_LIGHT)? {
            CausalClass::SpaceLike => Ok(self.scale(1.0 / self.inner(self).sqrt())),
            CausalClass::TimeLike { .. } => {
                let v = self.scale(1.0 / (-self.inner(self)).sqrt());
                Ok(if v.x3 < 0.0 { -v } else { v })
            }
            CausalClass::LightLike => Err(LorentzError::LightLikeInput),
        }
    }

    /// Central projection to the plane `x3 = 1` (Klein model coordinates).
    pub fn klein(self) -> Result<(f64, f64), LorentzError> {
        if self.x3.abs() <= 1e-14 * self.euclid_norm().max(f64::MIN_POSITIVE) {
            return Err(LorentzError::ProjectionAtInfinity);
        }
        Ok((self.x1 / self.x3, self.x2 / self.x3))
    }
}

impl std::ops::Add for LorentzVector {
    type Output = LorentzVector;
    #[inline]
    fn add(self, other: LorentzVector) -> LorentzVector {
        LorentzVector::new(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)
    }
}

impl std::ops::Sub for LorentzVector {
    type Output = LorentzVector;
    #[inline]
    fn sub(self, other: LorentzVector) -> LorentzVector {
        LorentzVector::new(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)
    }
}

impl std::ops::Neg for LorentzVector {
    type Output = LorentzVector;
    #[inline]
    fn neg(self) -> LorentzVector {
        self.scale(-1.0)
    }
}

/// Determinant of the matrix with rows `x`, `y`, `z`.
///
/// Coincides with `(x (x) y) * z`.
pub fn det3(x: LorentzVector, y: LorentzVector, z: LorentzVector) -> f64 {
    x.x1 * (y.x2 * z.x3 - y.x3 * z.x2) - x.x2 * (y.x1 * z.x3 - y.x3 * z.x1)
        + x.x3 * (y.x1 * z.x2 - y.x2 * z.x1)
}

/// Classify the pairing of two non-light-like vectors as a distance or angle.
///
/// Inputs are normalized internally. Two time-like vectors give the distance
/// between points (`cosh d = -x*y` after moving both to the upper sheet); a
/// time-like/space-like pair gives a point-to-line distance
/// (`sinh d = |x*y|`); two space-like vectors give a line-to-line distance
/// (`cosh d = |x*y|`) when their span meets the hyperbolic plane, detected by
/// a negative Gram determinant, and an angle (`cos θ = x*y`) otherwise.
pub fn pairing_interpret(
    x: LorentzVector,
    y: LorentzVector,
) -> Result<PairingInterpretation, LorentzError> {
    let cx = x.causal_class(EPS_LIGHT)?;
    let cy = y.causal_class(EPS_LIGHT)?;
    if cx == CausalClass::LightLike || cy == CausalClass::LightLike {
        return Err(LorentzError::LightLikeInput);
    }
    // Parallel inputs span no plane at all.
    let cr = x.cross(y);
    if cr.euclid_norm_sq() <= (EPS_LIGHT * x.euclid_norm() * y.euclid_norm()).powi(2) {
        return Err(LorentzError::DegeneratePair);
    }
    let xn = x.normalize()?;
    let yn = y.normalize()?;
    let p = xn.inner(yn);
    match (cx.is_time_like(), cy.is_time_like()) {
        (true, true) => Ok(PairingInterpretation {
            kind: PairingKind::PointPointDistance,
            value: (-p).max(1.0).acosh(),
            sign_flag: false,
        }),
        (true, false) | (false, true) => Ok(PairingInterpretation {
            kind: PairingKind::PointLineDistance,
            value: p.abs().asinh(),
            sign_flag: p < 0.0,
        }),
        (false, false) => {
            // Gram determinant of the restricted form: 1 - (x*y)^2.
            let gram = 1.0 - p * p;
            if gram.abs() <= EPS_LIGHT {
                return Err(LorentzError::DegeneratePair);
            }
            if gram < 0.0 {
                Ok(PairingInterpretation {
                    kind: PairingKind::LineLineDistance,
                    value: p.abs().acosh(),
                    sign_flag: p < 0.0,
                })
            } else {
                Ok(PairingInterpretation {
                    kind: PairingKind::LineLineAngle,
                    value: p.clamp(-1.0, 1.0).acos(),
                    sign_flag: false,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rv(rng: &mut ChaCha8Rng) -> LorentzVector {
        LorentzVector::new(
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        )
    }

    #[test]
    fn inner_product_examples() {
        let e1 = LorentzVector::new(1.0, 0.0, 0.0);
        let e3 = LorentzVector::new(0.0, 0.0, 1.0);
        assert_eq!(e1.inner(e1), 1.0);
        assert_eq!(e3.inner(e3), -1.0);
        let a = LorentzVector::new(1.0, 2.0, 2.0);
        let b = LorentzVector::new(3.0, 0.0, 1.0);
        assert_eq!(a.inner(b), 1.0);
    }

    #[test]
    fn cross_product_examples() {
        let e1 = LorentzVector::new(1.0, 0.0, 0.0);
        let e2 = LorentzVector::new(0.0, 1.0, 0.0);
        let e3 = LorentzVector::new(0.0, 0.0, 1.0);
        assert_eq!(e1.cross(e2), LorentzVector::new(0.0, 0.0, -1.0));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = rv(&mut rng);
        assert_eq!(x.cross(x), LorentzVector::new(0.0, 0.0, 0.0));
        // det of the standard basis
        assert_eq!(e1.cross(e2).inner(e3), 1.0);
        assert_eq!(det3(e1, e2, e3), 1.0);
    }

    #[test]
    fn causal_classification() {
        let eps = EPS_LIGHT;
        assert_eq!(
            LorentzVector::new(0.0, 0.0, 1.0).causal_class(eps).unwrap(),
            CausalClass::TimeLike { upper: true }
        );
        assert_eq!(
            LorentzVector::new(1.0, 0.0, 0.0).causal_class(eps).unwrap(),
            CausalClass::SpaceLike
        );
        assert_eq!(
            LorentzVector::new(1.0, 0.0, 1.0).causal_class(eps).unwrap(),
            CausalClass::LightLike
        );
        assert_eq!(
            LorentzVector::new(0.0, 0.0, 0.0).causal_class(eps),
            Err(LorentzError::ZeroVector)
        );
    }

    #[test]
    fn normalization() {
        let v = LorentzVector::new(2.0, 0.0, 0.0).normalize().unwrap();
        assert_eq!(v, LorentzVector::new(1.0, 0.0, 0.0));
        // lower-sheet input lands on the upper sheet
        let w = LorentzVector::new(0.0, 0.0, -2.0).normalize().unwrap();
        assert_eq!(w, LorentzVector::new(0.0, 0.0, 1.0));
        let u = LorentzVector::new(3.0, 0.0, 1.0).normalize().unwrap();
        let s = 8.0f64.sqrt();
        assert!((u.x1 - 3.0 / s).abs() < 1e-15 && (u.x3 - 1.0 / s).abs() < 1e-15);
        assert!(LorentzVector::new(1.0, 0.0, 1.0).normalize().is_err());
    }

    #[test]
    fn pairing_cases() {
        // two points at distance 1
        let x = LorentzVector::new(0.0, 0.0, 1.0);
        let y = LorentzVector::new(1.0f64.sinh(), 0.0, 1.0f64.cosh());
        let p = pairing_interpret(x, y).unwrap();
        assert_eq!(p.kind, PairingKind::PointPointDistance);
        assert!((p.value - 1.0).abs() < 1e-14);

        // point on a line
        let z = LorentzVector::new(1.0, 0.0, 0.0);
        let p = pairing_interpret(x, z).unwrap();
        assert_eq!(p.kind, PairingKind::PointLineDistance);
        assert!(p.value.abs() < 1e-15);
        assert!(!p.sign_flag);

        // two disjoint lines at distance arccosh 3, computed against the
        // 30-digit oracle
        let w = LorentzVector::new(-3.0, 0.0, 8.0f64.sqrt());
        let p = pairing_interpret(z, w).unwrap();
        assert_eq!(p.kind, PairingKind::LineLineDistance);
        let oracle = ddfloat::Dd::from_f64(3.0).acosh().to_f64();
        assert!((p.value - oracle).abs() < 1e-14, "value {}", p.value);
        assert!((oracle - 1.762_747_174_039_086).abs() < 1e-14);
        assert!(p.sign_flag);

        // two crossing lines meet in an angle
        let a = LorentzVector::new(1.0, 0.0, 0.0);
        let b = LorentzVector::new(0.5, 0.8, 0.0).normalize().unwrap();
        let p = pairing_interpret(a, b).unwrap();
        assert_eq!(p.kind, PairingKind::LineLineAngle);
        assert!(p.value > 0.0 && p.value < std::f64::consts::PI);

        assert_eq!(pairing_interpret(a, a), Err(LorentzError::DegeneratePair));
    }

    #[test]
    fn klein_projection() {
        assert_eq!(
            LorentzVector::new(0.0, 0.0, 1.0).klein().unwrap(),
            (0.0, 0.0)
        );
        assert_eq!(
            LorentzVector::new(1.0, 0.0, 1.0).klein().unwrap(),
            (1.0, 0.0)
        );
        assert_eq!(
            LorentzVector::new(3.0, 0.0, 1.0).klein().unwrap(),
            (3.0, 0.0)
        );
        assert_eq!(
            LorentzVector::new(1.0, 0.0, 0.0).klein(),
            Err(LorentzError::ProjectionAtInfinity)
        );
        // projective invariance under positive scaling
        let v = LorentzVector::new(0.3, -0.4, 1.1);
        let (u0, w0) = v.klein().unwrap();
        let (u1, w1) = v.scale(17.25).klein().unwrap();
        assert!((u0 - u1).abs() < 1e-15 && (w0 - w1).abs() < 1e-15);
    }

    #[test]
    fn cross_product_identities_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let (x, y, z, w) = (rv(&mut rng), rv(&mut rng), rv(&mut rng), rv(&mut rng));
            let scale = x.euclid_norm() * y.euclid_norm() * z.euclid_norm();

            // antisymmetry
            let d = x.cross(y) + y.cross(x);
            assert!(d.euclid_norm() <= 1e-15 * scale.max(1.0));

            // determinant identity
            let lhs = x.cross(y).inner(z);
            assert!((lhs - det3(x, y, z)).abs() <= 1e-12 * scale.max(1.0));

            // triple product
            let t = x.cross(y.cross(z));
            let e = z.scale(x.inner(y)) - y.scale(z.inner(x));
            assert!((t - e).euclid_norm() <= 1e-12 * scale.max(1.0));

            // Gram identity
            let g = x.cross(y).inner(z.cross(w));
            let ge = x.inner(w) * y.inner(z) - x.inner(z) * y.inner(w);
            let scale4 = scale * w.euclid_norm();
            assert!((g - ge).abs() <= 1e-12 * scale4.max(1.0));
        }
    }
}
