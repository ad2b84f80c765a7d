//! The ten generalized hyperbolic cosine laws and their substitution maps
//! into the classified conformal-structure families.
//!
//! Kinds I-V are generalized triangles with one perturbed apex (hyperbolic,
//! ideal, hyper-ideal, horocyclic tangent, or polar-crossing); kinds VI-X are
//! their twisted counterparts, in which a segment crosses the apex polar line
//! the wrong way and the non-eta term of the law flips sign. Each kind maps
//! onto one family by a closed-form substitution of its side data
//! `(omega_i, omega_j, tau)` into `(alpha, f, eta)` or `(f, eta, C)`.

use crate::dcs::{EdgeConformal, Family};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum TrigError {
    #[error("parameter outside the kind's domain: {0}")]
    DomainViolation(&'static str),
    #[error("degenerate side: cosh value not above 1")]
    DegenerateSide,
}

/// The ten constructions, in the order of their cosine laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
}

impl TriangleKind {
    pub const ALL: [TriangleKind; 10] = [
        TriangleKind::I,
        TriangleKind::II,
        TriangleKind::III,
        TriangleKind::IV,
        TriangleKind::V,
        TriangleKind::VI,
        TriangleKind::VII,
        TriangleKind::VIII,
        TriangleKind::IX,
        TriangleKind::X,
    ];

    /// The untwisted/twisted partner of this kind.
    pub fn twisted_partner(self) -> TriangleKind {
        match self {
            TriangleKind::I => TriangleKind::VI,
            TriangleKind::II => TriangleKind::VII,
            TriangleKind::III => TriangleKind::VIII,
            TriangleKind::IV => TriangleKind::IX,
            TriangleKind::V => TriangleKind::X,
            TriangleKind::VI => TriangleKind::I,
            TriangleKind::VII => TriangleKind::II,
            TriangleKind::VIII => TriangleKind::III,
            TriangleKind::IX => TriangleKind::IV,
            TriangleKind::X => TriangleKind::V,
        }
    }

    pub fn is_twisted(self) -> bool {
        matches!(
            self,
            TriangleKind::VI
                | TriangleKind::VII
                | TriangleKind::VIII
                | TriangleKind::IX
                | TriangleKind::X
        )
    }
}

/// Side data of a generalized triangle: the two apex-adjacent quantities
/// `omega_i`, `omega_j` (distances, horocyclic arcs or angles depending on
/// the kind) and the quantity `tau` between them (angle, horocyclic arc or
/// distance).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeometryParams {
    pub omega_i: f64,
    pub omega_j: f64,
    pub tau: f64,
}

impl GeometryParams {
    pub fn new(omega_i: f64, omega_j: f64, tau: f64) -> Self {
        GeometryParams {
            omega_i,
            omega_j,
            tau,
        }
    }
}

/// Result of a cosine law: the raw cosh of the opposite side. Values `<= 1`
/// are reported with the `degenerate` flag instead of an error, since
/// admissibility is the caller's call.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LawValue {
    pub cosh_l: f64,
    pub degenerate: bool,
}

fn check_domain(kind: TriangleKind, p: &GeometryParams) -> Result<(), TrigError> {
    use TriangleKind::*;
    let (wi, wj, tau) = (p.omega_i, p.omega_j, p.tau);
    if !(wi.is_finite() && wj.is_finite() && tau.is_finite()) {
        return Err(TrigError::DomainViolation("non-finite parameter"));
    }
    match kind {
        I | VI => {
            if wi <= 0.0 || wj <= 0.0 {
                return Err(TrigError::DomainViolation(
                    "omega must be a positive distance",
                ));
            }
            if tau <= 0.0 || tau >= std::f64::consts::PI {
                return Err(TrigError::DomainViolation(
                    "tau must be an angle in (0, pi)",
                ));
            }
        }
        II | VII => {
            // omega is a signed distance from the horocycle; any real value.
            if tau <= 0.0 {
                return Err(TrigError::DomainViolation(
                    "tau must be a positive horocyclic arc",
                ));
            }
        }
        III | VIII => {
            if wi <= 0.0 || wj <= 0.0 {
                return Err(TrigError::DomainViolation(
                    "omega must be a positive length",
                ));
            }
            if tau <= 0.0 {
                return Err(TrigError::DomainViolation("tau must be a positive length"));
            }
        }
        IV | IX => {
            // tau is a signed distance between horocycles; any real value.
            if wi <= 0.0 || wj <= 0.0 {
                return Err(TrigError::DomainViolation(
                    "omega must be a positive horocyclic arc",
                ));
            }
        }
        V | X => {
            // omega = pi/2 is admitted: it is the closure point 1 + alpha e^{2f} = 0.
            if wi <= 0.0
                || wi > std::f64::consts::FRAC_PI_2
                || wj <= 0.0
                || wj > std::f64::consts::FRAC_PI_2
            {
                return Err(TrigError::DomainViolation(
                    "omega must be an angle in (0, pi/2]",
                ));
            }
            if tau <= 0.0 {
                return Err(TrigError::DomainViolation("tau must be a positive length"));
            }
        }
    }
    Ok(())
}

/// Evaluate the kind's generalized cosine law, returning cosh of the side
/// opposite the apex.
pub fn cosine_law(kind: TriangleKind, p: GeometryParams) -> Result<LawValue, TrigError> {
    check_domain(kind, &p)?;
    let (wi, wj, tau) = (p.omega_i, p.omega_j, p.tau);
    use TriangleKind::*;
    let cosh_l = match kind {
        I => wi.sinh() * wj.sinh() - tau.cos() * wi.cosh() * wj.cosh(),
        II => -(wi - wj).cosh() + 0.5 * tau * tau * (wi + wj).exp(),
        III => -wi.cosh() * wj.cosh() + tau.cosh() * wi.sinh() * wj.sinh(),
        IV => -1.0 + 2.0 * tau.exp() * wi * wj,
        V => -wi.cos() * wj.cos() + tau.cosh() * wi.sin() * wj.sin(),
        VI => -wi.sinh() * wj.sinh() + tau.cos() * wi.cosh() * wj.cosh(),
        VII => (wi - wj).cosh() - 0.5 * tau * tau * (wi + wj).exp(),
        VIII => wi.cosh() * wj.cosh() + tau.cosh() * wi.sinh() * wj.sinh(),
        IX => 1.0 + 2.0 * tau.exp() * wi * wj,
        X => wi.cos() * wj.cos() + tau.cosh() * wi.sin() * wj.sin(),
    };
    Ok(LawValue {
        cosh_l,
        degenerate: cosh_l <= 1.0,
    })
}

/// The substitution table: map a kind's side data to the family parameters
/// that reproduce its cosine law as a conformal-structure length.
pub fn dcs_params_from_geometry(
    kind: TriangleKind,
    p: GeometryParams,
) -> Result<EdgeConformal, TrigError> {
    check_domain(kind, &p)?;
    let (wi, wj, tau) = (p.omega_i, p.omega_j, p.tau);
    use TriangleKind::*;
    let edge = match kind {
        // e^f = cosh omega, eta = -cos tau
        I => EdgeConformal::alpha_family(
            Family::A1n,
            -1,
            -1,
            wi.cosh().ln(),
            wj.cosh().ln(),
            -tau.cos(),
        ),
        // f = omega, eta = tau^2 / 2
        II => EdgeConformal::c_family(Family::A2, wi, wj, 0.5 * tau * tau, 0.0),
        // e^f = sinh omega, eta = cosh tau
        III => EdgeConformal::alpha_family(
            Family::A1p,
            1,
            1,
            wi.sinh().ln(),
            wj.sinh().ln(),
            tau.cosh(),
        ),
        // e^f = omega, eta = 2 e^tau
        IV => EdgeConformal::alpha_family(Family::A1p, 0, 0, wi.ln(), wj.ln(), 2.0 * tau.exp()),
        // e^f = sin omega, eta = cosh tau
        V => EdgeConformal::alpha_family(
            Family::A1p,
            -1,
            -1,
            wi.sin().ln(),
            wj.sin().ln(),
            tau.cosh(),
        ),
        // e^f = cosh omega, eta = cos tau
        VI => EdgeConformal::alpha_family(
            Family::B1n,
            -1,
            -1,
            wi.cosh().ln(),
            wj.cosh().ln(),
            tau.cos(),
        ),
        // f = omega, eta = -tau^2 / 2
        VII => EdgeConformal::c_family(Family::B2, wi, wj, -0.5 * tau * tau, 0.0),
        // e^f = sinh omega, eta = cosh tau
        VIII => EdgeConformal::alpha_family(
            Family::B1p,
            1,
            1,
            wi.sinh().ln(),
            wj.sinh().ln(),
            tau.cosh(),
        ),
        // e^f = omega, eta = 2 e^tau
        IX => EdgeConformal::alpha_family(Family::B1p, 0, 0, wi.ln(), wj.ln(), 2.0 * tau.exp()),
        // e^f = sin omega, eta = cosh tau
        X => EdgeConformal::alpha_family(
            Family::B1p,
            -1,
            -1,
            wi.sin().ln(),
            wj.sin().ln(),
            tau.cosh(),
        ),
    };
    Ok(edge)
}

/// Boundary arc of a right-angled hexagon at the corner between the edges
/// with `cosh l_ij` and `cosh l_ik`, opposite the edge with `cosh l_jk`:
///
/// `cosh theta_i = (cosh l_jk + cosh l_ij cosh l_ik) / (sinh l_ij sinh l_ik)`
pub fn hexagon_side_arc(cosh_l_ij: f64, cosh_l_ik: f64, cosh_l_jk: f64) -> Result<f64, TrigError> {
    let eps = 1e-12;
    if cosh_l_ij <= 1.0 + eps || cosh_l_ik <= 1.0 + eps || cosh_l_jk <= 1.0 + eps {
        return Err(TrigError::DegenerateSide);
    }
    let sinh_ij = (cosh_l_ij * cosh_l_ij - 1.0).sqrt();
    let sinh_ik = (cosh_l_ik * cosh_l_ik - 1.0).sqrt();
    Ok((cosh_l_jk + cosh_l_ij * cosh_l_ik) / (sinh_ij * sinh_ik))
}
