//! The six classified families of discrete conformal structures on edges of
//! an ideally triangulated surface with boundary, and the partial-edge-length
//! machinery built on them.
//!
//! Per oriented edge `(i,j)` each family produces `cosh l_ij` in closed form
//! from the boundary data `(alpha, f)` and edge data `(eta, C)`:
//!
//! - `A1p`: `cosh l = -sqrt(P_i P_j) + eta e^{f_i+f_j}`, `P_r = 1 + alpha_r e^{2 f_r} >= 0`
//! - `A1n`: `cosh l = +sqrt((e^{2f_i}-1)(e^{2f_j}-1)) + eta e^{f_i+f_j}`, `alpha = -1`, `f > 0`
//! - `A2` : `cosh l = -cosh(f_j - f_i - C_ij) + eta e^{f_i+f_j}`
//! - `B1p`: `cosh l = +sqrt(P_i P_j) + eta e^{f_i+f_j}`
//! - `B1n`: `cosh l = -sqrt((e^{2f_i}-1)(e^{2f_j}-1)) + eta e^{f_i+f_j}`
//! - `B2` : `cosh l = +cosh(f_j - f_i - C_ij) + eta e^{f_i+f_j}`
//!
//! The split ratio `rho_ij = sinh d_ji / sinh d_ij` is the primitive split
//! datum: it is positive for A-families, negative for B-families, and stays
//! meaningful even when no real signed distances exist (virtual splits). The
//! `coth d` values come out of `t_ij = (cosh l + rho) / sinh l`, which is the
//! derivative identity `d(cosh l)/df_i = cosh l + rho` in disguise.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DcsError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("degenerate edge: cosh l <= 1")]
    DegenerateEdge,
    #[error("pole at zero: 1 + alpha e^(2f) vanishes at boundary {0}, split ratio is infinite")]
    PoleAtZero(usize),
    #[error("zero or non-finite split ratio")]
    ZeroRatio,
    #[error("mixed-sign alpha pattern incompatible with family {0:?} on edge ({1}, {2})")]
    MixedSignAlpha(Family, usize, usize),
}

/// The six families. `A*` have positive split ratio, `B*` negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A1p,
    A1n,
    A2,
    B1p,
    B1n,
    B2,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::A1p,
        Family::A1n,
        Family::A2,
        Family::B1p,
        Family::B1n,
        Family::B2,
    ];

    pub fn is_a(self) -> bool {
        matches!(self, Family::A1p | Family::A1n | Family::A2)
    }

    pub fn is_b(self) -> bool {
        !self.is_a()
    }

    /// Uses the per-edge constant `C` (the `*2` families).
    pub fn uses_c(self) -> bool {
        matches!(self, Family::A2 | Family::B2)
    }

    /// Uses the per-boundary parameter `alpha` (the `*1*` families).
    pub fn uses_alpha(self) -> bool {
        !self.uses_c()
    }

    /// The B-family that may share a face with this A-family (and vice versa).
    pub fn mixed_partner(self) -> Family {
        match self {
            Family::A1p => Family::B1p,
            Family::A1n => Family::B1n,
            Family::A2 => Family::B2,
            Family::B1p => Family::A1p,
            Family::B1n => Family::A1n,
            Family::B2 => Family::A2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::A1p => "A1p",
            Family::A1n => "A1n",
            Family::A2 => "A2",
            Family::B1p => "B1p",
            Family::B1n => "B1n",
            Family::B2 => "B2",
        }
    }
}

/// Conformal data of one oriented edge `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EdgeConformal {
    pub family: Family,
    pub alpha_i: i8,
    pub alpha_j: i8,
    pub f_i: f64,
    pub f_j: f64,
    pub eta: f64,
    /// The oriented constant `C_ij`; only meaningful for A2/B2.
    pub c: f64,
}

/// Raw cosh of an edge length; `degenerate` flags values `<= 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoshLength {
    pub value: f64,
    pub degenerate: bool,
}

impl EdgeConformal {
    pub fn alpha_family(
        family: Family,
        alpha_i: i8,
        alpha_j: i8,
        f_i: f64,
        f_j: f64,
        eta: f64,
    ) -> Self {
        EdgeConformal {
            family,
            alpha_i,
            alpha_j,
            f_i,
            f_j,
            eta,
            c: 0.0,
        }
    }

    pub fn c_family(family: Family, f_i: f64, f_j: f64, eta: f64, c: f64) -> Self {
        EdgeConformal {
            family,
            alpha_i: 0,
            alpha_j: 0,
            f_i,
            f_j,
            eta,
            c,
        }
    }

    /// The same edge read in the opposite orientation `(j, i)`.
    pub fn reversed(self) -> Self {
        EdgeConformal {
            family: self.family,
            alpha_i: self.alpha_j,
            alpha_j: self.alpha_i,
            f_i: self.f_j,
            f_j: self.f_i,
            eta: self.eta,
            c: -self.c,
        }
    }

    fn p_i(&self) -> f64 {
        1.0 + f64::from(self.alpha_i) * (2.0 * self.f_i).exp()
    }

    fn p_j(&self) -> f64 {
        1.0 + f64::from(self.alpha_j) * (2.0 * self.f_j).exp()
    }

    /// Boundary-data invariants for the family.
    pub fn validate(&self) -> Result<(), DcsError> {
        if !(self.f_i.is_finite()
            && self.f_j.is_finite()
            && self.eta.is_finite()
            && self.c.is_finite())
        {
            return Err(DcsError::InvalidParameters("non-finite parameter".into()));
        }
        match self.family {
            Family::A1p | Family::B1p => {
                if ![-1, 0, 1].contains(&self.alpha_i) || ![-1, 0, 1].contains(&self.alpha_j) {
                    return Err(DcsError::InvalidParameters(format!(
                        "alpha must lie in {{-1,0,1}}, got ({}, {})",
                        self.alpha_i, self.alpha_j
                    )));
                }
                if self.p_i() < 0.0 || self.p_j() < 0.0 {
                    return Err(DcsError::InvalidParameters(format!(
                        "1 + alpha e^(2f) must be nonnegative, got ({:.6}, {:.6})",
                        self.p_i(),
                        self.p_j()
                    )));
                }
            }
            Family::A1n | Family::B1n => {
                if self.alpha_i != -1 || self.alpha_j != -1 {
                    return Err(DcsError::InvalidParameters(
                        "A1n/B1n require alpha = -1 at both ends".into(),
                    ));
                }
                if self.f_i <= 0.0 || self.f_j <= 0.0 {
                    return Err(DcsError::InvalidParameters(
                        "A1n/B1n require f > 0 (so that e^(2f) > 1)".into(),
                    ));
                }
            }
            Family::A2 | Family::B2 => {}
        }
        Ok(())
    }

    /// Closed-form cosh of the edge length.
    pub fn cosh_length(&self) -> Result<CoshLength, DcsError> {
        self.validate()?;
        let eta_term = self.eta * (self.f_i + self.f_j).exp();
        let value = match self.family {
            Family::A1p => -(self.p_i() * self.p_j()).sqrt() + eta_term,
            // positive rearrangement (e^{2f} - 1) avoids square roots of negatives
            Family::A1n => {
                let qi = (2.0 * self.f_i).exp() - 1.0;
                let qj = (2.0 * self.f_j).exp() - 1.0;
                (qi * qj).sqrt() + eta_term
            }
            Family::A2 => -(self.f_j - self.f_i - self.c).cosh() + eta_term,
            Family::B1p => (self.p_i() * self.p_j()).sqrt() + eta_term,
            Family::B1n => {
                let qi = (2.0 * self.f_i).exp() - 1.0;
                let qj = (2.0 * self.f_j).exp() - 1.0;
                -(qi * qj).sqrt() + eta_term
            }
            Family::B2 => (self.f_j - self.f_i - self.c).cosh() + eta_term,
        };
        Ok(CoshLength {
            value,
            degenerate: value <= 1.0,
        })
    }

    /// Split ratio `rho_ij = sinh d_ji / sinh d_ij`.
    pub fn ratio(&self) -> Result<f64, DcsError> {
        self.validate()?;
        match self.family {
            Family::A1p | Family::B1p => {
                let (pi, pj) = (self.p_i(), self.p_j());
                if pi <= f64::MIN_POSITIVE {
                    return Err(DcsError::PoleAtZero(0));
                }
                let r = (pj / pi).sqrt();
                Ok(if self.family == Family::A1p { r } else { -r })
            }
            Family::A1n | Family::B1n => {
                let qi = (2.0 * self.f_i).exp() - 1.0;
                let qj = (2.0 * self.f_j).exp() - 1.0;
                if qi <= f64::MIN_POSITIVE {
                    return Err(DcsError::PoleAtZero(0));
                }
                let r = (qj / qi).sqrt();
                Ok(if self.family == Family::A1n { r } else { -r })
            }
            Family::A2 | Family::B2 => {
                let r = (self.f_j - self.f_i - self.c).exp();
                Ok(if self.family == Family::A2 { r } else { -r })
            }
        }
    }

    /// The classification's closed form for `coth d_ij`. Kept as a separate
    /// evaluation route from `split_edge`'s `(cosh l + rho)/sinh l`; the two
    /// must agree to 1e-12 relative.
    pub fn coth_d(&self) -> Result<f64, DcsError> {
        let cl = self.cosh_length()?;
        if cl.degenerate {
            return Err(DcsError::DegenerateEdge);
        }
        let sinh_l = (cl.value * cl.value - 1.0).sqrt();
        let eta_term = self.eta * (self.f_i + self.f_j).exp();
        let numerator = match self.family {
            Family::A1p | Family::A1n => {
                // -alpha_i e^{2 f_i} sqrt(P_j / P_i) + eta e^{f_i + f_j}
                let root = self.sqrt_pj_over_pi()?;
                -f64::from(self.alpha_i) * (2.0 * self.f_i).exp() * root + eta_term
            }
            Family::A2 => (self.f_j - self.f_i - self.c).sinh() + eta_term,
            Family::B1p | Family::B1n => {
                let root = self.sqrt_pj_over_pi()?;
                f64::from(self.alpha_i) * (2.0 * self.f_i).exp() * root + eta_term
            }
            Family::B2 => -(self.f_j - self.f_i - self.c).sinh() + eta_term,
        };
        Ok(numerator / sinh_l)
    }

    /// `sqrt(P_j / P_i)` evaluated on the positive rearrangement for the
    /// negative-branch families.
    fn sqrt_pj_over_pi(&self) -> Result<f64, DcsError> {
        match self.family {
            Family::A1n | Family::B1n => {
                let qi = (2.0 * self.f_i).exp() - 1.0;
                let qj = (2.0 * self.f_j).exp() - 1.0;
                if qi <= f64::MIN_POSITIVE {
                    return Err(DcsError::PoleAtZero(0));
                }
                Ok((qj / qi).sqrt())
            }
            _ => {
                let (pi, pj) = (self.p_i(), self.p_j());
                if pi <= f64::MIN_POSITIVE {
                    return Err(DcsError::PoleAtZero(0));
                }
                Ok((pj / pi).sqrt())
            }
        }
    }
}

/// Per oriented edge: total length, split ratio, coth values, and the real
/// signed distances when they exist.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EdgeSplit {
    pub cosh_l: f64,
    pub l: f64,
    pub rho: f64,
    pub t_ij: f64,
    pub t_ji: f64,
    pub d_ij: Option<f64>,
    pub d_ji: Option<f64>,
    pub real_split: bool,
}

/// Guard above 1 for the arccoth branch.
const COTH_GUARD: f64 = 1.0 + 1e-13;

fn arccoth(t: f64) -> f64 {
    0.5 * ((t + 1.0) / (t - 1.0)).ln()
}

/// Split an edge of length `arccosh(cosh_l)` with ratio `rho`.
///
/// `t_ij = (cosh l + rho)/sinh l` and `t_ji = (cosh l + 1/rho)/sinh l` always
/// hold; real signed distances exist iff both `|t| > 1`, equivalently
/// `rho > -e^{-l}` or `rho < -e^{l}`.
pub fn split_edge(cosh_l: f64, rho: f64) -> Result<EdgeSplit, DcsError> {
    if !cosh_l.is_finite() || cosh_l <= 1.0 + 1e-13 {
        return Err(DcsError::DegenerateEdge);
    }
    if rho == 0.0 || !rho.is_finite() {
        return Err(DcsError::ZeroRatio);
    }
    let l = cosh_l.acosh();
    let sinh_l = (cosh_l * cosh_l - 1.0).sqrt();
    let t_ij = (cosh_l + rho) / sinh_l;
    let t_ji = (cosh_l + 1.0 / rho) / sinh_l;
    let real = t_ij.abs() > COTH_GUARD && t_ji.abs() > COTH_GUARD;
    let (d_ij, d_ji, real) = if real {
        let d_ij = arccoth(t_ij);
        let d_ji = l - d_ij;
        // re-verify the split identities before accepting the real branch
        let ratio_back = d_ji.sinh() / d_ij.sinh();
        let ok = ((ratio_back - rho).abs() <= 1e-10 * rho.abs().max(1.0))
            && ((d_ij + d_ji - l).abs() <= 1e-10 * l.max(1.0));
        if ok {
            (Some(d_ij), Some(d_ji), true)
        } else {
            (None, None, false)
        }
    } else {
        (None, None, false)
    };
    Ok(EdgeSplit {
        cosh_l,
        l,
        rho,
        t_ij,
        t_ji,
        d_ij,
        d_ji,
        real_split: real,
    })
}

/// A face-level family violation, naming the broken rule of the
/// classification's coexistence claims.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FaceFamilyViolation {
    pub rule: String,
}

/// Accept exactly the face multisets allowed by the coexistence claims:
/// three equal A-families, or one A-family with two copies of its matched
/// B-family.
pub fn validate_face_families(families: [Family; 3]) -> Result<(), FaceFamilyViolation> {
    let a: Vec<Family> = families.iter().copied().filter(|f| f.is_a()).collect();
    let b: Vec<Family> = families.iter().copied().filter(|f| f.is_b()).collect();
    match (a.len(), b.len()) {
        (3, 0) => {
            if a[0] == a[1] && a[1] == a[2] {
                Ok(())
            } else {
                Err(FaceFamilyViolation {
                    rule: "claim (a): distinct A-families can not exist simultaneously in pairs"
                        .into(),
                })
            }
        }
        (0, 3) => Err(FaceFamilyViolation {
            rule: "claim (b): all-B face: rho-product negative, compatibility impossible".into(),
        }),
        (1, 2) => {
            if b[0] == b[1] && b[0] == a[0].mixed_partner() {
                Ok(())
            } else {
                Err(FaceFamilyViolation {
                    rule: "claim (c): the only mixed faces pair one A-family with two copies of its matched B-family"
                        .into(),
                })
            }
        }
        (2, 1) => Err(FaceFamilyViolation {
            rule: "claim (c): a face with exactly one B-edge has negative rho-product".into(),
        }),
        _ => unreachable!(),
    }
}

/// Input edge for the alpha-normalization: endpoints, eta, family.
#[derive(Clone, Copy, Debug)]
pub struct AlphaEdge {
    pub i: usize,
    pub j: usize,
    pub eta: f64,
    pub family: Family,
}

/// Result of reparameterizing positive/zero/negative `alpha_raw` onto
/// `alpha in {-1, 0, 1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaNormalized {
    pub alpha: Vec<i8>,
    pub g: Vec<f64>,
    pub eta: Vec<f64>,
}

/// Reparameterize `alpha_raw` per boundary to `{-1, 0, 1}` while keeping the
/// induced metric invariant: `g_r = f_r + log|alpha_raw_r| / 2` (identity at
/// zero) and `eta~_ij = eta_ij / sqrt(|alpha_raw_i| |alpha_raw_j|)` with zero
/// ends contributing factor 1.
pub fn normalize_alpha(
    alpha_raw: &[f64],
    f: &[f64],
    edges: &[AlphaEdge],
) -> Result<AlphaNormalized, DcsError> {
    assert_eq!(alpha_raw.len(), f.len());
    for (r, &a) in alpha_raw.iter().enumerate() {
        if !a.is_finite() {
            return Err(DcsError::InvalidParameters(format!(
                "alpha_raw[{r}] not finite"
            )));
        }
    }
    let alpha: Vec<i8> = alpha_raw
        .iter()
        .map(|&a| a.signum() as i8 * i8::from(a != 0.0))
        .collect();
    let g: Vec<f64> = alpha_raw
        .iter()
        .zip(f)
        .map(|(&a, &fr)| {
            if a == 0.0 {
                fr
            } else {
                fr + 0.5 * a.abs().ln()
            }
        })
        .collect();
    let mut eta = Vec::with_capacity(edges.len());
    for e in edges {
        let (ai, aj) = (alpha_raw[e.i], alpha_raw[e.j]);
        match e.family {
            Family::A1n | Family::B1n => {
                if ai >= 0.0 || aj >= 0.0 {
                    return Err(DcsError::MixedSignAlpha(e.family, e.i, e.j));
                }
            }
            Family::A1p | Family::B1p => {
                // any sign pattern maps end-by-end
            }
            Family::A2 | Family::B2 => {
                return Err(DcsError::InvalidParameters(
                    "alpha normalization does not apply to A2/B2 edges".into(),
                ));
            }
        }
        let si = if ai == 0.0 { 1.0 } else { ai.abs().sqrt() };
        let sj = if aj == 0.0 { 1.0 } else { aj.abs().sqrt() };
        eta.push(e.eta / (si * sj));
    }
    Ok(AlphaNormalized { alpha, g, eta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ddfloat::Dd;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cosh_length_examples() {
        // Guo vertex scaling: alpha = 0, f = 0, eta = 4 -> cosh l = 3
        let e = EdgeConformal::alpha_family(Family::A1p, 0, 0, 0.0, 0.0, 4.0);
        assert_eq!(e.cosh_length().unwrap().value, 3.0);

        // A2 example against the oracle: -cosh 1 + 2e
        let e = EdgeConformal::c_family(Family::A2, 0.0, 1.0, 2.0, 0.0);
        let got = e.cosh_length().unwrap().value;
        let want = (-(Dd::ONE.cosh()) + Dd::from_f64(2.0) * Dd::ONE.exp()).to_f64();
        assert!((got - want).abs() < 1e-14);
        assert!((want - 3.893_483_022_102_847).abs() < 1e-14);

        // B1p example against the oracle: sqrt((1+e^4)(1+e^-4)) - 6
        let e = EdgeConformal::alpha_family(Family::B1p, 1, 1, 2.0, -2.0, -6.0);
        let got = e.cosh_length().unwrap().value;
        let want = {
            let e4 = Dd::from_f64(4.0).exp();
            let em4 = Dd::from_f64(-4.0).exp();
            (((Dd::ONE + e4) * (Dd::ONE + em4)).sqrt() - Dd::from_f64(6.0)).to_f64()
        };
        assert!((got - want).abs() < 1e-13, "{got} vs {want}");
    }

    #[test]
    fn ratio_examples() {
        let e = EdgeConformal::alpha_family(Family::A1p, 0, 0, 0.7, -0.3, 4.0);
        assert_eq!(e.ratio().unwrap(), 1.0);

        // B1p ratio equals -e^{-2} at this symmetric parameter choice
        let e = EdgeConformal::alpha_family(Family::B1p, 1, 1, 2.0, -2.0, -6.0);
        let got = e.ratio().unwrap();
        assert!((got + (-2.0f64).exp()).abs() < 1e-15, "{got}");

        let e = EdgeConformal::c_family(Family::A2, 1.0, 0.0, 2.0, 0.0);
        assert!((e.ratio().unwrap() - (-1.0f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn split_symmetric_edge() {
        // cosh l = 3, rho = 1: d_ij = d_ji = l/2 and coth(l/2) = sqrt 2.
        let s = split_edge(3.0, 1.0).unwrap();
        let oracle_l = Dd::from_f64(3.0).acosh();
        assert!((s.l - oracle_l.to_f64()).abs() < 1e-15);
        assert!((s.t_ij - 2.0f64.sqrt()).abs() < 1e-15);
        assert!(s.real_split);
        let d = s.d_ij.unwrap();
        let half = (oracle_l.ldexp(-1)).to_f64();
        assert!((d - half).abs() < 1e-14);
        assert!((s.d_ji.unwrap() - half).abs() < 1e-14);
        // arccoth(sqrt 2) = l/2, checked through the oracle
        let acoth = Dd::from_f64(2.0).sqrt().acoth().to_f64();
        assert!((acoth - half).abs() < 1e-15);
    }

    #[test]
    fn split_virtual_edge() {
        // cosh l = 3, rho = -1: |t| < 1, no real split
        let s = split_edge(3.0, -1.0).unwrap();
        assert!((s.t_ij - 2.0 / 8.0f64.sqrt()).abs() < 1e-15);
        assert!(!s.real_split);
        assert!(s.d_ij.is_none());
    }

    #[test]
    fn split_negative_distance_edge() {
        // B1p(1, 2, -2, eta=-6): real split with a negative signed distance.
        let e = EdgeConformal::alpha_family(Family::B1p, 1, 1, 2.0, -2.0, -6.0);
        let cl = e.cosh_length().unwrap().value;
        let rho = e.ratio().unwrap();
        let s = split_edge(cl, rho).unwrap();
        assert!(s.real_split);
        let (d_ij, d_ji) = (s.d_ij.unwrap(), s.d_ji.unwrap());
        assert!(d_ij > 0.0 && d_ji < 0.0, "({d_ij}, {d_ji})");
        assert!((d_ij + d_ji - s.l).abs() < 1e-12);
        assert!((d_ji.sinh() / d_ij.sinh() - rho).abs() < 1e-12);
        // coarse magnitude check on the signed distances
        assert!((d_ij - 1.182).abs() < 5e-3 && (d_ji + 0.199).abs() < 5e-3);
    }

    #[test]
    fn split_rejects_bad_inputs() {
        assert_eq!(split_edge(1.0, 1.0), Err(DcsError::DegenerateEdge));
        assert_eq!(split_edge(3.0, 0.0), Err(DcsError::ZeroRatio));
    }

    #[test]
    fn coth_examples() {
        // Guo: coth d = 4 / sinh(arccosh 3) = sqrt 2
        let e = EdgeConformal::alpha_family(Family::A1p, 0, 0, 0.0, 0.0, 4.0);
        let got = e.coth_d().unwrap();
        assert!((got - 2.0f64.sqrt()).abs() < 1e-15);

        // A2 with f_i = f_j: the sinh term vanishes
        let e = EdgeConformal::c_family(Family::A2, 0.4, 0.4, 3.0, 0.0);
        let cl = e.cosh_length().unwrap().value;
        let sinh_l = (cl * cl - 1.0).sqrt();
        let want = 3.0 * (0.8f64).exp() / sinh_l;
        assert!((e.coth_d().unwrap() - want).abs() < 1e-14);

        // B1p example ties to the split value
        let e = EdgeConformal::alpha_family(Family::B1p, 1, 1, 2.0, -2.0, -6.0);
        let s = split_edge(e.cosh_length().unwrap().value, e.ratio().unwrap()).unwrap();
        assert!((e.coth_d().unwrap() - s.t_ij).abs() < 1e-12 * s.t_ij.abs());
    }

    #[test]
    fn face_family_rules() {
        use Family::*;
        assert!(validate_face_families([A1p, A1p, A1p]).is_ok());
        assert!(validate_face_families([A1n, A1n, A1n]).is_ok());
        assert!(validate_face_families([A2, A2, A2]).is_ok());
        assert!(validate_face_families([A1p, B1p, B1p]).is_ok());
        assert!(validate_face_families([B1n, A1n, B1n]).is_ok());
        assert!(validate_face_families([B2, B2, A2]).is_ok());

        let v = validate_face_families([B1p, B1p, B1p]).unwrap_err();
        assert!(v.rule.contains("all-B"));
        assert!(validate_face_families([A1p, A2, A2]).is_err());
        assert!(validate_face_families([A1p, B2, B2]).is_err());
        assert!(validate_face_families([A1p, B1p, B1n]).is_err());
        assert!(validate_face_families([A2, B2, B1p]).is_err());
        assert!(validate_face_families([A1p, A1p, B1p]).is_err());
    }

    #[test]
    fn alpha_normalization_examples() {
        // alpha_raw = 4 at both ends, f = 0, eta = 8 -> g = log 2, eta~ = 2;
        // cosh l = 3 on both sides of the reparameterization.
        let edges = [AlphaEdge {
            i: 0,
            j: 1,
            eta: 8.0,
            family: Family::A1p,
        }];
        let n = normalize_alpha(&[4.0, 4.0], &[0.0, 0.0], &edges).unwrap();
        assert_eq!(n.alpha, vec![1, 1]);
        assert!((n.g[0] - 2.0f64.ln()).abs() < 1e-16);
        assert!((n.eta[0] - 2.0).abs() < 1e-15);

        let before = {
            // evaluate with raw alpha by direct formula
            let p = 1.0_f64 + 4.0;
            -(p * p).sqrt() + 8.0
        };
        let e = EdgeConformal::alpha_family(Family::A1p, 1, 1, n.g[0], n.g[1], n.eta[0]);
        let after = e.cosh_length().unwrap().value;
        assert!((before - 3.0).abs() < 1e-15);
        assert!((after - 3.0).abs() < 1e-13, "{after}");

        // identity at alpha_raw = 1
        let n = normalize_alpha(&[1.0, 1.0], &[0.3, -0.4], &edges).unwrap();
        assert_eq!(n.g, vec![0.3, -0.4]);
        assert_eq!(n.eta[0], 8.0);

        // one-sided: alpha_raw = e^2 at i, 1 at j
        let n = normalize_alpha(&[(2.0f64).exp(), 1.0], &[0.0, 0.5], &edges).unwrap();
        assert!((n.g[0] - 1.0).abs() < 1e-15);
        assert!((n.eta[0] - 8.0 / 1.0f64.exp()).abs() < 1e-14);

        // mixed sign on an A1n edge errors
        let edges_n = [AlphaEdge {
            i: 0,
            j: 1,
            eta: 2.0,
            family: Family::A1n,
        }];
        assert!(matches!(
            normalize_alpha(&[-1.0, 2.0], &[0.5, 0.5], &edges_n),
            Err(DcsError::MixedSignAlpha(..))
        ));
    }

    #[test]
    fn alpha_normalization_preserves_cosh_length_on_draws() {
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        for _ in 0..100 {
            let a_raw: [f64; 2] = [rng.random_range(0.01..10.0), rng.random_range(0.01..10.0)];
            let f: [f64; 2] = [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)];
            // choose eta so the original structure has cosh l about 2..5
            let p = (1.0 + a_raw[0] * (2.0 * f[0]).exp()) * (1.0 + a_raw[1] * (2.0 * f[1]).exp());
            let target = rng.random_range(2.0..5.0);
            let eta = (target + p.sqrt()) / (f[0] + f[1]).exp();
            let before = -p.sqrt() + eta * (f[0] + f[1]).exp();

            let edges = [AlphaEdge {
                i: 0,
                j: 1,
                eta,
                family: Family::A1p,
            }];
            let n = normalize_alpha(&a_raw, &f, &edges).unwrap();
            let e = EdgeConformal::alpha_family(
                Family::A1p,
                n.alpha[0],
                n.alpha[1],
                n.g[0],
                n.g[1],
                n.eta[0],
            );
            let after = e.cosh_length().unwrap().value;
            assert!(
                (before - after).abs() <= 1e-12 * before.abs().max(1.0),
                "{before} vs {after}"
            );
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        // A1n needs f > 0
        let e = EdgeConformal::alpha_family(Family::A1n, -1, -1, -0.5, 1.0, 2.0);
        assert!(matches!(
            e.cosh_length(),
            Err(DcsError::InvalidParameters(_))
        ));
        // A1p with alpha = -1 needs P >= 0
        let e = EdgeConformal::alpha_family(Family::A1p, -1, -1, 1.0, 0.0, 2.0);
        assert!(matches!(
            e.cosh_length(),
            Err(DcsError::InvalidParameters(_))
        ));
        // pole at zero: alpha = -1, f = 0 makes the ratio infinite
        let e = EdgeConformal::alpha_family(Family::A1p, -1, 0, 0.0, 0.0, 5.0);
        assert!(matches!(e.ratio(), Err(DcsError::PoleAtZero(_))));
    }
}
