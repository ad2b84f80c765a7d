//! Double-double arithmetic: unevaluated sums of two `f64` values giving a
//! ~106-bit significand (about 32 significant decimal digits).
//!
//! This crate exists as an *independent numerical oracle* for tests. It
//! deliberately shares no code with any production evaluation path: the
//! elementary functions here are built from error-free transformations
//! (Dekker/Knuth two-sum and FMA two-product) plus Taylor series and Newton
//! iterations, so agreement with a plain `f64` implementation is evidence,
//! not tautology.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// A double-double value `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = f64::mul_add(a, b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    /// pi to double-double precision; the words spell out the exact f64
    /// values, hence the lint allowances.
    #[allow(clippy::approx_constant, clippy::excessive_precision)]
    pub const PI: Dd = Dd {
        hi: 3.141592653589793116e0,
        lo: 1.224646799147353207e-16,
    };
    /// pi/2 to double-double precision.
    #[allow(clippy::approx_constant, clippy::excessive_precision)]
    pub const FRAC_PI_2: Dd = Dd {
        hi: 1.570796326794896558e0,
        lo: 6.123233995736766036e-17,
    };
    /// ln 2 to double-double precision.
    #[allow(clippy::approx_constant, clippy::excessive_precision)]
    pub const LN_2: Dd = Dd {
        hi: 6.931471805599452862e-1,
        lo: 2.319046813846299558e-17,
    };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn sqr(self) -> Dd {
        self * self
    }

    /// Multiply by an exact power of two (error-free).
    pub fn ldexp(self, exp: i32) -> Dd {
        Dd {
            hi: libm_ldexp(self.hi, exp),
            lo: libm_ldexp(self.lo, exp),
        }
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        assert!(self.hi > 0.0, "sqrt of negative double-double");
        // Newton iteration x <- (x + a/x)/2 starting from the f64 root.
        let mut x = Dd::from_f64(self.hi.sqrt());
        x = (x + self / x).ldexp(-1);
        x = (x + self / x).ldexp(-1);
        x
    }

    pub fn exp(self) -> Dd {
        // exp(x) = 2^k * exp(r), r = x - k ln2, |r| <= ln2 / 2.
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ONE;
        }
        let k = (self.hi / Dd::LN_2.hi).round();
        let r = self - Dd::LN_2 * Dd::from_f64(k);
        let mut sum = Dd::ONE + r;
        let mut term = r;
        let mut n = 1.0;
        loop {
            n += 1.0;
            term = term * r / Dd::from_f64(n);
            sum = sum + term;
            if term.hi.abs() < 1e-40 * sum.hi.abs() || n > 80.0 {
                break;
            }
        }
        sum.ldexp(k as i32)
    }

    pub fn ln(self) -> Dd {
        assert!(self.hi > 0.0, "ln of non-positive double-double");
        // Newton iteration y <- y + x e^{-y} - 1, quadratically convergent.
        let mut y = Dd::from_f64(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - Dd::ONE;
        }
        y
    }

    pub fn sinh(self) -> Dd {
        if self.hi.abs() < 0.5 {
            // Taylor series keeps full relative precision near zero.
            let x2 = self.sqr();
            let mut term = self;
            let mut sum = self;
            let mut n = 1.0;
            loop {
                term = term * x2 / Dd::from_f64((n + 1.0) * (n + 2.0));
                sum = sum + term;
                n += 2.0;
                if term.hi.abs() < 1e-40 * sum.hi.abs().max(1e-300) || n > 80.0 {
                    break;
                }
            }
            sum
        } else {
            let e = self.exp();
            (e - e.recip()).ldexp(-1)
        }
    }

    pub fn cosh(self) -> Dd {
        let e = self.exp();
        (e + e.recip()).ldexp(-1)
    }

    pub fn tanh(self) -> Dd {
        self.sinh() / self.cosh()
    }

    pub fn coth(self) -> Dd {
        self.cosh() / self.sinh()
    }

    pub fn acosh(self) -> Dd {
        // ln(x + sqrt(x^2 - 1)); callers keep x bounded away from 1.
        (self + (self.sqr() - Dd::ONE).sqrt()).ln()
    }

    pub fn asinh(self) -> Dd {
        (self + (self.sqr() + Dd::ONE).sqrt()).ln()
    }

    /// Inverse of coth for |t| > 1: (1/2) ln((t+1)/(t-1)).
    pub fn acoth(self) -> Dd {
        ((self + Dd::ONE) / (self - Dd::ONE)).ln().ldexp(-1)
    }

    fn sin_cos_reduced(r: Dd) -> (Dd, Dd) {
        // |r| <= pi/4 + eps; plain Taylor series.
        let x2 = r.sqr();
        let mut term = r;
        let mut sin = r;
        let mut n = 1.0;
        loop {
            term = -term * x2 / Dd::from_f64((n + 1.0) * (n + 2.0));
            sin = sin + term;
            n += 2.0;
            if term.hi.abs() < 1e-40 * sin.hi.abs().max(1e-300) || n > 80.0 {
                break;
            }
        }
        let mut term = Dd::ONE;
        let mut cos = Dd::ONE;
        let mut n = 0.0;
        loop {
            term = -term * x2 / Dd::from_f64((n + 1.0) * (n + 2.0));
            cos = cos + term;
            n += 2.0;
            if term.hi.abs() < 1e-40 * cos.hi.abs().max(1e-300) || n > 80.0 {
                break;
            }
        }
        (sin, cos)
    }

    pub fn sin_cos(self) -> (Dd, Dd) {
        let k = (self.hi / Dd::FRAC_PI_2.hi).round();
        let r = self - Dd::FRAC_PI_2 * Dd::from_f64(k);
        let (s, c) = Dd::sin_cos_reduced(r);
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sin(self) -> Dd {
        self.sin_cos().0
    }

    pub fn cos(self) -> Dd {
        self.sin_cos().1
    }
}

fn libm_ldexp(x: f64, exp: i32) -> f64 {
    // Exact scaling by 2^exp for the magnitudes used here.
    x * (2.0f64).powi(exp)
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, other: Dd) -> Dd {
        self + (-other)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, other: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, other.hi);
        let p2 = p2 + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self - other * Dd::from_f64(q1);
        let q2 = r.hi / other.hi;
        let r = r - other * Dd::from_f64(q2);
        let q3 = r.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e } + Dd::from_f64(q3)
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::from_f64(x)
    }
}
