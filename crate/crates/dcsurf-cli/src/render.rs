//! Klein-disk SVG rendering of one realized face: the unit circle, the
//! polar chords of the three poles (boundary geodesics), the three edge
//! chords, the perpendicular chords through the edge centers, and markers
//! for the centers keyed to their causal class.
//!
//! Output is deterministic: fixed float formatting, no map iteration.

use dcsurf::hexagon::{Center, HexRealization};
use dcsurf::lorentz::{CausalClass, LorentzVector};
use std::fmt::Write;

const VIEW: f64 = 1000.0;
const R: f64 = 480.0;

fn map(u: f64, v: f64) -> (f64, f64) {
    (VIEW / 2.0 + R * u, VIEW / 2.0 - R * v)
}

/// Chord of the polar line of `pole` inside the unit disk, as Klein
/// endpoints, or None when the line misses the disk.
fn chord(pole: LorentzVector) -> Option<((f64, f64), (f64, f64))> {
    // the line is u w1 + v w2 = w3
    let (w1, w2, w3) = (pole.x1, pole.x2, pole.x3);
    let n = (w1 * w1 + w2 * w2).sqrt();
    if n < 1e-300 {
        return None;
    }
    let d0 = w3 / n;
    if d0.abs() >= 1.0 {
        return None;
    }
    let (nx, ny) = (w1 / n, w2 / n);
    let (px, py) = (nx * d0, ny * d0);
    let half = (1.0 - d0 * d0).sqrt();
    let (tx, ty) = (-ny, nx);
    Some((
        (px - half * tx, py - half * ty),
        (px + half * tx, py + half * ty),
    ))
}

fn line_elem(out: &mut String, a: (f64, f64), b: (f64, f64), style: &str) {
    let (x1, y1) = map(a.0, a.1);
    let (x2, y2) = map(b.0, b.1);
    writeln!(
        out,
        r##"  <line x1="{x1:.6}" y1="{y1:.6}" x2="{x2:.6}" y2="{y2:.6}" {style}/>"##
    )
    .unwrap();
}

fn marker_elem(
    out: &mut String,
    point: LorentzVector,
    class: CausalClass,
    radius: f64,
    label: &str,
) {
    let Ok((u, v)) = point.klein() else {
        writeln!(out, r##"  <!-- {label}: at projective infinity -->"##).unwrap();
        return;
    };
    let (x, y) = map(u, v);
    match class {
        CausalClass::TimeLike { .. } => writeln!(
            out,
            r##"  <circle cx="{x:.6}" cy="{y:.6}" r="{radius:.1}" fill="#205080" stroke="none" class="{label} time-like"/>"##
        )
        .unwrap(),
        CausalClass::SpaceLike => writeln!(
            out,
            r##"  <rect x="{:.6}" y="{:.6}" width="{:.1}" height="{:.1}" fill="none" stroke="#a03020" stroke-width="2" class="{label} space-like"/>"##,
            x - radius,
            y - radius,
            2.0 * radius,
            2.0 * radius
        )
        .unwrap(),
        CausalClass::LightLike => writeln!(
            out,
            r##"  <circle cx="{x:.6}" cy="{y:.6}" r="{radius:.1}" fill="none" stroke="#806020" stroke-width="2" class="{label} light-like"/>"##
        )
        .unwrap(),
    }
}

/// Lorentz reflection through `a`: `x - 2 (x*a / a*a) a`.
fn reflect(a: LorentzVector, x: LorentzVector) -> LorentzVector {
    x - a.scale(2.0 * x.inner(a) / a.inner(a))
}

/// The orientation-preserving isometry taking the unit time-like `from`
/// (upper sheet) to the model origin `(0,0,1)`, as a composition of two
/// Lorentz reflections. Identity elsewhere in the plane's complement.
fn recentering(from: LorentzVector) -> impl Fn(LorentzVector) -> LorentzVector {
    let origin = LorentzVector::new(0.0, 0.0, 1.0);
    let mid = from + origin;
    move |x| reflect(origin, reflect(mid, x))
}

/// Render one face with its edge centers and face center.
///
/// When the face center is time-like the whole picture is recentered on it,
/// matching the usual Klein-disk figure convention; otherwise the
/// realization gauge is drawn as is.
pub fn render_face(hex: &HexRealization, centers: &[Center; 3], face_center: &Center) -> String {
    let transform: Box<dyn Fn(LorentzVector) -> LorentzVector> = if face_center.class.is_time_like()
    {
        let c = face_center.point;
        let upper = if c.x3 > 0.0 { c } else { -c };
        Box::new(recentering(upper))
    } else {
        Box::new(|x| x)
    };
    let poles = hex.poles.map(&transform);
    let edge_points = [0, 1, 2].map(|s| transform(centers[s].point));
    let center_point = transform(face_center.point);

    let mut out = String::with_capacity(4096);
    writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW} {VIEW}" width="{VIEW}" height="{VIEW}">"##
    )
    .unwrap();
    writeln!(
        out,
        r##"  <circle cx="{c:.1}" cy="{c:.1}" r="{R:.1}" fill="none" stroke="#000000" stroke-width="2"/>"##,
        c = VIEW / 2.0
    )
    .unwrap();

    // boundary geodesics: polar chords of the poles
    for pole in poles {
        if let Some((a, b)) = chord(pole) {
            line_elem(&mut out, a, b, r##"stroke="#c03030" stroke-width="3""##);
        }
    }
    // edge chords: polar chords of v_r (x) v_s
    for side in 0..3 {
        let (vr, vs) = (poles[side], poles[(side + 1) % 3]);
        if let Some((a, b)) = chord(vr.cross(vs)) {
            line_elem(&mut out, a, b, r##"stroke="#202020" stroke-width="1.5""##);
        }
    }
    // perpendicular chords through the edge centers
    for side in 0..3 {
        let (vr, vs) = (poles[side], poles[(side + 1) % 3]);
        let pole = edge_points[side].cross(vr.cross(vs));
        if let Some((a, b)) = chord(pole) {
            line_elem(
                &mut out,
                a,
                b,
                r##"stroke="#3050a0" stroke-width="1.5" stroke-dasharray="8 5""##,
            );
        }
    }
    for (side, c) in centers.iter().enumerate() {
        marker_elem(
            &mut out,
            edge_points[side],
            c.class,
            7.0,
            &format!("edge-center-{side}"),
        );
    }
    marker_elem(
        &mut out,
        center_point,
        face_center.class,
        10.0,
        "face-center",
    );
    writeln!(out, "</svg>").unwrap();
    out
}
