//! Text and SVG renderers. All layout decisions here are display-only;
//! nothing downstream may depend on rendered output for correctness.

use num_traits::ToPrimitive;

use crate::error::Result;
use crate::frieze::FriezeOrderN;
use crate::path::FareyPath;
use crate::rational::ExtRational;
use crate::tiling::TilingWindow;

/// Tab-separated grid with row and column index headers.
pub fn window_tsv(w: &TilingWindow) -> String {
    let (i0, i1) = w.i_range();
    let (j0, j1) = w.j_range();
    let mut out = String::from("i\\j");
    for j in j0..=j1 {
        out.push('\t');
        out.push_str(&j.to_string());
    }
    out.push('\n');
    for i in i0..=i1 {
        out.push_str(&i.to_string());
        for j in j0..=j1 {
            out.push('\t');
            out.push_str(&w.entry(i, j).expect("in range").to_string());
        }
        out.push('\n');
    }
    out
}

/// The standard form of a frieze: row r holds the entries m_{j+r,j},
/// consecutive rows offset by one half-cell, so the first row is the
/// zero diagonal and the third row is the quiddity sequence.
pub fn frieze_standard_form(f: &FriezeOrderN, j0: i64, cols: usize) -> Result<String> {
    let n = f.order();
    let mut rows: Vec<Vec<String>> = Vec::new();
    for r in 0..=n {
        let mut row = Vec::with_capacity(cols);
        for k in 0..cols as i64 {
            row.push(f.entry(j0 + k + r, j0 + k)?.to_string());
        }
        rows.push(row);
    }
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    let half = (width + 2) / 2;
    let cell = 2 * half;
    let mut out = String::new();
    for (r, row) in rows.iter().enumerate() {
        let mut line = vec![b' '; (r % 2) * half + cols * cell];
        for (k, s) in row.iter().enumerate() {
            let slot = k * cell + (r % 2) * half;
            let at = slot + width - s.len();
            line[at..at + s.len()].copy_from_slice(s.as_bytes());
        }
        let text = String::from_utf8(line).expect("ascii layout");
        out.push_str(text.trim_end());
        out.push('\n');
    }
    Ok(out)
}

fn disc_point(v: &ExtRational) -> (f64, f64) {
    let a = v.numerator();
    let b = v.denominator();
    if v.is_infinity() {
        return (1.0, 0.0);
    }
    let t = match (a.to_f64(), b.to_f64()) {
        (Some(x), Some(y)) if y != 0.0 => x / y,
        _ => 1e300,
    };
    let d = t * t + 1.0;
    ((t * t - 1.0) / d, -2.0 * t / d)
}

/// Quadratic Bezier control point approximating the hyperbolic
/// geodesic between two boundary points of the unit disc.
fn geodesic_control(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let mx = (a.0 + b.0) / 2.0;
    let my = (a.1 + b.1) / 2.0;
    let c = (mx * mx + my * my).sqrt();
    if c < 1e-9 {
        return (0.0, 0.0);
    }
    let inner = (1.0 - (1.0 - c * c).max(0.0).sqrt()) / c;
    let (ix, iy) = (mx / c * inner, my / c * inner);
    (2.0 * ix - mx, 2.0 * iy - my)
}

/// Renders paths on the Farey disc: the unit circle, geodesic edges,
/// and labeled vertices. Coordinates are floating point for display
/// only.
pub fn svg_disc(paths: &[(&FareyPath, &str)]) -> String {
    let size = 640.0;
    let c = size / 2.0;
    let s = size / 2.0 - 40.0;
    let px = |p: (f64, f64)| (c + s * p.0, c - s * p.1);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str(&format!(
        "  <circle cx=\"{c}\" cy=\"{c}\" r=\"{s}\" fill=\"none\" stroke=\"#888\"/>\n"
    ));
    for (path, color) in paths {
        let vs = path.vertices();
        for pair in vs.windows(2) {
            let a = disc_point(&pair[0]);
            let b = disc_point(&pair[1]);
            let q = geodesic_control(a, b);
            let (ax, ay) = px(a);
            let (bx, by) = px(b);
            let (qx, qy) = px(q);
            out.push_str(&format!(
                "  <path d=\"M {ax:.2} {ay:.2} Q {qx:.2} {qy:.2} {bx:.2} {by:.2}\" \
                 fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n"
            ));
        }
        for v in &vs {
            let (x, y) = px(disc_point(v));
            out.push_str(&format!(
                "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"{color}\"/>\n"
            ));
            let (lx, ly) = px({
                let p = disc_point(v);
                (p.0 * 1.08, p.1 * 1.08)
            });
            out.push_str(&format!(
                "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"12\" \
                 text-anchor=\"middle\" fill=\"#333\">{v}</text>\n"
            ));
        }
    }
    out.push_str("</svg>\n");
    out
}
