//! Rank-three pictures: normalized small roots and the traces of their
//! hyperplanes on the affine cut `x_1 + x_2 + x_3 = 1`.

use std::fmt::Write as _;

use crate::coxeter::{CoxeterSystem, Gen};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::smallroots::build_small_roots;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 693.0;
const MARGIN: f64 = 24.0;

/// Barycentric coordinates with respect to the normalized simple roots.
pub type Bary = [Scalar; 3];

#[derive(Clone, Debug)]
pub struct ProjectivePicture {
    /// Normalized small roots, by table node id.
    pub points: Vec<Bary>,
    /// Hyperplane traces clipped to the triangle, by table node id.
    pub segments: Vec<(usize, Bary, Bary)>,
}

/// Computes the picture for the n-small roots of a rank-three system.
pub fn projective_picture(sys: &CoxeterSystem, n: usize) -> Result<ProjectivePicture> {
    if sys.rank() != 3 {
        return Err(Error::UnsupportedRank(sys.rank()));
    }
    let field = sys.field();
    let table = build_small_roots(sys, n)?;
    let mut points = Vec::with_capacity(table.len());
    let mut segments = Vec::new();
    for (id, node) in table.nodes().iter().enumerate() {
        let c = node.vector.coords();
        let sum = &(&c[0] + &c[1]) + &c[2];
        let inv = field.inv(&sum)?;
        points.push([field.mul(&c[0], &inv), field.mul(&c[1], &inv), field.mul(&c[2], &inv)]);

        // On the cut, B(x, beta) = sum_i x_i B(a_i, beta); intersect with each edge.
        let b: Vec<Scalar> = (0..3).map(|i| sys.form_simple(i as Gen, &node.vector)).collect();
        let mut ends: Vec<Bary> = Vec::new();
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            let (si, sj) = (field.sign(&b[i]), field.sign(&b[j]));
            if si * sj > 0 || (si == 0 && sj == 0) {
                continue;
            }
            // x = t e_i + (1 - t) e_j with t b_i + (1 - t) b_j = 0.
            let t = field.div(&b[j], &(&b[j] - &b[i]))?;
            let mut p = [field.zero(), field.zero(), field.zero()];
            p[j] = &field.one() - &t;
            p[i] = t;
            if !ends.contains(&p) {
                ends.push(p);
            }
        }
        if ends.len() == 2 {
            let q = ends.pop().expect("two");
            let p = ends.pop().expect("two");
            segments.push((id, p, q));
        }
    }
    Ok(ProjectivePicture { points, segments })
}

fn vertices() -> [(f64, f64); 3] {
    let side = WIDTH - 2.0 * MARGIN;
    let base = HEIGHT - MARGIN;
    let top = base - side * 3f64.sqrt() / 2.0;
    [(MARGIN, base), (WIDTH - MARGIN, base), (WIDTH / 2.0, top)]
}

fn place(sys: &CoxeterSystem, p: &Bary) -> (f64, f64) {
    let v = vertices();
    let w: Vec<f64> = p.iter().map(|x| sys.field().to_f64(x)).collect();
    (
        w[0] * v[0].0 + w[1] * v[1].0 + w[2] * v[2].0,
        w[0] * v[0].1 + w[1] * v[1].1 + w[2] * v[2].1,
    )
}

/// SVG 1.1 text of [`projective_picture`], byte-stable for identical input.
pub fn render_rank3_svg(sys: &CoxeterSystem, n: usize) -> Result<String> {
    let pic = projective_picture(sys, n)?;
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(out, "<title>{} small roots, n = {n}</title>", sys.name());
    let v = vertices();
    let _ = writeln!(
        out,
        "<polygon points=\"{:.6},{:.6} {:.6},{:.6} {:.6},{:.6}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>",
        v[0].0, v[0].1, v[1].0, v[1].1, v[2].0, v[2].1
    );
    let _ = writeln!(out, "<g stroke=\"#4169e1\" stroke-width=\"1\">");
    for (id, p, q) in &pic.segments {
        let (a, b) = (place(sys, p), place(sys, q));
        let _ = writeln!(
            out,
            "<line id=\"h{id}\" x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\"/>",
            a.0, a.1, b.0, b.1
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "<g fill=\"#b22222\" font-family=\"sans-serif\" font-size=\"11\">");
    for (id, p) in pic.points.iter().enumerate() {
        let (x, y) = place(sys, p);
        let _ = writeln!(out, "<circle id=\"r{id}\" cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"4\"/>");
        let _ = writeln!(out, "<text x=\"{:.6}\" y=\"{:.6}\">{id}</text>", x + 5.0, y - 5.0);
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    Ok(out)
}
