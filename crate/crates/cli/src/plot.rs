//! SVG rendering of one-dimensional and two-dimensional fans and complexes
//! in `R^n / R(1, …, 1)` for `n ≤ 4`.

use std::collections::BTreeMap;
use std::fmt::Write;

use anyhow::bail;
use serde::Deserialize;
use trophyp::bergman::flag_cones;
use trophyp::curves::TropicalCurveFan;
use trophyp::matroids::{face_matroid, Matroid};
use trophyp::rational::{int, serde_rational_vec, to_f64, Rational};

const SIZE: f64 = 480.0;
const SCALE: f64 = 70.0;
const RAY_LENGTH: f64 = 2.5;

/// Polyhedral complex given cell by cell: `conv(points) + cone(rays)`.
#[derive(Clone, Debug, Deserialize)]
pub struct Complex {
    pub n: usize,
    pub cells: Vec<Cell>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Cell {
    #[serde(default)]
    pub points: Vec<RatVec>,
    #[serde(default)]
    pub rays: Vec<RatVec>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct RatVec(#[serde(with = "serde_rational_vec")] pub Vec<Rational>);

type P3 = [f64; 3];

/// Sends `e_1, …, e_n` to the vertices of a regular simplex centred at the
/// origin, so the all-ones vector goes to zero.
fn embed(v: &[f64]) -> P3 {
    let n = v.len();
    let verts: Vec<P3> = match n {
        2 => vec![[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0]],
        3 => (0..3)
            .map(|i| {
                let t = std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * i as f64 / 3.0;
                [t.cos(), t.sin(), 0.0]
            })
            .collect(),
        _ => {
            let s = 1.0 / 3f64.sqrt();
            vec![[s, s, s], [s, -s, -s], [-s, s, -s], [-s, -s, s]]
        }
    };
    let mut out = [0.0; 3];
    for (x, p) in v.iter().zip(&verts) {
        for k in 0..3 {
            out[k] += x * p[k];
        }
    }
    out
}

fn screen(p: P3, n: usize) -> (f64, f64) {
    let (x, y) = if n <= 3 {
        (p[0], p[1])
    } else {
        // Fixed oblique view so no coordinate direction collapses.
        (0.848 * p[0] - 0.424 * p[1] + 0.32 * p[2], 0.212 * p[0] + 0.742 * p[1] + 0.636 * p[2])
    };
    (SIZE / 2.0 + SCALE * x, SIZE / 2.0 - SCALE * y)
}

fn unit(p: P3) -> P3 {
    let l = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    if l == 0.0 {
        p
    } else {
        [p[0] / l, p[1] / l, p[2] / l]
    }
}

fn add(a: P3, b: P3, t: f64) -> P3 {
    [a[0] + t * b[0], a[1] + t * b[1], a[2] + t * b[2]]
}

fn hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9);
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 1e-9 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 1e-9 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// One drawable cell: its base points and ray directions, already embedded.
struct Shape {
    points: Vec<P3>,
    rays: Vec<P3>,
}

fn render(n: usize, shapes: &[Shape], title: &str) -> String {
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, "<title>{title}</title>");
    let _ = writeln!(svg, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    for s in shapes {
        let mut pts: Vec<(f64, f64)> = s.points.iter().map(|&p| screen(p, n)).collect();
        for &r in &s.rays {
            for &p in &s.points {
                pts.push(screen(add(p, unit(r), RAY_LENGTH), n));
            }
        }
        let h = hull(pts);
        let d: Vec<String> = h
            .iter()
            .enumerate()
            .map(|(i, (x, y))| format!("{}{x:.2} {y:.2}", if i == 0 { "M" } else { "L" }))
            .collect();
        match h.len() {
            1 => {
                let _ = writeln!(
                    svg,
                    r##"<circle class="cell" cx="{:.2}" cy="{:.2}" r="3" fill="#1f4e79"/>"##,
                    h[0].0, h[0].1
                );
            }
            2 => {
                let _ = writeln!(
                    svg,
                    r##"<path class="cell" d="{}" stroke="#1f4e79" stroke-width="2" fill="none"/>"##,
                    d.join(" ")
                );
            }
            _ => {
                let _ = writeln!(
                    svg,
                    r##"<path class="cell" d="{} Z" stroke="#1f4e79" stroke-width="1" fill="#9dc3e6" fill-opacity="0.5"/>"##,
                    d.join(" ")
                );
            }
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn check_n(n: usize) -> anyhow::Result<()> {
    if !(2..=4).contains(&n) {
        bail!("cannot draw a fan in R^{n}/R(1,…,1); need 2 ≤ n ≤ 4");
    }
    Ok(())
}

fn floats(v: &[Rational]) -> Vec<f64> {
    v.iter().map(to_f64).collect()
}

/// Maximal cones of the Bergman fan, each assembled from the flag cones
/// whose interior points select the same face.
pub fn bergman_svg(m: &Matroid) -> anyhow::Result<String> {
    check_n(m.n())?;
    if !m.is_loopless() {
        bail!("a matroid with loops has an empty Bergman fan");
    }
    if m.rank() > 3 {
        bail!("Bergman fan of dimension {} cannot be drawn", m.rank() - 1);
    }
    let mut groups: BTreeMap<Vec<Vec<usize>>, Vec<Vec<i64>>> = BTreeMap::new();
    for chain in flag_cones(m) {
        let mut w = vec![int(0); m.n()];
        for f in &chain {
            for e in f.iter() {
                w[e] += int(1);
            }
        }
        let face = face_matroid(m, &w)?;
        let key = face.matroid.bases().iter().map(|b| b.one_indexed()).collect();
        let rays = groups.entry(key).or_default();
        for f in &chain {
            let r = f.indicator(m.n());
            if !rays.contains(&r) {
                rays.push(r);
            }
        }
    }
    let shapes: Vec<Shape> = groups
        .values()
        .map(|rays| Shape {
            points: vec![[0.0; 3]],
            rays: rays.iter().map(|r| embed(&r.iter().map(|&x| x as f64).collect::<Vec<_>>())).collect(),
        })
        .collect();
    Ok(render(m.n(), &shapes, "Bergman fan"))
}

pub fn curve_svg(f: &TropicalCurveFan) -> anyhow::Result<String> {
    check_n(f.n)?;
    let shapes: Vec<Shape> = f
        .rays
        .iter()
        .map(|r| Shape {
            points: vec![[0.0; 3]],
            rays: vec![embed(&r.vec.iter().map(|&x| x as f64).collect::<Vec<_>>())],
        })
        .collect();
    Ok(render(f.n, &shapes, "tropical curve"))
}

pub fn complex_svg(c: &Complex) -> anyhow::Result<String> {
    check_n(c.n)?;
    let mut shapes = Vec::new();
    for cell in &c.cells {
        if cell.points.is_empty() {
            bail!("every cell needs at least one point");
        }
        if cell.points.iter().chain(&cell.rays).any(|v| v.0.len() != c.n) {
            bail!("cell coordinates must have length {}", c.n);
        }
        shapes.push(Shape {
            points: cell.points.iter().map(|p| embed(&floats(&p.0))).collect(),
            rays: cell.rays.iter().map(|r| embed(&floats(&r.0))).collect(),
        });
    }
    Ok(render(c.n, &shapes, "polyhedral complex"))
}
