//! SVG drawings of arrangements in `R^3`, viewed in the plane through
//! `(v1, v2, v3) -> (v1 - v3, v2 - v3)`.
//!
//! Each hyperplane is drawn as the three rays leaving its apex along the
//! boundaries between pairs of sectors. Bounded cells are shaded, vertices
//! of the complex are marked and apexes are labelled by column. Output is a
//! pure function of the arrangement and the viewport.

use std::fmt::Write as _;
use std::str::FromStr;

use tropical_complex::complex::enumerate_types;
use tropical_complex::tropical::project_to_plane;
use tropical_complex::{Arrangement, Point, TypeCell};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl FromStr for Viewport {
    type Err = CliError;

    /// `XMIN,XMAX,YMIN,YMAX`
    fn from_str(s: &str) -> Result<Self, CliError> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::Parse(format!("viewport {s:?}: expected four numbers")))?;
        let [xmin, xmax, ymin, ymax] = parts[..] else {
            return Err(CliError::Parse(format!(
                "viewport {s:?}: expected four numbers"
            )));
        };
        if !(xmin < xmax && ymin < ymax) || parts.iter().any(|v| !v.is_finite()) {
            return Err(CliError::Parse(format!(
                "viewport {s:?}: empty or non-finite range"
            )));
        }
        Ok(Viewport {
            xmin,
            xmax,
            ymin,
            ymax,
        })
    }
}

type Xy = (f64, f64);

fn planar(p: &Point) -> Xy {
    let q = project_to_plane(p).expect("n = 3");
    (q[0].to_f64(), q[1].to_f64())
}

fn num(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

/// Direction of the boundary between sectors `i` and `k` of a min-plus
/// hyperplane: on it `x_i - a_i = x_k - a_k <= x_l - a_l` for the other
/// coordinates, so moving away from the apex raises exactly those.
fn boundary_direction(n: usize, i: usize, k: usize) -> Point {
    Point::from_integers(
        &(0..n)
            .map(|l| i64::from(l != i && l != k))
            .collect::<Vec<_>>(),
    )
}

struct Scene {
    apexes: Vec<Xy>,
    rays: Vec<(Xy, Xy)>,
    vertices: Vec<Xy>,
    edges: Vec<(Xy, Xy)>,
    polygons: Vec<Vec<Xy>>,
}

fn build_scene(arr: &Arrangement) -> Result<Scene, CliError> {
    let poset = enumerate_types(arr)?;
    let position = |cell: &TypeCell| -> Xy {
        let x = arr
            .realizing_point(cell.type_matrix())
            .expect("shape checked")
            .expect("enumerated types are realized");
        planar(&x)
    };

    let apexes: Vec<Xy> = (0..arr.cols()).map(|j| planar(&arr.column(j))).collect();
    let mut rays = Vec::new();
    for &apex in &apexes {
        for i in 0..3 {
            for k in i + 1..3 {
                let dir = planar(&boundary_direction(3, i, k));
                rays.push((apex, dir));
            }
        }
    }

    let vertex_cells: Vec<&TypeCell> = poset
        .cells()
        .iter()
        .filter(|c| c.dimension() == 0)
        .collect();
    let vertices: Vec<Xy> = vertex_cells.iter().map(|c| position(c)).collect();
    let corners = |cell: &TypeCell| -> Vec<Xy> {
        vertex_cells
            .iter()
            .zip(&vertices)
            .filter(|(v, _)| cell.type_matrix().leq(v.type_matrix()).unwrap_or(false))
            .map(|(_, xy)| *xy)
            .collect()
    };

    let mut edges = Vec::new();
    let mut polygons = Vec::new();
    for cell in poset.cells().iter().filter(|c| c.is_bounded()) {
        match cell.dimension() {
            1 => {
                let ends = corners(cell);
                if let [a, b] = ends[..] {
                    edges.push((a, b));
                }
            }
            2 => {
                let mut pts = corners(cell);
                let (cx, cy) = pts.iter().fold((0.0, 0.0), |(x, y), p| (x + p.0, y + p.1));
                let (cx, cy) = (cx / pts.len() as f64, cy / pts.len() as f64);
                pts.sort_by(|a, b| {
                    let ta = (a.1 - cy).atan2(a.0 - cx);
                    let tb = (b.1 - cy).atan2(b.0 - cx);
                    ta.total_cmp(&tb)
                });
                polygons.push(pts);
            }
            _ => {}
        }
    }
    Ok(Scene {
        apexes,
        rays,
        vertices,
        edges,
        polygons,
    })
}

fn default_viewport(scene: &Scene) -> Viewport {
    let pts = scene.apexes.iter().chain(&scene.vertices);
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in pts {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let span = (xmax - xmin).max(ymax - ymin).max(1.0);
    let margin = 0.25 * span;
    Viewport {
        xmin: xmin - margin,
        xmax: xmax + margin,
        ymin: ymin - margin,
        ymax: ymax + margin,
    }
}

/// Renders an arrangement of `R^3` as SVG 1.1.
pub fn render_svg(arr: &Arrangement, viewport: Option<Viewport>) -> Result<String, CliError> {
    if arr.rows() != 3 {
        return Err(CliError::UnsupportedRender(arr.rows()));
    }
    let scene = build_scene(arr)?;
    let vp = viewport.unwrap_or_else(|| default_viewport(&scene));
    let (w, h) = (vp.xmax - vp.xmin, vp.ymax - vp.ymin);
    let pixel_w = 640.0;
    let pixel_h = (pixel_w * h / w).round().max(1.0);
    let unit = w / 320.0;
    // svg y grows downwards
    let sx = |p: Xy| (num(p.0), num(-p.1));
    let diagonal = (w * w + h * h).sqrt();
    let centre = ((vp.xmin + vp.xmax) / 2.0, (vp.ymin + vp.ymax) / 2.0);

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        num(pixel_w),
        num(pixel_h),
        num(vp.xmin),
        num(-vp.ymax),
        num(w),
        num(h)
    );
    let _ = writeln!(
        svg,
        r#"<defs><clipPath id="view"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath></defs>"#,
        num(vp.xmin),
        num(-vp.ymax),
        num(w),
        num(h)
    );
    let _ = writeln!(
        svg,
        r##"<rect x="{}" y="{}" width="{}" height="{}" fill="#ffffff"/>"##,
        num(vp.xmin),
        num(-vp.ymax),
        num(w),
        num(h)
    );
    let _ = writeln!(svg, r#"<g clip-path="url(#view)">"#);

    let _ = writeln!(svg, r##"<g fill="#c9d6e8" stroke="none">"##);
    for poly in &scene.polygons {
        let pts: Vec<String> = poly
            .iter()
            .map(|&p| {
                let (x, y) = sx(p);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            svg,
            r#"<polygon class="cell bounded" points="{}"/>"#,
            pts.join(" ")
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r##"<g stroke="#333333" stroke-width="{}" fill="none">"##,
        num(unit)
    );
    for &(apex, dir) in &scene.rays {
        let norm = (dir.0 * dir.0 + dir.1 * dir.1).sqrt();
        // long enough to leave the viewport wherever the apex sits
        let reach = diagonal + (apex.0 - centre.0).hypot(apex.1 - centre.1);
        let end = (apex.0 + reach * dir.0 / norm, apex.1 + reach * dir.1 / norm);
        let ((x1, y1), (x2, y2)) = (sx(apex), sx(end));
        let _ = writeln!(
            svg,
            r#"<line class="ray" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r##"<g stroke="#1f4e8c" stroke-width="{}" fill="none">"##,
        num(2.5 * unit)
    );
    for &(a, b) in &scene.edges {
        let ((x1, y1), (x2, y2)) = (sx(a), sx(b));
        let _ = writeln!(
            svg,
            r#"<line class="edge bounded" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r##"<g fill="#1f4e8c">"##);
    for &v in &scene.vertices {
        let (x, y) = sx(v);
        let _ = writeln!(
            svg,
            r#"<circle class="vertex" cx="{x}" cy="{y}" r="{}"/>"#,
            num(3.0 * unit)
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r##"<g fill="#b22222" font-family="sans-serif" font-size="{}">"##,
        num(14.0 * unit)
    );
    for (j, &a) in scene.apexes.iter().enumerate() {
        let (x, y) = sx(a);
        let _ = writeln!(
            svg,
            r#"<circle class="apex" cx="{x}" cy="{y}" r="{}"/>"#,
            num(4.5 * unit)
        );
        let (lx, ly) = sx((a.0 + 6.0 * unit, a.1 + 6.0 * unit));
        let _ = writeln!(
            svg,
            r#"<text class="apex-label" x="{lx}" y="{ly}">{}</text>"#,
            j + 1
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}
