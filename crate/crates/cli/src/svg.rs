//! Deterministic SVG rendering of 2-dimensional windows. Cells are drawn in
//! canonical id order, clipped to the window, with dimension-dependent
//! styling; output is stable so figures diff cleanly.

use num_traits::ToPrimitive;

use polyfan::lazy::{MaterializedCell, Window};
use polyfan::num::Scalar;
use polyfan::Polyhedron;

use crate::schema::SchemaError;

const CANVAS: f64 = 640.0;
const MARGIN: f64 = 20.0;

fn approx(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

/// Renders the cells of a 2-D window to an SVG document string.
pub fn render_window(
    cells: &[MaterializedCell],
    window: &Window,
    plane: Option<(usize, usize)>,
) -> Result<String, SchemaError> {
    let dim = window.region().ambient_dim();
    let (ax, ay) = match (dim, plane) {
        (2, None) => (0usize, 1usize),
        (_, Some((i, j))) if i < dim && j < dim && i != j => (i, j),
        (2, Some(_)) | (_, None) => {
            if dim != 2 {
                return Err(SchemaError::Invalid {
                    path: "render".into(),
                    message: format!("ambient dimension {dim} needs --plane i,j"),
                });
            }
            (0, 1)
        }
        _ => {
            return Err(SchemaError::Invalid {
                path: "render".into(),
                message: "plane axes out of range".into(),
            })
        }
    };

    // window extent in the drawing plane
    let verts = window.region().vertices();
    let min_x = verts.iter().map(|v| approx(&v[ax])).fold(f64::INFINITY, f64::min);
    let max_x = verts.iter().map(|v| approx(&v[ax])).fold(f64::NEG_INFINITY, f64::max);
    let min_y = verts.iter().map(|v| approx(&v[ay])).fold(f64::INFINITY, f64::min);
    let max_y = verts.iter().map(|v| approx(&v[ay])).fold(f64::NEG_INFINITY, f64::max);
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let scale = (CANVAS - 2.0 * MARGIN) / span;
    let tx = |x: f64| MARGIN + (x - min_x) * scale;
    let ty = |y: f64| CANVAS - MARGIN - (y - min_y) * scale;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
        CANVAS
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // polygons first, then edges, then vertices: deterministic cell order
    for pass in 0..3 {
        for cell in cells {
            let Some(clip) = cell.geometry.intersect(window.region()) else {
                continue;
            };
            let d = clip.dim();
            if (pass == 0 && d < 2) || (pass == 1 && d != 1) || (pass == 2 && d != 0) {
                continue;
            }
            match d {
                2.. => {
                    let pts = polygon_path(&clip, ax, ay);
                    if pts.len() >= 3 {
                        out.push_str("<polygon points=\"");
                        for (x, y) in &pts {
                            out.push_str(&format!("{:.3},{:.3} ", tx(*x), ty(*y)));
                        }
                        out.push_str("\" fill=\"#e8eef7\" stroke=\"none\"/>\n");
                    }
                }
                1 => {
                    let pts = polygon_path(&clip, ax, ay);
                    if pts.len() >= 2 {
                        out.push_str(&format!(
                            "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#38516e\" stroke-width=\"1.5\"/>\n",
                            tx(pts[0].0), ty(pts[0].1), tx(pts[1].0), ty(pts[1].1)
                        ));
                    }
                }
                0 => {
                    let v = &clip.vertices()[0];
                    out.push_str(&format!(
                        "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"2.5\" fill=\"#16263c\"/>\n",
                        tx(approx(&v[ax])),
                        ty(approx(&v[ay]))
                    ));
                }
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Vertices of a clipped cell projected to the drawing plane, in angular
/// order around their centroid.
fn polygon_path(p: &Polyhedron, ax: usize, ay: usize) -> Vec<(f64, f64)> {
    let verts = p.vertices();
    let mut pts: Vec<(f64, f64)> = verts
        .iter()
        .map(|v| (approx(&v[ax]), approx(&v[ay])))
        .collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cx = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
    let cy = pts.iter().map(|p| p.1).sum::<f64>() / pts.len() as f64;
    pts.sort_by(|a, b| {
        let aa = (a.1 - cy).atan2(a.0 - cx);
        let bb = (b.1 - cy).atan2(b.0 - cx);
        aa.partial_cmp(&bb).unwrap()
    });
    pts
}
