//! SVG drawing of a tiling on three vertices.

use std::fmt::Write as _;

use super::locate::unit_vertex;
use super::{MixedTiling, TilingEnumeration};
use crate::cochain::Cochain0;
use crate::error::{Error, Result};

const SCALE: f64 = 100.0;
const PALETTE: [&str; 8] = [
    "#d9d9d9", "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69",
];

/// Orthonormal coordinates of the plane x + y + z = 0.
fn project(p: &Cochain0) -> (f64, f64) {
    let c: Vec<f64> = p
        .values
        .iter()
        .map(|x| *x.numer() as f64 / *x.denom() as f64)
        .collect();
    let x = (c[0] - c[1]) / 2f64.sqrt();
    let y = (c[0] + c[1] - 2.0 * c[2]) / 6f64.sqrt();
    (x * SCALE, -y * SCALE)
}

fn polygon(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let cx = points.iter().map(|p| p.0).sum::<f64>() / points.len() as f64;
    let cy = points.iter().map(|p| p.1).sum::<f64>() / points.len() as f64;
    let mut out = points.to_vec();
    out.sort_by(|a, b| {
        let ta = (a.1 - cy).atan2(a.0 - cx);
        let tb = (b.1 - cy).atan2(b.0 - cx);
        ta.total_cmp(&tb)
    });
    out
}

fn path(points: &[(f64, f64)]) -> String {
    points
        .iter()
        .map(|(x, y)| format!("{x:.3},{y:.3}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The tiles of one fundamental domain and their eight neighbouring translates.
pub fn render_svg(tiling: &MixedTiling, enumeration: &TilingEnumeration) -> Result<String> {
    let n = tiling.graph().vertex_count();
    if n != 3 {
        return Err(Error::Invalid(format!(
            "rendering needs exactly 3 vertices, got {n}"
        )));
    }
    let mut shapes = Vec::new();
    for class in &enumeration.tiles {
        let verts: Vec<Cochain0> = tiling
            .tile_vertices(&class.tile.f)?
            .into_iter()
            .map(|(_, p)| p)
            .collect();
        let mask: usize = class
            .tile
            .subgraph
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(e, _)| 1 << e)
            .sum();
        for a in -1..=1 {
            for b in -1..=1 {
                let shift = tiling.period_translation(&[0, a, b]);
                let pts: Vec<(f64, f64)> = verts.iter().map(|v| project(&(v + &shift))).collect();
                let colour = PALETTE[mask % PALETTE.len()];
                let faded = a != 0 || b != 0;
                shapes.push((polygon(&pts), colour, faded, class.tile.key()));
            }
        }
    }
    let origin = project(&Cochain0::zeros(3));
    let b1 = project(&tiling.period_translation(&unit_vertex(3, 1)));
    let b2 = project(&tiling.period_translation(&unit_vertex(3, 2)));
    let domain = [origin, b1, (b1.0 + b2.0, b1.1 + b2.1), b2];

    let all = shapes.iter().flat_map(|s| s.0.iter()).chain(domain.iter());
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in all {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let margin = 10.0;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.3} {:.3} {:.3} {:.3}\">",
        x0 - margin,
        y0 - margin,
        x1 - x0 + 2.0 * margin,
        y1 - y0 + 2.0 * margin
    );
    for (pts, colour, faded, key) in &shapes {
        let opacity = if *faded { 0.45 } else { 1.0 };
        let _ = writeln!(
            svg,
            "  <polygon points=\"{}\" fill=\"{colour}\" fill-opacity=\"{opacity}\" stroke=\"#333\" stroke-width=\"1\"><title>{key}</title></polygon>",
            path(pts)
        );
    }
    let _ = writeln!(
        svg,
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"#c00\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>",
        path(&domain)
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}
