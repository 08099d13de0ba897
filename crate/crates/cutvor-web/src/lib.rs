//! Browser bindings for the tiling demo. Every export takes and returns plain
//! strings so the page needs no glue beyond what wasm-bindgen generates.

use std::cell::RefCell;

use cutvor::io::{FacePosetExport, GraphFile};
use cutvor::rational::{format_rational, frac};
use cutvor::tiling::{render_svg, MixedTiling, TileLocator, TilingEnumeration, Twist};
use cutvor::voronoi::{face_poset, orientation_correspondence};
use cutvor::{Cochain0, LengthFunction, Multigraph};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Pixels per unit of the plane spanned by the zero-sum vectors on three vertices.
const SCALE: f64 = 100.0;
/// Clicked points are rounded to this denominator before the exact test.
const CLICK_DENOMINATOR: i64 = 600;

struct Cached {
    key: (Vec<i64>, Vec<i64>),
    tiling: MixedTiling,
    enumeration: TilingEnumeration,
}

thread_local! {
    static LAST: RefCell<Option<Cached>> = const { RefCell::new(None) };
}

fn integers(text: &str, what: &str) -> Result<Vec<i64>, String> {
    let values: Result<Vec<i64>, _> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect();
    match values {
        Ok(v) if v.len() == 3 => Ok(v),
        Ok(v) => Err(format!("{what}: expected 3 integers, got {}", v.len())),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

fn triangle() -> Multigraph {
    Multigraph::new(3, &[(0, 1), (0, 2), (1, 2)]).expect("triangle is connected")
}

/// Runs `body` on the tiling of the triangle with the given lengths and twist,
/// reusing the enumeration from the previous call when the parameters repeat.
fn with_tiling<T>(
    lengths: &str,
    twist: &str,
    body: impl FnOnce(&MixedTiling, &TilingEnumeration) -> Result<T, String>,
) -> Result<T, String> {
    let key = (integers(lengths, "lengths")?, integers(twist, "twist")?);
    LAST.with(|slot| {
        let mut slot = slot.borrow_mut();
        if slot.as_ref().map(|c| &c.key) != Some(&key) {
            let g = triangle();
            let l = LengthFunction::new(&g, key.0.clone()).map_err(|e| e.to_string())?;
            let m = Twist::new(&g, key.1.clone()).map_err(|e| e.to_string())?;
            let tiling = MixedTiling::new(g, l, m).map_err(|e| e.to_string())?;
            let enumeration = tiling.enumerate_tiling().map_err(|e| e.to_string())?;
            *slot = Some(Cached {
                key,
                tiling,
                enumeration,
            });
        }
        let cached = slot.as_ref().expect("filled above");
        body(&cached.tiling, &cached.enumeration)
    })
}

/// SVG of the tiling of the triangle graph; `lengths` and `twist` are three
/// comma-separated integers for the edges 01, 02, 12.
#[wasm_bindgen]
pub fn render_tiling(lengths: &str, twist: &str) -> Result<String, String> {
    with_tiling(lengths, twist, |t, e| {
        render_svg(t, e).map_err(|e| e.to_string())
    })
}

/// Inverts the drawing projection: SVG user coordinates to a zero-sum point
/// with denominator `CLICK_DENOMINATOR`.
fn point_from_svg(x: f64, y: f64) -> Cochain0 {
    let (u, v) = (x / SCALE, -y / SCALE);
    let round = |z: f64| (z * CLICK_DENOMINATOR as f64).round() as i64;
    let p2 = round(-(6f64.sqrt()) * v / 3.0);
    let p0 = round((2f64.sqrt() * u) / 2.0 + (6f64.sqrt()) * v / 6.0);
    let p1 = -p0 - p2;
    Cochain0 {
        values: [p0, p1, p2]
            .iter()
            .map(|&a| frac(a, CLICK_DENOMINATOR))
            .collect(),
    }
}

/// Tiles containing the point under the cursor, as JSON.
#[wasm_bindgen]
pub fn locate_point(lengths: &str, twist: &str, x: f64, y: f64) -> Result<String, String> {
    with_tiling(lengths, twist, |t, e| {
        let p = point_from_svg(x, y);
        let locator = TileLocator::new(t, e.descriptors()).map_err(|e| e.to_string())?;
        let hits = locator.locate(&p).map_err(|e| e.to_string())?;
        let tiles: Vec<_> = hits
            .iter()
            .map(|hit| {
                let tile = &locator.tiles()[hit.tile];
                json!({
                    "f": tile.f,
                    "dm": tile.dm.values.iter().map(format_rational).collect::<Vec<_>>(),
                    "subgraph": tile.subgraph_edges(),
                    "shift": hit.shift,
                })
            })
            .collect();
        let point: Vec<String> = p.values.iter().map(format_rational).collect();
        Ok(json!({"point": point, "tiles": tiles}).to_string())
    })
}

/// Face counts of the Voronoi cell of a graph given in the CLI's JSON format,
/// and whether its face poset matches the coherent acyclic orientations.
#[wasm_bindgen]
pub fn face_summary(graph_json: &str) -> Result<String, String> {
    let file = GraphFile::parse(graph_json).map_err(|e| e.to_string())?;
    let g = file.graph().map_err(|e| e.to_string())?;
    let check = orientation_correspondence(&g).map_err(|e| e.to_string())?;
    let poset = FacePosetExport::new(&face_poset(&g).map_err(|e| e.to_string())?);
    Ok(json!({
        "faces": check.faces,
        "orientations": check.cac,
        "isomorphic": check.isomorphic,
        "f_vector": check.f_vector,
        "covers": poset.covers.len(),
    })
    .to_string())
}
