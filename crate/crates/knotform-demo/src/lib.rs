//! Browser bindings. Every function takes diagram text (PD or XRL) and
//! returns a JSON string; errors come back as `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use knotform::builtins;
use knotform::coloring::{count_by_rank, enumerate_finite, solve_colorings, FiniteQuandle};
use knotform::exact_algebra::{Field, QuotRing};
use knotform::knot_diagram::{parse_diagram, print_xrl, KnotDiagram};
use knotform::pairing_engine::blanchfield;
use knotform::representation::ArcRepresentation;
use knotform::twisted_alexander::twisted_delta;

const GUARD: u128 = 5_000_000;

fn diagram(text: &str) -> Result<KnotDiagram, String> {
    parse_diagram(text).map_err(|e| e.to_string())
}

fn wrap(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

/// XRL text of a builtin diagram such as `trefoil` or `torus:2,5`.
#[wasm_bindgen]
pub fn builtin_diagram(name: &str) -> String {
    wrap(builtins::diagram(name).map(|(d, _)| json!({ "text": print_xrl(&d) })).map_err(|e| e.to_string()))
}

pub fn alexander_value(text: &str) -> Result<Value, String> {
    let d = diagram(text)?;
    let rep = ArcRepresentation::abelian(&d, &Field::rationals());
    let td = twisted_delta(&d, &rep).map_err(|e| e.to_string())?;
    let roots = QuotRing::from_poly(&td.polynomial).map_err(|e| e.to_string())?.roots();
    Ok(json!({
        "crossings": d.crossings().len(),
        "writhe": d.writhe(),
        "polynomial": td.polynomial.to_string(),
        "reciprocal": td.reciprocal().map(|(a, n)| json!({ "a": a.to_string(), "N": n })),
        "roots": roots.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>(),
    }))
}

/// Alexander polynomial with its reciprocality certificate and roots.
#[wasm_bindgen]
pub fn alexander(text: &str) -> String {
    wrap(alexander_value(text))
}

pub fn blanchfield_value(text: &str) -> Result<Value, String> {
    let d = diagram(text)?;
    let rep = ArcRepresentation::abelian(&d, &Field::rationals());
    let td = twisted_delta(&d, &rep).map_err(|e| e.to_string())?;
    let ring = QuotRing::from_poly(&td.polynomial).map_err(|e| e.to_string())?;
    let m = solve_colorings(&d, &rep, &ring).map_err(|e| e.to_string())?;
    let g = blanchfield(&d, &rep, m.basis()).map_err(|e| e.to_string())?;
    let n = g.dim();
    let rows: Vec<Vec<String>> = (0..n).map(|i| (0..n).map(|j| g.matrix.get(i, j).to_string()).collect()).collect();
    Ok(json!({
        "modulus": ring.modulus().to_string(),
        "rank": m.rank(),
        "gram": rows,
        "hermitian": g.is_hermitian().map_err(|e| e.to_string())?,
    }))
}

/// Blanchfield Gram matrix on the reduced coloring basis.
#[wasm_bindgen]
pub fn blanchfield_gram(text: &str) -> String {
    wrap(blanchfield_value(text))
}

pub fn colorings_value(text: &str, p: u32, t: u32) -> Result<Value, String> {
    let d = diagram(text)?;
    let rep = ArcRepresentation::abelian(&d, &Field::rationals());
    let q = FiniteQuandle::new(p as u64, t as u64).map_err(|e| e.to_string())?;
    let by_rank = count_by_rank(&d, &rep, q.clone()).map_err(|e| e.to_string())?;
    let exhaustive = enumerate_finite(&d, &rep, q, GUARD).map_err(|e| e.to_string())?;
    Ok(json!({ "by_rank": by_rank.to_string(), "exhaustive": exhaustive.to_string() }))
}

/// Colorings by the Alexander quandle `F_p` with `x ⊳ y = tx + (1 − t)y`,
/// counted by linear algebra and by enumeration.
#[wasm_bindgen]
pub fn quandle_colorings(text: &str, p: u32, t: u32) -> String {
    wrap(colorings_value(text, p, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(s: &str, k: &str) -> Value {
        serde_json::from_str::<Value>(s).unwrap()[k].clone()
    }

    #[test]
    fn round_trip_through_builtin_text() {
        let text = field(&builtin_diagram("fig8"), "text");
        let a = alexander(text.as_str().unwrap());
        assert_eq!(field(&a, "polynomial"), "t^2 - 3*t + 1");
    }

    #[test]
    fn trefoil_operations() {
        let pd = "PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]";
        assert_eq!(field(&blanchfield_gram(pd), "rank"), 1);
        let c = quandle_colorings(pd, 7, 3);
        assert_eq!(field(&c, "by_rank"), "49");
        assert_eq!(field(&c, "exhaustive"), "49");
    }

    #[test]
    fn errors_are_reported() {
        assert!(field(&alexander("garbage"), "error").is_string());
        assert!(field(&builtin_diagram("nope"), "error").is_string());
        assert!(field(&quandle_colorings("a < a -> a : +", 8, 3), "error").is_string());
    }
}
