//! On-disk JSON form of weighted fans.
//!
//! Keys are written in sorted order without whitespace, so equal cycles
//! serialize to identical bytes.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use super::{TropicalOutput, WeightedFan};
use crate::convention::Convention;
use crate::error::{Error, Result};
use crate::fans::Cone;
use crate::linalg::lattice::IntVec;

#[derive(Serialize)]
struct CycleJson<'a> {
    ambient_dim: usize,
    convention: &'a str,
    dim: i64,
    lineality: Vec<Vec<i64>>,
    maximal_cones: &'a [Vec<usize>],
    multiplicities: &'a [u64],
    pure: bool,
    rays: Vec<Vec<i64>>,
}

fn small(vs: &[IntVec]) -> Result<Vec<Vec<i64>>> {
    vs.iter()
        .map(|v| {
            v.iter()
                .map(|x| x.to_i64().ok_or_else(|| Error::Overflow(format!("coordinate {x} does not fit in 64 bits"))))
                .collect()
        })
        .collect()
}

/// Serializes a weighted fan (pure or not).
pub fn write_json(wf: &WeightedFan) -> Result<String> {
    let doc = CycleJson {
        ambient_dim: wf.ambient_dim(),
        convention: wf.convention().as_str(),
        dim: wf.dim(),
        lineality: small(wf.fan().lineality())?,
        maximal_cones: wf.max_cones(),
        multiplicities: wf.multiplicities(),
        pure: wf.is_pure(),
        rays: small(wf.fan().rays())?,
    };
    Ok(serde_json::to_string(&doc).expect("plain data serializes"))
}

fn field<'a>(obj: &'a serde_json::Map<String, Value>, name: &str) -> Result<&'a Value> {
    obj.get(name).ok_or_else(|| Error::schema(name, "missing field"))
}

fn uint(v: &Value, path: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| Error::schema(path, "expected a nonnegative integer"))
}

fn vectors(v: &Value, name: &str, dim: usize) -> Result<Vec<IntVec>> {
    let rows = v.as_array().ok_or_else(|| Error::schema(name, "expected an array of integer arrays"))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let path = format!("{name}[{i}]");
            let entries = row.as_array().ok_or_else(|| Error::schema(&path, "expected an array of integers"))?;
            if entries.len() != dim {
                return Err(Error::schema(&path, format!("expected {dim} entries, found {}", entries.len())));
            }
            entries
                .iter()
                .enumerate()
                .map(|(j, x)| {
                    x.as_i64().map(BigInt::from).ok_or_else(|| Error::schema(format!("{path}[{j}]"), "expected an integer"))
                })
                .collect()
        })
        .collect()
}

/// Parses and validates a weighted fan.
pub fn read_json(text: &str) -> Result<TropicalOutput> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::schema("$", e.to_string()))?;
    let obj = value.as_object().ok_or_else(|| Error::schema("$", "expected an object"))?;

    let convention = match field(obj, "convention")?.as_str() {
        Some("min") => Convention::Min,
        Some("max") => Convention::Max,
        _ => return Err(Error::schema("convention", "expected \"min\" or \"max\"")),
    };
    let ambient_dim = uint(field(obj, "ambient_dim")?, "ambient_dim")? as usize;
    let rays = vectors(field(obj, "rays")?, "rays", ambient_dim)?;
    let lineality = vectors(field(obj, "lineality")?, "lineality", ambient_dim)?;
    if let Some(i) = rays.iter().position(|r| r.iter().all(|x| x == &BigInt::from(0))) {
        return Err(Error::schema(format!("rays[{i}]"), "zero ray"));
    }

    let cones_value =
        field(obj, "maximal_cones")?.as_array().ok_or_else(|| Error::schema("maximal_cones", "expected an array"))?;
    let mut cones: Vec<Cone> = Vec::with_capacity(cones_value.len());
    for (k, c) in cones_value.iter().enumerate() {
        let path = format!("maximal_cones[{k}]");
        let idx = c.as_array().ok_or_else(|| Error::schema(&path, "expected an array of ray indices"))?;
        let mut gens = Vec::with_capacity(idx.len());
        for (j, i) in idx.iter().enumerate() {
            let i = uint(i, &format!("{path}[{j}]"))? as usize;
            gens.push(rays.get(i).cloned().ok_or_else(|| Error::schema(&path, format!("ray index {i} out of range")))?);
        }
        cones.push(Cone::from_generators(ambient_dim, &gens, &lineality)?);
    }

    let mults_value =
        field(obj, "multiplicities")?.as_array().ok_or_else(|| Error::schema("multiplicities", "expected an array"))?;
    if mults_value.len() != cones.len() {
        return Err(Error::schema(
            "multiplicities",
            format!("expected {} entries (one per maximal cone), found {}", cones.len(), mults_value.len()),
        ));
    }
    let mut mults = Vec::with_capacity(mults_value.len());
    for (i, m) in mults_value.iter().enumerate() {
        let path = format!("multiplicities[{i}]");
        match m.as_u64() {
            Some(0) | None => return Err(Error::schema(path, "expected a positive integer")),
            Some(x) => mults.push(x),
        }
    }

    let count = cones.len();
    let wf = WeightedFan::from_weighted_cones(ambient_dim, cones.into_iter().zip(mults), convention)
        .map_err(|e| Error::schema("maximal_cones", e.to_string()))?;
    if wf.max_cones().len() != count {
        return Err(Error::schema("maximal_cones", "cones must be distinct and inclusion-maximal"));
    }
    let dim = field(obj, "dim")?.as_i64().ok_or_else(|| Error::schema("dim", "expected an integer"))?;
    if dim != wf.dim() {
        return Err(Error::schema("dim", format!("stated {dim} but the cones have dimension {}", wf.dim())));
    }
    let pure = field(obj, "pure")?.as_bool().ok_or_else(|| Error::schema("pure", "expected a boolean"))?;
    if pure != wf.is_pure() {
        return Err(Error::schema("pure", "flag does not match the cones"));
    }
    Ok(TropicalOutput::classify(wf))
}
