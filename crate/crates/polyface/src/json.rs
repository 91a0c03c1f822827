//! Exact JSON formats for sets, sequences and certificates.
//!
//! Rationals travel as strings `"p/q"` (or `"p"` when integral) so that
//! parse ∘ serialize is the identity. Set format:
//!
//! ```json
//! {"type":"hset","dim":2,
//!  "ineqs":[{"a":["0","-1"],"b":"0","strict":false}],
//!  "eqs":[{"e":["1","1"],"f":"1"}]}
//! {"type":"vset","dim":2,"points":[["0","0"],["1","0"]],"rays":[]}
//! ```
//!
//! Finitely supported sequences: `{"support":[[1,"1"],[2,"1/2"]]}`.

use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::closure::SeparationCertificate;
use crate::error::{Error, Result};
use crate::exactla::{LinearSystem, Vector};
use crate::polyset::{ConvexSet, HSet, VSet};
use crate::seqgallery::{FinSeq, Gallery, Witness};
use crate::{QSeq, QSet, QVec, Rat};

fn format_err(context: &str) -> Error {
    Error::Format(context.to_string())
}

pub fn rat_to_value(r: &Rat) -> Value {
    Value::String(r.to_string())
}

pub fn rat_from_value(v: &Value) -> Result<Rat> {
    let s = v
        .as_str()
        .ok_or_else(|| format_err("rational must be a string like \"p/q\" or \"p\""))?;
    Rat::from_str(s.trim()).map_err(|_| Error::Format(format!("bad rational literal {s:?}")))
}

pub fn vector_to_value(v: &QVec) -> Value {
    Value::Array(v.iter().map(rat_to_value).collect())
}

pub fn vector_from_value(v: &Value, dim: usize) -> Result<QVec> {
    let arr = v
        .as_array()
        .ok_or_else(|| format_err("vector must be an array of rationals"))?;
    if arr.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: arr.len(),
        });
    }
    Ok(Vector::new(
        arr.iter().map(rat_from_value).collect::<Result<Vec<_>>>()?,
    ))
}

pub fn set_to_value(set: &QSet) -> Value {
    match set {
        ConvexSet::H(h) => {
            let sys = h.system();
            let mut ineqs = Vec::new();
            for row in &sys.weak {
                ineqs.push(json!({
                    "a": vector_to_value(&row.coeffs),
                    "b": rat_to_value(&row.rhs),
                    "strict": false,
                }));
            }
            for row in &sys.strict {
                ineqs.push(json!({
                    "a": vector_to_value(&row.coeffs),
                    "b": rat_to_value(&row.rhs),
                    "strict": true,
                }));
            }
            let eqs: Vec<Value> = sys
                .eqs
                .iter()
                .map(|row| {
                    json!({
                        "e": vector_to_value(&row.coeffs),
                        "f": rat_to_value(&row.rhs),
                    })
                })
                .collect();
            json!({"type": "hset", "dim": sys.dim, "ineqs": ineqs, "eqs": eqs})
        }
        ConvexSet::V(v) => {
            let points: Vec<Value> = v.points().iter().map(vector_to_value).collect();
            let rays: Vec<Value> = v.rays().iter().map(vector_to_value).collect();
            json!({"type": "vset", "dim": v.dim(), "points": points, "rays": rays})
        }
    }
}

pub fn set_from_value(value: &Value) -> Result<QSet> {
    let obj = value
        .as_object()
        .ok_or_else(|| format_err("set must be a JSON object"))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| format_err("set needs a positive integer field \"dim\""))?
        as usize;
    if dim == 0 {
        return Err(format_err("set dimension must be at least 1"));
    }
    match obj.get("type").and_then(Value::as_str) {
        Some("hset") => hset_from_obj(obj, dim),
        Some("vset") => vset_from_obj(obj, dim),
        _ => Err(format_err("field \"type\" must be \"hset\" or \"vset\"")),
    }
}

fn hset_from_obj(obj: &Map<String, Value>, dim: usize) -> Result<QSet> {
    let mut sys = LinearSystem::new(dim);
    if let Some(ineqs) = obj.get("ineqs") {
        let arr = ineqs
            .as_array()
            .ok_or_else(|| format_err("\"ineqs\" must be an array"))?;
        for row in arr {
            let item = row
                .as_object()
                .ok_or_else(|| format_err("inequality rows are objects with \"a\" and \"b\""))?;
            let a = vector_from_value(
                item.get("a")
                    .ok_or_else(|| format_err("row missing \"a\""))?,
                dim,
            )?;
            let b = rat_from_value(
                item.get("b")
                    .ok_or_else(|| format_err("row missing \"b\""))?,
            )?;
            let strict = item.get("strict").and_then(Value::as_bool).unwrap_or(false);
            if strict {
                sys.push_strict(a, b);
            } else {
                sys.push_weak(a, b);
            }
        }
    }
    if let Some(eqs) = obj.get("eqs") {
        let arr = eqs
            .as_array()
            .ok_or_else(|| format_err("\"eqs\" must be an array"))?;
        for row in arr {
            let item = row
                .as_object()
                .ok_or_else(|| format_err("equation rows are objects with \"e\" and \"f\""))?;
            let e = vector_from_value(
                item.get("e")
                    .ok_or_else(|| format_err("row missing \"e\""))?,
                dim,
            )?;
            let f = rat_from_value(
                item.get("f")
                    .ok_or_else(|| format_err("row missing \"f\""))?,
            )?;
            sys.push_eq(e, f);
        }
    }
    Ok(ConvexSet::H(HSet::new(sys)))
}

fn vset_from_obj(obj: &Map<String, Value>, dim: usize) -> Result<QSet> {
    let points = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| format_err("vset needs an array field \"points\""))?;
    if points.is_empty() {
        return Err(format_err("vset needs at least one point"));
    }
    let points = points
        .iter()
        .map(|p| vector_from_value(p, dim))
        .collect::<Result<Vec<_>>>()?;
    let rays = match obj.get("rays") {
        None => Vec::new(),
        Some(r) => r
            .as_array()
            .ok_or_else(|| format_err("\"rays\" must be an array"))?
            .iter()
            .map(|r| vector_from_value(r, dim))
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(ConvexSet::V(VSet::new(dim, points, rays)))
}

pub fn finseq_to_value(x: &QSeq) -> Value {
    let support: Vec<Value> = x
        .support()
        .iter()
        .map(|(i, v)| json!([i, v.to_string()]))
        .collect();
    json!({ "support": support })
}

pub fn finseq_from_value(value: &Value) -> Result<QSeq> {
    let arr = value
        .as_object()
        .and_then(|o| o.get("support"))
        .and_then(Value::as_array)
        .ok_or_else(|| format_err("sequence must be {\"support\":[[index,\"p/q\"],…]}"))?;
    let mut pairs = Vec::new();
    for item in arr {
        let pair = item
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| format_err("support entries are [index, value] pairs"))?;
        let index = pair[0]
            .as_u64()
            .filter(|&i| i >= 1)
            .ok_or_else(|| format_err("support indices are positive integers"))?
            as usize;
        pairs.push((index, rat_from_value(&pair[1])?));
    }
    Ok(FinSeq::new(pairs))
}

pub fn certificate_to_value(cert: &SeparationCertificate<Rat>) -> Value {
    json!({
        "phi": vector_to_value(&cert.phi),
        "alpha": rat_to_value(&cert.alpha),
        "witness": {
            "a": vector_to_value(&cert.witness.0),
            "b": vector_to_value(&cert.witness.1),
        }
    })
}

pub fn certificate_from_value(value: &Value) -> Result<SeparationCertificate<Rat>> {
    let obj = value
        .as_object()
        .ok_or_else(|| format_err("certificate must be an object"))?;
    let phi_arr = obj
        .get("phi")
        .and_then(Value::as_array)
        .ok_or_else(|| format_err("certificate needs \"phi\""))?;
    let dim = phi_arr.len();
    let phi = vector_from_value(obj.get("phi").expect("present"), dim)?;
    let alpha = rat_from_value(
        obj.get("alpha")
            .ok_or_else(|| format_err("certificate needs \"alpha\""))?,
    )?;
    let witness = obj
        .get("witness")
        .and_then(Value::as_object)
        .ok_or_else(|| format_err("certificate needs \"witness\""))?;
    let a = vector_from_value(
        witness
            .get("a")
            .ok_or_else(|| format_err("witness needs \"a\""))?,
        dim,
    )?;
    let b = vector_from_value(
        witness
            .get("b")
            .ok_or_else(|| format_err("witness needs \"b\""))?,
        dim,
    )?;
    Ok(SeparationCertificate {
        phi,
        alpha,
        witness: (a, b),
    })
}

pub fn witness_to_value(witness: &Witness<Rat>) -> Value {
    match witness {
        Witness::EmptyIcr {
            gallery,
            x,
            y,
            cert_index,
        } => json!({
            "kind": "empty-icr",
            "gallery": match gallery { Gallery::Box => "box", Gallery::Ubiquitous => "ubiquitous" },
            "x": finseq_to_value(x),
            "y": finseq_to_value(y),
            "cert_index": cert_index,
            "verified": witness.verify(),
        }),
        Witness::LinMember { y, u } => json!({
            "kind": "lin-member",
            "y": finseq_to_value(y),
            "u": finseq_to_value(u),
            "verified": witness.verify(),
        }),
        Witness::ChainGap { index, chain } => json!({
            "kind": "chain-gap",
            "index": index,
            "chain": chain.iter().map(|c| c.iter().copied().collect::<Vec<_>>()).collect::<Vec<_>>(),
            "verified": witness.verify(),
        }),
    }
}
