//! Manifest documents: parsing and canonical serialization.
//!
//! Numbers are written as `"p/q"` strings. On input, decimal strings,
//! JSON integers, and `[p, q]` integer pairs are accepted as well; JSON
//! numbers with a fraction or exponent are rejected because they would be
//! rounded to binary floating point before reaching the parser.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::al::{AlWeight, Band};
use crate::error::{Error, Result};
use crate::falgebra::nakano::Family;
use crate::falgebra::tensor::ProductTensor;
use crate::falgebra::weight::Weight;
use crate::operator::{IndexEntry, OperatorSpec};
use crate::scalar::{self, Rational};
use crate::space::{Element, ModelSpace, Side};
use crate::spectrum::AtomId;

pub const SCHEMA_VERSION: u64 = 1;

/// The document as read from disk, before interpretation against the space.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct RawManifest {
    schema_version: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    space: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    codomain: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    al_weight: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tensor: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    operator: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sample: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    band: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sweep: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepSpec {
    /// Every tensor on the manifest space with entries from `values`.
    Tensor { values: Vec<Rational> },
    /// Every weight in `gridⁿ` on a `FiniteSup` space.
    Identity { grid: Vec<Rational> },
    /// Every row-structured matrix between `FiniteSup` spaces.
    Hom { max_n: usize, max_m: usize, weights: Vec<Rational>, entries: Vec<Rational> },
}

/// An interpreted manifest.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Manifest {
    pub description: Option<String>,
    pub space: Option<ModelSpace>,
    pub codomain: Option<ModelSpace>,
    pub weight: Option<Weight>,
    pub al_weight: Option<AlWeight>,
    pub tensor: Option<ProductTensor>,
    pub operator: Option<OperatorSpec>,
    pub x: Option<Element>,
    pub y: Option<Element>,
    pub degree: Option<u32>,
    pub sample: Option<Vec<Family>>,
    pub band: Option<Band>,
    pub sweep: Option<SweepSpec>,
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest> {
        let raw: RawManifest = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        match raw.schema_version.as_u64() {
            Some(SCHEMA_VERSION) => {}
            _ => {
                return Err(schema(format!(
                    "unsupported schemaVersion {}, expected {SCHEMA_VERSION}",
                    raw.schema_version
                )))
            }
        }
        let space = raw.space.as_ref().map(|v| parse_space(v, "space")).transpose()?;
        let codomain = raw.codomain.as_ref().map(|v| parse_space(v, "codomain")).transpose()?;
        let need_space = |field: &str| space.as_ref().ok_or_else(|| schema(format!("{field} needs a space")));
        let weight = match &raw.weight {
            Some(v) => Some(parse_weight(need_space("weight")?, v, "weight")?),
            None => None,
        };
        let al_weight = raw
            .al_weight
            .as_ref()
            .map(|v| AlWeight::new(rational_list(v, "alWeight")?).map_err(|e| schema(e.to_string())))
            .transpose()?;
        let tensor = raw.tensor.as_ref().map(|v| parse_tensor(v, "tensor")).transpose()?;
        let operator = match &raw.operator {
            Some(v) => {
                let dom = need_space("operator")?;
                Some(parse_operator(dom, v, "operator")?)
            }
            None => None,
        };
        let x = match &raw.x {
            Some(v) => Some(parse_element(need_space("x")?, v, "x")?),
            None => None,
        };
        let y = match &raw.y {
            Some(v) => Some(parse_element(need_space("y")?, v, "y")?),
            None => None,
        };
        let degree = raw
            .degree
            .as_ref()
            .map(|v| {
                v.as_u64()
                    .and_then(|d| u32::try_from(d).ok())
                    .ok_or_else(|| schema("degree must be a nonnegative integer"))
            })
            .transpose()?;
        let sample = match &raw.sample {
            Some(v) => Some(parse_sample(need_space("sample")?, v)?),
            None => None,
        };
        let band = raw.band.as_ref().map(|v| parse_band(v, "band")).transpose()?;
        let sweep = raw.sweep.as_ref().map(parse_sweep).transpose()?;
        Ok(Manifest {
            description: raw.description,
            space,
            codomain,
            weight,
            al_weight,
            tensor,
            operator,
            x,
            y,
            degree,
            sample,
            band,
            sweep,
        })
    }

    /// Canonical JSON form; parsing it gives back an equal manifest.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schemaVersion".into(), json!(SCHEMA_VERSION));
        let mut put = |k: &str, v: Option<Value>| {
            if let Some(v) = v {
                m.insert(k.into(), v);
            }
        };
        put("description", self.description.as_ref().map(|d| json!(d)));
        put("space", self.space.as_ref().map(encode_space));
        put("codomain", self.codomain.as_ref().map(encode_space));
        put("weight", self.weight.as_ref().map(encode_weight));
        put("alWeight", self.al_weight.as_ref().map(|w| encode_list(w.values())));
        put("tensor", self.tensor.as_ref().map(encode_tensor));
        put("operator", self.operator.as_ref().map(encode_operator));
        put("x", self.x.as_ref().map(encode_element));
        put("y", self.y.as_ref().map(encode_element));
        put("degree", self.degree.map(|d| json!(d)));
        put("sample", self.sample.as_ref().map(|s| Value::Array(s.iter().map(encode_family).collect())));
        put("band", self.band.as_ref().map(encode_band));
        put("sweep", self.sweep.as_ref().map(encode_sweep));
        Value::Object(m)
    }
}

pub fn parse_rational(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::String(s) => scalar::parse(s).map_err(|e| schema(format!("{path}: {e}"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(scalar::int(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(schema(format!(
                    "{path}: binary floating-point number {n}; write it as a \"p/q\" or decimal string"
                )))
            }
        }
        Value::Array(pair) if pair.len() == 2 => {
            let part = |v: &Value| match v {
                Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(v, path),
                Value::String(s) if !s.contains(['/', '.']) => parse_rational(v, path),
                _ => Err(schema(format!("{path}: [p, q] pairs need integer entries"))),
            };
            let (p, q) = (part(&pair[0])?, part(&pair[1])?);
            if num_traits::Zero::is_zero(&q) {
                return Err(schema(format!("{path}: zero denominator")));
            }
            Ok(p / q)
        }
        _ => Err(schema(format!("{path}: expected a number string, integer, or [p, q] pair"))),
    }
}

fn rational_list(v: &Value, path: &str) -> Result<Vec<Rational>> {
    let items = v.as_array().ok_or_else(|| schema(format!("{path}: expected an array")))?;
    items.iter().enumerate().map(|(i, x)| parse_rational(x, &format!("{path}[{i}]"))).collect()
}

fn object<'a>(v: &'a Value, path: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
    let m = v.as_object().ok_or_else(|| schema(format!("{path}: expected an object")))?;
    if let Some(k) = m.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(schema(format!("{path}: unknown field {k:?}")));
    }
    Ok(m)
}

fn field<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    m.get(key).ok_or_else(|| schema(format!("{path}: missing field {key:?}")))
}

fn usize_field(m: &Map<String, Value>, key: &str, path: &str) -> Result<usize> {
    field(m, key, path)?
        .as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| schema(format!("{path}.{key}: expected a nonnegative integer")))
}

pub fn parse_space(v: &Value, path: &str) -> Result<ModelSpace> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| schema(format!("{path}: missing string field \"kind\"")))?;
    let invalid = |e: Error| schema(format!("{path}: {e}"));
    match kind {
        "FiniteSup" => {
            let m = object(v, path, &["kind", "dualWeights"])?;
            ModelSpace::finite_sup(rational_list(field(m, "dualWeights", path)?, &format!("{path}.dualWeights"))?)
                .map_err(invalid)
        }
        "SeqLim" => {
            let m = object(v, path, &["kind", "theta"])?;
            ModelSpace::seq_lim(parse_rational(field(m, "theta", path)?, &format!("{path}.theta"))?).map_err(invalid)
        }
        "FiniteAL" => {
            let m = object(v, path, &["kind", "atoms", "nonatomicBand"])?;
            let band = match m.get("nonatomicBand") {
                None => false,
                Some(b) => b.as_bool().ok_or_else(|| schema(format!("{path}.nonatomicBand: expected a boolean")))?,
            };
            ModelSpace::finite_al(usize_field(m, "atoms", path)?, band).map_err(invalid)
        }
        "SupDirectSum" => {
            let m = object(v, path, &["kind", "left", "right"])?;
            let left = parse_space(field(m, "left", path)?, &format!("{path}.left"))?;
            let right = parse_space(field(m, "right", path)?, &format!("{path}.right"))?;
            ModelSpace::sup_sum(left, right).map_err(invalid)
        }
        other => Err(schema(format!("{path}: unknown space kind {other:?}"))),
    }
}

pub fn encode_space(s: &ModelSpace) -> Value {
    match s {
        ModelSpace::FiniteSup { dual_weights } => {
            json!({"kind": "FiniteSup", "dualWeights": encode_list(dual_weights)})
        }
        ModelSpace::SeqLim { theta } => json!({"kind": "SeqLim", "theta": scalar::format(theta)}),
        ModelSpace::FiniteAl { atoms, nonatomic_band } => {
            json!({"kind": "FiniteAL", "atoms": atoms, "nonatomicBand": nonatomic_band})
        }
        ModelSpace::SupDirectSum { left, right } => {
            json!({"kind": "SupDirectSum", "left": encode_space(left), "right": encode_space(right)})
        }
    }
}

pub fn encode_list(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|a| Value::String(scalar::format(a))).collect())
}

pub fn encode_rational(v: &Rational) -> Value {
    Value::String(scalar::format(v))
}

pub fn parse_element(space: &ModelSpace, v: &Value, path: &str) -> Result<Element> {
    let x = match space {
        ModelSpace::FiniteSup { .. } => Element::finite(rational_list(v, path)?),
        ModelSpace::SeqLim { .. } => {
            let m = object(v, path, &["prefix", "tail"])?;
            let prefix = match m.get("prefix") {
                Some(p) => rational_list(p, &format!("{path}.prefix"))?,
                None => Vec::new(),
            };
            Element::seq(prefix, parse_rational(field(m, "tail", path)?, &format!("{path}.tail"))?)
        }
        ModelSpace::FiniteAl { .. } => {
            let m = object(v, path, &["atoms", "nonatomic"])?;
            let atoms = rational_list(field(m, "atoms", path)?, &format!("{path}.atoms"))?;
            let nonatomic = match m.get("nonatomic") {
                Some(n) => parse_rational(n, &format!("{path}.nonatomic"))?,
                None => scalar::zero(),
            };
            Element::al(atoms, nonatomic)
        }
        ModelSpace::SupDirectSum { left, right } => {
            let m = object(v, path, &["left", "right"])?;
            Element::pair(
                parse_element(left, field(m, "left", path)?, &format!("{path}.left"))?,
                parse_element(right, field(m, "right", path)?, &format!("{path}.right"))?,
            )
        }
    };
    space.check(&x).map_err(|e| schema(format!("{path}: {e}")))?;
    Ok(x)
}

pub fn encode_element(x: &Element) -> Value {
    match x {
        Element::Finite(v) => encode_list(v),
        Element::Seq { prefix, tail } => json!({"prefix": encode_list(prefix), "tail": scalar::format(tail)}),
        Element::Al { atoms, nonatomic } => {
            json!({"atoms": encode_list(atoms), "nonatomic": scalar::format(nonatomic)})
        }
        Element::Pair(a, b) => json!({"left": encode_element(a), "right": encode_element(b)}),
    }
}

pub fn parse_weight(space: &ModelSpace, v: &Value, path: &str) -> Result<Weight> {
    let w = match space {
        ModelSpace::FiniteSup { .. } => Weight::Finite(rational_list(v, path)?),
        ModelSpace::SeqLim { .. } => {
            let m = object(v, path, &["prefix", "tail", "limit"])?;
            let prefix = match m.get("prefix") {
                Some(p) => rational_list(p, &format!("{path}.prefix"))?,
                None => Vec::new(),
            };
            Weight::seq(
                prefix,
                parse_rational(field(m, "tail", path)?, &format!("{path}.tail"))?,
                parse_rational(field(m, "limit", path)?, &format!("{path}.limit"))?,
            )
        }
        ModelSpace::SupDirectSum { left, right } => {
            let m = object(v, path, &["left", "right"])?;
            Weight::pair(
                parse_weight(left, field(m, "left", path)?, &format!("{path}.left"))?,
                parse_weight(right, field(m, "right", path)?, &format!("{path}.right"))?,
            )
        }
        ModelSpace::FiniteAl { .. } => return Err(schema(format!("{path}: FiniteAL spaces take \"alWeight\""))),
    };
    w.check(space).map_err(|e| schema(format!("{path}: {e}")))?;
    Ok(w)
}

pub fn encode_weight(w: &Weight) -> Value {
    match w {
        Weight::Finite(v) => encode_list(v),
        Weight::Seq { prefix, tail, limit } => {
            json!({"prefix": encode_list(prefix), "tail": scalar::format(tail), "limit": scalar::format(limit)})
        }
        Weight::Pair(a, b) => json!({"left": encode_weight(a), "right": encode_weight(b)}),
    }
}

fn parse_tensor(v: &Value, path: &str) -> Result<ProductTensor> {
    let outer = v.as_array().ok_or_else(|| schema(format!("{path}: expected a nested array")))?;
    let nested = outer
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mid = a.as_array().ok_or_else(|| schema(format!("{path}[{i}]: expected an array")))?;
            mid.iter()
                .enumerate()
                .map(|(j, b)| rational_list(b, &format!("{path}[{i}][{j}]")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    ProductTensor::from_nested(nested).map_err(|e| schema(format!("{path}: {e}")))
}

pub fn encode_tensor(t: &ProductTensor) -> Value {
    Value::Array(t.to_nested().iter().map(|m| Value::Array(m.iter().map(|r| encode_list(r)).collect())).collect())
}

pub fn parse_atom_id(text: &str) -> Result<AtomId> {
    let bad = || schema(format!("unknown dual atom {text:?}"));
    if let Some(rest) = text.strip_prefix("left:") {
        return Ok(AtomId::Summand(Side::Left, Box::new(parse_atom_id(rest)?)));
    }
    if let Some(rest) = text.strip_prefix("right:") {
        return Ok(AtomId::Summand(Side::Right, Box::new(parse_atom_id(rest)?)));
    }
    match text {
        "delta_inf" => return Ok(AtomId::Limit),
        "delta_j(j->inf)" | "tail" => return Ok(AtomId::Tail),
        _ => {}
    }
    let index = |digits: &str| digits.parse::<usize>().ok().filter(|k| *k >= 1).map(|k| k - 1).ok_or_else(bad);
    if let Some(d) = text.strip_prefix("delta_") {
        return Ok(AtomId::Coord(index(d)?));
    }
    if let Some(d) = text.strip_prefix("e_").and_then(|r| r.strip_suffix('*')) {
        return Ok(AtomId::Atom(index(d)?));
    }
    Err(bad())
}

fn parse_operator(domain: &ModelSpace, v: &Value, path: &str) -> Result<OperatorSpec> {
    let m = object(v, path, &["matrix", "indexMap", "multiply"])?;
    if m.len() != 1 {
        return Err(schema(format!("{path}: give exactly one of \"matrix\", \"indexMap\", \"multiply\"")));
    }
    if let Some(rows) = m.get("matrix") {
        let rows = rows.as_array().ok_or_else(|| schema(format!("{path}.matrix: expected an array of rows")))?;
        return Ok(OperatorSpec::Matrix(
            rows.iter()
                .enumerate()
                .map(|(k, r)| rational_list(r, &format!("{path}.matrix[{k}]")))
                .collect::<Result<_>>()?,
        ));
    }
    if let Some(entries) = m.get("indexMap") {
        let entries = entries.as_array().ok_or_else(|| schema(format!("{path}.indexMap: expected an array")))?;
        let parsed = entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let p = format!("{path}.indexMap[{i}]");
                let m = object(e, &p, &["target", "source", "scale"])?;
                let target = parse_atom_id(
                    field(m, "target", &p)?.as_str().ok_or_else(|| schema(format!("{p}.target: expected a string")))?,
                )?;
                let source = match m.get("source") {
                    None | Some(Value::Null) => None,
                    Some(s) => {
                        let id =
                            parse_atom_id(s.as_str().ok_or_else(|| schema(format!("{p}.source: expected a string")))?)?;
                        let scale = match m.get("scale") {
                            Some(s) => parse_rational(s, &format!("{p}.scale"))?,
                            None => scalar::one(),
                        };
                        Some((id, scale))
                    }
                };
                Ok(IndexEntry { target, source })
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(OperatorSpec::IndexMap(parsed));
    }
    let h = field(m, "multiply", path)?;
    Ok(OperatorSpec::Multiply(parse_weight(domain, h, &format!("{path}.multiply"))?))
}

pub fn encode_operator(op: &OperatorSpec) -> Value {
    match op {
        OperatorSpec::Matrix(rows) => json!({"matrix": rows.iter().map(|r| encode_list(r)).collect::<Vec<_>>()}),
        OperatorSpec::IndexMap(entries) => json!({"indexMap": entries
            .iter()
            .map(|e| match &e.source {
                Some((src, s)) => json!({"target": e.target.to_string(), "source": src.to_string(), "scale": scalar::format(s)}),
                None => json!({"target": e.target.to_string(), "source": null}),
            })
            .collect::<Vec<_>>()}),
        OperatorSpec::Multiply(h) => json!({"multiply": encode_weight(h)}),
    }
}

fn parse_sample(space: &ModelSpace, v: &Value) -> Result<Vec<Family>> {
    let items = v.as_array().ok_or_else(|| schema("sample: expected an array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, item)| {
            let path = format!("sample[{i}]");
            match item.get("block") {
                Some(b) => {
                    object(item, &path, &["block"])?;
                    let p = format!("{path}.block");
                    let m = object(b, &p, &["prefix", "block", "tail"])?;
                    let prefix = match m.get("prefix") {
                        Some(x) => rational_list(x, &format!("{p}.prefix"))?,
                        None => Vec::new(),
                    };
                    Ok(Family::Block {
                        prefix,
                        block: parse_rational(field(m, "block", &p)?, &format!("{p}.block"))?,
                        tail: parse_rational(field(m, "tail", &p)?, &format!("{p}.tail"))?,
                    })
                }
                None => Ok(Family::Member(parse_element(space, item, &path)?)),
            }
        })
        .collect()
}

pub fn encode_family(f: &Family) -> Value {
    match f {
        Family::Member(x) => encode_element(x),
        Family::Block { prefix, block, tail } => {
            json!({"block": {"prefix": encode_list(prefix), "block": scalar::format(block), "tail": scalar::format(tail)}})
        }
    }
}

fn parse_side(v: &Value, path: &str) -> Result<Side> {
    match v.as_str() {
        Some("left") => Ok(Side::Left),
        Some("right") => Ok(Side::Right),
        _ => Err(schema(format!("{path}: expected \"left\" or \"right\""))),
    }
}

pub fn parse_band(v: &Value, path: &str) -> Result<Band> {
    match v {
        Value::String(s) => match s.as_str() {
            "left" => Ok(Band::Summand(Side::Left)),
            "right" => Ok(Band::Summand(Side::Right)),
            "atomic" => Ok(Band::AtomicPart),
            "nonatomic" => Ok(Band::Nonatomic),
            other => Err(schema(format!("{path}: unknown band {other:?}"))),
        },
        Value::Object(m) if m.contains_key("atom") => {
            object(v, path, &["atom"])?;
            let id = m["atom"].as_str().ok_or_else(|| schema(format!("{path}.atom: expected a string")))?;
            Ok(Band::AtomSpan(parse_atom_id(id)?))
        }
        Value::Object(m) => {
            object(v, path, &["within", "band"])?;
            let side = parse_side(field(m, "within", path)?, &format!("{path}.within"))?;
            Ok(Band::Within(side, Box::new(parse_band(field(m, "band", path)?, &format!("{path}.band"))?)))
        }
        _ => Err(schema(format!("{path}: expected a band name or object"))),
    }
}

pub fn encode_band(b: &Band) -> Value {
    match b {
        Band::Summand(Side::Left) => json!("left"),
        Band::Summand(Side::Right) => json!("right"),
        Band::AtomicPart => json!("atomic"),
        Band::Nonatomic => json!("nonatomic"),
        Band::AtomSpan(id) => json!({"atom": id.to_string()}),
        Band::Within(side, inner) => {
            json!({"within": if *side == Side::Left { "left" } else { "right" }, "band": encode_band(inner)})
        }
    }
}

fn parse_sweep(v: &Value) -> Result<SweepSpec> {
    let path = "sweep";
    let kind = v.get("kind").and_then(Value::as_str).ok_or_else(|| schema("sweep: missing string field \"kind\""))?;
    match kind {
        "tensor" => {
            let m = object(v, path, &["kind", "values"])?;
            Ok(SweepSpec::Tensor { values: rational_list(field(m, "values", path)?, "sweep.values")? })
        }
        "identity" => {
            let m = object(v, path, &["kind", "grid"])?;
            Ok(SweepSpec::Identity { grid: rational_list(field(m, "grid", path)?, "sweep.grid")? })
        }
        "hom" => {
            let m = object(v, path, &["kind", "maxN", "maxM", "weights", "entries"])?;
            Ok(SweepSpec::Hom {
                max_n: usize_field(m, "maxN", path)?,
                max_m: usize_field(m, "maxM", path)?,
                weights: rational_list(field(m, "weights", path)?, "sweep.weights")?,
                entries: rational_list(field(m, "entries", path)?, "sweep.entries")?,
            })
        }
        other => Err(schema(format!("sweep: unknown kind {other:?}"))),
    }
}

pub fn encode_sweep(s: &SweepSpec) -> Value {
    match s {
        SweepSpec::Tensor { values } => json!({"kind": "tensor", "values": encode_list(values)}),
        SweepSpec::Identity { grid } => json!({"kind": "identity", "grid": encode_list(grid)}),
        SweepSpec::Hom { max_n, max_m, weights, entries } => json!({
            "kind": "hom", "maxN": max_n, "maxM": max_m, "weights": encode_list(weights), "entries": encode_list(entries)
        }),
    }
}
