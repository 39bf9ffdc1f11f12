//! JSON encoding of multilinear maps, cochains, algebras, complex cochains
//! and suite reports.
//!
//! A map `T_{c_1} ⊗ ⋯ ⊗ T_{c_n} → T_c` is a nested array indexed output
//! first, then by the inputs in order; entries are strings `"p"` or `"p/q"`
//! (plain JSON integers are accepted on input).

use serde_json::{json, Map, Value};

use crate::classical::{GSCochain, SCochain};
use crate::engine::{AlgebraInstance, Cochain};
use crate::error::{Error, Result};
use crate::linear::{Color, MultiMap, Rational, Spaces};
use crate::prop::{GeneratorId, Model};
use crate::suites::SuiteReport;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i)),
            None => Err(parse_err(format!("{n} is not an integer; write fractions as \"p/q\""))),
        },
        _ => Err(parse_err(format!("expected a rational, found {v}"))),
    }
}

pub fn multimap_to_json(m: &MultiMap) -> Value {
    fn nest(m: &MultiMap, out: usize, prefix: &mut Vec<usize>) -> Value {
        if prefix.len() == m.arity() {
            return rational_to_json(m.get(out, prefix));
        }
        let dim = m.in_dims()[prefix.len()];
        Value::Array(
            (0..dim)
                .map(|i| {
                    prefix.push(i);
                    let v = nest(m, out, prefix);
                    prefix.pop();
                    v
                })
                .collect(),
        )
    }
    Value::Array((0..m.out_dim()).map(|o| nest(m, o, &mut Vec::new())).collect())
}

/// Reads a tensor for a map with the given colors; the dimensions are taken
/// from the array shape and must be rectangular.
pub fn multimap_from_json(v: &Value, out: Color, inputs: &[Color]) -> Result<MultiMap> {
    let mut dims = Vec::with_capacity(inputs.len() + 1);
    let mut cur = v;
    for _ in 0..=inputs.len() {
        let arr = cur.as_array().ok_or_else(|| parse_err(format!("expected a tensor of depth {}", inputs.len() + 1)))?;
        dims.push(arr.len());
        match arr.first() {
            Some(first) => cur = first,
            None => break,
        }
    }
    if dims.len() != inputs.len() + 1 {
        return Err(parse_err("empty tensor axis"));
    }
    let mut m = MultiMap::zero(out, dims[0], inputs.to_vec(), dims[1..].to_vec());
    fn fill(v: &Value, dims: &[usize], idx: &mut Vec<usize>, m: &mut MultiMap) -> Result<()> {
        if idx.len() == dims.len() {
            let r = rational_from_json(v)?;
            m.set(idx[0], &idx[1..], r);
            return Ok(());
        }
        let arr = v.as_array().ok_or_else(|| parse_err("tensor is not rectangular"))?;
        if arr.len() != dims[idx.len()] {
            return Err(parse_err("tensor is not rectangular"));
        }
        for (i, x) in arr.iter().enumerate() {
            idx.push(i);
            fill(x, dims, idx, m)?;
            idx.pop();
        }
        Ok(())
    }
    fill(v, &dims, &mut Vec::new(), &mut m)?;
    Ok(m)
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| parse_err(format!("missing key {key:?}")))
}

fn object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| parse_err("expected a JSON object"))
}

fn model_of(obj: &Map<String, Value>) -> Result<Model> {
    field(obj, "model")?.as_str().ok_or_else(|| parse_err("\"model\" must be a string"))?.parse()
}

fn integer(obj: &Map<String, Value>, key: &str) -> Result<i64> {
    field(obj, key)?.as_i64().ok_or_else(|| parse_err(format!("{key:?} must be an integer")))
}

pub fn cochain_to_json(c: &Cochain) -> Value {
    let values: Map<String, Value> = c.values().iter().map(|(g, m)| (g.to_string(), multimap_to_json(m))).collect();
    json!({ "model": c.model().name(), "degree": c.degree(), "values": values })
}

pub fn cochain_from_json(v: &Value) -> Result<Cochain> {
    let obj = object(v)?;
    let model = model_of(obj)?;
    let degree = integer(obj, "degree")?;
    let mut c = Cochain::zero(model, degree);
    if let Some(values) = obj.get("values") {
        for (name, tensor) in object(values)? {
            let gen: GeneratorId = name.parse()?;
            let info = model.info(gen)?;
            c.set(gen, multimap_from_json(tensor, info.output, &info.inputs)?)?;
        }
    }
    Ok(c)
}

/// Names of the structure maps in algebra files.
pub fn structure_keys(model: Model) -> &'static [&'static str] {
    match model {
        Model::AssocMorphism | Model::LieMorphism => &["mu_U", "mu_V", "g"],
        Model::Iso => &["F", "G"],
    }
}

pub fn algebra_to_json(a: &AlgebraInstance) -> Value {
    let sp = a.spaces();
    let mut obj = Map::new();
    obj.insert("model".into(), json!(a.model().name()));
    obj.insert(
        "spaces".into(),
        json!({ "U": { "dim": sp.dim(Color::B) }, "V": { "dim": sp.dim(Color::W) } }),
    );
    for (i, key) in structure_keys(a.model()).iter().enumerate() {
        obj.insert((*key).into(), multimap_to_json(a.structure_map(i)));
    }
    if a.is_strict() {
        obj.insert("strict".into(), json!(true));
    }
    Value::Object(obj)
}

pub fn algebra_from_json(v: &Value) -> Result<AlgebraInstance> {
    let obj = object(v)?;
    let model = model_of(obj)?;
    let spaces = object(field(obj, "spaces")?)?;
    let dim = |name: &str| -> Result<usize> {
        let d = integer(object(field(spaces, name)?)?, "dim")?;
        usize::try_from(d).map_err(|_| parse_err(format!("negative dimension for {name}")))
    };
    let sp = Spaces::new(dim("U")?, dim("V")?)?;
    let maps = model
        .structure_generators()
        .into_iter()
        .zip(structure_keys(model))
        .map(|(gen, key)| {
            let info = model.info(gen)?;
            multimap_from_json(field(obj, key)?, info.output, &info.inputs)
        })
        .collect::<Result<Vec<_>>>()?;
    let strict = match obj.get("strict") {
        None => false,
        Some(s) => s.as_bool().ok_or_else(|| parse_err("\"strict\" must be a boolean"))?,
    };
    AlgebraInstance::new(model, sp, maps, strict)
}

fn complex_to_json(kind: &str, degree: usize, x: &GSCochain) -> Value {
    json!({
        "complex": kind,
        "degree": degree,
        "x_U": multimap_to_json(&x.x_u),
        "x_V": multimap_to_json(&x.x_v),
        "x_g": multimap_to_json(&x.x_g),
    })
}

fn complex_parts(v: &Value, kind: &str) -> Result<(usize, MultiMap, MultiMap, MultiMap)> {
    let obj = object(v)?;
    let found = field(obj, "complex")?.as_str().unwrap_or_default();
    if found != kind {
        return Err(parse_err(format!("expected a {kind} cochain, found {found:?}")));
    }
    let n = usize::try_from(integer(obj, "degree")?).map_err(|_| parse_err("negative degree"))?;
    let x_u = multimap_from_json(field(obj, "x_U")?, Color::B, &vec![Color::B; n])?;
    let x_v = multimap_from_json(field(obj, "x_V")?, Color::W, &vec![Color::W; n])?;
    let x_g = multimap_from_json(field(obj, "x_g")?, Color::W, &vec![Color::B; n.saturating_sub(1)])?;
    Ok((n, x_u, x_v, x_g))
}

pub fn gs_to_json(x: &GSCochain) -> Value {
    complex_to_json("gs", x.degree(), x)
}

pub fn gs_from_json(v: &Value) -> Result<GSCochain> {
    let (n, x_u, x_v, x_g) = complex_parts(v, "gs")?;
    let sp = Spaces::new(x_u.out_dim(), x_v.out_dim())?;
    GSCochain::new(n, x_u, x_v, x_g, &sp)
}

pub fn s_to_json(x: &SCochain) -> Value {
    complex_to_json("s", x.degree(), x.components())
}

pub fn s_from_json(v: &Value) -> Result<SCochain> {
    let (n, x_u, x_v, x_g) = complex_parts(v, "s")?;
    let sp = Spaces::new(x_u.out_dim(), x_v.out_dim())?;
    SCochain::new(n, x_u, x_v, x_g, &sp)
}

/// The report without timings.
pub fn report_to_json(r: &SuiteReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "passed": c.passed(),
                "trials": c.trials,
                "failed": c.failed,
                "generators": c.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "failures": c.failures,
                "note": c.note,
            })
        })
        .collect();
    json!({
        "suite": r.suite.name(),
        "model": r.config.model.name(),
        "seed": r.config.seed,
        "trials": r.config.trials,
        "max_degree": r.config.max_degree,
        "passed": r.passed(),
        "checks": checks,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
