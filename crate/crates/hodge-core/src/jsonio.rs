//! JSON wire formats for elements, metrics, forms, rings and reports.
//!
//! Rationals serialize as `{"num": …, "den": …}` (JSON integers when they
//! fit in i64, decimal strings otherwise); parsers also accept bare
//! integers and `"a/b"` strings. All maps are emitted with sorted keys, so
//! identical inputs produce byte-identical output.

use num::bigint::BigInt;
use num::traits::{One, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::bigraded::BigradedElement;
use crate::degeneration::{ContractibilityReport, IntersectionMatrix, PrimitiveLimitTrace};
use crate::exterior::{ExteriorElement, MetricSpec};
use crate::fourier::FourierForm;
use crate::hermitian::HermitianForm;
use crate::kahler::{KahlerReport, ModeBlockOperator};
use crate::lefschetz::{
    HardLefschetzReport, HodgeRiemannReport, PolarizationReport, PrimitiveDecomposition,
};
use crate::linalg::Mat;
use crate::multi_index::MultiIndex;
use crate::ring::{BasisClass, DiamondReport, GradedRing, RingData, RingError};
use crate::scalar::{GaussRational, Rational};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("expected {0}, got `{1}`")]
    Expected(&'static str, Value),
    #[error("missing field `{0}`")]
    Missing(&'static str),
    #[error("invalid rational `{0}`")]
    BadRational(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Parse(#[from] serde_json::Error),
}

fn bigint_to_value(b: &BigInt) -> Value {
    match i64::try_from(b.clone()) {
        Ok(v) => json!(v),
        Err(_) => json!(b.to_string()),
    }
}

fn bigint_from_value(v: &Value) -> Result<BigInt, JsonError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(JsonError::BadRational(v.to_string()))
            }
        }
        Value::String(s) => {
            s.parse::<BigInt>().map_err(|_| JsonError::BadRational(s.clone()))
        }
        _ => Err(JsonError::Expected("integer", v.clone())),
    }
}

pub fn rational_to_value(r: &Rational) -> Value {
    json!({ "num": bigint_to_value(r.numer()), "den": bigint_to_value(r.denom()) })
}

/// Accepts `{"num","den"}`, a bare integer, or an `"a/b"` string.
pub fn rational_from_value(v: &Value) -> Result<Rational, JsonError> {
    match v {
        Value::Object(map) => {
            let num = map.get("num").ok_or(JsonError::Missing("num"))?;
            let den = map.get("den").map(bigint_from_value).transpose()?.unwrap_or_else(BigInt::one);
            let num = bigint_from_value(num)?;
            if den.is_zero() {
                return Err(JsonError::BadRational("zero denominator".into()));
            }
            Ok(Rational::new(num, den))
        }
        Value::Number(_) => Ok(Rational::from_integer(bigint_from_value(v)?)),
        Value::String(s) => {
            if let Some((a, b)) = s.split_once('/') {
                let num = a.trim().parse::<BigInt>().map_err(|_| JsonError::BadRational(s.clone()))?;
                let den = b.trim().parse::<BigInt>().map_err(|_| JsonError::BadRational(s.clone()))?;
                if den.is_zero() {
                    return Err(JsonError::BadRational(s.clone()));
                }
                Ok(Rational::new(num, den))
            } else {
                Ok(Rational::from_integer(
                    s.trim().parse::<BigInt>().map_err(|_| JsonError::BadRational(s.clone()))?,
                ))
            }
        }
        _ => Err(JsonError::Expected("rational", v.clone())),
    }
}

pub fn gauss_to_value(g: &GaussRational) -> Value {
    json!({ "re": rational_to_value(&g.re), "im": rational_to_value(&g.im) })
}

/// Accepts `{"re","im"}` (each a rational form) or a bare rational.
pub fn gauss_from_value(v: &Value) -> Result<GaussRational, JsonError> {
    if let Value::Object(map) = v {
        if map.contains_key("re") || map.contains_key("im") {
            let re = map.get("re").map(rational_from_value).transpose()?.unwrap_or_else(Rational::zero);
            let im = map.get("im").map(rational_from_value).transpose()?.unwrap_or_else(Rational::zero);
            return Ok(GaussRational::new(re, im));
        }
    }
    Ok(GaussRational::from_rational(rational_from_value(v)?))
}

fn indices_to_value(idx: &MultiIndex) -> Value {
    json!(idx.indices())
}

fn indices_from_value(v: &Value, dim: usize) -> Result<MultiIndex, JsonError> {
    let arr = v.as_array().ok_or_else(|| JsonError::Expected("index array", v.clone()))?;
    let mut out = Vec::with_capacity(arr.len());
    for x in arr {
        let i = x
            .as_u64()
            .ok_or_else(|| JsonError::Expected("positive index", x.clone()))?;
        out.push(i as usize);
    }
    MultiIndex::new(out, dim).map_err(|e| JsonError::Invalid(e.to_string()))
}

// --- exterior elements and metrics ---

pub fn exterior_to_value(e: &ExteriorElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(idx, c)| {
            let mut obj = Map::new();
            obj.insert("index".into(), indices_to_value(idx));
            obj.insert("num".into(), bigint_to_value(c.re.numer()));
            obj.insert("den".into(), bigint_to_value(c.re.denom()));
            if !c.im.is_zero() {
                obj.insert("im_num".into(), bigint_to_value(c.im.numer()));
                obj.insert("im_den".into(), bigint_to_value(c.im.denom()));
            }
            Value::Object(obj)
        })
        .collect();
    json!({ "dim": e.dim(), "terms": terms })
}

pub fn exterior_from_value(v: &Value) -> Result<ExteriorElement, JsonError> {
    let obj = v.as_object().ok_or_else(|| JsonError::Expected("object", v.clone()))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or(JsonError::Missing("dim"))? as usize;
    let mut terms = Vec::new();
    for t in obj.get("terms").and_then(Value::as_array).ok_or(JsonError::Missing("terms"))? {
        let tobj = t.as_object().ok_or_else(|| JsonError::Expected("term object", t.clone()))?;
        let idx = indices_from_value(tobj.get("index").ok_or(JsonError::Missing("index"))?, dim)?;
        let num = bigint_from_value(tobj.get("num").ok_or(JsonError::Missing("num"))?)?;
        let den = tobj.get("den").map(bigint_from_value).transpose()?.unwrap_or_else(BigInt::one);
        let re = Rational::new(num, den);
        let im = match tobj.get("im_num") {
            None => Rational::zero(),
            Some(inum) => {
                let iden = tobj
                    .get("im_den")
                    .map(bigint_from_value)
                    .transpose()?
                    .unwrap_or_else(BigInt::one);
                Rational::new(bigint_from_value(inum)?, iden)
            }
        };
        terms.push((idx, GaussRational::new(re, im)));
    }
    ExteriorElement::from_terms(dim, terms).map_err(|e| JsonError::Invalid(e.to_string()))
}

pub fn metric_to_value(g: &MetricSpec) -> Value {
    let rows: Vec<Value> = g
        .gram()
        .iter()
        .map(|row| Value::Array(row.iter().map(rational_to_value).collect()))
        .collect();
    json!({ "dim": g.dim(), "gram": rows })
}

pub fn metric_from_value(v: &Value) -> Result<MetricSpec, JsonError> {
    let obj = v.as_object().ok_or_else(|| JsonError::Expected("object", v.clone()))?;
    let rows = obj.get("gram").and_then(Value::as_array).ok_or(JsonError::Missing("gram"))?;
    let gram = rational_matrix_from_value(rows)?;
    MetricSpec::new(gram).map_err(|e| JsonError::Invalid(e.to_string()))
}

/// Row-major rational matrix from a JSON array of arrays.
pub fn rational_matrix_from_value(rows: &[Value]) -> Result<Vec<Vec<Rational>>, JsonError> {
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| JsonError::Expected("matrix row", row.clone()))?
                .iter()
                .map(rational_from_value)
                .collect()
        })
        .collect()
}

// --- bigraded elements and Hermitian forms ---

pub fn bigraded_to_value(e: &BigradedElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|((i, j), c)| {
            json!({
                "I": indices_to_value(i),
                "J": indices_to_value(j),
                "re": rational_to_value(&c.re),
                "im": rational_to_value(&c.im),
            })
        })
        .collect();
    json!({ "n": e.complex_dim(), "terms": terms })
}

pub fn bigraded_from_value(v: &Value) -> Result<BigradedElement, JsonError> {
    let obj = v.as_object().ok_or_else(|| JsonError::Expected("object", v.clone()))?;
    let n = obj.get("n").and_then(Value::as_u64).ok_or(JsonError::Missing("n"))? as usize;
    let mut out = BigradedElement::zero(n);
    for t in obj.get("terms").and_then(Value::as_array).ok_or(JsonError::Missing("terms"))? {
        let tobj = t.as_object().ok_or_else(|| JsonError::Expected("term object", t.clone()))?;
        let i = indices_from_value(tobj.get("I").ok_or(JsonError::Missing("I"))?, n)?;
        let j = indices_from_value(tobj.get("J").ok_or(JsonError::Missing("J"))?, n)?;
        let c = gauss_from_value(t)?;
        let term = BigradedElement::basis(n, i, j)
            .map_err(|e| JsonError::Invalid(e.to_string()))?
            .scale(&c);
        out = out.add(&term).map_err(|e| JsonError::Invalid(e.to_string()))?;
    }
    Ok(out)
}

pub fn hermitian_to_value(h: &HermitianForm) -> Value {
    let rows: Vec<Value> = h
        .entries()
        .iter()
        .map(|row| Value::Array(row.iter().map(gauss_to_value).collect()))
        .collect();
    json!({ "n": h.complex_dim(), "h": rows })
}

pub fn hermitian_from_value(v: &Value) -> Result<HermitianForm, JsonError> {
    let obj = v.as_object().ok_or_else(|| JsonError::Expected("object", v.clone()))?;
    let rows = obj.get("h").and_then(Value::as_array).ok_or(JsonError::Missing("h"))?;
    let mut h = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().ok_or_else(|| JsonError::Expected("matrix row", row.clone()))?;
        h.push(row.iter().map(gauss_from_value).collect::<Result<Vec<_>, _>>()?);
    }
    HermitianForm::new(h).map_err(|e| JsonError::Invalid(e.to_string()))
}

// --- Fourier forms ---

pub fn fourier_to_value(f: &FourierForm) -> Value {
    let modes: Vec<Value> = f
        .modes()
        .map(|(k, c)| json!({ "k": k, "coeff": exterior_to_value(c) }))
        .collect();
    json!({ "m": f.dim(), "modes": modes })
}

pub fn fourier_from_value(v: &Value) -> Result<FourierForm, JsonError> {
    let obj = v.as_object().ok_or_else(|| JsonError::Expected("object", v.clone()))?;
    let m = obj.get("m").and_then(Value::as_u64).ok_or(JsonError::Missing("m"))? as usize;
    let mut f = FourierForm::zero(m);
    for mode in obj.get("modes").and_then(Value::as_array).ok_or(JsonError::Missing("modes"))? {
        let mo = mode.as_object().ok_or_else(|| JsonError::Expected("mode object", mode.clone()))?;
        let k: Vec<i64> = mo
            .get("k")
            .and_then(Value::as_array)
            .ok_or(JsonError::Missing("k"))?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| JsonError::Expected("integer", x.clone())))
            .collect::<Result<_, _>>()?;
        let coeff = exterior_from_value(mo.get("coeff").ok_or(JsonError::Missing("coeff"))?)?;
        f.add_mode(k, coeff).map_err(|e| JsonError::Invalid(e.to_string()))?;
    }
    Ok(f)
}

// --- rings ---

fn named_coeffs_from_value(v: &Value) -> Result<Vec<(String, GaussRational)>, JsonError> {
    let arr = v.as_array().ok_or_else(|| JsonError::Expected("array", v.clone()))?;
    arr.iter()
        .map(|e| {
            let obj = e.as_object().ok_or_else(|| JsonError::Expected("entry object", e.clone()))?;
            let name = obj
                .get("name")
                .and_then(Value::as_str)
                .ok_or(JsonError::Missing("name"))?
                .to_string();
            Ok((name, gauss_from_value(e)?))
        })
        .collect()
}

fn named_coeffs_to_value(entries: &[(String, GaussRational)]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|(name, c)| {
                json!({
                    "name": name,
                    "re": rational_to_value(&c.re),
                    "im": rational_to_value(&c.im),
                })
            })
            .collect(),
    )
}

/// Parse the ring file schema and certify the ring.
pub fn ring_from_value(v: &Value) -> Result<GradedRing, JsonError> {
    let obj = v.as_object().ok_or_else(|| JsonError::Expected("object", v.clone()))?;
    let n = obj.get("n").and_then(Value::as_u64).ok_or(JsonError::Missing("n"))? as usize;
    let mut basis = Vec::new();
    for b in obj.get("basis").and_then(Value::as_array).ok_or(JsonError::Missing("basis"))? {
        let bo = b.as_object().ok_or_else(|| JsonError::Expected("basis object", b.clone()))?;
        basis.push(BasisClass {
            name: bo
                .get("name")
                .and_then(Value::as_str)
                .ok_or(JsonError::Missing("name"))?
                .to_string(),
            p: bo.get("p").and_then(Value::as_u64).ok_or(JsonError::Missing("p"))? as usize,
            q: bo.get("q").and_then(Value::as_u64).ok_or(JsonError::Missing("q"))? as usize,
        });
    }
    let mut products = Vec::new();
    if let Some(mult) = obj.get("mult").and_then(Value::as_array) {
        for m in mult {
            let mo = m.as_object().ok_or_else(|| JsonError::Expected("mult object", m.clone()))?;
            let a = mo.get("a").and_then(Value::as_str).ok_or(JsonError::Missing("a"))?.to_string();
            let b = mo.get("b").and_then(Value::as_str).ok_or(JsonError::Missing("b"))?.to_string();
            let out = named_coeffs_from_value(mo.get("out").ok_or(JsonError::Missing("out"))?)?;
            products.push((a, b, out));
        }
    }
    let integral =
        named_coeffs_from_value(obj.get("integral").ok_or(JsonError::Missing("integral"))?)?;
    let conj = match obj.get("conj") {
        None => None,
        Some(c) => {
            let arr = c.as_array().ok_or_else(|| JsonError::Expected("conj array", c.clone()))?;
            let mut table = Vec::new();
            for e in arr {
                let eo = e.as_object().ok_or_else(|| JsonError::Expected("conj object", e.clone()))?;
                let name = eo
                    .get("name")
                    .and_then(Value::as_str)
                    .ok_or(JsonError::Missing("name"))?
                    .to_string();
                let out = named_coeffs_from_value(eo.get("out").ok_or(JsonError::Missing("out"))?)?;
                table.push((name, out));
            }
            Some(table)
        }
    };
    let ample = obj.get("ample").map(named_coeffs_from_value).transpose()?;
    Ok(GradedRing::new(RingData { n, basis, products, integral, conj, ample })?)
}

/// Serialize a ring back to the file schema.
pub fn ring_to_value(ring: &GradedRing) -> Value {
    let basis: Vec<Value> = ring
        .basis()
        .iter()
        .map(|c| json!({ "name": c.name, "p": c.p, "q": c.q }))
        .collect();
    let mut mult = Vec::new();
    for a in 0..ring.dim() {
        for b in 0..ring.dim() {
            let prod = ring
                .mul(&ring.basis_element(a), &ring.basis_element(b))
                .expect("certified ring");
            let entries: Vec<(String, GaussRational)> = prod
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (ring.basis()[i].name.clone(), c.clone()))
                .collect();
            if !entries.is_empty() {
                mult.push(json!({
                    "a": ring.basis()[a].name,
                    "b": ring.basis()[b].name,
                    "out": named_coeffs_to_value(&entries),
                }));
            }
        }
    }
    let integral: Vec<(String, GaussRational)> = (0..ring.dim())
        .filter_map(|i| {
            let v = ring.integrate(&ring.basis_element(i)).expect("certified ring");
            (!v.is_zero()).then(|| (ring.basis()[i].name.clone(), v))
        })
        .collect();
    let conj: Vec<Value> = (0..ring.dim())
        .map(|i| {
            let c = ring.conj_element(&ring.basis_element(i));
            let entries: Vec<(String, GaussRational)> = c
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(t, x)| (ring.basis()[t].name.clone(), x.clone()))
                .collect();
            json!({ "name": ring.basis()[i].name, "out": named_coeffs_to_value(&entries) })
        })
        .collect();
    let mut out = Map::new();
    out.insert("n".into(), json!(ring.complex_dim()));
    out.insert("basis".into(), Value::Array(basis));
    out.insert("mult".into(), Value::Array(mult));
    out.insert("integral".into(), named_coeffs_to_value(&integral));
    out.insert("conj".into(), Value::Array(conj));
    if let Some(ample) = ring.ample_class() {
        let entries: Vec<(String, GaussRational)> = ample
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (ring.basis()[i].name.clone(), c.clone()))
            .collect();
        out.insert("ample".into(), named_coeffs_to_value(&entries));
    }
    Value::Object(out)
}

// --- intersection matrices ---

pub fn intersection_matrix_to_value(m: &IntersectionMatrix) -> Value {
    let rows: Vec<Value> = m
        .entries()
        .iter()
        .map(|row| Value::Array(row.iter().map(rational_to_value).collect()))
        .collect();
    json!({ "m": m.half_dim(), "entries": rows })
}

pub fn intersection_matrix_from_value(v: &Value) -> Result<IntersectionMatrix, JsonError> {
    let obj = v.as_object().ok_or_else(|| JsonError::Expected("object", v.clone()))?;
    let m = obj.get("m").and_then(Value::as_u64).ok_or(JsonError::Missing("m"))? as usize;
    let rows = obj.get("entries").and_then(Value::as_array).ok_or(JsonError::Missing("entries"))?;
    let entries = rational_matrix_from_value(rows)?;
    IntersectionMatrix::new(m, entries).map_err(|e| JsonError::Invalid(e.to_string()))
}

// --- reports ---

fn gauss_str(c: &GaussRational) -> String {
    c.to_string()
}

pub fn mat_to_value(m: &Mat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| json!(gauss_str(m.at(r, c)))).collect()))
            .collect(),
    )
}

pub fn kahler_report_to_value(r: &KahlerReport) -> Value {
    let relations: Vec<Value> = r
        .relations
        .iter()
        .map(|rel| {
            json!({
                "relation": rel.id,
                "description": rel.description,
                "modes_checked": rel.modes_checked,
                "residual": if rel.pass { "0 exact" } else { "nonzero" },
                "failures": rel
                    .failures
                    .iter()
                    .map(|f| json!({ "mode": f.mode, "detail": f.detail }))
                    .collect::<Vec<_>>(),
                "pass": rel.pass,
            })
        })
        .collect();
    json!({
        "n": r.n,
        "max_mode": r.max_mode,
        "modes_checked": r.modes_checked,
        "relations": relations,
        "pass": r.pass,
    })
}

pub fn hl_report_to_value(r: &HardLefschetzReport) -> Value {
    json!({
        "relation": "chl.a",
        "n": r.n,
        "levels": r.levels.iter().map(|l| json!({
            "r": l.r,
            "rank": l.rank,
            "b_low": l.b_low,
            "b_high": l.b_high,
            "iso": l.iso,
            "pairing_nondegenerate": l.pairing_nondegenerate,
        })).collect::<Vec<_>>(),
        "first_failure": r.first_failure,
        "pass": r.pass,
    })
}

pub fn decomposition_to_value(ring: &GradedRing, d: &PrimitiveDecomposition) -> Value {
    json!({
        "relation": "chl.b",
        "l": d.l,
        "b_l": d.b_l,
        "dims_sum": d.dims_sum,
        "direct_sum": d.direct_sum,
        "orthogonal": d.orthogonal,
        "bigraded": d.bigraded,
        "summands": d.summands.iter().map(|s| json!({
            "j": s.j,
            "primitive_degree": s.primitive_degree,
            "dim": s.dim,
            "basis": s.basis.iter().map(|v| element_names(ring, v)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "pass": d.pass,
    })
}

/// Human-readable named expansion of a ring element.
pub fn element_names(ring: &GradedRing, v: &crate::ring::RingElement) -> Value {
    Value::Array(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| json!({ "name": ring.basis()[i].name, "coeff": gauss_str(c) }))
            .collect(),
    )
}

pub fn hr_report_to_value(r: &HodgeRiemannReport) -> Value {
    json!({
        "relation": "chl.c",
        "l": r.l,
        "slices": r.slices.iter().map(|s| json!({
            "p": s.p,
            "q": s.q,
            "dim": s.dim,
            "matrix": mat_to_value(&s.matrix),
            "hermitian": s.hermitian,
            "positive_definite": s.positive_definite,
            "minors": s.minors.iter().map(|m| json!(m.to_string())).collect::<Vec<_>>(),
            "raw_matrix": mat_to_value(&s.raw_matrix),
            "raw_definiteness": s.raw_definiteness,
        })).collect::<Vec<_>>(),
        "pass": r.pass,
    })
}

pub fn polarization_to_value(r: &PolarizationReport) -> Value {
    json!({
        "relation": "defpol",
        "weight": r.weight,
        "dim": r.dim,
        "parity_ok": r.parity_ok,
        "nondegenerate": r.nondegenerate,
        "real_form_ok": r.real_form_ok,
        "twisted_symmetric": r.twisted_symmetric,
        "twisted_positive_definite": r.twisted_positive_definite,
        "twisted_minors": r.twisted_minors.iter().map(|m| json!(m.to_string())).collect::<Vec<_>>(),
        "bigraded_positive": r.bigraded_positive,
        "pass": r.pass,
    })
}

pub fn diamond_to_value(r: &DiamondReport) -> Value {
    json!({
        "n": r.n,
        "hodge_numbers": r.hodge_numbers,
        "betti": r.betti,
        "identities": r.identities.iter().map(|i| json!({
            "relation": i.id,
            "description": i.description,
            "pass": i.pass,
        })).collect::<Vec<_>>(),
        "pass": r.pass,
    })
}

pub fn contractibility_to_value(r: &ContractibilityReport) -> Value {
    json!({
        "relation": "grmu",
        "m": r.half_dim,
        "size": r.size,
        "minors": r.minors.iter().map(|x| json!(x.to_string())).collect::<Vec<_>>(),
        "verdict": if r.consistent { "consistent with contraction" } else { "inconsistent" },
        "consistent": r.consistent,
    })
}

pub fn limit_trace_to_value(ring: &GradedRing, t: &PrimitiveLimitTrace) -> Value {
    json!({
        "relation": "apprxu",
        "m": t.half_dim,
        "middle_degree": t.middle_degree,
        "expected_dim": t.expected_dim,
        "limit_dim": t.limit_dim,
        "limit_basis": t.limit_basis.iter().map(|v| element_names(ring, v)).collect::<Vec<_>>(),
        "steps": t.steps.iter().map(|s| json!({
            "eps": s.eps.to_string(),
            "dim": s.dim,
            "basis": s.basis.iter().map(|v| element_names(ring, v)).collect::<Vec<_>>(),
            "gap_to_limit": s.gap_to_limit,
        })).collect::<Vec<_>>(),
        "dims_ok": t.dims_ok,
        "gaps_monotone": t.gaps_monotone,
        "decomposition_ok": t.decomposition_ok,
        "polarization_matrix": mat_to_value(&t.polarization_matrix),
        "polarization_minors": t.polarization_minors.iter().map(|x| json!(x.to_string())).collect::<Vec<_>>(),
        "polarization_positive": t.polarization_positive,
        "pass": t.pass,
    })
}

pub fn block_to_value(b: &ModeBlockOperator) -> Value {
    json!({
        "label": b.label,
        "k": b.k,
        "n": b.n,
        "basis": b.basis.iter().map(|(i, j)| json!({
            "I": indices_to_value(i),
            "J": indices_to_value(j),
        })).collect::<Vec<_>>(),
        "matrix": mat_to_value(&b.matrix),
    })
}
