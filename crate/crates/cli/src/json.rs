//! JSON schemas for groups, subgroups, cochains, category bundles and results.
//!
//! Objects are `serde_json::Map`s, whose keys serialize in sorted order, so
//! equal results always give byte-identical documents.

use serde_json::{json, Map, Value};

use gtcat_core::category::{validate_category, CategorySpec, Classification, SimpleObjectDescriptor};
use gtcat_core::center::{CenterClassification, CrossCheckReport};
use gtcat_core::cochain::Cochain;
use gtcat_core::group::{ConjugacyClass, DoubleCoset, FiniteGroup, Subgroup};
use gtcat_core::linalg::FiniteField;
use gtcat_core::projrep::{IrrepRecord, RepMatrices};

use crate::CliError;

fn bad(what: &str) -> CliError {
    CliError::Domain(format!("malformed JSON: {what}"))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, CliError> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| bad(what))
}

fn usize_array(v: &Value, what: &str) -> Result<Vec<usize>, CliError> {
    v.as_array().ok_or_else(|| bad(what))?.iter().map(|x| as_usize(x, what)).collect()
}

pub fn group_to_json(g: &FiniteGroup) -> Value {
    json!({ "order": g.order(), "labels": g.labels(), "table": g.table() })
}

pub fn group_from_json(v: &Value) -> Result<FiniteGroup, CliError> {
    let labels: Vec<String> = v["labels"]
        .as_array()
        .ok_or_else(|| bad("group.labels"))?
        .iter()
        .map(|l| l.as_str().map(String::from).ok_or_else(|| bad("group.labels")))
        .collect::<Result<_, _>>()?;
    let table = v["table"]
        .as_array()
        .ok_or_else(|| bad("group.table"))?
        .iter()
        .map(|row| usize_array(row, "group.table"))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(n) = v.get("order") {
        if as_usize(n, "group.order")? != table.len() {
            return Err(bad("group.order disagrees with the table"));
        }
    }
    Ok(FiniteGroup::from_table(labels, table)?)
}

pub fn subgroup_to_json(s: &Subgroup) -> Value {
    json!(s.elements())
}

pub fn subgroup_from_json(g: &FiniteGroup, v: &Value) -> Result<Subgroup, CliError> {
    let el = usize_array(v, "subgroup")?;
    if el.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad("subgroup indices must be sorted and distinct"));
    }
    Ok(Subgroup::from_elements(g, el)?)
}

pub fn cochain_to_json(c: &Cochain) -> Value {
    json!({ "degree": c.degree(), "modulus": c.modulus(), "values": c.values() })
}

pub fn cochain_from_json(g: &FiniteGroup, v: &Value) -> Result<Cochain, CliError> {
    let degree = as_usize(&v["degree"], "cochain.degree")?;
    let modulus = v["modulus"].as_u64().ok_or_else(|| bad("cochain.modulus"))?;
    let values = v["values"]
        .as_array()
        .ok_or_else(|| bad("cochain.values"))?
        .iter()
        .map(|x| x.as_u64().ok_or_else(|| bad("cochain.values")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Cochain::from_values(g, degree, modulus, values)?)
}

pub fn bundle_to_json(spec: &CategorySpec) -> Value {
    json!({
        "group": group_to_json(spec.group()),
        "omega": cochain_to_json(spec.omega()),
        "H": subgroup_to_json(spec.h()),
        "psi": cochain_to_json(spec.psi()),
    })
}

/// Reads a bundle, either bare or as the `spec` member of a result document.
pub fn bundle_from_json(v: &Value) -> Result<CategorySpec, CliError> {
    let v = v.get("spec").unwrap_or(v);
    let g = group_from_json(&v["group"])?;
    let omega = cochain_from_json(&g, &v["omega"])?;
    let h = subgroup_from_json(&g, &v["H"])?;
    let psi = cochain_from_json(&h.to_group(&g)?, &v["psi"])?;
    Ok(validate_category(&g, &omega, &h, &psi)?)
}

fn labels_of(g: &FiniteGroup, el: &[usize]) -> Value {
    json!(el.iter().map(|&x| g.label(x)).collect::<Vec<_>>())
}

pub fn double_coset_to_json(g: &FiniteGroup, z: &DoubleCoset) -> Value {
    json!({
        "rep": z.rep,
        "rep_label": g.label(z.rep),
        "elements": z.elements,
        "stabilizer": subgroup_to_json(&z.stabilizer),
        "stabilizer_labels": labels_of(g, z.stabilizer.elements()),
    })
}

pub fn class_to_json(g: &FiniteGroup, c: &ConjugacyClass) -> Value {
    json!({
        "rep": c.rep,
        "rep_label": g.label(c.rep),
        "elements": c.elements,
        "centralizer": subgroup_to_json(&c.centralizer),
        "centralizer_order": c.centralizer.order(),
    })
}

fn field_element(f: &FiniteField, x: u32) -> Value {
    json!(f.coefficients(x))
}

pub fn irrep_to_json(v: &IrrepRecord) -> Value {
    let matrices: Vec<Value> = match &v.matrices {
        RepMatrices::Complex(ms) => ms
            .iter()
            .map(|m| {
                json!(m
                    .to_rows()
                    .iter()
                    .map(|row| row.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>())
                    .collect::<Vec<_>>())
            })
            .collect(),
        RepMatrices::Modular(ms) => ms
            .iter()
            .map(|m| {
                let f = m.field();
                json!(m
                    .to_rows()
                    .iter()
                    .map(|row| row.iter().map(|&x| field_element(f, x)).collect::<Vec<_>>())
                    .collect::<Vec<_>>())
            })
            .collect(),
    };
    json!({ "index": v.index, "dimension": v.dimension, "matrices": matrices })
}

fn simple_to_json(g: &FiniteGroup, s: &SimpleObjectDescriptor, with_pcover: bool) -> Value {
    let mut m = Map::new();
    m.insert("block".into(), json!(s.block));
    m.insert("rep".into(), json!(s.rep));
    m.insert("rep_label".into(), json!(g.label(s.rep)));
    m.insert("stabilizer_order".into(), json!(s.stabilizer_order));
    m.insert("irrep_index".into(), json!(s.irrep_index));
    m.insert("dimension".into(), json!(s.dimension));
    m.insert("fpdim".into(), json!(s.fpdim));
    if with_pcover {
        m.insert("pcover_fpdim".into(), json!(s.pcover_fpdim));
    }
    Value::Object(m)
}

pub fn classification_to_json(g: &FiniteGroup, cls: &Classification, with_pcover: bool, with_matrices: bool) -> Value {
    let blocks: Vec<Value> = cls
        .blocks
        .iter()
        .map(|b| {
            let mut v = double_coset_to_json(g, &b.coset);
            v["xi"] = cochain_to_json(&b.xi);
            v["regular_class_count"] = json!(b.report.regular_class_count);
            v["irrep_dims"] = json!(b.report.dimensions());
            if with_pcover {
                v["pcover_dims"] = json!(b.report.projective_cover_dims);
                if let Some((p, e)) = b.report.field {
                    v["field"] = json!({ "p": p, "e": e });
                }
            }
            if with_matrices {
                v["irreps"] = json!(b.report.irreps.iter().map(irrep_to_json).collect::<Vec<_>>());
            }
            v
        })
        .collect();
    let simples: Vec<Value> = cls.simples.iter().map(|s| simple_to_json(g, s, with_pcover)).collect();
    let fpdims = cls.fpdims();
    json!({
        "characteristic": cls.characteristic,
        "rank": cls.rank(),
        "blocks": blocks,
        "simples": simples,
        "fpdims": fpdims,
        "fpdim_square_sum": fpdims.iter().map(|d| d * d).sum::<usize>(),
    })
}

pub fn center_to_json(g: &FiniteGroup, cls: &CenterClassification, with_pcover: bool, with_matrices: bool) -> Value {
    let blocks: Vec<Value> = cls
        .blocks
        .iter()
        .map(|b| {
            let mut v = class_to_json(g, &b.class);
            v["cocycle"] = cochain_to_json(&b.cocycle);
            v["irrep_dims"] = json!(b.report.dimensions());
            if with_pcover {
                v["pcover_dims"] = json!(b.report.projective_cover_dims);
            }
            if with_matrices {
                v["irreps"] = json!(b.report.irreps.iter().map(irrep_to_json).collect::<Vec<_>>());
            }
            v
        })
        .collect();
    let fpdims = cls.fpdims();
    json!({
        "characteristic": cls.characteristic,
        "rank": cls.rank(),
        "blocks": blocks,
        "simples": cls.simples.iter().map(|s| simple_to_json(g, s, with_pcover)).collect::<Vec<_>>(),
        "fpdims": fpdims,
        "fpdim_square_sum": fpdims.iter().map(|d| d * d).sum::<usize>(),
    })
}

pub fn cross_check_to_json(g: &FiniteGroup, r: &CrossCheckReport) -> Value {
    json!({
        "passed": r.passed(),
        "center_blocks": r.center_blocks,
        "double_blocks": r.double_blocks,
        "mismatch": r.mismatch.map(|x| g.label(x).to_string()),
        "classes": r.rows.iter().map(|row| json!({
            "rep": row.class_rep,
            "rep_label": g.label(row.class_rep),
            "center_fpdims": row.center_fpdims,
            "double_fpdims": row.double_fpdims,
            "cocycles_cohomologous": row.cocycles_cohomologous,
        })).collect::<Vec<_>>(),
    })
}
