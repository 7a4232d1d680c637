//! Contexts as versioned JSON documents; grades are exact `i/m` strings.

use crate::error::{CliError, Result};
use crate::frame_spec::{kind_name, parse_kind, FrameSpec};
use crate::grades::fraction;
use galois_factor_core::bitset::BitSet;
use galois_factor_core::boolean::BooleanContext;
use galois_factor_core::fuzzy::FuzzyContext;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "galois-factor/1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContextDocument {
    Boolean(BooleanContext),
    Fuzzy(FuzzyContext),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    schema: String,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    frame: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    frame_kind: Option<String>,
    attributes: Vec<String>,
    objects: Vec<String>,
    /// Boolean: one string of `0`/`1` per attribute, indexed by object.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    incidence: Option<Vec<String>>,
    /// Fuzzy: one row of `i/m` grades per attribute.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    relation: Option<Vec<Vec<String>>>,
}

impl ContextDocument {
    pub fn attribute_count(&self) -> usize {
        match self {
            ContextDocument::Boolean(c) => c.attribute_count(),
            ContextDocument::Fuzzy(c) => c.attribute_count(),
        }
    }

    pub fn object_count(&self) -> usize {
        match self {
            ContextDocument::Boolean(c) => c.object_count(),
            ContextDocument::Fuzzy(c) => c.object_count(),
        }
    }

    fn to_wire(&self) -> Result<Wire> {
        Ok(match self {
            ContextDocument::Boolean(ctx) => Wire {
                schema: SCHEMA.into(),
                kind: "boolean".into(),
                frame: None,
                frame_kind: None,
                attributes: ctx.attributes().to_vec(),
                objects: ctx.objects().to_vec(),
                incidence: Some(
                    (0..ctx.attribute_count())
                        .map(|a| {
                            (0..ctx.object_count())
                                .map(|b| if ctx.incidence(a, b) { '1' } else { '0' })
                                .collect()
                        })
                        .collect(),
                ),
                relation: None,
            },
            ContextDocument::Fuzzy(ctx) => {
                if !ctx.has_constant_sigma() {
                    return Err(CliError::Input(
                        "contexts with several triples cannot be written as documents".into(),
                    ));
                }
                let spec = FrameSpec::of_frame(ctx.frame())?;
                Wire {
                    schema: SCHEMA.into(),
                    kind: "fuzzy".into(),
                    frame: Some(spec.to_string()),
                    frame_kind: Some(kind_name(spec.kind).into()),
                    attributes: ctx.attributes().to_vec(),
                    objects: ctx.objects().to_vec(),
                    incidence: None,
                    relation: Some(
                        (0..ctx.attribute_count())
                            .map(|a| {
                                (0..ctx.object_count())
                                    .map(|b| fraction(ctx.relation(a, b)))
                                    .collect()
                            })
                            .collect(),
                    ),
                }
            }
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_wire()?)? + "\n")
    }

    pub fn to_value(&self) -> Result<serde_json::Value> {
        Ok(serde_json::to_value(self.to_wire()?)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: Wire = serde_json::from_str(text)?;
        if wire.schema != SCHEMA {
            return Err(CliError::Input(format!(
                "unsupported schema `{}` (expected `{SCHEMA}`)",
                wire.schema
            )));
        }
        match wire.kind.as_str() {
            "boolean" => {
                let rows = wire.incidence.ok_or_else(|| {
                    CliError::Input("boolean document without `incidence`".into())
                })?;
                let n = wire.objects.len();
                let mut bits = Vec::with_capacity(rows.len());
                for (a, row) in rows.iter().enumerate() {
                    if row.chars().count() != n {
                        return Err(CliError::Input(format!(
                            "incidence row {a} has {} cells, expected {n}",
                            row.chars().count()
                        )));
                    }
                    let mut set = BitSet::empty(n);
                    for (b, c) in row.chars().enumerate() {
                        match c {
                            '1' => set.insert(b),
                            '0' => {}
                            other => {
                                return Err(CliError::Input(format!(
                                    "incidence row {a}: expected `0` or `1`, found `{other}`"
                                )))
                            }
                        }
                    }
                    bits.push(set);
                }
                Ok(ContextDocument::Boolean(BooleanContext::from_rows(
                    wire.attributes,
                    wire.objects,
                    bits,
                )?))
            }
            "fuzzy" => {
                let frame = wire
                    .frame
                    .ok_or_else(|| CliError::Input("fuzzy document without `frame`".into()))?;
                let mut spec: FrameSpec = frame.parse()?;
                if let Some(k) = &wire.frame_kind {
                    spec = spec.with_kind(parse_kind(k)?);
                }
                let frame = spec.build()?;
                let rows = wire
                    .relation
                    .ok_or_else(|| CliError::Input("fuzzy document without `relation`".into()))?;
                let p = frame.p();
                let relation = rows
                    .iter()
                    .enumerate()
                    .map(|(a, row)| {
                        row.iter()
                            .map(|cell| {
                                crate::grades::on_chain(p, cell)
                                    .map(|g| g.numerator())
                                    .map_err(|_| {
                                        CliError::Input(format!(
                                            "relation row {a}: `{cell}` is not a grade on {p}"
                                        ))
                                    })
                            })
                            .collect::<Result<Vec<u32>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(ContextDocument::Fuzzy(FuzzyContext::new(
                    wire.attributes,
                    wire.objects,
                    frame,
                    &relation,
                )?))
            }
            other => Err(CliError::Input(format!(
                "unknown document kind `{other}` (expected boolean or fuzzy)"
            ))),
        }
    }
}
