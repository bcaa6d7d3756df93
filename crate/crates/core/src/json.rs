//! JSON interchange formats.
//!
//! Ribbon graphs: `{"circles": [["a+","b+","a-","b-"]], "signs": {"a":
//! "+"}}`, where `x+` marks the first arrow of label `x` in reading order
//! and `x-` the second; signs are optional. Diagrams: `{"crossings":
//! [{"ends": [1,4,2,5], "over": "24"}]}` with ends counter-clockwise and
//! `"13"`/`"24"` naming the over pair by position. Field order is fixed so
//! equal inputs serialize byte-identically.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::arrows::{Arrow, ArrowPresentation, Direction};
use crate::decomp::{BiseparationCertificate, SideTag};
use crate::link::{LinkDiagram, LinkError, OverPair};
use crate::map::{MapError, RibbonGraph, Sign};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("JSON syntax error: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("bad entry: {0}")]
    BadEntry(String),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Link(#[from] LinkError),
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GraphDoc {
    pub circles: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signs: Option<BTreeMap<String, String>>,
}

pub fn graph_to_doc(g: &RibbonGraph) -> GraphDoc {
    let ap = g.to_arrows();
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    let circles = ap
        .circles
        .iter()
        .map(|circle| {
            circle
                .iter()
                .map(|arrow| {
                    let n = seen.entry(arrow.label.clone()).or_insert(0);
                    *n += 1;
                    let marker = if *n == 1 { '+' } else { '-' };
                    format!("{}{}", arrow.label, marker)
                })
                .collect()
        })
        .collect();
    let signs: BTreeMap<String, String> = ap
        .signs
        .iter()
        .map(|(l, s)| (l.clone(), s.as_char().to_string()))
        .collect();
    GraphDoc {
        circles,
        signs: if signs.is_empty() { None } else { Some(signs) },
    }
}

pub fn graph_from_doc(doc: &GraphDoc) -> Result<RibbonGraph, JsonError> {
    let circles = doc
        .circles
        .iter()
        .map(|circle| {
            circle
                .iter()
                .map(|entry| {
                    let stem = entry.strip_suffix(['+', '-']).ok_or_else(|| {
                        JsonError::BadEntry(format!("arrow `{entry}` must end with `+` or `-`"))
                    })?;
                    Ok(Arrow {
                        label: stem.to_string(),
                        direction: Direction::Forward,
                    })
                })
                .collect::<Result<Vec<_>, JsonError>>()
        })
        .collect::<Result<Vec<_>, JsonError>>()?;
    let mut signs = BTreeMap::new();
    for (l, s) in doc.signs.iter().flatten() {
        let sign = match s.as_str() {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            other => {
                return Err(JsonError::BadEntry(format!(
                    "sign `{other}` for label `{l}`"
                )))
            }
        };
        signs.insert(l.clone(), sign);
    }
    Ok(RibbonGraph::from_arrows(&ArrowPresentation {
        circles,
        signs,
    })?)
}

pub fn parse_graph(text: &str) -> Result<RibbonGraph, JsonError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    graph_from_doc(&doc)
}

#[derive(Serialize, Clone, Debug)]
pub struct SummandDoc {
    pub summand: Vec<String>,
    pub side: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anchor: Option<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct CertificateDoc {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    pub sequence: Vec<SummandDoc>,
}

pub fn certificate_to_doc(g: &RibbonGraph, cert: &BiseparationCertificate) -> CertificateDoc {
    CertificateDoc {
        a: g.subset_labels(&cert.subset)
            .iter()
            .map(|s| s.to_string())
            .collect(),
        sequence: cert
            .sequence
            .iter()
            .map(|step| SummandDoc {
                summand: g
                    .subset_labels(&step.edges)
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
                side: match step.side {
                    SideTag::P => "P".to_string(),
                    SideTag::Q => "Q".to_string(),
                },
                anchor: step.anchor.map(|v| v.name()),
            })
            .collect(),
    }
}

/// Diagram ends serialize as numbers when the strand label is numeric and
/// as strings otherwise, matching both input styles.
pub fn diagram_to_value(d: &LinkDiagram) -> Value {
    let crossings: Vec<Value> = (0..d.crossing_count())
        .map(|c| {
            let ends: Vec<Value> = d
                .end_labels(c)
                .iter()
                .map(|l| match l.parse::<u64>() {
                    Ok(n) => Value::from(n),
                    Err(_) => Value::from(l.to_string()),
                })
                .collect();
            let over = match d.over_pair(c) {
                OverPair::Slots02 => "13",
                OverPair::Slots13 => "24",
            };
            let mut m = serde_json::Map::new();
            m.insert("ends".into(), Value::from(ends));
            m.insert("over".into(), Value::from(over));
            Value::Object(m)
        })
        .collect();
    let mut m = serde_json::Map::new();
    m.insert("crossings".into(), Value::from(crossings));
    if d.unknot_count() > 0 {
        m.insert("unknots".into(), Value::from(d.unknot_count() as u64));
    }
    Value::Object(m)
}

pub fn diagram_from_value(v: &Value) -> Result<LinkDiagram, JsonError> {
    let obj = v
        .as_object()
        .ok_or_else(|| JsonError::BadEntry("diagram must be an object".into()))?;
    let crossings_val = obj
        .get("crossings")
        .and_then(Value::as_array)
        .ok_or_else(|| JsonError::BadEntry("missing `crossings` array".into()))?;
    let mut crossings = Vec::new();
    for c in crossings_val {
        let ends_val = c
            .get("ends")
            .and_then(Value::as_array)
            .ok_or_else(|| JsonError::BadEntry("crossing needs an `ends` array".into()))?;
        if ends_val.len() != 4 {
            return Err(JsonError::BadEntry(
                "crossing needs exactly four ends".into(),
            ));
        }
        let mut ends: [String; 4] = Default::default();
        for (i, e) in ends_val.iter().enumerate() {
            ends[i] = match e {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(JsonError::BadEntry(format!("bad strand end `{e}`"))),
            };
        }
        let over = match c.get("over").and_then(Value::as_str) {
            Some("13") => OverPair::Slots02,
            Some("24") => OverPair::Slots13,
            other => {
                return Err(JsonError::BadEntry(format!(
                    "`over` must be \"13\" or \"24\", got {other:?}"
                )))
            }
        };
        crossings.push((ends, over));
    }
    let unknots = obj.get("unknots").and_then(Value::as_u64).unwrap_or(0) as usize;
    Ok(LinkDiagram::from_crossings(&crossings, unknots)?)
}

pub fn parse_diagram(text: &str) -> Result<LinkDiagram, JsonError> {
    let v: Value = serde_json::from_str(text)?;
    diagram_from_value(&v)
}

#[derive(Serialize, Clone, Debug)]
pub struct GenusDoc {
    pub per_component: Vec<usize>,
    pub total: usize,
    pub plane: bool,
}

pub fn genus_doc(g: &RibbonGraph) -> GenusDoc {
    let per_component = g.genus_per_component();
    let total = per_component.iter().sum();
    GenusDoc {
        per_component,
        total,
        plane: total == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::IsoMode;

    #[test]
    fn graph_round_trip() {
        let text = r#"{"circles": [["a+","b+","a-","b-"]], "signs": {"a": "+", "b": "-"}}"#;
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.genus(), 1);
        let doc = graph_to_doc(&g);
        let back = graph_from_doc(&doc).unwrap();
        assert!(back.isomorphic(&g, IsoMode::Chiral));
        // Serialization is stable.
        let s1 = serde_json::to_string(&doc).unwrap();
        let s2 = serde_json::to_string(&graph_to_doc(&back)).unwrap();
        assert_eq!(s1, s2);
    }

    #[test]
    fn graph_rejects_unmarked_entries() {
        assert!(matches!(
            parse_graph(r#"{"circles": [["a","a"]]}"#),
            Err(JsonError::BadEntry(_))
        ));
    }

    #[test]
    fn empty_circles_are_isolated_vertices() {
        let g = parse_graph(r#"{"circles": [["a+","a-"], []]}"#).unwrap();
        assert_eq!(g.isolated_vertex_count(), 1);
        assert_eq!(g.vertex_count(), 2);
    }

    #[test]
    fn diagram_round_trip() {
        let d = LinkDiagram::parse_pd(crate::link::TREFOIL_PD).unwrap();
        let v = diagram_to_value(&d);
        let back = diagram_from_value(&v).unwrap();
        assert!(back.equivalent(&d));
        // Numeric strand labels stay numeric in the document.
        assert!(v["crossings"][0]["ends"][0].is_number());
    }

    #[test]
    fn certificate_doc_shape() {
        let g = parse_graph(r#"{"circles": [["a+","b+","a-","b-"]]}"#).unwrap();
        let a = g.subset_of(["a"]).unwrap();
        let cert = crate::decomp::verify_plane_biseparation(&g, &a).unwrap();
        let doc = certificate_to_doc(&g, &cert);
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.starts_with(r#"{"A":["a"],"sequence":["#));
        assert!(doc.sequence[0].anchor.is_none());
        assert_eq!(doc.sequence[1].anchor.as_deref(), Some("v0"));
    }
}
