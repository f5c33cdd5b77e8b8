//! JSON and CSV documents emitted by the command-line tool.
//!
//! JSON keys are emitted in declaration order and every real number is
//! written with exactly six decimals, so re-emitting a parsed document
//! reproduces it byte for byte.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;

use crate::correspondence::GapReport;
use crate::det_channel::DetParams;
use crate::det_schemes::SchemeReport;
use crate::gauss_regions::{GaussParams, TheoremBounds};
use crate::region_geom::{vertices, RateRegion};
use crate::{Error, Result};

/// Real number written with six decimals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fixed6(pub f64);

impl Fixed6 {
    pub fn format(v: f64) -> String {
        let s = format!("{v:.6}");
        if s == "-0.000000" {
            "0.000000".to_owned()
        } else {
            s
        }
    }
}

impl Serialize for Fixed6 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(serde::ser::Error::custom(format!("non-finite value {}", self.0)));
        }
        let raw = RawValue::from_string(Fixed6::format(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Fixed6 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        f64::deserialize(d).map(Fixed6)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetParamsDoc {
    pub m: u32,
    pub n: u32,
    pub c: u32,
}

impl From<&DetParams> for DetParamsDoc {
    fn from(p: &DetParams) -> Self {
        Self {
            m: p.m(),
            n: p.n(),
            c: p.c(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussParamsDoc {
    pub snr: Fixed6,
    pub inr: Fixed6,
    pub cg: Fixed6,
    /// `thm4`, `thm5`, `thm6` or `best`.
    pub bound: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamsDoc {
    Det(DetParamsDoc),
    Gauss(GaussParamsDoc),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstraintDoc {
    pub a1: Fixed6,
    pub a2: Fixed6,
    pub b: Fixed6,
}

/// `{"params":{…},"constraints":[{"a1","a2","b"}…],"vertices":[[r1,r2]…]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionDoc {
    pub params: ParamsDoc,
    pub constraints: Vec<ConstraintDoc>,
    pub vertices: Vec<[Fixed6; 2]>,
}

impl RegionDoc {
    pub fn new(params: ParamsDoc, region: &RateRegion) -> Self {
        Self {
            params,
            constraints: region
                .constraints()
                .iter()
                .map(|c| ConstraintDoc {
                    a1: Fixed6(c.a1),
                    a2: Fixed6(c.a2),
                    b: Fixed6(c.b),
                })
                .collect(),
            vertices: vertices(region)
                .into_iter()
                .map(|v| [Fixed6(v.r1), Fixed6(v.r2)])
                .collect(),
        }
    }

    pub fn det(p: &DetParams, region: &RateRegion) -> Self {
        Self::new(ParamsDoc::Det(p.into()), region)
    }

    pub fn gauss(g: &GaussParams, bound: &str, region: &RateRegion) -> Self {
        Self::new(
            ParamsDoc::Gauss(GaussParamsDoc {
                snr: Fixed6(g.snr()),
                inr: Fixed6(g.inr()),
                cg: Fixed6(g.cg()),
                bound: bound.to_owned(),
            }),
            region,
        )
    }
}

/// `{"r1","r2","leakage_bits","secure","decodable":[d1,d2]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchemeReportDoc {
    pub r1: u32,
    pub r2: u32,
    pub leakage_bits: Fixed6,
    pub secure: bool,
    pub decodable: [bool; 2],
}

impl From<&SchemeReport> for SchemeReportDoc {
    fn from(r: &SchemeReport) -> Self {
        Self {
            r1: r.r1,
            r2: r.r2,
            leakage_bits: Fixed6(r.leakage.value),
            secure: r.secure,
            decodable: [r.decodable1, r.decodable2],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapDoc {
    pub bound: String,
    pub target: String,
    pub gaussian: Fixed6,
    pub deterministic: Fixed6,
    pub gap: Fixed6,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MappingDoc {
    pub det: DetParamsDoc,
    pub snr: Fixed6,
    pub inr: Fixed6,
    pub cg: Fixed6,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapReportDoc {
    pub mapping: MappingDoc,
    pub gaps: Vec<GapDoc>,
    pub max_gap: Fixed6,
}

impl From<&GapReport> for GapReportDoc {
    fn from(r: &GapReport) -> Self {
        Self {
            mapping: MappingDoc {
                det: (&r.det).into(),
                snr: Fixed6(r.gauss.snr()),
                inr: Fixed6(r.gauss.inr()),
                cg: Fixed6(r.gauss.cg()),
            },
            gaps: r
                .gaps
                .iter()
                .map(|g| GapDoc {
                    bound: g.bound.to_owned(),
                    target: g.target.to_owned(),
                    gaussian: Fixed6(g.gaussian),
                    deterministic: Fixed6(g.deterministic),
                    gap: Fixed6(g.gap),
                })
                .collect(),
            max_gap: Fixed6(r.max_gap),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Numeric(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Vertex listing, one row per vertex: `region,index,r1,r2`.
pub fn regions_csv(docs: &[(String, RegionDoc)]) -> String {
    let mut out = String::from("region,index,r1,r2\n");
    for (name, doc) in docs {
        for (i, [r1, r2]) in doc.vertices.iter().enumerate() {
            writeln!(
                out,
                "{name},{i},{},{}",
                Fixed6::format(r1.0),
                Fixed6::format(r2.0)
            )
            .unwrap();
        }
    }
    out
}

/// One sweep row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub snr: Fixed6,
    pub inr: Fixed6,
    pub cg: Fixed6,
    pub theorem: u8,
    pub bound: String,
    pub value: Fixed6,
}

impl SweepRow {
    pub fn rows(g: &GaussParams, b: &TheoremBounds) -> Vec<SweepRow> {
        b.named()
            .into_iter()
            .map(|(name, v)| SweepRow {
                snr: Fixed6(g.snr()),
                inr: Fixed6(g.inr()),
                cg: Fixed6(g.cg()),
                theorem: b.theorem.number(),
                bound: name.to_owned(),
                value: Fixed6(v),
            })
            .collect()
    }
}

/// Header `snr,inr,cg,theorem,bound,value`.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("snr,inr,cg,theorem,bound,value\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            Fixed6::format(r.snr.0),
            Fixed6::format(r.inr.0),
            Fixed6::format(r.cg.0),
            r.theorem,
            r.bound,
            Fixed6::format(r.value.0)
        )
        .unwrap();
    }
    out
}
