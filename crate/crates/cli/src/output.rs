use std::collections::BTreeMap;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::args::Format;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone)]
pub enum Payload {
    Expr(String),
    Count(u64),
    Table { rows: Vec<String>, cols: Vec<String>, values: Vec<Vec<u64>> },
    /// Genus and coefficient, in increasing genus.
    Genera(Vec<(i64, String)>),
    Report(Vec<Check>),
}

impl Payload {
    pub fn passed(&self) -> bool {
        match self {
            Payload::Report(cs) => cs.iter().all(|c| c.passed),
            _ => true,
        }
    }
}

impl Serialize for Payload {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Payload::Expr(e) => s.serialize_str(e),
            Payload::Count(n) => s.serialize_u64(*n),
            Payload::Table { rows, cols, values } => {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("mu", rows)?;
                m.serialize_entry("nu", cols)?;
                m.serialize_entry("counts", values)?;
                m.end()
            }
            Payload::Genera(gs) => {
                let mut m = s.serialize_map(Some(gs.len()))?;
                for (g, c) in gs {
                    m.serialize_entry(&format!("g{g}"), c)?;
                }
                m.end()
            }
            Payload::Report(cs) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("passed", &self.passed())?;
                m.serialize_entry("checks", cs)?;
                m.end()
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub args: Vec<String>,
    pub inputs: BTreeMap<String, serde_json::Value>,
    pub result: Payload,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

fn csv_rows(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

impl OutputRecord {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable record") + "\n",
            Format::Plain => self.plain(),
            Format::Csv => self.csv(),
        }
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Payload::Expr(e) => out.push_str(&format!("{e}\n")),
            Payload::Count(n) => out.push_str(&format!("{n}\n")),
            Payload::Table { rows, cols, values } => {
                out.push_str(&format!("mu\\nu\t{}\n", cols.join("\t")));
                for (r, vs) in rows.iter().zip(values) {
                    let vs: Vec<String> = vs.iter().map(u64::to_string).collect();
                    out.push_str(&format!("{r}\t{}\n", vs.join("\t")));
                }
            }
            Payload::Genera(gs) => {
                for (g, c) in gs {
                    out.push_str(&format!("g{g}: {c}\n"));
                }
            }
            Payload::Report(cs) => {
                for c in cs {
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    match &c.detail {
                        Some(d) => out.push_str(&format!("{tag} {}: {d}\n", c.name)),
                        None => out.push_str(&format!("{tag} {}\n", c.name)),
                    }
                }
            }
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed_ms: {ms}\n"));
        }
        out
    }

    fn csv(&self) -> String {
        let rows = match &self.result {
            Payload::Expr(e) => vec![vec!["result".into()], vec![e.clone()]],
            Payload::Count(n) => vec![vec!["result".into()], vec![n.to_string()]],
            Payload::Table { rows, cols, values } => {
                let mut out = vec![std::iter::once("mu\\nu".to_string()).chain(cols.iter().cloned()).collect()];
                for (r, vs) in rows.iter().zip(values) {
                    out.push(std::iter::once(r.clone()).chain(vs.iter().map(u64::to_string)).collect());
                }
                out
            }
            Payload::Genera(gs) => std::iter::once(vec!["g".into(), "coefficient".into()])
                .chain(gs.iter().map(|(g, c)| vec![g.to_string(), c.clone()]))
                .collect(),
            Payload::Report(cs) => std::iter::once(vec!["check".into(), "passed".into(), "detail".into()])
                .chain(cs.iter().map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone().unwrap_or_default()]))
                .collect(),
        };
        csv_rows(rows)
    }
}
