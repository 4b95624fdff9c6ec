//! Self-describing reports: resolved parameters, anchored claims, and
//! optional margin curves for CSV export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use morrey_orlicz::verify::ConditionReport;
use serde::Serialize;
use serde_json::Value;

use crate::provenance::anchor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub name: String,
    pub anchor: &'static str,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveRow {
    pub series: String,
    pub u: f64,
    pub r: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub version: &'static str,
    pub params: BTreeMap<String, Value>,
    pub claims: Vec<Claim>,
    pub divergent: bool,
    #[serde(skip)]
    pub curves: Vec<CurveRow>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION"),
            params: BTreeMap::new(),
            claims: Vec::new(),
            divergent: false,
            curves: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.params.insert(key.to_string(), to_value(value));
        self
    }

    /// Adds a claim whose anchor is looked up under `key`.
    pub fn claim(&mut self, name: &str, key: &str, value: impl Serialize) -> &mut Self {
        self.claims.push(Claim { name: name.to_string(), anchor: anchor(key), value: to_value(value) });
        self
    }

    pub fn condition(&mut self, rep: &ConditionReport) -> &mut Self {
        let key = format!("condition_{}", rep.condition_id);
        self.divergent |= rep.divergence_flag;
        self.curves.extend(rep.margin_curve.iter().map(|p| CurveRow {
            series: key.clone(),
            u: p.u,
            r: p.r,
            lhs: p.lhs,
            rhs: p.rhs,
            ratio: p.ratio,
        }));
        self.claim(&key, &key, rep)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are serialisable");
        s.push('\n');
        s
    }

    /// Margin curves when present, otherwise every claim flattened to
    /// `claim,field,value` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if !self.curves.is_empty() {
            out.push_str("series,u,r,lhs,rhs,ratio\n");
            for c in &self.curves {
                let r = c.r.map(num).unwrap_or_default();
                let _ = writeln!(out, "{},{},{},{},{},{}", c.series, num(c.u), r, num(c.lhs), num(c.rhs), num(c.ratio));
            }
            return out;
        }
        out.push_str("claim,field,value\n");
        for c in &self.claims {
            let mut rows = Vec::new();
            flatten(&c.value, String::new(), &mut rows);
            for (field, value) in rows {
                let _ = writeln!(out, "{},{},{}", c.name, csv_field(&field), csv_field(&value));
            }
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values are serialisable")
}

fn num(x: f64) -> String {
    format!("{x}")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn flatten(v: &Value, path: String, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(x, join(k), out);
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(x, join(&i.to_string()), out);
            }
        }
        Value::String(s) => out.push((path, s.clone())),
        Value::Null => out.push((path, String::new())),
        other => out.push((path, other.to_string())),
    }
}
