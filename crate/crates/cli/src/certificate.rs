//! Certificates: a command echo, the instance hash, a JSON payload and a
//! checklist recomputed from that payload.

use dijoin::{ArcSet, Digraph, VertexSet};
use exactla::Rat;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub command: String,
    pub instance: String,
    pub instance_sha256: String,
    pub result: Value,
    pub checklist: Vec<Check>,
}

impl Certificate {
    pub fn all_pass(&self) -> bool {
        self.checklist.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checklist
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }
}

#[derive(Default)]
pub struct Checklist(Vec<Check>);

impl Checklist {
    pub fn push(&mut self, name: impl Into<String>, pass: bool) {
        self.0.push(Check {
            name: name.into(),
            pass,
        });
    }

    pub fn into_vec(self) -> Vec<Check> {
        self.0
    }
}

pub fn rat_str(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rat(s: &str) -> Result<Rat, CliError> {
    let bad = || CliError::Input(format!("{s:?} is not a rational of the form p/q"));
    let (n, d) = s.split_once('/').ok_or_else(bad)?;
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d <= BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

pub fn parse_int(s: &str) -> Result<BigInt, CliError> {
    s.parse()
        .map_err(|_| CliError::Input(format!("{s:?} is not an integer")))
}

pub fn arc_labels(d: &Digraph, s: ArcSet) -> Vec<String> {
    s.iter().map(|a| d.arc(a).label.clone()).collect()
}

pub fn vertex_labels(d: &Digraph, s: VertexSet) -> Vec<String> {
    s.iter().map(|v| d.vertex_label(v).to_string()).collect()
}

pub fn parse_arcs(d: &Digraph, labels: &[String]) -> Result<ArcSet, CliError> {
    let mut s = ArcSet::empty();
    for l in labels {
        let a = d
            .arc_index(l)
            .ok_or_else(|| CliError::Input(format!("unknown arc {l:?} in payload")))?;
        s.insert(a);
    }
    Ok(s)
}

pub fn parse_vertices(d: &Digraph, labels: &[String]) -> Result<VertexSet, CliError> {
    let mut s = VertexSet::empty();
    for l in labels {
        let v = d
            .vertex_index(l)
            .ok_or_else(|| CliError::Input(format!("unknown vertex {l:?} in payload")))?;
        s.insert(v);
    }
    Ok(s)
}

pub fn indicator(s: ArcSet, m: usize) -> Vec<BigInt> {
    (0..m).map(|a| BigInt::from(u8::from(s.contains(a)))).collect()
}
