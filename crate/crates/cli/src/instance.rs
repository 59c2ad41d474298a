//! Line-oriented instance files. Each line is one JSON object tagged by
//! `record`: a header first, then vertices, arcs or hyperedges, and family
//! members, all referring to vertices by id.

use std::collections::{BTreeSet, HashMap};

use dijoin::apps::{AppError, Hypergraph};
use dijoin::{Arc, Digraph, Family, GraphError, VertexSet};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const FORMAT: &str = "dijoin-instance";
pub const VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("line {line}: {message}")]
    Json { line: usize, message: String },
    #[error("the file is empty")]
    Empty,
    #[error("line 1 is not a header record")]
    MissingHeader,
    #[error("line {0}: a second header record")]
    DuplicateHeader(usize),
    #[error("unknown format {0:?}")]
    UnknownFormat(String),
    #[error("unsupported version {0}")]
    UnsupportedVersion(u32),
    #[error("line {line}: {record} records are not allowed in a {kind} instance")]
    WrongKind { line: usize, record: &'static str, kind: Kind },
    #[error("line {line}: unknown vertex id {id:?}")]
    UnknownVertex { line: usize, id: String },
    #[error("line {line}: duplicate id {id:?}")]
    DuplicateId { line: usize, id: String },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Hypergraph(#[from] AppError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Digraph,
    Hypergraph,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Digraph => "digraph",
            Kind::Hypergraph => "hypergraph",
        })
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "lowercase", deny_unknown_fields)]
enum Record {
    Header {
        format: String,
        version: u32,
        kind: Kind,
        name: String,
    },
    Vertex {
        id: String,
    },
    Arc {
        id: String,
        tail: String,
        head: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        capacity: Option<u64>,
    },
    Family {
        vertices: Vec<String>,
    },
    Hyperedge {
        id: String,
        vertices: Vec<String>,
    },
}

impl Record {
    fn name(&self) -> &'static str {
        match self {
            Record::Header { .. } => "header",
            Record::Vertex { .. } => "vertex",
            Record::Arc { .. } => "arc",
            Record::Family { .. } => "family",
            Record::Hyperedge { .. } => "hyperedge",
        }
    }
}

#[derive(Clone, Debug)]
pub struct DigraphInstance {
    pub name: String,
    pub digraph: Digraph,
    /// Family members as given; None when the file lists none.
    pub family: Option<Family>,
    /// Arc capacities; None when no arc carries one (all arcs then count 1).
    pub capacities: Option<Vec<u64>>,
}

impl DigraphInstance {
    /// Arcs of positive capacity.
    pub fn support(&self) -> dijoin::ArcSet {
        match &self.capacities {
            None => self.digraph.all_arcs(),
            Some(c) => dijoin::ArcSet::from_indices((0..c.len()).filter(|&a| c[a] > 0)),
        }
    }

    pub fn is_capacitated(&self) -> bool {
        self.capacities.as_ref().is_some_and(|c| c.iter().any(|&x| x != 1))
    }
}

#[derive(Clone, Debug)]
pub struct HypergraphInstance {
    pub name: String,
    pub hypergraph: Hypergraph,
    pub edge_ids: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum Instance {
    Digraph(DigraphInstance),
    Hypergraph(HypergraphInstance),
}

impl Instance {
    pub fn name(&self) -> &str {
        match self {
            Instance::Digraph(d) => &d.name,
            Instance::Hypergraph(h) => &h.name,
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Instance::Digraph(_) => Kind::Digraph,
            Instance::Hypergraph(_) => Kind::Hypergraph,
        }
    }

    /// Hex SHA-256 of the canonical serialization.
    pub fn sha256(&self) -> String {
        format!("{:x}", Sha256::digest(self.to_text().as_bytes()))
    }

    /// Canonical serialization: header, vertices, then arcs and family
    /// members (or hyperedges), one JSON object per line.
    pub fn to_text(&self) -> String {
        let mut records = vec![Record::Header {
            format: FORMAT.into(),
            version: VERSION,
            kind: self.kind(),
            name: self.name().into(),
        }];
        match self {
            Instance::Digraph(inst) => {
                let d = &inst.digraph;
                for l in d.vertex_labels() {
                    records.push(Record::Vertex { id: l.clone() });
                }
                for (i, a) in d.arcs().iter().enumerate() {
                    records.push(Record::Arc {
                        id: a.label.clone(),
                        tail: d.vertex_label(a.tail).into(),
                        head: d.vertex_label(a.head).into(),
                        capacity: inst.capacities.as_ref().map(|c| c[i]),
                    });
                }
                if let Some(f) = &inst.family {
                    for u in f.sets() {
                        records.push(Record::Family {
                            vertices: u.iter().map(|v| d.vertex_label(v).to_string()).collect(),
                        });
                    }
                }
            }
            Instance::Hypergraph(inst) => {
                let h = &inst.hypergraph;
                for l in &h.labels {
                    records.push(Record::Vertex { id: l.clone() });
                }
                for (id, e) in inst.edge_ids.iter().zip(&h.edges) {
                    records.push(Record::Hyperedge {
                        id: id.clone(),
                        vertices: e.iter().map(|&v| h.labels[v].clone()).collect(),
                    });
                }
            }
        }
        let mut out = String::new();
        for r in &records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Instance, InstanceError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first, line) = lines.next().ok_or(InstanceError::Empty)?;
        let (kind, name) = match parse_record(first, line)? {
            Record::Header {
                format,
                version,
                kind,
                name,
            } => {
                if format != FORMAT {
                    return Err(InstanceError::UnknownFormat(format));
                }
                if version != VERSION {
                    return Err(InstanceError::UnsupportedVersion(version));
                }
                (kind, name)
            }
            _ => return Err(InstanceError::MissingHeader),
        };
        let mut builder = Builder::new(kind, name);
        for (no, line) in lines {
            builder.add(no, parse_record(no, line)?)?;
        }
        builder.finish()
    }
}

fn parse_record(line: usize, text: &str) -> Result<Record, InstanceError> {
    serde_json::from_str(text).map_err(|e| InstanceError::Json {
        line,
        message: e.to_string(),
    })
}

struct Builder {
    kind: Kind,
    name: String,
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    arcs: Vec<(Arc, Option<u64>)>,
    arc_ids: BTreeSet<String>,
    family: Vec<VertexSet>,
    edges: Vec<(String, Vec<usize>)>,
}

impl Builder {
    fn new(kind: Kind, name: String) -> Self {
        Builder {
            kind,
            name,
            vertices: Vec::new(),
            index: HashMap::new(),
            arcs: Vec::new(),
            arc_ids: BTreeSet::new(),
            family: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn vertex(&self, line: usize, id: &str) -> Result<usize, InstanceError> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| InstanceError::UnknownVertex {
                line,
                id: id.into(),
            })
    }

    fn add(&mut self, line: usize, r: Record) -> Result<(), InstanceError> {
        let allowed = match (&r, self.kind) {
            (Record::Header { .. }, _) => return Err(InstanceError::DuplicateHeader(line)),
            (Record::Vertex { .. }, _) => true,
            (Record::Arc { .. } | Record::Family { .. }, Kind::Digraph) => true,
            (Record::Hyperedge { .. }, Kind::Hypergraph) => true,
            _ => false,
        };
        if !allowed {
            return Err(InstanceError::WrongKind {
                line,
                record: r.name(),
                kind: self.kind,
            });
        }
        match r {
            Record::Vertex { id } => {
                if self.index.contains_key(&id) {
                    return Err(InstanceError::DuplicateId { line, id });
                }
                self.index.insert(id.clone(), self.vertices.len());
                self.vertices.push(id);
            }
            Record::Arc {
                id,
                tail,
                head,
                capacity,
            } => {
                if !self.arc_ids.insert(id.clone()) {
                    return Err(InstanceError::DuplicateId { line, id });
                }
                let arc = Arc {
                    label: id,
                    tail: self.vertex(line, &tail)?,
                    head: self.vertex(line, &head)?,
                };
                self.arcs.push((arc, capacity));
            }
            Record::Family { vertices } => {
                let mut u = VertexSet::empty();
                for v in &vertices {
                    let i = self.vertex(line, v)?;
                    if u.contains(i) {
                        return Err(InstanceError::Invalid {
                            line,
                            message: format!("vertex {v:?} repeats in a family member"),
                        });
                    }
                    u.insert(i);
                }
                self.family.push(u);
            }
            Record::Hyperedge { id, vertices } => {
                if self.edges.iter().any(|(e, _)| *e == id) {
                    return Err(InstanceError::DuplicateId { line, id });
                }
                let members = vertices
                    .iter()
                    .map(|v| self.vertex(line, v))
                    .collect::<Result<Vec<_>, _>>()?;
                self.edges.push((id, members));
            }
            Record::Header { .. } => unreachable!("rejected above"),
        }
        Ok(())
    }

    fn finish(self) -> Result<Instance, InstanceError> {
        match self.kind {
            Kind::Digraph => {
                let given: Vec<Option<u64>> = self.arcs.iter().map(|(_, c)| *c).collect();
                let capacities = if given.iter().all(Option::is_none) {
                    None
                } else if given.iter().all(Option::is_some) {
                    Some(given.into_iter().flatten().collect())
                } else {
                    return Err(InstanceError::Invalid {
                        line: 0,
                        message: "either every arc has a capacity or none does".into(),
                    });
                };
                let digraph = Digraph::new(self.vertices, self.arcs.into_iter().map(|(a, _)| a).collect())?;
                let family = (!self.family.is_empty()).then(|| Family::new(self.family));
                Ok(Instance::Digraph(DigraphInstance {
                    name: self.name,
                    digraph,
                    family,
                    capacities,
                }))
            }
            Kind::Hypergraph => {
                let (edge_ids, edges): (Vec<String>, Vec<Vec<usize>>) = self.edges.into_iter().unzip();
                let hypergraph = Hypergraph::new(self.vertices, edges)?;
                Ok(Instance::Hypergraph(HypergraphInstance {
                    name: self.name,
                    hypergraph,
                    edge_ids,
                }))
            }
        }
    }
}

/// A digraph instance with every family member and capacity as given.
pub fn digraph_instance(
    name: &str,
    digraph: Digraph,
    family: Option<Family>,
    capacities: Option<Vec<u64>>,
) -> Instance {
    Instance::Digraph(DigraphInstance {
        name: name.into(),
        digraph,
        family,
        capacities,
    })
}
