//! Seeded property sweeps over generated instances. The first failing
//! instance is returned as a falsifier with its instance text.

use dijoin::apps::Hypergraph;
use dijoin::basis::{balanced_split, express_in_basis, integral_basis_recursive, verify_integral_basis};
use dijoin::digraph::DEFAULT_DICUT_CAP;
use dijoin::faces::linear_rank;
use dijoin::generate::{random_2ec_graph, random_digraft, random_digraph_tau2, rng};
use dijoin::mconvex::jump_free;
use dijoin::{ArcSet, Digraft, VertexSet};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::commands::{cmd_orient, cmd_padic, cmd_partition};
use crate::instance::{digraph_instance, HypergraphInstance, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Basis,
    Jump,
    Slack,
    Compose,
    Partition,
    Padic,
    Orient,
    Idp,
}

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub count: usize,
    pub seed: u64,
    pub max_vertices: usize,
    pub max_arcs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub instances: usize,
    pub checks: usize,
}

#[derive(Clone, Debug)]
pub struct Falsifier {
    pub instance: Instance,
    pub reason: String,
}

type Outcome = Result<usize, String>;

fn digraft_instance(name: &str, g: &Digraft) -> Instance {
    digraph_instance(name, g.digraph().clone(), Some(g.family().clone()), None)
}

pub fn run(suite: Suite, cfg: SweepConfig) -> Result<SweepReport, Box<Falsifier>> {
    let mut r = rng(cfg.seed);
    let mut checks = 0;
    for i in 0..cfg.count {
        let name = format!("sweep-{suite:?}-{}-{i}", cfg.seed).to_lowercase();
        let (instance, outcome) = match suite {
            Suite::Basis | Suite::Jump | Suite::Slack | Suite::Compose | Suite::Idp => {
                let g = random_digraft(&mut r, cfg.max_vertices, cfg.max_arcs);
                let outcome = match suite {
                    Suite::Basis => check_basis(&g),
                    Suite::Jump => check_jump(&g),
                    Suite::Slack => check_slack(&g),
                    Suite::Compose => check_compose(&g, &mut r),
                    _ => check_idp(&g, &mut r),
                };
                (digraft_instance(&name, &g), outcome)
            }
            Suite::Partition | Suite::Padic => {
                let d = random_digraph_tau2(&mut r, cfg.max_vertices, cfg.max_arcs);
                let inst = digraph_instance(&name, d, None, None);
                let outcome = if suite == Suite::Partition {
                    certificate_outcome(cmd_partition(&inst))
                } else {
                    [2, 3, 5]
                        .into_iter()
                        .map(|p| certificate_outcome(cmd_padic(&inst, p)))
                        .sum::<Outcome>()
                };
                (inst, outcome)
            }
            Suite::Orient => {
                let (n, edges) = random_2ec_graph(&mut r, cfg.max_vertices.min(7), cfg.max_arcs);
                let labels: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
                let h = Hypergraph::new(labels, edges.iter().map(|&(a, b)| vec![a, b]).collect())
                    .expect("2-edge-connected graphs are valid 2-uniform hypergraphs");
                let inst = Instance::Hypergraph(HypergraphInstance {
                    name,
                    hypergraph: h,
                    edge_ids: (0..edges.len()).map(|e| format!("e{e}")).collect(),
                });
                let outcome = certificate_outcome(cmd_orient(&inst));
                (inst, outcome)
            }
        };
        match outcome {
            Ok(k) => checks += k,
            Err(reason) => return Err(Box::new(Falsifier { instance, reason })),
        }
    }
    Ok(SweepReport {
        instances: cfg.count,
        checks,
    })
}

fn certificate_outcome(c: Result<crate::certificate::Certificate, crate::error::CliError>) -> Outcome {
    let c = c.map_err(|e| e.to_string())?;
    if c.all_pass() {
        Ok(c.checklist.len())
    } else {
        Err(format!("failed checks: {}", c.failed().join("; ")))
    }
}

fn check_basis(g: &Digraft) -> Outcome {
    let b = integral_basis_recursive(g).map_err(|e| e.to_string())?;
    verify_integral_basis(g.points(), g.digraph().num_arcs(), &b.points).map_err(|e| e.to_string())?;
    Ok(1)
}

fn value(j: ArcSet, out: ArcSet) -> usize {
    j.inter(out).len()
}

fn check_jump(g: &Digraft) -> Outcome {
    let d = g.digraph();
    let mut checks = 0;
    for u in d.dicut_shores(DEFAULT_DICUT_CAP).map_err(|e| e.to_string())? {
        let out = d.delta_out(u);
        for &jx in g.points() {
            for &jy in g.points() {
                let (lx, ly) = (value(jx, out), value(jy, out));
                for target in lx + 1..ly {
                    let j = jump_free(g, jx, jy, u, target).map_err(|e| {
                        format!("jump_free({jx:?}, {jy:?}, {u:?}, {target}): {e}")
                    })?;
                    if g.points().binary_search(&j).is_err() || value(j, out) != target {
                        return Err(format!("jump_free returned {j:?} for target {target} at {u:?}"));
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(checks)
}

fn check_slack(g: &Digraft) -> Outcome {
    let d = g.digraph();
    let n = d.num_vertices();
    let active_sources = g.analysis.active_nodes.inter(d.sources());
    let all = d.all_vertices();
    let separating = d
        .dicut_shores(DEFAULT_DICUT_CAP)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|&u| g.points().iter().all(|&j| value(j, d.delta_out(u)) == 1))
        .any(|u: VertexSet| {
            u.len() > 1
                && u.len() + 1 < n
                && !u.inter(active_sources).is_empty()
                && !all.minus(u).inter(active_sources).is_empty()
        });
    if (g.analysis.slack >= 1) != separating {
        return Err(format!(
            "slack {} but separating tight dicut {}",
            g.analysis.slack, separating
        ));
    }
    Ok(1)
}

fn check_compose(g: &Digraft, r: &mut ChaCha8Rng) -> Outcome {
    let g = g.augmented();
    let d = g.digraph();
    let m = d.num_arcs();
    let Some(u) = d
        .dicut_shores(DEFAULT_DICUT_CAP)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|&u| u.len() > 1 && u.len() + 2 <= d.num_vertices())
        .find(|&u| !g.face.equality_subset(u).is_empty())
    else {
        return Ok(0);
    };
    let err = |e: &dyn std::fmt::Display| e.to_string();
    let pair = g.contract(u).map_err(|e| err(&e))?;
    let b1 = integral_basis_recursive(&pair.child1).map_err(|e| err(&e))?;
    let b2 = integral_basis_recursive(&pair.child2).map_err(|e| err(&e))?;
    let b = pair.compose_bases(&b1.points, &b2.points).map_err(|e| err(&e))?;
    let (d1, d2, k) = (b1.points.len(), b2.points.len(), pair.crossing.len());
    if b.len() != d1 + d2 - k || linear_rank(&b, m) != b.len() {
        return Err(format!("composed basis has {} independent-or-not points, expected {}", b.len(), d1 + d2 - k));
    }
    if g.face.is_tight_shore(u) && linear_rank(g.points(), m) != b.len() {
        return Err("composed basis does not span the tight face".into());
    }
    let mut x = vec![BigInt::from(0); pair.map1.len()];
    let mut y = vec![BigInt::from(0); pair.map2.len()];
    for &p1 in pair.child1.points() {
        let c = BigInt::from(r.gen_range(-3..=3));
        let a = p1
            .iter()
            .map(|i| pair.map1[i])
            .find(|&a| pair.crossing.contains(a))
            .ok_or("child point misses the crossing arcs")?;
        let q = pair
            .child2
            .points()
            .iter()
            .find(|q| q.iter().any(|i| pair.map2[i] == a))
            .ok_or("no child point agrees on a crossing arc")?;
        for i in p1.iter() {
            x[i] += &c;
        }
        for i in q.iter() {
            y[i] += &c;
        }
    }
    let z = pair.odot(&x, &y).map_err(|e| err(&e))?;
    express_in_basis(&b, m, &z).map_err(|e| format!("merged combination outside the lattice: {e}"))?;
    Ok(3)
}

fn check_idp(g: &Digraft, r: &mut ChaCha8Rng) -> Outcome {
    let c = g.classify().map_err(|e| e.to_string())?;
    if !(c.basic && c.robust) {
        return Ok(0);
    }
    let m = g.digraph().num_arcs();
    let mut checks = 0;
    for k in [2, 3] {
        let picked: Vec<ArcSet> = (0..k)
            .map(|_| *g.points().choose(r).expect("faces are nonempty"))
            .collect();
        let mut w = vec![0u32; m];
        for j in &picked {
            for a in j.iter() {
                w[a] += 1;
            }
        }
        let parts = balanced_split(g, &w, k).ok_or_else(|| format!("no split of {picked:?} into {k} points"))?;
        let mut back = vec![0u32; m];
        for j in &parts {
            if g.points().binary_search(j).is_err() {
                return Err(format!("split part {j:?} is not a face point"));
            }
            for a in j.iter() {
                back[a] += 1;
            }
        }
        if parts.len() != k || back != w {
            return Err(format!("split of {picked:?} does not sum back"));
        }
        checks += 1;
    }
    Ok(checks)
}

