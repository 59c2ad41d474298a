//! The commands behind the binary. Each builds a payload, then derives the
//! checklist by re-reading that payload and checking it against the
//! instance from scratch.

use dijoin::apps::{
    hypergraph_orientation_assignment, lattice_report, min_dicut_capacity, min_dicut_family,
    p_adic_packing, partition_into_dijoins, restricted_face, scr_integral_basis, woodall_partition,
    Orientation,
};
use dijoin::basis::{
    express_in_basis, integral_basis_oracle, integral_basis_recursive, verify_integral_basis,
    Provenance, DEFAULT_SEARCH_BUDGET,
};
use dijoin::digraph::DEFAULT_DICUT_CAP;
use dijoin::faces::{affine_dim, closure, enumerate_scr_face_points, linear_rank, point_matrix};
use dijoin::{validate, ArcSet, Digraft, Digraph, Family, VertexSet};
use exactla::{in_lattice, rank_int, saturate, sublattice_index, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::certificate::{
    arc_labels, indicator, parse_arcs, parse_int, parse_rat, parse_vertices, rat_str,
    vertex_labels, Certificate, Check, Checklist,
};
use crate::error::CliError;
use crate::instance::{DigraphInstance, HypergraphInstance, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Oracle,
    Recursive,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Recursive => "recursive",
            Method::Both => "both",
        }
    }
}

fn digraph_of(inst: &Instance) -> Result<&DigraphInstance, CliError> {
    match inst {
        Instance::Digraph(d) => Ok(d),
        Instance::Hypergraph(_) => Err(CliError::Input("expected a digraph instance".into())),
    }
}

fn hypergraph_of(inst: &Instance) -> Result<&HypergraphInstance, CliError> {
    match inst {
        Instance::Hypergraph(h) => Ok(h),
        Instance::Digraph(_) => Err(CliError::Input("expected a hypergraph instance".into())),
    }
}

fn uncapacitated(inst: &DigraphInstance) -> Result<(), CliError> {
    if inst.is_capacitated() {
        return Err(CliError::Precondition(
            "this command handles unit capacities only".into(),
        ));
    }
    Ok(())
}

fn dijoin_family(inst: &DigraphInstance) -> Family {
    inst.family
        .clone()
        .unwrap_or_else(|| Family::sink_complements(&inst.digraph))
}

fn sets_to_labels(d: &Digraph, sets: &[ArcSet]) -> Vec<Vec<String>> {
    sets.iter().map(|&s| arc_labels(d, s)).collect()
}

fn shores_to_labels(d: &Digraph, f: &[VertexSet]) -> Vec<Vec<String>> {
    f.iter().map(|&u| vertex_labels(d, u)).collect()
}

fn labels_to_sets(d: &Digraph, l: &[Vec<String>]) -> Result<Vec<ArcSet>, CliError> {
    l.iter().map(|x| parse_arcs(d, x)).collect()
}

fn labels_to_shores(d: &Digraph, l: &[Vec<String>]) -> Result<Vec<VertexSet>, CliError> {
    l.iter().map(|x| parse_vertices(d, x)).collect()
}

fn payload<T: DeserializeOwned>(v: &Value) -> Result<T, CliError> {
    serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("malformed payload: {e}")))
}

fn to_value<T: Serialize>(p: &T) -> Value {
    serde_json::to_value(p).expect("payloads serialize")
}

fn certify(
    command: String,
    inst: &Instance,
    result: Value,
) -> Result<Certificate, CliError> {
    let mut cert = Certificate {
        command,
        instance: inst.name().into(),
        instance_sha256: inst.sha256(),
        result,
        checklist: Vec::new(),
    };
    cert.checklist = recheck(&cert, inst)?;
    Ok(cert)
}

/// Recomputes the checklist of a certificate from its payload alone.
pub fn recheck(cert: &Certificate, inst: &Instance) -> Result<Vec<Check>, CliError> {
    if cert.instance_sha256 != inst.sha256() {
        return Err(CliError::Input("certificate belongs to a different instance".into()));
    }
    let word = cert.command.split_whitespace().next().unwrap_or_default();
    match word {
        "verify" => recheck_verify(digraph_of(inst)?, &payload(&cert.result)?),
        "basis" => recheck_basis(digraph_of(inst)?, &payload(&cert.result)?),
        "partition" => recheck_partition(digraph_of(inst)?, &payload(&cert.result)?),
        "padic" => recheck_padic(digraph_of(inst)?, &payload(&cert.result)?),
        "orient" => recheck_orient(hypergraph_of(inst)?, &payload(&cert.result)?),
        other => Err(CliError::Input(format!("unknown command {other:?} in certificate"))),
    }
}

fn provenance_str(p: &Provenance) -> String {
    match p {
        Provenance::Search => "search".into(),
        Provenance::TightContraction {
            shrunk_shore,
            shrunk_rest,
            ..
        } => format!(
            "tight({}, {})",
            provenance_str(shrunk_shore),
            provenance_str(shrunk_rest)
        ),
        Provenance::FacetContraction {
            shrunk_shore,
            shrunk_rest,
            ..
        } => format!(
            "facet({}, {}, jump)",
            provenance_str(shrunk_shore),
            provenance_str(shrunk_rest)
        ),
    }
}

// ---------------------------------------------------------------- verify

#[derive(Debug, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub family: Vec<Vec<String>>,
    pub points: Vec<Vec<String>>,
    pub tight_nodes: Vec<String>,
    pub active_nodes: Vec<String>,
    pub dim: usize,
    pub kappa_t: u8,
    pub slack: usize,
    pub tight_dicut_shores: Vec<Vec<String>>,
    pub closure: Vec<Vec<String>>,
    pub basic: bool,
    pub robust: bool,
    pub witness: Option<Vec<String>>,
}

pub fn cmd_verify(inst: &Instance) -> Result<Certificate, CliError> {
    let di = digraph_of(inst)?;
    let d = &di.digraph;
    let f = dijoin_family(di);
    let g = validate(d, &f)?;
    let a = &g.analysis;
    let cls = g.classify()?;
    let p = VerifyPayload {
        family: shores_to_labels(d, f.sets()),
        points: sets_to_labels(d, g.points()),
        tight_nodes: vertex_labels(d, a.tight_nodes),
        active_nodes: vertex_labels(d, a.active_nodes),
        dim: a.dim,
        kappa_t: a.kappa_t,
        slack: a.slack,
        tight_dicut_shores: shores_to_labels(d, &a.tight_dicut_shores),
        closure: shores_to_labels(d, g.closure.sets()),
        basic: cls.basic,
        robust: cls.robust,
        witness: cls.witness.map(|u| vertex_labels(d, u)),
    };
    certify(format!("verify {}", inst.name()), inst, to_value(&p))
}

fn incident_count(d: &Digraph, j: ArcSet, v: usize) -> usize {
    j.inter(d.incident_arcs(v)).len()
}

fn recheck_verify(di: &DigraphInstance, p: &VerifyPayload) -> Result<Vec<Check>, CliError> {
    let d = &di.digraph;
    let mut c = Checklist::default();
    let family = Family::new(labels_to_shores(d, &p.family)?);
    let points = labels_to_sets(d, &p.points)?;
    let g = validate(d, &family)?;
    let mut sorted = points.clone();
    sorted.sort();
    c.push("points are exactly the face points", sorted == g.points());
    c.push(
        "every point is a dijoin meeting each family dicut once",
        points.iter().all(|&j| {
            d.is_dijoin(j)
                && family
                    .sets()
                    .iter()
                    .all(|&u| j.inter(d.delta_out(u)).len() == 1)
        }),
    );
    let tight = VertexSet::from_indices(
        (0..d.num_vertices()).filter(|&v| points.iter().all(|&j| incident_count(d, j, v) == 1)),
    );
    c.push(
        "tight nodes recomputed from the points",
        vertex_labels(d, tight) == p.tight_nodes,
    );
    c.push(
        "active nodes are the remaining nodes",
        vertex_labels(d, d.all_vertices().minus(tight)) == p.active_nodes,
    );
    c.push(
        "dimension equals the affine rank of the points",
        affine_dim(&points, d.num_arcs()) == Some(p.dim),
    );
    let kappa = u8::from(tight == d.all_vertices());
    c.push(
        "slack + tight nodes + dimension = arcs + kappa",
        p.kappa_t == kappa && p.slack + tight.len() + p.dim == d.num_arcs() + usize::from(kappa),
    );
    let shores = d.dicut_shores(DEFAULT_DICUT_CAP)?;
    let tight_shores: Vec<VertexSet> = shores
        .into_iter()
        .filter(|&u| points.iter().all(|&j| j.inter(d.delta_out(u)).len() == 1))
        .collect();
    let mut listed = labels_to_shores(d, &p.tight_dicut_shores)?;
    listed.sort();
    let mut want = tight_shores;
    want.sort();
    c.push("tight dicut shores recomputed from the points", listed == want);
    let cl = Family::new(labels_to_shores(d, &p.closure)?);
    c.push("closure recomputed", closure(d, &family)? == cl);
    let cls = g.classify()?;
    c.push(
        "basic and robust flags recomputed",
        cls.basic == p.basic
            && cls.robust == p.robust
            && cls.witness.map(|u| vertex_labels(d, u)) == p.witness,
    );
    Ok(c.into_vec())
}

// ---------------------------------------------------------------- basis

#[derive(Debug, Serialize, Deserialize)]
pub struct BasisEntry {
    pub method: String,
    pub vectors: Vec<Vec<String>>,
    pub provenance: String,
    pub divisors: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CrossEntry {
    /// Row i writes oracle vector i over the recursive basis.
    pub oracle_over_recursive: Vec<Vec<String>>,
    pub recursive_over_oracle: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LatticeEntry {
    pub g: String,
    pub vectors: Vec<Vec<String>>,
    pub divisors: Vec<String>,
    pub index: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RestrictedEntry {
    pub support: Vec<String>,
    pub min_capacity: u64,
    pub points: Vec<Vec<String>>,
    pub rank: usize,
    pub support_in_span: bool,
    pub support_in_lattice: bool,
    pub index: String,
    pub two_dijoin_partition: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BasisPayload {
    pub face: String,
    pub family: Vec<Vec<String>>,
    pub points: Vec<Vec<String>>,
    pub span_dim: usize,
    pub bases: Vec<BasisEntry>,
    pub cross: Option<CrossEntry>,
    pub lattice: Option<LatticeEntry>,
    pub restricted: Option<RestrictedEntry>,
}

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

/// Family for a strengthening face: as given, or the minimum-capacity dicut shores.
fn scr_family(di: &DigraphInstance) -> Result<Family, CliError> {
    if let Some(f) = &di.family {
        return Ok(f.clone());
    }
    let d = &di.digraph;
    let c = di.support();
    let tau = min_dicut_capacity(d, c)?;
    Ok(Family::new(
        d.dicut_shores(DEFAULT_DICUT_CAP)?
            .into_iter()
            .filter(|&u| d.delta_out(u).inter(c).len() as u64 == tau),
    ))
}

fn face_points(di: &DigraphInstance, face: &str, f: &Family) -> Result<Vec<ArcSet>, CliError> {
    match face {
        "dijoin" => Ok(validate(&di.digraph, f)?.points().to_vec()),
        "strengthening" => Ok(enumerate_scr_face_points(&di.digraph, f)?.points),
        other => Err(CliError::Input(format!("unknown face kind {other:?}"))),
    }
}

fn express_all(basis: &[ArcSet], m: usize, vs: &[ArcSet]) -> Result<Vec<Vec<String>>, CliError> {
    vs.iter()
        .map(|&v| Ok(strs(&express_in_basis(basis, m, &indicator(v, m))?)))
        .collect()
}

pub fn cmd_basis(inst: &Instance, method: Method) -> Result<Certificate, CliError> {
    let di = digraph_of(inst)?;
    let d = &di.digraph;
    let m = d.num_arcs();
    let dij = d.is_bipartite() && !di.is_capacitated();
    let (face, family) = if dij {
        ("dijoin", dijoin_family(di))
    } else {
        ("strengthening", scr_family(di)?)
    };
    let points = face_points(di, face, &family)?;
    let mut bases = Vec::new();
    let mut lattice = None;
    let gcd_ok = dij || dijoin::apps::family_gcd(d, &family).is_one();
    if gcd_ok {
        if matches!(method, Method::Oracle | Method::Both) {
            let b = integral_basis_oracle(&points, m, DEFAULT_SEARCH_BUDGET)?;
            bases.push(("oracle", b.points, "search".to_string()));
        }
        if matches!(method, Method::Recursive | Method::Both) {
            let (pts, prov) = if dij {
                let b = integral_basis_recursive(&validate(d, &family)?)?;
                (b.points, b.provenance)
            } else {
                let b = scr_integral_basis(d, &family)?;
                (b.basis.points, b.basis.provenance)
            };
            let prov = if dij {
                provenance_str(&prov)
            } else {
                format!("pulled back from {}", provenance_str(&prov))
            };
            bases.push(("recursive", pts, prov));
        }
    } else {
        let rep = lattice_report(d, &family)?;
        lattice = Some(LatticeEntry {
            g: rep.g.to_string(),
            vectors: sets_to_labels(d, &rep.lattice_basis),
            divisors: strs(&rep.divisors),
            index: rep.index.to_string(),
        });
    }
    let entries: Vec<BasisEntry> = bases
        .iter()
        .map(|(name, pts, prov)| {
            let cert = verify_integral_basis(&points, m, pts)?;
            Ok(BasisEntry {
                method: (*name).into(),
                vectors: sets_to_labels(d, pts),
                provenance: prov.clone(),
                divisors: strs(&cert.divisors),
            })
        })
        .collect::<Result<_, CliError>>()?;
    let cross = if bases.len() == 2 {
        Some(CrossEntry {
            oracle_over_recursive: express_all(&bases[1].1, m, &bases[0].1)?,
            recursive_over_oracle: express_all(&bases[0].1, m, &bases[1].1)?,
        })
    } else {
        None
    };
    let restricted = if di.is_capacitated() {
        Some(restricted_entry(di)?)
    } else {
        None
    };
    let p = BasisPayload {
        face: face.into(),
        family: shores_to_labels(d, family.sets()),
        points: sets_to_labels(d, &points),
        span_dim: linear_rank(&points, m),
        bases: entries,
        cross,
        lattice,
        restricted,
    };
    certify(
        format!("basis --method={} {}", method.name(), inst.name()),
        inst,
        to_value(&p),
    )
}

fn support_lattice_facts(points: &[ArcSet], c: ArcSet, m: usize) -> (usize, bool, bool, String) {
    let pm = point_matrix(points, m, false);
    let r = rank_int(&pm);
    let one_c = indicator(c, m);
    let mut with = pm.clone();
    with.push_row(one_c.clone());
    let in_span = rank_int(&with) == r;
    let in_lat = in_lattice(&pm, &one_c);
    let index = sublattice_index(&pm, &saturate(&pm.to_rat()))
        .map(|i| i.to_string())
        .unwrap_or_else(|e| e.to_string());
    (r, in_span, in_lat, index)
}

fn restricted_entry(di: &DigraphInstance) -> Result<RestrictedEntry, CliError> {
    let d = &di.digraph;
    let m = d.num_arcs();
    let c = di.support();
    let points = restricted_face(d, c)?;
    let (rank, in_span, in_lat, index) = support_lattice_facts(&points, c, m);
    Ok(RestrictedEntry {
        support: arc_labels(d, c),
        min_capacity: min_dicut_capacity(d, c)?,
        points: sets_to_labels(d, &points),
        rank,
        support_in_span: in_span,
        support_in_lattice: in_lat,
        index,
        two_dijoin_partition: partition_into_dijoins(d, c, 2).map(|p| sets_to_labels(d, &p)),
    })
}

fn combination(rows: &[ArcSet], coeffs: &[BigInt], m: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); m];
    for (r, c) in rows.iter().zip(coeffs) {
        for a in r.iter() {
            v[a] += c;
        }
    }
    v
}

fn parse_ints(v: &[String]) -> Result<Vec<BigInt>, CliError> {
    v.iter().map(|s| parse_int(s)).collect()
}

fn recheck_basis(di: &DigraphInstance, p: &BasisPayload) -> Result<Vec<Check>, CliError> {
    let d = &di.digraph;
    let m = d.num_arcs();
    let mut c = Checklist::default();
    let family = Family::new(labels_to_shores(d, &p.family)?);
    let points = labels_to_sets(d, &p.points)?;
    let fresh = face_points(di, &p.face, &family)?;
    c.push("points are exactly the face points", points == fresh);
    c.push(
        "span dimension recomputed",
        linear_rank(&points, m) == p.span_dim,
    );
    let mut parsed = Vec::new();
    for b in &p.bases {
        let vs = labels_to_sets(d, &b.vectors)?;
        let name = &b.method;
        c.push(
            format!("{name} basis vectors are face points"),
            vs.iter().all(|v| fresh.contains(v)),
        );
        c.push(format!("{name} basis size equals the span dimension"), vs.len() == p.span_dim);
        let cert = verify_integral_basis(&fresh, m, &vs);
        c.push(
            format!("{name} basis is an integral basis (divisors all one)"),
            cert.as_ref().is_ok_and(|k| strs(&k.divisors) == b.divisors),
        );
        parsed.push(vs);
    }
    if let Some(x) = &p.cross {
        let ok = |from: &[ArcSet], over: &[ArcSet], rows: &[Vec<String>]| -> Result<bool, CliError> {
            if rows.len() != from.len() {
                return Ok(false);
            }
            for (v, r) in from.iter().zip(rows) {
                if combination(over, &parse_ints(r)?, m) != indicator(*v, m) {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        c.push(
            "oracle basis is an integer combination of the recursive basis",
            parsed.len() == 2 && ok(&parsed[0], &parsed[1], &x.oracle_over_recursive)?,
        );
        c.push(
            "recursive basis is an integer combination of the oracle basis",
            parsed.len() == 2 && ok(&parsed[1], &parsed[0], &x.recursive_over_oracle)?,
        );
    }
    if let Some(l) = &p.lattice {
        let g = parse_int(&l.g)?;
        c.push(
            "g is the gcd of the family right-hand sides",
            dijoin::apps::family_gcd(d, &family) == g,
        );
        let vs = labels_to_sets(d, &l.vectors)?;
        c.push(
            "lattice basis vectors are face points",
            vs.iter().all(|v| fresh.contains(v)),
        );
        c.push(
            "lattice basis is independent",
            linear_rank(&vs, m) == vs.len() && vs.len() == p.span_dim,
        );
        c.push(
            "every face point is an integer combination of the lattice basis",
            fresh.iter().all(|&q| express_in_basis(&vs, m, &indicator(q, m)).is_ok()),
        );
        let sat = saturate(&point_matrix(&vs, m, false).to_rat());
        c.push(
            "g times every integral vector of the span lies in the lattice",
            sat.rows_iter().all(|row| {
                let scaled: Vec<BigInt> = row.iter().map(|x| x * &g).collect();
                express_in_basis(&vs, m, &scaled).is_ok()
            }),
        );
        let divs = parse_ints(&l.divisors)?;
        c.push(
            "index is the product of the divisors",
            divs.iter().fold(BigInt::one(), |a, x| a * x) == parse_int(&l.index)?,
        );
    }
    if let Some(r) = &p.restricted {
        let cs = parse_arcs(d, &r.support)?;
        c.push("support is the set of positive-capacity arcs", cs == di.support());
        c.push(
            "minimum dicut capacity recomputed",
            min_dicut_capacity(d, cs)? == r.min_capacity,
        );
        let rp = labels_to_sets(d, &r.points)?;
        c.push("restricted points recomputed", rp == restricted_face(d, cs)?);
        let (rank, in_span, in_lat, index) = support_lattice_facts(&rp, cs, m);
        c.push("restricted rank recomputed", rank == r.rank);
        c.push("support vector span membership recomputed", in_span == r.support_in_span);
        c.push("support vector lattice membership recomputed", in_lat == r.support_in_lattice);
        c.push("lattice index recomputed", index == r.index);
        let part_ok = match &r.two_dijoin_partition {
            Some(parts) => {
                let ps = labels_to_sets(d, parts)?;
                ps.len() == 2
                    && ps[0].inter(ps[1]).is_empty()
                    && ps[0].union(ps[1]) == cs
                    && ps.iter().all(|&j| d.is_dijoin(j))
            }
            None => partition_into_dijoins(d, cs, 2).is_none(),
        };
        c.push("two-dijoin partition claim recomputed", part_ok);
    }
    Ok(c.into_vec())
}

// ---------------------------------------------------------------- partition

#[derive(Debug, Serialize, Deserialize)]
pub struct Term {
    pub dijoin: Vec<String>,
    pub lambda: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PartitionPayload {
    pub tau: u64,
    pub min_dicut_shores: Vec<Vec<String>>,
    pub terms: Vec<Term>,
}

pub fn cmd_partition(inst: &Instance) -> Result<Certificate, CliError> {
    let di = digraph_of(inst)?;
    uncapacitated(di)?;
    let d = &di.digraph;
    let w = woodall_partition(d)?;
    let p = PartitionPayload {
        tau: w.tau,
        min_dicut_shores: shores_to_labels(d, w.family.sets()),
        terms: w
            .terms
            .iter()
            .map(|(j, l)| Term {
                dijoin: arc_labels(d, *j),
                lambda: l.to_string(),
            })
            .collect(),
    };
    certify(format!("partition {}", inst.name()), inst, to_value(&p))
}

fn recheck_partition(di: &DigraphInstance, p: &PartitionPayload) -> Result<Vec<Check>, CliError> {
    let d = &di.digraph;
    let m = d.num_arcs();
    let mut c = Checklist::default();
    let (tau, fam) = min_dicut_family(d)?;
    c.push("tau is the minimum dicut size", tau == p.tau);
    c.push(
        "minimum dicut shores recomputed",
        labels_to_shores(d, &p.min_dicut_shores)? == fam.sets(),
    );
    let mut support = Vec::new();
    let mut lambdas = Vec::new();
    for t in &p.terms {
        support.push(parse_arcs(d, &t.dijoin)?);
        lambdas.push(parse_int(&t.lambda)?);
    }
    c.push(
        "sum of lambda_J times 1_J is the all-ones vector",
        combination(&support, &lambdas, m).iter().all(|x| x.is_one()),
    );
    c.push(
        "sum of lambda equals tau",
        lambdas.iter().sum::<BigInt>() == BigInt::from(p.tau),
    );
    c.push(
        "support points are strengthening sets meeting every minimum dicut once",
        support.iter().all(|&j| {
            d.is_strengthening_set(j)
                && fam
                    .sets()
                    .iter()
                    .all(|&u| j.inter(d.delta_out(u)).len() == 1)
        }),
    );
    c.push(
        "support is an integral basis of its span",
        verify_integral_basis(&support, m, &support).is_ok(),
    );
    Ok(c.into_vec())
}

// ---------------------------------------------------------------- padic

#[derive(Debug, Serialize, Deserialize)]
pub struct Entry {
    pub dijoin: Vec<String>,
    pub value: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PadicPayload {
    pub prime: u64,
    pub tau: u64,
    pub entries: Vec<Entry>,
    pub value: String,
}

pub fn cmd_padic(inst: &Instance, prime: u64) -> Result<Certificate, CliError> {
    let di = digraph_of(inst)?;
    uncapacitated(di)?;
    let d = &di.digraph;
    let pk = p_adic_packing(d, prime)?;
    let (tau, _) = min_dicut_family(d)?;
    let p = PadicPayload {
        prime,
        tau,
        entries: pk
            .entries
            .iter()
            .map(|(j, y)| Entry {
                dijoin: arc_labels(d, *j),
                value: rat_str(y),
            })
            .collect(),
        value: rat_str(&pk.value),
    };
    certify(format!("padic --prime={prime} {}", inst.name()), inst, to_value(&p))
}

fn power_of(den: &BigInt, p: u64) -> bool {
    let p = BigInt::from(p);
    let mut x = den.clone();
    while (&x % &p).is_zero() {
        x /= &p;
    }
    x.is_one()
}

fn recheck_padic(di: &DigraphInstance, p: &PadicPayload) -> Result<Vec<Check>, CliError> {
    let d = &di.digraph;
    let m = d.num_arcs();
    let mut c = Checklist::default();
    c.push("modulus is prime", dijoin::apps::is_prime(p.prime));
    let (tau, _) = min_dicut_family(d)?;
    c.push("tau is the minimum dicut size", tau == p.tau);
    let mut sets = Vec::new();
    let mut ys = Vec::new();
    for e in &p.entries {
        sets.push(parse_arcs(d, &e.dijoin)?);
        ys.push(parse_rat(&e.value)?);
    }
    c.push("every entry is a dijoin", sets.iter().all(|&j| d.is_dijoin(j)));
    c.push("every entry is positive", ys.iter().all(|y| y.is_positive()));
    c.push(
        "every denominator is a power of the prime",
        ys.iter().all(|y| power_of(y.denom(), p.prime)),
    );
    let total: Rat = ys.iter().sum();
    c.push("value is the sum of the entries", total == parse_rat(&p.value)?);
    c.push("value equals tau", total == Rat::from_integer(BigInt::from(tau)));
    let mut load = vec![Rat::zero(); m];
    for (j, y) in sets.iter().zip(&ys) {
        for a in j.iter() {
            load[a] += y;
        }
    }
    c.push(
        "congestion is at most one on every arc",
        load.iter().all(|l| *l <= Rat::one()),
    );
    c.push("support has at most 2|A| entries", sets.len() <= 2 * m);
    Ok(c.into_vec())
}

// ---------------------------------------------------------------- orient

#[derive(Debug, Serialize, Deserialize)]
pub struct OrientTerm {
    /// Head of each hyperedge, in hyperedge order.
    pub heads: Vec<String>,
    pub lambda: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OrientPayload {
    pub tau: usize,
    pub hyperedges: Vec<String>,
    pub terms: Vec<OrientTerm>,
}

pub fn cmd_orient(inst: &Instance) -> Result<Certificate, CliError> {
    let hi = hypergraph_of(inst)?;
    let h = &hi.hypergraph;
    let asg = hypergraph_orientation_assignment(h)?;
    let p = OrientPayload {
        tau: h.tau(),
        hyperedges: hi.edge_ids.clone(),
        terms: asg
            .terms
            .iter()
            .map(|(o, l)| OrientTerm {
                heads: o.head.iter().map(|&v| h.labels[v].clone()).collect(),
                lambda: l.to_string(),
            })
            .collect(),
    };
    certify(format!("orient {}", inst.name()), inst, to_value(&p))
}

fn recheck_orient(hi: &HypergraphInstance, p: &OrientPayload) -> Result<Vec<Check>, CliError> {
    let h = &hi.hypergraph;
    let mut c = Checklist::default();
    c.push("tau is the hyperedge size", p.tau == h.tau());
    c.push("hyperedge ids match the instance", p.hyperedges == hi.edge_ids);
    c.push(
        "connectivity condition holds for every proper subset",
        h.connectivity_witness().is_none(),
    );
    let mut terms = Vec::new();
    for t in &p.terms {
        let head = t
            .heads
            .iter()
            .map(|l| {
                h.labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| CliError::Input(format!("unknown vertex {l:?} in payload")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        terms.push((Orientation { head }, parse_int(&t.lambda)?));
    }
    c.push(
        "every head lies in its hyperedge",
        terms.iter().all(|(o, _)| {
            o.head.len() == h.edges.len() && o.head.iter().zip(&h.edges).all(|(v, e)| e.contains(v))
        }),
    );
    let sums_ok = h.edges.iter().enumerate().all(|(i, e)| {
        e.iter().all(|&v| {
            terms
                .iter()
                .filter(|(o, _)| o.head.get(i) == Some(&v))
                .map(|(_, l)| l)
                .sum::<BigInt>()
                .is_one()
        })
    });
    c.push("lambda sums to one for every hyperedge and member", sums_ok);
    c.push(
        "support is at most (tau - 1)|E| + 1",
        terms.len() <= (h.tau() - 1) * h.edges.len() + 1,
    );
    c.push(
        "every support orientation is strongly connected",
        terms.iter().all(|(o, _)| h.is_sc_orientation(o)),
    );
    c.push(
        "every coefficient is nonzero",
        terms.iter().all(|(_, l)| !l.is_zero()),
    );
    Ok(c.into_vec())
}

/// Digraft of a digraph instance, with the sink complements as the default family.
pub fn digraft_of(inst: &Instance) -> Result<Digraft, CliError> {
    let di = digraph_of(inst)?;
    Ok(validate(&di.digraph, &dijoin_family(di))?)
}

