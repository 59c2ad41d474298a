// Acceptance suite: one PASS/FAIL line per criterion. Library results are
// checked against the brute-force oracles of the dijoin test suite, never
// against the library's own enumeration or linear algebra. Exits with code 4
// when any criterion fails.

#[path = "../../dijoin/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use dijoin::basis::{balanced_split, integral_basis_recursive, verify_integral_basis};
use dijoin::generate::{random_2ec_graph, random_digraft, random_digraph_tau2, rng};
use dijoin::mconvex::jump_free;
use dijoin::{ArcSet, Digraft, Digraph, VertexSet};
use dijoin_cli::certificate::Certificate;
use dijoin_cli::commands::{
    cmd_basis, cmd_orient, cmd_padic, cmd_partition, recheck, BasisPayload, Method, OrientPayload,
    PadicPayload, PartitionPayload,
};
use dijoin_cli::fixtures;
use dijoin_cli::instance::{digraph_instance, HypergraphInstance, Instance};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dump(d: &Digraph, g: Option<&Digraft>) -> String {
    let inst = digraph_instance("falsifier", d.clone(), g.map(|g| g.family().clone()), None);
    format!("\n--- falsifying instance ---\n{}---", inst.to_text())
}

fn fixture(name: &str) -> Result<Instance, String> {
    fixtures::load(name)
        .ok_or_else(|| format!("no bundled fixture named {name}"))?
        .map_err(|e| format!("{name}: {e}"))
}

fn self_verifying(cert: &Certificate, inst: &Instance) -> Result<(), String> {
    ensure(cert.all_pass(), || format!("{}: failed checks {:?}", cert.command, cert.failed()))?;
    let again = recheck(cert, inst).map_err(|e| e.to_string())?;
    ensure(again == cert.checklist, || format!("{}: recheck disagrees", cert.command))
}

fn parse<T: serde::de::DeserializeOwned>(cert: &Certificate) -> Result<T, String> {
    serde_json::from_value(cert.result.clone()).map_err(|e| e.to_string())
}

fn arcs_of(d: &Digraph, labels: &[String]) -> Result<u128, String> {
    labels.iter().try_fold(0u128, |acc, l| {
        d.arc_index(l)
            .map(|a| acc | 1 << a)
            .ok_or_else(|| format!("unknown arc {l}"))
    })
}

fn bits_of(points: &[ArcSet]) -> Vec<u128> {
    points.iter().map(|p| p.bits()).collect()
}

fn brute_tau(n: usize, p: &[(usize, usize)], weight: u128) -> u32 {
    brute_dicut_shores(n, p)
        .into_iter()
        .map(|u| (leaving(p, u) & weight).count_ones())
        .min()
        .unwrap_or(0)
}

/// Row-style integer echelon form by Euclid on columns; rows of the result
/// generate the same lattice.
fn lattice_echelon(rows: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| m[i][c] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&p) = nz.first() {
                    m.swap(r, p);
                    r += 1;
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(r, p);
            for i in r + 1..m.len() {
                let q = m[i][c].div_euclid(m[r][c]);
                if q != 0 {
                    let pivot = m[r].clone();
                    for (x, &y) in m[i].iter_mut().zip(&pivot) {
                        *x -= q * y;
                    }
                }
            }
        }
    }
    m.truncate(r);
    m
}

fn in_integer_lattice(rows: &[Vec<i128>], v: &[i128]) -> bool {
    let e = lattice_echelon(rows);
    let mut rest = v.to_vec();
    for row in &e {
        let c = row.iter().position(|&x| x != 0).unwrap();
        if rest[c] % row[c] != 0 {
            return false;
        }
        let q = rest[c] / row[c];
        for k in 0..rest.len() {
            rest[k] -= q * row[k];
        }
    }
    rest.iter().all(|&x| x == 0)
}

fn integral_solution(rows: &[Vec<i128>], v: &[i128]) -> bool {
    match coefficients(rows, v) {
        Some((nums, d)) => d != 0 && nums.iter().all(|x| x % d == 0),
        None => false,
    }
}

// 1
fn fixture_bases() -> Outcome {
    let mut notes = Vec::new();
    for name in ["p2", "k22"] {
        let inst = fixture(name)?;
        let t = Instant::now();
        let cert = cmd_basis(&inst, Method::Both).map_err(|e| e.to_string())?;
        let took = t.elapsed();
        ensure(took < Duration::from_secs(1), || format!("{name}: {took:?}"))?;
        self_verifying(&cert, &inst)?;
        let Instance::Digraph(di) = &inst else { return Err("not a digraph".into()) };
        let d = &di.digraph;
        let (n, p, m) = (d.num_vertices(), pairs(d), d.num_arcs());
        let face = brute_dij_face(n, &p, &shore_bits(di.family.as_ref().ok_or("no family")?));
        let pl: BasisPayload = parse(&cert)?;
        ensure(pl.bases.len() == 2, || format!("{name}: {} bases", pl.bases.len()))?;
        let mut bases = Vec::new();
        for b in &pl.bases {
            let v: Vec<u128> = b.vectors.iter().map(|l| arcs_of(d, l)).collect::<Result<_, _>>()?;
            ensure(v.len() == 2, || format!("{name} {}: size {}", b.method, v.len()))?;
            ensure(b.divisors.iter().all(|x| x == "1"), || format!("{name}: divisors {:?}", b.divisors))?;
            ensure(oracle_is_integral_basis(&v, &face, m), || format!("{name} {}: not an integral basis", b.method))?;
            bases.push(to_rows(&v, m));
        }
        for (from, over) in [(0, 1), (1, 0)] {
            for v in &bases[from] {
                ensure(integral_solution(&bases[over], v), || format!("{name}: bases not mutually integral"))?;
            }
        }
        notes.push(format!("{name} {took:.1?}"));
    }
    Ok(notes.join(", "))
}

// 2
fn schrijver() -> Outcome {
    let inst = fixture("schrijver")?;
    let t = Instant::now();
    let cert = cmd_basis(&inst, Method::Both).map_err(|e| e.to_string())?;
    self_verifying(&cert, &inst)?;
    let Instance::Digraph(di) = &inst else { return Err("not a digraph".into()) };
    let d = &di.digraph;
    let (n, p, m) = (d.num_vertices(), pairs(d), d.num_arcs());
    let c = di.support().bits();
    let r = parse::<BasisPayload>(&cert)?.restricted.ok_or("no restricted-face report")?;
    let tau = brute_tau(n, &p, c);
    ensure(tau == 2 && r.min_capacity == 2, || format!("minimum capacity {} (brute {tau})", r.min_capacity))?;
    let min_cuts: Vec<u128> = brute_dicut_shores(n, &p)
        .into_iter()
        .map(|u| leaving(&p, u))
        .filter(|&l| (l & c).count_ones() == tau)
        .collect();
    let arcs_c: Vec<usize> = (0..m).filter(|&a| c >> a & 1 == 1).collect();
    let brute: Vec<u128> = (0u64..1 << arcs_c.len())
        .map(|s| (0..arcs_c.len()).filter(|&i| s >> i & 1 == 1).fold(0u128, |j, i| j | 1 << arcs_c[i]))
        .filter(|&j| min_cuts.iter().all(|&l| (l & j).count_ones() == 1) && brute_strengthening(n, &p, j))
        .collect();
    let mut reported: Vec<u128> = r.points.iter().map(|l| arcs_of(d, l)).collect::<Result<_, _>>()?;
    reported.sort();
    ensure(brute.len() == 4 && reported == brute, || format!("{} restricted points, brute {}", reported.len(), brute.len()))?;
    let rows = to_rows(&brute, m);
    let one_c: Vec<i128> = (0..m).map(|a| (c >> a & 1) as i128).collect();
    let mut with = rows.clone();
    with.push(one_c.clone());
    ensure(rank(&with) == rank(&rows), || "1_C is outside the span".into())?;
    ensure(!in_integer_lattice(&rows, &one_c), || "1_C lies in the lattice".into())?;
    ensure(r.support_in_span && !r.support_in_lattice, || "report disagrees on span/lattice".into())?;
    ensure(r.index != "1", || format!("index {}", r.index))?;
    let splittable = (0u64..1 << arcs_c.len()).any(|s| {
        let j: u128 = (0..arcs_c.len()).filter(|&i| s >> i & 1 == 1).fold(0, |j, i| j | 1 << arcs_c[i]);
        brute_dijoin(n, &p, j) && brute_dijoin(n, &p, c & !j)
    });
    ensure(!splittable, || "C splits into two dijoins".into())?;
    ensure(r.two_dijoin_partition.is_none(), || "report claims a partition".into())?;
    let took = t.elapsed();
    ensure(took < Duration::from_secs(30), || format!("took {took:?}"))?;
    Ok(format!("4 points, index {}, no 2-partition, {took:.1?}", r.index))
}

const GEN_SEED: u64 = 20_240_601;

// 3
fn basis_suite() -> Outcome {
    let mut r = rng(GEN_SEED);
    let mut deep = 0;
    for _ in 0..500 {
        let g = random_digraft(&mut r, 8, 14);
        let d = g.digraph();
        let (n, p, m) = (d.num_vertices(), pairs(d), d.num_arcs());
        let face = brute_dij_face(n, &p, &shore_bits(g.family()));
        ensure(bits_of(g.points()) == face, || format!("face enumeration differs{}", dump(d, Some(&g))))?;
        let b = integral_basis_recursive(&g).map_err(|e| format!("{e}{}", dump(d, Some(&g))))?;
        verify_integral_basis(g.points(), m, &b.points).map_err(|e| format!("{e}{}", dump(d, Some(&g))))?;
        ensure(oracle_is_integral_basis(&bits_of(&b.points), &face, m), || {
            format!("minor gcd is not one{}", dump(d, Some(&g)))
        })?;
        deep += usize::from(b.provenance.depth() > 0);
    }
    Ok(format!("500 digrafts, {deep} via contraction"))
}

// 4
fn jump_suite() -> Outcome {
    let mut r = rng(GEN_SEED + 1);
    let (mut checks, mut instances) = (0, 0);
    for _ in 0..600 {
        let g = random_digraft(&mut r, 8, 14);
        let d = g.digraph();
        let (n, p) = (d.num_vertices(), pairs(d));
        let face = brute_dij_face(n, &p, &shore_bits(g.family()));
        let mut here = 0;
        for u in brute_dicut_shores(n, &p) {
            let out = leaving(&p, u);
            for &jx in &face {
                for &jy in &face {
                    let (lx, ly) = ((jx & out).count_ones(), (jy & out).count_ones());
                    for target in lx + 1..ly {
                        let j = jump_free(&g, ArcSet(jx), ArcSet(jy), VertexSet(u), target as usize)
                            .map_err(|e| format!("{e}{}", dump(d, Some(&g))))?;
                        ensure(face.contains(&j.bits()) && (j.bits() & out).count_ones() == target, || {
                            format!("bad jump point at shore {u:#b}{}", dump(d, Some(&g)))
                        })?;
                        here += 1;
                    }
                }
            }
        }
        checks += here;
        instances += usize::from(here > 0);
    }
    ensure(checks > 0, || "no pair with gap two".into())?;
    Ok(format!("{checks} intermediate levels on {instances} digrafts"))
}

// 5
fn slack_suite() -> Outcome {
    let mut r = rng(GEN_SEED + 2);
    let (mut positive, mut zero) = (0, 0);
    for _ in 0..500 {
        let g = random_digraft(&mut r, 8, 14);
        let d = g.digraph();
        let (n, p, m) = (d.num_vertices(), pairs(d), d.num_arcs());
        let face = brute_dij_face(n, &p, &shore_bits(g.family()));
        let inc = |v: usize| -> u128 {
            (0..m).filter(|&a| p[a].0 == v || p[a].1 == v).fold(0, |s, a| s | 1 << a)
        };
        let tight: Vec<bool> = (0..n).map(|v| face.iter().all(|&j| (j & inc(v)).count_ones() == 1)).collect();
        let n_tight = tight.iter().filter(|&&t| t).count();
        let kappa = usize::from(n_tight == n);
        let slack = (m + kappa) as i64 - n_tight as i64 - common::affine_dim(&face, m) as i64;
        ensure(slack == g.analysis.slack as i64, || format!("slack {} vs brute {slack}{}", g.analysis.slack, dump(d, Some(&g))))?;
        let sources: u64 = (0..n)
            .filter(|&v| p.iter().all(|&(_, h)| h != v))
            .fold(0, |s, v| s | 1 << v);
        let active: u64 = (0..n).filter(|&v| !tight[v]).fold(0, |s, v| s | 1 << v) & sources;
        let full = (1u64 << n) - 1;
        let separating = brute_dicut_shores(n, &p).into_iter().any(|u| {
            let k = u.count_ones() as usize;
            face.iter().all(|&j| (j & leaving(&p, u)).count_ones() == 1)
                && k > 1
                && k + 1 < n
                && u & active != 0
                && (full & !u) & active != 0
        });
        ensure((slack >= 1) == separating, || format!("slack {slack}, separating {separating}{}", dump(d, Some(&g))))?;
        if slack >= 1 {
            positive += 1;
        } else {
            zero += 1;
        }
    }
    ensure(positive > 0 && zero > 0, || format!("one side never occurs: {positive} positive, {zero} zero"))?;
    Ok(format!("{positive} with slack >= 1, {zero} with slack 0"))
}

// 6
fn compose_suite() -> Outcome {
    let mut r = rng(GEN_SEED + 3);
    let (mut checked, mut tight) = (0, 0);
    for _ in 0..1000 {
        let g = random_digraft(&mut r, 8, 14).augmented();
        let d = g.digraph();
        let (n, p, m) = (d.num_vertices(), pairs(d), d.num_arcs());
        let face = brute_dij_face(n, &p, &shore_bits(g.family()));
        let Some(u) = brute_dicut_shores(n, &p).into_iter().find(|&u| {
            let k = u.count_ones() as usize;
            k > 1 && k + 2 <= n && face.iter().any(|&j| (j & leaving(&p, u)).count_ones() == 1)
        }) else {
            continue;
        };
        let out = leaving(&p, u);
        let fail = |what: &str| format!("{what} at shore {u:#b}{}", dump(d, Some(&g)));
        let pair = g.contract(VertexSet(u)).map_err(|e| fail(&e.to_string()))?;
        let b1 = integral_basis_recursive(&pair.child1).map_err(|e| fail(&e.to_string()))?;
        let b2 = integral_basis_recursive(&pair.child2).map_err(|e| fail(&e.to_string()))?;
        let b = pair.compose_bases(&b1.points, &b2.points).map_err(|e| fail(&e.to_string()))?;
        let bb = bits_of(&b);
        let rows = to_rows(&bb, m);
        ensure(b.len() == b1.points.len() + b2.points.len() - out.count_ones() as usize, || fail("size"))?;
        ensure(rank(&rows) == b.len(), || fail("dependent"))?;
        ensure(bb.iter().all(|j| face.contains(j) && (j & out).count_ones() == 1), || fail("not a point"))?;
        ensure(gcd_maximal_minors(&rows) == 1, || fail("not an integral basis of its span"))?;
        // integer combinations agreeing on the crossing arcs merge into the lattice of B
        let mut x = vec![0i128; pair.map1.len()];
        let mut y = vec![0i128; pair.map2.len()];
        for &p1 in pair.child1.points() {
            let coef: i128 = r.gen_range(-3..=3);
            let a = p1.iter().map(|k| pair.map1[k]).find(|&a| out >> a & 1 == 1).ok_or_else(|| fail("crossing"))?;
            let q = pair
                .child2
                .points()
                .iter()
                .find(|q| q.iter().any(|k| pair.map2[k] == a))
                .ok_or_else(|| fail("no agreeing point"))?;
            p1.iter().for_each(|k| x[k] += coef);
            q.iter().for_each(|k| y[k] += coef);
        }
        let mut z = vec![0i128; m];
        for (k, &a) in pair.map1.iter().enumerate() {
            z[a] = x[k];
        }
        for (k, &a) in pair.map2.iter().enumerate() {
            if out >> a & 1 == 1 {
                ensure(z[a] == y[k], || fail("disagreeing crossing values"))?;
            }
            z[a] = y[k];
        }
        let xb: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        let yb: Vec<BigInt> = y.iter().map(|&v| BigInt::from(v)).collect();
        let zl = pair.odot(&xb, &yb).map_err(|e| fail(&e.to_string()))?;
        ensure(zl.iter().zip(&z).all(|(a, b)| *a == BigInt::from(*b)), || fail("odot differs"))?;
        ensure(integral_solution(&rows, &z), || fail("merged combination outside the lattice"))?;
        let parent_tight = face.iter().all(|&j| (j & out).count_ones() == 1);
        if parent_tight {
            ensure(rank(&to_rows(&face, m)) == b.len(), || fail("tight span"))?;
            tight += 1;
        }
        checked += 1;
    }
    ensure(checked >= 100 && tight > 0, || format!("only {checked} contractions ({tight} tight)"))?;
    Ok(format!("{checked} contractions, {tight} along tight dicuts"))
}

fn tau2_instances(count: usize) -> Vec<Instance> {
    let mut r = rng(GEN_SEED + 4);
    (0..count)
        .map(|i| digraph_instance(&format!("tau2-{i}"), random_digraph_tau2(&mut r, 8, 14), None, None))
        .collect()
}

fn digraph(inst: &Instance) -> &Digraph {
    match inst {
        Instance::Digraph(d) => &d.digraph,
        Instance::Hypergraph(_) => unreachable!("generated digraphs"),
    }
}

// 7
fn partition_suite() -> Outcome {
    let insts = tau2_instances(80);
    for inst in &insts {
        let d = digraph(inst);
        let (n, p, m) = (d.num_vertices(), pairs(d), d.num_arcs());
        let fail = |what: &str| format!("{what}{}", dump(d, None));
        let cert = cmd_partition(inst).map_err(|e| fail(&e.to_string()))?;
        self_verifying(&cert, inst).map_err(|e| fail(&e))?;
        let pl: PartitionPayload = parse(&cert)?;
        let tau = brute_tau(n, &p, u128::MAX);
        ensure(tau >= 2 && pl.tau == tau as u64, || fail("tau"))?;
        let mut sum = vec![BigInt::zero(); m];
        let mut total = BigInt::zero();
        let mut support = Vec::new();
        for t in &pl.terms {
            let j = arcs_of(d, &t.dijoin)?;
            let l: BigInt = t.lambda.parse().map_err(|_| fail("lambda"))?;
            (0..m).filter(|&a| j >> a & 1 == 1).for_each(|a| sum[a] += &l);
            total += &l;
            support.push(j);
        }
        ensure(sum.iter().all(One::is_one), || fail("sum is not the all-ones vector"))?;
        ensure(total == BigInt::from(tau), || fail("sum of lambda"))?;
        let min_cuts: Vec<u128> = brute_dicut_shores(n, &p)
            .into_iter()
            .map(|u| leaving(&p, u))
            .filter(|l| l.count_ones() == tau)
            .collect();
        ensure(
            support.iter().all(|&j| brute_strengthening(n, &p, j) && min_cuts.iter().all(|l| (l & j).count_ones() == 1)),
            || fail("support point outside the face"),
        )?;
        let rows = to_rows(&support, m);
        ensure(rank(&rows) == support.len() && gcd_maximal_minors(&rows) == 1, || fail("support is not an integral basis"))?;
    }
    Ok(format!("{} digraphs with tau >= 2", insts.len()))
}

fn p_power(den: &BigInt, p: u64) -> bool {
    let p = BigInt::from(p);
    let mut x = den.clone();
    while (&x % &p).is_zero() {
        x /= &p;
    }
    x.is_one()
}

// 8
fn padic_suite() -> Outcome {
    let insts = tau2_instances(40);
    let mut max_support = 0;
    for inst in &insts {
        let d = digraph(inst);
        let (n, p, m) = (d.num_vertices(), pairs(d), d.num_arcs());
        let tau = brute_tau(n, &p, u128::MAX);
        for prime in [2u64, 3, 5] {
            let fail = |what: &str| format!("p={prime}: {what}{}", dump(d, None));
            let cert = cmd_padic(inst, prime).map_err(|e| fail(&e.to_string()))?;
            self_verifying(&cert, inst).map_err(|e| fail(&e))?;
            let pl: PadicPayload = parse(&cert)?;
            let mut load = vec![exactla::Rat::zero(); m];
            let mut value = exactla::Rat::zero();
            for e in &pl.entries {
                let j = arcs_of(d, &e.dijoin)?;
                ensure(brute_dijoin(n, &p, j), || fail("entry is not a dijoin"))?;
                let (a, b) = e.value.split_once('/').ok_or_else(|| fail("rational"))?;
                let y = exactla::Rat::new(a.parse().map_err(|_| fail("num"))?, b.parse().map_err(|_| fail("den"))?);
                ensure(y.is_positive() && p_power(y.denom(), prime), || fail("entry"))?;
                (0..m).filter(|&a| j >> a & 1 == 1).for_each(|a| load[a] += &y);
                value += &y;
            }
            ensure(value == exactla::Rat::from_integer(BigInt::from(tau)), || fail("value differs from tau"))?;
            ensure(load.iter().all(|l| *l <= exactla::Rat::one()), || fail("congestion above one"))?;
            ensure(pl.entries.len() <= 2 * m, || fail("support too large"))?;
            max_support = max_support.max(pl.entries.len());
        }
    }
    Ok(format!("{} digraphs x 3 primes, largest support {max_support}", insts.len()))
}

fn check_orientation(inst: &Instance) -> Result<usize, String> {
    let Instance::Hypergraph(hi) = inst else { return Err("not a hypergraph".into()) };
    let h = &hi.hypergraph;
    let cert = cmd_orient(inst).map_err(|e| e.to_string())?;
    self_verifying(&cert, inst)?;
    let pl: OrientPayload = parse(&cert)?;
    let index = |l: &String| h.labels.iter().position(|x| x == l).ok_or(format!("vertex {l}"));
    let mut terms = Vec::new();
    for t in &pl.terms {
        let heads: Vec<usize> = t.heads.iter().map(index).collect::<Result<_, _>>()?;
        terms.push((heads, t.lambda.parse::<i64>().map_err(|e| e.to_string())?));
    }
    for (i, e) in h.edges.iter().enumerate() {
        for &v in e {
            let s: i64 = terms.iter().filter(|(hd, _)| hd[i] == v).map(|(_, l)| l).sum();
            ensure(s == 1, || format!("{}: edge {i} vertex {v} sums to {s}", hi.name))?;
        }
    }
    let tau = h.edges[0].len();
    ensure(terms.len() <= (tau - 1) * h.edges.len() + 1, || format!("{}: support {}", hi.name, terms.len()))?;
    for (hd, _) in &terms {
        // a 2-uniform edge is an arc from its other end into its head
        let arcs: Vec<(usize, usize)> = h
            .edges
            .iter()
            .zip(hd)
            .map(|(e, &v)| (if e[0] == v { e[1] } else { e[0] }, v))
            .collect();
        ensure(brute_strong(h.labels.len(), &arcs), || format!("{}: orientation not strongly connected", hi.name))?;
    }
    Ok(terms.len())
}

// 9
fn orient_suite() -> Outcome {
    let tri = check_orientation(&fixture("triangle")?)?;
    let four = check_orientation(&fixture("four-cycle")?)?;
    ensure(tri == 2 && four == 2, || format!("fixture supports {tri}, {four}"))?;
    let mut r = rng(GEN_SEED + 5);
    let count = 150;
    for i in 0..count {
        let (n, edges) = random_2ec_graph(&mut r, 7, 12);
        ensure(brute_2ec(n, &edges), || "generator produced a bridge".into())?;
        let h = dijoin::apps::Hypergraph::new(
            (0..n).map(|v| format!("v{v}")).collect(),
            edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        )
        .map_err(|e| e.to_string())?;
        let inst = Instance::Hypergraph(HypergraphInstance {
            name: format!("graph-{i}"),
            hypergraph: h,
            edge_ids: (0..edges.len()).map(|e| format!("e{e}")).collect(),
        });
        check_orientation(&inst).map_err(|e| format!("{e}\n{}", inst.to_text()))?;
    }
    Ok(format!("triangle and four-cycle (2 orientations each), {count} random graphs"))
}

// 10
fn idp_suite() -> Outcome {
    let mut r = rng(GEN_SEED + 6);
    let (mut instances, mut splits, mut tries) = (0, 0, 0);
    while instances < 100 && tries < 20_000 {
        tries += 1;
        let g = random_digraft(&mut r, 8, 14);
        let c = g.classify().map_err(|e| e.to_string())?;
        if !(c.basic && c.robust) {
            continue;
        }
        instances += 1;
        let d = g.digraph();
        let (n, p, m) = (d.num_vertices(), pairs(d), d.num_arcs());
        let face = brute_dij_face(n, &p, &shore_bits(g.family()));
        for k in [2usize, 3] {
            for _ in 0..3 {
                let picked: Vec<u128> = (0..k).map(|_| *face.choose(&mut r).unwrap()).collect();
                let w: Vec<u32> = (0..m).map(|a| picked.iter().filter(|&&j| j >> a & 1 == 1).count() as u32).collect();
                let parts = balanced_split(&g, &w, k)
                    .ok_or_else(|| format!("no split of {picked:?}{}", dump(d, Some(&g))))?;
                let back: Vec<u32> = (0..m).map(|a| parts.iter().filter(|j| j.contains(a)).count() as u32).collect();
                ensure(parts.len() == k && back == w && parts.iter().all(|j| face.contains(&j.bits())), || {
                    format!("bad split of {picked:?}{}", dump(d, Some(&g)))
                })?;
                splits += 1;
            }
        }
    }
    ensure(instances > 0, || "no basic robust digraft generated".into())?;
    Ok(format!("{splits} sums re-split on {instances} basic robust digrafts"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("fixture bases on p2 and k22", fixture_bases),
        ("Schrijver restricted face", schrijver),
        ("recursive integral bases on 500 generated digrafts", basis_suite),
        ("jump-free intermediate points", jump_suite),
        ("slack characterisation", slack_suite),
        ("composition identities", compose_suite),
        ("integer dijoin partitions", partition_suite),
        ("p-adic dijoin packings", padic_suite),
        ("hypergraph orientation assignments", orient_suite),
        ("integer decomposition of sums", idp_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{:.1?}]", i + 1, t.elapsed()),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {reason} [{:.1?}]", i + 1, t.elapsed());
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(4);
    }
}
