// Brute-force oracles. None of these share code paths with the library:
// dicuts come from scanning every subset for entering arcs, connectivity
// from transitive closure, lattice facts from determinants.
#![allow(dead_code)]

use dijoin::{ArcSet, Digraph, Family, VertexSet};

pub fn p2() -> Digraph {
    Digraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap()
}

/// u1=0, u2=1, v1=2, v2=3, arcs u1v1, u1v2, u2v1, u2v2.
pub fn k22() -> Digraph {
    Digraph::from_pairs(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

pub fn k2n(n: usize) -> Digraph {
    let mut pairs = Vec::new();
    for s in 0..2 {
        for t in 0..n {
            pairs.push((s, 2 + t));
        }
    }
    Digraph::from_pairs(2 + n, &pairs).unwrap()
}

/// K_{2,2} on 0,1 -> 2,3 joined through arcs 0->6, 1->7 to sources 4,5 and sinks 6,7,8.
pub fn serial_join() -> Digraph {
    Digraph::from_pairs(
        9,
        &[(0, 2), (0, 3), (1, 2), (1, 3), (0, 6), (1, 7), (4, 6), (4, 8), (5, 7), (5, 8)],
    )
    .unwrap()
}

pub fn serial_join_shore() -> VertexSet {
    VertexSet::from_indices([0, 1, 2, 3])
}

/// Doubled arc 1->4 joined to K_{2,3} on sources 0,1 and sinks 2,3,5.
pub fn facet_join() -> Digraph {
    Digraph::from_pairs(
        6,
        &[(0, 2), (0, 3), (0, 5), (1, 2), (1, 3), (1, 4), (1, 4), (1, 5)],
    )
    .unwrap()
}

pub fn cycle3() -> Digraph {
    Digraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
}

pub fn sink_family(d: &Digraph) -> Family {
    let n = d.num_vertices();
    let full = (1u64 << n) - 1;
    let sets = (0..n)
        .filter(|&v| d.arcs().iter().all(|a| a.tail != v) && d.arcs().iter().any(|a| a.head == v))
        .map(|v| VertexSet(full & !(1 << v)));
    Family::new(sets)
}

pub fn pairs(d: &Digraph) -> Vec<(usize, usize)> {
    d.arcs().iter().map(|a| (a.tail, a.head)).collect()
}

pub fn brute_dicut_shores(n: usize, arcs: &[(usize, usize)]) -> Vec<u64> {
    let full = (1u64 << n) - 1;
    (1..full)
        .filter(|&u| {
            arcs.iter()
                .all(|&(t, h)| !(u >> h & 1 == 1 && u >> t & 1 == 0))
        })
        .collect()
}

pub fn leaving(arcs: &[(usize, usize)], u: u64) -> u128 {
    let mut s = 0u128;
    for (i, &(t, h)) in arcs.iter().enumerate() {
        if u >> t & 1 == 1 && u >> h & 1 == 0 {
            s |= 1 << i;
        }
    }
    s
}

pub fn entering(arcs: &[(usize, usize)], u: u64) -> u128 {
    let mut s = 0u128;
    for (i, &(t, h)) in arcs.iter().enumerate() {
        if u >> t & 1 == 0 && u >> h & 1 == 1 {
            s |= 1 << i;
        }
    }
    s
}

pub fn closure_reach(n: usize, arcs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for (v, row) in r.iter_mut().enumerate() {
        row[v] = true;
    }
    for &(t, h) in arcs {
        r[t][h] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

pub fn brute_strong(n: usize, arcs: &[(usize, usize)]) -> bool {
    closure_reach(n, arcs).iter().all(|row| row.iter().all(|&b| b))
}

pub fn brute_strengthening(n: usize, arcs: &[(usize, usize)], j: u128) -> bool {
    let rev: Vec<(usize, usize)> = arcs
        .iter()
        .enumerate()
        .map(|(i, &(t, h))| if j >> i & 1 == 1 { (h, t) } else { (t, h) })
        .collect();
    brute_strong(n, &rev)
}

pub fn brute_dijoin(n: usize, arcs: &[(usize, usize)], j: u128) -> bool {
    brute_dicut_shores(n, arcs)
        .into_iter()
        .all(|u| leaving(arcs, u) & j != 0)
}

/// Every nonempty proper subset is crossed by at least two edges.
pub fn brute_2ec(n: usize, arcs: &[(usize, usize)]) -> bool {
    let full = (1u64 << n) - 1;
    (1..full).all(|u| (leaving(arcs, u) | entering(arcs, u)).count_ones() >= 2)
}

/// Points of the dijoin face by scanning every arc subset.
pub fn brute_dij_face(n: usize, arcs: &[(usize, usize)], family: &[u64]) -> Vec<u128> {
    let shores = brute_dicut_shores(n, arcs);
    let cuts: Vec<u128> = shores.iter().map(|&u| leaving(arcs, u)).collect();
    let fam: Vec<u128> = family.iter().map(|&u| leaving(arcs, u)).collect();
    (0u128..(1 << arcs.len()))
        .filter(|&j| {
            cuts.iter().all(|&c| c & j != 0) && fam.iter().all(|&c| (c & j).count_ones() == 1)
        })
        .collect()
}

/// Points of the strengthening face by scanning every arc subset.
pub fn brute_scr_face(n: usize, arcs: &[(usize, usize)], family: &[u64], allowed: u128) -> Vec<u128> {
    (0u128..(1 << arcs.len()))
        .filter(|&j| j & !allowed == 0)
        .filter(|&j| {
            family.iter().all(|&u| {
                let o = (leaving(arcs, u) & j).count_ones() as i64;
                let i_all = entering(arcs, u);
                let i = (i_all & j).count_ones() as i64;
                o - i == 1 - i_all.count_ones() as i64
            }) && brute_strengthening(n, arcs, j)
        })
        .collect()
}

pub fn bits(s: ArcSet) -> u128 {
    s.bits()
}

pub fn shore_bits(f: &Family) -> Vec<u64> {
    f.sets().iter().map(|u| u.bits()).collect()
}

pub fn to_rows(points: &[u128], m: usize) -> Vec<Vec<i128>> {
    points
        .iter()
        .map(|&p| (0..m).map(|a| (p >> a & 1) as i128).collect())
        .collect()
}

/// Fraction-free elimination, exact for the small entries used in tests.
pub fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - y * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Bareiss fraction-free elimination; every division is exact.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

/// gcd of all maximal minors of a full-row-rank matrix. The rows form an
/// integral basis of their span exactly when this is 1.
pub fn gcd_maximal_minors(rows: &[Vec<i128>]) -> i128 {
    let r = rows.len();
    let cols = rows[0].len();
    let mut g = 0i128;
    let mut pick = Vec::new();
    fn go(rows: &[Vec<i128>], cols: usize, start: usize, r: usize, pick: &mut Vec<usize>, g: &mut i128) {
        if *g == 1 {
            return;
        }
        if pick.len() == r {
            let sub: Vec<Vec<i128>> = rows
                .iter()
                .map(|row| pick.iter().map(|&c| row[c]).collect())
                .collect();
            *g = gcd(*g, det(&sub));
            return;
        }
        for c in start..cols {
            pick.push(c);
            go(rows, cols, c + 1, r, pick, g);
            pick.pop();
        }
    }
    go(rows, cols, 0, r, &mut pick, &mut g);
    g
}

pub fn oracle_is_integral_basis(basis: &[u128], all_points: &[u128], m: usize) -> bool {
    let b = to_rows(basis, m);
    rank(&b) == basis.len()
        && rank(&to_rows(all_points, m)) == basis.len()
        && gcd_maximal_minors(&b) == 1
}

pub fn affine_dim(points: &[u128], m: usize) -> usize {
    let rows: Vec<Vec<i128>> = to_rows(points, m)
        .into_iter()
        .map(|mut r| {
            r.push(1);
            r
        })
        .collect();
    rank(&rows) - 1
}

/// Solves rows^T c = v over the rationals by Cramer on a maximal minor;
/// returns numerators and a common denominator.
pub fn coefficients(rows: &[Vec<i128>], v: &[i128]) -> Option<(Vec<i128>, i128)> {
    let r = rows.len();
    let cols = rows[0].len();
    let mut chosen: Vec<usize> = Vec::new();
    for c in 0..cols {
        chosen.push(c);
        let sub: Vec<Vec<i128>> = rows.iter().map(|row| chosen.iter().map(|&k| row[k]).collect()).collect();
        if rank(&sub) < chosen.len() {
            chosen.pop();
        }
        if chosen.len() == r {
            break;
        }
    }
    if chosen.len() < r {
        return None;
    }
    // square system: sum_i c_i rows[i][k] = v[k] for k in chosen
    let a: Vec<Vec<i128>> = chosen.iter().map(|&k| rows.iter().map(|row| row[k]).collect()).collect();
    let d = det(&a);
    let nums: Vec<i128> = (0..r)
        .map(|i| {
            let mut ai = a.clone();
            for (row, &k) in ai.iter_mut().zip(&chosen) {
                row[i] = v[k];
            }
            det(&ai)
        })
        .collect();
    // check all coordinates
    for k in 0..cols {
        let lhs: i128 = (0..r).map(|i| nums[i] * rows[i][k]).sum();
        if lhs != v[k] * d {
            return None;
        }
    }
    Some((nums, d))
}
