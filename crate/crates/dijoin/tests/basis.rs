mod common;

use common::*;
use dijoin::basis::{
    balanced_split, express_in_basis, integral_basis_oracle, integral_basis_recursive, jump_coefficient,
    verify_integral_basis, BasisError, Provenance, DEFAULT_SEARCH_BUDGET,
};
use dijoin::generate::{random_digraft, rng};
use dijoin::{validate, ArcSet, Digraft};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

fn digraft(d: dijoin::Digraph) -> Digraft {
    let f = sink_family(&d);
    validate(&d, &f).unwrap()
}

fn raw(points: &[ArcSet]) -> Vec<u128> {
    points.iter().map(|&p| bits(p)).collect()
}

fn big(v: &[i128]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn oracle_on_small_faces() {
    let g = digraft(k22());
    let b = integral_basis_oracle(g.points(), 4, DEFAULT_SEARCH_BUDGET).unwrap();
    assert_eq!(b.points.len(), 2);
    assert_eq!(b.provenance, Provenance::Search);
    assert!(oracle_is_integral_basis(&raw(&b.points), &raw(g.points()), 4));

    let g = digraft(k2n(3));
    let m = g.digraph().num_arcs();
    let b = integral_basis_oracle(g.points(), m, DEFAULT_SEARCH_BUDGET).unwrap();
    assert_eq!(b.points.len(), affine_dim(&raw(g.points()), m) + 1);
    assert!(oracle_is_integral_basis(&raw(&b.points), &raw(g.points()), m));
    let cert = verify_integral_basis(g.points(), m, &b.points).unwrap();
    assert_eq!(cert.size, b.points.len());
    assert!(cert.divisors.iter().all(|d| *d == BigInt::from(1)));

    assert_eq!(
        integral_basis_oracle(g.points(), m, 1).unwrap_err(),
        BasisError::BudgetExceeded(1)
    );
    assert_eq!(integral_basis_oracle(&[], m, 10).unwrap_err(), BasisError::EmptyFace);
}

#[test]
fn verification_rejections() {
    let g = digraft(k2n(3));
    let m = g.digraph().num_arcs();
    let b = integral_basis_oracle(g.points(), m, DEFAULT_SEARCH_BUDGET).unwrap().points;
    let mut dup = b.clone();
    dup[1] = dup[0];
    assert!(matches!(
        verify_integral_basis(g.points(), m, &dup),
        Err(BasisError::Dependent { .. })
    ));
    assert_eq!(
        verify_integral_basis(g.points(), m, &b[1..]).unwrap_err(),
        BasisError::WrongSize { got: b.len() - 1, want: b.len() }
    );
    let stranger = ArcSet::from_indices([0, 1, 2]);
    assert_eq!(
        verify_integral_basis(g.points(), m, &[stranger]).unwrap_err(),
        BasisError::NotFacePoint(stranger)
    );
}

/// Random full-size subsets of face points: the library accepts exactly
/// those whose maximal minors have gcd one, and reports that gcd as index.
#[test]
fn verification_matches_minor_gcd() {
    let mut r = rng(5);
    let mut rejected_index = 0;
    let mut accepted = 0;
    for _ in 0..60 {
        let g = random_digraft(&mut r, 7, 12);
        let m = g.digraph().num_arcs();
        let pts = raw(g.points());
        let size = rank(&to_rows(&pts, m));
        for _ in 0..20 {
            let mut pick: Vec<ArcSet> = g.points().to_vec();
            pick.shuffle(&mut r);
            pick.truncate(size);
            let rows = to_rows(&raw(&pick), m);
            let res = verify_integral_basis(g.points(), m, &pick);
            if rank(&rows) < size {
                assert!(matches!(res, Err(BasisError::Dependent { .. })));
                continue;
            }
            let gm = gcd_maximal_minors(&rows);
            match res {
                Ok(_) => {
                    assert_eq!(gm, 1);
                    accepted += 1;
                }
                Err(BasisError::NotSaturated { index, .. }) => {
                    assert_eq!(index, BigInt::from(gm));
                    assert!(gm > 1);
                    rejected_index += 1;
                }
                Err(e) => panic!("{e}"),
            }
        }
    }
    assert!(accepted > 0 && rejected_index > 0, "{accepted} {rejected_index}");
}

#[test]
fn expression_matches_cramer() {
    let mut r = rng(8);
    for _ in 0..40 {
        let g = random_digraft(&mut r, 7, 12);
        let m = g.digraph().num_arcs();
        let b = integral_basis_recursive(&g).unwrap().points;
        let rows = to_rows(&raw(&b), m);
        for &p in g.points() {
            let v = to_rows(&[bits(p)], m).remove(0);
            let (nums, den) = coefficients(&rows, &v).unwrap();
            assert!(nums.iter().all(|x| x % den == 0));
            let want: Vec<i128> = nums.iter().map(|x| x / den).collect();
            assert_eq!(express_in_basis(&b, m, &big(&v)).unwrap(), big(&want));
        }
        let mut half = vec![0i128; m];
        half[0] = 1;
        match express_in_basis(&b, m, &big(&half)) {
            Err(BasisError::OutsideSpan) => assert!(coefficients(&rows, &half).is_none()),
            Err(BasisError::NonIntegral(_)) => {
                let (nums, den) = coefficients(&rows, &half).unwrap();
                assert!(nums.iter().any(|x| x % den != 0));
            }
            Ok(c) => {
                let (nums, den) = coefficients(&rows, &half).unwrap();
                assert_eq!(c, big(&nums.iter().map(|x| x / den).collect::<Vec<_>>()));
            }
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn recursive_on_fixtures() {
    let d = serial_join();
    let g = digraft(d);
    let b = integral_basis_recursive(&g).unwrap();
    let m = g.digraph().num_arcs();
    let tight = g.augmented().nontrivial_tight_shores();
    assert!(tight.contains(&serial_join_shore()));
    assert!(matches!(b.provenance, Provenance::TightContraction { shore, .. } if tight.contains(&shore)));
    assert!(!b.provenance.uses_jump());
    assert!(oracle_is_integral_basis(&raw(&b.points), &raw(g.points()), m));

    let g = digraft(facet_join());
    let m = g.digraph().num_arcs();
    let b = integral_basis_recursive(&g).unwrap();
    let Provenance::FacetContraction { shore, jump_point, .. } = &b.provenance else {
        panic!("{:?}", b.provenance)
    };
    assert_eq!(*shore, dijoin::VertexSet::from_indices([1, 4]));
    assert_eq!(bits(*jump_point).count_ones() as usize, g.digraph().sinks().len());
    assert_eq!(jump_point.inter(g.digraph().delta_out(*shore)).len(), 2);
    assert!(b.provenance.uses_jump());
    assert!(oracle_is_integral_basis(&raw(&b.points), &raw(g.points()), m));
}

#[test]
fn jump_coefficient_matches_expression() {
    let g = digraft(facet_join());
    let m = g.digraph().num_arcs();
    let b = integral_basis_recursive(&g).unwrap();
    let Provenance::FacetContraction { shore, jump_point, .. } = b.provenance else {
        panic!()
    };
    let jpos = b.points.iter().position(|&p| p == jump_point).unwrap();
    let mut r = rng(2);
    for _ in 0..50 {
        let mut v = vec![BigInt::from(0); m];
        for &p in g.points() {
            let c: i64 = r.gen_range(-3..=3);
            for a in p.iter() {
                v[a] += c;
            }
        }
        let c = express_in_basis(&b.points, m, &v).unwrap();
        assert_eq!(jump_coefficient(&g, shore, &v).unwrap(), c[jpos]);
    }
}

#[test]
fn recursive_on_generated() {
    let mut r = rng(21);
    let (mut tight, mut facet) = (0, 0);
    for _ in 0..150 {
        let g = random_digraft(&mut r, 8, 13);
        let m = g.digraph().num_arcs();
        let b = integral_basis_recursive(&g).unwrap();
        assert_eq!(b.points.len(), affine_dim(&raw(g.points()), m) + 1);
        assert!(oracle_is_integral_basis(&raw(&b.points), &raw(g.points()), m));
        verify_integral_basis(g.points(), m, &b.points).unwrap();
        match b.provenance {
            Provenance::TightContraction { .. } => tight += 1,
            Provenance::FacetContraction { .. } => facet += 1,
            Provenance::Search => {}
        }
    }
    assert!(tight > 0 && facet > 0, "{tight} {facet}");
}

#[test]
fn balanced_split_recovers_sums() {
    let mut r = rng(4);
    for _ in 0..60 {
        let g = random_digraft(&mut r, 7, 11);
        let m = g.digraph().num_arcs();
        for k in 1..=3 {
            let mut w = vec![0u32; m];
            for _ in 0..k {
                let p = g.points()[r.gen_range(0..g.points().len())];
                for a in p.iter() {
                    w[a] += 1;
                }
            }
            let parts = balanced_split(&g, &w, k).expect("sum of face points splits");
            assert_eq!(parts.len(), k);
            let mut sum = vec![0u32; m];
            for p in &parts {
                assert!(g.points().contains(p));
                for a in p.iter() {
                    sum[a] += 1;
                }
            }
            assert_eq!(sum, w);
        }
    }
    let g = digraft(k22());
    assert!(balanced_split(&g, &[1, 0, 0, 0], 1).is_none());
}
