use logsurf::graph::{multiplicity_chain, DualGraph, SingMarker};
use logsurf::hj::{
    chain_determinant, hj_expand, hj_value, reid_tai_canonical, wblowup_discrepancy, CyclicQuot,
    HJChain, WeightedBlowup,
};
use logsurf::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

// cofactor expansion of the tridiagonal matrix (entries on the diagonal, -1
// off it); deliberately not the continuant recursion the library uses
fn det_cofactor(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut acc = 0;
    for col in 0..n {
        if m[0][col] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, x)| *x).collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        acc += sign * m[0][col] * det_cofactor(&minor);
    }
    acc
}

fn tridiagonal(entries: &[u64]) -> Vec<Vec<i64>> {
    let n = entries.len();
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = entries[i] as i64;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

#[test]
fn round_trip_all_coprime_pairs() {
    let smooth = hj_expand(&CyclicQuot::new(1, 1).unwrap());
    assert!(smooth.entries.is_empty());
    for m in 2..=200u64 {
        for q in 1..m {
            if m.gcd(&q) != 1 {
                continue;
            }
            let c = CyclicQuot::new(m, q).unwrap();
            let chain = hj_expand(&c);
            assert!(chain.entries.iter().all(|&a| a >= 2));
            let back = hj_value(&chain).unwrap();
            assert_eq!((back.m(), back.q()), (m, q), "round trip failed");
        }
    }
}

#[test]
fn determinant_matches_cofactor_oracle() {
    fn rec(prefix: &mut Vec<u64>, len: usize) {
        if !prefix.is_empty() {
            let d = chain_determinant(prefix);
            assert_eq!(d, BigInt::from(det_cofactor(&tridiagonal(prefix))), "{:?}", prefix);
            let v = hj_value(&HJChain { entries: prefix.clone() }).unwrap();
            assert_eq!(BigInt::from(v.m()), d, "{:?}", prefix);
        }
        if prefix.len() == len {
            return;
        }
        for a in 2..=7 {
            prefix.push(a);
            rec(prefix, len);
            prefix.pop();
        }
    }
    rec(&mut Vec::new(), 4);
    // longer chains on a thinner entry range
    fn rec_long(prefix: &mut Vec<u64>, len: usize) {
        if prefix.len() == len {
            let d = chain_determinant(prefix);
            assert_eq!(d, BigInt::from(det_cofactor(&tridiagonal(prefix))), "{:?}", prefix);
            return;
        }
        for a in 2..=4 {
            prefix.push(a);
            rec_long(prefix, len);
            prefix.pop();
        }
    }
    rec_long(&mut Vec::new(), 8);
}

fn chain_graph(entries: &[u64]) -> DualGraph {
    let mut g = DualGraph::new();
    for (i, b) in entries.iter().enumerate() {
        g.add_vertex(&format!("v{}", i), *b, 0, SingMarker::Smooth).unwrap();
    }
    for i in 1..entries.len() {
        g.add_edge(&format!("v{}", i - 1), &format!("v{}", i), 1).unwrap();
    }
    g
}

#[test]
fn chains_are_negative_definite() {
    for m in 2..=80u64 {
        for q in 1..m {
            if m.gcd(&q) != 1 {
                continue;
            }
            let chain = hj_expand(&CyclicQuot::new(m, q).unwrap());
            assert!(chain_graph(&chain.entries).is_contractible(), "m={} q={}", m, q);
        }
    }
}

#[test]
fn blowup_discrepancy_matches_solver() {
    for m in 1..=60u64 {
        let disc = wblowup_discrepancy(&WeightedBlowup::new(m, vec![1, 1]).unwrap());
        assert_eq!(disc, Rat::new(2 - m as i64, m as i64));
        if m == 1 {
            continue;
        }
        let chain = hj_expand(&CyclicQuot::new(m, 1).unwrap());
        assert_eq!(chain.entries, vec![m]);
        let g = chain_graph(&chain.entries);
        let data = g.discrepancies().unwrap();
        assert_eq!(data.get("v0").unwrap(), &disc, "m={}", m);
    }
}

#[test]
fn multiplicity_formula() {
    assert_eq!(multiplicity_chain(&HJChain { entries: vec![2, 2, 2] }).unwrap(), 2);
    assert_eq!(multiplicity_chain(&HJChain { entries: vec![5] }).unwrap(), 5);
    assert_eq!(multiplicity_chain(&HJChain { entries: vec![3, 2] }).unwrap(), 3);
    assert!(multiplicity_chain(&HJChain { entries: vec![1, 2] }).is_err());
}

#[test]
fn canonicity_thresholds() {
    assert!(reid_tai_canonical(9, &[1, 4, 7]).unwrap());
    assert!(reid_tai_canonical(2, &[1, 1]).unwrap());
    assert!(!reid_tai_canonical(3, &[1, 1]).unwrap());
    // surface consistency: Z_m(1,1) is canonical exactly when the solver
    // discrepancy -1 + 2/m is nonnegative, i.e. m <= 2
    for m in 2..=40u64 {
        let canonical = reid_tai_canonical(m, &[1, 1]).unwrap();
        let disc = wblowup_discrepancy(&WeightedBlowup::new(m, vec![1, 1]).unwrap());
        assert_eq!(canonical, !disc.is_negative(), "m={}", m);
    }
}

proptest! {
    #[test]
    fn round_trip_random(m in 2u64..=5000, q in 1u64..=5000) {
        let q = q % (m - 1) + 1;
        prop_assume!(m.gcd(&q) == 1);
        let c = CyclicQuot::new(m, q).unwrap();
        let back = hj_value(&hj_expand(&c)).unwrap();
        prop_assert_eq!((back.m(), back.q()), (m, q));
    }
}
