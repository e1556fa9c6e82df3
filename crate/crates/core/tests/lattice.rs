mod common;

use std::collections::BTreeSet;

use common::{graph, matroid, random_unimodular};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::Index;
use regflow::lattice::{check_consistent, decompose_flow, simple_flows};
use regflow::linalg::is_weakly_unimodular;
use regflow::{Bounds, FlowLattice, FlowVector, IntMatrix, RegularMatroid};

fn fundamental(m: &RegularMatroid, i: &Index) -> FlowLattice {
    let bases = m.bases(Bounds::DEFAULT).unwrap();
    FlowLattice::fundamental(m, &bases[i.index(bases.len())]).unwrap()
}

fn flow_set(m: &RegularMatroid) -> BTreeSet<Vec<BigInt>> {
    simple_flows(m, Bounds::DEFAULT).unwrap().into_iter().map(|v| v.coords().to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn unimodular_change_of_a_fundamental_basis_is_weakly_unimodular(
        edges in graph(8), i in any::<Index>(), seed in any::<u64>()
    ) {
        let m = matroid(&edges);
        let lat = fundamental(&m, &i);
        let s = lat.rank();
        let f = random_unimodular(s, seed);
        let q = lat.basis().mul(&f).unwrap();
        prop_assert!(is_weakly_unimodular(&q, Bounds::DEFAULT).unwrap().holds());
        let changed = f.transpose().mul(lat.gram().matrix()).unwrap().mul(&f).unwrap();
        prop_assert_eq!(&q.gram(), &changed);
        for col in q.columns() {
            prop_assert!(lat.contains(&FlowVector::new(col)));
        }
    }

    #[test]
    fn simple_flows_follow_signed_permutations(edges in graph(7), seed in any::<u64>()) {
        let m = matroid(&edges);
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for k in (1..n).rev() {
            perm.swap(k, (x % (k as u64 + 1)) as usize);
            x /= k as u64 + 1;
        }
        let signs: Vec<i64> = (0..n).map(|j| if seed >> (40 + j) & 1 == 1 { -1 } else { 1 }).collect();
        let cols: Vec<Vec<BigInt>> = (0..n)
            .map(|j| m.rep().column(perm[j]).into_iter().map(|v| v * signs[j]).collect())
            .collect();
        let rep = IntMatrix::from_columns(m.rank(), &cols).unwrap();
        let moved = RegularMatroid::from_matrix(rep, Bounds::DEFAULT).unwrap();
        let pulled_back: BTreeSet<Vec<BigInt>> = flow_set(&moved)
            .into_iter()
            .map(|a| {
                let mut b = vec![BigInt::from(0); n];
                for j in 0..n {
                    b[perm[j]] = &a[j] * signs[j];
                }
                b
            })
            .collect();
        prop_assert_eq!(pulled_back, flow_set(&m));
    }

    #[test]
    fn simple_flows_are_metrically_simple(edges in graph(7), i in any::<Index>()) {
        let m = matroid(&edges);
        let lat = fundamental(&m, &i);
        for a in simple_flows(&m, Bounds::DEFAULT).unwrap() {
            prop_assert!(lat.contains(&a));
            prop_assert!(lat.is_simple_metric(&a).unwrap().is_simple());
        }
    }

    #[test]
    fn random_flows_decompose_consistently(
        edges in graph(8), i in any::<Index>(), coeffs in prop::collection::vec(-3i64..=3, 8)
    ) {
        let m = matroid(&edges);
        let lat = fundamental(&m, &i);
        let c: Vec<BigInt> = coeffs[..lat.rank()].iter().map(|&v| BigInt::from(v)).collect();
        let beta = lat.vector(&c).unwrap();
        let parts = decompose_flow(&m, &beta).unwrap();
        prop_assert!(check_consistent(&m, &beta, &parts).is_ok());
        let l1: BigInt = parts.iter().map(|p| p.l1()).sum();
        prop_assert_eq!(l1, beta.l1());
    }
}
