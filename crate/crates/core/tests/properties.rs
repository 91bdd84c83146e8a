use std::path::PathBuf;

use artransfer::artheory::{all_indecomposables, ar_quiver, Budget};
use artransfer::decompose::{decompose, is_isomorphic, set_seed, DEFAULT_SEED};
use artransfer::io::{parse_spec, quiver_from_json, quiver_to_json, spec_to_json};
use artransfer::morphcat::{morph_decode, morph_encode, MorphObj};
use artransfer::{build_algebra, hom_basis, t2, Algebra, AlgebraSpec, Arrow, FMatrix, ModuleMap, Quiver, Relation};
use proptest::prelude::*;

fn load(name: &str) -> Algebra {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    build_algebra(&parse_spec(&std::fs::read_to_string(path).unwrap()).unwrap()).unwrap()
}

fn matrix(p: u32) -> impl Strategy<Value = FMatrix> {
    (0usize..6, 0usize..6).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0..p, r * c).prop_map(move |d| FMatrix::from_vec(p, r, c, d))
    })
}

fn prime() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(7), Just(32003)]
}

fn linear_spec() -> impl Strategy<Value = AlgebraSpec> {
    (3usize..7).prop_flat_map(|n| {
        let term = (0usize..n - 2, 2usize..4, prop_oneof![Just(1i64), Just(-1), 2i64..5, -4i64..-1]);
        proptest::collection::vec(proptest::collection::vec(term, 1..3), 0..3).prop_map(move |rels| {
            let vertices: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
            let arrows = (0..n - 1).map(|i| Arrow { name: format!("a{i}"), from: i, to: i + 1 }).collect();
            let relations = rels
                .into_iter()
                .map(|terms| Relation {
                    terms: terms
                        .into_iter()
                        .map(|(start, len, c)| {
                            let start = start.min(n - 1 - len.min(n - 1));
                            (c, (start..start + len.min(n - 1 - start)).collect())
                        })
                        .filter(|(_, p): &(i64, Vec<usize>)| !p.is_empty())
                        .collect(),
                })
                .filter(|r| !r.terms.is_empty())
                .collect();
            AlgebraSpec { char: 32003, quiver: Quiver { vertices, arrows }, relations }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in prime().prop_flat_map(matrix)) {
        let r = m.rref();
        prop_assert_eq!(r.reduced.rref().reduced, r.reduced.clone());
        prop_assert_eq!(r.rank, m.transpose().rank());
    }

    #[test]
    fn kernel_is_annihilated(m in matrix(32003)) {
        let k = m.kernel_basis();
        prop_assert_eq!(k.cols(), m.cols() - m.rank());
        if k.cols() > 0 && m.rows() > 0 {
            prop_assert!(m.mul(&k).is_zero());
        }
    }

    #[test]
    fn solve_finds_a_solution(m in matrix(7), seed in proptest::collection::vec(0u32..7, 6)) {
        let x = FMatrix::from_vec(7, m.cols(), 1, seed[..m.cols()].to_vec());
        let b = m.mul(&x);
        let y = m.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(m.mul(&y), b);
    }

    #[test]
    fn inverse_is_two_sided(m in (1usize..5).prop_flat_map(|n| proptest::collection::vec(0u32..32003, n * n)
        .prop_map(move |d| FMatrix::from_vec(32003, n, n, d)))) {
        match m.inverse() {
            Some(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
            }
            None => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn spec_json_round_trip(spec in linear_spec()) {
        let text = spec_to_json(&spec);
        prop_assert_eq!(parse_spec(&text).unwrap(), spec);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn morphism_encoding_round_trip(i in 0usize..6, j in 0usize..6, coeffs in proptest::collection::vec(1u32..32003, 4)) {
        let a = load("a3.json");
        let u = all_indecomposables(&a, Budget::default()).unwrap();
        let (x, y) = (&u.modules[i], &u.modules[j]);
        let mut f = ModuleMap::zero(x, y);
        for (h, &c) in hom_basis(x, y).unwrap().iter().zip(&coeffs) {
            f = f.add(&h.scale(c));
        }
        let t = t2(&a).unwrap();
        let e = morph_encode(&t, &MorphObj::new(f)).unwrap();
        let back = morph_decode(&e).unwrap();
        prop_assert_eq!(back.a().dims(), x.dims());
        prop_assert_eq!(back.b().dims(), y.dims());
        prop_assert!(is_isomorphic(&morph_encode(&t, &back).unwrap(), &e).unwrap());
    }

    #[test]
    fn decomposition_recovers_summands(picks in proptest::collection::vec(0usize..9, 1..4)) {
        let a = load("t2dualnumbers.json");
        let u = all_indecomposables(&a, Budget::default()).unwrap();
        let parts: Vec<_> = picks.iter().map(|&k| u.modules[k].clone()).collect();
        let sum = artransfer::FDModule::sum(&parts);
        let mut got = Vec::new();
        for (m, k) in decompose(&sum).unwrap() {
            let idx = u.locate(&m).unwrap().expect("summand is a known indecomposable");
            got.extend(std::iter::repeat_n(idx, k));
        }
        got.sort();
        let mut want = picks.clone();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn quiver_is_seed_independent(seed in any::<u64>()) {
        let a = load("t2dualnumbers.json");
        set_seed(DEFAULT_SEED);
        let reference = quiver_to_json(&ar_quiver(&a, Budget::default()).unwrap());
        set_seed(seed);
        let q = ar_quiver(&a, Budget::default()).unwrap();
        let text = quiver_to_json(&q);
        prop_assert_eq!(quiver_from_json(&text).unwrap(), q);
        prop_assert_eq!(text, reference);
    }
}
