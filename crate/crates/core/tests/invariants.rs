use proptest::prelude::*;
use toric_core::fibers::{fiber_of, is_semiconformal, sc_decompositions};
use toric_core::graver::{graver_basis_by_completion, graver_basis_with, graver_oracle_box_with, is_conformally_minimal};
use toric_core::io::{format_matrix, parse_matrix};
use toric_core::lawrence::{in_lifted_lattice, lift, move_type};
use toric_core::markov::{
    indispensable_set_with, minimal_markov_basis_with, universal_markov_basis_with, DegreeSource,
};
use toric_core::{Budget, Configuration, IntMat};

fn small_curve() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(1i64..=9, 2..=4).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graver_elements_are_primitive_kernel_moves(a in small_curve()) {
        let c = Configuration::curve(&a).unwrap();
        let g = graver_basis_with(&c, &Budget::sequential()).unwrap();
        for m in &g.moves {
            prop_assert!(c.contains(m.vector()).unwrap());
            prop_assert!(m.vector().is_canonical());
        }
        prop_assert!(is_conformally_minimal(&g.moves));
        let o = graver_oracle_box_with(&c, g.max_abs_entry() + 1, &Budget::sequential()).unwrap();
        prop_assert_eq!(&g.moves, &o.moves);
    }

    #[test]
    fn parallel_and_sequential_agree(a in small_curve()) {
        let c = Configuration::curve(&a).unwrap();
        let par = Budget::default();
        let seq = Budget::sequential();
        prop_assert_eq!(
            graver_basis_with(&c, &par).unwrap().moves,
            graver_basis_with(&c, &seq).unwrap().moves
        );
        prop_assert_eq!(
            minimal_markov_basis_with(&c, DegreeSource::Auto, &par).unwrap().moves,
            minimal_markov_basis_with(&c, DegreeSource::Auto, &seq).unwrap().moves
        );
    }

    #[test]
    fn markov_chain_of_inclusions(a in small_curve()) {
        let c = Configuration::curve(&a).unwrap();
        let b = Budget::sequential();
        let g = graver_basis_with(&c, &b).unwrap();
        let u = universal_markov_basis_with(&c, &b).unwrap();
        let m = minimal_markov_basis_with(&c, DegreeSource::Auto, &b).unwrap();
        let s = indispensable_set_with(&c, &b).unwrap();
        prop_assert!(s.moves.iter().all(|x| m.contains(x)));
        prop_assert!(m.moves.iter().all(|x| u.contains(x)));
        prop_assert!(u.moves.iter().all(|x| g.contains(x)));
    }

    #[test]
    fn decompositions_match_fiber_points(a in small_curve(), pick in any::<prop::sample::Index>()) {
        let c = Configuration::curve(&a).unwrap();
        let b = Budget::sequential();
        let g = graver_basis_with(&c, &b).unwrap();
        let u = g.moves[pick.index(g.len())].vector();
        let f = fiber_of(&c, u, b.max_fiber).unwrap();
        let d = sc_decompositions(&c, u, b.max_fiber).unwrap();
        prop_assert_eq!(d.len(), f.len());
        for x in &d {
            prop_assert!(is_semiconformal(u, &x.left, &x.right).unwrap());
        }
        // exactly the two trivial decompositions are improper
        prop_assert_eq!(d.iter().filter(|x| !x.is_proper()).count(), 2);
    }

    #[test]
    fn lifted_markov_moves_are_lattice_matrices(a in small_curve()) {
        let c = Configuration::curve(&a).unwrap();
        let lifted = lift(&c, 2).unwrap();
        let m = minimal_markov_basis_with(&lifted, DegreeSource::Auto, &Budget::sequential()).unwrap();
        for mv in &m.moves {
            let mat = IntMat::from_flat(2, a.len(), mv.vector()).unwrap();
            prop_assert!(in_lifted_lattice(&a, &mat).unwrap());
            prop_assert_eq!(move_type(mv, a.len()), 2);
        }
    }

    #[test]
    fn lifted_per_degree_counts_agree_across_degree_sources(a in small_curve()) {
        let lifted = lift(&Configuration::curve(&a).unwrap(), 2).unwrap();
        let b = Budget::sequential();
        let auto = minimal_markov_basis_with(&lifted, DegreeSource::Auto, &b).unwrap();
        let graver = minimal_markov_basis_with(&lifted, DegreeSource::Graver, &b).unwrap();
        prop_assert_eq!(&auto.per_degree_counts, &graver.per_degree_counts);
        prop_assert_eq!(auto.len(), graver.len());
    }

    #[test]
    fn lifted_graver_matches_plain_completion(a in prop::collection::btree_set(1i64..=6, 2..=3)) {
        let a: Vec<i64> = a.into_iter().collect();
        let lifted = lift(&Configuration::curve(&a).unwrap(), 2).unwrap();
        let b = Budget::sequential();
        prop_assert_eq!(
            graver_basis_with(&lifted, &b).unwrap().moves,
            graver_basis_by_completion(&lifted, &b).unwrap().moves
        );
    }

    #[test]
    fn matrix_text_roundtrip(rows in 0usize..5, cols in 1usize..5, seed in prop::collection::vec(-1000i64..1000, 25)) {
        let m = IntMat::new(rows, cols, seed[..rows * cols].to_vec()).unwrap();
        prop_assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }
}
