//! Property tests over seeded random construction terms.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use catalan_core::alpha::alpha;
use catalan_core::beta::{beta, beta_inv};
use catalan_core::classical::{
    arcs_to_planar, binary_to_tiling, planar_to_arcs, tiling_to_binary,
};
use catalan_core::codec::{parse_arcs, parse_term, parse_tiling, parse_tree};
use catalan_core::terms::{decompose, eval, random_term, step, term_of};
use catalan_core::{ArcTree, RightSweptTree, StaircaseTiling, Term};

fn term_strategy() -> impl Strategy<Value = Term> {
    (0usize..=12, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_term(n, &mut rng)
    })
}

proptest! {
    #[test]
    fn literals_round_trip(term in term_strategy()) {
        prop_assert_eq!(&parse_term(&term.to_string()).unwrap(), &term);
        let t: RightSweptTree = eval(&term).unwrap();
        prop_assert_eq!(parse_tree(&t.to_string()).unwrap(), t);
        let s: StaircaseTiling = eval(&term).unwrap();
        prop_assert_eq!(parse_tiling(&s.to_string()).unwrap(), s);
        let a: ArcTree = eval(&term).unwrap();
        prop_assert_eq!(parse_arcs(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn every_produced_shape_validates(term in term_strategy()) {
        let t: RightSweptTree = eval(&term).unwrap();
        let s: StaircaseTiling = eval(&term).unwrap();
        let a: ArcTree = eval(&term).unwrap();
        prop_assert!(t.validate().is_empty());
        prop_assert!(s.validate().is_empty());
        prop_assert!(a.validate().is_empty());
        prop_assert_eq!(t.size(), term.size());
        prop_assert_eq!(s.size(), term.size());
        prop_assert_eq!(a.size(), term.size());
    }

    #[test]
    fn step_inverts_decompose(term in term_strategy()) {
        let s: StaircaseTiling = eval(&term).unwrap();
        if s.size() > 0 {
            prop_assert_eq!(step(decompose(&s).unwrap()).unwrap(), s);
        }
        let a: ArcTree = eval(&term).unwrap();
        if a.size() > 0 {
            prop_assert_eq!(step(decompose(&a).unwrap()).unwrap(), a);
        }
    }

    #[test]
    fn alpha_round_trips(term in term_strategy()) {
        let t: RightSweptTree = eval(&term).unwrap();
        let s: StaircaseTiling = alpha(&t).unwrap();
        let a: ArcTree = alpha(&s).unwrap();
        let back: RightSweptTree = alpha(&a).unwrap();
        prop_assert_eq!(back, t);
        prop_assert_eq!(term_of(&a).unwrap(), term);
    }

    #[test]
    fn beta_round_trips(term in term_strategy()) {
        let t: RightSweptTree = eval(&term).unwrap();
        let s = beta(&t).unwrap();
        prop_assert!(s.validate().is_empty());
        prop_assert_eq!(beta_inv(&s).unwrap(), t);
    }

    #[test]
    fn classical_round_trips(term in term_strategy()) {
        let s: StaircaseTiling = eval(&term).unwrap();
        let b = tiling_to_binary(&s).unwrap();
        prop_assert_eq!(binary_to_tiling(&b), s);
        let a: ArcTree = eval(&term).unwrap();
        let p = arcs_to_planar(&a).unwrap();
        prop_assert_eq!(planar_to_arcs(&p), a);
    }
}
