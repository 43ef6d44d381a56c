//! The recursive bijection between any two shape families, routed through
//! construction terms: extract the term in one family, evaluate it in the
//! other. One decomposition algorithm per family serves all six directed
//! pairs.

use crate::error::Error;
use crate::terms::{eval, term_of, Constructible};

/// Maps a valid shape of family `X` to its counterpart in family `Y`.
///
/// Size is preserved, `alpha::<X, X>` is the identity, and the maps
/// compose across families.
pub fn alpha<X: Constructible, Y: Constructible>(shape: &X) -> Result<Y, Error> {
    eval(&term_of(shape)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ArcTree, Rect, RightSweptTree, StaircaseTiling};
    use crate::terms::{enum_terms, eval, Term};

    #[test]
    fn unit_shapes_map_to_each_other() {
        let square = StaircaseTiling::new(1, vec![Rect::new(1, 1, 1, 1)]);
        let t: RightSweptTree = alpha(&square).unwrap();
        assert_eq!(t, RightSweptTree::Leaf);
        let a: ArcTree = alpha(&square).unwrap();
        assert_eq!(a, ArcTree::new(vec![1]));
    }

    #[test]
    fn mid_chain_maps_to_row_stack() {
        let chain = RightSweptTree::mid(RightSweptTree::mid(RightSweptTree::Leaf));
        let s: StaircaseTiling = alpha(&chain).unwrap();
        assert_eq!(
            s,
            StaircaseTiling::new(
                3,
                vec![Rect::new(1, 1, 1, 3), Rect::new(2, 1, 2, 2), Rect::new(3, 1, 3, 1)],
            )
        );
    }

    #[test]
    fn image_of_the_size_12_example_decomposes_to_the_same_term() {
        let e = || Term::E;
        let term = Term::fork(
            Term::mid(Term::left(Term::right(Term::mid(Term::mid(e()))))),
            Term::right(Term::fork(
                Term::mid(e()),
                Term::right(Term::right(Term::mid(e()))),
            )),
        );
        let s: StaircaseTiling = eval(&term).unwrap();
        let a: ArcTree = alpha(&s).unwrap();
        let t: RightSweptTree = alpha(&s).unwrap();
        assert_eq!(a.size(), 12);
        assert_eq!(t.size(), 12);
        assert_eq!(crate::terms::term_of(&a).unwrap(), term);
        assert_eq!(crate::terms::term_of(&t).unwrap(), term);
    }

    #[test]
    fn identity_and_round_trips_small() {
        for n in 0..=6 {
            for term in enum_terms(n) {
                let t: RightSweptTree = eval(&term).unwrap();
                let s: StaircaseTiling = alpha(&t).unwrap();
                let a: ArcTree = alpha(&s).unwrap();
                let back: RightSweptTree = alpha(&a).unwrap();
                assert_eq!(back, t);
                let same: RightSweptTree = alpha(&t).unwrap();
                assert_eq!(same, t);
            }
        }
    }
}
