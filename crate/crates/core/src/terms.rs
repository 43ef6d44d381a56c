//! The construction calculus: four size-increasing constructors per family,
//! the unique decomposition that inverts them, and construction terms.
//!
//! Every shape of size `n` arises from the empty shape by applying exactly
//! `n` constructors, and the sequence of applications is unique. Recording
//! it as a [`Term`] is what lets one family be rebuilt from another.
//!
//! Constructor domains:
//!
//! * `m` applies to any shape (including the empty one).
//! * `r` applies to shapes of size >= 1.
//! * `l` applies to shapes of size >= 2 that are not middle-images.
//! * `f(u, v)` takes a free operand `u` of size >= 1 and a bound operand
//!   `v` of size >= 2 that is not a middle-image. In a tree, `v` becomes
//!   the left child and `u` the right child of the new root.

use crate::error::Error;
use crate::model::{ArcTree, Family, Rect, RightSweptTree, StaircaseTiling};

/// A construction term over `{E, m, r, l, f}`.
///
/// `F(u, v)` carries the free operand first and the bound (non-middle)
/// operand second. Variant order gives the canonical term order:
/// `E < m < r < l < f`, then componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    E,
    M(Box<Term>),
    R(Box<Term>),
    L(Box<Term>),
    F(Box<Term>, Box<Term>),
}

/// The constructor at the root of a term or decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpKind {
    Mid,
    Right,
    Left,
    Fork,
}

impl Term {
    pub fn mid(t: Term) -> Term {
        Term::M(Box::new(t))
    }

    pub fn right(t: Term) -> Term {
        Term::R(Box::new(t))
    }

    pub fn left(t: Term) -> Term {
        Term::L(Box::new(t))
    }

    pub fn fork(free: Term, bound: Term) -> Term {
        Term::F(Box::new(free), Box::new(bound))
    }

    /// Number of constructor applications; equals the size of any shape
    /// the term evaluates to.
    pub fn size(&self) -> usize {
        match self {
            Term::E => 0,
            Term::M(t) | Term::R(t) | Term::L(t) => 1 + t.size(),
            Term::F(u, v) => 1 + u.size() + v.size(),
        }
    }

    pub fn is_mid(&self) -> bool {
        matches!(self, Term::M(_))
    }

    pub fn root_op(&self) -> Option<OpKind> {
        match self {
            Term::E => None,
            Term::M(_) => Some(OpKind::Mid),
            Term::R(_) => Some(OpKind::Right),
            Term::L(_) => Some(OpKind::Left),
            Term::F(..) => Some(OpKind::Fork),
        }
    }

    /// Checks the constructor domain rules, returning one message per
    /// violation.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.validate_into(&mut out);
        out
    }

    fn validate_into(&self, out: &mut Vec<String>) {
        match self {
            Term::E => {}
            Term::M(t) => t.validate_into(out),
            Term::R(t) => {
                if t.size() < 1 {
                    out.push("r applied to E (size 0 < 1)".to_string());
                }
                t.validate_into(out);
            }
            Term::L(t) => {
                if t.size() < 2 {
                    out.push(format!("l applied to operand of size {} < 2", t.size()));
                } else if t.is_mid() {
                    out.push("l applied to a middle-image".to_string());
                }
                t.validate_into(out);
            }
            Term::F(u, v) => {
                if u.size() < 1 {
                    out.push("f free operand is E (size 0 < 1)".to_string());
                }
                if v.size() < 2 {
                    out.push(format!("f bound operand has size {} < 2", v.size()));
                } else if v.is_mid() {
                    out.push("f bound operand is a middle-image".to_string());
                }
                u.validate_into(out);
                v.validate_into(out);
            }
        }
    }
}

/// One constructor application with its typed operands; what `decompose`
/// recovers and `step` replays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposed<T> {
    Mid(T),
    Right(T),
    Left(T),
    Fork { free: T, bound: T },
}

impl<T> Decomposed<T> {
    pub fn op(&self) -> OpKind {
        match self {
            Decomposed::Mid(_) => OpKind::Mid,
            Decomposed::Right(_) => OpKind::Right,
            Decomposed::Left(_) => OpKind::Left,
            Decomposed::Fork { .. } => OpKind::Fork,
        }
    }

    pub fn inputs(&self) -> Vec<&T> {
        match self {
            Decomposed::Mid(x) | Decomposed::Right(x) | Decomposed::Left(x) => vec![x],
            Decomposed::Fork { free, bound } => vec![free, bound],
        }
    }
}

/// A shape family supporting the four constructors and their unique
/// decomposition.
pub trait Constructible: Clone + Eq + Ord + std::hash::Hash + Sized {
    const FAMILY: Family;

    fn empty() -> Self;
    fn size(&self) -> usize;
    fn validate(&self) -> Vec<String>;

    /// True when the shape is the image of the middle constructor.
    fn is_mid_image(&self) -> bool;

    fn apply_mid(input: Self) -> Self;
    fn apply_right(input: Self) -> Result<Self, Error>;
    fn apply_left(input: Self) -> Result<Self, Error>;
    fn apply_fork(free: Self, bound: Self) -> Result<Self, Error>;

    /// Splits a valid non-empty shape into the unique constructor
    /// application producing it. Callers guarantee validity.
    fn decompose_unchecked(&self) -> Decomposed<Self>;
}

fn ensure_valid<T: Constructible>(shape: &T) -> Result<(), Error> {
    let violations = shape.validate();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidShape(violations))
    }
}

fn require_right<T: Constructible>(input: &T) -> Result<(), Error> {
    if input.size() < 1 {
        return Err(Error::Domain(format!(
            "{}: r requires a non-empty input",
            T::FAMILY
        )));
    }
    Ok(())
}

fn require_left<T: Constructible>(input: &T) -> Result<(), Error> {
    if input.size() < 2 {
        return Err(Error::Domain(format!(
            "{}: l requires an input of size >= 2, got {}",
            T::FAMILY,
            input.size()
        )));
    }
    if input.is_mid_image() {
        return Err(Error::Domain(format!(
            "{}: l cannot take a middle-image input",
            T::FAMILY
        )));
    }
    Ok(())
}

fn require_fork<T: Constructible>(free: &T, bound: &T) -> Result<(), Error> {
    if free.size() < 1 {
        return Err(Error::Domain(format!(
            "{}: f requires a non-empty free operand",
            T::FAMILY
        )));
    }
    if bound.size() < 2 {
        return Err(Error::Domain(format!(
            "{}: f requires a bound operand of size >= 2, got {}",
            T::FAMILY,
            bound.size()
        )));
    }
    if bound.is_mid_image() {
        return Err(Error::Domain(format!(
            "{}: f bound operand may not be a middle-image",
            T::FAMILY
        )));
    }
    Ok(())
}

/// Applies one constructor to validated inputs.
pub fn step<T: Constructible>(parts: Decomposed<T>) -> Result<T, Error> {
    for input in parts.inputs() {
        ensure_valid(input)?;
    }
    match parts {
        Decomposed::Mid(x) => Ok(T::apply_mid(x)),
        Decomposed::Right(x) => T::apply_right(x),
        Decomposed::Left(x) => T::apply_left(x),
        Decomposed::Fork { free, bound } => T::apply_fork(free, bound),
    }
}

/// Recovers the unique constructor application producing a valid shape of
/// size >= 1.
pub fn decompose<T: Constructible>(shape: &T) -> Result<Decomposed<T>, Error> {
    ensure_valid(shape)?;
    if shape.size() == 0 {
        return Err(Error::Domain(format!(
            "{}: the empty shape has no decomposition",
            T::FAMILY
        )));
    }
    Ok(shape.decompose_unchecked())
}

/// Evaluates a term in the chosen family.
pub fn eval<T: Constructible>(term: &Term) -> Result<T, Error> {
    match term {
        Term::E => Ok(T::empty()),
        Term::M(t) => Ok(T::apply_mid(eval(t)?)),
        Term::R(t) => T::apply_right(eval(t)?),
        Term::L(t) => T::apply_left(eval(t)?),
        Term::F(u, v) => T::apply_fork(eval(u)?, eval(v)?),
    }
}

/// Extracts the unique term evaluating to the given valid shape.
pub fn term_of<T: Constructible>(shape: &T) -> Result<Term, Error> {
    ensure_valid(shape)?;
    Ok(term_of_unchecked(shape))
}

fn term_of_unchecked<T: Constructible>(shape: &T) -> Term {
    if shape.size() == 0 {
        return Term::E;
    }
    match shape.decompose_unchecked() {
        Decomposed::Mid(x) => Term::mid(term_of_unchecked(&x)),
        Decomposed::Right(x) => Term::right(term_of_unchecked(&x)),
        Decomposed::Left(x) => Term::left(term_of_unchecked(&x)),
        Decomposed::Fork { free, bound } => {
            Term::fork(term_of_unchecked(&free), term_of_unchecked(&bound))
        }
    }
}

/// Calls `f` once for every valid term of size `n`, in generation order.
pub fn for_each_term(n: usize, f: &mut dyn FnMut(Term)) {
    if n == 0 {
        f(Term::E);
        return;
    }
    let m = n - 1;
    for_each_term(m, &mut |t| f(Term::mid(t)));
    if m >= 1 {
        for_each_term(m, &mut |t| f(Term::right(t)));
    }
    if m >= 2 {
        for_each_term(m, &mut |t| {
            if !t.is_mid() {
                f(Term::left(t));
            }
        });
    }
    // Forks: bound size from 2 upward, free size the remainder (>= 1).
    for bound_size in 2..m {
        let free_size = m - bound_size;
        for_each_term(bound_size, &mut |v| {
            if v.is_mid() {
                return;
            }
            for_each_term(free_size, &mut |u| f(Term::fork(u, v.clone())));
        });
    }
}

/// All valid terms of size `n` in canonical order
/// (`E < m < r < l < f`, then componentwise).
pub fn enum_terms(n: usize) -> Vec<Term> {
    let mut out = Vec::new();
    for_each_term(n, &mut |t| out.push(t));
    out.sort_unstable();
    out
}

/// A uniformly seeded (not uniformly distributed) random valid term of
/// size `n`; deterministic for a fixed RNG state.
pub fn random_term<R: rand::Rng>(n: usize, rng: &mut R) -> Term {
    if n == 0 {
        return Term::E;
    }
    let m = n - 1;
    let mut ops = vec![OpKind::Mid];
    if m >= 1 {
        ops.push(OpKind::Right);
    }
    if m >= 2 {
        ops.push(OpKind::Left);
    }
    if m >= 3 {
        ops.push(OpKind::Fork);
    }
    match ops[rng.random_range(0..ops.len())] {
        OpKind::Mid => Term::mid(random_term(m, rng)),
        OpKind::Right => Term::right(random_term(m, rng)),
        OpKind::Left => Term::left(random_non_mid(m, rng)),
        OpKind::Fork => {
            let bound_size = rng.random_range(2..m);
            let free_size = m - bound_size;
            Term::fork(random_term(free_size, rng), random_non_mid(bound_size, rng))
        }
    }
}

fn random_non_mid<R: rand::Rng>(n: usize, rng: &mut R) -> Term {
    debug_assert!(n >= 2);
    loop {
        let t = random_term(n, rng);
        if !t.is_mid() {
            return t;
        }
    }
}

// ---------------------------------------------------------------------------
// Right-swept trees
// ---------------------------------------------------------------------------

impl Constructible for RightSweptTree {
    const FAMILY: Family = Family::Tree;

    fn empty() -> Self {
        RightSweptTree::Empty
    }

    fn size(&self) -> usize {
        RightSweptTree::size(self)
    }

    fn validate(&self) -> Vec<String> {
        RightSweptTree::validate(self)
    }

    fn is_mid_image(&self) -> bool {
        // The single node is the middle-image of the empty tree.
        matches!(self, RightSweptTree::Leaf | RightSweptTree::Mid(_))
    }

    fn apply_mid(input: Self) -> Self {
        match input {
            RightSweptTree::Empty => RightSweptTree::Leaf,
            t => RightSweptTree::mid(t),
        }
    }

    fn apply_right(input: Self) -> Result<Self, Error> {
        require_right(&input)?;
        Ok(RightSweptTree::right(input))
    }

    fn apply_left(input: Self) -> Result<Self, Error> {
        require_left(&input)?;
        Ok(RightSweptTree::left(input))
    }

    fn apply_fork(free: Self, bound: Self) -> Result<Self, Error> {
        require_fork(&free, &bound)?;
        Ok(RightSweptTree::left_right(bound, free))
    }

    fn decompose_unchecked(&self) -> Decomposed<Self> {
        match self {
            RightSweptTree::Leaf => Decomposed::Mid(RightSweptTree::Empty),
            RightSweptTree::Mid(c) => Decomposed::Mid((**c).clone()),
            RightSweptTree::Right(c) => Decomposed::Right((**c).clone()),
            RightSweptTree::Left(c) => Decomposed::Left((**c).clone()),
            RightSweptTree::LeftRight(l, r) => Decomposed::Fork {
                free: (**r).clone(),
                bound: (**l).clone(),
            },
            RightSweptTree::Empty => unreachable!("decompose of the empty tree"),
        }
    }
}

// ---------------------------------------------------------------------------
// Staircase tilings
// ---------------------------------------------------------------------------

fn translated_all(rects: &[Rect], dr: i64, dc: i64) -> Vec<Rect> {
    rects.iter().map(|r| r.translated(dr, dc)).collect()
}

impl Constructible for StaircaseTiling {
    const FAMILY: Family = Family::Tiling;

    fn empty() -> Self {
        StaircaseTiling::empty()
    }

    fn size(&self) -> usize {
        StaircaseTiling::size(self)
    }

    fn validate(&self) -> Vec<String> {
        StaircaseTiling::validate(self)
    }

    fn is_mid_image(&self) -> bool {
        let n = self.n();
        n >= 1 && self.rects().last() == Some(&Rect::new(n, 1, n, 1))
    }

    fn apply_mid(input: Self) -> Self {
        // Shift one column right; rectangles on the left edge keep it,
        // growing one column wider; a single square fills the bottom of
        // the new left column.
        let n = input.n();
        let mut rects: Vec<Rect> = input
            .rects()
            .iter()
            .map(|r| {
                if r.c1 == 1 {
                    Rect::new(r.r1, 1, r.r2, r.c2 + 1)
                } else {
                    r.translated(0, 1)
                }
            })
            .collect();
        rects.push(Rect::new(n + 1, 1, n + 1, 1));
        StaircaseTiling::new(n + 1, rects)
    }

    fn apply_right(input: Self) -> Result<Self, Error> {
        require_right(&input)?;
        let n = input.n();
        let mut rects = translated_all(input.rects(), 0, 1);
        rects.push(Rect::new(1, 1, n + 1, 1));
        Ok(StaircaseTiling::new(n + 1, rects))
    }

    fn apply_left(input: Self) -> Result<Self, Error> {
        require_left(&input)?;
        let n = input.n();
        let mut rects = translated_all(input.rects(), 1, 0);
        rects.push(Rect::new(1, 1, 1, n + 1));
        Ok(StaircaseTiling::new(n + 1, rects))
    }

    fn apply_fork(free: Self, bound: Self) -> Result<Self, Error> {
        require_fork(&free, &bound)?;
        let n1 = bound.n();
        let n2 = free.n();
        let mut rects = vec![Rect::new(1, 1, n2 + 1, n1 + 1)];
        rects.extend(translated_all(bound.rects(), n2 as i64 + 1, 0));
        rects.extend(translated_all(free.rects(), 0, n1 as i64 + 1));
        Ok(StaircaseTiling::new(n1 + n2 + 1, rects))
    }

    fn decompose_unchecked(&self) -> Decomposed<Self> {
        let n = self.n();
        if self.is_mid_image() {
            let rest: Vec<Rect> = self
                .rects()
                .iter()
                .take(self.rects().len() - 1)
                .map(|r| {
                    // Every other left-edge rectangle grew when the middle
                    // constructor ran, so shrinking is always possible.
                    assert!(r.c1 > 1 || r.c2 >= 2, "left-edge rectangle of width 1");
                    if r.c1 == 1 {
                        Rect::new(r.r1, 1, r.r2, r.c2 - 1)
                    } else {
                        r.translated(0, -1)
                    }
                })
                .collect();
            return Decomposed::Mid(StaircaseTiling::new(n - 1, rest));
        }
        let corner = *self.rect_at(1, 1).expect("valid tiling covers (1,1)");
        let others = || self.rects().iter().filter(|r| **r != corner);
        if corner.width() == 1 {
            let rest = others().map(|r| r.translated(0, -1)).collect();
            Decomposed::Right(StaircaseTiling::new(n - 1, rest))
        } else if corner.height() == 1 {
            let rest = others().map(|r| r.translated(-1, 0)).collect();
            Decomposed::Left(StaircaseTiling::new(n - 1, rest))
        } else {
            let h = corner.r2;
            let w = corner.c2;
            let below: Vec<Rect> = others()
                .filter(|r| r.r1 > h)
                .map(|r| r.translated(-(h as i64), 0))
                .collect();
            let right: Vec<Rect> = others()
                .filter(|r| r.c1 > w)
                .map(|r| r.translated(0, -(w as i64)))
                .collect();
            debug_assert_eq!(below.len() as u32 + right.len() as u32 + 1, n);
            Decomposed::Fork {
                free: StaircaseTiling::new(h - 1, right),
                bound: StaircaseTiling::new(w - 1, below),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Arc trees
// ---------------------------------------------------------------------------

impl Constructible for ArcTree {
    const FAMILY: Family = Family::Arcs;

    fn empty() -> Self {
        ArcTree::empty()
    }

    fn size(&self) -> usize {
        ArcTree::size(self)
    }

    fn validate(&self) -> Vec<String> {
        ArcTree::validate(self)
    }

    fn is_mid_image(&self) -> bool {
        // An arc from the leftmost to the rightmost point.
        !self.rend().is_empty() && self.rend()[0] == self.size() as u32
    }

    fn apply_mid(input: Self) -> Self {
        let n = input.size() as u32;
        let mut rend = Vec::with_capacity(input.size() + 1);
        rend.push(n + 1);
        rend.extend(input.rend().iter().map(|&q| q + 1));
        ArcTree::new(rend)
    }

    fn apply_right(input: Self) -> Result<Self, Error> {
        require_right(&input)?;
        let mut rend = Vec::with_capacity(input.size() + 1);
        rend.push(1);
        rend.extend(input.rend().iter().map(|&q| q + 1));
        Ok(ArcTree::new(rend))
    }

    fn apply_left(input: Self) -> Result<Self, Error> {
        require_left(&input)?;
        // The new point joins the second nearest point reachable without a
        // crossing: the right endpoint of the old leftmost point's arc.
        let mut rend = Vec::with_capacity(input.size() + 1);
        rend.push(input.rend()[0] + 1);
        rend.extend(input.rend().iter().map(|&q| q + 1));
        Ok(ArcTree::new(rend))
    }

    fn apply_fork(free: Self, bound: Self) -> Result<Self, Error> {
        require_fork(&free, &bound)?;
        // Bound block on points 1..=j, free block on j..=n, new arc 0 -> j.
        let j = bound.size() as u32 + 1;
        let mut rend = Vec::with_capacity(free.size() + bound.size() + 1);
        rend.push(j);
        rend.extend(bound.rend().iter().map(|&q| q + 1));
        rend.extend(free.rend().iter().map(|&q| q + j));
        Ok(ArcTree::new(rend))
    }

    fn decompose_unchecked(&self) -> Decomposed<Self> {
        let n = self.size() as u32;
        let rend = self.rend();
        let drop_head = || rend[1..].iter().map(|&q| q - 1).collect::<Vec<u32>>();
        if rend[0] == n {
            Decomposed::Mid(ArcTree::new(drop_head()))
        } else if rend[0] == 1 {
            Decomposed::Right(ArcTree::new(drop_head()))
        } else if rend[0] == rend[1] {
            Decomposed::Left(ArcTree::new(drop_head()))
        } else {
            let j = rend[0] as usize;
            let bound = rend[1..j].iter().map(|&q| q - 1).collect();
            let free = rend[j..].iter().map(|&q| q - j as u32).collect();
            Decomposed::Fork {
                free: ArcTree::new(free),
                bound: ArcTree::new(bound),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiling(n: u32, rects: &[(u32, u32, u32, u32)]) -> StaircaseTiling {
        StaircaseTiling::new(
            n,
            rects.iter().map(|&(a, b, c, d)| Rect::new(a, b, c, d)).collect(),
        )
    }

    #[test]
    fn mid_on_empty_gives_the_unit_shapes() {
        let t: RightSweptTree = eval(&Term::mid(Term::E)).unwrap();
        assert_eq!(t, RightSweptTree::Leaf);
        let s: StaircaseTiling = eval(&Term::mid(Term::E)).unwrap();
        assert_eq!(s, tiling(1, &[(1, 1, 1, 1)]));
        let a: ArcTree = eval(&Term::mid(Term::E)).unwrap();
        assert_eq!(a, ArcTree::new(vec![1]));
    }

    #[test]
    fn tiling_mid_step() {
        let s1 = tiling(1, &[(1, 1, 1, 1)]);
        let s2 = step(Decomposed::Mid(s1.clone())).unwrap();
        assert_eq!(s2, tiling(2, &[(1, 1, 1, 2), (2, 1, 2, 1)]));
        assert!(s2.validate().is_empty());
        let all = crate::verify::brute_force_tilings(2);
        assert_eq!(all.len(), 2);
        assert!(all.contains(&s2));
        // And back.
        assert_eq!(s2.decompose_unchecked(), Decomposed::Mid(s1));
    }

    #[test]
    fn arc_left_step() {
        let a = ArcTree::new(vec![1, 2]);
        let out = step(Decomposed::Left(a)).unwrap();
        assert_eq!(out, ArcTree::new(vec![2, 2, 3]));
        assert_eq!(term_of(&out).unwrap(), Term::left(Term::right(Term::mid(Term::E))));
    }

    #[test]
    fn tiling_fork_step() {
        // free = the unit square, bound = the size-2 column-and-square shape.
        let free = tiling(1, &[(1, 1, 1, 1)]);
        let bound = tiling(2, &[(1, 1, 2, 1), (1, 2, 1, 2)]);
        let out = step(Decomposed::Fork { free, bound }).unwrap();
        assert_eq!(
            out,
            tiling(4, &[(1, 1, 2, 3), (1, 4, 1, 4), (3, 1, 4, 1), (3, 2, 3, 2)])
        );
        assert!(out.validate().is_empty());
        assert!(crate::verify::brute_force_tilings(4).contains(&out));
    }

    #[test]
    fn fork_rejects_mid_bound_and_empty_free() {
        let unit = tiling(1, &[(1, 1, 1, 1)]);
        let col2 = tiling(2, &[(1, 1, 2, 1), (1, 2, 1, 2)]);
        assert!(matches!(
            StaircaseTiling::apply_fork(unit.clone(), unit.clone()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            StaircaseTiling::apply_fork(StaircaseTiling::empty(), col2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn left_rejects_mid_images() {
        let rows2 = tiling(2, &[(1, 1, 1, 2), (2, 1, 2, 1)]);
        assert!(rows2.is_mid_image());
        assert!(matches!(
            StaircaseTiling::apply_left(rows2),
            Err(Error::Domain(_))
        ));
        let a = ArcTree::new(vec![2, 2]);
        assert!(a.is_mid_image());
        assert!(ArcTree::apply_left(a).is_err());
    }

    #[test]
    fn arc_mid_decompose() {
        let a = ArcTree::new(vec![3, 2, 3]);
        assert_eq!(
            decompose(&a).unwrap(),
            Decomposed::Mid(ArcTree::new(vec![1, 2]))
        );
    }

    #[test]
    fn tree_fork_decompose() {
        let t = RightSweptTree::left_right(
            RightSweptTree::right(RightSweptTree::Leaf),
            RightSweptTree::Leaf,
        );
        assert_eq!(
            decompose(&t).unwrap(),
            Decomposed::Fork {
                free: RightSweptTree::Leaf,
                bound: RightSweptTree::right(RightSweptTree::Leaf),
            }
        );
    }

    #[test]
    fn eval_examples() {
        let mid_chain: RightSweptTree =
            eval(&Term::mid(Term::mid(Term::mid(Term::E)))).unwrap();
        assert_eq!(
            mid_chain,
            RightSweptTree::mid(RightSweptTree::mid(RightSweptTree::Leaf))
        );
        let s: StaircaseTiling =
            eval(&Term::left(Term::right(Term::mid(Term::E)))).unwrap();
        assert_eq!(s, tiling(3, &[(1, 1, 1, 3), (2, 1, 3, 1), (2, 2, 2, 2)]));
        let a: ArcTree = eval(&Term::E).unwrap();
        assert_eq!(a, ArcTree::empty());
    }

    #[test]
    fn term_of_unit_square() {
        let s = tiling(1, &[(1, 1, 1, 1)]);
        assert_eq!(term_of(&s).unwrap(), Term::mid(Term::E));
    }

    #[test]
    fn enum_terms_small() {
        assert_eq!(enum_terms(0), vec![Term::E]);
        assert_eq!(enum_terms(1), vec![Term::mid(Term::E)]);
        let m = |t| Term::mid(t);
        let r = |t| Term::right(t);
        let l = |t| Term::left(t);
        assert_eq!(
            enum_terms(3),
            vec![
                m(m(m(Term::E))),
                m(r(m(Term::E))),
                r(m(m(Term::E))),
                r(r(m(Term::E))),
                l(r(m(Term::E))),
            ]
        );
    }

    #[test]
    fn enum_terms_size_four_forks() {
        let forks: Vec<Term> = enum_terms(4)
            .into_iter()
            .filter(|t| t.root_op() == Some(OpKind::Fork))
            .collect();
        assert_eq!(
            forks,
            vec![Term::fork(Term::mid(Term::E), Term::right(Term::mid(Term::E)))]
        );
    }

    #[test]
    fn term_validation() {
        assert!(Term::mid(Term::left(Term::E)).validate()[0].contains("size 0 < 2"));
        assert!(Term::left(Term::mid(Term::mid(Term::E))).validate()[0]
            .contains("middle-image"));
        assert!(Term::fork(Term::E, Term::right(Term::mid(Term::E)))
            .validate()[0]
            .contains("free operand"));
    }

    #[test]
    fn worked_example_term_round_trips() {
        // f(m(l(r(m(m(E))))), r(f(m(E), r(r(m(E)))))), the size-12 example.
        let e = || Term::E;
        let term = Term::fork(
            Term::mid(Term::left(Term::right(Term::mid(Term::mid(e()))))),
            Term::right(Term::fork(
                Term::mid(e()),
                Term::right(Term::right(Term::mid(e()))),
            )),
        );
        assert!(term.validate().is_empty());
        assert_eq!(term.size(), 12);
        let s: StaircaseTiling = eval(&term).unwrap();
        assert!(s.validate().is_empty());
        assert_eq!(s.size(), 12);
        assert_eq!(term_of(&s).unwrap(), term);
    }

    #[test]
    fn round_trip_exhaustive_small() {
        for n in 0..=7 {
            for term in enum_terms(n) {
                let t: RightSweptTree = eval(&term).unwrap();
                let s: StaircaseTiling = eval(&term).unwrap();
                let a: ArcTree = eval(&term).unwrap();
                assert!(t.validate().is_empty(), "{term:?} -> {t:?}");
                assert!(s.validate().is_empty(), "{term:?} -> {s:?}");
                assert!(a.validate().is_empty(), "{term:?} -> {a:?}");
                assert_eq!(term_of(&t).unwrap(), term);
                assert_eq!(term_of(&s).unwrap(), term);
                assert_eq!(term_of(&a).unwrap(), term);
            }
        }
    }

    #[test]
    fn decompose_rejects_invalid_shapes() {
        let bad = ArcTree::new(vec![3, 1, 3]);
        assert!(matches!(decompose(&bad), Err(Error::InvalidShape(_))));
        assert!(matches!(
            decompose(&ArcTree::empty()),
            Err(Error::Domain(_))
        ));
    }

    /// After shifting the diagram right by one point, the targets the new
    /// leftmost point can reach without crossing an arc, in order; the
    /// nearest is always point 1.
    fn visible_targets(a: &ArcTree) -> Vec<u32> {
        let n = a.size() as u32;
        let arcs: Vec<(u32, u32)> = a
            .rend()
            .iter()
            .enumerate()
            .map(|(p, &q)| (p as u32 + 1, q + 1))
            .collect();
        (1..=n + 1)
            .filter(|&q| arcs.iter().all(|&(p, r)| !(p < q && q < r)))
            .collect()
    }

    #[test]
    fn left_step_matches_visibility_oracle() {
        for n in 1..=8usize {
            for a in crate::verify::brute_force_arcs(n) {
                let visible = visible_targets(&a);
                assert_eq!(visible[0], 1, "nearest point is always reachable");
                let second = visible[1];
                if a.is_mid_image() {
                    // Only the nearest and the rightmost are reachable.
                    assert_eq!(second, n as u32 + 1);
                    assert!(ArcTree::apply_left(a).is_err());
                } else {
                    assert_ne!(second, n as u32 + 1);
                    let stepped = ArcTree::apply_left(a).unwrap();
                    assert_eq!(stepped.rend()[0], second);
                }
            }
        }
    }
}
