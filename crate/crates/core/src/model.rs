//! The five shape families and their validators.
//!
//! Coordinates for tilings: rows are numbered `1..=n` top to bottom and
//! columns `1..=n` left to right, so the size-`n` staircase is the cell set
//! `{(r, c) : r + c <= n + 1}`. Every rectangle of a valid tiling has its
//! bottom-right corner on the stepped diagonal `r + c = n + 1`.

use std::fmt;

use crate::error::Error;

/// Tag for the five shape families handled by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Right-swept planar unary-binary trees (`T`).
    Tree,
    /// Diagonal rectangular tilings of staircase shapes (`S`).
    Tiling,
    /// Non-crossing arc diagrams with distinct left endpoints (`A`).
    Arcs,
    /// Rooted planar binary trees (`B`).
    Binary,
    /// Rooted planar trees (`P`).
    Planar,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::Tree => 'T',
            Family::Tiling => 'S',
            Family::Arcs => 'A',
            Family::Binary => 'B',
            Family::Planar => 'P',
        }
    }

    /// Parses the single-letter family tag used on the command line.
    pub fn from_letter(s: &str) -> Option<Family> {
        match s {
            "T" | "t" => Some(Family::Tree),
            "S" | "s" => Some(Family::Tiling),
            "A" | "a" => Some(Family::Arcs),
            "B" | "b" => Some(Family::Binary),
            "P" | "p" => Some(Family::Planar),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

// ---------------------------------------------------------------------------
// Right-swept trees
// ---------------------------------------------------------------------------

/// A right-swept planar unary-binary tree.
///
/// Every node is a leaf, has a single left, middle or right child, or has
/// both a left and a right child. A subtree sitting in a left slot may not
/// be a single leaf and its root may not have a middle child. `Empty` is
/// the distinct size-0 tree and is only legal at the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RightSweptTree {
    Empty,
    Leaf,
    Mid(Box<RightSweptTree>),
    Right(Box<RightSweptTree>),
    Left(Box<RightSweptTree>),
    LeftRight(Box<RightSweptTree>, Box<RightSweptTree>),
}

impl RightSweptTree {
    pub fn mid(child: RightSweptTree) -> RightSweptTree {
        RightSweptTree::Mid(Box::new(child))
    }

    pub fn right(child: RightSweptTree) -> RightSweptTree {
        RightSweptTree::Right(Box::new(child))
    }

    pub fn left(child: RightSweptTree) -> RightSweptTree {
        RightSweptTree::Left(Box::new(child))
    }

    pub fn left_right(left: RightSweptTree, right: RightSweptTree) -> RightSweptTree {
        RightSweptTree::LeftRight(Box::new(left), Box::new(right))
    }

    /// Total node count.
    pub fn size(&self) -> usize {
        match self {
            RightSweptTree::Empty => 0,
            RightSweptTree::Leaf => 1,
            RightSweptTree::Mid(c) | RightSweptTree::Right(c) | RightSweptTree::Left(c) => {
                1 + c.size()
            }
            RightSweptTree::LeftRight(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// The subtree occupying the left slot, if any.
    pub fn left_child(&self) -> Option<&RightSweptTree> {
        match self {
            RightSweptTree::Left(c) => Some(c),
            RightSweptTree::LeftRight(l, _) => Some(l),
            _ => None,
        }
    }

    /// The subtree occupying the right slot, if any.
    pub fn right_child(&self) -> Option<&RightSweptTree> {
        match self {
            RightSweptTree::Right(c) => Some(c),
            RightSweptTree::LeftRight(_, r) => Some(r),
            _ => None,
        }
    }

    pub fn mid_child(&self) -> Option<&RightSweptTree> {
        match self {
            RightSweptTree::Mid(c) => Some(c),
            _ => None,
        }
    }

    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        if matches!(self, RightSweptTree::Empty) {
            return out;
        }
        self.validate_at("root", false, &mut out);
        out
    }

    fn validate_at(&self, path: &str, in_left_slot: bool, out: &mut Vec<String>) {
        match self {
            RightSweptTree::Empty => {
                out.push(format!("empty tree used as a child at {path}"));
            }
            RightSweptTree::Leaf => {
                if in_left_slot {
                    out.push(format!("left child is a leaf at {path}"));
                }
            }
            RightSweptTree::Mid(c) => {
                if in_left_slot {
                    out.push(format!("left child has a middle child at {path}"));
                }
                c.validate_at(&format!("{path}.M"), false, out);
            }
            RightSweptTree::Right(c) => {
                c.validate_at(&format!("{path}.R"), false, out);
            }
            RightSweptTree::Left(c) => {
                c.validate_at(&format!("{path}.L"), true, out);
            }
            RightSweptTree::LeftRight(l, r) => {
                l.validate_at(&format!("{path}.L"), true, out);
                r.validate_at(&format!("{path}.R"), false, out);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Staircase tilings
// ---------------------------------------------------------------------------

/// An axis-aligned rectangle of grid cells: rows `r1..=r2`, columns `c1..=c2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rect {
    pub r1: u32,
    pub c1: u32,
    pub r2: u32,
    pub c2: u32,
}

impl Rect {
    pub fn new(r1: u32, c1: u32, r2: u32, c2: u32) -> Rect {
        Rect { r1, c1, r2, c2 }
    }

    pub fn width(&self) -> u32 {
        self.c2 - self.c1 + 1
    }

    pub fn height(&self) -> u32 {
        self.r2 - self.r1 + 1
    }

    pub fn contains(&self, r: u32, c: u32) -> bool {
        self.r1 <= r && r <= self.r2 && self.c1 <= c && c <= self.c2
    }

    pub fn translated(&self, dr: i64, dc: i64) -> Rect {
        Rect {
            r1: (self.r1 as i64 + dr) as u32,
            c1: (self.c1 as i64 + dc) as u32,
            r2: (self.r2 as i64 + dr) as u32,
            c2: (self.c2 as i64 + dc) as u32,
        }
    }
}

/// A diagonal rectangular tiling of the size-`n` staircase.
///
/// The rectangle list is kept sorted by bottom row (`r2`), which walks the
/// stepped diagonal from top-right to bottom-left; equality of tilings is
/// equality of this canonical list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StaircaseTiling {
    n: u32,
    rects: Vec<Rect>,
}

impl StaircaseTiling {
    pub fn new(n: u32, mut rects: Vec<Rect>) -> StaircaseTiling {
        rects.sort_unstable_by_key(|r| (r.r2, r.r1, r.c1, r.c2));
        StaircaseTiling { n, rects }
    }

    pub fn empty() -> StaircaseTiling {
        StaircaseTiling { n: 0, rects: Vec::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rects.len()
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    /// The rectangle covering cell `(r, c)`, if any.
    pub fn rect_at(&self, r: u32, c: u32) -> Option<&Rect> {
        self.rects.iter().find(|x| x.contains(r, c))
    }

    fn in_staircase(n: u32, r: u32, c: u32) -> bool {
        r >= 1 && c >= 1 && r + c <= n + 1
    }

    pub fn validate(&self) -> Vec<String> {
        let n = self.n;
        let mut out = Vec::new();
        if self.rects.len() as u32 != n {
            out.push(format!("expected {} rectangles, found {}", n, self.rects.len()));
        }
        for (k, rect) in self.rects.iter().enumerate() {
            if rect.r1 < 1 || rect.c1 < 1 || rect.r1 > rect.r2 || rect.c1 > rect.c2 {
                out.push(format!("rectangle {k} is malformed: {rect:?}"));
                continue;
            }
            if rect.r2 + rect.c2 != n + 1 {
                out.push(format!(
                    "rectangle {k} bottom-right ({},{}) is not on the diagonal",
                    rect.r2, rect.c2
                ));
            }
        }
        if !out.is_empty() {
            return out;
        }
        // Canonical position k holds the rectangle owning diagonal cell
        // (k+1, n-k).
        for (k, rect) in self.rects.iter().enumerate() {
            if rect.r2 != k as u32 + 1 {
                out.push(format!(
                    "rectangle {k} has bottom row {}, expected {}",
                    rect.r2,
                    k + 1
                ));
            }
        }
        // Exact cover of the staircase.
        let mut cover = vec![vec![0u32; n as usize + 2]; n as usize + 2];
        for rect in &self.rects {
            for r in rect.r1..=rect.r2 {
                for c in rect.c1..=rect.c2 {
                    if !Self::in_staircase(n, r, c) {
                        out.push(format!("cell ({r},{c}) lies outside the staircase"));
                    } else {
                        cover[r as usize][c as usize] += 1;
                    }
                }
            }
        }
        for r in 1..=n {
            for c in 1..=(n + 1 - r) {
                match cover[r as usize][c as usize] {
                    0 => out.push(format!("cell ({r},{c}) is uncovered")),
                    1 => {}
                    k => out.push(format!("cell ({r},{c}) is covered {k} times")),
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Arc trees
// ---------------------------------------------------------------------------

/// A non-crossing arc diagram over points `0..=n` with distinct left
/// endpoints, encoded by the right endpoint of each point's arc:
/// `rend[p]` is where the unique arc starting at `p` ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcTree {
    rend: Vec<u32>,
}

impl ArcTree {
    pub fn new(rend: Vec<u32>) -> ArcTree {
        ArcTree { rend }
    }

    pub fn empty() -> ArcTree {
        ArcTree { rend: Vec::new() }
    }

    /// Number of arcs; the diagram has `size() + 1` points.
    pub fn size(&self) -> usize {
        self.rend.len()
    }

    pub fn rend(&self) -> &[u32] {
        &self.rend
    }

    pub fn validate(&self) -> Vec<String> {
        let n = self.rend.len() as u32;
        let mut out = Vec::new();
        for (p, &q) in self.rend.iter().enumerate() {
            let p = p as u32;
            if q <= p {
                out.push(format!("rend[{p}]={q} not > {p}"));
            } else if q > n {
                out.push(format!("rend[{p}]={q} exceeds rightmost point {n}"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for p in 0..self.rend.len() {
            for q in p + 1..self.rend.len() {
                let (rp, rq) = (self.rend[p], self.rend[q]);
                if (q as u32) < rp && rp < rq {
                    out.push(format!("arcs from {p} and {q} cross"));
                }
            }
        }
        // Redundant: following arcs left to right from any point reaches the
        // rightmost point.
        for start in 0..self.rend.len() {
            let mut p = start as u32;
            let mut steps = 0;
            while p < n {
                p = self.rend[p as usize];
                steps += 1;
                if steps > n {
                    out.push(format!("point {start} does not reach point {n}"));
                    break;
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Binary and planar trees
// ---------------------------------------------------------------------------

/// A rooted planar binary tree; size counts internal nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> BinaryTree {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn validate(&self) -> Vec<String> {
        Vec::new()
    }
}

/// A rooted planar tree with ordered children; size counts edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlanarTree {
    pub children: Vec<PlanarTree>,
}

impl PlanarTree {
    pub fn leaf() -> PlanarTree {
        PlanarTree { children: Vec::new() }
    }

    pub fn node(children: Vec<PlanarTree>) -> PlanarTree {
        PlanarTree { children }
    }

    pub fn size(&self) -> usize {
        self.children.iter().map(|c| c.size() + 1).sum()
    }

    pub fn validate(&self) -> Vec<String> {
        Vec::new()
    }
}

// ---------------------------------------------------------------------------
// Dynamic shape value
// ---------------------------------------------------------------------------

/// A shape of any family, for the code paths (CLI, codec, suite plumbing)
/// that pick the family at runtime.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Tree(RightSweptTree),
    Tiling(StaircaseTiling),
    Arcs(ArcTree),
    Binary(BinaryTree),
    Planar(PlanarTree),
}

impl Shape {
    pub fn family(&self) -> Family {
        match self {
            Shape::Tree(_) => Family::Tree,
            Shape::Tiling(_) => Family::Tiling,
            Shape::Arcs(_) => Family::Arcs,
            Shape::Binary(_) => Family::Binary,
            Shape::Planar(_) => Family::Planar,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Shape::Tree(t) => t.size(),
            Shape::Tiling(s) => s.size(),
            Shape::Arcs(a) => a.size(),
            Shape::Binary(b) => b.size(),
            Shape::Planar(p) => p.size(),
        }
    }

    pub fn validate(&self) -> Vec<String> {
        match self {
            Shape::Tree(t) => t.validate(),
            Shape::Tiling(s) => s.validate(),
            Shape::Arcs(a) => a.validate(),
            Shape::Binary(b) => b.validate(),
            Shape::Planar(p) => p.validate(),
        }
    }

    /// Validation as a hard error, for operations whose precondition is a
    /// valid shape.
    pub fn check_valid(&self) -> Result<(), Error> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidShape(violations))
        }
    }
}
