//! The relative bijection from right-swept trees to staircase tilings.
//!
//! The forward map sends a root with only a right (middle) child to a full
//! column (row) with the rest of the tree built in the remaining region,
//! and a root carrying a left child to a chain of rectangles along the top
//! row: one rectangle per vertex of the left spine, each spanning one more
//! column than the size of that vertex's right subtree, with those right
//! subtrees built in the regions below their rectangles.
//!
//! The original statement of the map is a set of five relative-position
//! rules; [`check_beta_rules`] re-verifies them as local adjacency facts on
//! the node-to-rectangle correspondence the algorithm induces.

use std::collections::HashMap;

use crate::error::Error;
use crate::model::{Rect, RightSweptTree, StaircaseTiling};

/// Child slot labels, also used as path components for node loci.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Left,
    Mid,
    Right,
}

fn path_string(path: &[Slot]) -> String {
    let mut s = String::from("root");
    for slot in path {
        s.push('.');
        s.push(match slot {
            Slot::Left => 'L',
            Slot::Mid => 'M',
            Slot::Right => 'R',
        });
    }
    s
}

/// Maps a valid right-swept tree to its staircase tiling.
pub fn beta(tree: &RightSweptTree) -> Result<StaircaseTiling, Error> {
    let violations = tree.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidShape(violations));
    }
    let (tiling, _) = beta_with_map(tree);
    Ok(tiling)
}

/// Like [`beta`], also returning the rectangle assigned to every node,
/// keyed by the node's slot path from the root. The input must be valid.
pub fn beta_with_map(tree: &RightSweptTree) -> (StaircaseTiling, HashMap<Vec<Slot>, Rect>) {
    let mut rects = Vec::with_capacity(tree.size());
    let mut map = HashMap::new();
    let mut path = Vec::new();
    build(tree, 0, 0, &mut rects, &mut map, &mut path);
    (StaircaseTiling::new(tree.size() as u32, rects), map)
}

/// Builds the tiling of `tree` inside the sub-staircase whose local cell
/// `(r, c)` sits at global `(r + dr, c + dc)`.
fn build(
    tree: &RightSweptTree,
    dr: u32,
    dc: u32,
    rects: &mut Vec<Rect>,
    map: &mut HashMap<Vec<Slot>, Rect>,
    path: &mut Vec<Slot>,
) {
    let n = tree.size() as u32;
    let emit = |local: Rect, rects: &mut Vec<Rect>, map: &mut HashMap<Vec<Slot>, Rect>, path: &Vec<Slot>| {
        let global = local.translated(dr as i64, dc as i64);
        rects.push(global);
        map.insert(path.clone(), global);
    };
    match tree {
        RightSweptTree::Empty => {}
        RightSweptTree::Leaf => {
            emit(Rect::new(1, 1, 1, 1), rects, map, path);
        }
        RightSweptTree::Right(child) => {
            emit(Rect::new(1, 1, n, 1), rects, map, path);
            path.push(Slot::Right);
            build(child, dr, dc + 1, rects, map, path);
            path.pop();
        }
        RightSweptTree::Mid(child) => {
            emit(Rect::new(1, 1, 1, n), rects, map, path);
            path.push(Slot::Mid);
            build(child, dr + 1, dc, rects, map, path);
            path.pop();
        }
        RightSweptTree::Left(_) | RightSweptTree::LeftRight(..) => {
            // Left spine, root first.
            let mut spine: Vec<&RightSweptTree> = vec![tree];
            while let Some(next) = spine.last().unwrap().left_child() {
                spine.push(next);
            }
            let depth = spine.len() - 1;
            let mut col = 1u32;
            // Deepest spine vertex first: its rectangle starts at column 1.
            for (i, node) in spine.iter().rev().enumerate() {
                let right_subtree = node.right_child();
                let width = right_subtree.map_or(0, |s| s.size()) as u32 + 1;
                let right_col = col + width - 1;
                let height = n + 1 - right_col;
                let spine_path_len = depth - i;
                let mut node_path = path.clone();
                node_path.extend(std::iter::repeat_n(Slot::Left, spine_path_len));
                let global = Rect::new(1, col, height, right_col).translated(dr as i64, dc as i64);
                rects.push(global);
                map.insert(node_path.clone(), global);
                if let Some(sub) = right_subtree {
                    let mut sub_path = node_path;
                    sub_path.push(Slot::Right);
                    let saved = std::mem::replace(path, sub_path);
                    build(sub, dr + height, dc + col - 1, rects, map, path);
                    *path = saved;
                }
                col += width;
            }
            // The chain spans the whole top row.
            assert_eq!(col - 1, n, "spine chain must end at column {n}");
        }
    }
}

/// Maps a valid staircase tiling back to its right-swept tree.
pub fn beta_inv(tiling: &StaircaseTiling) -> Result<RightSweptTree, Error> {
    let violations = tiling.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidShape(violations));
    }
    Ok(rebuild(tiling.n(), tiling.rects().to_vec()))
}

/// Rebuilds the tree from a tiling given in local coordinates.
fn rebuild(n: u32, rects: Vec<Rect>) -> RightSweptTree {
    if n == 0 {
        return RightSweptTree::Empty;
    }
    let corner = *rects
        .iter()
        .find(|r| r.contains(1, 1))
        .expect("valid tiling covers (1,1)");
    if corner.width() == 1 {
        let rest: Vec<Rect> = rects
            .iter()
            .filter(|r| **r != corner)
            .map(|r| r.translated(0, -1))
            .collect();
        return match rebuild(n - 1, rest) {
            RightSweptTree::Empty => RightSweptTree::Leaf,
            child => RightSweptTree::right(child),
        };
    }
    if corner.height() == 1 {
        let rest: Vec<Rect> = rects
            .iter()
            .filter(|r| **r != corner)
            .map(|r| r.translated(-1, 0))
            .collect();
        return match rebuild(n - 1, rest) {
            RightSweptTree::Empty => RightSweptTree::Leaf,
            child => RightSweptTree::mid(child),
        };
    }
    // Chain of rectangles along the top row, left to right.
    let mut chain: Vec<Rect> = rects.iter().filter(|r| r.r1 == 1).copied().collect();
    chain.sort_unstable_by_key(|r| r.c1);
    assert!(chain.len() >= 2, "top-row chain has at least two rectangles");
    assert_eq!(chain.last().unwrap().c2, n, "chain ends at column {n}");
    let mut tree: Option<RightSweptTree> = None;
    for band in &chain {
        // Rectangles strictly below this chain rectangle form a sub-staircase
        // of size width - 1; none straddles a band boundary.
        let below: Vec<Rect> = rects
            .iter()
            .filter(|r| r.r1 > band.r2 && r.c1 >= band.c1 && r.c1 <= band.c2)
            .map(|r| {
                assert!(
                    r.c2 <= band.c2,
                    "rectangle straddles a chain band boundary"
                );
                r.translated(-(band.r2 as i64), -(band.c1 as i64 - 1))
            })
            .collect();
        let sub = rebuild(band.width() - 1, below);
        tree = Some(match (tree, sub) {
            // Deepest spine vertex: width >= 2 guarantees a right subtree.
            (None, child) => {
                assert!(
                    !matches!(child, RightSweptTree::Empty),
                    "deepest chain rectangle has width >= 2"
                );
                RightSweptTree::right(child)
            }
            (Some(left), RightSweptTree::Empty) => RightSweptTree::left(left),
            (Some(left), right) => RightSweptTree::left_right(left, right),
        });
    }
    tree.unwrap()
}

fn imm_right(a: &Rect, b: &Rect) -> bool {
    b.c1 == a.c2 + 1 && a.r1 == b.r1
}

fn imm_below(a: &Rect, b: &Rect) -> bool {
    b.r1 == a.r2 + 1 && a.c1 == b.c1
}

/// Re-checks the five relative-position rules on the node-to-rectangle
/// correspondence induced by [`beta`]. Expects `s == beta(t)`; returns one
/// message per violated rule (empty for every valid pair).
///
/// Rule scope notes: a right or middle child that itself has a left child
/// falls under rule 5, which places the bottom of its left spine where
/// rules 2, 3 or 4 would have put the child, and walks the spine
/// rectangles rightward to the child's own.
pub fn check_beta_rules(tree: &RightSweptTree, tiling: &StaircaseTiling) -> Vec<String> {
    let mut out = Vec::new();
    let violations = tree.validate();
    if !violations.is_empty() {
        return violations;
    }
    let (expected, map) = beta_with_map(tree);
    if &expected != tiling {
        out.push("tiling is not the beta image of the tree".to_string());
        return out;
    }
    if matches!(tree, RightSweptTree::Empty) {
        return out;
    }
    let mut path = Vec::new();
    check_node(tree, None, &mut path, &map, &mut out);
    out
}

fn rect_of<'m>(map: &'m HashMap<Vec<Slot>, Rect>, path: &[Slot]) -> &'m Rect {
    map.get(path).expect("every node has a rectangle")
}

fn check_node(
    node: &RightSweptTree,
    own_slot: Option<Slot>,
    path: &mut Vec<Slot>,
    map: &HashMap<Vec<Slot>, Rect>,
    out: &mut Vec<String>,
) {
    let parent_rect = *rect_of(map, path);
    let parent_is_left_child = own_slot == Some(Slot::Left);
    let children: Vec<(Slot, &RightSweptTree)> = match node {
        RightSweptTree::Empty | RightSweptTree::Leaf => Vec::new(),
        RightSweptTree::Mid(c) => vec![(Slot::Mid, &**c)],
        RightSweptTree::Right(c) => vec![(Slot::Right, &**c)],
        RightSweptTree::Left(c) => vec![(Slot::Left, &**c)],
        RightSweptTree::LeftRight(l, r) => vec![(Slot::Left, &**l), (Slot::Right, &**r)],
    };
    for (slot, child) in children {
        path.push(slot);
        let child_rect = *rect_of(map, path);
        let locus = path_string(path);
        match slot {
            Slot::Left => {
                // Rule 1: the parent sits immediately right of a left child.
                if !imm_right(&child_rect, &parent_rect) {
                    out.push(format!("rule 1 violated at {locus}"));
                }
            }
            Slot::Mid => {
                if child.left_child().is_none() {
                    // Rule 4: middle child immediately below.
                    if !imm_below(&parent_rect, &child_rect) {
                        out.push(format!("rule 4 violated at {locus}"));
                    }
                } else {
                    check_spine_chain(child, &parent_rect, false, path, map, out);
                }
            }
            Slot::Right => {
                let rule2_context =
                    !parent_is_left_child && matches!(node, RightSweptTree::Right(_));
                if child.left_child().is_none() {
                    if rule2_context {
                        // Rule 2: qualifying right child immediately right.
                        if !imm_right(&parent_rect, &child_rect) {
                            out.push(format!("rule 2 violated at {locus}"));
                        }
                    } else {
                        // Rule 3: right child of a left child, or the right
                        // half of a fork, immediately below.
                        if !imm_below(&parent_rect, &child_rect) {
                            out.push(format!("rule 3 violated at {locus}"));
                        }
                    }
                } else {
                    check_spine_chain(child, &parent_rect, rule2_context, path, map, out);
                }
            }
        }
        check_node(child, Some(slot), path, map, out);
        path.pop();
    }
}

/// Rule 5: the left spine of `child` fills the gap between the parent's
/// rectangle and the child's own, deepest vertex anchored where rules 2-4
/// would have put the child.
fn check_spine_chain(
    child: &RightSweptTree,
    parent_rect: &Rect,
    anchored_right: bool,
    child_path: &[Slot],
    map: &HashMap<Vec<Slot>, Rect>,
    out: &mut Vec<String>,
) {
    let locus = path_string(child_path);
    let mut spine_path = child_path.to_vec();
    let mut spine_rects = vec![*rect_of(map, &spine_path)];
    let mut cursor = child;
    while let Some(next) = cursor.left_child() {
        spine_path.push(Slot::Left);
        spine_rects.push(*rect_of(map, &spine_path));
        cursor = next;
    }
    let deepest = spine_rects.last().unwrap();
    let anchor_ok = if anchored_right {
        imm_right(parent_rect, deepest)
    } else {
        imm_below(parent_rect, deepest)
    };
    if !anchor_ok {
        out.push(format!("rule 5 anchor violated at {locus}"));
    }
    for pair in spine_rects.windows(2) {
        if !imm_right(&pair[1], &pair[0]) {
            out.push(format!("rule 5 chain broken at {locus}"));
        }
    }
}
