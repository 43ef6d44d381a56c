//! The two classical bijections: staircase tilings to binary trees (peel
//! off the corner rectangle; the region to its right becomes the left
//! subtree and the region below it the right subtree) and arc diagrams to
//! planar trees (the rightmost point is the root and every arc a parent
//! edge, children ordered by increasing left endpoint).

use crate::alpha::alpha;
use crate::error::Error;
use crate::model::{ArcTree, BinaryTree, Family, PlanarTree, Rect, Shape, StaircaseTiling};

/// Classical bijection from tilings to binary trees.
pub fn tiling_to_binary(tiling: &StaircaseTiling) -> Result<BinaryTree, Error> {
    tiling_shape(tiling).check_valid()?;
    Ok(to_binary(tiling.n(), tiling.rects().to_vec()))
}

fn tiling_shape(t: &StaircaseTiling) -> Shape {
    Shape::Tiling(t.clone())
}

fn to_binary(n: u32, rects: Vec<Rect>) -> BinaryTree {
    if n == 0 {
        return BinaryTree::Leaf;
    }
    let corner = *rects
        .iter()
        .find(|r| r.contains(1, 1))
        .expect("valid tiling covers (1,1)");
    let h = corner.r2;
    let w = corner.c2;
    let right_region: Vec<Rect> = rects
        .iter()
        .filter(|r| **r != corner && r.c1 > w)
        .map(|r| r.translated(0, -(w as i64)))
        .collect();
    let below_region: Vec<Rect> = rects
        .iter()
        .filter(|r| **r != corner && r.r1 > h)
        .map(|r| r.translated(-(h as i64), 0))
        .collect();
    BinaryTree::node(to_binary(h - 1, right_region), to_binary(n - h, below_region))
}

/// Inverse of [`tiling_to_binary`].
pub fn binary_to_tiling(tree: &BinaryTree) -> StaircaseTiling {
    let mut rects = Vec::with_capacity(tree.size());
    from_binary(tree, 0, 0, &mut rects);
    StaircaseTiling::new(tree.size() as u32, rects)
}

fn from_binary(tree: &BinaryTree, dr: i64, dc: i64, rects: &mut Vec<Rect>) {
    if let BinaryTree::Node(left, right) = tree {
        let h = left.size() as i64 + 1;
        let w = right.size() as i64 + 1;
        rects.push(Rect::new(1, 1, h as u32, w as u32).translated(dr, dc));
        from_binary(left, dr, dc + w, rects);
        from_binary(right, dr + h, dc, rects);
    }
}

/// Classical bijection from arc diagrams to planar trees.
pub fn arcs_to_planar(arcs: &ArcTree) -> Result<PlanarTree, Error> {
    Shape::Arcs(arcs.clone()).check_valid()?;
    let n = arcs.size();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (p, &q) in arcs.rend().iter().enumerate() {
        children[q as usize].push(p);
    }
    Ok(planar_node(n, &children))
}

fn planar_node(point: usize, children: &[Vec<usize>]) -> PlanarTree {
    PlanarTree::node(
        children[point]
            .iter()
            .map(|&p| planar_node(p, children))
            .collect(),
    )
}

/// Inverse of [`arcs_to_planar`]: lays the tree back onto the line, each
/// subtree occupying the contiguous block of points ending at its root.
pub fn planar_to_arcs(tree: &PlanarTree) -> ArcTree {
    let n = tree.size();
    let mut rend = vec![0u32; n];
    assign_points(tree, n as u32, &mut rend);
    ArcTree::new(rend)
}

fn assign_points(tree: &PlanarTree, own_point: u32, rend: &mut [u32]) {
    let mut pos = own_point - tree.size() as u32;
    for child in &tree.children {
        let child_point = pos + child.size() as u32;
        rend[child_point as usize] = own_point;
        assign_points(child, child_point, rend);
        pos = child_point + 1;
    }
}

/// The correspondence between binary and planar trees induced by routing
/// through the term bijection: classical inverse, then the recursive map,
/// then the other classical map.
pub fn induced(shape: &Shape, to: Family) -> Result<Shape, Error> {
    let tiling = match shape {
        Shape::Binary(b) => binary_to_tiling(b),
        Shape::Planar(p) => alpha::<ArcTree, StaircaseTiling>(&planar_to_arcs(p))?,
        _ => {
            return Err(Error::Domain(format!(
                "induced map takes binary or planar trees, got {}",
                shape.family()
            )))
        }
    };
    match to {
        Family::Binary => Ok(Shape::Binary(tiling_to_binary(&tiling)?)),
        Family::Planar => {
            let arcs: ArcTree = alpha(&tiling)?;
            Ok(Shape::Planar(arcs_to_planar(&arcs)?))
        }
        other => Err(Error::Domain(format!(
            "induced map targets binary or planar trees, got {other}"
        ))),
    }
}
