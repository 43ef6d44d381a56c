//! Diagram output: unit-cell ASCII pictures and minimal standalone SVG.
//! Both are byte-deterministic for a fixed input.

use std::fmt::Write as _;

use crate::model::{ArcTree, BinaryTree, PlanarTree, RightSweptTree, Shape, StaircaseTiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    Ascii,
    Svg,
}

impl RenderMode {
    pub fn from_name(s: &str) -> Option<RenderMode> {
        match s {
            "ascii" => Some(RenderMode::Ascii),
            "svg" => Some(RenderMode::Svg),
            _ => None,
        }
    }
}

/// Renders a valid shape as a diagram.
pub fn render(shape: &Shape, mode: RenderMode) -> String {
    match mode {
        RenderMode::Ascii => match shape {
            Shape::Tiling(s) => tiling_ascii(s),
            Shape::Tree(t) => tree_ascii(t),
            Shape::Arcs(a) => arcs_ascii(a),
            Shape::Binary(b) => binary_ascii(b),
            Shape::Planar(p) => planar_ascii(p),
        },
        RenderMode::Svg => match shape {
            Shape::Tiling(s) => tiling_svg(s),
            Shape::Tree(t) => tree_svg(t),
            Shape::Arcs(a) => arcs_svg(a),
            Shape::Binary(b) => binary_svg(b),
            Shape::Planar(p) => planar_svg(p),
        },
    }
}

// ---------------------------------------------------------------------------
// ASCII
// ---------------------------------------------------------------------------

fn grid_to_string(grid: Vec<Vec<u8>>) -> String {
    let mut lines: Vec<String> = grid
        .into_iter()
        .map(|row| String::from_utf8(row).unwrap().trim_end().to_string())
        .collect();
    while lines.last().is_some_and(|l| l.is_empty()) {
        lines.pop();
    }
    lines.join("\n")
}

/// Unit-cell grid: cell (r, c) maps to character (2r-1, 2c-1), borders on
/// the even lines and columns.
fn tiling_ascii(s: &StaircaseTiling) -> String {
    let n = s.n() as usize;
    if n == 0 {
        return String::new();
    }
    let dim = 2 * n + 1;
    let mut grid = vec![vec![b' '; dim]; dim];
    for r in s.rects() {
        let top = 2 * (r.r1 as usize - 1);
        let bottom = 2 * r.r2 as usize;
        let left = 2 * (r.c1 as usize - 1);
        let right = 2 * r.c2 as usize;
        grid[top][left..=right].fill(b'-');
        grid[bottom][left..=right].fill(b'-');
        for row in grid.iter_mut().take(bottom + 1).skip(top) {
            row[left] = b'|';
            row[right] = b'|';
        }
    }
    for r in s.rects() {
        let top = 2 * (r.r1 as usize - 1);
        let bottom = 2 * r.r2 as usize;
        let left = 2 * (r.c1 as usize - 1);
        let right = 2 * r.c2 as usize;
        for (y, x) in [(top, left), (top, right), (bottom, left), (bottom, right)] {
            grid[y][x] = b'+';
        }
    }
    grid_to_string(grid)
}

/// Indented list, one node per line, children tagged by their slot.
fn tree_ascii(t: &RightSweptTree) -> String {
    if matches!(t, RightSweptTree::Empty) {
        return "~".to_string();
    }
    let mut lines = vec!["o".to_string()];
    tree_ascii_children(t, 1, &mut lines);
    lines.join("\n")
}

fn tree_ascii_children(t: &RightSweptTree, depth: usize, lines: &mut Vec<String>) {
    let mut child = |tag: char, sub: &RightSweptTree| {
        lines.push(format!("{}{} o", "  ".repeat(depth), tag));
        tree_ascii_children(sub, depth + 1, lines);
    };
    match t {
        RightSweptTree::Empty | RightSweptTree::Leaf => {}
        RightSweptTree::Mid(c) => child('M', c),
        RightSweptTree::Right(c) => child('R', c),
        RightSweptTree::Left(c) => child('L', c),
        RightSweptTree::LeftRight(l, r) => {
            child('L', l);
            child('R', r);
        }
    }
}

/// Two rows: arcs above (`/` start, `\` end, `X` both, `_` span), points
/// below.
fn arcs_ascii(a: &ArcTree) -> String {
    let n = a.size();
    if n == 0 {
        return "o".to_string();
    }
    let width = 2 * n + 1;
    let mut arcs = vec![b' '; width];
    for (p, &q) in a.rend().iter().enumerate() {
        for slot in arcs.iter_mut().take(2 * q as usize).skip(2 * p + 1) {
            *slot = b'_';
        }
    }
    let mut starts = vec![false; width];
    let mut ends = vec![false; width];
    for (p, &q) in a.rend().iter().enumerate() {
        starts[2 * p] = true;
        ends[2 * q as usize] = true;
    }
    for x in 0..width {
        arcs[x] = match (starts[x], ends[x]) {
            (true, true) => b'X',
            (true, false) => b'/',
            (false, true) => b'\\',
            (false, false) => arcs[x],
        };
    }
    let mut points = vec![b' '; width];
    for i in 0..=n {
        points[2 * i] = b'o';
    }
    grid_to_string(vec![arcs, points])
}

fn binary_ascii(b: &BinaryTree) -> String {
    let mut lines = Vec::new();
    binary_ascii_node(b, 0, None, &mut lines);
    lines.join("\n")
}

fn binary_ascii_node(b: &BinaryTree, depth: usize, tag: Option<char>, lines: &mut Vec<String>) {
    let prefix = "  ".repeat(depth);
    let label = match b {
        BinaryTree::Leaf => '.',
        BinaryTree::Node(..) => 'o',
    };
    match tag {
        Some(t) => lines.push(format!("{prefix}{t} {label}")),
        None => lines.push(format!("{prefix}{label}")),
    }
    if let BinaryTree::Node(l, r) = b {
        binary_ascii_node(l, depth + 1, Some('L'), lines);
        binary_ascii_node(r, depth + 1, Some('R'), lines);
    }
}

fn planar_ascii(p: &PlanarTree) -> String {
    let mut lines = Vec::new();
    planar_ascii_node(p, 0, &mut lines);
    lines.join("\n")
}

fn planar_ascii_node(p: &PlanarTree, depth: usize, lines: &mut Vec<String>) {
    lines.push(format!("{}o", "  ".repeat(depth)));
    for child in &p.children {
        planar_ascii_node(child, depth + 1, lines);
    }
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

const CELL: i64 = 24;
const MARGIN: i64 = 12;
const HSPACE: i64 = 36;
const VSPACE: i64 = 42;
const NODE_R: i64 = 5;

fn svg_document(width: i64, height: i64, body: String) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n{body}</svg>\n",
        w = width.max(2 * MARGIN),
        h = height.max(2 * MARGIN),
    )
}

fn tiling_svg(s: &StaircaseTiling) -> String {
    let n = s.n() as i64;
    let mut body = String::new();
    for r in s.rects() {
        let x = MARGIN + (r.c1 as i64 - 1) * CELL;
        let y = MARGIN + (r.r1 as i64 - 1) * CELL;
        let w = r.width() as i64 * CELL;
        let h = r.height() as i64 * CELL;
        let _ = writeln!(
            body,
            "<rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" fill=\"none\" stroke=\"black\"/>"
        );
    }
    svg_document(2 * MARGIN + n * CELL, 2 * MARGIN + n * CELL, body)
}

struct NodeLayout {
    x: i64,
    depth: i64,
    parent: Option<usize>,
    leaf_mark: bool,
}

fn circle(body: &mut String, x: i64, y: i64, r: i64) {
    let _ = writeln!(body, "<circle cx=\"{x}\" cy=\"{y}\" r=\"{r}\" fill=\"white\" stroke=\"black\"/>");
}

fn line(body: &mut String, x1: i64, y1: i64, x2: i64, y2: i64) {
    let _ = writeln!(body, "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"black\"/>");
}

fn nodes_svg(nodes: Vec<NodeLayout>, root_at_top: bool) -> String {
    if nodes.is_empty() {
        return svg_document(2 * MARGIN, 2 * MARGIN, String::new());
    }
    let max_x = nodes.iter().map(|n| n.x).max().unwrap();
    let max_d = nodes.iter().map(|n| n.depth).max().unwrap();
    let place = |n: &NodeLayout| {
        let depth = if root_at_top { n.depth } else { max_d - n.depth };
        (MARGIN + n.x, MARGIN + depth * VSPACE)
    };
    let mut body = String::new();
    for node in &nodes {
        if let Some(p) = node.parent {
            let (x1, y1) = place(&nodes[p]);
            let (x2, y2) = place(node);
            line(&mut body, x1, y1, x2, y2);
        }
    }
    for node in &nodes {
        let (x, y) = place(node);
        circle(&mut body, x, y, if node.leaf_mark { 2 } else { NODE_R });
    }
    svg_document(2 * MARGIN + max_x, 2 * MARGIN + max_d * VSPACE, body)
}

/// Right-swept tree: left subtree, node, then right subtree share a row of
/// columns; a middle child stacks under its parent. Root at the top.
fn tree_svg(t: &RightSweptTree) -> String {
    fn layout(
        t: &RightSweptTree,
        depth: i64,
        parent: Option<usize>,
        next_col: &mut i64,
        nodes: &mut Vec<NodeLayout>,
    ) -> Option<usize> {
        match t {
            RightSweptTree::Empty => None,
            RightSweptTree::Leaf => {
                let x = *next_col * HSPACE;
                *next_col += 1;
                nodes.push(NodeLayout { x, depth, parent, leaf_mark: false });
                Some(nodes.len() - 1)
            }
            RightSweptTree::Mid(c) => {
                let id = nodes.len();
                nodes.push(NodeLayout { x: 0, depth, parent, leaf_mark: false });
                let child = layout(c, depth + 1, Some(id), next_col, nodes).unwrap();
                nodes[id].x = nodes[child].x;
                Some(id)
            }
            RightSweptTree::Right(c) => {
                let x = *next_col * HSPACE;
                *next_col += 1;
                let id = nodes.len();
                nodes.push(NodeLayout { x, depth, parent, leaf_mark: false });
                layout(c, depth + 1, Some(id), next_col, nodes);
                Some(id)
            }
            RightSweptTree::Left(c) => {
                let id_placeholder = nodes.len();
                nodes.push(NodeLayout { x: 0, depth, parent, leaf_mark: false });
                layout(c, depth + 1, Some(id_placeholder), next_col, nodes);
                let x = *next_col * HSPACE;
                *next_col += 1;
                nodes[id_placeholder].x = x;
                Some(id_placeholder)
            }
            RightSweptTree::LeftRight(l, r) => {
                let id = nodes.len();
                nodes.push(NodeLayout { x: 0, depth, parent, leaf_mark: false });
                layout(l, depth + 1, Some(id), next_col, nodes);
                let x = *next_col * HSPACE;
                *next_col += 1;
                nodes[id].x = x;
                layout(r, depth + 1, Some(id), next_col, nodes);
                Some(id)
            }
        }
    }
    let mut nodes = Vec::new();
    let mut col = 0;
    layout(t, 0, None, &mut col, &mut nodes);
    nodes_svg(nodes, true)
}

/// Binary tree, root at the bottom; leaves drawn as small marks.
fn binary_svg(b: &BinaryTree) -> String {
    fn layout(
        b: &BinaryTree,
        depth: i64,
        parent: Option<usize>,
        next_col: &mut i64,
        nodes: &mut Vec<NodeLayout>,
    ) -> usize {
        match b {
            BinaryTree::Leaf => {
                let x = *next_col * HSPACE;
                *next_col += 1;
                nodes.push(NodeLayout { x, depth, parent, leaf_mark: true });
                nodes.len() - 1
            }
            BinaryTree::Node(l, r) => {
                let id = nodes.len();
                nodes.push(NodeLayout { x: 0, depth, parent, leaf_mark: false });
                layout(l, depth + 1, Some(id), next_col, nodes);
                let x = *next_col * HSPACE;
                *next_col += 1;
                nodes[id].x = x;
                layout(r, depth + 1, Some(id), next_col, nodes);
                id
            }
        }
    }
    let mut nodes = Vec::new();
    let mut col = 0;
    layout(b, 0, None, &mut col, &mut nodes);
    nodes_svg(nodes, false)
}

/// Planar tree, root at the bottom, parents centered over their children.
fn planar_svg(p: &PlanarTree) -> String {
    fn layout(
        p: &PlanarTree,
        depth: i64,
        parent: Option<usize>,
        next_col: &mut i64,
        nodes: &mut Vec<NodeLayout>,
    ) -> usize {
        let id = nodes.len();
        nodes.push(NodeLayout { x: 0, depth, parent, leaf_mark: false });
        if p.children.is_empty() {
            nodes[id].x = *next_col * HSPACE;
            *next_col += 1;
        } else {
            let mut first = 0;
            let mut last = 0;
            for (i, child) in p.children.iter().enumerate() {
                let cid = layout(child, depth + 1, Some(id), next_col, nodes);
                if i == 0 {
                    first = nodes[cid].x;
                }
                last = nodes[cid].x;
            }
            nodes[id].x = (first + last) / 2;
        }
        id
    }
    let mut nodes = Vec::new();
    let mut col = 0;
    layout(p, 0, None, &mut col, &mut nodes);
    nodes_svg(nodes, false)
}

/// Points on a baseline with semicircular arcs above.
fn arcs_svg(a: &ArcTree) -> String {
    let n = a.size() as i64;
    let baseline = MARGIN + (n + 1) * CELL / 2;
    let px = |p: i64| MARGIN + p * CELL;
    let mut body = String::new();
    let _ = writeln!(
        body,
        "<line x1=\"{}\" y1=\"{baseline}\" x2=\"{}\" y2=\"{baseline}\" stroke=\"lightgray\"/>",
        px(0),
        px(n)
    );
    for (p, &q) in a.rend().iter().enumerate() {
        let (x1, x2) = (px(p as i64), px(q as i64));
        let r = (x2 - x1) / 2;
        let _ = writeln!(
            body,
            "<path d=\"M {x1} {baseline} A {r} {r} 0 0 1 {x2} {baseline}\" fill=\"none\" stroke=\"black\"/>"
        );
    }
    for p in 0..=n {
        let _ = writeln!(
            body,
            "<circle cx=\"{}\" cy=\"{baseline}\" r=\"3\" fill=\"black\"/>",
            px(p)
        );
    }
    svg_document(2 * MARGIN + n * CELL, baseline + MARGIN, body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{parse_arcs, parse_tiling, parse_tree};
    use crate::terms::{eval, Term};

    #[test]
    fn unit_square_box() {
        let s = parse_tiling("S1[1,1,1,1]").unwrap();
        assert_eq!(render(&Shape::Tiling(s), RenderMode::Ascii), "+-+\n| |\n+-+");
    }

    #[test]
    fn row_stack_ascii() {
        let s: StaircaseTiling =
            eval(&Term::mid(Term::mid(Term::mid(Term::E)))).unwrap();
        let expected = "\
+-----+
|     |
+---+-+
|   |
+-+-+
| |
+-+";
        assert_eq!(render(&Shape::Tiling(s), RenderMode::Ascii), expected);
    }

    #[test]
    fn three_adjacent_arcs_ascii() {
        let a = parse_arcs("A3[1,2,3]").unwrap();
        assert_eq!(render(&Shape::Arcs(a), RenderMode::Ascii), "/_X_X_\\\no o o o");
    }

    #[test]
    fn tree_ascii_lists_slots() {
        let t = parse_tree("B(R(*),*)").unwrap();
        assert_eq!(
            render(&Shape::Tree(t), RenderMode::Ascii),
            "o\n  L o\n    R o\n  R o"
        );
        assert_eq!(
            render(&Shape::Tree(RightSweptTree::Empty), RenderMode::Ascii),
            "~"
        );
    }

    #[test]
    fn svg_is_deterministic_and_well_formed() {
        let s: StaircaseTiling = eval(&Term::mid(Term::mid(Term::E))).unwrap();
        let one = render(&Shape::Tiling(s.clone()), RenderMode::Svg);
        let two = render(&Shape::Tiling(s), RenderMode::Svg);
        assert_eq!(one, two);
        assert!(one.starts_with("<svg xmlns"));
        assert!(one.ends_with("</svg>\n"));
        assert_eq!(one.matches("<rect").count(), 2);
    }

    #[test]
    fn svg_draws_all_families() {
        let term = Term::fork(
            Term::mid(Term::E),
            Term::right(Term::mid(Term::E)),
        );
        let t: RightSweptTree = eval(&term).unwrap();
        let a: ArcTree = eval(&term).unwrap();
        let s: StaircaseTiling = eval(&term).unwrap();
        let b = crate::classical::tiling_to_binary(&s).unwrap();
        let p = crate::classical::arcs_to_planar(&a).unwrap();
        for shape in [
            Shape::Tree(t),
            Shape::Arcs(a),
            Shape::Tiling(s),
            Shape::Binary(b),
            Shape::Planar(p),
        ] {
            let svg = render(&shape, RenderMode::Svg);
            assert!(svg.contains("viewBox"), "bad svg for {shape:?}");
        }
    }
}
