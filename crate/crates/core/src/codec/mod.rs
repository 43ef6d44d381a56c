//! Text literals for every shape family and for construction terms.
//!
//! Grammars (canonical output; parsing is whitespace tolerant):
//!
//! * term:        `E` | `m(t)` | `r(t)` | `l(t)` | `f(t,t)`
//! * swept tree:  `~` (empty) | `*` (leaf) | `M(t)` | `R(t)` | `L(t)` | `B(t,t)`
//! * tiling:      `S<n>[r1,c1,r2,c2;...]`, rectangles in diagonal order
//! * arc tree:    `A<n>[rend0,rend1,...]`
//! * binary tree: `.` | `(b,b)`
//! * planar tree: `(child child ...)`, leaf `()`
//!
//! Parsing validates the result; invariant-violating input is rejected
//! with the full violation list, malformed text with a byte offset.

pub mod render;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::model::{
    ArcTree, BinaryTree, Family, PlanarTree, Rect, RightSweptTree, Shape, StaircaseTiling,
};
use crate::terms::Term;

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::E => write!(f, "E"),
            Term::M(t) => write!(f, "m({t})"),
            Term::R(t) => write!(f, "r({t})"),
            Term::L(t) => write!(f, "l({t})"),
            Term::F(u, v) => write!(f, "f({u},{v})"),
        }
    }
}

impl fmt::Display for RightSweptTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RightSweptTree::Empty => write!(f, "~"),
            RightSweptTree::Leaf => write!(f, "*"),
            RightSweptTree::Mid(t) => write!(f, "M({t})"),
            RightSweptTree::Right(t) => write!(f, "R({t})"),
            RightSweptTree::Left(t) => write!(f, "L({t})"),
            RightSweptTree::LeftRight(l, r) => write!(f, "B({l},{r})"),
        }
    }
}

impl fmt::Display for StaircaseTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}[", self.n())?;
        for (i, r) in self.rects().iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{},{},{},{}", r.r1, r.c1, r.r2, r.c2)?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for ArcTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}[", self.size())?;
        for (i, q) in self.rend().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "."),
            BinaryTree::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Tree(t) => write!(f, "{t}"),
            Shape::Tiling(s) => write!(f, "{s}"),
            Shape::Arcs(a) => write!(f, "{a}"),
            Shape::Binary(b) => write!(f, "{b}"),
            Shape::Planar(p) => write!(f, "{p}"),
        }
    }
}

/// Canonical literal for a shape.
pub fn format_shape(shape: &Shape) -> String {
    shape.to_string()
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Parser<'a> {
        Parser { src: src.as_bytes(), pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, want: u8) -> Result<(), Error> {
        match self.peek() {
            Some(b) if b == want => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.err(format!("expected '{}', found '{}'", want as char, b as char))),
            None => Err(self.err(format!("expected '{}', found end of input", want as char))),
        }
    }

    fn number(&mut self) -> Result<u32, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|_| Error::Syntax { offset: start, message: "number out of range".into() })
    }

    fn finish(mut self) -> Result<(), Error> {
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("trailing input"));
        }
        Ok(())
    }
}

fn checked<T>(value: T, violations: Vec<String>) -> Result<T, Error> {
    if violations.is_empty() {
        Ok(value)
    } else {
        Err(Error::InvalidShape(violations))
    }
}

pub fn parse_term(text: &str) -> Result<Term, Error> {
    let mut p = Parser::new(text);
    let t = term(&mut p)?;
    p.finish()?;
    let violations = t.validate();
    checked(t, violations)
}

fn term(p: &mut Parser) -> Result<Term, Error> {
    match p.peek() {
        Some(b'E') => {
            p.pos += 1;
            Ok(Term::E)
        }
        Some(op @ (b'm' | b'r' | b'l')) => {
            p.pos += 1;
            p.expect(b'(')?;
            let t = term(p)?;
            p.expect(b')')?;
            Ok(match op {
                b'm' => Term::mid(t),
                b'r' => Term::right(t),
                _ => Term::left(t),
            })
        }
        Some(b'f') => {
            p.pos += 1;
            p.expect(b'(')?;
            let u = term(p)?;
            p.expect(b',')?;
            let v = term(p)?;
            p.expect(b')')?;
            Ok(Term::fork(u, v))
        }
        _ => Err(p.err("expected a term (one of E, m, r, l, f)")),
    }
}

pub fn parse_tree(text: &str) -> Result<RightSweptTree, Error> {
    let mut p = Parser::new(text);
    let t = tree(&mut p)?;
    p.finish()?;
    let violations = t.validate();
    checked(t, violations)
}

fn tree(p: &mut Parser) -> Result<RightSweptTree, Error> {
    match p.peek() {
        Some(b'~') => {
            p.pos += 1;
            Ok(RightSweptTree::Empty)
        }
        Some(b'*') => {
            p.pos += 1;
            Ok(RightSweptTree::Leaf)
        }
        Some(op @ (b'M' | b'R' | b'L')) => {
            p.pos += 1;
            p.expect(b'(')?;
            let t = tree(p)?;
            p.expect(b')')?;
            Ok(match op {
                b'M' => RightSweptTree::mid(t),
                b'R' => RightSweptTree::right(t),
                _ => RightSweptTree::left(t),
            })
        }
        Some(b'B') => {
            p.pos += 1;
            p.expect(b'(')?;
            let l = tree(p)?;
            p.expect(b',')?;
            let r = tree(p)?;
            p.expect(b')')?;
            Ok(RightSweptTree::left_right(l, r))
        }
        _ => Err(p.err("expected a tree (one of ~, *, M, R, L, B)")),
    }
}

pub fn parse_tiling(text: &str) -> Result<StaircaseTiling, Error> {
    let mut p = Parser::new(text);
    p.expect(b'S')?;
    let n = p.number()?;
    p.expect(b'[')?;
    let mut rects = Vec::new();
    if p.peek() != Some(b']') {
        loop {
            let r1 = p.number()?;
            p.expect(b',')?;
            let c1 = p.number()?;
            p.expect(b',')?;
            let r2 = p.number()?;
            p.expect(b',')?;
            let c2 = p.number()?;
            rects.push(Rect::new(r1, c1, r2, c2));
            if p.peek() == Some(b';') {
                p.pos += 1;
            } else {
                break;
            }
        }
    }
    p.expect(b']')?;
    p.finish()?;
    let t = StaircaseTiling::new(n, rects);
    let violations = t.validate();
    checked(t, violations)
}

pub fn parse_arcs(text: &str) -> Result<ArcTree, Error> {
    let mut p = Parser::new(text);
    p.expect(b'A')?;
    let n = p.number()?;
    p.expect(b'[')?;
    let mut rend = Vec::new();
    if p.peek() != Some(b']') {
        loop {
            rend.push(p.number()?);
            if p.peek() == Some(b',') {
                p.pos += 1;
            } else {
                break;
            }
        }
    }
    if rend.len() as u32 != n {
        return Err(p.err(format!("declared {} arcs, found {}", n, rend.len())));
    }
    p.expect(b']')?;
    p.finish()?;
    let a = ArcTree::new(rend);
    let violations = a.validate();
    checked(a, violations)
}

pub fn parse_binary(text: &str) -> Result<BinaryTree, Error> {
    let mut p = Parser::new(text);
    let b = binary(&mut p)?;
    p.finish()?;
    Ok(b)
}

fn binary(p: &mut Parser) -> Result<BinaryTree, Error> {
    match p.peek() {
        Some(b'.') => {
            p.pos += 1;
            Ok(BinaryTree::Leaf)
        }
        Some(b'(') => {
            p.pos += 1;
            let l = binary(p)?;
            p.expect(b',')?;
            let r = binary(p)?;
            p.expect(b')')?;
            Ok(BinaryTree::node(l, r))
        }
        _ => Err(p.err("expected a binary tree ('.' or '(')")),
    }
}

pub fn parse_planar(text: &str) -> Result<PlanarTree, Error> {
    let mut p = Parser::new(text);
    let t = planar(&mut p)?;
    p.finish()?;
    Ok(t)
}

fn planar(p: &mut Parser) -> Result<PlanarTree, Error> {
    p.expect(b'(')?;
    let mut children = Vec::new();
    while p.peek() == Some(b'(') {
        children.push(planar(p)?);
    }
    p.expect(b')')?;
    Ok(PlanarTree::node(children))
}

/// Parses a literal of the given family.
pub fn parse_shape(family: Family, text: &str) -> Result<Shape, Error> {
    Ok(match family {
        Family::Tree => Shape::Tree(parse_tree(text)?),
        Family::Tiling => Shape::Tiling(parse_tiling(text)?),
        Family::Arcs => Shape::Arcs(parse_arcs(text)?),
        Family::Binary => Shape::Binary(parse_binary(text)?),
        Family::Planar => Shape::Planar(parse_planar(text)?),
    })
}

impl FromStr for Term {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

impl FromStr for RightSweptTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tree(s)
    }
}

impl FromStr for StaircaseTiling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tiling(s)
    }
}

impl FromStr for ArcTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_arcs(s)
    }
}

impl FromStr for BinaryTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_binary(s)
    }
}

impl FromStr for PlanarTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_planar(s)
    }
}
