//! Text form of terms and formal sums, one term per line:
//!
//! ```text
//! 1 (compose (g 0) (f 0))
//! -1 (unit B)
//! ```
//!
//! A vertex whose children are all inputs prints as `(mu 3)`; otherwise as
//! `(compose (mu 3) c_1 … c_n)` with `_` for an input. A non-identity order
//! of the inputs is appended at the top level as `(perm σ(1) … σ(n))`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::linear::{Color, Permutation, Rational};
use crate::prop::model::{Family, GeneratorId, Model};
use crate::prop::term::{FormalSum, GraphTerm, Node};

pub fn term_to_sexpr(t: &GraphTerm) -> String {
    if t.is_unit() {
        return format!("(unit {})", t.color());
    }
    let perm = t.leaf_permutation();
    let mut out = String::new();
    write_node(&mut out, t.root(), (!perm.is_identity()).then_some(&perm));
    out
}

fn write_node(out: &mut String, node: &Node, perm: Option<&Permutation>) {
    let Node::Vertex { gen, children } = node else {
        out.push('_');
        return;
    };
    let head = format!("({} {})", gen.family.name(), gen.index);
    if perm.is_none() && children.iter().all(|c| matches!(c, Node::Leaf(_))) {
        out.push_str(&head);
        return;
    }
    out.push_str("(compose ");
    out.push_str(&head);
    for c in children {
        out.push(' ');
        write_node(out, c, None);
    }
    if let Some(p) = perm {
        out.push_str(" (perm");
        for &i in p.images() {
            let _ = write!(out, " {}", i + 1);
        }
        out.push(')');
    }
    out.push(')');
}

pub fn sum_to_sexpr(sum: &FormalSum) -> String {
    let mut out = String::new();
    for (t, c) in sum.iter() {
        let _ = writeln!(out, "{c} {}", term_to_sexpr(t));
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Atom(String),
}

fn tokenize(s: &str) -> Vec<Tok> {
    let mut toks = Vec::new();
    let mut atom = String::new();
    let flush = |atom: &mut String, toks: &mut Vec<Tok>| {
        if !atom.is_empty() {
            toks.push(Tok::Atom(std::mem::take(atom)));
        }
    };
    for ch in s.chars() {
        match ch {
            '(' | ')' => {
                flush(&mut atom, &mut toks);
                toks.push(if ch == '(' { Tok::Open } else { Tok::Close });
            }
            c if c.is_whitespace() => flush(&mut atom, &mut toks),
            c => atom.push(c),
        }
    }
    flush(&mut atom, &mut toks);
    toks
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

/// Intermediate tree whose leaves are numbered later.
enum Raw {
    Leaf,
    Vertex(GeneratorId, Option<Vec<Raw>>),
}

impl Parser {
    fn next(&mut self) -> Result<Tok> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| Error::Parse("unexpected end of term".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn atom(&mut self) -> Result<String> {
        match self.next()? {
            Tok::Atom(a) => Ok(a),
            t => Err(Error::Parse(format!("expected a symbol, found {t:?}"))),
        }
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        let t = self.next()?;
        if t == want {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {want:?}, found {t:?}")))
        }
    }

    fn generator(&mut self, family: &str) -> Result<GeneratorId> {
        let family = Family::parse(family)?;
        let idx = self.atom()?;
        let index = idx.parse().map_err(|_| Error::Parse(format!("bad generator index {idx:?}")))?;
        self.expect(Tok::Close)?;
        Ok(GeneratorId::new(family, index))
    }

    /// Parses after an opening parenthesis. Returns the node and a top-level
    /// permutation if one was given.
    fn node(&mut self) -> Result<(Raw, Option<Vec<usize>>)> {
        let head = self.atom()?;
        if head != "compose" {
            return Ok((Raw::Vertex(self.generator(&head)?, None), None));
        }
        self.expect(Tok::Open)?;
        let h = self.atom()?;
        let gen = self.generator(&h)?;
        let mut children = Vec::new();
        let mut perm = None;
        loop {
            match self.next()? {
                Tok::Close => break,
                Tok::Atom(a) if a == "_" => children.push(Raw::Leaf),
                Tok::Atom(a) => return Err(Error::Parse(format!("unexpected symbol {a:?}"))),
                Tok::Open => {
                    if self.peek() == Some(&Tok::Atom("perm".into())) {
                        self.pos += 1;
                        let mut images = Vec::new();
                        while let Some(Tok::Atom(_)) = self.peek() {
                            let a = self.atom()?;
                            let i: usize = a.parse().map_err(|_| Error::Parse(format!("bad perm entry {a:?}")))?;
                            if i == 0 {
                                return Err(Error::Parse("perm entries are 1-based".into()));
                            }
                            images.push(i - 1);
                        }
                        self.expect(Tok::Close)?;
                        perm = Some(images);
                    } else {
                        let (child, inner) = self.node()?;
                        if inner.is_some() {
                            return Err(Error::Parse("perm is only allowed at the top level".into()));
                        }
                        children.push(child);
                    }
                }
            }
        }
        Ok((Raw::Vertex(gen, Some(children)), perm))
    }
}

fn build(model: Model, raw: Raw, next_leaf: &mut usize) -> Result<Node> {
    match raw {
        Raw::Leaf => {
            *next_leaf += 1;
            Ok(Node::Leaf(*next_leaf - 1))
        }
        Raw::Vertex(gen, None) => {
            let arity = model.info(gen)?.arity();
            let children = (*next_leaf..*next_leaf + arity).map(Node::Leaf).collect();
            *next_leaf += arity;
            Ok(Node::Vertex { gen, children })
        }
        Raw::Vertex(gen, Some(cs)) => {
            let children = cs.into_iter().map(|c| build(model, c, next_leaf)).collect::<Result<_>>()?;
            Ok(Node::Vertex { gen, children })
        }
    }
}

fn relabel(node: Node, perm: &Permutation) -> Node {
    match node {
        Node::Leaf(p) => Node::Leaf(perm.image(p)),
        Node::Vertex { gen, children } => {
            Node::Vertex { gen, children: children.into_iter().map(|c| relabel(c, perm)).collect() }
        }
    }
}

pub fn parse_term(model: Model, s: &str) -> Result<GraphTerm> {
    let mut p = Parser { toks: tokenize(s), pos: 0 };
    p.expect(Tok::Open)?;
    let term = if p.peek() == Some(&Tok::Atom("unit".into())) {
        p.pos += 1;
        let color = Color::parse(&p.atom()?)?;
        p.expect(Tok::Close)?;
        GraphTerm::unit(color)
    } else {
        let (raw, perm) = p.node()?;
        let mut leaves = 0;
        let mut root = build(model, raw, &mut leaves)?;
        if let Some(images) = perm {
            if images.len() != leaves {
                return Err(Error::Parse(format!("perm has {} entries for {leaves} inputs", images.len())));
            }
            root = relabel(root, &Permutation::new(images)?);
        }
        GraphTerm::new(model, root)?
    };
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input after term in {s:?}")));
    }
    Ok(term)
}

/// Parses the line format produced by [`sum_to_sexpr`]. Terms are
/// canonicalized on the way in.
pub fn parse_sum(model: Model, s: &str) -> Result<FormalSum> {
    let mut sum = FormalSum::new();
    for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let (coeff, term) =
            line.split_once(char::is_whitespace).ok_or_else(|| Error::Parse(format!("missing term in {line:?}")))?;
        let coeff: Rational = coeff.parse()?;
        sum.add_canonical(model, coeff, parse_term(model, term)?)?;
    }
    Ok(sum)
}
