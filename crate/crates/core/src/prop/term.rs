use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linear::{koszul_epsilon, Color, MultiMap, Permutation, Rational, Spaces};
use crate::prop::model::{GeneratorId, Model};

/// A node of a rooted tree term. Leaves carry the (zero-based) input they
/// read: a tree whose planar leaves are labelled `σ(1),…,σ(n)` stands for
/// the planar composite precomposed with `σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Vertex { gen: GeneratorId, children: Vec<Node> },
    Leaf(usize),
}

impl Node {
    pub fn vertex_count(&self) -> usize {
        match self {
            Node::Leaf(_) => 0,
            Node::Vertex { children, .. } => 1 + children.iter().map(Node::vertex_count).sum::<usize>(),
        }
    }

    fn collect_vertices(&self, out: &mut Vec<GeneratorId>) {
        if let Node::Vertex { gen, children } = self {
            out.push(*gen);
            children.iter().for_each(|c| c.collect_vertices(out));
        }
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf(l) => out.push(*l),
            Node::Vertex { children, .. } => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn min_leaf(&self) -> usize {
        match self {
            Node::Leaf(l) => *l,
            Node::Vertex { children, .. } => children.iter().map(Node::min_leaf).min().unwrap_or(usize::MAX),
        }
    }

    fn degree(&self, model: Model) -> Result<i64> {
        match self {
            Node::Leaf(_) => Ok(0),
            Node::Vertex { gen, children } => {
                let mut d = model.degree(*gen)?;
                for c in children {
                    d += c.degree(model)?;
                }
                Ok(d)
            }
        }
    }
}

/// A rooted tree in the free colored operad on a model's generators, or the
/// operadic unit `1_c` of a color (represented by a bare leaf at the root).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphTerm {
    root: Node,
    color: Color,
}

impl GraphTerm {
    /// Builds a term, checking colors along every edge and that the leaf
    /// labels form a permutation.
    pub fn new(model: Model, root: Node) -> Result<Self> {
        let color = match &root {
            Node::Vertex { gen, .. } => model.info(*gen)?.output,
            Node::Leaf(_) => return Err(Error::Argument("a bare leaf needs an explicit color; use GraphTerm::unit".into())),
        };
        let mut leaf_colors = BTreeMap::new();
        check_colors(model, &root, color, &mut leaf_colors)?;
        let n = leaf_colors.len();
        if leaf_colors.keys().copied().ne(0..n) {
            return Err(Error::Argument(format!("leaf labels {:?} are not a permutation", leaf_colors.keys())));
        }
        Ok(GraphTerm { root, color })
    }

    /// The unit `1_c`.
    pub fn unit(color: Color) -> Self {
        GraphTerm { root: Node::Leaf(0), color }
    }

    /// The single-vertex term of a generator with identity leaf order.
    pub fn corolla(model: Model, gen: GeneratorId) -> Result<Self> {
        let arity = model.info(gen)?.arity();
        GraphTerm::new(model, Node::Vertex { gen, children: (0..arity).map(Node::Leaf).collect() })
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.root, Node::Leaf(_))
    }

    /// Generators of the vertices in preorder.
    pub fn vertices(&self) -> Vec<GeneratorId> {
        let mut out = Vec::new();
        self.root.collect_vertices(&mut out);
        out
    }

    pub fn arity(&self) -> usize {
        self.leaf_labels().len()
    }

    /// Leaf labels in planar order.
    pub fn leaf_labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.root.collect_leaves(&mut out);
        out
    }

    pub fn leaf_permutation(&self) -> Permutation {
        Permutation::new(self.leaf_labels()).expect("validated on construction")
    }

    /// Sum of the internal degrees of the vertices.
    pub fn degree(&self, model: Model) -> Result<i64> {
        self.root.degree(model)
    }

    /// Input colors, indexed by input (not by planar position).
    pub fn input_colors(&self, model: Model) -> Result<Vec<Color>> {
        let mut leaf_colors = BTreeMap::new();
        match &self.root {
            Node::Leaf(l) => {
                leaf_colors.insert(*l, self.color);
            }
            root => check_colors(model, root, self.color, &mut leaf_colors)?,
        }
        Ok(leaf_colors.into_values().collect())
    }
}

fn check_colors(model: Model, node: &Node, expected: Color, leaves: &mut BTreeMap<usize, Color>) -> Result<()> {
    match node {
        Node::Leaf(l) => {
            if leaves.insert(*l, expected).is_some() {
                return Err(Error::Argument(format!("leaf label {l} used twice")));
            }
            Ok(())
        }
        Node::Vertex { gen, children } => {
            let info = model.info(*gen)?;
            if info.output != expected {
                return Err(Error::Signature(format!("{gen} outputs {} where {expected} is expected", info.output)));
            }
            if children.len() != info.arity() {
                return Err(Error::Signature(format!("{gen} has arity {} but {} children", info.arity(), children.len())));
            }
            for (c, &color) in children.iter().zip(&info.inputs) {
                check_colors(model, c, color, leaves)?;
            }
            Ok(())
        }
    }
}

/// Canonical representative of a term together with the sign relating the
/// two: `t = sign · canonical`. Over skew-symmetric models, the children of
/// every vertex are sorted by their smallest leaf label; this costs the sign
/// of the permutation times the Koszul sign of the moved subtrees.
pub fn canonicalize(model: Model, t: &GraphTerm) -> Result<(Rational, GraphTerm)> {
    if t.is_unit() {
        return Ok((Rational::one(), t.clone()));
    }
    GraphTerm::new(model, t.root.clone())?;
    if !model.is_skew() {
        return Ok((Rational::one(), t.clone()));
    }
    let mut sign = 1;
    let root = canonical_node(model, &t.root, &mut sign)?;
    Ok((Rational::from_integer(sign), GraphTerm { root, color: t.color }))
}

fn canonical_node(model: Model, node: &Node, sign: &mut i64) -> Result<Node> {
    match node {
        Node::Leaf(l) => Ok(Node::Leaf(*l)),
        Node::Vertex { gen, children } => {
            let children: Vec<Node> =
                children.iter().map(|c| canonical_node(model, c, sign)).collect::<Result<_>>()?;
            let degrees: Vec<i64> = children.iter().map(|c| c.degree(model)).collect::<Result<_>>()?;
            let mut order: Vec<usize> = (0..children.len()).collect();
            order.sort_by_key(|&i| children[i].min_leaf());
            let tau = Permutation::new(order.clone()).expect("sorting yields a permutation");
            *sign *= tau.sign() * koszul_epsilon(&tau, &degrees);
            let sorted = order.into_iter().map(|i| children[i].clone()).collect();
            Ok(Node::Vertex { gen: *gen, children: sorted })
        }
    }
}

/// A finite linear combination of canonical terms with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<GraphTerm, Rational>,
}

impl FormalSum {
    pub fn new() -> Self {
        FormalSum::default()
    }

    /// Adds `coeff · t`, canonicalizing `t` first.
    pub fn add_canonical(&mut self, model: Model, coeff: Rational, t: GraphTerm) -> Result<()> {
        let (sign, t) = canonicalize(model, &t)?;
        self.add_raw(coeff * sign, t);
        Ok(())
    }

    fn add_raw(&mut self, coeff: Rational, t: GraphTerm) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_sum(&mut self, other: &FormalSum, scale: &Rational) {
        for (t, c) in &other.terms {
            self.add_raw(c * scale, t.clone());
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GraphTerm, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &GraphTerm) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Evaluates a term in `End_T`, decorating each vertex by `decorate(i, gen)`
/// where `i` is the vertex's preorder index. A decoration of `None` means the
/// zero map and makes the whole term vanish.
pub fn evaluate_with<'a, F>(model: Model, t: &GraphTerm, spaces: &Spaces, mut decorate: F) -> Result<MultiMap>
where
    F: FnMut(usize, GeneratorId) -> Result<Option<&'a MultiMap>>,
{
    if t.is_unit() {
        return Ok(spaces.identity(t.color));
    }
    let mut counter = 0;
    match eval_node(model, &t.root, spaces, &mut counter, &mut decorate)? {
        Some(planar) => planar.permute(&t.leaf_permutation()),
        None => Ok(spaces.zero_map(t.color, &t.input_colors(model)?)),
    }
}

fn eval_node<'a, F>(
    model: Model,
    node: &Node,
    spaces: &Spaces,
    counter: &mut usize,
    decorate: &mut F,
) -> Result<Option<MultiMap>>
where
    F: FnMut(usize, GeneratorId) -> Result<Option<&'a MultiMap>>,
{
    let Node::Vertex { gen, children } = node else {
        unreachable!("leaves are handled by the parent")
    };
    let index = *counter;
    *counter += 1;
    let Some(dec) = decorate(index, *gen)? else {
        *counter += children.iter().map(Node::vertex_count).sum::<usize>();
        return Ok(None);
    };
    let info = model.info(*gen)?;
    let dims: Vec<usize> = info.inputs.iter().map(|&c| spaces.dim(c)).collect();
    if dec.out_color() != info.output
        || dec.in_colors() != info.inputs.as_slice()
        || dec.out_dim() != spaces.dim(info.output)
        || dec.in_dims() != dims.as_slice()
    {
        return Err(Error::Signature(format!("decoration {} does not fit generator {gen}", dec.signature())));
    }
    let mut args = Vec::with_capacity(children.len());
    for (i, c) in children.iter().enumerate() {
        match c {
            Node::Leaf(_) => args.push(None),
            v => match eval_node(model, v, spaces, counter, decorate)? {
                Some(m) => args.push(Some(m)),
                None => {
                    *counter += children[i + 1..].iter().map(Node::vertex_count).sum::<usize>();
                    return Ok(None);
                }
            },
        }
    }
    let refs: Vec<Option<&MultiMap>> = args.iter().map(Option::as_ref).collect();
    dec.substitute(&refs).map(Some)
}

/// Evaluates a term with every vertex decorated from a table indexed by
/// generator.
pub fn graph_evaluate(
    model: Model,
    t: &GraphTerm,
    decorate: &BTreeMap<GeneratorId, MultiMap>,
    spaces: &Spaces,
) -> Result<MultiMap> {
    evaluate_with(model, t, spaces, |_, gen| {
        decorate.get(&gen).map(Some).ok_or_else(|| Error::MissingDecoration(gen.to_string()))
    })
}

/// Evaluates a formal sum term by term.
pub fn evaluate_sum(
    model: Model,
    sum: &FormalSum,
    out: Color,
    inputs: &[Color],
    spaces: &Spaces,
    decorate: &BTreeMap<GeneratorId, MultiMap>,
) -> Result<MultiMap> {
    let mut acc = spaces.zero_map(out, inputs);
    for (t, c) in sum.iter() {
        acc.add_scaled(&graph_evaluate(model, t, decorate, spaces)?, c)?;
    }
    Ok(acc)
}

/// Applies `∂` to a term by the Leibniz rule: each vertex in turn is replaced
/// by its differential, with sign `(-1)` to the total degree of the vertices
/// before it and the Koszul sign of the resulting reordering of vertices.
pub fn differentiate(model: Model, t: &GraphTerm) -> Result<FormalSum> {
    let mut out = FormalSum::new();
    let gens = t.vertices();
    let degrees: Vec<i64> = gens.iter().map(|&g| model.degree(g)).collect::<Result<_>>()?;
    for (v, &gen) in gens.iter().enumerate() {
        let before: i64 = degrees[..v].iter().sum();
        for (s, c) in model.differential(gen)?.iter() {
            let mut counter = 0;
            let mut koszul = 1;
            let root = replace_vertex(model, &t.root, v, s, &mut counter, &mut koszul)?;
            let term = match root {
                Node::Leaf(_) => GraphTerm::unit(t.color),
                root => GraphTerm::new(model, root)?,
            };
            let coeff = c.clone().signed(before) * Rational::from_integer(koszul);
            out.add_canonical(model, coeff, term)?;
        }
    }
    Ok(out)
}

fn replace_vertex(
    model: Model,
    node: &Node,
    target: usize,
    s: &GraphTerm,
    counter: &mut usize,
    koszul: &mut i64,
) -> Result<Node> {
    let Node::Vertex { gen, children } = node else {
        return Ok(node.clone());
    };
    if *counter == target {
        *counter += node.vertex_count();
        // Tokens: vertices of s first, then the vertices of each child block.
        let mut token_degrees: Vec<i64> =
            s.vertices().iter().map(|&g| model.degree(g)).collect::<Result<_>>()?;
        let mut bases = Vec::with_capacity(children.len());
        for c in children {
            bases.push(token_degrees.len());
            let mut vs = Vec::new();
            c.collect_vertices(&mut vs);
            for g in vs {
                token_degrees.push(model.degree(g)?);
            }
        }
        let mut emitted = Vec::with_capacity(token_degrees.len());
        let mut s_counter = 0;
        let new = graft(&s.root, children, &bases, &mut s_counter, &mut emitted);
        let order = Permutation::new(emitted).expect("every token emitted once");
        *koszul *= koszul_epsilon(&order, &token_degrees);
        return Ok(new);
    }
    *counter += 1;
    let children = children
        .iter()
        .map(|c| replace_vertex(model, c, target, s, counter, koszul))
        .collect::<Result<_>>()?;
    Ok(Node::Vertex { gen: *gen, children })
}

fn graft(s: &Node, children: &[Node], bases: &[usize], s_counter: &mut usize, emitted: &mut Vec<usize>) -> Node {
    match s {
        Node::Leaf(l) => {
            let c = &children[*l];
            emitted.extend(bases[*l]..bases[*l] + c.vertex_count());
            c.clone()
        }
        Node::Vertex { gen, children: sc } => {
            emitted.push(*s_counter);
            *s_counter += 1;
            let new_children = sc.iter().map(|x| graft(x, children, bases, s_counter, emitted)).collect();
            Node::Vertex { gen: *gen, children: new_children }
        }
    }
}

/// `∂(∂ gen)` expanded symbolically; empty when the differential squares to zero.
pub fn differential_squared(model: Model, gen: GeneratorId) -> Result<FormalSum> {
    let mut out = FormalSum::new();
    for (t, c) in model.differential(gen)?.iter() {
        out.add_sum(&differentiate(model, t)?, c);
    }
    Ok(out)
}
