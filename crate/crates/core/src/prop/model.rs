use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linear::{enumerate_block_unshuffles, enumerate_unshuffles, Color, Rational};
use crate::prop::term::{FormalSum, GraphTerm, Node};

/// The generator families appearing in the three models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Mu,
    Nu,
    F,
    G,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Mu => "mu",
            Family::Nu => "nu",
            Family::F => "f",
            Family::G => "g",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "mu" => Ok(Family::Mu),
            "nu" => Ok(Family::Nu),
            "f" => Ok(Family::F),
            "g" => Ok(Family::G),
            _ => Err(Error::Parse(format!("unknown generator family {s:?}"))),
        }
    }
}

/// A generator such as `mu_3`, `f_2` or `g_0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId {
    pub family: Family,
    pub index: usize,
}

impl GeneratorId {
    pub const fn new(family: Family, index: usize) -> Self {
        GeneratorId { family, index }
    }

    pub const fn mu(n: usize) -> Self {
        Self::new(Family::Mu, n)
    }

    pub const fn nu(n: usize) -> Self {
        Self::new(Family::Nu, n)
    }

    pub const fn f(n: usize) -> Self {
        Self::new(Family::F, n)
    }

    pub const fn g(n: usize) -> Self {
        Self::new(Family::G, n)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.name(), self.index)
    }
}

impl fmt::Debug for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GeneratorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (fam, idx) =
            s.split_once('_').ok_or_else(|| Error::Parse(format!("generator {s:?} is not of the form name_index")))?;
        let index = idx.parse().map_err(|_| Error::Parse(format!("bad generator index in {s:?}")))?;
        Ok(GeneratorId::new(Family::parse(fam)?, index))
    }
}

/// One of the three resolved models. Each variant carries its generator
/// roster, the differential on generators and the structure generators
/// that an algebra decorates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    AssocMorphism,
    LieMorphism,
    Iso,
}

/// Signature and grading data for a single generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorInfo {
    pub id: GeneratorId,
    pub output: Color,
    pub inputs: Vec<Color>,
    pub degree: i64,
    pub skew: bool,
}

impl GeneratorInfo {
    pub fn arity(&self) -> usize {
        self.inputs.len()
    }
}

impl Model {
    pub const ALL: [Model; 3] = [Model::AssocMorphism, Model::LieMorphism, Model::Iso];

    pub fn name(self) -> &'static str {
        match self {
            Model::AssocMorphism => "assoc_morphism",
            Model::LieMorphism => "lie_morphism",
            Model::Iso => "iso",
        }
    }

    pub fn colors(self) -> [Color; 2] {
        [Color::B, Color::W]
    }

    /// Whether every generator is skew-symmetric in its inputs.
    pub fn is_skew(self) -> bool {
        self == Model::LieMorphism
    }

    /// Whether `∂` has constant terms, giving a curvature `l_0`.
    pub fn is_curved(self) -> bool {
        self == Model::Iso
    }

    pub fn contains(self, gen: GeneratorId) -> bool {
        match self {
            Model::AssocMorphism | Model::LieMorphism => match gen.family {
                Family::Mu | Family::Nu => gen.index >= 2,
                Family::F => gen.index >= 1,
                Family::G => false,
            },
            Model::Iso => matches!(gen.family, Family::F | Family::G),
        }
    }

    fn check(self, gen: GeneratorId) -> Result<()> {
        if self.contains(gen) {
            Ok(())
        } else {
            Err(Error::Model(format!("{gen} is not a generator of {}", self.name())))
        }
    }

    pub fn info(self, gen: GeneratorId) -> Result<GeneratorInfo> {
        self.check(gen)?;
        let n = gen.index;
        let (output, inputs, degree) = match (self, gen.family) {
            (Model::Iso, Family::F) if n % 2 == 0 => (Color::W, vec![Color::B], n as i64),
            (Model::Iso, Family::F) => (Color::B, vec![Color::B], n as i64),
            (Model::Iso, Family::G) if n % 2 == 0 => (Color::B, vec![Color::W], n as i64),
            (Model::Iso, Family::G) => (Color::W, vec![Color::W], n as i64),
            (_, Family::Mu) => (Color::B, vec![Color::B; n], n as i64 - 2),
            (_, Family::Nu) => (Color::W, vec![Color::W; n], n as i64 - 2),
            (_, Family::F) => (Color::W, vec![Color::B; n], n as i64 - 1),
            (_, Family::G) => unreachable!("checked above"),
        };
        Ok(GeneratorInfo { id: gen, output, inputs, degree, skew: self.is_skew() })
    }

    pub fn degree(self, gen: GeneratorId) -> Result<i64> {
        Ok(self.info(gen)?.degree)
    }

    /// All generators of the given internal degree, in a fixed order.
    pub fn generators_of_degree(self, degree: i64) -> Vec<GeneratorId> {
        if degree < 0 {
            return Vec::new();
        }
        let d = degree as usize;
        match self {
            Model::AssocMorphism | Model::LieMorphism => {
                vec![GeneratorId::mu(d + 2), GeneratorId::nu(d + 2), GeneratorId::f(d + 1)]
            }
            Model::Iso => vec![GeneratorId::f(d), GeneratorId::g(d)],
        }
    }

    /// All generators of internal degree at most `max_degree`.
    pub fn generators_up_to(self, max_degree: i64) -> Vec<GeneratorId> {
        (0..=max_degree).flat_map(|d| self.generators_of_degree(d)).collect()
    }

    /// The generators on which a homogeneous cochain of degree `n` may be
    /// nonzero: those of internal degree `n - 1`.
    pub fn cochain_support(self, n: i64) -> Vec<GeneratorId> {
        self.generators_of_degree(n - 1)
    }

    /// The generators sent to the structure maps of an algebra, in the order
    /// `mu_2, nu_2, f_1` or `f_0, g_0`.
    pub fn structure_generators(self) -> Vec<GeneratorId> {
        self.generators_of_degree(0)
    }

    /// Largest `k` for which `l_k` can be nonzero on degree-1 cochains.
    pub fn qme_bound(self) -> usize {
        match self {
            Model::AssocMorphism | Model::LieMorphism => 3,
            Model::Iso => 2,
        }
    }

    /// The differential `∂` of a generator, as a canonical formal sum.
    pub fn differential(self, gen: GeneratorId) -> Result<FormalSum> {
        self.check(gen)?;
        let mut out = FormalSum::new();
        match self {
            Model::AssocMorphism => self.assoc_differential(gen, &mut out)?,
            Model::LieMorphism => self.lie_differential(gen, &mut out)?,
            Model::Iso => self.iso_differential(gen, &mut out)?,
        }
        Ok(out)
    }

    fn add(self, out: &mut FormalSum, coeff: i64, root: Node) -> Result<()> {
        let term = GraphTerm::new(self, root)?;
        out.add_canonical(self, Rational::from_integer(coeff), term)
    }

    /// `outer ∘_{s+1} inner`, leaves numbered left to right.
    fn partial(outer: GeneratorId, i: usize, s: usize, inner: GeneratorId, j: usize) -> Node {
        let mut children = Vec::with_capacity(i);
        let mut label = 0;
        for p in 0..i {
            if p == s {
                children.push(Node::Vertex { gen: inner, children: (label..label + j).map(Node::Leaf).collect() });
                label += j;
            } else {
                children.push(Node::Leaf(label));
                label += 1;
            }
        }
        Node::Vertex { gen: outer, children }
    }

    fn assoc_differential(self, gen: GeneratorId, out: &mut FormalSum) -> Result<()> {
        let n = gen.index;
        let two_level = |outer: Family, inner: Family, out: &mut FormalSum, i_min: usize, extra: i64| -> Result<()> {
            for j in 2..=n {
                let Some(i) = (n + 1).checked_sub(j) else { continue };
                if i < i_min {
                    continue;
                }
                for s in 0..=n - j {
                    let sign = if (i + s * (j + 1)) % 2 == 0 { extra } else { -extra };
                    let root =
                        Self::partial(GeneratorId::new(outer, i), i, s, GeneratorId::new(inner, j), j);
                    self.add(out, sign, root)?;
                }
            }
            Ok(())
        };
        match gen.family {
            Family::Mu => two_level(Family::Mu, Family::Mu, out, 2, 1),
            Family::Nu => two_level(Family::Nu, Family::Nu, out, 2, 1),
            Family::F => {
                for l in 2..=n {
                    for r in compositions(n, l) {
                        let mut e = 0;
                        for a in 0..l {
                            for b in a + 1..l {
                                e += r[a] * (r[b] + 1);
                            }
                        }
                        let sign = if e % 2 == 0 { -1 } else { 1 };
                        self.add(out, sign, Self::nu_of_fs(l, &r, None))?;
                    }
                }
                two_level(Family::F, Family::Mu, out, 1, -1)
            }
            Family::G => unreachable!("checked by caller"),
        }
    }

    /// `ν_l(f_{r_1} ⊗ ⋯ ⊗ f_{r_l})`, precomposed with `sigma` if given.
    fn nu_of_fs(l: usize, r: &[usize], sigma: Option<&[usize]>) -> Node {
        let mut label = 0;
        let children = r
            .iter()
            .map(|&ra| {
                let leaves = (label..label + ra)
                    .map(|p| Node::Leaf(sigma.map_or(p, |s| s[p])))
                    .collect();
                label += ra;
                Node::Vertex { gen: GeneratorId::f(ra), children: leaves }
            })
            .collect();
        Node::Vertex { gen: GeneratorId::nu(l), children }
    }

    fn lie_differential(self, gen: GeneratorId, out: &mut FormalSum) -> Result<()> {
        let n = gen.index;
        // Σ_{i+j=n+1} (-1)^{j(i-1)} Σ_{σ∈S_{j,i-1}} sgn(σ) outer∘(inner ⊗ Id^{i-1})∘σ
        let two_level = |outer: Family, inner: Family, out: &mut FormalSum, i_min: usize, extra: i64| -> Result<()> {
            for j in 2..=n {
                let i = n + 1 - j;
                if i < i_min {
                    continue;
                }
                let base = if (j * (i - 1)) % 2 == 0 { extra } else { -extra };
                for sp in enumerate_unshuffles(j, i - 1) {
                    let s = sp.permutation.images();
                    let mut children = vec![Node::Vertex {
                        gen: GeneratorId::new(inner, j),
                        children: (0..j).map(|p| Node::Leaf(s[p])).collect(),
                    }];
                    children.extend((j..n).map(|p| Node::Leaf(s[p])));
                    let root = Node::Vertex { gen: GeneratorId::new(outer, i), children };
                    self.add(out, base * sp.permutation.sign(), root)?;
                }
            }
            Ok(())
        };
        match gen.family {
            Family::Mu => two_level(Family::Mu, Family::Mu, out, 2, 1),
            Family::Nu => two_level(Family::Nu, Family::Nu, out, 2, 1),
            Family::F => {
                for l in 2..=n {
                    for r in partitions(n, l) {
                        let mut e = l * (l - 1) / 2;
                        for (i, &ri) in r.iter().enumerate().take(l - 1) {
                            e += ri * (l - 1 - i);
                        }
                        let base = if e % 2 == 0 { 1 } else { -1 };
                        for sp in enumerate_block_unshuffles(&r)? {
                            let root = Self::nu_of_fs(l, &r, Some(sp.permutation.images()));
                            self.add(out, base * sp.permutation.sign(), root)?;
                        }
                    }
                }
                two_level(Family::F, Family::Mu, out, 1, -1)
            }
            Family::G => unreachable!("checked by caller"),
        }
    }

    fn iso_differential(self, gen: GeneratorId, out: &mut FormalSum) -> Result<()> {
        let chain = |a: GeneratorId, b: GeneratorId| Node::Vertex {
            gen: a,
            children: vec![Node::Vertex { gen: b, children: vec![Node::Leaf(0)] }],
        };
        // ∂g_n is ∂f_n with the roles of f and g exchanged.
        let (x, y): (fn(usize) -> GeneratorId, fn(usize) -> GeneratorId) = match gen.family {
            Family::F => (GeneratorId::f, GeneratorId::g),
            _ => (GeneratorId::g, GeneratorId::f),
        };
        let n = gen.index;
        match n {
            0 => {}
            1 => {
                self.add(out, 1, chain(y(0), x(0)))?;
                let unit_color = self.info(gen)?.output;
                out.add_canonical(self, -Rational::one(), GraphTerm::unit(unit_color))?;
            }
            _ if n % 2 == 0 => {
                let m = n / 2;
                for i in 0..m {
                    self.add(out, 1, chain(x(2 * i), x(2 * (m - i) - 1)))?;
                    self.add(out, -1, chain(y(2 * (m - i) - 1), x(2 * i)))?;
                }
            }
            _ => {
                let m = n / 2;
                for j in 0..=m {
                    self.add(out, 1, chain(y(2 * j), x(2 * (m - j))))?;
                }
                for j in 0..m {
                    self.add(out, -1, chain(x(2 * j + 1), x(2 * (m - j) - 1)))?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "assoc_morphism" => Ok(Model::AssocMorphism),
            "lie_morphism" => Ok(Model::LieMorphism),
            "iso" => Ok(Model::Iso),
            _ => Err(Error::Parse(format!("unknown model {s:?}"))),
        }
    }
}

/// Ordered compositions of `n` into `l` positive parts.
fn compositions(n: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for p in 1..=left.saturating_sub(parts - 1) {
            cur.push(p);
            rec(left - p, parts - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, l, &mut Vec::new(), &mut out);
    out
}

/// Nondecreasing compositions of `n` into `l` positive parts.
fn partitions(n: usize, l: usize) -> Vec<Vec<usize>> {
    compositions(n, l).into_iter().filter(|r| r.windows(2).all(|w| w[0] <= w[1])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_names_round_trip() {
        for s in ["mu_3", "nu_2", "f_0", "g_11"] {
            assert_eq!(s.parse::<GeneratorId>().unwrap().to_string(), s);
        }
        assert!("h_2".parse::<GeneratorId>().is_err());
        assert!("mu".parse::<GeneratorId>().is_err());
    }

    #[test]
    fn rosters_and_degrees() {
        let a = Model::AssocMorphism;
        assert!(!a.contains(GeneratorId::mu(1)));
        assert!(!a.contains(GeneratorId::f(0)));
        assert!(!a.contains(GeneratorId::g(1)));
        assert_eq!(a.degree(GeneratorId::mu(5)).unwrap(), 3);
        assert_eq!(a.degree(GeneratorId::f(3)).unwrap(), 2);
        assert_eq!(Model::Iso.degree(GeneratorId::f(3)).unwrap(), 3);
        assert_eq!(
            Model::LieMorphism.cochain_support(2),
            vec![GeneratorId::mu(3), GeneratorId::nu(3), GeneratorId::f(2)]
        );
        assert_eq!(Model::Iso.cochain_support(1), vec![GeneratorId::f(0), GeneratorId::g(0)]);
        assert!(Model::Iso.cochain_support(0).is_empty());
    }

    #[test]
    fn iso_colors_alternate() {
        let i = Model::Iso;
        let sig = |g| {
            let info = i.info(g).unwrap();
            (info.inputs[0], info.output)
        };
        assert_eq!(sig(GeneratorId::f(0)), (Color::B, Color::W));
        assert_eq!(sig(GeneratorId::f(1)), (Color::B, Color::B));
        assert_eq!(sig(GeneratorId::g(0)), (Color::W, Color::B));
        assert_eq!(sig(GeneratorId::g(1)), (Color::W, Color::W));
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(partitions(5, 2), vec![vec![1, 4], vec![2, 3]]);
        assert!(compositions(2, 3).is_empty());
    }

    #[test]
    fn invalid_generators_are_rejected() {
        assert!(matches!(Model::AssocMorphism.differential(GeneratorId::g(2)), Err(Error::Model(_))));
        assert!(matches!(Model::LieMorphism.differential(GeneratorId::nu(1)), Err(Error::Model(_))));
    }
}
