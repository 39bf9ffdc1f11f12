use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use crate::error::{Error, Result};
use crate::linear::{Permutation, Rational};

/// The colors used by every model: `B` is the domain side (the space `U`)
/// and `W` the target side (the space `V`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    B,
    W,
}

impl Color {
    /// Name of the underlying space in file formats.
    pub fn space_name(self) -> &'static str {
        match self {
            Color::B => "U",
            Color::W => "V",
        }
    }

    pub fn from_space_name(s: &str) -> Result<Self> {
        match s {
            "U" => Ok(Color::B),
            "V" => Ok(Color::W),
            _ => Err(Error::Parse(format!("unknown space {s:?}"))),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "B" => Ok(Color::B),
            "W" => Ok(Color::W),
            _ => Err(Error::Parse(format!("unknown color {s:?}"))),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::B => write!(f, "B"),
            Color::W => write!(f, "W"),
        }
    }
}

/// A based vector space attached to one color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorSpace {
    pub color: Color,
    pub dim: usize,
    pub labels: Vec<String>,
}

impl ColorSpace {
    pub fn new(color: Color, dim: usize) -> Result<Self> {
        let prefix = if color == Color::B { "u" } else { "v" };
        Self::with_labels(color, (1..=dim).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn with_labels(color: Color, labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Argument(format!("space for color {color} must have dim >= 1")));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Argument(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(ColorSpace { color, dim: labels.len(), labels })
    }
}

/// The pair of spaces `T = T_B ⊕ T_W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spaces {
    pub b: ColorSpace,
    pub w: ColorSpace,
}

impl Spaces {
    pub fn new(dim_b: usize, dim_w: usize) -> Result<Self> {
        Ok(Spaces { b: ColorSpace::new(Color::B, dim_b)?, w: ColorSpace::new(Color::W, dim_w)? })
    }

    pub fn dim(&self, c: Color) -> usize {
        match c {
            Color::B => self.b.dim,
            Color::W => self.w.dim,
        }
    }

    pub fn zero_map(&self, out: Color, inputs: &[Color]) -> MultiMap {
        MultiMap::zero(out, self.dim(out), inputs.to_vec(), inputs.iter().map(|&c| self.dim(c)).collect())
    }

    pub fn identity(&self, c: Color) -> MultiMap {
        MultiMap::identity(c, self.dim(c))
    }
}

/// A multilinear map `T_{c_1} ⊗ ⋯ ⊗ T_{c_n} → T_c` stored as a dense tensor.
///
/// Coefficients are laid out output-major and then by inputs in order, the
/// first input being the most significant: entry `[o; i_1, …, i_n]` is the
/// `o`-th coordinate of `f(e_{i_1}, …, e_{i_n})`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiMap {
    out_color: Color,
    in_colors: Vec<Color>,
    out_dim: usize,
    in_dims: Vec<usize>,
    coeffs: Vec<Rational>,
}

impl MultiMap {
    pub fn zero(out_color: Color, out_dim: usize, in_colors: Vec<Color>, in_dims: Vec<usize>) -> Self {
        assert_eq!(in_colors.len(), in_dims.len());
        let len = out_dim * in_dims.iter().product::<usize>();
        MultiMap { out_color, in_colors, out_dim, in_dims, coeffs: vec![Rational::zero(); len] }
    }

    pub fn identity(color: Color, dim: usize) -> Self {
        let mut m = Self::zero(color, dim, vec![color], vec![dim]);
        for i in 0..dim {
            m.coeffs[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn from_coeffs(
        out_color: Color,
        out_dim: usize,
        in_colors: Vec<Color>,
        in_dims: Vec<usize>,
        coeffs: Vec<Rational>,
    ) -> Result<Self> {
        let expected = out_dim * in_dims.iter().product::<usize>();
        if in_colors.len() != in_dims.len() || coeffs.len() != expected {
            return Err(Error::Signature(format!(
                "tensor has {} entries, expected {expected}",
                coeffs.len()
            )));
        }
        Ok(MultiMap { out_color, in_colors, out_dim, in_dims, coeffs })
    }

    /// Builds a map from a function of `(output index, input multi-index)`.
    pub fn from_fn(
        out_color: Color,
        out_dim: usize,
        in_colors: Vec<Color>,
        in_dims: Vec<usize>,
        mut f: impl FnMut(usize, &[usize]) -> Rational,
    ) -> Self {
        let mut m = Self::zero(out_color, out_dim, in_colors, in_dims);
        let mut idx = vec![0; m.arity()];
        let count = m.input_count();
        for o in 0..m.out_dim {
            for flat in 0..count {
                m.unflatten_inputs(flat, &mut idx);
                let v = f(o, &idx);
                m.coeffs[o * count + flat] = v;
            }
        }
        m
    }

    pub fn out_color(&self) -> Color {
        self.out_color
    }

    pub fn in_colors(&self) -> &[Color] {
        &self.in_colors
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn in_dims(&self) -> &[usize] {
        &self.in_dims
    }

    pub fn arity(&self) -> usize {
        self.in_colors.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Number of basis input tuples.
    pub fn input_count(&self) -> usize {
        self.in_dims.iter().product()
    }

    fn unflatten_inputs(&self, mut flat: usize, idx: &mut [usize]) {
        for j in (0..self.in_dims.len()).rev() {
            idx[j] = flat % self.in_dims[j];
            flat /= self.in_dims[j];
        }
    }

    fn flatten_inputs(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.in_dims).fold(0, |acc, (&i, &d)| acc * d + i)
    }

    pub fn get(&self, out: usize, inputs: &[usize]) -> &Rational {
        &self.coeffs[out * self.input_count() + self.flatten_inputs(inputs)]
    }

    pub fn set(&mut self, out: usize, inputs: &[usize], value: Rational) {
        let at = out * self.input_count() + self.flatten_inputs(inputs);
        self.coeffs[at] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn same_signature(&self, other: &MultiMap) -> bool {
        self.out_color == other.out_color
            && self.in_colors == other.in_colors
            && self.out_dim == other.out_dim
            && self.in_dims == other.in_dims
    }

    fn check_same_signature(&self, other: &MultiMap) -> Result<()> {
        if self.same_signature(other) {
            Ok(())
        } else {
            Err(Error::Signature(format!("cannot combine {} with {}", self.signature(), other.signature())))
        }
    }

    /// Human-readable signature such as `B⊗B→W`.
    pub fn signature(&self) -> String {
        let ins: Vec<String> = self.in_colors.iter().map(|c| c.to_string()).collect();
        format!("{}→{}", if ins.is_empty() { "k".to_string() } else { ins.join("⊗") }, self.out_color)
    }

    pub fn scale(&self, c: &Rational) -> MultiMap {
        let mut out = self.clone();
        if c.is_zero() {
            out.coeffs.iter_mut().for_each(|x| *x = Rational::zero());
        } else if !c.is_one() {
            out.coeffs.iter_mut().for_each(|x| {
                if !x.is_zero() {
                    *x = &*x * c
                }
            });
        }
        out
    }

    pub fn try_add(&self, other: &MultiMap) -> Result<MultiMap> {
        self.check_same_signature(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one())?;
        Ok(out)
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &MultiMap, c: &Rational) -> Result<()> {
        self.check_same_signature(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                if c.is_one() {
                    *a += b;
                } else {
                    *a += b * c;
                }
            }
        }
        Ok(())
    }

    /// Partial composition `f ∘_s g = f(1^{⊗ s-1} ⊗ g ⊗ 1^{⊗ n-s})`, `s` one-based.
    pub fn compose_at(&self, s: usize, g: &MultiMap) -> Result<MultiMap> {
        if s == 0 || s > self.arity() {
            return Err(Error::Argument(format!("position {s} out of range for arity {}", self.arity())));
        }
        let slot = s - 1;
        if self.in_colors[slot] != g.out_color || self.in_dims[slot] != g.out_dim {
            return Err(Error::Signature(format!(
                "input {s} of {} does not accept the output of {}",
                self.signature(),
                g.signature()
            )));
        }
        let mut in_colors = self.in_colors[..slot].to_vec();
        in_colors.extend_from_slice(&g.in_colors);
        in_colors.extend_from_slice(&self.in_colors[slot + 1..]);
        let mut in_dims = self.in_dims[..slot].to_vec();
        in_dims.extend_from_slice(&g.in_dims);
        in_dims.extend_from_slice(&self.in_dims[slot + 1..]);
        let mut out = MultiMap::zero(self.out_color, self.out_dim, in_colors, in_dims);

        let left: usize = self.in_dims[..slot].iter().product();
        let right: usize = self.in_dims[slot + 1..].iter().product();
        let mid = g.input_count();
        let kdim = g.out_dim;
        for o in 0..self.out_dim {
            for l in 0..left {
                for k in 0..kdim {
                    for r in 0..right {
                        let fv = &self.coeffs[((o * left + l) * kdim + k) * right + r];
                        if fv.is_zero() {
                            continue;
                        }
                        for m in 0..mid {
                            let gv = &g.coeffs[k * mid + m];
                            if gv.is_zero() {
                                continue;
                            }
                            out.coeffs[((o * left + l) * mid + m) * right + r] += fv * gv;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Plugs `args[i]` into input `i+1` simultaneously; `None` leaves the input
    /// untouched. This is `f(a_1 ⊗ ⋯ ⊗ a_n)`.
    pub fn substitute(&self, args: &[Option<&MultiMap>]) -> Result<MultiMap> {
        if args.len() != self.arity() {
            return Err(Error::Argument(format!(
                "substitute: {} arguments for arity {}",
                args.len(),
                self.arity()
            )));
        }
        let mut out = self.clone();
        for (i, a) in args.iter().enumerate().rev() {
            if let Some(a) = a {
                out = out.compose_at(i + 1, a)?;
            }
        }
        Ok(out)
    }

    /// Ordinary composition `self ∘ g` for a unary `self`.
    pub fn after(&self, g: &MultiMap) -> Result<MultiMap> {
        if self.arity() != 1 {
            return Err(Error::Argument("after: left factor must be unary".into()));
        }
        self.compose_at(1, g)
    }

    /// `(f·σ)(x_1,…,x_n) = f(x_σ(1),…,x_σ(n))`. The permutation may only move
    /// inputs between slots of the same color.
    pub fn permute(&self, sigma: &Permutation) -> Result<MultiMap> {
        let n = self.arity();
        if sigma.len() != n {
            return Err(Error::Argument(format!("permutation of {} letters on arity {n}", sigma.len())));
        }
        for p in 0..n {
            let q = sigma.image(p);
            if self.in_colors[q] != self.in_colors[p] || self.in_dims[q] != self.in_dims[p] {
                return Err(Error::Signature(format!("{sigma:?} mixes input colors of {}", self.signature())));
            }
        }
        if sigma.is_identity() {
            return Ok(self.clone());
        }
        let mut out = MultiMap::zero(self.out_color, self.out_dim, self.in_colors.clone(), self.in_dims.clone());
        let count = self.input_count();
        let mut idx = vec![0; n];
        let mut src = vec![0; n];
        for flat in 0..count {
            self.unflatten_inputs(flat, &mut idx);
            for p in 0..n {
                src[p] = idx[sigma.image(p)];
            }
            let from = self.flatten_inputs(&src);
            for o in 0..self.out_dim {
                out.coeffs[o * count + flat] = self.coeffs[o * count + from].clone();
            }
        }
        Ok(out)
    }

    /// `(1/n!) Σ_σ sgn(σ) f·σ`.
    pub fn antisymmetrize(&self) -> Result<MultiMap> {
        let n = self.arity();
        if self.in_colors.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::Signature(format!("antisymmetrize needs uniform inputs, got {}", self.signature())));
        }
        let perms = Permutation::all(n);
        let mut out = MultiMap::zero(self.out_color, self.out_dim, self.in_colors.clone(), self.in_dims.clone());
        for p in &perms {
            out.add_scaled(&self.permute(p)?, &Rational::from_integer(p.sign()))?;
        }
        let factorial = Rational::from_integer(perms.len() as i64);
        Ok(out.scale(&factorial.recip()?))
    }

    /// True when every adjacent transposition of inputs flips the sign.
    pub fn is_alternating(&self) -> bool {
        let n = self.arity();
        if self.in_colors.windows(2).any(|w| w[0] != w[1]) {
            return false;
        }
        (0..n.saturating_sub(1)).all(|i| {
            let mut images: Vec<usize> = (0..n).collect();
            images.swap(i, i + 1);
            let swapped = self.permute(&Permutation::new(images).expect("transposition")).expect("uniform colors");
            swapped == -self
        })
    }

    /// Inverse of a unary map `T_c → T_c`, by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<MultiMap> {
        if self.arity() != 1 || self.in_colors[0] != self.out_color || self.in_dims[0] != self.out_dim {
            return Err(Error::Signature(format!("only endomorphisms can be inverted, not {}", self.signature())));
        }
        let n = self.out_dim;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|r| self.coeffs[r * n..(r + 1) * n].to_vec()).collect();
        let mut inv: Vec<Vec<Rational>> = (0..n)
            .map(|r| (0..n).map(|c| if r == c { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or_else(|| Error::Argument("matrix is singular".into()))?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].recip()?;
            for c in 0..n {
                a[col][c] = &a[col][c] * &p;
                inv[col][c] = &inv[col][c] * &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for c in 0..n {
                        let (x, y) = (&a[col][c] * &factor, &inv[col][c] * &factor);
                        a[r][c] -= &x;
                        inv[r][c] -= &y;
                    }
                }
            }
        }
        MultiMap::from_coeffs(self.out_color, n, vec![self.out_color], vec![n], inv.concat())
    }

    /// Applies the map to explicit vectors; used by independent checks.
    pub fn evaluate(&self, inputs: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        if inputs.len() != self.arity() || inputs.iter().zip(&self.in_dims).any(|(v, &d)| v.len() != d) {
            return Err(Error::Argument("evaluate: input vectors do not match the signature".into()));
        }
        let count = self.input_count();
        let mut out = vec![Rational::zero(); self.out_dim];
        let mut idx = vec![0; self.arity()];
        for flat in 0..count {
            self.unflatten_inputs(flat, &mut idx);
            let mut weight = Rational::one();
            for (v, &i) in inputs.iter().zip(&idx) {
                if v[i].is_zero() {
                    weight = Rational::zero();
                    break;
                }
                weight = weight * &v[i];
            }
            if weight.is_zero() {
                continue;
            }
            for (o, slot) in out.iter_mut().enumerate() {
                let c = &self.coeffs[o * count + flat];
                if !c.is_zero() {
                    *slot += c * &weight;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for MultiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiMap[{}; {:?}]", self.signature(), self.coeffs)
    }
}

impl Neg for &MultiMap {
    type Output = MultiMap;
    fn neg(self) -> MultiMap {
        let mut out = self.clone();
        out.coeffs.iter_mut().for_each(|x| *x = -&*x);
        out
    }
}

impl Neg for MultiMap {
    type Output = MultiMap;
    fn neg(self) -> MultiMap {
        -&self
    }
}

/// Panics on signature mismatch; use [`MultiMap::try_add`] for fallible addition.
impl Add for &MultiMap {
    type Output = MultiMap;
    fn add(self, rhs: &MultiMap) -> MultiMap {
        self.try_add(rhs).expect("adding maps of different signature")
    }
}

impl Sub for &MultiMap {
    type Output = MultiMap;
    fn sub(self, rhs: &MultiMap) -> MultiMap {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one()).expect("subtracting maps of different signature");
        out
    }
}

impl AddAssign<&MultiMap> for MultiMap {
    fn add_assign(&mut self, rhs: &MultiMap) {
        self.add_scaled(rhs, &Rational::one()).expect("adding maps of different signature");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::RandomSource;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn unit_algebra() -> MultiMap {
        // 1-dim algebra with e·e = e
        MultiMap::from_coeffs(Color::B, 1, vec![Color::B; 2], vec![1, 1], vec![r(1)]).unwrap()
    }

    /// Index-level contraction written straight from the definition.
    fn brute_compose(f: &MultiMap, s: usize, g: &MultiMap) -> MultiMap {
        let a = f.arity();
        let b = g.arity();
        let mut in_colors = f.in_colors()[..s - 1].to_vec();
        in_colors.extend_from_slice(g.in_colors());
        in_colors.extend_from_slice(&f.in_colors()[s..]);
        let mut in_dims = f.in_dims()[..s - 1].to_vec();
        in_dims.extend_from_slice(g.in_dims());
        in_dims.extend_from_slice(&f.in_dims()[s..]);
        MultiMap::from_fn(f.out_color(), f.out_dim(), in_colors, in_dims, |o, idx| {
            let mut acc = Rational::zero();
            for k in 0..g.out_dim() {
                let mut fi: Vec<usize> = idx[..s - 1].to_vec();
                fi.push(k);
                fi.extend_from_slice(&idx[s - 1 + b..]);
                assert_eq!(fi.len(), a);
                acc += f.get(o, &fi) * g.get(k, &idx[s - 1..s - 1 + b]);
            }
            acc
        })
    }

    #[test]
    fn compose_with_identity_is_noop() {
        let mut rng = RandomSource::new(7);
        let g = rng.multimap(Color::B, 2, &[Color::B, Color::B], &[2, 2]);
        let id = MultiMap::identity(Color::B, 2);
        assert_eq!(id.compose_at(1, &g).unwrap(), g);
        assert_eq!(g.compose_at(2, &id).unwrap(), g);
    }

    #[test]
    fn compose_unit_algebra_triple_product() {
        let m = unit_algebra();
        let mm = m.compose_at(1, &m).unwrap();
        assert_eq!(mm.arity(), 3);
        let e = vec![r(1)];
        assert_eq!(mm.evaluate(&[e.clone(), e.clone(), e]).unwrap(), vec![r(1)]);
    }

    #[test]
    fn compose_matches_index_contraction() {
        let mut rng = RandomSource::new(11);
        for _ in 0..20 {
            let f = rng.multimap(Color::B, 2, &[Color::B, Color::B], &[2, 2]);
            let g = rng.multimap(Color::B, 2, &[Color::B, Color::B], &[2, 2]);
            for s in 1..=2 {
                assert_eq!(f.compose_at(s, &g).unwrap(), brute_compose(&f, s, &g));
            }
        }
    }

    #[test]
    fn compose_errors() {
        let f = MultiMap::zero(Color::W, 1, vec![Color::B], vec![2]);
        let g = MultiMap::zero(Color::W, 1, vec![Color::W], vec![1]);
        assert!(matches!(f.compose_at(1, &g), Err(Error::Signature(_))));
        assert!(matches!(f.compose_at(2, &g), Err(Error::Argument(_))));
        assert!(matches!(f.compose_at(0, &g), Err(Error::Argument(_))));
    }

    #[test]
    fn compose_is_associative() {
        let mut rng = RandomSource::new(3);
        for _ in 0..10 {
            for (fa, ga, ha) in [(2usize, 2usize, 2usize), (3, 2, 1), (2, 3, 2), (1, 2, 3)] {
                let dims = |n: usize| vec![2; n];
                let f = rng.multimap(Color::B, 2, &vec![Color::B; fa], &dims(fa));
                let g = rng.multimap(Color::B, 2, &vec![Color::B; ga], &dims(ga));
                let h = rng.multimap(Color::B, 2, &vec![Color::B; ha], &dims(ha));
                for s in 1..=fa {
                    for t in 1..=ga {
                        let lhs = f.compose_at(s, &g).unwrap().compose_at(s + t - 1, &h).unwrap();
                        let rhs = f.compose_at(s, &g.compose_at(t, &h).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_of_random_invertible() {
        let mut rng = RandomSource::new(21);
        for n in 1..=3 {
            let p = rng.invertible(Color::W, n);
            let q = p.inverse().unwrap();
            assert_eq!(p.after(&q).unwrap(), MultiMap::identity(Color::W, n));
            assert_eq!(q.after(&p).unwrap(), MultiMap::identity(Color::W, n));
        }
        assert!(MultiMap::zero(Color::B, 2, vec![Color::B], vec![2]).inverse().is_err());
    }

    #[test]
    fn permutation_examples() {
        let mut rng = RandomSource::new(5);
        let f = rng.multimap(Color::B, 2, &[Color::B; 3], &[2; 3]);
        assert_eq!(f.permute(&Permutation::identity(3)).unwrap(), f);
        // f(x, y) = x on a 1-dim space, swapped becomes (x, y) ↦ y; on basis
        // vectors both are e, so test on explicit vectors.
        let proj = MultiMap::from_fn(Color::B, 2, vec![Color::B; 2], vec![2, 2], |o, idx| {
            if idx[1] == 0 && o == idx[0] {
                r(1)
            } else {
                r(0)
            }
        });
        let swapped = proj.permute(&Permutation::from_one_based(&[2, 1]).unwrap()).unwrap();
        let x = vec![r(2), r(0)];
        let y = vec![r(3), r(5)];
        // proj(x, e1) = x, so proj(x, y) = y_1 · x
        assert_eq!(proj.evaluate(&[x.clone(), vec![r(1), r(0)]]).unwrap(), x);
        assert_eq!(swapped.evaluate(&[vec![r(1), r(0)], x.clone()]).unwrap(), x);
        assert_eq!(swapped.evaluate(&[x.clone(), y.clone()]).unwrap(), proj.evaluate(&[y, x]).unwrap());
    }

    #[test]
    fn permutation_is_a_right_action() {
        let mut rng = RandomSource::new(9);
        let perms = Permutation::all(3);
        for _ in 0..5 {
            let f = rng.multimap(Color::W, 2, &[Color::B; 3], &[2; 3]);
            for s in &perms {
                for t in &perms {
                    let lhs = f.permute(s).unwrap().permute(t).unwrap();
                    assert_eq!(lhs, f.permute(&s.then(t)).unwrap());
                }
            }
        }
    }

    #[test]
    fn permutation_rejects_mixed_colors() {
        let f = MultiMap::zero(Color::W, 1, vec![Color::B, Color::W], vec![1, 1]);
        let swap = Permutation::from_one_based(&[2, 1]).unwrap();
        assert!(matches!(f.permute(&swap), Err(Error::Signature(_))));
        assert!(matches!(f.antisymmetrize(), Err(Error::Signature(_))));
    }

    #[test]
    fn antisymmetrize_projection_example() {
        // f(x, y) = x · y_1, the alternating part is (x y_1 - y x_1)/2
        let f = MultiMap::from_fn(Color::B, 2, vec![Color::B; 2], vec![2, 2], |o, idx| {
            if idx[1] == 0 && o == idx[0] {
                r(1)
            } else {
                r(0)
            }
        });
        let alt = f.antisymmetrize().unwrap();
        let half = Rational::new(1, 2).unwrap();
        let expected = MultiMap::from_fn(Color::B, 2, vec![Color::B; 2], vec![2, 2], |o, idx| {
            let a = if idx[1] == 0 && o == idx[0] { half.clone() } else { Rational::zero() };
            let b = if idx[0] == 0 && o == idx[1] { half.clone() } else { Rational::zero() };
            a - b
        });
        assert_eq!(alt, expected);
    }

    #[test]
    fn antisymmetrize_is_idempotent_and_alternating() {
        let mut rng = RandomSource::new(13);
        for n in 0..=4 {
            let f = rng.multimap(Color::B, 2, &vec![Color::B; n], &vec![2; n]);
            let a = f.antisymmetrize().unwrap();
            assert_eq!(a.antisymmetrize().unwrap(), a);
            assert!(a.is_alternating());
            for p in Permutation::all(n) {
                assert_eq!(a.permute(&p).unwrap(), a.scale(&Rational::from_integer(p.sign())));
            }
        }
    }
}
