//! Permutations, Koszul signs and (block) unshuffles.
//!
//! Permutations are stored zero-based: `p.image(i)` is `σ(i+1) - 1`. A
//! permutation acts on multilinear maps by `(f·σ)(x_1,…,x_n) = f(x_σ(1),…,x_σ(n))`,
//! which makes `f·σ·τ = f·(σ.then(τ))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linear::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Builds a permutation from its zero-based images, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Argument(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation from one-based images, as written in the literature.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.iter().any(|&i| i == 0) {
            return Err(Error::Argument(format!("{images:?} is not one-based")));
        }
        Self::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Permutation(inv)
    }

    /// Function composition `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different size");
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// `next ∘ self`; the product under which the action on maps is a right action.
    pub fn then(&self, next: &Permutation) -> Permutation {
        next.compose(self)
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for a in 0..self.0.len() {
            for b in a + 1..self.0.len() {
                if self.0[a] > self.0[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Ordinary sign, `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Every permutation of `n` letters, in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == n {
                out.push(Permutation(current.clone()));
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    current.push(i);
                    rec(n, current, used, out);
                    current.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", p + 1)?;
        }
        write!(f, ")")
    }
}

/// A permutation paired with a sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub permutation: Permutation,
    pub sign: Rational,
}

impl SignedPermutation {
    fn with_sign(permutation: Permutation) -> Self {
        let sign = Rational::from_integer(permutation.sign());
        SignedPermutation { permutation, sign }
    }
}

/// Koszul sign `ε(σ; x_1,…,x_n)` defined by
/// `x_1 ∧ ⋯ ∧ x_n = ε · x_σ(1) ∧ ⋯ ∧ x_σ(n)` in the free graded-commutative algebra.
pub fn koszul_epsilon(sigma: &Permutation, degrees: &[i64]) -> i64 {
    assert_eq!(sigma.len(), degrees.len(), "one degree per letter");
    let mut exponent = 0i64;
    let p = sigma.images();
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                exponent += degrees[p[a]] * degrees[p[b]];
            }
        }
    }
    if exponent.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `χ(σ) = sgn(σ) · ε(σ; x_1,…,x_n)`.
pub fn koszul_chi(sigma: &Permutation, degrees: &[i64]) -> Rational {
    Rational::from_integer(sigma.sign() * koszul_epsilon(sigma, degrees))
}

/// All `(p,q)`-unshuffles: permutations increasing on the first `p` and on the
/// last `q` positions, each paired with its sign. There are `C(p+q, p)` of them.
pub fn enumerate_unshuffles(p: usize, q: usize) -> Vec<SignedPermutation> {
    enumerate_block_unshuffles_unordered(&[p, q])
}

/// The set `S^<_{r_1,…,r_l}`: `(r_1,…,r_l)`-unshuffles in which consecutive
/// blocks of equal size are ordered by their first entries.
pub fn enumerate_block_unshuffles(blocks: &[usize]) -> Result<Vec<SignedPermutation>> {
    if blocks.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Argument(format!("block sizes {blocks:?} are not nondecreasing")));
    }
    let starts = block_starts(blocks);
    Ok(enumerate_block_unshuffles_unordered(blocks)
        .into_iter()
        .filter(|sp| {
            (0..blocks.len().saturating_sub(1)).all(|i| {
                blocks[i] != blocks[i + 1]
                    || blocks[i] == 0
                    || sp.permutation.image(starts[i]) < sp.permutation.image(starts[i + 1])
            })
        })
        .collect())
}

fn block_starts(blocks: &[usize]) -> Vec<usize> {
    let mut starts = Vec::with_capacity(blocks.len());
    let mut acc = 0;
    for &b in blocks {
        starts.push(acc);
        acc += b;
    }
    starts
}

/// All `(r_1,…,r_l)`-unshuffles without the equal-block ordering condition.
pub fn enumerate_block_unshuffles_unordered(blocks: &[usize]) -> Vec<SignedPermutation> {
    let n: usize = blocks.iter().sum();
    let mut out = Vec::new();
    let mut assignment = vec![usize::MAX; n];
    // Fill blocks one at a time with increasing subsets of the unused letters.
    fn rec(
        blocks: &[usize],
        block: usize,
        assignment: &mut Vec<usize>,
        images: &mut Vec<usize>,
        out: &mut Vec<SignedPermutation>,
    ) {
        if block == blocks.len() {
            out.push(SignedPermutation::with_sign(Permutation(images.clone())));
            return;
        }
        let free: Vec<usize> = (0..assignment.len()).filter(|&i| assignment[i] == usize::MAX).collect();
        for subset in subsets(&free, blocks[block]) {
            for &s in &subset {
                assignment[s] = block;
                images.push(s);
            }
            rec(blocks, block + 1, assignment, images, out);
            for &s in &subset {
                assignment[s] = usize::MAX;
                images.pop();
            }
        }
    }
    let mut images = Vec::with_capacity(n);
    rec(blocks, 0, &mut assignment, &mut images, &mut out);
    out
}

/// Increasing `k`-subsets of `items`, lexicographically.
fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - current.len() {
                break;
            }
            current.push(items[i]);
            rec(items, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, k, 0, &mut current, &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_based(v).unwrap()
    }

    #[test]
    fn chi_examples() {
        assert_eq!(koszul_chi(&Permutation::identity(3), &[1, 0, 5]), Rational::one());
        assert_eq!(koszul_chi(&perm(&[2, 1]), &[1, 1]), Rational::one());
        assert_eq!(koszul_chi(&perm(&[2, 1]), &[0, 1]), -Rational::one());
    }

    #[test]
    fn unshuffle_examples() {
        let u11 = enumerate_unshuffles(1, 1);
        assert_eq!(u11.len(), 2);
        assert_eq!(u11[0].permutation, Permutation::identity(2));
        assert_eq!(u11[0].sign, Rational::one());
        assert_eq!(u11[1].permutation, perm(&[2, 1]));
        assert_eq!(u11[1].sign, -Rational::one());
        assert_eq!(enumerate_unshuffles(2, 1).len(), 3);
        let u0 = enumerate_unshuffles(0, 4);
        assert_eq!(u0.len(), 1);
        assert!(u0[0].permutation.is_identity());
    }

    #[test]
    fn block_unshuffle_examples() {
        let single = enumerate_block_unshuffles(&[4]).unwrap();
        assert_eq!(single.len(), 1);
        assert!(single[0].permutation.is_identity());
        let ones = enumerate_block_unshuffles(&[1, 1]).unwrap();
        assert_eq!(ones.len(), 1);
        assert!(ones[0].permutation.is_identity());
        assert_eq!(enumerate_block_unshuffles(&[1, 2]).unwrap().len(), 3);
        assert!(enumerate_block_unshuffles(&[2, 1]).is_err());
    }

    fn is_block_unshuffle(p: &Permutation, blocks: &[usize], ordered: bool) -> bool {
        let starts = block_starts(blocks);
        for (i, &b) in blocks.iter().enumerate() {
            for j in 1..b {
                if p.image(starts[i] + j - 1) > p.image(starts[i] + j) {
                    return false;
                }
            }
        }
        if ordered {
            for i in 0..blocks.len().saturating_sub(1) {
                if blocks[i] == blocks[i + 1] && blocks[i] > 0 && p.image(starts[i]) > p.image(starts[i + 1]) {
                    return false;
                }
            }
        }
        true
    }

    fn nondecreasing_compositions(n: usize, min: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in min.max(1)..=n {
            for mut rest in nondecreasing_compositions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn block_unshuffles_match_brute_force_filtration() {
        for n in 1..=6 {
            let all = Permutation::all(n);
            for blocks in nondecreasing_compositions(n, 1) {
                let fast: Vec<_> = enumerate_block_unshuffles(&blocks).unwrap();
                let brute: Vec<_> = all.iter().filter(|p| is_block_unshuffle(p, &blocks, true)).collect();
                assert_eq!(fast.len(), brute.len(), "blocks {blocks:?}");
                for sp in &fast {
                    assert!(brute.contains(&&sp.permutation));
                    assert_eq!(sp.sign, Rational::from_integer(sp.permutation.sign()));
                }
            }
        }
    }

    #[test]
    fn unshuffle_counts_are_binomial() {
        for p in 0..5 {
            for q in 0..5 {
                let u = enumerate_unshuffles(p, q);
                assert_eq!(u.len(), binomial(p + q, p));
                let all = Permutation::all(p + q);
                let brute = all.iter().filter(|s| is_block_unshuffle(s, &[p, q], false)).count();
                assert_eq!(u.len(), brute);
            }
        }
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(Permutation)
    }

    proptest! {
        #[test]
        fn chi_is_multiplicative(
            (s, t, d) in (1usize..7).prop_flat_map(|n| (arb_perm(n), arb_perm(n), proptest::collection::vec(-3i64..4, n)))
        ) {
            let d_sigma: Vec<i64> = (0..d.len()).map(|i| d[s.image(i)]).collect();
            let lhs = koszul_chi(&s.compose(&t), &d);
            let rhs = koszul_chi(&s, &d) * koszul_chi(&t, &d_sigma);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_composes_to_identity(p in (0usize..8).prop_flat_map(arb_perm)) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert_eq!(p.sign(), p.inverse().sign());
        }
    }
}
