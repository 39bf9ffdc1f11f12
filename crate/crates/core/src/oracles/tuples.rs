use crate::linear::enumerate_block_unshuffles;

/// A choice of distinct input slots of `θ_{s,V}` for the other `k-1`
/// arguments, together with the block sizes it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleTuple {
    /// The argument whose `V`-component receives the others.
    pub s: usize,
    /// `a[j]` is the one-based slot of argument `j`; `None` at `s`.
    pub a: Vec<Option<usize>>,
    /// Block size of each slot: `blocks[j]` of the argument placed there, `1`
    /// for a slot that receives `g`.
    pub r: Vec<usize>,
}

impl AdmissibleTuple {
    /// All tuples for argument `s` among arguments with the given block
    /// sizes, on `slots` inputs. With `ordered`, only tuples whose induced
    /// block sizes are nondecreasing are returned.
    pub fn enumerate(s: usize, blocks: &[usize], slots: usize, ordered: bool) -> Vec<AdmissibleTuple> {
        let k = blocks.len();
        let mut out = Vec::new();
        let mut a = vec![None; k];
        fn rec(
            j: usize,
            s: usize,
            blocks: &[usize],
            slots: usize,
            ordered: bool,
            a: &mut Vec<Option<usize>>,
            out: &mut Vec<AdmissibleTuple>,
        ) {
            if j == blocks.len() {
                let mut r = vec![1; slots];
                for (i, p) in a.iter().enumerate() {
                    if let Some(p) = p {
                        r[p - 1] = blocks[i];
                    }
                }
                if !ordered || r.windows(2).all(|w| w[0] <= w[1]) {
                    out.push(AdmissibleTuple { s, a: a.clone(), r });
                }
                return;
            }
            if j == s {
                rec(j + 1, s, blocks, slots, ordered, a, out);
                return;
            }
            for p in 1..=slots {
                if !a.contains(&Some(p)) {
                    a[j] = Some(p);
                    rec(j + 1, s, blocks, slots, ordered, a, out);
                    a[j] = None;
                }
            }
        }
        if k >= 1 && slots + 1 >= k {
            rec(0, s, blocks, slots, ordered, &mut a, &mut out);
        }
        out
    }

    /// `s` followed by the other arguments in the order of their slots.
    pub fn order(&self) -> Vec<usize> {
        let mut rest: Vec<(usize, usize)> =
            self.a.iter().enumerate().filter_map(|(j, p)| p.map(|p| (p, j))).collect();
        rest.sort();
        std::iter::once(self.s).chain(rest.into_iter().map(|(_, j)| j)).collect()
    }

    /// `Σ_{i<j} r_i (r_j + 1)`.
    pub fn assoc_exponent(&self) -> i64 {
        let r = &self.r;
        let mut e = 0;
        for i in 0..r.len() {
            for j in i + 1..r.len() {
                e += r[i] * (r[j] + 1);
            }
        }
        e as i64
    }

    /// `l(l-1)/2 + Σ_i r_i (l-i)` with `l` the number of slots.
    pub fn lie_exponent(&self) -> i64 {
        let l = self.r.len();
        let mut e = l * (l.saturating_sub(1)) / 2;
        for (i, &ri) in self.r.iter().enumerate() {
            e += ri * (l - 1 - i);
        }
        e as i64
    }

    /// Whether the induced block sizes are nondecreasing, which is when the
    /// block unshuffles `S^<_{r_1,…,r_l}` are defined.
    pub fn is_admissible(&self) -> bool {
        enumerate_block_unshuffles(&self.r).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_distinct_placements() {
        // two other arguments into 3 slots: 3·2 placements
        assert_eq!(AdmissibleTuple::enumerate(0, &[2, 1, 2], 3, false).len(), 6);
        // nondecreasing blocks force the size-2 argument to the last slot
        let ordered = AdmissibleTuple::enumerate(0, &[2, 1, 2], 3, true);
        assert!(ordered.iter().all(|t| t.a[2] == Some(3) && t.r == vec![1, 1, 2]));
        assert_eq!(ordered.len(), 2);
        assert!(ordered.iter().all(AdmissibleTuple::is_admissible));
    }

    #[test]
    fn too_few_slots_give_nothing() {
        assert!(AdmissibleTuple::enumerate(1, &[1, 1, 1, 1], 2, false).is_empty());
    }

    #[test]
    fn order_follows_slots() {
        let t = AdmissibleTuple { s: 1, a: vec![Some(3), None, Some(1)], r: vec![1, 1, 1] };
        assert_eq!(t.order(), vec![1, 2, 0]);
    }
}
