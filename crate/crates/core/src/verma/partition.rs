//! Integer partitions indexing PBW monomials.

use std::cmp::Ordering;
use std::fmt;

/// Parts in weakly decreasing order. The partition `(λ₁, …, λ_k)` stands for the
/// monomial `L(-λ_k)…L(-λ₁)·v`: the largest mode acts first, so the operator word
/// read left to right is ascending, e.g. `(2, 1)` is `L(-1)L(-2)·v`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `1^n`, i.e. `L(-1)^n`.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Operator word read left to right (ascending parts).
    pub fn word(&self) -> Vec<u32> {
        self.parts.iter().rev().copied().collect()
    }

    pub fn from_word(word: &[u32]) -> Self {
        Self::new(word.to_vec())
    }

    pub fn level(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// Drops `k` parts equal to one. Panics when there are fewer.
    pub fn remove_ones(&self, k: usize) -> Self {
        assert!(self.count_ones() >= k);
        Self {
            parts: self.parts[..self.parts.len() - k].to_vec(),
        }
    }

    pub fn with_part(&self, p: u32) -> Self {
        let mut parts = self.parts.clone();
        parts.push(p);
        Self::new(parts)
    }

    /// All partitions of `n`, in descending lexicographic order: `(3), (2,1), (1,1,1)`.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Monomial text, e.g. `L(-1)L(-2)`; empty for the highest-weight vector.
    pub fn monomial(&self) -> String {
        self.word().iter().map(|p| format!("L(-{p})")).collect()
    }

    pub fn latex(&self) -> String {
        let mut out = String::new();
        let word = self.word();
        let mut i = 0;
        while i < word.len() {
            let p = word[i];
            let run = word[i..].iter().take_while(|&&q| q == p).count();
            if run > 1 {
                out.push_str(&format!("L_{{-{p}}}^{{{run}}}"));
            } else {
                out.push_str(&format!("L_{{-{p}}}"));
            }
            i += run;
        }
        out
    }
}

/// Level first, then descending lexicographic order of parts.
impl Ord for Partition {
    fn cmp(&self, o: &Self) -> Ordering {
        self.level()
            .cmp(&o.level())
            .then_with(|| o.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·v", self.monomial())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order_and_counts() {
        let p3 = Partition::all_of(3);
        assert_eq!(
            p3,
            vec![
                Partition::new(vec![3]),
                Partition::new(vec![2, 1]),
                Partition::ones(3)
            ]
        );
        let counts: Vec<usize> = (0..9).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn word_is_ascending() {
        let p = Partition::new(vec![1, 2]);
        assert_eq!(p.parts(), &[2, 1]);
        assert_eq!(p.word(), vec![1, 2]);
        assert_eq!(p.to_string(), "L(-1)L(-2)·v");
        assert_eq!(Partition::ones(3).latex(), "L_{-1}^{3}");
    }

    #[test]
    fn ordering_follows_enumeration() {
        let mut ps = Partition::all_of(4);
        ps.extend(Partition::all_of(2));
        ps.sort();
        assert_eq!(ps[0], Partition::new(vec![2]));
        assert_eq!(ps[2], Partition::new(vec![4]));
        assert_eq!(ps.last().unwrap(), &Partition::ones(4));
    }

    #[test]
    fn removing_ones() {
        let p = Partition::new(vec![3, 1, 1, 1]);
        assert_eq!(p.count_ones(), 3);
        assert_eq!(p.remove_ones(2), Partition::new(vec![3, 1]));
    }
}
