use std::collections::HashMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// Permutation of `{1..d}` in one-line notation: `w[k-1] = w(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation((1..=d).collect())
    }

    pub fn from_one_line(v: Vec<usize>) -> Result<Self> {
        let d = v.len();
        let mut seen = vec![false; d + 1];
        for &x in &v {
            if x == 0 || x > d || seen[x] {
                return Err(Error::param(format!("{v:?} is not a permutation of 1..{d}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(v))
    }

    /// `s_{r_1} s_{r_2} ... s_{r_m}` as a product (rightmost factor acts first).
    pub fn from_word(d: usize, word: &[usize]) -> Self {
        let mut w = Self::identity(d);
        for &r in word {
            w.right_mul_s(r);
        }
        w
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self * other`, i.e. `k -> self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&k| self.0[k - 1]).collect())
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut n = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// `w <- w s_r`: swaps positions `r` and `r+1`.
    #[inline]
    pub fn right_mul_s(&mut self, r: usize) {
        self.0.swap(r - 1, r);
    }

    /// `w <- s_r w`: swaps the values `r` and `r+1`.
    pub fn left_mul_s(&mut self, r: usize) {
        for x in self.0.iter_mut() {
            if *x == r {
                *x = r + 1;
            } else if *x == r + 1 {
                *x = r;
            }
        }
    }

    /// `l(w s_r) < l(w)`.
    #[inline]
    pub fn has_right_descent(&self, r: usize) -> bool {
        self.0[r - 1] > self.0[r]
    }

    /// `l(s_r w) < l(w)`: `r+1` appears before `r`.
    pub fn has_left_descent(&self, r: usize) -> bool {
        let pr = self.0.iter().position(|&x| x == r).expect("value present");
        let pr1 = self.0.iter().position(|&x| x == r + 1).expect("value present");
        pr1 < pr
    }

    /// Repeatedly strip the smallest right descent, then reverse.
    pub fn canonical_reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(r) = (1..w.degree()).find(|&r| w.has_right_descent(r)) {
            w.right_mul_s(r);
            word.push(r);
        }
        word.reverse();
        word
    }

    /// Reduced word obtained by stripping a uniformly chosen right descent at
    /// each step.
    pub fn random_reduced_word<R: Rng>(&self, rng: &mut R) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        loop {
            let descents: Vec<usize> = (1..w.degree()).filter(|&r| w.has_right_descent(r)).collect();
            if descents.is_empty() {
                break;
            }
            let r = descents[rng.gen_range(0..descents.len())];
            w.right_mul_s(r);
            word.push(r);
        }
        word.reverse();
        word
    }

    /// Number of reduced words.
    pub fn count_reduced_words(&self) -> u128 {
        fn go(w: &Permutation, memo: &mut HashMap<Permutation, u128>) -> u128 {
            if w.is_identity() {
                return 1;
            }
            if let Some(&c) = memo.get(w) {
                return c;
            }
            let mut total = 0;
            for r in 1..w.degree() {
                if w.has_right_descent(r) {
                    let mut u = w.clone();
                    u.right_mul_s(r);
                    total += go(&u, memo);
                }
            }
            memo.insert(w.clone(), total);
            total
        }
        go(self, &mut HashMap::new())
    }

    /// All reduced words in lexicographic order, or `None` if there are more
    /// than `cap`.
    pub fn reduced_words(&self, cap: usize) -> Option<Vec<Vec<usize>>> {
        if self.count_reduced_words() > cap as u128 {
            return None;
        }
        fn go(w: &Permutation) -> Vec<Vec<usize>> {
            if w.is_identity() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for r in 1..w.degree() {
                if w.has_right_descent(r) {
                    let mut u = w.clone();
                    u.right_mul_s(r);
                    for mut word in go(&u) {
                        word.push(r);
                        out.push(word);
                    }
                }
            }
            out
        }
        let mut words = go(self);
        words.sort();
        Some(words)
    }

    /// Bruhat order `self <= w`, by the subword property along the canonical
    /// reduced word of `w`, read from the right.
    ///
    /// If `s` is a right descent of `w`, then `u <= w` iff `us <= ws` when
    /// `s` is also a right descent of `u`, and iff `u <= ws` otherwise.
    pub fn bruhat_leq(&self, w: &Permutation) -> bool {
        assert_eq!(self.degree(), w.degree(), "permutations of different degree");
        let mut u = self.clone();
        for &r in w.canonical_reduced_word().iter().rev() {
            if u.has_right_descent(r) {
                u.right_mul_s(r);
            }
        }
        u.is_identity()
    }

    /// Cycle notation without fixed points, e.g. `(1 2 5)(3 6 4)`.
    pub fn cycle_string(&self) -> String {
        let d = self.degree();
        let mut seen = vec![false; d + 1];
        let mut out = String::new();
        for start in 1..=d {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut k = self.apply(start);
            while k != start {
                seen[k] = true;
                cyc.push(k);
                k = self.apply(k);
            }
            out.push('(');
            out.push_str(&cyc.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// All permutations of `1..d` in lexicographic order.
    pub fn all(d: usize) -> Vec<Permutation> {
        let mut v: Vec<usize> = (1..=d).collect();
        let mut out = vec![Permutation(v.clone())];
        // Standard next-permutation iteration.
        loop {
            let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
                break;
            };
            let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
            v.swap(i - 1, j);
            v[i..].reverse();
            out.push(Permutation(v.clone()));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    // Every product of a subword of a reduced word of w; the Bruhat interval below w.
    fn subword_products(w: &Permutation) -> HashSet<Permutation> {
        let word = w.canonical_reduced_word();
        let d = w.degree();
        let mut out = HashSet::new();
        for mask in 0u32..(1 << word.len()) {
            let sub: Vec<usize> = word.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &r)| r).collect();
            out.insert(Permutation::from_word(d, &sub));
        }
        out
    }

    #[test]
    fn longest_element_of_s3() {
        let w0 = Permutation::from_one_line(vec![3, 2, 1]).unwrap();
        assert_eq!(w0.canonical_reduced_word(), vec![1, 2, 1]);
        assert_eq!(Permutation::from_word(3, &[1, 2, 1]), w0);
        assert_eq!(w0.reduced_words(10).unwrap(), vec![vec![1, 2, 1], vec![2, 1, 2]]);
        assert!(Permutation::identity(4).canonical_reduced_word().is_empty());
    }

    #[test]
    fn cycle_notation() {
        let w = Permutation::from_one_line(vec![2, 5, 6, 3, 1, 4, 9, 10, 7, 8]).unwrap();
        assert_eq!(w.cycle_string(), "(1 2 5)(3 6 4)(7 9)(8 10)");
        assert_eq!(Permutation::identity(3).cycle_string(), "()");
    }

    #[test]
    fn bruhat_small_examples() {
        let s1 = Permutation::from_word(3, &[1]);
        let s1s2 = Permutation::from_word(3, &[1, 2]);
        let s2 = Permutation::from_word(3, &[2]);
        assert!(s1.bruhat_leq(&s1s2));
        assert!(s2.bruhat_leq(&s1s2));
        assert!(!s1s2.bruhat_leq(&s1));
        let s2s1 = Permutation::from_word(3, &[2, 1]);
        assert!(!s1s2.bruhat_leq(&s2s1));
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for d in 1..=5 {
            let all = Permutation::all(d);
            for w in &all {
                let below = subword_products(w);
                for u in &all {
                    assert_eq!(u.bruhat_leq(w), below.contains(u), "u={u} w={w}");
                }
            }
        }
    }

    #[test]
    fn reduced_word_counts() {
        // Longest element of S_4 has 16 reduced words.
        let w0 = Permutation::from_one_line(vec![4, 3, 2, 1]).unwrap();
        assert_eq!(w0.count_reduced_words(), 16);
        assert_eq!(w0.reduced_words(100).unwrap().len(), 16);
        assert!(w0.reduced_words(15).is_none());
        assert_eq!(Permutation::all(4).len(), 24);
    }

    proptest! {
        #[test]
        fn canonical_word_is_reduced(v in Just((1..=7usize).collect::<Vec<_>>()).prop_shuffle()) {
            let w = Permutation::from_one_line(v).unwrap();
            let word = w.canonical_reduced_word();
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(Permutation::from_word(7, &word), w.clone());
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(w.length() as u64);
            let rw = w.random_reduced_word(&mut rng);
            prop_assert_eq!(Permutation::from_word(7, &rw), w.clone());
            prop_assert_eq!(w.compose(&w.inverse()), Permutation::identity(7));
        }

        #[test]
        fn left_and_right_descents(v in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle(), r in 1usize..6) {
            let w = Permutation::from_one_line(v).unwrap();
            let mut left = w.clone();
            left.left_mul_s(r);
            prop_assert_eq!(left.clone(), Permutation::from_word(6, &[r]).compose(&w));
            prop_assert_eq!(left.length() < w.length(), w.has_left_descent(r));
            let mut right = w.clone();
            right.right_mul_s(r);
            prop_assert_eq!(right.length() < w.length(), w.has_right_descent(r));
        }
    }
}
