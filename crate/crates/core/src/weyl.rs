//! The symmetric group S_n as the Weyl group of type A_{n-1}.
//!
//! Permutations are kept in one-line notation; words in the simple
//! reflections are derived views. Two order relations are exposed: the
//! length-additive order `bruhat_leq` (u ≤ w iff l(w) = l(u) + l(w u⁻¹)),
//! which the rest of the crate uses, and classical Bruhat
//! order via the subword property, kept separately for cross-checks.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Indices of simple reflections, `1..=n-1`.
pub type SimpleSet = BTreeSet<usize>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = w(i + 1) - 1
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From one-line notation with values in `1..=n`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation {
                    n,
                    images: one_line.to_vec(),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: one_line.iter().map(|v| v - 1).collect(),
        })
    }

    /// The simple transposition s_i exchanging i and i+1.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// Product s_{i_1} s_{i_2} ... s_{i_k} (rightmost letter applied first).
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(n);
        for &i in word.iter().rev() {
            p = Self::simple(n, i)?.compose(&p)?;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    /// w(i) for `i` in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// p ∘ q: apply `q` first.
    pub fn compose(&self, q: &Permutation) -> Result<Self> {
        if self.n() != q.n() {
            return Err(Error::RankMismatch(self.n(), q.n()));
        }
        Ok(Permutation {
            images: q.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Number of inversions of the one-line notation.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// True iff l(s_i w) < l(w).
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.images[i - 1] > inv.images[i]
    }

    /// True iff l(w s_i) < l(w).
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// A reduced word, extracted by repeatedly peeling off the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut word = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        while !cur.is_identity() {
            let i = (1..n)
                .find(|&i| cur.has_left_descent(i))
                .expect("non-identity permutation has a descent");
            word.push(i);
            cur = Self::simple(n, i).unwrap().compose(&cur).unwrap();
        }
        word
    }

    /// Every permutation of `1..=n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

/// Whether a word is reduced.
pub fn is_reduced(n: usize, word: &[usize]) -> Result<bool> {
    Ok(Permutation::from_word(n, word)?.length() == word.len())
}

/// The order used throughout: u ≤ w iff l(w) = l(u) + l(w u⁻¹).
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    let quotient = w.compose(&u.inverse())?;
    Ok(w.length() == u.length() + quotient.length())
}

/// Classical Bruhat order: u ≤ w iff u is the product of a subword of a
/// reduced word of w.
pub fn classical_bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.n() != w.n() {
        return Err(Error::RankMismatch(u.n(), w.n()));
    }
    let n = w.n();
    let mut reachable: HashSet<Permutation> = HashSet::new();
    reachable.insert(Permutation::identity(n));
    for &i in w.reduced_word().iter().rev() {
        let s = Permutation::simple(n, i)?;
        let extended: Vec<Permutation> = reachable
            .iter()
            .map(|p| s.compose(p).unwrap())
            .collect();
        reachable.extend(extended);
    }
    Ok(reachable.contains(u))
}

fn check_subset(n: usize, set: &SimpleSet) -> Result<()> {
    for &i in set {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
    }
    Ok(())
}

/// Maximal runs of positions joined by the reflections in `set`.
fn blocks(n: usize, set: &SimpleSet) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for pos in 0..n {
        // positions pos and pos+1 (0-based) are joined by s_{pos+1}
        if pos + 1 == n || !set.contains(&(pos + 1)) {
            out.push(start..pos + 1);
            start = pos + 1;
        }
    }
    out
}

/// True iff w(α_i) > 0 for every i in `set`.
pub fn is_min_coset_rep(w: &Permutation, set: &SimpleSet) -> bool {
    set.iter().all(|&i| !w.has_right_descent(i))
}

pub fn in_parabolic(w: &Permutation, set: &SimpleSet) -> bool {
    blocks(w.n(), set)
        .into_iter()
        .all(|b| b.clone().all(|pos| b.contains(&w.images[pos])))
}

/// Factor w = φ ∘ τ with φ ∈ W^I and τ ∈ W_I, lengths adding.
pub fn min_coset_rep(w: &Permutation, set: &SimpleSet) -> Result<(Permutation, Permutation)> {
    check_subset(w.n(), set)?;
    let mut images = w.images.clone();
    for b in blocks(w.n(), set) {
        images[b].sort_unstable();
    }
    let phi = Permutation { images };
    let tau = phi.inverse().compose(w)?;
    Ok((phi, tau))
}

/// Longest element of the parabolic subgroup W_I.
pub fn longest_element(set: &SimpleSet, n: usize) -> Result<Permutation> {
    check_subset(n, set)?;
    let mut images: Vec<usize> = (0..n).collect();
    for b in blocks(n, set) {
        images[b].reverse();
    }
    Ok(Permutation { images })
}

/// All elements of the parabolic subgroup W_I.
pub fn parabolic_elements(set: &SimpleSet, n: usize) -> Vec<Permutation> {
    Permutation::all(n)
        .into_iter()
        .filter(|p| in_parabolic(p, set))
        .collect()
}

/// I_r = S \ {α_r}.
pub fn maximal_parabolic(n: usize, r: usize) -> SimpleSet {
    (1..n).filter(|&i| i != r).collect()
}
