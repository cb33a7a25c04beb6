//! Type-A permutations: lengths, canonical reduced words, coset representatives.

use crate::partition::Composition;
use serde::{Deserialize, Serialize};

/// A permutation of `{0, ..., n-1}` in one-line notation (`w.0[i] = w(i)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Longest element of S_n.
    pub fn longest(n: usize) -> Self {
        Perm((0..n).rev().collect())
    }

    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.0[i] > self.0[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &wi) in self.0.iter().enumerate() {
            inv[wi] = i;
        }
        Perm(inv)
    }

    /// `self * other` acting left to right on points: `(self*other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// The basic transposition `s_j` (1-indexed, swaps j, j+1).
    pub fn transposition(n: usize, j: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(j - 1, j);
        Perm(v)
    }

    /// Lexicographically smallest reduced word (letters `s_j`, 1-indexed),
    /// obtained greedily from left descents.
    pub fn lex_min_reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        let inv0 = w.inverse();
        let mut inv = inv0.0;
        while w.length() > 0 {
            // left descent at j iff position of value j-1 comes after position of value j
            let mut picked = None;
            for j in 1..w.n() {
                if inv[j - 1] > inv[j] {
                    picked = Some(j);
                    break;
                }
            }
            let j = picked.expect("nonidentity permutation has a left descent");
            word.push(j);
            w = Perm::transposition(w.n(), j).compose(&w);
            inv = w.inverse().0;
        }
        word
    }

    /// Build from a word of basic transpositions (1-indexed), left to right.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        let mut w = Perm::identity(n);
        for &j in word {
            w = w.compose(&Perm::transposition(n, j));
        }
        w
    }

    /// All permutations of S_n.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut v: Vec<usize> = (0..n).collect();
        permute(&mut v, 0, &mut out);
        out.sort();
        out
    }

    /// Minimal length representatives of `S_n / S_alpha`: permutations
    /// increasing on each alpha-block.
    pub fn min_coset_reps(alpha: &Composition) -> Vec<Perm> {
        let n = alpha.size() as usize;
        let mut blocks = Vec::new();
        let mut start = 0usize;
        for &a in &alpha.0 {
            blocks.push((start, start + a as usize));
            start += a as usize;
        }
        Perm::all(n)
            .into_iter()
            .filter(|w| {
                blocks.iter().all(|&(s, e)| (s + 1..e).all(|i| w.0[i - 1] < w.0[i]))
            })
            .collect()
    }
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
    if k == v.len() {
        out.push(Perm(v.clone()));
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}
