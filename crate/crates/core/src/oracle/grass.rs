//! Explicit points of Grassmannian Schubert cells.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::lp::{in_convex_hull, Feasibility};
use super::{nonzero, sampler, Sampler};
use crate::rational::{q, qr, Q};
use crate::schubert::GrassmannElement;
use crate::weyl::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlueckerSupport {
    pub n: usize,
    pub r: usize,
    pub support: BTreeSet<Vec<usize>>,
}

/// A point of the cell of the r-subset `b` (the pivot rows): column j has a
/// 1 in row b_j and coordinate X_{j,c} in the c-th row below b_j outside b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPoint {
    pub n: usize,
    pub b: Vec<usize>,
    pub x: Vec<Vec<Q>>,
}

/// Rows above the pivot of column j that are not pivots themselves.
pub fn free_rows(b: &[usize], j: usize) -> Vec<usize> {
    (1..b[j]).filter(|p| !b.contains(p)).collect()
}

impl CellPoint {
    pub fn random(n: usize, b: &[usize], rng: &mut Sampler) -> Self {
        let x = (0..b.len())
            .map(|j| free_rows(b, j).iter().map(|_| q(nonzero(rng))).collect())
            .collect();
        CellPoint { n, b: b.to_vec(), x }
    }

    /// The n×r matrix, rows indexed 1..=n as 0..n.
    pub fn matrix(&self) -> Vec<Vec<Q>> {
        let r = self.b.len();
        let mut m = vec![vec![Q::zero(); r]; self.n];
        for j in 0..r {
            m[self.b[j] - 1][j] = Q::one();
            for (c, p) in free_rows(&self.b, j).into_iter().enumerate() {
                m[p - 1][j] = self.x[j][c].clone();
            }
        }
        m
    }

    /// Brings the column span of an n×r matrix of rank r to cell normal form.
    pub fn from_matrix(mut m: Vec<Vec<Q>>) -> Option<Self> {
        let n = m.len();
        let r = m.first().map_or(0, Vec::len);
        let mut remaining: Vec<usize> = (0..r).collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        while !remaining.is_empty() {
            let (p, k) = (0..n)
                .rev()
                .find_map(|p| remaining.iter().find(|&&k| !m[p][k].is_zero()).map(|&k| (p, k)))?;
            let s = m[p][k].clone();
            for row in m.iter_mut() {
                row[k] = &row[k] / &s;
            }
            for c in 0..r {
                if c != k && !m[p][c].is_zero() {
                    let f = m[p][c].clone();
                    for row in m.iter_mut() {
                        let v = &row[k] * &f;
                        row[c] -= v;
                    }
                }
            }
            remaining.retain(|&c| c != k);
            pivots.push((p, k));
        }
        pivots.sort();
        let b: Vec<usize> = pivots.iter().map(|&(p, _)| p + 1).collect();
        let x = pivots
            .iter()
            .enumerate()
            .map(|(j, &(_, k))| free_rows(&b, j).iter().map(|&p| m[p - 1][k].clone()).collect())
            .collect();
        Some(CellPoint { n, b, x })
    }

    /// σ·x, with σ permuting the standard basis.
    pub fn permuted(&self, sigma: &Permutation) -> Option<Self> {
        let m = self.matrix();
        let mut out = m.clone();
        for (p, row) in m.into_iter().enumerate() {
            out[sigma.apply(p + 1) - 1] = row;
        }
        Self::from_matrix(out)
    }
}

fn det(mut m: Vec<Vec<Q>>) -> Q {
    let k = m.len();
    let mut d = Q::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&p| !m[p][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let piv = m[c][c].clone();
        d *= &piv;
        for i in c + 1..k {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &piv;
                for j in c..k {
                    let v = &m[c][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
    }
    d
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(1, n, r, &mut cur, &mut out);
    out
}

pub fn support_of(m: &[Vec<Q>]) -> PlueckerSupport {
    let n = m.len();
    let r = m.first().map_or(0, Vec::len);
    let support = subsets(n, r)
        .into_iter()
        .filter(|rows| !det(rows.iter().map(|&p| m[p - 1].clone()).collect()).is_zero())
        .collect();
    PlueckerSupport { n, r, support }
}

/// Sorted image of the first r columns of w.
pub fn pivot_rows(g: &GrassmannElement) -> Vec<usize> {
    let mut b = g.subset();
    b.sort();
    b
}

pub fn sample_cell_point(g: &GrassmannElement, seed: u64) -> PlueckerSupport {
    let mut rng = sampler(seed);
    support_of(&CellPoint::random(g.n(), &pivot_rows(g), &mut rng).matrix())
}

/// Whether (r/n, …, r/n) lies in the hull of the support's indicator vectors.
pub fn hm_semistable(s: &PlueckerSupport) -> (bool, Feasibility) {
    let points: Vec<Vec<Q>> = s
        .support
        .iter()
        .map(|set| (1..=s.n).map(|i| if set.contains(&i) { Q::one() } else { Q::zero() }).collect())
        .collect();
    let target = vec![qr(s.r as i64, s.n as i64); s.n];
    let f = in_convex_hull(&points, &target);
    (f.is_feasible(), f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Semistable,
    Unstable,
    Inconclusive,
}

/// Samples the cell once per seed; supports must agree (up to five rounds of
/// resampling) and the LP verdicts must be unanimous.
pub fn cell_verdict(g: &GrassmannElement, seeds: &[u64]) -> Verdict {
    for round in 0..5u64 {
        let supports: Vec<PlueckerSupport> =
            seeds.iter().map(|s| sample_cell_point(g, s + 1000 * round)).collect();
        if supports.windows(2).any(|w| w[0] != w[1]) {
            continue;
        }
        let verdicts: Vec<bool> = supports.iter().map(|s| hm_semistable(s).0).collect();
        return match (verdicts.iter().all(|&v| v), verdicts.iter().all(|&v| !v)) {
            (true, _) => Verdict::Semistable,
            (_, true) => Verdict::Unstable,
            _ => Verdict::Inconclusive,
        };
    }
    Verdict::Inconclusive
}

pub fn gale_leq(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// s_k preserves the Schubert variety of `b` iff it maps every smaller cell
/// into it.
pub fn stabilizes(n: usize, b: &[usize], k: usize) -> bool {
    subsets(n, b.len())
        .into_iter()
        .filter(|c| gale_leq(c, b))
        .all(|c| {
            let mut img: Vec<usize> = c
                .iter()
                .map(|&p| if p == k { k + 1 } else if p == k + 1 { k } else { p })
                .collect();
            img.sort();
            gale_leq(&img, b)
        })
}

/// Whether σ preserves each block of consecutive indices joined by `gens`.
pub fn in_generated_subgroup(sigma: &Permutation, gens: &[usize]) -> bool {
    let n = sigma.n();
    let mut block = vec![0usize; n + 1];
    for p in 2..=n {
        block[p] = if gens.contains(&(p - 1)) { block[p - 1] } else { block[p - 1] + 1 };
    }
    (1..=n).all(|p| block[sigma.apply(p)] == block[p])
}
