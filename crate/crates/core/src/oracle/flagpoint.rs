//! Explicit points of the full flag variety GL_N/B: u·w·B with u a product
//! of root subgroups u_β, β = [j,k] ↔ the entry (j, k+1).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::lp::{solve, Feasibility};
use super::{nonzero, Sampler};
use crate::rational::{q, Q};
use crate::weyl::Permutation;

pub type Root = (usize, usize);
pub type Matrix = Vec<Vec<Q>>;

/// {[p, q-1] : p < q, w⁻¹(p) > w⁻¹(q)}, in the order
/// [1,N-1] > … > [1,1] > [2,N-1] > … > [N-1,N-1].
pub fn inversion_roots(w: &Permutation) -> Vec<Root> {
    let inv = w.inverse();
    let big = w.n();
    let mut out = Vec::new();
    for p in 1..big {
        for qq in (p + 1..=big).rev() {
            if inv.apply(p) > inv.apply(qq) {
                out.push((p, qq - 1));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagPoint {
    pub w: Permutation,
    pub coords: BTreeMap<Root, Q>,
}

pub fn identity_matrix(big: usize) -> Matrix {
    (0..big)
        .map(|i| (0..big).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let big = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    (0..big)
        .map(|i| {
            (0..cols)
                .map(|j| (0..inner).fold(Q::zero(), |s, k| s + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// e_c ↦ e_{σ(c)}.
pub fn permutation_matrix(sigma: &Permutation) -> Matrix {
    let big = sigma.n();
    let mut m = vec![vec![Q::zero(); big]; big];
    for c in 1..=big {
        m[sigma.apply(c) - 1][c - 1] = Q::one();
    }
    m
}

/// A representative of s_i: the transposition matrix, or with entries
/// (i, i+1) = -1, (i+1, i) = 1 when `signed`.
pub fn simple_rep(big: usize, i: usize, signed: bool) -> Matrix {
    let mut m = permutation_matrix(&Permutation::simple(big, i).expect("valid index"));
    if signed {
        m[i - 1][i] = -Q::one();
    }
    m
}

impl FlagPoint {
    pub fn random(w: &Permutation, rng: &mut Sampler) -> Self {
        let coords = inversion_roots(w).into_iter().map(|b| (b, q(nonzero(rng)))).collect();
        FlagPoint { w: w.clone(), coords }
    }

    pub fn get(&self, b: Root) -> Q {
        self.coords.get(&b).cloned().unwrap_or_else(Q::zero)
    }

    /// Π u_β(X_β) in decreasing order, then times w.
    pub fn matrix(&self) -> Matrix {
        let big = self.w.n();
        let mut u = identity_matrix(big);
        // right multiplication by I + x E_{j,k+1} adds x·col j to col k+1
        for &(j, k) in inversion_roots(&self.w).iter() {
            let x = self.get((j, k));
            for row in u.iter_mut() {
                let v = &row[j - 1] * &x;
                row[k] += v;
            }
        }
        mul(&u, &permutation_matrix(&self.w))
    }

    /// Bruhat normal form of g·B.
    pub fn from_matrix(mut g: Matrix) -> Option<Self> {
        let big = g.len();
        let mut images = Vec::with_capacity(big);
        let mut u = vec![vec![Q::zero(); big]; big];
        for c in 0..big {
            let p = (0..big).rev().find(|&p| !g[p][c].is_zero())?;
            let s = g[p][c].clone();
            for row in g.iter_mut() {
                row[c] = &row[c] / &s;
            }
            for c2 in c + 1..big {
                if !g[p][c2].is_zero() {
                    let f = g[p][c2].clone();
                    for row in g.iter_mut() {
                        let v = &row[c] * &f;
                        row[c2] -= v;
                    }
                }
            }
            for (i, row) in g.iter().enumerate() {
                u[i][p] = row[c].clone();
            }
            images.push(p + 1);
        }
        let w = Permutation::from_one_line(&images).ok()?;
        // peel u = G_1 G_2 ⋯ row by row
        let mut coords = BTreeMap::new();
        for j in 1..big {
            let mut x = vec![Q::zero(); big + 1];
            for qq in j + 1..=big {
                let mut v = u[j - 1][qq - 1].clone();
                for q2 in j + 1..qq {
                    v -= &x[q2] * &u[q2 - 1][qq - 1];
                }
                x[qq] = v;
            }
            for (qq, xv) in x.into_iter().enumerate().skip(j + 1) {
                if !xv.is_zero() {
                    coords.insert((j, qq - 1), xv);
                }
            }
            for (c, e) in u[j - 1].iter_mut().enumerate() {
                *e = if c + 1 == j { Q::one() } else { Q::zero() };
            }
        }
        let allowed = inversion_roots(&w);
        if coords.keys().any(|b| !allowed.contains(b)) {
            return None;
        }
        Some(FlagPoint { w, coords })
    }

    /// The unipotent factor u with matrix() = u·w.
    pub fn unipotent(&self) -> Matrix {
        let m = self.matrix();
        let w = &self.w;
        let big = w.n();
        let mut u = vec![vec![Q::zero(); big]; big];
        for c in 1..=big {
            for (i, row) in m.iter().enumerate() {
                u[i][w.apply(c) - 1] = row[c - 1].clone();
            }
        }
        u
    }

    /// Coordinates for the product of the u_β taken in increasing order.
    pub fn increasing_coords(&self) -> BTreeMap<Root, Q> {
        let inv = mul(&unitriangular_inverse(&self.unipotent()), &permutation_matrix(&self.w));
        let p = Self::from_matrix(inv).expect("U_w is a group");
        p.coords.into_iter().map(|(b, x)| (b, -x)).collect()
    }

    pub fn from_increasing(w: &Permutation, coords: &BTreeMap<Root, Q>) -> Self {
        let neg = FlagPoint { w: w.clone(), coords: coords.iter().map(|(b, x)| (*b, -x.clone())).collect() };
        let u = unitriangular_inverse(&neg.unipotent());
        Self::from_matrix(mul(&u, &permutation_matrix(w))).expect("U_w is a group")
    }

    pub fn left_multiply(&self, m: &Matrix) -> Option<Self> {
        Self::from_matrix(mul(m, &self.matrix()))
    }
}

pub fn unitriangular_inverse(u: &Matrix) -> Matrix {
    let big = u.len();
    let mut inv = identity_matrix(big);
    for c in 0..big {
        for i in (0..c).rev() {
            let mut v = Q::zero();
            for k in i + 1..=c {
                v -= &u[i][k] * &inv[k][c];
            }
            inv[i][c] = v;
        }
    }
    inv
}

/// Minors on rows `rows` of the first k columns.
pub fn leading_minor(g: &Matrix, rows: &[usize]) -> Q {
    let mut m: Matrix = rows.iter().map(|&p| g[p - 1][..rows.len()].to_vec()).collect();
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

fn k_subsets(big: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|s| {
                let start = s.last().map_or(1, |l| l + 1);
                (start..=big).map(move |v| {
                    let mut t = s.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// Hilbert–Mumford semistability of g·B for the line bundle with coroot
/// pairings `c` (c_k ≥ 0 on α_k): the barycenter Σ c_k (k/N)·1 must lie in
/// the Minkowski sum Σ c_k P_k, P_k the hull of the k-subsets of rows whose
/// leading k×k minor is nonzero.
pub fn flag_hm_semistable(g: &Matrix, c: &[i64]) -> Feasibility {
    let big = g.len();
    let mut columns: Vec<(usize, Vec<usize>)> = Vec::new();
    for (k, &ck) in c.iter().enumerate().map(|(i, ck)| (i + 1, ck)) {
        if ck == 0 {
            continue;
        }
        for rows in k_subsets(big, k) {
            if !leading_minor(g, &rows).is_zero() {
                columns.push((k, rows));
            }
        }
    }
    let levels: Vec<usize> = (1..=c.len()).filter(|&k| c[k - 1] != 0).collect();
    let mut a: Vec<Vec<Q>> = Vec::new();
    let mut b: Vec<Q> = Vec::new();
    for i in 1..=big {
        a.push(
            columns
                .iter()
                .map(|(k, rows)| if rows.contains(&i) { q(c[k - 1]) } else { Q::zero() })
                .collect(),
        );
        b.push(levels.iter().fold(Q::zero(), |s, &k| s + q(c[k - 1] * k as i64) / q(big as i64)));
    }
    for &k in &levels {
        a.push(columns.iter().map(|(l, _)| if *l == k { Q::one() } else { Q::zero() }).collect());
        b.push(Q::one());
    }
    solve(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::sampler;

    #[test]
    fn round_trip_all_cells() {
        let mut rng = sampler(5);
        for w in Permutation::all(4) {
            let p = FlagPoint::random(&w, &mut rng);
            assert_eq!(p.coords.len(), w.length());
            assert_eq!(FlagPoint::from_matrix(p.matrix()), Some(p));
        }
    }

    #[test]
    fn increasing_order_round_trip() {
        let mut rng = sampler(8);
        for w in Permutation::all(4) {
            let p = FlagPoint::random(&w, &mut rng);
            let inc = p.increasing_coords();
            assert_eq!(FlagPoint::from_increasing(&w, &inc), p);
            let u = p.unipotent();
            assert_eq!(mul(&u, &unitriangular_inverse(&u)), identity_matrix(4));
        }
    }

    #[test]
    fn torus_rescaling_is_diagonal_on_coordinates() {
        let mut rng = sampler(6);
        let w = Permutation::from_word(4, &[1, 2, 3, 1]).unwrap();
        let p = FlagPoint::random(&w, &mut rng);
        let t = [q(2), q(-3), q(5), q(7)];
        let mut d = identity_matrix(4);
        for i in 0..4 {
            d[i][i] = t[i].clone();
        }
        let moved = p.left_multiply(&d).unwrap();
        assert_eq!(moved.w, w);
        for (&(j, k), x) in &p.coords {
            assert_eq!(moved.get((j, k)), x * &t[j - 1] / &t[k]);
        }
    }

    #[test]
    fn simple_reps_square_to_torus() {
        let s = simple_rep(3, 1, true);
        let s2 = mul(&s, &s);
        assert_eq!(s2[0][0], -Q::one());
        assert_eq!(s2[2][2], Q::one());
    }
}
