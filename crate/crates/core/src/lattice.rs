//! Integer lattices: kernels by unimodular column reduction and exact
//! determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Result of reducing an integer matrix A (m × N) by unimodular column
/// operations: A·U = [H | 0] with H of full column rank.
#[derive(Debug, Clone)]
pub struct ColumnReduction {
    pub rank: usize,
    /// N × N, columns are the new basis of ℤ^N.
    pub u: Vec<Vec<BigInt>>,
    /// Inverse of `u`.
    pub u_inv: Vec<Vec<BigInt>>,
}

impl ColumnReduction {
    pub fn new(a: &[Vec<i64>], ncols: usize) -> Self {
        let mut m: Vec<Vec<BigInt>> = a
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut u = identity(ncols);
        let mut u_inv = identity(ncols);
        let mut rank = 0;
        for row in 0..m.len() {
            if rank == ncols {
                break;
            }
            loop {
                // column with the smallest nonzero entry in this row
                let pivot = (rank..ncols)
                    .filter(|&c| !m[row][c].is_zero())
                    .min_by_key(|&c| m[row][c].abs());
                let Some(pivot) = pivot else { break };
                swap_cols(&mut m, rank, pivot);
                swap_cols(&mut u, rank, pivot);
                u_inv.swap(rank, pivot);
                let mut done = true;
                for c in rank + 1..ncols {
                    if m[row][c].is_zero() {
                        continue;
                    }
                    let q = m[row][c].div_floor(&m[row][rank]);
                    add_col_multiple(&mut m, c, rank, &q);
                    add_col_multiple(&mut u, c, rank, &q);
                    // column c -= q·column p  ⇔  row p of U⁻¹ += q·row c
                    let row_c = u_inv[c].clone();
                    for (x, y) in u_inv[rank].iter_mut().zip(&row_c) {
                        *x += &q * y;
                    }
                    if !m[row][c].is_zero() {
                        done = false;
                    }
                }
                if done {
                    rank += 1;
                    break;
                }
            }
        }
        ColumnReduction { rank, u, u_inv }
    }

    /// A ℤ-basis of the kernel: the last N - rank columns of U.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let n = self.u.len();
        (self.rank..n)
            .map(|c| (0..n).map(|r| self.u[r][c].clone()).collect())
            .collect()
    }

    /// Coordinates of `v` in the kernel basis, or None if v ∉ ker.
    pub fn kernel_coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let coords: Vec<BigInt> = self
            .u_inv
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect();
        if coords[..self.rank].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(coords[self.rank..].to_vec())
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// column `dst` -= q · column `src`
fn add_col_multiple(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let d = q * &row[src];
        row[dst] -= d;
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank over ℚ.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let as_i64: Option<Vec<Vec<i64>>> = rows
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).ok()).collect())
        .collect();
    match as_i64 {
        Some(m) => ColumnReduction::new(&m, ncols).rank,
        None => {
            let mut a = rows.to_vec();
            let mut rank = 0;
            for c in 0..ncols {
                let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
                    continue;
                };
                a.swap(rank, p);
                for i in rank + 1..a.len() {
                    let f = a[i][c].clone();
                    let g = a[rank][c].clone();
                    for j in 0..ncols {
                        let v = &a[i][j] * &g - &a[rank][j] * &f;
                        a[i][j] = v;
                    }
                }
                rank += 1;
            }
            rank
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&big(&[&[2, 1], &[1, 1]])), BigInt::from(1));
        assert_eq!(determinant(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            determinant(&big(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])),
            BigInt::from(4)
        );
        assert_eq!(determinant(&big(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }

    #[test]
    fn kernel_of_small_matrix() {
        // x + 2y + 3z = 0
        let red = ColumnReduction::new(&[vec![1, 2, 3]], 3);
        assert_eq!(red.rank, 1);
        let ker = red.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let s: BigInt = v[0].clone() + &v[1] * 2 + &v[2] * 3;
            assert!(s.is_zero());
        }
        let v = big(&[&[1, 1, -1]]).remove(0);
        assert!(red.kernel_coordinates(&v).is_some());
        let w = big(&[&[1, 0, 0]]).remove(0);
        assert!(red.kernel_coordinates(&w).is_none());
    }

    #[test]
    fn unimodular_tracking() {
        let a = vec![vec![4, 6, 10, 3], vec![2, -3, 5, 7]];
        let red = ColumnReduction::new(&a, 4);
        assert_eq!(red.rank, 2);
        let d = determinant(&red.u);
        assert!(d == BigInt::from(1) || d == BigInt::from(-1));
        for i in 0..4 {
            for j in 0..4 {
                let s: BigInt = (0..4).map(|k| &red.u[i][k] * &red.u_inv[k][j]).sum();
                assert_eq!(s, BigInt::from((i == j) as i64));
            }
        }
        for v in red.kernel_basis() {
            for row in &a {
                let s: BigInt = row.iter().zip(&v).map(|(x, y)| y * x).sum();
                assert!(s.is_zero());
            }
        }
        assert_eq!(rank(&big(&[&[1, 2], &[2, 4]])), 1);
    }
}
