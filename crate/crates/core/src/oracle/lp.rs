//! Exact phase-1 simplex with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// λ ≥ 0 with A λ = b.
    Feasible(Vec<Q>),
    /// y with yᵀA ≤ 0 and yᵀb > 0.
    Infeasible(Vec<Q>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Decides whether A λ = b has a solution λ ≥ 0. `a` is given row-wise.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Feasibility {
    let m = a.len();
    let nv = a.first().map_or(0, Vec::len);
    let width = nv + m;
    // tableau rows: [A | I | b] with b ≥ 0
    let mut sign = vec![Q::one(); m];
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for i in 0..m {
        if b[i].is_negative() {
            sign[i] = -Q::one();
        }
        let mut row: Vec<Q> = a[i].iter().map(|x| x * &sign[i]).collect();
        for k in 0..m {
            row.push(if k == i { Q::one() } else { Q::zero() });
        }
        row.push(&b[i] * &sign[i]);
        t.push(row);
    }
    let mut basis: Vec<usize> = (nv..width).collect();
    // reduced costs for min Σ artificials
    let mut cost = vec![Q::zero(); width + 1];
    for row in &t {
        for (j, c) in cost.iter_mut().enumerate() {
            if j < nv || j == width {
                *c -= &row[j];
            }
        }
    }
    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase 1 is bounded below by zero, so a pivot row always exists
        let (p, _) = leave.expect("phase-1 objective is bounded");
        let piv = t[p][enter].clone();
        for x in t[p].iter_mut() {
            *x /= &piv;
        }
        let prow = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != p && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, y) in cost.iter_mut().zip(&prow) {
            *x -= &f * y;
        }
        basis[p] = enter;
    }
    let objective = -cost[width].clone();
    if objective.is_zero() {
        let mut lambda = vec![Q::zero(); nv];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < nv {
                lambda[bv] = t[i][width].clone();
            }
        }
        Feasibility::Feasible(lambda)
    } else {
        // dual of artificial i is 1 minus its reduced cost
        let y = (0..m)
            .map(|i| (Q::one() - &cost[nv + i]) * &sign[i])
            .collect();
        Feasibility::Infeasible(y)
    }
}

/// Re-checks a verdict directly against the system.
pub fn certify(a: &[Vec<Q>], b: &[Q], f: &Feasibility) -> bool {
    let nv = a.first().map_or(0, Vec::len);
    match f {
        Feasibility::Feasible(l) => {
            l.len() == nv
                && l.iter().all(|x| !x.is_negative())
                && a.iter().zip(b).all(|(row, bi)| {
                    row.iter().zip(l).fold(Q::zero(), |s, (x, y)| s + x * y) == *bi
                })
        }
        Feasibility::Infeasible(y) => {
            let yb = y.iter().zip(b).fold(Q::zero(), |s, (u, v)| s + u * v);
            yb.is_positive()
                && (0..nv).all(|j| {
                    let s = a.iter().zip(y).fold(Q::zero(), |s, (row, u)| s + &row[j] * u);
                    !s.is_positive()
                })
        }
    }
}

/// Whether `target` lies in the convex hull of `points`.
pub fn in_convex_hull(points: &[Vec<Q>], target: &[Q]) -> Feasibility {
    let d = target.len();
    let mut a: Vec<Vec<Q>> = (0..d).map(|k| points.iter().map(|p| p[k].clone()).collect()).collect();
    a.push(vec![Q::one(); points.len()]);
    let mut b = target.to_vec();
    b.push(Q::one());
    solve(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    fn pts(v: &[&[i64]]) -> Vec<Vec<Q>> {
        v.iter().map(|p| p.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn hull_membership() {
        let square = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let inside = [qr(1, 2), qr(1, 3)];
        let f = in_convex_hull(&square, &inside);
        assert!(f.is_feasible());
        let outside = [q(2), qr(1, 3)];
        let g = in_convex_hull(&square, &outside);
        assert!(!g.is_feasible());
        let mut a: Vec<Vec<Q>> = (0..2).map(|k| square.iter().map(|p| p[k].clone()).collect()).collect();
        a.push(vec![q(1); 4]);
        assert!(certify(&a, &[qr(1, 2), qr(1, 3), q(1)], &f));
        assert!(certify(&a, &[q(2), qr(1, 3), q(1)], &g));
    }

    #[test]
    fn negative_right_hand_side() {
        let a = vec![vec![q(-1), q(-2)], vec![q(1), q(0)]];
        let b = vec![q(-5), q(1)];
        let f = solve(&a, &b);
        assert_eq!(f, Feasibility::Feasible(vec![q(1), q(2)]));
        let b2 = vec![q(5), q(1)];
        let g = solve(&a, &b2);
        assert!(!g.is_feasible() && certify(&a, &b2, &g));
    }

    #[test]
    fn degenerate_hull() {
        // the barycenter of the 2-subsets of {1,..,4} on a face
        let p = pts(&[&[1, 1, 0, 0], &[1, 0, 1, 0], &[0, 1, 1, 0]]);
        let t = vec![qr(1, 2); 4];
        let f = in_convex_hull(&p, &t);
        assert!(!f.is_feasible());
        let t2 = [qr(2, 3), qr(2, 3), qr(2, 3), q(0)];
        assert!(in_convex_hull(&p, &t2).is_feasible());
    }
}
