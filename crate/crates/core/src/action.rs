//! Weyl-group actions on cell coordinates X_{i,c} and on the invariants
//! Y_{i,j}, together with the rank-two and standard-representation models.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::{RationalFunction, Substitution, Var};
use crate::schubert::GrassmannElement;
use crate::weyl::SimpleSet;

fn xv(i: usize, c: usize) -> RationalFunction {
    RationalFunction::var(Var::x(i, c))
}

fn yv(i: usize, j: usize) -> RationalFunction {
    RationalFunction::var(Var::y(i, j))
}

/// How a stabilizing simple reflection moves the cell coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorCase {
    /// s_k with k, k+1 both outside {w(1..r)}: columns c and c+1 trade places.
    ColumnSwap { column: usize },
    /// s_{a_i} with a_i = a_{i-1} + 1: rows i-1 and i trade places.
    RowSwap { row: usize },
    /// s_{a_i} with i = 1 or a_i ≥ a_{i-1} + 2.
    Pivot { row: usize },
}

/// Simple reflections s_k with s_k X(w) ⊆ X(w).
pub fn stabilizer_generators(g: &GrassmannElement) -> SimpleSet {
    let subset = g.subset();
    (1..g.n())
        .filter(|k| !(subset.contains(k) && !subset.contains(&(k + 1))))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    /// 1 ≤ k ≤ a_1 - 2
    Leading,
    /// a_p + 2 ≤ k ≤ a_{p+1} - 2, and the tail a_r + 2 ≤ k ≤ n - 1
    Gap,
    /// k = a_p - 1
    BeforePivot,
    /// k = a_p
    Pivot,
}

/// The four closed-form families of stabilizing reflections
/// (the gap family extended to the tail after a_r).
pub fn printed_families(g: &GrassmannElement) -> Vec<(Family, usize)> {
    let n = g.n();
    let r = g.r();
    let mut out = Vec::new();
    let a = |p: usize| g.a(p);
    for k in 1..=a(1).saturating_sub(2) {
        out.push((Family::Leading, k));
    }
    for p in 1..=r {
        let hi = if p < r { a(p + 1).saturating_sub(2) } else { n - 1 };
        for k in a(p) + 2..=hi {
            out.push((Family::Gap, k));
        }
    }
    for p in 1..=r {
        if a(p) >= 2 {
            out.push((Family::BeforePivot, a(p) - 1));
        }
    }
    for p in 1..=r {
        out.push((Family::Pivot, a(p)));
    }
    out
}

/// Members of the printed families that do not stabilize the cell; this
/// happens for s_{a_p - 1} when a_p = a_{p-1} + 2.
pub fn printed_family_exceptions(g: &GrassmannElement) -> Vec<(Family, usize)> {
    let stab = stabilizer_generators(g);
    printed_families(g)
        .into_iter()
        .filter(|(_, k)| !stab.contains(k))
        .collect()
}

/// Row lengths L_i = a_i - i + 1 (zero for empty rows).
fn row_lengths(g: &GrassmannElement) -> Vec<usize> {
    (1..=g.r()).map(|i| g.row_len(i)).collect()
}

pub fn classify(k: usize, g: &GrassmannElement) -> Result<GeneratorCase> {
    if k == 0 || k >= g.n() {
        return Err(Error::IndexOutOfRange { index: k, max: g.n() - 1 });
    }
    let subset = g.subset();
    let pos = |v: usize| subset.iter().position(|&x| x == v);
    match (pos(k), pos(k + 1)) {
        (None, None) => {
            let column = (1..=k).filter(|v| !subset.contains(v)).count();
            Ok(GeneratorCase::ColumnSwap { column })
        }
        (Some(_), None) => Err(Error::NotInStabilizer(k)),
        (Some(_), Some(p)) => Ok(GeneratorCase::RowSwap { row: p + 1 }),
        (None, Some(p)) => Ok(GeneratorCase::Pivot { row: p + 1 }),
    }
}

/// The substitution X ↦ s_k · X on the open cell.
pub fn x_action(k: usize, g: &GrassmannElement) -> Result<Substitution> {
    let lens = row_lengths(g);
    let r = g.r();
    let mut sub = Substitution::identity();
    match classify(k, g)? {
        GeneratorCase::ColumnSwap { column: c } => {
            for j in 1..=r {
                if lens[j - 1] > c {
                    sub.insert(Var::x(j, c), xv(j, c + 1));
                    sub.insert(Var::x(j, c + 1), xv(j, c));
                }
            }
        }
        GeneratorCase::RowSwap { row: i } => {
            for c in 1..=lens[i - 1] {
                sub.insert(Var::x(i, c), xv(i - 1, c));
                sub.insert(Var::x(i - 1, c), xv(i, c));
            }
        }
        GeneratorCase::Pivot { row: i } => {
            let l = lens[i - 1];
            let piv = xv(i, l);
            let inv = piv.inv()?;
            sub.insert(Var::x(i, l), inv.clone());
            for c in 1..l {
                sub.insert(Var::x(i, c), xv(i, c).mul(&inv));
            }
            for j in i + 1..=r {
                let xjl = xv(j, l);
                for c in 1..l {
                    let shift = xjl.mul(&xv(i, c)).mul(&inv);
                    sub.insert(Var::x(j, c), xv(j, c).sub(&shift));
                }
                sub.insert(Var::x(j, l), xjl.neg().mul(&inv));
            }
        }
    }
    Ok(sub)
}

/// (i, j) with 1 ≤ i ≤ r-1 and 1 ≤ j < L_i.
pub fn y_indices(g: &GrassmannElement) -> Vec<(usize, usize)> {
    let lens = row_lengths(g);
    let mut out = Vec::new();
    for i in 1..g.r() {
        for j in 1..lens[i - 1] {
            out.push((i, j));
        }
    }
    out
}

/// Y_{i,j} = X_{i,L_i} X_{i+1,j} / (X_{i,j} X_{i+1,L_i}).
pub fn y_in_x(g: &GrassmannElement, i: usize, j: usize) -> Result<RationalFunction> {
    let l = g.row_len(i);
    if i == 0 || i >= g.r() || j == 0 || j >= l {
        return Err(Error::IndexOutOfRange { index: j, max: l.saturating_sub(1) });
    }
    xv(i, l).mul(&xv(i + 1, j)).div(&xv(i, j).mul(&xv(i + 1, l)))
}

/// Y ↦ its expression in the X's.
pub fn y_to_x(g: &GrassmannElement) -> Result<Substitution> {
    let mut sub = Substitution::identity();
    for (i, j) in y_indices(g) {
        sub.insert(Var::y(i, j), y_in_x(g, i, j)?);
    }
    Ok(sub)
}

/// The section X_{i,c} = Π_{m < i, c < L_m} Y_{m,c} of the quotient map; all
/// other coordinates are set to 1.
pub fn x_section(g: &GrassmannElement) -> Substitution {
    let lens = row_lengths(g);
    let mut sub = Substitution::identity();
    for i in 1..=g.r() {
        for c in 1..=lens[i - 1] {
            let mut f = RationalFunction::one();
            for m in 1..i {
                if c < lens[m - 1] {
                    f = f.mul(&yv(m, c));
                }
            }
            sub.insert(Var::x(i, c), f);
        }
    }
    sub
}

/// Rewrites a torus-invariant function of the X's in the Y's and confirms the
/// rewrite by substituting back.
pub fn reexpress_in_y(f: &RationalFunction, g: &GrassmannElement) -> Result<RationalFunction> {
    let h = f.substitute(&x_section(g))?;
    if h.vars().iter().any(|v| v.kind != crate::poly::VarKind::Y) {
        return Err(Error::ReexpressionFailed(format!("{f} left non-Y variables")));
    }
    let back = h.substitute(&y_to_x(g)?)?;
    if &back != f {
        return Err(Error::ReexpressionFailed(format!(
            "{f} is not a function of the invariants"
        )));
    }
    Ok(h)
}

/// s_k acting on a function of the Y's, computed through the X's.
pub fn y_action(k: usize, g: &GrassmannElement, f: &RationalFunction) -> Result<RationalFunction> {
    let fx = f.substitute(&y_to_x(g)?)?;
    let moved = fx.substitute(&x_action(k, g)?)?;
    reexpress_in_y(&moved, g)
}

/// Y_{m,k} with the convention Y_{m,k} = 1 when k ≥ L_m or m ∉ [1, r-1].
fn y_or_one(lens: &[usize], r: usize, m: usize, k: usize) -> RationalFunction {
    if m == 0 || m >= r || k >= lens[m - 1] {
        RationalFunction::one()
    } else {
        yv(m, k)
    }
}

/// The closed-form action of s_k on the Y's.
pub fn y_action_closed_form(k: usize, g: &GrassmannElement) -> Result<Substitution> {
    let lens = row_lengths(g);
    let r = g.r();
    let y = |m: usize, c: usize| y_or_one(&lens, r, m, c);
    let mut sub = Substitution::identity();
    match classify(k, g)? {
        GeneratorCase::ColumnSwap { column: c } => {
            for i in 1..r {
                let l = lens[i - 1];
                if l > c + 1 {
                    sub.insert(Var::y(i, c), yv(i, c + 1));
                    sub.insert(Var::y(i, c + 1), yv(i, c));
                } else if l == c + 1 {
                    let inv = yv(i, c).inv()?;
                    sub.insert(Var::y(i, c), inv.clone());
                    for j in 1..c {
                        sub.insert(Var::y(i, j), yv(i, j).mul(&inv));
                    }
                }
            }
        }
        GeneratorCase::RowSwap { row: i } => {
            if i >= 3 {
                let l2 = lens[i - 3];
                for c in 1..l2 {
                    let f = yv(i - 2, c).mul(&y(i - 1, c)).div(&y(i - 1, l2))?;
                    sub.insert(Var::y(i - 2, c), f);
                }
            }
            for c in 1..lens[i - 2] {
                sub.insert(Var::y(i - 1, c), yv(i - 1, c).inv()?);
                if i < r {
                    sub.insert(Var::y(i, c), yv(i, c).mul(&yv(i - 1, c)));
                }
            }
        }
        GeneratorCase::Pivot { row: i } => {
            let l = lens[i - 1];
            if i < r {
                for c in 1..l {
                    sub.insert(Var::y(i, c), yv(i, c).one_minus());
                }
            }
            for j in i + 1..r {
                for c in 1..l {
                    let ratio = |m: usize| y(m, c).div(&y(m, l));
                    let mut upper = RationalFunction::one();
                    for m in i..=j {
                        upper = upper.mul(&ratio(m)?);
                    }
                    let mut lower = RationalFunction::one();
                    for m in i..j {
                        lower = lower.mul(&ratio(m)?);
                    }
                    let f = upper.one_minus().div(&lower.one_minus())?.mul(&y(j, l));
                    sub.insert(Var::y(j, c), f);
                }
            }
        }
    }
    Ok(sub)
}

/// Which statement item a generator's closed form corresponds to.
pub fn statement_item(k: usize, g: &GrassmannElement) -> Result<&'static str> {
    let r = g.r();
    Ok(match classify(k, g)? {
        GeneratorCase::ColumnSwap { .. } => {
            if (g.start()..=r).any(|p| g.a(p) == k + 1) {
                "3"
            } else if k + 1 < g.a(1) || g.start() > 1 {
                "1"
            } else {
                "2"
            }
        }
        GeneratorCase::RowSwap { row } if row == r => "4(c)(i)",
        GeneratorCase::RowSwap { .. } => "4(a)",
        GeneratorCase::Pivot { row } if row == r => "4(c)(ii)",
        GeneratorCase::Pivot { .. } => "4(b)",
    })
}

/// The rank-two rules on Y_1, …, Y_{m-1} for the cell a = (m, n-1).
pub fn r2_action(k: usize, m: usize, n: usize, f: &RationalFunction) -> Result<RationalFunction> {
    r2_substitution(k, m, n).and_then(|s| f.substitute(&s))
}

pub fn r2_substitution(k: usize, m: usize, n: usize) -> Result<Substitution> {
    if m < 2 || m + 2 > n {
        return Err(Error::InvalidParameters(format!("need 2 <= m <= n-2, got m = {m}, n = {n}")));
    }
    let y = |i: usize| yv(1, i);
    let mut sub = Substitution::identity();
    if k + 2 <= m {
        sub.insert(Var::y(1, k), y(k + 1));
        sub.insert(Var::y(1, k + 1), y(k));
    } else if k + 1 == m {
        let inv = y(m - 1).inv()?;
        sub.insert(Var::y(1, m - 1), inv.clone());
        for i in 1..m - 1 {
            sub.insert(Var::y(1, i), y(i).mul(&inv));
        }
    } else if k == m {
        for i in 1..m {
            sub.insert(Var::y(1, i), y(i).one_minus());
        }
    } else if k == n - 1 && m == n - 2 {
        for i in 1..m {
            sub.insert(Var::y(1, i), y(i).inv()?);
        }
    } else if k >= m + 2 && k < n {
        // identity
    } else {
        return Err(Error::NoClosedForm { k, m, n });
    }
    Ok(sub)
}

/// s_k on functions of Z_i = (x_i - x_{m+1}) / (x_m - x_{m+1}), 1 ≤ i ≤ m-1,
/// where s_k swaps x_k and x_{k+1}.
pub fn standard_rep_action(k: usize, m: usize, f: &RationalFunction) -> Result<RationalFunction> {
    if k == 0 || k > m {
        return Err(Error::IndexOutOfRange { index: k, max: m });
    }
    let x = |i: usize| RationalFunction::var(Var::lin(i));
    let z_of = |i: usize, swap: bool| -> Result<RationalFunction> {
        let p = |j: usize| {
            if !swap {
                j
            } else if j == k {
                k + 1
            } else if j == k + 1 {
                k
            } else {
                j
            }
        };
        x(p(i)).sub(&x(p(m + 1))).div(&x(p(m)).sub(&x(p(m + 1))))
    };
    let mut pull = Substitution::identity();
    for i in 1..m {
        pull.insert(Var::z(i), z_of(i, true)?);
    }
    let moved = f.substitute(&pull)?;
    // section x_{m+1} = 0, x_m = 1, x_i = Z_i
    let mut section = Substitution::identity();
    section.insert(Var::lin(m + 1), RationalFunction::zero());
    section.insert(Var::lin(m), RationalFunction::one());
    for i in 1..m {
        section.insert(Var::lin(i), RationalFunction::var(Var::z(i)));
    }
    let h = moved.substitute(&section)?;
    // confirm h is the pull-back written in the Z's
    let mut back = Substitution::identity();
    for i in 1..m {
        back.insert(Var::z(i), z_of(i, false)?);
    }
    if h.substitute(&back)? != moved {
        return Err(Error::ReexpressionFailed(format!("{moved} is not a function of the Z's")));
    }
    Ok(h)
}

/// s_k on functions of Y_i = t_i / t_m (the characters of α_i + … + α_{m-1}),
/// where s_k swaps t_k and t_{k+1}, 1 ≤ k ≤ m-1.
pub fn torus_model_action(k: usize, m: usize, f: &RationalFunction) -> Result<RationalFunction> {
    if k == 0 || k >= m {
        return Err(Error::IndexOutOfRange { index: k, max: m - 1 });
    }
    let t = |i: usize| RationalFunction::var(Var::t(i));
    let swap = |j: usize| if j == k { k + 1 } else if j == k + 1 { k } else { j };
    let mut pull = Substitution::identity();
    for i in 1..m {
        pull.insert(Var::y(1, i), t(swap(i)).div(&t(swap(m)))?);
    }
    let moved = f.substitute(&pull)?;
    let mut section = Substitution::identity();
    section.insert(Var::t(m), RationalFunction::one());
    for i in 1..m {
        section.insert(Var::t(i), yv(1, i));
    }
    moved.substitute(&section)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivarianceEntry {
    pub k: usize,
    pub i: usize,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

/// Compares the rank-two rules with the standard representation for every
/// generator s_1, …, s_m and every variable.
pub fn check_equivariance(m: usize) -> Result<Vec<EquivarianceEntry>> {
    check_equivariance_against(m, &|k, f| r2_action(k, m, m + 2, f))
}

pub fn check_equivariance_against(
    m: usize,
    rule: &dyn Fn(usize, &RationalFunction) -> Result<RationalFunction>,
) -> Result<Vec<EquivarianceEntry>> {
    if m < 2 {
        return Err(Error::InvalidParameters(format!("need m >= 2, got {m}")));
    }
    let mut rename = Substitution::identity();
    for i in 1..m {
        rename.insert(Var::y(1, i), RationalFunction::var(Var::z(i)));
    }
    let mut out = Vec::new();
    for k in 1..=m {
        for i in 1..m {
            let got = rule(k, &yv(1, i))?.substitute(&rename)?;
            let expected = standard_rep_action(k, m, &RationalFunction::var(Var::z(i)))?;
            out.push(EquivarianceEntry {
                k,
                i,
                pass: got == expected,
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }
    Ok(out)
}

/// The coordinate variables X_{i,c} of the cell.
pub fn x_variables(g: &GrassmannElement) -> BTreeSet<Var> {
    let mut out = BTreeSet::new();
    for i in 1..=g.r() {
        for c in 1..=g.row_len(i) {
            out.insert(Var::x(i, c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::has_semistable;

    fn g(n: usize, a: &[usize]) -> GrassmannElement {
        GrassmannElement::new(n, a.len(), a.to_vec()).unwrap()
    }

    fn semistable_cells(max_n: usize) -> Vec<GrassmannElement> {
        let mut out = Vec::new();
        for n in 4..=max_n {
            for r in 2..=n - 2 {
                for x in GrassmannElement::all(n, r).unwrap() {
                    if has_semistable(&x).unwrap() {
                        out.push(x);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn stabilizer_examples() {
        let x = g(5, &[2, 4]);
        assert_eq!(stabilizer_generators(&x), [1, 2, 4].into());
        let printed: BTreeSet<usize> = printed_families(&x).into_iter().map(|p| p.1).collect();
        assert_eq!(printed, [1, 2, 3, 4].into());
        assert_eq!(printed_family_exceptions(&x), vec![(Family::BeforePivot, 3)]);
        assert!(matches!(x_action(3, &x), Err(Error::NotInStabilizer(3))));
        let top = g(5, &[3, 4]);
        assert_eq!(stabilizer_generators(&top), [1, 2, 3, 4].into());
    }

    #[test]
    fn printed_families_match_when_gaps_are_wide() {
        for x in semistable_cells(7) {
            let stab = stabilizer_generators(&x);
            let printed: BTreeSet<usize> =
                printed_families(&x).into_iter().map(|p| p.1).collect();
            assert!(stab.is_subset(&printed), "{x:?}");
            let tight = (2..=x.r()).any(|p| x.a(p) == x.a(p - 1) + 2);
            assert_eq!(stab == printed, !tight, "{x:?}");
        }
    }

    #[test]
    fn column_swap_is_pure_swap() {
        let x = g(6, &[3, 5]);
        let s = x_action(1, &x).unwrap();
        assert_eq!(s.get(Var::x(1, 1)), xv(1, 2));
        assert_eq!(s.get(Var::x(2, 2)), xv(2, 1));
        assert_eq!(s.get(Var::x(1, 3)), xv(1, 3));
    }

    #[test]
    fn pivot_inverts_last_column() {
        let x = g(5, &[2, 4]);
        let s = x_action(2, &x).unwrap();
        assert_eq!(s.get(Var::x(1, 2)), xv(1, 2).inv().unwrap());
        let y = y_action(2, &x, &yv(1, 1)).unwrap();
        assert_eq!(y, yv(1, 1).one_minus());
    }

    #[test]
    fn involutions_and_closed_forms() {
        for x in semistable_cells(6) {
            for k in stabilizer_generators(&x) {
                let s = x_action(k, &x).unwrap();
                assert!(s.then(&s).unwrap().is_identity(), "{x:?} s_{k}");
                let closed = y_action_closed_form(k, &x).unwrap();
                for (i, j) in y_indices(&x) {
                    let got = y_action(k, &x, &yv(i, j)).unwrap();
                    assert_eq!(got, closed.get(Var::y(i, j)), "{x:?} s_{k} Y_{i},{j}");
                }
                assert!(closed.then(&closed).unwrap().is_identity(), "{x:?} s_{k}");
            }
        }
    }

    #[test]
    fn reexpression_rejects_non_invariants() {
        let x = g(5, &[2, 4]);
        assert!(reexpress_in_y(&xv(1, 1), &x).is_err());
        let y = y_in_x(&x, 1, 1).unwrap();
        assert_eq!(reexpress_in_y(&y, &x).unwrap(), yv(1, 1));
    }

    #[test]
    fn r2_examples() {
        assert_eq!(r2_action(2, 2, 5, &yv(1, 1)).unwrap(), yv(1, 1).one_minus());
        assert_eq!(r2_action(2, 3, 6, &yv(1, 2)).unwrap(), yv(1, 2).inv().unwrap());
        assert_eq!(
            r2_action(2, 3, 6, &yv(1, 1)).unwrap(),
            yv(1, 1).div(&yv(1, 2)).unwrap()
        );
        assert!(matches!(r2_action(4, 3, 7, &yv(1, 1)), Err(Error::NoClosedForm { .. })));
        for (m, n) in [(2, 5), (3, 5), (3, 7), (4, 6)] {
            for k in 1..n {
                let Ok(s) = r2_substitution(k, m, n) else { continue };
                assert!(s.then(&s).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn r2_rules_agree_with_cell_action() {
        for n in 4..=7 {
            for m in (n - 1) / 2..=n - 2 {
                if m < 2 {
                    continue;
                }
                let x = g(n, &[m, n - 1]);
                for k in stabilizer_generators(&x) {
                    let s = r2_substitution(k, m, n).unwrap();
                    for i in 1..m {
                        assert_eq!(y_action(k, &x, &yv(1, i)).unwrap(), s.get(Var::y(1, i)));
                    }
                }
            }
        }
    }

    #[test]
    fn standard_rep_examples() {
        let z = |i| RationalFunction::var(Var::z(i));
        assert_eq!(standard_rep_action(3, 3, &z(1)).unwrap(), z(1).one_minus());
        assert_eq!(standard_rep_action(1, 3, &z(1)).unwrap(), z(2));
        let f = z(1).add(&z(2).mul(&z(1)));
        let once = standard_rep_action(2, 3, &f).unwrap();
        assert_eq!(standard_rep_action(2, 3, &once).unwrap(), f);
    }

    #[test]
    fn equivariance_and_negative_control() {
        for m in 2..=4 {
            assert!(check_equivariance(m).unwrap().iter().all(|e| e.pass));
        }
        let perturbed = |k: usize, f: &RationalFunction| {
            if k == 3 {
                let mut s = Substitution::identity();
                for i in 1..3 {
                    s.insert(Var::y(1, i), yv(1, i).add(&RationalFunction::one()));
                }
                f.substitute(&s)
            } else {
                r2_action(k, 3, 5, f)
            }
        };
        let rep = check_equivariance_against(3, &perturbed).unwrap();
        assert!(rep.iter().any(|e| !e.pass));
    }

    #[test]
    fn torus_model_matches() {
        for m in 2..=4 {
            for k in 1..m {
                for i in 1..m {
                    let a = torus_model_action(k, m, &yv(1, i)).unwrap();
                    let b = r2_action(k, m, m + 2, &yv(1, i)).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }
}
