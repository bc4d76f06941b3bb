//! Sparse multivariate polynomials over ℚ with exact division and gcd.

mod ratfun;

pub use ratfun::{RationalFunction, Substitution};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    /// Cell coordinate X_{i,j}.
    X,
    /// Invariant Y_{i,j}.
    Y,
    /// Standard-representation invariant Z_i.
    Z,
    /// Linear coordinate x_i.
    Lin,
    /// Torus character t_i.
    T,
    /// Flag coordinate x_{[j,k]}.
    Root,
}

/// A named variable. Variables sort by kind, then (i, j) row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub kind: VarKind,
    pub i: usize,
    pub j: usize,
}

impl Var {
    pub fn x(i: usize, j: usize) -> Self {
        Var { kind: VarKind::X, i, j }
    }
    pub fn y(i: usize, j: usize) -> Self {
        Var { kind: VarKind::Y, i, j }
    }
    pub fn z(i: usize) -> Self {
        Var { kind: VarKind::Z, i, j: 0 }
    }
    pub fn lin(i: usize) -> Self {
        Var { kind: VarKind::Lin, i, j: 0 }
    }
    pub fn t(i: usize) -> Self {
        Var { kind: VarKind::T, i, j: 0 }
    }
    pub fn root(j: usize, k: usize) -> Self {
        Var { kind: VarKind::Root, i: j, j: k }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::X => write!(f, "X_{{{},{}}}", self.i, self.j),
            VarKind::Y => write!(f, "Y_{{{},{}}}", self.i, self.j),
            VarKind::Z => write!(f, "Z_{}", self.i),
            VarKind::Lin => write!(f, "x_{}", self.i),
            VarKind::T => write!(f, "t_{}", self.i),
            VarKind::Root => write!(f, "X_{{[{},{}]}}", self.i, self.j),
        }
    }
}

/// A power product, kept sorted by variable with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Self {
        pairs.retain(|p| p.1 > 0);
        pairs.sort();
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|p| p.0.cmp(&v))
            .map_or(0, |k| self.0[k].1)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// self / other if other divides self.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((v, e - f));
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(v, e)| {
                    let f = other.exponent(v);
                    (f > 0).then(|| (v, e.min(f)))
                })
                .collect(),
        )
    }

    /// Removes `v` entirely, returning its exponent.
    fn split(&self, v: Var) -> (u32, Monomial) {
        let e = self.exponent(v);
        (e, Monomial(self.0.iter().filter(|p| p.0 != v).copied().collect()))
    }
}

/// Graded order, ties broken lexicographically with earlier variables heavier.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match self.degree().cmp(&other.degree()) {
            Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(&other.0) {
            if a.0 != b.0 {
                return if a.0 < b.0 { Greater } else { Less };
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Q>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            let mut parts = Vec::new();
            if !a.is_one() || m.is_one() {
                parts.push(if a.is_integer() {
                    a.numer().to_string()
                } else {
                    rational::to_string(&a)
                });
            }
            for &(v, e) in m.pairs() {
                parts.push(if e == 1 { v.to_string() } else { format!("{v}^{e}") });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Q::one())
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Q> {
        if self.is_zero() {
            return Some(Q::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Q {
        self.leading().map_or_else(Q::zero, |t| t.1.clone())
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(&(Q::one() / c)),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|p| p.0))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Coefficients of v^0, v^1, … as polynomials in the remaining variables.
    pub fn coefficients_in(&self, v: Var) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    pub fn from_coefficients(v: Var, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let m = Monomial::from_pairs(vec![(v, e as u32)]);
            for (k, x) in &c.terms {
                out.add_term(k.mul(&m), x.clone());
            }
        }
        out
    }

    /// The gcd of all monomials occurring.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |g, m| g.gcd(m))
    }

    pub fn div_monomial(&self, m: &Monomial) -> Option<Poly> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            terms.insert(k.div(m)?, c.clone());
        }
        Some(Poly { terms })
    }

    /// Exact quotient self / d, or None if d does not divide self.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.leading()?;
        if d.is_monomial() {
            return self.div_monomial(lm).map(|p| p.scale(&(Q::one() / lc)));
        }
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(&lm)?;
            let qc = c / &lc;
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    pub fn substitute_value(&self, v: Var, value: &Q) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            let f = num_traits::pow(value.clone(), e as usize);
            out.add_term(rest, c * f);
        }
        out
    }

    pub fn eval(&self, point: &BTreeMap<Var, Q>) -> Option<Q> {
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                t *= num_traits::pow(point.get(&v)?.clone(), e as usize);
            }
            total += t;
        }
        Some(total)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

/// Pseudo-remainder of a by b as polynomials in v.
fn pseudo_remainder(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.degree_in(v);
    let bc = b.coefficients_in(v);
    let lb = &bc[db as usize];
    let mut r = a.clone();
    loop {
        let dr = r.degree_in(v);
        if r.is_zero() || dr < db {
            return r;
        }
        let lr = r.coefficients_in(v).swap_remove(dr as usize);
        let shift = Poly::term(Monomial::from_pairs(vec![(v, dr - db)]), Q::one());
        r = &(&r * lb) - &(&(&lr * &shift) * b);
    }
}

/// gcd of the coefficients of p viewed as a polynomial in v.
fn content_in(p: &Poly, v: Var) -> Poly {
    let mut g = Poly::zero();
    for c in p.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

/// Monic greatest common divisor.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.is_monomial() || b.is_monomial() {
        let g = a.monomial_content().gcd(&b.monomial_content());
        return Poly::term(g, Q::one());
    }
    // strip common monomial factors first; they are cheap
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    if !ma.is_one() || !mb.is_one() {
        let a2 = a.div_monomial(&ma).unwrap();
        let b2 = b.div_monomial(&mb).unwrap();
        let g = gcd(&a2, &b2);
        return g.mul_monomial(&mg, &Q::one()).monic();
    }
    if a.div_exact(b).is_some() {
        return b.monic();
    }
    if b.div_exact(a).is_some() {
        return a.monic();
    }
    let va = a.vars();
    let vb = b.vars();
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        return gcd(&content_in(a, v), b);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        return gcd(a, &content_in(b, v));
    }
    // main variable: the one of lowest combined degree keeps the PRS short
    let v = *va
        .iter()
        .min_by_key(|&&v| a.degree_in(v) + b.degree_in(v))
        .unwrap();
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).unwrap();
    let mut q = b.div_exact(&cb).unwrap();
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_remainder(&p, &q, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            q = Poly::one();
            break;
        }
        let cr = content_in(&r, v);
        p = q;
        q = r.div_exact(&cr).unwrap();
    }
    let cq = content_in(&q, v);
    let prim = q.div_exact(&cq).unwrap();
    (&c * &prim).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn x(i: usize) -> Poly {
        Poly::var(Var::lin(i))
    }

    #[test]
    fn monomial_order_is_graded() {
        let a = Monomial::from_pairs(vec![(Var::lin(1), 1)]);
        let b = Monomial::from_pairs(vec![(Var::lin(2), 2)]);
        let c = Monomial::from_pairs(vec![(Var::lin(2), 1)]);
        assert!(b > a);
        assert!(a > c);
        assert!(Monomial::one() < c);
    }

    #[test]
    fn arithmetic_and_division() {
        let p = &(&x(1) + &x(2)) * &(&x(1) - &x(2));
        let expect = &(&x(1) * &x(1)) - &(&x(2) * &x(2));
        assert_eq!(p, expect);
        assert_eq!(p.div_exact(&(&x(1) + &x(2))).unwrap(), &x(1) - &x(2));
        assert!(p.div_exact(&(&x(1) + &x(3))).is_none());
        assert_eq!((&x(1) + &Poly::one()).pow(3).num_terms(), 4);
    }

    #[test]
    fn gcd_examples() {
        let f = &x(1) + &x(2);
        let g = &x(1) - &Poly::constant(q(3));
        let h = &(&x(2) * &x(3)) + &Poly::one();
        let a = &(&f * &g) * &x(3);
        let b = &(&f * &h) * &(&x(3) * &x(3));
        assert_eq!(gcd(&a, &b), (&f * &x(3)).monic());
        assert_eq!(gcd(&g, &h), Poly::one());
        assert_eq!(gcd(&Poly::zero(), &g.scale(&q(5))), g);
        let sq = &f * &f;
        assert_eq!(gcd(&(&sq * &g), &(&sq * &h)), sq.monic());
    }

    #[test]
    fn coefficient_split_round_trip() {
        let p = &(&x(1) * &x(2)).pow(2) + &(&x(1) + &Poly::constant(q(7)));
        let cs = p.coefficients_in(Var::lin(1));
        assert_eq!(cs.len(), 3);
        assert_eq!(Poly::from_coefficients(Var::lin(1), &cs), p);
    }

    #[test]
    fn display() {
        let p = &x(1).scale(&q(2)) - &Poly::one();
        assert_eq!(p.to_string(), "2*x_1 - 1");
        assert_eq!(Poly::var(Var::y(1, 2)).to_string(), "Y_{1,2}");
    }
}
