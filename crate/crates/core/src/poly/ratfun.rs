use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use super::{gcd, Monomial, Poly, Var};
use crate::error::{Error, Result};
use crate::rational::Q;

/// num / den in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: Poly::one() };
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = Q::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        Poly::zero().into()
    }

    pub fn one() -> Self {
        Poly::one().into()
    }

    pub fn constant(c: Q) -> Self {
        Poly::constant(c).into()
    }

    pub fn var(v: Var) -> Self {
        Poly::var(v).into()
    }

    /// Π v^e with integer exponents.
    pub fn laurent(pairs: &[(Var, i64)]) -> Self {
        let num = Monomial::from_pairs(
            pairs.iter().filter(|p| p.1 > 0).map(|&(v, e)| (v, e as u32)).collect(),
        );
        let den = Monomial::from_pairs(
            pairs.iter().filter(|p| p.1 < 0).map(|&(v, e)| (v, (-e) as u32)).collect(),
        );
        Self::reduce(Poly::term(num, Q::one()), Poly::term(den, Q::one()))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduce(&self.num + &other.num, self.den.clone());
        }
        Self::reduce(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduce(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(RationalFunction { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone())
    }

    /// 1 - self.
    pub fn one_minus(&self) -> Self {
        Self::one().sub(self)
    }

    pub fn eval(&self, point: &BTreeMap<Var, Q>) -> Result<Q> {
        let d = self
            .den
            .eval(point)
            .ok_or_else(|| Error::InvalidParameters("point misses a variable".into()))?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self
            .num
            .eval(point)
            .ok_or_else(|| Error::InvalidParameters("point misses a variable".into()))?;
        Ok(n / d)
    }

    /// Replaces each variable present in `sub` by its image.
    pub fn substitute(&self, sub: &Substitution) -> Result<Self> {
        let n = sub.apply_poly(&self.num)?;
        let d = sub.apply_poly(&self.den)?;
        n.div(&d)
    }

    /// Sets variables to constants, leaving the others symbolic.
    pub fn specialize(&self, values: &BTreeMap<Var, Q>) -> Result<Self> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (v, x) in values {
            num = num.substitute_value(*v, x);
            den = den.substitute_value(*v, x);
        }
        Self::new(num, den)
    }
}

/// A map from variables to rational functions; variables not in the map are
/// left unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Substitution {
    pub map: BTreeMap<Var, RationalFunction>,
}

impl Substitution {
    pub fn identity() -> Self {
        Substitution::default()
    }

    pub fn insert(&mut self, v: Var, f: RationalFunction) {
        self.map.insert(v, f);
    }

    pub fn get(&self, v: Var) -> RationalFunction {
        self.map.get(&v).cloned().unwrap_or_else(|| RationalFunction::var(v))
    }

    /// Drops entries of the form v ↦ v.
    pub fn normalized(&self) -> Self {
        Substitution {
            map: self
                .map
                .iter()
                .filter(|(v, f)| **f != RationalFunction::var(**v))
                .map(|(v, f)| (*v, f.clone()))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.normalized().map.is_empty()
    }

    /// The substitution f ↦ other(self(f)): first self, then other.
    pub fn then(&self, other: &Substitution) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (v, f) in &self.map {
            map.insert(*v, f.substitute(other)?);
        }
        for (v, f) in &other.map {
            map.entry(*v).or_insert_with(|| f.clone());
        }
        Ok(Substitution { map })
    }

    fn apply_poly(&self, p: &Poly) -> Result<RationalFunction> {
        let vars: Vec<Var> = p.vars().into_iter().filter(|v| self.map.contains_key(v)).collect();
        if vars.is_empty() {
            return Ok(p.clone().into());
        }
        // over the common denominator Π d_v^{deg_v p}
        let mut num_pows: BTreeMap<Var, Vec<Poly>> = BTreeMap::new();
        let mut den_pows: BTreeMap<Var, Vec<Poly>> = BTreeMap::new();
        let mut den_total = Poly::one();
        for &v in &vars {
            let f = &self.map[&v];
            let d = p.degree_in(v) as usize;
            let mut np = vec![Poly::one()];
            let mut dp = vec![Poly::one()];
            for k in 1..=d {
                np.push(&np[k - 1] * f.numerator());
                dp.push(&dp[k - 1] * f.denominator());
            }
            den_total = &den_total * &dp[d];
            num_pows.insert(v, np);
            den_pows.insert(v, dp);
        }
        let mut num_total = Poly::zero();
        for (m, c) in p.terms() {
            let mut rest = Vec::new();
            let mut t = Poly::one();
            for &(v, e) in m.pairs() {
                match num_pows.get(&v) {
                    Some(np) => {
                        let dp = &den_pows[&v];
                        let top = dp.len() - 1;
                        t = &t * &(&np[e as usize] * &dp[top - e as usize]);
                    }
                    None => rest.push((v, e)),
                }
            }
            for &v in &vars {
                if m.exponent(v) == 0 {
                    let dp = &den_pows[&v];
                    t = &t * &dp[dp.len() - 1];
                }
            }
            num_total = &num_total + &t.mul_monomial(&Monomial::from_pairs(rest), c);
        }
        RationalFunction::new(num_total, den_total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn v(i: usize) -> RationalFunction {
        RationalFunction::var(Var::lin(i))
    }

    #[test]
    fn canonical_forms() {
        let a = v(1).div(&v(2)).unwrap();
        let b = v(1).mul(&v(3)).div(&v(2).mul(&v(3))).unwrap();
        assert_eq!(a, b);
        let s = v(1).add(&v(2));
        let t = s.mul(&v(1).sub(&v(2))).div(&s.scale(&q(3))).unwrap();
        assert_eq!(t, v(1).sub(&v(2)).scale(&(Q::one() / q(3))));
        assert_eq!(v(1).sub(&v(1)), RationalFunction::zero());
        assert!(RationalFunction::one().div(&RationalFunction::zero()).is_err());
    }

    #[test]
    fn substitution_and_composition() {
        // x1 -> 1/x1, x2 -> x2/x1
        let mut s = Substitution::identity();
        s.insert(Var::lin(1), v(1).inv().unwrap());
        s.insert(Var::lin(2), v(2).div(&v(1)).unwrap());
        let twice = s.then(&s).unwrap();
        assert!(twice.is_identity(), "{twice:?}");
        let f = v(1).add(&v(2)).div(&v(1).sub(&RationalFunction::one())).unwrap();
        let g = f.substitute(&s).unwrap().substitute(&s).unwrap();
        assert_eq!(f, g);
        let one_minus = {
            let mut m = Substitution::identity();
            m.insert(Var::lin(1), v(1).one_minus());
            m
        };
        assert!(one_minus.then(&one_minus).unwrap().is_identity());
        assert_eq!(
            v(1).substitute(&one_minus.then(&s).unwrap()).unwrap(),
            v(1).inv().unwrap().one_minus()
        );
    }

    #[test]
    fn evaluation_matches_canonical_form() {
        let f = v(1).pow(2).unwrap().sub(&v(2).pow(2).unwrap()).div(&v(1).sub(&v(2))).unwrap();
        assert_eq!(f, v(1).add(&v(2)));
        let point: BTreeMap<Var, Q> = [(Var::lin(1), q(3)), (Var::lin(2), q(-7))].into();
        assert_eq!(f.eval(&point).unwrap(), q(-4));
        assert_eq!(RationalFunction::laurent(&[(Var::lin(1), -2)]).eval(&point).unwrap(), Q::new(1.into(), 9.into()));
    }
}
