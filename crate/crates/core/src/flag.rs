//! The semistable locus of the full flag variety of GL_{n+1} for a regular
//! character and its torus quotient onto GL_n/B_n.
//!
//! Positive roots are intervals [j,k] ↔ α_j + … + α_k, 1 ≤ j ≤ k ≤ n.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::flagpoint::{inversion_roots, FlagPoint, Root};
use crate::poly::{RationalFunction, Substitution, Var, VarKind};
use crate::rational::{q, Q};
use crate::weights::{act, Weight};
use crate::weyl::Permutation;

/// χ = Σ m_i α_i with 0 < m_1 < … < m_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularDominantChar {
    m: Vec<i64>,
}

impl RegularDominantChar {
    pub fn new(m: Vec<i64>) -> Result<Self> {
        if m.is_empty() || m[0] <= 0 || m.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameters(format!(
                "coefficients must be positive and strictly increasing, got {m:?}"
            )));
        }
        Ok(RegularDominantChar { m })
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.m
    }

    pub fn weight(&self) -> Weight {
        Weight::from_ints(&self.m)
    }
}

/// s_1 s_2 ⋯ s_n in S_{n+1}.
pub fn coxeter_prefix(n: usize) -> Permutation {
    Permutation::from_word(n + 1, &(1..=n).collect::<Vec<_>>()).expect("valid word")
}

/// W_I for I = {α_1, …, α_{n-1}}: the permutations of S_{n+1} fixing n+1.
pub fn parabolic_w_i(n: usize) -> Vec<Permutation> {
    Permutation::all(n + 1).into_iter().filter(|p| p.apply(n + 1) == n + 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeElements {
    /// {w : w(χ) ≤ 0}.
    pub by_weight: BTreeSet<Permutation>,
    /// {s_1⋯s_n τ : τ ∈ W_I}.
    pub predicted: BTreeSet<Permutation>,
}

impl NegativeElements {
    pub fn agree(&self) -> bool {
        self.by_weight == self.predicted
    }
}

pub fn negative_elements(chi: &RegularDominantChar) -> Result<NegativeElements> {
    let n = chi.n();
    let wt = chi.weight();
    let mut by_weight = BTreeSet::new();
    for w in Permutation::all(n + 1) {
        if act(&w, &wt)?.is_nonpositive() {
            by_weight.insert(w);
        }
    }
    let c = coxeter_prefix(n);
    let predicted = parabolic_w_i(n)
        .iter()
        .map(|t| c.compose(t))
        .collect::<Result<_>>()?;
    Ok(NegativeElements { by_weight, predicted })
}

/// τ with w = s_1⋯s_n τ and τ ∈ W_I, if any.
pub fn negative_form_tail(w: &Permutation) -> Result<Permutation> {
    let n = w.n() - 1;
    let tau = coxeter_prefix(n).inverse().compose(w)?;
    if tau.apply(n + 1) != n + 1 {
        return Err(Error::NotNegativeForm);
    }
    Ok(tau)
}

/// [1, j-1] for β = [j, k] with j ≥ 2.
pub fn beta_prime(beta: Root, n: usize) -> Result<Root> {
    let (j, k) = beta;
    if j < 1 || j > k || k > n {
        return Err(Error::InvalidParameters(format!("[{j},{k}] is not a positive root for n = {n}")));
    }
    if j == 1 {
        return Err(Error::RootAboveAlphaOne(format!("[{j},{k}]")));
    }
    Ok((1, j - 1))
}

/// β + γ as an interval, when it is a root.
pub fn root_sum(a: Root, b: Root) -> Option<Root> {
    if a.1 + 1 == b.0 {
        Some((a.0, b.1))
    } else if b.1 + 1 == a.0 {
        Some((b.0, a.1))
    } else {
        None
    }
}

/// All positive roots γ ≥ α_1 with β + γ a root, found by scanning.
pub fn beta_prime_candidates(beta: Root, n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for j in 1..=n {
        for k in j..=n {
            if j == 1 && root_sum(beta, (j, k)).is_some() {
                out.push((j, k));
            }
        }
    }
    out
}

/// s_n ⋯ s_1 maps [j,k] (j ≥ 2) to [j-1, k-1].
pub fn shift_down(beta: Root) -> Root {
    (beta.0 - 1, beta.1 - 1)
}

/// One coordinate of π_τ: Y_label = -X_β X_β' / X_{β+β'}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCoordinate {
    pub label: Root,
    pub beta: Root,
    pub beta_prime: Root,
    pub expr: RationalFunction,
}

fn xr(b: Root) -> Var {
    Var::root(b.0, b.1)
}

/// Sign in front of X_β X_β' / X_{β+β'}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PiSign {
    /// -X_β X_β' / X_{β+β'}, as in the definition of π_τ.
    Minus,
    /// X_β X_β' / X_{β+β'}, as in the case computations of the compatibility step.
    Plus,
}

impl PiSign {
    pub fn name(&self) -> &'static str {
        match self {
            PiSign::Minus => "minus",
            PiSign::Plus => "plus",
        }
    }
}

/// The coordinates of π_τ on the cell of w = s_1⋯s_n τ, τ ∈ S_{n+1} fixing n+1.
pub fn pi_tau(tau: &Permutation) -> Result<Vec<QuotientCoordinate>> {
    pi_tau_with(tau, PiSign::Minus)
}

pub fn pi_tau_with(tau: &Permutation, sign: PiSign) -> Result<Vec<QuotientCoordinate>> {
    let n = tau.n() - 1;
    if tau.apply(n + 1) != n + 1 {
        return Err(Error::InvalidParameters(format!("{tau} is not in W_I")));
    }
    let w = coxeter_prefix(n).compose(tau)?;
    let mut out = Vec::new();
    for beta in inversion_roots(&w) {
        if beta.0 == 1 {
            continue;
        }
        let bp = beta_prime(beta, n)?;
        let sum = (1, beta.1);
        let mut expr = RationalFunction::laurent(&[(xr(beta), 1), (xr(bp), 1), (xr(sum), -1)]);
        if sign == PiSign::Minus {
            expr = expr.neg();
        }
        out.push(QuotientCoordinate { label: shift_down(beta), beta, beta_prime: bp, expr });
    }
    Ok(out)
}

/// Σ e·[j,k] over the factors of a Laurent monomial in the X_{[j,k]}.
pub fn root_monomial_weight(f: &RationalFunction, n: usize) -> Result<Weight> {
    let mut total = Weight::zero(n);
    for (p, sign) in [(f.numerator(), 1i64), (f.denominator(), -1)] {
        if !p.is_monomial() {
            return Err(Error::InvalidParameters(format!("{f} is not a Laurent monomial")));
        }
        let (m, _) = p.leading().expect("nonzero");
        for &(v, e) in m.pairs() {
            if v.kind != VarKind::Root {
                return Err(Error::InvalidParameters(format!("unexpected variable {v}")));
            }
            let part = Weight::interval(n, v.i, v.j).scale(&q(sign * e as i64));
            total = &total + &part;
        }
    }
    Ok(total)
}

/// π_τ evaluated at a point of V⁰_τ, as a point of GL_n/B_n.
pub fn pi_tau_point(x: &FlagPoint) -> Result<FlagPoint> {
    pi_tau_point_with(x, PiSign::Minus)
}

pub fn pi_tau_point_with(x: &FlagPoint, sign: PiSign) -> Result<FlagPoint> {
    let tau = negative_form_tail(&x.w)?;
    let n = tau.n() - 1;
    if !semistable_flag_support(&x.w, &x.coords)? {
        return Err(Error::HypothesisViolated("point is outside V0".into()));
    }
    let mut coords = BTreeMap::new();
    for c in pi_tau(&tau)? {
        let v = x.get(c.beta) * x.get(c.beta_prime) / x.get((1, c.beta.1));
        coords.insert(c.label, if sign == PiSign::Minus { -v } else { v });
    }
    let small = Permutation::from_one_line(&tau.one_line()[..n])?;
    Ok(FlagPoint { w: small, coords })
}

/// Membership in V⁰_τ: every X_{[1,k]} is nonzero.
pub fn semistable_flag_support(w: &Permutation, coords: &BTreeMap<Root, Q>) -> Result<bool> {
    negative_form_tail(w)?;
    let n = w.n() - 1;
    Ok((1..=n).all(|k| coords.get(&(1, k)).is_some_and(|v| !v.is_zero())))
}

/// Y_α ↦ -(1 + Y_α) for α = [1,k], identity otherwise; Y_{[j,k]} is Var::y(j,k).
pub fn s1_y_action(f: &RationalFunction) -> Result<RationalFunction> {
    let mut sub = Substitution::identity();
    for v in f.vars() {
        if v.kind == VarKind::Y && v.i == 1 {
            sub.insert(v, RationalFunction::var(v).add(&RationalFunction::one()).neg());
        }
    }
    f.substitute(&sub)
}

/// The torus element t with (α_1+…+α_i)(t) = X_{[1,i]}(x2)/X_{[1,i]}(x1), as
/// the values c_i of those characters, and whether t·x1 = x2.
pub fn torus_translate(x1: &FlagPoint, x2: &FlagPoint) -> (Vec<Q>, bool) {
    let n = x1.w.n() - 1;
    let mut c = vec![Q::one()];
    for i in 1..=n {
        c.push(x2.get((1, i)) / x1.get((1, i)));
    }
    // [j,k](t) = c_k / c_{j-1}
    let same = x1.w == x2.w
        && inversion_roots(&x1.w)
            .into_iter()
            .all(|(j, k)| x1.get((j, k)) * &c[k] / &c[j - 1] == x2.get((j, k)));
    (c, same)
}

/// Draws x1 ∈ V⁰_τ, builds x2 with the same π_τ image from fresh values of
/// the X_{[1,k]}, and checks that the torus element solved from those values
/// carries x1 to x2.
pub fn injectivity_trials(tau: &Permutation, trials: usize, seed: u64) -> Result<Tally> {
    use crate::oracle::{nonzero, sampler};
    let n = tau.n() - 1;
    let w = coxeter_prefix(n).compose(tau)?;
    let mut rng = sampler(seed);
    let mut tally = Tally::default();
    for _ in 0..trials {
        let x1 = FlagPoint::random(&w, &mut rng);
        let mut coords = BTreeMap::new();
        for k in 1..=n {
            coords.insert((1, k), q(nonzero(&mut rng)));
        }
        // X_β(x2) = Y_β(x1) X_{β+β'}(x2) / X_{β'}(x2)
        for c in pi_tau(tau)? {
            let y1 = x1.get(c.beta) * x1.get(c.beta_prime) / x1.get((1, c.beta.1));
            let v = y1 * &coords[&(1, c.beta.1)] / &coords[&c.beta_prime];
            coords.insert(c.beta, v);
        }
        let x2 = FlagPoint { w: w.clone(), coords };
        let same_image = pi_tau_point(&x1)? == pi_tau_point(&x2)?;
        tally.record(same_image && torus_translate(&x1, &x2).1);
    }
    Ok(tally)
}

/// Which Weyl generator acts on GL_n/B_n when s_i acts upstairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Reading {
    /// s_i upstairs against s_{i-1} downstairs, i = 2..n.
    Shifted,
    /// s_i on both sides, i = 2..n-1.
    Unshifted,
}

impl Reading {
    pub fn name(&self) -> &'static str {
        match self {
            Reading::Shifted => "shifted",
            Reading::Unshifted => "unshifted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootShape {
    /// α = [k, d], k < d.
    EndsAt,
    /// α = [d, k], k > d.
    StartsAt,
    /// α = α_d.
    Simple,
    Generic,
}

impl RootShape {
    pub fn name(&self) -> &'static str {
        match self {
            RootShape::EndsAt => "ends at d",
            RootShape::StartsAt => "starts at d",
            RootShape::Simple => "simple",
            RootShape::Generic => "generic",
        }
    }
}

/// Classifies α relative to the downstairs generator s_d.
pub fn root_shape(alpha: Root, d: usize) -> RootShape {
    if alpha == (d, d) {
        RootShape::Simple
    } else if alpha.1 == d {
        RootShape::EndsAt
    } else if alpha.0 == d {
        RootShape::StartsAt
    } else {
        RootShape::Generic
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub total: usize,
    pub agree: usize,
    pub undefined: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.total += 1;
        self.agree += ok as usize;
    }

    pub fn all_agree(&self) -> bool {
        self.agree == self.total
    }
}

/// s_i on a root interval, None when the image is negative.
pub fn reflect_root(i: usize, r: Root) -> Option<Root> {
    let s = |p: usize| {
        if p == i {
            i + 1
        } else if p == i + 1 {
            i
        } else {
            p
        }
    };
    let (a, b) = (s(r.0), s(r.1 + 1));
    (a < b).then(|| (a, b - 1))
}

fn is_positive_under(w_inv: &Permutation, r: Root) -> bool {
    w_inv.apply(r.0) < w_inv.apply(r.1 + 1)
}

fn all_roots(n: usize) -> Vec<Root> {
    (1..=n).flat_map(|j| (j..=n).map(move |k| (j, k))).collect()
}

fn point_from(w: Permutation, values: BTreeMap<Root, Q>) -> FlagPoint {
    let allowed = inversion_roots(&w);
    let coords = values.into_iter().filter(|(b, _)| allowed.contains(b)).collect();
    FlagPoint { w, coords }
}

/// The s_1 formulas of the W-stability claim: X_{α_1} ↦ 1/X_{α_1} and
/// X_α ↦ -X_α/X_{α_1} for α > α_1; other coordinates are left as they are.
pub fn s1_claim_image(x: &FlagPoint) -> FlagPoint {
    let a1 = x.get((1, 1));
    let values = x
        .coords
        .iter()
        .map(|(&b, v)| {
            let img = if b == (1, 1) {
                Q::one() / &a1
            } else if b.0 == 1 {
                -v / &a1
            } else {
                v.clone()
            };
            (b, img)
        })
        .collect();
    point_from(x.w.clone(), values)
}

/// The s_1 formulas used for the action on the quotient coordinates.
pub fn s1_alternate_image(x: &FlagPoint) -> FlagPoint {
    let n = x.w.n() - 1;
    let a1 = x.get((1, 1));
    let values = all_roots(n)
        .into_iter()
        .map(|b| {
            let img = if b == (1, 1) {
                Q::one() / &a1
            } else if b.0 == 1 {
                -x.get(b) / &a1
            } else if b.0 == 2 {
                &a1 * x.get(b) + x.get((1, b.1))
            } else {
                x.get(b)
            };
            (b, img)
        })
        .collect();
    point_from(x.w.clone(), values)
}

/// The s_i formulas (i ≥ 2) of the W-stability claim; roots the claim does
/// not list keep their coordinate.
pub fn si_claim_image(i: usize, x: &FlagPoint) -> Result<FlagPoint> {
    let n = x.w.n() - 1;
    let ai = x.get((i, i));
    if ai.is_zero() {
        return si_zero_branch(i, x);
    }
    let values = all_roots(n)
        .into_iter()
        .map(|b| {
            let img = if reflect_root(i, b) == Some(b) {
                x.get(b)
            } else if b == (i, i) {
                Q::one() / &ai
            } else if b.1 == i && b.0 < i {
                x.get(b) / &ai
            } else if b.0 == i && b.1 > i {
                -x.get(b) / &ai
            } else {
                x.get(b)
            };
            (b, img)
        })
        .collect();
    Ok(point_from(x.w.clone(), values))
}

fn si_zero_branch(i: usize, x: &FlagPoint) -> Result<FlagPoint> {
    let n = x.w.n() - 1;
    let tau = negative_form_tail(&x.w)?;
    let moved = Permutation::simple(n + 1, i - 1)?.compose(&tau)?;
    let w = coxeter_prefix(n).compose(&moved)?;
    let values = all_roots(n)
        .into_iter()
        .map(|b| (b, reflect_root(i, b).map(|r| x.get(r)).unwrap_or_else(Q::zero)))
        .collect();
    Ok(point_from(w, values))
}

/// The commutator-relation formula for X_α(s_i; x), i ≥ 2.
pub fn si_commutator_image(i: usize, x: &FlagPoint) -> Result<FlagPoint> {
    let n = x.w.n() - 1;
    let ai = x.get((i, i));
    if ai.is_zero() {
        return si_zero_branch(i, x);
    }
    let w_inv = x.w.inverse();
    let values = all_roots(n)
        .into_iter()
        .map(|b| {
            let img = if b == (i, i) {
                Q::one() / &ai
            } else if b.0 == i && b.1 > i && is_positive_under(&w_inv, (i + 1, b.1)) {
                -x.get(b) / &ai
            } else {
                reflect_root(i, b).map(|r| x.get(r)).unwrap_or_else(Q::zero)
            };
            (b, img)
        })
        .collect();
    Ok(point_from(x.w.clone(), values))
}

fn rf(b: Root) -> RationalFunction {
    RationalFunction::var(xr(b))
}

/// The closed expression displayed for Y_α after the action, with s_i
/// upstairs and α classified against s_{i-1}.
pub fn displayed_step4(alpha: Root, i: usize) -> Option<RationalFunction> {
    let d = i - 1;
    let f = match root_shape(alpha, d) {
        RootShape::Simple => rf((1, i)).div(&rf((1, i - 1)).mul(&rf((i, i)))).ok()?,
        RootShape::EndsAt => {
            let k = alpha.0 + 1;
            rf((1, k - 1)).mul(&rf((k, i))).div(&rf((1, i - 1))).ok()?
        }
        RootShape::StartsAt => {
            let k = alpha.1 + 1;
            rf((1, i)).mul(&rf((i, k))).div(&rf((i, i)).mul(&rf((1, k)))).ok()?.neg()
        }
        RootShape::Generic => {
            let up = (alpha.0 + 1, alpha.1 + 1);
            let bp = (1, alpha.0);
            let a = reflect_root(i, up)?;
            let b = reflect_root(i, bp)?;
            let c = reflect_root(i, root_sum(up, bp)?)?;
            rf(a).mul(&rf(b)).div(&rf(c)).ok()?
        }
    };
    Some(f)
}

fn eval_at(f: &RationalFunction, x: &FlagPoint) -> Option<Q> {
    let n = x.w.n() - 1;
    let point: BTreeMap<Var, Q> = all_roots(n).into_iter().map(|b| (xr(b), x.get(b))).collect();
    f.eval(&point).ok()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WStabilityReport {
    pub n: usize,
    pub points_per_cell: usize,
    /// s_i x lies in V⁰ for every sampled x and every i.
    pub support_preserved: Tally,
    /// Printed coordinate formulas against the matrix computation, up to torus.
    pub formulas: BTreeMap<&'static str, Tally>,
    /// Y_α(π_τ(x)) = Y_α(s_d π(s_i x)) per reading, sign and case.
    pub identities: BTreeMap<(Reading, PiSign, RootShape), Tally>,
    /// Displayed closed expressions against the matrix computation.
    pub displayed: BTreeMap<(PiSign, RootShape), Tally>,
    /// Displayed expressions that are not torus-invariant.
    pub displayed_weight_defects: BTreeMap<RootShape, usize>,
    /// s_1 on the quotient coordinates: Y ↦ -(1+Y) for α ≥ α_1, else Y.
    pub s1_rule: BTreeMap<PiSign, Tally>,
}

impl WStabilityReport {
    /// Reading and sign combinations under which every case agrees.
    pub fn validating(&self) -> Vec<(Reading, PiSign)> {
        let mut out = Vec::new();
        for reading in [Reading::Shifted, Reading::Unshifted] {
            for sign in [PiSign::Minus, PiSign::Plus] {
                let tallies: Vec<&Tally> = self
                    .identities
                    .iter()
                    .filter(|((r, s, _), _)| *r == reading && *s == sign)
                    .map(|(_, t)| t)
                    .collect();
                if !tallies.is_empty() && tallies.iter().all(|t| t.all_agree()) {
                    out.push((reading, sign));
                }
            }
        }
        out
    }

    /// Cases with fewer samples than requested.
    pub fn thin_cases(&self, reading: Reading, sign: PiSign, min: usize) -> Vec<RootShape> {
        self.identities
            .iter()
            .filter(|((r, s, _), t)| *r == reading && *s == sign && t.total < min)
            .map(|((_, _, c), _)| *c)
            .collect()
    }
}

/// Checks the W-stability of V⁰ and the compatibility of the maps π_τ with
/// the Weyl group action on random points, against explicit matrices.
pub fn verify_w_stability(n: usize, points_per_cell: usize, seed: u64) -> Result<WStabilityReport> {
    use crate::oracle::flagpoint::simple_rep;
    use crate::oracle::sampler;
    if !(2..=4).contains(&n) {
        return Err(Error::InvalidParameters(format!("n = {n} outside 2..=4")));
    }
    let mut rng = sampler(seed);
    let mut rep = WStabilityReport { n, points_per_cell, ..Default::default() };
    for tau in parabolic_w_i(n) {
        let w = coxeter_prefix(n).compose(&tau)?;
        for _ in 0..points_per_cell {
            let x = FlagPoint::random(&w, &mut rng);
            let images: Vec<FlagPoint> = (1..=n)
                .map(|i| x.left_multiply(&simple_rep(n + 1, i, false)))
                .collect::<Option<_>>()
                .ok_or(Error::HypothesisViolated("singular matrix".into()))?;
            for y in &images {
                let ok = semistable_flag_support(&y.w, &y.coords).unwrap_or(false);
                rep.support_preserved.record(ok);
            }
            let same_orbit = |a: &FlagPoint, b: &FlagPoint| a.w == b.w && torus_translate(a, b).1;
            rep.formulas.entry("s_1 claim").or_default().record(same_orbit(&s1_claim_image(&x), &images[0]));
            rep.formulas
                .entry("s_1 alternate")
                .or_default()
                .record(same_orbit(&s1_alternate_image(&x), &images[0]));
            for i in 2..=n {
                let y = &images[i - 1];
                rep.formulas.entry("s_i claim").or_default().record(same_orbit(&si_claim_image(i, &x)?, y));
                rep.formulas
                    .entry("s_i commutator")
                    .or_default()
                    .record(same_orbit(&si_commutator_image(i, &x)?, y));
            }
            for sign in [PiSign::Minus, PiSign::Plus] {
                let px = pi_tau_point_with(&x, sign)?;
                for reading in [Reading::Shifted, Reading::Unshifted] {
                    for i in 2..=n {
                        let d = match reading {
                            Reading::Shifted => i - 1,
                            Reading::Unshifted => i,
                        };
                        if d >= n {
                            continue;
                        }
                        let py = pi_tau_point_with(&images[i - 1], sign)?;
                        let z = py
                            .left_multiply(&simple_rep(n, d, false))
                            .ok_or(Error::HypothesisViolated("singular matrix".into()))?;
                        for (&a, v) in &px.coords {
                            let t = rep.identities.entry((reading, sign, root_shape(a, d))).or_default();
                            t.record(z.w == px.w && z.get(a) == *v);
                        }
                    }
                }
                for i in 2..=n {
                    let moved = px
                        .left_multiply(&simple_rep(n, i - 1, false))
                        .ok_or(Error::HypothesisViolated("singular matrix".into()))?;
                    for &a in px.coords.keys() {
                        let case = root_shape(a, i - 1);
                        let t = rep.displayed.entry((sign, case)).or_default();
                        match displayed_step4(a, i).and_then(|f| eval_at(&f, &x)) {
                            Some(v) => t.record(v == moved.get(a)),
                            None => t.undefined += 1,
                        }
                    }
                }
                let p1 = pi_tau_point_with(&images[0], sign)?;
                for (&a, v) in &px.coords {
                    let expected = if a.0 == 1 { -(v + Q::one()) } else { v.clone() };
                    rep.s1_rule.entry(sign).or_default().record(p1.w == px.w && p1.get(a) == expected);
                }
            }
        }
    }
    for i in 2..=n {
        for a in all_roots(n - 1) {
            if let Some(f) = displayed_step4(a, i) {
                if !root_monomial_weight(&f, n)?.is_zero() {
                    *rep.displayed_weight_defects.entry(root_shape(a, i - 1)).or_default() += 1;
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::sampler;
    use rand::Rng;

    #[test]
    fn negative_elements_n2() {
        let chi = RegularDominantChar::new(vec![1, 2]).unwrap();
        let ne = negative_elements(&chi).unwrap();
        assert!(ne.agree());
        let s12 = Permutation::from_word(3, &[1, 2]).unwrap();
        let s121 = Permutation::from_word(3, &[1, 2, 1]).unwrap();
        assert_eq!(ne.by_weight, [s12.clone(), s121].into());
        assert_eq!(act(&s12, &chi.weight()).unwrap(), Weight::from_ints(&[-2, -1]));
        assert!(RegularDominantChar::new(vec![2, 2]).is_err());
    }

    #[test]
    fn beta_prime_examples() {
        assert_eq!(beta_prime((2, 2), 3).unwrap(), (1, 1));
        assert_eq!(beta_prime((3, 5), 6).unwrap(), (1, 2));
        assert!(matches!(beta_prime((1, 2), 3), Err(Error::RootAboveAlphaOne(_))));
        for n in 2..=6 {
            for j in 2..=n {
                for k in j..=n {
                    assert_eq!(beta_prime_candidates((j, k), n), vec![beta_prime((j, k), n).unwrap()]);
                }
            }
        }
    }

    #[test]
    fn pi_tau_identity_n2() {
        let tau = Permutation::identity(3);
        let cs = pi_tau(&tau).unwrap();
        // w = s_1 s_2 = [2,3,1]: R+(w^-1) = {[1,1], [1,2]}
        assert!(cs.is_empty());
        let tau = Permutation::from_word(3, &[1]).unwrap();
        let cs = pi_tau(&tau).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].label, (1, 1));
        assert_eq!(cs[0].beta, (2, 2));
        assert!(root_monomial_weight(&cs[0].expr, 2).unwrap().is_zero());
    }

    #[test]
    fn s1_action_is_an_involution() {
        let y1 = RationalFunction::var(Var::y(1, 1));
        let y2 = RationalFunction::var(Var::y(2, 2));
        assert_eq!(s1_y_action(&y2).unwrap(), y2);
        let img = s1_y_action(&y1).unwrap();
        assert_eq!(img, y1.add(&RationalFunction::one()).neg());
        assert_eq!(s1_y_action(&img).unwrap(), y1);
    }

    #[test]
    fn w_stability_report() {
        let rep = verify_w_stability(3, 4, 0).unwrap();
        assert!(rep.support_preserved.all_agree());
        assert_eq!(rep.validating(), vec![(Reading::Shifted, PiSign::Plus)]);
        assert!(rep.displayed[&(PiSign::Plus, RootShape::Simple)].all_agree());
        assert!(!rep.s1_rule[&PiSign::Minus].all_agree());
        assert!(rep.displayed_weight_defects.contains_key(&RootShape::EndsAt));
    }

    #[test]
    fn support_predicate_matches_hilbert_mumford() {
        use crate::oracle::flagpoint::flag_hm_semistable;
        use crate::weights::pairing;
        let mut rng = sampler(4);
        for n in 2..=3usize {
            // concave increasing coefficients give a regular dominant χ
            let m: Vec<i64> = (1..=n as i64).map(|i| (1..=i).map(|j| n as i64 + 1 - j).sum()).collect();
            let chi = RegularDominantChar::new(m).unwrap();
            let c: Vec<i64> = (1..=n)
                .map(|k| pairing(&chi.weight(), k).unwrap().to_integer().try_into().unwrap())
                .collect();
            assert!(c.iter().all(|&v| v > 0));
            for w in Permutation::all(n + 1) {
                for _ in 0..3 {
                    let mut x = FlagPoint::random(&w, &mut rng);
                    if negative_form_tail(&w).is_ok() && rng.gen_bool(0.5) {
                        x.coords.remove(&(1, rng.gen_range(1..=n)));
                    }
                    let predicted = semistable_flag_support(&w, &x.coords).unwrap_or(false);
                    let hm = flag_hm_semistable(&x.matrix(), &c).is_feasible();
                    assert_eq!(predicted, hm, "{w:?} {:?}", x.coords);
                }
            }
        }
    }

    #[test]
    fn injectivity_up_to_torus() {
        for tau in parabolic_w_i(3) {
            assert!(injectivity_trials(&tau, 5, 2).unwrap().all_agree());
        }
        let mut rng = sampler(1);
        let tau = Permutation::from_word(4, &[2, 1]).unwrap();
        let w = coxeter_prefix(3).compose(&tau).unwrap();
        let x1 = FlagPoint::random(&w, &mut rng);
        let x2 = FlagPoint::random(&w, &mut rng);
        let (_, same) = torus_translate(&x1, &x2);
        assert!(!same);
        assert_ne!(pi_tau_point(&x1).unwrap(), pi_tau_point(&x2).unwrap());
    }
}
