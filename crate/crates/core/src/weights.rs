//! Weights of type A_{n-1} written in the simple-root basis.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, q, Q};
use crate::weyl::{is_min_coset_rep, Permutation, SimpleSet};

/// Cartan matrix ⟨α_i, α̌_j⟩ of type A_{n-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub n: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn type_a(n: usize) -> Self {
        let l = n.saturating_sub(1);
        let cartan_matrix = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        CartanData { n, cartan_matrix }
    }
}

/// A weight Σ m_i α_i; `coeffs[i - 1]` is m_i.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    coeffs: Vec<Q>,
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(rational::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Weight {
    pub fn new(coeffs: Vec<Q>) -> Self {
        Weight { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Weight {
            coeffs: coeffs.iter().map(|&c| q(c)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coeffs: vec![Q::zero(); rank],
        }
    }

    /// The simple root α_i.
    pub fn simple_root(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coeffs[i - 1] = Q::one();
        w
    }

    /// The positive root α_j + ... + α_k.
    pub fn interval(rank: usize, j: usize, k: usize) -> Self {
        let mut w = Self::zero(rank);
        for c in &mut w.coeffs[j - 1..k] {
            *c = Q::one();
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Q {
        &self.coeffs[i - 1]
    }

    pub fn scale(&self, c: &Q) -> Self {
        Weight {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficientwise ≤ 0.
    pub fn is_nonpositive(&self) -> bool {
        self.coeffs.iter().all(rational::is_nonpositive)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(rational::is_nonnegative)
    }

    /// Coefficientwise comparison self ≤ other.
    pub fn leq(&self, other: &Weight) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    pub fn is_dominant(&self) -> Result<bool> {
        for j in 1..=self.rank() {
            if pairing(self, j)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

/// ⟨χ, α̌_j⟩ computed with the type-A Cartan matrix.
pub fn pairing(chi: &Weight, j: usize) -> Result<Q> {
    let l = chi.rank();
    if j == 0 || j > l {
        return Err(Error::IndexOutOfRange { index: j, max: l });
    }
    let m = |i: usize| -> Q {
        if i == 0 || i > l {
            Q::zero()
        } else {
            chi.coeffs[i - 1].clone()
        }
    };
    Ok(q(2) * m(j) - m(j - 1) - m(j + 1))
}

/// The fundamental weight ω_r, found by solving ⟨ω_r, α̌_j⟩ = δ_{rj} exactly.
pub fn fundamental_weight(r: usize, n: usize) -> Result<Weight> {
    if n < 2 || r == 0 || r >= n {
        return Err(Error::InvalidParameters(format!(
            "fundamental weight needs 1 <= r <= n-1, got r = {r}, n = {n}"
        )));
    }
    let l = n - 1;
    let cartan = CartanData::type_a(n).cartan_matrix;
    // The Cartan matrix is symmetric, so the system for m is C m = e_r.
    let mut rows: Vec<Vec<Q>> = (0..l)
        .map(|i| {
            let mut row: Vec<Q> = cartan[i].iter().map(|&c| q(c)).collect();
            row.push(if i + 1 == r { Q::one() } else { Q::zero() });
            row
        })
        .collect();
    for col in 0..l {
        let pivot = (col..l)
            .find(|&i| !rows[i][col].is_zero())
            .expect("Cartan matrix is invertible");
        rows.swap(col, pivot);
        let inv = Q::one() / rows[col][col].clone();
        for v in rows[col].iter_mut() {
            *v *= &inv;
        }
        for i in 0..l {
            if i != col && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in col..=l {
                    let sub = &f * &rows[col][c];
                    rows[i][c] -= sub;
                }
            }
        }
    }
    Ok(Weight {
        coeffs: rows.into_iter().map(|row| row[l].clone()).collect(),
    })
}

/// s_i(χ) = χ - ⟨χ, α̌_i⟩ α_i.
pub fn reflect(i: usize, chi: &Weight) -> Result<Weight> {
    let p = pairing(chi, i)?;
    let mut out = chi.clone();
    out.coeffs[i - 1] -= p;
    Ok(out)
}

/// Weyl group action, applied letter by letter along a reduced word.
pub fn act(w: &Permutation, chi: &Weight) -> Result<Weight> {
    if w.n() != chi.rank() + 1 {
        return Err(Error::RankMismatch(w.n(), chi.rank() + 1));
    }
    let mut out = chi.clone();
    for &i in w.reduced_word().iter().rev() {
        out = reflect(i, &out)?;
    }
    Ok(out)
}

pub fn height(chi: &Weight) -> Q {
    chi.coeffs.iter().sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    Smallest,
    Largest,
}

/// Some α_i ∈ I with ⟨μ, α̌_i⟩ > 0; the smallest such index.
pub fn descent_direction(mu: &Weight, set: &SimpleSet) -> Result<usize> {
    descent_direction_with(mu, set, TieBreak::Smallest)
}

pub fn descent_direction_with(mu: &Weight, set: &SimpleSet, tie: TieBreak) -> Result<usize> {
    let mut candidates = Vec::new();
    for &i in set {
        if pairing(mu, i)?.is_positive() {
            candidates.push(i);
        }
    }
    let pick = match tie {
        TieBreak::Smallest => candidates.first(),
        TieBreak::Largest => candidates.last(),
    };
    pick.copied().ok_or_else(|| {
        Error::HypothesisViolated(format!("no simple root in {set:?} pairs positively with {mu:?}"))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundingMode {
    /// Target Σ (m_i - ⌈m_i⌉) α_i.
    Ceil,
    /// Target Σ (m_i - [m_i]) α_i.
    Floor,
}

/// If ω is a fundamental weight, its index r.
pub fn minuscule_index(omega: &Weight) -> Option<usize> {
    let l = omega.rank();
    let pairings: Vec<Q> = (1..=l).map(|j| pairing(omega, j).unwrap()).collect();
    let ones: Vec<usize> = (1..=l).filter(|&j| pairings[j - 1].is_one()).collect();
    let others_zero = pairings
        .iter()
        .all(|p| p.is_zero() || p.is_one());
    match (others_zero, ones.as_slice()) {
        (true, [r]) => Some(*r),
        _ => None,
    }
}

/// {α ∈ S : ⟨ω, α̌⟩ = 0}.
pub fn stabilizing_set(omega: &Weight) -> SimpleSet {
    (1..=omega.rank())
        .filter(|&j| pairing(omega, j).unwrap().is_zero())
        .collect()
}

pub fn rounding_target(omega: &Weight, mode: RoundingMode) -> Weight {
    Weight {
        coeffs: omega
            .coeffs
            .iter()
            .map(|m| match mode {
                RoundingMode::Ceil => m - rational::ceil(m),
                RoundingMode::Floor => m - rational::floor(m),
            })
            .collect(),
    }
}

/// The unique w ∈ W^I taking a minuscule ω to its rounding target, built by
/// descending one simple root at a time.
pub fn minuscule_floor_element(omega: &Weight, mode: RoundingMode) -> Result<Permutation> {
    minuscule_floor_element_with(omega, mode, TieBreak::Smallest)
}

pub fn minuscule_floor_element_with(
    omega: &Weight,
    mode: RoundingMode,
    tie: TieBreak,
) -> Result<Permutation> {
    let n = omega.rank() + 1;
    if omega.is_zero() {
        return Ok(Permutation::identity(n));
    }
    minuscule_index(omega).ok_or(Error::NotMinuscule)?;
    let target = rounding_target(omega, mode);
    let mut cur = omega.clone();
    let mut applied = Vec::new();
    let max_steps = n * (n - 1) / 2;
    while cur != target {
        let gap = &cur - &target;
        if !gap.is_nonnegative() || applied.len() > max_steps {
            return Err(Error::HypothesisViolated(format!(
                "descent from {omega:?} overshot target {target:?}"
            )));
        }
        let support: SimpleSet = (1..=gap.rank())
            .filter(|&i| gap.coeff(i).is_positive())
            .collect();
        let i = descent_direction_with(&cur, &support, tie)?;
        // minuscule: the pairing is exactly 1, so one simple root comes off
        if !pairing(&cur, i)?.is_one() {
            return Err(Error::NotMinuscule);
        }
        cur = reflect(i, &cur)?;
        applied.push(i);
    }
    applied.reverse();
    let w = Permutation::from_word(n, &applied)?;
    let set = stabilizing_set(omega);
    if w.length() != applied.len() || !is_min_coset_rep(&w, &set) {
        return Err(Error::HypothesisViolated(
            "descent word is not a reduced word of a minimal coset representative".into(),
        ));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    fn w(coeffs: &[(i64, i64)]) -> Weight {
        Weight::new(coeffs.iter().map(|&(a, b)| qr(a, b)).collect())
    }

    #[test]
    fn pairing_examples() {
        for i in 1..=4 {
            assert_eq!(pairing(&Weight::simple_root(4, i), i).unwrap(), q(2));
        }
        let om2 = fundamental_weight(2, 5).unwrap();
        for j in 1..=4 {
            assert_eq!(pairing(&om2, j).unwrap(), q(if j == 2 { 1 } else { 0 }));
        }
        assert_eq!(pairing(&Weight::from_ints(&[1, 2]), 2).unwrap(), q(3));
        assert!(pairing(&om2, 5).is_err());
        assert!(pairing(&om2, 0).is_err());
    }

    #[test]
    fn fundamental_weight_examples() {
        assert_eq!(
            fundamental_weight(2, 5).unwrap(),
            w(&[(3, 5), (6, 5), (4, 5), (2, 5)])
        );
        assert_eq!(fundamental_weight(1, 3).unwrap(), w(&[(2, 3), (1, 3)]));
        for n in 2..=8 {
            for r in 1..n {
                let om = fundamental_weight(r, n).unwrap();
                assert_eq!(pairing(&om, r).unwrap(), q(1));
                for i in 1..n {
                    let expect = if i <= r {
                        qr((i * (n - r)) as i64, n as i64)
                    } else {
                        qr((r * (n - i)) as i64, n as i64)
                    };
                    assert_eq!(om.coeff(i), &expect);
                }
            }
        }
    }

    #[test]
    fn act_examples() {
        let om2 = fundamental_weight(2, 5).unwrap();
        assert_eq!(act(&Permutation::identity(5), &om2).unwrap(), om2);
        let s2 = Permutation::simple(5, 2).unwrap();
        assert_eq!(
            act(&s2, &om2).unwrap(),
            &om2 - &Weight::simple_root(4, 2)
        );
        let tau = Permutation::from_word(5, &[2, 1, 4, 3, 2]).unwrap();
        let image = act(&tau, &om2).unwrap();
        assert_eq!(image, w(&[(-2, 5), (-4, 5), (-1, 5), (-3, 5)]));
        assert_eq!(image, rounding_target(&om2, RoundingMode::Ceil));
        assert!(act(&tau, &Weight::zero(3)).is_err());
    }

    #[test]
    fn descent_direction_examples() {
        let a1 = Weight::simple_root(2, 1);
        assert_eq!(descent_direction(&a1, &[1].into()).unwrap(), 1);
        let om2 = fundamental_weight(2, 5).unwrap();
        assert_eq!(descent_direction(&om2, &[1, 2, 3, 4].into()).unwrap(), 2);
        assert!(matches!(
            descent_direction(&om2, &[1, 3].into()),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn minuscule_examples() {
        let zero = Weight::zero(3);
        assert!(minuscule_floor_element(&zero, RoundingMode::Ceil).unwrap().is_identity());
        let om2 = fundamental_weight(2, 5).unwrap();
        let ceil = minuscule_floor_element(&om2, RoundingMode::Ceil).unwrap();
        assert_eq!(ceil, Permutation::from_word(5, &[2, 1, 4, 3, 2]).unwrap());
        let floor = minuscule_floor_element(&om2, RoundingMode::Floor).unwrap();
        assert_eq!(act(&floor, &om2).unwrap(), w(&[(3, 5), (1, 5), (4, 5), (2, 5)]));
        assert_eq!(floor, Permutation::simple(5, 2).unwrap());
        assert!(minuscule_floor_element(&Weight::from_ints(&[1, 1]), RoundingMode::Ceil).is_err());
    }

    #[test]
    fn integer_weight_ceil_target_is_itself_shifted_to_zero() {
        // For ω_2 in A_3 the middle coefficient is integral and ⌈1⌉ = 1.
        let om = fundamental_weight(2, 4).unwrap();
        assert_eq!(
            rounding_target(&om, RoundingMode::Ceil),
            w(&[(-1, 2), (0, 1), (-1, 2)])
        );
    }

    #[test]
    fn height_examples() {
        assert_eq!(height(&Weight::zero(4)), q(0));
        assert_eq!(height(&Weight::from_ints(&[1, 2])), q(3));
        let om2 = fundamental_weight(2, 5).unwrap();
        let tau = minuscule_floor_element(&om2, RoundingMode::Ceil).unwrap();
        assert_eq!(height(&(&om2 - &act(&tau, &om2).unwrap())), q(5));
        assert_eq!(tau.length(), 5);
    }

    #[test]
    fn dominance() {
        assert!(fundamental_weight(2, 5).unwrap().is_dominant().unwrap());
        assert!(!Weight::from_ints(&[1, 3]).is_dominant().unwrap());
    }
}
