//! Schubert cells of the Grassmannian G_{r,n}: a-sequences, τ_r, the
//! semistability criterion and inversion arrays.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::weights::{act, fundamental_weight, minuscule_floor_element, RoundingMode};
use crate::weyl::{is_min_coset_rep, maximal_parabolic, Permutation};

/// A minimal coset representative in W^{I_r}, stored as
/// (s_{a_start}…s_start)(s_{a_{start+1}}…s_{start+1})…(s_{a_r}…s_r).
/// Rows before `start` are empty and carry the placeholder a_j = j.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassmannElement {
    n: usize,
    r: usize,
    start: usize,
    a: Vec<usize>,
}

impl fmt::Debug for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={:?}", self.a)?;
        if self.start != self.default_start() {
            write!(f, " start={}", self.start)?;
        }
        Ok(())
    }
}

impl GrassmannElement {
    /// Leading entries with a_j = j are read as empty rows.
    pub fn new(n: usize, r: usize, a: Vec<usize>) -> Result<Self> {
        let start = (1..=a.len()).find(|&j| a[j - 1] != j).unwrap_or(a.len() + 1);
        Self::with_start(n, r, start, a)
    }

    pub fn with_start(n: usize, r: usize, start: usize, a: Vec<usize>) -> Result<Self> {
        let bad = || Error::InvalidASequence { n, r, a: a.clone() };
        if r == 0 || r >= n || a.len() != r || start == 0 || start > r + 1 {
            return Err(bad());
        }
        for j in 1..=r {
            let aj = a[j - 1];
            if j < start {
                if aj != j {
                    return Err(bad());
                }
            } else if aj < j || aj > n - r + j - 1 {
                return Err(bad());
            }
        }
        if a.windows(2).any(|p| p[0] >= p[1]) {
            return Err(bad());
        }
        Ok(GrassmannElement { n, r, start, a })
    }

    pub fn identity(n: usize, r: usize) -> Result<Self> {
        Self::with_start(n, r, r + 1, (1..=r).collect())
    }

    /// The cell with w(j) = subset[j-1].
    pub fn from_subset(n: usize, subset: &[usize]) -> Result<Self> {
        let r = subset.len();
        let bad = || Error::InvalidParameters(format!("not an r-subset of 1..={n}: {subset:?}"));
        if r == 0 || r >= n || subset.windows(2).any(|p| p[0] >= p[1]) || subset[r - 1] > n || subset[0] == 0 {
            return Err(bad());
        }
        let start = (1..=r).find(|&j| subset[j - 1] != j).unwrap_or(r + 1);
        let a = (1..=r)
            .map(|j| if j < start { j } else { subset[j - 1] - 1 })
            .collect();
        Self::with_start(n, r, start, a)
    }

    fn default_start(&self) -> usize {
        (1..=self.r).find(|&j| self.a[j - 1] != j).unwrap_or(self.r + 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn a_seq(&self) -> &[usize] {
        &self.a
    }

    /// a_i, 1-based.
    pub fn a(&self, i: usize) -> usize {
        self.a[i - 1]
    }

    /// Number of letters in row i, a_i - i + 1 for nonempty rows.
    pub fn row_len(&self, i: usize) -> usize {
        if i < self.start {
            0
        } else {
            self.a[i - 1] - i + 1
        }
    }

    /// w(1), …, w(r).
    pub fn subset(&self) -> Vec<usize> {
        (1..=self.r)
            .map(|j| if j < self.start { j } else { self.a[j - 1] + 1 })
            .collect()
    }

    pub fn word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        for i in self.start..=self.r {
            word.extend((i..=self.a[i - 1]).rev());
        }
        word
    }

    pub fn length(&self) -> usize {
        (1..=self.r).map(|i| self.row_len(i)).sum()
    }

    /// All C(n, r) cells, in lexicographic order of their subsets.
    pub fn all(n: usize, r: usize) -> Result<Vec<Self>> {
        if r == 0 || r >= n {
            return Err(Error::InvalidParameters(format!("need 1 <= r < n, got r = {r}, n = {n}")));
        }
        let mut out = Vec::new();
        let mut subset: Vec<usize> = (1..=r).collect();
        loop {
            out.push(Self::from_subset(n, &subset)?);
            let Some(i) = (0..r).rev().find(|&i| subset[i] < n - r + i + 1) else {
                break;
            };
            subset[i] += 1;
            for k in i + 1..r {
                subset[k] = subset[k - 1] + 1;
            }
        }
        Ok(out)
    }
}

pub fn to_permutation(g: &GrassmannElement) -> Permutation {
    let subset = g.subset();
    let mut images = subset.clone();
    images.extend((1..=g.n).filter(|v| !subset.contains(v)));
    Permutation::from_one_line(&images).expect("subset completion is a bijection")
}

pub fn from_permutation(w: &Permutation, r: usize) -> Result<GrassmannElement> {
    let n = w.n();
    if r == 0 || r >= n || !is_min_coset_rep(w, &maximal_parabolic(n, r)) {
        return Err(Error::NotGrassmannian { r });
    }
    GrassmannElement::from_subset(n, &w.one_line()[..r])
}

/// Componentwise comparison of the subsets, equivalently of the a-sequences
/// with empty rows read as their start index.
pub fn grassmann_leq(g: &GrassmannElement, h: &GrassmannElement) -> Result<bool> {
    if g.n != h.n || g.r != h.r {
        return Err(Error::ShapeMismatch(format!(
            "G({}, {}) vs G({}, {})",
            g.r, g.n, h.r, h.n
        )));
    }
    Ok(h.start <= g.start && g.subset().iter().zip(h.subset()).all(|(x, y)| *x <= y))
}

/// The minimal cell whose representative sends n ω_r to a non-positive weight,
/// obtained from the descent algorithm.
pub fn tau_r(n: usize, r: usize) -> Result<GrassmannElement> {
    if n < 2 || r == 0 || r >= n {
        return Err(Error::InvalidParameters(format!("need 1 <= r <= n-1, got r = {r}, n = {n}")));
    }
    let omega = fundamental_weight(r, n)?;
    let w = minuscule_floor_element(&omega, RoundingMode::Ceil)?;
    from_permutation(&w, r)
}

/// The closed form a_i = i(q+1) for i ≤ t-1 and iq + (t-1) for i ≥ t,
/// where n = qr + t with 1 ≤ t ≤ r.
pub fn tau_r_closed_form(n: usize, r: usize) -> Result<Vec<usize>> {
    if r == 0 || r >= n {
        return Err(Error::InvalidParameters(format!("need 1 <= r <= n-1, got r = {r}, n = {n}")));
    }
    let q = (n - 1) / r;
    let t = n - q * r;
    Ok((1..=r)
        .map(|i| if i < t { i * (q + 1) } else { i * q + t - 1 })
        .collect())
}

/// Explains any disagreement between [`tau_r`] and [`tau_r_closed_form`].
pub fn tau_r_diagnostic(n: usize, r: usize) -> Result<Option<String>> {
    let computed = tau_r(n, r)?;
    let closed = tau_r_closed_form(n, r)?;
    if computed.a_seq() == closed.as_slice() {
        return Ok(None);
    }
    Ok(Some(format!(
        "closed form gives a = {closed:?} but the descent algorithm gives {computed:?} for n = {n}, r = {r}"
    )))
}

/// Whether the Schubert variety of g has torus-semistable points for the
/// ample generator: τ_r ≤ g.
pub fn has_semistable(g: &GrassmannElement) -> Result<bool> {
    grassmann_leq(&tau_r(g.n, g.r)?, g)
}

/// Whether act(w, n ω_r) ≤ 0 coefficientwise.
pub fn sends_to_nonpositive(g: &GrassmannElement) -> Result<bool> {
    let omega = fundamental_weight(g.r, g.n)?;
    let image = act(&to_permutation(g), &omega)?;
    Ok(image.coeffs().iter().all(|c| !c.is_positive()))
}

/// The positive roots α_j + … + α_k of R⁺(w⁻¹), laid out by rows.
/// Row i, column c holds [p_c, a_i] where p_1 < p_2 < … are the positions
/// not in {w(1), …, w(r)}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionArray {
    pub columns: Vec<usize>,
    pub rows: Vec<Vec<(usize, usize)>>,
}

impl InversionArray {
    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The root in row i, column c (both 1-based).
    pub fn root(&self, i: usize, c: usize) -> (usize, usize) {
        self.rows[i - 1][c - 1]
    }

    /// All (row, column) positions, row by row.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for c in 1..=row.len() {
                out.push((i + 1, c));
            }
        }
        out
    }

    pub fn roots(&self) -> Vec<(usize, usize)> {
        self.rows.iter().flatten().copied().collect()
    }

    /// No two stored roots add up to a root.
    pub fn is_sum_free(&self) -> bool {
        let roots = self.roots();
        roots.iter().all(|&(j, k)| {
            roots
                .iter()
                .all(|&(j2, k2)| k + 1 != j2 && k2 + 1 != j)
        })
    }
}

pub fn inversion_array(g: &GrassmannElement) -> InversionArray {
    let subset = g.subset();
    let columns: Vec<usize> = (1..=g.n).filter(|p| !subset.contains(p)).collect();
    let rows = (1..=g.r)
        .map(|i| {
            columns[..g.row_len(i)]
                .iter()
                .map(|&p| (p, g.a(i)))
                .collect()
        })
        .collect();
    InversionArray { columns, rows }
}
