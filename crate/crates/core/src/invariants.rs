//! Torus weights of cell coordinates and the lattice of torus-invariant
//! Laurent monomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{determinant, ColumnReduction};
use crate::rational::q;
use crate::schubert::InversionArray;
use crate::weights::Weight;

/// Integer exponents of a Laurent monomial in the cell coordinates X_{i,c}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    pub shape: Vec<usize>,
    pub exps: Vec<Vec<i64>>,
}

impl ExponentVector {
    pub fn zero(arr: &InversionArray) -> Self {
        let shape: Vec<usize> = arr.rows.iter().map(Vec::len).collect();
        let exps = shape.iter().map(|&l| vec![0; l]).collect();
        ExponentVector { shape, exps }
    }

    /// E_{i,c}.
    pub fn unit(arr: &InversionArray, i: usize, c: usize) -> Self {
        let mut e = Self::zero(arr);
        e.exps[i - 1][c - 1] = 1;
        e
    }

    pub fn get(&self, i: usize, c: usize) -> i64 {
        self.exps[i - 1][c - 1]
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(&other.shape)?;
        Ok(ExponentVector {
            shape: self.shape.clone(),
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        ExponentVector {
            shape: self.shape.clone(),
            exps: self
                .exps
                .iter()
                .map(|row| row.iter().map(|x| -x).collect())
                .collect(),
        }
    }

    pub fn flat(&self) -> Vec<i64> {
        self.exps.iter().flatten().copied().collect()
    }

    fn check_shape(&self, shape: &[usize]) -> Result<()> {
        if self.shape != shape {
            return Err(Error::ShapeMismatch(format!(
                "exponent shape {:?} vs {:?}",
                self.shape, shape
            )));
        }
        Ok(())
    }
}

/// Σ exps[i,c] · β_{i,c}.
pub fn torus_weight(e: &ExponentVector, arr: &InversionArray, rank: usize) -> Result<Weight> {
    let shape: Vec<usize> = arr.rows.iter().map(Vec::len).collect();
    e.check_shape(&shape)?;
    let mut coeffs = vec![0i64; rank];
    for (i, row) in arr.rows.iter().enumerate() {
        for (c, &(j, k)) in row.iter().enumerate() {
            let x = e.exps[i][c];
            for coeff in &mut coeffs[j - 1..k] {
                *coeff += x;
            }
        }
    }
    Ok(Weight::new(coeffs.into_iter().map(q).collect()))
}

/// The index (i, j) of one invariant generator
/// Y_{i,j} = X_{i,L_i} X_{i+1,j} / (X_{i,j} X_{i+1,L_i}), L_i = a_i - i + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YIndex {
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBasis {
    pub indices: Vec<YIndex>,
    pub generators: Vec<ExponentVector>,
}

/// Index pairs (i, j) with 1 ≤ i ≤ r-1 and 1 ≤ j < L_i.
pub fn y_indices(arr: &InversionArray) -> Vec<YIndex> {
    let r = arr.rows.len();
    let mut out = Vec::new();
    for i in 1..r {
        let l = arr.rows[i - 1].len();
        for j in 1..l {
            out.push(YIndex { i, j });
        }
    }
    out
}

pub fn y_generators(arr: &InversionArray) -> Result<InvariantBasis> {
    if arr.rows.len() < 2 {
        return Err(Error::InvalidParameters(
            "invariant generators need at least two rows".into(),
        ));
    }
    let indices = y_indices(arr);
    let mut generators = Vec::with_capacity(indices.len());
    for &YIndex { i, j } in &indices {
        let l = arr.rows[i - 1].len();
        let mut e = ExponentVector::zero(arr);
        e.exps[i - 1][l - 1] += 1;
        e.exps[i][j - 1] += 1;
        e.exps[i - 1][j - 1] -= 1;
        e.exps[i][l - 1] -= 1;
        generators.push(e);
    }
    Ok(InvariantBasis { indices, generators })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub positions: usize,
    pub kernel_rank: usize,
    pub expected_rank: usize,
    pub generators_in_kernel: bool,
    /// Determinant of the generators' coordinates in a kernel basis.
    pub change_of_basis_det: Option<BigInt>,
    pub is_basis: bool,
}

impl KernelReport {
    pub fn passed(&self) -> bool {
        self.generators_in_kernel && self.is_basis && self.kernel_rank == self.expected_rank
    }
}

/// Computes the kernel of the weight map over ℤ and checks that the Y
/// exponent vectors are a lattice basis of it.
pub fn verify_kernel_basis(arr: &InversionArray, rank: usize) -> KernelReport {
    let positions = arr.len();
    let expected_rank: usize = y_indices(arr).len();
    // column (i, c) of the weight matrix is the interval vector of β_{i,c}
    let mut matrix = vec![vec![0i64; positions]; rank];
    for (col, (j, k)) in arr.roots().into_iter().enumerate() {
        for row in matrix.iter_mut().take(k).skip(j - 1) {
            row[col] = 1;
        }
    }
    let red = ColumnReduction::new(&matrix, positions);
    let kernel_rank = positions - red.rank;
    let generators = if arr.rows.len() >= 2 {
        y_generators(arr).map(|b| b.generators).unwrap_or_default()
    } else {
        Vec::new()
    };
    let mut coords = Vec::new();
    let mut generators_in_kernel = true;
    for g in &generators {
        let v: Vec<BigInt> = g.flat().into_iter().map(BigInt::from).collect();
        match red.kernel_coordinates(&v) {
            Some(c) => coords.push(c),
            None => generators_in_kernel = false,
        }
    }
    let change_of_basis_det = (generators_in_kernel && coords.len() == kernel_rank)
        .then(|| determinant(&coords));
    let is_basis = change_of_basis_det
        .as_ref()
        .is_some_and(|d| d.abs().is_one());
    KernelReport {
        positions,
        kernel_rank,
        expected_rank,
        generators_in_kernel,
        change_of_basis_det,
        is_basis,
    }
}

/// Whether the weight is zero, as a convenience for callers holding a vector.
pub fn is_invariant(e: &ExponentVector, arr: &InversionArray, rank: usize) -> Result<bool> {
    Ok(torus_weight(e, arr, rank)?.coeffs().iter().all(Zero::is_zero))
}
