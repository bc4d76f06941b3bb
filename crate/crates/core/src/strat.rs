//! Strata of the quotient of the semistable locus of G_{2,n} by the torus
//! normalizer.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    /// P(h_j), the projectivised Cartan subalgebra of sl_{j+1}.
    ProjectiveCartan,
    /// V_j, the complement of the root hyperplanes in P(h_j).
    RootHyperplaneComplement,
}

impl Ambient {
    pub fn describe(&self, j: usize) -> String {
        match self {
            Ambient::ProjectiveCartan => format!("projective space of a Cartan subalgebra h_{j}"),
            Ambient::RootHyperplaneComplement => format!("root-hyperplane complement V_{j}"),
        }
    }
}

/// One stratum S_{j+1} \ (ambient built on h_j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumDescriptor {
    pub index: usize,
    /// j, so the ambient lives in P(h_j) and the group is S_{j+1}.
    pub cell_parameter: usize,
    pub group_order: u128,
    pub ambient: Ambient,
    pub dimension: usize,
    /// The ambient index j given by C_i = S_{i+m+1} \ V_{i+m}.
    pub printed_parameter: usize,
}

impl StratumDescriptor {
    pub fn diverges(&self) -> bool {
        self.cell_parameter != self.printed_parameter
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// ⌈(n-1)/2⌉ and ⌊(n-1)/2⌋.
pub fn parameters(n: usize) -> (usize, usize) {
    (n / 2, (n - 1) / 2)
}

/// C_0 on P(h_m) followed by one open stratum for each cell (m', n-1),
/// m ≤ m' ≤ n-2, each of dimension m' - 1 (the number of invariants Y).
pub fn strata(n: usize) -> Result<Vec<StratumDescriptor>> {
    if n < 4 {
        return Err(Error::InvalidParameters(format!("strata need n >= 4, got {n}")));
    }
    let (m, t) = parameters(n);
    let mut out = vec![StratumDescriptor {
        index: 0,
        cell_parameter: m,
        group_order: factorial(m + 1),
        ambient: Ambient::ProjectiveCartan,
        dimension: m - 1,
        printed_parameter: m,
    }];
    for i in 1..=t {
        let j = m + i - 1;
        out.push(StratumDescriptor {
            index: i,
            cell_parameter: j,
            group_order: factorial(j + 1),
            ambient: Ambient::RootHyperplaneComplement,
            dimension: j - 1,
            printed_parameter: i + m,
        });
    }
    Ok(out)
}

/// Human-readable notes on where the printed indexing departs from the cells.
pub fn divergences(n: usize) -> Result<Vec<String>> {
    Ok(strata(n)?
        .into_iter()
        .filter(StratumDescriptor::diverges)
        .map(|s| {
            format!(
                "C_{i}: printed S_{p1} \\ V_{p} (dimension {pd}) but the cell (m' = {j}) gives S_{j1} \\ V_{j} (dimension {d})",
                i = s.index,
                p1 = s.printed_parameter + 1,
                p = s.printed_parameter,
                pd = s.printed_parameter - 1,
                j = s.cell_parameter,
                j1 = s.cell_parameter + 1,
                d = s.dimension,
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n5() {
        let s = strata(5).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s[0].ambient, Ambient::ProjectiveCartan);
        assert_eq!((s[0].cell_parameter, s[0].group_order), (2, 6));
        assert_eq!((s[1].cell_parameter, s[1].group_order), (2, 6));
        assert_eq!((s[2].cell_parameter, s[2].group_order), (3, 24));
        assert_eq!(s.iter().map(|d| d.dimension).max(), Some(2));
    }

    #[test]
    fn counts_and_dimensions() {
        assert_eq!(strata(4).unwrap().len(), 2);
        assert!(strata(3).is_err());
        for n in 4..=9 {
            let s = strata(n).unwrap();
            let (m, t) = parameters(n);
            assert_eq!(s.len(), t + 1);
            let open: Vec<usize> = s[1..].iter().map(|d| d.dimension).collect();
            assert_eq!(open, (m - 1..=n - 3).collect::<Vec<_>>());
            // cell dimension 2n - 4 minus torus dimension n - 1
            assert_eq!(*open.last().unwrap(), 2 * n - 4 - (n - 1));
            assert!(!divergences(n).unwrap().is_empty());
        }
    }
}
