//! The dihedral group of the square acting on matrices.
//!
//! Row 0 is the top row, so the main diagonal has slope -1 and `ReflD` is
//! ordinary transposition. Rotations are counter-clockwise.

mod matrix;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

pub use matrix::DenseMatrix;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Symmetry {
    Rot0,
    Rot90,
    Rot180,
    Rot270,
    /// Reflection in the horizontal axis (slope 0).
    ReflH,
    /// Reflection in the vertical axis (infinite slope).
    ReflV,
    /// Reflection in the main diagonal (slope -1), i.e. transposition.
    ReflD,
    /// Reflection in the antidiagonal (slope +1).
    ReflA,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Rot0,
        Symmetry::Rot90,
        Symmetry::Rot180,
        Symmetry::Rot270,
        Symmetry::ReflH,
        Symmetry::ReflV,
        Symmetry::ReflD,
        Symmetry::ReflA,
    ];

    fn index(self) -> usize {
        self as usize
    }

    /// Whether the image of an `m x n` matrix is `n x m`.
    pub fn swaps_dimensions(self) -> bool {
        matches!(self, Symmetry::Rot90 | Symmetry::Rot270 | Symmetry::ReflD | Symmetry::ReflA)
    }

    pub fn image_shape(self, m: usize, n: usize) -> (usize, usize) {
        if self.swaps_dimensions() {
            (n, m)
        } else {
            (m, n)
        }
    }

    /// For the image `B = g(A)` of an `m x n` matrix `A`, the cell of `A`
    /// that lands on `B[i][j]`.
    pub fn source_cell(self, i: usize, j: usize, m: usize, n: usize) -> (usize, usize) {
        match self {
            Symmetry::Rot0 => (i, j),
            Symmetry::Rot90 => (j, n - 1 - i),
            Symmetry::Rot180 => (m - 1 - i, n - 1 - j),
            Symmetry::Rot270 => (m - 1 - j, i),
            Symmetry::ReflH => (m - 1 - i, j),
            Symmetry::ReflV => (i, n - 1 - j),
            Symmetry::ReflD => (j, i),
            Symmetry::ReflA => (m - 1 - j, n - 1 - i),
        }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(self, other: Symmetry) -> Symmetry {
        composition_table()[self.index()][other.index()]
    }

    pub fn inverse(self) -> Symmetry {
        Symmetry::ALL
            .into_iter()
            .find(|&k| self.compose(k) == Symmetry::Rot0)
            .expect("every dihedral element is invertible")
    }

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Rot0 => "rot0",
            Symmetry::Rot90 => "rot90",
            Symmetry::Rot180 => "rot180",
            Symmetry::Rot270 => "rot270",
            Symmetry::ReflH => "refl_h",
            Symmetry::ReflV => "refl_v",
            Symmetry::ReflD => "refl_d",
            Symmetry::ReflA => "refl_a",
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// Identified by probing a 3x3 matrix with distinct entries, which separates
// all eight elements.
fn composition_table() -> &'static [[Symmetry; 8]; 8] {
    static TABLE: OnceLock<[[Symmetry; 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let probe = DenseMatrix::from_fn(3, 3, |i, j| 3 * i + j);
        let images: Vec<_> = Symmetry::ALL.iter().map(|&g| probe.apply(g)).collect();
        let mut table = [[Symmetry::Rot0; 8]; 8];
        for g in Symmetry::ALL {
            for h in Symmetry::ALL {
                let gh = probe.apply(h).apply(g);
                let k = images.iter().position(|im| *im == gh).expect("closed under composition");
                table[g.index()][h.index()] = Symmetry::ALL[k];
            }
        }
        table
    })
}

/// The ten subgroups of the dihedral group of the square.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SubgroupId {
    Trivial,
    /// Cyclic group generated by the quarter turn.
    Rot90,
    /// Centrosymmetry.
    Rot180,
    /// Generated by the horizontal-axis reflection.
    ReflH,
    /// Generated by the vertical-axis reflection.
    ReflV,
    /// Generated by transposition.
    Diag,
    /// Generated by the antidiagonal reflection.
    Antidiag,
    /// Both diagonal reflections.
    Times,
    /// Both axis reflections.
    Plus,
    Full,
}

impl SubgroupId {
    pub const ALL: [SubgroupId; 10] = [
        SubgroupId::Trivial,
        SubgroupId::Rot90,
        SubgroupId::Rot180,
        SubgroupId::ReflH,
        SubgroupId::ReflV,
        SubgroupId::Diag,
        SubgroupId::Antidiag,
        SubgroupId::Times,
        SubgroupId::Plus,
        SubgroupId::Full,
    ];

    /// Name used on the command line and in files.
    pub fn name(self) -> &'static str {
        match self {
            SubgroupId::Trivial => "trivial",
            SubgroupId::Rot90 => "rot90",
            SubgroupId::Rot180 => "rot180",
            SubgroupId::ReflH => "h",
            SubgroupId::ReflV => "v",
            SubgroupId::Diag => "diag",
            SubgroupId::Antidiag => "antidiag",
            SubgroupId::Times => "times",
            SubgroupId::Plus => "plus",
            SubgroupId::Full => "full",
        }
    }

    /// Conventional symbol, e.g. `D_pi/2`.
    pub fn symbol(self) -> &'static str {
        match self {
            SubgroupId::Trivial => "{rho_0}",
            SubgroupId::Rot90 => "D_pi/2",
            SubgroupId::Rot180 => "D_pi",
            SubgroupId::ReflH => "D_0",
            SubgroupId::ReflV => "D_infty",
            SubgroupId::Diag => "D_-1",
            SubgroupId::Antidiag => "D_+1",
            SubgroupId::Times => "D_x",
            SubgroupId::Plus => "D_+",
            SubgroupId::Full => "D_4",
        }
    }

    /// A generating set; checking invariance under it is enough.
    pub fn generators(self) -> &'static [Symmetry] {
        use Symmetry::*;
        match self {
            SubgroupId::Trivial => &[],
            SubgroupId::Rot90 => &[Rot90],
            SubgroupId::Rot180 => &[Rot180],
            SubgroupId::ReflH => &[ReflH],
            SubgroupId::ReflV => &[ReflV],
            SubgroupId::Diag => &[ReflD],
            SubgroupId::Antidiag => &[ReflA],
            SubgroupId::Times => &[ReflD, ReflA],
            SubgroupId::Plus => &[ReflH, ReflV],
            SubgroupId::Full => &[Rot90, ReflV],
        }
    }

    /// All elements, in `Symmetry::ALL` order; always contains `Rot0`.
    pub fn elements(self) -> Vec<Symmetry> {
        let mut set = vec![Symmetry::Rot0];
        let mut grew = true;
        while grew {
            grew = false;
            for &g in self.generators() {
                for k in 0..set.len() {
                    let x = g.compose(set[k]);
                    if !set.contains(&x) {
                        set.push(x);
                        grew = true;
                    }
                }
            }
        }
        set.sort();
        set
    }

    pub fn contains(self, g: Symmetry) -> bool {
        self.elements().contains(&g)
    }

    /// Subgroups containing a quarter turn or a diagonal reflection only act
    /// on square matrices.
    pub fn requires_square(self) -> bool {
        self.generators().iter().any(|g| g.swaps_dimensions())
    }

    /// Cell orbits of the action on an `m x n` grid. Each orbit lists its
    /// cells in row-major order; orbits are sorted by their first cell.
    pub fn orbits(self, m: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
        let elements = self.elements();
        let mut owner = vec![usize::MAX; m * n];
        let mut out: Vec<Vec<(usize, usize)>> = Vec::new();
        for i in 0..m {
            for j in 0..n {
                if owner[i * n + j] != usize::MAX {
                    continue;
                }
                let id = out.len();
                let mut orbit = Vec::new();
                for &g in &elements {
                    let (si, sj) = g.source_cell(i, j, m, n);
                    if owner[si * n + sj] == usize::MAX {
                        owner[si * n + sj] = id;
                        orbit.push((si, sj));
                    }
                }
                orbit.sort();
                out.push(orbit);
            }
        }
        out
    }
}

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubgroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SubgroupId::ALL
            .into_iter()
            .find(|h| h.name() == s.trim())
            .ok_or_else(|| Error::UnknownName { kind: "subgroup", name: s.to_string() })
    }
}

/// `g(A)`.
pub fn apply<T: Clone>(g: Symmetry, a: &DenseMatrix<T>) -> DenseMatrix<T> {
    a.apply(g)
}

/// True iff `A` is fixed by every element of `h`; square-only subgroups
/// reject non-square input.
pub fn is_invariant<T: Clone + PartialEq>(a: &DenseMatrix<T>, h: SubgroupId) -> Result<bool> {
    a.is_invariant(h)
}

/// Sets every cell in the orbit of `(i, j)` under `h` to `v`.
pub(crate) fn fill_orbit<T: Clone>(a: &mut DenseMatrix<T>, h: SubgroupId, i: usize, j: usize, v: T) {
    let (m, n) = (a.rows(), a.cols());
    for g in h.elements() {
        let (si, sj) = g.source_cell(i, j, m, n);
        a.set(si, sj, v.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m0() -> DenseMatrix<i64> {
        DenseMatrix::from_rows(vec![
            vec![0, 0, 1, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 1, 0, 0],
        ])
        .unwrap()
    }

    #[test]
    fn centrosymmetric_example() {
        let a = m0();
        assert_eq!(a.apply(Symmetry::Rot180), a);
        assert_ne!(a.apply(Symmetry::ReflD), a);
        assert_ne!(a.apply(Symmetry::ReflA), a);
        assert!(a.is_invariant(SubgroupId::Rot180).unwrap());
        assert!(!a.is_invariant(SubgroupId::Times).unwrap());
    }

    #[test]
    fn element_sets() {
        use Symmetry::*;
        assert_eq!(SubgroupId::Rot90.elements(), vec![Rot0, Rot90, Rot180, Rot270]);
        assert_eq!(SubgroupId::Plus.elements(), vec![Rot0, Rot180, ReflH, ReflV]);
        assert_eq!(SubgroupId::Times.elements(), vec![Rot0, Rot180, ReflD, ReflA]);
        assert_eq!(SubgroupId::Trivial.elements(), vec![Rot0]);
        assert_eq!(SubgroupId::Full.elements().len(), 8);
        for h in SubgroupId::ALL {
            let k = h.elements().len();
            assert_eq!(8 % k, 0, "{h}");
        }
    }

    #[test]
    fn square_requirements() {
        assert!(!SubgroupId::ReflV.requires_square());
        assert!(SubgroupId::Times.requires_square());
        assert!(SubgroupId::Full.requires_square());
        assert!(!SubgroupId::Plus.requires_square());
        let a = DenseMatrix::<i64>::zeros(2, 3);
        assert!(matches!(a.is_invariant(SubgroupId::Diag), Err(Error::NotSquare { .. })));
        assert!(a.is_invariant(SubgroupId::Plus).unwrap());
    }

    #[test]
    fn constant_matrix_is_fully_invariant() {
        let a = DenseMatrix::from_fn(3, 3, |_, _| 1i64);
        assert!(a.is_invariant(SubgroupId::Full).unwrap());
    }

    #[test]
    fn quarter_turn_is_counter_clockwise() {
        let a = DenseMatrix::from_rows(vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let b = a.apply(Symmetry::Rot90);
        assert_eq!(b.to_rows(), vec![vec![3, 6], vec![2, 5], vec![1, 4]]);
        assert_eq!(a.apply(Symmetry::ReflA).to_rows(), vec![vec![6, 3], vec![5, 2], vec![4, 1]]);
    }

    #[test]
    fn orbit_partitions() {
        let o = SubgroupId::Rot90.orbits(3, 3);
        assert_eq!(o.len(), 3);
        assert_eq!(o[0], vec![(0, 0), (0, 2), (2, 0), (2, 2)]);
        assert_eq!(SubgroupId::Full.orbits(4, 4).len(), 3);
        assert_eq!(SubgroupId::ReflV.orbits(6, 7).len(), 24);
        assert_eq!(SubgroupId::Trivial.orbits(2, 3).len(), 6);
    }

    #[test]
    fn names_round_trip() {
        for h in SubgroupId::ALL {
            assert_eq!(h.name().parse::<SubgroupId>().unwrap(), h);
        }
        assert!("D4".parse::<SubgroupId>().is_err());
    }
}
