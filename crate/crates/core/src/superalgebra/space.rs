use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// Degree of a homogeneous element: 0 (even) or 1 (odd).
pub type Parity = u8;

/// A finite-dimensional Z2-graded vector space with a chosen homogeneous
/// basis. Basis indices run `0..dim`, each carrying a parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperSpace {
    parity: Vec<Parity>,
}

impl SuperSpace {
    pub fn new(parity: Vec<Parity>) -> Result<Self> {
        if let Some(&value) = parity.iter().find(|&&p| p > 1) {
            return Err(Error::BadParity { value });
        }
        Ok(SuperSpace { parity })
    }

    /// Purely even space of the given dimension.
    pub fn even(dim: usize) -> Self {
        SuperSpace {
            parity: vec![0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity_of(&self, index: usize) -> Parity {
        self.parity[index]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    /// Sum of the parities of a list of basis indices, mod 2.
    pub fn tuple_parity(&self, indices: &[usize]) -> Parity {
        indices.iter().map(|&i| self.parity[i]).sum::<u8>() % 2
    }
}

/// A linear endomorphism of a superspace, stored as the matrix whose j-th
/// column is the image of basis vector j.
///
/// `declared_parity = Some(0)` means parity-preserving (entries across
/// parity blocks vanish), `Some(1)` parity-reversing, `None` no claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    space: SuperSpace,
    matrix: Matrix,
    declared_parity: Option<Parity>,
}

impl LinearMap {
    pub fn new(space: SuperSpace, matrix: Matrix, declared_parity: Option<Parity>) -> Result<Self> {
        let d = space.dim();
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: matrix.rows().max(matrix.cols()),
            });
        }
        if let Some(p) = declared_parity {
            if p > 1 {
                return Err(Error::BadParity { value: p });
            }
            for i in 0..d {
                for j in 0..d {
                    let block = (space.parity_of(i) + space.parity_of(j)) % 2;
                    if block != p && !matrix.get(i, j).is_zero() {
                        return Err(Error::ParityViolation { row: i, col: j });
                    }
                }
            }
        }
        Ok(LinearMap {
            space,
            matrix,
            declared_parity,
        })
    }

    /// Even map; errors when the matrix mixes parities.
    pub fn even(space: SuperSpace, matrix: Matrix) -> Result<Self> {
        LinearMap::new(space, matrix, Some(0))
    }

    pub fn identity(space: SuperSpace) -> Self {
        let m = Matrix::identity(space.dim());
        LinearMap {
            space,
            matrix: m,
            declared_parity: Some(0),
        }
    }

    pub fn zero(space: SuperSpace, declared_parity: Option<Parity>) -> Self {
        let m = Matrix::zero(space.dim(), space.dim());
        LinearMap {
            space,
            matrix: m,
            declared_parity,
        }
    }

    /// Infer the declared parity from the matrix: `Some(p)` when all nonzero
    /// entries live in the parity-p block, `None` for mixed maps. The zero
    /// map is reported even.
    pub fn with_inferred_parity(space: SuperSpace, matrix: Matrix) -> Result<Self> {
        let mut seen = [false, false];
        for i in 0..space.dim() {
            for j in 0..space.dim() {
                if !matrix.get(i, j).is_zero() {
                    seen[usize::from((space.parity_of(i) + space.parity_of(j)) % 2)] = true;
                }
            }
        }
        let declared = match (seen[0], seen[1]) {
            (false, false) => Some(0),
            (true, false) => Some(0),
            (false, true) => Some(1),
            (true, true) => None,
        };
        LinearMap::new(space, matrix, declared)
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn declared_parity(&self) -> Option<Parity> {
        self.declared_parity
    }

    pub fn is_even(&self) -> bool {
        self.declared_parity == Some(0)
    }

    /// Matrix-vector product, exact.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.space.dim(), "vector length mismatch");
        self.matrix.mul_vec(v)
    }

    /// Image of basis vector `j` (the j-th column).
    pub fn column(&self, j: usize) -> Vec<Scalar> {
        self.matrix.col(j)
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.space, other.space, "composition across spaces");
        let declared = match (self.declared_parity, other.declared_parity) {
            (Some(p), Some(q)) => Some((p + q) % 2),
            _ => None,
        };
        LinearMap {
            space: self.space.clone(),
            matrix: self.matrix.mul(&other.matrix),
            declared_parity: declared,
        }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.space, other.space);
        let declared = match (self.declared_parity, other.declared_parity) {
            (Some(p), Some(q)) if p == q => Some(p),
            _ => None,
        };
        LinearMap {
            space: self.space.clone(),
            matrix: self.matrix.add(&other.matrix),
            declared_parity: declared,
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LinearMap {
        LinearMap {
            space: self.space.clone(),
            matrix: self.matrix.neg(),
            declared_parity: self.declared_parity,
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            space: self.space.clone(),
            matrix: self.matrix.scale(c),
            declared_parity: self.declared_parity,
        }
    }

    /// k-fold composition with itself; `k = 0` is the identity.
    pub fn pow(&self, k: usize) -> LinearMap {
        LinearMap {
            space: self.space.clone(),
            matrix: self.matrix.pow(k),
            declared_parity: if k == 0 {
                Some(0)
            } else {
                self.declared_parity
            },
        }
    }

    pub fn commutes_with(&self, other: &LinearMap) -> bool {
        self.matrix.mul(&other.matrix) == other.matrix.mul(&self.matrix)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Row-major flattening of the matrix into `dim^2` coordinates.
    pub fn to_vec(&self) -> Vec<Scalar> {
        let d = self.space.dim();
        let mut out = Vec::with_capacity(d * d);
        for r in 0..d {
            out.extend(self.matrix.row(r).iter().cloned());
        }
        out
    }

    /// Inverse of `to_vec`.
    pub fn from_vec(
        space: SuperSpace,
        coords: &[Scalar],
        declared_parity: Option<Parity>,
    ) -> Result<Self> {
        let d = space.dim();
        if coords.len() != d * d {
            return Err(Error::DimensionMismatch {
                expected: d * d,
                found: coords.len(),
            });
        }
        let mut m = Matrix::zero(d, d);
        for r in 0..d {
            for c in 0..d {
                m.set(r, c, coords[r * d + c].clone());
            }
        }
        LinearMap::new(space, m, declared_parity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, zero_vec};

    #[test]
    fn parity_validation() {
        assert!(SuperSpace::new(vec![0, 1, 0]).is_ok());
        assert_eq!(
            SuperSpace::new(vec![0, 2]),
            Err(Error::BadParity { value: 2 })
        );
    }

    #[test]
    fn even_map_rejects_mixed_entries() {
        let s = SuperSpace::new(vec![0, 1]).unwrap();
        let mut m = Matrix::zero(2, 2);
        m.set(0, 1, int(1)); // even <- odd entry
        assert_eq!(
            LinearMap::even(s, m),
            Err(Error::ParityViolation { row: 0, col: 1 })
        );
    }

    #[test]
    fn apply_diag() {
        let s = SuperSpace::even(2);
        let mut m = Matrix::zero(2, 2);
        m.set(0, 0, int(2));
        m.set(1, 1, int(3));
        let f = LinearMap::even(s.clone(), m).unwrap();
        assert_eq!(f.apply(&[int(1), int(1)]), vec![int(2), int(3)]);
        let id = LinearMap::identity(s.clone());
        assert_eq!(id.apply(&[int(4), int(5)]), vec![int(4), int(5)]);
        let z = LinearMap::zero(s, Some(0));
        assert_eq!(z.apply(&[int(4), int(5)]), zero_vec(2));
    }

    #[test]
    fn vec_round_trip() {
        let s = SuperSpace::new(vec![0, 1]).unwrap();
        let mut m = Matrix::zero(2, 2);
        m.set(0, 1, int(7));
        let f = LinearMap::new(s.clone(), m, Some(1)).unwrap();
        let coords = f.to_vec();
        let g = LinearMap::from_vec(s, &coords, Some(1)).unwrap();
        assert_eq!(f, g);
    }
}
