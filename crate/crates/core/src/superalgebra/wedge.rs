use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

use super::space::{LinearMap, Parity, SuperSpace};

/// A canonical basis element of the super-exterior power: indices sorted
/// non-decreasingly, with repeats allowed only at odd indices (a repeated
/// even index forces the element to zero, so such tuples are never stored).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WedgeTuple {
    indices: Vec<usize>,
}

impl WedgeTuple {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn parity(&self, space: &SuperSpace) -> Parity {
        space.tuple_parity(&self.indices)
    }
}

/// Sort a raw index tuple into canonical order, accumulating the Koszul sign
/// of the adjacent transpositions of a stable sort.
///
/// Returns `None` when the element is forced to zero (a repeated even
/// index). Swapping two homogeneous entries of parities p and q contributes
/// the factor `-(-1)^(p q)`: -1 unless both are odd.
pub fn canonicalize_tuple(
    indices: &[usize],
    space: &SuperSpace,
) -> Result<Option<(i64, WedgeTuple)>> {
    for &i in indices {
        if i >= space.dim() {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: space.dim(),
            });
        }
    }
    let mut v = indices.to_vec();
    let mut sign = 1i64;
    // Insertion sort: stable, so equal entries never swap.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            let p = space.parity_of(v[j - 1]);
            let q = space.parity_of(v[j]);
            if p & q == 0 {
                sign = -sign;
            }
            v.swap(j - 1, j);
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] && space.parity_of(w[0]) == 0 {
            return Ok(None);
        }
    }
    Ok(Some((sign, WedgeTuple { indices: v })))
}

/// The canonical basis of a super-exterior power of fixed length: all
/// non-decreasing index tuples without repeated even indices, enumerated in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeBasis {
    space: SuperSpace,
    length: usize,
    tuples: Vec<WedgeTuple>,
    index: BTreeMap<Vec<usize>, usize>,
}

impl WedgeBasis {
    pub fn new(space: &SuperSpace, length: usize) -> Self {
        assert!(length >= 1, "wedge length must be positive");
        let mut tuples = Vec::new();
        let mut current = Vec::with_capacity(length);
        enumerate(space, length, 0, &mut current, &mut tuples);
        let index = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.indices.clone(), i))
            .collect();
        WedgeBasis {
            space: space.clone(),
            length,
            tuples,
            index,
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn size(&self) -> usize {
        self.tuples.len()
    }

    pub fn tuples(&self) -> &[WedgeTuple] {
        &self.tuples
    }

    pub fn tuple(&self, i: usize) -> &WedgeTuple {
        &self.tuples[i]
    }

    /// Position of a canonical tuple in the basis.
    pub fn index_of(&self, indices: &[usize]) -> Option<usize> {
        self.index.get(indices).copied()
    }

    /// Matrix of the map induced on the wedge power by an even map of the
    /// underlying space (column i = image of basis tuple i).
    pub fn induced_matrix(&self, f: &LinearMap) -> Matrix {
        assert_eq!(f.space(), &self.space);
        let mut m = Matrix::zero(self.size(), self.size());
        for (i, t) in self.tuples.iter().enumerate() {
            let cols: Vec<Vec<Scalar>> = t.indices().iter().map(|&k| f.column(k)).collect();
            let image = wedge_of_vectors(&self.space, &cols);
            for (tuple, coeff) in image.terms() {
                let row = self
                    .index_of(tuple)
                    .expect("canonical tuple missing from wedge basis");
                m.set(row, i, coeff.clone());
            }
        }
        m
    }
}

fn enumerate(
    space: &SuperSpace,
    remaining: usize,
    min_index: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<WedgeTuple>,
) {
    if remaining == 0 {
        out.push(WedgeTuple {
            indices: current.clone(),
        });
        return;
    }
    for i in min_index..space.dim() {
        let repeat_even = current.last() == Some(&i) && space.parity_of(i) == 0;
        if repeat_even {
            continue;
        }
        current.push(i);
        enumerate(space, remaining - 1, i, current, out);
        current.pop();
    }
}

/// A general element of the super-exterior power, stored sparsely over the
/// canonical tuple basis (zero coefficients are dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeElement {
    space: SuperSpace,
    length: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl WedgeElement {
    pub fn zero(space: SuperSpace, length: usize) -> Self {
        WedgeElement {
            space,
            length,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_tuple(space: SuperSpace, tuple: &WedgeTuple) -> Self {
        let mut e = WedgeElement::zero(space, tuple.len());
        e.add_term(tuple.indices().to_vec(), num_traits::One::one());
        e
    }

    pub fn from_dense(basis: &WedgeBasis, coords: &[Scalar]) -> Self {
        assert_eq!(coords.len(), basis.size(), "coordinate length mismatch");
        let mut e = WedgeElement::zero(basis.space().clone(), basis.length());
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                e.add_term(basis.tuple(i).indices().to_vec(), c.clone());
            }
        }
        e
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `coeff` times the canonical tuple; merges and drops zeros.
    pub fn add_term(&mut self, indices: Vec<usize>, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(indices);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &WedgeElement) -> WedgeElement {
        assert_eq!(self.space, other.space);
        assert_eq!(self.length, other.length);
        let mut out = self.clone();
        for (t, c) in other.terms() {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> WedgeElement {
        let mut out = WedgeElement::zero(self.space.clone(), self.length);
        if c.is_zero() {
            return out;
        }
        for (t, x) in &self.terms {
            out.terms.insert(t.clone(), x * c);
        }
        out
    }

    pub fn sub(&self, other: &WedgeElement) -> WedgeElement {
        self.add(&other.scale(&-Scalar::from_integer(1.into())))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, indices: &[usize]) -> Scalar {
        self.terms
            .get(indices)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// `Some(p)` when every supported tuple has parity p (zero counts as
    /// even); `None` for mixed elements.
    pub fn parity(&self) -> Option<Parity> {
        let mut found: Option<Parity> = None;
        for t in self.terms.keys() {
            let p = self.space.tuple_parity(t);
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(0))
    }

    /// Split into (even part, odd part).
    pub fn split_parity(&self) -> (WedgeElement, WedgeElement) {
        let mut even = WedgeElement::zero(self.space.clone(), self.length);
        let mut odd = WedgeElement::zero(self.space.clone(), self.length);
        for (t, c) in &self.terms {
            if self.space.tuple_parity(t) == 0 {
                even.terms.insert(t.clone(), c.clone());
            } else {
                odd.terms.insert(t.clone(), c.clone());
            }
        }
        (even, odd)
    }

    pub fn to_dense(&self, basis: &WedgeBasis) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); basis.size()];
        for (t, c) in &self.terms {
            let i = basis
                .index_of(t)
                .expect("canonical tuple missing from wedge basis");
            out[i] = c.clone();
        }
        out
    }
}

/// Multilinear expansion of `v_1 ^ ... ^ v_k` over the canonical basis.
pub fn wedge_of_vectors(space: &SuperSpace, vectors: &[Vec<Scalar>]) -> WedgeElement {
    let k = vectors.len();
    let mut out = WedgeElement::zero(space.clone(), k);
    let supports: Vec<Vec<usize>> = vectors
        .iter()
        .map(|v| {
            (0..v.len())
                .filter(|&i| !v[i].is_zero())
                .collect::<Vec<_>>()
        })
        .collect();
    if supports.iter().any(Vec::is_empty) {
        return out;
    }
    let mut choice = vec![0usize; k];
    loop {
        let tuple: Vec<usize> = choice
            .iter()
            .enumerate()
            .map(|(slot, &c)| supports[slot][c])
            .collect();
        if let Some((sign, canon)) =
            canonicalize_tuple(&tuple, space).expect("support indices are in range")
        {
            let mut coeff = Scalar::from_integer(sign.into());
            for (slot, &i) in tuple.iter().enumerate() {
                coeff *= &vectors[slot][i];
            }
            out.add_term(canon.indices().to_vec(), coeff);
        }
        // Odometer over the supports.
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < supports[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn space_ee() -> SuperSpace {
        SuperSpace::even(2)
    }

    fn space_oo() -> SuperSpace {
        SuperSpace::new(vec![1, 1]).unwrap()
    }

    #[test]
    fn swap_two_even_indices() {
        let (sign, t) = canonicalize_tuple(&[1, 0], &space_ee()).unwrap().unwrap();
        assert_eq!(sign, -1);
        assert_eq!(t.indices(), &[0, 1]);
    }

    #[test]
    fn repeated_odd_index_kept_with_plus_sign() {
        let (sign, t) = canonicalize_tuple(&[1, 1], &space_oo()).unwrap().unwrap();
        assert_eq!(sign, 1);
        assert_eq!(t.indices(), &[1, 1]);
        // Swapping two odd entries is symmetric: -(-1)^(1*1) = +1.
        let (sign2, _) = canonicalize_tuple(&[1, 0], &space_oo()).unwrap().unwrap();
        assert_eq!(sign2, 1);
    }

    #[test]
    fn repeated_even_index_is_zero() {
        assert_eq!(canonicalize_tuple(&[1, 1], &space_ee()).unwrap(), None);
    }

    #[test]
    fn three_cycle_of_even_indices() {
        let s = SuperSpace::even(3);
        let (sign, t) = canonicalize_tuple(&[2, 0, 1], &s).unwrap().unwrap();
        assert_eq!(sign, 1); // two adjacent transpositions
        assert_eq!(t.indices(), &[0, 1, 2]);
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            canonicalize_tuple(&[2], &space_ee()),
            Err(Error::IndexOutOfRange { index: 2, dim: 2 })
        );
    }

    #[test]
    fn wedge_basis_even_pair() {
        let b = WedgeBasis::new(&space_ee(), 2);
        assert_eq!(b.size(), 1);
        assert_eq!(b.tuple(0).indices(), &[0, 1]);
    }

    #[test]
    fn wedge_basis_odd_pair_is_symmetric_square() {
        let b = WedgeBasis::new(&space_oo(), 2);
        let got: Vec<_> = b.tuples().iter().map(|t| t.indices().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn wedge_basis_mixed_parity() {
        let s = SuperSpace::new(vec![0, 1]).unwrap();
        let b = WedgeBasis::new(&s, 2);
        let got: Vec<_> = b.tuples().iter().map(|t| t.indices().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn wedge_of_vectors_antisymmetry() {
        let s = space_ee();
        let e0 = vec![int(1), int(0)];
        let e1 = vec![int(0), int(1)];
        let a = wedge_of_vectors(&s, &[e0.clone(), e1.clone()]);
        let b = wedge_of_vectors(&s, &[e1, e0.clone()]);
        assert_eq!(a, b.scale(&int(-1)));
        let zero = wedge_of_vectors(&s, &[e0.clone(), e0]);
        assert!(zero.is_zero());
    }

    #[test]
    fn induced_matrix_of_identity() {
        let s = SuperSpace::new(vec![0, 1, 1]).unwrap();
        let b = WedgeBasis::new(&s, 2);
        let id = LinearMap::identity(s);
        assert_eq!(b.induced_matrix(&id), Matrix::identity(b.size()));
    }
}
