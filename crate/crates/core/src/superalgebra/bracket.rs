use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, zero_vec, Scalar};

use super::space::{LinearMap, SuperSpace};
use super::wedge::canonicalize_tuple;

/// Argument of a multilinear bracket evaluation: either a basis vector or a
/// general coordinate vector.
#[derive(Debug, Clone, Copy)]
pub enum BracketArg<'a> {
    Basis(usize),
    Vector(&'a [Scalar]),
}

/// Canonical super-skew storage of an n-linear even map.
///
/// Values are stored only at canonical wedge-ordered tuples; evaluation on a
/// raw tuple reconstructs the Koszul sign, so the super skew-symmetry
/// identity holds by construction. Stored values must satisfy the grading
/// constraint: the value at a tuple is supported on basis vectors whose
/// parity equals the sum of the argument parities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTensor {
    space: SuperSpace,
    arity: usize,
    values: BTreeMap<Vec<usize>, Vec<Scalar>>,
}

impl BracketTensor {
    pub fn zero(space: SuperSpace, arity: usize) -> Self {
        assert!(arity >= 2, "bracket arity must be at least 2");
        BracketTensor {
            space,
            arity,
            values: BTreeMap::new(),
        }
    }

    /// Build from raw entries given in any argument order. Each entry is
    /// canonicalized with its Koszul sign; colliding entries must agree
    /// exactly, and every value must satisfy the grading constraint.
    pub fn from_entries(
        space: SuperSpace,
        arity: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Vec<Scalar>)>,
    ) -> Result<Self> {
        let mut tensor = BracketTensor::zero(space, arity);
        for (args, value) in entries {
            tensor.insert_raw(&args, value)?;
        }
        Ok(tensor)
    }

    /// Canonicalize and record one raw entry, checking consistency.
    fn insert_raw(&mut self, args: &[usize], mut value: Vec<Scalar>) -> Result<()> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        if value.len() != self.space.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.space.dim(),
                found: value.len(),
            });
        }
        match canonicalize_tuple(args, &self.space)? {
            None => {
                // The element is forced to zero by skew-symmetry.
                if !is_zero_vec(&value) {
                    return Err(Error::SkewConflict {
                        args: args.to_vec(),
                    });
                }
                Ok(())
            }
            Some((sign, canon)) => {
                crate::linalg::scale_sign(&mut value, sign);
                let target = self.space.tuple_parity(canon.indices());
                for (i, x) in value.iter().enumerate() {
                    if !x.is_zero() && self.space.parity_of(i) != target {
                        return Err(Error::GradingViolation {
                            args: args.to_vec(),
                        });
                    }
                }
                if let Some(existing) = self.values.get(canon.indices()) {
                    if existing != &value {
                        return Err(Error::SkewConflict {
                            args: args.to_vec(),
                        });
                    }
                    return Ok(());
                }
                if !is_zero_vec(&value) {
                    self.values.insert(canon.indices().to_vec(), value);
                }
                Ok(())
            }
        }
    }

    /// Storage trusted as-is: canonical keys, no grading check. Exists so
    /// that deliberately broken algebras can be built for the checkers.
    pub fn from_canonical_unchecked(
        space: SuperSpace,
        arity: usize,
        values: BTreeMap<Vec<usize>, Vec<Scalar>>,
    ) -> Self {
        let values = values
            .into_iter()
            .filter(|(_, v)| !is_zero_vec(v))
            .collect();
        BracketTensor {
            space,
            arity,
            values,
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Stored canonical tuples and their values, in lexicographic order.
    pub fn canonical_entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<Scalar>)> {
        self.values.iter()
    }

    /// Evaluate at a raw tuple of basis indices.
    pub fn eval(&self, args: &[usize]) -> Result<Vec<Scalar>> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        match canonicalize_tuple(args, &self.space)? {
            None => Ok(zero_vec(self.space.dim())),
            Some((sign, canon)) => match self.values.get(canon.indices()) {
                None => Ok(zero_vec(self.space.dim())),
                Some(v) => {
                    let mut out = v.clone();
                    crate::linalg::scale_sign(&mut out, sign);
                    Ok(out)
                }
            },
        }
    }

    /// Multilinear evaluation with a mix of basis and vector arguments.
    pub fn eval_mixed(&self, args: &[BracketArg<'_>]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.arity, "bracket arity mismatch");
        let d = self.space.dim();
        let supports: Vec<Vec<(usize, Scalar)>> = args
            .iter()
            .map(|a| match a {
                BracketArg::Basis(i) => {
                    assert!(*i < d, "basis index out of range");
                    vec![(*i, Scalar::from_integer(1.into()))]
                }
                BracketArg::Vector(v) => {
                    assert_eq!(v.len(), d, "vector length mismatch");
                    (0..d)
                        .filter(|&k| !v[k].is_zero())
                        .map(|k| (k, v[k].clone()))
                        .collect()
                }
            })
            .collect();
        let mut out = zero_vec(d);
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let mut choice = vec![0usize; self.arity];
        let mut tuple = vec![0usize; self.arity];
        loop {
            let mut coeff = Scalar::from_integer(1.into());
            for (slot, &c) in choice.iter().enumerate() {
                let (idx, ref x) = supports[slot][c];
                tuple[slot] = idx;
                coeff *= x;
            }
            let value = self.eval(&tuple).expect("indices in range by construction");
            crate::linalg::axpy(&mut out, &coeff, &value);
            let mut pos = self.arity;
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

    /// Evaluate on a tuple of general vectors.
    pub fn eval_vectors(&self, args: &[Vec<Scalar>]) -> Vec<Scalar> {
        let wrapped: Vec<BracketArg<'_>> = args.iter().map(|v| BracketArg::Vector(v)).collect();
        self.eval_mixed(&wrapped)
    }

    /// Compose with an even map on the output side: stores `f(value)` at
    /// every canonical tuple.
    pub fn map_values(&self, f: &LinearMap) -> BracketTensor {
        assert_eq!(f.space(), &self.space);
        let values = self
            .values
            .iter()
            .map(|(t, v)| (t.clone(), f.apply(v)))
            .filter(|(_, v)| !is_zero_vec(v))
            .collect();
        BracketTensor {
            space: self.space.clone(),
            arity: self.arity,
            values,
        }
    }
}

/// An n-ary multiplicative Hom-Nambu-Lie superalgebra candidate: a graded
/// space, an n-linear super-skew bracket, and an even twist map.
///
/// Construction checks the structural invariants only (matching spaces,
/// even twist). The defining identities are verified by the `axioms`
/// module, which reports violations instead of erroring, so that broken
/// candidates can be examined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomNambuSuperalgebra {
    bracket: BracketTensor,
    alpha: LinearMap,
}

impl HomNambuSuperalgebra {
    pub fn new(bracket: BracketTensor, alpha: LinearMap) -> Result<Self> {
        if alpha.space() != bracket.space() {
            return Err(Error::DimensionMismatch {
                expected: bracket.space().dim(),
                found: alpha.space().dim(),
            });
        }
        if !alpha.is_even() {
            return Err(Error::NotEven);
        }
        Ok(HomNambuSuperalgebra { bracket, alpha })
    }

    /// The abelian algebra on a space: zero bracket, identity twist.
    pub fn abelian(space: SuperSpace, arity: usize) -> Self {
        let bracket = BracketTensor::zero(space.clone(), arity);
        let alpha = LinearMap::identity(space);
        HomNambuSuperalgebra { bracket, alpha }
    }

    pub fn space(&self) -> &SuperSpace {
        self.bracket.space()
    }

    pub fn dim(&self) -> usize {
        self.space().dim()
    }

    pub fn arity(&self) -> usize {
        self.bracket.arity()
    }

    pub fn bracket(&self) -> &BracketTensor {
        &self.bracket
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    /// k-th power of the twist (`k = 0` is the identity).
    pub fn alpha_pow(&self, k: usize) -> LinearMap {
        self.alpha.pow(k)
    }

    /// Evaluate the bracket at a raw tuple of basis indices.
    pub fn bracket_eval(&self, args: &[usize]) -> Result<Vec<Scalar>> {
        self.bracket.eval(args)
    }

    /// Replace the bracket and twist, keeping the space (for twist
    /// constructions).
    pub fn with_structure(&self, bracket: BracketTensor, alpha: LinearMap) -> Result<Self> {
        HomNambuSuperalgebra::new(bracket, alpha)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn sl2_entries() -> Vec<(Vec<usize>, Vec<Scalar>)> {
        // Basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
        vec![
            (vec![0, 1], vec![int(0), int(0), int(1)]),
            (vec![2, 0], vec![int(2), int(0), int(0)]),
            (vec![2, 1], vec![int(0), int(-2), int(0)]),
        ]
    }

    fn sl2() -> HomNambuSuperalgebra {
        let s = SuperSpace::even(3);
        let b = BracketTensor::from_entries(s.clone(), 2, sl2_entries()).unwrap();
        HomNambuSuperalgebra::new(b, LinearMap::identity(s)).unwrap()
    }

    #[test]
    fn abelian_evaluates_to_zero() {
        let a = HomNambuSuperalgebra::abelian(SuperSpace::even(2), 2);
        assert_eq!(a.bracket_eval(&[0, 1]).unwrap(), zero_vec(2));
    }

    #[test]
    fn sl2_bracket_values() {
        let a = sl2();
        assert_eq!(
            a.bracket_eval(&[0, 1]).unwrap(),
            vec![int(0), int(0), int(1)]
        );
        // Skew symmetry reconstructs [f, e] = -h.
        assert_eq!(
            a.bracket_eval(&[1, 0]).unwrap(),
            vec![int(0), int(0), int(-1)]
        );
        assert_eq!(
            a.bracket_eval(&[2, 0]).unwrap(),
            vec![int(2), int(0), int(0)]
        );
        assert_eq!(a.bracket_eval(&[0, 0]).unwrap(), zero_vec(3));
    }

    #[test]
    fn raw_entries_merge_under_canonicalization() {
        let s = SuperSpace::even(3);
        // Same data given as [h, e] and as [e, h] with the skew sign.
        let entries = vec![
            (vec![2, 0], vec![int(2), int(0), int(0)]),
            (vec![0, 2], vec![int(-2), int(0), int(0)]),
        ];
        let b = BracketTensor::from_entries(s, 2, entries).unwrap();
        assert_eq!(b.eval(&[2, 0]).unwrap(), vec![int(2), int(0), int(0)]);
    }

    #[test]
    fn conflicting_duplicates_rejected() {
        let s = SuperSpace::even(3);
        let entries = vec![
            (vec![0, 1], vec![int(0), int(0), int(1)]),
            (vec![1, 0], vec![int(0), int(0), int(1)]), // should be -h
        ];
        assert_eq!(
            BracketTensor::from_entries(s, 2, entries),
            Err(Error::SkewConflict { args: vec![1, 0] })
        );
    }

    #[test]
    fn grading_violation_rejected() {
        let s = SuperSpace::new(vec![0, 1]).unwrap();
        // [x, y] has parity 1, so a value on the even coordinate is illegal.
        let entries = vec![(vec![0, 1], vec![int(1), int(0)])];
        assert_eq!(
            BracketTensor::from_entries(s, 2, entries),
            Err(Error::GradingViolation { args: vec![0, 1] })
        );
    }

    #[test]
    fn eval_mixed_matches_expansion() {
        let a = sl2();
        // [e + f, h] = [e,h] + [f,h] = -2e + 2f.
        let v = vec![int(1), int(1), int(0)];
        let got = a
            .bracket()
            .eval_mixed(&[BracketArg::Vector(&v), BracketArg::Basis(2)]);
        assert_eq!(got, vec![int(-2), int(2), int(0)]);
    }

    #[test]
    fn odd_twist_rejected() {
        let s = SuperSpace::new(vec![0, 1]).unwrap();
        let b = BracketTensor::zero(s.clone(), 2);
        let alpha = LinearMap::zero(s, Some(1));
        assert_eq!(HomNambuSuperalgebra::new(b, alpha), Err(Error::NotEven));
    }
}
