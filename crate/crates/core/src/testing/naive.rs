//! An independent fundamental-identity checker over a full uncanonicalized
//! tensor.
//!
//! This implementation deliberately avoids the canonical wedge storage and
//! the Koszul-sign machinery: the bracket is materialized as a dense map on
//! all raw index tuples and every evaluation is a plain multilinear
//! contraction. It exists as an oracle for the canonical-storage checker.

use crate::combin::for_each_index_tuple;
use crate::linalg::{sign_pow, zero_vec, Scalar};
use crate::superalgebra::{HomNambuSuperalgebra, LinearMap, SuperSpace};
use num_traits::Zero;

/// Dense storage of an n-linear map on every raw basis tuple.
#[derive(Debug, Clone)]
pub struct FullTensor {
    dim: usize,
    arity: usize,
    values: Vec<Vec<Scalar>>,
}

impl FullTensor {
    /// Materialize the bracket of an algebra on all `dim^arity` tuples.
    pub fn from_algebra(alg: &HomNambuSuperalgebra) -> Self {
        let dim = alg.dim();
        let arity = alg.arity();
        let mut values = Vec::with_capacity(dim.pow(arity as u32));
        for_each_index_tuple(dim, arity, |t| {
            values.push(alg.bracket_eval(t).expect("in range"));
        });
        FullTensor { dim, arity, values }
    }

    fn flat_index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn value_at(&self, tuple: &[usize]) -> &[Scalar] {
        &self.values[self.flat_index(tuple)]
    }

    /// Overwrite the value at one raw tuple (for building non-examples).
    /// Related tuples are left untouched, so the result usually violates
    /// skew-symmetry as well.
    pub fn set_value(&mut self, tuple: &[usize], value: Vec<Scalar>) {
        let idx = self.flat_index(tuple);
        self.values[idx] = value;
    }

    /// Plain multilinear contraction against dense argument vectors.
    pub fn eval_vectors(&self, args: &[Vec<Scalar>]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.arity);
        let mut out = zero_vec(self.dim);
        for_each_index_tuple(self.dim, self.arity, |t| {
            let mut coeff = Scalar::from_integer(1.into());
            let mut zero = false;
            for (slot, &i) in t.iter().enumerate() {
                if args[slot][i].is_zero() {
                    zero = true;
                    break;
                }
                coeff *= &args[slot][i];
            }
            if zero {
                return;
            }
            crate::linalg::axpy(&mut out, &coeff, self.value_at(t));
        });
        out
    }
}

fn basis_vector(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(dim);
    v[i] = Scalar::from_integer(1.into());
    v
}

/// First basis tuple where the twisted fundamental identity fails for the
/// given full tensor, or `None` when it holds everywhere.
pub fn naive_hom_nambu_witness(
    space: &SuperSpace,
    alpha: &LinearMap,
    tensor: &FullTensor,
) -> Option<Vec<usize>> {
    let d = space.dim();
    let n = tensor.arity;
    let alpha_cols: Vec<Vec<Scalar>> = (0..d).map(|j| alpha.column(j)).collect();
    let mut witness = None;
    for_each_index_tuple(d, 2 * n - 1, |tuple| {
        if witness.is_some() {
            return;
        }
        let xs = &tuple[..n - 1];
        let ys = &tuple[n - 1..];
        let px = space.tuple_parity(xs);

        let mut lhs_args: Vec<Vec<Scalar>> = xs.iter().map(|&x| alpha_cols[x].clone()).collect();
        let inner: Vec<Vec<Scalar>> = ys.iter().map(|&y| basis_vector(d, y)).collect();
        lhs_args.push(tensor.eval_vectors(&inner));
        let lhs = tensor.eval_vectors(&lhs_args);

        let mut rhs = zero_vec(d);
        for i in 0..n {
            let mut nested_args: Vec<Vec<Scalar>> =
                xs.iter().map(|&x| basis_vector(d, x)).collect();
            nested_args.push(basis_vector(d, ys[i]));
            let nested = tensor.eval_vectors(&nested_args);
            let term_args: Vec<Vec<Scalar>> = ys
                .iter()
                .enumerate()
                .map(|(j, &y)| {
                    if j == i {
                        nested.clone()
                    } else {
                        alpha_cols[y].clone()
                    }
                })
                .collect();
            let term = tensor.eval_vectors(&term_args);
            let prefix = space.tuple_parity(&ys[..i]);
            let sign = Scalar::from_integer(sign_pow((px & prefix) as usize).into());
            crate::linalg::axpy(&mut rhs, &sign, &term);
        }
        if lhs != rhs {
            witness = Some(tuple.to_vec());
        }
    });
    witness
}
