//! Property tests for the exact linear algebra kernel.

use homnambu_core::linalg::{
    is_zero_vec, kernel_basis, quotient_dim, rat, solve_particular, Matrix, Scalar, SubspaceBasis,
};
use proptest::prelude::*;

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn arb_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(arb_scalar(), r * c).prop_map(move |data| {
            let rows = data.chunks(c).map(<[Scalar]>::to_vec).collect();
            Matrix::from_rows(rows)
        })
    })
}

proptest! {
    #[test]
    fn kernel_vectors_are_annihilated(a in arb_matrix()) {
        let k = kernel_basis(&a);
        prop_assert_eq!(k.dim(), a.cols() - a.rank());
        for v in k.vectors() {
            prop_assert!(is_zero_vec(&a.mul_vec(v)));
        }
    }

    #[test]
    fn solve_particular_is_exact(a in arb_matrix(), seed in proptest::collection::vec(arb_scalar(), 1..=4)) {
        // Build a consistent right-hand side from a known solution.
        let x: Vec<Scalar> = (0..a.cols())
            .map(|i| seed.get(i).cloned().unwrap_or_else(|| rat(1, 1)))
            .collect();
        let b = a.mul_vec(&x);
        let solved = solve_particular(&a, &b).expect("consistent by construction");
        prop_assert_eq!(a.mul_vec(&solved), b);
    }

    #[test]
    fn quotient_dim_is_complementary(a in arb_matrix()) {
        // Z = row space of A, B = a half-size sub-span.
        let rows: Vec<Vec<Scalar>> = (0..a.rows()).map(|r| a.row(r).to_vec()).collect();
        let z = SubspaceBasis::from_span(a.cols(), &rows);
        let b = SubspaceBasis::from_span(a.cols(), &rows[..a.rows() / 2]);
        let q = quotient_dim(&z, &b).expect("sub-span is contained");
        prop_assert_eq!(q + b.dim(), z.dim());
    }

    #[test]
    fn contains_agrees_with_brute_force(a in arb_matrix(), coeffs in proptest::collection::vec(arb_scalar(), 1..=4)) {
        let rows: Vec<Vec<Scalar>> = (0..a.rows()).map(|r| a.row(r).to_vec()).collect();
        let s = SubspaceBasis::from_span(a.cols(), &rows);
        // A vector in the span.
        let mut v = vec![Scalar::from_integer(0.into()); a.cols()];
        for (c, row) in coeffs.iter().zip(&rows) {
            for (o, x) in v.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        prop_assert!(s.contains(&v));
        // Brute force: membership iff the stacked system is consistent.
        if s.dim() > 0 {
            let m = Matrix::from_cols(a.cols(), s.vectors());
            prop_assert_eq!(s.contains(&v), solve_particular(&m, &v).is_some());
        }
    }
}
