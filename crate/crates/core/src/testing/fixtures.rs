//! Small named algebras with known structure, used across the test suites.

use crate::linalg::{int, Matrix, Scalar};
use crate::superalgebra::{BracketTensor, HomNambuSuperalgebra, LinearMap, Parity, SuperSpace};

fn unit(dim: usize, i: usize, c: i64) -> Vec<Scalar> {
    let mut v = vec![int(0); dim];
    v[i] = int(c);
    v
}

/// The abelian algebra on the given parities with identity twist.
pub fn abelian(parities: Vec<Parity>, arity: usize) -> HomNambuSuperalgebra {
    HomNambuSuperalgebra::abelian(SuperSpace::new(parities).unwrap(), arity)
}

/// sl(2) on the basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
pub fn sl2() -> HomNambuSuperalgebra {
    let s = SuperSpace::even(3);
    let b = BracketTensor::from_entries(
        s.clone(),
        2,
        vec![
            (vec![0, 1], unit(3, 2, 1)),
            (vec![2, 0], unit(3, 0, 2)),
            (vec![2, 1], unit(3, 1, -2)),
        ],
    )
    .unwrap();
    HomNambuSuperalgebra::new(b, LinearMap::identity(s)).unwrap()
}

/// The outer automorphism of sl(2): e <-> f, h -> -h.
pub fn sl2_swap() -> LinearMap {
    let s = SuperSpace::even(3);
    let m = Matrix::from_rows(vec![
        vec![int(0), int(1), int(0)],
        vec![int(1), int(0), int(0)],
        vec![int(0), int(0), int(-1)],
    ]);
    LinearMap::even(s, m).unwrap()
}

/// Two-dimensional solvable Lie algebra: [e0, e1] = e1.
pub fn solvable2() -> HomNambuSuperalgebra {
    let s = SuperSpace::even(2);
    let b = BracketTensor::from_entries(s.clone(), 2, vec![(vec![0, 1], unit(2, 1, 1))]).unwrap();
    HomNambuSuperalgebra::new(b, LinearMap::identity(s)).unwrap()
}

/// Three-dimensional Heisenberg algebra: [e0, e1] = e2.
pub fn heisenberg3() -> HomNambuSuperalgebra {
    let s = SuperSpace::even(3);
    let b = BracketTensor::from_entries(s.clone(), 2, vec![(vec![0, 1], unit(3, 2, 1))]).unwrap();
    HomNambuSuperalgebra::new(b, LinearMap::identity(s)).unwrap()
}

/// The (1|1) superalgebra on (x even, y odd) with [x, y] = y.
pub fn super_1_1() -> HomNambuSuperalgebra {
    let s = SuperSpace::new(vec![0, 1]).unwrap();
    let b = BracketTensor::from_entries(s.clone(), 2, vec![(vec![0, 1], unit(2, 1, 1))]).unwrap();
    HomNambuSuperalgebra::new(b, LinearMap::identity(s)).unwrap()
}

/// Heisenberg superalgebra on (x odd, y odd, z even): [x,x] = z, [x,y] = z.
pub fn super_heisenberg() -> HomNambuSuperalgebra {
    let s = SuperSpace::new(vec![1, 1, 0]).unwrap();
    let b = BracketTensor::from_entries(
        s.clone(),
        2,
        vec![(vec![0, 0], unit(3, 2, 1)), (vec![0, 1], unit(3, 2, 1))],
    )
    .unwrap();
    HomNambuSuperalgebra::new(b, LinearMap::identity(s)).unwrap()
}

/// The four-dimensional simple 3-Lie algebra: [e_i, e_j, e_k] is the signed
/// remaining basis vector, signs fixed by the fundamental identity.
pub fn three_lie_4d() -> HomNambuSuperalgebra {
    let s = SuperSpace::even(4);
    let b = BracketTensor::from_entries(
        s.clone(),
        3,
        vec![
            (vec![0, 1, 2], unit(4, 3, 1)),
            (vec![0, 1, 3], unit(4, 2, -1)),
            (vec![0, 2, 3], unit(4, 1, 1)),
            (vec![1, 2, 3], unit(4, 0, -1)),
        ],
    )
    .unwrap();
    HomNambuSuperalgebra::new(b, LinearMap::identity(s)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms;

    #[test]
    fn all_fixtures_verify() {
        for alg in [
            abelian(vec![0, 0], 2),
            sl2(),
            solvable2(),
            heisenberg3(),
            super_1_1(),
            super_heisenberg(),
            three_lie_4d(),
            abelian(vec![0, 1, 1], 3),
        ] {
            assert!(
                axioms::is_valid(&alg),
                "fixture failed verification: {:?}",
                axioms::verify(&alg)
                    .iter()
                    .filter(|r| !r.holds)
                    .map(|r| r.axiom.name())
                    .collect::<Vec<_>>()
            );
        }
    }
}
