//! Brute-force verification of the defining identities of an n-ary
//! multiplicative Hom-Nambu-Lie superalgebra.
//!
//! Verification enumerates basis tuples only; multilinearity extends each
//! identity to all elements, so the check is complete. Violations are
//! reported with the first witness in a fixed row-major enumeration order,
//! never thrown.

use crate::combin::{for_each_index_tuple, for_each_permutation};
use crate::linalg::{sign_pow, zero_vec, Scalar};
use crate::superalgebra::{BracketArg, HomNambuSuperalgebra};

/// The four defining identities, in the fixed reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// Values carry the sum of the argument parities.
    Grading,
    /// Adjacent transpositions flip the sign by the Koszul rule.
    SuperSkew,
    /// The twisted fundamental identity.
    HomNambu,
    /// The twist is a bracket endomorphism.
    Multiplicative,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::Grading,
        Axiom::SuperSkew,
        Axiom::HomNambu,
        Axiom::Multiplicative,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Grading => "grading",
            Axiom::SuperSkew => "super_skew",
            Axiom::HomNambu => "hom_nambu",
            Axiom::Multiplicative => "multiplicative",
        }
    }
}

/// First violation found: the basis tuple and the two sides that disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomWitness {
    pub args: Vec<usize>,
    pub left: Vec<Scalar>,
    pub right: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub holds: bool,
    pub witness: Option<AxiomWitness>,
}

impl AxiomReport {
    fn ok(axiom: Axiom) -> Self {
        AxiomReport {
            axiom,
            holds: true,
            witness: None,
        }
    }

    fn fail(axiom: Axiom, witness: AxiomWitness) -> Self {
        AxiomReport {
            axiom,
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Check one identity over all basis tuples.
pub fn check_identity(alg: &HomNambuSuperalgebra, axiom: Axiom) -> AxiomReport {
    match axiom {
        Axiom::Grading => check_grading(alg),
        Axiom::SuperSkew => check_super_skew(alg),
        Axiom::HomNambu => check_hom_nambu(alg),
        Axiom::Multiplicative => check_multiplicative(alg),
    }
}

/// All four reports in a fixed order; overall validity is their conjunction.
pub fn verify(alg: &HomNambuSuperalgebra) -> Vec<AxiomReport> {
    Axiom::ALL.iter().map(|&a| check_identity(alg, a)).collect()
}

/// Conjunction of the four reports.
pub fn is_valid(alg: &HomNambuSuperalgebra) -> bool {
    Axiom::ALL.iter().all(|&a| check_identity(alg, a).holds)
}

fn check_grading(alg: &HomNambuSuperalgebra) -> AxiomReport {
    let space = alg.space();
    for (tuple, value) in alg.bracket().canonical_entries() {
        let target = space.tuple_parity(tuple);
        let projected: Vec<Scalar> = value
            .iter()
            .enumerate()
            .map(|(i, x)| {
                if space.parity_of(i) == target {
                    x.clone()
                } else {
                    Scalar::from_integer(0.into())
                }
            })
            .collect();
        if &projected != value {
            return AxiomReport::fail(
                Axiom::Grading,
                AxiomWitness {
                    args: tuple.clone(),
                    left: value.clone(),
                    right: projected,
                },
            );
        }
    }
    AxiomReport::ok(Axiom::Grading)
}

/// Re-derive every permutation of every stored tuple and test the adjacent
/// transposition identity directly.
fn check_super_skew(alg: &HomNambuSuperalgebra) -> AxiomReport {
    let space = alg.space();
    let n = alg.arity();
    let mut witness = None;
    for (tuple, _) in alg.bracket().canonical_entries() {
        if witness.is_some() {
            break;
        }
        for_each_permutation(tuple, |perm| {
            if witness.is_some() {
                return;
            }
            let value = alg.bracket_eval(perm).expect("stored tuple in range");
            for i in 0..n - 1 {
                let mut swapped = perm.to_vec();
                swapped.swap(i, i + 1);
                let p = space.parity_of(perm[i]);
                let q = space.parity_of(perm[i + 1]);
                let mut other = alg.bracket_eval(&swapped).expect("in range");
                // [.., x_i, x_{i+1}, ..] = -(-1)^(pq) [.., x_{i+1}, x_i, ..]
                let sign = -sign_pow((p & q) as usize);
                crate::linalg::scale_sign(&mut other, sign);
                if value != other {
                    witness = Some(AxiomWitness {
                        args: perm.to_vec(),
                        left: value.clone(),
                        right: other,
                    });
                    return;
                }
            }
        });
    }
    match witness {
        Some(w) => AxiomReport::fail(Axiom::SuperSkew, w),
        None => AxiomReport::ok(Axiom::SuperSkew),
    }
}

/// Left side of the twisted fundamental identity at basis tuples
/// (x_1..x_{n-1}; y_1..y_n) against the signed sum of its n right-side
/// terms. This enumerates dim^(2n-1) tuples.
fn check_hom_nambu(alg: &HomNambuSuperalgebra) -> AxiomReport {
    let space = alg.space();
    let d = space.dim();
    let n = alg.arity();
    let alpha_cols: Vec<Vec<Scalar>> = (0..d).map(|j| alg.alpha().column(j)).collect();
    let mut witness = None;
    for_each_index_tuple(d, 2 * n - 1, |tuple| {
        if witness.is_some() {
            return;
        }
        let xs = &tuple[..n - 1];
        let ys = &tuple[n - 1..];
        let px = space.tuple_parity(xs);

        let inner = alg.bracket_eval(ys).expect("in range");
        let mut lhs_args: Vec<BracketArg<'_>> = xs
            .iter()
            .map(|&x| BracketArg::Vector(&alpha_cols[x]))
            .collect();
        lhs_args.push(BracketArg::Vector(&inner));
        let lhs = alg.bracket().eval_mixed(&lhs_args);

        let mut rhs = zero_vec(d);
        for i in 0..n {
            let mut nested_args = xs.to_vec();
            nested_args.push(ys[i]);
            let nested = alg.bracket_eval(&nested_args).expect("in range");
            let mut term_args: Vec<BracketArg<'_>> = Vec::with_capacity(n);
            for (j, &y) in ys.iter().enumerate() {
                if j == i {
                    term_args.push(BracketArg::Vector(&nested));
                } else {
                    term_args.push(BracketArg::Vector(&alpha_cols[y]));
                }
            }
            let term = alg.bracket().eval_mixed(&term_args);
            let prefix = space.tuple_parity(&ys[..i]);
            let sign = sign_pow((px & prefix) as usize);
            let c = Scalar::from_integer(sign.into());
            crate::linalg::axpy(&mut rhs, &c, &term);
        }
        if lhs != rhs {
            witness = Some(AxiomWitness {
                args: tuple.to_vec(),
                left: lhs,
                right: rhs,
            });
        }
    });
    match witness {
        Some(w) => AxiomReport::fail(Axiom::HomNambu, w),
        None => AxiomReport::ok(Axiom::HomNambu),
    }
}

fn check_multiplicative(alg: &HomNambuSuperalgebra) -> AxiomReport {
    let space = alg.space();
    let d = space.dim();
    let n = alg.arity();
    let alpha_cols: Vec<Vec<Scalar>> = (0..d).map(|j| alg.alpha().column(j)).collect();
    let mut witness = None;
    for_each_index_tuple(d, n, |tuple| {
        if witness.is_some() {
            return;
        }
        let left = alg
            .alpha()
            .apply(&alg.bracket_eval(tuple).expect("in range"));
        let args: Vec<BracketArg<'_>> = tuple
            .iter()
            .map(|&x| BracketArg::Vector(&alpha_cols[x]))
            .collect();
        let right = alg.bracket().eval_mixed(&args);
        if left != right {
            witness = Some(AxiomWitness {
                args: tuple.to_vec(),
                left,
                right,
            });
        }
    });
    match witness {
        Some(w) => AxiomReport::fail(Axiom::Multiplicative, w),
        None => AxiomReport::ok(Axiom::Multiplicative),
    }
}
