//! Constructions of new algebras and structural predicates: morphisms, Yau
//! twists, direct sums, graphs of maps, subalgebras and ideals.
//!
//! The twist and direct-sum constructors re-verify their output against the
//! defining identities and fail loudly on a mismatch; the closure theorems
//! guarantee this can only fire on an implementation bug, which turns them
//! into perpetual regression tests at desk-scale cost.

use crate::axioms;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, SubspaceBasis};
use crate::superalgebra::{
    BracketArg, BracketTensor, HomNambuSuperalgebra, LinearMap, Parity, SuperSpace,
};
use num_traits::Zero;

use crate::combin::for_each_index_tuple;

/// Outcome of a morphism test, with the first failing tuple when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismReport {
    pub holds: bool,
    pub witness: Option<MorphismWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismWitness {
    /// f[x_1..x_n] differs from [f x_1 .. f x_n]' at this tuple.
    Bracket {
        args: Vec<usize>,
        left: Vec<Scalar>,
        right: Vec<Scalar>,
    },
    /// f does not intertwine the twists: f a != a' f.
    Twist,
}

/// A graded subspace: parity-homogeneous, linearly independent spanning
/// vectors inside an ambient superspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSubspace {
    ambient: SuperSpace,
    basis: SubspaceBasis,
    parities: Vec<Parity>,
}

impl GradedSubspace {
    pub fn new(ambient: SuperSpace, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        let mut parities = Vec::with_capacity(vectors.len());
        for v in &vectors {
            if v.len() != ambient.dim() {
                return Err(Error::DimensionMismatch {
                    expected: ambient.dim(),
                    found: v.len(),
                });
            }
            let mut parity: Option<Parity> = None;
            for (i, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let p = ambient.parity_of(i);
                match parity {
                    None => parity = Some(p),
                    Some(q) if q != p => return Err(Error::NotEven),
                    _ => {}
                }
            }
            match parity {
                Some(p) => parities.push(p),
                None => return Err(Error::DependentVectors), // zero vector
            }
        }
        let basis = SubspaceBasis::new(ambient.dim(), vectors)?;
        Ok(GradedSubspace {
            ambient,
            basis,
            parities,
        })
    }

    /// The whole space as a graded subspace.
    pub fn full(ambient: SuperSpace) -> Self {
        let d = ambient.dim();
        let vectors: Vec<Vec<Scalar>> = (0..d)
            .map(|i| {
                let mut v = crate::linalg::zero_vec(d);
                v[i] = Scalar::from_integer(1.into());
                v
            })
            .collect();
        GradedSubspace::new(ambient, vectors).expect("standard basis is graded")
    }

    pub fn zero(ambient: SuperSpace) -> Self {
        GradedSubspace {
            basis: SubspaceBasis::empty(ambient.dim()),
            parities: Vec::new(),
            ambient,
        }
    }

    pub fn ambient(&self) -> &SuperSpace {
        &self.ambient
    }

    pub fn basis(&self) -> &SubspaceBasis {
        &self.basis
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

/// Whether a matrix is parity-preserving as a map between two (possibly
/// differently graded) spaces of equal dimension.
fn is_even_between(m: &Matrix, src: &SuperSpace, dst: &SuperSpace) -> bool {
    for i in 0..dst.dim() {
        for j in 0..src.dim() {
            if dst.parity_of(i) != src.parity_of(j) && !m.get(i, j).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Test whether `f` is a morphism src -> dst: it preserves every bracket of
/// basis tuples and intertwines the twists. The map must be even.
pub fn is_morphism(
    f: &LinearMap,
    src: &HomNambuSuperalgebra,
    dst: &HomNambuSuperalgebra,
) -> Result<MorphismReport> {
    if src.arity() != dst.arity() {
        return Err(Error::ArityMismatch {
            expected: src.arity(),
            found: dst.arity(),
        });
    }
    if f.space().dim() != src.dim() || src.dim() != dst.dim() {
        return Err(Error::DimensionMismatch {
            expected: src.dim(),
            found: dst.dim(),
        });
    }
    if !is_even_between(f.matrix(), src.space(), dst.space()) {
        return Err(Error::NotEven);
    }
    // f a = a' f
    let left = f.matrix().mul(src.alpha().matrix());
    let right = dst.alpha().matrix().mul(f.matrix());
    if left != right {
        return Ok(MorphismReport {
            holds: false,
            witness: Some(MorphismWitness::Twist),
        });
    }
    let d = src.dim();
    let n = src.arity();
    let cols: Vec<Vec<Scalar>> = (0..d).map(|j| f.column(j)).collect();
    let mut witness = None;
    for_each_index_tuple(d, n, |tuple| {
        if witness.is_some() {
            return;
        }
        let left = f.apply(&src.bracket_eval(tuple).expect("in range"));
        let args: Vec<BracketArg<'_>> = tuple
            .iter()
            .map(|&x| BracketArg::Vector(&cols[x]))
            .collect();
        let right = dst.bracket().eval_mixed(&args);
        if left != right {
            witness = Some(MorphismWitness::Bracket {
                args: tuple.to_vec(),
                left,
                right,
            });
        }
    });
    Ok(MorphismReport {
        holds: witness.is_none(),
        witness,
    })
}

/// Twist an algebra along one of its morphisms: the new bracket is
/// `beta . [ ... ]` and the new twist `beta . alpha`.
///
/// The precondition (beta a morphism commuting with the twist) is checked
/// and violations error with the failing witness; the output is re-verified
/// against all four identities.
pub fn yau_twist(alg: &HomNambuSuperalgebra, beta: &LinearMap) -> Result<HomNambuSuperalgebra> {
    let report = is_morphism(beta, alg, alg)?;
    if !report.holds {
        let args = match report.witness {
            Some(MorphismWitness::Bracket { args, .. }) => args,
            _ => Vec::new(),
        };
        return Err(Error::NotMorphism { args });
    }
    if !beta.commutes_with(alg.alpha()) {
        return Err(Error::NotAlphaCommuting);
    }
    let bracket = alg.bracket().map_values(beta);
    let alpha = beta.compose(alg.alpha());
    let twisted = HomNambuSuperalgebra::new(bracket, alpha)?;
    for report in axioms::verify(&twisted) {
        if !report.holds {
            return Err(Error::ClosureViolation {
                axiom: report.axiom.name().to_string(),
            });
        }
    }
    Ok(twisted)
}

/// Direct sum: concatenated bases, brackets vanishing on mixed tuples,
/// block-diagonal twist. The output is re-verified.
pub fn direct_sum(
    a: &HomNambuSuperalgebra,
    b: &HomNambuSuperalgebra,
) -> Result<HomNambuSuperalgebra> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            expected: a.arity(),
            found: b.arity(),
        });
    }
    let da = a.dim();
    let db = b.dim();
    let mut parities = a.space().parities().to_vec();
    parities.extend_from_slice(b.space().parities());
    let space = SuperSpace::new(parities)?;

    let mut entries = Vec::new();
    for (tuple, value) in a.bracket().canonical_entries() {
        let mut v = value.clone();
        v.extend(crate::linalg::zero_vec(db));
        entries.push((tuple.clone(), v));
    }
    for (tuple, value) in b.bracket().canonical_entries() {
        let shifted: Vec<usize> = tuple.iter().map(|&i| i + da).collect();
        let mut v = crate::linalg::zero_vec(da);
        v.extend(value.iter().cloned());
        entries.push((shifted, v));
    }
    let bracket = BracketTensor::from_entries(space.clone(), a.arity(), entries)?;

    let alpha = direct_sum_map(a.alpha(), b.alpha(), &space);
    let sum = HomNambuSuperalgebra::new(bracket, alpha)?;
    for report in axioms::verify(&sum) {
        if !report.holds {
            return Err(Error::ClosureViolation {
                axiom: report.axiom.name().to_string(),
            });
        }
    }
    Ok(sum)
}

/// Block-diagonal map on a concatenated space.
pub fn direct_sum_map(f: &LinearMap, g: &LinearMap, sum_space: &SuperSpace) -> LinearMap {
    let da = f.space().dim();
    let db = g.space().dim();
    assert_eq!(sum_space.dim(), da + db, "sum space dimension mismatch");
    let mut m = Matrix::zero(da + db, da + db);
    for i in 0..da {
        for j in 0..da {
            m.set(i, j, f.matrix().get(i, j).clone());
        }
    }
    for i in 0..db {
        for j in 0..db {
            m.set(da + i, da + j, g.matrix().get(i, j).clone());
        }
    }
    let declared = match (f.declared_parity(), g.declared_parity()) {
        (Some(p), Some(q)) if p == q => Some(p),
        _ => None,
    };
    LinearMap::new(sum_space.clone(), m, declared).expect("block diagonal respects parities")
}

/// The graph of an even map inside the direct sum of its source and target:
/// the span of `(e_i, f(e_i))`, kept as the decomposable spanning set so
/// parity homogeneity is automatic.
pub fn graph(
    f: &LinearMap,
    src: &HomNambuSuperalgebra,
    dst: &HomNambuSuperalgebra,
) -> Result<GradedSubspace> {
    if f.space().dim() != src.dim() || src.dim() != dst.dim() {
        return Err(Error::DimensionMismatch {
            expected: src.dim(),
            found: f.space().dim(),
        });
    }
    if !is_even_between(f.matrix(), src.space(), dst.space()) {
        return Err(Error::NotEven);
    }
    let mut parities = src.space().parities().to_vec();
    parities.extend_from_slice(dst.space().parities());
    let ambient = SuperSpace::new(parities)?;
    let d = src.dim();
    let vectors: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let mut v = crate::linalg::zero_vec(2 * d);
            v[i] = Scalar::from_integer(1.into());
            for (r, x) in f.column(i).into_iter().enumerate() {
                v[d + r] = x;
            }
            v
        })
        .collect();
    GradedSubspace::new(ambient, vectors)
}

/// Whether a graded subspace is closed under the twist and the bracket.
pub fn is_subalgebra(alg: &HomNambuSuperalgebra, h: &GradedSubspace) -> bool {
    assert_eq!(
        h.ambient(),
        alg.space(),
        "subspace lives in a different ambient space"
    );
    for v in h.basis().vectors() {
        if !h.basis().contains(&alg.alpha().apply(v)) {
            return false;
        }
    }
    let k = h.dim();
    if k == 0 {
        return true;
    }
    let n = alg.arity();
    let mut closed = true;
    for_each_index_tuple(k, n, |choice| {
        if !closed {
            return;
        }
        let args: Vec<BracketArg<'_>> = choice
            .iter()
            .map(|&c| BracketArg::Vector(&h.basis().vectors()[c]))
            .collect();
        let value = alg.bracket().eval_mixed(&args);
        if !h.basis().contains(&value) {
            closed = false;
        }
    });
    closed
}

/// Whether a graded subspace absorbs the bracket in its first slot (the
/// remaining slots range over the whole algebra) and is twist-invariant.
pub fn is_ideal(alg: &HomNambuSuperalgebra, h: &GradedSubspace) -> bool {
    assert_eq!(h.ambient(), alg.space());
    for v in h.basis().vectors() {
        if !h.basis().contains(&alg.alpha().apply(v)) {
            return false;
        }
    }
    let n = alg.arity();
    let d = alg.dim();
    let mut absorbed = true;
    for u in h.basis().vectors() {
        if !absorbed {
            break;
        }
        for_each_index_tuple(d, n - 1, |rest| {
            if !absorbed {
                return;
            }
            let mut args: Vec<BracketArg<'_>> = vec![BracketArg::Vector(u)];
            args.extend(rest.iter().map(|&i| BracketArg::Basis(i)));
            let value = alg.bracket().eval_mixed(&args);
            if !h.basis().contains(&value) {
                absorbed = false;
            }
        });
    }
    absorbed
}

/// Evaluate both sides of the graph criterion: whether `f` is a morphism,
/// and whether its graph is a subalgebra of the direct sum. The two agree
/// for every even map; disagreement is an implementation bug and panics.
pub fn graph_is_subalgebra_iff_morphism(
    f: &LinearMap,
    src: &HomNambuSuperalgebra,
    dst: &HomNambuSuperalgebra,
) -> Result<(bool, bool)> {
    let morphism = is_morphism(f, src, dst)?.holds;
    let sum = direct_sum(src, dst)?;
    let g = graph(f, src, dst)?;
    let subalgebra = is_subalgebra(&sum, &g);
    assert_eq!(
        morphism, subalgebra,
        "graph criterion violated: morphism={morphism}, subalgebra={subalgebra}"
    );
    Ok((morphism, subalgebra))
}
