//! Truncated formal deformations: validity checking against the deformation
//! equations, pushforward along formal automorphisms, equivalence search,
//! the order-by-order reduction step, and trivialization.
//!
//! All power series live in K[t]/(t^(N+1)); "valid" and "equivalent" always
//! mean "through order N". Every statement tested is an order-by-order
//! statement, so truncation loses nothing at desk scale.

use num_traits::Zero;

use crate::cohomology::{delta0, delta1_is_zero, Cochain};
use crate::combin::for_each_index_tuple;
use crate::derivations::alpha_commuting_maps;
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, sign_pow, solve_particular, zero_vec, Matrix, Scalar};
use crate::superalgebra::{HomNambuSuperalgebra, LinearMap, WedgeBasis};

/// A bracket deformation truncated at order N: the base bracket plus N
/// higher terms, each an even, fully skew level-1 cochain. The twist is
/// not deformed.
///
/// Twist compatibility of the terms and the convolution identities are
/// checked by `check_deformation`, not at construction, so that broken
/// candidates can be examined and reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalDeformation {
    base: HomNambuSuperalgebra,
    terms: Vec<Cochain>,
}

impl FormalDeformation {
    /// Build from the higher terms f_1..f_N (the order-0 term is always the
    /// base bracket).
    pub fn new(base: HomNambuSuperalgebra, higher_terms: Vec<Cochain>) -> Result<Self> {
        let mut terms = vec![Cochain::from_bracket(&base)];
        for f in higher_terms {
            if f.level() != 1 {
                return Err(Error::LevelMismatch {
                    expected: 1,
                    found: f.level(),
                });
            }
            if f.space() != base.space() || f.arity() != base.arity() {
                return Err(Error::DimensionMismatch {
                    expected: base.dim(),
                    found: f.space().dim(),
                });
            }
            if f.parity() != 0 {
                return Err(Error::NotEven);
            }
            if !f.is_fully_skew() {
                return Err(Error::CochainSkew {
                    key: "deformation term".into(),
                });
            }
            terms.push(f);
        }
        Ok(FormalDeformation { base, terms })
    }

    /// The null deformation: every higher term vanishes.
    pub fn null(base: HomNambuSuperalgebra, order: usize) -> Self {
        let space = base.space().clone();
        let arity = base.arity();
        let higher = (0..order)
            .map(|_| Cochain::zero(space.clone(), arity, 1, 0))
            .collect();
        FormalDeformation::new(base, higher).expect("zero terms are admissible")
    }

    pub fn base(&self) -> &HomNambuSuperalgebra {
        &self.base
    }

    /// Truncation order N.
    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, p: usize) -> &Cochain {
        &self.terms[p]
    }

    pub fn terms(&self) -> &[Cochain] {
        &self.terms
    }

    /// Whether every term beyond the base bracket vanishes.
    pub fn is_null(&self) -> bool {
        self.terms[1..].iter().all(Cochain::is_zero)
    }

    /// Smallest positive order with a nonzero term.
    pub fn lowest_nonzero_order(&self) -> Option<usize> {
        (1..=self.order()).find(|&p| !self.terms[p].is_zero())
    }
}

/// A formal automorphism truncated at order N: the identity plus N higher
/// even terms, each required to commute with the twist of the algebra it
/// is used with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalAutomorphism {
    terms: Vec<LinearMap>,
}

impl FormalAutomorphism {
    /// Build from all terms phi_0..phi_N; phi_0 must be the identity and
    /// every term must be even and commute with the algebra twist.
    pub fn new(alg: &HomNambuSuperalgebra, terms: Vec<LinearMap>) -> Result<Self> {
        if terms.is_empty() || terms[0] != LinearMap::identity(alg.space().clone()) {
            return Err(Error::BadLeadingAutomorphism);
        }
        for t in &terms {
            if t.space() != alg.space() {
                return Err(Error::DimensionMismatch {
                    expected: alg.dim(),
                    found: t.space().dim(),
                });
            }
            if !t.is_even() {
                return Err(Error::NotEven);
            }
            if !t.commutes_with(alg.alpha()) {
                return Err(Error::NotAlphaCommuting);
            }
        }
        Ok(FormalAutomorphism { terms })
    }

    pub fn identity(alg: &HomNambuSuperalgebra, order: usize) -> Self {
        let id = LinearMap::identity(alg.space().clone());
        let zero = LinearMap::zero(alg.space().clone(), Some(0));
        let mut terms = vec![id];
        terms.extend(std::iter::repeat_n(zero, order));
        FormalAutomorphism { terms }
    }

    /// The identity perturbed at a single order: id + phi t^r.
    pub fn single_term(
        alg: &HomNambuSuperalgebra,
        order: usize,
        r: usize,
        phi: LinearMap,
    ) -> Result<Self> {
        assert!(r >= 1 && r <= order);
        let mut out = FormalAutomorphism::identity(alg, order);
        if !phi.is_even() {
            return Err(Error::NotEven);
        }
        if !phi.commutes_with(alg.alpha()) {
            return Err(Error::NotAlphaCommuting);
        }
        out.terms[r] = phi;
        Ok(out)
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, i: usize) -> &LinearMap {
        &self.terms[i]
    }

    pub fn terms(&self) -> &[LinearMap] {
        &self.terms
    }

    /// Truncated series composition: (self . other)(x) = self(other(x)).
    pub fn compose(&self, other: &FormalAutomorphism) -> FormalAutomorphism {
        assert_eq!(self.order(), other.order(), "order mismatch");
        let n = self.order();
        let terms = (0..=n)
            .map(|l| {
                let mut acc = LinearMap::zero(self.terms[0].space().clone(), Some(0));
                for i in 0..=l {
                    acc = acc.add(&self.terms[i].compose(&other.terms[l - i]));
                }
                acc
            })
            .collect();
        FormalAutomorphism { terms }
    }

    /// Order-by-order inverse: both compositions with the result equal the
    /// identity through order N (asserted).
    pub fn inverse(&self) -> FormalAutomorphism {
        let n = self.order();
        let space = self.terms[0].space().clone();
        let mut inv: Vec<LinearMap> = vec![LinearMap::identity(space.clone())];
        for l in 1..=n {
            let mut acc = LinearMap::zero(space.clone(), Some(0));
            for i in 1..=l {
                acc = acc.add(&self.terms[i].compose(&inv[l - i]));
            }
            inv.push(acc.neg());
        }
        let out = FormalAutomorphism { terms: inv };
        debug_assert!(self.compose(&out).is_identity());
        debug_assert!(out.compose(self).is_identity());
        out
    }

    pub fn is_identity(&self) -> bool {
        let space = self.terms[0].space().clone();
        self.terms[0] == LinearMap::identity(space)
            && self.terms[1..].iter().all(LinearMap::is_zero)
    }
}

/// First failing order with its witness tuple and residual vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationFailure {
    pub order: usize,
    pub witness: Vec<usize>,
    pub residual: Vec<Scalar>,
}

/// Outcome of checking the deformation equations through the truncation
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationReport {
    pub order: usize,
    pub valid_to_order: i64,
    pub first_failure: Option<DeformationFailure>,
}

impl DeformationReport {
    pub fn is_valid(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn eval_term_on_columns(
    f: &Cochain,
    columns: &[Vec<Scalar>],
    tuple: &[usize],
    replace: Option<(usize, &[Scalar])>,
) -> Vec<Scalar> {
    // f(c(t_1), ..., c(t_n)) with one slot optionally replaced by a vector.
    let args: Vec<Vec<Scalar>> = tuple
        .iter()
        .enumerate()
        .map(|(slot, &i)| match replace {
            Some((s, v)) if s == slot => v.to_vec(),
            _ => columns[i].clone(),
        })
        .collect();
    f.eval_vectors(&args)
}

/// Verify the deformation equations: twist compatibility and grading per
/// term, and for each order l the convolution identity on all basis
/// tuples. Reports the first failing order with a witness.
pub fn check_deformation(d: &FormalDeformation) -> DeformationReport {
    let alg = d.base();
    let space = alg.space();
    let dim = space.dim();
    let n = alg.arity();
    let order = d.order();
    let alpha_cols: Vec<Vec<Scalar>> = (0..dim).map(|j| alg.alpha().column(j)).collect();
    let id_cols: Vec<Vec<Scalar>> = (0..dim)
        .map(|j| {
            let mut v = zero_vec(dim);
            v[j] = Scalar::from_integer(1.into());
            v
        })
        .collect();

    let mut failure: Option<DeformationFailure> = None;

    'orders: for l in 0..=order {
        // Twist compatibility of the term f_l on all basis tuples.
        let f_l = d.term(l);
        let mut compat_failure: Option<(Vec<usize>, Vec<Scalar>)> = None;
        for_each_index_tuple(dim, n, |t| {
            if compat_failure.is_some() {
                return;
            }
            let left = alg
                .alpha()
                .apply(&eval_term_on_columns(f_l, &id_cols, t, None));
            let right = eval_term_on_columns(f_l, &alpha_cols, t, None);
            let residual: Vec<Scalar> = left.iter().zip(&right).map(|(a, b)| a - b).collect();
            if !is_zero_vec(&residual) {
                compat_failure = Some((t.to_vec(), residual));
            }
        });
        if let Some((witness, residual)) = compat_failure {
            failure = Some(DeformationFailure {
                order: l,
                witness,
                residual,
            });
            break 'orders;
        }

        // Convolution identity at order l on all basis tuples.
        let mut conv_failure: Option<(Vec<usize>, Vec<Scalar>)> = None;
        for_each_index_tuple(dim, 2 * n - 1, |tuple| {
            if conv_failure.is_some() {
                return;
            }
            let xs = &tuple[..n - 1];
            let ys = &tuple[n - 1..];
            let px = space.tuple_parity(xs);

            let mut residual = zero_vec(dim);
            for p in 0..=l {
                let q = l - p;
                let (fp, fq) = (d.term(p), d.term(q));
                // f_p(a x_1, ..., a x_{n-1}, f_q(y_1..y_n))
                let inner = eval_term_on_columns(fq, &id_cols, ys, None);
                let mut args: Vec<Vec<Scalar>> =
                    xs.iter().map(|&x| alpha_cols[x].clone()).collect();
                args.push(inner);
                let lhs = fp.eval_vectors(&args);
                for (o, x) in residual.iter_mut().zip(&lhs) {
                    *o += x;
                }
                // - sum_i (sign) f_p(a y_1, .., f_q(xs, y_i), .., a y_n)
                for i in 0..n {
                    let mut nested_args = xs.to_vec();
                    nested_args.push(ys[i]);
                    let nested = eval_term_on_columns(fq, &id_cols, &nested_args, None);
                    let term = eval_term_on_columns(fp, &alpha_cols, ys, Some((i, &nested)));
                    let prefix = space.tuple_parity(&ys[..i]);
                    let sign = Scalar::from_integer((-sign_pow((px & prefix) as usize)).into());
                    crate::linalg::axpy(&mut residual, &sign, &term);
                }
            }
            if !is_zero_vec(&residual) {
                conv_failure = Some((tuple.to_vec(), residual));
            }
        });
        if let Some((witness, residual)) = conv_failure {
            failure = Some(DeformationFailure {
                order: l,
                witness,
                residual,
            });
            break 'orders;
        }
    }

    let valid_to_order = match &failure {
        None => order as i64,
        Some(f) => f.order as i64 - 1,
    };
    DeformationReport {
        order,
        valid_to_order,
        first_failure: failure,
    }
}

/// The infinitesimal term together with its cocycle status.
pub fn infinitesimal_class(d: &FormalDeformation) -> (Cochain, bool) {
    let f1 = if d.order() >= 1 {
        d.term(1).clone()
    } else {
        Cochain::zero(d.base().space().clone(), d.base().arity(), 1, 0)
    };
    let is_cocycle = delta1_is_zero(d.base(), &f1);
    (f1, is_cocycle)
}

/// Transport a deformation along a formal automorphism:
/// f'_t = P_t^-1 . f_t . (P_t x ... x P_t), truncated.
///
/// When the input is valid through its order, the output is re-checked and
/// must be too (a runtime self-test of the equivalence machinery).
pub fn pushforward(d: &FormalDeformation, p: &FormalAutomorphism) -> Result<FormalDeformation> {
    let alg = d.base();
    if p.order() != d.order() {
        return Err(Error::DimensionMismatch {
            expected: d.order(),
            found: p.order(),
        });
    }
    if p.terms()[0].space() != alg.space() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: p.terms()[0].space().dim(),
        });
    }
    let order = d.order();
    let n = alg.arity();
    let space = alg.space().clone();
    let q = p.inverse();

    // g_l = sum over j + k_1 + ... + k_n = l of f_j(phi_{k_1} -, ...),
    // assembled on canonical full tuples (the composition sum is skew).
    let full_basis = WedgeBasis::new(&space, n);
    let mut g: Vec<Vec<(Vec<usize>, Vec<Scalar>)>> = Vec::with_capacity(order + 1);
    for l in 0..=order {
        let mut entries: Vec<(Vec<usize>, Vec<Scalar>)> = Vec::new();
        for t in full_basis.tuples() {
            let mut value = zero_vec(space.dim());
            for j in 0..=l {
                compositions(l - j, n, &mut |ks| {
                    let args: Vec<Vec<Scalar>> = t
                        .indices()
                        .iter()
                        .zip(ks)
                        .map(|(&idx, &k)| p.term(k).column(idx))
                        .collect();
                    let v = d.term(j).eval_vectors(&args);
                    for (o, x) in value.iter_mut().zip(&v) {
                        *o += x;
                    }
                });
            }
            if !is_zero_vec(&value) {
                entries.push((t.indices().to_vec(), value));
            }
        }
        g.push(entries);
    }

    // f'_l = sum_{i + r = l} q_i . g_r.
    let mut higher: Vec<Cochain> = Vec::with_capacity(order);
    for l in 1..=order {
        let mut entries: Vec<(Vec<usize>, Vec<Scalar>)> = Vec::new();
        for t in full_basis.tuples() {
            let mut value = zero_vec(space.dim());
            for i in 0..=l {
                let r = l - i;
                for (tuple, v) in &g[r] {
                    if tuple == t.indices() {
                        let w = q.term(i).apply(v);
                        for (o, x) in value.iter_mut().zip(&w) {
                            *o += x;
                        }
                    }
                }
            }
            if !is_zero_vec(&value) {
                entries.push((t.indices().to_vec(), value));
            }
        }
        higher.push(Cochain::from_skew_entries(space.clone(), n, 0, entries)?);
    }
    let out = FormalDeformation::new(alg.clone(), higher)?;

    // Self-test: equivalence preserves validity.
    if check_deformation(d).is_valid() {
        let report = check_deformation(&out);
        assert!(
            report.is_valid(),
            "pushforward of a valid deformation failed validation at order {}",
            report.valid_to_order + 1
        );
    }
    Ok(out)
}

/// All weak compositions of `total` into `parts` nonnegative integers.
fn compositions(total: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(total: usize, parts: usize, current: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if parts == 1 {
            current.push(total);
            f(current);
            current.pop();
            return;
        }
        for first in 0..=total {
            current.push(first);
            rec(total - first, parts - 1, current, f);
            current.pop();
        }
    }
    let mut current = Vec::with_capacity(parts);
    rec(total, parts, &mut current, f);
}

/// Values of a skew level-1 cochain flattened over the canonical full
/// tuples (the coordinate space for the order-by-order solves).
fn flatten_on_full_basis(f: &Cochain, full_basis: &WedgeBasis) -> Vec<Scalar> {
    let n = f.arity();
    let mut out = Vec::new();
    for t in full_basis.tuples() {
        out.extend(f.eval_split(&t.indices()[..n - 1], t.indices()[n - 1]));
    }
    out
}

/// Matrix of the level-0 coboundary restricted to even twist-commuting
/// maps, over the canonical full-tuple coordinates; returns the basis maps
/// alongside.
fn coboundary_matrix(
    alg: &HomNambuSuperalgebra,
    full_basis: &WedgeBasis,
) -> (Matrix, Vec<LinearMap>) {
    let maps: Vec<LinearMap> = alpha_commuting_maps(alg, 0)
        .vectors()
        .iter()
        .map(|v| LinearMap::from_vec(alg.space().clone(), v, Some(0)).expect("block coordinates"))
        .collect();
    let columns: Vec<Vec<Scalar>> = maps
        .iter()
        .map(|phi| {
            let c = delta0(alg, phi).expect("basis maps commute with the twist");
            flatten_on_full_basis(&c, full_basis)
        })
        .collect();
    let rows = full_basis.size() * alg.dim();
    (Matrix::from_cols(rows, &columns), maps)
}

/// Search for an equivalence between two deformations of the same base,
/// solving for one automorphism term per order. Returns a witness on
/// success, `None` when some order admits no solution.
pub fn are_equivalent(
    d1: &FormalDeformation,
    d2: &FormalDeformation,
    order: usize,
) -> Result<Option<FormalAutomorphism>> {
    if d1.base() != d2.base() {
        return Err(Error::DimensionMismatch {
            expected: d1.base().dim(),
            found: d2.base().dim(),
        });
    }
    if order > d1.order() || order > d2.order() {
        return Err(Error::DimensionMismatch {
            expected: order,
            found: d1.order().min(d2.order()),
        });
    }
    let alg = d1.base();
    let space = alg.space().clone();
    let dim = space.dim();
    let n = alg.arity();
    let full_basis = WedgeBasis::new(&space, n);
    let (m, basis_maps) = coboundary_matrix(alg, &full_basis);

    let mut phis: Vec<LinearMap> = vec![LinearMap::identity(space.clone())];
    for r in 1..=order {
        // Known part: sum_{i+j=r, i<r} phi_i(f1_j(t))
        //           - sum over compositions without a phi_r factor of
        //             f2_i(phi_{k_1} t_1, ...).
        let mut rhs = Vec::with_capacity(full_basis.size() * dim);
        for t in full_basis.tuples() {
            let mut known = zero_vec(dim);
            for i in 0..r {
                let j = r - i;
                let v = d1
                    .term(j)
                    .eval_split(&t.indices()[..n - 1], t.indices()[n - 1]);
                let w = phis[i].apply(&v);
                for (o, x) in known.iter_mut().zip(&w) {
                    *o += x;
                }
            }
            for i in 0..=r {
                compositions(r - i, n, &mut |ks| {
                    if ks.iter().any(|&k| k >= r) {
                        return; // the unknown terms
                    }
                    let args: Vec<Vec<Scalar>> = t
                        .indices()
                        .iter()
                        .zip(ks)
                        .map(|(&idx, &k)| phis[k].column(idx))
                        .collect();
                    let v = d2.term(i).eval_vectors(&args);
                    for (o, x) in known.iter_mut().zip(&v) {
                        *o -= x;
                    }
                });
            }
            // The equation reads -delta0(phi_r) = known, i.e.
            // delta0(phi_r) = -known... with the sign flip folded in here.
            rhs.extend(known);
        }
        match solve_particular(&m, &rhs) {
            None => return Ok(None),
            Some(coeffs) => {
                let mut phi = LinearMap::zero(space.clone(), Some(0));
                for (c, b) in coeffs.iter().zip(&basis_maps) {
                    if !c.is_zero() {
                        phi = phi.add(&b.scale(c));
                    }
                }
                phis.push(phi);
            }
        }
    }
    while phis.len() <= d1.order() {
        phis.push(LinearMap::zero(space.clone(), Some(0)));
    }
    let witness = FormalAutomorphism::new(alg, phis)?;
    // Self-test: transporting d1 along the witness reproduces d2 through
    // the requested order.
    let moved = pushforward(d1, &witness.inverse())?;
    for p in 0..=order {
        assert_eq!(
            moved.term(p),
            d2.term(p),
            "equivalence witness fails to transport the deformation at order {p}"
        );
    }
    Ok(Some(witness))
}

/// Outcome of one reduction step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceOutcome {
    /// Every term beyond the base bracket is already zero.
    AlreadyTrivial,
    /// The lowest nonzero term was removed by an automorphism.
    Reduced {
        deformation: FormalDeformation,
        automorphism: FormalAutomorphism,
    },
    /// The lowest nonzero term is not a coboundary within the admissible
    /// (twist-commuting) maps; the deformation is essentially nontrivial.
    NotCoboundary {
        order: usize,
        /// Whether dropping the twist-commutation requirement would have
        /// made the term a coboundary.
        coboundary_without_twist_constraint: bool,
    },
}

/// One step of the rigidity procedure: find the lowest nonzero term, solve
/// it as a coboundary of an even twist-commuting map, and push the
/// deformation forward along the corresponding single-term automorphism.
pub fn reduce_step(d: &FormalDeformation) -> Result<ReduceOutcome> {
    let report = check_deformation(d);
    if !report.is_valid() {
        return Err(Error::InvalidDeformation {
            order: (report.valid_to_order + 1) as usize,
        });
    }
    let alg = d.base();
    let r = match d.lowest_nonzero_order() {
        None => return Ok(ReduceOutcome::AlreadyTrivial),
        Some(r) => r,
    };
    let f_r = d.term(r);
    // Validity at order r forces the lowest term to be a cocycle.
    assert!(
        delta1_is_zero(alg, f_r),
        "lowest term of a valid deformation must be a cocycle"
    );

    let full_basis = WedgeBasis::new(alg.space(), alg.arity());
    let (m, basis_maps) = coboundary_matrix(alg, &full_basis);
    let rhs = flatten_on_full_basis(f_r, &full_basis);
    match solve_particular(&m, &rhs) {
        None => {
            // Distinguish "not a coboundary at all" from "coboundary only
            // via a map that does not commute with the twist".
            let space = alg.space();
            let d_dim = alg.dim();
            let mut all_even: Vec<LinearMap> = Vec::new();
            for row in 0..d_dim {
                for col in 0..d_dim {
                    if space.parity_of(row) != space.parity_of(col) {
                        continue;
                    }
                    let mut v = zero_vec(d_dim * d_dim);
                    v[row * d_dim + col] = Scalar::from_integer(1.into());
                    all_even.push(
                        LinearMap::from_vec(space.clone(), &v, Some(0)).expect("even block unit"),
                    );
                }
            }
            let columns: Vec<Vec<Scalar>> = all_even
                .iter()
                .map(|phi| {
                    let c = crate::cohomology::delta0_unchecked(alg, phi, 0);
                    flatten_on_full_basis(&c, &full_basis)
                })
                .collect();
            let rows = full_basis.size() * alg.dim();
            let unrestricted = Matrix::from_cols(rows, &columns);
            let fallback = solve_particular(&unrestricted, &rhs).is_some();
            Ok(ReduceOutcome::NotCoboundary {
                order: r,
                coboundary_without_twist_constraint: fallback,
            })
        }
        Some(coeffs) => {
            let mut h = LinearMap::zero(alg.space().clone(), Some(0));
            for (c, b) in coeffs.iter().zip(&basis_maps) {
                if !c.is_zero() {
                    h = h.add(&b.scale(c));
                }
            }
            let p = FormalAutomorphism::single_term(alg, d.order(), r, h.neg())?;
            let reduced = pushforward(d, &p)?;
            for q in 1..=r {
                assert!(
                    reduced.term(q).is_zero(),
                    "reduction must clear all terms through its order"
                );
            }
            Ok(ReduceOutcome::Reduced {
                deformation: reduced,
                automorphism: p,
            })
        }
    }
}

/// Iterate the reduction step until the deformation is null through its
/// order, composing the witnesses. Returns the composed automorphism, or
/// `None` when some step fails (an essentially nontrivial deformation).
pub fn trivialize(d: &FormalDeformation, max_steps: usize) -> Result<Option<FormalAutomorphism>> {
    let mut current = d.clone();
    let mut total = FormalAutomorphism::identity(d.base(), d.order());
    for _ in 0..=max_steps {
        match reduce_step(&current)? {
            ReduceOutcome::AlreadyTrivial => return Ok(Some(total)),
            ReduceOutcome::Reduced {
                deformation,
                automorphism,
            } => {
                total = total.compose(&automorphism);
                current = deformation;
            }
            ReduceOutcome::NotCoboundary { .. } => return Ok(None),
        }
    }
    Ok(None)
}
