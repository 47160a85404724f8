//! Cochains and coboundary operators for the deformation complex, plus
//! cocycle/coboundary space solvers and the rigidity criterion.
//!
//! A level-m cochain is a multilinear map taking m arguments from the
//! (n-1)-fold super-exterior power and one argument from the algebra. The
//! module implements three operators:
//!
//! * `delta0` - the equivalence-induced coboundary of a linear map,
//! * `delta1` - the operator annihilating infinitesimal deformations,
//!   written directly in n-linear form,
//! * `delta_m` - the generic coboundary on level-m cochains, built from the
//!   exterior-power actions.
//!
//! `delta1` and `delta_m` at level one are implemented independently; a
//! diagnostic compares their kernels instead of asserting equality.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::combin::{for_each_index_tuple, for_each_permutation};
use crate::derivations::alpha_commuting_maps;
use crate::error::{Error, Result};
use crate::linalg::{
    is_zero_vec, kernel_basis, quotient_dim, sign_pow, zero_vec, Matrix, Scalar, SubspaceBasis,
};
use crate::superalgebra::{
    canonicalize_tuple, wedge_of_vectors, BracketArg, HomNambuSuperalgebra, LinearMap, Parity,
    SuperSpace, WedgeBasis, WedgeElement,
};

/// Key of one stored cochain value: m canonical wedge tuples and a basis
/// index of the algebra.
pub type CochainKey = (Vec<Vec<usize>>, usize);

/// Wedge-slot argument for general cochain evaluation.
pub enum WedgeSlot<'a> {
    Tuple(&'a [usize]),
    Element(&'a WedgeElement),
}

/// Point-slot argument for general cochain evaluation.
pub enum PointSlot<'a> {
    Basis(usize),
    Vector(&'a [Scalar]),
}

/// A parity-homogeneous level-m cochain stored sparsely on canonical basis
/// arguments. Level 0 is a plain linear map (no wedge slots).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    space: SuperSpace,
    arity: usize,
    level: usize,
    parity: Parity,
    values: BTreeMap<CochainKey, Vec<Scalar>>,
}

impl Cochain {
    pub fn zero(space: SuperSpace, arity: usize, level: usize, parity: Parity) -> Self {
        Cochain {
            space,
            arity,
            level,
            parity,
            values: BTreeMap::new(),
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&CochainKey, &Vec<Scalar>)> {
        self.values.iter()
    }

    /// Parity required of a value stored at the given key.
    fn value_parity(&self, key: &CochainKey) -> Parity {
        let mut p = self.parity;
        for t in &key.0 {
            p = (p + self.space.tuple_parity(t)) % 2;
        }
        (p + self.space.parity_of(key.1)) % 2
    }

    /// Insert (accumulate) a value at a canonical key; zero results are
    /// dropped. Panics when the value violates the grading of the cochain;
    /// callers constructing from unchecked input must validate first.
    pub fn add_entry(&mut self, key: CochainKey, value: Vec<Scalar>) {
        if is_zero_vec(&value) {
            return;
        }
        let target = self.value_parity(&key);
        for (i, x) in value.iter().enumerate() {
            assert!(
                x.is_zero() || self.space.parity_of(i) == target,
                "cochain value violates the declared parity"
            );
        }
        match self.values.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                for (a, b) in o.get_mut().iter_mut().zip(&value) {
                    *a += b;
                }
                if is_zero_vec(o.get()) {
                    o.remove();
                }
            }
        }
    }

    /// A level-0 cochain from a parity-homogeneous linear map.
    pub fn from_linear_map(map: &LinearMap, arity: usize) -> Result<Self> {
        let parity = map.declared_parity().ok_or(Error::UndeclaredParity)?;
        let mut out = Cochain::zero(map.space().clone(), arity, 0, parity);
        for j in 0..map.space().dim() {
            let col = map.column(j);
            if !is_zero_vec(&col) {
                out.add_entry((Vec::new(), j), col);
            }
        }
        Ok(out)
    }

    /// The level-0 cochain back as a linear map.
    pub fn to_linear_map(&self) -> Result<LinearMap> {
        if self.level != 0 {
            return Err(Error::LevelMismatch {
                expected: 0,
                found: self.level,
            });
        }
        let d = self.space.dim();
        let mut m = Matrix::zero(d, d);
        for ((_, j), value) in &self.values {
            for (r, x) in value.iter().enumerate() {
                m.set(r, *j, x.clone());
            }
        }
        LinearMap::new(self.space.clone(), m, Some(self.parity))
    }

    /// Build a fully super-skew level-1 cochain from raw n-linear entries
    /// (the bracket entry schema): each entry is expanded over the skew
    /// orbit of its argument tuple, and colliding entries must agree.
    pub fn from_skew_entries(
        space: SuperSpace,
        arity: usize,
        parity: Parity,
        entries: impl IntoIterator<Item = (Vec<usize>, Vec<Scalar>)>,
    ) -> Result<Self> {
        let mut out = Cochain::zero(space.clone(), arity, 1, parity);
        let mut stored: BTreeMap<Vec<usize>, Vec<Scalar>> = BTreeMap::new();
        for (args, mut value) in entries {
            if args.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: args.len(),
                });
            }
            if value.len() != space.dim() {
                return Err(Error::DimensionMismatch {
                    expected: space.dim(),
                    found: value.len(),
                });
            }
            match canonicalize_tuple(&args, &space)? {
                None => {
                    if !is_zero_vec(&value) {
                        return Err(Error::SkewConflict { args });
                    }
                }
                Some((sign, canon)) => {
                    crate::linalg::scale_sign(&mut value, sign);
                    let target = (parity + space.tuple_parity(canon.indices())) % 2;
                    for (i, x) in value.iter().enumerate() {
                        if !x.is_zero() && space.parity_of(i) != target {
                            return Err(Error::CochainGrading {
                                key: format!("{args:?}"),
                            });
                        }
                    }
                    if let Some(existing) = stored.get(canon.indices()) {
                        if existing != &value {
                            return Err(Error::SkewConflict { args });
                        }
                    } else if !is_zero_vec(&value) {
                        stored.insert(canon.indices().to_vec(), value);
                    }
                }
            }
        }
        // Expand each canonical n-tuple over its permutation orbit into
        // (wedge, point) storage.
        for (canon, value) in &stored {
            let mut seen_keys: BTreeMap<CochainKey, Vec<Scalar>> = BTreeMap::new();
            for_each_permutation(canon, |t| {
                let (s_t, _) = canonicalize_tuple(t, &space)
                    .expect("in range")
                    .expect("orbit of a stored tuple is nonzero");
                let (s_w, wedge) = canonicalize_tuple(&t[..arity - 1], &space)
                    .expect("in range")
                    .expect("sub-tuple of a nonzero tuple is nonzero");
                let key = (vec![wedge.indices().to_vec()], t[arity - 1]);
                let mut v = value.clone();
                crate::linalg::scale_sign(&mut v, s_t * s_w);
                seen_keys.entry(key).or_insert(v);
            });
            for (key, v) in seen_keys {
                out.add_entry(key, v);
            }
        }
        Ok(out)
    }

    /// The bracket of an algebra as a level-1 even cochain.
    pub fn from_bracket(alg: &HomNambuSuperalgebra) -> Self {
        let entries: Vec<(Vec<usize>, Vec<Scalar>)> = alg
            .bracket()
            .canonical_entries()
            .map(|(t, v)| (t.clone(), v.clone()))
            .collect();
        Cochain::from_skew_entries(alg.space().clone(), alg.arity(), 0, entries)
            .expect("a bracket is a valid skew cochain")
    }

    /// Value at canonical storage key, zero when absent.
    pub fn value_at(&self, key: &CochainKey) -> Vec<Scalar> {
        self.values
            .get(key)
            .cloned()
            .unwrap_or_else(|| zero_vec(self.space.dim()))
    }

    /// Evaluate at raw wedge tuples and a basis point (canonicalizing each
    /// wedge slot with its Koszul sign).
    pub fn eval_basis(&self, wedges: &[&[usize]], point: usize) -> Vec<Scalar> {
        assert_eq!(wedges.len(), self.level, "wedge slot count mismatch");
        let mut sign = 1i64;
        let mut canon_keys = Vec::with_capacity(self.level);
        for w in wedges {
            match canonicalize_tuple(w, &self.space).expect("in range") {
                None => return zero_vec(self.space.dim()),
                Some((s, t)) => {
                    sign *= s;
                    canon_keys.push(t.indices().to_vec());
                }
            }
        }
        let mut v = self.value_at(&(canon_keys, point));
        crate::linalg::scale_sign(&mut v, sign);
        v
    }

    /// Evaluate a level-1 cochain as an n-linear map at a raw tuple: the
    /// first n-1 indices form the wedge slot, the last the point.
    pub fn eval_split(&self, wedge_raw: &[usize], point: usize) -> Vec<Scalar> {
        self.eval_basis(&[wedge_raw], point)
    }

    /// General multilinear evaluation over mixed wedge/point arguments.
    pub fn eval_slots(&self, wedges: &[WedgeSlot<'_>], point: &PointSlot<'_>) -> Vec<Scalar> {
        assert_eq!(wedges.len(), self.level, "wedge slot count mismatch");
        let d = self.space.dim();
        let mut out = zero_vec(d);
        'entries: for ((keys, j), value) in &self.values {
            let mut coeff = match point {
                PointSlot::Basis(b) => {
                    if b != j {
                        continue 'entries;
                    }
                    Scalar::from_integer(1.into())
                }
                PointSlot::Vector(v) => {
                    if v[*j].is_zero() {
                        continue 'entries;
                    }
                    v[*j].clone()
                }
            };
            for (slot, key) in wedges.iter().zip(keys) {
                match slot {
                    WedgeSlot::Tuple(t) => {
                        if t != &key.as_slice() {
                            continue 'entries;
                        }
                    }
                    WedgeSlot::Element(e) => {
                        let c = e.coeff(key);
                        if c.is_zero() {
                            continue 'entries;
                        }
                        coeff *= c;
                    }
                }
            }
            crate::linalg::axpy(&mut out, &coeff, value);
        }
        out
    }

    /// Evaluate a level-1 cochain on n general vectors.
    pub fn eval_vectors(&self, args: &[Vec<Scalar>]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.arity, "argument count mismatch");
        let w = wedge_of_vectors(&self.space, &args[..self.arity - 1]);
        self.eval_slots(
            &[WedgeSlot::Element(&w)],
            &PointSlot::Vector(&args[self.arity - 1]),
        )
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.space, other.space);
        assert_eq!((self.level, self.parity), (other.level, other.parity));
        let mut out = self.clone();
        for (k, v) in &other.values {
            out.add_entry(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        let mut out = Cochain::zero(self.space.clone(), self.arity, self.level, self.parity);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.values {
            out.values
                .insert(k.clone(), v.iter().map(|x| x * c).collect());
        }
        out
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&Scalar::from_integer((-1).into()))
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.neg())
    }

    /// Map stored values through a linear map (composition on the output).
    pub fn map_values(&self, f: &LinearMap) -> Cochain {
        let mut out = Cochain::zero(self.space.clone(), self.arity, self.level, self.parity);
        for (k, v) in &self.values {
            let w = f.apply(v);
            if !is_zero_vec(&w) {
                out.values.insert(k.clone(), w);
            }
        }
        out
    }

    /// Whether the level-1 cochain is super-skew across its last two slots
    /// (and hence, with the wedge storage, fully super-skew in all n slots).
    pub fn is_fully_skew(&self) -> bool {
        if self.level != 1 {
            return false;
        }
        let d = self.space.dim();
        let n = self.arity;
        let mut ok = true;
        for_each_index_tuple(d, n, |t| {
            if !ok {
                return;
            }
            let value = self.eval_split(&t[..n - 1], t[n - 1]);
            let mut swapped = t.to_vec();
            swapped.swap(n - 2, n - 1);
            let p = self.space.parity_of(t[n - 2]);
            let q = self.space.parity_of(t[n - 1]);
            let mut other = self.eval_split(&swapped[..n - 1], swapped[n - 1]);
            crate::linalg::scale_sign(&mut other, -sign_pow((p & q) as usize));
            if value != other {
                ok = false;
            }
        });
        ok
    }

    /// Whether the cochain commutes with the twist: applying the twist to
    /// every argument equals applying it to the value, on all stored keys.
    pub fn is_alpha_compatible(&self, alg: &HomNambuSuperalgebra) -> bool {
        assert_eq!(alg.space(), &self.space);
        let alpha = alg.alpha();
        let wb = WedgeBasis::new(&self.space, self.arity - 1);
        let induced = wb.induced_matrix(alpha);
        let mut twisted_wedge: BTreeMap<Vec<usize>, WedgeElement> = BTreeMap::new();
        for (i, t) in wb.tuples().iter().enumerate() {
            twisted_wedge.insert(
                t.indices().to_vec(),
                WedgeElement::from_dense(&wb, &induced.col(i)),
            );
        }
        let keys: Vec<CochainKey> = self.values.keys().cloned().collect();
        for key in keys {
            let left = alpha.apply(&self.value_at(&key));
            let slots: Vec<WedgeSlot<'_>> = key
                .0
                .iter()
                .map(|t| WedgeSlot::Element(&twisted_wedge[t]))
                .collect();
            let col = alpha.column(key.1);
            let right = self.eval_slots(&slots, &PointSlot::Vector(&col));
            if left != right {
                return false;
            }
        }
        true
    }

    /// Flatten into coordinates over (wedge basis)^level x dim x dim.
    pub fn to_vec(&self, wb: &WedgeBasis) -> Vec<Scalar> {
        let d = self.space.dim();
        let w = wb.size();
        let mut out = zero_vec(w.pow(self.level as u32) * d * d);
        for ((keys, j), value) in &self.values {
            let mut base = 0usize;
            for t in keys {
                base = base * w + wb.index_of(t).expect("canonical tuple");
            }
            let offset = (base * d + j) * d;
            for (r, x) in value.iter().enumerate() {
                out[offset + r] = x.clone();
            }
        }
        out
    }

    /// Inverse of `to_vec`.
    pub fn from_vec(
        space: SuperSpace,
        arity: usize,
        level: usize,
        parity: Parity,
        wb: &WedgeBasis,
        coords: &[Scalar],
    ) -> Self {
        let d = space.dim();
        let w = wb.size();
        assert_eq!(coords.len(), w.pow(level as u32) * d * d);
        let mut out = Cochain::zero(space, arity, level, parity);
        let combos = w.pow(level as u32);
        for base in 0..combos {
            let mut rem = base;
            let mut keys = vec![Vec::new(); level];
            for slot in (0..level).rev() {
                keys[slot] = wb.tuple(rem % w).indices().to_vec();
                rem /= w;
            }
            for j in 0..d {
                let offset = (base * d + j) * d;
                let value = coords[offset..offset + d].to_vec();
                if !is_zero_vec(&value) {
                    out.add_entry((keys.clone(), j), value);
                }
            }
        }
        out
    }

    /// Canonical n-tuple entries of a fully skew level-1 cochain, suitable
    /// for the bracket entry schema.
    pub fn skew_canonical_entries(&self) -> Vec<(Vec<usize>, Vec<Scalar>)> {
        assert_eq!(self.level, 1);
        let full = WedgeBasis::new(&self.space, self.arity);
        let mut out = Vec::new();
        for t in full.tuples() {
            let v = self.eval_split(&t.indices()[..self.arity - 1], t.indices()[self.arity - 1]);
            if !is_zero_vec(&v) {
                out.push((t.indices().to_vec(), v));
            }
        }
        out
    }
}

/// Admissibility constraints imposed on level-1 cochains of the
/// deformation complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CochainConstraint {
    /// The cochain must commute with the twist on all arguments.
    pub require_alpha_compat: bool,
    /// The cochain must be super-skew across its last slot as well (and
    /// hence fully skew, given the wedge storage).
    pub require_super_skew_last_slot: bool,
}

impl CochainConstraint {
    /// The constraints satisfied by deformation terms.
    pub const DEFORMATION: CochainConstraint = CochainConstraint {
        require_alpha_compat: true,
        require_super_skew_last_slot: true,
    };

    /// No constraints (the domain of the generic operator).
    pub const NONE: CochainConstraint = CochainConstraint {
        require_alpha_compat: false,
        require_super_skew_last_slot: false,
    };

    /// Check a level-1 cochain against the selected constraints.
    pub fn check(&self, alg: &HomNambuSuperalgebra, f: &Cochain) -> Result<()> {
        if self.require_super_skew_last_slot && !f.is_fully_skew() {
            return Err(Error::CochainSkew {
                key: "level-1 cochain must be super-skew in all slots".into(),
            });
        }
        if self.require_alpha_compat && !f.is_alpha_compatible(alg) {
            return Err(Error::NotAlphaCommuting);
        }
        Ok(())
    }
}

/// The coboundary of a parity-homogeneous twist-commuting linear map:
/// the signed sum over slots of the bracket with the map inserted, minus
/// the map of the bracket. For even maps this is the plain slot sum.
pub fn delta0(alg: &HomNambuSuperalgebra, phi: &LinearMap) -> Result<Cochain> {
    let parity = phi.declared_parity().ok_or(Error::UndeclaredParity)?;
    if !phi.commutes_with(alg.alpha()) {
        return Err(Error::NotAlphaCommuting);
    }
    Ok(delta0_unchecked(alg, phi, parity))
}

pub(crate) fn delta0_unchecked(
    alg: &HomNambuSuperalgebra,
    phi: &LinearMap,
    parity: Parity,
) -> Cochain {
    let space = alg.space();
    let d = space.dim();
    let n = alg.arity();
    let phi_cols: Vec<Vec<Scalar>> = (0..d).map(|j| phi.column(j)).collect();
    let full = WedgeBasis::new(space, n);
    let mut entries = Vec::new();
    for t in full.tuples() {
        let v = delta0_at(alg, &phi_cols, phi, parity, t.indices());
        if !is_zero_vec(&v) {
            entries.push((t.indices().to_vec(), v));
        }
    }
    Cochain::from_skew_entries(space.clone(), n, parity, entries)
        .expect("coboundary of a homogeneous map is a graded skew cochain")
}

fn delta0_at(
    alg: &HomNambuSuperalgebra,
    phi_cols: &[Vec<Scalar>],
    phi: &LinearMap,
    parity: Parity,
    tuple: &[usize],
) -> Vec<Scalar> {
    let space = alg.space();
    let n = alg.arity();
    let mut out = zero_vec(space.dim());
    for i in 0..n {
        let mut args: Vec<BracketArg<'_>> = Vec::with_capacity(n);
        for (j, &x) in tuple.iter().enumerate() {
            if j == i {
                args.push(BracketArg::Vector(&phi_cols[x]));
            } else {
                args.push(BracketArg::Basis(x));
            }
        }
        let term = alg.bracket().eval_mixed(&args);
        let prefix = space.tuple_parity(&tuple[..i]);
        let sign = Scalar::from_integer(sign_pow((parity & prefix) as usize).into());
        crate::linalg::axpy(&mut out, &sign, &term);
    }
    let bracket_value = alg.bracket_eval(tuple).expect("in range");
    let minus_one = Scalar::from_integer((-1).into());
    crate::linalg::axpy(&mut out, &minus_one, &phi.apply(&bracket_value));
    out
}

/// Value of the level-1 coboundary operator at one raw argument tuple
/// (xs of length n-1, ys of length n), in n-linear form.
///
/// For even cochains this is the displayed infinitesimal identity; for odd
/// cochains Koszul signs in the cochain parity are inserted where the
/// cochain passes arguments.
pub fn delta1_at(
    alg: &HomNambuSuperalgebra,
    f: &Cochain,
    xs: &[usize],
    ys: &[usize],
) -> Vec<Scalar> {
    let space = alg.space();
    let d = space.dim();
    let n = alg.arity();
    let pf = f.parity();
    let px = space.tuple_parity(xs);
    let alpha_cols: Vec<Vec<Scalar>> = (0..d).map(|j| alg.alpha().column(j)).collect();

    let mut out = zero_vec(d);

    // [a x_1, ..., a x_{n-1}, f(y_1..y_n)], with the cochain passing the xs.
    let f_y = f.eval_split(&ys[..n - 1], ys[n - 1]);
    let mut args: Vec<BracketArg<'_>> = xs
        .iter()
        .map(|&x| BracketArg::Vector(&alpha_cols[x]))
        .collect();
    args.push(BracketArg::Vector(&f_y));
    let term_a = alg.bracket().eval_mixed(&args);
    let sign_a = Scalar::from_integer(sign_pow((pf & px) as usize).into());
    crate::linalg::axpy(&mut out, &sign_a, &term_a);

    // f(a x_1, ..., a x_{n-1}, [y_1..y_n]).
    let alpha_xs: Vec<Vec<Scalar>> = xs.iter().map(|&x| alpha_cols[x].clone()).collect();
    let wedge_alpha_x = wedge_of_vectors(space, &alpha_xs);
    let inner_y = alg.bracket_eval(ys).expect("in range");
    let term_b = f.eval_slots(
        &[WedgeSlot::Element(&wedge_alpha_x)],
        &PointSlot::Vector(&inner_y),
    );
    crate::linalg::axpy(&mut out, &Scalar::from_integer(1.into()), &term_b);

    for i in 0..n {
        let prefix = space.tuple_parity(&ys[..i]);
        let mut nested_args = xs.to_vec();
        nested_args.push(ys[i]);
        let nested = alg.bracket_eval(&nested_args).expect("in range");

        // -(-1)^(px py<) (-1)^(pf py<) [a y_1, .., f(xs, y_i), .., a y_n]
        let f_xy = f.eval_split(xs, ys[i]);
        let mut bargs: Vec<BracketArg<'_>> = Vec::with_capacity(n);
        for (j, &y) in ys.iter().enumerate() {
            if j == i {
                bargs.push(BracketArg::Vector(&f_xy));
            } else {
                bargs.push(BracketArg::Vector(&alpha_cols[y]));
            }
        }
        let term_c = alg.bracket().eval_mixed(&bargs);
        let exp_c = ((px & prefix) + (pf & prefix)) as usize;
        let sign_c = Scalar::from_integer((-sign_pow(exp_c)).into());
        crate::linalg::axpy(&mut out, &sign_c, &term_c);

        // -(-1)^(px py<) f(a y_1, .., [xs, y_i], .., a y_n)
        let term_d = if i == n - 1 {
            let alpha_ys: Vec<Vec<Scalar>> =
                ys[..n - 1].iter().map(|&y| alpha_cols[y].clone()).collect();
            let wedge_alpha_y = wedge_of_vectors(space, &alpha_ys);
            f.eval_slots(
                &[WedgeSlot::Element(&wedge_alpha_y)],
                &PointSlot::Vector(&nested),
            )
        } else {
            let mut factors: Vec<Vec<Scalar>> = Vec::with_capacity(n - 1);
            for (j, &y) in ys[..n - 1].iter().enumerate() {
                if j == i {
                    factors.push(nested.clone());
                } else {
                    factors.push(alpha_cols[y].clone());
                }
            }
            let wedge_mixed = wedge_of_vectors(space, &factors);
            f.eval_slots(
                &[WedgeSlot::Element(&wedge_mixed)],
                &PointSlot::Vector(&alpha_cols[ys[n - 1]]),
            )
        };
        let sign_d = Scalar::from_integer((-sign_pow((px & prefix) as usize)).into());
        crate::linalg::axpy(&mut out, &sign_d, &term_d);
    }
    out
}

/// The level-1 coboundary operator on a fully skew, twist-compatible
/// cochain, as a level-2 cochain on canonical arguments.
pub fn delta1(alg: &HomNambuSuperalgebra, f: &Cochain) -> Result<Cochain> {
    if f.level() != 1 {
        return Err(Error::LevelMismatch {
            expected: 1,
            found: f.level(),
        });
    }
    CochainConstraint::DEFORMATION.check(alg, f)?;
    Ok(delta1_unchecked(alg, f))
}

fn delta1_unchecked(alg: &HomNambuSuperalgebra, f: &Cochain) -> Cochain {
    let space = alg.space();
    let n = alg.arity();
    let wb = WedgeBasis::new(space, n - 1);
    let d = space.dim();
    let mut out = Cochain::zero(space.clone(), n, 2, f.parity());
    for t1 in wb.tuples() {
        for t2 in wb.tuples() {
            for j in 0..d {
                let mut ys = t2.indices().to_vec();
                ys.push(j);
                let v = delta1_at(alg, f, t1.indices(), &ys);
                if !is_zero_vec(&v) {
                    out.add_entry((vec![t1.indices().to_vec(), t2.indices().to_vec()], j), v);
                }
            }
        }
    }
    out
}

/// Whether the level-1 coboundary of a cochain vanishes identically,
/// evaluated on all raw argument tuples (not only canonical ones).
pub fn delta1_is_zero(alg: &HomNambuSuperalgebra, f: &Cochain) -> bool {
    let space = alg.space();
    let d = space.dim();
    let n = alg.arity();
    let wb = WedgeBasis::new(space, n - 1);
    let mut ok = true;
    for t1 in wb.tuples() {
        if !ok {
            break;
        }
        for_each_index_tuple(d, n, |ys| {
            if !ok {
                return;
            }
            if !is_zero_vec(&delta1_at(alg, f, t1.indices(), ys)) {
                ok = false;
            }
        });
    }
    ok
}

/// The generic level-m coboundary operator built from the exterior-power
/// actions; no twist-compatibility is required of the input.
pub fn delta_m(alg: &HomNambuSuperalgebra, f: &Cochain) -> Cochain {
    let m = f.level();
    assert!(m >= 1, "the generic operator starts at level 1");
    let space = alg.space();
    let d = space.dim();
    let n = alg.arity();
    let pf = f.parity();
    let wb = WedgeBasis::new(space, n - 1);
    let w = wb.size();
    if w == 0 {
        return Cochain::zero(space.clone(), n, m + 1, pf);
    }
    let alpha = alg.alpha();
    let alpha_m = alg.alpha_pow(m);
    let alpha_cols: Vec<Vec<Scalar>> = (0..d).map(|j| alpha.column(j)).collect();
    let alpha_m_cols: Vec<Vec<Scalar>> = (0..d).map(|j| alpha_m.column(j)).collect();

    // a(X) for every basis tuple, as a wedge element.
    let induced = wb.induced_matrix(alpha);
    let alpha_wedge: Vec<WedgeElement> = (0..w)
        .map(|i| WedgeElement::from_dense(&wb, &induced.col(i)))
        .collect();

    // Parity of each basis tuple.
    let par: Vec<Parity> = wb.tuples().iter().map(|t| t.parity(space)).collect();

    // [X_i, X_j]_a for every ordered pair of basis tuples.
    let mut pair_bracket: Vec<Vec<WedgeElement>> = Vec::with_capacity(w);
    for i in 0..w {
        let xi = wb.tuple(i).indices();
        let mut row = Vec::with_capacity(w);
        for jdx in 0..w {
            let xj = wb.tuple(jdx).indices();
            let mut acc = WedgeElement::zero(space.clone(), n - 1);
            for k in 0..n - 1 {
                let mut args = xi.to_vec();
                args.push(xj[k]);
                let value = alg.bracket_eval(&args).expect("in range");
                if is_zero_vec(&value) {
                    continue;
                }
                let mut factors: Vec<Vec<Scalar>> = Vec::with_capacity(n - 1);
                for (l, &y) in xj.iter().enumerate() {
                    if l == k {
                        factors.push(value.clone());
                    } else {
                        factors.push(alpha_cols[y].clone());
                    }
                }
                let prefix = space.tuple_parity(&xj[..k]);
                let sign = sign_pow((par[i] & prefix) as usize);
                let term =
                    wedge_of_vectors(space, &factors).scale(&Scalar::from_integer(sign.into()));
                acc = acc.add(&term);
            }
            row.push(acc);
        }
        pair_bracket.push(row);
    }

    let mut out = Cochain::zero(space.clone(), n, m + 1, pf);
    let mut combo = vec![0usize; m + 1];
    loop {
        for z in 0..d {
            let v = delta_m_at(
                alg,
                f,
                &combo,
                z,
                &wb,
                &par,
                &alpha_wedge,
                &pair_bracket,
                &alpha_m_cols,
            );
            if !is_zero_vec(&v) {
                let keys: Vec<Vec<usize>> = combo
                    .iter()
                    .map(|&i| wb.tuple(i).indices().to_vec())
                    .collect();
                out.add_entry((keys, z), v);
            }
        }
        let mut pos = m + 1;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            combo[pos] += 1;
            if combo[pos] < w {
                break;
            }
            combo[pos] = 0;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn delta_m_at(
    alg: &HomNambuSuperalgebra,
    f: &Cochain,
    combo: &[usize],
    z: usize,
    wb: &WedgeBasis,
    par: &[Parity],
    alpha_wedge: &[WedgeElement],
    pair_bracket: &[Vec<WedgeElement>],
    alpha_m_cols: &[Vec<Scalar>],
) -> Vec<Scalar> {
    let space = alg.space();
    let d = space.dim();
    let n = alg.arity();
    let m = f.level();
    let pf = f.parity();
    let alpha_z_col = {
        let mut v = zero_vec(d);
        v[z] = Scalar::from_integer(1.into());
        alg.alpha().apply(&v)
    };
    let mut out = zero_vec(d);

    // First sum: remove slot i, replace slot j by [X_i, X_j]_a, twist the
    // rest and the point.
    for i in 1..=m {
        for j in (i + 1)..=(m + 1) {
            let between: u8 = combo[i..j - 1].iter().map(|&t| par[t]).sum::<u8>() % 2;
            let exp = (par[combo[i - 1]] & between) as usize;
            let sign = sign_pow(i) * sign_pow(exp);
            let bracket_elem = &pair_bracket[combo[i - 1]][combo[j - 1]];
            if bracket_elem.is_zero() {
                continue;
            }
            let mut slots: Vec<WedgeSlot<'_>> = Vec::with_capacity(m);
            for (pos, &t) in combo.iter().enumerate() {
                let pos1 = pos + 1;
                if pos1 == i {
                    continue;
                }
                if pos1 == j {
                    slots.push(WedgeSlot::Element(bracket_elem));
                } else {
                    slots.push(WedgeSlot::Element(&alpha_wedge[t]));
                }
            }
            let term = f.eval_slots(&slots, &PointSlot::Vector(&alpha_z_col));
            crate::linalg::axpy(&mut out, &Scalar::from_integer(sign.into()), &term);
        }
    }

    // Second sum: remove slot i, twist the rest, act on the point.
    for i in 1..=(m + 1) {
        let after: u8 = combo[i..].iter().map(|&t| par[t]).sum::<u8>() % 2;
        let exp = (par[combo[i - 1]] & after) as usize;
        let sign = sign_pow(i) * sign_pow(exp);
        let xi = wb.tuple(combo[i - 1]).indices();
        let mut args = xi.to_vec();
        args.push(z);
        let acted = alg.bracket_eval(&args).expect("in range");
        if is_zero_vec(&acted) {
            continue;
        }
        let mut slots: Vec<WedgeSlot<'_>> = Vec::with_capacity(m);
        for (pos, &t) in combo.iter().enumerate() {
            if pos + 1 == i {
                continue;
            }
            slots.push(WedgeSlot::Element(&alpha_wedge[t]));
        }
        let term = f.eval_slots(&slots, &PointSlot::Vector(&acted));
        crate::linalg::axpy(&mut out, &Scalar::from_integer(sign.into()), &term);
    }

    // Third sum: remove slot i untwisted, bracket the m-times twisted
    // factors of X_i against the cochain value.
    for i in 1..=(m + 1) {
        let before: u8 = combo[..i - 1].iter().map(|&t| par[t]).sum::<u8>() % 2;
        let exp = (par[combo[i - 1]] & ((pf + before) % 2)) as usize;
        let sign = sign_pow(i + 1) * sign_pow(exp);
        let mut slots: Vec<WedgeSlot<'_>> = Vec::with_capacity(m);
        for (pos, &t) in combo.iter().enumerate() {
            if pos + 1 == i {
                continue;
            }
            slots.push(WedgeSlot::Tuple(wb.tuple(t).indices()));
        }
        let value = f.eval_slots(&slots, &PointSlot::Basis(z));
        if is_zero_vec(&value) {
            continue;
        }
        let xi = wb.tuple(combo[i - 1]).indices();
        let mut bargs: Vec<BracketArg<'_>> = xi
            .iter()
            .map(|&x| BracketArg::Vector(&alpha_m_cols[x]))
            .collect();
        bargs.push(BracketArg::Vector(&value));
        let term = alg.bracket().eval_mixed(&bargs);
        crate::linalg::axpy(&mut out, &Scalar::from_integer(sign.into()), &term);
    }

    // Last term: the cochain dotted into the factors of X_{m+1}, bracketed
    // with the m-times twisted remaining factors and point.
    {
        let last = wb.tuple(combo[m]).indices();
        let front: u8 = combo[..m].iter().map(|&t| par[t]).sum::<u8>() % 2;
        let weight = (pf + front) % 2;
        let alpha_m_z = {
            let mut v = zero_vec(d);
            v[z] = Scalar::from_integer(1.into());
            alg.alpha_pow(m).apply(&v)
        };
        for l in 0..n - 1 {
            let slots: Vec<WedgeSlot<'_>> = combo[..m]
                .iter()
                .map(|&t| WedgeSlot::Tuple(wb.tuple(t).indices()))
                .collect();
            let value = f.eval_slots(&slots, &PointSlot::Basis(last[l]));
            if is_zero_vec(&value) {
                continue;
            }
            let prefix = space.tuple_parity(&last[..l]);
            let exp = (weight & prefix) as usize;
            let sign = sign_pow(m) * sign_pow(exp);
            let mut bargs: Vec<BracketArg<'_>> = Vec::with_capacity(n);
            for (pos, &x) in last.iter().enumerate() {
                if pos == l {
                    bargs.push(BracketArg::Vector(&value));
                } else {
                    bargs.push(BracketArg::Vector(&alpha_m_cols[x]));
                }
            }
            bargs.push(BracketArg::Vector(&alpha_m_z));
            let term = alg.bracket().eval_mixed(&bargs);
            crate::linalg::axpy(&mut out, &Scalar::from_integer(sign.into()), &term);
        }
    }

    out
}

/// Index layout of the admissible level-1 cochain unknowns for one parity:
/// (wedge index, point index, target coordinate) with the grading-allowed
/// target coordinates only.
fn cocycle_unknowns(
    alg: &HomNambuSuperalgebra,
    wb: &WedgeBasis,
    parity: Parity,
) -> Vec<(usize, usize, usize)> {
    let space = alg.space();
    let d = space.dim();
    let mut out = Vec::new();
    for (wi, t) in wb.tuples().iter().enumerate() {
        for j in 0..d {
            let target = (parity + t.parity(space) + space.parity_of(j)) % 2;
            for r in 0..d {
                if space.parity_of(r) == target {
                    out.push((wi, j, r));
                }
            }
        }
    }
    out
}

fn unit_cochain(
    alg: &HomNambuSuperalgebra,
    wb: &WedgeBasis,
    parity: Parity,
    unknown: (usize, usize, usize),
) -> Cochain {
    let (wi, j, r) = unknown;
    let mut c = Cochain::zero(alg.space().clone(), alg.arity(), 1, parity);
    let mut v = zero_vec(alg.dim());
    v[r] = Scalar::from_integer(1.into());
    c.add_entry((vec![wb.tuple(wi).indices().to_vec()], j), v);
    c
}

/// Residual rows imposed on a level-1 cochain of the deformation complex:
/// full super-skewness, twist compatibility, and the vanishing of the
/// level-1 coboundary on all raw tuples.
fn cocycle_residual(alg: &HomNambuSuperalgebra, wb: &WedgeBasis, f: &Cochain) -> Vec<Scalar> {
    let space = alg.space();
    let d = space.dim();
    let n = alg.arity();
    let mut out = Vec::new();

    // Skew across the last two slots on all raw tuples.
    for_each_index_tuple(d, n, |t| {
        let value = f.eval_split(&t[..n - 1], t[n - 1]);
        let mut swapped = t.to_vec();
        swapped.swap(n - 2, n - 1);
        let p = space.parity_of(t[n - 2]);
        let q = space.parity_of(t[n - 1]);
        let mut other = f.eval_split(&swapped[..n - 1], swapped[n - 1]);
        crate::linalg::scale_sign(&mut other, -sign_pow((p & q) as usize));
        for (a, b) in value.iter().zip(&other) {
            out.push(a - b);
        }
    });

    // Twist compatibility on all canonical keys.
    let alpha = alg.alpha();
    let induced = wb.induced_matrix(alpha);
    for (wi, t) in wb.tuples().iter().enumerate() {
        let twisted = WedgeElement::from_dense(wb, &induced.col(wi));
        for j in 0..d {
            let left = alpha.apply(&f.value_at(&(vec![t.indices().to_vec()], j)));
            let col = alpha.column(j);
            let right = f.eval_slots(&[WedgeSlot::Element(&twisted)], &PointSlot::Vector(&col));
            for (a, b) in left.iter().zip(&right) {
                out.push(a - b);
            }
        }
    }

    // Level-1 coboundary on all raw tuples.
    for t1 in wb.tuples() {
        for_each_index_tuple(d, n, |ys| {
            out.extend(delta1_at(alg, f, t1.indices(), ys));
        });
    }
    out
}

/// Kernel of the level-1 coboundary on admissible level-1 cochains of one
/// parity (super-skew, graded, twist-compatible), as a subspace of the
/// cochain coordinates.
pub fn def_cocycle_space(alg: &HomNambuSuperalgebra, parity: Parity) -> SubspaceBasis {
    let wb = WedgeBasis::new(alg.space(), alg.arity() - 1);
    let d = alg.dim();
    let unknowns = cocycle_unknowns(alg, &wb, parity);
    let columns: Vec<Vec<Scalar>> = unknowns
        .iter()
        .map(|&u| {
            let f = unit_cochain(alg, &wb, parity, u);
            cocycle_residual(alg, &wb, &f)
        })
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    let a = Matrix::from_cols(rows, &columns);
    let kernel = kernel_basis(&a);
    let ambient = wb.size() * d * d;
    let vectors: Vec<Vec<Scalar>> = kernel
        .vectors()
        .iter()
        .map(|coeffs| {
            let mut v = zero_vec(ambient);
            for (c, &(wi, j, r)) in coeffs.iter().zip(&unknowns) {
                v[(wi * d + j) * d + r] = c.clone();
            }
            v
        })
        .collect();
    SubspaceBasis::new(ambient, vectors).expect("kernel vectors independent")
}

/// Image of the level-0 coboundary over all parity-homogeneous
/// twist-commuting maps of one parity, echelonized over the cochain
/// coordinates.
pub fn def_coboundary_space(alg: &HomNambuSuperalgebra, parity: Parity) -> SubspaceBasis {
    let wb = WedgeBasis::new(alg.space(), alg.arity() - 1);
    let d = alg.dim();
    let ambient = wb.size() * d * d;
    let maps = alpha_commuting_maps(alg, parity);
    let images: Vec<Vec<Scalar>> = maps
        .vectors()
        .iter()
        .map(|v| {
            let phi = LinearMap::from_vec(alg.space().clone(), v, Some(parity))
                .expect("block-restricted coordinates");
            delta0_unchecked(alg, &phi, parity).to_vec(&wb)
        })
        .collect();
    SubspaceBasis::from_span(ambient, &images)
}

/// Dimension of the deformation cohomology at one parity: cocycles modulo
/// coboundaries. Containment of the coboundaries in the cocycles is
/// asserted; a violation is an implementation bug and panics.
pub fn def_cohomology_dim(alg: &HomNambuSuperalgebra, parity: Parity) -> usize {
    let z = def_cocycle_space(alg, parity);
    let b = def_coboundary_space(alg, parity);
    quotient_dim(&z, &b).expect("coboundaries must be cocycles")
}

/// Summary of the deformation cohomology of an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologySummary {
    pub cocycle_even: usize,
    pub cocycle_odd: usize,
    pub coboundary_even: usize,
    pub coboundary_odd: usize,
    pub h_even: usize,
    pub h_odd: usize,
    pub rigid: bool,
}

/// Z, B and H dimensions at both parities, plus the rigidity verdict
/// (driven by the even part; the odd dimension is reported alongside).
pub fn cohomology_summary(alg: &HomNambuSuperalgebra) -> CohomologySummary {
    let z0 = def_cocycle_space(alg, 0);
    let z1 = def_cocycle_space(alg, 1);
    let b0 = def_coboundary_space(alg, 0);
    let b1 = def_coboundary_space(alg, 1);
    let h_even = quotient_dim(&z0, &b0).expect("coboundaries must be cocycles");
    let h_odd = quotient_dim(&z1, &b1).expect("coboundaries must be cocycles");
    CohomologySummary {
        cocycle_even: z0.dim(),
        cocycle_odd: z1.dim(),
        coboundary_even: b0.dim(),
        coboundary_odd: b1.dim(),
        h_even,
        h_odd,
        rigid: h_even == 0,
    }
}

/// Rigidity criterion: the even deformation cohomology vanishes.
pub fn is_rigid(alg: &HomNambuSuperalgebra) -> bool {
    def_cohomology_dim(alg, 0) == 0
}

/// Dimensions of the generic complex at one level, computed on the
/// twist-compatible subcomplex (where the operator actually squares to
/// zero): compatible cochains, cocycles, coboundaries from the previous
/// level, and their quotient, per parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelReport {
    pub level: usize,
    pub compatible: [usize; 2],
    pub cocycles: [usize; 2],
    pub coboundaries: [usize; 2],
    pub cohomology: [usize; 2],
}

/// Z, B and H of the generic operator at the given level on the
/// twist-compatible subcomplex. Level 1 takes its coboundaries from the
/// level-0 operator on twist-commuting maps. Cost grows exponentially with
/// the level; intended for levels up to 3 at desk scale.
pub fn generic_level_report(alg: &HomNambuSuperalgebra, level: usize) -> LevelReport {
    assert!((1..=3).contains(&level), "levels 1 to 3 are supported");
    let wb = WedgeBasis::new(alg.space(), alg.arity() - 1);
    let d = alg.dim();
    let coords = wb.size().pow(level as u32) * d * d;
    let mut compatible = [0usize; 2];
    let mut cocycles = [0usize; 2];
    let mut coboundaries = [0usize; 2];
    let mut cohomology = [0usize; 2];
    for parity in [0u8, 1u8] {
        let basis = compatible_cochain_basis(alg, level, parity);
        compatible[parity as usize] = basis.len();
        // Kernel of the operator restricted to the compatible subspace.
        let columns: Vec<Vec<Scalar>> = basis.iter().map(|f| delta_m(alg, f).to_vec(&wb)).collect();
        let rows = columns.first().map_or(0, Vec::len);
        let a = Matrix::from_cols(rows, &columns);
        let kernel = kernel_basis(&a);
        let z_vectors: Vec<Vec<Scalar>> = kernel
            .vectors()
            .iter()
            .map(|coeffs| {
                let mut v = zero_vec(coords);
                for (c, f) in coeffs.iter().zip(&basis) {
                    if !c.is_zero() {
                        crate::linalg::axpy(&mut v, c, &f.to_vec(&wb));
                    }
                }
                v
            })
            .collect();
        let z = SubspaceBasis::from_span(coords, &z_vectors);
        let b = if level == 1 {
            def_coboundary_space(alg, parity)
        } else {
            let lower = compatible_cochain_basis(alg, level - 1, parity);
            let images: Vec<Vec<Scalar>> =
                lower.iter().map(|f| delta_m(alg, f).to_vec(&wb)).collect();
            SubspaceBasis::from_span(coords, &images)
        };
        cocycles[parity as usize] = z.dim();
        coboundaries[parity as usize] = b.dim();
        cohomology[parity as usize] = quotient_dim(&z, &b).expect("coboundaries must be cocycles");
    }
    LevelReport {
        level,
        compatible,
        cocycles,
        coboundaries,
        cohomology,
    }
}

/// Diagnostic comparing the direct level-1 operator with the generic
/// operator at level 1, on the admissible cochain space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorComparison {
    pub direct_kernel_even: usize,
    pub direct_kernel_odd: usize,
    pub generic_kernel_even: usize,
    pub generic_kernel_odd: usize,
    pub kernels_agree: bool,
}

/// Compare the kernels of the two level-1 operators on admissible
/// (super-skew, graded, twist-compatible) cochains of both parities.
pub fn compare_level_one_operators(alg: &HomNambuSuperalgebra) -> OperatorComparison {
    let wb = WedgeBasis::new(alg.space(), alg.arity() - 1);
    let d = alg.dim();
    let mut dims = [(0usize, 0usize); 2];
    let mut agree = true;
    for parity in [0u8, 1u8] {
        let direct = def_cocycle_space(alg, parity);
        // Same admissibility rows, but with the generic operator output.
        let unknowns = cocycle_unknowns(alg, &wb, parity);
        let columns: Vec<Vec<Scalar>> = unknowns
            .iter()
            .map(|&u| {
                let f = unit_cochain(alg, &wb, parity, u);
                let mut rows = Vec::new();
                // Reuse skew + compatibility residuals.
                let full = cocycle_residual_skew_compat(alg, &wb, &f);
                rows.extend(full);
                rows.extend(delta_m(alg, &f).to_vec(&wb));
                rows
            })
            .collect();
        let rows = columns.first().map_or(0, Vec::len);
        let a = Matrix::from_cols(rows, &columns);
        let kernel = kernel_basis(&a);
        let ambient = wb.size() * d * d;
        let vectors: Vec<Vec<Scalar>> = kernel
            .vectors()
            .iter()
            .map(|coeffs| {
                let mut v = zero_vec(ambient);
                for (c, &(wi, j, r)) in coeffs.iter().zip(&unknowns) {
                    v[(wi * d + j) * d + r] = c.clone();
                }
                v
            })
            .collect();
        let generic = SubspaceBasis::new(ambient, vectors).expect("independent");
        dims[parity as usize] = (direct.dim(), generic.dim());
        agree = agree && direct.contains_basis(&generic) && generic.contains_basis(&direct);
    }
    OperatorComparison {
        direct_kernel_even: dims[0].0,
        direct_kernel_odd: dims[1].0,
        generic_kernel_even: dims[0].1,
        generic_kernel_odd: dims[1].1,
        kernels_agree: agree,
    }
}

/// Basis of the twist-compatible cochains at one level and parity: the
/// kernel of `alpha . f - f . (alpha x ... x alpha)` over all
/// grading-allowed cochain coordinates.
///
/// The coboundary squares to zero exactly on this subspace (and maps it to
/// itself); unrestricted cochains of twisted algebras escape the theorem.
/// Cost grows as (wedge size)^level; callers keep the level small.
pub fn compatible_cochain_basis(
    alg: &HomNambuSuperalgebra,
    level: usize,
    parity: Parity,
) -> Vec<Cochain> {
    let wb = WedgeBasis::new(alg.space(), alg.arity() - 1);
    let d = alg.dim();
    let w = wb.size();
    let induced = wb.induced_matrix(alg.alpha());
    let twisted: Vec<WedgeElement> = (0..w)
        .map(|i| WedgeElement::from_dense(&wb, &induced.col(i)))
        .collect();

    let mut units: Vec<Cochain> = Vec::new();
    let combos = w.pow(level as u32);
    for base in 0..combos {
        let mut rem = base;
        let mut keys = vec![0usize; level];
        for slot in (0..level).rev() {
            keys[slot] = rem % w;
            rem /= w;
        }
        let mut p = parity;
        for &k in &keys {
            p = (p + wb.tuple(k).parity(alg.space())) % 2;
        }
        for j in 0..d {
            let target = (p + alg.space().parity_of(j)) % 2;
            for r in 0..d {
                if alg.space().parity_of(r) != target {
                    continue;
                }
                let mut f = Cochain::zero(alg.space().clone(), alg.arity(), level, parity);
                let mut v = zero_vec(d);
                v[r] = Scalar::from_integer(1.into());
                let tuple_keys: Vec<Vec<usize>> = keys
                    .iter()
                    .map(|&k| wb.tuple(k).indices().to_vec())
                    .collect();
                f.add_entry((tuple_keys, j), v);
                units.push(f);
            }
        }
    }

    let residual = |f: &Cochain| -> Vec<Scalar> {
        let mut out = Vec::new();
        for base in 0..combos {
            let mut rem = base;
            let mut keys = vec![0usize; level];
            for slot in (0..level).rev() {
                keys[slot] = rem % w;
                rem /= w;
            }
            let tuple_keys: Vec<Vec<usize>> = keys
                .iter()
                .map(|&k| wb.tuple(k).indices().to_vec())
                .collect();
            let slots: Vec<WedgeSlot<'_>> = keys
                .iter()
                .map(|&k| WedgeSlot::Element(&twisted[k]))
                .collect();
            for j in 0..d {
                let left = alg.alpha().apply(&f.value_at(&(tuple_keys.clone(), j)));
                let col = alg.alpha().column(j);
                let right = f.eval_slots(&slots, &PointSlot::Vector(&col));
                for (a, b) in left.iter().zip(&right) {
                    out.push(a - b);
                }
            }
        }
        out
    };

    let columns: Vec<Vec<Scalar>> = units.iter().map(residual).collect();
    let rows = columns.first().map_or(0, Vec::len);
    let a = Matrix::from_cols(rows, &columns);
    kernel_basis(&a)
        .vectors()
        .iter()
        .map(|coeffs| {
            let mut acc = Cochain::zero(alg.space().clone(), alg.arity(), level, parity);
            for (c, u) in coeffs.iter().zip(&units) {
                if !c.is_zero() {
                    acc = acc.add(&u.scale(c));
                }
            }
            acc
        })
        .collect()
}

/// Skewness and compatibility residual rows only (shared by the kernel
/// solvers for both level-1 operators).
fn cocycle_residual_skew_compat(
    alg: &HomNambuSuperalgebra,
    wb: &WedgeBasis,
    f: &Cochain,
) -> Vec<Scalar> {
    let space = alg.space();
    let d = space.dim();
    let n = alg.arity();
    let mut out = Vec::new();
    for_each_index_tuple(d, n, |t| {
        let value = f.eval_split(&t[..n - 1], t[n - 1]);
        let mut swapped = t.to_vec();
        swapped.swap(n - 2, n - 1);
        let p = space.parity_of(t[n - 2]);
        let q = space.parity_of(t[n - 1]);
        let mut other = f.eval_split(&swapped[..n - 1], swapped[n - 1]);
        crate::linalg::scale_sign(&mut other, -sign_pow((p & q) as usize));
        for (a, b) in value.iter().zip(&other) {
            out.push(a - b);
        }
    });
    let alpha = alg.alpha();
    let induced = wb.induced_matrix(alpha);
    for (wi, t) in wb.tuples().iter().enumerate() {
        let twisted = WedgeElement::from_dense(wb, &induced.col(wi));
        for j in 0..d {
            let left = alpha.apply(&f.value_at(&(vec![t.indices().to_vec()], j)));
            let col = alpha.column(j);
            let right = f.eval_slots(&[WedgeSlot::Element(&twisted)], &PointSlot::Vector(&col));
            for (a, b) in left.iter().zip(&right) {
                out.push(a - b);
            }
        }
    }
    out
}
