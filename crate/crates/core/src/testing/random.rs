//! Randomized generators for valid algebras, morphisms and cochains.
//!
//! Random algebras are produced from a pool of known-valid bases closed
//! under the verified constructions (change of basis, twist, direct sum),
//! so every generated algebra satisfies the defining identities while
//! exercising nontrivial twists and gradings. Generators are deterministic
//! for a seeded RNG.

use rand::Rng;

use crate::constructions;
use crate::linalg::{int, Matrix, Scalar};
use crate::superalgebra::{BracketTensor, HomNambuSuperalgebra, LinearMap, SuperSpace};

use super::fixtures;

/// Small integer scalar in `[-max_abs, max_abs]`.
pub fn random_scalar(rng: &mut impl Rng, max_abs: i64) -> Scalar {
    int(rng.random_range(-max_abs..=max_abs))
}

/// Random even map with small integer entries (not necessarily invertible
/// or a morphism).
pub fn random_even_map(rng: &mut impl Rng, space: &SuperSpace) -> LinearMap {
    let d = space.dim();
    let mut m = Matrix::zero(d, d);
    for i in 0..d {
        for j in 0..d {
            if space.parity_of(i) == space.parity_of(j) && rng.random_bool(0.6) {
                m.set(i, j, random_scalar(rng, 2));
            }
        }
    }
    LinearMap::even(space.clone(), m).expect("entries restricted to even blocks")
}

/// Random even invertible map built from elementary row operations inside
/// each parity block (determinant stays +-1, entries stay small).
pub fn random_even_invertible(rng: &mut impl Rng, space: &SuperSpace) -> LinearMap {
    let d = space.dim();
    let mut m = Matrix::identity(d);
    let blocks: [Vec<usize>; 2] = [
        (0..d).filter(|&i| space.parity_of(i) == 0).collect(),
        (0..d).filter(|&i| space.parity_of(i) == 1).collect(),
    ];
    for block in &blocks {
        if block.len() < 2 {
            continue;
        }
        let ops = rng.random_range(2..=5);
        for _ in 0..ops {
            let i = block[rng.random_range(0..block.len())];
            let mut j = i;
            while j == i {
                j = block[rng.random_range(0..block.len())];
            }
            let c = if rng.random_bool(0.5) {
                int(1)
            } else {
                int(-1)
            };
            // row_j += c * row_i
            for col in 0..d {
                let v = m.get(j, col) + &c * m.get(i, col);
                m.set(j, col, v);
            }
        }
    }
    LinearMap::even(space.clone(), m).expect("block row operations keep the map even")
}

/// Transport an algebra along an even invertible change of basis P:
/// the new bracket is P^-1 [P x_1, ..., P x_n], the new twist P^-1 a P.
pub fn conjugate_algebra(alg: &HomNambuSuperalgebra, p: &LinearMap) -> HomNambuSuperalgebra {
    let space = alg.space().clone();
    let p_inv = p
        .matrix()
        .inverse()
        .expect("change of basis must be invertible");
    let mut entries = Vec::new();
    // Values on every canonical tuple of the new basis, computed through P.
    let basis = crate::superalgebra::WedgeBasis::new(&space, alg.arity());
    for t in basis.tuples() {
        let args: Vec<Vec<Scalar>> = t.indices().iter().map(|&i| p.column(i)).collect();
        let value = alg.bracket().eval_vectors(&args);
        let new_value = p_inv.mul_vec(&value);
        entries.push((t.indices().to_vec(), new_value));
    }
    let bracket = BracketTensor::from_entries(space.clone(), alg.arity(), entries)
        .expect("conjugated bracket stays graded and consistent");
    let alpha_matrix = p_inv.mul(alg.alpha().matrix()).mul(p.matrix());
    let alpha = LinearMap::even(space, alpha_matrix).expect("conjugate of an even map is even");
    HomNambuSuperalgebra::new(bracket, alpha).expect("structure preserved")
}

/// Transport a map along the same change of basis: P^-1 f P.
pub fn conjugate_map(f: &LinearMap, p: &LinearMap) -> LinearMap {
    let p_inv = p.matrix().inverse().expect("invertible");
    let m = p_inv.mul(f.matrix()).mul(p.matrix());
    LinearMap::new(f.space().clone(), m, f.declared_parity()).expect("parity preserved")
}

fn base_pair_arity2(rng: &mut impl Rng) -> (HomNambuSuperalgebra, LinearMap) {
    match rng.random_range(0..6) {
        0 => {
            let parities = random_parities(rng, 1, 3);
            let alg = fixtures::abelian(parities, 2);
            let beta = random_even_map(rng, alg.space());
            (alg, beta)
        }
        1 => {
            let alg = fixtures::sl2();
            let beta = match rng.random_range(0..3) {
                0 => LinearMap::identity(alg.space().clone()),
                1 => LinearMap::zero(alg.space().clone(), Some(0)),
                _ => fixtures::sl2_swap(),
            };
            (alg, beta)
        }
        2 => {
            let alg = fixtures::solvable2();
            let beta = morphism_id_or_zero(rng, &alg);
            (alg, beta)
        }
        3 => {
            let alg = fixtures::heisenberg3();
            let beta = morphism_id_or_zero(rng, &alg);
            (alg, beta)
        }
        4 => {
            let alg = fixtures::super_1_1();
            // x -> x, y -> b y is an endomorphism for any b.
            let b = rng.random_range(-2..=2);
            let mut m = Matrix::identity(2);
            m.set(1, 1, int(b));
            let beta = LinearMap::even(alg.space().clone(), m).unwrap();
            (alg, beta)
        }
        _ => {
            let alg = fixtures::super_heisenberg();
            let beta = morphism_id_or_zero(rng, &alg);
            (alg, beta)
        }
    }
}

fn base_pair_arity3(rng: &mut impl Rng) -> (HomNambuSuperalgebra, LinearMap) {
    match rng.random_range(0..3) {
        0 => {
            let parities = random_parities(rng, 1, 3);
            let alg = fixtures::abelian(parities, 3);
            let beta = random_even_map(rng, alg.space());
            (alg, beta)
        }
        1 => {
            let alg = fixtures::three_lie_4d();
            let beta = match rng.random_range(0..3) {
                0 => LinearMap::identity(alg.space().clone()),
                1 => LinearMap::zero(alg.space().clone(), Some(0)),
                // -id is multiplicative for odd arity.
                _ => LinearMap::identity(alg.space().clone()).neg(),
            };
            (alg, beta)
        }
        _ => {
            let parities = random_parities(rng, 1, 2);
            let alg = fixtures::abelian(parities, 3);
            let beta = random_even_map(rng, alg.space());
            (alg, beta)
        }
    }
}

fn morphism_id_or_zero(rng: &mut impl Rng, alg: &HomNambuSuperalgebra) -> LinearMap {
    if rng.random_bool(0.5) {
        LinearMap::identity(alg.space().clone())
    } else {
        LinearMap::zero(alg.space().clone(), Some(0))
    }
}

pub fn random_parities(rng: &mut impl Rng, min_dim: usize, max_dim: usize) -> Vec<u8> {
    let d = rng.random_range(min_dim..=max_dim);
    (0..d).map(|_| u8::from(rng.random_bool(0.4))).collect()
}

/// A verified algebra together with a verified endomorphism commuting with
/// its twist (suitable for twist constructions). The pair is built from the
/// base pool and kept coherent under conjugation, twisting and direct sums.
pub fn random_algebra_with_morphism(
    rng: &mut impl Rng,
    arity: usize,
) -> (HomNambuSuperalgebra, LinearMap) {
    let (mut alg, mut beta) = if arity == 2 {
        base_pair_arity2(rng)
    } else {
        base_pair_arity3(rng)
    };

    // Direct sum with a second small base of the same arity.
    if arity == 2 && alg.dim() <= 3 && rng.random_bool(0.3) {
        let (other, other_beta) = base_pair_arity2(rng);
        if other.dim() <= 3 {
            alg = constructions::direct_sum(&alg, &other).expect("same arity");
            beta = constructions::direct_sum_map(&beta, &other_beta, alg.space());
        }
    }

    // Twist by the morphism itself.
    if rng.random_bool(0.3) {
        if let Ok(twisted) = constructions::yau_twist(&alg, &beta) {
            alg = twisted;
        }
    }

    // Change of basis, transported on both.
    if rng.random_bool(0.5) {
        let p = random_even_invertible(rng, alg.space());
        alg = conjugate_algebra(&alg, &p);
        beta = conjugate_map(&beta, &p);
    }

    (alg, beta)
}

/// A verified random algebra of the given arity.
pub fn random_algebra(rng: &mut impl Rng, arity: usize) -> HomNambuSuperalgebra {
    random_algebra_with_morphism(rng, arity).0
}

/// Random sparse parity-homogeneous cochain at the given level, with
/// grading-respecting small integer values.
pub fn random_cochain(
    rng: &mut impl Rng,
    alg: &HomNambuSuperalgebra,
    level: usize,
    parity: u8,
) -> crate::cohomology::Cochain {
    use crate::cohomology::Cochain;
    let space = alg.space();
    let d = space.dim();
    let wb = crate::superalgebra::WedgeBasis::new(space, alg.arity() - 1);
    let w = wb.size();
    let mut out = Cochain::zero(space.clone(), alg.arity(), level, parity);
    if w == 0 {
        return out;
    }
    let entries = rng.random_range(2..=(4 + 2 * level));
    for _ in 0..entries {
        let keys: Vec<Vec<usize>> = (0..level)
            .map(|_| wb.tuple(rng.random_range(0..w)).indices().to_vec())
            .collect();
        let j = rng.random_range(0..d);
        let mut target = parity;
        for t in &keys {
            target = (target + space.tuple_parity(t)) % 2;
        }
        target = (target + space.parity_of(j)) % 2;
        let mut value = crate::linalg::zero_vec(d);
        let mut nonzero = false;
        for (r, x) in value.iter_mut().enumerate() {
            if space.parity_of(r) == target && rng.random_bool(0.7) {
                *x = random_scalar(rng, 3);
                nonzero = nonzero || !num_traits::Zero::is_zero(x);
            }
        }
        if nonzero {
            out.add_entry((keys, j), value);
        }
    }
    out
}

/// Random twist-compatible cochain (the domain of the coboundary-squared
/// theorem).
///
/// For an identity twist every cochain qualifies and the unrestricted
/// generator is used. Otherwise level-1 cochains are sampled from the exact
/// compatible kernel, and higher levels from a structured family: nested
/// bracket words with twist powers in each slot (compatible by
/// multiplicativity, optionally composed with a twist-commuting map for the
/// odd parity) plus coboundaries of lower compatible cochains.
pub fn random_compatible_cochain(
    rng: &mut impl Rng,
    alg: &HomNambuSuperalgebra,
    level: usize,
    parity: u8,
) -> crate::cohomology::Cochain {
    use crate::cohomology::Cochain;
    let d = alg.dim();
    if alg.alpha().matrix() == &Matrix::identity(d) {
        return random_cochain(rng, alg, level, parity);
    }
    if level == 1 {
        let basis = crate::cohomology::compatible_cochain_basis(alg, 1, parity);
        let mut out = Cochain::zero(alg.space().clone(), alg.arity(), 1, parity);
        for f in &basis {
            let c = random_scalar(rng, 2);
            if !num_traits::Zero::is_zero(&c) {
                out = out.add(&f.scale(&c));
            }
        }
        return out;
    }
    assert_eq!(level, 2, "structured sampling implemented up to level 2");
    let mut out = Cochain::zero(alg.space().clone(), alg.arity(), 2, parity);
    // delta of a lower compatible cochain stays compatible.
    let lower = random_compatible_cochain(rng, alg, 1, parity);
    if !lower.is_zero() && rng.random_bool(0.7) {
        out = out.add(&crate::cohomology::delta_m(alg, &lower));
    }
    // Nested bracket words with twist powers; for odd parity an odd
    // twist-commuting map is applied to the point slot.
    let words = rng.random_range(1..=2);
    for _ in 0..words {
        let coeff = random_scalar(rng, 2);
        if num_traits::Zero::is_zero(&coeff) {
            continue;
        }
        let a = rng.random_range(0..=2usize);
        let b = rng.random_range(0..=2usize);
        let c = rng.random_range(0..=2usize);
        let swap_slots = rng.random_bool(0.5);
        let odd_map = if parity == 1 {
            let basis = crate::derivations::alpha_commuting_maps(alg, 1);
            if basis.dim() == 0 {
                continue;
            }
            let pick = rng.random_range(0..basis.dim());
            Some(
                LinearMap::from_vec(alg.space().clone(), &basis.vectors()[pick], Some(1))
                    .expect("block coordinates"),
            )
        } else {
            None
        };
        let word = bracket_word_cochain(alg, a, b, c, swap_slots, odd_map.as_ref());
        out = out.add(&word.scale(&coeff));
    }
    out
}

/// The level-2 cochain (X1, X2, z) -> [a^p(X_outer), [a^q(X_inner), a^r
/// psi(z)]] with twist powers in each slot; compatible with the twist by
/// multiplicativity.
fn bracket_word_cochain(
    alg: &HomNambuSuperalgebra,
    p: usize,
    q: usize,
    r: usize,
    swap_slots: bool,
    odd_map: Option<&LinearMap>,
) -> crate::cohomology::Cochain {
    use crate::cohomology::Cochain;
    let space = alg.space();
    let d = space.dim();
    let wb = crate::superalgebra::WedgeBasis::new(space, alg.arity() - 1);
    let alpha_p = alg.alpha_pow(p);
    let alpha_q = alg.alpha_pow(q);
    let alpha_r = alg.alpha_pow(r);
    let parity = odd_map.map_or(0, |m| m.declared_parity().unwrap_or(0));
    let mut out = Cochain::zero(space.clone(), alg.arity(), 2, parity);
    for t1 in wb.tuples() {
        for t2 in wb.tuples() {
            let (outer, inner) = if swap_slots { (t2, t1) } else { (t1, t2) };
            for z in 0..d {
                let mut zv = crate::linalg::zero_vec(d);
                zv[z] = crate::linalg::int(1);
                let mut point = alpha_r.apply(&zv);
                if let Some(m) = odd_map {
                    point = m.apply(&point);
                }
                let mut inner_args: Vec<Vec<Scalar>> =
                    inner.indices().iter().map(|&i| alpha_q.column(i)).collect();
                inner_args.push(point);
                let inner_val = alg.bracket().eval_vectors(&inner_args);
                let mut outer_args: Vec<Vec<Scalar>> =
                    outer.indices().iter().map(|&i| alpha_p.column(i)).collect();
                outer_args.push(inner_val);
                let value = alg.bracket().eval_vectors(&outer_args);
                if !crate::linalg::is_zero_vec(&value) {
                    out.add_entry(
                        (vec![t1.indices().to_vec(), t2.indices().to_vec()], z),
                        value,
                    );
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn random_algebras_are_valid() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..25 {
            let alg = random_algebra(&mut rng, 2);
            assert!(axioms::is_valid(&alg));
        }
        for _ in 0..10 {
            let alg = random_algebra(&mut rng, 3);
            assert!(axioms::is_valid(&alg));
        }
    }

    #[test]
    fn generated_morphisms_are_morphisms() {
        let mut rng = StdRng::seed_from_u64(11);
        for arity in [2, 3] {
            for _ in 0..15 {
                let (alg, beta) = random_algebra_with_morphism(&mut rng, arity);
                assert!(
                    constructions::is_morphism(&beta, &alg, &alg)
                        .expect("even map")
                        .holds
                );
                assert!(beta.commutes_with(alg.alpha()));
            }
        }
    }

    #[test]
    fn conjugation_preserves_validity() {
        let mut rng = StdRng::seed_from_u64(3);
        let alg = fixtures::sl2();
        for _ in 0..5 {
            let p = random_even_invertible(&mut rng, alg.space());
            assert!(axioms::is_valid(&conjugate_algebra(&alg, &p)));
        }
    }
}
