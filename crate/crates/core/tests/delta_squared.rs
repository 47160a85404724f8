//! Randomized checks that the generic coboundary operator squares to zero
//! on twist-compatible cochains.

use homnambu_core::cohomology::{compatible_cochain_basis, delta_m};
use homnambu_core::testing::{random_algebra, random_compatible_cochain};
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn delta_squared_vanishes_on_random_compatible_cochains() {
    let mut rng = StdRng::seed_from_u64(42);
    let mut count = 0;
    while count < 24 {
        let arity = if count % 3 == 0 { 3 } else { 2 };
        let alg = random_algebra(&mut rng, arity);
        if alg.dim() > 3 {
            continue;
        }
        let levels: &[usize] = if arity == 2 { &[1, 2] } else { &[1] };
        for &level in levels {
            for parity in [0u8, 1u8] {
                let f = random_compatible_cochain(&mut rng, &alg, level, parity);
                let df = delta_m(&alg, &f);
                let ddf = delta_m(&alg, &df);
                assert!(
                    ddf.is_zero(),
                    "delta^2 != 0: arity {arity}, level {level}, parity {parity}, dim {}",
                    alg.dim()
                );
            }
        }
        count += 1;
    }
}

#[test]
fn coboundary_preserves_compatibility_on_twisted_fixture() {
    use homnambu_core::constructions::yau_twist;
    use homnambu_core::testing::{sl2, sl2_swap};
    let alg = yau_twist(&sl2(), &sl2_swap()).unwrap();
    for parity in [0u8, 1u8] {
        for f in compatible_cochain_basis(&alg, 1, parity) {
            let df = delta_m(&alg, &f);
            assert!(df.is_alpha_compatible(&alg));
            assert!(delta_m(&alg, &df).is_zero());
        }
    }
}
