//! Shared helpers for the integration suites: seeded randomness and
//! random symplectic actions built from transvection products.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spinext::gf2::Gf2Vec;
use spinext::homology::HomologySpace;
use spinext::twist::{transvection, HomologyAction};
use spinext::Gf2Mat;

pub const SEED: u64 = 0x5EED_CAFE;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

pub fn random_nonzero_class(rng: &mut ChaCha8Rng, dim: usize) -> Gf2Vec {
    loop {
        let bits = rng.gen::<u64>() & mask(dim);
        if bits != 0 {
            return Gf2Vec::from_bits(dim, bits);
        }
    }
}

fn mask(dim: usize) -> u64 {
    if dim == 64 {
        u64::MAX
    } else {
        (1 << dim) - 1
    }
}

/// A random pairing-preserving action: a product of `3 * dim` transvections
/// along random nonzero classes.
pub fn random_symplectic_action(
    rng: &mut ChaCha8Rng,
    space: &Arc<HomologySpace>,
) -> HomologyAction {
    let dim = space.dim();
    let mut matrix = Gf2Mat::identity(dim);
    for _ in 0..3 * dim {
        let c = random_nonzero_class(rng, dim);
        matrix = &matrix * &transvection(space, &c);
    }
    HomologyAction::new(space.clone(), matrix).expect("transvection products are symplectic")
}

/// A random symplectic change of basis, as a raw matrix.
pub fn random_symplectic_matrix(rng: &mut ChaCha8Rng, space: &Arc<HomologySpace>) -> Gf2Mat {
    random_symplectic_action(rng, space).matrix().clone()
}
