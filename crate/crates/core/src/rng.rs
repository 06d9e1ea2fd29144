//! Seeded generators and random rational data shared by the suites.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::Scalar;

pub type SuiteRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational `a/b` with `|a| <= max_num`, `1 <= b <= max_den`.
pub fn rational(rng: &mut SuiteRng, max_num: i64, max_den: i64) -> Scalar {
    let a = rng.gen_range(-max_num..=max_num);
    let b = rng.gen_range(1..=max_den);
    Scalar::new(BigInt::from(a), BigInt::from(b))
}

/// Random nonzero rational.
pub fn nonzero_rational(rng: &mut SuiteRng, max_num: i64, max_den: i64) -> Scalar {
    loop {
        let q = rational(rng, max_num, max_den);
        if q != Scalar::from_integer(0.into()) {
            return q;
        }
    }
}
