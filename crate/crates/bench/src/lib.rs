//! Fixtures shared by the benchmarks.

use ambient_dirac::clifford::{PolySpinor, Signature};
use ambient_dirac::rng::seeded;
use ambient_dirac::AlgebraElement;

/// `(y^k, x^k)` as algebra elements.
pub fn power_pair(k: u32) -> (AlgebraElement, AlgebraElement) {
    (AlgebraElement::y().pow(k), AlgebraElement::x().pow(k))
}

/// A seeded random spinor of degree at most `deg`.
pub fn sample_spinor(sig: Signature, deg: u32, seed: u64) -> PolySpinor {
    let mut rng = seeded(seed);
    PolySpinor::random(&mut rng, sig.dim(), sig.spinor_dim(), deg, 4)
}
