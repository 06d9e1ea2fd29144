//! Pointwise kernel/image structure of Clifford multiplication by a null
//! vector.

use num_traits::{One, Zero};
use rand::Rng;

use super::gamma::{build_gammas, Signature};
use super::gauss::GaussRat;
use super::linalg::{span_rank, Mat};
use crate::report::Report;
use crate::rng::{nonzero_rational, rational, seeded, SuiteRng};
use crate::{Error, Result, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelAnalysis {
    pub spinor_dim: usize,
    pub rank: usize,
    pub ker_equals_im: bool,
    /// `T = γ(v₊) γ(v₋) / |v₊|²`, built from the positive and negative parts
    /// of `v`. It squares to one and anticommutes with `X`.
    pub t_squares_to_one: bool,
    pub trace_t: GaussRat,
}

impl KernelAnalysis {
    /// The conditions asserted by the lemma: half rank, kernel equal to
    /// image, traceless involution.
    pub fn holds(&self) -> bool {
        2 * self.rank == self.spinor_dim
            && self.ker_equals_im
            && self.t_squares_to_one
            && self.trace_t.is_zero()
    }
}

/// Analyzes `X = Σ γ_a v_a` for a nonzero null vector `v`.
pub fn null_kernel_analysis(sig: Signature, v: &[Scalar]) -> Result<KernelAnalysis> {
    let gs = build_gammas(sig)?;
    if v.len() != sig.dim() {
        return Err(Error::DimensionMismatch {
            expected: sig.dim(),
            found: v.len(),
        });
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let norm: Scalar = v
        .iter()
        .enumerate()
        .map(|(a, c)| c * c * Scalar::from_integer(sig.eps(a).into()))
        .sum();
    if !norm.is_zero() {
        return Err(Error::NotNull);
    }
    let dim = sig.spinor_dim();
    let x = gs.clifford_of(v)?;
    let rank = x.rank();
    let ker = x.kernel();
    let im = x.image();
    let both: Vec<_> = ker.iter().chain(&im).cloned().collect();
    let (rk, ri, rb) = (span_rank(&ker, dim), span_rank(&im, dim), span_rank(&both, dim));
    let ker_equals_im = rk == ri && ri == rb;

    let split = |positive: bool| -> Vec<Scalar> {
        v.iter()
            .enumerate()
            .map(|(a, c)| {
                if (a < sig.r) == positive {
                    c.clone()
                } else {
                    Scalar::zero()
                }
            })
            .collect()
    };
    let plus = split(true);
    let minus = split(false);
    let c: Scalar = plus.iter().map(|q| q * q).sum();
    let t = gs
        .clifford_of(&plus)?
        .mul(&gs.clifford_of(&minus)?)
        .scale(&GaussRat::real(c.recip()));
    Ok(KernelAnalysis {
        spinor_dim: dim,
        rank,
        ker_equals_im,
        t_squares_to_one: t.mul(&t) == Mat::identity(dim),
        trace_t: t.trace(),
    })
}

/// Rational point on the unit sphere in `k` dimensions, by inverse
/// stereographic projection of a random rational point.
fn rational_unit_vector(rng: &mut SuiteRng, k: usize) -> Vec<Scalar> {
    if k == 1 {
        return vec![if rng.gen_bool(0.5) {
            Scalar::one()
        } else {
            -Scalar::one()
        }];
    }
    let t: Vec<Scalar> = (0..k - 1).map(|_| rational(rng, 7, 4)).collect();
    let s: Scalar = t.iter().map(|q| q * q).sum();
    let den = &s + Scalar::one();
    let mut u: Vec<Scalar> = t
        .iter()
        .map(|q| q * Scalar::from_integer(2.into()) / &den)
        .collect();
    u.push((s - Scalar::one()) / den);
    u
}

/// Random nonzero rational null vector; requires `r, s >= 1`.
pub fn random_null_vector(rng: &mut SuiteRng, sig: Signature) -> Vec<Scalar> {
    let lambda = nonzero_rational(rng, 6, 4);
    let mut v = rational_unit_vector(rng, sig.r);
    v.extend(rational_unit_vector(rng, sig.s));
    v.into_iter().map(|c| c * &lambda).collect()
}

/// `e_t + e_u` with `t` the first positive and `u` the first negative
/// direction.
pub fn basic_null_vector(sig: Signature) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); sig.dim()];
    v[0] = Scalar::one();
    v[sig.r] = Scalar::one();
    v
}

/// Every signature with `r, s >= 1` and `r + s <= max_dim`.
pub fn mixed_signatures(max_dim: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    for d in 2..=max_dim {
        for r in 1..d {
            out.push(Signature { r, s: d - r });
        }
    }
    out
}

/// Checks the kernel/image lemma at `e_t + e_u` and at `random` random null
/// vectors per signature.
pub fn kernel_lemma_report(sigs: &[Signature], random: usize, seed: u64) -> Report {
    let mut report = Report::new("kernel", Some(seed));
    let mut rng = seeded(seed);
    for &sig in sigs {
        let mut vectors = vec![("e_t+e_u".to_string(), basic_null_vector(sig))];
        for i in 0..random {
            vectors.push((format!("random#{i}"), random_null_vector(&mut rng, sig)));
        }
        for (label, v) in vectors {
            let id = format!("{sig} {label}");
            let expected = format!("rank={}, ker=im, tr T=0", sig.spinor_dim() / 2);
            match null_kernel_analysis(sig, &v) {
                Ok(k) => {
                    let computed = format!(
                        "rank={}, ker{}im, tr T={}",
                        k.rank,
                        if k.ker_equals_im { "=" } else { "!=" },
                        k.trace_t
                    );
                    report.check(id, k.holds(), expected, computed);
                }
                Err(e) => report.check(id, false, expected, e.to_string()),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    #[test]
    fn split_plane_kernel() {
        let k = null_kernel_analysis(Signature { r: 1, s: 1 }, &[q(1), q(1)]).unwrap();
        assert_eq!(k.rank, 1);
        assert!(k.ker_equals_im);
        assert!(k.holds());
    }

    #[test]
    fn four_dimensional_kernel() {
        let k = null_kernel_analysis(Signature { r: 2, s: 2 }, &[q(1), q(0), q(1), q(0)]).unwrap();
        assert_eq!(k.rank, 2);
        assert!(k.holds());
    }

    #[test]
    fn errors() {
        let sig = Signature { r: 1, s: 1 };
        assert_eq!(null_kernel_analysis(sig, &[q(1), q(2)]), Err(Error::NotNull));
        assert_eq!(null_kernel_analysis(sig, &[q(0), q(0)]), Err(Error::ZeroVector));
    }

    #[test]
    fn random_null_vectors_are_null() {
        let mut rng = seeded(4);
        for sig in mixed_signatures(6) {
            let v = random_null_vector(&mut rng, sig);
            assert!(null_kernel_analysis(sig, &v).unwrap().holds(), "{sig}");
        }
    }
}
