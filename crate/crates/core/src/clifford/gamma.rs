use std::fmt;

use serde::{Deserialize, Serialize};

use super::gauss::GaussRat;
use super::linalg::Mat;
use crate::{Error, Result, Scalar};

/// Quadratic form with `r` squares `+1` followed by `s` squares `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub r: usize,
    pub s: usize,
}

impl Signature {
    pub fn new(r: usize, s: usize) -> Result<Self> {
        if r + s < 2 {
            return Err(Error::UnsupportedSignature { r, s });
        }
        Ok(Self { r, s })
    }

    /// Ambient dimension `d = n + 2`.
    pub fn dim(&self) -> usize {
        self.r + self.s
    }

    /// Base dimension `n = d - 2`.
    pub fn n(&self) -> i64 {
        self.dim() as i64 - 2
    }

    pub fn spinor_dim(&self) -> usize {
        1 << (self.dim() / 2)
    }

    /// Metric sign of coordinate `a`.
    pub fn eps(&self, a: usize) -> i64 {
        if a < self.r {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

/// Gamma matrices `γ_0, ..., γ_{d-1}` with `γ_a γ_b + γ_b γ_a = 2 ε_a δ_ab`.
#[derive(Clone, Debug)]
pub struct GammaSet {
    sig: Signature,
    gammas: Vec<Mat>,
}

fn g(re: i64, im: i64) -> GaussRat {
    GaussRat::new(Scalar::from_integer(re.into()), Scalar::from_integer(im.into()))
}

fn pauli(k: u8) -> Mat {
    match k {
        1 => Mat::from_rows(vec![vec![g(0, 0), g(1, 0)], vec![g(1, 0), g(0, 0)]]),
        2 => Mat::from_rows(vec![vec![g(0, 0), g(0, -1)], vec![g(0, 1), g(0, 0)]]),
        3 => Mat::from_rows(vec![vec![g(1, 0), g(0, 0)], vec![g(0, 0), g(-1, 0)]]),
        _ => Mat::identity(2),
    }
}

fn kron(a: &Mat, b: &Mat) -> Mat {
    let mut out = Mat::zero(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out.set(i * b.rows() + k, j * b.cols() + l, x * b.get(k, l));
                }
            }
        }
    }
    out
}

fn tensor(factors: &[u8]) -> Mat {
    factors
        .iter()
        .fold(Mat::identity(1), |acc, &k| kron(&acc, &pauli(k)))
}

/// Builds gamma matrices for `sig` by the standard tensor-product
/// construction: `σ3^{⊗k} ⊗ σ1 ⊗ 1` and `σ3^{⊗k} ⊗ σ2 ⊗ 1` for the
/// Euclidean pairs, `σ3^{⊗m}` as the extra generator in odd dimension, and
/// a factor `i` on each generator that must square to `-1`.
///
/// For odd `d` this fixes the irreducible representation in which the
/// product of all Euclidean generators is a positive power of `i`.
pub fn build_gammas(sig: Signature) -> Result<GammaSet> {
    let sig = Signature::new(sig.r, sig.s)?;
    let d = sig.dim();
    let m = d / 2;
    let mut euclid = Vec::with_capacity(d);
    for k in 0..m {
        for p in [1u8, 2] {
            let mut f = vec![3u8; k];
            f.push(p);
            f.resize(m, 0);
            euclid.push(tensor(&f));
        }
    }
    if d % 2 == 1 {
        euclid.push(tensor(&vec![3u8; m]));
    }
    let gammas = euclid
        .into_iter()
        .enumerate()
        .map(|(a, e)| if a < sig.r { e } else { e.scale(&GaussRat::i()) })
        .collect();
    Ok(GammaSet { sig, gammas })
}

impl GammaSet {
    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn spinor_dim(&self) -> usize {
        self.sig.spinor_dim()
    }

    pub fn gamma(&self, a: usize) -> &Mat {
        &self.gammas[a]
    }

    pub fn gammas(&self) -> &[Mat] {
        &self.gammas
    }

    /// `Σ_a γ_a v_a`.
    pub fn clifford_of(&self, v: &[Scalar]) -> Result<Mat> {
        if v.len() != self.sig.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.sig.dim(),
                found: v.len(),
            });
        }
        let n = self.spinor_dim();
        Ok(v.iter().zip(&self.gammas).fold(Mat::zero(n, n), |acc, (c, gm)| {
            acc.add(&gm.scale(&GaussRat::real(c.clone())))
        }))
    }

    /// Checks `γ_a γ_b + γ_b γ_a = 2 ε_a δ_ab` for every pair.
    pub fn anticommutators_hold(&self) -> bool {
        let n = self.spinor_dim();
        let d = self.sig.dim();
        (0..d).all(|a| {
            (0..d).all(|b| {
                let ga = &self.gammas[a];
                let gb = &self.gammas[b];
                let ac = ga.mul(gb).add(&gb.mul(ga));
                let expect = if a == b {
                    Mat::identity(n).scale(&GaussRat::from_int(2 * self.sig.eps(a)))
                } else {
                    Mat::zero(n, n)
                };
                ac == expect
            })
        })
    }
}
