use std::collections::BTreeMap;

use rand::Rng;

use super::gamma::{build_gammas, GammaSet, Signature};
use super::gauss::GaussRat;
use super::linalg::Mat;
use crate::algebra::{AlgebraElement, Gen};
use crate::rng::{rational, SuiteRng};
use crate::{Error, Result, Scalar};

/// Spinor-valued polynomial in the ambient coordinates `X^0, ..., X^{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolySpinor {
    d: usize,
    dim: usize,
    terms: BTreeMap<Vec<u32>, Vec<GaussRat>>,
}

fn vec_is_zero(v: &[GaussRat]) -> bool {
    v.iter().all(GaussRat::is_zero)
}

impl PolySpinor {
    pub fn zero(d: usize, dim: usize) -> Self {
        Self {
            d,
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// `X^exps * v`.
    pub fn monomial(exps: Vec<u32>, v: Vec<GaussRat>) -> Self {
        let mut out = Self::zero(exps.len(), v.len());
        out.add_term(exps, v);
        out
    }

    pub fn constant(d: usize, v: Vec<GaussRat>) -> Self {
        Self::monomial(vec![0; d], v)
    }

    pub fn ambient_dim(&self) -> usize {
        self.d
    }

    pub fn spinor_dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Vec<GaussRat>)> {
        self.terms.iter()
    }

    /// Largest total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, exps: Vec<u32>, v: Vec<GaussRat>) {
        if vec_is_zero(&v) {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(acc) => {
                for (a, b) in acc.iter_mut().zip(&v) {
                    *a += b;
                }
                if vec_is_zero(acc) {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, v);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, v) in &other.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&GaussRat::from_int(-1)))
    }

    pub fn scale(&self, k: &GaussRat) -> Self {
        let mut out = Self::zero(self.d, self.dim);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.iter().map(|x| x * k).collect());
        }
        out
    }

    pub fn scale_rational(&self, k: &Scalar) -> Self {
        self.scale(&GaussRat::real(k.clone()))
    }

    /// Multiplication by the coordinate `X^a`.
    pub fn mul_coord(&self, a: usize) -> Self {
        let mut out = Self::zero(self.d, self.dim);
        for (e, v) in &self.terms {
            let mut e = e.clone();
            e[a] += 1;
            out.add_term(e, v.clone());
        }
        out
    }

    /// Partial derivative `∂_a`.
    pub fn partial(&self, a: usize) -> Self {
        let mut out = Self::zero(self.d, self.dim);
        for (e, v) in &self.terms {
            if e[a] == 0 {
                continue;
            }
            let k = GaussRat::from_int(e[a] as i64);
            let mut e = e.clone();
            e[a] -= 1;
            out.add_term(e, v.iter().map(|x| x * &k).collect());
        }
        out
    }

    /// Pointwise action of a constant matrix on the spinor values.
    pub fn apply_matrix(&self, m: &Mat) -> Self {
        let mut out = Self::zero(self.d, self.dim);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), m.apply(v));
        }
        out
    }

    /// Random spinor with `terms` monomials of total degree exactly `deg`.
    pub fn random_homogeneous(rng: &mut SuiteRng, d: usize, dim: usize, deg: u32, terms: usize) -> Self {
        let mut out = Self::zero(d, dim);
        for _ in 0..terms {
            let mut e = vec![0u32; d];
            for _ in 0..deg {
                e[rng.gen_range(0..d)] += 1;
            }
            out.add_term(e, random_vector(rng, dim));
        }
        out
    }

    /// Random spinor of degree at most `maxdeg`.
    pub fn random(rng: &mut SuiteRng, d: usize, dim: usize, maxdeg: u32, terms: usize) -> Self {
        let mut out = Self::zero(d, dim);
        for _ in 0..terms {
            let deg = rng.gen_range(0..=maxdeg);
            out = out.add(&Self::random_homogeneous(rng, d, dim, deg, 1));
        }
        out
    }
}

pub fn random_vector(rng: &mut SuiteRng, dim: usize) -> Vec<GaussRat> {
    (0..dim)
        .map(|_| GaussRat::new(rational(rng, 5, 3), rational(rng, 5, 3)))
        .collect()
}

/// The five concrete ambient operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    /// Clifford multiplication by `Σ γ_a X^a`.
    X,
    /// Dirac operator `Σ ε_a γ_a ∂_a`.
    Y,
    /// Euler field plus `(n+2)/2`.
    H,
    /// Multiplication by `Σ ε_a (X^a)^2`.
    Q,
    /// `Σ ε_a ∂_a^2`.
    Lap,
}

/// The flat model of `x`, `y`, `h` for one signature.
#[derive(Clone, Debug)]
pub struct AmbientOps {
    gammas: GammaSet,
}

impl AmbientOps {
    pub fn new(sig: Signature) -> Result<Self> {
        Ok(Self {
            gammas: build_gammas(sig)?,
        })
    }

    pub fn signature(&self) -> Signature {
        self.gammas.signature()
    }

    pub fn gammas(&self) -> &GammaSet {
        &self.gammas
    }

    fn check(&self, psi: &PolySpinor) -> Result<()> {
        let sig = self.signature();
        if psi.d != sig.dim() {
            return Err(Error::DimensionMismatch {
                expected: sig.dim(),
                found: psi.d,
            });
        }
        if psi.dim != sig.spinor_dim() {
            return Err(Error::DimensionMismatch {
                expected: sig.spinor_dim(),
                found: psi.dim,
            });
        }
        Ok(())
    }

    pub fn apply(&self, op: Op, psi: &PolySpinor) -> Result<PolySpinor> {
        self.check(psi)?;
        let sig = self.signature();
        let d = sig.dim();
        let zero = PolySpinor::zero(d, sig.spinor_dim());
        let eps = |a: usize| GaussRat::from_int(sig.eps(a));
        Ok(match op {
            Op::X => (0..d).fold(zero, |acc, a| {
                acc.add(&psi.mul_coord(a).apply_matrix(self.gammas.gamma(a)))
            }),
            Op::Y => (0..d).fold(zero, |acc, a| {
                acc.add(&psi.partial(a).apply_matrix(self.gammas.gamma(a)).scale(&eps(a)))
            }),
            Op::H => {
                let euler = (0..d).fold(zero, |acc, a| acc.add(&psi.partial(a).mul_coord(a)));
                euler.add(&psi.scale_rational(&Scalar::new((d as i64).into(), 2.into())))
            }
            Op::Q => (0..d).fold(zero, |acc, a| {
                acc.add(&psi.mul_coord(a).mul_coord(a).scale(&eps(a)))
            }),
            Op::Lap => (0..d).fold(zero, |acc, a| acc.add(&psi.partial(a).partial(a).scale(&eps(a)))),
        })
    }

    /// Applies a sequence of operators, rightmost first.
    pub fn apply_seq(&self, ops: &[Op], psi: &PolySpinor) -> Result<PolySpinor> {
        ops.iter()
            .rev()
            .try_fold(psi.clone(), |acc, &op| self.apply(op, &acc))
    }

    /// Applies the word `g_1 g_2 ... g_k` (rightmost letter acts first).
    pub fn apply_word(&self, word: &[Gen], psi: &PolySpinor) -> Result<PolySpinor> {
        let ops: Vec<Op> = word.iter().map(|&g| gen_op(g)).collect();
        self.apply_seq(&ops, psi)
    }

    /// Evaluates an enveloping-algebra element on `psi`, monomial by
    /// monomial in the ordered basis.
    pub fn eval_element(&self, a: &AlgebraElement, psi: &PolySpinor) -> Result<PolySpinor> {
        self.check(psi)?;
        let sig = self.signature();
        let mut out = PolySpinor::zero(sig.dim(), sig.spinor_dim());
        for (m, c) in a.terms() {
            let mut v = psi.clone();
            for _ in 0..m.h {
                v = self.apply(Op::H, &v)?;
            }
            for _ in 0..m.y {
                v = self.apply(Op::Y, &v)?;
            }
            for _ in 0..m.x {
                v = self.apply(Op::X, &v)?;
            }
            out = out.add(&v.scale_rational(c));
        }
        Ok(out)
    }
}

pub fn gen_op(g: Gen) -> Op {
    match g {
        Gen::X => Op::X,
        Gen::Y => Op::Y,
        Gen::H => Op::H,
    }
}

/// One-shot form of [`AmbientOps::apply`].
pub fn apply_ops(which: Op, psi: &PolySpinor, sig: Signature) -> Result<PolySpinor> {
    AmbientOps::new(sig)?.apply(which, psi)
}

/// Canonical representative of `psi` modulo the ideal generated by the
/// quadratic form: `(X^0)^2` is replaced by `-ε_0 Σ_{a≥1} ε_a (X^a)^2` until
/// every monomial has degree at most one in `X^0`.
pub fn reduce_mod_q(psi: &PolySpinor, sig: Signature) -> PolySpinor {
    let d = psi.d;
    let mut out = PolySpinor::zero(d, psi.dim);
    let mut pending: Vec<(Vec<u32>, Vec<GaussRat>)> =
        psi.terms.iter().map(|(e, v)| (e.clone(), v.clone())).collect();
    let e0 = sig.eps(0);
    while let Some((e, v)) = pending.pop() {
        if e[0] < 2 {
            out.add_term(e, v);
            continue;
        }
        for a in 1..d {
            let k = Scalar::from_integer((-e0 * sig.eps(a)).into());
            let mut f = e.clone();
            f[0] -= 2;
            f[a] += 2;
            pending.push((f, v.iter().map(|x| x.scale(&k)).collect()));
        }
    }
    out
}

/// Whether `psi` restricted to the null cone is tangential, i.e. `x psi`
/// vanishes modulo the quadratic form.
pub fn is_tangential(ops: &AmbientOps, psi: &PolySpinor) -> Result<bool> {
    Ok(reduce_mod_q(&ops.apply(Op::X, psi)?, ops.signature()).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    fn sig(r: usize, s: usize) -> Signature {
        Signature::new(r, s).unwrap()
    }

    #[test]
    fn h_on_constants() {
        let ops = AmbientOps::new(sig(2, 2)).unwrap();
        let s = PolySpinor::constant(4, (1..=4).map(GaussRat::from_int).collect());
        assert_eq!(ops.apply(Op::H, &s).unwrap(), s.scale(&GaussRat::from_int(2)));
        let xy = ops.apply_seq(&[Op::X, Op::Y], &s).unwrap();
        let yx = ops.apply_seq(&[Op::Y, Op::X], &s).unwrap();
        assert_eq!(xy.add(&yx), s.scale(&GaussRat::from_int(4)));
    }

    #[test]
    fn squares() {
        let mut rng = seeded(1);
        for (r, s) in [(1, 1), (2, 1), (3, 2)] {
            let ops = AmbientOps::new(sig(r, s)).unwrap();
            let g = sig(r, s);
            let psi = PolySpinor::random(&mut rng, g.dim(), g.spinor_dim(), 3, 4);
            assert_eq!(
                ops.apply_seq(&[Op::X, Op::X], &psi).unwrap(),
                ops.apply(Op::Q, &psi).unwrap()
            );
            assert_eq!(
                ops.apply_seq(&[Op::Y, Op::Y], &psi).unwrap(),
                ops.apply(Op::Lap, &psi).unwrap()
            );
        }
    }

    #[test]
    fn mod_q() {
        let g = sig(1, 1);
        let ops = AmbientOps::new(g).unwrap();
        let s = PolySpinor::constant(2, vec![GaussRat::from_int(1), GaussRat::from_int(3)]);
        assert!(reduce_mod_q(&ops.apply(Op::Q, &s).unwrap(), g).is_zero());
        let x0sq = PolySpinor::monomial(vec![2, 0], vec![GaussRat::from_int(1), GaussRat::from_int(3)]);
        let x1sq = PolySpinor::monomial(vec![0, 2], vec![GaussRat::from_int(1), GaussRat::from_int(3)]);
        assert_eq!(reduce_mod_q(&x0sq, g), x1sq);
        assert!(!is_tangential(&ops, &s).unwrap());
        let xs = ops.apply(Op::X, &s).unwrap();
        assert!(is_tangential(&ops, &xs).unwrap());
        assert!(is_tangential(&ops, &PolySpinor::zero(2, 2)).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let ops = AmbientOps::new(sig(1, 1)).unwrap();
        let psi = PolySpinor::zero(3, 2);
        assert!(matches!(
            ops.apply(Op::X, &psi),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
