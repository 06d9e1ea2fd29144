use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::upoly::UPoly;

/// Polynomial in `w` whose coefficients are polynomials in `n`, i.e. an
/// element of `Q[n][w]`. Stored lowest `w`-degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BPoly {
    coeffs: Vec<UPoly>,
}

impl BPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_upoly(UPoly::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_upoly(UPoly::constant(c))
    }

    pub fn from_upoly(c: UPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn n() -> Self {
        Self::from_upoly(UPoly::var())
    }

    pub fn w() -> Self {
        Self::from_coeffs(vec![UPoly::zero(), UPoly::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<UPoly>) -> Self {
        while coeffs.last().is_some_and(UPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Coefficients of `w^0, w^1, ...`.
    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_w(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn as_upoly(&self) -> Option<UPoly> {
        match self.coeffs.len() {
            0 => Some(UPoly::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.as_upoly().and_then(|u| u.as_constant())
    }

    fn lc(&self) -> &UPoly {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    /// Rational leading coefficient: top `n`-coefficient of the top `w`-coefficient.
    pub fn leading_rational(&self) -> Option<&BigRational> {
        self.coeffs.last().and_then(UPoly::leading)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = UPoly::zero();
        let coeffs = (0..len)
            .map(|i| {
                self.coeffs
                    .get(i)
                    .unwrap_or(&zero)
                    .add(other.coeffs.get(i).unwrap_or(&zero))
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(UPoly::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![UPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale_upoly(&self, k: &UPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    fn shift_w(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UPoly::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    fn div_upoly(&self, k: &UPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.exact_div(k)).collect())
    }

    /// Monic gcd of the `n`-coefficients.
    pub fn content(&self) -> UPoly {
        self.coeffs.iter().fold(UPoly::zero(), |acc, c| acc.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.div_upoly(&self.content())
    }

    /// Pseudo-remainder of `self` by `divisor` in `w`, up to a factor in `Q[n]`.
    fn prem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree_w().expect("pseudo-division by zero");
        let lead = divisor.lc().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree_w() {
            if dr < dd {
                break;
            }
            let top = r.lc().clone();
            r = r
                .scale_upoly(&lead)
                .sub(&divisor.scale_upoly(&top).shift_w(dr - dd));
        }
        r
    }

    /// Divides by the rational leading coefficient so that the result is
    /// canonical up to multiplication by a unit of `Q`.
    pub fn normalized(&self) -> Self {
        match self.leading_rational() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Greatest common divisor in `Q[n][w]`, normalized by [`Self::normalized`].
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree_w() < b.degree_w() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale_upoly(&content).normalized()
    }

    /// Quotient of an exact division in `Q[n][w]`. Panics if inexact.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let dd = divisor.degree_w().expect("division by zero polynomial");
        let lead = divisor.lc();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(dr) = rem.degree_w() {
            assert!(dr >= dd, "inexact polynomial division");
            let (q, r) = rem.lc().div_rem(lead);
            assert!(r.is_zero(), "inexact polynomial division");
            let term = Self::from_upoly(q).shift_w(dr - dd);
            rem = rem.sub(&divisor.mul(&term));
            quot = quot.add(&term);
        }
        quot
    }

    /// Evaluates at rational `n`, `w`.
    pub fn eval(&self, n: &BigRational, w: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * w + c.eval(n))
    }

    pub(crate) fn term_count(&self) -> usize {
        self.coeffs.iter().map(UPoly::term_count).sum()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

impl fmt::Display for BPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            let suffix = match j {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{j}"),
            };
            c.write_terms("n", &suffix, &mut first, f)?;
        }
        Ok(())
    }
}
