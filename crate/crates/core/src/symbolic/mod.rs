//! Rational functions in the dimension `n` and the conformal weight `w`.
//!
//! Every statement made "for generic weight" reduces to an identity between
//! elements of `Q(n, w)`, and exceptional weights show up as zeros of the
//! denominators collected along the way.

mod bpoly;
mod upoly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use bpoly::BPoly;
pub(crate) use upoly::write_signed_term as write_signed_rational;
pub use upoly::UPoly;

/// Element of `Q(n, w)` in lowest terms.
///
/// The denominator has rational leading coefficient one, which makes the
/// representation unique: two scalars are equal iff their fields are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymScalar {
    num: BPoly,
    den: BPoly,
}

impl SymScalar {
    pub fn zero() -> Self {
        Self {
            num: BPoly::zero(),
            den: BPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(v.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self {
            num: BPoly::constant(q),
            den: BPoly::one(),
        }
    }

    /// The indeterminate `n`.
    pub fn n() -> Self {
        Self::from_poly(BPoly::n())
    }

    /// The indeterminate `w`.
    pub fn w() -> Self {
        Self::from_poly(BPoly::w())
    }

    pub fn from_poly(p: BPoly) -> Self {
        Self {
            num: p,
            den: BPoly::one(),
        }
    }

    /// Builds `num / den`, reducing to lowest terms. Panics if `den` is zero.
    pub fn from_fraction(num: BPoly, den: BPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lead = den.leading_rational().expect("nonzero").recip();
        Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn numerator(&self) -> &BPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(q)` if this is a plain rational number, free of `n` and `w`.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// True if the scalar does not involve `w`.
    pub fn is_free_of_w(&self) -> bool {
        self.num.degree_w().unwrap_or(0) == 0 && self.den.degree_w().unwrap_or(0) == 0
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::from_fraction(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Evaluates at rational `n`, `w`; `None` where the denominator vanishes.
    pub fn eval(&self, n: &BigRational, w: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(n, w);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(n, w) / d)
        }
    }

    /// If the numerator is linear in `w`, the unique root `w = r(n)`.
    pub fn linear_w_root_of(poly: &BPoly) -> Option<SymScalar> {
        if poly.degree_w() != Some(1) {
            return None;
        }
        let c = poly.coeffs();
        Some(Self::from_fraction(
            BPoly::from_upoly(c[0].neg()),
            BPoly::from_upoly(c[1].clone()),
        ))
    }

    fn needs_parens(p: &BPoly) -> bool {
        p.term_count() > 1
    }
}

impl Default for SymScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for SymScalar {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<BigRational> for SymScalar {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl<'a> Add<&'a SymScalar> for &'a SymScalar {
    type Output = SymScalar;
    fn add(self, rhs: &SymScalar) -> SymScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return SymScalar::from_fraction(self.num.add(&rhs.num), self.den.clone());
        }
        SymScalar::from_fraction(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<'a> Sub<&'a SymScalar> for &'a SymScalar {
    type Output = SymScalar;
    fn sub(self, rhs: &SymScalar) -> SymScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a SymScalar> for &'a SymScalar {
    type Output = SymScalar;
    fn mul(self, rhs: &SymScalar) -> SymScalar {
        if self.is_zero() || rhs.is_zero() {
            return SymScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return SymScalar::from_poly(self.num.mul(&rhs.num));
        }
        SymScalar::from_fraction(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl<'a> Div<&'a SymScalar> for &'a SymScalar {
    type Output = SymScalar;
    /// Panics on division by zero; use [`SymScalar::recip`] to test first.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &SymScalar) -> SymScalar {
        self * &rhs.recip().expect("division by zero scalar")
    }
}

impl Neg for &SymScalar {
    type Output = SymScalar;
    fn neg(self) -> SymScalar {
        SymScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for SymScalar {
    type Output = SymScalar;
    fn neg(self) -> SymScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<SymScalar> for SymScalar {
            type Output = SymScalar;
            fn $m(self, rhs: SymScalar) -> SymScalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a SymScalar> for SymScalar {
            type Output = SymScalar;
            fn $m(self, rhs: &SymScalar) -> SymScalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<SymScalar> for &'a SymScalar {
            type Output = SymScalar;
            fn $m(self, rhs: SymScalar) -> SymScalar { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl fmt::Display for SymScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &BPoly| {
            if SymScalar::needs_parens(p) {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for SymScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymScalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> SymScalar {
        SymScalar::from_int(v)
    }

    #[test]
    fn field_operations_reduce() {
        let w = SymScalar::w();
        let n = SymScalar::n();
        let e = &(&w + &(&n / &s(2))) - &s(1);
        let inv = e.recip().unwrap();
        assert!((&e * &inv).is_one());
        let x = &(&e * &e) / &e;
        assert_eq!(x, e);
        assert!((&e - &e).is_zero());
        assert_eq!(e.to_string(), "w + 1/2*n - 1");
        assert_eq!(inv.to_string(), "1/(w + 1/2*n - 1)");
    }

    #[test]
    fn rational_detection() {
        let w = SymScalar::w();
        let a = &(&w * &s(3)) / &(&w * &s(6));
        assert_eq!(a.as_rational(), Some(BigRational::new(1.into(), 2.into())));
        assert!(w.as_rational().is_none());
        assert!(SymScalar::n().is_free_of_w());
    }

    #[test]
    fn specialization_makes_factor_vanish() {
        let n = SymScalar::n();
        let w = &s(2) - &(&n / &s(2));
        let e = &(&w + &(&n / &s(2))) - &s(2);
        assert!(e.is_zero());
    }

    #[test]
    fn linear_root() {
        let p = BPoly::w()
            .scale(&BigRational::from_integer(2.into()))
            .add(&BPoly::n());
        let r = SymScalar::linear_w_root_of(&p).unwrap();
        assert_eq!(r, -(&SymScalar::n() / &s(2)));
    }
}
