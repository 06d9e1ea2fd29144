//! Normal-form arithmetic in the enveloping algebra of the superalgebra
//! spanned by `x`, `y` (odd) and `h` (even), subject to
//!
//! ```text
//! [x, y] = xy + yx = 2h,   [x, h] = -x,   [y, h] = y.
//! ```
//!
//! Elements are kept in the ordered basis `x^a y^b h^c`. Products are
//! normalized by the three rewrite rules `yx -> 2h - xy`, `hx -> xh + x`,
//! `hy -> yh - y`, applied by left multiplication one generator at a time.

pub mod rewrite;
pub mod suites;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Scalar;

/// One of the three generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    X,
    Y,
    H,
}

impl Gen {
    pub fn parity(self) -> Parity {
        match self {
            Gen::X | Gen::Y => Parity::Odd,
            Gen::H => Parity::Even,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Gen::X => 'x',
            Gen::Y => 'y',
            Gen::H => 'h',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn of(bits: u32) -> Self {
        if bits.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, other: Parity) -> Parity {
        Parity::of(self.bit() + other.bit())
    }
}

/// The ordered word `x^x y^y h^h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub h: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, h: 0 };

    pub fn new(x: u32, y: u32, h: u32) -> Self {
        Self { x, y, h }
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.x + self.y)
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y + self.h
    }
}

/// Finite linear combination of ordered monomials with rational
/// coefficients. Zero coefficients are never stored, so equality of values
/// is equality in the algebra.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Scalar>,
}

thread_local! {
    static GEN_CACHE: RefCell<HashMap<(Gen, Monomial), AlgebraElement>> = RefCell::new(HashMap::new());
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE, Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(Scalar::from_integer(v.into()))
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn gen(g: Gen) -> Self {
        let m = match g {
            Gen::X => Monomial::new(1, 0, 0),
            Gen::Y => Monomial::new(0, 1, 0),
            Gen::H => Monomial::new(0, 0, 1),
        };
        Self::monomial(m, Scalar::one())
    }

    pub fn x() -> Self {
        Self::gen(Gen::X)
    }

    pub fn y() -> Self {
        Self::gen(Gen::Y)
    }

    pub fn h() -> Self {
        Self::gen(Gen::H)
    }

    /// `x^a y^b h^c` with unit coefficient.
    pub fn xyh(a: u32, b: u32, c: u32) -> Self {
        Self::monomial(Monomial::new(a, b, c), Scalar::one())
    }

    /// Builds `sum_k coeffs[k] * (h + shift)^k`.
    pub fn poly_in_h(coeffs: &[Scalar], shift: &Scalar) -> Self {
        let base = &Self::h() + &Self::constant(shift.clone());
        let mut out = Self::zero();
        let mut power = Self::one();
        for c in coeffs {
            out = &out + &power.scale(c);
            power = &power * &base;
        }
        out
    }

    /// The rising factorial `[h + shift]^p = (h+shift)(h+shift+1)...(h+shift+p-1)`.
    pub fn rising_h(shift: i64, p: u32) -> Self {
        (0..p as i64).fold(Self::one(), |acc, k| {
            &acc * &(&Self::h() + &Self::from_int(shift + k))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn add_scaled(&mut self, other: &Self, k: &Scalar) {
        for (m, c) in &other.terms {
            self.add_term(*m, c * k);
        }
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    /// `Some(parity)` if every monomial has the same parity. Zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Normal form of `g * self`.
    pub fn left_mul_gen(&self, g: Gen) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&gen_times_monomial(g, *m), c);
        }
        out
    }

    /// Normal form of the product `self * rhs`.
    pub fn multiply(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut acc = rhs.clone();
            for _ in 0..m.h {
                acc = acc.left_mul_gen(Gen::H);
            }
            for _ in 0..m.y {
                acc = acc.left_mul_gen(Gen::Y);
            }
            for _ in 0..m.x {
                acc = acc.left_mul_gen(Gen::X);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.multiply(self))
    }

    /// Super-commutator `ab - (-1)^{|a||b|} ba`. Both arguments must have
    /// pure parity.
    pub fn super_commutator(&self, rhs: &Self) -> Result<Self> {
        let pa = self.parity().ok_or(Error::MixedParity)?;
        let pb = rhs.parity().ok_or(Error::MixedParity)?;
        let ab = self.multiply(rhs);
        let ba = rhs.multiply(self);
        Ok(if pa == Parity::Odd && pb == Parity::Odd {
            &ab + &ba
        } else {
            &ab - &ba
        })
    }

    /// Drops every monomial with `x`-degree at least `k`. Because the basis
    /// is `x`-left, what is dropped is exactly a left multiple of `x^k`.
    pub fn reduce_mod_x_power(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x < k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// For `self` a left multiple of `x^k` (every monomial has `x`-degree at
    /// least `k`), returns `Z` with `x^k Z = self`.
    pub fn strip_left_x(&self, k: u32) -> Option<Self> {
        if self.terms.keys().any(|m| m.x < k) {
            return None;
        }
        Some(Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x - k, m.y, m.h), c.clone()))
                .collect(),
        })
    }

    /// The product-reversing involution that swaps `x` and `y` and fixes `h`.
    pub fn transpose(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            // reverse of x^a y^b h^c, then swap: h^c x^b y^a
            let word = Self::xyh(0, 0, m.h)
                .multiply(&Self::xyh(m.y, 0, 0))
                .multiply(&Self::xyh(0, m.x, 0));
            out.add_scaled(&word, c);
        }
        out
    }

    /// Interchange of `x` with `-y` and `h` with `-h`, extended to the
    /// enveloping algebra as `-transpose`. On generators it is the stated
    /// substitution and it turns `[a, b]` into `(-1)^{|a||b|} [τa, τb]`; on
    /// products it satisfies `τ(ab) = -τ(b)τ(a)`.
    pub fn interchange(&self) -> Self {
        -self.transpose()
    }

    /// Terms in display order.
    pub fn display_terms(&self) -> Vec<(Monomial, Scalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| {
            b.degree()
                .cmp(&a.degree())
                .then_with(|| (b.x, b.y, b.h).cmp(&(a.x, a.y, a.h)))
        });
        v
    }
}

fn gen_times_monomial(g: Gen, m: Monomial) -> AlgebraElement {
    if g == Gen::X {
        return AlgebraElement::monomial(Monomial::new(m.x + 1, m.y, m.h), Scalar::one());
    }
    if let Some(hit) = GEN_CACHE.with(|c| c.borrow().get(&(g, m)).cloned()) {
        return hit;
    }
    let out = match g {
        Gen::X => unreachable!(),
        // h x = x h + x
        Gen::H if m.x > 0 => {
            let rest = AlgebraElement::xyh(m.x - 1, m.y, m.h);
            &rest.left_mul_gen(Gen::H).left_mul_gen(Gen::X) + &rest.left_mul_gen(Gen::X)
        }
        // h y = y h - y
        Gen::H if m.y > 0 => {
            let rest = AlgebraElement::xyh(0, m.y - 1, m.h);
            &rest.left_mul_gen(Gen::H).left_mul_gen(Gen::Y) - &rest.left_mul_gen(Gen::Y)
        }
        Gen::H => AlgebraElement::xyh(0, 0, m.h + 1),
        // y x = 2h - x y
        Gen::Y if m.x > 0 => {
            let rest = AlgebraElement::xyh(m.x - 1, m.y, m.h);
            &rest.left_mul_gen(Gen::H).scale(&Scalar::from_integer(2.into()))
                - &rest.left_mul_gen(Gen::Y).left_mul_gen(Gen::X)
        }
        Gen::Y => AlgebraElement::xyh(0, m.y + 1, m.h),
    };
    GEN_CACHE.with(|c| c.borrow_mut().insert((g, m), out.clone()));
    out
}

impl<'a> Add<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl<'a> Sub<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl<'a> Mul<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs)
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Scalar::one())
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Scalar::one())
    }
}

fn write_factor(out: &mut Vec<String>, sym: char, e: u32) {
    match e {
        0 => {}
        1 => out.push(sym.to_string()),
        _ => out.push(format!("{sym}^{e}")),
    }
}

impl fmt::Display for AlgebraElement {
    /// Terms by descending total degree, ties broken lexicographically on
    /// `(x, y, h)` exponents, largest first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.display_terms() {
            let mut factors = Vec::new();
            write_factor(&mut factors, 'x', m.x);
            write_factor(&mut factors, 'y', m.y);
            write_factor(&mut factors, 'h', m.h);
            crate::symbolic::write_signed_rational(f, &c, &factors.join("*"), &mut first)?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}

/// `2^k` as a rational.
pub(crate) fn pow2(k: u32) -> Scalar {
    BigRational::from_integer(num_bigint::BigInt::from(2).pow(k))
}

pub(crate) fn factorial(k: u32) -> Scalar {
    BigRational::from_integer((1..=k).fold(num_bigint::BigInt::one(), |acc, i| acc * i))
}
