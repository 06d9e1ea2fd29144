//! The filtered modules `s(p,q)[w]`: weight-`w` spinors `x^p ψ` modulo
//! `O(x^q)`, over the field `Q(n, w)`.
//!
//! A spinor is stored as slots `k ↦ ψ_k` meaning `Σ x^k ψ_k`, where each
//! `ψ_k` is a combination of free atoms `y^m σ`. An atom in slot `k` of a
//! spinor of weight `W` has weight `W - k`, so its `h`-eigenvalue is
//! `W - k + n/2 + 1`; that is all the actions need to know about it.

mod inverse;

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::rng::{rational, SuiteRng};
use crate::symbolic::SymScalar;
use crate::{Error, Result};

pub use inverse::{
    displayed_exceptional_set, exceptional_weights, floor_formula_set, inverse_pivots, y_as_x_inverse,
    y_inverse, yiso_report,
};

/// `y^m σ_sym`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub sym: u32,
    pub m: u32,
}

impl Atom {
    pub fn new(sym: u32, m: u32) -> Self {
        Self { sym, m }
    }

    /// The base symbol `σ` itself.
    pub fn base(sym: u32) -> Self {
        Self::new(sym, 0)
    }

    pub fn apply_y(self) -> Self {
        Self::new(self.sym, self.m + 1)
    }
}

pub fn symbol_name(sym: u32) -> String {
    match sym {
        0 => "sigma".into(),
        1 => "tau".into(),
        k => format!("theta{k}"),
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            0 => write!(f, "{}", symbol_name(self.sym)),
            1 => write!(f, "y*{}", symbol_name(self.sym)),
            m => write!(f, "y^{m}*{}", symbol_name(self.sym)),
        }
    }
}

/// Finite combination of atoms with coefficients in `Q(n, w)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Vector {
    terms: BTreeMap<Atom, SymScalar>,
}

impl Vector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn atom(a: Atom) -> Self {
        Self::term(a, SymScalar::one())
    }

    pub fn term(a: Atom, c: SymScalar) -> Self {
        let mut v = Self::zero();
        v.add_term(a, c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Atom, &SymScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, a: &Atom) -> SymScalar {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, a: Atom, c: SymScalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&a) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(a, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(*a, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&SymScalar::from_int(-1)))
    }

    pub fn scale(&self, k: &SymScalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(a, c)| (*a, c * k)).collect(),
        }
    }

    /// Free action of `y`: `y^m σ ↦ y^{m+1} σ`.
    pub fn apply_y(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(a, c)| (a.apply_y(), c.clone())).collect(),
        }
    }

    /// `Some(c)` with `self = c * other`, if the two are parallel and
    /// `other` is nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<SymScalar> {
        let (a, c) = other.terms.iter().next()?;
        let k = &self.coefficient(a) / c;
        (other.scale(&k) == *self).then_some(k)
    }
}

fn write_coefficient_term(
    f: &mut fmt::Formatter<'_>,
    c: &SymScalar,
    body: &str,
    first: &mut bool,
) -> fmt::Result {
    if let Some(q) = c.as_rational() {
        return crate::symbolic::write_signed_rational(f, &q, body, first);
    }
    if !*first {
        write!(f, " + ")?;
    }
    *first = false;
    write!(f, "({c})*{body}")
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, c) in &self.terms {
            write_coefficient_term(f, c, &a.to_string(), &mut first)?;
        }
        Ok(())
    }
}

/// Element of `s(start, end)[weight]`; `end = None` means no truncation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FilteredSpinor {
    weight: SymScalar,
    start: usize,
    end: Option<usize>,
    slots: BTreeMap<usize, Vector>,
}

fn within(k: usize, start: usize, end: Option<usize>) -> bool {
    k >= start && end.is_none_or(|e| k < e)
}

impl FilteredSpinor {
    pub fn new(weight: SymScalar, start: usize, end: Option<usize>) -> Self {
        Self {
            weight,
            start,
            end,
            slots: BTreeMap::new(),
        }
    }

    /// `x^k v` in `s(k, end)[weight]`.
    pub fn single(weight: SymScalar, k: usize, v: Vector, end: Option<usize>) -> Self {
        let mut out = Self::new(weight, k, end);
        out.add_to_slot(k, v);
        out
    }

    pub fn weight(&self) -> &SymScalar {
        &self.weight
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> Option<usize> {
        self.end
    }

    pub fn slot(&self, k: usize) -> Vector {
        self.slots.get(&k).cloned().unwrap_or_default()
    }

    pub fn slots(&self) -> impl Iterator<Item = (&usize, &Vector)> {
        self.slots.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.slots.is_empty()
    }

    /// Lowest nonzero slot.
    pub fn order(&self) -> Option<usize> {
        self.slots.keys().next().copied()
    }

    /// Adds `x^k v`; silently dropped outside the window.
    pub fn add_to_slot(&mut self, k: usize, v: Vector) {
        if !within(k, self.start, self.end) || v.is_zero() {
            return;
        }
        let sum = match self.slots.remove(&k) {
            Some(old) => old.add(&v),
            None => v,
        };
        if !sum.is_zero() {
            self.slots.insert(k, sum);
        }
    }

    /// `h`-eigenvalue of an atom sitting in slot `k`.
    pub fn eigenvalue_at(&self, k: usize) -> SymScalar {
        eigenvalue(&self.weight, k)
    }

    /// Reduces modulo `O(x^end)`.
    pub fn truncate(&self, end: usize) -> Self {
        let end = self.end.map_or(end, |e| e.min(end));
        let mut out = Self::new(self.weight.clone(), self.start, Some(end));
        for (k, v) in &self.slots {
            out.add_to_slot(*k, v.clone());
        }
        out
    }

    /// Sum in `s(min start, min end)`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch(format!(
                "{} vs {}",
                self.weight, other.weight
            )));
        }
        let end = match (self.end, other.end) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = Self::new(self.weight.clone(), self.start.min(other.start), end);
        for (k, v) in self.slots.iter().chain(&other.slots) {
            out.add_to_slot(*k, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&SymScalar::from_int(-1)))
    }

    pub fn scale(&self, k: &SymScalar) -> Self {
        let mut out = Self::new(self.weight.clone(), self.start, self.end);
        for (s, v) in &self.slots {
            out.add_to_slot(*s, v.scale(k));
        }
        out
    }

    /// `x: s(p,q)[w] → s(p+1,q+1)[w+1]`.
    pub fn act_x(&self) -> Self {
        let mut out = Self::new(
            &self.weight + &SymScalar::one(),
            self.start + 1,
            self.end.map(|e| e + 1),
        );
        for (k, v) in &self.slots {
            out.add_to_slot(k + 1, v.clone());
        }
        out
    }

    /// `y: s(p,q)[w] → s(p-1,q-1)[w-1]`, using
    /// `y x^{2j} = x^{2j} y + 2j x^{2j-1}` and
    /// `y x^{2j+1} = -x^{2j+1} y + 2 x^{2j} (h + j)`.
    pub fn act_y(&self) -> Self {
        let mut out = Self::new(
            &self.weight - &SymScalar::one(),
            self.start.saturating_sub(1),
            self.end.map(|e| e.saturating_sub(1)),
        );
        for (&k, v) in &self.slots {
            let yv = v.apply_y();
            if k == 0 {
                out.add_to_slot(0, yv);
            } else if k % 2 == 0 {
                out.add_to_slot(k, yv);
                out.add_to_slot(k - 1, v.scale(&SymScalar::from_int(k as i64)));
            } else {
                out.add_to_slot(k, yv.scale(&SymScalar::from_int(-1)));
                let c = odd_pivot(&self.weight, k);
                out.add_to_slot(k - 1, v.scale(&c));
            }
        }
        out
    }

    pub fn act_y_pow(&self, e: u32) -> Self {
        (0..e).fold(self.clone(), |acc, _| acc.act_y())
    }

    /// `h` acts on `s(p,q)[W]` by the scalar `W + n/2 + 1`.
    pub fn act_h(&self) -> Self {
        self.scale(&eigenvalue(&self.weight, 0))
    }

    /// `x^{-1}` on multiples of `x`: shifts every slot down by one.
    pub fn x_inverse_shift(&self) -> Result<Self> {
        if self.slots.contains_key(&0) {
            return Err(Error::NotDivisible);
        }
        let mut out = Self::new(
            &self.weight - &SymScalar::one(),
            self.start.saturating_sub(1),
            self.end.map(|e| e.saturating_sub(1)),
        );
        for (k, v) in &self.slots {
            out.add_to_slot(k - 1, v.clone());
        }
        Ok(out)
    }

    /// Base weight of every symbol, inferred from its occurrences: an atom
    /// `y^m σ` in slot `k` forces `weight(σ) = W - k + m`. Fails if two
    /// occurrences disagree.
    pub fn symbol_weights(&self) -> Result<BTreeMap<u32, SymScalar>> {
        let mut out: BTreeMap<u32, SymScalar> = BTreeMap::new();
        for (&k, v) in &self.slots {
            for (a, _) in v.terms() {
                let u = &(&self.weight - &SymScalar::from_int(k as i64)) + &SymScalar::from_int(a.m as i64);
                match out.get(&a.sym) {
                    Some(prev) if *prev != u => {
                        return Err(Error::WeightMismatch(format!(
                            "{} has weight {prev} and {u}",
                            symbol_name(a.sym)
                        )))
                    }
                    _ => {
                        out.insert(a.sym, u);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `h`-eigenvalue `W - k + n/2 + 1` of an atom in slot `k` of a weight-`W` spinor.
pub fn eigenvalue(weight: &SymScalar, k: usize) -> SymScalar {
    let half_n = &SymScalar::n() / &SymScalar::from_int(2);
    &(weight - &SymScalar::from_int(k as i64)) + &(&half_n + &SymScalar::one())
}

/// Coefficient `2(e + (k-1)/2)` deposited in slot `k-1` by `y` acting on
/// slot `k` odd; equals `2(W + n/2 - (k-1)/2)`.
fn odd_pivot(weight: &SymScalar, k: usize) -> SymScalar {
    let j = SymScalar::from_ratio(k as i64 - 1, 2);
    &SymScalar::from_int(2) * &(&eigenvalue(weight, k) + &j)
}

impl fmt::Display for FilteredSpinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, v) in &self.slots {
            let xk = match k {
                0 => String::new(),
                1 => "x*".into(),
                _ => format!("x^{k}*"),
            };
            for (a, c) in v.terms() {
                write_coefficient_term(f, c, &format!("{xk}{a}"), &mut first)?;
            }
        }
        Ok(())
    }
}

/// Random scalar `a + b n` with small rational `a`, `b`.
pub fn random_scalar(rng: &mut SuiteRng) -> SymScalar {
    let a = SymScalar::from_rational(rational(rng, 6, 4));
    let b = SymScalar::from_rational(rational(rng, 3, 2));
    &a + &(&b * &SymScalar::n())
}

/// Random spinor of the given weight with `atoms` fresh atoms in each slot
/// of `slots`; fresh symbols are numbered from `*next_sym` on, one per atom,
/// so that symbol weights stay consistent.
pub fn random_filtered(
    rng: &mut SuiteRng,
    weight: &SymScalar,
    slots: std::ops::Range<usize>,
    end: Option<usize>,
    atoms: usize,
    next_sym: &mut u32,
) -> FilteredSpinor {
    let mut out = FilteredSpinor::new(weight.clone(), slots.start, end);
    for k in slots {
        let mut v = Vector::zero();
        for _ in 0..atoms {
            let a = Atom::new(*next_sym, rng.gen_range(0..3));
            *next_sym += 1;
            v.add_term(a, random_scalar(rng));
        }
        out.add_to_slot(k, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    fn w() -> SymScalar {
        SymScalar::w()
    }

    fn sigma() -> Vector {
        Vector::atom(Atom::base(0))
    }

    #[test]
    fn y_at_slot_one() {
        let psi = FilteredSpinor::single(w(), 1, sigma(), None);
        let e = eigenvalue(&w(), 1);
        let expect = {
            let mut s = FilteredSpinor::new(&w() - &SymScalar::one(), 0, None);
            s.add_to_slot(0, sigma().scale(&(&SymScalar::from_int(2) * &e)));
            s.add_to_slot(1, Vector::atom(Atom::new(0, 1)).scale(&SymScalar::from_int(-1)));
            s
        };
        assert_eq!(psi.act_y(), expect);
    }

    #[test]
    fn y_at_slot_two() {
        let psi = FilteredSpinor::single(w(), 2, sigma(), None);
        assert_eq!(psi.act_y().to_string(), "2*x*sigma + x^2*y*sigma");
    }

    #[test]
    fn x_shifts_and_inverts() {
        let psi = FilteredSpinor::single(w(), 0, sigma(), Some(2));
        let xx = psi.act_x().act_x();
        assert_eq!(xx.start(), 2);
        assert_eq!(xx.end(), Some(4));
        assert_eq!(xx.weight(), &(&w() + &SymScalar::from_int(2)));
        assert_eq!(xx.x_inverse_shift().unwrap().x_inverse_shift().unwrap(), psi);
        assert_eq!(psi.x_inverse_shift(), Err(Error::NotDivisible));
        assert!(FilteredSpinor::new(w(), 0, None).act_x().is_zero());
    }

    #[test]
    fn h_is_diagonal() {
        let psi = FilteredSpinor::single(&w() - &SymScalar::one(), 0, sigma(), None);
        let e =
            &(&w() - &SymScalar::one()) + &(&(&SymScalar::n() / &SymScalar::from_int(2)) + &SymScalar::one());
        assert_eq!(psi.act_h(), psi.scale(&e));
    }

    #[test]
    fn superbracket_of_x_and_y_is_2h() {
        let mut rng = seeded(9);
        let mut sym = 0;
        for _ in 0..5 {
            let psi = random_filtered(&mut rng, &w(), 0..4, None, 2, &mut sym);
            let lhs = psi.act_x().act_y().add(&psi.act_y().act_x()).unwrap();
            assert_eq!(lhs, psi.act_h().scale(&SymScalar::from_int(2)));
        }
    }

    #[test]
    fn symbol_weights_are_consistent_after_actions() {
        let psi = FilteredSpinor::single(w(), 1, sigma(), None);
        let out = psi.act_y().act_y().act_x().act_y();
        let ws = out.symbol_weights().unwrap();
        assert_eq!(ws[&0], &w() - &SymScalar::one());
        let mut bad = psi.clone();
        bad.add_to_slot(2, sigma());
        assert!(bad.symbol_weights().is_err());
    }

    #[test]
    fn sums_check_weight() {
        let a = FilteredSpinor::single(w(), 1, sigma(), None);
        let b = FilteredSpinor::single(SymScalar::n(), 1, sigma(), None);
        assert!(matches!(a.add(&b), Err(Error::WeightMismatch(_))));
    }
}
