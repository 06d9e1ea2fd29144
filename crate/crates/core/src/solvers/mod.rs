//! Formal extension of cone spinors and the invariant operators.
//!
//! Even case: given `Ψ = xσ ∈ s(1,2)[w]`, find `ψ = xσ + Σ_{k≥2} x^k φ_k`
//! with `y²ψ = 0` order by order. Odd case: given `σ = x^{-1}Ψ`, find
//! `ψ = σ + Σ_{k≥1} x^k φ_k` with `yψ = 0`. At order `k` the new correction
//! enters the defect in one slot with a scalar pivot; when the pivot
//! vanishes and the defect does not, the defect there is the obstruction.

mod operators;
pub mod suites;

use crate::symbolic::SymScalar;
use crate::weighted::{Atom, FilteredSpinor, Vector};
use crate::Parity;

pub use operators::{
    c_even_closed_form, even_top_from, odd_top_from, op_l, op_r, output_weight, preferred_representative,
    proportionality_constant, r_even_on, r_odd_on, InvariantOperator, OperatorKind,
};

/// Symbol of the input spinor `σ`.
pub const SIGMA: u32 = 0;
/// Symbol reserved for pivot probes; never appears in results.
const PROBE: u32 = u32::MAX;

/// `p - n/2`, where the even extension is obstructed at order `2p`.
pub fn even_weight(p: u32) -> SymScalar {
    &SymScalar::from_int(p as i64) - &(&SymScalar::n() / &SymScalar::from_int(2))
}

/// `p - n/2 + 1`, where the odd extension is obstructed at order `2p+1`.
pub fn odd_weight(p: u32) -> SymScalar {
    &even_weight(p) + &SymScalar::one()
}

/// The obstruction met by a solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    /// Defect slot that could not be cleared.
    pub slot: usize,
    /// The defect shifted down so that `slot` becomes slot 0, modulo
    /// `O(x^2)`, with the free correction at the obstructed order set to zero.
    pub raw: FilteredSpinor,
    /// The top-degree form in `s(1,2)`: `x` times the obstructed slot.
    pub top: FilteredSpinor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionResult {
    pub parity: Parity,
    pub representative: FilteredSpinor,
    /// Highest order `k` whose correction `x^k φ_k` was determined.
    pub solvable_to: usize,
    pub obstruction: Option<Obstruction>,
    /// Monic factors `w + n/2 - m` of the pivots divided by, in order.
    pub denominators: Vec<SymScalar>,
}

impl ExtensionResult {
    /// `y²ψ` in the even case, `yψ` in the odd case.
    pub fn defect(&self) -> FilteredSpinor {
        apply_defect(self.parity, &self.representative)
    }

    /// Number of leading defect slots that vanish by construction.
    pub fn cleared_slots(&self) -> usize {
        match &self.obstruction {
            Some(o) => o.slot,
            None => self.solvable_to + 1 - shift(self.parity),
        }
    }
}

fn apply_defect(parity: Parity, psi: &FilteredSpinor) -> FilteredSpinor {
    match parity {
        Parity::Even => psi.act_y().act_y(),
        Parity::Odd => psi.act_y(),
    }
}

fn shift(parity: Parity) -> usize {
    match parity {
        Parity::Even => 2,
        Parity::Odd => 1,
    }
}

/// Pivot of order `k`: the coefficient with which `x^k φ` enters the
/// defect at slot `k - shift`, read off from the module actions.
fn pivot(parity: Parity, weight: &SymScalar, k: usize) -> SymScalar {
    let probe = FilteredSpinor::single(weight.clone(), k, Vector::atom(Atom::base(PROBE)), None);
    apply_defect(parity, &probe)
        .slot(k - shift(parity))
        .coefficient(&Atom::base(PROBE))
}

/// `x^{slot}`-shifted window `[slot, slot+2)` of `d`, moved down to `[0, 2)`.
fn raw_window(d: &FilteredSpinor, slot: usize) -> FilteredSpinor {
    let mut out = FilteredSpinor::new(d.weight() - &SymScalar::from_int(slot as i64), 0, Some(2));
    out.add_to_slot(0, d.slot(slot));
    out.add_to_slot(1, d.slot(slot + 1));
    out
}

/// `x` times slot `slot` of `d`, as an element of `s(1,2)`.
pub(crate) fn top_window(d: &FilteredSpinor, slot: usize) -> FilteredSpinor {
    let weight = &(d.weight() - &SymScalar::from_int(slot as i64)) + &SymScalar::one();
    FilteredSpinor::single(weight, 1, d.slot(slot), Some(2))
}

/// Runs the order-by-order solver from `lift`, adding corrections at orders
/// `first..=max_order`.
fn extend(parity: Parity, lift: &FilteredSpinor, first: usize, max_order: usize) -> ExtensionResult {
    let mut psi = lift.clone();
    let mut denominators: Vec<SymScalar> = Vec::new();
    let s = shift(parity);
    for k in first..=max_order {
        let d = apply_defect(parity, &psi);
        let target = d.slot(k - s);
        let c = pivot(parity, psi.weight(), k);
        if c.is_zero() {
            if target.is_zero() {
                continue;
            }
            return ExtensionResult {
                parity,
                obstruction: Some(Obstruction {
                    slot: k - s,
                    raw: raw_window(&d, k - s),
                    top: top_window(&d, k - s),
                }),
                representative: psi,
                solvable_to: k - 1,
                denominators,
            };
        }
        if !c.is_free_of_w() {
            let factor = SymScalar::from_poly(c.numerator().normalized());
            if !denominators.contains(&factor) {
                denominators.push(factor);
            }
        }
        let inv = c.recip().expect("nonzero pivot");
        psi.add_to_slot(k, target.scale(&(-&inv)));
    }
    ExtensionResult {
        parity,
        representative: psi,
        solvable_to: max_order,
        obstruction: None,
        denominators,
    }
}

/// `xσ` in `s(1,∞)[w]`.
pub fn even_lift(w: &SymScalar) -> FilteredSpinor {
    FilteredSpinor::single(w.clone(), 1, Vector::atom(Atom::base(SIGMA)), None)
}

/// `σ` in `s(0,∞)[w-1]`.
pub fn odd_lift(w: &SymScalar) -> FilteredSpinor {
    FilteredSpinor::single(w - &SymScalar::one(), 0, Vector::atom(Atom::base(SIGMA)), None)
}

/// Even extension of `Ψ = xσ` of weight `w`, up to order `max_order`.
pub fn even_extend(w: &SymScalar, max_order: usize) -> ExtensionResult {
    even_extend_from(&even_lift(w), max_order)
}

/// Even extension starting from an arbitrary lift in `s(1,∞)[w]`; content
/// already present in slots `≥ 2` is corrected, not discarded.
pub fn even_extend_from(lift: &FilteredSpinor, max_order: usize) -> ExtensionResult {
    extend(Parity::Even, lift, 2, max_order)
}

/// Odd extension of `σ = x^{-1}Ψ`, `Ψ` of weight `w`, up to order `max_order`.
pub fn odd_extend(w: &SymScalar, max_order: usize) -> ExtensionResult {
    odd_extend_from(&odd_lift(w), max_order)
}

/// Odd extension starting from an arbitrary lift in `s(0,∞)[w-1]`.
pub fn odd_extend_from(lift: &FilteredSpinor, max_order: usize) -> ExtensionResult {
    extend(Parity::Odd, lift, 1, max_order)
}

/// Checks that the defect of `result` vanishes in its cleared slots.
pub fn defect_is_cleared(result: &ExtensionResult) -> bool {
    let d = result.defect();
    (0..result.cleared_slots()).all(|k| d.slot(k).is_zero())
}
