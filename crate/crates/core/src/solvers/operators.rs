//! The obstruction operators `L_k`, the direct operators `R_k` and their
//! ratios.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::{even_extend, even_weight, odd_extend, odd_weight, top_window, Parity};
use crate::symbolic::SymScalar;
use crate::weighted::FilteredSpinor;
use crate::{Error, Result, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OperatorKind {
    LEven,
    REven,
    LOdd,
    ROdd,
}

impl OperatorKind {
    /// Order of the operator for the given `p`.
    pub fn order(self, p: u32) -> u32 {
        match self {
            OperatorKind::LEven | OperatorKind::REven => 2 * p,
            OperatorKind::LOdd | OperatorKind::ROdd => 2 * p + 1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            OperatorKind::LEven | OperatorKind::LOdd => 'L',
            OperatorKind::REven | OperatorKind::ROdd => 'R',
        }
    }
}

/// Value of an invariant operator on `Ψ = xσ`, an element of `s(1,2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantOperator {
    pub kind: OperatorKind,
    pub p: u32,
    pub value: FilteredSpinor,
}

impl fmt::Display for InvariantOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}_{} Psi = {}",
            self.kind.letter(),
            self.kind.order(self.p),
            self.value
        )
    }
}

pub(crate) fn exact_preferred(w: &SymScalar) -> Result<FilteredSpinor> {
    let r = odd_extend(w, 1);
    if r.obstruction.is_some() || r.solvable_to < 1 {
        return Err(Error::ExceptionalWeight(format!(
            "first-order step of the odd extension at w = {w}"
        )));
    }
    Ok(r.representative.act_x())
}

/// `x(σ + xφ₁)` in `s(1,3)[w]`, where `σ + xφ₁` is the unique solution of
/// `yψ = 0 mod O(x)`.
pub fn preferred_representative(w: &SymScalar) -> Result<FilteredSpinor> {
    Ok(exact_preferred(w)?.truncate(3))
}

/// `R_{2p}`: `x y^{2p} ψ mod O(x^2)` for any representative `ψ` of `Ψ` in
/// `s(1,∞)[p - n/2]`.
pub fn r_even_on(psi: &FilteredSpinor, p: u32) -> FilteredSpinor {
    top_window(&psi.act_y_pow(2 * p), 0)
}

/// `R_{2p+1}`: `y^{2p+1} ψ mod O(x^2)`; the slot-0 part must vanish.
pub fn r_odd_on(psi: &FilteredSpinor, p: u32) -> Result<FilteredSpinor> {
    let y = psi.act_y_pow(2 * p + 1);
    let slot0 = y.slot(0);
    if !slot0.is_zero() {
        return Err(Error::NonzeroSlotZero(slot0.to_string()));
    }
    Ok(FilteredSpinor::single(y.weight().clone(), 1, y.slot(1), Some(2)))
}

/// `L_{2p}` read off a solution: `x^{-2p+3} y²ψ mod O(x^2)`.
pub fn even_top_from(psi: &FilteredSpinor, p: u32) -> FilteredSpinor {
    top_window(&psi.act_y().act_y(), 2 * p as usize - 2)
}

/// `L_{2p+1}` read off a solution: `x^{-2p+1} yψ mod O(x^2)`.
pub fn odd_top_from(psi: &FilteredSpinor, p: u32) -> FilteredSpinor {
    top_window(&psi.act_y(), 2 * p as usize)
}

/// Direct operator on the default representative: `xσ` (even) or the
/// preferred representative (odd).
pub fn op_r(parity: Parity, p: u32) -> Result<InvariantOperator> {
    check_p(p)?;
    Ok(match parity {
        Parity::Even => InvariantOperator {
            kind: OperatorKind::REven,
            p,
            value: r_even_on(&super::even_lift(&even_weight(p)), p),
        },
        Parity::Odd => InvariantOperator {
            kind: OperatorKind::ROdd,
            p,
            value: r_odd_on(&exact_preferred(&odd_weight(p))?, p)?,
        },
    })
}

/// Obstruction operator: runs the solver at the special weight and returns
/// the top-degree obstruction, which must sit at slot `2p-2` (even) or
/// `2p` (odd).
pub fn op_l(parity: Parity, p: u32) -> Result<InvariantOperator> {
    check_p(p)?;
    let (result, slot, kind) = match parity {
        Parity::Even => (
            even_extend(&even_weight(p), 2 * p as usize),
            2 * p as usize - 2,
            OperatorKind::LEven,
        ),
        Parity::Odd => (
            odd_extend(&odd_weight(p), 2 * p as usize + 1),
            2 * p as usize,
            OperatorKind::LOdd,
        ),
    };
    match result.obstruction {
        Some(o) if o.slot == slot => Ok(InvariantOperator {
            kind,
            p,
            value: o.top,
        }),
        Some(o) => Err(Error::NoObstruction(format!(
            "expected slot {slot}, met slot {}",
            o.slot
        ))),
        None => Err(Error::NoObstruction(format!(
            "defect cleared through slot {slot}"
        ))),
    }
}

fn check_p(p: u32) -> Result<()> {
    if p == 0 {
        return Err(Error::InvalidArgument("p must be at least 1".into()));
    }
    Ok(())
}

/// The rational `c` with `R = c L`, checked to be nonzero and free of `n`.
pub fn proportionality_constant(parity: Parity, p: u32) -> Result<Scalar> {
    let l = op_l(parity, p)?;
    let r = op_r(parity, p)?;
    ratio(&r.value, &l.value)
}

fn ratio(r: &FilteredSpinor, l: &FilteredSpinor) -> Result<Scalar> {
    if r.weight() != l.weight() {
        return Err(Error::WeightMismatch(format!("{} vs {}", r.weight(), l.weight())));
    }
    let (rv, lv) = (r.slot(1), l.slot(1));
    let c = rv
        .ratio_to(&lv)
        .ok_or_else(|| Error::NotProportional(format!("{rv} vs {lv}")))?;
    let q = c
        .as_rational()
        .ok_or_else(|| Error::NotProportional(format!("ratio {c} depends on n")))?;
    if q.is_zero() {
        return Err(Error::NotProportional("ratio is zero".into()));
    }
    Ok(q)
}

/// `(-1)^{p-1} 2^{2p-2} ((p-1)!)^2`.
pub fn c_even_closed_form(p: u32) -> Scalar {
    let f = crate::algebra::factorial(p - 1);
    let sign = if p % 2 == 1 { 1 } else { -1 };
    crate::algebra::pow2(2 * p - 2) * &f * &f * Scalar::from_integer(sign.into())
}

/// Weight carried by `L_k`, `R_k`: `-p - n/2 + 1` (even) or `-p - n/2` (odd).
pub fn output_weight(parity: Parity, p: u32) -> SymScalar {
    let base = &SymScalar::from_int(-(p as i64)) - &(&SymScalar::n() / &SymScalar::from_int(2));
    match parity {
        Parity::Even => &base + &SymScalar::one(),
        Parity::Odd => base,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    #[test]
    fn direct_operators() {
        assert_eq!(op_r(Parity::Even, 1).unwrap().value.to_string(), "2*x*y*sigma");
        assert_eq!(op_r(Parity::Even, 2).unwrap().value.to_string(), "4*x*y^3*sigma");
        assert_eq!(op_r(Parity::Odd, 1).unwrap().value.to_string(), "-2*x*y^3*sigma");
    }

    #[test]
    fn preferred_p1() {
        let pref = preferred_representative(&odd_weight(1)).unwrap();
        assert_eq!(pref.to_string(), "x*sigma - 1/2*x^2*y*sigma");
        assert_eq!(pref.end(), Some(3));
    }

    #[test]
    fn constants() {
        assert_eq!(proportionality_constant(Parity::Even, 1).unwrap(), q(1));
        assert_eq!(proportionality_constant(Parity::Even, 2).unwrap(), q(-4));
        assert_eq!(proportionality_constant(Parity::Odd, 1).unwrap(), q(8));
        assert_eq!(c_even_closed_form(3), q(64));
    }

    #[test]
    fn weights() {
        for p in 1..=3 {
            assert_eq!(
                op_l(Parity::Even, p).unwrap().value.weight(),
                &output_weight(Parity::Even, p)
            );
            assert_eq!(
                op_r(Parity::Odd, p).unwrap().value.weight(),
                &output_weight(Parity::Odd, p)
            );
        }
    }
}
