//! Verification suites for the solvers.

use std::ops::RangeInclusive;

use rand::Rng;

use super::operators::exact_preferred;
use super::*;
use crate::report::{Report, Status};
use crate::rng::{seeded, SuiteRng};
use crate::weighted::random_scalar;

/// Random admissible gauge `Σ_{k ∈ slots} x^k θ_k` in `s(·,∞)[weight]`,
/// where `σ` sits in slot `sigma_slot`. Each `θ_k` mixes the `σ`-descendant
/// of the right weight with a fresh atom.
fn gauge(
    rng: &mut SuiteRng,
    weight: &SymScalar,
    sigma_slot: usize,
    slots: RangeInclusive<usize>,
    next_sym: &mut u32,
) -> FilteredSpinor {
    let mut out = FilteredSpinor::new(weight.clone(), *slots.start(), None);
    for k in slots {
        let mut v = Vector::term(Atom::new(SIGMA, (k - sigma_slot) as u32), random_scalar(rng));
        v.add_term(Atom::new(*next_sym, rng.gen_range(0..3)), random_scalar(rng));
        *next_sym += 1;
        out.add_to_slot(k, v);
    }
    out
}

fn plus(a: &FilteredSpinor, b: &FilteredSpinor) -> FilteredSpinor {
    a.add(b).expect("gauge has the representative's weight")
}

fn tally(report: &mut Report, id: String, trials: usize, mut check: impl FnMut() -> bool) {
    let good = (0..trials).filter(|_| check()).count();
    report.check(
        id,
        good == trials,
        format!("{trials}/{trials}"),
        format!("{good}/{trials}"),
    );
}

/// Perturbs representatives by random admissible gauges and checks that
/// `R` and `L` of the given parity do not change.
pub fn representative_independence(parity: Parity, p: u32, trials: usize, seed: u64) -> Report {
    let mut report = Report::new("independence", Some(seed));
    let mut rng = seeded(seed ^ (u64::from(p) << 32) ^ parity.bit() as u64);
    let mut next_sym = 2;
    let pu = p as usize;
    let name = |letter: char| match parity {
        Parity::Even => format!("{letter}_{}", 2 * p),
        Parity::Odd => format!("{letter}_{}", 2 * p + 1),
    };

    let (r_base, l_base) = match (op_r(parity, p), op_l(parity, p)) {
        (Ok(r), Ok(l)) => (r.value, l.value),
        (r, l) => {
            let err = r.err().or(l.err()).map(|e| e.to_string()).unwrap_or_default();
            report.check(format!("{} and {}", name('R'), name('L')), false, "computed", err);
            return report;
        }
    };

    match parity {
        Parity::Even => {
            let w = even_weight(p);
            let lift = even_lift(&w);
            tally(
                &mut report,
                format!("{} under x^2*theta", name('R')),
                trials,
                || {
                    let g = gauge(&mut rng, &w, 1, 2..=2 * pu + 1, &mut next_sym);
                    r_even_on(&plus(&lift, &g), p) == r_base
                },
            );
            tally(
                &mut report,
                format!("{} under lift change", name('L')),
                trials,
                || {
                    let g = gauge(&mut rng, &w, 1, 2..=2 * pu, &mut next_sym);
                    let res = even_extend_from(&plus(&lift, &g), 2 * pu);
                    res.obstruction.is_some_and(|o| o.top == l_base)
                },
            );
            let solved = even_extend(&w, 2 * pu).representative;
            tally(
                &mut report,
                format!("{} under obstructed-order terms", name('L')),
                trials,
                || {
                    let g = gauge(&mut rng, &w, 1, 2 * pu..=2 * pu + 2, &mut next_sym);
                    let psi = plus(&solved, &g);
                    let d = psi.act_y().act_y();
                    (0..2 * pu - 2).all(|k| d.slot(k).is_zero()) && even_top_from(&psi, p) == l_base
                },
            );
        }
        Parity::Odd => {
            let w = odd_weight(p);
            let pref = match exact_preferred(&w) {
                Ok(v) => v,
                Err(e) => {
                    report.check("preferred representative", false, "exists", e.to_string());
                    return report;
                }
            };
            tally(
                &mut report,
                format!("{} under x^3*theta", name('R')),
                trials,
                || {
                    let g = gauge(&mut rng, &w, 1, 3..=2 * pu + 2, &mut next_sym);
                    r_odd_on(&plus(&pref, &g), p).is_ok_and(|v| v == r_base)
                },
            );
            let wm1 = &w - &SymScalar::one();
            let lift = odd_lift(&w);
            tally(
                &mut report,
                format!("{} under lift change", name('L')),
                trials,
                || {
                    let g = gauge(&mut rng, &wm1, 0, 1..=2 * pu + 1, &mut next_sym);
                    let res = odd_extend_from(&plus(&lift, &g), 2 * pu + 1);
                    res.obstruction.is_some_and(|o| o.top == l_base)
                },
            );
            let solved = odd_extend(&w, 2 * pu + 1).representative;
            tally(
                &mut report,
                format!("{} under obstructed-order terms", name('L')),
                trials,
                || {
                    let g = gauge(&mut rng, &wm1, 0, 2 * pu + 1..=2 * pu + 3, &mut next_sym);
                    let psi = plus(&solved, &g);
                    let d = psi.act_y();
                    (0..2 * pu).all(|k| d.slot(k).is_zero()) && odd_top_from(&psi, p) == l_base
                },
            );
        }
    }
    report
}

fn half_n() -> SymScalar {
    &SymScalar::n() / &SymScalar::from_int(2)
}

fn expected_factors(count: i64) -> Vec<SymScalar> {
    let w = SymScalar::w();
    (1..=count)
        .map(|m| &(&w + &half_n()) - &SymScalar::from_int(m))
        .collect()
}

fn show(v: &[SymScalar]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn check_text(report: &mut Report, id: &str, expected: &str, computed: String) {
    report.check(id, computed == expected, expected, computed);
}

/// Generic solvability, obstruction positions, the certified low-order
/// values, output weights and representative independence for the even
/// solver.
pub fn even_solver_report(pmax: u32, generic_order: usize, trials: usize, seed: u64) -> Report {
    let mut report = Report::new("even", Some(seed));
    let generic = even_extend(&SymScalar::w(), generic_order);
    let want = expected_factors((generic_order / 2) as i64);
    report.check(
        format!("generic w to order {generic_order}"),
        generic.obstruction.is_none() && generic.denominators == want && defect_is_cleared(&generic),
        show(&want),
        show(&generic.denominators),
    );

    for p in 1..=pmax {
        let r = even_extend(&even_weight(p), 2 * p as usize + 2);
        let slot = r.obstruction.as_ref().map(|o| o.slot);
        report.check(
            format!("obstruction slot p={p}"),
            slot == Some(2 * p as usize - 2) && defect_is_cleared(&r),
            (2 * p - 2).to_string(),
            slot.map_or("none".into(), |s| s.to_string()),
        );
    }

    let p2 = even_extend(&even_weight(2), 4).representative;
    check_text(
        &mut report,
        "phi_2 at p=2",
        "-1/2*y*sigma",
        p2.slot(2).to_string(),
    );
    check_text(
        &mut report,
        "phi_3 at p=2",
        "-1/4*y^2*sigma",
        p2.slot(3).to_string(),
    );
    for (p, expect) in [(1, "2*x*y*sigma"), (2, "-x*y^3*sigma")] {
        let got = op_l(Parity::Even, p).map_or_else(|e| e.to_string(), |l| l.value.to_string());
        check_text(&mut report, &format!("L_{}", 2 * p), expect, got);
    }
    for (p, expect) in [(1, "2*x*y*sigma"), (2, "4*x*y^3*sigma")] {
        let got = op_r(Parity::Even, p).map_or_else(|e| e.to_string(), |r| r.value.to_string());
        check_text(&mut report, &format!("R_{}", 2 * p), expect, got);
    }
    weights(&mut report, Parity::Even, pmax);
    for p in 1..=pmax {
        report.absorb(representative_independence(Parity::Even, p, trials, seed));
    }
    report
}

/// The odd counterpart of [`even_solver_report`].
pub fn odd_solver_report(pmax: u32, generic_order: usize, trials: usize, seed: u64) -> Report {
    let mut report = Report::new("odd", Some(seed));
    let generic = odd_extend(&SymScalar::w(), generic_order);
    let want = expected_factors(generic_order.div_ceil(2) as i64);
    report.check(
        format!("generic w to order {generic_order}"),
        generic.obstruction.is_none() && generic.denominators == want && defect_is_cleared(&generic),
        show(&want),
        show(&generic.denominators),
    );

    for p in 1..=pmax {
        let r = odd_extend(&odd_weight(p), 2 * p as usize + 3);
        let slot = r.obstruction.as_ref().map(|o| o.slot);
        report.check(
            format!("obstruction at order {} p={p}", 2 * p + 1),
            slot == Some(2 * p as usize) && r.solvable_to == 2 * p as usize && defect_is_cleared(&r),
            (2 * p).to_string(),
            slot.map_or("none".into(), |s| s.to_string()),
        );
    }

    let w1 = odd_weight(1);
    let r1 = odd_extend(&w1, 3);
    check_text(
        &mut report,
        "psi at p=1",
        "sigma - 1/2*x*y*sigma - 1/4*x^2*y^2*sigma",
        r1.representative.to_string(),
    );
    let pref = preferred_representative(&w1).map_or_else(|e| e.to_string(), |v| v.to_string());
    check_text(
        &mut report,
        "preferred representative p=1",
        "x*sigma - 1/2*x^2*y*sigma",
        pref,
    );
    let l3 = op_l(Parity::Odd, 1).map_or_else(|e| e.to_string(), |l| l.value.to_string());
    check_text(&mut report, "L_3", "-1/4*x*y^3*sigma", l3);
    let r3 = op_r(Parity::Odd, 1).map_or_else(|e| e.to_string(), |r| r.value.to_string());
    check_text(&mut report, "R_3", "-2*x*y^3*sigma", r3);
    let exceptional = preferred_representative(&odd_weight(0));
    report.check(
        "preferred representative at w = 1 - n/2",
        matches!(exceptional, Err(crate::Error::ExceptionalWeight(_))),
        "ExceptionalWeight",
        exceptional.map_or_else(|e| e.to_string(), |v| v.to_string()),
    );
    weights(&mut report, Parity::Odd, pmax);
    for p in 1..=pmax {
        report.absorb(representative_independence(Parity::Odd, p, trials, seed));
    }
    report
}

fn weights(report: &mut Report, parity: Parity, pmax: u32) {
    for p in 1..=pmax {
        let want = output_weight(parity, p);
        for op in [op_l(parity, p), op_r(parity, p)] {
            let id = match &op {
                Ok(v) => format!("weight of {}_{}", v.kind.letter(), v.kind.order(p)),
                Err(_) => format!("weight p={p}"),
            };
            let got = op.map_or_else(|e| e.to_string(), |v| v.value.weight().to_string());
            report.check(id, got == want.to_string(), want.to_string(), got);
        }
    }
}

/// `c` with `R = c L` for `p = 1..=pmax`. Even constants are compared with
/// `(-1)^{p-1} 2^{2p-2} ((p-1)!)^2`; odd ones are anchored at `c(1) = 8`
/// and otherwise only required to be nonzero rationals.
pub fn constants_report(parity: Parity, pmax: u32) -> Report {
    let name = match parity {
        Parity::Even => "constants-even",
        Parity::Odd => "constants-odd",
    };
    let mut report = Report::new(name, None);
    for p in 1..=pmax {
        let id = format!("p={p}");
        let c = proportionality_constant(parity, p);
        let computed = c.as_ref().map_or_else(|e| e.to_string(), |c| c.to_string());
        match parity {
            Parity::Even => {
                let want = c_even_closed_form(p);
                report.check(id, c.as_ref() == Ok(&want), want.to_string(), computed);
            }
            Parity::Odd if p == 1 => {
                report.check(id, computed == "8", "8", computed.clone());
            }
            Parity::Odd => {
                let status = if c.is_ok() { Status::Pass } else { Status::Fail };
                report.record(id, status, "nonzero rational", computed, "");
            }
        }
    }
    report
}
