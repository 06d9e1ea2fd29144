//! Verification suites for the flat model.

use super::gamma::Signature;
use super::gauss::GaussRat;
use super::spinor::{is_tangential, reduce_mod_q, AmbientOps, Op, PolySpinor};
use crate::algebra::rewrite::{random_word, word_product, word_to_string};
use crate::report::{Report, Status};
use crate::rng::{seeded, SuiteRng};
use crate::{Result, Scalar};

/// Signatures used by default for the flat relation checks.
pub const DEFAULT_SIGNATURES: [Signature; 4] = [
    Signature { r: 1, s: 1 },
    Signature { r: 2, s: 1 },
    Signature { r: 2, s: 2 },
    Signature { r: 3, s: 2 },
];

const TERMS: usize = 3;

fn is_odd(op: Op) -> bool {
    matches!(op, Op::X | Op::Y)
}

/// `(label, a, b, rhs)` meaning `[a, b] = Σ c * op`.
pub type FlatRelation = (&'static str, Op, Op, Vec<(i64, Op)>);

/// The twelve commutation relations as operator identities.
pub fn flat_relation_table() -> Vec<FlatRelation> {
    use Op::*;
    vec![
        ("[x,x]=2Q", X, X, vec![(2, Q)]),
        ("[y,y]=2D", Y, Y, vec![(2, Lap)]),
        ("[x,y]=2h", X, Y, vec![(2, H)]),
        ("[Q,x]=0", Q, X, vec![]),
        ("[Q,y]=-2x", Q, Y, vec![(-2, X)]),
        ("[Q,h]=-2Q", Q, H, vec![(-2, Q)]),
        ("[D,x]=2y", Lap, X, vec![(2, Y)]),
        ("[D,y]=0", Lap, Y, vec![]),
        ("[D,h]=2D", Lap, H, vec![(2, Lap)]),
        ("[D,Q]=4h", Lap, Q, vec![(4, H)]),
        ("[x,h]=-x", X, H, vec![(-1, X)]),
        ("[y,h]=y", Y, H, vec![(1, Y)]),
    ]
}

fn bracket_on(ops: &AmbientOps, a: Op, b: Op, psi: &PolySpinor) -> Result<PolySpinor> {
    let ab = ops.apply_seq(&[a, b], psi)?;
    let ba = ops.apply_seq(&[b, a], psi)?;
    Ok(if is_odd(a) && is_odd(b) {
        ab.add(&ba)
    } else {
        ab.sub(&ba)
    })
}

fn combo_on(ops: &AmbientOps, rhs: &[(i64, Op)], psi: &PolySpinor) -> Result<PolySpinor> {
    let sig = ops.signature();
    let mut out = PolySpinor::zero(sig.dim(), sig.spinor_dim());
    for &(c, op) in rhs {
        out = out.add(&ops.apply(op, psi)?.scale(&GaussRat::from_int(c)));
    }
    Ok(out)
}

fn random_spinor(rng: &mut SuiteRng, sig: Signature, maxdeg: u32) -> PolySpinor {
    PolySpinor::random(rng, sig.dim(), sig.spinor_dim(), maxdeg, TERMS)
}

/// Tallies `trials` runs of `check` into one case.
fn tally(report: &mut Report, id: String, trials: usize, mut check: impl FnMut(usize) -> Result<bool>) {
    let mut good = 0;
    let mut note = String::new();
    for t in 0..trials {
        match check(t) {
            Ok(true) => good += 1,
            Ok(false) => {}
            Err(e) => note = e.to_string(),
        }
    }
    let status = if good == trials {
        Status::Pass
    } else {
        Status::Fail
    };
    report.record(
        id,
        status,
        format!("{trials}/{trials}"),
        format!("{good}/{trials}"),
        note,
    );
}

/// The twelve relations plus `x∘x = Q` and `y∘y = Δ` on random spinors of
/// degree at most `maxdeg`. The zero spinor is always included.
pub fn verify_flat_relations(sig: Signature, maxdeg: u32, trials: usize, seed: u64) -> Report {
    let mut report = Report::new("flat-relations", Some(seed));
    let ops = match AmbientOps::new(sig) {
        Ok(ops) => ops,
        Err(e) => {
            report.record(
                format!("signature {sig}"),
                Status::Fail,
                "valid",
                e.to_string(),
                "",
            );
            return report;
        }
    };
    let mut rng = seeded(seed);
    let mut inputs = vec![PolySpinor::zero(sig.dim(), sig.spinor_dim())];
    inputs.extend((0..trials).map(|_| random_spinor(&mut rng, sig, maxdeg)));

    for (label, a, b, rhs) in flat_relation_table() {
        tally(&mut report, format!("{label} {sig}"), inputs.len(), |t| {
            Ok(bracket_on(&ops, a, b, &inputs[t])? == combo_on(&ops, &rhs, &inputs[t])?)
        });
    }
    let squares = [("x*x=Q", Op::X, Op::Q), ("y*y=D", Op::Y, Op::Lap)];
    for (label, a, sq) in squares {
        tally(&mut report, format!("{label} {sig}"), inputs.len(), |t| {
            Ok(ops.apply_seq(&[a, a], &inputs[t])? == ops.apply(sq, &inputs[t])?)
        });
    }
    report
}

/// Normal-form evaluation against direct application for random words.
pub fn cross_module_oracle(sig: Signature, words: usize, max_len: usize, seed: u64) -> Report {
    let mut report = Report::new("oracle", Some(seed));
    let ops = match AmbientOps::new(sig) {
        Ok(ops) => ops,
        Err(e) => {
            report.record(
                format!("signature {sig}"),
                Status::Fail,
                "valid",
                e.to_string(),
                "",
            );
            return report;
        }
    };
    let mut rng = seeded(seed);
    let mut by_len = vec![(0usize, 0usize, String::new()); max_len + 1];
    for _ in 0..words {
        let w = random_word(&mut rng, max_len);
        let psi = random_spinor(&mut rng, sig, 2);
        let direct = ops.apply_word(&w, &psi);
        let nf = ops.eval_element(&word_product(&w), &psi);
        let slot = &mut by_len[w.len()];
        slot.0 += 1;
        match (direct, nf) {
            (Ok(a), Ok(b)) if a == b => slot.1 += 1,
            _ if slot.2.is_empty() => slot.2 = format!("disagrees on {}", word_to_string(&w)),
            _ => {}
        }
    }
    for (len, (total, good, note)) in by_len.into_iter().enumerate() {
        if total == 0 {
            continue;
        }
        let status = if good == total { Status::Pass } else { Status::Fail };
        report.record(
            format!("words of length {len} {sig}"),
            status,
            format!("{total}/{total}"),
            format!("{good}/{total}"),
            note,
        );
    }
    report
}

/// Relations, the `h` eigenvalue rule, the quotient by the quadratic form
/// and the cross-module oracle, for one signature.
pub fn verify_flat_suite(sig: Signature, maxdeg: u32, trials: usize, seed: u64) -> Report {
    let mut report = Report::new("flat", Some(seed));
    report.absorb(verify_flat_relations(sig, maxdeg, trials, seed));
    let Ok(ops) = AmbientOps::new(sig) else {
        return report;
    };
    let mut rng = seeded(seed.wrapping_add(1));
    let half_d = Scalar::new((sig.dim() as i64).into(), 2.into());

    for k in 0..=maxdeg {
        let eig = Scalar::from_integer(k.into()) + &half_d;
        tally(&mut report, format!("h on degree {k} {sig}"), trials, |_| {
            let psi = PolySpinor::random_homogeneous(&mut rng, sig.dim(), sig.spinor_dim(), k, TERMS);
            Ok(ops.apply(Op::H, &psi)? == psi.scale_rational(&eig))
        });
    }
    tally(&mut report, format!("x*phi tangential {sig}"), trials, |_| {
        let phi = random_spinor(&mut rng, sig, maxdeg);
        is_tangential(&ops, &ops.apply(Op::X, &phi)?)
    });
    tally(&mut report, format!("Q*psi = 0 mod Q {sig}"), trials, |_| {
        let psi = random_spinor(&mut rng, sig, maxdeg);
        Ok(reduce_mod_q(&ops.apply(Op::Q, &psi)?, sig).is_zero())
    });
    tally(
        &mut report,
        format!("mod Q idempotent and linear {sig}"),
        trials,
        |_| {
            let a = random_spinor(&mut rng, sig, maxdeg + 1);
            let b = random_spinor(&mut rng, sig, maxdeg + 1);
            let ra = reduce_mod_q(&a, sig);
            let linear = reduce_mod_q(&a.add(&b), sig) == ra.add(&reduce_mod_q(&b, sig));
            Ok(reduce_mod_q(&ra, sig) == ra && linear)
        },
    );
    report.absorb(cross_module_oracle(sig, 100, 4, seed));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_plane_relations() {
        let r = verify_flat_relations(Signature { r: 1, s: 1 }, 3, 5, 0);
        assert_eq!(r.summary.total, 14);
        assert!(r.passed(), "{}", r.to_table());
    }

    #[test]
    fn flat_suite_small() {
        let r = verify_flat_suite(Signature { r: 2, s: 1 }, 2, 3, 1);
        assert!(r.passed(), "{}", r.to_table());
    }
}
