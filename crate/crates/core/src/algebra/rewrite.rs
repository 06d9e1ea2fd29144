//! Literal word rewriting, independent of [`AlgebraElement::multiply`].
//!
//! A linear combination of words is reduced by repeatedly picking one
//! out-of-order adjacent pair (`yx`, `hx` or `hy`) and replacing it by the
//! right-hand side of its rule. Different pick strategies must all reach the
//! same normal form; that is the confluence check.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;

use super::{AlgebraElement, Gen, Monomial};
use crate::rng::SuiteRng;
use crate::Scalar;

pub type Word = Vec<Gen>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// First unreduced word, leftmost inversion.
    Leftmost,
    /// Last unreduced word, rightmost inversion.
    Rightmost,
    /// Uniformly random unreduced word and inversion.
    Random,
}

fn rank(g: Gen) -> u8 {
    match g {
        Gen::X => 0,
        Gen::Y => 1,
        Gen::H => 2,
    }
}

fn inversions(w: &[Gen]) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&i| rank(w[i]) > rank(w[i + 1]))
        .collect()
}

/// Right-hand side of the rule for the pair `(a, b)` with `a` after `b`.
fn rule(a: Gen, b: Gen) -> Vec<(Scalar, Word)> {
    let one = Scalar::one();
    let two = Scalar::from_integer(2.into());
    match (a, b) {
        // yx -> 2h - xy
        (Gen::Y, Gen::X) => vec![(two, vec![Gen::H]), (-one, vec![Gen::X, Gen::Y])],
        // hx -> xh + x
        (Gen::H, Gen::X) => vec![(one.clone(), vec![Gen::X, Gen::H]), (one, vec![Gen::X])],
        // hy -> yh - y
        (Gen::H, Gen::Y) => vec![(one.clone(), vec![Gen::Y, Gen::H]), (-one, vec![Gen::Y])],
        _ => unreachable!("pair is already ordered"),
    }
}

fn add_word(acc: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

/// Reduces `coeff * word` to normal form with the given strategy.
pub fn normalize_word(word: &[Gen], strategy: Strategy, rng: &mut SuiteRng) -> AlgebraElement {
    let mut pending: BTreeMap<Word, Scalar> = BTreeMap::new();
    pending.insert(word.to_vec(), Scalar::one());
    loop {
        let unreduced: Vec<&Word> = pending.keys().filter(|w| !inversions(w).is_empty()).collect();
        if unreduced.is_empty() {
            break;
        }
        let target = match strategy {
            Strategy::Leftmost => unreduced[0].clone(),
            Strategy::Rightmost => unreduced[unreduced.len() - 1].clone(),
            Strategy::Random => unreduced[rng.gen_range(0..unreduced.len())].clone(),
        };
        let inv = inversions(&target);
        let pos = match strategy {
            Strategy::Leftmost => inv[0],
            Strategy::Rightmost => inv[inv.len() - 1],
            Strategy::Random => inv[rng.gen_range(0..inv.len())],
        };
        let coeff = pending.remove(&target).expect("present");
        for (c, middle) in rule(target[pos], target[pos + 1]) {
            let mut w = target[..pos].to_vec();
            w.extend(middle);
            w.extend_from_slice(&target[pos + 2..]);
            add_word(&mut pending, w, &coeff * &c);
        }
    }
    let mut out = AlgebraElement::zero();
    for (w, c) in pending {
        let count = |g| w.iter().filter(|&&v| v == g).count() as u32;
        let m = Monomial::new(count(Gen::X), count(Gen::Y), count(Gen::H));
        out = &out + &AlgebraElement::monomial(m, c);
    }
    out
}

/// Normal form of a word computed through [`AlgebraElement::multiply`].
pub fn word_product(word: &[Gen]) -> AlgebraElement {
    word.iter().fold(AlgebraElement::one(), |acc, &g| {
        acc.multiply(&AlgebraElement::gen(g))
    })
}

pub fn random_word(rng: &mut SuiteRng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => Gen::X,
            1 => Gen::Y,
            _ => Gen::H,
        })
        .collect()
}

pub fn word_to_string(w: &[Gen]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|g| g.symbol().to_string())
        .collect::<Vec<_>>()
        .join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    #[test]
    fn strategies_agree_on_small_word() {
        let mut rng = seeded(3);
        let w = vec![Gen::H, Gen::Y, Gen::X, Gen::X, Gen::H];
        let a = normalize_word(&w, Strategy::Leftmost, &mut rng);
        let b = normalize_word(&w, Strategy::Rightmost, &mut rng);
        let c = normalize_word(&w, Strategy::Random, &mut rng);
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a, word_product(&w));
    }

    #[test]
    fn yx_rule() {
        let mut rng = seeded(0);
        let nf = normalize_word(&[Gen::Y, Gen::X], Strategy::Leftmost, &mut rng);
        assert_eq!(nf.to_string(), "-x*y + 2*h");
    }
}
