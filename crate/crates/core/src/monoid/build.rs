//! Construction from normal forms and directed rewrite rules.
//!
//! Each class has a confluent system made of the two base rules plus one or
//! two rules oriented from the shortlex-larger side to the smaller one. Every
//! rule side is an alternating word, so they are written through
//! [`Word::alternating`].

use std::collections::HashSet;

use crate::equation::{Family, ParamEq, Parity};
use crate::error::{Error, Result};
use crate::reduce::CanonicalPresentation;
use crate::word::{quasi_reduce, quasi_reduced_words, Generator, Word};

use super::FiniteMonoid;

fn idem_first(len: u32) -> Word {
    Word::alternating(Generator::Idem, len as usize)
}

fn inv_first(len: u32) -> Word {
    Word::alternating(Generator::Inv, len as usize)
}

/// Rules `(from, to)` with `to` shortlex-smaller than `from`.
pub fn rewrite_rules(p: &ParamEq) -> Vec<(Word, Word)> {
    let k = p.k();
    match (p.family(), p.parity()) {
        (Family::F00, _) => {
            let top = k + p.ell().unwrap_or(1);
            // □(◇□)^(k+ell-1) → □(◇□)^(k-1)
            vec![(idem_first(2 * top - 1), idem_first(2 * k - 1))]
        }
        // □(◇□)^k → (□◇)^k
        (Family::F01, Parity::Circ) => vec![(idem_first(2 * k + 1), idem_first(2 * k))],
        // (□◇)^k → (□◇)^(k-1)□
        (Family::F01, Parity::Bullet) => vec![(idem_first(2 * k), idem_first(2 * k - 1))],
        // (□◇)^k□ → (◇□)^k
        (Family::F10, Parity::Circ) => vec![(idem_first(2 * k + 1), inv_first(2 * k))],
        // (◇□)^k → (□◇)^(k-1)□
        (Family::F10, Parity::Bullet) => vec![(inv_first(2 * k), idem_first(2 * k - 1))],
        // Equal lengths; ◇ < □ orients (□◇)^k → (◇□)^k.
        (Family::F11, Parity::Circ) => vec![(idem_first(2 * k), inv_first(2 * k))],
        // (◇□)^k = (□◇)^(k+1) alone is not confluent; both length-2k words
        // fall to the zero element (□◇)^(k-1)□.
        (Family::F11, Parity::Bullet) => vec![
            (inv_first(2 * k), idem_first(2 * k - 1)),
            (idem_first(2 * k), idem_first(2 * k - 1)),
        ],
    }
}

/// Quasi-reduces, then applies `rules` (leftmost match first) to a fixpoint.
pub fn normalize(w: &Word, rules: &[(Word, Word)]) -> Word {
    let mut cur = quasi_reduce(w);
    'outer: loop {
        for (from, to) in rules {
            if let Some(at) = cur.find(from) {
                cur = quasi_reduce(&cur.splice(at, from.len(), to));
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Quasi-reduced words containing no rule left side, in shortlex order.
pub fn normal_forms(p: &ParamEq) -> Vec<Word> {
    let rules = rewrite_rules(p);
    let longest = rules.iter().map(|(from, _)| from.len()).max().unwrap_or(0);
    // Any longer word contains an alternating factor of length `longest`.
    quasi_reduced_words(longest + 1)
        .into_iter()
        .filter(|w| rules.iter().all(|(from, _)| w.find(from).is_none()))
        .collect()
}

pub fn build(c: &CanonicalPresentation) -> Result<FiniteMonoid> {
    let p = match c {
        CanonicalPresentation::Free => return Err(Error::NotFinite),
        CanonicalPresentation::Monogenic(_) => {
            return Err(Error::Unsupported(
                "monogenic presentations are only available through the oracle".to_string(),
            ))
        }
        CanonicalPresentation::Classified(p) => p,
    };
    let rules = rewrite_rules(p);
    let forms: HashSet<Word> = normal_forms(p).into_iter().collect();
    let (monoid, states) =
        FiniteMonoid::from_action(Word::empty(), |w, g| normalize(&w.append(g), &rules), Some(forms.len()))?;
    debug_assert!(states.iter().all(|s| forms.contains(s)));
    Ok(monoid)
}
