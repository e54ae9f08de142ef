//! Finite strict 2-PIMs as multiplication tables.

mod build;
mod hilbert;
mod oracle;

pub use build::{build, normal_forms, normalize, rewrite_rules};
pub use hilbert::{hilbert, hilbert_truncated, order, HilbertSeries};
pub use oracle::{congruence_monoid, default_bound, oracle_for, OracleOutcome};

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::word::{Generator, Word};

/// A finite monoid generated by one involution and one idempotent.
///
/// Element ids follow breadth-first order from the identity under right
/// multiplication, trying ◇ before □, so `elements[i]` is the shortlex-least
/// word for element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    elements: Vec<Word>,
    table: Vec<Vec<usize>>,
    identity: usize,
    gen_inv: usize,
    gen_idem: usize,
}

impl FiniteMonoid {
    /// Explores the states reachable from `start` under `step`, which must be
    /// right multiplication by a generator in some faithful model.
    ///
    /// Returns the monoid and the state of each element.
    pub fn from_action<S, F>(start: S, mut step: F, cap: Option<usize>) -> Result<(FiniteMonoid, Vec<S>)>
    where
        S: Clone + Eq + Hash,
        F: FnMut(&S, Generator) -> S,
    {
        let mut index: HashMap<S, usize> = HashMap::new();
        let mut states = vec![start.clone()];
        let mut words = vec![Word::empty()];
        let mut right: Vec<[usize; 2]> = Vec::new();
        index.insert(start, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let mut row = [0usize; 2];
            for (slot, g) in Generator::ALL.into_iter().enumerate() {
                let next = step(&states[i], g);
                row[slot] = match index.entry(next) {
                    Entry::Occupied(o) => *o.get(),
                    Entry::Vacant(v) => {
                        let id = states.len();
                        if cap.is_some_and(|c| id >= c) {
                            return Err(Error::CapExceeded { cap: cap.unwrap_or(0) });
                        }
                        states.push(v.key().clone());
                        v.insert(id);
                        words.push(words[i].append(g));
                        queue.push_back(id);
                        id
                    }
                };
            }
            debug_assert_eq!(right.len(), i);
            right.push(row);
        }
        let n = states.len();
        let walk = |from: usize, w: &Word| {
            w.letters().iter().fold(from, |cur, g| right[cur][gen_slot(*g)])
        };
        let table: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| walk(i, &words[j])).collect())
            .collect();
        let monoid = FiniteMonoid {
            identity: 0,
            gen_inv: right[0][0],
            gen_idem: right[0][1],
            elements: words,
            table,
        };
        Ok((monoid, states))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn gen_inv(&self) -> usize {
        self.gen_inv
    }

    pub fn gen_idem(&self) -> usize {
        self.gen_idem
    }

    pub fn generator(&self, g: Generator) -> usize {
        match g {
            Generator::Inv => self.gen_inv,
            Generator::Idem => self.gen_idem,
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// The element represented by `w`.
    pub fn eval(&self, w: &Word) -> usize {
        w.letters()
            .iter()
            .fold(self.identity, |cur, &g| self.mul(cur, self.generator(g)))
    }

    pub fn satisfies(&self, lhs: &Word, rhs: &Word) -> bool {
        self.eval(lhs) == self.eval(rhs)
    }

    /// Number of elements whose shortest word has each length.
    pub fn grading(&self) -> HilbertSeries {
        let top = self.elements.iter().map(Word::len).max().unwrap_or(0);
        let mut coeffs = vec![0u64; top + 1];
        for w in &self.elements {
            coeffs[w.len()] += 1;
        }
        HilbertSeries::new(coeffs)
    }

    /// True if some element's powers cover the whole monoid.
    pub fn is_monogenic(&self) -> bool {
        (0..self.order()).any(|g| {
            let mut seen = vec![false; self.order()];
            let mut cur = self.identity;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.mul(cur, g);
            }
            seen.iter().all(|&s| s)
        })
    }

    /// Full check of the monoid axioms and the generator relations.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.order();
        if self.table.len() != n || self.table.iter().any(|row| row.len() != n) {
            return Err("table is not n x n".to_string());
        }
        for a in 0..n {
            if self.mul(self.identity, a) != a || self.mul(a, self.identity) != a {
                return Err(format!("identity fails on element {a}"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("associativity fails on ({a}, {b}, {c})"));
                    }
                }
            }
        }
        if self.mul(self.gen_inv, self.gen_inv) != self.identity {
            return Err("involution generator does not square to the identity".to_string());
        }
        if self.mul(self.gen_idem, self.gen_idem) != self.gen_idem {
            return Err("idempotent generator is not idempotent".to_string());
        }
        for (i, w) in self.elements.iter().enumerate() {
            if self.eval(w) != i {
                return Err(format!("element {i} is not reached by its word {}", w.to_token()));
            }
        }
        Ok(())
    }

    /// Line 1 `n=<order>`, line 2 the element words (`Id` for the empty
    /// word), then the table row by row.
    pub fn serialize(&self) -> String {
        let mut out = format!("n={}\n", self.order());
        let words: Vec<String> = self.elements.iter().map(Word::to_token).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

fn gen_slot(g: Generator) -> usize {
    match g {
        Generator::Inv => 0,
        Generator::Idem => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// {Id, □} with ◇ acting as the identity.
    fn two_element() -> FiniteMonoid {
        FiniteMonoid::from_action(false, |s, g| *s || g == Generator::Idem, None)
            .unwrap()
            .0
    }

    #[test]
    fn from_action_two_element() {
        let m = two_element();
        assert_eq!(m.order(), 2);
        assert_eq!(m.gen_inv(), m.identity());
        assert_eq!(m.elements()[1].to_string(), "B");
        m.check_invariants().unwrap();
        assert!(m.is_monogenic());
        assert_eq!(m.serialize(), "n=2\nId B\n0 1\n1 1\n");
    }

    #[test]
    fn cap_is_enforced() {
        let err = FiniteMonoid::from_action(0u32, |s, _| s + 1, Some(5)).unwrap_err();
        assert_eq!(err, Error::CapExceeded { cap: 5 });
    }

    #[test]
    fn cyclic_group_of_order_two_is_monogenic() {
        let (m, _) = FiniteMonoid::from_action(
            false,
            |s, g| match g {
                Generator::Inv => !*s,
                Generator::Idem => *s,
            },
            None,
        )
        .unwrap();
        assert_eq!(m.order(), 2);
        assert!(m.is_monogenic());
        assert_eq!(m.gen_idem(), m.identity());
    }
}
