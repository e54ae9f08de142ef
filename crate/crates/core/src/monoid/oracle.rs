//! Bounded congruence closure, independent of the closed forms.
//!
//! Works on the quasi-reduced words of length at most `L` (every word is
//! equivalent to one of them under the base relations). Classes are merged
//! with a union-find until they are stable under left and right
//! multiplication by a generator. The result is trusted only when the right
//! action on classes is total and every relation, base ones included, holds
//! in that action; then the classes are exactly the monoid's elements.

use std::collections::HashMap;

use crate::equation::{defining_equation, ParamEq};
use crate::error::{Error, Result};
use crate::word::{quasi_reduce, quasi_reduced_words, Generator, Word};

use super::FiniteMonoid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Finite(FiniteMonoid),
    /// The bound is too small to certify the quotient, or it is infinite.
    Undetermined,
}

impl OracleOutcome {
    pub fn finite(self) -> Option<FiniteMonoid> {
        match self {
            OracleOutcome::Finite(m) => Some(m),
            OracleOutcome::Undetermined => None,
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // Keep the smaller index (the shortlex-smaller word) as the root.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// 4(k + ell + 2), with ell = 0 outside family 00.
pub fn default_bound(p: &ParamEq) -> usize {
    4 * (p.k() + p.ell().unwrap_or(0) + 2) as usize
}

/// The oracle on the defining equation of `p` at [`default_bound`].
pub fn oracle_for(p: &ParamEq) -> Result<OracleOutcome> {
    let (l, r) = defining_equation(p).words();
    congruence_monoid(&[(l, r)], default_bound(p))
}

pub fn congruence_monoid(relations: &[(Word, Word)], bound: usize) -> Result<OracleOutcome> {
    let longest = relations
        .iter()
        .map(|(l, r)| l.len().max(r.len()))
        .max()
        .unwrap_or(0);
    let required = 2 + 2 * longest;
    if bound < required {
        return Err(Error::BoundTooSmall { bound, required });
    }

    let words = quasi_reduced_words(bound);
    let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let lookup = |w: &Word| index.get(&quasi_reduce(w)).copied();
    let slot = |g: Generator| usize::from(g == Generator::Idem);

    // right[i][g] and left[i][g] are None when the product leaves the bound.
    let right: Vec<[Option<usize>; 2]> = words
        .iter()
        .map(|w| Generator::ALL.map(|g| lookup(&w.append(g))))
        .collect();
    let left: Vec<[Option<usize>; 2]> = words
        .iter()
        .map(|w| Generator::ALL.map(|g| lookup(&w.prepend(g))))
        .collect();

    let mut uf = UnionFind::new(words.len());
    for (l, r) in relations {
        let (a, b) = (lookup(l), lookup(r));
        uf.union(a.expect("relation sides fit the bound"), b.expect("relation sides fit the bound"));
    }

    loop {
        let mut changed = false;
        for neighbours in [&right, &left] {
            for g in Generator::ALL {
                let mut first: HashMap<usize, usize> = HashMap::new();
                for (i, n) in neighbours.iter().enumerate() {
                    let Some(n) = n[slot(g)] else { continue };
                    let root = uf.find(i);
                    match first.get(&root) {
                        Some(&m) => changed |= uf.union(m, n),
                        None => {
                            first.insert(root, n);
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    // Right action on class roots; must be defined for every class.
    let mut action: HashMap<usize, [usize; 2]> = HashMap::new();
    for i in 0..words.len() {
        let root = uf.find(i);
        for g in Generator::ALL {
            if let Some(n) = right[i][slot(g)] {
                let target = uf.find(n);
                let entry = action.entry(root).or_insert([usize::MAX; 2]);
                entry[slot(g)] = target;
            }
        }
    }
    let roots: Vec<usize> = {
        let mut r: Vec<usize> = (0..words.len()).map(|i| uf.find(i)).collect();
        r.sort_unstable();
        r.dedup();
        r
    };
    if roots
        .iter()
        .any(|r| action.get(r).is_none_or(|a| a.contains(&usize::MAX)))
    {
        return Ok(OracleOutcome::Undetermined);
    }

    let act = |c: usize, w: &Word| {
        w.letters().iter().fold(c, |cur, &g| action[&cur][slot(g)])
    };
    let d: Word = Generator::Inv.into();
    let b: Word = Generator::Idem.into();
    let mut all_relations: Vec<(Word, Word)> = vec![(d.concat(&d), Word::empty()), (b.concat(&b), b)];
    all_relations.extend(relations.iter().cloned());
    for &c in &roots {
        for (l, r) in &all_relations {
            if act(c, l) != act(c, r) {
                return Ok(OracleOutcome::Undetermined);
            }
        }
    }

    let start = uf.find(0);
    let (monoid, _) = FiniteMonoid::from_action(start, |&c, g| action[&c][slot(g)], None)?;
    debug_assert_eq!(monoid.order(), roots.len());
    Ok(OracleOutcome::Finite(monoid))
}
