//! Words over the two generators and their quasi-reduced forms.
//!
//! The involution ◇ is written `D` and the idempotent □ is written `B`. The
//! empty word is the identity. Every word reduces, by ◇◇ → ε and □□ → □, to a
//! unique alternating word, which in turn is described by a
//! [`CanonicalShape`] □^d (◇□)^k ◇^f.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::Error;

/// One of the two generators of a strict 2-PIM.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// The involution ◇, written `D`.
    Inv,
    /// The idempotent □, written `B`.
    Idem,
}

impl Generator {
    pub const ALL: [Generator; 2] = [Generator::Inv, Generator::Idem];

    pub fn letter(self) -> char {
        match self {
            Generator::Inv => 'D',
            Generator::Idem => 'B',
        }
    }

    pub fn from_letter(c: char) -> Option<Generator> {
        match c {
            'D' => Some(Generator::Inv),
            'B' => Some(Generator::Idem),
            _ => None,
        }
    }

    pub fn other(self) -> Generator {
        match self {
            Generator::Inv => Generator::Idem,
            Generator::Idem => Generator::Inv,
        }
    }
}

/// A word of the free monoid on {◇, □}. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Generator>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, g: Generator) -> usize {
        self.0.iter().filter(|&&x| x == g).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn prepend(&self, g: Generator) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(g);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }

    pub fn append(&self, g: Generator) -> Word {
        let mut w = self.clone();
        w.push(g);
        w
    }

    pub fn pow(&self, n: u32) -> Word {
        let mut letters = Vec::with_capacity(self.len() * n as usize);
        for _ in 0..n {
            letters.extend_from_slice(&self.0);
        }
        Word(letters)
    }

    /// Alternating word of length `len` starting with `first`.
    pub fn alternating(first: Generator, len: usize) -> Word {
        let mut g = first;
        let mut letters = Vec::with_capacity(len);
        for _ in 0..len {
            letters.push(g);
            g = g.other();
        }
        Word(letters)
    }

    /// (◇□)^k
    pub fn inv_idem_pow(k: u32) -> Word {
        Word::alternating(Generator::Inv, 2 * k as usize)
    }

    /// (□◇)^k
    pub fn idem_inv_pow(k: u32) -> Word {
        Word::alternating(Generator::Idem, 2 * k as usize)
    }

    pub fn is_quasi_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Position of the first occurrence of `pattern` as a factor.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        if pattern.is_empty() {
            return Some(0);
        }
        self.0.windows(pattern.len()).position(|w| w == pattern.letters())
    }

    /// Replaces the factor at `at..at + len` by `with`.
    pub fn splice(&self, at: usize, len: usize, with: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + with.len() - len.min(self.len()));
        letters.extend_from_slice(&self.0[..at]);
        letters.extend_from_slice(&with.0);
        letters.extend_from_slice(&self.0[at + len..]);
        Word(letters)
    }

    /// Text form, with `Id` for the empty word.
    pub fn to_token(&self) -> String {
        if self.is_empty() {
            "Id".to_string()
        } else {
            self.to_string()
        }
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl From<Generator> for Word {
    fn from(g: Generator) -> Word {
        Word(vec![g])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{}", g.letter())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        s.chars()
            .map(|c| {
                Generator::from_letter(c).ok_or_else(|| Error::Syntax {
                    input: s.to_string(),
                    reason: format!("unexpected character {c:?}, words use only 'D' and 'B'"),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// The quasi-reduced word □^d (◇□)^k ◇^f.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalShape {
    /// d: the word starts with □.
    pub leading_idem: bool,
    /// k: number of ◇□ blocks.
    pub pairs: u32,
    /// f: the word ends with ◇.
    pub trailing_inv: bool,
}

impl CanonicalShape {
    pub const IDENTITY: CanonicalShape = CanonicalShape::new(false, 0, false);

    pub const fn new(leading_idem: bool, pairs: u32, trailing_inv: bool) -> CanonicalShape {
        CanonicalShape {
            leading_idem,
            pairs,
            trailing_inv,
        }
    }

    /// The (d, f) bits read as the two-bit number 2d + f.
    pub fn end_bits(&self) -> u8 {
        (u8::from(self.leading_idem) << 1) | u8::from(self.trailing_inv)
    }

    pub fn len(&self) -> usize {
        usize::from(self.leading_idem) + 2 * self.pairs as usize + usize::from(self.trailing_inv)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for CanonicalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{})",
            u8::from(self.leading_idem),
            self.pairs,
            u8::from(self.trailing_inv)
        )
    }
}

/// Exhaustively applies ◇◇ → ε and □□ → □.
///
/// Single left-to-right pass with a stack; the two rules are confluent and
/// length-decreasing so the result is the unique normal form.
pub fn quasi_reduce(w: &Word) -> Word {
    let mut out: Vec<Generator> = Vec::with_capacity(w.len());
    for &g in w.letters() {
        match (out.last(), g) {
            (Some(&Generator::Inv), Generator::Inv) => {
                out.pop();
            }
            (Some(&Generator::Idem), Generator::Idem) => {}
            _ => out.push(g),
        }
    }
    Word(out)
}

pub fn shape_of(w: &Word) -> CanonicalShape {
    let reduced = quasi_reduce(w);
    let letters = reduced.letters();
    let leading_idem = letters.first() == Some(&Generator::Idem);
    let rest = letters.len() - usize::from(leading_idem);
    CanonicalShape {
        leading_idem,
        pairs: (rest / 2) as u32,
        trailing_inv: rest % 2 == 1,
    }
}

pub fn to_word(s: CanonicalShape) -> Word {
    let mut letters = Vec::with_capacity(s.len());
    if s.leading_idem {
        letters.push(Generator::Idem);
    }
    for _ in 0..s.pairs {
        letters.push(Generator::Inv);
        letters.push(Generator::Idem);
    }
    if s.trailing_inv {
        letters.push(Generator::Inv);
    }
    Word(letters)
}

/// All quasi-reduced words of length at most `max_len`, by length then ◇ first.
pub fn quasi_reduced_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for len in 1..=max_len {
        out.push(Word::alternating(Generator::Inv, len));
        out.push(Word::alternating(Generator::Idem, len));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Applies one rewrite anywhere, in every possible way, until nothing
    /// changes; returns the set of terminal words.
    fn all_rewrite_results(start: &Word) -> std::collections::BTreeSet<Word> {
        let mut terminal = std::collections::BTreeSet::new();
        let mut stack = vec![start.clone()];
        let mut seen = std::collections::HashSet::new();
        while let Some(cur) = stack.pop() {
            if !seen.insert(cur.clone()) {
                continue;
            }
            let l = cur.letters();
            let mut any = false;
            for i in 0..l.len().saturating_sub(1) {
                if l[i] == l[i + 1] {
                    any = true;
                    let repl = if l[i] == Generator::Inv { Word::empty() } else { w("B") };
                    stack.push(cur.splice(i, 2, &repl));
                }
            }
            if !any {
                terminal.insert(cur);
            }
        }
        terminal
    }

    #[test]
    fn quasi_reduce_examples() {
        assert_eq!(quasi_reduce(&w("DD")), Word::empty());
        assert_eq!(quasi_reduce(&w("BBDDB")), w("B"));
        assert_eq!(quasi_reduce(&w("DBDDBBD")), w("DBD"));
    }

    #[test]
    fn quasi_reduce_matches_exhaustive_rewriting() {
        for s in ["DBDDBBD", "BBDDB", "DDDBBBDD", "BDDBDDDB"] {
            let results = all_rewrite_results(&w(s));
            assert_eq!(results.len(), 1, "{s} is not confluent?");
            assert_eq!(results.into_iter().next().unwrap(), quasi_reduce(&w(s)));
        }
        assert_eq!(
            all_rewrite_results(&w("DBDDBBD")).into_iter().next().unwrap(),
            w("DBD")
        );
    }

    #[test]
    fn shape_examples() {
        assert_eq!(shape_of(&Word::empty()), CanonicalShape::new(false, 0, false));
        assert_eq!(shape_of(&w("DBDBD")), CanonicalShape::new(false, 2, true));
        assert_eq!(shape_of(&w("BDBD")), CanonicalShape::new(true, 1, true));
        assert_eq!(to_word(CanonicalShape::new(false, 0, false)), Word::empty());
        assert_eq!(to_word(CanonicalShape::new(true, 0, false)), w("B"));
        let long = to_word(CanonicalShape::new(true, 2, true));
        assert_eq!(long, w("BDBDBD"));
        assert!(long.is_quasi_reduced());
    }

    #[test]
    fn length_four_shapes_by_enumeration() {
        // Every quasi-reduced word of length 4 matches exactly one shape.
        let shapes: Vec<CanonicalShape> = (0..=2u32)
            .flat_map(|k| {
                [false, true].into_iter().flat_map(move |d| {
                    [false, true].into_iter().map(move |f| CanonicalShape::new(d, k, f))
                })
            })
            .collect();
        for word in quasi_reduced_words(4).into_iter().filter(|x| x.len() == 4) {
            let hits: Vec<_> = shapes.iter().filter(|s| to_word(**s) == word).collect();
            assert_eq!(hits.len(), 1);
            assert_eq!(*hits[0], shape_of(&word));
        }
        assert_eq!(shape_of(&w("BDBD")), CanonicalShape::new(true, 1, true));
    }

    #[test]
    fn shapes_biject_with_quasi_reduced_words_up_to_12() {
        let mut all = Vec::new();
        for n in 0..=12usize {
            for bits in 0..(1u32 << n) {
                let letters = (0..n)
                    .map(|i| if bits >> i & 1 == 1 { Generator::Idem } else { Generator::Inv })
                    .collect();
                all.push(Word::from_letters(letters));
            }
        }
        for word in &all {
            let s = shape_of(word);
            assert_eq!(to_word(s), quasi_reduce(word));
            if word.is_quasi_reduced() {
                assert_eq!(to_word(s), *word);
            }
        }
        let reduced = quasi_reduced_words(12);
        let mut distinct: Vec<_> = reduced.iter().map(shape_of).collect();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), reduced.len());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(prop_oneof![Just(Generator::Inv), Just(Generator::Idem)], 0..40)
            .prop_map(Word::from_letters)
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent_and_shrinks(w in arb_word()) {
            let r = quasi_reduce(&w);
            prop_assert_eq!(quasi_reduce(&r), r.clone());
            prop_assert!(r.len() <= w.len());
            prop_assert!(r.is_quasi_reduced());
        }

        #[test]
        fn reduction_is_a_congruence(u in arb_word(), v in arb_word()) {
            let whole = quasi_reduce(&u.concat(&v));
            let parts = quasi_reduce(&quasi_reduce(&u).concat(&quasi_reduce(&v)));
            prop_assert_eq!(whole, parts);
        }

        #[test]
        fn display_parse_round_trip(w in arb_word()) {
            prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
        }
    }

    #[test]
    fn parse_rejects_other_letters() {
        assert!("DBX".parse::<Word>().is_err());
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
    }
}
