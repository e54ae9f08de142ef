//! Single relations between two quasi-reduced words.
//!
//! A relation is stored as a pair of [`CanonicalShape`]s in a fixed side
//! order, which places it in exactly one of ten rows `Eq0..Eq9` according to
//! the end bits of each side. Degenerate rows collapse the monoid to a
//! monogenic one; every other relation is equivalent to a single member of one
//! of the parameterized families described by [`ParamEq`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{quasi_reduce, shape_of, to_word, CanonicalShape, Word};

/// A relation lhs = rhs, sides ordered by (2d + f, k) with the smaller on the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenericEquation {
    lhs: CanonicalShape,
    rhs: CanonicalShape,
}

fn side_key(s: &CanonicalShape) -> (u8, u32) {
    (s.end_bits(), s.pairs)
}

impl GenericEquation {
    pub fn new(a: CanonicalShape, b: CanonicalShape) -> Result<GenericEquation> {
        if a == b {
            return Err(Error::TrivialEquation(to_word(a).to_token()));
        }
        let (lhs, rhs) = if side_key(&a) <= side_key(&b) { (a, b) } else { (b, a) };
        Ok(GenericEquation { lhs, rhs })
    }

    pub fn from_words(a: &Word, b: &Word) -> Result<GenericEquation> {
        GenericEquation::new(shape_of(a), shape_of(b))
    }

    pub fn lhs(&self) -> CanonicalShape {
        self.lhs
    }

    pub fn rhs(&self) -> CanonicalShape {
        self.rhs
    }

    pub fn words(&self) -> (Word, Word) {
        (to_word(self.lhs), to_word(self.rhs))
    }

    pub fn row(&self) -> RowClass {
        RowClass::from_end_bits(self.lhs.end_bits(), self.rhs.end_bits())
    }

    /// (k0, k1): the block counts of the two sides.
    pub fn pairs(&self) -> (u32, u32) {
        (self.lhs.pairs, self.rhs.pairs)
    }
}

impl fmt::Display for GenericEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r) = self.words();
        write!(f, "{l}={r}")
    }
}

impl FromStr for GenericEquation {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenericEquation> {
        parse_equation(s)
    }
}

/// Splits `word=word` into its two words, unreduced.
pub fn parse_word_pair(text: &str) -> Result<(Word, Word)> {
    let mut parts = text.trim().split('=');
    let (Some(l), Some(r), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(Error::Syntax {
            input: text.to_string(),
            reason: "expected exactly one '='".to_string(),
        });
    };
    Ok((l.trim().parse()?, r.trim().parse()?))
}

/// Parses `word=word`. Surrounding whitespace is ignored; an empty side is Id.
pub fn parse_equation(text: &str) -> Result<GenericEquation> {
    let (l, r) = parse_word_pair(text)?;
    GenericEquation::from_words(&l, &r)
}

/// The ten rows of relations between quasi-reduced words, keyed by the end
/// bits (d0 f0, d1 f1) of the two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowClass {
    Eq0,
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Eq5,
    Eq6,
    Eq7,
    Eq8,
    Eq9,
}

impl RowClass {
    /// `lhs` and `rhs` are 2d + f with `lhs <= rhs`.
    fn from_end_bits(lhs: u8, rhs: u8) -> RowClass {
        match (lhs, rhs) {
            (0, 0) => RowClass::Eq0,
            (0, 1) => RowClass::Eq1,
            (0, 2) => RowClass::Eq2,
            (0, 3) => RowClass::Eq3,
            (1, 1) => RowClass::Eq4,
            (1, 2) => RowClass::Eq5,
            (1, 3) => RowClass::Eq6,
            (2, 2) => RowClass::Eq7,
            (2, 3) => RowClass::Eq8,
            (3, 3) => RowClass::Eq9,
            _ => unreachable!("sides are ordered by end bits"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegeneracyVerdict {
    NonDegenerate,
    /// The relation is item `item` (1..=7) of the degenerate list, with block count `k`.
    Monogenic { item: u8, k: u32 },
    /// Both sides are equal after quasi-reduction.
    Trivial,
}

impl DegeneracyVerdict {
    pub fn of_words(a: &Word, b: &Word) -> DegeneracyVerdict {
        if quasi_reduce(a) == quasi_reduce(b) {
            return DegeneracyVerdict::Trivial;
        }
        match GenericEquation::from_words(a, b) {
            Ok(e) => detect_degenerate(&e),
            Err(_) => DegeneracyVerdict::Trivial,
        }
    }
}

/// Rows whose left side is Id or ◇ (k0 = 0) force one generator to be
/// expressible through the other, except for `Eq7..Eq9` which never do.
pub fn detect_degenerate(e: &GenericEquation) -> DegeneracyVerdict {
    let (k0, k1) = e.pairs();
    let item = match e.row() {
        RowClass::Eq0 if k0 == 0 => 1,
        RowClass::Eq1 if k0 == 0 || k1 == 0 => {
            return DegeneracyVerdict::Monogenic {
                item: 2,
                k: k0.max(k1),
            }
        }
        RowClass::Eq2 if k0 == 0 => 3,
        RowClass::Eq3 if k0 == 0 => 4,
        RowClass::Eq4 if k0 == 0 => 5,
        RowClass::Eq5 if k0 == 0 => 6,
        RowClass::Eq6 if k0 == 0 => 7,
        _ => return DegeneracyVerdict::NonDegenerate,
    };
    DegeneracyVerdict::Monogenic { item, k: k1 }
}

/// The 2-bit family tag; bitwise-or of tags is the family of a meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    F00,
    F01,
    F10,
    F11,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::F00, Family::F01, Family::F10, Family::F11];

    pub fn bits(self) -> u8 {
        match self {
            Family::F00 => 0b00,
            Family::F01 => 0b01,
            Family::F10 => 0b10,
            Family::F11 => 0b11,
        }
    }

    pub fn from_bits(bits: u8) -> Family {
        match bits & 0b11 {
            0b00 => Family::F00,
            0b01 => Family::F01,
            0b10 => Family::F10,
            _ => Family::F11,
        }
    }

    pub fn or(self, other: Family) -> Family {
        Family::from_bits(self.bits() | other.bits())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:02b}", self.bits())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    /// ∘
    Circ,
    /// •
    Bullet,
}

impl Parity {
    pub const ALL: [Parity; 2] = [Parity::Circ, Parity::Bullet];

    pub fn absorb(self, other: Parity) -> Parity {
        if self == Parity::Bullet || other == Parity::Bullet {
            Parity::Bullet
        } else {
            Parity::Circ
        }
    }

    fn bullet_if(odd: bool) -> Parity {
        if odd {
            Parity::Bullet
        } else {
            Parity::Circ
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Circ => "circ",
            Parity::Bullet => "bullet",
        })
    }
}

/// Canonical descriptor of a non-degenerate relation.
///
/// Family `00` carries `ell`, and its parity is ∘ exactly when `ell` is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamEq {
    family: Family,
    parity: Parity,
    k: u32,
    ell: Option<u32>,
}

impl ParamEq {
    /// (◇□)^k = (◇□)^(k+ell)
    pub fn zero_zero(k: u32, ell: u32) -> Result<ParamEq> {
        if k == 0 || ell == 0 {
            return Err(Error::DegenerateInput(format!(
                "family 00 needs k >= 1 and ell >= 1, got k={k} ell={ell}"
            )));
        }
        Ok(ParamEq {
            family: Family::F00,
            parity: Parity::bullet_if(ell % 2 == 1),
            k,
            ell: Some(ell),
        })
    }

    /// A member of family 01, 10 or 11.
    pub fn new(family: Family, parity: Parity, k: u32) -> Result<ParamEq> {
        if family == Family::F00 {
            return Err(Error::Unsupported(
                "family 00 is built with ParamEq::zero_zero".to_string(),
            ));
        }
        if k == 0 {
            return Err(Error::DegenerateInput(format!("family {family} needs k >= 1")));
        }
        Ok(ParamEq {
            family,
            parity,
            k,
            ell: None,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn ell(&self) -> Option<u32> {
        self.ell
    }

    /// Every descriptor with `1 <= k <= max_k`, and `1 <= ell <= max_ell` for family 00.
    pub fn enumerate(max_k: u32, max_ell: u32) -> Vec<ParamEq> {
        let mut out = Vec::new();
        for k in 1..=max_k {
            for ell in 1..=max_ell {
                out.push(ParamEq::zero_zero(k, ell).expect("positive parameters"));
            }
        }
        for family in [Family::F01, Family::F10, Family::F11] {
            for parity in Parity::ALL {
                for k in 1..=max_k {
                    out.push(ParamEq::new(family, parity, k).expect("positive parameters"));
                }
            }
        }
        out
    }
}

impl fmt::Display for ParamEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ell {
            Some(ell) => write!(f, "family={} k={} ell={}", self.family, self.k, ell),
            None => write!(f, "family={} parity={} k={}", self.family, self.parity, self.k),
        }
    }
}

/// The representative equation of a descriptor, with (◇□)^k on the left.
pub fn defining_equation(p: &ParamEq) -> GenericEquation {
    let k = p.k;
    let lhs = CanonicalShape::new(false, k, false);
    let rhs = match (p.family, p.parity) {
        (Family::F00, _) => CanonicalShape::new(false, k + p.ell.unwrap_or(1), false),
        (Family::F01, Parity::Circ) => CanonicalShape::new(false, k + 1, true),
        (Family::F01, Parity::Bullet) => CanonicalShape::new(false, k, true),
        // (□◇)^k □ = □ (◇□)^k
        (Family::F10, Parity::Circ) => CanonicalShape::new(true, k, false),
        (Family::F10, Parity::Bullet) => CanonicalShape::new(true, k - 1, false),
        // (□◇)^j = □ (◇□)^(j-1) ◇
        (Family::F11, Parity::Circ) => CanonicalShape::new(true, k - 1, true),
        (Family::F11, Parity::Bullet) => CanonicalShape::new(true, k, true),
    };
    GenericEquation::new(lhs, rhs).expect("sides differ for positive k")
}

fn odd(x: i64) -> bool {
    x.rem_euclid(2) == 1
}

/// Maps a non-degenerate relation to the canonical descriptor of an equivalent one.
///
/// Rows outside `Eq0..Eq3` are first moved there by multiplying both sides by ◇
/// on the left or right, which is an invertible step.
pub fn to_param(e: &GenericEquation) -> Result<ParamEq> {
    if let DegeneracyVerdict::Monogenic { item, k } = detect_degenerate(e) {
        return Err(Error::DegenerateInput(format!(
            "{e} is degenerate (item {item}, k={k})"
        )));
    }
    let (k0, k1) = e.pairs();
    let (row, k0, k1) = match e.row() {
        RowClass::Eq4 => (RowClass::Eq0, k0, k1),
        RowClass::Eq7 | RowClass::Eq9 => (RowClass::Eq0, k0 + 1, k1 + 1),
        RowClass::Eq8 => (RowClass::Eq1, k0 + 1, k1 + 1),
        RowClass::Eq6 => (RowClass::Eq2, k0, k1),
        RowClass::Eq5 => (RowClass::Eq3, k0, k1),
        other => (other, k0, k1),
    };
    match row {
        RowClass::Eq0 => ParamEq::zero_zero(k0, k1 - k0),
        RowClass::Eq1 => {
            let (k0, k1) = (k0.min(k1), k0.max(k1));
            let parity = Parity::bullet_if(!odd(k1 as i64 - k0 as i64));
            ParamEq::new(Family::F01, parity, k0)
        }
        RowClass::Eq2 | RowClass::Eq3 => {
            let (k0, k1) = if k0 > k1 + 1 { (k1 + 1, k0 - 1) } else { (k0, k1) };
            let (family, gap) = if row == RowClass::Eq2 {
                (Family::F10, k1 as i64 - k0 as i64)
            } else {
                (Family::F11, k1 as i64 + 1 - k0 as i64)
            };
            ParamEq::new(family, Parity::bullet_if(odd(gap)), k0)
        }
        _ => unreachable!("rows were moved into Eq0..Eq3"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn eq(s: &str) -> GenericEquation {
        parse_equation(s).unwrap()
    }

    fn shape(d: bool, k: u32, f: bool) -> CanonicalShape {
        CanonicalShape::new(d, k, f)
    }

    #[test]
    fn parse_kuratowski_relation() {
        let e = eq("DBDB=DBDBDBDB");
        assert_eq!(e.lhs(), shape(false, 2, false));
        assert_eq!(e.rhs(), shape(false, 4, false));
        assert_eq!(e.row(), RowClass::Eq0);
    }

    #[test]
    fn parse_rejects_trivial_and_garbage() {
        assert!(matches!(parse_equation("DDB=B"), Err(Error::TrivialEquation(_))));
        assert!(matches!(parse_equation("DB"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_equation("D=B=D"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_equation("DX=B"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn parse_swaps_sides() {
        let e = eq("BDB=DB");
        assert_eq!(e.lhs(), shape(false, 1, false));
        assert_eq!(e.rhs(), shape(true, 1, false));
        assert_eq!(e.row(), RowClass::Eq2);
        assert_eq!(e, eq(" DB=BDB "));
    }

    #[test]
    fn rows_follow_end_bits() {
        // Rows checked against a direct table of (d0 f0, d1 f1) patterns.
        let expected = [
            ((0, 0), RowClass::Eq0),
            ((0, 1), RowClass::Eq1),
            ((0, 2), RowClass::Eq2),
            ((0, 3), RowClass::Eq3),
            ((1, 1), RowClass::Eq4),
            ((1, 2), RowClass::Eq5),
            ((1, 3), RowClass::Eq6),
            ((2, 2), RowClass::Eq7),
            ((2, 3), RowClass::Eq8),
            ((3, 3), RowClass::Eq9),
        ];
        for ((a, b), row) in expected {
            let l = shape(a & 2 != 0, 1, a & 1 != 0);
            let r = shape(b & 2 != 0, 2, b & 1 != 0);
            assert_eq!(GenericEquation::new(l, r).unwrap().row(), row);
            assert_eq!(GenericEquation::new(r, l).unwrap().row(), row);
        }
    }

    #[test]
    fn degenerate_examples() {
        assert_eq!(
            detect_degenerate(&eq("DBDB=")),
            DegeneracyVerdict::Monogenic { item: 1, k: 2 }
        );
        // ◇ = □◇ is □(◇□)^0◇ on the right: row Eq6.
        assert_eq!(
            detect_degenerate(&eq("D=BD")),
            DegeneracyVerdict::Monogenic { item: 7, k: 0 }
        );
        assert_eq!(
            detect_degenerate(&eq("D=B")),
            DegeneracyVerdict::Monogenic { item: 6, k: 0 }
        );
        assert_eq!(detect_degenerate(&eq("DB=DBDBDB")), DegeneracyVerdict::NonDegenerate);
        assert_eq!(
            DegeneracyVerdict::of_words(&"DD".parse().unwrap(), &Word::empty()),
            DegeneracyVerdict::Trivial
        );
    }

    #[test]
    fn degenerate_items_cover_all_rows_with_small_left_side() {
        let cases = [
            ("=DB", 1),
            ("=D", 2),
            ("DB=D", 2),
            ("=BDB", 3),
            ("=BD", 4),
            ("D=DBD", 5),
            ("D=BDB", 6),
            ("D=BDBD", 7),
        ];
        for (text, item) in cases {
            match detect_degenerate(&eq(text)) {
                DegeneracyVerdict::Monogenic { item: got, .. } => assert_eq!(got, item, "{text}"),
                v => panic!("{text}: {v:?}"),
            }
        }
        for text in ["B=BDB", "B=BD", "BD=BDBD"] {
            assert_eq!(detect_degenerate(&eq(text)), DegeneracyVerdict::NonDegenerate, "{text}");
        }
    }

    #[test]
    fn to_param_examples() {
        assert_eq!(
            to_param(&eq("DBDB=DBDBDBDB")).unwrap(),
            ParamEq::zero_zero(2, 2).unwrap()
        );
        assert_eq!(
            to_param(&eq("DB=DBDBD")).unwrap(),
            ParamEq::new(Family::F01, Parity::Circ, 1).unwrap()
        );
        // □(◇□)◇ = □(◇□)^3◇  ~>  (◇□)^2 = (◇□)^4
        assert_eq!(
            to_param(&eq("BDBD=BDBDBDBD")).unwrap(),
            ParamEq::zero_zero(2, 2).unwrap()
        );
        assert_eq!(
            to_param(&eq("DB=B")).unwrap(),
            ParamEq::new(Family::F10, Parity::Bullet, 1).unwrap()
        );
        assert!(matches!(to_param(&eq("=DB")), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn zero_zero_parity_tracks_ell() {
        assert_eq!(ParamEq::zero_zero(1, 2).unwrap().parity(), Parity::Circ);
        assert_eq!(ParamEq::zero_zero(1, 3).unwrap().parity(), Parity::Bullet);
        assert!(ParamEq::zero_zero(0, 1).is_err());
        assert!(ParamEq::new(Family::F01, Parity::Circ, 0).is_err());
        assert!(ParamEq::new(Family::F00, Parity::Circ, 1).is_err());
    }

    #[test]
    fn defining_equations_render() {
        let p = |f, s, k| ParamEq::new(f, s, k).unwrap();
        let text = |p: ParamEq| defining_equation(&p).to_string();
        assert_eq!(text(ParamEq::zero_zero(2, 2).unwrap()), "DBDB=DBDBDBDB");
        assert_eq!(text(p(Family::F01, Parity::Circ, 1)), "DB=DBDBD");
        assert_eq!(text(p(Family::F01, Parity::Bullet, 1)), "DB=DBD");
        assert_eq!(text(p(Family::F10, Parity::Circ, 1)), "DB=BDB");
        assert_eq!(text(p(Family::F10, Parity::Bullet, 1)), "DB=B");
        assert_eq!(text(p(Family::F11, Parity::Circ, 1)), "DB=BD");
        assert_eq!(text(p(Family::F11, Parity::Bullet, 1)), "DB=BDBD");
    }

    #[test]
    fn round_trip_small_parameters() {
        for p in ParamEq::enumerate(4, 4) {
            assert_eq!(to_param(&defining_equation(&p)).unwrap(), p);
        }
    }

    fn arb_shape() -> impl Strategy<Value = CanonicalShape> {
        (any::<bool>(), 0u32..6, any::<bool>()).prop_map(|(d, k, f)| CanonicalShape::new(d, k, f))
    }

    proptest! {
        #[test]
        fn side_order_does_not_matter(a in arb_shape(), b in arb_shape()) {
            prop_assume!(a != b);
            let x = GenericEquation::new(a, b).unwrap();
            let y = GenericEquation::new(b, a).unwrap();
            prop_assert_eq!(x, y);
            prop_assert!(side_key(&x.lhs()) <= side_key(&x.rhs()));
        }

        #[test]
        fn parse_display_round_trip(a in arb_shape(), b in arb_shape()) {
            prop_assume!(a != b);
            let e = GenericEquation::new(a, b).unwrap();
            prop_assert_eq!(parse_equation(&e.to_string()).unwrap(), e);
        }

        #[test]
        fn to_param_is_total_on_non_degenerate(a in arb_shape(), b in arb_shape()) {
            prop_assume!(a != b);
            let e = GenericEquation::new(a, b).unwrap();
            let verdict = detect_degenerate(&e);
            let p = to_param(&e);
            prop_assert_eq!(verdict == DegeneracyVerdict::NonDegenerate, p.is_ok());
            if let Ok(p) = p {
                prop_assert!(p.k() >= 1);
                prop_assert_eq!(p.ell().is_some(), p.family() == Family::F00);
            }
        }

        #[test]
        fn descriptor_round_trip(k in 1u32..12, ell in 1u32..12, fam in 0u8..4, bullet in any::<bool>()) {
            let p = if fam == 0 {
                ParamEq::zero_zero(k, ell).unwrap()
            } else {
                let parity = if bullet { Parity::Bullet } else { Parity::Circ };
                ParamEq::new(Family::from_bits(fam), parity, k).unwrap()
            };
            prop_assert_eq!(to_param(&defining_equation(&p)).unwrap(), p);
        }
    }
}
