//! 2×2 integer matrix models that separate equation classes.
//!
//! Each [`WitnessCase`] gives a pair (◇, □) of matrices with ◇² = I and
//! □² = □ that satisfies some canonical equations and violates others, so the
//! corresponding classes differ.

use std::fmt;
use std::hash::Hash;
use std::ops::Mul;
use std::str::FromStr;

use num_traits::Num;

use crate::equation::{defining_equation, Family, GenericEquation, ParamEq, Parity};
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::word::{Generator, Word};

/// Row-major [[a, b], [c, d]].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T> Mat2<T> {
    pub const fn new(a: T, b: T, c: T, d: T) -> Mat2<T> {
        Mat2 { a, b, c, d }
    }

    pub fn map<U>(self, mut f: impl FnMut(T) -> U) -> Mat2<U> {
        Mat2::new(f(self.a), f(self.b), f(self.c), f(self.d))
    }
}

impl<T: Num + Clone> Mat2<T> {
    pub fn identity() -> Mat2<T> {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }
}

impl<T: Num + Clone> Mul for &Mat2<T> {
    type Output = Mat2<T>;

    fn mul(self, o: &Mat2<T>) -> Mat2<T> {
        let dot = |x: &T, y: &T, z: &T, w: &T| x.clone() * y.clone() + z.clone() * w.clone();
        Mat2::new(
            dot(&self.a, &o.a, &self.b, &o.c),
            dot(&self.a, &o.b, &self.b, &o.d),
            dot(&self.c, &o.a, &self.d, &o.c),
            dot(&self.c, &o.b, &self.d, &o.d),
        )
    }
}

impl<T: Num + Clone> Mul for Mat2<T> {
    type Output = Mat2<T>;

    fn mul(self, o: Mat2<T>) -> Mat2<T> {
        &self * &o
    }
}

impl<T: fmt::Display> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// The separation claims with a matrix model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessCase {
    /// ∘ and • differ inside one family.
    Ineq1(Family),
    Ineq2,
    Ineq3,
    Ineq4,
    Ineq5,
}

impl WitnessCase {
    pub const ALL: [WitnessCase; 8] = [
        WitnessCase::Ineq1(Family::F00),
        WitnessCase::Ineq1(Family::F01),
        WitnessCase::Ineq1(Family::F10),
        WitnessCase::Ineq1(Family::F11),
        WitnessCase::Ineq2,
        WitnessCase::Ineq3,
        WitnessCase::Ineq4,
        WitnessCase::Ineq5,
    ];

    /// Canonical equations the model satisfies and violates at block count `k`.
    pub fn pattern(self, k: u32) -> (Vec<GenericEquation>, Vec<GenericEquation>) {
        let zz = |ell| defining_equation(&ParamEq::zero_zero(k, ell).expect("k >= 1"));
        let both = |f| {
            Parity::ALL
                .map(|s| defining_equation(&ParamEq::new(f, s, k).expect("k >= 1")))
                .to_vec()
        };
        match self {
            WitnessCase::Ineq1(Family::F00) => (vec![zz(2), zz(4)], vec![zz(1), zz(3)]),
            WitnessCase::Ineq1(f) => {
                let [circ, bullet]: [GenericEquation; 2] = both(f).try_into().expect("two parities");
                (vec![circ], vec![bullet])
            }
            WitnessCase::Ineq2 => (both(Family::F01), both(Family::F11)),
            WitnessCase::Ineq3 => (both(Family::F10), both(Family::F11)),
            WitnessCase::Ineq4 => (vec![zz(1), zz(2)], both(Family::F01)),
            WitnessCase::Ineq5 => (vec![zz(1), zz(2)], both(Family::F10)),
        }
    }
}

impl fmt::Display for WitnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessCase::Ineq1(fam) => write!(f, "ineq1/{fam}"),
            WitnessCase::Ineq2 => f.write_str("ineq2"),
            WitnessCase::Ineq3 => f.write_str("ineq3"),
            WitnessCase::Ineq4 => f.write_str("ineq4"),
            WitnessCase::Ineq5 => f.write_str("ineq5"),
        }
    }
}

impl FromStr for WitnessCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<WitnessCase> {
        WitnessCase::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

/// The model for `case`, with the free parameter y set to 1.
pub fn witness_for(case: WitnessCase) -> (Mat2<i64>, Mat2<i64>) {
    let m = Mat2::new;
    match case {
        WitnessCase::Ineq1(Family::F00) | WitnessCase::Ineq1(Family::F10) => {
            (m(-1, 1, 0, 1), m(1, 0, 0, 0))
        }
        WitnessCase::Ineq1(Family::F01) => (m(1, 1, 0, -1), m(0, 0, 0, 1)),
        WitnessCase::Ineq1(Family::F11) => (m(-1, 0, 0, 1), m(1, 0, 0, 0)),
        // ineq2 reuses the ineq5 pair.
        WitnessCase::Ineq2 | WitnessCase::Ineq5 => (m(1, 0, 1, -1), m(1, 0, 0, 0)),
        // ineq4 shares the ineq3 pair. The printed ineq4 involution
        // [[1,0],[y,1]] squares to [[1,0],[2y,1]]; the sign of a is fixed here.
        WitnessCase::Ineq3 | WitnessCase::Ineq4 => (m(-1, 0, 1, 1), m(0, 0, 0, 1)),
    }
}

/// Product of the matrices along `w`; the empty word gives I.
pub fn evaluate<T: Num + Clone>(pair: &(Mat2<T>, Mat2<T>), w: &Word) -> Mat2<T> {
    w.letters().iter().fold(Mat2::identity(), |acc, g| match g {
        Generator::Inv => &acc * &pair.0,
        Generator::Idem => &acc * &pair.1,
    })
}

pub fn check_relation<T: Num + Clone>(pair: &(Mat2<T>, Mat2<T>), e: &GenericEquation) -> bool {
    let (l, r) = e.words();
    evaluate(pair, &l) == evaluate(pair, &r)
}

/// The monoid generated by the pair, refused past `cap` elements.
pub fn matrix_monoid<T: Num + Clone + Eq + Hash>(
    pair: &(Mat2<T>, Mat2<T>),
    cap: usize,
) -> Result<FiniteMonoid> {
    let (monoid, _) = FiniteMonoid::from_action(
        Mat2::identity(),
        |m, g| match g {
            Generator::Inv => m * &pair.0,
            Generator::Idem => m * &pair.1,
        },
        Some(cap),
    )?;
    Ok(monoid)
}
