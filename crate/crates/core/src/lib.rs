//! Monoids presented by one involution ◇ and one idempotent □.
//!
//! Relations are parsed into [`GenericEquation`]s, folded into a single
//! [`CanonicalPresentation`], and realized as a [`FiniteMonoid`] either from
//! normal forms ([`build`]) or by bounded congruence closure
//! ([`congruence_monoid`]). [`kuratowski`] runs the closure/complement case
//! on finite topologies.

pub mod equation;
pub mod error;
pub mod iso;
pub mod kuratowski;
pub mod monoid;
pub mod reduce;
pub mod witness;
pub mod word;

pub use equation::{
    defining_equation, detect_degenerate, parse_equation, parse_word_pair, to_param, DegeneracyVerdict, Family,
    GenericEquation, ParamEq, Parity, RowClass,
};
pub use error::{Error, Result};
pub use iso::{brute_force_isomorphic, involutions, isomorphic};
pub use monoid::{
    build, congruence_monoid, hilbert, hilbert_truncated, oracle_for, order, FiniteMonoid,
    HilbertSeries, OracleOutcome,
};
pub use reduce::{meet, reduce_presentation, CanonicalPresentation};
pub use witness::{check_relation, matrix_monoid, witness_for, Mat2, WitnessCase};
pub use word::{quasi_reduce, shape_of, to_word, CanonicalShape, Generator, Word};

/// Witness matrices over machine integers.
pub type IntMat2 = Mat2<i64>;
/// Witness matrices over arbitrary-precision integers.
pub type BigMat2 = Mat2<num_bigint::BigInt>;
