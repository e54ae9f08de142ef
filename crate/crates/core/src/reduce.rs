//! Folding a list of relations into one canonical equation.

use std::fmt;

use num_integer::Integer;

use crate::equation::{detect_degenerate, to_param, DegeneracyVerdict, Family, GenericEquation, ParamEq};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalPresentation {
    /// No relation beyond ◇◇ = Id and □□ = □.
    Free,
    /// At least one relation was degenerate; holds (item, k) of each trigger.
    Monogenic(Vec<(u8, u32)>),
    Classified(ParamEq),
}

impl fmt::Display for CanonicalPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalPresentation::Free => write!(f, "Free (infinite)"),
            CanonicalPresentation::Monogenic(items) => {
                write!(f, "Monogenic")?;
                for (item, k) in items {
                    write!(f, " item={item} k={k}")?;
                }
                Ok(())
            }
            CanonicalPresentation::Classified(p) => write!(f, "Classified {p}"),
        }
    }
}

/// The descriptor equivalent to the conjunction of `a` and `b`.
pub fn meet(a: &ParamEq, b: &ParamEq) -> ParamEq {
    let k = a.k().min(b.k());
    match (a.ell(), b.ell()) {
        (Some(l0), Some(l1)) => ParamEq::zero_zero(k, l0.gcd(&l1)).expect("positive parameters"),
        (Some(_), None) => meet_mixed(a, b, k),
        (None, Some(_)) => meet_mixed(b, a, k),
        (None, None) => ParamEq::new(a.family().or(b.family()), a.parity().absorb(b.parity()), k)
            .expect("non-zero family and positive k"),
    }
}

fn meet_mixed(zero_zero: &ParamEq, other: &ParamEq, k: u32) -> ParamEq {
    debug_assert_eq!(zero_zero.family(), Family::F00);
    // zero_zero's parity is already bullet exactly when ell is odd.
    ParamEq::new(other.family(), zero_zero.parity().absorb(other.parity()), k)
        .expect("non-zero family and positive k")
}

/// Empty input is Free; any degenerate relation makes the whole presentation Monogenic.
pub fn reduce_presentation(relations: &[GenericEquation]) -> CanonicalPresentation {
    let triggers: Vec<(u8, u32)> = relations
        .iter()
        .filter_map(|e| match detect_degenerate(e) {
            DegeneracyVerdict::Monogenic { item, k } => Some((item, k)),
            _ => None,
        })
        .collect();
    if !triggers.is_empty() {
        return CanonicalPresentation::Monogenic(triggers);
    }
    relations
        .iter()
        .map(|e| to_param(e).expect("checked non-degenerate"))
        .reduce(|acc, p| meet(&acc, &p))
        .map_or(CanonicalPresentation::Free, CanonicalPresentation::Classified)
}
