use num_traits::{FromPrimitive, Num};

use crate::equation::{Family, ParamEq, Parity};
use crate::error::{Error, Result};
use crate::reduce::CanonicalPresentation;

/// Coefficients of Σ t^(length of the shortest word of e), lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    coeffs: Vec<u64>,
}

impl HilbertSeries {
    pub fn new(coeffs: Vec<u64>) -> HilbertSeries {
        HilbertSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Horner evaluation in any numeric type; at t = 1 this is the order.
    pub fn evaluate<T: Num + Clone + FromPrimitive>(&self, t: T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, &c| {
            acc * t.clone() + T::from_u64(c).expect("coefficient fits the scalar type")
        })
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn truncate(&self, max_degree: usize) -> HilbertSeries {
        HilbertSeries::new(self.coeffs.iter().copied().take(max_degree + 1).collect())
    }
}

/// 1 + 2(t + ... + t^twos) + [t^(twos+1)]
fn one_twos_one(twos: u32, closing_one: bool) -> HilbertSeries {
    let mut coeffs = vec![1];
    coeffs.extend(std::iter::repeat(2).take(twos as usize));
    if closing_one {
        coeffs.push(1);
    }
    HilbertSeries::new(coeffs)
}

fn classified_series(p: &ParamEq) -> HilbertSeries {
    let k = p.k();
    match (p.family(), p.parity()) {
        (Family::F00, _) => one_twos_one(2 * (k + p.ell().unwrap_or(1) - 1), true),
        (Family::F01 | Family::F10, Parity::Circ) => one_twos_one(2 * k, true),
        (Family::F01 | Family::F10, Parity::Bullet) | (Family::F11, Parity::Circ) => {
            one_twos_one(2 * k - 1, true)
        }
        // Every word of length >= 2k - 1 collapses to (□◇)^(k-1)□.
        (Family::F11, Parity::Bullet) => one_twos_one(2 * k - 1, false),
    }
}

fn unsupported_monogenic() -> Error {
    Error::Unsupported("monogenic presentations have no closed form; use the oracle".to_string())
}

/// Closed-form series of a finite class.
pub fn hilbert(c: &CanonicalPresentation) -> Result<HilbertSeries> {
    match c {
        CanonicalPresentation::Free => Err(Error::NotFinite),
        CanonicalPresentation::Monogenic(_) => Err(unsupported_monogenic()),
        CanonicalPresentation::Classified(p) => Ok(classified_series(p)),
    }
}

/// Like [`hilbert`], but the free class yields 1, 2, 2, ... up to `max_degree`.
pub fn hilbert_truncated(c: &CanonicalPresentation, max_degree: usize) -> Result<HilbertSeries> {
    match c {
        CanonicalPresentation::Free => {
            let mut coeffs = vec![2u64; max_degree + 1];
            coeffs[0] = 1;
            Ok(HilbertSeries::new(coeffs))
        }
        _ => hilbert(c).map(|h| h.truncate(max_degree)),
    }
}

pub fn order(c: &CanonicalPresentation) -> Result<u64> {
    hilbert(c).map(|h| h.evaluate(1u64))
}
