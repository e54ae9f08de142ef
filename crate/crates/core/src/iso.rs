//! Isomorphism of strict 2-PIMs.

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::reduce::CanonicalPresentation;
use crate::word::Generator;

/// Descriptor comparison; two classified presentations are isomorphic exactly
/// when their canonical equations coincide.
pub fn isomorphic(p: &CanonicalPresentation, q: &CanonicalPresentation) -> Result<bool> {
    match (p, q) {
        (CanonicalPresentation::Monogenic(_), _) | (_, CanonicalPresentation::Monogenic(_)) => Err(
            Error::Unsupported("monogenic presentations are not compared".to_string()),
        ),
        (CanonicalPresentation::Free, CanonicalPresentation::Free) => Ok(true),
        (CanonicalPresentation::Classified(a), CanonicalPresentation::Classified(b)) => Ok(a == b),
        _ => Ok(false),
    }
}

/// Non-identity elements squaring to the identity.
pub fn involutions(m: &FiniteMonoid) -> Vec<usize> {
    (0..m.order())
        .filter(|&x| x != m.identity() && m.mul(x, x) == m.identity())
        .collect()
}

fn idempotents(m: &FiniteMonoid) -> Vec<usize> {
    (0..m.order()).filter(|&y| m.mul(y, y) == y).collect()
}

/// Does ◇ ↦ x, □ ↦ y extend to an isomorphism m → n?
///
/// The image of each element is the product of generator images along its
/// word; compatibility with right multiplication by both generators then
/// makes the map a homomorphism.
fn extends_to_isomorphism(m: &FiniteMonoid, n: &FiniteMonoid, x: usize, y: usize) -> bool {
    let image_of = |g: Generator| match g {
        Generator::Inv => x,
        Generator::Idem => y,
    };
    let phi: Vec<usize> = m
        .elements()
        .iter()
        .map(|w| w.letters().iter().fold(n.identity(), |cur, &g| n.mul(cur, image_of(g))))
        .collect();
    for e in 0..m.order() {
        for g in Generator::ALL {
            if phi[m.mul(e, m.generator(g))] != n.mul(phi[e], image_of(g)) {
                return false;
            }
        }
    }
    let mut hit = vec![false; n.order()];
    phi.iter().all(|&v| !std::mem::replace(&mut hit[v], true))
}

fn search(m: &FiniteMonoid, n: &FiniteMonoid, inv_images: &[usize], idem_images: &[usize]) -> bool {
    m.order() == n.order()
        && inv_images
            .iter()
            .any(|&x| idem_images.iter().any(|&y| extends_to_isomorphism(m, n, x, y)))
}

/// Searches generator images; ◇ can only go to a non-identity involution
/// (or to the identity when it is trivial in `m`).
pub fn brute_force_isomorphic(m: &FiniteMonoid, n: &FiniteMonoid) -> bool {
    let inv_images = if m.gen_inv() == m.identity() {
        vec![n.identity()]
    } else {
        involutions(n)
    };
    search(m, n, &inv_images, &idempotents(n))
}

/// Same search with every x² = 1 and every y² = y as candidates.
pub fn brute_force_isomorphic_unpruned(m: &FiniteMonoid, n: &FiniteMonoid) -> bool {
    let inv_images: Vec<usize> = (0..n.order())
        .filter(|&x| n.mul(x, x) == n.identity())
        .collect();
    search(m, n, &inv_images, &idempotents(n))
}

/// Isomorphism sending ◇ to ◇ and □ to □.
pub fn generator_preserving_isomorphic(m: &FiniteMonoid, n: &FiniteMonoid) -> bool {
    search(m, n, &[n.gen_inv()], &[n.gen_idem()])
}
