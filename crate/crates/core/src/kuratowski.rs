//! Closure and complement on finite topological spaces.
//!
//! Subsets of {0..n-1} are bitmasks. Operators compose left to right: the word
//! `DB` applies the complement first and then the closure.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::equation::ParamEq;
use crate::error::{Error, Result};
use crate::iso::brute_force_isomorphic;
use crate::monoid::{build, order, FiniteMonoid};
use crate::reduce::CanonicalPresentation;

pub const MAX_POINTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteTopology {
    n: usize,
    opens: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyViolation {
    BadSize(usize),
    OutOfRange(u32),
    MissingEmpty,
    MissingFull,
    UnionNotOpen(u32, u32),
    IntersectionNotOpen(u32, u32),
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyViolation::BadSize(n) => write!(f, "ground set size {n} is outside 1..=16"),
            TopologyViolation::OutOfRange(s) => write!(f, "open set {s:#b} has points outside the ground set"),
            TopologyViolation::MissingEmpty => write!(f, "the empty set is not open"),
            TopologyViolation::MissingFull => write!(f, "the full set is not open"),
            TopologyViolation::UnionNotOpen(a, b) => {
                write!(f, "union of {} and {} is not open", fmt_set(*a), fmt_set(*b))
            }
            TopologyViolation::IntersectionNotOpen(a, b) => {
                write!(f, "intersection of {} and {} is not open", fmt_set(*a), fmt_set(*b))
            }
        }
    }
}

/// `{0,3,5}` style rendering of a mask.
pub fn fmt_set(mask: u32) -> String {
    let points: Vec<String> = (0..32).filter(|i| mask >> i & 1 == 1).map(|i: u32| i.to_string()).collect();
    format!("{{{}}}", points.join(","))
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl FiniteTopology {
    /// Stores the open sets sorted and deduplicated; no axioms are checked.
    pub fn new(n: usize, opens: impl IntoIterator<Item = u32>) -> FiniteTopology {
        let set: BTreeSet<u32> = opens.into_iter().collect();
        FiniteTopology {
            n,
            opens: set.into_iter().collect(),
        }
    }

    pub fn discrete(n: usize) -> FiniteTopology {
        FiniteTopology::new(n, 0..=full_mask(n))
    }

    pub fn indiscrete(n: usize) -> FiniteTopology {
        FiniteTopology::new(n, [0, full_mask(n)])
    }

    /// Open sets are the up-sets of the preorder `le` (`le[i][j]` means i ≤ j).
    pub fn from_preorder(le: &[Vec<bool>]) -> FiniteTopology {
        let n = le.len();
        let up: Vec<u32> = (0..n)
            .map(|i| (0..n).filter(|&j| le[i][j]).fold(1u32 << i, |m, j| m | 1 << j))
            .collect();
        let opens = (0..=full_mask(n)).filter(|&s| (0..n).all(|i| s >> i & 1 == 0 || up[i] & !s == 0));
        FiniteTopology::new(n, opens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[u32] {
        &self.opens
    }

    pub fn full(&self) -> u32 {
        full_mask(self.n)
    }

    /// File form: `n=<int>` then one open set per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for &s in &self.opens {
            let points: Vec<String> = (0..self.n).filter(|i| s >> i & 1 == 1).map(|i| i.to_string()).collect();
            if points.is_empty() {
                out.push_str("{}\n");
            } else {
                out.push_str(&points.join(","));
                out.push('\n');
            }
        }
        out
    }
}

pub fn validate_topology(t: &FiniteTopology) -> std::result::Result<(), TopologyViolation> {
    if t.n == 0 || t.n > MAX_POINTS {
        return Err(TopologyViolation::BadSize(t.n));
    }
    let full = t.full();
    if let Some(&s) = t.opens.iter().find(|&&s| s & !full != 0) {
        return Err(TopologyViolation::OutOfRange(s));
    }
    if t.opens.binary_search(&0).is_err() {
        return Err(TopologyViolation::MissingEmpty);
    }
    if t.opens.binary_search(&full).is_err() {
        return Err(TopologyViolation::MissingFull);
    }
    let open = |s: u32| t.opens.binary_search(&s).is_ok();
    for (i, &a) in t.opens.iter().enumerate() {
        for &b in &t.opens[i + 1..] {
            if !open(a | b) {
                return Err(TopologyViolation::UnionNotOpen(a, b));
            }
            if !open(a & b) {
                return Err(TopologyViolation::IntersectionNotOpen(a, b));
            }
        }
    }
    Ok(())
}

fn require_valid(t: &FiniteTopology) -> Result<()> {
    validate_topology(t).map_err(|v| Error::InvalidTopology(v.to_string()))
}

/// A total map on the 2^n subsets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetOperation {
    n: usize,
    table: Vec<u32>,
}

impl SetOperation {
    pub fn identity(n: usize) -> SetOperation {
        SetOperation {
            n,
            table: (0..=full_mask(n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apply(&self, a: u32) -> u32 {
        self.table[a as usize]
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &SetOperation) -> SetOperation {
        SetOperation {
            n: self.n,
            table: self.table.iter().map(|&a| next.apply(a)).collect(),
        }
    }

    pub fn is_extensive(&self) -> bool {
        self.table.iter().enumerate().all(|(a, &c)| a as u32 & !c == 0)
    }

    pub fn is_idempotent(&self) -> bool {
        self.then(self) == *self
    }

    pub fn is_monotone(&self) -> bool {
        // Checking single-point extensions suffices.
        (0..self.table.len() as u32).all(|a| {
            (0..self.n).all(|i| {
                let b = a | 1 << i;
                self.apply(a) & !self.apply(b) == 0
            })
        })
    }
}

/// Closure through minimal neighbourhoods: x ∈ cl(A) iff every open set
/// containing x meets A.
pub fn closure_op(t: &FiniteTopology) -> Result<SetOperation> {
    require_valid(t)?;
    let full = t.full();
    let neighbourhood: Vec<u32> = (0..t.n)
        .map(|x| {
            t.opens
                .iter()
                .filter(|&&u| u >> x & 1 == 1)
                .fold(full, |acc, &u| acc & u)
        })
        .collect();
    let table = (0..=full)
        .map(|a| {
            (0..t.n)
                .filter(|&x| neighbourhood[x] & a != 0)
                .fold(0u32, |m, x| m | 1 << x)
        })
        .collect();
    Ok(SetOperation { n: t.n, table })
}

pub fn complement_op(n: usize) -> SetOperation {
    let full = full_mask(n);
    SetOperation {
        n,
        table: (0..=full).map(|a| full & !a).collect(),
    }
}

/// The monoid generated by an involution and an idempotent operator; an
/// absent generator acts as the identity.
pub fn operation_monoid(
    n: usize,
    inv: Option<&SetOperation>,
    idem: Option<&SetOperation>,
    cap: usize,
) -> Result<(FiniteMonoid, Vec<SetOperation>)> {
    if [inv, idem].into_iter().flatten().any(|g| g.n() != n) {
        return Err(Error::Unsupported("operators act on different ground sets".to_string()));
    }
    let id = SetOperation::identity(n);
    let inv = inv.unwrap_or(&id).clone();
    let idem = idem.unwrap_or(&id).clone();
    FiniteMonoid::from_action(
        id.clone(),
        |u, g| match g {
            crate::word::Generator::Inv => u.then(&inv),
            crate::word::Generator::Idem => u.then(&idem),
        },
        Some(cap),
    )
}

/// The Kuratowski monoid of closure and complement.
pub fn kuratowski_monoid(t: &FiniteTopology) -> Result<(FiniteMonoid, Vec<SetOperation>)> {
    let c = closure_op(t)?;
    operation_monoid(t.n, Some(&complement_op(t.n)), Some(&c), 64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitClass {
    Classified(CanonicalPresentation),
    /// All operators are powers of one of them.
    Monogenic,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub order: usize,
    pub class: OrbitClass,
}

impl fmt::Display for OrbitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order={}", self.order)?;
        match &self.class {
            OrbitClass::Classified(c) => writeln!(f, "class={c}"),
            OrbitClass::Monogenic => writeln!(f, "class=monogenic"),
            OrbitClass::Other => writeln!(f, "class=other"),
        }
    }
}

/// Canonical classes whose closed-form order is `n`.
fn candidates_of_order(n: usize) -> Vec<ParamEq> {
    let bound = n as u32;
    ParamEq::enumerate(bound, bound)
        .into_iter()
        .filter(|p| order(&CanonicalPresentation::Classified(*p)).ok() == Some(n as u64))
        .collect()
}

pub fn classify_orbit(t: &FiniteTopology) -> Result<OrbitReport> {
    let (m, _) = kuratowski_monoid(t)?;
    let class = candidates_of_order(m.order())
        .into_iter()
        .map(CanonicalPresentation::Classified)
        .find(|c| build(c).is_ok_and(|b| brute_force_isomorphic(&b, &m)))
        .map(OrbitClass::Classified)
        .unwrap_or(if m.is_monogenic() { OrbitClass::Monogenic } else { OrbitClass::Other });
    Ok(OrbitReport { order: m.order(), class })
}

/// The subset with the largest orbit (smallest mask on ties) and that size.
pub fn max_point_orbit(t: &FiniteTopology) -> Result<(u32, usize)> {
    let (_, ops) = kuratowski_monoid(t)?;
    let mut best = (0u32, 0usize);
    let mut images = Vec::with_capacity(ops.len());
    for a in 0..=t.full() {
        images.clear();
        images.extend(ops.iter().map(|op| op.apply(a)));
        images.sort_unstable();
        images.dedup();
        if images.len() > best.1 {
            best = (a, images.len());
        }
    }
    Ok(best)
}

/// Parses the topology file format (`n=<int>`, then one open set per line as
/// comma-separated points, `{}` for the empty set). Blank lines are skipped.
pub fn parse_topology(text: &str) -> Result<FiniteTopology> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let bad = |line: usize, reason: String| Error::TopologyFormat { line, reason };
    let (first, header) = lines.next().ok_or_else(|| bad(1, "missing `n=<int>` header".to_string()))?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| bad(first, format!("expected `n=<int>`, got {header:?}")))?;
    if n == 0 || n > MAX_POINTS {
        return Err(bad(first, format!("n={n} is outside 1..=16")));
    }
    let mut opens = Vec::new();
    for (line, text) in lines {
        let inner = text.trim_start_matches('{').trim_end_matches('}').trim();
        let mut mask = 0u32;
        if !inner.is_empty() {
            for tok in inner.split(',') {
                let p: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| bad(line, format!("bad point {tok:?}")))?;
                if p >= n {
                    return Err(bad(line, format!("point {p} is not below n={n}")));
                }
                mask |= 1 << p;
            }
        }
        opens.push(mask);
    }
    Ok(FiniteTopology::new(n, opens))
}

/// Every topology on n points (n <= 4), by brute force over families of subsets.
pub fn all_topologies(n: usize) -> Vec<FiniteTopology> {
    assert!((1..=4).contains(&n), "exhaustive enumeration is limited to n <= 4");
    let full = full_mask(n);
    // Proper nonempty subsets, each either open or not.
    let middle: Vec<u32> = (1..full).collect();
    (0..1u64 << middle.len())
        .map(|choice| {
            let opens = middle
                .iter()
                .enumerate()
                .filter(|(i, _)| choice >> i & 1 == 1)
                .map(|(_, &s)| s)
                .chain([0, full]);
            FiniteTopology::new(n, opens)
        })
        .filter(|t| validate_topology(t).is_ok())
        .collect()
}

/// The reflexive-transitive closure of `edges` on n points.
fn preorder_closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(i, j) in edges {
        le[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if le[i][k] {
                for j in 0..n {
                    if le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
    }
    le
}

/// A topology from a random sparse preorder; `density` is the chance of each
/// ordered pair being related before closing.
pub fn random_topology<R: Rng>(rng: &mut R, n: usize, density: f64) -> FiniteTopology {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .filter(|_| rng.gen_bool(density))
        .collect();
    FiniteTopology::from_preorder(&preorder_closure(n, &edges))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub topology: FiniteTopology,
    pub subset: u32,
    pub orbit: usize,
    pub attempt: usize,
}

/// Samples random preorder topologies on 7..=9 points from a fixed seed and
/// returns the first one with a subset whose orbit has 14 members.
pub fn search_fourteen(seed: u64, attempts: usize) -> Option<SearchHit> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..attempts {
        let n = rng.gen_range(7..=9);
        let density = rng.gen_range(0.05..0.2);
        let t = random_topology(&mut rng, n, density);
        let (subset, orbit) = max_point_orbit(&t).expect("preorder topologies are valid");
        if orbit == 14 {
            return Some(SearchHit {
                topology: t,
                subset,
                orbit,
                attempt,
            });
        }
    }
    None
}
