//! Simple systems, the minuscule axioms, and validated minuscule systems.
//!
//! A pair (Ψ, Δ) is a minuscule system when, for every vertex `v` and root
//! `a`, the ratio `2(v·a)/(a·a)` is some `c ∈ {-1, 0, 1}` and `v + a ∈ Ψ`
//! exactly when `c = -1`, `v - a ∈ Ψ` exactly when `c = 1`.
//!
//! [`MinusculeSystem`] can only be obtained through [`validate_system`] (or
//! the constructions that provably preserve the axioms), so downstream code
//! reads `c`, `v + a` and `v - a` from tables filled in at validation time.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::vector::IntVector;

/// The coefficient `c(v, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CValue {
    Minus,
    Zero,
    Plus,
}

impl CValue {
    pub fn value(self) -> i64 {
        match self {
            CValue::Minus => -1,
            CValue::Zero => 0,
            CValue::Plus => 1,
        }
    }

    fn from_i64(c: i64) -> Option<Self> {
        match c {
            -1 => Some(CValue::Minus),
            0 => Some(CValue::Zero),
            1 => Some(CValue::Plus),
            _ => None,
        }
    }
}

/// Solves `2(v·a) = c(a·a)` for `c ∈ {-1, 0, 1}`.
pub fn c_value(v: &IntVector, a: &IntVector) -> Result<CValue> {
    if a.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let va = v.dot(a)?;
    let aa = a.norm_sq()?;
    let two_va = va.checked_mul(2).ok_or(Error::Overflow)?;
    let c = if two_va % aa == 0 { CValue::from_i64(two_va / aa) } else { None };
    c.ok_or_else(|| {
        let g = gcd(two_va, aa);
        Error::NotMinusculeValue {
            vertex: v.clone(),
            root: a.clone(),
            numerator: two_va / g,
            denominator: aa / g,
        }
    })
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1) as i64
}

/// A labelled, ordered list of nonzero root vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleSystem {
    roots: Vec<(String, IntVector)>,
}

impl SimpleSystem {
    pub fn new<S: Into<String>>(roots: Vec<(S, IntVector)>) -> Result<Self> {
        let roots: Vec<(String, IntVector)> = roots.into_iter().map(|(l, v)| (l.into(), v)).collect();
        let Some((_, first)) = roots.first() else {
            return Err(Error::EmptySimpleSystem);
        };
        let dim = first.dim();
        let mut labels = HashSet::new();
        for (i, (label, v)) in roots.iter().enumerate() {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: v.dim() });
            }
            if v.is_zero() {
                return Err(Error::ZeroRoot);
            }
            if !labels.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
            if let Some((other, _)) = roots[..i].iter().find(|(_, w)| w == v) {
                return Err(Error::DuplicateRoot(other.clone(), label.clone()));
            }
        }
        Ok(SimpleSystem { roots })
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.roots[0].1.dim()
    }

    pub fn roots(&self) -> &[(String, IntVector)] {
        &self.roots
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.roots.iter().map(|(l, _)| l.as_str())
    }

    pub fn vectors(&self) -> impl Iterator<Item = &IntVector> {
        self.roots.iter().map(|(_, v)| v)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.roots[i].0
    }

    pub fn vector(&self, i: usize) -> &IntVector {
        &self.roots[i].1
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.roots.iter().position(|(l, _)| l == label)
    }

    pub fn get(&self, label: &str) -> Option<&IntVector> {
        self.position(label).map(|i| &self.roots[i].1)
    }

    /// Keeps the roots whose labels appear in `keep`, in the original order.
    pub fn retain_labels(&self, keep: &[&str]) -> Result<Self> {
        for l in keep {
            if self.position(l).is_none() {
                return Err(Error::UnknownLabel((*l).to_string()));
            }
        }
        let roots: Vec<_> = self.roots.iter().filter(|(l, _)| keep.contains(&l.as_str())).cloned().collect();
        if roots.is_empty() {
            return Err(Error::EmptyRestriction);
        }
        Ok(SimpleSystem { roots })
    }

    /// Appends a root, re-running the well-formedness checks.
    pub fn with_root(&self, label: &str, v: IntVector) -> Result<Self> {
        let mut roots = self.roots.clone();
        roots.push((label.to_string(), v));
        SimpleSystem::new(roots)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationKind {
    /// `2(v·a)/(a·a)` is not in {-1, 0, 1}.
    NotMinusculeValue { numerator: i64, denominator: i64 },
    /// `c = -1` but `v + a` is missing.
    RaiseMissing,
    /// `v + a` is present but `c != -1`.
    RaiseUnexpected { c: i64 },
    /// `c = 1` but `v - a` is missing.
    LowerMissing,
    /// `v - a` is present but `c != 1`.
    LowerUnexpected { c: i64 },
    /// `v ± a` could not be formed without overflow.
    Overflow,
}

impl ViolationKind {
    fn rank(&self) -> u8 {
        match self {
            ViolationKind::NotMinusculeValue { .. } => 0,
            ViolationKind::RaiseMissing => 1,
            ViolationKind::RaiseUnexpected { .. } => 2,
            ViolationKind::LowerMissing => 3,
            ViolationKind::LowerUnexpected { .. } => 4,
            ViolationKind::Overflow => 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: IntVector,
    pub label: String,
    #[serde(flatten)]
    pub kind: ViolationKind,
}

/// Every failing `(v, a)` pair, sorted by vertex, then root order, then kind.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A validated pair (Ψ, Δ) with Ψ in lexicographic order.
#[derive(Debug, Clone)]
pub struct MinusculeSystem {
    psi: Vec<IntVector>,
    delta: SimpleSystem,
    // Row-major |Ψ| × |Δ| tables.
    c: Vec<CValue>,
    raise: Vec<Option<usize>>,
    lower: Vec<Option<usize>>,
}

impl PartialEq for MinusculeSystem {
    fn eq(&self, other: &Self) -> bool {
        self.psi == other.psi && self.delta == other.delta
    }
}

impl Eq for MinusculeSystem {}

/// Sorts and deduplicates a vertex list, checking dimensions.
pub fn canonical_psi(mut psi: Vec<IntVector>) -> Result<Vec<IntVector>> {
    let Some(first) = psi.first() else {
        return Err(Error::EmptyPsi);
    };
    let dim = first.dim();
    if let Some(v) = psi.iter().find(|v| v.dim() != dim) {
        return Err(Error::DimensionMismatch { left: dim, right: v.dim() });
    }
    psi.sort();
    psi.dedup();
    Ok(psi)
}

struct VertexRow {
    c: Vec<CValue>,
    raise: Vec<Option<usize>>,
    lower: Vec<Option<usize>>,
    violations: Vec<Violation>,
}

fn check_vertex(psi: &[IntVector], delta: &SimpleSystem, v: &IntVector) -> VertexRow {
    let find = |w: Result<IntVector>| w.ok().and_then(|w| psi.binary_search(&w).ok());
    let mut row = VertexRow {
        c: Vec::with_capacity(delta.len()),
        raise: Vec::with_capacity(delta.len()),
        lower: Vec::with_capacity(delta.len()),
        violations: Vec::new(),
    };
    for (label, a) in delta.roots() {
        let mut flag =
            |kind| row.violations.push(Violation { vertex: v.clone(), label: label.clone(), kind });
        let plus = v.checked_add(a);
        let minus = v.checked_sub(a);
        if plus.is_err() || minus.is_err() {
            flag(ViolationKind::Overflow);
        }
        let up = find(plus);
        let down = find(minus);
        let c = match c_value(v, a) {
            Ok(c) => {
                match (c, up.is_some()) {
                    (CValue::Minus, false) => flag(ViolationKind::RaiseMissing),
                    (CValue::Zero | CValue::Plus, true) => {
                        flag(ViolationKind::RaiseUnexpected { c: c.value() })
                    }
                    _ => {}
                }
                match (c, down.is_some()) {
                    (CValue::Plus, false) => flag(ViolationKind::LowerMissing),
                    (CValue::Zero | CValue::Minus, true) => {
                        flag(ViolationKind::LowerUnexpected { c: c.value() })
                    }
                    _ => {}
                }
                c
            }
            Err(Error::NotMinusculeValue { numerator, denominator, .. }) => {
                flag(ViolationKind::NotMinusculeValue { numerator, denominator });
                CValue::Zero
            }
            Err(_) => {
                flag(ViolationKind::Overflow);
                CValue::Zero
            }
        };
        row.c.push(c);
        row.raise.push(up);
        row.lower.push(down);
    }
    row
}

/// Checks the minuscule axioms for every `(v, a)` and seals the system.
///
/// Ψ is sorted and deduplicated first. On failure the error carries the full
/// [`ValidationReport`].
pub fn validate_system(psi: Vec<IntVector>, delta: SimpleSystem) -> Result<MinusculeSystem> {
    validate_system_with(psi, delta, Execution::default())
}

pub fn validate_system_with(
    psi: Vec<IntVector>,
    delta: SimpleSystem,
    exec: Execution,
) -> Result<MinusculeSystem> {
    let psi = canonical_psi(psi)?;
    if psi[0].dim() != delta.dim() {
        return Err(Error::DimensionMismatch { left: psi[0].dim(), right: delta.dim() });
    }
    let rows = exec.map(&psi, |v| check_vertex(&psi, &delta, v));
    let mut violations = Vec::new();
    let mut c = Vec::with_capacity(psi.len() * delta.len());
    let mut raise = Vec::with_capacity(psi.len() * delta.len());
    let mut lower = Vec::with_capacity(psi.len() * delta.len());
    for row in rows {
        violations.extend(row.violations);
        c.extend(row.c);
        raise.extend(row.raise);
        lower.extend(row.lower);
    }
    if !violations.is_empty() {
        // Rows arrive in vertex order and roots in Δ order; only the kinds
        // within one (v, a) need ordering.
        violations.sort_by(|x, y| {
            x.vertex
                .cmp(&y.vertex)
                .then_with(|| {
                    let px = delta.position(&x.label);
                    let py = delta.position(&y.label);
                    px.cmp(&py)
                })
                .then_with(|| x.kind.rank().cmp(&y.kind.rank()))
        });
        return Err(Error::Invalid(Box::new(ValidationReport { violations })));
    }
    Ok(MinusculeSystem { psi, delta, c, raise, lower })
}

impl MinusculeSystem {
    pub fn psi(&self) -> &[IntVector] {
        &self.psi
    }

    pub fn delta(&self) -> &SimpleSystem {
        &self.delta
    }

    pub fn len(&self) -> usize {
        self.psi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.psi.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.psi[0].dim()
    }

    pub fn rank(&self) -> usize {
        self.delta.len()
    }

    pub fn vertex(&self, i: usize) -> &IntVector {
        &self.psi[i]
    }

    pub fn index_of(&self, v: &IntVector) -> Option<usize> {
        self.psi.binary_search(v).ok()
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        self.index_of(v).is_some()
    }

    /// `c(v, a)` by vertex and root index.
    pub fn c(&self, v: usize, a: usize) -> CValue {
        self.c[v * self.rank() + a]
    }

    /// Index of `v + a` if it is a vertex.
    pub fn raise(&self, v: usize, a: usize) -> Option<usize> {
        self.raise[v * self.rank() + a]
    }

    /// Index of `v - a` if it is a vertex.
    pub fn lower(&self, v: usize, a: usize) -> Option<usize> {
        self.lower[v * self.rank() + a]
    }

    /// The image of vertex `v` under the reflection in root `a`, `v - c·a`.
    pub fn reflect_index(&self, v: usize, a: usize) -> usize {
        match self.c(v, a) {
            CValue::Zero => v,
            CValue::Minus => self.raise(v, a).expect("validated system"),
            CValue::Plus => self.lower(v, a).expect("validated system"),
        }
    }

    /// Same Ψ, Δ cut down to `keep`. The axioms are inherited, so no
    /// revalidation happens in release builds.
    pub fn restrict(&self, keep: &[&str]) -> Result<Self> {
        let delta = self.delta.retain_labels(keep)?;
        let cols: Vec<usize> =
            delta.labels().map(|l| self.delta.position(l).expect("label checked")).collect();
        let pick = |table: &[Option<usize>]| -> Vec<Option<usize>> {
            (0..self.len()).flat_map(|v| cols.iter().map(move |&a| table[v * self.rank() + a])).collect()
        };
        let c = (0..self.len()).flat_map(|v| cols.iter().map(move |&a| self.c(v, a))).collect();
        let out = MinusculeSystem {
            psi: self.psi.clone(),
            delta,
            c,
            raise: pick(&self.raise),
            lower: pick(&self.lower),
        };
        debug_assert!(validate_system_with(out.psi.clone(), out.delta.clone(), Execution::Sequential).is_ok());
        Ok(out)
    }
}
