//! Exact sparse operators on the space with basis `{b_v : v ∈ Ψ}`.
//!
//! Generators act on basis vectors by
//!
//! ```text
//! E_a b_v = b_{v+a}  if v + a ∈ Ψ, else 0
//! F_a b_v = b_{v-a}  if v - a ∈ Ψ, else 0
//! H_a b_v = c(v, a) b_v
//! ```
//!
//! and the checkers below compare both sides of each relation as canonical
//! sparse matrices, so equality is structural and exact.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cartan::CartanMatrix;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::q;
use crate::system::{CValue, MinusculeSystem};
use crate::vector::IntVector;

pub type Coeff = BigRational;

/// Column-sparse endomorphism: `columns[j]` lists `(row, coeff)` of the image
/// of basis vector `j`, sorted by row with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOperator {
    dim: usize,
    columns: Vec<Vec<(usize, Coeff)>>,
}

impl LinearOperator {
    pub fn zero(dim: usize) -> Self {
        LinearOperator { dim, columns: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        LinearOperator { dim, columns: (0..dim).map(|j| vec![(j, Coeff::one())]).collect() }
    }

    /// Builds from arbitrary column lists, summing repeats and dropping zeros.
    pub fn from_columns(dim: usize, columns: Vec<Vec<(usize, Coeff)>>) -> Self {
        assert_eq!(columns.len(), dim, "column count");
        let columns = columns
            .into_iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Coeff> = BTreeMap::new();
                for (r, c) in col {
                    assert!(r < dim, "row index out of range");
                    *acc.entry(r).or_insert_with(Coeff::zero) += c;
                }
                canonical(acc)
            })
            .collect();
        LinearOperator { dim, columns }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Image of basis vector `j`.
    pub fn column(&self, j: usize) -> &[(usize, Coeff)] {
        &self.columns[j]
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.columns.iter().all(|col| col.iter().all(|(_, c)| c.is_integer()))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Coeff> = BTreeMap::new();
                for (k, c) in col {
                    for (r, d) in &self.columns[*k] {
                        *acc.entry(*r).or_insert_with(Coeff::zero) += c * d;
                    }
                }
                canonical(acc)
            })
            .collect();
        Ok(LinearOperator { dim: self.dim, columns })
    }

    fn combine(&self, other: &Self, sign: &Coeff) -> Result<Self> {
        self.check_dim(other)?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(x, y)| {
                let mut acc: BTreeMap<usize, Coeff> = x.iter().cloned().collect();
                for (r, c) in y {
                    *acc.entry(*r).or_insert_with(Coeff::zero) += sign * c;
                }
                canonical(acc)
            })
            .collect();
        Ok(LinearOperator { dim: self.dim, columns })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &Coeff::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &-Coeff::one())
    }

    pub fn scale(&self, k: &Coeff) -> Self {
        if k.is_zero() {
            return Self::zero(self.dim);
        }
        LinearOperator {
            dim: self.dim,
            columns: self.columns.iter().map(|col| col.iter().map(|(r, c)| (*r, c * k)).collect()).collect(),
        }
    }

    /// `[self, other] = self ∘ other - other ∘ self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<Vec<(usize, Coeff)>> = vec![Vec::new(); self.dim];
        for (j, col) in self.columns.iter().enumerate() {
            for (r, c) in col {
                cols[*r].push((j, c.clone()));
            }
        }
        LinearOperator { dim: self.dim, columns: cols }
    }

    /// First basis index whose images under `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        (0..self.dim.min(other.dim)).find(|&j| self.columns[j] != other.columns[j])
    }

    /// First basis index with a nonzero image.
    pub fn first_nonzero_column(&self) -> Option<usize> {
        self.columns.iter().position(|c| !c.is_empty())
    }

    /// Dense row-major integer matrix, or `None` if a coefficient is not an
    /// integer that fits in `i64`.
    pub fn to_dense(&self) -> Option<Vec<Vec<i64>>> {
        let mut m = vec![vec![0i64; self.dim]; self.dim];
        for (j, col) in self.columns.iter().enumerate() {
            for (r, c) in col {
                if !c.is_integer() {
                    return None;
                }
                m[*r][j] = c.to_integer().to_i64()?;
            }
        }
        Some(m)
    }

    /// Largest absolute coefficient, zero for the zero operator.
    pub fn max_abs_coeff(&self) -> Coeff {
        self.columns.iter().flat_map(|c| c.iter().map(|(_, x)| x.abs())).max().unwrap_or_else(Coeff::zero)
    }
}

fn canonical(acc: BTreeMap<usize, Coeff>) -> Vec<(usize, Coeff)> {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// The operators `E_a`, `F_a`, `H_a` for every root of a validated system,
/// indexed like `system.delta()`.
#[derive(Debug, Clone)]
pub struct GeneratorFamily {
    system: MinusculeSystem,
    e: Vec<LinearOperator>,
    f: Vec<LinearOperator>,
    h: Vec<LinearOperator>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GeneratorKind {
    E,
    F,
    H,
}

pub fn build_operators(sys: &MinusculeSystem) -> GeneratorFamily {
    let n = sys.len();
    let one = Coeff::one;
    let mut e = Vec::with_capacity(sys.rank());
    let mut f = Vec::with_capacity(sys.rank());
    let mut h = Vec::with_capacity(sys.rank());
    for a in 0..sys.rank() {
        let cols_e = (0..n).map(|v| sys.raise(v, a).map(|w| vec![(w, one())]).unwrap_or_default()).collect();
        let cols_f = (0..n).map(|v| sys.lower(v, a).map(|w| vec![(w, one())]).unwrap_or_default()).collect();
        let cols_h = (0..n)
            .map(|v| match sys.c(v, a) {
                CValue::Zero => Vec::new(),
                c => vec![(v, q(c.value()))],
            })
            .collect();
        e.push(LinearOperator { dim: n, columns: cols_e });
        f.push(LinearOperator { dim: n, columns: cols_f });
        h.push(LinearOperator { dim: n, columns: cols_h });
    }
    GeneratorFamily { system: sys.clone(), e, f, h }
}

impl GeneratorFamily {
    pub fn system(&self) -> &MinusculeSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.e.len()
    }

    pub fn e(&self, a: usize) -> &LinearOperator {
        &self.e[a]
    }

    pub fn f(&self, a: usize) -> &LinearOperator {
        &self.f[a]
    }

    pub fn h(&self, a: usize) -> &LinearOperator {
        &self.h[a]
    }

    pub fn get(&self, kind: GeneratorKind, a: usize) -> &LinearOperator {
        match kind {
            GeneratorKind::E => &self.e[a],
            GeneratorKind::F => &self.f[a],
            GeneratorKind::H => &self.h[a],
        }
    }

    /// Every generator in the order E_0.., F_0.., H_0...
    pub fn all(&self) -> impl Iterator<Item = (GeneratorKind, usize, &LinearOperator)> {
        let tag = |k: GeneratorKind| move |(i, op)| (k, i, op);
        self.e
            .iter()
            .enumerate()
            .map(tag(GeneratorKind::E))
            .chain(self.f.iter().enumerate().map(tag(GeneratorKind::F)))
            .chain(self.h.iter().enumerate().map(tag(GeneratorKind::H)))
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.system.delta().position(label)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationVerdict {
    pub relation: String,
    pub labels: Vec<String>,
    pub passed: bool,
    /// The first basis vector on which the two sides differ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<IntVector>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub verdicts: Vec<RelationVerdict>,
}

impl RelationReport {
    pub fn failures(&self) -> impl Iterator<Item = &RelationVerdict> {
        self.verdicts.iter().filter(|v| !v.passed)
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }

    pub fn all_passed(&self) -> bool {
        self.failure_count() == 0
    }

    pub fn merge(mut self, other: RelationReport) -> Self {
        self.verdicts.extend(other.verdicts);
        self
    }
}

struct Checker<'a> {
    fam: &'a GeneratorFamily,
    out: Vec<RelationVerdict>,
}

impl Checker<'_> {
    fn record(&mut self, relation: &str, labels: &[usize], lhs: &LinearOperator, rhs: &LinearOperator) {
        let diff = lhs.first_difference(rhs);
        let delta = self.fam.system.delta();
        self.out.push(RelationVerdict {
            relation: relation.to_string(),
            labels: labels.iter().map(|&i| delta.label(i).to_string()).collect(),
            passed: diff.is_none(),
            counterexample: diff.map(|j| self.fam.system.vertex(j).clone()),
        });
    }

    fn record_zero(&mut self, relation: &str, labels: &[usize], op: &LinearOperator) {
        let zero = LinearOperator::zero(op.dim());
        self.record(relation, labels, op, &zero);
    }
}

fn ratio_matrix(sys: &MinusculeSystem) -> Vec<Vec<Coeff>> {
    let roots: Vec<&IntVector> = sys.delta().vectors().collect();
    roots
        .iter()
        .map(|a| {
            let aa = a.norm_sq().expect("validated root");
            roots
                .iter()
                .map(|b| {
                    let ab = a.dot(b).expect("validated root");
                    Coeff::new((2 * ab).into(), aa.into())
                })
                .collect()
        })
        .collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
}

/// Checks the twelve basic identities between generators for every ordered
/// pair of roots, applying each identity only where its condition on
/// `A[a][b]` holds. Identity ids are `"1"`..`"12"`.
pub fn check_lemma_3_1(fam: &GeneratorFamily) -> RelationReport {
    check_lemma_3_1_with(fam, Execution::default())
}

pub fn check_lemma_3_1_with(fam: &GeneratorFamily, exec: Execution) -> RelationReport {
    let a_mat = ratio_matrix(&fam.system);
    let per_pair = exec.map(&pairs(fam.rank()), |&(a, b)| {
        lemma_identities(fam, a, b, &a_mat[a][b]).expect("operators share a dimension")
    });
    RelationReport { verdicts: per_pair.into_iter().flatten().collect() }
}

fn lemma_identities(fam: &GeneratorFamily, a: usize, b: usize, a_ab: &Coeff) -> Result<Vec<RelationVerdict>> {
    let mut ck = Checker { fam, out: Vec::new() };
    let (ea, fa, ha) = (fam.e(a), fam.f(a), fam.h(a));
    let (eb, fb) = (fam.e(b), fam.f(b));
    let ab = [a, b];
    let minus_one = -Coeff::one();

    ck.record("1", &ab, &ha.compose(eb)?, &eb.compose(ha)?.add(&eb.scale(a_ab))?);
    ck.record("3", &ab, &ha.compose(fb)?, &fb.compose(ha)?.sub(&fb.scale(a_ab))?);

    if a == b {
        // (2): H_a E_a = E_a = -E_a H_a, recorded as two verdicts.
        ck.record("2", &ab, &ha.compose(ea)?, ea);
        ck.record("2", &ab, ea, &ea.compose(ha)?.scale(&minus_one));
        // (4): H_a F_a = -F_a = -F_a H_a.
        ck.record("4", &ab, &ha.compose(fa)?, &fa.scale(&minus_one));
        ck.record("4", &ab, &fa.scale(&minus_one), &fa.compose(ha)?.scale(&minus_one));
        ck.record_zero("7", &ab, &ea.compose(ea)?);
        ck.record_zero("10", &ab, &fa.compose(fa)?);
    }
    if a_ab.is_negative() {
        ck.record_zero("5", &ab, &ea.compose(fb)?);
        ck.record_zero("5", &ab, &fb.compose(ea)?);
    }
    if a_ab.is_zero() {
        ck.record("6", &ab, &ea.compose(fb)?, &fb.compose(ea)?);
        ck.record("8", &ab, &ea.compose(eb)?, &eb.compose(ea)?);
        ck.record("11", &ab, &fa.compose(fb)?, &fb.compose(fa)?);
    }
    if *a_ab == minus_one {
        ck.record_zero("9", &ab, &ea.compose(eb)?.compose(ea)?);
        ck.record_zero("12", &ab, &fa.compose(fb)?.compose(fa)?);
    }
    Ok(ck.out)
}

/// The iterated brackets `ad(X_i)^k (X_j)` for `k = 1..=1-A[i][j]`, stopping
/// early once a term vanishes. The last element is the Serre term.
pub fn serre_terms(
    fam: &GeneratorFamily,
    kind: GeneratorKind,
    i: usize,
    j: usize,
    a_ij: i64,
) -> Result<Vec<LinearOperator>> {
    let xi = fam.get(kind, i);
    let mut cur = fam.get(kind, j).clone();
    let mut out = Vec::new();
    let steps = (1 - a_ij).max(0);
    for _ in 0..steps {
        cur = xi.commutator(&cur)?;
        out.push(cur.clone());
        if cur.is_zero() {
            break;
        }
    }
    Ok(out)
}

/// Checks the defining relations of the derived Kac–Moody algebra of `cartan`
/// on the generator family. Relation ids: `hh`, `he`, `hf`, `ef`, `serre_e`,
/// `serre_f`.
pub fn check_presentation(fam: &GeneratorFamily, cartan: &CartanMatrix) -> Result<RelationReport> {
    check_presentation_with(fam, cartan, Execution::default())
}

pub fn check_presentation_with(
    fam: &GeneratorFamily,
    cartan: &CartanMatrix,
    exec: Execution,
) -> Result<RelationReport> {
    if cartan.size() != fam.rank() {
        return Err(Error::DimensionMismatch { left: cartan.size(), right: fam.rank() });
    }
    let per_pair = exec.map(&pairs(fam.rank()), |&(i, j)| presentation_pair(fam, cartan, i, j));
    let mut verdicts = Vec::new();
    for v in per_pair {
        verdicts.extend(v?);
    }
    Ok(RelationReport { verdicts })
}

fn presentation_pair(
    fam: &GeneratorFamily,
    cartan: &CartanMatrix,
    i: usize,
    j: usize,
) -> Result<Vec<RelationVerdict>> {
    let mut ck = Checker { fam, out: Vec::new() };
    let a_ij = cartan.get(i, j);
    let ij = [i, j];
    let (hi, ei) = (fam.h(i), fam.e(i));
    let (hj, ej, fj) = (fam.h(j), fam.e(j), fam.f(j));

    ck.record_zero("hh", &ij, &hi.commutator(hj)?);
    ck.record("he", &ij, &hi.commutator(ej)?, &ej.scale(&q(a_ij)));
    ck.record("hf", &ij, &hi.commutator(fj)?, &fj.scale(&q(-a_ij)));
    let expected = if i == j { hi.clone() } else { LinearOperator::zero(hi.dim()) };
    ck.record("ef", &ij, &ei.commutator(fj)?, &expected);
    if i != j {
        for (id, kind) in [("serre_e", GeneratorKind::E), ("serre_f", GeneratorKind::F)] {
            let terms = serre_terms(fam, kind, i, j, a_ij)?;
            let last = terms.last().cloned().unwrap_or_else(|| fam.get(kind, j).clone());
            ck.record_zero(id, &ij, &last);
        }
    }
    Ok(ck.out)
}
