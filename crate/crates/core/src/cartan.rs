//! Generalized Cartan matrices of simple systems and Dynkin-type recognition.

use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::{gcd, SimpleSystem};
use crate::vector::IntVector;

/// `A[a][b] = 2(a·b)/(a·a)` together with the symmetrizer `d_a = (a·a)/2`,
/// so that `d_a A[a][b] = a·b` is symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<i64>>,
    pub symmetrizer: Vec<Rational64>,
}

pub fn cartan_matrix(delta: &SimpleSystem) -> Result<CartanMatrix> {
    let n = delta.len();
    let mut entries = vec![vec![0i64; n]; n];
    let mut symmetrizer = Vec::with_capacity(n);
    for (i, (li, a)) in delta.roots().iter().enumerate() {
        let aa = a.norm_sq()?;
        symmetrizer.push(Rational64::new(aa, 2));
        for (j, (lj, b)) in delta.roots().iter().enumerate() {
            let num = a.dot(b)?.checked_mul(2).ok_or(Error::Overflow)?;
            if num % aa != 0 {
                let g = gcd(num, aa);
                return Err(Error::NonIntegerEntry {
                    row: li.clone(),
                    col: lj.clone(),
                    numerator: num / g,
                    denominator: aa / g,
                });
            }
            entries[i][j] = num / aa;
        }
    }
    let m = CartanMatrix { labels: delta.labels().map(str::to_string).collect(), entries, symmetrizer };
    m.check_gcm()?;
    Ok(m)
}

impl CartanMatrix {
    pub fn from_entries(labels: Vec<String>, entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = labels.len();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::GcmViolation("matrix is not square".into()));
        }
        let symmetrizer =
            symmetrize(&entries).ok_or_else(|| Error::GcmViolation("matrix is not symmetrizable".into()))?;
        let m = CartanMatrix { labels, entries, symmetrizer };
        m.check_gcm()?;
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    fn check_gcm(&self) -> Result<()> {
        let n = self.size();
        for i in 0..n {
            if self.entries[i][i] != 2 {
                return Err(Error::GcmViolation(format!(
                    "diagonal entry at `{}` is {}",
                    self.labels[i], self.entries[i][i]
                )));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.entries[i][j] > 0 {
                    return Err(Error::GcmViolation(format!(
                        "positive entry {} at (`{}`, `{}`)",
                        self.entries[i][j], self.labels[i], self.labels[j]
                    )));
                }
                if (self.entries[i][j] == 0) != (self.entries[j][i] == 0) {
                    return Err(Error::GcmViolation(format!(
                        "asymmetric zero pattern at (`{}`, `{}`)",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether `d_i A[i][j] = d_j A[j][i]` for the attached symmetrizer.
    pub fn is_symmetrized(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            (0..n)
                .all(|j| self.symmetrizer[i] * self.entries[i][j] == self.symmetrizer[j] * self.entries[j][i])
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, s) in seen.iter_mut().enumerate() {
                if !*s && self.entries[i][j] != 0 {
                    *s = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

// Finds positive d with d_i a_ij = d_j a_ji by propagation along edges.
fn symmetrize(a: &[Vec<i64>]) -> Option<Vec<Rational64>> {
    let n = a.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational64::from_integer(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i]?;
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                if a[j][i] == 0 {
                    return None;
                }
                let dj = di * Rational64::new(a[i][j], a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(existing) if existing != dj => return None,
                    Some(_) => {}
                }
            }
        }
    }
    d.into_iter().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
        };
        f.write_str(s)
    }
}

/// Dynkin type of a Cartan matrix. `Affine(X, n)` is the untwisted affine
/// type `X_n^(1)`, which has `n + 1` nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeLabel {
    Finite(Series, usize),
    Affine(Series, usize),
    Unknown,
}

impl TypeLabel {
    pub fn is_finite(self) -> bool {
        matches!(self, TypeLabel::Finite(..))
    }

    pub fn is_affine(self) -> bool {
        matches!(self, TypeLabel::Affine(..))
    }

    /// Number of nodes in the diagram.
    pub fn nodes(self) -> Option<usize> {
        match self {
            TypeLabel::Finite(_, n) => Some(n),
            TypeLabel::Affine(_, n) => Some(n + 1),
            TypeLabel::Unknown => None,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLabel::Finite(s, n) => write!(f, "{s}{n}"),
            TypeLabel::Affine(s, n) => write!(f, "{s}{n}^(1)"),
            TypeLabel::Unknown => f.write_str("Unknown"),
        }
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn series_exists(series: Series, rank: usize) -> bool {
    match series {
        Series::A => rank >= 1,
        // B_2 and C_2 coincide; report them as C_2.
        Series::B => rank >= 3,
        Series::C => rank >= 2,
        Series::D => rank >= 4,
        Series::E => (6..=8).contains(&rank),
        Series::F => rank == 4,
        Series::G => rank == 2,
    }
}

fn iv(c: Vec<i64>) -> IntVector {
    IntVector::from(c)
}

fn basis_diff(dim: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] += 1;
    v[j] -= 1;
    v
}

// E-series roots in the usual 8-dimensional model, doubled to stay integral.
fn e_roots() -> Vec<Vec<i64>> {
    let mut roots = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], vec![2, 2, 0, 0, 0, 0, 0, 0]];
    for k in 0..6 {
        let mut v = vec![0; 8];
        v[k] = -2;
        v[k + 1] = 2;
        roots.push(v);
    }
    roots
}

/// Simple roots and highest root of a standard realization.
fn realization(series: Series, rank: usize) -> Option<(Vec<Vec<i64>>, Vec<i64>)> {
    if !series_exists(series, rank) {
        return None;
    }
    let n = rank;
    Some(match series {
        Series::A => {
            let roots = (0..n).map(|i| basis_diff(n + 1, i, i + 1)).collect();
            (roots, basis_diff(n + 1, 0, n))
        }
        Series::B | Series::C | Series::D => {
            let mut roots: Vec<_> = (0..n - 1).map(|i| basis_diff(n, i, i + 1)).collect();
            let mut last = vec![0; n];
            let mut theta = vec![0; n];
            match series {
                Series::B => {
                    last[n - 1] = 1;
                    theta[0] = 1;
                    theta[1] = 1;
                }
                Series::C => {
                    last[n - 1] = 2;
                    theta[0] = 2;
                }
                _ => {
                    last[n - 2] = 1;
                    last[n - 1] = 1;
                    theta[0] = 1;
                    theta[1] = 1;
                }
            }
            roots.push(last);
            (roots, theta)
        }
        Series::E => {
            let roots = e_roots().into_iter().take(n).collect();
            let theta = match n {
                6 => vec![1, 1, 1, 1, 1, -1, -1, 1],
                7 => vec![0, 0, 0, 0, 0, 0, -2, 2],
                _ => vec![0, 0, 0, 0, 0, 0, 2, 2],
            };
            (roots, theta)
        }
        Series::F => (
            vec![vec![0, 2, -2, 0], vec![0, 0, 2, -2], vec![0, 0, 0, 2], vec![1, -1, -1, -1]],
            vec![2, 2, 0, 0],
        ),
        Series::G => (vec![vec![1, -1, 0], vec![-2, 1, 1]], vec![-1, -1, 2]),
    })
}

/// The Cartan matrix of a named type from its standard realization; the
/// affine node (minus the highest root) comes first.
pub fn standard_cartan(label: TypeLabel) -> Option<CartanMatrix> {
    let (roots, affine_root) = match label {
        TypeLabel::Finite(s, n) => (realization(s, n)?.0, None),
        TypeLabel::Affine(s, n) => {
            let (roots, theta) = realization(s, n)?;
            (roots, Some(theta.into_iter().map(|x| -x).collect::<Vec<_>>()))
        }
        TypeLabel::Unknown => return None,
    };
    let mut named: Vec<(String, IntVector)> = Vec::new();
    if let Some(r) = affine_root {
        named.push(("0".into(), iv(r)));
    }
    named.extend(roots.into_iter().enumerate().map(|(i, r)| ((i + 1).to_string(), iv(r))));
    let delta = SimpleSystem::new(named).ok()?;
    cartan_matrix(&delta).ok()
}

const ALL_SERIES: [Series; 7] = [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G];

/// Every finite type with `nodes` nodes and every affine type with `nodes`
/// nodes.
pub fn candidate_types(nodes: usize) -> Vec<TypeLabel> {
    let mut out = Vec::new();
    for s in ALL_SERIES {
        if series_exists(s, nodes) {
            out.push(TypeLabel::Finite(s, nodes));
        }
    }
    if nodes >= 2 {
        for s in ALL_SERIES {
            if series_exists(s, nodes - 1) {
                out.push(TypeLabel::Affine(s, nodes - 1));
            }
        }
    }
    out
}

/// Names the Dynkin type by matching the unlabeled diagram (entries up to
/// simultaneous row/column permutation) against the built-in table of finite
/// and untwisted affine types.
pub fn classify_cartan(a: &CartanMatrix) -> TypeLabel {
    let n = a.size();
    if n == 0 || !a.is_connected() {
        return TypeLabel::Unknown;
    }
    candidate_types(n)
        .into_iter()
        .find(|&t| standard_cartan(t).map(|c| isomorphic(&a.entries, &c.entries)).unwrap_or(false))
        .unwrap_or(TypeLabel::Unknown)
}

fn row_signature(m: &[Vec<i64>], i: usize) -> (Vec<i64>, Vec<i64>) {
    let mut row: Vec<i64> = m[i].clone();
    let mut col: Vec<i64> = m.iter().map(|r| r[i]).collect();
    row.sort_unstable();
    col.sort_unstable();
    (row, col)
}

/// Is there a permutation `p` with `x[i][j] = y[p(i)][p(j)]`?
pub fn isomorphic(x: &[Vec<i64>], y: &[Vec<i64>]) -> bool {
    let n = x.len();
    if y.len() != n {
        return false;
    }
    let sx: Vec<_> = (0..n).map(|i| row_signature(x, i)).collect();
    let sy: Vec<_> = (0..n).map(|i| row_signature(y, i)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        k: usize,
        x: &[Vec<i64>],
        y: &[Vec<i64>],
        sx: &[(Vec<i64>, Vec<i64>)],
        sy: &[(Vec<i64>, Vec<i64>)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = x.len();
        if k == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || sx[k] != sy[cand] {
                continue;
            }
            let consistent = (0..k).all(|i| x[k][i] == y[cand][map[i]] && x[i][k] == y[map[i]][cand]);
            if !consistent {
                continue;
            }
            map[k] = cand;
            used[cand] = true;
            if extend(k + 1, x, y, sx, sy, map, used) {
                return true;
            }
            used[cand] = false;
        }
        false
    }

    extend(0, x, y, &sx, &sy, &mut map, &mut used)
}
