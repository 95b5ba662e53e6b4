//! The polytope constructions, plus restriction and slicing of systems.
//!
//! Coordinates are the integral ones (Hesse vertices scaled by 4, hypercube
//! vertices `(±2, …, ±2)`, cross-polytope vertices `±4ε_i`), so every dot
//! product in a catalog system is an exact small integer.
//!
//! Root labels: `alpha0`, `alpha1`, … for the chain roots; the extra root of
//! the D-type systems is `alpha{n}p`, the two long roots of the C-type system
//! are `alpha0pp` and `alpha{n}pp`, and the root adjoined to a slice to make
//! it affine is plain `alpha`.

use std::fmt;

use crate::cartan::{Series, TypeLabel};
use crate::error::{Error, Result};
use crate::system::{validate_system, CValue, MinusculeSystem, SimpleSystem};
use crate::vector::IntVector;

/// Largest `n` accepted for the hypercube family (2^n vertices).
pub const MAX_CUBE_RANK: usize = 16;
/// Largest `n` accepted for the cross polytopes.
pub const MAX_CROSS_RANK: usize = 256;

/// Label of the root adjoined to a slice to obtain the affine variant.
pub const ADJOINED_LABEL: &str = "alpha";

/// `Ψ_D^+` has an even number of `-2` coordinates, `Ψ_D^-` an odd number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "+",
            Parity::Odd => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogEntry {
    /// 56 vertices of the Hesse polytope with the affine E7 simple system.
    Hesse,
    /// Slice of the Hesse polytope by `v_{0,7}` at `level ∈ {24, 8, -8, -24}`.
    Schlafli { level: i64 },
    /// The same slice with `4(ε_0 - ε_7)` adjoined. The opposite sign also
    /// satisfies the axioms but pairs positively with `α_7`, so its Cartan
    /// matrix is not generalized.
    SchlafliAffine { level: i64 },
    /// `2^n` hypercube vertices with the affine B_n simple system.
    Hypercube { n: usize },
    /// Slice of the hypercube by `j = (1, …, 1)` at `level = 2n - 4k`.
    HypercubeSlice { n: usize, level: i64 },
    /// The same slice with `4(ε_{n-1} - ε_0)` adjoined.
    HypercubeSliceAffine { n: usize, level: i64 },
    /// Half of the hypercube by parity, with the affine D_n simple system.
    Halfcube { n: usize, parity: Parity },
    /// `2n` cross-polytope vertices with the affine D_n simple system.
    CrossD { n: usize },
    /// `2n` cross-polytope vertices with the affine C_n simple system.
    CrossC { n: usize },
}

/// What the constructions are known to produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    /// Type of the full simple system.
    pub full_type: TypeLabel,
    /// Type after dropping [`CatalogEntry::affine_label`], if there is one.
    pub finite_type: TypeLabel,
    pub dimension: usize,
    /// Highest weight vector of the finite-type system, where known.
    pub highest: Option<IntVector>,
    /// Lowest weight vector of the finite-type system, where known. Left
    /// open for the half-cubes, whose assignment depends on the parity of n.
    pub lowest: Option<IntVector>,
}

/// Row of `catalog list`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CatalogInfo {
    pub name: &'static str,
    pub parameters: &'static str,
    pub full_type: &'static str,
    pub finite_type: &'static str,
    pub dimension: &'static str,
}

pub const CATALOG: &[CatalogInfo] = &[
    CatalogInfo {
        name: "hesse",
        parameters: "none",
        full_type: "E7^(1)",
        finite_type: "E7 (drop alpha0)",
        dimension: "56",
    },
    CatalogInfo {
        name: "schlafli",
        parameters: "--level 24|8|-8|-24",
        full_type: "E6",
        finite_type: "E6",
        dimension: "27 (levels ±8), 1 (levels ±24)",
    },
    CatalogInfo {
        name: "schlafli-affine",
        parameters: "--level 24|8|-8|-24",
        full_type: "E6^(1)",
        finite_type: "E6 (drop alpha)",
        dimension: "27 (levels ±8), 1 (levels ±24)",
    },
    CatalogInfo {
        name: "hypercube",
        parameters: "--n N (3 <= N <= 16)",
        full_type: "Bn^(1)",
        finite_type: "Bn (drop alpha0)",
        dimension: "2^n",
    },
    CatalogInfo {
        name: "hypercube-slice",
        parameters: "--n N (3 <= N <= 16) --level 2n-4k (0 <= k <= n)",
        full_type: "A(n-1)",
        finite_type: "A(n-1)",
        dimension: "C(n, k)",
    },
    CatalogInfo {
        name: "hypercube-slice-affine",
        parameters: "--n N (3 <= N <= 16) --level 2n-4k (0 <= k <= n)",
        full_type: "A(n-1)^(1)",
        finite_type: "A(n-1) (drop alpha)",
        dimension: "C(n, k)",
    },
    CatalogInfo {
        name: "halfcube",
        parameters: "--n N (4 <= N <= 16) --parity +|-",
        full_type: "Dn^(1)",
        finite_type: "Dn (drop alpha0)",
        dimension: "2^(n-1)",
    },
    CatalogInfo {
        name: "cross-d",
        parameters: "--n N (4 <= N <= 256)",
        full_type: "Dn^(1)",
        finite_type: "Dn (drop alpha0)",
        dimension: "2n",
    },
    CatalogInfo {
        name: "cross-c",
        parameters: "--n N (2 <= N <= 256)",
        full_type: "Cn^(1)",
        finite_type: "Cn (drop alpha0pp)",
        dimension: "2n",
    },
];

fn unit(dim: usize, i: usize, scale: i64) -> IntVector {
    let mut c = vec![0; dim];
    c[i] = scale;
    IntVector::from(c)
}

fn diff(dim: usize, i: usize, j: usize, scale: i64) -> IntVector {
    let mut c = vec![0; dim];
    c[i] += scale;
    c[j] -= scale;
    IntVector::from(c)
}

/// `v_{i,j} = 4(ε_i + ε_j) - Σ ε_k` in R^8, `i != j`.
pub fn hesse_vertex(i: usize, j: usize) -> IntVector {
    assert!(i < 8 && j < 8 && i != j, "hesse vertex indices");
    let mut c = vec![-1; 8];
    c[i] = 3;
    c[j] = 3;
    IntVector::from(c)
}

/// `±v_{i,j}` for `0 <= i < j <= 7`.
pub fn hesse_psi() -> Vec<IntVector> {
    let mut out = Vec::with_capacity(56);
    for i in 0..8 {
        for j in i + 1..8 {
            let v = hesse_vertex(i, j);
            out.push(-&v);
            out.push(v);
        }
    }
    out
}

/// `α_i = 4(ε_i - ε_{i+1})` for `i < 7` and `α_7 = (-2,-2,-2,-2,2,2,2,2)`.
pub fn hesse_delta() -> SimpleSystem {
    let mut roots: Vec<(String, IntVector)> =
        (0..7).map(|i| (format!("alpha{i}"), diff(8, i, i + 1, 4))).collect();
    roots.push(("alpha7".into(), IntVector::from([-2, -2, -2, -2, 2, 2, 2, 2])));
    SimpleSystem::new(roots).expect("hesse simple system")
}

/// The slice normal `v_{0,7}`.
pub fn hesse_normal() -> IntVector {
    hesse_vertex(0, 7)
}

/// `(±2, …, ±2)` in R^n.
pub fn hypercube_psi(n: usize) -> Vec<IntVector> {
    (0..1u64 << n)
        .map(|mask| {
            IntVector::from((0..n).map(|i| if mask >> i & 1 == 1 { -2 } else { 2 }).collect::<Vec<_>>())
        })
        .collect()
}

/// `j = Σ ε_i`.
pub fn all_ones(n: usize) -> IntVector {
    IntVector::from(vec![1; n])
}

fn chain_roots(n: usize) -> Vec<(String, IntVector)> {
    (1..n).map(|i| (format!("alpha{i}"), diff(n, i - 1, i, 4))).collect()
}

fn alpha0_bd(n: usize) -> IntVector {
    let mut c = vec![0; n];
    c[0] = -4;
    c[1] = -4;
    IntVector::from(c)
}

/// Affine B_n system: `α_0 = -4(ε_0 + ε_1)`, `α_i = 4(ε_{i-1} - ε_i)`,
/// `α_n = 4ε_{n-1}`.
pub fn delta_b(n: usize) -> SimpleSystem {
    let mut roots = vec![("alpha0".to_string(), alpha0_bd(n))];
    roots.extend(chain_roots(n));
    roots.push((format!("alpha{n}"), unit(n, n - 1, 4)));
    SimpleSystem::new(roots).expect("B-type simple system")
}

/// Affine D_n system: as [`delta_b`] with `α'_n = 4(ε_{n-2} + ε_{n-1})` in
/// place of `α_n`.
pub fn delta_d(n: usize) -> SimpleSystem {
    let mut roots = vec![("alpha0".to_string(), alpha0_bd(n))];
    roots.extend(chain_roots(n));
    let mut c = vec![0; n];
    c[n - 2] = 4;
    c[n - 1] = 4;
    roots.push((format!("alpha{n}p"), IntVector::from(c)));
    SimpleSystem::new(roots).expect("D-type simple system")
}

/// Affine C_n system: `α''_0 = -8ε_0`, the chain roots, `α''_n = 8ε_{n-1}`.
pub fn delta_c(n: usize) -> SimpleSystem {
    let mut roots = vec![("alpha0pp".to_string(), unit(n, 0, -8))];
    roots.extend(chain_roots(n));
    roots.push((format!("alpha{n}pp"), unit(n, n - 1, 8)));
    SimpleSystem::new(roots).expect("C-type simple system")
}

/// `±4ε_i`.
pub fn cross_psi(n: usize) -> Vec<IntVector> {
    (0..n).flat_map(|i| [unit(n, i, 4), unit(n, i, -4)]).collect()
}

fn check_rank(n: usize, min: usize, max: usize, what: &str) -> Result<()> {
    if n < min || n > max {
        return Err(Error::ParameterOutOfRange(format!("{what} needs {min} <= n <= {max}, got {n}")));
    }
    Ok(())
}

fn check_hesse_level(level: i64) -> Result<()> {
    if ![24, 8, -8, -24].contains(&level) {
        return Err(Error::ParameterOutOfRange(format!(
            "Hesse slice level must be one of 24, 8, -8, -24, got {level}"
        )));
    }
    Ok(())
}

fn check_cube_level(n: usize, level: i64) -> Result<()> {
    let n = n as i64;
    if level.abs() > 2 * n || (2 * n - level) % 4 != 0 {
        return Err(Error::ParameterOutOfRange(format!(
            "hypercube slice level must be 2n - 4k with 0 <= k <= n, got {level}"
        )));
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

impl CatalogEntry {
    /// Parses CLI-style parameters. `affine` selects the `-affine` slice
    /// variants; the polytope entries already carry their affine root.
    pub fn from_parts(
        name: &str,
        n: Option<usize>,
        parity: Option<Parity>,
        level: Option<i64>,
        affine: bool,
    ) -> Result<Self> {
        let need_n = || n.ok_or_else(|| Error::ParameterOutOfRange(format!("`{name}` needs --n")));
        let need_level =
            || level.ok_or_else(|| Error::ParameterOutOfRange(format!("`{name}` needs --level")));
        let entry = match (name, affine) {
            ("hesse", _) => CatalogEntry::Hesse,
            ("schlafli", false) => CatalogEntry::Schlafli { level: need_level()? },
            ("schlafli", true) | ("schlafli-affine", _) => {
                CatalogEntry::SchlafliAffine { level: need_level()? }
            }
            ("hypercube", _) => CatalogEntry::Hypercube { n: need_n()? },
            ("hypercube-slice", false) => CatalogEntry::HypercubeSlice { n: need_n()?, level: need_level()? },
            ("hypercube-slice", true) | ("hypercube-slice-affine", _) => {
                CatalogEntry::HypercubeSliceAffine { n: need_n()?, level: need_level()? }
            }
            ("halfcube", _) => CatalogEntry::Halfcube {
                n: need_n()?,
                parity: parity
                    .ok_or_else(|| Error::ParameterOutOfRange("`halfcube` needs --parity".into()))?,
            },
            ("cross-d", _) => CatalogEntry::CrossD { n: need_n()? },
            ("cross-c", _) => CatalogEntry::CrossC { n: need_n()? },
            _ => return Err(Error::UnknownEntry(name.to_string())),
        };
        entry.check()?;
        Ok(entry)
    }

    pub fn name(&self) -> &'static str {
        match self {
            CatalogEntry::Hesse => "hesse",
            CatalogEntry::Schlafli { .. } => "schlafli",
            CatalogEntry::SchlafliAffine { .. } => "schlafli-affine",
            CatalogEntry::Hypercube { .. } => "hypercube",
            CatalogEntry::HypercubeSlice { .. } => "hypercube-slice",
            CatalogEntry::HypercubeSliceAffine { .. } => "hypercube-slice-affine",
            CatalogEntry::Halfcube { .. } => "halfcube",
            CatalogEntry::CrossD { .. } => "cross-d",
            CatalogEntry::CrossC { .. } => "cross-c",
        }
    }

    fn check(&self) -> Result<()> {
        match *self {
            CatalogEntry::Hesse => Ok(()),
            CatalogEntry::Schlafli { level } | CatalogEntry::SchlafliAffine { level } => {
                check_hesse_level(level)
            }
            CatalogEntry::Hypercube { n } => check_rank(n, 3, MAX_CUBE_RANK, "hypercube"),
            CatalogEntry::HypercubeSlice { n, level } | CatalogEntry::HypercubeSliceAffine { n, level } => {
                check_rank(n, 3, MAX_CUBE_RANK, "hypercube slice")?;
                check_cube_level(n, level)
            }
            CatalogEntry::Halfcube { n, .. } => check_rank(n, 4, MAX_CUBE_RANK, "halfcube"),
            CatalogEntry::CrossD { n } => check_rank(n, 4, MAX_CROSS_RANK, "cross-d"),
            CatalogEntry::CrossC { n } => check_rank(n, 2, MAX_CROSS_RANK, "cross-c"),
        }
    }

    /// The root whose removal leaves the finite-type system, if the full
    /// system is affine.
    pub fn affine_label(&self) -> Option<String> {
        match self {
            CatalogEntry::Hesse
            | CatalogEntry::Hypercube { .. }
            | CatalogEntry::Halfcube { .. }
            | CatalogEntry::CrossD { .. } => Some("alpha0".into()),
            CatalogEntry::CrossC { .. } => Some("alpha0pp".into()),
            CatalogEntry::SchlafliAffine { .. } | CatalogEntry::HypercubeSliceAffine { .. } => {
                Some(ADJOINED_LABEL.into())
            }
            CatalogEntry::Schlafli { .. } | CatalogEntry::HypercubeSlice { .. } => None,
        }
    }

    pub fn expected(&self) -> Expected {
        let aff = TypeLabel::Affine;
        let fin = TypeLabel::Finite;
        let schlafli = |level: i64| -> (usize, IntVector, IntVector) {
            match level {
                8 => (27, hesse_vertex(1, 7), hesse_vertex(0, 6)),
                -8 => (27, -&hesse_vertex(0, 6), -&hesse_vertex(1, 7)),
                l => {
                    let v = hesse_vertex(0, 7);
                    let v = if l > 0 { v } else { -&v };
                    (1, v.clone(), v)
                }
            }
        };
        let cube_slice = |n: usize, level: i64| -> (usize, IntVector, IntVector) {
            let k = ((2 * n as i64 - level) / 4) as usize;
            let hi: Vec<i64> = (0..n).map(|i| if i < n - k { 2 } else { -2 }).collect();
            let lo: Vec<i64> = (0..n).map(|i| if i < k { -2 } else { 2 }).collect();
            (binomial(n, k), IntVector::from(hi), IntVector::from(lo))
        };
        let twice_j = |n: usize| IntVector::from(vec![2; n]);
        let (full_type, finite_type, dimension, highest, lowest) = match *self {
            CatalogEntry::Hesse => (
                aff(Series::E, 7),
                fin(Series::E, 7),
                56,
                Some(-&hesse_vertex(0, 7)),
                Some(hesse_vertex(0, 7)),
            ),
            CatalogEntry::Schlafli { level } => {
                let (d, hi, lo) = schlafli(level);
                (fin(Series::E, 6), fin(Series::E, 6), d, Some(hi), Some(lo))
            }
            CatalogEntry::SchlafliAffine { level } => {
                let (d, hi, lo) = schlafli(level);
                (aff(Series::E, 6), fin(Series::E, 6), d, Some(hi), Some(lo))
            }
            CatalogEntry::Hypercube { n } => {
                (aff(Series::B, n), fin(Series::B, n), 1 << n, Some(twice_j(n)), Some(-&twice_j(n)))
            }
            CatalogEntry::HypercubeSlice { n, level } => {
                let (d, hi, lo) = cube_slice(n, level);
                (fin(Series::A, n - 1), fin(Series::A, n - 1), d, Some(hi), Some(lo))
            }
            CatalogEntry::HypercubeSliceAffine { n, level } => {
                let (d, hi, lo) = cube_slice(n, level);
                (aff(Series::A, n - 1), fin(Series::A, n - 1), d, Some(hi), Some(lo))
            }
            CatalogEntry::Halfcube { n, parity } => {
                let mut hi = twice_j(n);
                if parity == Parity::Odd {
                    hi = &hi - &unit(n, n - 1, 4);
                }
                (aff(Series::D, n), fin(Series::D, n), 1 << (n - 1), Some(hi), None)
            }
            CatalogEntry::CrossD { n } => {
                (aff(Series::D, n), fin(Series::D, n), 2 * n, Some(unit(n, 0, 4)), Some(unit(n, 0, -4)))
            }
            CatalogEntry::CrossC { n } => {
                (aff(Series::C, n), fin(Series::C, n), 2 * n, Some(unit(n, 0, 4)), Some(unit(n, 0, -4)))
            }
        };
        Expected { full_type, finite_type, dimension, highest, lowest }
    }

    pub fn build(&self) -> Result<MinusculeSystem> {
        self.check()?;
        match *self {
            CatalogEntry::Hesse => validate_system(hesse_psi(), hesse_delta()),
            CatalogEntry::Schlafli { level } => {
                slice(&CatalogEntry::Hesse.build()?, &SliceSpec::new(hesse_normal(), level))
            }
            CatalogEntry::SchlafliAffine { level } => {
                let base = CatalogEntry::Schlafli { level }.build()?;
                let delta = base.delta().with_root(ADJOINED_LABEL, diff(8, 0, 7, 4))?;
                validate_system(base.psi().to_vec(), delta)
            }
            CatalogEntry::Hypercube { n } => validate_system(hypercube_psi(n), delta_b(n)),
            CatalogEntry::HypercubeSlice { n, level } => {
                slice(&CatalogEntry::Hypercube { n }.build()?, &SliceSpec::new(all_ones(n), level))
            }
            CatalogEntry::HypercubeSliceAffine { n, level } => {
                let base = CatalogEntry::HypercubeSlice { n, level }.build()?;
                let delta = base.delta().with_root(ADJOINED_LABEL, diff(n, n - 1, 0, 4))?;
                validate_system(base.psi().to_vec(), delta)
            }
            CatalogEntry::Halfcube { n, parity } => {
                let want_odd = parity == Parity::Odd;
                let psi = hypercube_psi(n)
                    .into_iter()
                    .filter(|v| {
                        let negatives = v.coords().iter().filter(|&&x| x < 0).count();
                        (negatives % 2 == 1) == want_odd
                    })
                    .collect();
                validate_system(psi, delta_d(n))
            }
            CatalogEntry::CrossD { n } => validate_system(cross_psi(n), delta_d(n)),
            CatalogEntry::CrossC { n } => validate_system(cross_psi(n), delta_c(n)),
        }
    }

    /// The system with [`affine_label`](Self::affine_label) removed.
    pub fn build_finite(&self) -> Result<MinusculeSystem> {
        let sys = self.build()?;
        match self.affine_label() {
            Some(drop) => {
                let keep: Vec<&str> = sys.delta().labels().filter(|l| *l != drop).collect();
                sys.restrict(&keep)
            }
            None => Ok(sys),
        }
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        match self {
            CatalogEntry::Hesse => Ok(()),
            CatalogEntry::Schlafli { level } | CatalogEntry::SchlafliAffine { level } => {
                write!(f, "(level={level})")
            }
            CatalogEntry::Hypercube { n } | CatalogEntry::CrossD { n } | CatalogEntry::CrossC { n } => {
                write!(f, "(n={n})")
            }
            CatalogEntry::HypercubeSlice { n, level } | CatalogEntry::HypercubeSliceAffine { n, level } => {
                write!(f, "(n={n}, level={level})")
            }
            CatalogEntry::Halfcube { n, parity } => write!(f, "(n={n}, parity={parity})"),
        }
    }
}

/// Same Ψ, Δ cut down to the labels in `keep`.
pub fn restrict(sys: &MinusculeSystem, keep: &[&str]) -> Result<MinusculeSystem> {
    sys.restrict(keep)
}

/// The hyperplane `{x : x·normal = level}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceSpec {
    pub normal: IntVector,
    pub level: i64,
}

impl SliceSpec {
    pub fn new(normal: IntVector, level: i64) -> Self {
        SliceSpec { normal, level }
    }
}

fn orthogonal_roots(sys: &MinusculeSystem, normal: &IntVector) -> Result<Vec<String>> {
    let mut keep = Vec::new();
    for (label, a) in sys.delta().roots() {
        if a.dot(normal)? == 0 {
            keep.push(label.clone());
        }
    }
    Ok(keep)
}

/// `Ψ(n, l) = {v : v·n = l}` with `Δ(n) = {a : a·n = 0}`.
pub fn slice(sys: &MinusculeSystem, spec: &SliceSpec) -> Result<MinusculeSystem> {
    let mut psi = Vec::new();
    for v in sys.psi() {
        if v.dot(&spec.normal)? == spec.level {
            psi.push(v.clone());
        }
    }
    if psi.is_empty() {
        return Err(Error::EmptySlice);
    }
    let keep = orthogonal_roots(sys, &spec.normal)?;
    if keep.is_empty() {
        return Err(Error::EmptySimpleSlice);
    }
    let keep: Vec<&str> = keep.iter().map(String::as_str).collect();
    let delta = sys.delta().retain_labels(&keep)?;
    validate_system(psi, delta)
}

/// Closure test for a candidate sub-pair: every `v` in `psi_sub` with
/// `c(v, a) = -1` (resp. `+1`) for `a` in `delta_sub` must have `v + a`
/// (resp. `v - a`) in `psi_sub`.
pub fn subsystem_check(sys: &MinusculeSystem, psi_sub: &[IntVector], delta_sub: &[&str]) -> Result<bool> {
    if psi_sub.is_empty() || delta_sub.is_empty() {
        return Err(Error::NotSubsets);
    }
    let mut members = vec![false; sys.len()];
    for v in psi_sub {
        let i = sys.index_of(v).ok_or(Error::NotSubsets)?;
        members[i] = true;
    }
    let roots = delta_sub
        .iter()
        .map(|l| sys.delta().position(l).ok_or(Error::NotSubsets))
        .collect::<Result<Vec<_>>>()?;
    let closed = (0..sys.len()).filter(|&v| members[v]).all(|v| {
        roots.iter().all(|&a| match sys.c(v, a) {
            CValue::Zero => true,
            CValue::Minus => sys.raise(v, a).is_some_and(|w| members[w]),
            CValue::Plus => sys.lower(v, a).is_some_and(|w| members[w]),
        })
    });
    Ok(closed)
}

/// Groups Ψ by `v·normal`, highest level first; each part is the slice at
/// that level.
pub fn partition_by_slices(sys: &MinusculeSystem, normal: &IntVector) -> Result<Vec<(i64, MinusculeSystem)>> {
    let mut levels = Vec::new();
    for v in sys.psi() {
        levels.push(v.dot(normal)?);
    }
    levels.sort_unstable_by(|a, b| b.cmp(a));
    levels.dedup();
    levels.into_iter().map(|l| Ok((l, slice(sys, &SliceSpec::new(normal.clone(), l))?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{cartan_matrix, classify_cartan};

    #[test]
    fn hesse_coordinates() {
        assert_eq!(hesse_vertex(0, 1), IntVector::from([3, 3, -1, -1, -1, -1, -1, -1]));
        let sys = CatalogEntry::Hesse.build().unwrap();
        assert_eq!(sys.len(), 56);
        assert_eq!(sys.rank(), 8);
        assert!(sys.contains(&hesse_vertex(0, 1)));
    }

    #[test]
    fn cross_c_two() {
        let sys = CatalogEntry::CrossC { n: 2 }.build().unwrap();
        let want: Vec<IntVector> = vec![
            IntVector::from([-4, 0]),
            IntVector::from([0, -4]),
            IntVector::from([0, 4]),
            IntVector::from([4, 0]),
        ];
        assert_eq!(sys.psi(), &want[..]);
        assert_eq!(sys.delta().get("alpha0pp"), Some(&IntVector::from([-8, 0])));
        assert_eq!(sys.delta().get("alpha2pp"), Some(&IntVector::from([0, 8])));
    }

    #[test]
    fn parameters_are_range_checked() {
        assert!(matches!(CatalogEntry::Hypercube { n: 2 }.build(), Err(Error::ParameterOutOfRange(_))));
        assert!(CatalogEntry::Halfcube { n: 3, parity: Parity::Even }.build().is_err());
        assert!(CatalogEntry::CrossD { n: 3 }.build().is_err());
        assert!(CatalogEntry::CrossC { n: 1 }.build().is_err());
        assert!(CatalogEntry::Schlafli { level: 0 }.build().is_err());
        assert!(CatalogEntry::HypercubeSlice { n: 4, level: 6 }.build().is_err());
        assert!(CatalogEntry::from_parts("nope", None, None, None, false).is_err());
        assert!(CatalogEntry::from_parts("hypercube", None, None, None, false).is_err());
        assert_eq!(
            CatalogEntry::from_parts("schlafli", None, None, Some(8), true).unwrap(),
            CatalogEntry::SchlafliAffine { level: 8 }
        );
    }

    #[test]
    fn restriction() {
        let sys = CatalogEntry::Hesse.build().unwrap();
        let all: Vec<&str> = sys.delta().labels().collect();
        assert_eq!(restrict(&sys, &all).unwrap(), sys);
        assert!(matches!(restrict(&sys, &["beta"]), Err(Error::UnknownLabel(_))));
        assert!(matches!(restrict(&sys, &[]), Err(Error::EmptyRestriction)));
        let e7 = CatalogEntry::Hesse.build_finite().unwrap();
        assert_eq!(e7.len(), 56);
        assert_eq!(classify_cartan(&cartan_matrix(e7.delta()).unwrap()), TypeLabel::Finite(Series::E, 7));
    }

    #[test]
    fn hesse_slices() {
        let sys = CatalogEntry::Hesse.build().unwrap();
        let top = slice(&sys, &SliceSpec::new(hesse_normal(), 24)).unwrap();
        assert_eq!(top.psi(), &[hesse_vertex(0, 7)]);

        let mid = slice(&sys, &SliceSpec::new(hesse_normal(), 8)).unwrap();
        let mut want: Vec<IntVector> = Vec::new();
        for i in 1..=6 {
            want.push(hesse_vertex(0, i));
            want.push(hesse_vertex(i, 7));
        }
        for i in 1..=6 {
            for j in i + 1..=6 {
                want.push(-&hesse_vertex(i, j));
            }
        }
        want.sort();
        assert_eq!(mid.psi(), &want[..]);
        let labels: Vec<&str> = mid.delta().labels().collect();
        assert_eq!(labels, ["alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha7"]);

        let low = slice(&sys, &SliceSpec::new(hesse_normal(), -8)).unwrap();
        let mut neg: Vec<IntVector> = mid.psi().iter().map(|v| -v).collect();
        neg.sort();
        assert_eq!(low.psi(), &neg[..]);

        assert!(matches!(slice(&sys, &SliceSpec::new(hesse_normal(), 7)), Err(Error::EmptySlice)));
        // No simple root is orthogonal to this normal.
        let skew = IntVector::from([8, 7, 6, 5, 4, 3, 2, 1]);
        let lvl = sys.psi()[0].dot(&skew).unwrap();
        assert!(matches!(slice(&sys, &SliceSpec::new(skew, lvl)), Err(Error::EmptySimpleSlice)));
    }

    #[test]
    fn partition_hesse() {
        let sys = CatalogEntry::Hesse.build().unwrap();
        let parts = partition_by_slices(&sys, &hesse_normal()).unwrap();
        let shape: Vec<(i64, usize)> = parts.iter().map(|(l, s)| (*l, s.len())).collect();
        assert_eq!(shape, [(24, 1), (8, 27), (-8, 27), (-24, 1)]);

        let zero = partition_by_slices(&sys, &IntVector::zero(8)).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].0, 0);
        assert_eq!(zero[0].1.len(), 56);
    }

    #[test]
    fn partition_hypercube() {
        for n in 3..=6 {
            let sys = CatalogEntry::Hypercube { n }.build().unwrap();
            let parts = partition_by_slices(&sys, &all_ones(n)).unwrap();
            assert_eq!(parts.len(), n + 1);
            for (k, (level, part)) in parts.iter().enumerate() {
                assert_eq!(*level, 2 * n as i64 - 4 * k as i64);
                assert_eq!(part.len(), binomial(n, k));
                assert!(part.psi().iter().all(|v| v.coords().iter().filter(|&&x| x == -2).count() == k));
            }
        }
    }

    #[test]
    fn subsystems() {
        let n = 5;
        let cube = validate_system(hypercube_psi(n), delta_d(n)).unwrap();
        let labels: Vec<&str> = cube.delta().labels().collect();
        for parity in [Parity::Even, Parity::Odd] {
            let half = CatalogEntry::Halfcube { n, parity }.build().unwrap();
            assert!(subsystem_check(&cube, half.psi(), &labels).unwrap());
        }
        assert!(subsystem_check(&cube, cube.psi(), &labels).unwrap());

        let hesse = CatalogEntry::Hesse.build().unwrap();
        let all: Vec<&str> = hesse.delta().labels().collect();
        assert!(!subsystem_check(&hesse, &[hesse_vertex(0, 1)], &all).unwrap());
        assert!(matches!(subsystem_check(&hesse, &[IntVector::zero(8)], &all), Err(Error::NotSubsets)));
        assert!(subsystem_check(&hesse, &[], &all).is_err());
    }

    #[test]
    fn slice_and_restrict_commute() {
        let sys = CatalogEntry::Hesse.build().unwrap();
        let spec = SliceSpec::new(hesse_normal(), 8);
        let keep = ["alpha1", "alpha2", "alpha7"];
        let a = restrict(&slice(&sys, &spec).unwrap(), &keep).unwrap();
        let b = slice(&restrict(&sys, &["alpha1", "alpha2", "alpha7", "alpha0"]).unwrap(), &spec).unwrap();
        let b = restrict(&b, &keep).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn affine_e6_root_sign() {
        let base = CatalogEntry::Schlafli { level: 8 }.build().unwrap();
        let printed = base.delta().with_root(ADJOINED_LABEL, diff(8, 7, 0, 4)).unwrap();
        let sys = validate_system(base.psi().to_vec(), printed).unwrap();
        assert!(matches!(cartan_matrix(sys.delta()), Err(Error::GcmViolation(_))));

        let fixed = CatalogEntry::SchlafliAffine { level: 8 }.build().unwrap();
        assert_eq!(classify_cartan(&cartan_matrix(fixed.delta()).unwrap()), TypeLabel::Affine(Series::E, 6));
    }

    #[test]
    fn stated_types() {
        let mut entries = vec![
            CatalogEntry::Hesse,
            CatalogEntry::Schlafli { level: -8 },
            CatalogEntry::SchlafliAffine { level: 24 },
        ];
        for n in 3..=7 {
            entries.push(CatalogEntry::Hypercube { n });
            entries.push(CatalogEntry::HypercubeSlice { n, level: 2 * n as i64 - 4 });
            entries.push(CatalogEntry::HypercubeSliceAffine { n, level: -(2 * n as i64) });
            entries.push(CatalogEntry::CrossC { n });
        }
        for n in 4..=7 {
            entries.push(CatalogEntry::Halfcube { n, parity: Parity::Odd });
            entries.push(CatalogEntry::CrossD { n });
        }
        entries.push(CatalogEntry::CrossC { n: 2 });
        for entry in entries {
            let want = entry.expected();
            let full = entry.build().unwrap();
            let fin = entry.build_finite().unwrap();
            assert_eq!(classify_cartan(&cartan_matrix(full.delta()).unwrap()), want.full_type, "{entry}");
            assert_eq!(classify_cartan(&cartan_matrix(fin.delta()).unwrap()), want.finite_type, "{entry}");
            assert_eq!(full.len(), want.dimension, "{entry}");
        }
    }
}
