//! Hesse polytope vertices as lines on Del Pezzo surfaces.
//!
//! The 56 vertices correspond to the 56 lines on a degree-2 Del Pezzo
//! surface, and the 27 vertices of the level-8 slice to the 27 lines on a
//! cubic surface. Two distinct lines meet with intersection number
//! `x = |v1 - v2|²/32 - 1`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::catalog::{hesse_psi, hesse_vertex};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::ops::{GeneratorFamily, LinearOperator};
use crate::vector::IntVector;

/// Squared distance between lines of intersection number 0.
pub const SKEW_SQ_DIST: i64 = 32;

fn hesse_set() -> &'static [IntVector] {
    static PSI: OnceLock<Vec<IntVector>> = OnceLock::new();
    PSI.get_or_init(|| {
        let mut psi = hesse_psi();
        psi.sort();
        psi
    })
}

fn on_hesse(v: &IntVector) -> bool {
    hesse_set().binary_search(v).is_ok()
}

/// `(sign, i, j)` with `v = sign · v_{i,j}`, `i < j`.
pub fn hesse_indices(v: &IntVector) -> Option<(i64, usize, usize)> {
    if !on_hesse(v) {
        return None;
    }
    let sign = if v.coords().iter().filter(|&&x| x == 3).count() == 2 { 1 } else { -1 };
    let mut idx = v.coords().iter().enumerate().filter(|(_, &x)| x * sign == 3).map(|(i, _)| i);
    Some((sign, idx.next()?, idx.next()?))
}

pub fn intersection_number(v1: &IntVector, v2: &IntVector) -> Result<i64> {
    for v in [v1, v2] {
        if !on_hesse(v) {
            return Err(Error::NotOnPolytope(v.clone()));
        }
    }
    if v1 == v2 {
        return Err(Error::EqualVertices);
    }
    let d = v1.dist_sq(v2)?;
    if d % SKEW_SQ_DIST != 0 {
        return Err(Error::NotALineDistance(d));
    }
    Ok(d / SKEW_SQ_DIST - 1)
}

/// Lines on the cubic surface: `E_i`, `F_ij`, `G_i` with `1 <= i < j <= 6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineLabel {
    E(u8),
    F(u8, u8),
    G(u8),
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineLabel::E(i) => write!(f, "E{i}"),
            LineLabel::F(i, j) => write!(f, "F{i}{j}"),
            LineLabel::G(i) => write!(f, "G{i}"),
        }
    }
}

impl Serialize for LineLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl LineLabel {
    /// `E_i ↔ v_{0,i}`, `F_ij ↔ -v_{i,j}`, `G_i ↔ v_{i,7}`.
    pub fn vertex(self) -> IntVector {
        match self {
            LineLabel::E(i) => hesse_vertex(0, i as usize),
            LineLabel::F(i, j) => -&hesse_vertex(i as usize, j as usize),
            LineLabel::G(i) => hesse_vertex(i as usize, 7),
        }
    }

    pub fn of_vertex(v: &IntVector) -> Option<LineLabel> {
        let (sign, i, j) = hesse_indices(v)?;
        match (sign, i, j) {
            (1, 0, 1..=6) => Some(LineLabel::E(j as u8)),
            (1, 1..=6, 7) => Some(LineLabel::G(i as u8)),
            (-1, 1..=6, 1..=6) => Some(LineLabel::F(i as u8, j as u8)),
            _ => None,
        }
    }
}

/// The 27 labels in the order `E_1..E_6`, `F_12..F_56`, `G_1..G_6`, each
/// with its vertex of the level-8 slice.
pub fn line_labels() -> Vec<(LineLabel, IntVector)> {
    let mut out = Vec::with_capacity(27);
    out.extend((1..=6).map(LineLabel::E));
    for i in 1..=6 {
        out.extend((i + 1..=6).map(|j| LineLabel::F(i, j)));
    }
    out.extend((1..=6).map(LineLabel::G));
    out.into_iter().map(|l| (l, l.vertex())).collect()
}

/// Pairwise intersection numbers of a set of lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceTable {
    /// Hartshorne labels for the 27-line table, coordinate tuples otherwise.
    pub lines: Vec<String>,
    #[serde(skip)]
    pub vertices: Vec<IntVector>,
    /// `(i, j, x)` for `i < j`.
    pub intersections: Vec<(usize, usize, i64)>,
}

impl IncidenceTable {
    pub fn count(&self, x: i64) -> usize {
        self.intersections.iter().filter(|t| t.2 == x).count()
    }
}

fn table(lines: Vec<String>, vertices: Vec<IntVector>) -> Result<IncidenceTable> {
    let mut intersections = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            intersections.push((i, j, intersection_number(&vertices[i], &vertices[j])?));
        }
    }
    Ok(IncidenceTable { lines, vertices, intersections })
}

/// The 27 lines of the cubic surface, labeled.
pub fn cubic_incidence() -> IncidenceTable {
    let (labels, vertices): (Vec<_>, Vec<_>) = line_labels().into_iter().unzip();
    table(labels.iter().map(ToString::to_string).collect(), vertices).expect("fixed table")
}

/// The 56 lines of the degree-2 surface, in sorted vertex order.
pub fn degree2_incidence() -> IncidenceTable {
    let vertices = hesse_set().to_vec();
    table(vertices.iter().map(ToString::to_string).collect(), vertices).expect("fixed table")
}

/// Incidence table of any set of Hesse vertices, in the given order.
pub fn incidence_of(vertices: &[IntVector]) -> Result<IncidenceTable> {
    table(vertices.iter().map(ToString::to_string).collect(), vertices.to_vec())
}

/// The halves `K_0 = {0,1,2,3}` and `K_7 = {4,5,6,7}` of the index set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Half {
    K0,
    K7,
}

impl Half {
    pub fn indices(self) -> [usize; 4] {
        match self {
            Half::K0 => [0, 1, 2, 3],
            Half::K7 => [4, 5, 6, 7],
        }
    }

    fn contains(self, i: usize) -> bool {
        self.indices().contains(&i)
    }
}

/// `±v_{i,j} ↦ ∓v_{K∖{i,j}}` when `{i,j} ⊂ K`, identity otherwise.
pub fn bifid(k: Half, v: &IntVector) -> Result<IntVector> {
    let (sign, i, j) = hesse_indices(v).ok_or_else(|| Error::NotOnPolytope(v.clone()))?;
    if !(k.contains(i) && k.contains(j)) {
        return Ok(v.clone());
    }
    let mut rest = k.indices().into_iter().filter(|&x| x != i && x != j);
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    let w = hesse_vertex(a, b);
    Ok(if sign > 0 { -&w } else { w })
}

/// [`bifid`] with the half that contains both indices, if either does.
pub fn bifid_auto(v: &IntVector) -> Result<IntVector> {
    let (_, i, _) = hesse_indices(v).ok_or_else(|| Error::NotOnPolytope(v.clone()))?;
    bifid(if Half::K0.contains(i) { Half::K0 } else { Half::K7 }, v)
}

fn supported_near_diagonal(op: &LinearOperator, psi: &[IntVector]) -> bool {
    (0..op.dim()).all(|j| {
        op.column(j).iter().all(|(i, _)| *i == j || psi[*i].dist_sq(&psi[j]).ok() == Some(SKEW_SQ_DIST))
    })
}

/// Whether every generator, and every commutator of two generators, sends
/// `b_v` into the span of `b_v` and the `b_u` with `|u - v|² = 32`.
pub fn support_check(fam: &GeneratorFamily) -> Result<bool> {
    support_check_with(fam, Execution::default())
}

pub fn support_check_with(fam: &GeneratorFamily, exec: Execution) -> Result<bool> {
    let psi = fam.system().psi();
    if !psi.iter().all(on_hesse) {
        return Err(Error::WrongSystem);
    }
    let gens: Vec<&LinearOperator> = fam.all().map(|(_, _, op)| op).collect();
    if !gens.iter().all(|op| supported_near_diagonal(op, psi)) {
        return Ok(false);
    }
    let n = gens.len();
    let ok = exec.all_range(n * n, |p| {
        let (x, y) = (gens[p / n], gens[p % n]);
        x.commutator(y).is_ok_and(|c| supported_near_diagonal(&c, psi))
    });
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CatalogEntry;
    use crate::ops::build_operators;

    #[test]
    fn intersections() {
        let v01 = hesse_vertex(0, 1);
        assert_eq!(intersection_number(&v01, &hesse_vertex(0, 2)).unwrap(), 0);
        assert_eq!(intersection_number(&v01, &-&v01).unwrap(), 2);
        assert_eq!(intersection_number(&v01, &-&hesse_vertex(2, 3)).unwrap(), 0);
        assert_eq!(intersection_number(&v01, &hesse_vertex(2, 3)).unwrap(), 1);
        assert!(matches!(intersection_number(&v01, &v01), Err(Error::EqualVertices)));
        assert!(matches!(intersection_number(&v01, &IntVector::zero(8)), Err(Error::NotOnPolytope(_))));
    }

    #[test]
    fn labels() {
        let table = line_labels();
        assert_eq!(table.len(), 27);
        assert_eq!(table[0], (LineLabel::E(1), hesse_vertex(0, 1)));
        let f23 = table.iter().find(|(l, _)| *l == LineLabel::F(2, 3)).unwrap();
        assert_eq!(f23.1, -&hesse_vertex(2, 3));
        assert_eq!(LineLabel::F(2, 3).to_string(), "F23");

        let slice = CatalogEntry::Schlafli { level: 8 }.build().unwrap();
        let mut image: Vec<IntVector> = table.iter().map(|(_, v)| v.clone()).collect();
        image.sort();
        assert_eq!(image, slice.psi());
        for (l, v) in &table {
            assert_eq!(LineLabel::of_vertex(v), Some(*l));
        }
        assert_eq!(LineLabel::of_vertex(&hesse_vertex(0, 7)), None);
    }

    #[test]
    fn cubic_surface() {
        let t = cubic_incidence();
        assert_eq!(t.intersections.len(), 27 * 26 / 2);
        assert_eq!(t.count(0) + t.count(1), t.intersections.len());
        assert_eq!(t.count(0), 216);

        let t56 = degree2_incidence();
        assert_eq!(t56.count(2), 28);
    }

    #[test]
    fn bifid_examples() {
        assert_eq!(bifid(Half::K0, &hesse_vertex(0, 1)).unwrap(), -&hesse_vertex(2, 3));
        assert_eq!(bifid(Half::K0, &hesse_vertex(0, 5)).unwrap(), hesse_vertex(0, 5));
        assert_eq!(bifid(Half::K7, &-&hesse_vertex(4, 5)).unwrap(), hesse_vertex(6, 7));
        assert!(matches!(bifid(Half::K0, &IntVector::zero(8)), Err(Error::NotOnPolytope(_))));
    }

    #[test]
    fn bifid_is_reflection_in_alpha7() {
        let sys = CatalogEntry::Hesse.build().unwrap();
        let a7 = sys.delta().position("alpha7").unwrap();
        for v in 0..sys.len() {
            let b = bifid_auto(sys.vertex(v)).unwrap();
            assert_eq!(&b, sys.vertex(sys.reflect_index(v, a7)));
        }
    }

    #[test]
    fn support() {
        let e7 = CatalogEntry::Hesse.build_finite().unwrap();
        assert!(support_check(&build_operators(&e7)).unwrap());
        let cube = CatalogEntry::Hypercube { n: 3 }.build().unwrap();
        assert!(matches!(support_check(&build_operators(&cube)), Err(Error::WrongSystem)));
    }
}
