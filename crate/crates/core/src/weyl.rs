//! Reflections and the Weyl group action on Ψ.
//!
//! The group is only ever used through its action: orbits are breadth-first
//! closures under the simple reflections.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::system::{gcd, MinusculeSystem};
use crate::vector::IntVector;

/// `s_a(v) = v - (2(v·a)/(a·a)) a`, exact for any integral `v` for which the
/// coefficient is an integer.
pub fn reflect(a: &IntVector, v: &IntVector) -> Result<IntVector> {
    let aa = a.norm_sq()?;
    if aa == 0 {
        return Err(Error::ZeroRoot);
    }
    let num = v.dot(a)?.checked_mul(2).ok_or(Error::Overflow)?;
    if num % aa != 0 {
        let g = gcd(num, aa);
        return Err(Error::NotMinusculeValue {
            vertex: v.clone(),
            root: a.clone(),
            numerator: num / g,
            denominator: aa / g,
        });
    }
    v.checked_sub(&a.checked_scale(num / aa)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit<T> {
    /// Smallest element.
    pub representative: T,
    /// Sorted ascending.
    pub elements: Vec<T>,
}

impl<T> Orbit<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl Orbit<(IntVector, IntVector)> {
    /// The common squared distance `|v1 - v2|²` of the pairs in the orbit.
    pub fn sq_dist(&self) -> i64 {
        let (a, b) = &self.representative;
        a.dist_sq(b).expect("vertices of one system")
    }
}

/// Disjoint orbits covering the item set, sorted by representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition<T> {
    pub orbits: Vec<Orbit<T>>,
}

impl<T> OrbitPartition<T> {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Orbit::len).collect()
    }
}

/// Orbit partition of `0..n` under the maps `step(x, g)` for `g < gens`.
/// Each frontier is expanded in parallel; `visited` is claimed atomically so
/// every item enters exactly one frontier.
fn index_orbits<F>(n: usize, gens: usize, step: F, exec: Execution) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> usize + Sync + Send,
{
    let visited: Vec<AtomicBool> = (0..n).map(|_| AtomicBool::new(false)).collect();
    let mut orbits = Vec::new();
    for seed in 0..n {
        if visited[seed].swap(true, Ordering::AcqRel) {
            continue;
        }
        let mut members = vec![seed];
        let mut frontier = vec![seed];
        while !frontier.is_empty() {
            let next: Vec<Vec<usize>> = exec.map(&frontier, |&x| {
                (0..gens).map(|g| step(x, g)).filter(|&y| !visited[y].swap(true, Ordering::AcqRel)).collect()
            });
            frontier = next.into_iter().flatten().collect();
            members.extend_from_slice(&frontier);
        }
        members.sort_unstable();
        orbits.push(members);
    }
    orbits
}

/// The orbit of `seed` under the group generated by `{s_a : a ∈ Δ}`, sorted.
pub fn orbit(sys: &MinusculeSystem, seed: &IntVector) -> Result<Vec<IntVector>> {
    let start = sys.index_of(seed).ok_or_else(|| Error::NotInPsi(seed.clone()))?;
    let mut seen = vec![false; sys.len()];
    seen[start] = true;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for a in 0..sys.rank() {
            let w = sys.reflect_index(v, a);
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    Ok((0..sys.len()).filter(|&i| seen[i]).map(|i| sys.vertex(i).clone()).collect())
}

pub fn vertex_orbits(sys: &MinusculeSystem) -> OrbitPartition<IntVector> {
    vertex_orbits_with(sys, Execution::default())
}

pub fn vertex_orbits_with(sys: &MinusculeSystem, exec: Execution) -> OrbitPartition<IntVector> {
    let orbits = index_orbits(sys.len(), sys.rank(), |v, a| sys.reflect_index(v, a), exec)
        .into_iter()
        .map(|members| {
            let elements: Vec<IntVector> = members.into_iter().map(|i| sys.vertex(i).clone()).collect();
            Orbit { representative: elements[0].clone(), elements }
        })
        .collect();
    OrbitPartition { orbits }
}

/// Orbits of the diagonal action on ordered pairs `Ψ × Ψ`.
pub fn orbits_on_pairs(sys: &MinusculeSystem) -> OrbitPartition<(IntVector, IntVector)> {
    orbits_on_pairs_with(sys, Execution::default())
}

pub fn orbits_on_pairs_with(
    sys: &MinusculeSystem,
    exec: Execution,
) -> OrbitPartition<(IntVector, IntVector)> {
    let n = sys.len();
    let step = |p: usize, a: usize| {
        let (i, j) = (p / n, p % n);
        sys.reflect_index(i, a) * n + sys.reflect_index(j, a)
    };
    // Psi is sorted, so index order on pairs is lexicographic order.
    let orbits = index_orbits(n * n, sys.rank(), step, exec)
        .into_iter()
        .map(|members| {
            let elements: Vec<(IntVector, IntVector)> =
                members.into_iter().map(|p| (sys.vertex(p / n).clone(), sys.vertex(p % n).clone())).collect();
            Orbit { representative: elements[0].clone(), elements }
        })
        .collect();
    OrbitPartition { orbits }
}

/// Difference vectors of the ordered vertex pairs at a fixed squared distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRootStats {
    /// Number of ordered pairs `(v1, v2)` with `|v1 - v2|² = sq_dist`.
    pub edge_count: usize,
    /// Distinct `v1 - v2`, sorted, each with the number of pairs producing it.
    pub multiplicity: Vec<(IntVector, usize)>,
}

impl EdgeRootStats {
    pub fn undirected_edge_count(&self) -> usize {
        self.edge_count / 2
    }

    pub fn distinct_roots(&self) -> Vec<IntVector> {
        self.multiplicity.iter().map(|(r, _)| r.clone()).collect()
    }

    /// The shared multiplicity, if every root occurs equally often.
    pub fn uniform_multiplicity(&self) -> Option<usize> {
        let first = self.multiplicity.first()?.1;
        self.multiplicity.iter().all(|&(_, m)| m == first).then_some(first)
    }
}

pub fn edge_root_system(sys: &MinusculeSystem, sq_dist: i64) -> EdgeRootStats {
    edge_root_system_with(sys, sq_dist, Execution::default())
}

pub fn edge_root_system_with(sys: &MinusculeSystem, sq_dist: i64, exec: Execution) -> EdgeRootStats {
    let n = sys.len();
    let rows = exec.map_range(n, |i| {
        let v = sys.vertex(i);
        (0..n)
            .filter_map(|j| {
                let w = sys.vertex(j);
                (v.dist_sq(w).ok()? == sq_dist).then(|| v.checked_sub(w).ok()).flatten()
            })
            .collect::<Vec<_>>()
    });
    let mut counts: BTreeMap<IntVector, usize> = BTreeMap::new();
    let mut edge_count = 0;
    for d in rows.into_iter().flatten() {
        edge_count += 1;
        *counts.entry(d).or_default() += 1;
    }
    EdgeRootStats { edge_count, multiplicity: counts.into_iter().collect() }
}

/// Whether `roots` is closed under negation and under `s_a` for each member `a`.
pub fn is_reflection_closed(roots: &[IntVector]) -> Result<bool> {
    let set: std::collections::BTreeSet<&IntVector> = roots.iter().collect();
    for a in roots {
        if !set.contains(&-a) {
            return Ok(false);
        }
        for b in roots {
            if !set.contains(&reflect(a, b)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{hesse_vertex, CatalogEntry};

    fn hesse() -> MinusculeSystem {
        CatalogEntry::Hesse.build().unwrap()
    }

    #[test]
    fn reflection_examples() {
        let sys = hesse();
        let a1 = sys.delta().get("alpha1").unwrap();
        let a7 = sys.delta().get("alpha7").unwrap();
        assert_eq!(reflect(a1, &hesse_vertex(0, 1)).unwrap(), hesse_vertex(0, 2));
        assert_eq!(reflect(a7, &hesse_vertex(0, 1)).unwrap(), -&hesse_vertex(2, 3));
        let a3 = sys.delta().get("alpha3").unwrap();
        assert_eq!(reflect(a3, &hesse_vertex(0, 1)).unwrap(), hesse_vertex(0, 1));
    }

    #[test]
    fn reflection_errors() {
        let v = IntVector::from([1, 0, 0]);
        assert!(matches!(reflect(&IntVector::zero(3), &v), Err(Error::ZeroRoot)));
        assert!(matches!(
            reflect(&IntVector::from([1, 1, 1]), &v),
            Err(Error::NotMinusculeValue { numerator: 2, denominator: 3, .. })
        ));
        // Integral coefficients other than ±1 are fine away from Ψ.
        assert_eq!(
            reflect(&IntVector::from([1, 0]), &IntVector::from([3, 5])).unwrap(),
            IntVector::from([-3, 5])
        );
    }

    #[test]
    fn reflection_agrees_with_tables() {
        let sys = hesse();
        for v in 0..sys.len() {
            for a in 0..sys.rank() {
                let direct = reflect(sys.delta().vector(a), sys.vertex(v)).unwrap();
                assert_eq!(&direct, sys.vertex(sys.reflect_index(v, a)));
            }
        }
    }

    #[test]
    fn hesse_is_one_orbit() {
        let sys = hesse();
        assert_eq!(orbit(&sys, &hesse_vertex(0, 1)).unwrap().len(), 56);
        assert_eq!(vertex_orbits(&sys).sizes(), [56]);
        assert!(matches!(orbit(&sys, &IntVector::zero(8)), Err(Error::NotInPsi(_))));
    }

    #[test]
    fn hypercube_orbit() {
        let sys = CatalogEntry::Hypercube { n: 3 }.build().unwrap();
        assert_eq!(orbit(&sys, &IntVector::from([2, 2, 2])).unwrap().len(), 8);
    }

    #[test]
    fn fixed_seed_is_its_own_orbit() {
        let sys = CatalogEntry::Schlafli { level: 24 }.build().unwrap();
        let seed = sys.vertex(0).clone();
        assert_eq!(orbit(&sys, &seed).unwrap(), [seed]);
    }

    #[test]
    fn pair_orbits_of_hesse() {
        let sys = hesse();
        let parts = orbits_on_pairs(&sys);
        let mut shape: Vec<(i64, usize)> = parts.orbits.iter().map(|o| (o.sq_dist(), o.len())).collect();
        shape.sort();
        assert_eq!(shape, [(0, 56), (32, 1512), (64, 1512), (96, 56)]);
        for o in &parts.orbits {
            let d = o.sq_dist();
            assert!(o.elements.iter().all(|(a, b)| a.dist_sq(b).unwrap() == d));
        }
        assert_eq!(parts, orbits_on_pairs_with(&sys, Execution::Sequential));
    }

    #[test]
    fn edge_roots_of_hesse() {
        let sys = hesse();
        let stats = edge_root_system(&sys, 32);
        assert_eq!(stats.edge_count, 1512);
        assert_eq!(stats.undirected_edge_count(), 756);
        assert_eq!(stats.multiplicity.len(), 126);
        assert_eq!(stats.uniform_multiplicity(), Some(12));
        let roots = stats.distinct_roots();
        for a in sys.delta().vectors() {
            assert!(roots.contains(a));
        }
        assert!(is_reflection_closed(&roots).unwrap());
        assert_eq!(edge_root_system(&sys, 1000).edge_count, 0);
        assert_eq!(edge_root_system(&sys, 1000).uniform_multiplicity(), None);
    }

    #[test]
    fn closure_detects_missing_roots() {
        let roots = vec![IntVector::from([1, 0]), IntVector::from([-1, 0]), IntVector::from([0, 1])];
        assert!(!is_reflection_closed(&roots).unwrap());
    }
}
