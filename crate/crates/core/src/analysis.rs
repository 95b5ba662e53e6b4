//! Weights, extreme vectors, irreducibility certificates, the crystal graph
//! and the weight poset of a minuscule system.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::cartan::{cartan_matrix, classify_cartan};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{inverse, mat_vec, q, Matrix};
use crate::system::MinusculeSystem;
use crate::vector::IntVector;

/// The tuple `(c(v, a))_{a ∈ Δ}`, in Δ order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Weight {
    pub labels: Vec<String>,
    pub values: Vec<i64>,
}

impl Weight {
    pub fn get(&self, label: &str) -> Option<i64> {
        self.labels.iter().position(|l| l == label).map(|i| self.values[i])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0)
    }

    /// The label `a` if this is the fundamental weight pattern: 1 at `a`, 0
    /// elsewhere.
    pub fn fundamental(&self) -> Option<&str> {
        let mut ones = self.values.iter().enumerate().filter(|(_, &x)| x != 0);
        match (ones.next(), ones.next()) {
            (Some((i, 1)), None) => Some(&self.labels[i]),
            _ => None,
        }
    }
}

fn weight_at(sys: &MinusculeSystem, v: usize) -> Weight {
    Weight {
        labels: sys.delta().labels().map(str::to_owned).collect(),
        values: (0..sys.rank()).map(|a| sys.c(v, a).value()).collect(),
    }
}

pub fn weight(sys: &MinusculeSystem, v: &IntVector) -> Result<Weight> {
    let i = sys.index_of(v).ok_or_else(|| Error::NotInPsi(v.clone()))?;
    Ok(weight_at(sys, i))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremes {
    /// Vertices with no `v + a` in Ψ.
    pub highest: Vec<IntVector>,
    /// Vertices with no `v - a` in Ψ.
    pub lowest: Vec<IntVector>,
}

fn highest_indices(sys: &MinusculeSystem) -> Vec<usize> {
    (0..sys.len()).filter(|&v| (0..sys.rank()).all(|a| sys.raise(v, a).is_none())).collect()
}

pub fn extreme_vectors(sys: &MinusculeSystem) -> Extremes {
    let lowest = (0..sys.len())
        .filter(|&v| (0..sys.rank()).all(|a| sys.lower(v, a).is_none()))
        .map(|v| sys.vertex(v).clone())
        .collect();
    Extremes { highest: highest_indices(sys).into_iter().map(|v| sys.vertex(v).clone()).collect(), lowest }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InconclusiveReason {
    /// One vertex of weight zero.
    TrivialModule,
    NoUniqueHighest,
    RepeatedWeights,
    Disconnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "snake_case")]
pub enum Verdict {
    Irreducible,
    Inconclusive(InconclusiveReason),
}

/// Sufficient test for irreducibility: a unique highest vertex, pairwise
/// distinct weights and a connected `v ~ v ± a` graph. With distinct weights
/// every submodule is spanned by basis vectors, and connectivity then forces
/// it to be everything. `Inconclusive` never asserts reducibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibilityCertificate {
    pub highest_weight_vertices: Vec<IntVector>,
    pub highest_weight: Option<Weight>,
    pub weights_distinct: bool,
    pub graph_connected: bool,
    #[serde(flatten)]
    pub verdict: Verdict,
}

pub fn irreducibility_certificate(sys: &MinusculeSystem) -> Result<IrreducibilityCertificate> {
    let ty = classify_cartan(&cartan_matrix(sys.delta())?);
    if !ty.is_finite() {
        return Err(Error::NotFiniteType(ty.to_string()));
    }
    let highest = highest_indices(sys);
    let weights: Vec<Weight> = (0..sys.len()).map(|v| weight_at(sys, v)).collect();
    let mut sorted: Vec<&Vec<i64>> = weights.iter().map(|w| &w.values).collect();
    sorted.sort();
    sorted.dedup();
    let weights_distinct = sorted.len() == weights.len();
    let graph_connected = crystal_graph(sys).is_connected();

    let verdict = if sys.len() == 1 && weights[0].is_zero() {
        Verdict::Inconclusive(InconclusiveReason::TrivialModule)
    } else if highest.len() != 1 {
        Verdict::Inconclusive(InconclusiveReason::NoUniqueHighest)
    } else if !weights_distinct {
        Verdict::Inconclusive(InconclusiveReason::RepeatedWeights)
    } else if !graph_connected {
        Verdict::Inconclusive(InconclusiveReason::Disconnected)
    } else {
        Verdict::Irreducible
    };
    Ok(IrreducibilityCertificate {
        highest_weight: (highest.len() == 1).then(|| weights[highest[0]].clone()),
        highest_weight_vertices: highest.iter().map(|&v| sys.vertex(v).clone()).collect(),
        weights_distinct,
        graph_connected,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrystalEdge {
    pub source: IntVector,
    pub target: IntVector,
    pub label: String,
}

/// Edge `v → v + a` labeled `a` whenever `v + a ∈ Ψ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrystalGraph {
    pub vertices: Vec<IntVector>,
    /// Sorted by source, then by Δ order of the label.
    pub edges: Vec<CrystalEdge>,
}

pub fn crystal_graph(sys: &MinusculeSystem) -> CrystalGraph {
    let mut edges = Vec::new();
    for v in 0..sys.len() {
        for a in 0..sys.rank() {
            if let Some(w) = sys.raise(v, a) {
                edges.push(CrystalEdge {
                    source: sys.vertex(v).clone(),
                    target: sys.vertex(w).clone(),
                    label: sys.delta().label(a).to_owned(),
                });
            }
        }
    }
    CrystalGraph { vertices: sys.psi().to_vec(), edges }
}

impl CrystalGraph {
    fn index(&self, v: &IntVector) -> usize {
        self.vertices.binary_search(v).expect("edge endpoint is a vertex")
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut components = n;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, self.index(&e.source)), find(&mut parent, self.index(&e.target)));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components <= 1
    }

    /// Whether two edges have equal difference vectors exactly when they
    /// carry the same label, over all pairs of edges.
    pub fn parallel_iff_same_label(&self) -> bool {
        let diffs: Vec<IntVector> = self.edges.iter().map(|e| &e.target - &e.source).collect();
        (0..self.edges.len()).all(|i| {
            (i + 1..self.edges.len())
                .all(|j| (diffs[i] == diffs[j]) == (self.edges[i].label == self.edges[j].label))
        })
    }

    /// Graphviz form: nodes named by coordinate tuple, `label` attribute on
    /// every edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", e.source, e.target, e.label);
        }
        out.push_str("}\n");
        out
    }
}

/// `v1 <= v2` iff `v2 - v1` is a nonnegative combination of Δ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPoset {
    pub vertices: Vec<IntVector>,
    /// `leq[i][j]` iff `vertices[i] <= vertices[j]`.
    pub leq: Vec<Vec<bool>>,
    pub meet: Vec<Vec<Option<usize>>>,
    pub join: Vec<Vec<Option<usize>>>,
    pub is_lattice: bool,
    pub is_distributive: bool,
}

impl WeightPoset {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The unique maximal element, if there is one.
    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&m| (0..self.len()).all(|x| self.leq[x][m]))
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&m| (0..self.len()).all(|x| self.leq[m][x]))
    }

    pub fn cover_count(&self) -> usize {
        let n = self.len();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| {
                x != y
                    && self.leq[x][y]
                    && !(0..n).any(|z| z != x && z != y && self.leq[x][z] && self.leq[z][y])
            })
            .count()
    }
}

/// Greatest candidate (least if `upward`), found as the unique element of
/// extreme height that dominates every other candidate.
fn bound<F>(n: usize, height: &[BigRational], leq: &[Vec<bool>], candidate: F, upward: bool) -> Option<usize>
where
    F: Fn(usize) -> bool,
{
    let cands: Vec<usize> = (0..n).filter(|&z| candidate(z)).collect();
    let best = if upward {
        cands.iter().copied().min_by(|&a, &b| height[a].cmp(&height[b]))?
    } else {
        cands.iter().copied().max_by(|&a, &b| height[a].cmp(&height[b]))?
    };
    let dominates = cands.iter().all(|&z| if upward { leq[best][z] } else { leq[z][best] });
    dominates.then_some(best)
}

pub fn weight_poset(sys: &MinusculeSystem) -> Result<WeightPoset> {
    weight_poset_with(sys, Execution::default())
}

pub fn weight_poset_with(sys: &MinusculeSystem, exec: Execution) -> Result<WeightPoset> {
    let r = sys.rank();
    let roots: Vec<&IntVector> = sys.delta().vectors().collect();
    let mut gram: Matrix = vec![vec![q(0); r]; r];
    for i in 0..r {
        for j in 0..r {
            gram[i][j] = q(roots[i].dot(roots[j])?);
        }
    }
    let ginv = inverse(&gram).ok_or(Error::DependentSimpleSystem)?;

    // Coordinates in Δ of the projection onto span(Δ), and the residual.
    let n = sys.len();
    let mut coords = Vec::with_capacity(n);
    let mut residual = Vec::with_capacity(n);
    for v in sys.psi() {
        let rhs = roots.iter().map(|a| Ok(q(a.dot(v)?))).collect::<Result<Vec<_>>>()?;
        let mu = mat_vec(&ginv, &rhs);
        let res: Vec<BigRational> = (0..sys.dim())
            .map(|k| {
                let proj: BigRational = mu.iter().zip(&roots).map(|(m, a)| m * q(a[k])).sum();
                q(v[k]) - proj
            })
            .collect();
        coords.push(mu);
        residual.push(res);
    }
    let height: Vec<BigRational> = coords.iter().map(|mu| mu.iter().sum()).collect();

    let leq: Vec<Vec<bool>> = exec.map_range(n, |i| {
        (0..n)
            .map(|j| {
                residual[i] == residual[j]
                    && coords[j].iter().zip(&coords[i]).all(|(b, a)| !(b - a).is_negative())
            })
            .collect()
    });

    let meet: Vec<Vec<Option<usize>>> = exec.map_range(n, |x| {
        (0..n).map(|y| bound(n, &height, &leq, |z| leq[z][x] && leq[z][y], false)).collect()
    });
    let join: Vec<Vec<Option<usize>>> = exec.map_range(n, |x| {
        (0..n).map(|y| bound(n, &height, &leq, |z| leq[x][z] && leq[y][z], true)).collect()
    });
    let is_lattice = meet.iter().chain(&join).all(|row| row.iter().all(Option::is_some));
    let is_distributive = is_lattice
        && exec.all_range(n, |x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let lhs = meet[x][join[y][z].unwrap()];
                    let rhs = join[meet[x][y].unwrap()][meet[x][z].unwrap()];
                    lhs == rhs
                })
            })
        });
    Ok(WeightPoset { vertices: sys.psi().to_vec(), leq, meet, join, is_lattice, is_distributive })
}
