use std::collections::{BTreeSet, VecDeque};

use mforge::analysis::{crystal_graph, extreme_vectors, weight, weight_poset};
use mforge::catalog::{hesse_normal, partition_by_slices, restrict, slice, CatalogEntry, Parity, SliceSpec};
use mforge::geometry::{incidence_of, intersection_number};
use mforge::ops::{build_operators, check_lemma_3_1_with, check_presentation_with};
use mforge::weyl::{orbits_on_pairs_with, reflect, vertex_orbits_with};
use mforge::{cartan_matrix, validate_system, Execution, IntVector, MinusculeSystem};
use proptest::prelude::*;

fn small_entry() -> impl Strategy<Value = CatalogEntry> {
    prop_oneof![
        Just(CatalogEntry::Hesse),
        prop::sample::select(vec![24i64, 8, -8, -24]).prop_map(|level| CatalogEntry::Schlafli { level }),
        prop::sample::select(vec![24i64, 8, -8, -24])
            .prop_map(|level| CatalogEntry::SchlafliAffine { level }),
        (3usize..=6).prop_map(|n| CatalogEntry::Hypercube { n }),
        (3usize..=6, 0usize..=6)
            .prop_map(|(n, k)| CatalogEntry::HypercubeSlice { n, level: 2 * n as i64 - 4 * k.min(n) as i64 }),
        (3usize..=6, 0usize..=6).prop_map(|(n, k)| CatalogEntry::HypercubeSliceAffine {
            n,
            level: 2 * n as i64 - 4 * k.min(n) as i64
        }),
        (4usize..=6, any::<bool>()).prop_map(|(n, odd)| CatalogEntry::Halfcube {
            n,
            parity: if odd { Parity::Odd } else { Parity::Even }
        }),
        (4usize..=7).prop_map(|n| CatalogEntry::CrossD { n }),
        (2usize..=7).prop_map(|n| CatalogEntry::CrossC { n }),
    ]
}

/// Either the full system or its finite-type restriction.
fn system() -> impl Strategy<Value = (CatalogEntry, MinusculeSystem)> {
    (small_entry(), any::<bool>()).prop_map(|(entry, fin)| {
        let sys = if fin { entry.build_finite() } else { entry.build() };
        (entry, sys.unwrap())
    })
}

fn hesse() -> MinusculeSystem {
    CatalogEntry::Hesse.build().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn catalog_entries_validate((_, sys) in system()) {
        let again = validate_system(sys.psi().to_vec(), sys.delta().clone()).unwrap();
        prop_assert_eq!(again, sys);
    }

    #[test]
    fn cartan_matrices_are_symmetrizable((_, sys) in system()) {
        let a = cartan_matrix(sys.delta()).unwrap();
        prop_assert!(a.is_symmetrized());
    }

    #[test]
    fn reflections_are_isometric_involutions((_, sys) in system(), a in any::<prop::sample::Index>()) {
        let a = a.index(sys.rank());
        let root = sys.delta().vector(a);
        let image: Vec<IntVector> = sys.psi().iter().map(|v| reflect(root, v).unwrap()).collect();
        for (i, v) in sys.psi().iter().enumerate() {
            prop_assert!(sys.contains(&image[i]));
            prop_assert_eq!(&reflect(root, &image[i]).unwrap(), v);
            let c = sys.c(i, a).value();
            prop_assert_eq!(&image[i], &(v - &root.checked_scale(c).unwrap()));
        }
        for i in 0..sys.len() {
            for j in 0..sys.len() {
                prop_assert_eq!(
                    sys.vertex(i).dot(sys.vertex(j)).unwrap(),
                    image[i].dot(&image[j]).unwrap()
                );
            }
        }
    }

    #[test]
    fn crystal_edges_are_simple_root_steps((_, sys) in system()) {
        let g = crystal_graph(&sys);
        for e in &g.edges {
            prop_assert_eq!(&(&e.target - &e.source), sys.delta().get(&e.label).unwrap());
        }
        let mut brute = 0;
        for v in sys.psi() {
            for a in sys.delta().vectors() {
                if sys.contains(&(v + a)) {
                    brute += 1;
                }
            }
        }
        prop_assert_eq!(g.edges.len(), brute);
        prop_assert!(g.parallel_iff_same_label());
    }

    #[test]
    fn finite_modules_have_one_top_and_bottom(entry in small_entry()) {
        let sys = entry.build_finite().unwrap();
        let ext = extreme_vectors(&sys);
        prop_assert_eq!(ext.highest.len(), 1);
        prop_assert_eq!(ext.lowest.len(), 1);
        let weights: BTreeSet<Vec<i64>> =
            sys.psi().iter().map(|v| weight(&sys, v).unwrap().values).collect();
        prop_assert_eq!(weights.len(), sys.len());
    }

    #[test]
    fn poset_order_is_raising_reachability(entry in small_entry()) {
        let sys = entry.build_finite().unwrap();
        let p = weight_poset(&sys).unwrap();
        let n = sys.len();
        for start in 0..n {
            let mut seen = vec![false; n];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for a in 0..sys.rank() {
                    if let Some(w) = sys.raise(v, a) {
                        if !seen[w] {
                            seen[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
            prop_assert_eq!(&p.leq[start], &seen);
        }
    }

    #[test]
    fn execution_modes_agree((_, sys) in system()) {
        let fam = build_operators(&sys);
        let cartan = cartan_matrix(sys.delta()).unwrap();
        prop_assert_eq!(
            check_lemma_3_1_with(&fam, Execution::Sequential),
            check_lemma_3_1_with(&fam, Execution::Parallel)
        );
        prop_assert_eq!(
            check_presentation_with(&fam, &cartan, Execution::Sequential).unwrap(),
            check_presentation_with(&fam, &cartan, Execution::Parallel).unwrap()
        );
        prop_assert_eq!(
            vertex_orbits_with(&sys, Execution::Sequential),
            vertex_orbits_with(&sys, Execution::Parallel)
        );
    }

    #[test]
    fn slices_partition_psi((_, sys) in system(), normal in prop::collection::vec(-2i64..=2, 8)) {
        let normal = IntVector::from(normal[..sys.dim()].to_vec());
        let mut seen = BTreeSet::new();
        let mut levels = Vec::new();
        let mut total = 0;
        // A part whose level has no orthogonal simple root is not a system.
        if let Ok(parts) = partition_by_slices(&sys, &normal) {
            for (level, part) in parts {
                levels.push(level);
                total += part.len();
                for v in part.psi() {
                    prop_assert_eq!(v.dot(&normal).unwrap(), level);
                    prop_assert!(seen.insert(v.clone()));
                }
            }
            prop_assert_eq!(total, sys.len());
            prop_assert!(levels.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn intersections_are_symmetric_and_invariant(
        i in 0usize..56, j in 0usize..56, a in 0usize..8,
    ) {
        prop_assume!(i != j);
        let sys = hesse();
        let (u, w) = (sys.vertex(i), sys.vertex(j));
        let x = intersection_number(u, w).unwrap();
        prop_assert_eq!(x, intersection_number(w, u).unwrap());
        let (su, sw) = (sys.vertex(sys.reflect_index(i, a)), sys.vertex(sys.reflect_index(j, a)));
        prop_assert_eq!(x, intersection_number(su, sw).unwrap());
    }

    #[test]
    fn slice_and_restrict_commute(mask in 1u8..=255, level in prop::sample::select(vec![24i64, 8, -8, -24])) {
        let sys = hesse();
        let spec = SliceSpec::new(hesse_normal(), level);
        let sliced = slice(&sys, &spec).unwrap();
        let keep: Vec<&str> = sys
            .delta()
            .labels()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, l)| l)
            .collect();
        let keep_in_slice: Vec<&str> =
            keep.iter().copied().filter(|l| sliced.delta().position(l).is_some()).collect();
        prop_assume!(!keep_in_slice.is_empty());
        let a = restrict(&sliced, &keep_in_slice).unwrap();
        let b = restrict(&slice(&restrict(&sys, &keep).unwrap(), &spec).unwrap(), &keep_in_slice).unwrap();
        prop_assert_eq!(a.psi(), b.psi());
        prop_assert_eq!(a.delta(), b.delta());
    }
}

#[test]
fn opposite_slices_are_negatives() {
    let sys = hesse();
    let up = slice(&sys, &SliceSpec::new(hesse_normal(), 8)).unwrap();
    let down = slice(&sys, &SliceSpec::new(hesse_normal(), -8)).unwrap();
    for v in up.psi() {
        assert!(down.contains(&-v));
    }
    assert_eq!(up.len(), down.len());

    let ti = incidence_of(up.psi()).unwrap();
    let neg: Vec<IntVector> = up.psi().iter().map(|v| -v).collect();
    let tn = incidence_of(&neg).unwrap();
    assert_eq!(ti.intersections, tn.intersections);
}

#[test]
fn pair_orbits_are_distance_classes() {
    let sys = hesse();
    let parts = orbits_on_pairs_with(&sys, Execution::Sequential);
    assert_eq!(parts, orbits_on_pairs_with(&sys, Execution::Parallel));
    let dists: Vec<i64> = parts.orbits.iter().map(|o| o.sq_dist()).collect();
    let distinct: BTreeSet<i64> = dists.iter().copied().collect();
    assert_eq!(distinct.len(), dists.len());
    for o in &parts.orbits {
        let d = o.sq_dist();
        let class = sys
            .psi()
            .iter()
            .flat_map(|a| sys.psi().iter().map(move |b| (a, b)))
            .filter(|(a, b)| a.dist_sq(b).unwrap() == d)
            .count();
        assert_eq!(class, o.len());
    }
    let sizes: BTreeSet<(i64, usize)> = parts.orbits.iter().map(|o| (o.sq_dist(), o.len())).collect();
    assert!(sizes.contains(&(0, 56)) && sizes.contains(&(96, 56)));
}

#[test]
fn e7_crystal_edge_count() {
    // Independent count: each simple root a contributes one edge per vertex
    // v with v + a again a vertex.
    let sys = CatalogEntry::Hesse.build_finite().unwrap();
    let psi: BTreeSet<&IntVector> = sys.psi().iter().collect();
    let mut per_root = Vec::new();
    for a in sys.delta().vectors() {
        per_root.push(sys.psi().iter().filter(|v| psi.contains(&(*v + a))).count());
    }
    assert!(per_root.iter().all(|&m| m == 12));
    let g = crystal_graph(&sys);
    assert_eq!(g.edges.len(), per_root.iter().sum::<usize>());
    assert_eq!(g.edges.len(), 84);
    assert!(g.is_connected());
}
