//! Exhaustive generation of sphere triangulations by vertex splitting.
//!
//! Every simple sphere triangulation of order above 4 has a contractible
//! edge, and contracting it yields a smaller simple sphere triangulation;
//! K4 is the only irreducible one. Running the inverse move, vertex
//! splitting, level by level from K4 and deduplicating each level by
//! canonical code therefore reaches every triangulation of each order
//! exactly once per flip-isomorphism class.
//!
//! Splitting vertex `v` along the ordered neighbor pair `(a, b)` keeps the
//! rotation arc `a..b` at `v`, moves the complementary arc `b..a` to the
//! new vertex, joins them with the edge `v v'`, and leaves `a` and `b`
//! adjacent to both. Degenerate arcs reduce to inserting a degree-3 vertex
//! into a face.

use crate::embedding::{CanonicalCode, Embedding};
use rayon::prelude::*;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("input is not a sphere triangulation")]
    NotSphereTriangulation,
    #[error("order {0} out of the supported range 4..=14")]
    OrderOutOfRange(usize),
}

/// The K4 sphere embedding that seeds generation.
pub fn k4_sphere() -> Embedding {
    Embedding::from_rotations(vec![
        vec![1, 2, 3],
        vec![0, 3, 2],
        vec![0, 1, 3],
        vec![0, 2, 1],
    ])
    .expect("valid K4 rotation")
}

/// All simple sphere triangulations of order `n+1` obtained by splitting
/// one vertex of `e`, with duplicates included.
pub fn expand(e: &Embedding) -> Result<Vec<Embedding>, GenError> {
    if e.genus() != Ok(0) || !e.is_triangulation() {
        return Err(GenError::NotSphereTriangulation);
    }
    let n = e.order();
    let fresh = n;
    let mut out = Vec::new();
    for v in 0..n {
        let rot = e.rotation(v);
        let d = rot.len();
        for i in 0..d {
            for step in 1..d {
                let j = (i + step) % d;
                let a = rot[i];
                let b = rot[j];
                let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n + 1);
                for x in 0..n {
                    if x == v {
                        // Kept arc a..b plus the fresh vertex.
                        let mut row = Vec::with_capacity(step + 2);
                        let mut k = i;
                        loop {
                            row.push(rot[k]);
                            if k == j {
                                break;
                            }
                            k = (k + 1) % d;
                        }
                        row.push(fresh);
                        rotation.push(row);
                    } else if x == a {
                        // Fresh vertex right after v.
                        let old = e.rotation(x);
                        let mut row = Vec::with_capacity(old.len() + 1);
                        for &y in old {
                            row.push(y);
                            if y == v {
                                row.push(fresh);
                            }
                        }
                        rotation.push(row);
                    } else if x == b {
                        // Fresh vertex right before v.
                        let old = e.rotation(x);
                        let mut row = Vec::with_capacity(old.len() + 1);
                        for &y in old {
                            if y == v {
                                row.push(fresh);
                            }
                            row.push(y);
                        }
                        rotation.push(row);
                    } else {
                        let mut row = e.rotation(x).to_vec();
                        if in_open_arc(rot, j, i, x) {
                            for y in row.iter_mut() {
                                if *y == v {
                                    *y = fresh;
                                }
                            }
                        }
                        rotation.push(row);
                    }
                }
                // Complementary arc b..a plus v.
                let mut row = Vec::with_capacity(d - step + 2);
                let mut k = j;
                loop {
                    row.push(rot[k]);
                    if k == i {
                        break;
                    }
                    k = (k + 1) % d;
                }
                row.push(v);
                rotation.push(row);
                out.push(
                    Embedding::from_rotations(rotation).expect("split yields a valid embedding"),
                );
            }
        }
    }
    Ok(out)
}

/// Is `x` strictly inside the cyclic arc from index `from` to index `to`?
fn in_open_arc(rot: &[usize], from: usize, to: usize, x: usize) -> bool {
    let d = rot.len();
    let mut k = (from + 1) % d;
    while k != to {
        if rot[k] == x {
            return true;
        }
        k = (k + 1) % d;
    }
    false
}

/// All sphere triangulations of one order, pairwise inequivalent under
/// flip-isomorphism and sorted by canonical code.
#[derive(Clone, Debug)]
pub struct GenerationLevel {
    pub order: usize,
    pub embeddings: Vec<Embedding>,
}

/// Generates every sphere triangulation of order `n` (up to
/// flip-isomorphism) by iterating [`expand`] from K4 and deduplicating each
/// level by canonical code. Output order is fixed by the codes, so indices
/// are stable across runs and machines.
pub fn generate(n: usize) -> Result<GenerationLevel, GenError> {
    if !(4..=14).contains(&n) {
        return Err(GenError::OrderOutOfRange(n));
    }
    let mut level = vec![k4_sphere()];
    for _ in 4..n {
        let codes: BTreeSet<CanonicalCode> = level
            .par_iter()
            .map(|parent| {
                expand(parent)
                    .expect("level members are sphere triangulations")
                    .into_iter()
                    .map(|child| child.canonical_code().expect("triangulations are connected"))
                    .collect::<BTreeSet<_>>()
            })
            .reduce(BTreeSet::new, |mut acc, set| {
                acc.extend(set);
                acc
            });
        // Each class is represented by the decoded canonical form itself.
        level = codes.iter().map(|code| code.to_embedding()).collect();
    }
    Ok(GenerationLevel { order: n, embeddings: level })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_splits_into_one_class_of_order_five() {
        let children = expand(&k4_sphere()).unwrap();
        // Four vertices of degree 3, d(d-1) = 6 ordered pairs each.
        assert_eq!(children.len(), 24);
        let codes: BTreeSet<_> =
            children.iter().map(|c| c.canonical_code().unwrap()).collect();
        assert_eq!(codes.len(), 1, "all splits of K4 are equivalent");
        for child in &children {
            assert_eq!(child.order(), 5);
            assert_eq!(child.size(), 9);
            assert_eq!(child.genus().unwrap(), 0);
            assert!(child.is_triangulation());
        }
    }

    #[test]
    fn order_six_has_exactly_the_two_known_classes() {
        let level = generate(6).unwrap();
        assert_eq!(level.embeddings.len(), 2);
        let mut seqs: Vec<Vec<usize>> = level
            .embeddings
            .iter()
            .map(|e| e.graph().degree_sequence().degrees().to_vec())
            .collect();
        seqs.sort();
        // The octahedron and the join of K2 with P4.
        assert_eq!(seqs, vec![vec![4, 4, 4, 4, 4, 4], vec![5, 5, 4, 4, 3, 3]]);
    }

    #[test]
    fn small_level_counts() {
        for (n, expected) in [(4, 1), (5, 1), (6, 2), (7, 5), (8, 14)] {
            assert_eq!(generate(n).unwrap().embeddings.len(), expected, "order {n}");
        }
    }

    #[test]
    fn levels_satisfy_triangulation_invariants() {
        let level = generate(7).unwrap();
        let mut codes = BTreeSet::new();
        for e in &level.embeddings {
            assert_eq!(e.order(), 7);
            assert_eq!(e.size(), 3 * 7 - 6);
            assert_eq!(e.genus().unwrap(), 0);
            assert_eq!(e.trace_faces().face_count(), 2 * 7 - 4);
            assert!(e.is_triangulation());
            assert!(e.graph().degree_sequence().min() >= 3);
            assert!(codes.insert(e.canonical_code().unwrap()));
        }
    }

    #[test]
    fn expand_rejects_non_triangulations() {
        let c4 = Embedding::from_rotations(vec![
            vec![1, 3],
            vec![0, 2],
            vec![1, 3],
            vec![2, 0],
        ])
        .unwrap();
        assert_eq!(expand(&c4).unwrap_err(), GenError::NotSphereTriangulation);
    }

    #[test]
    fn generate_rejects_out_of_range_orders() {
        assert_eq!(generate(3).unwrap_err(), GenError::OrderOutOfRange(3));
        assert_eq!(generate(15).unwrap_err(), GenError::OrderOutOfRange(15));
    }

    #[test]
    fn generated_graphs_match_the_brute_force_catalog_for_order_six() {
        let generated = generate(6).unwrap();
        let oracle = crate::oracle::triangulation_graph_classes(6);
        assert_eq!(generated.embeddings.len(), oracle.len());
        for e in &generated.embeddings {
            assert!(oracle.iter().any(|g| crate::oracle::are_isomorphic(g, e.graph())));
        }
    }
}
