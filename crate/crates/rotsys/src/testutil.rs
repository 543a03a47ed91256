//! Shared helpers for the unit tests.

use crate::graph::Graph;

/// Stacked triangulation of the given order: repeatedly insert a degree-3
/// vertex into the first face of the current face list, starting from K4.
/// Returns the graph and the parent triangle of every inserted vertex.
pub fn apollonian(order: usize) -> (Graph, Vec<[usize; 3]>) {
    assert!(order >= 4);
    let mut g = Graph::complete(4);
    let mut faces = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut parents = Vec::new();
    for k in 4..order {
        let mut bigger = Graph::new(k + 1).unwrap();
        for (u, v) in g.edges() {
            bigger.add_edge(u, v);
        }
        let [a, b, c] = faces.remove(0);
        bigger.add_edge(k, a);
        bigger.add_edge(k, b);
        bigger.add_edge(k, c);
        faces.push([a, b, k]);
        faces.push([a, c, k]);
        faces.push([b, c, k]);
        parents.push([a, b, c]);
        g = bigger;
    }
    (g, parents)
}

/// Glues `g2` onto `g1` along the given triangles (graph union after
/// relabeling `tri2` onto `tri1`); the rest of `g2` gets fresh labels.
pub fn paste_on_triangle(g1: &Graph, tri1: [usize; 3], g2: &Graph, tri2: [usize; 3]) -> Graph {
    for i in 0..3 {
        assert!(g1.has_edge(tri1[i], tri1[(i + 1) % 3]));
        assert!(g2.has_edge(tri2[i], tri2[(i + 1) % 3]));
    }
    let order = g1.order() + g2.order() - 3;
    let mut relabel = vec![usize::MAX; g2.order()];
    for i in 0..3 {
        relabel[tri2[i]] = tri1[i];
    }
    let mut next = g1.order();
    for v in 0..g2.order() {
        if relabel[v] == usize::MAX {
            relabel[v] = next;
            next += 1;
        }
    }
    let mut g = Graph::new(order).unwrap();
    for (u, v) in g1.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.add_edge(relabel[u], relabel[v]);
    }
    g
}
