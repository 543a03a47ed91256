//! Simple undirected graphs of order at most 64 and the pure counting
//! operations on them: complement, degree sequences, triangle counts,
//! Goodman's identity, and separating-set detection.
//!
//! Vertices are labeled `0..n-1` and each adjacency row is a single `u64`
//! bitmask, so adjacency tests and triple scans are constant-time word ops.

use thiserror::Error;

/// Largest supported vertex count; adjacency rows fit in one machine word.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {0} out of range 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("loop edge ({0}, {0}) is not allowed")]
    LoopEdge(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("degree sequence is inconsistent with n={n}, m={m}: {reason}")]
    InconsistentDegrees { n: usize, m: usize, reason: String },
}

/// Simple undirected graph: no loops, symmetric adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.order, self.size(), self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Result<Self, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(order));
        }
        Ok(Graph { order, adj: vec![0; order] })
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(order)?;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if u >= order || v >= order {
                return Err(GraphError::VertexOutOfRange(u, v, order));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.order && v < self.order);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Neighbor bitmask of `v`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// All edges as pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            for v in BitIter(self.adj[u] & !((1u64 << u) | (1u64 << u).wrapping_sub(1))) {
                out.push((u, v));
            }
        }
        out
    }

    /// Copy with the given edges removed.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in removed {
            g.remove_edge(u, v);
        }
        g
    }

    /// Edge-complement: `{u,v}` present iff `u != v` and absent here.
    pub fn complement(&self) -> Graph {
        let full = mask_below(self.order);
        let adj = (0..self.order).map(|v| full & !self.adj[v] & !(1 << v)).collect();
        Graph { order: self.order, adj }
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_graph(self)
    }

    /// Exact triangle count by full triple scan.
    pub fn count_triangles(&self) -> usize {
        let mut count = 0;
        for u in 0..self.order {
            for v in u + 1..self.order {
                if self.has_edge(u, v) {
                    let common = self.adj[u] & self.adj[v] & !mask_below(v + 1);
                    count += common.count_ones() as usize;
                }
            }
        }
        count
    }

    /// True iff no edge joins two vertices of `s`.
    ///
    /// `s` must list vertices of the graph; repetitions are ignored.
    pub fn is_independent_set(&self, s: &[usize]) -> bool {
        let mut mask = 0u64;
        for &v in s {
            assert!(v < self.order, "vertex {v} out of range");
            mask |= 1 << v;
        }
        BitIter(mask).all(|v| self.adj[v] & mask == 0)
    }

    pub fn is_connected(&self) -> bool {
        self.component_orders_excluding(0).len() <= 1
    }

    /// True iff the graph is 2-colorable.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None::<bool>; self.order];
        for start in 0..self.order {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let cv = color[v].unwrap();
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            stack.push(w);
                        }
                        Some(cw) if cw == cv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Orders of the connected components of the graph minus the vertices in
    /// `deleted`, sorted ascending.
    pub fn component_orders_excluding(&self, deleted: u64) -> Vec<usize> {
        let mut remaining = mask_below(self.order) & !deleted;
        let mut orders = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u64;
                for v in BitIter(frontier) {
                    next |= self.adj[v] & remaining & !seen;
                }
                seen |= next;
                frontier = next;
            }
            orders.push(seen.count_ones() as usize);
            remaining &= !seen;
        }
        orders.sort_unstable();
        orders
    }

    // --- named constructions used throughout the test and search pipelines ---

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).expect("order in range");
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::new(n).expect("order in range");
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n).expect("order in range");
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b).expect("order in range");
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Hub joined to a rim cycle of `rim` vertices.
    pub fn wheel(rim: usize) -> Graph {
        assert!(rim >= 3);
        let mut g = Graph::new(rim + 1).expect("order in range");
        for v in 0..rim {
            g.add_edge(rim, v);
            g.add_edge(v, (v + 1) % rim);
        }
        g
    }

    /// The octahedron `K_{2,2,2}`: parts `{0,3}`, `{1,4}`, `{2,5}`.
    pub fn octahedron() -> Graph {
        let mut g = Graph::new(6).expect("order in range");
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 3 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// The cube graph Q3.
    pub fn cube() -> Graph {
        let mut g = Graph::new(8).expect("order in range");
        for u in 0..8usize {
            for b in 0..3 {
                let v = u ^ (1 << b);
                if u < v {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Icosahedron as poles 0 and 11 over two pentagonal rings 1..=5, 6..=10.
    pub fn icosahedron() -> Graph {
        let mut edges = Vec::with_capacity(30);
        for k in 1..=5usize {
            let next = k % 5 + 1;
            edges.push((0, k));
            edges.push((k, next));
            edges.push((k, 5 + k));
            edges.push((k, 5 + next));
            edges.push((5 + k, 5 + next));
            edges.push((11, 5 + k));
        }
        Graph::from_edges(12, &edges).expect("valid construction")
    }
}

fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Vertex degrees stored sorted descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn from_graph(g: &Graph) -> Self {
        let mut degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    pub fn from_degrees(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    /// Sorted descending.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Minimum degree.
    pub fn min(&self) -> usize {
        *self.degrees.last().unwrap_or(&0)
    }

    /// Maximum degree.
    pub fn max(&self) -> usize {
        *self.degrees.first().unwrap_or(&0)
    }
}

fn choose2(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

fn choose3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Total triangles in a graph plus its complement, from the degree sequence:
/// `C(n,3) - (n-2)m + sum_v C(d(v),2)`.
pub fn goodman_total(ds: &DegreeSequence, n: usize, m: usize) -> Result<usize, GraphError> {
    let inconsistent = |reason: &str| GraphError::InconsistentDegrees {
        n,
        m,
        reason: reason.to_string(),
    };
    if ds.len() != n {
        return Err(inconsistent("length differs from n"));
    }
    if ds.sum() != 2 * m {
        return Err(inconsistent("sum differs from 2m"));
    }
    if n > 0 && ds.max() > n - 1 {
        return Err(inconsistent("a degree exceeds n-1"));
    }
    let sum_c2: usize = ds.degrees().iter().map(|&d| choose2(d)).sum();
    let total = choose3(n) as i64 - ((n as i64 - 2) * m as i64) + sum_c2 as i64;
    if total < 0 {
        return Err(inconsistent("formula is negative; sequence is not graphical"));
    }
    Ok(total as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparatorKind {
    Triangle,
    FourCycle,
    /// Four vertices spanning a 4-cycle that induce K4.
    CliqueFourCycle,
}

/// A vertex set whose deletion disconnects the graph, with the component
/// orders of what remains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorWitness {
    pub separator: Vec<usize>,
    pub kind: SeparatorKind,
    /// Orders of the components of `G - separator`, sorted ascending.
    pub component_orders: Vec<usize>,
}

/// All triangles of `g` whose deletion disconnects it.
pub fn list_separating_triangles(g: &Graph) -> Result<Vec<SeparatorWitness>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                continue;
            }
            for w in v + 1..n {
                if g.has_edge(u, w) && g.has_edge(v, w) {
                    let mask = 1u64 << u | 1 << v | 1 << w;
                    let orders = g.component_orders_excluding(mask);
                    if orders.len() >= 2 {
                        out.push(SeparatorWitness {
                            separator: vec![u, v, w],
                            kind: SeparatorKind::Triangle,
                            component_orders: orders,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// All 4-vertex sets containing a spanning 4-cycle whose deletion
/// disconnects `g`. Sets inducing K4 are marked as such.
pub fn list_separating_4cycles(g: &Graph) -> Result<Vec<SeparatorWitness>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if !spans_4cycle(g, a, b, c, d) {
                        continue;
                    }
                    let mask = 1u64 << a | 1 << b | 1 << c | 1 << d;
                    let orders = g.component_orders_excluding(mask);
                    if orders.len() >= 2 {
                        let edge_count = [(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)]
                            .iter()
                            .filter(|&&(u, v)| g.has_edge(u, v))
                            .count();
                        let kind = if edge_count == 6 {
                            SeparatorKind::CliqueFourCycle
                        } else {
                            SeparatorKind::FourCycle
                        };
                        out.push(SeparatorWitness {
                            separator: vec![a, b, c, d],
                            kind,
                            component_orders: orders,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Whether `{a,b,c,d}` contains a Hamiltonian cycle, checking the three
/// distinct pairings so every chord configuration is covered.
fn spans_4cycle(g: &Graph, a: usize, b: usize, c: usize, d: usize) -> bool {
    let cyc = |p: usize, q: usize, r: usize, s: usize| {
        g.has_edge(p, q) && g.has_edge(q, r) && g.has_edge(r, s) && g.has_edge(s, p)
    };
    cyc(a, b, c, d) || cyc(a, b, d, c) || cyc(a, c, b, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::apollonian;

    #[test]
    fn from_edges_builds_k4() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.size(), 6);
        assert_eq!(g.order(), 4);
        assert!(g.has_edge(2, 3));
    }

    #[test]
    fn from_edges_deduplicates() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn empty_graph_has_no_edges() {
        let g = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        let err = Graph::from_edges(4, &[(0, 4)]).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange(0, 4, 4));
        assert!(err.to_string().contains("(0, 4)"));
        let err = Graph::from_edges(4, &[(2, 2)]).unwrap_err();
        assert_eq!(err, GraphError::LoopEdge(2));
        assert!(err.to_string().contains("(2, 2)"));
        assert!(Graph::new(0).is_err());
        assert!(Graph::new(65).is_err());
    }

    #[test]
    fn icosahedron_is_5_regular() {
        let g = Graph::icosahedron();
        assert_eq!(g.order(), 12);
        assert_eq!(g.size(), 30);
        assert!((0..12).all(|v| g.degree(v) == 5));
    }

    #[test]
    fn complement_of_k12_is_empty() {
        assert_eq!(Graph::complete(12).complement().size(), 0);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.size(), 5);
        assert!(crate::oracle::are_isomorphic(&c5, &comp));
    }

    #[test]
    fn complement_of_order_12_triangulation_has_36_edges() {
        assert_eq!(Graph::icosahedron().complement().size(), 36);
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(Graph::icosahedron().degree_sequence().degrees(), &[5; 12]);
        assert_eq!(Graph::complete(4).degree_sequence().degrees(), &[3, 3, 3, 3]);
        let star = Graph::complete_bipartite(1, 5);
        assert_eq!(star.degree_sequence().degrees(), &[5, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(Graph::complete(4).count_triangles(), 4);
        assert_eq!(Graph::complete(7).count_triangles(), 35);
        assert_eq!(Graph::icosahedron().complement().count_triangles(), 20);
    }

    #[test]
    fn goodman_total_examples() {
        let ico = DegreeSequence::from_degrees(vec![5; 12]);
        assert_eq!(goodman_total(&ico, 12, 30).unwrap(), 40);

        let empty3 = DegreeSequence::from_degrees(vec![0, 0, 0]);
        assert_eq!(goodman_total(&empty3, 3, 0).unwrap(), 1);

        let mut ds = vec![5; 10];
        ds.push(3);
        ds.push(7);
        let ds = DegreeSequence::from_degrees(ds);
        assert_eq!(goodman_total(&ds, 12, 30).unwrap(), 44);
    }

    #[test]
    fn goodman_total_rejects_inconsistent_input() {
        let ds = DegreeSequence::from_degrees(vec![5; 12]);
        assert!(goodman_total(&ds, 11, 30).is_err());
        assert!(goodman_total(&ds, 12, 29).is_err());
        let too_big = DegreeSequence::from_degrees(vec![4, 1, 1, 0]);
        assert!(goodman_total(&too_big, 4, 3).is_err());
    }

    #[test]
    fn icosahedron_has_no_separating_triangles() {
        // Independent brute-force check over all triangles, then the op.
        let g = Graph::icosahedron();
        for u in 0..12 {
            for v in u + 1..12 {
                for w in v + 1..12 {
                    if g.has_edge(u, v) && g.has_edge(u, w) && g.has_edge(v, w) {
                        let orders =
                            g.component_orders_excluding(1 << u | 1 << v | 1 << w);
                        assert_eq!(orders.len(), 1);
                    }
                }
            }
        }
        assert!(list_separating_triangles(&g).unwrap().is_empty());
    }

    #[test]
    fn k5_minus_edge_has_one_separating_triangle() {
        let mut g = Graph::complete(5);
        g.remove_edge(0, 1);
        let witnesses = list_separating_triangles(&g).unwrap();
        assert_eq!(witnesses.len(), 1);
        assert_eq!(witnesses[0].separator, vec![2, 3, 4]);
        assert_eq!(witnesses[0].component_orders, vec![1, 1]);
        assert_eq!(witnesses[0].kind, SeparatorKind::Triangle);
    }

    #[test]
    fn apollonian_parents_are_separating() {
        let (g, parents) = apollonian(12);
        assert_eq!(g.size(), 30);
        let witnesses = list_separating_triangles(&g).unwrap();
        for tri in parents {
            let mut sep = tri.to_vec();
            sep.sort_unstable();
            // Oracle: component check after deleting the parent triangle.
            let mask = sep.iter().fold(0u64, |m, &v| m | 1 << v);
            assert!(g.component_orders_excluding(mask).len() >= 2);
            assert!(witnesses.iter().any(|w| w.separator == sep));
        }
    }

    #[test]
    fn separating_ops_require_connected_input() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(list_separating_triangles(&g).unwrap_err(), GraphError::Disconnected);
        assert_eq!(list_separating_4cycles(&g).unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn cube_4cycles_are_faces_and_never_separate() {
        // Brute force over all 4-subsets of Q3: every 4-subset spanning a
        // 4-cycle is one of the six faces, and deleting a face leaves the
        // opposite face connected. The {2,2}-separating 4-sets of Q3 induce
        // 2K2, which spans no 4-cycle, so they are not witnesses.
        let g = Graph::cube();
        let mut spanning_sets = 0;
        for a in 0..8 {
            for b in a + 1..8 {
                for c in b + 1..8 {
                    for d in c + 1..8 {
                        if spans_4cycle(&g, a, b, c, d) {
                            spanning_sets += 1;
                            let mask = 1u64 << a | 1 << b | 1 << c | 1 << d;
                            assert_eq!(g.component_orders_excluding(mask).len(), 1);
                        }
                    }
                }
            }
        }
        assert_eq!(spanning_sets, 6);
        assert!(list_separating_4cycles(&g).unwrap().is_empty());
        // The 2K2 separator really does split Q3 into {2,2}: vertices are
        // bit strings, 0b000,0b001,0b110,0b111 versus the rest.
        let orders = g.component_orders_excluding(0b11000011);
        assert_eq!(orders, vec![2, 2]);
    }

    #[test]
    fn k5_has_no_separating_4cycle() {
        assert!(list_separating_4cycles(&Graph::complete(5)).unwrap().is_empty());
    }

    #[test]
    fn octahedron_equators_separate_antipodal_pairs() {
        // Brute force over all 4-subsets agrees with the op: the three
        // equatorial 4-cycles each separate the remaining antipodal pair.
        let g = Graph::octahedron();
        let witnesses = list_separating_4cycles(&g).unwrap();
        assert_eq!(witnesses.len(), 3);
        for w in &witnesses {
            assert_eq!(w.component_orders, vec![1, 1]);
            assert_eq!(w.kind, SeparatorKind::FourCycle);
        }
    }

    #[test]
    fn independent_sets() {
        let g = Graph::icosahedron();
        // Vertices 1 and 3 are nonadjacent ring vertices; 11 is the far pole.
        assert!(g.is_independent_set(&[1, 3, 11]));
        assert!(!Graph::complete(4).is_independent_set(&[0, 1]));
        assert!(Graph::complete(4).is_independent_set(&[]));
        assert!(Graph::complete(4).is_independent_set(&[2]));
    }

    #[test]
    fn complement_involution_and_handshake() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.degree_sequence().sum(), 2 * g.size());
        assert_eq!(g.size() + g.complement().size(), 7 * 6 / 2);
    }

    #[test]
    fn bipartite_detection() {
        assert!(Graph::cube().is_bipartite());
        assert!(Graph::complete_bipartite(4, 5).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
        assert!(!Graph::icosahedron().is_bipartite());
    }
}
