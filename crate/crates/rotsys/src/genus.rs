//! Complete decision procedure for bounded-genus embeddability.
//!
//! The search inserts edges one at a time into a partial rotation system,
//! keeping the inserted prefix connected. The first edge activates both of
//! its endpoints; an edge to a fresh vertex can enter at any corner of its
//! embedded endpoint; an edge between two embedded vertices branches over
//! every (corner, corner) placement. Placing both ends on one face splits
//! that face and keeps the genus; placing them on two faces merges them and
//! raises the genus by exactly one. Since deleting an edge never raises the
//! genus of an embedding, the partial genus is monotone along any branch,
//! so branches exceeding the budget are pruned soundly, and every rotation
//! system of genus at most the budget is reached exactly once.
//!
//! Two further prunes: a static Euler bound (face lengths are at least 3,
//! or 4 in bipartite graphs, once minimum degree is 2) rejects hopeless
//! inputs outright, and once the budget is exhausted any still-missing edge
//! whose embedded endpoints share no face kills the branch, because face
//! splits never create new vertex co-incidences.

use crate::embedding::{CanonicalCode, Embedding};
use crate::graph::{Graph, GraphError};
use std::collections::BTreeMap;
use std::ops::{ControlFlow, Range};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("cannot remove {k} edges from a graph with {m}")]
    RemovalCountTooLarge { k: usize, m: usize },
    #[error("the number of edge subsets does not fit in 64 bits")]
    SubsetSpaceTooLarge,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Result of a bounded-genus embedding search: a witness embedding, or a
/// certificate that the search space (or an Euler bound) was exhausted.
#[derive(Clone, Debug)]
pub enum EmbedOutcome {
    Witness(Embedding),
    Exhausted,
}

impl EmbedOutcome {
    pub fn witness(self) -> Option<Embedding> {
        match self {
            EmbedOutcome::Witness(e) => Some(e),
            EmbedOutcome::Exhausted => None,
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self, EmbedOutcome::Witness(_))
    }
}

/// Insertion order of the non-tree edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrder {
    /// Decreasing sum of endpoint degrees; fail-fast default.
    DegreeSumDesc,
    /// Lexicographic.
    Lex,
    /// Deterministic shuffle from the given seed, for order-invariance
    /// experiments.
    Shuffled(u64),
}

#[derive(Clone, Debug)]
pub struct EmbedOptions {
    pub edge_order: EdgeOrder,
    /// Fix the orientation of the first vertex's completed rotation,
    /// halving the search by skipping one of each mirror pair.
    pub anchor_first_vertex: bool,
}

impl Default for EmbedOptions {
    fn default() -> Self {
        EmbedOptions { edge_order: EdgeOrder::DegreeSumDesc, anchor_first_vertex: false }
    }
}

/// Does `g` embed with genus at most `max_genus`? Complete and
/// deterministic: returns a witness iff one exists.
pub fn embed_in_genus(g: &Graph, max_genus: usize) -> Result<EmbedOutcome, SearchError> {
    embed_in_genus_with(g, max_genus, &EmbedOptions::default())
}

pub fn embed_in_genus_with(
    g: &Graph,
    max_genus: usize,
    opts: &EmbedOptions,
) -> Result<EmbedOutcome, SearchError> {
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    if g.order() == 1 {
        return Ok(EmbedOutcome::Witness(trivial_embedding(g)));
    }
    if static_genus_lower_bound(g) > max_genus {
        return Ok(EmbedOutcome::Exhausted);
    }
    let mut found = None;
    Searcher::new(g, max_genus, opts).run(&mut |s| {
        found = Some(s.current_embedding());
        ControlFlow::Break(())
    });
    match found {
        Some(e) => {
            verify_witness(&e, g, max_genus);
            Ok(EmbedOutcome::Witness(e))
        }
        None => Ok(EmbedOutcome::Exhausted),
    }
}

/// Smallest genus `<= bound` admitting an embedding, or `None` when the
/// bound is exhausted.
pub fn min_genus(g: &Graph, bound: usize) -> Result<Option<usize>, SearchError> {
    for genus in 0..=bound {
        if embed_in_genus(g, genus)?.is_witness() {
            return Ok(Some(genus));
        }
    }
    Ok(None)
}

/// Pairwise-inequivalent embeddings of exactly the given genus.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub embeddings: Vec<Embedding>,
    pub truncated: bool,
}

/// Enumerates embeddings of `g` with genus exactly `genus`, deduplicated by
/// canonical code and sorted by it. Stops once `limit` classes are in hand
/// and another inequivalent one appears, flagging truncation.
pub fn embeddings_up_to_equivalence(
    g: &Graph,
    genus: usize,
    limit: Option<usize>,
) -> Result<Enumeration, SearchError> {
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    let limit = limit.unwrap_or(usize::MAX);
    let mut classes: BTreeMap<CanonicalCode, Embedding> = BTreeMap::new();
    let mut truncated = false;
    if g.order() == 1 {
        if genus == 0 {
            let e = trivial_embedding(g);
            classes.insert(e.canonical_code().expect("connected"), e);
        }
    } else if static_genus_lower_bound(g) <= genus {
        Searcher::new(g, genus, &EmbedOptions::default()).run(&mut |s| {
            let e = s.current_embedding();
            if e.genus().expect("connected") != genus {
                return ControlFlow::Continue(());
            }
            let code = e.canonical_code().expect("connected");
            if !classes.contains_key(&code) {
                if classes.len() == limit {
                    truncated = true;
                    return ControlFlow::Break(());
                }
                classes.insert(code, e);
            }
            ControlFlow::Continue(())
        });
    }
    for e in classes.values() {
        verify_witness(e, g, genus);
    }
    Ok(Enumeration { embeddings: classes.into_values().collect(), truncated })
}

/// A successful embedding after removing a specific edge subset.
#[derive(Clone, Debug)]
pub struct RemovalWitness {
    pub removed: Vec<(usize, usize)>,
    pub embedding: Embedding,
}

/// Outcome of searching one block of removal subsets.
#[derive(Clone, Debug, Default)]
pub struct RemovalBlock {
    pub witnesses: Vec<RemovalWitness>,
    /// Subsets skipped because their removal disconnects the graph.
    pub skipped: Vec<Vec<(usize, usize)>>,
    pub processed: u64,
}

/// Number of `k`-subsets of the edge set, if it fits in 64 bits.
pub fn removal_subset_count(m: usize, k: usize) -> Option<u64> {
    let c = choose_saturating(m, k);
    u64::try_from(c).ok()
}

/// For every `k`-subset of the sorted edge list (lexicographic), searches
/// `g` minus the subset for an embedding of genus at most `genus`; returns
/// all successes. Subsets that disconnect the graph are skipped with a log
/// note.
pub fn embed_with_removals(
    g: &Graph,
    k: usize,
    genus: usize,
) -> Result<Vec<RemovalWitness>, SearchError> {
    let total = removal_subset_count(g.size(), k).ok_or(SearchError::SubsetSpaceTooLarge)?;
    let block = embed_with_removals_block(g, k, genus, 0..total)?;
    for subset in &block.skipped {
        log::debug!("skipped removal {subset:?}: graph becomes disconnected");
    }
    Ok(block.witnesses)
}

/// Block variant of [`embed_with_removals`]: processes subsets with
/// lexicographic ranks in `range`, so callers can checkpoint by position.
pub fn embed_with_removals_block(
    g: &Graph,
    k: usize,
    genus: usize,
    range: Range<u64>,
) -> Result<RemovalBlock, SearchError> {
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    let m = g.size();
    if k > m {
        return Err(SearchError::RemovalCountTooLarge { k, m });
    }
    let total = removal_subset_count(m, k).ok_or(SearchError::SubsetSpaceTooLarge)?;
    let edges = g.edges();
    let mut block = RemovalBlock::default();
    if range.start >= total || range.is_empty() {
        return Ok(block);
    }
    let end = range.end.min(total);
    let mut indices = unrank_combination(m, k, range.start);
    let mut rank = range.start;
    loop {
        let subset: Vec<(usize, usize)> = indices.iter().map(|&i| edges[i]).collect();
        let reduced = g.without_edges(&subset);
        if reduced.is_connected() {
            if let EmbedOutcome::Witness(e) = embed_in_genus(&reduced, genus)? {
                block.witnesses.push(RemovalWitness { removed: subset, embedding: e });
            }
        } else {
            block.skipped.push(subset);
        }
        block.processed += 1;
        rank += 1;
        if rank >= end || !next_combination(&mut indices, m) {
            break;
        }
    }
    Ok(block)
}

fn trivial_embedding(g: &Graph) -> Embedding {
    Embedding::new(g.clone(), vec![Vec::new()]).expect("K1 embedding")
}

fn verify_witness(e: &Embedding, g: &Graph, max_genus: usize) {
    // Witnesses are revalidated through the embedding layer, not trusted
    // from the search.
    assert_eq!(e.graph(), g, "witness is not an embedding of the searched graph");
    let genus = e.genus().expect("witness graph is connected");
    assert!(genus <= max_genus, "witness genus {genus} exceeds budget {max_genus}");
}

/// Euler lower bound on the genus of any embedding of `g`: with minimum
/// degree 2 every face walk has length at least 3 (no loops, and a 2-walk
/// forces a degree-1 endpoint), at least 4 when bipartite.
fn static_genus_lower_bound(g: &Graph) -> usize {
    let n = g.order();
    let m = g.size();
    if m == 0 || n < 3 {
        return 0;
    }
    if (0..n).map(|v| g.degree(v)).min().unwrap_or(0) < 2 {
        return 0;
    }
    let min_face = if g.is_bipartite() { 4 } else { 3 };
    let fmax = 2 * m / min_face;
    let doubled = 2i64 - n as i64 + m as i64 - fmax as i64;
    if doubled <= 0 {
        0
    } else {
        ((doubled + 1) / 2) as usize
    }
}

const NONE: u8 = u8::MAX;

#[derive(Clone, Copy, Debug)]
enum Move {
    /// Attach a fresh vertex after corner `at` of the embedded endpoint.
    Pendant { at: u8 },
    /// Join two embedded vertices at corners `a` and `b`. Same-face corner
    /// pairs split that face; cross-face pairs merge two faces and raise
    /// the genus by one.
    Both { a: u8, b: u8 },
}

struct Searcher<'a> {
    graph: &'a Graph,
    n: usize,
    max_genus: usize,
    anchor: bool,
    anchor_full_degree: usize,
    /// Edge insertion order; the prefix of inserted edges is always
    /// connected.
    edges: Vec<(u8, u8)>,
    /// Successor of neighbor `u` in the rotation at `v`, flattened `v*n+u`.
    rot_next: Vec<u8>,
    /// An arbitrary current neighbor of each vertex, `NONE` when inactive.
    entry: Vec<u8>,
    deg: Vec<u8>,
    active: usize,
    // Face-tracing scratch, reused across nodes.
    face_of: Vec<u16>,
    dart_stamp: Vec<u32>,
    stamp: u32,
    vertex_faces: Vec<u128>,
    moves: Vec<Vec<Move>>,
}

impl<'a> Searcher<'a> {
    fn new(graph: &'a Graph, max_genus: usize, opts: &EmbedOptions) -> Self {
        let n = graph.order();
        let edges = insertion_order(graph, opts.edge_order);
        debug_assert_eq!(edges.len(), graph.size());
        let depth = edges.len() + 1;
        Searcher {
            graph,
            n,
            max_genus,
            anchor: opts.anchor_first_vertex,
            anchor_full_degree: graph.degree(edges.first().map_or(0, |e| e.0 as usize)),
            edges,
            rot_next: vec![NONE; n * n],
            entry: vec![NONE; n],
            deg: vec![0; n],
            active: 0,
            face_of: vec![0; n * n],
            dart_stamp: vec![0; n * n],
            stamp: 0,
            vertex_faces: vec![0; n],
            moves: vec![Vec::new(); depth],
        }
    }

    fn anchor_vertex(&self) -> usize {
        self.edges[0].0 as usize
    }

    fn run(&mut self, on_witness: &mut dyn FnMut(&mut Self) -> ControlFlow<()>) {
        if self.edges.is_empty() {
            return;
        }
        let (u, w) = self.edges[0];
        self.activate_pair(u, w);
        let _ = self.search(1, on_witness);
    }

    fn search(
        &mut self,
        depth: usize,
        on_witness: &mut dyn FnMut(&mut Self) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let (faces, masks_ok) = self.trace_faces();
        let genus = self.partial_genus(depth, faces);
        debug_assert!(genus <= self.max_genus);
        if depth == self.edges.len() {
            return on_witness(self);
        }
        if genus == self.max_genus && masks_ok && !self.remaining_edges_satisfiable(depth) {
            return ControlFlow::Continue(());
        }

        let (u, w) = self.edges[depth];
        let (u, w) = (u as usize, w as usize);
        self.collect_moves(depth, u, w, genus);
        let moves = std::mem::take(&mut self.moves[depth]);
        let mut flow = ControlFlow::Continue(());
        for &mv in &moves {
            let undo = self.apply(u, w, mv);
            if self.anchor_ok(u, w) {
                flow = self.search(depth + 1, on_witness);
            }
            self.undo(u, w, mv, undo);
            if flow.is_break() {
                break;
            }
        }
        self.moves[depth] = moves;
        flow
    }

    /// Genus of the partial embedding with `m` edges and `faces` faces.
    fn partial_genus(&self, m: usize, faces: usize) -> usize {
        let doubled = 2i64 - self.active as i64 + m as i64 - faces as i64;
        debug_assert!(doubled >= 0 && doubled % 2 == 0, "Euler parity violated");
        (doubled / 2) as usize
    }

    fn collect_moves(&mut self, depth: usize, u: usize, w: usize, genus: usize) {
        let mut moves = std::mem::take(&mut self.moves[depth]);
        moves.clear();
        let n = self.n;
        if self.deg[w] == 0 {
            let mut a = self.entry[u];
            loop {
                moves.push(Move::Pendant { at: a });
                a = self.rot_next[u * n + a as usize];
                if a == self.entry[u] {
                    break;
                }
            }
        } else {
            debug_assert!(self.deg[u] > 0);
            // Same-face placements first: they keep the genus.
            for cross in [false, true] {
                if cross && genus == self.max_genus {
                    break;
                }
                let mut a = self.entry[u];
                loop {
                    let fa = self.face_of[a as usize * n + u];
                    let mut b = self.entry[w];
                    loop {
                        let fb = self.face_of[b as usize * n + w];
                        if (fa != fb) == cross {
                            moves.push(Move::Both { a, b });
                        }
                        b = self.rot_next[w * n + b as usize];
                        if b == self.entry[w] {
                            break;
                        }
                    }
                    a = self.rot_next[u * n + a as usize];
                    if a == self.entry[u] {
                        break;
                    }
                }
            }
        }
        self.moves[depth] = moves;
    }

    fn activate_pair(&mut self, u: u8, w: u8) {
        let n = self.n;
        let (ui, wi) = (u as usize, w as usize);
        self.entry[ui] = w;
        self.rot_next[ui * n + wi] = w;
        self.deg[ui] = 1;
        self.entry[wi] = u;
        self.rot_next[wi * n + ui] = u;
        self.deg[wi] = 1;
        self.active += 2;
    }

    /// Inserts `w` into the rotation at `u` immediately after `a`,
    /// returning the displaced successor for undo.
    fn splice(&mut self, u: usize, a: u8, w: usize) -> u8 {
        let n = self.n;
        let s = self.rot_next[u * n + a as usize];
        self.rot_next[u * n + a as usize] = w as u8;
        self.rot_next[u * n + w] = s;
        self.deg[u] += 1;
        s
    }

    fn unsplice(&mut self, u: usize, a: u8, s: u8) {
        self.rot_next[u * self.n + a as usize] = s;
        self.deg[u] -= 1;
    }

    fn apply(&mut self, u: usize, w: usize, mv: Move) -> (u8, u8) {
        match mv {
            Move::Pendant { at } => {
                let s = self.splice(u, at, w);
                self.entry[w] = u as u8;
                self.rot_next[w * self.n + u] = u as u8;
                self.deg[w] = 1;
                self.active += 1;
                (s, NONE)
            }
            Move::Both { a, b } => {
                let su = self.splice(u, a, w);
                let sw = self.splice(w, b, u);
                (su, sw)
            }
        }
    }

    fn undo(&mut self, u: usize, w: usize, mv: Move, saved: (u8, u8)) {
        match mv {
            Move::Pendant { at } => {
                self.unsplice(u, at, saved.0);
                self.entry[w] = NONE;
                self.deg[w] = 0;
                self.active -= 1;
            }
            Move::Both { a, b } => {
                self.unsplice(w, b, saved.1);
                self.unsplice(u, a, saved.0);
            }
        }
    }

    /// With the orientation anchor on, once the first vertex's rotation is
    /// complete only one of each mirror pair survives.
    fn anchor_ok(&self, u: usize, w: usize) -> bool {
        if !self.anchor {
            return true;
        }
        let r = self.anchor_vertex();
        if (u != r && w != r) || (self.deg[r] as usize) != self.anchor_full_degree {
            return true;
        }
        let n = self.n;
        let first = {
            let mut min = self.entry[r];
            let mut x = self.rot_next[r * n + min as usize];
            while x != self.entry[r] {
                if x < min {
                    min = x;
                }
                x = self.rot_next[r * n + x as usize];
            }
            min
        };
        let next = self.rot_next[r * n + first as usize];
        let mut prev = first;
        while self.rot_next[r * n + prev as usize] != first {
            prev = self.rot_next[r * n + prev as usize];
        }
        next <= prev
    }

    /// Traces all faces of the partial embedding, filling `face_of` per
    /// dart. Returns the face count and whether the per-vertex face masks
    /// were filled (they hold at most 128 faces).
    fn trace_faces(&mut self) -> (usize, bool) {
        let n = self.n;
        self.stamp += 1;
        let stamp = self.stamp;
        let mut faces = 0usize;
        for v in 0..n {
            self.vertex_faces[v] = 0;
        }
        for v in 0..n {
            if self.deg[v] == 0 {
                continue;
            }
            let start = self.entry[v];
            let mut u = start;
            loop {
                if self.dart_stamp[v * n + u as usize] != stamp {
                    let fid = faces as u16;
                    faces += 1;
                    let (mut a, mut b) = (v, u as usize);
                    loop {
                        self.dart_stamp[a * n + b] = stamp;
                        self.face_of[a * n + b] = fid;
                        if faces <= 128 {
                            self.vertex_faces[b] |= 1u128 << (fid & 127) as u32;
                        }
                        let c = self.rot_next[b * n + a];
                        a = b;
                        b = c as usize;
                        if (a, b) == (v, u as usize) {
                            break;
                        }
                    }
                }
                u = self.rot_next[v * n + u as usize];
                if u == start {
                    break;
                }
            }
        }
        (faces, faces <= 128)
    }

    /// With the genus budget spent, every remaining edge between two
    /// embedded vertices must already see a common face.
    fn remaining_edges_satisfiable(&self, depth: usize) -> bool {
        for &(x, y) in &self.edges[depth..] {
            let (x, y) = (x as usize, y as usize);
            if self.deg[x] > 0
                && self.deg[y] > 0
                && self.vertex_faces[x] & self.vertex_faces[y] == 0
            {
                return false;
            }
        }
        true
    }

    fn current_embedding(&self) -> Embedding {
        let n = self.n;
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            let mut row = Vec::with_capacity(self.deg[v] as usize);
            if self.deg[v] > 0 {
                let start = self.entry[v];
                let mut u = start;
                loop {
                    row.push(u as usize);
                    u = self.rot_next[v * n + u as usize];
                    if u == start {
                        break;
                    }
                }
            }
            rotation.push(row);
        }
        Embedding::new(self.graph.clone(), rotation).expect("search state is a valid embedding")
    }
}

/// Edge insertion order: a DFS spanning tree in discovery order (keeping
/// the prefix connected and the tree path-like, so tree-phase branching
/// stays small), then the non-tree edges per the configured order.
fn insertion_order(g: &Graph, order: EdgeOrder) -> Vec<(u8, u8)> {
    let n = g.order();
    let mut visited = vec![false; n];
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    let mut in_tree = std::collections::HashSet::new();
    let mut stack = vec![0usize];
    visited[0] = true;
    // Iterative DFS; re-scan neighbors so discovery matches the recursive
    // order.
    while let Some(&v) = stack.last() {
        let mut advanced = false;
        for w in g.neighbors(v) {
            if !visited[w] {
                visited[w] = true;
                tree.push((v as u8, w as u8));
                in_tree.insert(if v < w { (v, w) } else { (w, v) });
                stack.push(w);
                advanced = true;
                break;
            }
        }
        if !advanced {
            stack.pop();
        }
    }
    let mut rest: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !in_tree.contains(&(u, v)))
        .collect();
    match order {
        EdgeOrder::Lex => {}
        EdgeOrder::DegreeSumDesc => {
            rest.sort_by_key(|&(u, v)| (std::cmp::Reverse(g.degree(u) + g.degree(v)), u, v));
        }
        EdgeOrder::Shuffled(seed) => {
            let mut state = seed | 1;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            for i in (1..rest.len()).rev() {
                let j = (next() % (i as u64 + 1)) as usize;
                rest.swap(i, j);
            }
        }
    }
    tree.into_iter()
        .chain(rest.into_iter().map(|(u, v)| (u as u8, v as u8)))
        .collect()
}

fn choose_saturating(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    result
}

/// The `rank`-th (0-based) k-subset of `0..m` in lexicographic order.
fn unrank_combination(m: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0usize;
    for i in 0..k {
        let mut c = next;
        loop {
            let below = choose_saturating(m - c - 1, k - i - 1);
            if (rank as u128) < below {
                break;
            }
            rank -= below as u64;
            c += 1;
        }
        out.push(c);
        next = c + 1;
    }
    out
}

/// Advances `c` to the next k-subset of `0..m`; false at the last one.
fn next_combination(c: &mut [usize], m: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] != i + m - k {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_is_not_planar_but_is_toroidal() {
        let k5 = Graph::complete(5);
        assert!(!embed_in_genus(&k5, 0).unwrap().is_witness());
        let witness = embed_in_genus(&k5, 1).unwrap().witness().unwrap();
        assert_eq!(witness.genus().unwrap(), 1);
        assert_eq!(min_genus(&k5, 3).unwrap(), Some(1));
    }

    #[test]
    fn k33_has_genus_one() {
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(min_genus(&k33, 2).unwrap(), Some(1));
    }

    #[test]
    fn trees_and_cycles_are_planar() {
        assert_eq!(min_genus(&Graph::path(5), 2).unwrap(), Some(0));
        assert_eq!(min_genus(&Graph::cycle(6), 2).unwrap(), Some(0));
        assert_eq!(min_genus(&Graph::wheel(5), 2).unwrap(), Some(0));
    }

    #[test]
    fn octahedron_is_planar() {
        // Exercises tree-phase branching: a bad fixed tree rotation would
        // wrongly exhaust here.
        assert!(embed_in_genus(&Graph::octahedron(), 0).unwrap().is_witness());
        assert!(embed_in_genus(&Graph::icosahedron(), 0).unwrap().is_witness());
    }

    #[test]
    fn k7_embeds_on_the_torus_with_14_faces() {
        let witness = embed_in_genus(&Graph::complete(7), 1).unwrap().witness().unwrap();
        assert_eq!(witness.trace_faces().face_count(), 14);
        assert_eq!(witness.genus().unwrap(), 1);
    }

    #[test]
    fn k45_does_not_embed_on_the_torus() {
        let outcome = embed_in_genus(&Graph::complete_bipartite(4, 5), 1).unwrap();
        assert!(!outcome.is_witness());
    }

    #[test]
    fn k1_and_k2_are_planar() {
        let k1 = Graph::new(1).unwrap();
        assert!(embed_in_genus(&k1, 0).unwrap().is_witness());
        let k2 = Graph::complete(2);
        let w = embed_in_genus(&k2, 0).unwrap().witness().unwrap();
        assert_eq!(w.trace_faces().face_count(), 1);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(embed_in_genus(&g, 1).unwrap_err(), SearchError::Disconnected);
        assert_eq!(min_genus(&g, 1).unwrap_err(), SearchError::Disconnected);
    }

    #[test]
    fn k4_has_one_sphere_embedding_class() {
        let result = embeddings_up_to_equivalence(&Graph::complete(4), 0, None).unwrap();
        assert_eq!(result.embeddings.len(), 1);
        assert!(!result.truncated);
    }

    #[test]
    fn c4_has_one_sphere_embedding_class() {
        let result = embeddings_up_to_equivalence(&Graph::cycle(4), 0, None).unwrap();
        assert_eq!(result.embeddings.len(), 1);
        assert_eq!(result.embeddings[0].trace_faces().lengths(), vec![4, 4]);
    }

    #[test]
    fn truncation_is_flagged() {
        let result = embeddings_up_to_equivalence(&Graph::complete(5), 1, Some(1)).unwrap();
        assert_eq!(result.embeddings.len(), 1);
        assert!(result.truncated);
    }

    #[test]
    fn k5_minus_any_edge_is_planar() {
        let witnesses = embed_with_removals(&Graph::complete(5), 1, 0).unwrap();
        assert_eq!(witnesses.len(), 10);
        for w in &witnesses {
            assert_eq!(w.embedding.genus().unwrap(), 0);
            assert_eq!(w.removed.len(), 1);
        }
    }

    #[test]
    fn removal_blocks_partition_the_subset_space() {
        let g = Graph::complete(5);
        let total = removal_subset_count(10, 2).unwrap();
        assert_eq!(total, 45);
        let all = embed_with_removals_block(&g, 2, 0, 0..total).unwrap();
        let first = embed_with_removals_block(&g, 2, 0, 0..20).unwrap();
        let second = embed_with_removals_block(&g, 2, 0, 20..total).unwrap();
        assert_eq!(all.processed, 45);
        assert_eq!(first.processed + second.processed, 45);
        let glued: Vec<_> = first
            .witnesses
            .iter()
            .chain(second.witnesses.iter())
            .map(|w| w.removed.clone())
            .collect();
        let whole: Vec<_> = all.witnesses.iter().map(|w| w.removed.clone()).collect();
        assert_eq!(glued, whole);
    }

    #[test]
    fn removal_skips_disconnecting_subsets() {
        // Removing the bridge of a bowtie-with-bridge disconnects it.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        let block =
            embed_with_removals_block(&g, 1, 0, 0..removal_subset_count(7, 1).unwrap()).unwrap();
        assert_eq!(block.skipped, vec![vec![(2, 3)]]);
        assert_eq!(block.witnesses.len(), 6);
    }

    #[test]
    fn decision_is_insertion_order_invariant() {
        let cases: Vec<(Graph, usize, bool)> = vec![
            (Graph::complete(5), 0, false),
            (Graph::complete(5), 1, true),
            (Graph::complete_bipartite(3, 3), 0, false),
            (Graph::cube(), 0, true),
            (Graph::octahedron(), 0, true),
        ];
        for (g, genus, expected) in cases {
            for order in [
                EdgeOrder::DegreeSumDesc,
                EdgeOrder::Lex,
                EdgeOrder::Shuffled(7),
                EdgeOrder::Shuffled(99),
            ] {
                let opts = EmbedOptions { edge_order: order, anchor_first_vertex: false };
                let got = embed_in_genus_with(&g, genus, &opts).unwrap().is_witness();
                assert_eq!(got, expected, "order {order:?} changed the decision");
            }
        }
    }

    #[test]
    fn anchoring_does_not_change_decisions() {
        let opts = EmbedOptions { anchor_first_vertex: true, ..Default::default() };
        assert!(!embed_in_genus_with(&Graph::complete(5), 0, &opts).unwrap().is_witness());
        assert!(embed_in_genus_with(&Graph::complete(5), 1, &opts).unwrap().is_witness());
        assert!(embed_in_genus_with(&Graph::octahedron(), 0, &opts).unwrap().is_witness());
        assert!(!embed_in_genus_with(&Graph::complete_bipartite(3, 3), 0, &opts)
            .unwrap()
            .is_witness());
    }

    #[test]
    fn witnesses_are_deterministic() {
        let g = Graph::complete(7);
        let a = embed_in_genus(&g, 1).unwrap().witness().unwrap();
        let b = embed_in_genus(&g, 1).unwrap().witness().unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.canonical_code().unwrap().as_bytes(),
            b.canonical_code().unwrap().as_bytes()
        );
    }

    #[test]
    fn small_oracle_agreement() {
        // Full corpus runs in the acceptance suite; spot-check here.
        for g in [
            Graph::complete(4),
            Graph::cycle(5),
            Graph::complete_bipartite(2, 3),
            Graph::wheel(4),
        ] {
            let expected = crate::oracle::exhaustive_min_genus(&g);
            assert_eq!(min_genus(&g, 4).unwrap(), expected);
        }
    }
}
