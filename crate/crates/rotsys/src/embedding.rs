//! Combinatorial embeddings on orientable surfaces.
//!
//! An [`Embedding`] pairs a graph with a rotation system: for every vertex,
//! a cyclic order of its neighbors. Faces are traced with the fixed
//! convention that the dart after `(u, v)` is `(v, w)` where `w` is the
//! successor of `u` in the rotation at `v`; the opposite convention is this
//! one composed with [`Embedding::reflect`]. Euler's formula
//! `n - m + f = 2 - 2g` then yields the genus of the embedding.
//!
//! [`CanonicalCode`] quotients embeddings by relabeling, by the choice of
//! starting point in each cyclic list, and by global reflection
//! (flip-isomorphism), so equal codes mean equivalent embeddings.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("rotation table has {got} rows for a graph of order {order}")]
    RotationCountMismatch { order: usize, got: usize },
    #[error("rotation at vertex {vertex} is not a permutation of its neighbors: {reason}")]
    BadRotation { vertex: usize, reason: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An ordered edge endpoint pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub tail: usize,
    pub head: usize,
}

impl Dart {
    pub fn new(tail: usize, head: usize) -> Self {
        Dart { tail, head }
    }

    pub fn reversed(self) -> Self {
        Dart { tail: self.head, head: self.tail }
    }
}

/// A graph together with a cyclic neighbor order at every vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Embedding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Embedding(n={}, rotations={:?})", self.order(), self.rotation)
    }
}

impl Embedding {
    /// Validates that every rotation row is a permutation of that vertex's
    /// neighbors in `graph`.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        if rotation.len() != graph.order() {
            return Err(EmbeddingError::RotationCountMismatch {
                order: graph.order(),
                got: rotation.len(),
            });
        }
        for (v, row) in rotation.iter().enumerate() {
            let bad = |reason: String| EmbeddingError::BadRotation { vertex: v, reason };
            if row.len() != graph.degree(v) {
                return Err(bad(format!(
                    "lists {} neighbors, degree is {}",
                    row.len(),
                    graph.degree(v)
                )));
            }
            let mut seen = 0u64;
            for &w in row {
                if w >= graph.order() || !graph.has_edge(v, w) {
                    return Err(bad(format!("{w} is not a neighbor")));
                }
                if seen >> w & 1 == 1 {
                    return Err(bad(format!("neighbor {w} is listed twice")));
                }
                seen |= 1 << w;
            }
        }
        Ok(Embedding { graph, rotation })
    }

    /// Derives the graph from the rotation lists themselves. Rejects loops,
    /// duplicate entries, and asymmetric adjacency.
    pub fn from_rotations(rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        let order = rotation.len();
        let mut graph = Graph::new(order)?;
        for (v, row) in rotation.iter().enumerate() {
            let bad = |reason: String| EmbeddingError::BadRotation { vertex: v, reason };
            let mut seen = 0u64;
            for &w in row {
                if w == v {
                    return Err(bad("lists itself".to_string()));
                }
                if w >= order {
                    return Err(bad(format!("{w} is out of range")));
                }
                if seen >> w & 1 == 1 {
                    return Err(bad(format!("neighbor {w} is listed twice")));
                }
                seen |= 1 << w;
                graph.add_edge(v, w);
            }
        }
        // Symmetry: v listing w forces w to list v; degree equality suffices
        // once every listed edge is in the graph.
        for (v, row) in rotation.iter().enumerate() {
            if row.len() != graph.degree(v) {
                return Err(EmbeddingError::BadRotation {
                    vertex: v,
                    reason: "adjacency is not symmetric".to_string(),
                });
            }
        }
        Ok(Embedding { graph, rotation })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn size(&self) -> usize {
        self.graph.size()
    }

    /// Cyclic neighbor order at `v`; the starting point is significant only
    /// for exact (byte-level) equality, not for equivalence.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Traces all faces. Every dart lands in exactly one face.
    pub fn trace_faces(&self) -> FaceSet {
        let n = self.order();
        let mut succ = vec![usize::MAX; n * n];
        for v in 0..n {
            let row = &self.rotation[v];
            for (i, &u) in row.iter().enumerate() {
                succ[v * n + u] = row[(i + 1) % row.len()];
            }
        }
        let mut visited = vec![false; n * n];
        let mut faces = Vec::new();
        for tail in 0..n {
            for &head in &self.rotation[tail] {
                if visited[tail * n + head] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut u, mut v) = (tail, head);
                loop {
                    visited[u * n + v] = true;
                    face.push(Dart::new(u, v));
                    let w = succ[v * n + u];
                    u = v;
                    v = w;
                    if (u, v) == (tail, head) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        FaceSet { faces }
    }

    /// Genus of this embedding from Euler's formula; requires a connected
    /// graph.
    pub fn genus(&self) -> Result<usize, EmbeddingError> {
        if !self.graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let n = self.order() as i64;
        let m = self.size() as i64;
        let f = if n == 1 && m == 0 {
            // A lone vertex embeds with the whole sphere as its one face.
            1
        } else {
            self.trace_faces().face_count() as i64
        };
        let doubled = 2 - n + m - f;
        debug_assert!(doubled >= 0 && doubled % 2 == 0);
        Ok((doubled / 2) as usize)
    }

    /// True iff every face has length 3.
    pub fn is_triangulation(&self) -> bool {
        self.trace_faces().faces().iter().all(|f| f.len() == 3)
    }

    pub fn count_triangular_faces(&self) -> usize {
        self.trace_faces().faces().iter().filter(|f| f.len() == 3).count()
    }

    /// Mirror image: every rotation list reversed. An involution that
    /// preserves genus.
    pub fn reflect(&self) -> Embedding {
        let rotation = self
            .rotation
            .iter()
            .map(|row| row.iter().rev().copied().collect())
            .collect();
        Embedding { graph: self.graph.clone(), rotation }
    }

    /// Canonical code of the flip-isomorphism class of this embedding:
    /// the lexicographic minimum, over both orientations and all starting
    /// darts, of a breadth-first relabeling code. Equal codes hold exactly
    /// for embeddings that agree up to relabeling, rotation of the cyclic
    /// lists, and global reflection.
    pub fn canonical_code(&self) -> Result<CanonicalCode, EmbeddingError> {
        if !self.graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let n = self.order();
        if n == 1 {
            return Ok(CanonicalCode(vec![1, 0]));
        }
        let fwd = Tables::build(&self.rotation);
        let rev = Tables::build(&self.reflect().rotation);
        let mut best: Option<Vec<u8>> = None;
        let mut scratch = vec![0u8; 1 + n + 2 * self.size()];
        let mut state = EncodeState::new(n);
        for tables in [&fwd, &rev] {
            for u in 0..n {
                for &v in &tables.rotation[u] {
                    state.encode(tables, u, v, &mut scratch, &mut best);
                }
            }
        }
        Ok(CanonicalCode(best.expect("connected graph has at least one dart")))
    }
}

struct Tables {
    rotation: Vec<Vec<usize>>,
    /// Position of neighbor `u` in the rotation at `v`, flattened `v * n + u`.
    pos: Vec<u8>,
}

impl Tables {
    fn build(rotation: &[Vec<usize>]) -> Tables {
        let n = rotation.len();
        let mut pos = vec![u8::MAX; n * n];
        for (v, row) in rotation.iter().enumerate() {
            for (i, &u) in row.iter().enumerate() {
                pos[v * n + u] = i as u8;
            }
        }
        Tables { rotation: rotation.to_vec(), pos }
    }
}

struct EncodeState {
    label: Vec<u8>,
    refn: Vec<usize>,
    order: Vec<usize>,
    epoch: Vec<u32>,
    generation: u32,
}

impl EncodeState {
    fn new(n: usize) -> Self {
        EncodeState {
            label: vec![0; n],
            refn: vec![0; n],
            order: Vec::with_capacity(n),
            epoch: vec![0; n],
            generation: 0,
        }
    }

    /// Emits the BFS code seeded at dart `(u0, v0)` into `scratch`,
    /// comparing against `best` as bytes are produced and aborting as soon
    /// as the candidate is lexicographically larger.
    fn encode(
        &mut self,
        t: &Tables,
        u0: usize,
        v0: usize,
        scratch: &mut [u8],
        best: &mut Option<Vec<u8>>,
    ) {
        let n = t.rotation.len();
        self.generation += 1;
        let gen = self.generation;
        self.label[u0] = 1;
        self.epoch[u0] = gen;
        self.label[v0] = 2;
        self.epoch[v0] = gen;
        self.refn[u0] = v0;
        self.refn[v0] = u0;
        self.order.clear();
        self.order.push(u0);
        self.order.push(v0);
        let mut next_label = 3u8;

        let mut i = 0usize;
        // While bytes match the best code exactly we keep comparing; after
        // the first strictly smaller byte the candidate must win.
        let mut decided_less = best.is_none();
        if !emit(scratch, best, &mut i, &mut decided_less, n as u8) {
            return;
        }
        let mut qi = 0;
        while qi < self.order.len() {
            let w = self.order[qi];
            qi += 1;
            let row = &t.rotation[w];
            let d = row.len();
            let start = t.pos[w * n + self.refn[w]] as usize;
            for k in 0..d {
                let x = row[(start + k) % d];
                if self.epoch[x] != gen {
                    self.label[x] = next_label;
                    self.epoch[x] = gen;
                    next_label += 1;
                    self.refn[x] = w;
                    self.order.push(x);
                }
                if !emit(scratch, best, &mut i, &mut decided_less, self.label[x]) {
                    return;
                }
            }
            if !emit(scratch, best, &mut i, &mut decided_less, 0) {
                return;
            }
        }
        if decided_less {
            match best {
                Some(b) => b.copy_from_slice(&scratch[..i]),
                None => *best = Some(scratch[..i].to_vec()),
            }
        }
    }
}

fn emit(
    scratch: &mut [u8],
    best: &Option<Vec<u8>>,
    i: &mut usize,
    decided_less: &mut bool,
    byte: u8,
) -> bool {
    if !*decided_less {
        let b = best.as_ref().expect("compared only when present");
        if byte > b[*i] {
            return false;
        }
        if byte < b[*i] {
            *decided_less = true;
        }
    }
    scratch[*i] = byte;
    *i += 1;
    true
}

/// The faces traced from an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
}

impl FaceSet {
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Face lengths sorted ascending.
    pub fn lengths(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.faces.iter().map(|f| f.len()).collect();
        lengths.sort_unstable();
        lengths
    }

    pub fn total_darts(&self) -> usize {
        self.faces.iter().map(|f| f.len()).sum()
    }
}

/// Byte sequence identifying an embedding up to relabeling, cyclic list
/// rotation, and reflection. The bytes are a planar_code style record of
/// the canonical relabeling: order byte, then each vertex's neighbors as
/// 1-based labels terminated by 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Reconstructs the canonical representative embedding encoded by this
    /// code.
    pub fn to_embedding(&self) -> Embedding {
        let n = self.0[0] as usize;
        let mut rotation = vec![Vec::new(); n];
        let mut at = 1;
        for row in rotation.iter_mut() {
            while self.0[at] != 0 {
                row.push((self.0[at] - 1) as usize);
                at += 1;
            }
            at += 1;
        }
        Embedding::from_rotations(rotation).expect("canonical codes encode valid embeddings")
    }
}

impl std::fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalCode({:?})", self.0)
    }
}
