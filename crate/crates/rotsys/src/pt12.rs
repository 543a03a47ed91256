//! Necessary conditions for a planar-plus-toroidal decomposition of K12.
//!
//! A decomposition forces both factors to be edge-maximal: the planar
//! factor G is a sphere triangulation of order 12 with 30 edges and its
//! complement must be a toroidal triangulation with 36 edges and 24
//! triangular faces. Each filter here is a proven consequence of that,
//! so a candidate failing any filter cannot take part in a decomposition.
//! The filters apply only to the exact (no edges removed) search; removal
//! searches bypass them since their derivations assume all 36 edges.

use crate::graph::{self, Graph, GraphError};
use thiserror::Error;

pub const PT12_ORDER: usize = 12;
pub const PT12_SIZE: usize = 30;

/// Triangular faces of a toroidal triangulation on 12 vertices.
const TORUS_FACES: usize = 2 * PT12_ORDER;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FilterError {
    #[error("expected a graph of order {PT12_ORDER}, got {0}")]
    WrongOrder(usize),
    #[error("expected a triangulation with {PT12_SIZE} edges, got {0}")]
    WrongSize(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FilterKind {
    MaxDegree,
    Deg8Independence,
    ForbiddenDegreeSequence,
    TriangleBudget,
    Separating36,
    Separating45,
    Separating4Cycle44,
}

impl FilterKind {
    pub fn name(self) -> &'static str {
        match self {
            FilterKind::MaxDegree => "max-degree",
            FilterKind::Deg8Independence => "deg8-independence",
            FilterKind::ForbiddenDegreeSequence => "forbidden-degree-sequence",
            FilterKind::TriangleBudget => "triangle-budget",
            FilterKind::Separating36 => "separating-3-6",
            FilterKind::Separating45 => "separating-4-5",
            FilterKind::Separating4Cycle44 => "separating-4-cycle-4-4",
        }
    }

    pub fn index(self) -> usize {
        FILTER_ORDER.iter().position(|&k| k == self).expect("member of the order")
    }
}

impl std::fmt::Display for FilterKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The fixed pipeline order.
pub const FILTER_ORDER: [FilterKind; 7] = [
    FilterKind::MaxDegree,
    FilterKind::Deg8Independence,
    FilterKind::ForbiddenDegreeSequence,
    FilterKind::TriangleBudget,
    FilterKind::Separating36,
    FilterKind::Separating45,
    FilterKind::Separating4Cycle44,
];

/// Per-graph record of which necessary conditions held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterReport {
    pub graph_id: usize,
    /// Outcome per filter in [`FILTER_ORDER`] position; `None` when the
    /// pipeline short-circuited before reaching it.
    pub outcomes: [Option<bool>; 7],
    pub survivor: bool,
    pub first_failure: Option<FilterKind>,
}

fn check_shape(g: &Graph) -> Result<(), FilterError> {
    if g.order() != PT12_ORDER {
        return Err(FilterError::WrongOrder(g.order()));
    }
    if g.size() != PT12_SIZE {
        return Err(FilterError::WrongSize(g.size()));
    }
    Ok(())
}

/// Degrees of a decomposable triangulation lie in `3..=8`: the complement
/// must itself have minimum degree 3.
pub fn filter_max_degree(g: &Graph) -> Result<bool, FilterError> {
    check_shape(g)?;
    let ds = g.degree_sequence();
    assert!(ds.min() >= 3, "a sphere triangulation has minimum degree 3");
    Ok(ds.max() <= 8)
}

/// A degree-8 vertex has exactly 3 non-neighbors, which must induce a
/// triangle in the complement, hence be independent here; and degree-3
/// vertices of a triangulation are pairwise nonadjacent, so degree-8
/// vertices here are pairwise adjacent.
pub fn filter_deg8_independence(g: &Graph) -> Result<bool, FilterError> {
    check_shape(g)?;
    let deg8: Vec<usize> = (0..PT12_ORDER).filter(|&v| g.degree(v) == 8).collect();
    for &v in &deg8 {
        let outside: Vec<usize> = (0..PT12_ORDER)
            .filter(|&w| w != v && !g.has_edge(v, w))
            .collect();
        debug_assert_eq!(outside.len(), 3);
        if !g.is_independent_set(&outside) {
            return Ok(false);
        }
    }
    for (i, &u) in deg8.iter().enumerate() {
        for &v in &deg8[i + 1..] {
            if !g.has_edge(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Degree sequences whose Goodman total leaves fewer than 24 triangles for
/// the complement (or exactly 24 with a separating triangle forced by a
/// degree-3 vertex).
const FORBIDDEN_SEQUENCES: [[usize; 12]; 7] = [
    [5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5],
    [6, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 4],
    [6, 6, 5, 5, 5, 5, 5, 5, 5, 5, 4, 4],
    [6, 6, 6, 5, 5, 5, 5, 5, 5, 4, 4, 4],
    [6, 6, 5, 5, 5, 5, 5, 5, 5, 5, 5, 3],
    [7, 5, 5, 5, 5, 5, 5, 5, 5, 5, 4, 4],
    [7, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 3],
];

pub fn filter_forbidden_degree_sequences(g: &Graph) -> Result<bool, FilterError> {
    check_shape(g)?;
    let ds = g.degree_sequence();
    Ok(!FORBIDDEN_SEQUENCES.iter().any(|f| f == ds.degrees()))
}

/// The complement needs at least 24 non-separating triangles to supply the
/// faces of a toroidal triangulation; face triangles are never separating.
pub fn filter_triangle_budget(g: &Graph) -> Result<bool, FilterError> {
    check_shape(g)?;
    let comp = g.complement();
    if !comp.is_connected() {
        // A toroidal triangulation is connected.
        return Ok(false);
    }
    let separating = graph::list_separating_triangles(&comp)?.len();
    Ok(comp.count_triangles() - separating >= TORUS_FACES)
}

/// No separating triangle may split the remaining 9 vertices into sides of
/// orders 3 and 6 (the complement would contain K3,6 in a way ruled out).
pub fn filter_separating_3_6(g: &Graph) -> Result<bool, FilterError> {
    check_shape(g)?;
    separating_triangle_split_free(g, 3)
}

/// No separating triangle may split the remaining 9 vertices into sides of
/// orders 4 and 5 (the complement would contain K4,5, which has genus 2).
pub fn filter_separating_4_5(g: &Graph) -> Result<bool, FilterError> {
    check_shape(g)?;
    separating_triangle_split_free(g, 4)
}

fn separating_triangle_split_free(g: &Graph, side: usize) -> Result<bool, FilterError> {
    for witness in graph::list_separating_triangles(g)? {
        if can_realize_split(&witness.component_orders, side) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No 4-vertex separator spanning a 4-cycle may split the remaining 8
/// vertices into two sides of order 4.
pub fn filter_separating_4cycle_4_4(g: &Graph) -> Result<bool, FilterError> {
    check_shape(g)?;
    for witness in graph::list_separating_4cycles(g)? {
        if can_realize_split(&witness.component_orders, 4) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Can the component orders be grouped into two sides so that one side has
/// the given total? A separator may leave more than two components.
fn can_realize_split(orders: &[usize], side: usize) -> bool {
    let mut reachable = 1u64;
    for &o in orders {
        reachable |= reachable << o;
    }
    reachable >> side & 1 == 1
}

fn apply(kind: FilterKind, g: &Graph) -> Result<bool, FilterError> {
    match kind {
        FilterKind::MaxDegree => filter_max_degree(g),
        FilterKind::Deg8Independence => filter_deg8_independence(g),
        FilterKind::ForbiddenDegreeSequence => filter_forbidden_degree_sequences(g),
        FilterKind::TriangleBudget => filter_triangle_budget(g),
        FilterKind::Separating36 => filter_separating_3_6(g),
        FilterKind::Separating45 => filter_separating_4_5(g),
        FilterKind::Separating4Cycle44 => filter_separating_4cycle_4_4(g),
    }
}

/// Runs the pipeline in the fixed order, short-circuiting on the first
/// failure but recording which filter fired.
pub fn run_filters(g: &Graph, graph_id: usize) -> Result<FilterReport, FilterError> {
    run_filters_in_order(g, graph_id, &FILTER_ORDER)
}

/// Runs the filters in a caller-chosen order; the survivor flag never
/// depends on the order, only the recorded first failure does.
pub fn run_filters_in_order(
    g: &Graph,
    graph_id: usize,
    order: &[FilterKind],
) -> Result<FilterReport, FilterError> {
    let mut outcomes = [None; 7];
    let mut first_failure = None;
    for &kind in order {
        let pass = apply(kind, g)?;
        outcomes[kind.index()] = Some(pass);
        if !pass {
            first_failure = Some(kind);
            break;
        }
    }
    Ok(FilterReport {
        graph_id,
        survivor: first_failure.is_none(),
        outcomes,
        first_failure,
    })
}
