//! Brute-force reference implementations, deliberately independent of the
//! fast paths they validate: minimum genus by enumerating every rotation
//! system (with its own face walk), graph isomorphism by backtracking, and
//! triangulation catalogs by filtering all graphs of the right size.

use crate::genus::embed_in_genus;
use crate::graph::Graph;
use rayon::prelude::*;

/// Number of distinct rotation systems of `g`: the product of `(d(v)-1)!`.
pub fn rotation_system_count(g: &Graph) -> u128 {
    let mut count: u128 = 1;
    for v in 0..g.order() {
        let d = g.degree(v);
        for i in 2..d {
            count = count.saturating_mul(i as u128);
        }
    }
    count
}

/// Minimum genus over all rotation systems of a connected graph, by
/// exhaustive enumeration. Infeasible beyond small degree products; guard
/// with [`rotation_system_count`].
pub fn exhaustive_min_genus(g: &Graph) -> Option<usize> {
    if !g.is_connected() {
        return None;
    }
    let n = g.order();
    if n == 1 {
        return Some(0);
    }
    // Fix the first listed neighbor at each vertex; permuting the rest
    // enumerates each cyclic order exactly once.
    let base: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut rotation = base.clone();
    let mut best = usize::MAX;
    enumerate_rotations(&base, &mut rotation, 0, &mut |rot| {
        best = best.min(genus_of_rotation(rot));
    });
    Some(best)
}

fn enumerate_rotations(
    base: &[Vec<usize>],
    rotation: &mut Vec<Vec<usize>>,
    v: usize,
    visit: &mut impl FnMut(&Vec<Vec<usize>>),
) {
    if v == base.len() {
        visit(rotation);
        return;
    }
    let tail_len = base[v].len().saturating_sub(1);
    let mut perm: Vec<usize> = (0..tail_len).collect();
    loop {
        rotation[v].truncate(0);
        if !base[v].is_empty() {
            rotation[v].push(base[v][0]);
            for &i in &perm {
                rotation[v].push(base[v][i + 1]);
            }
        }
        enumerate_rotations(base, rotation, v + 1, visit);
        if !next_permutation(&mut perm) {
            break;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Genus of one rotation system via its own face walk (shared with nothing
/// in the search path).
fn genus_of_rotation(rotation: &[Vec<usize>]) -> usize {
    let n = rotation.len();
    let mut succ = vec![usize::MAX; n * n];
    let mut m = 0usize;
    for (v, row) in rotation.iter().enumerate() {
        m += row.len();
        for (i, &u) in row.iter().enumerate() {
            succ[v * n + u] = row[(i + 1) % row.len()];
        }
    }
    m /= 2;
    let mut visited = vec![false; n * n];
    let mut faces = 0usize;
    for v in 0..n {
        for &u in &rotation[v] {
            if visited[v * n + u] {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (v, u);
            loop {
                visited[a * n + b] = true;
                let c = succ[b * n + a];
                a = b;
                b = c;
                if (a, b) == (v, u) {
                    break;
                }
            }
        }
    }
    let doubled = 2i64 - n as i64 + m as i64 - faces as i64;
    assert!(doubled >= 0 && doubled % 2 == 0);
    (doubled / 2) as usize
}

/// Backtracking isomorphism test on degree-compatible vertex maps.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let n = a.order();
    let da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    {
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_isomorphism(a, b, &da, &db, &mut map, &mut used, 0)
}

fn extend_isomorphism(
    a: &Graph,
    b: &Graph,
    da: &[usize],
    db: &[usize],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    v: usize,
) -> bool {
    let n = a.order();
    if v == n {
        return true;
    }
    'candidates: for w in 0..n {
        if used[w] || da[v] != db[w] {
            continue;
        }
        for prev in 0..v {
            if a.has_edge(v, prev) != b.has_edge(w, map[prev]) {
                continue 'candidates;
            }
        }
        map[v] = w;
        used[w] = true;
        if extend_isomorphism(a, b, da, db, map, used, v + 1) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}

/// All isomorphism classes of maximal planar graphs of order `n`, by brute
/// force: every graph on `n` labeled vertices with `3n-6` edges, kept when
/// planar (a planar graph with `3n-6` edges is automatically maximal and
/// connected), deduplicated by pairwise isomorphism. Feasible for `n <= 8`.
pub fn triangulation_graph_classes(n: usize) -> Vec<Graph> {
    assert!((4..=8).contains(&n), "brute-force catalog is for 4..=8");
    let m = 3 * n - 6;
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut selector: Vec<usize> = (0..m).collect();
    let mut planar: Vec<Graph> = Vec::new();
    let mut exhausted = false;
    // Edge subsets fit in a u32 mask; stream them in chunks to bound memory.
    while !exhausted {
        let mut chunk: Vec<u32> = Vec::with_capacity(1 << 20);
        while chunk.len() < 1 << 20 {
            chunk.push(selector.iter().fold(0u32, |acc, &i| acc | 1 << i));
            if !advance_combination(&mut selector, pairs.len()) {
                exhausted = true;
                break;
            }
        }
        planar.par_extend(chunk.par_iter().filter_map(|&mask| {
            let edges: Vec<(usize, usize)> =
                (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::from_edges(n, &edges).expect("valid pairs");
            if (0..n).any(|v| g.degree(v) < 3) {
                return None;
            }
            if !g.is_connected() {
                return None;
            }
            if embed_in_genus(&g, 0).expect("connected").is_witness() {
                Some(g)
            } else {
                None
            }
        }));
    }
    // Group by invariants before the quadratic isomorphism scan.
    let mut classes: Vec<(Vec<usize>, usize, Graph)> = Vec::new();
    'next: for g in planar {
        let key = g.degree_sequence().degrees().to_vec();
        let tri = g.count_triangles();
        for (k, t, rep) in &classes {
            if *k == key && *t == tri && are_isomorphic(rep, &g) {
                continue 'next;
            }
        }
        classes.push((key, tri, g));
    }
    classes.into_iter().map(|(_, _, g)| g).collect()
}

fn advance_combination(c: &mut [usize], m: usize) -> bool {
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
