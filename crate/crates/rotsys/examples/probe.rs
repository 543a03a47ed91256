// Final probe: global "not adjacent to any deg-8 vertex" set readings.
use rotsys::graph::Graph;
use rotsys::triangulate;

fn main() {
    let level = triangulate::generate(12).unwrap();
    let graphs: Vec<Graph> = level.embeddings.iter().map(|e| e.graph().clone()).collect();
    let n = 12usize;
    let mut results: Vec<(String, usize)> = Vec::new();
    for include_deg8 in [true, false] {
        for require_indep in [true, false] {
            for exact in [true, false] {
                for cap in [true, false] {
                    let c = graphs
                        .iter()
                        .filter(|g| {
                            if cap && g.degree_sequence().max() > 8 {
                                return false;
                            }
                            let d8: Vec<usize> =
                                (0..n).filter(|&v| g.degree(v) == 8).collect();
                            if d8.is_empty() {
                                return false;
                            }
                            let s: Vec<usize> = (0..n)
                                .filter(|&w| {
                                    (include_deg8 || g.degree(w) != 8)
                                        && d8.iter().all(|&v| v != w && !g.has_edge(v, w))
                                })
                                .collect();
                            let size_ok = if exact { s.len() == 3 } else { s.len() >= 3 };
                            size_ok && (!require_indep || g.is_independent_set(&s))
                        })
                        .count();
                    results.push((
                        format!(
                            "S = not-adj-to-any-deg8 (incl d8 {include_deg8}, indep {require_indep}, |S|{} 3, Δ≤8 {cap})",
                            if exact { "==" } else { ">=" }
                        ),
                        c,
                    ));
                }
            }
        }
    }
    for (name, c) in &results {
        let marker = if *c == 256 { "  <<< 256 !!!" } else { "" };
        println!("{c:6}  {name}{marker}");
    }
}
