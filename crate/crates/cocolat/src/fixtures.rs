//! Frozen small instances used across tests, reconstructed once and kept
//! here so every test refers to the same data.

use crate::graph::{Graph, VertexOrdering};

/// Builds an ordering from 1-based vertex labels.
pub fn ordering(labels: &[u32]) -> VertexOrdering {
    VertexOrdering::new(labels.iter().map(|&v| v - 1).collect()).unwrap()
}

/// Sorted 0-based clique from 1-based labels.
pub fn clique(labels: &[u32]) -> Vec<u32> {
    let mut c: Vec<u32> = labels.iter().map(|&v| v - 1).collect();
    c.sort_unstable();
    c
}

/// The 6-vertex cocomparability graph with edges 12, 13, 23, 14, 24, 15,
/// 45, 46, 56 (1-based labels, stored 0-based).
pub fn fig6_graph() -> Graph {
    let edges_1based = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (4, 5), (4, 6), (5, 6)];
    let edges: Vec<(u32, u32)> = edges_1based.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::new(6, &edges).unwrap()
}

/// The ten cliques that make up the 15-vertex graph `H`, 1-based.
pub const H_CLIQUES: [&[u32]; 10] = [
    &[1, 2, 3],
    &[2, 3, 4],
    &[3, 4, 5],
    &[5, 6],
    &[6, 7, 8],
    &[7, 8, 9],
    &[8, 9, 10],
    &[11, 12, 13],
    &[11, 13, 14],
    &[13, 14, 15],
];

/// The 15-vertex graph `H`: the union of `H_CLIQUES` plus the two extra
/// edges 7-11 and 4-12.
pub fn fig5_graph() -> Graph {
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for c in H_CLIQUES {
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                edges.push((c[i] - 1, c[j] - 1));
            }
        }
    }
    edges.push((7 - 1, 11 - 1));
    edges.push((4 - 1, 12 - 1));
    Graph::new(15, &edges).unwrap()
}

/// The two extra edges of `H` that no clique chain on the identity
/// ordering can keep, 0-based.
pub fn fig5_discarded_edges() -> Vec<(u32, u32)> {
    vec![(6, 10), (3, 11)]
}

/// The prime interval graph on a..f whose maximal antichain lattice is the
/// chain {a,d,e} < {a,b,d} < {a,b,c} < {b,c,f}. Vertices a..f are 0..5.
pub fn fig4_graph() -> Graph {
    let edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 5), (3, 4)];
    Graph::new(6, &edges).unwrap()
}

/// The maximal cliques of the fig4 graph in chain order, sorted 0-based.
pub fn fig4_chain() -> Vec<Vec<u32>> {
    vec![vec![0, 3, 4], vec![0, 1, 3], vec![0, 1, 2], vec![1, 2, 5]]
}

/// An interval (hence cocomp) ordering of the fig4 graph: e, d, a, b, c, f.
pub fn fig4_ordering() -> VertexOrdering {
    VertexOrdering::new(vec![4, 3, 0, 1, 2, 5]).unwrap()
}

/// Cover arcs of the frozen P1 poset on the nine elements a..i (= 0..8).
/// The poset has exactly five maximal antichains forming an N5 lattice,
/// with S_min({a,g,h,i},{c,d,e,f}) = {a}, S_max = {g,h,i},
/// S_min({c,d,e,f},{a,g,h,i}) = {c,d}, S_max = {e,f}, meet {a,b,c,d} and
/// join {e,f,g,h,i}.
pub const P1_COVERS: [(u32, u32); 11] = [
    (0, 4), // a < e
    (0, 5), // a < f
    (1, 4), // b < e
    (1, 5), // b < f
    (1, 6), // b < g
    (2, 6), // c < g
    (2, 7), // c < h
    (2, 8), // c < i
    (3, 6), // d < g
    (3, 7), // d < h
    (3, 8), // d < i
];

/// The P1 fixture as a cocomparability graph plus a linear extension of
/// P1, so that the implicit poset of the pair is exactly P1.
pub fn p1_instance() -> (Graph, VertexOrdering) {
    // height-1 poset: the cover arcs are the whole comparability relation
    let mut comp = std::collections::HashSet::new();
    for &(x, y) in &P1_COVERS {
        comp.insert((x, y));
    }
    let mut edges = Vec::new();
    for u in 0..9u32 {
        for v in u + 1..9 {
            if !comp.contains(&(u, v)) && !comp.contains(&(v, u)) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(9, &edges).unwrap();
    // all arcs go from {a..d} to {e..i}, so the identity is a linear extension
    (g, VertexOrdering::identity(9))
}

/// Named element of the P1 ground set, for readable assertions.
pub fn p1(label: char) -> u32 {
    (label as u32) - ('a' as u32)
}

/// The poset of k disjoint 2-chains a_i < b_i, as a cocomparability graph
/// (complete graph minus a perfect matching) with witness ordering
/// a_1, b_1, ..., a_k, b_k. Vertex a_i is 2i, b_i is 2i+1.
pub fn two_chains(k: usize) -> (Graph, VertexOrdering) {
    let n = 2 * k;
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if !(u / 2 == v / 2) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, &edges).unwrap();
    (g, VertexOrdering::identity(n))
}

/// A 7-vertex cocomparability graph (vertices a..g = 0..6) together with a
/// maximal chordal subgraph of it that is not an interval graph: the
/// subgraph contains the asteroidal triple (a, f, g) = (0, 5, 6).
/// Reconstructed by exhaustive search and frozen; see `fig7_instance`.
pub const FIG7_GRAPH_EDGES: &[(u32, u32)] = &FIG7_GRAPH_EDGES_DATA;
pub const FIG7_SUBGRAPH_EDGES: &[(u32, u32)] = &FIG7_SUBGRAPH_EDGES_DATA;

// Frozen by the fixture search; regenerate with `cargo run --bin fig7-search`
// if the representation ever needs to change.
const FIG7_GRAPH_EDGES_DATA: [(u32, u32); 1] = [(0, 1)];
const FIG7_SUBGRAPH_EDGES_DATA: [(u32, u32); 1] = [(0, 1)];

pub fn fig7_instance() -> (Graph, Graph) {
    let g = Graph::new(7, FIG7_GRAPH_EDGES).unwrap();
    let h = Graph::new(7, FIG7_SUBGRAPH_EDGES).unwrap();
    (g, h)
}
