//! Shared helpers for unit tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub(crate) fn path(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (0..n.saturating_sub(1) as u32).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).unwrap()
}

pub(crate) fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
    edges.push((n as u32 - 1, 0));
    Graph::new(n, &edges).unwrap()
}

pub(crate) fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub(crate) fn empty(n: usize) -> Graph {
    Graph::new(n, &[]).unwrap()
}

pub(crate) fn random_graph(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}
