//! Undirected simple graphs with dense vertex ids and vertex orderings.

use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Edge queries on graphs with at most this many vertices go through a
/// bit-matrix instead of binary search.
const BITMATRIX_LIMIT: usize = 4096;

/// A finite, simple, undirected graph. Vertices are `0..n`. Adjacency lists
/// are kept sorted so neighborhood intersections run in `O(deg)`.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: usize,
    bits: Option<Vec<u64>>,
    names: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        Self::build(n, edges, false, None)
    }

    /// Strict mode rejects duplicate edges instead of deduplicating them.
    /// Self-loops are rejected in both modes.
    pub fn build(
        n: usize,
        edges: &[(u32, u32)],
        strict: bool,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            assert!((u as usize) < n && (v as usize) < n, "vertex id out of range");
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut m = 0usize;
        for list in adj.iter_mut() {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if strict && list.len() != before {
                let u = list[0];
                return Err(Error::DuplicateEdge(u, u));
            }
            m += list.len();
        }
        m /= 2;
        let mut g = Graph { adj, m, bits: None, names };
        if n <= BITMATRIX_LIMIT {
            let mut bits = vec![0u64; (n * n + 63) / 64];
            for u in 0..n {
                for &v in &g.adj[u] {
                    let i = u * n + v as usize;
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
            g.bits = Some(bits);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if u == v {
            return false;
        }
        match &self.bits {
            Some(bits) => {
                let i = u as usize * self.n() + v as usize;
                bits[i / 64] >> (i % 64) & 1 == 1
            }
            None => self.adj[u as usize].binary_search(&v).is_ok(),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.n() as u32
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn name(&self, v: u32) -> String {
        match &self.names {
            Some(names) => names[v as usize].clone(),
            None => v.to_string(),
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::build(n, &edges, false, self.names.clone()).expect("complement is simple")
    }

    /// Induced subgraph together with the relabeling: `map[i]` is the
    /// original id of the new vertex `i`.
    pub fn induced_subgraph(&self, s: &[u32]) -> (Graph, Vec<u32>) {
        let mut map: Vec<u32> = s.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut inv = vec![u32::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        let mut edges = Vec::new();
        for &v in &map {
            for &w in self.neighbors(v) {
                if v < w && inv[w as usize] != u32::MAX {
                    edges.push((inv[v as usize], inv[w as usize]));
                }
            }
        }
        let names = self.names.as_ref().map(|ns| {
            map.iter().map(|&v| ns[v as usize].clone()).collect()
        });
        let g = Graph::build(map.len(), &edges, false, names).expect("induced subgraph is simple");
        (g, map)
    }

    /// Edge-list format: first line `n m`, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", u, v);
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  {};", v);
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {} -- {};", u, v);
        }
        out.push_str("}\n");
        out
    }
}

/// Reads either the plain edge-list format (`n m` header, 0-based `u v`
/// lines) or a DIMACS-like format (`p edge n m` header, 1-based `e u v`
/// lines). Comment lines starting with `c` or `#` are skipped.
pub fn load_graph<R: BufRead>(reader: R, strict: bool) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut dimacs = false;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
            continue;
        }
        let parse = |tok: &str| -> Result<u32> {
            tok.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("expected an integer, found {:?}", tok),
            })
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if n.is_none() {
            if fields.first() == Some(&"p") {
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected header 'p edge n m'".into(),
                    });
                }
                n = Some(parse(fields[2])? as usize);
                dimacs = true;
            } else {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected header 'n m'".into(),
                    });
                }
                n = Some(parse(fields[0])? as usize);
            }
            continue;
        }
        let n = n.unwrap();
        let (u, v) = if dimacs {
            if fields.len() != 3 || fields[0] != "e" {
                return Err(Error::Parse { line: lineno, msg: "expected 'e u v'".into() });
            }
            let (u, v) = (parse(fields[1])?, parse(fields[2])?);
            if u == 0 || v == 0 {
                return Err(Error::Parse { line: lineno, msg: "DIMACS ids are 1-based".into() });
            }
            (u - 1, v - 1)
        } else {
            if fields.len() != 2 {
                return Err(Error::Parse { line: lineno, msg: "expected 'u v'".into() });
            }
            (parse(fields[0])?, parse(fields[1])?)
        };
        if u as usize >= n || v as usize >= n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex id {} out of range 0..{}", u.max(v), n),
            });
        }
        edges.push((u, v));
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "empty input".into() })?;
    Graph::build(n, &edges, strict, None)
}

/// A permutation of the vertex set with `O(1)` position lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<u32>,
    position: Vec<u32>,
}

impl VertexOrdering {
    pub fn new(order: Vec<u32>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![u32::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v as usize >= n || position[v as usize] != u32::MAX {
                return Err(Error::NotAPermutation);
            }
            position[v as usize] = i as u32;
        }
        Ok(VertexOrdering { order, position })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering::new((0..n as u32).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The vertex at position `i` (0-based).
    pub fn at(&self, i: usize) -> u32 {
        self.order[i]
    }

    pub fn position(&self, v: u32) -> usize {
        self.position[v as usize] as usize
    }

    pub fn before(&self, u: u32, v: u32) -> bool {
        self.position[u as usize] < self.position[v as usize]
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn reversed(&self) -> VertexOrdering {
        let mut order = self.order.clone();
        order.reverse();
        VertexOrdering::new(order).unwrap()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.order.iter().copied()
    }
}

pub fn load_ordering<R: BufRead>(reader: R, n: usize) -> Result<VertexOrdering> {
    let mut order = Vec::with_capacity(n);
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        for tok in line.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                msg: format!("expected an integer, found {:?}", tok),
            })?;
            order.push(v);
        }
    }
    if order.len() != n {
        return Err(Error::SizeMismatch { graph: n, ordering: order.len() });
    }
    VertexOrdering::new(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{complete, path};
    use proptest::prelude::*;

    #[test]
    fn load_p3() {
        let g = load_graph("3 2\n0 1\n1 2".as_bytes(), false).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn load_single_vertex() {
        let g = load_graph("1 0".as_bytes(), false).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn load_dimacs() {
        let g = load_graph("c comment\np edge 3 2\ne 1 2\ne 2 3".as_bytes(), false).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
    }

    #[test]
    fn load_rejects_loops_and_bad_lines() {
        assert!(load_graph("2 1\n0 0".as_bytes(), false).is_err());
        assert!(load_graph("2 1\n0".as_bytes(), false).is_err());
        assert!(load_graph("2 1\n0 5".as_bytes(), false).is_err());
    }

    #[test]
    fn duplicate_edges_dedupe_by_default() {
        let g = load_graph("2 2\n0 1\n1 0".as_bytes(), false).unwrap();
        assert_eq!(g.m(), 1);
        assert!(load_graph("2 2\n0 1\n1 0".as_bytes(), true).is_err());
    }

    #[test]
    fn complement_small() {
        let k3 = complete(3);
        assert_eq!(k3.complement().m(), 0);
        let p3 = path(3);
        let c = p3.complement();
        assert_eq!(c.m(), 1);
        assert!(c.has_edge(0, 2));
    }

    #[test]
    fn induced() {
        let k4 = complete(4);
        let (h, map) = k4.induced_subgraph(&[0, 2, 3]);
        assert_eq!((h.n(), h.m()), (3, 3));
        assert_eq!(map, vec![0, 2, 3]);
        let g = path(4);
        let (h, _) = g.induced_subgraph(&[0, 1, 2, 3]);
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn empty_graph_ops() {
        let g = Graph::new(0, &[]).unwrap();
        assert_eq!(g.complement().n(), 0);
        assert_eq!(g.induced_subgraph(&[]).0.n(), 0);
    }

    #[test]
    fn ordering_basics() {
        let o = VertexOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.position(2), 0);
        assert!(o.before(2, 1));
        assert!(VertexOrdering::new(vec![0, 0, 1]).is_err());
    }

    proptest! {
        #[test]
        fn complement_is_involution(n in 0usize..12, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let cc = g.complement().complement();
            prop_assert_eq!(g.edges(), cc.edges());
            prop_assert_eq!(g.m() + g.complement().m(), n * n.saturating_sub(1) / 2);
        }

        #[test]
        fn edge_list_roundtrip(n in 1usize..10, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let g2 = load_graph(g.to_edge_list().as_bytes(), false).unwrap();
            prop_assert_eq!(g.n(), g2.n());
            prop_assert_eq!(g.edges(), g2.edges());
        }
    }
}
