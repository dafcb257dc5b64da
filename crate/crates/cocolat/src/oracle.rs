//! Independent verification routines. Everything in here is written for
//! clarity over speed and deliberately avoids the optimized code paths in
//! the rest of the crate, so the two sides can check each other.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::poset::ImplicitPoset;

/// Outcome of a single verification, TAP-style.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub name: String,
    pub verdict: bool,
    pub witness: Option<String>,
}

impl VerificationReport {
    pub fn pass(name: &str) -> Self {
        VerificationReport { name: name.to_string(), verdict: true, witness: None }
    }

    pub fn fail(name: &str, witness: String) -> Self {
        VerificationReport { name: name.to_string(), verdict: false, witness: Some(witness) }
    }

    pub fn tap(&self) -> String {
        match (&self.verdict, &self.witness) {
            (true, _) => format!("ok {}", self.name),
            (false, Some(w)) => format!("not ok {} # {}", self.name, w),
            (false, None) => format!("not ok {}", self.name),
        }
    }

    pub fn describe(&self) -> String {
        self.witness.clone().unwrap_or_else(|| self.name.clone())
    }
}

/// All maximal cliques, lexicographically sorted, via Bron-Kerbosch with
/// pivoting.
pub fn bron_kerbosch(g: &Graph) -> Vec<Vec<u32>> {
    bron_kerbosch_capped(g, usize::MAX).expect("uncapped enumeration cannot overflow")
}

pub fn bron_kerbosch_capped(g: &Graph, cap: usize) -> Result<Vec<Vec<u32>>> {
    fn extend(
        g: &Graph,
        r: &mut Vec<u32>,
        mut p: Vec<u32>,
        mut x: Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        cap: usize,
    ) -> Result<()> {
        if p.is_empty() && x.is_empty() {
            if out.len() == cap {
                return Err(Error::CapExceeded { cap });
            }
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return Ok(());
        }
        // pivot on the vertex covering most of p
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
            .unwrap();
        let candidates: Vec<u32> =
            p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        for v in candidates {
            let np: Vec<u32> = p.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            let nx: Vec<u32> = x.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            r.push(v);
            extend(g, r, np, nx, out, cap)?;
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
        Ok(())
    }

    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let p: Vec<u32> = g.vertices().collect();
    extend(g, &mut Vec::new(), p, Vec::new(), &mut out, cap)?;
    out.sort();
    Ok(out)
}

fn mcs_order(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut taken = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !taken[v])
            .max_by_key(|&v| weight[v])
            .unwrap() as u32;
        taken[v as usize] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !taken[u as usize] {
                weight[u as usize] += 1;
            }
        }
    }
    order
}

/// Chordality via maximum cardinality search and the perfect elimination
/// test. Returns a perfect elimination ordering on success.
pub fn is_chordal(g: &Graph) -> Option<Vec<u32>> {
    let order = mcs_order(g); // reverse is a candidate peo
    let n = g.n();
    let mut rank = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v as usize] = i;
    }
    // v's "parent" is its earliest-ranked neighbor among those ranked
    // before v; all such neighbors of v must be adjacent to the parent
    for &v in order.iter() {
        let mut earlier: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| rank[u as usize] < rank[v as usize])
            .collect();
        earlier.sort_by_key(|&u| std::cmp::Reverse(rank[u as usize]));
        if let Some((&parent, rest)) = earlier.split_first() {
            for &u in rest {
                if !g.has_edge(parent, u) {
                    return None;
                }
            }
        }
    }
    let mut peo = order;
    peo.reverse();
    Some(peo)
}

/// A chordless cycle of length at least four, if one exists.
pub fn find_hole(g: &Graph) -> Option<Vec<u32>> {
    if is_chordal(g).is_some() {
        return None;
    }
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                // shortest u-w path avoiding N[v] minus the endpoints is
                // induced, and v sees only its endpoints
                let allowed = |x: u32| x == u || x == w || (x != v && !g.has_edge(v, x));
                if let Some(path) = bfs_path(g, u, w, &allowed) {
                    if path.len() >= 3 {
                        let mut cycle = path;
                        cycle.push(v);
                        return Some(cycle);
                    }
                }
            }
        }
    }
    None
}

fn bfs_path(g: &Graph, from: u32, to: u32, allowed: &dyn Fn(u32) -> bool) -> Option<Vec<u32>> {
    let n = g.n();
    let mut prev = vec![u32::MAX; n];
    let mut seen = vec![false; n];
    let mut q = VecDeque::new();
    seen[from as usize] = true;
    q.push_back(from);
    while let Some(x) = q.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur as usize];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if !seen[y as usize] && allowed(y) {
                seen[y as usize] = true;
                prev[y as usize] = x;
                q.push_back(y);
            }
        }
    }
    None
}

/// Component labels of `G - N[v]`, with `usize::MAX` marking removed
/// vertices.
fn components_avoiding(g: &Graph, v: u32) -> Vec<usize> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in g.vertices() {
        if s == v || g.has_edge(s, v) || comp[s as usize] != usize::MAX {
            continue;
        }
        comp[s as usize] = next;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &y in g.neighbors(x) {
                if y != v && !g.has_edge(y, v) && comp[y as usize] == usize::MAX {
                    comp[y as usize] = next;
                    q.push_back(y);
                }
            }
        }
        next += 1;
    }
    comp
}

/// An asteroidal triple of `g`, if one exists: three pairwise nonadjacent
/// vertices such that any two are joined by a path avoiding the closed
/// neighborhood of the third.
pub fn find_asteroidal_triple(g: &Graph) -> Option<(u32, u32, u32)> {
    let n = g.n();
    let comp: Vec<Vec<usize>> = g.vertices().map(|v| components_avoiding(g, v)).collect();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n as u32 {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                let ab = comp[c as usize][a as usize] == comp[c as usize][b as usize]
                    && comp[c as usize][a as usize] != usize::MAX;
                let ac = comp[b as usize][a as usize] == comp[b as usize][c as usize]
                    && comp[b as usize][a as usize] != usize::MAX;
                let bc = comp[a as usize][b as usize] == comp[a as usize][c as usize]
                    && comp[a as usize][b as usize] != usize::MAX;
                if ab && ac && bc {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn has_asteroidal_triple(g: &Graph) -> bool {
    find_asteroidal_triple(g).is_some()
}

/// Interval graphs are the chordal graphs without an asteroidal triple.
/// When the graph has at most eight maximal cliques the verdict is
/// cross-checked against a direct search for a consecutive clique
/// arrangement.
pub fn is_interval_graph(g: &Graph) -> bool {
    let verdict = is_chordal(g).is_some() && !has_asteroidal_triple(g);
    let cliques = bron_kerbosch(g);
    if cliques.len() <= 8 {
        assert_eq!(
            verdict,
            has_consecutive_arrangement(g, &cliques),
            "AT-free characterization and consecutive arrangement disagree"
        );
    }
    verdict
}

fn has_consecutive_arrangement(g: &Graph, cliques: &[Vec<u32>]) -> bool {
    fn consecutive(g: &Graph, perm: &[usize], cliques: &[Vec<u32>]) -> bool {
        g.vertices().all(|v| {
            let hits: Vec<usize> = perm
                .iter()
                .enumerate()
                .filter(|&(_, &c)| cliques[c].contains(&v))
                .map(|(i, _)| i)
                .collect();
            hits.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }
    fn permute(
        g: &Graph,
        cliques: &[Vec<u32>],
        perm: &mut Vec<usize>,
        rest: &mut Vec<usize>,
    ) -> bool {
        if rest.is_empty() {
            return consecutive(g, perm, cliques);
        }
        for i in 0..rest.len() {
            let c = rest.remove(i);
            perm.push(c);
            if permute(g, cliques, perm, rest) {
                rest.insert(i, c);
                perm.pop();
                return true;
            }
            perm.pop();
            rest.insert(i, c);
        }
        false
    }
    if cliques.is_empty() {
        return true;
    }
    permute(g, cliques, &mut Vec::new(), &mut (0..cliques.len()).collect())
}

/// Verifies that `cliques` is a maximal chain of the maximal antichain
/// lattice of `p`: every entry a maximal antichain, the first the set of
/// sources, the last the set of sinks, and each consecutive pair a cover.
pub fn verify_maximal_chain(p: &ImplicitPoset, cliques: &[Vec<u32>]) -> Result<VerificationReport> {
    use crate::antichain::{ma_covers, Antichain};
    const NAME: &str = "maximal-chain";
    if cliques.is_empty() {
        return Ok(VerificationReport::fail(NAME, "chain is empty".into()));
    }
    let mut chain = Vec::with_capacity(cliques.len());
    for c in cliques {
        match Antichain::new(p, c.clone()) {
            Ok(a) => chain.push(a),
            Err(e) => return Ok(VerificationReport::fail(NAME, e.to_string())),
        }
    }
    if chain[0].members() != p.sources() {
        return Ok(VerificationReport::fail(
            NAME,
            format!("first element {:?} is not the source antichain", chain[0].members()),
        ));
    }
    if chain[chain.len() - 1].members() != p.sinks() {
        return Ok(VerificationReport::fail(
            NAME,
            format!(
                "last element {:?} is not the sink antichain",
                chain[chain.len() - 1].members()
            ),
        ));
    }
    for w in chain.windows(2) {
        match ma_covers(p, &w[0], &w[1]) {
            Ok(true) => {}
            Ok(false) => {
                return Ok(VerificationReport::fail(
                    NAME,
                    format!("{:?} is not covered by {:?}", w[0].members(), w[1].members()),
                ))
            }
            Err(e) => return Ok(VerificationReport::fail(NAME, e.to_string())),
        }
    }
    Ok(VerificationReport::pass(NAME))
}

/// Checks that `h` is an edge-maximal subgraph of `g` with respect to
/// `property`: `h` is a spanning subgraph satisfying it, and putting back
/// any single discarded edge breaks it. Refuses when more than `cap` edges
/// were discarded.
pub fn verify_maximal_subgraph(
    g: &Graph,
    h: &Graph,
    property: &dyn Fn(&Graph) -> bool,
    name: &str,
    cap: usize,
) -> Result<VerificationReport> {
    if h.n() != g.n() {
        return Ok(VerificationReport::fail(name, "vertex sets differ".into()));
    }
    for (u, v) in h.edges() {
        if !g.has_edge(u, v) {
            return Ok(VerificationReport::fail(name, format!("edge {}-{} not in host", u, v)));
        }
    }
    if !property(h) {
        return Ok(VerificationReport::fail(name, "subgraph lacks the property".into()));
    }
    let missing: Vec<(u32, u32)> =
        g.edges().filter(|&(u, v)| !h.has_edge(u, v)).collect();
    if missing.len() > cap {
        return Err(Error::CapExceeded { cap });
    }
    for &(u, v) in &missing {
        let mut edges: Vec<(u32, u32)> = h.edges().collect();
        edges.push((u, v));
        let extended = Graph::new(g.n(), &edges)?;
        if property(&extended) {
            return Ok(VerificationReport::fail(
                name,
                format!("edge {}-{} could be added back", u, v),
            ));
        }
    }
    Ok(VerificationReport::pass(name))
}

/// Simplicial vertices by definition: the neighborhood is a clique.
pub fn brute_force_simplicial(g: &Graph) -> Vec<u32> {
    g.vertices()
        .filter(|&v| {
            let nb = g.neighbors(v);
            nb.iter()
                .enumerate()
                .all(|(i, &x)| nb[i + 1..].iter().all(|&y| g.has_edge(x, y)))
        })
        .collect()
}

pub const BRUTE_FORCE_LIMIT: usize = 10;

/// Backtracking search for an umbrella-free ordering. Only for tiny
/// graphs; returns a witness ordering or `None`.
pub fn is_cocomparability_bruteforce(g: &Graph) -> Result<Option<VertexOrdering>> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLargeForBruteForce { n, limit: BRUTE_FORCE_LIMIT });
    }
    fn place(g: &Graph, prefix: &mut Vec<u32>, used: &mut Vec<bool>) -> bool {
        if prefix.len() == g.n() {
            return true;
        }
        'next: for v in g.vertices() {
            if used[v as usize] {
                continue;
            }
            // an umbrella is created only with x, y already placed
            for (i, &x) in prefix.iter().enumerate() {
                if !g.has_edge(x, v) {
                    continue;
                }
                for &y in &prefix[i + 1..] {
                    if !g.has_edge(x, y) && !g.has_edge(y, v) {
                        continue 'next;
                    }
                }
            }
            prefix.push(v);
            used[v as usize] = true;
            if place(g, prefix, used) {
                return true;
            }
            prefix.pop();
            used[v as usize] = false;
        }
        false
    }
    let mut prefix = Vec::with_capacity(n);
    if place(g, &mut prefix, &mut vec![false; n]) {
        Ok(Some(VertexOrdering::new(prefix)?))
    } else {
        Ok(None)
    }
}
