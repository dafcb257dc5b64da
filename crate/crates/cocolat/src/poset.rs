//! The implicit poset induced by a cocomp ordering: the transitive
//! orientation of the complement read off the ordering and the adjacency.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};

/// Returns `None` when the ordering is umbrella-free, otherwise one
/// umbrella witness `(x, y, z)` with `x <_s y <_s z`, `xz` an edge and
/// `xy`, `yz` non-edges.
pub fn find_umbrella(g: &Graph, sigma: &VertexOrdering) -> Result<Option<(u32, u32, u32)>> {
    check_sizes(g, sigma)?;
    for x in g.vertices() {
        for &z in g.neighbors(x) {
            if !sigma.before(x, z) {
                continue;
            }
            for p in sigma.position(x) + 1..sigma.position(z) {
                let y = sigma.at(p);
                if !g.has_edge(x, y) && !g.has_edge(y, z) {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_cocomp_ordering(g: &Graph, sigma: &VertexOrdering) -> Result<bool> {
    Ok(find_umbrella(g, sigma)?.is_none())
}

/// Returns `None` when the ordering is an interval ordering, otherwise a
/// witness `(x, y, z)` with `x <_s y <_s z`, `xz` an edge and `xy` a
/// non-edge.
pub fn find_interval_violation(
    g: &Graph,
    sigma: &VertexOrdering,
) -> Result<Option<(u32, u32, u32)>> {
    check_sizes(g, sigma)?;
    for x in g.vertices() {
        for &z in g.neighbors(x) {
            if !sigma.before(x, z) {
                continue;
            }
            for p in sigma.position(x) + 1..sigma.position(z) {
                let y = sigma.at(p);
                if !g.has_edge(x, y) {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_interval_ordering(g: &Graph, sigma: &VertexOrdering) -> Result<bool> {
    Ok(find_interval_violation(g, sigma)?.is_none())
}

fn check_sizes(g: &Graph, sigma: &VertexOrdering) -> Result<()> {
    if g.n() != sigma.len() {
        return Err(Error::SizeMismatch { graph: g.n(), ordering: sigma.len() });
    }
    Ok(())
}

/// `P_sigma`: `x <_P y` iff `x <_sigma y` and `xy` is a non-edge. The
/// relation is transitive exactly when `sigma` is a cocomp ordering, so the
/// constructor verifies that unless explicitly trusted.
pub struct ImplicitPoset<'a> {
    graph: &'a Graph,
    order: VertexOrdering,
}

impl<'a> ImplicitPoset<'a> {
    pub fn new(graph: &'a Graph, order: VertexOrdering) -> Result<Self> {
        if let Some((x, y, z)) = find_umbrella(graph, &order)? {
            return Err(Error::NotCocomp(x, y, z));
        }
        Ok(ImplicitPoset { graph, order })
    }

    /// Skips the umbrella scan. Only sound when `order` is already known
    /// to be a cocomp ordering.
    pub fn new_trusted(graph: &'a Graph, order: VertexOrdering) -> Result<Self> {
        check_sizes(graph, &order)?;
        Ok(ImplicitPoset { graph, order })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn order(&self) -> &VertexOrdering {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Strict order: `x <_P y`.
    pub fn less(&self, x: u32, y: u32) -> bool {
        x != y && self.order.before(x, y) && !self.graph.has_edge(x, y)
    }

    pub fn leq(&self, x: u32, y: u32) -> bool {
        x == y || self.less(x, y)
    }

    pub fn comparable(&self, x: u32, y: u32) -> bool {
        x != y && !self.graph.has_edge(x, y)
    }

    pub fn incomparable(&self, x: u32, y: u32) -> bool {
        x != y && self.graph.has_edge(x, y)
    }

    /// `x` is covered by `y` in `P`.
    pub fn covers(&self, x: u32, y: u32) -> bool {
        self.less(x, y)
            && !self.graph.vertices().any(|z| self.less(x, z) && self.less(z, y))
    }

    /// Maximal elements of the subposet induced by `s`.
    pub fn max_of(&self, s: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = s
            .iter()
            .copied()
            .filter(|&v| !s.iter().any(|&u| self.less(v, u)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Minimal elements of the subposet induced by `s`.
    pub fn min_of(&self, s: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = s
            .iter()
            .copied()
            .filter(|&v| !s.iter().any(|&u| self.less(u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Elements outside `s` incomparable to every element of `s`.
    pub fn inc_of(&self, s: &[u32]) -> Vec<u32> {
        self.graph
            .vertices()
            .filter(|&v| !s.contains(&v) && s.iter().all(|&u| !self.comparable(v, u)))
            .collect()
    }

    /// Sources of `P` (the minimal elements of the whole ground set).
    pub fn sources(&self) -> Vec<u32> {
        let all: Vec<u32> = self.graph.vertices().collect();
        self.min_of(&all)
    }

    /// Sinks of `P` (the maximal elements of the whole ground set).
    pub fn sinks(&self) -> Vec<u32> {
        let all: Vec<u32> = self.graph.vertices().collect();
        self.max_of(&all)
    }
}
