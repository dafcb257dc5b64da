//! The explicit maximal-antichain lattice: enumeration, lattice order,
//! covers, interval-order detection and minimal interval extensions.

use std::fmt::Write as _;

use crate::antichain::{ma_covers, ma_leq, Antichain};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::poset::ImplicitPoset;

pub const DEFAULT_ANTICHAIN_CAP: usize = 1_000_000;

/// Triple checks during `build_lattice` are skipped above this size.
pub const DEFAULT_VALIDATION_LIMIT: usize = 512;

/// All maximal antichains of `p`, i.e. the maximal cliques of its graph,
/// in lexicographic order of their sorted member lists.
pub fn maximal_antichains(p: &ImplicitPoset) -> Result<Vec<Antichain>> {
    maximal_antichains_capped(p, DEFAULT_ANTICHAIN_CAP)
}

pub fn maximal_antichains_capped(p: &ImplicitPoset, cap: usize) -> Result<Vec<Antichain>> {
    let cliques = oracle::bron_kerbosch_capped(p.graph(), cap)?;
    Ok(cliques.into_iter().map(Antichain::new_unchecked).collect())
}

/// An explicit finite lattice over maximal antichains. `leq` is the full
/// relation, `covers` its transitive reduction.
pub struct MALattice {
    elements: Vec<Antichain>,
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    bottom: usize,
    top: usize,
}

impl MALattice {
    pub fn elements(&self) -> &[Antichain] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn index_of(&self, members: &[u32]) -> Option<usize> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        self.elements.iter().position(|a| a.members() == sorted)
    }

    /// Greatest lower bound from the leq table alone.
    pub fn meet_index(&self, i: usize, j: usize) -> Result<usize> {
        let lower: Vec<usize> =
            (0..self.len()).filter(|&k| self.leq[k][i] && self.leq[k][j]).collect();
        let maximal: Vec<usize> = lower
            .iter()
            .copied()
            .filter(|&k| !lower.iter().any(|&l| l != k && self.leq[k][l]))
            .collect();
        match maximal.as_slice() {
            [k] => Ok(*k),
            _ => Err(Error::NotALattice(format!(
                "elements {} and {} have {} maximal lower bounds",
                i,
                j,
                maximal.len()
            ))),
        }
    }

    /// Least upper bound from the leq table alone.
    pub fn join_index(&self, i: usize, j: usize) -> Result<usize> {
        let upper: Vec<usize> =
            (0..self.len()).filter(|&k| self.leq[i][k] && self.leq[j][k]).collect();
        let minimal: Vec<usize> = upper
            .iter()
            .copied()
            .filter(|&k| !upper.iter().any(|&l| l != k && self.leq[l][k]))
            .collect();
        match minimal.as_slice() {
            [k] => Ok(*k),
            _ => Err(Error::NotALattice(format!(
                "elements {} and {} have {} minimal upper bounds",
                i,
                j,
                minimal.len()
            ))),
        }
    }

    /// Elements comparable to every element of the lattice.
    pub fn fully_comparable(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| self.leq[i][j] || self.leq[j][i]))
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.leq[i][j] || self.leq[j][i]))
    }

    /// Builds a lattice directly from elements and a leq table, without an
    /// underlying poset. Used for hand-made lattices in tests and checks.
    pub fn from_parts(elements: Vec<Vec<u32>>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let elements: Vec<Antichain> =
            elements.into_iter().map(Antichain::new_unchecked).collect();
        let n = elements.len();
        assert!(leq.len() == n && leq.iter().all(|row| row.len() == n));
        let covers = transitive_reduction(&leq);
        let (bottom, top) = extremes(&leq)?;
        let lat = MALattice { elements, leq, covers, bottom, top };
        for i in 0..n {
            for j in i + 1..n {
                lat.meet_index(i, j)?;
                lat.join_index(i, j)?;
            }
        }
        Ok(lat)
    }
}

fn transitive_reduction(leq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = leq.len();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq[i][j] {
                continue;
            }
            let direct =
                !(0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
            if direct {
                covers.push((i, j));
            }
        }
    }
    covers
}

fn extremes(leq: &[Vec<bool>]) -> Result<(usize, usize)> {
    let n = leq.len();
    let bottoms: Vec<usize> = (0..n).filter(|&i| (0..n).all(|j| leq[i][j])).collect();
    let tops: Vec<usize> = (0..n).filter(|&i| (0..n).all(|j| leq[j][i])).collect();
    match (bottoms.as_slice(), tops.as_slice()) {
        ([b], [t]) => Ok((*b, *t)),
        _ => Err(Error::NotALattice("no unique bottom/top element".into())),
    }
}

fn leq_table(p: &ImplicitPoset, elements: &[Antichain]) -> Vec<Vec<bool>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        elements
            .par_iter()
            .map(|a| elements.iter().map(|b| ma_leq(p, a, b)).collect())
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        elements
            .iter()
            .map(|a| elements.iter().map(|b| ma_leq(p, a, b)).collect())
            .collect()
    }
}

/// Enumerates the maximal antichains of `p` and assembles the lattice.
/// When the lattice has at most `DEFAULT_VALIDATION_LIMIT` elements the
/// lattice axioms (unique glb/lub) and the consecutiveness of all triples
/// are verified.
pub fn build_lattice(p: &ImplicitPoset) -> Result<MALattice> {
    build_lattice_capped(p, DEFAULT_ANTICHAIN_CAP, DEFAULT_VALIDATION_LIMIT)
}

pub fn build_lattice_capped(
    p: &ImplicitPoset,
    cap: usize,
    validation_limit: usize,
) -> Result<MALattice> {
    let elements = maximal_antichains_capped(p, cap)?;
    let leq = leq_table(p, &elements);
    let covers = transitive_reduction(&leq);
    let (bottom, top) = if elements.is_empty() {
        return Err(Error::NotALattice("empty ground set has no maximal antichain".into()));
    } else {
        extremes(&leq)?
    };
    let lat = MALattice { elements, leq, covers, bottom, top };
    if lat.len() <= validation_limit {
        validate(p, &lat)?;
    }
    Ok(lat)
}

fn validate(p: &ImplicitPoset, lat: &MALattice) -> Result<()> {
    let n = lat.len();
    for i in 0..n {
        for j in i + 1..n {
            let meet = lat.meet_index(i, j)?;
            let join = lat.join_index(i, j)?;
            let alg_meet = crate::antichain::ma_meet(p, &lat.elements[i], &lat.elements[j]);
            let alg_join = crate::antichain::ma_join(p, &lat.elements[i], &lat.elements[j]);
            if alg_meet != lat.elements[meet] || alg_join != lat.elements[join] {
                return Err(Error::NotALattice(format!(
                    "meet/join of elements {} and {} disagree with the leq table",
                    i, j
                )));
            }
        }
    }
    // consecutiveness on all ordered triples
    for i in 0..n {
        for j in 0..n {
            if !lat.leq(i, j) {
                continue;
            }
            for k in 0..n {
                if !lat.leq(j, k) {
                    continue;
                }
                let b = &lat.elements[j];
                let violated = lat.elements[i]
                    .members()
                    .iter()
                    .any(|&x| lat.elements[k].contains(x) && !b.contains(x));
                if violated {
                    return Err(Error::NotALattice(format!(
                        "consecutiveness fails on triple ({}, {}, {})",
                        i, j, k
                    )));
                }
            }
        }
    }
    Ok(())
}

/// `P` is an interval order iff its maximal antichain lattice is a chain,
/// iff `P` has no 2+2 suborder. Both criteria are evaluated when the
/// lattice is enumerable and must agree.
pub fn is_interval_order(p: &ImplicitPoset) -> Result<bool> {
    let free_of_two_plus_two = !has_two_plus_two(p);
    if let Ok(lat) = build_lattice(p) {
        let chain = lat.is_chain();
        assert_eq!(
            chain, free_of_two_plus_two,
            "chain criterion and 2+2 criterion disagree"
        );
    }
    Ok(free_of_two_plus_two)
}

fn has_two_plus_two(p: &ImplicitPoset) -> bool {
    let n = p.n() as u32;
    let pairs: Vec<(u32, u32)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| p.less(a, b))
        .collect();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[i + 1..] {
            if a != c
                && a != d
                && b != c
                && b != d
                && !p.comparable(a, c)
                && !p.comparable(a, d)
                && !p.comparable(b, c)
                && !p.comparable(b, d)
            {
                return true;
            }
        }
    }
    false
}

/// Per-vertex clique-index intervals induced by a maximal chain of the
/// lattice; 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRepresentation {
    pub first: Vec<usize>,
    pub last: Vec<usize>,
}

impl IntervalRepresentation {
    /// The interval order: `x` before `y` iff the interval of `x` ends
    /// strictly before the interval of `y` begins.
    pub fn before(&self, x: u32, y: u32) -> bool {
        self.last[x as usize] < self.first[y as usize]
    }
}

/// The minimal interval extension of `P` corresponding to a maximal chain
/// of its lattice. Rejects chains that are not maximal.
pub fn minimal_interval_extension(
    p: &ImplicitPoset,
    chain: &[Antichain],
) -> Result<IntervalRepresentation> {
    let cliques: Vec<Vec<u32>> = chain.iter().map(|a| a.members().to_vec()).collect();
    let report = oracle::verify_maximal_chain(p, &cliques)?;
    if !report.verdict {
        return Err(Error::ChainNotMaximal(report.describe()));
    }
    let n = p.n();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0usize; n];
    for (i, c) in chain.iter().enumerate() {
        for &v in c.members() {
            let v = v as usize;
            first[v] = first[v].min(i + 1);
            last[v] = last[v].max(i + 1);
        }
    }
    Ok(IntervalRepresentation { first, last })
}

/// Per-condition report for the lattice characterization checks.
#[derive(Clone, Debug)]
pub struct ConditionsReport {
    pub consecutiveness: bool,
    pub consecutiveness_witness: Option<(usize, usize, usize)>,
    pub union_containment: bool,
    pub union_witness: Option<(usize, usize)>,
    pub intersection_containment: bool,
    pub intersection_witness: Option<(usize, usize)>,
}

impl ConditionsReport {
    pub fn all(&self) -> bool {
        self.consecutiveness && self.union_containment && self.intersection_containment
    }
}

/// Checks the three characterization conditions on a lattice over the
/// maximal cliques of `g`: (i) consecutiveness of comparable triples,
/// (ii) A u B inside join u meet, (iii) A n B inside both join and meet.
pub fn check_lattice_conditions(_g: &Graph, lat: &MALattice) -> Result<ConditionsReport> {
    let n = lat.len();
    let mut report = ConditionsReport {
        consecutiveness: true,
        consecutiveness_witness: None,
        union_containment: true,
        union_witness: None,
        intersection_containment: true,
        intersection_witness: None,
    };
    'outer: for i in 0..n {
        for j in 0..n {
            if !lat.leq(i, j) {
                continue;
            }
            for k in 0..n {
                if !lat.leq(j, k) {
                    continue;
                }
                let bad = lat.elements()[i]
                    .members()
                    .iter()
                    .any(|&x| lat.elements()[k].contains(x) && !lat.elements()[j].contains(x));
                if bad {
                    report.consecutiveness = false;
                    report.consecutiveness_witness = Some((i, j, k));
                    break 'outer;
                }
            }
        }
    }
    'pairs: for i in 0..n {
        for j in 0..n {
            let meet = lat.meet_index(i, j)?;
            let join = lat.join_index(i, j)?;
            if report.union_containment {
                let bad = lat.elements()[i]
                    .members()
                    .iter()
                    .chain(lat.elements()[j].members())
                    .any(|&x| {
                        !lat.elements()[meet].contains(x) && !lat.elements()[join].contains(x)
                    });
                if bad {
                    report.union_containment = false;
                    report.union_witness = Some((i, j));
                }
            }
            if report.intersection_containment {
                let bad = lat.elements()[i].members().iter().any(|&x| {
                    lat.elements()[j].contains(x)
                        && !(lat.elements()[meet].contains(x)
                            && lat.elements()[join].contains(x))
                });
                if bad {
                    report.intersection_containment = false;
                    report.intersection_witness = Some((i, j));
                }
            }
            if !report.union_containment && !report.intersection_containment {
                break 'pairs;
            }
        }
    }
    Ok(report)
}

fn label(g: &Graph, a: &Antichain) -> String {
    let names: Vec<String> = a.members().iter().map(|&v| g.name(v)).collect();
    format!("{{{}}}", names.join(","))
}

/// Hasse diagram of the lattice, bottom at rank 0.
pub fn lattice_to_dot(g: &Graph, lat: &MALattice) -> String {
    let mut out = String::from("digraph {\n  rankdir=BT;\n");
    for (i, a) in lat.elements().iter().enumerate() {
        let _ = writeln!(out, "  e{} [label=\"{}\"];", i, label(g, a));
    }
    for &(i, j) in lat.covers() {
        let _ = writeln!(out, "  e{} -> e{};", i, j);
    }
    out.push_str("}\n");
    out
}

/// Text dump: one element per line, then the cover pairs.
pub fn lattice_to_text(g: &Graph, lat: &MALattice) -> String {
    let mut out = String::new();
    for (i, a) in lat.elements().iter().enumerate() {
        let _ = writeln!(out, "{}: {}", i, label(g, a));
    }
    for &(i, j) in lat.covers() {
        let _ = writeln!(out, "{} < {}", i, j);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, p1};
    use crate::graph::VertexOrdering;
    use crate::testutil::empty;

    #[test]
    fn chain_poset_antichains_are_singletons() {
        let g = empty(4);
        let p = ImplicitPoset::new(&g, VertexOrdering::identity(4)).unwrap();
        let mas = maximal_antichains(&p).unwrap();
        assert_eq!(mas.len(), 4);
        assert!(mas.iter().all(|a| a.len() == 1));
    }

    #[test]
    fn two_chains_count() {
        for k in 1..=10 {
            let (g, w) = fixtures::two_chains(k);
            let p = ImplicitPoset::new(&g, w).unwrap();
            assert_eq!(maximal_antichains(&p).unwrap().len(), 1usize << k);
        }
    }

    #[test]
    fn fig4_antichains() {
        let g = fixtures::fig4_graph();
        let p = ImplicitPoset::new(&g, fixtures::fig4_ordering()).unwrap();
        let mas = maximal_antichains(&p).unwrap();
        let got: Vec<&[u32]> = mas.iter().map(|a| a.members()).collect();
        let mut want = fixtures::fig4_chain();
        want.sort();
        assert_eq!(got, want.iter().map(|c| c.as_slice()).collect::<Vec<_>>());
    }

    #[test]
    fn fig4_lattice_is_chain() {
        let g = fixtures::fig4_graph();
        let p = ImplicitPoset::new(&g, fixtures::fig4_ordering()).unwrap();
        let lat = build_lattice(&p).unwrap();
        assert!(lat.is_chain());
        assert_eq!(lat.len(), 4);
        assert!(is_interval_order(&p).unwrap());
    }

    #[test]
    fn two_chains_diamond() {
        let (g, w) = fixtures::two_chains(2);
        let p = ImplicitPoset::new(&g, w).unwrap();
        let lat = build_lattice(&p).unwrap();
        assert_eq!(lat.len(), 4);
        assert_eq!(lat.elements()[lat.bottom()].members(), &[0, 2]);
        assert_eq!(lat.elements()[lat.top()].members(), &[1, 3]);
        assert_eq!(lat.covers().len(), 4);
        assert_eq!(lat.fully_comparable().len(), 2);
        assert!(!is_interval_order(&p).unwrap());
    }

    #[test]
    fn p1_lattice_is_n5() {
        let (g, w) = fixtures::p1_instance();
        let p = ImplicitPoset::new(&g, w).unwrap();
        let lat = build_lattice(&p).unwrap();
        assert_eq!(lat.len(), 5);
        // N5: exactly two incomparable pairs, sharing one common element
        let mut inc = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                if !lat.leq(i, j) && !lat.leq(j, i) {
                    inc.push((i, j));
                }
            }
        }
        assert_eq!(inc.len(), 2);
        let (a, b) = inc[0];
        let (c, d) = inc[1];
        let shared = [a, b].iter().filter(|x| [c, d].contains(x)).count();
        assert_eq!(shared, 1);
        // non-distributivity shows up as a failed distributive-law triple
        let dist_fails = (0..5).any(|x| {
            (0..5).any(|y| {
                (0..5).any(|z| {
                    let lhs = lat
                        .meet_index(x, lat.join_index(y, z).unwrap())
                        .unwrap();
                    let rhs = lat
                        .join_index(
                            lat.meet_index(x, y).unwrap(),
                            lat.meet_index(x, z).unwrap(),
                        )
                        .unwrap();
                    lhs != rhs
                })
            })
        });
        assert!(dist_fails);
    }

    #[test]
    fn two_plus_two_detected() {
        // the 2+2 poset: a<c, b<d, everything else incomparable
        let g = crate::graph::Graph::new(4, &[(0, 1), (0, 3), (1, 2), (2, 3)]).unwrap();
        let p = ImplicitPoset::new(&g, VertexOrdering::identity(4)).unwrap();
        assert!(p.less(0, 2) && p.less(1, 3));
        assert!(!is_interval_order(&p).unwrap());
    }

    #[test]
    fn chain_poset_is_interval_order() {
        let g = empty(5);
        let p = ImplicitPoset::new(&g, VertexOrdering::identity(5)).unwrap();
        assert!(is_interval_order(&p).unwrap());
    }

    #[test]
    fn fig6_not_interval_order() {
        let g = fixtures::fig6_graph();
        let p = ImplicitPoset::new(&g, fixtures::ordering(&[1, 3, 2, 4, 5, 6])).unwrap();
        assert!(!is_interval_order(&p).unwrap());
    }

    #[test]
    fn antichain_cap() {
        let (g, w) = fixtures::two_chains(8);
        let p = ImplicitPoset::new(&g, w).unwrap();
        assert!(maximal_antichains_capped(&p, 100).is_err());
    }

    #[test]
    fn fig6_extension_intervals() {
        let g = fixtures::fig6_graph();
        let p = ImplicitPoset::new(&g, fixtures::ordering(&[1, 3, 2, 4, 5, 6])).unwrap();
        let chain: Vec<Antichain> = [
            fixtures::clique(&[1, 2, 3]),
            fixtures::clique(&[1, 2, 4]),
            fixtures::clique(&[1, 4, 5]),
            fixtures::clique(&[4, 5, 6]),
        ]
        .into_iter()
        .map(|c| Antichain::new(&p, c).unwrap())
        .collect();
        let rep = minimal_interval_extension(&p, &chain).unwrap();
        // paper chain gives 1:[1,3], 2:[1,2], 3:[1,1], 4:[2,4], 5:[3,4], 6:[4,4]
        assert_eq!(rep.first, vec![1, 1, 1, 2, 3, 4]);
        assert_eq!(rep.last, vec![3, 2, 1, 4, 4, 4]);
        assert!(rep.before(2, 4) && rep.before(2, 5) && rep.before(1, 5));
        // extension of P
        for x in g.vertices() {
            for y in g.vertices() {
                if p.less(x, y) {
                    assert!(rep.before(x, y));
                }
            }
        }
        // the interval order is 2+2-free by construction of intervals
        let non_maximal: Vec<Antichain> = chain[..3].to_vec();
        assert!(minimal_interval_extension(&p, &non_maximal).is_err());
    }

    #[test]
    fn conditions_on_built_lattices() {
        let (g, w) = fixtures::p1_instance();
        let p = ImplicitPoset::new(&g, w).unwrap();
        let lat = build_lattice(&p).unwrap();
        let report = check_lattice_conditions(&g, &lat).unwrap();
        assert!(report.all());
    }

    #[test]
    fn fig4_artificial_diamond_fails_condition_iii() {
        // the diamond arrangement of the four cliques of the fig4 graph:
        // {a,d,e} at the bottom, {a,b,c} and {a,b,d} incomparable,
        // {c,b,f} on top
        let g = fixtures::fig4_graph();
        let elements = vec![
            vec![0, 3, 4], // a,d,e
            vec![0, 1, 2], // a,b,c
            vec![0, 1, 3], // a,b,d
            vec![1, 2, 5], // b,c,f
        ];
        let leq = vec![
            vec![true, true, true, true],
            vec![false, true, false, true],
            vec![false, false, true, true],
            vec![false, false, false, true],
        ];
        let lat = MALattice::from_parts(elements, leq).unwrap();
        let report = check_lattice_conditions(&g, &lat).unwrap();
        assert!(report.consecutiveness);
        assert!(report.union_containment);
        assert!(!report.intersection_containment);
    }

    #[test]
    fn chain_lattice_satisfies_all_conditions() {
        let g = fixtures::fig4_graph();
        let p = ImplicitPoset::new(&g, fixtures::fig4_ordering()).unwrap();
        let lat = build_lattice(&p).unwrap();
        let report = check_lattice_conditions(&g, &lat).unwrap();
        assert!(report.all());
    }

    #[test]
    fn lattice_text_and_dot() {
        let (g, w) = fixtures::two_chains(2);
        let p = ImplicitPoset::new(&g, w).unwrap();
        let lat = build_lattice(&p).unwrap();
        let text = lattice_to_text(&g, &lat);
        assert_eq!(text.lines().filter(|l| l.contains('<')).count(), 4);
        let dot = lattice_to_dot(&g, &lat);
        assert!(dot.contains("->"));
    }

    #[test]
    fn p1_meet_join_match_table_oracle() {
        let (g, w) = fixtures::p1_instance();
        let p = ImplicitPoset::new(&g, w).unwrap();
        let lat = build_lattice(&p).unwrap();
        for i in 0..lat.len() {
            for j in 0..lat.len() {
                let meet = lat.meet_index(i, j).unwrap();
                let join = lat.join_index(i, j).unwrap();
                let am = crate::antichain::ma_meet(&p, &lat.elements()[i], &lat.elements()[j]);
                let aj = crate::antichain::ma_join(&p, &lat.elements()[i], &lat.elements()[j]);
                assert_eq!(&am, &lat.elements()[meet]);
                assert_eq!(&aj, &lat.elements()[join]);
            }
        }
        let m = lat.index_of(&[p1('a'), p1('b'), p1('c'), p1('d')]).unwrap();
        assert_eq!(lat.bottom(), m);
    }
}
