//! Maximal antichains of an implicit poset and the algebra on them:
//! S_min / S_max decomposition, the lattice order, meet, join and covers.

use crate::error::{Error, Result};
use crate::poset::ImplicitPoset;

/// A maximal antichain of `P`, i.e. a maximal clique of the underlying
/// cocomparability graph. Members are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Antichain {
    members: Vec<u32>,
}

impl Antichain {
    /// Validates that `members` is a maximal antichain of `p`.
    pub fn new(p: &ImplicitPoset, mut members: Vec<u32>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        for &v in &members {
            if v as usize >= p.n() {
                return Err(Error::UnknownVertex(v));
            }
        }
        let pairwise_incomparable = members
            .iter()
            .enumerate()
            .all(|(i, &x)| members[i + 1..].iter().all(|&y| !p.comparable(x, y)));
        // maximal iff every vertex outside is comparable to some member
        let maximal = p
            .graph()
            .vertices()
            .filter(|v| !members.contains(v))
            .all(|v| members.iter().any(|&x| p.comparable(v, x)));
        if !pairwise_incomparable || !maximal || (members.is_empty() && p.n() > 0) {
            let listing =
                members.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
            return Err(Error::NotMaximalAntichain(listing));
        }
        Ok(Antichain { members })
    }

    /// Skips validation; for internal use on sets already known maximal.
    pub(crate) fn new_unchecked(mut members: Vec<u32>) -> Self {
        members.sort_unstable();
        Antichain { members }
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn difference(&self, other: &Antichain) -> Vec<u32> {
        self.members.iter().copied().filter(|&v| !other.contains(v)).collect()
    }

    fn intersection(&self, other: &Antichain) -> Vec<u32> {
        self.members.iter().copied().filter(|&v| other.contains(v)).collect()
    }
}

/// `S_min(A,B)`: the elements of `A - B` below something in `B - A`.
pub fn s_min(p: &ImplicitPoset, a: &Antichain, b: &Antichain) -> Vec<u32> {
    let b_minus_a = b.difference(a);
    a.difference(b)
        .into_iter()
        .filter(|&x| b_minus_a.iter().any(|&y| p.less(x, y)))
        .collect()
}

/// `S_max(A,B)`: the elements of `A - B` above something in `B - A`.
pub fn s_max(p: &ImplicitPoset, a: &Antichain, b: &Antichain) -> Vec<u32> {
    let b_minus_a = b.difference(a);
    a.difference(b)
        .into_iter()
        .filter(|&x| b_minus_a.iter().any(|&y| p.less(y, x)))
        .collect()
}

/// The lattice order on maximal antichains. The forward and the reversed
/// formulation are both evaluated; they must agree on maximal antichains.
pub fn ma_leq(p: &ImplicitPoset, a: &Antichain, b: &Antichain) -> bool {
    let forward = a
        .members()
        .iter()
        .all(|&x| b.members().iter().any(|&y| p.leq(x, y)));
    let reversed = b
        .members()
        .iter()
        .all(|&y| a.members().iter().any(|&x| p.leq(x, y)));
    debug_assert_eq!(forward, reversed, "leq formulations disagree on maximal antichains");
    forward && reversed
}

/// Greatest lower bound: (A n B) u S_min(A,B) u S_min(B,A), completed to a
/// maximal antichain by the maximal elements incomparable to it.
pub fn ma_meet(p: &ImplicitPoset, a: &Antichain, b: &Antichain) -> Antichain {
    let mut base = a.intersection(b);
    base.extend(s_min(p, a, b));
    base.extend(s_min(p, b, a));
    let completion = p.max_of(&p.inc_of(&base));
    base.extend(completion);
    Antichain::new_unchecked(base)
}

/// Least upper bound: (A n B) u S_max(A,B) u S_max(B,A), completed by the
/// minimal elements incomparable to it.
pub fn ma_join(p: &ImplicitPoset, a: &Antichain, b: &Antichain) -> Antichain {
    let mut base = a.intersection(b);
    base.extend(s_max(p, a, b));
    base.extend(s_max(p, b, a));
    let completion = p.min_of(&p.inc_of(&base));
    base.extend(completion);
    Antichain::new_unchecked(base)
}

/// `B` covers `A` in the lattice iff every `x` in `A - B` is covered in
/// `P` by every `y` in `B - A`.
pub fn ma_covers(p: &ImplicitPoset, a: &Antichain, b: &Antichain) -> Result<bool> {
    if a == b {
        return Err(Error::IdenticalAntichains);
    }
    let a_minus_b = a.difference(b);
    let b_minus_a = b.difference(a);
    Ok(a_minus_b
        .iter()
        .all(|&x| b_minus_a.iter().all(|&y| p.covers(x, y))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, p1};
    use crate::graph::VertexOrdering;
    use crate::poset::ImplicitPoset;

    fn ac(p: &ImplicitPoset, members: &[u32]) -> Antichain {
        Antichain::new(p, members.to_vec()).unwrap()
    }

    #[test]
    fn p1_smin_smax() {
        let (g, w) = fixtures::p1_instance();
        let p = ImplicitPoset::new(&g, w).unwrap();
        let a = ac(&p, &[p1('a'), p1('g'), p1('h'), p1('i')]);
        let b = ac(&p, &[p1('c'), p1('d'), p1('e'), p1('f')]);
        assert_eq!(s_min(&p, &a, &b), vec![p1('a')]);
        assert_eq!(s_max(&p, &a, &b), vec![p1('g'), p1('h'), p1('i')]);
        assert_eq!(s_min(&p, &b, &a), vec![p1('c'), p1('d')]);
        assert_eq!(s_max(&p, &b, &a), vec![p1('e'), p1('f')]);
    }

    #[test]
    fn p1_meet_join() {
        let (g, w) = fixtures::p1_instance();
        let p = ImplicitPoset::new(&g, w).unwrap();
        let a = ac(&p, &[p1('a'), p1('g'), p1('h'), p1('i')]);
        let b = ac(&p, &[p1('c'), p1('d'), p1('e'), p1('f')]);
        assert_eq!(
            ma_meet(&p, &a, &b).members(),
            &[p1('a'), p1('b'), p1('c'), p1('d')]
        );
        assert_eq!(
            ma_join(&p, &a, &b).members(),
            &[p1('e'), p1('f'), p1('g'), p1('h'), p1('i')]
        );
    }

    #[test]
    fn smin_smax_partition_a() {
        let (g, w) = fixtures::p1_instance();
        let p = ImplicitPoset::new(&g, w).unwrap();
        let a = ac(&p, &[p1('a'), p1('g'), p1('h'), p1('i')]);
        let b = ac(&p, &[p1('c'), p1('d'), p1('e'), p1('f')]);
        let mut parts = a.intersection(&b);
        parts.extend(s_min(&p, &a, &b));
        parts.extend(s_max(&p, &a, &b));
        parts.sort_unstable();
        assert_eq!(parts, a.members());
        // disjointness of s_min and s_max
        let sm = s_min(&p, &a, &b);
        assert!(s_max(&p, &a, &b).iter().all(|x| !sm.contains(x)));
    }

    #[test]
    fn same_antichain_degenerate_cases() {
        let (g, w) = fixtures::two_chains(2);
        let p = ImplicitPoset::new(&g, w).unwrap();
        let a = ac(&p, &[0, 2]);
        assert!(s_min(&p, &a, &a).is_empty());
        assert!(s_max(&p, &a, &a).is_empty());
        assert!(ma_leq(&p, &a, &a));
        assert_eq!(ma_meet(&p, &a, &a), a);
        assert!(ma_covers(&p, &a, &a).is_err());
    }

    #[test]
    fn two_chains_algebra() {
        let (g, w) = fixtures::two_chains(2);
        let p = ImplicitPoset::new(&g, w).unwrap();
        // a1=0, b1=1, a2=2, b2=3
        let bottom = ac(&p, &[0, 2]);
        let top = ac(&p, &[1, 3]);
        let left = ac(&p, &[1, 2]);
        let right = ac(&p, &[0, 3]);
        assert_eq!(s_min(&p, &bottom, &top), vec![0, 2]);
        assert!(s_max(&p, &bottom, &top).is_empty());
        assert!(!ma_leq(&p, &left, &right) && !ma_leq(&p, &right, &left));
        assert!(ma_leq(&p, &bottom, &left));
        assert!(ma_covers(&p, &bottom, &left).unwrap());
        assert_eq!(ma_meet(&p, &left, &right), bottom);
        assert_eq!(ma_join(&p, &left, &right), top);
    }

    #[test]
    fn fig4_chain_order_and_covers() {
        let g = fixtures::fig4_graph();
        let p = ImplicitPoset::new(&g, fixtures::fig4_ordering()).unwrap();
        let chain: Vec<Antichain> = fixtures::fig4_chain()
            .into_iter()
            .map(|c| Antichain::new(&p, c).unwrap())
            .collect();
        for i in 0..chain.len() {
            for j in i..chain.len() {
                assert!(ma_leq(&p, &chain[i], &chain[j]));
            }
        }
        assert!(ma_covers(&p, &chain[0], &chain[1]).unwrap());
        assert!(!ma_covers(&p, &chain[0], &chain[2]).unwrap());
    }

    #[test]
    fn non_maximal_antichain_rejected() {
        let (g, w) = fixtures::two_chains(2);
        let p = ImplicitPoset::new(&g, w).unwrap();
        assert!(Antichain::new(&p, vec![0]).is_err()); // not maximal
        assert!(Antichain::new(&p, vec![0, 1]).is_err()); // comparable pair
    }

    #[test]
    fn leq_implies_no_reverse_strict_relation() {
        let (g, w) = fixtures::p1_instance();
        let p = ImplicitPoset::new(&g, w).unwrap();
        let m = ac(&p, &[p1('a'), p1('b'), p1('c'), p1('d')]);
        let j = ac(&p, &[p1('e'), p1('f'), p1('g'), p1('h'), p1('i')]);
        assert!(ma_leq(&p, &m, &j));
        for &x in m.members() {
            for &y in j.members() {
                assert!(!p.less(y, x));
            }
        }
    }

    #[test]
    fn ordering_helper_roundtrip() {
        let o = fixtures::ordering(&[2, 1, 3]);
        assert_eq!(o, VertexOrdering::new(vec![1, 0, 2]).unwrap());
    }
}
