//! Finite posets and linear orders over string element ids.
//!
//! A [`Poset`] stores its relation as a reflexive, transitively closed bit
//! matrix, so comparability queries are O(1). Elements are kept sorted
//! lexicographically by id; that order is the canonical tie-breaking order
//! used by every deterministic operation in this crate.

use std::collections::{BTreeSet, HashMap};

use crate::bitmat::BitMatrix;
use crate::error::{Error, Result};

/// A finite partially ordered set.
///
/// Immutable after construction; all operations are pure, so values can be
/// shared freely across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    ids: Vec<String>,
    leq: BitMatrix,
}

impl Poset {
    /// Builds a poset from element ids and a generating set of relations.
    ///
    /// Each pair `(x, y)` means `x ⪯ y`. The reflexive-transitive closure of
    /// the input is computed; self-pairs are ignored (reflexivity is
    /// implicit). Fails if ids repeat, a relation references an unknown id,
    /// or the closure would violate antisymmetry.
    pub fn new<S: Into<String>>(
        elements: impl IntoIterator<Item = S>,
        relations: impl IntoIterator<Item = (S, S)>,
    ) -> Result<Poset> {
        let mut ids: Vec<String> = elements.into_iter().map(Into::into).collect();
        ids.sort();
        for w in ids.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateId(w[0].clone()));
            }
        }
        let n = ids.len();
        let mut leq = BitMatrix::new(n);
        for i in 0..n {
            leq.set(i, i);
        }
        for (a, b) in relations {
            let (a, b) = (a.into(), b.into());
            let i = ids
                .binary_search(&a)
                .map_err(|_| Error::UnknownId(a.clone()))?;
            let j = ids
                .binary_search(&b)
                .map_err(|_| Error::UnknownId(b.clone()))?;
            if i != j {
                leq.set(i, j);
            }
        }
        leq.transitive_close();
        for i in 0..n {
            for j in (i + 1)..n {
                if leq.get(i, j) && leq.get(j, i) {
                    return Err(Error::CycleDetected(ids[i].clone(), ids[j].clone()));
                }
            }
        }
        Ok(Poset { ids, leq })
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Element ids in canonical (lexicographic) order.
    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    /// Canonical index of an id, if present.
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.binary_search_by(|x| x.as_str().cmp(id)).ok()
    }

    /// Id at a canonical index.
    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    /// `x ⪯ y` by id. Panics if either id is unknown.
    pub fn leq(&self, x: &str, y: &str) -> bool {
        let i = self.index_of(x).unwrap_or_else(|| panic!("unknown id `{x}`"));
        let j = self.index_of(y).unwrap_or_else(|| panic!("unknown id `{y}`"));
        self.leq.get(i, j)
    }

    /// `x ⪯ y` by canonical index.
    #[inline]
    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    /// `x ≺ y` by canonical index.
    #[inline]
    pub fn lt_idx(&self, i: usize, j: usize) -> bool {
        i != j && self.leq.get(i, j)
    }

    /// `x ∥ y` by canonical index.
    #[inline]
    pub fn incomparable_idx(&self, i: usize, j: usize) -> bool {
        i != j && !self.leq.get(i, j) && !self.leq.get(j, i)
    }

    /// All unordered incomparable pairs, each returned as `(a, b)` with
    /// `a < b` lexicographically, in canonical order.
    pub fn incomparable_pairs(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                if self.incomparable_idx(i, j) {
                    out.push((self.ids[i].clone(), self.ids[j].clone()));
                }
            }
        }
        out
    }

    pub(crate) fn incomparable_index_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                if self.incomparable_idx(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Elements with no strict predecessor.
    pub fn min_elements(&self) -> Vec<String> {
        (0..self.len())
            .filter(|&j| (0..self.len()).all(|i| !self.lt_idx(i, j)))
            .map(|j| self.ids[j].clone())
            .collect()
    }

    /// Elements with no strict successor.
    pub fn max_elements(&self) -> Vec<String> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.lt_idx(i, j)))
            .map(|i| self.ids[i].clone())
            .collect()
    }

    /// The sub-poset induced by a subset of the elements.
    pub fn induced_subposet<S: AsRef<str>>(
        &self,
        subset: impl IntoIterator<Item = S>,
    ) -> Result<Poset> {
        let mut picked = BTreeSet::new();
        for id in subset {
            let id = id.as_ref();
            let i = self
                .index_of(id)
                .ok_or_else(|| Error::UnknownId(id.to_string()))?;
            picked.insert(i);
        }
        let picked: Vec<usize> = picked.into_iter().collect();
        let ids: Vec<String> = picked.iter().map(|&i| self.ids[i].clone()).collect();
        let mut leq = BitMatrix::new(ids.len());
        for (a, &i) in picked.iter().enumerate() {
            for (b, &j) in picked.iter().enumerate() {
                if self.leq.get(i, j) {
                    leq.set(a, b);
                }
            }
        }
        // Restriction of a closed relation is closed.
        Ok(Poset { ids, leq })
    }

    /// True iff `l` lists all elements and respects every relation.
    pub fn is_linear_extension(&self, l: &LinearOrder) -> Result<bool> {
        let pos = self.positions_of(l)?;
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.lt_idx(i, j) && pos[i] > pos[j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Extends a partial linear order on a subset `S` to a linear extension
    /// of the whole poset whose restriction to `S` is exactly the input.
    ///
    /// The extension is the lexicographically smallest topological order of
    /// the poset constrained by the chain of consecutive pairs of `partial`,
    /// so the result is deterministic.
    pub fn extend_linear_order(&self, partial: &LinearOrder) -> Result<LinearOrder> {
        let mut sub = Vec::with_capacity(partial.len());
        for id in partial.sequence() {
            let i = self
                .index_of(id)
                .ok_or_else(|| Error::UnknownId(id.clone()))?;
            sub.push(i);
        }
        for (pa, &a) in sub.iter().enumerate() {
            for &b in sub.iter().skip(pa + 1) {
                // b after a in the partial: the poset must not demand b ≺ a
                if self.lt_idx(b, a) {
                    return Err(Error::InconsistentPartial(
                        self.ids[b].clone(),
                        self.ids[a].clone(),
                    ));
                }
            }
        }
        let mut edges = self.strict_matrix();
        for w in sub.windows(2) {
            if w[0] != w[1] {
                edges.set(w[0], w[1]);
            }
        }
        let order = lex_topo(&edges).expect("digraph is acyclic for a consistent partial");
        Ok(LinearOrder {
            seq: order.into_iter().map(|i| self.ids[i].clone()).collect(),
        })
    }

    /// The lexicographically smallest linear extension.
    pub fn lex_extension(&self) -> LinearOrder {
        let order = lex_topo(&self.strict_matrix()).expect("poset relation is acyclic");
        LinearOrder {
            seq: order.into_iter().map(|i| self.ids[i].clone()).collect(),
        }
    }

    /// Cover pairs `(x, y)`: `x ≺ y` with nothing strictly between. The
    /// closure of the covers regenerates the full relation.
    pub fn covers(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt_idx(i, j)
                    && !(0..n).any(|k| self.lt_idx(i, k) && self.lt_idx(k, j))
                {
                    out.push((self.ids[i].clone(), self.ids[j].clone()));
                }
            }
        }
        out
    }

    /// Height of each element: the length (in edges) of the longest chain
    /// ending at it.
    pub(crate) fn heights(&self) -> Vec<usize> {
        let order = lex_topo(&self.strict_matrix()).expect("poset relation is acyclic");
        let mut h = vec![0usize; self.len()];
        for &j in &order {
            for i in 0..self.len() {
                if self.lt_idx(i, j) {
                    h[j] = h[j].max(h[i] + 1);
                }
            }
        }
        h
    }

    /// Strict relation as a closed bit matrix (diagonal cleared).
    pub(crate) fn strict_matrix(&self) -> BitMatrix {
        let mut m = self.leq.clone();
        for i in 0..self.len() {
            m.clear(i, i);
        }
        m
    }

    fn positions_of(&self, l: &LinearOrder) -> Result<Vec<usize>> {
        if l.len() != self.len() {
            return Err(Error::DomainMismatch);
        }
        let mut pos = vec![usize::MAX; self.len()];
        for (p, id) in l.sequence().iter().enumerate() {
            let i = self.index_of(id).ok_or(Error::DomainMismatch)?;
            pos[i] = p;
        }
        Ok(pos)
    }

    /// Positions of every poset element in `l`, indexed canonically.
    /// Errors with `DomainMismatch` unless `l` spans exactly the elements.
    pub(crate) fn positions(&self, l: &LinearOrder) -> Result<Vec<usize>> {
        self.positions_of(l)
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rels: Vec<String> = self
            .covers()
            .iter()
            .map(|(a, b)| format!("{a}<{b}"))
            .collect();
        write!(f, "Poset{{{:?}; {}}}", self.ids, rels.join(","))
    }
}

/// A total order on a set of element ids, listed bottom to top.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearOrder {
    seq: Vec<String>,
}

impl LinearOrder {
    /// Builds a linear order from a bottom-to-top id sequence.
    pub fn new<S: Into<String>>(seq: impl IntoIterator<Item = S>) -> Result<LinearOrder> {
        let seq: Vec<String> = seq.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for id in &seq {
            if !seen.insert(id.as_str()) {
                return Err(Error::DuplicateId(id.clone()));
            }
        }
        Ok(LinearOrder { seq })
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// The id sequence, bottom to top.
    pub fn sequence(&self) -> &[String] {
        &self.seq
    }

    /// The set the order ranges over.
    pub fn domain(&self) -> BTreeSet<&str> {
        self.seq.iter().map(String::as_str).collect()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.seq.iter().any(|x| x == id)
    }

    /// Position of an id, bottom = 0.
    pub fn position(&self, id: &str) -> Option<usize> {
        self.seq.iter().position(|x| x == id)
    }

    /// The opposite (reversed) linear order.
    pub fn reverse(&self) -> LinearOrder {
        LinearOrder {
            seq: self.seq.iter().rev().cloned().collect(),
        }
    }

    /// The order with one id removed.
    pub fn delete(&self, id: &str) -> Result<LinearOrder> {
        if !self.contains(id) {
            return Err(Error::UnknownId(id.to_string()));
        }
        Ok(LinearOrder {
            seq: self.seq.iter().filter(|x| *x != id).cloned().collect(),
        })
    }

    /// Juxtaposes orders with pairwise disjoint domains, in the given order.
    pub fn concat<'a>(orders: impl IntoIterator<Item = &'a LinearOrder>) -> Result<LinearOrder> {
        let mut seq = Vec::new();
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        for o in orders {
            for id in &o.seq {
                if !seen.insert(id.as_str()) {
                    return Err(Error::OverlappingDomains(id.clone()));
                }
            }
            seq.extend(o.seq.iter().cloned());
        }
        Ok(LinearOrder { seq })
    }

    /// True iff the elements of `other` appear in `self` in the same
    /// relative order.
    pub fn restricts_to(&self, other: &LinearOrder) -> bool {
        let pos: HashMap<&str, usize> = self
            .seq
            .iter()
            .enumerate()
            .map(|(p, id)| (id.as_str(), p))
            .collect();
        let mut last = None;
        for id in &other.seq {
            match pos.get(id.as_str()) {
                None => return false,
                Some(&p) => {
                    if let Some(prev) = last {
                        if p <= prev {
                            return false;
                        }
                    }
                    last = Some(p);
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.seq.join(" < "))
    }
}

impl serde::Serialize for LinearOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.seq.serialize(s)
    }
}

/// Kahn's algorithm over a strict digraph, always removing the smallest
/// available index. Returns `None` on a cycle.
pub(crate) fn lex_topo(edges: &BitMatrix) -> Option<Vec<usize>> {
    let n = edges.size();
    let mut indeg = vec![0usize; n];
    for j in 0..n {
        for i in 0..n {
            if i != j && edges.get(i, j) {
                indeg[j] += 1;
            }
        }
    }
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&i| indeg[i] == 0)
        .map(std::cmp::Reverse)
        .collect();
    let mut out = Vec::with_capacity(n);
    while let Some(std::cmp::Reverse(u)) = heap.pop() {
        out.push(u);
        for j in 0..n {
            if j != u && edges.get(u, j) {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    heap.push(std::cmp::Reverse(j));
                }
            }
        }
    }
    (out.len() == n).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_abc() -> Poset {
        Poset::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn closure_infers_transitive_relations() {
        let p = chain_abc();
        assert!(p.leq("a", "c"));
        assert!(!p.leq("c", "a"));
    }

    #[test]
    fn antichain_has_no_relations() {
        let p = Poset::new(["a", "b"], []).unwrap();
        assert!(!p.leq("a", "b"));
        assert!(!p.leq("b", "a"));
        assert_eq!(p.incomparable_pairs(), vec![("a".into(), "b".into())]);
    }

    #[test]
    fn two_cycle_is_rejected() {
        let err = Poset::new(["a", "b"], [("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected(_, _)));
    }

    #[test]
    fn long_cycle_is_rejected() {
        let err = Poset::new(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected(_, _)));
    }

    #[test]
    fn duplicate_and_unknown_ids_are_rejected() {
        assert!(matches!(
            Poset::new(["a", "a"], []).unwrap_err(),
            Error::DuplicateId(_)
        ));
        assert!(matches!(
            Poset::new(["a"], [("a", "z")]).unwrap_err(),
            Error::UnknownId(_)
        ));
    }

    #[test]
    fn self_pairs_are_ignored() {
        let p = Poset::new(["a", "b"], [("a", "a")]).unwrap();
        assert!(p.incomparable_idx(0, 1));
    }

    #[test]
    fn chain_has_no_incomparable_pairs() {
        assert!(chain_abc().incomparable_pairs().is_empty());
    }

    #[test]
    fn min_max_of_chain_and_antichain() {
        let c = chain_abc();
        assert_eq!(c.min_elements(), ["a"]);
        assert_eq!(c.max_elements(), ["c"]);
        let a = Poset::new(["a", "b"], []).unwrap();
        assert_eq!(a.min_elements(), ["a", "b"]);
        assert_eq!(a.max_elements(), ["a", "b"]);
    }

    #[test]
    fn induced_subposet_restricts_relation() {
        let p = chain_abc();
        let q = p.induced_subposet(["a", "c"]).unwrap();
        assert_eq!(q.len(), 2);
        assert!(q.leq("a", "c"));
        let empty = p.induced_subposet(Vec::<&str>::new()).unwrap();
        assert!(empty.is_empty());
        assert!(matches!(
            p.induced_subposet(["z"]).unwrap_err(),
            Error::UnknownId(_)
        ));
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let p = chain_abc();
        let ids: Vec<&str> = p.ids().iter().map(String::as_str).collect();
        assert_eq!(p.induced_subposet(ids).unwrap(), p);
    }

    #[test]
    fn linear_extension_checks() {
        let p = chain_abc();
        assert!(p
            .is_linear_extension(&LinearOrder::new(["a", "b", "c"]).unwrap())
            .unwrap());
        assert!(!p
            .is_linear_extension(&LinearOrder::new(["b", "a", "c"]).unwrap())
            .unwrap());
        let anti = Poset::new(["a", "b"], []).unwrap();
        assert!(anti
            .is_linear_extension(&LinearOrder::new(["b", "a"]).unwrap())
            .unwrap());
        assert!(matches!(
            p.is_linear_extension(&LinearOrder::new(["a", "b"]).unwrap())
                .unwrap_err(),
            Error::DomainMismatch
        ));
    }

    #[test]
    fn extension_of_forced_partial() {
        let p = chain_abc();
        let l = p
            .extend_linear_order(&LinearOrder::new(["a", "c"]).unwrap())
            .unwrap();
        assert_eq!(l.sequence(), ["a", "b", "c"]);
    }

    #[test]
    fn extension_rejects_conflicting_partial() {
        let p = chain_abc();
        let err = p
            .extend_linear_order(&LinearOrder::new(["c", "a"]).unwrap())
            .unwrap_err();
        assert!(matches!(err, Error::InconsistentPartial(_, _)));
    }

    #[test]
    fn extension_restricts_to_partial() {
        // b1 ∥ a1 in the 4-element crown, so an extension exists.
        let s2 = Poset::new(
            ["a1", "a2", "b1", "b2"],
            [("a1", "b2"), ("a2", "b1")],
        )
        .unwrap();
        let partial = LinearOrder::new(["b1", "a1"]).unwrap();
        let full = s2.extend_linear_order(&partial).unwrap();
        assert!(s2.is_linear_extension(&full).unwrap());
        assert!(full.restricts_to(&partial));
    }

    #[test]
    fn reverse_delete_concat() {
        let l = LinearOrder::new(["a", "b", "c"]).unwrap();
        assert_eq!(l.reverse().sequence(), ["c", "b", "a"]);
        assert_eq!(l.reverse().reverse(), l);

        let l2 = LinearOrder::new(["x1", "x3", "x2"]).unwrap();
        assert_eq!(l2.delete("x3").unwrap().sequence(), ["x1", "x2"]);
        assert!(matches!(l2.delete("zz").unwrap_err(), Error::UnknownId(_)));

        let a = LinearOrder::new(["a"]).unwrap();
        let bc = LinearOrder::new(["b", "c"]).unwrap();
        assert_eq!(
            LinearOrder::concat([&a, &bc]).unwrap().sequence(),
            ["a", "b", "c"]
        );
        assert!(matches!(
            LinearOrder::concat([&a, &a]).unwrap_err(),
            Error::OverlappingDomains(_)
        ));
    }

    #[test]
    fn trichotomy() {
        let p = chain_abc();
        for i in 0..p.len() {
            for j in 0..p.len() {
                if i == j {
                    continue;
                }
                let cases = [p.lt_idx(i, j), p.lt_idx(j, i), p.incomparable_idx(i, j)];
                assert_eq!(cases.iter().filter(|&&c| c).count(), 1);
            }
        }
    }

    #[test]
    fn covers_regenerate_relation() {
        let p = Poset::new(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "d"), ("a", "c"), ("c", "d")],
        )
        .unwrap();
        let covers = p.covers();
        assert!(!covers.contains(&("a".into(), "d".into())));
        let q = Poset::new(
            p.ids().to_vec(),
            covers,
        )
        .unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn lex_extension_is_smallest() {
        let p = Poset::new(["a", "b", "c"], [("b", "a")]).unwrap();
        assert_eq!(p.lex_extension().sequence(), ["b", "a", "c"]);
    }
}
