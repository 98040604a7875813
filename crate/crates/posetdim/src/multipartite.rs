//! Multipartite posets: ordered partitions into antichain parts where every
//! relation runs from a lower-indexed part to a higher-indexed one.

use crate::error::{Error, Result};
use crate::poset::Poset;

/// A poset together with an ordered partition `X_0, …, X_{m-1}` (m ≥ 2) such
/// that each part is an antichain and `x ≺ y` implies `x ∈ X_i`, `y ∈ X_j`
/// with `i < j`.
///
/// Part indices are 0-based throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipartitePoset {
    parts: Vec<Vec<String>>,
    poset: Poset,
}

impl MultipartitePoset {
    /// Validates and builds an m-partite poset from parts and a generating
    /// set of relations on their union.
    pub fn new<S: Into<String>>(
        parts: Vec<Vec<S>>,
        relations: impl IntoIterator<Item = (S, S)>,
    ) -> Result<MultipartitePoset> {
        let parts: Vec<Vec<String>> = parts
            .into_iter()
            .map(|p| {
                let mut p: Vec<String> = p.into_iter().map(Into::into).collect();
                p.sort();
                p
            })
            .collect();
        let mut elements = Vec::new();
        for p in &parts {
            elements.extend(p.iter().cloned());
        }
        let relations: Vec<(String, String)> = relations
            .into_iter()
            .map(|(a, b)| (a.into(), b.into()))
            .collect();
        let poset = Poset::new(elements, relations)?;
        Self::from_parts_and_poset(parts, poset)
    }

    /// Wraps an existing poset in a validated partition. The parts must
    /// partition the poset's element set exactly.
    pub fn from_parts_and_poset(
        parts: Vec<Vec<String>>,
        poset: Poset,
    ) -> Result<MultipartitePoset> {
        if parts.len() < 2 {
            return Err(Error::TooSmall(format!(
                "a multipartite poset needs at least 2 parts, got {}",
                parts.len()
            )));
        }
        let mut part_of = std::collections::HashMap::new();
        for (pi, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::EmptyPart(pi));
            }
            for id in part {
                if part_of.insert(id.as_str(), pi).is_some() {
                    return Err(Error::PartsOverlap(id.clone()));
                }
            }
        }
        if part_of.len() != poset.len()
            || poset.ids().iter().any(|id| !part_of.contains_key(id.as_str()))
        {
            return Err(Error::BadParameters(
                "parts do not partition the element set".into(),
            ));
        }
        for i in 0..poset.len() {
            for j in 0..poset.len() {
                if poset.lt_idx(i, j) {
                    let (pi, pj) = (part_of[poset.id(i)], part_of[poset.id(j)]);
                    if pi == pj {
                        return Err(Error::IntraPartRelation(
                            poset.id(i).to_string(),
                            poset.id(j).to_string(),
                            pi,
                        ));
                    }
                    if pi > pj {
                        return Err(Error::BackwardRelation(
                            poset.id(i).to_string(),
                            poset.id(j).to_string(),
                            pi,
                            pj,
                        ));
                    }
                }
            }
        }
        Ok(MultipartitePoset { parts, poset })
    }

    /// Number of parts, `m`.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// The parts in their given order; ids inside a part are sorted.
    pub fn parts(&self) -> &[Vec<String>] {
        &self.parts
    }

    /// Part index of an element id.
    pub fn part_of(&self, id: &str) -> Option<usize> {
        self.parts.iter().position(|p| p.iter().any(|x| x == id))
    }

    /// The poset with the partition forgotten. The order dimension of a
    /// multipartite poset is defined as the dimension of this.
    pub fn underlying(&self) -> &Poset {
        &self.poset
    }

    pub fn into_underlying(self) -> Poset {
        self.poset
    }

    /// The bipartite sub-poset induced by parts `i` and `j` (0-based,
    /// `i < j`), with lower set `X_i` and upper set `X_j`.
    pub fn bipartite_subposet(&self, i: usize, j: usize) -> Result<BipartitePoset> {
        let m = self.part_count();
        if i >= m {
            return Err(Error::IndexOutOfRange(i, m));
        }
        if j >= m {
            return Err(Error::IndexOutOfRange(j, m));
        }
        if i >= j {
            return Err(Error::NotStrictlyOrdered(i, j));
        }
        let union: Vec<&str> = self.parts[i]
            .iter()
            .chain(self.parts[j].iter())
            .map(String::as_str)
            .collect();
        let poset = self.poset.induced_subposet(union)?;
        Ok(BipartitePoset {
            lower: self.parts[i].clone(),
            upper: self.parts[j].clone(),
            poset,
        })
    }

    /// All part index pairs `(i, j)` with `i < j`, in canonical order.
    pub fn part_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.part_count();
        let mut out = Vec::with_capacity(m * (m - 1) / 2);
        for i in 0..m {
            for j in (i + 1)..m {
                out.push((i, j));
            }
        }
        out
    }
}

/// A bipartite poset `(X, Y; ⪯)`: every strict relation runs from the lower
/// set `X` to the upper set `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitePoset {
    lower: Vec<String>,
    upper: Vec<String>,
    poset: Poset,
}

impl BipartitePoset {
    /// Validates and builds a bipartite poset from its two parts and a
    /// generating set of relations.
    pub fn new<S: Into<String>>(
        lower: Vec<S>,
        upper: Vec<S>,
        relations: impl IntoIterator<Item = (S, S)>,
    ) -> Result<BipartitePoset> {
        let mp = MultipartitePoset::new(vec![lower, upper], relations)?;
        Ok(BipartitePoset {
            lower: mp.parts[0].clone(),
            upper: mp.parts[1].clone(),
            poset: mp.poset,
        })
    }

    pub fn lower(&self) -> &[String] {
        &self.lower
    }

    pub fn upper(&self) -> &[String] {
        &self.upper
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// The same poset viewed as a 2-partite poset.
    pub fn to_multipartite(&self) -> MultipartitePoset {
        MultipartitePoset {
            parts: vec![self.lower.clone(), self.upper.clone()],
            poset: self.poset.clone(),
        }
    }
}

/// Partitions a poset into its height levels and returns the result as a
/// multipartite poset. Level `i` holds the elements whose longest chain from
/// a minimal element has `i` edges.
pub fn derive_levels(p: &Poset) -> Result<MultipartitePoset> {
    let heights = p.heights();
    let m = heights.iter().copied().max().map_or(0, |h| h + 1);
    if m < 2 {
        return Err(Error::SingleLevel);
    }
    let mut parts = vec![Vec::new(); m];
    for (i, &h) in heights.iter().enumerate() {
        parts[h].push(p.id(i).to_string());
    }
    // Heights strictly increase along relations, so every level is an
    // antichain and all relations run upward: validation cannot fail.
    MultipartitePoset::from_parts_and_poset(parts, p.clone())
}
