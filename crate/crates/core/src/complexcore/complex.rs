use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::vertex_set::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComplexKind {
    /// No faces at all, not even the empty face.
    Void,
    /// Only the empty face.
    Irrelevant,
    Proper,
}

/// A simplicial complex on the vertex set `[n]`, stored by its facets.
///
/// Facets form an antichain and are kept sorted. A complex need not use all
/// of `[n]`; vertices outside every facet are simply not faces.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from vertex lists, dropping non-maximal faces.
    pub fn from_facets<I, F>(n: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        let mut sets = Vec::new();
        for facet in facets {
            let mut set = VertexSet::EMPTY;
            for v in facet {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                set = set.with(v);
            }
            sets.push(set);
        }
        Ok(Self::from_faces_unchecked(n, sets))
    }

    /// Builds a complex generated by the given faces.
    pub fn from_faces<I: IntoIterator<Item = VertexSet>>(n: usize, faces: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        let full = VertexSet::full(n);
        let faces: Vec<VertexSet> = faces.into_iter().collect();
        if let Some(f) = faces.iter().find(|f| !f.is_subset(full)) {
            return Err(Error::VertexOutOfRange {
                vertex: f.difference(full).max_vertex().unwrap_or(0),
                n,
            });
        }
        Ok(Self::from_faces_unchecked(n, faces))
    }

    pub(crate) fn from_faces_unchecked<I: IntoIterator<Item = VertexSet>>(
        n: usize,
        faces: I,
    ) -> Self {
        SimplicialComplex {
            n,
            facets: maximal_elements(faces),
        }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex `Δ` on `[n]`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [f] if f.is_empty() => ComplexKind::Irrelevant,
            _ => ComplexKind::Proper,
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// `max |facet| - 1`; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Union of all faces.
    pub fn vertices(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(first) => self.facets.iter().all(|f| f.len() == first.len()),
        }
    }

    /// Every face, sorted by cardinality and then bit pattern.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for facet in &self.facets {
            seen.extend(facet.subsets());
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().collect();
        faces.sort();
        faces
    }

    /// Face counts by dimension, starting at dimension -1.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for face in self.faces() {
            let k = face.len();
            if counts.len() <= k {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
        }
        counts
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(*f))
    }

    /// `facets: 0 1, 1 2`; the empty face prints as `{}` and the void
    /// complex as `facets:` with nothing after it.
    pub fn canonical(&self) -> String {
        let mut out = String::from("facets:");
        for (k, facet) in self.facets.iter().enumerate() {
            out.push_str(if k == 0 { " " } else { ", " });
            if facet.is_empty() {
                out.push_str("{}");
            } else {
                let vs: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
                out.push_str(&vs.join(" "));
            }
        }
        out
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, {})", self.n, self.canonical())
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

/// Inclusion-maximal members, sorted.
pub(crate) fn maximal_elements<I: IntoIterator<Item = VertexSet>>(sets: I) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = sets.into_iter().collect();
    all.sort_by(|a, b| b.cmp(a));
    all.dedup();
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in all {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Inclusion-minimal members, sorted.
pub(crate) fn minimal_elements<I: IntoIterator<Item = VertexSet>>(sets: I) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = sets.into_iter().collect();
    all.sort();
    all.dedup();
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in all {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Minimal sets meeting every edge, by Berge's incremental algorithm.
///
/// An empty edge admits no transversal; an empty edge list has the single
/// transversal `∅`.
pub(crate) fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut edges = minimal_elements(edges.iter().copied());
    if edges.first().is_some_and(|e| e.is_empty()) {
        return Vec::new();
    }
    edges.sort();
    let mut transversals = vec![VertexSet::EMPTY];
    for edge in edges {
        let mut next = Vec::with_capacity(transversals.len());
        for t in &transversals {
            if !t.is_disjoint(edge) {
                next.push(*t);
            } else {
                next.extend(edge.iter().map(|v| t.with(v)));
            }
        }
        transversals = minimal_elements(next);
    }
    transversals
}
