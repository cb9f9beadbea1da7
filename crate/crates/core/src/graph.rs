//! Read-only graph model.
//!
//! [`Graph`] stores ordered adjacency lists for vertices `1..=n`. Everything
//! else sees a graph through [`GraphView`], which answers neighbour and
//! adjacency queries without copying; deletions are simulated by [`Masked`]
//! views holding a small explicit set of removed vertices or edges.

use std::fmt;

use crate::error::{Error, Result};

/// Vertex id, 1-based.
pub type Vertex = usize;

/// Undirected simple graph with ascending neighbour lists (CSR layout).
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph on `1..=n`. Duplicate edges (in either orientation),
    /// self-loops and out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut lists: Vec<Vec<Vertex>> = vec![Vec::new(); n + 1];
        for (u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        let mut offsets = Vec::with_capacity(n + 2);
        let mut targets = Vec::new();
        offsets.push(0);
        offsets.push(0);
        for (v, list) in lists.iter_mut().enumerate().skip(1) {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (v.min(w[0]), v.max(w[0]));
                return Err(Error::Input(format!("duplicate edge ({a}, {b})")));
            }
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        Ok(Self { offsets, targets })
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("path edges are valid")
    }

    /// Star with center 1 and leaves `2..=n`.
    pub fn star(n: usize) -> Self {
        Self::from_edges(n, (2..=n).map(|i| (1, i))).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph edges are valid")
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 2
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Raw ascending neighbour list of `v`. Panics if `v` is out of range.
    pub fn neighbours_of(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (1..=self.n()).flat_map(move |u| {
            self.neighbours_of(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n())
            .map(|v| self.neighbours_of(v).len())
            .max()
            .unwrap_or(0)
    }

    pub fn with_vertices_removed(&self, mask: &VertexMask) -> Result<Masked<'_, Self>> {
        Masked::new(self).with_vertices_removed(mask)
    }

    pub fn with_edges_removed(&self, mask: &EdgeMask) -> Result<Masked<'_, Self>> {
        Masked::new(self).with_edges_removed(mask)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Read-only access to a graph on the id range `1..=order()`.
///
/// Neighbours are exposed through an opaque cursor: `neighbour_from(v, c)`
/// returns the first visible neighbour at cursor position `>= c` together
/// with its position, in ascending id order. Implementors must keep
/// adjacency symmetric and free of self-loops.
pub trait GraphView {
    fn order(&self) -> usize;

    /// False for ids outside the range or hidden by a mask.
    fn present(&self, v: Vertex) -> bool;

    fn neighbour_from(&self, v: Vertex, cursor: usize) -> Option<(usize, Vertex)>;

    /// Adjacency test without range checking; out-of-range ids are never adjacent.
    fn has_edge(&self, u: Vertex, v: Vertex) -> bool;

    /// Cheap upper bound on the degree of `v`.
    fn degree_hint(&self, v: Vertex) -> usize;

    fn neighbours(&self, v: Vertex) -> Neighbours<'_, Self> {
        Neighbours {
            view: self,
            v,
            cursor: 0,
        }
    }

    fn has_neighbour(&self, v: Vertex) -> bool {
        self.neighbour_from(v, 0).is_some()
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    fn degree(&self, v: Vertex) -> Result<usize> {
        self.check(v)?;
        Ok(self.neighbours(v).count())
    }

    fn neighbor_at(&self, v: Vertex, i: usize) -> Result<Vertex> {
        self.check(v)?;
        self.neighbours(v)
            .nth(i)
            .ok_or_else(|| Error::IndexOutOfRange {
                vertex: v,
                index: i,
                degree: self.neighbours(v).count(),
            })
    }

    fn adjacent(&self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.has_edge(u, v))
    }
}

/// Iterator over the visible neighbours of one vertex.
pub struct Neighbours<'a, G: ?Sized> {
    view: &'a G,
    v: Vertex,
    cursor: usize,
}

impl<G: GraphView + ?Sized> Iterator for Neighbours<'_, G> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        let (pos, w) = self.view.neighbour_from(self.v, self.cursor)?;
        self.cursor = pos + 1;
        Some(w)
    }
}

impl GraphView for Graph {
    fn order(&self) -> usize {
        self.n()
    }

    fn present(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.n()
    }

    fn neighbour_from(&self, v: Vertex, cursor: usize) -> Option<(usize, Vertex)> {
        if !self.present(v) {
            return None;
        }
        self.neighbours_of(v).get(cursor).map(|&w| (cursor, w))
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.present(u) && self.present(v) && self.neighbours_of(u).binary_search(&v).is_ok()
    }

    fn degree_hint(&self, v: Vertex) -> usize {
        if self.present(v) {
            self.neighbours_of(v).len()
        } else {
            0
        }
    }
}

impl<G: GraphView + ?Sized> GraphView for &G {
    fn order(&self) -> usize {
        (**self).order()
    }
    fn present(&self, v: Vertex) -> bool {
        (**self).present(v)
    }
    fn neighbour_from(&self, v: Vertex, cursor: usize) -> Option<(usize, Vertex)> {
        (**self).neighbour_from(v, cursor)
    }
    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        (**self).has_edge(u, v)
    }
    fn degree_hint(&self, v: Vertex) -> usize {
        (**self).degree_hint(v)
    }
}

/// A small explicit set of deleted vertices with its declared size budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMask {
    removed: Vec<Vertex>,
    budget: usize,
}

impl VertexMask {
    pub fn new<I: IntoIterator<Item = Vertex>>(removed: I, budget: usize) -> Result<Self> {
        let mut removed: Vec<Vertex> = removed.into_iter().collect();
        removed.sort_unstable();
        removed.dedup();
        if removed.len() > budget {
            return Err(Error::MaskBudget {
                size: removed.len(),
                budget,
            });
        }
        Ok(Self { removed, budget })
    }

    pub fn empty() -> Self {
        Self {
            removed: Vec::new(),
            budget: 0,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.removed.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.removed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.removed.is_empty()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.removed.iter().copied()
    }

    /// Union checked against `other`'s budget.
    fn union(&self, other: &VertexMask) -> Result<Self> {
        Self::new(self.iter().chain(other.iter()), other.budget)
    }
}

/// A small explicit set of deleted undirected edges, stored as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMask {
    removed: Vec<(Vertex, Vertex)>,
    budget: usize,
}

impl EdgeMask {
    pub fn new<I: IntoIterator<Item = (Vertex, Vertex)>>(
        removed: I,
        budget: usize,
    ) -> Result<Self> {
        let mut removed: Vec<(Vertex, Vertex)> = removed
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        removed.sort_unstable();
        removed.dedup();
        if removed.len() > budget {
            return Err(Error::MaskBudget {
                size: removed.len(),
                budget,
            });
        }
        Ok(Self { removed, budget })
    }

    pub fn empty() -> Self {
        Self {
            removed: Vec::new(),
            budget: 0,
        }
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        let key = (u.min(v), u.max(v));
        self.removed.contains(&key)
    }

    pub fn len(&self) -> usize {
        self.removed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.removed.is_empty()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.removed.iter().copied()
    }

    fn union(&self, other: &EdgeMask) -> Result<Self> {
        Self::new(self.iter().chain(other.iter()), other.budget)
    }
}

/// `G − S − F` over any base view, answered on demand.
#[derive(Debug, Clone)]
pub struct Masked<'a, G: ?Sized> {
    base: &'a G,
    vertices: VertexMask,
    edges: EdgeMask,
}

impl<'a, G: GraphView + ?Sized> Masked<'a, G> {
    pub fn new(base: &'a G) -> Self {
        Self {
            base,
            vertices: VertexMask::empty(),
            edges: EdgeMask::empty(),
        }
    }

    pub fn base(&self) -> &'a G {
        self.base
    }

    pub fn vertex_mask(&self) -> &VertexMask {
        &self.vertices
    }

    pub fn edge_mask(&self) -> &EdgeMask {
        &self.edges
    }

    /// Adds `mask` to the removed vertices; the union must fit `mask`'s budget.
    pub fn with_vertices_removed(&self, mask: &VertexMask) -> Result<Self> {
        Ok(Self {
            base: self.base,
            vertices: self.vertices.union(mask)?,
            edges: self.edges.clone(),
        })
    }

    /// Adds `mask` to the removed edges; the union must fit `mask`'s budget.
    pub fn with_edges_removed(&self, mask: &EdgeMask) -> Result<Self> {
        Ok(Self {
            base: self.base,
            vertices: self.vertices.clone(),
            edges: self.edges.union(mask)?,
        })
    }
}

impl<G: GraphView + ?Sized> GraphView for Masked<'_, G> {
    fn order(&self) -> usize {
        self.base.order()
    }

    fn present(&self, v: Vertex) -> bool {
        self.base.present(v) && !self.vertices.contains(v)
    }

    fn neighbour_from(&self, v: Vertex, mut cursor: usize) -> Option<(usize, Vertex)> {
        if self.vertices.contains(v) {
            return None;
        }
        loop {
            let (pos, w) = self.base.neighbour_from(v, cursor)?;
            if !self.vertices.contains(w) && !self.edges.contains(v, w) {
                return Some((pos, w));
            }
            cursor = pos + 1;
        }
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        !self.vertices.contains(u)
            && !self.vertices.contains(v)
            && !self.edges.contains(u, v)
            && self.base.has_edge(u, v)
    }

    fn degree_hint(&self, v: Vertex) -> usize {
        self.base.degree_hint(v)
    }
}
