//! MaxLeaf Subtree by bounded search over inner-maximal rooted trees.
//!
//! A rooted tree whose inner vertices keep all their graph neighbours inside
//! the tree is determined by its root and leaf set, so the search carries
//! only `(root, R, B)`: red leaves stay leaves in every extension, blue
//! leaves may still become inner. Neighbours of a leaf outside the implied
//! tree are recovered with connectivity queries in `G − leaves`.

use crate::connectivity::{st_connected, ConnectivityStrategy};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphView, Masked, Vertex, VertexMask};
use crate::meter::WorkspaceMeter;

/// `(root, R, B)`; red and blue leaves are disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafLabelledTree {
    pub root: Vertex,
    pub red: Vec<Vertex>,
    pub blue: Vec<Vertex>,
}

impl LeafLabelledTree {
    pub fn leaf_count(&self) -> usize {
        self.red.len() + self.blue.len()
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        let mut all: Vec<_> = self.red.iter().chain(&self.blue).copied().collect();
        all.sort_unstable();
        all
    }
}

/// Hook called at every entry to the recursive search.
pub trait SearchObserver {
    fn enter(&mut self, _root: Vertex, _red: &[Vertex], _blue: &[Vertex]) {}
}

impl SearchObserver for () {}

/// Neighbours of leaf `u` that lie outside the inner-maximal tree given by
/// `root` and `leaves`: those not connected to `root` in `G − leaves`.
pub fn extend_tree<G: GraphView + ?Sized>(
    view: &G,
    u: Vertex,
    root: Vertex,
    leaves: &[Vertex],
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
) -> Result<Vec<Vertex>> {
    if !leaves.contains(&u) {
        return Err(Error::NotALeaf(u));
    }
    let mask = VertexMask::new(leaves.iter().copied(), leaves.len())?;
    let _mask_words = meter.scope(mask.len() + 1);
    let without_leaves = Masked::new(view).with_vertices_removed(&mask)?;
    let mut outside = Vec::new();
    let mut held = meter.scope(0);
    for w in view.neighbours(u) {
        if mask.contains(w) {
            continue;
        }
        if !st_connected(&without_leaves, w, root, strategy, meter)? {
            outside.push(w);
            held.resize(outside.len());
        }
    }
    Ok(outside)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MaxLeafOutcome {
    pub answer: bool,
    pub witness: Option<LeafLabelledTree>,
    /// Recursive search calls over all roots.
    pub recursion_nodes: u64,
    /// Largest number of search calls made for a single root.
    pub max_nodes_per_root: u64,
}

struct Search<'a, G: ?Sized, O> {
    view: &'a G,
    k: usize,
    root: Vertex,
    strategy: ConnectivityStrategy,
    meter: &'a WorkspaceMeter,
    observer: &'a mut O,
    nodes: u64,
}

impl<G: GraphView + ?Sized, O: SearchObserver> Search<'_, G, O> {
    fn witness(&self, red: &[Vertex], blue: &[Vertex], extra: &[Vertex]) -> LeafLabelledTree {
        let need = self.k.saturating_sub(red.len() + blue.len());
        let mut blue = blue.to_vec();
        blue.extend(extra.iter().take(need));
        LeafLabelledTree {
            root: self.root,
            red: red.to_vec(),
            blue,
        }
    }

    fn leaves_with(red: &[Vertex], blue: &[Vertex], u: Vertex) -> Vec<Vertex> {
        let mut leaves = Vec::with_capacity(red.len() + blue.len() + 1);
        leaves.extend_from_slice(red);
        leaves.extend_from_slice(blue);
        leaves.push(u);
        leaves
    }

    fn run(&mut self, red: &[Vertex], blue: &[Vertex]) -> Result<Option<LeafLabelledTree>> {
        self.nodes += 1;
        self.observer.enter(self.root, red, blue);
        let held = red.len() + blue.len();
        if held > 2 * self.k {
            return Err(Error::Contract(format!(
                "{held} labelled leaves exceed 2k = {}",
                2 * self.k
            )));
        }
        // R and B plus root, chosen leaf and loop state
        let mut frame = self.meter.scope(held + 3);

        if held >= self.k {
            return Ok(Some(self.witness(red, blue, &[])));
        }
        let Some(&u) = blue.iter().min() else {
            return Ok(None);
        };

        let mut red_u = red.to_vec();
        red_u.push(u);
        let rest: Vec<Vertex> = blue.iter().copied().filter(|&x| x != u).collect();
        if let Some(found) = self.run(&red_u, &rest)? {
            return Ok(Some(found));
        }
        drop(red_u);

        // u becomes inner
        let base = red.len() + rest.len();
        let leaves = Self::leaves_with(red, &rest, u);
        let mut fresh = extend_tree(self.view, u, self.root, &leaves, self.strategy, self.meter)?;
        frame.resize(held + 3 + fresh.len());
        if base + fresh.len() >= self.k {
            return Ok(Some(self.witness(red, &rest, &fresh)));
        }
        // follow paths
        while fresh.len() == 1 {
            let next = fresh[0];
            let leaves = Self::leaves_with(red, &rest, next);
            fresh = extend_tree(
                self.view,
                next,
                self.root,
                &leaves,
                self.strategy,
                self.meter,
            )?;
            frame.resize(held + 3 + fresh.len());
            if base + fresh.len() >= self.k {
                return Ok(Some(self.witness(red, &rest, &fresh)));
            }
        }
        if fresh.is_empty() {
            return Ok(None);
        }
        let mut grown = rest;
        grown.extend_from_slice(&fresh);
        self.run(red, &grown)
    }
}

/// Does some extension of `(root, red, blue)` have at least `k` leaves?
#[allow(clippy::too_many_arguments)]
pub fn max_leaf_search<G: GraphView + ?Sized, O: SearchObserver>(
    view: &G,
    k: usize,
    root: Vertex,
    red: &[Vertex],
    blue: &[Vertex],
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
    observer: &mut O,
) -> Result<(Option<LeafLabelledTree>, u64)> {
    view.check(root)?;
    let mut search = Search {
        view,
        k,
        root,
        strategy,
        meter,
        observer,
        nodes: 0,
    };
    let found = search.run(red, blue)?;
    Ok((found, search.nodes))
}

/// Decides whether `graph` has a subtree with at least `k` leaves.
pub fn solve_maxleaf(
    graph: &Graph,
    k: usize,
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
) -> Result<MaxLeafOutcome> {
    solve_maxleaf_observed(graph, k, strategy, meter, &mut ())
}

pub fn solve_maxleaf_observed<O: SearchObserver>(
    graph: &Graph,
    k: usize,
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
    observer: &mut O,
) -> Result<MaxLeafOutcome> {
    solve_roots(graph, k, strategy, meter, observer, 0, 1)
}

/// Per-root searches split across `jobs` threads with separate meters.
/// Returns the outcome and the sum of the per-thread peaks.
pub fn solve_maxleaf_jobs(
    graph: &Graph,
    k: usize,
    strategy: ConnectivityStrategy,
    jobs: usize,
) -> Result<(MaxLeafOutcome, usize)> {
    let jobs = jobs.max(1);
    let results: Vec<Result<(MaxLeafOutcome, usize)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                scope.spawn(move || {
                    let meter = WorkspaceMeter::new();
                    let out = solve_roots(graph, k, strategy, &meter, &mut (), j, jobs)?;
                    Ok((out, meter.peak()))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut total = MaxLeafOutcome::default();
    let mut peak = 0;
    for r in results {
        let (out, p) = r?;
        if out.answer && !total.answer {
            total.answer = true;
            total.witness = out.witness;
        }
        total.recursion_nodes += out.recursion_nodes;
        total.max_nodes_per_root = total.max_nodes_per_root.max(out.max_nodes_per_root);
        peak += p;
    }
    Ok((total, peak))
}

fn solve_roots<O: SearchObserver>(
    graph: &Graph,
    k: usize,
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
    observer: &mut O,
    part: usize,
    parts: usize,
) -> Result<MaxLeafOutcome> {
    if k == 0 {
        return Err(Error::Input("k must be at least 1".into()));
    }
    let mut out = MaxLeafOutcome::default();
    let _cursor = meter.scope(2);
    let n = graph.n();
    let mine = |v: Vertex| (v - 1) % parts == part;

    // a vertex of degree >= k roots a star with k leaves
    for v in (1..=n).filter(|&v| mine(v)) {
        if graph.degree_hint(v) >= k {
            out.answer = true;
            out.witness = Some(LeafLabelledTree {
                root: v,
                red: Vec::new(),
                blue: graph.neighbours(v).take(k).collect(),
            });
            return Ok(out);
        }
    }
    for v in (1..=n).filter(|&v| mine(v)) {
        let blue: Vec<Vertex> = graph.neighbours(v).collect();
        let _blue_words = meter.scope(blue.len());
        let (found, nodes) = max_leaf_search(graph, k, v, &[], &blue, strategy, meter, observer)?;
        out.recursion_nodes += nodes;
        out.max_nodes_per_root = out.max_nodes_per_root.max(nodes);
        if let Some(w) = found {
            out.answer = true;
            out.witness = Some(w);
            return Ok(out);
        }
    }
    Ok(out)
}
