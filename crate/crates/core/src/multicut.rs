//! Multicut in Trees by branching on the deepest least common ancestor.
//!
//! The tree is rooted at vertex 1. While some demand pair is still connected
//! in `T − E*`, the pair whose LCA `w` is deepest is picked; one of the at
//! most two path edges at `w` must be cut, so the search branches on them.
//! LCAs, depths and path edges are all found with connectivity queries on
//! implicitly masked views, so a search node holds only `E*` and counters.

use crate::connectivity::{bfs_connected, st_connected, ConnectivityStrategy};
use crate::error::{Error, Result};
use crate::graph::{EdgeMask, Graph, GraphView, Masked, Vertex, VertexMask};
use crate::meter::{WorkspaceMeter, EDGE_WORDS};

pub type Edge = (Vertex, Vertex);

/// A tree, its demand pairs and the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulticutInstance {
    tree: Graph,
    pairs: Vec<(Vertex, Vertex)>,
    root: Vertex,
}

impl MulticutInstance {
    pub fn new(tree: Graph, pairs: Vec<(Vertex, Vertex)>) -> Result<Self> {
        validate_instance(&tree, &pairs)?;
        Ok(Self {
            tree,
            pairs,
            root: 1,
        })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn root(&self) -> Vertex {
        self.root
    }
}

/// Checks that `tree` is a tree and every pair has two distinct in-range ids.
pub fn validate_instance(tree: &Graph, pairs: &[(Vertex, Vertex)]) -> Result<()> {
    let n = tree.n();
    if n == 0 {
        return Err(Error::NotATree("no vertices".into()));
    }
    if tree.edge_count() != n - 1 {
        return Err(Error::NotATree(format!(
            "{} edges on {n} vertices",
            tree.edge_count()
        )));
    }
    if let Some(v) = (2..=n).find(|&v| !bfs_connected(tree, 1, v)) {
        return Err(Error::NotATree(format!(
            "vertex {v} is disconnected from 1"
        )));
    }
    for &(a, b) in pairs {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::IdOutOfRange(format!("pair ({a}, {b}) with n = {n}")));
        }
        if a == b {
            return Err(Error::SelfPair(a));
        }
    }
    Ok(())
}

fn without<'a, G: GraphView + ?Sized>(view: &'a G, v: Vertex) -> Result<Masked<'a, G>> {
    Masked::new(view).with_vertices_removed(&VertexMask::new([v], 1)?)
}

/// Least common ancestor of `a` and `b` with respect to root `r`: walk down
/// from `r` while some child is still connected to both ends once the
/// current vertex is removed.
pub fn find_lca<G: GraphView + ?Sized>(
    view: &G,
    r: Vertex,
    a: Vertex,
    b: Vertex,
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
) -> Result<Vertex> {
    if !st_connected(view, r, a, strategy, meter)? || !st_connected(view, r, b, strategy, meter)? {
        return Err(Error::Contract(format!(
            "pair ({a}, {b}) is not connected to root {r}"
        )));
    }
    // lca and neighbour cursor
    let _state = meter.scope(2);
    let mut lca = r;
    'descend: loop {
        let rest = without(view, lca)?;
        let _mask = meter.scope(1);
        for x in view.neighbours(lca) {
            if st_connected(&rest, x, a, strategy, meter)?
                && st_connected(&rest, x, b, strategy, meter)?
            {
                lca = x;
                continue 'descend;
            }
        }
        return Ok(lca);
    }
}

/// Edge distance from `r` to `x`, walking the unique path one vertex at a time.
pub fn dist_from_root<G: GraphView + ?Sized>(
    view: &G,
    r: Vertex,
    x: Vertex,
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
) -> Result<usize> {
    if x == r {
        return Ok(0);
    }
    if view.adjacent(r, x)? {
        return Ok(1);
    }
    if !st_connected(view, r, x, strategy, meter)? {
        return Err(Error::Contract(format!("{x} is not connected to root {r}")));
    }
    // distance, current vertex, neighbour cursor
    let _state = meter.scope(3);
    let mut y = r;
    let mut d = 0;
    while y != x {
        let rest = without(view, y)?;
        let _mask = meter.scope(1);
        let mut step = None;
        for z in view.neighbours(y) {
            if st_connected(&rest, z, x, strategy, meter)? {
                step = Some(z);
                break;
            }
        }
        y = step.ok_or_else(|| Error::Contract(format!("lost the path from {r} to {x}")))?;
        d += 1;
    }
    Ok(d)
}

/// The edge at `w` on the path toward `x` in `view`.
fn edge_toward<G: GraphView + ?Sized>(
    view: &G,
    w: Vertex,
    x: Vertex,
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
) -> Result<Edge> {
    let rest = without(view, w)?;
    let _mask = meter.scope(2);
    for y in view.neighbours(w) {
        if st_connected(&rest, x, y, strategy, meter)? {
            return Ok((w.min(y), w.max(y)));
        }
    }
    Err(Error::Contract(format!("no edge at {w} toward {x}")))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MulticutOutcome {
    pub answer: bool,
    /// The accepting `E*`, sorted.
    pub certificate: Option<Vec<Edge>>,
    pub recursion_nodes: u64,
    /// Largest `|E*|` seen at any search node.
    pub max_cut_size: usize,
}

struct Search<'a> {
    inst: &'a MulticutInstance,
    k: usize,
    strategy: ConnectivityStrategy,
    meter: &'a WorkspaceMeter,
    nodes: u64,
    max_cut: usize,
}

impl Search<'_> {
    fn run(&mut self, cut: &[Edge]) -> Result<Option<Vec<Edge>>> {
        self.nodes += 1;
        self.max_cut = self.max_cut.max(cut.len());
        if cut.len() > self.k {
            return Err(Error::Contract(format!(
                "cut of size {} exceeds k = {}",
                cut.len(),
                self.k
            )));
        }
        // E* plus count, depth, chosen pair, lca and pair cursor
        let _frame = self.meter.scope(EDGE_WORDS * cut.len() + 6);
        let (tree, r, strategy, meter) = (
            self.inst.tree(),
            self.inst.root(),
            self.strategy,
            self.meter,
        );
        let mask = EdgeMask::new(cut.iter().copied(), self.k)?;
        let remaining = tree.with_edges_removed(&mask)?;

        let mut deepest: Option<(Vertex, Vertex, usize)> = None;
        for &(a, b) in self.inst.pairs() {
            if !st_connected(&remaining, a, b, strategy, meter)? {
                continue;
            }
            if cut.len() == self.k {
                return Ok(None);
            }
            let w = find_lca(&remaining, r, a, b, strategy, meter)?;
            let depth = dist_from_root(&remaining, r, w, strategy, meter)?;
            if deepest.is_none_or(|(_, _, d)| depth > d) {
                deepest = Some((a, b, depth));
            }
        }
        let Some((u, v, _)) = deepest else {
            let mut done = cut.to_vec();
            done.sort_unstable();
            return Ok(Some(done));
        };

        let w = find_lca(&remaining, r, u, v, strategy, meter)?;
        let branches: Vec<Edge> = if w == u || w == v {
            let other = if w == u { v } else { u };
            vec![edge_toward(&remaining, w, other, strategy, meter)?]
        } else {
            vec![
                edge_toward(&remaining, w, u, strategy, meter)?,
                edge_toward(&remaining, w, v, strategy, meter)?,
            ]
        };
        let _branch_words = self.meter.scope(EDGE_WORDS * branches.len());
        for e in branches {
            let mut next = cut.to_vec();
            next.push(e);
            if let Some(found) = self.run(&next)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Does `cut` extend to a multicut with at most `k` edges?
pub fn multicut_search(
    inst: &MulticutInstance,
    cut: &[Edge],
    k: usize,
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
) -> Result<MulticutOutcome> {
    let mut search = Search {
        inst,
        k,
        strategy,
        meter,
        nodes: 0,
        max_cut: 0,
    };
    let found = search.run(cut)?;
    Ok(MulticutOutcome {
        answer: found.is_some(),
        certificate: found,
        recursion_nodes: search.nodes,
        max_cut_size: search.max_cut,
    })
}

/// Decides whether at most `k` edges separate every demand pair.
pub fn solve_multicut(
    inst: &MulticutInstance,
    k: usize,
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
) -> Result<MulticutOutcome> {
    multicut_search(inst, &[], k, strategy, meter)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAV: ConnectivityStrategy = ConnectivityStrategy::Savitch;

    fn star3_all_pairs() -> MulticutInstance {
        let tree = Graph::from_edges(4, [(1, 4), (2, 4), (3, 4)]).unwrap();
        MulticutInstance::new(tree, vec![(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(MulticutInstance::new(Graph::path(3), vec![(1, 3)]).is_ok());
        let forest = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert!(matches!(
            validate_instance(&forest, &[]),
            Err(Error::NotATree(_))
        ));
        let cycle = Graph::from_edges(4, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(matches!(
            validate_instance(&cycle, &[]),
            Err(Error::NotATree(_))
        ));
        assert_eq!(
            validate_instance(&Graph::path(3), &[(2, 2)]),
            Err(Error::SelfPair(2))
        );
        assert!(matches!(
            validate_instance(&Graph::path(3), &[(0, 2)]),
            Err(Error::IdOutOfRange(_))
        ));
        assert!(matches!(
            validate_instance(&Graph::path(3), &[(1, 4)]),
            Err(Error::IdOutOfRange(_))
        ));
    }

    #[test]
    fn lca_examples() {
        let m = WorkspaceMeter::new();
        let p = Graph::path(3);
        assert_eq!(find_lca(&p, 1, 2, 3, SAV, &m).unwrap(), 2);
        assert_eq!(find_lca(&p, 1, 1, 3, SAV, &m).unwrap(), 1);
        assert_eq!(find_lca(&Graph::star(3), 1, 2, 3, SAV, &m).unwrap(), 1);
        let cut = p
            .with_edges_removed(&EdgeMask::new([(1, 2)], 1).unwrap())
            .unwrap();
        assert!(matches!(
            find_lca(&cut, 1, 2, 3, SAV, &m),
            Err(Error::Contract(_))
        ));
        assert_eq!(m.current(), 0);
    }

    #[test]
    fn dist_examples() {
        let m = WorkspaceMeter::new();
        let p = Graph::path(4);
        assert_eq!(dist_from_root(&p, 1, 1, SAV, &m).unwrap(), 0);
        assert_eq!(dist_from_root(&p, 1, 2, SAV, &m).unwrap(), 1);
        assert_eq!(dist_from_root(&p, 1, 4, SAV, &m).unwrap(), 3);
        assert_eq!(dist_from_root(&p, 3, 1, SAV, &m).unwrap(), 2);
    }

    #[test]
    fn search_examples() {
        let m = WorkspaceMeter::new();
        let p = MulticutInstance::new(Graph::path(3), vec![(1, 3)]).unwrap();
        assert!(multicut_search(&p, &[], 1, SAV, &m).unwrap().answer);
        assert!(!multicut_search(&p, &[], 0, SAV, &m).unwrap().answer);

        let star = star3_all_pairs();
        let two = solve_multicut(&star, 2, SAV, &m).unwrap();
        assert!(two.answer);
        assert_eq!(two.certificate.as_ref().unwrap().len(), 2);
        assert!(!solve_multicut(&star, 1, SAV, &m).unwrap().answer);
        assert_eq!(m.current(), 0);
    }

    #[test]
    fn solver_examples() {
        let m = WorkspaceMeter::new();
        let empty = MulticutInstance::new(Graph::path(4), vec![]).unwrap();
        for k in 0..3 {
            let out = solve_multicut(&empty, k, SAV, &m).unwrap();
            assert!(out.answer);
            assert_eq!(out.certificate, Some(vec![]));
        }
        let p5 = MulticutInstance::new(Graph::path(5), vec![(1, 5), (2, 4)]).unwrap();
        let one = solve_multicut(&p5, 1, SAV, &m).unwrap();
        assert!(one.answer);
        let e = one.certificate.unwrap()[0];
        assert!(e == (2, 3) || e == (3, 4));
        assert!(!solve_multicut(&p5, 0, SAV, &m).unwrap().answer);
    }

    #[test]
    fn deepest_pair_is_cut_first() {
        // (3,5) has the deeper LCA, so it is cut before (1,2) and no
        // connected pair is ever separated from the root
        let tree = Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let inst = MulticutInstance::new(tree, vec![(1, 2), (3, 5)]).unwrap();
        let m = WorkspaceMeter::new();
        let out = solve_multicut(&inst, 2, SAV, &m).unwrap();
        assert_eq!(out.certificate, Some(vec![(1, 2), (3, 4)]));
        assert_eq!(out.recursion_nodes, 3);
        assert!(!solve_multicut(&inst, 1, SAV, &m).unwrap().answer);
    }
}
