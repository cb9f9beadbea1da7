//! Brute-force references for the three problems.
//!
//! These read the adjacency lists directly and share no code with the
//! solvers. They are exponential in `n` and refuse inputs above their caps.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::multicut::{Edge, MulticutInstance};

pub const KPATH_MAX_N: usize = 24;
pub const MAXLEAF_MAX_N: usize = 9;
pub const MULTICUT_MAX_N: usize = 16;

fn cap(what: &str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::Cap(format!(
            "{what} oracle takes n <= {max}, got {n}"
        )));
    }
    Ok(())
}

/// Is there a simple path on `k` vertices? Plain DFS over simple paths.
pub fn oracle_kpath(graph: &Graph, k: usize) -> Result<bool> {
    let n = graph.n();
    cap("k-path", n, KPATH_MAX_N)?;
    if k == 0 {
        return Ok(true);
    }
    if k > n {
        return Ok(false);
    }
    fn extend(g: &Graph, v: Vertex, len: usize, k: usize, on_path: &mut [bool]) -> bool {
        if len == k {
            return true;
        }
        for &w in g.neighbours_of(v) {
            if !on_path[w] {
                on_path[w] = true;
                let found = extend(g, w, len + 1, k, on_path);
                on_path[w] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    let mut on_path = vec![false; n + 1];
    Ok((1..=n).any(|v| {
        on_path[v] = true;
        let found = extend(graph, v, 1, k, &mut on_path);
        on_path[v] = false;
        found
    }))
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Largest rooted leaf count over every subtree of `graph`: every connected
/// vertex subset, every spanning tree of it, every root. A root is never a
/// leaf, so a single vertex has 0 leaves and a single edge has 1.
pub fn oracle_max_leaves(graph: &Graph) -> Result<usize> {
    let n = graph.n();
    cap("max-leaf", n, MAXLEAF_MAX_N)?;
    let mut best = 0;
    for set in 1u32..(1 << n) {
        let size = set.count_ones() as usize;
        // a rooted tree on `size` vertices has at most size - 1 leaves
        if size - 1 <= best {
            continue;
        }
        let inside = |v: Vertex| set >> (v - 1) & 1 == 1;
        let edges: Vec<Edge> = graph
            .edges()
            .filter(|&(u, v)| inside(u) && inside(v))
            .collect();
        if edges.len() + 1 < size {
            continue;
        }
        let mut chosen = Vec::with_capacity(size - 1);
        let mut parent: Vec<usize> = (0..=n).collect();
        spanning_trees(&edges, 0, size - 1, &mut parent, &mut chosen, &mut |tree| {
            best = best.max(rooted_leaves(n, tree));
        });
    }
    Ok(best)
}

fn spanning_trees(
    edges: &[Edge],
    from: usize,
    need: usize,
    parent: &mut Vec<usize>,
    chosen: &mut Vec<Edge>,
    visit: &mut dyn FnMut(&[Edge]),
) {
    if chosen.len() == need {
        visit(chosen);
        return;
    }
    if edges.len() - from < need - chosen.len() {
        return;
    }
    let (u, v) = edges[from];
    let (ru, rv) = (find(parent, u), find(parent, v));
    if ru != rv {
        let saved = parent.clone();
        parent[ru] = rv;
        chosen.push((u, v));
        spanning_trees(edges, from + 1, need, parent, chosen, visit);
        chosen.pop();
        *parent = saved;
    }
    spanning_trees(edges, from + 1, need, parent, chosen, visit);
}

fn rooted_leaves(n: usize, tree: &[Edge]) -> usize {
    let mut degree = vec![0usize; n + 1];
    for &(u, v) in tree {
        degree[u] += 1;
        degree[v] += 1;
    }
    let ones = degree.iter().filter(|&&d| d == 1).count();
    // rooting at a vertex of degree >= 2 keeps every degree-1 vertex a leaf;
    // rooting at a degree-1 vertex loses one
    if degree.iter().any(|&d| d >= 2) {
        ones
    } else {
        ones.saturating_sub(1)
    }
}

/// Does `graph` contain a rooted subtree with at least `k` leaves?
pub fn oracle_maxleaf(graph: &Graph, k: usize) -> Result<bool> {
    Ok(oracle_max_leaves(graph)? >= k)
}

/// A smallest edge set of size at most `k` separating every pair, if any.
/// Subsets are tried by size, then lexicographically.
pub fn oracle_multicut_cut(inst: &MulticutInstance, k: usize) -> Result<Option<Vec<Edge>>> {
    let tree = inst.tree();
    let n = tree.n();
    cap("multicut", n, MULTICUT_MAX_N)?;
    let edges: Vec<Edge> = tree.edges().collect();
    let separates = |cut: &[usize]| {
        let mut parent: Vec<usize> = (0..=n).collect();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if !cut.contains(&i) {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
        }
        inst.pairs()
            .iter()
            .all(|&(a, b)| find(&mut parent, a) != find(&mut parent, b))
    };
    fn subsets(
        m: usize,
        size: usize,
        from: usize,
        cur: &mut Vec<usize>,
        test: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return test(cur);
        }
        for i in from..m {
            cur.push(i);
            if subsets(m, size, i + 1, cur, test) {
                return true;
            }
            cur.pop();
        }
        false
    }
    for size in 0..=k.min(edges.len()) {
        let mut cur = Vec::with_capacity(size);
        if subsets(edges.len(), size, 0, &mut cur, &separates) {
            return Ok(Some(cur.iter().map(|&i| edges[i]).collect()));
        }
    }
    Ok(None)
}

pub fn oracle_multicut(inst: &MulticutInstance, k: usize) -> Result<bool> {
    Ok(oracle_multicut_cut(inst, k)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kpath_examples() {
        assert!(oracle_kpath(&Graph::path(5), 5).unwrap());
        assert!(!oracle_kpath(&Graph::star(4), 4).unwrap());
        assert!(oracle_kpath(&Graph::star(4), 3).unwrap());
        assert!(oracle_kpath(&Graph::from_edges(3, []).unwrap(), 1).unwrap());
        assert!(!oracle_kpath(&Graph::path(3), 4).unwrap());
        assert!(oracle_kpath(&Graph::path(30), 2).is_err());
    }

    #[test]
    fn maxleaf_examples() {
        assert!(oracle_maxleaf(&Graph::star(6), 5).unwrap());
        assert!(!oracle_maxleaf(&Graph::star(6), 6).unwrap());
        assert!(!oracle_maxleaf(&Graph::path(6), 3).unwrap());
        assert!(oracle_maxleaf(&Graph::path(6), 2).unwrap());
        assert!(!oracle_maxleaf(&Graph::from_edges(1, []).unwrap(), 1).unwrap());
        assert!(oracle_maxleaf(&Graph::path(2), 1).unwrap());
        assert_eq!(oracle_max_leaves(&Graph::complete(5)).unwrap(), 4);
        assert!(oracle_maxleaf(&Graph::path(10), 1).is_err());
    }

    #[test]
    fn maxleaf_counts_spanning_trees_of_cycles() {
        // C5 plus a chord: best tree is a spider with three leaves
        let g = Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)]).unwrap();
        assert_eq!(oracle_max_leaves(&g).unwrap(), 3);
    }

    #[test]
    fn multicut_examples() {
        let empty = MulticutInstance::new(Graph::path(4), vec![]).unwrap();
        assert_eq!(oracle_multicut_cut(&empty, 0).unwrap(), Some(vec![]));
        let p3 = MulticutInstance::new(Graph::path(3), vec![(1, 3)]).unwrap();
        assert!(!oracle_multicut(&p3, 0).unwrap());
        assert!(oracle_multicut(&p3, 1).unwrap());
        let tree = Graph::from_edges(4, [(1, 4), (2, 4), (3, 4)]).unwrap();
        let star = MulticutInstance::new(tree, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(oracle_multicut(&star, 2).unwrap());
        assert!(!oracle_multicut(&star, 1).unwrap());
    }
}
