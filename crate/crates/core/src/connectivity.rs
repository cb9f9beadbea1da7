//! Undirected st-connectivity in polylogarithmic working space.
//!
//! The metered strategy is Savitch's midpoint recursion: a walk of length at
//! most `d` from `u` to `v` exists iff some midpoint `m` has walks of length
//! `⌈d/2⌉` from `u` and `⌊d/2⌋` to `v`. Each recursion frame holds four
//! words and the depth is `⌈log₂ d⌉`, so one query costs `O(log n)` words
//! (`O(log² n)` bits).
//!
//! [`st_connected`] runs the recursion with doubling budgets `1, 2, 4, …` up
//! to the smallest power of two `>= order`. Between rounds it checks whether
//! the radius-`d` ball around either endpoint is closed under neighbourhood,
//! which proves that endpoint's component has been exhausted. Both additions
//! only shorten the search; the answer is always that of the full budget.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{GraphView, Vertex};
use crate::meter::WorkspaceMeter;

/// Words held by one recursion frame: both endpoints, the budget and the midpoint.
pub const FRAME_WORDS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConnectivityStrategy {
    /// Metered midpoint recursion.
    #[default]
    Savitch,
    /// Breadth-first search with a visited array. Unmetered; for tests.
    BfsReference,
}

impl ConnectivityStrategy {
    pub fn name(self) -> &'static str {
        match self {
            Self::Savitch => "savitch",
            Self::BfsReference => "bfs",
        }
    }
}

/// True iff `s` and `t` are joined by a path in `view`.
///
/// A vertex hidden by a mask is isolated; it is connected only to itself.
pub fn st_connected<G: GraphView + ?Sized>(
    view: &G,
    s: Vertex,
    t: Vertex,
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
) -> Result<bool> {
    view.check(s)?;
    view.check(t)?;
    Ok(match strategy {
        ConnectivityStrategy::Savitch => savitch_connected(view, s, t, meter),
        ConnectivityStrategy::BfsReference => bfs_connected(view, s, t),
    })
}

fn savitch_connected<G: GraphView + ?Sized>(
    view: &G,
    s: Vertex,
    t: Vertex,
    meter: &WorkspaceMeter,
) -> bool {
    if s == t {
        return true;
    }
    if !view.has_neighbour(s) || !view.has_neighbour(t) {
        return false;
    }
    let _state = meter.scope(1);
    let full = view.order().next_power_of_two();
    let mut budget = 1;
    loop {
        if reach(view, s, t, budget, meter) {
            return true;
        }
        if budget >= full {
            return false;
        }
        if ball_closed(view, s, budget, meter) || ball_closed(view, t, budget, meter) {
            return false;
        }
        budget *= 2;
    }
}

/// True iff a walk of length at most `depth_budget` joins `s` and `t`.
pub fn savitch_reachable<G: GraphView + ?Sized>(
    view: &G,
    s: Vertex,
    t: Vertex,
    depth_budget: usize,
    meter: &WorkspaceMeter,
) -> bool {
    reach(view, s, t, depth_budget, meter)
}

fn reach<G: GraphView + ?Sized>(
    view: &G,
    u: Vertex,
    v: Vertex,
    d: usize,
    meter: &WorkspaceMeter,
) -> bool {
    let _frame = meter.scope(FRAME_WORDS);
    if u == v {
        return true;
    }
    match d {
        0 => false,
        1 => view.has_edge(u, v),
        2 => {
            if view.has_edge(u, v) {
                return true;
            }
            // Midpoints of a length-2 walk are neighbours of either end.
            let (near, far) = if view.degree_hint(u) <= view.degree_hint(v) {
                (u, v)
            } else {
                (v, u)
            };
            view.neighbours(near).any(|m| view.has_edge(m, far))
        }
        _ => {
            if !view.has_neighbour(u) || !view.has_neighbour(v) {
                return false;
            }
            let (first, second) = (d.div_ceil(2), d / 2);
            (1..=view.order()).any(|m| {
                m != u
                    && (m == v || view.has_neighbour(m))
                    && reach(view, u, m, first, meter)
                    && reach(view, m, v, second, meter)
            })
        }
    }
}

/// True iff every neighbour of every vertex within distance `d` of `c` is
/// itself within distance `d`, i.e. the ball is `c`'s whole component.
fn ball_closed<G: GraphView + ?Sized>(
    view: &G,
    c: Vertex,
    d: usize,
    meter: &WorkspaceMeter,
) -> bool {
    let _cursors = meter.scope(3);
    let inside = |y: Vertex| reach(view, c, y, d, meter);
    let closed_at = |x: Vertex| view.neighbours(x).all(inside);
    let hint = view.degree_hint(c);
    match d {
        0 => !view.has_neighbour(c),
        1 => view.neighbours(c).all(closed_at),
        2 if hint.saturating_mul(hint) <= view.order() => view
            .neighbours(c)
            .all(|x| closed_at(x) && view.neighbours(x).all(closed_at)),
        _ => (1..=view.order())
            .filter(|&x| view.present(x))
            .all(|x| !inside(x) || closed_at(x)),
    }
}

/// Reference connectivity by BFS over the view; linear extra space.
pub fn bfs_connected<G: GraphView + ?Sized>(view: &G, s: Vertex, t: Vertex) -> bool {
    if s == t {
        return true;
    }
    let mut seen = vec![false; view.order() + 1];
    let mut queue = std::collections::VecDeque::from([s]);
    seen[s] = true;
    while let Some(x) = queue.pop_front() {
        for y in view.neighbours(x) {
            if y == t {
                return true;
            }
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeMask, Graph, VertexMask};

    const SAV: ConnectivityStrategy = ConnectivityStrategy::Savitch;

    fn both(g: &impl GraphView, s: Vertex, t: Vertex) -> bool {
        let m = WorkspaceMeter::new();
        let a = st_connected(g, s, t, SAV, &m).unwrap();
        let b = st_connected(g, s, t, ConnectivityStrategy::BfsReference, &m).unwrap();
        assert_eq!(a, b, "strategies disagree on ({s}, {t})");
        assert_eq!(m.current(), 0);
        a
    }

    #[test]
    fn examples() {
        let g = Graph::path(3);
        for v in 1..=3 {
            assert!(both(&g, v, v));
        }
        let two = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert!(!both(&two, 1, 3));
        assert!(both(&two, 3, 4));
        assert!(both(&Graph::path(8), 1, 8));
    }

    #[test]
    fn range_errors() {
        let g = Graph::path(3);
        let m = WorkspaceMeter::new();
        assert!(st_connected(&g, 0, 1, SAV, &m).is_err());
        assert!(st_connected(&g, 1, 4, SAV, &m).is_err());
    }

    #[test]
    fn reachable_budgets() {
        let g = Graph::path(3);
        let m = WorkspaceMeter::new();
        assert!(!savitch_reachable(&g, 1, 3, 1, &m));
        assert!(savitch_reachable(&g, 1, 3, 2, &m));
        assert!(savitch_reachable(&g, 2, 2, 0, &m));
        assert!(!savitch_reachable(&g, 1, 2, 0, &m));
    }

    #[test]
    fn reachable_is_exact_distance_threshold() {
        let g = Graph::path(9);
        let m = WorkspaceMeter::new();
        for s in 1..=9usize {
            for t in 1..=9 {
                let dist = s.abs_diff(t);
                for d in 0..10 {
                    assert_eq!(savitch_reachable(&g, s, t, d, &m), dist <= d, "{s} {t} {d}");
                }
            }
        }
    }

    #[test]
    fn masked_vertices_are_isolated() {
        let g = Graph::path(5);
        let v = g
            .with_vertices_removed(&VertexMask::new([3], 1).unwrap())
            .unwrap();
        assert!(!both(&v, 1, 5));
        assert!(!both(&v, 3, 4));
        assert!(both(&v, 3, 3));
        assert!(both(&v, 4, 5));
        let e = g
            .with_edges_removed(&EdgeMask::new([(4, 5)], 1).unwrap())
            .unwrap();
        assert!(!both(&e, 1, 5));
        assert!(both(&e, 1, 4));
    }

    #[test]
    fn frame_depth_is_logarithmic() {
        for exp in [4u32, 6, 8, 10] {
            let n = 1usize << exp;
            let g = Graph::path(n);
            let m = WorkspaceMeter::new();
            assert!(savitch_reachable(&g, 1, 2, n, &m));
            // frames for budgets n, n/2, ..., 2
            assert_eq!(m.peak(), FRAME_WORDS * exp as usize);
        }
    }
}
