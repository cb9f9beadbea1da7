//! k-Path by deterministic colour coding.
//!
//! For every colouring of the hash family and every injective sequence
//! `(c₁, …, c_k)` of colours whose classes are all nonempty, the solver asks
//! whether the sentinels `s` and `t` are connected in the implicit graph
//! [`AuxPathView`]: `s` sees the `c₁` class, `t` sees the `c_k` class, and a
//! base edge survives only between consecutive colours of the sequence.
//! An `s`–`t` path exists iff `G` has a path `w₁…w_k` with `colour(w_i) = c_i`.

use std::sync::atomic::{AtomicBool, Ordering};

use crate::colour::{Colour, ColourFamily, Colouring};
use crate::connectivity::{st_connected, ConnectivityStrategy};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphView, Vertex};
use crate::meter::WorkspaceMeter;

/// Injective sequence of `k` colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourSequence(Vec<Colour>);

impl ColourSequence {
    pub fn new(colours: Vec<Colour>) -> Result<Self> {
        if colours.is_empty() {
            return Err(Error::Input("colour sequence must be nonempty".into()));
        }
        let distinct = colours
            .iter()
            .enumerate()
            .all(|(i, c)| !colours[..i].contains(c));
        if !distinct {
            return Err(Error::Input(format!("colours repeat in {colours:?}")));
        }
        Ok(Self(colours))
    }

    pub fn as_slice(&self) -> &[Colour] {
        &self.0
    }
}

/// Lexicographic cursor over injective sequences of length `k` over
/// `0..range`, holding only the current sequence.
#[derive(Debug, Clone)]
pub struct SequenceCursor {
    seq: Vec<Colour>,
    range: Colour,
    primed: bool,
    done: bool,
}

impl SequenceCursor {
    pub fn new(k: usize, range: Colour) -> Self {
        Self {
            seq: vec![0; k],
            range,
            primed: false,
            done: k == 0,
        }
    }

    pub fn current(&self) -> &[Colour] {
        &self.seq
    }

    /// Moves to the next sequence all of whose colours satisfy `allowed`.
    /// Subtrees whose prefix holds a disallowed colour are skipped whole.
    pub fn advance(&mut self, mut allowed: impl FnMut(Colour) -> bool) -> bool {
        if self.done {
            return false;
        }
        let k = self.seq.len();
        let (mut pos, mut from) = if self.primed {
            (k - 1, self.seq[k - 1] + 1)
        } else {
            self.primed = true;
            (0, 0)
        };
        loop {
            let prefix = &self.seq[..pos];
            let pick = (from..self.range).find(|c| !prefix.contains(c) && allowed(*c));
            match pick {
                Some(c) => {
                    self.seq[pos] = c;
                    if pos + 1 == k {
                        return true;
                    }
                    pos += 1;
                    from = 0;
                }
                None if pos == 0 => {
                    self.done = true;
                    return false;
                }
                None => {
                    pos -= 1;
                    from = self.seq[pos] + 1;
                }
            }
        }
    }
}

/// Every injective `k`-sequence over `0..k²`, lexicographically.
pub fn colour_sequences(k: usize) -> impl Iterator<Item = ColourSequence> {
    let mut cursor = SequenceCursor::new(k, (k * k) as Colour);
    std::iter::from_fn(move || {
        cursor
            .advance(|_| true)
            .then(|| ColourSequence(cursor.current().to_vec()))
    })
}

const SOURCE_SLOT: usize = usize::MAX / 2;

/// The auxiliary graph `G*` on ids `1..=n+2`, answered on demand.
/// Id `n+1` is the source sentinel `s`, id `n+2` the target `t`.
#[derive(Debug, Clone, Copy)]
pub struct AuxPathView<'a, G: ?Sized> {
    base: &'a G,
    family: ColourFamily,
    colouring: Colouring,
    seq: &'a [Colour],
}

impl<'a, G: GraphView + ?Sized> AuxPathView<'a, G> {
    pub fn new(base: &'a G, family: ColourFamily, colouring: Colouring, seq: &'a [Colour]) -> Self {
        assert!(!seq.is_empty(), "colour sequence must be nonempty");
        Self {
            base,
            family,
            colouring,
            seq,
        }
    }

    pub fn source(&self) -> Vertex {
        self.base.order() + 1
    }

    pub fn target(&self) -> Vertex {
        self.base.order() + 2
    }

    /// Index of `v`'s colour in the sequence, for base vertices.
    fn rank(&self, v: Vertex) -> Option<usize> {
        if !self.base.present(v) {
            return None;
        }
        let colour = self.family.colour(self.colouring, v);
        self.seq.iter().position(|&c| c == colour)
    }

    fn sentinel_rank(&self, v: Vertex) -> Option<usize> {
        if v == self.source() {
            Some(0)
        } else if v == self.target() {
            Some(self.seq.len() - 1)
        } else {
            None
        }
    }

    fn touches(&self, sentinel_rank: usize, w: Vertex) -> bool {
        w <= self.base.order() && self.rank(w) == Some(sentinel_rank)
    }
}

impl<G: GraphView + ?Sized> GraphView for AuxPathView<'_, G> {
    fn order(&self) -> usize {
        self.base.order() + 2
    }

    fn present(&self, v: Vertex) -> bool {
        v == self.source() || v == self.target() || self.base.present(v)
    }

    fn neighbour_from(&self, v: Vertex, mut cursor: usize) -> Option<(usize, Vertex)> {
        let n = self.base.order();
        if let Some(r) = self.sentinel_rank(v) {
            // cursor i stands for base vertex i + 1
            return (cursor..n)
                .find(|&i| self.touches(r, i + 1))
                .map(|i| (i, i + 1));
        }
        let rank = self.rank(v)?;
        if cursor < SOURCE_SLOT {
            loop {
                match self.base.neighbour_from(v, cursor) {
                    Some((pos, w)) => {
                        if matches!(self.rank(w), Some(r) if r.abs_diff(rank) == 1) {
                            return Some((pos, w));
                        }
                        cursor = pos + 1;
                    }
                    None => {
                        cursor = SOURCE_SLOT;
                        break;
                    }
                }
            }
        }
        if cursor == SOURCE_SLOT && rank == 0 {
            return Some((SOURCE_SLOT, self.source()));
        }
        if cursor <= SOURCE_SLOT + 1 && rank == self.seq.len() - 1 {
            return Some((SOURCE_SLOT + 1, self.target()));
        }
        None
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match (self.sentinel_rank(u), self.sentinel_rank(v)) {
            (Some(_), Some(_)) => false,
            (Some(r), None) => self.touches(r, v),
            (None, Some(r)) => self.touches(r, u),
            (None, None) => match (self.rank(u), self.rank(v)) {
                (Some(a), Some(b)) => a.abs_diff(b) == 1 && self.base.has_edge(u, v),
                _ => false,
            },
        }
    }

    fn degree_hint(&self, v: Vertex) -> usize {
        if self.sentinel_rank(v).is_some() {
            self.base.order()
        } else {
            self.base.degree_hint(v) + 2
        }
    }
}

/// True iff `view` has a path `w₁…w_k` with `colour(w_i) = seq[i]`.
pub fn find_a_path<G: GraphView + ?Sized>(
    view: &G,
    family: ColourFamily,
    colouring: Colouring,
    seq: &[Colour],
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
) -> Result<bool> {
    let aux = AuxPathView::new(view, family, colouring, seq);
    // s, t and the view's colouring parameters
    let _state = meter.scope(4);
    st_connected(&aux, aux.source(), aux.target(), strategy, meter)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KPathOutcome {
    pub answer: bool,
    pub colourings_tried: u64,
    pub sequences_tried: u64,
}

/// Decides whether `graph` has a simple path on at least `k` vertices.
pub fn solve_kpath(
    graph: &Graph,
    k: usize,
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
) -> Result<KPathOutcome> {
    solve_kpath_range(graph, k, strategy, meter, 0, 1, None)
}

/// Like [`solve_kpath`] with the `a`-range of the family split across
/// `jobs` threads, each with its own meter. Returns the outcome and the sum
/// of the per-thread peaks.
pub fn solve_kpath_jobs(
    graph: &Graph,
    k: usize,
    strategy: ConnectivityStrategy,
    jobs: usize,
) -> Result<(KPathOutcome, usize)> {
    let jobs = jobs.max(1);
    let stop = AtomicBool::new(false);
    let results: Vec<Result<(KPathOutcome, usize)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let stop = &stop;
                scope.spawn(move || {
                    let meter = WorkspaceMeter::new();
                    let out = solve_kpath_range(graph, k, strategy, &meter, j, jobs, Some(stop))?;
                    if out.answer {
                        stop.store(true, Ordering::Relaxed);
                    }
                    Ok((out, meter.peak()))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut total = KPathOutcome::default();
    let mut peak = 0;
    for r in results {
        let (out, p) = r?;
        total.answer |= out.answer;
        total.colourings_tried += out.colourings_tried;
        total.sequences_tried += out.sequences_tried;
        peak += p;
    }
    Ok((total, peak))
}

fn solve_kpath_range(
    graph: &Graph,
    k: usize,
    strategy: ConnectivityStrategy,
    meter: &WorkspaceMeter,
    part: usize,
    parts: usize,
    stop: Option<&AtomicBool>,
) -> Result<KPathOutcome> {
    if k == 0 {
        return Err(Error::Input("k must be at least 1".into()));
    }
    let n = graph.n();
    let mut out = KPathOutcome::default();
    if k > n {
        return Ok(out);
    }
    if k == 1 {
        out.answer = true;
        return Ok(out);
    }
    let family = ColourFamily::new(n, k)?;
    // colouring (a, b), family prime, class-scan cursor, and the sequence
    let _state = meter.scope(4 + k);
    for colouring in family.stream() {
        if (colouring.a as usize - 1) % parts != part {
            continue;
        }
        if stop.is_some_and(|s| s.load(Ordering::Relaxed)) {
            break;
        }
        out.colourings_tried += 1;
        let mut cursor = SequenceCursor::new(k, family.colour_count());
        while cursor.advance(|c| family.class_nonempty(graph, colouring, c)) {
            out.sequences_tried += 1;
            if find_a_path(graph, family, colouring, cursor.current(), strategy, meter)? {
                out.answer = true;
                return Ok(out);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::bfs_connected;

    const SAV: ConnectivityStrategy = ConnectivityStrategy::Savitch;

    fn kpath(g: &Graph, k: usize) -> bool {
        let m = WorkspaceMeter::new();
        let out = solve_kpath(g, k, SAV, &m).unwrap();
        assert_eq!(m.current(), 0);
        out.answer
    }

    #[test]
    fn sequence_examples() {
        let one: Vec<_> = colour_sequences(1).collect();
        assert_eq!(one, vec![ColourSequence(vec![0])]);
        let two: Vec<_> = colour_sequences(2).map(|s| s.0).collect();
        assert_eq!(two.len(), 12);
        assert_eq!(two[0], vec![0, 1]);
        assert_eq!(two[11], vec![3, 2]);
        let three: Vec<_> = colour_sequences(3).map(|s| s.0).collect();
        assert_eq!(three.len(), 9 * 8 * 7);
        assert!(three.windows(2).all(|w| w[0] < w[1]));
        assert!(three.iter().all(|s| ColourSequence::new(s.clone()).is_ok()));
    }

    #[test]
    fn pruned_cursor_matches_filtered_stream() {
        let allowed = |c: Colour| c % 3 != 1;
        let mut cursor = SequenceCursor::new(3, 9);
        let mut pruned = Vec::new();
        while cursor.advance(allowed) {
            pruned.push(cursor.current().to_vec());
        }
        let filtered: Vec<_> = colour_sequences(3)
            .map(|s| s.0)
            .filter(|s| s.iter().all(|&c| allowed(c)))
            .collect();
        assert_eq!(pruned, filtered);
    }

    #[test]
    fn sequence_validation() {
        assert!(ColourSequence::new(vec![]).is_err());
        assert!(ColourSequence::new(vec![1, 2, 1]).is_err());
    }

    // a = 1, b = 0 over p = 5 colours 1, 2, 3 as 1, 2, 3 when k = 2.
    fn coloured_path() -> (Graph, ColourFamily, Colouring) {
        let fam = ColourFamily::with_prime(3, 2, 5).unwrap();
        (Graph::path(3), fam, Colouring { a: 1, b: 0 })
    }

    #[test]
    fn aux_view_examples() {
        let (g, fam, c) = coloured_path();
        let seq = [1, 2, 3];
        let aux = AuxPathView::new(&g, fam, c, &seq);
        let (s, t) = (aux.source(), aux.target());
        assert!(aux.adjacent(s, 1).unwrap());
        assert!(!aux.adjacent(s, 2).unwrap());
        assert!(!aux.adjacent(1, 3).unwrap());
        assert!(!aux.adjacent(s, t).unwrap());
        assert!(aux.adjacent(3, t).unwrap());
        assert_eq!(aux.neighbours(2).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(aux.neighbours(1).collect::<Vec<_>>(), vec![2, s]);
        assert_eq!(aux.neighbours(s).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn find_a_path_examples() {
        let (g, fam, c) = coloured_path();
        let m = WorkspaceMeter::new();
        assert!(find_a_path(&g, fam, c, &[1, 2, 3], SAV, &m).unwrap());
        assert!(!find_a_path(&g, fam, c, &[3, 1, 2], SAV, &m).unwrap());
        assert!(find_a_path(&g, fam, c, &[3, 2, 1], SAV, &m).unwrap());

        let single = Graph::from_edges(1, []).unwrap();
        let fam1 = ColourFamily::with_prime(1, 1, 2).unwrap();
        let col = fam1.colour(c, 1);
        assert!(find_a_path(&single, fam1, c, &[col], SAV, &m).unwrap());
    }

    #[test]
    fn solver_examples() {
        assert!(kpath(&Graph::path(5), 5));
        assert!(!kpath(&Graph::complete(4), 5));
        assert!(!kpath(&Graph::star(4), 4));
        assert!(kpath(&Graph::star(4), 3));
        assert!(kpath(&Graph::from_edges(1, []).unwrap(), 1));
        assert!(!kpath(&Graph::from_edges(0, []).unwrap(), 1));
        assert!(kpath(&Graph::complete(4), 4));
        assert!(!kpath(&Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap(), 3));
        let m = WorkspaceMeter::new();
        assert!(solve_kpath(&Graph::path(3), 0, SAV, &m).is_err());
    }

    #[test]
    fn jobs_agree_with_sequential() {
        for (g, k) in [
            (Graph::path(6), 4),
            (Graph::star(6), 3),
            (Graph::star(6), 4),
        ] {
            let (out, _) = solve_kpath_jobs(&g, k, SAV, 3).unwrap();
            assert_eq!(out.answer, kpath(&g, k));
        }
    }

    #[test]
    fn every_sentinel_path_has_k_internal_vertices() {
        let g =
            Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 4), (2, 5)]).unwrap();
        let k = 3;
        let fam = ColourFamily::new(6, k).unwrap();
        for c in fam.stream().step_by(7) {
            let mut cursor = SequenceCursor::new(k, 9);
            while cursor.advance(|_| true) {
                let seq = cursor.current().to_vec();
                let aux = AuxPathView::new(&g, fam, c, &seq);
                let n = aux.order();
                let edges: Vec<_> = (1..=n)
                    .flat_map(|u| {
                        aux.neighbours(u)
                            .filter(move |&w| w > u)
                            .map(move |w| (u, w))
                    })
                    .collect();
                let star = Graph::from_edges(n, edges).unwrap();
                let dist = bfs_distance(&star, aux.source(), aux.target());
                if let Some(d) = dist {
                    assert!(d > k, "s-t path with {} internal vertices", d - 1);
                }
                assert_eq!(
                    dist.is_some(),
                    bfs_connected(&aux, aux.source(), aux.target())
                );
            }
        }
    }

    fn bfs_distance(g: &Graph, s: Vertex, t: Vertex) -> Option<usize> {
        let mut dist = vec![usize::MAX; g.n() + 1];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbours_of(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        (dist[t] != usize::MAX).then_some(dist[t])
    }
}
