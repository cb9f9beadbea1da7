//! Working-space accounting.
//!
//! Every piece of mutable solver state is charged to a [`WorkspaceMeter`]
//! through a [`MeterScope`] that releases its words when dropped. The input
//! graph and the demand pairs are never charged.
//!
//! The unit is a word of `⌈log₂(n+1)⌉` bits: a vertex id, a counter or a
//! colour costs one word and an edge costs two.

use std::cell::Cell;

/// Words charged for one stored edge.
pub const EDGE_WORDS: usize = 2;

/// Number of bits in one word for a graph on `n` vertices.
pub fn word_bits(n: usize) -> u32 {
    // ⌈log₂(n+1)⌉, with a floor of one bit so the empty graph still has a unit.
    let bits = usize::BITS - n.leading_zeros();
    bits.max(1)
}

/// Peak/current counter for one solver invocation.
///
/// Not `Sync`: concurrent invocations use disjoint meters.
#[derive(Debug, Default)]
pub struct WorkspaceMeter {
    current: Cell<usize>,
    peak: Cell<usize>,
}

impl WorkspaceMeter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Charges `words` until the returned scope is dropped.
    pub fn scope(&self, words: usize) -> MeterScope<'_> {
        self.charge(words);
        MeterScope { meter: self, words }
    }

    pub fn current(&self) -> usize {
        self.current.get()
    }

    pub fn peak(&self) -> usize {
        self.peak.get()
    }

    fn charge(&self, words: usize) {
        let now = self.current.get() + words;
        self.current.set(now);
        if now > self.peak.get() {
            self.peak.set(now);
        }
    }

    fn release(&self, words: usize) {
        let now = self.current.get();
        debug_assert!(now >= words, "meter released more than it holds");
        self.current.set(now.saturating_sub(words));
    }
}

/// RAII handle for words charged to a meter.
#[derive(Debug)]
pub struct MeterScope<'a> {
    meter: &'a WorkspaceMeter,
    words: usize,
}

impl MeterScope<'_> {
    pub fn words(&self) -> usize {
        self.words
    }

    /// Changes the charge held by this scope, e.g. when a stored set grows.
    pub fn resize(&mut self, words: usize) {
        if words > self.words {
            self.meter.charge(words - self.words);
        } else {
            self.meter.release(self.words - words);
        }
        self.words = words;
    }
}

impl Drop for MeterScope<'_> {
    fn drop(&mut self) {
        self.meter.release(self.words);
    }
}
