use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::meter::word_bits;

/// Outcome and resource usage of one solver run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpaceReport {
    pub problem: String,
    pub n: usize,
    pub k: usize,
    pub strategy: String,
    pub answer: bool,
    pub peak_words: usize,
    pub peak_bits: u64,
    pub wall_time_ms: f64,
    pub counters: BTreeMap<String, u64>,
}

impl SpaceReport {
    pub fn new(
        problem: &str,
        n: usize,
        k: usize,
        strategy: &str,
        answer: bool,
        peak_words: usize,
    ) -> Self {
        Self {
            problem: problem.to_string(),
            n,
            k,
            strategy: strategy.to_string(),
            answer,
            peak_words,
            peak_bits: peak_words as u64 * word_bits(n) as u64,
            wall_time_ms: 0.0,
            counters: BTreeMap::new(),
        }
    }

    pub fn counter(mut self, name: &str, value: u64) -> Self {
        self.counters.insert(name.to_string(), value);
        self
    }

    pub fn wall_time(mut self, elapsed: std::time::Duration) -> Self {
        self.wall_time_ms = elapsed.as_secs_f64() * 1000.0;
        self
    }
}

impl fmt::Display for SpaceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let answer = if self.answer { "YES" } else { "NO" };
        let rows = [
            ("problem", self.problem.clone()),
            ("n", self.n.to_string()),
            ("k", self.k.to_string()),
            ("strategy", self.strategy.clone()),
            ("answer", answer.to_string()),
            ("peak words", self.peak_words.to_string()),
            ("peak bits", self.peak_bits.to_string()),
            ("wall time ms", format!("{:.3}", self.wall_time_ms)),
        ];
        let counters = self
            .counters
            .iter()
            .map(|(name, value)| (name.replace('_', " "), value.to_string()));
        let all = rows
            .into_iter()
            .map(|(l, v)| (l.to_string(), v))
            .chain(counters);
        for (i, (label, value)) in all.enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{label:<18}{value}")?;
        }
        Ok(())
    }
}
