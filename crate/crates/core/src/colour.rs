//! Deterministic colour coding with the hash family
//! `h_{a,b}(i) = ((a·i + b) mod p) mod k²`, `1 ≤ a < p`, `0 ≤ b < p`,
//! for a prime `n < p < 2n`. Colours are `0..k²`.

use crate::error::{Error, Result};
use crate::graph::{GraphView, Vertex};

pub type Colour = u64;

/// Smallest prime in `(n, 2n)`, by trial division.
pub fn find_prime_above(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::Input(format!("prime search needs n >= 2, got {n}")));
    }
    let n = n as u64;
    (n + 1..2 * n)
        .find(|&q| is_prime(q))
        .ok_or_else(|| Error::Contract(format!("no prime in ({n}, {})", 2 * n)))
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut r = 2;
    while r * r <= q {
        if q.is_multiple_of(r) {
            return false;
        }
        r += 1;
    }
    true
}

/// The family for domain `1..=n` and parameter `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColourFamily {
    n: usize,
    k: usize,
    p: u64,
}

impl ColourFamily {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Input("k must be at least 1".into()));
        }
        Ok(Self {
            n,
            k,
            p: find_prime_above(n)?,
        })
    }

    /// Family over an explicit prime, which must exceed `n`.
    pub fn with_prime(n: usize, k: usize, p: u64) -> Result<Self> {
        if k == 0 || p as usize <= n || !is_prime(p) {
            return Err(Error::Input(format!(
                "invalid family parameters n={n} k={k} p={p}"
            )));
        }
        Ok(Self { n, k, p })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn colour_count(&self) -> u64 {
        (self.k * self.k) as u64
    }

    /// `p·(p−1)`.
    pub fn size(&self) -> u64 {
        self.p * (self.p - 1)
    }

    pub fn colour(&self, c: Colouring, i: Vertex) -> Colour {
        hash_colour(c, self.p, self.k, i)
    }

    pub fn stream(&self) -> FamilyStream {
        family_stream(self.p)
    }

    /// True iff `c` is injective on `set`; pairwise comparison, no buffer.
    pub fn is_colourful(&self, c: Colouring, set: &[Vertex]) -> bool {
        if set.len() as u64 > self.colour_count() {
            return false;
        }
        set.iter().enumerate().all(|(idx, &x)| {
            let cx = self.colour(c, x);
            set[idx + 1..].iter().all(|&y| self.colour(c, y) != cx)
        })
    }

    /// True iff some present vertex of `view` has `colour`.
    pub fn class_nonempty<G: GraphView + ?Sized>(
        &self,
        view: &G,
        c: Colouring,
        colour: Colour,
    ) -> bool {
        (1..=view.order()).any(|v| view.present(v) && self.colour(c, v) == colour)
    }
}

/// One member `h_{a,b}` of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Colouring {
    pub a: u64,
    pub b: u64,
}

pub fn hash_colour(c: Colouring, p: u64, k: usize, i: Vertex) -> Colour {
    let range = (k as u128) * (k as u128);
    let value = (c.a as u128 * i as u128 + c.b as u128) % p as u128;
    (value % range) as Colour
}

/// All `(a, b)` with `1 ≤ a < p`, `0 ≤ b < p` in lexicographic order.
pub fn family_stream(p: u64) -> FamilyStream {
    FamilyStream {
        p,
        next: (p > 1).then_some(Colouring { a: 1, b: 0 }),
    }
}

#[derive(Debug, Clone)]
pub struct FamilyStream {
    p: u64,
    next: Option<Colouring>,
}

impl Iterator for FamilyStream {
    type Item = Colouring;

    fn next(&mut self) -> Option<Colouring> {
        let cur = self.next?;
        self.next = if cur.b + 1 < self.p {
            Some(Colouring {
                a: cur.a,
                b: cur.b + 1,
            })
        } else if cur.a + 1 < self.p {
            Some(Colouring { a: cur.a + 1, b: 0 })
        } else {
            None
        };
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn ab(a: u64, b: u64) -> Colouring {
        Colouring { a, b }
    }

    #[test]
    fn prime_examples() {
        assert_eq!(find_prime_above(4).unwrap(), 5);
        assert_eq!(find_prime_above(10).unwrap(), 11);
        assert_eq!(find_prime_above(100).unwrap(), 101);
        assert_eq!(find_prime_above(2).unwrap(), 3);
        assert!(find_prime_above(1).is_err());
        assert!(find_prime_above(0).is_err());
    }

    #[test]
    fn hash_examples() {
        assert_eq!(hash_colour(ab(1, 0), 11, 2, 5), 1);
        assert_eq!(hash_colour(ab(1, 0), 11, 2, 11), 0);
        assert_eq!(hash_colour(ab(2, 3), 5, 1, 4), 0);
    }

    #[test]
    fn hash_does_not_overflow() {
        let p = 18_446_744_073_709_551_557; // largest 64-bit prime
        let c = ab(p - 1, p - 1);
        let got = hash_colour(c, p, 3, usize::MAX);
        let want = ((p as u128 - 1) * usize::MAX as u128 + p as u128 - 1) % p as u128 % 9;
        assert_eq!(got as u128, want);
    }

    #[test]
    fn stream_examples() {
        let all: Vec<_> = family_stream(5).collect();
        assert_eq!(all.len(), 20);
        assert_eq!(all[0], ab(1, 0));
        assert_eq!(*all.last().unwrap(), ab(4, 4));
        let three: Vec<_> = family_stream(3).map(|c| (c.a, c.b)).collect();
        assert_eq!(three, vec![(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, all);
        assert!(family_stream(23).eq(family_stream(23)));
    }

    #[test]
    fn colourful_examples() {
        let fam = ColourFamily::with_prime(10, 2, 11).unwrap();
        assert!(fam.is_colourful(ab(1, 0), &[7]));
        assert!(fam.is_colourful(ab(1, 0), &[]));
        assert!(!fam.is_colourful(ab(1, 0), &[1, 5]));
        assert!(fam.is_colourful(ab(1, 0), &[1, 2, 3, 4]));
        assert!(!fam.is_colourful(ab(1, 0), &[1, 2, 3, 4, 6]));
    }

    #[test]
    fn class_examples() {
        let g = Graph::path(3);
        let fam = ColourFamily::with_prime(3, 2, 5).unwrap();
        assert!(!fam.class_nonempty(&g, ab(1, 0), 0));
        assert!(fam.class_nonempty(&g, ab(1, 0), 2));
        let empty = Graph::from_edges(0, []).unwrap();
        assert!(!fam.class_nonempty(&empty, ab(1, 0), 0));
    }

    #[test]
    fn affine_part_is_injective_below_p() {
        let p = 23;
        for c in family_stream(p) {
            let mut seen = vec![false; p as usize];
            for i in 1..=20u64 {
                let v = ((c.a * i + c.b) % p) as usize;
                assert!(!seen[v]);
                seen[v] = true;
            }
        }
    }

    #[test]
    fn bad_family_parameters() {
        assert!(ColourFamily::with_prime(10, 2, 7).is_err());
        assert!(ColourFamily::with_prime(10, 2, 12).is_err());
        assert!(ColourFamily::with_prime(10, 0, 11).is_err());
        assert_eq!(ColourFamily::new(20, 3).unwrap().prime(), 23);
        assert_eq!(ColourFamily::new(20, 3).unwrap().size(), 506);
    }
}
