//! Young diagrams as integer partitions.
//!
//! A [`Partition`] stores weakly decreasing positive row lengths; trailing
//! zeros are never stored. Levels are enumerated in reverse-lexicographic
//! order, which is the canonical order used for every matrix index in this
//! crate, and [`Partition`]'s `Ord` agrees with it (graded by size first).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A Young diagram: weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    rows: Vec<u32>,
}

/// Direction of a one-box move in the Young graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Add one box.
    Up,
    /// Remove one box.
    Down,
}

/// Sizes of two diagrams expected to agree did not.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("diagrams have different sizes: {0} vs {1}")]
pub struct SizeMismatch(pub u64, pub u64);

impl Partition {
    /// Builds a partition from row lengths. Trailing zeros are stripped.
    ///
    /// Panics if the rows are not weakly decreasing.
    pub fn new(mut rows: Vec<u32>) -> Self {
        assert!(
            rows.windows(2).all(|w| w[0] >= w[1]),
            "partition rows must be weakly decreasing: {rows:?}"
        );
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Partition { rows }
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row length with zero padding past the last row (`i` is 0-based).
    pub fn row(&self, i: usize) -> u32 {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> u64 {
        self.rows.iter().map(|&r| r as u64).sum()
    }

    /// The transposed diagram (rows and columns exchanged).
    pub fn transpose(&self) -> Partition {
        let cols = self.row(0) as usize;
        let mut t = Vec::with_capacity(cols);
        for j in 1..=cols as u32 {
            t.push(self.rows.iter().filter(|&&r| r >= j).count() as u32);
        }
        Partition { rows: t }
    }

    /// Number of distinct row lengths (equals the number of removable boxes).
    pub fn distinct_row_lengths(&self) -> usize {
        let mut n = 0;
        let mut prev = 0;
        for &r in &self.rows {
            if r != prev {
                n += 1;
                prev = r;
            }
        }
        n
    }

    /// All diagrams one box away in the given direction, in canonical order.
    pub fn covers(&self, dir: Direction) -> Vec<Partition> {
        match dir {
            Direction::Down => {
                let mut out = Vec::new();
                for i in (0..self.rows.len()).rev() {
                    // row i is removable iff it ends a run of equal lengths
                    if i + 1 == self.rows.len() || self.rows[i] > self.rows[i + 1] {
                        let mut rows = self.rows.clone();
                        rows[i] -= 1;
                        out.push(Partition::new(rows));
                    }
                }
                out
            }
            Direction::Up => {
                let mut out = Vec::new();
                for i in 0..self.rows.len() {
                    if i == 0 || self.rows[i] < self.rows[i - 1] {
                        let mut rows = self.rows.clone();
                        rows[i] += 1;
                        out.push(Partition::new(rows));
                    }
                }
                let mut rows = self.rows.clone();
                rows.push(1);
                out.push(Partition::new(rows));
                out
            }
        }
    }

    /// Whether `self` and `other` are joined by an edge of the one-box
    /// displacement graph on their level: distinct diagrams whose box sets
    /// differ in exactly two boxes.
    pub fn updown_adjacent(&self, other: &Partition) -> Result<bool, SizeMismatch> {
        if self.size() != other.size() {
            return Err(SizeMismatch(self.size(), other.size()));
        }
        if self == other {
            return Ok(false);
        }
        let rows = self.rows.len().max(other.rows.len());
        let diff: u64 = (0..rows)
            .map(|i| (self.row(i) as i64 - other.row(i) as i64).unsigned_abs())
            .sum();
        Ok(diff == 2)
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn enumerate_level(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_parts(n, n, &mut stack, &mut out);
    out
}

fn gen_parts(n: u64, max: u64, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition {
            rows: stack.clone(),
        });
        return;
    }
    for part in (1..=n.min(max)).rev() {
        stack.push(part as u32);
        gen_parts(n - part, part, stack, out);
        stack.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            // same size: reverse-lexicographic, larger leading parts first
            .then_with(|| other.rows.cmp(&self.rows))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure to parse a partition from its text form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a partition (expected e.g. `[3,3,1]` or `[]`): {0:?}")]
pub struct ParsePartitionError(pub String);

impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "∅" {
            return Ok(Partition::empty());
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| ParsePartitionError(s.to_owned()))?
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut rows = Vec::new();
        for piece in inner.split(',') {
            let r: u32 = piece
                .trim()
                .parse()
                .map_err(|_| ParsePartitionError(s.to_owned()))?;
            if r == 0 {
                return Err(ParsePartitionError(s.to_owned()));
            }
            rows.push(r);
        }
        if !rows.windows(2).all(|w| w[0] >= w[1]) {
            return Err(ParsePartitionError(s.to_owned()));
        }
        Ok(Partition::new(rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn p(rows: &[u32]) -> Partition {
        Partition::new(rows.to_vec())
    }

    /// Independent partition count, by a direct two-argument recursion.
    fn count_partitions(n: u64, max: u64) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=n.min(max)).map(|k| count_partitions(n - k, k)).sum()
    }

    #[test]
    fn enumerate_small_levels() {
        assert_eq!(enumerate_level(0), vec![Partition::empty()]);
        assert_eq!(enumerate_level(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            enumerate_level(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn enumerate_matches_bruteforce_count() {
        for n in 0..=12 {
            let level = enumerate_level(n);
            assert_eq!(level.len() as u64, count_partitions(n, n), "level {n}");
            let set: HashSet<_> = level.iter().cloned().collect();
            assert_eq!(set.len(), level.len(), "duplicates at level {n}");
            assert!(level.iter().all(|l| l.size() == n));
        }
        assert_eq!(enumerate_level(7).len(), 15);
    }

    #[test]
    fn enumeration_is_sorted_in_canonical_order() {
        for n in 0..=8 {
            let level = enumerate_level(n);
            assert!(level.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn covers_examples() {
        assert_eq!(p(&[1]).covers(Direction::Down), vec![Partition::empty()]);
        assert_eq!(p(&[2, 1]).covers(Direction::Down), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            p(&[2, 1]).covers(Direction::Up),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
        assert_eq!(Partition::empty().covers(Direction::Up), vec![p(&[1])]);
    }

    #[test]
    fn covers_counts_match_distinct_row_lengths() {
        for n in 0..=10 {
            for la in enumerate_level(n) {
                let k = la.distinct_row_lengths();
                assert_eq!(la.covers(Direction::Down).len(), k);
                assert_eq!(la.covers(Direction::Up).len(), k + 1);
            }
        }
    }

    #[test]
    fn transpose_maps_down_covers_bijectively() {
        for n in 1..=10 {
            for la in enumerate_level(n) {
                let direct: HashSet<_> = la
                    .covers(Direction::Down)
                    .into_iter()
                    .map(|m| m.transpose())
                    .collect();
                let through: HashSet<_> =
                    la.transpose().covers(Direction::Down).into_iter().collect();
                assert_eq!(direct, through, "λ = {la}");
            }
        }
    }

    fn box_set(la: &Partition) -> HashSet<(u32, u32)> {
        let mut s = HashSet::new();
        for (i, &r) in la.rows().iter().enumerate() {
            for j in 1..=r {
                s.insert((i as u32 + 1, j));
            }
        }
        s
    }

    #[test]
    fn updown_adjacent_examples() {
        assert_eq!(p(&[2]).updown_adjacent(&p(&[1, 1])), Ok(true));
        assert_eq!(p(&[2, 1]).updown_adjacent(&p(&[2, 1])), Ok(false));
        assert_eq!(p(&[3]).updown_adjacent(&p(&[1, 1, 1])), Ok(false));
        assert!(p(&[2]).updown_adjacent(&p(&[1])).is_err());
    }

    #[test]
    fn updown_adjacent_matches_symmetric_difference_oracle() {
        for n in 1..=7 {
            let level = enumerate_level(n);
            for a in &level {
                for b in &level {
                    let sym = box_set(a).symmetric_difference(&box_set(b)).count();
                    let expect = a != b && sym == 2;
                    assert_eq!(a.updown_adjacent(b), Ok(expect), "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn updown_adjacent_agrees_with_shared_upper_cover() {
        for n in 1..=7 {
            let level = enumerate_level(n);
            for a in &level {
                let ups: HashSet<_> = a.covers(Direction::Up).into_iter().collect();
                for b in &level {
                    let shared = b.covers(Direction::Up).iter().any(|v| ups.contains(v));
                    assert_eq!(a.updown_adjacent(b).unwrap(), a != b && shared);
                }
            }
        }
    }

    #[test]
    fn updown_graph_is_connected() {
        for n in 1..=10 {
            let level = enumerate_level(n);
            let mut seen = vec![false; level.len()];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(i) = stack.pop() {
                for (j, other) in level.iter().enumerate() {
                    if !seen[j] && level[i].updown_adjacent(other).unwrap() {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            assert!(seen.iter().all(|&s| s), "level {n} not connected");
        }
    }

    #[test]
    fn text_round_trip() {
        for s in ["[3,3,1]", "[]", "[1]", "[10,2,2,1]"] {
            let la: Partition = s.parse().unwrap();
            assert_eq!(la.to_string(), s);
        }
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
    }

    proptest! {
        #[test]
        fn transpose_is_an_involution(mut rows in proptest::collection::vec(1u32..=9, 0..8)) {
            rows.sort_unstable_by(|a, b| b.cmp(a));
            let la = Partition::new(rows);
            prop_assert_eq!(la.transpose().transpose(), la);
        }

        #[test]
        fn transpose_preserves_size(mut rows in proptest::collection::vec(1u32..=9, 0..8)) {
            rows.sort_unstable_by(|a, b| b.cmp(a));
            let la = Partition::new(rows);
            prop_assert_eq!(la.transpose().size(), la.size());
        }
    }
}
