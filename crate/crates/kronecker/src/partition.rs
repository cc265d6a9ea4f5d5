//! Integer partitions with explicit zero parts.
//!
//! Partitions carry their recorded length: `(2,0)` and `(2)` compare equal but
//! keep their stored parts, since a trailing zero stands for an extra module
//! summand (`I_0`, `P_0`) in every place where partitions index direct sums.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::ParseError;

/// Weakly decreasing sequence of non-negative integers.
#[derive(Clone, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from its parts. Panics unless weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Recorded parts, including trailing zeros.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Recorded length, counting trailing zeros.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weight() == 0
    }

    /// 1-based part access; 0 beyond the recorded length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            panic!("partition parts are 1-indexed");
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts with trailing zeros stripped.
    pub fn trimmed(&self) -> &[u32] {
        let n = self.nonzero_len();
        &self.parts[..n]
    }

    /// Number of nonzero parts.
    pub fn nonzero_len(&self) -> usize {
        self.parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1)
    }

    /// Same partition re-recorded with exactly `len` parts (len >= nonzero_len).
    pub fn padded(&self, len: usize) -> Partition {
        assert!(len >= self.nonzero_len(), "cannot truncate nonzero parts");
        let mut parts = self.trimmed().to_vec();
        parts.resize(len, 0);
        Partition { parts }
    }

    pub fn trimmed_partition(&self) -> Partition {
        Partition {
            parts: self.trimmed().to_vec(),
        }
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.nonzero_len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.nonzero_len();
        if n == 0 {
            return Partition::empty();
        }
        let mut parts = Vec::with_capacity(self.parts[0] as usize);
        for t in 1..=self.parts[0] {
            parts.push(self.trimmed().iter().filter(|&&p| p >= t).count() as u32);
        }
        Partition { parts }
    }

    /// All partitions of `n`, in the order produced by the descent recursion.
    pub fn all_of(n: u32) -> Vec<Partition> {
        Self::all_of_bounded(n, n, usize::MAX)
    }

    /// All partitions of `n` with at most `max_len` nonzero parts.
    pub fn all_of_max_len(n: u32, max_len: usize) -> Vec<Partition> {
        Self::all_of_bounded(n, n, max_len)
    }

    /// All partitions of `n` with first part at most `max_part` and at most
    /// `max_len` nonzero parts.
    pub fn all_of_bounded(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            let top = rem.min(max_part);
            for p in (1..=top).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        rec(n, max_part, max_len, &mut cur, &mut out);
        out
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}
impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = parse_paren_list(s)?;
        let parts: Vec<u32> = parts
            .into_iter()
            .map(|(v, pos)| {
                u32::try_from(v).map_err(|_| ParseError::at(pos, "partition parts must be >= 0"))
            })
            .collect::<Result<_, _>>()?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(ParseError::at(0, "partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

/// Integer vector; the ambient type for dominance comparisons.
pub type IntVec = Vec<i64>;

/// Parses `"(3,-1,0)"` into an integer vector. `"()"` is empty.
pub fn parse_int_vec(s: &str) -> Result<IntVec, ParseError> {
    Ok(parse_paren_list(s)?.into_iter().map(|(v, _)| v).collect())
}

fn parse_paren_list(s: &str) -> Result<Vec<(i64, usize)>, ParseError> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| ParseError::at(0, "expected a parenthesized list like (3,2,1)"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = 1;
    for tok in inner.split(',') {
        let v: i64 = tok
            .trim()
            .parse()
            .map_err(|_| ParseError::at(pos, format!("invalid integer {tok:?}")))?;
        out.push((v, pos));
        pos += tok.len() + 1;
    }
    Ok(out)
}
