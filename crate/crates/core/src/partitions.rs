//! Integer partitions: validation, parsing, enumeration, counting and the
//! elementary surgery (conjugation, concatenation, scaling, truncation).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::checked;
use crate::Int;

/// A weakly decreasing sequence of positive integers.
///
/// Construction always goes through validation, so every `Partition` in
/// circulation satisfies the ordering and positivity invariants.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Int>", into = "Vec<Int>")]
pub struct Partition {
    parts: Vec<Int>,
    n: Int,
}

impl Partition {
    /// Sorts `parts` descending and validates them.
    pub fn new(mut parts: Vec<Int>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::parse("", "empty partition"));
        }
        if let Some(&bad) = parts.iter().find(|&&p| p <= 0) {
            return Err(Error::parse(bad.to_string(), "part must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = checked::sum(parts.iter().copied(), "partition sum")?;
        Ok(Partition { parts, n })
    }

    /// The one-part partition `(n)`.
    pub fn single(n: Int) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn parts(&self) -> &[Int] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn n(&self) -> Int {
        self.n
    }

    /// The number of parts.
    pub fn s(&self) -> usize {
        self.parts.len()
    }

    pub fn largest(&self) -> Int {
        self.parts[0]
    }

    pub fn smallest(&self) -> Int {
        self.parts[self.parts.len() - 1]
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// True when every pair of parts is coprime (repeated 1s allowed).
    pub fn has_pairwise_coprime_parts(&self) -> bool {
        let p = &self.parts;
        (0..p.len()).all(|i| (i + 1..p.len()).all(|j| num_integer::gcd(p[i], p[j]) == 1))
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest();
        let parts = (0..width)
            .map(|col| self.parts.iter().take_while(|&&p| p > col).count() as Int)
            .collect();
        Partition { parts, n: self.n }
    }

    /// Multiset union of the parts of `self` and `other`.
    pub fn concat(&self, other: &Partition) -> Result<Partition> {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Multiplies every part by `d`.
    pub fn scale(&self, d: Int) -> Result<Partition> {
        if d < 1 {
            return Err(Error::Precondition(format!("scale factor {d} must be >= 1")));
        }
        let parts = self
            .parts
            .iter()
            .map(|&p| checked::mul(p, d, "partition scaling"))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    /// Drops the `j` smallest parts. Requires `j < s`.
    pub fn truncate(&self, j: usize) -> Result<Partition> {
        if j >= self.s() {
            return Err(Error::Precondition(format!(
                "cannot drop {j} of {} parts: the result would be empty",
                self.s()
            )));
        }
        let parts = self.parts[..self.s() - j].to_vec();
        let n = self.n - self.parts[self.s() - j..].iter().sum::<Int>();
        Ok(Partition { parts, n })
    }
}

impl TryFrom<Vec<Int>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<Int>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<Int> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated positive integers, e.g. `"8, 2, 1"` or `"(8,2,1)"`.
    fn from_str(text: &str) -> Result<Self> {
        let inner = text.trim();
        let text = inner
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(inner);
        if text.trim().is_empty() {
            return Err(Error::parse(text, "empty partition"));
        }
        let parts = text
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let value: Int = tok
                    .parse()
                    .map_err(|_| Error::parse(tok, "not an integer"))?;
                if value <= 0 {
                    return Err(Error::parse(tok, "part must be positive"));
                }
                Ok(value)
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
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

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` with exactly `s` parts, in descending
/// lexicographic order of their part sequences.
pub fn enumerate_partitions(s: usize, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if s == 0 || n == 0 || s > n {
        return out;
    }
    let mut prefix = Vec::with_capacity(s);
    fill(&mut prefix, s, n, n, &mut out);
    out
}

// Appends every completion of `prefix` by `remaining` parts summing to
// `total`, each part at most `cap`.
fn fill(prefix: &mut Vec<Int>, remaining: usize, total: usize, cap: usize, out: &mut Vec<Partition>) {
    if remaining == 0 {
        if total == 0 {
            let n = prefix.iter().sum();
            out.push(Partition {
                parts: prefix.clone(),
                n,
            });
        }
        return;
    }
    // every later part is >= 1 and <= the current one
    let hi = cap.min(total - (remaining - 1));
    let lo = total.div_ceil(remaining);
    for first in (lo..=hi).rev() {
        prefix.push(first as Int);
        fill(prefix, remaining - 1, total - first, first, out);
        prefix.pop();
    }
}

/// All partitions of `n` (every part count), grouped by part count.
pub fn all_partitions(n: usize) -> impl Iterator<Item = Partition> {
    (1..=n).flat_map(move |s| enumerate_partitions(s, n))
}

/// p(s, n) by the recurrence p(s,n) = p(s-1,n-1) + p(s,n-s).
pub fn count_by_recurrence(s: usize, n: usize) -> Result<Int> {
    // table[k][m] = p(k, m) for k <= s, m <= n
    let mut table = vec![vec![0 as Int; n + 1]; s + 1];
    table[0][0] = 1;
    for k in 1..=s {
        for m in k..=n {
            let a = table[k - 1][m - 1];
            let b = table[k][m - k];
            table[k][m] = checked::add(a, b, "partition count recurrence")?;
        }
    }
    Ok(table[s][n])
}

/// p(s, n) as the coefficient of q^n in q^s / ((1-q)(1-q^2)...(1-q^s)).
pub fn count_by_generating_function(s: usize, n: usize) -> Result<Int> {
    if s > n {
        return Ok(0);
    }
    let mut series = vec![0 as Int; n + 1];
    series[s] = 1;
    for k in 1..=s {
        // multiply by 1/(1 - q^k) = 1 + q^k + q^2k + ...
        for m in k..=n {
            series[m] = checked::add(series[m], series[m - k], "generating function series")?;
        }
    }
    Ok(series[n])
}

/// Both counting methods; an error if they disagree.
pub fn count_partitions(s: usize, n: usize) -> Result<Int> {
    let a = count_by_recurrence(s, n)?;
    let b = count_by_generating_function(s, n)?;
    if a != b {
        return Err(Error::Consistency(format!(
            "p({s},{n}): recurrence gives {a}, generating function gives {b}"
        )));
    }
    Ok(a)
}
