//! Integer partitions and standard Young tableaux.
//!
//! Partitions are stored without trailing zeros, so the empty partition is
//! the unique partition of 0. Enumeration is in decreasing lexicographic
//! order, e.g. `4, 3,1, 2,2, 2,1,1, 1,1,1,1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Hook length of the box in row `i`, column `j` (0-based).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.0[i] - j - 1;
        let leg = self.0[i + 1..].iter().filter(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (i, &len) in self.0.iter().enumerate() {
            for j in 0..len {
                acc *= self.hook_length(i, j);
            }
        }
        acc
    }

    /// f^λ = r!/h(λ), the number of standard tableaux of this shape.
    pub fn num_standard_tableaux(&self) -> BigUint {
        factorial(self.size()) / self.hook_product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad partition part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// All partitions of `r` in decreasing lexicographic order.
pub fn enumerate_partitions(r: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, &mut Vec::new(), &mut out);
    out
}

/// A standard filling of a shape by an arbitrary set of distinct integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates rows (strictly increasing along rows and down columns).
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidPartition(format!("row {row:?} is not increasing")));
            }
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidPartition(format!(
                    "column violation between rows {:?} and {:?}",
                    pair[0], pair[1]
                )));
            }
        }
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition("repeated tableau entry".into()));
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|j| self.rows.iter().filter_map(|row| row.get(j).copied()).collect()).collect()
    }

    /// Entries in increasing order.
    pub fn entries(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// 0-based row containing `entry`.
    pub fn row_of(&self, entry: usize) -> Option<usize> {
        self.rows.iter().position(|row| row.contains(&entry))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

/// All standard tableaux of shape `shape` filled with `entries`.
///
/// Entries are placed in increasing order; each new entry goes at the end of
/// any row whose extension keeps the filling a valid shape, rows tried top to
/// bottom.
pub fn enumerate_standard_tableaux(shape: &Partition, entries: &[usize]) -> Result<Vec<StandardTableau>> {
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != entries.len() {
        return Err(Error::InvalidPartition("tableau entries must be distinct".into()));
    }
    if sorted.len() != shape.size() {
        return Err(Error::TableauSizeMismatch { shape: shape.size(), entries: entries.len() });
    }

    fn go(
        shape: &[usize],
        entries: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
        partition: &Partition,
    ) {
        let Some((&next, rest)) = entries.split_first() else {
            out.push(StandardTableau { shape: partition.clone(), rows: rows.clone() });
            return;
        };
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(next);
                go(shape, rest, rows, out, partition);
                rows[i].pop();
            }
        }
    }

    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    go(shape.parts(), &sorted, &mut rows, &mut out, shape);
    Ok(out)
}
