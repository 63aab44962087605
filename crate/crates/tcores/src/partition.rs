//! Integer partitions, hook lengths, conjugation, and t-core predicates,
//! together with brute-force enumeration used as the ground-truth oracle
//! for small n.
//!
//! A partition of n is a non-increasing sequence of positive integers
//! summing to n. The hook length of the cell (j, k) of its Ferrers-Young
//! diagram is
//!
//! ```text
//! h(j, k) = lambda_j + lambda'_k - k - j + 1
//! ```
//!
//! where lambda'_k counts the parts that are >= k. A partition is a t-core
//! when no hook length is divisible by t, and self-conjugate when it equals
//! its row/column transpose.

use std::fmt;

use crate::error::{Error, Result};

/// Default cap for the all-partitions oracle. p(60) is just under a million,
/// which is still comfortable to materialize; beyond that callers should
/// switch to the lattice enumerator in [`crate::ncoding`].
pub const ORACLE_CAP: u64 = 60;

/// A partition: non-increasing positive parts with a cached size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    size: u64,
}

impl Partition {
    /// Builds a partition from its parts, validating that they are
    /// positive and non-increasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for window in parts.windows(2) {
            if window[0] < window[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must be non-increasing, got {} before {}",
                    window[0], window[1]
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        let size = parts.iter().map(|&p| p as u64).sum();
        Ok(Partition { parts, size })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            size: 0,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The partitioned integer n.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of parts s.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Column counts of the diagram: the k-th entry (1-based k) is the
    /// number of parts >= k.
    fn column_counts(&self) -> Vec<u32> {
        let width = self.parts.first().copied().unwrap_or(0) as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.parts {
            for col in cols.iter_mut().take(p as usize) {
                *col += 1;
            }
        }
        cols
    }

    /// The conjugate partition, obtained by transposing the diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.column_counts();
        let size = self.size;
        Partition { parts: cols, size }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.parts == self.conjugate().parts
    }

    /// Hook length of the cell (row, col), both 1-based.
    pub fn hook_length(&self, row: usize, col: usize) -> Result<u32> {
        if row == 0 || col == 0 || row > self.parts.len() {
            return Err(Error::CellOutOfDiagram { row, col });
        }
        let lam_j = self.parts[row - 1] as i64;
        if (col as i64) > lam_j {
            return Err(Error::CellOutOfDiagram { row, col });
        }
        let lam_k = self
            .parts
            .iter()
            .take_while(|&&p| p as usize >= col)
            .count() as i64;
        let h = lam_j + lam_k - col as i64 - row as i64 + 1;
        debug_assert!(h >= 1);
        Ok(h as u32)
    }

    /// Multiset of all hook lengths, sorted descending. Empty for the
    /// empty partition.
    pub fn hook_multiset(&self) -> Vec<u32> {
        let cols = self.column_counts();
        let mut hooks = Vec::with_capacity(self.size as usize);
        for (j0, &p) in self.parts.iter().enumerate() {
            for k0 in 0..p as usize {
                let h = p as i64 + cols[k0] as i64 - (k0 as i64 + 1) - (j0 as i64 + 1) + 1;
                hooks.push(h as u32);
            }
        }
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        hooks
    }

    /// True when no hook length is divisible by t.
    pub fn is_t_core(&self, t: u32) -> bool {
        debug_assert!(t >= 2);
        let cols = self.column_counts();
        for (j0, &p) in self.parts.iter().enumerate() {
            for k0 in 0..p as usize {
                let h = p as u64 + cols[k0] as u64 - (k0 as u64) - (j0 as u64) - 1;
                if h % t as u64 == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// First hook length divisible by t, if any.
    pub(crate) fn offending_hook(&self, t: u32) -> Option<u32> {
        let cols = self.column_counts();
        for (j0, &p) in self.parts.iter().enumerate() {
            for k0 in 0..p as usize {
                let h = p as u64 + cols[k0] as u64 - (k0 as u64) - (j0 as u64) - 1;
                if h % t as u64 == 0 {
                    return Some(h as u32);
                }
            }
        }
        None
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

/// All partitions of n in descending lexicographic order, refusing above
/// [`ORACLE_CAP`].
pub fn enumerate_partitions(n: u64) -> Result<Vec<Partition>> {
    enumerate_partitions_with_cap(n, ORACLE_CAP)
}

/// All partitions of n in descending lexicographic order, refusing above
/// the given cap.
pub fn enumerate_partitions_with_cap(n: u64, cap: u64) -> Result<Vec<Partition>> {
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    descend(n as u32, n as u32, &mut stack, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        let parts = stack.clone();
        let size = parts.iter().map(|&p| p as u64).sum();
        out.push(Partition { parts, size });
        return;
    }
    let hi = max_part.min(remaining);
    for part in (1..=hi).rev() {
        stack.push(part);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// Brute-force list of t-cores of n, in the order of [`enumerate_partitions`].
pub fn enumerate_t_cores_bruteforce(t: u32, n: u64) -> Result<Vec<Partition>> {
    Ok(enumerate_partitions(n)?
        .into_iter()
        .filter(|p| p.is_t_core(t))
        .collect())
}

/// Brute-force list of self-conjugate t-cores of n.
pub fn enumerate_sc_t_cores_bruteforce(t: u32, n: u64) -> Result<Vec<Partition>> {
    Ok(enumerate_partitions(n)?
        .into_iter()
        .filter(|p| p.is_t_core(t) && p.is_self_conjugate())
        .collect())
}
