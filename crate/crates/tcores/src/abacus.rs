//! Structure numbers and the t-abacus of a t-core.
//!
//! For a partition with s parts the structure numbers are B_j = lambda_j - j + s,
//! a strictly decreasing sequence. Writing B_j = t(r_j - 1) + c_j with
//! 0 <= c_j <= t-1 places one bead in row r_j and column c_j of an abacus with
//! t rods. For a t-core the beads in every column are flush against the top,
//! so the abacus is summarized by its column counts (a_0, ..., a_{t-1}).
//! Every t-core has a unique representative with a_0 = 0 once the partition
//! is padded with the right number of zero parts.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Column counts of a t-core abacus.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Abacus {
    t: u32,
    counts: Vec<u32>,
}

impl Abacus {
    /// Builds an abacus from column counts; `counts.len()` must equal `t`.
    pub fn new(t: u32, counts: Vec<u32>) -> Result<Self> {
        if t < 2 || counts.len() != t as usize {
            return Err(Error::ConditionViolated(format!(
                "abacus needs exactly t = {t} column counts, got {}",
                counts.len()
            )));
        }
        Ok(Abacus { t, counts })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Total number of beads s.
    pub fn bead_count(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    /// True when column 0 carries no bead.
    pub fn is_normalized(&self) -> bool {
        self.counts[0] == 0
    }
}

impl fmt::Display for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Structure numbers (B_1, ..., B_s) with B_j = lambda_j - j + s.
/// Strictly decreasing; empty for the empty partition.
pub fn structure_numbers(lambda: &Partition) -> Vec<u64> {
    let s = lambda.num_parts() as u64;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(j0, &p)| p as u64 + s - (j0 as u64 + 1))
        .collect()
}

/// Column counts of the abacus of a t-core, computed at the partition's own
/// number of parts. Fails on non-t-cores, naming an offending hook length.
pub fn abacus_from_partition(lambda: &Partition, t: u32) -> Result<Abacus> {
    if let Some(hook) = lambda.offending_hook(t) {
        return Err(Error::NotTCore { t, hook });
    }
    let mut counts = vec![0u32; t as usize];
    for b in structure_numbers(lambda) {
        counts[(b % t as u64) as usize] += 1;
    }
    // Flush-bead check: in column j the beads must sit at j, j+t, ...,
    // j+(a_j-1)t. Guaranteed by the t-core condition.
    debug_assert!({
        let mut beads = structure_numbers(lambda);
        beads.sort_unstable();
        (0..t as u64).all(|j| {
            let col: Vec<u64> = beads
                .iter()
                .copied()
                .filter(|b| b % t as u64 == j)
                .collect();
            col.iter()
                .enumerate()
                .all(|(r, &b)| b == j + r as u64 * t as u64)
        })
    });
    Ok(Abacus { t, counts })
}

/// Partition represented by an abacus. Total: every column-count vector is a
/// flush-bead abacus and therefore encodes a t-core.
pub fn partition_from_abacus(abacus: &Abacus) -> Partition {
    let t = abacus.t as u64;
    let mut beads: Vec<u64> = Vec::new();
    for (j, &a) in abacus.counts.iter().enumerate() {
        for r in 0..a as u64 {
            beads.push(r * t + j as u64);
        }
    }
    beads.sort_unstable_by(|x, y| y.cmp(x));
    let s = beads.len() as u64;
    let parts: Vec<u32> = beads
        .iter()
        .enumerate()
        .map(|(j0, &b)| (b + (j0 as u64 + 1) - s) as u32)
        .take_while(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("beads decode to a valid partition")
}

/// The unique abacus of shape (0, a_1, ..., a_{t-1}) representing the t-core
/// `lambda`, found by padding the partition with zero parts.
///
/// Exactly one bead count in the window s, s+1, ..., s+t-1 empties column 0;
/// a window without one would break the normalized-abacus correspondence, so
/// that case panics.
pub fn normalize_abacus(lambda: &Partition, t: u32) -> Result<Abacus> {
    if let Some(hook) = lambda.offending_hook(t) {
        return Err(Error::NotTCore { t, hook });
    }
    let s0 = lambda.num_parts() as u64;
    let mut found: Option<Abacus> = None;
    for s in s0..s0 + t as u64 {
        let mut counts = vec![0u32; t as usize];
        for j in 1..=s {
            let part = if j <= s0 {
                lambda.parts()[(j - 1) as usize] as u64
            } else {
                0
            };
            let b = part + s - j;
            counts[(b % t as u64) as usize] += 1;
        }
        if counts[0] == 0 {
            let abacus = Abacus { t, counts };
            assert!(
                found.is_none(),
                "normalization of {lambda} at t = {t} is not unique"
            );
            found = Some(abacus);
        }
    }
    match found {
        Some(a) => Ok(a),
        None => {
            panic!("no normalized abacus for {lambda} at t = {t} in a window of {t} bead counts")
        }
    }
}
