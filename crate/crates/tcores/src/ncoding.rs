//! Lattice codings of t-cores via extended t-residue diagrams.
//!
//! Label the cell (j, k) of the diagram (column 0 included) with
//! k - j mod t, call a cell exposed when it ends its row, and say a cell
//! with k - j = d lies in region floor(d/t) + 1. For a t-core the vector
//! N = [n_0, ..., n_{t-1}], where n_i is the maximal region containing an
//! exposed cell labeled i, has integer entries summing to zero, and
//!
//! ```text
//! |lambda| = (t/2) |N|^2 + B . N,    B = [0, 1, ..., t-1].
//! ```
//!
//! This is a bijection between t-cores of n and zero-sum integer vectors of
//! that size, which makes enumeration of t-cores a bounded lattice search
//! rather than a scan over all partitions.

use std::fmt;

use crate::abacus::{partition_from_abacus, Abacus};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::squares;

/// Zero-sum integer vector encoding a t-core.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCoding {
    entries: Vec<i64>,
}

impl NCoding {
    /// Builds a coding from entries, validating the zero-sum invariant.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::ConditionViolated(format!(
                "coding needs at least 2 entries, got {}",
                entries.len()
            )));
        }
        if entries.iter().sum::<i64>() != 0 {
            return Err(Error::NonZeroSum(entries));
        }
        Ok(NCoding { entries })
    }

    pub fn t(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Entrywise reversal and negation; an involution whose fixed points
    /// are exactly the self-conjugate cores.
    pub fn conjugate(&self) -> NCoding {
        let entries = self.entries.iter().rev().map(|&e| -e).collect();
        NCoding { entries }
    }

    /// Self-conjugacy via the reversal identity n_k = -n_{t-1-k}.
    pub fn is_self_conjugate(&self) -> bool {
        let t = self.entries.len();
        (0..t).all(|k| self.entries[k] == -self.entries[t - 1 - k])
    }
}

impl fmt::Display for NCoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for NCoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coding of a t-core read off its extended t-residue diagram.
///
/// Exposed cells are the row ends (j, lambda_j) for j <= s and the column-0
/// cells (j, 0) for j > s; the entry for label i is the maximal region among
/// exposed cells labeled i.
pub fn ncoding_from_partition(lambda: &Partition, t: u32) -> Result<NCoding> {
    if let Some(hook) = lambda.offending_hook(t) {
        return Err(Error::NotTCore { t, hook });
    }
    let ti = t as i64;
    let s = lambda.num_parts() as i64;
    let mut entries = vec![i64::MIN; t as usize];
    // Column 0 supplies one exposed cell per label below row s; the first
    // hit per residue is the maximal one since regions decrease with j.
    for j in s + 1..=s + ti {
        let label = (-j).rem_euclid(ti) as usize;
        if entries[label] == i64::MIN {
            entries[label] = (-j).div_euclid(ti) + 1;
        }
    }
    for (j0, &part) in lambda.parts().iter().enumerate() {
        let d = part as i64 - (j0 as i64 + 1);
        let label = d.rem_euclid(ti) as usize;
        entries[label] = entries[label].max(d.div_euclid(ti) + 1);
    }
    let coding = NCoding { entries };
    assert_eq!(
        coding.entries.iter().sum::<i64>(),
        0,
        "residue-diagram coding of the {t}-core {lambda} does not sum to zero"
    );
    Ok(coding)
}

/// Size recovered from a coding: (t/2)|N|^2 + B.N with B = [0, ..., t-1].
pub fn size_from_ncoding(coding: &NCoding) -> u64 {
    let t = coding.entries.len() as i64;
    let norm2: i64 = coding.entries.iter().map(|&e| e * e).sum();
    let linear: i64 = coding
        .entries
        .iter()
        .enumerate()
        .map(|(j, &e)| j as i64 * e)
        .sum();
    let twice = t * norm2 + 2 * linear;
    assert!(twice >= 0 && twice % 2 == 0);
    (twice / 2) as u64
}

/// Abacus hosted on `s` beads: with l + s = alpha t + beta, the entry
/// n_l + alpha lands in column beta. Fails when some entry would be
/// negative, meaning `s` is too small for this coding.
pub fn abacus_from_ncoding(coding: &NCoding, s: u64) -> Result<Abacus> {
    let t = coding.entries.len();
    let ti = t as i64;
    let mut counts = vec![0i64; t];
    for (l, &e) in coding.entries.iter().enumerate() {
        let shifted = l as i64 + s as i64;
        let beta = shifted.rem_euclid(ti) as usize;
        let alpha = shifted.div_euclid(ti);
        counts[beta] = e + alpha;
    }
    if counts.iter().any(|&c| c < 0) {
        return Err(Error::BeadCountTooSmall { s });
    }
    Abacus::new(t as u32, counts.into_iter().map(|c| c as u32).collect())
}

/// Exact inverse of [`abacus_from_ncoding`] at the abacus's own bead count.
pub fn ncoding_from_abacus(abacus: &Abacus) -> NCoding {
    let t = abacus.t() as usize;
    let ti = t as i64;
    let s = abacus.bead_count() as i64;
    let entries = (0..t)
        .map(|l| {
            let shifted = l as i64 + s;
            let beta = shifted.rem_euclid(ti) as usize;
            let alpha = shifted.div_euclid(ti);
            abacus.counts()[beta] as i64 - alpha
        })
        .collect();
    let coding = NCoding { entries };
    debug_assert_eq!(coding.entries.iter().sum::<i64>(), 0);
    coding
}

/// The unique normalized abacus (column 0 empty) hosting this coding.
///
/// Column 0 is emptied exactly when the bead count is s = -l - t n_l for
/// the index l that wraps to column 0; exactly one choice of l admits a
/// valid abacus, and anything else panics.
pub fn normalized_abacus_from_ncoding(coding: &NCoding) -> Abacus {
    let t = coding.entries.len() as i64;
    let mut found: Option<Abacus> = None;
    for (l, &e) in coding.entries.iter().enumerate() {
        let s = -(l as i64) - t * e;
        if s < 0 {
            continue;
        }
        if let Ok(a) = abacus_from_ncoding(coding, s as u64) {
            if a.is_normalized() {
                assert!(
                    found.is_none(),
                    "normalized abacus of {coding} is not unique"
                );
                found = Some(a);
            }
        }
    }
    found.unwrap_or_else(|| panic!("coding {coding} admits no normalized abacus"))
}

/// Partition encoded by a coding, through its normalized abacus.
pub fn partition_from_ncoding(coding: &NCoding) -> Partition {
    partition_from_abacus(&normalized_abacus_from_ncoding(coding))
}

/// All codings of t-cores of n, in ascending lexicographic order.
///
/// The search walks vectors x with x_j = t n_j + j, which satisfy
/// sum x_j = t(t-1)/2 and sum x_j^2 = 2tn + t(t-1)(2t-1)/6 with
/// x_j = j mod t exactly; each coordinate is bounded by the square budget,
/// so the search region is complete with no global norm bound needed.
pub fn enumerate_t_cores_lattice(t: u32, n: u64) -> Vec<NCoding> {
    debug_assert!(t >= 2);
    let ti = t as i64;
    let target = squares::cores_sum_target(t, n);
    let residues: Vec<Vec<i64>> = (0..ti).map(|j| vec![j]).collect();
    let linear = Some(ti * (ti - 1) / 2);
    squares::enumerate_reps(target, ti, &residues, linear)
        .into_iter()
        .map(|x| {
            let entries = x
                .iter()
                .enumerate()
                .map(|(j, &v)| (v - j as i64) / ti)
                .collect();
            NCoding { entries }
        })
        .collect()
}

/// Self-conjugate sublist of [`enumerate_t_cores_lattice`], filtered by the
/// reversal identity.
pub fn enumerate_sc_t_cores_lattice(t: u32, n: u64) -> Vec<NCoding> {
    enumerate_t_cores_lattice(t, n)
        .into_iter()
        .filter(|c| c.is_self_conjugate())
        .collect()
}
