//! The two-to-one map from 4-cores of 7n+2 onto self-conjugate 7-cores of
//! 8n+1, together with the three-squares maps it factors through.
//!
//! From a normalized 4-core abacus (0, a_1, a_2, a_3) set b_j = 4 a_j + j.
//! The hook-shift map
//!
//! ```text
//! psi(0, a1, a2, a3) = (-(b1+b2-b3)/2, (b1+b3-b2)/2, (b2+b3-b1)/2)
//! ```
//!
//! lands in the three-square representations of 8n+5. Self-conjugate
//! 7-cores are classified by six abacus families, giving a map rho onto
//! representations of 7n+14 whose inverse floors the six values
//! {x, 2x, x+-y, x+-z} (x the largest coordinate) indexed by residue mod 7.
//! Composing psi, the projection to unordered-sign classes, and the inverse
//! of rho yields the map phi, computable directly from the sorted b_j as
//!
//! ```text
//! C = {b2', b3', b2'-b1', b3'-b1', (b2'+b3'-b1')/2, b2'+b3'-b1'}
//! phi = (0, floor(c_1/7), ..., floor(c_6/7)),   c_i = i (mod 7).
//! ```
//!
//! When n is 4 mod 7 the image of psi can contain a zero coordinate (a
//! self-conjugate 4-core) and the map is refused; off that progression
//! every fiber is a conjugate pair.

use crate::abacus::{partition_from_abacus, Abacus};
use crate::error::{Error, Result};
use crate::ncoding::{
    enumerate_sc_t_cores_lattice, enumerate_t_cores_lattice, normalized_abacus_from_ncoding,
};
use crate::report::ReportRecord;
use crate::squares::{bkm_classes_of_three_squares, canonical_bkm};

/// The shifted column counts b_j = 4 a_j + j of a normalized 4-core abacus.
/// The b_j are distinct with distinct residues modulo 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookShift {
    b: [i64; 3],
}

impl HookShift {
    pub fn from_abacus(abacus: &Abacus) -> Result<Self> {
        if abacus.t() != 4 || !abacus.is_normalized() {
            return Err(Error::ConditionViolated(
                "hook shifts need a normalized abacus on 4 rods".into(),
            ));
        }
        let c = abacus.counts();
        Ok(HookShift {
            b: [
                4 * c[1] as i64 + 1,
                4 * c[2] as i64 + 2,
                4 * c[3] as i64 + 3,
            ],
        })
    }

    pub fn values(&self) -> [i64; 3] {
        self.b
    }

    /// The b values in increasing order.
    pub fn sorted(&self) -> [i64; 3] {
        let mut s = self.b;
        s.sort_unstable();
        s
    }
}

/// The six derived values of a hook shift, indexed by their residues
/// modulo 7. Defined whenever the values are distinct and nonzero mod 7,
/// which holds exactly off the refused progression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CSet {
    /// Entry i-1 is the unique value congruent to i modulo 7.
    by_residue: [i64; 6],
}

impl CSet {
    pub fn from_hook_shift(shift: &HookShift) -> Self {
        let [b1, b2, b3] = shift.sorted();
        let values = [b2, b3, b2 - b1, b3 - b1, (b2 + b3 - b1) / 2, b2 + b3 - b1];
        debug_assert_eq!((b2 + b3 - b1) % 2, 0);
        let mut by_residue = [0i64; 6];
        let mut seen = [false; 6];
        for v in values {
            let r = v.rem_euclid(7);
            assert!(
                r != 0 && !seen[(r - 1) as usize],
                "hook-shift values {values:?} collide modulo 7"
            );
            seen[(r - 1) as usize] = true;
            by_residue[(r - 1) as usize] = v;
        }
        CSet { by_residue }
    }

    /// The value congruent to i modulo 7, for 1 <= i <= 6.
    pub fn value(&self, i: usize) -> i64 {
        self.by_residue[i - 1]
    }
}

/// Three-squares image of a normalized 4-core abacus; the squares sum to
/// 8n+5 for the encoded partition of n.
pub fn psi(abacus: &Abacus) -> Result<(i64, i64, i64)> {
    let [b1, b2, b3] = HookShift::from_abacus(abacus)?.values();
    Ok((-(b1 + b2 - b3) / 2, (b1 + b3 - b2) / 2, (b2 + b3 - b1) / 2))
}

/// The six families of normalized self-conjugate 7-core abaci, keyed by
/// bead count modulo 7. Bead count 4 mod 7 never occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sc7Type {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

/// Classification of a normalized self-conjugate 7-core abacus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sc7Class {
    pub ty: Sc7Type,
    pub r: i64,
    pub a: i64,
    pub b: i64,
}

impl Sc7Class {
    pub fn abacus(&self) -> Abacus {
        let (r, a, b) = (self.r, self.a, self.b);
        let counts = match self.ty {
            Sc7Type::I => vec![0, a, b, r, 2 * r - b, 2 * r - a, 2 * r],
            Sc7Type::II => vec![0, 2 * r + 1, a, b, r, 2 * r - b, 2 * r - a],
            Sc7Type::III => vec![0, a, 2 * r + 1 - a, 2 * r + 1, b, r, 2 * r - b],
            Sc7Type::IV => vec![0, a, b, 2 * r + 1 - b, 2 * r + 1 - a, 2 * r + 1, r],
            Sc7Type::V => vec![0, r + 1, 2 * r + 2, a, b, 2 * r + 1 - b, 2 * r + 1 - a],
            Sc7Type::VI => vec![0, a, r + 1, 2 * r + 2 - a, 2 * r + 2, b, 2 * r + 1 - b],
        };
        let counts = counts
            .into_iter()
            .map(|c| u32::try_from(c).expect("family shapes are non-negative"))
            .collect();
        Abacus::new(7, counts).expect("seven columns")
    }

    /// Largest-first representative of the image triple.
    pub fn triple(&self) -> (i64, i64, i64) {
        let (r, a, b) = (self.r, self.a, self.b);
        match self.ty {
            Sc7Type::I => (7 * r + 3, 7 * r + 2 - 7 * a, 7 * r + 1 - 7 * b),
            Sc7Type::II => (7 * r + 4, 7 * r + 2 - 7 * a, 7 * r + 1 - 7 * b),
            Sc7Type::III => (7 * r + 5, 7 * r + 4 - 7 * a, 7 * r + 1 - 7 * b),
            Sc7Type::IV => (7 * r + 6, 7 * r + 5 - 7 * a, 7 * r + 4 - 7 * b),
            Sc7Type::V => (7 * r + 8, 7 * r + 5 - 7 * a, 7 * r + 4 - 7 * b),
            Sc7Type::VI => (7 * r + 9, 7 * r + 8 - 7 * a, 7 * r + 4 - 7 * b),
        }
    }
}

/// Classifies a normalized self-conjugate 7-core abacus into its family.
pub fn classify_sc7(abacus: &Abacus) -> Result<Sc7Class> {
    if abacus.t() != 7 || !abacus.is_normalized() {
        return Err(Error::ConditionViolated(
            "classification needs a normalized abacus on 7 rods".into(),
        ));
    }
    let c: Vec<i64> = abacus.counts().iter().map(|&v| v as i64).collect();
    let s: i64 = c.iter().sum();
    let r = s / 7;
    let class = match s % 7 {
        0 => Sc7Class {
            ty: Sc7Type::I,
            r,
            a: c[1],
            b: c[2],
        },
        1 => Sc7Class {
            ty: Sc7Type::II,
            r,
            a: c[2],
            b: c[3],
        },
        2 => Sc7Class {
            ty: Sc7Type::III,
            r,
            a: c[1],
            b: c[4],
        },
        3 => Sc7Class {
            ty: Sc7Type::IV,
            r,
            a: c[1],
            b: c[2],
        },
        5 => Sc7Class {
            ty: Sc7Type::V,
            r,
            a: c[3],
            b: c[4],
        },
        6 => Sc7Class {
            ty: Sc7Type::VI,
            r,
            a: c[1],
            b: c[5],
        },
        _ => {
            return Err(Error::ConditionViolated(format!(
                "bead count {s} is 4 modulo 7, impossible for a self-conjugate 7-core"
            )))
        }
    };
    if class.r < 0 || class.a < 0 || class.b < 0 || class.abacus() != *abacus {
        return Err(Error::ConditionViolated(format!(
            "abacus ({abacus}) does not match any self-conjugate 7-core family"
        )));
    }
    Ok(class)
}

/// Three-squares image of a normalized self-conjugate 7-core abacus; the
/// squares sum to 7n+14 for the encoded partition of n.
pub fn rho(abacus: &Abacus) -> Result<(i64, i64, i64)> {
    Ok(classify_sc7(abacus)?.triple())
}

/// Inverse of [`rho`] on unordered-sign classes: with x the largest
/// absolute coordinate, floors the six values {x, 2x, x+-y, x+-z} indexed
/// by residue modulo 7. Residue collisions are impossible for genuine
/// image triples and panic.
pub fn rho_inverse(x: i64, y: i64, z: i64) -> Abacus {
    let mut abs = [x.abs(), y.abs(), z.abs()];
    abs.sort_unstable_by(|p, q| q.cmp(p));
    let [big, mid, small] = abs;
    let values = [big, 2 * big, big - mid, big + mid, big - small, big + small];
    let mut by_residue = [0i64; 6];
    let mut seen = [false; 6];
    for v in values {
        let r = v.rem_euclid(7);
        assert!(
            r != 0 && !seen[(r - 1) as usize],
            "values {values:?} collide modulo 7; ({x},{y},{z}) is not an image triple"
        );
        seen[(r - 1) as usize] = true;
        by_residue[(r - 1) as usize] = v;
    }
    let mut counts = vec![0u32];
    counts.extend(by_residue.iter().map(|&v| (v.div_euclid(7)) as u32));
    Abacus::new(7, counts).expect("seven columns")
}

/// The direct two-to-one map on abaci: from a normalized 4-core abacus of a
/// partition of 7n+2 (n not 4 mod 7) to the normalized abacus of a
/// self-conjugate 7-core of 8n+1.
pub fn phi47(abacus: &Abacus) -> Result<Abacus> {
    if abacus.t() != 4 || !abacus.is_normalized() {
        return Err(Error::ConditionViolated(
            "the map needs a normalized abacus on 4 rods".into(),
        ));
    }
    let size = partition_from_abacus(abacus).size();
    if size % 7 != 2 {
        return Err(Error::PreconditionViolated(format!(
            "partition size {size} is not 2 modulo 7"
        )));
    }
    let n = (size - 2) / 7;
    if n % 7 == 4 {
        return Err(Error::PreconditionViolated(format!(
            "n = {n} is 4 modulo 7: self-conjugate 4-cores of 7n+2 can occur there \
             and the two-to-one map is undefined"
        )));
    }
    let shift = HookShift::from_abacus(abacus)?;
    let cset = CSet::from_hook_shift(&shift);
    let mut counts = vec![0u32];
    counts.extend((1..=6).map(|i| (cset.value(i).div_euclid(7)) as u32));
    Abacus::new(7, counts)
}

/// Verifies the two-to-one structure at n: every 4-core of 7n+2 maps to a
/// valid self-conjugate 7-core of 8n+1, fibers are conjugate pairs of size
/// exactly two, and the direct map agrees with the composite through the
/// three-squares projection. On the refused progression n = 4 mod 7 the
/// record instead checks the class-count identity
/// |classes of 56n+21| = (c_4(7n+2) + sc_4(7n+2)) / 2.
pub fn verify_two_to_one(n: u64) -> ReportRecord {
    let m = 7 * n + 2;
    let cores = enumerate_t_cores_lattice(4, m);
    let c4 = cores.len() as i64;
    if n % 7 == 4 {
        let classes = bkm_classes_of_three_squares(8 * m as i64 + 5).len() as i64;
        let sc4 = cores.iter().filter(|c| c.is_self_conjugate()).count() as i64;
        let rhs = (c4 + sc4) / 2;
        let witnesses = if classes == rhs {
            Vec::new()
        } else {
            vec![format!(
                "|classes of {}| = {classes} but (c_4 + sc_4)/2 = ({c4}+{sc4})/2",
                8 * m + 5
            )]
        };
        return ReportRecord::new(
            "map47.residue4",
            None,
            Some(n as i64),
            classes,
            rhs,
            classes == rhs,
            witnesses,
        );
    }

    let sc7 = enumerate_sc_t_cores_lattice(7, 8 * n + 1).len() as i64;
    let mut witnesses = Vec::new();
    let mut fibers: std::collections::BTreeMap<Vec<u32>, Vec<usize>> =
        std::collections::BTreeMap::new();
    let abaci: Vec<_> = cores.iter().map(normalized_abacus_from_ncoding).collect();
    for (idx, abacus) in abaci.iter().enumerate() {
        let image = match phi47(abacus) {
            Ok(image) => image,
            Err(e) => {
                witnesses.push(format!("map refused on ({abacus}): {e}"));
                continue;
            }
        };
        // Image must be a self-conjugate 7-core of 8n+1.
        let target = partition_from_abacus(&image);
        if target.size() != 8 * n + 1 || !target.is_self_conjugate() || !target.is_t_core(7) {
            witnesses.push(format!("image ({image}) of ({abacus}) is not in range"));
        }
        // Direct map against the composite through the squares projection.
        let (x, y, z) = psi(abacus).expect("normalized 4-core abacus");
        let class = canonical_bkm(&[x, y, z]);
        let composite = rho_inverse(class[0], class[1], class[2]);
        if composite != image {
            witnesses.push(format!(
                "composite ({composite}) disagrees with direct image ({image}) on ({abacus})"
            ));
        }
        fibers.entry(image.counts().to_vec()).or_default().push(idx);
    }
    for (image, members) in &fibers {
        if members.len() != 2 {
            witnesses.push(format!(
                "fiber over {image:?} has size {}, expected 2",
                members.len()
            ));
            continue;
        }
        let first = partition_from_abacus(&abaci[members[0]]);
        let second = partition_from_abacus(&abaci[members[1]]);
        if first.conjugate() != second {
            witnesses.push(format!(
                "fiber members {first} and {second} are not conjugate"
            ));
        }
    }
    let ok = witnesses.is_empty() && c4 == 2 * sc7;
    if c4 != 2 * sc7 {
        witnesses.push(format!(
            "c_4({m}) = {c4} but 2 sc_7({}) = {}",
            8 * n + 1,
            2 * sc7
        ));
    }
    ReportRecord::new("map47", None, Some(n as i64), c4, 2 * sc7, ok, witnesses)
}

/// Piecewise hook-shift map through the three classical 4-core families,
/// kept as an independent cross-check of [`psi`].
///
/// A normalized abacus (0, a1, a2, a3) is of type I when a1 is minimal
/// (abacus (0, g, C+g, D+g)), of type II when a2 is strictly below a1 and
/// at most a3 (abacus (0, D+g+1, g, C+g)), and of type III otherwise
/// (abacus (0, C+g+1, D+g+1, g)), with g, C, D >= 0.
#[cfg(test)]
fn psi_piecewise(abacus: &Abacus) -> (i64, i64, i64) {
    let c = abacus.counts();
    let (a1, a2, a3) = (c[1] as i64, c[2] as i64, c[3] as i64);
    if a1 <= a2 && a1 <= a3 {
        let (g, big_c, big_d) = (a1, a2 - a1, a3 - a1);
        (
            2 * big_c - 2 * big_d - 2 * g - 1,
            2 * big_c - 2 * big_d + 2 * g,
            2 * big_c + 2 * big_d + 2 * g + 2,
        )
    } else if a2 < a1 && a2 <= a3 {
        let (g, big_d, big_c) = (a2, a1 - a2 - 1, a3 - a2);
        (
            2 * big_c + 2 * big_d + 2 * g + 3,
            2 * big_c - 2 * big_d + 2 * g,
            2 * big_c - 2 * big_d - 2 * g - 2,
        )
    } else {
        let (g, big_c, big_d) = (a3, a1 - a3 - 1, a2 - a3 - 1);
        (
            2 * big_c - 2 * big_d + 2 * g + 1,
            2 * big_c + 2 * big_d + 2 * g + 4,
            2 * big_c - 2 * big_d - 2 * g - 2,
        )
    }
}
