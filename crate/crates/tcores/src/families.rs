//! Closed-form classification of self-conjugate 4-cores and 6-cores, their
//! two- and three-square representations, and cross-family counting checks.
//!
//! Self-conjugate 4-cores fall into four families keyed by the bead count
//! of the normalized abacus modulo 4; each family is an affine shape in two
//! parameters (r, a) and maps to a representation of 8n+5 as a sum of two
//! squares. Self-conjugate 6-cores fall into six families in (r, a, b),
//! keyed by the bead count modulo 6, and map to representations of 24n+35
//! as a sum of three odd squares with residues +-1, +-3, +-5 modulo 12.

use crate::abacus::Abacus;
use crate::error::{Error, Result};
use crate::ncoding::{
    enumerate_sc_t_cores_lattice, enumerate_t_cores_lattice, normalized_abacus_from_ncoding,
    NCoding,
};
use crate::report::ReportRecord;
use crate::squares::{
    alpha_map, bkm_classes_of_three_squares, enumerate_reps, sc_halve, sc_truncate,
    tcore_to_squares,
};
use crate::{squares, squares::SquaresRep};

/// Family of a self-conjugate 4-core, keyed by bead count mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sc4Type {
    I,
    II,
    III,
    IV,
}

/// Classification (type, r, a) of a self-conjugate 4-core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sc4Class {
    pub ty: Sc4Type,
    pub r: i64,
    pub a: i64,
}

impl Sc4Class {
    /// Coding reconstructed from the family shape; inverse of
    /// [`classify_sc4`].
    pub fn coding(&self) -> NCoding {
        let (r, a) = (self.r, self.a);
        let entries = match self.ty {
            Sc4Type::I => vec![-r, a - r, r - a, r],
            Sc4Type::II => vec![r + 1, a - r, r - a, -r - 1],
            Sc4Type::III => vec![r + 1 - a, r + 1, -r - 1, a - r - 1],
            Sc4Type::IV => vec![a - r, -r - 1, r + 1, r - a],
        };
        NCoding::new(entries).expect("family shapes sum to zero")
    }
}

/// Classifies the coding of a self-conjugate 4-core into its family.
///
/// The bead count of the normalized abacus decides the type; the parameters
/// are read off the shape and must reproduce the input exactly, anything
/// else being a structural contradiction that panics.
pub fn classify_sc4(coding: &NCoding) -> Result<Sc4Class> {
    if coding.t() != 4 {
        return Err(Error::ConditionViolated(format!(
            "classification needs t = 4, got t = {}",
            coding.t()
        )));
    }
    if !coding.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(coding.to_string()));
    }
    let s = normalized_abacus_from_ncoding(coding).bead_count() as i64;
    let e = coding.entries();
    let (ty, r) = match s % 4 {
        0 => (Sc4Type::I, s / 4),
        1 => (Sc4Type::II, (s - 1) / 4),
        2 => (Sc4Type::III, (s - 2) / 4),
        3 => (Sc4Type::IV, (s - 3) / 4),
        _ => unreachable!(),
    };
    let a = match ty {
        Sc4Type::I | Sc4Type::II => e[1] + r,
        Sc4Type::III => r + 1 - e[0],
        Sc4Type::IV => e[0] + r,
    };
    let class = Sc4Class { ty, r, a };
    assert!(
        r >= 0 && a >= 0 && class.coding() == *coding,
        "self-conjugate 4-core {coding} does not match its family shape"
    );
    Ok(class)
}

/// Two-square representation of 8n+5 attached to a classified
/// self-conjugate 4-core of n.
pub fn sc4_to_squares(class: &Sc4Class, n: u64) -> (i64, i64) {
    let (r, a) = (class.r, class.a);
    let (x, y) = match class.ty {
        Sc4Type::I => (8 * r + 2 - 4 * a, 4 * a + 1),
        Sc4Type::II => (8 * r + 3 - 4 * a, 4 * a + 2),
        Sc4Type::III => (8 * r + 6 - 4 * a, 4 * a + 1),
        Sc4Type::IV => (8 * r + 6 - 4 * a, 4 * a + 3),
    };
    assert_eq!(
        x * x + y * y,
        8 * n as i64 + 5,
        "family formula misses the target for {class:?} at n = {n}"
    );
    (x, y)
}

/// Family of a self-conjugate 6-core, keyed by bead count mod 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sc6Type {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

/// Classification (type, r, a, b) of a self-conjugate 6-core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sc6Class {
    pub ty: Sc6Type,
    pub r: i64,
    pub a: i64,
    pub b: i64,
}

impl Sc6Class {
    /// Normalized abacus reconstructed from the family shape.
    pub fn abacus(&self) -> Abacus {
        let (r, a, b) = (self.r, self.a, self.b);
        let counts = match self.ty {
            Sc6Type::I => vec![0, a, b, 2 * r - b, 2 * r - a, 2 * r],
            Sc6Type::II => vec![0, 2 * r + 1, a, b, 2 * r - b, 2 * r - a],
            Sc6Type::III => vec![0, a, 2 * r + 1 - a, 2 * r + 1, b, 2 * r - b],
            Sc6Type::IV => vec![0, a, b, 2 * r + 1 - b, 2 * r + 1 - a, 2 * r + 1],
            Sc6Type::V => vec![0, 2 * r + 2, a, b, 2 * r + 1 - b, 2 * r + 1 - a],
            Sc6Type::VI => vec![0, a, 2 * r + 2 - a, 2 * r + 2, 2 * r + 1 - b, b],
        };
        let counts = counts
            .into_iter()
            .map(|c| u32::try_from(c).expect("family shapes are non-negative"))
            .collect();
        Abacus::new(6, counts).expect("six columns")
    }
}

/// Checks the linear constraints on a normalized self-conjugate 6-core
/// abacus (0, a, b, c, d, e) for its bead-count class and returns the
/// matching family.
///
/// The constraint sets are, with s = a+b+c+d+e:
///
/// ```text
/// s = 6r:   e = 2r,    a+d = 2r,   b+c = 2r      (type I)
/// s = 6r+1: a = 2r+1,  b+e = 2r,   c+d = 2r      (type II)
/// s = 6r+2: a+b = 2r+1, c = 2r+1,  d+e = 2r      (type III)
/// s = 6r+3: b+c = 2r+1, a+d = 2r+1, e = 2r+1     (type IV)
/// s = 6r+4: c+d = 2r+1, b+e = 2r+1, a = 2r+2     (type V)
/// s = 6r+5: d+e = 2r+1, a+b = 2r+2, c = 2r+2     (type VI)
/// ```
pub fn classify_sc6(abacus: &Abacus) -> Result<Sc6Class> {
    if abacus.t() != 6 || !abacus.is_normalized() {
        return Err(Error::ConditionViolated(
            "classification needs a normalized abacus on 6 rods".into(),
        ));
    }
    let c: Vec<i64> = abacus.counts().iter().map(|&v| v as i64).collect();
    let (p1, p2, p3, p4, p5) = (c[1], c[2], c[3], c[4], c[5]);
    let s: i64 = p1 + p2 + p3 + p4 + p5;
    let r = s / 6;
    let constraint = |name: &str, lhs: i64, rhs: i64| -> Result<()> {
        if lhs == rhs {
            Ok(())
        } else {
            Err(Error::ConditionViolated(format!(
                "bead count {s}: {name} must equal {rhs}, got {lhs}"
            )))
        }
    };
    let class = match s % 6 {
        0 => {
            constraint("e", p5, 2 * r)?;
            constraint("a+d", p1 + p4, 2 * r)?;
            constraint("b+c", p2 + p3, 2 * r)?;
            Sc6Class {
                ty: Sc6Type::I,
                r,
                a: p1,
                b: p2,
            }
        }
        1 => {
            constraint("a", p1, 2 * r + 1)?;
            constraint("b+e", p2 + p5, 2 * r)?;
            constraint("c+d", p3 + p4, 2 * r)?;
            Sc6Class {
                ty: Sc6Type::II,
                r,
                a: p2,
                b: p3,
            }
        }
        2 => {
            constraint("a+b", p1 + p2, 2 * r + 1)?;
            constraint("c", p3, 2 * r + 1)?;
            constraint("d+e", p4 + p5, 2 * r)?;
            Sc6Class {
                ty: Sc6Type::III,
                r,
                a: p1,
                b: p4,
            }
        }
        3 => {
            constraint("b+c", p2 + p3, 2 * r + 1)?;
            constraint("a+d", p1 + p4, 2 * r + 1)?;
            constraint("e", p5, 2 * r + 1)?;
            Sc6Class {
                ty: Sc6Type::IV,
                r,
                a: p1,
                b: p2,
            }
        }
        4 => {
            constraint("c+d", p3 + p4, 2 * r + 1)?;
            constraint("b+e", p2 + p5, 2 * r + 1)?;
            constraint("a", p1, 2 * r + 2)?;
            Sc6Class {
                ty: Sc6Type::V,
                r,
                a: p2,
                b: p3,
            }
        }
        5 => {
            constraint("d+e", p4 + p5, 2 * r + 1)?;
            constraint("a+b", p1 + p2, 2 * r + 2)?;
            constraint("c", p3, 2 * r + 2)?;
            Sc6Class {
                ty: Sc6Type::VI,
                r,
                a: p1,
                b: p5,
            }
        }
        _ => unreachable!(),
    };
    assert!(
        class.r >= 0 && class.a >= 0 && class.b >= 0 && class.abacus() == *abacus,
        "abacus ({abacus}) passes its constraints but misses the family shape"
    );
    Ok(class)
}

/// Three-square representation of 24n+35 attached to a classified
/// self-conjugate 6-core of n; the coordinates are congruent to
/// +-1, +-3, +-5 modulo 12 in some order.
pub fn sc6_to_triple(class: &Sc6Class, n: u64) -> (i64, i64, i64) {
    let (r, a, b) = (class.r, class.a, class.b);
    let (x, y, z) = match class.ty {
        Sc6Type::I => (12 * r + 3 - 12 * a, 12 * r + 1 - 12 * b, 12 * r + 5),
        Sc6Type::II => (12 * r + 3 - 12 * a, 12 * r + 1 - 12 * b, 12 * r + 7),
        Sc6Type::III => (12 * r + 1 - 12 * b, 12 * r + 7 - 12 * a, 12 * r + 9),
        Sc6Type::IV => (12 * r + 9 - 12 * a, 12 * r + 7 - 12 * b, 12 * r + 11),
        Sc6Type::V => (12 * r + 9 - 12 * a, 12 * r + 7 - 12 * b, 12 * r + 13),
        Sc6Type::VI => (12 * r + 13 - 12 * a, 12 * r + 5 - 12 * b, 12 * r + 15),
    };
    assert_eq!(
        x * x + y * y + z * z,
        24 * n as i64 + 35,
        "family formula misses the target for {class:?} at n = {n}"
    );
    debug_assert!({
        let mut res: Vec<i64> = [x, y, z]
            .iter()
            .map(|v| {
                let m = v.rem_euclid(12);
                m.min(12 - m)
            })
            .collect();
        res.sort_unstable();
        res == vec![1, 3, 5]
    });
    (x, y, z)
}

/// Classifies every self-conjugate 6-core of n and returns the attached
/// triples in enumeration order.
pub fn sc6_triples(n: u64) -> Vec<(NCoding, (i64, i64, i64))> {
    enumerate_sc_t_cores_lattice(6, n)
        .into_iter()
        .map(|coding| {
            let abacus = normalized_abacus_from_ncoding(&coding);
            let class = classify_sc6(&abacus).expect("self-conjugate 6-core classifies");
            let triple = sc6_to_triple(&class, n);
            (coding, triple)
        })
        .collect()
}

/// Checks 16 sc_9(n) = |S_9(n)| where S_9(n) is the set of integer
/// 4-vectors with square sum 9n+30 and coordinate j congruent to
/// +-(j+1) modulo 9.
pub fn s9_identity_check(n: u64) -> ReportRecord {
    let lhs = 16 * enumerate_sc_t_cores_lattice(9, n).len() as i64;
    let residues: Vec<Vec<i64>> = (1..=4i64)
        .map(|j| {
            let mut v = vec![j, 9 - j];
            v.sort_unstable();
            v
        })
        .collect();
    let rhs = enumerate_reps(9 * n as i64 + 30, 9, &residues, None).len() as i64;
    let witnesses = if lhs == rhs {
        Vec::new()
    } else {
        vec![format!(
            "16*sc_9({n}) = {lhs} but the solution set has {rhs} vectors"
        )]
    };
    ReportRecord::new("s9", None, Some(n as i64), lhs, rhs, lhs == rhs, witnesses)
}

/// Cross-family counting checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GovernanceKind {
    /// SC_{2t}((2t+1)n) and SC_{2t+1}(8tn + t(t-1)/2) both land in
    /// representations of 8t(2t+1)n + t(4t^2-1)/3 as t squares.
    Sc2tSc2t1,
    /// C_t(4n + (2t^2+t+1)/4), t = 1 mod 4, against SC_{2t}(n) over
    /// 8tn + t(4t^2-1)/3 as t squares.
    CtSc2t,
    /// C_t((2t+1)n + A) against SC_{2t+1}(2tn + B) over
    /// 2t(2t+1)n + 2tA + t(t-1)(2t-1)/6 as t squares.
    CtSc2t1,
    /// Class count of 392n+245 as three squares against half of C_4(n)
    /// plus SC_7(56n+33).
    C4Sc7Union,
}

impl GovernanceKind {
    pub fn check_name(&self) -> &'static str {
        match self {
            GovernanceKind::Sc2tSc2t1 => "governance.sc2t_sc2t1",
            GovernanceKind::CtSc2t => "governance.ct_sc2t",
            GovernanceKind::CtSc2t1 => "governance.ct_sc2t1",
            GovernanceKind::C4Sc7Union => "governance.c4_sc7_union",
        }
    }
}

fn count_cores(t: u32, n: u64) -> i64 {
    enumerate_t_cores_lattice(t, n).len() as i64
}

fn count_sc_cores(t: u32, n: u64) -> i64 {
    enumerate_sc_t_cores_lattice(t, n).len() as i64
}

fn truncated_rep(coding: &NCoding) -> SquaresRep {
    sc_truncate(&alpha_map(coding)).expect("self-conjugate coding truncates")
}

/// Runs one cross-family check at (t, n). Failures are recorded with
/// witnesses, never raised; only malformed parameters error.
pub fn governance_check(kind: GovernanceKind, t: u32, n: u64) -> Result<ReportRecord> {
    let ti = t as i64;
    let ni = n as i64;
    match kind {
        GovernanceKind::Sc2tSc2t1 => {
            if t < 2 {
                return Err(Error::PreconditionViolated("need t >= 2".into()));
            }
            let even_index = (2 * t as u64 + 1) * n;
            let odd_index = 8 * t as u64 * n + (t as u64) * (t as u64 - 1) / 2;
            let stated = 8 * ti * (2 * ti + 1) * ni + ti * (4 * ti * ti - 1) / 3;
            let mut witnesses = Vec::new();
            let even_side = enumerate_sc_t_cores_lattice(2 * t, even_index);
            for coding in &even_side {
                let rep = truncated_rep(coding);
                if rep.target() != stated || rep.len() != t as usize {
                    witnesses.push(format!(
                        "even side misses target {stated}: {coding} gives {}",
                        rep.target()
                    ));
                }
            }
            let odd_side = enumerate_sc_t_cores_lattice(2 * t + 1, odd_index);
            for coding in &odd_side {
                let rep = sc_halve(&truncated_rep(coding), 2 * t + 1)
                    .expect("odd-index truncation halves");
                if rep.target() != stated || rep.len() != t as usize {
                    witnesses.push(format!(
                        "odd side misses target {stated}: {coding} gives {}",
                        rep.target()
                    ));
                }
            }
            if t == 3 && even_side.len() > odd_side.len() {
                witnesses.push(format!(
                    "sc_6({even_index}) = {} exceeds sc_7({odd_index}) = {}",
                    even_side.len(),
                    odd_side.len()
                ));
            }
            let ok = witnesses.is_empty();
            Ok(ReportRecord::new(
                kind.check_name(),
                Some(ti),
                Some(ni),
                stated,
                stated,
                ok,
                witnesses,
            ))
        }
        GovernanceKind::CtSc2t => {
            if t % 4 != 1 || t < 5 {
                return Err(Error::PreconditionViolated(format!(
                    "need t = 1 mod 4 and t >= 5, got {t}"
                )));
            }
            let shift = (2 * t as u64 * t as u64 + t as u64 + 1) / 4;
            let core_index = 4 * n + shift;
            let lhs = squares::cores_sum_target(t, core_index);
            let rhs = squares::sc_truncated_target(2 * t, n);
            let mut witnesses = Vec::new();
            for coding in enumerate_t_cores_lattice(t, core_index) {
                let rep = tcore_to_squares(&coding);
                if rep.target() != lhs {
                    witnesses.push(format!("core side misses its own target on {coding}"));
                }
            }
            for coding in enumerate_sc_t_cores_lattice(2 * t, n) {
                let rep = truncated_rep(&coding);
                if rep.target() != rhs {
                    witnesses.push(format!(
                        "self-conjugate side misses its own target on {coding}"
                    ));
                }
            }
            if lhs != rhs {
                witnesses.push(format!(
                    "targets disagree: core side {lhs}, self-conjugate side {rhs} \
                     (difference {})",
                    lhs - rhs
                ));
            }
            let ok = witnesses.is_empty();
            Ok(ReportRecord::new(
                kind.check_name(),
                Some(ti),
                Some(ni),
                lhs,
                rhs,
                ok,
                witnesses,
            ))
        }
        GovernanceKind::CtSc2t1 => {
            if t < 2 {
                return Err(Error::PreconditionViolated("need t >= 2".into()));
            }
            let (a_shift, b_shift) = if t % 2 == 1 {
                ((3 * t as u64 + 1) / 2, t as u64)
            } else {
                (5 * t as u64 / 2 + 1, 2 * t as u64)
            };
            let core_index = (2 * t as u64 + 1) * n + a_shift;
            let sc_index = 2 * t as u64 * n + b_shift;
            let lhs = squares::cores_sum_target(t, core_index);
            let rhs = squares::sc_halved_target(2 * t + 1, sc_index);
            let mut witnesses = Vec::new();
            for coding in enumerate_t_cores_lattice(t, core_index) {
                let rep = tcore_to_squares(&coding);
                if rep.target() != lhs || rep.len() != t as usize {
                    witnesses.push(format!("core side misses its own target on {coding}"));
                }
            }
            for coding in enumerate_sc_t_cores_lattice(2 * t + 1, sc_index) {
                let rep = sc_halve(&truncated_rep(&coding), 2 * t + 1)
                    .expect("odd-index truncation halves");
                if rep.target() != rhs || rep.len() != t as usize {
                    witnesses.push(format!(
                        "self-conjugate side misses its own target on {coding}"
                    ));
                }
            }
            if lhs != rhs {
                witnesses.push(format!(
                    "targets disagree: core side {lhs}, self-conjugate side {rhs}"
                ));
            }
            let ok = witnesses.is_empty();
            Ok(ReportRecord::new(
                kind.check_name(),
                Some(ti),
                Some(ni),
                lhs,
                rhs,
                ok,
                witnesses,
            ))
        }
        GovernanceKind::C4Sc7Union => {
            let lhs = bkm_classes_of_three_squares(392 * ni + 245).len() as i64;
            let c4 = count_cores(4, n);
            let sc4 = count_sc_cores(4, n);
            let sc7 = count_sc_cores(7, 56 * n + 33);
            let mut witnesses = Vec::new();
            if (c4 + sc4) % 2 != 0 {
                witnesses.push(format!("c_4({n}) + sc_4({n}) = {} is odd", c4 + sc4));
            }
            let rhs = (c4 + sc4) / 2 + sc7;
            if lhs != rhs {
                witnesses.push(format!(
                    "classes {lhs} != (c_4 + sc_4)/2 + sc_7 = ({c4}+{sc4})/2 + {sc7}"
                ));
            }
            let ok = witnesses.is_empty();
            Ok(ReportRecord::new(
                kind.check_name(),
                None,
                Some(ni),
                lhs,
                rhs,
                ok,
                witnesses,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncoding::ncoding_from_partition;
    use crate::partition::Partition;
    use crate::squares::canonical_bkm;

    fn nc(entries: &[i64]) -> NCoding {
        NCoding::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn sc4_classification_examples() {
        let c = classify_sc4(&nc(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(
            c,
            Sc4Class {
                ty: Sc4Type::I,
                r: 1,
                a: 1
            }
        );
        let zero = classify_sc4(&nc(&[0, 0, 0, 0])).unwrap();
        assert_eq!(
            zero,
            Sc4Class {
                ty: Sc4Type::I,
                r: 0,
                a: 0
            }
        );
        let ii = classify_sc4(&nc(&[1, 0, 0, -1])).unwrap();
        assert_eq!(
            ii,
            Sc4Class {
                ty: Sc4Type::II,
                r: 0,
                a: 0
            }
        );
        assert!(classify_sc4(&nc(&[0, 1, 0, -1])).is_err());
    }

    #[test]
    fn sc4_squares_examples() {
        let c = classify_sc4(&nc(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(sc4_to_squares(&c, 7), (6, 5));
        let zero = classify_sc4(&nc(&[0, 0, 0, 0])).unwrap();
        assert_eq!(sc4_to_squares(&zero, 0), (2, 1));
    }

    #[test]
    fn sc4_count_at_seven() {
        // 8 sc_4(7) equals the number of signed ordered pairs with
        // x^2 + y^2 = 61.
        let pairs = enumerate_reps(61, 1, &[vec![0], vec![0]], None);
        assert_eq!(pairs.len() as i64, 8 * count_sc_cores(4, 7));
        assert_eq!(pairs.len(), 8);
    }

    #[test]
    fn sc4_classification_total_and_unique() {
        for n in 0..=40u64 {
            for coding in enumerate_sc_t_cores_lattice(4, n) {
                let class = classify_sc4(&coding).unwrap();
                assert_eq!(class.coding(), coding);
                let (x, y) = sc4_to_squares(&class, n);
                assert_eq!(x * x + y * y, 8 * n as i64 + 5);
            }
        }
    }

    #[test]
    fn sc6_classification_examples() {
        let zero = Abacus::new(6, vec![0; 6]).unwrap();
        let class = classify_sc6(&zero).unwrap();
        assert_eq!(
            class,
            Sc6Class {
                ty: Sc6Type::I,
                r: 0,
                a: 0,
                b: 0
            }
        );
        assert_eq!(sc6_to_triple(&class, 0), (3, 1, 5));

        let bad = Abacus::new(6, vec![0, 1, 0, 1, 0, 2]).unwrap();
        let err = classify_sc6(&bad).unwrap_err();
        assert!(matches!(err, Error::ConditionViolated(_)));
    }

    #[test]
    fn sc6_classification_total_to_40() {
        for n in 0..=40u64 {
            for coding in enumerate_sc_t_cores_lattice(6, n) {
                let abacus = normalized_abacus_from_ncoding(&coding);
                let class = classify_sc6(&abacus).unwrap();
                assert_eq!(class.abacus(), abacus);
                let (x, y, z) = sc6_to_triple(&class, n);
                assert_eq!(x * x + y * y + z * z, 24 * n as i64 + 35);
            }
        }
    }

    #[test]
    fn sc6_missing_classes() {
        let image1: Vec<Vec<i64>> = sc6_triples(1)
            .iter()
            .map(|(_, (x, y, z))| canonical_bkm(&[*x, *y, *z]))
            .collect();
        assert!(!image1.contains(&vec![5, 5, 3]));
        // (5,5,3) does represent 59 = 24 + 35, it just never arises.
        assert!(bkm_classes_of_three_squares(59).contains(&[5, 5, 3]));

        let image4: Vec<Vec<i64>> = sc6_triples(4)
            .iter()
            .map(|(_, (x, y, z))| canonical_bkm(&[*x, *y, *z]))
            .collect();
        assert!(!image4.contains(&vec![11, 3, 1]));
        assert!(bkm_classes_of_three_squares(24 * 4 + 35).contains(&[11, 3, 1]));
    }

    #[test]
    fn all_triples_of_24n_plus_35_are_odd() {
        for n in 0..=15i64 {
            for class in bkm_classes_of_three_squares(24 * n + 35) {
                assert!(class.iter().all(|v| v % 2 == 1), "{class:?} at n = {n}");
            }
        }
    }

    #[test]
    fn s9_small() {
        let r0 = s9_identity_check(0);
        assert!(r0.ok);
        assert_eq!(r0.lhs, 16);
        assert_eq!(r0.rhs, 16);
        let r1 = s9_identity_check(1);
        assert!(r1.ok);
    }

    #[test]
    fn governance_examples() {
        // 392*1 + 245 = 637 decomposes as c_4(1)/SC_7(89).
        let union = governance_check(GovernanceKind::C4Sc7Union, 4, 1).unwrap();
        assert!(union.ok, "{:?}", union.witnesses);
        assert_eq!(union.lhs, 4);
        assert_eq!(union.rhs, 4);

        for n in 0..=3u64 {
            let rec = governance_check(GovernanceKind::Sc2tSc2t1, 3, n).unwrap();
            assert!(rec.ok, "{:?}", rec.witnesses);
            assert_eq!(rec.lhs, 168 * n as i64 + 35);
        }

        for n in 0..=2u64 {
            let rec = governance_check(GovernanceKind::CtSc2t1, 3, n).unwrap();
            assert!(rec.ok, "{:?}", rec.witnesses);
        }

        // The printed shift (2t^2+t+1)/4 leaves the two sides t apart; the
        // record documents the mismatch instead of failing.
        let skew = governance_check(GovernanceKind::CtSc2t, 5, 0).unwrap();
        assert!(!skew.ok);
        assert_eq!(skew.lhs - skew.rhs, 5);
        assert!(governance_check(GovernanceKind::CtSc2t, 4, 0).is_err());
    }

    #[test]
    fn sc6_le_sc7_inequality() {
        for n in 0..=6u64 {
            assert!(count_sc_cores(6, 7 * n) <= count_sc_cores(7, 24 * n + 3));
        }
    }

    #[test]
    fn worked_sc4_chain() {
        let lam = Partition::new(vec![4, 1, 1, 1]).unwrap();
        let coding = ncoding_from_partition(&lam, 4).unwrap();
        let class = classify_sc4(&coding).unwrap();
        assert_eq!(class.ty, Sc4Type::I);
        assert_eq!((class.r, class.a), (1, 1));
        assert_eq!(sc4_to_squares(&class, 7), (6, 5));
    }
}
