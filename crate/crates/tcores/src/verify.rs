//! Verification sweeps: each suite runs one family of checks over a range
//! of cells and returns the records in deterministic (t, n) order. Cells
//! are independent pure calls, so sweeps fan out across threads and merge
//! back in order.

use crate::error::{Error, Result};
use crate::families::{governance_check, s9_identity_check, sc6_triples, GovernanceKind};
use crate::forms::phi_sc6;
use crate::map47::verify_two_to_one;
use crate::ncoding::partition_from_ncoding;
use crate::parallel::par_map_ordered;
use crate::report::ReportRecord;
use crate::squares::{canonical_bkm, verify_theorem_counts, TheoremId};

/// The named verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem11,
    Theorem12,
    Theorem13,
    Theorem14,
    Theorem15,
    Sc6,
    S9,
    Governance,
    Map47,
}

impl Suite {
    pub fn parse(name: &str) -> Result<Suite> {
        Ok(match name {
            "theorem11" => Suite::Theorem11,
            "theorem12" => Suite::Theorem12,
            "theorem13" => Suite::Theorem13,
            "theorem14" => Suite::Theorem14,
            "theorem15" => Suite::Theorem15,
            "sc6" => Suite::Sc6,
            "s9" => Suite::S9,
            "governance" => Suite::Governance,
            "map47" => Suite::Map47,
            other => return Err(Error::ConditionViolated(format!("unknown suite '{other}'"))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Theorem11 => "theorem11",
            Suite::Theorem12 => "theorem12",
            Suite::Theorem13 => "theorem13",
            Suite::Theorem14 => "theorem14",
            Suite::Theorem15 => "theorem15",
            Suite::Sc6 => "sc6",
            Suite::S9 => "s9",
            Suite::Governance => "governance",
            Suite::Map47 => "map47",
        }
    }
}

/// Range selection for a sweep. `n` pins a single cell, otherwise every
/// n up to `n_max` runs; `t` restricts the modulus where a suite spans
/// several. With `timed` set, each record carries its cell's wall time.
#[derive(Clone, Copy, Debug, Default)]
pub struct SweepOptions {
    pub t: Option<u32>,
    pub n: Option<u64>,
    pub n_max: Option<u64>,
    pub timed: bool,
}

impl SweepOptions {
    fn ns(&self, default_max: u64) -> Vec<u64> {
        match self.n {
            Some(n) => vec![n],
            None => (0..=self.n_max.unwrap_or(default_max)).collect(),
        }
    }

    fn ts(&self, default: &[u32]) -> Vec<u32> {
        match self.t {
            Some(t) => vec![t],
            None => default.to_vec(),
        }
    }
}

fn run_cell<F: FnOnce() -> ReportRecord>(timed: bool, cell: F) -> ReportRecord {
    if timed {
        let start = std::time::Instant::now();
        let mut record = cell();
        record.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        record
    } else {
        cell()
    }
}

fn theorem_sweep(
    theorem: TheoremId,
    default_ts: &[u32],
    default_n_max: u64,
    opts: &SweepOptions,
) -> Vec<ReportRecord> {
    let mut cells = Vec::new();
    for t in opts.ts(default_ts) {
        for n in opts.ns(default_n_max) {
            cells.push((t, n));
        }
    }
    let timed = opts.timed;
    par_map_ordered(cells, move |(t, n)| {
        run_cell(timed, || verify_theorem_counts(theorem, t, n))
    })
}

/// One record per self-conjugate 6-core count at n: injectivity of the
/// triple map and discriminant correctness of the composite form map.
fn sc6_cell(n: u64) -> ReportRecord {
    let triples = sc6_triples(n);
    let lhs = triples.len() as i64;
    let mut classes: Vec<Vec<i64>> = triples
        .iter()
        .map(|(_, (x, y, z))| canonical_bkm(&[*x, *y, *z]))
        .collect();
    classes.sort_unstable();
    classes.dedup();
    let rhs = classes.len() as i64;
    let mut witnesses = Vec::new();
    if lhs != rhs {
        witnesses.push(format!("triple map is not injective at n = {n}"));
    }
    for (coding, _) in &triples {
        let lambda = partition_from_ncoding(coding);
        match phi_sc6(&lambda) {
            Ok(form) => {
                let want = -96 * n as i64 - 140;
                if form.discriminant() != want {
                    witnesses.push(format!(
                        "form {form} from {lambda} has discriminant {}, want {want}",
                        form.discriminant()
                    ));
                }
            }
            Err(e) => witnesses.push(format!("form map failed on {lambda}: {e}")),
        }
    }
    let ok = witnesses.is_empty();
    ReportRecord::new("sc6", None, Some(n as i64), lhs, rhs, ok, witnesses)
}

/// Runs a suite over the requested range (or its default range) and
/// returns records in deterministic order.
pub fn run_suite(suite: Suite, opts: &SweepOptions) -> Result<Vec<ReportRecord>> {
    let t_at_least = |min: u32| -> Result<()> {
        match opts.t {
            Some(t) if t < min => Err(Error::PreconditionViolated(format!(
                "{} needs t >= {min}, got {t}",
                suite.name()
            ))),
            _ => Ok(()),
        }
    };
    match suite {
        Suite::Theorem11
        | Suite::Theorem12
        | Suite::Theorem13
        | Suite::Theorem14
        | Suite::Theorem15 => t_at_least(3)?,
        Suite::Governance => t_at_least(2)?,
        _ => {}
    }
    Ok(match suite {
        Suite::Theorem11 => theorem_sweep(TheoremId::T11, &[3, 4, 5, 6, 7], 30, opts),
        Suite::Theorem12 => {
            if let Some(t) = opts.t {
                if t % 2 == 0 {
                    return Err(Error::PreconditionViolated(format!(
                        "theorem12 needs odd t, got {t}"
                    )));
                }
            }
            theorem_sweep(TheoremId::T12, &[3, 5, 7], 30, opts)
        }
        Suite::Theorem13 => {
            if let Some(t) = opts.t {
                if t % 2 == 1 {
                    return Err(Error::PreconditionViolated(format!(
                        "theorem13 needs even t, got {t}"
                    )));
                }
            }
            theorem_sweep(TheoremId::T13, &[4, 6], 30, opts)
        }
        Suite::Theorem14 => theorem_sweep(TheoremId::T14, &[3, 4, 5, 6, 7, 8], 40, opts),
        Suite::Theorem15 => theorem_sweep(TheoremId::T15, &[3, 4, 5, 6, 7, 8], 40, opts),
        Suite::Sc6 => {
            let timed = opts.timed;
            par_map_ordered(opts.ns(10), move |n| run_cell(timed, || sc6_cell(n)))
        }
        Suite::S9 => {
            let timed = opts.timed;
            par_map_ordered(opts.ns(30), move |n| {
                run_cell(timed, || s9_identity_check(n))
            })
        }
        Suite::Governance => {
            let t = opts.t.unwrap_or(3);
            let timed = opts.timed;
            let mut records = par_map_ordered(opts.ns(10), move |n| {
                run_cell(timed, || {
                    governance_check(GovernanceKind::Sc2tSc2t1, t, n)
                        .expect("sc2t_sc2t1 accepts any t >= 2")
                })
            });
            if opts.n.is_none() && opts.t.is_none() {
                records.extend(par_map_ordered((0..=2u64).collect(), move |n| {
                    run_cell(timed, || {
                        governance_check(GovernanceKind::C4Sc7Union, 4, n)
                            .expect("union check accepts any n")
                    })
                }));
            }
            records
        }
        Suite::Map47 => {
            let timed = opts.timed;
            par_map_ordered(opts.ns(25), move |n| {
                run_cell(timed, || verify_two_to_one(n))
            })
        }
    })
}

/// Every suite at its default range, concatenated; the payload of the
/// all-in `report` command.
pub fn run_all_default() -> Vec<ReportRecord> {
    let suites = [
        Suite::Theorem11,
        Suite::Theorem12,
        Suite::Theorem13,
        Suite::Theorem14,
        Suite::Theorem15,
        Suite::Sc6,
        Suite::S9,
        Suite::Governance,
        Suite::Map47,
    ];
    let mut out = Vec::new();
    for suite in suites {
        out.extend(run_suite(suite, &SweepOptions::default()).expect("default ranges are valid"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        assert_eq!(Suite::parse("theorem14").unwrap(), Suite::Theorem14);
        assert_eq!(Suite::parse("map47").unwrap(), Suite::Map47);
        assert!(Suite::parse("bogus").is_err());
    }

    #[test]
    fn sweep_order_is_deterministic() {
        let opts = SweepOptions {
            t: None,
            n: None,
            n_max: Some(4),
            timed: false,
        };
        let a = run_suite(Suite::Theorem14, &opts).unwrap();
        let b = run_suite(Suite::Theorem14, &opts).unwrap();
        let key = |r: &ReportRecord| (r.t, r.n, r.lhs, r.rhs, r.ok);
        assert_eq!(
            a.iter().map(key).collect::<Vec<_>>(),
            b.iter().map(key).collect::<Vec<_>>()
        );
        // (t, n) cells appear in row-major order.
        assert!(a.windows(2).all(|w| (w[0].t, w[0].n) < (w[1].t, w[1].n)));
    }

    #[test]
    fn single_cell_selection() {
        let opts = SweepOptions {
            t: Some(7),
            n: Some(89),
            n_max: None,
            timed: false,
        };
        let records = run_suite(Suite::Theorem15, &opts).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].lhs, 3);
        assert!(records[0].ok);
    }

    #[test]
    fn sc6_cells_small() {
        let opts = SweepOptions {
            t: None,
            n: None,
            n_max: Some(4),
            timed: false,
        };
        for rec in run_suite(Suite::Sc6, &opts).unwrap() {
            assert!(rec.ok, "{:?}", rec.witnesses);
        }
    }

    #[test]
    fn parity_guards() {
        let opts = SweepOptions {
            t: Some(4),
            n: Some(1),
            n_max: None,
            timed: false,
        };
        assert!(run_suite(Suite::Theorem12, &opts).is_err());
        let opts = SweepOptions {
            t: Some(5),
            n: Some(1),
            n_max: None,
            timed: false,
        };
        assert!(run_suite(Suite::Theorem13, &opts).is_err());
        let opts = SweepOptions {
            t: Some(1),
            n: Some(1),
            n_max: None,
            timed: false,
        };
        assert!(run_suite(Suite::Theorem14, &opts).is_err());
        assert!(run_suite(Suite::Governance, &opts).is_err());
    }
}
