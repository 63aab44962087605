//! Machine-readable verification records.
//!
//! Every verification sweep emits one [`ReportRecord`] per checked cell.
//! Records serialize as a JSON array or as TSV with a header row. Timing is
//! opt-in so that identical invocations stay byte-identical.

use serde::Serialize;

/// Outcome of one verification cell.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    /// Check identifier, e.g. "theorem14" or "governance.c4_sc7_union".
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    pub lhs: i64,
    pub rhs: i64,
    pub ok: bool,
    pub witnesses: Vec<String>,
    /// Filled only when timings are requested; excluded from default output
    /// so reports are reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ReportRecord {
    pub fn new(
        check: impl Into<String>,
        t: Option<i64>,
        n: Option<i64>,
        lhs: i64,
        rhs: i64,
        ok: bool,
        witnesses: Vec<String>,
    ) -> Self {
        let record = ReportRecord {
            check: check.into(),
            t,
            n,
            lhs,
            rhs,
            ok,
            witnesses,
            elapsed_ms: None,
        };
        debug_assert!(
            record.ok || !record.witnesses.is_empty(),
            "failing record {} must carry witnesses",
            record.check
        );
        record
    }
}

/// JSON array of records, pretty-printed with a trailing newline.
pub fn records_to_json(records: &[ReportRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

/// TSV rendering: header row, then one tab-separated row per record.
pub fn records_to_tsv(records: &[ReportRecord]) -> String {
    let mut out = String::from("check\tt\tn\tlhs\trhs\tok\twitnesses\telapsed_ms\n");
    for r in records {
        let t = r.t.map_or(String::new(), |v| v.to_string());
        let n = r.n.map_or(String::new(), |v| v.to_string());
        let elapsed = r.elapsed_ms.map_or(String::new(), |v| v.to_string());
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.check,
            t,
            n,
            r.lhs,
            r.rhs,
            r.ok,
            r.witnesses.join("; "),
            elapsed
        ));
    }
    out
}
