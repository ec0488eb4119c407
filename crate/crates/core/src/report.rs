//! Verification reports and their text/JSON rendering.

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Fail,
    Pass,
    /// Computed and shown, not asserted.
    Info,
    /// Not checkable with the available data.
    Skipped,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Fail => "FAIL",
            Outcome::Pass => "pass",
            Outcome::Info => "info",
            Outcome::Skipped => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRow {
    pub knot: String,
    pub k: Option<u64>,
    pub claim: String,
    /// How the checked values were obtained, e.g. `pipeline` or `closed-form`.
    pub path: String,
    pub outcome: Outcome,
    pub witness: String,
}

impl CheckRow {
    pub fn new(
        knot: impl Into<String>,
        k: Option<u64>,
        claim: impl Into<String>,
        path: impl Into<String>,
        outcome: Outcome,
        witness: impl Into<String>,
    ) -> Self {
        Self {
            knot: knot.into(),
            k,
            claim: claim.into(),
            path: path.into(),
            outcome,
            witness: witness.into(),
        }
    }

    fn sort_key_cmp(&self, other: &Self) -> Ordering {
        knot_name_cmp(&self.knot, &other.knot)
            .then(self.k.cmp(&other.k))
            .then_with(|| self.claim.cmp(&other.claim))
            .then_with(|| self.path.cmp(&other.path))
            .then_with(|| self.witness.cmp(&other.witness))
    }
}

/// Orders `3_1 < 4_1 < 10_1 < unknot` by comparing digit runs numerically.
pub fn knot_name_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, String)> {
        let mut out: Vec<(bool, String)> = Vec::new();
        for c in s.chars() {
            let digit = c.is_ascii_digit();
            match out.last_mut() {
                Some((d, buf)) if *d == digit => buf.push(c),
                _ => out.push((digit, c.to_string())),
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(&cb) {
        let ord = match (da, db) {
            (true, true) => {
                let (ta, tb) = (sa.trim_start_matches('0'), sb.trim_start_matches('0'));
                ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb))
            }
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => sa.cmp(sb),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: String,
    rows: Vec<CheckRow>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), rows: Vec::new() }
    }

    pub fn from_rows(suite: impl Into<String>, rows: Vec<CheckRow>) -> Self {
        let mut r = Self::new(suite);
        r.extend(rows);
        r
    }

    pub fn push(&mut self, row: CheckRow) {
        let at = self.rows.partition_point(|r| r.sort_key_cmp(&row) != Ordering::Greater);
        self.rows.insert(at, row);
    }

    pub fn extend(&mut self, rows: impl IntoIterator<Item = CheckRow>) {
        self.rows.extend(rows);
        self.sort();
    }

    fn sort(&mut self) {
        self.rows.sort_by(CheckRow::sort_key_cmp);
    }

    /// Rows ordered by knot name, then `k`.
    pub fn rows(&self) -> &[CheckRow] {
        &self.rows
    }

    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| r.outcome == Outcome::Fail)
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.rows.iter().filter(|r| r.outcome == outcome).count()
    }

    /// Failing rows first, each group in knot/k order.
    fn emission_order(&self) -> Vec<&CheckRow> {
        let (mut fails, rest): (Vec<&CheckRow>, Vec<&CheckRow>) =
            self.rows.iter().partition(|r| r.outcome == Outcome::Fail);
        fails.extend(rest);
        fails
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .emission_order()
            .into_iter()
            .map(|r| {
                json!({
                    "knot": r.knot,
                    "k": r.k,
                    "claim": r.claim,
                    "path": r.path,
                    "outcome": r.outcome,
                    "witness": r.witness,
                })
            })
            .collect();
        json!({ "suite": self.suite, "rows": rows, "pass": self.pass() })
    }

    pub fn to_json(&self) -> String {
        // serde_json maps are ordered by key, so this is canonical
        serde_json::to_string(&self.to_json_value()).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let headers = ["outcome", "knot", "k", "claim", "path", "witness"];
        let cells: Vec<[String; 6]> = self
            .emission_order()
            .into_iter()
            .map(|r| {
                [
                    r.outcome.as_str().to_string(),
                    r.knot.clone(),
                    r.k.map(|k| k.to_string()).unwrap_or_else(|| "-".into()),
                    r.claim.clone(),
                    r.path.clone(),
                    r.witness.clone(),
                ]
            })
            .collect();
        let mut widths = headers.map(|h| h.chars().count());
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {}: {} ({} rows, {} failed)",
            self.suite,
            if self.pass() { "PASS" } else { "FAIL" },
            self.rows.len(),
            self.count(Outcome::Fail)
        );
        let line = |out: &mut String, row: &[String]| {
            let mut s = String::new();
            for (i, (c, w)) in row.iter().zip(widths).enumerate() {
                if i + 1 == row.len() {
                    s.push_str(c);
                } else {
                    let pad = w - c.chars().count();
                    s.push_str(c);
                    s.push_str(&" ".repeat(pad + 2));
                }
            }
            let _ = writeln!(out, "{}", s.trim_end());
        };
        line(&mut out, &headers.map(String::from));
        for row in &cells {
            line(&mut out, row);
        }
        out
    }
}
