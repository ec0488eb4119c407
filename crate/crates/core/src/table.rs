//! Builtin knot census and JSON-lines table ingestion.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::bracket::jones;
use crate::diagram::{parse_pd, BraidWord, Crossing, DiagramReport, PlanarDiagram};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::report::knot_name_cmp;
use crate::verify::check_lemma2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub pd: PlanarDiagram,
    pub jones_cache: Option<LaurentPoly>,
    pub chirality_note: String,
}

impl KnotRecord {
    /// Builds a record with a freshly computed Jones cache.
    pub fn new(name: impl Into<String>, pd: PlanarDiagram, chirality_note: impl Into<String>) -> Result<Self> {
        let j = jones(&pd)?;
        Ok(Self {
            name: name.into(),
            pd,
            jones_cache: Some(j),
            chirality_note: chirality_note.into(),
        })
    }

    /// Cached Jones polynomial, computed if absent.
    pub fn jones(&self) -> Result<LaurentPoly> {
        match &self.jones_cache {
            Some(j) => Ok(j.clone()),
            None => jones(&self.pd),
        }
    }
}

/// Everything wrong with a record. Clean when all fields are empty/false.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecordReport {
    pub diagram: DiagramReport,
    pub lemma2_failures: Vec<String>,
    pub cache_mismatch: bool,
    pub jones_error: Option<String>,
}

impl RecordReport {
    pub fn is_clean(&self) -> bool {
        self.diagram.is_valid()
            && self.lemma2_failures.is_empty()
            && !self.cache_mismatch
            && self.jones_error.is_none()
    }

    pub fn summary(&self) -> String {
        let mut parts: Vec<String> = self.diagram.violations.iter().map(ToString::to_string).collect();
        parts.extend(self.lemma2_failures.iter().cloned());
        if self.cache_mismatch {
            parts.push("cached Jones polynomial disagrees with recomputation".into());
        }
        parts.extend(self.jones_error.iter().cloned());
        parts.join("; ")
    }
}

/// Diagram checks, then the Jones polynomial checks against the evaluation
/// identities and the cache.
pub fn validate_record(r: &KnotRecord) -> RecordReport {
    let mut report = RecordReport { diagram: r.pd.validate(), ..Default::default() };
    if !report.diagram.is_valid() {
        return report;
    }
    match jones(&r.pd) {
        Err(e) => report.jones_error = Some(e.to_string()),
        Ok(j) => {
            report.cache_mismatch = r.jones_cache.as_ref().is_some_and(|c| *c != j);
            report.lemma2_failures = check_lemma2(&r.name, &j)
                .failures()
                .map(|row| format!("{}: {}", row.claim, row.witness))
                .collect();
        }
    }
    report
}

enum Source {
    Pd(&'static str),
    Braid(u32, &'static [i32]),
}

struct BuiltinKnot {
    name: &'static str,
    source: Source,
}

const fn pd(name: &'static str, code: &'static str) -> BuiltinKnot {
    BuiltinKnot { name, source: Source::Pd(code) }
}

const fn braid(name: &'static str, strands: u32, word: &'static [i32]) -> BuiltinKnot {
    BuiltinKnot { name, source: Source::Braid(strands, word) }
}

// PD codes follow the Rolfsen-table conventions; the remaining knots enter as
// braid closures. The 3_1 entry is the chirality whose Jones polynomial is
// -t^-4+t^-3+t^-1.
const BUILTIN: &[BuiltinKnot] = &[
    pd("unknot", "U"),
    pd("3_1", "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"),
    pd("4_1", "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)"),
    pd("5_1", "X(1,6,2,7),X(3,8,4,9),X(5,10,6,1),X(7,2,8,3),X(9,4,10,5)"),
    pd("5_2", "X(1,4,2,5),X(3,8,4,9),X(5,10,6,1),X(9,6,10,7),X(7,2,8,3)"),
    pd("6_1", "X(1,4,2,5),X(7,10,8,11),X(3,9,4,8),X(9,3,10,2),X(5,12,6,1),X(11,6,12,7)"),
    pd("6_2", "X(1,4,2,5),X(5,10,6,11),X(3,9,4,8),X(9,3,10,2),X(7,12,8,1),X(11,6,12,7)"),
    pd("6_3", "X(4,2,5,1),X(8,4,9,3),X(12,9,1,10),X(10,5,11,6),X(6,11,7,12),X(2,8,3,7)"),
    pd("7_1", "X(1,8,2,9),X(3,10,4,11),X(5,12,6,13),X(7,14,8,1),X(9,2,10,3),X(11,4,12,5),X(13,6,14,7)"),
    braid("7_2", 4, &[1, 1, 1, 2, -1, 2, 3, -2, 3]),
    braid("7_3", 3, &[1, 1, 1, 1, 1, 2, -1, 2]),
    braid("7_4", 4, &[1, 1, 2, -1, 2, 2, 3, -2, 3]),
    braid("7_5", 3, &[1, 1, 1, 1, 2, -1, 2, 2]),
    braid("7_6", 4, &[1, 1, -2, 1, 3, -2, 3]),
    braid("7_7", 4, &[1, -2, 1, -2, 3, -2, 3]),
    braid("8_2", 3, &[1, 1, 1, 1, 1, -2, 1, -2]),
    braid("8_5", 3, &[1, 1, 1, -2, 1, 1, 1, -2]),
    braid("8_18", 3, &[1, -2, 1, -2, 1, -2, 1, -2]),
    braid("8_19", 3, &[1, 1, 1, 2, 1, 1, 1, 2]),
    braid("8_20", 3, &[1, 1, 1, -2, -1, -1, -1, -2]),
    braid("8_21", 3, &[1, 1, 1, 2, -1, -1, 2, 2]),
    braid("9_1", 2, &[1, 1, 1, 1, 1, 1, 1, 1, 1]),
];

/// Ordered, name-unique collection of knot records.
#[derive(Clone, Debug, Default)]
pub struct KnotTable {
    records: Vec<KnotRecord>,
}

impl KnotTable {
    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn names(&self) -> Vec<&str> {
        self.records.iter().map(|r| r.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        let name = if name == "0_1" { "unknot" } else { name };
        self.records.iter().find(|r| r.name == name)
    }

    pub fn require(&self, name: &str) -> Result<&KnotRecord> {
        self.get(name).ok_or_else(|| Error::UnknownKnot(name.into()))
    }

    /// Adds records; a name already present is an error and nothing is added.
    pub fn extend(&mut self, records: Vec<KnotRecord>) -> Result<()> {
        for (i, r) in records.iter().enumerate() {
            if self.get(&r.name).is_some() || records[..i].iter().any(|o| o.name == r.name) {
                return Err(Error::Input(format!("duplicate knot name {:?}", r.name)));
            }
        }
        self.records.extend(records);
        self.records.sort_by(|a, b| knot_name_cmp(&a.name, &b.name));
        Ok(())
    }

    /// `(name, Jones)` for every record, in table order.
    pub fn jones_list(&self) -> Result<Vec<(String, LaurentPoly)>> {
        self.records.iter().map(|r| Ok((r.name.clone(), r.jones()?))).collect()
    }
}

/// The embedded census; every record is validated before it is returned.
pub fn load_builtin() -> Result<KnotTable> {
    let mut records = Vec::with_capacity(BUILTIN.len());
    for k in BUILTIN {
        let (pd, note) = match &k.source {
            Source::Pd(code) => (parse_pd(code)?, "PD from the standard table"),
            Source::Braid(strands, word) => (
                BraidWord::new(*strands, word.to_vec())?.to_pd()?,
                "closure of a standard braid representative",
            ),
        };
        let record = KnotRecord::new(k.name, pd, note)?;
        let report = validate_record(&record);
        if !report.is_clean() {
            return Err(Error::InvariantViolation(format!(
                "builtin {} fails validation: {}",
                k.name,
                report.summary()
            )));
        }
        records.push(record);
    }
    let mut table = KnotTable::default();
    table.extend(records)?;
    Ok(table)
}

/// A rejected input line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default)]
pub struct LoadOutcome {
    pub records: Vec<KnotRecord>,
    pub errors: Vec<LineError>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PdField {
    Tuples(Vec<Crossing>),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRecord {
    name: String,
    pd: Option<PdField>,
    braid: Option<String>,
    jones: Option<String>,
}

fn record_from_line(line: &str) -> Result<KnotRecord> {
    let raw: JsonRecord = serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))?;
    let mut pd = match (raw.pd, raw.braid) {
        (Some(PdField::Tuples(t)), None) if t.is_empty() => PlanarDiagram::unknot(),
        (Some(PdField::Tuples(t)), None) => PlanarDiagram::from_crossings(t)?,
        (Some(PdField::Text(s)), None) => parse_pd(&s)?,
        (None, Some(b)) => b.parse::<BraidWord>()?.to_pd()?,
        _ => return Err(Error::Input("exactly one of \"pd\" and \"braid\" is required".into())),
    };
    let computed = jones(&pd)?;
    let mut note = String::from("as given");
    if let Some(text) = raw.jones {
        let cached: LaurentPoly = text.parse()?;
        if cached != computed {
            if cached == computed.invert_variable() {
                pd = pd.mirror();
                note = "mirrored at ingestion to match the cached Jones polynomial".into();
            } else {
                return Err(Error::Input(format!(
                    "cached Jones {cached} disagrees with computed {computed} (and its mirror)"
                )));
            }
        }
    }
    let record = KnotRecord {
        name: raw.name,
        jones_cache: Some(jones(&pd)?),
        pd,
        chirality_note: note,
    };
    let report = validate_record(&record);
    if !report.is_clean() {
        return Err(Error::Input(report.summary()));
    }
    Ok(record)
}

/// Parses JSON-lines text; bad lines are reported and skipped.
pub fn load_str(text: &str) -> LoadOutcome {
    let mut out = LoadOutcome::default();
    let mut first_line: Vec<(String, usize)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        match record_from_line(line) {
            Err(e) => out.errors.push(LineError { line: lineno, message: e.to_string() }),
            Ok(r) => {
                if let Some((_, prev)) = first_line.iter().find(|(n, _)| *n == r.name) {
                    out.errors.push(LineError {
                        line: lineno,
                        message: format!("duplicate name {:?} (lines {prev} and {lineno})", r.name),
                    });
                } else {
                    first_line.push((r.name.clone(), lineno));
                    out.records.push(r);
                }
            }
        }
    }
    out
}

pub fn load_file(path: impl AsRef<Path>) -> Result<LoadOutcome> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(load_str(&text))
}
