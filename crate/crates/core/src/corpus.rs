//! Bibliographic record ingestion and citation lookups.
//!
//! Records arrive as JSON lines with `id`, `year`, and `references`. Every
//! identifier is trimmed and lowercased, so `10.1016/J.CELL` and
//! ` 10.1016/j.cell ` name the same item. References that never appear as a
//! record id are cited-only items: they carry no year and no references of
//! their own but still become co-citation nodes.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Result, SvaError};

/// Trims and lowercases an identifier.
pub fn normalize_id(raw: &str) -> String {
    raw.trim().to_lowercase()
}

/// One citing publication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperRecord {
    pub id: String,
    pub year: i32,
    /// Distinct reference ids in first-seen order; never contains `id`.
    pub references: Vec<String>,
    /// Times cited by other records of the owning corpus. Recomputed on
    /// every corpus construction.
    pub citation_count: usize,
}

impl PaperRecord {
    pub fn new<I, S>(id: &str, year: i32, references: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        PaperRecord {
            id: id.to_string(),
            year,
            references: references
                .into_iter()
                .map(|r| r.as_ref().to_string())
                .collect(),
            citation_count: 0,
        }
    }

    /// Number of distinct cited references (NR).
    pub fn reference_count(&self) -> usize {
        self.references.len()
    }
}

#[derive(Serialize)]
struct WireRecord<'a> {
    id: &'a str,
    year: i32,
    references: &'a [String],
}

#[derive(Deserialize)]
struct RawRecord {
    id: Option<Value>,
    year: Option<Value>,
    #[serde(default)]
    references: Option<Vec<String>>,
}

/// A record dropped during ingestion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordDiagnostic {
    pub line: usize,
    pub reason: String,
}

/// Warnings collected while building a corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParseReport {
    /// Records whose id had already been seen (first occurrence wins).
    pub duplicate_records: usize,
    pub duplicate_references_removed: usize,
    pub self_citations_removed: usize,
    pub rejected: Vec<RecordDiagnostic>,
}

/// An immutable, indexed collection of paper records.
#[derive(Debug, Clone)]
pub struct Corpus {
    records: Vec<PaperRecord>,
    by_id: HashMap<String, usize>,
    citing_index: BTreeMap<String, BTreeSet<String>>,
    year_range: (i32, i32),
}

impl PartialEq for Corpus {
    fn eq(&self, other: &Self) -> bool {
        self.records == other.records
    }
}

impl Eq for Corpus {}

impl Corpus {
    /// Builds a corpus from in-memory records, applying the same normalization
    /// and deduplication rules as [`Corpus::parse`].
    pub fn from_records<I>(records: I) -> Result<(Corpus, ParseReport)>
    where
        I: IntoIterator<Item = PaperRecord>,
    {
        let mut report = ParseReport::default();
        let mut kept = Vec::new();
        let mut by_id = HashMap::new();
        for rec in records {
            let id = normalize_id(&rec.id);
            if id.is_empty() {
                report.rejected.push(RecordDiagnostic {
                    line: 0,
                    reason: "empty id".into(),
                });
                continue;
            }
            if by_id.contains_key(&id) {
                report.duplicate_records += 1;
                continue;
            }
            let references = clean_references(&id, &rec.references, &mut report);
            by_id.insert(id.clone(), kept.len());
            kept.push(PaperRecord {
                id,
                year: rec.year,
                references,
                citation_count: 0,
            });
        }
        if kept.is_empty() {
            return Err(SvaError::EmptyCorpus);
        }
        Ok((Corpus::index(kept, by_id), report))
    }

    fn index(mut records: Vec<PaperRecord>, by_id: HashMap<String, usize>) -> Corpus {
        let mut citing_index: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for rec in &records {
            for r in &rec.references {
                citing_index
                    .entry(r.clone())
                    .or_default()
                    .insert(rec.id.clone());
            }
        }
        for rec in &mut records {
            rec.citation_count = citing_index.get(&rec.id).map_or(0, BTreeSet::len);
        }
        let min = records.iter().map(|r| r.year).min().unwrap_or(0);
        let max = records.iter().map(|r| r.year).max().unwrap_or(0);
        Corpus {
            records,
            by_id,
            citing_index,
            year_range: (min, max),
        }
    }

    /// Parses line-delimited JSON records.
    ///
    /// Blank lines are skipped. A line that is not a JSON object of the
    /// expected shape aborts parsing; a record lacking `id` or an integer
    /// `year` is rejected and listed in the report.
    pub fn parse<R: BufRead>(reader: R) -> Result<(Corpus, ParseReport)> {
        let mut rejected = Vec::new();
        let mut records = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let raw: RawRecord =
                serde_json::from_str(&line).map_err(|e| SvaError::MalformedLine {
                    line: line_no,
                    message: e.to_string(),
                })?;
            let id = match raw.id {
                Some(Value::String(s)) if !s.trim().is_empty() => s,
                Some(Value::Number(n)) => n.to_string(),
                _ => {
                    rejected.push(RecordDiagnostic {
                        line: line_no,
                        reason: "missing id".into(),
                    });
                    continue;
                }
            };
            let year = match raw.year.as_ref().and_then(parse_year) {
                Some(y) => y,
                None => {
                    rejected.push(RecordDiagnostic {
                        line: line_no,
                        reason: format!("record `{}`: missing or non-integer year", id.trim()),
                    });
                    continue;
                }
            };
            records.push(PaperRecord::new(
                &id,
                year,
                raw.references.unwrap_or_default(),
            ));
        }
        let (corpus, mut report) = Corpus::from_records(records)?;
        report.rejected.extend(rejected);
        report.rejected.sort_by_key(|d| d.line);
        Ok((corpus, report))
    }

    pub fn parse_str(input: &str) -> Result<(Corpus, ParseReport)> {
        Corpus::parse(input.as_bytes())
    }

    /// Writes the corpus in the same line-delimited format `parse` reads.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        for rec in &self.records {
            let wire = WireRecord {
                id: &rec.id,
                year: rec.year,
                references: &rec.references,
            };
            let line = serde_json::to_string(&wire).map_err(|e| SvaError::Io(e.to_string()))?;
            writeln!(out, "{line}")?;
        }
        Ok(())
    }

    pub fn to_jsonl_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("serde_json emits utf-8")
    }

    pub fn records(&self) -> &[PaperRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&PaperRecord> {
        self.by_id.get(id).map(|&i| &self.records[i])
    }

    pub fn contains(&self, id: &str) -> bool {
        self.by_id.contains_key(id)
    }

    /// Inclusive `(min, max)` publication years over all records.
    pub fn year_range(&self) -> (i32, i32) {
        self.year_range
    }

    /// Publication year of `id` if it is a record of this corpus.
    pub fn year_of(&self, id: &str) -> Option<i32> {
        self.get(id).map(|r| r.year)
    }

    /// Ids of records citing `reference`.
    pub fn citing(&self, reference: &str) -> Option<&BTreeSet<String>> {
        self.citing_index.get(reference)
    }

    pub fn citing_index(&self) -> &BTreeMap<String, BTreeSet<String>> {
        &self.citing_index
    }

    /// Times `id` is cited within the corpus, for records and cited-only items alike.
    pub fn citation_count(&self, id: &str) -> usize {
        self.citing_index.get(id).map_or(0, BTreeSet::len)
    }

    /// Records published in `start..=end`, in corpus order.
    pub fn records_in_years(&self, start: i32, end: i32) -> impl Iterator<Item = &PaperRecord> {
        self.records
            .iter()
            .filter(move |r| r.year >= start && r.year <= end)
    }

    /// Cascading citation expansion over the local corpus.
    ///
    /// Backward hops follow references (only into ids that are records);
    /// forward hops follow the citing index. The two directions are walked
    /// independently from the seeds and merged by id.
    pub fn expand_from_seeds<S: AsRef<str>>(
        &self,
        seeds: &[S],
        backward_steps: usize,
        forward_steps: usize,
    ) -> Result<Expansion> {
        let mut seed_ids = BTreeSet::new();
        for s in seeds {
            let id = normalize_id(s.as_ref());
            if !self.contains(&id) {
                return Err(SvaError::UnknownPaper(id));
            }
            seed_ids.insert(id);
        }
        if seed_ids.is_empty() {
            return Err(SvaError::config(
                "seeds",
                "at least one seed id is required",
            ));
        }

        let backward = self.walk(&seed_ids, backward_steps, |id| {
            self.get(id)
                .map(|r| {
                    r.references
                        .iter()
                        .filter(|x| self.contains(x))
                        .cloned()
                        .collect()
                })
                .unwrap_or_default()
        });
        let forward = self.walk(&seed_ids, forward_steps, |id| {
            self.citing(id)
                .map(|s| s.iter().cloned().collect())
                .unwrap_or_default()
        });

        let mut keep: HashSet<&str> = seed_ids.iter().map(String::as_str).collect();
        keep.extend(backward.iter().map(String::as_str));
        keep.extend(forward.iter().map(String::as_str));
        let overlap = backward.intersection(&forward).count();

        let subset: Vec<PaperRecord> = self
            .records
            .iter()
            .filter(|r| keep.contains(r.id.as_str()))
            .cloned()
            .collect();
        let (corpus, _) = Corpus::from_records(subset)?;
        Ok(Expansion {
            corpus,
            backward_found: backward.len(),
            forward_found: forward.len(),
            overlap,
        })
    }

    fn walk<F>(&self, seeds: &BTreeSet<String>, steps: usize, next: F) -> BTreeSet<String>
    where
        F: Fn(&str) -> Vec<String>,
    {
        let mut reached = BTreeSet::new();
        let mut visited: HashSet<String> = seeds.iter().cloned().collect();
        let mut frontier: VecDeque<(String, usize)> =
            seeds.iter().map(|s| (s.clone(), 0)).collect();
        while let Some((id, depth)) = frontier.pop_front() {
            if depth == steps {
                continue;
            }
            for n in next(&id) {
                if visited.insert(n.clone()) {
                    reached.insert(n.clone());
                    frontier.push_back((n, depth + 1));
                }
            }
        }
        reached
    }

    /// Summary mirroring a retrieval profile: record count, year span, and
    /// the share of records carrying a DOI-like id or any references.
    pub fn profile(&self) -> CorpusProfile {
        let n = self.records.len();
        let doi = self
            .records
            .iter()
            .filter(|r| r.id.starts_with("10."))
            .count();
        let with_refs = self
            .records
            .iter()
            .filter(|r| !r.references.is_empty())
            .count();
        CorpusProfile {
            records: n,
            year_min: self.year_range.0,
            year_max: self.year_range.1,
            doi_share: doi as f64 / n as f64,
            reference_share: with_refs as f64 / n as f64,
        }
    }
}

fn parse_year(v: &Value) -> Option<i32> {
    match v {
        Value::Number(n) => n.as_i64().and_then(|y| i32::try_from(y).ok()),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

fn clean_references(id: &str, refs: &[String], report: &mut ParseReport) -> Vec<String> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(refs.len());
    for r in refs {
        let r = normalize_id(r);
        if r.is_empty() {
            continue;
        }
        if r == id {
            report.self_citations_removed += 1;
            continue;
        }
        if seen.insert(r.clone()) {
            out.push(r);
        } else {
            report.duplicate_references_removed += 1;
        }
    }
    out
}

/// Result of a cascading citation expansion.
#[derive(Debug, Clone)]
pub struct Expansion {
    pub corpus: Corpus,
    /// Records reached by backward hops, seeds excluded.
    pub backward_found: usize,
    /// Records reached by forward hops, seeds excluded.
    pub forward_found: usize,
    /// Records reached in both directions.
    pub overlap: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusProfile {
    pub records: usize,
    pub year_min: i32,
    pub year_max: i32,
    pub doi_share: f64,
    pub reference_share: f64,
}
