//! Artificial papers that consolidate the references of several targets.

use std::collections::{BTreeSet, HashMap};

use crate::corpus::{normalize_id, Corpus, PaperRecord};
use crate::error::{Result, SvaError};
use crate::netbuild::WindowConfig;
use crate::sva::{score_cohort_with, CohortAnalysis, ScoringOptions, SvaScores};

/// How citations to a seed from years other than the placement year are treated.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum RewriteMode {
    /// Every remaining citation to a seed is pointed at the pseudopaper, so
    /// no record keeps a reference to a removed seed.
    #[default]
    Bridging,
    /// Only citations from the placement year are rewritten. Citations from
    /// other years (besides the seed's own year) are left as they are.
    Strict,
}

/// Validated directive for merging two or more papers into one record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudopaperSpec {
    seeds: Vec<(String, i32)>,
    pseudo_id: String,
    placement_year: i32,
}

impl PseudopaperSpec {
    /// Orders the seeds by publication year (ties by id) and derives the
    /// pseudopaper id `Ps(id1+id2+...)`.
    pub fn new<S: AsRef<str>>(corpus: &Corpus, seed_ids: &[S]) -> Result<Self> {
        let mut ids: Vec<String> = seed_ids.iter().map(|s| normalize_id(s.as_ref())).collect();
        if ids.len() < 2 {
            return Err(SvaError::DegeneratePseudopaper(
                "at least two distinct seeds are required".into(),
            ));
        }
        let distinct: BTreeSet<&String> = ids.iter().collect();
        if distinct.len() != ids.len() {
            return Err(SvaError::DegeneratePseudopaper("seed ids repeat".into()));
        }
        let mut seeds = Vec::with_capacity(ids.len());
        for id in ids.drain(..) {
            let year = corpus
                .year_of(&id)
                .ok_or_else(|| SvaError::UnknownPaper(id.clone()))?;
            seeds.push((id, year));
        }
        seeds.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        let joined: Vec<&str> = seeds.iter().map(|(id, _)| id.as_str()).collect();
        let pseudo_id = normalize_id(&format!("Ps({})", joined.join("+")));
        if corpus.contains(&pseudo_id) {
            return Err(SvaError::PseudoIdCollision(pseudo_id));
        }
        let placement_year = seeds.last().map(|s| s.1).unwrap_or_default();
        Ok(PseudopaperSpec {
            seeds,
            pseudo_id,
            placement_year,
        })
    }

    /// Seed ids in year order.
    pub fn seed_ids(&self) -> impl Iterator<Item = &str> {
        self.seeds.iter().map(|(id, _)| id.as_str())
    }

    pub fn seed_year(&self, id: &str) -> Option<i32> {
        self.seeds.iter().find(|(s, _)| s == id).map(|s| s.1)
    }

    pub fn pseudo_id(&self) -> &str {
        &self.pseudo_id
    }

    /// Year of the latest seed.
    pub fn placement_year(&self) -> i32 {
        self.placement_year
    }
}

/// Result of [`synthesize`].
#[derive(Debug, Clone, PartialEq)]
pub struct Synthesis {
    pub corpus: Corpus,
    /// Citations to a seed dropped without replacement.
    pub removed_citations: usize,
    /// Citations to a seed pointed at the pseudopaper.
    pub rewritten_citations: usize,
}

impl Synthesis {
    pub fn pseudopaper(&self, spec: &PseudopaperSpec) -> &PaperRecord {
        self.corpus
            .get(spec.pseudo_id())
            .expect("synthesized corpus holds the pseudopaper")
    }
}

enum Fate {
    Remove,
    Rewrite,
    Keep,
}

fn fate(citing_year: i32, seed_year: i32, placement: i32, mode: RewriteMode) -> Fate {
    if citing_year == placement {
        Fate::Rewrite
    } else if citing_year == seed_year {
        Fate::Remove
    } else {
        match mode {
            RewriteMode::Bridging => Fate::Rewrite,
            RewriteMode::Strict => Fate::Keep,
        }
    }
}

/// Builds a new corpus in which the seeds are replaced by one pseudopaper.
///
/// The pseudopaper sits in the placement year and cites the union of the
/// seeds' references in seed order, without duplicates and without the seeds
/// themselves. A citation to a seed from that seed's own year is dropped
/// unless the seed shares the placement year. A citation from the placement
/// year is rewritten to the pseudopaper. Other citations follow `mode`. A
/// record that ends up citing the pseudopaper several times keeps one copy.
pub fn synthesize(corpus: &Corpus, spec: &PseudopaperSpec, mode: RewriteMode) -> Result<Synthesis> {
    let seed_years: HashMap<&str, i32> =
        spec.seeds.iter().map(|(id, y)| (id.as_str(), *y)).collect();
    for id in seed_years.keys() {
        if !corpus.contains(id) {
            return Err(SvaError::UnknownPaper((*id).to_string()));
        }
    }
    if corpus.contains(spec.pseudo_id()) {
        return Err(SvaError::PseudoIdCollision(spec.pseudo_id().to_string()));
    }

    let mut union: Vec<String> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for id in spec.seed_ids() {
        let rec = corpus.get(id).expect("checked above");
        for r in &rec.references {
            if !seed_years.contains_key(r.as_str()) && seen.insert(r.clone()) {
                union.push(r.clone());
            }
        }
    }

    let (mut removed, mut rewritten) = (0, 0);
    let mut records = Vec::with_capacity(corpus.len() + 1 - spec.seeds.len());
    let mut placed = false;
    for rec in corpus.records() {
        if seed_years.contains_key(rec.id.as_str()) {
            if !placed {
                records.push(PaperRecord::new(
                    spec.pseudo_id(),
                    spec.placement_year,
                    union.iter(),
                ));
                placed = true;
            }
            continue;
        }
        let mut refs = Vec::with_capacity(rec.references.len());
        for r in &rec.references {
            let Some(&seed_year) = seed_years.get(r.as_str()) else {
                refs.push(r.clone());
                continue;
            };
            match fate(rec.year, seed_year, spec.placement_year, mode) {
                Fate::Remove => removed += 1,
                Fate::Rewrite => {
                    rewritten += 1;
                    refs.push(spec.pseudo_id.clone());
                }
                Fate::Keep => refs.push(r.clone()),
            }
        }
        records.push(PaperRecord::new(&rec.id, rec.year, refs));
    }
    let (corpus, _) = Corpus::from_records(records)?;
    Ok(Synthesis {
        corpus,
        removed_citations: removed,
        rewritten_citations: rewritten,
    })
}

/// Scores of a pseudopaper and the cohort it was ranked in.
#[derive(Debug, Clone)]
pub struct PseudopaperRun {
    pub synthesis: Synthesis,
    pub analysis: CohortAnalysis,
}

impl PseudopaperRun {
    pub fn scores(&self, spec: &PseudopaperSpec) -> &SvaScores {
        self.analysis
            .get(spec.pseudo_id())
            .expect("pseudopaper belongs to the cohort")
    }
}

/// Synthesizes the pseudopaper and scores the placement-year cohort of the
/// transformed corpus.
pub fn score_pseudopaper(
    corpus: &Corpus,
    spec: &PseudopaperSpec,
    config: &WindowConfig,
    mode: RewriteMode,
    options: &ScoringOptions,
) -> Result<PseudopaperRun> {
    if config.target_year != spec.placement_year {
        return Err(SvaError::config(
            "target_year",
            format!(
                "must equal the pseudopaper placement year {}",
                spec.placement_year
            ),
        ));
    }
    let synthesis = synthesize(corpus, spec, mode)?;
    let analysis = score_cohort_with(&synthesis.corpus, config, options, None)?;
    Ok(PseudopaperRun {
        synthesis,
        analysis,
    })
}
