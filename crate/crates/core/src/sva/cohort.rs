use std::collections::BTreeMap;

use rayon::prelude::*;

use super::metrics::{
    alpha_beta, cluster_linkage_from, delta_m_from, divergence_of, entropy, harmonic, linkage,
    LinkWeighting, SmoothingConfig,
};
use super::rank::{competition_ranks, Metric};
use crate::analytics::{
    betweenness, louvain_with, modularity, CentralityMap, LouvainConfig, Partition,
};
use crate::corpus::{normalize_id, Corpus, PaperRecord};
use crate::error::{Result, SvaError};
use crate::netbuild::{
    augment, build_baseline, CoCitationNetwork, NovelLinkReport, RankedNodes, WindowConfig,
};

/// Scoring knobs that are not network-construction parameters.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScoringOptions {
    pub smoothing: SmoothingConfig,
    pub link_weighting: LinkWeighting,
    pub louvain: LouvainConfig,
}

/// Metric bundle of one citing paper. `None` marks an undefined metric.
#[derive(Debug, Clone, PartialEq)]
pub struct SvaScores {
    pub paper_id: String,
    pub year: i32,
    pub citation_count: usize,
    pub delta_m: Option<f64>,
    pub cl: Option<f64>,
    pub c_kl: f64,
    pub h: Option<f64>,
    pub alpha: f64,
    pub beta: f64,
    pub entropy: f64,
    /// None of the paper's references is a baseline node, so `entropy` is 0 by convention.
    pub entropy_degenerate: bool,
    pub ranks: BTreeMap<Metric, usize>,
    pub novelty: NovelLinkReport,
}

impl SvaScores {
    pub fn value(&self, metric: Metric) -> Option<f64> {
        match metric {
            Metric::DeltaM => self.delta_m,
            Metric::ClusterLinkage => self.cl,
            Metric::CentralityDivergence => Some(self.c_kl),
            Metric::Harmonic => self.h,
            Metric::Alpha => Some(self.alpha),
            Metric::Beta => Some(self.beta),
            Metric::Entropy => Some(self.entropy),
        }
    }

    /// Rank within the scored cohort (1 = highest).
    pub fn rank(&self, metric: Metric) -> usize {
        self.ranks[&metric]
    }
}

/// Shared baseline state for one target year.
#[derive(Debug, Clone)]
pub struct Baseline {
    pub config: WindowConfig,
    pub selected: RankedNodes,
    pub network: CoCitationNetwork,
    pub partition: Partition,
    pub centrality: CentralityMap,
    /// `None` when the baseline has no edges.
    pub modularity: Option<f64>,
    pub linkage: f64,
}

impl Baseline {
    pub fn build(corpus: &Corpus, config: &WindowConfig, options: &ScoringOptions) -> Result<Self> {
        config.validate_for(corpus)?;
        options.smoothing.validate()?;
        let (selected, network) = build_baseline(corpus, config)?;
        let partition = louvain_with(&network, &options.louvain);
        let modularity = match modularity(&network, partition.assignment()) {
            Ok(q) => Some(q),
            Err(SvaError::ModularityUndefined) => None,
            Err(e) => return Err(e),
        };
        let linkage = linkage(&network, &partition, options.link_weighting)?;
        let centrality = betweenness(&network);
        Ok(Baseline {
            config: config.clone(),
            selected,
            network,
            partition,
            centrality,
            modularity,
            linkage,
        })
    }

    /// Scores one paper against this baseline. The `ranks` map is left empty.
    pub fn score(
        &self,
        paper: &PaperRecord,
        citation_count: usize,
        options: &ScoringOptions,
    ) -> Result<SvaScores> {
        let (augmented, novelty) = augment(&self.network, paper, &self.partition)?;

        let delta_m = match self.modularity {
            Some(q_s) if q_s != 0.0 => {
                let q_a = modularity(&augmented, self.partition.assignment())?;
                Some(delta_m_from(q_s, q_a)?)
            }
            _ => None,
        };
        let cl = if self.linkage == 0.0 {
            None
        } else {
            let l_a = linkage(&augmented, &self.partition, options.link_weighting)?;
            Some(cluster_linkage_from(
                self.linkage,
                l_a,
                novelty.cr,
                novelty.nr,
            )?)
        };
        let c_kl = if novelty.novel_count() == 0 {
            0.0
        } else {
            divergence_of(
                &self.centrality,
                &betweenness(&augmented),
                options.smoothing,
            )?
        };
        let h = match (delta_m, cl) {
            (Some(d), Some(c)) => harmonic(d, c, c_kl),
            _ => None,
        };
        let (alpha, beta) = alpha_beta(&novelty, &augmented, &self.partition)?;
        let e = entropy(&paper.references, &self.network, &self.partition)?;
        Ok(SvaScores {
            paper_id: paper.id.clone(),
            year: paper.year,
            citation_count,
            delta_m,
            cl,
            c_kl,
            h,
            alpha,
            beta,
            entropy: e.value,
            entropy_degenerate: e.is_degenerate(),
            ranks: BTreeMap::new(),
            novelty,
        })
    }
}

/// Cohort scores together with the baseline they were measured against.
#[derive(Debug, Clone)]
pub struct CohortAnalysis {
    pub baseline: Baseline,
    /// Sorted by citation count descending, then id.
    pub scores: Vec<SvaScores>,
}

impl CohortAnalysis {
    pub fn get(&self, paper_id: &str) -> Option<&SvaScores> {
        self.scores.iter().find(|s| s.paper_id == paper_id)
    }
}

pub fn score_cohort(
    corpus: &Corpus,
    config: &WindowConfig,
    targets: Option<&[String]>,
) -> Result<CohortAnalysis> {
    score_cohort_with(corpus, config, &ScoringOptions::default(), targets)
}

/// Scores every paper published in the target year (or the listed targets)
/// against one shared baseline, then ranks the cohort per metric.
pub fn score_cohort_with(
    corpus: &Corpus,
    config: &WindowConfig,
    options: &ScoringOptions,
    targets: Option<&[String]>,
) -> Result<CohortAnalysis> {
    let baseline = Baseline::build(corpus, config, options)?;
    let cohort: Vec<&PaperRecord> = match targets {
        None => corpus
            .records_in_years(config.target_year, config.target_year)
            .collect(),
        Some(ids) => {
            let mut out = Vec::with_capacity(ids.len());
            for raw in ids {
                let id = normalize_id(raw);
                let rec = corpus
                    .get(&id)
                    .ok_or_else(|| SvaError::UnknownPaper(id.clone()))?;
                if rec.year != config.target_year {
                    return Err(SvaError::config(
                        "targets",
                        format!(
                            "paper `{id}` was published in {}, not the target year {}",
                            rec.year, config.target_year
                        ),
                    ));
                }
                if !out.iter().any(|r: &&PaperRecord| r.id == id) {
                    out.push(rec);
                }
            }
            out
        }
    };

    let mut scores: Vec<SvaScores> = cohort
        .par_iter()
        .map(|p| baseline.score(p, corpus.citation_count(&p.id), options))
        .collect::<Result<_>>()?;

    for metric in Metric::ALL {
        let values: Vec<Option<f64>> = scores.iter().map(|s| s.value(metric)).collect();
        for (s, r) in scores.iter_mut().zip(competition_ranks(&values)) {
            s.ranks.insert(metric, r);
        }
    }
    scores.sort_by(|a, b| {
        b.citation_count
            .cmp(&a.citation_count)
            .then_with(|| a.paper_id.cmp(&b.paper_id))
    });
    Ok(CohortAnalysis { baseline, scores })
}
