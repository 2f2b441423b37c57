mod common;

use sva_core::export::{score_table, write_graphml, GraphAnnotations};
use sva_core::netbuild::augment;
use sva_core::pseudopaper::{score_pseudopaper, RewriteMode};
use sva_core::sva::harmonic;
use sva_core::{
    score_cohort, Corpus, Metric, PseudopaperSpec, ScoringOptions, SvaError, WindowConfig,
};

const JSONL: &str = r#"
{"id": "A1", "year": 2010, "references": ["r1", "r2", "r3"]}
{"id": "a2", "year": 2011, "references": ["r1", "r2"]}
{"id": "a3", "year": "2012", "references": ["r2", "r3", "A1"]}
{"id": "b1", "year": 2011, "references": ["r4", "r5", "r6"]}
{"id": "b2", "year": 2012, "references": ["r4", "r5"]}
{"id": "b3", "year": 2013, "references": ["r5", "r6", "r3"]}
{"id": "t1", "year": 2015, "references": ["r1", "r4"]}
{"id": "t2", "year": 2015, "references": ["r1", "r2"]}
{"id": "t3", "year": 2015, "references": ["r2", "r6", "r1"]}
"#;

fn corpus() -> Corpus {
    Corpus::parse_str(JSONL).unwrap().0
}

#[test]
fn parse_score_and_export() {
    let c = corpus();
    assert_eq!(c.len(), 9);
    assert_eq!(c.citation_count("a1"), 1);
    let analysis = score_cohort(&c, &WindowConfig::new(2015), None).unwrap();
    assert_eq!(analysis.scores.len(), 3);
    let ids: Vec<&str> = analysis
        .scores
        .iter()
        .map(|s| s.paper_id.as_str())
        .collect();
    assert_eq!(ids, ["t1", "t2", "t3"]);

    let t2 = analysis.get("t2").unwrap();
    assert_eq!(t2.novelty.novel_count(), 0);
    assert_eq!(t2.c_kl, 0.0);

    for s in &analysis.scores {
        if let (Some(d), Some(cl)) = (s.delta_m, s.cl) {
            assert_eq!(s.h, harmonic(d, cl, s.c_kl));
        }
        for m in Metric::ALL {
            assert!((1..=3).contains(&s.rank(m)));
        }
    }

    let table = score_table(&analysis.scores);
    assert_eq!(table.lines().count(), 4);

    let b = &analysis.baseline;
    let t1 = c.get("t1").unwrap();
    let (ga, report) = augment(&b.network, t1, &b.partition).unwrap();
    let mut xml = Vec::new();
    let notes = GraphAnnotations {
        partition: Some(&b.partition),
        novelty: Some(&report),
    };
    write_graphml(&ga, notes, &mut xml).unwrap();
    let xml = String::from_utf8(xml).unwrap();
    let doc = roxmltree::Document::parse(&xml).unwrap();
    let edges = doc.descendants().filter(|n| n.has_tag_name("edge")).count();
    assert_eq!(edges, ga.edge_count());
    let weights: Vec<u32> = doc
        .descendants()
        .filter(|n| n.has_tag_name("data") && n.attribute("key") == Some("weight"))
        .map(|n| n.text().unwrap().parse().unwrap())
        .collect();
    assert_eq!(weights.len(), edges);
    assert!(weights.iter().all(|&w| w >= 1));
}

#[test]
fn cohort_filters_are_checked() {
    let c = corpus();
    let config = WindowConfig::new(2015);
    let only = score_cohort(&c, &config, Some(&["T3".to_string()])).unwrap();
    assert_eq!(only.scores.len(), 1);
    assert_eq!(only.scores[0].rank(Metric::Entropy), 1);
    assert_eq!(
        score_cohort(&c, &config, Some(&["zz".to_string()])).unwrap_err(),
        SvaError::UnknownPaper("zz".into())
    );
    let err = score_cohort(&c, &config, Some(&["a2".to_string()])).unwrap_err();
    assert!(err.is_config_error());
}

#[test]
fn target_year_outside_corpus_names_the_field() {
    let err = score_cohort(&corpus(), &WindowConfig::new(1990), None).unwrap_err();
    assert!(err.is_config_error());
    assert!(err.to_string().contains("target_year"));
}

#[test]
fn pseudopaper_of_identical_seeds_matches_single_seed() {
    let c = corpus();
    let config = WindowConfig::new(2015);
    let spec = PseudopaperSpec::new(&c, &["t2", "t3"]).unwrap();
    let run = score_pseudopaper(
        &c,
        &spec,
        &config,
        RewriteMode::Bridging,
        &ScoringOptions::default(),
    )
    .unwrap();
    let ps = run.scores(&spec);
    assert_eq!(ps.paper_id, "ps(t2+t3)");
    assert_eq!(ps.novelty.nr, 3);
    assert_eq!(run.analysis.scores.len(), 2);

    let same = Corpus::parse_str(&JSONL.replace(r#""r2", "r6", "r1""#, r#""r1", "r4""#))
        .unwrap()
        .0;
    let spec = PseudopaperSpec::new(&same, &["t1", "t3"]).unwrap();
    let run = score_pseudopaper(
        &same,
        &spec,
        &config,
        RewriteMode::Bridging,
        &ScoringOptions::default(),
    )
    .unwrap();
    let solo = score_cohort(&same, &config, Some(&["t1".to_string()])).unwrap();
    let (ps, t1) = (run.scores(&spec), &solo.scores[0]);
    assert_eq!(ps.novelty.novel_links(), t1.novelty.novel_links());
    assert_eq!(
        (ps.delta_m, ps.cl, ps.c_kl, ps.entropy),
        (t1.delta_m, t1.cl, t1.c_kl, t1.entropy)
    );
}

#[test]
fn scoring_is_deterministic() {
    let c = common::planted_corpus(3);
    let config = WindowConfig::new(common::TARGET_YEAR);
    let a = score_table(&score_cohort(&c, &config, None).unwrap().scores);
    let b = score_table(&score_cohort(&c, &config, None).unwrap().scores);
    assert_eq!(a, b);
}
