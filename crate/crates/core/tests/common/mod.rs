#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sva_core::{CoCitationNetwork, Corpus, PaperRecord};

pub const TARGET_YEAR: i32 = 2015;
pub const PLANTED_ID: &str = "planted";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn corpus(records: Vec<PaperRecord>) -> Corpus {
    Corpus::from_records(records).expect("fixture corpus").0
}

fn core_refs(cluster: char) -> Vec<String> {
    (0..8).map(|i| format!("{cluster}{i}")).collect()
}

/// Two well-separated reference clusters `a*` and `b*` cited by 50 baseline
/// papers (2010 to 2014). Each baseline paper cites five core references of
/// its own cluster and two references from a long tail of rarely cited
/// items. The 2015 cohort holds ten papers citing inside one cluster and
/// one paper, [`PLANTED_ID`], that cites across both.
pub fn planted_corpus(seed: u64) -> Corpus {
    planted_corpus_with_bridges(seed, 0)
}

/// [`planted_corpus`] plus `bridges` baseline papers that each co-cite `a7`
/// and `b7`, so the baseline has a between-cluster link.
pub fn planted_corpus_with_bridges(seed: u64, bridges: usize) -> Corpus {
    let mut rng = rng(seed);
    let mut records = Vec::new();
    for n in 0..bridges {
        records.push(PaperRecord::new(
            &format!("bridge{n:02}"),
            2012,
            ["a7", "b7"],
        ));
    }
    for (cluster, tag) in [('a', "pa"), ('b', "pb")] {
        let core = core_refs(cluster);
        for n in 0..25 {
            let year = 2010 + (n % 5);
            let mut refs: Vec<String> = core.choose_multiple(&mut rng, 5).cloned().collect();
            for _ in 0..2 {
                refs.push(format!("t{cluster}{:02}", rng.gen_range(0..40)));
            }
            records.push(PaperRecord::new(&format!("{tag}{n:02}"), year, refs));
        }
    }
    for n in 0..10 {
        let cluster = if n % 2 == 0 { 'a' } else { 'b' };
        let core = core_refs(cluster);
        let refs: Vec<String> = core.choose_multiple(&mut rng, 4).cloned().collect();
        records.push(PaperRecord::new(&format!("c{n:02}"), TARGET_YEAR, refs));
    }
    records.push(PaperRecord::new(
        PLANTED_ID,
        TARGET_YEAR,
        ["a0", "a3", "a5", "b1", "b4", "b6"],
    ));
    corpus(records)
}

/// Random simple graph on `n` nodes named `v00`, `v01`, ... with weights in
/// `1..=max_w`.
pub fn random_network(rng: &mut ChaCha8Rng, n: usize, p: f64, max_w: u32) -> CoCitationNetwork {
    let names: Vec<String> = (0..n).map(|i| format!("v{i:02}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((
                    names[i].as_str(),
                    names[j].as_str(),
                    rng.gen_range(1..=max_w),
                ));
            }
        }
    }
    CoCitationNetwork::from_edges("rand", names.iter().cloned(), &edges)
        .expect("valid random graph")
}

/// A paper citing a random subset of `net`'s nodes.
pub fn random_paper(rng: &mut ChaCha8Rng, net: &CoCitationNetwork, max_refs: usize) -> PaperRecord {
    let count = rng.gen_range(0..=max_refs.min(net.node_count()));
    let refs: Vec<&String> = net.nodes().choose_multiple(rng, count).collect();
    PaperRecord::new("probe", 2000, refs)
}
