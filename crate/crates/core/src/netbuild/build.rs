use std::collections::HashSet;

use super::config::{WindowConfig, YearWindow};
use super::network::{CoCitationNetwork, EdgeKey};
use super::select::{select_nodes, RankedNodes};
use crate::corpus::Corpus;
use crate::error::Result;

/// Counts co-citations among `nodes` for papers published in `window`, then
/// prunes links.
///
/// Pruning first lets every node nominate its `max_links` strongest edges;
/// an edge survives if either endpoint nominated it. The survivors are then
/// capped globally at `lrf * |nodes|`. Ties order by weight descending, then
/// by node-pair id ascending.
///
/// With `lby >= 0` a citing paper only links references published at most
/// `lby` years before it. References without a known year are exempt.
pub fn build_cocitation<'a, I>(
    corpus: &Corpus,
    window: YearWindow,
    nodes: I,
    lrf: u32,
    max_links: u32,
    lby: i32,
) -> CoCitationNetwork
where
    I: IntoIterator<Item = &'a str>,
{
    let mut net =
        CoCitationNetwork::with_nodes(window.label(), nodes.into_iter().map(String::from));
    for paper in corpus.records_in_years(window.start, window.end) {
        let mut members: Vec<usize> = paper
            .references
            .iter()
            .filter(|r| lby < 0 || corpus.year_of(r).is_none_or(|y| paper.year - y <= lby))
            .filter_map(|r| net.index_of(r))
            .collect();
        members.sort_unstable();
        members.dedup();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                net.add_weight(a, b, 1);
            }
        }
    }
    prune(&mut net, lrf as usize, max_links as usize);
    net
}

fn strength_order(a: &(EdgeKey, u32), b: &(EdgeKey, u32)) -> std::cmp::Ordering {
    b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0))
}

fn prune(net: &mut CoCitationNetwork, lrf: usize, max_links: usize) {
    let mut incident: Vec<Vec<(EdgeKey, u32)>> = vec![Vec::new(); net.node_count()];
    for (key, w) in net.edges() {
        incident[key.0].push((key, w));
        incident[key.1].push((key, w));
    }
    let mut nominated: HashSet<EdgeKey> = HashSet::new();
    for list in &mut incident {
        list.sort_by(strength_order);
        nominated.extend(list.iter().take(max_links).map(|(k, _)| *k));
    }
    let mut survivors: Vec<(EdgeKey, u32)> =
        net.edges().filter(|(k, _)| nominated.contains(k)).collect();
    survivors.sort_by(strength_order);
    survivors.truncate(lrf.saturating_mul(net.node_count()));
    let keep: HashSet<EdgeKey> = survivors.into_iter().map(|(k, _)| k).collect();
    net.retain_edges(|k, _| keep.contains(k));
}

/// Selects nodes and builds the pruned baseline network for `config`.
pub fn build_baseline(
    corpus: &Corpus,
    config: &WindowConfig,
) -> Result<(RankedNodes, CoCitationNetwork)> {
    let window = config.baseline_window();
    let selected = select_nodes(corpus, window, config.k, config.e)?;
    let net = build_cocitation(
        corpus,
        window,
        selected.ids(),
        config.lrf,
        config.max_links,
        config.lby,
    );
    Ok((selected, net))
}
