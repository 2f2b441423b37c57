use std::io::{self, Write};

use crate::analytics::Partition;
use crate::netbuild::{CoCitationNetwork, NovelLinkReport};

/// How an edge of an augmented network relates to the baseline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    Existing,
    NovelWithin,
    NovelBetween,
}

impl EdgeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeClass::Existing => "existing",
            EdgeClass::NovelWithin => "within",
            EdgeClass::NovelBetween => "between",
        }
    }
}

/// Optional per-node and per-edge attributes for an export.
#[derive(Debug, Clone, Copy, Default)]
pub struct GraphAnnotations<'a> {
    pub partition: Option<&'a Partition>,
    pub novelty: Option<&'a NovelLinkReport>,
}

impl GraphAnnotations<'_> {
    fn cluster(&self, node: usize) -> Option<usize> {
        self.partition
            .filter(|p| node < p.len())
            .map(|p| p.cluster_of(node))
    }

    fn class(&self, net: &CoCitationNetwork, a: usize, b: usize) -> Option<EdgeClass> {
        let report = self.novelty?;
        let (x, y) = (net.node(a), net.node(b));
        let pair = if x <= y {
            (x.to_string(), y.to_string())
        } else {
            (y.to_string(), x.to_string())
        };
        Some(if report.novel_within.contains(&pair) {
            EdgeClass::NovelWithin
        } else if report.novel_between.contains(&pair) {
            EdgeClass::NovelBetween
        } else {
            EdgeClass::Existing
        })
    }
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Writes the network as GraphML. Nodes carry their id as a `label` and,
/// when a partition is given, a `cluster`. Edges carry an integer `weight`
/// and, when a novelty report is given, a `novelty` class.
pub fn write_graphml<W: Write>(
    net: &CoCitationNetwork,
    notes: GraphAnnotations<'_>,
    mut out: W,
) -> io::Result<()> {
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        out,
        r#"<graphml xmlns="http://graphml.graphdrawing.org/xmlns">"#
    )?;
    writeln!(
        out,
        r#"  <key id="label" for="node" attr.name="label" attr.type="string"/>"#
    )?;
    if notes.partition.is_some() {
        writeln!(
            out,
            r#"  <key id="cluster" for="node" attr.name="cluster" attr.type="int"/>"#
        )?;
    }
    writeln!(
        out,
        r#"  <key id="weight" for="edge" attr.name="weight" attr.type="int"/>"#
    )?;
    if notes.novelty.is_some() {
        writeln!(
            out,
            r#"  <key id="novelty" for="edge" attr.name="novelty" attr.type="string"/>"#
        )?;
    }
    writeln!(
        out,
        r#"  <graph id="{}" edgedefault="undirected">"#,
        xml_escape(net.label())
    )?;
    for (i, id) in net.nodes().iter().enumerate() {
        writeln!(out, r#"    <node id="n{i}">"#)?;
        writeln!(out, r#"      <data key="label">{}</data>"#, xml_escape(id))?;
        if let Some(c) = notes.cluster(i) {
            writeln!(out, r#"      <data key="cluster">{c}</data>"#)?;
        }
        writeln!(out, "    </node>")?;
    }
    for ((a, b), w) in net.edges() {
        writeln!(out, r#"    <edge source="n{a}" target="n{b}">"#)?;
        writeln!(out, r#"      <data key="weight">{w}</data>"#)?;
        if let Some(class) = notes.class(net, a, b) {
            writeln!(
                out,
                r#"      <data key="novelty">{}</data>"#,
                class.as_str()
            )?;
        }
        writeln!(out, "    </edge>")?;
    }
    writeln!(out, "  </graph>")?;
    writeln!(out, "</graphml>")?;
    Ok(())
}

/// Writes the network in Graphviz DOT. Edge weights become edge labels.
pub fn write_dot<W: Write>(
    net: &CoCitationNetwork,
    notes: GraphAnnotations<'_>,
    mut out: W,
) -> io::Result<()> {
    writeln!(out, "graph \"{}\" {{", dot_escape(net.label()))?;
    for (i, id) in net.nodes().iter().enumerate() {
        match notes.cluster(i) {
            Some(c) => writeln!(out, "  n{i} [label=\"{}\", cluster={c}];", dot_escape(id))?,
            None => writeln!(out, "  n{i} [label=\"{}\"];", dot_escape(id))?,
        }
    }
    for ((a, b), w) in net.edges() {
        match notes.class(net, a, b) {
            Some(class) => writeln!(
                out,
                "  n{a} -- n{b} [label=\"{w}\", weight={w}, novelty=\"{}\"];",
                class.as_str()
            )?,
            None => writeln!(out, "  n{a} -- n{b} [label=\"{w}\", weight={w}];")?,
        }
    }
    writeln!(out, "}}")?;
    Ok(())
}
