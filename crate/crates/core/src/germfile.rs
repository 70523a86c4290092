//! The `mldsurf-spec v1` text format: one germ per file.
//!
//! ```text
//! mldsurf-spec v1
//! [germ]
//! name = bd12_d4
//! kind = resolved
//! [vertices]
//! F1 weight=3
//! F2 weight=2
//! [edges]
//! F1 F2
//! [boundary]
//! L coeff=1/2 at=F2 cluster=1
//! ```
//!
//! Sites are `origin`, `F` (a fresh point of `F`), `F~p` (a labelled point
//! of `F`, shared by branches using the same label) and `F+G` (the point
//! `F ∩ G`). `#` starts a comment.

use crate::discrepancy::{AttachSite, BoundaryBranch, GermModel};
use crate::dual_graph::{Vertex, WeightedDualGraph};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q};
use crate::tower::cluster::{is_identifier, BranchCluster};

pub const HEADER: &str = "mldsurf-spec v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermSpec {
    pub name: Option<String>,
    pub model: GermModel,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Section {
    Germ,
    Vertices,
    Edges,
    Boundary,
}

fn fields<'a>(line: usize, words: impl Iterator<Item = &'a str>, allowed: &[&str]) -> Result<Vec<(&'a str, &'a str)>> {
    let mut out: Vec<(&str, &str)> = Vec::new();
    for w in words {
        let (k, v) = w
            .split_once('=')
            .ok_or_else(|| Error::parse(line, format!("expected key=value, found `{w}`")))?;
        if !allowed.contains(&k) {
            return Err(Error::parse(line, format!("unknown key `{k}`")));
        }
        if out.iter().any(|(seen, _)| *seen == k) {
            return Err(Error::parse(line, format!("repeated key `{k}`")));
        }
        out.push((k, v));
    }
    Ok(out)
}

fn get<'a>(fields: &[(&str, &'a str)], key: &str) -> Option<&'a str> {
    fields.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
}

fn number<T: std::str::FromStr>(line: usize, key: &str, v: &str) -> Result<T> {
    if v.is_empty() || v.len() > 9 || !v.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(line, format!("`{key}` needs a small non-negative integer, found `{v}`")));
    }
    v.parse()
        .map_err(|_| Error::parse(line, format!("`{key}` needs a small non-negative integer, found `{v}`")))
}

fn site(line: usize, text: &str) -> Result<AttachSite> {
    let bad = || Error::parse(line, format!("bad attachment site `{text}`"));
    if text == "origin" {
        return Ok(AttachSite::Origin);
    }
    if let Some((v, w)) = text.split_once('+') {
        if !is_identifier(v) || !is_identifier(w) {
            return Err(bad());
        }
        return Ok(AttachSite::Meet(v.to_string(), w.to_string()));
    }
    if let Some((v, l)) = text.split_once('~') {
        if !is_identifier(v) || !is_identifier(l) {
            return Err(bad());
        }
        return Ok(AttachSite::Interior {
            vertex: v.to_string(),
            label: Some(l.to_string()),
        });
    }
    if !is_identifier(text) {
        return Err(bad());
    }
    Ok(AttachSite::interior(text))
}

impl GermSpec {
    pub fn parse(text: &str) -> Result<GermSpec> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, HEADER)) => {}
            Some((n, other)) => return Err(Error::parse(n, format!("expected `{HEADER}`, found `{other}`"))),
            None => return Err(Error::parse(1, format!("missing `{HEADER}` header"))),
        }
        let mut section: Option<Section> = None;
        let mut seen: Vec<Section> = Vec::new();
        let mut name: Option<String> = None;
        let mut kind: Option<(usize, bool)> = None;
        let mut graph = WeightedDualGraph::new();
        let mut graph_line = 1;
        let mut boundary: Vec<(usize, BoundaryBranch)> = Vec::new();

        for (n, l) in lines {
            if let Some(inner) = l.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                let s = match inner {
                    "germ" => Section::Germ,
                    "vertices" => Section::Vertices,
                    "edges" => Section::Edges,
                    "boundary" => Section::Boundary,
                    _ => return Err(Error::parse(n, format!("unknown section `[{inner}]`"))),
                };
                if seen.contains(&s) {
                    return Err(Error::parse(n, format!("repeated section `[{inner}]`")));
                }
                if s == Section::Vertices {
                    graph_line = n;
                }
                seen.push(s);
                section = Some(s);
                continue;
            }
            match section {
                None => return Err(Error::parse(n, "content before the first section")),
                Some(Section::Germ) => {
                    let (k, v) = l
                        .split_once('=')
                        .map(|(k, v)| (k.trim(), v.trim()))
                        .ok_or_else(|| Error::parse(n, format!("expected `key = value`, found `{l}`")))?;
                    match k {
                        "name" if name.is_none() => {
                            if !is_identifier(v) {
                                return Err(Error::parse(n, format!("bad name `{v}`")));
                            }
                            name = Some(v.to_string());
                        }
                        "kind" if kind.is_none() => match v {
                            "smooth" => kind = Some((n, true)),
                            "resolved" => kind = Some((n, false)),
                            _ => return Err(Error::parse(n, format!("kind must be smooth or resolved, found `{v}`"))),
                        },
                        "name" | "kind" => return Err(Error::parse(n, format!("repeated key `{k}`"))),
                        _ => return Err(Error::parse(n, format!("unknown key `{k}`"))),
                    }
                }
                Some(Section::Vertices) => {
                    let mut words = l.split_whitespace();
                    let id = words.next().expect("non-empty line");
                    if !is_identifier(id) || id.contains('=') {
                        return Err(Error::parse(n, format!("bad vertex id `{id}`")));
                    }
                    let f = fields(n, words, &["weight", "genus", "nodes"])?;
                    let weight: i64 = number(
                        n,
                        "weight",
                        get(&f, "weight").ok_or_else(|| Error::parse(n, format!("vertex `{id}` needs a weight")))?,
                    )?;
                    let genus: u32 = get(&f, "genus").map_or(Ok(0), |v| number(n, "genus", v))?;
                    let nodes: u32 = get(&f, "nodes").map_or(Ok(0), |v| number(n, "nodes", v))?;
                    graph
                        .add_vertex(Vertex::new(id, weight).with_genus(genus).with_nodes(nodes))
                        .map_err(|e| Error::parse(n, e.to_string()))?;
                }
                Some(Section::Edges) => {
                    let mut words = l.split_whitespace();
                    let a = words.next().expect("non-empty line");
                    let b = words
                        .next()
                        .ok_or_else(|| Error::parse(n, "an edge needs two vertices"))?;
                    let f = fields(n, words, &["mult"])?;
                    let mult: u32 = get(&f, "mult").map_or(Ok(1), |v| number(n, "mult", v))?;
                    let i = graph.require(a).map_err(|e| Error::parse(n, e.to_string()))?;
                    let j = graph.require(b).map_err(|e| Error::parse(n, e.to_string()))?;
                    graph.add_edge(i, j, mult).map_err(|e| Error::parse(n, e.to_string()))?;
                }
                Some(Section::Boundary) => {
                    let mut words = l.split_whitespace();
                    let label = words.next().expect("non-empty line");
                    if !is_identifier(label) {
                        return Err(Error::parse(n, format!("bad branch label `{label}`")));
                    }
                    let f = fields(n, words, &["coeff", "at", "cluster"])?;
                    let coeff = parse_q(get(&f, "coeff").ok_or_else(|| Error::parse(n, format!("branch `{label}` needs coeff")))?)
                        .map_err(|e| Error::parse(n, e.to_string()))?;
                    let at = site(n, get(&f, "at").ok_or_else(|| Error::parse(n, format!("branch `{label}` needs at")))?)?;
                    let cluster = match get(&f, "cluster") {
                        Some(c) => BranchCluster::parse(c).map_err(|e| Error::parse(n, e.to_string()))?,
                        None => BranchCluster::smooth(),
                    };
                    boundary.push((n, BoundaryBranch::new(label, coeff, at).with_cluster(cluster)));
                }
            }
        }

        let (kind_line, smooth) = kind.ok_or_else(|| Error::parse(1, "[germ] needs `kind`"))?;
        if smooth && !graph.is_empty() {
            return Err(Error::parse(kind_line, "a smooth germ has no vertices"));
        }
        if !smooth && graph.is_empty() {
            return Err(Error::parse(kind_line, "a resolved germ needs at least one vertex"));
        }
        let bare = GermModel::new(graph.clone(), Vec::new()).map_err(|e| Error::parse(graph_line, e.to_string()))?;
        for (n, b) in &boundary {
            GermModel::new(bare.graph().clone(), vec![b.clone()]).map_err(|e| Error::parse(*n, e.to_string()))?;
        }
        let last = boundary.last().map_or(1, |(n, _)| *n);
        let model = GermModel::new(graph, boundary.into_iter().map(|(_, b)| b).collect())
            .map_err(|e| Error::parse(last, e.to_string()))?;
        Ok(GermSpec { name, model })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{HEADER}\n[germ]\n");
        if let Some(n) = &self.name {
            out.push_str(&format!("name = {n}\n"));
        }
        let g = self.model.graph();
        out.push_str(&format!("kind = {}\n", if g.is_empty() { "smooth" } else { "resolved" }));
        if !g.is_empty() {
            out.push_str("[vertices]\n");
            for v in g.vertices() {
                out.push_str(&format!("{} weight={}", v.id, v.weight));
                if v.genus > 0 {
                    out.push_str(&format!(" genus={}", v.genus));
                }
                if v.nodes > 0 {
                    out.push_str(&format!(" nodes={}", v.nodes));
                }
                out.push('\n');
            }
            if g.edges().next().is_some() {
                out.push_str("[edges]\n");
                for (i, j, m) in g.edges() {
                    out.push_str(&format!("{} {}", g.vertex(i).id, g.vertex(j).id));
                    if m != 1 {
                        out.push_str(&format!(" mult={m}"));
                    }
                    out.push('\n');
                }
            }
        }
        if !self.model.boundary().is_empty() {
            out.push_str("[boundary]\n");
            for b in self.model.boundary() {
                out.push_str(&format!("{} coeff={} at={} cluster={}\n", b.label, fmt_q(&b.coeff), b.site, b.cluster));
            }
        }
        out
    }
}
