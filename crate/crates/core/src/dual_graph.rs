//! Weighted dual graphs of curve configurations on a smooth surface.
//!
//! A vertex is a curve `C_i` labelled by `e_i = -C_i^2`; two vertices are
//! joined by `C_i . C_j` edges. Exceptional curves and strict transforms of
//! boundary branches can live in the same graph; the latter are drawn as
//! filled dots and carry no weight.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::qi;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Exceptional,
    /// Strict transform of a curve that is not contracted.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub id: String,
    /// `-C^2`; meaningless (and zero) for strict transforms.
    pub weight: i64,
    /// Geometric genus of the normalization.
    pub genus: u32,
    /// Number of ordinary double points of the curve itself.
    pub nodes: u32,
    pub kind: VertexKind,
}

impl Vertex {
    pub fn new(id: impl Into<String>, weight: i64) -> Self {
        Vertex {
            id: id.into(),
            weight,
            genus: 0,
            nodes: 0,
            kind: VertexKind::Exceptional,
        }
    }

    pub fn with_genus(mut self, genus: u32) -> Self {
        self.genus = genus;
        self
    }

    pub fn with_nodes(mut self, nodes: u32) -> Self {
        self.nodes = nodes;
        self
    }

    pub fn strict(id: impl Into<String>) -> Self {
        Vertex {
            id: id.into(),
            weight: 0,
            genus: 0,
            nodes: 0,
            kind: VertexKind::Strict,
        }
    }

    pub fn arithmetic_genus(&self) -> i64 {
        i64::from(self.genus) + i64::from(self.nodes)
    }

    /// `K . C = -2 - C^2 + 2 p_a(C)` by adjunction.
    pub fn canonical_degree(&self) -> i64 {
        self.weight - 2 + 2 * self.arithmetic_genus()
    }

    pub fn is_rational_smooth(&self) -> bool {
        self.genus == 0 && self.nodes == 0
    }

    pub fn is_exceptional(&self) -> bool {
        self.kind == VertexKind::Exceptional
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightedDualGraph {
    vertices: Vec<Vertex>,
    edges: BTreeMap<(usize, usize), u32>,
}

fn key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl WeightedDualGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph of exceptional rational curves from `(id, weight)`
    /// pairs and edges given by id.
    pub fn from_parts(vertices: &[(&str, i64)], edges: &[(&str, &str)]) -> Result<Self> {
        let mut g = WeightedDualGraph::new();
        for &(id, w) in vertices {
            g.add_vertex(Vertex::new(id, w))?;
        }
        for &(a, b) in edges {
            let i = g.require(a)?;
            let j = g.require(b)?;
            g.add_edge(i, j, 1)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) -> Result<usize> {
        if v.id.is_empty() {
            return Err(Error::InvalidGraph("empty vertex id".into()));
        }
        if self.index_of(&v.id).is_some() {
            return Err(Error::InvalidGraph(format!("duplicate vertex `{}`", v.id)));
        }
        if v.is_exceptional() && v.weight < 1 {
            return Err(Error::InvalidGraph(format!(
                "vertex `{}` has weight {} < 1",
                v.id, v.weight
            )));
        }
        self.vertices.push(v);
        Ok(self.vertices.len() - 1)
    }

    pub fn add_edge(&mut self, i: usize, j: usize, mult: u32) -> Result<()> {
        let n = self.vertices.len();
        if i >= n || j >= n {
            return Err(Error::InvalidGraph(format!("edge ({i}, {j}) out of range")));
        }
        if i == j {
            return Err(Error::InvalidGraph(format!(
                "self-edge on `{}`; record self-intersections as nodes",
                self.vertices[i].id
            )));
        }
        if mult == 0 {
            return Ok(());
        }
        let k = key(i, j);
        if self.edges.contains_key(&k) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge `{}`-`{}`",
                self.vertices[i].id, self.vertices[j].id
            )));
        }
        self.edges.insert(k, mult);
        Ok(())
    }

    /// Adds `mult` to the edge multiplicity, creating the edge if needed.
    pub(crate) fn bump_edge(&mut self, i: usize, j: usize, mult: u32) {
        if mult > 0 && i != j {
            *self.edges.entry(key(i, j)).or_insert(0) += mult;
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    /// Edges as `(i, j, multiplicity)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(i, j), &m)| (i, j, m))
    }

    pub fn edge_mult(&self, i: usize, j: usize) -> u32 {
        self.edges.get(&key(i, j)).copied().unwrap_or(0)
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .keys()
            .filter_map(|&(a, b)| match (a == i, b == i) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    /// Number of distinct neighbours.
    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).len()
    }

    /// Sum of edge multiplicities at `i`.
    pub fn valence(&self, i: usize) -> u32 {
        self.edges
            .iter()
            .filter(|(&(a, b), _)| a == i || b == i)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        self.component_of(0, None).len() == self.vertices.len()
    }

    fn component_of(&self, start: usize, removed: Option<usize>) -> Vec<usize> {
        let mut seen = vec![false; self.vertices.len()];
        if let Some(r) = removed {
            seen[r] = true;
        }
        let mut order = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Connected, no multiple edges and `|E| = |V| - 1`.
    pub fn is_tree(&self) -> bool {
        !self.vertices.is_empty()
            && self.is_connected()
            && self.edges.values().all(|&m| m == 1)
            && self.edges.len() + 1 == self.vertices.len()
    }

    /// `(C_i . C_j)`: off-diagonal edge multiplicities, diagonal `-e_i`.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, v) in self.vertices.iter().enumerate() {
            m[i][i] = -v.weight;
        }
        for (&(i, j), &mult) in &self.edges {
            m[i][j] = i64::from(mult);
            m[j][i] = i64::from(mult);
        }
        m
    }

    pub fn intersection_form(&self) -> Matrix {
        let rows = self
            .intersection_matrix()
            .into_iter()
            .map(|r| r.into_iter().map(qi).collect())
            .collect();
        Matrix::from_rows(rows).expect("square by construction")
    }

    /// Subgraph on the exceptional vertices, with the map to old indices.
    pub fn exceptional_part(&self) -> (WeightedDualGraph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| self.vertices[i].is_exceptional())
            .collect();
        (self.induced(&keep), keep)
    }

    pub fn induced(&self, keep: &[usize]) -> WeightedDualGraph {
        let mut pos = vec![usize::MAX; self.len()];
        let mut g = WeightedDualGraph::new();
        for (new, &old) in keep.iter().enumerate() {
            pos[old] = new;
            g.vertices.push(self.vertices[old].clone());
        }
        for (&(i, j), &m) in &self.edges {
            if pos[i] != usize::MAX && pos[j] != usize::MAX {
                g.edges.insert(key(pos[i], pos[j]), m);
            }
        }
        g
    }

    /// Relabels vertex `i` to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> WeightedDualGraph {
        assert_eq!(perm.len(), self.len());
        let mut slots: Vec<Option<Vertex>> = vec![None; self.len()];
        for (i, v) in self.vertices.iter().enumerate() {
            slots[perm[i]] = Some(v.clone());
        }
        let mut g = WeightedDualGraph {
            vertices: slots.into_iter().map(|v| v.expect("permutation")).collect(),
            edges: BTreeMap::new(),
        };
        for (&(i, j), &m) in &self.edges {
            g.edges.insert(key(perm[i], perm[j]), m);
        }
        g
    }

    pub fn structure(&self) -> GraphStructure {
        let n = self.len();
        let forks: Vec<usize> = (0..n).filter(|&i| self.degree(i) == 3).collect();
        let tails: Vec<usize> = (0..n).filter(|&i| self.degree(i) <= 1).collect();
        let is_tree = self.is_tree();
        let is_chain = is_tree && (0..n).all(|i| self.degree(i) <= 2);
        let is_circle = n >= 2 && self.is_connected() && (0..n).all(|i| self.valence(i) == 2);
        let branches = if forks.len() == 1 && is_tree {
            let fork = forks[0];
            self.neighbors(fork)
                .into_iter()
                .map(|start| Branch {
                    vertices: self.walk_from(start, fork),
                })
                .collect()
        } else {
            Vec::new()
        };
        GraphStructure {
            forks,
            tails,
            branches,
            is_chain,
            is_circle,
        }
    }

    /// Component of `start` after deleting `removed`, ordered by distance.
    fn walk_from(&self, start: usize, removed: usize) -> Vec<usize> {
        self.component_of(start, Some(removed))
    }

    /// Order of vertices along a chain, from one tail to the other.
    pub fn chain_order(&self) -> Option<Vec<usize>> {
        let s = self.structure();
        if !s.is_chain {
            return None;
        }
        let start = *s.tails.first()?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.neighbors(cur).into_iter().find(|&w| w != prev);
            match next {
                Some(w) => {
                    order.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        Some(order)
    }

    pub fn classify(&self) -> SingularityClass {
        let tag = self.classify_tag();
        let du_val = matches!(tag, ClassTag::A(_) | ClassTag::D(_) | ClassTag::E(_))
            && self.vertices.iter().all(|v| v.weight == 2);
        SingularityClass { tag, du_val }
    }

    fn classify_tag(&self) -> ClassTag {
        let n = self.len();
        if n == 0 {
            return ClassTag::Smooth;
        }
        if !self.is_connected() {
            return ClassTag::Other;
        }
        if n == 1 {
            let v = &self.vertices[0];
            return match (v.genus, v.nodes) {
                (0, 0) => ClassTag::A(1),
                (1, 0) => ClassTag::B,
                (0, 1) => ClassTag::C,
                _ => ClassTag::Other,
            };
        }
        if !self.vertices.iter().all(Vertex::is_rational_smooth) {
            return ClassTag::Other;
        }
        let s = self.structure();
        if s.is_circle {
            return ClassTag::F;
        }
        if !self.is_tree() {
            return ClassTag::Other;
        }
        if s.is_chain {
            return ClassTag::A(n);
        }
        let hubs: Vec<usize> = (0..n).filter(|&i| self.degree(i) >= 3).collect();
        if hubs.len() == 1 && self.degree(hubs[0]) == 3 {
            let mut lens: Vec<usize> = s.branches.iter().map(Branch::len).collect();
            lens.sort_unstable();
            let short_minus_two = s
                .branches
                .iter()
                .filter(|b| b.len() == 1 && self.vertices[b.vertices[0]].weight == 2)
                .count();
            if short_minus_two >= 2 {
                return ClassTag::D(n);
            }
            return match lens.as_slice() {
                [1, 2, 2] => ClassTag::E(6),
                [1, 2, 3] => ClassTag::E(7),
                [1, 2, 4] => ClassTag::E(8),
                _ => ClassTag::Other,
            };
        }
        if self.is_h_shape(&hubs) {
            return ClassTag::H(n);
        }
        ClassTag::Other
    }

    fn is_leaf_minus_two(&self, i: usize) -> bool {
        self.degree(i) == 1 && self.vertices[i].weight == 2
    }

    fn is_h_shape(&self, hubs: &[usize]) -> bool {
        match hubs {
            [c] => {
                self.len() == 5
                    && self.degree(*c) == 4
                    && self.neighbors(*c).into_iter().all(|w| self.is_leaf_minus_two(w))
            }
            [u, v] => {
                let leaves_ok = |h: usize| {
                    self.degree(h) == 3
                        && self
                            .neighbors(h)
                            .into_iter()
                            .filter(|&w| self.is_leaf_minus_two(w))
                            .count()
                            == 2
                };
                if !leaves_ok(*u) || !leaves_ok(*v) {
                    return false;
                }
                let path = self.path_between(*u, *v);
                path.len() + 4 == self.len()
            }
            _ => false,
        }
    }

    fn path_between(&self, from: usize, to: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.len()];
        let mut queue = VecDeque::from([from]);
        parent[from] = from;
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for w in self.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if parent[to] == usize::MAX {
            return Vec::new();
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Graphviz rendering; strict transforms are filled black.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dual {\n  node [shape=circle];\n");
        for v in &self.vertices {
            match v.kind {
                VertexKind::Exceptional => {
                    out.push_str(&format!("  \"{}\" [label=\"{}:{}\"];\n", v.id, v.id, v.weight));
                }
                VertexKind::Strict => {
                    out.push_str(&format!(
                        "  \"{}\" [label=\"{}\", style=filled, fillcolor=black, fontcolor=white];\n",
                        v.id, v.id
                    ));
                }
            }
        }
        for (&(i, j), &m) in &self.edges {
            for _ in 0..m {
                out.push_str(&format!(
                    "  \"{}\" -- \"{}\";\n",
                    self.vertices[i].id, self.vertices[j].id
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// A connected component left after deleting the unique fork, listed
/// outward from the vertex adjacent to the fork.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub vertices: Vec<usize>,
}

impl Branch {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStructure {
    pub forks: Vec<usize>,
    pub tails: Vec<usize>,
    /// Filled only when the graph is a tree with exactly one fork.
    pub branches: Vec<Branch>,
    pub is_chain: bool,
    pub is_circle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassTag {
    Smooth,
    A(usize),
    D(usize),
    E(usize),
    /// Smooth elliptic curve.
    B,
    /// Nodal rational curve.
    C,
    /// Circle of smooth rational curves.
    F,
    H(usize),
    Other,
}

impl ClassTag {
    pub fn is_fork_type(self) -> bool {
        matches!(self, ClassTag::D(_) | ClassTag::E(_))
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Smooth => write!(f, "smooth"),
            ClassTag::A(m) => write!(f, "A{m}"),
            ClassTag::D(m) => write!(f, "D{m}"),
            ClassTag::E(m) => write!(f, "E{m}"),
            ClassTag::B => write!(f, "B"),
            ClassTag::C => write!(f, "C"),
            ClassTag::F => write!(f, "F"),
            ClassTag::H(m) => write!(f, "H{m}"),
            ClassTag::Other => write!(f, "other"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SingularityClass {
    pub tag: ClassTag,
    pub du_val: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::is_negative_definite;

    fn chain(weights: &[i64]) -> WeightedDualGraph {
        let ids: Vec<String> = (1..=weights.len()).map(|i| format!("F{i}")).collect();
        let verts: Vec<(&str, i64)> = ids.iter().map(String::as_str).zip(weights.iter().copied()).collect();
        let edges: Vec<(&str, &str)> = ids.windows(2).map(|w| (w[0].as_str(), w[1].as_str())).collect();
        WeightedDualGraph::from_parts(&verts, &edges).unwrap()
    }

    fn triangle() -> WeightedDualGraph {
        WeightedDualGraph::from_parts(
            &[("F1", 2), ("F2", 2), ("F3", 2)],
            &[("F1", "F2"), ("F2", "F3"), ("F1", "F3")],
        )
        .unwrap()
    }

    fn d_graph(long: usize) -> WeightedDualGraph {
        // fork F0, short tails S1 S2, long branch L1..Llong
        let mut g = WeightedDualGraph::new();
        let f = g.add_vertex(Vertex::new("F0", 2)).unwrap();
        let s1 = g.add_vertex(Vertex::new("S1", 2)).unwrap();
        let s2 = g.add_vertex(Vertex::new("S2", 2)).unwrap();
        g.add_edge(f, s1, 1).unwrap();
        g.add_edge(f, s2, 1).unwrap();
        let mut prev = f;
        for k in 1..=long {
            let v = g.add_vertex(Vertex::new(format!("L{k}"), 2)).unwrap();
            g.add_edge(prev, v, 1).unwrap();
            prev = v;
        }
        g
    }

    #[test]
    fn intersection_matrix_examples() {
        assert_eq!(chain(&[2]).intersection_matrix(), vec![vec![-2]]);
        assert_eq!(chain(&[2, 2]).intersection_matrix(), vec![vec![-2, 1], vec![1, -2]]);
        assert_eq!(
            triangle().intersection_matrix(),
            vec![vec![-2, 1, 1], vec![1, -2, 1], vec![1, 1, -2]]
        );
    }

    #[test]
    fn triangle_form_not_negative_definite() {
        assert!(!is_negative_definite(&triangle().intersection_form()).unwrap());
        assert!(is_negative_definite(&chain(&[2, 2]).intersection_form()).unwrap());
    }

    #[test]
    fn classify_catalog_shapes() {
        let a3 = chain(&[2, 2, 2]).classify();
        assert_eq!(a3, SingularityClass { tag: ClassTag::A(3), du_val: true });
        let d4 = d_graph(1).classify();
        assert_eq!(d4, SingularityClass { tag: ClassTag::D(4), du_val: true });
        assert_eq!(d_graph(3).classify().tag, ClassTag::D(6));
        assert_eq!(triangle().classify().tag, ClassTag::F);
        let non_du_val = chain(&[3, 2]).classify();
        assert_eq!(non_du_val, SingularityClass { tag: ClassTag::A(2), du_val: false });
    }

    #[test]
    fn classify_h5_star() {
        let g = WeightedDualGraph::from_parts(
            &[("C", 3), ("L1", 2), ("L2", 2), ("L3", 2), ("L4", 2)],
            &[("C", "L1"), ("C", "L2"), ("C", "L3"), ("C", "L4")],
        )
        .unwrap();
        assert_eq!(g.classify().tag, ClassTag::H(5));
        let s = g.structure();
        assert!(s.forks.is_empty());
        assert_eq!(s.tails.len(), 4);
    }

    #[test]
    fn classify_h6_two_forks() {
        let g = WeightedDualGraph::from_parts(
            &[("U", 3), ("V", 2), ("a", 2), ("b", 2), ("c", 2), ("d", 2)],
            &[("U", "V"), ("U", "a"), ("U", "b"), ("V", "c"), ("V", "d")],
        )
        .unwrap();
        assert_eq!(g.classify().tag, ClassTag::H(6));
    }

    #[test]
    fn e_shapes() {
        for (arm, m) in [(2usize, 6usize), (3, 7), (4, 8)] {
            let mut g = WeightedDualGraph::new();
            let f = g.add_vertex(Vertex::new("F", 2)).unwrap();
            let s = g.add_vertex(Vertex::new("S", 2)).unwrap();
            g.add_edge(f, s, 1).unwrap();
            let mut prev = f;
            for k in 0..2 {
                let v = g.add_vertex(Vertex::new(format!("M{k}"), 2)).unwrap();
                g.add_edge(prev, v, 1).unwrap();
                prev = v;
            }
            prev = f;
            for k in 0..arm {
                let v = g.add_vertex(Vertex::new(format!("L{k}"), 2)).unwrap();
                g.add_edge(prev, v, 1).unwrap();
                prev = v;
            }
            assert_eq!(g.classify(), SingularityClass { tag: ClassTag::E(m), du_val: true });
        }
    }

    #[test]
    fn single_curve_types() {
        let mut b = WeightedDualGraph::new();
        b.add_vertex(Vertex::new("F", 1).with_genus(1)).unwrap();
        assert_eq!(b.classify().tag, ClassTag::B);
        let mut c = WeightedDualGraph::new();
        c.add_vertex(Vertex::new("F", 1).with_nodes(1)).unwrap();
        assert_eq!(c.classify().tag, ClassTag::C);
        assert_eq!(WeightedDualGraph::new().classify().tag, ClassTag::Smooth);
    }

    #[test]
    fn d5_branches() {
        let g = d_graph(2);
        let s = g.structure();
        assert_eq!(s.forks.len(), 1);
        let mut lens: Vec<usize> = s.branches.iter().map(Branch::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 1, 2]);
    }

    #[test]
    fn a3_structure() {
        let s = chain(&[2, 2, 2]).structure();
        assert!(s.is_chain);
        assert!(!s.is_circle);
        assert_eq!(s.tails, vec![0, 2]);
        assert!(s.forks.is_empty());
    }

    #[test]
    fn triangle_structure() {
        let s = triangle().structure();
        assert!(s.is_circle);
        assert!(!s.is_chain);
        assert!(s.tails.is_empty());
    }

    #[test]
    fn two_cycle_is_circle() {
        let mut g = WeightedDualGraph::new();
        let a = g.add_vertex(Vertex::new("a", 3)).unwrap();
        let b = g.add_vertex(Vertex::new("b", 3)).unwrap();
        g.add_edge(a, b, 2).unwrap();
        assert!(g.structure().is_circle);
        assert_eq!(g.classify().tag, ClassTag::F);
    }

    #[test]
    fn rejects_malformed() {
        let mut g = WeightedDualGraph::new();
        let a = g.add_vertex(Vertex::new("a", 2)).unwrap();
        assert!(g.add_vertex(Vertex::new("a", 2)).is_err());
        assert!(g.add_vertex(Vertex::new("z", 0)).is_err());
        assert!(g.add_edge(a, a, 1).is_err());
        let b = g.add_vertex(Vertex::new("b", 2)).unwrap();
        g.add_edge(a, b, 1).unwrap();
        assert!(g.add_edge(b, a, 1).is_err());
    }

    #[test]
    fn dot_marks_strict_transforms() {
        let mut g = chain(&[2, 2]);
        let c = g.add_vertex(Vertex::strict("C")).unwrap();
        g.add_edge(0, c, 1).unwrap();
        let dot = g.to_dot();
        assert!(dot.contains("\"F1\" [label=\"F1:2\"]"));
        assert!(dot.contains("\"C\" [label=\"C\", style=filled, fillcolor=black"));
        assert_eq!(dot.matches(" -- ").count(), 2);
    }

    #[test]
    fn chain_order_walks_end_to_end() {
        let g = chain(&[2, 3, 4]).permuted(&[2, 0, 1]);
        let order = g.chain_order().unwrap();
        let weights: Vec<i64> = order.iter().map(|&i| g.vertex(i).weight).collect();
        assert!(weights == vec![2, 3, 4] || weights == vec![4, 3, 2]);
    }
}
