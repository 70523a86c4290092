//! Named germs: the ADE graphs, their weight variants, and worked examples.

use crate::discrepancy::{AttachSite, BoundaryBranch, GermModel};
use crate::dual_graph::{Vertex, WeightedDualGraph};
use crate::rational::{q, qi};
use crate::tower::cluster::BranchCluster;

fn ids(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("F{i}")).collect()
}

fn build(weights: &[i64], edges: &[(usize, usize)]) -> WeightedDualGraph {
    let mut g = WeightedDualGraph::new();
    for (id, &w) in ids(weights.len()).into_iter().zip(weights) {
        g.add_vertex(Vertex::new(id, w)).expect("catalog vertex");
    }
    for &(a, b) in edges {
        g.add_edge(a, b, 1).expect("catalog edge");
    }
    g
}

/// Chain `F1 - ... - Fm`.
pub fn a_graph(weights: &[i64]) -> WeightedDualGraph {
    let edges: Vec<(usize, usize)> = (1..weights.len()).map(|i| (i - 1, i)).collect();
    build(weights, &edges)
}

/// `F1`, `F2` the short arms, `F3` the fork, `F4 .. Fm` the long arm.
pub fn d_graph(weights: &[i64]) -> WeightedDualGraph {
    let m = weights.len();
    assert!(m >= 4, "D needs at least four vertices");
    let mut edges = vec![(0, 2), (1, 2)];
    edges.extend((3..m).map(|i| (i - 1, i)));
    build(weights, &edges)
}

/// `F1` the short arm, `F2` the fork, then the arm `F3, F4` and the long arm.
pub fn e_graph(weights: &[i64]) -> WeightedDualGraph {
    let m = weights.len();
    assert!((6..=8).contains(&m), "E needs six to eight vertices");
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (1, 4)];
    edges.extend((5..m).map(|i| (i - 1, i)));
    build(weights, &edges)
}

fn du_val(g: WeightedDualGraph) -> GermModel {
    GermModel::new(g, Vec::new()).expect("catalog germ")
}

pub fn a(m: usize) -> GermModel {
    du_val(a_graph(&vec![2; m]))
}

pub fn d(m: usize) -> GermModel {
    du_val(d_graph(&vec![2; m]))
}

pub fn e(m: usize) -> GermModel {
    du_val(e_graph(&vec![2; m]))
}

/// Every Du Val graph `A_1..A_9`, `D_4..D_9`, `E_6..E_8`, with its name.
pub fn du_val_catalog() -> Vec<(String, GermModel)> {
    let mut out = Vec::new();
    out.extend((1..=9).map(|m| (format!("A{m}"), a(m))));
    out.extend((4..=9).map(|m| (format!("D{m}"), d(m))));
    out.extend((6..=8).map(|m| (format!("E{m}"), e(m))));
    out
}

/// One non-Du Val klt variant per catalog graph, with one curve of weight 3:
/// an end of the chain for A, the end of the long arm for D, the fork for E.
pub fn weight_variants() -> Vec<(String, GermModel)> {
    let mut out = Vec::new();
    for m in 1..=9 {
        let mut w = vec![2; m];
        w[0] = 3;
        out.push((format!("A{m}'"), du_val(a_graph(&w))));
    }
    for m in 4..=9 {
        let mut w = vec![2; m];
        w[m - 1] = 3;
        out.push((format!("D{m}'"), du_val(d_graph(&w))));
    }
    for m in 6..=8 {
        let mut w = vec![2; m];
        w[1] = 3;
        out.push((format!("E{m}'"), du_val(e_graph(&w))));
    }
    out
}

/// The binary dihedral `D_4` germ: tail `F1` of weight 3 on the fork `F2`.
pub fn binary_dihedral_d4() -> GermModel {
    let g = WeightedDualGraph::from_parts(
        &[("F1", 3), ("F2", 2), ("F3", 2), ("F4", 2)],
        &[("F1", "F2"), ("F2", "F3"), ("F2", "F4")],
    )
    .expect("catalog graph");
    du_val(g)
}

/// `A_1` with weight 3.
pub fn a1_weight3() -> GermModel {
    du_val(a_graph(&[3]))
}

/// The plane with `B = (2/3) D`, `D` a cusp in general position.
pub fn kawakita() -> GermModel {
    let b = BoundaryBranch::new("D", q(2, 3), AttachSite::Origin).with_cluster(BranchCluster::cusp());
    GermModel::smooth(vec![b]).expect("catalog germ")
}

/// The plane with a reduced cusp: lc threshold `5/6`, so not lc.
pub fn reduced_cusp() -> GermModel {
    let b = BoundaryBranch::new("C", qi(1), AttachSite::Origin).with_cluster(BranchCluster::cusp());
    GermModel::smooth(vec![b]).expect("catalog germ")
}

/// Two reduced transverse lines in the plane.
pub fn two_lines() -> GermModel {
    GermModel::smooth(vec![
        BoundaryBranch::new("L1", qi(1), AttachSite::Origin),
        BoundaryBranch::new("L2", qi(1), AttachSite::Origin),
    ])
    .expect("catalog germ")
}

/// The `A_3` point left on the extraction of a `D_4` tail `C`, with the pair
/// `(X ∋ x, C)`: `C` meets the middle curve.
pub fn d4_extraction_pair() -> GermModel {
    let b = BoundaryBranch::new("C", qi(1), AttachSite::interior("F2"));
    GermModel::new(a_graph(&[2, 2, 2]), vec![b]).expect("catalog germ")
}

/// A curve of weight `w` and genus one.
pub fn b_type(w: i64) -> GermModel {
    let mut g = WeightedDualGraph::new();
    g.add_vertex(Vertex::new("F1", w).with_genus(1)).expect("catalog vertex");
    du_val(g)
}

/// A rational curve with one node and weight `w`.
pub fn c_type(w: i64) -> GermModel {
    let mut g = WeightedDualGraph::new();
    g.add_vertex(Vertex::new("F1", w).with_nodes(1)).expect("catalog vertex");
    du_val(g)
}

/// Centre `F1` of weight `w` with four weight-2 leaves.
pub fn h5(w: i64) -> GermModel {
    du_val(build(&[w, 2, 2, 2, 2], &[(0, 1), (0, 2), (0, 3), (0, 4)]))
}

/// Two forks joined by a chain, two weight-2 leaves at each; `m >= 6`
/// curves, the chain (forks included) carrying weight `w`.
pub fn h(m: usize, w: i64) -> GermModel {
    assert!(m >= 6, "H needs at least six vertices");
    let path = m - 4;
    let mut weights = vec![w; path];
    weights.extend([2, 2, 2, 2]);
    let mut edges: Vec<(usize, usize)> = (1..path).map(|i| (i - 1, i)).collect();
    edges.extend([(0, path), (0, path + 1), (path - 1, path + 2), (path - 1, path + 3)]);
    du_val(build(&weights, &edges))
}

/// Every named germ shipped as a fixture, by file stem.
pub fn fixtures() -> Vec<(String, GermModel)> {
    let mut out: Vec<(String, GermModel)> = du_val_catalog()
        .into_iter()
        .map(|(n, g)| (format!("{}_duval", n.to_lowercase()), g))
        .collect();
    out.push(("bd12_d4".into(), binary_dihedral_d4()));
    out.push(("a1_weight3".into(), a1_weight3()));
    out.push(("kawakita".into(), kawakita()));
    out.push(("h5".into(), h5(3)));
    out.push(("d4_extraction_pair".into(), d4_extraction_pair()));
    out.push(("two_lines".into(), two_lines()));
    out.push(("b_elliptic".into(), b_type(1)));
    out.push(("c_nodal".into(), c_type(1)));
    out.push(("h6".into(), h(6, 3)));
    out
}
