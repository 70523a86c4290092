//! Germs presented by their minimal resolution, and the linear systems that
//! give log discrepancies and extraction coefficients.
//!
//! With `f: Y -> X` the minimal resolution and `F_1..F_m` its exceptional
//! curves, `K_Y + B_Y - sum a_i F_i = f^*(K_X + B)` up to the shift
//! `gamma_i = 1 - a_i`. Intersecting with each `F_j` gives
//! `sum gamma_i (F_i . F_j) = -(K_Y + B_Y) . F_j`, which is uniquely solvable
//! because the intersection form is negative definite.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::dual_graph::WeightedDualGraph;
use crate::error::{Error, Result};
use crate::linalg::{is_negative_definite, Matrix};
use crate::rational::{qi, Q};
use crate::tower::cluster::{is_identifier, BranchCluster, Position};
use crate::tower::BlowupTower;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AttachSite {
    /// The closed point of a smooth germ.
    Origin,
    /// A point of `F_v` on no other exceptional curve. Branches with the same
    /// label on the same curve share the point; unlabelled ones do not.
    Interior { vertex: String, label: Option<String> },
    /// The point `F_v ∩ F_w`.
    Meet(String, String),
}

impl AttachSite {
    pub fn interior(vertex: &str) -> Self {
        AttachSite::Interior {
            vertex: vertex.to_string(),
            label: None,
        }
    }

    /// Curves of the resolution through the site.
    pub fn curves(&self) -> Vec<&str> {
        match self {
            AttachSite::Origin => Vec::new(),
            AttachSite::Interior { vertex, .. } => vec![vertex.as_str()],
            AttachSite::Meet(v, w) => vec![v.as_str(), w.as_str()],
        }
    }
}

impl fmt::Display for AttachSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttachSite::Origin => write!(f, "origin"),
            AttachSite::Interior { vertex, label: None } => write!(f, "{vertex}"),
            AttachSite::Interior {
                vertex,
                label: Some(l),
            } => write!(f, "{vertex}~{l}"),
            AttachSite::Meet(v, w) => write!(f, "{v}+{w}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryBranch {
    pub label: String,
    pub coeff: Q,
    pub site: AttachSite,
    pub cluster: BranchCluster,
}

impl BoundaryBranch {
    pub fn new(label: &str, coeff: Q, site: AttachSite) -> Self {
        BoundaryBranch {
            label: label.to_string(),
            coeff,
            site,
            cluster: BranchCluster::smooth(),
        }
    }

    pub fn with_cluster(mut self, cluster: BranchCluster) -> Self {
        self.cluster = cluster;
        self
    }

    /// `(B_Y . F)` for this branch alone, before the coefficient.
    pub fn meets(&self, vertex: &str) -> u32 {
        let through = self.site.curves().contains(&vertex);
        self.cluster.intersection_with_curve(vertex, through)
    }
}

/// A germ `(X ∋ x, B)`: the minimal resolution's exceptional graph (empty for
/// a smooth germ) and the strict transform of `B` as attached branches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermModel {
    graph: WeightedDualGraph,
    boundary: Vec<BoundaryBranch>,
}

impl GermModel {
    pub fn new(graph: WeightedDualGraph, boundary: Vec<BoundaryBranch>) -> Result<Self> {
        validate_graph(&graph)?;
        let boundary: Vec<BoundaryBranch> = boundary
            .into_iter()
            .filter(|b| !b.coeff.is_zero())
            .collect();
        validate_boundary(&graph, &boundary)?;
        Ok(GermModel { graph, boundary })
    }

    pub fn smooth(boundary: Vec<BoundaryBranch>) -> Result<Self> {
        GermModel::new(WeightedDualGraph::new(), boundary)
    }

    pub fn is_smooth(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn graph(&self) -> &WeightedDualGraph {
        &self.graph
    }

    pub fn boundary(&self) -> &[BoundaryBranch] {
        &self.boundary
    }

    /// The same germ with `B = 0`.
    pub fn without_boundary(&self) -> GermModel {
        GermModel {
            graph: self.graph.clone(),
            boundary: Vec::new(),
        }
    }

    /// Replaces every boundary coefficient; zero coefficients drop out.
    pub fn with_coefficients(&self, coeffs: &[Q]) -> Result<GermModel> {
        if coeffs.len() != self.boundary.len() {
            return Err(Error::DimensionMismatch {
                expected: self.boundary.len(),
                got: coeffs.len(),
            });
        }
        let boundary = self
            .boundary
            .iter()
            .zip(coeffs)
            .map(|(b, c)| BoundaryBranch {
                coeff: c.clone(),
                ..b.clone()
            })
            .collect();
        GermModel::new(self.graph.clone(), boundary)
    }

    /// `K_Y . F_j`.
    pub fn canonical_degrees(&self) -> Vec<Q> {
        self.graph
            .vertices()
            .iter()
            .map(|v| qi(v.canonical_degree()))
            .collect()
    }

    /// `B_Y . F_j`.
    pub fn boundary_degrees(&self) -> Vec<Q> {
        self.graph
            .vertices()
            .iter()
            .map(|v| {
                self.boundary
                    .iter()
                    .fold(Q::zero(), |acc, b| acc + &b.coeff * qi(i64::from(b.meets(&v.id))))
            })
            .collect()
    }

    pub fn solve_discrepancies(&self) -> DiscrepancyVector {
        let gamma = solve_coefficients(
            &self.graph.intersection_form(),
            &self.canonical_degrees(),
            &self.boundary_degrees(),
        )
        .expect("negative definite by construction");
        DiscrepancyVector {
            ids: self.graph.vertices().iter().map(|v| v.id.clone()).collect(),
            values: gamma.iter().map(|g| Q::one() - g).collect(),
        }
    }

    /// `sum gamma_i (F_i . F_j) + (K_Y + B_Y) . F_j` for each `j`.
    pub fn residual(&self, d: &DiscrepancyVector) -> Vec<Q> {
        let gamma = d.coefficients();
        let lhs = self.graph.intersection_form().mul_vec(&gamma);
        lhs.into_iter()
            .zip(self.canonical_degrees())
            .zip(self.boundary_degrees())
            .map(|((l, k), b)| l + k + b)
            .collect()
    }

    /// Minimum of `a(F_i)` over the exceptional curves, with every vertex
    /// attaining it. `None` for a smooth germ.
    pub fn mld_on_resolution(&self) -> Option<(Q, Vec<usize>)> {
        let d = self.solve_discrepancies();
        let min = d.values.iter().min()?.clone();
        let argmin = (0..d.values.len()).filter(|&i| d.values[i] == min).collect();
        Some((min, argmin))
    }

    /// Coefficients of `K_Y + F_e + sum c_i F_i [+ B_Y]`, the pullback of the
    /// extraction of `F_e` with its divisor at coefficient one. Entry `e` is 1.
    pub fn extraction_coefficients(&self, e: usize, include_boundary: bool) -> Result<Vec<Q>> {
        if e >= self.graph.len() {
            return Err(Error::UnknownVertex(format!("#{e}")));
        }
        let boundary = if include_boundary {
            self.boundary_degrees()
        } else {
            vec![Q::zero(); self.graph.len()]
        };
        pinned_coefficients(
            &self.graph.intersection_form(),
            &self.canonical_degrees(),
            &boundary,
            e,
        )
    }

    /// `X ∋ x` klt: every `a(F_i, X, 0) > 0` and the resolution is SNC.
    pub fn is_klt_germ(&self) -> bool {
        if self.graph.vertices().iter().any(|v| v.nodes > 0) {
            return false;
        }
        self.without_boundary()
            .solve_discrepancies()
            .values
            .iter()
            .all(Signed::is_positive)
    }

    /// Whether `F_e` is a Kollár component and a potential lc place of `X ∋ x`.
    ///
    /// The extraction `W -> X` of `F_e` pulls back to
    /// `K_Y + F_e + sum c_i F_i`. `(W, E_W)` is plt near `E_W` exactly when
    /// every `c_i < 1`, and lc exactly when every `c_i <= 1`. In the lc case
    /// a general `G` through the image of `E_W` with `a(E, X, G) = 0` exists,
    /// and conversely any such `G` forces `c_i <= 1` by negativity, so the
    /// divisor `G` itself is never built.
    pub fn kollar_component_status(&self, e: usize) -> Result<KollarStatus> {
        if !self.is_klt_germ() {
            return Err(Error::NotKlt);
        }
        let c = self.extraction_coefficients(e, false)?;
        Ok(KollarStatus::from_pinned(&c, e))
    }

    /// The pair-relative notion: `F_e` is a potential lc place of `(X ∋ x, B)`.
    pub fn pair_potential_lc_place(&self, e: usize) -> Result<bool> {
        BlowupTower::new(self).pair_potential_lc_place(e)
    }

    /// The largest `t` with `(X ∋ x, tB)` lc; `None` when `B = 0` or `X ∋ x`
    /// itself is not lc.
    ///
    /// The log resolution depends only on the support of `B`, and every
    /// `1 - a(E, X, tB)` on it is affine in `t`, so two solves fix them all.
    pub fn lc_threshold(&self) -> Result<Option<Q>> {
        if self.boundary.is_empty() {
            return Ok(None);
        }
        let two = Q::from_integer(2.into());
        let half: Vec<Q> = self.boundary.iter().map(|b| &b.coeff / &two).collect();
        let at_one = crate::tower::resolve_pair(self)?;
        let at_half = crate::tower::resolve_pair(&self.with_coefficients(&half)?)?;
        let (g1, gh) = (at_one.ledger(), at_half.ledger());
        if g1.len() != gh.len() {
            return Err(Error::Unresolved("resolution depends on coefficients".into()));
        }
        let one = Q::one();
        let mut t: Option<Q> = None;
        let mut bound = |x: Q| {
            if t.as_ref().is_none_or(|cur| x < *cur) {
                t = Some(x);
            }
        };
        for b in &self.boundary {
            bound(&one / &b.coeff);
        }
        for (a, h) in g1.iter().zip(&gh) {
            let slope = (a - h) * &two;
            let at_zero = a - &slope;
            if at_zero > one {
                return Ok(None);
            }
            if slope.is_positive() {
                bound((&one - &at_zero) / &slope);
            }
        }
        Ok(t)
    }

    /// `B` scaled to its lc threshold.
    pub fn at_lc_threshold(&self) -> Result<Option<GermModel>> {
        let Some(t) = self.lc_threshold()? else {
            return Ok(None);
        };
        let scaled: Vec<Q> = self.boundary.iter().map(|b| &b.coeff * &t).collect();
        self.with_coefficients(&scaled).map(Some)
    }

    /// klt/plt/dlt/lc of `(X ∋ x, B)`, resolving the boundary first.
    pub fn pair_status(&self) -> Result<PairStatus> {
        crate::tower::resolve_pair(self)?.pair_status()
    }
}

fn validate_graph(g: &WeightedDualGraph) -> Result<()> {
    if g.is_empty() {
        return Ok(());
    }
    let bad = |msg: String| Err(Error::InvalidGraph(msg));
    if let Some(v) = g.vertices().iter().find(|v| !v.is_exceptional()) {
        return bad(format!("`{}` is not an exceptional curve", v.id));
    }
    if !g.is_connected() {
        return bad("exceptional locus is disconnected".into());
    }
    if let Some((i, j, m)) = g.edges().find(|&(_, _, m)| m > 1) {
        return bad(format!(
            "`{}` and `{}` meet {m} times; a minimal resolution graph is simple",
            g.vertex(i).id,
            g.vertex(j).id
        ));
    }
    if !g.is_tree() {
        return bad("exceptional graph contains a circle".into());
    }
    let irrational = g.vertices().iter().any(|v| !v.is_rational_smooth());
    if irrational {
        let v = g.vertex(0);
        if g.len() > 1 || !matches!((v.genus, v.nodes), (1, 0) | (0, 1)) {
            return bad("only a single elliptic or nodal rational curve may be non-rational or singular".into());
        }
    } else if let Some(v) = g.vertices().iter().find(|v| v.weight < 2) {
        return bad(format!(
            "`{}` has weight {}; a minimal resolution has no (-1)-curves",
            v.id, v.weight
        ));
    }
    if !is_negative_definite(&g.intersection_form())? {
        return Err(Error::NotNegativeDefinite);
    }
    Ok(())
}

fn validate_boundary(g: &WeightedDualGraph, boundary: &[BoundaryBranch]) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidBoundary(msg));
    let mut labels = BTreeSet::new();
    for b in boundary {
        if !is_identifier(&b.label) {
            return bad(format!("bad branch label `{}`", b.label));
        }
        if !labels.insert(b.label.as_str()) {
            return bad(format!("duplicate branch label `{}`", b.label));
        }
        if b.coeff.is_negative() || b.coeff > Q::one() {
            return bad(format!("coefficient of `{}` is outside [0, 1]", b.label));
        }
        match &b.site {
            AttachSite::Origin => {
                if !g.is_empty() {
                    return bad(format!(
                        "`{}` is attached at the origin of a singular germ",
                        b.label
                    ));
                }
            }
            AttachSite::Interior { vertex, label } => {
                g.require(vertex)?;
                if let Some(l) = label {
                    if !is_identifier(l) {
                        return bad(format!("bad point label `{l}`"));
                    }
                }
            }
            AttachSite::Meet(v, w) => {
                let i = g.require(v)?;
                let j = g.require(w)?;
                if g.edge_mult(i, j) == 0 {
                    return bad(format!("`{v}` and `{w}` do not meet"));
                }
            }
        }
        if g.is_empty() && b.site != AttachSite::Origin {
            return bad(format!("`{}` must be attached at the origin", b.label));
        }
        let site_curves = b.site.curves();
        for c in b.cluster.base_curves() {
            if !site_curves.contains(&c) {
                return bad(format!(
                    "cluster of `{}` follows `{c}`, which does not pass through its site",
                    b.label
                ));
            }
        }
        if b.cluster.points().iter().any(|p| matches!(&p.position, Position::OnCurve(_)))
            && b.site == AttachSite::Origin
        {
            return bad(format!("`{}` follows a curve on a smooth germ", b.label));
        }
    }
    Ok(())
}

/// Solves `sum x_i M_ij = -k_j - b_j`.
pub fn solve_coefficients(form: &Matrix, canonical: &[Q], boundary: &[Q]) -> Result<Vec<Q>> {
    let rhs: Vec<Q> = canonical
        .iter()
        .zip(boundary)
        .map(|(k, b)| -(k + b))
        .collect();
    form.solve(&rhs)
}

/// Solves the same system with `x_e = 1` fixed and row `e` dropped.
pub fn pinned_coefficients(form: &Matrix, canonical: &[Q], boundary: &[Q], e: usize) -> Result<Vec<Q>> {
    let n = form.rows();
    let rest: Vec<usize> = (0..n).filter(|&i| i != e).collect();
    let sub = form.principal(&rest);
    let rhs: Vec<Q> = rest
        .iter()
        .map(|&j| -(&canonical[j] + &boundary[j] + form.get(e, j)))
        .collect();
    let x = sub.solve(&rhs)?;
    let mut out = vec![Q::one(); n];
    for (k, &i) in rest.iter().enumerate() {
        out[i] = x[k].clone();
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyVector {
    pub ids: Vec<String>,
    /// `a(F_i, X, B)`.
    pub values: Vec<Q>,
}

impl DiscrepancyVector {
    /// `1 - a(F_i, X, B)`, the coefficient of `F_i` in the pullback.
    pub fn coefficients(&self) -> Vec<Q> {
        self.values.iter().map(|a| Q::one() - a).collect()
    }

    pub fn get(&self, id: &str) -> Option<&Q> {
        self.ids.iter().position(|i| i == id).map(|k| &self.values[k])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KollarStatus {
    pub is_kollar: bool,
    pub is_potential_lc_place: bool,
}

impl KollarStatus {
    pub(crate) fn from_pinned(c: &[Q], e: usize) -> Self {
        let others = || c.iter().enumerate().filter(move |&(i, _)| i != e).map(|(_, v)| v);
        KollarStatus {
            is_kollar: others().all(|v| *v < Q::one()),
            is_potential_lc_place: others().all(|v| *v <= Q::one()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PairClass {
    NotLc,
    Lc,
    Dlt,
    Plt,
    Klt,
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairClass::NotLc => "not-lc",
            PairClass::Lc => "lc",
            PairClass::Dlt => "dlt",
            PairClass::Plt => "plt",
            PairClass::Klt => "klt",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairStatus {
    pub klt: bool,
    pub plt: bool,
    pub dlt: bool,
    pub lc: bool,
    /// The germ itself is log smooth: smooth with SNC boundary.
    pub log_smooth: bool,
}

impl PairStatus {
    pub fn class(&self) -> PairClass {
        if self.klt {
            PairClass::Klt
        } else if self.plt {
            PairClass::Plt
        } else if self.dlt {
            PairClass::Dlt
        } else if self.lc {
            PairClass::Lc
        } else {
            PairClass::NotLc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn d4(tail_weight: i64) -> GermModel {
        let g = WeightedDualGraph::from_parts(
            &[("F1", tail_weight), ("F2", 2), ("F3", 2), ("F4", 2)],
            &[("F1", "F2"), ("F2", "F3"), ("F2", "F4")],
        )
        .unwrap();
        GermModel::new(g, vec![]).unwrap()
    }

    #[test]
    fn lc_thresholds() {
        let cusp = |c: Q| {
            GermModel::smooth(vec![BoundaryBranch::new("C", c, AttachSite::Origin).with_cluster(BranchCluster::cusp())])
                .unwrap()
        };
        assert_eq!(cusp(qi(1)).lc_threshold().unwrap(), Some(q(5, 6)));
        assert_eq!(cusp(q(2, 3)).lc_threshold().unwrap(), Some(q(5, 4)));
        let lines = GermModel::smooth(vec![
            BoundaryBranch::new("L1", q(1, 3), AttachSite::Origin),
            BoundaryBranch::new("L2", q(1, 2), AttachSite::Origin),
        ])
        .unwrap();
        assert_eq!(lines.lc_threshold().unwrap(), Some(qi(2)));
        let t = cusp(qi(1)).at_lc_threshold().unwrap().unwrap();
        assert!(t.pair_status().unwrap().lc);
        assert_eq!(t.boundary()[0].coeff, q(5, 6));
    }

    #[test]
    fn binary_dihedral_discrepancies() {
        let d = d4(3).solve_discrepancies();
        assert_eq!(d.values, vec![q(1, 2), q(1, 2), q(3, 4), q(3, 4)]);
        assert!(d4(3).residual(&d).iter().all(Zero::is_zero));
        assert_eq!(d4(3).mld_on_resolution(), Some((q(1, 2), vec![0, 1])));
    }

    #[test]
    fn du_val_d4_extraction() {
        let g = d4(2);
        assert_eq!(g.extraction_coefficients(0, false).unwrap(), vec![qi(1), qi(1), q(1, 2), q(1, 2)]);
        assert_eq!(g.extraction_coefficients(1, false).unwrap(), vec![q(1, 2), qi(1), q(1, 2), q(1, 2)]);
        let tail = g.kollar_component_status(0).unwrap();
        assert!(!tail.is_kollar && tail.is_potential_lc_place);
        let fork = g.kollar_component_status(1).unwrap();
        assert!(fork.is_kollar && fork.is_potential_lc_place);
    }

    #[test]
    fn a1_with_transverse_half_branch() {
        let g = WeightedDualGraph::from_parts(&[("F1", 2)], &[]).unwrap();
        let b = BoundaryBranch::new("L", q(1, 2), AttachSite::interior("F1"));
        let germ = GermModel::new(g, vec![b]).unwrap();
        assert_eq!(germ.solve_discrepancies().values, vec![q(3, 4)]);
    }

    #[test]
    fn zero_coefficient_branches_are_dropped() {
        let b = BoundaryBranch::new("L", Q::zero(), AttachSite::Origin);
        assert!(GermModel::smooth(vec![b]).unwrap().boundary().is_empty());
    }

    #[test]
    fn rejects_bad_models() {
        let tri = WeightedDualGraph::from_parts(
            &[("F1", 2), ("F2", 2), ("F3", 2)],
            &[("F1", "F2"), ("F2", "F3"), ("F1", "F3")],
        )
        .unwrap();
        assert!(GermModel::new(tri, vec![]).is_err());
        let minus_one = WeightedDualGraph::from_parts(&[("F1", 2), ("F2", 1), ("F3", 2)], &[("F1", "F2"), ("F2", "F3")]).unwrap();
        assert!(GermModel::new(minus_one, vec![]).is_err());
        let a1 = WeightedDualGraph::from_parts(&[("F1", 2)], &[]).unwrap();
        let far = BoundaryBranch::new("L", q(1, 2), AttachSite::Origin);
        assert!(GermModel::new(a1.clone(), vec![far]).is_err());
        let heavy = BoundaryBranch::new("L", q(3, 2), AttachSite::interior("F1"));
        assert!(GermModel::new(a1, vec![heavy]).is_err());
    }
}
