//! Sequences of point blow-ups over a germ, tracked combinatorially.
//!
//! Each curve carries its self-intersection and its coefficient
//! `gamma = 1 - a(C, X, B)` in the sub-boundary `Delta` on the current model,
//! where `K + Delta` is the pullback of `K_X + B`. Blowing up a point `p`
//! creates `E` with `gamma(E) = mult_p(Delta) - 1`, the surface form of
//! `a(E) = 2 - mult_p(Delta)`.

pub mod cluster;
mod enumerate;
mod resolve;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::discrepancy::{pinned_coefficients, solve_coefficients, GermModel, KollarStatus, PairStatus};
use crate::dual_graph::{Vertex, WeightedDualGraph};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{qi, Q};
use cluster::{BranchCluster, Position};

pub use enumerate::{enumerate_divisors, for_each_divisor, mld_bruteforce, DivisorOverGerm, MldSearch};
pub use resolve::resolve_pair;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerCurve {
    pub label: String,
    pub self_int: i64,
    pub genus: u32,
    pub nodes: u32,
    /// `1 - a(C, X, B)`.
    pub gamma: Q,
    /// Index of the blow-up that created the curve; `None` on the base.
    pub step: Option<usize>,
}

impl TowerCurve {
    pub fn log_discrepancy(&self) -> Q {
        Q::one() - &self.gamma
    }

    /// `K . C` by adjunction.
    pub fn canonical_degree(&self) -> i64 {
        -2 - self.self_int + 2 * (i64::from(self.genus) + i64::from(self.nodes))
    }
}

/// A closed point of the current model lying over the germ's point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    /// The point of a smooth germ before any blow-up.
    Origin,
    /// A point of one curve on no other curve. Tags name points shared by
    /// boundary branches; an unused tag is a general point.
    Free { curve: usize, tag: u32 },
    /// A transverse intersection point of two curves, by id.
    Meet(u32),
    /// An ordinary double point of a nodal curve.
    Node { curve: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum PositionKey {
    Label(String),
    Curve(usize),
    /// The exceptional curve of a shared point not yet blown up, counted
    /// from the branch's current point.
    Pending(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct MeetPoint {
    id: u32,
    a: usize,
    b: usize,
}

/// The strict transform of one boundary branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedBranch {
    pub label: String,
    pub coeff: Q,
    pub cluster: BranchCluster,
    /// Cluster index of the point the branch currently passes through.
    pub index: usize,
    pub point: Point,
    /// Curve created by blowing up each cluster point, once it has been.
    created: Vec<Option<usize>>,
}

impl TrackedBranch {
    pub fn mult(&self) -> u32 {
        self.cluster.mult_at(self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub point: Point,
    /// Human-readable description of the blown-up point.
    pub name: String,
    pub curve: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupTower {
    smooth_base: bool,
    base_len: usize,
    base_log_smooth: bool,
    curves: Vec<TowerCurve>,
    meets: Vec<MeetPoint>,
    branches: Vec<TrackedBranch>,
    steps: Vec<Step>,
    next_tag: u32,
    next_meet: u32,
}

impl BlowupTower {
    /// The minimal resolution of the germ, with its coefficient ledger.
    pub fn new(germ: &GermModel) -> Self {
        let g = germ.graph();
        let gamma = germ.solve_discrepancies().coefficients();
        let curves = g
            .vertices()
            .iter()
            .zip(gamma)
            .map(|(v, gamma)| TowerCurve {
                label: v.id.clone(),
                self_int: -v.weight,
                genus: v.genus,
                nodes: v.nodes,
                gamma,
                step: None,
            })
            .collect();
        let mut t = BlowupTower {
            smooth_base: germ.is_smooth(),
            base_len: g.len(),
            base_log_smooth: false,
            curves,
            meets: Vec::new(),
            branches: Vec::new(),
            steps: Vec::new(),
            next_tag: 0,
            next_meet: 0,
        };
        for (i, j, m) in g.edges() {
            for _ in 0..m {
                t.add_meet(i, j);
            }
        }
        let mut shared: BTreeMap<(usize, String), u32> = BTreeMap::new();
        for b in germ.boundary() {
            let point = match &b.site {
                crate::discrepancy::AttachSite::Origin => Point::Origin,
                crate::discrepancy::AttachSite::Interior { vertex, label } => {
                    let curve = g.index_of(vertex).expect("validated site");
                    let tag = match label {
                        Some(l) => match shared.get(&(curve, l.clone())) {
                            Some(&tag) => tag,
                            None => {
                                let tag = t.fresh_tag();
                                shared.insert((curve, l.clone()), tag);
                                tag
                            }
                        },
                        None => t.fresh_tag(),
                    };
                    Point::Free { curve, tag }
                }
                crate::discrepancy::AttachSite::Meet(v, w) => {
                    let i = g.index_of(v).expect("validated site");
                    let j = g.index_of(w).expect("validated site");
                    Point::Meet(t.meet_between(i, j).expect("validated site"))
                }
            };
            t.branches.push(TrackedBranch {
                label: b.label.clone(),
                coeff: b.coeff.clone(),
                cluster: b.cluster.clone(),
                index: 0,
                point,
                created: vec![None; b.cluster.len()],
            });
        }
        t.base_log_smooth = t.bad_point().is_none();
        t
    }

    fn fresh_tag(&mut self) -> u32 {
        let tag = self.next_tag;
        self.next_tag += 1;
        tag
    }

    fn add_meet(&mut self, a: usize, b: usize) -> u32 {
        let id = self.next_meet;
        self.next_meet += 1;
        self.meets.push(MeetPoint { id, a, b });
        id
    }

    fn meet(&self, id: u32) -> Option<&MeetPoint> {
        self.meets.iter().find(|m| m.id == id)
    }

    fn meet_between(&self, a: usize, b: usize) -> Option<u32> {
        self.meets
            .iter()
            .find(|m| (m.a == a && m.b == b) || (m.a == b && m.b == a))
            .map(|m| m.id)
    }

    pub fn is_smooth_base(&self) -> bool {
        self.smooth_base
    }

    /// The boundary is SNC on the base model (log smooth when the base is smooth).
    pub fn base_is_log_smooth(&self) -> bool {
        self.base_log_smooth
    }

    pub fn curves(&self) -> &[TowerCurve] {
        &self.curves
    }

    pub fn curve(&self, i: usize) -> &TowerCurve {
        &self.curves[i]
    }

    pub fn curve_by_label(&self, label: &str) -> Option<usize> {
        self.curves.iter().position(|c| c.label == label)
    }

    pub fn base_len(&self) -> usize {
        self.base_len
    }

    pub fn branches(&self) -> &[TrackedBranch] {
        &self.branches
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Index of the newest curve, if any blow-up happened.
    pub fn last_curve(&self) -> Option<usize> {
        self.steps.last().map(|s| s.curve)
    }

    /// Curves through `p` with their multiplicity there.
    pub fn curves_through(&self, p: Point) -> Vec<(usize, u32)> {
        match p {
            Point::Origin => Vec::new(),
            Point::Free { curve, .. } => vec![(curve, 1)],
            Point::Meet(id) => self.meet(id).map_or_else(Vec::new, |m| vec![(m.a, 1), (m.b, 1)]),
            Point::Node { curve } => vec![(curve, 2)],
        }
    }

    pub fn branches_at(&self, p: Point) -> Vec<usize> {
        (0..self.branches.len())
            .filter(|&b| self.branches[b].point == p)
            .collect()
    }

    /// The combinatorially distinct points of curve `c`: its intersections
    /// with other curves, its nodes, the points carrying branches, and one
    /// general point.
    pub fn points_on(&self, c: usize) -> Vec<Point> {
        let mut out: Vec<Point> = self
            .meets
            .iter()
            .filter(|m| m.a == c || m.b == c)
            .map(|m| Point::Meet(m.id))
            .collect();
        if self.curves[c].nodes > 0 {
            out.push(Point::Node { curve: c });
        }
        for b in &self.branches {
            if let Point::Free { curve, .. } = b.point {
                if curve == c && !out.contains(&b.point) {
                    out.push(b.point);
                }
            }
        }
        out.push(self.general_point(c));
        out
    }

    /// Points of the whole configuration, each once.
    pub fn configuration_points(&self) -> Vec<Point> {
        if self.curves.is_empty() {
            return if self.smooth_base && self.steps.is_empty() {
                vec![Point::Origin]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        for c in 0..self.curves.len() {
            for p in self.points_on(c) {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    pub fn general_point(&self, c: usize) -> Point {
        Point::Free {
            curve: c,
            tag: self.next_tag,
        }
    }

    fn check_point(&self, p: Point) -> Result<()> {
        let bad = |msg: String| Err(Error::NoSuchPoint(msg));
        match p {
            Point::Origin => {
                if !(self.smooth_base && self.steps.is_empty()) {
                    return bad("the origin exists only on an untouched smooth germ".into());
                }
            }
            Point::Free { curve, tag } => {
                if curve >= self.curves.len() {
                    return bad(format!("no curve #{curve}"));
                }
                if self.branches.iter().any(|b| matches!(b.point, Point::Free { curve: c, tag: t } if t == tag && c != curve)) {
                    return bad(format!("tag {tag} is not on `{}`", self.curves[curve].label));
                }
            }
            Point::Meet(id) => {
                if self.meet(id).is_none() {
                    return bad(format!("no intersection point #{id}"));
                }
            }
            Point::Node { curve } => {
                if self.curves.get(curve).is_none_or(|c| c.nodes == 0) {
                    return bad(format!("curve #{curve} has no node"));
                }
            }
        }
        Ok(())
    }

    pub fn describe(&self, p: Point) -> String {
        match p {
            Point::Origin => "o".to_string(),
            Point::Meet(id) => match self.meet(id) {
                Some(m) => {
                    let name = format!("{}*{}", self.curves[m.a].label, self.curves[m.b].label);
                    match self.meet_ordinal(id) {
                        Some((k, n)) if n > 1 => format!("{name}#{k}"),
                        _ => name,
                    }
                }
                None => format!("#{id}"),
            },
            Point::Free { curve, .. } => {
                let here: Vec<&str> = self
                    .branches_at(p)
                    .into_iter()
                    .map(|b| self.branches[b].label.as_str())
                    .collect();
                if here.is_empty() {
                    format!("{}.gen", self.curves[curve].label)
                } else {
                    format!("{}@{}", self.curves[curve].label, here.join("+"))
                }
            }
            Point::Node { curve } => format!("{}.node", self.curves[curve].label),
        }
    }

    /// Position (from 1) of a meet among the meets of the same two curves,
    /// with their count; a node's blow-up leaves two such points.
    pub fn meet_ordinal(&self, id: u32) -> Option<(usize, usize)> {
        let m = self.meet(id)?;
        let same: Vec<u32> = self
            .meets
            .iter()
            .filter(|x| (x.a, x.b) == (m.a, m.b) || (x.a, x.b) == (m.b, m.a))
            .map(|x| x.id)
            .collect();
        let k = same.iter().position(|&x| x == id)? + 1;
        Some((k, same.len()))
    }

    fn fresh_label(&self) -> String {
        let mut label = format!("E{}", self.steps.len() + 1);
        while self.curve_by_label(&label).is_some() || self.branches.iter().any(|b| b.label == label) {
            label.push('\'');
        }
        label
    }

    /// `mult_p(Delta)`: the sub-boundary's multiplicity at `p`.
    pub fn multiplicity_at(&self, p: Point) -> Q {
        let curves = self
            .curves_through(p)
            .into_iter()
            .fold(Q::zero(), |acc, (c, m)| acc + &self.curves[c].gamma * qi(i64::from(m)));
        self.branches_at(p).into_iter().fold(curves, |acc, b| {
            acc + &self.branches[b].coeff * qi(i64::from(self.branches[b].mult()))
        })
    }

    /// Blows up `p`, returning the new tower.
    pub fn blow_up(&self, p: Point) -> Result<BlowupTower> {
        self.check_point(p)?;
        let mut t = self.clone();
        let e = t.curves.len();
        let name = t.describe(p);
        let gamma = t.multiplicity_at(p) - Q::one();
        for (c, m) in t.curves_through(p) {
            t.curves[c].self_int -= i64::from(m * m);
        }
        t.curves.push(TowerCurve {
            label: t.fresh_label(),
            self_int: -1,
            genus: 0,
            nodes: 0,
            gamma,
            step: Some(t.steps.len()),
        });
        match p {
            Point::Origin => {}
            Point::Free { curve, tag } => {
                t.add_meet(curve, e);
                if tag >= t.next_tag {
                    t.next_tag = tag + 1;
                }
            }
            Point::Meet(id) => {
                let m = t.meet(id).cloned().expect("checked");
                t.meets.retain(|x| x.id != id);
                t.add_meet(m.a, e);
                t.add_meet(m.b, e);
            }
            Point::Node { curve } => {
                t.curves[curve].nodes -= 1;
                t.add_meet(curve, e);
                t.add_meet(curve, e);
            }
        }
        let mut shared: BTreeMap<String, u32> = BTreeMap::new();
        for b in t.branches_at(p) {
            let next = {
                let br = &t.branches[b];
                match br.cluster.position_at(br.index + 1) {
                    None | Some(Position::Free(None)) | Some(Position::Root) => None,
                    Some(Position::Free(Some(l))) => Some(Err(l.clone())),
                    Some(Position::OnExceptional(j)) => Some(Ok(br.created[*j])),
                    Some(Position::OnCurve(name)) => Some(Ok(self.base_curve(name))),
                }
            };
            let point = match next {
                None => Point::Free {
                    curve: e,
                    tag: t.fresh_tag(),
                },
                Some(Err(label)) => {
                    let tag = match shared.get(&label) {
                        Some(&tag) => tag,
                        None => {
                            let tag = t.fresh_tag();
                            shared.insert(label, tag);
                            tag
                        }
                    };
                    Point::Free { curve: e, tag }
                }
                Some(Ok(target)) => {
                    let id = target.and_then(|c| t.meet_between(c, e)).ok_or_else(|| {
                        Error::InvalidCluster(format!(
                            "branch `{}` leaves through a curve that does not pass through its point",
                            t.branches[b].label
                        ))
                    })?;
                    Point::Meet(id)
                }
            };
            let br = &mut t.branches[b];
            if let Some(slot) = br.created.get_mut(br.index) {
                *slot = Some(e);
            }
            br.index += 1;
            br.point = point;
        }
        t.steps.push(Step { point: p, name, curve: e });
        Ok(t)
    }

    fn base_curve(&self, label: &str) -> Option<usize> {
        (0..self.base_len).find(|&i| self.curves[i].label == label)
    }

    /// Resolves a cluster position to the curve it names, if any.
    fn satellite_curve(&self, b: &TrackedBranch, pos: &Position) -> Option<usize> {
        match pos {
            Position::OnExceptional(j) => b.created.get(*j).copied().flatten(),
            Position::OnCurve(name) => self.base_curve(name),
            _ => None,
        }
    }

    /// What a later cluster point of `b` lies on, comparable across branches
    /// that share every point up to it. Unlabelled free points match nothing.
    fn position_key(&self, b: &TrackedBranch, pos: &Position) -> Option<PositionKey> {
        match pos {
            Position::Free(Some(l)) => Some(PositionKey::Label(l.clone())),
            Position::OnExceptional(j) if *j >= b.index => Some(PositionKey::Pending(j - b.index)),
            Position::OnExceptional(_) | Position::OnCurve(_) => self.satellite_curve(b, pos).map(PositionKey::Curve),
            Position::Free(None) | Position::Root => None,
        }
    }

    /// Local (and global) intersection of a branch's strict transform with a curve.
    pub fn branch_curve_intersection(&self, b: usize, c: usize) -> u32 {
        let br = &self.branches[b];
        if !self.curves_through(br.point).iter().any(|&(x, _)| x == c) {
            return 0;
        }
        let mut total = br.mult();
        let mut i = br.index + 1;
        while let Some(pos) = br.cluster.position_at(i) {
            if self.satellite_curve(br, pos) != Some(c) {
                break;
            }
            total += br.cluster.mult_at(i);
            i += 1;
        }
        total
    }

    /// Intersection of two branch strict transforms by Noether's formula.
    pub fn branch_intersection(&self, b1: usize, b2: usize) -> u64 {
        let (x, y) = (&self.branches[b1], &self.branches[b2]);
        if x.point != y.point {
            return 0;
        }
        let mut total = u64::from(x.mult()) * u64::from(y.mult());
        let mut k = 1;
        while let (Some(px), Some(py)) = (x.cluster.position_at(x.index + k), y.cluster.position_at(y.index + k)) {
            let same = match (self.position_key(x, px), self.position_key(y, py)) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            };
            if !same {
                break;
            }
            total += u64::from(x.cluster.mult_at(x.index + k)) * u64::from(y.cluster.mult_at(y.index + k));
            k += 1;
        }
        total
    }

    /// Intersection matrix of all curves on the current model.
    pub fn intersection_form(&self) -> Matrix {
        let n = self.curves.len();
        let mut m = Matrix::zeros(n, n);
        for (i, c) in self.curves.iter().enumerate() {
            m.set(i, i, qi(c.self_int));
        }
        for mp in &self.meets {
            let v = m.get(mp.a, mp.b) + qi(1);
            m.set(mp.a, mp.b, v.clone());
            m.set(mp.b, mp.a, v);
        }
        m
    }

    pub fn canonical_degrees(&self) -> Vec<Q> {
        self.curves.iter().map(|c| qi(c.canonical_degree())).collect()
    }

    /// `B . C` for the tracked boundary, curve by curve.
    pub fn boundary_degrees(&self) -> Vec<Q> {
        (0..self.curves.len())
            .map(|c| {
                (0..self.branches.len()).fold(Q::zero(), |acc, b| {
                    acc + &self.branches[b].coeff * qi(i64::from(self.branch_curve_intersection(b, c)))
                })
            })
            .collect()
    }

    /// Coefficients from solving the pullback system on this model directly.
    pub fn pullback_coefficients(&self) -> Result<Vec<Q>> {
        solve_coefficients(&self.intersection_form(), &self.canonical_degrees(), &self.boundary_degrees())
    }

    pub fn ledger(&self) -> Vec<Q> {
        self.curves.iter().map(|c| c.gamma.clone()).collect()
    }

    /// Coefficients of the extraction of curve `e` pulled back to this model.
    pub fn pinned_coefficients(&self, e: usize, include_boundary: bool) -> Result<Vec<Q>> {
        let b = if include_boundary {
            self.boundary_degrees()
        } else {
            vec![Q::zero(); self.curves.len()]
        };
        pinned_coefficients(&self.intersection_form(), &self.canonical_degrees(), &b, e)
    }

    /// Kollár-component and potential-lc-place status of curve `e` for `X ∋ x`.
    pub fn kollar_status(&self, e: usize) -> Result<KollarStatus> {
        Ok(KollarStatus::from_pinned(&self.pinned_coefficients(e, false)?, e))
    }

    /// Whether curve `e` is a potential lc place of the pair `(X ∋ x, B)`:
    /// the extraction of `e` with the boundary, `K + E + sum c_i C_i + B`,
    /// must be lc, which is checked after resolving the boundary.
    pub fn pair_potential_lc_place(&self, e: usize) -> Result<bool> {
        let c = self.pinned_coefficients(e, true)?;
        if c.iter().any(|v| *v > Q::one()) {
            return Ok(false);
        }
        let mut t = self.clone();
        for (curve, v) in t.curves.iter_mut().zip(c) {
            curve.gamma = v;
        }
        let t = resolve::resolve_tower(t)?;
        Ok(t.curves.iter().all(|c| c.gamma <= Q::one()))
    }

    /// A point where the configuration of curves and boundary is not SNC.
    pub fn bad_point(&self) -> Option<Point> {
        if let Some(c) = self.curves.iter().position(|c| c.nodes > 0) {
            return Some(Point::Node { curve: c });
        }
        let mut at: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
        for (b, br) in self.branches.iter().enumerate() {
            at.entry(br.point).or_default().push(b);
        }
        for (p, bs) in at {
            let through = self.curves_through(p);
            let bad = bs.iter().any(|&b| self.branches[b].mult() > 1)
                || through.len() + bs.len() >= 3
                || bs
                    .iter()
                    .any(|&b| through.iter().any(|&(c, _)| self.branch_curve_intersection(b, c) > 1))
                || bs.iter().enumerate().any(|(k, &b1)| {
                    bs[k + 1..].iter().any(|&b2| self.branch_intersection(b1, b2) > 1)
                });
            if bad {
                return Some(p);
            }
        }
        None
    }

    /// klt/plt/dlt/lc read off an SNC model.
    ///
    /// On an SNC model, blowing up a meet of two coefficient-one curves gives
    /// another coefficient-one divisor and anything else raises log
    /// discrepancies, so the tests below are exact.
    pub fn pair_status(&self) -> Result<PairStatus> {
        if let Some(p) = self.bad_point() {
            return Err(Error::Unresolved(self.describe(p)));
        }
        let one = Q::one();
        let lc = self.curves.iter().all(|c| c.gamma <= one);
        let curves_below = self.curves.iter().all(|c| c.gamma < one);
        let klt = curves_below && self.branches.iter().all(|b| b.coeff < one);
        let reduced: Vec<&TrackedBranch> = self.branches.iter().filter(|b| b.coeff == one).collect();
        let reduced_meet = reduced
            .iter()
            .enumerate()
            .any(|(k, a)| reduced[k + 1..].iter().any(|b| a.point == b.point));
        let plt = curves_below && !reduced_meet;
        let log_smooth = self.smooth_base && self.base_log_smooth;
        Ok(PairStatus {
            klt,
            plt,
            dlt: plt || (log_smooth && lc),
            lc,
            log_smooth,
        })
    }

    /// Dual graph of the curves only.
    pub fn exceptional_graph(&self) -> WeightedDualGraph {
        let mut g = WeightedDualGraph::new();
        for c in &self.curves {
            g.add_vertex(Vertex::new(c.label.clone(), -c.self_int).with_genus(c.genus).with_nodes(c.nodes))
                .expect("distinct labels and negative self-intersections");
        }
        for m in &self.meets {
            g.bump_edge(m.a, m.b, 1);
        }
        g
    }

    /// Dual graph of the curves, plus boundary strict transforms as filled vertices.
    pub fn dual_graph(&self) -> WeightedDualGraph {
        let mut g = self.exceptional_graph();
        let n = self.curves.len();
        for b in &self.branches {
            g.add_vertex(Vertex::strict(b.label.clone())).expect("distinct labels");
        }
        for b in 0..self.branches.len() {
            for c in 0..n {
                g.bump_edge(n + b, c, self.branch_curve_intersection(b, c));
            }
            for b2 in (b + 1)..self.branches.len() {
                let m = u32::try_from(self.branch_intersection(b, b2)).unwrap_or(u32::MAX);
                g.bump_edge(n + b, n + b2, m);
            }
        }
        g
    }

    pub fn min_log_discrepancy(&self) -> Option<Q> {
        self.curves.iter().map(TowerCurve::log_discrepancy).min()
    }
}

impl fmt::Display for BlowupTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.steps.iter().map(|s| s.name.as_str()).collect();
        write!(f, "{}", names.join(" > "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrepancy::{AttachSite, BoundaryBranch};
    use crate::rational::q;

    fn kawakita() -> GermModel {
        let b = BoundaryBranch::new("D", q(2, 3), AttachSite::Origin).with_cluster(BranchCluster::cusp());
        GermModel::smooth(vec![b]).unwrap()
    }

    #[test]
    fn origin_blow_up_of_empty_germ() {
        let t = BlowupTower::new(&GermModel::smooth(vec![]).unwrap());
        let t = t.blow_up(Point::Origin).unwrap();
        assert_eq!(t.curve(0).log_discrepancy(), qi(2));
        assert_eq!(t.curve(0).self_int, -1);
        assert_eq!(t.exceptional_graph().intersection_matrix(), vec![vec![-1]]);
    }

    #[test]
    fn kawakita_first_two_steps() {
        let t = BlowupTower::new(&kawakita()).blow_up(Point::Origin).unwrap();
        assert_eq!(t.curve(0).log_discrepancy(), q(2, 3));
        let p = t.branches()[0].point;
        let t = t.blow_up(p).unwrap();
        assert_eq!(t.curve(1).log_discrepancy(), qi(1));
        assert_eq!(t.pullback_coefficients().unwrap(), t.ledger());
        // the cusp now passes through E1 ∩ E2
        assert!(matches!(t.branches()[0].point, Point::Meet(_)));
    }

    #[test]
    fn blowing_a_meet_builds_a_chain() {
        let g = WeightedDualGraph::from_parts(&[("F1", 2)], &[]).unwrap();
        let b = BoundaryBranch::new("C", q(1, 2), AttachSite::interior("F1"));
        let germ = GermModel::new(g, vec![b]).unwrap();
        let t = BlowupTower::new(&germ);
        let t = t.blow_up(t.branches()[0].point).unwrap();
        let meet = t.points_on(1).into_iter().find(|p| matches!(p, Point::Meet(_)) && t.curves_through(*p).iter().any(|&(c, _)| c == 0)).unwrap();
        let t = t.blow_up(meet).unwrap();
        let g = t.exceptional_graph();
        assert!(g.structure().is_chain);
        assert_eq!(g.chain_order().unwrap().len(), 3);
        assert_eq!(t.pullback_coefficients().unwrap(), t.ledger());
        assert_eq!(t.curve(0).self_int, -4);
    }

    #[test]
    fn rejects_missing_points() {
        let t = BlowupTower::new(&kawakita());
        assert!(t.blow_up(Point::Meet(0)).is_err());
        let t = t.blow_up(Point::Origin).unwrap();
        assert!(t.blow_up(Point::Origin).is_err());
        assert!(t.blow_up(Point::Node { curve: 0 }).is_err());
    }
}
