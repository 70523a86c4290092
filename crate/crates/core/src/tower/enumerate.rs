//! Divisors over a germ, reached by canonical towers.
//!
//! Every divisor over `x` is the last exceptional curve of a unique sequence
//! of blow-ups, each centred on the previous exceptional curve. Towers
//! through general points of the same curve are isomorphic, so at each step
//! only the combinatorially distinct points of the newest curve are tried.

use num_traits::{One, Zero};

use crate::discrepancy::GermModel;
use crate::dual_graph::WeightedDualGraph;
use crate::error::{Error, Result};
use crate::rational::{positive_part, Q};

use super::{BlowupTower, Point};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorOverGerm {
    /// The canonical tower; its last step creates the divisor, or it is the
    /// bare resolution when the divisor lives there.
    pub tower: BlowupTower,
    pub curve: usize,
    pub log_discrepancy: Q,
}

impl DivisorOverGerm {
    fn new(tower: BlowupTower, curve: usize) -> Self {
        let log_discrepancy = tower.curve(curve).log_discrepancy();
        DivisorOverGerm {
            tower,
            curve,
            log_discrepancy,
        }
    }

    /// Blow-ups above the minimal resolution (or the smooth germ).
    pub fn depth(&self) -> usize {
        self.tower.steps().len()
    }

    pub fn on_resolution(&self) -> bool {
        self.depth() == 0
    }

    /// A base vertex's id, or the path of blown-up points.
    pub fn name(&self) -> String {
        if self.on_resolution() {
            self.tower.curve(self.curve).label.clone()
        } else {
            self.tower.to_string()
        }
    }

    /// Dual graph of every curve contracted by the tower's composite.
    pub fn tower_graph(&self) -> WeightedDualGraph {
        self.tower.exceptional_graph()
    }
}

/// The divisor's own possible successors: points of its curve.
fn first_points(root: &BlowupTower) -> Vec<Point> {
    if root.curves().is_empty() {
        vec![Point::Origin]
    } else {
        root.configuration_points()
    }
}

/// Calls `visit` on every divisor whose canonical tower has at most
/// `max_depth` blow-ups, base curves first, then depth-first.
pub fn for_each_divisor(germ: &GermModel, max_depth: usize, mut visit: impl FnMut(&DivisorOverGerm)) -> Result<()> {
    let root = BlowupTower::new(germ);
    for c in 0..root.curves().len() {
        visit(&DivisorOverGerm::new(root.clone(), c));
    }
    fn walk(
        t: &BlowupTower,
        points: Vec<Point>,
        depth: usize,
        max_depth: usize,
        visit: &mut dyn FnMut(&DivisorOverGerm),
    ) -> Result<()> {
        if depth > max_depth {
            return Ok(());
        }
        for p in points {
            let child = t.blow_up(p)?;
            let e = child.last_curve().expect("just blown up");
            visit(&DivisorOverGerm::new(child.clone(), e));
            walk(&child, child.points_on(e), depth + 1, max_depth, visit)?;
        }
        Ok(())
    }
    walk(&root, first_points(&root), 1, max_depth, &mut visit)
}

pub fn enumerate_divisors(germ: &GermModel, max_depth: usize) -> Result<Vec<DivisorOverGerm>> {
    let mut out = Vec::new();
    for_each_divisor(germ, max_depth, |d| out.push(d.clone()))?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MldSearch {
    pub value: Q,
    /// Every divisor found with `a = value`, in visiting order.
    pub minimizers: Vec<DivisorOverGerm>,
    /// Some subtree was skipped by the intersection bound.
    pub pruned: bool,
    /// Every subtree beyond the depth limit was certified by the bound, so
    /// `value` is the true mld.
    pub complete: bool,
    pub visited: usize,
}

/// Lower bound, strict, on `a(F)` for every divisor `F` over `p`.
///
/// On the smooth model near `p`, split `Delta = Delta+ - Delta-`. For a curve
/// `C` through `p`, smooth there, with `gamma(C) <= 1`, write
/// `Delta+ = a C + B`. If `(B . C)_p < 1` then `a(F, Delta+) > 1 - a`, and
/// `a(F, Delta) = a(F, Delta+) + ord_F(Delta-)` where every curve through `p`
/// has order at least one along `F`.
pub(crate) fn intersection_bound(t: &BlowupTower, p: Point) -> Option<Q> {
    let one = Q::one();
    let through = t.curves_through(p);
    let here = t.branches_at(p);
    let mut best: Option<Q> = None;
    for &(c, m) in &through {
        if m != 1 || t.curve(c).gamma > one {
            continue;
        }
        let mut bc = through
            .iter()
            .filter(|&&(d, _)| d != c)
            .fold(Q::zero(), |acc, &(d, _)| acc + positive_part(&t.curve(d).gamma));
        for &b in &here {
            bc += &t.branches()[b].coeff * Q::from_integer(t.branch_curve_intersection(b, c).into());
        }
        if bc < one {
            let negative = through
                .iter()
                .filter(|&&(d, _)| d != c)
                .fold(Q::zero(), |acc, &(d, _)| acc + positive_part(&-&t.curve(d).gamma));
            let bound = &one - &t.curve(c).gamma + negative;
            if best.as_ref().is_none_or(|x| bound > *x) {
                best = Some(bound);
            }
        }
    }
    best
}

struct Search {
    best: Option<Q>,
    minimizers: Vec<DivisorOverGerm>,
    pruned: bool,
    complete: bool,
    visited: usize,
}

impl Search {
    fn consider(&mut self, d: DivisorOverGerm) {
        self.visited += 1;
        match &self.best {
            Some(b) if d.log_discrepancy > *b => {}
            Some(b) if d.log_discrepancy == *b => self.minimizers.push(d),
            _ => {
                self.best = Some(d.log_discrepancy.clone());
                self.minimizers = vec![d];
            }
        }
    }

    fn explore(&mut self, t: &BlowupTower, points: Vec<Point>, depth: usize, max_depth: usize) -> Result<()> {
        for p in points {
            if let (Some(bound), Some(best)) = (intersection_bound(t, p), &self.best) {
                if bound >= *best {
                    self.pruned = true;
                    continue;
                }
            }
            if depth > max_depth {
                self.complete = false;
                continue;
            }
            let child = t.blow_up(p)?;
            let e = child.last_curve().expect("just blown up");
            let next = child.points_on(e);
            self.consider(DivisorOverGerm::new(child.clone(), e));
            self.explore(&child, next, depth + 1, max_depth)?;
        }
        Ok(())
    }
}

/// Minimum log discrepancy over divisors with towers of at most `max_depth`
/// blow-ups, skipping subtrees that provably cannot reach the running minimum.
pub fn mld_bruteforce(germ: &GermModel, max_depth: usize) -> Result<MldSearch> {
    let root = BlowupTower::new(germ);
    if root.curves().is_empty() && max_depth == 0 {
        return Err(Error::InvalidArgument("a smooth germ needs depth at least 1".into()));
    }
    let mut s = Search {
        best: None,
        minimizers: Vec::new(),
        pruned: false,
        complete: true,
        visited: 0,
    };
    for c in 0..root.curves().len() {
        s.consider(DivisorOverGerm::new(root.clone(), c));
    }
    s.explore(&root, first_points(&root), 1, max_depth)?;
    Ok(MldSearch {
        value: s.best.expect("at least one divisor"),
        minimizers: s.minimizers,
        pruned: s.pruned,
        complete: s.complete,
        visited: s.visited,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrepancy::{AttachSite, BoundaryBranch};
    use crate::rational::{q, qi};
    use crate::tower::cluster::BranchCluster;

    #[test]
    fn empty_smooth_germ() {
        let g = GermModel::smooth(vec![]).unwrap();
        let one: Vec<Q> = enumerate_divisors(&g, 1).unwrap().into_iter().map(|d| d.log_discrepancy).collect();
        assert_eq!(one, vec![qi(2)]);
        let two: Vec<Q> = enumerate_divisors(&g, 2).unwrap().into_iter().map(|d| d.log_discrepancy).collect();
        assert_eq!(two, vec![qi(2), qi(3)]);
        let s = mld_bruteforce(&g, 5).unwrap();
        assert_eq!(s.value, qi(2));
        assert_eq!(s.minimizers.len(), 1);
        assert!(s.complete && s.pruned);
    }

    #[test]
    fn kawakita_minimum() {
        let b = BoundaryBranch::new("D", q(2, 3), AttachSite::Origin).with_cluster(BranchCluster::cusp());
        let g = GermModel::smooth(vec![b]).unwrap();
        let s = mld_bruteforce(&g, 4).unwrap();
        assert_eq!(s.value, q(2, 3));
        assert_eq!(s.minimizers.len(), 1);
        assert_eq!(s.minimizers[0].depth(), 1);
        assert!(s.complete);
    }

    #[test]
    fn pruned_search_agrees_with_full_enumeration() {
        let b = BoundaryBranch::new("D", q(5, 6), AttachSite::Origin).with_cluster(BranchCluster::cusp());
        let g = GermModel::smooth(vec![b]).unwrap();
        let all = enumerate_divisors(&g, 4).unwrap();
        let min = all.iter().map(|d| d.log_discrepancy.clone()).min().unwrap();
        let s = mld_bruteforce(&g, 4).unwrap();
        assert_eq!(s.value, min);
        let count = all.iter().filter(|d| d.log_discrepancy == min).count();
        assert_eq!(s.minimizers.len(), count);
    }
}
