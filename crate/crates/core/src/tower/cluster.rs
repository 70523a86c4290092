//! Infinitely near points of one analytic curve branch.
//!
//! A cluster lists the points `P_0, P_1, ...` the branch passes through,
//! each with the branch's multiplicity there. `P_{i+1}` always lies on the
//! exceptional curve `E_i` of blowing up `P_i`; its position records whether
//! it is a free point of `E_i` or a satellite point, i.e. also lies on the
//! strict transform of an older curve through `P_i`. Beyond the last listed
//! point the branch is smooth and meets everything transversally.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Position {
    /// `P_0`, the attachment point.
    Root,
    /// A free point of the newest exceptional curve. Branches sharing a label
    /// at the same moment pass through the same point.
    Free(Option<String>),
    /// Also on the strict transform of the exceptional curve of `P_j`.
    OnExceptional(usize),
    /// Also on the strict transform of a named base curve.
    OnCurve(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClusterPoint {
    pub mult: u32,
    pub position: Position,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BranchCluster {
    points: Vec<ClusterPoint>,
}

impl Default for BranchCluster {
    fn default() -> Self {
        BranchCluster::smooth()
    }
}

impl BranchCluster {
    /// A smooth branch transverse to everything at its attachment point.
    pub fn smooth() -> Self {
        BranchCluster {
            points: vec![ClusterPoint {
                mult: 1,
                position: Position::Root,
            }],
        }
    }

    /// The ordinary cusp `x^2 = y^3`: `[2, 1, 1]` with the third point on
    /// the first exceptional curve.
    pub fn cusp() -> Self {
        BranchCluster::from_positions(vec![
            Position::Root,
            Position::Free(None),
            Position::OnExceptional(0),
        ])
        .expect("cusp positions are consistent")
    }

    /// A smooth branch tangent to order `order` to the base curve `curve`.
    pub fn tangent_to(curve: &str, order: usize) -> Self {
        let mut positions = vec![Position::Root];
        positions.extend((0..order).map(|_| Position::OnCurve(curve.to_string())));
        BranchCluster::from_positions(positions).expect("tangent positions are consistent")
    }

    pub fn new(points: Vec<ClusterPoint>) -> Result<Self> {
        let c = BranchCluster { points };
        c.check_shape()?;
        c.check_proximity_equality()?;
        Ok(c)
    }

    /// Builds the unique cluster of a single branch with the given point
    /// positions, solving the proximity equalities for the multiplicities.
    pub fn from_positions(positions: Vec<Position>) -> Result<Self> {
        let n = positions.len();
        let mut points: Vec<ClusterPoint> = positions
            .into_iter()
            .map(|position| ClusterPoint { mult: 0, position })
            .collect();
        let shape = BranchCluster {
            points: points.clone(),
        };
        shape.check_positions()?;
        for j in (0..n).rev() {
            let mut m: u32 = if j + 1 == n { 1 } else { 0 };
            for (i, p) in points.iter().enumerate().skip(j + 1) {
                if shape.is_proximate(i, j) {
                    m = m
                        .checked_add(p.mult)
                        .ok_or_else(|| Error::InvalidCluster("multiplicity overflow".into()))?;
                }
            }
            points[j].mult = m;
        }
        BranchCluster::new(points)
    }

    pub fn points(&self) -> &[ClusterPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Multiplicity at `P_0`.
    pub fn multiplicity(&self) -> u32 {
        self.points[0].mult
    }

    /// Multiplicity at point `i`; points past the end are smooth.
    pub fn mult_at(&self, i: usize) -> u32 {
        self.points.get(i).map_or(1, |p| p.mult)
    }

    pub fn position_at(&self, i: usize) -> Option<&Position> {
        self.points.get(i).map(|p| &p.position)
    }

    /// `P_i` is proximate to `P_j` when it lies on the strict transform of `E_j`.
    pub fn is_proximate(&self, i: usize, j: usize) -> bool {
        if i == j + 1 {
            return true;
        }
        matches!(self.points.get(i), Some(ClusterPoint { position: Position::OnExceptional(k), .. }) if *k == j)
    }

    fn check_shape(&self) -> Result<()> {
        if self.points.is_empty() {
            return Err(Error::InvalidCluster("empty cluster".into()));
        }
        if let Some(i) = self.points.iter().position(|p| p.mult == 0) {
            return Err(Error::InvalidCluster(format!("point {i} has multiplicity 0")));
        }
        self.check_positions()
    }

    fn check_positions(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCluster(msg));
        for (i, p) in self.points.iter().enumerate() {
            match (&p.position, i) {
                (Position::Root, 0) => {}
                (Position::Root, _) => return bad(format!("point {i} cannot be a root")),
                (_, 0) => return bad("first point must be the root".into()),
                (Position::Free(_), _) => {}
                (Position::OnExceptional(j), _) => {
                    if j + 1 >= i {
                        return bad(format!(
                            "point {i} cannot be proximate to point {j}: it must be at least two steps older"
                        ));
                    }
                    let prev_on = i - 1 == j + 1
                        || self.points[i - 1].position == Position::OnExceptional(*j);
                    if !prev_on {
                        return bad(format!(
                            "point {i} lies on the exceptional curve of point {j}, but point {} does not",
                            i - 1
                        ));
                    }
                }
                (Position::OnCurve(c), _) => {
                    if c.is_empty() {
                        return bad(format!("point {i} names an empty curve"));
                    }
                    let prev_on = i == 1
                        || self.points[i - 1].position == Position::OnCurve(c.clone());
                    if !prev_on {
                        return bad(format!(
                            "point {i} lies on `{c}`, but point {} does not",
                            i - 1
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `m_j = sum of m_i over points proximate to P_j`, counting the smooth
    /// transverse continuation after the last point.
    fn check_proximity_equality(&self) -> Result<()> {
        let n = self.points.len();
        for j in 0..n {
            let mut sum: u64 = if j + 1 == n { 1 } else { 0 };
            for i in (j + 1)..n {
                if self.is_proximate(i, j) {
                    sum += u64::from(self.points[i].mult);
                }
            }
            if sum != u64::from(self.points[j].mult) {
                return Err(Error::InvalidCluster(format!(
                    "proximity equality fails at point {j}: multiplicity {} but proximate points sum to {sum}",
                    self.points[j].mult
                )));
            }
        }
        Ok(())
    }

    /// Base curves named by satellite positions, which must pass through `P_0`.
    pub fn base_curves(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self
            .points
            .iter()
            .filter_map(|p| match &p.position {
                Position::OnCurve(c) => Some(c.as_str()),
                _ => None,
            })
            .collect();
        out.dedup();
        out
    }

    /// Noether's formula against a smooth base curve: the sum of the
    /// branch's multiplicities over the consecutive points it shares with
    /// the curve. `through_root` says whether the curve passes through `P_0`.
    pub fn intersection_with_curve(&self, curve: &str, through_root: bool) -> u32 {
        if !through_root {
            return 0;
        }
        let mut total = self.points[0].mult;
        for p in &self.points[1..] {
            match &p.position {
                Position::OnCurve(c) if c == curve => total += p.mult,
                _ => break,
            }
        }
        total
    }

    /// Number of leading points shared with `other`, both rooted at the same
    /// point. Unlabelled free points are never shared.
    pub fn common_prefix(&self, other: &BranchCluster) -> usize {
        let mut k = 1;
        while k < self.len() && k < other.len() {
            let same = match (&self.points[k].position, &other.points[k].position) {
                (Position::Free(Some(a)), Position::Free(Some(b))) => a == b,
                (Position::Free(None), _) | (_, Position::Free(None)) => false,
                (a, b) => a == b,
            };
            if !same {
                break;
            }
            k += 1;
        }
        k
    }

    /// Local intersection number of two distinct branches through the same
    /// point: `sum mult_p(C) * mult_p(D)` over shared infinitely near points.
    pub fn local_intersection(&self, other: &BranchCluster) -> u64 {
        (0..self.common_prefix(other))
            .map(|i| u64::from(self.points[i].mult) * u64::from(other.points[i].mult))
            .sum()
    }

    /// Parses the comma-separated text form, e.g. `2,1,1^0` or `1,1@F2`.
    ///
    /// Tokens after the first: `m` (free, general), `m~label` (free, shared),
    /// `m^j` (on the exceptional curve of point `j`), `m@curve`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidCluster(msg);
        let mut points = Vec::new();
        for (i, token) in text.split(',').enumerate() {
            let token = token.trim();
            let split = token.find(['~', '^', '@']).unwrap_or(token.len());
            let (mult_text, rest) = token.split_at(split);
            if mult_text.is_empty() || mult_text.len() > 6 || !mult_text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad(format!("bad multiplicity in `{token}`")));
            }
            let mult: u32 = mult_text
                .parse()
                .map_err(|_| bad(format!("bad multiplicity in `{token}`")))?;
            let position = if i == 0 {
                if !rest.is_empty() {
                    return Err(bad("the first point takes no position".into()));
                }
                Position::Root
            } else if rest.is_empty() {
                Position::Free(None)
            } else {
                let (sigil, arg) = rest.split_at(1);
                if !is_identifier(arg) {
                    return Err(bad(format!("bad position argument in `{token}`")));
                }
                match sigil {
                    "~" => Position::Free(Some(arg.to_string())),
                    "@" => Position::OnCurve(arg.to_string()),
                    _ => {
                        if arg.len() > 6 || !arg.bytes().all(|b| b.is_ascii_digit()) {
                            return Err(bad(format!("bad point index in `{token}`")));
                        }
                        Position::OnExceptional(arg.parse().map_err(|_| bad(format!("bad point index in `{token}`")))?)
                    }
                }
            };
            points.push(ClusterPoint { mult, position });
        }
        BranchCluster::new(points)
    }

    /// Relabels shared free-point labels; used when splicing germs.
    pub fn rename_labels(&self, map: &BTreeMap<String, String>) -> BranchCluster {
        let points = self
            .points
            .iter()
            .map(|p| ClusterPoint {
                mult: p.mult,
                position: match &p.position {
                    Position::Free(Some(l)) => Position::Free(Some(map.get(l).cloned().unwrap_or_else(|| l.clone()))),
                    other => other.clone(),
                },
            })
            .collect();
        BranchCluster { points }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    !s.is_empty()
        && s.len() <= 64
        && s.bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'\'' || b == b'.')
}

impl fmt::Display for BranchCluster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p.mult)?;
            match &p.position {
                Position::Root | Position::Free(None) => {}
                Position::Free(Some(l)) => write!(f, "~{l}")?,
                Position::OnExceptional(j) => write!(f, "^{j}")?,
                Position::OnCurve(c) => write!(f, "@{c}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cusp_multiplicities() {
        let c = BranchCluster::cusp();
        let m: Vec<u32> = c.points().iter().map(|p| p.mult).collect();
        assert_eq!(m, vec![2, 1, 1]);
        assert_eq!(c.to_string(), "2,1,1^0");
        assert_eq!(BranchCluster::parse("2,1,1^0").unwrap(), c);
    }

    #[test]
    fn transverse_smooth_branches_meet_once() {
        let a = BranchCluster::smooth();
        assert_eq!(a.local_intersection(&BranchCluster::smooth()), 1);
    }

    #[test]
    fn cusp_against_tangent_line() {
        // cusp x^2 = y^3 and the line x = 0 share P_0 and the free point P_1
        let cusp = BranchCluster::parse("2,1~t,1^0").unwrap();
        let line = BranchCluster::parse("1,1~t").unwrap();
        assert_eq!(cusp.local_intersection(&line), 3);
    }

    #[test]
    fn cusp_against_transverse_line() {
        assert_eq!(BranchCluster::cusp().local_intersection(&BranchCluster::smooth()), 2);
    }

    #[test]
    fn unlabelled_free_points_are_distinct() {
        let a = BranchCluster::parse("1,1").unwrap();
        assert_eq!(a.local_intersection(&a.clone()), 1);
    }

    #[test]
    fn tangency_to_base_curve() {
        let c = BranchCluster::tangent_to("F1", 2);
        assert_eq!(c.to_string(), "1,1@F1,1@F1");
        assert_eq!(c.intersection_with_curve("F1", true), 3);
        assert_eq!(c.intersection_with_curve("F2", true), 1);
        assert_eq!(c.intersection_with_curve("F1", false), 0);
    }

    #[test]
    fn rejects_broken_proximity() {
        assert!(BranchCluster::parse("2").is_err());
        assert!(BranchCluster::parse("2,1,1").is_err());
        assert!(BranchCluster::parse("1,1^0").is_err());
        assert!(BranchCluster::parse("3,1,1^0").is_err());
        assert!(BranchCluster::parse("1,1,1@F").is_err());
        assert!(BranchCluster::parse("0").is_err());
        assert!(BranchCluster::parse("1~a").is_err());
        assert!(BranchCluster::parse("").is_err());
    }

    #[test]
    fn from_positions_higher_cusp() {
        // x^2 = y^5: P_2 and P_3 are both proximate to P_1
        let c = BranchCluster::from_positions(vec![
            Position::Root,
            Position::Free(None),
            Position::Free(None),
            Position::OnExceptional(1),
        ])
        .unwrap();
        let m: Vec<u32> = c.points().iter().map(|p| p.mult).collect();
        assert_eq!(m, vec![2, 2, 1, 1]);
        let e = BranchCluster::from_positions(vec![
            Position::Root,
            Position::OnExceptional(0),
        ]);
        assert!(e.is_err());
    }
}
