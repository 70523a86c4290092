//! Blow-up scripts: one point per line, applied in order to a germ's tower.
//!
//! ```text
//! origin          # the point of a smooth germ
//! branch D        # wherever branch D currently passes
//! meet E1 E2      # the intersection of two curves
//! meet F1 E1 2    # the second one, when they meet twice
//! free E2         # a general point of a curve
//! node C          # the node of a nodal curve
//! ```

use crate::error::{Error, Result};
use crate::tower::cluster::is_identifier;
use crate::tower::{BlowupTower, Point};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScriptStep {
    Origin,
    /// Two curves and which of their intersection points, from 1.
    Meet(String, String, usize),
    Free(String),
    Branch(String),
    Node(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    /// Each step with its source line.
    pub steps: Vec<(usize, ScriptStep)>,
}

impl Script {
    pub fn parse(text: &str) -> Result<Script> {
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let n = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            if let Some(bad) = words[1..].iter().find(|w| !is_identifier(w)) {
                return Err(Error::parse(n, format!("bad curve or branch name `{bad}`")));
            }
            let step = match words.as_slice() {
                ["origin"] => ScriptStep::Origin,
                ["meet", a, b] => ScriptStep::Meet(a.to_string(), b.to_string(), 1),
                ["meet", a, b, k] => match k.parse::<usize>() {
                    Ok(k) if k >= 1 => ScriptStep::Meet(a.to_string(), b.to_string(), k),
                    _ => return Err(Error::parse(n, format!("bad intersection index `{k}`"))),
                },
                ["free", c] => ScriptStep::Free(c.to_string()),
                ["branch", b] => ScriptStep::Branch(b.to_string()),
                ["node", c] => ScriptStep::Node(c.to_string()),
                _ => return Err(Error::parse(n, format!("cannot read `{line}`"))),
            };
            steps.push((n, step));
        }
        Ok(Script { steps })
    }

    /// Runs the script, reporting the first failing line.
    pub fn apply(&self, tower: &BlowupTower) -> Result<BlowupTower> {
        let mut t = tower.clone();
        for (n, step) in &self.steps {
            let p = locate(&t, step).map_err(|e| Error::parse(*n, e.to_string()))?;
            t = t.blow_up(p).map_err(|e| Error::parse(*n, e.to_string()))?;
        }
        Ok(t)
    }
}

/// The script line that blows up `p` on `t`, when `p` has a name.
pub fn line_for(t: &BlowupTower, p: Point) -> Option<String> {
    match p {
        Point::Origin => Some("origin".into()),
        Point::Node { curve } => Some(format!("node {}", t.curve(curve).label)),
        Point::Meet(id) => match (t.curves_through(p).as_slice(), t.meet_ordinal(id)) {
            ([(a, _), (b, _)], Some((k, n))) => {
                let mut line = format!("meet {} {}", t.curve(*a).label, t.curve(*b).label);
                if n > 1 {
                    line.push_str(&format!(" {k}"));
                }
                Some(line)
            }
            _ => None,
        },
        Point::Free { curve, .. } => match t.branches_at(p).first() {
            Some(&b) => Some(format!("branch {}", t.branches()[b].label)),
            None if p == t.general_point(curve) => Some(format!("free {}", t.curve(curve).label)),
            None => None,
        },
    }
}

fn curve(t: &BlowupTower, label: &str) -> Result<usize> {
    t.curve_by_label(label)
        .ok_or_else(|| Error::NoSuchPoint(format!("no curve `{label}`")))
}

fn locate(t: &BlowupTower, step: &ScriptStep) -> Result<Point> {
    match step {
        ScriptStep::Origin => Ok(Point::Origin),
        ScriptStep::Free(c) => Ok(t.general_point(curve(t, c)?)),
        ScriptStep::Node(c) => Ok(Point::Node { curve: curve(t, c)? }),
        ScriptStep::Branch(b) => t
            .branches()
            .iter()
            .find(|x| x.label == *b)
            .map(|x| x.point)
            .ok_or_else(|| Error::NoSuchPoint(format!("no branch `{b}`"))),
        ScriptStep::Meet(a, b, k) => {
            let (i, j) = (curve(t, a)?, curve(t, b)?);
            t.points_on(i)
                .into_iter()
                .filter(|&p| matches!(p, Point::Meet(_)) && t.curves_through(p).iter().any(|&(c, _)| c == j))
                .nth(k - 1)
                .ok_or_else(|| Error::NoSuchPoint(format!("`{a}` and `{b}` do not meet {k} times")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrepancy::{AttachSite, BoundaryBranch, GermModel};
    use crate::rational::{q, qi};
    use crate::tower::cluster::BranchCluster;

    #[test]
    fn cusp_script() {
        let b = BoundaryBranch::new("D", q(2, 3), AttachSite::Origin).with_cluster(BranchCluster::cusp());
        let t = BlowupTower::new(&GermModel::smooth(vec![b]).unwrap());
        let s = Script::parse("origin\nbranch D  # tangent point\nbranch D\n").unwrap();
        let t = s.apply(&t).unwrap();
        let a: Vec<_> = t.curves().iter().map(|c| c.log_discrepancy()).collect();
        assert_eq!(a, vec![q(2, 3), qi(1), qi(1)]);
        assert_eq!(t.to_string(), "o > E1@D > E1*E2");
    }

    #[test]
    fn lines_replay() {
        let b = BoundaryBranch::new("D", q(2, 3), AttachSite::Origin).with_cluster(BranchCluster::cusp());
        let base = BlowupTower::new(&GermModel::smooth(vec![b]).unwrap());
        let mut t = base.clone();
        let mut text = String::new();
        for _ in 0..3 {
            let p = t.branches()[0].point;
            let p = if t.steps().is_empty() { Point::Origin } else { p };
            text.push_str(&line_for(&t, p).unwrap());
            text.push('\n');
            t = t.blow_up(p).unwrap();
        }
        let mid = t.curve_by_label("E2").unwrap();
        text.push_str(&line_for(&t, t.general_point(mid)).unwrap());
        t = t.blow_up(t.general_point(mid)).unwrap();
        assert_eq!(Script::parse(&text).unwrap().apply(&base).unwrap(), t);
    }

    #[test]
    fn reports_the_failing_line() {
        let t = BlowupTower::new(&GermModel::smooth(vec![]).unwrap());
        let s = Script::parse("origin\n\nmeet E1 E2\n").unwrap();
        assert!(matches!(s.apply(&t), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(Script::parse("explode"), Err(Error::Parse { line: 1, .. })));
    }
}
