//! Divisors computing the mld of an lc surface germ, checked clause by
//! clause against the classification theorem.
//!
//! Every member of the computing set gets its Kollár and potential-lc-place
//! flags from the pinned extraction system; the theorem's clause for the
//! germ then states what those flags must be.

use std::fmt;

use num_traits::Zero;

use crate::discrepancy::{GermModel, PairClass, PairStatus};
use crate::dual_graph::{ClassTag, SingularityClass};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};
use crate::tower::{mld_bruteforce, DivisorOverGerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DltKind {
    Plt,
    LogSmoothDlt,
    NotDlt,
}

impl fmt::Display for DltKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DltKind::Plt => "plt",
            DltKind::LogSmoothDlt => "log-smooth-dlt",
            DltKind::NotDlt => "not-dlt",
        })
    }
}

/// A dlt pair is plt or log smooth; anything else lc is not dlt.
pub fn dlt_kind(germ: &GermModel) -> Result<DltKind> {
    let s = germ.pair_status()?;
    if !s.lc {
        return Err(Error::NotLc);
    }
    Ok(if s.plt {
        DltKind::Plt
    } else if s.dlt {
        DltKind::LogSmoothDlt
    } else {
        DltKind::NotDlt
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// dlt, smooth or A-type.
    SmoothOrA,
    /// dlt with a fork, and `B != 0` or not Du Val.
    ForkGeneral,
    /// dlt Du Val D or E with `B = 0`.
    ForkDuVal,
    /// klt germ, pair not dlt.
    NotDlt,
    /// germ not klt.
    NotKlt,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::SmoothOrA => "1.a",
            Case::ForkGeneral => "1.b.iii",
            Case::ForkDuVal => "1.b.iv",
            Case::NotDlt => "2",
            Case::NotKlt => "3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub name: String,
    /// Vertex of the minimal resolution, when the divisor lives there.
    pub vertex: Option<usize>,
    pub depth: usize,
    pub log_discrepancy: Q,
    pub is_kollar: bool,
    pub is_potential_lc_place: bool,
    /// Potential lc place of the pair `(X ∋ x, B)`; only defined for klt `X`.
    pub pair_potential_lc_place: Option<bool>,
    /// `K + E` is plt near `E` on the extraction.
    pub plt_extraction: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseCheck {
    pub clause: String,
    pub holds: bool,
    /// The divisor contradicting the clause, if one does.
    pub divisor: Option<String>,
    pub declared: bool,
    pub computed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub case: Case,
    pub class: SingularityClass,
    pub pair: PairClass,
    pub dlt_kind: DltKind,
    pub germ_klt: bool,
    pub mld: Q,
    pub depth: usize,
    /// The search certified every subtree beyond the depth limit.
    pub complete: bool,
    pub pruned: bool,
    pub members: Vec<Member>,
    pub checks: Vec<ClauseCheck>,
}

impl ClassificationReport {
    pub fn consistent(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn kollar_set(&self) -> Vec<&str> {
        self.members
            .iter()
            .filter(|m| m.is_kollar)
            .map(|m| m.name.as_str())
            .collect()
    }

    pub fn plc_set(&self) -> Vec<&str> {
        self.members
            .iter()
            .filter(|m| m.is_potential_lc_place)
            .map(|m| m.name.as_str())
            .collect()
    }

    pub fn member_names(&self) -> Vec<&str> {
        self.members.iter().map(|m| m.name.as_str()).collect()
    }

    /// `key: value` lines in a fixed order.
    pub fn to_text(&self) -> String {
        let b = |v: bool| if v { "true" } else { "false" };
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k}: {v}\n"));
        line("case", self.case.to_string());
        line("class", self.class.tag.to_string());
        line("du_val", b(self.class.du_val).into());
        line("germ_klt", b(self.germ_klt).into());
        line("pair", self.pair.to_string());
        line("dlt_kind", self.dlt_kind.to_string());
        line("mld", fmt_q(&self.mld));
        line("depth", self.depth.to_string());
        line("search_complete", b(self.complete).into());
        line("search_pruned", b(self.pruned).into());
        // With mld 0 the lc places can be infinite in number.
        if self.mld.is_zero() || matches!(self.case, Case::NotDlt | Case::NotKlt) {
            line("computing_set", "lc places found within depth".into());
        } else if self.complete {
            line("computing_set", "complete".into());
        } else {
            line("computing_set", "found within depth".into());
        }
        line("members", self.members.len().to_string());
        for m in &self.members {
            let pair = match m.pair_potential_lc_place {
                Some(v) => b(v),
                None => "n/a",
            };
            line(
                "member",
                format!(
                    "{} depth={} a={} kollar={} plc={} pair_plc={} plt_extraction={}",
                    m.name,
                    m.depth,
                    fmt_q(&m.log_discrepancy),
                    b(m.is_kollar),
                    b(m.is_potential_lc_place),
                    pair,
                    b(m.plt_extraction)
                ),
            );
        }
        line("kollar_set", self.kollar_set().join(","));
        line("plc_set", self.plc_set().join(","));
        for c in &self.checks {
            let mut v = format!("{} {}", c.clause, if c.holds { "pass" } else { "fail" });
            if let Some(d) = &c.divisor {
                v.push_str(&format!(" divisor={d} declared={} computed={}", b(c.declared), b(c.computed)));
            }
            line("check", v);
        }
        line("consistent", b(self.consistent()).into());
        out
    }
}

fn member(germ: &GermModel, d: &DivisorOverGerm, germ_klt: bool) -> Result<Member> {
    let vertex = d.on_resolution().then_some(d.curve);
    let pinned = d.tower.pinned_coefficients(d.curve, false)?;
    let smooth_curve = d.tower.curve(d.curve).nodes == 0;
    let plt_extraction = smooth_curve
        && pinned
            .iter()
            .enumerate()
            .all(|(i, c)| i == d.curve || *c < Q::from_integer(1.into()));
    let (is_kollar, is_potential_lc_place, pair_potential_lc_place) = if germ_klt {
        let status = match vertex {
            Some(v) => germ.kollar_component_status(v)?,
            None => d.tower.kollar_status(d.curve)?,
        };
        let pair = d.tower.pair_potential_lc_place(d.curve)?;
        (status.is_kollar, status.is_potential_lc_place, Some(pair))
    } else {
        // Kollár components are only defined over klt germs; an lc place
        // is a potential lc place with `G = B`.
        (false, d.log_discrepancy.is_zero(), None)
    };
    Ok(Member {
        name: d.name(),
        vertex,
        depth: d.depth(),
        log_discrepancy: d.log_discrepancy.clone(),
        is_kollar,
        is_potential_lc_place,
        pair_potential_lc_place,
        plt_extraction,
    })
}

struct Checks(Vec<ClauseCheck>);

impl Checks {
    /// Clause holds when `computed(m) == declared(m)` for every member.
    fn each(&mut self, clause: &str, members: &[Member], declared: impl Fn(&Member) -> bool, computed: impl Fn(&Member) -> bool) {
        let bad = members.iter().find(|m| declared(m) != computed(m));
        self.0.push(ClauseCheck {
            clause: clause.to_string(),
            holds: bad.is_none(),
            divisor: bad.map(|m| m.name.clone()),
            declared: bad.is_none_or(&declared),
            computed: bad.is_none_or(&computed),
        });
    }

    fn fact(&mut self, clause: &str, holds: bool, divisor: Option<String>) {
        self.0.push(ClauseCheck {
            clause: clause.to_string(),
            holds,
            divisor: if holds { None } else { divisor },
            declared: true,
            computed: holds,
        });
    }
}

/// The unique fork of a D/E-type (or other klt star-shaped) resolution graph.
fn fork_of(germ: &GermModel) -> Option<usize> {
    let s = germ.graph().structure();
    match (s.forks.as_slice(), s.branches.len()) {
        ([f], 3) => Some(*f),
        _ => None,
    }
}

/// Du Val D: `F` is a potential lc place iff it is the fork or the two
/// branches not containing it both have length one.
fn d_type_declared_plc(germ: &GermModel, fork: usize, v: usize) -> bool {
    if v == fork {
        return true;
    }
    let s = germ.graph().structure();
    s.branches.iter().filter(|b| !b.contains(v)).all(|b| b.len() == 1)
}

pub fn classify(germ: &GermModel, depth: usize) -> Result<ClassificationReport> {
    let status: PairStatus = germ.pair_status()?;
    if !status.lc {
        return Err(Error::NotLc);
    }
    let germ_klt = germ.is_klt_germ();
    let class = germ.graph().classify();
    let search = mld_bruteforce(germ, depth)?;
    let members = search
        .minimizers
        .iter()
        .map(|d| member(germ, d, germ_klt))
        .collect::<Result<Vec<_>>>()?;
    let fork = fork_of(germ);
    let b_zero = germ.boundary().is_empty();
    let case = if !germ_klt {
        Case::NotKlt
    } else if !status.dlt {
        Case::NotDlt
    } else if let (Some(_), false) = (fork, matches!(class.tag, ClassTag::A(_) | ClassTag::Smooth)) {
        if b_zero && class.du_val {
            Case::ForkDuVal
        } else {
            Case::ForkGeneral
        }
    } else {
        Case::SmoothOrA
    };

    let mut checks = Checks(Vec::new());
    checks.fact("nonempty", !members.is_empty(), None);
    match case {
        Case::SmoothOrA => {
            checks.each("1.a", &members, |_| true, |m| m.is_kollar);
        }
        Case::ForkGeneral | Case::ForkDuVal => {
            let fork = fork.expect("fork case");
            let fork_name = germ.graph().vertex(fork).id.clone();
            let has_fork = members.iter().any(|m| m.vertex == Some(fork));
            checks.fact("1.b.i", has_fork, Some(fork_name));
            checks.each("1.b.i.kollar", &members, |m| m.vertex == Some(fork), |m| m.is_kollar);
            checks.each("1.b.ii", &members, |_| true, |m| m.vertex.is_some());
            if case == Case::ForkGeneral {
                checks.each("1.b.iii.A", &members, |_| true, |m| m.is_potential_lc_place);
                if !matches!(class.tag, ClassTag::D(_)) {
                    checks.each("1.b.iii.B", &members, |m| m.vertex == Some(fork), |_| true);
                }
            } else {
                let missing = (0..germ.graph().len()).find(|&v| !members.iter().any(|m| m.vertex == Some(v)));
                checks.fact(
                    "1.b.iv.A",
                    missing.is_none() && members.len() == germ.graph().len(),
                    missing.map(|v| germ.graph().vertex(v).id.clone()),
                );
                if matches!(class.tag, ClassTag::D(_)) {
                    checks.each(
                        "1.b.iv.B",
                        &members,
                        |m| m.vertex.is_some_and(|v| d_type_declared_plc(germ, fork, v)),
                        |m| m.is_potential_lc_place,
                    );
                } else {
                    checks.each("1.b.iv.C", &members, |m| m.vertex == Some(fork), |m| m.is_potential_lc_place);
                }
            }
        }
        Case::NotDlt => {
            checks.fact("2.mld", search.value.is_zero(), None);
            checks.each("2.lc_place", &members, |_| true, |m| m.log_discrepancy.is_zero());
            checks.each("2.a", &members, |_| true, |m| m.is_potential_lc_place);
            checks.fact("2.b", members.iter().any(|m| m.is_kollar), None);
            if germ.is_smooth() {
                checks.each("2.c", &members, |_| true, |m| m.is_kollar);
            }
        }
        Case::NotKlt => {
            checks.fact("3.mld", search.value.is_zero(), None);
            checks.each("3", &members, |_| true, |m| m.is_potential_lc_place);
            match class.tag {
                ClassTag::B | ClassTag::C | ClassTag::F | ClassTag::H(_) => {
                    let plt = matches!(class.tag, ClassTag::B | ClassTag::H(5));
                    checks.each("3.plt", &members, |_| plt, |m| m.plt_extraction);
                }
                _ => {}
            }
        }
    }

    Ok(ClassificationReport {
        case,
        class,
        pair: status.class(),
        dlt_kind: dlt_kind(germ)?,
        germ_klt,
        mld: search.value,
        depth,
        complete: search.complete,
        pruned: search.pruned,
        members,
        checks: checks.0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail {
        clause: String,
        divisor: Option<String>,
        declared: bool,
        computed: bool,
    },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        *self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail {
                clause,
                divisor,
                declared,
                computed,
            } => {
                write!(f, "fail: clause {clause}")?;
                if let Some(d) = divisor {
                    write!(f, " at {d}")?;
                }
                write!(f, " (theorem says {declared}, computed {computed})")
            }
        }
    }
}

pub fn verify_theorem(germ: &GermModel, depth: usize) -> Result<Verdict> {
    let report = classify(germ, depth)?;
    Ok(match report.checks.into_iter().find(|c| !c.holds) {
        None => Verdict::Pass,
        Some(c) => Verdict::Fail {
            clause: c.clause,
            divisor: c.divisor,
            declared: c.declared,
            computed: c.computed,
        },
    })
}
