//! Seeded random germs, clusters and towers, and the property suites run by
//! `mldsurf verify`.
//!
//! Every case draws from its own generator, seeded by the suite seed, the
//! property name and the case index, so a run is reproducible case by case
//! and independent of thread scheduling. A failing case carries the germ in
//! spec form and, when a tower is involved, the blow-up script.

use std::fmt;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::catalog;
use crate::classifier::{verify_theorem, Verdict};
use crate::discrepancy::{AttachSite, BoundaryBranch, GermModel};
use crate::dual_graph::WeightedDualGraph;
use crate::germfile::GermSpec;
use crate::rational::{fmt_q, q, Q};
use crate::script::line_for;
use crate::tower::cluster::{BranchCluster, Position};
use crate::tower::{for_each_divisor, mld_bruteforce, BlowupTower};

/// Random source for one case.
pub struct Gen {
    rng: ChaCha8Rng,
    labels: u32,
}

fn mix(seed: u64, salt: &str, case: usize) -> u64 {
    // FNV-1a over the salt, folded with the seed and case index.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in salt.bytes() {
        h = (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (case as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9)
}

impl Gen {
    pub fn new(seed: u64, salt: &str, case: usize) -> Gen {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(mix(seed, salt, case)),
            labels: 0,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn fresh(&mut self) -> String {
        self.labels += 1;
        format!("t{}", self.labels)
    }

    /// A coefficient in `(0, 1]` with a small denominator.
    pub fn coefficient(&mut self) -> Q {
        let d = *[1i64, 2, 3, 4, 5, 6, 12].choose(&mut self.rng).expect("nonempty");
        let n = self.rng.gen_range(1..=d);
        q(n, d)
    }

    /// Extends a position list to `len` points with random legal positions.
    fn extend(&mut self, pos: &mut Vec<Position>, len: usize, site_curves: &[String]) {
        if pos.is_empty() {
            pos.push(Position::Root);
        }
        while pos.len() < len {
            let i = pos.len();
            let mut options = vec![Position::Free(Some(self.fresh())), Position::Free(None)];
            if i >= 2 {
                options.push(Position::OnExceptional(i - 2));
                options.push(Position::OnExceptional(i - 2));
            }
            match &pos[i - 1] {
                Position::OnExceptional(j) => options.push(Position::OnExceptional(*j)),
                Position::OnCurve(c) => options.push(Position::OnCurve(c.clone())),
                _ => {}
            }
            if i == 1 {
                options.extend(site_curves.iter().map(|c| Position::OnCurve(c.clone())));
            }
            let p = options.choose(&mut self.rng).expect("nonempty").clone();
            pos.push(p);
        }
    }

    /// Positions of a fresh branch with at most `max_len` points.
    pub fn positions(&mut self, max_len: usize, site_curves: &[String]) -> Vec<Position> {
        let len = self.rng.gen_range(1..=max_len);
        let mut pos = Vec::new();
        self.extend(&mut pos, len, site_curves);
        pos
    }

    /// Positions sharing the first `keep` points of `other`, then splitting off.
    pub fn split_from(&mut self, other: &[Position], keep: usize, max_len: usize) -> Vec<Position> {
        let mut pos = other[..keep].to_vec();
        pos.push(Position::Free(Some(self.fresh())));
        let len = self.rng.gen_range(pos.len()..=max_len.max(pos.len()));
        self.extend(&mut pos, len, &[]);
        pos
    }

    fn cluster_of(positions: Vec<Position>) -> BranchCluster {
        BranchCluster::from_positions(positions).unwrap_or_default()
    }

    pub fn cluster(&mut self, max_len: usize, site_curves: &[String]) -> BranchCluster {
        let pos = self.positions(max_len, site_curves);
        Self::cluster_of(pos)
    }

    /// Two clusters at the same root sharing a random prefix.
    pub fn cluster_pair(&mut self) -> (BranchCluster, BranchCluster) {
        let a = self.positions(5, &[]);
        let keep = self.rng.gen_range(1..=a.len());
        let b = self.split_from(&a, keep, 5);
        (Self::cluster_of(a), Self::cluster_of(b))
    }

    /// Branches at shared or separate sites; `sites` proposes a site with
    /// the names of the curves through it.
    fn branches(&mut self, max_branches: usize, mut site: impl FnMut(&mut Self) -> AttachSite) -> Vec<BoundaryBranch> {
        let n = self.rng.gen_range(1..=max_branches.max(1));
        let mut made: Vec<(AttachSite, Vec<Position>)> = Vec::new();
        let mut out = Vec::new();
        for k in 0..n {
            let (s, pos) = if !made.is_empty() && self.rng.gen_bool(0.4) {
                let (s, other) = made.choose(&mut self.rng).expect("nonempty").clone();
                let keep = self.rng.gen_range(1..=other.len());
                let pos = self.split_from(&other, keep, 4);
                (s, pos)
            } else {
                let s = site(self);
                let curves: Vec<String> = s.curves().iter().map(|c| c.to_string()).collect();
                let pos = self.positions(4, &curves);
                (s, pos)
            };
            let coeff = self.coefficient();
            out.push(
                BoundaryBranch::new(&format!("B{}", k + 1), coeff, s.clone())
                    .with_cluster(Self::cluster_of(pos.clone())),
            );
            made.push((s, pos));
        }
        out
    }

    pub fn smooth_germ(&mut self, max_branches: usize) -> GermModel {
        let b = self.branches(max_branches, |_| AttachSite::Origin);
        GermModel::smooth(b).unwrap_or_else(|_| GermModel::smooth(Vec::new()).expect("plane"))
    }

    /// A random boundary on a resolved germ; falls back to `B = 0`.
    pub fn resolved_germ(&mut self, graph: &WeightedDualGraph, max_branches: usize) -> GermModel {
        let ids: Vec<String> = graph.vertices().iter().map(|v| v.id.clone()).collect();
        let edges: Vec<(usize, usize)> = graph.edges().map(|(i, j, _)| (i, j)).collect();
        let b = self.branches(max_branches, |g| {
            if !edges.is_empty() && g.rng.gen_bool(0.3) {
                let &(i, j) = edges.choose(&mut g.rng).expect("nonempty");
                AttachSite::Meet(ids[i].clone(), ids[j].clone())
            } else {
                let v = ids.choose(&mut g.rng).expect("nonempty").clone();
                let label = g.rng.gen_bool(0.3).then(|| "q".to_string());
                AttachSite::Interior { vertex: v, label }
            }
        });
        GermModel::new(graph.clone(), b).unwrap_or_else(|_| GermModel::new(graph.clone(), Vec::new()).expect("valid graph"))
    }

    /// A klt germ whose resolution graph has D or E shape, weights mostly 2.
    pub fn fork_graph(&mut self) -> WeightedDualGraph {
        for _ in 0..50 {
            let d_shape = self.rng.gen_bool(0.6);
            let m = if d_shape { self.rng.gen_range(4..=9) } else { self.rng.gen_range(6..=8) };
            let mut w = vec![2i64; m];
            for (i, x) in w.iter_mut().enumerate() {
                if d_shape && i < 2 {
                    continue;
                }
                if self.rng.gen_bool(0.25) {
                    *x = self.rng.gen_range(3..=4);
                }
            }
            let g = if d_shape { catalog::d_graph(&w) } else { catalog::e_graph(&w) };
            if GermModel::new(g.clone(), Vec::new()).is_ok_and(|x| x.is_klt_germ()) {
                return g;
            }
        }
        catalog::d_graph(&[2, 2, 2, 2])
    }

    /// A chain with weights in `2..=4`.
    pub fn chain_graph(&mut self) -> WeightedDualGraph {
        let m = self.rng.gen_range(1..=5);
        let w: Vec<i64> = (0..m).map(|_| self.rng.gen_range(2..=4)).collect();
        catalog::a_graph(&w)
    }

    /// Shrinks the boundary until `accept` holds: first halving every
    /// coefficient up to four times, then dropping branches from the end.
    pub fn shrink_until(&mut self, germ: GermModel, accept: impl Fn(&GermModel) -> bool) -> GermModel {
        let mut g = germ;
        for _ in 0..4 {
            if accept(&g) {
                return g;
            }
            let half: Vec<Q> = g.boundary().iter().map(|b| &b.coeff / Q::from_integer(2.into())).collect();
            g = g.with_coefficients(&half).expect("smaller coefficients stay valid");
        }
        while !accept(&g) {
            let mut b = g.boundary().to_vec();
            if b.pop().is_none() {
                break;
            }
            g = GermModel::new(g.graph().clone(), b).expect("fewer branches stay valid");
        }
        g
    }

    /// An lc boundary: half the time `B` scaled exactly to its lc threshold,
    /// otherwise shrunk until lc.
    pub fn lc_boundary(&mut self, germ: GermModel) -> GermModel {
        if self.rng.gen_bool(0.5) {
            if let Ok(Some(g)) = germ.at_lc_threshold() {
                return g;
            }
        }
        self.shrink_until(germ, is_lc)
    }

    /// A random tower of at most `max_steps` blow-ups, favouring branch points.
    pub fn tower(&mut self, germ: &GermModel, max_steps: usize) -> (BlowupTower, Vec<String>) {
        let mut t = BlowupTower::new(germ);
        let mut lines = Vec::new();
        let steps = self.rng.gen_range(0..=max_steps);
        for _ in 0..steps {
            let mut cands = t.configuration_points();
            if !t.steps().is_empty() || !t.is_smooth_base() {
                cands.extend(t.branches().iter().map(|b| b.point));
            }
            let Some(&p) = cands.choose(&mut self.rng) else { break };
            let Some(line) = line_for(&t, p) else { continue };
            let Ok(next) = t.blow_up(p) else { continue };
            lines.push(line);
            t = next;
        }
        (t, lines)
    }
}

pub fn is_plt(g: &GermModel) -> bool {
    g.pair_status().is_ok_and(|s| s.plt)
}

pub fn is_lc(g: &GermModel) -> bool {
    g.pair_status().is_ok_and(|s| s.lc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub property: String,
    pub seed: u64,
    pub case: usize,
    pub message: String,
    /// The germ in `mldsurf-spec v1` form.
    pub germ: String,
    /// Blow-up script reproducing the tower, when one was involved.
    pub script: Option<String>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FAIL {} seed={} case={}: {}", self.property, self.seed, self.case, self.message)?;
        writeln!(f, "--- germ ---")?;
        f.write_str(&self.germ)?;
        if let Some(s) = &self.script {
            writeln!(f, "--- blow-ups ---")?;
            f.write_str(s)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<Counterexample>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub results: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.failures.is_empty())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Counterexample> {
        self.results.iter().flat_map(|r| r.failures.iter())
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let verdict = if r.failures.is_empty() {
                "pass".to_string()
            } else {
                format!("FAIL ({})", r.failures.len())
            };
            out.push_str(&format!("{}: {} cases, {}\n", r.name, r.cases, verdict));
        }
        let cases: usize = self.results.iter().map(|r| r.cases).sum();
        let failed: usize = self.results.iter().map(|r| r.failures.len()).sum();
        out.push_str(&format!(
            "summary: {} properties, {} cases, {} failures\n",
            self.results.len(),
            cases,
            failed
        ));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemmas,
    Theorem14,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    /// Search depth for the classification checks.
    pub depth: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            cases: 200,
            depth: 4,
        }
    }
}

/// One property case: the germ it ran on and an optional failure message.
struct Case {
    germ: GermModel,
    script: Option<Vec<String>>,
    failure: Option<String>,
}

impl Case {
    fn on(germ: GermModel) -> Case {
        Case {
            germ,
            script: None,
            failure: None,
        }
    }

    fn fail(&mut self, msg: String) {
        if self.failure.is_none() {
            self.failure = Some(msg);
        }
    }
}

fn run_property(name: &str, cfg: SuiteConfig, cases: usize, body: impl Fn(&mut Gen, usize) -> Case + Sync) -> PropertyResult {
    let failures: Vec<Counterexample> = (0..cases)
        .into_par_iter()
        .filter_map(|i| {
            let mut g = Gen::new(cfg.seed, name, i);
            let c = body(&mut g, i);
            let message = c.failure?;
            Some(Counterexample {
                property: name.to_string(),
                seed: cfg.seed,
                case: i,
                message,
                germ: GermSpec {
                    name: Some(format!("{name}-{}-{i}", cfg.seed)),
                    model: c.germ,
                }
                .to_text(),
                script: c.script.map(|s| s.iter().map(|l| format!("{l}\n")).collect()),
            })
        })
        .collect();
    PropertyResult {
        name: name.to_string(),
        cases,
        failures,
    }
}

fn random_germ(g: &mut Gen) -> GermModel {
    match g.rng().gen_range(0..3) {
        0 => g.smooth_germ(3),
        1 => {
            let graph = g.fork_graph();
            g.resolved_germ(&graph, 3)
        }
        _ => {
            let graph = g.chain_graph();
            g.resolved_germ(&graph, 3)
        }
    }
}

fn plt_fork_model(g: &mut Gen) -> GermModel {
    let graph = g.fork_graph();
    let germ = g.resolved_germ(&graph, 3);
    g.shrink_until(germ, is_plt)
}

fn join(v: &[Q]) -> String {
    v.iter().map(fmt_q).collect::<Vec<_>>().join(", ")
}

/// Ledger recursion against the full pullback solve.
fn ledger_case(g: &mut Gen) -> Case {
    let germ = random_germ(g);
    let (t, lines) = g.tower(&germ, 5);
    let mut c = Case::on(germ);
    c.script = Some(lines);
    match t.pullback_coefficients() {
        Ok(solve) => {
            let ledger = t.ledger();
            if ledger != solve {
                c.fail(format!("ledger [{}] but pullback [{}]", join(&ledger), join(&solve)));
            }
        }
        Err(e) => c.fail(format!("pullback solve failed: {e}")),
    }
    c
}

/// Local intersections drop by the product of multiplicities under a blow-up.
fn conservation_case(g: &mut Gen) -> Case {
    let germ = if g.rng().gen_bool(0.7) {
        g.smooth_germ(3)
    } else {
        let graph = g.chain_graph();
        g.resolved_germ(&graph, 3)
    };
    let (t, mut lines) = g.tower(&germ, 3);
    let mut c = Case::on(germ);
    let mut cands: Vec<_> = t.branches().iter().map(|b| b.point).collect();
    if cands.is_empty() || !t.is_smooth_base() || !t.steps().is_empty() {
        cands.extend(t.configuration_points());
    }
    if t.is_smooth_base() && t.steps().is_empty() {
        cands = t.configuration_points();
    }
    let Some(&p) = cands.choose(g.rng()) else {
        c.script = Some(lines);
        return c;
    };
    let Some(line) = line_for(&t, p) else {
        c.script = Some(lines);
        return c;
    };
    lines.push(line);
    c.script = Some(lines);
    let t2 = match t.blow_up(p) {
        Ok(t2) => t2,
        Err(e) => {
            c.fail(format!("blow-up failed: {e}"));
            return c;
        }
    };
    let e = t2.last_curve().expect("one blow-up");
    let through: Vec<(usize, u32)> = t.curves_through(p);
    let mult_c = |x: usize| through.iter().find(|&&(y, _)| y == x).map_or(0, |&(_, m)| m);
    let at_p: Vec<usize> = t.branches_at(p);
    let nb = t.branches().len();
    let mult_b = |b: usize| if at_p.contains(&b) { t.branches()[b].mult() } else { 0 };
    for b1 in 0..nb {
        for b2 in (b1 + 1)..nb {
            let before = t.branch_intersection(b1, b2);
            let after = t2.branch_intersection(b1, b2) + u64::from(mult_b(b1)) * u64::from(mult_b(b2));
            if before != after {
                c.fail(format!(
                    "({}.{}) is {before} before the blow-up, {after} after accounting",
                    t.branches()[b1].label,
                    t.branches()[b2].label
                ));
            }
        }
        if t2.branch_curve_intersection(b1, e) != mult_b(b1) {
            c.fail(format!(
                "branch {} meets the new curve {} times, multiplicity {}",
                t.branches()[b1].label,
                t2.branch_curve_intersection(b1, e),
                mult_b(b1)
            ));
        }
        for x in 0..t.curves().len() {
            if t.curve(x).nodes > 0 {
                continue;
            }
            let before = t.branch_curve_intersection(b1, x);
            let after = t2.branch_curve_intersection(b1, x) + mult_b(b1) * mult_c(x);
            if before != after {
                c.fail(format!(
                    "({}.{}) is {before} before the blow-up, {after} after accounting",
                    t.branches()[b1].label,
                    t.curve(x).label
                ));
            }
        }
    }
    let (f1, f2) = (t.intersection_form(), t2.intersection_form());
    for x in 0..t.curves().len() {
        for y in 0..t.curves().len() {
            let drop = Q::from_integer((i64::from(mult_c(x)) * i64::from(mult_c(y))).into());
            if *f1.get(x, y) != f2.get(x, y) + &drop {
                c.fail(format!("({}.{}) does not drop by {}", t.curve(x).label, t.curve(y).label, fmt_q(&drop)));
            }
        }
        if *f2.get(x, e) != Q::from_integer(i64::from(mult_c(x)).into()) {
            c.fail(format!("{} meets the new curve wrongly", t.curve(x).label));
        }
    }
    if *f2.get(e, e) != -Q::one() {
        c.fail("new curve is not a (-1)-curve".into());
    }
    c
}

/// `(B.C) >= mult B * mult C`, symmetric, and equal to the tower's count.
fn mult_bound_case(g: &mut Gen) -> Case {
    let (a, b) = g.cluster_pair();
    let germ = GermModel::smooth(vec![
        BoundaryBranch::new("P", q(1, 2), AttachSite::Origin).with_cluster(a.clone()),
        BoundaryBranch::new("R", q(1, 2), AttachSite::Origin).with_cluster(b.clone()),
    ])
    .expect("two branches at the origin");
    let mut c = Case::on(germ.clone());
    let i = a.local_intersection(&b);
    let bound = u64::from(a.multiplicity()) * u64::from(b.multiplicity());
    if i < bound {
        c.fail(format!("(P.R) = {i} < {bound}"));
    }
    if b.local_intersection(&a) != i {
        c.fail("local intersection is not symmetric".into());
    }
    let t = BlowupTower::new(&germ);
    if t.branch_intersection(0, 1) != i {
        c.fail(format!("tower gives {}, clusters give {i}", t.branch_intersection(0, 1)));
    }
    c
}

fn fork_minimal_case(g: &mut Gen) -> Case {
    let germ = plt_fork_model(g);
    let mut c = Case::on(germ.clone());
    let fork = germ.graph().structure().forks[0];
    let a = germ.solve_discrepancies().values;
    for (v, av) in a.iter().enumerate() {
        if *av < a[fork] {
            c.fail(format!(
                "a({}) = {} below the fork's {}",
                germ.graph().vertex(v).id,
                fmt_q(av),
                fmt_q(&a[fork])
            ));
        }
    }
    c
}

fn exc_minimal_case(g: &mut Gen) -> Case {
    let germ = plt_fork_model(g);
    let mut c = Case::on(germ.clone());
    let Some((min, _)) = germ.mld_on_resolution() else {
        c.fail("no exceptional curve".into());
        return c;
    };
    let mut bad: Option<(String, Q)> = None;
    let r = for_each_divisor(&germ, 3, |d| {
        if bad.is_none() && !d.on_resolution() && d.log_discrepancy <= min {
            bad = Some((d.name(), d.log_discrepancy.clone()));
        }
    });
    if let Err(e) = r {
        c.fail(format!("enumeration failed: {e}"));
    }
    if let Some((name, a)) = bad {
        c.fail(format!("{name} has a = {} against {} on the resolution", fmt_q(&a), fmt_q(&min)));
    }
    c
}

fn chain_case(g: &mut Gen) -> Case {
    let germ = g.smooth_germ(3);
    let germ = g.lc_boundary(germ);
    let mut c = Case::on(germ.clone());
    match mld_bruteforce(&germ, 4) {
        Ok(s) => {
            for d in &s.minimizers {
                if d.tower_graph().chain_order().is_none() {
                    c.fail(format!("minimizer {} has a non-chain tower", d.name()));
                }
            }
        }
        Err(e) => c.fail(format!("search failed: {e}")),
    }
    c
}

fn theorem_case(germ: GermModel, depth: usize) -> Case {
    let mut c = Case::on(germ.clone());
    match verify_theorem(&germ, depth) {
        Ok(Verdict::Pass) => {}
        Ok(v) => c.fail(v.to_string()),
        Err(e) => c.fail(format!("classification failed: {e}")),
    }
    c
}

pub fn run_lemmas(cfg: SuiteConfig) -> SuiteReport {
    let n = cfg.cases;
    SuiteReport {
        results: vec![
            run_property("lemmas/ledger", cfg, n, |g, _| ledger_case(g)),
            run_property("lemmas/conservation", cfg, n, |g, _| conservation_case(g)),
            run_property("lemmas/mult-bound", cfg, n, |g, _| mult_bound_case(g)),
            run_property("lemmas/fork-minimal", cfg, n, |g, _| fork_minimal_case(g)),
            run_property("lemmas/exc-minimal", cfg, n, |g, _| exc_minimal_case(g)),
            run_property("lemmas/chain", cfg, n, |g, _| chain_case(g)),
        ],
    }
}

/// The fixture catalog, then every ADE graph and weight variant with
/// `B = 0` and `cases` random plt boundaries, then random lc boundaries on
/// smooth and ADE germs.
pub fn run_theorem14(cfg: SuiteConfig) -> SuiteReport {
    let depth = cfg.depth;
    let fixtures = catalog::fixtures();
    let mut results = vec![run_property("theorem14/fixtures", cfg, fixtures.len(), |_, i| {
        theorem_case(fixtures[i].1.clone(), depth)
    })];
    let graphs: Vec<(String, GermModel)> = catalog::du_val_catalog()
        .into_iter()
        .chain(catalog::weight_variants())
        .collect();
    for (name, germ) in &graphs {
        // Case 0 is `B = 0`.
        results.push(run_property(&format!("theorem14/{name}"), cfg, cfg.cases + 1, |g, i| {
            if i == 0 {
                return theorem_case(germ.clone(), depth);
            }
            let with_b = g.resolved_germ(germ.graph(), 3);
            theorem_case(g.shrink_until(with_b, is_plt), depth)
        }));
    }
    results.push(run_property("theorem14/smooth-lc", cfg, cfg.cases, |g, _| {
        let germ = g.smooth_germ(3);
        theorem_case(g.lc_boundary(germ), depth)
    }));
    results.push(run_property("theorem14/klt-lc", cfg, cfg.cases, |g, _| {
        let graph = if g.rng().gen_bool(0.5) { g.chain_graph() } else { g.fork_graph() };
        let germ = g.resolved_germ(&graph, 3);
        theorem_case(g.lc_boundary(germ), depth)
    }));
    SuiteReport { results }
}

pub fn run(suite: Suite, cfg: SuiteConfig) -> SuiteReport {
    match suite {
        Suite::Lemmas => run_lemmas(cfg),
        Suite::Theorem14 => run_theorem14(cfg),
        Suite::All => {
            let mut r = run_lemmas(cfg);
            r.results.extend(run_theorem14(cfg).results);
            r
        }
    }
}
