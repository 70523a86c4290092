//! The eight acceptance criteria, each compared exactly. Prints one
//! PASS/FAIL line per criterion and fails if any criterion does.

use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use mldsurf::catalog;
use mldsurf::dual_graph::{ClassTag, WeightedDualGraph};
use mldsurf::germfile::GermSpec;
use mldsurf::linalg::is_negative_definite;
use mldsurf::rational::{q, qi};
use mldsurf::suite::{run_lemmas, SuiteConfig};
use mldsurf::tower::{mld_bruteforce, resolve_pair, Point};
use mldsurf::{classify, verify_theorem, Error, GermModel, KollarStatus, Verdict};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn status(is_kollar: bool, is_potential_lc_place: bool) -> KollarStatus {
    KollarStatus {
        is_kollar,
        is_potential_lc_place,
    }
}

fn binary_dihedral() -> Outcome {
    let g = catalog::binary_dihedral_d4();
    let a = g.solve_discrepancies();
    ensure(a.get("F1") == Some(&q(1, 2)), format!("a(F1) = {:?}", a.get("F1")))?;
    let (mld, _) = g.mld_on_resolution().ok_or("no resolution")?;
    ensure(mld == q(1, 2), format!("mld = {mld}"))?;
    let tail = g.kollar_component_status(0).map_err(|e| e.to_string())?;
    let fork = g.kollar_component_status(1).map_err(|e| e.to_string())?;
    ensure(tail == status(false, true), format!("F1 status {tail:?}"))?;
    ensure(fork == status(true, true), format!("fork status {fork:?}"))?;
    Ok("a(F1) = 1/2 = mld, F1 (false, true), fork (true, true)".into())
}

fn kawakita() -> Outcome {
    let g = catalog::kawakita();
    let s = mld_bruteforce(&g, 4).map_err(|e| e.to_string())?;
    ensure(s.value == q(2, 3), format!("mld = {}", s.value))?;
    ensure(s.minimizers.len() == 1, format!("{} minimizers", s.minimizers.len()))?;
    let d = &s.minimizers[0];
    ensure(
        d.depth() == 1 && d.tower.steps()[0].point == Point::Origin,
        format!("minimizer {} is not the first blow-up", d.name()),
    )?;
    ensure(s.complete, "search beyond depth 4 not certified")?;
    let k = d.tower.kollar_status(d.curve).map_err(|e| e.to_string())?;
    ensure(k.is_kollar, "minimizer is not a Kollár component")?;
    let pair = d.tower.pair_potential_lc_place(d.curve).map_err(|e| e.to_string())?;
    ensure(!pair, "minimizer is a potential lc place of the pair")?;
    Ok("mld 2/3 by the first blow-up alone; Kollár, not a pair potential lc place".into())
}

fn d4_extraction() -> Outcome {
    // F1 a tail, F3 the fork, F2 and F4 the other tails.
    let g = catalog::d(4);
    let c = g.extraction_coefficients(0, false).map_err(|e| e.to_string())?;
    ensure(c[0] == qi(1), "extracted curve not pinned to 1")?;
    let rest = vec![c[2].clone(), c[1].clone(), c[3].clone()];
    ensure(rest == vec![qi(1), q(1, 2), q(1, 2)], format!("coefficients {rest:?}"))?;
    let s = g.kollar_component_status(0).map_err(|e| e.to_string())?;
    ensure(s == status(false, true), format!("status {s:?}"))?;
    Ok("(fork, tail, tail) = (1, 1/2, 1/2), status (false, true)".into())
}

/// Potential lc places of a Du Val graph, read off its shape: every curve
/// for A, the fork for E, and for D the fork plus every curve whose two
/// branches away from it are single curves.
fn declared_plc(g: &WeightedDualGraph, v: usize) -> bool {
    match g.classify().tag {
        ClassTag::A(_) => true,
        ClassTag::E(_) => g.degree(v) == 3,
        ClassTag::D(_) => {
            g.degree(v) == 3
                || g.structure()
                    .branches
                    .iter()
                    .filter(|b| !b.contains(v))
                    .all(|b| b.vertices.len() == 1)
        }
        _ => false,
    }
}

/// Kollár components of a Du Val graph: every chain curve for A (each
/// complement is two chains ending on the curve), the fork otherwise.
fn declared_kollar(g: &WeightedDualGraph, v: usize) -> bool {
    match g.classify().tag {
        ClassTag::A(_) => true,
        _ => g.degree(v) == 3,
    }
}

fn du_val_catalog() -> Outcome {
    let all = catalog::du_val_catalog();
    for (name, g) in &all {
        let a = g.solve_discrepancies();
        ensure(a.values.iter().all(|x| *x == qi(1)), format!("{name}: a = {:?}", a.values))?;
        let r = classify(g, 4).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.mld == qi(1), format!("{name}: mld {}", r.mld))?;
        ensure(r.complete, format!("{name}: search incomplete"))?;
        let mut on_y: Vec<usize> = r.members.iter().filter_map(|m| m.vertex).collect();
        on_y.sort();
        ensure(
            r.members.len() == g.graph().len() && on_y == (0..g.graph().len()).collect::<Vec<_>>(),
            format!("{name}: computing set {:?}", r.member_names()),
        )?;
        for m in &r.members {
            let v = m.vertex.expect("on the resolution");
            ensure(
                m.is_kollar == declared_kollar(g.graph(), v),
                format!("{name}: {} Kollár {}", m.name, m.is_kollar),
            )?;
            ensure(
                m.is_potential_lc_place == declared_plc(g.graph(), v),
                format!("{name}: {} potential lc place {}", m.name, m.is_potential_lc_place),
            )?;
        }
    }
    Ok(format!("{} graphs: a = 1, mld = 1, C = Exc(f), Kollár and plc sets as declared", all.len()))
}

fn lemma_suite() -> Outcome {
    let r = run_lemmas(SuiteConfig {
        seed: 1,
        cases: 200,
        depth: 4,
    });
    let labels = [
        ("lemmas/ledger", "a"),
        ("lemmas/conservation", "b"),
        ("lemmas/mult-bound", "c"),
        ("lemmas/fork-minimal", "d"),
        ("lemmas/exc-minimal", "e"),
        ("lemmas/chain", "f"),
    ];
    for (name, tag) in labels {
        let p = r.results.iter().find(|p| p.name == name).ok_or(format!("missing {name}"))?;
        ensure(p.cases == 200, format!("({tag}) ran {} cases", p.cases))?;
        if let Some(c) = p.failures.first() {
            return Err(format!("({tag}) {c}"));
        }
    }
    Ok("(a)-(f), 200 seeded cases each".into())
}

fn definiteness_gate() -> Outcome {
    let triangle = WeightedDualGraph::from_parts(&[("F1", 2), ("F2", 2), ("F3", 2)], &[("F1", "F2"), ("F2", "F3"), ("F1", "F3")])
        .map_err(|e| e.to_string())?;
    ensure(GermModel::new(triangle, vec![]).is_err(), "F-type triangle accepted")?;
    let weight_one = catalog::a_graph(&[2, 1, 2]);
    ensure(GermModel::new(weight_one, vec![]).is_err(), "weight-1 interior curve accepted")?;
    let lone = catalog::a_graph(&[1]);
    ensure(GermModel::new(lone, vec![]).is_err(), "a (-1)-curve accepted")?;
    // An indefinite graph of weight-2 curves: the affine D4 star.
    let affine = WeightedDualGraph::from_parts(
        &[("F1", 2), ("F2", 2), ("F3", 2), ("F4", 2), ("F5", 2)],
        &[("F1", "F2"), ("F1", "F3"), ("F1", "F4"), ("F1", "F5")],
    )
    .map_err(|e| e.to_string())?;
    ensure(
        GermModel::new(affine, vec![]) == Err(Error::NotNegativeDefinite),
        "affine D4 accepted",
    )?;
    let mut n = 0;
    let accepted = catalog::fixtures()
        .into_iter()
        .chain(catalog::du_val_catalog())
        .chain(catalog::weight_variants());
    for (name, g) in accepted {
        if g.is_smooth() {
            continue;
        }
        let nd = is_negative_definite(&g.graph().intersection_form()).map_err(|e| e.to_string())?;
        ensure(nd, format!("{name} accepted but not negative definite"))?;
        n += 1;
    }
    Ok(format!("triangle, weight-1 and affine graphs rejected; {n} accepted graphs negative definite"))
}

fn not_lc_cusp() -> Outcome {
    let t = resolve_pair(&catalog::reduced_cusp()).map_err(|e| e.to_string())?;
    ensure(t.steps().len() == 3, format!("{} blow-ups", t.steps().len()))?;
    let s = t.pair_status().map_err(|e| e.to_string())?;
    ensure(!s.lc, "pair reported lc")?;
    let gamma = t.ledger();
    ensure(gamma[2] == qi(2), format!("third coefficient {}", gamma[2]))?;
    ensure(catalog::reduced_cusp().pair_status().is_ok_and(|s| !s.lc), "germ reported lc")?;
    Ok("3 blow-ups, coefficients (1, 1, 2), not lc".into())
}

fn theorem_catalog() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut n = 0;
    for (stem, model) in catalog::fixtures() {
        let text = fs::read_to_string(dir.join(format!("{stem}.germ"))).map_err(|e| format!("{stem}: {e}"))?;
        let spec = GermSpec::parse(&text).map_err(|e| format!("{stem}: {e}"))?;
        ensure(spec.model == model, format!("{stem}: file differs from the catalog"))?;
        let v = verify_theorem(&spec.model, 6).map_err(|e| format!("{stem}: {e}"))?;
        ensure(v == Verdict::Pass, format!("{stem}: {v}"))?;
        n += 1;
    }
    let out = Command::new(env!("CARGO_BIN_EXE_mldsurf"))
        .args(["verify", "--suite", "theorem14", "--cases", "50", "--seed", "1"])
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(
        out.status.code() == Some(0),
        format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)),
    )?;
    let summary = stdout.lines().last().unwrap_or("");
    ensure(summary.ends_with(" 0 failures"), summary.to_string())?;
    Ok(format!("{n} fixtures pass; {summary}; exit 0"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("binary dihedral D4", binary_dihedral),
        ("Kawakita germ", kawakita),
        ("D4 extraction", d4_extraction),
        ("Du Val catalog", du_val_catalog),
        ("lemma property suite", lemma_suite),
        ("negative-definiteness gate", definiteness_gate),
        ("not-lc cusp", not_lc_cusp),
        ("theorem on catalog and random plt boundaries", theorem_catalog),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
