//! Seeded property suites behind the `selftest` command.
//!
//! Each suite draws its inputs from a single ChaCha generator, so a run is
//! reproducible from `(type, iters, seed)`. On failure the reproducing
//! input is part of the error message.

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::canonical::{self, peel, reconstruct, Fixture};
use crate::connect::{common_base, is_edge, path_ordered_field, path_tropical, validate_path};
use crate::coxeter::{CoxeterGraph, Move, MoveKind, ReducedWord};
use crate::error::{Error, Result};
use crate::format::element_to_text;
use crate::monoid::{transport_coords, MonoidElement, Rescaling};
use crate::semifield::{SemifieldKind, Value};

#[derive(Debug, Clone)]
pub struct Config {
    pub type_spec: String,
    pub iters: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            type_spec: "A3".into(),
            iters: 200,
            seed: 0,
        }
    }
}

/// Result of one suite: cases exercised, or the first failure.
pub struct SuiteOutcome {
    pub name: &'static str,
    pub result: Result<usize>,
}

/// Runs every suite against the configured graph. Failures do not abort
/// later suites.
pub fn run_all(cfg: &Config) -> Result<Vec<SuiteOutcome>> {
    let graph = CoxeterGraph::parse(&cfg.type_spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    type Suite = fn(&Arc<CoxeterGraph>, usize, &mut ChaCha8Rng) -> Result<usize>;
    let suites: &[(&'static str, Suite)] = &[
        ("semifield-axioms", suite_semifield),
        ("word-plans", suite_word_plans),
        ("matsumoto", suite_matsumoto),
        ("operator-identities", suite_operators),
        ("zero-pattern", suite_zero_pattern),
        ("peeling", suite_peeling),
        ("fixtures", suite_fixtures),
        ("tropical-paths", suite_tropical_paths),
        ("ordered-field-paths", suite_ordered_field_paths),
    ];
    Ok(suites
        .iter()
        .map(|(name, f)| SuiteOutcome {
            name,
            result: f(&graph, cfg.iters, &mut rng),
        })
        .collect())
}

fn fail(msg: String) -> Error {
    Error::InternalAssertion(msg)
}

// ---- input generation ---------------------------------------------------

fn rand_value(kind: SemifieldKind, lo: i64, hi: i64, rng: &mut ChaCha8Rng) -> Value {
    match kind {
        SemifieldKind::TropInt => Value::trop_int(rng.gen_range(lo..=hi)),
        SemifieldKind::TropRat => Value::trop_rat(rng.gen_range(lo..=hi), rng.gen_range(1..=6)),
        SemifieldKind::RatPos => {
            Value::rat_pos_from(rng.gen_range(lo.max(1)..=hi.max(2)), rng.gen_range(1..=6)).unwrap()
        }
        SemifieldKind::Trivial => Value::Trivial,
    }
}

/// A uniform-ish random reduced word of `w0` by stripping random left
/// descents.
fn rand_word(graph: &CoxeterGraph, rng: &mut ChaCha8Rng) -> ReducedWord {
    let mut cur = graph.w0().clone();
    let mut letters = Vec::with_capacity(graph.nu());
    while !cur.is_identity() {
        let ds = graph.left_descents(&cur);
        let &i = ds.choose(rng).unwrap();
        letters.push(i);
        cur = graph.mul_gen_left(i, &cur);
    }
    graph.reduced_word(letters).expect("descent stripping yields a reduced word")
}

fn rand_element(
    graph: &Arc<CoxeterGraph>,
    kind: SemifieldKind,
    lo: i64,
    hi: i64,
    rng: &mut ChaCha8Rng,
) -> MonoidElement {
    let word = rand_word(graph, rng);
    let coords = (0..word.len())
        .map(|_| rand_value(kind, lo, hi, rng))
        .collect();
    MonoidElement::from_word(graph.clone(), kind, word, coords).unwrap()
}

/// A random element of the nonnegative stratum, with zeros mixed in.
fn rand_plus_element(
    graph: &Arc<CoxeterGraph>,
    kind: SemifieldKind,
    zeros: bool,
    rng: &mut ChaCha8Rng,
) -> MonoidElement {
    let word = rand_word(graph, rng);
    let coords = (0..word.len())
        .map(|_| {
            if zeros && rng.gen_bool(0.25) {
                kind.one()
            } else {
                rand_value(kind, if zeros { 0 } else { 1 }, 40, rng)
            }
        })
        .collect();
    MonoidElement::from_word(graph.clone(), kind, word, coords).unwrap()
}

// ---- suites --------------------------------------------------------------

fn suite_semifield(_: &Arc<CoxeterGraph>, iters: usize, rng: &mut ChaCha8Rng) -> Result<usize> {
    let kinds = [
        SemifieldKind::TropInt,
        SemifieldKind::TropRat,
        SemifieldKind::RatPos,
        SemifieldKind::Trivial,
    ];
    let mut cases = 0;
    for kind in kinds {
        for _ in 0..iters {
            let a = rand_value(kind, -40, 40, rng);
            let b = rand_value(kind, -40, 40, rng);
            let c = rand_value(kind, -40, 40, rng);
            let checks = [
                a.splus(&b)?.splus(&c)? == a.splus(&b.splus(&c)?)?,
                a.splus(&b)? == b.splus(&a)?,
                a.sprod(&b)?.sprod(&c)? == a.sprod(&b.sprod(&c)?)?,
                a.sprod(&b)? == b.sprod(&a)?,
                a.sprod(&a.sinv())? == kind.one(),
                a.sprod(&b.splus(&c)?)? == a.sprod(&b)?.splus(&a.sprod(&c)?)?,
                a.sprod(&kind.one())? == a,
                a.splus(&b)?.to_trivial() == a.to_trivial().splus(&b.to_trivial())?,
            ];
            if checks.iter().any(|ok| !ok) {
                return Err(fail(format!("semifield axiom failed on {a}, {b}, {c} over {kind}")));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn suite_word_plans(
    graph: &Arc<CoxeterGraph>,
    iters: usize,
    rng: &mut ChaCha8Rng,
) -> Result<usize> {
    let nu = graph.nu();
    let mut cases = 0;
    // dual index is an involution compatible with w0
    for i in graph.letters() {
        let d = graph.dual_index(i);
        if graph.dual_index(d) != i
            || graph.mul_gen_left(i, graph.w0()) != graph.mul_gen_right(graph.w0(), d)
        {
            return Err(fail(format!("dual index failed at letter {}", graph.label(i))));
        }
    }
    for _ in 0..iters {
        let w = rand_word(graph, rng);
        let show = |word: &ReducedWord| graph.word_to_string(word);
        for i in graph.letters() {
            let front = graph.pull_to_front(&w, i)?;
            if front.1.first() != Some(i)
                || graph.word_element(&front.1) != *graph.w0()
                || front.0.len() > nu * nu
                || graph.apply_plan(&w, &front.0)? != front.1
            {
                return Err(fail(format!("pull_to_front({}, {})", show(&w), graph.label(i))));
            }
            let (back_plan, back) = graph.pull_to_back(&w, i)?;
            if back.last() != Some(i) || graph.apply_plan(&w, &back_plan)? != back {
                return Err(fail(format!("pull_to_back({}, {})", show(&w), graph.label(i))));
            }
        }
        // plans preserve the element at every step
        let v = rand_word(graph, rng);
        let plan = graph.rewrite_plan(&w, &v)?;
        let mut cur = w.letters().to_vec();
        for &m in &plan.moves {
            graph.apply_move(&mut cur, m)?;
        }
        if cur != v.letters() {
            return Err(fail(format!("rewrite_plan({}, {})", show(&w), show(&v))));
        }
        cases += 1;
    }
    Ok(cases)
}

fn suite_matsumoto(
    graph: &Arc<CoxeterGraph>,
    iters: usize,
    rng: &mut ChaCha8Rng,
) -> Result<usize> {
    let mut cases = 0;
    for kind in [SemifieldKind::TropInt, SemifieldKind::TropRat, SemifieldKind::RatPos] {
        for _ in 0..iters {
            let e = rand_element(graph, kind, -30, 30, rng);
            let mut cur = e.clone();
            for _ in 0..3 {
                cur = cur.rewrite(&rand_word(graph, rng))?;
            }
            cur = cur.rewrite(e.word())?;
            if cur.coords() != e.coords() {
                return Err(fail(format!(
                    "chart cycle changed coordinates of {}",
                    element_to_text(&e)
                )));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn suite_operators(
    graph: &Arc<CoxeterGraph>,
    iters: usize,
    rng: &mut ChaCha8Rng,
) -> Result<usize> {
    let mut cases = 0;
    for kind in [SemifieldKind::TropInt, SemifieldKind::TropRat, SemifieldKind::RatPos] {
        for _ in 0..iters {
            // braid involution on raw triples
            let mut triple = vec![
                rand_value(kind, -30, 30, rng),
                rand_value(kind, -30, 30, rng),
                rand_value(kind, -30, 30, rng),
            ];
            let orig = triple.clone();
            let m = Move { pos: 0, kind: MoveKind::Braid };
            transport_coords(&mut triple, m)?;
            transport_coords(&mut triple, m)?;
            if triple != orig {
                return Err(fail(format!("braid transport not an involution on {orig:?}")));
            }

            let h = rand_element(graph, kind, -30, 30, rng);
            let i = *graph.letters().collect::<Vec<_>>().choose(rng).unwrap();
            let a = rand_value(kind, -20, 20, rng);
            let b = rand_value(kind, -20, 20, rng);

            // the action is a group action on the leading coordinate
            let two = h.act(i, &a)?.act(i, &b)?;
            let one = h.act(i, &a.sprod(&b)?)?;
            if !two.equals(&one) {
                return Err(fail(format!("action group law on {}", element_to_text(&h))));
            }
            if !h.act(i, &kind.one())?.equals(&h) {
                return Err(fail(format!("unit action moved {}", element_to_text(&h))));
            }

            // left generator multiplication factors through the action
            let z = h.leading(i)?;
            let lhs = h.mul_gen_left(i, &a)?;
            let rhs = h.act(i, &a.splus(&z)?.sdiv(&z)?)?;
            if !lhs.equals(&rhs) {
                return Err(fail(format!(
                    "leading-coordinate identity on {} at letter {} with {}",
                    element_to_text(&h),
                    graph.label(i),
                    a
                )));
            }

            // rescaling commutes with the action
            let p = Rescaling::new(
                graph,
                graph.letters().map(|_| rand_value(kind, -15, 15, rng)).collect(),
            )?;
            let lhs = h.rescale(&p)?.act(i, &a)?;
            let rhs = h.act(i, &a)?.rescale(&p)?;
            if !lhs.equals(&rhs) {
                return Err(fail(format!("rescaling does not commute on {}", element_to_text(&h))));
            }

            // nonnegative stratum is stable under nonnegative action
            if kind.has_plus_part() {
                let hp = rand_plus_element(graph, kind, true, rng);
                let ap = rand_value(kind, 0, 20, rng);
                if !hp.act(i, &ap)?.in_plus_part() {
                    return Err(fail(format!(
                        "nonnegative action left the stratum on {}",
                        element_to_text(&hp)
                    )));
                }
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn suite_zero_pattern(
    graph: &Arc<CoxeterGraph>,
    iters: usize,
    rng: &mut ChaCha8Rng,
) -> Result<usize> {
    let kind = SemifieldKind::TropInt;
    let base = MonoidElement::base_point(graph.clone(), kind)?;
    if base.zero_pattern()? != *graph.w0() {
        return Err(fail("base point zero pattern is not w0".into()));
    }
    // all charts at small rank, a sample of random charts otherwise
    let charts: Vec<ReducedWord> = match graph.enumerate_reduced_words(graph.w0(), 64) {
        Ok(all) => all,
        Err(_) => (0..8).map(|_| rand_word(graph, rng)).collect(),
    };
    let mut cases = 0;
    for _ in 0..iters {
        let h = rand_plus_element(graph, kind, true, rng);
        if h.zero_pattern_checked(&charts).is_err() {
            return Err(fail(format!(
                "zero pattern differs between charts on {}",
                element_to_text(&h)
            )));
        }
        cases += 1;
    }
    Ok(cases)
}

fn suite_peeling(
    graph: &Arc<CoxeterGraph>,
    iters: usize,
    rng: &mut ChaCha8Rng,
) -> Result<usize> {
    let mut cases = 0;
    for kind in [SemifieldKind::TropInt, SemifieldKind::TropRat] {
        let base = MonoidElement::base_point(graph.clone(), kind)?;
        for _ in 0..iters {
            let h = rand_plus_element(graph, kind, true, rng);
            let ii = rand_word(graph, rng);
            let trace = peel(&ii, &h)?;
            let ok_stages = trace.stages.iter().all(MonoidElement::in_plus_part)
                && trace.stages.last().unwrap().equals(&base)
                && trace.stages.len() == graph.nu() + 1;
            if !ok_stages {
                return Err(fail(format!("peel trace invariants on {}", element_to_text(&h))));
            }
            if !reconstruct(&trace.coords)?.equals(&h) {
                return Err(fail(format!("peel round trip on {}", element_to_text(&h))));
            }
            // strictly positive elements peel to strictly positive values
            let hs = rand_plus_element(graph, kind, false, rng);
            let ts = peel(&ii, &hs)?;
            if !ts.coords.values().iter().all(|v| v.is_strictly_positive().unwrap()) {
                return Err(fail(format!("strict positivity on {}", element_to_text(&hs))));
            }
            // injectivity: distinct elements get distinct coordinates
            let h2 = rand_plus_element(graph, kind, true, rng);
            let t2 = peel(&ii, &h2)?;
            if (trace.coords.values() == t2.coords.values()) != h.equals(&h2) {
                return Err(fail(format!(
                    "peel injectivity on {} vs {}",
                    element_to_text(&h),
                    element_to_text(&h2)
                )));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn suite_fixtures(
    graph: &Arc<CoxeterGraph>,
    iters: usize,
    rng: &mut ChaCha8Rng,
) -> Result<usize> {
    let kind = SemifieldKind::TropInt;
    let fixtures: Vec<Fixture> = match graph.rank() {
        2 if Fixture::A2.word(graph).is_ok() => vec![Fixture::A2],
        3 if Fixture::A3Word1.word(graph).is_ok() => vec![Fixture::A3Word1, Fixture::A3Word2],
        _ => return Ok(0), // closed forms exist only in ranks 2 and 3
    };
    let mut cases = 0;
    for fixture in fixtures {
        let ii = fixture.word(graph)?;
        for _ in 0..iters {
            let params: Vec<Value> = (0..graph.nu())
                .map(|_| rand_value(kind, 0, 100, rng))
                .collect();
            let h = fixture.input_element(graph, kind, &params)?;
            let got = peel(&ii, &h)?.coords;
            let want = match fixture {
                Fixture::A2 => canonical::closed_form_a2(graph, &params[0], &params[1], &params[2])?,
                Fixture::A3Word1 => canonical::closed_form_a3_w1(
                    graph, &params[0], &params[1], &params[2], &params[3], &params[4], &params[5],
                )?,
                Fixture::A3Word2 => canonical::closed_form_a3_w2(
                    graph, &params[0], &params[1], &params[2], &params[3], &params[4], &params[5],
                )?,
            };
            if got != want {
                return Err(fail(format!(
                    "closed form disagrees with peel on {}",
                    element_to_text(&h)
                )));
            }
            if !canonical::image_inequalities(fixture, &got)? {
                return Err(fail(format!(
                    "image inequalities reject a peeled vector from {}",
                    element_to_text(&h)
                )));
            }
            // membership agrees with the inequalities on arbitrary vectors
            let probe = canonical::CanonicalCoords::new(
                graph.clone(),
                kind,
                ii.clone(),
                (0..graph.nu()).map(|_| rand_value(kind, 0, 12, rng)).collect(),
            )?;
            if canonical::member_x(&probe)? != canonical::image_inequalities(fixture, &probe)? {
                return Err(fail(format!(
                    "membership and inequalities disagree on c = {:?}",
                    probe.values().iter().map(Value::to_string).collect::<Vec<_>>()
                )));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn suite_tropical_paths(
    graph: &Arc<CoxeterGraph>,
    iters: usize,
    rng: &mut ChaCha8Rng,
) -> Result<usize> {
    let bound = 2 * graph.nu() - 1;
    let mut cases = 0;
    for kind in [SemifieldKind::TropInt, SemifieldKind::TropRat] {
        for _ in 0..iters {
            let h = rand_element(graph, kind, -50, 50, rng);
            let k = rand_element(graph, kind, -50, 50, rng);
            let ii = rand_word(graph, rng);
            let path = path_tropical(&h, &k, &ii)?;
            let report = validate_path(&path);
            if !report.ok() || !path.endpoints_match(&h, &k) || report.nontrivial_edges > bound {
                return Err(fail(format!(
                    "tropical path invalid between {} and {}",
                    element_to_text(&h),
                    element_to_text(&k)
                )));
            }
            // edge labels invert
            if let (Some(a), Some(b)) = (&path.nodes().first(), &path.nodes().get(1)) {
                if let Some(fwd) = is_edge(a, b)? {
                    let bwd = is_edge(b, a)?.ok_or_else(|| fail("asymmetric edge".into()))?;
                    if fwd.letter != bwd.letter || fwd.scale.sinv() != bwd.scale {
                        return Err(fail("edge labels do not invert".into()));
                    }
                }
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn suite_ordered_field_paths(
    graph: &Arc<CoxeterGraph>,
    iters: usize,
    rng: &mut ChaCha8Rng,
) -> Result<usize> {
    // The subtraction step entangles coordinates across pulls, so exact
    // rational sizes grow exponentially with the word length; the
    // construction is exercised at desk ranks only.
    if graph.nu() > 12 {
        return Ok(0);
    }
    let kind = SemifieldKind::RatPos;
    let bound = 2 * graph.nu() - 1;
    let mut cases = 0;
    for _ in 0..iters {
        let u1 = rand_element(graph, kind, 1, 40, rng);
        let u2 = rand_element(graph, kind, 1, 40, rng);
        let ii = rand_word(graph, rng);
        let cb = common_base(&u1, &u2, &ii)?;
        if !cb.left_residue.mul(&cb.base)?.equals(&u1)
            || !cb.right_residue.mul(&cb.base)?.equals(&u2)
        {
            return Err(fail(format!(
                "common base does not factor {} / {}",
                element_to_text(&u1),
                element_to_text(&u2)
            )));
        }
        let path = path_ordered_field(&u1, &u2, &ii)?;
        let report = validate_path(&path);
        if !report.ok() || !path.endpoints_match(&u1, &u2) || report.nontrivial_edges > bound {
            return Err(fail(format!(
                "ordered-field path invalid between {} and {}",
                element_to_text(&u1),
                element_to_text(&u2)
            )));
        }
        cases += 1;
    }
    Ok(cases)
}
