//! The half-circle graph on the `w0` stratum, and explicit short paths.
//!
//! Two distinct elements `H`, `H'` over `w0` are joined by an edge when
//! `H' = act(i, a, H)` for some letter `i` and scalar `a`; the orbits of
//! `act(i, ·)` are the half `i`-circles. This module constructs, for any
//! two vertices, an explicit path of at most `2ν - 1` nontrivial edges:
//!
//! * over a tropical semifield, by rescaling both endpoints into the
//!   nonnegative stratum, peeling each along a common word, and splicing
//!   the two peel chains together at the base point ([`path_tropical`]);
//! * over the positive rationals, by first finding a common right factor
//!   `u` with both `u' u⁻¹` and `u'' u⁻¹` inside the monoid (halving the
//!   smaller of the two trailing coordinates, letter by letter —
//!   [`common_base`]), then walking down one generator chain and up the
//!   other ([`path_ordered_field`]).
//!
//! Paths carry their edge labels and can be revalidated step by step with
//! [`validate_path`], which also recounts nontrivial edges against the
//! distance bound.

use std::collections::{HashMap, VecDeque};

use crate::canonical::peel;
use crate::coxeter::{CoxeterGraph, Letter, ReducedWord};
use crate::error::{Error, Result};
use crate::monoid::{MonoidElement, Rescaling};
use crate::semifield::{SemifieldKind, Value};

/// A labeled step: the target is `act(letter, scale)` of the source.
/// Degenerate when `scale` is the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabel {
    pub letter: Letter,
    pub scale: Value,
}

impl EdgeLabel {
    pub fn is_degenerate(&self) -> bool {
        self.scale.is_one()
    }
}

/// A walk in the half-circle graph: `nodes[k+1] = act(labels[k], nodes[k])`.
#[derive(Debug, Clone)]
pub struct Path {
    nodes: Vec<MonoidElement>,
    labels: Vec<EdgeLabel>,
}

impl Path {
    pub fn new(nodes: Vec<MonoidElement>, labels: Vec<EdgeLabel>) -> Result<Path> {
        if nodes.is_empty() || labels.len() + 1 != nodes.len() {
            return Err(Error::LengthMismatch {
                got: labels.len(),
                want: nodes.len().saturating_sub(1),
            });
        }
        Ok(Path { nodes, labels })
    }

    pub fn nodes(&self) -> &[MonoidElement] {
        &self.nodes
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    pub fn first(&self) -> &MonoidElement {
        self.nodes.first().expect("paths are nonempty")
    }

    pub fn last(&self) -> &MonoidElement {
        self.nodes.last().expect("paths are nonempty")
    }

    /// Edges whose label is not the unit; only these count toward distance.
    pub fn nontrivial_edges(&self) -> usize {
        self.labels.iter().filter(|l| !l.is_degenerate()).count()
    }

    pub fn endpoints_match(&self, from: &MonoidElement, to: &MonoidElement) -> bool {
        self.first().equals(from) && self.last().equals(to)
    }
}

/// Outcome of revalidating a path step by step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathReport {
    pub raw_edges: usize,
    pub nontrivial_edges: usize,
    /// The distance bound `2ν - 1` for the path's graph.
    pub bound: usize,
    /// Indices of steps where the label does not reproduce the next node.
    pub step_failures: Vec<usize>,
    /// Indices of nondegenerate steps the edge test does not confirm.
    pub edge_failures: Vec<usize>,
}

impl PathReport {
    pub fn ok(&self) -> bool {
        self.step_failures.is_empty()
            && self.edge_failures.is_empty()
            && self.nontrivial_edges <= self.bound
    }
}

fn check_pair(h: &MonoidElement, other: &MonoidElement) -> Result<()> {
    if *h.graph().as_ref() != *other.graph().as_ref() {
        return Err(Error::SpecMismatch("different Coxeter graphs".into()));
    }
    if h.kind() != other.kind() {
        return Err(Error::SpecMismatch(format!(
            "{} vs {}",
            h.kind().name(),
            other.kind().name()
        )));
    }
    if !h.is_over_w0() || !other.is_over_w0() {
        return Err(Error::SpecMismatch("elements must be over w0".into()));
    }
    Ok(())
}

fn check_longest_word(graph: &CoxeterGraph, ii: &ReducedWord) -> Result<()> {
    if ii.len() != graph.nu() || graph.word_element(ii) != *graph.w0() {
        return Err(Error::SpecMismatch(
            "word is not a reduced word of the longest element".into(),
        ));
    }
    Ok(())
}

/// The reference chart of `w0` starting with `i`.
fn front_chart(graph: &CoxeterGraph, i: Letter) -> Result<ReducedWord> {
    Ok(graph.pull_to_front(graph.w0_word(), i)?.1.clone())
}

/// Tests whether two elements over `w0` are joined by an edge, returning
/// the label of the first matching letter in letter order. Equal elements
/// are not joined (edges connect distinct vertices).
pub fn is_edge(h: &MonoidElement, other: &MonoidElement) -> Result<Option<EdgeLabel>> {
    if check_pair(h, other).is_err() || h.equals(other) {
        return Ok(None);
    }
    let graph = h.graph().clone();
    for i in graph.letters() {
        let chart = front_chart(&graph, i)?;
        let a = h.rewrite(&chart)?;
        let b = other.rewrite(&chart)?;
        if a.coords()[1..] == b.coords()[1..] {
            let scale = b.coords()[0].sdiv(&a.coords()[0])?;
            return Ok(Some(EdgeLabel { letter: i, scale }));
        }
    }
    Ok(None)
}

/// The label taking `from` to `to` along letter `i`, verified against the
/// reference chart.
fn step_label(from: &MonoidElement, to: &MonoidElement, i: Letter) -> Result<EdgeLabel> {
    let chart = front_chart(from.graph(), i)?;
    let a = from.rewrite(&chart)?;
    let b = to.rewrite(&chart)?;
    if a.coords()[1..] != b.coords()[1..] {
        return Err(Error::InternalAssertion(format!(
            "nodes are not on a common half {}-circle",
            from.graph().label(i)
        )));
    }
    Ok(EdgeLabel {
        letter: i,
        scale: b.coords()[0].sdiv(&a.coords()[0])?,
    })
}

/// Chooses the cheapest letterwise rescaling placing both elements in the
/// nonnegative stratum: in the chart `ii`, each letter is shifted by the
/// inverse of its most negative coordinate (or left alone if none).
fn nonneg_rescaling(
    ii: &ReducedWord,
    h: &MonoidElement,
    other: &MonoidElement,
) -> Result<Rescaling> {
    let graph = h.graph().clone();
    let one = h.kind().one();
    let mut mins: Vec<Option<Value>> = vec![None; graph.rank()];
    for e in [h, other] {
        let in_chart = e.rewrite(ii)?;
        for (&i, v) in ii.letters().iter().zip(in_chart.coords()) {
            mins[i.0] = Some(match &mins[i.0] {
                None => v.clone(),
                Some(m) => m.real_min(v)?,
            });
        }
    }
    let values = mins
        .into_iter()
        .map(|m| {
            let m = m.expect("every letter occurs in a word of w0");
            Ok(if m.real_ge(&one)? { one.clone() } else { m.sinv() })
        })
        .collect::<Result<Vec<_>>>()?;
    Rescaling::new(&graph, values)
}

/// Builds an explicit path from `h` to `other` over a tropical semifield:
/// at most `2ν - 1` nontrivial edges, walking `h` down its peel chain and
/// back up the other's. The peels are taken after a common rescaling into
/// the nonnegative stratum; since rescaling commutes with the action, the
/// resulting labels apply to the original elements unchanged.
pub fn path_tropical(
    h: &MonoidElement,
    other: &MonoidElement,
    ii: &ReducedWord,
) -> Result<Path> {
    check_pair(h, other)?;
    if !h.kind().has_plus_part() {
        return Err(Error::SpecMismatch(format!(
            "tropical path over {}",
            h.kind().name()
        )));
    }
    let graph = h.graph().clone();
    check_longest_word(&graph, ii)?;
    let nu = graph.nu();
    let letters = ii.letters();

    // step letters: i_1 .. i_{ν-1}, i_ν, i_{ν-1} .. i_1
    let step_letter = |k: usize| {
        if k < nu {
            letters[k]
        } else {
            letters[2 * nu - 2 - k]
        }
    };

    if h.equals(other) {
        // the two peel chains coincide; emit the fully degenerate walk
        let one = h.kind().one();
        let nodes = vec![h.clone(); 2 * nu];
        let labels = (0..2 * nu - 1)
            .map(|k| EdgeLabel {
                letter: step_letter(k),
                scale: one.clone(),
            })
            .collect();
        return Path::new(nodes, labels);
    }

    let p = nonneg_rescaling(ii, h, other)?;
    let hp = h.rescale(&p)?;
    let op = other.rescale(&p)?;
    if !hp.in_plus_part() || !op.in_plus_part() {
        return Err(Error::InternalAssertion(
            "rescaling did not reach the nonnegative stratum".into(),
        ));
    }
    let c = peel(ii, &hp)?.coords;
    let d = peel(ii, &op)?.coords;
    let c = c.values();
    let d = d.values();

    let mut nodes = vec![h.clone()];
    let mut labels = Vec::with_capacity(2 * nu - 1);
    for k in 0..2 * nu - 1 {
        let scale = if k < nu - 1 {
            c[k].sinv()
        } else if k == nu - 1 {
            d[nu - 1].sdiv(&c[nu - 1])?
        } else {
            d[2 * nu - 2 - k].clone()
        };
        let label = EdgeLabel {
            letter: step_letter(k),
            scale,
        };
        let next = nodes.last().unwrap().act(label.letter, &label.scale)?;
        nodes.push(next);
        labels.push(label);
    }
    if !nodes.last().unwrap().equals(other) {
        return Err(Error::InternalAssertion(
            "tropical path did not land on its target".into(),
        ));
    }
    Path::new(nodes, labels)
}

/// A common right factor of two elements over the positive rationals,
/// with both residues still inside the monoid.
#[derive(Debug, Clone)]
pub struct CommonBase {
    /// The factor `u`, in the chart `ii` with the halving step values as
    /// coordinates.
    pub base: MonoidElement,
    /// `u' u⁻¹`, expressed in the chart `ii`.
    pub left_residue: MonoidElement,
    /// `u'' u⁻¹`, expressed in the chart `ii`.
    pub right_residue: MonoidElement,
}

/// Finds `u` such that both `u' u⁻¹` and `u'' u⁻¹` lie in the monoid:
/// walking `ii` from its last letter to its first, both charts are pulled
/// to end with the letter, and half of the smaller trailing coordinate is
/// split off into `u`. Subtracting `c = min(a, b)/2` keeps both remainders
/// strictly positive, covering the tied case `a = b` as well.
pub fn common_base(
    u1: &MonoidElement,
    u2: &MonoidElement,
    ii: &ReducedWord,
) -> Result<CommonBase> {
    check_pair(u1, u2)?;
    if u1.kind() != SemifieldKind::RatPos {
        return Err(Error::SpecMismatch(format!(
            "ordered-field construction over {}",
            u1.kind().name()
        )));
    }
    let graph = u1.graph().clone();
    check_longest_word(&graph, ii)?;
    let nu = graph.nu();

    let mut r1 = u1.clone();
    let mut r2 = u2.clone();
    let mut steps = vec![Value::Trivial; nu];
    for k in (0..nu).rev() {
        let i = ii.letters()[k];
        r1 = r1.pulled_back(i)?;
        r2 = r2.pulled_back(i)?;
        let last = nu - 1;
        let a = &r1.coords()[last];
        let b = &r2.coords()[last];
        let c = a.real_min(b)?.halve()?;
        r1 = r1.replace_coord(last, a.field_sub(&c)?)?;
        r2 = r2.replace_coord(last, b.field_sub(&c)?)?;
        steps[k] = c;
    }
    let base = MonoidElement::from_word(graph.clone(), SemifieldKind::RatPos, ii.clone(), steps)?;
    Ok(CommonBase {
        base,
        left_residue: r1.rewrite(ii)?,
        right_residue: r2.rewrite(ii)?,
    })
}

/// Builds an explicit path from `u1` to `u2` over the positive rationals:
/// with residues `u1 u⁻¹ = i_1^{c_1} ... i_ν^{c_ν}` and
/// `u2 u⁻¹ = i_1^{d_1} ... i_ν^{d_ν}` from [`common_base`], the walk strips
/// the left generator chain of `u1` down to `i_ν^{c_ν} u`, crosses to
/// `i_ν^{d_ν} u` along the half `i_ν`-circle, and rebuilds `u2`'s chain.
pub fn path_ordered_field(
    u1: &MonoidElement,
    u2: &MonoidElement,
    ii: &ReducedWord,
) -> Result<Path> {
    let cb = common_base(u1, u2, ii)?;
    let nu = ii.len();
    let c = cb.left_residue.coords().to_vec();
    let d = cb.right_residue.coords().to_vec();

    // chains u'_1 .. u'_ν and u''_1 .. u''_ν grown from the base
    let grow = |coords: &[Value]| -> Result<Vec<MonoidElement>> {
        let mut chain = Vec::with_capacity(nu);
        let mut cur = cb.base.clone();
        for m in 0..nu {
            let k = nu - 1 - m;
            cur = cur.mul_gen_left(ii.letters()[k], &coords[k])?;
            chain.push(cur.clone());
        }
        Ok(chain)
    };
    let left_chain = grow(&c)?;
    let right_chain = grow(&d)?;
    if !left_chain[nu - 1].equals(u1) || !right_chain[nu - 1].equals(u2) {
        return Err(Error::InternalAssertion(
            "residue chains did not rebuild their endpoints".into(),
        ));
    }

    let mut nodes: Vec<MonoidElement> = left_chain.into_iter().rev().collect();
    nodes.extend(right_chain);

    let mut labels = Vec::with_capacity(2 * nu - 1);
    for k in 0..2 * nu - 1 {
        let letter = if k < nu {
            ii.letters()[k]
        } else {
            ii.letters()[2 * nu - 2 - k]
        };
        labels.push(step_label(&nodes[k], &nodes[k + 1], letter)?);
    }
    Path::new(nodes, labels)
}

/// Replays a path step by step: every consecutive pair must be reproduced
/// exactly by its label, and every nondegenerate step must be confirmed as
/// an edge by [`is_edge`].
pub fn validate_path(path: &Path) -> PathReport {
    let graph = path.first().graph().clone();
    let bound = 2 * graph.nu() - 1;
    let mut step_failures = Vec::new();
    let mut edge_failures = Vec::new();
    for k in 0..path.labels.len() {
        let label = &path.labels[k];
        let replayed = path.nodes[k].act(label.letter, &label.scale);
        match replayed {
            Ok(next) if next.equals(&path.nodes[k + 1]) => {}
            _ => step_failures.push(k),
        }
        if !label.is_degenerate() {
            match is_edge(&path.nodes[k], &path.nodes[k + 1]) {
                Ok(Some(_)) => {}
                _ => edge_failures.push(k),
            }
        }
    }
    PathReport {
        raw_edges: path.labels.len(),
        nontrivial_edges: path.nontrivial_edges(),
        bound,
        step_failures,
        edge_failures,
    }
}

/// Diagnostic breadth-first search over the finite subgraph whose
/// canonical-chart coordinates stay inside `[lo, hi]`. Only rank-2 graphs
/// over min-plus integers are supported, and the returned count is an
/// upper bound for the true graph distance (paths leaving the box are not
/// seen).
pub fn bounded_distance(
    h: &MonoidElement,
    other: &MonoidElement,
    lo: i64,
    hi: i64,
) -> Result<Option<usize>> {
    check_pair(h, other)?;
    let graph = h.graph().clone();
    if graph.rank() != 2 || h.kind() != SemifieldKind::TropInt {
        return Err(Error::SpecMismatch(
            "bounded search is a rank-2 min-plus diagnostic".into(),
        ));
    }
    let canon = |e: &MonoidElement| -> Vec<Value> { e.canonicalize().coords().to_vec() };
    let inside = |coords: &[Value]| {
        coords.iter().all(|v| {
            matches!(v, Value::TropInt(n) if *n >= lo.into() && *n <= hi.into())
        })
    };
    let start = canon(h);
    let target = canon(other);
    if !inside(&start) || !inside(&target) {
        return Err(Error::SpecMismatch("endpoints outside the box".into()));
    }
    let element_from = |coords: Vec<Value>| {
        MonoidElement::from_word(
            graph.clone(),
            SemifieldKind::TropInt,
            graph.w0_word().clone(),
            coords,
        )
    };
    let mut dist: HashMap<Vec<Value>, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(start.clone(), 0);
    queue.push_back(start);
    while let Some(state) = queue.pop_front() {
        let d = dist[&state];
        if state == target {
            return Ok(Some(d));
        }
        let e = element_from(state)?;
        for i in graph.letters() {
            let front = e.rewrite(&front_chart(&graph, i)?)?;
            for v in lo..=hi {
                let moved = front.replace_coord(0, Value::trop_int(v))?;
                let key = canon(&moved);
                if inside(&key) && !dist.contains_key(&key) {
                    dist.insert(key.clone(), d + 1);
                    queue.push_back(key);
                }
            }
        }
    }
    Ok(None)
}
