//! Elements of the generator/relation monoid in reduced-word charts.
//!
//! For a word `w` of length `n`, an element of the stratum over `w` is
//! stored as a reduced word of `w` together with a vector of `n`
//! semifield coordinates. The defining relations transport coordinates
//! between charts:
//!
//! * a commutation move swaps the two coordinates;
//! * a braid move `(i, j, i) -> (j, i, j)` maps `(a, b, c)` to
//!   `(b⊗c ⊘ (a⊕c), a⊕c, a⊗b ⊘ (a⊕c))`, which tropically is the
//!   piecewise-linear map `(b+c-min(a,c), min(a,c), a+b-min(a,c))`.
//!
//! Elements keep whatever chart they were last computed in; equality
//! rewrites both sides to the lexicographically smallest reduced word and
//! compares coordinate vectors exactly.

use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::coxeter::{CoxeterGraph, Letter, Move, MoveKind, MovePlan, ReducedWord, WeylElement};
use crate::error::{Error, Result};
use crate::semifield::{SemifieldKind, Value};

/// Hooks for negative-control testing only. When the braid corruption flag
/// is set, coordinate transport applies a deliberately wrong braid map so
/// that verification suites can demonstrate they catch it.
#[doc(hidden)]
pub mod testing {
    use super::AtomicBool;
    pub static CORRUPT_BRAID: AtomicBool = AtomicBool::new(false);
}

/// A letter-indexed family of scalars, acting on elements by multiplying
/// the coordinate at every position carrying that letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rescaling {
    values: Vec<Value>,
}

impl Rescaling {
    /// Builds a rescaling from one value per letter, in letter order.
    pub fn new(graph: &CoxeterGraph, values: Vec<Value>) -> Result<Rescaling> {
        if values.len() != graph.rank() {
            return Err(Error::LengthMismatch {
                got: values.len(),
                want: graph.rank(),
            });
        }
        for pair in values.windows(2) {
            if pair[0].kind() != pair[1].kind() {
                return Err(Error::MixedSemifields(
                    pair[0].kind().name().to_string(),
                    pair[1].kind().name().to_string(),
                ));
            }
        }
        Ok(Rescaling { values })
    }

    /// The identity rescaling (every letter scaled by the unit).
    pub fn identity(graph: &CoxeterGraph, kind: SemifieldKind) -> Rescaling {
        Rescaling {
            values: vec![kind.one(); graph.rank()],
        }
    }

    pub fn value(&self, i: Letter) -> &Value {
        &self.values[i.0]
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    /// The pointwise inverse rescaling.
    pub fn inverse(&self) -> Rescaling {
        Rescaling {
            values: self.values.iter().map(Value::sinv).collect(),
        }
    }
}

/// An element of the monoid: a chart (reduced word) plus exact coordinates.
#[derive(Debug, Clone)]
pub struct MonoidElement {
    graph: Arc<CoxeterGraph>,
    kind: SemifieldKind,
    w: WeylElement,
    word: ReducedWord,
    coords: Vec<Value>,
}

impl MonoidElement {
    /// Builds the element `i_1^{a_1} ... i_n^{a_n}` from a reduced word and
    /// matching coordinates.
    pub fn from_word(
        graph: Arc<CoxeterGraph>,
        kind: SemifieldKind,
        word: ReducedWord,
        coords: Vec<Value>,
    ) -> Result<MonoidElement> {
        if coords.len() != word.len() {
            return Err(Error::LengthMismatch {
                got: coords.len(),
                want: word.len(),
            });
        }
        for c in &coords {
            if c.kind() != kind {
                return Err(Error::MixedSemifields(
                    kind.name().to_string(),
                    c.kind().name().to_string(),
                ));
            }
            if let Value::RatPos(q) = c {
                if !num_traits::Signed::is_positive(q) {
                    return Err(Error::NotPositive(q.to_string()));
                }
            }
        }
        let w = graph.word_element(&word);
        Ok(MonoidElement {
            graph,
            kind,
            w,
            word,
            coords,
        })
    }

    /// Same as [`from_word`] but validates the letter sequence first.
    ///
    /// [`from_word`]: MonoidElement::from_word
    pub fn from_letters(
        graph: Arc<CoxeterGraph>,
        kind: SemifieldKind,
        letters: Vec<Letter>,
        coords: Vec<Value>,
    ) -> Result<MonoidElement> {
        let word = graph.reduced_word(letters)?;
        MonoidElement::from_word(graph, kind, word, coords)
    }

    /// The identity element (empty word).
    pub fn one(graph: Arc<CoxeterGraph>, kind: SemifieldKind) -> MonoidElement {
        let w = graph.identity();
        MonoidElement {
            graph,
            kind,
            w,
            word: ReducedWord::unchecked(Vec::new()),
            coords: Vec::new(),
        }
    }

    /// The base point of the nonnegative stratum over `w0`: every chart
    /// coordinate is the unit (tropically, zero). Defined for semifields
    /// with a nonnegative part.
    pub fn base_point(graph: Arc<CoxeterGraph>, kind: SemifieldKind) -> Result<MonoidElement> {
        if !kind.has_plus_part() {
            return Err(Error::NoPlusPart(kind.name().to_string()));
        }
        let word = graph.w0_word().clone();
        let coords = vec![kind.one(); word.len()];
        MonoidElement::from_word(graph, kind, word, coords)
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn kind(&self) -> SemifieldKind {
        self.kind
    }

    pub fn weyl(&self) -> &WeylElement {
        &self.w
    }

    /// The current chart.
    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    /// Coordinates in the current chart.
    pub fn coords(&self) -> &[Value] {
        &self.coords
    }

    pub fn is_over_w0(&self) -> bool {
        self.w == *self.graph.w0()
    }

    fn check_compatible(&self, other: &MonoidElement) -> Result<()> {
        if *self.graph != *other.graph {
            return Err(Error::SpecMismatch("different Coxeter graphs".into()));
        }
        if self.kind != other.kind {
            return Err(Error::SpecMismatch(format!(
                "{} vs {}",
                self.kind.name(),
                other.kind.name()
            )));
        }
        Ok(())
    }

    // ---- chart changes -------------------------------------------------

    fn transport(&self, letters: &mut [Letter], coords: &mut [Value], plan: &MovePlan) -> Result<()> {
        for &m in &plan.moves {
            self.graph.apply_move(letters, m)?;
            transport_coords(coords, m)?;
        }
        Ok(())
    }

    /// The same abstract element, expressed in the chart `to`.
    pub fn rewrite(&self, to: &ReducedWord) -> Result<MonoidElement> {
        if self.word == *to {
            return Ok(self.clone());
        }
        let plan = self.graph.rewrite_plan(&self.word, to)?;
        let mut letters = self.word.letters().to_vec();
        let mut coords = self.coords.clone();
        self.transport(&mut letters, &mut coords, &plan)?;
        Ok(MonoidElement {
            graph: self.graph.clone(),
            kind: self.kind,
            w: self.w.clone(),
            word: ReducedWord::unchecked(letters),
            coords,
        })
    }

    /// Rewrites into the lexicographically smallest chart of this element.
    pub fn canonicalize(&self) -> MonoidElement {
        let target = self.graph.lex_min_word(&self.w);
        self.rewrite(&target)
            .expect("rewriting to the canonical chart cannot fail")
    }

    /// Chart-independent equality: both sides are rewritten to the
    /// canonical chart and compared exactly. Elements over different group
    /// elements (or different graphs/semifields) are unequal.
    pub fn equals(&self, other: &MonoidElement) -> bool {
        if self.check_compatible(other).is_err() || self.w != other.w {
            return false;
        }
        if self.word == other.word {
            return self.coords == other.coords;
        }
        let a = self.canonicalize();
        let b = other.canonicalize();
        a.coords == b.coords
    }

    // ---- multiplication --------------------------------------------------

    /// Right multiplication by the generator `i^a`.
    pub fn mul_gen_right(&self, i: Letter, a: &Value) -> Result<MonoidElement> {
        self.check_value(a)?;
        if self.graph.is_right_descent(&self.w, i) {
            let (plan, back) = self.graph.pull_to_back(&self.word, i)?;
            let mut letters = self.word.letters().to_vec();
            let mut coords = self.coords.clone();
            self.transport(&mut letters, &mut coords, &plan)?;
            debug_assert_eq!(letters, back.letters());
            let last = coords.len() - 1;
            coords[last] = coords[last].splus(a)?;
            Ok(MonoidElement {
                graph: self.graph.clone(),
                kind: self.kind,
                w: self.w.clone(),
                word: back,
                coords,
            })
        } else {
            let mut letters = self.word.letters().to_vec();
            letters.push(i);
            let mut coords = self.coords.clone();
            coords.push(a.clone());
            Ok(MonoidElement {
                graph: self.graph.clone(),
                kind: self.kind,
                w: self.graph.mul_gen_right(&self.w, i),
                word: ReducedWord::unchecked(letters),
                coords,
            })
        }
    }

    /// Left multiplication by the generator `i^a`.
    pub fn mul_gen_left(&self, i: Letter, a: &Value) -> Result<MonoidElement> {
        self.check_value(a)?;
        if self.graph.is_left_descent(&self.w, i) {
            let front = self.graph.pull_to_front(&self.word, i)?;
            let mut letters = self.word.letters().to_vec();
            let mut coords = self.coords.clone();
            self.transport(&mut letters, &mut coords, &front.0)?;
            coords[0] = coords[0].splus(a)?;
            Ok(MonoidElement {
                graph: self.graph.clone(),
                kind: self.kind,
                w: self.w.clone(),
                word: ReducedWord::unchecked(letters),
                coords,
            })
        } else {
            let mut letters = Vec::with_capacity(self.word.len() + 1);
            letters.push(i);
            letters.extend_from_slice(self.word.letters());
            let mut coords = Vec::with_capacity(self.coords.len() + 1);
            coords.push(a.clone());
            coords.extend_from_slice(&self.coords);
            Ok(MonoidElement {
                graph: self.graph.clone(),
                kind: self.kind,
                w: self.graph.mul_gen_left(i, &self.w),
                word: ReducedWord::unchecked(letters),
                coords,
            })
        }
    }

    /// Full monoid product: absorbs the other element's generators from
    /// left to right. The result does not depend on the other element's
    /// chart.
    pub fn mul(&self, other: &MonoidElement) -> Result<MonoidElement> {
        self.check_compatible(other)?;
        let mut acc = self.clone();
        for (i, a) in other.word.letters().iter().zip(&other.coords) {
            acc = acc.mul_gen_right(*i, a)?;
        }
        Ok(acc)
    }

    fn check_value(&self, a: &Value) -> Result<()> {
        if a.kind() != self.kind {
            return Err(Error::MixedSemifields(
                self.kind.name().to_string(),
                a.kind().name().to_string(),
            ));
        }
        if let Value::RatPos(q) = a {
            if !num_traits::Signed::is_positive(q) {
                return Err(Error::NotPositive(q.to_string()));
            }
        }
        Ok(())
    }

    // ---- the half-circle action and friends -----------------------------

    /// The action of the scalar `a` at letter `i`: pulls the chart to start
    /// with `i` and multiplies the leading coordinate by `a`. Orbits of
    /// this action are the half `i`-circles. Requires `i` to be a left
    /// descent of the underlying group element (always true over `w0`).
    pub fn act(&self, i: Letter, a: &Value) -> Result<MonoidElement> {
        self.check_value(a)?;
        let mut e = self.pulled_front(i)?;
        e.coords[0] = e.coords[0].sprod(a)?;
        Ok(e)
    }

    /// The leading coordinate in a chart starting with `i`.
    pub fn leading(&self, i: Letter) -> Result<Value> {
        Ok(self.pulled_front(i)?.coords[0].clone())
    }

    fn pulled_front(&self, i: Letter) -> Result<MonoidElement> {
        if self.word.first() == Some(i) {
            return Ok(self.clone());
        }
        if !self.graph.is_left_descent(&self.w, i) {
            return Err(Error::NotADescent {
                letter: self.graph.label(i).to_string(),
                side: "left",
            });
        }
        let front = self.graph.pull_to_front(&self.word, i)?;
        let mut letters = self.word.letters().to_vec();
        let mut coords = self.coords.clone();
        self.transport(&mut letters, &mut coords, &front.0)?;
        Ok(MonoidElement {
            graph: self.graph.clone(),
            kind: self.kind,
            w: self.w.clone(),
            word: ReducedWord::unchecked(letters),
            coords,
        })
    }

    /// The element in a chart ending with `i` (a right descent).
    pub(crate) fn pulled_back(&self, i: Letter) -> Result<MonoidElement> {
        if self.word.last() == Some(i) {
            return Ok(self.clone());
        }
        let (plan, back) = self.graph.pull_to_back(&self.word, i)?;
        let mut letters = self.word.letters().to_vec();
        let mut coords = self.coords.clone();
        self.transport(&mut letters, &mut coords, &plan)?;
        debug_assert_eq!(letters, back.letters());
        Ok(MonoidElement {
            graph: self.graph.clone(),
            kind: self.kind,
            w: self.w.clone(),
            word: back,
            coords,
        })
    }

    /// Replaces one coordinate in the current chart.
    pub(crate) fn replace_coord(&self, idx: usize, value: Value) -> Result<MonoidElement> {
        self.check_value(&value)?;
        let mut coords = self.coords.clone();
        coords[idx] = value;
        Ok(MonoidElement {
            graph: self.graph.clone(),
            kind: self.kind,
            w: self.w.clone(),
            word: self.word.clone(),
            coords,
        })
    }

    /// Letterwise rescaling: the coordinate at every position is multiplied
    /// by the rescaling value of that position's letter. A monoid
    /// automorphism; commutes with [`act`].
    ///
    /// [`act`]: MonoidElement::act
    pub fn rescale(&self, p: &Rescaling) -> Result<MonoidElement> {
        if p.values.len() != self.graph.rank() {
            return Err(Error::LengthMismatch {
                got: p.values.len(),
                want: self.graph.rank(),
            });
        }
        let coords = self
            .word
            .letters()
            .iter()
            .zip(&self.coords)
            .map(|(&i, c)| c.sprod(p.value(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonoidElement {
            graph: self.graph.clone(),
            kind: self.kind,
            w: self.w.clone(),
            word: self.word.clone(),
            coords,
        })
    }

    /// Membership in the nonnegative stratum: every coordinate of the
    /// canonical chart lies in `K+`. Chart-independence of this test is a
    /// verified invariant. For semifields without a nonnegative part the
    /// whole semifield counts as nonnegative.
    pub fn in_plus_part(&self) -> bool {
        if !self.kind.has_plus_part() {
            return true;
        }
        let canonical = self.canonicalize();
        canonical
            .coords
            .iter()
            .all(|c| c.in_plus_part().unwrap_or(false))
    }

    /// The zero-pattern map: reading the current chart, takes the product
    /// of `s_i` over positions with coordinate zero in the idempotent
    /// (Demazure) sense `w * s_i = max(w s_i, w)`. Defined on the
    /// nonnegative stratum of a tropical semifield; the result does not
    /// depend on the chart.
    pub fn zero_pattern(&self) -> Result<WeylElement> {
        if !self.kind.has_plus_part() {
            return Err(Error::NoPlusPart(self.kind.name().to_string()));
        }
        let mut w = self.graph.identity();
        for (i, c) in self.word.letters().iter().zip(&self.coords) {
            if !c.in_plus_part()? {
                return Err(Error::NotInPlusPart);
            }
            if c.is_one() && !self.graph.is_right_descent(&w, *i) {
                w = self.graph.mul_gen_right(&w, *i);
            }
        }
        Ok(w)
    }

    /// Verification mode for [`zero_pattern`]: recomputes the pattern in
    /// each of the supplied charts and fails if any disagree.
    ///
    /// [`zero_pattern`]: MonoidElement::zero_pattern
    pub fn zero_pattern_checked(&self, charts: &[ReducedWord]) -> Result<WeylElement> {
        let expected = self.zero_pattern()?;
        for chart in charts {
            let got = self.rewrite(chart)?.zero_pattern()?;
            if got != expected {
                return Err(Error::InternalAssertion(
                    "zero pattern differs between charts".into(),
                ));
            }
        }
        Ok(expected)
    }
}

/// Transports a coordinate vector along one elementary move: commutation
/// moves swap the two coordinates, braid moves apply the subtraction-free
/// chart-change map (an involution).
pub fn transport_coords(coords: &mut [Value], m: Move) -> Result<()> {
    match m.kind {
        MoveKind::Commute => coords.swap(m.pos, m.pos + 1),
        MoveKind::Braid => {
            let (a, b, c) = (
                coords[m.pos].clone(),
                coords[m.pos + 1].clone(),
                coords[m.pos + 2].clone(),
            );
            let mid = a.splus(&c)?;
            if testing::CORRUPT_BRAID.load(AtomicOrdering::Relaxed) {
                // deliberately wrong transport for negative-control runs
                coords[m.pos] = b.sprod(&c)?.sdiv(&mid)?;
                coords[m.pos + 1] = mid;
                coords[m.pos + 2] = a;
                return Ok(());
            }
            coords[m.pos] = b.sprod(&c)?.sdiv(&mid)?;
            coords[m.pos + 2] = a.sprod(&b)?.sdiv(&mid)?;
            coords[m.pos + 1] = mid;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a2() -> Arc<CoxeterGraph> {
        CoxeterGraph::parse("A2").unwrap()
    }

    fn trop(graph: &Arc<CoxeterGraph>, labels: &str, coords: &[i64]) -> MonoidElement {
        let word = graph.reduced_word_from_labels(labels).unwrap();
        let coords = coords.iter().map(|&n| Value::trop_int(n)).collect();
        MonoidElement::from_word(graph.clone(), SemifieldKind::TropInt, word, coords).unwrap()
    }

    fn ratpos(graph: &Arc<CoxeterGraph>, labels: &str, coords: &[(i64, i64)]) -> MonoidElement {
        let word = graph.reduced_word_from_labels(labels).unwrap();
        let coords = coords
            .iter()
            .map(|&(n, d)| Value::rat_pos_from(n, d).unwrap())
            .collect();
        MonoidElement::from_word(graph.clone(), SemifieldKind::RatPos, word, coords).unwrap()
    }

    fn h0() -> MonoidElement {
        trop(&a2(), "1 2 1", &[2, 5, 3])
    }

    fn ints(e: &MonoidElement) -> Vec<i64> {
        e.coords()
            .iter()
            .map(|c| match c {
                Value::TropInt(n) => i64::try_from(n).unwrap(),
                _ => panic!("expected trop-int"),
            })
            .collect()
    }

    #[test]
    fn from_word_validates() {
        let g = a2();
        // non-reduced word rejected
        let res = g.reduced_word_from_labels("1 1 2");
        assert!(matches!(res, Err(Error::NotReduced(1))));
        // length mismatch
        let word = g.reduced_word_from_labels("1 2").unwrap();
        assert!(matches!(
            MonoidElement::from_word(
                g.clone(),
                SemifieldKind::TropInt,
                word,
                vec![Value::trop_int(1)]
            ),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn rewrite_braid_example() {
        let e = h0();
        let g = e.graph().clone();
        let to = g.reduced_word_from_labels("2 1 2").unwrap();
        let r = e.rewrite(&to).unwrap();
        assert_eq!(ints(&r), vec![6, 2, 5]);
        // applying the inverse rewrite returns the original coordinates
        let back = r.rewrite(e.word()).unwrap();
        assert_eq!(ints(&back), vec![2, 5, 3]);
    }

    #[test]
    fn rewrite_fixes_zero_vector() {
        let g = a2();
        let e = trop(&g, "1 2 1", &[0, 0, 0]);
        let to = g.reduced_word_from_labels("2 1 2").unwrap();
        assert_eq!(ints(&e.rewrite(&to).unwrap()), vec![0, 0, 0]);
    }

    #[test]
    fn rewrite_rat_pos_example() {
        let g = a2();
        let e = ratpos(&g, "1 2 1", &[(1, 1), (1, 1), (1, 1)]);
        let to = g.reduced_word_from_labels("2 1 2").unwrap();
        let r = e.rewrite(&to).unwrap();
        let expect = vec![
            Value::rat_pos_from(1, 2).unwrap(),
            Value::rat_pos_from(2, 1).unwrap(),
            Value::rat_pos_from(1, 2).unwrap(),
        ];
        assert_eq!(r.coords(), expect.as_slice());
    }

    #[test]
    fn equality_examples() {
        let g = a2();
        let e1 = h0();
        let to = g.reduced_word_from_labels("2 1 2").unwrap();
        let e2 = MonoidElement::from_word(
            g.clone(),
            SemifieldKind::TropInt,
            to,
            [6, 2, 5].iter().map(|&n| Value::trop_int(n)).collect(),
        )
        .unwrap();
        assert!(e1.equals(&e2));
        let f1 = trop(&g, "1 2 1", &[1, 1, 0]);
        let f2 = trop(&g, "1 2 1", &[1, 0, 1]);
        assert!(!f1.equals(&f2));
        assert!(f1.equals(&f1));
        // cross-chart coordinates of the two unequal elements
        let to = g.reduced_word_from_labels("2 1 2").unwrap();
        assert_eq!(ints(&f1.rewrite(&to).unwrap()), vec![1, 0, 2]);
        assert_eq!(ints(&f2.rewrite(&to).unwrap()), vec![0, 1, 0]);
    }

    #[test]
    fn gen_multiplication() {
        let g = a2();
        let e = h0();
        // left: 1^1 * H0 merges into the first coordinate
        let l = e.mul_gen_left(Letter(0), &Value::trop_int(1)).unwrap();
        assert_eq!(ints(&l), vec![1, 5, 3]);
        // base point is idempotent
        let hh = MonoidElement::base_point(g.clone(), SemifieldKind::TropInt).unwrap();
        assert!(hh.mul(&hh).unwrap().equals(&hh));
        // trivial semifield: absorbing a repeated generator keeps w0
        let t = MonoidElement::from_word(
            g.clone(),
            SemifieldKind::Trivial,
            g.reduced_word_from_labels("1 2 1").unwrap(),
            vec![Value::Trivial; 3],
        )
        .unwrap();
        let t2 = t.mul_gen_left(Letter(0), &Value::Trivial).unwrap();
        assert!(t2.equals(&t));
        assert_eq!(t2.weyl(), g.w0());
    }

    #[test]
    fn multiply_examples() {
        let g = a2();
        let e = h0();
        let one = MonoidElement::one(g.clone(), SemifieldKind::TropInt);
        assert!(e.mul(&one).unwrap().equals(&e));
        assert!(one.mul(&e).unwrap().equals(&e));
        // trop: 1^2 * 1^3 = 1^min(2,3)
        let g2 = a2();
        let x = MonoidElement::from_letters(
            g2.clone(),
            SemifieldKind::TropInt,
            vec![Letter(0)],
            vec![Value::trop_int(2)],
        )
        .unwrap();
        let y = MonoidElement::from_letters(
            g2.clone(),
            SemifieldKind::TropInt,
            vec![Letter(0)],
            vec![Value::trop_int(3)],
        )
        .unwrap();
        assert_eq!(ints(&x.mul(&y).unwrap()), vec![2]);
        // rat-pos: 1^2 * 1^3 = 1^5
        let x = MonoidElement::from_letters(
            g2.clone(),
            SemifieldKind::RatPos,
            vec![Letter(0)],
            vec![Value::rat_pos_from(2, 1).unwrap()],
        )
        .unwrap();
        let y = MonoidElement::from_letters(
            g2.clone(),
            SemifieldKind::RatPos,
            vec![Letter(0)],
            vec![Value::rat_pos_from(3, 1).unwrap()],
        )
        .unwrap();
        assert_eq!(
            x.mul(&y).unwrap().coords(),
            &[Value::rat_pos_from(5, 1).unwrap()]
        );
    }

    #[test]
    fn act_examples() {
        let e = h0();
        let r = e.act(Letter(0), &Value::trop_int(4)).unwrap();
        assert_eq!(ints(&r), vec![6, 5, 3]);
        // acting at letter 2 first pulls the chart
        let r = e.act(Letter(1), &Value::trop_int(-1)).unwrap();
        assert_eq!(r.word(), &e.graph().reduced_word_from_labels("2 1 2").unwrap());
        assert_eq!(ints(&r), vec![5, 2, 5]);
        // unit action is the identity
        let r = e.act(Letter(0), &Value::trop_int(0)).unwrap();
        assert!(r.equals(&e));
        // not a descent below w0
        let g = a2();
        let s = trop(&g, "1", &[3]);
        assert!(matches!(
            s.act(Letter(1), &Value::trop_int(1)),
            Err(Error::NotADescent { .. })
        ));
    }

    #[test]
    fn leading_examples() {
        let e = h0();
        assert_eq!(e.leading(Letter(0)).unwrap(), Value::trop_int(2));
        assert_eq!(e.leading(Letter(1)).unwrap(), Value::trop_int(6));
        let hh = MonoidElement::base_point(a2(), SemifieldKind::TropInt).unwrap();
        for i in [Letter(0), Letter(1)] {
            assert_eq!(hh.leading(i).unwrap(), Value::trop_int(0));
        }
    }

    #[test]
    fn rescale_examples() {
        let g = a2();
        let e = h0();
        let p = Rescaling::new(&g, vec![Value::trop_int(3), Value::trop_int(-1)]).unwrap();
        assert_eq!(ints(&e.rescale(&p).unwrap()), vec![5, 4, 6]);
        let id = Rescaling::identity(&g, SemifieldKind::TropInt);
        assert!(e.rescale(&id).unwrap().equals(&e));
        // rescalings are total on the letter set and single-kinded
        assert!(matches!(
            Rescaling::new(&g, vec![Value::trop_int(1)]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            Rescaling::new(&g, vec![Value::trop_int(1), Value::Trivial]),
            Err(Error::MixedSemifields(_, _))
        ));
        let inv = p.inverse();
        assert!(e.rescale(&p).unwrap().rescale(&inv).unwrap().equals(&e));
    }

    #[test]
    fn zero_pattern_examples() {
        let g = a2();
        let e = trop(&g, "1 2 1", &[0, 5, 3]);
        assert_eq!(e.zero_pattern().unwrap(), g.generator(Letter(0)));
        // repeated zero letters merge idempotently; consistent across charts
        let e = trop(&g, "1 2 1", &[0, 5, 0]);
        assert_eq!(e.zero_pattern().unwrap(), g.generator(Letter(0)));
        let other = g.reduced_word_from_labels("2 1 2").unwrap();
        let r = e.rewrite(&other).unwrap();
        assert_eq!(ints(&r), vec![5, 0, 5]);
        assert_eq!(r.zero_pattern().unwrap(), g.generator(Letter(0)));
        // base point maps to w0
        let hh = MonoidElement::base_point(g.clone(), SemifieldKind::TropInt).unwrap();
        assert_eq!(&hh.zero_pattern().unwrap(), g.w0());
        // negative coordinate is outside the domain
        let e = trop(&g, "1 2 1", &[-1, 0, 0]);
        assert!(matches!(e.zero_pattern(), Err(Error::NotInPlusPart)));
    }

    #[test]
    fn base_point_zero_in_every_chart() {
        let g = a2();
        let hh = MonoidElement::base_point(g.clone(), SemifieldKind::TropInt).unwrap();
        for chart in g
            .enumerate_reduced_words(g.w0(), 10)
            .unwrap()
        {
            assert_eq!(ints(&hh.rewrite(&chart).unwrap()), vec![0, 0, 0]);
        }
        assert!(MonoidElement::base_point(g, SemifieldKind::RatPos).is_err());
    }

    #[test]
    fn plus_part_membership() {
        let e = h0();
        assert!(e.in_plus_part());
        let g = a2();
        let f = trop(&g, "1 2 1", &[-1, 0, 0]);
        assert!(!f.in_plus_part());
        // one action step can leave the nonnegative stratum
        let out = e.act(Letter(0), &Value::trop_int(-3)).unwrap();
        assert!(!out.in_plus_part());
    }

    #[test]
    fn shared_graph_supports_concurrent_use() {
        let g = CoxeterGraph::parse("A3").unwrap();
        let handles: Vec<_> = (0..4)
            .map(|t| {
                let g = g.clone();
                std::thread::spawn(move || {
                    let words = g.enumerate_reduced_words(g.w0(), 32).unwrap();
                    let coords: Vec<Value> =
                        (0..6).map(|k| Value::trop_int((t * k) as i64 - 5)).collect();
                    let e = MonoidElement::from_word(
                        g.clone(),
                        SemifieldKind::TropInt,
                        words[t].clone(),
                        coords,
                    )
                    .unwrap();
                    let mut cur = e.clone();
                    for w in &words {
                        cur = cur.rewrite(w).unwrap();
                    }
                    assert!(cur.rewrite(e.word()).unwrap().equals(&e));
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
    }

    #[test]
    fn identity_6b_left_multiplication_via_action() {
        let g = a2();
        let cases = [
            (trop(&g, "1 2 1", &[2, 5, 3]), Value::trop_int(-4)),
            (trop(&g, "1 2 1", &[0, 1, 7]), Value::trop_int(2)),
        ];
        for (h, c) in cases {
            for i in [Letter(0), Letter(1)] {
                let z = h.leading(i).unwrap();
                let ratio = c.splus(&z).unwrap().sdiv(&z).unwrap();
                let lhs = h.mul_gen_left(i, &c).unwrap();
                let rhs = h.act(i, &ratio).unwrap();
                assert!(lhs.equals(&rhs));
            }
        }
    }

    proptest! {
        #[test]
        fn braid_transport_is_an_involution(
            vals in prop_oneof![
                proptest::collection::vec((-30i64..=30).prop_map(Value::trop_int), 3),
                proptest::collection::vec(
                    ((1i64..=40), (1i64..=9)).prop_map(|(n, d)| Value::rat_pos_from(n, d).unwrap()),
                    3
                ),
            ]
        ) {
            let mut coords = vals.clone();
            let m = Move { pos: 0, kind: MoveKind::Braid };
            transport_coords(&mut coords, m).unwrap();
            transport_coords(&mut coords, m).unwrap();
            prop_assert_eq!(coords, vals);
        }

        #[test]
        fn matsumoto_consistency_a3(coords in proptest::collection::vec(-20i64..=20, 6)) {
            let g = CoxeterGraph::parse("A3").unwrap();
            let words = g.enumerate_reduced_words(g.w0(), 100).unwrap();
            let e = MonoidElement::from_word(
                g.clone(),
                SemifieldKind::TropInt,
                words[0].clone(),
                coords.iter().map(|&n| Value::trop_int(n)).collect(),
            ).unwrap();
            // a chart cycle through three other words returns the exact vector
            let cycle = [&words[5], &words[11], &words[15], &words[0]];
            let mut cur = e.clone();
            for chart in cycle {
                cur = cur.rewrite(chart).unwrap();
            }
            prop_assert_eq!(cur.coords(), e.coords());
        }

        #[test]
        fn action_is_a_group_action(a in -20i64..=20, b in -20i64..=20,
                                     coords in proptest::collection::vec(-20i64..=20, 3)) {
            let g = CoxeterGraph::parse("A2").unwrap();
            let e = MonoidElement::from_word(
                g.clone(),
                SemifieldKind::TropInt,
                g.reduced_word_from_labels("1 2 1").unwrap(),
                coords.iter().map(|&n| Value::trop_int(n)).collect(),
            ).unwrap();
            for i in [Letter(0), Letter(1)] {
                let va = Value::trop_int(a);
                let vb = Value::trop_int(b);
                let two_steps = e.act(i, &va).unwrap().act(i, &vb).unwrap();
                let one_step = e.act(i, &va.sprod(&vb).unwrap()).unwrap();
                prop_assert!(two_steps.equals(&one_step));
            }
        }

        #[test]
        fn rescaling_commutes_with_action_and_rewrite(
            coords in proptest::collection::vec(-15i64..=15, 3),
            p0 in -10i64..=10, p1 in -10i64..=10, a in -10i64..=10,
        ) {
            let g = CoxeterGraph::parse("A2").unwrap();
            let e = MonoidElement::from_word(
                g.clone(),
                SemifieldKind::TropInt,
                g.reduced_word_from_labels("1 2 1").unwrap(),
                coords.iter().map(|&n| Value::trop_int(n)).collect(),
            ).unwrap();
            let p = Rescaling::new(&g, vec![Value::trop_int(p0), Value::trop_int(p1)]).unwrap();
            let va = Value::trop_int(a);
            for i in [Letter(0), Letter(1)] {
                let lhs = e.rescale(&p).unwrap().act(i, &va).unwrap();
                let rhs = e.act(i, &va).unwrap().rescale(&p).unwrap();
                prop_assert!(lhs.equals(&rhs));
            }
            // rescale then rewrite agrees with rewrite then rescale
            let v = g.reduced_word_from_labels("2 1 2").unwrap();
            let lhs = e.rescale(&p).unwrap().rewrite(&v).unwrap();
            let rhs = e.rewrite(&v).unwrap().rescale(&p).unwrap();
            prop_assert!(lhs.equals(&rhs));
        }

        #[test]
        fn action_preserves_nonnegative_stratum(
            coords in proptest::collection::vec(0i64..=12, 3),
            a in 0i64..=12,
        ) {
            let g = CoxeterGraph::parse("A2").unwrap();
            let e = MonoidElement::from_word(
                g.clone(),
                SemifieldKind::TropInt,
                g.reduced_word_from_labels("1 2 1").unwrap(),
                coords.iter().map(|&n| Value::trop_int(n)).collect(),
            ).unwrap();
            prop_assert!(e.in_plus_part());
            for i in [Letter(0), Letter(1)] {
                prop_assert!(e.act(i, &Value::trop_int(a)).unwrap().in_plus_part());
            }
        }

        #[test]
        fn product_ignores_right_factor_chart(
            c1 in proptest::collection::vec(-9i64..=9, 3),
            c2 in proptest::collection::vec(-9i64..=9, 3),
        ) {
            let g = CoxeterGraph::parse("A2").unwrap();
            let mk = |labels: &str, cs: &[i64]| {
                let word = g.reduced_word_from_labels(labels).unwrap();
                MonoidElement::from_word(
                    g.clone(),
                    SemifieldKind::TropInt,
                    word,
                    cs.iter().map(|&n| Value::trop_int(n)).collect(),
                ).unwrap()
            };
            let e1 = mk("1 2 1", &c1);
            let e2 = mk("1 2 1", &c2);
            let e2_other = e2.rewrite(&g.reduced_word_from_labels("2 1 2").unwrap()).unwrap();
            prop_assert!(e1.mul(&e2).unwrap().equals(&e1.mul(&e2_other).unwrap()));
        }
    }
}
