//! Simply-laced Weyl group machinery.
//!
//! A [`CoxeterGraph`] holds the Cartan datum of a disjoint union of type
//! A/D/E diagrams: an ordered letter set `I` and the pairing `i.j` with
//! `i.i = 2` and `i.j ∈ {0, -1}` off the diagonal. Finiteness of the Weyl
//! group is enforced at construction, so the longest element `w0` and its
//! length `ν` always exist.
//!
//! Group elements are encoded by their action on the root lattice in the
//! simple-root basis ([`WeylElement`] stores the matrix and its inverse);
//! length is the number of positive roots sent negative. Reduced words are
//! rewritten into one another by elementary moves (commutations and braid
//! moves), and [`CoxeterGraph::pull_to_front`] produces a deterministic
//! [`MovePlan`] bringing a left descent to the front of a word.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};

/// Index of a generator letter in its graph's ordered letter list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub usize);

/// One elementary rewrite: swap two commuting letters, or rotate a
/// length-3 braid pattern `(i, j, i) -> (j, i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    Commute,
    Braid,
}

/// An elementary move anchored at a 0-based word position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub pos: usize,
    pub kind: MoveKind,
}

/// A sequence of elementary moves; applying it to its source word yields a
/// reduced word of the same element at every step.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MovePlan {
    pub moves: Vec<Move>,
}

impl MovePlan {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

impl fmt::Display for MovePlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for m in &self.moves {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match m.kind {
                MoveKind::Commute => write!(f, "commute@{}", m.pos)?,
                MoveKind::Braid => write!(f, "braid@{}", m.pos)?,
            }
        }
        Ok(())
    }
}

/// A reduced word: a sequence of letters whose product has length equal to
/// the sequence length. Constructed through [`CoxeterGraph`] methods, which
/// validate reducedness.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub(crate) fn unchecked(letters: Vec<Letter>) -> Self {
        ReducedWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }
}

/// A Weyl group element, encoded by its action on the root lattice in the
/// simple-root basis. `mat` and `inv` are the matrices of `w` and `w⁻¹`
/// (row-major); `len` is the Coxeter length.
#[derive(Debug, Clone)]
pub struct WeylElement {
    mat: Vec<i64>,
    inv: Vec<i64>,
    rank: usize,
    len: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.mat == other.mat
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// The inverse element (the stored matrix pair is swapped).
    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            mat: self.inv.clone(),
            inv: self.mat.clone(),
            rank: self.rank,
            len: self.len,
        }
    }

    /// Column `j` of the action matrix: the image of the simple root `α_j`.
    fn image_of_simple(&self, j: usize) -> impl Iterator<Item = i64> + '_ {
        (0..self.rank).map(move |r| self.mat[r * self.rank + j])
    }

    fn inv_image_of_simple(&self, j: usize) -> impl Iterator<Item = i64> + '_ {
        (0..self.rank).map(move |r| self.inv[r * self.rank + j])
    }
}

/// A pull plan together with the word it produces.
pub type FrontPlan = (MovePlan, ReducedWord);

type FrontCache = HashMap<(Box<[Letter]>, Letter), Arc<FrontPlan>>;
type RewriteCache = HashMap<(Box<[Letter]>, Box<[Letter]>), Arc<MovePlan>>;

/// Cartan datum of a simply-laced finite Weyl group, together with the
/// derived longest-element data and plan caches.
pub struct CoxeterGraph {
    labels: Vec<String>,
    by_label: HashMap<String, Letter>,
    pairing: Vec<i32>,
    spec_string: String,
    positive_roots: Vec<Vec<i64>>,
    w0: WeylElement,
    nu: usize,
    w0_word: ReducedWord,
    dual: Vec<Letter>,
    front_cache: RwLock<FrontCache>,
    rewrite_cache: RwLock<RewriteCache>,
}

impl fmt::Debug for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterGraph")
            .field("spec", &self.spec_string)
            .field("nu", &self.nu)
            .finish()
    }
}

impl PartialEq for CoxeterGraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.pairing == other.pairing
    }
}

impl Eq for CoxeterGraph {}

impl CoxeterGraph {
    /// Builds a graph from a type spec: a built-in name (`A<n>` with n ≥ 1,
    /// `D<n>` with n ≥ 4, `E6`, `E7`, `E8`) or an explicit description
    /// `letters: a, b, c; edges: a-b, b-c`. Letters in the explicit form are
    /// arbitrary non-whitespace tokens not containing `,`, `;`, `|` or `-`.
    pub fn parse(spec: &str) -> Result<Arc<CoxeterGraph>> {
        let spec = spec.trim();
        let mut graph = Self::parse_unnamed(spec)?;
        // remember the name the graph was asked for, so emitted forms
        // round-trip exactly
        Arc::get_mut(&mut graph)
            .expect("freshly built graph has a single owner")
            .spec_string = spec.to_string();
        Ok(graph)
    }

    fn parse_unnamed(spec: &str) -> Result<Arc<CoxeterGraph>> {
        if let Some(body) = spec.strip_prefix("letters:") {
            let (letters_part, edges_part) = match body.split_once(';') {
                Some((l, e)) => {
                    let e = e.trim();
                    let e = e
                        .strip_prefix("edges:")
                        .ok_or_else(|| Error::Parse(format!("expected `edges:` in `{spec}`")))?;
                    (l, e)
                }
                None => (body, ""),
            };
            let labels: Vec<String> = letters_part
                .split([',', ' '])
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect();
            let mut edges = Vec::new();
            for tok in edges_part.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let (a, b) = tok
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("bad edge `{tok}`")))?;
                edges.push((a.trim().to_string(), b.trim().to_string()));
            }
            return Self::from_edges(labels, &edges);
        }

        let (family, n) = spec.split_at(1);
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("unrecognized type spec `{spec}`")))?;
        let numbered = |n: usize| (1..=n).map(|k| k.to_string()).collect::<Vec<_>>();
        let path_edges = |n: usize| {
            (1..n)
                .map(|k| (k.to_string(), (k + 1).to_string()))
                .collect::<Vec<_>>()
        };
        match (family, n) {
            ("A", n) if n >= 1 => Self::from_edges(numbered(n), &path_edges(n)),
            ("D", n) if n >= 4 => {
                let mut edges = path_edges(n - 1);
                edges.push(((n - 2).to_string(), n.to_string()));
                Self::from_edges(numbered(n), &edges)
            }
            ("E", n) if (6..=8).contains(&n) => {
                // chain 1-3-4-5-...-n with the extra node 2 attached to 4
                let mut edges = vec![("1".to_string(), "3".to_string())];
                for k in 3..n {
                    edges.push((k.to_string(), (k + 1).to_string()));
                }
                edges.push(("2".to_string(), "4".to_string()));
                Self::from_edges(numbered(n), &edges)
            }
            _ => Err(Error::Parse(format!("unrecognized type spec `{spec}`"))),
        }
    }

    /// Builds a graph from an explicit letter list and edge list, rejecting
    /// anything that is not a disjoint union of A/D/E diagrams.
    pub fn from_edges(labels: Vec<String>, edges: &[(String, String)]) -> Result<Arc<CoxeterGraph>> {
        if labels.is_empty() {
            return Err(Error::Parse("letter list is empty".into()));
        }
        let mut by_label = HashMap::new();
        for (idx, l) in labels.iter().enumerate() {
            // the text formats reserve their separators
            if l.is_empty() || l.chars().any(|c| c.is_whitespace() || ",;|-:".contains(c)) {
                return Err(Error::Parse(format!("bad letter `{l}`")));
            }
            if by_label.insert(l.clone(), Letter(idx)).is_some() {
                return Err(Error::Parse(format!("duplicate letter `{l}`")));
            }
        }
        let n = labels.len();
        let mut pairing = vec![0i32; n * n];
        for i in 0..n {
            pairing[i * n + i] = 2;
        }
        for (a, b) in edges {
            let ia = *by_label
                .get(a)
                .ok_or_else(|| Error::UnknownLetter(a.clone()))?;
            let ib = *by_label
                .get(b)
                .ok_or_else(|| Error::UnknownLetter(b.clone()))?;
            if ia == ib {
                return Err(Error::Parse(format!("self-edge on `{a}`")));
            }
            pairing[ia.0 * n + ib.0] = -1;
            pairing[ib.0 * n + ia.0] = -1;
        }
        classify_ade(n, &pairing)?;

        let spec_string = {
            let ls = labels.join(",");
            let es = edges
                .iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(",");
            format!("letters:{ls};edges:{es}")
        };

        let mut graph = CoxeterGraph {
            labels,
            by_label,
            pairing,
            spec_string,
            positive_roots: Vec::new(),
            w0: WeylElement {
                mat: identity_matrix(n),
                inv: identity_matrix(n),
                rank: n,
                len: 0,
            },
            nu: 0,
            w0_word: ReducedWord::unchecked(Vec::new()),
            dual: Vec::new(),
            front_cache: RwLock::new(HashMap::new()),
            rewrite_cache: RwLock::new(HashMap::new()),
        };
        graph.positive_roots = graph.compute_positive_roots();
        let (w0, nu) = graph.compute_longest();
        graph.w0 = w0;
        graph.nu = nu;
        graph.w0_word = graph.lex_min_word(&graph.w0);
        graph.dual = (0..n)
            .map(|i| graph.compute_dual(Letter(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(graph))
    }

    /// Remembers the original type name when built through [`parse`],
    /// otherwise the explicit `letters:...;edges:...` form.
    ///
    /// [`parse`]: CoxeterGraph::parse
    pub fn spec_string(&self) -> &str {
        &self.spec_string
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Letters in their fixed order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.rank()).map(Letter)
    }

    pub fn label(&self, i: Letter) -> &str {
        &self.labels[i.0]
    }

    pub fn letter(&self, label: &str) -> Result<Letter> {
        self.by_label
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLetter(label.to_string()))
    }

    /// The pairing `i.j`: 2 on the diagonal, -1 on edges, 0 otherwise.
    pub fn pairing(&self, i: Letter, j: Letter) -> i32 {
        self.pairing[i.0 * self.rank() + j.0]
    }

    /// The longest element and its length `ν`.
    pub fn longest_element(&self) -> (&WeylElement, usize) {
        (&self.w0, self.nu)
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn w0(&self) -> &WeylElement {
        &self.w0
    }

    /// The lexicographically smallest reduced word of `w0`.
    pub fn w0_word(&self) -> &ReducedWord {
        &self.w0_word
    }

    /// The letter `i^!` with `s_i w0 = w0 s_{i^!}`; an involution on `I`.
    pub fn dual_index(&self, i: Letter) -> Letter {
        self.dual[i.0]
    }

    // ---- elements ----------------------------------------------------

    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        WeylElement {
            mat: identity_matrix(n),
            inv: identity_matrix(n),
            rank: n,
            len: 0,
        }
    }

    pub fn generator(&self, i: Letter) -> WeylElement {
        self.mul_gen_right(&self.identity(), i)
    }

    /// `w · s_i`, with the cached length updated incrementally.
    pub fn mul_gen_right(&self, w: &WeylElement, i: Letter) -> WeylElement {
        let n = self.rank();
        let descent = self.is_right_descent(w, i);
        let mut mat = w.mat.clone();
        // right multiplication: column operations col_j -= pairing(i,j) * col_i
        let col_i: Vec<i64> = (0..n).map(|r| mat[r * n + i.0]).collect();
        for j in 0..n {
            let p = self.pairing(i, Letter(j)) as i64;
            if p != 0 {
                for (r, ci) in col_i.iter().enumerate() {
                    mat[r * n + j] -= p * ci;
                }
            }
        }
        // inverse: left multiplication of inv by s_i (row operation)
        let mut inv = w.inv.clone();
        for j in 0..n {
            let mut acc = -inv[i.0 * n + j];
            for b in 0..n {
                if b != i.0 && self.pairing(i, Letter(b)) == -1 {
                    acc += inv[b * n + j];
                }
            }
            inv[i.0 * n + j] = acc;
        }
        WeylElement {
            mat,
            inv,
            rank: n,
            len: if descent { w.len - 1 } else { w.len + 1 },
        }
    }

    /// `s_i · w`.
    pub fn mul_gen_left(&self, i: Letter, w: &WeylElement) -> WeylElement {
        self.mul_gen_right(&w.inverse(), i).inverse()
    }

    /// Full product `w · v`.
    pub fn mul(&self, w: &WeylElement, v: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mat = mat_mul(&w.mat, &v.mat, n);
        let inv = mat_mul(&v.inv, &w.inv, n);
        let len = self.count_inversions(&mat);
        WeylElement {
            mat,
            inv,
            rank: n,
            len,
        }
    }

    /// `i` is a right descent of `w` iff `w(α_i) < 0`.
    pub fn is_right_descent(&self, w: &WeylElement, i: Letter) -> bool {
        w.image_of_simple(i.0).any(|x| x < 0)
    }

    /// `i` is a left descent of `w` iff `w⁻¹(α_i) < 0`.
    pub fn is_left_descent(&self, w: &WeylElement, i: Letter) -> bool {
        w.inv_image_of_simple(i.0).any(|x| x < 0)
    }

    pub fn left_descents(&self, w: &WeylElement) -> Vec<Letter> {
        self.letters().filter(|&i| self.is_left_descent(w, i)).collect()
    }

    pub fn right_descents(&self, w: &WeylElement) -> Vec<Letter> {
        self.letters().filter(|&i| self.is_right_descent(w, i)).collect()
    }

    /// The element of a letter sequence, without any reducedness check.
    pub fn element_of(&self, letters: &[Letter]) -> WeylElement {
        let mut w = self.identity();
        for &i in letters {
            w = self.mul_gen_right(&w, i);
        }
        w
    }

    /// Validates that a letter sequence is reduced and wraps it.
    pub fn reduced_word(&self, letters: Vec<Letter>) -> Result<ReducedWord> {
        let mut w = self.identity();
        for (pos, &i) in letters.iter().enumerate() {
            if i.0 >= self.rank() {
                return Err(Error::UnknownLetter(format!("#{}", i.0)));
            }
            if self.is_right_descent(&w, i) {
                return Err(Error::NotReduced(pos));
            }
            w = self.mul_gen_right(&w, i);
        }
        Ok(ReducedWord::unchecked(letters))
    }

    /// Parses a whitespace-separated list of letter labels as a reduced word.
    pub fn reduced_word_from_labels(&self, text: &str) -> Result<ReducedWord> {
        let letters = text
            .split_whitespace()
            .map(|tok| self.letter(tok))
            .collect::<Result<Vec<_>>>()?;
        self.reduced_word(letters)
    }

    pub fn word_element(&self, word: &ReducedWord) -> WeylElement {
        self.element_of(word.letters())
    }

    pub fn word_to_string(&self, word: &ReducedWord) -> String {
        word.letters()
            .iter()
            .map(|&i| self.label(i))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// The lexicographically smallest reduced word of `w` under the letter
    /// order: repeatedly strip the smallest left descent.
    pub fn lex_min_word(&self, w: &WeylElement) -> ReducedWord {
        let mut cur = w.clone();
        let mut out = Vec::with_capacity(w.length());
        while !cur.is_identity() {
            let i = self
                .letters()
                .find(|&i| self.is_left_descent(&cur, i))
                .expect("non-identity element has a left descent");
            out.push(i);
            cur = self.mul_gen_left(i, &cur);
        }
        ReducedWord::unchecked(out)
    }

    // ---- moves and plans ----------------------------------------------

    /// Applies one elementary move to a letter sequence in place.
    pub fn apply_move(&self, letters: &mut [Letter], m: Move) -> Result<()> {
        match m.kind {
            MoveKind::Commute => {
                if m.pos + 1 >= letters.len()
                    || self.pairing(letters[m.pos], letters[m.pos + 1]) != 0
                {
                    return Err(Error::InternalAssertion(format!(
                        "bad commute move at {}",
                        m.pos
                    )));
                }
                letters.swap(m.pos, m.pos + 1);
            }
            MoveKind::Braid => {
                if m.pos + 2 >= letters.len()
                    || letters[m.pos] != letters[m.pos + 2]
                    || self.pairing(letters[m.pos], letters[m.pos + 1]) != -1
                {
                    return Err(Error::InternalAssertion(format!(
                        "bad braid move at {}",
                        m.pos
                    )));
                }
                let (i, j) = (letters[m.pos], letters[m.pos + 1]);
                letters[m.pos] = j;
                letters[m.pos + 1] = i;
                letters[m.pos + 2] = j;
            }
        }
        Ok(())
    }

    /// Applies a whole plan to a reduced word.
    pub fn apply_plan(&self, word: &ReducedWord, plan: &MovePlan) -> Result<ReducedWord> {
        let mut letters = word.letters().to_vec();
        for &m in &plan.moves {
            self.apply_move(&mut letters, m)?;
        }
        Ok(ReducedWord::unchecked(letters))
    }

    /// Deterministic plan bringing left descent `i` to the front of `word`.
    pub fn pull_to_front(&self, word: &ReducedWord, i: Letter) -> Result<Arc<FrontPlan>> {
        let key = (word.letters().to_vec().into_boxed_slice(), i);
        if let Some(hit) = self.front_cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        if !self.is_left_descent(&self.word_element(word), i) {
            return Err(Error::NotADescent {
                letter: self.label(i).to_string(),
                side: "left",
            });
        }
        let mut letters = word.letters().to_vec();
        let mut moves = Vec::new();
        self.pull_front_rec(&mut letters, i, 0, &mut moves)?;
        let entry = Arc::new((MovePlan { moves }, ReducedWord::unchecked(letters)));
        self.front_cache
            .write()
            .unwrap()
            .insert(key, entry.clone());
        Ok(entry)
    }

    // The dihedral recursion. `word` starts at absolute position `base`;
    // `target` is a left descent of the element of `word`.
    fn pull_front_rec(
        &self,
        word: &mut [Letter],
        target: Letter,
        base: usize,
        moves: &mut Vec<Move>,
    ) -> Result<()> {
        if word.first() == Some(&target) {
            return Ok(());
        }
        if word.len() < 2 {
            return Err(Error::InternalAssertion(
                "pull_to_front descended past a non-descent".into(),
            ));
        }
        let head = word[0];
        // target is a left descent of the suffix element
        self.pull_front_rec(&mut word[1..], target, base + 1, moves)?;
        match self.pairing(head, target) {
            0 => {
                word.swap(0, 1);
                moves.push(Move {
                    pos: base,
                    kind: MoveKind::Commute,
                });
            }
            -1 => {
                // head is a left descent of the element of word[2..]
                self.pull_front_rec(&mut word[2..], head, base + 2, moves)?;
                word[0] = target;
                word[1] = head;
                word[2] = target;
                moves.push(Move {
                    pos: base,
                    kind: MoveKind::Braid,
                });
            }
            _ => {
                return Err(Error::InternalAssertion(
                    "pull_to_front met an equal adjacent letter".into(),
                ))
            }
        }
        Ok(())
    }

    /// Plan bringing right descent `i` to the back of `word`: conjugate of
    /// [`pull_to_front`] by word reversal, under which the defining
    /// relations are invariant.
    ///
    /// [`pull_to_front`]: CoxeterGraph::pull_to_front
    pub fn pull_to_back(&self, word: &ReducedWord, i: Letter) -> Result<FrontPlan> {
        if !self.is_right_descent(&self.word_element(word), i) {
            return Err(Error::NotADescent {
                letter: self.label(i).to_string(),
                side: "right",
            });
        }
        let n = word.len();
        let reversed = ReducedWord::unchecked(word.letters().iter().rev().copied().collect());
        let front = self.pull_to_front(&reversed, i)?;
        let moves = front
            .0
            .moves
            .iter()
            .map(|m| Move {
                pos: match m.kind {
                    MoveKind::Commute => n - 2 - m.pos,
                    MoveKind::Braid => n - 3 - m.pos,
                },
                kind: m.kind,
            })
            .collect();
        let back_word =
            ReducedWord::unchecked(front.1.letters().iter().rev().copied().collect());
        Ok((MovePlan { moves }, back_word))
    }

    /// Plan transforming `from` into exactly `to` (two reduced words of the
    /// same element), built by repeatedly pulling the next target letter to
    /// the front of the remaining suffix.
    pub fn rewrite_plan(&self, from: &ReducedWord, to: &ReducedWord) -> Result<Arc<MovePlan>> {
        let key = (
            from.letters().to_vec().into_boxed_slice(),
            to.letters().to_vec().into_boxed_slice(),
        );
        if let Some(hit) = self.rewrite_cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        if from.len() != to.len() || self.word_element(from) != self.word_element(to) {
            return Err(Error::DifferentElements);
        }
        let mut cur = from.letters().to_vec();
        let mut moves = Vec::new();
        for m in 0..cur.len() {
            let t = to.letters()[m];
            if cur[m] == t {
                continue;
            }
            self.pull_front_rec(&mut cur[m..], t, m, &mut moves)?;
        }
        if cur != to.letters() {
            return Err(Error::InternalAssertion(
                "rewrite_plan did not reach its target".into(),
            ));
        }
        let plan = Arc::new(MovePlan { moves });
        self.rewrite_cache.write().unwrap().insert(key, plan.clone());
        Ok(plan)
    }

    /// All reduced words of `w`, failing with `TooLarge` when more than
    /// `guard` words would be produced.
    pub fn enumerate_reduced_words(&self, w: &WeylElement, guard: usize) -> Result<Vec<ReducedWord>> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(w.length());
        self.enumerate_rec(w, guard, &mut prefix, &mut out)?;
        Ok(out)
    }

    fn enumerate_rec(
        &self,
        w: &WeylElement,
        guard: usize,
        prefix: &mut Vec<Letter>,
        out: &mut Vec<ReducedWord>,
    ) -> Result<()> {
        if w.is_identity() {
            if out.len() >= guard {
                return Err(Error::TooLarge(guard));
            }
            out.push(ReducedWord::unchecked(prefix.clone()));
            return Ok(());
        }
        for i in self.letters() {
            if self.is_left_descent(w, i) {
                prefix.push(i);
                let rest = self.mul_gen_left(i, w);
                self.enumerate_rec(&rest, guard, prefix, out)?;
                prefix.pop();
            }
        }
        Ok(())
    }

    // ---- internals ----------------------------------------------------

    fn compute_positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut seen: Vec<Vec<i64>> = Vec::new();
        let mut queue: Vec<Vec<i64>> = (0..n)
            .map(|j| (0..n).map(|r| i64::from(r == j)).collect())
            .collect();
        while let Some(beta) = queue.pop() {
            if seen.contains(&beta) {
                continue;
            }
            seen.push(beta.clone());
            for i in 0..n {
                let mut img = beta.clone();
                let coeff: i64 = (0..n)
                    .map(|j| (self.pairing[i * n + j] as i64) * beta[j])
                    .sum();
                img[i] -= coeff;
                if img.iter().all(|&x| x >= 0) && !seen.contains(&img) {
                    queue.push(img);
                }
            }
        }
        seen.sort();
        seen
    }

    fn count_inversions(&self, mat: &[i64]) -> usize {
        let n = self.rank();
        self.positive_roots
            .iter()
            .filter(|beta| {
                // image of beta under mat has a negative coordinate
                (0..n).any(|r| {
                    let x: i64 = (0..n).map(|c| mat[r * n + c] * beta[c]).sum();
                    x < 0
                })
            })
            .count()
    }

    fn compute_longest(&self) -> (WeylElement, usize) {
        let mut w = self.identity();
        'ascend: loop {
            for i in self.letters() {
                if !self.is_right_descent(&w, i) {
                    w = self.mul_gen_right(&w, i);
                    continue 'ascend;
                }
            }
            let nu = w.length();
            return (w, nu);
        }
    }

    fn compute_dual(&self, i: Letter) -> Result<Letter> {
        // w0(α_j) = -α_i  ⟺  j = i^!
        let n = self.rank();
        for j in 0..n {
            let col: Vec<i64> = self.w0.image_of_simple(j).collect();
            let mut expected = vec![0i64; n];
            expected[i.0] = -1;
            if col == expected {
                return Ok(Letter(j));
            }
        }
        Err(Error::InternalAssertion(format!(
            "no dual index for letter {}",
            self.label(i)
        )))
    }
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for r in 0..n {
        for k in 0..n {
            let arc = a[r * n + k];
            if arc != 0 {
                for c in 0..n {
                    out[r * n + c] += arc * b[k * n + c];
                }
            }
        }
    }
    out
}

/// Checks that the graph on `{0..n}` with edges where `pairing = -1` is a
/// disjoint union of A/D/E diagrams.
fn classify_ade(n: usize, pairing: &[i32]) -> Result<()> {
    let neighbors = |v: usize| -> Vec<usize> {
        (0..n).filter(|&u| u != v && pairing[v * n + u] == -1).collect()
    };
    let mut component = vec![usize::MAX; n];
    let mut comp_count = 0;
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = comp_count;
        comp_count += 1;
        let mut stack = vec![start];
        component[start] = id;
        let mut nodes = Vec::new();
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for u in neighbors(v) {
                if component[u] == usize::MAX {
                    component[u] = id;
                    stack.push(u);
                }
            }
        }
        let edge_count: usize = nodes.iter().map(|&v| neighbors(v).len()).sum::<usize>() / 2;
        if edge_count != nodes.len() - 1 {
            return Err(Error::NotSimplyLacedFinite(
                "a component contains a cycle".into(),
            ));
        }
        let degrees: Vec<usize> = nodes.iter().map(|&v| neighbors(v).len()).collect();
        if degrees.iter().any(|&d| d >= 4) {
            return Err(Error::NotSimplyLacedFinite(
                "a component has a vertex of degree 4 or more".into(),
            ));
        }
        let branches: Vec<usize> = nodes
            .iter()
            .zip(&degrees)
            .filter(|&(_, &d)| d == 3)
            .map(|(&v, _)| v)
            .collect();
        match branches.len() {
            0 => {} // a path: type A
            1 => {
                // arm lengths from the branch vertex
                let b = branches[0];
                let mut arms: Vec<usize> = neighbors(b)
                    .into_iter()
                    .map(|mut v| {
                        let mut prev = b;
                        let mut len = 1;
                        loop {
                            let next: Vec<usize> =
                                neighbors(v).into_iter().filter(|&u| u != prev).collect();
                            match next.as_slice() {
                                [] => break len,
                                [u] => {
                                    prev = v;
                                    v = *u;
                                    len += 1;
                                }
                                _ => unreachable!("second branch would have been caught"),
                            }
                        }
                    })
                    .collect();
                arms.sort_unstable();
                let ok = matches!(arms.as_slice(), [1, 1, _] | [1, 2, 2..=4]);
                if !ok {
                    return Err(Error::NotSimplyLacedFinite(format!(
                        "branch with arm lengths {arms:?} is not of type D or E"
                    )));
                }
            }
            _ => {
                return Err(Error::NotSimplyLacedFinite(
                    "a component has two branch vertices".into(),
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(spec: &str) -> Arc<CoxeterGraph> {
        CoxeterGraph::parse(spec).unwrap()
    }

    fn word(g: &CoxeterGraph, labels: &str) -> ReducedWord {
        g.reduced_word_from_labels(labels).unwrap()
    }

    #[test]
    fn builds_a2_and_a3() {
        let a2 = graph("A2");
        assert_eq!(a2.rank(), 2);
        assert_eq!(a2.pairing(Letter(0), Letter(1)), -1);
        let a3 = graph("A3");
        assert_eq!(a3.pairing(Letter(0), Letter(1)), -1);
        assert_eq!(a3.pairing(Letter(1), Letter(2)), -1);
        assert_eq!(a3.pairing(Letter(0), Letter(2)), 0);
    }

    #[test]
    fn rejects_four_cycle() {
        let labels: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let edges: Vec<(String, String)> = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        assert!(matches!(
            CoxeterGraph::from_edges(labels, &edges),
            Err(Error::NotSimplyLacedFinite(_))
        ));
    }

    /// Independent finiteness oracle: the symmetrized Cartan form is
    /// positive definite exactly for finite Weyl groups. Checked over the
    /// integers via leading principal minors.
    fn cartan_positive_definite(n: usize, pairing: &[i32]) -> bool {
        // integer determinants of leading principal minors by fraction-free
        // Gaussian elimination on a rational copy
        for k in 1..=n {
            let mut m: Vec<f64> = Vec::with_capacity(k * k);
            for r in 0..k {
                for c in 0..k {
                    m.push(pairing[r * n + c] as f64);
                }
            }
            // LU by exact small determinant expansion for k <= 4, else f64
            let det = det_f64(&mut m, k);
            if det <= 1e-9 {
                return false;
            }
        }
        true
    }

    fn det_f64(m: &mut [f64], k: usize) -> f64 {
        let mut det = 1.0;
        for col in 0..k {
            // partial pivot
            let mut piv = col;
            for r in col..k {
                if m[r * k + col].abs() > m[piv * k + col].abs() {
                    piv = r;
                }
            }
            if m[piv * k + col].abs() < 1e-12 {
                return 0.0;
            }
            if piv != col {
                for c in 0..k {
                    m.swap(col * k + c, piv * k + c);
                }
                det = -det;
            }
            det *= m[col * k + col];
            for r in (col + 1)..k {
                let f = m[r * k + col] / m[col * k + col];
                for c in col..k {
                    m[r * k + c] -= f * m[col * k + c];
                }
            }
        }
        det
    }

    #[test]
    fn ade_recognition_matches_cartan_positivity() {
        // accepted graphs are positive definite
        for spec in ["A1", "A2", "A3", "A5", "D4", "D5", "E6", "E7", "E8"] {
            let g = graph(spec);
            assert!(
                cartan_positive_definite(g.rank(), &g.pairing),
                "{spec} should be positive definite"
            );
        }
        // the affine 4-cycle is rejected and indeed not positive definite
        let n = 4;
        let mut pairing = vec![0i32; 16];
        for i in 0..4 {
            pairing[i * 4 + i] = 2;
        }
        for (a, b) in [(0usize, 1usize), (1, 2), (2, 3), (3, 0)] {
            pairing[a * 4 + b] = -1;
            pairing[b * 4 + a] = -1;
        }
        assert!(classify_ade(n, &pairing).is_err());
        assert!(!cartan_positive_definite(n, &pairing));
        // a triple branch (D4 with an extra arm on the center) is rejected
        let labels: Vec<String> = ["c", "p", "q", "r", "s"].iter().map(|s| s.to_string()).collect();
        let edges: Vec<(String, String)> = [("c", "p"), ("c", "q"), ("c", "r"), ("c", "s")]
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        assert!(CoxeterGraph::from_edges(labels, &edges).is_err());
    }

    /// Brute-force group enumeration; returns (order, max length).
    fn enumerate_group(g: &CoxeterGraph) -> (usize, usize) {
        use std::collections::HashSet;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut frontier = vec![g.identity()];
        let mut max_len = 0;
        seen.insert(g.identity().mat.clone());
        while let Some(w) = frontier.pop() {
            max_len = max_len.max(w.length());
            for i in g.letters() {
                let next = g.mul_gen_right(&w, i);
                if seen.insert(next.mat.clone()) {
                    frontier.push(next);
                }
            }
        }
        (seen.len(), max_len)
    }

    #[test]
    fn longest_element_lengths() {
        let a2 = graph("A2");
        assert_eq!(a2.nu(), 3);
        let a3 = graph("A3");
        assert_eq!(a3.nu(), 6);
        let d4 = graph("D4");
        assert_eq!(d4.nu(), 12);

        // oracle: exhaustive enumeration
        let (order_a3, max_a3) = enumerate_group(&a3);
        assert_eq!((order_a3, max_a3), (24, 6));
        let (order_d4, max_d4) = enumerate_group(&d4);
        assert_eq!((order_d4, max_d4), (192, 12));

        // every letter is a left and right descent of w0
        for spec in ["A2", "A3", "D4"] {
            let g = graph(spec);
            let (w0, _) = g.longest_element();
            for i in g.letters() {
                assert!(g.is_left_descent(w0, i));
                assert!(g.is_right_descent(w0, i));
            }
        }
    }

    #[test]
    fn dual_index_examples() {
        let a2 = graph("A2");
        assert_eq!(a2.dual_index(Letter(0)), Letter(1));
        let a3 = graph("A3");
        assert_eq!(a3.dual_index(Letter(1)), Letter(1));
        assert_eq!(a3.dual_index(Letter(0)), Letter(2));
        let d4 = graph("D4");
        for i in d4.letters() {
            assert_eq!(d4.dual_index(i), i);
        }
        // oracle: s_i w0 = w0 s_{i^!} by direct matrix products
        for spec in ["A2", "A3", "A4", "D4", "D5", "E6"] {
            let g = graph(spec);
            let (w0, _) = g.longest_element();
            for i in g.letters() {
                let d = g.dual_index(i);
                assert_eq!(
                    g.mul_gen_left(i, w0),
                    g.mul_gen_right(w0, d),
                    "{spec}: dual of {}",
                    g.label(i)
                );
                assert_eq!(g.dual_index(d), i, "involution on {spec}");
            }
        }
    }

    #[test]
    fn dual_index_by_family() {
        // type A: the diagram flip
        for n in [2usize, 4, 5] {
            let g = graph(&format!("A{n}"));
            for i in 0..n {
                assert_eq!(g.dual_index(Letter(i)), Letter(n - 1 - i));
            }
        }
        // D4, E7, E8: the identity
        for spec in ["D4", "E7", "E8"] {
            let g = graph(spec);
            for i in g.letters() {
                assert_eq!(g.dual_index(i), i, "{spec}");
            }
        }
        // E6: the flip fixing the branch
        let e6 = graph("E6");
        let pairs = [(0usize, 5usize), (1, 1), (2, 4), (3, 3)];
        for (a, b) in pairs {
            assert_eq!(e6.dual_index(Letter(a)), Letter(b));
            assert_eq!(e6.dual_index(Letter(b)), Letter(a));
        }
    }

    #[test]
    fn longest_lengths_by_family() {
        for (spec, nu) in [("A1", 1usize), ("A4", 10), ("A5", 15), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120)] {
            assert_eq!(graph(spec).nu(), nu, "{spec}");
        }
    }

    #[test]
    fn descent_examples() {
        let a2 = graph("A2");
        assert!(a2.left_descents(&a2.identity()).is_empty());
        assert!(a2.right_descents(&a2.identity()).is_empty());
        let (w0, _) = a2.longest_element();
        assert_eq!(a2.left_descents(w0).len(), 2);
        // w = s1 s2: left {1}, right {2}
        let w = a2.element_of(&[Letter(0), Letter(1)]);
        assert_eq!(a2.left_descents(&w), vec![Letter(0)]);
        assert_eq!(a2.right_descents(&w), vec![Letter(1)]);
        // oracle: descent iff length drops
        for ws in [
            a2.identity(),
            a2.generator(Letter(0)),
            w.clone(),
            w0.clone(),
        ] {
            for i in a2.letters() {
                assert_eq!(
                    a2.is_left_descent(&ws, i),
                    a2.mul_gen_left(i, &ws).length() < ws.length()
                );
                assert_eq!(
                    a2.is_right_descent(&ws, i),
                    a2.mul_gen_right(&ws, i).length() < ws.length()
                );
            }
        }
    }

    #[test]
    fn pull_to_front_examples() {
        let a2 = graph("A2");
        // (2,1,2), pull 1 -> one braid move -> (1,2,1)
        let w212 = word(&a2, "2 1 2");
        let plan = a2.pull_to_front(&w212, Letter(0)).unwrap();
        assert_eq!(
            plan.0.moves,
            vec![Move {
                pos: 0,
                kind: MoveKind::Braid
            }]
        );
        assert_eq!(plan.1, word(&a2, "1 2 1"));
        // already at the front: empty plan
        let w121 = word(&a2, "1 2 1");
        let plan = a2.pull_to_front(&w121, Letter(0)).unwrap();
        assert!(plan.0.is_empty());
        // (1,2,1), pull 2 -> one braid move -> (2,1,2)
        let plan = a2.pull_to_front(&w121, Letter(1)).unwrap();
        assert_eq!(plan.0.len(), 1);
        assert_eq!(plan.1, word(&a2, "2 1 2"));
        // not a descent
        let w12 = word(&a2, "1 2");
        assert!(matches!(
            a2.pull_to_front(&w12, Letter(1)),
            Err(Error::NotADescent { .. })
        ));
    }

    #[test]
    fn pull_to_back_examples() {
        let a2 = graph("A2");
        let w121 = word(&a2, "1 2 1");
        let (plan, back) = a2.pull_to_back(&w121, Letter(1)).unwrap();
        assert_eq!(back, word(&a2, "2 1 2"));
        assert_eq!(a2.apply_plan(&w121, &plan).unwrap(), back);
        // already at the back
        let (plan, back) = a2.pull_to_back(&w121, Letter(0)).unwrap();
        assert!(plan.is_empty());
        assert_eq!(back, w121);

        let a3 = graph("A3");
        let w = word(&a3, "1 2 1 3 2 1");
        let (plan, back) = a3.pull_to_back(&w, Letter(1)).unwrap();
        assert_eq!(back.last(), Some(Letter(1)));
        assert_eq!(a3.word_element(&back), a3.word_element(&w));
        assert_eq!(a3.apply_plan(&w, &plan).unwrap(), back);
    }

    #[test]
    fn rewrite_plan_examples() {
        let a2 = graph("A2");
        let w121 = word(&a2, "1 2 1");
        let w212 = word(&a2, "2 1 2");
        assert!(a2.rewrite_plan(&w121, &w121).unwrap().is_empty());
        let plan = a2.rewrite_plan(&w121, &w212).unwrap();
        assert_eq!(plan.len(), 1);
        assert_eq!(plan.moves[0].kind, MoveKind::Braid);
        // different elements rejected
        let w12 = word(&a2, "1 2");
        let w21 = word(&a2, "2 1");
        assert!(matches!(
            a2.rewrite_plan(&w12, &w21),
            Err(Error::DifferentElements)
        ));
    }

    #[test]
    fn rewrite_plan_all_pairs_a3() {
        let a3 = graph("A3");
        let (w0, _) = a3.longest_element();
        let words = a3.enumerate_reduced_words(w0, 100).unwrap();
        assert_eq!(words.len(), 16);
        for from in &words {
            for to in &words {
                let plan = a3.rewrite_plan(from, to).unwrap();
                // every intermediate step stays a reduced word of w0
                let mut cur = from.letters().to_vec();
                for &m in &plan.moves {
                    a3.apply_move(&mut cur, m).unwrap();
                    let rw = a3.reduced_word(cur.clone()).unwrap();
                    assert_eq!(&a3.word_element(&rw), w0);
                }
                assert_eq!(cur, to.letters());
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        let a2 = graph("A2");
        let (w0, _) = a2.longest_element();
        assert_eq!(a2.enumerate_reduced_words(w0, 10).unwrap().len(), 2);
        assert_eq!(
            a2.enumerate_reduced_words(&a2.generator(Letter(0)), 10)
                .unwrap()
                .len(),
            1
        );
        let a3 = graph("A3");
        assert_eq!(
            a3.enumerate_reduced_words(a3.longest_element().0, 100)
                .unwrap()
                .len(),
            16
        );
        assert!(matches!(
            a3.enumerate_reduced_words(a3.longest_element().0, 5),
            Err(Error::TooLarge(5))
        ));
    }

    #[test]
    fn plan_lengths_stay_quadratic() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for spec in ["A3", "A4", "D4", "D5", "E6"] {
            let g = graph(spec);
            let n = g.nu();
            // random reduced words of w0 via random descent stripping
            for _ in 0..20 {
                let mut cur = g.w0().clone();
                let mut letters = Vec::with_capacity(n);
                while !cur.is_identity() {
                    let ds = g.left_descents(&cur);
                    let &i = ds.choose(&mut rng).unwrap();
                    letters.push(i);
                    cur = g.mul_gen_left(i, &cur);
                }
                let w = g.reduced_word(letters).unwrap();
                for i in g.letters() {
                    let plan = g.pull_to_front(&w, i).unwrap();
                    assert!(
                        plan.0.len() <= n * n,
                        "{spec}: plan of {} moves exceeds {}",
                        plan.0.len(),
                        n * n
                    );
                    assert_eq!(plan.1.first(), Some(i));
                    assert_eq!(g.word_element(&plan.1), *g.w0());
                    assert_eq!(g.apply_plan(&w, &plan.0).unwrap(), plan.1);
                }
            }
        }
    }

    #[test]
    fn lex_min_word_is_minimal_a3() {
        let a3 = graph("A3");
        let (w0, _) = a3.longest_element();
        let words = a3.enumerate_reduced_words(w0, 100).unwrap();
        let min = words
            .iter()
            .min_by(|a, b| a.letters().cmp(b.letters()))
            .unwrap();
        assert_eq!(a3.w0_word(), min);
    }

    #[test]
    fn explicit_edge_list_with_token_letters() {
        let g = CoxeterGraph::parse("letters: x, y, z; edges: x-y, y-z").unwrap();
        assert_eq!(g.rank(), 3);
        assert_eq!(g.nu(), 6);
        assert_eq!(g.label(Letter(0)), "x");
        assert_eq!(g.letter("z").unwrap(), Letter(2));
        assert!(g.letter("w").is_err());
        // separator characters cannot be letters
        assert!(CoxeterGraph::parse("letters: a|b; edges:").is_err());
    }

    #[test]
    fn rank_one_graph() {
        let g = graph("A1");
        assert_eq!(g.nu(), 1);
        assert_eq!(g.dual_index(Letter(0)), Letter(0));
        let w = word(&g, "1");
        assert!(g.pull_to_front(&w, Letter(0)).unwrap().0.is_empty());
        assert_eq!(g.enumerate_reduced_words(g.w0(), 4).unwrap().len(), 1);
    }
}
