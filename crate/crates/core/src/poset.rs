//! Immutable finite posets.
//!
//! A [`Poset`] stores its elements as dense ids `0..n` with one label per
//! element, the cover relation (the transitive reduction of the order), and
//! the full reflexive-transitive closure as a bit matrix. Rank data is
//! computed once at construction and is present exactly when every maximal
//! chain has the same number of elements.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::bits::BitMatrix;
use crate::error::{PosetError, Result};
use crate::whitney::WhitneyProfile;

pub type ElementId = usize;

/// A set of element ids belonging to one poset.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subset(BTreeSet<ElementId>);

impl Subset {
    pub fn new() -> Self {
        Subset(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.0.contains(&id)
    }

    pub fn insert(&mut self, id: ElementId) -> bool {
        self.0.insert(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }
}

impl FromIterator<ElementId> for Subset {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        Subset(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Subset {
    type Item = ElementId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, ElementId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Per-element rank and the top rank value of a graded poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankData {
    ranks: Vec<usize>,
    max_rank: usize,
}

impl RankData {
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn max_rank(&self) -> usize {
        self.max_rank
    }
}

/// Wire form of a poset: `{"labels": [...], "covers": [[a, b], ...]}` where
/// `[a, b]` means `b` covers `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub labels: Vec<String>,
    pub covers: Vec<(String, String)>,
}

#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, ElementId>,
    /// Sorted `(a, b)` pairs with `b` covering `a`.
    covers: Vec<(ElementId, ElementId)>,
    up: Vec<Vec<ElementId>>,
    down: Vec<Vec<ElementId>>,
    /// `upset.get(a, b)` iff `a <= b`.
    upset: BitMatrix,
    /// `downset.get(b, a)` iff `a <= b`.
    downset: BitMatrix,
    heights: Vec<usize>,
    rank: Option<RankData>,
}

impl PartialEq for Poset {
    /// Equality of labelled structure, not isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.covers == other.covers
    }
}

impl Eq for Poset {}

fn index_labels(labels: &[String]) -> Result<HashMap<String, ElementId>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(PosetError::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Builds a poset from labels and cover pairs given by label.
    ///
    /// Each pair `(a, b)` asserts `a < b`. Redundant pairs implied by
    /// transitivity are dropped, so the stored covers are always the
    /// transitive reduction of the generated order.
    pub fn from_covers<L, A, B>(labels: L, cover_pairs: &[(A, B)]) -> Result<Poset>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = index_labels(&labels)?;
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| PosetError::UnknownLabel(s.to_string()))
        };
        let pairs = cover_pairs
            .iter()
            .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_cover_ids(labels, &pairs)
    }

    /// Same as [`Poset::from_covers`] with pairs given as element ids.
    pub fn from_cover_ids(labels: Vec<String>, pairs: &[(ElementId, ElementId)]) -> Result<Poset> {
        let n = labels.len();
        let index = index_labels(&labels)?;
        let mut succ: Vec<Vec<ElementId>> = vec![Vec::new(); n];
        for &(a, b) in pairs {
            for id in [a, b] {
                if id >= n {
                    return Err(PosetError::InvalidElement { id, size: n });
                }
            }
            if a == b {
                return Err(PosetError::Cycle(labels[a].clone(), labels[b].clone()));
            }
            succ[a].push(b);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }

        // Kahn's algorithm; leftover vertices lie on or above a cycle.
        let mut indeg = vec![0usize; n];
        for s in &succ {
            for &b in s {
                indeg[b] += 1;
            }
        }
        let mut queue: VecDeque<ElementId> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            topo.push(v);
            for &b in &succ[v] {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    queue.push_back(b);
                }
            }
        }
        if topo.len() < n {
            let a = (0..n).find(|&v| indeg[v] > 0).expect("cycle vertex");
            let b = succ[a].iter().copied().find(|&b| indeg[b] > 0).unwrap_or(a);
            return Err(PosetError::Cycle(labels[a].clone(), labels[b].clone()));
        }

        let mut upset = BitMatrix::new(n);
        for &v in topo.iter().rev() {
            upset.set(v, v);
            for &b in &succ[v] {
                upset.or_row_into(b, v);
            }
        }

        // (a, b) is a cover iff no other direct successor z of a lies below b.
        let mut covers = Vec::new();
        for (a, next) in succ.iter().enumerate() {
            for &b in next {
                if !next.iter().any(|&z| z != b && upset.get(z, b)) {
                    covers.push((a, b));
                }
            }
        }
        Ok(Self::assemble(labels, index, covers, upset))
    }

    /// Builds a poset from an explicit order predicate `leq(a, b)` on ids
    /// `0..labels.len()`. The predicate is checked to be a partial order
    /// and the covers are derived from it by transitive reduction.
    pub fn from_order<F>(labels: Vec<String>, leq: F) -> Result<Poset>
    where
        F: Fn(ElementId, ElementId) -> bool,
    {
        let n = labels.len();
        let index = index_labels(&labels)?;
        let mut upset = BitMatrix::new(n);
        for a in 0..n {
            for b in 0..n {
                if a == b || leq(a, b) {
                    upset.set(a, b);
                }
            }
        }
        for a in 0..n {
            for b in upset.iter_row(a).collect::<Vec<_>>() {
                if a != b && upset.get(b, a) {
                    return Err(PosetError::Cycle(labels[a].clone(), labels[b].clone()));
                }
                // Transitivity: everything above b must be above a.
                if upset.row(b).iter().zip(upset.row(a)).any(|(rb, ra)| rb & !ra != 0) {
                    let c = upset.iter_row(b).find(|&c| !upset.get(a, c)).expect("witness");
                    return Err(PosetError::NotTransitive(
                        labels[a].clone(),
                        labels[b].clone(),
                        labels[c].clone(),
                    ));
                }
            }
        }
        let covers = reduction(&upset);
        Ok(Self::assemble(labels, index, covers, upset))
    }

    /// Assembles a poset whose covers and closure are already known to be
    /// consistent. Used by the product and chain constructions.
    pub(crate) fn from_parts(
        labels: Vec<String>,
        covers: Vec<(ElementId, ElementId)>,
        upset: BitMatrix,
    ) -> Poset {
        let index = index_labels(&labels).expect("constructed labels are unique");
        Self::assemble(labels, index, covers, upset)
    }

    fn assemble(
        labels: Vec<String>,
        index: HashMap<String, ElementId>,
        mut covers: Vec<(ElementId, ElementId)>,
        upset: BitMatrix,
    ) -> Poset {
        let n = labels.len();
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &covers {
            up[a].push(b);
            down[b].push(a);
        }
        let downset = upset.transpose();
        let (heights, rank) = compute_ranks(&up, &down);
        Poset { labels, index, covers, up, down, upset, downset, heights, rank }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: ElementId) -> &str {
        &self.labels[id]
    }

    pub fn id_of(&self, label: &str) -> Option<ElementId> {
        self.index.get(label).copied()
    }

    /// Cover pairs `(a, b)` with `b` covering `a`, sorted.
    pub fn covers(&self) -> &[(ElementId, ElementId)] {
        &self.covers
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: ElementId) -> &[ElementId] {
        &self.up[x]
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: ElementId) -> &[ElementId] {
        &self.down[x]
    }

    fn check(&self, id: ElementId) -> Result<()> {
        if id < self.len() {
            Ok(())
        } else {
            Err(PosetError::InvalidElement { id, size: self.len() })
        }
    }

    /// `x <= y`, with id validation.
    pub fn leq(&self, x: ElementId, y: ElementId) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.le(x, y))
    }

    /// `x <= y`. Panics on an out-of-range id.
    #[inline]
    pub fn le(&self, x: ElementId, y: ElementId) -> bool {
        self.upset.get(x, y)
    }

    #[inline]
    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.upset.get(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: ElementId, y: ElementId) -> bool {
        self.upset.get(x, y) || self.upset.get(y, x)
    }

    /// All `y` with `x <= y`, ascending.
    pub fn above(&self, x: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.upset.iter_row(x)
    }

    /// All `y` with `y <= x`, ascending.
    pub fn below(&self, x: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.downset.iter_row(x)
    }

    pub fn count_above(&self, x: ElementId) -> usize {
        self.upset.row_count(x)
    }

    pub fn count_below(&self, x: ElementId) -> usize {
        self.downset.row_count(x)
    }

    pub fn minimal_elements(&self) -> Vec<ElementId> {
        (0..self.len()).filter(|&x| self.down[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<ElementId> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    /// Upper shadow: all elements covering some member of `a`.
    pub fn nabla(&self, a: &Subset) -> Result<Subset> {
        let mut out = Subset::new();
        for x in a {
            self.check(x)?;
            for &b in &self.up[x] {
                out.insert(b);
            }
        }
        Ok(out)
    }

    /// Length (in elements, minus one) of the longest chain ending at each
    /// element. Equals the rank when the poset is graded.
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Whether every maximal chain has the same number of elements.
    pub fn is_graded(&self) -> bool {
        self.rank.is_some()
    }

    pub fn rank_data(&self) -> Option<&RankData> {
        self.rank.as_ref()
    }

    pub fn rank(&self, x: ElementId) -> Option<usize> {
        self.rank.as_ref().map(|r| r.ranks[x])
    }

    /// Top rank value N; a maximal chain then has N + 1 elements.
    pub fn max_rank(&self) -> Option<usize> {
        self.rank.as_ref().map(|r| r.max_rank)
    }

    /// Elements grouped by rank, each level ascending by id.
    pub fn levels(&self) -> Result<Vec<Vec<ElementId>>> {
        let rank = self.rank.as_ref().ok_or(PosetError::NotGraded)?;
        if self.is_empty() {
            return Ok(Vec::new());
        }
        let mut levels = vec![Vec::new(); rank.max_rank + 1];
        for (x, &r) in rank.ranks.iter().enumerate() {
            levels[r].push(x);
        }
        Ok(levels)
    }

    pub fn whitney(&self) -> Result<WhitneyProfile> {
        let counts = self.levels()?.iter().map(|l| l.len() as u64).collect();
        Ok(WhitneyProfile::new(counts))
    }

    /// Whether the cover graph is connected. The empty poset counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.up[v].iter().chain(&self.down[v]) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Recomputes the cover relation from the closure alone.
    pub fn reduction_from_closure(&self) -> Vec<(ElementId, ElementId)> {
        reduction(&self.upset)
    }

    pub fn to_json_value(&self) -> PosetJson {
        PosetJson {
            labels: self.labels.clone(),
            covers: self
                .covers
                .iter()
                .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
                .collect(),
        }
    }

    pub fn from_json_value(json: &PosetJson) -> Result<Poset> {
        Poset::from_covers(json.labels.iter().cloned(), &json.covers)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("poset JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<Poset> {
        let json: PosetJson = serde_json::from_str(text)?;
        Self::from_json_value(&json)
    }
}

/// Transitive reduction of a reflexive, transitive, antisymmetric relation:
/// `a ⋖ b` iff `a < b` and the open interval `(a, b)` is empty.
fn reduction(upset: &BitMatrix) -> Vec<(ElementId, ElementId)> {
    let downset = upset.transpose();
    let mut covers = Vec::new();
    for a in 0..upset.len() {
        for b in upset.iter_row(a) {
            if a == b {
                continue;
            }
            // |[a, b]| == 2 means nothing strictly between.
            let interval: usize = upset
                .row(a)
                .iter()
                .zip(downset.row(b))
                .map(|(x, y)| (x & y).count_ones() as usize)
                .sum();
            if interval == 2 {
                covers.push((a, b));
            }
        }
    }
    covers
}

/// Heights (longest chain from a minimal element to x) and, when graded,
/// rank data. Graded iff every maximal element is reached from the minimal
/// elements only by saturated chains of one common length.
fn compute_ranks(up: &[Vec<ElementId>], down: &[Vec<ElementId>]) -> (Vec<usize>, Option<RankData>) {
    let n = up.len();
    let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
    let mut queue: VecDeque<ElementId> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut shortest = vec![0usize; n];
    let mut longest = vec![0usize; n];
    let mut seen_pred = vec![false; n];
    while let Some(v) = queue.pop_front() {
        for &w in &up[v] {
            let s = shortest[v] + 1;
            let l = longest[v] + 1;
            if !seen_pred[w] {
                seen_pred[w] = true;
                shortest[w] = s;
                longest[w] = l;
            } else {
                shortest[w] = shortest[w].min(s);
                longest[w] = longest[w].max(l);
            }
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    let mut top: Option<usize> = None;
    let mut graded = true;
    for v in 0..n {
        if shortest[v] != longest[v] {
            graded = false;
            break;
        }
        if up[v].is_empty() {
            match top {
                None => top = Some(longest[v]),
                Some(t) if t != longest[v] => {
                    graded = false;
                    break;
                }
                _ => {}
            }
        }
    }
    let rank = graded.then(|| RankData { ranks: longest.clone(), max_rank: top.unwrap_or(0) });
    (longest, rank)
}

/// Direct product `P × Q`: pairs ordered coordinatewise. Element `(p, q)`
/// gets id `p * |Q| + q` and label `(p,q)`.
pub fn product(p: &Poset, q: &Poset) -> Poset {
    let (np, nq) = (p.len(), q.len());
    let id = |a: usize, b: usize| a * nq + b;
    let mut labels = Vec::with_capacity(np * nq);
    for a in 0..np {
        for b in 0..nq {
            labels.push(format!("({},{})", p.labels[a], q.labels[b]));
        }
    }
    let mut covers = Vec::new();
    for &(a1, a2) in &p.covers {
        for b in 0..nq {
            covers.push((id(a1, b), id(a2, b)));
        }
    }
    for a in 0..np {
        for &(b1, b2) in &q.covers {
            covers.push((id(a, b1), id(a, b2)));
        }
    }
    let mut upset = BitMatrix::new(np * nq);
    for a1 in 0..np {
        for a2 in p.above(a1) {
            for b1 in 0..nq {
                for b2 in q.above(b1) {
                    upset.set(id(a1, b1), id(a2, b2));
                }
            }
        }
    }
    Poset::from_parts(labels, covers, upset)
}

/// The single-element poset.
pub fn singleton() -> Poset {
    Poset::from_parts(vec!["*".to_string()], Vec::new(), {
        let mut m = BitMatrix::new(1);
        m.set(0, 0);
        m
    })
}
