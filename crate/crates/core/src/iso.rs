//! Poset isomorphism by colour refinement followed by backtracking.
//!
//! Both posets are coloured jointly so colour ids are comparable: the initial
//! colour of an element is its height, depth, cover degrees and up/down-set
//! sizes, and each round splits classes by the multisets of neighbouring
//! colours along covers. The search then maps elements of `P` one at a time,
//! preferring elements adjacent to ones already mapped, and checks the full
//! order relation against every mapped element.

use std::collections::BTreeMap;

use crate::poset::{ElementId, Poset};

type Sig = (usize, Vec<usize>, Vec<usize>);

fn depths(p: &Poset) -> Vec<usize> {
    let h = p.heights();
    let mut order: Vec<ElementId> = (0..p.len()).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(h[x]));
    let mut depth = vec![0usize; p.len()];
    for x in order {
        depth[x] = p.upper_covers(x).iter().map(|&u| depth[u] + 1).max().unwrap_or(0);
    }
    depth
}

fn initial_colours(p: &Poset) -> Vec<[usize; 6]> {
    let d = depths(p);
    (0..p.len())
        .map(|x| {
            [
                p.heights()[x],
                d[x],
                p.upper_covers(x).len(),
                p.lower_covers(x).len(),
                p.count_above(x),
                p.count_below(x),
            ]
        })
        .collect()
}

fn histogram(colours: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in colours {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// Joint refinement; `None` when the colour histograms ever disagree.
fn refine(p: &Poset, q: &Poset) -> Option<(Vec<usize>, Vec<usize>)> {
    let (ip, iq) = (initial_colours(p), initial_colours(q));
    let mut table: BTreeMap<[usize; 6], usize> = BTreeMap::new();
    for c in ip.iter().chain(&iq) {
        let next = table.len();
        table.entry(*c).or_insert(next);
    }
    let mut cp: Vec<usize> = ip.iter().map(|c| table[c]).collect();
    let mut cq: Vec<usize> = iq.iter().map(|c| table[c]).collect();
    let mut classes = table.len();
    loop {
        if histogram(&cp) != histogram(&cq) {
            return None;
        }
        let sig = |poset: &Poset, col: &[usize], x: ElementId| -> Sig {
            let mut up: Vec<usize> = poset.upper_covers(x).iter().map(|&u| col[u]).collect();
            let mut down: Vec<usize> = poset.lower_covers(x).iter().map(|&u| col[u]).collect();
            up.sort_unstable();
            down.sort_unstable();
            (col[x], up, down)
        };
        let sp: Vec<Sig> = (0..p.len()).map(|x| sig(p, &cp, x)).collect();
        let sq: Vec<Sig> = (0..q.len()).map(|x| sig(q, &cq, x)).collect();
        let mut table: BTreeMap<&Sig, usize> = BTreeMap::new();
        for s in sp.iter().chain(&sq) {
            let next = table.len();
            table.entry(s).or_insert(next);
        }
        let next_p: Vec<usize> = sp.iter().map(|s| table[s]).collect();
        let next_q: Vec<usize> = sq.iter().map(|s| table[s]).collect();
        let new_classes = table.len();
        cp = next_p;
        cq = next_q;
        if new_classes == classes {
            if histogram(&cp) != histogram(&cq) {
                return None;
            }
            return Some((cp, cq));
        }
        classes = new_classes;
    }
}

struct Search<'a> {
    p: &'a Poset,
    q: &'a Poset,
    cp: Vec<usize>,
    cq: Vec<usize>,
    class_size: BTreeMap<usize, usize>,
    map: Vec<Option<ElementId>>,
    used: Vec<bool>,
    mapped: Vec<ElementId>,
}

impl Search<'_> {
    /// Next unmapped element of `P`: adjacent to the mapped part if
    /// possible, then smallest colour class.
    fn pick(&self) -> Option<ElementId> {
        let key = |x: ElementId| {
            let adjacent = self
                .p
                .upper_covers(x)
                .iter()
                .chain(self.p.lower_covers(x))
                .any(|&u| self.map[u].is_some());
            (!adjacent, self.class_size[&self.cp[x]], x)
        };
        (0..self.p.len()).filter(|&x| self.map[x].is_none()).min_by_key(|&x| key(x))
    }

    fn candidates(&self, x: ElementId) -> Vec<ElementId> {
        // Restrict to images of a mapped cover neighbour when one exists.
        if let Some(&u) = self.p.lower_covers(x).iter().find(|&&u| self.map[u].is_some()) {
            return self.q.upper_covers(self.map[u].unwrap()).to_vec();
        }
        if let Some(&u) = self.p.upper_covers(x).iter().find(|&&u| self.map[u].is_some()) {
            return self.q.lower_covers(self.map[u].unwrap()).to_vec();
        }
        (0..self.q.len()).collect()
    }

    fn consistent(&self, x: ElementId, y: ElementId) -> bool {
        !self.used[y]
            && self.cq[y] == self.cp[x]
            && self.mapped.iter().all(|&u| {
                let fu = self.map[u].unwrap();
                self.p.le(u, x) == self.q.le(fu, y) && self.p.le(x, u) == self.q.le(y, fu)
            })
    }

    fn run(&mut self) -> bool {
        let Some(x) = self.pick() else {
            return true;
        };
        for y in self.candidates(x) {
            if !self.consistent(x, y) {
                continue;
            }
            self.map[x] = Some(y);
            self.used[y] = true;
            self.mapped.push(x);
            if self.run() {
                return true;
            }
            self.mapped.pop();
            self.used[y] = false;
            self.map[x] = None;
        }
        false
    }
}

/// An order isomorphism `P -> Q` as a vector indexed by `P`'s ids, if one
/// exists.
pub fn find_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<ElementId>> {
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return None;
    }
    let (cp, cq) = refine(p, q)?;
    let class_size = histogram(&cp);
    let mut search = Search {
        p,
        q,
        cp,
        cq,
        class_size,
        map: vec![None; p.len()],
        used: vec![false; q.len()],
        mapped: Vec::with_capacity(p.len()),
    };
    if search.run() {
        Some(search.map.into_iter().map(|y| y.expect("complete map")).collect())
    } else {
        None
    }
}

pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    find_isomorphism(p, q).is_some()
}

/// Whether `map` is a bijection `P -> Q` that preserves and reflects `<=`.
pub fn is_order_isomorphism(p: &Poset, q: &Poset, map: &[ElementId]) -> bool {
    if p.len() != q.len() || map.len() != p.len() {
        return false;
    }
    let mut seen = vec![false; q.len()];
    for &y in map {
        if y >= q.len() || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..p.len()).all(|a| (0..p.len()).all(|b| p.le(a, b) == q.le(map[a], map[b])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean, example_sym, example_uni, total};
    use crate::poset::product;

    #[test]
    fn size_mismatch() {
        assert!(!is_isomorphic(&boolean(2), &total(2)));
    }

    #[test]
    fn boolean_three_is_cube_of_t1() {
        let t = total(1);
        let cube = product(&product(&t, &t), &t);
        let map = find_isomorphism(&boolean(3), &cube).unwrap();
        assert!(is_order_isomorphism(&boolean(3), &cube, &map));
    }

    #[test]
    fn same_profile_different_order() {
        // Both have Whitney profile (1,2,1) but the second's top covers one atom.
        let diamond = Poset::from_covers(["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap();
        let other = Poset::from_covers(["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1")]).unwrap();
        assert!(!is_isomorphic(&diamond, &other));
        assert!(!is_isomorphic(&example_sym(), &example_uni()));
    }
}
