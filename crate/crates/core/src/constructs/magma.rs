use std::collections::HashMap;

use serde::Serialize;

use crate::carrier::FinMonoid;
use crate::error::{Error, Result};

pub const DEFAULT_TERM_BUDGET: usize = 200_000;

/// A term of the free `T`-magma, with children stored as universe indices.
/// Scalars sit on leaves; the neutral scalar is the bare generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Leaf { gen: usize, scalar: usize },
    Node(usize, usize),
}

/// Every term up to a height bound, listed level by level, so the universe
/// for depth `d` is a prefix of the one for `d + 1`.
#[derive(Clone, Debug)]
pub struct TermUniverse {
    pub gens: Vec<String>,
    pub t: FinMonoid,
    pub depth: usize,
    terms: Vec<Term>,
    height: Vec<usize>,
    index: HashMap<Term, usize>,
}

/// Number of trees of height at most `d` over `leaves` leaves, saturating.
pub fn term_count(leaves: usize, d: usize) -> usize {
    (0..d).fold(leaves, |n, _| leaves.saturating_add(n.saturating_mul(n)))
}

impl TermUniverse {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, i: usize) -> Term {
        self.terms[i]
    }

    pub fn height(&self, i: usize) -> usize {
        self.height[i]
    }

    pub fn get(&self, t: Term) -> Option<usize> {
        self.index.get(&t).copied()
    }

    pub fn leaf(&self, gen: usize) -> usize {
        self.index[&Term::Leaf { gen, scalar: self.t.neutral() }]
    }

    pub fn node(&self, u: usize, v: usize) -> Option<usize> {
        self.get(Term::Node(u, v))
    }

    /// `t·u`, pushed down to the leaves; height is unchanged.
    pub fn act(&self, t: usize, u: usize) -> usize {
        match self.terms[u] {
            Term::Leaf { gen, scalar } => self.index[&Term::Leaf { gen, scalar: self.t.op(t, scalar) }],
            Term::Node(a, b) => self.index[&Term::Node(self.act(t, a), self.act(t, b))],
        }
    }

    /// Generators at the leaves, left to right.
    pub fn leaves(&self, u: usize) -> Vec<usize> {
        match self.terms[u] {
            Term::Leaf { gen, .. } => vec![gen],
            Term::Node(a, b) => {
                let mut l = self.leaves(a);
                l.extend(self.leaves(b));
                l
            }
        }
    }

    pub fn show(&self, u: usize) -> String {
        match self.terms[u] {
            Term::Leaf { gen, scalar } if scalar == self.t.neutral() => self.gens[gen].clone(),
            Term::Leaf { gen, scalar } => format!("{}·{}", self.t.name(scalar), self.gens[gen]),
            Term::Node(a, b) => format!("({}*{})", self.show(a), self.show(b)),
        }
    }
}

/// All terms over `gens` with leaf scalars from `t`, of height at most `depth`.
pub fn free_t_magma(gens: Vec<String>, t: &FinMonoid, depth: usize, budget: usize) -> Result<TermUniverse> {
    let leaves = gens.len() * t.len();
    let count = term_count(leaves, depth);
    if count > budget {
        return Err(Error::BudgetExceeded(format!("{count} terms at depth {depth} exceed {budget}")));
    }
    let mut u = TermUniverse {
        gens,
        t: t.clone(),
        depth,
        terms: Vec::with_capacity(count),
        height: Vec::with_capacity(count),
        index: HashMap::with_capacity(count),
    };
    let push = |u: &mut TermUniverse, term: Term, h: usize| {
        u.index.insert(term, u.terms.len());
        u.terms.push(term);
        u.height.push(h);
    };
    for gen in 0..u.gens.len() {
        push(&mut u, Term::Leaf { gen, scalar: t.neutral() }, 0);
        for scalar in (0..t.len()).filter(|&s| s != t.neutral()) {
            push(&mut u, Term::Leaf { gen, scalar }, 0);
        }
    }
    for h in 1..=depth {
        let below = u.len();
        for a in 0..below {
            for b in 0..below {
                if u.height[a].max(u.height[b]) == h - 1 {
                    push(&mut u, Term::Node(a, b), h);
                }
            }
        }
    }
    Ok(u)
}

/// An equivalence on a term universe, stored as a union-find forest.
#[derive(Clone, Debug)]
pub struct CongRel {
    parent: Vec<usize>,
}

impl CongRel {
    pub fn discrete(n: usize) -> Self {
        CongRel { parent: (0..n).collect() }
    }

    pub fn find(&self, mut i: usize) -> usize {
        while self.parent[i] != i {
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // the smaller index becomes the root, so roots are class minima
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Class index of each term, numbered by least member.
    pub fn class_ids(&self) -> Vec<usize> {
        let mut id = vec![usize::MAX; self.parent.len()];
        let mut next = 0;
        (0..self.parent.len())
            .map(|i| {
                let r = self.find(i);
                if id[r] == usize::MAX {
                    id[r] = next;
                    next += 1;
                }
                id[r]
            })
            .collect()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let ids = self.class_ids();
        let mut out = vec![Vec::new(); ids.iter().max().map_or(0, |m| m + 1)];
        for (i, &c) in ids.iter().enumerate() {
            out[c].push(i);
        }
        out
    }

    pub fn class_count(&self) -> usize {
        (0..self.parent.len()).filter(|&i| self.parent[i] == i).count()
    }

    /// Whether `u ~ u′` and `v ~ v′` imply `u*v ~ u′*v′` and `t·u ~ t·u′`
    /// whenever those terms exist.
    pub fn is_congruence(&self, universe: &TermUniverse) -> bool {
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        for i in 0..universe.len() {
            if let Term::Node(a, b) = universe.term(i) {
                let key = (self.find(a), self.find(b));
                if let Some(&j) = seen.get(&key) {
                    if !self.same(i, j) {
                        return false;
                    }
                } else {
                    seen.insert(key, i);
                }
            }
        }
        (0..universe.t.len()).all(|t| {
            let mut img: HashMap<usize, usize> = HashMap::new();
            (0..universe.len()).all(|i| {
                let j = universe.act(t, i);
                *img.entry(self.find(i)).or_insert(j) == j || self.same(img[&self.find(i)], j)
            })
        })
    }
}

/// Least congruence on the universe containing `pairs`.
pub fn congruence_closure(universe: &TermUniverse, pairs: &[(usize, usize)]) -> Result<CongRel> {
    let n = universe.len();
    if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= n || b >= n) {
        return Err(Error::OutsideUniverse(format!("({a}, {b}) in a universe of {n} terms")));
    }
    let mut rel = CongRel::discrete(n);
    for &(a, b) in pairs {
        rel.union(a, b);
    }
    loop {
        let mut changed = false;
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        for i in 0..n {
            if let Term::Node(a, b) = universe.term(i) {
                let key = (rel.find(a), rel.find(b));
                match seen.get(&key) {
                    Some(&j) => changed |= rel.union(i, j),
                    None => {
                        seen.insert(key, i);
                    }
                }
            }
        }
        for t in 0..universe.t.len() {
            let mut img: HashMap<usize, usize> = HashMap::new();
            for i in 0..n {
                let j = universe.act(t, i);
                match img.get(&rel.find(i)) {
                    Some(&k) => changed |= rel.union(j, k),
                    None => {
                        img.insert(rel.find(i), j);
                    }
                }
            }
        }
        if !changed {
            return Ok(rel);
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassListing {
    pub depth: usize,
    pub terms: usize,
    pub classes: Vec<Vec<String>>,
}

impl ClassListing {
    pub fn new(u: &TermUniverse, rel: &CongRel) -> Self {
        let classes = rel.classes().iter().map(|c| c.iter().map(|&i| u.show(i)).collect()).collect();
        ClassListing { depth: u.depth, terms: u.len(), classes }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn one_generator_depth_two() {
        let u = free_t_magma(gens(&["x"]), &FinMonoid::trivial(), 2, 100).unwrap();
        let shown: Vec<String> = (0..u.len()).map(|i| u.show(i)).collect();
        assert_eq!(shown, vec!["x", "(x*x)", "(x*(x*x))", "((x*x)*x)", "((x*x)*(x*x))"]);
        assert_eq!(term_count(1, 2), 5);
    }

    #[test]
    fn depth_zero_is_generators() {
        let u = free_t_magma(gens(&["x", "y", "z"]), &FinMonoid::trivial(), 0, 100).unwrap();
        assert_eq!(u.len(), 3);
    }

    #[test]
    fn two_generators_with_scalars() {
        let t = FinMonoid::cyclic_units(3).unwrap();
        let u = free_t_magma(gens(&["x", "y"]), &t, 1, 100).unwrap();
        // four leaves x, 2·x, y, 2·y and sixteen products
        assert_eq!(u.len(), 4 + 16);
        assert!((0..u.len()).any(|i| u.show(i) == "2·y"));
        let bare: Vec<String> = (0..u.len())
            .filter(|&i| !u.show(i).contains('·'))
            .map(|i| u.show(i))
            .collect();
        assert_eq!(bare, vec!["x", "y", "(x*x)", "(x*y)", "(y*x)", "(y*y)"]);
    }

    #[test]
    fn budget() {
        let t = FinMonoid::cyclic_units(3).unwrap();
        assert!(matches!(free_t_magma(gens(&["x", "y", "z"]), &t, 4, 1000), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn closure_basics() {
        let u = free_t_magma(gens(&["x", "y", "w"]), &FinMonoid::trivial(), 1, 100).unwrap();
        let none = congruence_closure(&u, &[]).unwrap();
        assert_eq!(none.class_count(), u.len());
        let (x, y, w) = (u.leaf(0), u.leaf(1), u.leaf(2));
        let rel = congruence_closure(&u, &[(x, y)]).unwrap();
        assert!(rel.same(u.node(x, w).unwrap(), u.node(y, w).unwrap()));
        assert!(rel.is_congruence(&u));
        assert!(congruence_closure(&u, &[(0, 999)]).is_err());
    }

    #[test]
    fn closure_propagates_scalars() {
        let t = FinMonoid::cyclic_units(3).unwrap();
        let u = free_t_magma(gens(&["x", "y"]), &t, 1, 100).unwrap();
        let rel = congruence_closure(&u, &[(u.leaf(0), u.leaf(1))]).unwrap();
        let two = t.index_of("2").unwrap();
        assert!(rel.same(u.act(two, u.leaf(0)), u.act(two, u.leaf(1))));
        assert!(rel.is_congruence(&u));
    }
}
