use serde::{Deserialize, Serialize};

use super::{flatten_table, unflatten_table, SCHEMA};
use crate::elemset::{ElemSet, MAX_CARRIER};
use crate::error::{Error, Result};

/// A finite monoid given by its full operation table.
///
/// Associativity and the neutral law are verified exhaustively at
/// construction, so every `FinMonoid` value is a monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinMonoid {
    names: Vec<String>,
    op: Vec<usize>,
    neutral: usize,
}

impl FinMonoid {
    pub fn new(names: Vec<String>, op: Vec<Vec<usize>>, neutral: usize) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty carrier".into()));
        }
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        let op = flatten_table(&op, n, "op")?;
        if neutral >= n {
            return Err(Error::InvalidTable(format!("neutral {neutral} out of range")));
        }
        let m = FinMonoid { names, op, neutral };
        for b in 0..n {
            if m.op(neutral, b) != b || m.op(b, neutral) != b {
                return Err(Error::InvalidTable(format!(
                    "{} is not neutral for {}",
                    m.names[neutral], m.names[b]
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m.op(m.op(a, b), c) != m.op(a, m.op(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({}, {}, {})",
                            m.names[a], m.names[b], m.names[c]
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Build from an element list and a closure over indices.
    pub fn from_fn(
        names: Vec<String>,
        neutral: usize,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = names.len();
        let table = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        Self::new(names, table, neutral)
    }

    pub fn trivial() -> Self {
        FinMonoid { names: vec!["1".into()], op: vec![0], neutral: 0 }
    }

    /// The unit group of `Z/n`, elements listed in increasing order.
    pub fn cyclic_units(n: u64) -> Result<Self> {
        let units: Vec<u64> = (1..n.max(2)).filter(|&u| gcd(u, n) == 1).collect();
        let names = units.iter().map(|u| u.to_string()).collect();
        Self::from_fn(names, 0, |a, b| {
            let p = units[a] * units[b] % n;
            units.iter().position(|&u| u == p).expect("units are closed")
        })
    }

    /// The additive group `Z/n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::from_fn(names, 0, |a, b| (a + b) % n)
    }

    /// The symmetric group on `n ≤ 4` points; composition `(στ)(i) = σ(τ(i))`.
    ///
    /// Elements are named in cycle notation, `e` first.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 4 {
            return Err(Error::InvalidTable(format!("symmetric group S{n} not supported")));
        }
        let mut perms = permutations(n);
        perms.sort_by_key(|p| (cycle_name(p).len(), cycle_name(p)));
        let names = perms.iter().map(|p| cycle_name(p)).collect();
        Self::from_fn(names, 0, |a, b| {
            let comp: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
            perms.iter().position(|p| *p == comp).unwrap()
        })
    }

    /// Direct product; elements ordered lexicographically by component.
    pub fn product(&self, other: &FinMonoid) -> Result<Self> {
        let m = other.len();
        let names = (0..self.len() * m)
            .map(|i| format!("({},{})", self.names[i / m], other.names[i % m]))
            .collect();
        Self::from_fn(names, self.neutral * m + other.neutral, |x, y| {
            self.op(x / m, y / m) * m + other.op(x % m, y % m)
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.len() + b]
    }

    pub fn neutral(&self) -> usize {
        self.neutral
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&b| self.op(a, b) == self.neutral && self.op(b, a) == self.neutral)
    }

    pub fn is_group(&self) -> bool {
        (0..self.len()).all(|a| self.inverse(a).is_some())
    }

    /// Setwise product `A·B`.
    pub fn set_op(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in a {
            for y in b {
                out.insert(self.op(x, y));
            }
        }
        out
    }

    /// `a·S` for a single element.
    pub fn left_translate(&self, a: usize, s: ElemSet) -> ElemSet {
        s.map(|x| self.op(a, x))
    }

    pub fn right_translate(&self, s: ElemSet, a: usize) -> ElemSet {
        s.map(|x| self.op(x, a))
    }

    /// Whether `s` contains the neutral element and is closed.
    pub fn is_submonoid(&self, s: ElemSet) -> bool {
        s.contains(self.neutral) && self.set_op(s, s).is_subset(s)
    }

    /// Smallest submonoid containing `gens`.
    pub fn generated(&self, gens: ElemSet) -> ElemSet {
        let mut s = gens.union(ElemSet::singleton(self.neutral));
        loop {
            let next = s.union(self.set_op(s, s));
            if next == s {
                return s;
            }
            s = next;
        }
    }

    pub fn to_json(&self) -> MonoidJson {
        MonoidJson {
            schema: SCHEMA.into(),
            elements: self.names.clone(),
            op: unflatten_table(&self.op, self.len()),
            neutral: self.neutral,
        }
    }

    pub fn from_json(doc: MonoidJson) -> Result<Self> {
        Self::new(doc.elements, doc.op, doc.neutral)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonoidJson {
    #[serde(default = "super::schema_tag")]
    pub schema: String,
    pub elements: Vec<String>,
    pub op: Vec<Vec<usize>>,
    pub neutral: usize,
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut j = p[start];
        while j != start {
            seen[j] = true;
            cycle.push(j);
            j = p[j];
        }
        out.push('(');
        for c in cycle {
            out.push_str(&(c + 1).to_string());
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_has_expected_shape() {
        let s3 = FinMonoid::symmetric(3).unwrap();
        assert_eq!(s3.len(), 6);
        assert_eq!(s3.name(0), "e");
        assert!(s3.is_group());
        assert!(!s3.is_commutative());
        let t = s3.index_of("(12)").unwrap();
        assert_eq!(s3.op(t, t), 0);
        let r = s3.index_of("(123)").unwrap();
        assert_eq!(s3.op(s3.op(r, r), r), 0);
    }

    #[test]
    fn cyclic_units_mod_7() {
        let u = FinMonoid::cyclic_units(7).unwrap();
        assert_eq!(u.names(), ["1", "2", "3", "4", "5", "6"]);
        assert_eq!(u.op(u.index_of("3").unwrap(), u.index_of("5").unwrap()), 0);
    }

    #[test]
    fn rejects_non_associative_table() {
        // a*a = e, e neutral, a*b = b*a = ... pick a table that breaks associativity
        let names = vec!["e".to_string(), "a".into(), "b".into()];
        let op = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 2, 0]];
        assert!(FinMonoid::new(names, op, 0).is_err());
    }

    #[test]
    fn rejects_bad_neutral() {
        let names = vec!["e".to_string(), "a".into()];
        let op = vec![vec![0, 0], vec![0, 1]];
        assert!(FinMonoid::new(names, op, 0).is_err());
    }

    #[test]
    fn generated_submonoid() {
        let u = FinMonoid::cyclic_units(7).unwrap();
        let two = u.index_of("2").unwrap();
        let g = u.generated(ElemSet::singleton(two));
        let names: Vec<_> = g.iter().map(|i| u.name(i)).collect();
        assert_eq!(names, ["1", "2", "4"]);
    }

    #[test]
    fn json_round_trip() {
        let s3 = FinMonoid::symmetric(3).unwrap();
        let doc = serde_json::to_string(&s3.to_json()).unwrap();
        let back = FinMonoid::from_json(serde_json::from_str(&doc).unwrap()).unwrap();
        assert_eq!(back, s3);
    }
}
