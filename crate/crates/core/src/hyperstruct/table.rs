use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::carrier::FinRing;
use crate::elemset::{show, ElemSet, MAX_CARRIER};
use crate::error::{Error, Result};
use crate::SCHEMA;

/// A finite hyperstructure: hyperaddition into nonempty subsets, an
/// optional single-valued multiplication, optional zero and one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperTable {
    names: Vec<String>,
    hsum: Vec<ElemSet>,
    mul: Option<Vec<usize>>,
    zero: Option<usize>,
    one: Option<usize>,
}

impl HyperTable {
    pub fn new(
        names: Vec<String>,
        hsum: Vec<Vec<ElemSet>>,
        mul: Option<Vec<Vec<usize>>>,
        zero: Option<usize>,
        one: Option<usize>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty carrier".into()));
        }
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        if hsum.len() != n || hsum.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTable(format!("hsum table must be {n}x{n}")));
        }
        let full = ElemSet::full(n);
        let hsum: Vec<ElemSet> = hsum.into_iter().flatten().collect();
        for (i, s) in hsum.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidTable(format!(
                    "empty hypersum {} + {}",
                    names[i / n],
                    names[i % n]
                )));
            }
            if !s.is_subset(full) {
                return Err(Error::InvalidTable("hypersum entry out of range".into()));
            }
        }
        let mul = mul.map(|m| crate::util::flatten_table(&m, n, "mul")).transpose()?;
        for idx in [zero, one].into_iter().flatten() {
            if idx >= n {
                return Err(Error::InvalidTable(format!("index {idx} out of range")));
            }
        }
        if one.is_some() && mul.is_none() {
            return Err(Error::InvalidTable("one given without multiplication".into()));
        }
        let t = HyperTable { names, hsum, mul, zero, one };
        if let Some(z) = zero {
            for a in 0..n {
                if t.hsum(z, a) != ElemSet::singleton(a) || t.hsum(a, z) != ElemSet::singleton(a) {
                    return Err(Error::InvalidTable(format!("zero is not hyperneutral at {}", t.names[a])));
                }
            }
        }
        Ok(t)
    }

    pub fn from_fn(
        names: Vec<String>,
        hsum: impl Fn(usize, usize) -> ElemSet,
        mul: Option<&dyn Fn(usize, usize) -> usize>,
        zero: Option<usize>,
        one: Option<usize>,
    ) -> Result<Self> {
        let n = names.len();
        let h = (0..n).map(|a| (0..n).map(|b| hsum(a, b)).collect()).collect();
        let m = mul.map(|f| (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect());
        Self::new(names, h, m, zero, one)
    }

    /// The Krasner hyperfield `{0, 1}` with `1 ⊞ 1 = {0, 1}`.
    pub fn krasner() -> Self {
        let s = |v: &[usize]| v.iter().copied().collect::<ElemSet>();
        Self::new(
            vec!["0".into(), "1".into()],
            vec![vec![s(&[0]), s(&[1])], vec![s(&[1]), s(&[0, 1])]],
            Some(vec![vec![0, 0], vec![0, 1]]),
            Some(0),
            Some(1),
        )
        .expect("krasner table")
    }

    /// The sign hyperfield `{0, 1, -1}`.
    pub fn signs() -> Self {
        let names = vec!["0".to_string(), "1".into(), "-1".into()];
        let sign = [0i8, 1, -1];
        let idx = |v: i8| sign.iter().position(|&x| x == v).unwrap();
        Self::from_fn(
            names,
            |a, b| match (sign[a], sign[b]) {
                (0, y) => ElemSet::singleton(idx(y)),
                (x, 0) => ElemSet::singleton(idx(x)),
                (x, y) if x == y => ElemSet::singleton(idx(x)),
                _ => ElemSet::full(3),
            },
            Some(&|a, b| idx(sign[a] * sign[b])),
            Some(0),
            Some(1),
        )
        .expect("sign table")
    }

    /// The one-element hyperfield where `0 = 1`.
    pub fn trivial() -> Self {
        Self::new(vec!["0".into()], vec![vec![ElemSet::singleton(0)]], Some(vec![vec![0]]), Some(0), Some(0))
            .expect("trivial table")
    }

    /// A ring viewed as a hyperring with singleton sums.
    pub fn from_ring(r: &FinRing) -> Self {
        Self::from_fn(
            r.names().to_vec(),
            |a, b| ElemSet::singleton(r.add(a, b)),
            Some(&|a, b| r.mul(a, b)),
            Some(r.zero()),
            Some(r.one()),
        )
        .expect("ring tables are valid")
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

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn has_mul(&self) -> bool {
        self.mul.is_some()
    }

    pub fn hsum(&self, a: usize, b: usize) -> ElemSet {
        self.hsum[a * self.len() + b]
    }

    /// Product; `None` when the table has no multiplication.
    pub fn mul(&self, a: usize, b: usize) -> Option<usize> {
        self.mul.as_ref().map(|m| m[a * self.len() + b])
    }

    pub(crate) fn mul_unchecked(&self, a: usize, b: usize) -> usize {
        self.mul.as_ref().expect("table has multiplication")[a * self.len() + b]
    }

    /// `S₁ ⊞ S₂` as the union of elementwise hypersums.
    pub fn hsum_sets(&self, s1: ElemSet, s2: ElemSet) -> Result<ElemSet> {
        if s1.is_empty() || s2.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.hsum_sets_raw(s1, s2))
    }

    pub(crate) fn hsum_sets_raw(&self, s1: ElemSet, s2: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for a in s1 {
            for b in s2 {
                out = out.union(self.hsum(a, b));
            }
        }
        out
    }

    /// Elementwise product set `S₁·S₂`.
    pub fn mul_sets(&self, s1: ElemSet, s2: ElemSet) -> Option<ElemSet> {
        self.mul.as_ref()?;
        let mut out = ElemSet::EMPTY;
        for a in s1 {
            for b in s2 {
                out.insert(self.mul_unchecked(a, b));
            }
        }
        Some(out)
    }

    /// All `b` with `0 ∈ a ⊞ b` and `0 ∈ b ⊞ a`.
    pub fn hypernegatives(&self, a: usize) -> ElemSet {
        match self.zero {
            None => ElemSet::EMPTY,
            Some(z) => (0..self.len())
                .filter(|&b| self.hsum(a, b).contains(z) && self.hsum(b, a).contains(z))
                .collect(),
        }
    }

    /// The hypernegative when it exists and is unique.
    pub fn negative(&self, a: usize) -> Option<usize> {
        let s = self.hypernegatives(a);
        (s.len() == 1).then(|| s.first().unwrap())
    }

    /// Relabel: element `i` of `self` becomes element `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.len();
        if perm.len() != n || ElemSet::from_iter(perm.iter().copied()) != self.all() {
            return Err(Error::InvalidTable("not a permutation".into()));
        }
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let names = (0..n).map(|j| self.names[inv[j]].clone()).collect();
        let hsum = (0..n)
            .map(|a| (0..n).map(|b| self.hsum(inv[a], inv[b]).map(|x| perm[x])).collect())
            .collect();
        let mul = self
            .mul
            .as_ref()
            .map(|_| (0..n).map(|a| (0..n).map(|b| perm[self.mul_unchecked(inv[a], inv[b])]).collect()).collect());
        Self::new(names, hsum, mul, self.zero.map(|z| perm[z]), self.one.map(|o| perm[o]))
    }

    /// Equality of all tables, ignoring element names.
    pub fn same_structure(&self, other: &HyperTable) -> bool {
        self.hsum == other.hsum && self.mul == other.mul && self.zero == other.zero && self.one == other.one
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.len() {
            return Err(Error::SizeMismatch(format!("{} names for {} elements", names.len(), self.len())));
        }
        self.names = names;
        Ok(self)
    }

    pub fn show(&self, s: ElemSet) -> String {
        show(s, &self.names)
    }

    pub fn to_json(&self) -> HyperTableJson {
        let n = self.len();
        HyperTableJson {
            schema: SCHEMA.into(),
            elements: self.names.clone(),
            mul: self.mul.as_ref().map(|m| m.chunks(n).map(|c| c.to_vec()).collect()),
            hsum: self.hsum.chunks(n).map(|c| c.to_vec()).collect(),
            zero: self.zero,
            one: self.one,
        }
    }

    pub fn from_json(doc: HyperTableJson) -> Result<Self> {
        Self::new(doc.elements, doc.hsum, doc.mul, doc.zero, doc.one)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("table serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(serde_json::from_str(s)?)
    }

    /// The hyperaddition as a CSV matrix of brace-wrapped sets.
    pub fn hsum_csv(&self) -> String {
        let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
        let mut out = String::from("\"+\"");
        for name in &self.names {
            out.push(',');
            out.push_str(&quote(name));
        }
        out.push('\n');
        for a in 0..self.len() {
            out.push_str(&quote(&self.names[a]));
            for b in 0..self.len() {
                let _ = write!(out, ",{}", quote(&self.show(self.hsum(a, b))));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HyperTableJson {
    #[serde(default = "crate::util::schema_tag")]
    pub schema: String,
    pub elements: Vec<String>,
    pub mul: Option<Vec<Vec<usize>>>,
    pub hsum: Vec<Vec<ElemSet>>,
    pub zero: Option<usize>,
    pub one: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> ElemSet {
        v.iter().copied().collect()
    }

    #[test]
    fn krasner_one_plus_one() {
        let k = HyperTable::krasner();
        assert_eq!(k.hsum_sets(set(&[1]), set(&[1])).unwrap(), set(&[0, 1]));
        assert_eq!(k.negative(1), Some(1));
    }

    #[test]
    fn signs_set_sum() {
        let s = HyperTable::signs();
        assert_eq!(s.hsum_sets(set(&[1, 2]), set(&[1])).unwrap(), set(&[0, 1, 2]));
        assert_eq!(s.negative(2), Some(1));
    }

    #[test]
    fn zero_set_is_neutral() {
        let s = HyperTable::signs();
        for v in ElemSet::nonempty_subsets(3) {
            assert_eq!(s.hsum_sets(set(&[0]), v).unwrap(), v);
        }
    }

    #[test]
    fn empty_inputs_rejected() {
        let k = HyperTable::krasner();
        assert!(matches!(k.hsum_sets(ElemSet::EMPTY, set(&[1])), Err(Error::EmptySet)));
    }

    #[test]
    fn empty_entries_rejected() {
        let r = HyperTable::new(
            vec!["0".into(), "1".into()],
            vec![vec![set(&[0]), set(&[1])], vec![set(&[1]), ElemSet::EMPTY]],
            None,
            Some(0),
            None,
        );
        assert!(r.is_err());
    }

    #[test]
    fn non_neutral_zero_rejected() {
        let r = HyperTable::new(
            vec!["0".into(), "1".into()],
            vec![vec![set(&[0]), set(&[0, 1])], vec![set(&[1]), set(&[1])]],
            None,
            Some(0),
            None,
        );
        assert!(r.is_err());
    }

    #[test]
    fn json_and_csv() {
        let s = HyperTable::signs();
        let text = s.to_json_string();
        assert!(text.contains("\"schema\": \"hyperforge/1\""));
        assert_eq!(HyperTable::from_json_str(&text).unwrap(), s);
        let csv = HyperTable::krasner().hsum_csv();
        assert_eq!(csv.lines().nth(2).unwrap(), "\"1\",\"{1}\",\"{0, 1}\"");
    }

    #[test]
    fn permutation_preserves_structure() {
        let s = HyperTable::signs();
        let p = s.permuted(&[0, 2, 1]).unwrap();
        assert_eq!(p.names(), ["0", "-1", "1"]);
        assert_eq!(p.one(), Some(2));
        assert_eq!(p.permuted(&[0, 2, 1]).unwrap(), s);
    }
}
