use serde::{Deserialize, Serialize};

use crate::carrier::{FinRing, FinSemiring};
use crate::elemset::{show, ElemSet};
use crate::error::{Error, Result};
use crate::hyperstruct::{AxiomReport, Verdict};
use crate::SCHEMA;

/// Additive cosets `r + L` of a ring, indexed by least representative
/// (the class of zero first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveCosets {
    pub cosets: Vec<ElemSet>,
    pub coset_of: Vec<usize>,
}

impl AdditiveCosets {
    fn build(n: usize, translate: impl Fn(usize) -> ElemSet) -> Self {
        let mut cosets = Vec::new();
        let mut coset_of = vec![usize::MAX; n];
        for r in 0..n {
            if coset_of[r] != usize::MAX {
                continue;
            }
            let c = translate(r);
            for x in c {
                coset_of[x] = cosets.len();
            }
            cosets.push(c);
        }
        AdditiveCosets { cosets, coset_of }
    }

    pub fn rep(&self, c: usize) -> usize {
        self.cosets[c].first().expect("nonempty coset")
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

/// `R/L` for a left ideal `L`: ordinary coset addition and the
/// hypermultiplication `(r₁+L) ⊡ (r₂+L) = {(r₁+a)r₂ + L : a ∈ L}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MHyperRing {
    pub names: Vec<String>,
    pub classes: AdditiveCosets,
    add: Vec<usize>,
    hmul: Vec<ElemSet>,
    pub one: usize,
}

impl MHyperRing {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b]
    }

    pub fn hmul(&self, a: usize, b: usize) -> ElemSet {
        self.hmul[a * self.len() + b]
    }

    pub fn add_sets(&self, s1: ElemSet, s2: ElemSet) -> ElemSet {
        s1.iter().flat_map(|a| s2.iter().map(move |b| (a, b))).map(|(a, b)| self.add(a, b)).collect()
    }

    pub fn hmul_sets(&self, s1: ElemSet, s2: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for a in s1 {
            for b in s2 {
                out = out.union(self.hmul(a, b));
            }
        }
        out
    }

    /// Whether every product is a single coset.
    pub fn is_single_valued(&self) -> bool {
        self.hmul.iter().all(|s| s.len() == 1)
    }

    /// `x ⊡ (y + z) ⊆ x⊡y + x⊡z` and `(y + z) ⊡ x ⊆ y⊡x + z⊡x` over all
    /// coset triples.
    pub fn check_subset_distributivity(&self) -> AxiomReport {
        let n = self.len();
        let mut report = AxiomReport::default();
        let sides: [(&str, Box<dyn Fn(usize, usize, usize) -> (ElemSet, ElemSet)>); 2] = [
            (
                "left_subset_distributivity",
                Box::new(|x, y, z| (self.hmul(x, self.add(y, z)), self.add_sets(self.hmul(x, y), self.hmul(x, z)))),
            ),
            (
                "right_subset_distributivity",
                Box::new(|x, y, z| (self.hmul(self.add(y, z), x), self.add_sets(self.hmul(y, x), self.hmul(z, x)))),
            ),
        ];
        for (name, f) in sides {
            let mut checked = 0;
            let mut found = None;
            'outer: for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        checked += 1;
                        let (l, r) = f(x, y, z);
                        if !l.is_subset(r) {
                            found = Some((
                                vec![x, y, z],
                                format!("{} not inside {}", show(l, &self.names), show(r, &self.names)),
                            ));
                            break 'outer;
                        }
                    }
                }
            }
            report.push(Verdict::from_search(name, checked, found));
        }
        report
    }

    pub fn to_json(&self) -> MHyperJson {
        let n = self.len();
        MHyperJson {
            schema: SCHEMA.into(),
            elements: self.names.clone(),
            add: self.add.chunks(n).map(|c| c.to_vec()).collect(),
            hmul: self.hmul.chunks(n).map(|c| c.to_vec()).collect(),
            zero: 0,
            one: self.one,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MHyperJson {
    pub schema: String,
    pub elements: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub hmul: Vec<Vec<ElemSet>>,
    pub zero: usize,
    pub one: usize,
}

fn coset_name(r: &FinRing, rep: usize) -> String {
    if rep == r.zero() {
        "L".into()
    } else {
        format!("{}+L", r.name(rep))
    }
}

pub fn m_hyperring(r: &FinRing, l: ElemSet) -> Result<MHyperRing> {
    if !r.is_additive_subgroup(l) {
        return Err(Error::NotLeftIdeal(format!("{} is not an additive subgroup", show(l, r.names()))));
    }
    if !r.is_left_ideal(l) {
        return Err(Error::NotLeftIdeal(format!("R{} is not inside it", show(l, r.names()))));
    }
    let classes = AdditiveCosets::build(r.len(), |x| l.map(|a| r.add(x, a)));
    let k = classes.len();
    let names = (0..k).map(|c| coset_name(r, classes.rep(c))).collect();
    let mut add = Vec::with_capacity(k * k);
    let mut hmul = Vec::with_capacity(k * k);
    for x in 0..k {
        for y in 0..k {
            let (r1, r2) = (classes.rep(x), classes.rep(y));
            add.push(classes.coset_of[r.add(r1, r2)]);
            hmul.push(l.map(|a| classes.coset_of[r.mul(r.add(r1, a), r2)]));
        }
    }
    let one = classes.coset_of[r.one()];
    Ok(MHyperRing { names, classes, add, hmul, one })
}

/// Hypermultiplication over an additive subgroup of a pre-semiring:
/// `(r₁+G) ⊡ (r₂+G) = {r₁r₂ + r₁g₁ + g₂r₂ + G}`, computed on least
/// representatives. No associativity or distributivity is claimed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupHyperMul {
    pub names: Vec<String>,
    pub classes: AdditiveCosets,
    hmul: Vec<ElemSet>,
}

impl SubgroupHyperMul {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn hmul(&self, a: usize, b: usize) -> ElemSet {
        self.hmul[a * self.len() + b]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

pub fn m_hyper_from_additive_subgroup(s: &FinSemiring, g: ElemSet) -> Result<SubgroupHyperMul> {
    if !s.is_additive_subgroup(g) {
        return Err(Error::NotSubgroup(format!("{} is not an additive subgroup", show(g, s.names()))));
    }
    let classes = AdditiveCosets::build(s.len(), |x| g.map(|a| s.add(x, a)));
    let k = classes.len();
    let names = (0..k)
        .map(|c| {
            let rep = classes.rep(c);
            if rep == s.zero() {
                "G".into()
            } else {
                format!("{}+G", s.names()[rep])
            }
        })
        .collect();
    let mut hmul = Vec::with_capacity(k * k);
    for x in 0..k {
        for y in 0..k {
            let (r1, r2) = (classes.rep(x), classes.rep(y));
            let mut out = ElemSet::EMPTY;
            for g1 in g {
                for g2 in g {
                    let v = s.add(s.add(s.mul(r1, r2), s.mul(r1, g1)), s.mul(g2, r2));
                    out.insert(classes.coset_of[v]);
                }
            }
            hmul.push(out);
        }
    }
    Ok(SubgroupHyperMul { names, classes, hmul })
}

/// Entries `[a, b, c, d]` of a matrix named `[a b; c d]`.
fn matrix_entries(name: &str) -> Option<[&str; 4]> {
    let inner = name.strip_prefix('[')?.strip_suffix(']')?;
    let (top, bottom) = inner.split_once(';')?;
    let mut it = top.split_whitespace().chain(bottom.split_whitespace());
    let e = [it.next()?, it.next()?, it.next()?, it.next()?];
    it.next().is_none().then_some(e)
}

/// In a ring built by [`FinRing::matrices2`], the matrices whose second
/// column is zero: a left ideal that is not a right ideal.
pub fn zero_second_column(m: &FinRing) -> Result<ElemSet> {
    let zero = m.name(0).to_string();
    let z = matrix_entries(&zero).ok_or_else(|| Error::Parse(format!("{zero} is not a 2x2 matrix")))?[0];
    let mut out = ElemSet::EMPTY;
    for i in 0..m.len() {
        let e = matrix_entries(m.name(i)).ok_or_else(|| Error::Parse(format!("{} is not a 2x2 matrix", m.name(i))))?;
        if e[1] == z && e[3] == z {
            out.insert(i);
        }
    }
    Ok(out)
}
