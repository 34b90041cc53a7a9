use serde::Serialize;

use super::pair::Pair;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::hyperstruct::{AxiomReport, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurpassKind {
    /// `b₁ ⪯₀ b₂` iff `b₂ = b₁ * c` for some `c ∈ A₀`.
    Null,
    /// Set inclusion on a power-set pair.
    Inclusion,
    Custom,
}

/// A relation on a pair's carrier, stored as a dense boolean matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurpassRel {
    pub kind: SurpassKind,
    n: usize,
    rel: Vec<bool>,
}

impl SurpassRel {
    pub fn null(p: &Pair) -> Self {
        let n = p.len();
        let a0 = p.a0();
        let rel = (0..n * n).map(|k| a0.iter().any(|c| p.op(k / n, c) == k % n)).collect();
        SurpassRel { kind: SurpassKind::Null, n, rel }
    }

    pub fn inclusion(p: &Pair) -> Result<Self> {
        if !p.is_powerset() {
            return Err(Error::InvalidTable("inclusion needs a power-set pair".into()));
        }
        let n = p.len();
        let s = |i: usize| p.subset(i).expect("power-set pair");
        let rel = (0..n * n).map(|k| s(k / n).is_subset(s(k % n))).collect();
        Ok(SurpassRel { kind: SurpassKind::Inclusion, n, rel })
    }

    /// An explicit relation given by its related index pairs.
    pub fn custom(p: &Pair, related: &[(usize, usize)]) -> Result<Self> {
        let n = p.len();
        let mut rel = vec![false; n * n];
        for &(a, b) in related {
            if a >= n || b >= n {
                return Err(Error::InvalidTable(format!("relation pair ({a}, {b}) outside a carrier of size {n}")));
            }
            rel[a * n + b] = true;
        }
        Ok(SurpassRel { kind: SurpassKind::Custom, n, rel })
    }

    /// Equality: the degenerate surpassing relation.
    pub fn equality(p: &Pair) -> Self {
        let n = p.len();
        SurpassRel { kind: SurpassKind::Custom, n, rel: (0..n * n).map(|k| k / n == k % n).collect() }
    }

    pub fn holds(&self, a: usize, b: usize) -> bool {
        self.rel[a * self.n + b]
    }

    /// Related index pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n * self.n).filter(|&k| self.rel[k]).map(|k| (k / self.n, k % self.n)).collect()
    }

    /// `A_Null = {c : ι ⪯ c}`.
    pub fn null_set(&self, p: &Pair) -> ElemSet {
        (0..self.n).filter(|&c| self.holds(p.iota(), c)).collect()
    }

    pub fn compare(&self, other: &SurpassRel) -> RelationComparison {
        let mut cmp = RelationComparison::default();
        for k in 0..self.n * self.n {
            let pair = (k / self.n, k % self.n);
            match (self.rel[k], other.rel[k]) {
                (true, true) => cmp.both += 1,
                (true, false) => cmp.only_first.push(pair),
                (false, true) => cmp.only_second.push(pair),
                _ => {}
            }
        }
        cmp
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationComparison {
    pub both: usize,
    pub only_first: Vec<(usize, usize)>,
    pub only_second: Vec<(usize, usize)>,
}

impl RelationComparison {
    pub fn coincide(&self) -> bool {
        self.only_first.is_empty() && self.only_second.is_empty()
    }
}

fn first_failure(
    name: &str,
    tuples: impl Iterator<Item = Vec<usize>>,
    fails: impl Fn(&[usize]) -> Option<String>,
) -> Verdict {
    let mut checked = 0;
    for t in tuples {
        checked += 1;
        if let Some(d) = fails(&t) {
            return Verdict::fail(name, checked, t, d);
        }
    }
    Verdict::pass(name, checked)
}

fn grid(n: usize, d: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(d as u32)).map(move |mut k| {
        let mut v = vec![0; d];
        for slot in v.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        v
    })
}

/// Pre-order laws plus the four surpassing axioms. Axiom (1) ranges over
/// `T ∪ {ι}` as embedded in `A`; without an embedding only `ι` is used.
pub fn check_surpassing(p: &Pair, r: &SurpassRel) -> AxiomReport {
    let n = p.len();
    let nm = |i: usize| p.name(i).to_string();
    let mut rep = AxiomReport::default();
    rep.push(first_failure("reflexive", grid(n, 1), |v| (!r.holds(v[0], v[0])).then(|| format!("{} ⋠ itself", nm(v[0])))));
    rep.push(first_failure("transitive", grid(n, 3), |v| {
        (r.holds(v[0], v[1]) && r.holds(v[1], v[2]) && !r.holds(v[0], v[2]))
            .then(|| format!("{} ⪯ {} ⪯ {} but not {0} ⪯ {2}", nm(v[0]), nm(v[1]), nm(v[2])))
    }));
    let mut tangible: Vec<usize> = (0..p.t().len()).filter_map(|t| p.embed(t)).collect();
    tangible.push(p.iota());
    tangible.sort_unstable();
    tangible.dedup();
    let m = tangible.len();
    rep.push(first_failure("tangible_antisymmetry", grid(m, 2), |v| {
        let (a, b) = (tangible[v[0]], tangible[v[1]]);
        (a != b && r.holds(a, b)).then(|| format!("{} ⪯ {} for distinct elements of T ∪ {{ι}}", nm(a), nm(b)))
    }));
    let nulls = p.a0().to_vec();
    rep.push(first_failure("surpass_by_null", (0..n).flat_map(|b| (0..nulls.len()).map(move |c| vec![b, c])), |v| {
        let (b, c) = (v[0], nulls[v[1]]);
        (!r.holds(b, p.op(b, c))).then(|| format!("{} ⋠ {} * {}", nm(b), nm(b), nm(c)))
    }));
    rep.push(first_failure("iota_minimal", grid(n, 1), |v| {
        (v[0] != p.iota() && r.holds(v[0], p.iota())).then(|| format!("{} ⪯ ι", nm(v[0])))
    }));
    let anull = r.null_set(p);
    rep.push(first_failure("null_in_anull", nulls.iter().map(|&c| vec![c]), |v| {
        (!anull.contains(v[0])).then(|| format!("{} ∈ A₀ but ι ⋠ {}", nm(v[0]), nm(v[0])))
    }));
    rep
}

/// `b(b₁*b₂) ⪯ bb₁ * bb₂` and `(b₁*b₂)b ⪯ b₁b * b₂b` over all triples.
pub fn check_preceq_distributive(p: &Pair, r: &SurpassRel) -> AxiomReport {
    let mut rep = AxiomReport::default();
    if !p.has_mul() {
        rep.push(Verdict::fail("mul_present", 1, vec![], "pair has no multiplication".into()));
        return rep;
    }
    let m = |a: usize, b: usize| p.mul(a, b).expect("checked");
    let nm = |i: usize| p.name(i).to_string();
    let n = p.len();
    rep.push(first_failure("left_preceq_distributivity", grid(n, 3), |v| {
        let (b, b1, b2) = (v[0], v[1], v[2]);
        let (l, rr) = (m(b, p.op(b1, b2)), p.op(m(b, b1), m(b, b2)));
        (!r.holds(l, rr)).then(|| format!("{}({} * {}) = {} ⋠ {}", nm(b), nm(b1), nm(b2), nm(l), nm(rr)))
    }));
    rep.push(first_failure("right_preceq_distributivity", grid(n, 3), |v| {
        let (b, b1, b2) = (v[0], v[1], v[2]);
        let (l, rr) = (m(p.op(b1, b2), b), p.op(m(b1, b), m(b2, b)));
        (!r.holds(l, rr)).then(|| format!("({} * {}){} = {} ⋠ {}", nm(b1), nm(b2), nm(b), nm(l), nm(rr)))
    }));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{make_finite_field, unit_subgroups, FinRing};
    use crate::hyperstruct::HyperTable;
    use crate::pairs::{mhyper_powerset_pair, powerset_pair, supertropical_pair};
    use crate::quotient::{krasner_quotient, m_hyperring, zero_second_column};

    #[test]
    fn inclusion_on_krasner() {
        let p = powerset_pair(&HyperTable::krasner()).unwrap();
        let r = SurpassRel::inclusion(&p).unwrap();
        let rep = check_surpassing(&p, &r);
        assert!(rep.passed(), "{rep}");
        // {1} ⪯ {0,1}
        assert!(r.holds(1, 2));
        assert_eq!(r.null_set(&p), p.a0());
    }

    #[test]
    fn anull_is_a0_on_powersets() {
        let f = make_finite_field(5, 1).unwrap();
        let g = unit_subgroups(&f).unwrap().into_iter().find(|g| g.len() == 2).unwrap();
        for h in [HyperTable::krasner(), HyperTable::signs(), krasner_quotient(&f, &g).unwrap()] {
            let p = powerset_pair(&h).unwrap();
            let r = SurpassRel::inclusion(&p).unwrap();
            assert_eq!(r.null_set(&p), p.a0());
            assert!(check_surpassing(&p, &r).passed());
            assert!(check_preceq_distributive(&p, &r).passed());
        }
    }

    #[test]
    fn null_relation_on_supertropical() {
        let p = supertropical_pair().unwrap();
        let r = SurpassRel::null(&p);
        let rep = check_surpassing(&p, &r);
        assert!(rep.passed(), "{rep}");
        assert!(r.holds(1, 3));
    }

    #[test]
    fn equality_with_trivial_null_set() {
        let p = powerset_pair(&HyperTable::krasner()).unwrap();
        let trivial = crate::pairs::Pair::new(
            p.names().to_vec(),
            |a, b| p.op(a, b),
            p.t().clone(),
            |t, b| p.lact(t, b),
            |b, t| p.ract(b, t),
            ElemSet::singleton(p.iota()),
            p.iota(),
        )
        .unwrap();
        assert!(check_surpassing(&trivial, &SurpassRel::equality(&trivial)).passed());
    }

    #[test]
    fn mhyperring_is_inclusion_distributive() {
        let m2 = FinRing::matrices2(&make_finite_field(2, 1).unwrap()).unwrap();
        let l = zero_second_column(&m2).unwrap();
        let mh = m_hyperring(&m2, l).unwrap();
        let p = mhyper_powerset_pair(&mh).unwrap();
        let r = SurpassRel::inclusion(&p).unwrap();
        assert!(check_preceq_distributive(&p, &r).passed());
    }

    #[test]
    fn custom_relation_validated() {
        let p = powerset_pair(&HyperTable::krasner()).unwrap();
        assert!(SurpassRel::custom(&p, &[(0, 9)]).is_err());
        // missing reflexivity
        let r = SurpassRel::custom(&p, &[(0, 2)]).unwrap();
        assert!(!check_surpassing(&p, &r).passed());
    }
}
