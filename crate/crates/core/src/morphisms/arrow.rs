use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::hyperstruct::{AxiomReport, HyperTable, Verdict};
use crate::pairs::{powerset_pair, Pair, SurpassRel};

/// A total map between the carriers of two hypertables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapArrow {
    pub dom: HyperTable,
    pub cod: HyperTable,
    pub map: Vec<usize>,
}

impl MapArrow {
    pub fn new(dom: HyperTable, cod: HyperTable, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.len() || map.iter().any(|&v| v >= cod.len()) {
            return Err(Error::SizeMismatch(format!(
                "map of length {} into {} elements for a domain of {}",
                map.len(),
                cod.len(),
                dom.len()
            )));
        }
        Ok(MapArrow { dom, cod, map })
    }

    /// Build from element names: `pairs[i] = (a, f(a))`.
    pub fn from_names(dom: HyperTable, cod: HyperTable, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut map = vec![usize::MAX; dom.len()];
        for (a, b) in pairs {
            let i = dom.index_of(a).ok_or_else(|| Error::UnknownName(a.to_string()))?;
            map[i] = cod.index_of(b).ok_or_else(|| Error::UnknownName(b.to_string()))?;
        }
        Self::new(dom, cod, map)
    }

    pub fn identity(h: &HyperTable) -> Self {
        MapArrow { dom: h.clone(), cod: h.clone(), map: (0..h.len()).collect() }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn image(&self, s: ElemSet) -> ElemSet {
        s.map(|a| self.map[a])
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &MapArrow) -> Result<MapArrow> {
        if self.cod != then.dom {
            return Err(Error::SizeMismatch("codomain and domain differ".into()));
        }
        Ok(MapArrow { dom: self.dom.clone(), cod: then.cod.clone(), map: self.map.iter().map(|&a| then.map[a]).collect() })
    }
}

/// `f(a₁ ⊞ a₂) ⊆ f(a₁) ⊞ f(a₂)` for all pairs.
pub fn is_subset_morphism(f: &MapArrow) -> Verdict {
    let n = f.dom.len();
    let found = (0..n * n).find_map(|k| {
        let (a, b) = (k / n, k % n);
        let l = f.image(f.dom.hsum(a, b));
        let r = f.cod.hsum(f.apply(a), f.apply(b));
        (!l.is_subset(r)).then(|| {
            let detail = format!(
                "f({} ⊞ {}) = {} ⊄ {}",
                f.dom.name(a),
                f.dom.name(b),
                f.cod.show(l),
                f.cod.show(r)
            );
            (k, vec![a, b], detail)
        })
    });
    match found {
        None => Verdict::pass("subset_morphism", n * n),
        Some((k, t, d)) => Verdict::fail("subset_morphism", k + 1, t, d),
    }
}

/// `0 ∈ a₁ ⊞ a₂ ⇒ 0′ ∈ f(a₁) ⊞ f(a₂)`.
pub fn is_weak_morphism(f: &MapArrow) -> Verdict {
    let (Some(z), Some(z2)) = (f.dom.zero(), f.cod.zero()) else {
        return Verdict::fail("weak_morphism", 0, vec![], "both tables need a zero".into());
    };
    let n = f.dom.len();
    let found = (0..n * n).find(|&k| {
        let (a, b) = (k / n, k % n);
        f.dom.hsum(a, b).contains(z) && !f.cod.hsum(f.apply(a), f.apply(b)).contains(z2)
    });
    match found {
        None => Verdict::pass("weak_morphism", n * n),
        Some(k) => {
            let (a, b) = (k / n, k % n);
            let d = format!("0 ∈ {} ⊞ {} but not in the image sum", f.dom.name(a), f.dom.name(b));
            Verdict::fail("weak_morphism", k + 1, vec![a, b], d)
        }
    }
}

/// A map between pair carriers together with its restriction `T → T′`
/// (`None` where an element of `T` leaves `T′`).
#[derive(Clone, Debug)]
pub struct PairArrow {
    pub dom: Pair,
    pub cod: Pair,
    pub map: Vec<usize>,
    pub tmap: Vec<Option<usize>>,
}

impl PairArrow {
    /// Derive the `T`-part from the embeddings of both pairs; without
    /// embeddings `T` must be trivial on both sides.
    pub fn new(dom: Pair, cod: Pair, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.len() || map.iter().any(|&v| v >= cod.len()) {
            return Err(Error::SizeMismatch("pair map is not total".into()));
        }
        let tmap = (0..dom.t().len())
            .map(|t| match dom.embed(t) {
                Some(a) => (0..cod.t().len()).find(|&u| cod.embed(u) == Some(map[a])),
                None if cod.t().len() == 1 => Some(0),
                None => None,
            })
            .collect();
        Ok(PairArrow { dom, cod, map, tmap })
    }

    pub fn identity(p: &Pair) -> Self {
        PairArrow {
            dom: p.clone(),
            cod: p.clone(),
            map: (0..p.len()).collect(),
            tmap: (0..p.t().len()).map(Some).collect(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn compose(&self, then: &PairArrow) -> Result<PairArrow> {
        if self.cod.len() != then.dom.len() || self.cod.names() != then.dom.names() {
            return Err(Error::SizeMismatch("codomain and domain differ".into()));
        }
        Ok(PairArrow {
            dom: self.dom.clone(),
            cod: then.cod.clone(),
            map: self.map.iter().map(|&a| then.map[a]).collect(),
            tmap: self.tmap.iter().map(|t| t.and_then(|t| then.tmap[t])).collect(),
        })
    }
}

/// `a₁ * a₂ ∈ A₀ ⇒ f(a₁) * f(a₂) ∈ A₀′`.
pub fn is_weak_pair_morphism(f: &PairArrow) -> Verdict {
    let n = f.dom.len();
    let found = (0..n * n).find(|&k| {
        let (a, b) = (k / n, k % n);
        f.dom.is_null(f.dom.op(a, b)) && !f.cod.is_null(f.cod.op(f.apply(a), f.apply(b)))
    });
    match found {
        None => Verdict::pass("weak_morphism", n * n),
        Some(k) => {
            let (a, b) = (k / n, k % n);
            let d = format!("{} * {} is null but its image is not", f.dom.name(a), f.dom.name(b));
            Verdict::fail("weak_morphism", k + 1, vec![a, b], d)
        }
    }
}

fn first_fail(name: &str, total: usize, check: impl Fn(usize) -> Option<(Vec<usize>, String)>) -> Verdict {
    match (0..total).find_map(|k| check(k).map(|w| (k, w))) {
        None => Verdict::pass(name, total),
        Some((k, (t, d))) => Verdict::fail(name, k + 1, t, d),
    }
}

/// The `⪯`-map and `⪯`-morphism conditions: `f(ι) = ι′`, `f(T) ⊆ T′`,
/// monotonicity, `T`-equivariance on both sides, and
/// `f(b₁ * b₂) ⪯ f(b₁) * f(b₂)`.
pub fn is_preceq_morphism(f: &PairArrow, dom_rel: &SurpassRel, cod_rel: &SurpassRel) -> AxiomReport {
    let (d, c) = (&f.dom, &f.cod);
    let n = d.len();
    let k = d.t().len();
    let mut rep = AxiomReport::default();
    rep.push(if f.apply(d.iota()) == c.iota() {
        Verdict::pass("iota_preserved", 1)
    } else {
        Verdict::fail("iota_preserved", 1, vec![d.iota()], format!("f(ι) = {}", c.name(f.apply(d.iota()))))
    });
    rep.push(first_fail("t_into_t", k, |t| {
        f.tmap[t].is_none().then(|| (vec![t], format!("{} ∈ T leaves T′", d.t().name(t))))
    }));
    rep.push(first_fail("monotone", n * n, |q| {
        let (a, b) = (q / n, q % n);
        (dom_rel.holds(a, b) && !cod_rel.holds(f.apply(a), f.apply(b)))
            .then(|| (vec![a, b], format!("{} ⪯ {} but the images are not related", d.name(a), d.name(b))))
    }));
    rep.push(first_fail("t_equivariant", k * n, |q| {
        let (t, b) = (q / n, q % n);
        let u = f.tmap[t]?;
        let ok = f.apply(d.lact(t, b)) == c.lact(u, f.apply(b)) && f.apply(d.ract(b, t)) == c.ract(f.apply(b), u);
        (!ok).then(|| (vec![t, b], format!("f does not commute with {} acting on {}", d.t().name(t), d.name(b))))
    }));
    rep.push(first_fail("subadditive", n * n, |q| {
        let (a, b) = (q / n, q % n);
        let l = f.apply(d.op(a, b));
        let r = c.op(f.apply(a), f.apply(b));
        (!cod_rel.holds(l, r)).then(|| (vec![a, b], format!("f({} * {}) = {} ⋠ {}", d.name(a), d.name(b), c.name(l), c.name(r))))
    }));
    rep
}

/// `f(A₀) ⊆ A₀′`.
pub fn null_containment(f: &PairArrow) -> Verdict {
    let nulls = f.dom.a0().to_vec();
    first_fail("null_containment", nulls.len(), |i| {
        let b = nulls[i];
        (!f.cod.is_null(f.apply(b))).then(|| (vec![b], format!("{} is null but its image is not", f.dom.name(b))))
    })
}

/// `f̂(S) = {f(a) : a ∈ S}` between the power-set pairs.
pub fn powerset_extension(f: &MapArrow) -> Result<PairArrow> {
    let v = is_subset_morphism(f);
    if !v.passed {
        return Err(Error::NotSubsetMorphism(v.witness.map(|w| w.detail).unwrap_or_default()));
    }
    let dom = powerset_pair(&f.dom)?;
    let cod = powerset_pair(&f.cod)?;
    let map = (0..dom.len())
        .map(|i| {
            let img = f.image(dom.subset(i).expect("power-set pair"));
            img.bits() as usize - 1
        })
        .collect();
    PairArrow::new(dom, cod, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{make_finite_field, unit_subgroups};
    use crate::quotient::krasner_quotient;

    fn qr5() -> HyperTable {
        let f = make_finite_field(5, 1).unwrap();
        let g = unit_subgroups(&f).unwrap().into_iter().find(|g| g.len() == 2).unwrap();
        krasner_quotient(&f, &g).unwrap()
    }

    #[test]
    fn collapse_to_krasner() {
        let q = qr5();
        let map = (0..q.len()).map(|i| usize::from(i != 0)).collect();
        let f = MapArrow::new(q, HyperTable::krasner(), map).unwrap();
        assert!(is_subset_morphism(&f).passed);
        assert!(is_weak_morphism(&f).passed);
        let ext = powerset_extension(&f).unwrap();
        let rd = SurpassRel::inclusion(&ext.dom).unwrap();
        let rc = SurpassRel::inclusion(&ext.cod).unwrap();
        assert!(is_preceq_morphism(&ext, &rd, &rc).passed());
        assert!(null_containment(&ext).passed);
        // {Q, N} ↦ {1}
        let qn = ext.dom.index_of("{1, 2}").unwrap();
        assert_eq!(ext.cod.name(ext.apply(qn)), "{1}");
    }

    #[test]
    fn sign_negation_and_collapse() {
        let s = HyperTable::signs();
        let neg = MapArrow::from_names(s.clone(), s.clone(), &[("0", "0"), ("1", "-1"), ("-1", "1")]).unwrap();
        assert!(is_subset_morphism(&neg).passed);
        let col = MapArrow::from_names(s.clone(), HyperTable::krasner(), &[("0", "0"), ("1", "1"), ("-1", "1")]).unwrap();
        assert!(is_subset_morphism(&col).passed);
        assert!(is_weak_morphism(&col).passed);
        let ext = powerset_extension(&col).unwrap();
        let both = ext.dom.index_of("{0, -1}").unwrap();
        assert_eq!(ext.cod.name(ext.apply(both)), "{0, 1}");
    }

    #[test]
    fn constant_zero_is_weak() {
        let s = HyperTable::signs();
        let f = MapArrow::new(s.clone(), s, vec![0, 0, 0]).unwrap();
        assert!(is_weak_morphism(&f).passed);
    }

    #[test]
    fn inclusion_into_signs_is_not_subset_morphism() {
        let f = MapArrow::from_names(HyperTable::krasner(), HyperTable::signs(), &[("0", "0"), ("1", "1")]).unwrap();
        let v = is_subset_morphism(&f);
        assert!(!v.passed);
        assert_eq!(v.witness.unwrap().tuple, vec![1, 1]);
        assert!(matches!(powerset_extension(&f), Err(Error::NotSubsetMorphism(_))));
    }

    #[test]
    fn t_leaving_map_fails() {
        let k = powerset_pair(&HyperTable::krasner()).unwrap();
        // send {1} to {0, 1}, which is not in T
        let f = PairArrow::new(k.clone(), k.clone(), vec![0, 2, 2]).unwrap();
        let r = SurpassRel::inclusion(&k).unwrap();
        let rep = is_preceq_morphism(&f, &r, &r);
        assert!(!rep.get("t_into_t").unwrap().passed);
        let id = PairArrow::identity(&k);
        assert!(is_preceq_morphism(&id, &r, &r).passed());
        assert!(is_weak_pair_morphism(&id).passed);
    }
}
