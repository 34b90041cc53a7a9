use super::arrow::{is_subset_morphism, MapArrow};
use crate::carrier::{is_normal_submonoid, residue_monoid, FinMonoid, FinRing, Subgroup};
use crate::elemset::{show, ElemSet};
use crate::error::{Error, Result};
use crate::hyperstruct::{HyperTable, Verdict};
use crate::quotient::{coset_hypermonoid, krasner_quotient_with_space, translates, CosetMode};

fn check_surjection(m: &FinMonoid, n: &FinMonoid, f: &[usize]) -> Result<()> {
    if f.len() != m.len() || f.iter().any(|&v| v >= n.len()) {
        return Err(Error::SizeMismatch("map is not total".into()));
    }
    if f[m.neutral()] != n.neutral() {
        return Err(Error::NotHomomorphism("neutral element not preserved".into()));
    }
    for a in 0..m.len() {
        for b in 0..m.len() {
            if f[m.op(a, b)] != n.op(f[a], f[b]) {
                return Err(Error::NotHomomorphism(format!("f({}·{}) ≠ f({0})·f({1})", m.name(a), m.name(b))));
            }
        }
    }
    let image: ElemSet = f.iter().copied().collect();
    if image != n.all() {
        let missing = n.all().difference(image).first().expect("nonempty difference");
        return Err(Error::NotSurjective(format!("{} has no preimage", n.name(missing))));
    }
    Ok(())
}

/// The multivalued map `f̄(bG) = {b′G : f(b)f(G) = f(b′)f(G)}` of a
/// surjection, with its single-valued shadow `bG ↦ f(b)f(G)`.
#[derive(Clone, Debug)]
pub struct InducedMorphism {
    /// `M/G`, with the coset product in the additive slot.
    pub dom: HyperTable,
    /// `N/f(G)`.
    pub cod: HyperTable,
    /// `f̄(c)` as a set of classes of `M/G`.
    pub fbar: Vec<ElemSet>,
    /// The class of `N/f(G)` each class of `M/G` lands in.
    pub image: MapArrow,
    /// Whether `M` normalizes `G`. The inclusion is checked either way.
    pub normal: bool,
    /// `f̄(c₁ ⊡ c₂) ⊆ f̄(c₁) ⊡ f̄(c₂)` over all pairs of classes.
    pub verdict: Verdict,
}

pub fn induced_residue_morphism(m: &FinMonoid, n: &FinMonoid, f: &[usize], g: &Subgroup) -> Result<InducedMorphism> {
    check_surjection(m, n, f)?;
    let normal = is_normal_submonoid(m, g)?;
    let fg = Subgroup::of_monoid(n, g.members.map(|a| f[a]))?;
    let dt = translates(m, g, CosetMode::Right)?;
    let ct = translates(n, &fg, CosetMode::Right)?;
    let dom = coset_hypermonoid(m, g, CosetMode::Right)?;
    let cod = coset_hypermonoid(n, &fg, CosetMode::Right)?;
    let k = dt.classes.len();
    let rep = |c: usize| dt.classes[c].first().expect("nonempty class");
    let image: Vec<usize> = (0..k).map(|c| ct.class_of[f[rep(c)]]).collect();
    let fbar: Vec<ElemSet> = (0..k).map(|c| (0..k).filter(|&d| image[d] == image[c]).collect()).collect();
    let lift = |s: ElemSet| s.iter().fold(ElemSet::EMPTY, |acc, c| acc.union(fbar[c]));
    let found = (0..k * k).find_map(|q| {
        let (c1, c2) = (q / k, q % k);
        let lhs = lift(dom.hsum(c1, c2));
        let rhs = dom.hsum_sets(fbar[c1], fbar[c2]).expect("nonempty sets");
        (!lhs.is_subset(rhs)).then(|| {
            (q, vec![c1, c2], format!("f̄({} ⊡ {}) = {} ⊄ {}", dom.name(c1), dom.name(c2), dom.show(lhs), dom.show(rhs)))
        })
    });
    let verdict = match found {
        None => Verdict::pass("induced_inclusion", k * k),
        Some((q, t, d)) => Verdict::fail("induced_inclusion", q + 1, t, d),
    };
    let image = MapArrow::new(dom.clone(), cod.clone(), image)?;
    Ok(InducedMorphism { dom, cod, fbar, image, normal, verdict })
}

/// Quotient of a hypertable with multiplication by a subgroup `sub` of its
/// units: classes `{x·s : s ∈ sub}` with the induced hypersum and product.
/// Returns the table and the class of every element.
pub fn hyper_quotient(h: &HyperTable, sub: ElemSet) -> Result<(HyperTable, Vec<usize>)> {
    let one = h.one().ok_or_else(|| Error::InvalidTable("quotient needs a one".into()))?;
    let m = |a: usize, b: usize| h.mul(a, b).expect("has one, so has mul");
    if !sub.contains(one) || sub.iter().any(|a| sub.iter().any(|b| !sub.contains(m(a, b)))) {
        return Err(Error::NotSubgroup(h.show(sub)));
    }
    let n = h.len();
    let mut class = vec![usize::MAX; n];
    let mut classes: Vec<ElemSet> = Vec::new();
    let order = h.zero().into_iter().chain((0..n).filter(|&x| Some(x) != h.zero()));
    for x in order {
        if class[x] != usize::MAX {
            continue;
        }
        let orbit: ElemSet = sub.iter().map(|s| m(x, s)).collect();
        if orbit != sub.iter().map(|s| m(s, x)).collect() || orbit.iter().any(|y| class[y] != usize::MAX) {
            return Err(Error::NotNormal(format!("orbit of {} is not a class", h.name(x))));
        }
        for y in orbit {
            class[y] = classes.len();
        }
        classes.push(orbit);
    }
    let rep = |c: usize| classes[c].first().expect("nonempty");
    for a in 0..n {
        for b in 0..n {
            if class[m(a, b)] != class[m(rep(class[a]), rep(class[b]))] {
                return Err(Error::NotNormal("product of classes is not well defined".into()));
            }
        }
    }
    let names = classes.iter().map(|c| h.name(c.first().expect("nonempty")).to_string()).collect();
    let table = HyperTable::from_fn(
        names,
        |x, y| {
            let sums = h.hsum_sets(classes[x], classes[y]).expect("nonempty classes");
            sums.map(|z| class[z])
        },
        Some(&|x, y| class[m(rep(x), rep(y))]),
        h.zero().map(|z| class[z]),
        Some(class[one]),
    )?;
    Ok((table, class))
}

/// `M/G₁` and `(M/G)/(G₁/G)` with the matching `aG₁ ↔ (aG)(G₁/G)`.
#[derive(Clone, Debug)]
pub struct ThirdIso {
    pub direct: HyperTable,
    pub iterated: HyperTable,
    /// `bijection[c]` is the iterated class matched with direct class `c`.
    pub bijection: Vec<usize>,
    pub verdict: Verdict,
}

fn compare_under(direct: &HyperTable, iterated: &HyperTable, bij: &[usize]) -> Verdict {
    let n = direct.len();
    if n != iterated.len() {
        return Verdict::fail("table_equality", 0, vec![], format!("{n} vs {} classes", iterated.len()));
    }
    let found = (0..n * n).find_map(|k| {
        let (a, b) = (k / n, k % n);
        let l = direct.hsum(a, b).map(|x| bij[x]);
        let r = iterated.hsum(bij[a], bij[b]);
        let lm = direct.mul(a, b).map(|x| bij[x]);
        let rm = iterated.mul(bij[a], bij[b]);
        (l != r || lm != rm).then(|| (k, vec![a, b], format!("tables differ at ({}, {})", direct.name(a), direct.name(b))))
    });
    let units_ok = direct.zero().map(|z| bij[z]) == iterated.zero() && direct.one().map(|o| bij[o]) == iterated.one();
    match (found, units_ok) {
        (None, true) => Verdict::pass("table_equality", n * n),
        (None, false) => Verdict::fail("table_equality", n * n, vec![], "zero or one not matched".into()),
        (Some((k, t, d)), _) => Verdict::fail("table_equality", k + 1, t, d),
    }
}

/// Third isomorphism for Krasner quotients of a ring by unit subgroups `G ⊆ G₁`.
pub fn third_isomorphism(r: &FinRing, g: &Subgroup, g1: &Subgroup) -> Result<ThirdIso> {
    if !g.members.is_subset(g1.members) {
        return Err(Error::NotContained(show(g.members, r.names()), show(g1.members, r.names())));
    }
    let (direct, dspace) = krasner_quotient_with_space(r, g1)?;
    let (mid, mspace) = krasner_quotient_with_space(r, g)?;
    let (iterated, class) = hyper_quotient(&mid, mspace.classes_of(g1.members))?;
    let bijection: Vec<usize> = (0..direct.len()).map(|c| class[mspace.coset_of[dspace.rep(c)]]).collect();
    let verdict = compare_under(&direct, &iterated, &bijection);
    Ok(ThirdIso { direct, iterated, bijection, verdict })
}

fn monoid_table(m: &FinMonoid) -> Result<HyperTable> {
    HyperTable::from_fn(m.names().to_vec(), |a, b| ElemSet::singleton(m.op(a, b)), None, None, None)
}

/// Third isomorphism for residue monoids of normal submonoids `G ⊆ G₁`.
pub fn third_isomorphism_monoid(m: &FinMonoid, g: &Subgroup, g1: &Subgroup) -> Result<ThirdIso> {
    if !g.members.is_subset(g1.members) {
        return Err(Error::NotContained(show(g.members, m.names()), show(g1.members, m.names())));
    }
    let direct = residue_monoid(m, g1)?;
    let mid = residue_monoid(m, g)?;
    let sub = Subgroup::of_monoid(&mid.monoid, g1.members.map(|a| mid.coset_of[a]))?;
    let iterated = residue_monoid(&mid.monoid, &sub)?;
    let bijection: Vec<usize> = direct
        .cosets
        .iter()
        .map(|c| iterated.coset_of[mid.coset_of[c.first().expect("nonempty coset")]])
        .collect();
    let (dt, it) = (monoid_table(&direct.monoid)?, monoid_table(&iterated.monoid)?);
    let verdict = compare_under(&dt, &it, &bijection);
    Ok(ThirdIso { direct: dt, iterated: it, bijection, verdict })
}

/// Whether the single-valued shadow of an induced morphism is a ⊆-morphism.
pub fn induced_image_verdict(im: &InducedMorphism) -> Verdict {
    is_subset_morphism(&im.image)
}
