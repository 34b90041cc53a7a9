use serde::Serialize;

use super::arrow::{is_preceq_morphism, is_subset_morphism, powerset_extension, MapArrow, PairArrow};
use super::noether::induced_residue_morphism;
use crate::carrier::{make_finite_field, residue_monoid, unit_subgroups, FinMonoid, Subgroup};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::hyperstruct::{AxiomReport, HyperTable, Verdict};
use crate::pairs::SurpassRel;
use crate::quotient::krasner_quotient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctorKind {
    Powerset,
    Residue,
}

fn first_failure<T>(name: &str, items: &[T], fails: impl Fn(&T) -> Option<(Vec<usize>, String)>) -> Verdict {
    for (i, it) in items.iter().enumerate() {
        if let Some((t, d)) = fails(it) {
            return Verdict::fail(name, i + 1, t, d);
        }
    }
    Verdict::pass(name, items.len())
}

/// `⊆`-morphisms between small hyperfields, multiplicative on units, so
/// their power-set extensions are ⪯-morphisms.
pub fn powerset_fixtures() -> Result<Vec<MapArrow>> {
    let f5 = make_finite_field(5, 1)?;
    let sq = unit_subgroups(&f5)?.into_iter().find(|g| g.len() == 2).expect("GF(5) has squares");
    let q5 = krasner_quotient(&f5, &sq)?;
    let k = HyperTable::krasner();
    let s = HyperTable::signs();
    let collapse = |h: &HyperTable| {
        let map = (0..h.len()).map(|i| k.index_of(if Some(i) == h.zero() { "0" } else { "1" }).unwrap()).collect();
        MapArrow::new(h.clone(), k.clone(), map)
    };
    Ok(vec![
        MapArrow::identity(&k),
        MapArrow::identity(&s),
        MapArrow::identity(&q5),
        collapse(&q5)?,
        collapse(&s)?,
    ])
}

fn powerset_laws(fixtures: &[MapArrow]) -> Result<AxiomReport> {
    let mut rep = AxiomReport::default();
    let ext: Vec<PairArrow> = fixtures.iter().map(powerset_extension).collect::<Result<_>>()?;
    let ids: Vec<usize> = (0..fixtures.len()).filter(|&i| fixtures[i].dom == fixtures[i].cod && fixtures[i].map.iter().enumerate().all(|(a, &b)| a == b)).collect();
    rep.push(first_failure("identity", &ids, |&i| {
        let e = &ext[i];
        let id = PairArrow::identity(&e.dom);
        (e.map != id.map).then(|| (vec![i], format!("extension of identity {i} moves a subset")))
    }));
    let composable: Vec<(usize, usize)> = (0..fixtures.len())
        .flat_map(|i| (0..fixtures.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| fixtures[i].cod == fixtures[j].dom)
        .collect();
    rep.push(first_failure("composition", &composable, |&(i, j)| {
        let gf = fixtures[i].compose(&fixtures[j]).ok()?;
        let lhs = powerset_extension(&gf).ok()?;
        let rhs = ext[i].compose(&ext[j]).ok()?;
        (lhs.map != rhs.map).then(|| (vec![i, j], format!("F({j}∘{i}) ≠ F({j})∘F({i})")))
    }));
    let parallel: Vec<(usize, usize)> = composable_parallel(fixtures);
    rep.push(first_failure("faithful", &parallel, |&(i, j)| {
        (ext[i].map == ext[j].map).then(|| (vec![i, j], format!("arrows {i} and {j} differ but extend equally")))
    }));
    let idx: Vec<usize> = (0..fixtures.len()).collect();
    rep.push(first_failure("full_on_singletons", &idx, |&i| {
        let e = &ext[i];
        let r = |p| SurpassRel::inclusion(p).expect("power-set pair");
        if !is_preceq_morphism(e, &r(&e.dom), &r(&e.cod)).passed() {
            return Some((vec![i], format!("extension {i} is not a ⪯-morphism")));
        }
        let f = &fixtures[i];
        let restricted: Option<Vec<usize>> = (0..f.dom.len())
            .map(|a| {
                let img = e.cod.subset(e.apply(ElemSet::singleton(a).bits() as usize - 1))?;
                (img.len() == 1).then(|| img.first().unwrap())
            })
            .collect();
        let ok = restricted
            .and_then(|m| MapArrow::new(f.dom.clone(), f.cod.clone(), m).ok())
            .is_some_and(|g| is_subset_morphism(&g).passed && g.map == f.map);
        (!ok).then(|| (vec![i], format!("extension {i} does not restrict to its arrow on singletons")))
    }));
    Ok(rep)
}

fn composable_parallel(fixtures: &[MapArrow]) -> Vec<(usize, usize)> {
    (0..fixtures.len())
        .flat_map(|i| (i + 1..fixtures.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| fixtures[i].dom == fixtures[j].dom && fixtures[i].cod == fixtures[j].cod && fixtures[i].map != fixtures[j].map)
        .collect()
}

/// A surjective monoid map with the submonoid its residue arrow is taken over.
#[derive(Clone, Debug)]
pub struct MonoidArrow {
    pub dom: FinMonoid,
    pub cod: FinMonoid,
    pub map: Vec<usize>,
}

/// `C₁₂ → C₆ → C₃` by reduction, with `G = {0, 6}` in `C₁₂`.
pub fn residue_fixture() -> Result<(MonoidArrow, MonoidArrow, Subgroup)> {
    let c12 = FinMonoid::cyclic(12)?;
    let c6 = FinMonoid::cyclic(6)?;
    let c3 = FinMonoid::cyclic(3)?;
    let f = MonoidArrow { dom: c12.clone(), cod: c6.clone(), map: (0..12).map(|a| a % 6).collect() };
    let g = MonoidArrow { dom: c6, cod: c3, map: (0..6).map(|a| a % 3).collect() };
    let sub = Subgroup::of_monoid(&c12, [0, 6].into_iter().collect())?;
    Ok((f, g, sub))
}

fn residue_laws() -> Result<AxiomReport> {
    let mut rep = AxiomReport::default();
    let (f, g, sub) = residue_fixture()?;
    let id: Vec<usize> = (0..f.dom.len()).collect();
    let fid = induced_residue_morphism(&f.dom, &f.dom, &id, &sub)?;
    rep.push(Verdict::from_search(
        "identity",
        fid.image.map.len(),
        fid.image.map.iter().enumerate().find(|(c, &d)| *c != d).map(|(c, _)| (vec![c], "identity moves a class".into())),
    ));
    let ff = induced_residue_morphism(&f.dom, &f.cod, &f.map, &sub)?;
    let fg = Subgroup::of_monoid(&f.cod, sub.members.map(|a| f.map[a]))?;
    let gg = induced_residue_morphism(&g.dom, &g.cod, &g.map, &fg)?;
    let gf_map: Vec<usize> = f.map.iter().map(|&a| g.map[a]).collect();
    let gf = induced_residue_morphism(&f.dom, &g.cod, &gf_map, &sub)?;
    let composed = ff.image.compose(&gg.image);
    let found = match &composed {
        Ok(c) => c.map.iter().zip(&gf.image.map).position(|(x, y)| x != y).map(|c| (vec![c], "F(g∘f) ≠ F(g)∘F(f)".into())),
        Err(e) => Some((vec![], e.to_string())),
    };
    rep.push(Verdict::from_search("composition", gf.image.map.len(), found));
    let arrows = [&fid, &ff, &gg, &gf];
    let bad = arrows.iter().position(|a| !is_subset_morphism(&a.image).passed || !a.verdict.passed);
    rep.push(Verdict::from_search("subset_morphism", arrows.len(), bad.map(|i| (vec![i], format!("residue arrow {i} fails")))));
    // the residue monoid of the codomain agrees with the cosets used
    let res = residue_monoid(&f.cod, &fg)?;
    rep.push(Verdict::from_search(
        "residue_size",
        1,
        (res.monoid.len() != ff.cod.len()).then(|| (vec![], "coset count differs from the residue monoid".into())),
    ));
    Ok(rep)
}

/// Functor laws on the built-in fixtures.
pub fn functor_laws(kind: FunctorKind) -> Result<AxiomReport> {
    match kind {
        FunctorKind::Powerset => powerset_laws(&powerset_fixtures()?),
        FunctorKind::Residue => residue_laws(),
    }
}

/// Functor laws for caller-supplied ⊆-morphisms.
pub fn powerset_functor_laws(fixtures: &[MapArrow]) -> Result<AxiomReport> {
    powerset_laws(fixtures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powerset_functor() {
        let rep = functor_laws(FunctorKind::Powerset).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(rep.get("composition").unwrap().checked >= 5);
    }

    #[test]
    fn residue_functor() {
        let rep = functor_laws(FunctorKind::Residue).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn non_subset_fixture_is_rejected() {
        let k = HyperTable::krasner();
        let s = HyperTable::signs();
        let bad = MapArrow::new(k, s.clone(), vec![0, 1]).unwrap();
        assert!(powerset_functor_laws(&[bad]).is_err());
    }
}
