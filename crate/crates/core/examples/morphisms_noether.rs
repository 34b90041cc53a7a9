//! Induced morphisms of residues, the third isomorphism theorem for Krasner
//! quotients, isomorphism search, and functor laws.

use hyperforge::carrier::{make_finite_field, residue_monoid, FinMonoid, Subgroup};
use hyperforge::morphisms::{functor_laws, induced_residue_morphism, iso_search, third_isomorphism, FunctorKind};
use hyperforge::ElemSet;

fn main() -> hyperforge::Result<()> {
    let f13 = make_finite_field(13, 1)?;
    let pick = |v: &[&str]| -> hyperforge::Result<Subgroup> {
        Subgroup::multiplicative(&f13, v.iter().map(|s| f13.index_of(s).unwrap()).collect())
    };
    let t = third_isomorphism(&f13, &pick(&["1", "12"])?, &pick(&["1", "5", "8", "12"])?)?;
    println!("GF(13): (R/G)/(G1/G) vs R/G1: {} classes, {}: {}", t.direct.len(), t.verdict.name, t.verdict.passed);
    println!("matching {:?}", t.bijection);

    let s3 = FinMonoid::symmetric(3)?;
    let rot = s3.index_of("(123)").unwrap();
    let a3 = Subgroup::of_monoid(&s3, s3.generated(ElemSet::singleton(rot)))?;
    let sign = residue_monoid(&s3, &a3)?;
    let t12 = s3.index_of("(12)").unwrap();
    let g = Subgroup::of_monoid(&s3, [s3.neutral(), t12].into_iter().collect())?;
    let im = induced_residue_morphism(&s3, &sign.monoid, &sign.coset_of, &g)?;
    println!("S3 -> sign, G = {{e,(12)}}: normal {}, {} classes, inclusion {}", im.normal, im.dom.len(), im.verdict.passed);
    println!("image map {:?}", im.image.map);

    let r = iso_search(&t.direct, &t.iterated)?;
    println!("iso search: {:?} after {} nodes", r.iso, r.nodes_explored);

    for kind in [FunctorKind::Powerset, FunctorKind::Residue] {
        let rep = functor_laws(kind)?;
        let names: Vec<String> = rep.verdicts.iter().map(|v| format!("{}={}", v.name, v.passed)).collect();
        println!("{kind:?}: {}", names.join(", "));
    }
    Ok(())
}
