//! Hypermonoids of cosets of a subgroup of a finite monoid, the residue
//! monoid by a normal subgroup, and a quotient hypermodule.

use hyperforge::carrier::{make_finite_field, residue_monoid, unit_subgroups, FinMonoid, Subgroup};
use hyperforge::quotient::{coset_hypermonoid, quotient_hypermodule, CosetMode, FinModule};
use hyperforge::ElemSet;

fn main() -> hyperforge::Result<()> {
    let s3 = FinMonoid::symmetric(3)?;
    let t = s3.index_of("(12)").unwrap();
    let g = Subgroup::of_monoid(&s3, [s3.neutral(), t].into_iter().collect())?;
    for mode in [CosetMode::Right, CosetMode::Double] {
        let h = coset_hypermonoid(&s3, &g, mode)?;
        println!("S3 by {{e,(12)}}, {mode:?}: {} classes\n{}", h.len(), h.hsum_csv());
    }

    let rot = s3.index_of("(123)").unwrap();
    let a3 = Subgroup::of_monoid(&s3, s3.generated(ElemSet::singleton(rot)))?;
    let res = residue_monoid(&s3, &a3)?;
    println!("S3/A3 has {} elements, group: {}", res.monoid.len(), res.is_group);

    let f7 = make_finite_field(7, 1)?;
    let m = FinModule::field_over_units(&f7)?;
    let (_, unit_of) = f7.unit_group();
    for g in unit_subgroups(&f7)? {
        // move the subgroup from field indices to unit-group indices
        let members = g.members.iter().map(|e| unit_of.iter().position(|&x| x == e).unwrap()).collect();
        let q = quotient_hypermodule(&m, &Subgroup::of_monoid(&m.scalars, members)?)?;
        println!("GF(7) over units, orbits of |G|={}: {}", g.len(), q.orbits.len());
    }
    Ok(())
}
