//! Krasner quotients GF(q)/G: the Krasner hyperfield, the quadratic-residue
//! hyperfield of GF(5), and the `ee = e ⊞ e` identity.

use hyperforge::carrier::{make_finite_field, unit_subgroups};
use hyperforge::hyperstruct::{check_hyperfield, HyperTable};
use hyperforge::morphisms::iso_search;
use hyperforge::quotient::{check_ee_identity, krasner_quotient};

fn main() -> hyperforge::Result<()> {
    let f3 = make_finite_field(3, 1)?;
    let units = unit_subgroups(&f3)?.into_iter().max_by_key(|g| g.len()).unwrap();
    let k = krasner_quotient(&f3, &units)?;
    println!("GF(3)/units:\n{}", k.hsum_csv());
    println!("isomorphic to Krasner: {:?}", iso_search(&k, &HyperTable::krasner())?.iso);

    let f5 = make_finite_field(5, 1)?;
    for g in unit_subgroups(&f5)? {
        let q = krasner_quotient(&f5, &g)?;
        let report = check_hyperfield(&q);
        let ee = check_ee_identity(&f5, &g)?;
        println!(
            "GF(5)/|G|={}: {} classes, hyperfield {}, -1 in G {}, ee = e+e {}",
            g.len(),
            q.len(),
            report.passed(),
            ee.applicable,
            ee.holds
        );
        if q.len() == 3 {
            println!("{}", q.hsum_csv());
            println!("isomorphic to signs: {}", iso_search(&q, &HyperTable::signs())?.iso.is_some());
        }
    }
    Ok(())
}
