use serde::Serialize;

use super::krasner::krasner_quotient_with_space;
use crate::carrier::{FinRing, Subgroup};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::hyperstruct::HyperTable;

/// `e = 1 ⊞ (−1)` in a quotient table.
pub fn e_element(q: &HyperTable) -> Result<ElemSet> {
    let one = q.one().ok_or_else(|| Error::InvalidTable("table has no one".into()))?;
    let neg = q.negative(one).ok_or_else(|| Error::MissingNegative(q.name(one).to_string()))?;
    Ok(q.hsum(one, neg))
}

/// Both sides of the `ee = e ⊞ e` identity for `R/G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EeReport {
    /// Whether `−1 ∈ G`; the identity is only asserted in that case.
    pub applicable: bool,
    pub e: ElemSet,
    /// `{(g₁−g₂)g₃ ⊞ (g₄−g₅)g₆ : gᵢ ∈ G}` evaluated on the base ring.
    pub ee: ElemSet,
    /// `e ⊞ e` from the quotient table.
    pub e_plus_e: ElemSet,
    /// The elementwise product set `{xy : x, y ∈ e}`.
    pub elementwise: ElemSet,
    pub holds: bool,
    pub elementwise_contained: bool,
}

/// Compute `ee` from its defining formula on the base ring and compare it
/// with `e ⊞ e` computed through the quotient table.
pub fn check_ee_identity(r: &FinRing, g: &Subgroup) -> Result<EeReport> {
    let (q, space) = krasner_quotient_with_space(r, g)?;
    let e = e_element(&q)?;
    let gm = g.members;
    let diffs: ElemSet = gm.iter().flat_map(|a| gm.iter().map(move |b| (a, b))).map(|(a, b)| r.sub(a, b)).collect();
    let scaled = r.set_mul(diffs, gm);
    // (c₁G) ⊞ (c₂G) = {cG : c ∈ c₁G + c₂G}
    let ee = space.classes_of(r.set_add(r.set_mul(scaled, gm), r.set_mul(scaled, gm)));
    let e_plus_e = q.hsum_sets(e, e)?;
    let elementwise = q.mul_sets(e, e).expect("quotients carry multiplication");
    let applicable = gm.contains(r.neg(r.one()));
    Ok(EeReport {
        applicable,
        e,
        ee,
        e_plus_e,
        elementwise,
        holds: ee == e_plus_e,
        elementwise_contained: elementwise.is_subset(e_plus_e),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{make_finite_field, unit_subgroups};
    use crate::quotient::krasner_quotient;

    fn sub(f: &FinRing, size: usize) -> Subgroup {
        unit_subgroups(f).unwrap().into_iter().find(|g| g.len() == size).unwrap()
    }

    #[test]
    fn gf5_quadratic_residues() {
        let f = make_finite_field(5, 1).unwrap();
        let rep = check_ee_identity(&f, &sub(&f, 2)).unwrap();
        assert!(rep.applicable);
        assert_eq!(rep.e.to_vec(), vec![0, 2]);
        assert_eq!(rep.e_plus_e.to_vec(), vec![0, 1, 2]);
        assert!(rep.holds);
        // the elementwise product misses N
        assert_eq!(rep.elementwise.to_vec(), vec![0, 1]);
        assert!(rep.elementwise_contained);
    }

    #[test]
    fn gf3_krasner() {
        let f = make_finite_field(3, 1).unwrap();
        let rep = check_ee_identity(&f, &sub(&f, 2)).unwrap();
        assert_eq!(rep.e.to_vec(), vec![0, 1]);
        assert_eq!(rep.ee, rep.e_plus_e);
        assert_eq!(rep.elementwise, rep.e);
    }

    #[test]
    fn plus_minus_one_gives_zero_in_doubles() {
        for p in [5u64, 7, 11, 13] {
            let f = make_finite_field(p, 1).unwrap();
            let q = krasner_quotient(&f, &sub(&f, 2)).unwrap();
            for a in 0..q.len() {
                assert!(q.hsum(a, a).contains(0));
            }
        }
    }

    #[test]
    fn missing_negative_is_an_error() {
        let h = HyperTable::from_fn(
            vec!["0".into(), "1".into()],
            |a, b| ElemSet::singleton(a.max(b)),
            Some(&|a, b| a.min(b)),
            Some(0),
            Some(1),
        )
        .unwrap();
        assert!(matches!(e_element(&h), Err(Error::MissingNegative(_))));
    }
}
