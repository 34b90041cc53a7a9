use serde::{Deserialize, Serialize};

use super::{FinMonoid, FinRing};
use crate::elemset::{show, ElemSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubgroupKind {
    Multiplicative,
    Additive,
}

/// A validated subset of a parent's carrier, closed under the relevant
/// operation and containing its neutral element.
///
/// The parent is not stored; members index into the carrier of whichever
/// ring or monoid the constructor was given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subgroup {
    pub kind: SubgroupKind,
    pub members: ElemSet,
}

impl Subgroup {
    /// A subgroup of the unit group `Rˣ`.
    pub fn multiplicative(r: &FinRing, members: ElemSet) -> Result<Self> {
        let shown = || show(members, r.names());
        if members.is_empty() {
            return Err(Error::EmptySet);
        }
        if !members.is_subset(r.units()) {
            return Err(Error::NotSubgroup(format!("{} is not inside the units", shown())));
        }
        if !members.contains(r.one()) || !r.set_mul(members, members).is_subset(members) {
            return Err(Error::NotSubgroup(format!("{} is not closed", shown())));
        }
        if members.iter().any(|g| !members.contains(r.inverse(g).expect("unit"))) {
            return Err(Error::NotSubgroup(format!("{} is not closed under inverses", shown())));
        }
        Ok(Subgroup { kind: SubgroupKind::Multiplicative, members })
    }

    pub fn additive(r: &FinRing, members: ElemSet) -> Result<Self> {
        if !r.is_additive_subgroup(members) {
            return Err(Error::NotSubgroup(format!(
                "{} is not an additive subgroup",
                show(members, r.names())
            )));
        }
        Ok(Subgroup { kind: SubgroupKind::Additive, members })
    }

    /// A submonoid of `M` (a subgroup when `M` is a group and the set is
    /// closed under inverses).
    pub fn of_monoid(m: &FinMonoid, members: ElemSet) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptySet);
        }
        if !m.is_submonoid(members) {
            return Err(Error::NotClosed(show(members, m.names())));
        }
        Ok(Subgroup { kind: SubgroupKind::Multiplicative, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }
}

/// All subgroups of the cyclic group `Rˣ`, one per divisor of its order,
/// sorted by size.
pub fn unit_subgroups(r: &FinRing) -> Result<Vec<Subgroup>> {
    let units = r.units();
    let n = units.len() as u64;
    let order = |u: usize| (1..=n).find(|&e| r.pow(u, e) == r.one()).expect("finite unit group");
    let gen = units
        .iter()
        .find(|&u| order(u) == n)
        .ok_or_else(|| Error::NotSubgroup("unit group is not cyclic".into()))?;
    (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| {
            let h = r.pow(gen, n / d);
            let members = (0..d).map(|e| r.pow(h, e)).collect();
            Subgroup::multiplicative(r, members)
        })
        .collect()
}

/// `N·a = a·N` for every `a ∈ M`, compared as sets.
pub fn is_normal_submonoid(m: &FinMonoid, n: &Subgroup) -> Result<bool> {
    if !m.is_submonoid(n.members) {
        return Err(Error::NotClosed(show(n.members, m.names())));
    }
    Ok((0..m.len()).all(|a| m.right_translate(n.members, a) == m.left_translate(a, n.members)))
}

/// The residue monoid `T/G` together with the coset map.
#[derive(Clone, Debug)]
pub struct Residue {
    pub monoid: FinMonoid,
    /// Cosets in residue-index order, each sorted by least representative.
    pub cosets: Vec<ElemSet>,
    /// `coset_of[t]` is the residue index of `tG`.
    pub coset_of: Vec<usize>,
    pub is_group: bool,
}

pub fn residue_monoid(t: &FinMonoid, g: &Subgroup) -> Result<Residue> {
    if !is_normal_submonoid(t, g)? {
        return Err(Error::NotNormal(show(g.members, t.names())));
    }
    let mut cosets: Vec<ElemSet> = Vec::new();
    let mut coset_of = vec![usize::MAX; t.len()];
    for a in 0..t.len() {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let c = t.left_translate(a, g.members);
        for x in c {
            coset_of[x] = cosets.len();
        }
        cosets.push(c);
    }
    // a normal submonoid that is not a group may give overlapping translates
    for a in 0..t.len() {
        if t.left_translate(a, g.members) != cosets[coset_of[a]] {
            return Err(Error::NotSubgroup(format!(
                "translates of {} do not partition the carrier",
                show(g.members, t.names())
            )));
        }
    }
    let names = cosets
        .iter()
        .map(|c| {
            let rep = c.first().expect("nonempty coset");
            if c.contains(t.neutral()) {
                "G".to_string()
            } else {
                format!("{}G", t.name(rep))
            }
        })
        .collect();
    let rep = |i: usize| cosets[i].first().expect("nonempty coset");
    let monoid = FinMonoid::from_fn(names, coset_of[t.neutral()], |x, y| {
        coset_of[t.op(rep(x), rep(y))]
    })?;
    let is_group = monoid.is_group();
    Ok(Residue { monoid, cosets, coset_of, is_group })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::make_finite_field;

    fn sizes(r: &FinRing) -> Vec<usize> {
        unit_subgroups(r).unwrap().iter().map(|g| g.len()).collect()
    }

    #[test]
    fn gf5_subgroups() {
        let f = make_finite_field(5, 1).unwrap();
        assert_eq!(sizes(&f), vec![1, 2, 4]);
        assert_eq!(unit_subgroups(&f).unwrap()[1].members.to_vec(), vec![1, 4]);
    }

    #[test]
    fn gf2_and_gf7_subgroups() {
        assert_eq!(sizes(&make_finite_field(2, 1).unwrap()), vec![1]);
        let f7 = make_finite_field(7, 1).unwrap();
        assert_eq!(sizes(&f7), vec![1, 2, 3, 6]);
        assert_eq!(unit_subgroups(&f7).unwrap()[2].members.to_vec(), vec![1, 2, 4]);
    }

    #[test]
    fn s3_normality() {
        let s3 = FinMonoid::symmetric(3).unwrap();
        let t = s3.index_of("(12)").unwrap();
        let h = Subgroup::of_monoid(&s3, [0, t].into_iter().collect()).unwrap();
        assert!(!is_normal_submonoid(&s3, &h).unwrap());
        let r = s3.index_of("(123)").unwrap();
        let a3 = Subgroup::of_monoid(&s3, s3.generated(ElemSet::singleton(r))).unwrap();
        assert_eq!(a3.len(), 3);
        assert!(is_normal_submonoid(&s3, &a3).unwrap());
        assert!(residue_monoid(&s3, &h).is_err());
    }

    #[test]
    fn residue_of_units_mod_7() {
        let u = FinMonoid::cyclic_units(7).unwrap();
        let g = Subgroup::of_monoid(&u, [0, 5].into_iter().collect()).unwrap();
        let res = residue_monoid(&u, &g).unwrap();
        assert_eq!(res.monoid.names(), ["G", "2G", "3G"]);
        assert!(res.is_group);
        for a in 0..u.len() {
            for b in 0..u.len() {
                assert_eq!(res.coset_of[u.op(a, b)], res.monoid.op(res.coset_of[a], res.coset_of[b]));
            }
        }
    }

    #[test]
    fn residue_edge_cases() {
        let u5 = FinMonoid::cyclic_units(5).unwrap();
        let full = Subgroup::of_monoid(&u5, u5.all()).unwrap();
        assert_eq!(residue_monoid(&u5, &full).unwrap().monoid.len(), 1);
        let triv = Subgroup::of_monoid(&u5, ElemSet::singleton(0)).unwrap();
        assert_eq!(residue_monoid(&u5, &triv).unwrap().monoid.len(), 4);
    }

    #[test]
    fn not_closed_is_an_error() {
        let s3 = FinMonoid::symmetric(3).unwrap();
        let r = s3.index_of("(123)").unwrap();
        let bad = Subgroup { kind: SubgroupKind::Multiplicative, members: [0, r].into_iter().collect() };
        assert!(matches!(is_normal_submonoid(&s3, &bad), Err(Error::NotClosed(_))));
    }
}
