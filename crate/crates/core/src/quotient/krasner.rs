use crate::carrier::{FinRing, Subgroup, SubgroupKind};
use crate::elemset::{show, ElemSet};
use crate::error::{Error, Result};
use crate::hyperstruct::HyperTable;

/// The classes `{0}` and `bG` (`b ≠ 0`) of a ring modulo a multiplicative
/// subgroup of its units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpace {
    /// Classes ordered by least representative; `{0}` comes first.
    pub cosets: Vec<ElemSet>,
    /// `coset_of[b]` is the class index of `b`.
    pub coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn rep(&self, c: usize) -> usize {
        self.cosets[c].first().expect("cosets are nonempty")
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Classes meeting `s`.
    pub fn classes_of(&self, s: ElemSet) -> ElemSet {
        s.map(|b| self.coset_of[b])
    }
}

/// Partition of `R` into `{0}` and the translates `bG`, after checking that
/// `G` lies in the units and that `bG = Gb` for every `b`.
pub fn coset_space(r: &FinRing, g: &Subgroup) -> Result<CosetSpace> {
    if g.kind != SubgroupKind::Multiplicative {
        return Err(Error::NotSubgroup("expected a multiplicative subgroup".into()));
    }
    Subgroup::multiplicative(r, g.members)?;
    let all = r.all();
    for b in all {
        let bg = r.set_mul(ElemSet::singleton(b), g.members);
        let gb = r.set_mul(g.members, ElemSet::singleton(b));
        if bg != gb {
            return Err(Error::NotNormal(format!(
                "{}G = {} but G{} = {}",
                r.name(b),
                show(bg, r.names()),
                r.name(b),
                show(gb, r.names())
            )));
        }
    }
    let mut cosets = Vec::new();
    let mut coset_of = vec![usize::MAX; r.len()];
    for b in 0..r.len() {
        if coset_of[b] != usize::MAX {
            continue;
        }
        let c = if b == r.zero() {
            ElemSet::singleton(b)
        } else {
            r.set_mul(ElemSet::singleton(b), g.members)
        };
        for x in c {
            coset_of[x] = cosets.len();
        }
        cosets.push(c);
    }
    Ok(CosetSpace { cosets, coset_of })
}

/// The quotient hyperring `R/G`: classes `{0}` and `bG`, product
/// `(b₁G)(b₂G) = (b₁b₂)G` and hypersum `{cG : c ∈ b₁G + b₂G}`.
///
/// Elements are named by their least representative.
pub fn krasner_quotient(r: &FinRing, g: &Subgroup) -> Result<HyperTable> {
    Ok(krasner_quotient_with_space(r, g)?.0)
}

pub fn krasner_quotient_with_space(r: &FinRing, g: &Subgroup) -> Result<(HyperTable, CosetSpace)> {
    let space = coset_space(r, g)?;
    let names = (0..space.len()).map(|c| r.name(space.rep(c)).to_string()).collect();
    let table = HyperTable::from_fn(
        names,
        |x, y| space.classes_of(r.set_add(space.cosets[x], space.cosets[y])),
        Some(&|x, y| space.coset_of[r.mul(space.rep(x), space.rep(y))]),
        Some(space.coset_of[r.zero()]),
        Some(space.coset_of[r.one()]),
    )?;
    Ok((table, space))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{make_finite_field, unit_subgroups};
    use crate::hyperstruct::check_hyperfield;

    fn quotient(p: u64, k: u32, size: usize) -> HyperTable {
        let f = make_finite_field(p, k).unwrap();
        let g = unit_subgroups(&f).unwrap().into_iter().find(|g| g.len() == size).unwrap();
        krasner_quotient(&f, &g).unwrap()
    }

    #[test]
    fn gf3_by_units_is_krasner() {
        let q = quotient(3, 1, 2);
        assert!(q.same_structure(&HyperTable::krasner()));
        assert_eq!(q.names(), ["0", "1"]);
    }

    #[test]
    fn gf5_quadratic_residues() {
        let q = quotient(5, 1, 2);
        let (z, qq, n) = (0, 1, 2);
        let s = |v: &[usize]| v.iter().copied().collect::<ElemSet>();
        assert_eq!(q.hsum(qq, qq), s(&[z, n]));
        assert_eq!(q.hsum(qq, n), s(&[qq, n]));
        assert_eq!(q.hsum(n, n), s(&[z, qq]));
        assert_eq!(q.mul(n, n), Some(qq));
        assert!(check_hyperfield(&q).passed());
    }

    #[test]
    fn trivial_subgroup_recovers_ring() {
        let f = make_finite_field(7, 1).unwrap();
        let g = unit_subgroups(&f).unwrap()[0];
        let q = krasner_quotient(&f, &g).unwrap();
        assert!(q.same_structure(&HyperTable::from_ring(&f)));
    }

    #[test]
    fn non_unit_members_rejected() {
        let f = make_finite_field(5, 1).unwrap();
        let g = Subgroup { kind: SubgroupKind::Multiplicative, members: [0, 1].into_iter().collect() };
        assert!(krasner_quotient(&f, &g).is_err());
    }

    #[test]
    fn non_normal_subgroup_of_matrix_units_rejected() {
        let gf2 = make_finite_field(2, 1).unwrap();
        let m = FinRing::matrices2(&gf2).unwrap();
        let swap = m.index_of("[0 1; 1 0]").unwrap();
        let g = Subgroup::multiplicative(&m, [m.one(), swap].into_iter().collect()).unwrap();
        assert!(matches!(krasner_quotient(&m, &g), Err(Error::NotNormal(_))));
    }
}
