use crate::carrier::{is_normal_submonoid, residue_monoid, FinMonoid, FinRing, Residue, Subgroup};
use crate::elemset::{show, ElemSet};
use crate::error::{Error, Result};
use crate::hyperstruct::HyperTable;

/// An additive group `M` with a left action of a monoid `T` that
/// distributes over addition and fixes zero.
#[derive(Clone, Debug)]
pub struct FinModule {
    pub add: FinMonoid,
    pub scalars: FinMonoid,
    act: Vec<usize>,
}

impl FinModule {
    pub fn new(add: FinMonoid, scalars: FinMonoid, act: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let (n, t) = (add.len(), scalars.len());
        if !add.is_commutative() || !add.is_group() {
            return Err(Error::InvalidTable("module addition must be an abelian group".into()));
        }
        let act: Vec<usize> = (0..t * n).map(|i| act(i / n, i % n)).collect();
        if act.iter().any(|&v| v >= n) {
            return Err(Error::InvalidTable("action out of range".into()));
        }
        let m = FinModule { add, scalars, act };
        let z = m.add.neutral();
        for a in 0..t {
            if m.act(a, z) != z {
                return Err(Error::InvalidTable(format!("{} does not fix zero", m.scalars.name(a))));
            }
            for b in 0..n {
                for c in 0..n {
                    if m.act(a, m.add.op(b, c)) != m.add.op(m.act(a, b), m.act(a, c)) {
                        return Err(Error::InvalidTable("action is not distributive".into()));
                    }
                }
                for a2 in 0..t {
                    if m.act(m.scalars.op(a, a2), b) != m.act(a, m.act(a2, b)) {
                        return Err(Error::InvalidTable("action is not associative".into()));
                    }
                }
            }
        }
        for b in 0..n {
            if m.act(m.scalars.neutral(), b) != b {
                return Err(Error::InvalidTable("neutral scalar acts nontrivially".into()));
            }
        }
        Ok(m)
    }

    /// A field as a module over its unit group; scalar indices follow
    /// [`FinRing::unit_group`].
    pub fn field_over_units(f: &FinRing) -> Result<Self> {
        let (units, map) = f.unit_group();
        Self::new(f.additive_group(), units, |a, b| f.mul(map[a], b))
    }

    pub fn act(&self, a: usize, b: usize) -> usize {
        self.act[a * self.add.len() + b]
    }

    pub fn len(&self) -> usize {
        self.add.len()
    }

    pub fn is_empty(&self) -> bool {
        self.add.is_empty()
    }
}

/// `M/G` with hyperaddition and the induced `T/G` action.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    pub table: HyperTable,
    pub residue: Residue,
    /// Orbits `Gb`, zero orbit first.
    pub orbits: Vec<ElemSet>,
    /// `action[ā][c]` is the class of `a·b` for `b` in class `c`.
    pub action: Vec<Vec<usize>>,
}

/// Hyperaddition `b₁G ⊞ b₂G = {cG : c ∈ b₁G + b₂G}` on the orbits of `G`.
pub fn quotient_hypermodule(m: &FinModule, g: &Subgroup) -> Result<QuotientModule> {
    if !is_normal_submonoid(&m.scalars, g)? {
        return Err(Error::NotNormal(show(g.members, m.scalars.names())));
    }
    let n = m.len();
    let orbit = |b: usize| -> ElemSet { g.members.iter().map(|a| m.act(a, b)).collect() };
    let mut orbits: Vec<ElemSet> = Vec::new();
    let mut class = vec![usize::MAX; n];
    let z = m.add.neutral();
    for b in std::iter::once(z).chain((0..n).filter(|&b| b != z)) {
        if class[b] != usize::MAX {
            continue;
        }
        let o = orbit(b);
        for x in o {
            if class[x] != usize::MAX {
                return Err(Error::NotNormal(format!("orbits of {} overlap", m.add.name(b))));
            }
            class[x] = orbits.len();
        }
        orbits.push(o);
    }
    // M normalizes G: the translate of an orbit is again an orbit
    for b in 0..n {
        if orbit(b) != orbits[class[b]] {
            return Err(Error::NotNormal(format!("Gb for b = {} is not a class", m.add.name(b))));
        }
    }
    let residue = residue_monoid(&m.scalars, g)?;
    let first = |s: ElemSet| s.first().expect("nonempty class");
    let action: Vec<Vec<usize>> = residue
        .cosets
        .iter()
        .map(|&ca| orbits.iter().map(|&cb| class[m.act(first(ca), first(cb))]).collect())
        .collect();
    for a in 0..m.scalars.len() {
        for b in 0..n {
            if action[residue.coset_of[a]][class[b]] != class[m.act(a, b)] {
                return Err(Error::NotNormal("residue action is not well defined".into()));
            }
        }
    }
    let names = orbits.iter().map(|o| m.add.name(o.first().unwrap()).to_string()).collect();
    let table = HyperTable::from_fn(
        names,
        |x, y| {
            let mut out = ElemSet::EMPTY;
            for u in orbits[x] {
                for v in orbits[y] {
                    out.insert(class[m.add.op(u, v)]);
                }
            }
            out
        },
        None,
        Some(0),
        None,
    )?;
    Ok(QuotientModule { table, residue, orbits, action })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::make_finite_field;
    use crate::quotient::krasner_quotient;

    fn units_subgroup(f: &FinRing, m: &FinModule, elems: &[usize]) -> Subgroup {
        let (_, map) = f.unit_group();
        let members = elems.iter().map(|e| map.iter().position(|x| x == e).unwrap()).collect();
        Subgroup::of_monoid(&m.scalars, members).unwrap()
    }

    #[test]
    fn gf5_module_matches_field_quotient() {
        let f = make_finite_field(5, 1).unwrap();
        let m = FinModule::field_over_units(&f).unwrap();
        let g = units_subgroup(&f, &m, &[1, 4]);
        let q = quotient_hypermodule(&m, &g).unwrap();
        let fq = krasner_quotient(&f, &Subgroup::multiplicative(&f, [1, 4].into_iter().collect()).unwrap()).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(q.table.hsum(a, b), fq.hsum(a, b));
            }
        }
        assert!(!q.table.has_mul());
    }

    #[test]
    fn gf7_cubic_residues() {
        let f = make_finite_field(7, 1).unwrap();
        let m = FinModule::field_over_units(&f).unwrap();
        let g = units_subgroup(&f, &m, &[1, 2, 4]);
        let q = quotient_hypermodule(&m, &g).unwrap();
        assert_eq!(q.table.len(), 3);
        let qq = q.table.index_of("1").unwrap();
        let n = q.table.index_of("3").unwrap();
        assert_eq!(q.table.hsum(qq, qq), [qq, n].into_iter().collect());
        // action of 3 sends Q to N
        let three = q.residue.coset_of[m.scalars.index_of("3").unwrap()];
        assert_eq!(q.action[three][qq], n);
    }

    #[test]
    fn trivial_g_is_the_module() {
        let f = make_finite_field(3, 1).unwrap();
        let m = FinModule::field_over_units(&f).unwrap();
        let g = Subgroup::of_monoid(&m.scalars, ElemSet::singleton(m.scalars.neutral())).unwrap();
        let q = quotient_hypermodule(&m, &g).unwrap();
        assert!((0..3).all(|a| (0..3).all(|b| q.table.hsum(a, b).len() == 1)));
    }
}
