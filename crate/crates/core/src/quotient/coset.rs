use crate::carrier::{FinMonoid, Subgroup};
use crate::elemset::{show, ElemSet};
use crate::error::{Error, Result};
use crate::hyperstruct::HyperTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetMode {
    /// Right cosets `bG`.
    Right,
    /// Double cosets `GbG`.
    Double,
}

/// Carrier of a coset hypermonoid: the distinct translates, in order of
/// their least element, with the translate chosen for every base element.
#[derive(Clone, Debug)]
pub struct Translates {
    pub classes: Vec<ElemSet>,
    /// `class_of[b]` is the index of `bG` (or `GbG`).
    pub class_of: Vec<usize>,
}

pub fn translates(m: &FinMonoid, g: &Subgroup, mode: CosetMode) -> Result<Translates> {
    if !m.is_submonoid(g.members) {
        return Err(Error::NotClosed(show(g.members, m.names())));
    }
    let of = |b: usize| match mode {
        CosetMode::Right => m.left_translate(b, g.members),
        CosetMode::Double => m.set_op(g.members, m.left_translate(b, g.members)),
    };
    let mut classes: Vec<ElemSet> = Vec::new();
    let mut class_of = Vec::with_capacity(m.len());
    for b in 0..m.len() {
        let c = of(b);
        let i = classes.iter().position(|&x| x == c).unwrap_or_else(|| {
            classes.push(c);
            classes.len() - 1
        });
        class_of.push(i);
    }
    // order classes by least element so indices are reproducible
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&i| classes[i].first());
    let mut pos = vec![0; classes.len()];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    Ok(Translates {
        classes: order.iter().map(|&i| classes[i]).collect(),
        class_of: class_of.into_iter().map(|i| pos[i]).collect(),
    })
}

/// The right or double coset hypermonoid. The hyperoperation is stored in
/// the table's additive slot: `bG ⊡ b′G = {cG : c ∈ bG·b′G}` (and the
/// analogous formula for `GbG`).
///
/// The class of the neutral element is declared the table's zero only
/// when it is neutral for `⊡` on both sides.
pub fn coset_hypermonoid(m: &FinMonoid, g: &Subgroup, mode: CosetMode) -> Result<HyperTable> {
    let t = translates(m, g, mode)?;
    let names: Vec<String> = t
        .classes
        .iter()
        .map(|c| {
            let rep = c.first().expect("nonempty class");
            let core = if c.contains(m.neutral()) { String::new() } else { m.name(rep).to_string() };
            match mode {
                CosetMode::Right => format!("{core}G"),
                CosetMode::Double if core.is_empty() => "G".into(),
                CosetMode::Double => format!("G{core}G"),
            }
        })
        .collect();
    let op = |x: usize, y: usize| m.set_op(t.classes[x], t.classes[y]).map(|c| t.class_of[c]);
    let k = t.classes.len();
    let e = t.class_of[m.neutral()];
    let neutral = (0..k).all(|x| op(e, x) == ElemSet::singleton(x) && op(x, e) == ElemSet::singleton(x));
    HyperTable::from_fn(names, op, None, neutral.then_some(e), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::residue_monoid;

    fn s3_sub(s3: &FinMonoid, name: &str) -> Subgroup {
        let t = s3.index_of(name).unwrap();
        Subgroup::of_monoid(s3, s3.generated(ElemSet::singleton(t))).unwrap()
    }

    #[test]
    fn s3_right_cosets_of_transposition() {
        let s3 = FinMonoid::symmetric(3).unwrap();
        let g = s3_sub(&s3, "(12)");
        let h = coset_hypermonoid(&s3, &g, CosetMode::Right).unwrap();
        assert_eq!(h.len(), 3);
        let gi = h.index_of("G").unwrap();
        assert_eq!(h.hsum(gi, gi), ElemSet::singleton(gi));
        let r = s3.index_of("(123)").unwrap();
        let t = translates(&s3, &g, CosetMode::Right).unwrap();
        let b = t.class_of[r];
        assert!(h.hsum(b, b).len() >= 2);
        assert_eq!(h.zero(), None);
    }

    #[test]
    fn s3_double_cosets() {
        let s3 = FinMonoid::symmetric(3).unwrap();
        let g = s3_sub(&s3, "(12)");
        let h = coset_hypermonoid(&s3, &g, CosetMode::Double).unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(h.names()[0], "G");
    }

    #[test]
    fn normal_subgroup_collapses_to_residue() {
        let s3 = FinMonoid::symmetric(3).unwrap();
        let a3 = s3_sub(&s3, "(123)");
        let h = coset_hypermonoid(&s3, &a3, CosetMode::Right).unwrap();
        let res = residue_monoid(&s3, &a3).unwrap();
        assert_eq!(h.len(), res.monoid.len());
        for x in 0..h.len() {
            for y in 0..h.len() {
                assert_eq!(h.hsum(x, y), ElemSet::singleton(res.monoid.op(x, y)));
            }
        }
        assert_eq!(h.zero(), Some(0));
    }

    #[test]
    fn unclosed_subset_rejected() {
        let s3 = FinMonoid::symmetric(3).unwrap();
        let r = s3.index_of("(123)").unwrap();
        let bad = Subgroup { kind: crate::carrier::SubgroupKind::Multiplicative, members: [0, r].into_iter().collect() };
        assert!(coset_hypermonoid(&s3, &bad, CosetMode::Right).is_err());
    }
}
