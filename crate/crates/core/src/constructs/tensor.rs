use serde::Serialize;

use super::magma::{congruence_closure, free_t_magma, ClassListing, CongRel, TermUniverse};
use crate::carrier::FinMonoid;
use crate::error::{Error, Result};
use crate::pairs::Pair;

/// Congruence classes of the free magma on `M₁ × M₂`, truncated at `depth`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub universe: TermUniverse,
    pub rel: CongRel,
    /// Class ids (numbered by least term) meeting `M₁ ⊗ (M₂)₀ ∪ (M₁)₀ ⊗ M₂`.
    pub null_classes: Vec<usize>,
    right_len: usize,
}

impl TensorProduct {
    pub fn depth(&self) -> usize {
        self.universe.depth
    }

    /// The generator term `x₁ ⊗ x₂`.
    pub fn generator(&self, x1: usize, x2: usize) -> usize {
        self.universe.leaf(x1 * self.right_len + x2)
    }

    pub fn class_count(&self) -> usize {
        self.rel.class_count()
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.rel.same(a, b)
    }

    pub fn to_json(&self) -> TensorJson {
        TensorJson {
            schema: crate::util::schema_tag(),
            listing: ClassListing::new(&self.universe, &self.rel),
            null_classes: self.null_classes.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorJson {
    pub schema: String,
    #[serde(flatten)]
    pub listing: ClassListing,
    pub null_classes: Vec<usize>,
}

/// Bilinearity in each slot, `(v₁*w₁) ⊗ x₂ ~ (v₁⊗x₂) * (w₁⊗x₂)` and its
/// mirror, plus the balanced law `x₁a ⊗ x₂ ~ x₁ ⊗ ax₂`, closed to a
/// congruence on the terms of height at most `depth`.
pub fn tensor_product(m1: &Pair, m2: &Pair, depth: usize, budget: usize) -> Result<TensorProduct> {
    if m1.t() != m2.t() {
        return Err(Error::MismatchedMonoid(format!("{:?} vs {:?}", m1.t().names(), m2.t().names())));
    }
    let (n1, n2) = (m1.len(), m2.len());
    let gens = (0..n1 * n2).map(|g| format!("{}⊗{}", m1.name(g / n2), m2.name(g % n2))).collect();
    let u = free_t_magma(gens, &FinMonoid::trivial(), depth, budget)?;
    let g = |x1: usize, x2: usize| u.leaf(x1 * n2 + x2);
    let mut rels = Vec::new();
    if depth >= 1 {
        for x2 in 0..n2 {
            for v in 0..n1 {
                for w in 0..n1 {
                    let node = u.node(g(v, x2), g(w, x2)).expect("height one");
                    rels.push((g(m1.op(v, w), x2), node));
                }
            }
        }
        for x1 in 0..n1 {
            for v in 0..n2 {
                for w in 0..n2 {
                    let node = u.node(g(x1, v), g(x1, w)).expect("height one");
                    rels.push((g(x1, m2.op(v, w)), node));
                }
            }
        }
    }
    for a in 0..m1.t().len() {
        for x1 in 0..n1 {
            for x2 in 0..n2 {
                rels.push((g(m1.ract(x1, a), x2), g(x1, m2.lact(a, x2))));
            }
        }
    }
    let rel = congruence_closure(&u, &rels)?;
    let ids = rel.class_ids();
    let mut null_classes: Vec<usize> = (0..u.len())
        .filter(|&i| {
            let leaves = u.leaves(i);
            leaves.iter().all(|&l| m1.is_null(l / n2)) || leaves.iter().all(|&l| m2.is_null(l % n2))
        })
        .map(|i| ids[i])
        .collect();
    null_classes.sort_unstable();
    null_classes.dedup();
    Ok(TensorProduct { universe: u, rel, null_classes, right_len: n2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructs::magma::DEFAULT_TERM_BUDGET;
    use crate::elemset::ElemSet;
    use crate::hyperstruct::HyperTable;
    use crate::pairs::powerset_pair;

    fn point(t: &FinMonoid) -> Pair {
        Pair::new(vec!["ι".into()], |_, _| 0, t.clone(), |_, b| b, |b, _| b, ElemSet::singleton(0), 0).unwrap()
    }

    #[test]
    fn balanced_and_bilinear() {
        let s = powerset_pair(&HyperTable::signs()).unwrap();
        let tp = tensor_product(&s, &s, 1, DEFAULT_TERM_BUDGET).unwrap();
        for a in 0..s.t().len() {
            for x1 in 0..s.len() {
                for x2 in 0..s.len() {
                    assert!(tp.same(tp.generator(s.ract(x1, a), x2), tp.generator(x1, s.lact(a, x2))));
                }
            }
        }
        let u = &tp.universe;
        let (v, w, x2) = (1, 2, 3);
        let node = u.node(tp.generator(v, x2), tp.generator(w, x2)).unwrap();
        assert!(tp.same(tp.generator(s.op(v, w), x2), node));
        assert!(tp.rel.is_congruence(u));
        assert!(tp.null_classes.contains(&tp.rel.class_ids()[tp.generator(s.iota(), 0)]));
    }

    #[test]
    fn point_on_the_right() {
        let k = powerset_pair(&HyperTable::krasner()).unwrap();
        let tp = tensor_product(&k, &point(k.t()), 2, DEFAULT_TERM_BUDGET).unwrap();
        let free = free_t_magma(vec!["a".into(), "b".into(), "c".into()], &FinMonoid::trivial(), 2, 1000).unwrap();
        assert_eq!(tp.universe.len(), free.len());
        assert!(tp.class_count() < free.len());
        // every class is null: the right factor is all null
        assert_eq!(tp.null_classes.len(), tp.class_count());
    }

    #[test]
    fn deeper_universe_only_merges() {
        let k = powerset_pair(&HyperTable::krasner()).unwrap();
        let shallow = tensor_product(&k, &k, 1, DEFAULT_TERM_BUDGET).unwrap();
        let deep = tensor_product(&k, &k, 2, DEFAULT_TERM_BUDGET).unwrap();
        let n = shallow.universe.len();
        let restricted: std::collections::BTreeSet<usize> = (0..n).map(|i| deep.rel.find(i)).collect();
        assert!(restricted.len() <= shallow.class_count());
        for i in 0..n {
            for j in 0..n {
                if shallow.same(i, j) {
                    assert!(deep.same(i, j));
                }
            }
        }
    }

    #[test]
    fn mismatched_t() {
        let s = powerset_pair(&HyperTable::signs()).unwrap();
        let k = powerset_pair(&HyperTable::krasner()).unwrap();
        assert!(matches!(tensor_product(&s, &k, 1, 100), Err(Error::MismatchedMonoid(_))));
    }
}
