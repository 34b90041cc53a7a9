use serde::Serialize;

use super::pair::Pair;
use crate::error::{Error, Result};
use crate::hyperstruct::{Verdict, Witness};

/// Property N: quasi-negatives `a†` for every `a ∈ T`, with `a° = a * a†`.
/// Indices in `daggers` are elements of `T`; `circ` entries are elements of `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyN {
    pub holds: bool,
    /// For each `a ∈ T`, every `a† ∈ T` with `a * a† ∈ A₀`.
    pub daggers: Vec<Vec<usize>>,
    /// `a°` for each `a ∈ T`, when defined.
    pub circ: Vec<Option<usize>>,
    pub witness: Option<Witness>,
}

fn embedding(p: &Pair) -> Result<Vec<usize>> {
    (0..p.t().len())
        .map(|t| p.embed(t).ok_or_else(|| Error::InvalidTable("the pair does not embed T into A".into())))
        .collect()
}

pub fn check_property_n(p: &Pair) -> Result<PropertyN> {
    let e = embedding(p)?;
    let k = e.len();
    let daggers: Vec<Vec<usize>> =
        (0..k).map(|a| (0..k).filter(|&d| p.is_null(p.op(e[a], e[d]))).collect()).collect();
    let circ: Vec<Option<usize>> = (0..k).map(|a| daggers[a].first().map(|&d| p.op(e[a], e[d]))).collect();
    let tn = |i: usize| p.t().name(i).to_string();
    let mut witness = None;
    for a in 0..k {
        let Some(c) = circ[a] else {
            witness = Some(Witness { tuple: vec![a], detail: format!("no a† in T for a = {}", tn(a)) });
            break;
        };
        if let Some(&d) = daggers[a].iter().find(|&&d| p.op(e[a], e[d]) != c) {
            let detail = format!(
                "{0} * {1} = {2} and {0} * {3} = {4} are both null",
                tn(a),
                tn(daggers[a][0]),
                p.name(c),
                tn(d),
                p.name(p.op(e[a], e[d]))
            );
            witness = Some(Witness { tuple: vec![a, daggers[a][0], d], detail });
            break;
        }
    }
    Ok(PropertyN { holds: witness.is_none(), daggers, circ, witness })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegationMap {
    /// The chosen `1† ∈ T`.
    pub one_dagger: usize,
    /// `(−)a = a·1†` for each `a ∈ T`, as an element of `T`.
    pub map: Vec<usize>,
}

impl NegationMap {
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }
}

/// A negation map `a ↦ a·1†` exists when some quasi-negative `d` of `1`
/// squares to `1`, so that `(−)` is an involution. The least such `d` is used.
pub fn negation_map(p: &Pair) -> Result<Option<NegationMap>> {
    let e = embedding(p)?;
    let t = p.t();
    let one = t.neutral();
    let d = (0..t.len()).find(|&d| p.is_null(p.op(e[one], e[d])) && t.op(d, d) == one);
    Ok(d.map(|d| NegationMap { one_dagger: d, map: (0..t.len()).map(|a| t.op(a, d)).collect() }))
}

/// `a * b ∈ A₀` with `a, b ∈ T` forces `b = (−)a`. Fails outright when no
/// negation map exists. Witness indices are elements of `T`.
pub fn is_uniquely_negated(p: &Pair) -> Result<Verdict> {
    const NAME: &str = "uniquely_negated";
    let Some(neg) = negation_map(p)? else {
        return Ok(Verdict::fail(NAME, 0, vec![], "no negation map".into()));
    };
    let e = embedding(p)?;
    let k = e.len();
    let t = p.t();
    let mut checked = 0;
    for a in 0..k {
        for b in 0..k {
            checked += 1;
            if p.is_null(p.op(e[a], e[b])) && b != neg.apply(a) {
                let detail = format!(
                    "{} * {} ∈ A₀ but (−){} = {}",
                    t.name(a),
                    t.name(b),
                    t.name(a),
                    t.name(neg.apply(a))
                );
                return Ok(Verdict::fail(NAME, checked, vec![a, b], detail));
            }
        }
    }
    Ok(Verdict::pass(NAME, checked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{make_finite_field, unit_subgroups, FinMonoid, Subgroup};
    use crate::hyperstruct::HyperTable;
    use crate::pairs::{infinity_pair, infinity_pair_idempotent, powerset_pair, supertropical_pair};
    use crate::quotient::krasner_quotient;

    #[test]
    fn powerset_of_hyperfields() {
        let f = make_finite_field(5, 1).unwrap();
        let g = unit_subgroups(&f).unwrap().into_iter().find(|g| g.len() == 2).unwrap();
        for h in [HyperTable::krasner(), HyperTable::signs(), krasner_quotient(&f, &g).unwrap()] {
            let p = powerset_pair(&h).unwrap();
            let n = check_property_n(&p).unwrap();
            assert!(n.holds);
            // a° = a ⊞ (−a)
            for (ti, c) in n.circ.iter().enumerate() {
                let a = p.subset(p.embed(ti).unwrap()).unwrap().first().unwrap();
                let expect = h.hsum(a, h.negative(a).unwrap());
                assert_eq!(p.subset(c.unwrap()).unwrap(), expect);
            }
            assert!(is_uniquely_negated(&p).unwrap().passed);
        }
    }

    #[test]
    fn infinity_pair_not_uniquely_negated() {
        let t = FinMonoid::cyclic_units(3).unwrap();
        let p = infinity_pair(&t).unwrap();
        assert!(check_property_n(&p).unwrap().holds);
        let neg = negation_map(&p).unwrap().unwrap();
        assert_eq!(neg.map, vec![0, 1]);
        let v = is_uniquely_negated(&p).unwrap();
        assert!(!v.passed);
        assert_eq!(v.witness.unwrap().tuple, vec![0, 1]);
    }

    #[test]
    fn idempotent_variant_has_no_negation_map() {
        let units = FinMonoid::cyclic_units(7).unwrap();
        let members = ["1", "2", "4"].iter().map(|s| units.index_of(s).unwrap()).collect();
        let sub = Subgroup::of_monoid(&units, members).unwrap();
        let names: Vec<String> = sub.members.iter().map(|i| units.name(i).to_string()).collect();
        let idx: Vec<usize> = sub.members.to_vec();
        let pos = |x: usize| idx.iter().position(|&y| y == x).unwrap();
        let t = FinMonoid::from_fn(names, 0, |a, b| pos(units.op(idx[a], idx[b]))).unwrap();
        let p = infinity_pair_idempotent(&t).unwrap();
        assert!(check_property_n(&p).unwrap().holds);
        assert!(negation_map(&p).unwrap().is_none());
    }

    #[test]
    fn supertropical_is_uniquely_negated() {
        let p = supertropical_pair().unwrap();
        assert!(is_uniquely_negated(&p).unwrap().passed);
    }

    #[test]
    fn missing_embedding_is_an_error() {
        let p = Pair::new(vec!["0".into()], |_, _| 0, FinMonoid::trivial(), |_, b| b, |b, _| b, [0].into_iter().collect(), 0)
            .unwrap();
        assert!(check_property_n(&p).is_err());
    }
}
