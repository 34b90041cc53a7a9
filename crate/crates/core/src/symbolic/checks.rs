use rayon::prelude::*;
use serde::Serialize;

use super::elem::{SymElem, SymField};
use super::setvalue::{hsum_setvalues, hsum_sym, SetValue};
use crate::error::Result;
use crate::hyperstruct::{AxiomReport, Verdict};

fn triples(n: usize) -> impl IndexedParallelIterator<Item = [usize; 3]> {
    (0..n * n * n).into_par_iter().map(move |k| [k / (n * n), k / n % n, k % n])
}

/// Associativity, reversibility, unique hypernegatives, hyperneutral zero
/// and element-level distributivity over all triples drawn from `sample`.
/// Every comparison is an exact set comparison.
pub fn spot_check_axioms(field: SymField, sample: &[SymElem]) -> Result<AxiomReport> {
    for &e in sample {
        e.expect_field(field)?;
    }
    let n = sample.len();
    let hs = |a: usize, b: usize| hsum_sym(field, sample[a], sample[b]).expect("checked fields");
    let single = |e: SymElem| SetValue::singleton(e);
    let mut report = AxiomReport::default();

    let assoc = triples(n).find_map_first(|[a, b, c]| {
        let l = hsum_setvalues(field, &hs(a, b), &single(sample[c])).expect("same field");
        let r = hsum_setvalues(field, &single(sample[a]), &hs(b, c)).expect("same field");
        (l != r).then(|| (vec![a, b, c], format!("({0} ⊞ {1}) ⊞ {2} = {l} but {0} ⊞ ({1} ⊞ {2}) = {r}", sample[a], sample[b], sample[c])))
    });
    report.push(Verdict::from_search("hsum_associativity", n * n * n, assoc));

    let zero = field.zero();
    let neutral = (0..n).find_map(|a| {
        let s = hsum_sym(field, sample[a], zero).expect("same field");
        (s != single(sample[a])).then(|| (vec![a], format!("{} ⊞ 0 = {s}", sample[a])))
    });
    report.push(Verdict::from_search("hyperneutral_zero", n, neutral));

    let negs = (0..n).find_map(|a| {
        let x = sample[a];
        let with_zero: Vec<SymElem> =
            sample.iter().copied().filter(|&y| hsum_sym(field, x, y).expect("same field").contains(zero)).collect();
        let ok = with_zero.iter().all(|&y| y == x.neg()) && hsum_sym(field, x, x.neg()).expect("same field").contains(zero);
        (!ok).then(|| (vec![a], format!("elements y with 0 ∈ {x} ⊞ y: {with_zero:?}")))
    });
    report.push(Verdict::from_search("unique_hypernegative", n, negs));

    let rev = triples(n).find_map_first(|[a, b, c]| {
        let (x, y, z) = (sample[a], sample[b], sample[c]);
        let l = hs(a, b).contains(z);
        let r = hsum_sym(field, z, x.neg()).expect("same field").contains(y);
        (l != r).then(|| (vec![a, b, c], format!("{z} ∈ {x} ⊞ {y} is {l} but {y} ∈ {z} ⊞ −{x} is {r}")))
    });
    report.push(Verdict::from_search("reversibility", n * n * n, rev));

    let dist = triples(n).find_map_first(|[a, b, c]| {
        let x = sample[a];
        let l = hs(b, c).scale(x).expect("same field");
        let r = hsum_sym(field, x.mul(sample[b]).expect("same field"), x.mul(sample[c]).expect("same field")).expect("same field");
        (l != r).then(|| (vec![a, b, c], format!("{x}({} ⊞ {}) = {l} but products sum to {r}", sample[b], sample[c])))
    });
    report.push(Verdict::from_search("distributivity", n * n * n, dist));
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapWitness {
    pub s: SetValue,
    pub s1: SetValue,
    pub s2: SetValue,
    /// `S(S₁ ⊞ S₂)`.
    pub lhs: SetValue,
    /// `SS₁ ⊞ SS₂`.
    pub rhs: SetValue,
    /// A member of `rhs ∖ lhs`.
    pub member: String,
}

impl GapWitness {
    /// Recompute both sides and confirm the strict inclusion.
    pub fn verify(&self) -> Result<bool> {
        let f = self.s.field();
        let lhs = self.s.mul(&hsum_setvalues(f, &self.s1, &self.s2)?)?;
        let rhs = hsum_setvalues(f, &self.s.mul(&self.s1)?, &self.s.mul(&self.s2)?)?;
        Ok(lhs == self.lhs && rhs == self.rhs && lhs.is_subset(&rhs) && rhs.witness_outside(&lhs).is_some())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GapSearch {
    pub field: SymField,
    pub witness: Option<GapWitness>,
    pub checked: usize,
    /// Whether every candidate triple was examined.
    pub exhaustive: bool,
}

/// Look for finite subsets `S, S₁, S₂` of the field's sample pool with
/// `S(S₁ ⊞ S₂) ⊊ SS₁ ⊞ SS₂`. Candidates of size at most two are tried in
/// order of total size, then lexicographically; at most `budget` triples.
pub fn distributivity_gap(field: SymField, budget: usize) -> Result<GapSearch> {
    let pool = field.pool();
    let n = pool.len();
    let mut subsets: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    subsets.extend((0..n).flat_map(|i| (i + 1..n).map(move |j| vec![i, j])));
    let sets: Vec<SetValue> =
        subsets.iter().map(|ix| SetValue::from_elems(field, ix.iter().map(|&i| pool[i]))).collect::<Result<_>>()?;
    let m = sets.len();
    let mut order: Vec<[usize; 3]> =
        (0..m * m * m).map(|k| [k / (m * m), k / m % m, k % m]).collect();
    order.sort_by_key(|t| (t.iter().map(|&i| subsets[i].len()).sum::<usize>(), *t));
    let total = order.len();
    let take = total.min(budget);
    let found = order[..take].par_iter().enumerate().find_map_first(|(k, &[a, b, c])| {
        let (s, s1, s2) = (&sets[a], &sets[b], &sets[c]);
        let lhs = s.mul(&hsum_setvalues(field, s1, s2).ok()?).ok()?;
        let rhs = hsum_setvalues(field, &s.mul(s1).ok()?, &s.mul(s2).ok()?).ok()?;
        if !lhs.is_subset(&rhs) {
            return None;
        }
        let member = rhs.witness_outside(&lhs)?;
        Some((k, GapWitness { s: s.clone(), s1: s1.clone(), s2: s2.clone(), lhs, rhs, member: member.to_string() }))
    });
    Ok(match found {
        Some((k, w)) => GapSearch { field, witness: Some(w), checked: k + 1, exhaustive: false },
        None => GapSearch { field, witness: None, checked: take, exhaustive: take == total },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::Sign;

    #[test]
    fn tropical_sample_passes() {
        let sample = [SymElem::Tropical(None), SymElem::trop(0), SymElem::trop(1), SymElem::trop(2)];
        let r = spot_check_axioms(SymField::Tropical, &sample).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn signs_and_krasner_pass() {
        for f in [SymField::Krasner, SymField::Signs, SymField::SignedTropical] {
            let r = spot_check_axioms(f, &f.pool()).unwrap();
            assert!(r.passed(), "{}: {r}", f.name());
        }
    }

    #[test]
    fn phase_eighth_roots_pass() {
        let r = spot_check_axioms(SymField::Phase, &SymField::Phase.pool()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn mixed_sample_rejected() {
        assert!(spot_check_axioms(SymField::Tropical, &[SymElem::signed(Sign::Plus, 1)]).is_err());
    }

    #[test]
    fn phase_gap_found_and_verified() {
        let g = distributivity_gap(SymField::Phase, 10_000).unwrap();
        let w = g.witness.expect("phase has a gap");
        assert!(w.verify().unwrap());
        assert!(g.checked <= 10_000);
    }

    #[test]
    fn spec_style_phase_instance() {
        let f = SymField::Phase;
        let s = SetValue::from_elems(f, [SymElem::angle(0, 1), SymElem::angle(1, 4)]).unwrap();
        let s1 = SetValue::singleton(SymElem::angle(0, 1));
        let s2 = SetValue::singleton(SymElem::angle(1, 2));
        let lhs = s.mul(&hsum_setvalues(f, &s1, &s2).unwrap()).unwrap();
        let rhs = hsum_setvalues(f, &s.mul(&s1).unwrap(), &s.mul(&s2).unwrap()).unwrap();
        let quarters = [0, 1, 2, 3].map(|k| SymElem::angle(k, 4));
        let expected = SetValue::from_elems(f, quarters.into_iter().chain([SymElem::Phase(None)])).unwrap();
        assert_eq!(lhs, expected);
        assert!(lhs.is_subset(&rhs));
        assert!(rhs.contains(SymElem::angle(7, 8)) && !lhs.contains(SymElem::angle(7, 8)));
    }

    #[test]
    fn krasner_has_no_gap() {
        let g = distributivity_gap(SymField::Krasner, usize::MAX).unwrap();
        assert!(g.witness.is_none());
        assert!(g.exhaustive);
        assert_eq!(g.checked, 27);
    }

    #[test]
    fn singleton_scaling_is_distributive() {
        let f = SymField::Tropical;
        let pool = f.pool();
        for &x in &pool {
            for &a in &pool {
                for &b in &pool {
                    let s = SetValue::singleton(x);
                    let (s1, s2) = (SetValue::singleton(a), SetValue::singleton(b));
                    let lhs = s.mul(&hsum_setvalues(f, &s1, &s2).unwrap()).unwrap();
                    let rhs = hsum_setvalues(f, &s.mul(&s1).unwrap(), &s.mul(&s2).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
