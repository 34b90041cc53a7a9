use rayon::prelude::*;
use serde::Serialize;

use crate::carrier::{make_finite_field, unit_subgroups};
use crate::elemset::{show, ElemSet};
use crate::error::{Error, Result};
use crate::hyperstruct::{check_hyperfield, HyperTable, HyperTableJson};
use crate::morphisms::iso_search;
use crate::quotient::krasner_quotient;

pub const CENSUS_MAX_ORDER: usize = 4;
/// Largest field order tried when looking for a quotient realization.
pub const REALIZATION_MAX_Q: u64 = 32;

#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    pub order: usize,
    pub table: HyperTableJson,
    /// `a ⊞ b = b ⊞ a` throughout; the hyperfield checks do not require it.
    pub commutative: bool,
    /// Quotients `GF(q)/G` isomorphic to this entry, as `gf:q/{..}`.
    pub realized_by: Vec<String>,
}

fn elem_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            1 => "1".to_string(),
            2 => "g".to_string(),
            _ => format!("g^{}", i - 1),
        })
        .collect()
}

/// Every hyperfield of order `n ≤ 4`, whose unit group is then cyclic:
/// element `i ≥ 1` is `g^(i-1)`. The hypersum is fixed by the sets
/// `1 ⊞ a` through `a ⊞ b = a(1 ⊞ a⁻¹b)`.
fn hyperfields_of_order(n: usize) -> Vec<HyperTable> {
    if n == 1 {
        return vec![HyperTable::trivial()];
    }
    let k = n - 1;
    let mul = |a: usize, b: usize| if a == 0 || b == 0 { 0 } else { 1 + (a - 1 + b - 1) % k };
    let inv = |a: usize| 1 + (k - (a - 1)) % k;
    let choices = ((1u64 << n) - 1) as usize;
    let total = choices.pow(k as u32);
    (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            // one_plus[a] = 1 ⊞ a for nonzero a
            let mut one_plus = vec![ElemSet::singleton(1); n];
            for slot in one_plus.iter_mut().skip(1) {
                *slot = ElemSet::from_bits((code % choices) as u64 + 1);
                code /= choices;
            }
            let hsum = |a: usize, b: usize| match (a, b) {
                (0, b) => ElemSet::singleton(b),
                (a, 0) => ElemSet::singleton(a),
                (a, b) => one_plus[mul(inv(a), b)].map(|x| mul(a, x)),
            };
            let t = HyperTable::from_fn(elem_names(n), hsum, Some(&mul), Some(0), Some(1)).ok()?;
            check_hyperfield(&t).passed().then_some(t)
        })
        .collect()
}

fn prime_powers_up_to(q: u64) -> Vec<(u64, u32)> {
    (2..=q)
        .filter_map(|m| {
            let p = (2..=m).find(|d| m % d == 0)?;
            let mut r = m;
            let mut k = 0;
            while r % p == 0 {
                r /= p;
                k += 1;
            }
            (r == 1).then_some((p, k))
        })
        .collect()
}

/// Hyperfields up to `max_order` elements, one per isomorphism class, each
/// with the quotients `GF(q)/G` (`q ≤ 32`) realizing it.
pub fn census(max_order: usize) -> Result<Vec<CensusEntry>> {
    if max_order > CENSUS_MAX_ORDER {
        return Err(Error::BoundExceeded { order: max_order as u64, bound: CENSUS_MAX_ORDER as u64 });
    }
    let mut quotients: Vec<(String, HyperTable)> = Vec::new();
    for (p, k) in prime_powers_up_to(REALIZATION_MAX_Q) {
        let f = make_finite_field(p, k)?;
        for g in unit_subgroups(&f)? {
            let q = krasner_quotient(&f, &g)?;
            if q.len() <= max_order {
                quotients.push((format!("gf:{}/{}", f.len(), show(g.members, f.names())), q));
            }
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_order {
        let mut reps: Vec<HyperTable> = Vec::new();
        for t in hyperfields_of_order(n) {
            let mut fresh = true;
            for r in &reps {
                if iso_search(r, &t)?.iso.is_some() {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                reps.push(t);
            }
        }
        for t in reps {
            let mut realized_by = Vec::new();
            for (name, q) in quotients.iter().filter(|(_, q)| q.len() == n) {
                if iso_search(&t, q)?.iso.is_some() {
                    realized_by.push(name.clone());
                }
            }
            let commutative = t.all().iter().all(|a| t.all().iter().all(|b| t.hsum(a, b) == t.hsum(b, a)));
            out.push(CensusEntry { order: n, table: t.to_json(), commutative, realized_by });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(entries: &'a [CensusEntry], t: &HyperTable) -> Option<&'a CensusEntry> {
        entries.iter().find(|e| {
            let h = HyperTable::from_json(e.table.clone()).unwrap();
            iso_search(&h, t).unwrap().iso.is_some()
        })
    }

    #[test]
    fn order_one_is_trivial() {
        let c = census(1).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].order, 1);
    }

    #[test]
    fn order_two_has_krasner() {
        let c = census(2).unwrap();
        let k = find(&c, &HyperTable::krasner()).unwrap();
        assert!(k.realized_by.iter().any(|n| n == "gf:3/{1, 2}"), "{:?}", k.realized_by);
    }

    #[test]
    fn order_three_separates_signs_from_residues() {
        let c = census(3).unwrap();
        let signs = find(&c, &HyperTable::signs()).unwrap();
        let f = make_finite_field(5, 1).unwrap();
        let g = unit_subgroups(&f).unwrap().into_iter().find(|g| g.len() == 2).unwrap();
        let qr = find(&c, &krasner_quotient(&f, &g).unwrap()).unwrap();
        assert_ne!(signs.table.hsum, qr.table.hsum);
        assert!(qr.realized_by.iter().any(|n| n.starts_with("gf:5/")));
    }

    #[test]
    fn commutative_counts() {
        // independent brute force over commutative tables: 1, 2, 5, 7
        let c = census(4).unwrap();
        let count = |n: usize| c.iter().filter(|e| e.order == n && e.commutative).count();
        assert_eq!([1, 2, 3, 4].map(count), [1, 2, 5, 7]);
        assert!(c.iter().filter(|e| !e.commutative).all(|e| e.realized_by.is_empty()));
    }

    #[test]
    fn guard() {
        assert!(census(5).is_err());
    }
}
