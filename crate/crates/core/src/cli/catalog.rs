use std::path::Path;

use crate::carrier::{make_finite_field, unit_subgroups, FinMonoid, FinRing, Subgroup};
use crate::constructs::boolean_pair;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::hyperstruct::HyperTable;
use crate::pairs::{infinity_pair, powerset_pair, supertropical_pair, Pair, PairJson};
use crate::quotient::krasner_quotient;
use crate::symbolic::SymField;

/// A resolved catalog name.
#[derive(Clone, Debug)]
pub enum Entry {
    Finite(HyperTable),
    Symbolic(SymField),
}

pub const NAMES: &[&str] = &[
    "krasner",
    "signs",
    "trivial",
    "tropical",
    "signed-tropical",
    "phase",
    "gf:Q",
    "gf:Q/units",
    "gf:Q/ORDER",
    "gf:Q/{a,b,..}",
];

/// `q = pᵏ` for prime `p`.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

pub fn field(spec: &str) -> Result<FinRing> {
    let q = spec.strip_prefix("gf:").unwrap_or(spec);
    let q: u64 = q.parse().map_err(|_| Error::UnknownName(spec.to_string()))?;
    let (p, k) = prime_power(q).ok_or_else(|| Error::UnknownName(format!("{q} is not a prime power")))?;
    make_finite_field(p, k)
}

/// `units`, a subgroup order, or a braced list of element names.
pub fn subgroup(f: &FinRing, spec: &str) -> Result<Subgroup> {
    let subs = unit_subgroups(f)?;
    if spec == "units" {
        return Ok(subs.into_iter().max_by_key(Subgroup::len).expect("units form a subgroup"));
    }
    if let Ok(order) = spec.parse::<usize>() {
        return subs
            .into_iter()
            .find(|g| g.len() == order)
            .ok_or_else(|| Error::UnknownName(format!("no unit subgroup of order {order}")));
    }
    let inner = spec.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(spec);
    let members: ElemSet = inner
        .split(',')
        .map(|n| f.index_of(n.trim()).ok_or_else(|| Error::UnknownName(n.trim().to_string())))
        .collect::<Result<_>>()?;
    Subgroup::multiplicative(f, members)
}

fn read_json(path: &str) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn is_file(name: &str) -> bool {
    name.ends_with(".json") || Path::new(name).is_file()
}

pub fn resolve(name: &str) -> Result<Entry> {
    if let Some(f) = SymField::from_name(name) {
        if !matches!(f, SymField::Krasner | SymField::Signs) {
            return Ok(Entry::Symbolic(f));
        }
    }
    resolve_table(name).map(Entry::Finite)
}

pub fn resolve_table(name: &str) -> Result<HyperTable> {
    match name {
        "krasner" => return Ok(HyperTable::krasner()),
        "signs" => return Ok(HyperTable::signs()),
        "trivial" => return Ok(HyperTable::trivial()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("gf:") {
        return match rest.split_once('/') {
            None => Ok(HyperTable::from_ring(&field(rest)?)),
            Some((q, g)) => {
                let f = field(q)?;
                krasner_quotient(&f, &subgroup(&f, g)?)
            }
        };
    }
    if is_file(name) {
        return HyperTable::from_json_str(&read_json(name)?);
    }
    Err(Error::UnknownName(name.to_string()))
}

/// `powerset:<table>`, `infinity:<n>` (over `(Z/n)ˣ`), `supertropical`,
/// `boolean`, or a pair JSON file.
pub fn resolve_pair(name: &str) -> Result<Pair> {
    if let Some(t) = name.strip_prefix("powerset:") {
        return powerset_pair(&resolve_table(t)?);
    }
    if let Some(n) = name.strip_prefix("infinity:") {
        let n: u64 = n.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        return infinity_pair(&FinMonoid::cyclic_units(n)?);
    }
    match name {
        "supertropical" => return supertropical_pair(),
        "boolean" => return boolean_pair(),
        _ => {}
    }
    if is_file(name) {
        let doc: PairJson = serde_json::from_str(&read_json(name)?)?;
        return Pair::from_json(doc);
    }
    powerset_pair(&resolve_table(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::iso_search;

    #[test]
    fn names_resolve() {
        for n in ["krasner", "signs", "trivial", "gf:5", "gf:5/units", "gf:5/2", "gf:5/{1,4}", "gf:4/units"] {
            assert!(matches!(resolve(n).unwrap(), Entry::Finite(_)), "{n}");
        }
        for n in ["tropical", "signed-tropical", "phase"] {
            assert!(matches!(resolve(n).unwrap(), Entry::Symbolic(_)));
        }
        assert!(resolve("gf:6").is_err());
        assert!(resolve("gf:5/3").is_err());
        assert!(resolve("nonsense").is_err());
    }

    #[test]
    fn gf3_units_is_krasner() {
        let t = resolve_table("gf:3/units").unwrap();
        assert!(iso_search(&t, &HyperTable::krasner()).unwrap().iso.is_some());
    }

    #[test]
    fn finite_entries_round_trip() {
        for n in ["krasner", "signs", "gf:7/3", "gf:9/units"] {
            let t = resolve_table(n).unwrap();
            assert_eq!(HyperTable::from_json_str(&t.to_json_string()).unwrap(), t);
        }
    }

    #[test]
    fn pairs_resolve() {
        assert_eq!(resolve_pair("powerset:krasner").unwrap().len(), 3);
        assert_eq!(resolve_pair("infinity:3").unwrap().len(), 4);
        assert_eq!(resolve_pair("signs").unwrap().len(), 7);
        assert!(resolve_pair("supertropical").is_ok());
    }
}
