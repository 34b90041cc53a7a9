//! Power-set pairs, surpassing relations, Property N and negation maps.

use hyperforge::carrier::FinMonoid;
use hyperforge::hyperstruct::HyperTable;
use hyperforge::pairs::{
    check_pair_axioms, check_property_n, check_surpassing, infinity_pair, is_uniquely_negated, negation_map,
    powerset_pair, supertropical_pair, Pair, SurpassRel,
};

fn describe(name: &str, p: &Pair) -> hyperforge::Result<()> {
    let rel = if p.is_powerset() { SurpassRel::inclusion(p)? } else { SurpassRel::null(p) };
    println!("{name}: {} elements, null set {:?}", p.len(), p.a0().to_vec());
    println!("  pair axioms {}, surpassing {}", check_pair_axioms(p).passed(), check_surpassing(p, &rel).passed());
    let n = check_property_n(p)?;
    println!("  property N {}, a° = {:?}", n.holds, n.circ.iter().map(|c| c.map(|c| p.name(c).to_string())).collect::<Vec<_>>());
    if let Some(neg) = negation_map(p)? {
        println!("  negation map via 1† = {}", p.t().name(neg.one_dagger));
    }
    let u = is_uniquely_negated(p)?;
    println!("  uniquely negated {}{}", u.passed, u.witness.map(|w| format!(": {}", w.detail)).unwrap_or_default());
    Ok(())
}

fn main() -> hyperforge::Result<()> {
    describe("P(krasner)", &powerset_pair(&HyperTable::krasner())?)?;
    describe("P(signs)", &powerset_pair(&HyperTable::signs())?)?;
    describe("infinity over (Z/5)^x", &infinity_pair(&FinMonoid::cyclic_units(5)?)?)?;
    describe("supertropical", &supertropical_pair()?)?;
    Ok(())
}
