//! Quotients of the rationals by a multiplicative subgroup, estimated from
//! seeded samples.

use hyperforge::quotient::{sampled_quotient, RationalQuotient, RationalSubgroup};

fn main() -> hyperforge::Result<()> {
    for subgroup in [RationalSubgroup::Positive, RationalSubgroup::Units] {
        let q = sampled_quotient(&RationalQuotient { subgroup }, 200, 0, None)?;
        println!("Q/{subgroup:?}: {} classes; {}", q.len(), q.summary());
        if let Ok(t) = q.to_table() {
            println!("{}", t.hsum_csv());
        }
    }
    Ok(())
}
