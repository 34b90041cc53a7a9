//! The m-hyperring of 2x2 matrices over GF(2) modulo the left ideal of
//! matrices with zero second column.

use hyperforge::carrier::{make_finite_field, FinRing};
use hyperforge::quotient::{m_hyperring, zero_second_column};
use hyperforge::ElemSet;

fn main() -> hyperforge::Result<()> {
    let m2 = FinRing::matrices2(&make_finite_field(2, 1)?)?;
    let l = zero_second_column(&m2)?;
    let mh = m_hyperring(&m2, l)?;
    println!("{} classes, single-valued: {}", mh.len(), mh.is_single_valued());
    for a in 0..mh.len() {
        let row: Vec<String> = (0..mh.len()).map(|b| format!("{:?}", mh.hmul(a, b).to_vec())).collect();
        println!("  {a}: {}", row.join(" "));
    }
    let report = mh.check_subset_distributivity();
    for v in &report.verdicts {
        println!("{}: {} ({} triples)", v.name, v.passed, v.checked);
    }
    let trivial = m_hyperring(&m2, ElemSet::singleton(m2.zero()))?;
    println!("modulo the zero ideal, single-valued: {}", trivial.is_single_valued());
    println!("{}", serde_json::to_string(&mh.to_json())?);
    Ok(())
}
