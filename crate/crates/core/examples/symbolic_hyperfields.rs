//! Rule-based hyperfields: hypersums in the tropical, signed tropical and
//! phase hyperfields, spot checks, and a distributivity gap for phases.

use hyperforge::symbolic::{distributivity_gap, hsum_sym, spot_check_axioms, Sign, SymElem, SymField};

fn main() -> hyperforge::Result<()> {
    let t = SymField::Tropical;
    println!("tropical 1 + 1 = {}", hsum_sym(t, SymElem::trop(1), SymElem::trop(1))?);
    println!("tropical 1 + 2 = {}", hsum_sym(t, SymElem::trop(1), SymElem::trop(2))?);

    let st = SymField::SignedTropical;
    let (p, m) = (SymElem::signed(Sign::Plus, 1), SymElem::signed(Sign::Minus, 1));
    println!("signed tropical +1 + -1 = {}", hsum_sym(st, p, m)?);

    let ph = SymField::Phase;
    println!("phase 0 + 1/4 = {}", hsum_sym(ph, SymElem::angle(0, 1), SymElem::angle(1, 4))?);
    println!("phase 0 + 1/2 = {}", hsum_sym(ph, SymElem::angle(0, 1), SymElem::angle(1, 2))?);

    for f in SymField::ALL {
        let r = spot_check_axioms(f, &f.pool())?;
        println!("{:>16}: {} verdicts, all pass {}", f.name(), r.verdicts.len(), r.passed());
    }

    let gap = distributivity_gap(ph, 10_000)?;
    match gap.witness {
        Some(w) => println!("phase gap after {} triples: S = {}, S(S1+S2) = {}, SS1+SS2 = {}", gap.checked, w.s, w.lhs, w.rhs),
        None => println!("no phase gap within budget"),
    }
    Ok(())
}
