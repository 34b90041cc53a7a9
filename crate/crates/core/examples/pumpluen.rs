//! The nonassociative remainder algebra of GF(4)[x; Frobenius] modulo
//! x^2 + w, and its comparison with the m-hyperring of cosets.

use hyperforge::carrier::make_finite_field;
use hyperforge::skewpoly::{crosscheck_mhyperring, PumpluenAlgebra, SkewRing};

fn main() -> hyperforge::Result<()> {
    let ring = SkewRing::new(make_finite_field(2, 2)?, 1)?;
    let f = ring.parse("x^2+w")?;
    let w = ring.parse("w")?;
    println!("x·w = {}, w·x = {}", ring.show(&ring.mul(&ring.x(), &w)?), ring.show(&ring.mul(&w, &ring.x())?));
    let alg = PumpluenAlgebra::new(ring, f)?;
    let x = alg.parse("x")?;
    println!("{} elements; x∘x = {}", alg.len(), alg.name(alg.mul(x, x)));
    if let Some([a, b, c]) = alg.nonassociativity_witness() {
        println!(
            "({}∘{})∘{} = {} but {}∘({}∘{}) = {}",
            alg.name(a), alg.name(b), alg.name(c), alg.name(alg.mul(alg.mul(a, b), c)),
            alg.name(a), alg.name(b), alg.name(c), alg.name(alg.mul(a, alg.mul(b, c)))
        );
    }
    let report = crosscheck_mhyperring(&alg, 20, 0);
    println!("{}: {}; {}: {}", report.verdict.name, report.verdict.passed, report.containment.name, report.containment.passed);
    for s in report.samples.iter().take(4) {
        println!("  [{}][{}] = {}, least-degree coset element {}", s.r1, s.r2, s.pumpluen, s.min_degree);
    }
    Ok(())
}
