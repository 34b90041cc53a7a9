//! Rule-based hyperfields on infinite carriers (Krasner, signs, tropical,
//! signed tropical, phase) with exact symbolic set values.

mod checks;
mod elem;
mod setvalue;

pub use checks::{distributivity_gap, spot_check_axioms, GapSearch, GapWitness};
pub use elem::{Angle, Sign, SymElem, SymField};
pub use setvalue::{hsum_setvalues, hsum_sym, Arc, SetValue};
