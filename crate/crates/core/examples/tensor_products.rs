//! Depth-truncated tensor products of pairs by congruence closure.

use hyperforge::constructs::{tensor_product, DEFAULT_TERM_BUDGET};
use hyperforge::hyperstruct::HyperTable;
use hyperforge::pairs::powerset_pair;

fn main() -> hyperforge::Result<()> {
    let k = powerset_pair(&HyperTable::krasner())?;
    for depth in 0..=2 {
        let tp = tensor_product(&k, &k, depth, DEFAULT_TERM_BUDGET)?;
        println!(
            "P(K) ⊗ P(K) at depth {depth}: {} terms, {} classes, {} null",
            tp.universe.len(),
            tp.class_count(),
            tp.null_classes.len()
        );
    }
    let tp = tensor_product(&k, &k, 1, DEFAULT_TERM_BUDGET)?;
    for class in tp.rel.classes().iter().take(5) {
        let shown: Vec<String> = class.iter().take(4).map(|&t| tp.universe.show(t)).collect();
        println!("  {}{}", shown.join(" ~ "), if class.len() > 4 { " ~ ..." } else { "" });
    }
    Ok(())
}
