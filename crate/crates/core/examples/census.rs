//! Hyperfields with at most four elements up to isomorphism, with the
//! quotients GF(q)/G that realize them.

use hyperforge::cli::census;

fn main() -> hyperforge::Result<()> {
    for e in census(4)? {
        let row = e.table.hsum.get(1).cloned().unwrap_or_default();
        let sums: Vec<String> = row.iter().map(|s| format!("{s:?}")).collect();
        let realized = if e.realized_by.is_empty() { "none".to_string() } else { e.realized_by.join(" ") };
        let comm = if e.commutative { "" } else { " (noncommutative)" };
        println!("order {}{comm}: 1 + _ = {}; realized by {}", e.order, sums.join(" "), realized);
    }
    Ok(())
}
