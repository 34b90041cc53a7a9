//! Products, direct sums, truncated polynomial pairs and matrix pairs.

use hyperforge::constructs::{boolean_pair, direct_sum_pair, matrix_pair, polynomial_pair, product_pair};
use hyperforge::pairs::check_pair_axioms;

fn main() -> hyperforge::Result<()> {
    let b = boolean_pair()?;
    let prod = product_pair(&[b.clone(), b.clone()])?;
    println!("B x B: {} elements, null {:?}, axioms {}", prod.len(), prod.a0().to_vec(), check_pair_axioms(&prod).passed());
    let sum = direct_sum_pair(&[b.clone(), b.clone(), b.clone()])?;
    println!("B + B + B: {} elements", sum.len());

    let poly = polynomial_pair(&b, 2)?;
    println!("B[λ] up to degree 2: {} elements", poly.pair.len());
    for &m in &poly.distinguished {
        print!("{} ", poly.pair.name(m));
    }
    println!();

    let mat = matrix_pair(&b, 2)?;
    println!("2x2 Boolean matrices: {} elements, axioms {}", mat.pair.len(), check_pair_axioms(&mat.pair).passed());
    println!("3x3 over B: {}", matrix_pair(&b, 3).map(|_| "built".to_string()).unwrap_or_else(|e| e.to_string()));
    Ok(())
}
