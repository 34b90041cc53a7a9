//! Kernels of semifields and their congruences: max-plus over a window of
//! integers, and the Boolean semifield.

use hyperforge::carrier::{congruence_from_kernel, is_kernel, kernel_from_congruence, MaxPlus, SubgroupPredicate, TableSemifield};

fn main() -> hyperforge::Result<()> {
    let s = MaxPlus::default();
    let candidates = [
        SubgroupPredicate::new("{0}", |e: &Option<i64>| *e == Some(0)),
        SubgroupPredicate::new("2Z", |e: &Option<i64>| matches!(e, Some(x) if x % 2 == 0)),
        SubgroupPredicate::new("Z", |e: &Option<i64>| e.is_some()),
    ];
    for k in &candidates {
        let v = is_kernel(&s, k, usize::MAX)?;
        match v.witness {
            Some(w) => println!("{}: rejected, a1={:?} a2={:?} r1={:?} r2={:?}", k.name, w.a1, w.a2, w.r1, w.r2),
            None => {
                let c = congruence_from_kernel(&s, k, usize::MAX)?;
                println!("{}: kernel after {} tuples, {} congruence classes on the window", k.name, v.checked, c.classes.len());
            }
        }
    }
    let b = TableSemifield::boolean();
    let c = congruence_from_kernel(&b, &SubgroupPredicate::listed("{1}", vec![1usize]), usize::MAX)?;
    println!("Boolean: classes {:?}, kernel back {:?}", c.classes, kernel_from_congruence(&b, &c)?);
    Ok(())
}
