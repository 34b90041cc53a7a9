use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperstruct::HyperTable;

pub const ISO_BOUND: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoResult {
    /// `iso[a]` is the image of `a`; `None` when the search is exhausted.
    pub iso: Option<Vec<usize>>,
    pub nodes_explored: usize,
}

/// Invariants preserved by any isomorphism: sorted `|a ⊞ x|` over `x`,
/// `|a ⊞ a|`, and whether `a` is the zero or the one.
fn signature(h: &HyperTable, a: usize) -> (Vec<usize>, usize, bool, bool) {
    let mut deg: Vec<usize> = (0..h.len()).map(|x| h.hsum(a, x).len()).collect();
    deg.sort_unstable();
    (deg, h.hsum(a, a).len(), h.zero() == Some(a), h.one() == Some(a))
}

struct Search<'a> {
    a: &'a HyperTable,
    b: &'a HyperTable,
    cands: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Checks every pair whose entries are both assigned: products first,
    /// then the assigned part of each hypersum.
    fn consistent(&self, phi: &[Option<usize>], x: usize) -> bool {
        let (a, b) = (self.a, self.b);
        let assigned: Vec<usize> = (0..phi.len()).filter(|&u| phi[u].is_some()).collect();
        for &u in &assigned {
            for (p, q) in [(u, x), (x, u)] {
                let (fp, fq) = (phi[p].unwrap(), phi[q].unwrap());
                if let (Some(m), Some(mb)) = (a.mul(p, q), b.mul(fp, fq)) {
                    if phi[m].is_some_and(|fm| fm != mb) {
                        return false;
                    }
                    if let Some(pre) = phi.iter().position(|&v| v == Some(mb)) {
                        if pre != m {
                            return false;
                        }
                    }
                }
            }
        }
        for &u in &assigned {
            for (p, q) in [(u, x), (x, u)] {
                let (sa, sb) = (a.hsum(p, q), b.hsum(phi[p].unwrap(), phi[q].unwrap()));
                if sa.len() != sb.len() {
                    return false;
                }
                for z in sa {
                    if phi[z].is_some_and(|fz| !sb.contains(fz)) {
                        return false;
                    }
                }
                for w in sb {
                    if let Some(pre) = phi.iter().position(|&v| v == Some(w)) {
                        if !sa.contains(pre) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Depth-first in carrier order; returns the first complete bijection.
    fn dfs(&self, phi: &mut Vec<Option<usize>>, used: &mut Vec<bool>, nodes: &mut usize) -> bool {
        let Some(x) = phi.iter().position(Option::is_none) else {
            return true;
        };
        for &y in &self.cands[x] {
            if used[y] {
                continue;
            }
            *nodes += 1;
            phi[x] = Some(y);
            used[y] = true;
            if self.consistent(phi, x) && self.dfs(phi, used, nodes) {
                return true;
            }
            phi[x] = None;
            used[y] = false;
        }
        false
    }
}

/// Backtracking search for the least isomorphism `A → B` in carrier order.
/// Zero and one are pinned; the first free element's choices are explored
/// in parallel, and the node count covers the branches up to the winner.
pub fn iso_search(a: &HyperTable, b: &HyperTable) -> Result<IsoResult> {
    let n = a.len();
    if n.max(b.len()) > ISO_BOUND {
        return Err(Error::BoundExceeded { order: n.max(b.len()) as u64, bound: ISO_BOUND as u64 });
    }
    let none = IsoResult { iso: None, nodes_explored: 0 };
    if n != b.len()
        || a.has_mul() != b.has_mul()
        || a.zero().is_some() != b.zero().is_some()
        || a.one().is_some() != b.one().is_some()
    {
        return Ok(none);
    }
    let cands: Vec<Vec<usize>> =
        (0..n).map(|x| (0..n).filter(|&y| signature(a, x) == signature(b, y)).collect()).collect();
    let s = Search { a, b, cands };
    let mut phi = vec![None; n];
    let mut used = vec![false; n];
    for (za, zb) in [(a.zero(), b.zero()), (a.one(), b.one())] {
        if let (Some(x), Some(y)) = (za, zb) {
            if phi[x].is_some_and(|v| v != y) || (phi[x].is_none() && used[y]) {
                return Ok(none);
            }
            phi[x] = Some(y);
            used[y] = true;
            if !s.consistent(&phi, x) {
                return Ok(none);
            }
        }
    }
    let Some(first) = phi.iter().position(Option::is_none) else {
        let iso = phi.into_iter().map(Option::unwrap).collect();
        return Ok(IsoResult { iso: Some(iso), nodes_explored: 0 });
    };
    let branches: Vec<(usize, Option<Vec<usize>>)> = s.cands[first]
        .par_iter()
        .map(|&y| {
            if used[y] {
                return (0, None);
            }
            let (mut phi, mut used) = (phi.clone(), used.clone());
            phi[first] = Some(y);
            used[y] = true;
            let mut nodes = 1;
            let found = s.consistent(&phi, first) && s.dfs(&mut phi, &mut used, &mut nodes);
            (nodes, found.then(|| phi.into_iter().map(Option::unwrap).collect()))
        })
        .collect();
    let mut nodes = 0;
    for (k, iso) in branches {
        nodes += k;
        if iso.is_some() {
            return Ok(IsoResult { iso, nodes_explored: nodes });
        }
    }
    Ok(IsoResult { iso: None, nodes_explored: nodes })
}

/// Whether `phi` is an isomorphism `A → B` (exhaustive check).
pub fn is_isomorphism(a: &HyperTable, b: &HyperTable, phi: &[usize]) -> bool {
    let n = a.len();
    let mut seen = vec![false; b.len()];
    if n != b.len() || phi.len() != n || phi.iter().any(|&y| y >= n || std::mem::replace(&mut seen[y], true)) {
        return false;
    }
    a.zero().map(|z| phi[z]) == b.zero()
        && a.one().map(|o| phi[o]) == b.one()
        && (0..n * n).all(|k| {
            let (x, y) = (k / n, k % n);
            a.hsum(x, y).map(|z| phi[z]) == b.hsum(phi[x], phi[y]) && a.mul(x, y).map(|z| phi[z]) == b.mul(phi[x], phi[y])
        })
}

pub fn invert(phi: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; phi.len()];
    for (x, &y) in phi.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{make_finite_field, unit_subgroups};
    use crate::quotient::krasner_quotient;

    fn quotient(p: u64, order: usize) -> HyperTable {
        let f = make_finite_field(p, 1).unwrap();
        let g = unit_subgroups(&f).unwrap().into_iter().find(|g| g.len() == order).unwrap();
        krasner_quotient(&f, &g).unwrap()
    }

    #[test]
    fn gf3_full_units_is_krasner() {
        let r = iso_search(&quotient(3, 2), &HyperTable::krasner()).unwrap();
        assert_eq!(r.iso, Some(vec![0, 1]));
    }

    #[test]
    fn gf5_squares_is_not_signs() {
        let r = iso_search(&quotient(5, 2), &HyperTable::signs()).unwrap();
        assert!(r.iso.is_none());
    }

    #[test]
    fn self_iso_is_identity() {
        for h in [HyperTable::signs(), quotient(7, 2), quotient(13, 4)] {
            let r = iso_search(&h, &h).unwrap();
            assert_eq!(r.iso, Some((0..h.len()).collect()));
        }
    }

    #[test]
    fn relabelled_copy_found_and_inverted() {
        let h = quotient(7, 2);
        let perm = vec![0, 1, 3, 2];
        let k = h.permuted(&perm).unwrap();
        let r = iso_search(&h, &k).unwrap();
        let phi = r.iso.unwrap();
        assert!(is_isomorphism(&h, &k, &phi));
        assert!(is_isomorphism(&k, &h, &invert(&phi)));
    }

    #[test]
    fn bound_enforced() {
        let f = make_finite_field(11, 1).unwrap();
        let h = HyperTable::from_ring(&f);
        assert!(matches!(iso_search(&h, &h), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn size_mismatch_is_non_isomorphic() {
        let r = iso_search(&HyperTable::krasner(), &HyperTable::signs()).unwrap();
        assert_eq!(r, IsoResult { iso: None, nodes_explored: 0 });
    }
}
