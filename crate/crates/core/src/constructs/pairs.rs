use crate::carrier::{FinMonoid, FinSemiring};
use crate::elemset::{ElemSet, MAX_CARRIER};
use crate::error::{Error, Result};
use crate::pairs::Pair;

/// Mixed-radix coordinates, first coordinate most significant.
#[derive(Clone, Debug)]
struct Radix(Vec<usize>);

impl Radix {
    fn total(&self) -> Result<usize> {
        self.0.iter().try_fold(1usize, |acc, &s| {
            acc.checked_mul(s).filter(|&v| v <= MAX_CARRIER).ok_or(Error::CarrierTooLarge(acc.saturating_mul(s)))
        })
    }

    fn split(&self, mut i: usize) -> Vec<usize> {
        let mut out = vec![0; self.0.len()];
        for (slot, &s) in out.iter_mut().zip(&self.0).rev() {
            *slot = i % s;
            i /= s;
        }
        out
    }

    fn join(&self, parts: &[usize]) -> usize {
        parts.iter().zip(&self.0).fold(0, |acc, (&p, &s)| acc * s + p)
    }
}

fn tuple_name(parts: impl Iterator<Item = String>) -> String {
    format!("({})", parts.collect::<Vec<_>>().join(","))
}

/// `Π Pᵢ` with componentwise operations, `T = Π Tᵢ`, and `A₀ = Π A₀ᵢ`.
pub fn product_pair(ps: &[Pair]) -> Result<Pair> {
    if ps.is_empty() {
        return Err(Error::SizeMismatch("empty product".into()));
    }
    let r = Radix(ps.iter().map(Pair::len).collect());
    let n = r.total()?;
    let rt = Radix(ps.iter().map(|p| p.t().len()).collect());
    let t = ps[1..].iter().try_fold(ps[0].t().clone(), |acc, p| acc.product(p.t()))?;
    build_componentwise(ps, &r, n, t, |t| rt.split(t))
}

/// `⊕ Pᵢ` over a common `T` acting diagonally. For finitely many summands
/// the carrier and `A₀` agree with the product.
pub fn direct_sum_pair(ps: &[Pair]) -> Result<Pair> {
    let Some(first) = ps.first() else {
        return Err(Error::SizeMismatch("empty direct sum".into()));
    };
    if let Some(p) = ps.iter().find(|p| p.t() != first.t()) {
        return Err(Error::MismatchedMonoid(format!("{:?} vs {:?}", first.t().names(), p.t().names())));
    }
    let r = Radix(ps.iter().map(Pair::len).collect());
    let n = r.total()?;
    let k = ps.len();
    build_componentwise(ps, &r, n, first.t().clone(), move |t| vec![t; k])
}

fn build_componentwise(
    ps: &[Pair],
    r: &Radix,
    n: usize,
    t: FinMonoid,
    tparts: impl Fn(usize) -> Vec<usize>,
) -> Result<Pair> {
    let names = (0..n)
        .map(|i| tuple_name(r.split(i).iter().zip(ps).map(|(&c, p)| p.name(c).to_string())))
        .collect();
    let zip = |a: usize, b: usize, f: &dyn Fn(&Pair, usize, usize) -> usize| {
        let (x, y) = (r.split(a), r.split(b));
        r.join(&ps.iter().enumerate().map(|(i, p)| f(p, x[i], y[i])).collect::<Vec<_>>())
    };
    let act = |ti: usize, b: usize, left: bool| {
        let (tp, x) = (tparts(ti), r.split(b));
        r.join(
            &ps.iter()
                .enumerate()
                .map(|(i, p)| if left { p.lact(tp[i], x[i]) } else { p.ract(x[i], tp[i]) })
                .collect::<Vec<_>>(),
        )
    };
    let a0: ElemSet = (0..n).filter(|&i| r.split(i).iter().zip(ps).all(|(&c, p)| p.is_null(c))).collect();
    let iota = r.join(&ps.iter().map(Pair::iota).collect::<Vec<_>>());
    let k = t.len();
    let mut pair = Pair::new(
        names,
        |a, b| zip(a, b, &|p, x, y| p.op(x, y)),
        t,
        |ti, b| act(ti, b, true),
        |b, ti| act(ti, b, false),
        a0,
        iota,
    )?;
    if ps.iter().all(Pair::has_mul) {
        pair = pair.with_mul(|a, b| zip(a, b, &|p, x, y| p.mul(x, y).expect("checked")))?;
    }
    let embeds: Option<Vec<usize>> = (0..k)
        .map(|ti| {
            let tp = tparts(ti);
            let parts: Option<Vec<usize>> = ps.iter().enumerate().map(|(i, p)| p.embed(tp[i])).collect();
            parts.map(|v| r.join(&v))
        })
        .collect();
    match embeds {
        Some(e) => pair.with_embedding(e),
        None => Ok(pair),
    }
}

/// A semiring as a pair: `*` is addition, `T` its invertible elements
/// acting by multiplication, and `A₀` the given null set.
pub fn semiring_pair(s: &FinSemiring, a0: ElemSet) -> Result<Pair> {
    let n = s.len();
    let units: Vec<usize> =
        (0..n).filter(|&a| a != s.zero() && (0..n).any(|b| s.mul(a, b) == s.one() && s.mul(b, a) == s.one())).collect();
    let pos = |x: usize| units.iter().position(|&u| u == x).expect("units are closed");
    let t = FinMonoid::from_fn(units.iter().map(|&u| s.names()[u].clone()).collect(), pos(s.one()), |a, b| {
        pos(s.mul(units[a], units[b]))
    })?;
    Pair::new(
        s.names().to_vec(),
        |a, b| s.add(a, b),
        t,
        |ti, b| s.mul(units[ti], b),
        |b, ti| s.mul(b, units[ti]),
        a0,
        s.zero(),
    )?
    .with_mul(|a, b| s.mul(a, b))?
    .with_embedding(units.clone())
}

/// The Boolean semifield `{0, 1}` with `A₀ = {0}`.
pub fn boolean_pair() -> Result<Pair> {
    semiring_pair(&FinSemiring::boolean(), ElemSet::singleton(0))
}

/// A pair built from a base pair whose carrier is tuples of base elements,
/// with a list of distinguished carrier elements.
#[derive(Clone, Debug)]
pub struct TuplePair {
    pub pair: Pair,
    /// Base elements per coordinate for every carrier element.
    pub coords: Vec<Vec<usize>>,
    /// Monomials `tλⁱ` (polynomials) or scaled matrix units with `0, 1` (matrices).
    pub distinguished: Vec<usize>,
}

impl TuplePair {
    pub fn index_of_coords(&self, c: &[usize]) -> Option<usize> {
        self.coords.iter().position(|x| x == c)
    }
}

fn sum_over(p: &Pair, terms: impl Iterator<Item = usize>) -> usize {
    terms.fold(p.iota(), |acc, x| p.op(acc, x))
}

/// Tuples of length `len` over `p` with componentwise `*`, actions, and `A₀`,
/// and the given product on coordinate vectors.
fn tuple_pair(
    p: &Pair,
    len: usize,
    name: impl Fn(&[usize]) -> String,
    prod: impl Fn(&[usize], &[usize]) -> Vec<usize>,
    embed_coords: impl Fn(usize) -> Vec<usize>,
) -> Result<(Pair, Vec<Vec<usize>>, Radix)> {
    let r = Radix(vec![p.len(); len]);
    let n = r.total()?;
    let coords: Vec<Vec<usize>> = (0..n).map(|i| r.split(i)).collect();
    let names = coords.iter().map(|c| name(c)).collect();
    let zipped = |a: usize, b: usize| r.join(&coords[a].iter().zip(&coords[b]).map(|(&x, &y)| p.op(x, y)).collect::<Vec<_>>());
    let a0: ElemSet = (0..n).filter(|&i| coords[i].iter().all(|&c| p.is_null(c))).collect();
    let pair = Pair::new(
        names,
        zipped,
        p.t().clone(),
        |t, b| r.join(&coords[b].iter().map(|&c| p.lact(t, c)).collect::<Vec<_>>()),
        |b, t| r.join(&coords[b].iter().map(|&c| p.ract(c, t)).collect::<Vec<_>>()),
        a0,
        r.join(&vec![p.iota(); len]),
    )?
    .with_mul(|a, b| r.join(&prod(&coords[a], &coords[b])))?;
    let pair = if (0..p.t().len()).all(|t| p.embed(t).is_some()) {
        pair.with_embedding((0..p.t().len()).map(|t| r.join(&embed_coords(t))).collect())?
    } else {
        pair
    };
    Ok((pair, coords, r))
}

/// Polynomials of degree at most `d` over a pair with multiplication; the
/// convolution product drops terms past `λᵈ`. `T` acts on coefficients.
pub fn polynomial_pair(p: &Pair, d: usize) -> Result<TuplePair> {
    if !p.has_mul() {
        return Err(Error::InvalidTable("polynomial pair needs a multiplication".into()));
    }
    let m = |a: usize, b: usize| p.mul(a, b).expect("checked");
    let iota = p.iota();
    let name = |c: &[usize]| {
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x != iota || c.len() == 1)
            .map(|(i, &x)| match i {
                0 => p.name(x).to_string(),
                1 => format!("{}λ", p.name(x)),
                _ => format!("{}λ^{i}", p.name(x)),
            })
            .collect();
        if terms.is_empty() {
            p.name(iota).to_string()
        } else {
            terms.join("+")
        }
    };
    let prod = |a: &[usize], b: &[usize]| {
        (0..=d).map(|k| sum_over(p, (0..=k).map(|i| m(a[i], b[k - i])))).collect::<Vec<_>>()
    };
    let embed_coords = |t: usize| {
        let mut v = vec![iota; d + 1];
        v[0] = p.embed(t).expect("checked");
        v
    };
    let (pair, coords, r) = tuple_pair(p, d + 1, name, prod, embed_coords)?;
    let mut distinguished = Vec::new();
    for i in 0..=d {
        for t in 0..p.t().len() {
            if let Some(e) = p.embed(t) {
                let mut v = vec![iota; d + 1];
                v[i] = e;
                distinguished.push(r.join(&v));
            }
        }
    }
    Ok(TuplePair { pair, coords, distinguished })
}

/// `n × n` matrices over a pair with multiplication, entries row-major.
/// `T` acts entrywise and embeds as scalar matrices.
pub fn matrix_pair(p: &Pair, n: usize) -> Result<TuplePair> {
    if !p.has_mul() {
        return Err(Error::InvalidTable("matrix pair needs a multiplication".into()));
    }
    if n == 0 {
        return Err(Error::SizeMismatch("matrix size must be positive".into()));
    }
    let m = |a: usize, b: usize| p.mul(a, b).expect("checked");
    let iota = p.iota();
    let name = |c: &[usize]| {
        let rows: Vec<String> = c.chunks(n).map(|row| tuple_name(row.iter().map(|&x| p.name(x).to_string()))).collect();
        format!("[{}]", rows.join(","))
    };
    let prod = |a: &[usize], b: &[usize]| {
        (0..n * n).map(|ij| sum_over(p, (0..n).map(|k| m(a[ij / n * n + k], b[k * n + ij % n])))).collect::<Vec<_>>()
    };
    let scalar = |e: usize| (0..n * n).map(|ij| if ij / n == ij % n { e } else { iota }).collect::<Vec<_>>();
    let embed_coords = |t: usize| scalar(p.embed(t).expect("checked"));
    let (pair, coords, r) = tuple_pair(p, n * n, name, prod, embed_coords)?;
    let mut distinguished = vec![r.join(&vec![iota; n * n])];
    if let Some(one) = p.embed(p.t().neutral()) {
        distinguished.push(r.join(&scalar(one)));
    }
    for ij in 0..n * n {
        for t in 0..p.t().len() {
            if let Some(e) = p.embed(t) {
                let mut v = vec![iota; n * n];
                v[ij] = e;
                distinguished.push(r.join(&v));
            }
        }
    }
    distinguished.sort_unstable();
    distinguished.dedup();
    Ok(TuplePair { pair, coords, distinguished })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperstruct::HyperTable;
    use crate::pairs::{check_pair_axioms, powerset_pair};

    fn same_tables(a: &Pair, b: &Pair) -> bool {
        let n = a.len();
        n == b.len()
            && a.a0() == b.a0()
            && a.iota() == b.iota()
            && (0..n * n).all(|k| a.op(k / n, k % n) == b.op(k / n, k % n) && a.mul(k / n, k % n) == b.mul(k / n, k % n))
    }

    #[test]
    fn krasner_square() {
        let k = powerset_pair(&HyperTable::krasner()).unwrap();
        let p = product_pair(&[k.clone(), k.clone()]).unwrap();
        assert_eq!(p.len(), 9);
        // {0} and {0,1} are the null subsets
        assert_eq!(p.a0().len(), 4);
        assert!(p.a0().iter().all(|i| p.name(i).contains('0')));
        assert!(check_pair_axioms(&p).passed());
    }

    #[test]
    fn unit_law() {
        let k = powerset_pair(&HyperTable::signs()).unwrap();
        let one = Pair::new(vec!["ι".into()], |_, _| 0, FinMonoid::trivial(), |_, b| b, |b, _| b, ElemSet::singleton(0), 0)
            .unwrap()
            .with_mul(|_, _| 0)
            .unwrap()
            .with_embedding(vec![0])
            .unwrap();
        let p = product_pair(&[k.clone(), one]).unwrap();
        assert!(same_tables(&p, &k));
    }

    #[test]
    fn diagonal_action() {
        let s = powerset_pair(&HyperTable::signs()).unwrap();
        let sum = direct_sum_pair(&[s.clone(), s.clone()]).unwrap();
        let n = s.len();
        for t in 0..s.t().len() {
            for b in 0..sum.len() {
                let (b1, b2) = (b / n, b % n);
                assert_eq!(sum.lact(t, b), s.lact(t, b1) * n + s.lact(t, b2));
            }
        }
        assert!(check_pair_axioms(&sum).passed());
        let k = powerset_pair(&HyperTable::krasner()).unwrap();
        assert!(matches!(direct_sum_pair(&[s, k]), Err(Error::MismatchedMonoid(_))));
    }

    #[test]
    fn boolean_polynomials() {
        let b = boolean_pair().unwrap();
        let poly = polynomial_pair(&b, 2).unwrap();
        let p = &poly.pair;
        assert_eq!(p.len(), 8);
        let x = poly.index_of_coords(&[1, 1, 0]).unwrap();
        let sq = p.mul(x, x).unwrap();
        assert_eq!(poly.coords[sq], vec![1, 1, 1]);
        assert_eq!(p.name(sq), "1+1λ+1λ^2");
        assert!(check_pair_axioms(p).passed());
        // λ · null stays null
        let lam = poly.index_of_coords(&[0, 1, 0]).unwrap();
        for z in p.a0() {
            assert!(p.is_null(p.mul(lam, z).unwrap()));
        }
        assert_eq!(poly.distinguished.len(), 3);
    }

    #[test]
    fn degree_zero_is_base() {
        let b = boolean_pair().unwrap();
        let poly = polynomial_pair(&b, 0).unwrap();
        assert!(same_tables(&poly.pair, &b));
        let mat = matrix_pair(&b, 1).unwrap();
        assert!(same_tables(&mat.pair, &b));
    }

    #[test]
    fn boolean_matrix_units() {
        let b = boolean_pair().unwrap();
        let mp = matrix_pair(&b, 2).unwrap();
        let p = &mp.pair;
        assert_eq!(p.len(), 16);
        let e12 = mp.index_of_coords(&[0, 1, 0, 0]).unwrap();
        let e21 = mp.index_of_coords(&[0, 0, 1, 0]).unwrap();
        let e11 = mp.index_of_coords(&[1, 0, 0, 0]).unwrap();
        assert_eq!(p.mul(e12, e21), Some(e11));
        assert!(check_pair_axioms(p).passed());
        // 0, I, and four matrix units
        assert_eq!(mp.distinguished.len(), 6);
        for &u in &mp.distinguished {
            for z in p.a0() {
                assert!(p.is_null(p.mul(u, z).unwrap()));
            }
        }
        assert!(matches!(matrix_pair(&b, 3), Err(Error::CarrierTooLarge(_))));
    }

    #[test]
    fn polynomial_needs_mul() {
        let h = HyperTable::new(vec!["0".into()], vec![vec![ElemSet::singleton(0)]], None, Some(0), None).unwrap();
        let p = powerset_pair(&h).unwrap();
        assert!(polynomial_pair(&p, 1).is_err());
    }
}
