use serde::{Deserialize, Serialize};

use super::FinRing;
use crate::elemset::MAX_CARRIER;
use crate::error::{Error, Result};

/// How a finite field was built: `GF(p^k) = GF(p)[w] / (modulus)`.
///
/// `modulus` lists coefficients from degree 0 upward and is monic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn order(&self) -> u64 {
        self.p.pow(self.k)
    }

    /// Coefficients (low to high) of the element with the given id.
    pub fn coeffs(&self, mut id: usize) -> Vec<u64> {
        let p = self.p as usize;
        (0..self.k)
            .map(|_| {
                let c = id % p;
                id /= p;
                c as u64
            })
            .collect()
    }

    pub fn id(&self, coeffs: &[u64]) -> usize {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p as usize + c as usize)
    }
}

/// `GF(p^k)` with the default bound `p^k ≤ 64`.
pub fn make_finite_field(p: u64, k: u32) -> Result<FinRing> {
    make_finite_field_bounded(p, k, MAX_CARRIER as u64)
}

/// `GF(p^k)` built over the lexicographically least monic irreducible.
///
/// Element ids are `Σ cᵢ pⁱ` for the coefficient vector `(c₀, .., c_{k-1})`,
/// so `0` and `1` get ids 0 and 1 and the ring's canonical order is the id
/// order. Names render the polynomial in `w`, e.g. `w+1` or `2w^2+1`.
pub fn make_finite_field_bounded(p: u64, k: u32, bound: u64) -> Result<FinRing> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidTable("field degree must be at least 1".into()));
    }
    let order = p.checked_pow(k).unwrap_or(u64::MAX);
    let bound = bound.min(MAX_CARRIER as u64);
    if order > bound {
        return Err(Error::BoundExceeded { order, bound });
    }
    let modulus = least_irreducible(p, k as usize);
    let spec = FieldSpec { p, k, modulus };
    let q = order as usize;
    let names = (0..q).map(|i| render(&spec.coeffs(i))).collect();
    let add = |a: usize, b: usize| {
        let (x, y) = (spec.coeffs(a), spec.coeffs(b));
        let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
        spec.id(&s)
    };
    let mul = |a: usize, b: usize| spec.id(&mulmod(&spec.coeffs(a), &spec.coeffs(b), &spec.modulus, p));
    let ring = FinRing::from_fn(names, 0, 1, add, mul)?;
    debug_assert!(ring.is_field());
    Ok(ring.with_spec(spec))
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Product of two reduced polynomials modulo a monic modulus of degree k.
fn mulmod(x: &[u64], y: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * k];
    for (i, &a) in x.iter().enumerate() {
        for (j, &b) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + a * b) % p;
        }
    }
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &m) in modulus[..k].iter().enumerate() {
            let t = &mut prod[d - k + i];
            *t = (*t + (p - c) * m % p) % p;
        }
    }
    prod.truncate(k);
    prod
}

/// Remainder of `g` modulo monic `f` over GF(p); coefficient vectors low to high.
fn poly_rem(g: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = g.to_vec();
    let df = f.len() - 1;
    while r.len() > df {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        if c != 0 {
            for (i, &fi) in f.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * fi % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn monic_of_degree(p: u64, d: usize, lower: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(d + 1);
    let mut l = lower;
    for _ in 0..d {
        v.push(l % p);
        l /= p;
    }
    v.push(1);
    v
}

fn least_irreducible(p: u64, k: usize) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1];
    }
    (0..p.pow(k as u32))
        .map(|lower| monic_of_degree(p, k, lower))
        .find(|f| {
            (1..=k / 2).all(|d| {
                (0..p.pow(d as u32))
                    .all(|lower| poly_rem(f, &monic_of_degree(p, d, lower), p).iter().any(|&c| c != 0))
            })
        })
        .expect("irreducible polynomials exist in every degree")
}

fn render(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let mono = match i {
                0 => String::new(),
                1 => "w".into(),
                _ => format!("w^{i}"),
            };
            match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}
