//! Skew polynomials `GF(q)[x; σ]` with `σ` a power of Frobenius, right
//! division by monic polynomials, and the nonassociative remainder algebra.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::carrier::FinRing;
use crate::error::{Error, Result};
use crate::hyperstruct::Verdict;

/// Coefficients from degree 0 upward, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    coeffs: Vec<usize>,
    twist: u32,
}

impl SkewPoly {
    fn trimmed(mut coeffs: Vec<usize>, twist: u32) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        SkewPoly { coeffs, twist }
    }

    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<usize> {
        self.coeffs.last().copied()
    }

    fn coeff(&self, i: usize) -> usize {
        self.coeffs.get(i).copied().unwrap_or(0)
    }
}

/// `GF(q)[x; σ]` with `x·a = σ(a)·x` and `σ = Frobenius^twist`.
#[derive(Clone, Debug)]
pub struct SkewRing {
    field: FinRing,
    twist: u32,
    /// `powers[k][a] = σᵏ(a)` for `k` up to the field degree.
    powers: Vec<Vec<usize>>,
}

impl SkewRing {
    pub fn new(field: FinRing, twist: u32) -> Result<Self> {
        let spec = field.field_spec().ok_or_else(|| Error::InvalidTable("skew ring needs a constructed finite field".into()))?;
        let k = spec.k as usize;
        let sigma = field.frobenius(twist).expect("field has a spec");
        let mut powers = vec![(0..field.len()).collect::<Vec<_>>()];
        for i in 1..k {
            powers.push(powers[i - 1].iter().map(|&a| sigma[a]).collect());
        }
        Ok(SkewRing { field, twist, powers })
    }

    pub fn field(&self) -> &FinRing {
        &self.field
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    /// `σᵏ(a)`.
    pub fn sigma_pow(&self, k: usize, a: usize) -> usize {
        self.powers[k % self.powers.len()][a]
    }

    pub fn poly(&self, coeffs: Vec<usize>) -> Result<SkewPoly> {
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.field.len()) {
            return Err(Error::InvalidTable(format!("coefficient {c} outside GF({})", self.field.len())));
        }
        Ok(SkewPoly::trimmed(coeffs, self.twist))
    }

    pub fn zero(&self) -> SkewPoly {
        SkewPoly::trimmed(vec![], self.twist)
    }

    pub fn constant(&self, a: usize) -> SkewPoly {
        SkewPoly::trimmed(vec![a], self.twist)
    }

    /// `a·xᵏ`.
    pub fn monomial(&self, a: usize, k: usize) -> SkewPoly {
        let mut c = vec![0; k + 1];
        c[k] = a;
        SkewPoly::trimmed(c, self.twist)
    }

    pub fn x(&self) -> SkewPoly {
        self.monomial(self.field.one(), 1)
    }

    fn check(&self, p: &SkewPoly) -> Result<()> {
        if p.twist != self.twist {
            return Err(Error::MismatchedTwist(p.twist, self.twist));
        }
        Ok(())
    }

    fn zip(&self, p: &SkewPoly, q: &SkewPoly, f: impl Fn(usize, usize) -> usize) -> Result<SkewPoly> {
        self.check(p)?;
        self.check(q)?;
        let n = p.coeffs.len().max(q.coeffs.len());
        Ok(SkewPoly::trimmed((0..n).map(|i| f(p.coeff(i), q.coeff(i))).collect(), self.twist))
    }

    pub fn add(&self, p: &SkewPoly, q: &SkewPoly) -> Result<SkewPoly> {
        self.zip(p, q, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, p: &SkewPoly, q: &SkewPoly) -> Result<SkewPoly> {
        self.zip(p, q, |a, b| self.field.sub(a, b))
    }

    /// `(Σ aᵢxⁱ)(Σ bⱼxʲ) = Σ aᵢσⁱ(bⱼ)xⁱ⁺ʲ`.
    pub fn mul(&self, p: &SkewPoly, q: &SkewPoly) -> Result<SkewPoly> {
        self.check(p)?;
        self.check(q)?;
        if p.is_zero() || q.is_zero() {
            return Ok(self.zero());
        }
        let f = &self.field;
        let mut out = vec![0; p.coeffs.len() + q.coeffs.len() - 1];
        for (i, &a) in p.coeffs.iter().enumerate() {
            for (j, &b) in q.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, self.sigma_pow(i, b)));
            }
        }
        Ok(SkewPoly::trimmed(out, self.twist))
    }

    /// Right division `g = q·f + r` with `deg r < deg f`, eliminating the
    /// leading term of `g` by `c·xᵏ·f`.
    pub fn divmod(&self, g: &SkewPoly, f: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.check(g)?;
        self.check(f)?;
        let m = f.degree().ok_or(Error::NotMonic)?;
        if f.lead() != Some(self.field.one()) {
            return Err(Error::NotMonic);
        }
        let mut q = self.zero();
        let mut r = g.clone();
        while let Some(n) = r.degree().filter(|&n| n >= m) {
            let term = self.monomial(r.lead().expect("nonzero"), n - m);
            r = self.sub(&r, &self.mul(&term, f)?)?;
            q = self.add(&q, &term)?;
        }
        Ok((q, r))
    }

    /// Parses sums like `x^2+w` or `(w+1)x+1`; coefficients are field
    /// element names, parenthesized when they contain `+`.
    pub fn parse(&self, s: &str) -> Result<SkewPoly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let (mut depth, mut start) = (0i32, 0);
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' if depth == 0 => {
                    terms.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        terms.push(&s[start..]);
        let one = self.field.one();
        let coef = |c: &str| -> Result<usize> {
            let c = c.trim_end_matches('*');
            let c = c.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(c);
            if c.is_empty() {
                return Ok(one);
            }
            self.field.index_of(c).ok_or_else(|| Error::Parse(format!("unknown coefficient {c:?}")))
        };
        let mut out = self.zero();
        for t in terms {
            if t.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let split = t.rfind(')').map_or(0, |p| p + 1);
            let (c, k) = match t[split..].find('x') {
                Some(p) => {
                    let exp = &t[split + p + 1..];
                    let k = match exp.strip_prefix('^') {
                        Some(e) => e.parse().map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))?,
                        None if exp.is_empty() => 1,
                        None => return Err(Error::Parse(format!("bad term {t:?}"))),
                    };
                    (coef(&t[..split + p])?, k)
                }
                None => (coef(t)?, 0),
            };
            out = self.add(&out, &self.monomial(c, k))?;
        }
        Ok(out)
    }

    pub fn show(&self, p: &SkewPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let one = self.field.one();
        let terms: Vec<String> = p
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| {
                let name = self.field.name(c);
                let c = if name.contains('+') { format!("({name})") } else { name.to_string() };
                let mono = match k {
                    0 => return c,
                    1 => "x".to_string(),
                    _ => format!("x^{k}"),
                };
                if p.coeffs[k] == one {
                    mono
                } else {
                    format!("{c}{mono}")
                }
            })
            .collect();
        terms.join("+")
    }
}

pub fn skew_mul(ring: &SkewRing, p: &SkewPoly, q: &SkewPoly) -> Result<SkewPoly> {
    ring.mul(p, q)
}

pub fn skew_divmod(ring: &SkewRing, g: &SkewPoly, f: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
    ring.divmod(g, f)
}

/// Largest carrier for which the full multiplication table is built.
pub const PUMPLUEN_BOUND: usize = 256;

/// Polynomials of degree below `deg f` with `[r₁][r₂]` the remainder of
/// `r₁r₂` on right division by `f`. Element `i` has coefficients given by
/// the base-`q` digits of `i`, lowest degree first.
#[derive(Clone, Debug)]
pub struct PumpluenAlgebra {
    pub ring: SkewRing,
    pub modulus: SkewPoly,
    elems: Vec<SkewPoly>,
    table: Vec<usize>,
}

impl PumpluenAlgebra {
    pub fn new(ring: SkewRing, modulus: SkewPoly) -> Result<Self> {
        if modulus.lead() != Some(ring.field.one()) {
            return Err(Error::NotMonic);
        }
        let m = modulus.degree().expect("monic is nonzero");
        if m == 0 {
            return Err(Error::InvalidTable("modulus must have positive degree".into()));
        }
        let q = ring.field.len();
        let size = q.checked_pow(m as u32).filter(|&s| s <= PUMPLUEN_BOUND);
        let Some(size) = size else {
            return Err(Error::BoundExceeded { order: (q as u64).saturating_pow(m as u32), bound: PUMPLUEN_BOUND as u64 });
        };
        let elems: Vec<SkewPoly> = (0..size)
            .map(|mut i| {
                let c = (0..m)
                    .map(|_| {
                        let d = i % q;
                        i /= q;
                        d
                    })
                    .collect();
                SkewPoly::trimmed(c, ring.twist)
            })
            .collect();
        let mut alg = PumpluenAlgebra { ring, modulus, elems, table: Vec::new() };
        let table: Result<Vec<usize>> = (0..size * size)
            .into_par_iter()
            .map(|k| {
                let r = alg.mul_polys(&alg.elems[k / size], &alg.elems[k % size])?;
                Ok(alg.index_of(&r).expect("remainder lies in the carrier"))
            })
            .collect();
        alg.table = table?;
        Ok(alg)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elem(&self, i: usize) -> &SkewPoly {
        &self.elems[i]
    }

    pub fn name(&self, i: usize) -> String {
        self.ring.show(&self.elems[i])
    }

    pub fn index_of(&self, p: &SkewPoly) -> Option<usize> {
        let q = self.ring.field.len();
        let m = self.modulus.degree()?;
        (p.coeffs.len() <= m).then(|| p.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c))
    }

    pub fn parse(&self, s: &str) -> Result<usize> {
        let p = self.ring.parse(s)?;
        self.index_of(&p).ok_or_else(|| Error::Parse(format!("{s:?} is not below the modulus degree")))
    }

    /// Remainder of `r₁r₂` on right division by the modulus.
    pub fn mul_polys(&self, r1: &SkewPoly, r2: &SkewPoly) -> Result<SkewPoly> {
        let prod = self.ring.mul(r1, r2)?;
        Ok(self.ring.divmod(&prod, &self.modulus)?.1)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.len() + b]
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let s = self.ring.add(&self.elems[a], &self.elems[b]).expect("same twist");
        self.index_of(&s).expect("sum stays in the carrier")
    }

    /// Least triple in carrier order with `(ab)c ≠ a(bc)`.
    pub fn nonassociativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.len();
        (0..n).into_par_iter().find_map_first(|a| {
            (0..n * n).find_map(|k| {
                let (b, c) = (k / n, k % n);
                (self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))).then_some([a, b, c])
            })
        })
    }

    pub fn to_json(&self) -> PumpluenJson {
        let n = self.len();
        PumpluenJson {
            schema: crate::util::schema_tag(),
            field_order: self.ring.field.len(),
            twist: self.ring.twist,
            modulus: self.ring.show(&self.modulus),
            carrier: (0..n).map(|i| self.name(i)).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| self.mul(a, b)).collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PumpluenJson {
    pub schema: String,
    pub field_order: usize,
    pub twist: u32,
    pub modulus: String,
    pub carrier: Vec<String>,
    pub mul: Vec<Vec<usize>>,
}

pub fn pumpluen_mul(alg: &PumpluenAlgebra, r1: &SkewPoly, r2: &SkewPoly) -> Result<SkewPoly> {
    alg.mul_polys(r1, r2)
}

/// All polynomials of degree at most `bound`.
fn polys_up_to(ring: &SkewRing, bound: usize) -> impl Iterator<Item = SkewPoly> + '_ {
    let q = ring.field.len();
    let count = q.pow(bound as u32 + 1);
    (0..count).map(move |mut i| {
        let c = (0..=bound)
            .map(|_| {
                let d = i % q;
                i /= q;
                d
            })
            .collect();
        SkewPoly::trimmed(c, ring.twist)
    })
}

/// The cosets met by the m-hyperring product `(r₁ + L)(r₂ + L)`, each given
/// by its least-degree member, for `h` of degree at most `bound` in
/// `(r₁ + hf)r₂`. Returned as sorted carrier indices.
pub fn product_cosets(alg: &PumpluenAlgebra, r1: usize, r2: usize, bound: usize) -> Vec<usize> {
    let ring = &alg.ring;
    let f = &alg.modulus;
    let mut out: Vec<usize> = polys_up_to(ring, bound)
        .map(|h| {
            let hf = ring.mul(&h, f).expect("same twist");
            let left = ring.add(alg.elem(r1), &hf).expect("same twist");
            let g = ring.mul(&left, alg.elem(r2)).expect("same twist");
            let r = ring.divmod(&g, f).expect("monic modulus").1;
            alg.index_of(&r).expect("remainder lies in the carrier")
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The least-degree element of a set of carrier indices; ties go to the
/// smaller index.
fn min_degree(alg: &PumpluenAlgebra, set: &[usize]) -> usize {
    *set.iter()
        .min_by_key(|&&i| (alg.elem(i).degree().map_or(0, |d| d + 1), i))
        .expect("nonempty product set")
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossSample {
    pub r1: String,
    pub r2: String,
    pub pumpluen: String,
    pub min_degree: String,
    /// Number of cosets met by the product.
    pub cosets: usize,
    /// Whether one more `h`-degree leaves the least-degree element unchanged.
    pub stabilized: bool,
    /// Whether the Pumpluen product is among the cosets met.
    pub contained: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub samples: Vec<CrossSample>,
    /// The least-degree element of each product set equals `[r₁][r₂]`.
    pub verdict: Verdict,
    /// `[r₁][r₂]` lies among the cosets of each product set.
    pub containment: Verdict,
}

/// Compares `[r₁][r₂]` with the least-degree element of the m-hyperring
/// product `(r₁ + L)(r₂ + L)`, `L = Rf`, over `samples` seeded pairs.
/// The `h`-degree bound is `deg r₁ + 1`.
pub fn crosscheck_mhyperring(alg: &PumpluenAlgebra, samples: usize, seed: u64) -> CrosscheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = alg.len();
    let pairs: Vec<(usize, usize)> = (0..samples).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    crosscheck_pairs(alg, &pairs)
}

pub fn crosscheck_pairs(alg: &PumpluenAlgebra, pairs: &[(usize, usize)]) -> CrosscheckReport {
    let rows: Vec<(CrossSample, bool)> = pairs
        .par_iter()
        .map(|&(r1, r2)| {
            let bound = alg.elem(r1).degree().unwrap_or(0) + 1;
            let set = product_cosets(alg, r1, r2, bound);
            let wider = product_cosets(alg, r1, r2, bound + 1);
            let best = min_degree(alg, &set);
            let p = alg.mul(r1, r2);
            let s = CrossSample {
                r1: alg.name(r1),
                r2: alg.name(r2),
                pumpluen: alg.name(p),
                min_degree: alg.name(best),
                cosets: set.len(),
                stabilized: min_degree(alg, &wider) == best,
                contained: set.binary_search(&p).is_ok(),
            };
            (s, best == p)
        })
        .collect();
    let fail = |pred: &dyn Fn(&(CrossSample, bool)) -> bool, what: &str| {
        rows.iter().position(|r| !pred(r)).map(|i| {
            let (r1, r2) = pairs[i];
            let s = &rows[i].0;
            (vec![r1, r2], format!("[{}][{}] = {} but {what} {}", s.r1, s.r2, s.pumpluen, s.min_degree))
        })
    };
    let verdict = Verdict::from_search(
        "min_degree_matches_product",
        rows.len(),
        fail(&|r| r.1, "the least-degree element of the product set is"),
    );
    let containment =
        Verdict::from_search("product_in_coset_set", rows.len(), fail(&|r| r.0.contained, "the product set misses it; least is"));
    CrosscheckReport { samples: rows.into_iter().map(|r| r.0).collect(), verdict, containment }
}

impl fmt::Display for CrossSample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}][{}] = {}; least in product set: {} ({} cosets)", self.r1, self.r2, self.pumpluen, self.min_degree, self.cosets)
    }
}
