use serde::{Deserialize, Serialize};

use super::{flatten_table, unflatten_table, FieldSpec, FinMonoid, SCHEMA};
use crate::elemset::{ElemSet, MAX_CARRIER};
use crate::error::{Error, Result};

/// A finite ring with exhaustively verified axioms.
///
/// Elements are stored in canonical order: zero first, then one, then the
/// remaining elements in the order they were supplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinRing {
    names: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    commutative: bool,
    field: bool,
    spec: Option<FieldSpec>,
}

impl FinRing {
    /// Build from names and index tables, checking every ring axiom.
    pub fn new(
        names: Vec<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty carrier".into()));
        }
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        let add = flatten_table(&add, n, "add")?;
        let mul = flatten_table(&mul, n, "mul")?;
        if zero >= n || one >= n {
            return Err(Error::InvalidTable("zero/one out of range".into()));
        }
        // canonical order: zero, one, rest
        let mut order = vec![zero];
        if one != zero {
            order.push(one);
        }
        order.extend((0..n).filter(|&i| i != zero && i != one));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let remap = |t: &[usize]| -> Vec<usize> {
            let mut out = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    out[pos[a] * n + pos[b]] = pos[t[a * n + b]];
                }
            }
            out
        };
        let names: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
        let add = remap(&add);
        let mul = remap(&mul);
        let one = if n == 1 { 0 } else { 1 };
        validate_ring(&names, &add, &mul, one)?;
        let neg = (0..n)
            .map(|a| (0..n).find(|&b| add[a * n + b] == 0).expect("validated"))
            .collect();
        let commutative = (0..n).all(|a| (0..n).all(|b| mul[a * n + b] == mul[b * n + a]));
        let field = n > 1 && (1..n).all(|a| (1..n).any(|b| mul[a * n + b] == one));
        Ok(FinRing { names, add, mul, neg, commutative, field, spec: None })
    }

    pub fn from_fn(
        names: Vec<String>,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = names.len();
        let t = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
        };
        let (at, mt) = (t(&add), t(&mul));
        Self::new(names, at, mt, zero, one)
    }

    /// `Z/n`, named by residues.
    pub fn integers_mod(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTable("Z/0 is infinite".into()));
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::from_fn(names, 0, 1 % n, |a, b| (a + b) % n, |a, b| a * b % n)
    }

    /// 2x2 matrices over `base`, named `[a b; c d]`.
    pub fn matrices2(base: &FinRing) -> Result<Self> {
        let q = base.len();
        let size = q.pow(4);
        if size > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(size));
        }
        let decode = |i: usize| [i / (q * q * q), (i / (q * q)) % q, (i / q) % q, i % q];
        let encode = |m: [usize; 4]| ((m[0] * q + m[1]) * q + m[2]) * q + m[3];
        let names = (0..size)
            .map(|i| {
                let m = decode(i);
                format!(
                    "[{} {}; {} {}]",
                    base.name(m[0]),
                    base.name(m[1]),
                    base.name(m[2]),
                    base.name(m[3])
                )
            })
            .collect();
        let (o, z) = (base.one(), base.zero());
        let ident = encode([o, z, z, o]);
        let zero = encode([z, z, z, z]);
        Self::from_fn(
            names,
            zero,
            ident,
            |x, y| {
                let (a, b) = (decode(x), decode(y));
                encode([0, 1, 2, 3].map(|k| base.add(a[k], b[k])))
            },
            |x, y| {
                let (a, b) = (decode(x), decode(y));
                let dot = |i: usize, j: usize| {
                    base.add(base.mul(a[2 * i], b[j]), base.mul(a[2 * i + 1], b[2 + j]))
                };
                encode([dot(0, 0), dot(0, 1), dot(1, 0), dot(1, 1)])
            },
        )
    }

    pub(crate) fn with_spec(mut self, spec: FieldSpec) -> Self {
        self.spec = Some(spec);
        self
    }

    /// Characteristic and degree when built by `make_finite_field`.
    pub fn field_spec(&self) -> Option<&FieldSpec> {
        self.spec.as_ref()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        if self.len() == 1 {
            0
        } else {
            1
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_field(&self) -> bool {
        self.field
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        let one = self.one();
        (0..self.len()).find(|&b| self.mul(a, b) == one && self.mul(b, a) == one)
    }

    pub fn units(&self) -> ElemSet {
        (0..self.len()).filter(|&a| self.inverse(a).is_some()).collect()
    }

    /// The unit group as a `FinMonoid`, with the map from its indices back
    /// into this ring.
    pub fn unit_group(&self) -> (FinMonoid, Vec<usize>) {
        let units = self.units().to_vec();
        let names = units.iter().map(|&u| self.names[u].clone()).collect();
        let pos = |r: usize| units.iter().position(|&u| u == r).expect("units closed");
        let m = FinMonoid::from_fn(names, pos(self.one()), |a, b| pos(self.mul(units[a], units[b])))
            .expect("unit group of a ring is a monoid");
        (m, units)
    }

    /// The additive group as a `FinMonoid` on the same indices.
    pub fn additive_group(&self) -> FinMonoid {
        FinMonoid::from_fn(self.names.clone(), 0, |a, b| self.add(a, b))
            .expect("additive group of a ring is a monoid")
    }

    pub fn set_add(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in a {
            for y in b {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    pub fn set_mul(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in a {
            for y in b {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    pub fn is_additive_subgroup(&self, s: ElemSet) -> bool {
        s.contains(0) && s.iter().all(|a| s.contains(self.neg(a))) && self.set_add(s, s).is_subset(s)
    }

    /// Additive subgroup with `R·L ⊆ L`.
    pub fn is_left_ideal(&self, s: ElemSet) -> bool {
        self.is_additive_subgroup(s) && self.set_mul(self.all(), s).is_subset(s)
    }

    pub fn is_right_ideal(&self, s: ElemSet) -> bool {
        self.is_additive_subgroup(s) && self.set_mul(s, self.all()).is_subset(s)
    }

    /// `x ↦ x^(p^j)` for fields built by `make_finite_field`.
    pub fn frobenius(&self, j: u32) -> Option<Vec<usize>> {
        let spec = self.spec.as_ref()?;
        let e = spec.p.pow(j % spec.k.max(1));
        Some((0..self.len()).map(|x| self.pow(x, e)).collect())
    }

    pub fn as_semiring(&self) -> FinSemiring {
        FinSemiring {
            names: self.names.clone(),
            add: self.add.clone(),
            mul: self.mul.clone(),
            zero: 0,
            one: self.one(),
        }
    }

    pub fn to_json(&self) -> RingJson {
        let n = self.len();
        RingJson {
            schema: SCHEMA.into(),
            elements: self.names.clone(),
            add: unflatten_table(&self.add, n),
            mul: unflatten_table(&self.mul, n),
            zero: 0,
            one: self.one(),
        }
    }

    pub fn from_json(doc: RingJson) -> Result<Self> {
        Self::new(doc.elements, doc.add, doc.mul, doc.zero, doc.one)
    }
}

fn validate_ring(names: &[String], add: &[usize], mul: &[usize], one: usize) -> Result<()> {
    let n = names.len();
    let a = |x: usize, y: usize| add[x * n + y];
    let m = |x: usize, y: usize| mul[x * n + y];
    let fail = |what: &str, t: &[usize]| {
        let shown: Vec<&str> = t.iter().map(|&i| names[i].as_str()).collect();
        Err(Error::InvalidTable(format!("{what} fails at ({})", shown.join(", "))))
    };
    for x in 0..n {
        if a(0, x) != x || a(x, 0) != x {
            return fail("additive neutral", &[x]);
        }
        if m(one, x) != x || m(x, one) != x {
            return fail("multiplicative neutral", &[x]);
        }
        if !(0..n).any(|y| a(x, y) == 0) {
            return fail("additive inverse", &[x]);
        }
        for y in 0..n {
            if a(x, y) != a(y, x) {
                return fail("additive commutativity", &[x, y]);
            }
            for z in 0..n {
                if a(a(x, y), z) != a(x, a(y, z)) {
                    return fail("additive associativity", &[x, y, z]);
                }
                if m(m(x, y), z) != m(x, m(y, z)) {
                    return fail("multiplicative associativity", &[x, y, z]);
                }
                if m(x, a(y, z)) != a(m(x, y), m(x, z)) || m(a(y, z), x) != a(m(y, x), m(z, x)) {
                    return fail("distributivity", &[x, y, z]);
                }
            }
        }
    }
    Ok(())
}

/// A finite pre-semiring: `(A, +, 0)` and `(A, ·, 1)` are monoids.
///
/// Distributivity is not required; [`FinSemiring::is_distributive`] reports it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinSemiring {
    names: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

impl FinSemiring {
    pub fn from_fn(
        names: Vec<String>,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let additive = FinMonoid::from_fn(names.clone(), zero, &add)?;
        let multiplicative = FinMonoid::from_fn(names.clone(), one, &mul)?;
        let n = names.len();
        let flat = |m: &FinMonoid| (0..n * n).map(|i| m.op(i / n, i % n)).collect();
        Ok(FinSemiring { add: flat(&additive), mul: flat(&multiplicative), names, zero, one })
    }

    /// The Boolean semifield `{0, 1}` with `1 + 1 = 1`.
    pub fn boolean() -> Self {
        Self::from_fn(vec!["0".into(), "1".into()], 0, 1, |a, b| a | b, |a, b| a & b)
            .expect("boolean semifield")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.mul(x, self.add(y, z)) == self.add(self.mul(x, y), self.mul(x, z))
                        && self.mul(self.add(y, z), x) == self.add(self.mul(y, x), self.mul(z, x))
                })
            })
        })
    }

    pub fn is_additive_subgroup(&self, s: ElemSet) -> bool {
        s.contains(self.zero)
            && s.iter().all(|a| s.iter().any(|b| self.add(a, b) == self.zero))
            && s.iter().all(|a| s.iter().all(|b| s.contains(self.add(a, b))))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingJson {
    #[serde(default = "super::schema_tag")]
    pub schema: String,
    pub elements: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}
