use serde::{Deserialize, Serialize};

use crate::carrier::FinMonoid;
use crate::elemset::{show, ElemSet, MAX_CARRIER};
use crate::error::{Error, Result};
use crate::util::flatten_table;
use crate::hyperstruct::{AxiomReport, HyperTable, Verdict};
use crate::quotient::MHyperRing;

/// A finite `T`-pair: a magma `(A, *, ι)` with two-sided `T`-actions and a
/// null subset `A₀ ∋ ι` absorbing the action.
#[derive(Clone, Debug)]
pub struct Pair {
    names: Vec<String>,
    op: Vec<usize>,
    mul: Option<Vec<usize>>,
    t: FinMonoid,
    embed: Option<Vec<usize>>,
    lact: Vec<usize>,
    ract: Vec<usize>,
    a0: ElemSet,
    iota: usize,
    subsets: Option<Vec<ElemSet>>,
}

impl Pair {
    /// `op` is the table of `*`; `lact(t, b)` and `ract(b, t)` the actions.
    pub fn new(
        names: Vec<String>,
        op: impl Fn(usize, usize) -> usize,
        t: FinMonoid,
        lact: impl Fn(usize, usize) -> usize,
        ract: impl Fn(usize, usize) -> usize,
        a0: ElemSet,
        iota: usize,
    ) -> Result<Self> {
        let n = names.len();
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        let k = t.len();
        let op: Vec<usize> = (0..n * n).map(|i| op(i / n, i % n)).collect();
        let lact: Vec<usize> = (0..k * n).map(|i| lact(i / n, i % n)).collect();
        let ract: Vec<usize> = (0..n * k).map(|i| ract(i / k, i % k)).collect();
        if op.iter().chain(&lact).chain(&ract).any(|&v| v >= n) || iota >= n || a0.iter().any(|v| v >= n) {
            return Err(Error::InvalidTable("pair table entry out of range".into()));
        }
        Ok(Pair { names, op, mul: None, t, embed: None, lact, ract, a0, iota, subsets: None })
    }

    /// Attach a multiplication on `A`.
    pub fn with_mul(mut self, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = self.len();
        let m: Vec<usize> = (0..n * n).map(|i| mul(i / n, i % n)).collect();
        if m.iter().any(|&v| v >= n) {
            return Err(Error::InvalidTable("multiplication out of range".into()));
        }
        self.mul = Some(m);
        Ok(self)
    }

    /// Declare `T ⊆ A` through `embed[t]`.
    pub fn with_embedding(mut self, embed: Vec<usize>) -> Result<Self> {
        if embed.len() != self.t.len() || embed.iter().any(|&v| v >= self.len()) {
            return Err(Error::SizeMismatch("embedding must map every element of T into A".into()));
        }
        self.embed = Some(embed);
        Ok(self)
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
        self.names.iter().position(|x| x == name)
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.len() + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> Option<usize> {
        self.mul.as_ref().map(|m| m[a * self.len() + b])
    }

    pub fn has_mul(&self) -> bool {
        self.mul.is_some()
    }

    pub fn t(&self) -> &FinMonoid {
        &self.t
    }

    /// The image of `t ∈ T` in `A`, when the pair is weakly admissible.
    pub fn embed(&self, t: usize) -> Option<usize> {
        self.embed.as_ref().map(|e| e[t])
    }

    pub fn is_weakly_admissible(&self) -> bool {
        self.embed.is_some()
    }

    pub fn lact(&self, t: usize, b: usize) -> usize {
        self.lact[t * self.len() + b]
    }

    pub fn ract(&self, b: usize, t: usize) -> usize {
        self.ract[b * self.t.len() + t]
    }

    pub fn a0(&self) -> ElemSet {
        self.a0
    }

    pub fn iota(&self) -> usize {
        self.iota
    }

    pub fn is_null(&self, b: usize) -> bool {
        self.a0.contains(b)
    }

    /// For power-set pairs, the subset that element `i` stands for.
    pub fn subset(&self, i: usize) -> Option<ElemSet> {
        self.subsets.as_ref().map(|s| s[i])
    }

    pub fn is_powerset(&self) -> bool {
        self.subsets.is_some()
    }

    pub fn to_json(&self) -> PairJson {
        let n = self.len();
        PairJson {
            schema: crate::util::schema_tag(),
            carrier: self.names.clone(),
            t: self.t.names().to_vec(),
            t_op: (0..self.t.len()).map(|a| (0..self.t.len()).map(|b| self.t.op(a, b)).collect()).collect(),
            t_neutral: self.t.neutral(),
            t_indices: self.embed.clone(),
            a0: self.a0.to_vec(),
            iota: self.iota,
            op: self.op.chunks(n).map(|c| c.to_vec()).collect(),
            mul: self.mul.as_ref().map(|m| m.chunks(n).map(|c| c.to_vec()).collect()),
            left_action: self.lact.chunks(n).map(|c| c.to_vec()).collect(),
            right_action: self.ract.chunks(self.t.len()).map(|c| c.to_vec()).collect(),
        }
    }

    pub fn from_json(doc: PairJson) -> Result<Self> {
        let n = doc.carrier.len();
        let k = doc.t.len();
        let t = FinMonoid::new(doc.t, doc.t_op, doc.t_neutral)?;
        let op = flatten_table(&doc.op, n, "op")?;
        let shape = |rows: &[Vec<usize>], r: usize, c: usize, what: &str| {
            if rows.len() != r || rows.iter().any(|x| x.len() != c) {
                return Err(Error::InvalidTable(format!("{what} table must be {r}x{c}")));
            }
            Ok(rows.concat())
        };
        let lact = shape(&doc.left_action, k, n, "left action")?;
        let ract = shape(&doc.right_action, n, k, "right action")?;
        if doc.a0.iter().any(|&i| i >= n.min(MAX_CARRIER)) {
            return Err(Error::InvalidTable("null set index out of range".into()));
        }
        let a0: ElemSet = doc.a0.iter().copied().collect();
        let mut p = Pair::new(doc.carrier, |a, b| op[a * n + b], t, |t, b| lact[t * n + b], |b, t| ract[b * k + t], a0, doc.iota)?;
        if let Some(m) = doc.mul {
            let m = flatten_table(&m, n, "mul")?;
            p = p.with_mul(|a, b| m[a * n + b])?;
        }
        match doc.t_indices {
            Some(e) => p.with_embedding(e),
            None => Ok(p),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairJson {
    #[serde(default = "crate::util::schema_tag")]
    pub schema: String,
    pub carrier: Vec<String>,
    pub t: Vec<String>,
    pub t_op: Vec<Vec<usize>>,
    pub t_neutral: usize,
    pub t_indices: Option<Vec<usize>>,
    pub a0: Vec<usize>,
    pub iota: usize,
    pub op: Vec<Vec<usize>>,
    pub mul: Option<Vec<Vec<usize>>>,
    pub left_action: Vec<Vec<usize>>,
    pub right_action: Vec<Vec<usize>>,
}

fn subset_index(s: ElemSet) -> usize {
    s.bits() as usize - 1
}

/// Nonempty subsets of an `n`-element carrier, listed by bitmask so that
/// subset `S` has index `bits(S) − 1`.
fn subsets_of(n: usize) -> Result<Vec<ElemSet>> {
    if n > 6 {
        return Err(Error::CarrierTooLarge(n));
    }
    Ok((1..1u64 << n).map(ElemSet::from_bits).collect())
}

/// `(𝒫*(H), {S : 0 ∈ S})` with `*` the setwise hypersum, `ι = {0}`, and
/// `T` the invertible elements of `H` acting by setwise multiplication
/// (the trivial monoid when `H` has no multiplication).
pub fn powerset_pair(h: &HyperTable) -> Result<Pair> {
    let zero = h.zero().ok_or(Error::MissingZero)?;
    let subs = subsets_of(h.len())?;
    let names: Vec<String> = subs.iter().map(|&s| show(s, h.names())).collect();
    let a0: ElemSet = (0..subs.len()).filter(|&i| subs[i].contains(zero)).collect();
    let hsum = |a: usize, b: usize| subset_index(h.hsum_sets(subs[a], subs[b]).expect("nonempty subsets"));
    let iota = subset_index(ElemSet::singleton(zero));
    let mut pair = match (h.has_mul(), h.one()) {
        (true, Some(one)) => {
            let m = |a: usize, b: usize| h.mul(a, b).expect("has mul");
            let units: Vec<usize> =
                h.all().iter().filter(|&a| a != zero && h.all().iter().any(|b| m(a, b) == one && m(b, a) == one)).collect();
            let pos = |x: usize| units.iter().position(|&u| u == x).expect("units are closed");
            let names_t = units.iter().map(|&u| h.name(u).to_string()).collect();
            let t = FinMonoid::from_fn(names_t, pos(one), |a, b| pos(m(units[a], units[b])))?;
            let setmul = |a: ElemSet, b: ElemSet| h.mul_sets(a, b).expect("has mul");
            let embed = units.iter().map(|&u| subset_index(ElemSet::singleton(u))).collect();
            Pair::new(
                names,
                hsum,
                t,
                |t, b| subset_index(setmul(ElemSet::singleton(units[t]), subs[b])),
                |b, t| subset_index(setmul(subs[b], ElemSet::singleton(units[t]))),
                a0,
                iota,
            )?
            .with_mul(|a, b| subset_index(setmul(subs[a], subs[b])))?
            .with_embedding(embed)?
        }
        _ => Pair::new(names, hsum, FinMonoid::trivial(), |_, b| b, |b, _| b, a0, iota)?,
    };
    pair.subsets = Some(subs);
    Ok(pair)
}

/// The power-set pair of an m-hyperring: setwise coset addition, setwise
/// hypermultiplication, trivial `T`.
pub fn mhyper_powerset_pair(m: &MHyperRing) -> Result<Pair> {
    let subs = subsets_of(m.len())?;
    let names: Vec<String> = subs.iter().map(|&s| show(s, &m.names)).collect();
    let a0: ElemSet = (0..subs.len()).filter(|&i| subs[i].contains(m.zero())).collect();
    let mut pair = Pair::new(
        names,
        |a, b| subset_index(m.add_sets(subs[a], subs[b])),
        FinMonoid::trivial(),
        |_, b| b,
        |b, _| b,
        a0,
        subset_index(ElemSet::singleton(m.zero())),
    )?
    .with_mul(|a, b| subset_index(m.hmul_sets(subs[a], subs[b])))?;
    pair.subsets = Some(subs);
    Ok(pair)
}

fn infinity_pair_with(t: &FinMonoid, idempotent: bool) -> Result<Pair> {
    let k = t.len();
    let mut names = vec!["0".to_string(), "∞".to_string()];
    names.extend(t.names().iter().cloned());
    let (zero, inf) = (0, 1);
    let op = move |a: usize, b: usize| match (a, b) {
        (0, x) | (x, 0) => x,
        (x, y) if idempotent && x == y => x,
        _ => inf,
    };
    let lact = |s: usize, b: usize| if b < 2 { b } else { 2 + t.op(s, b - 2) };
    let ract = |b: usize, s: usize| if b < 2 { b } else { 2 + t.op(b - 2, s) };
    let pair = Pair::new(names, op, t.clone(), lact, ract, [zero, inf].into_iter().collect(), zero)?;
    pair.with_mul(|a, b| match (a, b) {
        (0, _) | (_, 0) => zero,
        (1, _) | (_, 1) => inf,
        (x, y) => 2 + t.op(x - 2, y - 2),
    })?
    .with_embedding((0..k).map(|s| s + 2).collect())
}

/// `A = T ∪ {0, ∞}` with `a + a′ = ∞` for all `a, a′ ∈ T`, `∞` absorbing
/// under both operations, and `A₀ = {0, ∞}`.
pub fn infinity_pair(t: &FinMonoid) -> Result<Pair> {
    infinity_pair_with(t, false)
}

/// The variant with `a + a = a`, keeping `a + a′ = ∞` for `a ≠ a′`.
pub fn infinity_pair_idempotent(t: &FinMonoid) -> Result<Pair> {
    infinity_pair_with(t, true)
}

/// A minimal supertropical pair: tangibles `1 < 2`, their ghosts, and `0`;
/// the larger summand wins and ties become ghosts. `A₀` is the ghosts and `0`.
pub fn supertropical_pair() -> Result<Pair> {
    let names: Vec<String> = ["0", "1", "2", "1ν", "2ν"].iter().map(|s| s.to_string()).collect();
    // (value, ghost)
    let parts = [(0, true), (1, false), (2, false), (1, true), (2, true)];
    let index = |v: u8, g: bool| parts.iter().position(|&p| p == (v, g)).expect("listed");
    let op = |a: usize, b: usize| {
        let ((va, ga), (vb, gb)) = (parts[a], parts[b]);
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        match va.cmp(&vb) {
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Equal => index(va, ga || gb || a == b),
        }
    };
    Pair::new(names, op, FinMonoid::trivial(), |_, b| b, |b, _| b, [0, 3, 4].into_iter().collect(), 0)?
        .with_embedding(vec![1])
}

fn search<I: Iterator<Item = Vec<usize>>>(
    name: &str,
    tuples: I,
    fails: impl Fn(&[usize]) -> Option<String>,
) -> Verdict {
    let mut checked = 0;
    for t in tuples {
        checked += 1;
        if let Some(d) = fails(&t) {
            return Verdict::fail(name, checked, t, d);
        }
    }
    Verdict::pass(name, checked)
}

fn pairs_of(a: usize, b: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..a).flat_map(move |i| (0..b).map(move |j| vec![i, j]))
}

fn triples_of(a: usize, b: usize, c: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..a).flat_map(move |i| (0..b).flat_map(move |j| (0..c).map(move |k| vec![i, j, k])))
}

/// The pair axioms: `ι ∈ A₀`, two-sided absorption of `A₀` under `T`,
/// `ι` neutral for `*`, the biset laws, distributivity of the action, and
/// weak admissibility when `T ⊆ A` is declared.
pub fn check_pair_axioms(p: &Pair) -> AxiomReport {
    let (n, k) = (p.len(), p.t.len());
    let t = &p.t;
    let nm = |i: usize| p.name(i).to_string();
    let tn = |i: usize| t.name(i).to_string();
    let mut r = AxiomReport::default();
    r.push(if p.is_null(p.iota) {
        Verdict::pass("iota_in_null", 1)
    } else {
        Verdict::fail("iota_in_null", 1, vec![p.iota], format!("{} ∉ A₀", nm(p.iota)))
    });
    let nulls: Vec<usize> = p.a0.to_vec();
    r.push(search("null_absorbs_action", pairs_of(k, nulls.len()), |v| {
        let (a, b) = (v[0], nulls[v[1]]);
        (!p.is_null(p.lact(a, b)) || !p.is_null(p.ract(b, a)))
            .then(|| format!("{}·{} or {}·{} leaves A₀", tn(a), nm(b), nm(b), tn(a)))
    }));
    r.push(search("iota_neutral", (0..n).map(|b| vec![b]), |v| {
        let b = v[0];
        (p.op(p.iota, b) != b || p.op(b, p.iota) != b).then(|| format!("ι * {0} or {0} * ι differs from {0}", nm(b)))
    }));
    r.push(search("biset_laws", triples_of(k, k, n), |v| {
        let (a1, a2, b) = (v[0], v[1], v[2]);
        let left = p.lact(t.op(a1, a2), b) == p.lact(a1, p.lact(a2, b));
        let right = p.ract(b, t.op(a1, a2)) == p.ract(p.ract(b, a1), a2);
        let mixed = p.ract(p.lact(a1, b), a2) == p.lact(a1, p.ract(b, a2));
        let unit = p.lact(t.neutral(), b) == b && p.ract(b, t.neutral()) == b;
        (!(left && right && mixed && unit)).then(|| format!("biset law fails at ({}, {}, {})", tn(a1), tn(a2), nm(b)))
    }));
    r.push(search("action_distributivity", triples_of(k, n, n), |v| {
        let (a, b1, b2) = (v[0], v[1], v[2]);
        let l = p.lact(a, p.op(b1, b2)) == p.op(p.lact(a, b1), p.lact(a, b2));
        let rr = p.ract(p.op(b1, b2), a) == p.op(p.ract(b1, a), p.ract(b2, a));
        (!(l && rr)).then(|| format!("{} does not distribute over {} * {}", tn(a), nm(b1), nm(b2)))
    }));
    if let Some(e) = &p.embed {
        r.push(search("weak_admissibility", (0..k).map(|a| vec![a]), |v| {
            let a = v[0];
            let injective = (0..k).all(|b| b == a || e[b] != e[a]);
            let absorbs = p.lact(a, p.iota) == p.iota && p.ract(p.iota, a) == p.iota;
            (!(injective && absorbs)).then(|| format!("{} does not embed as an element fixing ι", tn(a)))
        }));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let p = powerset_pair(&HyperTable::signs()).unwrap();
        let text = serde_json::to_string(&p.to_json()).unwrap();
        let q = Pair::from_json(serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(q.to_json().op, p.to_json().op);
        assert_eq!(q.t(), p.t());
        assert_eq!(q.a0(), p.a0());
    }

    #[test]
    fn krasner_powerset() {
        let p = powerset_pair(&HyperTable::krasner()).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.a0().len(), 2);
        assert!(p.is_null(p.iota()));
        assert!(check_pair_axioms(&p).passed(), "{}", check_pair_axioms(&p));
    }

    #[test]
    fn signs_powerset_sizes() {
        let p = powerset_pair(&HyperTable::signs()).unwrap();
        assert_eq!(p.len(), 7);
        assert_eq!(p.a0().len(), 4);
        assert_eq!(p.t().len(), 2);
        assert!(check_pair_axioms(&p).passed());
    }

    #[test]
    fn infinity_pairs() {
        let triv = infinity_pair(&FinMonoid::trivial()).unwrap();
        assert_eq!(triv.len(), 3);
        let z3 = infinity_pair(&FinMonoid::cyclic_units(3).unwrap()).unwrap();
        assert_eq!(z3.len(), 4);
        assert!(check_pair_axioms(&z3).passed(), "{}", check_pair_axioms(&z3));
        assert!(check_pair_axioms(&supertropical_pair().unwrap()).passed());
    }

    #[test]
    fn non_absorbing_null_set_fails() {
        // A = {ι, b, c} with T = Z/2 swapping b and c; A₀ = {ι, b} is not T-stable
        let t = FinMonoid::cyclic(2).unwrap();
        let names = vec!["ι".to_string(), "b".into(), "c".into()];
        let swap = |s: usize, x: usize| if s == 1 && x > 0 { 3 - x } else { x };
        let p = Pair::new(names, |a, b| if a == 0 { b } else { a }, t, swap, |x, s| swap(s, x), [0, 1].into_iter().collect(), 0)
            .unwrap();
        let r = check_pair_axioms(&p);
        let v = r.get("null_absorbs_action").unwrap();
        assert!(!v.passed);
        assert!(v.witness.is_some());
    }

    #[test]
    fn json_shape() {
        let j = serde_json::to_value(powerset_pair(&HyperTable::krasner()).unwrap().to_json()).unwrap();
        assert_eq!(j["carrier"].as_array().unwrap().len(), 3);
        assert_eq!(j["a0"], serde_json::json!([0, 2]));
    }
}
