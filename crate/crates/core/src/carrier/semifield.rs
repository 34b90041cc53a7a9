use std::fmt::Debug;

use super::{FinRing, FinSemiring};
use crate::error::{Error, Result};

/// A semifield, possibly infinite, exposed through a finite sample.
///
/// For finite semifields the sample is the whole carrier and every check
/// is exhaustive.
pub trait Semifield {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Sampled carrier, zero first.
    fn sample(&self) -> Vec<Self::Elem>;
    fn is_finite(&self) -> bool;
    fn show(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }
}

/// Max-plus semifield `Z ∪ {−∞}`: addition is `max`, multiplication is `+`.
///
/// `None` is `−∞`. The sample is `−∞, 0, 1, −1, 2, −2, ..` over `[−w, w]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaxPlus {
    pub window: i64,
}

impl Default for MaxPlus {
    fn default() -> Self {
        MaxPlus { window: 8 }
    }
}

impl Semifield for MaxPlus {
    type Elem = Option<i64>;

    fn zero(&self) -> Option<i64> {
        None
    }

    fn one(&self) -> Option<i64> {
        Some(0)
    }

    fn add(&self, a: &Option<i64>, b: &Option<i64>) -> Option<i64> {
        (*a).max(*b)
    }

    fn mul(&self, a: &Option<i64>, b: &Option<i64>) -> Option<i64> {
        Some(a.as_ref()? + b.as_ref()?)
    }

    fn inv(&self, a: &Option<i64>) -> Option<i64> {
        a.map(|x| -x)
    }

    fn sample(&self) -> Vec<Option<i64>> {
        let mut v = vec![None, Some(0)];
        for i in 1..=self.window {
            v.push(Some(i));
            v.push(Some(-i));
        }
        v
    }

    fn is_finite(&self) -> bool {
        false
    }

    fn show(&self, a: &Option<i64>) -> String {
        a.map_or("-inf".into(), |x| x.to_string())
    }
}

/// A finite semifield given by tables (a finite field, or the Boolean
/// semifield).
#[derive(Clone, Debug)]
pub struct TableSemifield {
    base: FinSemiring,
}

impl TableSemifield {
    pub fn new(base: FinSemiring) -> Result<Self> {
        let n = base.len();
        let nonzero = (0..n).filter(|&a| a != base.zero());
        for a in nonzero {
            if !(0..n).any(|b| base.mul(a, b) == base.one()) {
                return Err(Error::InvalidTable(format!(
                    "{} has no multiplicative inverse",
                    base.names()[a]
                )));
            }
        }
        if !base.is_distributive() {
            return Err(Error::InvalidTable("multiplication does not distribute".into()));
        }
        Ok(TableSemifield { base })
    }

    pub fn boolean() -> Self {
        TableSemifield { base: FinSemiring::boolean() }
    }

    pub fn from_field(f: &FinRing) -> Result<Self> {
        if !f.is_field() {
            return Err(Error::InvalidTable("ring is not a field".into()));
        }
        Self::new(f.as_semiring())
    }

    pub fn base(&self) -> &FinSemiring {
        &self.base
    }
}

impl Semifield for TableSemifield {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.base.zero()
    }

    fn one(&self) -> usize {
        self.base.one()
    }

    fn add(&self, a: &usize, b: &usize) -> usize {
        self.base.add(*a, *b)
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.base.mul(*a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        (0..self.base.len())
            .find(|&b| self.base.mul(*a, b) == self.base.one())
            .expect("nonzero elements are invertible")
    }

    fn sample(&self) -> Vec<usize> {
        (0..self.base.len()).collect()
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn show(&self, a: &usize) -> String {
        self.base.names()[*a].clone()
    }
}

/// A multiplicative subgroup given by a membership predicate, so that
/// infinite subgroups such as `2Z` can be described.
pub struct SubgroupPredicate<E> {
    pub name: String,
    contains: Box<dyn Fn(&E) -> bool + Send + Sync>,
}

impl<E> SubgroupPredicate<E> {
    pub fn new(name: impl Into<String>, contains: impl Fn(&E) -> bool + Send + Sync + 'static) -> Self {
        SubgroupPredicate { name: name.into(), contains: Box::new(contains) }
    }

    pub fn contains(&self, e: &E) -> bool {
        (self.contains)(e)
    }
}

impl<E: PartialEq + Send + Sync + 'static> SubgroupPredicate<E> {
    /// A finite subgroup listed explicitly.
    pub fn listed(name: impl Into<String>, members: Vec<E>) -> Self {
        Self::new(name, move |e| members.contains(e))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelWitness<E> {
    pub a1: E,
    pub a2: E,
    pub r1: E,
    pub r2: E,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelVerdict<E> {
    pub passed: bool,
    pub witness: Option<KernelWitness<E>>,
    /// Tuples `(a₁, a₂, r₁, r₂)` with `r₁ + r₂ = 1` that were checked.
    pub checked: usize,
    /// Whether the sample was the whole carrier.
    pub exhaustive: bool,
    pub budget: usize,
}

fn check_subgroup<S: Semifield>(s: &S, k: &SubgroupPredicate<S::Elem>) -> Result<Vec<S::Elem>> {
    let sample = s.sample();
    let zero = s.zero();
    if k.contains(&zero) {
        return Err(Error::NotSubgroup(format!("{} contains zero", k.name)));
    }
    if !k.contains(&s.one()) {
        return Err(Error::NotSubgroup(format!("{} misses one", k.name)));
    }
    let members: Vec<S::Elem> = sample.iter().filter(|e| k.contains(e)).cloned().collect();
    for a in &members {
        if !k.contains(&s.inv(a)) {
            return Err(Error::NotSubgroup(format!("{} lacks the inverse of {}", k.name, s.show(a))));
        }
        for b in &members {
            if !k.contains(&s.mul(a, b)) {
                return Err(Error::NotSubgroup(format!(
                    "{} is not closed at ({}, {})",
                    k.name,
                    s.show(a),
                    s.show(b)
                )));
            }
        }
    }
    Ok(members)
}

/// Convexity: `r₁a₁ + r₂a₂ ∈ K` whenever `a₁, a₂ ∈ K` and `r₁ + r₂ = 1`.
///
/// Tuples are enumerated in sample order with `a₁` outermost, so the
/// reported witness is the first violation in that order. At most `budget`
/// tuples are examined.
pub fn is_kernel<S: Semifield>(
    s: &S,
    k: &SubgroupPredicate<S::Elem>,
    budget: usize,
) -> Result<KernelVerdict<S::Elem>> {
    let members = check_subgroup(s, k)?;
    let sample = s.sample();
    let one = s.one();
    let splits: Vec<(&S::Elem, &S::Elem)> = sample
        .iter()
        .flat_map(|r1| sample.iter().map(move |r2| (r1, r2)))
        .filter(|(r1, r2)| s.add(r1, r2) == one)
        .collect();
    let mut checked = 0;
    let mut truncated = false;
    for a1 in &members {
        for a2 in &members {
            for (r1, r2) in &splits {
                if checked == budget {
                    truncated = true;
                    break;
                }
                checked += 1;
                let v = s.add(&s.mul(r1, a1), &s.mul(r2, a2));
                if !k.contains(&v) {
                    return Ok(KernelVerdict {
                        passed: false,
                        witness: Some(KernelWitness {
                            a1: a1.clone(),
                            a2: a2.clone(),
                            r1: (*r1).clone(),
                            r2: (*r2).clone(),
                        }),
                        checked,
                        exhaustive: s.is_finite() && !truncated,
                        budget,
                    });
                }
            }
        }
    }
    Ok(KernelVerdict { passed: true, witness: None, checked, exhaustive: s.is_finite() && !truncated, budget })
}

/// The semiring variant: `r₁a₁ + r₂a₂ ∈ K(a₁ + a₂)` for `a₁, a₂ ∈ K` and
/// arbitrary sampled `r₁, r₂`. Only a sampled check; no claim beyond it.
pub fn is_semiring_kernel<S: Semifield>(
    s: &S,
    k: &SubgroupPredicate<S::Elem>,
    budget: usize,
) -> Result<KernelVerdict<S::Elem>> {
    let members = check_subgroup(s, k)?;
    let sample = s.sample();
    let mut checked = 0;
    for a1 in &members {
        for a2 in &members {
            let sum = s.add(a1, a2);
            for r1 in &sample {
                for r2 in &sample {
                    if checked == budget {
                        return Ok(KernelVerdict { passed: true, witness: None, checked, exhaustive: false, budget });
                    }
                    checked += 1;
                    let v = s.add(&s.mul(r1, a1), &s.mul(r2, a2));
                    let ok = if sum == s.zero() {
                        v == s.zero()
                    } else {
                        // v ∈ K·sum  iff  v·sum⁻¹ ∈ K
                        v != s.zero() && k.contains(&s.mul(&v, &s.inv(&sum)))
                    };
                    if !ok {
                        let witness = KernelWitness { a1: a1.clone(), a2: a2.clone(), r1: r1.clone(), r2: r2.clone() };
                        return Ok(KernelVerdict { passed: false, witness: Some(witness), checked, exhaustive: false, budget });
                    }
                }
            }
        }
    }
    Ok(KernelVerdict { passed: true, witness: None, checked, exhaustive: s.is_finite(), budget })
}

/// An equivalence on the sampled carrier, stored as a partition.
#[derive(Clone, Debug, PartialEq)]
pub struct Congruence<E> {
    pub classes: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq + Debug> Congruence<E> {
    pub fn equality(sample: &[E]) -> Self {
        Congruence { classes: sample.iter().map(|e| vec![e.clone()]).collect() }
    }

    pub fn class_of(&self, e: &E) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(e))
    }

    /// Compatibility with both operations on every sampled pair whose
    /// results stay inside the sample.
    pub fn check<S: Semifield<Elem = E>>(&self, s: &S) -> Result<()> {
        let sample = s.sample();
        for e in &sample {
            if self.classes.iter().filter(|c| c.contains(e)).count() != 1 {
                return Err(Error::NotCongruence(format!("{} is not in exactly one class", s.show(e))));
            }
        }
        for class in &self.classes {
            for x in class {
                for y in class {
                    for c in &sample {
                        for (u, v) in [(s.add(x, c), s.add(y, c)), (s.mul(x, c), s.mul(y, c))] {
                            if let (Some(cu), Some(cv)) = (self.class_of(&u), self.class_of(&v)) {
                                if cu != cv {
                                    return Err(Error::NotCongruence(format!(
                                        "{} ~ {} but not after combining with {}",
                                        s.show(x),
                                        s.show(y),
                                        s.show(c)
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// `a₁ ≡ a₂` iff `Ka₁ = Ka₂`; zero forms its own class.
pub fn congruence_from_kernel<S: Semifield>(
    s: &S,
    k: &SubgroupPredicate<S::Elem>,
    budget: usize,
) -> Result<Congruence<S::Elem>> {
    let v = is_kernel(s, k, budget)?;
    if let Some(w) = v.witness {
        return Err(Error::NotKernel(format!(
            "{} fails at a1={}, a2={}, r1={}, r2={}",
            k.name,
            s.show(&w.a1),
            s.show(&w.a2),
            s.show(&w.r1),
            s.show(&w.r2)
        )));
    }
    let zero = s.zero();
    let mut classes: Vec<Vec<S::Elem>> = Vec::new();
    for e in s.sample() {
        let found = classes.iter_mut().find(|c| {
            let rep = &c[0];
            if *rep == zero || e == zero {
                *rep == e
            } else {
                k.contains(&s.mul(&e, &s.inv(rep)))
            }
        });
        match found {
            Some(c) => c.push(e),
            None => classes.push(vec![e]),
        }
    }
    Ok(Congruence { classes })
}

/// The class of one, as a list of sampled elements.
pub fn kernel_from_congruence<S: Semifield>(s: &S, c: &Congruence<S::Elem>) -> Result<Vec<S::Elem>> {
    c.check(s)?;
    let one = s.one();
    let i = c.class_of(&one).ok_or_else(|| Error::NotCongruence("one is not sampled".into()))?;
    Ok(c.classes[i].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even() -> SubgroupPredicate<Option<i64>> {
        SubgroupPredicate::new("2Z", |e: &Option<i64>| matches!(e, Some(x) if x % 2 == 0))
    }

    #[test]
    fn max_plus_even_kernel_witness() {
        let s = MaxPlus::default();
        let v = is_kernel(&s, &even(), 1_000_000).unwrap();
        assert!(!v.passed);
        let w = v.witness.unwrap();
        assert_eq!((w.a1, w.a2, w.r1, w.r2), (Some(0), Some(2), Some(0), Some(-1)));
        assert!(!v.exhaustive);
    }

    #[test]
    fn max_plus_trivial_and_full_kernels_pass() {
        let s = MaxPlus::default();
        let full = SubgroupPredicate::new("Z", |e: &Option<i64>| e.is_some());
        let triv = SubgroupPredicate::new("{0}", |e: &Option<i64>| *e == Some(0));
        assert!(is_kernel(&s, &full, usize::MAX).unwrap().passed);
        assert!(is_kernel(&s, &triv, usize::MAX).unwrap().passed);
        let c = congruence_from_kernel(&s, &full, usize::MAX).unwrap();
        assert_eq!(c.classes.len(), 2);
        assert_eq!(c.classes[0], vec![None]);
    }

    #[test]
    fn non_subgroup_is_an_error() {
        let s = MaxPlus::default();
        let odd = SubgroupPredicate::new("odd", |e: &Option<i64>| matches!(e, Some(x) if x % 2 != 0));
        assert!(matches!(is_kernel(&s, &odd, 10), Err(Error::NotSubgroup(_))));
    }

    #[test]
    fn boolean_round_trip() {
        let b = TableSemifield::boolean();
        let k = SubgroupPredicate::listed("{1}", vec![1usize]);
        let c = congruence_from_kernel(&b, &k, usize::MAX).unwrap();
        assert_eq!(c, Congruence::equality(&b.sample()));
        assert_eq!(kernel_from_congruence(&b, &c).unwrap(), vec![1]);
    }

    #[test]
    fn field_full_unit_group_is_not_convex() {
        let f = crate::carrier::make_finite_field(5, 1).unwrap();
        let s = TableSemifield::from_field(&f).unwrap();
        let k = SubgroupPredicate::listed("units", vec![1usize, 2, 3, 4]);
        assert!(!is_kernel(&s, &k, usize::MAX).unwrap().passed);
    }

    #[test]
    fn incompatible_partition_is_rejected() {
        let s = MaxPlus { window: 2 };
        let c = Congruence {
            classes: vec![vec![None, Some(0)], vec![Some(1), Some(-1), Some(2), Some(-2)]],
        };
        assert!(matches!(kernel_from_congruence(&s, &c), Err(Error::NotCongruence(_))));
    }
}
