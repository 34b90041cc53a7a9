use num_rational::Rational64;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::hyperstruct::HyperTable;

/// An infinite ring with a multiplicative subgroup `G`, known through a
/// finite transversal of its classes and a sampler for `G`.
pub trait SampledRing {
    type Elem: Clone;

    /// Class names and representatives; class `i` contains `transversal()[i].1`.
    fn transversal(&self) -> Vec<(String, Self::Elem)>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Index of the class containing `e`, if it is one of the transversal's.
    fn class_of(&self, e: &Self::Elem) -> Option<usize>;
    fn sample_g(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RationalSubgroup {
    /// `Q_{>0}`: classes `0, 1, −1`.
    Positive,
    /// All of `Qˣ`: classes `0, 1`.
    Units,
}

/// `Q/G` for the subgroups above. `G` is sampled as `±p/q` with small `p`
/// and `q`, so that cancelling sums are hit often.
#[derive(Clone, Copy, Debug)]
pub struct RationalQuotient {
    pub subgroup: RationalSubgroup,
}

impl SampledRing for RationalQuotient {
    type Elem = Rational64;

    fn transversal(&self) -> Vec<(String, Rational64)> {
        let mut t = vec![("0".to_string(), Rational64::zero()), ("1".to_string(), Rational64::from_integer(1))];
        if self.subgroup == RationalSubgroup::Positive {
            t.push(("-1".to_string(), Rational64::from_integer(-1)));
        }
        t
    }

    fn add(&self, a: &Rational64, b: &Rational64) -> Rational64 {
        a + b
    }

    fn mul(&self, a: &Rational64, b: &Rational64) -> Rational64 {
        a * b
    }

    fn class_of(&self, e: &Rational64) -> Option<usize> {
        Some(match (e.is_zero(), e.is_positive(), self.subgroup) {
            (true, _, _) => 0,
            (false, _, RationalSubgroup::Units) | (false, true, _) => 1,
            (false, false, RationalSubgroup::Positive) => 2,
        })
    }

    fn sample_g(&self, rng: &mut ChaCha8Rng) -> Rational64 {
        let v = Rational64::new(rng.gen_range(1..=3), rng.gen_range(1..=3));
        match self.subgroup {
            RationalSubgroup::Units if rng.gen_bool(0.5) => -v,
            _ => v,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Witnessed,
    UnwitnessedExpected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampledEntry {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub status: Membership,
}

/// Hypersums witnessed by sampling. Every witnessed class really lies in
/// the hypersum; classes may be missing.
#[derive(Clone, Debug, Serialize)]
pub struct SampledQuotient {
    pub names: Vec<String>,
    /// Row-major witnessed hypersums.
    pub witnessed: Vec<ElemSet>,
    pub mul: Vec<usize>,
    pub budget: usize,
    pub seed: u64,
    /// Per-class comparison with the expected table, when one was given.
    pub comparison: Vec<SampledEntry>,
}

impl SampledQuotient {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn hsum(&self, a: usize, b: usize) -> ElemSet {
        self.witnessed[a * self.len() + b]
    }

    pub fn has_witnesses(&self) -> bool {
        self.witnessed.iter().any(|s| !s.is_empty())
    }

    pub fn is_complete_against_expected(&self) -> bool {
        self.comparison.iter().all(|e| e.status == Membership::Witnessed)
    }

    pub fn summary(&self) -> String {
        if !self.has_witnesses() {
            return "no witnesses".into();
        }
        let missing = self.comparison.iter().filter(|e| e.status == Membership::UnwitnessedExpected).count();
        let empty = self.witnessed.iter().filter(|s| s.is_empty()).count();
        format!("sample-sound; {empty} empty entries; {missing} expected classes unwitnessed")
    }

    /// The witnessed table, when every entry is nonempty.
    pub fn to_table(&self) -> Result<HyperTable> {
        let n = self.len();
        HyperTable::new(
            self.names.clone(),
            self.witnessed.chunks(n).map(|c| c.to_vec()).collect(),
            Some(self.mul.chunks(n).map(|c| c.to_vec()).collect()),
            Some(0),
            Some(1),
        )
    }
}

/// Witness `bᵢ ⊞ bⱼ` by sampling `g₁bᵢ + g₂bⱼ` (`budget` draws per pair)
/// and compare with `expected` if given. A witnessed class absent from
/// `expected` is an error.
///
/// The transversal must list the zero class first and the class of one second.
pub fn sampled_quotient<B: SampledRing>(
    base: &B,
    budget: usize,
    seed: u64,
    expected: Option<&HyperTable>,
) -> Result<SampledQuotient> {
    let trans = base.transversal();
    let n = trans.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witnessed = vec![ElemSet::EMPTY; n * n];
    for i in 0..n {
        for j in 0..n {
            for _ in 0..budget {
                let (g1, g2) = (base.sample_g(&mut rng), base.sample_g(&mut rng));
                let v = base.add(&base.mul(&g1, &trans[i].1), &base.mul(&g2, &trans[j].1));
                let c = base.class_of(&v).ok_or_else(|| Error::ExpectedMismatch("sum outside every class".into()))?;
                witnessed[i * n + j].insert(c);
            }
        }
    }
    let mul = (0..n * n)
        .map(|k| {
            let v = base.mul(&trans[k / n].1, &trans[k % n].1);
            base.class_of(&v).ok_or_else(|| Error::ExpectedMismatch("product outside every class".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = trans.into_iter().map(|(s, _)| s).collect();
    let mut comparison = Vec::new();
    if let Some(exp) = expected {
        if exp.len() != n {
            return Err(Error::ExpectedMismatch(format!("expected table has {} classes, sampled {n}", exp.len())));
        }
        for a in 0..n {
            for b in 0..n {
                let w = witnessed[a * n + b];
                let e = exp.hsum(a, b);
                if let Some(c) = w.difference(e).first() {
                    return Err(Error::ExpectedMismatch(format!(
                        "{} in {} + {} was witnessed but not expected",
                        names[c], names[a], names[b]
                    )));
                }
                for c in e {
                    let status = if w.contains(c) { Membership::Witnessed } else { Membership::UnwitnessedExpected };
                    comparison.push(SampledEntry { a, b, c, status });
                }
            }
        }
    }
    Ok(SampledQuotient { names, witnessed, mul, budget, seed, comparison })
}
