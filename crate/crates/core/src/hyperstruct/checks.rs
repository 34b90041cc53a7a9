use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{AxiomReport, HyperTable, Verdict};
use crate::elemset::ElemSet;

/// Every axiom the finite checkers know, each with a standalone predicate
/// so that a witness can be replayed in isolation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    HsumAssociativity,
    HyperneutralZero,
    HypernegativeExists,
    HypernegativeUnique,
    Reversibility,
    HsumCommutativity,
    MulPresent,
    MulAssociativity,
    MulNeutral,
    ZeroAbsorbing,
    LeftDistributivity,
    RightDistributivity,
    MulGroup,
    /// `S(S₁ ⊞ S₂) ⊆ SS₁ ⊞ SS₂`; tuple entries are subset bitmasks.
    WeakDistributivityLeft,
    /// `(S₁ ⊞ S₂)S ⊆ S₁S ⊞ S₂S`.
    WeakDistributivityRight,
    /// Equality in both weak distributivity inclusions.
    PowersetDistributivity,
}

const ALL: [Axiom; 16] = [
    Axiom::HsumAssociativity,
    Axiom::HyperneutralZero,
    Axiom::HypernegativeExists,
    Axiom::HypernegativeUnique,
    Axiom::Reversibility,
    Axiom::HsumCommutativity,
    Axiom::MulPresent,
    Axiom::MulAssociativity,
    Axiom::MulNeutral,
    Axiom::ZeroAbsorbing,
    Axiom::LeftDistributivity,
    Axiom::RightDistributivity,
    Axiom::MulGroup,
    Axiom::WeakDistributivityLeft,
    Axiom::WeakDistributivityRight,
    Axiom::PowersetDistributivity,
];

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::HsumAssociativity => "hsum_associativity",
            Axiom::HyperneutralZero => "hyperneutral_zero",
            Axiom::HypernegativeExists => "hypernegative_exists",
            Axiom::HypernegativeUnique => "hypernegative_unique",
            Axiom::Reversibility => "reversibility",
            Axiom::HsumCommutativity => "hsum_commutativity",
            Axiom::MulPresent => "mul_present",
            Axiom::MulAssociativity => "mul_associativity",
            Axiom::MulNeutral => "mul_neutral",
            Axiom::ZeroAbsorbing => "zero_absorbing",
            Axiom::LeftDistributivity => "left_distributivity",
            Axiom::RightDistributivity => "right_distributivity",
            Axiom::MulGroup => "mul_group",
            Axiom::WeakDistributivityLeft => "weak_distributivity_left",
            Axiom::WeakDistributivityRight => "weak_distributivity_right",
            Axiom::PowersetDistributivity => "powerset_distributivity",
        }
    }

    pub fn from_name(name: &str) -> Option<Axiom> {
        ALL.into_iter().find(|a| a.name() == name)
    }

    fn arity(self) -> usize {
        match self {
            Axiom::MulPresent => 0,
            Axiom::HyperneutralZero
            | Axiom::HypernegativeExists
            | Axiom::HypernegativeUnique
            | Axiom::MulNeutral
            | Axiom::ZeroAbsorbing
            | Axiom::MulGroup => 1,
            Axiom::HsumCommutativity => 2,
            _ => 3,
        }
    }

    fn needs_zero(self) -> bool {
        matches!(
            self,
            Axiom::HyperneutralZero
                | Axiom::HypernegativeExists
                | Axiom::HypernegativeUnique
                | Axiom::Reversibility
                | Axiom::ZeroAbsorbing
                | Axiom::MulGroup
        )
    }

    fn needs_mul(self) -> bool {
        matches!(
            self,
            Axiom::MulPresent
                | Axiom::MulAssociativity
                | Axiom::MulNeutral
                | Axiom::ZeroAbsorbing
                | Axiom::LeftDistributivity
                | Axiom::RightDistributivity
                | Axiom::MulGroup
                | Axiom::WeakDistributivityLeft
                | Axiom::WeakDistributivityRight
                | Axiom::PowersetDistributivity
        )
    }

    /// Whether the axiom holds at this tuple. An empty tuple for an axiom
    /// of positive arity stands for a missing zero, one or multiplication.
    pub fn holds(self, h: &HyperTable, t: &[usize]) -> bool {
        if self.needs_zero() && h.zero().is_none() || self.needs_mul() && !h.has_mul() {
            return false;
        }
        if self == Axiom::MulNeutral && h.one().is_none() {
            return false;
        }
        if t.len() != self.arity() {
            return false;
        }
        let z = h.zero().unwrap_or(usize::MAX);
        let m = |a: usize, b: usize| h.mul_unchecked(a, b);
        let s = ElemSet::singleton;
        match self {
            Axiom::HsumAssociativity => {
                let (a, b, c) = (t[0], t[1], t[2]);
                h.hsum_sets_raw(h.hsum(a, b), s(c)) == h.hsum_sets_raw(s(a), h.hsum(b, c))
            }
            Axiom::HyperneutralZero => h.hsum(z, t[0]) == s(t[0]) && h.hsum(t[0], z) == s(t[0]),
            Axiom::HypernegativeExists => !h.hypernegatives(t[0]).is_empty(),
            Axiom::HypernegativeUnique => h.hypernegatives(t[0]).len() <= 1,
            Axiom::Reversibility => {
                let (a1, a2, a3) = (t[0], t[1], t[2]);
                match h.hypernegatives(a1).first() {
                    None => true,
                    Some(neg) => h.hsum(a1, a2).contains(a3) == h.hsum(a3, neg).contains(a2),
                }
            }
            Axiom::HsumCommutativity => h.hsum(t[0], t[1]) == h.hsum(t[1], t[0]),
            Axiom::MulPresent => true,
            Axiom::MulAssociativity => m(m(t[0], t[1]), t[2]) == m(t[0], m(t[1], t[2])),
            Axiom::MulNeutral => {
                let one = h.one().unwrap();
                m(one, t[0]) == t[0] && m(t[0], one) == t[0]
            }
            Axiom::ZeroAbsorbing => m(z, t[0]) == z && m(t[0], z) == z,
            Axiom::LeftDistributivity => {
                let (a, b, c) = (t[0], t[1], t[2]);
                h.hsum(b, c).map(|x| m(a, x)) == h.hsum(m(a, b), m(a, c))
            }
            Axiom::RightDistributivity => {
                let (a, b, c) = (t[0], t[1], t[2]);
                h.hsum(b, c).map(|x| m(x, a)) == h.hsum(m(b, a), m(c, a))
            }
            Axiom::MulGroup => {
                let a = t[0];
                a == z || h.one().is_some_and(|one| (0..h.len()).any(|b| m(a, b) == one && m(b, a) == one))
            }
            Axiom::WeakDistributivityLeft | Axiom::WeakDistributivityRight | Axiom::PowersetDistributivity => {
                let [l, r, ll, rr] = powerset_sides(h, t);
                match self {
                    Axiom::WeakDistributivityLeft => l.is_subset(r),
                    Axiom::WeakDistributivityRight => ll.is_subset(rr),
                    _ => l == r && ll == rr,
                }
            }
        }
    }

    fn detail(self, h: &HyperTable, t: &[usize]) -> String {
        if t.len() != self.arity() {
            return match self {
                _ if self.needs_mul() && !h.has_mul() => "table has no multiplication".into(),
                Axiom::MulNeutral => "table has no one".into(),
                _ => "table has no zero".into(),
            };
        }
        let nm = |i: usize| h.name(i).to_string();
        let names: Vec<String> = match self {
            Axiom::WeakDistributivityLeft | Axiom::WeakDistributivityRight | Axiom::PowersetDistributivity => {
                t.iter().map(|&b| h.show(ElemSet::from_bits(b as u64))).collect()
            }
            _ => t.iter().map(|&i| nm(i)).collect(),
        };
        match self {
            Axiom::HsumAssociativity => {
                let (a, b, c) = (t[0], t[1], t[2]);
                format!(
                    "({0} + {1}) + {2} = {3} but {0} + ({1} + {2}) = {4}",
                    names[0],
                    names[1],
                    names[2],
                    h.show(h.hsum_sets_raw(h.hsum(a, b), ElemSet::singleton(c))),
                    h.show(h.hsum_sets_raw(ElemSet::singleton(a), h.hsum(b, c)))
                )
            }
            Axiom::HypernegativeExists => format!("no x with 0 in {} + x", names[0]),
            Axiom::HypernegativeUnique => {
                format!("{} has hypernegatives {}", names[0], h.show(h.hypernegatives(t[0])))
            }
            Axiom::Reversibility => format!(
                "{2} in {0} + {1} is not matched by {1} in {2} + (-{0})",
                names[0], names[1], names[2]
            ),
            Axiom::WeakDistributivityLeft | Axiom::WeakDistributivityRight | Axiom::PowersetDistributivity => {
                let [l, r, ll, rr] = powerset_sides(h, t);
                format!(
                    "S={}, S1={}, S2={}: S(S1+S2)={} vs SS1+SS2={}; (S1+S2)S={} vs S1S+S2S={}",
                    names[0],
                    names[1],
                    names[2],
                    h.show(l),
                    h.show(r),
                    h.show(ll),
                    h.show(rr)
                )
            }
            _ => format!("{} fails at ({})", self.name(), names.join(", ")),
        }
    }
}

/// `[S(S₁⊞S₂), SS₁⊞SS₂, (S₁⊞S₂)S, S₁S⊞S₂S]` for a bitmask triple.
fn powerset_sides(h: &HyperTable, t: &[usize]) -> [ElemSet; 4] {
    let [s, s1, s2] = [t[0], t[1], t[2]].map(|b| ElemSet::from_bits(b as u64));
    let mul = |a: ElemSet, b: ElemSet| h.mul_sets(a, b).expect("checked for multiplication");
    let sum = |a: ElemSet, b: ElemSet| h.hsum_sets_raw(a, b);
    [
        mul(s, sum(s1, s2)),
        sum(mul(s, s1), mul(s, s2)),
        mul(sum(s1, s2), s),
        sum(mul(s1, s), mul(s2, s)),
    ]
}

/// Whether replaying the witness of a failed verdict reproduces the failure.
pub fn replay(h: &HyperTable, v: &Verdict) -> bool {
    match (Axiom::from_name(&v.name), &v.witness) {
        (Some(ax), Some(w)) => !ax.holds(h, &w.tuple),
        _ => false,
    }
}

/// Exhaustive search over `domain^arity` in lexicographic order.
fn search(h: &HyperTable, ax: Axiom, domain: &[usize]) -> Verdict {
    let ar = ax.arity();
    let missing = ax.needs_zero() && h.zero().is_none()
        || ax.needs_mul() && !h.has_mul()
        || ax == Axiom::MulNeutral && h.one().is_none();
    if missing {
        return Verdict::fail(ax.name(), 0, vec![], ax.detail(h, &[]));
    }
    let d = domain.len();
    let total = d.pow(ar as u32);
    if ar == 0 {
        return Verdict::pass(ax.name(), 1);
    }
    let inner = d.pow(ar as u32 - 1);
    let found = (0..d).into_par_iter().find_map_first(|i| {
        let mut t = vec![domain[i]; ar];
        for j in 0..inner {
            let mut rest = j;
            for k in (1..ar).rev() {
                t[k] = domain[rest % d];
                rest /= d;
            }
            if !ax.holds(h, &t) {
                return Some((i * inner + j + 1, t));
            }
        }
        None
    });
    match found {
        None => Verdict::pass(ax.name(), total),
        Some((checked, t)) => {
            let detail = ax.detail(h, &t);
            Verdict::fail(ax.name(), checked, t, detail)
        }
    }
}

fn run(h: &HyperTable, axioms: &[Axiom]) -> AxiomReport {
    let domain: Vec<usize> = (0..h.len()).collect();
    let mut r = AxiomReport::default();
    for &ax in axioms {
        let v = search(h, ax, &domain);
        r.push(if ax == Axiom::HsumCommutativity { v.informational() } else { v });
    }
    r
}

const HYPERGROUP: [Axiom; 6] = [
    Axiom::HsumAssociativity,
    Axiom::HyperneutralZero,
    Axiom::HypernegativeExists,
    Axiom::HypernegativeUnique,
    Axiom::Reversibility,
    Axiom::HsumCommutativity,
];

const HYPERRING: [Axiom; 6] = [
    Axiom::MulPresent,
    Axiom::MulAssociativity,
    Axiom::MulNeutral,
    Axiom::ZeroAbsorbing,
    Axiom::LeftDistributivity,
    Axiom::RightDistributivity,
];

/// Associativity, hyperneutral zero, unique hypernegatives, reversibility.
/// Commutativity of `⊞` is reported but not required.
pub fn check_hypergroup(h: &HyperTable) -> AxiomReport {
    run(h, &HYPERGROUP)
}

/// Hypergroup axioms plus multiplicative monoid, absorbing zero and
/// element-level distributivity on both sides.
pub fn check_hyperring(h: &HyperTable) -> AxiomReport {
    let mut r = check_hypergroup(h);
    r.extend(run(h, &HYPERRING));
    r
}

/// Hyperring axioms plus: nonzero elements form a multiplicative group.
pub fn check_hyperfield(h: &HyperTable) -> AxiomReport {
    let mut r = check_hyperring(h);
    r.extend(run(h, &[Axiom::MulGroup]));
    r
}

/// Largest carrier for exhaustive subset-triple enumeration.
pub const POWERSET_EXHAUSTIVE_MAX: usize = 6;

/// Weak distributivity of the power-set lifting, exhaustive for carriers
/// of at most six elements and seeded-random beyond.
///
/// The `powerset_distributivity` verdict is informational: it fails
/// exactly when some inclusion is strict, and its witness is that tuple.
pub fn check_powerset_weak_distributivity(h: &HyperTable, budget: usize, seed: u64) -> AxiomReport {
    let axes = [Axiom::WeakDistributivityLeft, Axiom::WeakDistributivityRight, Axiom::PowersetDistributivity];
    if !h.has_mul() {
        let mut r = AxiomReport::default();
        for ax in axes {
            r.push(Verdict::fail(ax.name(), 0, vec![], ax.detail(h, &[])));
        }
        return r;
    }
    let n = h.len();
    let triples: Vec<[usize; 3]> = if n <= POWERSET_EXHAUSTIVE_MAX {
        let subs: Vec<usize> = ElemSet::nonempty_subsets(n).map(|s| s.bits() as usize).collect();
        let subs = &subs;
        subs.iter()
            .flat_map(|&a| subs.iter().flat_map(move |&b| subs.iter().map(move |&c| [a, b, c])))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = ElemSet::full(n).bits();
        let mut draw = || loop {
            let b = rng.gen::<u64>() & full;
            if b != 0 {
                return b as usize;
            }
        };
        (0..budget).map(|_| [draw(), draw(), draw()]).collect()
    };
    let mut r = AxiomReport::default();
    for ax in axes {
        let found = triples.par_iter().position_first(|t| !ax.holds(h, t));
        let v = match found {
            None => Verdict::pass(ax.name(), triples.len()),
            Some(i) => Verdict::fail(ax.name(), i + 1, triples[i].to_vec(), ax.detail(h, &triples[i])),
        };
        r.push(if ax == Axiom::PowersetDistributivity { v.informational() } else { v });
    }
    r
}

/// All `b` with `a ∈ (a ⊞ b) ∩ (b ⊞ a)` for every `a`.
pub fn weak_neutral_elements(h: &HyperTable) -> ElemSet {
    (0..h.len())
        .filter(|&b| (0..h.len()).all(|a| h.hsum(a, b).contains(a) && h.hsum(b, a).contains(a)))
        .collect()
}
