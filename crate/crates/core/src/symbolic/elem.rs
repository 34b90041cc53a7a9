use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymField {
    Krasner,
    Signs,
    Tropical,
    SignedTropical,
    Phase,
}

impl SymField {
    pub const ALL: [SymField; 5] =
        [SymField::Krasner, SymField::Signs, SymField::Tropical, SymField::SignedTropical, SymField::Phase];

    pub fn name(self) -> &'static str {
        match self {
            SymField::Krasner => "krasner",
            SymField::Signs => "signs",
            SymField::Tropical => "tropical",
            SymField::SignedTropical => "signed-tropical",
            SymField::Phase => "phase",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn zero(self) -> SymElem {
        match self {
            SymField::Krasner => SymElem::Krasner(false),
            SymField::Signs => SymElem::Sign(0),
            SymField::Tropical => SymElem::Tropical(None),
            SymField::SignedTropical => SymElem::SignedTropical(None),
            SymField::Phase => SymElem::Phase(None),
        }
    }

    pub fn one(self) -> SymElem {
        match self {
            SymField::Krasner => SymElem::Krasner(true),
            SymField::Signs => SymElem::Sign(1),
            SymField::Tropical => SymElem::Tropical(Some(Rational64::zero())),
            SymField::SignedTropical => SymElem::SignedTropical(Some((Sign::Plus, Rational64::zero()))),
            SymField::Phase => SymElem::Phase(Some(Angle::new(Rational64::zero()))),
        }
    }

    /// A small sample of elements, used by searches that need a finite pool.
    pub fn pool(self) -> Vec<SymElem> {
        match self {
            SymField::Krasner => vec![SymElem::Krasner(false), SymElem::Krasner(true)],
            SymField::Signs => vec![SymElem::Sign(0), SymElem::Sign(1), SymElem::Sign(-1)],
            SymField::Tropical => {
                std::iter::once(SymElem::Tropical(None)).chain((0..3).map(SymElem::trop)).collect()
            }
            SymField::SignedTropical => std::iter::once(SymElem::SignedTropical(None))
                .chain((0..2).flat_map(|m| [SymElem::signed(Sign::Plus, m), SymElem::signed(Sign::Minus, m)]))
                .collect(),
            SymField::Phase => std::iter::once(SymElem::Phase(None)).chain((0..8).map(|k| SymElem::angle(k, 8))).collect(),
        }
    }
}

/// An angle in turns, normalized to `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle(Rational64);

impl Angle {
    pub fn new(turns: Rational64) -> Self {
        Angle(turns - turns.floor())
    }

    pub fn turns(self) -> Rational64 {
        self.0
    }

    pub fn rotate(self, by: Rational64) -> Self {
        Angle::new(self.0 + by)
    }

    pub fn antipode(self) -> Self {
        self.rotate(Rational64::new(1, 2))
    }

    /// Counterclockwise distance from `self` to `other`, in `[0, 1)`.
    pub fn ccw_to(self, other: Angle) -> Rational64 {
        Angle::new(other.0 - self.0).0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// An element of one of the rule-based hyperfields. `None` payloads are the
/// zero (`−∞` in the tropical cases).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymElem {
    Krasner(bool),
    Sign(i8),
    Tropical(Option<Rational64>),
    SignedTropical(Option<(Sign, Rational64)>),
    Phase(Option<Angle>),
}

impl SymElem {
    pub fn trop(v: i64) -> Self {
        SymElem::Tropical(Some(Rational64::from_integer(v)))
    }

    pub fn signed(s: Sign, m: i64) -> Self {
        SymElem::SignedTropical(Some((s, Rational64::from_integer(m))))
    }

    /// The unit-circle point at `p/q` turns.
    pub fn angle(p: i64, q: i64) -> Self {
        SymElem::Phase(Some(Angle::new(Rational64::new(p, q))))
    }

    pub fn field(self) -> SymField {
        match self {
            SymElem::Krasner(_) => SymField::Krasner,
            SymElem::Sign(_) => SymField::Signs,
            SymElem::Tropical(_) => SymField::Tropical,
            SymElem::SignedTropical(_) => SymField::SignedTropical,
            SymElem::Phase(_) => SymField::Phase,
        }
    }

    pub fn is_zero(self) -> bool {
        self == self.field().zero()
    }

    pub(crate) fn expect_field(self, field: SymField) -> Result<Self> {
        if self.field() == field {
            Ok(self)
        } else {
            Err(Error::MixedField(format!("{self} is not in the {} hyperfield", field.name())))
        }
    }

    /// The unique hypernegative.
    pub fn neg(self) -> Self {
        match self {
            SymElem::Sign(s) => SymElem::Sign(-s),
            SymElem::SignedTropical(Some((s, m))) => SymElem::SignedTropical(Some((s.flip(), m))),
            SymElem::Phase(Some(a)) => SymElem::Phase(Some(a.antipode())),
            other => other,
        }
    }

    pub fn mul(self, other: SymElem) -> Result<Self> {
        let other = other.expect_field(self.field())?;
        Ok(match (self, other) {
            (SymElem::Krasner(a), SymElem::Krasner(b)) => SymElem::Krasner(a && b),
            (SymElem::Sign(a), SymElem::Sign(b)) => SymElem::Sign(a * b),
            (SymElem::Tropical(a), SymElem::Tropical(b)) => SymElem::Tropical(a.zip(b).map(|(a, b)| a + b)),
            (SymElem::SignedTropical(a), SymElem::SignedTropical(b)) => {
                SymElem::SignedTropical(a.zip(b).map(|((s, m), (t, n))| (s.times(t), m + n)))
            }
            (SymElem::Phase(a), SymElem::Phase(b)) => SymElem::Phase(a.zip(b).map(|(a, b)| a.rotate(b.0))),
            _ => unreachable!("fields checked above"),
        })
    }

    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            SymElem::Tropical(Some(a)) => SymElem::Tropical(Some(-a)),
            SymElem::SignedTropical(Some((s, m))) => SymElem::SignedTropical(Some((s, -m))),
            SymElem::Phase(Some(a)) => SymElem::Phase(Some(Angle::new(-a.0))),
            other => other,
        })
    }
}

pub(crate) fn ratio(r: Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn short(r: Rational64) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        ratio(r)
    }
}

impl fmt::Display for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SymElem::Krasner(b) => write!(f, "{}", u8::from(b)),
            SymElem::Sign(s) => write!(f, "{s}"),
            SymElem::Tropical(None) | SymElem::SignedTropical(None) => write!(f, "-inf"),
            SymElem::Tropical(Some(a)) => write!(f, "{}", short(a)),
            SymElem::SignedTropical(Some((s, m))) => {
                write!(f, "{}{}", if s == Sign::Plus { "+" } else { "-" }, short(m))
            }
            SymElem::Phase(None) => write!(f, "0"),
            SymElem::Phase(Some(a)) => write!(f, "angle({})", short(a.0)),
        }
    }
}

impl std::str::FromStr for SymElem {
    type Err = Error;

    /// Parse `field:value`, for example `tropical:3/2`, `phase:angle(1/4)`,
    /// `signed-tropical:-2` or `tropical:-inf`.
    fn from_str(s: &str) -> Result<Self> {
        let (field, v) = s.split_once(':').ok_or_else(|| Error::Parse(format!("expected field:value, got {s}")))?;
        let field = SymField::from_name(field).ok_or_else(|| Error::UnknownName(field.into()))?;
        let bad = || Error::Parse(format!("bad {} element {v}", field.name()));
        let rat = |t: &str| -> Result<Rational64> { t.parse::<Rational64>().map_err(|_| bad()) };
        Ok(match field {
            SymField::Krasner => SymElem::Krasner(match v {
                "0" => false,
                "1" => true,
                _ => return Err(bad()),
            }),
            SymField::Signs => match v {
                "0" | "1" | "-1" => SymElem::Sign(v.parse().map_err(|_| bad())?),
                _ => return Err(bad()),
            },
            SymField::Tropical if v == "-inf" => SymElem::Tropical(None),
            SymField::Tropical => SymElem::Tropical(Some(rat(v)?)),
            SymField::SignedTropical if v == "-inf" => SymElem::SignedTropical(None),
            SymField::SignedTropical => {
                let r = rat(v)?;
                let s = if v.starts_with('-') { Sign::Minus } else { Sign::Plus };
                SymElem::SignedTropical(Some((s, r.abs())))
            }
            SymField::Phase if v == "0" => SymElem::Phase(None),
            SymField::Phase => {
                let inner = v.strip_prefix("angle(").and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
                SymElem::Phase(Some(Angle::new(rat(inner)?)))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_round_trip() {
        for f in SymField::ALL {
            for e in f.pool() {
                let s = format!("{}:{e}", f.name());
                assert_eq!(s.parse::<SymElem>().unwrap(), e, "{s}");
            }
        }
    }

    #[test]
    fn multiplication_rules() {
        assert_eq!(SymElem::trop(2).mul(SymElem::trop(3)).unwrap(), SymElem::trop(5));
        assert_eq!(SymElem::angle(3, 4).mul(SymElem::angle(1, 2)).unwrap(), SymElem::angle(1, 4));
        assert_eq!(
            SymElem::signed(Sign::Minus, 1).mul(SymElem::signed(Sign::Minus, 2)).unwrap(),
            SymElem::signed(Sign::Plus, 3)
        );
        assert!(SymElem::trop(1).mul(SymElem::Sign(1)).is_err());
        assert_eq!(SymElem::angle(1, 8).neg(), SymElem::angle(5, 8));
        assert_eq!(SymElem::trop(4).inv(), Some(SymElem::trop(-4)));
    }
}
