use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, Serializer};
use serde_json::{json, Value};

use super::elem::{ratio, Angle, Sign, SymElem, SymField};
use crate::error::{Error, Result};

/// An open counterclockwise arc `(start, start + len)`, `0 < len ≤ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arc {
    pub start: Angle,
    pub len: Rational64,
}

impl Arc {
    pub fn end(self) -> Angle {
        self.start.rotate(self.len)
    }

    pub fn contains(self, a: Angle) -> bool {
        let d = self.start.ccw_to(a);
        d > Rational64::zero() && d < self.len
    }
}

/// A subset of a rule-based hyperfield, kept in canonical form so that
/// equality of values is equality of sets.
///
/// Tropical sets are points plus at most one ray `[−∞, a]` (in the signed
/// case, everything of magnitude at most `a` in both signs plus `−∞`).
/// Phase sets are points plus disjoint open arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetValue {
    field: SymField,
    points: BTreeSet<SymElem>,
    ray: Option<Rational64>,
    arcs: Vec<Arc>,
}

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

impl SetValue {
    pub fn empty(field: SymField) -> Self {
        SetValue { field, points: BTreeSet::new(), ray: None, arcs: Vec::new() }
    }

    pub fn from_elems(field: SymField, elems: impl IntoIterator<Item = SymElem>) -> Result<Self> {
        let mut s = Self::empty(field);
        for e in elems {
            s.points.insert(e.expect_field(field)?);
        }
        Ok(s.canon())
    }

    pub fn singleton(e: SymElem) -> Self {
        let mut s = Self::empty(e.field());
        s.points.insert(e);
        s
    }

    /// `[−∞, a]`; in the signed tropical field, both signs up to magnitude `a`.
    pub fn ray(field: SymField, sup: Rational64) -> Result<Self> {
        if !matches!(field, SymField::Tropical | SymField::SignedTropical) {
            return Err(Error::MixedField(format!("rays live in tropical fields, not {}", field.name())));
        }
        Ok(SetValue { field, points: BTreeSet::new(), ray: Some(sup), arcs: Vec::new() })
    }

    /// The open arc from `a` counterclockwise to `b` (in turns).
    pub fn arc(a: Rational64, b: Rational64) -> Self {
        let start = Angle::new(a);
        let mut len = start.ccw_to(Angle::new(b));
        if len.is_zero() {
            len = Rational64::one();
        }
        SetValue { field: SymField::Phase, points: BTreeSet::new(), ray: None, arcs: vec![Arc { start, len }] }.canon()
    }

    pub fn field(&self) -> SymField {
        self.field
    }

    pub fn points(&self) -> impl Iterator<Item = SymElem> + '_ {
        self.points.iter().copied()
    }

    pub fn ray_sup(&self) -> Option<Rational64> {
        self.ray
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.ray.is_none() && self.arcs.is_empty()
    }

    /// Whether the set is a finite list of points.
    pub fn is_finite(&self) -> bool {
        self.ray.is_none() && self.arcs.is_empty()
    }

    pub fn contains(&self, e: SymElem) -> bool {
        if e.field() != self.field {
            return false;
        }
        if self.points.contains(&e) {
            return true;
        }
        match (e, self.ray) {
            (SymElem::Tropical(None) | SymElem::SignedTropical(None), Some(_)) => return true,
            (SymElem::Tropical(Some(v)), Some(sup)) if v <= sup => return true,
            (SymElem::SignedTropical(Some((_, m))), Some(sup)) if m <= sup => return true,
            _ => {}
        }
        match e {
            SymElem::Phase(Some(a)) => self.arcs.iter().any(|arc| arc.contains(a)),
            _ => false,
        }
    }

    fn contains_angle(&self, a: Angle) -> bool {
        self.contains(SymElem::Phase(Some(a)))
    }

    fn has_zero(&self) -> bool {
        self.contains(self.field.zero())
    }

    fn canon(mut self) -> Self {
        match self.field {
            SymField::Tropical | SymField::SignedTropical => {
                if let Some(sup) = self.ray {
                    let probe = SetValue { field: self.field, points: BTreeSet::new(), ray: Some(sup), arcs: Vec::new() };
                    self.points.retain(|&p| !probe.contains(p));
                }
                self
            }
            SymField::Phase => {
                let crit = self.critical_angles();
                let zero = self.has_zero();
                phase_from_predicate(zero, crit, |a| self.contains_angle(a))
            }
            _ => self,
        }
    }

    /// Boundary angles: points and arc endpoints.
    fn critical_angles(&self) -> Vec<Angle> {
        let mut out: Vec<Angle> = self
            .points
            .iter()
            .filter_map(|p| match p {
                SymElem::Phase(Some(a)) => Some(*a),
                _ => None,
            })
            .collect();
        for arc in &self.arcs {
            out.push(arc.start);
            out.push(arc.end());
        }
        out
    }

    /// Boundary magnitudes on the line: point values and the ray's end.
    fn critical_values(&self) -> Vec<Rational64> {
        let mut out: Vec<Rational64> = self
            .points
            .iter()
            .filter_map(|p| match p {
                SymElem::Tropical(Some(v)) => Some(*v),
                SymElem::SignedTropical(Some((_, m))) => Some(*m),
                _ => None,
            })
            .collect();
        out.extend(self.ray);
        out
    }

    /// Elements that decide inclusion between `self` and `other`: set
    /// membership is constant between consecutive critical values, so
    /// probing boundaries and midpoints is exact.
    fn probes(&self, other: &SetValue) -> Vec<SymElem> {
        let mut out: Vec<SymElem> = vec![self.field.zero()];
        out.extend(self.points.iter().chain(other.points.iter()).copied());
        match self.field {
            SymField::Krasner | SymField::Signs => {}
            SymField::Tropical | SymField::SignedTropical => {
                let mut vs = self.critical_values();
                vs.extend(other.critical_values());
                let line = around(vs);
                if self.field == SymField::Tropical {
                    out.extend(line.into_iter().map(|v| SymElem::Tropical(Some(v))));
                } else {
                    out.extend(line.into_iter().flat_map(|v| {
                        [SymElem::SignedTropical(Some((Sign::Plus, v))), SymElem::SignedTropical(Some((Sign::Minus, v)))]
                    }));
                }
            }
            SymField::Phase => {
                let mut cs = self.critical_angles();
                cs.extend(other.critical_angles());
                out.extend(circle_probes(cs).into_iter().map(|a| SymElem::Phase(Some(a))));
            }
        }
        out
    }

    /// Some element of `self` outside `other`, if there is one.
    pub fn witness_outside(&self, other: &SetValue) -> Option<SymElem> {
        self.probes(other).into_iter().find(|&e| self.contains(e) && !other.contains(e))
    }

    pub fn is_subset(&self, other: &SetValue) -> bool {
        self.field == other.field && self.witness_outside(other).is_none()
    }

    pub fn union(&self, other: &SetValue) -> Result<SetValue> {
        if self.field != other.field {
            return Err(mixed(self.field, other.field));
        }
        let mut out = self.clone();
        out.points.extend(other.points.iter().copied());
        out.ray = match (self.ray, other.ray) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        out.arcs.extend(other.arcs.iter().copied());
        Ok(out.canon())
    }

    /// `e · U`.
    pub fn scale(&self, e: SymElem) -> Result<SetValue> {
        let e = e.expect_field(self.field)?;
        if self.is_empty() {
            return Ok(self.clone());
        }
        if e.is_zero() {
            return Ok(Self::singleton(e));
        }
        let mut out = Self::empty(self.field);
        for &p in &self.points {
            out.points.insert(e.mul(p)?);
        }
        out.ray = match (self.ray, e) {
            (Some(sup), SymElem::Tropical(Some(a))) => Some(sup + a),
            (Some(sup), SymElem::SignedTropical(Some((_, m)))) => Some(sup + m),
            _ => None,
        };
        if let SymElem::Phase(Some(a)) = e {
            out.arcs = self.arcs.iter().map(|arc| Arc { start: arc.start.rotate(a.turns()), len: arc.len }).collect();
        }
        Ok(out.canon())
    }

    /// Elementwise product `{uv : u ∈ U, v ∈ V}`.
    pub fn mul(&self, other: &SetValue) -> Result<SetValue> {
        if self.field != other.field {
            return Err(mixed(self.field, other.field));
        }
        if self.is_empty() || other.is_empty() {
            return Ok(Self::empty(self.field));
        }
        let mut out = Self::empty(self.field);
        for &p in &self.points {
            out = out.union(&other.scale(p)?)?;
        }
        for &p in &other.points {
            out = out.union(&self.scale(p)?)?;
        }
        if let (Some(a), Some(b)) = (self.ray, other.ray) {
            out = out.union(&Self::ray(self.field, a + b)?)?;
        }
        for x in &self.arcs {
            for y in &other.arcs {
                let len = x.len + y.len;
                let arc = if len >= Rational64::one() {
                    // the Minkowski sum wraps the whole circle
                    let mut full = phase_full();
                    full.points.remove(&SymElem::Phase(None));
                    full
                } else {
                    SetValue {
                        field: SymField::Phase,
                        points: BTreeSet::new(),
                        ray: None,
                        arcs: vec![Arc { start: x.start.rotate(y.start.turns()), len }],
                    }
                };
                out = out.union(&arc)?;
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let mut parts: Vec<Value> = self.points.iter().map(|p| json!({"kind": "point", "value": point_json(*p)})).collect();
        if let Some(sup) = self.ray {
            parts.push(json!({"kind": "ray", "sup": ratio(sup), "signed": self.field == SymField::SignedTropical}));
        }
        for a in &self.arcs {
            parts.push(json!({"kind": "arc", "from": ratio(a.start.turns()), "to": ratio(a.start.turns() + a.len)}));
        }
        Value::Array(parts)
    }
}

fn point_json(p: SymElem) -> Value {
    match p {
        SymElem::Tropical(Some(v)) => json!(ratio(v)),
        SymElem::SignedTropical(Some((s, m))) => json!(ratio(if s == Sign::Plus { m } else { -m })),
        SymElem::Phase(Some(a)) => json!({"angle": ratio(a.turns())}),
        other => json!(other.to_string()),
    }
}

impl Serialize for SetValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl fmt::Display for SetValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        if let Some(sup) = self.ray {
            let s = SymElem::Tropical(Some(sup));
            parts.push(if self.field == SymField::SignedTropical { format!("[-inf, ±{s}]") } else { format!("[-inf, {s}]") });
        }
        for a in &self.arcs {
            let from = SymElem::Phase(Some(a.start));
            let to = SymElem::Phase(Some(a.end()));
            parts.push(format!("({from} {to})"));
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn mixed(a: SymField, b: SymField) -> Error {
    Error::MixedField(format!("{} vs {}", a.name(), b.name()))
}

fn phase_full() -> SetValue {
    let zero = Angle::new(Rational64::zero());
    let mut points = BTreeSet::new();
    points.insert(SymElem::Phase(None));
    points.insert(SymElem::Phase(Some(zero)));
    SetValue { field: SymField::Phase, points, ray: None, arcs: vec![Arc { start: zero, len: Rational64::one() }] }
}

/// Probe values on the line: each critical value, midpoints, and one
/// value beyond either end.
fn around(mut vs: Vec<Rational64>) -> Vec<Rational64> {
    vs.sort();
    vs.dedup();
    if vs.is_empty() {
        return vec![Rational64::zero()];
    }
    let mut out = vec![vs[0] - 1, vs[vs.len() - 1] + 1];
    for w in vs.windows(2) {
        out.push((w[0] + w[1]) / 2);
    }
    out.extend(vs);
    out
}

/// Critical angles plus the midpoint of every gap between them.
fn circle_probes(mut cs: Vec<Angle>) -> Vec<Angle> {
    cs.sort();
    cs.dedup();
    if cs.is_empty() {
        cs.push(Angle::new(Rational64::zero()));
    }
    let n = cs.len();
    let mut out = cs.clone();
    for i in 0..n {
        let gap = if n == 1 { Rational64::one() } else { cs[i].ccw_to(cs[(i + 1) % n]) };
        out.push(cs[i].rotate(gap / 2));
    }
    out
}

/// Rebuild a canonical phase set from a membership predicate that is
/// constant on the open gaps between the critical angles.
fn phase_from_predicate(zero: bool, crit: Vec<Angle>, pred: impl Fn(Angle) -> bool) -> SetValue {
    let mut cs = crit;
    cs.sort();
    cs.dedup();
    if cs.is_empty() {
        cs.push(Angle::new(Rational64::zero()));
    }
    let n = cs.len();
    let gap = |i: usize| if n == 1 { Rational64::one() } else { cs[i].ccw_to(cs[(i + 1) % n]) };
    // alternating sequence: point i at 2i, gap (cs[i], cs[i+1]) at 2i+1
    let flags: Vec<bool> =
        (0..2 * n).map(|k| if k % 2 == 0 { pred(cs[k / 2]) } else { pred(cs[k / 2].rotate(gap(k / 2) / 2)) }).collect();
    let mut out = SetValue::empty(SymField::Phase);
    if zero {
        out.points.insert(SymElem::Phase(None));
    }
    let Some(off) = flags.iter().position(|&f| !f) else {
        let mut full = phase_full();
        if !zero {
            full.points.remove(&SymElem::Phase(None));
        }
        return full;
    };
    let mut k = 1;
    while k <= 2 * n {
        let idx = (off + k) % (2 * n);
        if !flags[idx] {
            k += 1;
            continue;
        }
        // a maximal run of true flags starting at idx
        let mut len = 0;
        while flags[(idx + len) % (2 * n)] && len < 2 * n {
            len += 1;
        }
        let run: Vec<usize> = (0..len).map(|j| (idx + j) % (2 * n)).collect();
        let gaps: Vec<usize> = run.iter().copied().filter(|i| i % 2 == 1).collect();
        if gaps.is_empty() {
            out.points.insert(SymElem::Phase(Some(cs[idx / 2])));
        } else {
            let first = gaps[0] / 2;
            let last = gaps[gaps.len() - 1] / 2;
            let start = cs[first];
            let end = cs[last].rotate(gap(last));
            let mut arc_len = start.ccw_to(end);
            if arc_len.is_zero() {
                arc_len = Rational64::one();
            }
            out.arcs.push(Arc { start, len: arc_len });
            if run[0] % 2 == 0 {
                out.points.insert(SymElem::Phase(Some(cs[run[0] / 2])));
            }
            let tail = run[run.len() - 1];
            if tail % 2 == 0 {
                out.points.insert(SymElem::Phase(Some(cs[tail / 2])));
            }
        }
        k += len;
    }
    out.arcs.sort();
    out
}

/// Infimum of the counterclockwise distance from a nonzero point of `u`
/// up to `t` (points at distance zero excluded).
fn dist_before(u: &SetValue, t: Angle) -> Option<Rational64> {
    let mut best: Option<Rational64> = None;
    let mut take = |d: Rational64| best = Some(best.map_or(d, |b: Rational64| b.min(d)));
    for p in &u.points {
        if let SymElem::Phase(Some(a)) = p {
            let d = a.ccw_to(t);
            if d.is_positive() {
                take(d);
            }
        }
    }
    for arc in &u.arcs {
        let e = arc.start.ccw_to(t);
        take(if e.is_zero() {
            Rational64::one() - arc.len
        } else if e <= arc.len {
            Rational64::zero()
        } else {
            e - arc.len
        });
    }
    best
}

/// Infimum of the counterclockwise distance from `t` up to a nonzero point of `v`.
fn dist_after(v: &SetValue, t: Angle) -> Option<Rational64> {
    let mut best: Option<Rational64> = None;
    let mut take = |d: Rational64| best = Some(best.map_or(d, |b: Rational64| b.min(d)));
    for p in &v.points {
        if let SymElem::Phase(Some(a)) = p {
            let d = t.ccw_to(*a);
            if d.is_positive() {
                take(d);
            }
        }
    }
    for arc in &v.arcs {
        let e = arc.start.ccw_to(t);
        take(if e < arc.len { Rational64::zero() } else { Rational64::one() - e });
    }
    best
}

/// Whether `t` lies on an open short arc from a point of `u` to a point of `v`.
fn on_short_arc(u: &SetValue, v: &SetValue, t: Angle) -> bool {
    match (dist_before(u, t), dist_after(v, t)) {
        (Some(s), Some(d)) => s + d < half(),
        _ => false,
    }
}

/// Single hypersum `x ⊞ y` by the rules of the named hyperfield.
pub fn hsum_sym(field: SymField, x: SymElem, y: SymElem) -> Result<SetValue> {
    let (x, y) = (x.expect_field(field)?, y.expect_field(field)?);
    if x.is_zero() {
        return Ok(SetValue::singleton(y));
    }
    if y.is_zero() {
        return Ok(SetValue::singleton(x));
    }
    Ok(match (x, y) {
        (SymElem::Krasner(_), _) => SetValue::from_elems(field, [SymElem::Krasner(false), SymElem::Krasner(true)])?,
        (SymElem::Sign(a), SymElem::Sign(b)) if a == b => SetValue::singleton(x),
        (SymElem::Sign(_), _) => SetValue::from_elems(field, [-1, 0, 1].map(SymElem::Sign))?,
        (SymElem::Tropical(Some(a)), SymElem::Tropical(Some(b))) => match a.cmp(&b) {
            std::cmp::Ordering::Greater => SetValue::singleton(x),
            std::cmp::Ordering::Less => SetValue::singleton(y),
            std::cmp::Ordering::Equal => SetValue::ray(field, a)?,
        },
        (SymElem::SignedTropical(Some((s, m))), SymElem::SignedTropical(Some((t, n)))) => match m.cmp(&n) {
            std::cmp::Ordering::Greater => SetValue::singleton(x),
            std::cmp::Ordering::Less => SetValue::singleton(y),
            std::cmp::Ordering::Equal if s == t => SetValue::singleton(x),
            std::cmp::Ordering::Equal => SetValue::ray(field, m)?,
        },
        (SymElem::Phase(Some(a)), SymElem::Phase(Some(b))) => {
            if a == b {
                SetValue::singleton(x)
            } else if a.antipode() == b {
                SetValue::from_elems(field, [x, y, field.zero()])?
            } else if a.ccw_to(b) < half() {
                SetValue::arc(a.turns(), b.turns())
            } else {
                SetValue::arc(b.turns(), a.turns())
            }
        }
        _ => unreachable!("fields checked above"),
    })
}

/// `U ⊞ V = ⋃ {u ⊞ v : u ∈ U, v ∈ V}`, computed exactly.
pub fn hsum_setvalues(field: SymField, u: &SetValue, v: &SetValue) -> Result<SetValue> {
    if u.field != field || v.field != field {
        return Err(mixed(u.field, v.field));
    }
    let mut out = SetValue::empty(field);
    if u.is_empty() || v.is_empty() {
        return Ok(out);
    }
    match field {
        SymField::Krasner | SymField::Signs => {
            for &a in &u.points {
                for &b in &v.points {
                    out = out.union(&hsum_sym(field, a, b)?)?;
                }
            }
            Ok(out)
        }
        SymField::Tropical | SymField::SignedTropical => {
            for &a in &u.points {
                for &b in &v.points {
                    out = out.union(&hsum_sym(field, a, b)?)?;
                }
            }
            // ray ⊞ point: the point if it sticks out above the ray, else the ray
            for (ray, pts) in [(u.ray, &v.points), (v.ray, &u.points)] {
                let Some(sup) = ray else { continue };
                let r = SetValue::ray(field, sup)?;
                for &p in pts {
                    let part = if r.contains(p) { r.clone() } else { SetValue::singleton(p) };
                    out = out.union(&part)?;
                }
            }
            if let (Some(a), Some(b)) = (u.ray, v.ray) {
                out = out.union(&SetValue::ray(field, a.max(b))?)?;
            }
            Ok(out)
        }
        SymField::Phase => {
            let zero = (u.has_zero() && v.has_zero()) || {
                // some nonzero u with −u ∈ V
                let mut cs = u.critical_angles();
                cs.extend(v.critical_angles().into_iter().map(|a| a.antipode()));
                circle_probes(cs).into_iter().any(|a| u.contains_angle(a) && v.contains_angle(a.antipode()))
            };
            let mut crit = u.critical_angles();
            crit.extend(v.critical_angles());
            let shifted: Vec<Angle> = crit.iter().map(|a| a.antipode()).collect();
            crit.extend(shifted);
            let pred = |t: Angle| {
                let (ut, vt) = (u.contains_angle(t), v.contains_angle(t));
                (u.has_zero() && vt)
                    || (v.has_zero() && ut)
                    || (ut && vt)
                    || (ut && v.contains_angle(t.antipode()))
                    || (vt && u.contains_angle(t.antipode()))
                    || on_short_arc(u, v, t)
                    || on_short_arc(v, u, t)
            };
            Ok(phase_from_predicate(zero, crit, pred))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational64 {
        Rational64::new(p, q)
    }

    #[test]
    fn tropical_rules() {
        let f = SymField::Tropical;
        assert_eq!(hsum_sym(f, SymElem::trop(3), SymElem::trop(5)).unwrap(), SetValue::singleton(SymElem::trop(5)));
        let ray = hsum_sym(f, SymElem::trop(4), SymElem::trop(4)).unwrap();
        assert_eq!(ray, SetValue::ray(f, r(4, 1)).unwrap());
        assert!(ray.contains(SymElem::Tropical(None)) && ray.contains(SymElem::trop(-7)) && !ray.contains(SymElem::trop(5)));
        let u = SetValue::ray(f, r(2, 1)).unwrap();
        let v = SetValue::ray(f, r(5, 1)).unwrap();
        assert_eq!(hsum_setvalues(f, &u, &v).unwrap(), v);
    }

    #[test]
    fn phase_rules() {
        let f = SymField::Phase;
        let a0 = SymElem::angle(0, 1);
        let a2 = SymElem::angle(1, 2);
        let s = hsum_sym(f, a0, a2).unwrap();
        assert_eq!(s, SetValue::from_elems(f, [a0, a2, SymElem::Phase(None)]).unwrap());
        let arc = hsum_sym(f, a0, SymElem::angle(1, 4)).unwrap();
        assert_eq!(arc, SetValue::arc(r(0, 1), r(1, 4)));
        assert!(arc.contains(SymElem::angle(1, 8)) && !arc.contains(a0));
        // the short way round from 3/4 to 0
        assert!(hsum_sym(f, a0, SymElem::angle(3, 4)).unwrap().contains(SymElem::angle(7, 8)));
        assert_eq!(hsum_sym(f, a2, a2).unwrap(), SetValue::singleton(a2));
    }

    #[test]
    fn phase_set_sums_by_probes() {
        let f = SymField::Phase;
        let u = SetValue::singleton(SymElem::angle(0, 1));
        let v = SetValue::singleton(SymElem::angle(1, 4));
        assert_eq!(hsum_setvalues(f, &u, &v).unwrap(), SetValue::arc(r(0, 1), r(1, 4)));
        // 0 ⊞ (1/8 1/4): arc (0, 1/4) with the points 1/8 .. already inside
        let w = SetValue::arc(r(1, 8), r(1, 4));
        let s = hsum_setvalues(f, &u, &w).unwrap();
        assert_eq!(s, SetValue::arc(r(0, 1), r(1, 4)));
        // a ⊞ (−a) contains zero
        let neg = SetValue::singleton(SymElem::angle(1, 2));
        assert!(hsum_setvalues(f, &u, &neg).unwrap().contains(SymElem::Phase(None)));
    }

    #[test]
    fn zero_is_neutral_for_sets() {
        for f in SymField::ALL {
            let z = SetValue::singleton(f.zero());
            for e in f.pool() {
                let v = SetValue::singleton(e);
                assert_eq!(hsum_setvalues(f, &z, &v).unwrap(), v);
            }
        }
    }

    #[test]
    fn signed_tropical_cancellation() {
        let f = SymField::SignedTropical;
        let s = hsum_sym(f, SymElem::signed(Sign::Plus, 2), SymElem::signed(Sign::Minus, 2)).unwrap();
        assert!(s.contains(SymElem::signed(Sign::Minus, 1)) && s.contains(SymElem::SignedTropical(None)));
        assert!(!s.contains(SymElem::signed(Sign::Plus, 3)));
    }

    #[test]
    fn canonical_forms_and_json() {
        let f = SymField::Phase;
        let a = SetValue::arc(r(0, 1), r(1, 4)).union(&SetValue::arc(r(1, 8), r(3, 8))).unwrap();
        assert_eq!(a, SetValue::arc(r(0, 1), r(3, 8)));
        let with_mid = a.union(&SetValue::singleton(SymElem::angle(1, 4))).unwrap();
        assert_eq!(with_mid, a);
        let j = SetValue::arc(r(0, 1), r(1, 4)).to_json();
        assert_eq!(j[0]["kind"], "arc");
        assert_eq!(j[0]["to"], "1/4");
        assert_eq!(SetValue::ray(SymField::Tropical, r(4, 1)).unwrap().to_json()[0]["sup"], "4/1");
        assert!(hsum_setvalues(f, &a, &SetValue::singleton(SymElem::trop(1))).is_err());
    }

    #[test]
    fn rotation_equivariance() {
        let f = SymField::Phase;
        let u = SymElem::angle(1, 8);
        for x in f.pool() {
            for y in f.pool() {
                let lhs = hsum_sym(f, x, y).unwrap().scale(u).unwrap();
                let rhs = hsum_sym(f, u.mul(x).unwrap(), u.mul(y).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{x} {y}");
            }
        }
    }
}
