//! Exact semifield scalars.
//!
//! A semifield here is a set with a commutative, associative addition `⊕`
//! and a commutative group multiplication `⊗` distributing over it; there
//! is no subtraction. Four families are provided, all with exact
//! arithmetic:
//!
//! * `trop-int` — the integers under `a ⊕ b = min(a, b)`, `a ⊗ b = a + b`;
//! * `trop-rat` — the rationals under the same min-plus operations;
//! * `rat-pos` — the strictly positive rationals under ordinary `+`, `×`;
//! * `trivial` — the one-element semifield `{1}`.
//!
//! The tropical families carry a distinguished nonnegative part `K+`
//! (values `≥ 0`), which is where canonical coordinates live.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Identifies one of the four supported semifields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemifieldKind {
    /// Integers with min-plus operations.
    TropInt,
    /// Rationals with min-plus operations.
    TropRat,
    /// Strictly positive rationals with field operations.
    RatPos,
    /// The one-element semifield.
    Trivial,
}

impl SemifieldKind {
    /// True when the semifield embeds in the reals with a meaningful
    /// nonnegative part `K+` (the tropical families).
    pub fn has_plus_part(self) -> bool {
        matches!(self, SemifieldKind::TropInt | SemifieldKind::TropRat)
    }

    /// True when every element has an exact additive half `x` with
    /// `x + x = a` in the underlying field (the positive rationals).
    pub fn supports_halving(self) -> bool {
        matches!(self, SemifieldKind::RatPos)
    }

    pub fn name(self) -> &'static str {
        match self {
            SemifieldKind::TropInt => "trop-int",
            SemifieldKind::TropRat => "trop-rat",
            SemifieldKind::RatPos => "rat-pos",
            SemifieldKind::Trivial => "trivial",
        }
    }

    /// Multiplicative unit of this semifield.
    pub fn one(self) -> Value {
        match self {
            SemifieldKind::TropInt => Value::TropInt(BigInt::zero()),
            SemifieldKind::TropRat => Value::TropRat(BigRational::zero()),
            SemifieldKind::RatPos => Value::RatPos(BigRational::one()),
            SemifieldKind::Trivial => Value::Trivial,
        }
    }

    /// Parses a scalar in this semifield from its text form
    /// (integers like `-3`, rationals like `7/2`).
    pub fn parse_value(self, text: &str) -> Result<Value> {
        // Accept the unicode minus sign alongside ASCII.
        let text = text.trim().replace('\u{2212}', "-");
        let bad = || Error::Parse(format!("invalid {} scalar `{text}`", self.name()));
        match self {
            SemifieldKind::TropInt => {
                let n = BigInt::from_str(&text).map_err(|_| bad())?;
                Ok(Value::TropInt(n))
            }
            SemifieldKind::TropRat => Ok(Value::TropRat(parse_rational(&text).ok_or_else(bad)?)),
            SemifieldKind::RatPos => {
                let q = parse_rational(&text).ok_or_else(bad)?;
                Value::rat_pos(q)
            }
            SemifieldKind::Trivial => {
                if text == "1" {
                    Ok(Value::Trivial)
                } else {
                    Err(bad())
                }
            }
        }
    }
}

impl FromStr for SemifieldKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "trop-int" => Ok(SemifieldKind::TropInt),
            "trop-rat" => Ok(SemifieldKind::TropRat),
            "rat-pos" => Ok(SemifieldKind::RatPos),
            "trivial" => Ok(SemifieldKind::Trivial),
            other => Err(Error::Parse(format!("unknown semifield `{other}`"))),
        }
    }
}

impl fmt::Display for SemifieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn parse_rational(text: &str) -> Option<BigRational> {
    match text.split_once('/') {
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).ok()?;
            let d = BigInt::from_str(den.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n = BigInt::from_str(text).ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

/// An exact scalar tagged with its semifield.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    TropInt(BigInt),
    TropRat(BigRational),
    RatPos(BigRational),
    Trivial,
}

impl Value {
    /// Wraps an integer as a `trop-int` scalar.
    pub fn trop_int<T: Into<BigInt>>(n: T) -> Value {
        Value::TropInt(n.into())
    }

    /// Wraps a rational as a `trop-rat` scalar.
    pub fn trop_rat<T: Into<BigInt>>(num: T, den: T) -> Value {
        Value::TropRat(BigRational::new(num.into(), den.into()))
    }

    /// Wraps a strictly positive rational as a `rat-pos` scalar.
    pub fn rat_pos(q: BigRational) -> Result<Value> {
        if q.is_positive() {
            Ok(Value::RatPos(q))
        } else {
            Err(Error::NotPositive(q.to_string()))
        }
    }

    /// Convenience constructor for positive rationals from integer parts.
    pub fn rat_pos_from<T: Into<BigInt>>(num: T, den: T) -> Result<Value> {
        Value::rat_pos(BigRational::new(num.into(), den.into()))
    }

    pub fn kind(&self) -> SemifieldKind {
        match self {
            Value::TropInt(_) => SemifieldKind::TropInt,
            Value::TropRat(_) => SemifieldKind::TropRat,
            Value::RatPos(_) => SemifieldKind::RatPos,
            Value::Trivial => SemifieldKind::Trivial,
        }
    }

    fn same_kind(&self, other: &Value) -> Result<()> {
        if self.kind() == other.kind() {
            Ok(())
        } else {
            Err(Error::MixedSemifields(
                self.kind().name().to_string(),
                other.kind().name().to_string(),
            ))
        }
    }

    /// Semifield sum `a ⊕ b`: `min` for tropical kinds, `+` for `rat-pos`.
    pub fn splus(&self, other: &Value) -> Result<Value> {
        self.same_kind(other)?;
        Ok(match (self, other) {
            (Value::TropInt(a), Value::TropInt(b)) => Value::TropInt(a.min(b).clone()),
            (Value::TropRat(a), Value::TropRat(b)) => Value::TropRat(a.min(b).clone()),
            (Value::RatPos(a), Value::RatPos(b)) => Value::RatPos(a + b),
            _ => Value::Trivial,
        })
    }

    /// Semifield product `a ⊗ b`: `+` for tropical kinds, `×` for `rat-pos`.
    pub fn sprod(&self, other: &Value) -> Result<Value> {
        self.same_kind(other)?;
        Ok(match (self, other) {
            (Value::TropInt(a), Value::TropInt(b)) => Value::TropInt(a + b),
            (Value::TropRat(a), Value::TropRat(b)) => Value::TropRat(a + b),
            (Value::RatPos(a), Value::RatPos(b)) => Value::RatPos(a * b),
            _ => Value::Trivial,
        })
    }

    /// Multiplicative inverse `a⁻¹`: negation for tropical kinds,
    /// reciprocal for `rat-pos`.
    pub fn sinv(&self) -> Value {
        match self {
            Value::TropInt(a) => Value::TropInt(-a),
            Value::TropRat(a) => Value::TropRat(-a),
            Value::RatPos(a) => Value::RatPos(a.recip()),
            Value::Trivial => Value::Trivial,
        }
    }

    /// Quotient `a ⊗ b⁻¹`.
    pub fn sdiv(&self, other: &Value) -> Result<Value> {
        self.sprod(&other.sinv())
    }

    /// True when this is the multiplicative unit of its semifield.
    pub fn is_one(&self) -> bool {
        *self == self.kind().one()
    }

    /// Membership in the nonnegative part `K+` (tropical kinds only):
    /// the scalar is `≥ 0` as a real number.
    pub fn in_plus_part(&self) -> Result<bool> {
        match self {
            Value::TropInt(a) => Ok(!a.is_negative()),
            Value::TropRat(a) => Ok(!a.is_negative()),
            _ => Err(Error::NoPlusPart(self.kind().name().to_string())),
        }
    }

    /// Strict positivity as a real number (tropical kinds only).
    pub fn is_strictly_positive(&self) -> Result<bool> {
        match self {
            Value::TropInt(a) => Ok(a.is_positive()),
            Value::TropRat(a) => Ok(a.is_positive()),
            _ => Err(Error::NoPlusPart(self.kind().name().to_string())),
        }
    }

    /// The exact additive half: the `x` with `x + x = a` in the underlying
    /// field. Only `rat-pos` supports this.
    pub fn halve(&self) -> Result<Value> {
        match self {
            Value::RatPos(a) => Ok(Value::RatPos(a / BigRational::from_integer(2.into()))),
            _ => Err(Error::Unsupported {
                op: "halve",
                kind: self.kind().name().to_string(),
            }),
        }
    }

    /// Field subtraction `a - b` for `rat-pos`, checked to land back in the
    /// semifield (strictly positive).
    pub fn field_sub(&self, other: &Value) -> Result<Value> {
        self.same_kind(other)?;
        match (self, other) {
            (Value::RatPos(a), Value::RatPos(b)) => Value::rat_pos(a - b),
            _ => Err(Error::Unsupported {
                op: "field_sub",
                kind: self.kind().name().to_string(),
            }),
        }
    }

    /// Image under the unique semifield homomorphism onto `{1}`.
    pub fn to_trivial(&self) -> Value {
        Value::Trivial
    }

    /// Comparison in the real order (numeric kinds; `trivial` compares
    /// equal to itself).
    pub fn real_cmp(&self, other: &Value) -> Result<Ordering> {
        self.same_kind(other)?;
        Ok(match (self, other) {
            (Value::TropInt(a), Value::TropInt(b)) => a.cmp(b),
            (Value::TropRat(a), Value::TropRat(b)) => a.cmp(b),
            (Value::RatPos(a), Value::RatPos(b)) => a.cmp(b),
            _ => Ordering::Equal,
        })
    }

    /// `a ≥ b` in the real order.
    pub fn real_ge(&self, other: &Value) -> Result<bool> {
        Ok(self.real_cmp(other)? != Ordering::Less)
    }

    /// The smaller of two values in the real order.
    pub fn real_min(&self, other: &Value) -> Result<Value> {
        Ok(if self.real_cmp(other)? == Ordering::Greater {
            other.clone()
        } else {
            self.clone()
        })
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::TropInt(a) => write!(f, "{a}"),
            Value::TropRat(a) => write!(f, "{a}"),
            Value::RatPos(a) => write!(f, "{a}"),
            Value::Trivial => write!(f, "1"),
        }
    }
}
