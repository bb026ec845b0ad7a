//! Exact arithmetic for elements a + b*sqrt(d) of the quadratic ring Z[sqrt(d)],
//! for squarefree d with d ≡ 2, 3 (mod 4), d not in {0, 1}.
//!
//! All coordinates are 128-bit integers with checked arithmetic; the intended
//! working scale is |a|, |b| ≤ 2^40, which the text parser enforces.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Parsed inputs are clamped to this coordinate bound.
pub const COORD_BOUND: i128 = 1 << 40;

/// Checks that `d` is an admissible ring parameter: squarefree,
/// d ≡ 2 or 3 (mod 4), and d ∉ {0, 1}.
pub fn validate_d(d: i128) -> Result<()> {
    if d == 0 || d == 1 {
        return Err(Error::InvalidRing { d, reason: "d must not be 0 or 1" });
    }
    let r = d.rem_euclid(4);
    if r != 2 && r != 3 {
        return Err(Error::InvalidRing { d, reason: "d must be 2 or 3 mod 4" });
    }
    let abs = d.unsigned_abs();
    let mut p: u128 = 2;
    while p * p <= abs {
        if abs % (p * p) == 0 {
            return Err(Error::InvalidRing { d, reason: "d must be squarefree" });
        }
        p += 1;
    }
    Ok(())
}

fn ck_add(x: i128, y: i128) -> Result<i128> {
    x.checked_add(y).ok_or(Error::Overflow)
}

fn ck_sub(x: i128, y: i128) -> Result<i128> {
    x.checked_sub(y).ok_or(Error::Overflow)
}

fn ck_mul(x: i128, y: i128) -> Result<i128> {
    x.checked_mul(y).ok_or(Error::Overflow)
}

fn ck_neg(x: i128) -> i128 {
    x.checked_neg().expect("negation exceeds 128-bit width")
}

/// An element a + b*sqrt(d) of Z[sqrt(d)] with exact integer coordinates.
///
/// `d` is carried on every value; operations on values from different rings
/// fail with [`Error::MismatchedRing`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadInt {
    a: i128,
    b: i128,
    d: i128,
}

impl QuadInt {
    /// Builds a + b*sqrt(d) after validating the ring parameter.
    pub fn new(a: i128, b: i128, d: i128) -> Result<Self> {
        validate_d(d)?;
        Ok(QuadInt { a, b, d })
    }

    /// Convenience constructor for the ring of primary interest, Z[sqrt(-5)].
    pub fn zm5(a: i128, b: i128) -> Self {
        QuadInt { a, b, d: -5 }
    }

    pub fn zero(d: i128) -> Result<Self> {
        Self::new(0, 0, d)
    }

    pub fn one(d: i128) -> Result<Self> {
        Self::new(1, 0, d)
    }

    pub fn a(&self) -> i128 {
        self.a
    }

    pub fn b(&self) -> i128 {
        self.b
    }

    pub fn d(&self) -> i128 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// True iff the element is rational, i.e. has no sqrt(d) part.
    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::MismatchedRing { left: self.d, right: other.d })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(QuadInt { a: ck_add(self.a, other.a)?, b: ck_add(self.b, other.b)?, d: self.d })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(QuadInt { a: ck_sub(self.a, other.a)?, b: ck_sub(self.b, other.b)?, d: self.d })
    }

    /// (a1 + b1√d)(a2 + b2√d) = (a1·a2 + d·b1·b2) + (a1·b2 + a2·b1)√d
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let a = ck_add(ck_mul(self.a, other.a)?, ck_mul(self.d, ck_mul(self.b, other.b)?)?)?;
        let b = ck_add(ck_mul(self.a, other.b)?, ck_mul(self.b, other.a)?)?;
        Ok(QuadInt { a, b, d: self.d })
    }

    fn checked_norm(&self) -> Result<i128> {
        ck_sub(ck_mul(self.a, self.a)?, ck_mul(self.d, ck_mul(self.b, self.b)?)?)
    }

    /// N(a + b√d) = a² − d·b²; for d < 0 this is ≥ 0 and vanishes only at 0.
    pub fn norm(&self) -> i128 {
        self.checked_norm().expect("norm exceeds 128-bit width")
    }

    /// Tr(a + b√d) = 2a.
    pub fn trace(&self) -> i128 {
        self.a.checked_mul(2).expect("trace exceeds 128-bit width")
    }

    /// The ring automorphism a + b√d ↦ a − b√d.
    pub fn conjugate(&self) -> Self {
        QuadInt { a: self.a, b: ck_neg(self.b), d: self.d }
    }

    /// True iff the element is invertible, i.e. |N| = 1. For d < 0 the only
    /// units are ±1.
    pub fn is_unit(&self) -> bool {
        self.checked_norm().map(|n| n == 1 || n == -1).unwrap_or(false)
    }

    /// Exact division: returns q with q·other == self, or [`Error::NotDivisible`].
    ///
    /// Multiplies by the conjugate and checks that both coordinates of
    /// self·conj(other) are divisible by N(other).
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.checked_mul(&other.conjugate())?;
        let n = other.checked_norm()?;
        if num.a % n != 0 || num.b % n != 0 {
            return Err(Error::NotDivisible);
        }
        Ok(QuadInt { a: num.a / n, b: num.b / n, d: self.d })
    }

    /// Δ[self, other] = 4d(a1·b2 − a2·b1)², the discriminant of the pair as a
    /// candidate integral basis.
    pub fn discriminant_pair(&self, other: &Self) -> Result<i128> {
        self.same_ring(other)?;
        let det = ck_sub(ck_mul(self.a, other.b)?, ck_mul(self.b, other.a)?)?;
        ck_mul(ck_mul(4, self.d)?, ck_mul(det, det)?)
    }

    /// The associate with a > 0, or a == 0 and b > 0, together with the unit
    /// sign relating it to `self` (canonical = sign · self). Zero maps to
    /// (zero, 1). Valid because the units of Z[sqrt(d)], d < 0, are ±1.
    pub fn canonical_associate(&self) -> (Self, i8) {
        let flip = self.a < 0 || (self.a == 0 && self.b < 0);
        if flip {
            (QuadInt { a: ck_neg(self.a), b: ck_neg(self.b), d: self.d }, -1)
        } else {
            (*self, 1)
        }
    }

    /// Deterministic ordering key: (norm, a, b).
    pub fn sort_key(&self) -> (i128, i128, i128) {
        (self.norm(), self.a, self.b)
    }

    /// Parses the canonical text form, e.g. "1+2*sqrt(-5)", "-3", "sqrt(-5)".
    ///
    /// Elements with no sqrt term live in the ring given by `default_d`.
    /// Coordinates and d are limited to |·| ≤ 2^40.
    pub fn parse(text: &str, default_d: i128) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut a: i128 = 0;
        let mut b: i128 = 0;
        let mut seen_d: Option<i128> = None;
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign: i128 = 1;
            match bytes[i] {
                b'+' => i += 1,
                b'-' => {
                    sign = -1;
                    i += 1;
                }
                _ => {}
            }
            if i >= bytes.len() {
                return Err(Error::Parse(format!("dangling sign in '{text}'")));
            }
            // optional integer literal
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let digits = &s[start..i];
            let coeff: Option<i128> = if digits.is_empty() {
                None
            } else {
                Some(digits.parse().map_err(|_| {
                    Error::Parse(format!("integer '{digits}' out of range in '{text}'"))
                })?)
            };
            // optional '*' then sqrt(...)
            let mut has_sqrt = false;
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
                if !s[i..].starts_with("sqrt(") {
                    return Err(Error::Parse(format!("expected sqrt(...) after '*' in '{text}'")));
                }
            }
            if s[i..].starts_with("sqrt(") {
                has_sqrt = true;
                i += 5;
                let close = s[i..]
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("missing ')' in '{text}'")))?;
                let inner = &s[i..i + close];
                let d: i128 = inner.parse().map_err(|_| {
                    Error::Parse(format!("invalid radicand '{inner}' in '{text}'"))
                })?;
                match seen_d {
                    None => seen_d = Some(d),
                    Some(prev) if prev == d => {}
                    Some(prev) => return Err(Error::MismatchedRing { left: prev, right: d }),
                }
                i += close + 1;
            }
            let term = sign * coeff.unwrap_or(1);
            if has_sqrt {
                b = ck_add(b, term)?;
            } else if coeff.is_some() {
                a = ck_add(a, term)?;
            } else {
                return Err(Error::Parse(format!("unexpected input at '{}'", &s[i..])));
            }
        }
        let d = seen_d.unwrap_or(default_d);
        for v in [a, b, d] {
            if v.abs() > COORD_BOUND {
                return Err(Error::Capacity { value: v, bound: COORD_BOUND });
            }
        }
        QuadInt::new(a, b, d)
    }
}

impl PartialOrd for QuadInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            return write!(f, "{}", self.a);
        }
        if self.a == 0 {
            return match self.b {
                1 => write!(f, "sqrt({})", self.d),
                -1 => write!(f, "-sqrt({})", self.d),
                b => write!(f, "{b}*sqrt({})", self.d),
            };
        }
        if self.b > 0 {
            write!(f, "{}+{}*sqrt({})", self.a, self.b, self.d)
        } else {
            write!(f, "{}-{}*sqrt({})", self.a, -self.b, self.d)
        }
    }
}

impl std::ops::Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        self.checked_add(&rhs).expect("quadratic integer addition failed")
    }
}

impl std::ops::Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        self.checked_sub(&rhs).expect("quadratic integer subtraction failed")
    }
}

impl std::ops::Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: QuadInt) -> QuadInt {
        self.checked_mul(&rhs).expect("quadratic integer multiplication failed")
    }
}

impl std::ops::Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { a: ck_neg(self.a), b: ck_neg(self.b), d: self.d }
    }
}
