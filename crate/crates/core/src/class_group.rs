//! Ideal arithmetic specific to Z[sqrt(-5)]: the explicit inverse
//! construction I·conj(I) = ⟨f⟩, exact ideal division, principality testing,
//! and the two-element ideal class map.
//!
//! The class group of Z[sqrt(-5)] has order two, so "principal or not" is a
//! complete invariant of an ideal class.

use crate::arith::{gcd, isqrt, perfect_sqrt};
use crate::elem::QuadInt;
use crate::error::{Error, Result};
use crate::ideal::QuadIdeal;

/// The ideal class of a nonzero ideal of Z[sqrt(-5)].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealClass {
    Principal,
    NonPrincipal,
}

impl IdealClass {
    /// Group law of the class group Z₂.
    pub fn combine(self, other: IdealClass) -> IdealClass {
        if self == other {
            IdealClass::Principal
        } else {
            IdealClass::NonPrincipal
        }
    }
}

impl std::fmt::Display for IdealClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IdealClass::Principal => write!(f, "principal"),
            IdealClass::NonPrincipal => write!(f, "non-principal"),
        }
    }
}

/// The companion ideal J = conj(I) and scalar f > 0 with I·J = ⟨f⟩.
///
/// f always equals N(I).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversePair {
    pub conjugate: QuadIdeal,
    pub f: i128,
}

fn require_zm5(i: &QuadIdeal) -> Result<()> {
    if i.d() == -5 {
        Ok(())
    } else {
        Err(Error::UnsupportedRing { d: i.d() })
    }
}

fn ck_mul(x: i128, y: i128) -> Result<i128> {
    x.checked_mul(y).ok_or(Error::Overflow)
}

/// Computes J = conj(I) and f = gcd(α·conj(α), α·conj(β) + conj(α)·β, β·conj(β))
/// for the canonical generating pair (α, β) = (a, b + c·sqrt(-5)), so that
/// I·J = ⟨f⟩.
///
/// The gcd formula assumes the generator coordinates are coprime; the integer
/// content g of the pair (here always exactly c) is factored out first and f
/// is rescaled by g².
pub fn inverse_pair(i: &QuadIdeal) -> Result<InversePair> {
    require_zm5(i)?;
    let g = i.c();
    debug_assert_eq!(gcd(gcd(i.a(), i.b()), i.c()), g);
    let a1 = i.a() / g;
    let b1 = i.b() / g;
    // content-free pair is (a1, b1 + sqrt(-5)); the three gcd arguments are
    // a1², 2·a1·b1 and b1² + 5
    let f0 = gcd(
        ck_mul(a1, a1)?,
        gcd(ck_mul(2, ck_mul(a1, b1)?)?, ck_mul(b1, b1)?.checked_add(5).ok_or(Error::Overflow)?),
    );
    let f = ck_mul(ck_mul(g, g)?, f0)?;
    let conjugate = i.conjugate();
    debug_assert_eq!(f, i.norm());
    debug_assert_eq!(
        i.mul(&conjugate).unwrap(),
        QuadIdeal::principal(&QuadInt::zm5(f, 0)).unwrap()
    );
    Ok(InversePair { conjugate, f })
}

/// Exact ideal division: returns K with J·K = I, or [`Error::NotDivisible`]
/// when J does not contain I (containment and divisibility coincide here).
///
/// K is recovered as I·conj(J) scaled down by f = N(J).
pub fn ideal_divide(i: &QuadIdeal, j: &QuadIdeal) -> Result<QuadIdeal> {
    require_zm5(i)?;
    require_zm5(j)?;
    if !j.contains_ideal(i)? {
        return Err(Error::NotDivisible);
    }
    let pair = inverse_pair(j)?;
    let scaled = i.mul(&pair.conjugate)?;
    let f = pair.f;
    let (a, b, c) = scaled.hnf();
    if a % f != 0 || b % f != 0 || c % f != 0 {
        // cannot happen once containment holds
        return Err(Error::NotDivisible);
    }
    QuadIdeal::from_hnf(i.d(), a / f, b / f, c / f)
}

/// Searches for a generator: γ = x + y·sqrt(-5) with x² + 5y² = N(I),
/// γ ∈ I and ⟨γ⟩ = I. Returns the canonical associate, or None when I is
/// not principal.
///
/// The form x² + 5y² is positive definite, so |y| ≤ sqrt(N/5) bounds the
/// search.
pub fn is_principal(i: &QuadIdeal) -> Result<Option<QuadInt>> {
    require_zm5(i)?;
    let n = i.norm();
    let ymax = isqrt(n / 5);
    for y in 0..=ymax {
        let rest = n - 5 * y * y;
        let Some(x) = perfect_sqrt(rest) else { continue };
        let mut candidates: Vec<QuadInt> = Vec::with_capacity(2);
        if y == 0 {
            candidates.push(QuadInt::zm5(x, 0));
        } else if x == 0 {
            candidates.push(QuadInt::zm5(0, y));
        } else {
            candidates.push(QuadInt::zm5(x, y));
            candidates.push(QuadInt::zm5(x, -y));
        }
        for gamma in candidates {
            if i.contains(&gamma)? && QuadIdeal::principal(&gamma)? == *i {
                return Ok(Some(gamma));
            }
        }
    }
    Ok(None)
}

/// The class of I in the class group Z₂.
pub fn ideal_class(i: &QuadIdeal) -> Result<IdealClass> {
    Ok(match is_principal(i)? {
        Some(_) => IdealClass::Principal,
        None => IdealClass::NonPrincipal,
    })
}
