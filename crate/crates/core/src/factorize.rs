//! Irreducibility certificates and the enumeration, counting, and length of
//! irreducible factorizations of elements of Z[sqrt(-5)], together with an
//! ideal-free brute-force oracle.
//!
//! An element is irreducible exactly when its principal ideal is prime or the
//! product of two nonprincipal prime ideals. Every factorization of α arises
//! by pairing up the nonprincipal prime ideal factors of ⟨α⟩, so enumeration
//! and counting reduce to the multiset pairing engine.

use crate::arith::isqrt;
use crate::class_group::{is_principal, IdealClass};
use crate::elem::QuadInt;
use crate::error::{Error, Result};
use crate::ideal::QuadIdeal;
use crate::pairing::{count_pairings, enumerate_pairings};
use crate::primes::{factor_ideal_with_bound, PrimeFactorization, DEFAULT_FACTOR_BOUND};
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// Norm bound for the brute-force divisor-search oracle.
pub const DEFAULT_ORACLE_BOUND: i128 = 1_000_000;

/// Why a given element is or is not irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    Zero,
    Unit,
    /// ⟨α⟩ is itself a prime ideal; α is a prime element.
    PrimeElement(QuadIdeal),
    /// ⟨α⟩ = P₁·P₂ with both factors nonprincipal prime ideals.
    TwoNonprincipal(QuadIdeal, QuadIdeal),
    /// A witness splitting α = x·y into two nonunits.
    Reducible(QuadInt, QuadInt),
}

impl IrreducibilityCertificate {
    pub fn is_irreducible(&self) -> bool {
        matches!(
            self,
            IrreducibilityCertificate::PrimeElement(_)
                | IrreducibilityCertificate::TwoNonprincipal(..)
        )
    }
}

/// A factorization into irreducibles, up to order and units: a sorted
/// multiset of canonical-associate factors and the residual unit sign, with
/// unit · Π factors equal to the factored element exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    unit: i8,
    factors: Vec<QuadInt>,
}

impl Factorization {
    fn new(unit: i8, mut factors: Vec<QuadInt>) -> Self {
        factors.sort();
        Factorization { unit, factors }
    }

    pub fn unit(&self) -> i8 {
        self.unit
    }

    pub fn factors(&self) -> &[QuadInt] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// unit · Π factors.
    pub fn product(&self) -> Result<QuadInt> {
        let d = self.factors.first().map(|f| f.d()).unwrap_or(-5);
        let mut acc = QuadInt::new(self.unit as i128, 0, d)?;
        for f in &self.factors {
            acc = acc.checked_mul(f)?;
        }
        Ok(acc)
    }
}

impl PartialOrd for Factorization {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Factorization {
    fn cmp(&self, other: &Self) -> Ordering {
        self.factors.cmp(&other.factors).then(self.unit.cmp(&other.unit))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit == -1 {
            write!(f, "-1")?;
            if !self.factors.is_empty() {
                write!(f, " * ")?;
            }
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if factor.is_rational() {
                write!(f, "{factor}")?;
            } else {
                write!(f, "({factor})")?;
            }
        }
        Ok(())
    }
}

fn require_zm5(x: &QuadInt) -> Result<()> {
    if x.d() == -5 {
        Ok(())
    } else {
        Err(Error::UnsupportedRing { d: x.d() })
    }
}

/// Splits a factorization of ⟨x⟩ into the generators of its principal prime
/// factors (with multiplicity) and the nonprincipal primes with their
/// multiplicities.
fn split_by_class(pf: &PrimeFactorization) -> Result<(Vec<QuadInt>, Vec<(QuadIdeal, u64)>)> {
    let mut fixed = Vec::new();
    let mut nonprincipal = Vec::new();
    for factor in pf.factors() {
        match factor.class {
            IdealClass::Principal => {
                let gen = is_principal(&factor.ideal)?
                    .expect("factor labelled principal must have a generator");
                for _ in 0..factor.exponent {
                    fixed.push(gen);
                }
            }
            IdealClass::NonPrincipal => {
                nonprincipal.push((factor.ideal, factor.exponent as u64));
            }
        }
    }
    Ok((fixed, nonprincipal))
}

/// Decides irreducibility of x via the prime factorization of ⟨x⟩ and
/// returns a checkable certificate.
pub fn is_irreducible(x: &QuadInt) -> Result<IrreducibilityCertificate> {
    is_irreducible_with_bound(x, DEFAULT_FACTOR_BOUND)
}

pub fn is_irreducible_with_bound(x: &QuadInt, bound: i128) -> Result<IrreducibilityCertificate> {
    require_zm5(x)?;
    if x.is_zero() {
        return Ok(IrreducibilityCertificate::Zero);
    }
    if x.is_unit() {
        return Ok(IrreducibilityCertificate::Unit);
    }
    let pf = factor_ideal_with_bound(&QuadIdeal::principal(x)?, bound)?;
    let (principal_mult, nonprincipal_mult) = pf.multiplicity_by_class();
    let total = principal_mult + nonprincipal_mult;
    if total == 1 {
        return Ok(IrreducibilityCertificate::PrimeElement(pf.factors()[0].ideal));
    }
    if principal_mult == 0 && nonprincipal_mult == 2 {
        let mut primes = Vec::new();
        for f in pf.factors() {
            for _ in 0..f.exponent {
                primes.push(f.ideal);
            }
        }
        return Ok(IrreducibilityCertificate::TwoNonprincipal(primes[0], primes[1]));
    }
    // reducible: extract a proper principal sub-product as a witness
    let (fixed, nonprincipal) = split_by_class(&pf)?;
    let left = if let Some(gen) = fixed.first() {
        *gen
    } else {
        // all prime factors nonprincipal, at least four of them: the product
        // of the first two (with multiplicity) is principal
        let mut with_mult = Vec::new();
        for (ideal, m) in &nonprincipal {
            for _ in 0..*m {
                with_mult.push(*ideal);
            }
        }
        let product = with_mult[0].mul(&with_mult[1])?;
        is_principal(&product)?.expect("product of two nonprincipal ideals is principal")
    };
    let right = x.checked_div(&left)?;
    debug_assert!(!left.is_unit() && !right.is_unit());
    Ok(IrreducibilityCertificate::Reducible(left, right))
}

/// All irreducible factorizations of x, up to order and units, via ideal
/// pairing: principal primes of ⟨x⟩ contribute fixed factors, and every
/// pair-covering of the nonprincipal primes contributes the generators of
/// its pair products.
pub fn enumerate_factorizations(x: &QuadInt) -> Result<Vec<Factorization>> {
    enumerate_factorizations_with_bound(x, DEFAULT_FACTOR_BOUND)
}

pub fn enumerate_factorizations_with_bound(
    x: &QuadInt,
    bound: i128,
) -> Result<Vec<Factorization>> {
    require_zm5(x)?;
    if x.is_zero() || x.is_unit() {
        return Err(Error::NotFactorable);
    }
    let pf = factor_ideal_with_bound(&QuadIdeal::principal(x)?, bound)?;
    let (fixed, nonprincipal) = split_by_class(&pf)?;
    let multiplicities: Vec<u64> = nonprincipal.iter().map(|&(_, m)| m).collect();

    // generators of the pairwise products, computed once per index pair
    let mut pair_generator: HashMap<(usize, usize), QuadInt> = HashMap::new();
    let mut result: BTreeSet<Factorization> = BTreeSet::new();
    for pairing in enumerate_pairings(&multiplicities) {
        let mut factors = fixed.clone();
        for (i, j) in pairing {
            let gen = match pair_generator.get(&(i, j)) {
                Some(g) => *g,
                None => {
                    let product = nonprincipal[i].0.mul(&nonprincipal[j].0)?;
                    let g = is_principal(&product)?
                        .expect("product of two nonprincipal prime ideals is principal");
                    pair_generator.insert((i, j), g);
                    g
                }
            };
            factors.push(gen);
        }
        let trial = Factorization::new(1, factors);
        let product = trial.product()?;
        let factorization = if &product == x {
            trial
        } else {
            debug_assert_eq!(-product, *x);
            Factorization { unit: -1, ..trial }
        };
        result.insert(factorization);
    }
    Ok(result.into_iter().collect())
}

/// η(x): the number of irreducible factorizations of x, computed by the
/// pairing dynamic program without enumerating them.
pub fn count_factorizations(x: &QuadInt) -> Result<u64> {
    count_factorizations_with_bound(x, DEFAULT_FACTOR_BOUND)
}

pub fn count_factorizations_with_bound(x: &QuadInt, bound: i128) -> Result<u64> {
    require_zm5(x)?;
    if x.is_zero() || x.is_unit() {
        return Err(Error::NotFactorable);
    }
    let pf = factor_ideal_with_bound(&QuadIdeal::principal(x)?, bound)?;
    let (_, nonprincipal) = split_by_class(&pf)?;
    let multiplicities: Vec<u64> = nonprincipal.iter().map(|&(_, m)| m).collect();
    Ok(count_pairings(&multiplicities))
}

/// The common length of every irreducible factorization of x: with
/// ⟨x⟩ = P₁ ⋯ P_k and d of the Pᵢ principal, the length is d + (k − d)/2.
pub fn factorization_length(x: &QuadInt) -> Result<u64> {
    factorization_length_with_bound(x, DEFAULT_FACTOR_BOUND)
}

pub fn factorization_length_with_bound(x: &QuadInt, bound: i128) -> Result<u64> {
    require_zm5(x)?;
    if x.is_zero() || x.is_unit() {
        return Err(Error::NotFactorable);
    }
    let pf = factor_ideal_with_bound(&QuadIdeal::principal(x)?, bound)?;
    let (principal_mult, nonprincipal_mult) = pf.multiplicity_by_class();
    debug_assert_eq!(nonprincipal_mult % 2, 0);
    Ok(principal_mult + nonprincipal_mult / 2)
}

/// η_{X₃}: the closed double-sum formula for the number of pairings of a
/// three-atom multiset with sorted multiplicities x1 ≤ x2 ≤ x3 and
/// x1 + x2 + x3 = 2·x4. Terms whose inner minimum is negative contribute 0.
pub fn eta_x3(x1: i64, x2: i64, x3: i64, x4: i64) -> Result<u64> {
    if x1 < 0 || x2 < 0 || x3 < 0 || x4 < 0 {
        return Err(Error::Domain("eta_x3 arguments must be nonnegative".into()));
    }
    if !(x1 <= x2 && x2 <= x3) {
        return Err(Error::Domain(format!(
            "eta_x3 multiplicities must be sorted: ({x1}, {x2}, {x3})"
        )));
    }
    if x1 + x2 + x3 != 2 * x4 {
        return Err(Error::Domain(format!(
            "eta_x3 requires x1 + x2 + x3 = 2·x4, got {} vs {}",
            x1 + x2 + x3,
            2 * x4
        )));
    }
    let mut total: u64 = 0;
    for j in 0..=x1 / 2 {
        for k in 0..=x1 - 2 * j {
            let m = (x2 - k).min(x3 - x1 + 2 * j + k);
            if m < 0 {
                continue;
            }
            total += (m / 2 + 1) as u64;
        }
    }
    Ok(total)
}

/// Brute-force oracle: every irreducible factorization of x found by
/// recursive divisor search over the definite form a² + 5b², using element
/// arithmetic only — no ideals. Intended as an independent check of
/// [`enumerate_factorizations`].
pub fn brute_force_factorizations(x: &QuadInt) -> Result<Vec<Factorization>> {
    brute_force_factorizations_with_bound(x, DEFAULT_ORACLE_BOUND)
}

pub fn brute_force_factorizations_with_bound(
    x: &QuadInt,
    bound: i128,
) -> Result<Vec<Factorization>> {
    require_zm5(x)?;
    if x.is_zero() || x.is_unit() {
        return Err(Error::NotFactorable);
    }
    let n = x.norm();
    if n > bound {
        return Err(Error::Capacity { value: n, bound });
    }
    let mut oracle = Oracle { irreducible: HashMap::new() };
    let mut out = Vec::new();
    let mut acc = Vec::new();
    oracle.search(x, (0, 0, 0), &mut acc, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

struct Oracle {
    irreducible: HashMap<(i128, i128), bool>,
}

impl Oracle {
    /// Canonical divisors y of q with 1 < N(y) ≤ max_norm, ascending.
    fn divisors(&self, q: &QuadInt, max_norm: i128) -> Vec<QuadInt> {
        let n = q.norm();
        let mut found = Vec::new();
        let bmax = isqrt(max_norm / 5);
        for b in -bmax..=bmax {
            let rest = max_norm - 5 * b * b;
            let amax = isqrt(rest);
            for a in 0..=amax {
                if a == 0 && b <= 0 {
                    continue;
                }
                let ny = a * a + 5 * b * b;
                if ny <= 1 || n % ny != 0 {
                    continue;
                }
                let y = QuadInt::zm5(a, b);
                if q.checked_div(&y).is_ok() {
                    found.push(y);
                }
            }
        }
        found.sort();
        found
    }

    fn is_irreducible(&mut self, y: &QuadInt) -> bool {
        let key = (y.a(), y.b());
        if let Some(&known) = self.irreducible.get(&key) {
            return known;
        }
        // a proper divisor has a nonunit cofactor, and the smallest nonunit
        // norm in Z[sqrt(-5)] is 4, so searching norms up to N(y)/4 suffices
        let answer = self.divisors(y, y.norm() / 4).is_empty();
        self.irreducible.insert(key, answer);
        answer
    }

    /// Extends acc by irreducible divisors in non-decreasing canonical order,
    /// so each factorization multiset is produced exactly once.
    fn search(
        &mut self,
        q: &QuadInt,
        min_key: (i128, i128, i128),
        acc: &mut Vec<QuadInt>,
        out: &mut Vec<Factorization>,
    ) {
        if q.is_unit() {
            out.push(Factorization::new(q.a() as i8, acc.clone()));
            return;
        }
        for y in self.divisors(q, q.norm()) {
            if y.sort_key() < min_key || !self.is_irreducible(&y) {
                continue;
            }
            let rest = q.checked_div(&y).expect("y divides q");
            acc.push(y);
            self.search(&rest, y.sort_key(), acc, out);
            acc.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class_group::ideal_class;

    fn q(a: i128, b: i128) -> QuadInt {
        QuadInt::zm5(a, b)
    }

    fn ideal(gens: &[QuadInt]) -> QuadIdeal {
        QuadIdeal::from_generators(gens).unwrap()
    }

    #[test]
    fn certificates_for_named_elements() {
        // ⟨1 + sqrt(-5)⟩ = ⟨2, 1+sqrt(-5)⟩ · ⟨3, 1-2sqrt(-5)⟩
        match is_irreducible(&q(1, 1)).unwrap() {
            IrreducibilityCertificate::TwoNonprincipal(p1, p2) => {
                assert_eq!(p1.hnf(), (2, 1, 1));
                assert_eq!(p2.hnf(), (3, 1, 1));
                assert_eq!(p1.mul(&p2).unwrap(), ideal(&[q(1, 1)]));
            }
            other => panic!("expected TwoNonprincipal, got {other:?}"),
        }
        match is_irreducible(&q(3, 0)).unwrap() {
            IrreducibilityCertificate::TwoNonprincipal(p1, p2) => {
                assert_eq!(p1.hnf(), (3, 1, 1));
                assert_eq!(p2.hnf(), (3, 2, 1));
            }
            other => panic!("expected TwoNonprincipal, got {other:?}"),
        }
        match is_irreducible(&q(6, 0)).unwrap() {
            IrreducibilityCertificate::Reducible(a, b) => {
                assert!(!a.is_unit() && !b.is_unit());
                assert_eq!(a * b, q(6, 0));
            }
            other => panic!("expected Reducible, got {other:?}"),
        }
        match is_irreducible(&q(11, 0)).unwrap() {
            IrreducibilityCertificate::PrimeElement(p) => assert_eq!(p.hnf(), (11, 0, 11)),
            other => panic!("expected PrimeElement, got {other:?}"),
        }
        assert_eq!(is_irreducible(&q(0, 0)).unwrap(), IrreducibilityCertificate::Zero);
        assert_eq!(is_irreducible(&q(-1, 0)).unwrap(), IrreducibilityCertificate::Unit);
    }

    #[test]
    fn reducible_witness_with_all_nonprincipal_primes() {
        // ⟨4⟩ = ⟨2, 1+sqrt(-5)⟩⁴: witness must come from a pair product
        match is_irreducible(&q(4, 0)).unwrap() {
            IrreducibilityCertificate::Reducible(a, b) => {
                assert_eq!(a * b, q(4, 0));
                assert_eq!(a, q(2, 0));
            }
            other => panic!("expected Reducible, got {other:?}"),
        }
    }

    #[test]
    fn the_two_factorizations_of_six() {
        let fs = enumerate_factorizations(&q(6, 0)).unwrap();
        assert_eq!(fs.len(), 2);
        let rendered: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
        assert_eq!(
            rendered,
            vec!["2 * 3", "(1-1*sqrt(-5)) * (1+1*sqrt(-5))"]
        );
        for f in &fs {
            assert_eq!(f.len(), 2);
            assert_eq!(f.product().unwrap(), q(6, 0));
        }
    }

    #[test]
    fn prime_elements_have_one_factorization() {
        let fs = enumerate_factorizations(&q(11, 0)).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].factors(), &[q(11, 0)]);
        assert_eq!(fs[0].unit(), 1);
    }

    #[test]
    fn four_factors_only_as_two_times_two() {
        let fs = enumerate_factorizations(&q(4, 0)).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].factors(), &[q(2, 0), q(2, 0)]);
    }

    #[test]
    fn nine_has_two_factorizations() {
        let fs = enumerate_factorizations(&q(9, 0)).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(count_factorizations(&q(9, 0)).unwrap(), 2);
        let expected: Vec<Vec<QuadInt>> =
            vec![vec![q(2, -1), q(2, 1)], vec![q(3, 0), q(3, 0)]];
        let got: Vec<Vec<QuadInt>> = fs.iter().map(|f| f.factors().to_vec()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn negative_elements_carry_the_unit() {
        let fs = enumerate_factorizations(&q(-6, 0)).unwrap();
        assert_eq!(fs.len(), 2);
        for f in &fs {
            assert_eq!(f.unit(), -1);
            assert_eq!(f.product().unwrap(), q(-6, 0));
        }
    }

    #[test]
    fn count_and_length_of_1980() {
        let x = q(1980, 0);
        assert_eq!(count_factorizations(&x).unwrap(), 6);
        assert_eq!(factorization_length(&x).unwrap(), 7);
        let fs = enumerate_factorizations(&x).unwrap();
        assert_eq!(fs.len(), 6);
        for f in &fs {
            assert_eq!(f.len(), 7);
            assert_eq!(f.product().unwrap(), x);
        }
        // the six factorizations, frozen after oracle cross-validation
        let rendered: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
        assert_eq!(
            rendered,
            vec![
                "-1 * 2 * 2 * (sqrt(-5)) * (sqrt(-5)) * (2-1*sqrt(-5)) * (2+1*sqrt(-5)) * 11",
                "-1 * 2 * 2 * (sqrt(-5)) * (sqrt(-5)) * 3 * 3 * 11",
                "2 * (sqrt(-5)) * (sqrt(-5)) * (1-1*sqrt(-5)) * (1-1*sqrt(-5)) * (2-1*sqrt(-5)) * 11",
                "-1 * 2 * (sqrt(-5)) * (sqrt(-5)) * (1-1*sqrt(-5)) * (1+1*sqrt(-5)) * 3 * 11",
                "2 * (sqrt(-5)) * (sqrt(-5)) * (1+1*sqrt(-5)) * (1+1*sqrt(-5)) * (2+1*sqrt(-5)) * 11",
                "-1 * (sqrt(-5)) * (sqrt(-5)) * (1-1*sqrt(-5)) * (1-1*sqrt(-5)) * (1+1*sqrt(-5)) * (1+1*sqrt(-5)) * 11",
            ]
        );
    }

    #[test]
    fn lengths_of_small_elements() {
        assert_eq!(factorization_length(&q(6, 0)).unwrap(), 2);
        assert_eq!(factorization_length(&q(11, 0)).unwrap(), 1);
        assert_eq!(factorization_length(&q(5, 0)).unwrap(), 2);
    }

    #[test]
    fn units_and_zero_are_not_factorable() {
        assert_eq!(enumerate_factorizations(&q(1, 0)), Err(Error::NotFactorable));
        assert_eq!(count_factorizations(&q(-1, 0)), Err(Error::NotFactorable));
        assert_eq!(factorization_length(&q(0, 0)), Err(Error::NotFactorable));
        assert_eq!(brute_force_factorizations(&q(0, 0)), Err(Error::NotFactorable));
    }

    #[test]
    fn eta_x3_paper_value_and_edges() {
        assert_eq!(eta_x3(2, 2, 4, 4).unwrap(), 6);
        assert_eq!(eta_x3(0, 0, 0, 0).unwrap(), 1);
        assert_eq!(eta_x3(1, 1, 2, 2).unwrap(), 2);
        assert_eq!(eta_x3(2, 3, 5, 5).unwrap(), 7);
        assert!(eta_x3(2, 1, 4, 4).is_err()); // unsorted
        assert!(eta_x3(1, 1, 1, 2).is_err()); // odd total
        assert!(eta_x3(-1, 1, 2, 1).is_err());
    }

    #[test]
    fn eta_x3_matches_pairing_dp() {
        for x1 in 0..=8i64 {
            for x2 in x1..=8 {
                for x3 in x2..=8 {
                    let total = x1 + x2 + x3;
                    if total % 2 != 0 {
                        continue;
                    }
                    let by_formula = eta_x3(x1, x2, x3, total / 2).unwrap();
                    let by_dp = count_pairings(&[x1 as u64, x2 as u64, x3 as u64]);
                    assert_eq!(by_formula, by_dp, "({x1},{x2},{x3})");
                }
            }
        }
    }

    #[test]
    fn oracle_agrees_on_named_elements() {
        for x in [q(6, 0), q(4, 0), q(9, 0), q(11, 0), q(1, 1), q(-6, 0), q(30, 0)] {
            let by_ideals = enumerate_factorizations(&x).unwrap();
            let by_search = brute_force_factorizations(&x).unwrap();
            assert_eq!(by_ideals, by_search, "x = {x}");
        }
    }

    #[test]
    fn oracle_agrees_on_sampled_elements_up_to_norm_one_million() {
        // hand-picked elements with norms between 10^4 and 10^6, mixing
        // ramified, split and inert prime content
        let samples = [
            q(462, 0),    // 2·3·7·11, norm 213444
            q(0, 66),     // 66·sqrt(-5), norm 21780
            q(300, 30),   // norm 94500
            q(-252, 126), // norm 142884
            q(31, 131),   // norm 86766
            q(900, 90),   // norm 850500
            q(123, 256),  // norm 342809
        ];
        for x in samples {
            assert!(x.norm() <= 1_000_000, "sample {x} too large");
            let by_ideals = enumerate_factorizations(&x).unwrap();
            let by_search = brute_force_factorizations(&x).unwrap();
            assert_eq!(by_ideals, by_search, "x = {x}");
            let len = factorization_length(&x).unwrap();
            assert!(by_ideals.iter().all(|f| f.len() as u64 == len), "x = {x}");
        }
    }

    #[test]
    fn eta_x3_counts_elements_with_three_distinct_nonprincipal_primes() {
        // ⟨6⟩ has nonprincipal multiplicities (1, 1, 2); ⟨1980⟩ has (2, 2, 4)
        assert_eq!(
            count_factorizations(&q(6, 0)).unwrap(),
            eta_x3(1, 1, 2, 2).unwrap()
        );
        assert_eq!(
            count_factorizations(&q(1980, 0)).unwrap(),
            eta_x3(2, 2, 4, 4).unwrap()
        );
        // ⟨792⟩ = ⟨2,1+√-5⟩⁶ · ⟨3,1-2√-5⟩² · ⟨3,1+2√-5⟩² · ⟨11⟩
        let x = q(792, 0);
        let pf = crate::primes::factor_ideal(&QuadIdeal::principal(&x).unwrap()).unwrap();
        let mut mults: Vec<i64> = pf
            .factors()
            .iter()
            .filter(|f| f.class == IdealClass::NonPrincipal)
            .map(|f| f.exponent as i64)
            .collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![2, 2, 6]);
        let total: i64 = mults.iter().sum();
        assert_eq!(
            count_factorizations(&x).unwrap(),
            eta_x3(mults[0], mults[1], mults[2], total / 2).unwrap(),
            "x = {x}"
        );
    }

    #[test]
    fn oracle_respects_its_bound() {
        assert!(matches!(
            brute_force_factorizations_with_bound(&q(1980, 0), 1000),
            Err(Error::Capacity { .. })
        ));
        let fs = brute_force_factorizations_with_bound(&q(1980, 0), 5_000_000).unwrap();
        assert_eq!(fs.len(), 6);
        assert!(fs.iter().all(|f| f.len() == 7));
    }

    #[test]
    fn norm_prime_elements_are_irreducible() {
        // if N(α) is a rational prime, α is irreducible
        for (a, b) in [(1, 1), (1, -1), (0, 1), (3, 2), (4, 1), (1, 2)] {
            let x = q(a, b);
            if crate::primes::is_rational_prime(x.norm()) {
                assert!(is_irreducible(&x).unwrap().is_irreducible(), "x = {x}");
            }
        }
    }

    #[test]
    fn certificate_soundness_for_two_nonprincipal() {
        for x in [q(2, 0), q(3, 0), q(1, 1), q(1, -1), q(7, 0)] {
            if let IrreducibilityCertificate::TwoNonprincipal(p1, p2) =
                is_irreducible(&x).unwrap()
            {
                assert_eq!(p1.mul(&p2).unwrap(), QuadIdeal::principal(&x).unwrap());
                assert_eq!(ideal_class(&p1).unwrap(), IdealClass::NonPrincipal);
                assert_eq!(ideal_class(&p2).unwrap(), IdealClass::NonPrincipal);
            }
        }
    }
}
