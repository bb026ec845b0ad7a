//! Invariant sweeps behind the CLI `selftest` subcommand: deterministic
//! randomized and exhaustive checks of the norm laws, inverse construction,
//! class group structure, splitting law, half-factoriality, the Hilbert
//! monoid, and the closed counting formula.

use crate::class_group::{ideal_class, ideal_divide, inverse_pair, IdealClass};
use crate::elem::QuadInt;
use crate::error::Result;
use crate::factorize::{
    brute_force_factorizations_with_bound, count_factorizations_with_bound,
    enumerate_factorizations_with_bound, eta_x3, factorization_length_with_bound,
};
use crate::hilbert::{self, HilbertElement};
use crate::ideal::QuadIdeal;
use crate::pairing::count_pairings;
use crate::primes::{classify_prime, factor_rational_prime, is_rational_prime, sqrt_neg5_mod, SplitType};

/// Outcome of one named invariant suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfTestReport {
    pub bound: i128,
    pub suites: Vec<SuiteResult>,
}

impl SelfTestReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(|s| s.failed == 0)
    }
}

/// xorshift64*: deterministic across platforms, no dependencies.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in [lo, hi].
    fn range(&mut self, lo: i128, hi: i128) -> i128 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next() % span) as i128
    }

    fn elem(&mut self, scale: i128) -> QuadInt {
        QuadInt::zm5(self.range(-scale, scale), self.range(-scale, scale))
    }

    fn nonzero_elem(&mut self, scale: i128) -> QuadInt {
        loop {
            let x = self.elem(scale);
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn ideal(&mut self, scale: i128) -> QuadIdeal {
        loop {
            let gens = [self.elem(scale), self.elem(scale)];
            if let Ok(ideal) = QuadIdeal::from_generators(&gens) {
                return ideal;
            }
        }
    }
}

struct Tally {
    passed: u64,
    failed: u64,
}

impl Tally {
    fn new() -> Self {
        Tally { passed: 0, failed: 0 }
    }

    fn check(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }

    fn into_result(self, name: &'static str) -> SuiteResult {
        SuiteResult { name, passed: self.passed, failed: self.failed }
    }
}

/// Runs every suite. `bound` caps the norm of the half-factoriality sweep
/// (and scales the Hilbert sweep); the randomized suites use fixed sizes.
pub fn run(bound: i128) -> Result<SelfTestReport> {
    let suites = vec![
        element_norm_laws(),
        ideal_norm_laws(),
        inverse_and_cancellation(),
        class_group_structure()?,
        splitting_law(),
        half_factoriality(bound)?,
        hilbert_monoid(bound)?,
        eta_formula_vs_dp(),
    ];
    Ok(SelfTestReport { bound, suites })
}

fn element_norm_laws() -> SuiteResult {
    let mut rng = Rng(0x5eed_0001);
    let mut tally = Tally::new();
    for _ in 0..5_000 {
        let x = rng.elem(50);
        let y = rng.elem(50);
        tally.check((x * y).norm() == x.norm() * y.norm());
        tally.check((x * y).conjugate() == x.conjugate() * y.conjugate());
        let self_product = x * x.conjugate();
        tally.check(self_product.is_rational() && self_product.a() == x.norm());
        tally.check((x.norm() == 0) == x.is_zero());
    }
    tally.into_result("element-norm-laws")
}

fn ideal_norm_laws() -> SuiteResult {
    let mut rng = Rng(0x5eed_0002);
    let mut tally = Tally::new();
    for _ in 0..2_000 {
        let i = rng.ideal(20);
        let j = rng.ideal(20);
        match i.mul(&j) {
            Ok(product) => {
                tally.check(product.norm() == i.norm() * j.norm());
                tally.check(product.check_invariants().is_ok());
            }
            Err(_) => tally.check(false),
        }
        let x = rng.nonzero_elem(50);
        match QuadIdeal::principal(&x) {
            Ok(ideal) => tally.check(ideal.norm() == x.norm()),
            Err(_) => tally.check(false),
        }
    }
    tally.into_result("ideal-norm-laws")
}

fn inverse_and_cancellation() -> SuiteResult {
    let mut rng = Rng(0x5eed_0003);
    let mut tally = Tally::new();
    for _ in 0..1_000 {
        let i = rng.ideal(20);
        match inverse_pair(&i) {
            Ok(pair) => {
                tally.check(pair.f == i.norm());
                let product = i.mul(&pair.conjugate).unwrap();
                let expected = QuadIdeal::principal(&QuadInt::zm5(pair.f, 0)).unwrap();
                tally.check(product == expected);
            }
            Err(_) => tally.check(false),
        }
        let j = rng.ideal(15);
        let k = rng.ideal(15);
        let left = i.mul(&j).unwrap();
        let right = i.mul(&k).unwrap();
        if left == right {
            tally.check(j == k);
        }
        tally.check(ideal_divide(&left, &i).map(|q| q == j).unwrap_or(false));
    }
    tally.into_result("inverse-and-cancellation")
}

fn class_group_structure() -> Result<SuiteResult> {
    let mut rng = Rng(0x5eed_0004);
    let mut tally = Tally::new();
    // the eight ideals of norm at most six, with their classes
    let all = QuadIdeal::all_with_norm_at_most(-5, 6)?;
    let got: Vec<((i128, i128, i128), IdealClass)> =
        all.iter().map(|i| Ok((i.hnf(), ideal_class(i)?))).collect::<Result<_>>()?;
    use IdealClass::{NonPrincipal, Principal};
    let expected = vec![
        ((1, 0, 1), Principal),
        ((2, 1, 1), NonPrincipal),
        ((3, 1, 1), NonPrincipal),
        ((3, 2, 1), NonPrincipal),
        ((2, 0, 2), Principal),
        ((5, 0, 1), Principal),
        ((6, 1, 1), Principal),
        ((6, 5, 1), Principal),
    ];
    let mut expected_sorted = expected;
    expected_sorted.sort_by_key(|((a, b, c), _)| (a * c, *a, *b, *c));
    tally.check(got == expected_sorted);
    // products of nonprincipal ideals are principal
    let mut pairs = 0;
    while pairs < 500 {
        let i = rng.ideal(20);
        let j = rng.ideal(20);
        if ideal_class(&i)? == NonPrincipal && ideal_class(&j)? == NonPrincipal {
            tally.check(ideal_class(&i.mul(&j).unwrap())? == Principal);
            pairs += 1;
        }
    }
    Ok(tally.into_result("class-group-structure"))
}

fn splitting_law() -> SuiteResult {
    let mut tally = Tally::new();
    for p in 2..=1000i128 {
        if !is_rational_prime(p) {
            continue;
        }
        let class = classify_prime(p).unwrap();
        if p != 2 && p != 5 {
            let root = sqrt_neg5_mod(p).unwrap();
            tally.check((class == SplitType::Split) == root.is_some());
        }
        let pf = factor_rational_prime(p).unwrap();
        let shape_ok = match class {
            SplitType::Ramified => {
                pf.factors().len() == 1
                    && pf.factors()[0].exponent == 2
                    && pf.factors()[0].ideal.norm() == p
            }
            SplitType::Split => {
                pf.factors().len() == 2
                    && pf.factors().iter().all(|f| f.exponent == 1 && f.ideal.norm() == p)
                    && pf.factors()[0].ideal != pf.factors()[1].ideal
            }
            SplitType::Inert => {
                pf.factors().len() == 1
                    && pf.factors()[0].exponent == 1
                    && pf.factors()[0].ideal.hnf() == (p, 0, p)
            }
        };
        tally.check(shape_ok);
        let rational = QuadIdeal::principal(&QuadInt::zm5(p, 0)).unwrap();
        tally.check(pf.product().map(|prod| prod == rational).unwrap_or(false));
    }
    tally.into_result("splitting-law")
}

fn half_factoriality(bound: i128) -> Result<SuiteResult> {
    let mut tally = Tally::new();
    let norm_bound = bound;
    let bmax = crate::arith::isqrt(norm_bound / 5);
    // one representative per associate pair: a > 0, or a = 0 and b > 0
    for b in -bmax..=bmax {
        for a in 0.. {
            if a == 0 && b <= 0 {
                continue;
            }
            let x = QuadInt::zm5(a, b);
            let n = x.norm();
            if n > norm_bound {
                break;
            }
            if n <= 1 {
                continue;
            }
            let by_ideals = enumerate_factorizations_with_bound(&x, norm_bound)?;
            let by_search = brute_force_factorizations_with_bound(&x, norm_bound)?;
            tally.check(by_ideals == by_search);
            let length = factorization_length_with_bound(&x, norm_bound)?;
            tally.check(by_ideals.iter().all(|f| f.len() as u64 == length));
            tally.check(count_factorizations_with_bound(&x, norm_bound)? == by_ideals.len() as u64);
            tally.check(by_ideals.iter().all(|f| f.product().ok().as_ref() == Some(&x)));
        }
    }
    Ok(tally.into_result("half-factoriality"))
}

fn hilbert_monoid(bound: i128) -> Result<SuiteResult> {
    let mut tally = Tally::new();
    // the Hilbert sweep scales one decade past the element sweep, matching
    // the natural sizes of the two systems
    let limit = (bound * 10).max(100) as u64;
    let mut k = 1;
    loop {
        let n = 1 + 4 * k;
        if n > limit {
            break;
        }
        let element = HilbertElement::new(n).unwrap();
        let fs = hilbert::enumerate_factorizations(element)?;
        tally.check(!fs.is_empty());
        let len = fs[0].len();
        tally.check(fs.iter().all(|f| f.len() == len));
        tally.check(hilbert::count_factorizations(element)? == fs.len() as u64);
        tally.check(fs.iter().all(|f| f.iter().product::<u64>() == n));
        k += 1;
    }
    Ok(tally.into_result("hilbert-monoid"))
}

fn eta_formula_vs_dp() -> SuiteResult {
    let mut tally = Tally::new();
    for x1 in 0..=12i64 {
        for x2 in x1..=12 {
            for x3 in x2..=12 {
                let total = x1 + x2 + x3;
                if total % 2 != 0 {
                    continue;
                }
                let formula = eta_x3(x1, x2, x3, total / 2);
                let dp = count_pairings(&[x1 as u64, x2 as u64, x3 as u64]);
                tally.check(formula == Ok(dp));
            }
        }
    }
    tally.into_result("eta-formula-vs-dp")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_bound() {
        let report = run(300).unwrap();
        assert_eq!(report.suites.len(), 8);
        for suite in &report.suites {
            assert_eq!(suite.failed, 0, "suite {} failed", suite.name);
            assert!(suite.passed > 0, "suite {} ran no checks", suite.name);
        }
        assert!(report.all_passed());
    }
}
