//! The Hilbert monoid H = {1 + 4k | k ≥ 0} under multiplication: an
//! elementary half-factorial monoid whose factorizations come from pairing
//! the 3-mod-4 prime factors, exercising the same pairing engine as the
//! quadratic ring.
//!
//! Irreducibles of H are the primes p ≡ 1 (mod 4) and the products p₁·p₂ of
//! two primes pᵢ ≡ 3 (mod 4).

use crate::error::{Error, Result};
use crate::pairing::{count_pairings, enumerate_pairings};
use crate::primes::DEFAULT_FACTOR_BOUND;

/// A member of H: a positive integer congruent to 1 mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HilbertElement(u64);

impl HilbertElement {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 || n % 4 != 1 {
            return Err(Error::Domain(format!("{n} is not in the Hilbert monoid 1 + 4k")));
        }
        Ok(HilbertElement(n))
    }

    pub fn get(&self) -> u64 {
        self.0
    }
}

impl std::fmt::Display for HilbertElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// (prime, exponent) pairs of n ascending, by trial division.
fn factor_u64(n: u64, bound: i128) -> Result<Vec<(u64, u32)>> {
    if (n as i128) > bound {
        return Err(Error::Capacity { value: n as i128, bound });
    }
    let mut rest = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(out)
}

/// Fixed atoms (primes ≡ 1 mod 4, with multiplicity) and the distinct
/// 3-mod-4 primes with their multiplicities.
fn split_residues(n: HilbertElement, bound: i128) -> Result<(Vec<u64>, Vec<(u64, u64)>)> {
    let mut fixed = Vec::new();
    let mut paired = Vec::new();
    for (p, e) in factor_u64(n.get(), bound)? {
        match p % 4 {
            1 => {
                for _ in 0..e {
                    fixed.push(p);
                }
            }
            3 => paired.push((p, e as u64)),
            _ => unreachable!("members of H are odd"),
        }
    }
    Ok((fixed, paired))
}

/// Irreducibility in H: a 1-mod-4 prime, or a product of exactly two
/// 3-mod-4 primes. The unit 1 is rejected.
pub fn is_irreducible(n: HilbertElement) -> Result<bool> {
    if n.get() == 1 {
        return Err(Error::Domain("1 is the unit of the Hilbert monoid".into()));
    }
    let factors = factor_u64(n.get(), DEFAULT_FACTOR_BOUND)?;
    let total: u32 = factors.iter().map(|&(_, e)| e).sum();
    if total == 1 {
        return Ok(factors[0].0 % 4 == 1);
    }
    if total == 2 {
        return Ok(factors.iter().all(|&(p, _)| p % 4 == 3));
    }
    Ok(false)
}

/// All factorizations of n into irreducibles of H, each a sorted multiset of
/// atoms; the 1-mod-4 primes are fixed, and the 3-mod-4 primes are covered by
/// pairs in every possible way.
pub fn enumerate_factorizations(n: HilbertElement) -> Result<Vec<Vec<u64>>> {
    enumerate_factorizations_with_bound(n, DEFAULT_FACTOR_BOUND)
}

pub fn enumerate_factorizations_with_bound(
    n: HilbertElement,
    bound: i128,
) -> Result<Vec<Vec<u64>>> {
    if n.get() == 1 {
        return Err(Error::NotFactorable);
    }
    let (fixed, paired) = split_residues(n, bound)?;
    let multiplicities: Vec<u64> = paired.iter().map(|&(_, m)| m).collect();
    let mut out = Vec::new();
    for pairing in enumerate_pairings(&multiplicities) {
        let mut atoms = fixed.clone();
        for (i, j) in pairing {
            atoms.push(paired[i].0 * paired[j].0);
        }
        atoms.sort_unstable();
        debug_assert_eq!(atoms.iter().product::<u64>(), n.get());
        out.push(atoms);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Number of factorizations of n in H, via the pairing dynamic program.
pub fn count_factorizations(n: HilbertElement) -> Result<u64> {
    count_factorizations_with_bound(n, DEFAULT_FACTOR_BOUND)
}

pub fn count_factorizations_with_bound(n: HilbertElement, bound: i128) -> Result<u64> {
    if n.get() == 1 {
        return Err(Error::NotFactorable);
    }
    let (_, paired) = split_residues(n, bound)?;
    let multiplicities: Vec<u64> = paired.iter().map(|&(_, m)| m).collect();
    Ok(count_pairings(&multiplicities))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: u64) -> HilbertElement {
        HilbertElement::new(n).unwrap()
    }

    #[test]
    fn membership() {
        assert!(HilbertElement::new(1).is_ok());
        assert!(HilbertElement::new(5).is_ok());
        assert!(HilbertElement::new(441).is_ok());
        assert!(HilbertElement::new(3).is_err());
        assert!(HilbertElement::new(0).is_err());
        assert!(HilbertElement::new(4).is_err());
    }

    #[test]
    fn irreducibles_of_both_kinds() {
        assert!(is_irreducible(h(5)).unwrap());
        assert!(is_irreducible(h(13)).unwrap());
        assert!(is_irreducible(h(9)).unwrap()); // 3·3
        assert!(is_irreducible(h(21)).unwrap()); // 3·7
        assert!(is_irreducible(h(209)).unwrap()); // 11·19
        assert!(!is_irreducible(h(25)).unwrap()); // 5·5, both irreducible in H
        assert!(!is_irreducible(h(45)).unwrap()); // 3²·5 = 9·5
        assert!(!is_irreducible(h(81)).unwrap());
        assert!(is_irreducible(h(1)).is_err());
    }

    #[test]
    fn paper_example_has_two_factorizations_of_length_five() {
        // 5²·3²·11·13·19
        let n = h(25 * 9 * 11 * 13 * 19);
        let fs = enumerate_factorizations(n).unwrap();
        assert_eq!(fs.len(), 2);
        for f in &fs {
            assert_eq!(f.len(), 5);
            assert_eq!(f.iter().product::<u64>(), n.get());
        }
        assert_eq!(fs[0], vec![5, 5, 9, 13, 209]);
        assert_eq!(fs[1], vec![5, 5, 13, 33, 57]);
        assert_eq!(count_factorizations(n).unwrap(), 2);
    }

    #[test]
    fn single_prime_and_prime_powers() {
        assert_eq!(enumerate_factorizations(h(5)).unwrap(), vec![vec![5]]);
        // 3⁴ = 81 pairs only as {9, 9}
        assert_eq!(enumerate_factorizations(h(81)).unwrap(), vec![vec![9, 9]]);
        assert_eq!(count_factorizations(h(81)).unwrap(), 1);
    }

    #[test]
    fn four_four_one_gives_two_pairings() {
        // 441 = 3²·7²
        let fs = enumerate_factorizations(h(441)).unwrap();
        assert_eq!(fs, vec![vec![9, 49], vec![21, 21]]);
        assert_eq!(count_factorizations(h(441)).unwrap(), 2);
    }

    #[test]
    fn number_of_3_mod_4_primes_is_even() {
        for k in 0..2500u64 {
            let n = 1 + 4 * k;
            let count: u32 = factor_u64(n, DEFAULT_FACTOR_BOUND)
                .unwrap()
                .iter()
                .filter(|&&(p, _)| p % 4 == 3)
                .map(|&(_, e)| e)
                .sum();
            assert_eq!(count % 2, 0, "n = {n}");
        }
    }

    /// Independent divisor-search oracle over H, no pairing engine involved.
    fn oracle_factorizations(n: u64) -> Vec<Vec<u64>> {
        fn irreducible_in_h(m: u64) -> bool {
            let mut d = 5;
            while d * d <= m {
                if d % 4 == 1 && m % d == 0 && (m / d) % 4 == 1 {
                    return false;
                }
                d += 4;
            }
            true
        }
        fn search(rest: u64, min: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if rest == 1 {
                out.push(acc.clone());
                return;
            }
            let mut y = min;
            while y * y <= rest {
                if rest % y == 0 && (rest / y) % 4 == 1 && irreducible_in_h(y) {
                    acc.push(y);
                    search(rest / y, y, acc, out);
                    acc.pop();
                }
                y += 4;
            }
            if rest >= min && irreducible_in_h(rest) {
                acc.push(rest);
                out.push(acc.clone());
                acc.pop();
            }
        }
        let mut out = Vec::new();
        search(n, 5, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn pairing_route_matches_divisor_oracle() {
        for k in 1..2500u64 {
            let n = 1 + 4 * k;
            let by_pairing = enumerate_factorizations(h(n)).unwrap();
            let by_search = oracle_factorizations(n);
            assert_eq!(by_pairing, by_search, "n = {n}");
            assert_eq!(count_factorizations(h(n)).unwrap(), by_search.len() as u64);
        }
    }

    #[test]
    fn half_factorial_up_to_ten_thousand() {
        for k in 1..2500u64 {
            let n = 1 + 4 * k;
            let fs = enumerate_factorizations(h(n)).unwrap();
            assert!(!fs.is_empty(), "n = {n}");
            let len = fs[0].len();
            assert!(fs.iter().all(|f| f.len() == len), "n = {n}");
            assert_eq!(count_factorizations(h(n)).unwrap(), fs.len() as u64, "n = {n}");
        }
    }
}
