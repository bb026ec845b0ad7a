//! Nonzero ideals of Z[sqrt(d)] as canonical rank-2 integer lattices.
//!
//! Every nonzero ideal is the Z-module a·Z + (b + c·sqrt(d))·Z for a unique
//! triple (a, b, c) in Hermite normal form: a > 0, c > 0, 0 ≤ b < a. The
//! triple describes an ideal (not merely a lattice) exactly when c | a,
//! c | b and a·c | b² − d·c²; the product a·c is the lattice index, i.e.
//! the ideal norm |Z[sqrt(d)] / I|. Canonicality makes equality testing a
//! component-wise comparison.

use crate::arith::{egcd, gcd};
use crate::elem::{validate_d, QuadInt};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadIdeal {
    d: i128,
    a: i128,
    b: i128,
    c: i128,
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

impl QuadIdeal {
    /// The ideal generated by the given elements, in canonical HNF form.
    ///
    /// The lattice spanned by {g, sqrt(d)·g} over all generators g is reduced
    /// by Euclidean row operations. Fails with [`Error::ZeroIdeal`] when all
    /// generators are zero.
    pub fn from_generators(gens: &[QuadInt]) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::Domain("at least one generator required".into()))?;
        let d = first.d();
        let mut rows: Vec<(i128, i128)> = Vec::with_capacity(2 * gens.len());
        for g in gens {
            if g.d() != d {
                return Err(Error::MismatchedRing { left: d, right: g.d() });
            }
            // g = x + y·sqrt(d) contributes g and sqrt(d)·g = d·y + x·sqrt(d)
            rows.push((g.a(), g.b()));
            rows.push((ck_mul(d, g.b())?, g.a()));
        }
        Self::from_rows(d, rows)
    }

    /// The principal ideal generated by a single element.
    pub fn principal(x: &QuadInt) -> Result<Self> {
        Self::from_generators(std::slice::from_ref(x))
    }

    /// The full ring as an ideal, ⟨1⟩ = (1, 0, 1).
    pub fn one(d: i128) -> Result<Self> {
        validate_d(d)?;
        Ok(QuadIdeal { d, a: 1, b: 0, c: 1 })
    }

    /// Builds an ideal directly from an HNF triple, validating the lattice
    /// and ideal invariants.
    pub fn from_hnf(d: i128, a: i128, b: i128, c: i128) -> Result<Self> {
        validate_d(d)?;
        if a <= 0 || c <= 0 {
            return Err(Error::InvalidBasis("a and c must be positive"));
        }
        if b < 0 || b >= a {
            return Err(Error::InvalidBasis("b must satisfy 0 ≤ b < a"));
        }
        if a % c != 0 || b % c != 0 {
            return Err(Error::InvalidBasis("c must divide a and b"));
        }
        let disc = ck_sub(ck_mul(b, b)?, ck_mul(d, ck_mul(c, c)?)?)?;
        if disc % ck_mul(a, c)? != 0 {
            return Err(Error::InvalidBasis("a·c must divide b² − d·c²"));
        }
        Ok(QuadIdeal { d, a, b, c })
    }

    /// HNF reduction of a set of lattice rows (x, y) standing for x + y·sqrt(d).
    fn from_rows(d: i128, rows: Vec<(i128, i128)>) -> Result<Self> {
        // pivot carries the running gcd of the y-coordinates; ax the running
        // gcd of x-coordinates of rows eliminated to y = 0
        let mut pivot: Option<(i128, i128)> = None;
        let mut ax: i128 = 0;
        for (x, y) in rows {
            if y == 0 {
                ax = gcd(ax, x);
                continue;
            }
            match pivot {
                None => {
                    pivot = Some(if y < 0 { (-x, -y) } else { (x, y) });
                }
                Some((px, py)) => {
                    let (g, s, t) = egcd(py, y);
                    let npx = ck_add(ck_mul(s, px)?, ck_mul(t, x)?)?;
                    // the complementary combination has zero y-coordinate
                    let zx = ck_sub(ck_mul(py / g, x)?, ck_mul(y / g, px)?)?;
                    ax = gcd(ax, zx);
                    // reduce the pivot x mod the rational sublattice to keep
                    // intermediate entries small
                    let npx = if ax > 0 { npx.rem_euclid(ax) } else { npx };
                    pivot = Some((npx, g));
                }
            }
        }
        let (b0, c) = match pivot {
            Some(p) => p,
            None if ax == 0 => return Err(Error::ZeroIdeal),
            None => return Err(Error::InvalidBasis("rank-1 lattice is not an ideal")),
        };
        if ax == 0 {
            return Err(Error::InvalidBasis("rank-1 lattice is not an ideal"));
        }
        let a = ax.abs();
        let b = b0.rem_euclid(a);
        let ideal = QuadIdeal { d, a, b, c };
        debug_assert!(ideal.check_invariants().is_ok(), "HNF invariants violated: {ideal:?}");
        Ok(ideal)
    }

    /// Verifies the ideal-lattice invariants; used by tests and debug builds.
    pub fn check_invariants(&self) -> Result<()> {
        if self.a <= 0 || self.c <= 0 || self.b < 0 || self.b >= self.a {
            return Err(Error::InvalidBasis("triple is not in HNF range"));
        }
        if self.a % self.c != 0 || self.b % self.c != 0 {
            return Err(Error::InvalidBasis("c must divide a and b"));
        }
        let disc = ck_sub(ck_mul(self.b, self.b)?, ck_mul(self.d, ck_mul(self.c, self.c)?)?)?;
        if disc % ck_mul(self.a, self.c)? != 0 {
            return Err(Error::InvalidBasis("a·c must divide b² − d·c²"));
        }
        Ok(())
    }

    pub fn d(&self) -> i128 {
        self.d
    }

    pub fn a(&self) -> i128 {
        self.a
    }

    pub fn b(&self) -> i128 {
        self.b
    }

    pub fn c(&self) -> i128 {
        self.c
    }

    pub fn hnf(&self) -> (i128, i128, i128) {
        (self.a, self.b, self.c)
    }

    /// The canonical integral basis (a, b + c·sqrt(d)).
    pub fn basis(&self) -> (QuadInt, QuadInt) {
        let rational = QuadInt::new(self.a, 0, self.d).expect("d validated at construction");
        let mixed = QuadInt::new(self.b, self.c, self.d).expect("d validated at construction");
        (rational, mixed)
    }

    /// N(I) = |Z[sqrt(d)] / I| = a·c, the lattice index.
    pub fn norm(&self) -> i128 {
        self.a.checked_mul(self.c).expect("ideal norm checked at construction")
    }

    pub fn is_one(&self) -> bool {
        self.a == 1 && self.c == 1
    }

    /// Membership test: x + y·sqrt(d) ∈ I iff c | y and a | (x − (y/c)·b).
    pub fn contains(&self, x: &QuadInt) -> Result<bool> {
        if x.d() != self.d {
            return Err(Error::MismatchedRing { left: self.d, right: x.d() });
        }
        if x.b() % self.c != 0 {
            return Ok(false);
        }
        let residue = ck_sub(x.a(), ck_mul(x.b() / self.c, self.b)?)?;
        Ok(residue % self.a == 0)
    }

    /// I ⊇ J, tested on the canonical basis of J. In this ring containment
    /// coincides with divisibility of ideals.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        let (g1, g2) = other.basis();
        Ok(self.contains(&g1)? && self.contains(&g2)?)
    }

    /// Ideal product: generated by the pairwise products of the two
    /// canonical bases.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::MismatchedRing { left: self.d, right: other.d });
        }
        let (a1, a2) = self.basis();
        let (b1, b2) = other.basis();
        let gens = [
            a1.checked_mul(&b1)?,
            a1.checked_mul(&b2)?,
            a2.checked_mul(&b1)?,
            a2.checked_mul(&b2)?,
        ];
        Self::from_generators(&gens)
    }

    /// The conjugate ideal, generated by the conjugates of the basis.
    pub fn conjugate(&self) -> Self {
        let (g1, g2) = self.basis();
        Self::from_generators(&[g1.conjugate(), g2.conjugate()])
            .expect("conjugate of a nonzero ideal is nonzero")
    }

    /// Deterministic ordering key: (norm, a, b, c).
    pub fn sort_key(&self) -> (i128, i128, i128, i128) {
        (self.norm(), self.a, self.b, self.c)
    }

    /// Exhaustively enumerates every nonzero ideal with norm a·c ≤ bound, by
    /// scanning all candidate HNF triples and keeping the valid ones. Sorted
    /// by (norm, a, b, c).
    pub fn all_with_norm_at_most(d: i128, bound: i128) -> Result<Vec<Self>> {
        validate_d(d)?;
        let mut found = Vec::new();
        for a in 1..=bound {
            for c in 1..=bound / a {
                if a % c != 0 {
                    continue;
                }
                for b in 0..a {
                    if let Ok(ideal) = Self::from_hnf(d, a, b, c) {
                        found.push(ideal);
                    }
                }
            }
        }
        found.sort();
        Ok(found)
    }
}

impl PartialOrd for QuadIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for QuadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}+{}*sqrt({})]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i128, b: i128) -> QuadInt {
        QuadInt::zm5(a, b)
    }

    fn ideal(gens: &[QuadInt]) -> QuadIdeal {
        QuadIdeal::from_generators(gens).unwrap()
    }

    #[test]
    fn hnf_of_named_ideals() {
        assert_eq!(ideal(&[q(2, 0), q(1, 1)]).hnf(), (2, 1, 1));
        assert_eq!(ideal(&[q(3, 0), q(1, 2)]).hnf(), (3, 2, 1));
        assert_eq!(ideal(&[q(3, 0), q(1, -2)]).hnf(), (3, 1, 1));
        assert_eq!(ideal(&[q(1, 0)]).hnf(), (1, 0, 1));
        assert_eq!(ideal(&[q(0, 1)]).hnf(), (5, 0, 1));
        assert_eq!(ideal(&[q(3, 0)]).hnf(), (3, 0, 3));
    }

    #[test]
    fn zero_generators_are_rejected() {
        assert_eq!(
            QuadIdeal::from_generators(&[q(0, 0), q(0, 0)]),
            Err(Error::ZeroIdeal)
        );
        assert!(QuadIdeal::from_generators(&[]).is_err());
    }

    #[test]
    fn norm_is_lattice_index() {
        assert_eq!(ideal(&[q(2, 0), q(1, 1)]).norm(), 2);
        assert_eq!(QuadIdeal::one(-5).unwrap().norm(), 1);
        assert_eq!(ideal(&[q(7, 0)]).norm(), 49);
    }

    #[test]
    fn membership_in_ideal_above_two() {
        let i2 = ideal(&[q(2, 0), q(1, 1)]);
        assert!(!i2.contains(&q(3, 0)).unwrap());
        assert!(i2.contains(&q(1, 1)).unwrap());
        assert!(i2.contains(&q(4, 2)).unwrap());
        // membership is exactly the same-parity criterion
        for z1 in -6..=6 {
            for z2 in -6..=6 {
                assert_eq!(
                    i2.contains(&q(z1, z2)).unwrap(),
                    (z1 - z2) % 2 == 0,
                    "({z1},{z2})"
                );
            }
        }
    }

    #[test]
    fn product_identities() {
        let i2 = ideal(&[q(2, 0), q(1, 1)]);
        let two = ideal(&[q(2, 0)]);
        assert_eq!(i2.mul(&i2).unwrap(), two);
        assert_eq!(two.hnf(), (2, 0, 2));

        let p3 = ideal(&[q(3, 0), q(1, -2)]);
        let p3c = ideal(&[q(3, 0), q(1, 2)]);
        assert_eq!(p3.mul(&p3c).unwrap(), ideal(&[q(3, 0)]));

        let one = QuadIdeal::one(-5).unwrap();
        assert_eq!(i2.mul(&one).unwrap(), i2);
    }

    #[test]
    fn equality_is_canonical() {
        assert_eq!(ideal(&[q(2, 0), q(1, 1)]), ideal(&[q(2, 0), q(3, 1)]));
        assert_ne!(ideal(&[q(2, 0)]), ideal(&[q(3, 0)]));
        // ⟨1 − sqrt(-5)⟩ = ⟨2, 1 + sqrt(-5)⟩ · ⟨3, 1 + 2·sqrt(-5)⟩
        let lhs = ideal(&[q(1, -1)]);
        let rhs = ideal(&[q(2, 0), q(1, 1)]).mul(&ideal(&[q(3, 0), q(1, 2)])).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn containment_examples() {
        let i2 = ideal(&[q(2, 0), q(1, 1)]);
        let two = ideal(&[q(2, 0)]);
        let three = ideal(&[q(3, 0)]);
        assert!(i2.contains_ideal(&two).unwrap());
        assert!(i2.contains_ideal(&i2).unwrap());
        assert!(!two.contains_ideal(&three).unwrap());
    }

    #[test]
    fn conjugation() {
        assert_eq!(ideal(&[q(3, 0), q(1, 2)]).conjugate().hnf(), (3, 1, 1));
        let seven = ideal(&[q(7, 0)]);
        assert_eq!(seven.conjugate(), seven);
        let i2 = ideal(&[q(2, 0), q(1, 1)]);
        assert_eq!(i2.conjugate(), i2);
    }

    #[test]
    fn hnf_constructor_validates() {
        assert!(QuadIdeal::from_hnf(-5, 2, 1, 1).is_ok());
        assert!(QuadIdeal::from_hnf(-5, 2, 0, 2).is_ok());
        assert!(QuadIdeal::from_hnf(-5, 6, 5, 1).is_ok());
        // 2·1 does not divide 0² + 5·1²
        assert!(QuadIdeal::from_hnf(-5, 2, 0, 1).is_err());
        // c does not divide a
        assert!(QuadIdeal::from_hnf(-5, 3, 1, 2).is_err());
        // b out of range
        assert!(QuadIdeal::from_hnf(-5, 2, 2, 1).is_err());
        assert!(QuadIdeal::from_hnf(-5, 0, 0, 1).is_err());
    }

    #[test]
    fn display_form() {
        assert_eq!(ideal(&[q(2, 0), q(1, 1)]).to_string(), "[2, 1+1*sqrt(-5)]");
        assert_eq!(ideal(&[q(2, 0)]).to_string(), "[2, 0+2*sqrt(-5)]");
    }

    #[test]
    fn works_for_other_rings() {
        // ⟨sqrt(2)⟩ in Z[sqrt(2)]
        let root2 = QuadInt::new(0, 1, 2).unwrap();
        let i = QuadIdeal::principal(&root2).unwrap();
        assert_eq!(i.hnf(), (2, 0, 1));
        assert_eq!(i.norm(), 2);
    }

    fn arb_elem() -> impl Strategy<Value = QuadInt> {
        (-30i128..=30, -30i128..=30).prop_map(|(a, b)| QuadInt::zm5(a, b))
    }

    fn arb_ideal() -> impl Strategy<Value = QuadIdeal> {
        proptest::collection::vec(arb_elem(), 1..=3)
            .prop_filter("nonzero", |gens| gens.iter().any(|g| !g.is_zero()))
            .prop_map(|gens| QuadIdeal::from_generators(&gens).unwrap())
    }

    proptest! {
        #[test]
        fn hnf_is_canonical_under_generator_changes(
            g1 in arb_elem(), g2 in arb_elem(), k in -5i128..=5
        ) {
            prop_assume!(!g1.is_zero() || !g2.is_zero());
            let i = QuadIdeal::from_generators(&[g1, g2]).unwrap();
            // permutation
            prop_assert_eq!(QuadIdeal::from_generators(&[g2, g1]).unwrap(), i);
            // unimodular recombination (g1 + k·g2, g2)
            let shear = g1 + QuadInt::zm5(k, 0) * g2;
            prop_assert_eq!(QuadIdeal::from_generators(&[shear, g2]).unwrap(), i);
            // redundant extra generator already inside the ideal
            let inside = g1 * QuadInt::zm5(2, 1);
            prop_assert_eq!(QuadIdeal::from_generators(&[g1, g2, inside]).unwrap(), i);
        }

        #[test]
        fn ideal_norm_is_multiplicative(i in arb_ideal(), j in arb_ideal()) {
            let prod = i.mul(&j).unwrap();
            prop_assert_eq!(prod.norm(), i.norm() * j.norm());
            prop_assert!(prod.check_invariants().is_ok());
        }

        #[test]
        fn principal_ideal_norm_matches_element_norm(x in arb_elem()) {
            prop_assume!(!x.is_zero());
            let i = QuadIdeal::principal(&x).unwrap();
            prop_assert_eq!(i.norm(), x.norm());
        }

        #[test]
        fn multiplication_is_commutative_and_associative(
            i in arb_ideal(), j in arb_ideal(), k in arb_ideal()
        ) {
            prop_assert_eq!(i.mul(&j).unwrap(), j.mul(&i).unwrap());
            let left = i.mul(&j).unwrap().mul(&k).unwrap();
            let right = i.mul(&j.mul(&k).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn conjugation_is_an_involution(i in arb_ideal()) {
            prop_assert_eq!(i.conjugate().conjugate(), i);
        }

        #[test]
        fn product_is_contained_in_factors(i in arb_ideal(), j in arb_ideal()) {
            let prod = i.mul(&j).unwrap();
            prop_assert!(i.contains_ideal(&prod).unwrap());
            prop_assert!(j.contains_ideal(&prod).unwrap());
        }
    }
}
