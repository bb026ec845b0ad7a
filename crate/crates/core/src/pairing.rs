//! Enumeration and counting of pair-coverings of a multiset.
//!
//! Given atoms 0..t with multiplicities m, a pairing is a multiset of
//! unordered index pairs {i, j} (i = j allowed) covering each atom i exactly
//! m_i times; equivalently a symmetric matrix e with e_ij ≥ 0 and
//! 2·e_ii + Σ_{j≠i} e_ij = m_i. Both the factorization counting for
//! Z[sqrt(-5)] and the Hilbert monoid reduce to this combinatorics.

/// All pairings of the multiset, each as a sorted list of index pairs
/// (i ≤ j) with repetition. Empty multiplicities yield the single empty
/// pairing; an odd total yields none.
pub fn enumerate_pairings(multiplicities: &[u64]) -> Vec<Vec<(usize, usize)>> {
    let mut residual = multiplicities.to_vec();
    let mut acc = Vec::new();
    let mut out = Vec::new();
    enumerate_from(0, &mut residual, &mut acc, &mut out);
    out
}

fn enumerate_from(
    i: usize,
    residual: &mut Vec<u64>,
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if i == residual.len() {
        out.push(acc.clone());
        return;
    }
    let ri = residual[i];
    // choose how many self-pairs {i, i}, then distribute the rest among j > i
    for eii in 0..=ri / 2 {
        for _ in 0..eii {
            acc.push((i, i));
        }
        distribute(i, i + 1, ri - 2 * eii, residual, acc, out);
        for _ in 0..eii {
            acc.pop();
        }
    }
}

fn distribute(
    i: usize,
    j: usize,
    remaining: u64,
    residual: &mut Vec<u64>,
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if j == residual.len() {
        if remaining == 0 {
            enumerate_from(i + 1, residual, acc, out);
        }
        return;
    }
    let cap = remaining.min(residual[j]);
    for eij in 0..=cap {
        residual[j] -= eij;
        for _ in 0..eij {
            acc.push((i, j));
        }
        distribute(i, j + 1, remaining - eij, residual, acc, out);
        for _ in 0..eij {
            acc.pop();
        }
        residual[j] += eij;
    }
}

/// Number of pairings of the multiset, counted without materializing them:
/// a dynamic program over the residual multiplicities, processing atoms in
/// order and summing over the ways to discharge each one.
pub fn count_pairings(multiplicities: &[u64]) -> u64 {
    let mut residual = multiplicities.to_vec();
    count_from(0, &mut residual)
}

fn count_from(i: usize, residual: &mut Vec<u64>) -> u64 {
    if i == residual.len() {
        return 1;
    }
    let ri = residual[i];
    let mut total = 0;
    for eii in 0..=ri / 2 {
        total += count_distribute(i, i + 1, ri - 2 * eii, residual);
    }
    total
}

fn count_distribute(i: usize, j: usize, remaining: u64, residual: &mut Vec<u64>) -> u64 {
    if j == residual.len() {
        return if remaining == 0 { count_from(i + 1, residual) } else { 0 };
    }
    let cap = remaining.min(residual[j]);
    let mut total = 0;
    for eij in 0..=cap {
        residual[j] -= eij;
        total += count_distribute(i, j + 1, remaining - eij, residual);
        residual[j] += eij;
    }
    total
}
