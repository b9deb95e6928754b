//! Hilbert series of the leading-term ideal: Krull dimension of the affine
//! cone and degree, by the variable-splitting recursion on monomial ideals.

use super::{groebner_basis_with, Budget, Ideal, MonomialOrder};
use crate::error::{Error, Result};
use crate::poly::Mono;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dimension of the affine cone and degree of a homogeneous ideal.
///
/// Both are read off the Hilbert series N(t)/(1-t)^n of the quotient by the
/// grevlex leading-term ideal: with N = (1-t)^e P and P(1) != 0, the
/// dimension is n - e and the degree is P(1). The unit ideal returns (0, 0);
/// an irrelevant-supported ideal has affine cone dimension 0 (empty
/// projective scheme).
pub fn hilbert_dim_degree(ideal: &Ideal) -> Result<(usize, u64)> {
    hilbert_dim_degree_with(ideal, &Budget::default())
}

pub fn hilbert_dim_degree_with(ideal: &Ideal, budget: &Budget) -> Result<(usize, u64)> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let n = ideal.ring().num_vars();
    if ideal.is_zero_ideal() {
        return Ok((n, 1));
    }
    let gb = groebner_basis_with(ideal, MonomialOrder::GrevLex, budget)?;
    if gb.is_unit() {
        return Ok((0, 0));
    }
    let lead: Vec<Mono> = gb
        .basis
        .iter()
        .map(|g| g.leading_term_grevlex().unwrap().0.clone())
        .collect();
    let mut numer = hilbert_numerator(minimalize(lead));
    // factor out (1 - t)^e
    let mut e = 0usize;
    while poly_eval_one(&numer).is_zero() && !numer.iter().all(|c| c.is_zero()) {
        numer = divide_by_one_minus_t(&numer);
        e += 1;
    }
    let degree = poly_eval_one(&numer);
    let degree: u64 = degree
        .magnitude()
        .try_into()
        .map_err(|_| Error::ResourceLimit("degree exceeds u64".into()))?;
    Ok((n - e, degree))
}

fn poly_eval_one(coeffs: &[BigInt]) -> BigInt {
    coeffs.iter().sum()
}

/// q(t) = p(t) / (1 - t), valid when p(1) = 0.
fn divide_by_one_minus_t(p: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = BigInt::zero();
    for c in &p[..p.len().saturating_sub(1)] {
        acc += c;
        out.push(acc.clone());
    }
    if out.is_empty() {
        out.push(BigInt::zero());
    }
    out
}

fn minimalize(gens: Vec<Mono>) -> Vec<Mono> {
    let mut out: Vec<Mono> = Vec::with_capacity(gens.len());
    for (i, m) in gens.iter().enumerate() {
        let redundant = gens
            .iter()
            .enumerate()
            .any(|(j, g)| j != i && g.divides(m) && (g != m || j < i));
        if !redundant {
            out.push(m.clone());
        }
    }
    out
}

fn mul_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Numerator of the Hilbert series of S/I for a monomial ideal I given by
/// minimal generators.
fn hilbert_numerator(gens: Vec<Mono>) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![BigInt::zero()];
    }
    // pure power case: N = prod (1 - t^deg)
    if gens
        .iter()
        .all(|m| m.exps().iter().filter(|&&e| e > 0).count() == 1)
    {
        let mut acc = vec![BigInt::one()];
        for m in &gens {
            let d = m.deg() as usize;
            let mut factor = vec![BigInt::zero(); d + 1];
            factor[0] = BigInt::one();
            factor[d] = -BigInt::one();
            acc = mul_dense(&acc, &factor);
        }
        return acc;
    }
    // pivot: most frequent variable among mixed generators
    let nvars = gens[0].exps().len();
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        if m.exps().iter().filter(|&&e| e > 0).count() > 1 {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    counts[i] += 1;
                }
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i)
        .unwrap();
    // N(I) = N(I + (x_pivot)) + t * N(I : x_pivot)
    let sum_gens: Vec<Mono> = gens
        .iter()
        .filter(|m| m.exps()[pivot] == 0)
        .cloned()
        .chain(std::iter::once(Mono::var(nvars, pivot, 1)))
        .collect();
    let colon_gens: Vec<Mono> = gens
        .iter()
        .map(|m| {
            if m.exps()[pivot] > 0 {
                let mut e = m.exps().to_vec();
                e[pivot] -= 1;
                Mono::from_exps(e)
            } else {
                m.clone()
            }
        })
        .collect();
    let a = hilbert_numerator(minimalize(sum_gens));
    let b = hilbert_numerator(minimalize(colon_gens));
    let mut out = vec![BigInt::zero(); a.len().max(b.len() + 1)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + 1] += c;
    }
    out
}
