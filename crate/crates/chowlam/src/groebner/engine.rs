//! The Buchberger engine over primitive integer polynomials.

use super::{Budget, GroebnerBasis, MonomialOrder};
use crate::error::{Error, Result};
use crate::poly::{Mono, Polynomial, RingRef};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub(crate) type ITerm = (Mono, BigInt);

/// Converts a public polynomial into engine form: integer coefficients,
/// content 1, positive leading coefficient, terms descending under `order`.
pub(crate) fn to_engine(f: &Polynomial, order: MonomialOrder) -> Vec<ITerm> {
    let (mut terms, _) = f.primitive_integer_terms();
    sort_terms(&mut terms, order);
    normalize_sign(&mut terms);
    terms
}

pub(crate) fn sort_terms(terms: &mut [ITerm], order: MonomialOrder) {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
}

fn normalize_sign(terms: &mut [ITerm]) {
    if terms.first().map(|(_, c)| c.is_negative()).unwrap_or(false) {
        for (_, c) in terms.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
}

fn strip_content(terms: &mut Vec<ITerm>) {
    let mut content = BigInt::zero();
    for (_, c) in terms.iter() {
        content = content.gcd(c);
        if content.is_one() {
            return;
        }
    }
    if content.is_zero() || content.is_one() {
        return;
    }
    for (_, c) in terms.iter_mut() {
        *c = &*c / &content;
    }
}

/// Monic rational polynomial in canonical public form.
pub(crate) fn to_public_monic(ring: &RingRef, terms: &[ITerm]) -> Polynomial {
    if terms.is_empty() {
        return Polynomial::zero(ring);
    }
    let lc = terms[0].1.clone();
    Polynomial::from_terms(
        ring,
        terms
            .iter()
            .map(|(m, c)| {
                (
                    m.clone(),
                    BigRational::new(c.clone(), lc.clone()),
                )
            })
            .collect(),
    )
}

/// result = ca*a - cb*(mb * b), merged in descending `order`.
fn lin_comb(
    ca: &BigInt,
    a: &[ITerm],
    cb: &BigInt,
    mb: &Mono,
    b: &[ITerm],
    order: MonomialOrder,
) -> Vec<ITerm> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let mj = b[j].0.mul(mb);
        match order.cmp(&a[i].0, &mj) {
            Ordering::Greater => {
                out.push((a[i].0.clone(), ca * &a[i].1));
                i += 1;
            }
            Ordering::Less => {
                out.push((mj, -(cb * &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = ca * &a[i].1 - cb * &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    while i < a.len() {
        out.push((a[i].0.clone(), ca * &a[i].1));
        i += 1;
    }
    while j < b.len() {
        out.push((b[j].0.mul(mb), -(cb * &b[j].1)));
        j += 1;
    }
    out
}

/// Full fraction-free reduction of f by the basis. Returns the remainder r
/// and a positive rational multiplier m with r = m * f (mod ideal).
pub(crate) fn reduce_full(
    f: Vec<ITerm>,
    basis: &[Vec<ITerm>],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<(Vec<ITerm>, BigRational)> {
    let mut r = f;
    let mut mult = BigRational::one();
    let mut done = 0usize; // prefix of r that no leading term divides
    loop {
        if r.len() > budget.max_terms {
            return Err(Error::ResourceLimit(format!(
                "reduction intermediate exceeded {} terms",
                budget.max_terms
            )));
        }
        if done >= r.len() {
            break;
        }
        let m = r[done].0.clone();
        // deterministic reducer choice: smallest leading monomial, then first index
        let mut chosen: Option<usize> = None;
        for (gi, g) in basis.iter().enumerate() {
            if g.is_empty() || !g[0].0.divides(&m) {
                continue;
            }
            match chosen {
                None => chosen = Some(gi),
                Some(prev) => {
                    if order.cmp(&g[0].0, &basis[prev][0].0) == Ordering::Less {
                        chosen = Some(gi);
                    }
                }
            }
        }
        let Some(gi) = chosen else {
            done += 1;
            continue;
        };
        let g = &basis[gi];
        let c = r[done].1.clone();
        let lc = g[0].1.clone();
        let d = c.gcd(&lc);
        let ca = &lc / &d; // positive since lc > 0
        let cb = &c / &d;
        let u = g[0].0.quotient_into(&m);
        // scale the finalized prefix, combine the tail
        let mut out: Vec<ITerm> = r[..done]
            .iter()
            .map(|(mm, cc)| (mm.clone(), cc * &ca))
            .collect();
        let tail = lin_comb(&ca, &r[done..], &cb, &u, g, order);
        debug_assert!(tail.first().map(|(mm, _)| order.cmp(mm, &m) == Ordering::Less).unwrap_or(true));
        out.extend(tail);
        mult *= BigRational::from_integer(ca);
        // keep coefficients small; fold the content into the multiplier
        let mut content = BigInt::zero();
        for (_, cc) in out.iter() {
            content = content.gcd(cc);
            if content.is_one() {
                break;
            }
        }
        if !content.is_zero() && !content.is_one() {
            for (_, cc) in out.iter_mut() {
                *cc = &*cc / &content;
            }
            mult /= BigRational::from_integer(content);
        }
        r = out;
    }
    Ok((r, mult))
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
}

fn make_pair(i: usize, j: usize, basis: &[Vec<ITerm>]) -> Pair {
    Pair {
        i,
        j,
        lcm: basis[i][0].0.lcm(&basis[j][0].0),
    }
}

/// Gebauer–Möller pair update on arrival of basis element t.
fn update_pairs(pairs: &mut Vec<Pair>, basis: &[Vec<ITerm>], t: usize) {
    let lt = basis[t][0].0.clone();
    let cand: Vec<Pair> = (0..t).map(|i| make_pair(i, t, basis)).collect();
    // criterion M: drop candidates whose lcm is properly divided by another's
    let mut keep: Vec<bool> = vec![true; cand.len()];
    for a in 0..cand.len() {
        for b in 0..cand.len() {
            if a != b && cand[b].lcm.divides(&cand[a].lcm) && cand[b].lcm != cand[a].lcm {
                keep[a] = false;
                break;
            }
        }
    }
    let mut cand: Vec<Pair> = cand
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();
    // criterion F: one representative per lcm class; a class containing a
    // coprime pair is dropped entirely (its S-polynomials all reduce to zero)
    cand.sort_by(|a, b| {
        MonomialOrder::GrevLex
            .cmp(&a.lcm, &b.lcm)
            .then(a.i.cmp(&b.i))
    });
    let mut filtered: Vec<Pair> = Vec::with_capacity(cand.len());
    let mut idx = 0;
    while idx < cand.len() {
        let mut end = idx + 1;
        while end < cand.len() && cand[end].lcm == cand[idx].lcm {
            end += 1;
        }
        let class_coprime = cand[idx..end]
            .iter()
            .any(|p| basis[p.i][0].0.coprime(&lt));
        if !class_coprime {
            filtered.push(cand[idx].clone());
        }
        idx = end;
    }
    // prune old pairs via the chain criterion
    pairs.retain(|p| {
        !(lt.divides(&p.lcm)
            && basis[p.i][0].0.lcm(&lt) != p.lcm
            && basis[p.j][0].0.lcm(&lt) != p.lcm)
    });
    pairs.extend(filtered);
}

/// S-polynomial in fraction-free form.
fn s_poly(f: &[ITerm], g: &[ITerm], order: MonomialOrder) -> Vec<ITerm> {
    let l = f[0].0.lcm(&g[0].0);
    let uf = f[0].0.quotient_into(&l);
    let ug = g[0].0.quotient_into(&l);
    let d = f[0].1.gcd(&g[0].1);
    let cf = &g[0].1 / &d;
    let cg = &f[0].1 / &d;
    // cf * uf * f - cg * ug * g; leading terms cancel
    let shifted: Vec<ITerm> = f.iter().map(|(m, c)| (m.mul(&uf), c * &cf)).collect();
    let mut s = lin_comb(&BigInt::one(), &shifted, &cg, &ug, g, order);
    debug_assert!(s.first().map(|(m, _)| *m != l).unwrap_or(true));
    strip_content(&mut s);
    normalize_sign(&mut s);
    s
}

/// Buchberger's algorithm with normal (minimal lcm degree) selection.
/// Returns the unique reduced basis, sorted ascending by leading monomial.
pub(crate) fn buchberger(
    input: Vec<Vec<ITerm>>,
    _nvars: usize,
    order: MonomialOrder,
    budget: &Budget,
) -> Result<Vec<Vec<ITerm>>> {
    let mut basis: Vec<Vec<ITerm>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut total_terms = 0usize;
    let push = |basis: &mut Vec<Vec<ITerm>>,
                    pairs: &mut Vec<Pair>,
                    total_terms: &mut usize,
                    g: Vec<ITerm>|
     -> Result<()> {
        *total_terms += g.len();
        if *total_terms > budget.max_terms {
            return Err(Error::ResourceLimit(format!(
                "basis exceeded {} total terms",
                budget.max_terms
            )));
        }
        basis.push(g);
        update_pairs(pairs, basis, basis.len() - 1);
        Ok(())
    };

    for g in input {
        if g.is_empty() {
            continue;
        }
        push(&mut basis, &mut pairs, &mut total_terms, g)?;
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "exceeded {} S-pair reductions",
                budget.max_pairs
            )));
        }
        // normal selection: minimal lcm degree, ties by order then indices
        let mut best = 0usize;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let better = match a.lcm.deg().cmp(&b.lcm.deg()) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => match order.cmp(&a.lcm, &b.lcm) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => (a.i, a.j) < (b.i, b.j),
                },
            };
            if better {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = s_poly(&basis[pair.i], &basis[pair.j], order);
        if s.is_empty() {
            continue;
        }
        let (mut r, _) = reduce_full(s, &basis, order, budget)?;
        if r.is_empty() {
            continue;
        }
        strip_content(&mut r);
        normalize_sign(&mut r);
        push(&mut basis, &mut pairs, &mut total_terms, r)?;
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            if basis[b][0].0.divides(&basis[a][0].0) {
                if basis[a][0].0 == basis[b][0].0 && a < b {
                    continue; // equal leading monomials: keep the earlier one
                }
                keep[a] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Vec<ITerm>> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    minimal.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));

    // autoreduce tails to reach the unique reduced basis
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let g = minimal[i].clone();
            let others: Vec<Vec<ITerm>> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, h)| (j != i).then(|| h.clone()))
                .collect();
            let (mut r, _) = reduce_full(g, &others, order, budget)?;
            strip_content(&mut r);
            normalize_sign(&mut r);
            if r != minimal[i] {
                changed = true;
                minimal[i] = r;
            }
        }
        minimal.retain(|g| !g.is_empty());
        minimal.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
        if !changed {
            break;
        }
    }
    Ok(minimal)
}

/// Direct Buchberger-criterion check: every S-polynomial of basis pairs
/// reduces to zero against the basis.
pub(crate) fn buchberger_criterion(gb: &GroebnerBasis) -> Result<bool> {
    let basis = &gb.engine;
    let budget = Budget::default();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if basis[i].is_empty() || basis[j].is_empty() {
                continue;
            }
            let s = s_poly(&basis[i], &basis[j], gb.order);
            if s.is_empty() {
                continue;
            }
            let (r, _) = reduce_full(s, basis, gb.order, &budget)?;
            if !r.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
