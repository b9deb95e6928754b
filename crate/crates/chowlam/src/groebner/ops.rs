//! Elimination ideals, saturation, ideal intersection and quotient, radical
//! membership, and ideal equality.

use super::{groebner_basis_with, Budget, Ideal, MonomialOrder};
use crate::error::{Error, Result};
use crate::poly::{cmp_grevlex, same_ring, Mono, PolyRing, Polynomial, RingRef};
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeSet;

/// Fresh auxiliary variable name not present in the ring.
fn fresh_var(ring: &RingRef, stem: &str) -> String {
    let mut name = stem.to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

/// Ring with `names` prepended before the variables of `ring`.
fn extend_ring_front(ring: &RingRef, names: &[String]) -> Result<RingRef> {
    let mut vars: Vec<String> = names.to_vec();
    vars.extend(ring.var_names().iter().cloned());
    PolyRing::new(vars)
}

fn lift_front(f: &Polynomial, target: &RingRef, shift: usize) -> Polynomial {
    let map: Vec<usize> = (0..f.ring().num_vars()).map(|i| i + shift).collect();
    f.map_variables(target, &map)
}

/// Generators of I ∩ k[kept variables], computed with a block order that
/// eliminates `drop` first. The result lives in the smaller ring.
pub fn eliminate(ideal: &Ideal, drop: &[&str]) -> Result<Ideal> {
    eliminate_with(ideal, drop, &Budget::default())
}

pub fn eliminate_with(ideal: &Ideal, drop: &[&str], budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut drop_idx = BTreeSet::new();
    for name in drop {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::UndeclaredVariable(name.to_string()))?;
        drop_idx.insert(i);
    }
    let dropped: Vec<usize> = drop_idx.iter().copied().collect();
    let kept: Vec<usize> = (0..ring.num_vars())
        .filter(|i| !drop_idx.contains(i))
        .collect();
    // permuted ring: dropped block first
    let mut names: Vec<String> = dropped
        .iter()
        .map(|&i| ring.var_name(i).to_string())
        .collect();
    names.extend(kept.iter().map(|&i| ring.var_name(i).to_string()));
    let permuted = PolyRing::new(names)?;
    let mut map = vec![0usize; ring.num_vars()];
    for (new_pos, &old) in dropped.iter().chain(kept.iter()).enumerate() {
        map[old] = new_pos;
    }
    let gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.map_variables(&permuted, &map))
        .collect();
    let split = dropped.len();
    let gb = groebner_basis_with(
        &Ideal::new(&permuted, gens),
        MonomialOrder::Block { split },
        budget,
    )?;
    // subring of kept variables
    let sub = PolyRing::new(
        kept.iter()
            .map(|&i| ring.var_name(i).to_string())
            .collect::<Vec<_>>(),
    )?;
    let mut out = Vec::new();
    for g in &gb.basis {
        // by the elimination property this is equivalent to checking the
        // block-order leading monomial only
        let fully_in_sub = g
            .terms()
            .iter()
            .all(|(m, _)| m.exps()[..split].iter().all(|&e| e == 0));
        if !fully_in_sub {
            continue;
        }
        let sub_map: Vec<usize> = (0..permuted.num_vars())
            .map(|i| i.saturating_sub(split))
            .collect();
        out.push(g.map_variables(&sub, &sub_map));
    }
    Ok(Ideal::new(&sub, out))
}

/// Saturation (I : J^∞) = ∩_g (I : g^∞) over the generators of J, each
/// computed by adjoining t, adding t*g - 1, and eliminating t.
pub fn saturation(ideal: &Ideal, j: &Ideal) -> Result<Ideal> {
    saturation_with(ideal, j, &Budget::default())
}

pub fn saturation_with(ideal: &Ideal, j: &Ideal, budget: &Budget) -> Result<Ideal> {
    if !same_ring(ideal.ring(), j.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut acc: Option<Ideal> = None;
    for g in j.gens() {
        let sat = saturate_element_with(ideal, g, budget)?;
        acc = Some(match acc {
            None => sat,
            Some(prev) => ideal_intersection_with(&prev, &sat, budget)?,
        });
    }
    Ok(acc.unwrap_or_else(|| ideal.clone()))
}

/// (I : g^∞) for a single element.
pub fn saturate_element_with(ideal: &Ideal, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
    if g.is_zero() {
        return Ok(ideal.clone());
    }
    if g.is_constant() {
        return Ok(ideal.clone());
    }
    // fast path: saturation by a single variable of a homogeneous ideal
    if g.num_terms() == 1 && ideal.is_homogeneous() {
        let (m, _) = g.leading_term_grevlex().unwrap();
        let support: Vec<usize> = m
            .exps()
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| (e > 0).then_some(i))
            .collect();
        if support.len() == 1 {
            let name = ideal.ring().var_name(support[0]).to_string();
            return saturate_variable_fast(ideal, &name, budget);
        }
    }
    let ring = ideal.ring();
    let t = fresh_var(ring, "t_sat");
    let ext = extend_ring_front(ring, &[t.clone()])?;
    let mut gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|f| lift_front(f, &ext, 1))
        .collect();
    let tg = Polynomial::var(&ext, 0).mul(&lift_front(g, &ext, 1));
    gens.push(tg.sub(&Polynomial::one(&ext)));
    let elim = eliminate_with(&Ideal::new(&ext, gens), &[&t], budget)?;
    // map back into the original ring (same variable list)
    rehome(&elim, ring)
}

/// Transplants an ideal into a ring with the same variable names.
pub fn rehome(ideal: &Ideal, ring: &RingRef) -> Result<Ideal> {
    let src = ideal.ring();
    let mut map = Vec::with_capacity(src.num_vars());
    for name in src.var_names() {
        map.push(
            ring.var_index(name)
                .ok_or_else(|| Error::UndeclaredVariable(name.clone()))?,
        );
    }
    Ok(Ideal::new(
        ring,
        ideal
            .gens()
            .iter()
            .map(|g| g.map_variables(ring, &map))
            .collect(),
    ))
}

/// I ∩ J via the single-variable trick: eliminate t from t·I + (1-t)·J.
pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    ideal_intersection_with(a, b, &Budget::default())
}

pub fn ideal_intersection_with(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::zero(ring));
    }
    let t = fresh_var(ring, "t_int");
    let ext = extend_ring_front(ring, &[t.clone()])?;
    let tv = Polynomial::var(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).sub(&tv);
    let mut gens = Vec::new();
    for f in a.gens() {
        gens.push(tv.mul(&lift_front(f, &ext, 1)));
    }
    for f in b.gens() {
        gens.push(one_minus_t.mul(&lift_front(f, &ext, 1)));
    }
    let elim = eliminate_with(&Ideal::new(&ext, gens), &[&t], budget)?;
    rehome(&elim, ring)
}

/// Ideal quotient (I : J) = ∩_g (I ∩ (g)) / g.
pub fn ideal_quotient(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    ideal_quotient_with(a, b, &Budget::default())
}

pub fn ideal_quotient_with(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    let mut acc: Option<Ideal> = None;
    for g in b.gens() {
        let meet = ideal_intersection_with(a, &Ideal::new(ring, vec![g.clone()]), budget)?;
        let mut quots = Vec::new();
        for f in meet.gens() {
            quots.push(div_exact(f, g).ok_or_else(|| {
                Error::InvalidInput("intersection element not divisible in quotient".into())
            })?);
        }
        let q = Ideal::new(ring, quots);
        acc = Some(match acc {
            None => q,
            Some(prev) => ideal_intersection_with(&prev, &q, budget)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::new(ring, vec![Polynomial::one(ring)])))
}

/// Exact division f / g, None when g does not divide f.
pub fn div_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if g.is_zero() {
        return None;
    }
    let ring = f.ring().clone();
    let mut rem = f.clone();
    let mut quot = Polynomial::zero(&ring);
    let (gm, gc) = g.leading_term_grevlex().unwrap();
    while !rem.is_zero() {
        let (rm, rc) = rem.leading_term_grevlex().unwrap();
        if !gm.divides(rm) {
            return None;
        }
        let m = gm.quotient_into(rm);
        let c = rc / gc;
        let t = Polynomial::from_terms(&ring, vec![(m, c)]);
        quot = quot.add(&t);
        rem = rem.sub(&t.mul(g));
    }
    Some(quot)
}

/// Radical membership: f ∈ √I iff 1 ∈ I + (t·f - 1).
pub fn radical_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    radical_membership_with(f, ideal, &Budget::default())
}

pub fn radical_membership_with(f: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    if !same_ring(f.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let ring = ideal.ring();
    let t = fresh_var(ring, "t_rad");
    let ext = extend_ring_front(ring, &[t])?;
    let mut gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| lift_front(g, &ext, 1))
        .collect();
    gens.push(
        Polynomial::var(&ext, 0)
            .mul(&lift_front(f, &ext, 1))
            .sub(&Polynomial::one(&ext)),
    );
    let gb = groebner_basis_with(&Ideal::new(&ext, gens), MonomialOrder::GrevLex, budget)?;
    Ok(gb.is_unit())
}

/// True iff the reduced Gröbner bases under grevlex coincide.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    ideal_equal_with(a, b, &Budget::default())
}

pub fn ideal_equal_with(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<bool> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ga = groebner_basis_with(a, MonomialOrder::GrevLex, budget)?;
    let gb = groebner_basis_with(b, MonomialOrder::GrevLex, budget)?;
    Ok(ga.basis == gb.basis)
}

/// True iff the ideal is the unit ideal.
pub fn is_unit_ideal(a: &Ideal) -> Result<bool> {
    Ok(groebner_basis_with(a, MonomialOrder::GrevLex, &Budget::default())?.is_unit())
}

/// Saturation of a homogeneous ideal by a single ring variable, using the
/// grevlex divide-by-last-variable trick (one basis computation, no
/// auxiliary variable). Used as a fast path; validated against the general
/// route in tests.
pub fn saturate_variable_fast(ideal: &Ideal, var: &str, budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    let vi = ring
        .var_index(var)
        .ok_or_else(|| Error::UndeclaredVariable(var.to_string()))?;
    let n = ring.num_vars();
    // permute so `var` is last
    let mut order: Vec<usize> = (0..n).filter(|&i| i != vi).collect();
    order.push(vi);
    let names: Vec<String> = order.iter().map(|&i| ring.var_name(i).to_string()).collect();
    let permuted = PolyRing::new(names)?;
    let mut map = vec![0usize; n];
    for (new_pos, &old) in order.iter().enumerate() {
        map[old] = new_pos;
    }
    let gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.map_variables(&permuted, &map))
        .collect();
    let gb = groebner_basis_with(&Ideal::new(&permuted, gens), MonomialOrder::GrevLex, budget)?;
    // divide each element by the largest power of the last variable
    let last = n - 1;
    let mut out = Vec::new();
    for g in &gb.basis {
        let k = g
            .terms()
            .iter()
            .map(|(m, _)| m.exps()[last])
            .min()
            .unwrap_or(0);
        if k == 0 {
            out.push(g.clone());
            continue;
        }
        let terms = g
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut e = m.exps().to_vec();
                e[last] -= k;
                (Mono::from_exps(e), c.clone())
            })
            .collect();
        out.push(Polynomial::from_terms(&permuted, terms));
    }
    // iterate: dividing can expose new divisibility after re-completion
    let sat_once = Ideal::new(&permuted, out);
    let stable = {
        let again = groebner_basis_with(&sat_once, MonomialOrder::GrevLex, budget)?;
        again
            .basis
            .iter()
            .all(|g| g.terms().iter().any(|(m, _)| m.exps()[last] == 0))
            && again.basis.iter().all(|g| {
                g.terms()
                    .iter()
                    .map(|(m, _)| m.exps()[last])
                    .min()
                    .unwrap_or(0)
                    == 0
            })
    };
    let result = if stable {
        sat_once
    } else {
        saturate_variable_fast(
            &rehome(&sat_once, &permuted)?,
            permuted.var_name(last),
            budget,
        )?
    };
    rehome(&result, ring)
}

/// Replaces the generators by the reduced grevlex Gröbner basis. Cuts
/// redundant generators before expensive downstream work.
pub fn interreduce(ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
    let gb = groebner_basis_with(ideal, MonomialOrder::GrevLex, budget)?;
    Ok(Ideal::new(ideal.ring(), gb.basis))
}

/// Saturation by the irrelevant maximal ideal: (I : m^∞) = ∩_i (I : x_i^∞),
/// each factor via the grevlex fast path. Projective cleanup of eliminants.
pub fn saturate_irrelevant(ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut parts: Vec<Ideal> = Vec::new();
    let mut all_equal = true;
    for i in 0..ring.num_vars() {
        let part = saturate_variable_fast(ideal, ring.var_name(i), budget)?;
        if all_equal && !ideal_equal_with(&part, ideal, budget)? {
            all_equal = false;
        }
        parts.push(part);
    }
    if all_equal {
        return Ok(ideal.clone());
    }
    let mut acc = parts.remove(0);
    for p in parts {
        acc = ideal_intersection_with(&acc, &p, budget)?;
    }
    Ok(acc)
}

/// Sorts generators deterministically; helper for stable JSON output.
pub fn sorted_gens(ideal: &Ideal) -> Vec<Polynomial> {
    let mut gens = ideal.gens().to_vec();
    gens.sort_by(|a, b| {
        let la = a.leading_term_grevlex().map(|(m, _)| m.clone());
        let lb = b.leading_term_grevlex().map(|(m, _)| m.clone());
        match (la, lb) {
            (Some(x), Some(y)) => cmp_grevlex(&x, &y),
            (None, None) => std::cmp::Ordering::Equal,
            (None, _) => std::cmp::Ordering::Less,
            (_, None) => std::cmp::Ordering::Greater,
        }
    });
    gens
}

/// The ideal generated by every ring variable.
pub fn irrelevant_ideal(ring: &RingRef) -> Ideal {
    Ideal::new(
        ring,
        (0..ring.num_vars())
            .map(|i| Polynomial::var(ring, i))
            .collect(),
    )
}

/// Convenience: monic scaling of a polynomial (leading coefficient 1).
pub fn monic(f: &Polynomial) -> Polynomial {
    match f.leading_term_grevlex() {
        None => f.clone(),
        Some((_, c)) => f.mul_scalar(&(BigRational::one() / c)),
    }
}
