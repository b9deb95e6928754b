//! Gröbner bases over the rationals: Buchberger with the Gebauer–Möller
//! pair criteria, normal forms, and the elimination/saturation toolkit
//! built on top of them.
//!
//! Internally the engine works with primitive integer polynomials
//! (content 1, positive leading coefficient) and fraction-free reduction;
//! rational coefficients only appear at the public boundary.

mod engine;
mod hilbert;
mod ops;

pub use hilbert::{hilbert_dim_degree, hilbert_dim_degree_with};
pub use ops::{
    eliminate, eliminate_with, ideal_equal, ideal_equal_with, ideal_intersection,
    ideal_intersection_with, ideal_quotient, ideal_quotient_with, interreduce, irrelevant_ideal,
    is_unit_ideal, monic,
    radical_membership, radical_membership_with, saturate_element_with, saturate_irrelevant,
    rehome, saturate_variable_fast, saturation, saturation_with, sorted_gens,
};

use crate::error::{Error, Result};
use crate::poly::{
    cmp_grevlex, cmp_grevlex_range, cmp_lex, same_ring, Mono, PolyRing, Polynomial, RingRef,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::cmp::Ordering;

/// A monomial order on a fixed ring.
///
/// `Block { split }` eliminates the first `split` variables: monomials are
/// compared by grevlex on positions `0..split` first, then grevlex on the
/// rest. Any polynomial whose leading monomial avoids the first block lies
/// entirely in the second block's subring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Block { split: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => cmp_grevlex(a, b),
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::Block { split } => {
                let n = a.exps().len();
                match cmp_grevlex_range(a, b, 0, split) {
                    Ordering::Equal => cmp_grevlex_range(a, b, split, n),
                    o => o,
                }
            }
        }
    }
}

/// Resource budget for Gröbner computations. Exceeding it surfaces
/// [`Error::ResourceLimit`] instead of hanging.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Cap on the total number of stored terms across the working basis,
    /// and on the term count of any intermediate reduction.
    pub max_terms: usize,
    /// Cap on processed S-pairs.
    pub max_pairs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_terms: 200_000,
            max_pairs: 500_000,
        }
    }
}

/// An ideal: a ring plus a generator list (zeros and duplicates removed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Ideal {
        let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            assert!(same_ring(g.ring(), ring), "generator from a foreign ring");
            if g.is_zero() || out.contains(&g) {
                continue;
            }
            out.push(g);
        }
        Ideal {
            ring: ring.clone(),
            gens: out,
        }
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Parses generators over a fresh ring. Convenience for tests and JSON input.
    pub fn parse(vars: &[&str], gens: &[&str]) -> Result<Ideal> {
        let ring = PolyRing::new(vars.iter().copied())?;
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            out.push(crate::poly::parse_polynomial(g, &ring)?);
        }
        Ok(Ideal::new(&ring, out))
    }
}

/// A reduced Gröbner basis: every S-polynomial reduces to zero, no leading
/// term divides any term of another element, leading coefficients are 1.
/// Basis elements are sorted ascending by leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: RingRef,
    pub order: MonomialOrder,
    pub basis: Vec<Polynomial>,
    /// engine-form cache: terms sorted descending under `order`, integer primitive
    pub(crate) engine: Vec<Vec<(Mono, BigInt)>>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant() && !self.basis[0].is_zero()
    }

    /// True iff f reduces to zero, i.e. f lies in the ideal.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }
}

/// Reduced Gröbner basis under the default budget.
pub fn groebner_basis(ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis> {
    groebner_basis_with(ideal, order, &Budget::default())
}

/// Reduced Gröbner basis; deterministic for fixed input, order, and budget.
pub fn groebner_basis_with(
    ideal: &Ideal,
    order: MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let engine_in: Vec<Vec<(Mono, BigInt)>> = ideal
        .gens
        .iter()
        .map(|g| engine::to_engine(g, order))
        .collect();
    let engine_out = engine::buchberger(engine_in, ideal.ring.num_vars(), order, budget)?;
    let basis = engine_out
        .iter()
        .map(|t| engine::to_public_monic(&ideal.ring, t))
        .collect();
    Ok(GroebnerBasis {
        ring: ideal.ring.clone(),
        order,
        basis,
        engine: engine_out,
    })
}

/// Remainder of multivariate division of f by the basis; zero iff f is in
/// the ideal. Exact over the rationals.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if !same_ring(f.ring(), &gb.ring) {
        return Err(Error::RingMismatch);
    }
    let (terms, scale) = f.primitive_integer_terms();
    let mut engine_f = terms;
    engine::sort_terms(&mut engine_f, gb.order);
    let budget = Budget::default();
    let (reduced, mult) = engine::reduce_full(engine_f, &gb.engine, gb.order, &budget)?;
    // f = (integer form) / scale, reduced = mult * (integer form) mod ideal
    let factor = BigRational::one() / (scale * mult);
    Ok(Polynomial::from_terms(
        &gb.ring,
        reduced
            .into_iter()
            .map(|(m, c)| (m, BigRational::from_integer(c) * &factor))
            .collect(),
    ))
}

/// Direct check that every S-polynomial of basis pairs reduces to zero.
pub fn buchberger_criterion(gb: &GroebnerBasis) -> Result<bool> {
    engine::buchberger_criterion(gb)
}
