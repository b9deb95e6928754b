//! The Chow–Lam pipeline: locus ideals and forms (implicit and
//! parametric), recovery ideals, residual analysis, a randomized
//! membership oracle, swept varieties, and hypersurface duals.
//!
//! Conventions. A variety V ⊂ Gr(k,n) is given in the dual Plücker
//! variables q_I, |I| = k; the Chow–Lam ambient Gr(l,n), l = n-r+k, is
//! coordinatized by the primal variables p_R, |R| = n-l = r-k. Plücker
//! relations of both sides are always part of the pipeline ideals.
//! Eliminations are preceded by a saturation with respect to a Plücker
//! coordinate not vanishing identically on the relevant locus; this kills
//! the cone-apex components on which every bilinear incidence form
//! vanishes and which would otherwise swallow the eliminant.

use crate::error::{Error, Result};
use crate::grassmann::{
    containment_relations_in, dual_plucker_vector, incidence_ring, insertion_sign,
    join_expansion, plucker_relations_in, plucker_ring, random_matrix, GrassmannContext,
    PlueckerIndex, SubspaceMatrix,
};
use crate::groebner::{
    eliminate_with, groebner_basis_with, hilbert_dim_degree, ideal_equal_with,
    ideal_quotient_with, is_unit_ideal, normal_form, radical_membership_with, saturation_with,
    Budget, GroebnerBasis, Ideal, MonomialOrder,
};
use crate::poly::{same_ring, Mono, PolyMatrix, PolyRing, Polynomial, RingRef};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// A subvariety of Gr(k,n) in dual Plücker coordinates. The stored ideal
/// always contains the Plücker relations of Gr(k,n).
#[derive(Debug, Clone)]
pub struct VarietyIdeal {
    pub ctx: GrassmannContext,
    pub ideal: Ideal,
}

impl VarietyIdeal {
    /// Wraps an ideal in the q-ring of Gr(k,n), adjoining the Plücker
    /// relations if absent.
    pub fn new(ctx: GrassmannContext, ideal: Ideal) -> Result<Self> {
        let expected = plucker_ring("q", ctx.k, ctx.n);
        if ideal.ring().var_names() != expected.var_names() {
            return Err(Error::InvalidInput(format!(
                "variety ideal must live in the dual Plücker ring of Gr({},{})",
                ctx.k, ctx.n
            )));
        }
        let mut gens = ideal.gens().to_vec();
        for rel in plucker_relations_in(ideal.ring(), "q", ctx.k, ctx.n) {
            gens.push(rel);
        }
        Ok(VarietyIdeal {
            ctx,
            ideal: Ideal::new(ideal.ring(), gens),
        })
    }

    pub fn ring(&self) -> &RingRef {
        self.ideal.ring()
    }

    /// A Plücker coordinate not vanishing identically on V, used to
    /// saturate away cone-apex junk before eliminations.
    fn nonvanishing_coordinate(&self, budget: &Budget) -> Result<Option<PlueckerIndex>> {
        for idx in PlueckerIndex::all(self.ctx.k, self.ctx.n) {
            let v = Polynomial::var_named(self.ring(), &idx.name("q", self.ctx.n))?;
            if !radical_membership_with(&v, &self.ideal, budget)? {
                return Ok(Some(idx));
            }
        }
        Ok(None)
    }
}

/// A polynomial family of k-row matrices sweeping out V.
#[derive(Debug, Clone)]
pub struct Parametrization {
    pub params: Vec<String>,
    pub matrix: PolyMatrix,
}

impl Parametrization {
    pub fn parse(params: &[&str], rows: &[Vec<&str>]) -> Result<Self> {
        let ring = PolyRing::new(params.iter().copied())?;
        let mut data = Vec::new();
        for row in rows {
            for entry in row {
                data.push(crate::poly::parse_polynomial(entry, &ring)?);
            }
        }
        let k = rows.len();
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        Ok(Parametrization {
            params: params.iter().map(|s| s.to_string()).collect(),
            matrix: PolyMatrix::new(&ring, k, n, data),
        })
    }
}

/// Output of the Chow–Lam computation: the locus ideal in the primal
/// variables of Gr(n-r+k, n), and the single defining form when the locus
/// is a hypersurface (the constant 1 otherwise).
#[derive(Debug, Clone)]
pub struct ChowLamResult {
    pub ctx: GrassmannContext,
    pub locus_ideal: Ideal,
    pub form: Polynomial,
    pub is_hypersurface: bool,
    /// set when V's dimension differs from k(r-k)-1
    pub dimension_warning: Option<String>,
}

impl ChowLamResult {
    pub fn target_ring(&self) -> &RingRef {
        self.locus_ideal.ring()
    }
}

fn lift_by_name(f: &Polynomial, target: &RingRef) -> Result<Polynomial> {
    let src = f.ring();
    let mut map = Vec::with_capacity(src.num_vars());
    for name in src.var_names() {
        map.push(
            target
                .var_index(name)
                .ok_or_else(|| Error::UndeclaredVariable(name.clone()))?,
        );
    }
    Ok(f.map_variables(target, &map))
}

/// Extracts the hypersurface form from an eliminant that already contains
/// the target Plücker relations.
fn extract_form(
    elim: &Ideal,
    m_primal: usize,
    n: usize,
    budget: &Budget,
) -> Result<(Ideal, Polynomial, bool)> {
    let ring = elim.ring();
    let plucker = Ideal::new(ring, plucker_relations_in(ring, "p", m_primal, n));
    let one = Polynomial::one(ring);
    if is_unit_ideal(elim)? {
        return Ok((elim.clone(), one, false));
    }
    let (dim_locus, _) = hilbert_dim_degree(elim)?;
    let (dim_gr, _) = hilbert_dim_degree(&plucker)?;
    if dim_locus + 1 != dim_gr {
        return Ok((elim.clone(), one, false));
    }
    let gb_p = groebner_basis_with(&plucker, MonomialOrder::GrevLex, budget)?;
    let gb_e = groebner_basis_with(elim, MonomialOrder::GrevLex, budget)?;
    let mut candidates: Vec<Polynomial> = Vec::new();
    for g in &gb_e.basis {
        let nf = normal_form(g, &gb_p)?;
        if nf.is_zero() {
            continue;
        }
        let nf = nf.normalized();
        if !candidates.contains(&nf) {
            candidates.push(nf);
        }
    }
    candidates.sort_by_key(|f| (f.total_degree().unwrap_or(0), f.num_terms(), f.to_string()));
    for cand in candidates {
        let mut gens = plucker.gens().to_vec();
        gens.push(cand.clone());
        let principal = Ideal::new(ring, gens);
        if ideal_equal_with(&principal, elim, budget)? {
            return Ok((principal, cand, true));
        }
    }
    // codimension one but not principal modulo the Plücker ideal
    Ok((elim.clone(), one, false))
}

/// Chow–Lam locus of an implicitly given variety: eliminate the source
/// q-variables from I(V) + incidence relations + both Plücker ideals,
/// after saturating by a coordinate not vanishing on V.
pub fn chow_lam_ideal(v: &VarietyIdeal, budget: &Budget) -> Result<ChowLamResult> {
    let ctx = v.ctx;
    let (k, n) = (ctx.k, ctx.n);
    let l = ctx.target_subspace_dim();
    let m_primal = n - l;

    let mut dimension_warning = None;
    if let Ok((dim, _)) = hilbert_dim_degree(&v.ideal) {
        let expected = ctx.dim_v() + 1; // affine cone
        if dim != expected {
            dimension_warning = Some(format!(
                "variety has affine cone dimension {dim}, expected {expected}"
            ));
        }
    }

    let target = plucker_ring("p", m_primal, n);
    let sat_idx = match v.nonvanishing_coordinate(budget)? {
        Some(idx) => idx,
        None => {
            // V is empty (or irrelevant): empty locus
            return Ok(ChowLamResult {
                ctx,
                locus_ideal: Ideal::new(&target, vec![Polynomial::one(&target)]),
                form: Polynomial::one(&target),
                is_hypersurface: false,
                dimension_warning,
            });
        }
    };

    // ring [t | q-block | p-block]
    let inc = incidence_ring(k, l, n);
    let mut names = vec!["t_sat".to_string()];
    names.extend(inc.var_names().iter().cloned());
    let total = PolyRing::new(names)?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in v.ideal.gens() {
        gens.push(lift_by_name(g, &total)?);
    }
    for g in containment_relations_in(&inc, k, l, n) {
        gens.push(lift_by_name(&g, &total)?);
    }
    for g in plucker_relations_in(&total, "p", m_primal, n) {
        gens.push(g);
    }
    let sat_var = Polynomial::var_named(&total, &sat_idx.name("q", n))?;
    gens.push(
        Polynomial::var(&total, 0)
            .mul(&sat_var)
            .sub(&Polynomial::one(&total)),
    );
    let mut drop: Vec<String> = vec!["t_sat".to_string()];
    drop.extend(PlueckerIndex::all(k, n).iter().map(|i| i.name("q", n)));
    let drop_refs: Vec<&str> = drop.iter().map(String::as_str).collect();
    let elim = eliminate_with(&Ideal::new(&total, gens), &drop_refs, budget)?;
    let elim = crate::groebner::rehome(&elim, &target)?;

    let (locus_ideal, form, is_hypersurface) = extract_form(&elim, m_primal, n, budget)?;
    Ok(ChowLamResult {
        ctx,
        locus_ideal,
        form,
        is_hypersurface,
        dimension_warning,
    })
}

/// Chow–Lam locus of a parametrized family: substitute the concrete
/// minors q_I(L_θ) into the incidence relations, saturate by a nonzero
/// minor, and eliminate the parameters.
pub fn chow_lam_parametric(
    par: &Parametrization,
    ctx: GrassmannContext,
    budget: &Budget,
) -> Result<ChowLamResult> {
    let (k, n) = (ctx.k, ctx.n);
    if par.matrix.rows != k || par.matrix.cols != n {
        return Err(Error::InvalidInput(format!(
            "parametrization must be a {k}x{n} matrix"
        )));
    }
    let l = ctx.target_subspace_dim();
    let m_primal = n - l;
    let target = plucker_ring("p", m_primal, n);

    let minors = par.matrix.minors(k)?;
    let indices = PlueckerIndex::all(k, n);
    let minor_of: BTreeMap<PlueckerIndex, &Polynomial> =
        indices.iter().cloned().zip(minors.iter()).collect();
    let sat_minor = minors.iter().find(|f| !f.is_zero());
    let Some(sat_minor) = sat_minor else {
        return Err(Error::RankDeficient);
    };
    let needs_sat = !sat_minor.is_constant();

    // ring [t? | params | p-block]
    let mut names: Vec<String> = Vec::new();
    if needs_sat {
        names.push("t_sat".to_string());
    }
    names.extend(par.params.iter().cloned());
    let p_names: Vec<String> = PlueckerIndex::all(m_primal, n)
        .iter()
        .map(|i| i.name("p", n))
        .collect();
    names.extend(p_names.iter().cloned());
    let total = PolyRing::new(names)?;

    let mut gens: Vec<Polynomial> = Vec::new();
    // incidence forms with the q-side evaluated at the parametrized minors
    for s_set in PlueckerIndex::all_with_empty(k - 1, n) {
        for r_set in PlueckerIndex::all_with_empty(n - l - 1, n) {
            let mut acc = Polynomial::zero(&total);
            for t in 1..=n as u8 {
                if s_set.contains(t) || r_set.contains(t) {
                    continue;
                }
                let sign = insertion_sign(s_set.entries(), t) * insertion_sign(r_set.entries(), t);
                let q_poly = lift_by_name(minor_of[&s_set.insert(t)], &total)?;
                let p_var = Polynomial::var_named(&total, &r_set.insert(t).name("p", n))?;
                let term = q_poly.mul(&p_var);
                acc = if sign >= 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            gens.push(acc);
        }
    }
    for g in plucker_relations_in(&total, "p", m_primal, n) {
        gens.push(g);
    }
    if needs_sat {
        gens.push(
            Polynomial::var(&total, 0)
                .mul(&lift_by_name(sat_minor, &total)?)
                .sub(&Polynomial::one(&total)),
        );
    }
    let mut drop: Vec<String> = Vec::new();
    if needs_sat {
        drop.push("t_sat".to_string());
    }
    drop.extend(par.params.iter().cloned());
    let drop_refs: Vec<&str> = drop.iter().map(String::as_str).collect();
    let elim = eliminate_with(&Ideal::new(&total, gens), &drop_refs, budget)?;
    let elim = crate::groebner::rehome(&elim, &target)?;

    let (locus_ideal, form, is_hypersurface) = extract_form(&elim, m_primal, n, budget)?;
    Ok(ChowLamResult {
        ctx,
        locus_ideal,
        form,
        is_hypersurface,
        dimension_warning: None,
    })
}

/// Reference construction for the parametric locus: stack the k
/// parametrized rows with n-r generic rows, take the maximal minors as the
/// target coordinates, and eliminate parameters and auxiliaries. Slower
/// than `chow_lam_parametric`; kept as an independent cross-check.
pub fn chow_lam_parametric_stacked(
    par: &Parametrization,
    ctx: GrassmannContext,
    budget: &Budget,
) -> Result<ChowLamResult> {
    let (k, n, r) = (ctx.k, ctx.n, ctx.r);
    let l = ctx.target_subspace_dim();
    let m_primal = n - l;
    let aux_rows = n - r;
    let target = plucker_ring("p", m_primal, n);

    let mut names: Vec<String> = par.params.clone();
    for i in 0..aux_rows {
        for j in 0..n {
            names.push(format!("u{}_{}", i + 1, j + 1));
        }
    }
    let p_names: Vec<String> = PlueckerIndex::all(m_primal, n)
        .iter()
        .map(|i| i.name("p", n))
        .collect();
    names.extend(p_names.iter().cloned());
    let total = PolyRing::new(names)?;

    // stacked (k + aux) x n matrix over the combined ring
    let mut rows: Vec<Vec<Polynomial>> = Vec::new();
    for i in 0..k {
        let mut row = Vec::new();
        for j in 0..n {
            row.push(lift_by_name(par.matrix.get(i, j), &total)?);
        }
        rows.push(row);
    }
    for i in 0..aux_rows {
        let mut row = Vec::new();
        for j in 0..n {
            row.push(Polynomial::var_named(&total, &format!("u{}_{}", i + 1, j + 1))?);
        }
        rows.push(row);
    }
    let stack = PolyMatrix::from_rows(&total, rows);
    let all_rows: Vec<usize> = (0..l).collect();
    let mut gens = Vec::new();
    for r_set in PlueckerIndex::all(m_primal, n) {
        let co = r_set.complement(n);
        let det = stack.minor(&all_rows, &co.positions());
        let sign = r_set.complement_sign(n);
        let p_var = Polynomial::var_named(&total, &r_set.name("p", n))?;
        let rhs = if sign >= 0 { det } else { det.neg() };
        gens.push(p_var.sub(&rhs));
    }
    let drop: Vec<String> = total.var_names()[..total.num_vars() - p_names.len()].to_vec();
    let drop_refs: Vec<&str> = drop.iter().map(String::as_str).collect();
    let elim = eliminate_with(&Ideal::new(&total, gens), &drop_refs, budget)?;
    let elim = crate::groebner::rehome(&elim, &target)?;
    let (locus_ideal, form, is_hypersurface) = extract_form(&elim, m_primal, n, budget)?;
    Ok(ChowLamResult {
        ctx,
        locus_ideal,
        form,
        is_hypersurface,
        dimension_warning: None,
    })
}

/// The recovered-scheme ideal W_V in the q-variables of Gr(k,n): expand
/// the form at the join A ∨ P, treating the A coordinates as free
/// variables, and collect the coefficients of the A-monomials.
pub fn recovery_ideal(result: &ChowLamResult) -> Result<Ideal> {
    recovery_ideal_opts(result, false, false)
}

/// Recovery with explicit choices: `reduce_mod_a` first reduces the
/// expansion modulo the Plücker relations of the A coordinates (the exact
/// membership conditions when A ranges over a Grassmannian rather than a
/// free space); `include_plucker` adjoins the Plücker relations of
/// Gr(k,n) to the output.
pub fn recovery_ideal_opts(
    result: &ChowLamResult,
    reduce_mod_a: bool,
    include_plucker: bool,
) -> Result<Ideal> {
    if !result.is_hypersurface {
        return Err(Error::InvalidInput(
            "recovery requires a hypersurface Chow–Lam locus (form != 1)".into(),
        ));
    }
    let ctx = result.ctx;
    let (k, n, r) = (ctx.k, ctx.n, ctx.r);
    let a_dim = n - r;
    let l = ctx.target_subspace_dim();
    let m_primal = n - l;

    // combined ring [a-block | q-block]
    let a_indices = PlueckerIndex::all_with_empty(a_dim, n);
    let q_indices = PlueckerIndex::all(k, n);
    let mut names: Vec<String> = a_indices.iter().map(|i| i.name("a", n)).collect();
    if a_dim == 0 {
        names = vec!["a".to_string()];
    }
    names.extend(q_indices.iter().map(|i| i.name("q", n)));
    let combined = PolyRing::new(names)?;
    let n_a = if a_dim == 0 { 1 } else { a_indices.len() };

    let table = join_expansion(a_dim, k, n)?;
    // images of the p-variables: p_R = sign(R) q_{R^c}(A ∨ P)
    let mut images: Vec<Polynomial> = Vec::new();
    for r_set in PlueckerIndex::all(m_primal, n) {
        let co = r_set.complement(n);
        let sign = r_set.complement_sign(n);
        let mut acc = Polynomial::zero(&combined);
        for (s, j_idx, k_idx) in &table.rows[&co] {
            let a_poly = if a_dim == 0 {
                Polynomial::one(&combined)
            } else {
                Polynomial::var_named(&combined, &j_idx.name("a", n))?
            };
            let q_poly = Polynomial::var_named(&combined, &k_idx.name("q", n))?;
            let term = a_poly.mul(&q_poly);
            acc = if s * sign >= 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        images.push(acc);
    }
    let expanded = result.form.substitute(&combined, &images);
    // A ranges over Gr(n-r, n): reduce modulo the Plücker relations of the
    // a-coordinates before collecting coefficients, otherwise the
    // generators are too strong
    let expanded = if reduce_mod_a && a_dim >= 2 {
        let plucker_a = Ideal::new(
            &combined,
            plucker_relations_in(&combined, "a", a_dim, n),
        );
        let gb_a = groebner_basis_with(&plucker_a, MonomialOrder::GrevLex, &Budget::default())?;
        normal_form(&expanded, &gb_a)?
    } else {
        expanded
    };

    // collect coefficients of the a-monomials
    let q_ring = plucker_ring("q", k, n);
    let mut groups: BTreeMap<Vec<u16>, Vec<(Mono, BigRational)>> = BTreeMap::new();
    for (m, c) in expanded.terms() {
        let exps = m.exps();
        let a_part = exps[..n_a].to_vec();
        let q_part = Mono::from_exps(exps[n_a..].to_vec());
        groups.entry(a_part).or_default().push((q_part, c.clone()));
    }
    let mut gens: Vec<Polynomial> = Vec::new();
    for (_, terms) in groups {
        let f = Polynomial::from_terms(&q_ring, terms).normalized();
        if !f.is_zero() && !gens.contains(&f) {
            gens.push(f);
        }
    }
    if include_plucker {
        for rel in plucker_relations_in(&q_ring, "q", k, n) {
            if !gens.contains(&rel) {
                gens.push(rel);
            }
        }
    }
    Ok(Ideal::new(&q_ring, gens))
}

/// Verdict of the randomized membership oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    In,
    Out,
    Undetermined,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::In => write!(f, "in"),
            Verdict::Out => write!(f, "out"),
            Verdict::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// Samples random complements A and tests whether every Q = P ∨ A lies in
/// the Chow–Lam locus, by pulling I(V) back to Gr(k, Q) and testing
/// projective nonemptiness. A failing sample is an exact certificate that
/// P is outside the recovered variety; passing samples give one-sided
/// probabilistic evidence of membership.
pub fn membership_oracle(
    p: &SubspaceMatrix,
    v: &VarietyIdeal,
    trials: usize,
    seed: u64,
    budget: &Budget,
) -> Result<Verdict> {
    let ctx = v.ctx;
    let (k, n) = (ctx.k, ctx.n);
    if p.subspace_dim() != k || p.ambient() != n {
        return Err(Error::InvalidInput("P must be a point of Gr(k,n)".into()));
    }
    if trials == 0 {
        return Err(Error::OutOfRange("trials must be at least 1".into()));
    }
    let p_rows = p.to_rowspan();
    // short-circuit: P ∈ V implies membership exactly
    {
        let q = dual_plucker_vector(&SubspaceMatrix::rowspan(p_rows.clone())?)?;
        let vals = crate::grassmann::coords_to_values(&q, k, n);
        if v.ideal.gens().iter().all(|g| g.evaluate_slice(&vals).is_zero()) {
            return Ok(Verdict::In);
        }
    }
    let a_dim = n - ctx.r;
    let l = ctx.target_subspace_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const BOUND: i64 = 50;
    for _ in 0..trials {
        let mut attempts = 0;
        let q_basis = loop {
            attempts += 1;
            if attempts > 64 {
                return Err(Error::DegenerateSample(64));
            }
            let a = random_matrix(&mut rng, a_dim, n, BOUND);
            let stacked = p_rows.stack(&a);
            if stacked.rank() == l {
                break stacked;
            }
        };
        match q_in_locus(&q_basis, v, budget) {
            Ok(true) => continue,
            Ok(false) => return Ok(Verdict::Out),
            Err(Error::ResourceLimit(_)) => return Ok(Verdict::Undetermined),
            Err(e) => return Err(e),
        }
    }
    Ok(Verdict::In)
}

/// Does the subspace spanned by `q_basis` (l×n) belong to the Chow–Lam
/// locus of V? Decided exactly by restricting I(V) to Gr(k, Q).
pub fn q_in_locus(q_basis: &crate::poly::RationalMatrix, v: &VarietyIdeal, budget: &Budget) -> Result<bool> {
    let ctx = v.ctx;
    let (k, n) = (ctx.k, ctx.n);
    let l = q_basis.rows;
    // images q_I(P') for P' = M · Q, M symbolic k×l
    let m_ring = plucker_ring("m", k, l);
    let mut images = Vec::new();
    for i_set in PlueckerIndex::all(k, n) {
        let cols = i_set.positions();
        let mut acc = Polynomial::zero(&m_ring);
        for j_set in PlueckerIndex::all(k, l) {
            let d = q_basis.minor(&j_set.positions(), &cols);
            if d.is_zero() {
                continue;
            }
            let var = Polynomial::var_named(&m_ring, &j_set.name("m", l))?;
            acc = acc.add(&var.mul_scalar(&d));
        }
        images.push(acc);
    }
    let mut gens: Vec<Polynomial> = v
        .ideal
        .gens()
        .iter()
        .map(|g| g.substitute(&m_ring, &images))
        .collect();
    gens.extend(plucker_relations_in(&m_ring, "m", k, l));
    let restricted = Ideal::new(&m_ring, gens);
    let (dim, _) = crate::groebner::hilbert_dim_degree_with(&restricted, budget)?;
    Ok(dim >= 1)
}

/// Report of the residual analysis of a recovered-scheme ideal W against V.
#[derive(Debug, Clone)]
pub struct ResidualReport {
    /// saturation (W : I(V)^∞); the unit ideal when the extra components
    /// are embedded in V
    pub saturation: Ideal,
    /// the part of W away from its top-dimensional locus: equal to the
    /// saturation when that is proper, otherwise the ideal quotient
    /// (W : top part)
    pub residual: Ideal,
    pub via_saturation: bool,
    /// the deterministically chosen primary component at each candidate,
    /// when the embedded route ran
    pub embedded_parts: Vec<Ideal>,
    /// (affine cone dimension, degree) of the residual
    pub dim_degree: Option<(usize, u64)>,
    pub candidates: Vec<CandidateVerdict>,
    /// support of the residual equals the union of the candidate loci
    /// (radical membership both ways)
    pub support_matches: bool,
}

#[derive(Debug, Clone)]
pub struct CandidateVerdict {
    /// saturating W by the candidate ideal changes W, i.e. the candidate
    /// locus carries a (possibly embedded) component of W
    pub is_associated: bool,
    /// candidate generators lie in the radical of the residual
    pub in_residual_radical: bool,
}

/// One primary component of W supported on the candidate locus, chosen
/// deterministically: adjoin the smallest power of the candidate's first
/// generator that makes the decomposition top ∩ components == W close up,
/// then isolate by saturating away the irrelevant ideal and the other
/// candidates. Returns the components and the power used.
fn embedded_components(
    w: &Ideal,
    top: &Ideal,
    candidates: &[Ideal],
    budget: &Budget,
) -> Result<Option<Vec<Ideal>>> {
    let ring = w.ring();
    'powers: for e in 1..=12u32 {
        let mut comps = Vec::with_capacity(candidates.len());
        for (i, cand) in candidates.iter().enumerate() {
            let Some(v) = cand.gens().first() else {
                return Ok(None);
            };
            let mut gens = w.gens().to_vec();
            gens.push(v.pow(e));
            let mut c = crate::groebner::saturate_irrelevant(&Ideal::new(ring, gens), budget)?;
            for (j, other) in candidates.iter().enumerate() {
                if i != j {
                    c = saturation_with(&c, other, budget)?;
                }
            }
            comps.push(c);
        }
        let mut meet = top.clone();
        for c in &comps {
            meet = crate::groebner::ideal_intersection_with(&meet, c, budget)?;
        }
        if !ideal_equal_with(&meet, w, budget)? {
            continue 'powers;
        }
        return Ok(Some(comps));
    }
    Ok(None)
}

/// Residual analysis: saturate W by I(V); when the saturation is the unit
/// ideal (residual components embedded in V), extract the residual from
/// the candidate supports instead: the intersection of deterministically
/// chosen primary components at each candidate.
pub fn residual_analysis(
    w: &Ideal,
    v: &VarietyIdeal,
    candidates: &[Ideal],
    budget: &Budget,
) -> Result<ResidualReport> {
    if !same_ring(w.ring(), v.ring()) {
        return Err(Error::RingMismatch);
    }
    // saturating away the irrelevant ideal first changes nothing below
    // (I(V) sits inside the irrelevant ideal) and keeps the bases small
    let w = &crate::groebner::saturate_irrelevant(w, budget)?;
    let sat = saturation_with(w, &v.ideal, budget)?;
    let sat_is_unit = is_unit_ideal(&sat)?;
    let mut embedded_parts: Vec<Ideal> = Vec::new();
    let (residual, via_saturation) = if !sat_is_unit {
        (sat.clone(), true)
    } else {
        let w0 = w.clone();
        // top part: saturate by each candidate support ideal in turn
        let mut top = w0.clone();
        for c in candidates {
            top = saturation_with(&top, c, budget)?;
        }
        match embedded_components(&w0, &top, candidates, budget)? {
            Some(comps) => {
                embedded_parts = comps.clone();
                let mut acc = comps[0].clone();
                for c in &comps[1..] {
                    acc = crate::groebner::ideal_intersection_with(&acc, c, budget)?;
                }
                (acc, false)
            }
            None => (ideal_quotient_with(&w0, &top, budget)?, false),
        }
    };
    let dim_degree = if !is_unit_ideal(&residual)? && residual.is_homogeneous() {
        Some(crate::groebner::hilbert_dim_degree_with(&residual, budget)?)
    } else {
        None
    };
    let mut verdicts = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let sat_c = saturation_with(w, c, budget)?;
        let is_associated = !ideal_equal_with(&sat_c, w, budget)?;
        // the candidate's generators should cut out its own part of the
        // residual: test against the matching component when available
        let part = embedded_parts.get(i).unwrap_or(&residual);
        let mut in_rad = true;
        for g in c.gens() {
            if !radical_membership_with(g, part, budget)? {
                in_rad = false;
                break;
            }
        }
        verdicts.push(CandidateVerdict {
            is_associated,
            in_residual_radical: in_rad,
        });
    }
    // both ways: residual ⊆ every candidate (vanishes on each locus), and
    // the intersection of the candidates is inside the residual's radical
    let mut support_matches = !candidates.is_empty();
    if support_matches {
        let mut meet: Option<Ideal> = None;
        for c in candidates {
            let gb_c = groebner_basis_with(c, MonomialOrder::GrevLex, budget)?;
            for g in residual.gens() {
                if !gb_c.contains(g)? {
                    support_matches = false;
                    break;
                }
            }
            meet = Some(match meet {
                None => c.clone(),
                Some(prev) => crate::groebner::ideal_intersection_with(&prev, c, budget)?,
            });
        }
        if support_matches {
            for g in meet.unwrap().gens() {
                if !radical_membership_with(g, &residual, budget)? {
                    support_matches = false;
                    break;
                }
            }
        }
    }
    Ok(ResidualReport {
        saturation: sat,
        residual,
        via_saturation,
        embedded_parts,
        dim_degree,
        candidates: verdicts,
        support_matches,
    })
}

/// The ideal in the coordinates of P^{n-1} of the union of all (k-1)-spaces
/// in V: eliminate P's coordinates from I(V) + point-in-subspace
/// incidences.
pub fn sweep_ideal(v: &VarietyIdeal, budget: &Budget) -> Result<Ideal> {
    let ctx = v.ctx;
    let (k, n) = (ctx.k, ctx.n);
    let m_primal = n - k;
    // convert I(V) to the primal coordinates of P: q_I = sign(I ++ I^c) p_{I^c}
    let x_names: Vec<String> = (0..n).map(|i| format!("x{}", i + 1)).collect();
    let p_indices = PlueckerIndex::all(m_primal, n);
    let mut names = vec!["t_sat".to_string()];
    names.extend(p_indices.iter().map(|i| i.name("p", n)));
    names.extend(x_names.iter().cloned());
    let total = PolyRing::new(names)?;

    let q_indices = PlueckerIndex::all(k, n);
    let mut images = Vec::new();
    for i_set in &q_indices {
        let co = i_set.complement(n);
        let sign = crate::grassmann::concat_sign(i_set.entries(), co.entries());
        let var = Polynomial::var_named(&total, &co.name("p", n))?;
        images.push(if sign >= 0 { var } else { var.neg() });
    }
    let mut gens: Vec<Polynomial> = v
        .ideal
        .gens()
        .iter()
        .map(|g| g.substitute(&total, &images))
        .collect();
    // point x contained in P: containment relations for (1, k, n) with the
    // q-side being the point coordinates
    for r_set in PlueckerIndex::all_with_empty(n - k - 1, n) {
        let mut acc = Polynomial::zero(&total);
        for t in 1..=n as u8 {
            if r_set.contains(t) {
                continue;
            }
            let sign = insertion_sign(r_set.entries(), t);
            let x = Polynomial::var_named(&total, &x_names[t as usize - 1])?;
            let p = Polynomial::var_named(&total, &r_set.insert(t).name("p", n))?;
            let term = x.mul(&p);
            acc = if sign >= 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        gens.push(acc);
    }
    // saturate by a primal coordinate not vanishing on V
    let sat_idx = v
        .nonvanishing_coordinate(budget)?
        .ok_or_else(|| Error::InvalidInput("variety is empty".into()))?;
    let sat_var = Polynomial::var_named(&total, &sat_idx.complement(n).name("p", n))?;
    gens.push(
        Polynomial::var(&total, 0)
            .mul(&sat_var)
            .sub(&Polynomial::one(&total)),
    );
    let mut drop = vec!["t_sat".to_string()];
    drop.extend(p_indices.iter().map(|i| i.name("p", n)));
    let drop_refs: Vec<&str> = drop.iter().map(String::as_str).collect();
    let elim = eliminate_with(&Ideal::new(&total, gens), &drop_refs, budget)?;
    crate::groebner::saturate_irrelevant(&elim, budget)
}

/// Dual variety of the hypersurface {f = 0}: eliminate the point and
/// scaling variables from the conormal ideal (f, t·y_i - ∂f/∂x_i),
/// saturating by the scaling variable first. Output variables are named
/// y0, y1, ... in the order of f's ring.
pub fn dual_variety(f: &Polynomial, budget: &Budget) -> Result<Ideal> {
    if f.is_zero() || f.is_constant() || !f.is_homogeneous() {
        return Err(Error::InvalidInput(
            "dual_variety expects a nonconstant homogeneous form".into(),
        ));
    }
    let xr = f.ring();
    let n = xr.num_vars();
    let y_names: Vec<String> = (0..n).map(|i| format!("y{i}")).collect();
    let mut names = vec!["u_sat".to_string()];
    names.extend(xr.var_names().iter().cloned());
    names.push("t_scale".to_string());
    names.extend(y_names.iter().cloned());
    let total = PolyRing::new(names)?;
    let t = Polynomial::var_named(&total, "t_scale")?;
    let mut gens = vec![lift_by_name(f, &total)?];
    for i in 0..n {
        let dfi = lift_by_name(&f.derivative(i), &total)?;
        let y = Polynomial::var_named(&total, &y_names[i])?;
        gens.push(t.mul(&y).sub(&dfi));
    }
    gens.push(
        Polynomial::var_named(&total, "u_sat")?
            .mul(&t)
            .sub(&Polynomial::one(&total)),
    );
    let mut drop = vec!["u_sat".to_string(), "t_scale".to_string()];
    drop.extend(xr.var_names().iter().cloned());
    let drop_refs: Vec<&str> = drop.iter().map(String::as_str).collect();
    let elim = eliminate_with(&Ideal::new(&total, gens), &drop_refs, budget)?;
    let y_ring = PolyRing::new(y_names)?;
    let out = crate::groebner::rehome(&elim, &y_ring)?;
    crate::groebner::saturate_irrelevant(&out, budget)
}

/// Proportionality of two forms modulo the Grassmannian ideal of Gr(m,n)
/// in the variables `prefix...` of their common ring: compares canonical
/// normal-form representatives up to a nonzero scalar.
pub fn proportional_mod_plucker(
    a: &Polynomial,
    b: &Polynomial,
    prefix: &str,
    m: usize,
    n: usize,
    budget: &Budget,
) -> Result<bool> {
    let ring = a.ring();
    if !same_ring(ring, b.ring()) {
        return Err(Error::RingMismatch);
    }
    let plucker = Ideal::new(ring, plucker_relations_in(ring, prefix, m, n));
    let gb = groebner_basis_with(&plucker, MonomialOrder::GrevLex, budget)?;
    let na = normal_form(a, &gb)?;
    let nb = normal_form(b, &gb)?;
    Ok(na.proportional(&nb))
}

/// Builds a GroebnerBasis of the variety ideal for repeated reductions.
pub fn variety_groebner(v: &VarietyIdeal, budget: &Budget) -> Result<GroebnerBasis> {
    groebner_basis_with(&v.ideal, MonomialOrder::GrevLex, budget)
}

/// A random rational point of V given by a parametrization: evaluates the
/// matrix at random parameter values until it has full rank.
pub fn sample_point<R: Rng>(
    par: &Parametrization,
    rng: &mut R,
    bound: i64,
) -> Result<SubspaceMatrix> {
    for _ in 0..64 {
        let vals: Vec<BigRational> = (0..par.params.len())
            .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound))))
            .collect();
        let mut rows = Vec::new();
        for i in 0..par.matrix.rows {
            let mut row = Vec::new();
            for j in 0..par.matrix.cols {
                row.push(par.matrix.get(i, j).evaluate_slice(&vals));
            }
            rows.push(row);
        }
        let m = crate::poly::RationalMatrix::from_rows(rows);
        if m.rank() == par.matrix.rows {
            return SubspaceMatrix::rowspan(m);
        }
    }
    Err(Error::DegenerateSample(64))
}
