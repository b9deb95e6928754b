//! Plücker coordinate machinery: coordinates of row spans, primal/dual
//! sign conversion, Plücker and incidence relations, Cauchy–Binet
//! projection, join expansion, projection kernels, Schubert hyperplanes.
//!
//! Sign convention, fixed once: p_J = sign(J^c ++ J) * q_{J^c}, where the
//! sign is the parity of the permutation sorting the concatenation. All
//! shuffle and insertion signs are derived from sorted-position parity.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Mono, PolyRing, Polynomial, RationalMatrix, RingRef};
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use std::collections::BTreeMap;

/// The triple (k, n, r): V lives in Gr(k,n), has dimension k(r-k)-1, and
/// its Chow-Lam locus lives in Gr(n-r+k, n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrassmannContext {
    pub k: usize,
    pub n: usize,
    pub r: usize,
}

impl GrassmannContext {
    pub fn new(k: usize, n: usize, r: usize) -> Result<Self> {
        if k == 0 || k >= r || r > n {
            return Err(Error::OutOfRange(format!(
                "need 0 < k < r <= n, got k={k}, r={r}, n={n}"
            )));
        }
        Ok(GrassmannContext { k, n, r })
    }

    /// Expected dimension of V: k(r-k) - 1.
    pub fn dim_v(&self) -> usize {
        self.k * (self.r - self.k) - 1
    }

    /// Linear dimension l of the Chow-Lam subspaces Q: l = n - r + k.
    pub fn target_subspace_dim(&self) -> usize {
        self.n - self.r + self.k
    }
}

/// Ascending 1-based column indices naming a Plücker coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlueckerIndex {
    entries: Vec<u8>,
}

impl PlueckerIndex {
    pub fn new(entries: &[usize]) -> Result<Self> {
        let e: Vec<u8> = entries.iter().map(|&v| v as u8).collect();
        if e.is_empty() || e[0] == 0 || !e.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "Plücker index must be strictly ascending and 1-based: {entries:?}"
            )));
        }
        Ok(PlueckerIndex { entries: e })
    }

    pub fn from_sorted(entries: Vec<u8>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        PlueckerIndex { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn positions(&self) -> Vec<usize> {
        self.entries.iter().map(|&v| v as usize - 1).collect()
    }

    pub fn contains(&self, t: u8) -> bool {
        self.entries.binary_search(&t).is_ok()
    }

    pub fn complement(&self, n: usize) -> PlueckerIndex {
        let e: Vec<u8> = (1..=n as u8).filter(|t| !self.contains(*t)).collect();
        PlueckerIndex { entries: e }
    }

    /// sign(self^c ++ self): the primal/dual conversion sign for a p-index.
    pub fn complement_sign(&self, n: usize) -> i8 {
        concat_sign(&self.complement(n).entries, &self.entries)
    }

    pub fn insert(&self, t: u8) -> PlueckerIndex {
        let mut e = self.entries.clone();
        let pos = e.partition_point(|&v| v < t);
        e.insert(pos, t);
        PlueckerIndex { entries: e }
    }

    pub fn remove(&self, t: u8) -> PlueckerIndex {
        let e = self.entries.iter().copied().filter(|&v| v != t).collect();
        PlueckerIndex { entries: e }
    }

    /// Variable name: `q12` style for n <= 9, `q_1_10` style otherwise.
    pub fn name(&self, prefix: &str, n: usize) -> String {
        if n <= 9 {
            let digits: String = self.entries.iter().map(|v| v.to_string()).collect();
            format!("{prefix}{digits}")
        } else {
            let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
            format!("{prefix}_{}", parts.join("_"))
        }
    }

    /// All size-m subsets of [n] in lexicographic order.
    pub fn all(m: usize, n: usize) -> Vec<PlueckerIndex> {
        (1..=n as u8)
            .combinations(m)
            .map(PlueckerIndex::from_sorted)
            .collect()
    }
}

/// Parity of inversions in the concatenation of two ascending sequences.
pub fn concat_sign(a: &[u8], b: &[u8]) -> i8 {
    let mut inv = 0usize;
    for &x in a {
        for &y in b {
            if x > y {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// (-1)^{#{x in X : x > t}}: the sorted-insertion sign.
pub fn insertion_sign(x: &[u8], t: u8) -> i8 {
    if x.iter().filter(|&&v| v > t).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceMode {
    Rowspan,
    Kernel,
}

/// An explicit matrix whose rowspan (or kernel) is a point of a Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceMatrix {
    pub mode: SubspaceMode,
    pub matrix: RationalMatrix,
}

impl SubspaceMatrix {
    pub fn rowspan(matrix: RationalMatrix) -> Result<Self> {
        if matrix.rank() != matrix.rows {
            return Err(Error::RankDeficient);
        }
        Ok(SubspaceMatrix {
            mode: SubspaceMode::Rowspan,
            matrix,
        })
    }

    pub fn kernel(matrix: RationalMatrix) -> Result<Self> {
        if matrix.rank() != matrix.rows {
            return Err(Error::RankDeficient);
        }
        Ok(SubspaceMatrix {
            mode: SubspaceMode::Kernel,
            matrix,
        })
    }

    pub fn ambient(&self) -> usize {
        self.matrix.cols
    }

    /// Linear dimension of the subspace.
    pub fn subspace_dim(&self) -> usize {
        match self.mode {
            SubspaceMode::Rowspan => self.matrix.rows,
            SubspaceMode::Kernel => self.matrix.cols - self.matrix.rows,
        }
    }

    /// Rowspan representation regardless of mode.
    pub fn to_rowspan(&self) -> RationalMatrix {
        match self.mode {
            SubspaceMode::Rowspan => self.matrix.clone(),
            SubspaceMode::Kernel => self.matrix.right_kernel(),
        }
    }
}

/// The Plücker coordinate ring of Gr(m, n), variables in lexicographic
/// index order.
pub fn plucker_ring(prefix: &str, m: usize, n: usize) -> RingRef {
    let names: Vec<String> = PlueckerIndex::all(m, n)
        .iter()
        .map(|i| i.name(prefix, n))
        .collect();
    PolyRing::new(names).expect("plucker ring names are distinct")
}

/// All m×m minors of a full-rank m×n rowspan matrix, indexed by ascending
/// column sets: the dual Plücker coordinates.
pub fn dual_plucker_vector(
    s: &SubspaceMatrix,
) -> Result<BTreeMap<PlueckerIndex, BigRational>> {
    if s.mode != SubspaceMode::Rowspan {
        return Err(Error::InvalidInput(
            "dual_plucker_vector expects a rowspan-mode subspace".into(),
        ));
    }
    let m = s.matrix.rows;
    let n = s.matrix.cols;
    let rows: Vec<usize> = (0..m).collect();
    let mut out = BTreeMap::new();
    let mut any_nonzero = false;
    for idx in PlueckerIndex::all(m, n) {
        let v = s.matrix.minor(&rows, &idx.positions());
        any_nonzero |= !v.is_zero();
        out.insert(idx, v);
    }
    if !any_nonzero {
        return Err(Error::RankDeficient);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvertDirection {
    DualToPrimal,
    PrimalToDual,
}

/// Signed complementation between primal and dual Plücker coordinates:
/// p_J = sign(J^c ++ J) * q_{J^c}. The round trip is the identity.
pub fn primal_dual_convert(
    coords: &BTreeMap<PlueckerIndex, BigRational>,
    m: usize,
    n: usize,
    direction: ConvertDirection,
) -> Result<BTreeMap<PlueckerIndex, BigRational>> {
    let mut out = BTreeMap::new();
    for (idx, val) in coords {
        if idx.size() != m {
            return Err(Error::IndexSizeMismatch);
        }
        let co = idx.complement(n);
        let sign = match direction {
            // q-index input I, output p-index J = I^c carries sign(I ++ I^c)...
            // in both directions the sign attaches to the p-side index
            ConvertDirection::DualToPrimal => co.complement_sign(n),
            ConvertDirection::PrimalToDual => idx.complement_sign(n),
        };
        let v = if sign >= 0 { val.clone() } else { -val.clone() };
        out.insert(co, v);
    }
    Ok(out)
}

/// The quadratic Grassmann–Plücker exchange relations for Gr(m, n), over
/// the given ring (variables named `prefix...`).
pub fn plucker_relations_in(ring: &RingRef, prefix: &str, m: usize, n: usize) -> Vec<Polynomial> {
    let mut seen: Vec<Polynomial> = Vec::new();
    if m == 0 || m >= n {
        return seen;
    }
    let var =
        |idx: &PlueckerIndex| -> usize { ring.var_index(&idx.name(prefix, n)).expect("plucker var") };
    let nv = ring.num_vars();
    for i_set in PlueckerIndex::all(m - 1, n) {
        for j_set in PlueckerIndex::all(m + 1, n) {
            let mut terms: Vec<(Mono, BigRational)> = Vec::new();
            for (a, &t) in j_set.entries().iter().enumerate() {
                if i_set.contains(t) {
                    continue;
                }
                let removal = if a % 2 == 0 { 1i8 } else { -1 };
                let insertion = insertion_sign(i_set.entries(), t);
                let left = i_set.insert(t);
                let right = j_set.remove(t);
                let sign = removal * insertion;
                let mut exps = vec![0u16; nv];
                exps[var(&left)] += 1;
                exps[var(&right)] += 1;
                terms.push((
                    Mono::from_exps(exps),
                    BigRational::from_integer(BigInt::from(sign)),
                ));
            }
            let f = Polynomial::from_terms(ring, terms);
            if f.is_zero() {
                continue;
            }
            let f = f.normalized();
            if !seen.contains(&f) {
                seen.push(f);
            }
        }
    }
    seen
}

/// Plücker relations in their own fresh ring.
pub fn plucker_relations(m: usize, n: usize) -> (RingRef, Vec<Polynomial>) {
    let ring = plucker_ring("q", m, n);
    let rels = plucker_relations_in(&ring, "q", m, n);
    (ring, rels)
}

/// Combined ring with dual variables q_I (|I| = k) of Gr(k, n) first and
/// primal variables p_R (|R| = n - l) of Gr(l, n) second.
pub fn incidence_ring(k: usize, l: usize, n: usize) -> RingRef {
    let mut names: Vec<String> = PlueckerIndex::all(k, n)
        .iter()
        .map(|i| i.name("q", n))
        .collect();
    names.extend(
        PlueckerIndex::all(n - l, n)
            .iter()
            .map(|i| i.name("p", n)),
    );
    PolyRing::new(names).expect("incidence ring names are distinct")
}

/// Bilinear incidence generators cutting out {(P, Q) : P ⊂ Q} together
/// with the two Plücker ideals. P ∈ Gr(k,n) in dual coordinates, Q ∈
/// Gr(l,n) in primal coordinates.
pub fn containment_relations_in(ring: &RingRef, k: usize, l: usize, n: usize) -> Vec<Polynomial> {
    let nv = ring.num_vars();
    let qvar = |idx: &PlueckerIndex| ring.var_index(&idx.name("q", n)).expect("q var");
    let pvar = |idx: &PlueckerIndex| ring.var_index(&idx.name("p", n)).expect("p var");
    let mut out: Vec<Polynomial> = Vec::new();
    for s_set in PlueckerIndex::all_with_empty(k - 1, n) {
        for r_set in PlueckerIndex::all_with_empty(n - l - 1, n) {
            let mut terms: Vec<(Mono, BigRational)> = Vec::new();
            for t in 1..=n as u8 {
                if s_set.contains(t) || r_set.contains(t) {
                    continue;
                }
                let sign = insertion_sign(s_set.entries(), t) * insertion_sign(r_set.entries(), t);
                let q_idx = s_set.insert(t);
                let p_idx = r_set.insert(t);
                let mut exps = vec![0u16; nv];
                exps[qvar(&q_idx)] += 1;
                exps[pvar(&p_idx)] += 1;
                terms.push((
                    Mono::from_exps(exps),
                    BigRational::from_integer(BigInt::from(sign)),
                ));
            }
            let f = Polynomial::from_terms(ring, terms);
            if f.is_zero() {
                continue;
            }
            let f = f.normalized();
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
    out
}

impl PlueckerIndex {
    /// Like `all`, but m = 0 yields the single empty index.
    pub fn all_with_empty(m: usize, n: usize) -> Vec<PlueckerIndex> {
        if m == 0 {
            vec![PlueckerIndex { entries: Vec::new() }]
        } else {
            PlueckerIndex::all(m, n)
        }
    }
}

/// Incidence generators in their own fresh ring [q | p].
pub fn containment_relations(k: usize, l: usize, n: usize) -> (RingRef, Vec<Polynomial>) {
    let ring = incidence_ring(k, l, n);
    let rels = containment_relations_in(&ring, k, l, n);
    (ring, rels)
}

/// Cauchy–Binet projection: q_I(MZ) = Σ_J q_J(M) det(Z[J, I]).
/// Returns the all-zero map when MZ drops rank.
pub fn project_plucker(
    z: &RationalMatrix,
    q: &BTreeMap<PlueckerIndex, BigRational>,
) -> Result<BTreeMap<PlueckerIndex, BigRational>> {
    let n = z.rows;
    let r = z.cols;
    if z.rank() != r {
        return Err(Error::RankDeficient);
    }
    let k = q.keys().next().map(|i| i.size()).unwrap_or(0);
    if k == 0 || q.keys().any(|i| i.size() != k) || q.values().all(|v| v.is_zero()) {
        return Err(Error::IndexSizeMismatch);
    }
    let mut out = BTreeMap::new();
    for i_set in PlueckerIndex::all(k, r) {
        let cols = i_set.positions();
        let mut acc = BigRational::zero();
        for (j_set, qv) in q {
            if qv.is_zero() {
                continue;
            }
            if j_set.entries().iter().any(|&e| e as usize > n) {
                return Err(Error::IndexSizeMismatch);
            }
            let d = z.minor(&j_set.positions(), &cols);
            if !d.is_zero() {
                acc += qv * d;
            }
        }
        out.insert(i_set, acc);
    }
    Ok(out)
}

/// One row of the join expansion table: q_I(A ∨ P) as a signed sum of
/// q_J(A) q_K(P) over shuffles J ⊔ K = I with |J| = a.
pub type JoinTerms = Vec<(i8, PlueckerIndex, PlueckerIndex)>;

#[derive(Debug, Clone)]
pub struct JoinExpansion {
    pub a: usize,
    pub k: usize,
    pub n: usize,
    pub rows: BTreeMap<PlueckerIndex, JoinTerms>,
}

/// Laplace expansion of the dual Plücker coordinates of a join A ∨ P,
/// A ∈ Gr(a, n), P ∈ Gr(k, n).
pub fn join_expansion(a: usize, k: usize, n: usize) -> Result<JoinExpansion> {
    if a + k > n {
        return Err(Error::OutOfRange(format!("a + k = {} exceeds n = {n}", a + k)));
    }
    let mut rows = BTreeMap::new();
    for i_set in PlueckerIndex::all(a + k, n) {
        let mut terms: JoinTerms = Vec::new();
        let entries = i_set.entries();
        for j_positions in (0..entries.len()).combinations(a) {
            let j_set: Vec<u8> = j_positions.iter().map(|&p| entries[p]).collect();
            let k_set: Vec<u8> = entries
                .iter()
                .enumerate()
                .filter(|(p, _)| !j_positions.contains(p))
                .map(|(_, &v)| v)
                .collect();
            let sign = concat_sign(&j_set, &k_set);
            terms.push((
                sign,
                PlueckerIndex::from_sorted(j_set),
                PlueckerIndex::from_sorted(k_set),
            ));
        }
        rows.insert(i_set, terms);
    }
    Ok(JoinExpansion { a, k, n, rows })
}

/// Rowspan basis of ker(Z^T) for an n×r matrix Z of rank r.
pub fn projection_kernel(z: &RationalMatrix) -> Result<SubspaceMatrix> {
    if z.rank() != z.cols {
        return Err(Error::RankDeficient);
    }
    let kernel = z.transpose().right_kernel();
    SubspaceMatrix::rowspan(kernel)
}

/// The linear form in q_I(L) vanishing exactly when L meets the codim-k
/// subspace H: the Laplace expansion of det[M_L; M_H] along the L rows.
pub fn schubert_hyperplane(h: &SubspaceMatrix, k: usize, n: usize) -> Result<Polynomial> {
    let m_h = h.to_rowspan();
    if m_h.cols != n || m_h.rows != n - k {
        return Err(Error::WrongCodimension);
    }
    let ring = plucker_ring("q", k, n);
    let h_rows: Vec<usize> = (0..n - k).collect();
    let mut terms = Vec::new();
    for i_set in PlueckerIndex::all(k, n) {
        let co = i_set.complement(n);
        let minor = m_h.minor(&h_rows, &co.positions());
        if minor.is_zero() {
            continue;
        }
        let sign = concat_sign(i_set.entries(), co.entries());
        let vi = ring
            .var_index(&i_set.name("q", n))
            .expect("plucker variable");
        let c = if sign >= 0 { minor } else { -minor };
        terms.push((Mono::var(ring.num_vars(), vi, 1), c));
    }
    Ok(Polynomial::from_terms(&ring, terms))
}

/// The variable permutation induced on the Plücker ring of Gr(m,n) by
/// reversing the ambient coordinates x_i -> x_{n+1-i}: position i maps to
/// the position of the reversed index set.
pub fn reversal_map(m: usize, n: usize) -> Vec<usize> {
    let all = PlueckerIndex::all(m, n);
    let pos: BTreeMap<&PlueckerIndex, usize> =
        all.iter().enumerate().map(|(i, ix)| (ix, i)).collect();
    all.iter()
        .map(|idx| {
            let mut rev: Vec<u8> = idx
                .entries()
                .iter()
                .map(|&v| n as u8 + 1 - v)
                .collect();
            rev.sort_unstable();
            pos[&PlueckerIndex::from_sorted(rev)]
        })
        .collect()
}

/// Ideal of Gr(m, n) in its dual Plücker ring.
pub fn grassmannian_ideal(m: usize, n: usize) -> (RingRef, Ideal) {
    let (ring, rels) = plucker_relations(m, n);
    let ideal = Ideal::new(&ring, rels);
    (ring, ideal)
}

/// Uniform random integer matrix with entries in [-bound, bound].
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> RationalMatrix {
    let data: Vec<BigRational> = (0..rows * cols)
        .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound))))
        .collect();
    RationalMatrix::new(rows, cols, data)
}

/// Random full-rank rowspan subspace, resampling on rank drops.
pub fn random_subspace<R: Rng>(
    rng: &mut R,
    dim: usize,
    n: usize,
    bound: i64,
) -> Result<SubspaceMatrix> {
    for _ in 0..64 {
        let m = random_matrix(rng, dim, n, bound);
        if m.rank() == dim {
            return SubspaceMatrix::rowspan(m).map(Ok).unwrap_or(Err(Error::RankDeficient));
        }
    }
    Err(Error::DegenerateSample(64))
}

/// Linear span of the union of two rowspan subspaces.
pub fn subspace_join(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let mut stacked = a.stack(b);
    let pivots = stacked.rref();
    let rows: Vec<Vec<BigRational>> = (0..pivots.len())
        .map(|i| stacked.row(i).to_vec())
        .collect();
    RationalMatrix::from_rows(rows)
}

/// Rows spanning {v : M v^T = 0} for a rowspan matrix M.
pub fn orthogonal_complement(m: &RationalMatrix) -> RationalMatrix {
    m.right_kernel()
}

/// Intersection of two rowspan subspaces.
pub fn subspace_intersection(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let na = orthogonal_complement(a);
    let nb = orthogonal_complement(b);
    let combined = na.stack(&nb);
    combined.right_kernel()
}

/// The Plücker coordinate of a map as a plain evaluation vector in ring
/// variable order (lexicographic index order).
pub fn coords_to_values(
    coords: &BTreeMap<PlueckerIndex, BigRational>,
    m: usize,
    n: usize,
) -> Vec<BigRational> {
    PlueckerIndex::all(m, n)
        .iter()
        .map(|i| coords.get(i).cloned().unwrap_or_else(BigRational::zero))
        .collect()
}
