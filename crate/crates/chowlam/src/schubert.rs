//! Schubert machinery: partitions, Schubert ideals for the coordinate
//! flag, Pieri-rule powers, the dimension lemma, the recovery criterion,
//! and the recovered-component predictor with its n-bounds.

use crate::chow::VarietyIdeal;
use crate::error::{Error, Result};
use crate::grassmann::{plucker_ring, plucker_relations_in, PlueckerIndex, SubspaceMatrix};
use crate::groebner::{hilbert_dim_degree_with, Budget, Ideal};
use crate::poly::{Polynomial, RationalMatrix};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A weakly decreasing tuple of positive integers (trailing zeros
/// trimmed); names a Schubert class inside a k×(n−k) box.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition must be weakly decreasing: {parts:?}"
            )));
        }
        let mut p = parts.to_vec();
        while p.last() == Some(&0) {
            p.pop();
        }
        Ok(Partition { parts: p })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// m repeated a times.
    pub fn rectangle(m: u32, a: u32) -> Self {
        Partition {
            parts: vec![m; a as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn fits_box(&self, rows: usize, cols: usize) -> bool {
        self.parts.len() <= rows && self.parts.first().map_or(true, |&p| p as usize <= cols)
    }

    /// Accepts the tuple form `(3,3,2,2)` and the exponent form `3^2 2^2`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let invalid = || Error::InvalidInput(format!("cannot parse partition `{text}`"));
        if t == "0" || t.is_empty() || t == "()" {
            return Ok(Partition::empty());
        }
        if let Some(inner) = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            let mut parts = Vec::new();
            for piece in inner.split(',') {
                let piece = piece.trim();
                if piece.is_empty() {
                    continue;
                }
                parts.push(piece.parse::<u32>().map_err(|_| invalid())?);
            }
            return Partition::new(&parts);
        }
        let mut parts = Vec::new();
        for chunk in t.split_whitespace() {
            match chunk.split_once('^') {
                Some((b, e)) => {
                    let b: u32 = b.trim().parse().map_err(|_| invalid())?;
                    let e: u32 = e.trim().parse().map_err(|_| invalid())?;
                    parts.extend(std::iter::repeat(b).take(e as usize));
                }
                None => parts.push(chunk.parse::<u32>().map_err(|_| invalid())?),
            }
        }
        Partition::new(&parts)
    }
}

impl fmt::Display for Partition {
    /// Exponent notation: `3^2 2^4`, single parts without exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if j - i == 1 {
                write!(f, "{}", self.parts[i])?;
            } else {
                write!(f, "{}^{}", self.parts[i], j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Dimension of the Schubert variety of l-dimensional subspaces containing
/// a fixed m-dimensional projective subspace: (l−m−1)(n−l) in Gr(l,n).
pub fn omega_dimension(l: usize, m: i64, n: usize) -> Result<usize> {
    if l > n || (m >= 0 && m as usize >= l) {
        return Err(Error::OutOfRange(format!(
            "need m < l <= n, got l={l}, m={m}, n={n}"
        )));
    }
    let lm = (l as i64 - m - 1) as usize;
    Ok(lm * (n - l))
}

/// Ideal of the Schubert variety Ω_λ for the standard coordinate flag:
/// the Plücker relations together with the coordinates q_I that vanish on
/// every subspace meeting the flag as λ prescribes.
pub fn schubert_ideal(lambda: &Partition, k: usize, n: usize) -> Result<Ideal> {
    if !lambda.fits_box(k, n - k) {
        return Err(Error::BoxViolation(k, n - k));
    }
    let ring = plucker_ring("q", k, n);
    let mut gens = plucker_relations_in(&ring, "q", k, n);
    let mut lam = lambda.parts().to_vec();
    lam.resize(k, 0);
    for idx in PlueckerIndex::all(k, n) {
        let kill = idx.entries().iter().enumerate().any(|(j, &ij)| {
            ij as usize > n - k + (j + 1) - lam[j] as usize
        });
        if kill {
            gens.push(Polynomial::var_named(&ring, &idx.name("q", n))?);
        }
    }
    Ok(Ideal::new(&ring, gens))
}

/// Expands [Ω_λ]·[Ω_1]^m by the iterated Pieri rule inside the k×(n−k)
/// box; the empty multiset means the class vanishes.
pub fn pieri_power(
    lambda: &Partition,
    m: u32,
    k: usize,
    n: usize,
) -> Result<BTreeMap<Partition, u64>> {
    if !lambda.fits_box(k, n - k) {
        return Err(Error::BoxViolation(k, n - k));
    }
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
    acc.insert(lambda.clone(), 1);
    for _ in 0..m {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (p, mult) in &acc {
            let mut parts = p.parts().to_vec();
            parts.push(0);
            for j in 0..parts.len() {
                // add one box to row j, staying weakly decreasing and in the box
                let new_val = parts[j] + 1;
                if new_val as usize > n - k || j >= k {
                    continue;
                }
                if j > 0 && new_val > parts[j - 1] {
                    continue;
                }
                let mut q = parts.clone();
                q[j] = new_val;
                let q = Partition::new(&q).expect("pieri step stays decreasing");
                *next.entry(q).or_insert(0) += mult;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// One predicted recovered Schubert component of Ω_1^{ki+1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertPrediction {
    /// Ω_{(k(i−a)+a+1)^{a+1}}
    pub partition: Partition,
    pub part_size: u32,
    pub repeats: u32,
    /// smallest n for which the component appears: k(i+1)+1 − a(k−1)
    pub min_n: u32,
    pub interpretation: String,
    /// the statement assumes i > k; smaller i is reported but flagged
    pub outside_theorem_hypothesis: bool,
}

/// Predicted recovered Schubert components of V = Ω_1^{ki+1} ⊂ Gr(k,n),
/// one for each a = 0..k−1, with their n-bounds.
pub fn recovered_components(k: usize, i: usize) -> Vec<SchubertPrediction> {
    let outside = i <= k;
    let mut out = Vec::with_capacity(k);
    for a in 0..k {
        let part_size = (k * (i - a.min(i)) + a + 1) as u32;
        let repeats = (a + 1) as u32;
        let min_n = (k * (i + 1) + 1 - a * (k - 1)) as u32;
        let space = match k {
            2 => "line".to_string(),
            3 => "plane".to_string(),
            _ => format!("{}-plane", k - 1),
        };
        let meets = i + 1 - a;
        let interpretation = if a == 0 {
            format!("{space} meets the intersection of {meets} of the H_j")
        } else if a + 1 == k {
            format!(
                "{space} contained in the intersection of {meets} of the H_j"
            )
        } else {
            format!(
                "{space} meets the intersection of {meets} of the H_j in dimension at least {a}"
            )
        };
        out.push(SchubertPrediction {
            partition: Partition::rectangle(part_size, repeats),
            part_size,
            repeats,
            min_n,
            interpretation,
            outside_theorem_hypothesis: outside,
        });
    }
    out
}

/// Dimension of the stratum V_{P,i} = {P' ∈ V : dim P'∩P ≥ i} as a
/// projective variety; −1 for empty.
pub fn stratum_dimension(
    v: &VarietyIdeal,
    p: &SubspaceMatrix,
    i: usize,
    budget: &Budget,
) -> Result<i64> {
    let (k, n) = (v.ctx.k, v.ctx.n);
    if p.subspace_dim() != k || p.ambient() != n {
        return Err(Error::InvalidInput("P must be a point of Gr(k,n)".into()));
    }
    if i >= k {
        return Err(Error::OutOfRange(format!("need 0 <= i <= k-1, got {i}")));
    }
    let mut gens = v.ideal.gens().to_vec();
    // the incidence condition is vacuous when forced by dimension
    if n + i + 1 > 2 * k {
        // basis change: first k rows span P
        let p_rows = p.to_rowspan();
        let mut g = p_rows.clone();
        for row in 0..n {
            let mut candidate_rows: Vec<Vec<BigRational>> = Vec::new();
            for r in 0..g.rows {
                candidate_rows.push(g.row(r).to_vec());
            }
            let mut unit = vec![BigRational::zero(); n];
            unit[row] = num_traits::One::one();
            candidate_rows.push(unit);
            let candidate = RationalMatrix::from_rows(candidate_rows);
            if candidate.rank() == candidate.rows {
                g = candidate;
            }
            if g.rows == n {
                break;
            }
        }
        debug_assert_eq!(g.rows, n);
        // L ∩ P >= i  <=>  L g^{-1} in the coordinate Schubert variety
        let g_inv = invert(&g)?;
        let lambda = Partition::rectangle((n + i + 1 - 2 * k) as u32, (i + 1) as u32);
        let mut lam = lambda.parts().to_vec();
        lam.resize(k, 0);
        let ring = v.ring();
        for idx in PlueckerIndex::all(k, n) {
            let kill = idx.entries().iter().enumerate().any(|(j, &ij)| {
                ij as usize > n - k + (j + 1) - lam[j] as usize
            });
            if !kill {
                continue;
            }
            // pull back q_idx along L -> L g^{-1} by Cauchy-Binet
            let cols = idx.positions();
            let mut acc = Polynomial::zero(ring);
            for j_set in PlueckerIndex::all(k, n) {
                let d = g_inv.minor(&j_set.positions(), &cols);
                if d.is_zero() {
                    continue;
                }
                let var = Polynomial::var_named(ring, &j_set.name("q", n))?;
                acc = acc.add(&var.mul_scalar(&d));
            }
            gens.push(acc);
        }
    }
    let ideal = Ideal::new(v.ring(), gens);
    let (dim, _) = hilbert_dim_degree_with(&ideal, budget)?;
    Ok(dim as i64 - 1)
}

fn invert(m: &RationalMatrix) -> Result<RationalMatrix> {
    let n = m.rows;
    let mut aug_rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = m.row(i).to_vec();
        for j in 0..n {
            row.push(if i == j {
                num_traits::One::one()
            } else {
                BigRational::zero()
            });
        }
        aug_rows.push(row);
    }
    let mut aug = RationalMatrix::from_rows(aug_rows);
    let pivots = aug.rref();
    if pivots.len() != n {
        return Err(Error::RankDeficient);
    }
    let mut out = RationalMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            *out.get_mut(i, j) = aug.get(i, n + j).clone();
        }
    }
    Ok(out)
}

/// The necessary membership condition of the recovery criterion: true iff
/// some stratum V_{P,i} has dimension at least (k−i−1)(r−k). Returning
/// false certifies P outside the recovered variety; true is inconclusive.
pub fn recovery_criterion(
    v: &VarietyIdeal,
    p: &SubspaceMatrix,
    budget: &Budget,
) -> Result<bool> {
    let (k, r) = (v.ctx.k, v.ctx.r);
    for i in 0..k {
        let dim = stratum_dimension(v, p, i, budget)?;
        let bound = ((k - i - 1) * (r - k)) as i64;
        if dim >= bound {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{hilbert_dim_degree, ideal_equal};
    use crate::poly::parse_polynomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn partition_forms_roundtrip() {
        let p = Partition::new(&[3, 3, 2, 2, 2, 2, 0]).unwrap();
        assert_eq!(p.to_string(), "3^2 2^4");
        assert_eq!(Partition::parse("3^2 2^4").unwrap(), p);
        assert_eq!(Partition::parse("(3,3,2,2,2,2)").unwrap(), p);
        assert_eq!(Partition::parse("0").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("7").unwrap(), Partition::new(&[7]).unwrap());
    }

    #[test]
    fn omega_dimension_examples() {
        assert_eq!(omega_dimension(3, 0, 5).unwrap(), 4);
        assert_eq!(omega_dimension(3, 2, 5).unwrap(), 0);
        assert_eq!(omega_dimension(5, 2, 5).unwrap(), 0);
        assert!(omega_dimension(3, 3, 5).is_err());
    }

    #[test]
    fn schubert_ideal_trivial_cases() {
        // λ = 0: the whole Grassmannian
        let whole = schubert_ideal(&Partition::empty(), 2, 4).unwrap();
        let (_, plucker) = crate::grassmann::grassmannian_ideal(2, 4);
        let plucker = crate::groebner::rehome(&plucker, whole.ring()).unwrap();
        assert!(ideal_equal(&whole, &plucker).unwrap());
        // full box: the single coordinate point
        let point = schubert_ideal(&Partition::new(&[2, 2]).unwrap(), 2, 4).unwrap();
        let ring = point.ring();
        // every coordinate except q12 vanishes
        for name in ["q13", "q14", "q23", "q24", "q34"] {
            let v = parse_polynomial(name, ring).unwrap();
            let gb = crate::groebner::groebner_basis(&point, crate::groebner::MonomialOrder::GrevLex)
                .unwrap();
            assert!(gb.contains(&v).unwrap());
        }
    }

    #[test]
    fn schubert_divisor_in_gr24_is_q34() {
        let ideal = schubert_ideal(&Partition::new(&[1]).unwrap(), 2, 4).unwrap();
        let ring = ideal.ring();
        let expected = Ideal::new(
            ring,
            vec![
                parse_polynomial("q12*q34 - q13*q24 + q14*q23", ring).unwrap(),
                parse_polynomial("q34", ring).unwrap(),
            ],
        );
        assert!(ideal_equal(&ideal, &expected).unwrap());
    }

    #[test]
    fn schubert_ideal_matches_rank_condition_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for (k, n, lam) in [
            (2usize, 4usize, vec![1u32]),
            (2, 4, vec![2, 1]),
            (2, 5, vec![2]),
            (2, 5, vec![3, 1]),
        ] {
            let lambda = Partition::new(&lam).unwrap();
            let ideal = schubert_ideal(&lambda, k, n).unwrap();
            let mut lam_full = lam.clone();
            lam_full.resize(k, 0);
            for _ in 0..25 {
                // member: row j supported on the first n-k+(j+1)-λ_j coordinates
                let mut rows = Vec::new();
                for (j, &l) in lam_full.iter().enumerate() {
                    let width = n - k + (j + 1) - l as usize;
                    let mut row = vec![0i64; n];
                    for c in 0..width {
                        row[c] = rng.gen_range(-9..=9);
                    }
                    rows.push(row);
                }
                let m = RationalMatrix::from_i64_rows(&rows);
                if m.rank() != k {
                    continue;
                }
                let q = crate::grassmann::dual_plucker_vector(
                    &SubspaceMatrix::rowspan(m).unwrap(),
                )
                .unwrap();
                let vals = crate::grassmann::coords_to_values(&q, k, n);
                for g in ideal.gens() {
                    assert!(g.evaluate_slice(&vals).is_zero(), "member violates {g}");
                }
            }
            // a generic subspace is not in a positive-codimension stratum
            if lambda.weight() > 0 {
                let mut violated = false;
                for _ in 0..10 {
                    let s = crate::grassmann::random_subspace(&mut rng, k, n, 9).unwrap();
                    let q = crate::grassmann::dual_plucker_vector(&s).unwrap();
                    let vals = crate::grassmann::coords_to_values(&q, k, n);
                    if ideal
                        .gens()
                        .iter()
                        .any(|g| !g.evaluate_slice(&vals).is_zero())
                    {
                        violated = true;
                        break;
                    }
                }
                assert!(violated);
            }
        }
    }

    #[test]
    fn schubert_codimension_is_weight() {
        for (k, n, lam) in [
            (2usize, 4usize, vec![1u32]),
            (2, 4, vec![2, 2]),
            (2, 5, vec![2, 1]),
            (2, 5, vec![3]),
        ] {
            let lambda = Partition::new(&lam).unwrap();
            let ideal = schubert_ideal(&lambda, k, n).unwrap();
            let (dim, _) = hilbert_dim_degree(&ideal).unwrap();
            // affine cone dimension = k(n-k) - |λ| + 1
            assert_eq!(dim, k * (n - k) - lambda.weight() as usize + 1);
        }
    }

    #[test]
    fn pieri_square_in_gr24() {
        let out = pieri_power(&Partition::new(&[1]).unwrap(), 1, 2, 4).unwrap();
        let expected: BTreeMap<Partition, u64> = [
            (Partition::new(&[2]).unwrap(), 1),
            (Partition::new(&[1, 1]).unwrap(), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(out, expected);
    }

    #[test]
    fn pieri_vanishes_beyond_dimension() {
        let out = pieri_power(&Partition::empty(), 5, 2, 4).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn pieri_transversal_classes_are_nonzero() {
        // [Ω_2][Ω_1]^3 and [Ω_3][Ω_1]^3 in Gr(2,5); [Ω_2][Ω_1]^4 too
        let a = pieri_power(&Partition::new(&[2]).unwrap(), 3, 2, 5).unwrap();
        assert!(!a.is_empty());
        let b = pieri_power(&Partition::new(&[3]).unwrap(), 3, 2, 5).unwrap();
        assert!(!b.is_empty());
        let c = pieri_power(&Partition::new(&[2]).unwrap(), 4, 2, 5).unwrap();
        assert!(!c.is_empty());
        // [Ω_2][Ω_1]^2 = 1 point class in Gr(2,4)
        let d = pieri_power(&Partition::new(&[2]).unwrap(), 2, 2, 4).unwrap();
        assert_eq!(d.get(&Partition::new(&[2, 2]).unwrap()), Some(&1));
    }

    #[test]
    fn pieri_weight_bookkeeping() {
        let lambda = Partition::new(&[2, 1]).unwrap();
        for m in 0..=5u32 {
            let out = pieri_power(&lambda, m, 2, 5).unwrap();
            for p in out.keys() {
                assert_eq!(p.weight(), lambda.weight() + m);
            }
            assert_eq!(out.is_empty(), lambda.weight() + m > 6);
        }
    }

    #[test]
    fn top_self_intersection_is_grassmannian_degree() {
        // [Ω_1]^{k(n-k)} = deg Gr(k,n) times the point class
        for (k, n, expected) in [(2usize, 4usize, 2u64), (2, 5, 5)] {
            let out = pieri_power(&Partition::empty(), (k * (n - k)) as u32, k, n).unwrap();
            assert_eq!(out.len(), 1);
            let full = Partition::rectangle((n - k) as u32, k as u32);
            assert_eq!(out.get(&full), Some(&expected));
            // cross-check against the Plücker ideal's degree
            let (_, gr) = crate::grassmann::grassmannian_ideal(k, n);
            let (_, deg) = hilbert_dim_degree(&gr).unwrap();
            assert_eq!(deg, expected);
        }
    }

    #[test]
    fn table_one_rows() {
        // (k,i) = (2,3)
        let r = recovered_components(2, 3);
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].partition, Partition::new(&[7]).unwrap());
        assert_eq!(r[0].min_n, 9);
        assert_eq!(r[1].partition, Partition::new(&[6, 6]).unwrap());
        assert_eq!(r[1].min_n, 8);
        assert!(!r[0].outside_theorem_hypothesis);
        // (k,i) = (2,4)
        let r = recovered_components(2, 4);
        assert_eq!(r[0].partition, Partition::new(&[9]).unwrap());
        assert_eq!(r[0].min_n, 11);
        assert_eq!(r[1].partition, Partition::new(&[8, 8]).unwrap());
        assert_eq!(r[1].min_n, 10);
        // (k,i) = (3,4)
        let r = recovered_components(3, 4);
        assert_eq!(r.len(), 3);
        assert_eq!(r[0].partition, Partition::new(&[13]).unwrap());
        assert_eq!(r[0].min_n, 16);
        assert_eq!(r[1].partition, Partition::new(&[11, 11]).unwrap());
        assert_eq!(r[1].min_n, 14);
        assert_eq!(r[2].partition, Partition::new(&[9, 9, 9]).unwrap());
        assert_eq!(r[2].min_n, 12);
        // symbolic rows at i = 5, 6
        for i in [5usize, 6] {
            let r = recovered_components(2, i);
            assert_eq!(r[0].partition, Partition::new(&[(2 * i + 1) as u32]).unwrap());
            assert_eq!(r[0].min_n as usize, 2 * i + 3);
            assert_eq!(
                r[1].partition,
                Partition::rectangle((2 * i) as u32, 2)
            );
            assert_eq!(r[1].min_n as usize, 2 * i + 2);
            let r = recovered_components(3, i);
            assert_eq!(r[0].partition, Partition::new(&[(3 * i + 1) as u32]).unwrap());
            assert_eq!(r[0].min_n as usize, 3 * i + 4);
            assert_eq!(r[1].partition, Partition::rectangle((3 * i - 1) as u32, 2));
            assert_eq!(r[1].min_n as usize, 3 * i + 2);
            assert_eq!(r[2].partition, Partition::rectangle((3 * i - 3) as u32, 3));
            assert_eq!(r[2].min_n as usize, 3 * i);
        }
        // small i is flagged
        assert!(recovered_components(2, 2)[0].outside_theorem_hypothesis);
    }
}
