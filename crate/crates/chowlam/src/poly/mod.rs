//! Exact sparse multivariate polynomial arithmetic over the rationals.
//!
//! Polynomials are kept in a canonical form: terms sorted descending under
//! the ring's ambient graded reverse lexicographic order, no zero
//! coefficients. Two polynomials are equal iff their term lists are equal.

mod parse;
pub mod matrix;

pub use matrix::{jacobian, PolyMatrix, RationalMatrix};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// A polynomial ring: an ordered list of distinct variable names.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
    index: HashMap<String, usize>,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new<I, S>(names: I) -> Result<RingRef>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidInput("empty variable name".into()));
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing { vars, index }))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }
}

/// Returns true when both references point to the same ring or the rings are
/// structurally identical.
pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A monomial: dense exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono {
    deg: u32,
    exps: Box<[u16]>,
}

impl Mono {
    pub fn one(nvars: usize) -> Self {
        Mono {
            deg: 0,
            exps: vec![0u16; nvars].into_boxed_slice(),
        }
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Mono {
            deg,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn var(nvars: usize, i: usize, e: u16) -> Self {
        let mut exps = vec![0u16; nvars];
        exps[i] = e;
        Mono {
            deg: e as u32,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Mono {
            deg: self.deg + other.deg,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Mono) -> Mono {
        let exps: Vec<u16> = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(&b, &a)| b - a)
            .collect();
        Mono {
            deg: other.deg - self.deg,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.max(b))
            .collect();
        Mono::from_exps(exps)
    }

    pub fn coprime(&self, other: &Mono) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Graded reverse lexicographic comparison.
pub fn cmp_grevlex(a: &Mono, b: &Mono) -> Ordering {
    match a.deg.cmp(&b.deg) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            // smaller exponent in the last differing position wins
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Pure lexicographic comparison.
pub fn cmp_lex(a: &Mono, b: &Mono) -> Ordering {
    for (x, y) in a.exps.iter().zip(b.exps.iter()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

/// Grevlex restricted to a range of positions.
pub fn cmp_grevlex_range(a: &Mono, b: &Mono, lo: usize, hi: usize) -> Ordering {
    let da: u32 = a.exps[lo..hi].iter().map(|&e| e as u32).sum();
    let db: u32 = b.exps[lo..hi].iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.exps[lo..hi].iter().rev().zip(b.exps[lo..hi].iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// A sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are held in descending ambient grevlex order; no coefficient is zero.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Mono, BigRational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Polynomial::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &RingRef, c: BigRational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Mono::one(ring.num_vars()), c)],
        }
    }

    pub fn from_int(ring: &RingRef, c: i64) -> Self {
        Polynomial::constant(ring, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Mono::var(ring.num_vars(), i, 1), BigRational::one())],
        }
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Result<Self> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::UndeclaredVariable(name.to_string()))?;
        Ok(Polynomial::var(ring, i))
    }

    /// Builds a polynomial from unsorted terms, combining duplicates.
    pub fn from_terms(ring: &RingRef, terms: Vec<(Mono, BigRational)>) -> Self {
        let mut map: HashMap<Mono, BigRational> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.exps.len(), ring.num_vars());
            let entry = map.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
        }
        let mut v: Vec<(Mono, BigRational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by(|a, b| cmp_grevlex(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms: v,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Mono, BigRational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Total degree, or None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.deg()).max()
    }

    /// Some(d) when every term has total degree d.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.deg();
        self.terms.iter().all(|(m, _)| m.deg() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn leading_term_grevlex(&self) -> Option<&(Mono, BigRational)> {
        self.terms.first()
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_grevlex(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut map: HashMap<Mono, BigRational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let entry = map.entry(m).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        let mut v: Vec<(Mono, BigRational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by(|a, b| cmp_grevlex(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            terms: v,
        }
    }

    pub fn mul_scalar(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Mono, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, k)| (t.mul(m), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exps[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.to_vec();
            exps[var] = e - 1;
            out.push((
                Mono::from_exps(exps),
                c * BigRational::from_integer(BigInt::from(e)),
            ));
        }
        out.sort_by(|a, b| cmp_grevlex(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Exact evaluation; every ring variable must be assigned.
    pub fn evaluate(&self, point: &HashMap<String, BigRational>) -> Result<BigRational> {
        let mut values = Vec::with_capacity(self.ring.num_vars());
        for name in self.ring.var_names() {
            match point.get(name) {
                Some(v) => values.push(v.clone()),
                None => return Err(Error::MissingAssignment(name.clone())),
            }
        }
        Ok(self.evaluate_slice(&values))
    }

    /// Evaluation at a point given in ring variable order.
    pub fn evaluate_slice(&self, values: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    t *= &values[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `images[i]` for variable i; all images share one ring.
    pub fn substitute(&self, target: &RingRef, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.num_vars());
        let mut acc = Polynomial::zero(target);
        // memoized powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Renames variables into `target` by position map `map[i] = j` (old i -> new j).
    pub fn map_variables(&self, target: &RingRef, map: &[usize]) -> Polynomial {
        let n = target.num_vars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u16; n];
                for (i, &e) in m.exps.iter().enumerate() {
                    if e != 0 {
                        exps[map[i]] = e;
                    }
                }
                (Mono::from_exps(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Clears denominators and content; returns integer-content-free terms and
    /// the scalar s such that self = (integer part) / s.
    pub fn primitive_integer_terms(&self) -> (Vec<(Mono, BigInt)>, BigRational) {
        if self.is_zero() {
            return (Vec::new(), BigRational::one());
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .terms
            .iter()
            .map(|(_, c)| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        let terms: Vec<(Mono, BigInt)> = self
            .terms
            .iter()
            .zip(ints)
            .map(|((m, _), v)| (m.clone(), v / &content))
            .collect();
        let scale = BigRational::new(den_lcm, content);
        (terms, scale)
    }

    /// Divides by integer content, clears denominators, and fixes the sign so
    /// the lexicographically first monomial has a positive coefficient.
    pub fn normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let (terms, _) = self.primitive_integer_terms();
        let lead = terms
            .iter()
            .max_by(|a, b| cmp_lex(&a.0, &b.0))
            .map(|(_, c)| c.clone())
            .unwrap();
        let flip = lead.is_negative();
        let terms = terms
            .into_iter()
            .map(|(m, c)| {
                let c = if flip { -c } else { c };
                (m, BigRational::from_integer(c))
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// True when the polynomials agree up to a nonzero scalar.
    pub fn proportional(&self, other: &Polynomial) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() == other.is_zero();
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let ca = &self.terms[0].1;
        let cb = &other.terms[0].1;
        self.terms.iter().zip(other.terms.iter()).all(|(a, b)| {
            a.0 == b.0 && &a.1 * cb == &b.1 * ca
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::format_polynomial(self, f)
    }
}

pub use parse::parse_polynomial;

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> RingRef {
        PolyRing::new(names.iter().copied()).unwrap()
    }

    fn p(text: &str, r: &RingRef) -> Polynomial {
        parse_polynomial(text, r).unwrap()
    }

    #[test]
    fn parse_incidence_generator() {
        let r = ring(&[
            "q12", "q13", "q14", "q23", "q24", "q34", "p1", "p2", "p3", "p4",
        ]);
        let f = p("q12*p1 - q23*p3 - q24*p4", &r);
        assert_eq!(f.num_terms(), 3);
        assert!(f.is_homogeneous());
        assert_eq!(f.homogeneous_degree(), Some(2));
    }

    #[test]
    fn parse_zero() {
        let r = ring(&["x"]);
        assert!(p("0", &r).is_zero());
    }

    #[test]
    fn binomial_cube_cancels() {
        let r = ring(&["x"]);
        let f = p("(x+1)^3 - x^3 - 3*x^2 - 3*x - 1", &r);
        assert!(f.is_zero());
    }

    #[test]
    fn undeclared_variable_is_reported() {
        let r = ring(&["x"]);
        match parse_polynomial("x + y", &r) {
            Err(Error::UndeclaredVariable(name)) => assert_eq!(name, "y"),
            other => panic!("expected UndeclaredVariable, got {other:?}"),
        }
    }

    #[test]
    fn syntax_error_has_position() {
        let r = ring(&["x"]);
        match parse_polynomial("x + ", &r) {
            Err(Error::SyntaxError { .. }) => {}
            other => panic!("expected SyntaxError, got {other:?}"),
        }
    }

    #[test]
    fn evaluate_constructed_root() {
        let r = ring(&["x", "y", "z"]);
        let f = p("x*y - z", &r);
        let mut pt = HashMap::new();
        pt.insert("x".to_string(), BigRational::from_integer(2.into()));
        pt.insert("y".to_string(), BigRational::from_integer(3.into()));
        pt.insert("z".to_string(), BigRational::from_integer(6.into()));
        assert!(f.evaluate(&pt).unwrap().is_zero());
    }

    #[test]
    fn evaluate_single_power() {
        let r = ring(&["p14"]);
        let f = p("p14^5", &r);
        let mut pt = HashMap::new();
        pt.insert("p14".to_string(), BigRational::from_integer(2.into()));
        assert_eq!(
            f.evaluate(&pt).unwrap(),
            BigRational::from_integer(32.into())
        );
    }

    #[test]
    fn evaluate_missing_assignment() {
        let r = ring(&["x", "y"]);
        let f = p("x*y", &r);
        let mut pt = HashMap::new();
        pt.insert("x".to_string(), BigRational::one());
        match f.evaluate(&pt) {
            Err(Error::MissingAssignment(name)) => assert_eq!(name, "y"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn derivative_bilinear_gradient() {
        let r = ring(&["x0", "x1", "x2", "x3"]);
        let f = p("x0*x3 - x1*x2", &r);
        assert_eq!(f.derivative(0), p("x3", &r));
        assert_eq!(f.derivative(1), p("-x2", &r));
        assert_eq!(f.derivative(2), p("-x1", &r));
        assert_eq!(f.derivative(3), p("x0", &r));
    }

    #[test]
    fn derivative_square() {
        let r = ring(&["x"]);
        assert_eq!(p("x^2", &r).derivative(0), p("2*x", &r));
    }

    #[test]
    fn ring_axioms_on_random_inputs() {
        use rand::{Rng, SeedableRng};
        let r = ring(&["x", "y", "z"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut acc = Polynomial::zero(&r);
            for _ in 0..rng.gen_range(1..5) {
                let m = Mono::from_exps(vec![
                    rng.gen_range(0..3),
                    rng.gen_range(0..3),
                    rng.gen_range(0..3),
                ]);
                let c = BigRational::new(
                    BigInt::from(rng.gen_range(-6i64..=6)),
                    BigInt::from(rng.gen_range(1i64..=4)),
                );
                acc = acc.add(&Polynomial::from_terms(&r, vec![(m, c)]));
            }
            acc
        };
        for _ in 0..50 {
            let f = rand_poly(&mut rng);
            let g = rand_poly(&mut rng);
            let h = rand_poly(&mut rng);
            assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
            assert_eq!(f.mul(&g), g.mul(&f));
            assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        }
    }

    #[test]
    fn leibniz_rule_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let r = ring(&["x", "y"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let mut f = Polynomial::zero(&r);
            let mut g = Polynomial::zero(&r);
            for _ in 0..3 {
                let m = Mono::from_exps(vec![rng.gen_range(0..4), rng.gen_range(0..4)]);
                let c = BigRational::from_integer(BigInt::from(rng.gen_range(-5i64..=5)));
                f = f.add(&Polynomial::from_terms(&r, vec![(m, c)]));
                let m = Mono::from_exps(vec![rng.gen_range(0..4), rng.gen_range(0..4)]);
                let c = BigRational::from_integer(BigInt::from(rng.gen_range(-5i64..=5)));
                g = g.add(&Polynomial::from_terms(&r, vec![(m, c)]));
            }
            let lhs = f.mul(&g).derivative(0);
            let rhs = f.derivative(0).mul(&g).add(&f.mul(&g.derivative(0)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn parse_print_roundtrip_random() {
        use rand::{Rng, SeedableRng};
        let r = ring(&["x", "y", "z", "w"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..1000 {
            let mut f = Polynomial::zero(&r);
            let nt = rng.gen_range(0..6);
            for _ in 0..nt {
                let m = Mono::from_exps(vec![
                    rng.gen_range(0..5),
                    rng.gen_range(0..5),
                    rng.gen_range(0..5),
                    rng.gen_range(0..5),
                ]);
                let c = BigRational::new(
                    BigInt::from(rng.gen_range(-9i64..=9)),
                    BigInt::from(rng.gen_range(1i64..=7)),
                );
                f = f.add(&Polynomial::from_terms(&r, vec![(m, c)]));
            }
            let text = f.to_string();
            let g = parse_polynomial(&text, &r).unwrap();
            assert_eq!(f, g, "roundtrip failed for `{text}`");
        }
    }

    #[test]
    fn normalized_scales_and_signs() {
        let r = ring(&["x", "y"]);
        let f = p("-2/3*x^2 - 4*y", &r);
        let g = f.normalized();
        assert_eq!(g, p("x^2 + 6*y", &r));
        assert!(f.proportional(&g));
        assert!(!f.proportional(&p("x^2 + 5*y", &r)));
    }
}
