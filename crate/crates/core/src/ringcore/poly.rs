//! Sparse multivariate polynomials with weighted grading over Q(t) scalars.
//!
//! Terms are keyed by monomial in a BTreeMap under a fixed storage order, so
//! iteration and serialization are deterministic. Homogeneity is validated
//! and tagged at construction, never assumed.

use super::{CoeffDomain, RingError, TRat};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Exponent map, sparse and sorted by variable index; zero exponents are
/// never stored. The derived `Ord` is a storage order only (deterministic
/// container keys), not a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<(u16, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(i: usize) -> Self {
        Monomial {
            exps: vec![(i as u16, 1)],
        }
    }

    pub fn from_exponents<I: IntoIterator<Item = (usize, u32)>>(iter: I) -> Self {
        let mut map: BTreeMap<u16, u32> = BTreeMap::new();
        for (v, e) in iter {
            if e > 0 {
                *map.entry(v as u16).or_insert(0) += e;
            }
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps
            .iter()
            .find(|(v, _)| *v as usize == var)
            .map_or(0, |(_, e)| *e)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|&(v, _)| v as usize)
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps
            .iter()
            .map(|&(v, e)| weights[v as usize] as u64 * e as u64)
            .sum()
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exponents().chain(other.exponents()))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|&(v, e)| other.exponent(v as usize) >= e)
    }

    /// other / self if self divides other.
    pub fn try_quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_exponents(
            other
                .exponents()
                .map(|(v, e)| (v, e - self.exponent(v))),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let vars: BTreeSet<usize> = self
            .exponents()
            .map(|(v, _)| v)
            .chain(other.exponents().map(|(v, _)| v))
            .collect();
        Monomial::from_exponents(
            vars.into_iter()
                .map(|v| (v, self.exponent(v).max(other.exponent(v)))),
        )
    }

    pub fn to_dense(&self, nvars: usize) -> Vec<u32> {
        let mut out = vec![0; nvars];
        for (v, e) in self.exponents() {
            out[v] = e;
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.exponents() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", v + 1)?;
            } else {
                write!(f, "x{}^{}", v + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Ring descriptor: number of variables, positive weights (the degree of
/// each variable), and the coefficient domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    nvars: usize,
    weights: Vec<u32>,
    domain: CoeffDomain,
}

impl RingSpec {
    pub fn standard(nvars: usize, domain: CoeffDomain) -> Self {
        RingSpec {
            nvars,
            weights: vec![1; nvars],
            domain,
        }
    }

    pub fn weighted(weights: Vec<u32>, domain: CoeffDomain) -> Result<Self, RingError> {
        if weights.iter().any(|&w| w == 0) {
            return Err(RingError::Invalid("weights must be positive".into()));
        }
        Ok(RingSpec {
            nvars: weights.len(),
            weights,
            domain,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn domain(&self) -> CoeffDomain {
        self.domain
    }

    pub fn with_domain(&self, domain: CoeffDomain) -> RingSpec {
        RingSpec {
            nvars: self.nvars,
            weights: self.weights.clone(),
            domain,
        }
    }

    /// All monomials of the given weighted degree, sorted descending under
    /// the ring's grevlex order. This fixed enumeration is the coordinate
    /// convention for every degreewise module computation.
    pub fn monomials_of_degree(&self, d: u64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars];
        self.enumerate_rec(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| {
            crate::groebner::MonomialOrder::WeightedGrevlex
                .cmp(&self.weights, b, a)
        });
        out
    }

    fn enumerate_rec(&self, var: usize, remaining: u64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var == self.nvars {
            if remaining == 0 {
                out.push(Monomial::from_exponents(
                    exps.iter().enumerate().map(|(v, &e)| (v, e)),
                ));
            }
            return;
        }
        let w = self.weights[var] as u64;
        let max = remaining / w;
        for e in 0..=max {
            exps[var] = e as u32;
            self.enumerate_rec(var + 1, remaining - e * w, exps, out);
        }
        exps[var] = 0;
    }
}

/// Homogeneity tag, computed at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(u64),
    Inhomogeneous,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: RingSpec,
    terms: BTreeMap<Monomial, TRat>,
    homog: Homogeneity,
}

impl Poly {
    pub fn zero(ring: &RingSpec) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
            homog: Homogeneity::Zero,
        }
    }

    pub fn one(ring: &RingSpec) -> Poly {
        Poly::constant(ring, TRat::one()).expect("constant one is admissible")
    }

    pub fn constant(ring: &RingSpec, c: TRat) -> Result<Poly, RingError> {
        Poly::from_terms(ring, [(Monomial::one(), c)])
    }

    pub fn var(ring: &RingSpec, i: usize) -> Result<Poly, RingError> {
        if i >= ring.nvars() {
            return Err(RingError::VariableOutOfRange {
                index: i,
                nvars: ring.nvars(),
            });
        }
        Poly::from_terms(ring, [(Monomial::var(i), TRat::one())])
    }

    /// Build from (monomial, coefficient) pairs: prunes zeros, validates the
    /// coefficient domain and variable range, and tags homogeneity.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, TRat)>>(
        ring: &RingSpec,
        iter: I,
    ) -> Result<Poly, RingError> {
        let mut terms: BTreeMap<Monomial, TRat> = BTreeMap::new();
        for (m, c) in iter {
            if c.is_zero() {
                continue;
            }
            if let Some(v) = m.max_var() {
                if v >= ring.nvars() {
                    return Err(RingError::VariableOutOfRange {
                        index: v,
                        nvars: ring.nvars(),
                    });
                }
            }
            let entry = terms.entry(m).or_insert_with(TRat::zero);
            *entry = entry.add(&c);
        }
        terms.retain(|_, c| !c.is_zero());
        for (m, c) in &terms {
            if !ring.domain().admits(c) {
                return Err(RingError::DomainViolation {
                    monomial: m.to_string(),
                    domain: ring.domain().name(),
                });
            }
        }
        let homog = classify(ring, &terms);
        Ok(Poly {
            ring: ring.clone(),
            terms,
            homog,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &TRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> TRat {
        self.terms.get(m).cloned().unwrap_or_else(TRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        self.homog
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.homog, Homogeneity::Inhomogeneous)
    }

    /// Weighted degree of a nonzero homogeneous polynomial.
    pub fn degree(&self) -> Option<u64> {
        match self.homog {
            Homogeneity::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    /// Largest weighted degree over the terms; None for zero.
    pub fn max_degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(self.ring.weights()))
            .max()
    }

    pub fn support_vars(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.exponents().map(|(v, _)| v))
            .collect()
    }

    fn check_ring(&self, other: &Poly) -> Result<(), RingError> {
        if self.ring != other.ring {
            return Err(RingError::RingMismatch(format!(
                "{} vars vs {} vars / domain {} vs {}",
                self.ring.nvars(),
                other.ring.nvars(),
                self.ring.domain().name(),
                other.ring.domain().name()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly, RingError> {
        self.check_ring(other)?;
        Poly::from_terms(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone()))
                .chain(other.terms.iter().map(|(m, c)| (m.clone(), c.clone()))),
        )
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly, RingError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
            homog: self.homog,
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly, RingError> {
        self.check_ring(other)?;
        let mut acc: BTreeMap<Monomial, TRat> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1.mul(c2);
                let entry = acc.entry(m).or_insert_with(TRat::zero);
                *entry = entry.add(&c);
            }
        }
        Poly::from_terms(&self.ring, acc)
    }

    /// Multiply by a single term `c * m` without a domain re-check on the
    /// scalar product being skipped: the result is validated as usual.
    pub fn mul_term(&self, m: &Monomial, c: &TRat) -> Result<Poly, RingError> {
        Poly::from_terms(
            &self.ring,
            self.terms
                .iter()
                .map(|(m0, c0)| (m0.mul(m), c0.mul(c))),
        )
    }

    pub fn scaled(&self, c: &TRat) -> Result<Poly, RingError> {
        self.mul_term(&Monomial::one(), c)
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Poly, RingError> {
        if i >= self.ring.nvars() {
            return Err(RingError::VariableOutOfRange {
                index: i,
                nvars: self.ring.nvars(),
            });
        }
        Poly::from_terms(
            &self.ring,
            self.terms.iter().filter_map(|(m, c)| {
                let e = m.exponent(i);
                if e == 0 {
                    return None;
                }
                let lowered = Monomial::from_exponents(
                    m.exponents()
                        .map(|(v, ev)| if v == i { (v, ev - 1) } else { (v, ev) }),
                );
                Some((lowered, c.mul(&TRat::from_int(e as i64))))
            }),
        )
    }

    /// Sum over all variables of `w_i * x_i * df/dx_i`; equals deg(f) * f
    /// for homogeneous f by Euler's identity.
    pub fn euler_combination(&self) -> Result<Poly, RingError> {
        match self.homog {
            Homogeneity::Homogeneous(d) if d >= 1 => {}
            _ => return Err(RingError::Inhomogeneous),
        }
        let mut acc = Poly::zero(&self.ring);
        for i in 0..self.ring.nvars() {
            let wi = TRat::from_int(self.ring.weights()[i] as i64);
            let part = self
                .partial_derivative(i)?
                .mul_term(&Monomial::var(i), &wi)?;
            acc = acc.add(&part)?;
        }
        Ok(acc)
    }

    /// Minimum coefficient valuation; None for the zero polynomial.
    pub fn t_valuation(&self) -> Option<i64> {
        self.terms.values().filter_map(|c| c.valuation()).min()
    }

    /// Multiply every coefficient by t^k. May fail if the result leaves the
    /// ring's coefficient domain.
    pub fn t_shift(&self, k: i64) -> Result<Poly, RingError> {
        Poly::from_terms(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), c.t_shift(k))),
        )
    }

    pub fn is_regular(&self) -> bool {
        self.terms.values().all(|c| c.is_regular())
    }

    /// Reduce every coefficient mod t; the result lives over FieldQ.
    /// Errors name the first non-regular monomial.
    pub fn eval_t0(&self) -> Result<Poly, RingError> {
        let target = self.ring.with_domain(CoeffDomain::FieldQ);
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            if !c.is_regular() {
                return Err(RingError::NotRegularAt {
                    monomial: m.to_string(),
                });
            }
            terms.push((m.clone(), TRat::from_rat(c.reduce_mod_t()?)));
        }
        Poly::from_terms(&target, terms)
    }

    /// Reinterpret in another coefficient domain, revalidating coefficients.
    pub fn cast_domain(&self, domain: CoeffDomain) -> Result<Poly, RingError> {
        Poly::from_terms(
            &self.ring.with_domain(domain),
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Leading term under the given order.
    pub fn leading(
        &self,
        order: crate::groebner::MonomialOrder,
    ) -> Option<(&Monomial, &TRat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(self.ring.weights(), a, b))
    }

    /// Coefficient vector with respect to a fixed monomial list.
    pub fn coeff_vector(&self, monos: &[Monomial]) -> Vec<TRat> {
        monos.iter().map(|m| self.coeff(m)).collect()
    }

    pub fn from_coeff_vector(
        ring: &RingSpec,
        monos: &[Monomial],
        coeffs: &[TRat],
    ) -> Result<Poly, RingError> {
        Poly::from_terms(
            ring,
            monos
                .iter()
                .zip(coeffs.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

fn classify(ring: &RingSpec, terms: &BTreeMap<Monomial, TRat>) -> Homogeneity {
    let mut deg = None;
    for m in terms.keys() {
        let d = m.weighted_degree(ring.weights());
        match deg {
            None => deg = Some(d),
            Some(d0) if d0 == d => {}
            Some(_) => return Homogeneity::Inhomogeneous,
        }
    }
    match deg {
        None => Homogeneity::Zero,
        Some(d) => Homogeneity::Homogeneous(d),
    }
}

/// Ring descriptor plus a list of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: RingSpec,
    gens: Vec<Poly>,
}

impl Ideal {
    /// Zero generators are dropped; all generators must share the ring.
    pub fn new(ring: &RingSpec, gens: Vec<Poly>) -> Result<Ideal, RingError> {
        for g in &gens {
            if g.ring() != ring {
                return Err(RingError::RingMismatch(
                    "ideal generator from a different ring".into(),
                ));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::rat_int;

    fn ring2() -> RingSpec {
        RingSpec::standard(2, CoeffDomain::FieldQt)
    }

    #[test]
    fn product_of_variables() {
        let r = RingSpec::standard(4, CoeffDomain::FieldQt);
        let x1 = Poly::var(&r, 0).unwrap();
        let x2 = Poly::var(&r, 1).unwrap();
        let p = x1.mul(&x2).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn cancellation_prunes_terms() {
        let r = ring2();
        let x1 = Poly::var(&r, 0).unwrap();
        let x2 = Poly::var(&r, 1).unwrap();
        let tx2 = x2.scaled(&TRat::t_power(1)).unwrap();
        let f = x1.add(&tx2).unwrap();
        let g = f.add(&x1.neg()).unwrap();
        assert_eq!(g, tx2);
        assert_eq!(g.num_terms(), 1);
    }

    #[test]
    fn weighted_grading() {
        let r = RingSpec::weighted(vec![1, 2], CoeffDomain::FieldQt).unwrap();
        let x1 = Poly::var(&r, 0).unwrap();
        let x2 = Poly::var(&r, 1).unwrap();
        let p = x1.mul(&x1).unwrap().mul(&x2).unwrap();
        assert_eq!(p.degree(), Some(4));
    }

    #[test]
    fn partial_derivatives() {
        let r = RingSpec::standard(4, CoeffDomain::FieldQt);
        let x = |i| Poly::var(&r, i).unwrap();
        let f = x(0).mul(&x(1)).unwrap().add(&x(2).mul(&x(3)).unwrap()).unwrap();
        assert_eq!(f.partial_derivative(0).unwrap(), x(1));
        assert!(x(0).mul(&x(1)).unwrap().partial_derivative(2).unwrap().is_zero());
        // d/dx1 of t*x1^2 = 2t*x1
        let tx1sq = x(0).mul(&x(0)).unwrap().scaled(&TRat::t_power(1)).unwrap();
        let d = tx1sq.partial_derivative(0).unwrap();
        let expect = x(0).scaled(&TRat::t_power(1).mul(&TRat::from_int(2))).unwrap();
        assert_eq!(d, expect);
    }

    #[test]
    fn euler_identity_cases() {
        let r = ring2();
        let x1 = Poly::var(&r, 0).unwrap();
        let x2 = Poly::var(&r, 1).unwrap();
        let f = x1.mul(&x2).unwrap();
        assert_eq!(
            f.euler_combination().unwrap(),
            f.scaled(&TRat::from_int(2)).unwrap()
        );
        let g = x1.mul(&x1).unwrap().mul(&x1).unwrap();
        assert_eq!(
            g.euler_combination().unwrap(),
            g.scaled(&TRat::from_int(3)).unwrap()
        );
        let rw = RingSpec::weighted(vec![1, 2], CoeffDomain::FieldQt).unwrap();
        let y1 = Poly::var(&rw, 0).unwrap();
        let y2 = Poly::var(&rw, 1).unwrap();
        let h = y1.mul(&y1).unwrap().mul(&y2).unwrap();
        assert_eq!(
            h.euler_combination().unwrap(),
            h.scaled(&TRat::from_int(4)).unwrap()
        );
    }

    #[test]
    fn valuation_shift_eval() {
        let r = ring2();
        let x1 = Poly::var(&r, 0).unwrap();
        let x2 = Poly::var(&r, 1).unwrap();
        // f = t^-1 x1 + x2
        let f = x1
            .scaled(&TRat::t_power(-1))
            .unwrap()
            .add(&x2)
            .unwrap();
        assert_eq!(f.t_valuation(), Some(-1));
        let g = f.t_shift(1).unwrap();
        assert!(g.is_regular());
        // eval_t0(x1 + t x2) = x1
        let h = x1.add(&x2.scaled(&TRat::t_power(1)).unwrap()).unwrap();
        let h0 = h.eval_t0().unwrap();
        assert_eq!(h0.num_terms(), 1);
        assert_eq!(h0.coeff(&Monomial::var(0)), TRat::one());
        // eval_t0(t^2 x1/(1+t)) = 0
        let c = TRat::t_power(2)
            .div(&TRat::from_int(1).add(&TRat::t_power(1)))
            .unwrap();
        let p = x1.scaled(&c).unwrap();
        assert!(p.eval_t0().unwrap().is_zero());
        // eval names the offending monomial
        let bad = x1.scaled(&TRat::t_power(-2)).unwrap();
        match bad.eval_t0() {
            Err(RingError::NotRegularAt { monomial }) => assert_eq!(monomial, "x1"),
            other => panic!("expected NotRegularAt, got {other:?}"),
        }
    }

    #[test]
    fn domain_enforcement() {
        let rq = RingSpec::standard(2, CoeffDomain::FieldQ);
        let err = Poly::constant(&rq, TRat::t_power(1));
        assert!(matches!(err, Err(RingError::DomainViolation { .. })));
        let rdvr = RingSpec::standard(2, CoeffDomain::Dvr);
        let err = Poly::constant(&rdvr, TRat::t_power(-1));
        assert!(matches!(err, Err(RingError::DomainViolation { .. })));
        assert!(Poly::constant(&rdvr, TRat::t_power(1)).is_ok());
    }

    #[test]
    fn monomial_enumeration_is_sorted() {
        let r = RingSpec::standard(3, CoeffDomain::FieldQ);
        let monos = r.monomials_of_degree(2);
        assert_eq!(monos.len(), 6);
        // strictly descending under grevlex
        for w in monos.windows(2) {
            assert_eq!(
                crate::groebner::MonomialOrder::WeightedGrevlex.cmp(r.weights(), &w[0], &w[1]),
                std::cmp::Ordering::Greater
            );
        }
        let rw = RingSpec::weighted(vec![1, 2], CoeffDomain::FieldQ).unwrap();
        let monos = rw.monomials_of_degree(4);
        // x1^4, x1^2 x2, x2^2
        assert_eq!(monos.len(), 3);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Poly::var(&ring2(), 0).unwrap();
        let b = Poly::var(&RingSpec::standard(3, CoeffDomain::FieldQt), 0).unwrap();
        assert!(matches!(a.add(&b), Err(RingError::RingMismatch(_))));
    }

    #[test]
    fn rational_scalar_constant() {
        let r = ring2();
        let c = Poly::constant(&r, TRat::from_rat(rat_int(5))).unwrap();
        assert_eq!(c.degree(), Some(0));
    }
}
