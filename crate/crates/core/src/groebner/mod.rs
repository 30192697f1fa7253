//! Groebner machinery over the exact fields Q and Q(t): reduced bases via
//! Buchberger, division with cofactors, elimination by block orders, colon
//! and saturation, and Krull dimension/height from the leading-term ideal.
//!
//! Reduced bases are canonical for (ideal, order): monic, inter-reduced,
//! sorted descending by leading term. Generator permutations or duplicates
//! do not change the result.

mod syzygy;

pub use syzygy::{ebar_basis, ebar_graded, syzygy_graded, syzygy_space, EbarBasis, GradedEntry, SyzygyPiece};

use crate::ringcore::{CoeffDomain, Ideal, Monomial, Poly, RingError, RingSpec, TRat};
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("Groebner bases require field coefficients; use dvrmod for DVR-coefficient modules")]
    DvrCoefficients,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{0}")]
    Invalid(String),
}

/// Total, multiplicative well-orders on monomials. `Block(k)` eliminates
/// the first k variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    WeightedGrevlex,
    Lex,
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, weights: &[u32], a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::WeightedGrevlex => grevlex_cmp(weights, a, b, 0, weights.len()),
            MonomialOrder::Lex => {
                for v in 0..weights.len() {
                    match a.exponent(v).cmp(&b.exponent(v)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(k) => grevlex_cmp(weights, a, b, 0, *k)
                .then_with(|| grevlex_cmp(weights, a, b, *k, weights.len())),
        }
    }
}

/// Graded reverse lexicographic comparison on the variable window
/// [lo, hi): higher weighted degree wins; on ties the rightmost differing
/// exponent decides, smaller exponent winning.
fn grevlex_cmp(weights: &[u32], a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let deg = |m: &Monomial| -> u64 {
        m.exponents()
            .filter(|&(v, _)| v >= lo && v < hi)
            .map(|(v, e)| weights[v] as u64 * e as u64)
            .sum()
    };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for v in (lo..hi).rev() {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => continue,
            // smaller exponent in the rightmost differing variable is greater
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    pub ring: RingSpec,
    pub order: MonomialOrder,
    pub elements: Vec<Poly>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn contains(&self, f: &Poly) -> bool {
        normal_form_with_cofactors(f, &self.elements, self.order).0.is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.degree() == Some(0))
    }
}

fn require_field(ring: &RingSpec) -> Result<(), GroebnerError> {
    match ring.domain() {
        CoeffDomain::Dvr => Err(GroebnerError::DvrCoefficients),
        _ => Ok(()),
    }
}

/// Multivariate division: f = sum cofactor_j * divisors_j + remainder, no
/// term of the remainder divisible by any divisor's leading term. The
/// divisor list order is significant and the result deterministic.
pub fn normal_form_with_cofactors(
    f: &Poly,
    divisors: &[Poly],
    order: MonomialOrder,
) -> (Poly, Vec<Poly>) {
    let ring = f.ring().clone();
    let leads: Vec<(Monomial, TRat)> = divisors
        .iter()
        .map(|g| {
            let (m, c) = g.leading(order).expect("nonzero divisor");
            (m.clone(), c.clone())
        })
        .collect();
    let mut work = f.clone();
    let mut remainder = Poly::zero(&ring);
    let mut cofactors = vec![Poly::zero(&ring); divisors.len()];
    while let Some((wm, wc)) = work.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        let mut divided = false;
        for (j, (lm, lc)) in leads.iter().enumerate() {
            if let Some(q) = lm.try_quotient(&wm) {
                let qc = wc.div(lc).expect("leading coefficient nonzero");
                let piece = divisors[j].mul_term(&q, &qc).expect("same ring");
                work = work.sub(&piece).expect("same ring");
                let term = Poly::from_terms(&ring, [(q, qc)]).expect("field scalar");
                cofactors[j] = cofactors[j].add(&term).expect("same ring");
                divided = true;
                break;
            }
        }
        if !divided {
            let term = Poly::from_terms(&ring, [(wm.clone(), wc.clone())]).expect("field scalar");
            remainder = remainder.add(&term).expect("same ring");
            work = work.sub(&term).expect("same ring");
        }
    }
    (remainder, cofactors)
}

fn normal_form(f: &Poly, divisors: &[Poly], order: MonomialOrder) -> Poly {
    normal_form_with_cofactors(f, divisors, order).0
}

fn make_monic(f: &Poly, order: MonomialOrder) -> Poly {
    let (_, c) = f.leading(order).expect("nonzero");
    f.scaled(&c.inv().expect("leading coefficient nonzero"))
        .expect("field scalar")
}

fn spoly(f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let (fm, fc) = f.leading(order).expect("nonzero");
    let (gm, gc) = g.leading(order).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f
        .mul_term(&fm.try_quotient(&l).unwrap(), &fc.inv().unwrap())
        .expect("same ring");
    let b = g
        .mul_term(&gm.try_quotient(&l).unwrap(), &gc.inv().unwrap())
        .expect("same ring");
    a.sub(&b).expect("same ring")
}

/// Reduced Groebner basis by Buchberger with the normal selection strategy
/// (minimal lcm degree first, ties broken by the monomial order, then by
/// pair index).
pub fn reduced_gb(gens: &[Poly], order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => {
            return Err(GroebnerError::Invalid(
                "cannot infer the ring from an empty generator list".into(),
            ))
        }
    };
    require_field(&ring)?;
    for g in gens {
        if g.ring() != &ring {
            return Err(GroebnerError::Ring(RingError::RingMismatch(
                "mixed rings in generator list".into(),
            )));
        }
    }
    let weights = ring.weights().to_vec();
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(make_monic(g, order));
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    let pair_key = |basis: &[Poly], (i, j): (usize, usize)| -> (u64, Monomial, usize, usize) {
        let lm_i = basis[i].leading(order).unwrap().0;
        let lm_j = basis[j].leading(order).unwrap().0;
        let l = lm_i.lcm(lm_j);
        (l.weighted_degree(&weights), l, i, j)
    };
    while !pairs.is_empty() {
        // normal strategy: pick minimal (degree, lcm, i, j)
        let mut best = 0;
        let mut best_key = pair_key(&basis, pairs[0]);
        for (idx, &p) in pairs.iter().enumerate().skip(1) {
            let k = pair_key(&basis, p);
            let ord = k.0.cmp(&best_key.0).then_with(|| {
                order
                    .cmp(&weights, &k.1, &best_key.1)
                    .then_with(|| (k.2, k.3).cmp(&(best_key.2, best_key.3)))
            });
            if ord == Ordering::Less {
                best = idx;
                best_key = k;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        let lm_i = basis[i].leading(order).unwrap().0.clone();
        let lm_j = basis[j].leading(order).unwrap().0.clone();
        // product criterion: coprime leading monomials reduce to zero
        if lm_i.lcm(&lm_j) == lm_i.mul(&lm_j) {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = make_monic(&r, order);
            let n = basis.len();
            for k in 0..n {
                pairs.push((k, n));
            }
            basis.push(r);
        }
    }
    // minimalize: drop elements whose leading term is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lm_i = basis[i].leading(order).unwrap().0.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lm_j = basis[j].leading(order).unwrap().0.clone();
            if lm_j.divides(&lm_i) && (lm_j != lm_i || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Poly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // inter-reduce tails
    let mut reduced: Vec<Poly> = Vec::new();
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = normal_form(&minimal[i], &others, order);
        reduced.push(make_monic(&r, order));
    }
    reduced.sort_by(|a, b| {
        order.cmp(
            &weights,
            b.leading(order).unwrap().0,
            a.leading(order).unwrap().0,
        )
    });
    reduced.dedup();
    Ok(GroebnerBasis {
        ring,
        order,
        elements: reduced,
        reduced: true,
    })
}

/// Reduced basis of an ideal under the default order.
pub fn ideal_gb(ideal: &Ideal) -> Result<GroebnerBasis, GroebnerError> {
    if ideal.gens().is_empty() {
        return Ok(GroebnerBasis {
            ring: ideal.ring().clone(),
            order: MonomialOrder::WeightedGrevlex,
            elements: Vec::new(),
            reduced: true,
        });
    }
    reduced_gb(ideal.gens(), MonomialOrder::WeightedGrevlex)
}

/// Ideal membership over a field.
pub fn ideal_contains(ideal: &Ideal, f: &Poly) -> Result<bool, GroebnerError> {
    if f.is_zero() {
        return Ok(true);
    }
    if ideal.gens().is_empty() {
        return Ok(false);
    }
    Ok(ideal_gb(ideal)?.contains(f))
}

/// Equality of ideals via canonical reduced bases.
pub fn ideal_eq(a: &Ideal, b: &Ideal) -> Result<bool, GroebnerError> {
    Ok(ideal_gb(a)?.elements == ideal_gb(b)?.elements)
}

fn ring_with_prefix_var(ring: &RingSpec) -> RingSpec {
    let mut weights = Vec::with_capacity(ring.nvars() + 1);
    weights.push(1);
    weights.extend_from_slice(ring.weights());
    RingSpec::weighted(weights, ring.domain()).expect("positive weights")
}

fn shift_vars(p: &Poly, target: &RingSpec, offset: usize) -> Poly {
    Poly::from_terms(
        target,
        p.terms().map(|(m, c)| {
            (
                Monomial::from_exponents(m.exponents().map(|(v, e)| (v + offset, e))),
                c.clone(),
            )
        }),
    )
    .expect("shifted polynomial stays admissible")
}

fn unshift_vars(p: &Poly, target: &RingSpec, offset: usize) -> Poly {
    Poly::from_terms(
        target,
        p.terms().map(|(m, c)| {
            (
                Monomial::from_exponents(m.exponents().map(|(v, e)| (v - offset, e))),
                c.clone(),
            )
        }),
    )
    .expect("unshifted polynomial stays admissible")
}

/// Intersection of two ideals via one auxiliary variable and a block
/// elimination order.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal, GroebnerError> {
    if a.ring() != b.ring() {
        return Err(GroebnerError::Ring(RingError::RingMismatch(
            "intersection of ideals in different rings".into(),
        )));
    }
    let ring = a.ring().clone();
    require_field(&ring)?;
    if a.gens().is_empty() || b.gens().is_empty() {
        return Ideal::new(&ring, Vec::new()).map_err(Into::into);
    }
    let ext = ring_with_prefix_var(&ring);
    let w = Poly::var(&ext, 0).expect("aux var");
    let one_minus_w = Poly::one(&ext).sub(&w).expect("same ring");
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(w.mul(&shift_vars(g, &ext, 1)).expect("same ring"));
    }
    for g in b.gens() {
        gens.push(one_minus_w.mul(&shift_vars(g, &ext, 1)).expect("same ring"));
    }
    let gb = reduced_gb(&gens, MonomialOrder::Block(1))?;
    let kept: Vec<Poly> = gb
        .elements
        .iter()
        .filter(|g| g.support_vars().iter().all(|&v| v >= 1))
        .map(|g| unshift_vars(g, &ring, 1))
        .collect();
    Ideal::new(&ring, kept).map_err(Into::into)
}

/// The colon ideal (I : g) = { h : h g in I }, computed as (I n (g)) / g.
pub fn colon(ideal: &Ideal, g: &Poly) -> Result<Ideal, GroebnerError> {
    require_field(ideal.ring())?;
    if g.is_zero() {
        return Err(GroebnerError::Invalid("colon by the zero element".into()));
    }
    if ideal.gens().is_empty() {
        return Ideal::new(ideal.ring(), Vec::new()).map_err(Into::into);
    }
    let principal = Ideal::new(ideal.ring(), vec![g.clone()])?;
    let meet = intersect(ideal, &principal)?;
    let mut out = Vec::new();
    for f in meet.gens() {
        let (r, cof) = normal_form_with_cofactors(f, std::slice::from_ref(g), MonomialOrder::WeightedGrevlex);
        debug_assert!(r.is_zero(), "member of (g) must be divisible by g");
        if !r.is_zero() {
            return Err(GroebnerError::Invalid(
                "exact division failed in colon computation".into(),
            ));
        }
        out.push(cof.into_iter().next().unwrap());
    }
    Ideal::new(ideal.ring(), out).map_err(Into::into)
}

/// Saturation (I : g^infinity) by iterating colon ideals to a fixed point.
pub fn saturate_by(ideal: &Ideal, g: &Poly) -> Result<Ideal, GroebnerError> {
    let mut current = ideal.clone();
    loop {
        let next = colon(&current, g)?;
        if ideal_eq(&next, &current)? {
            return Ok(current);
        }
        current = next;
    }
}

/// Generators of I intersected with the subring in variables x_{k+1}, ...,
/// obtained from a block-order basis.
pub fn eliminate(ideal: &Ideal, k: usize) -> Result<Ideal, GroebnerError> {
    require_field(ideal.ring())?;
    if ideal.gens().is_empty() {
        return Ideal::new(ideal.ring(), Vec::new()).map_err(Into::into);
    }
    let gb = reduced_gb(ideal.gens(), MonomialOrder::Block(k))?;
    let kept: Vec<Poly> = gb
        .elements
        .into_iter()
        .filter(|g| g.support_vars().iter().all(|&v| v >= k))
        .collect();
    Ideal::new(ideal.ring(), kept).map_err(Into::into)
}

/// Height of an ideal over a field, or infinity for the unit ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum HeightVal {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for HeightVal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HeightVal::Finite(h) => write!(f, "{h}"),
            HeightVal::Infinite => write!(f, "infinity"),
        }
    }
}

/// Krull dimension of R/I and height of I in a polynomial ring over a
/// field. dim(R/I) is the largest variable subset independent modulo the
/// leading-term ideal of a reduced basis; height = nvars - dim. The unit
/// ideal reports dimension None and infinite height.
pub fn dim_and_height(ideal: &Ideal) -> Result<(Option<u64>, HeightVal), GroebnerError> {
    require_field(ideal.ring())?;
    let n = ideal.ring().nvars();
    assert!(n <= 24, "independent-set enumeration limited to 24 variables");
    if ideal.gens().is_empty() {
        return Ok((Some(n as u64), HeightVal::Finite(0)));
    }
    let gb = reduced_gb(ideal.gens(), MonomialOrder::WeightedGrevlex)?;
    if gb.is_unit_ideal() {
        return Ok((None, HeightVal::Infinite));
    }
    let lead_supports: Vec<u32> = gb
        .elements
        .iter()
        .map(|g| {
            let m = g.leading(MonomialOrder::WeightedGrevlex).unwrap().0;
            m.exponents().fold(0u32, |acc, (v, _)| acc | (1 << v))
        })
        .collect();
    let mut best = 0u32;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() <= best {
            continue;
        }
        // independent iff no leading monomial is fully supported inside mask
        if lead_supports.iter().all(|&s| s & !mask != 0) {
            best = mask.count_ones();
        }
    }
    let dim = best as u64;
    Ok((Some(dim), HeightVal::Finite(n as u64 - dim)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::{CoeffDomain, Ideal, Poly, RingSpec, TRat};

    fn ring(n: usize) -> RingSpec {
        RingSpec::standard(n, CoeffDomain::FieldQ)
    }

    fn ring_qt(n: usize) -> RingSpec {
        RingSpec::standard(n, CoeffDomain::FieldQt)
    }

    fn x(r: &RingSpec, i: usize) -> Poly {
        Poly::var(r, i).unwrap()
    }

    #[test]
    fn grevlex_conventions() {
        let w = [1u32, 1, 1, 1];
        let m = |exps: &[(usize, u32)]| Monomial::from_exponents(exps.iter().copied());
        // x2^2 > x1 x3 (rightmost differing exponent smaller wins)
        assert_eq!(
            MonomialOrder::WeightedGrevlex.cmp(&w, &m(&[(1, 2)]), &m(&[(0, 1), (2, 1)])),
            Ordering::Greater
        );
        // degree dominates
        assert_eq!(
            MonomialOrder::WeightedGrevlex.cmp(&w, &m(&[(3, 3)]), &m(&[(0, 1), (1, 1)])),
            Ordering::Greater
        );
        // lex: x1 x3 > x2^2
        assert_eq!(
            MonomialOrder::Lex.cmp(&w, &m(&[(0, 1), (2, 1)]), &m(&[(1, 2)])),
            Ordering::Greater
        );
        // block(1): anything with x1 beats anything without
        assert_eq!(
            MonomialOrder::Block(1).cmp(&w, &m(&[(0, 1)]), &m(&[(1, 5)])),
            Ordering::Greater
        );
    }

    #[test]
    fn single_generator_basis() {
        let r = ring(2);
        let gb = reduced_gb(&[x(&r, 0)], MonomialOrder::WeightedGrevlex).unwrap();
        assert_eq!(gb.elements, vec![x(&r, 0)]);
    }

    #[test]
    fn twisted_cubic_is_already_a_basis() {
        // {x1 x3 - x2^2, x1 x4 - x2 x3, x2 x4 - x3^2}: all S-pairs reduce to
        // zero under grevlex; the reduced basis is the same three elements
        // with monic leading coefficients.
        let r = ring(4);
        let f1 = x(&r, 0).mul(&x(&r, 2)).unwrap().sub(&x(&r, 1).mul(&x(&r, 1)).unwrap()).unwrap();
        let f2 = x(&r, 0).mul(&x(&r, 3)).unwrap().sub(&x(&r, 1).mul(&x(&r, 2)).unwrap()).unwrap();
        let f3 = x(&r, 1).mul(&x(&r, 3)).unwrap().sub(&x(&r, 2).mul(&x(&r, 2)).unwrap()).unwrap();
        let gb = reduced_gb(&[f1.clone(), f2.clone(), f3.clone()], MonomialOrder::WeightedGrevlex).unwrap();
        assert_eq!(gb.elements.len(), 3);
        // each input is (up to sign) in the basis
        for f in [&f1, &f2, &f3] {
            assert!(gb.elements.contains(f) || gb.elements.contains(&f.neg()));
        }
        // Buchberger criterion: every S-pair of the result reduces to zero
        for i in 0..3 {
            for j in 0..i {
                let s = spoly(&gb.elements[i], &gb.elements[j], MonomialOrder::WeightedGrevlex);
                assert!(normal_form(&s, &gb.elements, MonomialOrder::WeightedGrevlex).is_zero());
            }
        }
    }

    #[test]
    fn linear_elimination_over_qt() {
        // {x1 - t x2, x1} over Q(t) -> {x1, x2} (t is a unit)
        let r = ring_qt(2);
        let f = x(&r, 0)
            .sub(&x(&r, 1).scaled(&TRat::t_power(1)).unwrap())
            .unwrap();
        let gb = reduced_gb(&[f, x(&r, 0)], MonomialOrder::WeightedGrevlex).unwrap();
        assert_eq!(gb.elements, vec![x(&r, 0), x(&r, 1)]);
    }

    #[test]
    fn basis_is_canonical_under_permutation_and_duplication() {
        let r = ring(3);
        let f1 = x(&r, 0).mul(&x(&r, 1)).unwrap().sub(&x(&r, 2).mul(&x(&r, 2)).unwrap()).unwrap();
        let f2 = x(&r, 0).mul(&x(&r, 0)).unwrap().sub(&x(&r, 1).mul(&x(&r, 2)).unwrap()).unwrap();
        let a = reduced_gb(&[f1.clone(), f2.clone()], MonomialOrder::WeightedGrevlex).unwrap();
        let b = reduced_gb(&[f2.clone(), f1.clone(), f1.clone()], MonomialOrder::WeightedGrevlex).unwrap();
        assert_eq!(a.elements, b.elements);
    }

    #[test]
    fn division_contract_and_membership() {
        let r = ring(2);
        // f = x2 x1 by {x1}: remainder 0, cofactor x2
        let (rem, cof) = normal_form_with_cofactors(
            &x(&r, 1).mul(&x(&r, 0)).unwrap(),
            &[x(&r, 0)],
            MonomialOrder::WeightedGrevlex,
        );
        assert!(rem.is_zero());
        assert_eq!(cof[0], x(&r, 1));
        // f = x2^2 by {x1}: remainder x2^2
        let f = x(&r, 1).mul(&x(&r, 1)).unwrap();
        let (rem, cof) = normal_form_with_cofactors(&f, &[x(&r, 0)], MonomialOrder::WeightedGrevlex);
        assert_eq!(rem, f);
        assert!(cof[0].is_zero());
    }

    #[test]
    fn division_by_conic_basis() {
        // Standard grevlex makes x2^2 the leading term of x1 x3 - x2^2, so
        // dividing x1 x3 leaves it untouched: it is not a member.
        let r = ring(3);
        let g = x(&r, 0).mul(&x(&r, 2)).unwrap().sub(&x(&r, 1).mul(&x(&r, 1)).unwrap()).unwrap();
        let gb = reduced_gb(&[g.clone()], MonomialOrder::WeightedGrevlex).unwrap();
        let f = x(&r, 0).mul(&x(&r, 2)).unwrap();
        let (rem, _) = normal_form_with_cofactors(&f, &gb.elements, MonomialOrder::WeightedGrevlex);
        assert_eq!(rem, f);
        assert!(!gb.contains(&f));
        // but f reduced by the sign-flipped generator recovers x2^2 exactly:
        // f - (x2^2 - x1 x3) ... membership of the difference
        let d = f.sub(&x(&r, 1).mul(&x(&r, 1)).unwrap()).unwrap();
        assert!(gb.contains(&d));
    }

    #[test]
    fn eliminate_examples() {
        let r = ring(2);
        let i1 = Ideal::new(&r, vec![x(&r, 0)]).unwrap();
        assert!(eliminate(&i1, 1).unwrap().gens().is_empty());

        let rqt = ring_qt(2);
        let f = x(&rqt, 0)
            .sub(&x(&rqt, 1).scaled(&TRat::t_power(1)).unwrap())
            .unwrap();
        let i2 = Ideal::new(&rqt, vec![f]).unwrap();
        assert!(eliminate(&i2, 1).unwrap().gens().is_empty());

        let r3 = ring(3);
        let i3 = Ideal::new(
            &r3,
            vec![
                x(&r3, 0).mul(&x(&r3, 1)).unwrap(),
                x(&r3, 0).mul(&x(&r3, 2)).unwrap(),
            ],
        )
        .unwrap();
        assert!(eliminate(&i3, 1).unwrap().gens().is_empty());
    }

    #[test]
    fn colon_and_saturation() {
        // I = (t x1) in Q[t, x1] as a bivariate ring (var 0 plays t)
        let r = ring(2);
        let t = x(&r, 0);
        let x1 = x(&r, 1);
        let i = Ideal::new(&r, vec![t.mul(&x1).unwrap()]).unwrap();
        let c = colon(&i, &t).unwrap();
        assert!(ideal_eq(&c, &Ideal::new(&r, vec![x1.clone()]).unwrap()).unwrap());
        let s = saturate_by(&i, &t).unwrap();
        assert!(ideal_eq(&s, &Ideal::new(&r, vec![x1.clone()]).unwrap()).unwrap());

        // I = (x1^2): (I : x1) = (x1)
        let i = Ideal::new(&r, vec![x1.mul(&x1).unwrap()]).unwrap();
        let c = colon(&i, &x1).unwrap();
        assert!(ideal_eq(&c, &Ideal::new(&r, vec![x1.clone()]).unwrap()).unwrap());

        // I = (x1, x1 + t^2 x2) in Q[t, x1, x2]: saturation by t is (x1, x2)
        let r3 = ring(3);
        let t = x(&r3, 0);
        let a = x(&r3, 1);
        let b = x(&r3, 2);
        let g2 = a.add(&t.mul(&t).unwrap().mul(&b).unwrap()).unwrap();
        let i = Ideal::new(&r3, vec![a.clone(), g2]).unwrap();
        let s = saturate_by(&i, &t).unwrap();
        assert!(ideal_eq(&s, &Ideal::new(&r3, vec![a, b]).unwrap()).unwrap());
    }

    #[test]
    fn dims_and_heights() {
        let r = ring(4);
        // (x1, x2) in 4 variables: height 2
        let i = Ideal::new(&r, vec![x(&r, 0), x(&r, 1)]).unwrap();
        assert_eq!(dim_and_height(&i).unwrap(), (Some(2), HeightVal::Finite(2)));
        // principal nonunit: height 1
        let i = Ideal::new(&r, vec![x(&r, 0).mul(&x(&r, 1)).unwrap()]).unwrap();
        assert_eq!(dim_and_height(&i).unwrap().1, HeightVal::Finite(1));
        // twisted cubic: height 2
        let f1 = x(&r, 0).mul(&x(&r, 2)).unwrap().sub(&x(&r, 1).mul(&x(&r, 1)).unwrap()).unwrap();
        let f2 = x(&r, 0).mul(&x(&r, 3)).unwrap().sub(&x(&r, 1).mul(&x(&r, 2)).unwrap()).unwrap();
        let f3 = x(&r, 1).mul(&x(&r, 3)).unwrap().sub(&x(&r, 2).mul(&x(&r, 2)).unwrap()).unwrap();
        let i = Ideal::new(&r, vec![f1, f2, f3]).unwrap();
        assert_eq!(dim_and_height(&i).unwrap(), (Some(2), HeightVal::Finite(2)));
        // unit ideal
        let i = Ideal::new(&r, vec![Poly::one(&r)]).unwrap();
        assert_eq!(dim_and_height(&i).unwrap(), (None, HeightVal::Infinite));
        // zero ideal
        let i = Ideal::new(&r, vec![]).unwrap();
        assert_eq!(dim_and_height(&i).unwrap(), (Some(4), HeightVal::Finite(0)));
    }

    #[test]
    fn dvr_coefficients_are_rejected() {
        let r = RingSpec::standard(2, CoeffDomain::Dvr);
        let g = Poly::var(&r, 0).unwrap();
        assert!(matches!(
            reduced_gb(&[g], MonomialOrder::WeightedGrevlex),
            Err(GroebnerError::DvrCoefficients)
        ));
    }

    #[test]
    fn height_monotone_under_inclusion() {
        let r = ring(3);
        let small = Ideal::new(&r, vec![x(&r, 0)]).unwrap();
        let big = Ideal::new(&r, vec![x(&r, 0), x(&r, 1)]).unwrap();
        let hs = dim_and_height(&small).unwrap().1;
        let hb = dim_and_height(&big).unwrap().1;
        assert!(hs <= hb);
    }
}
