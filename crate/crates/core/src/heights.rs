//! Height calculus at finite scale: heights over Q[x] and Q(t)[x] via the
//! Groebner engine, heights over Q[t]_(t)[x] by the two-fiber formula,
//! degree-bounded contraction to Q[x], tail contractions, syntactic prime
//! chains and the catenary comparison, and the Hauptidealsatz check.
//!
//! Primes of the DVR ring split by whether they contain t: those that do
//! are in height-shifted bijection with primes of Q[x], the rest with
//! primes of Q(t)[x]. Hence height(I) = min(generic-fiber height,
//! 1 + special-fiber height), with unit-ideal branches contributing
//! infinity.

use crate::groebner::{self, GroebnerError, HeightVal};
use crate::qlinalg::{kernel_basis, Mat, RowSpace};
use crate::ringcore::{CoeffDomain, Ideal, Monomial, Poly, Rat, RingError, TPoly, TRat};
use crate::saturation::{self, SatError};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HeightError {
    #[error("expected an ideal over {expected}, found {found}")]
    WrongTower { expected: &'static str, found: &'static str },
    #[error("link {0} is not a syntactic prime: {1}")]
    NotPrime(usize, String),
    #[error("chain is not strictly increasing at link {0}")]
    NotStrict(usize),
    #[error("chains do not share endpoints")]
    EndpointMismatch,
    #[error("ideal list is not ascending at position {0}")]
    NotAscending(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Sat(#[from] SatError),
}

fn expect_domain(ideal: &Ideal, domain: CoeffDomain) -> Result<(), HeightError> {
    if ideal.ring().domain() != domain {
        return Err(HeightError::WrongTower {
            expected: domain.name(),
            found: ideal.ring().domain().name(),
        });
    }
    Ok(())
}

/// Both fiber heights and their combination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeightReport {
    /// height of I Q(t)[x] (infinite when that extension is the unit ideal)
    pub generic: HeightVal,
    /// height over Q[x] of (I + (t))/(t)
    pub special: HeightVal,
    /// min(generic, 1 + special)
    pub combined: HeightVal,
}

/// Height over the DVR coefficient ring by the two-fiber formula.
pub fn height_dvr_report(ideal: &Ideal) -> Result<HeightReport, HeightError> {
    expect_domain(ideal, CoeffDomain::Dvr)?;
    let ring = ideal.ring();
    let qt_ring = ring.with_domain(CoeffDomain::FieldQt);
    let generic_gens: Vec<Poly> = ideal
        .gens()
        .iter()
        .map(|g| g.cast_domain(CoeffDomain::FieldQt))
        .collect::<Result<_, _>>()?;
    let generic_ideal = Ideal::new(&qt_ring, generic_gens)?;
    let (_, generic) = groebner::dim_and_height(&generic_ideal)?;

    let q_ring = ring.with_domain(CoeffDomain::FieldQ);
    let special_gens: Vec<Poly> = ideal
        .gens()
        .iter()
        .map(|g| g.eval_t0())
        .collect::<Result<_, _>>()?;
    let special_ideal = Ideal::new(&q_ring, special_gens)?;
    let (_, special) = groebner::dim_and_height(&special_ideal)?;

    let special_branch = match special {
        HeightVal::Finite(h) => HeightVal::Finite(h + 1),
        HeightVal::Infinite => HeightVal::Infinite,
    };
    Ok(HeightReport {
        generic,
        special,
        combined: generic.min(special_branch),
    })
}

pub fn height_dvr(ideal: &Ideal) -> Result<HeightVal, HeightError> {
    Ok(height_dvr_report(ideal)?.combined)
}

/// Height in whichever tower the ideal lives in.
pub fn height_any(ideal: &Ideal) -> Result<HeightVal, HeightError> {
    match ideal.ring().domain() {
        CoeffDomain::Dvr => height_dvr(ideal),
        _ => Ok(groebner::dim_and_height(ideal)?.1),
    }
}

/// Degree-bounded contraction of a homogeneous Q(t)[x]-ideal to Q[x].
#[derive(Clone, Debug)]
pub struct ContractionResult {
    pub degree_bound: u64,
    pub gens: Vec<Poly>,
}

/// For each degree <= bound, the Q-points of the degree piece: expand a
/// Q(t)-basis, require the non-pivot coordinates to be t-free, and solve
/// the resulting exact Q-linear system. New generators are reported only
/// when not already generated by lower-degree output.
pub fn contraction_degreewise(ideal: &Ideal, bound: u64) -> Result<ContractionResult, HeightError> {
    expect_domain(ideal, CoeffDomain::FieldQt)?;
    let ring = ideal.ring();
    let q_ring = ring.with_domain(CoeffDomain::FieldQ);
    let mut found: Vec<Poly> = Vec::new();
    for e in 0..=bound {
        let ambient = ring.monomials_of_degree(e);
        let mut rows: Vec<Vec<TRat>> = Vec::new();
        for g in ideal.gens() {
            let Some(dg) = g.degree() else { continue };
            if dg > e {
                continue;
            }
            for m in ring.monomials_of_degree(e - dg) {
                rows.push(g.mul_term(&m, &TRat::one())?.coeff_vector(&ambient));
            }
        }
        let mut q_vectors: Vec<Vec<Rat>> = Vec::new();
        if !rows.is_empty() {
            let mut mat = Mat::from_rows(rows);
            let pivots = mat.rref();
            let basis: Vec<Vec<TRat>> = (0..pivots.len()).map(|i| mat.row(i).to_vec()).collect();
            // t-free conditions on the non-pivot coordinates
            let nonpivot: Vec<usize> =
                (0..ambient.len()).filter(|c| !pivots.contains(c)).collect();
            let mut constraints: Vec<Vec<Rat>> = Vec::new();
            for &j in &nonpivot {
                // fractions s_i = r_ij - r_ij(0) over a common denominator
                let diffs: Vec<TRat> = basis
                    .iter()
                    .map(|row| {
                        let r = &row[j];
                        let c0 = if r.is_regular() {
                            TRat::from_rat(r.reduce_mod_t().expect("regular"))
                        } else {
                            TRat::zero()
                        };
                        r.sub(&c0)
                    })
                    .collect();
                let fracs: Vec<(TPoly, TPoly)> = diffs.iter().map(|s| s.as_fraction()).collect();
                let mut common = TPoly::one();
                for (_, den) in &fracs {
                    let g = common.gcd(den);
                    common = common.mul(den).divrem(&g).expect("nonzero gcd").0;
                }
                let numerators: Vec<TPoly> = fracs
                    .iter()
                    .map(|(num, den)| {
                        let scale = common.divrem(den).expect("den divides common").0;
                        num.mul(&scale)
                    })
                    .collect();
                let max_len = numerators
                    .iter()
                    .filter_map(|n| n.degree())
                    .max()
                    .map_or(0, |d| d + 1);
                for power in 0..max_len {
                    let row: Vec<Rat> = numerators.iter().map(|n| n.coeff(power)).collect();
                    if row.iter().any(|c| !c.is_zero()) {
                        constraints.push(row);
                    }
                }
            }
            let coeff_solutions = if constraints.is_empty() {
                // no constraints: all of the basis coefficient space
                (0..basis.len())
                    .map(|i| {
                        let mut v = vec![Rat::zero(); basis.len()];
                        v[i] = num_traits::One::one();
                        v
                    })
                    .collect()
            } else {
                kernel_basis(&Mat::from_rows(constraints))
            };
            for c in coeff_solutions {
                let mut w = vec![Rat::zero(); ambient.len()];
                let mut ok = true;
                for (jj, slot) in w.iter_mut().enumerate() {
                    let mut acc = TRat::zero();
                    for (i, ci) in c.iter().enumerate() {
                        if ci.is_zero() {
                            continue;
                        }
                        acc = acc.add(&basis[i][jj].mul(&TRat::from_rat(ci.clone())));
                    }
                    match acc.as_rational() {
                        Some(r) => *slot = r,
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok && w.iter().any(|c| !c.is_zero()) {
                    q_vectors.push(w);
                }
            }
        }
        if q_vectors.is_empty() {
            continue;
        }
        // keep only vectors new modulo multiples of lower-degree output
        let mut lower: Vec<Vec<Rat>> = Vec::new();
        for g in &found {
            let dg = g.degree().expect("homogeneous output");
            if dg > e {
                continue;
            }
            for m in q_ring.monomials_of_degree(e - dg) {
                let mult = g.mul_term(&m, &TRat::one())?;
                lower.push(
                    mult.coeff_vector(&ambient)
                        .iter()
                        .map(|c| c.as_rational().expect("FieldQ"))
                        .collect(),
                );
            }
        }
        let mut span = RowSpace::from_spanning(ambient.len(), &lower);
        for w in q_vectors {
            if span.contains(&w) {
                continue;
            }
            let coeffs: Vec<TRat> = w.iter().map(|c| TRat::from_rat(c.clone())).collect();
            found.push(Poly::from_coeff_vector(&q_ring, &ambient, &coeffs)?);
            let mut rows: Vec<Vec<Rat>> = span.basis().to_vec();
            rows.push(w);
            span = RowSpace::from_spanning(ambient.len(), &rows);
        }
    }
    Ok(ContractionResult {
        degree_bound: bound,
        gens: found,
    })
}

/// I intersected with the subring in the variables x_{n+1}, ...: over the
/// fields this is block elimination; over the DVR it runs in Q[t, x] with
/// t exempt from elimination, so the answer may contain t.
pub fn tail_contraction(ideal: &Ideal, n: usize) -> Result<Ideal, HeightError> {
    match ideal.ring().domain() {
        CoeffDomain::FieldQ | CoeffDomain::FieldQt => Ok(groebner::eliminate(ideal, n)?),
        CoeffDomain::Dvr => {
            let ring = ideal.ring();
            let poly_ring = saturation::t_adjoined_ring(ring);
            let mut gens = Vec::new();
            for g in ideal.gens() {
                gens.push(saturation::to_t_polynomial(&poly_ring, g)?);
            }
            let j = Ideal::new(&poly_ring, gens)?;
            let eliminated = groebner::eliminate(&j, n)?;
            let mut back = Vec::new();
            for g in eliminated.gens() {
                back.extend(saturation::x_homogeneous_components(ring, g)?);
            }
            Ok(Ideal::new(ring, back)?)
        }
    }
}

/// Ascending chain of ideals over the DVR ring, each generated by a subset
/// of {t, linear forms}; primality is syntactic (the quotient is a
/// polynomial ring over a domain).
#[derive(Clone, Debug)]
pub struct PrimeChain {
    pub links: Vec<Ideal>,
}

fn check_syntactic_prime(link: &Ideal, index: usize) -> Result<(), HeightError> {
    let ring = link.ring();
    let mut t_gens = 0usize;
    let mut forms: Vec<Poly> = Vec::new();
    for g in link.gens() {
        match g.degree() {
            Some(0) => {
                let c = g.coeff(&Monomial::one());
                if c.valuation() != Some(1) {
                    return Err(HeightError::NotPrime(
                        index,
                        "constant generator must be a unit multiple of t".into(),
                    ));
                }
                t_gens += 1;
            }
            Some(1) => forms.push(g.clone()),
            _ => {
                return Err(HeightError::NotPrime(
                    index,
                    "generators must be t or linear forms".into(),
                ))
            }
        }
    }
    if t_gens > 1 {
        return Err(HeightError::NotPrime(index, "repeated t generator".into()));
    }
    if forms.is_empty() {
        return Ok(());
    }
    // mod-t reductions must be Q-linearly independent: then s variables can
    // be solved away and the quotient is a polynomial ring over a domain
    let mut rows = Vec::new();
    for f in &forms {
        let f0 = f.eval_t0()?;
        let row: Vec<Rat> = (0..ring.nvars())
            .map(|v| {
                f0.coeff(&Monomial::var(v))
                    .as_rational()
                    .expect("FieldQ coefficient")
            })
            .collect();
        if row.iter().all(|c| c.is_zero()) {
            return Err(HeightError::NotPrime(
                index,
                "a linear form vanishes mod t".into(),
            ));
        }
        rows.push(row);
    }
    let rank = Mat::from_rows(rows).rank();
    if rank != forms.len() {
        return Err(HeightError::NotPrime(
            index,
            "linear forms are dependent mod t".into(),
        ));
    }
    Ok(())
}

fn link_contains(big: &Ideal, small: &Ideal) -> Result<bool, HeightError> {
    for g in small.gens() {
        if !saturation::ideal_contains_dvr(big.ring(), big.gens(), g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verify strictness and syntactic primality; returns the chain length
/// (number of strict inclusions).
pub fn chain_verify(chain: &PrimeChain) -> Result<usize, HeightError> {
    for (i, link) in chain.links.iter().enumerate() {
        expect_domain(link, CoeffDomain::Dvr)?;
        check_syntactic_prime(link, i)?;
    }
    for i in 0..chain.links.len().saturating_sub(1) {
        let lo = &chain.links[i];
        let hi = &chain.links[i + 1];
        if !link_contains(hi, lo)? {
            return Err(HeightError::NotStrict(i));
        }
        if link_contains(lo, hi)? {
            return Err(HeightError::NotStrict(i));
        }
    }
    Ok(chain.links.len().saturating_sub(1))
}

/// Lengths of two verified chains with equal endpoints.
pub fn catenary_compare(c1: &PrimeChain, c2: &PrimeChain) -> Result<bool, HeightError> {
    let l1 = chain_verify(c1)?;
    let l2 = chain_verify(c2)?;
    let same_bottom = link_contains(c1.links.first().unwrap(), c2.links.first().unwrap())?
        && link_contains(c2.links.first().unwrap(), c1.links.first().unwrap())?;
    let same_top = link_contains(c1.links.last().unwrap(), c2.links.last().unwrap())?
        && link_contains(c2.links.last().unwrap(), c1.links.last().unwrap())?;
    if !same_bottom || !same_top {
        return Err(HeightError::EndpointMismatch);
    }
    Ok(l1 == l2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HauptOutcome {
    /// I + (f) is the unit ideal; the proposition does not apply.
    NotApplicable,
    Applicable {
        base_height: HeightVal,
        extended_height: HeightVal,
        holds: bool,
    },
}

/// Adjoining one element raises the height by at most one.
pub fn hauptidealsatz_check(ideal: &Ideal, f: &Poly) -> Result<HauptOutcome, HeightError> {
    expect_domain(ideal, CoeffDomain::Dvr)?;
    let mut gens = ideal.gens().to_vec();
    gens.push(f.clone());
    let extended = Ideal::new(ideal.ring(), gens)?;
    let extended_height = height_dvr(&extended)?;
    if extended_height == HeightVal::Infinite {
        return Ok(HauptOutcome::NotApplicable);
    }
    let base_height = height_dvr(ideal)?;
    let holds = match (base_height, extended_height) {
        (HeightVal::Finite(b), HeightVal::Finite(e)) => e <= b + 1,
        (HeightVal::Infinite, _) => true,
        _ => false,
    };
    Ok(HauptOutcome::Applicable {
        base_height,
        extended_height,
        holds,
    })
}

/// Finite-scale shadow of the directed-union supremum: verify the list is
/// ascending by membership and that the heights are nondecreasing with the
/// top attaining the maximum.
pub fn directed_union_height(list: &[Ideal]) -> Result<bool, HeightError> {
    for i in 0..list.len().saturating_sub(1) {
        if !link_contains(&list[i + 1], &list[i])? {
            return Err(HeightError::NotAscending(i));
        }
    }
    let mut heights = Vec::with_capacity(list.len());
    for ideal in list {
        heights.push(height_dvr(ideal)?);
    }
    Ok(heights.windows(2).all(|w| w[0] <= w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::RingSpec;

    fn dvr_ring(n: usize) -> RingSpec {
        RingSpec::standard(n, CoeffDomain::Dvr)
    }

    fn x(r: &RingSpec, i: usize) -> Poly {
        Poly::var(r, i).unwrap()
    }

    fn t_gen(r: &RingSpec) -> Poly {
        Poly::constant(r, TRat::t_power(1)).unwrap()
    }

    #[test]
    fn height_of_t() {
        let r = dvr_ring(2);
        let i = Ideal::new(&r, vec![t_gen(&r)]).unwrap();
        let rep = height_dvr_report(&i).unwrap();
        assert_eq!(rep.generic, HeightVal::Infinite);
        assert_eq!(rep.special, HeightVal::Finite(0));
        assert_eq!(rep.combined, HeightVal::Finite(1));
    }

    #[test]
    fn height_of_t_and_x() {
        let r = dvr_ring(2);
        let i = Ideal::new(&r, vec![t_gen(&r), x(&r, 0)]).unwrap();
        assert_eq!(height_dvr(&i).unwrap(), HeightVal::Finite(2));
    }

    #[test]
    fn height_of_twisted_linear_form() {
        // (x1 - t x2): generic fiber height 1, special fiber (x1) gives 2
        let r = dvr_ring(2);
        let g = x(&r, 0)
            .sub(&x(&r, 1).scaled(&TRat::t_power(1)).unwrap())
            .unwrap();
        let i = Ideal::new(&r, vec![g]).unwrap();
        let rep = height_dvr_report(&i).unwrap();
        assert_eq!(rep.generic, HeightVal::Finite(1));
        assert_eq!(rep.special, HeightVal::Finite(1));
        assert_eq!(rep.combined, HeightVal::Finite(1));
    }

    #[test]
    fn height_of_unit_ideal_is_infinite() {
        let r = dvr_ring(1);
        let i = Ideal::new(&r, vec![Poly::one(&r)]).unwrap();
        assert_eq!(height_dvr(&i).unwrap(), HeightVal::Infinite);
    }

    #[test]
    fn variable_ideals_across_towers() {
        for domain in [CoeffDomain::FieldQ, CoeffDomain::FieldQt] {
            let r = RingSpec::standard(3, domain);
            for k in 1..=3usize {
                let gens: Vec<Poly> = (0..k).map(|i| Poly::var(&r, i).unwrap()).collect();
                let i = Ideal::new(&r, gens).unwrap();
                assert_eq!(
                    groebner::dim_and_height(&i).unwrap().1,
                    HeightVal::Finite(k as u64)
                );
            }
        }
        let r = dvr_ring(3);
        for k in 1..=3usize {
            let gens: Vec<Poly> = (0..k).map(|i| x(&r, i)).collect();
            let i = Ideal::new(&r, gens).unwrap();
            assert_eq!(height_dvr(&i).unwrap(), HeightVal::Finite(k as u64));
        }
    }

    #[test]
    fn contraction_of_twisted_form_vanishes() {
        let rqt = RingSpec::standard(2, CoeffDomain::FieldQt);
        let g = Poly::var(&rqt, 0)
            .unwrap()
            .sub(&Poly::var(&rqt, 1).unwrap().scaled(&TRat::t_power(1)).unwrap())
            .unwrap();
        let i = Ideal::new(&rqt, vec![g]).unwrap();
        for bound in [1u64, 2, 3] {
            let c = contraction_degreewise(&i, bound).unwrap();
            assert!(c.gens.is_empty(), "bound {bound}");
        }
    }

    #[test]
    fn contraction_keeps_t_free_generators() {
        let rqt = RingSpec::standard(2, CoeffDomain::FieldQt);
        let i = Ideal::new(&rqt, vec![Poly::var(&rqt, 0).unwrap()]).unwrap();
        let c = contraction_degreewise(&i, 2).unwrap();
        assert_eq!(c.gens.len(), 1);
        assert_eq!(c.gens[0].degree(), Some(1));
        // unit scalars are invisible to the contraction
        let u = TRat::one().add(&TRat::t_power(1));
        let i = Ideal::new(&rqt, vec![Poly::var(&rqt, 0).unwrap().scaled(&u).unwrap()]).unwrap();
        let c = contraction_degreewise(&i, 1).unwrap();
        assert_eq!(c.gens.len(), 1);
    }

    #[test]
    fn contraction_height_inequality() {
        // height of the contraction ideal <= height over Q(t)[x]
        let rqt = RingSpec::standard(2, CoeffDomain::FieldQt);
        let rq = rqt.with_domain(CoeffDomain::FieldQ);
        let g = Poly::var(&rqt, 0)
            .unwrap()
            .sub(&Poly::var(&rqt, 1).unwrap().scaled(&TRat::t_power(1)).unwrap())
            .unwrap();
        let i = Ideal::new(&rqt, vec![g]).unwrap();
        let c = contraction_degreewise(&i, 2).unwrap();
        let ci = Ideal::new(&rq, c.gens).unwrap();
        let hc = groebner::dim_and_height(&ci).unwrap().1;
        let hi = groebner::dim_and_height(&i).unwrap().1;
        assert!(hc <= hi);
        assert_eq!(hc, HeightVal::Finite(0));
        assert_eq!(hi, HeightVal::Finite(1));
    }

    #[test]
    fn tail_contractions() {
        let rqt = RingSpec::standard(2, CoeffDomain::FieldQt);
        let i = Ideal::new(&rqt, vec![Poly::var(&rqt, 0).unwrap()]).unwrap();
        assert!(tail_contraction(&i, 1).unwrap().gens().is_empty());

        // (t) over the DVR survives every tail contraction
        let r = dvr_ring(2);
        let i = Ideal::new(&r, vec![t_gen(&r)]).unwrap();
        for n in 0..=2 {
            let tail = tail_contraction(&i, n).unwrap();
            assert_eq!(tail.gens().len(), 1);
            assert_eq!(tail.gens()[0].degree(), Some(0));
        }

        // (x1 x2 - x3^2) over Q(t): nothing in the last two variables
        let r3 = RingSpec::standard(3, CoeffDomain::FieldQt);
        let g = Poly::var(&r3, 0)
            .unwrap()
            .mul(&Poly::var(&r3, 1).unwrap())
            .unwrap()
            .sub(
                &Poly::var(&r3, 2)
                    .unwrap()
                    .mul(&Poly::var(&r3, 2).unwrap())
                    .unwrap(),
            )
            .unwrap();
        let i = Ideal::new(&r3, vec![g]).unwrap();
        assert!(tail_contraction(&i, 1).unwrap().gens().is_empty());
    }

    fn chain_from(r: &RingSpec, steps: &[Vec<Poly>]) -> PrimeChain {
        PrimeChain {
            links: steps
                .iter()
                .map(|gens| Ideal::new(r, gens.clone()).unwrap())
                .collect(),
        }
    }

    #[test]
    fn catenary_on_constructed_chains() {
        let r = dvr_ring(2);
        let c1 = chain_from(
            &r,
            &[
                vec![],
                vec![x(&r, 0)],
                vec![x(&r, 0), x(&r, 1)],
                vec![x(&r, 0), x(&r, 1), t_gen(&r)],
            ],
        );
        let c2 = chain_from(
            &r,
            &[
                vec![],
                vec![t_gen(&r)],
                vec![t_gen(&r), x(&r, 0)],
                vec![t_gen(&r), x(&r, 0), x(&r, 1)],
            ],
        );
        assert_eq!(chain_verify(&c1).unwrap(), 3);
        assert_eq!(chain_verify(&c2).unwrap(), 3);
        assert!(catenary_compare(&c1, &c2).unwrap());
        // maximal chain length equals the height of the top link
        let top = Ideal::new(&r, vec![t_gen(&r), x(&r, 0), x(&r, 1)]).unwrap();
        assert_eq!(height_dvr(&top).unwrap(), HeightVal::Finite(3));
    }

    #[test]
    fn chain_rejects_repeats_and_non_primes() {
        let r = dvr_ring(2);
        let repeated = chain_from(&r, &[vec![x(&r, 0)], vec![x(&r, 0)]]);
        assert!(matches!(
            chain_verify(&repeated),
            Err(HeightError::NotStrict(0))
        ));
        let quad = chain_from(&r, &[vec![x(&r, 0).mul(&x(&r, 0)).unwrap()]]);
        assert!(matches!(chain_verify(&quad), Err(HeightError::NotPrime(0, _))));
        // dependent linear forms
        let dep = chain_from(&r, &[vec![x(&r, 0), x(&r, 0).scaled(&TRat::from_int(2)).unwrap()]]);
        assert!(matches!(chain_verify(&dep), Err(HeightError::NotPrime(0, _))));
    }

    #[test]
    fn twisted_form_is_syntactically_prime() {
        let r = dvr_ring(2);
        let g = x(&r, 0)
            .sub(&x(&r, 1).scaled(&TRat::t_power(1)).unwrap())
            .unwrap();
        let c = chain_from(&r, &[vec![g]]);
        assert_eq!(chain_verify(&c).unwrap(), 0);
    }

    #[test]
    fn hauptidealsatz_examples() {
        let r = dvr_ring(2);
        // I = (t), f = x1: heights 1 and 2
        let i = Ideal::new(&r, vec![t_gen(&r)]).unwrap();
        match hauptidealsatz_check(&i, &x(&r, 0)).unwrap() {
            HauptOutcome::Applicable {
                base_height,
                extended_height,
                holds,
            } => {
                assert_eq!(base_height, HeightVal::Finite(1));
                assert_eq!(extended_height, HeightVal::Finite(2));
                assert!(holds);
            }
            HauptOutcome::NotApplicable => panic!("applicable expected"),
        }
        // I = (x1 - t x2), f = x2: extension has height 2
        let g = x(&r, 0)
            .sub(&x(&r, 1).scaled(&TRat::t_power(1)).unwrap())
            .unwrap();
        let i = Ideal::new(&r, vec![g]).unwrap();
        match hauptidealsatz_check(&i, &x(&r, 1)).unwrap() {
            HauptOutcome::Applicable {
                base_height,
                extended_height,
                holds,
            } => {
                assert_eq!(base_height, HeightVal::Finite(1));
                assert_eq!(extended_height, HeightVal::Finite(2));
                assert!(holds);
            }
            HauptOutcome::NotApplicable => panic!("applicable expected"),
        }
        // unit extension is flagged not-applicable
        let i = Ideal::new(&r, vec![t_gen(&r)]).unwrap();
        let one_minus_t = Poly::constant(&r, TRat::one().sub(&TRat::t_power(1))).unwrap();
        assert_eq!(
            hauptidealsatz_check(&i, &one_minus_t).unwrap(),
            HauptOutcome::NotApplicable
        );
    }

    #[test]
    fn directed_union_examples() {
        let r = dvr_ring(2);
        let list = vec![
            Ideal::new(&r, vec![x(&r, 0)]).unwrap(),
            Ideal::new(&r, vec![x(&r, 0), x(&r, 1)]).unwrap(),
            Ideal::new(&r, vec![x(&r, 0), x(&r, 1), t_gen(&r)]).unwrap(),
        ];
        assert!(directed_union_height(&list).unwrap());
        // constant chain
        let c = vec![list[0].clone(), list[0].clone()];
        assert!(directed_union_height(&c).unwrap());
        // non-ascending list errors
        let bad = vec![list[1].clone(), list[0].clone()];
        assert!(matches!(
            directed_union_height(&bad),
            Err(HeightError::NotAscending(0))
        ));
    }

    #[test]
    fn two_fiber_formula_with_t_in_ideal() {
        // for I containing t the combined height is 1 + height mod t
        let r = dvr_ring(3);
        let i = Ideal::new(&r, vec![t_gen(&r), x(&r, 0), x(&r, 2)]).unwrap();
        let rep = height_dvr_report(&i).unwrap();
        assert_eq!(rep.generic, HeightVal::Infinite);
        assert_eq!(rep.special, HeightVal::Finite(2));
        assert_eq!(rep.combined, HeightVal::Finite(3));
    }

    #[test]
    fn monotonicity_under_inclusion() {
        let r = dvr_ring(2);
        let small = Ideal::new(&r, vec![x(&r, 0)]).unwrap();
        let big = Ideal::new(&r, vec![x(&r, 0), t_gen(&r)]).unwrap();
        assert!(height_dvr(&small).unwrap() <= height_dvr(&big).unwrap());
    }
}
