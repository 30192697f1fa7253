//! Strength machinery: Jacobian ideals, decomposition verification, the
//! Euler-identity reconstruction from a containment certificate, a
//! height-based strength lower bound, and the taming pipeline that turns a
//! finite-strength witness with unbounded denominators into one with
//! regular coefficients by saturating the witness ideal.

use crate::groebner::{self, GroebnerError, HeightVal};
use crate::ringcore::{CoeffDomain, Ideal, Monomial, Poly, RingError, RingSpec, TRat};
use crate::saturation::{self, GradedIdealPlus, SatError, SatOutcome};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StrengthError {
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("saturation incomplete: a partial derivative is not contained in the saturated witness ideal")]
    SaturationIncomplete,
    #[error("target must be homogeneous of degree >= 2")]
    BadTarget,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Sat(#[from] SatError),
}

/// A strength witness: pairs (g_i, h_i) of homogeneous positive-degree
/// polynomials with sum g_i h_i equal to the target.
#[derive(Clone, Debug)]
pub struct StrengthDecomposition {
    pub pairs: Vec<(Poly, Poly)>,
}

impl StrengthDecomposition {
    pub fn strength_bound(&self) -> usize {
        self.pairs.len()
    }

    /// Per-pair (is_regular, minimum coefficient valuation).
    pub fn pair_regularity(&self) -> Vec<(bool, Option<i64>)> {
        self.pairs
            .iter()
            .map(|(g, h)| {
                let v = match (g.t_valuation(), h.t_valuation()) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
                (g.is_regular() && h.is_regular(), v)
            })
            .collect()
    }
}

/// Certificate that every partial derivative of f lies in (gens):
/// cofactors[i][j] with d f / d x_i = sum_j cofactors[i][j] * gens[j].
#[derive(Clone, Debug)]
pub struct ContainmentCertificate {
    pub gens: Vec<Poly>,
    pub cofactors: Vec<Vec<Poly>>,
}

impl ContainmentCertificate {
    /// Check every row reconstructs the corresponding derivative exactly.
    pub fn verify(&self, f: &Poly) -> Result<(), StrengthError> {
        let ring = f.ring();
        if self.cofactors.len() != ring.nvars() {
            return Err(StrengthError::InvalidCertificate(format!(
                "expected {} rows, found {}",
                ring.nvars(),
                self.cofactors.len()
            )));
        }
        for g in &self.gens {
            match g.degree() {
                Some(d) if d >= 1 => {}
                _ => {
                    return Err(StrengthError::InvalidCertificate(
                        "generators must be homogeneous of positive degree".into(),
                    ))
                }
            }
        }
        for (i, row) in self.cofactors.iter().enumerate() {
            if row.len() != self.gens.len() {
                return Err(StrengthError::InvalidCertificate(format!(
                    "row {i} has {} cofactors for {} generators",
                    row.len(),
                    self.gens.len()
                )));
            }
            let mut acc = Poly::zero(ring);
            for (h, g) in row.iter().zip(self.gens.iter()) {
                acc = acc.add(&h.mul(g)?)?;
            }
            if acc != f.partial_derivative(i)? {
                return Err(StrengthError::InvalidCertificate(format!(
                    "row {i} does not reconstruct the derivative"
                )));
            }
        }
        Ok(())
    }
}

/// The ideal generated by the partial derivatives of f, zero derivatives
/// omitted.
pub fn jacobian_ideal(f: &Poly) -> Result<Ideal, StrengthError> {
    if f.degree().unwrap_or(0) < 1 {
        return Err(StrengthError::BadTarget);
    }
    let mut gens = Vec::new();
    for i in 0..f.ring().nvars() {
        let d = f.partial_derivative(i)?;
        if !d.is_zero() {
            gens.push(d);
        }
    }
    Ok(Ideal::new(f.ring(), gens)?)
}

/// True iff sum g_i h_i = f exactly with homogeneous positive-degree pairs
/// of complementary degrees. The error carries the first violated
/// constraint.
pub fn verify_decomposition(f: &Poly, d: &StrengthDecomposition) -> Result<(), StrengthError> {
    let Some(target_deg) = f.degree() else {
        return Err(StrengthError::InvalidDecomposition(
            "target must be a nonzero homogeneous polynomial".into(),
        ));
    };
    let ring = f.ring().with_domain(CoeffDomain::FieldQt);
    let mut acc = Poly::zero(&ring);
    for (k, (g, h)) in d.pairs.iter().enumerate() {
        let (Some(dg), Some(dh)) = (g.degree(), h.degree()) else {
            return Err(StrengthError::InvalidDecomposition(format!(
                "pair {k} has a zero or inhomogeneous component"
            )));
        };
        if dg < 1 || dh < 1 {
            return Err(StrengthError::InvalidDecomposition(format!(
                "pair {k} has a degree-zero component"
            )));
        }
        if dg + dh != target_deg {
            return Err(StrengthError::InvalidDecomposition(format!(
                "pair {k} has degrees {dg} + {dh} != {target_deg}"
            )));
        }
        let gq = g.cast_domain(CoeffDomain::FieldQt)?;
        let hq = h.cast_domain(CoeffDomain::FieldQt)?;
        acc = acc.add(&gq.mul(&hq)?)?;
    }
    if acc != f.cast_domain(CoeffDomain::FieldQt)? {
        return Err(StrengthError::InvalidDecomposition(
            "pair products do not sum to the target".into(),
        ));
    }
    Ok(())
}

/// Euler reconstruction: from d f/d x_i = sum_j h_{i,j} g_j build
/// f = sum_j g_j h_j with h_j = (1/deg f) sum_i w_i x_i h_{i,j}.
/// Generators with zero reconstructed cofactor are dropped.
pub fn containment_to_decomposition(
    f: &Poly,
    cert: &ContainmentCertificate,
) -> Result<StrengthDecomposition, StrengthError> {
    cert.verify(f)?;
    let ring = f.ring();
    let d = f.degree().ok_or(StrengthError::BadTarget)?;
    if d < 1 {
        return Err(StrengthError::BadTarget);
    }
    let inv_d = TRat::from_int(d as i64).inv().expect("degree is positive");
    let mut pairs = Vec::new();
    for (j, g) in cert.gens.iter().enumerate() {
        let mut h = Poly::zero(ring);
        for i in 0..ring.nvars() {
            let wi = TRat::from_int(ring.weights()[i] as i64);
            let piece = cert.cofactors[i][j].mul_term(&Monomial::var(i), &wi)?;
            h = h.add(&piece)?;
        }
        let h = h.scaled(&inv_d)?;
        if !h.is_zero() {
            pairs.push((g.clone(), h));
        }
    }
    let out = StrengthDecomposition { pairs };
    verify_decomposition(f, &out)?;
    Ok(out)
}

/// Product rule: from a verifying decomposition build the certificate
/// with generators (g_1, ..., g_n, h_1, ..., h_n).
pub fn decomposition_to_containment(
    f: &Poly,
    d: &StrengthDecomposition,
) -> Result<ContainmentCertificate, StrengthError> {
    verify_decomposition(f, d)?;
    let ring = f.ring();
    let n = d.pairs.len();
    let mut gens = Vec::with_capacity(2 * n);
    for (g, _) in &d.pairs {
        gens.push(g.clone());
    }
    for (_, h) in &d.pairs {
        gens.push(h.clone());
    }
    let mut cofactors = Vec::with_capacity(ring.nvars());
    for i in 0..ring.nvars() {
        let mut row = Vec::with_capacity(2 * n);
        // d/dx_i (g_j h_j) = (d g_j) h_j + g_j (d h_j): the cofactor of
        // g_j is d h_j, the cofactor of h_j is d g_j
        for (_, h) in &d.pairs {
            row.push(h.partial_derivative(i)?);
        }
        for (g, _) in &d.pairs {
            row.push(g.partial_derivative(i)?);
        }
        cofactors.push(row);
    }
    let cert = ContainmentCertificate { gens, cofactors };
    cert.verify(f)?;
    Ok(cert)
}

/// Height-based lower bound: strength <= n traps the Jacobian ideal in a
/// 2n-generated ideal, so height(J(f)) <= 2n; the bound is
/// ceil(height / 2). Infinite height (unit Jacobian ideal, only for
/// degree-one targets) yields an infinite bound.
pub fn strength_lower_bound(f: &Poly) -> Result<HeightVal, StrengthError> {
    let j = jacobian_ideal(f)?;
    let (_, h) = groebner::dim_and_height(&j)?;
    Ok(match h {
        HeightVal::Finite(h) => HeightVal::Finite(h.div_ceil(2)),
        HeightVal::Infinite => HeightVal::Infinite,
    })
}

/// Result of the taming pipeline. The decomposition verifies for `target`
/// = t^f_shift * f with every coefficient regular.
#[derive(Clone, Debug)]
pub struct TameResult {
    pub decomposition: StrengthDecomposition,
    pub target: Poly,
    pub f_shift: u32,
    pub gen_shifts: Vec<u32>,
    pub saturated_gens: Vec<Poly>,
}

/// Theorem pipeline: scale the witness components into R+, saturate the
/// ideal they generate up to degree deg(f) - 1, express each partial
/// derivative over the saturated generators with regular cofactors, and
/// reconstruct a regular decomposition by the Euler identity.
pub fn tame_strength(
    f: &Poly,
    witness: &StrengthDecomposition,
) -> Result<TameResult, StrengthError> {
    verify_decomposition(f, witness)?;
    let d = f.degree().expect("verified homogeneous");
    if d < 2 {
        return Err(StrengthError::BadTarget);
    }
    let dvr_ring: RingSpec = f.ring().with_domain(CoeffDomain::Dvr);
    let f_shift = (-f.t_valuation().expect("nonzero")).max(0) as u32;
    let target = f.t_shift(f_shift as i64)?.cast_domain(CoeffDomain::Dvr)?;

    let mut witness_gens = Vec::with_capacity(2 * witness.pairs.len());
    let mut gen_shifts = Vec::with_capacity(2 * witness.pairs.len());
    for (g, h) in &witness.pairs {
        for p in [g, h] {
            let s = (-p.t_valuation().expect("verified nonzero")).max(0) as u32;
            witness_gens.push(p.t_shift(s as i64)?.cast_domain(CoeffDomain::Dvr)?);
            gen_shifts.push(s);
        }
    }
    let witness_ideal = GradedIdealPlus::new(&dvr_ring, witness_gens)?;
    let saturated = match saturation::sat_leq_d(&witness_ideal, d - 1)? {
        SatOutcome::Saturated(r) => r.gens,
        SatOutcome::UnitIdeal { .. } => {
            return Err(StrengthError::InvalidDecomposition(
                "witness components generate the unit ideal".into(),
            ))
        }
    };

    let mut cofactors = Vec::with_capacity(dvr_ring.nvars());
    for i in 0..dvr_ring.nvars() {
        let derivative = target.partial_derivative(i)?;
        let row = saturation::ideal_membership_dvr(&dvr_ring, &saturated, &derivative)?
            .ok_or(StrengthError::SaturationIncomplete)?;
        cofactors.push(row);
    }
    let cert = ContainmentCertificate {
        gens: saturated.clone(),
        cofactors,
    };
    let decomposition = containment_to_decomposition(&target, &cert)?;
    debug_assert!(decomposition
        .pairs
        .iter()
        .all(|(g, h)| g.is_regular() && h.is_regular()));
    Ok(TameResult {
        decomposition,
        target,
        f_shift,
        gen_shifts,
        saturated_gens: saturated,
    })
}
