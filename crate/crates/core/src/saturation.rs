//! t-adic saturation of finitely generated homogeneous ideals in the
//! graded ring R+ = Q[t]_(t)[x_1..x_n], computed degree by degree through
//! the syzygy-generator space: for each degree the descending chain
//! Z_1 >= Z_2 >= ... inside Ebar certifiably stabilizes at an index ell,
//! and Y_ell = Sigma_ell(I_d) is the saturated degree piece.
//!
//! The chain genuinely stabilizes no later than K = (max Smith divisor of
//! the degree module) + 1: for k > max divisor every X_k tuple differs
//! from an exact syzygy by a multiple of t, so Z_k equals the image of the
//! exact syzygies from K on. The reported ell is the first k with
//! Z_k = Z_K, which makes the detection exact rather than a plateau guess.
//!
//! Two independent oracles accompany the algorithm: degreewise Smith-form
//! saturation, and Groebner t-saturation in Q[t, x].

use crate::dvrmod::{DVRSubmodule, DvrError, Membership};
use crate::groebner::{self, ebar_graded, EbarBasis, GradedEntry, GroebnerError};
use crate::qlinalg::{kernel_basis, Mat, RowSpace};
use crate::ringcore::{CoeffDomain, Ideal, Monomial, Poly, Rat, RingError, RingSpec, TRat};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SatError {
    #[error("generators must be homogeneous: offending generator {0}")]
    NotHomogeneous(String),
    #[error("generators must have regular coefficients: offending generator {0}")]
    NotRegular(String),
    #[error("the saturation ring must have DVR coefficients")]
    NotDvr,
    #[error("tuple class in Ebar is nonzero; the key lemma rewrite requires rho(tuple) = 0")]
    RhoNonzero,
    #[error("ideal is not saturated below degree {0}: saturate lower degrees first")]
    MissingLowerClosure(u64),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Dvr(#[from] DvrError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Finitely generated homogeneous ideal of R+ with regular coefficients.
/// Degree-zero generators are admitted so that the distinguished unit-ideal
/// outcome of `sat_leq_d` is reachable.
#[derive(Clone, Debug)]
pub struct GradedIdealPlus {
    ring: RingSpec,
    gens: Vec<Poly>,
}

impl GradedIdealPlus {
    pub fn new(ring: &RingSpec, gens: Vec<Poly>) -> Result<Self, SatError> {
        if ring.domain() != CoeffDomain::Dvr {
            return Err(SatError::NotDvr);
        }
        let mut kept = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            if g.ring() != ring {
                return Err(SatError::Ring(RingError::RingMismatch(
                    "generator from a different ring".into(),
                )));
            }
            if !g.is_homogeneous() {
                return Err(SatError::NotHomogeneous(crate::syntax::poly_to_string(&g)));
            }
            if !g.is_regular() {
                return Err(SatError::NotRegular(crate::syntax::poly_to_string(&g)));
            }
            kept.push(g);
        }
        Ok(GradedIdealPlus {
            ring: ring.clone(),
            gens: kept,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }
}

/// The degree-e piece of an ideal as a DVR-submodule of the free module on
/// the degree-e monomials, with the provenance of each module generator.
pub struct DegreeModule {
    pub ambient: Vec<Monomial>,
    pub module: DVRSubmodule,
    /// (generator index, multiplier monomial) per module generator column
    pub tags: Vec<(usize, Monomial)>,
}

/// Monomial multiples of the generators spanning degree e.
pub fn degree_module(ring: &RingSpec, gens: &[Poly], e: u64) -> Result<DegreeModule, SatError> {
    let ambient = ring.monomials_of_degree(e);
    let mut cols = Vec::new();
    let mut tags = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let Some(dg) = g.degree() else {
            return Err(SatError::NotHomogeneous(crate::syntax::poly_to_string(g)));
        };
        if dg > e {
            continue;
        }
        for m in ring.monomials_of_degree(e - dg) {
            let prod = g.mul_term(&m, &TRat::one())?;
            cols.push(prod.coeff_vector(&ambient));
            tags.push((i, m));
        }
    }
    let module = DVRSubmodule::new(ambient.len(), cols)?;
    Ok(DegreeModule {
        ambient,
        module,
        tags,
    })
}

/// Membership of a homogeneous f in the R+-ideal generated by homogeneous
/// gens, solved degreewise over the DVR. Returns the cofactor polynomial
/// per generator, or None.
pub fn ideal_membership_dvr(
    ring: &RingSpec,
    gens: &[Poly],
    f: &Poly,
) -> Result<Option<Vec<Poly>>, SatError> {
    if f.is_zero() {
        return Ok(Some(vec![Poly::zero(ring); gens.len()]));
    }
    let Some(e) = f.degree() else {
        return Err(SatError::NotHomogeneous(crate::syntax::poly_to_string(f)));
    };
    let dm = degree_module(ring, gens, e)?;
    match dm
        .module
        .membership_with_cofactors(&f.coeff_vector(&dm.ambient))?
    {
        Membership::NotMember { .. } => Ok(None),
        Membership::Member(scalars) => {
            let mut cof = vec![Poly::zero(ring); gens.len()];
            for ((i, m), c) in dm.tags.iter().zip(scalars.iter()) {
                if c.is_zero() {
                    continue;
                }
                let term = Poly::from_terms(ring, [(m.clone(), c.clone())])?;
                cof[*i] = cof[*i].add(&term)?;
            }
            Ok(Some(cof))
        }
    }
}

pub fn ideal_contains_dvr(ring: &RingSpec, gens: &[Poly], f: &Poly) -> Result<bool, SatError> {
    Ok(ideal_membership_dvr(ring, gens, f)?.is_some())
}

/// Mutual membership of two homogeneous generator lists.
pub fn ideals_agree_dvr(ring: &RingSpec, a: &[Poly], b: &[Poly]) -> Result<bool, SatError> {
    for g in a {
        if !ideal_contains_dvr(ring, b, g)? {
            return Ok(false);
        }
    }
    for g in b {
        if !ideal_contains_dvr(ring, a, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cofactor tuple (g_1, ..., g_r) with deg(g_i f_i) = d and
/// t^k | sum g_i f_i.
#[derive(Clone, Debug)]
pub struct CofactorTuple {
    pub entries: Vec<Poly>,
    pub target_degree: u64,
    pub t_order: u32,
}

impl CofactorTuple {
    pub fn new(
        gens: &[Poly],
        entries: Vec<Poly>,
        target_degree: u64,
        t_order: u32,
    ) -> Result<Self, SatError> {
        assert_eq!(entries.len(), gens.len());
        let mut sum = Poly::zero(gens[0].ring());
        for (e, g) in entries.iter().zip(gens.iter()) {
            if !e.is_regular() {
                return Err(SatError::NotRegular(crate::syntax::poly_to_string(e)));
            }
            if let (Some(de), Some(dg)) = (e.degree(), g.degree()) {
                if de + dg != target_degree {
                    return Err(SatError::Internal(format!(
                        "cofactor degree {de} does not complement generator degree {dg}"
                    )));
                }
            } else if !e.is_zero() {
                return Err(SatError::NotHomogeneous(crate::syntax::poly_to_string(e)));
            }
            sum = sum.add(&e.mul(g)?)?;
        }
        if let Some(v) = sum.t_valuation() {
            if v < t_order as i64 {
                return Err(SatError::Internal(format!(
                    "t^{t_order} does not divide the combination (valuation {v})"
                )));
            }
        }
        Ok(CofactorTuple {
            entries,
            target_degree,
            t_order,
        })
    }

    /// pi_k value: (sum entry_i f_i) / t^k, exact.
    pub fn pi(&self, gens: &[Poly]) -> Result<Poly, SatError> {
        let mut sum = Poly::zero(gens[0].ring());
        for (e, g) in self.entries.iter().zip(gens.iter()) {
            sum = sum.add(&e.mul(g)?)?;
        }
        Ok(sum.t_shift(-(self.t_order as i64))?)
    }
}

/// All per-degree data the saturation step needs: the degree module, the
/// space of syzygy generators of the mod-t images, and the X_k kernels.
pub struct DegreeContext {
    ring: RingSpec,
    gens: Vec<Poly>,
    d: u64,
    pub degree_module: DegreeModule,
    pub ebar: EbarBasis,
    cofactor_blocks: Vec<Vec<Monomial>>,
}

impl DegreeContext {
    pub fn new(ring: &RingSpec, gens: &[Poly], d: u64) -> Result<Self, SatError> {
        let dm = degree_module(ring, gens, d)?;
        let mut entries = Vec::with_capacity(gens.len());
        for g in gens {
            let deg = g
                .degree()
                .ok_or_else(|| SatError::NotHomogeneous(crate::syntax::poly_to_string(g)))?;
            entries.push(GradedEntry::new(g.eval_t0()?, deg)?);
        }
        let ring_q = ring.with_domain(CoeffDomain::FieldQ);
        let ebar = ebar_graded(&ring_q, &entries, d)?;
        let cofactor_blocks = gens
            .iter()
            .map(|g| {
                let dg = g.degree().expect("validated homogeneous");
                if dg > d {
                    Vec::new()
                } else {
                    ring.monomials_of_degree(d - dg)
                }
            })
            .collect();
        Ok(DegreeContext {
            ring: ring.clone(),
            gens: gens.to_vec(),
            d,
            degree_module: dm,
            ebar,
            cofactor_blocks,
        })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// Y_k = Sigma_k(I_d), directly from the Smith form of the degree
    /// module.
    pub fn yk(&self, k: u32) -> DVRSubmodule {
        self.degree_module.module.sigma_k(k)
    }

    /// Basis of X_k: the kernel of multiplication into the degree-d module
    /// with coefficients truncated mod t^k, lifted to polynomial-in-t
    /// representatives. The lifts are exact X_k members.
    pub fn xk_tuples(&self, k: u32) -> Result<Vec<CofactorTuple>, SatError> {
        let k = k as usize;
        let mut col_offsets = Vec::with_capacity(self.gens.len());
        let mut total_monos = 0usize;
        for block in &self.cofactor_blocks {
            col_offsets.push(total_monos);
            total_monos += block.len();
        }
        let rows = self.degree_module.ambient.len() * k;
        let cols = total_monos * k;
        let mut mat: Mat<Rat> = Mat::zeros(rows, cols);
        for (i, block) in self.cofactor_blocks.iter().enumerate() {
            for (b, m) in block.iter().enumerate() {
                let prod = self.gens[i].mul_term(m, &TRat::one())?;
                let coeffs = prod.coeff_vector(&self.degree_module.ambient);
                for (row_m, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let series = c.series_coeffs(k)?;
                    for j in 0..k {
                        let col = (col_offsets[i] + b) * k + j;
                        for s in j..k {
                            let v = &series[s - j];
                            if v.is_zero() {
                                continue;
                            }
                            let row = row_m * k + s;
                            let cur = mat.at(row, col).clone() + v;
                            mat.set(row, col, cur);
                        }
                    }
                }
            }
        }
        let kernel = kernel_basis(&mat);
        let mut out = Vec::with_capacity(kernel.len());
        for v in kernel {
            let mut entries = Vec::with_capacity(self.gens.len());
            for (i, block) in self.cofactor_blocks.iter().enumerate() {
                let mut terms = Vec::new();
                for (b, m) in block.iter().enumerate() {
                    let mut tp = Vec::with_capacity(k);
                    for j in 0..k {
                        tp.push(v[(col_offsets[i] + b) * k + j].clone());
                    }
                    let c = TRat::normalize(
                        crate::ringcore::TPoly::new(tp),
                        crate::ringcore::TPoly::one(),
                    )?;
                    if !c.is_zero() {
                        terms.push((m.clone(), c));
                    }
                }
                entries.push(Poly::from_terms(&self.ring, terms)?);
            }
            out.push(CofactorTuple::new(&self.gens, entries, self.d, k as u32)?);
        }
        Ok(out)
    }

    /// rho: class in Ebar of the mod-t part of a tuple.
    pub fn rho(&self, tuple: &CofactorTuple) -> Result<Vec<Rat>, SatError> {
        let t0: Vec<Poly> = tuple
            .entries
            .iter()
            .map(|e| e.eval_t0())
            .collect::<Result<_, _>>()?;
        Ok(self.ebar.project(&t0)?)
    }

    /// Z_k = rho(X_k), a canonical subspace of Ebar.
    pub fn zk(&self, k: u32) -> Result<RowSpace<Rat>, SatError> {
        let tuples = self.xk_tuples(k)?;
        let mut vectors = Vec::with_capacity(tuples.len());
        for t in &tuples {
            vectors.push(self.rho(t)?);
        }
        Ok(RowSpace::from_spanning(self.ebar.dim(), &vectors))
    }

    /// Index K by which the Z-chain provably equals its limit.
    pub fn stable_bound(&self) -> u32 {
        self.degree_module.module.smith().max_divisor() + 1
    }

    /// The Z-chain Z_1, ..., Z_{ell+1} and the stabilization index ell:
    /// the first k with Z_k equal to the certified limit Z_K.
    pub fn z_chain(&self) -> Result<(Vec<RowSpace<Rat>>, usize), SatError> {
        let k_max = self.stable_bound();
        let mut chain = Vec::with_capacity(k_max as usize + 1);
        for k in 1..=k_max {
            chain.push(self.zk(k)?);
        }
        let limit = chain.last().expect("k_max >= 1").clone();
        let ell = chain
            .iter()
            .position(|z| *z == limit)
            .expect("the limit itself is in the chain")
            + 1;
        if chain.len() == ell {
            chain.push(self.zk(k_max + 1)?);
        } else {
            chain.truncate(ell + 1);
        }
        if chain[ell - 1] != chain[ell] {
            return Err(SatError::Internal(
                "Z-chain not stable at the certified index".into(),
            ));
        }
        Ok((chain, ell))
    }

    /// Lifts of a DVR-generating set of the saturated degree piece modulo
    /// I_d: the Smith columns with positive divisors. Their mod-t images
    /// are linearly independent modulo the mod-t image of I_d.
    pub fn new_generators(&self) -> Result<Vec<Poly>, SatError> {
        let smith = self.degree_module.module.smith();
        let mut out = Vec::new();
        for (i, &a) in smith.divisors.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let col = smith.u_inv.column(i);
            out.push(Poly::from_coeff_vector(
                &self.ring,
                &self.degree_module.ambient,
                &col,
            )?);
        }
        Ok(out)
    }
}

/// Y_k at degree d: the submodule { g : t^k g in I_d }.
pub fn yk_space(ideal: &GradedIdealPlus, d: u64, k: u32) -> Result<DVRSubmodule, SatError> {
    Ok(degree_module(ideal.ring(), ideal.gens(), d)?
        .module
        .sigma_k(k))
}

/// Z_k at degree d for the ideal's generators.
pub fn zk_space(ideal: &GradedIdealPlus, d: u64, k: u32) -> Result<RowSpace<Rat>, SatError> {
    DegreeContext::new(ideal.ring(), ideal.gens(), d)?.zk(k)
}

/// Rewrites a tuple with rho(tuple) = 0 into one of t-order k-1 with the
/// same pi value, following the constructive key-lemma proof: express the
/// mod-t class over lower-degree syzygies, divide their combinations by t
/// (they land in the ideal when lower degrees are saturated), and absorb
/// the quotients into the cofactors.
pub fn key_lemma_rewrite(
    tuple: &CofactorTuple,
    ctx: &DegreeContext,
) -> Result<CofactorTuple, SatError> {
    assert!(tuple.t_order >= 1);
    let class = ctx.rho(tuple)?;
    if class.iter().any(|c| !c.is_zero()) {
        return Err(SatError::RhoNonzero);
    }
    let ring = &ctx.ring;
    let t0: Vec<Poly> = tuple
        .entries
        .iter()
        .map(|e| e.eval_t0())
        .collect::<Result<_, _>>()?;
    // split off the components with monomials outside the restricted
    // variable set: grouped by outside monomial x^e, each residual tuple is
    // itself a syzygy of the mod-t generators (of degree d - deg x^e), so
    // x^e times it joins the lower-syzygy expansion directly
    let vars = ctx.ebar.restricted_vars().clone();
    let ring_q = ring.with_domain(CoeffDomain::FieldQ);
    let mut outside: std::collections::BTreeMap<Monomial, Vec<Poly>> =
        std::collections::BTreeMap::new();
    let mut inside: Vec<Poly> = vec![Poly::zero(&ring_q); t0.len()];
    for (j, p) in t0.iter().enumerate() {
        for (m, cf) in p.terms() {
            let out_mono =
                Monomial::from_exponents(m.exponents().filter(|(v, _)| !vars.contains(v)));
            let in_mono =
                Monomial::from_exponents(m.exponents().filter(|(v, _)| vars.contains(v)));
            let term = Poly::from_terms(&ring_q, [(in_mono, cf.clone())])?;
            if out_mono.is_one() {
                inside[j] = inside[j].add(&term)?;
            } else {
                let slot = outside
                    .entry(out_mono)
                    .or_insert_with(|| vec![Poly::zero(&ring_q); t0.len()]);
                slot[j] = slot[j].add(&term)?;
            }
        }
    }
    let mut expansion = ctx
        .ebar
        .express_over_lower(&inside)
        .map_err(|_| SatError::RhoNonzero)?;
    for (m, w) in outside {
        let b = Poly::from_terms(&ring_q, [(m, TRat::one())])?;
        expansion.push((b, w));
    }
    // c_j accumulates the replacement cofactors from each lower syzygy
    let mut c = vec![Poly::zero(ring); ctx.gens.len()];
    for (b, w) in expansion {
        // q = (sum_j w_j f_j) / t, a saturated element of lower degree
        let mut sum = Poly::zero(ring);
        for (wj, g) in w.iter().zip(ctx.gens.iter()) {
            sum = sum.add(&wj.cast_domain(CoeffDomain::Dvr)?.mul(g)?)?;
        }
        if sum.is_zero() {
            continue;
        }
        let q = sum.t_shift(-1)?;
        let q_deg = q.degree().ok_or_else(|| {
            SatError::Internal("lower-degree combination is not homogeneous".into())
        })?;
        let cof = ideal_membership_dvr(ring, &ctx.gens, &q)?
            .ok_or(SatError::MissingLowerClosure(q_deg))?;
        let b_dvr = b.cast_domain(CoeffDomain::Dvr)?;
        for (cj, qj) in c.iter_mut().zip(cof.iter()) {
            *cj = cj.add(&b_dvr.mul(qj)?)?;
        }
    }
    // h_j = g_j' + c_j where g_j = g_j(0) + t g_j'
    let mut entries = Vec::with_capacity(tuple.entries.len());
    for ((e, e0), cj) in tuple.entries.iter().zip(t0.iter()).zip(c.iter()) {
        let tail = e.sub(&e0.cast_domain(CoeffDomain::Dvr)?)?.t_shift(-1)?;
        entries.push(tail.add(cj)?);
    }
    CofactorTuple::new(&ctx.gens, entries, tuple.target_degree, tuple.t_order - 1)
}

/// Full transcript of one degree of a saturation run.
#[derive(Clone, Debug)]
pub struct SatTrace {
    pub degree: u64,
    pub ebar_dim: usize,
    /// Z_1, ..., Z_{ell+1}
    pub z_chain: Vec<RowSpace<Rat>>,
    pub ell: usize,
    pub y_ell: DVRSubmodule,
    pub new_gens: Vec<Poly>,
}

impl SatTrace {
    /// Dimensions of Z_1..Z_ell, the serialized form of the chain.
    pub fn z_dims(&self) -> Vec<usize> {
        self.z_chain[..self.ell].iter().map(|z| z.dim()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SatResult {
    pub gens: Vec<Poly>,
    pub traces: Vec<SatTrace>,
}

#[derive(Clone, Debug)]
pub enum SatOutcome {
    Saturated(SatResult),
    /// A degree-zero generator makes 1 a saturated element.
    UnitIdeal { witness: Poly },
}

impl SatOutcome {
    pub fn expect_saturated(self) -> SatResult {
        match self {
            SatOutcome::Saturated(r) => r,
            SatOutcome::UnitIdeal { .. } => panic!("unexpected unit ideal"),
        }
    }
}

/// Drop generators that lie in the ideal of the others, scanning from the
/// last to the first so later (saturated) generators absorb earlier ones.
fn prune_generators(ring: &RingSpec, gens: Vec<Poly>) -> Result<Vec<Poly>, SatError> {
    let mut kept = gens;
    let mut i = kept.len();
    while i > 0 {
        i -= 1;
        let candidate = kept[i].clone();
        let others: Vec<Poly> = kept
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        if !others.is_empty() && ideal_contains_dvr(ring, &others, &candidate)? {
            kept.remove(i);
        }
    }
    Ok(kept)
}

/// Sat_{<= d}(I): iterate degrees 0..=d, at each degree compute the
/// Z-chain, its stabilization index, Y_ell, and adjoin lifts of a
/// generating set of Y_ell modulo the running degree piece.
pub fn sat_leq_d(ideal: &GradedIdealPlus, d: u64) -> Result<SatOutcome, SatError> {
    for g in ideal.gens() {
        if g.degree() == Some(0) {
            return Ok(SatOutcome::UnitIdeal { witness: g.clone() });
        }
    }
    let ring = ideal.ring();
    let mut gens = ideal.gens().to_vec();
    let mut traces = Vec::new();
    for e in 0..=d {
        let ctx = DegreeContext::new(ring, &gens, e)?;
        let (z_chain, ell) = ctx.z_chain()?;
        let y_ell = ctx.yk(ell as u32);
        debug_assert!(
            y_ell
                .eq_module(&ctx.degree_module.module.saturate())
                .unwrap_or(false),
            "Y_ell must be the saturated degree piece"
        );
        let new_gens = ctx.new_generators()?;
        traces.push(SatTrace {
            degree: e,
            ebar_dim: ctx.ebar.dim(),
            z_chain,
            ell,
            y_ell,
            new_gens: new_gens.clone(),
        });
        gens.extend(new_gens);
    }
    let gens = prune_generators(ring, gens)?;
    Ok(SatOutcome::Saturated(SatResult { gens, traces }))
}

/// Generator lists from the two independent routes.
pub struct SatOracle {
    pub route_a: Vec<Poly>,
    pub route_b: Vec<Poly>,
}

/// Route A: per-degree Smith saturation of the original degree pieces.
/// Route B: clear to Q[t, x], saturate by t with Groebner bases, re-read
/// the generators of x-degree <= d.
pub fn sat_oracle(ideal: &GradedIdealPlus, d: u64) -> Result<SatOracle, SatError> {
    let ring = ideal.ring();
    // route A
    let mut route_a = ideal.gens().to_vec();
    for e in 0..=d {
        let dm = degree_module(ring, ideal.gens(), e)?;
        let smith = dm.module.smith();
        for (i, &a) in smith.divisors.iter().enumerate() {
            if a == 0 {
                continue;
            }
            route_a.push(Poly::from_coeff_vector(
                ring,
                &dm.ambient,
                &smith.u_inv.column(i),
            )?);
        }
    }
    // route B
    let poly_ring = t_adjoined_ring(ring);
    let t_var = Poly::var(&poly_ring, ring.nvars()).expect("t variable");
    let mut gens_poly = Vec::new();
    for g in ideal.gens() {
        gens_poly.push(to_t_polynomial(&poly_ring, g)?);
    }
    let j = Ideal::new(&poly_ring, gens_poly)?;
    let saturated = groebner::saturate_by(&j, &t_var)?;
    let mut route_b = ideal.gens().to_vec();
    for g in saturated.gens() {
        for comp in x_homogeneous_components(ring, g)? {
            if comp.degree().map_or(false, |deg| deg <= d) {
                route_b.push(comp);
            }
        }
    }
    Ok(SatOracle { route_a, route_b })
}

/// Q[x_1..x_n, t] with t as the last variable, FieldQ coefficients.
pub fn t_adjoined_ring(ring: &RingSpec) -> RingSpec {
    let mut weights = ring.weights().to_vec();
    weights.push(1);
    RingSpec::weighted(weights, CoeffDomain::FieldQ).expect("positive weights")
}

/// Clear coefficient denominators (units of the DVR) and rewrite t as the
/// last polynomial variable.
pub fn to_t_polynomial(poly_ring: &RingSpec, g: &Poly) -> Result<Poly, SatError> {
    let n = g.ring().nvars();
    // lcm of the denominator polynomials; a unit of the DVR
    let mut lcm = crate::ringcore::TPoly::one();
    for (_, c) in g.terms() {
        if c.is_zero() {
            continue;
        }
        let den = c.den();
        let gcd = lcm.gcd(den);
        lcm = lcm.mul(den).divrem(&gcd)?.0;
    }
    let scale = TRat::normalize(lcm, crate::ringcore::TPoly::one())?;
    let cleared = g.scaled(&scale)?;
    let mut terms = Vec::new();
    for (m, c) in cleared.terms() {
        let v = c.valuation().expect("nonzero term") as u32;
        debug_assert!(c.den().is_one(), "denominators cleared");
        for (j, coeff) in c.num().coeffs().iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let mono = m.mul(&Monomial::from_exponents([(n, v + j as u32)]));
            terms.push((mono, TRat::from_rat(coeff.clone())));
        }
    }
    Ok(Poly::from_terms(poly_ring, terms)?)
}

/// Split a Q[t, x] polynomial into x-homogeneous components and read each
/// back over the DVR coefficient ring.
pub fn x_homogeneous_components(ring: &RingSpec, g: &Poly) -> Result<Vec<Poly>, SatError> {
    let n = ring.nvars();
    let mut by_degree: std::collections::BTreeMap<u64, Vec<(Monomial, TRat)>> =
        std::collections::BTreeMap::new();
    for (m, c) in g.terms() {
        let tpow = m.exponent(n);
        let xmono = Monomial::from_exponents(m.exponents().filter(|&(v, _)| v < n));
        let xdeg = xmono.weighted_degree(ring.weights());
        by_degree
            .entry(xdeg)
            .or_default()
            .push((xmono, c.mul(&TRat::t_power(tpow as i64))));
    }
    by_degree
        .into_values()
        .map(|terms| Poly::from_terms(ring, terms).map_err(Into::into))
        .collect()
}

/// Agreement of `sat_leq_d` with both oracle routes by mutual ideal
/// membership.
pub fn oracle_agreement(
    ideal: &GradedIdealPlus,
    sat_gens: &[Poly],
    oracle: &SatOracle,
) -> Result<bool, SatError> {
    let ring = ideal.ring();
    Ok(ideals_agree_dvr(ring, sat_gens, &oracle.route_a)?
        && ideals_agree_dvr(ring, sat_gens, &oracle.route_b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dvr_ring(n: usize) -> RingSpec {
        RingSpec::standard(n, CoeffDomain::Dvr)
    }

    fn x(r: &RingSpec, i: usize) -> Poly {
        Poly::var(r, i).unwrap()
    }

    fn worked_ideal() -> (RingSpec, GradedIdealPlus) {
        // I = (x, x + t^2 y) in two variables
        let r = dvr_ring(2);
        let g1 = x(&r, 0);
        let g2 = x(&r, 0)
            .add(&x(&r, 1).scaled(&TRat::t_power(2)).unwrap())
            .unwrap();
        let i = GradedIdealPlus::new(&r, vec![g1, g2]).unwrap();
        (r, i)
    }

    #[test]
    fn yk_spaces_of_worked_example() {
        let (_r, i) = worked_ideal();
        // k = 0: the degree piece itself, span(x, t^2 y)
        let y0 = yk_space(&i, 1, 0).unwrap();
        let expect = DVRSubmodule::new(
            2,
            vec![
                vec![TRat::one(), TRat::zero()],
                vec![TRat::zero(), TRat::t_power(2)],
            ],
        )
        .unwrap();
        assert!(y0.eq_module(&expect).unwrap());
        // k = 2: span(x, y)
        let y2 = yk_space(&i, 1, 2).unwrap();
        let full = DVRSubmodule::new(
            2,
            vec![
                vec![TRat::one(), TRat::zero()],
                vec![TRat::zero(), TRat::one()],
            ],
        )
        .unwrap();
        assert!(y2.eq_module(&full).unwrap());
    }

    #[test]
    fn yk_of_principal_t_multiple() {
        // I = (t x), degree 1, k = 1 -> span(x)
        let r = dvr_ring(1);
        let i =
            GradedIdealPlus::new(&r, vec![x(&r, 0).scaled(&TRat::t_power(1)).unwrap()]).unwrap();
        let y = yk_space(&i, 1, 1).unwrap();
        let expect = DVRSubmodule::new(1, vec![vec![TRat::one()]]).unwrap();
        assert!(y.eq_module(&expect).unwrap());
    }

    #[test]
    fn z_chain_of_worked_example() {
        let (r, i) = worked_ideal();
        let ctx = DegreeContext::new(&r, i.gens(), 1).unwrap();
        assert_eq!(ctx.ebar.dim(), 1);
        let (chain, ell) = ctx.z_chain().unwrap();
        assert_eq!(ell, 3);
        let dims: Vec<usize> = chain.iter().map(|z| z.dim()).collect();
        assert_eq!(dims, vec![1, 1, 0, 0]);
    }

    #[test]
    fn z_chain_with_zero_fiber_generator() {
        // I = (t x): f(0) = 0, the full tuple space maps onto Ebar at k=1,
        // and the chain drops to zero at k=2.
        let r = dvr_ring(1);
        let i =
            GradedIdealPlus::new(&r, vec![x(&r, 0).scaled(&TRat::t_power(1)).unwrap()]).unwrap();
        let ctx = DegreeContext::new(&r, i.gens(), 1).unwrap();
        assert_eq!(ctx.ebar.dim(), 1);
        assert_eq!(ctx.zk(1).unwrap().dim(), 1);
        assert_eq!(ctx.zk(2).unwrap().dim(), 0);
        let (_, ell) = ctx.z_chain().unwrap();
        assert_eq!(ell, 2);
    }

    #[test]
    fn z_zero_when_generators_are_t_free() {
        let r = dvr_ring(2);
        let i = GradedIdealPlus::new(&r, vec![x(&r, 0), x(&r, 1)]).unwrap();
        let ctx = DegreeContext::new(&r, i.gens(), 1).unwrap();
        // no degree-1 syzygies here, so Ebar = 0 and Z_k = 0
        assert_eq!(ctx.ebar.dim(), 0);
        let (chain, ell) = ctx.z_chain().unwrap();
        assert_eq!(ell, 1);
        assert!(chain.iter().all(|z| z.dim() == 0));
    }

    #[test]
    fn key_lemma_rewrite_worked_case() {
        // tuple (t, -t) at k = 2 rewrites to (1, -1) at k = 1 with equal pi
        let (r, i) = worked_ideal();
        let ctx = DegreeContext::new(&r, i.gens(), 1).unwrap();
        let t = TRat::t_power(1);
        let entries = vec![
            Poly::constant(&r, t.clone()).unwrap(),
            Poly::constant(&r, t.neg()).unwrap(),
        ];
        let tuple = CofactorTuple::new(i.gens(), entries, 1, 2).unwrap();
        let pi_before = tuple.pi(i.gens()).unwrap();
        let rewritten = key_lemma_rewrite(&tuple, &ctx).unwrap();
        assert_eq!(rewritten.t_order, 1);
        let pi_after = rewritten.pi(i.gens()).unwrap();
        assert_eq!(pi_before, pi_after);
        let one = Poly::one(&r);
        assert_eq!(rewritten.entries, vec![one.clone(), one.neg()]);
        // pi value is -t y
        let expect = x(&r, 1).scaled(&TRat::t_power(1).neg()).unwrap();
        assert_eq!(pi_after, expect);
    }

    #[test]
    fn key_lemma_rejects_nonzero_class() {
        let (r, i) = worked_ideal();
        let ctx = DegreeContext::new(&r, i.gens(), 1).unwrap();
        let one = Poly::one(&r);
        // (1, -1) is in X_2 with nonzero class in Ebar
        let tuple = CofactorTuple::new(i.gens(), vec![one.clone(), one.neg()], 1, 2).unwrap();
        assert!(matches!(
            key_lemma_rewrite(&tuple, &ctx),
            Err(SatError::RhoNonzero)
        ));
    }

    #[test]
    fn key_lemma_zero_sum_tuple() {
        // an exact syzygy rewrites to pi value 0
        let r = dvr_ring(2);
        let i = GradedIdealPlus::new(&r, vec![x(&r, 0), x(&r, 0)]).unwrap();
        let ctx = DegreeContext::new(&r, i.gens(), 2).unwrap();
        let e = x(&r, 1).scaled(&TRat::t_power(1)).unwrap();
        let tuple = CofactorTuple::new(i.gens(), vec![e.clone(), e.neg()], 2, 3).unwrap();
        let rewritten = key_lemma_rewrite(&tuple, &ctx).unwrap();
        assert!(rewritten.pi(i.gens()).unwrap().is_zero());
    }

    #[test]
    fn sat_divides_out_t() {
        // I = (t x), d = 1 -> (x)
        let r = dvr_ring(1);
        let i =
            GradedIdealPlus::new(&r, vec![x(&r, 0).scaled(&TRat::t_power(1)).unwrap()]).unwrap();
        let res = sat_leq_d(&i, 1).unwrap().expect_saturated();
        assert_eq!(res.gens, vec![x(&r, 0)]);
    }

    #[test]
    fn sat_worked_example_full() {
        let (r, i) = worked_ideal();
        let res = sat_leq_d(&i, 1).unwrap().expect_saturated();
        assert_eq!(res.gens, vec![x(&r, 0), x(&r, 1)]);
        let trace = &res.traces[1];
        assert_eq!(trace.degree, 1);
        assert_eq!(trace.ell, 3);
        assert_eq!(trace.z_dims(), vec![1, 1, 0]);
        assert_eq!(trace.ebar_dim, 1);
    }

    #[test]
    fn sat_already_saturated() {
        // I = (x^2 + t y^2) is saturated in degree <= 2
        let r = dvr_ring(2);
        let g = x(&r, 0)
            .mul(&x(&r, 0))
            .unwrap()
            .add(
                &x(&r, 1)
                    .mul(&x(&r, 1))
                    .unwrap()
                    .scaled(&TRat::t_power(1))
                    .unwrap(),
            )
            .unwrap();
        let i = GradedIdealPlus::new(&r, vec![g.clone()]).unwrap();
        let res = sat_leq_d(&i, 2).unwrap().expect_saturated();
        assert_eq!(res.gens, vec![g]);
        assert!(res.traces.iter().all(|t| t.new_gens.is_empty()));
    }

    #[test]
    fn sat_unit_ideal_outcome() {
        let r = dvr_ring(1);
        let c = Poly::constant(&r, TRat::t_power(2)).unwrap();
        let i = GradedIdealPlus::new(&r, vec![c]).unwrap();
        assert!(matches!(
            sat_leq_d(&i, 1).unwrap(),
            SatOutcome::UnitIdeal { .. }
        ));
    }

    #[test]
    fn oracle_routes_agree_on_worked_examples() {
        let (_r, i) = worked_ideal();
        let res = sat_leq_d(&i, 1).unwrap().expect_saturated();
        let oracle = sat_oracle(&i, 1).unwrap();
        assert!(oracle_agreement(&i, &res.gens, &oracle).unwrap());

        let r1 = dvr_ring(1);
        let i1 = GradedIdealPlus::new(&r1, vec![x(&r1, 0).scaled(&TRat::t_power(1)).unwrap()])
            .unwrap();
        let res1 = sat_leq_d(&i1, 1).unwrap().expect_saturated();
        let o1 = sat_oracle(&i1, 1).unwrap();
        assert!(oracle_agreement(&i1, &res1.gens, &o1).unwrap());

        let r2 = dvr_ring(2);
        let g = x(&r2, 0)
            .mul(&x(&r2, 0))
            .unwrap()
            .add(
                &x(&r2, 1)
                    .mul(&x(&r2, 1))
                    .unwrap()
                    .scaled(&TRat::t_power(1))
                    .unwrap(),
            )
            .unwrap();
        let i2 = GradedIdealPlus::new(&r2, vec![g]).unwrap();
        let res2 = sat_leq_d(&i2, 2).unwrap().expect_saturated();
        let o2 = sat_oracle(&i2, 2).unwrap();
        assert!(oracle_agreement(&i2, &res2.gens, &o2).unwrap());
    }

    #[test]
    fn membership_with_denominator_coefficients() {
        let r = dvr_ring(2);
        let u = TRat::one().div(&TRat::one().add(&TRat::t_power(1))).unwrap();
        let g = x(&r, 0).scaled(&u).unwrap();
        // (1/(1+t)) x generates the same degree piece as x
        assert!(ideal_contains_dvr(&r, &[g.clone()], &x(&r, 0)).unwrap());
        let t_poly = to_t_polynomial(&t_adjoined_ring(&r), &g).unwrap();
        assert!(t_poly.is_regular());
        assert_eq!(t_poly.coeff(&Monomial::var(0)), TRat::one());
    }

    #[test]
    fn degree_zero_in_x_generators_work_in_membership() {
        // t x lies in (t, x^2) via the constant generator t
        let r = dvr_ring(1);
        let t_gen = Poly::constant(&r, TRat::t_power(1)).unwrap();
        let x2 = x(&r, 0).mul(&x(&r, 0)).unwrap();
        let f = x(&r, 0).scaled(&TRat::t_power(1)).unwrap();
        assert!(ideal_contains_dvr(&r, &[t_gen, x2], &f).unwrap());
    }

    #[test]
    fn trace_invariants_on_worked_example() {
        let (r, i) = worked_ideal();
        let res = sat_leq_d(&i, 1).unwrap().expect_saturated();
        for trace in &res.traces {
            for w in trace.z_chain.windows(2) {
                assert!(w[1].is_subspace_of(&w[0]), "Z-chain must descend");
            }
            assert_eq!(trace.z_chain[trace.ell - 1], trace.z_chain[trace.ell]);
            let ctx = DegreeContext::new(&r, i.gens(), trace.degree).unwrap();
            for g in &trace.new_gens {
                let v = g.coeff_vector(&ctx.degree_module.ambient);
                assert!(trace.y_ell.contains(&v).unwrap());
            }
        }
    }
}
