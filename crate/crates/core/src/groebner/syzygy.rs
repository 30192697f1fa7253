//! Degree-bounded syzygy spaces via Macaulay multiplication matrices, and
//! the space of degree-d syzygy generators E_d / (E_d n S_+ E).
//!
//! Entries may carry a nominal degree with a zero polynomial (a generator
//! whose mod-t image vanishes): the corresponding tuple coordinate is then
//! unconstrained and contributes free kernel coordinates.
//!
//! All computations restrict to the variables appearing in the nonzero
//! entries; the induced map on generator spaces is an isomorphism, so
//! dimensions are unchanged by unused variables.

use super::GroebnerError;
use crate::qlinalg::{kernel_basis, solve, Mat, RowSpace};
use crate::ringcore::{CoeffDomain, Monomial, Poly, Rat, RingSpec};
use num_traits::Zero;
use std::collections::BTreeSet;

/// A polynomial over FieldQ together with its nominal weighted degree.
/// For nonzero entries the nominal degree must match the actual degree.
#[derive(Clone, Debug)]
pub struct GradedEntry {
    pub poly: Poly,
    pub degree: u64,
}

impl GradedEntry {
    pub fn new(poly: Poly, degree: u64) -> Result<Self, GroebnerError> {
        if let Some(d) = poly.degree() {
            if d != degree {
                return Err(GroebnerError::Invalid(format!(
                    "nominal degree {degree} does not match actual degree {d}"
                )));
            }
        } else if !poly.is_zero() {
            return Err(GroebnerError::Invalid(
                "syzygy entries must be homogeneous".into(),
            ));
        }
        Ok(GradedEntry { poly, degree })
    }
}

/// Basis of the degree-d piece of the syzygy module of `flist`.
#[derive(Clone, Debug)]
pub struct SyzygyPiece {
    pub flist: Vec<Poly>,
    pub d: u64,
    pub basis: Vec<Vec<Poly>>,
}

fn restricted_monomials(ring: &RingSpec, degree: u64, vars: &BTreeSet<usize>) -> Vec<Monomial> {
    ring.monomials_of_degree(degree)
        .into_iter()
        .filter(|m| m.exponents().all(|(v, _)| vars.contains(&v)))
        .collect()
}

fn rat_coeff(p: &Poly, m: &Monomial) -> Rat {
    p.coeff(m).as_rational().expect("FieldQ coefficient")
}

/// Column layout of the cofactor space: per entry, the list of admissible
/// cofactor monomials.
#[derive(Clone, Debug)]
struct CofactorLayout {
    blocks: Vec<Vec<Monomial>>,
    offsets: Vec<usize>,
    total: usize,
}

impl CofactorLayout {
    fn new(ring: &RingSpec, entries: &[GradedEntry], d: u64, vars: &BTreeSet<usize>) -> Self {
        let mut blocks = Vec::with_capacity(entries.len());
        for e in entries {
            if e.degree > d {
                blocks.push(Vec::new());
            } else {
                blocks.push(restricted_monomials(ring, d - e.degree, vars));
            }
        }
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut total = 0;
        for b in &blocks {
            offsets.push(total);
            total += b.len();
        }
        CofactorLayout {
            blocks,
            offsets,
            total,
        }
    }

    fn tuple_from_vector(&self, ring: &RingSpec, v: &[Rat]) -> Vec<Poly> {
        self.blocks
            .iter()
            .zip(self.offsets.iter())
            .map(|(monos, &off)| {
                Poly::from_terms(
                    ring,
                    monos.iter().enumerate().map(|(k, m)| {
                        (m.clone(), crate::ringcore::TRat::from_rat(v[off + k].clone()))
                    }),
                )
                .expect("FieldQ tuple entry")
            })
            .collect()
    }

    fn vector_from_tuple(&self, tuple: &[Poly]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.total];
        for (i, (monos, &off)) in self.blocks.iter().zip(self.offsets.iter()).enumerate() {
            for (k, m) in monos.iter().enumerate() {
                v[off + k] = rat_coeff(&tuple[i], m);
            }
        }
        v
    }
}

/// Kernel of the multiplication map Pi_i S_{d - deg f_i} -> S_d restricted
/// to the given variables.
fn macaulay_kernel(
    ring: &RingSpec,
    entries: &[GradedEntry],
    d: u64,
    vars: &BTreeSet<usize>,
) -> (CofactorLayout, Vec<Vec<Rat>>) {
    let layout = CofactorLayout::new(ring, entries, d, vars);
    let rows_monos = restricted_monomials(ring, d, vars);
    let mut mat: Mat<Rat> = Mat::zeros(rows_monos.len(), layout.total);
    for (i, e) in entries.iter().enumerate() {
        if e.poly.is_zero() {
            continue;
        }
        for (k, m) in layout.blocks[i].iter().enumerate() {
            let col = layout.offsets[i] + k;
            for (fm, fc) in e.poly.terms() {
                let prod = m.mul(fm);
                // rows are sorted descending under grevlex
                if let Ok(row) = rows_monos.binary_search_by(|probe| {
                    super::MonomialOrder::WeightedGrevlex.cmp(ring.weights(), &prod, probe)
                }) {
                    let c = fc.as_rational().expect("FieldQ coefficient");
                    let v = mat.at(row, col).clone() + c;
                    mat.set(row, col, v);
                }
            }
        }
    }
    let kernel = kernel_basis(&mat);
    (layout, kernel)
}

/// Q-basis of the degree-d syzygies of homogeneous positive-degree
/// polynomials over Q, via the Macaulay multiplication matrix.
pub fn syzygy_space(flist: &[Poly], d: u64) -> Result<SyzygyPiece, GroebnerError> {
    let entries = validate_flist(flist, true)?;
    let ring = flist[0].ring().clone();
    Ok(syzygy_graded(&ring, &entries, d))
}

/// As `syzygy_space` but allowing zero entries with nominal degrees.
pub fn syzygy_graded(ring: &RingSpec, entries: &[GradedEntry], d: u64) -> SyzygyPiece {
    let vars: BTreeSet<usize> = (0..ring.nvars()).collect();
    let (layout, kernel) = macaulay_kernel(ring, entries, d, &vars);
    SyzygyPiece {
        flist: entries.iter().map(|e| e.poly.clone()).collect(),
        d,
        basis: kernel
            .iter()
            .map(|v| layout.tuple_from_vector(ring, v))
            .collect(),
    }
}

fn validate_flist(flist: &[Poly], require_positive: bool) -> Result<Vec<GradedEntry>, GroebnerError> {
    if flist.is_empty() {
        return Err(GroebnerError::Invalid("empty generator list".into()));
    }
    let ring = flist[0].ring().clone();
    if ring.domain() != CoeffDomain::FieldQ {
        return Err(GroebnerError::Invalid(
            "syzygy computations run over FieldQ".into(),
        ));
    }
    let mut out = Vec::with_capacity(flist.len());
    for f in flist {
        if f.ring() != &ring {
            return Err(GroebnerError::Invalid("mixed rings".into()));
        }
        let d = f.degree().ok_or_else(|| {
            GroebnerError::Invalid("syzygy entries must be nonzero and homogeneous".into())
        })?;
        if require_positive && d == 0 {
            return Err(GroebnerError::Invalid(
                "syzygy entries must have positive degree".into(),
            ));
        }
        out.push(GradedEntry::new(f.clone(), d)?);
    }
    Ok(out)
}

/// The space of degree-d generators Ebar = E_d / (E_d n S_+ E), with
/// representative tuples and a projection from E_d.
#[derive(Clone, Debug)]
pub struct EbarBasis {
    ring: RingSpec,
    entries: Vec<GradedEntry>,
    d: u64,
    vars: BTreeSet<usize>,
    layout: CofactorLayout,
    /// spanning rows of E_d n S_+ E in cofactor coordinates
    lower_span: RowSpace<Rat>,
    /// representative vectors extending lower_span to a basis of E_d
    reps: Vec<Vec<Rat>>,
    /// columns = [lower_span basis | reps]; used to solve for classes
    solve_mat: Mat<Rat>,
}

impl EbarBasis {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Variables appearing in the nonzero mod-t generators; everything is
    /// computed inside this set.
    pub fn restricted_vars(&self) -> &BTreeSet<usize> {
        &self.vars
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Representative tuples in E_d, one per basis class.
    pub fn representatives(&self) -> Vec<Vec<Poly>> {
        self.reps
            .iter()
            .map(|v| self.layout.tuple_from_vector(&self.ring, v))
            .collect()
    }

    /// Class in Ebar of a degree-d syzygy tuple of the mod-t generators.
    /// Monomials outside the restricted variable set are projected away.
    pub fn project(&self, tuple: &[Poly]) -> Result<Vec<Rat>, GroebnerError> {
        assert_eq!(tuple.len(), self.entries.len());
        let vec = self.layout.vector_from_tuple(tuple);
        if self.solve_mat.cols == 0 {
            if vec.iter().all(|c| c.is_zero()) {
                return Ok(Vec::new());
            }
            return Err(GroebnerError::Invalid(
                "tuple is not a syzygy of the mod-t generators".into(),
            ));
        }
        let gamma = solve(&self.solve_mat, &vec).ok_or_else(|| {
            GroebnerError::Invalid("tuple is not a syzygy of the mod-t generators".into())
        })?;
        Ok(gamma[self.lower_span.dim()..].to_vec())
    }

    /// Express a tuple of E_d n S_+ E over the lower-degree spanning set;
    /// returns pairs (monomial multiplier with coefficient, lower tuple).
    /// Errors when the class of the tuple in Ebar is nonzero.
    pub fn express_over_lower(
        &self,
        tuple: &[Poly],
    ) -> Result<Vec<(Poly, Vec<Poly>)>, GroebnerError> {
        let vec = self.layout.vector_from_tuple(tuple);
        let (mat, tags) = self.lower_products();
        if tags.is_empty() {
            if vec.iter().all(|c| c.is_zero()) {
                return Ok(Vec::new());
            }
            return Err(GroebnerError::Invalid(
                "tuple has a nonzero class in Ebar".into(),
            ));
        }
        let coeffs = solve(&mat, &vec).ok_or_else(|| {
            GroebnerError::Invalid("tuple has a nonzero class in Ebar".into())
        })?;
        let mut out = Vec::new();
        for (c, (m, lower)) in coeffs.into_iter().zip(tags.into_iter()) {
            if c.is_zero() {
                continue;
            }
            let b = Poly::from_terms(&self.ring, [(m, crate::ringcore::TRat::from_rat(c))])
                .expect("FieldQ multiplier");
            out.push((b, lower));
        }
        Ok(out)
    }

    /// The S_+ E spanning products in degree d: columns tagged with their
    /// (monomial, lower-degree tuple) provenance.
    fn lower_products(&self) -> (Mat<Rat>, Vec<(Monomial, Vec<Poly>)>) {
        let mut cols: Vec<Vec<Rat>> = Vec::new();
        let mut tags = Vec::new();
        for e in 0..self.d {
            let piece = syzygy_lower(&self.ring, &self.entries, e, &self.vars);
            if piece.is_empty() {
                continue;
            }
            let mults = restricted_monomials(&self.ring, self.d - e, &self.vars);
            for w in &piece {
                for m in &mults {
                    if m.is_one() {
                        continue;
                    }
                    let prod: Vec<Poly> = w
                        .iter()
                        .map(|p| p.mul_term(m, &crate::ringcore::TRat::one()).expect("same ring"))
                        .collect();
                    cols.push(self.layout.vector_from_tuple(&prod));
                    tags.push((m.clone(), w.clone()));
                }
            }
        }
        let rows = self.layout.total;
        let mut mat = Mat::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                mat.set(i, j, v.clone());
            }
        }
        (mat, tags)
    }
}

fn syzygy_lower(
    ring: &RingSpec,
    entries: &[GradedEntry],
    e: u64,
    vars: &BTreeSet<usize>,
) -> Vec<Vec<Poly>> {
    let (layout, kernel) = macaulay_kernel(ring, entries, e, vars);
    kernel
        .iter()
        .map(|v| layout.tuple_from_vector(ring, v))
        .collect()
}

/// Ebar for homogeneous positive-degree generators over Q.
pub fn ebar_basis(flist: &[Poly], d: u64) -> Result<EbarBasis, GroebnerError> {
    let entries = validate_flist(flist, true)?;
    let ring = flist[0].ring().clone();
    ebar_graded(&ring, &entries, d)
}

/// Ebar allowing zero entries with nominal degrees (the zero-fiber
/// convention: a vanished generator leaves its coordinate unconstrained).
pub fn ebar_graded(
    ring: &RingSpec,
    entries: &[GradedEntry],
    d: u64,
) -> Result<EbarBasis, GroebnerError> {
    let mut vars: BTreeSet<usize> = BTreeSet::new();
    for e in entries {
        vars.extend(e.poly.support_vars());
    }
    let (layout, e_d_basis) = macaulay_kernel(ring, entries, d, &vars);

    // span of S_+ E in degree d
    let mut lower_vectors: Vec<Vec<Rat>> = Vec::new();
    for e in 0..d {
        let piece = syzygy_lower(ring, entries, e, &vars);
        if piece.is_empty() {
            continue;
        }
        let mults = restricted_monomials(ring, d - e, &vars);
        for w in &piece {
            for m in &mults {
                if m.is_one() {
                    continue;
                }
                let prod: Vec<Poly> = w
                    .iter()
                    .map(|p| p.mul_term(m, &crate::ringcore::TRat::one()).expect("same ring"))
                    .collect();
                lower_vectors.push(layout.vector_from_tuple(&prod));
            }
        }
    }
    let lower_span = RowSpace::from_spanning(layout.total, &lower_vectors);

    // extend lower_span to a basis of E_d; the extension vectors represent Ebar
    let mut reps: Vec<Vec<Rat>> = Vec::new();
    let mut accumulated: Vec<Vec<Rat>> = lower_span.basis().to_vec();
    for cand in &e_d_basis {
        let with = RowSpace::from_spanning(
            layout.total,
            &accumulated
                .iter()
                .cloned()
                .chain(std::iter::once(cand.clone()))
                .collect::<Vec<_>>(),
        );
        if with.dim() > accumulated.len() {
            accumulated.push(cand.clone());
            reps.push(cand.clone());
        }
    }

    let rows = layout.total;
    let cols: Vec<Vec<Rat>> = lower_span
        .basis()
        .iter()
        .cloned()
        .chain(reps.iter().cloned())
        .collect();
    let mut solve_mat = Mat::zeros(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            solve_mat.set(i, j, v.clone());
        }
    }

    Ok(EbarBasis {
        ring: ring.clone(),
        entries: entries.to_vec(),
        d,
        vars,
        layout,
        lower_span,
        reps,
        solve_mat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::{rat_int, CoeffDomain, Poly, RingSpec, TRat};

    fn ring(n: usize) -> RingSpec {
        RingSpec::standard(n, CoeffDomain::FieldQ)
    }

    fn x(r: &RingSpec, i: usize) -> Poly {
        Poly::var(r, i).unwrap()
    }

    #[test]
    fn equal_generators_constant_syzygy() {
        let r = ring(1);
        let p = syzygy_space(&[x(&r, 0), x(&r, 0)], 1).unwrap();
        assert_eq!(p.basis.len(), 1);
        let one = Poly::one(&r);
        assert_eq!(p.basis[0], vec![one.clone(), one.neg()]);
    }

    #[test]
    fn no_constant_syzygy_between_distinct_vars() {
        let r = ring(2);
        let p = syzygy_space(&[x(&r, 0), x(&r, 1)], 1).unwrap();
        assert!(p.basis.is_empty());
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(2);
        let p = syzygy_space(&[x(&r, 0), x(&r, 1)], 2).unwrap();
        assert_eq!(p.basis.len(), 1);
        assert_eq!(p.basis[0], vec![x(&r, 1), x(&r, 0).neg()]);
        // contract: sum g_i f_i = 0
        let s = p.basis[0][0]
            .mul(&x(&r, 0))
            .unwrap()
            .add(&p.basis[0][1].mul(&x(&r, 1)).unwrap())
            .unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn ebar_equal_generators() {
        let r = ring(1);
        let e = ebar_basis(&[x(&r, 0), x(&r, 0)], 1).unwrap();
        assert_eq!(e.dim(), 1);
        let reps = e.representatives();
        let one = Poly::one(&r);
        assert_eq!(reps[0], vec![one.clone(), one.neg()]);
    }

    #[test]
    fn ebar_vanishes_when_generated_below() {
        // flist = (x, x) in Q[x, y], d = 2: E_2 is spanned by x(1,-1) and
        // y(1,-1), all of it inside S_+ E.
        let r = ring(2);
        let e = ebar_basis(&[x(&r, 0), x(&r, 0)], 2).unwrap();
        assert_eq!(e.dim(), 0);
    }

    #[test]
    fn ebar_koszul_is_new_in_degree_two() {
        let r = ring(2);
        let e = ebar_basis(&[x(&r, 0), x(&r, 1)], 2).unwrap();
        assert_eq!(e.dim(), 1);
        assert_eq!(e.representatives()[0], vec![x(&r, 1), x(&r, 0).neg()]);
    }

    #[test]
    fn ebar_dim_invariant_under_unused_variables() {
        for extra in 0..3usize {
            let r = ring(2 + extra);
            let e = ebar_basis(&[x(&r, 0), x(&r, 1)], 2).unwrap();
            assert_eq!(e.dim(), 1, "extra = {extra}");
        }
    }

    #[test]
    fn projection_identifies_classes() {
        let r = ring(2);
        let e = ebar_basis(&[x(&r, 0), x(&r, 1)], 2).unwrap();
        // the Koszul tuple itself maps to a unit coordinate
        let class = e.project(&[x(&r, 1), x(&r, 0).neg()]).unwrap();
        assert_eq!(class, vec![rat_int(1)]);
        // a scaled tuple maps to the scaled class
        let two = TRat::from_int(2);
        let scaled: Vec<Poly> = [x(&r, 1), x(&r, 0).neg()]
            .iter()
            .map(|p| p.scaled(&two).unwrap())
            .collect();
        assert_eq!(e.project(&scaled).unwrap(), vec![rat_int(2)]);
    }

    #[test]
    fn zero_fiber_convention_frees_coordinates() {
        // single generator with zero mod-t image, nominal degree 1:
        // at d = 1 the cofactor is a free scalar, so Ebar has dimension 1.
        let r = ring(2);
        let entry = GradedEntry::new(Poly::zero(&r), 1).unwrap();
        let e = ebar_graded(&r, &[entry.clone()], 1).unwrap();
        assert_eq!(e.dim(), 1);
        // at d = 2 everything is a multiple of the degree-1 free tuples,
        // but only within the restricted (empty) variable set: the free
        // coordinate has no restricted monomials of degree 1, so Ebar = 0.
        let e2 = ebar_graded(&r, &[entry], 2).unwrap();
        assert_eq!(e2.dim(), 0);
    }

    #[test]
    fn macaulay_rank_nullity() {
        let r = ring(2);
        let flist = [x(&r, 0), x(&r, 1)];
        let p = syzygy_space(&flist, 3).unwrap();
        // cofactor space dim = 2 * |S_2| = 6; image is all of S_3 (dim 4)
        assert_eq!(p.basis.len(), 6 - 4);
    }
}
