//! Fixed points of the reciprocal map b(x) ↦ x^{-1} b(x^{-1}) on
//! F_{p^m}[x]/((x−1)^l).
//!
//! Polynomials are kept in the (x−1)-adic basis `b(x) = Σ b_i (x−1)^i`. In
//! that basis the reciprocal map is the F_p-matrix G_l, so the fixed points
//! form the kernel of `G_l − I_l`. That kernel is spanned by the odd-indexed
//! columns `Υ_1, Υ_3, ...` of `G_l + I_l`; requiring `b_0 = ... = b_{δ−1} = 0`
//! keeps exactly the columns `Υ_{2j−1}` with `j > ⌈δ/2⌉`.
//!
//! [`reciprocal_oracle`] and [`kernel_oracle`] are brute-force checks that do
//! not go through the closed-form basis.

use crate::error::{Error, Result};
use crate::fieldcore::{FieldSpec, FqElem};
use crate::gmatrix::{self, MatrixFp, UpsilonVec};

/// Exhaustive searches above this many candidates are refused.
pub const KERNEL_ORACLE_GUARD: u128 = 10_000_000;

/// An element of F_{p^m}[x]/((x−1)^l) in the (x−1)-adic basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XPoly {
    field: FieldSpec,
    coeffs: Vec<FqElem>,
}

impl XPoly {
    pub fn new(field: &FieldSpec, coeffs: Vec<FqElem>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| !field.contains(c)) {
            return Err(Error::BadElement(bad.coeffs().to_vec()));
        }
        Ok(XPoly { field: field.clone(), coeffs })
    }

    pub fn zero(field: &FieldSpec, l: usize) -> Self {
        XPoly { field: field.clone(), coeffs: vec![field.zero(); l] }
    }

    /// Convenience constructor for prime-field coefficients.
    pub fn from_ints(field: &FieldSpec, coeffs: &[i64]) -> Self {
        XPoly { field: field.clone(), coeffs: coeffs.iter().map(|&c| field.from_int(c)).collect() }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn l(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FqElem::is_zero)
    }

    /// Coefficients in the monomial basis 1, x, x², ...
    pub fn to_standard(&self) -> Vec<FqElem> {
        basis_convert(&self.field, &self.coeffs, BasisDirection::XMinusOneToStandard)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisDirection {
    /// `Σ b_i (x−1)^i` to `Σ c_i x^i`.
    XMinusOneToStandard,
    /// `Σ c_i x^i` to `Σ b_i (x−1)^i`.
    StandardToXMinusOne,
}

/// Change of basis between `(1, x, ..., x^{n−1})` and `(1, x−1, ..., (x−1)^{n−1})`
/// by an in-place Taylor shift (x ↦ x ± 1).
pub fn basis_convert(field: &FieldSpec, coeffs: &[FqElem], direction: BasisDirection) -> Vec<FqElem> {
    let shift = match direction {
        // B(y) with y = x − 1: evaluate B(x − 1)
        BasisDirection::XMinusOneToStandard => field.p() - 1,
        // C(x) with x = y + 1: evaluate C(y + 1)
        BasisDirection::StandardToXMinusOne => 1,
    };
    let mut a = coeffs.to_vec();
    let n = a.len();
    for i in 0..n.saturating_sub(1) {
        for j in (i..n - 1).rev() {
            let next = a[j + 1].clone();
            field.add_scaled_assign(&mut a[j], &next, shift);
        }
    }
    a
}

/// Applies an F_p matrix to a column of F_{p^m} entries.
pub(crate) fn apply_fp_matrix(field: &FieldSpec, m: &MatrixFp, v: &[FqElem]) -> Vec<FqElem> {
    (0..m.rows())
        .map(|i| {
            let mut acc = field.zero();
            for (j, x) in v.iter().enumerate() {
                field.add_scaled_assign(&mut acc, x, m.get(i, j));
            }
            acc
        })
        .collect()
}

/// The reciprocal map on F_{p^m}[x]/((x−1)^l) for one fixed `l`, holding G_l.
#[derive(Clone, Debug)]
pub struct ReciprocalMap {
    g_l: MatrixFp,
}

impl ReciprocalMap {
    pub fn new(p: u32, l: usize) -> Result<Self> {
        Ok(ReciprocalMap { g_l: gmatrix::g_for_len(p, l)? })
    }

    pub fn g_l(&self) -> &MatrixFp {
        &self.g_l
    }

    pub fn l(&self) -> usize {
        self.g_l.rows()
    }

    /// `x^{-1} b(x^{-1})` as `G_l B_l`.
    pub fn apply(&self, b: &XPoly) -> Result<XPoly> {
        if b.l() != self.l() {
            return Err(Error::DimensionMismatch(format!("polynomial has l = {}, map has l = {}", b.l(), self.l())));
        }
        Ok(XPoly { field: b.field.clone(), coeffs: apply_fp_matrix(&b.field, &self.g_l, &b.coeffs) })
    }

    /// Whether `(G_l − I_l) B_l = 0`.
    pub fn fixes(&self, b: &XPoly) -> Result<bool> {
        Ok(self.apply(b)?.coeffs == b.coeffs)
    }
}

/// `x^{-1} b(x^{-1}) mod (x−1)^l`, computed as `G_l B_l`.
pub fn reciprocal_transform(b: &XPoly) -> Result<XPoly> {
    if b.l() == 0 {
        return Ok(b.clone());
    }
    ReciprocalMap::new(b.field.p(), b.l())?.apply(b)
}

/// `x^{-1} b(x^{-1}) mod (x−1)^l` by plain polynomial arithmetic.
///
/// With `P = p^λ ≥ l`, `x^P − 1 = (x−1)^P` in characteristic p, so inside
/// F_{p^m}[x]/(x^P − 1) the inverse of x is `x^{P−1}`. The standard-basis
/// polynomial is rewritten under `x ↦ x^{P−1}`, multiplied by `x^{P−1}`,
/// reduced mod `x^P − 1` and then mod `(x−1)^l`.
pub fn reciprocal_oracle(b: &XPoly) -> XPoly {
    let field = &b.field;
    let l = b.l();
    if l == 0 {
        return b.clone();
    }
    let big_p = (field.p() as u64).pow(gmatrix::level_for(field.p(), l)) as usize;
    let standard = b.to_standard();
    let mut image = vec![field.zero(); big_p];
    for (i, c) in standard.iter().enumerate() {
        // x^{-(i+1)} = x^{(P−1)(i+1)} mod x^P − 1
        let e = ((big_p - 1) as u128 * (i as u128 + 1) % big_p as u128) as usize;
        image[e] = field.add(&image[e], c);
    }
    let mut shifted = basis_convert(field, &image, BasisDirection::StandardToXMinusOne);
    shifted.truncate(l);
    XPoly { field: field.clone(), coeffs: shifted }
}

/// The F_{p^m}-basis `{Υ_{2j−1}^{[δ;l)}}` of the δ-truncated solution set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SBasis {
    pub field: FieldSpec,
    pub l: usize,
    pub delta: usize,
    pub vectors: Vec<UpsilonVec>,
}

/// Basis of `{(b_δ, ..., b_{l−1}) : (0, ..., 0, b_δ, ..., b_{l−1}) ∈ S_l}`.
pub fn s_basis(field: &FieldSpec, l: usize, delta: usize) -> Result<SBasis> {
    if delta >= l {
        return Err(Error::OutOfRange(format!("delta {delta} must be below l = {l}")));
    }
    let g_l = gmatrix::g_for_len(field.p(), l)?;
    s_basis_from_g(field, &g_l, delta)
}

/// As [`s_basis`], reusing a prebuilt G_l.
pub fn s_basis_from_g(field: &FieldSpec, g_l: &MatrixFp, delta: usize) -> Result<SBasis> {
    let l = g_l.rows();
    if delta >= l {
        return Err(Error::OutOfRange(format!("delta {delta} must be below l = {l}")));
    }
    let vectors =
        gmatrix::upsilon_range(l, delta).map(|j| gmatrix::upsilon(g_l, j, delta)).collect::<Result<Vec<_>>>()?;
    Ok(SBasis { field: field.clone(), l, delta, vectors })
}

impl SBasis {
    /// `⌈l/2⌉ − ⌈δ/2⌉`.
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    /// The `j` values of the basis vectors, ascending.
    pub fn j_values(&self) -> Vec<usize> {
        self.vectors.iter().map(|v| v.source_index.div_ceil(2)).collect()
    }

    /// `Σ a_j Υ_{2j−1}^{[δ;l)}`, a vector of length `l − δ`.
    pub fn combine(&self, params: &[FqElem]) -> Result<Vec<FqElem>> {
        if params.len() != self.dimension() {
            return Err(Error::ParamCount { expected: self.dimension(), got: params.len() });
        }
        let mut out = vec![self.field.zero(); self.l - self.delta];
        for (a, v) in params.iter().zip(&self.vectors) {
            if !self.field.contains(a) {
                return Err(Error::BadElement(a.coeffs().to_vec()));
            }
            for (slot, &g) in out.iter_mut().zip(&v.values) {
                self.field.add_scaled_assign(slot, a, g);
            }
        }
        Ok(out)
    }

    /// The combination padded with δ leading zeros, as a polynomial mod (x−1)^l.
    pub fn embed(&self, params: &[FqElem]) -> Result<XPoly> {
        let mut coeffs = vec![self.field.zero(); self.delta];
        coeffs.extend(self.combine(params)?);
        Ok(XPoly { field: self.field.clone(), coeffs })
    }

    /// Rank of the basis vectors; over F_p and F_{p^m} alike since they have F_p entries.
    pub fn rank(&self) -> usize {
        if self.vectors.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<i64>> = self.vectors.iter().map(|v| v.values.iter().map(|&x| x as i64).collect()).collect();
        MatrixFp::from_rows(self.field.p(), &rows).expect("equal-length basis vectors").rank()
    }

    /// Every element of the span, embedded at offset δ. Exponential; for tests and small demos.
    pub fn span(&self) -> impl Iterator<Item = XPoly> + '_ {
        let q = self.field.order().expect("field too large");
        let d = self.dimension() as u32;
        let total = q.checked_pow(d).expect("span too large to enumerate");
        (0..total).map(move |mut idx| {
            let params: Vec<FqElem> = (0..d)
                .map(|_| {
                    let e = self.field.from_index(idx % q);
                    idx /= q;
                    e
                })
                .collect();
            self.embed(&params).expect("param count matches")
        })
    }
}

/// Whether `b` has `b_0 = ... = b_{δ−1} = 0` and is fixed by the reciprocal map.
pub fn s_membership(b: &XPoly, delta: usize) -> Result<bool> {
    if b.coeffs.iter().take(delta).any(|c| !c.is_zero()) {
        return Ok(false);
    }
    if b.l() == 0 {
        return Ok(true);
    }
    ReciprocalMap::new(b.field.p(), b.l())?.fixes(b)
}

fn all_vectors(field: &FieldSpec, l: usize) -> Result<impl Iterator<Item = Vec<FqElem>> + '_> {
    let q = field.order().ok_or(Error::GuardExceeded(u128::MAX))? as u128;
    let total = q.checked_pow(l as u32).unwrap_or(u128::MAX);
    if total > KERNEL_ORACLE_GUARD {
        return Err(Error::GuardExceeded(total));
    }
    Ok((0..total).map(move |mut idx| {
        (0..l)
            .map(|_| {
                let e = field.from_index((idx % q) as u64);
                idx /= q;
                e
            })
            .collect()
    }))
}

/// All `B ∈ F_{p^m}^l` with `(G_l − I_l) B = 0`, by exhaustive search.
pub fn kernel_oracle(field: &FieldSpec, l: usize) -> Result<Vec<Vec<FqElem>>> {
    let g_minus = gmatrix::g_for_len(field.p(), l)?.shift_diagonal(-1);
    Ok(all_vectors(field, l)?.filter(|v| apply_fp_matrix(field, &g_minus, v).iter().all(FqElem::is_zero)).collect())
}

/// All `b` with `x^{-1} b(x^{-1}) ≡ b(x) mod (x−1)^l`, by exhaustive search
/// through [`reciprocal_oracle`]; never touches G.
pub fn fixed_point_oracle(field: &FieldSpec, l: usize) -> Result<Vec<Vec<FqElem>>> {
    Ok(all_vectors(field, l)?
        .filter(|v| {
            let b = XPoly { field: field.clone(), coeffs: v.clone() };
            reciprocal_oracle(&b).coeffs == b.coeffs
        })
        .collect())
}
