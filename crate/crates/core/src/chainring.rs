//! The chain ring R = F_{p^m} + uF_{p^m} (u² = 0) and ideals of
//! R[x]/(x^N ∓ 1), with an independent self-duality checker.
//!
//! An ideal C is handled through its F_{p^m}-expansion: every codeword
//! `c = a + ub` becomes the length-2N vector `(a | b)`. As an F_{p^m}-space, C is
//! spanned by `x^i g` and `u x^i g` over the generators g and shifts
//! `0 ≤ i < N`, so Gaussian elimination over F_{p^m} gives `dim C` with
//! `|C| = (p^m)^{dim C}`.
//!
//! Self-orthogonality only needs `[x^i g_a, g_b] = 0`: the Euclidean form is
//! R-bilinear, and the (nega)cyclic shift is an isometry, so
//! `[x^i g_a, x^j g_b] = ±[x^{i−j} g_a, g_b]`. A self-orthogonal ideal with
//! `dim C = N` (that is `|C| = |R|^{N/2}`) is self-dual because
//! `|C| · |C^⊥| = |R|^N` over a Frobenius ring.

use crate::error::{Error, Result};
use crate::fieldcore::{FieldSpec, FqElem};

/// `a + ub`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RElem {
    pub a: FqElem,
    pub b: FqElem,
}

/// R = F_{p^m}[u]/(u²).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainRing {
    field: FieldSpec,
}

impl ChainRing {
    pub fn new(field: FieldSpec) -> Self {
        ChainRing { field }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn zero(&self) -> RElem {
        RElem { a: self.field.zero(), b: self.field.zero() }
    }

    pub fn one(&self) -> RElem {
        RElem { a: self.field.one(), b: self.field.zero() }
    }

    pub fn u(&self) -> RElem {
        RElem { a: self.field.zero(), b: self.field.one() }
    }

    pub fn elem(&self, a: FqElem, b: FqElem) -> RElem {
        RElem { a, b }
    }

    pub fn from_ints(&self, a: i64, b: i64) -> RElem {
        RElem { a: self.field.from_int(a), b: self.field.from_int(b) }
    }

    pub fn add(&self, x: &RElem, y: &RElem) -> RElem {
        RElem { a: self.field.add(&x.a, &y.a), b: self.field.add(&x.b, &y.b) }
    }

    pub fn sub(&self, x: &RElem, y: &RElem) -> RElem {
        RElem { a: self.field.sub(&x.a, &y.a), b: self.field.sub(&x.b, &y.b) }
    }

    pub fn neg(&self, x: &RElem) -> RElem {
        RElem { a: self.field.neg(&x.a), b: self.field.neg(&x.b) }
    }

    /// `(a + ub)(c + ud) = ac + u(ad + bc)`.
    pub fn mul(&self, x: &RElem, y: &RElem) -> RElem {
        let f = &self.field;
        RElem { a: f.mul(&x.a, &y.a), b: f.add(&f.mul(&x.a, &y.b), &f.mul(&x.b, &y.a)) }
    }

    pub fn is_zero(&self, x: &RElem) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }

    pub fn scale_vector(&self, c: &RElem, v: &RVector) -> RVector {
        RVector { entries: v.entries.iter().map(|x| self.mul(c, x)).collect() }
    }

    /// `[x, y] = Σ x_i y_i`.
    pub fn inner_product(&self, x: &RVector, y: &RVector) -> Result<RElem> {
        if x.len() != y.len() {
            return Err(Error::DimensionMismatch(format!("vectors of length {} and {}", x.len(), y.len())));
        }
        Ok(x.entries.iter().zip(&y.entries).fold(self.zero(), |acc, (s, t)| self.add(&acc, &self.mul(s, t))))
    }
}

/// A vector in R^N; also the coefficient vector of a polynomial of degree < N.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RVector {
    pub entries: Vec<RElem>,
}

impl RVector {
    pub fn new(entries: Vec<RElem>) -> Self {
        RVector { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Splits `a + ub` into its two F_{p^m}[x] parts.
    pub fn from_parts(a: &[FqElem], b: &[FqElem]) -> Self {
        RVector { entries: a.iter().zip(b).map(|(a, b)| RElem { a: a.clone(), b: b.clone() }).collect() }
    }
}

/// Which quotient ring the code lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingSign {
    /// R[x]/(x^N − 1).
    Cyclic,
    /// R[x]/(x^N + 1).
    Negacyclic,
}

impl RingSign {
    /// `x^N ≡ λ`: +1 for cyclic, −1 for negacyclic.
    pub fn lambda(self) -> i64 {
        match self {
            RingSign::Cyclic => 1,
            RingSign::Negacyclic => -1,
        }
    }
}

/// An ideal of R[x]/(x^N ∓ 1) given by generators in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RIdealGens {
    pub sign: RingSign,
    pub n: usize,
    pub generators: Vec<RVector>,
}

impl RIdealGens {
    pub fn new(sign: RingSign, n: usize, generators: Vec<RVector>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::DimensionMismatch("an ideal needs at least one generator".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::DimensionMismatch(format!("generator of length {} in a length-{n} ring", g.len())));
        }
        Ok(RIdealGens { sign, n, generators })
    }
}

/// `x · v` in R[x]/(x^N − λ).
fn shift(ring: &ChainRing, v: &RVector, sign: RingSign) -> RVector {
    let n = v.len();
    let mut out = Vec::with_capacity(n);
    let wrapped = &v.entries[n - 1];
    out.push(match sign {
        RingSign::Cyclic => wrapped.clone(),
        RingSign::Negacyclic => ring.neg(wrapped),
    });
    out.extend(v.entries[..n - 1].iter().cloned());
    RVector { entries: out }
}

/// The F_{p^m}-spanning set `{x^i g, u x^i g}` as length-2N rows `(a | b)`.
fn expansion_rows(ring: &ChainRing, gens: &RIdealGens) -> Vec<Vec<FqElem>> {
    let f = ring.field();
    let mut rows = Vec::with_capacity(2 * gens.n * gens.generators.len());
    for g in &gens.generators {
        let mut v = g.clone();
        for _ in 0..gens.n {
            let mut row: Vec<FqElem> = v.entries.iter().map(|e| e.a.clone()).collect();
            row.extend(v.entries.iter().map(|e| e.b.clone()));
            rows.push(row);
            // u (a + ub) = ua
            let mut urow = vec![f.zero(); gens.n];
            urow.extend(v.entries.iter().map(|e| e.a.clone()));
            rows.push(urow);
            v = shift(ring, &v, gens.sign);
        }
    }
    rows
}

/// Reduced row-echelon form over F_{p^m}, pivots in increasing column order.
fn rref(field: &FieldSpec, rows: Vec<Vec<FqElem>>) -> Vec<Vec<FqElem>> {
    let mut basis: Vec<(usize, Vec<FqElem>)> = Vec::new();
    for mut row in rows {
        for (pc, b) in &basis {
            let c = row[*pc].clone();
            if !c.is_zero() {
                for (x, y) in row.iter_mut().zip(b).skip(*pc) {
                    *x = field.sub(x, &field.mul(&c, y));
                }
            }
        }
        let Some(pivot) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = field.inv(&row[pivot]).expect("pivot is nonzero");
        for x in row.iter_mut().skip(pivot) {
            *x = field.mul(x, &inv);
        }
        for (_, b) in basis.iter_mut() {
            let c = b[pivot].clone();
            if !c.is_zero() {
                for (x, y) in b.iter_mut().zip(&row).skip(pivot) {
                    *x = field.sub(x, &field.mul(&c, y));
                }
            }
        }
        let at = basis.partition_point(|(pc, _)| *pc < pivot);
        basis.insert(at, (pivot, row));
    }
    basis.into_iter().map(|(_, r)| r).collect()
}

/// `dim_{F_{p^m}} C`; the ideal has `(p^m)^d` codewords.
pub fn span_dimension(ring: &ChainRing, gens: &RIdealGens) -> usize {
    rref(ring.field(), expansion_rows(ring, gens)).len()
}

pub fn is_self_orthogonal(ring: &ChainRing, gens: &RIdealGens) -> bool {
    for ga in &gens.generators {
        let mut v = ga.clone();
        for _ in 0..gens.n {
            for gb in &gens.generators {
                let ip = ring.inner_product(&v, gb).expect("equal lengths");
                if !ring.is_zero(&ip) {
                    return false;
                }
            }
            v = shift(ring, &v, gens.sign);
        }
    }
    true
}

/// Self-orthogonal and of size `|R|^{N/2}`.
pub fn is_self_dual(ring: &ChainRing, gens: &RIdealGens) -> bool {
    is_self_orthogonal(ring, gens) && span_dimension(ring, gens) == gens.n
}

/// A presentation-independent fingerprint of an ideal: the RREF basis of its
/// F_{p^m}-expansion.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub sign_is_cyclic: bool,
    pub n: usize,
    pub rows: Vec<Vec<FqElem>>,
}

impl CanonicalForm {
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }
}

pub fn canonical_form(ring: &ChainRing, gens: &RIdealGens) -> CanonicalForm {
    CanonicalForm {
        sign_is_cyclic: gens.sign == RingSign::Cyclic,
        n: gens.n,
        rows: rref(ring.field(), expansion_rows(ring, gens)),
    }
}

/// Re-canonicalizes an explicit list of expansion rows.
pub fn canonical_form_of_rows(ring: &ChainRing, sign: RingSign, n: usize, rows: Vec<Vec<FqElem>>) -> CanonicalForm {
    CanonicalForm { sign_is_cyclic: sign == RingSign::Cyclic, n, rows: rref(ring.field(), rows) }
}

/// `α(x) ↦ α(−x)`: negates odd-degree coefficients.
pub fn substitute_neg_x(ring: &ChainRing, v: &RVector) -> RVector {
    RVector {
        entries: v.entries.iter().enumerate().map(|(i, e)| if i % 2 == 1 { ring.neg(e) } else { e.clone() }).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::find_irreducible;

    fn r3() -> ChainRing {
        ChainRing::new(FieldSpec::prime(3).unwrap())
    }

    fn poly(ring: &ChainRing, parts: &[(i64, i64)]) -> RVector {
        RVector::new(parts.iter().map(|&(a, b)| ring.from_ints(a, b)).collect())
    }

    #[test]
    fn ring_laws() {
        let r = r3();
        assert_eq!(r.mul(&r.from_ints(1, 1), &r.from_ints(1, -1)), r.one());
        assert_eq!(r.mul(&r.u(), &r.u()), r.zero());
        let x = r.from_ints(2, 1);
        assert_eq!(r.mul(&x, &r.u()), r.from_ints(0, 2));
        assert_eq!(r.add(&x, &r.neg(&x)), r.zero());
    }

    #[test]
    fn inner_products() {
        let r = r3();
        let ones = poly(&r, &[(1, 0), (1, 0), (1, 0)]);
        assert_eq!(r.inner_product(&ones, &ones).unwrap(), r.zero());
        let u0 = poly(&r, &[(0, 1), (0, 0), (0, 0)]);
        assert_eq!(r.inner_product(&u0, &u0).unwrap(), r.zero());
        let e1 = poly(&r, &[(1, 0), (0, 0), (0, 0)]);
        let e2 = poly(&r, &[(0, 0), (1, 0), (0, 0)]);
        assert_eq!(r.inner_product(&e1, &e2).unwrap(), r.zero());
        assert!(r.inner_product(&e1, &poly(&r, &[(1, 0)])).is_err());
    }

    fn ideal(ring: &ChainRing, gens: &[&[(i64, i64)]]) -> RIdealGens {
        RIdealGens::new(RingSign::Cyclic, gens[0].len(), gens.iter().map(|g| poly(ring, g)).collect()).unwrap()
    }

    #[test]
    fn dimensions() {
        let r = r3();
        assert_eq!(span_dimension(&r, &ideal(&r, &[&[(0, 1), (0, 0), (0, 0)]])), 3);
        assert_eq!(span_dimension(&r, &ideal(&r, &[&[(1, 0), (0, 0), (0, 0)]])), 6);
        // (x−1)^3 = x^3 − 1 ≡ 0
        assert_eq!(span_dimension(&r, &ideal(&r, &[&[(0, 0), (0, 0), (0, 0)]])), 0);
    }

    #[test]
    fn small_self_dual_codes() {
        let r = r3();
        let u = ideal(&r, &[&[(0, 1), (0, 0), (0, 0)]]);
        assert!(is_self_orthogonal(&r, &u));
        assert!(is_self_dual(&r, &u));
        let one = ideal(&r, &[&[(1, 0), (0, 0), (0, 0)]]);
        assert!(!is_self_orthogonal(&r, &one));
        assert!(!is_self_dual(&r, &one));
        // ⟨u(x−1), (x−1)^2⟩ with (x−1)^2 = x^2 + x + 1 over F_3
        let c = ideal(&r, &[&[(0, 2), (0, 1), (0, 0)], &[(1, 0), (1, 0), (1, 0)]]);
        assert!(is_self_orthogonal(&r, &c));
        assert!(is_self_dual(&r, &c));
    }

    #[test]
    fn canonical_forms() {
        let r = r3();
        let u = ideal(&r, &[&[(0, 1), (0, 0), (0, 0)]]);
        let u2 = ideal(&r, &[&[(0, 2), (0, 0), (0, 0)]]);
        let c = ideal(&r, &[&[(0, 2), (0, 1), (0, 0)], &[(1, 0), (1, 0), (1, 0)]]);
        let cu = canonical_form(&r, &u);
        assert_eq!(cu, canonical_form(&r, &u2));
        assert_ne!(cu, canonical_form(&r, &c));
        assert_eq!(canonical_form_of_rows(&r, RingSign::Cyclic, 3, cu.rows.clone()), cu);
    }

    #[test]
    fn negacyclic_shift_wraps_with_sign() {
        let r = r3();
        let v = poly(&r, &[(0, 0), (0, 0), (1, 0)]);
        assert_eq!(shift(&r, &v, RingSign::Negacyclic).entries[0], r.from_ints(-1, 0));
        assert_eq!(shift(&r, &v, RingSign::Cyclic).entries[0], r.one());
    }

    #[test]
    fn extension_field_elimination() {
        let f9 = find_irreducible(3, 2).unwrap();
        let r = ChainRing::new(f9.clone());
        let theta = f9.from_coeffs(&[0, 1]).unwrap();
        let g = RVector::new(vec![r.elem(f9.zero(), theta), r.zero(), r.zero()]);
        let gens = RIdealGens::new(RingSign::Cyclic, 3, vec![g]).unwrap();
        assert!(is_self_dual(&r, &gens));
    }
}
