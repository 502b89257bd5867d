//! All self-dual cyclic codes of length N = p^s over F_{p^m} + uF_{p^m}.
//!
//! Every such code is
//!
//! ```text
//! ⟨(x−1)^{k+1} b(x) + u(x−1)^k, (x−1)^{N−k}⟩,   0 ≤ k ≤ (N−1)/2,
//! ```
//!
//! (the second generator vanishes for k = 0), where `b(x)` is a fixed point of
//! the reciprocal map mod `(x−1)^l`, `l = N − 1 − 2k`, supported on degrees
//! `δ..l` with `δ = (N−1)/2 − k`. Such b are exactly
//! `Σ a_{2j−2} Υ_{2j−1}^{[δ;l)}` for free `a_{2j−2} ∈ F_{p^m}`, and distinct
//! parameter tuples give distinct codes.
//!
//! The k values are grouped by parity of k and the class of N mod 4, indexed
//! by ν. Codes are streamed in descriptor order, then lexicographically over
//! the parameter tuple (last parameter varying fastest).

use std::fmt;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chainring::{substitute_neg_x, ChainRing, RIdealGens, RVector, RingSign};
use crate::error::{Error, Result};
use crate::fieldcore::{is_prime, FieldSpec, FqElem};
use crate::gmatrix;
use crate::omega::{basis_convert, s_basis_from_g, BasisDirection, SBasis, XPoly};

/// Residue of N = p^s mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    OneMod4,
    ThreeMod4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    /// k = 0 when N ≡ 1 mod 4: the single generator ⟨(x−1)b(x) + u⟩.
    Unit,
    /// k = 2ν.
    EvenK,
    /// k = 2ν + 1 when N ≡ 3 mod 4, k = 2ν − 1 when N ≡ 1 mod 4.
    OddK,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Unit => "unit",
            CaseTag::EvenK => "even-k",
            CaseTag::OddK => "odd-k",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "unit" => Ok(CaseTag::Unit),
            "even-k" => Ok(CaseTag::EvenK),
            "odd-k" => Ok(CaseTag::OddK),
            other => Err(Error::Parse(format!("unknown case tag {other:?}"))),
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

/// One family of codes sharing k (and so l, δ and the Υ basis).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CaseDescriptor {
    pub branch: Branch,
    pub sub: CaseTag,
    pub nu: usize,
    pub k: usize,
    pub delta: usize,
    pub l: usize,
    /// Inclusive bounds on j for the parameters `a_{2j−2}`; empty when `lo > hi`.
    pub j_range: (usize, usize),
    pub free_param_count: usize,
    /// `N − 2k`.
    pub t: usize,
}

impl CaseDescriptor {
    fn new(n: usize, branch: Branch, sub: CaseTag, nu: usize, k: usize, j_lo: i64, j_hi: i64) -> Self {
        let l = n - 1 - 2 * k;
        let delta = (n - 1) / 2 - k;
        let free = (j_hi - j_lo + 1).max(0) as usize;
        CaseDescriptor {
            branch,
            sub,
            nu,
            k,
            delta,
            l,
            j_range: (j_lo.max(0) as usize, j_hi.max(0) as usize),
            free_param_count: free,
            t: n - 2 * k,
        }
    }

    /// The j values indexing the parameters, ascending.
    pub fn j_values(&self) -> std::ops::RangeInclusive<usize> {
        if self.free_param_count == 0 {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        self.j_range.0..=self.j_range.1
    }

    /// Number of codes in this family.
    pub fn code_count(&self, q: &BigUint) -> BigUint {
        q.pow(self.free_param_count as u32)
    }
}

/// `p^s` as a machine integer, rejecting even or composite p and s = 0.
pub fn code_length(p: u64, s: u32) -> Result<usize> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    if s < 1 {
        return Err(Error::OutOfRange("s must be at least 1".into()));
    }
    p.checked_pow(s)
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| Error::OutOfRange(format!("{p}^{s} overflows")))
}

/// All families, in the order: (N ≡ 3) even-k by ν, odd-k by ν;
/// (N ≡ 1) k = 0, even-k by ν, odd-k by ν.
pub fn classify_cases(p: u64, s: u32) -> Result<Vec<CaseDescriptor>> {
    let n = code_length(p, s)?;
    let ni = n as i64;
    let mut out = Vec::new();
    if n % 4 == 3 {
        let quarter = (n + 1) / 4;
        for nu in 0..quarter {
            let v = nu as i64;
            let (lo, hi) = (quarter as i64 - v + 1, (ni + 1) / 2 - 2 * v - 1);
            out.push(CaseDescriptor::new(n, Branch::ThreeMod4, CaseTag::EvenK, nu, 2 * nu, lo, hi));
        }
        for nu in 0..quarter {
            let v = nu as i64;
            let (lo, hi) = (quarter as i64 - v, (ni + 1) / 2 - 2 * v - 2);
            out.push(CaseDescriptor::new(n, Branch::ThreeMod4, CaseTag::OddK, nu, 2 * nu + 1, lo, hi));
        }
    } else {
        let quarter = (n - 1) / 4;
        let q = quarter as i64;
        out.push(CaseDescriptor::new(n, Branch::OneMod4, CaseTag::Unit, 0, 0, q + 1, (ni - 1) / 2));
        for nu in 1..=quarter {
            let v = nu as i64;
            out.push(CaseDescriptor::new(
                n,
                Branch::OneMod4,
                CaseTag::EvenK,
                nu,
                2 * nu,
                q - v + 1,
                (ni - 1) / 2 - 2 * v,
            ));
        }
        for nu in 1..=quarter {
            let v = nu as i64;
            out.push(CaseDescriptor::new(
                n,
                Branch::OneMod4,
                CaseTag::OddK,
                nu,
                2 * nu - 1,
                q - v + 2,
                (ni - 1) / 2 - 2 * v + 1,
            ));
        }
    }
    Ok(out)
}

/// The family with torsion exponent `k`.
pub fn find_case(p: u64, s: u32, k: usize) -> Result<CaseDescriptor> {
    classify_cases(p, s)?.into_iter().find(|d| d.k == k).ok_or(Error::NoSuchCase(k))
}

/// `Σ_{t < terms} q^t`, evaluated as a sum.
fn geometric_sum(q: &BigUint, terms: usize) -> BigUint {
    let mut acc = BigUint::zero();
    let mut power = BigUint::one();
    for _ in 0..terms {
        acc += &power;
        power *= q;
    }
    acc
}

/// Number of self-dual cyclic codes of length p^s over F_{p^m} + uF_{p^m}, closed form.
pub fn count_self_dual(p: u64, m: usize, s: u32) -> Result<BigUint> {
    let n = code_length(p, s)?;
    if m < 1 {
        return Err(Error::BadDegree);
    }
    let q = BigUint::from(p).pow(m as u32);
    Ok(if n % 4 == 3 {
        let quarter = (n + 1) / 4;
        geometric_sum(&q, quarter) * 2u32
    } else {
        let quarter = (n - 1) / 4;
        q.pow(quarter as u32) + geometric_sum(&q, quarter) * 2u32
    })
}

/// Per-family counts `(descriptor, (p^m)^{free_param_count})`.
pub fn count_table(p: u64, m: usize, s: u32) -> Result<Vec<(CaseDescriptor, BigUint)>> {
    if m < 1 {
        return Err(Error::BadDegree);
    }
    let q = BigUint::from(p).pow(m as u32);
    Ok(classify_cases(p, s)?
        .into_iter()
        .map(|d| {
            let c = d.code_count(&q);
            (d, c)
        })
        .collect())
}

/// One self-dual code with its parameters and derived data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    pub field: FieldSpec,
    pub s: u32,
    pub descriptor: CaseDescriptor,
    /// The `a_{2j−2}` in ascending j.
    pub params: Vec<FqElem>,
    /// `b(x)` in the (x−1)-basis, length l, zero below δ.
    pub b_coeffs: XPoly,
    pub generators: RIdealGens,
}

impl CodeSpec {
    pub fn n(&self) -> usize {
        self.generators.n
    }

    pub fn k(&self) -> usize {
        self.descriptor.k
    }
}

/// Builds the codes of one family; holds the Υ basis so it is computed once.
#[derive(Clone, Debug)]
pub struct CaseBuilder {
    field: FieldSpec,
    s: u32,
    n: usize,
    descriptor: CaseDescriptor,
    basis: Option<SBasis>,
}

impl CaseBuilder {
    pub fn new(field: &FieldSpec, s: u32, descriptor: CaseDescriptor) -> Result<Self> {
        let n = code_length(field.p() as u64, s)?;
        let basis = if descriptor.l == 0 {
            None
        } else {
            let g_l = gmatrix::g_for_len(field.p(), descriptor.l)?;
            Some(s_basis_from_g(field, &g_l, descriptor.delta)?)
        };
        if let Some(b) = &basis {
            debug_assert_eq!(b.dimension(), descriptor.free_param_count);
            debug_assert!(b.j_values().iter().copied().eq(descriptor.j_values()));
        }
        Ok(CaseBuilder { field: field.clone(), s, n, descriptor, basis })
    }

    pub fn descriptor(&self) -> &CaseDescriptor {
        &self.descriptor
    }

    pub fn basis(&self) -> Option<&SBasis> {
        self.basis.as_ref()
    }

    pub fn build(&self, params: &[FqElem]) -> Result<CodeSpec> {
        let d = &self.descriptor;
        if params.len() != d.free_param_count {
            return Err(Error::ParamCount { expected: d.free_param_count, got: params.len() });
        }
        let b_coeffs = match &self.basis {
            Some(basis) => basis.embed(params)?,
            None => XPoly::zero(&self.field, 0),
        };
        let generators = code_generators(&self.field, self.n, d.k, &b_coeffs)?;
        Ok(CodeSpec {
            field: self.field.clone(),
            s: self.s,
            descriptor: d.clone(),
            params: params.to_vec(),
            b_coeffs,
            generators,
        })
    }
}

/// Standard-basis generators of `⟨(x−1)^{k+1} b(x) + u(x−1)^k, (x−1)^{N−k}⟩`,
/// dropping the second one when k = 0.
pub fn code_generators(field: &FieldSpec, n: usize, k: usize, b: &XPoly) -> Result<RIdealGens> {
    if b.l() + k + 1 > n && !b.is_zero() {
        return Err(Error::OutOfRange(format!("(x−1)^{} b(x) does not fit below degree {n}", k + 1)));
    }
    let mut a_part = vec![field.zero(); n];
    for (i, c) in b.coeffs().iter().enumerate() {
        if !c.is_zero() {
            a_part[i + k + 1] = c.clone();
        }
    }
    let mut u_part = vec![field.zero(); n];
    u_part[k] = field.one();
    let to_std = |v: &[FqElem]| basis_convert(field, v, BasisDirection::XMinusOneToStandard);
    let mut gens = vec![RVector::from_parts(&to_std(&a_part), &to_std(&u_part))];
    if k >= 1 {
        let mut torsion = vec![field.zero(); n];
        torsion[n - k] = field.one();
        gens.push(RVector::from_parts(&to_std(&torsion), &vec![field.zero(); n]));
    }
    RIdealGens::new(RingSign::Cyclic, n, gens)
}

/// Builds the code of family `desc` with parameters `params`.
pub fn build_code(desc: &CaseDescriptor, params: &[FqElem], field: &FieldSpec, s: u32) -> Result<CodeSpec> {
    CaseBuilder::new(field, s, desc.clone())?.build(params)
}

/// `φ(C) = {α(−x) : α ∈ C}`, a self-dual negacyclic code.
pub fn to_negacyclic(code: &CodeSpec) -> RIdealGens {
    let ring = ChainRing::new(code.field.clone());
    RIdealGens {
        sign: RingSign::Negacyclic,
        n: code.generators.n,
        generators: code.generators.generators.iter().map(|g| substitute_neg_x(&ring, g)).collect(),
    }
}

/// Streaming iterator over all codes; one code in memory at a time.
pub struct CodeStream {
    field: FieldSpec,
    s: u32,
    q: u64,
    descriptors: Vec<CaseDescriptor>,
    next_desc: usize,
    current: Option<(CaseBuilder, Vec<u64>, bool)>,
}

impl CodeStream {
    pub fn new(field: &FieldSpec, s: u32) -> Result<Self> {
        Self::starting_at(field, s, &BigUint::zero())
    }

    /// Skips the first `offset` codes without building them.
    pub fn starting_at(field: &FieldSpec, s: u32, offset: &BigUint) -> Result<Self> {
        let q = field.order().ok_or_else(|| Error::OutOfRange("field order overflows".into()))?;
        let descriptors = classify_cases(field.p() as u64, s)?;
        let mut stream = CodeStream { field: field.clone(), s, q, descriptors, next_desc: 0, current: None };
        let qb = BigUint::from(q);
        let mut rest = offset.clone();
        while stream.next_desc < stream.descriptors.len() {
            let d = &stream.descriptors[stream.next_desc];
            let count = d.code_count(&qb);
            if rest < count {
                let digits = decode_digits(&rest, q, d.free_param_count);
                let builder = CaseBuilder::new(&stream.field, s, d.clone())?;
                stream.current = Some((builder, digits, false));
                stream.next_desc += 1;
                return Ok(stream);
            }
            rest -= count;
            stream.next_desc += 1;
        }
        Ok(stream)
    }

    pub fn descriptors(&self) -> &[CaseDescriptor] {
        &self.descriptors
    }

    fn advance_descriptor(&mut self) -> Result<bool> {
        if self.next_desc >= self.descriptors.len() {
            self.current = None;
            return Ok(false);
        }
        let d = self.descriptors[self.next_desc].clone();
        self.next_desc += 1;
        let digits = vec![0; d.free_param_count];
        self.current = Some((CaseBuilder::new(&self.field, self.s, d)?, digits, false));
        Ok(true)
    }
}

/// Base-q digits of `index`, most significant first, padded to `len`.
fn decode_digits(index: &BigUint, q: u64, len: usize) -> Vec<u64> {
    let mut digits = vec![0u64; len];
    let mut rest = index.clone();
    let qb = BigUint::from(q);
    for slot in digits.iter_mut().rev() {
        *slot = (&rest % &qb).to_u64().expect("digit below q");
        rest /= &qb;
    }
    digits
}

impl Iterator for CodeStream {
    type Item = CodeSpec;

    fn next(&mut self) -> Option<CodeSpec> {
        loop {
            if self.current.is_none() && !self.advance_descriptor().ok()? {
                return None;
            }
            let q = self.q;
            let (builder, digits, exhausted) = self.current.as_mut()?;
            if *exhausted {
                self.current = None;
                continue;
            }
            let params: Vec<FqElem> = digits.iter().map(|&d| builder.field.from_index(d)).collect();
            let code = builder.build(&params).ok()?;
            // odometer, last parameter fastest
            let mut i = digits.len();
            loop {
                if i == 0 {
                    *exhausted = true;
                    break;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
            }
            return Some(code);
        }
    }
}

/// All codes for (p, m, s) as a stream; the modulus of F_{p^m} is the
/// canonical one from [`crate::fieldcore::find_irreducible`].
pub fn enumerate_codes(p: u64, m: usize, s: u32) -> Result<CodeStream> {
    let field = crate::fieldcore::find_irreducible(p, m)?;
    CodeStream::new(&field, s)
}

/// The code at position `index` of the enumeration order.
pub fn code_at(field: &FieldSpec, s: u32, index: &BigUint) -> Result<Option<CodeSpec>> {
    Ok(CodeStream::starting_at(field, s, index)?.next())
}

/// `n` codes drawn uniformly (with replacement) from the whole family,
/// reproducible from `seed`.
pub fn sample_codes(field: &FieldSpec, s: u32, n: usize, seed: u64) -> Result<Vec<CodeSpec>> {
    let total = count_self_dual(field.p() as u64, field.m(), s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let idx = rng.gen_biguint_below(&total);
            code_at(field, s, &idx)?.ok_or_else(|| Error::OutOfRange("sample index past the end".into()))
        })
        .collect()
}

fn xm1_power(e: usize) -> String {
    match e {
        0 => "1".to_string(),
        1 => "(x-1)".to_string(),
        _ => format!("(x-1)^{e}"),
    }
}

/// `2*(x-1)^4 + 1:2*(x-1)^5`, or `0`.
pub fn format_xm1_poly(b: &XPoly) -> String {
    let terms: Vec<String> = b
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| if i == 0 { c.to_string() } else { format!("{c}*{}", xm1_power(i)) })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

impl fmt::Display for CodeSpec {
    /// `<(x-1)^3*b(x) + u*(x-1)^2, (x-1)^7>  b(x) = 2*(x-1)^2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.k();
        let n = self.n();
        let u_term = if k == 0 { "u".to_string() } else { format!("u*{}", xm1_power(k)) };
        let first = if self.b_coeffs.is_zero() { u_term } else { format!("{}*b(x) + {u_term}", xm1_power(k + 1)) };
        if k == 0 {
            write!(f, "<{first}>")?;
        } else {
            write!(f, "<{first}, {}>", xm1_power(n - k))?;
        }
        if !self.b_coeffs.is_zero() {
            write!(f, "  b(x) = {}", format_xm1_poly(&self.b_coeffs))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::is_self_dual;

    #[test]
    fn classify_small() {
        let c = classify_cases(3, 1).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|d| d.free_param_count == 0));

        let ks: Vec<usize> = classify_cases(3, 2).unwrap().iter().map(|d| d.k).collect();
        assert_eq!(ks, vec![0, 2, 4, 1, 3]);

        let c = classify_cases(5, 1).unwrap();
        let summary: Vec<(CaseTag, usize, usize)> = c.iter().map(|d| (d.sub, d.nu, d.k)).collect();
        assert_eq!(summary, vec![(CaseTag::Unit, 0, 0), (CaseTag::EvenK, 1, 2), (CaseTag::OddK, 1, 1)]);

        assert!(classify_cases(2, 3).is_err());
        assert!(classify_cases(3, 0).is_err());
    }

    #[test]
    fn descriptor_fields_agree() {
        for &(p, s) in &[(3u64, 1u32), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1), (13, 1)] {
            let n = code_length(p, s).unwrap();
            let cases = classify_cases(p, s).unwrap();
            let mut ks: Vec<usize> = cases.iter().map(|d| d.k).collect();
            ks.sort_unstable();
            assert_eq!(ks, (0..=(n - 1) / 2).collect::<Vec<_>>());
            for d in &cases {
                assert_eq!(d.l, n - 1 - 2 * d.k);
                assert_eq!(d.delta, (n - 1) / 2 - d.k);
                assert_eq!(d.free_param_count, d.l.div_ceil(2) - d.delta.div_ceil(2));
                if d.free_param_count > 0 {
                    assert_eq!(d.j_range, (d.delta.div_ceil(2) + 1, d.l.div_ceil(2)));
                }
            }
        }
    }

    #[test]
    fn counts() {
        for m in 1..=5 {
            assert_eq!(count_self_dual(3, m, 1).unwrap(), BigUint::from(2u32));
        }
        assert_eq!(count_self_dual(3, 1, 2).unwrap(), BigUint::from(17u32));
        assert_eq!(count_self_dual(3, 1, 3).unwrap(), BigUint::from(2186u32));
        assert_eq!(count_self_dual(3, 2, 2).unwrap(), BigUint::from(101u32));
        assert_eq!(count_self_dual(5, 1, 1).unwrap(), BigUint::from(7u32));
    }

    #[test]
    fn build_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        let d0 = find_case(3, 2, 0).unwrap();
        let (a4, a6) = (f3.from_int(1), f3.from_int(2));
        let code = build_code(&d0, &[a4, a6], &f3, 2).unwrap();
        let tail: Vec<u64> = code.b_coeffs.coeffs()[4..].iter().map(|c| f3.index_of(c)).collect();
        // (2a4, a4, 2a6, a4 + 2a6) with a4 = 1, a6 = 2
        assert_eq!(tail, vec![2, 1, 1, 2]);

        let d2 = find_case(3, 2, 2).unwrap();
        let code = build_code(&d2, &[f3.one()], &f3, 2).unwrap();
        assert_eq!(code.b_coeffs, XPoly::from_ints(&f3, &[0, 0, 2, 0]));

        let d1 = find_case(3, 1, 1).unwrap();
        let code = build_code(&d1, &[], &f3, 1).unwrap();
        assert_eq!(code.to_string(), "<u*(x-1), (x-1)^2>");
        assert!(matches!(build_code(&d1, &[f3.one()], &f3, 1), Err(Error::ParamCount { expected: 0, got: 1 })));
    }

    #[test]
    fn stream_counts_and_offsets() {
        let f3 = FieldSpec::prime(3).unwrap();
        let all: Vec<CodeSpec> = CodeStream::new(&f3, 2).unwrap().collect();
        assert_eq!(all.len(), 17);
        for (i, c) in all.iter().enumerate() {
            let again = code_at(&f3, 2, &BigUint::from(i)).unwrap().unwrap();
            assert_eq!(&again, c);
        }
        assert!(code_at(&f3, 2, &BigUint::from(17u32)).unwrap().is_none());
        let shown: Vec<String> = enumerate_codes(3, 1, 1).unwrap().map(|c| c.to_string()).collect();
        assert_eq!(shown, vec!["<u>", "<u*(x-1), (x-1)^2>"]);
    }

    #[test]
    fn sampling_is_reproducible() {
        let f3 = FieldSpec::prime(3).unwrap();
        let a = sample_codes(&f3, 3, 5, 42).unwrap();
        let b = sample_codes(&f3, 3, 5, 42).unwrap();
        assert_eq!(a, b);
        let ring = ChainRing::new(f3);
        assert!(a.iter().all(|c| is_self_dual(&ring, &c.generators)));
    }

    #[test]
    fn negacyclic_image_of_small_codes() {
        let f3 = FieldSpec::prime(3).unwrap();
        let ring = ChainRing::new(f3.clone());
        for code in CodeStream::new(&f3, 1).unwrap() {
            let neg = to_negacyclic(&code);
            assert_eq!(neg.sign, RingSign::Negacyclic);
            assert!(is_self_dual(&ring, &neg));
        }
        // φ(⟨u⟩) = ⟨u⟩
        let first = CodeStream::new(&f3, 1).unwrap().next().unwrap();
        assert_eq!(to_negacyclic(&first).generators, first.generators.generators);
    }
}
