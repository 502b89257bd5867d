//! Exact arithmetic in F_p and F_{p^m}.
//!
//! An element of F_{p^m} = F_p[θ]/(f(θ)) is stored as its coefficient
//! vector `(c_0, ..., c_{m-1})` in the power basis of θ, constant term first.
//! Every residue lives in `[0, p)`; in particular −1 is stored as `p − 1`.
//!
//! Elements are numbered by their base-p value `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`.
//! That numbering fixes the enumeration order of [`FieldSpec::elements`] and
//! the search order of [`find_irreducible`].

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Coefficient storage; degree ≤ 4 extensions stay on the stack.
pub type Coeffs = SmallVec<[u32; 4]>;

/// An element of F_{p^m}, relative to some [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem {
    coeffs: Coeffs,
}

impl FqElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FqElem {
    /// `2` for a prime-field element, `1:0:2` (constant term first) otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The field F_{p^m} given by a monic irreducible modulus over F_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    m: usize,
    /// Monic, degree m, constant term first (length m + 1).
    modulus: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn check_odd_prime(p: u64) -> Result<u32> {
    if p.is_multiple_of(2) || !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::BadCharacteristic(p));
    }
    Ok(p as u32)
}

/// Returns the monic irreducible polynomial of degree `m` over F_p whose
/// lower coefficients `(c_0, ..., c_{m-1})`, read as a base-p number with
/// `c_0` least significant, are smallest.
///
/// For `m = 1` this is always `x`, so F_{p^1} is F_p with θ = 0.
pub fn find_irreducible(p: u64, m: usize) -> Result<FieldSpec> {
    let p = check_odd_prime(p)?;
    if m < 1 {
        return Err(Error::BadDegree);
    }
    let mut lower = vec![0u32; m];
    loop {
        let mut f = lower.clone();
        f.push(1);
        if poly::is_irreducible(&f, p) {
            return Ok(FieldSpec { p, m, modulus: f });
        }
        // Irreducibles of every degree exist, so the odometer never wraps.
        let mut i = 0;
        loop {
            lower[i] += 1;
            if lower[i] < p {
                break;
            }
            lower[i] = 0;
            i += 1;
        }
    }
}

impl FieldSpec {
    /// Validates `modulus` (constant term first) and builds the field.
    pub fn new(p: u64, modulus: Vec<u32>) -> Result<Self> {
        let p = check_odd_prime(p)?;
        if modulus.len() < 2 {
            return Err(Error::BadDegree);
        }
        let m = modulus.len() - 1;
        if modulus[m] != 1 || modulus.iter().any(|&c| c >= p) || !poly::is_irreducible(&modulus, p) {
            return Err(Error::BadModulus(m));
        }
        Ok(FieldSpec { p, m, modulus })
    }

    /// The prime field F_p itself.
    pub fn prime(p: u64) -> Result<Self> {
        find_irreducible(p, 1)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `p^m`, or `None` if it does not fit in a `u64`.
    pub fn order(&self) -> Option<u64> {
        (self.p as u64).checked_pow(self.m as u32)
    }

    pub fn zero(&self) -> FqElem {
        FqElem { coeffs: SmallVec::from_elem(0, self.m) }
    }

    pub fn one(&self) -> FqElem {
        self.from_int(1)
    }

    /// Embeds an integer through F_p.
    pub fn from_int(&self, n: i64) -> FqElem {
        let mut e = self.zero();
        e.coeffs[0] = n.rem_euclid(self.p as i64) as u32;
        e
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FqElem> {
        if coeffs.len() != self.m || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::BadElement(coeffs.to_vec()));
        }
        Ok(FqElem { coeffs: coeffs.iter().copied().collect() })
    }

    /// Element number `index` in enumeration order.
    pub fn from_index(&self, mut index: u64) -> FqElem {
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = (index % self.p as u64) as u32;
            index /= self.p as u64;
        }
        e
    }

    pub fn index_of(&self, a: &FqElem) -> u64 {
        a.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    pub fn contains(&self, a: &FqElem) -> bool {
        a.coeffs.len() == self.m && a.coeffs.iter().all(|&c| c < self.p)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let p = self.p;
        FqElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| add_mod(x, y, p)).collect() }
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let p = self.p;
        FqElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| add_mod(x, p - y, p)).collect() }
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        let p = self.p;
        FqElem { coeffs: a.coeffs.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect() }
    }

    /// Multiplication by an F_p scalar (a residue in `[0, p)`).
    pub fn scale(&self, a: &FqElem, c: u32) -> FqElem {
        let p = self.p as u64;
        FqElem { coeffs: a.coeffs.iter().map(|&x| (x as u64 * c as u64 % p) as u32).collect() }
    }

    /// `acc += a * c` for an F_p scalar `c`.
    pub fn add_scaled_assign(&self, acc: &mut FqElem, a: &FqElem, c: u32) {
        if c == 0 {
            return;
        }
        let p = self.p as u64;
        for (x, &y) in acc.coeffs.iter_mut().zip(&a.coeffs) {
            *x = ((*x as u64 + y as u64 * c as u64) % p) as u32;
        }
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let p = self.p as u64;
        let m = self.m;
        if m == 1 {
            return FqElem { coeffs: SmallVec::from_elem((a.coeffs[0] as u64 * b.coeffs[0] as u64 % p) as u32, 1) };
        }
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // θ^m = −(f_0 + f_1 θ + ... + f_{m-1} θ^{m-1})
        for d in (m..2 * m - 1).rev() {
            let top = prod[d];
            if top == 0 {
                continue;
            }
            for (i, &fi) in self.modulus[..m].iter().enumerate() {
                let sub = top * fi as u64 % p;
                prod[d - m + i] = (prod[d - m + i] + p - sub) % p;
            }
        }
        FqElem { coeffs: prod[..m].iter().map(|&c| c as u32).collect() }
    }

    pub fn pow(&self, a: &FqElem, mut e: u64) -> FqElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in F_p[θ].
    pub fn inv(&self, a: &FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = poly::inverse_mod(&a.coeffs, &self.modulus, self.p);
        let mut coeffs: Coeffs = inv.into_iter().collect();
        coeffs.resize(self.m, 0);
        Ok(FqElem { coeffs })
    }

    pub fn div(&self, a: &FqElem, b: &FqElem) -> Result<FqElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// All `p^m` elements, starting at 0, in index order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        let q = self.order().expect("field too large to enumerate");
        (0..q).map(move |i| self.from_index(i))
    }
}

#[inline]
fn add_mod(x: u32, y: u32, p: u32) -> u32 {
    let s = x as u64 + y as u64;
    if s >= p as u64 {
        (s - p as u64) as u32
    } else {
        s as u32
    }
}

/// Dense polynomials over F_p, constant term first, no trailing zeros.
mod poly {
    fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_p(a: u32, p: u32) -> u32 {
        // p is prime: a^{p-2}
        let (mut base, mut e, mut acc) = (a as u64, p as u64 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        acc as u32
    }

    fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0) as u64;
                let y = b.get(i).copied().unwrap_or(0) as u64;
                ((x + p as u64 - y) % p as u64) as u32
            })
            .collect();
        trim(out)
    }

    fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }

    /// Returns (quotient, remainder).
    fn divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = inv_p(*b.last().unwrap(), p) as u64;
        let mut q = vec![0u32; r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = (*r.last().unwrap() as u64 * lead_inv % p as u64) as u32;
            q[shift] = c;
            for (i, &bi) in b.iter().enumerate() {
                let s = c as u64 * bi as u64 % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - s) % p as u64) as u32;
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        divrem(a, b, p).1
    }

    fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    fn powmod(base: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
        let mut acc = vec![1u32];
        let mut b = rem(base, f, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), f, p);
            }
            b = rem(&mul(&b, &b, p), f, p);
            e >>= 1;
        }
        acc
    }

    /// Ben-Or: a monic `f` of degree m is irreducible iff
    /// gcd(f, x^{p^i} − x) = 1 for every 1 ≤ i ≤ m/2.
    pub(super) fn is_irreducible(f: &[u32], p: u32) -> bool {
        let f = trim(f.to_vec());
        let m = f.len().saturating_sub(1);
        if m == 0 {
            return false;
        }
        if m == 1 {
            return true;
        }
        let x = vec![0u32, 1];
        let mut h = x.clone();
        for _ in 1..=m / 2 {
            h = powmod(&h, p as u64, &f, p);
            let g = gcd(&f, &sub(&h, &x, p), p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }

    /// Inverse of `a` modulo irreducible `f`; `a` must be nonzero mod f.
    pub(super) fn inverse_mod(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        let (mut r0, mut r1) = (trim(f.to_vec()), rem(a, f, p));
        let (mut s0, mut s1) = (Vec::<u32>::new(), vec![1u32]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let s = sub(&s0, &mul(&q, &s1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant
        let c = inv_p(r0[0], p);
        trim(s0.into_iter().map(|x| (x as u64 * c as u64 % p as u64) as u32).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_search_small_cases() {
        assert_eq!(find_irreducible(3, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(find_irreducible(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(find_irreducible(5, 2).unwrap().modulus(), &[2, 0, 1]);
    }

    #[test]
    fn irreducible_search_matches_root_check() {
        // Degree 2 and 3 polynomials are irreducible iff they have no root.
        for &p in &[3u32, 5, 7] {
            for m in 2..=3usize {
                let f = find_irreducible(p as u64, m).unwrap();
                let has_root = |c: &[u32]| {
                    (0..p as u64).any(|x| c.iter().rev().fold(0u64, |acc, &ci| (acc * x + ci as u64) % p as u64) == 0)
                };
                assert!(!has_root(f.modulus()));
                // every smaller candidate has a root
                let target = f.modulus()[..m].iter().rev().fold(0u64, |a, &c| a * p as u64 + c as u64);
                for idx in 0..target {
                    let mut c: Vec<u32> =
                        (0..m).map(|i| ((idx / (p as u64).pow(i as u32)) % p as u64) as u32).collect();
                    c.push(1);
                    assert!(has_root(&c), "p={p} m={m} candidate {c:?} skipped");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(find_irreducible(2, 1), Err(Error::BadCharacteristic(2)));
        assert_eq!(find_irreducible(9, 1), Err(Error::BadCharacteristic(9)));
        assert_eq!(find_irreducible(3, 0), Err(Error::BadDegree));
        assert_eq!(FieldSpec::new(3, vec![2, 0, 1]), Err(Error::BadModulus(2)));
        assert!(FieldSpec::new(3, vec![1, 0, 1]).is_ok());
    }

    #[test]
    fn arithmetic_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.add(&f3.from_int(2), &f3.from_int(2)), f3.from_int(1));
        assert_eq!(f3.inv(&f3.from_int(2)).unwrap(), f3.from_int(2));
        assert_eq!(f3.inv(&f3.zero()), Err(Error::DivisionByZero));

        let f9 = find_irreducible(3, 2).unwrap();
        let x = f9.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f9.mul(&x, &x), f9.from_int(2));
    }

    #[test]
    fn enumeration_order() {
        let f3 = FieldSpec::prime(3).unwrap();
        let all: Vec<_> = f3.elements().collect();
        assert_eq!(all, vec![f3.from_int(0), f3.from_int(1), f3.from_int(2)]);
        let f9 = find_irreducible(3, 2).unwrap();
        let all: Vec<_> = f9.elements().collect();
        assert_eq!(all.len(), 9);
        assert!(all[0].is_zero());
        assert_eq!(all[8].coeffs(), &[2, 2]);
        assert_eq!(find_irreducible(5, 2).unwrap().elements().count(), 25);
        for (i, e) in all.iter().enumerate() {
            assert_eq!(f9.index_of(e), i as u64);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for &(p, m) in &[(3u64, 1usize), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2)] {
            let f = find_irreducible(p, m).unwrap();
            let q = f.order().unwrap();
            if q > 125 {
                continue;
            }
            let elems: Vec<_> = f.elements().collect();
            for a in &elems {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, &f.inv(a).unwrap()), f.one());
                    assert_eq!(f.pow(a, q - 1), f.one());
                }
                assert_eq!(f.add(a, &f.neg(a)), f.zero());
                for b in &elems {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(&f.add(a, b), b), *a);
                }
            }
        }
    }

    #[test]
    fn deterministic_search() {
        assert_eq!(find_irreducible(7, 3).unwrap(), find_irreducible(7, 3).unwrap());
    }

    #[test]
    fn display_uses_colon_tuples() {
        let f9 = find_irreducible(3, 2).unwrap();
        assert_eq!(f9.from_coeffs(&[1, 2]).unwrap().to_string(), "1:2");
        assert_eq!(FieldSpec::prime(5).unwrap().from_int(-1).to_string(), "4");
    }
}
