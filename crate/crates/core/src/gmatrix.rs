//! Dense matrices over F_p and the reciprocal-map matrices G_{p^λ}, G_l.
//!
//! G_{p^λ} is lower triangular with entries `(−1)^{j−1} C(p^λ − j, i − j) mod p`.
//! It can be built entry by entry or as the Kronecker power
//! `G_p ⊗ G_p ⊗ ... ⊗ G_p`; both routes are exposed and must agree.
//! G_l is its upper-left l × l block, with λ the least positive integer
//! such that l ≤ p^λ.

use std::fmt;

use crate::binomial::LucasTable;
use crate::error::{Error, Result};

/// Largest p^λ the G builders accept unless a cap is passed explicitly.
pub const DEFAULT_SIZE_CAP: u64 = 2048;

/// Row-major dense matrix with entries in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixFp {
    p: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl MatrixFp {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        MatrixFp { p, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds from signed integer rows, reducing each entry mod p.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows.iter().flatten().map(|&v| v.rem_euclid(p as i64) as u32).collect();
        Ok(MatrixFp { p, rows: r, cols: c, entries })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| ((i + 1)..self.cols).all(|j| self.get(i, j) == 0))
    }

    fn check_same_shape(&self, other: &MatrixFp) -> Result<()> {
        if self.p != other.p {
            return Err(Error::CharacteristicMismatch(self.p, other.p));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MatrixFp) -> Result<MatrixFp> {
        self.check_same_shape(other)?;
        let p = self.p;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| (a + b) % p).collect();
        Ok(MatrixFp { entries, ..*self })
    }

    pub fn sub(&self, other: &MatrixFp) -> Result<MatrixFp> {
        self.check_same_shape(other)?;
        let p = self.p;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| (a + p - b) % p).collect();
        Ok(MatrixFp { entries, ..*self })
    }

    /// `self + c·I` for a square matrix, with `c` a signed scalar.
    pub fn shift_diagonal(&self, c: i64) -> MatrixFp {
        assert_eq!(self.rows, self.cols, "shift_diagonal needs a square matrix");
        let mut out = self.clone();
        let c = c.rem_euclid(self.p as i64) as u32;
        for i in 0..self.rows {
            let v = (out.get(i, i) + c) % self.p;
            out.set(i, i, v);
        }
        out
    }

    pub fn mul(&self, other: &MatrixFp) -> Result<MatrixFp> {
        if self.p != other.p {
            return Err(Error::CharacteristicMismatch(self.p, other.p));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p as u64;
        let mut out = MatrixFp::zeros(self.p, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a * other.get(k, j) as u64) % p;
                }
            }
            for (j, &v) in acc.iter().enumerate() {
                out.entries[i * other.cols + j] = v as u32;
            }
        }
        Ok(out)
    }

    /// Kronecker product `(a_ij · B)`.
    pub fn kron(&self, other: &MatrixFp) -> Result<MatrixFp> {
        if self.p != other.p {
            return Err(Error::CharacteristicMismatch(self.p, other.p));
        }
        let (rows, cols) = (self.rows * other.rows, self.cols * other.cols);
        let p = self.p as u64;
        let mut out = MatrixFp::zeros(self.p, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j) as u64;
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    let base = (i * other.rows + k) * cols + j * other.cols;
                    for (slot, &b) in out.entries[base..base + other.cols].iter_mut().zip(other.row(k)) {
                        *slot = (a * b as u64 % p) as u32;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Upper-left `l × l` block.
    pub fn truncate(&self, l: usize) -> Result<MatrixFp> {
        if l < 1 || l > self.rows || l > self.cols {
            return Err(Error::OutOfRange(format!("truncation size {l} for a {}x{} matrix", self.rows, self.cols)));
        }
        let mut out = MatrixFp::zeros(self.p, l, l);
        for i in 0..l {
            out.entries[i * l..(i + 1) * l].copy_from_slice(&self.row(i)[..l]);
        }
        Ok(out)
    }

    /// Rank over F_p by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let p = self.p as u64;
        let mut a = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for j in 0..cols {
                    a.swap(pivot * cols + j, rank * cols + j);
                }
            }
            let inv = inv_mod_p(a[rank * cols + col] as u64, p);
            for r in (rank + 1)..rows {
                let f = a[r * cols + col] as u64;
                if f == 0 {
                    continue;
                }
                let factor = f * inv % p;
                for j in col..cols {
                    let s = factor * a[rank * cols + j] as u64 % p;
                    a[r * cols + j] = ((a[r * cols + j] as u64 + p - s) % p) as u32;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Residues printed as signed representatives in `(−p/2, p/2]`.
    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        let half = self.p / 2;
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&v| if v > half { v as i64 - self.p as i64 } else { v as i64 }).collect())
            .collect()
    }
}

impl fmt::Display for MatrixFp {
    /// Right-aligned grid of residues in `[0, p)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn inv_mod_p(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn checked_size(p: u32, lam: u32, cap: u64) -> Result<usize> {
    if p.is_multiple_of(2) || !crate::fieldcore::is_prime(p as u64) {
        return Err(Error::BadCharacteristic(p as u64));
    }
    let size = (p as u64).checked_pow(lam).unwrap_or(u64::MAX);
    if size > cap {
        return Err(Error::TooLarge { size, cap });
    }
    Ok(size as usize)
}

/// G_{p^λ} entry by entry from the binomial formula.
pub fn build_g_direct(p: u32, lam: u32) -> Result<MatrixFp> {
    build_g_direct_capped(p, lam, DEFAULT_SIZE_CAP)
}

pub fn build_g_direct_capped(p: u32, lam: u32, cap: u64) -> Result<MatrixFp> {
    let n = checked_size(p, lam, cap)?;
    let table = LucasTable::new(p);
    let mut g = MatrixFp::zeros(p, n, n);
    for i in 1..=n {
        for j in 1..=i {
            g.entries[(i - 1) * n + (j - 1)] = table.g_entry(lam, i as u64, j as u64)?;
        }
    }
    Ok(g)
}

/// G_{p^λ} as the λ-fold Kronecker power of G_p (G_{p^0} = [1]).
pub fn build_g_kron(p: u32, lam: u32) -> Result<MatrixFp> {
    build_g_kron_capped(p, lam, DEFAULT_SIZE_CAP)
}

pub fn build_g_kron_capped(p: u32, lam: u32, cap: u64) -> Result<MatrixFp> {
    checked_size(p, lam, cap)?;
    if lam == 0 {
        return Ok(MatrixFp::identity(p, 1));
    }
    let gp = build_g_direct(p, 1)?;
    let mut g = gp.clone();
    for _ in 1..lam {
        g = gp.kron(&g)?;
    }
    Ok(g)
}

/// G_{p^λ}, via the Kronecker route for λ ≥ 2.
pub fn build_g(p: u32, lam: u32) -> Result<MatrixFp> {
    if lam >= 2 {
        build_g_kron(p, lam)
    } else {
        build_g_direct(p, lam)
    }
}

/// Least positive λ with `l ≤ p^λ`.
pub fn level_for(p: u32, l: usize) -> u32 {
    let mut lam = 1u32;
    let mut size = p as u64;
    while size < l as u64 {
        lam += 1;
        size *= p as u64;
    }
    lam
}

/// Upper-left `l × l` block of `g`.
pub fn truncate_g(g: &MatrixFp, l: usize) -> Result<MatrixFp> {
    g.truncate(l)
}

/// G_l for the least admissible level.
pub fn g_for_len(p: u32, l: usize) -> Result<MatrixFp> {
    if l == 0 {
        return Err(Error::OutOfRange("G_l needs l ≥ 1".into()));
    }
    build_g(p, level_for(p, l))?.truncate(l)
}

pub fn rank_fp(m: &MatrixFp) -> usize {
    m.rank()
}

/// A column `Υ_{2j−1}` of `G_l + I_l`, restricted to rows `δ+1..=l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpsilonVec {
    pub values: Vec<u32>,
    /// The odd column index 2j − 1 (1-based).
    pub source_index: usize,
    pub delta: usize,
    pub l: usize,
}

/// Valid `j` for truncation offset `delta`: `⌈δ/2⌉ + 1 ..= ⌈l/2⌉` (may be empty).
pub fn upsilon_range(l: usize, delta: usize) -> std::ops::RangeInclusive<usize> {
    (delta.div_ceil(2) + 1)..=l.div_ceil(2)
}

/// `Υ_{2j−1}^{[δ;l)}` from `g_l` (the l × l matrix G_l, not G_l + I_l).
pub fn upsilon(g_l: &MatrixFp, j: usize, delta: usize) -> Result<UpsilonVec> {
    let l = g_l.rows();
    if g_l.cols() != l {
        return Err(Error::DimensionMismatch("G_l must be square".into()));
    }
    if delta >= l {
        return Err(Error::OutOfRange(format!("delta {delta} must be below l = {l}")));
    }
    if !upsilon_range(l, delta).contains(&j) {
        return Err(Error::OutOfRange(format!(
            "j = {j} outside {:?} for l = {l}, delta = {delta}",
            upsilon_range(l, delta)
        )));
    }
    let col = 2 * j - 2;
    let p = g_l.p();
    let values = (delta..l)
        .map(|i| {
            let v = g_l.get(i, col);
            if i == col {
                (v + 1) % p
            } else {
                v
            }
        })
        .collect();
    Ok(UpsilonVec { values, source_index: 2 * j - 1, delta, l })
}
