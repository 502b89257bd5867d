//! Binomial coefficients modulo a prime, and the entries of G_{p^λ}.

use crate::error::{Error, Result};

/// Pascal's triangle mod p for arguments below p, the per-digit table used
/// by Lucas's theorem.
#[derive(Clone, Debug)]
pub struct LucasTable {
    p: u32,
    table: Vec<u32>,
}

impl LucasTable {
    pub fn new(p: u32) -> Self {
        let n = p as usize;
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            table[i * n] = 1;
            for j in 1..=i {
                table[i * n + j] = (table[(i - 1) * n + j - 1] + table[(i - 1) * n + j]) % p;
            }
        }
        LucasTable { p, table }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// C(n, k) mod p; zero when k > n.
    pub fn binom(&self, mut n: u64, mut k: u64) -> u32 {
        let p = self.p as u64;
        let w = self.p as usize;
        let mut acc = 1u64;
        while k > 0 {
            let (ni, ki) = ((n % p) as usize, (k % p) as usize);
            if ki > ni {
                return 0;
            }
            acc = acc * self.table[ni * w + ki] as u64 % p;
            n /= p;
            k /= p;
        }
        acc as u32
    }

    /// Entry (i, j) of G_{p^λ}, 1-based: `(−1)^{j−1} C(p^λ − j, i − j) mod p`
    /// for `j ≤ i`, zero above the diagonal.
    pub fn g_entry(&self, lam: u32, i: u64, j: u64) -> Result<u32> {
        let size = (self.p as u64).checked_pow(lam).ok_or_else(|| Error::OutOfRange(format!("p^{lam} overflows")))?;
        if i < 1 || j < 1 || i > size || j > size {
            return Err(Error::OutOfRange(format!("({i}, {j}) outside 1..={size}")));
        }
        if j > i {
            return Ok(0);
        }
        let c = self.binom(size - j, i - j);
        Ok(if (j - 1) % 2 == 1 && c != 0 { self.p - c } else { c })
    }
}

/// C(n, k) mod p by Lucas's theorem. `p` must be prime.
pub fn binom_mod_p(n: u64, k: u64, p: u32) -> u32 {
    LucasTable::new(p).binom(n, k)
}

/// Entry (i, j) of G_{p^λ} (1-based indices).
pub fn g_entry(p: u32, lam: u32, i: u64, j: u64) -> Result<u32> {
    LucasTable::new(p).g_entry(lam, i, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Pascal's triangle over the integers reduced mod p row by row.
    fn pascal_oracle(max: usize, p: u32) -> Vec<Vec<u32>> {
        let mut rows = vec![vec![1u32]];
        for n in 1..=max {
            let prev = &rows[n - 1];
            let mut row = vec![1u32; n + 1];
            for k in 1..n {
                row[k] = (prev[k - 1] + prev[k]) % p;
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn lucas_matches_pascal_exhaustively() {
        for &p in &[3u32, 5, 7] {
            let table = LucasTable::new(p);
            let oracle = pascal_oracle(200, p);
            for n in 0..=200u64 {
                for k in 0..=200u64 {
                    let expected = if k > n { 0 } else { oracle[n as usize][k as usize] };
                    assert_eq!(table.binom(n, k), expected, "C({n},{k}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn spot_values() {
        // C(7,2) = 21, C(4,2) = 6
        assert_eq!(binom_mod_p(7, 2, 3), 0);
        assert_eq!(binom_mod_p(4, 2, 3), 0);
        assert_eq!(binom_mod_p(12345, 0, 5), 1);
        assert_eq!(binom_mod_p(3, 5, 7), 0);
    }

    #[test]
    fn g3_entries() {
        assert_eq!(g_entry(3, 1, 2, 1).unwrap(), 2);
        assert_eq!(g_entry(3, 1, 1, 1).unwrap(), 1);
        assert_eq!(g_entry(3, 1, 3, 2).unwrap(), 2);
        assert_eq!(g_entry(3, 1, 1, 3).unwrap(), 0);
        assert!(g_entry(3, 1, 4, 1).is_err());
        assert!(g_entry(3, 1, 0, 1).is_err());
    }

    #[test]
    fn diagonal_alternates() {
        for &p in &[3u32, 5, 7] {
            let t = LucasTable::new(p);
            for lam in 1..=3u32 {
                for i in 1..=(p as u64).pow(lam) {
                    let expected = if i % 2 == 1 { 1 } else { p - 1 };
                    assert_eq!(t.g_entry(lam, i, i).unwrap(), expected);
                }
            }
        }
    }
}
