//! JSON and CSV interchange.
//!
//! JSON layout (see `docs/json-format.md`):
//!
//! * a field element is an integer array of length m, constant term first;
//! * a polynomial is `{"basis": "xm1" | "std", "coeffs": [elem, ...]}`;
//! * a generator `a(x) + u·b(x)` is `{"a": poly, "b": poly}` in the standard basis;
//! * a code is a [`CodeRecord`].

use std::io::Write;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::chainring::{RIdealGens, RVector, RingSign};
use crate::enumerator::{count_table, find_case, to_negacyclic, CaseTag, CodeSpec};
use crate::error::{Error, Result};
use crate::fieldcore::{FieldSpec, FqElem};
use crate::omega::XPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `Σ c_i (x−1)^i`
    Xm1,
    /// `Σ c_i x^i`
    Std,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub basis: Basis,
    pub coeffs: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub a: PolyRecord,
    pub b: PolyRecord,
}

/// One code as written by `enumerate`, `build` and `negacyclic`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub p: u32,
    pub m: usize,
    pub s: u32,
    /// Modulus of F_{p^m}, constant term first.
    pub modulus: Vec<u32>,
    pub ring: RingSign,
    pub case: CaseTag,
    pub nu: usize,
    pub k: usize,
    pub delta: usize,
    pub l: usize,
    pub params: Vec<Vec<u32>>,
    /// `b(x)` of the cyclic code, (x−1)-basis.
    pub b: PolyRecord,
    pub generators: Vec<GeneratorRecord>,
}

fn elem_record(e: &FqElem) -> Vec<u32> {
    e.coeffs().to_vec()
}

fn generator_records(gens: &RIdealGens) -> Vec<GeneratorRecord> {
    gens.generators
        .iter()
        .map(|g| GeneratorRecord {
            a: PolyRecord { basis: Basis::Std, coeffs: g.entries.iter().map(|e| elem_record(&e.a)).collect() },
            b: PolyRecord { basis: Basis::Std, coeffs: g.entries.iter().map(|e| elem_record(&e.b)).collect() },
        })
        .collect()
}

impl CodeRecord {
    pub fn from_code(code: &CodeSpec) -> Self {
        Self::with_generators(code, &code.generators)
    }

    /// The record of `φ(code)`, the matching negacyclic code.
    pub fn negacyclic_from_code(code: &CodeSpec) -> Self {
        Self::with_generators(code, &to_negacyclic(code))
    }

    fn with_generators(code: &CodeSpec, gens: &RIdealGens) -> Self {
        let d = &code.descriptor;
        CodeRecord {
            p: code.field.p(),
            m: code.field.m(),
            s: code.s,
            modulus: code.field.modulus().to_vec(),
            ring: gens.sign,
            case: d.sub,
            nu: d.nu,
            k: d.k,
            delta: d.delta,
            l: d.l,
            params: code.params.iter().map(elem_record).collect(),
            b: PolyRecord { basis: Basis::Xm1, coeffs: code.b_coeffs.coeffs().iter().map(elem_record).collect() },
            generators: generator_records(gens),
        }
    }

    pub fn field(&self) -> Result<FieldSpec> {
        let f = FieldSpec::new(self.p as u64, self.modulus.clone())?;
        if f.m() != self.m {
            return Err(Error::Parse(format!("modulus has degree {}, record says m = {}", f.m(), self.m)));
        }
        Ok(f)
    }

    /// The stored generators, exactly as written.
    pub fn ideal(&self) -> Result<RIdealGens> {
        let field = self.field()?;
        let n = (self.p as usize).pow(self.s);
        let parse_poly = |poly: &PolyRecord| -> Result<Vec<FqElem>> {
            if poly.basis != Basis::Std {
                return Err(Error::Parse("generators must use the std basis".into()));
            }
            poly.coeffs.iter().map(|c| field.from_coeffs(c)).collect()
        };
        let gens = self
            .generators
            .iter()
            .map(|g| Ok(RVector::from_parts(&parse_poly(&g.a)?, &parse_poly(&g.b)?)))
            .collect::<Result<Vec<_>>>()?;
        RIdealGens::new(self.ring, n, gens)
    }

    /// Rebuilds the (cyclic) code from its case and parameters and checks
    /// that the stored data agrees with it.
    pub fn to_code_spec(&self) -> Result<CodeSpec> {
        let field = self.field()?;
        let desc = find_case(self.p as u64, self.s, self.k)?;
        if desc.sub != self.case || desc.nu != self.nu || desc.delta != self.delta || desc.l != self.l {
            return Err(Error::Parse(format!("case data does not match k = {}", self.k)));
        }
        let params = self.params.iter().map(|c| field.from_coeffs(c)).collect::<Result<Vec<_>>>()?;
        let code = crate::enumerator::build_code(&desc, &params, &field, self.s)?;
        let b_stored = XPoly::new(&field, self.b.coeffs.iter().map(|c| field.from_coeffs(c)).collect::<Result<_>>()?)?;
        if self.b.basis != Basis::Xm1 || b_stored != code.b_coeffs {
            return Err(Error::Parse("stored b(x) does not match the parameters".into()));
        }
        let expected = match self.ring {
            RingSign::Cyclic => code.generators.clone(),
            RingSign::Negacyclic => to_negacyclic(&code),
        };
        if self.ideal()? != expected {
            return Err(Error::Parse("stored generators do not match the parameters".into()));
        }
        Ok(code)
    }
}

/// Parses either a JSON array of records or one record per line.
pub fn read_code_records(text: &str) -> Result<Vec<CodeRecord>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()));
    }
    trimmed
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

/// Parses `--params` text: elements separated by `,`, the m coefficients of
/// one element separated by `:` (constant term first). With m = 1 a bare
/// integer is an element. Negative integers are reduced mod p.
pub fn parse_params(field: &FieldSpec, text: &str) -> Result<Vec<FqElem>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let p = field.p() as i64;
    text.split(',')
        .map(|item| {
            let coeffs = item
                .split(':')
                .map(|c| {
                    c.trim()
                        .parse::<i64>()
                        .map(|v| v.rem_euclid(p) as u32)
                        .map_err(|_| Error::Parse(format!("bad coefficient {c:?} in {item:?}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            if coeffs.len() != field.m() {
                return Err(Error::Parse(format!("element {item:?} needs {} coefficients", field.m())));
            }
            field.from_coeffs(&coeffs)
        })
        .collect()
}

/// One row of the counting table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub p: u64,
    pub m: usize,
    pub s: u32,
    pub case: String,
    pub nu: usize,
    pub k: usize,
    pub count: String,
}

pub fn count_rows(p: u64, m: usize, s: u32) -> Result<Vec<CountRow>> {
    Ok(count_table(p, m, s)?
        .into_iter()
        .map(|(d, c)| CountRow { p, m, s, case: d.sub.as_str().to_string(), nu: d.nu, k: d.k, count: c.to_string() })
        .collect())
}

/// Writes a CSV table with header `p,m,s,case,nu,k,count`.
pub fn write_count_csv<W: Write>(out: W, rows: &[CountRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Parse(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))
}

pub fn total_of(rows: &[CountRow]) -> BigUint {
    rows.iter().map(|r| r.count.parse::<BigUint>().expect("decimal count")).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerator::CodeStream;
    use crate::fieldcore::find_irreducible;

    #[test]
    fn record_round_trip() {
        let f9 = find_irreducible(3, 2).unwrap();
        for code in CodeStream::new(&f9, 2).unwrap().step_by(7) {
            let rec = CodeRecord::from_code(&code);
            let text = serde_json::to_string(&rec).unwrap();
            let back: CodeRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_code_spec().unwrap(), code);
            let neg = CodeRecord::negacyclic_from_code(&code);
            assert_eq!(neg.to_code_spec().unwrap(), code);
            assert_eq!(neg.ideal().unwrap(), to_negacyclic(&code));
        }
    }

    #[test]
    fn tampered_record_is_rejected() {
        let f3 = FieldSpec::prime(3).unwrap();
        let code = CodeStream::new(&f3, 2).unwrap().nth(3).unwrap();
        let mut rec = CodeRecord::from_code(&code);
        rec.generators[0].b.coeffs[0] = vec![(rec.generators[0].b.coeffs[0][0] + 1) % 3];
        assert!(rec.to_code_spec().is_err());
    }

    #[test]
    fn json_lines_and_arrays() {
        let f3 = FieldSpec::prime(3).unwrap();
        let recs: Vec<CodeRecord> = CodeStream::new(&f3, 1).unwrap().map(|c| CodeRecord::from_code(&c)).collect();
        let array = serde_json::to_string(&recs).unwrap();
        assert_eq!(read_code_records(&array).unwrap(), recs);
        let lines: String = recs.iter().map(|r| serde_json::to_string(r).unwrap() + "\n").collect();
        assert_eq!(read_code_records(&lines).unwrap(), recs);
    }

    #[test]
    fn params_syntax() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(parse_params(&f3, "1, -1").unwrap(), vec![f3.one(), f3.from_int(2)]);
        assert!(parse_params(&f3, "").unwrap().is_empty());
        assert!(parse_params(&f3, "1:0").is_err());
        let f9 = find_irreducible(3, 2).unwrap();
        let e = parse_params(&f9, "0:1,2:2").unwrap();
        assert_eq!(e[0].coeffs(), &[0, 1]);
        assert_eq!(e[1].coeffs(), &[2, 2]);
        assert!(parse_params(&f9, "1").is_err());
        assert!(parse_params(&f9, "x:1").is_err());
    }

    #[test]
    fn csv_table() {
        let rows = count_rows(3, 1, 2).unwrap();
        assert_eq!(total_of(&rows), BigUint::from(17u32));
        let mut buf = Vec::new();
        write_count_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("p,m,s,case,nu,k,count\n3,1,2,unit,0,0,9\n"));
    }
}
