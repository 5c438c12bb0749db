//! Embedded data tables (favorable quintics, genus-2 curves, extended polynomials) with pinned checksums.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::exact_core::IntPoly;
use crate::{Error, Result};

pub const TABLE1_CSV: &str = include_str!("../fixtures/table1.csv");
pub const TABLE2_CSV: &str = include_str!("../fixtures/table2.csv");
pub const TABLE5_CSV: &str = include_str!("../fixtures/table5.csv");

pub const TABLE1_SHA256: &str = "35f34eb6849f39d271659e8c3d5e3abf5b5c12ca4b9add254cdb5ae241de3736";
pub const TABLE2_SHA256: &str = "e3fd7d190c2511007eb7ddd260c6a098679fbda6fd68445cb7b5b10f118a3d20";
pub const TABLE5_SHA256: &str = "546b13c7d1922781823390a9dfe13510f7a66843e3e7d86130c65799d17462e3";

pub fn sha256_hex(data: &[u8]) -> String {
    Sha256::digest(data).iter().map(|b| format!("{b:02x}")).collect()
}

/// A favorable quintic: index, defining polynomial, conductor, amiability mark, attached curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub index: usize,
    pub f: IntPoly,
    pub n: u64,
    pub alpha: bool,
    pub curves: Vec<String>,
}

/// A genus-2 curve `y^2 = g(x)` with the index of its 2-division quintic field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Row {
    pub index: usize,
    pub field: usize,
    pub g: IntPoly,
    pub n: u64,
    pub alpha: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table5Row {
    pub p: IntPoly,
    pub n: u64,
}

#[derive(Deserialize)]
struct Raw1 {
    #[serde(rename = "#F0")]
    index: usize,
    f: String,
    #[serde(rename = "N")]
    n: u64,
    epsilon: String,
    #[serde(rename = "#C")]
    curves: String,
}

#[derive(Deserialize)]
struct Raw2 {
    #[serde(rename = "#C")]
    index: usize,
    #[serde(rename = "#F0")]
    field: usize,
    g: String,
    #[serde(rename = "N")]
    n: u64,
    epsilon: String,
}

#[derive(Deserialize)]
struct Raw5 {
    #[serde(rename = "P")]
    p: String,
    #[serde(rename = "N")]
    n: u64,
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

fn mark(s: &str) -> Result<bool> {
    match s.trim() {
        "alpha" => Ok(true),
        "" => Ok(false),
        other => Err(Error::Parse(format!("unknown epsilon mark {other:?}"))),
    }
}

pub fn parse_table1(text: &str) -> Result<Vec<Table1Row>> {
    let mut out = Vec::new();
    for rec in reader(text).deserialize::<Raw1>() {
        let r = rec.map_err(csv_err)?;
        let curves = r.curves.split(';').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
        out.push(Table1Row { index: r.index, f: IntPoly::parse(&r.f)?, n: r.n, alpha: mark(&r.epsilon)?, curves });
    }
    Ok(out)
}

pub fn parse_table2(text: &str) -> Result<Vec<Table2Row>> {
    let mut out = Vec::new();
    for rec in reader(text).deserialize::<Raw2>() {
        let r = rec.map_err(csv_err)?;
        out.push(Table2Row {
            index: r.index,
            field: r.field,
            g: IntPoly::parse(&r.g)?,
            n: r.n,
            alpha: mark(&r.epsilon)?,
        });
    }
    Ok(out)
}

pub fn parse_table5(text: &str) -> Result<Vec<Table5Row>> {
    let mut out = Vec::new();
    for rec in reader(text).deserialize::<Raw5>() {
        let r = rec.map_err(csv_err)?;
        out.push(Table5Row { p: IntPoly::parse(&r.p)?, n: r.n });
    }
    Ok(out)
}

pub fn table1() -> Vec<Table1Row> {
    parse_table1(TABLE1_CSV).expect("embedded table 1 parses")
}

pub fn table2() -> Vec<Table2Row> {
    parse_table2(TABLE2_CSV).expect("embedded table 2 parses")
}

pub fn table5() -> Vec<Table5Row> {
    parse_table5(TABLE5_CSV).expect("embedded table 5 parses")
}

/// Checksums of the embedded tables against their pinned values.
pub fn verify_checksums() -> Vec<(&'static str, bool)> {
    vec![
        ("table1", sha256_hex(TABLE1_CSV.as_bytes()) == TABLE1_SHA256),
        ("table2", sha256_hex(TABLE2_CSV.as_bytes()) == TABLE2_SHA256),
        ("table5", sha256_hex(TABLE5_CSV.as_bytes()) == TABLE5_SHA256),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_load() {
        assert!(verify_checksums().iter().all(|(_, ok)| *ok));
        let t1 = table1();
        assert_eq!(t1.len(), 172);
        assert_eq!(t1[0].n, 277);
        assert!(t1[0].alpha);
        assert_eq!(t1.iter().filter(|r| r.alpha).count(), 90);
        let t2 = table2();
        assert_eq!(t2.len(), 75);
        assert_eq!(t2[0].g, IntPoly::from_i64(&[1, -4, 8, -8, 0, 4]));
        assert_eq!(table5().len(), 10);
    }
}
