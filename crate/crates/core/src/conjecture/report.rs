//! Report formats.
//!
//! Scan rows:    `function,smallest_composite_n,value,factorization,primes_before`
//! Witnesses:    `function,n,value,factorization,provenance`
//!
//! Factorizations use `p1^e1*p2^e2`, with `*C<value>` appended for an
//! unresolved composite cofactor. Empty cells mean "none". JSON output is
//! an array of objects with the same field names; big integers are strings.
//! Output depends only on the rows, so identical inputs give identical bytes.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use super::{CompositeWitness, Provenance, ScanRow};
use crate::expr::NaturalExpr;

pub const SCAN_CSV_HEADER: [&str; 5] = ["function", "smallest_composite_n", "value", "factorization", "primes_before"];
pub const WITNESS_CSV_HEADER: [&str; 5] = ["function", "n", "value", "factorization", "provenance"];

pub(crate) fn big_as_string<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Serialize)]
struct ScanRecord<'a> {
    function: &'a str,
    smallest_composite_n: Option<u64>,
    value: Option<String>,
    factorization: Option<String>,
    primes_before: u64,
}

impl<'a> From<&'a ScanRow> for ScanRecord<'a> {
    fn from(row: &'a ScanRow) -> Self {
        ScanRecord {
            function: &row.function,
            smallest_composite_n: row.smallest_composite_index,
            value: row.composite_value.as_ref().map(|v| v.to_string()),
            factorization: row.factorization.as_ref().map(|f| f.to_report_string()),
            primes_before: row.primes_before,
        }
    }
}

/// A witness together with the function it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub function: String,
    pub n: u64,
    #[serde(serialize_with = "big_as_string")]
    pub value: BigUint,
    pub factorization: String,
    pub provenance: Provenance,
}

impl WitnessRecord {
    pub fn new(expr: &NaturalExpr, witness: &CompositeWitness) -> Self {
        WitnessRecord {
            function: expr.render(),
            n: witness.index,
            value: witness.value.clone(),
            factorization: witness.factorization.to_report_string(),
            provenance: witness.provenance.clone(),
        }
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn write_csv(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn format_scan_csv(rows: &[ScanRow]) -> String {
    write_csv(
        &SCAN_CSV_HEADER,
        rows.iter().map(|r| {
            vec![
                r.function.clone(),
                opt(&r.smallest_composite_index),
                opt(&r.composite_value),
                r.factorization.as_ref().map(|f| f.to_report_string()).unwrap_or_default(),
                r.primes_before.to_string(),
            ]
        }),
    )
}

pub fn format_scan_json(rows: &[ScanRow]) -> String {
    let records: Vec<ScanRecord<'_>> = rows.iter().map(ScanRecord::from).collect();
    serde_json::to_string_pretty(&records).expect("plain data") + "\n"
}

pub fn format_scan_table(rows: &[ScanRow]) -> String {
    let header = ["function", "n", "primes before", "value", "factorization"];
    let body: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            let factorization = match (&r.factorization, r.budget_exceeded_at) {
                (Some(f), _) if f.primes.is_empty() && f.unresolved.is_none() => "(unit)".to_string(),
                (Some(f), _) => f.to_pretty_string(),
                (None, Some(n)) => format!("(budget exceeded at n = {n})"),
                (None, None) => "(all prime)".to_string(),
            };
            [
                r.function.clone(),
                opt(&r.smallest_composite_index),
                r.primes_before.to_string(),
                opt(&r.composite_value),
                factorization,
            ]
        })
        .collect();
    align(&header, &body)
}

pub fn format_witness_csv(records: &[WitnessRecord]) -> String {
    write_csv(
        &WITNESS_CSV_HEADER,
        records.iter().map(|r| {
            vec![
                r.function.clone(),
                r.n.to_string(),
                r.value.to_string(),
                r.factorization.clone(),
                r.provenance.to_string(),
            ]
        }),
    )
}

pub fn format_witness_json(records: &[WitnessRecord]) -> String {
    serde_json::to_string_pretty(records).expect("plain data") + "\n"
}

pub fn format_witness_table(records: &[WitnessRecord]) -> String {
    let header = ["function", "n", "value", "factorization", "provenance"];
    let body: Vec<[String; 5]> = records
        .iter()
        .map(|r| {
            let pretty = crate::arith::Factorization::from_report_string(&r.factorization)
                .map(|f| if f.primes.is_empty() && f.unresolved.is_none() { "(unit)".into() } else { f.to_pretty_string() })
                .unwrap_or_else(|| r.factorization.clone());
            [r.function.clone(), r.n.to_string(), r.value.to_string(), pretty, r.provenance.to_string()]
        })
        .collect();
    align(&header, &body)
}

fn align<const N: usize>(header: &[&str; N], body: &[[String; N]]) -> String {
    let mut widths: [usize; N] = header.map(|h| h.chars().count());
    for row in body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if i + 1 == N {
                s.push_str(cell);
            } else {
                s.push_str(cell);
                s.push_str(&" ".repeat(w - cell.chars().count() + 2));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in body {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}
