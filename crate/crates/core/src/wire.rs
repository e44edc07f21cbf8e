//! JSON and CSV forms of polynomials, subresultant results and bench rows.
//! Field elements travel as strings ("n" or "num/den"), never floats.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fastsubres::{Basis, CharCase, CofactorPair, SubresResult};
use crate::field::{FieldDescriptor, FieldValue, OpCounter};
use crate::poly::{DensePoly, ProblemSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
    pub field: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpsJson {
    pub add: u64,
    pub mul: u64,
    pub div: u64,
    #[serde(default)]
    pub neg: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CofactorJson {
    pub f: PolyJson,
    pub g: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubresJson {
    pub m: u64,
    pub n: u64,
    pub d: u64,
    pub alpha: String,
    pub beta: String,
    pub field: String,
    pub case: String,
    pub basis: String,
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prefactor: Option<String>,
    pub ops: OpsJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cofactors: Option<CofactorJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsresJson {
    pub m: u64,
    pub n: u64,
    pub alpha: String,
    pub beta: String,
    pub field: String,
    pub psres: Vec<String>,
    pub ops: OpsJson,
}

impl From<OpCounter> for OpsJson {
    fn from(c: OpCounter) -> Self {
        OpsJson {
            add: c.adds,
            mul: c.muls,
            div: c.divs,
            neg: c.negs,
        }
    }
}

impl From<OpsJson> for OpCounter {
    fn from(o: OpsJson) -> Self {
        OpCounter {
            adds: o.add,
            muls: o.mul,
            divs: o.div,
            negs: o.neg,
        }
    }
}

fn strings(values: &[FieldValue]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn parse_values(values: &[String], desc: FieldDescriptor) -> Result<Vec<FieldValue>> {
    values.iter().map(|s| FieldValue::parse(s, desc)).collect()
}

fn parse_field(s: &str) -> Result<FieldDescriptor> {
    s.parse()
}

impl PolyJson {
    pub fn from_poly(p: &DensePoly) -> Self {
        PolyJson {
            coeffs: strings(p.coeffs()),
            field: p.field().to_string(),
        }
    }

    pub fn to_poly(&self) -> Result<DensePoly> {
        let desc = parse_field(&self.field)?;
        DensePoly::from_coeffs(desc, parse_values(&self.coeffs, desc)?)
    }
}

impl SubresJson {
    pub fn from_result(r: &SubresResult, cofactors: Option<&CofactorPair>) -> Self {
        SubresJson {
            m: r.spec.m,
            n: r.spec.n,
            d: r.spec.d,
            alpha: r.spec.alpha.to_string(),
            beta: r.spec.beta.to_string(),
            field: r.spec.field().to_string(),
            case: r.case.wire_name().to_string(),
            basis: r.basis.wire_name().to_string(),
            coeffs: strings(&r.coeffs),
            prefactor: r.prefactor.as_ref().map(ToString::to_string),
            ops: r.op_count.into(),
            cofactors: cofactors.map(|c| CofactorJson {
                f: PolyJson::from_poly(&c.f_cof),
                g: PolyJson::from_poly(&c.g_cof),
            }),
        }
    }

    pub fn to_result(&self) -> Result<(SubresResult, Option<CofactorPair>)> {
        let desc = parse_field(&self.field)?;
        let spec = ProblemSpec::new(
            self.m,
            self.n,
            self.d,
            FieldValue::parse(&self.alpha, desc)?,
            FieldValue::parse(&self.beta, desc)?,
        )?;
        let case = CharCase::from_wire(&self.case)
            .ok_or_else(|| Error::Parse(format!("unknown case {:?}", self.case)))?;
        let basis = Basis::from_wire(&self.basis)
            .ok_or_else(|| Error::Parse(format!("unknown basis {:?}", self.basis)))?;
        let prefactor = self
            .prefactor
            .as_deref()
            .map(|s| FieldValue::parse(s, desc))
            .transpose()?;
        let result = SubresResult {
            spec,
            basis,
            coeffs: parse_values(&self.coeffs, desc)?,
            prefactor,
            case,
            op_count: self.ops.into(),
        };
        let cofactors = match &self.cofactors {
            Some(c) => Some(CofactorPair {
                f_cof: c.f.to_poly()?,
                g_cof: c.g.to_poly()?,
            }),
            None => None,
        };
        Ok((result, cofactors))
    }
}

impl PsresJson {
    pub fn new(
        m: u64,
        n: u64,
        alpha: &FieldValue,
        beta: &FieldValue,
        values: &[FieldValue],
        ops: OpCounter,
    ) -> Self {
        PsresJson {
            m,
            n,
            alpha: alpha.to_string(),
            beta: beta.to_string(),
            field: alpha.descriptor().to_string(),
            psres: strings(values),
            ops: ops.into(),
        }
    }

    pub fn values(&self) -> Result<Vec<FieldValue>> {
        parse_values(&self.psres, parse_field(&self.field)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Fast,
    Oracle,
    PsresAll,
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Algorithm::Fast),
            "oracle" => Ok(Algorithm::Oracle),
            "psres_all" => Ok(Algorithm::PsresAll),
            _ => Err(Error::Parse(format!("unknown algorithm {s:?}"))),
        }
    }
}

/// One timed run. Counts are the op counter delta of exactly that run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub m: u64,
    pub n: u64,
    pub d: u64,
    pub field: String,
    pub algorithm: Algorithm,
    pub adds: u64,
    pub muls: u64,
    pub divs: u64,
    pub wall_ns: u64,
}

impl BenchRow {
    pub fn total_ops(&self) -> u64 {
        self.adds + self.muls + self.divs
    }
}

pub fn write_bench_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(["m", "n", "d", "field", "algorithm", "adds", "muls", "divs", "wall_ns"])
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    for row in rows {
        w.serialize(row).map_err(|e| Error::Parse(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_bench_csv<R: Read>(input: R) -> Result<Vec<BenchRow>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(|e| Error::Parse(e.to_string())))
        .collect()
}
