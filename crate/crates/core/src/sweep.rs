//! Exhaustive runs of the full pipeline over boxes of parameter tuples.
//!
//! Tuples are evaluated on a bounded rayon pool; records come back in tuple
//! order, so output is identical whatever the pool size.

use std::io::{Read, Write};
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{build_family, is_tangent_cone_cm, leading_forms};
use crate::hilbert::hilbert_report;
use crate::local::is_standard_basis;
use crate::semigroup::{check_conditions, PseudoSymParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Self {
        Interval { lo, hi }
    }

    pub fn range(&self) -> RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl std::str::FromStr for Interval {
    type Err = Error;

    /// `"LO..HI"`, `"LO..=HI"` or a single value.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParams(format!("cannot parse range {s:?}"));
        let parse = |v: &str| v.trim().parse::<i64>().map_err(|_| bad());
        let iv = match s.split_once("..") {
            Some((lo, hi)) => Interval::new(parse(lo)?, parse(hi.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                Interval::new(v, v)
            }
        };
        if iv.lo > iv.hi {
            return Err(bad());
        }
        Ok(iv)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub alpha1: Interval,
    pub alpha2: Interval,
    pub alpha3: Interval,
    pub alpha4: Interval,
    pub alpha21: Interval,
    pub oracle_depth: usize,
    /// Worker threads; 0 lets rayon choose.
    pub jobs: usize,
}

impl SweepConfig {
    /// Every tuple in the box, ordered by `(α1, α2, α3, α4, α21)`.
    pub fn tuples(&self) -> Vec<PseudoSymParams> {
        let mut out = Vec::new();
        for a1 in self.alpha1.range() {
            for a2 in self.alpha2.range() {
                for a3 in self.alpha3.range() {
                    for a4 in self.alpha4.range() {
                        for a21 in self.alpha21.range() {
                            out.push(PseudoSymParams {
                                alpha1: a1,
                                alpha2: a2,
                                alpha3: a3,
                                alpha4: a4,
                                alpha21: a21,
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// All conditions hold and every check ran.
    Valid,
    /// Rejected before the pipeline; `tag` names the failed conditions.
    Invalid,
    /// A check raised an error; `error` holds the message.
    Error,
}

/// One CSV row. Lists are `;`-joined so the file stays flat.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub alpha1: i64,
    pub alpha2: i64,
    pub alpha3: i64,
    pub alpha4: i64,
    pub alpha21: i64,
    pub status: Status,
    pub tag: String,
    pub n1: Option<i64>,
    pub n2: Option<i64>,
    pub n3: Option<i64>,
    pub n4: Option<i64>,
    pub s: String,
    pub basis_size: Option<usize>,
    pub size_formula_holds: Option<bool>,
    pub std_basis_verified: Option<bool>,
    pub toric: Option<bool>,
    pub cm: Option<bool>,
    pub closed_form_agrees: Option<bool>,
    pub identities_hold: Option<bool>,
    pub pivot_orders_agree: Option<bool>,
    pub oracle_agrees: Option<bool>,
    pub nondecreasing: Option<bool>,
    pub q_degree: Option<usize>,
    pub multiplicity: Option<i64>,
    pub ties: Option<usize>,
    pub error: String,
}

impl SweepRecord {
    fn blank(p: &PseudoSymParams, status: Status) -> Self {
        SweepRecord {
            alpha1: p.alpha1,
            alpha2: p.alpha2,
            alpha3: p.alpha3,
            alpha4: p.alpha4,
            alpha21: p.alpha21,
            status,
            tag: String::new(),
            n1: None,
            n2: None,
            n3: None,
            n4: None,
            s: String::new(),
            basis_size: None,
            size_formula_holds: None,
            std_basis_verified: None,
            toric: None,
            cm: None,
            closed_form_agrees: None,
            identities_hold: None,
            pivot_orders_agree: None,
            oracle_agrees: None,
            nondecreasing: None,
            q_degree: None,
            multiplicity: None,
            ties: None,
            error: String::new(),
        }
    }

    pub fn params(&self) -> PseudoSymParams {
        PseudoSymParams {
            alpha1: self.alpha1,
            alpha2: self.alpha2,
            alpha3: self.alpha3,
            alpha4: self.alpha4,
            alpha21: self.alpha21,
        }
    }

    pub fn s_values(&self) -> Vec<i64> {
        self.s
            .split(';')
            .filter(|v| !v.is_empty())
            .filter_map(|v| v.parse().ok())
            .collect()
    }

    /// Every check on a valid record came out as predicted.
    pub fn all_checks_pass(&self) -> bool {
        self.status == Status::Valid
            && [
                self.size_formula_holds,
                self.std_basis_verified,
                self.toric,
                self.closed_form_agrees,
                self.identities_hold,
                self.pivot_orders_agree,
                self.oracle_agrees,
                self.nondecreasing,
            ]
            .iter()
            .all(|v| *v == Some(true))
            && self.cm == Some(false)
    }
}

fn fill(p: &PseudoSymParams, rec: &mut SweepRecord, oracle_depth: usize) -> Result<()> {
    let fam = build_family(p)?;
    rec.s = fam
        .s
        .as_slice()
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(";");
    rec.basis_size = Some(fam.len());
    rec.size_formula_holds = Some(fam.len() == fam.expected_len());
    rec.toric = Some(fam.all_toric()?);
    rec.std_basis_verified = Some(is_standard_basis(&fam.binomials())?.verified);
    rec.cm = Some(is_tangent_cone_cm(&leading_forms(&fam)?));
    let report = hilbert_report(p, oracle_depth)?;
    rec.closed_form_agrees = Some(report.closed_form_agrees);
    rec.identities_hold = Some(report.identities_hold());
    rec.pivot_orders_agree = Some(report.pivot_orders_agree);
    rec.oracle_agrees = Some(report.oracle_agrees);
    rec.nondecreasing = Some(report.nondecreasing);
    rec.q_degree = report.q.degree();
    rec.multiplicity = Some(report.multiplicity);
    rec.ties = Some(report.ties);
    Ok(())
}

/// Runs every check on one tuple. Never fails; problems land in the record.
pub fn evaluate_tuple(p: &PseudoSymParams, oracle_depth: usize) -> SweepRecord {
    if p.validate().is_err() {
        let mut rec = SweepRecord::blank(p, Status::Invalid);
        rec.tag = "params".to_string();
        return rec;
    }
    let report = match check_conditions(p) {
        Ok(r) => r,
        Err(e) => {
            let mut rec = SweepRecord::blank(p, Status::Error);
            rec.error = e.to_string();
            return rec;
        }
    };
    let g = crate::semigroup::derive_generators(p).ok();
    let mut rec = SweepRecord::blank(p, Status::Valid);
    if let Some(g) = g {
        rec.n1 = Some(g.n1);
        rec.n2 = Some(g.n2);
        rec.n3 = Some(g.n3);
        rec.n4 = Some(g.n4);
    }
    if !report.all() {
        rec.status = Status::Invalid;
        rec.tag = report.failing().join(";");
        return rec;
    }
    if let Err(e) = fill(p, &mut rec, oracle_depth) {
        rec.status = Status::Error;
        rec.error = e.to_string();
    }
    rec
}

pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InternalLimit(format!("thread pool: {e}")))?;
    let tuples = config.tuples();
    Ok(pool.install(|| {
        tuples
            .par_iter()
            .map(|p| evaluate_tuple(p, config.oracle_depth))
            .collect()
    }))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub tuples: usize,
    pub valid: usize,
    pub invalid: usize,
    pub errors: usize,
    pub verified_bases: usize,
    pub nondecreasing: usize,
    pub all_checks_pass: usize,
}

impl SweepSummary {
    pub fn from_records(records: &[SweepRecord]) -> Self {
        let count = |f: &dyn Fn(&SweepRecord) -> bool| records.iter().filter(|r| f(r)).count();
        SweepSummary {
            tuples: records.len(),
            valid: count(&|r| r.status == Status::Valid),
            invalid: count(&|r| r.status == Status::Invalid),
            errors: count(&|r| r.status == Status::Error),
            verified_bases: count(&|r| r.std_basis_verified == Some(true)),
            nondecreasing: count(&|r| r.nondecreasing == Some(true)),
            all_checks_pass: count(&|r| r.all_checks_pass()),
        }
    }
}

impl std::fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "tuples:          {}", self.tuples)?;
        writeln!(f, "valid:           {}", self.valid)?;
        writeln!(f, "invalid:         {}", self.invalid)?;
        writeln!(f, "errors:          {}", self.errors)?;
        writeln!(f, "verified bases:  {}", self.verified_bases)?;
        writeln!(f, "nondecreasing:   {}", self.nondecreasing)?;
        write!(f, "all checks pass: {}", self.all_checks_pass)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SweepOutput {
    pub schema: u32,
    pub config: SweepConfig,
    pub summary: SweepSummary,
    pub records: Vec<SweepRecord>,
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Io(e.to_string())
}

pub fn write_json<W: Write>(w: W, config: &SweepConfig, records: &[SweepRecord]) -> Result<()> {
    let out = SweepOutput {
        schema: 1,
        config: config.clone(),
        summary: SweepSummary::from_records(records),
        records: records.to_vec(),
    };
    serde_json::to_writer_pretty(w, &out).map_err(io_err)
}

pub fn write_csv<W: Write>(w: W, records: &[SweepRecord]) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(w);
    for r in records {
        wtr.serialize(r).map_err(io_err)?;
    }
    wtr.flush().map_err(io_err)
}

pub fn read_csv<R: Read>(r: R) -> Result<Vec<SweepRecord>> {
    csv::Reader::from_reader(r)
        .deserialize()
        .map(|row| row.map_err(io_err))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_parsing() {
        assert_eq!("2..7".parse::<Interval>().unwrap(), Interval::new(2, 7));
        assert_eq!("2..=7".parse::<Interval>().unwrap(), Interval::new(2, 7));
        assert_eq!("4".parse::<Interval>().unwrap(), Interval::new(4, 4));
        assert!("7..2".parse::<Interval>().is_err());
        assert!("a..b".parse::<Interval>().is_err());
    }

    #[test]
    fn tags() {
        let p = PseudoSymParams {
            alpha1: 5,
            alpha2: 3,
            alpha3: 3,
            alpha4: 3,
            alpha21: 4,
        };
        let r = evaluate_tuple(&p, 0);
        assert_eq!(r.status, Status::Invalid);
        assert_eq!(r.tag, "params");
        let r = evaluate_tuple(&PseudoSymParams::new(21, 3, 7, 4, 2).unwrap(), 0);
        assert_eq!(r.status, Status::Invalid);
        assert!(r.tag.contains("cond4"));
    }

    #[test]
    fn example1_record() {
        let r = evaluate_tuple(&PseudoSymParams::new(21, 11, 7, 4, 5).unwrap(), 5);
        assert!(r.all_checks_pass(), "{r:?}");
        assert_eq!(r.s_values(), vec![0, 0, 2, 4]);
        assert_eq!(r.basis_size, Some(15));
    }
}
