//! The machine-readable analysis of one sequence set.
//!
//! Integers stay integers and averages are exact [`Rational`]s serialized as
//! `"num/den"` strings. Statistics that are undefined for the shape (for
//! example `H_c` of a single sequence) are `null`, never zero.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bounds::{ahc_verdict, lg_verdict, mhc_verdict, OptimalityVerdict};
use crate::correlation::{full_report, CorrelationReport};
use crate::distribution::{distribution, DistributionVerdict};
use crate::rational::Rational;
use crate::sequence::FhsSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub shape: Shape,
    pub provenance: ProvenanceSection,
    pub distribution: DistributionSection,
    pub correlation: CorrelationSection,
    pub bounds: BoundsSection,
    pub timing: Timing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape {
    pub n: u64,
    pub m: u64,
    pub l: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceSection {
    pub construction: String,
    pub params: BTreeMap<String, u64>,
    pub notes: Vec<String>,
    /// Display form of each symbol id, when the alphabet is not `0..M`.
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionSection {
    /// `PB`, `balanced` or `unbalanced`
    pub sequence_class: String,
    /// `PB`, `UD` or `not UD`
    pub set_class: String,
    #[serde(flatten)]
    pub detail: DistributionVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrelationSection {
    pub h_a: Option<u32>,
    pub h_c: Option<u32>,
    pub h_max: Option<u32>,
    pub s_a: u64,
    pub s_c: u64,
    pub a_a: Option<Rational>,
    pub a_c: Option<Rational>,
    /// Out-of-phase autocorrelation maximum of each sequence.
    pub auto_max: Vec<Option<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsSection {
    pub mhc: OptimalityVerdict,
    pub ahc: OptimalityVerdict,
    /// One Lempel-Greenberger verdict per sequence.
    pub lempel_greenberger: Vec<OptimalityVerdict>,
}

/// Wall-clock cost in microseconds. The only nondeterministic section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub correlation_us: u64,
    pub total_us: u64,
}

impl AnalysisReport {
    pub fn analyze(set: &FhsSet) -> Self {
        let start = Instant::now();
        let report = full_report(set);
        let correlation_us = start.elapsed().as_micros() as u64;
        let mut out = Self::from_parts(set, &report);
        out.timing = Timing {
            correlation_us,
            total_us: start.elapsed().as_micros() as u64,
        };
        out
    }

    /// Assembles a report from an existing correlation report; timing is zero.
    pub fn from_parts(set: &FhsSet, report: &CorrelationReport) -> Self {
        let (n, m, l) = set.shape();
        let dist = distribution(set);
        let prov = set.provenance();
        AnalysisReport {
            shape: Shape {
                n: n as u64,
                m: m as u64,
                l: l as u64,
            },
            provenance: ProvenanceSection {
                construction: prov.construction.clone(),
                params: prov.params.clone(),
                notes: prov.notes.clone(),
                labels: set.labels().map(<[String]>::to_vec),
            },
            distribution: DistributionSection {
                sequence_class: dist.sequence_class().to_string(),
                set_class: dist.set_class().to_string(),
                detail: dist,
            },
            correlation: CorrelationSection {
                h_a: report.h_a().ok(),
                h_c: report.h_c().ok(),
                h_max: report.h_max(),
                s_a: report.s_a() as u64,
                s_c: report.s_c() as u64,
                a_a: report.a_a().ok(),
                a_c: report.a_c().ok(),
                auto_max: (0..l).map(|i| report.auto_max(i)).collect(),
            },
            bounds: BoundsSection {
                mhc: mhc_verdict(report),
                ahc: ahc_verdict(report),
                lempel_greenberger: (0..l).map(|i| lg_verdict(report, i)).collect(),
            },
            timing: Timing {
                correlation_us: 0,
                total_us: 0,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable summary.
    pub fn render_text(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
        }
        let c = &self.correlation;
        let mut s = String::new();
        let Shape { n, m, l } = self.shape;
        let _ = writeln!(s, "construction  {}", self.provenance.construction);
        for (k, v) in &self.provenance.params {
            let _ = writeln!(s, "  {k:<10}  {v}");
        }
        for note in &self.provenance.notes {
            let _ = writeln!(s, "  note: {note}");
        }
        let _ = writeln!(s, "shape         (N, M, L) = ({n}, {m}, {l})");
        let _ = writeln!(
            s,
            "distribution  {}; {}",
            self.distribution.sequence_class, self.distribution.set_class
        );
        let _ = writeln!(s, "H_a           {}", opt(&c.h_a));
        let _ = writeln!(s, "H_c           {}", opt(&c.h_c));
        let _ = writeln!(s, "S_a, S_c      {}, {}", c.s_a, c.s_c);
        let _ = writeln!(s, "A_a           {}", opt(&c.a_a));
        let _ = writeln!(s, "A_c           {}", opt(&c.a_c));
        let _ = writeln!(s, "MHC           {}", self.bounds.mhc.verdict);
        let _ = writeln!(s, "AHC           {}", self.bounds.ahc.verdict);
        let lg_optimal = self
            .bounds
            .lempel_greenberger
            .iter()
            .filter(|v| v.verdict == crate::bounds::Verdict::Optimal)
            .count();
        let _ = writeln!(s, "LG-optimal    {lg_optimal} of {l} sequences");
        let _ = writeln!(s, "time          {} us", self.timing.total_us);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Verdict;
    use crate::constructions::{cyclotomic_a, kumar};

    #[test]
    fn json_round_trip_and_keys() {
        let set = kumar(3).unwrap();
        let r = AnalysisReport::analyze(&set);
        let json = r.to_json();
        assert_eq!(AnalysisReport::from_json(&json).unwrap(), r);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let keys: Vec<&str> = value.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            ["bounds", "correlation", "distribution", "provenance", "shape", "timing"]
        );
        assert_eq!(value["provenance"]["labels"][1], "3");
    }

    #[test]
    fn rationals_are_strings() {
        let r = AnalysisReport::analyze(&cyclotomic_a(13, 4).unwrap());
        let value: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(value["correlation"]["a_a"], "5/2");
        assert_eq!(value["correlation"]["a_c"], "42/13");
        assert_eq!(value["bounds"]["mhc"]["verdict"], "near_optimal");
        assert_eq!(value["bounds"]["ahc"]["verdict"], "optimal");
    }

    #[test]
    fn single_sequence_leaves_cross_fields_null() {
        let set = FhsSet::from_rows(vec![vec![0, 1, 1]], 2, crate::Provenance::new("t")).unwrap();
        let r = AnalysisReport::analyze(&set);
        assert_eq!(r.correlation.h_c, None);
        assert_eq!(r.correlation.a_c, None);
        assert_eq!(r.bounds.ahc.verdict, Verdict::Undefined);
        let value: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert!(value["correlation"]["h_c"].is_null());
        assert!(r.render_text().contains("H_c           -"));
    }
}
