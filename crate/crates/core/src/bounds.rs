//! The Lempel-Greenberger, Peng-Fan and average-Hamming-correlation bounds,
//! evaluated in exact integers, and the optimality verdicts derived from them.
//!
//! A pair `(la, lc)` is *optimal* for the Peng-Fan bound when it satisfies
//! `M(N-1) la + NM(L-1) lc >= N(NL-M)` and `(la - d, lc - d)` fails for every
//! positive `d`. The left side is strictly increasing in both coordinates, so
//! testing `d = 1` decides it. The inequality is evaluated as written for
//! every integer pair, negative coordinates included, so a set with zero
//! autocorrelation but large crosscorrelation is not optimal.
//! *Near-optimal* means `(la - 1, lc - 1)` is itself optimal.
//!
//! The AHC bound, once both averages are expanded, is equivalent to
//! `M(S_a + S_c) >= NL(NL - M)`; a set has optimal AHC exactly at equality.

use serde::{Deserialize, Serialize};

use crate::correlation::CorrelationReport;
use crate::error::Result;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Optimal,
    NearOptimal,
    NotOptimal,
    Undefined,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Optimal => "optimal",
            Verdict::NearOptimal => "near_optimal",
            Verdict::NotOptimal => "not_optimal",
            Verdict::Undefined => "undefined",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

// Wide integers travel as decimal strings.
mod int_str {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &i128, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<i128, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }

    pub mod array {
        use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(v: &[i128; 3], s: S) -> Result<S::Ok, S::Error> {
            v.map(|x| x.to_string()).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[i128; 3], D::Error> {
            let raw = <[String; 3]>::deserialize(d)?;
            let mut out = [0i128; 3];
            for (o, r) in out.iter_mut().zip(&raw) {
                *o = r.parse().map_err(D::Error::custom)?;
            }
            Ok(out)
        }
    }
}

/// The integers a verdict was decided from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    LempelGreenberger {
        n: u64,
        m: u64,
        bound: u64,
        attained: u64,
    },
    PengFan {
        n: u64,
        m: u64,
        l: u64,
        lambda_a: i64,
        lambda_c: i64,
        /// Left side at `(la - d, lc - d)` for `d = 0, 1, 2`.
        #[serde(with = "int_str::array")]
        lhs: [i128; 3],
        #[serde(with = "int_str")]
        rhs: i128,
    },
    AverageHamming {
        /// `M (S_a + S_c)`
        #[serde(with = "int_str")]
        lhs: i128,
        /// `N L (N L - M)`
        #[serde(with = "int_str")]
        rhs: i128,
    },
    Undefined {
        reason: String,
    },
}

impl Witness {
    /// Recomputes the verdict from the witness alone.
    pub fn verdict(&self) -> Verdict {
        match *self {
            Witness::LempelGreenberger { bound, attained, .. } => {
                if attained == bound {
                    Verdict::Optimal
                } else {
                    Verdict::NotOptimal
                }
            }
            Witness::PengFan {
                n,
                m,
                l,
                lambda_a,
                lambda_c,
                ..
            } => classify_pair(n, m, l, lambda_a, lambda_c),
            Witness::AverageHamming { lhs, rhs } => {
                if lhs == rhs {
                    Verdict::Optimal
                } else {
                    Verdict::NotOptimal
                }
            }
            Witness::Undefined { .. } => Verdict::Undefined,
        }
    }

    /// True when the attained statistics fall below the bound, which no
    /// correct computation can produce.
    pub fn violates_bound(&self) -> bool {
        match *self {
            Witness::LempelGreenberger { bound, attained, .. } => attained < bound,
            Witness::PengFan { lhs, rhs, .. } => lhs[0] < rhs,
            Witness::AverageHamming { lhs, rhs } => lhs < rhs,
            Witness::Undefined { .. } => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    LempelGreenberger,
    PengFan,
    AverageHamming,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityVerdict {
    pub bound: BoundKind,
    pub verdict: Verdict,
    pub witness: Witness,
}

impl OptimalityVerdict {
    fn from_witness(bound: BoundKind, witness: Witness) -> Self {
        OptimalityVerdict {
            bound,
            verdict: witness.verdict(),
            witness,
        }
    }

    fn undefined(bound: BoundKind, reason: &str) -> Self {
        Self::from_witness(
            bound,
            Witness::Undefined {
                reason: reason.to_string(),
            },
        )
    }
}

/// Lower bound on the maximum out-of-phase autocorrelation of any length-`n`
/// sequence over `m` symbols: `ceil((N - b)(N + b - M) / (M (N - 1)))` with
/// `b = N mod M`. Requires `n >= 2`.
pub fn lg_bound(n: u64, m: u64) -> u64 {
    assert!(n >= 2 && m >= 1, "lg_bound needs N >= 2 and M >= 1");
    let (n, m) = (n as i128, m as i128);
    let b = n % m;
    // N - b is a multiple of M; when N < M it is zero and so is the product.
    let num = (n - b) * (n + b - m);
    let den = m * (n - 1);
    ((num.max(0) + den - 1) / den) as u64
}

fn peng_fan_lhs(n: u64, m: u64, l: u64, la: i64, lc: i64) -> i128 {
    let (n, m, l) = (n as i128, m as i128, l as i128);
    m * (n - 1) * la as i128 + n * m * (l - 1) * lc as i128
}

fn peng_fan_rhs(n: u64, m: u64, l: u64) -> i128 {
    let (n, m, l) = (n as i128, m as i128, l as i128);
    n * (n * l - m)
}

/// Whether the integer pair `(la, lc)` satisfies the Peng-Fan inequality.
/// The inequality is evaluated as written, negative coordinates included.
pub fn peng_fan_holds(n: u64, m: u64, l: u64, la: i64, lc: i64) -> bool {
    peng_fan_lhs(n, m, l, la, lc) >= peng_fan_rhs(n, m, l)
}

fn is_optimal_pair(n: u64, m: u64, l: u64, la: i64, lc: i64) -> bool {
    peng_fan_holds(n, m, l, la, lc) && !peng_fan_holds(n, m, l, la - 1, lc - 1)
}

fn classify_pair(n: u64, m: u64, l: u64, la: i64, lc: i64) -> Verdict {
    if is_optimal_pair(n, m, l, la, lc) {
        Verdict::Optimal
    } else if is_optimal_pair(n, m, l, la - 1, lc - 1) {
        Verdict::NearOptimal
    } else {
        Verdict::NotOptimal
    }
}

/// Lempel-Greenberger verdict for sequence `i` of the report.
pub fn lg_verdict(report: &CorrelationReport, i: usize) -> OptimalityVerdict {
    let (n, m, _) = report.shape();
    match report.auto_max(i) {
        Some(attained) => OptimalityVerdict::from_witness(
            BoundKind::LempelGreenberger,
            Witness::LempelGreenberger {
                n: n as u64,
                m: m as u64,
                bound: lg_bound(n as u64, m as u64),
                attained: attained as u64,
            },
        ),
        None => OptimalityVerdict::undefined(BoundKind::LempelGreenberger, "N < 2"),
    }
}

/// Peng-Fan (maximum Hamming correlation) verdict for a whole set.
pub fn mhc_verdict(report: &CorrelationReport) -> OptimalityVerdict {
    let (n, m, l) = report.shape();
    let (Ok(h_a), Ok(h_c)) = (report.h_a(), report.h_c()) else {
        return OptimalityVerdict::undefined(BoundKind::PengFan, "needs N >= 2 and L >= 2");
    };
    let (n, m, l) = (n as u64, m as u64, l as u64);
    let (la, lc) = (h_a as i64, h_c as i64);
    let lhs = [0, 1, 2].map(|d| peng_fan_lhs(n, m, l, la - d, lc - d));
    OptimalityVerdict::from_witness(
        BoundKind::PengFan,
        Witness::PengFan {
            n,
            m,
            l,
            lambda_a: la,
            lambda_c: lc,
            lhs,
            rhs: peng_fan_rhs(n, m, l),
        },
    )
}

/// Average-Hamming-correlation verdict for a whole set.
pub fn ahc_verdict(report: &CorrelationReport) -> OptimalityVerdict {
    let (n, m, l) = report.shape();
    if n < 2 || l < 2 {
        return OptimalityVerdict::undefined(BoundKind::AverageHamming, "needs N >= 2 and L >= 2");
    }
    let (n, m, l) = (n as i128, m as i128, l as i128);
    let total = (report.s_a() + report.s_c()) as i128;
    OptimalityVerdict::from_witness(
        BoundKind::AverageHamming,
        Witness::AverageHamming {
            lhs: m * total,
            rhs: n * l * (n * l - m),
        },
    )
}

/// Both sides of the AHC bound as exact rationals:
/// `A_a / (N (L-1)) + A_c / (N-1)` and `(NL - M) / (M (N-1) (L-1))`.
pub fn ahc_bound_sides(report: &CorrelationReport) -> Result<(Rational, Rational)> {
    let (n, m, l) = report.shape();
    let (n, m, l) = (n as i128, m as i128, l as i128);
    let a_a = report.a_a()?;
    let a_c = report.a_c()?;
    let lhs = a_a
        .checked_div(&Rational::from_integer(n * (l - 1)))?
        .checked_add(&a_c.checked_div(&Rational::from_integer(n - 1))?)?;
    let rhs = Rational::new(n * l - m, m * (n - 1) * (l - 1))?;
    Ok((lhs, rhs))
}
