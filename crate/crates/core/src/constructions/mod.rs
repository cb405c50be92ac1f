//! Sequence-set constructions and the interleaving transform.
//!
//! Each family is available as a free function (see [`families`]) and as a
//! [`ConstructionSpec`] value, which also carries the statistics the family is
//! known to attain.

pub mod families;
pub mod interleave;

pub use families::{
    corollary16, cyclotomic_a, cyclotomic_b, kumar, multiplicative, nhz, p2p, theorem17,
};
pub use interleave::{construction_c, interleave, InterleaveMap};

use crate::algebra::FieldContext;
use crate::bounds::Verdict;
use crate::cyclotomy::CyclotomicScheme;
use crate::error::Result;
use crate::rational::Rational;
use crate::sequence::FhsSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionSpec {
    Kumar { p: u64 },
    Nhz { k: u64, n: u64, d: u64 },
    P2p { p: u64 },
    CyclotomicA { p: u64, m: u64 },
    CyclotomicB { q: u64, m: u64 },
    Multiplicative { n: u64 },
    Theorem17 { n: u64, k: u64 },
    Corollary16 { p: u64, m: u64 },
}

/// Statistics stated for a family in closed form; `None` where nothing is stated.
/// Some stated values do not hold at every instance, so compare before relying on them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExpectedProfile {
    pub shape: (usize, u32, usize),
    pub perfectly_balanced: Option<bool>,
    pub uniformly_distributed: Option<bool>,
    pub h_a: Option<u32>,
    pub h_c: Option<u32>,
    pub h_max_at_most: Option<u32>,
    pub a_a: Option<Rational>,
    pub a_c: Option<Rational>,
    pub lg_optimal_members: Option<bool>,
    pub mhc: Option<Verdict>,
    pub ahc: Option<Verdict>,
}

impl ConstructionSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ConstructionSpec::Kumar { .. } => "kumar",
            ConstructionSpec::Nhz { .. } => "nhz",
            ConstructionSpec::P2p { .. } => "p2p",
            ConstructionSpec::CyclotomicA { .. } => "cyclotomic_a",
            ConstructionSpec::CyclotomicB { .. } => "cyclotomic_b",
            ConstructionSpec::Multiplicative { .. } => "multiplicative",
            ConstructionSpec::Theorem17 { .. } => "theorem17",
            ConstructionSpec::Corollary16 { .. } => "corollary16",
        }
    }

    pub fn generate(&self) -> Result<FhsSet> {
        match *self {
            ConstructionSpec::Kumar { p } => kumar(p),
            ConstructionSpec::Nhz { k, n, d } => nhz(k, n, d),
            ConstructionSpec::P2p { p } => p2p(p),
            ConstructionSpec::CyclotomicA { p, m } => cyclotomic_a(p, m),
            ConstructionSpec::CyclotomicB { q, m } => cyclotomic_b(q, m),
            ConstructionSpec::Multiplicative { n } => multiplicative(n),
            ConstructionSpec::Theorem17 { n, k } => theorem17(n, k),
            ConstructionSpec::Corollary16 { p, m } => corollary16(p, m),
        }
    }

    /// Stated properties of the generated set. Validates parameters the same way
    /// [`generate`](Self::generate) does.
    pub fn expected_profile(&self) -> Result<ExpectedProfile> {
        let set = self.generate()?;
        let shape = set.shape();
        let base = ExpectedProfile {
            shape,
            ahc: Some(Verdict::Optimal),
            ..Default::default()
        };
        let profile = match *self {
            ConstructionSpec::Kumar { .. } => ExpectedProfile {
                uniformly_distributed: Some(true),
                mhc: Some(Verdict::Optimal),
                ..base
            },
            ConstructionSpec::Nhz { .. } => ExpectedProfile {
                perfectly_balanced: Some(true),
                ..base
            },
            ConstructionSpec::P2p { .. } => ExpectedProfile {
                perfectly_balanced: Some(true),
                mhc: Some(Verdict::Optimal),
                ..base
            },
            ConstructionSpec::CyclotomicA { p, m } => {
                let f = ((p - 1) / m) as i128;
                let m = m as i128;
                ExpectedProfile {
                    uniformly_distributed: Some(true),
                    h_a: Some(f as u32 + 1),
                    h_c: Some(f as u32 + 2),
                    // f - 1 + 2/M and (M f^2 + 2 f) / (M f + 1)
                    a_a: Some(Rational::new((f - 1) * m + 2, m)?),
                    a_c: Some(Rational::new(m * f * f + 2 * f, m * f + 1)?),
                    lg_optimal_members: Some(true),
                    mhc: Some(Verdict::NearOptimal),
                    ..base
                }
            }
            ConstructionSpec::CyclotomicB { q, m } => {
                let f = (q - 1) / m;
                let scheme = CyclotomicScheme::new(FieldContext::of_order(q)?, m as u32)?;
                ExpectedProfile {
                    perfectly_balanced: Some(true),
                    h_max_at_most: Some(f as u32 + 2),
                    mhc: scheme.theorem13_condition().then_some(Verdict::NearOptimal),
                    ..base
                }
            }
            ConstructionSpec::Multiplicative { .. } => ExpectedProfile {
                perfectly_balanced: Some(true),
                h_a: Some(0),
                h_c: Some(1),
                ..base
            },
            ConstructionSpec::Theorem17 { k, .. } => ExpectedProfile {
                perfectly_balanced: Some(true),
                // k = 1 leaves the multiplicative base set untouched
                h_a: Some(if k == 1 { 0 } else { k as u32 }),
                h_c: (shape.2 >= 2).then_some(if k == 1 { 1 } else { k as u32 }),
                mhc: (shape.2 >= 2).then_some(Verdict::Optimal),
                ..base
            },
            ConstructionSpec::Corollary16 { .. } => base,
        };
        // single-sequence sets have no set-level verdicts
        if shape.2 < 2 {
            return Ok(ExpectedProfile {
                ahc: None,
                mhc: None,
                ..profile
            });
        }
        Ok(profile)
    }
}
