//! Periodic Hamming correlation and the set statistics built on it.
//!
//! `H_{X,Y}(tau)` counts positions `t` with `X(t) = Y(t + tau mod N)`. The
//! report stores one full profile per unordered pair (`i <= j`); the reverse
//! order follows from `H_{Y,X}(tau) = H_{X,Y}(N - tau)`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sequence::{Fhs, FhsSet};

/// `H_{X,Y}(tau)` evaluated directly from the definition.
pub fn hamming_correlation(x: &Fhs, y: &Fhs, tau: usize) -> Result<u32> {
    if x.len() != y.len() || x.alphabet_size() != y.alphabet_size() {
        return Err(Error::ShapeMismatch(format!(
            "({}, {}) vs ({}, {})",
            x.len(),
            x.alphabet_size(),
            y.len(),
            y.alphabet_size()
        )));
    }
    let n = x.len();
    let (xs, ys) = (x.symbols(), y.symbols());
    Ok((0..n).filter(|&t| xs[t] == ys[(t + tau) % n]).count() as u32)
}

/// All `N` values of `H_{X,Y}`, accumulated symbol by symbol: each pair of
/// occurrences `X(t) = a = Y(s)` contributes one hit at shift `s - t`.
fn profile(x: &[u32], y: &[u32], y_positions: &[Vec<u32>]) -> Vec<u32> {
    let n = x.len();
    let mut out = vec![0u32; n];
    for (t, &a) in x.iter().enumerate() {
        for &s in &y_positions[a as usize] {
            let tau = (s as usize + n - t) % n;
            out[tau] += 1;
        }
    }
    debug_assert_eq!(y.len(), n);
    out
}

fn positions(x: &Fhs) -> Vec<Vec<u32>> {
    let mut pos = vec![Vec::new(); x.alphabet_size() as usize];
    for (t, &s) in x.symbols().iter().enumerate() {
        pos[s as usize].push(t as u32);
    }
    pos
}

/// Every correlation profile of a set with its maxima, sums and averages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationReport {
    n: usize,
    m: u32,
    l: usize,
    profiles: Vec<Vec<u32>>,
    auto_max: Vec<Option<u32>>,
    h_a: Option<u32>,
    h_c: Option<u32>,
    s_a: u128,
    s_c: u128,
    a_a: Option<Rational>,
    a_c: Option<Rational>,
}

fn pair_index(l: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < l);
    // rows 0..i hold l, l-1, ..., l-i+1 entries
    i * (2 * l - i + 1) / 2 + (j - i)
}

/// Computes every profile and statistic of `set`. Pairs are processed in
/// parallel; the result does not depend on scheduling.
pub fn full_report(set: &FhsSet) -> CorrelationReport {
    let (n, m, l) = set.shape();
    let seqs = set.sequences();
    let pos: Vec<Vec<Vec<u32>>> = seqs.par_iter().map(positions).collect();
    let pairs: Vec<(usize, usize)> = (0..l).flat_map(|i| (i..l).map(move |j| (i, j))).collect();
    let profiles: Vec<Vec<u32>> = pairs
        .par_iter()
        .map(|&(i, j)| profile(seqs[i].symbols(), seqs[j].symbols(), &pos[j]))
        .collect();

    let mut auto_max = Vec::with_capacity(l);
    let mut s_a: u128 = 0;
    let mut s_c: u128 = 0;
    let mut h_c: Option<u32> = None;
    for (&(i, j), prof) in pairs.iter().zip(&profiles) {
        if i == j {
            auto_max.push(prof[1..].iter().copied().max());
            s_a += prof[1..].iter().map(|&v| v as u128).sum::<u128>();
        } else {
            // ordered pairs (i, j) and (j, i) have equal sums
            s_c += 2 * prof.iter().map(|&v| v as u128).sum::<u128>();
            let pair_max = prof.iter().copied().max().unwrap_or(0);
            h_c = Some(h_c.map_or(pair_max, |h| h.max(pair_max)));
        }
    }
    let h_a = auto_max.iter().flatten().copied().max();
    let a_a = (n >= 2).then(|| {
        Rational::from_u128(s_a, (l as u128) * (n as u128 - 1)).expect("bounded by set limits")
    });
    let a_c = (l >= 2).then(|| {
        Rational::from_u128(s_c, (l as u128) * (l as u128 - 1) * n as u128).expect("bounded by set limits")
    });
    CorrelationReport {
        n,
        m,
        l,
        profiles,
        auto_max,
        h_a,
        h_c,
        s_a,
        s_c,
        a_a,
        a_c,
    }
}

impl CorrelationReport {
    /// `(N, M, L)` of the analysed set.
    pub fn shape(&self) -> (usize, u32, usize) {
        (self.n, self.m, self.l)
    }

    /// Full profile `H_{X_i, X_j}(0..N)`.
    pub fn profile(&self, i: usize, j: usize) -> Vec<u32> {
        if i <= j {
            self.profiles[pair_index(self.l, i, j)].clone()
        } else {
            let base = &self.profiles[pair_index(self.l, j, i)];
            (0..self.n).map(|tau| base[(self.n - tau) % self.n]).collect()
        }
    }

    pub fn value(&self, i: usize, j: usize, tau: usize) -> u32 {
        let tau = tau % self.n;
        if i <= j {
            self.profiles[pair_index(self.l, i, j)][tau]
        } else {
            self.profiles[pair_index(self.l, j, i)][(self.n - tau) % self.n]
        }
    }

    /// Maximum out-of-phase autocorrelation `H(X_i)`; `None` when `N = 1`.
    pub fn auto_max(&self, i: usize) -> Option<u32> {
        self.auto_max[i]
    }

    /// `H_a`: the largest out-of-phase autocorrelation in the set.
    pub fn h_a(&self) -> Result<u32> {
        self.h_a.ok_or(Error::DegenerateSet("H_a needs N >= 2"))
    }

    /// `H_c`: the largest crosscorrelation over distinct pairs and all shifts.
    pub fn h_c(&self) -> Result<u32> {
        self.h_c.ok_or(Error::DegenerateSet("H_c needs L >= 2"))
    }

    /// `max(H_a, H_c)` over whichever of the two is defined.
    pub fn h_max(&self) -> Option<u32> {
        match (self.h_a, self.h_c) {
            (Some(a), Some(c)) => Some(a.max(c)),
            (a, c) => a.or(c),
        }
    }

    pub fn s_a(&self) -> u128 {
        self.s_a
    }

    /// Sum over ordered distinct pairs and all shifts.
    pub fn s_c(&self) -> u128 {
        self.s_c
    }

    pub fn a_a(&self) -> Result<Rational> {
        self.a_a.ok_or(Error::DegenerateSet("A_a needs N >= 2"))
    }

    pub fn a_c(&self) -> Result<Rational> {
        self.a_c.ok_or(Error::DegenerateSet("A_c needs L >= 2"))
    }

    #[doc(hidden)]
    /// Overwrites one stored value; only for exercising failure paths of checkers.
    pub fn corrupt_for_testing(&mut self, i: usize, j: usize, tau: usize, value: u32) {
        let (i, j, tau) = if i <= j { (i, j, tau) } else { (j, i, (self.n - tau) % self.n) };
        self.profiles[pair_index(self.l, i, j)][tau] = value;
    }
}

/// Checks both correlation-sum identities against a computed report:
/// for every ordered pair, `sum_tau H_{X,Y}(tau) = sum_a N_X(a) N_Y(a)`; and
/// for the set, `S_a + S_c = sum_a N(a) (N(a) - 1)`.
pub fn verify_sum_identities_with(set: &FhsSet, report: &CorrelationReport) -> bool {
    let counts: Vec<Vec<u32>> = set.sequences().iter().map(Fhs::counts).collect();
    let l = set.len();
    for i in 0..l {
        for j in 0..l {
            let lhs: u64 = report.profile(i, j).iter().map(|&v| v as u64).sum();
            let rhs: u64 = counts[i]
                .iter()
                .zip(&counts[j])
                .map(|(&a, &b)| a as u64 * b as u64)
                .sum();
            if lhs != rhs {
                return false;
            }
        }
    }
    let mut s_a: u128 = 0;
    let mut s_c: u128 = 0;
    for i in 0..l {
        for j in 0..l {
            let prof = report.profile(i, j);
            if i == j {
                s_a += prof[1..].iter().map(|&v| v as u128).sum::<u128>();
            } else {
                s_c += prof.iter().map(|&v| v as u128).sum::<u128>();
            }
        }
    }
    let rhs: u128 = set
        .counts()
        .iter()
        .map(|&c| c as u128 * (c as u128).saturating_sub(1))
        .sum();
    s_a == report.s_a() && s_c == report.s_c() && s_a + s_c == rhs
}

pub fn verify_sum_identities(set: &FhsSet) -> bool {
    verify_sum_identities_with(set, &full_report(set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::Provenance;

    fn fhs(symbols: &[u32], m: u32) -> Fhs {
        Fhs::new(symbols.to_vec(), m).unwrap()
    }

    fn set(rows: &[&[u32]], m: u32) -> FhsSet {
        FhsSet::from_rows(rows.iter().map(|r| r.to_vec()).collect(), m, Provenance::default()).unwrap()
    }

    #[test]
    fn pair_index_is_dense() {
        for l in 1..10 {
            let mut idx = Vec::new();
            for i in 0..l {
                for j in i..l {
                    idx.push(pair_index(l, i, j));
                }
            }
            assert_eq!(idx, (0..l * (l + 1) / 2).collect::<Vec<_>>());
        }
    }

    #[test]
    fn direct_correlation_examples() {
        let x = fhs(&[0, 1, 2], 3);
        let y = fhs(&[1, 2, 0], 3);
        assert_eq!(hamming_correlation(&x, &x, 0).unwrap(), 3);
        assert_eq!(hamming_correlation(&x, &y, 1).unwrap(), 0);
        assert_eq!(hamming_correlation(&x, &y, 2).unwrap(), 3);
        let a = fhs(&[0, 0, 0, 0], 2);
        let b = fhs(&[1, 1, 1, 1], 2);
        for tau in 0..4 {
            assert_eq!(hamming_correlation(&a, &b, tau).unwrap(), 0);
        }
        assert!(matches!(
            hamming_correlation(&x, &a, 0),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn shift_alignment_example() {
        // Y(t) = X(t + 1), so Y(t + tau) = X(t) needs tau = N - 1 and the
        // reverse pairing lines up at tau = 1.
        let x = fhs(&[0, 1, 2], 3);
        let y = fhs(&[1, 2, 0], 3);
        assert_eq!(hamming_correlation(&y, &x, 1).unwrap(), 3);
    }

    #[test]
    fn constant_sequence_statistics() {
        let r = full_report(&set(&[&[0, 0, 0, 0]], 2));
        assert_eq!(r.s_a(), 12);
        assert_eq!(r.a_a().unwrap(), Rational::from_integer(4));
        assert_eq!(r.h_a().unwrap(), 4);
        assert!(matches!(r.h_c(), Err(Error::DegenerateSet(_))));
        assert!(matches!(r.a_c(), Err(Error::DegenerateSet(_))));
        assert_eq!(r.s_c(), 0);
    }

    #[test]
    fn length_one_has_no_out_of_phase_statistic() {
        let r = full_report(&set(&[&[0], &[1]], 2));
        assert!(r.a_a().is_err());
        assert!(r.h_a().is_err());
        assert_eq!(r.h_c().unwrap(), 0);
        assert_eq!(r.h_max(), Some(0));
    }

    #[test]
    fn report_matches_direct_definition() {
        let s = set(&[&[0, 1, 1, 2, 0], &[2, 2, 1, 0, 1], &[0, 0, 0, 1, 2]], 3);
        let r = full_report(&s);
        for i in 0..3 {
            for j in 0..3 {
                for tau in 0..5 {
                    let direct = hamming_correlation(&s.sequences()[i], &s.sequences()[j], tau).unwrap();
                    assert_eq!(r.value(i, j, tau), direct);
                    assert_eq!(r.profile(i, j)[tau], direct);
                }
            }
        }
        assert!(verify_sum_identities(&s));
    }

    #[test]
    fn corrupted_report_fails_identity_check() {
        let s = set(&[&[0, 1, 1, 2, 0], &[2, 2, 1, 0, 1]], 3);
        let mut r = full_report(&s);
        assert!(verify_sum_identities_with(&s, &r));
        let v = r.value(0, 1, 2);
        r.corrupt_for_testing(0, 1, 2, v + 1);
        assert!(!verify_sum_identities_with(&s, &r));
    }
}
