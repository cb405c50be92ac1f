//! Cyclotomic classes of order `M` and the cyclotomic-number table.
//!
//! With `q = M f + 1` and primitive element `alpha`, the class `C_r` is
//! `{alpha^(M l + r) : 0 <= l < f}`, so an element's class is its discrete
//! log reduced mod `M`. The cyclotomic number `(i, j)` counts `x in C_i` with
//! `x + 1 in C_j`; `x = -1` gives `x + 1 = 0`, which lies in no class.

use std::collections::BTreeMap;

use crate::algebra::FieldContext;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicScheme {
    field: FieldContext,
    m: u32,
    f: u32,
    class_of: Vec<u32>,
    // nonzero entries only; at most q - 2 of the M^2
    numbers: BTreeMap<(u32, u32), u32>,
}

impl CyclotomicScheme {
    pub fn new(field: FieldContext, m: u32) -> Result<Self> {
        let order_minus_one = field.order() - 1;
        if m < 2 || !order_minus_one.is_multiple_of(m) {
            return Err(Error::NotDivisor {
                m: m as u64,
                order_minus_one: order_minus_one as u64,
            });
        }
        let f = order_minus_one / m;
        let mut class_of = vec![u32::MAX; field.order() as usize];
        for x in 1..field.order() {
            class_of[x as usize] = field.dlog(x).expect("nonzero") % m;
        }
        let mut numbers = BTreeMap::new();
        for x in 1..field.order() {
            let y = field.add(x, 1);
            if y != 0 {
                *numbers.entry((class_of[x as usize], class_of[y as usize])).or_insert(0) += 1;
            }
        }
        Ok(CyclotomicScheme {
            field,
            m,
            f,
            class_of,
            numbers,
        })
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    /// Number of classes `M`.
    pub fn order(&self) -> u32 {
        self.m
    }

    /// Class size `f = (q - 1) / M`.
    pub fn class_size(&self) -> u32 {
        self.f
    }

    /// Class index of a nonzero element; `None` for zero.
    pub fn class_of(&self, x: u32) -> Option<u32> {
        match self.class_of[x as usize] {
            u32::MAX => None,
            r => Some(r),
        }
    }

    /// Elements of `C_r` in the order `alpha^r, alpha^(M + r), ...`.
    pub fn class(&self, r: i64) -> Vec<u32> {
        let r = r.rem_euclid(self.m as i64) as u64;
        (0..self.f as u64)
            .map(|l| self.field.exp(self.m as u64 * l + r))
            .collect()
    }

    /// Cyclotomic number `(i, j)`; both indices are reduced mod `M`.
    pub fn number(&self, i: i64, j: i64) -> u32 {
        let m = self.m as i64;
        let key = (i.rem_euclid(m) as u32, j.rem_euclid(m) as u32);
        self.numbers.get(&key).copied().unwrap_or(0)
    }

    /// For each `j` in `Z_M`, whether `sum_i (i + j, i)` equals `f - 1` when
    /// `j = 0` and `f` otherwise.
    pub fn verify_lemma11(&self) -> Vec<bool> {
        // (a, b) contributes to the sum for j = a - b
        let mut sums = vec![0u32; self.m as usize];
        for (&(a, b), &count) in &self.numbers {
            sums[((a + self.m - b) % self.m) as usize] += count;
        }
        sums.iter()
            .enumerate()
            .map(|(j, &sum)| sum == if j == 0 { self.f - 1 } else { self.f })
            .collect()
    }

    /// True iff `(2l, l) = 0` for every `l` in `Z_M`.
    pub fn theorem13_condition(&self) -> bool {
        (0..self.m as i64).all(|l| self.number(2 * l, l) == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{divisors, prime_power};

    fn scheme(q: u64, m: u32) -> CyclotomicScheme {
        CyclotomicScheme::new(FieldContext::of_order(q).unwrap(), m).unwrap()
    }

    /// Recomputes `|(C_i + 1) ∩ C_j|` from raw class element lists.
    fn oracle_number(s: &CyclotomicScheme, i: i64, j: i64) -> u32 {
        let ci = s.class(i);
        let cj = s.class(j);
        ci.iter()
            .map(|&x| s.field().add(x, 1))
            .filter(|y| cj.contains(y))
            .count() as u32
    }

    #[test]
    fn q5_m2_table() {
        let s = scheme(5, 2);
        let mut c0 = s.class(0);
        let mut c1 = s.class(1);
        c0.sort();
        c1.sort();
        assert_eq!(c0, vec![1, 4]);
        assert_eq!(c1, vec![2, 3]);
        assert_eq!(s.number(0, 0), 0);
        assert_eq!(s.number(0, 1), 1);
        assert_eq!(s.number(1, 0), 1);
        assert_eq!(s.number(1, 1), 1);
        assert_eq!(s.verify_lemma11(), vec![true, true]);
        assert!(!s.theorem13_condition());
    }

    #[test]
    fn q5_m4_singletons() {
        let s = scheme(5, 4);
        let total: u32 = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).map(|(i, j)| s.number(i, j)).sum();
        assert_eq!(total, 3);
        for r in 0..4 {
            assert_eq!(s.class(r).len(), 1);
        }
    }

    #[test]
    fn indices_wrap() {
        let s = scheme(13, 4);
        assert_eq!(s.number(5, -3), s.number(1, 1));
        assert_eq!(s.class(-1), s.class(3));
    }

    #[test]
    fn q13_m4_lemma11_and_condition() {
        let s = scheme(13, 4);
        assert_eq!(s.class_size(), 3);
        for j in 0..4 {
            let sum: u32 = (0..4).map(|i| s.number(i + j, i)).sum();
            assert_eq!(sum, if j == 0 { 2 } else { 3 });
        }
        // C_0 = {1, 3, 9}; shifted by one: {2, 4, 10}, none of which is in C_0.
        assert_eq!(oracle_number(&s, 0, 0), 0);
        // C_2 + 1 = {5, 0, 11} meets C_1 = {2, 6, 5} once.
        assert_eq!(s.number(2, 1), 1);
        assert!(!s.theorem13_condition());
    }

    #[test]
    fn q7_m6_zero_row() {
        let s = scheme(7, 6);
        let sum: u32 = (0..6).map(|i| s.number(i, i)).sum();
        assert_eq!(sum, 0);
    }

    #[test]
    fn rejects_non_divisors() {
        let f = FieldContext::prime(13).unwrap();
        assert_eq!(
            CyclotomicScheme::new(f.clone(), 5),
            Err(Error::NotDivisor { m: 5, order_minus_one: 12 })
        );
        assert!(CyclotomicScheme::new(f, 1).is_err());
    }

    #[test]
    fn table_matches_oracle_and_partitions() {
        for q in (3..=128).filter(|&q| prime_power(q).is_some()) {
            let field = FieldContext::of_order(q).unwrap();
            for m in divisors(q - 1).into_iter().filter(|&m| m >= 2) {
                let s = CyclotomicScheme::new(field.clone(), m as u32).unwrap();
                let mut seen = vec![false; q as usize];
                for r in 0..m as i64 {
                    let class = s.class(r);
                    assert_eq!(class.len() as u32, s.class_size());
                    for x in class {
                        assert!(!seen[x as usize]);
                        seen[x as usize] = true;
                        assert_eq!(s.class_of(x), Some(r as u32));
                    }
                }
                assert!(seen[1..].iter().all(|&b| b));
                let mut total = 0;
                for i in 0..m as i64 {
                    for j in 0..m as i64 {
                        let n = s.number(i, j);
                        assert_eq!(n, oracle_number(&s, i, j), "q={q} M={m} ({i},{j})");
                        assert!(n <= s.class_size());
                        total += n;
                    }
                }
                assert_eq!(total as u64, q - 2);
            }
        }
    }
}
