//! Generators for the individual sequence-set families.

use crate::algebra::{factorize, is_prime, FieldContext};
use crate::cyclotomy::CyclotomicScheme;
use crate::error::{Error, Result};
use crate::sequence::{FhsSet, Provenance};

use super::interleave::construction_c;

fn invalid(msg: String) -> Error {
    Error::InvalidParam(msg)
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(invalid(format!("p = {p} must be an odd prime")));
    }
    Ok(())
}

/// `(p^2, p, p)` set `X_i(t0 p + t1) = p * <t0 t1 + i>_p` over `p Z_p`.
/// Symbol id `k` stands for the residue `p k`.
pub fn kumar(p: u64) -> Result<FhsSet> {
    require_odd_prime(p)?;
    if p * p > crate::sequence::MAX_LEN as u64 {
        return Err(invalid(format!("p = {p} gives sequences longer than the limit")));
    }
    let rows = (0..p)
        .map(|i| {
            (0..p * p)
                .map(|t| ((t / p) * (t % p) + i) % p)
                .map(|s| s as u32)
                .collect()
        })
        .collect();
    let labels = (0..p).map(|k| (p * k).to_string()).collect();
    FhsSet::from_rows(rows, p as u32, Provenance::new("kumar").param("p", p))?.with_labels(labels)
}

/// No-hit-zone set over `Z_k x Z_N` with `L = floor(N / d)` sequences of length `k N`.
///
/// `X_i(k t1 + t0) = (t0, t1 + i d)` for `t0 <= floor(k/2)`, and
/// `(t0, t1 + (L - 1 - i) d)` otherwise; second coordinates are reduced mod `N`.
/// The pair `(a, b)` is stored as id `a N + b`.
pub fn nhz(k: u64, n: u64, d: u64) -> Result<FhsSet> {
    if n < 3 || k < 2 || k >= n || d < 1 || 2 * d >= n {
        return Err(invalid(format!(
            "need N >= 3, 2 <= k < N and 1 <= d < N/2; got k = {k}, N = {n}, d = {d}"
        )));
    }
    if k * n > crate::sequence::MAX_LEN as u64 {
        return Err(invalid(format!("k N = {} exceeds the length limit", k * n)));
    }
    let l = n / d;
    let r = n - l * d;
    let rows = (0..l)
        .map(|i| {
            (0..k * n)
                .map(|t| {
                    let (t1, t0) = (t / k, t % k);
                    let shift = if t0 <= k / 2 { i * d } else { (l - 1 - i) * d };
                    (t0 * n + (t1 + shift) % n) as u32
                })
                .collect()
        })
        .collect();
    let labels = (0..k)
        .flat_map(|a| (0..n).map(move |b| format!("({a},{b})")))
        .collect();
    let provenance = Provenance::new("nhz")
        .param("k", k)
        .param("N", n)
        .param("d", d)
        .param("r", r)
        .note("zone optimality against the no-hit-zone bound is not recomputed");
    FhsSet::from_rows(rows, (k * n) as u32, provenance)?.with_labels(labels)
}

/// `(p^2 - p, p, p)` set `X_i(t) = <(t0 + 1) t1 + i>_p` with `t0 = <t>_{p-1}`, `t1 = <t>_p`.
pub fn p2p(p: u64) -> Result<FhsSet> {
    require_odd_prime(p)?;
    if p * (p - 1) > crate::sequence::MAX_LEN as u64 {
        return Err(invalid(format!("p = {p} gives sequences longer than the limit")));
    }
    let rows = (0..p)
        .map(|i| {
            (0..p * p - p)
                .map(|t| (((t % (p - 1)) + 1) * (t % p) + i) % p)
                .map(|s| s as u32)
                .collect()
        })
        .collect();
    FhsSet::from_rows(rows, p as u32, Provenance::new("p2p").param("p", p))
}

fn cyclotomic_params(q: u64, m: u64) -> Result<u64> {
    if m < 2 || !(q - 1).is_multiple_of(m) {
        return Err(invalid(format!("M = {m} must be at least 2 and divide q - 1 = {}", q - 1)));
    }
    Ok((q - 1) / m)
}

/// `(p, M, M)` set over `Z_M`: `X_i(0) = i`, `X_i(t) = <r + i>_M` for `t` in `C_r`.
pub fn cyclotomic_a(p: u64, m: u64) -> Result<FhsSet> {
    require_odd_prime(p)?;
    let f = cyclotomic_params(p, m)?;
    let field = FieldContext::prime(p)?;
    let scheme = CyclotomicScheme::new(field, m as u32)?;
    let m32 = m as u32;
    let rows = (0..m32)
        .map(|i| {
            std::iter::once(i)
                .chain((1..p as u32).map(|t| (scheme.class_of(t).expect("nonzero") + i) % m32))
                .collect()
        })
        .collect();
    let provenance = Provenance::new("cyclotomic_a")
        .param("p", p)
        .param("M", m)
        .param("f", f)
        .param("alpha", scheme.field().alpha() as u64);
    FhsSet::from_rows(rows, m32, provenance)
}

/// `(q - 1, M, M)` set over `Z_M`: `X_i(t) = <r + i>_M` when `alpha^t + 1` is in
/// `C_r`, and `X_i(t) = i` at the position where `alpha^t + 1 = 0`.
pub fn cyclotomic_b(q: u64, m: u64) -> Result<FhsSet> {
    let field = FieldContext::of_order(q)?;
    let f = cyclotomic_params(q, m)?;
    let scheme = CyclotomicScheme::new(field, m as u32)?;
    let field = scheme.field();
    let m32 = m as u32;
    let rows = (0..m32)
        .map(|i| {
            (0..q - 1)
                .map(|t| match scheme.class_of(field.add(field.exp(t), 1)) {
                    Some(r) => (r + i) % m32,
                    None => i,
                })
                .collect()
        })
        .collect();
    let mut provenance = Provenance::new("cyclotomic_b")
        .param("q", q)
        .param("p", field.characteristic() as u64)
        .param("n", field.degree() as u64)
        .param("M", m)
        .param("f", f);
    if q.is_multiple_of(2) {
        provenance = provenance.note("even q: alpha^t + 1 is never zero, so no position takes the value i");
    }
    FhsSet::from_rows(rows, m32, provenance)
}

/// Smallest prime factor of an odd `N >= 3`.
pub(crate) fn smallest_odd_prime_factor(n: u64) -> Result<u64> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(invalid(format!("N = {n} must be odd and at least 3")));
    }
    Ok(factorize(n)[0].0)
}

/// `(N, N, p1 - 1)` set `X_i(t) = <(i + 1) t>_N`, `p1` the smallest prime factor of odd `N`.
pub fn multiplicative(n: u64) -> Result<FhsSet> {
    let p1 = smallest_odd_prime_factor(n)?;
    if n > crate::sequence::MAX_LEN as u64 {
        return Err(invalid(format!("N = {n} exceeds the length limit")));
    }
    let rows = (0..p1 - 1)
        .map(|i| (0..n).map(|t| ((i + 1) * t % n) as u32).collect())
        .collect();
    FhsSet::from_rows(rows, n as u32, Provenance::new("multiplicative").param("N", n).param("p1", p1))
}

/// `(k N, N, (p1 - 1) / k)` set: column interleaving of [`multiplicative`] with factor `k`.
pub fn theorem17(n: u64, k: u64) -> Result<FhsSet> {
    let p1 = smallest_odd_prime_factor(n)?;
    if k == 0 || (p1 - 1) % k != 0 {
        return Err(invalid(format!("k = {k} must be a positive divisor of p1 - 1 = {}", p1 - 1)));
    }
    let base = multiplicative(n)?;
    let out = construction_c(&base, k as usize)?;
    Ok(out.with_provenance(
        Provenance::new("theorem17")
            .param("N", n)
            .param("k", k)
            .param("p1", p1),
    ))
}

/// `(2p, M, M/2)` set: column interleaving of [`cyclotomic_a`] with factor 2,
/// for even `M` with odd `f = (p - 1) / M`.
pub fn corollary16(p: u64, m: u64) -> Result<FhsSet> {
    require_odd_prime(p)?;
    let f = cyclotomic_params(p, m)?;
    if !m.is_multiple_of(2) || f % 2 == 0 {
        return Err(invalid(format!("need M even and f odd; got M = {m}, f = {f}")));
    }
    let base = cyclotomic_a(p, m)?;
    let out = construction_c(&base, 2)?;
    Ok(out.with_provenance(
        Provenance::new("corollary16")
            .param("p", p)
            .param("M", m)
            .param("f", f),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kumar_p3_rows() {
        let s = kumar(3).unwrap();
        assert_eq!(s.shape(), (9, 3, 3));
        assert_eq!(s.sequences()[0].symbols(), &[0, 0, 0, 0, 1, 2, 0, 2, 1]);
        let labels: Vec<String> = s.sequences()[0].symbols().iter().map(|&x| s.label(x)).collect();
        assert_eq!(labels, ["0", "0", "0", "0", "3", "6", "0", "6", "3"]);
        assert!(kumar(2).is_err());
        assert!(kumar(9).is_err());
    }

    #[test]
    fn nhz_shape_and_labels() {
        let s = nhz(2, 5, 2).unwrap();
        assert_eq!(s.shape(), (10, 10, 2));
        assert_eq!(s.label(7), "(1,2)");
        assert_eq!(s.provenance().params["r"], 1);
        for bad in [(2, 2, 1), (1, 5, 1), (5, 5, 1), (2, 5, 0), (2, 6, 3)] {
            assert!(nhz(bad.0, bad.1, bad.2).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn p2p_p3_counts() {
        let s = p2p(3).unwrap();
        assert_eq!(s.shape(), (6, 3, 3));
        for x in s.sequences() {
            assert_eq!(x.counts(), vec![2, 2, 2]);
        }
    }

    #[test]
    fn cyclotomic_a_p13_m4_rows() {
        let s = cyclotomic_a(13, 4).unwrap();
        assert_eq!(s.shape(), (13, 4, 4));
        // alpha = 2: C_0 = {1,3,9}, C_1 = {2,5,6}, C_2 = {4,10,12}, C_3 = {7,8,11}
        assert_eq!(s.sequences()[0].symbols(), &[0, 0, 1, 0, 2, 1, 1, 3, 3, 0, 2, 3, 2]);
        assert_eq!(s.sequences()[1].symbols()[0], 1);
        assert!(cyclotomic_a(13, 5).is_err());
        assert!(cyclotomic_a(13, 1).is_err());
    }

    #[test]
    fn cyclotomic_b_special_position() {
        let s = cyclotomic_b(13, 4).unwrap();
        assert_eq!(s.shape(), (12, 4, 4));
        // alpha^6 = -1 for q = 13
        for (i, x) in s.sequences().iter().enumerate() {
            assert_eq!(x.symbols()[6], i as u32);
        }
        let even = cyclotomic_b(16, 3).unwrap();
        assert_eq!(even.shape(), (15, 3, 3));
        assert!(!even.provenance().notes.is_empty());
        assert!(cyclotomic_b(12, 2).is_err());
        assert!(cyclotomic_b(9, 3).is_err());
    }

    #[test]
    fn theorem17_and_corollary16_shapes() {
        assert_eq!(theorem17(35, 2).unwrap().shape(), (70, 35, 2));
        assert_eq!(theorem17(35, 1).unwrap().shape(), (35, 35, 4));
        assert_eq!(theorem17(15, 2).unwrap().shape(), (30, 15, 1));
        assert!(theorem17(35, 3).is_err());
        assert!(theorem17(36, 2).is_err());
        assert_eq!(corollary16(13, 4).unwrap().shape(), (26, 4, 2));
        assert!(corollary16(13, 2).is_err());
        assert!(corollary16(13, 3).is_err());
    }
}
