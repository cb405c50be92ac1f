//! Arithmetic in GF(p) and GF(p^n) backed by dense exponent/logarithm tables.
//!
//! Elements are packed as integers in `[0, q)`: the polynomial
//! `c0 + c1 x + ... + c_{n-1} x^{n-1}` is stored as `c0 + c1 p + ... + c_{n-1} p^{n-1}`.
//! For prime fields this is just the residue itself.
//!
//! The primitive element is chosen deterministically: the smallest primitive
//! root for `n = 1`, and the class of `x` modulo the lexicographically
//! smallest monic irreducible polynomial for which `x` is primitive when
//! `n > 1` (coefficient vectors compared constant term first).

use crate::error::{Error, Result};

/// Largest supported number of nonzero elements (`q - 1`).
pub const MAX_NONZERO: u64 = 1 << 20;

const NO_LOG: u32 = u32::MAX;

/// A finite field with a fixed primitive element and full discrete-log table.
///
/// Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldContext {
    p: u32,
    n: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    alpha: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FieldContext {
    /// Builds GF(p) with the smallest primitive root as generator.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        check_size(p)?;
        let p32 = p as u32;
        let order = p32 - 1;
        let alpha = (1..p32.max(2))
            .find(|&g| multiplicative_order_mod(g, p32) == order)
            .expect("every prime field has a primitive root");
        let mut exp = Vec::with_capacity(order as usize);
        let mut x = 1u64;
        for _ in 0..order {
            exp.push(x as u32);
            x = x * alpha as u64 % p;
        }
        Ok(Self::from_exp_table(p32, 1, None, alpha, exp))
    }

    /// Builds GF(p^n), `n >= 2`, with `alpha = x` modulo the canonical modulus.
    pub fn extension(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n < 2 {
            return Err(Error::InvalidParam(format!(
                "extension degree must be at least 2, got {n}"
            )));
        }
        let q = p
            .checked_pow(n)
            .filter(|q| q - 1 <= MAX_NONZERO)
            .ok_or(Error::TooLarge {
                order: p.saturating_pow(n),
                limit: MAX_NONZERO,
            })?;
        let p32 = p as u32;
        let q32 = q as u32;
        let order = q32 - 1;

        // Candidate tails (c0, ..., c_{n-1}) enumerated with c0 most significant.
        for idx in 0..q32 {
            let mut tail = vec![0u32; n as usize];
            let mut rest = idx;
            for slot in tail.iter_mut().rev() {
                *slot = rest % p32;
                rest /= p32;
            }
            if tail[0] == 0 {
                // divisible by x
                continue;
            }
            let mut modulus = tail;
            modulus.push(1);
            if !poly::is_irreducible(&modulus, p32) {
                continue;
            }
            if let Some(exp) = powers_of_x(&modulus, p32, order) {
                return Ok(Self::from_exp_table(p32, n, Some(modulus), p32, exp));
            }
        }
        unreachable!("a primitive polynomial of every degree exists")
    }

    /// Builds GF(q) for any prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, n) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if n == 1 {
            Self::prime(p)
        } else {
            Self::extension(p, n)
        }
    }

    fn from_exp_table(p: u32, n: u32, modulus: Option<Vec<u32>>, alpha: u32, exp: Vec<u32>) -> Self {
        let q = exp.len() as u32 + 1;
        let mut log = vec![NO_LOG; q as usize];
        for (l, &x) in exp.iter().enumerate() {
            debug_assert_eq!(log[x as usize], NO_LOG, "alpha is not primitive");
            log[x as usize] = l as u32;
        }
        FieldContext {
            p,
            n,
            q,
            modulus,
            alpha,
            exp,
            log,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Monic modulus, coefficients constant term first; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    /// Validates a packed element.
    pub fn element(&self, value: u64) -> Result<u32> {
        if value < self.q as u64 {
            Ok(value as u32)
        } else {
            Err(Error::InvalidElement {
                value,
                order: self.q as u64,
            })
        }
    }

    /// Discrete logarithm base `alpha`; `None` for zero.
    pub fn dlog(&self, x: u32) -> Option<u32> {
        match self.log[x as usize] {
            NO_LOG => None,
            l => Some(l),
        }
    }

    /// `alpha^l`, exponent taken modulo `q - 1`.
    pub fn exp(&self, l: u64) -> u32 {
        self.exp[(l % self.exp.len() as u64) as usize]
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.n == 1 {
            return (a + b) % self.p;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.n == 1 {
            return (self.p - a) % self.p;
        }
        self.digitwise(a, 0, |x, _| (self.p - x) % self.p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match (self.dlog(a), self.dlog(b)) {
            (Some(la), Some(lb)) => self.exp(la as u64 + lb as u64),
            _ => 0,
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        let l = self.dlog(a).ok_or(Error::DivisionByZero)?;
        Ok(self.exp((self.q - 1 - l) as u64))
    }

    /// `a^e` with the convention `0^0 = 1`.
    pub fn pow(&self, a: u32, e: u64) -> u32 {
        match self.dlog(a) {
            Some(l) => self.exp(((l as u128 * e as u128) % (self.q as u128 - 1)) as u64),
            None if e == 0 => 1,
            None => 0,
        }
    }

    /// Iterator over all nonzero elements in power order `alpha^0, alpha^1, ...`.
    pub fn powers(&self) -> impl Iterator<Item = u32> + '_ {
        self.exp.iter().copied()
    }

    fn digitwise(&self, a: u32, b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.n {
            out += op(a % self.p, b % self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }
}

fn check_size(q: u64) -> Result<()> {
    if q - 1 > MAX_NONZERO {
        Err(Error::TooLarge {
            order: q,
            limit: MAX_NONZERO,
        })
    } else {
        Ok(())
    }
}

fn multiplicative_order_mod(g: u32, p: u32) -> u32 {
    let mut x = g as u64 % p as u64;
    let mut k = 1;
    while x != 1 {
        x = x * g as u64 % p as u64;
        k += 1;
        if k > p {
            return 0;
        }
    }
    k
}

/// Packed powers `x^0 .. x^{order-1}` modulo `modulus`, or `None` when `x`
/// returns to 1 early (not primitive).
fn powers_of_x(modulus: &[u32], p: u32, order: u32) -> Option<Vec<u32>> {
    let n = modulus.len() - 1;
    let mut coeffs = vec![0u32; n];
    coeffs[0] = 1;
    let mut exp = Vec::with_capacity(order as usize);
    for k in 0..order {
        if k > 0 && coeffs[0] == 1 && coeffs[1..].iter().all(|&c| c == 0) {
            return None;
        }
        exp.push(poly::pack(&coeffs, p));
        poly::times_x(&mut coeffs, modulus, p);
    }
    Some(exp)
}

/// Dense polynomials over GF(p), coefficients constant term first.
pub(crate) mod poly {
    pub fn pack(coeffs: &[u32], p: u32) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    pub fn unpack(mut value: u32, p: u32, n: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            out.push(value % p);
            value /= p;
        }
        out
    }

    /// Multiplies a reduced residue (length n) by x modulo the monic `modulus`.
    pub fn times_x(coeffs: &mut [u32], modulus: &[u32], p: u32) {
        let n = coeffs.len();
        let carry = coeffs[n - 1];
        for i in (1..n).rev() {
            coeffs[i] = coeffs[i - 1];
        }
        coeffs[0] = 0;
        if carry != 0 {
            for (c, &m) in coeffs.iter_mut().zip(modulus) {
                *c = (*c + p - carry * m % p) % p;
            }
        }
    }

    fn inverse_mod(a: u32, p: u32) -> u32 {
        // p is prime and small; Fermat is fine here.
        let mut result = 1u64;
        let mut base = a as u64 % p as u64;
        let mut e = p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        result as u32
    }

    /// Remainder of `a` divided by `b` (b nonzero leading coefficient).
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let lead_inv = inverse_mod(b[db], p);
        while r.len() > db {
            let top = *r.last().unwrap();
            if top != 0 {
                let factor = top as u64 * lead_inv as u64 % p as u64;
                let shift = r.len() - 1 - db;
                for (i, &bc) in b.iter().enumerate() {
                    let sub = (factor * bc as u64 % p as u64) as u32;
                    r[shift + i] = (r[shift + i] + p - sub) % p;
                }
            }
            r.pop();
        }
        r
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for idx in 0..count {
                let mut g = unpack(idx as u32, p, d);
                g.push(1);
                if rem(f, &g, p).iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Schoolbook product reduced modulo `modulus`; independent of the log tables.
    #[cfg(test)]
    pub fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
        let mut prod = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        let mut r = rem(&prod, modulus, p);
        r.resize(modulus.len() - 1, 0);
        r
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, n))` when `q = p^n` for a prime `p` and `n >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, n)] => Some((*p, *n)),
        _ => None,
    }
}

/// Positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
