//! Rearranging the `N L` entries of a set into a new `(N', L')` shape.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::sequence::{Fhs, FhsSet, Provenance};

/// For every target coordinate `(j, s)`, the source coordinate `(i, t)` it
/// copies: `Y_j(s) = X_i(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterleaveMap {
    source: (usize, usize),
    target: (usize, usize),
    // indexed by j * N' + s
    entries: Vec<(u32, u32)>,
}

impl InterleaveMap {
    /// Validates shapes and bijectivity. `source` and `target` are `(len, count)`.
    pub fn new(source: (usize, usize), target: (usize, usize), entries: Vec<(u32, u32)>) -> Result<Self> {
        let (n, l) = source;
        let (n2, l2) = target;
        if n == 0 || l == 0 || n2 == 0 || l2 == 0 || n * l != n2 * l2 {
            return Err(Error::ShapeMismatch(format!(
                "cannot interleave {l} x {n} into {l2} x {n2}"
            )));
        }
        if entries.len() != n2 * l2 {
            return Err(Error::ShapeMismatch(format!(
                "map has {} entries for a {l2} x {n2} target",
                entries.len()
            )));
        }
        let mut hit = vec![false; n * l];
        for (k, &(i, t)) in entries.iter().enumerate() {
            let (i, t) = (i as usize, t as usize);
            if i >= l || t >= n {
                return Err(Error::NotBijective(format!(
                    "target {k} points outside the source at ({i}, {t})"
                )));
            }
            if std::mem::replace(&mut hit[i * n + t], true) {
                return Err(Error::NotBijective(format!("source ({i}, {t}) used twice")));
            }
        }
        Ok(InterleaveMap {
            source,
            target,
            entries,
        })
    }

    pub fn identity(n: usize, l: usize) -> Self {
        let entries = (0..l as u32).flat_map(|i| (0..n as u32).map(move |t| (i, t))).collect();
        InterleaveMap {
            source: (n, l),
            target: (n, l),
            entries,
        }
    }

    /// The column-interleaving map `Y_i(k t1 + t0) = X_{k i + t0}(t1)` that
    /// merges each run of `k` consecutive sequences into one of length `k N`.
    pub fn column(n: usize, l: usize, k: usize) -> Result<Self> {
        if k == 0 || !l.is_multiple_of(k) {
            return Err(Error::InvalidParam(format!(
                "interleaving factor k = {k} must be a positive divisor of L = {l}"
            )));
        }
        let mut entries = Vec::with_capacity(n * l);
        for i in 0..l / k {
            for s in 0..k * n {
                let (t1, t0) = (s / k, s % k);
                entries.push(((k * i + t0) as u32, t1 as u32));
            }
        }
        Self::new((n, l), (k * n, l / k), entries)
    }

    /// A uniformly random bijection onto a `(target_len, N L / target_len)` shape.
    pub fn random<R: Rng + ?Sized>(n: usize, l: usize, target_len: usize, rng: &mut R) -> Result<Self> {
        if target_len == 0 || !(n * l).is_multiple_of(target_len) {
            return Err(Error::ShapeMismatch(format!(
                "target length {target_len} does not divide N L = {}",
                n * l
            )));
        }
        let mut entries: Vec<(u32, u32)> = (0..l as u32)
            .flat_map(|i| (0..n as u32).map(move |t| (i, t)))
            .collect();
        entries.shuffle(rng);
        Self::new((n, l), (target_len, n * l / target_len), entries)
    }

    pub fn source_shape(&self) -> (usize, usize) {
        self.source
    }

    pub fn target_shape(&self) -> (usize, usize) {
        self.target
    }

    /// Source coordinate of target `(j, s)`.
    pub fn get(&self, j: usize, s: usize) -> (usize, usize) {
        let (i, t) = self.entries[j * self.target.0 + s];
        (i as usize, t as usize)
    }
}

/// Applies `map` to `set`. The result keeps the alphabet and labels.
pub fn interleave(set: &FhsSet, map: &InterleaveMap) -> Result<FhsSet> {
    let (n, m, l) = set.shape();
    if (n, l) != map.source_shape() {
        return Err(Error::ShapeMismatch(format!(
            "map expects {:?} (len, count) but set is ({n}, {l})",
            map.source_shape()
        )));
    }
    let (n2, l2) = map.target_shape();
    let seqs = set.sequences();
    let rows = (0..l2)
        .map(|j| {
            let symbols = (0..n2)
                .map(|s| {
                    let (i, t) = map.get(j, s);
                    seqs[i].symbols()[t]
                })
                .collect();
            Fhs::new(symbols, m)
        })
        .collect::<Result<Vec<_>>>()?;
    let provenance = Provenance::new("generic_interleave")
        .param("source_len", n as u64)
        .param("source_count", l as u64)
        .note(format!("interleaved from {}", set.provenance().construction));
    let out = FhsSet::new(rows, provenance)?;
    match set.labels() {
        Some(labels) => out.with_labels(labels.to_vec()),
        None => Ok(out),
    }
}

/// Column interleaving with factor `k` (requires `k | L`).
pub fn construction_c(set: &FhsSet, k: usize) -> Result<FhsSet> {
    let (n, _, l) = set.shape();
    let map = InterleaveMap::column(n, l, k)?;
    let mut provenance = set.provenance().clone();
    provenance.construction = format!("construction_c({})", provenance.construction);
    provenance.params.insert("k".into(), k as u64);
    Ok(interleave(set, &map)?.with_provenance(provenance))
}
