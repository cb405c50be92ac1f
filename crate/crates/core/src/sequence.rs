//! Frequency-hopping sequences, sets of them, and the plain-text file format.
//!
//! The file format is a header line `N M L` followed by `L` lines of `N`
//! space-separated symbol ids, each in `0..M`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Longest supported sequence.
pub const MAX_LEN: usize = 1 << 16;
/// Largest supported set.
pub const MAX_SET_SIZE: usize = 1 << 8;
/// Largest supported alphabet.
pub const MAX_ALPHABET: u32 = 1 << 20;

/// A single sequence of symbol ids over an alphabet `0..alphabet_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fhs {
    symbols: Vec<u32>,
    alphabet_size: u32,
}

impl Fhs {
    pub fn new(symbols: Vec<u32>, alphabet_size: u32) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidParam("sequence must be nonempty".into()));
        }
        if symbols.len() > MAX_LEN {
            return Err(Error::InvalidParam(format!(
                "sequence length {} exceeds {MAX_LEN}",
                symbols.len()
            )));
        }
        if alphabet_size == 0 || alphabet_size > MAX_ALPHABET {
            return Err(Error::InvalidParam(format!(
                "alphabet size {alphabet_size} outside 1..={MAX_ALPHABET}"
            )));
        }
        if let Some((t, &s)) = symbols.iter().enumerate().find(|(_, &s)| s >= alphabet_size) {
            return Err(Error::InvalidParam(format!(
                "symbol {s} at position {t} is outside the alphabet of size {alphabet_size}"
            )));
        }
        Ok(Fhs {
            symbols,
            alphabet_size,
        })
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    /// Occurrence count of every symbol, indexed by symbol id.
    pub fn counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.alphabet_size as usize];
        for &s in &self.symbols {
            counts[s as usize] += 1;
        }
        counts
    }
}

/// Where a set came from: construction name, integer parameters, free-form notes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    pub params: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Provenance {
    pub fn new(construction: impl Into<String>) -> Self {
        Provenance {
            construction: construction.into(),
            ..Default::default()
        }
    }

    pub fn param(mut self, key: &str, value: u64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// `L` sequences of common length `N` over a common alphabet of size `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FhsSet {
    sequences: Vec<Fhs>,
    labels: Option<Vec<String>>,
    provenance: Provenance,
}

impl FhsSet {
    pub fn new(sequences: Vec<Fhs>, provenance: Provenance) -> Result<Self> {
        let first = sequences
            .first()
            .ok_or_else(|| Error::InvalidParam("a set needs at least one sequence".into()))?;
        if sequences.len() > MAX_SET_SIZE {
            return Err(Error::InvalidParam(format!(
                "set size {} exceeds {MAX_SET_SIZE}",
                sequences.len()
            )));
        }
        let (n, m) = (first.len(), first.alphabet_size());
        if let Some((i, x)) = sequences
            .iter()
            .enumerate()
            .find(|(_, x)| x.len() != n || x.alphabet_size() != m)
        {
            return Err(Error::ShapeMismatch(format!(
                "sequence {i} has length {} over {} symbols; expected {n} over {m}",
                x.len(),
                x.alphabet_size()
            )));
        }
        Ok(FhsSet {
            sequences,
            labels: None,
            provenance,
        })
    }

    /// Builds a set from raw rows over alphabet `0..m`.
    pub fn from_rows(rows: Vec<Vec<u32>>, m: u32, provenance: Provenance) -> Result<Self> {
        let sequences = rows
            .into_iter()
            .map(|row| Fhs::new(row, m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(sequences, provenance)
    }

    /// Attaches display labels, one per symbol id.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.alphabet_size() as usize {
            return Err(Error::ShapeMismatch(format!(
                "{} labels for an alphabet of {}",
                labels.len(),
                self.alphabet_size()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// Sequence length `N`.
    pub fn seq_len(&self) -> usize {
        self.sequences[0].len()
    }

    /// Alphabet size `M`.
    pub fn alphabet_size(&self) -> u32 {
        self.sequences[0].alphabet_size()
    }

    /// Number of sequences `L`.
    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    /// `(N, M, L)`.
    pub fn shape(&self) -> (usize, u32, usize) {
        (self.seq_len(), self.alphabet_size(), self.len())
    }

    pub fn sequences(&self) -> &[Fhs] {
        &self.sequences
    }

    pub fn get(&self, i: usize) -> Option<&Fhs> {
        self.sequences.get(i)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display form of a symbol: its label if present, else the id.
    pub fn label(&self, symbol: u32) -> String {
        match &self.labels {
            Some(labels) => labels[symbol as usize].clone(),
            None => symbol.to_string(),
        }
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Aggregate symbol counts over the whole set.
    pub fn counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.alphabet_size() as usize];
        for x in &self.sequences {
            for &s in x.symbols() {
                counts[s as usize] += 1;
            }
        }
        counts
    }

    /// Serializes to the sequence file format (trailing newline included).
    pub fn to_text(&self) -> String {
        let (n, m, l) = self.shape();
        let mut out = format!("{n} {m} {l}\n");
        for x in &self.sequences {
            let mut first = true;
            for s in x.symbols() {
                if !first {
                    out.push(' ');
                }
                first = false;
                write!(out, "{s}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Parses the sequence file format. Errors carry 1-based line and column.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (header_no, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            column: 1,
            message: "empty input; expected header `N M L`".into(),
        })?;
        let header_fields = tokens(header_no, header)?;
        if header_fields.len() != 3 {
            return Err(Error::Parse {
                line: header_no + 1,
                column: 1,
                message: format!("header must have 3 fields `N M L`, found {}", header_fields.len()),
            });
        }
        let [(n, _), (m, m_col), (l, _)] = [header_fields[0], header_fields[1], header_fields[2]];
        if n == 0 || l == 0 || m == 0 {
            return Err(Error::Parse {
                line: header_no + 1,
                column: 1,
                message: "N, M and L must all be positive".into(),
            });
        }
        if m > MAX_ALPHABET as u64 {
            return Err(Error::Parse {
                line: header_no + 1,
                column: m_col,
                message: format!("alphabet size {m} exceeds {MAX_ALPHABET}"),
            });
        }
        if n > MAX_LEN as u64 || l > MAX_SET_SIZE as u64 {
            return Err(Error::Parse {
                line: header_no + 1,
                column: 1,
                message: format!("shape exceeds limits N <= {MAX_LEN}, L <= {MAX_SET_SIZE}"),
            });
        }

        let mut rows = Vec::with_capacity(l as usize);
        let mut last_line = header_no;
        for (line_no, line) in lines {
            last_line = line_no;
            if rows.len() as u64 == l {
                return Err(Error::Parse {
                    line: line_no + 1,
                    column: 1,
                    message: format!("more than the declared {l} sequences"),
                });
            }
            let fields = tokens(line_no, line)?;
            if fields.len() as u64 != n {
                return Err(Error::Parse {
                    line: line_no + 1,
                    column: fields.get(n as usize).map_or(line.len() + 1, |f| f.1),
                    message: format!("expected {n} symbols, found {}", fields.len()),
                });
            }
            let mut row = Vec::with_capacity(n as usize);
            for (value, column) in fields {
                if value >= m {
                    return Err(Error::Parse {
                        line: line_no + 1,
                        column,
                        message: format!("symbol {value} is not below M = {m}"),
                    });
                }
                row.push(value as u32);
            }
            rows.push(row);
        }
        if (rows.len() as u64) < l {
            return Err(Error::Parse {
                line: last_line + 2,
                column: 1,
                message: format!("expected {l} sequences, found {}", rows.len()),
            });
        }
        FhsSet::from_rows(rows, m as u32, Provenance::new("file"))
    }
}

/// Unsigned integer tokens with their 1-based columns.
fn tokens(line_no: usize, line: &str) -> Result<Vec<(u64, usize)>> {
    let mut out = Vec::new();
    let mut chars = line.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut end = start;
        while let Some(&(i, c)) = chars.peek() {
            if c.is_whitespace() {
                break;
            }
            end = i + c.len_utf8();
            chars.next();
        }
        let word = &line[start..end];
        let column = line[..start].chars().count() + 1;
        let value = word.parse::<u64>().map_err(|_| Error::Parse {
            line: line_no + 1,
            column,
            message: format!("expected a nonnegative integer, found {word:?}"),
        })?;
        out.push((value, column));
    }
    Ok(out)
}
