//! Cayley tables and the shared plain-text table format.
//!
//! The text format is: first line `n`, then `n` rows of `n` space-separated
//! 0-based entries, row `a` listing `a*0 .. a*(n-1)`. `#` starts a comment.
//! Several tables may follow one another (blank lines are ignored).

use std::fmt;

use crate::error::{Error, Result};

/// What a table has been verified to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Raw,
    Quandle,
    Quasigroup,
    Loop,
    Group,
}

/// An `n × n` operation table over `0..n`; `get(a, b)` is `a * b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<usize>,
    kind: TableKind,
}

impl CayleyTable {
    /// Row-major entries; every entry must be `< n`.
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Invalid(format!(
                "expected {} entries for order {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|&v| v >= n) {
            return Err(Error::OutOfRange {
                row: pos / n,
                col: pos % n,
                value: entries[pos],
                order: n,
            });
        }
        Ok(CayleyTable {
            n,
            entries,
            kind: TableKind::Raw,
        })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::Invalid(format!("row {r} has {} entries, expected {n}", rows[r].len())));
        }
        Self::new(n, rows.concat())
    }

    /// Tabulates `op` over `0..n`.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                entries.push(op(a, b));
            }
        }
        Self::new(n, entries)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub(crate) fn with_kind(mut self, kind: TableKind) -> Self {
        self.kind = kind;
        self
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.n + b]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.entries[a * self.n..(a + 1) * self.n]
    }

    pub fn column(&self, b: usize) -> Vec<usize> {
        (0..self.n).map(|a| self.get(a, b)).collect()
    }

    /// Table of `f(a) ∘ f(b) = f(a*b)` where `f[i]` is the new label of `i`.
    pub fn relabel(&self, f: &[usize]) -> CayleyTable {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                entries[f[a] * n + f[b]] = f[self.get(a, b)];
            }
        }
        CayleyTable {
            n,
            entries,
            kind: self.kind,
        }
    }

    /// Induced table on `subset` (which must be closed), relabeled `0..k` in subset order.
    pub(crate) fn restrict(&self, subset: &[usize]) -> Option<CayleyTable> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in subset.iter().enumerate() {
            index[x] = i;
        }
        let k = subset.len();
        let mut entries = Vec::with_capacity(k * k);
        for &a in subset {
            for &b in subset {
                let v = index[self.get(a, b)];
                if v == usize::MAX {
                    return None;
                }
                entries.push(v);
            }
        }
        Some(CayleyTable {
            n: k,
            entries,
            kind: self.kind,
        })
    }

    /// Serializes in the shared text format (no trailing blank line).
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for a in 0..self.n {
            let row: Vec<String> = self.row(a).iter().map(|v| v.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses exactly one table.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tables = parse_tables(text)?;
        match tables.len() {
            1 => Ok(tables.pop().unwrap()),
            0 => Err(Error::Parse {
                line: 1,
                msg: "no table found".into(),
            }),
            k => Err(Error::Parse {
                line: 1,
                msg: format!("expected one table, found {k}"),
            }),
        }
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable({:?}, n={}, {:?})", self.kind, self.n, self.entries)
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses a stream of tables in the shared text format.
pub fn parse_tables(text: &str) -> Result<Vec<CayleyTable>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut out = Vec::new();
    while let Some((lineno, header)) = lines.next() {
        let n: usize = header.parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("expected table order, found {header:?}"),
        })?;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            let (ln, row) = lines.next().ok_or(Error::Parse {
                line: lineno,
                msg: format!("table of order {n} ends after {r} rows"),
            })?;
            let vals: Vec<usize> = row
                .split_whitespace()
                .map(|t| {
                    t.parse().map_err(|_| Error::Parse {
                        line: ln,
                        msg: format!("bad entry {t:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            if vals.len() != n {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("expected {n} entries, found {}", vals.len()),
                });
            }
            if let Some(&v) = vals.iter().find(|&&v| v >= n) {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("entry {v} out of range for order {n}"),
                });
            }
            entries.extend(vals);
        }
        out.push(CayleyTable::new(n, entries)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let t = CayleyTable::from_fn(3, |a, b| (2 * b + 3 - a) % 3).unwrap();
        let s = t.to_text();
        assert_eq!(s, "3\n0 2 1\n2 1 0\n1 0 2\n");
        assert_eq!(CayleyTable::parse(&s).unwrap(), t);
    }

    #[test]
    fn parse_comments_and_streams() {
        let text = "# two tables\n1\n0\n\n2 # order\n0 0\n1 1\n";
        let ts = parse_tables(text).unwrap();
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[1].get(1, 0), 1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match CayleyTable::parse("2\n0 0\n1 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(CayleyTable::parse("2\n0 0\n").is_err());
        assert!(CayleyTable::parse("x\n").is_err());
    }

    #[test]
    fn out_of_range_entry() {
        assert!(matches!(
            CayleyTable::new(2, vec![0, 0, 2, 1]),
            Err(Error::OutOfRange { row: 1, col: 0, .. })
        ));
    }
}
