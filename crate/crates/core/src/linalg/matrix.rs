use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::vector::IntVec;
use crate::error::{Error, Result};
use crate::integer::Integer;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Integer>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![Integer::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Integer::ONE);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Integer>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(IntMat { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&x| Integer::from(x)).collect();
        Self::from_vec(rows.len(), cols, data)
    }

    pub fn from_int_rows(rows: &[IntVec], cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.iter().cloned()).collect();
        Self::from_vec(rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(cols: &[IntVec], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Shape("ragged columns".into()));
            }
            for i in 0..rows {
                m.set(i, j, c[i].clone());
            }
        }
        Ok(m)
    }

    /// A `1×n` matrix.
    pub fn row_matrix(entries: &[i64]) -> Self {
        IntMat {
            rows: 1,
            cols: entries.len(),
            data: entries.iter().map(|&x| Integer::from(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Integer) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> IntVec {
        IntVec::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn columns(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[Integer] {
        &self.data
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Sub-matrix on the given 0-based columns, in order.
    pub fn select_columns(&self, idx: &[usize]) -> IntMat {
        let mut m = IntMat::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                m.set(i, k, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul_vec(&self, u: &IntVec) -> Result<IntVec> {
        if u.len() != self.cols {
            return Err(Error::LengthMismatch(self.cols, u.len()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(u.iter())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn mul(&self, other: &IntMat) -> Result<IntMat> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s = (0..self.cols)
                    .map(|k| self.get(i, k) * other.get(k, j))
                    .sum();
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    pub fn in_kernel(&self, u: &IntVec) -> bool {
        self.mul_vec(u).is_ok_and(|v| v.is_zero())
    }

    /// Rank over the rationals (fraction-free elimination).
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Integer>> = (0..self.rows).map(|i| self.row(i).into_entries()).collect();
        let mut rank = 0;
        let mut prev = Integer::ONE;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in rank + 1..self.rows {
                for c in col + 1..self.cols {
                    let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                    m[r][c] = v.div_exact(&prev);
                }
                m[r][col] = Integer::ZERO;
            }
            prev = m[rank][col].clone();
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Canonical text serialization: `"m n\n"` then row-major entries separated
    /// by single spaces, one matrix row per line, trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the 4ti2-style format: `m n` followed by `m·n` integers.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let mut dim = |what: &str| -> Result<usize> {
            tokens
                .next()
                .ok_or_else(|| Error::Parse(format!("missing {what}")))?
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad {what}: {e}")))
        };
        let rows = dim("row count")?;
        let cols = dim("column count")?;
        let data = tokens
            .map(str::parse::<Integer>)
            .collect::<Result<Vec<_>, _>>()?;
        if data.len() != rows * cols {
            return Err(Error::Parse(format!(
                "expected {} entries for a {rows}x{cols} matrix, found {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(IntMat { rows, cols, data })
    }

    /// SHA-256 of [`IntMat::to_text`], hex encoded.
    pub fn hash_hex(&self) -> String {
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}
