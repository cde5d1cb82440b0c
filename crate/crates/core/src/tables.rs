//! Triangular tables of Stirling numbers of the second kind and Eulerian
//! numbers, built eagerly by their defining recurrences.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `S(r, k)` for `1 <= k <= r <= max_row`.
#[derive(Debug, Clone, PartialEq)]
pub struct StirlingTable {
    // rows[r][k] for 0 <= k <= r; column 0 is zero for r >= 1.
    rows: Vec<Vec<BigInt>>,
}

/// Eulerian numbers `<r, j>` for `0 <= j <= r - 1`, `1 <= r <= max_row`.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerianTable {
    // rows[r][j] for 0 <= j < r; rows[0] is empty.
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn build(max_row: usize) -> Result<Self> {
        if max_row < 1 {
            return Err(Error::EmptyTable(max_row));
        }
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_row + 1);
        rows.push(vec![BigInt::one()]);
        for r in 1..=max_row {
            let prev = &rows[r - 1];
            let mut row = vec![BigInt::zero(); r + 1];
            for k in 1..=r {
                let stay = if k < r { &prev[k] * k } else { BigInt::zero() };
                row[k] = stay + &prev[k - 1];
            }
            rows.push(row);
        }
        Ok(Self { rows })
    }

    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// S(r, k); zero for `k < 1` or `k > r`.
    pub fn get(&self, r: usize, k: i64) -> Result<BigInt> {
        let row = self.row(r)?;
        if k < 1 || k as usize > r {
            return Ok(BigInt::zero());
        }
        Ok(row[k as usize - 1].clone())
    }

    /// Row `r` as `[S(r,1), ..., S(r,r)]`.
    pub fn row(&self, r: usize) -> Result<&[BigInt]> {
        if r < 1 || r > self.max_row() {
            return Err(Error::RowOutOfRange {
                row: r,
                max_row: self.max_row(),
            });
        }
        Ok(&self.rows[r][1..])
    }
}

impl EulerianTable {
    pub fn build(max_row: usize) -> Result<Self> {
        if max_row < 1 {
            return Err(Error::EmptyTable(max_row));
        }
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_row + 1);
        rows.push(Vec::new());
        rows.push(vec![BigInt::one()]);
        for r in 2..=max_row {
            let prev = &rows[r - 1];
            let row = (0..r)
                .map(|j| {
                    let mut v = BigInt::zero();
                    if j < r - 1 {
                        v += &prev[j] * (j + 1);
                    }
                    if j >= 1 {
                        v += &prev[j - 1] * (r - j);
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
        Ok(Self { rows })
    }

    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// <r, j>; zero for `j < 0` or `j > r - 1`.
    pub fn get(&self, r: usize, j: i64) -> Result<BigInt> {
        let row = self.row(r)?;
        if j < 0 || j as usize >= r {
            return Ok(BigInt::zero());
        }
        Ok(row[j as usize].clone())
    }

    /// Row `r` as `[<r,0>, ..., <r,r-1>]`.
    pub fn row(&self, r: usize) -> Result<&[BigInt]> {
        if r < 1 || r > self.max_row() {
            return Err(Error::RowOutOfRange {
                row: r,
                max_row: self.max_row(),
            });
        }
        Ok(&self.rows[r])
    }
}

/// Both triangles built to the same row, as consumed by the Bernoulli
/// formulas and the polylogarithm closed forms.
#[derive(Debug, Clone, PartialEq)]
pub struct Tables {
    pub stirling: StirlingTable,
    pub eulerian: EulerianTable,
}

impl Tables {
    pub fn build(max_row: usize) -> Result<Self> {
        Ok(Self {
            stirling: StirlingTable::build(max_row)?,
            eulerian: EulerianTable::build(max_row)?,
        })
    }
}

pub fn build_stirling(max_row: usize) -> Result<StirlingTable> {
    StirlingTable::build(max_row)
}

pub fn build_eulerian(max_row: usize) -> Result<EulerianTable> {
    EulerianTable::build(max_row)
}

pub fn stirling2(table: &StirlingTable, r: usize, k: i64) -> Result<BigInt> {
    table.get(r, k)
}

pub fn eulerian(table: &EulerianTable, r: usize, j: i64) -> Result<BigInt> {
    table.get(r, j)
}
