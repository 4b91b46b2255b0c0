//! Dense square integer matrices with overflow-checked arithmetic.

use std::fmt;

use crate::error::{check_order, Error, Result};
use crate::relation::Relation;

/// Square matrix of exact signed integers indexed by `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CountMatrix {
    order: usize,
    cells: Vec<i64>,
}

impl CountMatrix {
    pub fn zeros(order: usize) -> Self {
        CountMatrix {
            order,
            cells: vec![0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |a, b| i64::from(a == b))
    }

    pub fn all_ones(order: usize) -> Self {
        Self::from_fn(order, |_, _| 1)
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                cells.push(f(a, b));
            }
        }
        CountMatrix { order, cells }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NonSquare {
                    rows: n,
                    row,
                    len: r.len(),
                });
            }
        }
        Ok(CountMatrix {
            order: n,
            cells: rows.concat(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.cells[a * self.order + b]
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize, value: i64) {
        self.cells[a * self.order + b] = value;
    }

    /// Row-major cell values.
    pub fn cells(&self) -> &[i64] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.cells.chunks(self.order.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |a, b| self.get(b, a))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.get(a, b) == self.get(b, a)))
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().all(|&v| v == 0)
    }

    /// Non-zero cells as a relation.
    pub fn support(&self) -> Relation {
        Relation::from_fn(self.order, |a, b| self.get(a, b) != 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "add", i64::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "sub", i64::checked_sub)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<Self> {
        let cells = self
            .cells
            .iter()
            .map(|&v| v.checked_mul(factor).ok_or(Error::Overflow { op: "scale" }))
            .collect::<Result<_>>()?;
        Ok(CountMatrix {
            order: self.order,
            cells,
        })
    }

    fn zip_with(
        &self,
        other: &Self,
        op: &'static str,
        f: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<Self> {
        check_order(self.order, other.order)?;
        let cells = self
            .cells
            .iter()
            .zip(&other.cells)
            .map(|(&x, &y)| f(x, y).ok_or(Error::Overflow { op }))
            .collect::<Result<_>>()?;
        Ok(CountMatrix {
            order: self.order,
            cells,
        })
    }

    /// Ordinary matrix product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_order(self.order, other.order)?;
        let n = self.order;
        let mut out = vec![0i64; n * n];
        for a in 0..n {
            let out_row = &mut out[a * n..(a + 1) * n];
            for g in 0..n {
                let x = self.cells[a * n + g];
                if x == 0 {
                    continue;
                }
                let other_row = &other.cells[g * n..(g + 1) * n];
                for (o, &y) in out_row.iter_mut().zip(other_row) {
                    let term = x.checked_mul(y).ok_or(Error::Overflow { op: "mul" })?;
                    *o = o.checked_add(term).ok_or(Error::Overflow { op: "mul" })?;
                }
            }
        }
        Ok(CountMatrix { order: n, cells: out })
    }

    /// `A·B + B·A`, which is twice the Jordan product `A⋆B`.
    pub fn star_doubled(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?.checked_add(&other.checked_mul(self)?)
    }

    /// `A·B == B·A`.
    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.checked_mul(other)? == other.checked_mul(self)?)
    }
}

/// `A·B + B·A`; see [`CountMatrix::star_doubled`].
pub fn star_doubled(a: &CountMatrix, b: &CountMatrix) -> Result<CountMatrix> {
    a.star_doubled(b)
}

impl fmt::Debug for CountMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CountMatrix(order={})", self.order)?;
        for row in self.rows() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}
