//! Associative span closure and the commutativity/associativity checks on matrix bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{check_order, Error, Result};
use crate::matrix::CountMatrix;

/// A subspace of `Q^len` kept as integer rows in echelon form.
///
/// Rows are reduced fraction-free (cross-multiplication) and divided by their content, so
/// every entry stays an exact integer.
#[derive(Debug, Clone, Default)]
pub struct RationalSpan {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RationalSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[i64]) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let a = row[*pivot].clone();
            let b = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x * &a - r * &b;
            }
            normalize(&mut v);
        }
        v
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        normalize(&mut r);
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, r));
        true
    }
}

fn normalize(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let first_negative = v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative);
    let g = if first_negative { -g } else { g };
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

fn common_order(basis: &[CountMatrix]) -> Result<usize> {
    let n = basis.first().map_or(0, CountMatrix::order);
    for m in basis {
        check_order(n, m.order())?;
    }
    Ok(n)
}

/// Dimension of the associative algebra generated by `basis` under the ordinary product.
pub fn generated_assoc_dimension(basis: &[CountMatrix]) -> Result<usize> {
    if basis.is_empty() {
        return Ok(0);
    }
    common_order(basis)?;
    let mut span = RationalSpan::new();
    let mut generators: Vec<CountMatrix> = Vec::new();
    for m in basis {
        if span.insert(m.cells()) {
            generators.push(m.clone());
        }
    }
    // Products of spanning generators span all products, so closing over generator pairs
    // reaches the generated algebra.
    let mut checked = 0;
    while checked < generators.len() {
        let newest = checked;
        checked += 1;
        for other in 0..checked {
            for (a, b) in [(newest, other), (other, newest)] {
                let p = generators[a].checked_mul(&generators[b])?;
                if span.insert(p.cells()) {
                    generators.push(p);
                }
            }
        }
    }
    Ok(span.dimension())
}

fn require_symmetric(basis: &[CountMatrix]) -> Result<()> {
    common_order(basis)?;
    if basis.iter().all(CountMatrix::is_symmetric) {
        Ok(())
    } else {
        Err(Error::NotSymmetric)
    }
}

/// `AB = BA` for every pair of basis matrices.
pub fn pairwise_commute(basis: &[CountMatrix]) -> Result<bool> {
    require_symmetric(basis)?;
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if !a.commutes_with(b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(A⋆B)⋆C = A⋆(B⋆C)` for every basis triple, compared in the doubled representation.
pub fn jordan_associative(basis: &[CountMatrix]) -> Result<bool> {
    require_symmetric(basis)?;
    let r = basis.len();
    let pairs: Vec<Vec<CountMatrix>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| basis[i].star_doubled(&basis[j]))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let left = pairs[a][b].star_doubled(&basis[c])?;
                let right = basis[a].star_doubled(&pairs[b][c])?;
                if left != right {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
