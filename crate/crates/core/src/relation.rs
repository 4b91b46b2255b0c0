//! Binary relations on `0..n`, stored as bit-packed rows.

use std::fmt;

use crate::error::{check_order, Result};
use crate::matrix::CountMatrix;

const WORD: usize = 64;

/// A binary relation on the points `0..order`, i.e. a 0/1 matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    order: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(order: usize) -> Self {
        let words = order.div_ceil(WORD).max(1);
        Relation {
            order,
            words,
            bits: vec![0; words * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |a, b| a == b)
    }

    pub fn full(order: usize) -> Self {
        Self::from_fn(order, |_, _| true)
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut rel = Self::empty(order);
        for a in 0..order {
            for b in 0..order {
                if f(a, b) {
                    rel.insert(a, b);
                }
            }
        }
        rel
    }

    /// Builds a relation from a list of pairs. Pairs outside `0..order` panic.
    pub fn from_pairs(order: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut rel = Self::empty(order);
        for (a, b) in pairs {
            rel.insert(a, b);
        }
        rel
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        let w = self.bits[a * self.words + b / WORD];
        (w >> (b % WORD)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: usize, b: usize) {
        assert!(a < self.order && b < self.order, "pair ({a},{b}) out of range");
        self.bits[a * self.words + b / WORD] |= 1 << (b % WORD);
    }

    pub fn remove(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / WORD] &= !(1 << (b % WORD));
    }

    pub(crate) fn row_words(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    /// The successor set `R(a)`.
    pub fn successors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&b| self.contains(a, b))
    }

    /// `|R(a)|`.
    pub fn out_degree(&self, a: usize) -> usize {
        self.row_words(a).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of pairs in the relation.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |a| self.successors(a).map(move |b| (a, b)))
    }

    pub fn transpose(&self) -> Relation {
        let mut t = Relation::empty(self.order);
        for (a, b) in self.pairs() {
            t.insert(b, a);
        }
        t
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.zip_words(other, |x, y| x | y)
    }

    pub fn intersection(&self, other: &Relation) -> Result<Relation> {
        self.zip_words(other, |x, y| x & y)
    }

    pub fn difference(&self, other: &Relation) -> Result<Relation> {
        self.zip_words(other, |x, y| x & !y)
    }

    fn zip_words(&self, other: &Relation, f: impl Fn(u64, u64) -> u64) -> Result<Relation> {
        check_order(self.order, other.order)?;
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(&x, &y)| f(x, y))
            .collect();
        Ok(Relation {
            order: self.order,
            words: self.words,
            bits,
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.contains(b, a))
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.order).all(|a| !self.contains(a, a))
    }

    /// The adjacency matrix as a [`CountMatrix`].
    pub fn to_matrix(&self) -> CountMatrix {
        CountMatrix::from_fn(self.order, |a, b| i64::from(self.contains(a, b)))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Relation(order={})", self.order)?;
        for a in 0..self.order {
            let row: String = (0..self.order)
                .map(|b| if self.contains(a, b) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// Relational product counts: cell `(a, b)` is `|R(a) ∩ S^T(b)|`.
pub fn compose(r: &Relation, s: &Relation) -> Result<CountMatrix> {
    check_order(r.order, s.order)?;
    let n = r.order;
    let st = s.transpose();
    let mut out = CountMatrix::zeros(n);
    for a in 0..n {
        let ra = r.row_words(a);
        for b in 0..n {
            let count: u32 = ra
                .iter()
                .zip(st.row_words(b))
                .map(|(x, y)| (x & y).count_ones())
                .sum();
            out.set(a, b, i64::from(count));
        }
    }
    Ok(out)
}

/// The relational Jordan product `RS ∪ SR`.
pub fn relational_star(r: &Relation, s: &Relation) -> Result<Relation> {
    check_order(r.order, s.order)?;
    let rs = compose(r, s)?;
    let sr = compose(s, r)?;
    Ok(Relation::from_fn(r.order, |a, b| {
        rs.get(a, b) != 0 || sr.get(a, b) != 0
    }))
}
