//! Rainbows: partitions of `Ω²` that separate the diagonal and are closed under transposition.
//!
//! Colors are dense ids `0..rank`, numbered by first occurrence in a row-major scan of the
//! color matrix. Every constructor returns a value in this canonical numbering, so two
//! rainbows describe the same partition exactly when they compare equal.

use std::collections::HashMap;
use std::hash::Hash;

use serde::Serialize;

use crate::error::{check_order, Error, Result};
use crate::matrix::CountMatrix;
use crate::relation::Relation;

/// Color id of a rainbow.
pub type Color = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rainbow {
    order: usize,
    rank: usize,
    colors: Vec<u32>,
    transpose: Vec<u32>,
    diagonal: Vec<bool>,
}

impl std::fmt::Debug for Rainbow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Rainbow(order={}, rank={})", self.order, self.rank)?;
        for row in self.color_rows() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl Rainbow {
    /// Validates a color matrix and renumbers it canonically.
    pub fn from_colors(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NonSquare {
                    rows: n,
                    row,
                    len: r.len(),
                });
            }
            if let Some(&v) = r.iter().find(|&&v| v < 0) {
                return Err(Error::not_a_rainbow(format!(
                    "negative color id {v} in row {row}"
                )));
            }
        }
        Self::from_fn(n, |a, b| rows[a][b])
    }

    /// Builds a rainbow whose classes are the level sets of `key`.
    pub fn from_fn<K: Hash + Eq>(order: usize, mut key: impl FnMut(usize, usize) -> K) -> Result<Self> {
        let mut ids: HashMap<K, u32> = HashMap::new();
        let mut colors = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let next = ids.len() as u32;
                colors.push(*ids.entry(key(a, b)).or_insert(next));
            }
        }
        Self::from_canonical(order, colors)
    }

    /// Partition of the level sets of `key`, split so that it separates the diagonal and is
    /// closed under transposition. The result is the coarsest rainbow refining the level sets.
    pub fn closed_refinement<K: Hash + Eq + Copy>(
        order: usize,
        key: impl Fn(usize, usize) -> K,
    ) -> Self {
        Self::from_fn(order, |a, b| (key(a, b), key(b, a), a == b))
            .expect("transpose-closed diagonal-separated keys always form a rainbow")
    }

    fn from_canonical(order: usize, colors: Vec<u32>) -> Result<Self> {
        let rank = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut on_diag = vec![false; rank];
        let mut off_diag = vec![false; rank];
        let mut transpose = vec![u32::MAX; rank];
        for a in 0..order {
            for b in 0..order {
                let c = colors[a * order + b] as usize;
                if a == b {
                    on_diag[c] = true;
                } else {
                    off_diag[c] = true;
                }
                let t = colors[b * order + a];
                if transpose[c] == u32::MAX {
                    transpose[c] = t;
                } else if transpose[c] != t {
                    return Err(Error::not_a_rainbow(format!(
                        "transpose of color {c} is not a single color (cell ({b},{a}))"
                    )));
                }
            }
        }
        if let Some(c) = (0..rank).find(|&c| on_diag[c] && off_diag[c]) {
            return Err(Error::not_a_rainbow(format!(
                "color {c} meets both the diagonal and its complement"
            )));
        }
        Ok(Rainbow {
            order,
            rank,
            colors,
            transpose,
            diagonal: on_diag,
        })
    }

    /// The rank-2 rainbow `{1_Ω, Ω² ∖ 1_Ω}` (rank 1 when `order == 1`).
    pub fn trivial(order: usize) -> Self {
        Self::from_fn(order, |a, b| a == b).expect("trivial partition is a rainbow")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn color(&self, a: usize, b: usize) -> Color {
        self.colors[a * self.order + b] as Color
    }

    /// Row-major color ids.
    pub fn cells(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_rows(&self) -> Vec<Vec<Color>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.color(a, b)).collect())
            .collect()
    }

    /// The transpose involution on colors.
    pub fn transpose_of(&self, c: Color) -> Color {
        self.transpose[c] as Color
    }

    pub fn is_diagonal(&self, c: Color) -> bool {
        self.diagonal[c]
    }

    pub fn diagonal_colors(&self) -> Vec<Color> {
        (0..self.rank).filter(|&c| self.diagonal[c]).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.rank).all(|c| self.transpose_of(c) == c)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.diagonal.iter().filter(|&&d| d).count() == 1
    }

    /// The basic relation of color `c`.
    pub fn relation(&self, c: Color) -> Relation {
        let n = self.order;
        let mut rel = Relation::empty(n);
        for (i, &col) in self.colors.iter().enumerate() {
            if col as Color == c {
                rel.insert(i / n, i % n);
            }
        }
        rel
    }

    /// The adjacency matrix of color `c`.
    pub fn matrix(&self, c: Color) -> CountMatrix {
        CountMatrix::from_fn(self.order, |a, b| i64::from(self.color(a, b) == c))
    }

    pub fn color_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.rank];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// `|C(a)|` for every color `C` and point `a`, as `[a][C]`.
    pub fn out_valencies(&self) -> Vec<Vec<usize>> {
        let mut val = vec![vec![0; self.rank]; self.order];
        for (a, row) in val.iter_mut().enumerate() {
            for b in 0..self.order {
                row[self.color(a, b)] += 1;
            }
        }
        val
    }

    pub fn standard_basis(&self) -> StandardBasis {
        StandardBasis {
            relations: (0..self.rank).map(|c| self.relation(c)).collect(),
        }
    }

    /// Adjacency matrices of all colors, in color order.
    pub fn basis_matrices(&self) -> Vec<CountMatrix> {
        (0..self.rank).map(|c| self.matrix(c)).collect()
    }

    /// Merges every color with its transpose.
    pub fn symmetrize(&self) -> Rainbow {
        Self::from_fn(self.order, |a, b| {
            let c = self.color(a, b);
            c.min(self.transpose_of(c))
        })
        .expect("symmetrization of a rainbow is a rainbow")
    }

    /// Common refinement with the level sets of `values`, followed by the transpose-closure split.
    pub fn refine_by_values(&self, values: &CountMatrix) -> Result<Rainbow> {
        check_order(self.order, values.order())?;
        Ok(Self::closed_refinement(self.order, |a, b| {
            (self.color(a, b), values.get(a, b))
        }))
    }

    /// Merges colors according to `group`: colors with equal `group[c]` become one color.
    pub fn fuse(&self, group: &[usize]) -> Result<Rainbow> {
        if group.len() != self.rank {
            return Err(Error::LabelMismatch {
                reason: format!("fusion map has {} entries for rank {}", group.len(), self.rank),
            });
        }
        Self::from_fn(self.order, |a, b| group[self.color(a, b)])
    }

    /// Relabels points: point `a` of `self` becomes point `perm[a]`.
    pub fn permute_points(&self, perm: &[usize]) -> Result<Rainbow> {
        let n = self.order;
        check_order(n, perm.len())?;
        let mut inv = vec![usize::MAX; n];
        for (a, &p) in perm.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(Error::Parse("point map is not a permutation".into()));
            }
            inv[p] = a;
        }
        Self::from_fn(n, |a, b| self.color(inv[a], inv[b]))
    }

    /// Points grouped by diagonal color, ordered by smallest point.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut by_color: Vec<Vec<usize>> = vec![Vec::new(); self.rank];
        for a in 0..self.order {
            by_color[self.color(a, a)].push(a);
        }
        let mut fibers: Vec<Vec<usize>> = by_color.into_iter().filter(|f| !f.is_empty()).collect();
        fibers.sort();
        fibers
    }

    /// True if every color of `self` lies inside a color of `coarser`.
    pub fn refines(&self, coarser: &Rainbow) -> bool {
        if self.order != coarser.order {
            return false;
        }
        let mut image = vec![u32::MAX; self.rank];
        self.colors.iter().zip(&coarser.colors).all(|(&fine, &coarse)| {
            let slot = &mut image[fine as usize];
            if *slot == u32::MAX {
                *slot = coarse;
            }
            *slot == coarse
        })
    }

    pub fn structure_report(&self) -> StructureReport {
        let valencies = self.out_valencies();
        let per_color: Vec<Option<usize>> = (0..self.rank)
            .map(|c| {
                let first = valencies.first().map(|row| row[c]);
                first.filter(|&k| valencies.iter().all(|row| row[c] == k))
            })
            .collect();
        StructureReport {
            symmetric: self.is_symmetric(),
            homogeneous: self.is_homogeneous(),
            regular: per_color.iter().all(Option::is_some),
            valencies: per_color,
        }
    }
}

/// Symmetric, homogeneous and regular flags together with the valency of every color
/// (`None` where the out-valency varies between points).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub symmetric: bool,
    pub homogeneous: bool,
    pub regular: bool,
    pub valencies: Vec<Option<usize>>,
}

/// The 0/1 basis of a rainbow's span: one relation per color, supports partitioning `Ω²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardBasis {
    pub relations: Vec<Relation>,
}

impl StandardBasis {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn matrices(&self) -> Vec<CountMatrix> {
        self.relations.iter().map(Relation::to_matrix).collect()
    }

    /// Reassembles the rainbow; fails if the supports do not partition `Ω²`.
    pub fn to_rainbow(&self) -> Result<Rainbow> {
        let Some(first) = self.relations.first() else {
            return Rainbow::from_fn(0, |_, _| 0);
        };
        let n = first.order();
        let mut owner = vec![usize::MAX; n * n];
        for (i, rel) in self.relations.iter().enumerate() {
            check_order(n, rel.order())?;
            if rel.is_empty() {
                return Err(Error::not_a_rainbow(format!("basis relation {i} is empty")));
            }
            for (a, b) in rel.pairs() {
                if owner[a * n + b] != usize::MAX {
                    return Err(Error::not_a_rainbow(format!(
                        "cell ({a},{b}) is covered twice"
                    )));
                }
                owner[a * n + b] = i;
            }
        }
        if let Some(pos) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::not_a_rainbow(format!(
                "cell ({},{}) is not covered",
                pos / n,
                pos % n
            )));
        }
        Rainbow::from_fn(n, |a, b| owner[a * n + b])
    }
}
