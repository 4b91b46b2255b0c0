//! Exact checks of the coherence (ordinary product) and Jordan (symmetrized product)
//! regularity conditions, intersection tensors, and the structural identities built on them.

mod algebra;
mod bipartition;
mod srg;
mod tables;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::rainbow::{Color, Rainbow};

pub use crate::rainbow::StructureReport;
pub use algebra::{generated_assoc_dimension, jordan_associative, pairwise_commute, RationalSpan};
pub use bipartition::nonregular_bipartition;
pub use srg::{hoffman_coclique_bound, srg_check, HoffmanBound, SrgParams};
pub use tables::{check_base_table, check_switched_table, BaseLabels, SwitchedLabels};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorKind {
    /// `values[F][C][D] = p^F_{C,D}`.
    Coherent,
    /// `values[F][C][D] = 2·p^F_{C,D}`.
    Jordan,
}

/// Structure constants `p^F_{C,D}`; Jordan tensors are stored doubled.
///
/// Storage is sparse: for every `F` the nonzero `(C, D, value)` entries sorted by `(C, D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTensor {
    rank: usize,
    kind: TensorKind,
    rows: Vec<Vec<(u32, u32, i64)>>,
}

impl IntersectionTensor {
    fn from_rows(rank: usize, kind: TensorKind, mut rows: Vec<Vec<(u32, u32, i64)>>) -> Self {
        for row in &mut rows {
            row.retain(|e| e.2 != 0);
            row.sort_unstable();
        }
        IntersectionTensor { rank, kind, rows }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kind(&self) -> TensorKind {
        self.kind
    }

    /// Stored value: `p` for coherent tensors, `2p` for Jordan tensors.
    pub fn get(&self, f: Color, c: Color, d: Color) -> i64 {
        let row = &self.rows[f];
        row.binary_search_by(|e| (e.0, e.1).cmp(&(c as u32, d as u32)))
            .map_or(0, |i| row[i].2)
    }

    /// Nonzero entries `(F, C, D, value)` in lexicographic order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Color, Color, Color, i64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(f, row)| {
            row.iter()
                .map(move |&(c, d, v)| (f, c as Color, d as Color, v))
        })
    }

    /// The intersection number itself (half-integral for Jordan tensors).
    pub fn intersection_number(&self, f: Color, c: Color, d: Color) -> Ratio<i64> {
        match self.kind {
            TensorKind::Coherent => Ratio::from_integer(self.get(f, c, d)),
            TensorKind::Jordan => Ratio::new(self.get(f, c, d), 2),
        }
    }

    /// The Jordan tensor of the same configuration: `2p^F_{C,D} = p^F_{C,D} + p^F_{D,C}`.
    pub fn to_jordan(&self) -> IntersectionTensor {
        if self.kind == TensorKind::Jordan {
            return self.clone();
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<(u32, u32), i64> = BTreeMap::new();
                for &(c, d, v) in row {
                    *acc.entry((c, d)).or_default() += v;
                    *acc.entry((d, c)).or_default() += v;
                }
                acc.into_iter().map(|((c, d), v)| (c, d, v)).collect()
            })
            .collect();
        Self::from_rows(self.rank, TensorKind::Jordan, rows)
    }

    /// Tensor under the relabeling `map[old] = new`.
    pub fn relabel(&self, map: &[Color]) -> IntersectionTensor {
        let mut rows = vec![Vec::new(); self.rank];
        for (f, c, d, v) in self.nonzero() {
            rows[map[f]].push((map[c] as u32, map[d] as u32, v));
        }
        Self::from_rows(self.rank, self.kind, rows)
    }

    /// Lines `F C D value` in lexicographic order, zero entries omitted; Jordan tensors
    /// carry the header `doubled=true`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        if self.kind == TensorKind::Jordan {
            out.push_str("doubled=true\n");
        }
        for (f, c, d, v) in self.nonzero() {
            let _ = writeln!(out, "{f} {c} {d} {v}");
        }
        out
    }
}

/// Two pairs of the same color `f` on which the count for `(c, d)` differs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub c: Color,
    pub d: Color,
    pub f: Color,
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub first_count: i64,
    pub second_count: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds(IntersectionTensor),
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn tensor(&self) -> Option<&IntersectionTensor> {
        match self {
            Verdict::Holds(t) => Some(t),
            Verdict::Fails(_) => None,
        }
    }

    pub fn into_tensor(self) -> Option<IntersectionTensor> {
        match self {
            Verdict::Holds(t) => Some(t),
            Verdict::Fails(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fails(w) => Some(w),
            Verdict::Holds(_) => None,
        }
    }
}

/// Sorted path keys `(color(a, g), color(g, b))` over all `g`; unordered for Jordan.
fn path_keys(x: &Rainbow, kind: TensorKind, a: usize, b: usize, buf: &mut Vec<u64>) {
    let n = x.order();
    let r = x.rank() as u64;
    let cells = x.cells();
    buf.clear();
    buf.extend((0..n).map(|g| {
        let c = u64::from(cells[a * n + g]);
        let d = u64::from(cells[g * n + b]);
        match kind {
            TensorKind::Coherent => c * r + d,
            TensorKind::Jordan => c.min(d) * r + c.max(d),
        }
    }));
    buf.sort_unstable();
}

/// Run-length encoding of a sorted key list.
fn runs(keys: &[u64]) -> Vec<(u64, i64)> {
    let mut out: Vec<(u64, i64)> = Vec::new();
    for &k in keys {
        match out.last_mut() {
            Some((last, count)) if *last == k => *count += 1,
            _ => out.push((k, 1)),
        }
    }
    out
}

/// Stored tensor value of a key counted `count` times.
fn stored(kind: TensorKind, c: u64, d: u64, count: i64) -> i64 {
    if kind == TensorKind::Jordan && c == d {
        2 * count
    } else {
        count
    }
}

/// Compares every cell's path profile with that of the first cell of its color.
///
/// The witness is the first cell in row-major order whose profile differs, paired with
/// the first cell of its color, at the smallest differing key `(C, D)`.
fn check_regularity(x: &Rainbow, kind: TensorKind) -> Verdict {
    let n = x.order();
    let r = x.rank();
    let rk = r as u64;
    let mut reps: Vec<Option<(usize, Vec<u64>)>> = vec![None; r];
    let mut buf = Vec::with_capacity(n);
    for (pos, &col) in x.cells().iter().enumerate() {
        let f = col as usize;
        path_keys(x, kind, pos / n, pos % n, &mut buf);
        match &reps[f] {
            None => reps[f] = Some((pos, buf.clone())),
            Some((first, rep)) if *rep != buf => {
                let (ra, rb) = (runs(rep), runs(&buf));
                let count = |rs: &[(u64, i64)], k: u64| {
                    rs.iter().find(|e| e.0 == k).map_or(0, |e| e.1)
                };
                let key = ra
                    .iter()
                    .chain(&rb)
                    .map(|e| e.0)
                    .filter(|&k| count(&ra, k) != count(&rb, k))
                    .min()
                    .expect("profiles differ");
                let (c, d) = (key / rk, key % rk);
                return Verdict::Fails(Witness {
                    c: c as Color,
                    d: d as Color,
                    f,
                    first: (first / n, first % n),
                    second: (pos / n, pos % n),
                    first_count: stored(kind, c, d, count(&ra, key)),
                    second_count: stored(kind, c, d, count(&rb, key)),
                });
            }
            Some(_) => {}
        }
    }
    let rows = reps
        .into_iter()
        .map(|rep| {
            let (_, keys) = rep.expect("colors are non-empty");
            let mut row = Vec::new();
            for (k, count) in runs(&keys) {
                let (c, d) = ((k / rk) as u32, (k % rk) as u32);
                let v = stored(kind, c.into(), d.into(), count);
                row.push((c, d, v));
                if kind == TensorKind::Jordan && c != d {
                    row.push((d, c, v));
                }
            }
            row
        })
        .collect();
    Verdict::Holds(IntersectionTensor::from_rows(r, kind, rows))
}

/// Checks that `|C(α) ∩ D^T(β)|` depends only on the color of `(α, β)` for every ordered
/// pair of colors.
pub fn is_coherent_configuration(x: &Rainbow) -> Verdict {
    check_regularity(x, TensorKind::Coherent)
}

/// Checks that `|C(α) ∩ D^T(β)| + |D(α) ∩ C^T(β)|` depends only on the color of `(α, β)`
/// for every unordered pair of colors. The tensor holds the doubled values.
pub fn is_jordan_configuration(x: &Rainbow) -> Verdict {
    check_regularity(x, TensorKind::Jordan)
}

/// The sufficient condition for a rank-5 symmetric homogeneous rainbow to be a Jordan
/// scheme: with `C₀` the diagonal, `C₁` the first non-diagonal color and `C` the union of
/// the other three, each fusion `{C₀, C₁, Cᵢ, C ∖ Cᵢ}` must be a coherent configuration.
pub fn check_fusion_p3(x: &Rainbow) -> Result<bool> {
    check_fusion_p3_with(x, 1)
}

/// As [`check_fusion_p3`] with an explicit choice of `C₁`.
pub fn check_fusion_p3_with(x: &Rainbow, c1: Color) -> Result<bool> {
    if x.rank() != 5 {
        return Err(Error::WrongRank {
            expected: 5,
            found: x.rank(),
        });
    }
    if !x.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !x.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let c0 = x.diagonal_colors()[0];
    if c1 == c0 || c1 >= 5 {
        return Err(Error::LabelMismatch {
            reason: format!("C1 = {c1} must be a non-diagonal color"),
        });
    }
    for ci in (0..5).filter(|&c| c != c0 && c != c1) {
        let group: Vec<usize> = (0..5)
            .map(|c| match c {
                _ if c == c0 => 0,
                _ if c == c1 => 1,
                _ if c == ci => 2,
                _ => 3,
            })
            .collect();
        if !is_coherent_configuration(&x.fuse(&group)?).holds() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A color bijection `map[c_a] = c_b` carrying tensor `a` onto tensor `b`, if one exists.
pub fn find_algebraic_isomorphism(
    a: &IntersectionTensor,
    b: &IntersectionTensor,
) -> Option<Vec<Color>> {
    if a.rank != b.rank || a.kind != b.kind {
        return None;
    }
    let r = a.rank;
    // Cheap invariant per color: the multiset of values in its (F, C, ·) slice signature.
    let profile = |t: &IntersectionTensor, c: Color| {
        let mut v: Vec<i64> = (0..r)
            .flat_map(|x| (0..r).map(move |y| (x, y)))
            .map(|(x, y)| t.get(c, x, y) * 3 + t.get(x, c, y) * 5 + t.get(x, y, c) * 7)
            .collect();
        v.sort_unstable();
        (t.get(c, c, c), v)
    };
    let pa: Vec<_> = (0..r).map(|c| profile(a, c)).collect();
    let pb: Vec<_> = (0..r).map(|c| profile(b, c)).collect();
    let mut map = vec![usize::MAX; r];
    let mut used = vec![false; r];

    fn extend(
        k: usize,
        a: &IntersectionTensor,
        b: &IntersectionTensor,
        pa: &[(i64, Vec<i64>)],
        pb: &[(i64, Vec<i64>)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let r = a.rank;
        if k == r {
            return true;
        }
        for cand in 0..r {
            if used[cand] || pa[k] != pb[cand] {
                continue;
            }
            map[k] = cand;
            let consistent = (0..=k).all(|x| {
                (0..=k).all(|y| {
                    [(k, x, y), (x, k, y), (x, y, k)]
                        .iter()
                        .all(|&(f, c, d)| a.get(f, c, d) == b.get(map[f], map[c], map[d]))
                })
            });
            if consistent {
                used[cand] = true;
                if extend(k + 1, a, b, pa, pb, map, used) {
                    return true;
                }
                used[cand] = false;
            }
        }
        map[k] = usize::MAX;
        false
    }

    extend(0, a, b, &pa, &pb, &mut map, &mut used).then_some(map)
}
