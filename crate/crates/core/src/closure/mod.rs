//! Coherent (Weisfeiler–Leman) and Jordan stabilization of a seed partition.
//!
//! Both closures refine a rainbow by path-count signatures until the partition stops
//! changing. A coherent closure counts ordered color pairs `(color(α,γ), color(γ,β))`; the
//! Jordan closure counts unordered pairs and additionally records `color(β,α)`. After
//! every round the partition is split so that it stays closed under transposition and
//! keeps the diagonal separated, and colors are renumbered canonically.

mod oracle;
mod proper;

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{check_order, Error, Result};
use crate::io::json_object;
use crate::matrix::CountMatrix;
use crate::rainbow::Rainbow;
use crate::verify::{is_coherent_configuration, is_jordan_configuration};

pub use oracle::subspace_closure_oracle;
pub use proper::{is_proper, PropernessReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureKind {
    Wl,
    Jordan,
}

impl ClosureKind {
    pub fn name(self) -> &'static str {
        match self {
            ClosureKind::Wl => "wl",
            ClosureKind::Jordan => "jordan",
        }
    }
}

/// Initial partition of a closure computation: always a rainbow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedPartition {
    rainbow: Rainbow,
}

impl SeedPartition {
    /// Common refinement of the level sets of `mats`, split on the diagonal and under
    /// transposition. An empty list gives the trivial rainbow of the given order.
    pub fn from_matrices(order: usize, mats: &[CountMatrix]) -> Result<Self> {
        for m in mats {
            check_order(order, m.order())?;
        }
        let values: Vec<&[i64]> = mats.iter().map(|m| m.cells()).collect();
        let keys = level_set_ids(order, &values);
        Ok(SeedPartition {
            rainbow: Rainbow::closed_refinement(order, |a, b| keys[a * order + b]),
        })
    }

    pub fn from_rainbow(x: &Rainbow) -> Self {
        SeedPartition { rainbow: x.clone() }
    }

    pub fn rainbow(&self) -> &Rainbow {
        &self.rainbow
    }

    pub fn order(&self) -> usize {
        self.rainbow.order()
    }
}

fn level_set_ids(order: usize, values: &[&[i64]]) -> Vec<u32> {
    let mut ids: HashMap<Vec<i64>, u32> = HashMap::new();
    (0..order * order)
        .map(|pos| {
            let key: Vec<i64> = values.iter().map(|cells| cells[pos]).collect();
            let next = ids.len() as u32;
            *ids.entry(key).or_insert(next)
        })
        .collect()
}

/// Fixpoint partition with the rank after every refinement pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub kind: ClosureKind,
    /// Number of refinement passes, including the final one that changed nothing.
    pub rounds: usize,
    /// Seed rank followed by the rank after each pass.
    pub rank_history: Vec<usize>,
    pub result: Rainbow,
}

impl ClosureReport {
    pub fn to_json(&self) -> String {
        let history: Vec<String> = self.rank_history.iter().map(ToString::to_string).collect();
        let mut out = String::new();
        let _ = writeln!(out, "{{");
        let _ = writeln!(out, "  \"kind\": \"{}\",", self.kind.name());
        let _ = writeln!(out, "  \"rounds\": {},", self.rounds);
        let _ = writeln!(out, "  \"rank_history\": [{}],", history.join(","));
        let _ = writeln!(out, "  \"result\": {}", json_object(&self.result, 2).trim_start());
        let _ = writeln!(out, "}}");
        out
    }
}

/// Sorted run-length list of path keys through every intermediate point.
type Signature = (u32, u32, Vec<(u64, u32)>);

fn signature(x: &Rainbow, kind: ClosureKind, a: usize, b: usize, buf: &mut Vec<u64>) -> Signature {
    let n = x.order();
    let r = x.rank() as u64;
    let cells = x.cells();
    buf.clear();
    for g in 0..n {
        let c1 = u64::from(cells[a * n + g]);
        let c2 = u64::from(cells[g * n + b]);
        buf.push(match kind {
            ClosureKind::Wl => c1 * r + c2,
            ClosureKind::Jordan => c1.min(c2) * r + c1.max(c2),
        });
    }
    buf.sort_unstable();
    let mut runs: Vec<(u64, u32)> = Vec::new();
    for &k in buf.iter() {
        match runs.last_mut() {
            Some((last, count)) if *last == k => *count += 1,
            _ => runs.push((k, 1)),
        }
    }
    let back = match kind {
        ClosureKind::Wl => 0,
        ClosureKind::Jordan => cells[b * n + a],
    };
    (cells[a * n + b], back, runs)
}

/// One signature refinement pass followed by the transpose/diagonal split.
pub(crate) fn refine_round(x: &Rainbow, kind: ClosureKind) -> Rainbow {
    let n = x.order();
    let mut ids: HashMap<Signature, u32> = HashMap::new();
    let mut prov = Vec::with_capacity(n * n);
    let mut buf = Vec::with_capacity(n);
    for a in 0..n {
        for b in 0..n {
            let sig = signature(x, kind, a, b, &mut buf);
            let next = ids.len() as u32;
            prov.push(*ids.entry(sig).or_insert(next));
        }
    }
    Rainbow::closed_refinement(n, |a, b| prov[a * n + b])
}

fn stabilize(seed: &SeedPartition, kind: ClosureKind) -> Result<ClosureReport> {
    let mut current = seed.rainbow.clone();
    let mut history = vec![current.rank()];
    loop {
        let next = refine_round(&current, kind);
        history.push(next.rank());
        if next.rank() == current.rank() {
            // each pass refines the previous one, so equal rank means equal partition
            debug_assert_eq!(next, current);
            break;
        }
        current = next;
    }
    let verified = match kind {
        ClosureKind::Wl => is_coherent_configuration(&current).holds(),
        ClosureKind::Jordan => is_jordan_configuration(&current).holds(),
    };
    if !verified {
        return Err(Error::Internal(format!(
            "{} closure fixpoint failed verification",
            kind.name()
        )));
    }
    Ok(ClosureReport {
        kind,
        rounds: history.len() - 1,
        rank_history: history,
        result: current,
    })
}

/// Coarsest coherent configuration refining the seed.
pub fn wl_closure(seed: &SeedPartition) -> Result<ClosureReport> {
    stabilize(seed, ClosureKind::Wl)
}

/// Coarsest Jordan configuration refining the seed.
pub fn jordan_closure(seed: &SeedPartition) -> Result<ClosureReport> {
    stabilize(seed, ClosureKind::Jordan)
}

pub fn closure(seed: &SeedPartition, kind: ClosureKind) -> Result<ClosureReport> {
    stabilize(seed, kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::Relation;

    fn pentagon_adj() -> CountMatrix {
        Relation::from_fn(5, |a, b| (5 + b - a) % 5 == 1 || (5 + a - b) % 5 == 1).to_matrix()
    }

    fn four_point() -> Rainbow {
        Rainbow::from_colors(&[
            vec![0, 1, 2, 2],
            vec![1, 0, 2, 2],
            vec![3, 3, 0, 1],
            vec![3, 3, 1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn seed_from_pentagon() {
        let seed = SeedPartition::from_matrices(5, &[pentagon_adj()]).unwrap();
        assert_eq!(seed.rainbow().rank(), 3);
    }

    #[test]
    fn empty_seed_is_trivial() {
        let seed = SeedPartition::from_matrices(4, &[]).unwrap();
        assert_eq!(seed.rainbow(), &Rainbow::trivial(4));
    }

    #[test]
    fn weighted_seed_separates_z_from_w() {
        let x = four_point();
        let m = x.matrix(2).checked_add(&x.matrix(3).checked_scale(2).unwrap()).unwrap();
        let seed = SeedPartition::from_matrices(4, &[m]).unwrap();
        assert_eq!(seed.rainbow(), &x);
    }

    #[test]
    fn non_rainbow_level_sets_are_split() {
        // a single arc: level sets {(0,1)} and the rest, which mixes diagonal and off-diagonal
        let m = CountMatrix::from_fn(3, |a, b| i64::from((a, b) == (0, 1)));
        let seed = SeedPartition::from_matrices(3, &[m]).unwrap();
        let x = seed.rainbow();
        assert_ne!(x.color(0, 1), x.color(1, 0));
        assert!(x.is_diagonal(x.color(0, 0)));
    }

    #[test]
    fn pentagon_is_a_wl_fixpoint() {
        let seed = SeedPartition::from_matrices(5, &[pentagon_adj()]).unwrap();
        let report = wl_closure(&seed).unwrap();
        assert_eq!(report.rounds, 1);
        assert_eq!(report.rank_history, vec![3, 3]);
        assert_eq!(&report.result, seed.rainbow());
        let j = jordan_closure(&seed).unwrap();
        assert_eq!(j.result, report.result);
    }

    #[test]
    fn four_point_is_a_jordan_fixpoint() {
        let x = four_point();
        let report = jordan_closure(&SeedPartition::from_rainbow(&x)).unwrap();
        assert_eq!(report.result, x);
        // but not coherent: the WL closure splits it
        let wl = wl_closure(&SeedPartition::from_rainbow(&x)).unwrap();
        assert!(wl.result.rank() > x.rank());
    }

    #[test]
    fn report_json_shape() {
        let seed = SeedPartition::from_matrices(2, &[]).unwrap();
        let report = wl_closure(&seed).unwrap();
        assert_eq!(
            report.to_json(),
            "{\n  \"kind\": \"wl\",\n  \"rounds\": 1,\n  \"rank_history\": [2,2],\n  \"result\": {\n    \"order\": 2,\n    \"rank\": 2,\n    \"colors\": [\n      [0,1],\n      [1,0]\n    ]\n  }\n}\n"
        );
    }
}
