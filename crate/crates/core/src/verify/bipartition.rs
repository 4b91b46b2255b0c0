use crate::error::{Error, Result};
use crate::rainbow::Rainbow;

use super::is_jordan_configuration;

/// For a homogeneous Jordan configuration that is not regular, the equal bipartition
/// `Ω = Ω₀ ∪ Ω₁` such that every non-regular color lies in `Ω_i × Ω_{1-i}` with constant
/// valency on `Ω_i`. `Ω₀` carries the larger valency of the first non-regular color.
/// Returns `None` for regular configurations.
pub fn nonregular_bipartition(x: &Rainbow) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if !x.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if !is_jordan_configuration(x).holds() {
        return Err(Error::NotJordan);
    }
    let report = x.structure_report();
    let Some(first) = report.valencies.iter().position(Option::is_none) else {
        return Ok(None);
    };
    let n = x.order();
    let val = x.out_valencies();
    let hi = (0..n).map(|a| val[a][first]).max().unwrap_or(0);
    let lo = (0..n).map(|a| val[a][first]).min().unwrap_or(0);
    let part0: Vec<usize> = (0..n).filter(|&a| val[a][first] == hi).collect();
    let part1: Vec<usize> = (0..n).filter(|&a| val[a][first] == lo).collect();

    let fail = |msg: String| Err(Error::Internal(format!("bipartition check: {msg}")));
    if part0.len() + part1.len() != n {
        return fail(format!("color {first} takes more than two valencies"));
    }
    if part0.len() != part1.len() {
        return fail(format!("parts of sizes {} and {}", part0.len(), part1.len()));
    }
    let mut side = vec![0usize; n];
    for &a in &part1 {
        side[a] = 1;
    }
    for c in (0..x.rank()).filter(|&c| report.valencies[c].is_none()) {
        let cells: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| x.color(a, b) == c)
            .collect();
        let (a0, _) = cells[0];
        let from = side[a0];
        if cells.iter().any(|&(a, b)| side[a] != from || side[b] == from) {
            return fail(format!("color {c} is not bipartite across the halves"));
        }
        let k = val[a0][c];
        if (0..n).any(|a| side[a] == from && val[a][c] != k) {
            return fail(format!("color {c} has varying valency on its source half"));
        }
    }
    Ok(Some((part0, part1)))
}
