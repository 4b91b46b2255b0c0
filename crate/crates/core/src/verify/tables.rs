//! Multiplication tables of the cover scheme `{C_i, S_i}` and of its switched Jordan scheme
//! `{D_i, T_i}`, checked as exact matrix identities.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::CountMatrix;
use crate::rainbow::{Color, Rainbow};
use crate::relation::compose;

/// Colors of `C_0..C_{m-1}` (`thin`) and `S_0..S_{m-1}` (`cover`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseLabels {
    pub thin: Vec<Color>,
    pub cover: Vec<Color>,
}

/// Colors of `D_0..D_{⌊m/2⌋}` and `T_0..T_{m-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwitchedLabels {
    pub d: Vec<Color>,
    pub t: Vec<Color>,
}

fn mismatch(reason: impl Into<String>) -> Error {
    Error::LabelMismatch {
        reason: reason.into(),
    }
}

fn check_divisibility(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 || !(n - 1).is_multiple_of(m) {
        return Err(Error::DivisibilityError {
            reason: format!("m = {m} must divide n - 1 = {}", n.saturating_sub(1)),
        });
    }
    Ok(())
}

/// Labels must be distinct, cover every color, and put the diagonal first.
fn check_labels(x: &Rainbow, groups: &[&[Color]], m: usize, n: usize) -> Result<()> {
    let all: Vec<Color> = groups.iter().flat_map(|g| g.iter().copied()).collect();
    if x.rank() != all.len() {
        return Err(mismatch(format!(
            "rank {} but {} labels",
            x.rank(),
            all.len()
        )));
    }
    let mut seen = vec![false; x.rank()];
    for &c in &all {
        if c >= x.rank() || std::mem::replace(&mut seen[c], true) {
            return Err(mismatch(format!("label {c} is out of range or repeated")));
        }
    }
    if x.order() != m * (n + 1) {
        return Err(mismatch(format!(
            "order {} differs from m(n+1) = {}",
            x.order(),
            m * (n + 1)
        )));
    }
    let c0 = groups[0][0];
    if !x.is_homogeneous() || !x.is_diagonal(c0) {
        return Err(mismatch("first thin label must be the diagonal color"));
    }
    Ok(())
}

fn has_valency(x: &Rainbow, c: Color, k: usize) -> bool {
    x.structure_report().valencies[c] == Some(k)
}

/// Checks `C_i·C_j = C_{i+j}`, `C_i·S_j = S_{i+j}`, `S_j·C_i = S_{j-i}` and
/// `S_i·S_j = n·C_{i-j} + ((n-1)/m)·ΣS_k` (indices mod `m`), plus valencies 1 and `n`.
pub fn check_base_table(x: &Rainbow, labels: &BaseLabels, m: usize, n: usize) -> Result<bool> {
    check_divisibility(m, n)?;
    if labels.thin.len() != m || labels.cover.len() != m {
        return Err(mismatch(format!("expected {m} thin and {m} cover labels")));
    }
    check_labels(x, &[&labels.thin, &labels.cover], m, n)?;

    if labels.thin.iter().any(|&c| !has_valency(x, c, 1))
        || labels.cover.iter().any(|&c| !has_valency(x, c, n))
    {
        return Ok(false);
    }

    let rel = |c: Color| x.relation(c);
    let thin: Vec<_> = labels.thin.iter().map(|&c| rel(c)).collect();
    let cover: Vec<_> = labels.cover.iter().map(|&c| rel(c)).collect();
    let thin_m: Vec<_> = thin.iter().map(|r| r.to_matrix()).collect();
    let cover_m: Vec<_> = cover.iter().map(|r| r.to_matrix()).collect();
    let cover_sum = cover_m
        .iter()
        .try_fold(CountMatrix::zeros(x.order()), |acc, s| acc.checked_add(s))?;
    let lambda = ((n - 1) / m) as i64;
    let md = |k: isize| k.rem_euclid(m as isize) as usize;

    for i in 0..m {
        for j in 0..m {
            let (ii, jj) = (i as isize, j as isize);
            if compose(&thin[i], &thin[j])? != thin_m[md(ii + jj)]
                || compose(&thin[i], &cover[j])? != cover_m[md(ii + jj)]
                || compose(&cover[j], &thin[i])? != cover_m[md(jj - ii)]
            {
                return Ok(false);
            }
            let expected = thin_m[md(ii - jj)]
                .checked_scale(n as i64)?
                .checked_add(&cover_sum.checked_scale(lambda)?)?;
            if compose(&cover[i], &cover[j])? != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the doubled Jordan identities
/// `2D̃_i⋆D̃_j = 2(D̃_{i+j} + D̃_{i-j})`, `2D̃_i⋆T_j = 2(T_{j+i} + T_{j-i})` and
/// `2T_i⋆T_j = n·D̃_{i-j} + 2((n-1)/m)(J - E)`, where `D̃_k = C_k + C_{-k}`, plus
/// valency `n` for every `T_i`.
pub fn check_switched_table(
    x: &Rainbow,
    labels: &SwitchedLabels,
    m: usize,
    n: usize,
) -> Result<bool> {
    check_divisibility(m, n)?;
    if labels.d.len() != m / 2 + 1 || labels.t.len() != m {
        return Err(mismatch(format!(
            "expected {} D labels and {m} T labels",
            m / 2 + 1
        )));
    }
    check_labels(x, &[&labels.d, &labels.t], m, n)?;

    if labels.t.iter().any(|&c| !has_valency(x, c, n)) {
        return Ok(false);
    }

    let order = x.order();
    let d: Vec<CountMatrix> = labels.d.iter().map(|&c| x.matrix(c)).collect();
    let t: Vec<CountMatrix> = labels.t.iter().map(|&c| x.matrix(c)).collect();
    let md = |k: isize| k.rem_euclid(m as isize) as usize;
    let d_tilde: Vec<CountMatrix> = (0..m)
        .map(|k| {
            let idx = k.min(m - k) % m;
            let factor = if k == 0 || 2 * k == m { 2 } else { 1 };
            d[idx].checked_scale(factor)
        })
        .collect::<Result<_>>()?;
    let e = d
        .iter()
        .try_fold(CountMatrix::zeros(order), |acc, x| acc.checked_add(x))?;
    let off_fibers = CountMatrix::all_ones(order).checked_sub(&e)?;
    let lambda2 = (2 * (n - 1) / m) as i64;
    let off_term = off_fibers.checked_scale(lambda2)?;

    for i in 0..m {
        for j in 0..m {
            let (ii, jj) = (i as isize, j as isize);
            let dd = d_tilde[i].star_doubled(&d_tilde[j])?;
            let want = d_tilde[md(ii + jj)]
                .checked_add(&d_tilde[md(ii - jj)])?
                .checked_scale(2)?;
            if dd != want {
                return Ok(false);
            }
            let dt = d_tilde[i].star_doubled(&t[j])?;
            let want = t[md(jj + ii)].checked_add(&t[md(jj - ii)])?.checked_scale(2)?;
            if dt != want {
                return Ok(false);
            }
            let tt = t[i].star_doubled(&t[j])?;
            let want = d_tilde[md(ii - jj)]
                .checked_scale(n as i64)?
                .checked_add(&off_term)?;
            if tt != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
