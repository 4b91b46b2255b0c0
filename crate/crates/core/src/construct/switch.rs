use super::cover::CoverScheme;
use crate::closure::is_proper;
use crate::error::{Error, Result};
use crate::rainbow::{Color, Rainbow};
use crate::verify::{
    check_base_table, check_switched_table, is_jordan_configuration, BaseLabels, SwitchedLabels,
};

/// A switched Jordan scheme `{D_i, T_i}` with its labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchedScheme {
    pub rainbow: Rainbow,
    pub labels: SwitchedLabels,
    pub m: usize,
    pub n: usize,
    /// The switched fiber `Ω₁`.
    pub fiber: Vec<usize>,
}

/// Classes of `E = ⋃ C_i`, ordered by smallest point.
pub fn e_classes(x: &Rainbow, thin: &[Color]) -> Vec<Vec<usize>> {
    let n = x.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&b| thin.contains(&x.color(a, b))).collect();
        for &b in &class {
            seen[b] = true;
        }
        classes.push(class);
    }
    classes
}

impl CoverScheme {
    pub fn switch(&self, fiber_index: usize) -> Result<SwitchedScheme> {
        build_switched(&self.rainbow, &self.labels, self.m, self.n, fiber_index)
    }
}

/// Recolors the base: `D_i = C_i ∪ C_{−i}` for `0 ≤ i ≤ m/2` and
/// `T_i = S_i^b ∪ S_{−i}^w`, where `b` marks pairs meeting the chosen `E`-class `Ω₁`
/// in exactly one point and `w` pairs avoiding it. The output is verified as a proper
/// Jordan scheme satisfying the switched table.
pub fn build_switched(
    base: &Rainbow,
    labels: &BaseLabels,
    m: usize,
    n: usize,
    fiber_index: usize,
) -> Result<SwitchedScheme> {
    match check_base_table(base, labels, m, n) {
        Ok(true) => {}
        Ok(false) => {
            return Err(Error::BaseInvalid {
                reason: "base fails the cover multiplication table".into(),
            })
        }
        Err(e) => {
            return Err(Error::BaseInvalid {
                reason: e.to_string(),
            })
        }
    }
    let classes = e_classes(base, &labels.thin);
    let Some(fiber) = classes.get(fiber_index).cloned() else {
        return Err(Error::BadFiberIndex {
            index: fiber_index,
            fibers: classes.len(),
        });
    };
    let order = base.order();
    let mut inside = vec![false; order];
    for &a in &fiber {
        inside[a] = true;
    }
    let mut thin_index = vec![usize::MAX; base.rank()];
    let mut cover_index = vec![usize::MAX; base.rank()];
    for i in 0..m {
        thin_index[labels.thin[i]] = i;
        cover_index[labels.cover[i]] = i;
    }
    // key: (false, i) for D_i, (true, i) for T_i
    let key = |a: usize, b: usize| -> (bool, usize) {
        let c = base.color(a, b);
        if thin_index[c] != usize::MAX {
            let i = thin_index[c];
            return (false, i.min(m - i) % m);
        }
        let i = cover_index[c];
        if inside[a] != inside[b] {
            (true, i)
        } else {
            (true, (m - i) % m)
        }
    };
    let rainbow = Rainbow::from_fn(order, key)
        .map_err(|e| Error::Internal(format!("switched relations: {e}")))?;
    let color_of = |target: (bool, usize)| -> Result<Color> {
        (0..order)
            .flat_map(|a| (0..order).map(move |b| (a, b)))
            .find(|&(a, b)| key(a, b) == target)
            .map(|(a, b)| rainbow.color(a, b))
            .ok_or_else(|| Error::Internal(format!("switched relation {target:?} is empty")))
    };
    let d = (0..=m / 2)
        .map(|i| color_of((false, i)))
        .collect::<Result<Vec<_>>>()?;
    let t = (0..m)
        .map(|i| color_of((true, i)))
        .collect::<Result<Vec<_>>>()?;
    let labels = SwitchedLabels { d, t };

    let internal = |what: &str| Err(Error::Internal(format!("switched scheme {what}")));
    if rainbow.rank() != m + m / 2 + 1 {
        return internal(&format!("has rank {}", rainbow.rank()));
    }
    if !is_jordan_configuration(&rainbow).holds() {
        return internal("is not a Jordan configuration");
    }
    if !check_switched_table(&rainbow, &labels, m, n)? {
        return internal("fails the switched table");
    }
    if !is_proper(&rainbow)?.proper {
        return internal("is not proper");
    }
    Ok(SwitchedScheme {
        rainbow,
        labels,
        m,
        n,
        fiber,
    })
}
