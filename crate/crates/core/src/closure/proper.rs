use serde::Serialize;

use crate::error::{Error, Result};
use crate::rainbow::{Color, Rainbow};
use crate::verify::is_jordan_configuration;

use super::{wl_closure, SeedPartition};

/// Outcome of comparing a symmetric Jordan configuration with its symmetrized coherent closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropernessReport {
    pub proper: bool,
    pub jordan_rank: usize,
    pub symmetrized_wl_rank: usize,
    /// Smallest color of the input that the symmetrized closure splits.
    pub witness_color: Option<Color>,
    /// Every input color split by the symmetrized closure.
    pub split_colors: Vec<Color>,
}

/// A symmetric Jordan configuration is proper when it is strictly coarser than the
/// symmetrization of its coherent closure.
pub fn is_proper(x: &Rainbow) -> Result<PropernessReport> {
    if !x.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !is_jordan_configuration(x).holds() {
        return Err(Error::NotJordan);
    }
    let sym = wl_closure(&SeedPartition::from_rainbow(x))?.result.symmetrize();
    let mut image: Vec<Option<u32>> = vec![None; x.rank()];
    let mut split = vec![false; x.rank()];
    for (pos, &c) in x.cells().iter().enumerate() {
        let fine = sym.cells()[pos];
        match image[c as usize] {
            None => image[c as usize] = Some(fine),
            Some(prev) if prev != fine => split[c as usize] = true,
            Some(_) => {}
        }
    }
    let split_colors: Vec<Color> = (0..x.rank()).filter(|&c| split[c]).collect();
    Ok(PropernessReport {
        proper: sym.rank() > x.rank(),
        jordan_rank: x.rank(),
        symmetrized_wl_rank: sym.rank(),
        witness_color: split_colors.first().copied(),
        split_colors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_is_not_proper() {
        let x = Rainbow::from_fn(5, |a, b| (5 + b - a) % 5).unwrap().symmetrize();
        let r = is_proper(&x).unwrap();
        assert!(!r.proper);
        assert_eq!(r.witness_color, None);
        assert_eq!(r.symmetrized_wl_rank, 3);
    }

    #[test]
    fn preconditions() {
        let z3 = Rainbow::from_fn(3, |a, b| (3 + b - a) % 3).unwrap();
        assert_eq!(is_proper(&z3), Err(Error::NotSymmetric));
        // path on three points: edge valency varies, so not Jordan
        let path = Rainbow::from_fn(3, |a: usize, b: usize| a.abs_diff(b)).unwrap();
        assert_eq!(is_proper(&path), Err(Error::NotJordan));
    }
}
