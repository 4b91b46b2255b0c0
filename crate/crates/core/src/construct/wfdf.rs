use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::diamond::{make_diamond, random_rows, DiamondKind, DiamondTable};
use super::z3::Z3Space;
use crate::error::{Error, Result};
use crate::rainbow::{Color, Rainbow};
use crate::verify::is_jordan_configuration;

/// Largest dimension accepted by [`build_wfdf`]; order grows as `3^d(3^d + 1)/2`.
pub const MAX_WFDF_DIM: usize = 3;

/// A permutation of `Z₃`, stored as its images of 0, 1, 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm3(pub [u8; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);

    pub fn is_valid(&self) -> bool {
        let mut s = self.0;
        s.sort_unstable();
        s == [0, 1, 2]
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.0[x as usize]
    }

    pub fn inverse(&self) -> Perm3 {
        let mut inv = [0u8; 3];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y as usize] = x as u8;
        }
        Perm3(inv)
    }
}

/// One of the two 3-cycles of `Z₃`: `+` is `x ↦ x + 1`, `−` is `x ↦ x + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theta {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Theta {
    fn shift(self) -> u8 {
        match self {
            Theta::Plus => 1,
            Theta::Minus => 2,
        }
    }
}

/// Parameters `(d, ⋄, Σ, Θ)`. `sigma` and `theta` are indexed by the pairs `i < j` of
/// `[0, r]` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WfdfSpec {
    pub d: usize,
    pub diamond: DiamondTable,
    pub sigma: Vec<Perm3>,
    pub theta: Vec<Theta>,
}

fn pair_count(r: usize) -> usize {
    (r + 1) * r / 2
}

fn pair_index(size: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    i * size - i * (i + 1) / 2 + (j - i - 1)
}

fn r_of(d: usize) -> usize {
    (3usize.pow(d as u32) - 1) / 2
}

impl WfdfSpec {
    /// Cyclic `⋄`, identity `σ`s and `θ = +` everywhere.
    pub fn canonical(d: usize) -> Self {
        let r = r_of(d);
        WfdfSpec {
            d,
            diamond: make_diamond(r, DiamondKind::Cyclic),
            sigma: vec![Perm3::IDENTITY; pair_count(r)],
            theta: vec![Theta::Plus; pair_count(r)],
        }
    }

    /// Draws the selected components from one seeded stream, in the order `⋄`, `Σ`, `Θ`;
    /// the others keep their canonical value.
    pub fn sampled(d: usize, diamond: bool, sigma: bool, theta: bool, seed: u64) -> Self {
        let mut spec = Self::canonical(d);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = r_of(d);
        if diamond {
            spec.diamond =
                DiamondTable::new(random_rows(r + 1, &mut rng)).expect("sampled rows are valid");
        }
        if sigma {
            for s in &mut spec.sigma {
                let mut p = [0u8, 1, 2];
                p.shuffle(&mut rng);
                *s = Perm3(p);
            }
        }
        if theta {
            for t in &mut spec.theta {
                *t = if rng.gen::<bool>() { Theta::Plus } else { Theta::Minus };
            }
        }
        spec
    }

    /// All three components random.
    pub fn random(d: usize, seed: u64) -> Self {
        Self::sampled(d, true, true, true, seed)
    }

    pub fn r(&self) -> usize {
        r_of(self.d)
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |reason: String| Err(Error::SpecInvalid { reason });
        if self.d == 0 {
            return invalid("d must be at least 1".into());
        }
        if self.d > 12 {
            return invalid(format!("d = {} is far beyond any buildable size", self.d));
        }
        let r = self.r();
        if self.diamond.size() != r + 1 {
            return invalid(format!(
                "diamond has size {} but r + 1 = {}",
                self.diamond.size(),
                r + 1
            ));
        }
        self.diamond.validate()?;
        let pairs = pair_count(r);
        if self.sigma.len() != pairs || self.theta.len() != pairs {
            return invalid(format!(
                "sigma and theta need {pairs} entries, got {} and {}",
                self.sigma.len(),
                self.theta.len()
            ));
        }
        if let Some(p) = self.sigma.iter().position(|s| !s.is_valid()) {
            return invalid(format!("sigma entry {p} is not a permutation of Z3"));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: WfdfSpec =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("spec serializes");
        s.push('\n');
        s
    }
}

/// A built scheme with the colors of `S` and `R₁, R₂, R₃`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WfdfScheme {
    pub rainbow: Rainbow,
    pub s: Color,
    pub r: [Color; 3],
    /// `Ω_i` as point lists, in order of `i`.
    pub blocks: Vec<Vec<usize>>,
}

/// Builds `1, S, R₁, R₂, R₃` on `Z₃^d × [0, r]`, for `d ≤ MAX_WFDF_DIM`.
pub fn build_wfdf(spec: &WfdfSpec) -> Result<WfdfScheme> {
    if spec.d > MAX_WFDF_DIM {
        return Err(Error::SpecInvalid {
            reason: format!("d = {} exceeds the cap {MAX_WFDF_DIM}", spec.d),
        });
    }
    build_wfdf_uncapped(spec)
}

/// [`build_wfdf`] without the dimension cap.
pub fn build_wfdf_uncapped(spec: &WfdfSpec) -> Result<WfdfScheme> {
    spec.validate()?;
    let space = Z3Space::new(spec.d);
    let size = space.size();
    let blocks_n = spec.r() + 1;
    let order = size * blocks_n;

    // proj[i][j][u] = π_{i⋄j}(u) for i ≠ j
    let proj: Vec<Vec<Vec<u8>>> = (0..blocks_n)
        .map(|i| {
            (0..blocks_n)
                .map(|j| {
                    if i == j {
                        return Vec::new();
                    }
                    let h = spec.diamond.apply(i, j);
                    (0..size).map(|u| space.project(h, u)).collect()
                })
                .collect()
        })
        .collect();

    // 0 = diagonal, 1 = S, 1 + a = R_a
    let label = |p: usize, q: usize| -> Result<u8> {
        let (i, u, j, v) = (p / size, p % size, q / size, q % size);
        if i == j {
            return Ok(if u == v { 0 } else { 1 });
        }
        let (i, u, j, v) = if i < j { (i, u, j, v) } else { (j, v, i, u) };
        let k = pair_index(blocks_n, i, j);
        let x = spec.sigma[k].apply(proj[i][j][u]);
        let y = proj[j][i][v];
        let step = spec.theta[k].shift();
        let hits: Vec<u8> = (1..=3u8)
            .filter(|&a| (x + (a - 1) * step) % 3 == y)
            .collect();
        match hits.as_slice() {
            [a] => Ok(1 + a),
            _ => Err(Error::Internal(format!(
                "pair ({p},{q}) lies in {} of R1, R2, R3",
                hits.len()
            ))),
        }
    };
    let mut labels = Vec::with_capacity(order * order);
    for p in 0..order {
        for q in 0..order {
            labels.push(label(p, q)?);
        }
    }
    let rainbow = Rainbow::from_fn(order, |p, q| labels[p * order + q])
        .map_err(|e| Error::Internal(format!("WFDF relations: {e}")))?;
    let color_of = |l: u8| -> Result<Color> {
        labels
            .iter()
            .position(|&x| x == l)
            .map(|pos| rainbow.cells()[pos] as Color)
            .ok_or_else(|| Error::Internal(format!("relation {l} is empty")))
    };
    let s = color_of(1)?;
    let r = [color_of(2)?, color_of(3)?, color_of(4)?];
    if rainbow.rank() != 5 {
        return Err(Error::Internal(format!("WFDF rank {}", rainbow.rank())));
    }
    if !is_jordan_configuration(&rainbow).holds() {
        return Err(Error::Internal("WFDF output is not a Jordan configuration".into()));
    }
    let blocks = (0..blocks_n)
        .map(|i| (i * size..(i + 1) * size).collect())
        .collect();
    Ok(WfdfScheme {
        rainbow,
        s,
        r,
        blocks,
    })
}
