use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A binary operation `⋄` on `[0, r]` with `a⋄a = 0` and every row `x ↦ a⋄x` a bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiamondTable {
    table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiamondKind {
    /// `x⋄y = x − y mod (r + 1)`.
    Cyclic,
    /// Independent uniformly random rows, deterministic per seed.
    Random(u64),
}

impl DiamondTable {
    /// Validates both axioms.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let t = DiamondTable { table };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let size = self.table.len();
        let invalid = |reason: String| Err(Error::SpecInvalid { reason });
        if size == 0 {
            return invalid("diamond table is empty".into());
        }
        for (a, row) in self.table.iter().enumerate() {
            if row.len() != size {
                return invalid(format!("diamond row {a} has length {}", row.len()));
            }
            if row[a] != 0 {
                return invalid(format!("{a}⋄{a} = {} is not 0", row[a]));
            }
            let mut seen = vec![false; size];
            for &x in row {
                if x >= size || std::mem::replace(&mut seen[x], true) {
                    return invalid(format!("diamond row {a} is not a bijection"));
                }
            }
        }
        Ok(())
    }

    /// `r + 1`.
    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn apply(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }
}

pub fn make_diamond(r: usize, kind: DiamondKind) -> DiamondTable {
    let size = r + 1;
    let table = match kind {
        DiamondKind::Cyclic => (0..size)
            .map(|x| (0..size).map(|y| (x + size - y) % size).collect())
            .collect(),
        DiamondKind::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_rows(size, &mut rng)
        }
    };
    DiamondTable { table }
}

pub(crate) fn random_rows(size: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    (0..size)
        .map(|a| {
            let mut values: Vec<usize> = (1..size).collect();
            values.shuffle(rng);
            let mut rest = values.into_iter();
            (0..size)
                .map(|x| if x == a { 0 } else { rest.next().unwrap_or(0) })
                .collect()
        })
        .collect()
}
