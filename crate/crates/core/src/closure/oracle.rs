use crate::error::Result;
use crate::rainbow::Rainbow;

use super::{ClosureKind, SeedPartition};

/// Reference closure by brute-force linear algebra: refine by the level sets of every
/// product of basis matrices (ordinary product for `Wl`, doubled Jordan product for
/// `Jordan`) until nothing changes. Dense and slow; meant for small orders.
pub fn subspace_closure_oracle(seed: &SeedPartition, kind: ClosureKind) -> Result<Rainbow> {
    let mut x = seed.rainbow().clone();
    loop {
        let basis = x.basis_matrices();
        let mut y = x.clone();
        for (i, a) in basis.iter().enumerate() {
            let start = match kind {
                ClosureKind::Wl => 0,
                ClosureKind::Jordan => i,
            };
            for b in &basis[start..] {
                let p = match kind {
                    ClosureKind::Wl => a.checked_mul(b)?,
                    ClosureKind::Jordan => a.star_doubled(b)?,
                };
                y = y.refine_by_values(&p)?;
            }
        }
        if y.rank() == x.rank() {
            return Ok(x);
        }
        x = y;
    }
}
