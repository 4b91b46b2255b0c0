use std::cmp::Ordering;

use num_integer::Roots;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::relation::{compose, Relation};

/// Parameters `(v, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// Validates `k(k − λ − 1) = (v − k − 1)μ` together with the obvious range conditions.
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        let infeasible = Error::InfeasibleParams { v, k, lambda, mu };
        if k >= v || lambda >= k.max(1) || mu > k {
            return Err(infeasible);
        }
        let lhs = i128::from(k) * (i128::from(k) - i128::from(lambda) - 1);
        let rhs = (i128::from(v) - i128::from(k) - 1) * i128::from(mu);
        if lhs != rhs {
            return Err(infeasible);
        }
        Ok(SrgParams { v, k, lambda, mu })
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> Result<Self> {
        let SrgParams { v, k, lambda, mu } = *self;
        let (vi, ki) = (i128::from(v), i128::from(k));
        let kc = vi - ki - 1;
        let lc = vi + i128::from(mu) - 2 * ki - 2;
        let mc = vi - 2 * ki + i128::from(lambda);
        if kc < 0 || lc < 0 || mc < 0 {
            return Err(Error::InfeasibleParams { v, k, lambda, mu });
        }
        SrgParams::new(v, kc as u64, lc as u64, mc as u64)
    }
}

/// Returns the SRG parameters of the graph `R`, or `None` when it is not strongly regular.
/// Complete and empty graphs give `None`.
pub fn srg_check(r: &Relation) -> Result<Option<SrgParams>> {
    if !r.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !r.is_irreflexive() {
        return Err(Error::NotIrreflexive);
    }
    let n = r.order();
    if n == 0 {
        return Ok(None);
    }
    let k = r.out_degree(0);
    if (1..n).any(|a| r.out_degree(a) != k) || k == 0 || k == n - 1 {
        return Ok(None);
    }
    let common = compose(r, r)?;
    let mut lambda = None;
    let mut mu = None;
    for a in 0..n {
        for b in (0..n).filter(|&b| b != a) {
            let slot = if r.contains(a, b) { &mut lambda } else { &mut mu };
            let value = common.get(a, b) as u64;
            match *slot {
                None => *slot = Some(value),
                Some(prev) if prev != value => return Ok(None),
                Some(_) => {}
            }
        }
    }
    let (Some(lambda), Some(mu)) = (lambda, mu) else {
        return Ok(None);
    };
    Ok(Some(SrgParams::new(n as u64, k as u64, lambda, mu)?))
}

/// The Hoffman coclique bound `v(−τ)/(k − τ)` with `τ` the smallest eigenvalue,
/// `τ = ((λ − μ) − s)/2`, `s² = (λ − μ)² + 4(k − μ)`.
///
/// When `s` is irrational the bound is kept symbolically and only exact comparisons
/// against integer coclique sizes are offered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HoffmanBound {
    v: i128,
    k: i128,
    diff: i128,
    disc: i128,
}

impl HoffmanBound {
    fn sqrt_disc(&self) -> Option<i128> {
        let s = self.disc.sqrt();
        (s * s == self.disc).then_some(s)
    }

    /// The exact bound when the smallest eigenvalue is rational.
    pub fn exact(&self) -> Option<Ratio<i128>> {
        let s = self.sqrt_disc()?;
        Some(Ratio::new(self.v * (s - self.diff), 2 * self.k - self.diff + s))
    }

    /// `s² = (λ − μ)² + 4(k − μ)`.
    pub fn discriminant(&self) -> i128 {
        self.disc
    }

    /// Orders `size` against the bound: `Less` means `size` lies strictly below it.
    pub fn compare(&self, size: u64) -> Ordering {
        // size ? v(s − δ)/(2k − δ + s)   with δ = λ − μ and positive denominator
        //  ⟺ size(2k − δ) + vδ ? (v − size)s
        let c = i128::from(size);
        let lhs = c * (2 * self.k - self.diff) + self.v * self.diff;
        let coef = self.v - c;
        compare_with_surd(lhs, coef, self.disc)
    }

    /// Largest integer not exceeding the bound.
    pub fn floor(&self) -> u64 {
        let mut lo = 0u64;
        let mut hi = self.v as u64;
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if self.compare(mid) == Ordering::Greater {
                hi = mid - 1;
            } else {
                lo = mid;
            }
        }
        lo
    }
}

/// Sign of `lhs − coef·√disc` as an ordering of `lhs` against `coef·√disc`.
fn compare_with_surd(lhs: i128, coef: i128, disc: i128) -> Ordering {
    let rhs_sign = if coef == 0 || disc == 0 { 0 } else { coef.signum() };
    match (lhs.signum(), rhs_sign) {
        (l, r) if l != r => l.cmp(&r),
        (0, 0) => Ordering::Equal,
        (s, _) => {
            let l2 = lhs * lhs;
            let r2 = coef * coef * disc;
            if s > 0 {
                l2.cmp(&r2)
            } else {
                r2.cmp(&l2)
            }
        }
    }
}

pub fn hoffman_coclique_bound(p: &SrgParams) -> Result<HoffmanBound> {
    let p = SrgParams::new(p.v, p.k, p.lambda, p.mu)?;
    let diff = i128::from(p.lambda) - i128::from(p.mu);
    Ok(HoffmanBound {
        v: i128::from(p.v),
        k: i128::from(p.k),
        diff,
        disc: diff * diff + 4 * (i128::from(p.k) - i128::from(p.mu)),
    })
}
