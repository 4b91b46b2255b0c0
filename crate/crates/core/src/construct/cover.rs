use serde::{Deserialize, Serialize};

use super::gf::GfTable;
use crate::error::{Error, Result};
use crate::rainbow::Rainbow;
use crate::verify::{check_base_table, BaseLabels};

/// Parameters of the cyclotomic cover: field size `q = 2^k` and index `m | q − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverSpec {
    pub q: usize,
    pub m: usize,
}

impl CoverSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// The base scheme `{C_i, S_i}` on `m(q + 1)` points with `n = q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverScheme {
    pub rainbow: Rainbow,
    pub labels: BaseLabels,
    pub m: usize,
    pub n: usize,
    /// Coset-minimal representative vector of every point.
    pub points: Vec<(u8, u8)>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Arc {
    Thin(usize),
    Cover(usize),
}

/// Points are the cosets `xC` of `C = ⟨g^m⟩` acting on `GF(q)² ∖ {0}`, sorted by their
/// lexicographically smallest vector. `C_i` holds `(xC, yC)` with `y ∈ g^{−i}Cx`; `S_i`
/// holds pairs with `det(x, y) ∈ g^i C`. The result is returned only if it satisfies the
/// cover multiplication table.
pub fn build_cyclotomic_base(spec: CoverSpec) -> Result<CoverScheme> {
    let CoverSpec { q, m } = spec;
    if m < 2 || q < 2 || (q - 1) % m != 0 {
        return Err(Error::DivisibilityError {
            reason: format!("need m ≥ 2 dividing q − 1, got q = {q}, m = {m}"),
        });
    }
    let f = GfTable::new(q)?;
    let coset: Vec<u8> = (0..(q - 1) / m).map(|e| f.pow_g(e * m)).collect();

    let mut points: Vec<(u8, u8)> = Vec::new();
    for x0 in 0..q as u8 {
        for x1 in 0..q as u8 {
            if (x0, x1) == (0, 0) {
                continue;
            }
            let min = coset
                .iter()
                .map(|&c| (f.mul(c, x0), f.mul(c, x1)))
                .min()
                .expect("C is nonempty");
            if min == (x0, x1) {
                points.push(min);
            }
        }
    }
    debug_assert_eq!(points.len(), m * (q + 1));

    let class_of = |e: usize| e % m;
    let arc = |a: usize, b: usize| -> Arc {
        let (x, y) = (points[a], points[b]);
        let det = f.add(f.mul(x.0, y.1), f.mul(x.1, y.0));
        if let Some(l) = f.log(det) {
            return Arc::Cover(class_of(l));
        }
        // dependent: y = λx for a unique λ, found from a nonzero coordinate of x
        let lambda = if x.0 != 0 {
            f.mul(y.0, f.inv(x.0).expect("nonzero"))
        } else {
            f.mul(y.1, f.inv(x.1).expect("nonzero"))
        };
        let l = f.log(lambda).expect("dependent nonzero vectors differ by a unit");
        Arc::Thin(class_of(m * (q - 1) - l))
    };
    let order = points.len();
    let rainbow = Rainbow::from_fn(order, arc)
        .map_err(|e| Error::Internal(format!("cover relations: {e}")))?;
    let color_of = |target: Arc| {
        (0..order)
            .flat_map(|a| (0..order).map(move |b| (a, b)))
            .find(|&(a, b)| arc(a, b) == target)
            .map(|(a, b)| rainbow.color(a, b))
    };
    let thin: Option<Vec<_>> = (0..m).map(|i| color_of(Arc::Thin(i))).collect();
    let cover: Option<Vec<_>> = (0..m).map(|i| color_of(Arc::Cover(i))).collect();
    let (Some(thin), Some(cover)) = (thin, cover) else {
        return Err(Error::TableVerificationFailed { q, m });
    };
    let labels = BaseLabels { thin, cover };
    match check_base_table(&rainbow, &labels, m, q) {
        Ok(true) => Ok(CoverScheme {
            rainbow,
            labels,
            m,
            n: q,
            points,
        }),
        Ok(false) | Err(Error::LabelMismatch { .. }) => {
            Err(Error::TableVerificationFailed { q, m })
        }
        Err(e) => Err(e),
    }
}
