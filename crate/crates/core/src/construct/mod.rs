//! Builders for the two families of rank-5 (and higher) Jordan schemes plus small fixtures.
//!
//! Every builder verifies its own output before returning it; a failed self-check is an
//! [`Error::Internal`](crate::Error::Internal) or a construction-specific error.

mod cover;
mod diamond;
mod gf;
mod switch;
mod wfdf;
mod z3;

pub use cover::{build_cyclotomic_base, CoverScheme, CoverSpec};
pub use diamond::{make_diamond, DiamondKind, DiamondTable};
pub use gf::GfTable;
pub use switch::{build_switched, e_classes, SwitchedScheme};
pub use wfdf::{build_wfdf, build_wfdf_uncapped, Perm3, Theta, WfdfScheme, WfdfSpec, MAX_WFDF_DIM};
pub use z3::Z3Space;

use crate::rainbow::Rainbow;

/// The thin scheme of the cyclic group `Z_k`: `color(α, β) = β − α mod k`.
pub fn thin_cyclic_scheme(k: usize) -> Rainbow {
    Rainbow::from_fn(k, |a, b| (b + k - a) % k).expect("group schemes are rainbows")
}
