//! Cohomology of the free loop space `LX` of a space with truncated
//! polynomial cohomology `F_p[x]/(x^{r+1})`, its circle-action differential,
//! and the F_p[u]-module structure of the Borel construction.

pub mod consecutive;
pub mod index_sets;
pub mod model;
pub mod module;
pub mod rational;

use serde::{Deserialize, Serialize};

use crate::algebra::is_prime;
use crate::error::{Error, Result};

pub use consecutive::{consecutive_report, consecutive_runs, plane_mod_two_pairs, ConsecutiveReport};
pub use index_sets::{IndexKind, IndexSet};
pub use model::{action_counts, predicted_counts, ActionCounts, LoopAlgebraModel, LoopBasis, LoopCase};
pub use module::{main_closed_form, main_module, main_poincare, GradedUModule, UElement, UGenerator};
pub use rational::{rational_borel_series, rational_loop_model};

/// `(r, p, alpha)`: truncation height, prime, and the even degree of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncSpaceParams {
    pub r: u32,
    pub p: u64,
    pub alpha: u32,
}

impl TruncSpaceParams {
    pub fn new(r: u32, p: u64, alpha: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroRank);
        }
        if alpha == 0 || alpha % 2 == 1 {
            return Err(Error::OddAlpha(alpha));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(TruncSpaceParams { r, p, alpha })
    }

    /// The projective space case `alpha = 2`.
    pub fn projective(r: u32, p: u64) -> Result<Self> {
        TruncSpaceParams::new(r, p, 2)
    }

    pub fn rho(&self) -> u64 {
        (self.r as u64 + 1) * self.alpha as u64 - 2
    }

    pub fn divisible(&self) -> bool {
        (self.r as u64 + 1).is_multiple_of(self.p)
    }

    /// `chi_p(r + 1)`: 0 when `p` divides `r + 1`, otherwise 1.
    pub fn chi(&self) -> u32 {
        chi(self.p, self.r as u64 + 1)
    }

    /// Default series cutoff `6 rho p`.
    pub fn default_cutoff(&self) -> u64 {
        6 * self.rho() * self.p
    }
}

pub fn chi(p: u64, s: u64) -> u32 {
    u32::from(!s.is_multiple_of(p))
}
