//! Even-cover machinery for short spanning closed walks on subcubic graphs.
//!
//! For a simple 2-connected subcubic graph `G` with `n` vertices, `n2` of
//! them of degree 2, the crate computes a spanning closed walk of length at
//! most `(5n + n2)/4 - 1` in quadratic time. The walk is certified through
//! an even cover (a spanning subgraph with all degrees 0 or 2) of small
//! excess, found by a recursive decomposition into chains of 2-connected
//! blocks. A brute-force oracle, extremal-family generators, and a CLI for
//! batch verification round out the toolkit.
//!
//! Modules:
//! - [`multigraph`]: identity-preserving multigraphs and decompositions.
//! - [`chains`]: chain, rooted-theta, and Z-decomposition structure.
//! - [`cover`]: even covers and the splice calculus.
//! - [`approx`]: the scan/cover recursion and the top-level solver.
//! - [`walk`]: cover-to-walk conversion and walk validation.
//! - [`oracle`]: exact brute-force excess values on small graphs.
//! - [`generators`]: named, extremal, and seeded random test graphs.
//! - [`cli`]: command-line entry points.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Neg, Sub};

pub mod approx;
pub mod chains;
pub mod cli;
pub mod cover;
pub mod generators;
pub mod multigraph;
pub mod oracle;
pub mod walk;

pub use multigraph::{EdgeId, Multigraph, Vertex};

/// Exact half-integer, stored as twice its value. All excess bookkeeping is
/// half-integral, so this type keeps every comparison exact with no floats.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Half(i64);

impl Half {
    /// The value 0.
    pub const ZERO: Half = Half(0);
    /// The value -1/2.
    pub const NEG_HALF: Half = Half(-1);

    /// Builds an integral value.
    pub fn from_int(v: i64) -> Half {
        Half(2 * v)
    }

    /// Builds a value from twice itself (`halves(-3)` is -3/2).
    pub fn halves(doubled: i64) -> Half {
        Half(doubled)
    }

    /// Twice the value, always exact.
    pub fn doubled(self) -> i64 {
        self.0
    }

    /// Whether the value is a whole integer.
    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl Sum for Half {
    fn sum<I: Iterator<Item = Half>>(iter: I) -> Half {
        iter.fold(Half::ZERO, Add::add)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
