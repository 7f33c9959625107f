//! Exact computations for central hyperplane arrangements over the
//! rationals: the intersection lattice and its Möbius function, Poincaré and
//! characteristic polynomials, the `C^*`-equivariant motivic Chern class of
//! the complement, and the generating function of Hilbert series of the
//! Hodge ideals of the arrangement divisor.
//!
//! Every number is an arbitrary-precision integer or rational; there is no
//! floating point anywhere. Brute-force oracles in [`oracles`] recompute the
//! same quantities by unrelated means.

pub mod arrangement;
pub mod exact_poly;
pub mod hodge;
pub mod ktheory;
pub mod linalg;
pub mod oracles;

pub use arrangement::{Arrangement, ArrangementError, Hyperplane, IntersectionLattice};
pub use exact_poly::{BivariatePoly, ClosedForm, DenomFactor, IntPoly, LaurentPoly, PolyError, RatFunc, YSeries};
