//! Exact Picard-lattice arithmetic on blow-ups of the projective plane, with
//! the degree-4 del Pezzo surface (five points) as the main case.
//!
//! * [`lattice`]: classes, intersection form, Riemann-Roch, adjunction.
//! * [`lines`]: lines, roots and conic classes, with classical names.
//! * [`weyl`]: root reflections, Cremona moves and orbits.
//! * [`linsys`]: effectivity and `h^0` by peeling off fixed lines.
//! * [`cover`]: double and bidouble cover invariants, half-pullback classes.
//! * [`plane`]: exact rational point/line configurations in the plane.
//! * [`report`]: structured pass/fail records for verification runs.

pub mod cover;
pub mod error;
pub mod lattice;
pub mod lines;
pub mod linsys;
pub mod par;
pub mod plane;
pub mod report;
pub mod weyl;

pub use error::{Error, Result};
pub use lattice::{arith_genus, canonical, intersect, rr_chi, DivisorClass, Lattice, DEL_PEZZO_4};
pub use lines::{enumerate_conic_classes, enumerate_lines, enumerate_roots, LineLabel, NamedLine};
pub use par::Execution;
