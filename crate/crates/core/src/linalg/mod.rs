//! Small dense linear algebra, generic over the scalar tier.

mod complex;
mod dense;

pub use complex::{cabs, phase, CMatrix, Complex, HermitianEigen};
pub use dense::{lstsq, null_space, Householder, Mat};
