//! Exact arithmetic foundation: integer and rational polynomials, resultants,
//! discriminants, Sturm signatures, prime fields and their extensions, F2 matrices,
//! integer lattices and the supporting number theory.

pub mod f2;
pub mod ff;
pub mod intmat;
pub mod linalg_fp;
pub mod lll;
pub mod modp;
pub mod ntheory;
pub mod numeric;
pub mod poly;
pub mod qpoly;
pub mod sturm;
pub mod zfactor;

pub use f2::F2Matrix;
pub use ff::{frobenius_coimage_dim, FfElem, FiniteField};
pub use modp::PolyFp;
pub use poly::IntPoly;
pub use qpoly::QPoly;
pub use sturm::signature;
pub use zfactor::{factor_z, is_irreducible_z};

use num_bigint::BigInt;

/// Discriminant with `disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)`.
pub fn poly_discriminant(f: &IntPoly) -> crate::Result<BigInt> {
    f.discriminant()
}
