//! Exact arithmetic substrate: rationals, polynomials in one and two
//! variables, polynomial matrices, and linear algebra over `Q`.

pub mod bipoly;
pub mod linalg;
pub mod modp;
pub mod poly;
pub mod polymat;
pub mod rational;
pub mod resultant;

pub use bipoly::{BiPoly, Var};
pub use linalg::Matrix;
pub use poly::{
    distinct_root_count, poly_gcd, radical, squarefree_decompose, sturm_real_root_count,
    SquarefreeDecomposition, SquarefreePart, UniPoly,
};
pub use polymat::{adjugate, det_fraction_free, PolyMatrix};
pub use rational::Rational;
pub use resultant::{eliminate, resultant, Elimination};
