//! Exact arithmetic over ℚ and quadratic fields.

pub mod field;
pub mod linalg;
pub mod mobius;
pub mod numeric;
pub mod parse;
pub mod poly;
pub mod quad;
pub mod rat;
pub mod resultant;
pub mod roots;
pub mod tpoly;

pub use field::{Field, Ring};
pub use mobius::{line_left, mobius_right, Mobius, Point};
pub use parse::parse_poly;
pub use poly::{Poly, RatPoly};
pub use quad::{QuadElem, QuadPoly};
pub use rat::{format_rat, int, parse_rat, rat, rat_sqrt, Rat};
pub use resultant::{discriminant, discriminant_t, resultant, resultant_t};
pub use roots::{has_root_in_quad, quad_roots, rational_roots, RootFind};
pub use tpoly::{RatTPoly, TPoly};
