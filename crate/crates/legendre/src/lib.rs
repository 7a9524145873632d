//! Arithmetic of the Legendre curve C_lambda : y^2 = x(x-1)(x-lambda):
//! group law, point counting, supersingularity, and the multiplication-by-p
//! x-coordinate map (the Lattes map) built by two independent routes.

pub mod count;
pub mod curve;
pub mod division;
pub mod generic_point;
pub mod lattes;

pub use count::{hasse_polynomial, is_supersingular, residue_points, supersingular_lambdas};
pub use curve::{CurveError, CurvePoint, LegendreCurve, ENUMERATION_CAP};
pub use division::{division_data, DivisionData, DivisionPolys};
pub use generic_point::generic_x_map_raw;
pub use lattes::{
    division_lambda_degree_bound, multiplication_x_map, multiplication_x_map_symbolic,
    SymbolicLattes,
};
