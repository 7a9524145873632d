//! The multiplication-by-p x-coordinate map (Lattes map), constructed by
//! both the division-polynomial recursion and generic-point scalar
//! multiplication, with an equality assertion between the two routes.

use crate::curve::{CurveError, LegendreCurve};
use crate::division::DivisionPolys;
use crate::generic_point::generic_x_map_raw;
use ff_core::{FiniteField, RatFuncField};
use poly_rat::{canonicalize_symbolic, sampling_field, specialize_poly, RationalMap};

/// Both construction routes over a finite field, asserted identical.
/// Degree is exactly p^2 after reduction.
pub fn multiplication_x_map<F: FiniteField>(
    curve: &LegendreCurve<F>,
    p: u64,
) -> Result<RationalMap<F>, CurveError> {
    let mut dp = DivisionPolys::new(curve);
    let (num, den) = dp.x_map_raw(p as usize);
    let route_a = RationalMap::new(num, den).map_err(|_| CurveError::BadLambda)?;
    let (bn, bd) = generic_x_map_raw(curve, p);
    let route_b = RationalMap::new(bn, bd).map_err(|_| CurveError::BadLambda)?;
    assert_eq!(
        route_a, route_b,
        "division-polynomial and generic-point routes disagree at p = {}",
        p
    );
    assert_eq!(route_a.degree() as u64, p * p, "Lattes map degree defect");
    Ok(route_a)
}

/// The symbolic Lattes map over F_p(lambda) with the certified dual-route
/// cross-check data.
pub struct SymbolicLattes {
    pub map: RationalMap<RatFuncField>,
    /// Number of lambda specializations at which the generic-point route
    /// agreed with the division-polynomial route.
    pub cross_check_samples: usize,
    /// Lambda-degree bound of the cross-multiplied difference; sample count
    /// exceeding it makes the sampled agreement a proof of the symbolic one.
    pub cross_check_bound: usize,
}

/// Lambda-degree bound for the unreduced division-polynomial forms of x_p.
/// deg_lambda P_k <= (k^2 - k)/2 by induction on the recursion (the curve
/// coefficients have lambda-degree 1 and f contributes 1 per conversion),
/// giving num <= p^2 - p + 2 and den <= p^2 - p; p^2 + p over-covers both.
pub fn division_lambda_degree_bound(p: u64) -> usize {
    (p * p + p) as usize
}

/// Builds the symbolic map by route (a), canonicalized through the
/// coprimality certificate, then proves route (b) agreement by specializing
/// at more lambda values than the cross-difference lambda-degree bound.
pub fn multiplication_x_map_symbolic(p: u64) -> Result<SymbolicLattes, CurveError> {
    let k = RatFuncField::new(p).map_err(|_| CurveError::BadField)?;
    let curve = LegendreCurve::new(k, k.lambda())?;
    let mut dp = DivisionPolys::new(&curve);
    let (num, den) = dp.x_map_raw(p as usize);
    let map = canonicalize_symbolic(&k, num.clone(), den.clone())
        .map_err(|_| CurveError::BadLambda)?;
    assert_eq!(map.degree() as u64, p * p, "symbolic Lattes degree defect");

    // cross-check: both sides of the comparison are the unreduced route-(a)
    // fraction and the route-(b) reduced map; their cross-multiplied
    // difference has lambda-degree at most bound_a + bound_b.
    let bound = 2 * division_lambda_degree_bound(p) + 1;
    let ext = sampling_field(p, bound as u64 + 2).map_err(|_| CurveError::BadField)?;
    let mut agreed = 0usize;
    let mut code = 2u64;
    while agreed <= bound {
        if code >= ext.order() {
            return Err(CurveError::FieldTooLarge(ext.order()));
        }
        let lam = ext.decode(code);
        code += 1;
        let spec_num = match specialize_poly(&num, &k, &ext, &lam) {
            Some(v) => v,
            None => continue,
        };
        let spec_den = match specialize_poly(&den, &k, &ext, &lam) {
            Some(v) => v,
            None => continue,
        };
        if spec_den.is_zero() {
            continue;
        }
        let spec_curve = LegendreCurve::new(ext.clone(), lam)?;
        let (bn, bd) = generic_x_map_raw(&spec_curve, p);
        // fraction equality via cross-multiplication
        assert_eq!(
            spec_num.mul(&bd),
            bn.mul(&spec_den),
            "generic-point route disagrees with division polynomials at sample {}",
            code - 1
        );
        agreed += 1;
    }
    Ok(SymbolicLattes { map, cross_check_samples: agreed, cross_check_bound: bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ff_core::PrimeField;
    use poly_rat::ProjPoint;

    #[test]
    fn small_prime_specialized_routes_agree() {
        let f = PrimeField::new(7).unwrap();
        for lam in 2..7u64 {
            let curve = LegendreCurve::new(f, lam).unwrap();
            let map = multiplication_x_map(&curve, 3).unwrap();
            assert_eq!(map.degree(), 9);
            // punctures are fixed
            for z in [ProjPoint::Finite(0), ProjPoint::Finite(1), ProjPoint::Finite(lam)] {
                assert_eq!(map.eval_proj(&z), z);
            }
            assert_eq!(map.eval_proj(&ProjPoint::Infinity), ProjPoint::Infinity);
        }
    }

    #[test]
    fn symbolic_p3_has_degree_nine() {
        let s = multiplication_x_map_symbolic(3).unwrap();
        assert_eq!(s.map.degree(), 9);
        assert!(s.cross_check_samples > s.cross_check_bound);
    }
}
