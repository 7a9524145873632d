//! Specialization of symbolic-lambda objects at a lambda value in any
//! F_p-algebra, and the coprimality certificate it enables.

use crate::poly::Polynomial;
use crate::ratmap::RationalMap;
use ff_core::{Field, RatFuncField};

/// Evaluates every coefficient at lambda = point. None if some coefficient
/// denominator vanishes there.
pub fn specialize_poly<G: Field>(
    poly: &Polynomial<RatFuncField>,
    src: &RatFuncField,
    target: &G,
    point: &G::Elem,
) -> Option<Polynomial<G>> {
    let mut coeffs = Vec::with_capacity(poly.coeffs().len());
    for c in poly.coeffs() {
        coeffs.push(src.evaluate(c, target, point)?);
    }
    Some(Polynomial::new(target.clone(), coeffs))
}

/// Specializes numerator and denominator and re-canonicalizes over the
/// target field.
pub fn specialize_map<G: Field>(
    map: &RationalMap<RatFuncField>,
    src: &RatFuncField,
    target: &G,
    point: &G::Elem,
) -> Option<RationalMap<G>> {
    let num = specialize_poly(map.num(), src, target, point)?;
    let den = specialize_poly(map.den(), src, target, point)?;
    if den.is_zero() {
        return None;
    }
    RationalMap::new(num, den).ok()
}

/// Sound one-sided coprimality certificate over F_p(lambda).
///
/// If the leading coefficients of both polynomials survive specialization at
/// some point and the specialized gcd is trivial there, the symbolic gcd is
/// trivial: any common factor g divides both, its leading coefficient divides
/// the leading coefficients, so g specializes with full degree into the
/// trivial specialized gcd. A `false` answer is inconclusive.
pub fn certify_coprime_at<G: Field>(
    a: &Polynomial<RatFuncField>,
    b: &Polynomial<RatFuncField>,
    src: &RatFuncField,
    target: &G,
    point: &G::Elem,
) -> bool {
    let (sa, sb) = match (
        specialize_poly(a, src, target, point),
        specialize_poly(b, src, target, point),
    ) {
        (Some(x), Some(y)) => (x, y),
        _ => return false,
    };
    if sa.degree() != a.degree() || sb.degree() != b.degree() {
        return false;
    }
    if sa.is_zero() || sb.is_zero() {
        return false;
    }
    sa.gcd(&sb).is_constant()
}

/// Smallest-degree extension of F_p with more than `need` elements, with the
/// deterministic standard modulus.
pub fn sampling_field(p: u64, need: u64) -> Result<ff_core::ExtField, ff_core::FieldError> {
    let mut d = 1u32;
    let mut order = p;
    while order <= need {
        order = order
            .checked_mul(p)
            .ok_or(ff_core::FieldError::OrderOverflow)?;
        d += 1;
    }
    let modulus = ff_core::standard_modulus(p, d)?;
    ff_core::ExtField::new(p, modulus)
}

/// Canonical form over F_p(lambda) through the coprimality certificate:
/// specialize at successive points of an extension field large enough to
/// dominate the coefficient degrees, and accept the first certifying point.
/// Falls back to a full gcd when no certificate is found (which only
/// happens for genuinely non-coprime inputs).
pub fn canonicalize_symbolic(
    k: &RatFuncField,
    num: Polynomial<RatFuncField>,
    den: Polynomial<RatFuncField>,
) -> Result<RationalMap<RatFuncField>, crate::ratmap::MapError> {
    let p = k.characteristic();
    let max_deg = num
        .coeffs()
        .iter()
        .chain(den.coeffs().iter())
        .map(|c| c.num_degree().unwrap_or(0).max(c.den_degree()))
        .max()
        .unwrap_or(0);
    let ext = sampling_field(p, (max_deg as u64 + 2).max(64))
        .map_err(|_| crate::ratmap::MapError::DegenerateMap)?;
    use ff_core::FiniteField;
    for code in 2..ext.order().min(130) {
        let pt = ext.decode(code);
        if certify_coprime_at(&num, &den, k, &ext, &pt) {
            return RationalMap::from_coprime(num, den);
        }
    }
    RationalMap::new(num, den)
}
