//! Reduced rational maps on the projective line.

use crate::poly::Polynomial;
use ff_core::Field;
use std::fmt;

/// A point of P^1 over a field: a finite value or infinity.
#[derive(Debug, Clone, PartialEq)]
pub enum ProjPoint<E> {
    Finite(E),
    Infinity,
}

impl<E> ProjPoint<E> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn finite(&self) -> Option<&E> {
        match self {
            ProjPoint::Finite(e) => Some(e),
            ProjPoint::Infinity => None,
        }
    }
}

/// Errors from rational-map construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    /// num = den = 0 or a zero denominator: no map on P^1.
    DegenerateMap,
    /// Evaluation of an affine quantity at a pole.
    PoleAtPoint,
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::DegenerateMap => write!(f, "degenerate rational map (zero denominator)"),
            MapError::PoleAtPoint => write!(f, "evaluation at a pole"),
        }
    }
}

impl std::error::Error for MapError {}

/// num/den with gcd(num, den) = 1 and monic den. Equality of maps is
/// structural equality of this canonical form.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMap<F: Field> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> RationalMap<F> {
    /// Canonicalizes via a full gcd.
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self, MapError> {
        if den.is_zero() {
            return Err(MapError::DegenerateMap);
        }
        if num.is_zero() {
            let field = num.field().clone();
            return Ok(RationalMap { num, den: Polynomial::one(field) });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        Ok(Self::monicize(num, den))
    }

    /// Canonicalizes without the gcd step. The caller asserts coprimality
    /// (e.g. via a specialization certificate or a degree argument).
    pub fn from_coprime(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self, MapError> {
        if den.is_zero() {
            return Err(MapError::DegenerateMap);
        }
        Ok(Self::monicize(num, den))
    }

    fn monicize(num: Polynomial<F>, den: Polynomial<F>) -> Self {
        let lc = den.leading_coeff().unwrap().clone();
        if den.field().is_one(&lc) {
            return RationalMap { num, den };
        }
        let ci = den.field().inv(&lc).unwrap();
        RationalMap { num: num.scale(&ci), den: den.scale(&ci) }
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        let one = Polynomial::one(p.field().clone());
        RationalMap { num: p, den: one }
    }

    /// The identity map z.
    pub fn identity(field: F) -> Self {
        Self::from_poly(Polynomial::x(field))
    }

    pub fn num(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn field(&self) -> &F {
        self.num.field()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Map degree max(deg num, deg den); constants have degree 0.
    pub fn degree(&self) -> usize {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        dn.max(dd)
    }

    /// Total projective evaluation, including infinity and poles.
    pub fn eval_proj(&self, x: &ProjPoint<F::Elem>) -> ProjPoint<F::Elem> {
        let f = self.field();
        match x {
            ProjPoint::Finite(v) => {
                let nv = self.num.eval(v);
                let dv = self.den.eval(v);
                if f.is_zero(&dv) {
                    assert!(
                        !f.is_zero(&nv),
                        "reduced map evaluated to 0/0; inputs were not coprime"
                    );
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(f.mul(&nv, &f.inv(&dv).unwrap()))
                }
            }
            ProjPoint::Infinity => {
                let dn = self.num.degree().map_or(-1, |d| d as i64);
                let dd = self.den.degree().map_or(-1, |d| d as i64);
                match dn.cmp(&dd) {
                    std::cmp::Ordering::Greater => ProjPoint::Infinity,
                    std::cmp::Ordering::Less => ProjPoint::Finite(f.zero()),
                    std::cmp::Ordering::Equal => {
                        let lead_n = self.num.leading_coeff().unwrap();
                        let lead_d = self.den.leading_coeff().unwrap();
                        ProjPoint::Finite(f.mul(lead_n, &f.inv(lead_d).unwrap()))
                    }
                }
            }
        }
    }

    /// Affine evaluation; `PoleAtPoint` where the (reduced) denominator
    /// vanishes, `DegenerateMap` never.
    pub fn eval_affine(&self, x: &F::Elem) -> Result<F::Elem, MapError> {
        let f = self.field();
        let dv = self.den.eval(x);
        let di = f.inv(&dv).ok_or(MapError::PoleAtPoint)?;
        Ok(f.mul(&self.num.eval(x), &di))
    }

    /// Composition outer(inner(z)). The degree of a composite of reduced
    /// maps is the product of the degrees, so the homogeneous substitution
    /// below is automatically coprime; no gcd is taken.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self, MapError> {
        let field = outer.field().clone();
        let d_o = outer.degree();
        let d_i = inner.degree();
        if d_o == 0 || d_i == 0 {
            // constant outer, or constant inner: the composite is constant
            let value = if d_i == 0 {
                outer.eval_proj(&inner.eval_proj(&ProjPoint::Finite(field.zero())))
            } else {
                outer.eval_proj(&ProjPoint::Finite(field.zero()))
            };
            return match value {
                ProjPoint::Finite(v) => Ok(Self::from_poly(Polynomial::constant(field, v))),
                ProjPoint::Infinity => Err(MapError::DegenerateMap),
            };
        }
        // homogenize outer to degree d_o and substitute (g : h)
        let g = &inner.num;
        let h = &inner.den;
        let mut g_pows = Vec::with_capacity(d_o + 1);
        let mut h_pows = Vec::with_capacity(d_o + 1);
        let mut acc = Polynomial::one(field.clone());
        for _ in 0..=d_o {
            g_pows.push(acc.clone());
            acc = acc.mul(g);
        }
        acc = Polynomial::one(field.clone());
        for _ in 0..=d_o {
            h_pows.push(acc.clone());
            acc = acc.mul(h);
        }
        let substitute = |poly: &Polynomial<F>| {
            let mut out = Polynomial::zero(field.clone());
            for k in 0..=d_o {
                let c = poly.coeff(k);
                if field.is_zero(&c) {
                    continue;
                }
                out = out.add(&g_pows[k].mul(&h_pows[d_o - k]).scale(&c));
            }
            out
        };
        let num = substitute(&outer.num);
        let den = substitute(&outer.den);
        let composed = Self::from_coprime(num, den)?;
        assert_eq!(
            composed.degree(),
            d_o * d_i,
            "composition degree defect: inputs were not reduced"
        );
        Ok(composed)
    }

    /// Quotient-rule derivative, canonicalized.
    pub fn derivative(&self) -> Result<Self, MapError> {
        let n = &self.num;
        let d = &self.den;
        let num = n.derivative().mul(d).sub(&n.mul(&d.derivative()));
        let den = d.mul(d);
        Self::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ff_core::{Field, PrimeField};

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn poly(cs: &[i64]) -> Polynomial<PrimeField> {
        let f = f7();
        Polynomial::new(f, cs.iter().map(|&c| f.from_int(c)).collect())
    }

    #[test]
    fn canonical_form() {
        // (2x^2 + 2x) / (4x) -> (4x + 4)/1 after reduction and monicization
        let m = RationalMap::new(poly(&[0, 2, 2]), poly(&[0, 4])).unwrap();
        assert!(m.is_polynomial());
        assert_eq!(m.num(), &poly(&[4, 4]));
        assert!(RationalMap::new(poly(&[1]), poly(&[])).is_err());
    }

    #[test]
    fn eval_proj_of_inverse_map() {
        // f = 1/z: 0 -> inf, inf -> 0
        let m = RationalMap::new(poly(&[1]), poly(&[0, 1])).unwrap();
        assert_eq!(m.eval_proj(&ProjPoint::Finite(0)), ProjPoint::Infinity);
        assert_eq!(m.eval_proj(&ProjPoint::Infinity), ProjPoint::Finite(0));
        assert_eq!(m.eval_proj(&ProjPoint::Finite(3)), ProjPoint::Finite(5));
    }

    #[test]
    fn compose_examples() {
        // z^2 after z+1 is (z+1)^2
        let sq = RationalMap::from_poly(poly(&[0, 0, 1]));
        let shift = RationalMap::from_poly(poly(&[1, 1]));
        let c = RationalMap::compose(&sq, &shift).unwrap();
        assert_eq!(c.num(), &poly(&[1, 2, 1]));
        // identity on either side
        let id = RationalMap::identity(f7());
        let m = RationalMap::new(poly(&[1, 2]), poly(&[3, 0, 1])).unwrap();
        assert_eq!(RationalMap::compose(&id, &m).unwrap(), m);
        assert_eq!(RationalMap::compose(&m, &id).unwrap(), m);
    }

    #[test]
    fn derivative_examples() {
        // (x^2 + x)' = 2x + 1
        let m = RationalMap::from_poly(poly(&[0, 1, 1]));
        assert_eq!(m.derivative().unwrap().num(), &poly(&[1, 2]));
        // (x^7)' = 0 in characteristic 7
        let frob = RationalMap::from_poly(Polynomial::x(f7()).pow(7));
        assert!(frob.derivative().unwrap().num().is_zero());
    }

    #[test]
    fn compose_eval_commutes() {
        let f = f7();
        let a = RationalMap::new(poly(&[1, 0, 3]), poly(&[2, 1])).unwrap();
        let b = RationalMap::new(poly(&[0, 5, 1]), poly(&[1, 0, 2])).unwrap();
        let c = RationalMap::compose(&a, &b).unwrap();
        for v in 0..7u64 {
            let direct = c.eval_proj(&ProjPoint::Finite(v));
            let nested = a.eval_proj(&b.eval_proj(&ProjPoint::Finite(v)));
            assert_eq!(direct, nested);
        }
        assert_eq!(
            c.eval_proj(&ProjPoint::Infinity),
            a.eval_proj(&b.eval_proj(&ProjPoint::Infinity))
        );
        let _ = f;
    }
}
