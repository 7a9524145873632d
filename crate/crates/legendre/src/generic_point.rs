//! Route (b) of the Lattes construction: scalar multiplication of the
//! generic point (x, y) in the function field F(x)[y]/(y^2 - f(x)).
//!
//! Points are pairs (X, Y) of reduced fractions standing for the actual
//! coordinates (X(x), Y(x) * y); odd powers of y never survive because
//! 1/y = y/f(x).

use crate::curve::LegendreCurve;
use ff_core::Field;
use poly_rat::Polynomial;

#[derive(Clone)]
struct Frac<F: Field> {
    n: Polynomial<F>,
    d: Polynomial<F>,
}

impl<F: Field> Frac<F> {
    fn reduced(n: Polynomial<F>, d: Polynomial<F>) -> Self {
        assert!(!d.is_zero(), "zero denominator in function-field arithmetic");
        if n.is_zero() {
            return Frac { d: Polynomial::one(n.field().clone()), n };
        }
        let g = n.gcd(&d);
        let (n, d) = if g.is_constant() { (n, d) } else { (n.div_exact(&g), d.div_exact(&g)) };
        let lc = d.leading_coeff().unwrap().clone();
        if d.field().is_one(&lc) {
            Frac { n, d }
        } else {
            let ci = d.field().inv(&lc).unwrap();
            Frac { n: n.scale(&ci), d: d.scale(&ci) }
        }
    }

    fn from_poly(p: Polynomial<F>) -> Self {
        let one = Polynomial::one(p.field().clone());
        Frac { n: p, d: one }
    }

    fn is_zero(&self) -> bool {
        self.n.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        Self::reduced(self.n.mul(&o.d).add(&o.n.mul(&self.d)), self.d.mul(&o.d))
    }

    fn sub(&self, o: &Self) -> Self {
        Self::reduced(self.n.mul(&o.d).sub(&o.n.mul(&self.d)), self.d.mul(&o.d))
    }

    fn mul(&self, o: &Self) -> Self {
        Self::reduced(self.n.mul(&o.n), self.d.mul(&o.d))
    }

    fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by the zero function");
        Self::reduced(self.n.mul(&o.d), self.d.mul(&o.n))
    }

    fn mul_poly(&self, p: &Polynomial<F>) -> Self {
        Self::reduced(self.n.mul(p), self.d.clone())
    }
}

type FnPoint<F> = Option<(Frac<F>, Frac<F>)>;

struct FunctionFieldArith<F: Field> {
    field: F,
    a2: F::Elem,
    a4: F::Elem,
    f: Polynomial<F>,
}

impl<F: Field> FunctionFieldArith<F> {
    fn slope_chain(&self, s: &Frac<F>, x1: &Frac<F>, x2: &Frac<F>, y1: &Frac<F>) -> (Frac<F>, Frac<F>) {
        // x3 = f s^2 - a2 - x1 - x2 (the true slope is s*y and y^2 = f)
        let field = &self.field;
        let s2f = s.mul(s).mul_poly(&self.f);
        let a2c = Frac::from_poly(Polynomial::constant(field.clone(), field.neg(&self.a2)));
        let x3 = s2f.add(&a2c).sub(x1).sub(x2);
        let y3 = s.mul(&x1.sub(&x3)).sub(y1);
        (x3, y3)
    }

    fn double(&self, p: &FnPoint<F>) -> FnPoint<F> {
        let (x, y) = p.as_ref()?;
        if y.is_zero() {
            return None;
        }
        let field = &self.field;
        // s = (3x^2 + 2 a2 x + a4) / (2 f y); the true slope is s*y
        let three_x2 = x.mul(x).mul_poly(&Polynomial::constant(field.clone(), field.from_int(3)));
        let two_a2_x =
            x.mul_poly(&Polynomial::constant(field.clone(), field.mul(&field.from_int(2), &self.a2)));
        let a4c = Frac::from_poly(Polynomial::constant(field.clone(), self.a4.clone()));
        let numer = three_x2.add(&two_a2_x).add(&a4c);
        let denom = y
            .mul_poly(&self.f)
            .mul_poly(&Polynomial::constant(field.clone(), field.from_int(2)));
        let s = numer.div(&denom);
        Some(self.slope_chain(&s, x, x, y))
    }

    fn add(&self, p: &FnPoint<F>, q: &FnPoint<F>) -> FnPoint<F> {
        let (x1, y1) = match p.as_ref() {
            None => return q.clone(),
            Some(t) => t,
        };
        let (x2, y2) = match q.as_ref() {
            None => return p.clone(),
            Some(t) => t,
        };
        let dx = x2.sub(x1);
        if dx.is_zero() {
            if y1.sub(y2).is_zero() {
                return self.double(p);
            }
            return None;
        }
        let s = y2.sub(y1).div(&dx);
        let (x3, y3) = self.slope_chain(&s, x1, x2, y1);
        Some((x3, y3))
    }
}

/// The x-coordinate map of [n] computed by generic-point double-and-add;
/// returns the reduced fraction (numerator, denominator). Independent of the
/// division-polynomial recursion.
pub fn generic_x_map_raw<F: Field>(
    curve: &LegendreCurve<F>,
    n: u64,
) -> (Polynomial<F>, Polynomial<F>) {
    assert!(n >= 1);
    let field = curve.field().clone();
    let arith = FunctionFieldArith {
        field: field.clone(),
        a2: curve.a2(),
        a4: curve.a4(),
        f: {
            let lam = curve.lambda().clone();
            Polynomial::new(
                field.clone(),
                vec![field.zero(), lam, curve.a2(), field.one()],
            )
        },
    };
    let base: FnPoint<F> = Some((
        Frac::from_poly(Polynomial::x(field.clone())),
        Frac::from_poly(Polynomial::one(field.clone())),
    ));
    let mut acc: FnPoint<F> = None;
    let bits = 64 - n.leading_zeros();
    for i in (0..bits).rev() {
        acc = arith.double(&acc);
        if (n >> i) & 1 == 1 {
            acc = arith.add(&acc, &base);
        }
    }
    let (x, _) = acc.expect("[n] of the generic point is never the identity");
    (x.n, x.d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ff_core::{FiniteField, PrimeField};
    use poly_rat::RationalMap;

    #[test]
    fn matches_direct_scalar_multiplication() {
        use crate::curve::CurvePoint;
        let f = PrimeField::new(13).unwrap();
        let curve = LegendreCurve::new(f, 6).unwrap();
        for n in 1..=6u64 {
            let (num, den) = generic_x_map_raw(&curve, n);
            let map = RationalMap::new(num, den).unwrap();
            for code in 0..13u64 {
                let x = f.decode(code);
                if let Some(pt) = curve.lift_x(&poly_rat::ProjPoint::Finite(x)) {
                    let mult = curve.scalar_mul(n, &pt);
                    let via_map = map.eval_proj(&poly_rat::ProjPoint::Finite(x));
                    let direct = match mult {
                        CurvePoint::Identity => poly_rat::ProjPoint::Infinity,
                        CurvePoint::Affine(xx, _) => poly_rat::ProjPoint::Finite(xx),
                    };
                    assert_eq!(via_map, direct, "n = {}, x = {}", n, x);
                }
            }
        }
    }
}
