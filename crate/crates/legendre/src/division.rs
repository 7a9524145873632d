//! Division polynomials for the Legendre model and the multiplication-by-n
//! x-coordinate map they induce (route (a) of the Lattes construction).
//!
//! psi_n is stored through its x-part P_n, with psi_n = P_n for odd n and
//! psi_n = y P_n for even n; powers of y^2 are eliminated through
//! f = x^3 - (1+lambda) x^2 + lambda x.

use crate::curve::{CurveError, LegendreCurve};
use ff_core::Field;
use poly_rat::{MapError, Polynomial, RationalMap};

pub struct DivisionPolys<F: Field> {
    field: F,
    /// f(x), the curve right-hand side.
    pub f: Polynomial<F>,
    cache: Vec<Option<Polynomial<F>>>,
}

impl<F: Field> DivisionPolys<F> {
    pub fn new(curve: &LegendreCurve<F>) -> Self {
        let field = curve.field().clone();
        let lam = curve.lambda().clone();
        let one = field.one();
        let a2 = curve.a2();
        // f = x^3 + a2 x^2 + lambda x
        let f = Polynomial::new(
            field.clone(),
            vec![field.zero(), lam.clone(), a2.clone(), one.clone()],
        );
        let i = |n: i64| field.from_int(n);
        let m = |a: &F::Elem, b: &F::Elem| field.mul(a, b);
        // b-invariants for a1 = a3 = a6 = 0: b2 = 4 a2, b4 = 2 a4, b6 = 0,
        // b8 = -a4^2
        let b2 = m(&i(4), &a2);
        let b4 = m(&i(2), &lam);
        let b8 = field.neg(&m(&lam, &lam));
        // P3 = 3x^4 + b2 x^3 + 3 b4 x^2 + b8
        let p3 = Polynomial::new(
            field.clone(),
            vec![b8.clone(), field.zero(), m(&i(3), &b4), b2.clone(), i(3)],
        );
        // P4 = 2 (2x^6 + b2 x^5 + 5 b4 x^4 + 10 b8 x^2 + b2 b8 x + b4 b8)
        let p4 = Polynomial::new(
            field.clone(),
            vec![
                m(&b4, &b8),
                m(&b2, &b8),
                m(&i(10), &b8),
                field.zero(),
                m(&i(5), &b4),
                b2.clone(),
                i(2),
            ],
        )
        .scale(&i(2));
        let mut cache = vec![None; 5];
        cache[0] = Some(Polynomial::zero(field.clone()));
        cache[1] = Some(Polynomial::one(field.clone()));
        cache[2] = Some(Polynomial::constant(field.clone(), i(2)));
        cache[3] = Some(p3);
        cache[4] = Some(p4);
        DivisionPolys { field, f, cache }
    }

    /// The x-part P_n of the n-th division polynomial.
    pub fn psi_part(&mut self, n: usize) -> Polynomial<F> {
        if n < self.cache.len() {
            if let Some(p) = &self.cache[n] {
                return p.clone();
            }
        }
        if self.cache.len() <= n {
            self.cache.resize(n + 1, None);
        }
        let value = if n % 2 == 1 {
            let t = (n - 1) / 2;
            let a = self.psi_part(t + 2).mul(&self.psi_part(t).pow(3));
            let b = self.psi_part(t - 1).mul(&self.psi_part(t + 1).pow(3));
            let f2 = self.f.mul(&self.f);
            if t % 2 == 0 {
                f2.mul(&a).sub(&b)
            } else {
                a.sub(&f2.mul(&b))
            }
        } else {
            let t = n / 2;
            let inner = self
                .psi_part(t + 2)
                .mul(&self.psi_part(t - 1).pow(2))
                .sub(&self.psi_part(t - 2).mul(&self.psi_part(t + 1).pow(2)));
            let half = self.field.inv(&self.field.from_int(2)).unwrap();
            self.psi_part(t).mul(&inner).scale(&half)
        };
        self.cache[n] = Some(value.clone());
        value
    }

    /// Unreduced numerator and denominator of the x-coordinate map of [n]:
    /// x_n = x - psi_{n-1} psi_{n+1} / psi_n^2, with y^2 eliminated.
    pub fn x_map_raw(&mut self, n: usize) -> (Polynomial<F>, Polynomial<F>) {
        assert!(n >= 1);
        let x = Polynomial::x(self.field.clone());
        let pn2 = self.psi_part(n).pow(2);
        let side = self.psi_part(n - 1).mul(&self.psi_part(n + 1));
        if n % 2 == 1 {
            // psi_{n +- 1} both carry a factor y
            let num = x.mul(&pn2).sub(&self.f.mul(&side));
            (num, pn2)
        } else {
            let den = self.f.mul(&pn2);
            let num = x.mul(&den).sub(&side);
            (num, den)
        }
    }
}

/// The validated multiplication-by-n data of the spec: the division
/// polynomial and the reduced x-map of degree exactly n^2.
pub struct DivisionData<F: Field> {
    pub n: u64,
    pub psi: Polynomial<F>,
    pub x_map: RationalMap<F>,
}

/// Reduced x-map of [n] via a full gcd (fine over finite fields; symbolic
/// callers go through `lattes::multiplication_x_map_symbolic`).
pub fn division_data<F: Field>(
    curve: &LegendreCurve<F>,
    n: u64,
) -> Result<DivisionData<F>, CurveError> {
    let mut dp = DivisionPolys::new(curve);
    let (num, den) = dp.x_map_raw(n as usize);
    let x_map = RationalMap::new(num, den).map_err(|e| match e {
        MapError::DegenerateMap => CurveError::BadLambda,
        MapError::PoleAtPoint => CurveError::BadField,
    })?;
    Ok(DivisionData { n, psi: dp.psi_part(n as usize), x_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ff_core::PrimeField;

    #[test]
    fn doubling_map_closed_form() {
        // x_2 = (x^2 - lambda)^2 / (4 x (x-1) (x-lambda)) over F_13, lambda = 5
        let f13 = PrimeField::new(13).unwrap();
        let curve = LegendreCurve::new(f13, 5).unwrap();
        let data = division_data(&curve, 2).unwrap();
        let x = Polynomial::x(f13);
        let lam = Polynomial::constant(f13, 5);
        let num = x.mul(&x).sub(&lam).pow(2);
        let den = DivisionPolys::new(&curve).f.scale(&4);
        let expected = RationalMap::new(num, den).unwrap();
        assert_eq!(data.x_map, expected);
        assert_eq!(data.x_map.degree(), 4);
    }
}
