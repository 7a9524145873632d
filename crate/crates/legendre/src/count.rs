//! Point counting, orders, and the supersingularity criterion.

use crate::curve::{CurveError, CurvePoint, LegendreCurve, ENUMERATION_CAP};
use ff_core::{sqrt_in_field, Field, FiniteField, PrimeField};
use poly_rat::Polynomial;

impl<F: FiniteField> LegendreCurve<F> {
    /// #C_lambda(F_q) by exhaustive x-enumeration with quadratic-character
    /// counting. Capped at q <= 10^6.
    pub fn group_order(&self) -> Result<u64, CurveError> {
        let q = self.field.order();
        if q > ENUMERATION_CAP {
            return Err(CurveError::FieldTooLarge(q));
        }
        let mut count: u64 = 1; // the identity
        let exp = (q - 1) / 2;
        for code in 0..q {
            let x = self.field.decode(code);
            let r = self.rhs(&x);
            if self.field.is_zero(&r) {
                count += 1;
            } else if self.field.is_one(&self.field.pow(&r, exp)) {
                count += 2;
            }
        }
        Ok(count)
    }

    /// Exact order of P in C_lambda(F_q).
    pub fn point_order(&self, p: &CurvePoint<F>) -> Result<u64, CurveError> {
        if p.is_identity() {
            return Ok(1);
        }
        let n = self.group_order()?;
        let mut order = n;
        for (prime, mult) in factorize(n) {
            for _ in 0..mult {
                let cand = order / prime;
                if self.scalar_mul(cand, p).is_identity() {
                    order = cand;
                } else {
                    break;
                }
            }
        }
        debug_assert!(self.scalar_mul(order, p).is_identity());
        Ok(order)
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut m = 0;
            while n % d == 0 {
                n /= d;
                m += 1;
            }
            out.push((d, m));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The Hasse polynomial H_p(lambda) = sum_i binom(m, i)^2 lambda^i with
/// m = (p-1)/2, whose roots are the supersingular lambda values.
pub fn hasse_polynomial(p: u64) -> Result<Polynomial<PrimeField>, CurveError> {
    let fp = PrimeField::new(p).map_err(|_| CurveError::BadField)?;
    let m = (p - 1) / 2;
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    let mut binom: u64 = 1;
    for i in 0..=m {
        coeffs.push(fp.mul(&binom, &binom));
        if i < m {
            // binom(m, i+1) = binom(m, i) * (m - i) / (i + 1), all below p
            binom = fp.mul(&binom, &fp.mul(&(m - i), &fp.inv(&(i + 1)).unwrap()));
        }
    }
    Ok(Polynomial::new(fp, coeffs))
}

/// Supersingularity of C_lambda over a field of characteristic p, by
/// vanishing of the Hasse polynomial at lambda.
pub fn is_supersingular<F: Field>(p: u64, field: &F, lambda: &F::Elem) -> Result<bool, CurveError> {
    if field.characteristic() != p {
        return Err(CurveError::BadField);
    }
    if field.is_zero(lambda) || field.is_one(lambda) {
        return Err(CurveError::BadLambda);
    }
    let h = hasse_polynomial(p)?;
    let mut acc = field.zero();
    for c in h.coeffs().iter().rev() {
        acc = field.mul(&acc, lambda);
        acc = field.add(&acc, &field.from_int(*c as i64));
    }
    Ok(field.is_zero(&acc))
}

/// All supersingular lambda values of characteristic p inside a given field,
/// found by exhaustive scanning (the Hasse roots all lie in F_{p^2}).
pub fn supersingular_lambdas<F: FiniteField>(p: u64, field: &F) -> Result<Vec<F::Elem>, CurveError> {
    let q = field.order();
    if q > ENUMERATION_CAP {
        return Err(CurveError::FieldTooLarge(q));
    }
    let mut out = Vec::new();
    for code in 2..q {
        let lam = field.decode(code);
        if is_supersingular(p, field, &lam)? {
            out.push(lam);
        }
    }
    Ok(out)
}

/// Counts points of y^2 = f(x) for one x by the quadratic character;
/// the brute-force oracle used in tests.
pub fn residue_points<F: FiniteField>(field: &F, rhs: &F::Elem) -> u64 {
    if field.is_zero(rhs) {
        1
    } else if sqrt_in_field(field, rhs).is_some() {
        2
    } else {
        0
    }
}
