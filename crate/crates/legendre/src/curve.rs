//! The Legendre curve y^2 = x(x-1)(x-lambda) and its group law.

use ff_core::{sqrt_in_field, Field, FiniteField, QuadExt};
use poly_rat::ProjPoint;
use std::fmt;

/// Errors from curve construction and desk-scale caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    /// lambda in {0, 1}: the cubic degenerates.
    BadLambda,
    /// The point does not satisfy the curve equation.
    NotOnCurve,
    /// Exhaustive operations are capped at q <= 10^6.
    FieldTooLarge(u64),
    /// Characteristic mismatch or unsupported prime.
    BadField,
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::BadLambda => write!(f, "lambda must avoid 0 and 1"),
            CurveError::NotOnCurve => write!(f, "point fails the curve equation"),
            CurveError::FieldTooLarge(q) => write!(f, "field order {} above the desk cap", q),
            CurveError::BadField => write!(f, "coefficient field is unsuitable"),
        }
    }
}

impl std::error::Error for CurveError {}

pub const ENUMERATION_CAP: u64 = 1_000_000;

/// A point on the curve: the identity O or an affine pair.
#[derive(Debug, Clone, PartialEq)]
pub enum CurvePoint<F: Field> {
    Identity,
    Affine(F::Elem, F::Elem),
}

impl<F: Field> CurvePoint<F> {
    pub fn is_identity(&self) -> bool {
        matches!(self, CurvePoint::Identity)
    }

    pub fn x(&self) -> Option<&F::Elem> {
        match self {
            CurvePoint::Identity => None,
            CurvePoint::Affine(x, _) => Some(x),
        }
    }

    /// Image under the double cover to P^1 (O goes to infinity).
    pub fn to_proj(&self) -> ProjPoint<F::Elem> {
        match self {
            CurvePoint::Identity => ProjPoint::Infinity,
            CurvePoint::Affine(x, _) => ProjPoint::Finite(x.clone()),
        }
    }
}

/// y^2 = x(x-1)(x-lambda) = x^3 - (1+lambda)x^2 + lambda x.
#[derive(Debug, Clone, PartialEq)]
pub struct LegendreCurve<F: Field> {
    pub(crate) field: F,
    pub(crate) lambda: F::Elem,
}

impl<F: Field> LegendreCurve<F> {
    pub fn new(field: F, lambda: F::Elem) -> Result<Self, CurveError> {
        if field.is_zero(&lambda) || field.is_one(&lambda) {
            return Err(CurveError::BadLambda);
        }
        Ok(LegendreCurve { field, lambda })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn lambda(&self) -> &F::Elem {
        &self.lambda
    }

    /// a2 = -(1 + lambda) in the short Weierstrass expansion.
    pub fn a2(&self) -> F::Elem {
        self.field.neg(&self.field.add(&self.field.one(), &self.lambda))
    }

    /// a4 = lambda.
    pub fn a4(&self) -> F::Elem {
        self.lambda.clone()
    }

    /// Right-hand side x(x-1)(x-lambda).
    pub fn rhs(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        let t1 = f.sub(x, &f.one());
        let t2 = f.sub(x, &self.lambda);
        f.mul(x, &f.mul(&t1, &t2))
    }

    /// 3x^2 + 2 a2 x + a4, the derivative of the right-hand side.
    fn rhs_derivative(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        let three_x2 = f.mul(&f.from_int(3), &f.mul(x, x));
        let two_a2_x = f.mul(&f.from_int(2), &f.mul(&self.a2(), x));
        f.add(&f.add(&three_x2, &two_a2_x), &self.a4())
    }

    /// Validated affine point.
    pub fn point(&self, x: F::Elem, y: F::Elem) -> Result<CurvePoint<F>, CurveError> {
        if self.field.mul(&y, &y) == self.rhs(&x) {
            Ok(CurvePoint::Affine(x, y))
        } else {
            Err(CurveError::NotOnCurve)
        }
    }

    pub fn neg(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        match p {
            CurvePoint::Identity => CurvePoint::Identity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), self.field.neg(y)),
        }
    }

    /// Chord-tangent group law with identity O.
    pub fn add(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        let f = &self.field;
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Identity, _) => return q.clone(),
            (_, CurvePoint::Identity) => return p.clone(),
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if *y1 != *y2 || f.is_zero(y1) {
                return CurvePoint::Identity;
            }
            // tangent
            let denom = f.mul(&f.from_int(2), y1);
            f.mul(&self.rhs_derivative(x1), &f.inv(&denom).unwrap())
        } else {
            let dx = f.sub(x2, x1);
            f.mul(&f.sub(y2, y1), &f.inv(&dx).unwrap())
        };
        let x3 = f.sub(&f.sub(&f.mul(&slope, &slope), &self.a2()), &f.add(x1, x2));
        let y3 = f.sub(&f.mul(&slope, &f.sub(x1, &x3)), y1);
        CurvePoint::Affine(x3, y3)
    }

    /// [n]P by double-and-add; [0]P = O.
    pub fn scalar_mul(&self, n: u64, p: &CurvePoint<F>) -> CurvePoint<F> {
        let mut acc = CurvePoint::Identity;
        if n == 0 {
            return acc;
        }
        let bits = 64 - n.leading_zeros();
        for i in (0..bits).rev() {
            acc = self.add(&acc, &acc);
            if (n >> i) & 1 == 1 {
                acc = self.add(&acc, p);
            }
        }
        acc
    }

    /// x([n]P) for any point P over the algebraic closure with x(P) = z.
    ///
    /// Well defined because the two lifts are negatives of each other. For a
    /// non-square right-hand side the computation runs on the quadratic
    /// twist r Y^2 = f(x) with r = f(z) and the implicit point (z, 1), which
    /// has the same x-arithmetic; no square roots are ever taken, so this
    /// works over any coefficient field including F_p(lambda).
    pub fn x_after_mul(&self, n: u64, z: &ProjPoint<F::Elem>) -> ProjPoint<F::Elem> {
        let f = &self.field;
        let z = match z {
            ProjPoint::Infinity => return ProjPoint::Infinity,
            ProjPoint::Finite(v) => v,
        };
        let r = self.rhs(z);
        if f.is_zero(&r) {
            // z is a ramification point: (z, 0) is 2-torsion
            return if n % 2 == 0 {
                ProjPoint::Infinity
            } else {
                ProjPoint::Finite(z.clone())
            };
        }
        // points (x, Y) stand for (x, Y sqrt(r)) on the curve
        let mut acc: Option<(F::Elem, F::Elem)> = None;
        let base = (z.clone(), f.one());
        if n == 0 {
            return ProjPoint::Infinity;
        }
        let bits = 64 - n.leading_zeros();
        for i in (0..bits).rev() {
            acc = self.twisted_double(&r, acc.as_ref());
            if (n >> i) & 1 == 1 {
                acc = self.twisted_add(&r, acc.as_ref(), &base);
            }
        }
        match acc {
            None => ProjPoint::Infinity,
            Some((x, _)) => ProjPoint::Finite(x),
        }
    }

    fn twisted_double(
        &self,
        r: &F::Elem,
        p: Option<&(F::Elem, F::Elem)>,
    ) -> Option<(F::Elem, F::Elem)> {
        let f = &self.field;
        let (x, y) = p?;
        if f.is_zero(y) {
            return None;
        }
        let denom = f.mul(&f.from_int(2), &f.mul(r, y));
        let s = f.mul(&self.rhs_derivative(x), &f.inv(&denom).unwrap());
        let rs2 = f.mul(r, &f.mul(&s, &s));
        let x3 = f.sub(&f.sub(&rs2, &self.a2()), &f.add(x, x));
        let y3 = f.sub(&f.mul(&s, &f.sub(x, &x3)), y);
        Some((x3, y3))
    }

    /// x([n]P) for a whole batch of base points at once, with all ladder
    /// inversions shared through Montgomery's trick. Exceptional points
    /// (accumulator collides with the base) fall back to the scalar path;
    /// results agree with `x_after_mul` everywhere.
    pub fn x_after_mul_batch(
        &self,
        n: u64,
        zs: &[ProjPoint<F::Elem>],
    ) -> Vec<ProjPoint<F::Elem>> {
        #[derive(Clone)]
        enum St<E> {
            Done(ProjPoint<E>),
            O,
            Pt(E, E),
        }
        let f = &self.field;
        if n == 0 {
            return zs.iter().map(|_| ProjPoint::Infinity).collect();
        }
        let mut twist: Vec<F::Elem> = Vec::with_capacity(zs.len());
        let mut base: Vec<(F::Elem, F::Elem)> = Vec::with_capacity(zs.len());
        let mut state: Vec<St<F::Elem>> = zs
            .iter()
            .map(|z| match z {
                ProjPoint::Infinity => {
                    twist.push(f.one());
                    base.push((f.zero(), f.zero()));
                    St::Done(ProjPoint::Infinity)
                }
                ProjPoint::Finite(v) => {
                    let r = self.rhs(v);
                    if f.is_zero(&r) {
                        twist.push(f.one());
                        base.push((f.zero(), f.zero()));
                        St::Done(if n % 2 == 0 {
                            ProjPoint::Infinity
                        } else {
                            ProjPoint::Finite(v.clone())
                        })
                    } else {
                        twist.push(r);
                        base.push((v.clone(), f.one()));
                        St::O
                    }
                }
            })
            .collect();
        let two = f.from_int(2);
        let bits = 64 - n.leading_zeros();
        for step in (0..bits).rev() {
            // doubling pass: denominators 2 r Y for live points
            let denoms: Vec<F::Elem> = state
                .iter()
                .enumerate()
                .map(|(i, s)| match s {
                    St::Pt(_, y) => f.mul(&two, &f.mul(&twist[i], y)),
                    _ => f.zero(),
                })
                .collect();
            let invs = ff_core::batch_invert(f, &denoms);
            for (i, s) in state.iter_mut().enumerate() {
                if let St::Pt(x, y) = s {
                    match &invs[i] {
                        None => *s = St::O, // Y = 0: 2-torsion doubles to O
                        Some(di) => {
                            let slope = f.mul(&self.rhs_derivative(x), di);
                            let rs2 = f.mul(&twist[i], &f.mul(&slope, &slope));
                            let x3 = f.sub(&f.sub(&rs2, &self.a2()), &f.add(x, x));
                            let y3 = f.sub(&f.mul(&slope, &f.sub(x, &x3)), &*y);
                            *s = St::Pt(x3, y3);
                        }
                    }
                }
            }
            if (n >> step) & 1 == 1 {
                // addition pass: denominators x_base - x_acc
                let denoms: Vec<F::Elem> = state
                    .iter()
                    .enumerate()
                    .map(|(i, s)| match s {
                        St::Pt(x, _) => f.sub(&base[i].0, x),
                        _ => f.zero(),
                    })
                    .collect();
                let invs = ff_core::batch_invert(f, &denoms);
                for (i, s) in state.iter_mut().enumerate() {
                    match s {
                        St::Done(_) => {}
                        St::O => *s = St::Pt(base[i].0.clone(), base[i].1.clone()),
                        St::Pt(x, y) => match &invs[i] {
                            Some(di) => {
                                let slope = f.mul(&f.sub(&base[i].1, y), di);
                                let rs2 = f.mul(&twist[i], &f.mul(&slope, &slope));
                                let x3 =
                                    f.sub(&f.sub(&rs2, &self.a2()), &f.add(x, &base[i].0));
                                let y3 = f.sub(&f.mul(&slope, &f.sub(x, &x3)), &*y);
                                *s = St::Pt(x3, y3);
                            }
                            None => {
                                // accumulator meets the base: rare; rerun
                                // this point through the scalar path
                                *s = St::Done(self.x_after_mul(n, &zs[i]));
                            }
                        },
                    }
                }
            }
        }
        state
            .into_iter()
            .map(|s| match s {
                St::Done(z) => z,
                St::O => ProjPoint::Infinity,
                St::Pt(x, _) => ProjPoint::Finite(x),
            })
            .collect()
    }

    fn twisted_add(
        &self,
        r: &F::Elem,
        p: Option<&(F::Elem, F::Elem)>,
        q: &(F::Elem, F::Elem),
    ) -> Option<(F::Elem, F::Elem)> {
        let f = &self.field;
        let (x1, y1) = match p {
            None => return Some(q.clone()),
            Some(t) => t,
        };
        let (x2, y2) = q;
        if x1 == x2 {
            if *y1 == *y2 {
                return self.twisted_double(r, p);
            }
            return None;
        }
        let dx = f.sub(x2, x1);
        let s = f.mul(&f.sub(y2, y1), &f.inv(&dx).unwrap());
        let rs2 = f.mul(r, &f.mul(&s, &s));
        let x3 = f.sub(&f.sub(&rs2, &self.a2()), &f.add(x1, x2));
        let y3 = f.sub(&f.mul(&s, &f.sub(x1, &x3)), y1);
        Some((x3, y3))
    }
}

impl<F: FiniteField> LegendreCurve<F> {
    /// Lifts z in P^1(F_q) to a curve point over F_q when the right-hand
    /// side is a square there, choosing the root with the smaller encoding.
    pub fn lift_x(&self, z: &ProjPoint<F::Elem>) -> Option<CurvePoint<F>> {
        match z {
            ProjPoint::Infinity => Some(CurvePoint::Identity),
            ProjPoint::Finite(x) => {
                let y = sqrt_in_field(&self.field, &self.rhs(x))?;
                Some(CurvePoint::Affine(x.clone(), y))
            }
        }
    }

    /// Lifts z over the quadratic extension, which always succeeds. Returns
    /// the extended curve together with the point.
    #[allow(clippy::type_complexity)]
    pub fn lift_x_quadratic(
        &self,
        z: &ProjPoint<F::Elem>,
    ) -> Result<(LegendreCurve<QuadExt<F>>, CurvePoint<QuadExt<F>>), CurveError> {
        let ext = QuadExt::new(self.field.clone()).map_err(|_| CurveError::FieldTooLarge(0))?;
        let lambda = ext.lift(&self.lambda);
        let curve = LegendreCurve::new(ext.clone(), lambda)?;
        let point = match z {
            ProjPoint::Infinity => CurvePoint::Identity,
            ProjPoint::Finite(x) => {
                let rhs = self.rhs(x);
                match sqrt_in_field(&self.field, &rhs) {
                    Some(y) => CurvePoint::Affine(ext.lift(x), ext.lift(&y)),
                    None => {
                        // rhs = d * (rhs/d) with both factors non-squares, so
                        // rhs/d has a root and y = root * sqrt(d)
                        let d = ext.nonresidue();
                        let quot = self.field.mul(&rhs, &self.field.inv(d).unwrap());
                        let y0 = sqrt_in_field(&self.field, &quot)
                            .expect("quotient of non-residues is a square");
                        CurvePoint::Affine(ext.lift(x), (self.field.zero(), y0))
                    }
                }
            }
        };
        Ok((curve, point))
    }
}
