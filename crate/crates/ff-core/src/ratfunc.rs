//! The rational function field F_p(lambda) with canonical reduced fractions.

use crate::fppoly;
use crate::prime::PrimeField;
use crate::{Field, FieldError};

/// A reduced fraction of F_p[lambda] polynomials: coprime, monic denominator.
/// The zero element is 0/1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    pub num: Vec<u64>,
    pub den: Vec<u64>,
}

impl RatFunc {
    pub fn is_polynomial(&self) -> bool {
        self.den == [1]
    }

    /// Degree of the numerator (None when zero).
    pub fn num_degree(&self) -> Option<usize> {
        fppoly::deg(&self.num)
    }

    pub fn den_degree(&self) -> usize {
        self.den.len() - 1
    }
}

/// The field F_p(lambda).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatFuncField {
    base: PrimeField,
}

impl RatFuncField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        Ok(RatFuncField { base: PrimeField::new(p)? })
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    /// The indeterminate lambda.
    pub fn lambda(&self) -> RatFunc {
        RatFunc { num: vec![0, 1], den: vec![1] }
    }

    /// Polynomial element from low-to-high coefficients.
    pub fn from_poly(&self, coeffs: &[u64]) -> RatFunc {
        let num = fppoly::trim(coeffs.iter().map(|c| c % self.base.modulus()).collect());
        RatFunc { num, den: vec![1] }
    }

    /// Canonical form of an arbitrary fraction (panics on zero denominator).
    pub fn fraction(&self, num: &[u64], den: &[u64]) -> RatFunc {
        assert!(!fppoly::trim(den.to_vec()).is_empty(), "zero denominator");
        self.reduce(num.to_vec(), den.to_vec())
    }

    fn reduce(&self, num: Vec<u64>, den: Vec<u64>) -> RatFunc {
        let fp = &self.base;
        let num = fppoly::trim(num);
        let den = fppoly::trim(den);
        if num.is_empty() {
            return RatFunc { num, den: vec![1] };
        }
        if den == [1] {
            return RatFunc { num, den };
        }
        let g = fppoly::gcd(fp, &num, &den);
        let (num, den) = if g.len() > 1 {
            (fppoly::divrem(fp, &num, &g).0, fppoly::divrem(fp, &den, &g).0)
        } else {
            (num, den)
        };
        let lc = *den.last().unwrap();
        if lc == 1 {
            RatFunc { num, den }
        } else {
            let ci = fp.inv(&lc).unwrap();
            RatFunc { num: fppoly::scale(fp, &num, ci), den: fppoly::scale(fp, &den, ci) }
        }
    }

    /// Evaluates at a point of any F_p-algebra, via the hom sending the
    /// canonical coefficients into the target. None when the denominator
    /// vanishes at the point.
    pub fn evaluate<G: Field>(&self, a: &RatFunc, target: &G, point: &G::Elem) -> Option<G::Elem> {
        debug_assert_eq!(target.characteristic(), self.base.modulus());
        let horner = |poly: &[u64]| {
            let mut acc = target.zero();
            for &c in poly.iter().rev() {
                acc = target.mul(&acc, point);
                acc = target.add(&acc, &target.from_int(c as i64));
            }
            acc
        };
        let dv = horner(&a.den);
        let di = target.inv(&dv)?;
        Some(target.mul(&horner(&a.num), &di))
    }
}

impl Field for RatFuncField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc { num: Vec::new(), den: vec![1] }
    }

    fn one(&self) -> RatFunc {
        RatFunc { num: vec![1], den: vec![1] }
    }

    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let fp = &self.base;
        if a.is_polynomial() && b.is_polynomial() {
            return RatFunc { num: fppoly::add(fp, &a.num, &b.num), den: vec![1] };
        }
        let num = fppoly::add(
            fp,
            &fppoly::mul(fp, &a.num, &b.den),
            &fppoly::mul(fp, &b.num, &a.den),
        );
        let den = fppoly::mul(fp, &a.den, &b.den);
        self.reduce(num, den)
    }

    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc { num: fppoly::neg(&self.base, &a.num), den: a.den.clone() }
    }

    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let fp = &self.base;
        if a.is_polynomial() && b.is_polynomial() {
            return RatFunc { num: fppoly::mul(fp, &a.num, &b.num), den: vec![1] };
        }
        // cross-reduce before multiplying to keep degrees small
        let g1 = fppoly::gcd(fp, &a.num, &b.den);
        let g2 = fppoly::gcd(fp, &b.num, &a.den);
        let (an, bd) = if g1.len() > 1 {
            (fppoly::divrem(fp, &a.num, &g1).0, fppoly::divrem(fp, &b.den, &g1).0)
        } else {
            (a.num.clone(), b.den.clone())
        };
        let (bn, ad) = if g2.len() > 1 {
            (fppoly::divrem(fp, &b.num, &g2).0, fppoly::divrem(fp, &a.den, &g2).0)
        } else {
            (b.num.clone(), a.den.clone())
        };
        let num = fppoly::mul(fp, &an, &bn);
        let den = fppoly::mul(fp, &ad, &bd);
        self.reduce(num, den)
    }

    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        if a.num.is_empty() {
            return None;
        }
        Some(self.reduce(a.den.clone(), a.num.clone()))
    }

    fn characteristic(&self) -> u64 {
        self.base.modulus()
    }

    fn from_int(&self, n: i64) -> RatFunc {
        let c = self.base.from_int(n);
        if c == 0 {
            self.zero()
        } else {
            RatFunc { num: vec![c], den: vec![1] }
        }
    }

    fn is_zero(&self, a: &RatFunc) -> bool {
        a.num.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_idempotent() {
        let k = RatFuncField::new(7).unwrap();
        // (2 lambda^2 + 2 lambda) / (4 lambda) reduces to (4 lambda + 4) / 1... check
        let a = k.fraction(&[0, 2, 2], &[0, 4]);
        let again = k.fraction(&a.num, &a.den);
        assert_eq!(a, again);
        assert!(a.is_polynomial());
        // (lambda + 1)/2 = 4 lambda + 4 since 1/2 = 4 mod 7
        assert_eq!(a.num, vec![4, 4]);
    }

    #[test]
    fn field_ops() {
        let k = RatFuncField::new(5).unwrap();
        let l = k.lambda();
        let a = k.fraction(&[1, 1], &[0, 1]); // (l+1)/l
        let ai = k.inv(&a).unwrap();
        assert!(k.is_one(&k.mul(&a, &ai)));
        let s = k.add(&a, &l);
        // (l+1)/l + l = (l^2 + l + 1)/l
        assert_eq!(s.num, vec![1, 1, 1]);
        assert_eq!(s.den, vec![0, 1]);
        assert_eq!(k.inv(&k.zero()), None);
    }

    #[test]
    fn evaluate_into_prime_field() {
        let k = RatFuncField::new(5).unwrap();
        let f5 = PrimeField::new(5).unwrap();
        let a = k.fraction(&[1, 1], &[0, 1]); // (l+1)/l
        assert_eq!(k.evaluate(&a, &f5, &2), Some(f5.mul(&3, &f5.inv(&2).unwrap())));
        assert_eq!(k.evaluate(&a, &f5, &0), None);
    }
}
