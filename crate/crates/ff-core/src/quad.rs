//! The quadratic extension F_{q^2} = F_q(sqrt(d)) of a finite field,
//! built on a fixed non-residue d. Used to lift x-coordinates whose
//! curve equation right-hand side is a non-square.

use crate::sqrt::legendre_symbol_is_square;
use crate::{Field, FieldError, FiniteField};

/// F_{q^2} as pairs (a, b) = a + b*sqrt(d) over the base field.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadExt<F: FiniteField> {
    base: F,
    nonresidue: F::Elem,
    order: u64,
}

impl<F: FiniteField> QuadExt<F> {
    /// Extends by the square root of the smallest-encoding non-residue.
    pub fn new(base: F) -> Result<Self, FieldError> {
        let order = base
            .order()
            .checked_mul(base.order())
            .ok_or(FieldError::OrderOverflow)?;
        let mut nonresidue = None;
        for code in 2..base.order() {
            let cand = base.decode(code);
            if !base.is_zero(&cand) && !legendre_symbol_is_square(&base, &cand) {
                nonresidue = Some(cand);
                break;
            }
        }
        let nonresidue = nonresidue.ok_or(FieldError::BadModulus)?;
        Ok(QuadExt { base, nonresidue, order })
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn nonresidue(&self) -> &F::Elem {
        &self.nonresidue
    }

    /// Embeds a base-field element as (a, 0).
    pub fn lift(&self, a: &F::Elem) -> (F::Elem, F::Elem) {
        (a.clone(), self.base.zero())
    }

    /// Projects (a, 0) back to the base field; None if the sqrt(d) part is nonzero.
    pub fn project(&self, a: &(F::Elem, F::Elem)) -> Option<F::Elem> {
        if self.base.is_zero(&a.1) {
            Some(a.0.clone())
        } else {
            None
        }
    }
}

impl<F: FiniteField> Field for QuadExt<F> {
    type Elem = (F::Elem, F::Elem);

    fn zero(&self) -> Self::Elem {
        (self.base.zero(), self.base.zero())
    }

    fn one(&self) -> Self::Elem {
        (self.base.one(), self.base.zero())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.add(&a.0, &b.0), self.base.add(&a.1, &b.1))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.sub(&a.0, &b.0), self.base.sub(&a.1, &b.1))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.base.neg(&a.0), self.base.neg(&a.1))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        // (a0 + a1 s)(b0 + b1 s) = a0 b0 + d a1 b1 + (a0 b1 + a1 b0) s
        let f = &self.base;
        let re = f.add(&f.mul(&a.0, &b.0), &f.mul(&self.nonresidue, &f.mul(&a.1, &b.1)));
        let im = f.add(&f.mul(&a.0, &b.1), &f.mul(&a.1, &b.0));
        (re, im)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let f = &self.base;
        // norm = a0^2 - d a1^2, nonzero unless a = 0 since d is a non-residue
        let norm = f.sub(
            &f.mul(&a.0, &a.0),
            &f.mul(&self.nonresidue, &f.mul(&a.1, &a.1)),
        );
        let ni = f.inv(&norm)?;
        Some((f.mul(&a.0, &ni), f.neg(&f.mul(&a.1, &ni))))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        (self.base.from_int(n), self.base.zero())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.0) && self.base.is_zero(&a.1)
    }
}

impl<F: FiniteField> FiniteField for QuadExt<F> {
    fn prime(&self) -> u64 {
        self.base.prime()
    }

    fn ext_degree(&self) -> u32 {
        2 * self.base.ext_degree()
    }

    fn order(&self) -> u64 {
        self.order
    }

    fn encode(&self, a: &Self::Elem) -> u64 {
        self.base.encode(&a.0) + self.base.order() * self.base.encode(&a.1)
    }

    fn decode(&self, code: u64) -> Self::Elem {
        let q = self.base.order();
        let c = code % self.order;
        (self.base.decode(c % q), self.base.decode(c / q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prime::PrimeField;

    #[test]
    fn f25_from_f5() {
        let f5 = PrimeField::new(5).unwrap();
        let k = QuadExt::new(f5).unwrap();
        assert_eq!(k.order(), 25);
        // 2 is the smallest non-residue mod 5
        assert_eq!(*k.nonresidue(), 2);
        let s = (0u64, 1u64); // sqrt(2)
        assert_eq!(k.mul(&s, &s), (2, 0));
        for code in 1..25 {
            let a = k.decode(code);
            let ai = k.inv(&a).unwrap();
            assert!(k.is_one(&k.mul(&a, &ai)));
        }
    }
}
