//! Dense univariate polynomials over an exact field.

use ff_core::Field;

/// A polynomial with low-to-high coefficients and no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Self {
        let mut p = Polynomial { field, coeffs };
        p.trim();
        p
    }

    pub fn zero(field: F) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let c = field.one();
        Polynomial { field, coeffs: vec![c] }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The identity monomial x.
    pub fn x(field: F) -> Self {
        let coeffs = vec![field.zero(), field.one()];
        Polynomial { field, coeffs }
    }

    /// c * x^k.
    pub fn monomial(field: F, c: F::Elem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> F::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    fn trim(&mut self) {
        while let Some(c) = self.coeffs.last() {
            if self.field.is_zero(c) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
                let b = other.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
                f.add(&a, &b)
            })
            .collect();
        Self::new(self.field.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Polynomial { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let coeffs = self.field.poly_mul(&self.coeffs, &other.coeffs);
        Self::new(self.field.clone(), coeffs)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Self::new(self.field.clone(), coeffs)
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { field: self.field.clone(), coeffs }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.field.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division; panics if `other` is zero.
    pub fn divrem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "division by zero polynomial");
        let f = &self.field;
        if self.coeffs.len() < other.coeffs.len() {
            return (Self::zero(self.field.clone()), self.clone());
        }
        let lead_inv = f.inv(other.leading_coeff().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len() - other.coeffs.len() + 1;
        let mut q = vec![f.zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + other.coeffs.len() - 1].clone();
            if f.is_zero(&top) {
                continue;
            }
            let c = f.mul(&top, &lead_inv);
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, b));
            }
            q[k] = c;
        }
        (
            Self::new(self.field.clone(), q),
            Self::new(self.field.clone(), rem),
        )
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.divrem(other);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd; gcd(f, 0) is the monic multiple of f.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            // normalizing each remainder keeps coefficient growth down over
            // fraction fields
            let r = a.divrem(&b).1.monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.field.is_one(lc) => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).unwrap()),
        }
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_int(i as i64)))
            .collect();
        Self::new(self.field.clone(), coeffs)
    }

    /// Substitutes another polynomial for x.
    pub fn compose_poly(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            acc = acc.add(&Self::constant(self.field.clone(), c.clone()));
        }
        acc
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(field: F, points: &[(F::Elem, F::Elem)]) -> Self {
        let mut full = Self::one(field.clone());
        for (x, _) in points {
            let lin = Self::new(field.clone(), vec![field.neg(x), field.one()]);
            full = full.mul(&lin);
        }
        let mut out = Self::zero(field.clone());
        for (x, y) in points {
            if field.is_zero(y) {
                continue;
            }
            let lin = Self::new(field.clone(), vec![field.neg(x), field.one()]);
            let basis = full.div_exact(&lin);
            let denom = basis.eval(x);
            let c = field.mul(y, &field.inv(&denom).expect("distinct interpolation nodes"));
            out = out.add(&basis.scale(&c));
        }
        out
    }
}
