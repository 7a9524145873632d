//! Construction of phi_{lambda,p} from the Hankel determinant closed form.
//!
//! With m = (p-1)/2 and a_k(w) = (lambda^p (1-w) - (lambda^p - w) lambda^k)/k
//! for k = 1, ..., p-1, the map is
//!
//!   phi-tilde(w) = (w / lambda^{p-1}) * (f(w) / g(w))^2,
//!   phi(z)       = phi-tilde(z^p),
//!
//! where f is the m x m Hankel determinant with entry (i,j) = a_{i+j} and g
//! the one with entry (i,j) = a_{i+j-1}. Every entry factors as
//! a_k = (1-lambda) lambda^k b_k with
//!
//!   b_k(w) = (lambda^{p-k} s_k + w s_{p-k}) / k,   s_j = 1 + ... + lambda^{j-1},
//!
//! and pulling the row/column factors out of both determinants cancels the
//! powers of (1-lambda) and lambda together with the lambda^{p-1} prefactor:
//! phi-tilde(w) = w (det B_f / det B_g)^2. The construction uses the reduced
//! entries; tests pin it against the raw formula.

use crate::FlowError;
use ff_core::{is_prime_u64, Field, RatFuncField};
use poly_rat::{canonicalize_symbolic, hankel_det, HankelSpec, Polynomial, ProjPoint, RationalMap};

/// The self-map of P^1 attached to (p, lambda): phi of degree p^2 in z and
/// its inseparability quotient phi-tilde of degree p, with
/// phi(z) = phi-tilde(z^p) identically.
#[derive(Debug, Clone)]
pub struct SelfMap<F: Field> {
    pub p: u64,
    pub field: F,
    pub lambda: F::Elem,
    pub phi: RationalMap<F>,
    pub phi_tilde: RationalMap<F>,
}

impl<F: Field> SelfMap<F> {
    /// One application of phi, evaluated as phi-tilde(z^p).
    pub fn apply(&self, z: &ProjPoint<F::Elem>) -> ProjPoint<F::Elem> {
        match z {
            ProjPoint::Infinity => self.phi_tilde.eval_proj(&ProjPoint::Infinity),
            ProjPoint::Finite(v) => self
                .phi_tilde
                .eval_proj(&ProjPoint::Finite(self.field.pow(v, self.p))),
        }
    }

    /// phi^f(z) by plain repeated application; f = 0 is the identity.
    pub fn iterate(&self, z: &ProjPoint<F::Elem>, f: u64) -> ProjPoint<F::Elem> {
        let mut out = z.clone();
        for _ in 0..f {
            out = self.apply(&out);
        }
        out
    }
}

fn validate<F: Field>(p: u64, field: &F, lambda: &F::Elem) -> Result<(), FlowError> {
    if p < 3 || !is_prime_u64(p) {
        return Err(FlowError::BadPrime(p));
    }
    if field.characteristic() != p {
        return Err(FlowError::CharMismatch { p, char_of_field: field.characteristic() });
    }
    if field.is_zero(lambda) || field.is_one(lambda) {
        return Err(FlowError::BadLambda);
    }
    Ok(())
}

/// The reduced Hankel entries b_1, ..., b_{p-1} as degree-1 polynomials in w.
fn reduced_entries<F: Field>(p: u64, field: &F, lambda: &F::Elem) -> Vec<Polynomial<F>> {
    let n = p as usize;
    // lambda powers and the geometric partial sums s_j
    let mut pow = Vec::with_capacity(n + 1);
    let mut s = Vec::with_capacity(n + 1);
    let mut acc = field.one();
    let mut sum = field.zero();
    for _ in 0..=n {
        pow.push(acc.clone());
        s.push(sum.clone());
        sum = field.add(&sum, &acc);
        acc = field.mul(&acc, lambda);
    }
    (1..n)
        .map(|k| {
            let ki = field.inv(&field.from_int(k as i64)).unwrap();
            let c0 = field.mul(&field.mul(&pow[n - k], &s[k]), &ki);
            let c1 = field.mul(&s[n - k], &ki);
            Polynomial::new(field.clone(), vec![c0, c1])
        })
        .collect()
}

/// The two determinants (det B_f, det B_g).
fn determinant_pair<F: Field>(
    p: u64,
    field: &F,
    lambda: &F::Elem,
) -> Result<(Polynomial<F>, Polynomial<F>), FlowError> {
    let m = ((p - 1) / 2) as usize;
    let b = reduced_entries(p, field, lambda);
    // f-matrix: entries a_{i+j}, i.e. b[1..=2m-1] (k = 2..=2m)
    let f_entries: Vec<_> = b[1..2 * m].to_vec();
    // g-matrix: entries a_{i+j-1}, i.e. b[0..=2m-2] (k = 1..=2m-1)
    let g_entries: Vec<_> = b[..2 * m - 1].to_vec();
    let det_f = hankel_det(&HankelSpec::new(m, 2, f_entries));
    let det_g = hankel_det(&HankelSpec::new(m, 1, g_entries));
    if det_g.is_zero() || det_f.is_zero() {
        return Err(FlowError::Degenerate);
    }
    Ok((det_f, det_g))
}

/// Substitutes w = z^p into a polynomial in w.
fn spread_zp<F: Field>(poly: &Polynomial<F>, p: u64) -> Polynomial<F> {
    let field = poly.field().clone();
    let mut coeffs = Vec::new();
    for (k, c) in poly.coeffs().iter().enumerate() {
        let idx = k * p as usize;
        if coeffs.len() <= idx {
            coeffs.resize(idx + 1, field.zero());
        }
        coeffs[idx] = c.clone();
    }
    Polynomial::new(field, coeffs)
}

fn assemble<F: Field>(
    p: u64,
    field: &F,
    lambda: &F::Elem,
    phi_tilde: RationalMap<F>,
) -> Result<SelfMap<F>, FlowError> {
    assert_eq!(phi_tilde.degree() as u64, p, "phi-tilde degree defect");
    // phi(z) = phi-tilde(z^p); a common factor of N(z^p), D(z^p) would force
    // a common root of N, D over the closure, so coprimality is inherited.
    let num = spread_zp(phi_tilde.num(), p);
    let den = spread_zp(phi_tilde.den(), p);
    let phi = RationalMap::from_coprime(num, den).map_err(|_| FlowError::Degenerate)?;
    assert_eq!(phi.degree() as u64, p * p, "phi degree defect");
    let map = SelfMap { p, field: field.clone(), lambda: lambda.clone(), phi, phi_tilde };
    // the four punctures are fixed
    for z in [
        ProjPoint::Finite(field.zero()),
        ProjPoint::Finite(field.one()),
        ProjPoint::Finite(lambda.clone()),
        ProjPoint::Infinity,
    ] {
        assert_eq!(map.apply(&z), z, "puncture not fixed by phi");
    }
    Ok(map)
}

/// Builds the self-map over a finite coefficient field of characteristic p.
pub fn build_selfmap<F: Field>(p: u64, field: &F, lambda: &F::Elem) -> Result<SelfMap<F>, FlowError> {
    validate(p, field, lambda)?;
    let (det_f, det_g) = determinant_pair(p, field, lambda)?;
    let num = det_f.mul(&det_f).shift(1);
    let den = det_g.mul(&det_g);
    let phi_tilde = RationalMap::new(num, den).map_err(|_| FlowError::Degenerate)?;
    assemble(p, field, lambda, phi_tilde)
}

/// Builds the self-map over F_p(lambda) with the symbolic lambda,
/// canonicalizing through the coprimality certificate.
pub fn build_selfmap_symbolic(p: u64) -> Result<SelfMap<RatFuncField>, FlowError> {
    let k = RatFuncField::new(p).map_err(|_| FlowError::BadPrime(p))?;
    let lambda = k.lambda();
    validate(p, &k, &lambda)?;
    let (det_f, det_g) = determinant_pair(p, &k, &lambda)?;
    let num = det_f.mul(&det_f).shift(1);
    let den = det_g.mul(&det_g);
    let phi_tilde = canonicalize_symbolic(&k, num, den).map_err(|_| FlowError::Degenerate)?;
    assemble(p, &k, &lambda, phi_tilde)
}

/// The raw determinants of the closed form, untouched by the entry
/// normalization: f(w) with entries a_{i+j} and g(w) with entries
/// a_{i+j-1}, a_k(w) = (lambda^p (1-w) - (lambda^p - w) lambda^k)/k.
/// Exposed for the cross-validation tests.
pub fn raw_determinant_pair<F: Field>(
    p: u64,
    field: &F,
    lambda: &F::Elem,
) -> (Polynomial<F>, Polynomial<F>) {
    let n = p as usize;
    let lam_p = field.pow(lambda, p);
    let mut lam_pow = field.one();
    let mut a = Vec::with_capacity(n - 1);
    for k in 1..n {
        lam_pow = field.mul(&lam_pow, lambda);
        let ki = field.inv(&field.from_int(k as i64)).unwrap();
        // constant term: (lambda^p - lambda^p lambda^k)/k
        let c0 = field.mul(&field.sub(&lam_p, &field.mul(&lam_p, &lam_pow)), &ki);
        // w coefficient: (lambda^k - lambda^p)/k
        let c1 = field.mul(&field.sub(&lam_pow, &lam_p), &ki);
        a.push(Polynomial::new(field.clone(), vec![c0, c1]));
    }
    let m = (n - 1) / 2;
    let f_entries: Vec<_> = a[1..2 * m].to_vec();
    let g_entries: Vec<_> = a[..2 * m - 1].to_vec();
    (
        hankel_det(&HankelSpec::new(m, 2, f_entries)),
        hankel_det(&HankelSpec::new(m, 1, g_entries)),
    )
}
