//! F_{p^3} on stack-allocated triples, for the sampled verification sweeps
//! where millions of field operations dominate the runtime. Semantically
//! identical to the degree-3 `ExtField` with the same modulus.

use crate::ext::standard_modulus;
use crate::prime::PrimeField;
use crate::{Field, FieldError, FiniteField};

/// F_p[x]/(x^3 + c2 x^2 + c1 x + c0) with elements [a0, a1, a2].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubicField {
    p: u64,
    c0: u64,
    c1: u64,
    c2: u64,
    order: u64,
}

impl CubicField {
    /// Uses the deterministic standard modulus of degree 3. The prime is
    /// capped so that unreduced convolution sums stay far from overflow.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        PrimeField::new(p)?;
        if p >= (1 << 20) {
            return Err(FieldError::OrderOverflow);
        }
        let m = standard_modulus(p, 3)?;
        Ok(CubicField { p, c0: m[0], c1: m[1], c2: m[2], order: p * p * p })
    }

    pub fn modulus(&self) -> [u64; 4] {
        [self.c0, self.c1, self.c2, 1]
    }
}

impl Field for CubicField {
    type Elem = [u64; 3];

    fn zero(&self) -> [u64; 3] {
        [0, 0, 0]
    }

    fn one(&self) -> [u64; 3] {
        [1, 0, 0]
    }

    fn add(&self, a: &[u64; 3], b: &[u64; 3]) -> [u64; 3] {
        let p = self.p;
        let r = |x: u64| if x >= p { x - p } else { x };
        [r(a[0] + b[0]), r(a[1] + b[1]), r(a[2] + b[2])]
    }

    fn sub(&self, a: &[u64; 3], b: &[u64; 3]) -> [u64; 3] {
        let p = self.p;
        let r = |x: u64, y: u64| if x >= y { x - y } else { x + p - y };
        [r(a[0], b[0]), r(a[1], b[1]), r(a[2], b[2])]
    }

    fn neg(&self, a: &[u64; 3]) -> [u64; 3] {
        let p = self.p;
        let r = |x: u64| if x == 0 { 0 } else { p - x };
        [r(a[0]), r(a[1]), r(a[2])]
    }

    fn mul(&self, a: &[u64; 3], b: &[u64; 3]) -> [u64; 3] {
        let p = self.p;
        // convolution; entries stay below 3 p^2 < 2^44
        let mut c = [
            a[0] * b[0],
            a[0] * b[1] + a[1] * b[0],
            a[0] * b[2] + a[1] * b[1] + a[2] * b[0],
            a[1] * b[2] + a[2] * b[1],
            a[2] * b[2],
        ];
        // fold x^4 and x^3 via x^3 = -(c2 x^2 + c1 x + c0)
        let t4 = c[4] % p;
        c[3] += t4 * (p - self.c2) % p;
        c[2] += t4 * (p - self.c1) % p;
        c[1] += t4 * (p - self.c0) % p;
        let t3 = c[3] % p;
        c[2] += t3 * (p - self.c2) % p;
        c[1] += t3 * (p - self.c1) % p;
        c[0] += t3 * (p - self.c0) % p;
        [c[0] % p, c[1] % p, c[2] % p]
    }

    fn inv(&self, a: &[u64; 3]) -> Option<[u64; 3]> {
        if self.is_zero(a) {
            return None;
        }
        // Fermat: a^{q-2}
        Some(self.pow(a, self.order - 2))
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn from_int(&self, n: i64) -> [u64; 3] {
        let p = self.p as i64;
        [((n % p + p) % p) as u64, 0, 0]
    }

    fn is_zero(&self, a: &[u64; 3]) -> bool {
        a == &[0, 0, 0]
    }
}

impl FiniteField for CubicField {
    fn prime(&self) -> u64 {
        self.p
    }

    fn ext_degree(&self) -> u32 {
        3
    }

    fn order(&self) -> u64 {
        self.order
    }

    fn encode(&self, a: &[u64; 3]) -> u64 {
        (a[2] * self.p + a[1]) * self.p + a[0]
    }

    fn decode(&self, code: u64) -> [u64; 3] {
        let c = code % self.order;
        [c % self.p, c / self.p % self.p, c / (self.p * self.p)]
    }
}

/// Simultaneous inversion by Montgomery's trick: one field inversion plus
/// 3(n-1) multiplications. Zero entries come back as None.
pub fn batch_invert<F: Field>(field: &F, values: &[F::Elem]) -> Vec<Option<F::Elem>> {
    let mut out: Vec<Option<F::Elem>> = vec![None; values.len()];
    let mut prefix = Vec::with_capacity(values.len());
    let mut acc = field.one();
    for v in values {
        if !field.is_zero(v) {
            prefix.push((acc.clone(), v));
            acc = field.mul(&acc, v);
        }
    }
    let mut suffix = match field.inv(&acc) {
        Some(s) => s,
        None => field.one(), // acc = 1 only when every value was zero
    };
    let mut idx: Vec<usize> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| !field.is_zero(v))
        .map(|(i, _)| i)
        .collect();
    while let (Some(i), Some((pre, v))) = (idx.pop(), prefix.pop()) {
        out[i] = Some(field.mul(&suffix, &pre));
        suffix = field.mul(&suffix, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::ExtField;

    #[test]
    fn agrees_with_generic_extension_field() {
        let fast = CubicField::new(13).unwrap();
        let slow = ExtField::new(13, standard_modulus(13, 3).unwrap()).unwrap();
        assert_eq!(fast.order(), slow.order());
        for code in [0u64, 1, 5, 169, 2000, 2196, 1234, 777] {
            for other in [1u64, 17, 391, 2100] {
                let (a1, b1) = (fast.decode(code), fast.decode(other));
                let (a2, b2) = (slow.decode(code), slow.decode(other));
                assert_eq!(fast.encode(&fast.mul(&a1, &b1)), slow.encode(&slow.mul(&a2, &b2)));
                assert_eq!(fast.encode(&fast.add(&a1, &b1)), slow.encode(&slow.add(&a2, &b2)));
                if code != 0 {
                    assert_eq!(
                        fast.encode(&fast.inv(&a1).unwrap()),
                        slow.encode(&slow.inv(&a2).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn batch_inversion_matches_individual() {
        let f = CubicField::new(7).unwrap();
        let values: Vec<[u64; 3]> = (0..40).map(|c| f.decode(c * 9 % 343)).collect();
        let batched = batch_invert(&f, &values);
        for (v, b) in values.iter().zip(&batched) {
            assert_eq!(f.inv(v), *b);
        }
    }
}
