//! The odd prime field F_p on machine words.

use crate::{Field, FieldError, FiniteField};

/// Deterministic Miller-Rabin for u64 (the standard 12-base certificate).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        a %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The field F_p for an odd prime p >= 3. Elements are reduced u64 residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Rejects p = 2 and composites.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p < 3 || !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, n: u64) -> u64 {
        n % self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        let p = self.p as i128;
        Some(((s0 % p + p) % p) as u64)
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn from_int(&self, n: i64) -> u64 {
        let p = self.p as i64;
        ((n % p + p) % p) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn poly_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = crate::fppoly::mul(self, a, b);
        out.resize(a.len() + b.len() - 1, 0);
        out
    }
}

impl FiniteField for PrimeField {
    fn prime(&self) -> u64 {
        self.p
    }

    fn ext_degree(&self) -> u32 {
        1
    }

    fn order(&self) -> u64 {
        self.p
    }

    fn encode(&self, a: &u64) -> u64 {
        *a
    }

    fn decode(&self, code: u64) -> u64 {
        code % self.p
    }

    fn frobenius(&self, a: &u64) -> u64 {
        *a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_two_and_composites() {
        assert_eq!(PrimeField::new(2).unwrap_err(), FieldError::NotPrime(2));
        assert_eq!(PrimeField::new(1).unwrap_err(), FieldError::NotPrime(1));
        assert_eq!(PrimeField::new(91).unwrap_err(), FieldError::NotPrime(91));
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(1_000_003).is_ok());
    }

    #[test]
    fn inverse_and_pow() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101u64 {
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), 1);
        }
        assert_eq!(f.pow(&3, 100), 1); // Fermat
        assert_eq!(f.inv(&0), None);
    }
}
