//! Exact field arithmetic for arithmetic-dynamics computations.
//!
//! Three coefficient domains are provided:
//! - [`PrimeField`]: the odd prime field F_p with machine-word elements,
//! - [`ExtField`]: F_{p^n} presented by a monic irreducible modulus,
//! - [`RatFuncField`]: the rational function field F_p(lambda).
//!
//! All arithmetic goes through a field handle ([`Field`]) operating on plain
//! element data, so elements stay cheap to copy and hash while the handle
//! carries the modulus. Finite fields additionally implement [`FiniteField`],
//! which fixes the integer encoding sum(a_i p^i) used everywhere in I/O.

pub mod cubic;
pub mod descriptor;
pub mod ext;
pub mod fppoly;
pub mod prime;
pub mod quad;
pub mod ratfunc;
pub mod sqrt;

pub use cubic::{batch_invert, CubicField};
pub use descriptor::{format_descriptor, parse_descriptor, FieldDesc};
pub use ext::{find_irreducible, standard_modulus, Embedding, ExtField};
pub use prime::{is_prime_u64, PrimeField};
pub use quad::QuadExt;
pub use ratfunc::{RatFunc, RatFuncField};
pub use sqrt::sqrt_in_field;

use std::fmt;

/// Errors raised by field constructors and element I/O.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// The requested characteristic is composite or equals 2.
    NotPrime(u64),
    /// The modulus polynomial factors over the base field.
    NotIrreducible,
    /// The modulus is not monic or has degree 0.
    BadModulus,
    /// p^n does not fit in the element word.
    OrderOverflow,
    /// A field descriptor string failed to parse.
    BadDescriptor(String),
    /// An element encoding lies outside [0, q).
    BadEncoding(u64),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{} is not an odd prime", p),
            FieldError::NotIrreducible => write!(f, "modulus is not irreducible"),
            FieldError::BadModulus => write!(f, "modulus must be monic of degree >= 1"),
            FieldError::OrderOverflow => write!(f, "field order exceeds the 64-bit cap"),
            FieldError::BadDescriptor(s) => write!(f, "bad field descriptor: {}", s),
            FieldError::BadEncoding(e) => write!(f, "element encoding {} out of range", e),
        }
    }
}

impl std::error::Error for FieldError {}

/// A field presented as a handle operating on plain element data.
///
/// Handles are cheap to clone; elements carry no back-reference to the field.
/// Mixing elements of distinct handles is a logic error the caller must avoid.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Characteristic p of the field.
    fn characteristic(&self) -> u64;
    /// Image of the integer n under Z -> F.
    fn from_int(&self, n: i64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Convolution of coefficient slices (no trimming). Fields with flat
    /// element data override this with a single-reduction fast path; the
    /// default is the schoolbook double loop.
    fn poly_mul(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.add(&out[i + j], &self.mul(x, y));
            }
        }
        out
    }

    /// a^e by square-and-multiply; a^0 = 1 including a = 0.
    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A finite field F_{p^n} with the canonical integer encoding
/// sum(a_i p^i) <-> sum(a_i alpha^i), 0 <= a_i < p.
pub trait FiniteField: Field {
    /// Characteristic p.
    fn prime(&self) -> u64;
    /// Extension degree n over F_p.
    fn ext_degree(&self) -> u32;
    /// q = p^n.
    fn order(&self) -> u64;
    /// Integer encoding of an element in [0, q).
    fn encode(&self, a: &Self::Elem) -> u64;
    /// Element with the given encoding.
    fn decode(&self, code: u64) -> Self::Elem;

    /// The absolute Frobenius x -> x^p.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.prime())
    }

    /// i-fold Frobenius x -> x^{p^i}; `frobenius_power(a, n) = a`.
    fn frobenius_power(&self, a: &Self::Elem, i: u32) -> Self::Elem {
        let n = self.ext_degree();
        let reps = if n == 0 { 0 } else { i % n };
        let mut out = a.clone();
        for _ in 0..reps {
            out = self.frobenius(&out);
        }
        out
    }

    /// All q elements in encoding order.
    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.order()).map(|c| self.decode(c)).collect()
    }
}
