//! Dense univariate polynomials over F_p, used internally by the extension
//! and rational-function fields. Coefficients are stored low-to-high with
//! trailing zeros stripped; the zero polynomial is the empty vector.

use crate::prime::PrimeField;
use crate::Field;

pub(crate) fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// deg(f), or None for the zero polynomial.
pub(crate) fn deg(f: &[u64]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub(crate) fn add(fp: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = fp.add(&x, &y);
    }
    trim(out)
}

pub(crate) fn sub(fp: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = fp.sub(&x, &y);
    }
    trim(out)
}

pub(crate) fn neg(fp: &PrimeField, a: &[u64]) -> Vec<u64> {
    a.iter().map(|c| fp.neg(c)).collect()
}

/// Schoolbook product, one reduction per output coefficient. Convolution
/// sums are accumulated in u128, which cannot overflow for word-sized p.
pub(crate) fn mul(fp: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p = fp.modulus() as u128;
    let n = a.len() + b.len() - 1;
    let mut out = vec![0u64; n];
    // Deferred reduction is safe while term_count * (p-1)^2 < 2^127.
    let defer = fp.modulus() < (1 << 32) || a.len().min(b.len()) < (1 << 10);
    for (k, o) in out.iter_mut().enumerate() {
        let lo = k.saturating_sub(b.len() - 1);
        let hi = k.min(a.len() - 1);
        let mut acc: u128 = 0;
        for i in lo..=hi {
            acc += a[i] as u128 * b[k - i] as u128;
            if !defer {
                acc %= p;
            }
        }
        *o = (acc % p) as u64;
    }
    trim(out)
}

pub(crate) fn scale(fp: &PrimeField, a: &[u64], c: u64) -> Vec<u64> {
    trim(a.iter().map(|x| fp.mul(x, &c)).collect())
}

/// Euclidean division a = q*b + r with deg r < deg b. Panics on b = 0.
pub(crate) fn divrem(fp: &PrimeField, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let lead_inv = fp.inv(b.last().unwrap()).expect("nonzero lead");
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = r.get(k + b.len() - 1).copied().unwrap_or(0);
        if top == 0 {
            continue;
        }
        let c = fp.mul(&top, &lead_inv);
        q[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            let idx = k + j;
            r[idx] = fp.sub(&r[idx], &fp.mul(&c, &bj));
        }
    }
    (trim(q), trim(r))
}

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
pub(crate) fn gcd(fp: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(fp, &x, &y);
        x = y;
        y = r;
    }
    monic(fp, &x)
}

pub(crate) fn monic(fp: &PrimeField, a: &[u64]) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&lc) if lc == 1 => a.to_vec(),
        Some(lc) => scale(fp, a, fp.inv(lc).unwrap()),
    }
}


/// f^e mod m by repeated squaring.
pub(crate) fn powmod(fp: &PrimeField, f: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut base = divrem(fp, f, m).1;
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(fp, &mul(fp, &acc, &base), m).1;
        }
        e >>= 1;
        if e > 0 {
            base = divrem(fp, &mul(fp, &base, &base), m).1;
        }
    }
    acc
}
