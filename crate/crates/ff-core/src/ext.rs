//! Extension fields F_{p^n} presented by a monic irreducible modulus.

use crate::fppoly;
use crate::prime::PrimeField;
use crate::{Field, FieldError, FiniteField};

/// F_{p^n} = F_p[x]/(modulus). Elements are coefficient vectors of length n
/// (low to high powers of the residue class alpha of x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    /// Monic irreducible modulus, length n + 1, low-to-high.
    modulus: Vec<u64>,
    n: usize,
    order: u64,
}

impl ExtField {
    /// Builds F_{p^n} after verifying the modulus is monic, reduced, and
    /// irreducible over F_p. Degree-1 moduli are accepted and yield F_p itself.
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Self, FieldError> {
        let base = PrimeField::new(p)?;
        let modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        let modulus = fppoly::trim(modulus);
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(FieldError::BadModulus);
        }
        let n = modulus.len() - 1;
        let mut order: u64 = 1;
        for _ in 0..n {
            order = order.checked_mul(p).ok_or(FieldError::OrderOverflow)?;
        }
        if !is_irreducible(&base, &modulus) {
            return Err(FieldError::NotIrreducible);
        }
        Ok(ExtField { base, modulus, n, order })
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The residue class alpha of x (zero element in degree 1).
    pub fn generator(&self) -> Vec<u64> {
        let mut v = vec![0u64; self.n];
        if self.n > 1 {
            v[1] = 1;
        }
        v
    }

    /// Element from base-field coefficients (low to high), reducing mod p
    /// and truncating/padding to length n.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Vec<u64> {
        let reduced: Vec<u64> = coeffs.iter().map(|c| c % self.base.modulus()).collect();
        let rem = fppoly::divrem(&self.base, &fppoly::trim(reduced), &self.modulus).1;
        self.pad(rem)
    }

    fn pad(&self, mut v: Vec<u64>) -> Vec<u64> {
        v.resize(self.n, 0);
        v
    }
}

impl Field for ExtField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.n]
    }

    fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.n];
        v[0] = 1;
        v
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }

    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let prod = fppoly::mul(&self.base, a, b);
        let rem = fppoly::divrem(&self.base, &prod, &self.modulus).1;
        self.pad(rem)
    }

    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        // extended Euclid in F_p[x]: s*a + t*modulus = 1
        let fp = &self.base;
        let (mut r0, mut r1) = (fppoly::trim(a.clone()), self.modulus.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        while !r1.is_empty() {
            let (q, r) = fppoly::divrem(fp, &r0, &r1);
            let s = fppoly::sub(fp, &s0, &fppoly::mul(fp, &q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        debug_assert_eq!(r0.len(), 1);
        let c = fp.inv(&r0[0]).unwrap();
        Some(self.pad(fppoly::scale(fp, &s0, c)))
    }

    fn characteristic(&self) -> u64 {
        self.base.modulus()
    }

    fn from_int(&self, n: i64) -> Vec<u64> {
        let mut v = vec![0; self.n];
        v[0] = self.base.from_int(n);
        v
    }

    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }

    /// Flat bivariate convolution in (x, alpha) with u128 lane accumulators
    /// and a single modulus reduction per output coefficient.
    fn poly_mul(&self, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        if self.base.modulus() >= (1 << 31) {
            // keep lane accumulators far from u128 overflow
            let mut out = vec![self.zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] = self.add(&out[i + j], &self.mul(x, y));
                }
            }
            return out;
        }
        let n = self.n;
        let p = self.base.modulus() as u128;
        let width = 2 * n - 1;
        let out_len = a.len() + b.len() - 1;
        let mut acc = vec![0u128; out_len * width];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                let row = (i + j) * width;
                for (u, &au) in ai.iter().enumerate() {
                    if au == 0 {
                        continue;
                    }
                    let au = au as u128;
                    for (v, &bv) in bj.iter().enumerate() {
                        acc[row + u + v] += au * bv as u128;
                    }
                }
            }
        }
        let fp = &self.base;
        (0..out_len)
            .map(|k| {
                let lane: Vec<u64> = acc[k * width..(k + 1) * width]
                    .iter()
                    .map(|&c| (c % p) as u64)
                    .collect();
                let rem = fppoly::divrem(fp, &fppoly::trim(lane), &self.modulus).1;
                self.pad(rem)
            })
            .collect()
    }
}

impl FiniteField for ExtField {
    fn prime(&self) -> u64 {
        self.base.modulus()
    }

    fn ext_degree(&self) -> u32 {
        self.n as u32
    }

    fn order(&self) -> u64 {
        self.order
    }

    fn encode(&self, a: &Vec<u64>) -> u64 {
        let p = self.base.modulus();
        let mut acc = 0u64;
        for &c in a.iter().rev() {
            acc = acc * p + c;
        }
        acc
    }

    fn decode(&self, code: u64) -> Vec<u64> {
        let p = self.base.modulus();
        let mut c = code % self.order;
        let mut v = vec![0u64; self.n];
        for slot in v.iter_mut() {
            *slot = c % p;
            c /= p;
        }
        v
    }
}

/// Rabin irreducibility test: f of degree n is irreducible over F_p iff
/// x^{p^n} = x mod f and gcd(x^{p^{n/l}} - x, f) = 1 for every prime l | n.
fn is_irreducible(fp: &PrimeField, f: &[u64]) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let p = fp.modulus();
    let x = vec![0u64, 1];
    // x^{p^k} mod f via k-fold p-powering
    let frob_iter = |k: usize| -> Vec<u64> {
        let mut acc = x.clone();
        for _ in 0..k {
            acc = fppoly::powmod(fp, &acc, p, f);
        }
        acc
    };
    let top = frob_iter(n);
    if fppoly::sub(fp, &top, &x) != Vec::<u64>::new() {
        return false;
    }
    let mut m = n;
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for l in primes {
        let g = fppoly::sub(fp, &frob_iter(n / l), &x);
        if fppoly::gcd(fp, &g, f).len() != 1 {
            return false;
        }
    }
    true
}

/// Default modulus for F_{p^d}: the pinned basis x^4 + x^2 + 2 for F_81
/// (the basis the orbit-diagram integer labels use), otherwise the first
/// irreducible monic polynomial in encoding order.
pub fn standard_modulus(p: u64, d: u32) -> Result<Vec<u64>, FieldError> {
    if p == 3 && d == 4 {
        return Ok(vec![2, 0, 1, 0, 1]);
    }
    find_irreducible(p, d)
}

/// First monic irreducible polynomial of degree d over F_p, scanning the
/// lower coefficients in integer-encoding order. Deterministic.
pub fn find_irreducible(p: u64, d: u32) -> Result<Vec<u64>, FieldError> {
    let fp = PrimeField::new(p)?;
    let d = d as usize;
    if d == 0 {
        return Err(FieldError::BadModulus);
    }
    let mut count: u64 = 1;
    for _ in 0..d {
        count = count.checked_mul(p).ok_or(FieldError::OrderOverflow)?;
    }
    for code in 0..count {
        let mut f = vec![0u64; d + 1];
        let mut c = code;
        for slot in f.iter_mut().take(d) {
            *slot = c % p;
            c /= p;
        }
        f[d] = 1;
        if is_irreducible(&fp, &f) {
            return Ok(f);
        }
    }
    Err(FieldError::NotIrreducible)
}

/// An F_p-algebra embedding F_{p^m} -> F_{p^n} (m | n), fixed by sending the
/// source generator to the smallest-encoding root of the source modulus.
#[derive(Debug, Clone)]
pub struct Embedding {
    src: ExtField,
    dst: ExtField,
    /// Images of 1, alpha, alpha^2, ..., alpha^{m-1} in the target field.
    gen_powers: Vec<Vec<u64>>,
}

impl Embedding {
    pub fn new(src: &ExtField, dst: &ExtField) -> Option<Embedding> {
        if src.prime() != dst.prime() || dst.ext_degree() % src.ext_degree() != 0 {
            return None;
        }
        // smallest-encoding root of the source modulus in the target field
        let mut root = None;
        for code in 0..dst.order() {
            let cand = dst.decode(code);
            let mut acc = dst.zero();
            for &c in src.modulus().iter().rev() {
                acc = dst.mul(&acc, &cand);
                acc = dst.add(&acc, &dst.from_int(c as i64));
            }
            if dst.is_zero(&acc) {
                root = Some(cand);
                break;
            }
        }
        let root = root?;
        let m = src.ext_degree() as usize;
        let mut gen_powers = Vec::with_capacity(m);
        let mut acc = dst.one();
        for _ in 0..m {
            gen_powers.push(acc.clone());
            acc = dst.mul(&acc, &root);
        }
        Some(Embedding { src: src.clone(), dst: dst.clone(), gen_powers })
    }

    pub fn apply(&self, a: &Vec<u64>) -> Vec<u64> {
        let mut out = self.dst.zero();
        for (c, pow) in a.iter().zip(&self.gen_powers) {
            let term: Vec<u64> = pow.iter().map(|x| self.src.base().mul(x, c)).collect();
            out = self.dst.add(&out, &term);
        }
        out
    }

    pub fn source(&self) -> &ExtField {
        &self.src
    }

    pub fn target(&self) -> &ExtField {
        &self.dst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f81_with_pinned_modulus() {
        // x^4 + x^2 + 2 over F_3: the minimal polynomial of sqrt(1 + sqrt(-1)).
        let k = ExtField::new(3, vec![2, 0, 1, 0, 1]).unwrap();
        assert_eq!(k.order(), 81);
        let alpha = k.generator();
        // alpha^2 = 1 + i with i^2 = -1: check (alpha^2 - 1)^2 = -1.
        let i = k.sub(&k.mul(&alpha, &alpha), &k.one());
        assert_eq!(k.mul(&i, &i), k.from_int(-1));
    }

    #[test]
    fn degree_one_modulus_is_fp() {
        let k = ExtField::new(5, vec![0, 1]).unwrap();
        assert_eq!(k.order(), 5);
        assert_eq!(k.ext_degree(), 1);
    }

    #[test]
    fn reducible_rejected() {
        // x^2 - 1 = (x-1)(x+1) over F_5
        assert_eq!(ExtField::new(5, vec![4, 0, 1]).unwrap_err(), FieldError::NotIrreducible);
        // x^2 + 1 irreducible over F_3
        assert!(ExtField::new(3, vec![1, 0, 1]).is_ok());
    }

    #[test]
    fn encode_decode_roundtrip() {
        let k = ExtField::new(3, vec![2, 0, 1, 0, 1]).unwrap();
        for code in 0..81 {
            assert_eq!(k.encode(&k.decode(code)), code);
        }
    }

    #[test]
    fn embedding_f9_in_f81() {
        let f9 = ExtField::new(3, vec![1, 0, 1]).unwrap();
        let f81 = ExtField::new(3, vec![2, 0, 1, 0, 1]).unwrap();
        let emb = Embedding::new(&f9, &f81).unwrap();
        let i9 = f9.generator();
        let img = emb.apply(&i9);
        // the image still squares to -1
        assert_eq!(f81.mul(&img, &img), f81.from_int(-1));
        // embedding is a ring hom on a sample
        for a in 0..9u64 {
            for b in 0..9u64 {
                let (x, y) = (f9.decode(a), f9.decode(b));
                let lhs = emb.apply(&f9.mul(&x, &y));
                let rhs = f81.mul(&emb.apply(&x), &emb.apply(&y));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
