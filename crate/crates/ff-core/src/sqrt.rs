//! Square roots in finite fields of odd order.

use crate::FiniteField;

/// Euler criterion: true iff a is a nonzero square.
pub fn legendre_symbol_is_square<F: FiniteField>(field: &F, a: &F::Elem) -> bool {
    if field.is_zero(a) {
        return false;
    }
    field.is_one(&field.pow(a, (field.order() - 1) / 2))
}

/// Square root in F_q (q odd), or None for non-residues. Of the two roots
/// the one with the smaller integer encoding is returned, so the result is
/// deterministic across runs and platforms.
pub fn sqrt_in_field<F: FiniteField>(field: &F, a: &F::Elem) -> Option<F::Elem> {
    if field.is_zero(a) {
        return Some(field.zero());
    }
    let q = field.order();
    if !legendre_symbol_is_square(field, a) {
        return None;
    }
    let root = if q % 4 == 3 {
        field.pow(a, (q + 1) / 4)
    } else {
        tonelli_shanks(field, a)
    };
    let other = field.neg(&root);
    if field.encode(&root) <= field.encode(&other) {
        Some(root)
    } else {
        Some(other)
    }
}

/// Tonelli-Shanks for q = 1 mod 4, using the smallest-encoding non-residue.
fn tonelli_shanks<F: FiniteField>(field: &F, a: &F::Elem) -> F::Elem {
    let q = field.order();
    let mut s = 0u32;
    let mut m = q - 1;
    while m % 2 == 0 {
        m /= 2;
        s += 1;
    }
    let mut z = field.zero();
    for code in 2..q {
        let cand = field.decode(code);
        if !field.is_zero(&cand) && !legendre_symbol_is_square(field, &cand) {
            z = cand;
            break;
        }
    }
    let mut c = field.pow(&z, m);
    let mut t = field.pow(a, m);
    let mut r = field.pow(a, (m + 1) / 2);
    let mut e = s;
    while !field.is_one(&t) {
        // least i with t^{2^i} = 1
        let mut i = 0u32;
        let mut probe = t.clone();
        while !field.is_one(&probe) {
            probe = field.mul(&probe, &probe);
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(e - i - 1) {
            b = field.mul(&b, &b);
        }
        r = field.mul(&r, &b);
        c = field.mul(&b, &b);
        t = field.mul(&t, &c);
        e = i;
    }
    r
}
