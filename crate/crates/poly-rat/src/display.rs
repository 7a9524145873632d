//! Sparse textual form "c_k*z^k + ..." in descending degree, with
//! coefficients rendered by a caller-supplied formatter (integer encodings
//! for finite fields, lambda-fractions for the symbolic field).

use crate::poly::Polynomial;
use crate::ratmap::RationalMap;
use ff_core::{Field, FiniteField, RatFunc, RatFuncField};

pub fn poly_text<F: Field>(
    p: &Polynomial<F>,
    var: &str,
    fmt_coeff: &dyn Fn(&F::Elem) -> String,
) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let field = p.field();
    let mut terms = Vec::new();
    for k in (0..=p.degree().unwrap()).rev() {
        let c = p.coeff(k);
        if field.is_zero(&c) {
            continue;
        }
        let cs = fmt_coeff(&c);
        let term = match k {
            0 => cs,
            1 if cs == "1" => var.to_string(),
            1 => format!("{}*{}", cs, var),
            _ if cs == "1" => format!("{}^{}", var, k),
            _ => format!("{}*{}^{}", cs, var, k),
        };
        terms.push(term);
    }
    terms.join(" + ")
}

pub fn map_text<F: Field>(
    m: &RationalMap<F>,
    var: &str,
    fmt_coeff: &dyn Fn(&F::Elem) -> String,
) -> String {
    let num = poly_text(m.num(), var, fmt_coeff);
    if m.is_polynomial() {
        num
    } else {
        format!("({}) / ({})", num, poly_text(m.den(), var, fmt_coeff))
    }
}

/// Coefficient formatter for a finite field: the integer encoding.
pub fn finite_coeff<F: FiniteField>(field: &F) -> impl Fn(&F::Elem) -> String + '_ {
    move |c| field.encode(c).to_string()
}

/// Coefficient formatter for F_p(lambda), printing "l" for lambda.
pub fn ratfunc_coeff(_field: &RatFuncField) -> impl Fn(&RatFunc) -> String {
    |c: &RatFunc| {
        let render = |poly: &[u64]| -> String {
            if poly.is_empty() {
                return "0".to_string();
            }
            let mut terms = Vec::new();
            for (k, &coef) in poly.iter().enumerate().rev() {
                if coef == 0 {
                    continue;
                }
                let term = match k {
                    0 => coef.to_string(),
                    1 if coef == 1 => "l".to_string(),
                    1 => format!("{}*l", coef),
                    _ if coef == 1 => format!("l^{}", k),
                    _ => format!("{}*l^{}", coef, k),
                };
                terms.push(term);
            }
            terms.join(" + ")
        };
        if c.is_polynomial() {
            if c.num.len() <= 1 {
                render(&c.num)
            } else {
                format!("({})", render(&c.num))
            }
        } else {
            format!("(({}) / ({}))", render(&c.num), render(&c.den))
        }
    }
}
