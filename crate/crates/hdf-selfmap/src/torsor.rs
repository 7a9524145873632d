//! Lifting-torsor data: the Artin-Schreier equation a z^p + b = z governing
//! periodic lifts to the next Witt level, and the torsor coefficient
//! phi-tilde'(a-bar^p) that is its linear part.

use crate::build::SelfMap;
use crate::FlowError;
use ff_core::{Field, FiniteField};
use poly_rat::MapError;

/// All z in F_q with a z^p + b = z, by solving the F_p-linear system on the
/// n-dimensional F_p-vector space F_q. The solution count is 0, 1, or a
/// power of p; results are sorted by integer encoding.
pub fn artin_schreier_solve<F: FiniteField>(field: &F, a: &F::Elem, b: &F::Elem) -> Vec<F::Elem> {
    let p = field.prime();
    let n = field.ext_degree() as usize;
    // digits of the encoding are the coordinates in the power basis
    let coords = |e: &F::Elem| -> Vec<u64> {
        let mut c = field.encode(e);
        (0..n)
            .map(|_| {
                let d = c % p;
                c /= p;
                d
            })
            .collect()
    };
    // T(z) = a z^p - z; solve T(z) = -b
    let fp = ff_core::PrimeField::new(p).unwrap();
    let mut mat = vec![vec![0u64; n + 1]; n];
    for j in 0..n {
        let basis = field.decode(p.pow(j as u32));
        let image = field.sub(&field.mul(a, &field.frobenius(&basis)), &basis);
        for (i, d) in coords(&image).into_iter().enumerate() {
            mat[i][j] = d;
        }
    }
    for (i, d) in coords(&field.neg(b)).into_iter().enumerate() {
        mat[i][n] = d;
    }
    // row-reduce [T | -b] over F_p
    use ff_core::Field as _;
    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        let pr = (row..n).find(|&r| mat[r][col] != 0);
        let pr = match pr {
            Some(r) => r,
            None => continue,
        };
        mat.swap(row, pr);
        let inv = fp.inv(&mat[row][col]).unwrap();
        for c in col..=n {
            mat[row][c] = fp.mul(&mat[row][c], &inv);
        }
        for r in 0..n {
            if r != row && mat[r][col] != 0 {
                let factor = mat[r][col];
                for c in col..=n {
                    let sub = fp.mul(&factor, &mat[row][c]);
                    mat[r][c] = fp.sub(&mat[r][c], &sub);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    // consistency
    for r in row..n {
        if mat[r][n] != 0 {
            return Vec::new();
        }
    }
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut solutions = Vec::new();
    let total = p.pow(free_cols.len() as u32);
    for combo in 0..total {
        let mut assign = vec![0u64; n];
        let mut c = combo;
        for &fc in &free_cols {
            assign[fc] = c % p;
            c /= p;
        }
        for (r, &pc) in pivot_cols.iter().enumerate() {
            let mut val = mat[r][n];
            for &fc in &free_cols {
                val = fp.sub(&val, &fp.mul(&mat[r][fc], &assign[fc]));
            }
            assign[pc] = val;
        }
        let mut code = 0u64;
        for &d in assign.iter().rev() {
            code = code * p + d;
        }
        solutions.push(code);
    }
    solutions.sort_unstable();
    solutions.into_iter().map(|c| field.decode(c)).collect()
}

/// phi-tilde'(a-bar^p): the linear coefficient of the lifting torsor map.
/// Poles are surfaced as errors because the coefficient is an affine
/// quantity.
pub fn torsor_coefficient<F: Field>(
    map: &SelfMap<F>,
    a_bar: &F::Elem,
) -> Result<F::Elem, FlowError> {
    let w = map.field.pow(a_bar, map.p);
    let deriv = map.phi_tilde.derivative().map_err(|_| FlowError::Degenerate)?;
    deriv.eval_affine(&w).map_err(|e| match e {
        MapError::PoleAtPoint => FlowError::PoleAtPoint,
        MapError::DegenerateMap => FlowError::Degenerate,
    })
}
