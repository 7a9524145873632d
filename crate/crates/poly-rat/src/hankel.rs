//! Hankel determinants with entries constant along anti-diagonals.

use crate::poly::Polynomial;
use ff_core::Field;

/// An m x m Hankel matrix: entry (i, j) (1-based) is a_{i+j+k_min-2}, where
/// the sequence a_k for k = k_min .. k_min + 2m - 2 is given as polynomials
/// in the determinant variable w (degree <= 1 in the intended use).
#[derive(Debug, Clone)]
pub struct HankelSpec<F: Field> {
    pub size: usize,
    pub k_min: i64,
    pub entries: Vec<Polynomial<F>>,
}

impl<F: Field> HankelSpec<F> {
    pub fn new(size: usize, k_min: i64, entries: Vec<Polynomial<F>>) -> Self {
        assert!(size >= 1);
        assert_eq!(entries.len(), 2 * size - 1, "need 2m-1 anti-diagonal entries");
        HankelSpec { size, k_min, entries }
    }

    /// Entry at 1-based (i, j).
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i + j - 2]
    }
}

/// Exact determinant of the Hankel matrix as a polynomial in w.
///
/// The determinant has w-degree at most sum of the row maxima; it is
/// recovered from that many numeric determinants by interpolation at the
/// nodes 0, 1, 2, ... (distinct while the bound stays below the
/// characteristic, which holds for the degree-1 entries this crate builds:
/// the bound is m and m = (p-1)/2 < p). A Bareiss fallback covers the rest.
pub fn hankel_det<F: Field>(spec: &HankelSpec<F>) -> Polynomial<F> {
    let field = spec.entries[0].field().clone();
    let m = spec.size;
    let mut deg_bound = 0usize;
    for i in 1..=m {
        let row_max = (1..=m)
            .map(|j| spec.entry(i, j).degree().unwrap_or(0))
            .max()
            .unwrap_or(0);
        deg_bound += row_max;
    }
    if deg_bound == 0 {
        let mat: Vec<Vec<F::Elem>> = (1..=m)
            .map(|i| (1..=m).map(|j| spec.entry(i, j).coeff(0)).collect())
            .collect();
        return Polynomial::constant(field.clone(), det_numeric(&field, mat));
    }
    let char_p = field.characteristic();
    if (deg_bound as u64) < char_p {
        let mut points = Vec::with_capacity(deg_bound + 1);
        for t in 0..=deg_bound {
            let w = field.from_int(t as i64);
            let mat: Vec<Vec<F::Elem>> = (1..=m)
                .map(|i| (1..=m).map(|j| spec.entry(i, j).eval(&w)).collect())
                .collect();
            points.push((w, det_numeric(&field, mat)));
        }
        Polynomial::interpolate(field, &points)
    } else {
        det_bareiss(spec)
    }
}

/// Gaussian elimination with partial pivoting over a field.
pub fn det_numeric<F: Field>(field: &F, mut mat: Vec<Vec<F::Elem>>) -> F::Elem {
    let m = mat.len();
    let mut det = field.one();
    for col in 0..m {
        let pivot_row = (col..m).find(|&r| !field.is_zero(&mat[r][col]));
        let pivot_row = match pivot_row {
            Some(r) => r,
            None => return field.zero(),
        };
        if pivot_row != col {
            mat.swap(pivot_row, col);
            det = field.neg(&det);
        }
        let pivot = mat[col][col].clone();
        det = field.mul(&det, &pivot);
        let pinv = field.inv(&pivot).unwrap();
        for r in col + 1..m {
            if field.is_zero(&mat[r][col]) {
                continue;
            }
            let factor = field.mul(&mat[r][col], &pinv);
            for c in col..m {
                let sub = field.mul(&factor, &mat[col][c]);
                mat[r][c] = field.sub(&mat[r][c], &sub);
            }
        }
    }
    det
}

/// Fraction-free Bareiss elimination over F[w].
fn det_bareiss<F: Field>(spec: &HankelSpec<F>) -> Polynomial<F> {
    let field = spec.entries[0].field().clone();
    let m = spec.size;
    let mut mat: Vec<Vec<Polynomial<F>>> = (1..=m)
        .map(|i| (1..=m).map(|j| spec.entry(i, j).clone()).collect())
        .collect();
    let mut sign_flip = false;
    let mut prev = Polynomial::one(field.clone());
    for col in 0..m - 1 {
        if mat[col][col].is_zero() {
            let swap = (col + 1..m).find(|&r| !mat[r][col].is_zero());
            match swap {
                Some(r) => {
                    mat.swap(col, r);
                    sign_flip = !sign_flip;
                }
                None => return Polynomial::zero(field),
            }
        }
        for r in col + 1..m {
            for c in col + 1..m {
                let t = mat[r][c]
                    .mul(&mat[col][col])
                    .sub(&mat[r][col].mul(&mat[col][c]));
                mat[r][c] = t.div_exact(&prev);
            }
        }
        for item in mat.iter_mut().skip(col + 1) {
            item[col] = Polynomial::zero(field.clone());
        }
        prev = mat[col][col].clone();
    }
    let det = mat[m - 1][m - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ff_core::PrimeField;

    fn poly(p: u64, cs: &[i64]) -> Polynomial<PrimeField> {
        let f = PrimeField::new(p).unwrap();
        Polynomial::new(f, cs.iter().map(|&c| f.from_int(c)).collect())
    }

    #[test]
    fn one_by_one_is_the_entry() {
        let e = poly(7, &[4, 3]); // 3w + 4
        let spec = HankelSpec::new(1, 2, vec![e.clone()]);
        assert_eq!(hankel_det(&spec), e);
    }

    #[test]
    fn two_by_two_hand_expanded() {
        // entries a2 = w, a3 = 1, a4 = w: det = w^2 - 1
        let spec = HankelSpec::new(
            2,
            2,
            vec![poly(7, &[0, 1]), poly(7, &[1]), poly(7, &[0, 1])],
        );
        assert_eq!(hankel_det(&spec), poly(7, &[6, 0, 1]));
    }
}
