use ff_core::{ExtField, Field, FiniteField, PrimeField};
use poly_rat::{hankel_det, HankelSpec, Polynomial, ProjPoint, RationalMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Naive cofactor-expansion determinant, the independent oracle for the
/// elimination/interpolation implementation.
fn det_cofactor<F: Field>(field: &F, mat: &[Vec<Polynomial<F>>]) -> Polynomial<F> {
    let m = mat.len();
    if m == 1 {
        return mat[0][0].clone();
    }
    let mut acc = Polynomial::zero(field.clone());
    for (j, cell) in mat[0].iter().enumerate() {
        if cell.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial<F>>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = cell.mul(&det_cofactor(field, &minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

#[test]
fn hankel_det_matches_cofactor_oracle() {
    let field = PrimeField::new(13).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for m in 1..=5usize {
        for _ in 0..20 {
            let entries: Vec<Polynomial<PrimeField>> = (0..2 * m - 1)
                .map(|_| {
                    Polynomial::new(field, vec![rng.gen_range(0..13), rng.gen_range(0..13)])
                })
                .collect();
            let spec = HankelSpec::new(m, 2, entries);
            let mat: Vec<Vec<Polynomial<PrimeField>>> = (1..=m)
                .map(|i| (1..=m).map(|j| spec.entry(i, j).clone()).collect())
                .collect();
            assert_eq!(hankel_det(&spec), det_cofactor(&field, &mat));
        }
    }
}

#[test]
fn compose_commutes_with_eval_on_samples() {
    let field = ExtField::new(7, vec![1, 0, 1]).unwrap(); // F_49
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let rand_poly = |rng: &mut ChaCha8Rng, deg: usize, field: &ExtField| {
        Polynomial::new(
            field.clone(),
            (0..=deg).map(|_| field.decode(rng.gen_range(0..49))).collect(),
        )
    };
    for _ in 0..40 {
        let a = loop {
            let num = rand_poly(&mut rng, 2, &field);
            let den = rand_poly(&mut rng, 1, &field);
            if den.is_zero() || num.is_zero() {
                continue;
            }
            let m = RationalMap::new(num, den).unwrap();
            if m.degree() > 0 {
                break m;
            }
        };
        let b = loop {
            let num = rand_poly(&mut rng, 2, &field);
            let den = rand_poly(&mut rng, 2, &field);
            if den.is_zero() || num.is_zero() {
                continue;
            }
            let m = RationalMap::new(num, den).unwrap();
            if m.degree() > 0 {
                break m;
            }
        };
        let c = RationalMap::compose(&a, &b).unwrap();
        assert_eq!(c.degree(), a.degree() * b.degree());
        for _ in 0..25 {
            let z = ProjPoint::Finite(field.decode(rng.gen_range(0..49)));
            assert_eq!(c.eval_proj(&z), a.eval_proj(&b.eval_proj(&z)));
        }
        assert_eq!(
            c.eval_proj(&ProjPoint::Infinity),
            a.eval_proj(&b.eval_proj(&ProjPoint::Infinity))
        );
    }
}

#[test]
fn derivative_satisfies_product_rule() {
    let field = PrimeField::new(11).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let f = Polynomial::new(
            field,
            (0..=rng.gen_range(0..5usize)).map(|_| rng.gen_range(0..11)).collect(),
        );
        let g = Polynomial::new(
            field,
            (0..=rng.gen_range(0..5usize)).map(|_| rng.gen_range(0..11)).collect(),
        );
        let lhs = f.mul(&g).derivative();
        let rhs = f.derivative().mul(&g).add(&f.mul(&g.derivative()));
        assert_eq!(lhs, rhs);
    }
}

/// Dual-number derivative oracle: f(a + eps) = f(a) + f'(a) eps in
/// F[eps]/(eps^2). Arithmetic on pairs (value, slope).
fn dual_eval_map<F: Field>(m: &RationalMap<F>, field: &F, a: &F::Elem) -> Option<(F::Elem, F::Elem)> {
    let dual_mul = |x: &(F::Elem, F::Elem), y: &(F::Elem, F::Elem)| {
        (
            field.mul(&x.0, &y.0),
            field.add(&field.mul(&x.0, &y.1), &field.mul(&x.1, &y.0)),
        )
    };
    let eval_poly = |p: &Polynomial<F>| {
        let mut acc = (field.zero(), field.zero());
        let x = (a.clone(), field.one());
        for c in p.coeffs().iter().rev() {
            acc = dual_mul(&acc, &x);
            acc.0 = field.add(&acc.0, c);
        }
        acc
    };
    let n = eval_poly(m.num());
    let d = eval_poly(m.den());
    let dinv = field.inv(&d.0)?;
    // (n0 + n1 e)/(d0 + d1 e) = n0/d0 + (n1 d0 - n0 d1)/d0^2 e
    let value = field.mul(&n.0, &dinv);
    let slope = field.mul(
        &field.sub(&field.mul(&n.1, &d.0), &field.mul(&n.0, &d.1)),
        &field.mul(&dinv, &dinv),
    );
    Some((value, slope))
}

#[test]
fn quotient_rule_matches_dual_numbers() {
    let field = PrimeField::new(7).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..60 {
        let num = Polynomial::new(
            field,
            (0..=rng.gen_range(1..5usize)).map(|_| rng.gen_range(0..7)).collect(),
        );
        let den = Polynomial::new(
            field,
            (0..=rng.gen_range(0..3usize)).map(|_| rng.gen_range(0..7)).collect(),
        );
        if num.is_zero() || den.is_zero() {
            continue;
        }
        let m = RationalMap::new(num, den).unwrap();
        let md = m.derivative().unwrap();
        for a in 0..7u64 {
            if let Some((_, slope)) = dual_eval_map(&m, &field, &a) {
                if let Ok(direct) = md.eval_affine(&a) {
                    assert_eq!(direct, slope);
                }
            }
        }
    }
}

#[test]
fn reduced_invariant_after_operations() {
    // gcd(num, den) = 1 and monic den after every public operation
    let field = PrimeField::new(11).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let check = |m: &RationalMap<PrimeField>| {
        assert!(m.num().gcd(m.den()).is_constant());
        assert!(field.is_one(m.den().leading_coeff().unwrap()));
    };
    for _ in 0..60 {
        let num = Polynomial::new(
            field,
            (0..=rng.gen_range(0..4usize)).map(|_| rng.gen_range(0..11)).collect(),
        );
        let den = Polynomial::new(
            field,
            (0..=rng.gen_range(0..4usize)).map(|_| rng.gen_range(0..11)).collect(),
        );
        if den.is_zero() {
            continue;
        }
        let m = RationalMap::new(num, den).unwrap();
        check(&m);
        check(&m.derivative().unwrap());
        if m.degree() > 0 {
            check(&RationalMap::compose(&m, &m).unwrap());
        }
    }
}
