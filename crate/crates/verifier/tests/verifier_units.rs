use ff_core::{ExtField, Field, FiniteField, PrimeField};
use verifier::{
    count_checks, family_table, suite_counts_default, suite_torsion_default,
    verify_appendix_diagrams, verify_family_bad_reduction, verify_lattes,
    verify_periodic_torsion, verify_supersingular_degeneration, LattesMode, Verdict,
};

#[test]
fn lattes_symbolic_small_primes() {
    for p in [3u64, 5, 7] {
        let r = verify_lattes(p, LattesMode::Symbolic);
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json_line());
    }
}

#[test]
fn lattes_sampled_exposes_bounds() {
    let r = verify_lattes(5, LattesMode::Sampled);
    assert_eq!(r.verdict, Verdict::Pass);
    let bounds = r.degree_bounds.as_ref().unwrap();
    let samples = r.samples.as_ref().unwrap();
    assert!(samples["lambda"].as_u64().unwrap() > bounds["lambda"].as_u64().unwrap());
    assert!(samples["z_per_lambda"].as_u64().unwrap() > bounds["z"].as_u64().unwrap());
    // json-lines round trip
    let line = r.to_json_line();
    let v: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["method"], "sampled");
}

#[test]
fn torsion_equivalence_small_field() {
    // p = 3, lambda = i in F_9, f = 1, searching F_81
    let f9 = ExtField::new(3, vec![1, 0, 1]).unwrap();
    let lam = f9.generator();
    let r = verify_periodic_torsion(3, &f9, &lam, 1, 2);
    assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json_line());
    // supersingular lambda = -1 over F_3, f = 1, F_81
    let f3 = ExtField::new(3, ff_core::standard_modulus(3, 1).unwrap()).unwrap();
    let r = verify_periodic_torsion(3, &f3, &f3.from_int(-1), 1, 4);
    assert_eq!(r.verdict, Verdict::Pass);
}

#[test]
fn supersingular_degeneration_small() {
    for p in [3u64, 5, 7] {
        let r = verify_supersingular_degeneration(p);
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json_line());
        // p = 5 has the two primitive 6th roots of unity; p = 7 has the
        // three roots of the degree-3 Hasse polynomial
        let roots = r.samples.as_ref().unwrap()["hasse_roots"].as_u64().unwrap();
        match p {
            3 => assert_eq!(roots, 1),
            5 => assert_eq!(roots, 2),
            _ => assert_eq!(roots, 3),
        }
    }
}

#[test]
fn appendix_diagrams_pass() {
    let r = verify_appendix_diagrams();
    assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json_line());
}

#[test]
fn count_check_example_over_char_seven() {
    // the multiplication-by-3 map over F_7, lambda = 2: ten fixed points
    // with multiplicity
    let f7 = PrimeField::new(7).unwrap();
    let r = count_checks(3, &f7, &2, 1);
    assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json_line());
    assert_eq!(
        r.samples.as_ref().unwrap()["fixed_point_count_with_multiplicity"],
        10
    );
}

#[test]
fn default_suites_pass() {
    for r in suite_torsion_default() {
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json_line());
    }
    for r in suite_counts_default() {
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json_line());
    }
}

#[test]
fn family_rows_pass_at_seven() {
    assert_eq!(family_table().len(), 11);
    for row in 0..family_table().len() {
        let r = verify_family_bad_reduction(row, 7, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json_line());
    }
}

#[test]
fn displayed_order4_rows_have_extraneous_bad_fibers() {
    // the circulating table's order-4 quadratic coefficient 4(t - a) puts a
    // quadratic factor of extra discriminant roots outside {0, 1, lambda};
    // the corrected coefficients (see family_table docs) remove it. Pin the
    // discrepancy on a sample per row.
    use verifier::families::{
        constraint_value, cubic_discriminant, cubic_in_t, cubic_in_t_displayed_order4,
        strip_allowed_roots,
    };
    let f = PrimeField::new(11).unwrap();
    for row in 5..=7usize {
        let mut tested = false;
        'search: for lam in 2..11u64 {
            for a in 2..11u64 {
                let ok = matches!(constraint_value(row, &f, &lam, &a), Some(v) if f.is_zero(&v));
                if !ok {
                    continue;
                }
                let displayed = cubic_in_t_displayed_order4(row, &f, &lam, &a).unwrap();
                let disp_residue = strip_allowed_roots(cubic_discriminant(&displayed), &lam);
                assert!(
                    !disp_residue.is_constant(),
                    "displayed row {} unexpectedly clean at lambda={}, a={}",
                    row,
                    lam,
                    a
                );
                let corrected = cubic_in_t(row, &f, &lam, &a).unwrap();
                let corr_residue = strip_allowed_roots(cubic_discriminant(&corrected), &lam);
                assert!(corr_residue.is_constant() && !corr_residue.is_zero());
                tested = true;
                break 'search;
            }
        }
        assert!(tested, "no sample found for row {}", row);
    }
}

#[test]
fn family_row0_locus_matches_hand_factorization() {
    // pairwise root differences (t - lambda), t(1 - lambda), lambda(t - 1):
    // the discriminant is their squared product; strip check must succeed
    // for every lambda and fail if we forbid one allowed root
    use poly_rat::Polynomial;
    use verifier::families::cubic_in_t;
    let f = PrimeField::new(11).unwrap();
    for lam in 2..11u64 {
        let c = cubic_in_t(0, &f, &lam, &f.zero()).unwrap();
        // monic cubic: disc = prod of squared pairwise differences
        let x = Polynomial::x(f);
        let r1 = x.sub(&Polynomial::constant(f, lam)); // root of x - (t - l) as poly in t...
        let _ = r1;
        // direct check: the discriminant vanishes exactly at t in {0, 1, lambda}
        let disc = {
            let [d, cc, b, a] = &c;
            let i18 = f.from_int(18);
            a.mul(b).mul(cc).mul(d).scale(&i18)
                .add(&b.mul(b).mul(b).mul(d).scale(&f.from_int(-4)))
                .add(&b.mul(b).mul(cc).mul(cc))
                .add(&a.mul(cc).mul(cc).mul(cc).scale(&f.from_int(-4)))
                .add(&a.mul(a).mul(d).mul(d).scale(&f.from_int(-27)))
        };
        for t in 0..11u64 {
            let vanishes = f.is_zero(&disc.eval(&t));
            let allowed = t == 0 || t == 1 || t == lam;
            assert_eq!(vanishes, allowed, "lambda = {}, t = {}", lam, t);
        }
    }
}
