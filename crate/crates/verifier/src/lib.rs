//! Executable theorem checks tying the layers together: the flow-map vs
//! multiplication-by-p identity, the periodicity/torsion correspondence,
//! the counting claims, the supersingular degeneration, the orbit-diagram
//! reproduction, and the family-table bad-reduction loci.

pub mod counts;
pub mod diagrams;
pub mod families;
pub mod lattes_check;
pub mod report;
pub mod supersingular;
pub mod torsion;

pub use counts::count_checks;
pub use diagrams::verify_appendix_diagrams;
pub use families::{family_table, verify_family_bad_reduction, FamilyEntry, FamilyError};
pub use lattes_check::{lattes_lambda_bound, lattes_z_bound, verify_lattes, LattesMode};
pub use report::{Method, Verdict, VerificationReport};
pub use supersingular::verify_supersingular_degeneration;
pub use torsion::verify_periodic_torsion;

use ff_core::ExtField;

/// Primes up to the bound, smallest first, starting at 3.
pub fn odd_primes_to(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&n| ff_core::is_prime_u64(n)).collect()
}

/// The lattes suite: symbolic or sampled for every odd prime p <= pmax.
pub fn suite_lattes(pmax: u64, mode_symbolic: bool) -> Vec<VerificationReport> {
    odd_primes_to(pmax)
        .into_iter()
        .map(|p| {
            verify_lattes(
                p,
                if mode_symbolic { LattesMode::Symbolic } else { LattesMode::Sampled },
            )
        })
        .collect()
}

/// The torsion suite defaults: exhaustive sweeps of P^1(F_{p^4}).
pub fn suite_torsion_default() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for (p, f) in [(3u64, 1u64), (3, 2), (5, 1), (5, 2)] {
        let base = ExtField::new(p, ff_core::standard_modulus(p, 1).unwrap()).unwrap();
        let lam = base.from_coeffs(&[2]);
        out.push(verify_periodic_torsion(p, &base, &lam, f, 4));
    }
    out
}

pub fn suite_supersingular(pmax: u64) -> Vec<VerificationReport> {
    odd_primes_to(pmax)
        .into_iter()
        .map(verify_supersingular_degeneration)
        .collect()
}

/// The counting suite defaults: (p, f) in {(3,1), (3,2), (5,1)} across three
/// ordinary lambda values each.
pub fn suite_counts_default() -> Vec<VerificationReport> {
    use ff_core::FiniteField;
    use legendre::is_supersingular;
    let mut out = Vec::new();
    for (p, f) in [(3u64, 1u64), (3, 2), (5, 1)] {
        let ext = ExtField::new(p, ff_core::standard_modulus(p, 2).unwrap()).unwrap();
        let mut taken = 0;
        for code in 2..ext.order() {
            if taken >= 3 {
                break;
            }
            let lam = ext.decode(code);
            if is_supersingular(p, &ext, &lam).unwrap_or(true) {
                continue;
            }
            out.push(count_checks(p, &ext, &lam, f));
            taken += 1;
        }
    }
    out
}

pub fn suite_families(primes: &[u64], samples: usize) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for &p in primes {
        for row in 0..family_table().len() {
            match verify_family_bad_reduction(row, p, samples) {
                Ok(r) => out.push(r),
                Err(e) => out.push(VerificationReport {
                    claim: format!("families/row={}/p={}", row, p),
                    params: serde_json::json!({"row": row, "p": p}),
                    verdict: Verdict::Fail,
                    method: Method::Sampled,
                    witness: Some(serde_json::json!(e.to_string())),
                    degree_bounds: None,
                    samples: None,
                }),
            }
        }
    }
    out
}

pub fn suite_diagrams() -> Vec<VerificationReport> {
    vec![verify_appendix_diagrams()]
}
