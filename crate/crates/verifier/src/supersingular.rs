//! Supersingular degeneration: at every Hasse root lambda the self-map
//! collapses to z -> z^{p^2} exactly.

use crate::report::{Method, Verdict, VerificationReport};
use ff_core::{ExtField, FiniteField};
use hdf_selfmap::build_selfmap;
use legendre::supersingular_lambdas;
use poly_rat::Polynomial;
use serde_json::json;

pub fn verify_supersingular_degeneration(p: u64) -> VerificationReport {
    let claim = format!("supersingular/p={}", p);
    let params = json!({"p": p, "field": format!("{}^2", p)});
    let fail = |w: serde_json::Value| VerificationReport {
        claim: claim.clone(),
        params: params.clone(),
        verdict: Verdict::Fail,
        method: Method::Symbolic,
        witness: Some(w),
        degree_bounds: None,
        samples: None,
    };
    // all Hasse roots live in F_{p^2}
    let modulus = match ff_core::standard_modulus(p, 2) {
        Ok(m) => m,
        Err(e) => return fail(json!(e.to_string())),
    };
    let fq = match ExtField::new(p, modulus) {
        Ok(f) => f,
        Err(e) => return fail(json!(e.to_string())),
    };
    let roots = match supersingular_lambdas(p, &fq) {
        Ok(r) => r,
        Err(e) => return fail(json!(e.to_string())),
    };
    if roots.is_empty() {
        return fail(json!("no Hasse roots found"));
    }
    let frob_square = Polynomial::x(fq.clone()).pow(p * p);
    for lam in &roots {
        let map = match build_selfmap(p, &fq, lam) {
            Ok(m) => m,
            Err(e) => return fail(json!(e.to_string())),
        };
        let ok = map.phi.is_polynomial() && map.phi.num() == &frob_square;
        if !ok {
            return fail(json!({"lambda": fq.encode(lam), "reason": "phi != z^{p^2}"}));
        }
    }
    VerificationReport {
        claim,
        params,
        verdict: Verdict::Pass,
        method: Method::Symbolic,
        witness: None,
        degree_bounds: None,
        samples: Some(json!({"hasse_roots": roots.len()})),
    }
}
