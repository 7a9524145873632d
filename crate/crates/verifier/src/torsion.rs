//! Periodicity vs torsion: phi^f(z) = z iff [p^f]P = +-P for the lifts P
//! of z, checked exhaustively over P^1(F_{q^s}).

use crate::report::{Method, Verdict, VerificationReport};
use ff_core::{ExtField, FiniteField};
use hdf_selfmap::{build_selfmap, extend_with_lambda};
use legendre::LegendreCurve;
use poly_rat::ProjPoint;
use serde_json::json;

/// The torsion side [p^f]P = +-P is equivalent to x([p^f]P) = x(P), which
/// the twisted ladder computes without leaving F_{q^s}.
pub fn verify_periodic_torsion(
    p: u64,
    base: &ExtField,
    lambda: &[u64],
    f: u64,
    s: u32,
) -> VerificationReport {
    let claim = format!(
        "torsion/p={}/q={}/f={}/s={}",
        p,
        base.order(),
        f,
        s
    );
    let params = json!({
        "p": p, "f": f, "s": s,
        "base_order": base.order(),
        "lambda": base.encode(&lambda.to_vec()),
    });
    let fail = |w: serde_json::Value| VerificationReport {
        claim: claim.clone(),
        params: params.clone(),
        verdict: Verdict::Fail,
        method: Method::Symbolic,
        witness: Some(w),
        degree_bounds: None,
        samples: None,
    };
    let (big, lam) = match extend_with_lambda(p, base, lambda, s) {
        Ok(t) => t,
        Err(e) => return fail(json!(e.to_string())),
    };
    let map = match build_selfmap(p, &big, &lam) {
        Ok(m) => m,
        Err(e) => return fail(json!(e.to_string())),
    };
    let curve = match LegendreCurve::new(big.clone(), lam) {
        Ok(c) => c,
        Err(e) => return fail(json!(e.to_string())),
    };
    let mult = p.pow(f as u32);
    let points = big.order() + 1;
    for code in 0..=big.order() {
        let z = if code == big.order() {
            ProjPoint::Infinity
        } else {
            ProjPoint::Finite(big.decode(code))
        };
        let periodic = map.iterate(&z, f) == z;
        let torsion = curve.x_after_mul(mult, &z) == z;
        if periodic != torsion {
            return fail(json!({
                "z": if code == big.order() { json!("inf") } else { json!(code) },
                "periodic": periodic,
                "torsion": torsion,
            }));
        }
    }
    VerificationReport {
        claim,
        params,
        verdict: Verdict::Pass,
        method: Method::Symbolic,
        witness: None,
        degree_bounds: None,
        samples: Some(json!({"points": points})),
    }
}
