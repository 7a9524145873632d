//! Orbit structure of phi on P^1(F_q): the full functional graph, periodic
//! points with exact periods, and per-point preperiods by Brent's algorithm.

use crate::build::SelfMap;
use crate::{FlowError, FIELD_CAP};
use ff_core::{Embedding, ExtField, FiniteField};
use poly_rat::ProjPoint;

/// Node indices are integer encodings; infinity is the extra node q.
#[derive(Debug, Clone)]
pub struct OrbitGraph {
    pub field_desc: String,
    pub lambda_code: u64,
    pub p: u64,
    pub q: u64,
    /// successor[v] for v = 0..=q (q stands for infinity).
    pub successor: Vec<u32>,
    /// Cycles rotated to start at their minimal node, sorted by
    /// (length, start node).
    pub cycles: Vec<Vec<u32>>,
    /// Preperiod (tail length) per node; zero exactly on cycle nodes.
    pub tails: Vec<u32>,
}

impl OrbitGraph {
    pub fn node_count(&self) -> u64 {
        self.q + 1
    }

    pub fn is_on_cycle(&self, v: u32) -> bool {
        self.tails[v as usize] == 0
    }

    /// Nodes mapping to v, in increasing order.
    pub fn predecessors(&self, v: u32) -> Vec<u32> {
        (0..self.successor.len() as u32)
            .filter(|&u| self.successor[u as usize] == v)
            .collect()
    }
}

fn encode_proj<F: FiniteField>(field: &F, z: &ProjPoint<F::Elem>) -> u32 {
    match z {
        ProjPoint::Infinity => field.order() as u32,
        ProjPoint::Finite(v) => field.encode(v) as u32,
    }
}

impl<F: FiniteField> SelfMap<F> {
    fn decode_proj(&self, v: u32) -> ProjPoint<F::Elem> {
        if v as u64 == self.field.order() {
            ProjPoint::Infinity
        } else {
            ProjPoint::Finite(self.field.decode(v as u64))
        }
    }

    /// The full functional graph on the q + 1 points of P^1(F_q).
    pub fn orbit_graph(&self, field_desc: &str) -> Result<OrbitGraph, FlowError> {
        let q = self.field.order();
        if q > FIELD_CAP {
            return Err(FlowError::FieldTooLarge(q));
        }
        let n = (q + 1) as usize;
        let mut successor = vec![0u32; n];
        for v in 0..n as u32 {
            let z = self.decode_proj(v);
            successor[v as usize] = encode_proj(&self.field, &self.apply(&z));
        }
        // cycle decomposition: colors 0 = new, 1 = on current walk, 2 = done
        let mut color = vec![0u8; n];
        let mut on_cycle = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n as u32 {
            if color[start as usize] != 0 {
                continue;
            }
            let mut walk = Vec::new();
            let mut v = start;
            while color[v as usize] == 0 {
                color[v as usize] = 1;
                walk.push(v);
                v = successor[v as usize];
            }
            if color[v as usize] == 1 {
                // v is on the current walk: everything from v on is a cycle
                let pos = walk.iter().position(|&u| u == v).unwrap();
                let cycle: Vec<u32> = walk[pos..].to_vec();
                for &u in &cycle {
                    on_cycle[u as usize] = true;
                }
                cycles.push(cycle);
            }
            for &u in &walk {
                color[u as usize] = 2;
            }
        }
        // canonical cycle form: rotate to the minimal node, sort
        for c in cycles.iter_mut() {
            let min_pos = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
            c.rotate_left(min_pos);
        }
        cycles.sort_by_key(|c| (c.len(), c[0]));
        // tails by backfilled walks to the nearest cycle
        let mut tails = vec![u32::MAX; n];
        for (v, t) in tails.iter_mut().enumerate() {
            if on_cycle[v] {
                *t = 0;
            }
        }
        for start in 0..n as u32 {
            if tails[start as usize] != u32::MAX {
                continue;
            }
            let mut path = Vec::new();
            let mut v = start;
            while tails[v as usize] == u32::MAX {
                path.push(v);
                v = successor[v as usize];
            }
            let mut depth = tails[v as usize];
            for &u in path.iter().rev() {
                depth += 1;
                tails[u as usize] = depth;
            }
        }
        Ok(OrbitGraph {
            field_desc: field_desc.to_string(),
            lambda_code: self.field.encode(&self.lambda),
            p: self.p,
            q,
            successor,
            cycles,
            tails,
        })
    }

    /// All f-periodic points of P^1(F_q) with their minimal periods
    /// (which divide f).
    pub fn periodic_points(&self, f: u64) -> Result<Vec<PeriodicPoint<F::Elem>>, FlowError> {
        let q = self.field.order();
        if q > FIELD_CAP {
            return Err(FlowError::FieldTooLarge(q));
        }
        let mut out = Vec::new();
        for v in 0..=q {
            let z = self.decode_proj(v as u32);
            let mut orbit = Vec::with_capacity(f as usize);
            let mut cur = z.clone();
            for _ in 0..f {
                cur = self.apply(&cur);
                orbit.push(cur.clone());
            }
            if orbit[f as usize - 1] != z {
                continue;
            }
            let period = (1..=f)
                .find(|d| f % d == 0 && orbit[*d as usize - 1] == z)
                .unwrap();
            out.push(PeriodicPoint { point: z, minimal_period: period });
        }
        Ok(out)
    }

    /// Minimal (tail, cycle) with phi^{tail + cycle}(z) = phi^{tail}(z), by
    /// Brent's cycle-finding algorithm.
    pub fn preperiod(&self, z: &ProjPoint<F::Elem>) -> Result<(u64, u64), FlowError> {
        let q = self.field.order();
        if q > FIELD_CAP {
            return Err(FlowError::FieldTooLarge(q));
        }
        let mut power: u64 = 1;
        let mut lam: u64 = 1;
        let mut tortoise = z.clone();
        let mut hare = self.apply(z);
        while tortoise != hare {
            if power == lam {
                tortoise = hare.clone();
                power *= 2;
                lam = 0;
            }
            hare = self.apply(&hare);
            lam += 1;
        }
        let mut mu: u64 = 0;
        tortoise = z.clone();
        hare = z.clone();
        for _ in 0..lam {
            hare = self.apply(&hare);
        }
        while tortoise != hare {
            tortoise = self.apply(&tortoise);
            hare = self.apply(&hare);
            mu += 1;
        }
        Ok((mu, lam))
    }
}

/// An f-periodic point with its exact minimal period.
#[derive(Debug, Clone)]
pub struct PeriodicPoint<E> {
    pub point: ProjPoint<E>,
    pub minimal_period: u64,
}

/// Builds the degree-s extension of the field underlying `base` (an
/// extension of F_p of degree n, presented by `base_modulus`), together with
/// the image of lambda under a fixed embedding. Degree n*s uses the standard
/// modulus, so repeated runs agree.
pub fn extend_with_lambda(
    p: u64,
    base: &ExtField,
    lambda: &[u64],
    s: u32,
) -> Result<(ExtField, Vec<u64>), FlowError> {
    if s == 1 {
        return Ok((base.clone(), lambda.to_vec()));
    }
    let n = base.ext_degree();
    let d = n * s;
    let modulus = ff_core::standard_modulus(p, d).map_err(|_| FlowError::BadPrime(p))?;
    let big = ExtField::new(p, modulus).map_err(|_| FlowError::BadPrime(p))?;
    let emb = Embedding::new(base, &big).ok_or(FlowError::Degenerate)?;
    let image = emb.apply(&lambda.to_vec());
    Ok((big, image))
}
