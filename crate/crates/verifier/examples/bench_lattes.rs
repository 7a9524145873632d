use std::time::Instant;
use verifier::{verify_lattes, LattesMode};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let p: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(13);
    let mode = if args.get(2).map(|s| s == "sampled").unwrap_or(false) {
        LattesMode::Sampled
    } else {
        LattesMode::Symbolic
    };
    let t0 = Instant::now();
    let r = verify_lattes(p, mode);
    println!("p={} verdict={:?} elapsed={:?}", p, r.verdict, t0.elapsed());
    println!("{}", r.to_json_line());
}
