use verifier::{family_table, verify_family_bad_reduction};

fn main() {
    for p in [7u64, 11, 101] {
        for row in 0..family_table().len() {
            match verify_family_bad_reduction(row, p, 3) {
                Ok(r) => println!(
                    "p={} row={} order={} verdict={:?} {}",
                    p,
                    row,
                    family_table()[row].order,
                    r.verdict,
                    r.witness.map(|w| w.to_string()).unwrap_or_default()
                ),
                Err(e) => println!("p={} row={} ERROR {}", p, row, e),
            }
        }
        println!();
    }
}
