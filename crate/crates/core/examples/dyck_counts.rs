//! Dyck words whose descents all have even length, counted exactly.

use acyclic_color::dyck::{growth_ratio, is_partial_dyck_even, parse_bits, DyckCountTable};

fn main() {
    let t_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(40);
    let table = DyckCountTable::build(t_max);
    println!("{:>4} {:>30} {:>9}", "t", "words of length 2t", "ratio");
    for t in (2..=t_max).step_by(2) {
        let count = table.dyck(t);
        println!("{t:>4} {count:>30} {:>9.6}", growth_ratio(count, t));
    }
    println!("limit sqrt(3 / (2 pi)) = {:.6}", (3.0 / (2.0 * std::f64::consts::PI)).sqrt());

    println!("\npartial words with t = 6 zeros and 6 - r ones:");
    for r in 0..=6 {
        println!("  r={r}: {}", table.partial(6, r).unwrap());
    }
    for w in ["0011", "000111", "0110", "00110011"] {
        println!("{w}: {}", is_partial_dyck_even(&parse_bits(w).unwrap()));
    }
}
