//! Palette, list size and radices for a range of maximum degrees.

use acyclic_color::params::{bound_coefficient, make_params, Kappa, DEFAULT_KAPPA};
use acyclic_color::Mode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("coefficient at the default kappa: {:.6}", bound_coefficient(DEFAULT_KAPPA.as_f64()));
    println!("{:>4} {:>12} {:>5} {:>6} {:>5} {:>6} {:>10} {:>10}", "D", "kappa", "l", "d_max", "P", "floor", "f", "radix(2)");
    for delta in [1u64, 2, 3, 4, 5, 8, 10, 16, 32, 64, 100] {
        let kappa = Kappa::default_for(delta);
        let safe = make_params(delta, kappa, Mode::Safe)?;
        let tight = make_params(delta, kappa, Mode::Tight)?;
        println!(
            "{delta:>4} {:>12} {:>5} {:>6} {:>5} {:>6} {:>10.3} {:>10}",
            kappa.to_string(),
            safe.list_size,
            safe.d_max,
            safe.palette,
            tight.palette,
            safe.f_approx,
            safe.radix(2)
        );
    }
    if let Err(e) = make_params(2, DEFAULT_KAPPA, Mode::Safe) {
        println!("delta=2 with the default kappa: {e}");
    }
    Ok(())
}
