//! The truncated-series substrate: products, composition, compositional
//! inversion, and fractional powers.
//!
//! ```sh
//! cargo run --example series_algebra
//! ```

use bibound::series::{ComplexSeries, NormalizedSeries};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("Truncated complex power series (order 10 by default)");
    println!("====================================================\n");

    // the compositional inverse of z/(1-z) = z + z^2 + ... is w/(1+w)
    let tail = [c(1.0, 0.0); 9];
    let f = NormalizedSeries::from_tail(10, &tail);
    let g = f.invert();
    println!("f = z + z^2 + ... + z^10 (geometric)");
    let coeffs: Vec<String> = (1..=5).map(|k| format!("{:+.0} w^{k}", g.coeff(k).re)).collect();
    println!("f^(-1) = {} ...  (alternating, i.e. w/(1+w))", coeffs.join(" "));

    // the inverse coefficients in closed form
    let f = NormalizedSeries::from_tail(10, &[c(0.31, -0.4), c(-0.2, 0.11), c(0.05, 0.6)]);
    let g = f.invert();
    let (a2, a3, a4) = (f.coeff(2), f.coeff(3), f.coeff(4));
    println!("\nclosed forms of the inverse coefficients:");
    println!("  b2 = -a2               : {:.12}  vs  {:.12}", g.coeff(2), -a2);
    println!("  b3 = 2a2^2 - a3        : {:.12}  vs  {:.12}", g.coeff(3), 2.0 * a2 * a2 - a3);
    println!(
        "  b4 = -(5a2^3 - 5a2a3 + a4): {:.12}  vs  {:.12}",
        g.coeff(4),
        -(5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4)
    );
    let round_trip = f.series().compose(g.series())?;
    println!(
        "  f(f^(-1)(w)) = w to order 10: max coeff error {:.2e}",
        round_trip.max_abs_diff(&ComplexSeries::identity(10))
    );

    // fractional powers of f/z via formal log/exp
    let f = NormalizedSeries::from_tail(6, &[c(1.0, 0.0)]);
    println!("\n(f/z)^t for f = z + z^2:");
    for t in [0.5, 2.0, -1.0] {
        let p = f.fractional_power(c(t, 0.0));
        let terms: Vec<String> = (0..=3).map(|k| format!("{:+.4} z^{k}", p.coeff(k).re)).collect();
        println!("  t = {t:>4}: {}", terms.join(" "));
    }
    println!("  (t = 2 recovers the binomial (1+z)^2 = 1 + 2z + z^2)");

    // Hadamard products pair coefficients by index and demand equal orders
    let a = ComplexSeries::from_reals(&[0.0, 1.0, 2.0])?;
    let b = ComplexSeries::from_reals(&[0.0, 1.0, 3.0])?;
    println!("\n(z + 2z^2) * (z + 3z^2) under the Hadamard product:");
    let h = a.hadamard(&b)?;
    println!("  = {:.0} z + {:.0} z^2", h.coeff(1).re, h.coeff(2).re);
    let short = ComplexSeries::from_reals(&[0.0, 1.0])?;
    println!("  order mismatch: {:?}", a.hadamard(&short).err());
    Ok(())
}
