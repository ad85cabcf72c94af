//! The coefficient-multiplier operator and its named specializations.
//!
//! ```sh
//! cargo run --example operator_specializations
//! ```

use bibound::{apply_operator, OperatorSpec, OperatorVariant};
use bibound::series::NormalizedSeries;
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("Theta_k = |((1+b)/(k+b))^mu| for the named specializations");
    println!("===========================================================\n");

    let identity = OperatorSpec::identity();
    let libera = OperatorSpec::libera_bernardi(1.0)?;
    let jks = OperatorSpec::jung_kim_srivastava(2.0)?;

    println!(
        "{:<30} {:>9} {:>9} {:>9} {:>9}",
        "operator", "Theta_2", "Theta_3", "Theta_4", "Theta_5"
    );
    for (name, spec) in [
        ("identity (mu = 0)", &identity),
        ("libera-bernardi (nu = 1)", &libera),
        ("jung-kim-srivastava (s = 2)", &jks),
    ] {
        let t = spec.theta_sequence(5);
        println!(
            "{:<30} {:>9.6} {:>9.6} {:>9.6} {:>9.6}",
            name,
            t.get(2),
            t.get(3),
            t.get(4),
            t.get(5)
        );
    }
    println!("\nlibera-bernardi multiplies a_k by (nu+1)/(k+nu); with nu = 1 that is 2/(k+1)");
    println!("jung-kim-srivastava multiplies a_k by (2/(k+1))^sigma\n");

    // apply to a concrete normalized series
    let f = NormalizedSeries::from_tail(5, &[c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
    let lf = apply_operator(&libera, &f, OperatorVariant::Modulus);
    let jf = apply_operator(&jks, &f, OperatorVariant::Modulus);
    println!("f  = z + z^2 + z^3 + z^4");
    print_series("Lf", &lf);
    print_series("Jf", &jf);

    // the modulus and convolution variants agree whenever the ratio powers
    // are positive reals (real mu, real b > -1)
    let spec = OperatorSpec::new(c(1.3, 0.0), c(0.9, 0.0))?;
    let a = apply_operator(&spec, &f, OperatorVariant::Modulus);
    let b = apply_operator(&spec, &f, OperatorVariant::Complex);
    println!(
        "\nmodulus vs convolution variant, mu = 1.3, b = 0.9: max coeff diff = {:.2e}",
        a.series().max_abs_diff(b.series())
    );

    // for complex mu they differ in phase but share coefficient moduli
    let spec = OperatorSpec::new(c(1.3, -0.8), c(0.9, 0.0))?;
    let a = apply_operator(&spec, &f, OperatorVariant::Modulus);
    let b = apply_operator(&spec, &f, OperatorVariant::Complex);
    println!("complex exponent mu = 1.3 - 0.8i:");
    for k in 2..=4 {
        println!(
            "  k = {k}: modulus-variant a_k = {:.6}, convolution-variant |a_k| = {:.6}",
            a.coeff(k).norm(),
            b.coeff(k).norm()
        );
    }
    Ok(())
}

fn print_series(name: &str, f: &NormalizedSeries) {
    let terms: Vec<String> = (1..=f.order())
        .filter(|&k| f.coeff(k).norm() > 1e-15)
        .map(|k| format!("{:.4} z^{k}", f.coeff(k).re))
        .collect();
    println!("{name} = {}", terms.join(" + "));
}
