//! Bounds and search tightness along one parameter axis.
//!
//! ```sh
//! cargo run --release --example parameter_sweep
//! ```

use bibound::{
    parameter_sweep, phi_preset, ClassKind, ClassSpec, MultiplierPsi, OperatorSpec, PhiPreset,
    SearchConfig, SearchTarget, SweepAxis,
};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let template = ClassSpec::new(
        ClassKind::B,
        Complex64::new(1.0, 0.0),
        0.0,
        OperatorSpec::identity(),
        phi_preset(PhiPreset::Koebe)?,
        MultiplierPsi::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))?,
    )?;
    let cfg = SearchConfig::new(4_000, 4, 1, SearchTarget::A2);

    println!("sweep over lambda (B family, Koebe target, identity operator)");
    println!("==============================================================");
    println!("{:>8} {:>12} {:>12} {:>12} {:>8}", "lambda", "|a2| bound", "|a3| bound", "best |a2|", "ratio");
    for point in parameter_sweep(&template, SweepAxis::Lambda, &[0.0, 0.25, 0.5, 0.75, 1.0], &cfg)? {
        println!(
            "{:>8.2} {:>12.6} {:>12.6} {:>12.6} {:>8.5}",
            point.value,
            point.bound.a2_bound.unwrap(),
            point.bound.a3_bound.unwrap(),
            point.tightness.best_value,
            point.tightness.ratio
        );
    }
    println!("(lambda = 0 and lambda = 1 rows equal the printed specializations)");

    println!("\nsweep over the strongly-starlike exponent alpha");
    println!("================================================");
    println!("{:>8} {:>10} {:>10} {:>12} {:>12}", "alpha", "B1", "B2", "|a2| bound", "|a3| bound");
    for point in parameter_sweep(&template, SweepAxis::Alpha, &[0.25, 0.5, 0.75, 1.0], &cfg)? {
        let b1 = 2.0 * point.value;
        let b2 = 2.0 * point.value * point.value;
        println!(
            "{:>8.2} {:>10.4} {:>10.4} {:>12.6} {:>12.6}",
            point.value,
            b1,
            b2,
            point.bound.a2_bound.unwrap(),
            point.bound.a3_bound.unwrap()
        );
    }
    println!("(the |a2| bound grows monotonically with alpha)");

    println!("\nsweep over the operator exponent mu (b = 1)");
    println!("===========================================");
    let template = ClassSpec::new(
        ClassKind::B,
        Complex64::new(1.0, 0.0),
        0.0,
        OperatorSpec::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0))?,
        phi_preset(PhiPreset::Koebe)?,
        MultiplierPsi::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))?,
    )?;
    println!("{:>8} {:>10} {:>10} {:>12} {:>12}", "mu", "Theta_2", "Theta_3", "|a2| bound", "|a3| bound");
    for point in parameter_sweep(&template, SweepAxis::MuReal, &[0.0, 0.5, 1.0, 2.0], &cfg)? {
        println!(
            "{:>8.2} {:>10.6} {:>10.6} {:>12.6} {:>12.6}",
            point.value,
            point.bound.theta2,
            point.bound.theta3,
            point.bound.a2_bound.unwrap(),
            point.bound.a3_bound.unwrap()
        );
    }
    println!("(mu = 0 is the identity operator: Theta_k = 1 recovers the plain corollary)");
    Ok(())
}
